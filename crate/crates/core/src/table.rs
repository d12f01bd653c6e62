//! Operation tables over element indices.
//!
//! An `OpTable` is an n×n matrix whose entry at (a, b) is the index of
//! `a * b`. Every finite structure in this crate is backed by one or two
//! of these.

use std::fmt;

/// A binary operation on `{0, .., n-1}` stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    n: usize,
    data: Vec<u32>,
}

/// Why a raw table was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    NotSquare { rows: usize, cols: usize },
    EntryOutOfRange { row: usize, col: usize, value: usize },
    Empty,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::NotSquare { rows, cols } => {
                write!(f, "table is not square: {rows} rows but a row of width {cols}")
            }
            TableError::EntryOutOfRange { row, col, value } => {
                write!(f, "entry at ({row},{col}) is {value}, outside the element range")
            }
            TableError::Empty => write!(f, "table has no elements"),
        }
    }
}

impl OpTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let n = rows.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::NotSquare { rows: n, cols: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(TableError::EntryOutOfRange { row: i, col: j, value: v });
                }
                data.push(v as u32);
            }
        }
        Ok(OpTable { n, data })
    }

    /// Build from a closure; `f` must return values below `n`.
    pub fn build(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                debug_assert!(v < n);
                data.push(v as u32);
            }
        }
        OpTable { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.get(a, b)).collect())
            .collect()
    }

    /// First non-commuting pair, if any.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.get(a, b) != self.get(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// First non-associating triple, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.get(a, b);
                for c in 0..self.n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|a| self.get(a, a) == a)
    }

    /// Two-sided identity element, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|a| self.get(e, a) == a && self.get(a, e) == a))
    }
}

/// An operation table together with element labels. The building block for
/// semigroups, groups and the two halves of a semiring.
#[derive(Debug, Clone)]
pub struct FiniteMagma {
    pub labels: Vec<String>,
    pub table: OpTable,
}

impl FiniteMagma {
    pub fn new(labels: Vec<String>, table: OpTable) -> Self {
        assert_eq!(labels.len(), table.n());
        FiniteMagma { labels, table }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_and_out_of_range() {
        assert!(matches!(
            OpTable::from_rows(&[vec![0, 1], vec![1]]),
            Err(TableError::NotSquare { .. })
        ));
        assert!(matches!(
            OpTable::from_rows(&[vec![0, 2], vec![1, 0]]),
            Err(TableError::EntryOutOfRange { value: 2, .. })
        ));
    }

    #[test]
    fn z3_addition_laws() {
        let t = OpTable::build(3, |a, b| (a + b) % 3);
        assert!(t.is_associative());
        assert!(t.is_commutative());
        assert_eq!(t.identity(), Some(0));
        assert!(!t.is_idempotent());
    }

    #[test]
    fn associativity_witness_found() {
        // subtraction mod 3 is not associative
        let t = OpTable::build(3, |a, b| (3 + a - b) % 3);
        assert!(t.associativity_witness().is_some());
    }
}
