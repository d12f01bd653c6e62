//! Finite posets and Hasse diagrams.
//!
//! Input relations are taken in cover style: we transitively close whatever
//! pairs are given, then check antisymmetry. A cycle between distinct
//! elements is rejected.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    DuplicateLabel(String),
    /// Antisymmetry violated: both a ≤ b and b ≤ a for distinct a, b.
    CycleDetected(String, String),
    UnknownLabel(String),
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            PosetError::CycleDetected(a, b) => {
                write!(f, "cycle detected: {a:?} and {b:?} are mutually comparable")
            }
            PosetError::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
        }
    }
}

/// A reflexive, antisymmetric, transitive relation on a labelled ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// n×n adjacency, row-major: leq[a*n+b] ⇔ a ≤ b.
    leq: Vec<bool>,
}

/// Construct a poset from labels and any relation; the relation is
/// reflexively and transitively closed before the antisymmetry check.
pub fn poset_from_leq<S: AsRef<str>>(
    labels: &[S],
    leq_pairs: &[(usize, usize)],
) -> Result<FinitePoset, PosetError> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let mut seen = BTreeSet::new();
    for l in &labels {
        if !seen.insert(l.clone()) {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    let n = labels.len();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for &(a, b) in leq_pairs {
        assert!(a < n && b < n, "leq pair out of range");
        leq[a * n + b] = true;
    }
    // Warshall closure
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if leq[a * n + b] && leq[b * n + a] {
                return Err(PosetError::CycleDetected(labels[a].clone(), labels[b].clone()));
            }
        }
    }
    Ok(FinitePoset { labels, leq })
}

/// Convenience: build from labelled cover pairs.
pub fn poset_from_labelled_covers<S: AsRef<str>>(
    labels: &[S],
    covers: &[(&str, &str)],
) -> Result<FinitePoset, PosetError> {
    let owned: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let mut pairs = Vec::with_capacity(covers.len());
    for &(lo, hi) in covers {
        let a = owned
            .iter()
            .position(|l| l == lo)
            .ok_or_else(|| PosetError::UnknownLabel(lo.to_string()))?;
        let b = owned
            .iter()
            .position(|l| l == hi)
            .ok_or_else(|| PosetError::UnknownLabel(hi.to_string()))?;
        pairs.push((a, b));
    }
    poset_from_leq(&owned, &pairs)
}

impl FinitePoset {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n() + b]
    }

    /// Greatest lower bound of a pair, when it exists.
    pub fn inf(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.n())
            .filter(|&x| self.leq(x, a) && self.leq(x, b))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&x| self.leq(x, g)))
    }

    /// Least upper bound of a pair, when it exists.
    pub fn sup(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.n())
            .filter(|&x| self.leq(a, x) && self.leq(b, x))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&s| upper.iter().all(|&x| self.leq(s, x)))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| (0..self.n()).all(|y| y == x || !self.leq(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| (0..self.n()).all(|y| y == x || !self.leq(x, y)))
            .collect()
    }

    /// Cover pairs (a, b): a < b with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n)
                    .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_total_order(&self) -> bool {
        let n = self.n();
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }
}

/// The transitive reduction of a poset: nodes plus cover edges only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<String>,
    /// (lower, upper) index pairs, sorted.
    pub covers: Vec<(usize, usize)>,
}

pub fn hasse(p: &FinitePoset) -> HasseDiagram {
    HasseDiagram { nodes: p.labels.to_vec(), covers: p.covers() }
}

impl HasseDiagram {
    /// Rebuild the full order from the covers (used to check that reduction
    /// is idempotent).
    pub fn transitive_closure(&self) -> FinitePoset {
        poset_from_leq(&self.nodes, &self.covers).expect("covers of a poset close to a poset")
    }

    /// Deterministic DOT rendering: nodes in input order, one edge per cover
    /// sorted by (lower, upper) index, rankdir=BT.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (i, label) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{} [label=\"{}\"];\n", i, escape(label)));
        }
        for &(lo, hi) in &self.covers {
            s.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn cover_labels(&self) -> Vec<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.nodes[a].clone(), self.nodes[b].clone()))
            .collect()
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order_on_numbers() {
        // {1,2,3,4,7} under numeric order
        let labels = ["1", "2", "3", "4", "7"];
        let mut pairs = Vec::new();
        let vals = [1, 2, 3, 4, 7];
        for i in 0..5 {
            for j in 0..5 {
                if vals[i] <= vals[j] {
                    pairs.push((i, j));
                }
            }
        }
        let p = poset_from_leq(&labels, &pairs).unwrap();
        assert!(p.is_total_order());
    }

    #[test]
    fn one_point_poset() {
        let p = poset_from_leq(&["x"], &[]).unwrap();
        assert!(p.leq(0, 0));
        assert_eq!(p.covers(), vec![]);
    }

    #[test]
    fn antisymmetry_violation_rejected() {
        let err = poset_from_leq(&["a", "b"], &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, PosetError::CycleDetected(..)));
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = poset_from_leq(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, PosetError::DuplicateLabel("a".into()));
    }

    #[test]
    fn chain_reduction() {
        // chain 0 < b < a < 1
        let p = poset_from_labelled_covers(&["0", "b", "a", "1"], &[("0", "b"), ("b", "a"), ("a", "1")])
            .unwrap();
        let h = hasse(&p);
        assert_eq!(
            h.cover_labels(),
            vec![
                ("0".to_string(), "b".to_string()),
                ("b".to_string(), "a".to_string()),
                ("a".to_string(), "1".to_string())
            ]
        );
    }

    #[test]
    fn square_reduction() {
        let p = poset_from_labelled_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        let h = hasse(&p);
        assert_eq!(h.covers, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn reduction_idempotent() {
        let p = poset_from_labelled_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1"), ("0", "1")],
        )
        .unwrap();
        let h = hasse(&p);
        assert_eq!(hasse(&h.transitive_closure()), h);
    }
}
