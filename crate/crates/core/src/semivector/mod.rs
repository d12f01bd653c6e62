//! Semivector spaces over semifields: finite table-backed spaces (lattices
//! over C2), exact-arithmetic tuple spaces over number tags, span and
//! independence machinery, basis enumeration with the unique-basis
//! dimension convention, and the Smarandache variants.

mod smar;
mod tuple;

pub use smar::*;
pub use tuple::*;

use std::collections::BTreeSet;

use crate::lattice::{chain, FiniteLattice};
use crate::structure::Structure;
use crate::table::OpTable;

/// A finite semivector space: a commutative vector monoid, a finite
/// semifield of scalars, and a scalar-action table.
#[derive(Debug, Clone)]
pub struct FiniteSpace {
    pub name: String,
    pub labels: Vec<String>,
    pub add: OpTable,
    pub zero: usize,
    pub scalars: Structure,
    /// action[s][v] = s·v
    pub action: Vec<Vec<usize>>,
}

impl FiniteSpace {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vadd(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    pub fn act(&self, s: usize, v: usize) -> usize {
        self.action[s][v]
    }

    /// Replay the semivector axioms exhaustively.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.n();
        if !self.scalars.flags().semifield {
            return Err("scalars are not a semifield".into());
        }
        if !self.add.is_commutative() {
            return Err("vector addition not commutative".into());
        }
        if !self.add.is_associative() {
            return Err("vector addition not associative".into());
        }
        if (0..n).any(|v| self.vadd(self.zero, v) != v) {
            return Err("zero vector is not an additive identity".into());
        }
        let sz = self.scalars.zero().expect("semifield has a zero");
        let so = self.scalars.one().expect("semifield has a one");
        if (0..n).any(|v| self.act(sz, v) != self.zero) {
            return Err("0·v ≠ 0".into());
        }
        if (0..n).any(|v| self.act(so, v) != v) {
            return Err("1·v ≠ v".into());
        }
        for a in 0..self.scalars.n() {
            for b in 0..self.scalars.n() {
                for v in 0..n {
                    if self.act(self.scalars.mul(a, b), v) != self.act(a, self.act(b, v)) {
                        return Err("(ab)·v ≠ a·(b·v)".into());
                    }
                    if self.act(self.scalars.add(a, b), v)
                        != self.vadd(self.act(a, v), self.act(b, v))
                    {
                        return Err("(a+b)·v ≠ a·v + b·v".into());
                    }
                }
            }
        }
        for a in 0..self.scalars.n() {
            for v in 0..n {
                for w in 0..n {
                    if self.act(a, self.vadd(v, w)) != self.vadd(self.act(a, v), self.act(a, w)) {
                        return Err("a·(v+w) ≠ a·v + a·w".into());
                    }
                }
            }
        }
        Ok(())
    }

    /// Closure of a vector set under addition and scalar action. The empty
    /// set spans {0}.
    pub fn span(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = gens.iter().copied().collect();
        set.insert(self.zero);
        loop {
            let mut next = set.clone();
            for &a in &set {
                for &b in &set {
                    next.insert(self.vadd(a, b));
                }
                for s in 0..self.scalars.n() {
                    next.insert(self.act(s, a));
                }
            }
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }

    /// Membership with an explicit coefficient combination, by exhaustive
    /// scan over scalar assignments (the zero vector is the empty
    /// combination).
    pub fn in_span(&self, gens: &[usize], v: usize) -> Option<Vec<usize>> {
        let k = gens.len();
        if v == self.zero {
            return Some(vec![self.scalars.zero().unwrap(); k]);
        }
        let m = self.scalars.n();
        let total = m.checked_pow(k as u32)?;
        for code in 0..total {
            let mut coeffs = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                coeffs.push(c % m);
                c /= m;
            }
            if self.combine(gens, &coeffs) == v {
                return Some(coeffs);
            }
        }
        None
    }

    pub fn combine(&self, gens: &[usize], coeffs: &[usize]) -> usize {
        let mut acc = self.zero;
        for (&g, &c) in gens.iter().zip(coeffs) {
            acc = self.vadd(acc, self.act(c, g));
        }
        acc
    }

    /// A set is dependent when some member lies in the span of the others;
    /// returns the offending index.
    pub fn dependence_witness(&self, set: &[usize]) -> Option<usize> {
        for i in 0..set.len() {
            let rest: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect();
            if self.in_span(&rest, set[i]).is_some() {
                return Some(i);
            }
        }
        None
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.dependence_witness(set).is_none()
    }

    /// All independent spanning sets up to `size_cap`, with a uniqueness
    /// flag. Exhaustive over subsets of the (finite) vector set.
    pub fn bases(&self, size_cap: usize) -> (Vec<Vec<usize>>, bool) {
        let n = self.n();
        assert!(n <= 16, "exhaustive basis search capped at 16 vectors");
        let full: BTreeSet<usize> = (0..n).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if set.len() > size_cap {
                continue;
            }
            if self.span(&set) == full && self.is_independent(&set) {
                out.push(set);
            }
        }
        let unique = out.len() == 1;
        (out, unique)
    }

    /// Dimension is defined only when the basis is unique.
    pub fn dimension(&self) -> Option<usize> {
        let (bases, unique) = self.bases(self.n());
        unique.then(|| bases[0].len())
    }

    /// All coefficient assignments over the scalar set reproducing v.
    pub fn representation_count(&self, basis: &[usize], v: usize) -> (usize, Vec<Vec<usize>>) {
        let k = basis.len();
        let m = self.scalars.n();
        let mut reps = Vec::new();
        let total = m.pow(k as u32);
        for code in 0..total {
            let mut coeffs = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                coeffs.push(c % m);
                c /= m;
            }
            if self.combine(basis, &coeffs) == v {
                reps.push(coeffs);
            }
        }
        (reps.len(), reps)
    }
}

/// Any finite lattice is a semivector space over C2: addition is join, the
/// scalar action sends 0 to bottom and 1 to the identity.
pub fn lattice_space(l: &FiniteLattice, name: &str) -> FiniteSpace {
    let scalars = Structure::from_lattice(&chain(2));
    let bottom = l.bottom();
    let n = l.n();
    let action = vec![
        vec![bottom; n],
        (0..n).collect(),
    ];
    let space = FiniteSpace {
        name: name.to_string(),
        labels: l.labels().to_vec(),
        add: l.join_table().clone(),
        zero: bottom,
        scalars,
        action,
    };
    space.validate().expect("lattices are semivector spaces over C2");
    space
}
