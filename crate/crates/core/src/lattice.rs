//! Finite lattices: meet/join tables computed from a poset by exhaustive
//! inf/sup, plus the predicate battery (modular, distributive, complemented,
//! Boolean) and the atom isomorphism for Boolean algebras.

use std::collections::BTreeSet;
use std::fmt;

use crate::poset::{hasse, poset_from_leq, FinitePoset, HasseDiagram};
use crate::table::OpTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Some pair has no greatest lower / least upper bound.
    NotALattice { pair: (String, String), missing: Bound },
    NotBoolean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Inf,
    Sup,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotALattice { pair, missing } => {
                let what = match missing {
                    Bound::Inf => "inf",
                    Bound::Sup => "sup",
                };
                write!(f, "not a lattice: pair ({}, {}) has no {what}", pair.0, pair.1)
            }
            LatticeError::NotBoolean => write!(f, "lattice is not a Boolean algebra"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: OpTable,
    join: OpTable,
    bottom: usize,
    top: usize,
}

/// Compute meet/join tables for a poset by exhaustive inf/sup over all
/// pairs. Fails on the first pair missing a bound.
pub fn as_lattice(p: &FinitePoset) -> Result<FiniteLattice, LatticeError> {
    let n = p.n();
    assert!(n > 0);
    let mut meet = vec![0usize; n * n];
    let mut join = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            match p.inf(a, b) {
                Some(m) => meet[a * n + b] = m,
                None => {
                    return Err(LatticeError::NotALattice {
                        pair: (p.label(a).into(), p.label(b).into()),
                        missing: Bound::Inf,
                    })
                }
            }
            match p.sup(a, b) {
                Some(s) => join[a * n + b] = s,
                None => {
                    return Err(LatticeError::NotALattice {
                        pair: (p.label(a).into(), p.label(b).into()),
                        missing: Bound::Sup,
                    })
                }
            }
        }
    }
    let meet = OpTable::build(n, |a, b| meet[a * n + b]);
    let join = OpTable::build(n, |a, b| join[a * n + b]);
    let bottom = (0..n)
        .find(|&x| (0..n).all(|y| p.leq(x, y)))
        .expect("finite lattice has a bottom");
    let top = (0..n)
        .find(|&x| (0..n).all(|y| p.leq(y, x)))
        .expect("finite lattice has a top");
    Ok(FiniteLattice { poset: p.clone(), meet, join, bottom, top })
}

impl FiniteLattice {
    pub fn n(&self) -> usize {
        self.poset.n()
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.labels().iter().position(|l| l == label)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    pub fn meet_table(&self) -> &OpTable {
        &self.meet
    }

    pub fn join_table(&self) -> &OpTable {
        &self.join
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn hasse(&self) -> HasseDiagram {
        hasse(&self.poset)
    }

    pub fn is_chain(&self) -> bool {
        self.poset.is_total_order()
    }

    /// Distributivity x∧(y∨z) = (x∧y)∨(x∧z) over all triples; on failure,
    /// the lexicographically smallest violating triple in element order.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Modularity x ≤ z ⇒ x∨(y∧z) = (x∨y)∧z; witness is the smallest
    /// violating (x, y, z) with x ≤ z.
    pub fn modularity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !self.leq(x, z) {
                        continue;
                    }
                    let lhs = self.join(x, self.meet(y, z));
                    let rhs = self.meet(self.join(x, y), z);
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    /// All complements of x: the y with x∧y = 0 and x∨y = 1.
    pub fn complements(&self, x: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&y| self.meet(x, y) == self.bottom && self.join(x, y) == self.top)
            .collect()
    }

    pub fn is_complemented(&self) -> bool {
        (0..self.n()).all(|x| !self.complements(x).is_empty())
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.is_complemented()
    }

    /// Elements covering bottom.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&a| {
                a != self.bottom
                    && (0..self.n()).all(|b| {
                        !(b != self.bottom && b != a && self.leq(b, a))
                    })
            })
            .collect()
    }

    /// The L1..L4 lattice laws, table-wise. `as_lattice` output always
    /// satisfies them; exposed so ingested meet/join tables can be gated.
    pub fn lattice_laws_hold(&self) -> bool {
        let n = self.n();
        if !self.meet.is_commutative() || !self.join.is_commutative() {
            return false;
        }
        if !self.meet.is_associative() || !self.join.is_associative() {
            return false;
        }
        if !self.meet.is_idempotent() || !self.join.is_idempotent() {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                // absorption
                if self.meet(x, self.join(x, y)) != x || self.join(x, self.meet(x, y)) != x {
                    return false;
                }
            }
        }
        true
    }

    /// For a Boolean algebra, the explicit isomorphism onto the power set of
    /// its atoms: each element maps to the set of atoms below it. Verified by
    /// table equality before returning.
    pub fn boolean_atom_iso(&self) -> Result<Vec<BTreeSet<usize>>, LatticeError> {
        if !self.is_boolean() {
            return Err(LatticeError::NotBoolean);
        }
        let atoms = self.atoms();
        let psi: Vec<BTreeSet<usize>> = (0..self.n())
            .map(|x| atoms.iter().copied().filter(|&a| self.leq(a, x)).collect())
            .collect();
        // injectivity plus table equality: ψ(x∧y) = ψ(x)∩ψ(y), ψ(x∨y) = ψ(x)∪ψ(y)
        for x in 0..self.n() {
            for y in 0..self.n() {
                if x != y && psi[x] == psi[y] {
                    return Err(LatticeError::NotBoolean);
                }
                let inter: BTreeSet<usize> = psi[x].intersection(&psi[y]).copied().collect();
                let uni: BTreeSet<usize> = psi[x].union(&psi[y]).copied().collect();
                if psi[self.meet(x, y)] != inter || psi[self.join(x, y)] != uni {
                    return Err(LatticeError::NotBoolean);
                }
            }
        }
        Ok(psi)
    }

    /// Same isomorphism with atom labels substituted.
    pub fn boolean_atom_iso_labelled(&self) -> Result<Vec<(String, BTreeSet<String>)>, LatticeError> {
        let psi = self.boolean_atom_iso()?;
        Ok((0..self.n())
            .map(|x| {
                (
                    self.label(x).to_string(),
                    psi[x].iter().map(|&a| self.label(a).to_string()).collect(),
                )
            })
            .collect())
    }
}

/// Chain lattice on n elements, labelled "0", "a1", .., "a(n-2)", "1"
/// bottom-to-top. The single element of C_1 is labelled "0".
pub fn chain(n: usize) -> FiniteLattice {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else {
                format!("a{i}")
            }
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            pairs.push((i, j));
        }
    }
    let p = poset_from_leq(&labels, &pairs).expect("chain is a poset");
    as_lattice(&p).expect("chain is a lattice")
}

/// Boolean lattice of all subsets of a k-element set ordered by inclusion.
/// Element i is the subset with characteristic bits of i; labels are set
/// notation over x1..xk.
pub fn boolean(k: usize) -> FiniteLattice {
    assert!(k <= 6, "boolean lattice capped at 2^6 elements");
    let n = 1usize << k;
    let labels: Vec<String> = (0..n).map(|m| subset_label(m, k)).collect();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a & b == a {
                pairs.push((a, b));
            }
        }
    }
    let p = poset_from_leq(&labels, &pairs).expect("power set is a poset");
    as_lattice(&p).expect("power set is a lattice")
}

fn subset_label(mask: usize, k: usize) -> String {
    let mut parts = Vec::new();
    for i in 0..k {
        if mask >> i & 1 == 1 {
            parts.push(format!("x{}", i + 1));
        }
    }
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chain_meet_join_are_min_max() {
        let c = chain(3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(c.meet(a, b), a.min(b));
                assert_eq!(c.join(a, b), a.max(b));
            }
        }
        assert!(c.lattice_laws_hold());
    }

    #[test]
    fn boolean_16_elements() {
        let b = boolean(4);
        assert_eq!(b.n(), 16);
        assert!(b.is_boolean());
        assert_eq!(b.atoms().len(), 4);
    }

    #[test]
    fn hexagon_is_a_lattice_by_exhaustive_bounds() {
        // 6-element poset: two 2-chains glued at 0 and 1; every pair has a
        // unique inf and sup even though it is far from modular.
        let l = fixtures::hexagon();
        assert_eq!(l.n(), 6);
        assert!(!l.is_modular());
    }

    #[test]
    fn pentagon_witnesses() {
        let l = fixtures::pentagon();
        assert!(!l.is_distributive());
        assert!(!l.is_modular());
        // b has exactly the two complements a and c
        let b = l.index_of("b").unwrap();
        let comps: Vec<&str> = l.complements(b).into_iter().map(|i| l.label(i)).collect();
        assert_eq!(comps, vec!["a", "c"]);
    }

    #[test]
    fn diamond_modular_not_distributive() {
        let l = fixtures::diamond();
        assert!(!l.is_distributive());
        assert!(l.is_modular());
    }

    #[test]
    fn chains_distributive() {
        for n in 2..=8 {
            let c = chain(n);
            assert!(c.is_distributive(), "C_{n} must be distributive");
            assert!(c.is_modular());
        }
    }

    #[test]
    fn bottom_complement_is_top() {
        let l = fixtures::square();
        assert_eq!(l.complements(l.bottom()), vec![l.top()]);
    }

    #[test]
    fn distributive_complemented_unique_complements() {
        let b = boolean(3);
        for x in 0..b.n() {
            assert_eq!(b.complements(x).len(), 1);
        }
    }

    #[test]
    fn chain_not_boolean() {
        // middle element of C3 has no complement
        let c = chain(3);
        assert!(!c.is_boolean());
        assert!(c.complements(1).is_empty());
    }

    #[test]
    fn atoms_of_square_and_cube() {
        let sq = fixtures::square();
        let atom_labels: Vec<&str> = sq.atoms().into_iter().map(|i| sq.label(i)).collect();
        assert_eq!(atom_labels, vec!["a", "b"]);
        let b3 = boolean(3);
        assert_eq!(b3.atoms().len(), 3);
        let c = chain(5);
        assert_eq!(c.atoms().len(), 1);
    }

    #[test]
    fn square_atom_iso_matches_powerset_map() {
        let sq = fixtures::square();
        let iso = sq.boolean_atom_iso_labelled().unwrap();
        let find = |l: &str| iso.iter().find(|(x, _)| x == l).unwrap().1.clone();
        assert!(find("0").is_empty());
        assert_eq!(find("a"), BTreeSet::from(["a".to_string()]));
        assert_eq!(find("b"), BTreeSet::from(["b".to_string()]));
        assert_eq!(find("1"), BTreeSet::from(["a".to_string(), "b".to_string()]));
    }

    #[test]
    fn c2_iso_onto_singleton_powerset() {
        let c = chain(2);
        let iso = c.boolean_atom_iso().unwrap();
        assert!(iso[0].is_empty());
        assert_eq!(iso[1].len(), 1);
    }

    #[test]
    fn eight_element_boolean_iso() {
        let b = boolean(3);
        let iso = b.boolean_atom_iso().unwrap();
        // top maps to all three atoms
        assert_eq!(iso[b.top()].len(), 3);
        let c = chain(4);
        assert!(matches!(c.boolean_atom_iso(), Err(LatticeError::NotBoolean)));
        assert!(matches!(fixtures::diamond().boolean_atom_iso(), Err(LatticeError::NotBoolean)));
    }

    #[test]
    fn order_and_tables_agree() {
        for l in [fixtures::pentagon(), fixtures::diamond(), chain(5), boolean(3)] {
            for a in 0..l.n() {
                for b in 0..l.n() {
                    assert_eq!(l.leq(a, b), l.meet(a, b) == a);
                    assert_eq!(l.leq(a, b), l.join(a, b) == b);
                }
            }
        }
    }
}
