//! Table-backed algebraic structures with two operations.
//!
//! A `Structure` holds validated add/mul tables plus flags that are always
//! recomputed from the tables, never trusted from input. Addition must be
//! commutative and associative and multiplication associative with both
//! distributive laws; an additive identity is recorded when present.
//! (The ∞-adjunction construction produces a semiring-like structure whose
//! addition has no identity, so `zero` is optional and the `semiring` flag
//! demands it.)

use std::fmt;

use crate::lattice::FiniteLattice;
use crate::table::OpTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    AddNotCommutative { a: usize, b: usize },
    AddNotAssociative { a: usize, b: usize, c: usize },
    MulNotAssociative { a: usize, b: usize, c: usize },
    /// witness triple (a, b, c) with a•(b+c) ≠ a•b + a•c (left) or
    /// (a+b)•c ≠ a•c + b•c (right)
    NotDistributive { left: bool, a: usize, b: usize, c: usize },
    NoAdditiveIdentity,
    SizeMismatch,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::AddNotCommutative { a, b } => {
                write!(f, "addition not commutative at ({a},{b})")
            }
            AxiomViolation::AddNotAssociative { a, b, c } => {
                write!(f, "addition not associative at ({a},{b},{c})")
            }
            AxiomViolation::MulNotAssociative { a, b, c } => {
                write!(f, "multiplication not associative at ({a},{b},{c})")
            }
            AxiomViolation::NotDistributive { left, a, b, c } => {
                let side = if *left { "left" } else { "right" };
                write!(f, "{side} distributivity fails at ({a},{b},{c})")
            }
            AxiomViolation::NoAdditiveIdentity => write!(f, "addition has no identity element"),
            AxiomViolation::SizeMismatch => write!(f, "table sizes disagree"),
        }
    }
}

/// Kind flags, all derived from the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub commutative_add: bool,
    pub commutative_mul: bool,
    /// Full semiring axioms including a commutative additive monoid.
    pub semiring: bool,
    pub ring: bool,
    pub field: bool,
    pub semifield: bool,
    /// Both tables idempotent, commutative, absorbing: the structure is the
    /// (join, meet) pair of a lattice.
    pub lattice_derived: bool,
    /// a + b = 0 forces a = b = 0 (zero-sum-free).
    pub strict: bool,
    /// 0·x = x·0 = 0 for all x. Not required for validity.
    pub zero_absorbing: bool,
    pub has_zero: bool,
    pub has_one: bool,
    /// (S, +) is a group.
    pub group_add: bool,
}

#[derive(Debug, Clone)]
pub struct Structure {
    pub labels: Vec<String>,
    add: OpTable,
    mul: OpTable,
    zero: Option<usize>,
    one: Option<usize>,
    flags: Flags,
}

impl Structure {
    /// Validate raw tables: commutative associative addition, associative
    /// multiplication, both distributive laws. The additive identity is
    /// detected but not required here; `validate_semiring` also demands it.
    pub fn validate(
        labels: Vec<String>,
        add: OpTable,
        mul: OpTable,
    ) -> Result<Structure, AxiomViolation> {
        if labels.len() != add.n() || add.n() != mul.n() {
            return Err(AxiomViolation::SizeMismatch);
        }
        if let Some((a, b)) = add.commutativity_witness() {
            return Err(AxiomViolation::AddNotCommutative { a, b });
        }
        if let Some((a, b, c)) = add.associativity_witness() {
            return Err(AxiomViolation::AddNotAssociative { a, b, c });
        }
        if let Some((a, b, c)) = mul.associativity_witness() {
            return Err(AxiomViolation::MulNotAssociative { a, b, c });
        }
        let n = add.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul.get(a, add.get(b, c)) != add.get(mul.get(a, b), mul.get(a, c)) {
                        return Err(AxiomViolation::NotDistributive { left: true, a, b, c });
                    }
                    if mul.get(add.get(a, b), c) != add.get(mul.get(a, c), mul.get(b, c)) {
                        return Err(AxiomViolation::NotDistributive { left: false, a, b, c });
                    }
                }
            }
        }
        let zero = add.identity();
        let one = mul.identity();
        let mut s = Structure { labels, add, mul, zero, one, flags: Flags::default() };
        s.flags = s.compute_flags();
        Ok(s)
    }

    /// The full semiring gate: `validate` plus an additive identity.
    pub fn validate_semiring(
        labels: Vec<String>,
        add: OpTable,
        mul: OpTable,
    ) -> Result<Structure, AxiomViolation> {
        let s = Self::validate(labels, add, mul)?;
        if s.zero.is_none() {
            return Err(AxiomViolation::NoAdditiveIdentity);
        }
        Ok(s)
    }

    pub fn from_lattice(l: &FiniteLattice) -> Structure {
        Structure::validate_semiring(
            l.labels().to_vec(),
            l.join_table().clone(),
            l.meet_table().clone(),
        )
        .expect("a lattice with distributive tables validates; callers gate beforehand")
    }

    fn compute_flags(&self) -> Flags {
        let n = self.n();
        let commutative_add = true; // enforced by validation
        let commutative_mul = self.mul.is_commutative();
        let has_zero = self.zero.is_some();
        let has_one = self.one.is_some();
        let semiring = has_zero;
        let strict = match self.zero {
            Some(z) => {
                let mut ok = true;
                'outer: for a in 0..n {
                    for b in 0..n {
                        if a != z && b != z && self.add.get(a, b) == z {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
                ok
            }
            // with no zero, a + b = 0 never happens
            None => true,
        };
        let zero_absorbing = match self.zero {
            Some(z) => (0..n).all(|x| self.mul.get(z, x) == z && self.mul.get(x, z) == z),
            None => false,
        };
        let group_add = match self.zero {
            Some(z) => (0..n).all(|a| (0..n).any(|b| self.add.get(a, b) == z)),
            None => false,
        };
        let ring = semiring && group_add;
        let no_zero_divisors = match self.zero {
            Some(z) => {
                let mut ok = true;
                'zd: for a in 0..n {
                    for b in 0..n {
                        if a != z && b != z && self.mul.get(a, b) == z {
                            ok = false;
                            break 'zd;
                        }
                    }
                }
                ok
            }
            None => true,
        };
        let nonzero_mul_group = match (self.zero, self.one) {
            (Some(z), Some(o)) if o != z => (0..n)
                .filter(|&a| a != z)
                .all(|a| (0..n).any(|b| b != z && self.mul.get(a, b) == o)),
            _ => false,
        };
        let field = ring && commutative_mul && nonzero_mul_group && self.one != self.zero;
        let semifield = semiring
            && commutative_mul
            && has_one
            && self.one != self.zero
            && strict
            && no_zero_divisors;
        let lattice_derived = has_zero
            && self.add.is_idempotent()
            && self.mul.is_idempotent()
            && commutative_mul
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    self.mul.get(x, self.add.get(x, y)) == x
                        && self.add.get(x, self.mul.get(x, y)) == x
                })
            });
        Flags {
            commutative_add,
            commutative_mul,
            semiring,
            ring,
            field,
            semifield,
            lattice_derived,
            strict,
            zero_absorbing,
            has_zero,
            has_one,
            group_add,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// n-fold sum x + x + ... + x.
    pub fn scalar_add(&self, m: u64, x: usize) -> usize {
        assert!(m >= 1);
        let mut acc = x;
        for _ in 1..m {
            acc = self.add(acc, x);
        }
        acc
    }

    /// The order poset x ≤ y ⇔ x + y = y, meaningful for lattice-derived
    /// structures.
    pub fn derived_order(&self) -> Option<crate::poset::FinitePoset> {
        if !self.flags.lattice_derived {
            return None;
        }
        let n = self.n();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) == b {
                    pairs.push((a, b));
                }
            }
        }
        crate::poset::poset_from_leq(&self.labels, &pairs).ok()
    }
}

/// Characteristic of a structure: least m ≥ 1 with m·x = 0 for every x.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characteristic {
    /// Reserved for archetype structures such as Z⁰ and Q⁰.
    Zero,
    Finite(u64),
    /// No m works — typical of idempotent addition.
    Undefined,
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => write!(f, "0"),
            Characteristic::Finite(m) => write!(f, "{m}"),
            Characteristic::Undefined => write!(f, "undefined"),
        }
    }
}

/// Each additive orbit x, 2x, 3x, .. in a finite structure is eventually
/// periodic; m·x = 0 exactly on an arithmetic progression (possibly empty).
/// The characteristic is the least m common to all progressions, found by
/// exact progression merging.
pub fn characteristic(s: &Structure) -> Characteristic {
    let Some(z) = s.zero() else { return Characteristic::Undefined };
    // merged solution set as {first + k*period}, period 0 meaning "unknown yet"
    let mut merged: Option<(u64, u64)> = None;
    for x in 0..s.n() {
        let (first, period) = match orbit_zero_hits(s, x, z) {
            Some(fp) => fp,
            None => return Characteristic::Undefined,
        };
        merged = Some(match merged {
            None => (first, period),
            Some((f, p)) => match merge_progressions(f, p, first, period) {
                Some(m) => m,
                None => return Characteristic::Undefined,
            },
        });
    }
    match merged {
        Some((f, _)) => Characteristic::Finite(f),
        None => Characteristic::Undefined,
    }
}

/// For the orbit m ↦ m·x, the first m with m·x = 0 and the cycle length
/// after it (0 appears at most once per cycle).
fn orbit_zero_hits(s: &Structure, x: usize, z: usize) -> Option<(u64, u64)> {
    let mut seen = vec![0u64; s.n()];
    let mut cur = x;
    let mut m = 1u64;
    let mut first_zero = None;
    loop {
        if cur == z && first_zero.is_none() {
            first_zero = Some(m);
        }
        if seen[cur] != 0 {
            // cycle closed: cur first appeared at step seen[cur]
            let period = m - seen[cur];
            return first_zero.and_then(|f| {
                // 0 must lie within the cycle for the progression to repeat
                if f >= seen[cur] {
                    Some((f, period))
                } else {
                    // 0 only in the preperiod: single solution, period 0
                    Some((f, 0))
                }
            });
        }
        seen[cur] = m;
        cur = s.add(cur, x);
        m += 1;
    }
}

/// Least element common to {f1 + k*p1} and {f2 + k*p2} (k ≥ 0), as a merged
/// progression.
fn merge_progressions(f1: u64, p1: u64, f2: u64, p2: u64) -> Option<(u64, u64)> {
    match (p1, p2) {
        (0, 0) => (f1 == f2).then_some((f1, 0)),
        (0, p) => (f1 >= f2 && (f1 - f2) % p == 0).then_some((f1, 0)),
        (p, 0) => (f2 >= f1 && (f2 - f1) % p == 0).then_some((f2, 0)),
        (p1, p2) => {
            // CRT-style scan: step the larger-offset progression
            let step = lcm(p1, p2);
            let (mut m, hi) = (f1.max(f2), f1.max(f2) + step * 2 + f1 + f2);
            while m <= hi {
                if m >= f1 && (m - f1) % p1 == 0 && m >= f2 && (m - f2) % p2 == 0 {
                    return Some((m, step));
                }
                m += 1;
            }
            None
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Zero-sum-freeness; on failure the lexicographically smallest pair of
/// nonzero elements summing to zero.
pub fn strictness_witness(s: &Structure) -> Option<(usize, usize)> {
    let z = s.zero()?;
    for a in 0..s.n() {
        for b in 0..s.n() {
            if a != z && b != z && s.add(a, b) == z {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_strict(s: &Structure) -> bool {
    s.flags().strict
}

/// Exhaustive element classification.
#[derive(Debug, Clone, Default)]
pub struct ElementClasses {
    /// pairs (a, b) of nonzero elements with a•b = 0
    pub zero_divisor_pairs: Vec<(usize, usize)>,
    /// distinct nonzero a appearing in some zero-divisor pair
    pub zero_divisors: Vec<usize>,
    pub idempotents: Vec<usize>,
    /// x with xy = 1 for some y (right unit) or yx = 1 (left unit)
    pub one_sided_units: Vec<usize>,
    /// x with xy = yx = 1 for some y
    pub invertibles: Vec<usize>,
}

pub fn classify_elements(s: &Structure) -> ElementClasses {
    let n = s.n();
    let mut out = ElementClasses::default();
    out.idempotents = (0..n).filter(|&x| s.mul(x, x) == x).collect();
    if let Some(z) = s.zero() {
        for a in 0..n {
            for b in 0..n {
                if a != z && b != z && s.mul(a, b) == z {
                    out.zero_divisor_pairs.push((a, b));
                }
            }
        }
        let mut zd: Vec<usize> = out
            .zero_divisor_pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect();
        zd.sort_unstable();
        zd.dedup();
        out.zero_divisors = zd;
    }
    if let Some(o) = s.one() {
        for x in 0..n {
            let right = (0..n).any(|y| s.mul(x, y) == o);
            let left = (0..n).any(|y| s.mul(y, x) == o);
            if right || left {
                out.one_sided_units.push(x);
            }
            if (0..n).any(|y| s.mul(x, y) == o && s.mul(y, x) == o) {
                out.invertibles.push(x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chain_lattice, zmod_ring};
    use crate::fixtures;

    #[test]
    fn chain5_is_a_commutative_semiring() {
        let s = chain_lattice(5);
        let f = s.flags();
        assert!(f.semiring && f.commutative_mul && f.lattice_derived && f.strict);
        assert!(!f.ring);
    }

    #[test]
    fn pentagon_tables_fail_distributivity() {
        let l = fixtures::pentagon();
        let err = Structure::validate_semiring(
            l.labels().to_vec(),
            l.join_table().clone(),
            l.meet_table().clone(),
        )
        .unwrap_err();
        assert!(matches!(err, AxiomViolation::NotDistributive { .. }));
    }

    #[test]
    fn z28_is_a_commutative_ring() {
        let s = zmod_ring(28);
        let f = s.flags();
        assert!(f.semiring && f.ring && f.commutative_mul);
        assert!(!f.field); // 7·4 = 0 mod 28
        assert!(!f.strict);
    }

    #[test]
    fn characteristic_of_chains_is_undefined() {
        for n in 2..=8 {
            assert_eq!(characteristic(&chain_lattice(n)), Characteristic::Undefined);
        }
    }

    #[test]
    fn characteristic_of_prime_fields() {
        for p in [2u64, 3, 5, 7, 23] {
            let s = zmod_ring(p as usize);
            assert!(s.flags().field);
            assert_eq!(characteristic(&s), Characteristic::Finite(p));
        }
    }

    #[test]
    fn characteristic_of_z12() {
        assert_eq!(characteristic(&zmod_ring(12)), Characteristic::Finite(12));
    }

    #[test]
    fn strictness() {
        assert!(is_strict(&chain_lattice(4)));
        let z12 = zmod_ring(12);
        assert!(!is_strict(&z12));
        assert_eq!(strictness_witness(&z12), Some((1, 11)));
        // the spec's (5, 7) is also a witness
        assert_eq!(z12.add(5, 7), 0);
    }

    #[test]
    fn square_semiring_classification() {
        let s = Structure::from_lattice(&fixtures::square());
        let c = classify_elements(&s);
        let a = s.index_of("a").unwrap();
        let b = s.index_of("b").unwrap();
        assert!(c.zero_divisor_pairs.contains(&(a, b)));
        let mut zd = c.zero_divisors.clone();
        zd.sort_unstable();
        assert_eq!(zd, vec![a.min(b), a.max(b)]);
        // every element of a lattice-derived semiring is idempotent
        assert_eq!(c.idempotents.len(), s.n());
    }

    #[test]
    fn z12_classification() {
        let s = zmod_ring(12);
        let c = classify_elements(&s);
        assert!(c.zero_divisor_pairs.contains(&(6, 2)));
        assert_eq!(c.idempotents, vec![0, 1, 4, 9]);
        assert_eq!(c.invertibles, vec![1, 5, 7, 11]);
    }

    #[test]
    fn progression_merge_minimal() {
        assert_eq!(merge_progressions(2, 2, 3, 3), Some((6, 6)));
        assert_eq!(merge_progressions(1, 1, 5, 5), Some((5, 5)));
    }
}
