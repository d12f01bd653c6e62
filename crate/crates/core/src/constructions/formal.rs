//! Formal sums of carrier elements with coefficients from a finite
//! structure: group semirings, semigroup semirings and group rings, plus the
//! atom factorization of cyclic-group elements over Boolean coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::structure::{characteristic, Characteristic, Structure};
use crate::table::{FiniteMagma, OpTable};

/// A finite formal sum: carrier index → coefficient index, zero
/// coefficients omitted. Equality is map equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSum {
    coeffs: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormalSumError {
    /// group/semigroup semirings demand a strict coefficient semiring
    NotStrict,
    NoUnit,
    NoZero,
    /// group rings demand ring coefficients
    NotARing,
    CarrierNotAssociative,
    NotBoolean,
    TooFewAtoms,
    DegenerateExponents,
}

impl fmt::Display for FormalSumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormalSumError::NotStrict => write!(f, "coefficient semiring is not strict"),
            FormalSumError::NoUnit => write!(f, "coefficient structure has no unit"),
            FormalSumError::NoZero => write!(f, "coefficient structure has no zero"),
            FormalSumError::NotARing => write!(f, "group ring coefficients must form a ring"),
            FormalSumError::CarrierNotAssociative => write!(f, "carrier operation not associative"),
            FormalSumError::NotBoolean => write!(f, "coefficients are not a Boolean algebra"),
            FormalSumError::TooFewAtoms => write!(f, "Boolean algebra needs at least two atoms"),
            FormalSumError::DegenerateExponents => {
                write!(f, "no exponent split keeps the factors outside the carrier")
            }
        }
    }
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum { coeffs: BTreeMap::new() }
    }

    pub fn from_terms(terms: &[(usize, usize)], coeff: &Structure) -> Self {
        let zero = coeff.zero().expect("coefficient structure needs a zero");
        let mut map: BTreeMap<usize, usize> = BTreeMap::new();
        for &(g, c) in terms {
            let entry = map.entry(g).or_insert(zero);
            *entry = coeff.add(*entry, c);
        }
        map.retain(|_, c| *c != zero);
        FormalSum { coeffs: map }
    }

    pub fn term(g: usize, c: usize, coeff: &Structure) -> Self {
        Self::from_terms(&[(g, c)], coeff)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, usize> {
        &self.coeffs
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Is this 1·g for a single carrier element g? Used to decide membership
    /// in the embedded carrier copy.
    pub fn as_carrier_element(&self, coeff: &Structure) -> Option<usize> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (&g, &c) = self.coeffs.iter().next().unwrap();
        (Some(c) == coeff.one()).then_some(g)
    }
}

/// A formal-sum algebra handle: element arithmetic is always available;
/// the full table is materialized only on demand and under a cap.
#[derive(Debug, Clone)]
pub struct FormalAlgebra {
    pub coeff: Structure,
    pub carrier: FiniteMagma,
    pub name: String,
}

impl FormalAlgebra {
    pub fn size(&self) -> u128 {
        (self.coeff.n() as u128).pow(self.carrier.n() as u32)
    }

    pub fn add(&self, a: &FormalSum, b: &FormalSum) -> FormalSum {
        let mut terms: Vec<(usize, usize)> =
            a.coeffs.iter().map(|(&g, &c)| (g, c)).collect();
        terms.extend(b.coeffs.iter().map(|(&g, &c)| (g, c)));
        FormalSum::from_terms(&terms, &self.coeff)
    }

    /// Convolution: (Σ s_i g_i)(Σ t_j h_j) = Σ_k (Σ_{g_i h_j = m_k} s_i t_j) m_k.
    pub fn mul(&self, a: &FormalSum, b: &FormalSum) -> FormalSum {
        let mut terms = Vec::with_capacity(a.coeffs.len() * b.coeffs.len());
        for (&g, &s) in &a.coeffs {
            for (&h, &t) in &b.coeffs {
                terms.push((self.carrier.op(g, h), self.coeff.mul(s, t)));
            }
        }
        FormalSum::from_terms(&terms, &self.coeff)
    }

    /// Scalar action s·(Σ s_i g_i) = Σ (s s_i) g_i.
    pub fn scale(&self, s: usize, a: &FormalSum) -> FormalSum {
        let terms: Vec<(usize, usize)> = a
            .coeffs
            .iter()
            .map(|(&g, &c)| (g, self.coeff.mul(s, c)))
            .collect();
        FormalSum::from_terms(&terms, &self.coeff)
    }

    /// Carrier embedding g ↦ 1·g.
    pub fn embed_carrier(&self, g: usize) -> FormalSum {
        FormalSum::term(g, self.coeff.one().expect("unit required"), &self.coeff)
    }

    /// Coefficient embedding s ↦ s·e at the carrier identity.
    pub fn embed_coeff(&self, s: usize) -> Option<FormalSum> {
        let e = self.carrier.table.identity()?;
        Some(FormalSum::term(e, s, &self.coeff))
    }

    pub fn one(&self) -> Option<FormalSum> {
        let e = self.carrier.table.identity()?;
        let o = self.coeff.one()?;
        Some(FormalSum::term(e, o, &self.coeff))
    }

    pub fn characteristic(&self) -> Characteristic {
        // m·(Σ s_i g_i) sums coefficients pointwise, so the algebra inherits
        // the coefficient characteristic.
        characteristic(&self.coeff)
    }

    pub fn is_commutative(&self) -> bool {
        self.coeff.flags().commutative_mul && self.carrier.table.is_commutative()
    }

    pub fn render(&self, x: &FormalSum) -> String {
        if x.is_zero() {
            return self
                .coeff
                .zero()
                .map_or("0".into(), |z| self.coeff.label(z).to_string());
        }
        let parts: Vec<String> = x
            .coeffs
            .iter()
            .map(|(&g, &c)| {
                let gl = self.carrier.labels[g].clone();
                if Some(c) == self.coeff.one() {
                    gl
                } else {
                    format!("{}{}", self.coeff.label(c), gl)
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn parse_terms(&self, terms: &[(String, String)]) -> Option<FormalSum> {
        let mut pairs = Vec::with_capacity(terms.len());
        for (g, c) in terms {
            pairs.push((self.carrier.index_of(g)?, self.coeff.index_of(c)?));
        }
        Some(FormalSum::from_terms(&pairs, &self.coeff))
    }

    /// Bounded zero-divisor search over sums supported on at most two
    /// carrier elements. Up to a carrier unit factor every support-2 product
    /// can be normalized to start at a fixed element, so for group carriers
    /// the first support point is pinned to the identity.
    pub fn zero_divisor_support2(&self) -> Option<(FormalSum, FormalSum)> {
        let cz = self.coeff.zero()?;
        let anchor = self.carrier.table.identity().map(|e| vec![e]);
        let firsts: Vec<usize> = anchor.unwrap_or_else(|| (0..self.carrier.n()).collect());
        let coeffs: Vec<usize> = (0..self.coeff.n()).filter(|&c| c != cz).collect();
        for &g1 in &firsts {
            for g2 in 0..self.carrier.n() {
                for &c1 in &coeffs {
                    for &c2 in coeffs.iter().chain([cz].iter()) {
                        let a = if g1 == g2 || c2 == cz {
                            FormalSum::from_terms(&[(g1, c1)], &self.coeff)
                        } else {
                            FormalSum::from_terms(&[(g1, c1), (g2, c2)], &self.coeff)
                        };
                        if a.is_zero() {
                            continue;
                        }
                        for &h1 in &firsts {
                            for h2 in 0..self.carrier.n() {
                                for &d1 in &coeffs {
                                    for &d2 in coeffs.iter().chain([cz].iter()) {
                                        let b = if h1 == h2 || d2 == cz {
                                            FormalSum::from_terms(&[(h1, d1)], &self.coeff)
                                        } else {
                                            FormalSum::from_terms(
                                                &[(h1, d1), (h2, d2)],
                                                &self.coeff,
                                            )
                                        };
                                        if b.is_zero() {
                                            continue;
                                        }
                                        if self.mul(&a, &b).is_zero() {
                                            return Some((a, b));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Materialize the full table structure. Caller enforces the cap.
    pub fn materialize(&self) -> Structure {
        let n = self.size() as usize;
        let cn = self.coeff.n();
        let cz = self.coeff.zero().expect("materialization needs a zero");
        let carrier_n = self.carrier.n();
        let decode = |mut i: usize| -> FormalSum {
            let mut terms = Vec::new();
            for g in 0..carrier_n {
                let c = i % cn;
                i /= cn;
                if c != cz {
                    terms.push((g, c));
                }
            }
            FormalSum::from_terms(&terms, &self.coeff)
        };
        let encode = |x: &FormalSum| -> usize {
            let mut i = 0;
            for g in (0..carrier_n).rev() {
                let c = x.coeffs.get(&g).copied().unwrap_or(cz);
                i = i * cn + c;
            }
            i
        };
        let elems: Vec<FormalSum> = (0..n).map(decode).collect();
        let labels: Vec<String> = elems.iter().map(|x| self.render(x)).collect();
        let add = OpTable::build(n, |a, b| encode(&self.add(&elems[a], &elems[b])));
        let mul = OpTable::build(n, |a, b| encode(&self.mul(&elems[a], &elems[b])));
        Structure::validate_semiring(labels, add, mul)
            .expect("formal-sum algebra satisfies the semiring axioms")
    }
}

/// Group semiring SG (or semigroup semiring when the carrier is a monoid):
/// coefficients must be a strict commutative semiring with unit.
pub fn group_semiring_lazy(
    coeff: Structure,
    carrier: FiniteMagma,
    name: String,
) -> Result<FormalAlgebra, FormalSumError> {
    let f = coeff.flags();
    if coeff.zero().is_none() {
        return Err(FormalSumError::NoZero);
    }
    if !f.strict {
        return Err(FormalSumError::NotStrict);
    }
    if coeff.one().is_none() || !f.commutative_mul {
        return Err(FormalSumError::NoUnit);
    }
    if !carrier.table.is_associative() {
        return Err(FormalSumError::CarrierNotAssociative);
    }
    Ok(FormalAlgebra { coeff, carrier, name })
}

/// Materialized group semiring, for carriers small enough to enumerate.
pub fn group_semiring(
    coeff: Structure,
    carrier: FiniteMagma,
    name: String,
    cap: u128,
) -> Result<Result<Structure, FormalAlgebra>, FormalSumError> {
    let alg = group_semiring_lazy(coeff, carrier, name)?;
    if alg.size() <= cap {
        Ok(Ok(alg.materialize()))
    } else {
        Ok(Err(alg))
    }
}

/// Group ring RG: ring coefficients over an associative carrier.
pub fn group_ring(
    coeff: Structure,
    carrier: FiniteMagma,
    name: String,
) -> Result<FormalAlgebra, FormalSumError> {
    if !coeff.flags().ring {
        return Err(FormalSumError::NotARing);
    }
    if coeff.one().is_none() {
        return Err(FormalSumError::NoUnit);
    }
    if !carrier.table.is_associative() {
        return Err(FormalSumError::CarrierNotAssociative);
    }
    Ok(FormalAlgebra { coeff, carrier, name })
}

/// Formal sums with coefficients from a number tag (Z0, Q, ...): the
/// symbolic counterpart of `FormalAlgebra` for infinite coefficient
/// domains, with exact rational coefficients.
#[derive(Debug, Clone)]
pub struct TagFormalAlgebra {
    pub coeff_tag: crate::archetype::Tag,
    pub carrier: FiniteMagma,
    pub name: String,
}

pub type TagFormalSum = BTreeMap<usize, num::rational::BigRational>;

impl TagFormalAlgebra {
    pub fn new(
        coeff_tag: crate::archetype::Tag,
        carrier: FiniteMagma,
        name: String,
    ) -> Result<Self, FormalSumError> {
        if !carrier.table.is_associative() {
            return Err(FormalSumError::CarrierNotAssociative);
        }
        Ok(TagFormalAlgebra { coeff_tag, carrier, name })
    }

    pub fn add(&self, a: &TagFormalSum, b: &TagFormalSum) -> TagFormalSum {
        use num::Zero;
        let mut out = a.clone();
        for (&g, c) in b {
            let entry = out.entry(g).or_insert_with(num::rational::BigRational::zero);
            *entry += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn mul(&self, a: &TagFormalSum, b: &TagFormalSum) -> TagFormalSum {
        use num::Zero;
        let mut out: TagFormalSum = BTreeMap::new();
        for (&g, s) in a {
            for (&h, t) in b {
                let k = self.carrier.op(g, h);
                let entry = out.entry(k).or_insert_with(num::rational::BigRational::zero);
                *entry += s * t;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.carrier.table.is_commutative()
    }

    pub fn characteristic(&self) -> Characteristic {
        Characteristic::Zero
    }
}

/// Over a Boolean coefficient algebra with at least two atoms and the cyclic
/// carrier ⟨g | g^n = 1⟩, factor g^i as α·β with both factors outside the
/// embedded carrier: α = a·g^k + a'·g^r and β = a·g^r + a'·g^k with
/// k + r ≡ i (mod n) and k ≠ r, where a is an atom and a' its complement
/// (a·a' = 0, a + a' = 1). When no such split exists the square form with
/// 2k ≡ 2r ≡ i covers the rest.
pub fn atom_factorization(
    coeff: &Structure,
    n: usize,
    i: usize,
) -> Result<(FormalSum, FormalSum), FormalSumError> {
    let Some(order) = coeff.derived_order() else {
        return Err(FormalSumError::NotBoolean);
    };
    let lat = crate::lattice::as_lattice(&order).map_err(|_| FormalSumError::NotBoolean)?;
    if !lat.is_boolean() {
        return Err(FormalSumError::NotBoolean);
    }
    let atoms = lat.atoms();
    if atoms.len() < 2 {
        return Err(FormalSumError::TooFewAtoms);
    }
    let a = atoms[0];
    let comps = lat.complements(a);
    let a_comp = *comps.first().expect("Boolean algebras are complemented");
    let i = i % n;
    // swapped split: k + r ≡ i, k ≠ r
    let split = (0..n)
        .flat_map(|k| (0..n).map(move |r| (k, r)))
        .find(|&(k, r)| k != r && (k + r) % n == i);
    if let Some((k, r)) = split {
        let alpha = FormalSum::from_terms(&[(k, a), (r, a_comp)], coeff);
        let beta = FormalSum::from_terms(&[(r, a), (k, a_comp)], coeff);
        return Ok((alpha, beta));
    }
    // square fallback: 2k ≡ 2r ≡ i with k ≠ r (covers n = 2, i = 0)
    let square = (0..n)
        .flat_map(|k| (0..n).map(move |r| (k, r)))
        .find(|&(k, r)| k != r && (2 * k) % n == i && (2 * r) % n == i);
    if let Some((k, r)) = square {
        let alpha = FormalSum::from_terms(&[(k, a), (r, a_comp)], coeff);
        return Ok((alpha.clone(), alpha));
    }
    Err(FormalSumError::DegenerateExponents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        chain_lattice, cyclic_group, symmetric_group, trivial_group, zmod_ring, DEFAULT_CAP,
    };
    use crate::fixtures;
    use crate::structure::Characteristic;

    fn c2s3() -> FormalAlgebra {
        group_semiring_lazy(chain_lattice(2), symmetric_group(3), "C2S3".into()).unwrap()
    }

    #[test]
    fn c2s3_s_idempotent_equations() {
        // α = 1 + p4 + p5 (identity plus both 3-cycles), B = sum of the
        // three transpositions: α² = α, B² = α, αB = B.
        let alg = c2s3();
        let s3 = &alg.carrier;
        let one = 1usize; // C2 unit index
        let id = s3.table.identity().unwrap();
        let cycles: Vec<usize> = (0..6)
            .filter(|&p| p != id && s3.op(p, p) != id)
            .collect();
        let transpositions: Vec<usize> =
            (0..6).filter(|&p| p != id && s3.op(p, p) == id).collect();
        assert_eq!(cycles.len(), 2);
        assert_eq!(transpositions.len(), 3);
        let alpha = FormalSum::from_terms(
            &[(id, one), (cycles[0], one), (cycles[1], one)],
            &alg.coeff,
        );
        let b = FormalSum::from_terms(
            &transpositions.iter().map(|&p| (p, one)).collect::<Vec<_>>(),
            &alg.coeff,
        );
        assert_eq!(alg.mul(&alpha, &alpha), alpha);
        assert_eq!(alg.mul(&b, &b), alpha);
        assert_eq!(alg.mul(&alpha, &b), b);
    }

    #[test]
    fn materialized_c2s3_has_64_elements() {
        let alg = c2s3();
        assert_eq!(alg.size(), 64);
        let s = alg.materialize();
        assert_eq!(s.n(), 64);
        assert!(s.flags().semiring);
        assert!(!s.flags().commutative_mul);
    }

    #[test]
    fn trivial_carrier_gives_back_coefficients() {
        let alg =
            group_semiring_lazy(chain_lattice(2), trivial_group(), "C2{e}".into()).unwrap();
        let s = alg.materialize();
        assert_eq!(s.n(), 2);
        let c2 = chain_lattice(2);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(s.add(a, b), c2.add(a, b));
                assert_eq!(s.mul(a, b), c2.mul(a, b));
            }
        }
    }

    #[test]
    fn non_strict_coefficients_rejected() {
        let err =
            group_semiring_lazy(zmod_ring(5), cyclic_group(3), "Z5C3".into()).unwrap_err();
        assert_eq!(err, FormalSumError::NotStrict);
    }

    #[test]
    fn z5_c12_group_ring_has_zero_divisors() {
        let alg = group_ring(zmod_ring(5), cyclic_group(12), "Z5C12".into()).unwrap();
        let (a, b) = alg.zero_divisor_support2().expect("bounded search finds one");
        assert!(!a.is_zero() && !b.is_zero());
        assert!(alg.mul(&a, &b).is_zero());
    }

    #[test]
    fn z8_s3_lazy_characteristic() {
        let alg = group_ring(zmod_ring(8), symmetric_group(3), "Z8S3".into()).unwrap();
        assert_eq!(alg.size(), 8u128.pow(6));
        assert_eq!(alg.characteristic(), Characteristic::Finite(8));
        assert!(!alg.is_commutative());
    }

    #[test]
    fn scalar_action_matches_clause_five() {
        let alg = c2s3();
        // s(Σ s_i g_i) = Σ (s s_i) g_i, checked against term-by-term products
        let x = FormalSum::from_terms(&[(0, 1), (3, 1)], &alg.coeff);
        for s in 0..2 {
            let lhs = alg.scale(s, &x);
            let rhs = alg.mul(&alg.embed_coeff(s).unwrap(), &x);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn atom_factorization_diamond_n5_i4() {
        let coeff = Structure::from_lattice(&fixtures::square());
        let alg = group_semiring_lazy(coeff.clone(), cyclic_group(5), "SqC5".into()).unwrap();
        let (alpha, beta) = atom_factorization(&coeff, 5, 4).unwrap();
        assert!(alpha.as_carrier_element(&coeff).is_none());
        assert!(beta.as_carrier_element(&coeff).is_none());
        let prod = alg.mul(&alpha, &beta);
        assert_eq!(prod.as_carrier_element(&coeff), Some(4));
    }

    #[test]
    fn atom_factorization_all_exponents() {
        for (coeff, n) in [
            (Structure::from_lattice(&fixtures::square()), 5usize),
            (crate::constructions::power_set_semiring(3), 7usize),
            (Structure::from_lattice(&fixtures::square()), 2usize),
        ] {
            let alg =
                group_semiring_lazy(coeff.clone(), cyclic_group(n), format!("B×C{n}"))
                    .unwrap();
            for i in 0..n {
                let (alpha, beta) = atom_factorization(&coeff, n, i).unwrap();
                assert!(alpha.as_carrier_element(&coeff).is_none(), "α outside G at i={i}");
                assert!(beta.as_carrier_element(&coeff).is_none(), "β outside G at i={i}");
                assert_eq!(
                    alg.mul(&alpha, &beta).as_carrier_element(&coeff),
                    Some(i),
                    "α·β = g^{i}"
                );
            }
        }
    }

    #[test]
    fn non_boolean_coefficients_rejected_for_factorization() {
        // chains are not complemented, C2 is Boolean but has one atom
        assert_eq!(
            atom_factorization(&chain_lattice(3), 5, 1).unwrap_err(),
            FormalSumError::NotBoolean
        );
        assert_eq!(
            atom_factorization(&chain_lattice(2), 5, 1).unwrap_err(),
            FormalSumError::TooFewAtoms
        );
    }

    #[test]
    fn group_semiring_cap_roundtrip() {
        let res = group_semiring(chain_lattice(2), symmetric_group(3), "C2S3".into(), DEFAULT_CAP)
            .unwrap();
        assert!(res.is_ok());
        let res = group_semiring(chain_lattice(2), symmetric_group(4), "C2S4".into(), DEFAULT_CAP)
            .unwrap();
        assert!(res.is_err()); // 2^24 elements stay lazy
    }
}
