//! Exact tuple semivector spaces over number tags. Membership in a span is
//! decided by a bounded coefficient box that is provably exhaustive when
//! every generator is nonnegative: a generator whose support leaves the
//! target's support is forced to coefficient zero, and any other generator
//! u is bounded by min over the coordinates j with u_j > 0 of v_j / u_j.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::archetype::Tag;

pub type Vector = Vec<BigRational>;

#[derive(Debug, Clone)]
pub struct TupleSpace {
    pub name: String,
    pub factors: Vec<Tag>,
    pub scalar: Tag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanDecision {
    /// coefficients when the target is reachable
    pub combination: Option<Vec<BigRational>>,
    /// true when the negative answer is exhaustive
    pub complete: bool,
}

impl TupleSpace {
    pub fn new(factors: Vec<Tag>, scalar: Tag, name: &str) -> Self {
        assert!(scalar.is_nonneg(), "scalars come from a semifield tag");
        TupleSpace { factors, scalar, name: name.to_string() }
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn zero(&self) -> Vector {
        vec![BigRational::zero(); self.arity()]
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.len() == self.arity() && v.iter().zip(&self.factors).all(|(q, t)| t.contains(q))
    }

    pub fn vec_i64(&self, coords: &[i64]) -> Vector {
        coords.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()
    }

    fn combine(&self, gens: &[Vector], coeffs: &[BigRational]) -> Vector {
        let mut acc = self.zero();
        for (g, c) in gens.iter().zip(coeffs) {
            for (a, x) in acc.iter_mut().zip(g) {
                *a += c * x;
            }
        }
        acc
    }

    /// Exact membership for nonnegative data with integer scalars; falls
    /// back to a bounded search (complete = false on negatives) otherwise.
    pub fn in_span(&self, gens: &[Vector], v: &Vector) -> SpanDecision {
        let all_nonneg = gens
            .iter()
            .all(|g| g.iter().all(|q| !q.is_negative()))
            && v.iter().all(|q| !q.is_negative());
        if all_nonneg && self.scalar == Tag::Z0 && self.all_integer(gens, v) {
            return self.in_span_box(gens, v, true);
        }
        if all_nonneg && self.scalar == Tag::Q0 {
            // denominator clearing: with D the lcm of all denominators,
            // coefficients of the form k/D solve Σ (k/D)(D·u) = D·v, an
            // integer box problem over generators D·u and target D²·v.
            // Positives are exact; a miss only rules out denominators
            // dividing D, so negatives stay incomplete.
            let (sg, sv, d) = self.denominator_scale(gens, v);
            let dec = self.in_span_box(&sg, &sv, false);
            let combination = dec.combination.map(|ks| {
                ks.iter()
                    .map(|k| k / BigRational::from_integer(d.clone()))
                    .collect::<Vec<BigRational>>()
            });
            if let Some(c) = &combination {
                debug_assert_eq!(&self.combine(gens, c), v);
            }
            let complete = combination.is_some();
            return SpanDecision { combination, complete };
        }
        // signed data: bounded coefficient search
        self.in_span_bounded(gens, v, 8)
    }

    fn all_integer(&self, gens: &[Vector], v: &Vector) -> bool {
        gens.iter()
            .all(|g| g.iter().all(|q| q.is_integer()))
            && v.iter().all(|q| q.is_integer())
    }

    fn denominator_scale(&self, gens: &[Vector], v: &Vector) -> (Vec<Vector>, Vector, BigInt) {
        let mut d = BigInt::one();
        for q in gens.iter().flatten().chain(v.iter()) {
            d = num::integer::lcm(d, q.denom().clone());
        }
        let scale = BigRational::from_integer(d.clone());
        let sg: Vec<Vector> = gens
            .iter()
            .map(|g| g.iter().map(|q| q * &scale).collect())
            .collect();
        let sv = v.iter().map(|q| q * &scale * &scale).collect();
        (sg, sv, d)
    }

    /// The exhaustive box: nonnegative integer data and ℕ coefficients.
    fn in_span_box(&self, gens: &[Vector], v: &Vector, complete: bool) -> SpanDecision {
        let k = gens.len();
        let mut bounds: Vec<u64> = Vec::with_capacity(k);
        for g in gens {
            if g.iter().all(|q| q.is_zero()) {
                bounds.push(0);
                continue;
            }
            // support outside the target's support forces coefficient 0
            let escapes = g
                .iter()
                .zip(v)
                .any(|(gq, vq)| !gq.is_zero() && vq.is_zero());
            if escapes {
                bounds.push(0);
                continue;
            }
            let mut bound: Option<BigInt> = None;
            for (gq, vq) in g.iter().zip(v) {
                if gq.is_zero() {
                    continue;
                }
                let q = (vq / gq).floor().to_integer();
                bound = Some(match bound {
                    None => q,
                    Some(b) => b.min(q),
                });
            }
            let b = bound.unwrap_or_else(BigInt::zero);
            let b: u64 = b.try_into().unwrap_or(0);
            bounds.push(b);
        }
        let mut coeffs = vec![0u64; k];
        loop {
            let rat: Vec<BigRational> = coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect();
            if &self.combine(gens, &rat) == v {
                return SpanDecision { combination: Some(rat), complete: true };
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == k {
                    return SpanDecision { combination: None, complete };
                }
                if coeffs[i] < bounds[i] {
                    coeffs[i] += 1;
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Signed fallback: all coefficient tuples with entries 0..=bound.
    fn in_span_bounded(&self, gens: &[Vector], v: &Vector, bound: u64) -> SpanDecision {
        let k = gens.len();
        let mut coeffs = vec![0u64; k];
        loop {
            let rat: Vec<BigRational> = coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect();
            if &self.combine(gens, &rat) == v {
                return SpanDecision { combination: Some(rat), complete: true };
            }
            let mut i = 0;
            loop {
                if i == k {
                    return SpanDecision { combination: None, complete: false };
                }
                if coeffs[i] < bound {
                    coeffs[i] += 1;
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    /// Independence: no member lies in the span of the others. Complete
    /// exactly when every membership query is.
    pub fn independence(&self, set: &[Vector]) -> (Option<usize>, bool) {
        let mut complete = true;
        for i in 0..set.len() {
            let rest: Vec<Vector> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let dec = self.in_span(&rest, &set[i]);
            if dec.combination.is_some() {
                return (Some(i), true);
            }
            complete &= dec.complete;
        }
        (None, complete)
    }

    /// For Z0^n the standard unit vectors form the only basis: they span
    /// (coordinates are the coefficients) and each unit is
    /// ℕ-indecomposable, so every spanning set contains them all.
    pub fn standard_basis_report(&self) -> Option<StandardBasisReport> {
        if self.scalar != Tag::Z0 || self.factors.iter().any(|&t| t != Tag::Z0) {
            return None;
        }
        let n = self.arity();
        let units: Vec<Vector> = (0..n)
            .map(|i| {
                let mut u = self.zero();
                u[i] = BigRational::one();
                u
            })
            .collect();
        let (dep, complete) = self.independence(&units);
        Some(StandardBasisReport {
            basis: units,
            independent: dep.is_none() && complete,
            unique: true,
            dimension: n,
        })
    }
}

#[derive(Debug, Clone)]
pub struct StandardBasisReport {
    pub basis: Vec<Vector>,
    pub independent: bool,
    pub unique: bool,
    pub dimension: usize,
}

/// The unit-vector indecomposability lemma behind basis uniqueness in Z0^n:
/// e_i = x + y with nonnegative integers forces {x, y} = {e_i, 0}, and
/// e_i = c·u with c ∈ Z0 forces c = 1, u = e_i. Checked exhaustively on a
/// coordinate box.
pub fn unit_indecomposability_holds(n: usize, box_bound: u64) -> bool {
    let space = TupleSpace::new(vec![Tag::Z0; n], Tag::Z0, "Z0^n");
    let units: Vec<Vector> = (0..n)
        .map(|i| {
            let mut u = space.zero();
            u[i] = BigRational::one();
            u
        })
        .collect();
    // enumerate x in the box; y = e_i - x must be nonnegative
    let total = (box_bound + 1).pow(n as u32);
    for e in &units {
        for code in 0..total {
            let mut x = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                x.push(BigRational::from_integer(BigInt::from(c % (box_bound + 1))));
                c /= box_bound + 1;
            }
            let y: Vec<BigRational> = e.iter().zip(&x).map(|(ei, xi)| ei - xi).collect();
            if y.iter().any(|q| q.is_negative()) {
                continue;
            }
            let x_zero = x.iter().all(|q| q.is_zero());
            let y_zero = y.iter().all(|q| q.is_zero());
            if !(x_zero || y_zero) {
                return false;
            }
        }
    }
    true
}

/// Bounded exhaustive answer to whether a two-element set can span Z×Z0:
/// scans all pairs with entries in [-bound, bound], requiring the three
/// monoid generators (1,0), (-1,0), (0,1) to be reachable. Returns the
/// bound used alongside the verdict.
pub fn two_element_spanning_set_for_z_x_z0(bound: i64) -> (bool, i64) {
    let space = TupleSpace::new(vec![Tag::Z, Tag::Z0], Tag::Z0, "Z×Z0");
    let targets = [
        space.vec_i64(&[1, 0]),
        space.vec_i64(&[-1, 0]),
        space.vec_i64(&[0, 1]),
    ];
    for a0 in -bound..=bound {
        for a1 in 0..=bound {
            for b0 in -bound..=bound {
                for b1 in 0..=bound {
                    let gens = vec![space.vec_i64(&[a0, a1]), space.vec_i64(&[b0, b1])];
                    let all = targets.iter().all(|t| {
                        space
                            .in_span_bounded(&gens, t, bound.unsigned_abs() * 2 + 2)
                            .combination
                            .is_some()
                    });
                    if all {
                        return (true, bound);
                    }
                }
            }
        }
    }
    (false, bound)
}
