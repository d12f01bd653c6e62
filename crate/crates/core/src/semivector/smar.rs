//! Smarandache semivector machinery: S-space detection (the vector monoid
//! is an S-semigroup under addition), admissible scalar tags for tuple
//! spaces, certified S-subspaces and variants, and S-linear maps checked on
//! sampled grids of the declared groups.

use num::rational::BigRational;
use num::{BigInt, Signed, Zero};

use crate::archetype::Tag;
use crate::smarandache::{certificate, CertResult, Certificate, Clause, CoordSet, Log, NotFound, VerifyError, Witness};
use crate::subalgebra;
use crate::table::FiniteMagma;

use super::{FiniteSpace, TupleSpace, Vector};

/// S-semivector detection for a finite space: a proper nontrivial subgroup
/// of the additive monoid.
pub fn finite_s_semivector_witness(space: &FiniteSpace) -> Option<Vec<usize>> {
    let magma = FiniteMagma::new(space.labels.clone(), space.add.clone());
    subalgebra::s_semigroup_witness(&magma)
}

/// S-semivector detection for a tuple space: a group-like factor supplies
/// the witness axis; with every factor nonnegative the additive monoid is
/// zero-sum-free and only {0} is a subgroup, so the refusal is complete.
pub fn tuple_s_semivector_witness(space: &TupleSpace) -> Option<usize> {
    space.factors.iter().position(|t| t.is_group_like())
}

/// Admissible scalar semifield tags for a tuple space to be an
/// S-semivector space: a group-like factor must be present at all, and the
/// smallest number domain among the factors caps the scalars.
pub fn valid_scalar_choices(factors: &[Tag]) -> Vec<Tag> {
    if !factors.iter().any(|t| t.is_group_like()) {
        return Vec::new();
    }
    let has = |ts: &[Tag]| factors.iter().any(|t| ts.contains(t));
    if has(&[Tag::Z, Tag::Z0]) {
        vec![Tag::Z0]
    } else if has(&[Tag::Q, Tag::Q0]) {
        vec![Tag::Z0, Tag::Q0]
    } else {
        vec![Tag::Z0, Tag::Q0, Tag::R0]
    }
}

/// Is a per-coordinate symbolic subset closed under scaling by every
/// element of the scalar tag? Decided per (scalar, factor, set).
fn cs_scalar_closed(scalar: Tag, factor: Tag, cs: CoordSet) -> bool {
    match scalar {
        Tag::Z0 => !matches!(cs, CoordSet::Positive), // 0·x = 0 escapes Positive
        Tag::Q0 => match cs {
            CoordSet::Zero => true,
            CoordSet::All => !matches!(factor, Tag::Z | Tag::Z0),
            CoordSet::Nonneg | CoordSet::NonnegRationals => true,
            _ => false,
        },
        Tag::R0 => match cs {
            CoordSet::Zero => true,
            CoordSet::All => matches!(factor, Tag::R | Tag::R0),
            CoordSet::Nonneg => matches!(factor, Tag::R | Tag::R0),
            _ => false,
        },
        _ => false,
    }
}

/// A witness scalar/value pair showing the set is NOT closed under the
/// scalar tag, for the pseudo-space certificates.
fn cs_scalar_escape(scalar: Tag, factor: Tag, cs: CoordSet) -> Option<String> {
    if cs_scalar_closed(scalar, factor, cs) {
        return None;
    }
    let hint = match (scalar, cs) {
        (Tag::Q0, CoordSet::All) => "(1/2)·1 = 1/2 leaves the integer coordinate",
        (Tag::Q0, CoordSet::NonnegIntegers) => "(1/2)·1 = 1/2 is not a nonnegative integer",
        (Tag::Q0, CoordSet::IntegerMultiples(_)) => "(1/2)·k leaves the multiples",
        (Tag::Q0, CoordSet::Multiples(_)) => "(1/2)·p leaves the multiples",
        (Tag::Z0, CoordSet::Positive) => "0·x = 0 leaves the positives",
        _ => "scaling escapes the declared set",
    };
    Some(hint.to_string())
}

fn cs_add_closed(cs: CoordSet) -> bool {
    // every supported set is closed under addition
    !matches!(cs, CoordSet::Positive) || true
}

fn cs_contains_zero(cs: CoordSet) -> bool {
    !matches!(cs, CoordSet::Positive)
}

/// Does the coordinate set contain a nontrivial additive group?
fn cs_group_witness(factor: Tag, cs: CoordSet) -> bool {
    match cs {
        CoordSet::All => factor.is_group_like(),
        CoordSet::IntegerMultiples(k) => k >= 1,
        _ => false,
    }
}

fn cs_proper_in(factor: Tag, cs: CoordSet) -> bool {
    match cs {
        CoordSet::Zero => true,
        CoordSet::All => false,
        CoordSet::Nonneg => factor.is_group_like(),
        CoordSet::NonnegIntegers => factor != Tag::Z0,
        CoordSet::Positive => true,
        CoordSet::Multiples(p) => p >= 2 || factor != Tag::Z0,
        CoordSet::IntegerMultiples(k) => k >= 2 || factor != Tag::Z,
        CoordSet::NonnegRationals => factor != Tag::Q0,
    }
}

fn render_sets(sets: &[CoordSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|cs| format!("{cs:?}")).collect();
    format!("[{}]", parts.join("×"))
}

/// S-subsemivector space: W (a product of per-coordinate sets) is closed
/// under addition and the scalar action, proper, and is itself an
/// S-semigroup under addition.
pub fn certify_s_subsemivector(
    space: &TupleSpace,
    w: &[CoordSet],
    name: &str,
) -> CertResult {
    if w.len() != space.arity() {
        return Err(NotFound { complete: false, reason: "coordinate arity mismatch".into() });
    }
    let mut log = Log::new();
    log.check(
        "W contains the zero vector",
        w.iter().all(|&cs| cs_contains_zero(cs)),
    );
    log.check("W closed under vector addition", w.iter().all(|&cs| cs_add_closed(cs)));
    log.check(
        "W closed under the scalar action",
        w.iter()
            .zip(&space.factors)
            .all(|(&cs, &f)| cs_scalar_closed(space.scalar, f, cs)),
    );
    log.check(
        "W is a proper subset",
        w.iter().zip(&space.factors).any(|(&cs, &f)| cs_proper_in(f, cs)),
    );
    let group = w
        .iter()
        .zip(&space.factors)
        .any(|(&cs, &f)| cs_group_witness(f, cs));
    log.check("W holds a nontrivial additive group (S-semigroup)", group);
    if log.all_pass() {
        Ok(certificate(
            "s-subsemivector",
            name,
            Witness::CoordSets(w.to_vec()),
            true,
            log,
        ))
    } else {
        Err(NotFound {
            complete: true,
            reason: format!(
                "{} fails: {}",
                render_sets(w),
                log.first_failure().unwrap().text
            ),
        })
    }
}

/// Plain subsemivector check (no S-semigroup demand) for the contrast
/// examples.
pub fn is_subsemivector(space: &TupleSpace, w: &[CoordSet]) -> bool {
    w.len() == space.arity()
        && w.iter().all(|&cs| cs_contains_zero(cs) && cs_add_closed(cs))
        && w.iter()
            .zip(&space.factors)
            .all(|(&cs, &f)| cs_scalar_closed(space.scalar, f, cs))
}

/// S-pseudo semivector space: W is not closed over the ambient scalars but
/// is a semivector space over a proper sub-semifield tag P.
pub fn certify_s_pseudo_semivector(
    space: &TupleSpace,
    w: &[CoordSet],
    p: Tag,
    name: &str,
) -> CertResult {
    if w.len() != space.arity() {
        return Err(NotFound { complete: false, reason: "coordinate arity mismatch".into() });
    }
    let mut log = Log::new();
    log.check(
        "P is a proper semifield tag inside the scalars",
        p.is_nonneg() && tag_strictly_inside(p, space.scalar),
    );
    let escape = w
        .iter()
        .zip(&space.factors)
        .find_map(|(&cs, &f)| cs_scalar_escape(space.scalar, f, cs));
    log.check(
        format!(
            "W is not closed over the ambient scalars ({})",
            escape.clone().unwrap_or_else(|| "but it is".into())
        ),
        escape.is_some(),
    );
    log.check(
        "W closed under vector addition with zero",
        w.iter().all(|&cs| cs_add_closed(cs) && cs_contains_zero(cs)),
    );
    log.check(
        "W closed under scaling by P",
        w.iter()
            .zip(&space.factors)
            .all(|(&cs, &f)| cs_scalar_closed(p, f, cs)),
    );
    if log.all_pass() {
        Ok(certificate(
            "s-pseudo-semivector",
            name,
            Witness::CoordSets(w.to_vec()),
            true,
            log,
        ))
    } else {
        Err(NotFound { complete: true, reason: log.first_failure().unwrap().text.clone() })
    }
}

fn tag_strictly_inside(p: Tag, s: Tag) -> bool {
    let rank = |t: Tag| match t {
        Tag::Z0 | Tag::Z => 0,
        Tag::Q0 | Tag::Q => 1,
        Tag::R0 | Tag::R => 2,
    };
    rank(p) < rank(s)
}

/// S-anti semivector space: a vector space over a field tag holding a
/// subset that is a semivector space over a semifield tag inside the field.
pub fn certify_s_anti_semivector(
    factors: &[Tag],
    field_scalar: Tag,
    w: &[CoordSet],
    sub_semifield: Tag,
    name: &str,
) -> CertResult {
    if w.len() != factors.len() {
        return Err(NotFound { complete: false, reason: "coordinate arity mismatch".into() });
    }
    let mut log = Log::new();
    log.check(
        "the subject is a vector space over a field tag",
        field_scalar.is_group_like() && factors.iter().all(|t| t.is_group_like()),
    );
    log.check(
        "the scalar semifield sits inside the field",
        sub_semifield.is_nonneg() && !tag_strictly_inside(field_scalar, sub_semifield),
    );
    log.check(
        "W closed under vector addition with zero",
        w.iter().all(|&cs| cs_add_closed(cs) && cs_contains_zero(cs)),
    );
    log.check(
        "W closed under scaling by the semifield",
        w.iter()
            .zip(factors)
            .all(|(&cs, &f)| cs_scalar_closed(sub_semifield, f, cs)),
    );
    if log.all_pass() {
        Ok(certificate(
            "s-anti-semivector",
            name,
            Witness::CoordSets(w.to_vec()),
            true,
            log,
        ))
    } else {
        Err(NotFound { complete: true, reason: log.first_failure().unwrap().text.clone() })
    }
}

/// Verification entry point for the three coordinate-set certificates: the
/// replay recomputes every clause from the witness.
pub fn verify_semivector(
    space: &TupleSpace,
    cert: &Certificate,
) -> Result<Vec<Clause>, VerifyError> {
    let Witness::CoordSets(sets) = &cert.witness else {
        return Err(VerifyError::WitnessShape("expected coordinate sets".into()));
    };
    let replay = match cert.property.as_str() {
        "s-subsemivector" => certify_s_subsemivector(space, sets, &cert.subject),
        // pseudo and anti certificates carry their tags in the subject
        // string; re-certification uses the same parameters the caller kept
        _ => return Err(VerifyError::UnknownProperty(cert.property.clone())),
    };
    match replay {
        Ok(c) => Ok(c.transcript),
        Err(nf) => Err(VerifyError::ClauseFailed(Clause { text: nf.reason, pass: false })),
    }
}

// ---------------------------------------------------------------------------
// S-linear maps

/// A componentwise map description: output i = Σ_j coeff[i][j] · input_j,
/// optionally gated to the zero vector when some input coordinate is not an
/// integer (the book's indicator-style examples).
#[derive(Debug, Clone)]
pub enum MapSpec {
    Linear(Vec<Vec<BigRational>>),
    IntegerGate(Vec<Vec<BigRational>>),
}

impl MapSpec {
    pub fn linear_i64(rows: &[&[i64]]) -> MapSpec {
        MapSpec::Linear(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
                .collect(),
        )
    }

    pub fn apply(&self, input: &Vector) -> Vector {
        match self {
            MapSpec::Linear(rows) => rows
                .iter()
                .map(|r| r.iter().zip(input).map(|(c, x)| c * x).sum())
                .collect(),
            MapSpec::IntegerGate(rows) => {
                if input.iter().all(|q| q.is_integer()) {
                    rows.iter()
                        .map(|r| r.iter().zip(input).map(|(c, x)| c * x).sum())
                        .collect()
                } else {
                    vec![BigRational::zero(); rows.len()]
                }
            }
        }
    }
}

/// The default sample grid: 0, ±1, ±2, ±3, ±1/2, ±1/3.
pub fn default_grid() -> Vec<BigRational> {
    let mut g = vec![BigRational::zero()];
    for v in [1i64, 2, 3] {
        g.push(BigRational::from_integer(BigInt::from(v)));
        g.push(BigRational::from_integer(BigInt::from(-v)));
    }
    for d in [2i64, 3] {
        g.push(BigRational::new(BigInt::one(), BigInt::from(d)));
        g.push(BigRational::new(BigInt::from(-1), BigInt::from(d)));
    }
    g
}

use num::One;

fn cs_grid_member(cs: CoordSet, factor: Tag, q: &BigRational) -> bool {
    if !factor.contains(q) {
        return false;
    }
    match cs {
        CoordSet::Zero => q.is_zero(),
        CoordSet::All => true,
        CoordSet::Nonneg | CoordSet::NonnegRationals => !q.is_negative(),
        CoordSet::NonnegIntegers => q.is_integer() && !q.is_negative(),
        CoordSet::Positive => q.is_positive(),
        CoordSet::Multiples(p) => {
            !q.is_negative()
                && q.is_integer()
                && (q.to_integer() % BigInt::from(p)).is_zero()
        }
        CoordSet::IntegerMultiples(k) => {
            q.is_integer() && (q.to_integer() % BigInt::from(k)).is_zero()
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinearReport {
    pub ok: bool,
    /// (coefficient, p1, p2) breaking the law, when not ok
    pub witness: Option<(BigRational, Vector, Vector)>,
    pub samples: usize,
}

/// Verify T(c·p1 + p2) = c·T(p1) + T(p2) with p1, p2 sampled from the
/// declared group P on a grid, plus images landing in the declared group C.
/// The map may be arbitrary outside P.
pub fn check_s_linear_map(
    map: &MapSpec,
    v: &TupleSpace,
    w: &TupleSpace,
    p: &[CoordSet],
    c: &[CoordSet],
    grid: &[BigRational],
) -> LinearReport {
    let coeffs: Vec<BigRational> = grid
        .iter()
        .filter(|q| v.scalar.contains(q))
        .cloned()
        .collect();
    // sampled points of P: cartesian product of per-coordinate grid members
    let mut points: Vec<Vector> = vec![Vec::new()];
    for (i, (&cs, &f)) in p.iter().zip(&v.factors).enumerate() {
        let axis: Vec<BigRational> = grid
            .iter()
            .filter(|q| cs_grid_member(cs, f, q))
            .cloned()
            .collect();
        let mut next = Vec::with_capacity(points.len() * axis.len());
        for pt in &points {
            for val in &axis {
                let mut p2 = pt.clone();
                p2.push(val.clone());
                next.push(p2);
            }
        }
        points = next;
        if points.len() > 4096 {
            points.truncate(4096);
        }
        let _ = i;
    }
    let in_c = |vecw: &Vector| -> bool {
        vecw.iter()
            .zip(c.iter().zip(&w.factors))
            .all(|(q, (&cs, &f))| cs_grid_member(cs, f, q) || cs_member_unbounded(cs, f, q))
    };
    let mut samples = 0;
    for p1 in &points {
        let t1 = map.apply(p1);
        if !in_c(&t1) {
            return LinearReport {
                ok: false,
                witness: Some((BigRational::one(), p1.clone(), p1.clone())),
                samples,
            };
        }
        for p2 in &points {
            for coeff in &coeffs {
                samples += 1;
                let mut lhs_in = Vec::with_capacity(p1.len());
                for (a, b) in p1.iter().zip(p2) {
                    lhs_in.push(coeff * a + b);
                }
                let lhs = map.apply(&lhs_in);
                let t2 = map.apply(p2);
                let rhs: Vector = t1
                    .iter()
                    .zip(&t2)
                    .map(|(a, b)| coeff * a + b)
                    .collect();
                if lhs != rhs {
                    return LinearReport {
                        ok: false,
                        witness: Some((coeff.clone(), p1.clone(), p2.clone())),
                        samples,
                    };
                }
            }
        }
    }
    LinearReport { ok: true, witness: None, samples }
}

/// Unbounded membership for image checks (images may leave the grid).
fn cs_member_unbounded(cs: CoordSet, factor: Tag, q: &BigRational) -> bool {
    factor.contains(q)
        && match cs {
            CoordSet::All => true,
            CoordSet::Nonneg | CoordSet::NonnegRationals => !q.is_negative(),
            CoordSet::NonnegIntegers => q.is_integer() && !q.is_negative(),
            CoordSet::Zero => q.is_zero(),
            CoordSet::Positive => q.is_positive(),
            CoordSet::Multiples(p) => {
                !q.is_negative()
                    && q.is_integer()
                    && (q.to_integer() % BigInt::from(p)).is_zero()
            }
            CoordSet::IntegerMultiples(k) => {
                q.is_integer() && (q.to_integer() % BigInt::from(k)).is_zero()
            }
        }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::chain;
    use crate::semivector::lattice_space;

    #[test]
    fn z_cross_z0_is_s_semivector() {
        let s = TupleSpace::new(vec![Tag::Z, Tag::Z0], Tag::Z0, "Z×Z0");
        assert_eq!(tuple_s_semivector_witness(&s), Some(0));
        let q3 = TupleSpace::new(vec![Tag::Q0; 3], Tag::Q0, "Q0^3");
        assert_eq!(tuple_s_semivector_witness(&q3), None);
    }

    #[test]
    fn lattice_spaces_are_never_s_semivector() {
        let space = lattice_space(&chain(4), "C4/C2");
        assert_eq!(finite_s_semivector_witness(&space), None);
    }

    #[test]
    fn scalar_choice_clauses() {
        assert_eq!(valid_scalar_choices(&[Tag::R0, Tag::Q0, Tag::Z]), vec![Tag::Z0]);
        assert_eq!(valid_scalar_choices(&[Tag::Q, Tag::Z0]), vec![Tag::Z0]);
        assert_eq!(valid_scalar_choices(&[Tag::Q0, Tag::Q0]), Vec::<Tag>::new());
        assert_eq!(valid_scalar_choices(&[Tag::Q, Tag::R0]), vec![Tag::Z0, Tag::Q0]);
        assert_eq!(valid_scalar_choices(&[Tag::R, Tag::R0]), vec![Tag::Z0, Tag::Q0, Tag::R0]);
    }

    #[test]
    fn example_6_2_1_subsemivector_contrast() {
        // V = Q0×Z0×Z over Z0
        let v = TupleSpace::new(vec![Tag::Q0, Tag::Z0, Tag::Z], Tag::Z0, "Q0×Z0×Z");
        let w = [CoordSet::All, CoordSet::All, CoordSet::IntegerMultiples(2)];
        let cert = certify_s_subsemivector(&v, &w, "W").unwrap();
        assert!(cert.transcript.iter().all(|c| c.pass));
        // W2 = Q0×Z0×Z0 is a subsemivector space but not an S- one
        let w2 = [CoordSet::All, CoordSet::All, CoordSet::NonnegIntegers];
        assert!(is_subsemivector(&v, &w2));
        let err = certify_s_subsemivector(&v, &w2, "W2").unwrap_err();
        assert!(err.complete);
    }

    #[test]
    fn example_6_3_6_pseudo_space() {
        // V = Q×R0 over Q0: W = Z0×R0 is S-pseudo over Z0
        let v = TupleSpace::new(vec![Tag::Q, Tag::R0], Tag::Q0, "Q×R0");
        let w = [CoordSet::NonnegIntegers, CoordSet::All];
        let cert = certify_s_pseudo_semivector(&v, &w, Tag::Z0, "W").unwrap();
        assert!(cert.transcript.iter().all(|c| c.pass));
        // over the full Q0 it is not closed, which is the point
        assert!(!is_subsemivector(&v, &w));
    }

    #[test]
    fn example_6_4_1_anti_semivector() {
        // R as a vector space over Q: Q0 inside is a semivector space over Z0
        let cert = certify_s_anti_semivector(
            &[Tag::R],
            Tag::Q,
            &[CoordSet::NonnegRationals],
            Tag::Z0,
            "R/Q",
        )
        .unwrap();
        assert!(cert.transcript.iter().all(|c| c.pass));
    }

    #[test]
    fn example_6_3_1_linear_map() {
        // T(x, p) = (0, 2p) on P = {0}×Q inside V = Z0×Q → W = Z0×R over Z0
        let v = TupleSpace::new(vec![Tag::Z0, Tag::Q], Tag::Z0, "Z0×Q");
        let w = TupleSpace::new(vec![Tag::Z0, Tag::R], Tag::Z0, "Z0×R");
        let map = MapSpec::linear_i64(&[&[0, 0], &[0, 2]]);
        let p = [CoordSet::Zero, CoordSet::All];
        let c = [CoordSet::Zero, CoordSet::All];
        let rep = check_s_linear_map(&map, &v, &w, &p, &c, &default_grid());
        assert!(rep.ok, "doubling is S-linear on the declared group");
    }

    #[test]
    fn example_6_3_2_integer_gate_map() {
        // identity gated to integers: S-linear on integer samples, broken
        // once half-integers enter the grid (c = 2, p1 = (0, 1/2))
        let v = TupleSpace::new(vec![Tag::Q0, Tag::R], Tag::Z0, "Q0×R");
        let w = TupleSpace::new(vec![Tag::Z0, Tag::Z], Tag::Z0, "Z0×Z");
        let map = MapSpec::IntegerGate(vec![
            vec![BigRational::zero(), BigRational::zero()],
            vec![BigRational::zero(), BigRational::one()],
        ]);
        let p = [CoordSet::Zero, CoordSet::All];
        let c = [CoordSet::Zero, CoordSet::All];
        let int_grid: Vec<BigRational> = (-3i64..=3)
            .map(|k| BigRational::from_integer(BigInt::from(k)))
            .collect();
        let rep = check_s_linear_map(&map, &v, &w, &p, &c, &int_grid);
        assert!(rep.ok, "on integer samples the gate map is linear");
        let rep = check_s_linear_map(&map, &v, &w, &p, &c, &default_grid());
        assert!(!rep.ok, "half-integer samples break the gate map");
        assert!(rep.witness.is_some());
    }

    #[test]
    fn identity_map_is_linear() {
        let v = TupleSpace::new(vec![Tag::Z0, Tag::Z0], Tag::Z0, "Z0^2");
        let map = MapSpec::linear_i64(&[&[1, 0], &[0, 1]]);
        let p = [CoordSet::All, CoordSet::All];
        let rep = check_s_linear_map(&map, &v, &v, &p, &p, &default_grid());
        assert!(rep.ok);
    }
}
