//! Searches over finite table structures: semifield and field subsets,
//! S-semirings of level I and II, S-substructures, S-semifields and the
//! weak variant.
//!
//! Subsets are enumerated exhaustively for n ≤ 16 (2^n masks), preferring
//! witnesses that contain the ambient zero and one — the canonical choices
//! in the source claims — then smaller, then lexicographically earlier.

use crate::structure::Structure;
use crate::subalgebra;

use super::{certificate, CertResult, Log, NotFound, Witness};

pub const EXHAUSTIVE_LIMIT: usize = 16;

pub(crate) fn labels_of(s: &Structure, subset: &[usize]) -> Vec<String> {
    subset.iter().map(|&i| s.label(i).to_string()).collect()
}

pub(crate) fn resolve_labels(s: &Structure, labels: &[String]) -> Result<Vec<usize>, String> {
    let mut out = Vec::with_capacity(labels.len());
    for l in labels {
        match s.index_of(l) {
            Some(i) => out.push(i),
            None => return Err(format!("no element labelled {l:?}")),
        }
    }
    Ok(out)
}

/// Candidate subsets of {0..n}: first those containing every preferred
/// element, by size then mask order; then the rest.
fn subset_candidates(n: usize, prefer: &[usize]) -> Vec<Vec<usize>> {
    assert!(n <= EXHAUSTIVE_LIMIT);
    let pref_mask: u32 = prefer.iter().fold(0, |m, &i| m | 1 << i);
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|&m| (m & pref_mask != pref_mask, m.count_ones(), m));
    masks
        .into_iter()
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Clauses for "subset is a semifield under the induced operations":
/// its own additive identity and distinct multiplicative identity,
/// commutative, strict and zero-divisor-free relative to the subset zero.
pub(crate) fn subset_semifield_clauses(
    s: &Structure,
    subset: &[usize],
    log: &mut Log,
) -> Option<(usize, usize)> {
    let ok_size = log.check("subset has at least two elements", subset.len() >= 2);
    let closed = log.check(
        "subset closed under addition and multiplication",
        subalgebra::is_closed(s, subset),
    );
    if !ok_size || !closed {
        return None;
    }
    let zero = subalgebra::local_additive_identity(s, subset);
    log.check("subset contains its own additive identity", zero.is_some());
    let one = subalgebra::local_multiplicative_identity(s, subset);
    log.check("subset contains its own multiplicative identity", one.is_some());
    let (z, u) = match (zero, one) {
        (Some(z), Some(u)) => (z, u),
        _ => return None,
    };
    if !log.check("subset zero and one are distinct", z != u) {
        return None;
    }
    let comm = subset
        .iter()
        .all(|&a| subset.iter().all(|&b| s.mul(a, b) == s.mul(b, a)));
    log.check("multiplication commutative on subset", comm);
    let strict = subset.iter().all(|&a| {
        subset
            .iter()
            .all(|&b| !(a != z && b != z && s.add(a, b) == z))
    });
    log.check("strict relative to the subset zero", strict);
    let no_zd = subset.iter().all(|&a| {
        subset
            .iter()
            .all(|&b| !(a != z && b != z && s.mul(a, b) == z))
    });
    log.check("no zero divisors relative to the subset zero", no_zd);
    (comm && strict && no_zd).then_some((z, u))
}

/// Clauses for "subset is a field under the induced operations".
pub(crate) fn subset_field_clauses(
    s: &Structure,
    subset: &[usize],
    log: &mut Log,
) -> Option<(usize, usize)> {
    let ok_size = log.check("subset has at least two elements", subset.len() >= 2);
    let closed = log.check(
        "subset closed under addition and multiplication",
        subalgebra::is_closed(s, subset),
    );
    if !ok_size || !closed {
        return None;
    }
    let zero = subalgebra::local_additive_identity(s, subset);
    log.check("subset contains its own additive identity", zero.is_some());
    let z = zero?;
    let inverses = subset
        .iter()
        .all(|&a| subset.iter().any(|&b| s.add(a, b) == z));
    log.check("additive inverses within the subset", inverses);
    let one = subalgebra::local_multiplicative_identity(s, subset);
    log.check("subset contains its own multiplicative identity", one.is_some());
    let u = one?;
    if !log.check("subset zero and one are distinct", z != u) {
        return None;
    }
    let comm = subset
        .iter()
        .all(|&a| subset.iter().all(|&b| s.mul(a, b) == s.mul(b, a)));
    log.check("multiplication commutative on subset", comm);
    let invertible = subset
        .iter()
        .filter(|&&a| a != z)
        .all(|&a| subset.iter().any(|&b| s.mul(a, b) == u));
    log.check("nonzero elements invertible within the subset", invertible);
    (inverses && comm && invertible).then_some((z, u))
}

/// Semifield predicate for the whole structure (ambient zero and one).
pub fn is_semifield(s: &Structure) -> bool {
    s.flags().semifield
}

/// On failure, the first offending pair: a zero-divisor pair, or a
/// strictness witness, expressed with the reason.
pub fn semifield_failure(s: &Structure) -> Option<(String, Vec<usize>)> {
    let f = s.flags();
    if f.semifield {
        return None;
    }
    if !f.has_one || s.zero() == s.one() {
        return Some(("no multiplicative identity distinct from zero".into(), vec![]));
    }
    if !f.commutative_mul {
        let (a, b) = s.mul_table().commutativity_witness().unwrap();
        return Some(("multiplication not commutative".into(), vec![a, b]));
    }
    if !f.strict {
        let (a, b) = crate::structure::strictness_witness(s).unwrap();
        return Some(("not strict".into(), vec![a, b]));
    }
    let z = s.zero().unwrap();
    for a in 0..s.n() {
        for b in 0..s.n() {
            if a != z && b != z && s.mul(a, b) == z {
                return Some(("zero-divisor pair".into(), vec![a, b]));
            }
        }
    }
    None
}

/// Certificate-level wrapper for the semifield predicate.
pub fn certify_semifield(s: &Structure, name: &str) -> CertResult {
    match semifield_failure(s) {
        None => {
            let mut log = Log::new();
            log.check("commutative multiplication with identity", true);
            log.check("strict (zero-sum-free)", true);
            log.check("no zero divisors", true);
            Ok(certificate("semifield", name, Witness::None, true, log))
        }
        Some((reason, pair)) => Err(NotFound {
            complete: true,
            reason: format!("{reason} {:?}", labels_of(s, &pair)),
        }),
    }
}

/// All semifield subsets (relative identities) in preference order.
fn semifield_subsets(s: &Structure, proper: bool) -> Vec<(Vec<usize>, usize, usize)> {
    let mut prefer = Vec::new();
    if let Some(z) = s.zero() {
        prefer.push(z);
    }
    if let Some(o) = s.one() {
        prefer.push(o);
    }
    let mut out = Vec::new();
    for subset in subset_candidates(s.n(), &prefer) {
        if proper && subset.len() == s.n() {
            continue;
        }
        let mut log = Log::new();
        if let Some((z, u)) = subset_semifield_clauses(s, &subset, &mut log) {
            out.push((subset, z, u));
        }
    }
    out
}

/// S-semiring of level I: a proper subset that is a semifield under the
/// induced operations (the subset's own zero and one need not be the
/// ambient ones).
pub fn certify_s_semiring_i(s: &Structure, name: &str) -> CertResult {
    if s.n() > EXHAUSTIVE_LIMIT {
        return certify_s_semiring_i_bounded(s, name);
    }
    for (subset, z, _u) in semifield_subsets(s, true) {
        if subset == vec![z] {
            continue;
        }
        let mut log = Log::new();
        log.check("witness is a proper subset", subset.len() < s.n());
        log.check("witness is not the trivial {0}", subset.len() >= 2);
        subset_semifield_clauses(s, &subset, &mut log);
        if log.all_pass() {
            return Ok(certificate(
                "s-semiring-1",
                name,
                Witness::Labels(labels_of(s, &subset)),
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no proper semifield subset".into() })
}

/// Beyond the exhaustive limit: closure-generated subsets only.
fn certify_s_semiring_i_bounded(s: &Structure, name: &str) -> CertResult {
    let found = subalgebra::subsemirings(s, 4096);
    for subset in &found.subsets {
        if subset.len() >= s.n() || subset.len() < 2 {
            continue;
        }
        let mut log = Log::new();
        log.check("witness is a proper subset", true);
        log.check("witness is not the trivial {0}", true);
        if subset_semifield_clauses(s, subset, &mut log).is_some() {
            return Ok(certificate(
                "s-semiring-1",
                name,
                Witness::Labels(labels_of(s, subset)),
                false,
                log,
            ));
        }
    }
    Err(NotFound { complete: false, reason: "no semifield subset found (bounded search)".into() })
}

/// S-semiring of level II: a proper subset that is a field under the
/// induced operations (relative identities allowed).
pub fn certify_s_semiring_ii(s: &Structure, name: &str) -> CertResult {
    if s.n() > EXHAUSTIVE_LIMIT {
        // closures of one- and two-element generator sets; finds every
        // prime-field subset (cyclic additive group) but is not exhaustive
        for x in 0..s.n() {
            for y in x..s.n() {
                let subset = subalgebra::closure(s, &[x, y]);
                if subset.len() >= s.n() || subset.len() < 2 {
                    continue;
                }
                let mut log = Log::new();
                log.check("witness is a proper subset", true);
                if subset_field_clauses(s, &subset, &mut log).is_some() && log.all_pass() {
                    return Ok(certificate(
                        "s-semiring-2",
                        name,
                        Witness::Labels(labels_of(s, &subset)),
                        false,
                        log,
                    ));
                }
            }
        }
        return Err(NotFound {
            complete: false,
            reason: "no field subset among generator closures (bounded search)".into(),
        });
    }
    let mut prefer = Vec::new();
    if let Some(z) = s.zero() {
        prefer.push(z);
    }
    for subset in subset_candidates(s.n(), &prefer) {
        if subset.len() == s.n() || subset.len() < 2 {
            continue;
        }
        let mut log = Log::new();
        log.check("witness is a proper subset", true);
        if subset_field_clauses(s, &subset, &mut log).is_some() && log.all_pass() {
            return Ok(certificate(
                "s-semiring-2",
                name,
                Witness::Labels(labels_of(s, &subset)),
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no proper field subset".into() })
}

/// S-subsemiring: the subset is itself an S-semiring of level I — it hosts
/// a proper semifield strictly inside it.
pub fn certify_s_subsemiring(s: &Structure, subset: &[usize], name: &str) -> CertResult {
    let mut log = Log::new();
    log.check("subset is nonempty and proper", !subset.is_empty() && subset.len() < s.n());
    log.check(
        "subset closed under addition and multiplication",
        subalgebra::is_closed(s, subset),
    );
    log.check(
        "subset contains an additive identity for itself",
        subalgebra::local_additive_identity(s, subset).is_some(),
    );
    if !log.all_pass() {
        return Err(NotFound {
            complete: true,
            reason: log.first_failure().unwrap().text.clone(),
        });
    }
    // proper semifield strictly inside the subset
    for inner_mask in 1u32..(1 << subset.len()) {
        let inner: Vec<usize> = subset
            .iter()
            .enumerate()
            .filter(|&(i, _)| inner_mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        if inner.len() >= subset.len() || inner.len() < 2 {
            continue;
        }
        let mut ilog = Log::new();
        if subset_semifield_clauses(s, &inner, &mut ilog).is_some() && ilog.all_pass() {
            log.check("subset hosts a proper semifield", true);
            for c in ilog.into_clauses() {
                log.check(format!("[inner] {}", c.text), c.pass);
            }
            return Ok(certificate(
                "s-subsemiring",
                name,
                Witness::Nested {
                    outer: labels_of(s, subset),
                    inner: labels_of(s, &inner),
                },
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no proper semifield inside the subset".into() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

/// S-ideal: an S-subsemiring whose semifield absorbs products with the
/// subset — for all a in the semifield A and p in the subset, a·p (p·a)
/// lands back in A.
pub fn certify_s_ideal(
    s: &Structure,
    subset: &[usize],
    side: IdealSide,
    name: &str,
) -> CertResult {
    let base = certify_s_subsemiring(s, subset, name)?;
    // try every proper semifield inside until the absorption clause holds
    for inner_mask in 1u32..(1 << subset.len()) {
        let inner: Vec<usize> = subset
            .iter()
            .enumerate()
            .filter(|&(i, _)| inner_mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        if inner.len() >= subset.len() || inner.len() < 2 {
            continue;
        }
        let mut log = Log::new();
        log.check("subset is an S-subsemiring", true);
        if subset_semifield_clauses(s, &inner, &mut log).is_none() {
            continue;
        }
        let right = subset
            .iter()
            .all(|&p| inner.iter().all(|&a| inner.contains(&s.mul(a, p))));
        let left = subset
            .iter()
            .all(|&p| inner.iter().all(|&a| inner.contains(&s.mul(p, a))));
        let pass = match side {
            IdealSide::Right => log.check("a·p stays in the semifield A", right),
            IdealSide::Left => log.check("p·a stays in the semifield A", left),
            IdealSide::TwoSided => {
                let r = log.check("a·p stays in the semifield A", right);
                let l = log.check("p·a stays in the semifield A", left);
                r && l
            }
        };
        if pass && log.all_pass() {
            let prop = match side {
                IdealSide::Left => "s-ideal-left",
                IdealSide::Right => "s-ideal-right",
                IdealSide::TwoSided => "s-ideal",
            };
            return Ok(certificate(
                prop,
                name,
                Witness::Nested { outer: labels_of(s, subset), inner: labels_of(s, &inner) },
                true,
                log,
            ));
        }
    }
    let _ = base;
    Err(NotFound {
        complete: true,
        reason: "no semifield inside the subset absorbs the subset".into(),
    })
}

/// S-pseudo subsemiring: the subset sits strictly inside a proper subset P
/// of the structure where P is an S-subsemiring or itself a semifield.
pub fn certify_s_pseudo_subsemiring(s: &Structure, subset: &[usize], name: &str) -> CertResult {
    if s.n() > EXHAUSTIVE_LIMIT {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    let mut log0 = Log::new();
    log0.check("subset is nonempty and proper", !subset.is_empty() && subset.len() < s.n());
    if !log0.all_pass() {
        return Err(NotFound { complete: true, reason: "empty or improper subset".into() });
    }
    let inside: u32 = subset.iter().fold(0, |m, &i| m | 1 << i);
    for mask in 1u32..(1 << s.n()) {
        if mask & inside != inside || mask == inside {
            continue;
        }
        let host: Vec<usize> = (0..s.n()).filter(|&i| mask >> i & 1 == 1).collect();
        if host.len() == s.n() {
            continue;
        }
        // host is a semifield itself, or an S-subsemiring
        let mut log = Log::new();
        log.check("subset strictly contained in a proper subset P", true);
        let mut sf = Log::new();
        let host_is_semifield = subset_semifield_clauses(s, &host, &mut sf).is_some();
        let host_is_s_sub = certify_s_subsemiring(s, &host, name).is_ok();
        log.check(
            "P is a semifield or an S-subsemiring",
            host_is_semifield || host_is_s_sub,
        );
        if log.all_pass() {
            return Ok(certificate(
                "s-pseudo-subsemiring",
                name,
                Witness::Nested { outer: labels_of(s, &host), inner: labels_of(s, subset) },
                true,
                log,
            ));
        }
    }
    Err(NotFound {
        complete: true,
        reason: "no proper host subset is a semifield or S-subsemiring".into(),
    })
}

/// S-dual ideal: an S-subsemiring P with semifield A ⊂ P such that
/// a + p lands in A for every p ∈ P and nonzero a ∈ A.
pub fn certify_s_dual_ideal(s: &Structure, subset: &[usize], name: &str) -> CertResult {
    certify_s_subsemiring(s, subset, name)?;
    for inner_mask in 1u32..(1 << subset.len()) {
        let inner: Vec<usize> = subset
            .iter()
            .enumerate()
            .filter(|&(i, _)| inner_mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        if inner.len() >= subset.len() || inner.len() < 2 {
            continue;
        }
        let mut log = Log::new();
        log.check("subset is an S-subsemiring", true);
        let Some((z, _)) = subset_semifield_clauses(s, &inner, &mut log) else {
            continue;
        };
        let dual = subset.iter().all(|&p| {
            inner
                .iter()
                .filter(|&&a| a != z)
                .all(|&a| inner.contains(&s.add(a, p)))
        });
        if log.check("a + p stays in the semifield A for nonzero a", dual) && log.all_pass() {
            return Ok(certificate(
                "s-dual-ideal",
                name,
                Witness::Nested { outer: labels_of(s, subset), inner: labels_of(s, &inner) },
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no semifield absorbs sums".into() })
}

/// S-pseudo ideal: the subset is a S-pseudo subsemiring inside a semifield
/// A, and a·p (p·a) falls back into the subset for a ∈ A.
pub fn certify_s_pseudo_ideal(s: &Structure, subset: &[usize], name: &str) -> CertResult {
    if s.n() > EXHAUSTIVE_LIMIT {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    let inside: u32 = subset.iter().fold(0, |m, &i| m | 1 << i);
    for mask in 1u32..(1 << s.n()) {
        if mask & inside != inside || mask == inside {
            continue;
        }
        let host: Vec<usize> = (0..s.n()).filter(|&i| mask >> i & 1 == 1).collect();
        if host.len() == s.n() {
            continue;
        }
        let mut log = Log::new();
        log.check("subset strictly contained in a semifield A", true);
        if subset_semifield_clauses(s, &host, &mut log).is_none() {
            continue;
        }
        let absorbed = subset.iter().all(|&p| {
            host.iter()
                .all(|&a| subset.contains(&s.mul(a, p)) && subset.contains(&s.mul(p, a)))
        });
        if log.check("a·p and p·a fall back into the subset", absorbed) && log.all_pass() {
            return Ok(certificate(
                "s-pseudo-ideal",
                name,
                Witness::Nested { outer: labels_of(s, &host), inner: labels_of(s, subset) },
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no hosting semifield absorbs into the subset".into() })
}

/// S-pseudo dual ideal: as the pseudo ideal, with p + a falling back into
/// the subset.
pub fn certify_s_pseudo_dual_ideal(s: &Structure, subset: &[usize], name: &str) -> CertResult {
    if s.n() > EXHAUSTIVE_LIMIT {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    let inside: u32 = subset.iter().fold(0, |m, &i| m | 1 << i);
    for mask in 1u32..(1 << s.n()) {
        if mask & inside != inside || mask == inside {
            continue;
        }
        let host: Vec<usize> = (0..s.n()).filter(|&i| mask >> i & 1 == 1).collect();
        if host.len() == s.n() {
            continue;
        }
        let mut log = Log::new();
        log.check("subset strictly contained in a semifield A", true);
        if subset_semifield_clauses(s, &host, &mut log).is_none() {
            continue;
        }
        let absorbed = subset
            .iter()
            .all(|&p| host.iter().all(|&a| subset.contains(&s.add(p, a))));
        if log.check("p + a falls back into the subset", absorbed) && log.all_pass() {
            return Ok(certificate(
                "s-pseudo-dual-ideal",
                name,
                Witness::Nested { outer: labels_of(s, &host), inner: labels_of(s, subset) },
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no hosting semifield works".into() })
}

/// S-semidivision ring: a non-commutative S-subsemiring A holding a
/// non-commutative, zero-divisor-free subset P (a semidivision ring).
pub fn certify_s_semidivision_ring(s: &Structure, name: &str) -> CertResult {
    if s.flags().commutative_mul {
        return Err(NotFound {
            complete: true,
            reason: "subject is commutative; semidivision rings need non-commutativity".into(),
        });
    }
    if s.n() > EXHAUSTIVE_LIMIT {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    let z = s.zero();
    for outer in subset_candidates(s.n(), &[]) {
        if outer.len() >= s.n() {
            continue;
        }
        if certify_s_subsemiring(s, &outer, name).is_err() {
            continue;
        }
        let outer_noncomm = outer
            .iter()
            .any(|&a| outer.iter().any(|&b| s.mul(a, b) != s.mul(b, a)));
        if !outer_noncomm {
            continue;
        }
        for inner_mask in 1u32..(1 << outer.len()) {
            let inner: Vec<usize> = outer
                .iter()
                .enumerate()
                .filter(|&(i, _)| inner_mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            if inner.len() >= outer.len() {
                continue;
            }
            let mut log = Log::new();
            log.check("A is a non-commutative S-subsemiring", true);
            log.check("P is a proper subset of A", true);
            log.check(
                "P closed under addition and multiplication",
                subalgebra::is_closed(s, &inner),
            );
            let noncomm = inner
                .iter()
                .any(|&a| inner.iter().any(|&b| s.mul(a, b) != s.mul(b, a)));
            log.check("P is non-commutative", noncomm);
            let no_zd = match z {
                Some(z) => inner.iter().all(|&a| {
                    inner
                        .iter()
                        .all(|&b| !(a != z && b != z && s.mul(a, b) == z))
                }),
                None => true,
            };
            log.check("P has no zero divisors", no_zd);
            if log.all_pass() {
                return Ok(certificate(
                    "s-semidivision-ring",
                    name,
                    Witness::Nested { outer: labels_of(s, &outer), inner: labels_of(s, &inner) },
                    true,
                    log,
                ));
            }
        }
    }
    Err(NotFound { complete: true, reason: "no semidivision ring found".into() })
}

/// Prime semifield: a semifield with no proper semifield subset other than
/// trivia. The returned witness, when the structure is not prime, is the
/// offending subsemifield.
pub fn prime_semifield_witness(s: &Structure) -> Option<Vec<usize>> {
    semifield_subsets(s, true)
        .into_iter()
        .map(|(subset, _, _)| subset)
        .find(|subset| subset.len() >= 2)
}

pub fn is_prime_semifield(s: &Structure) -> bool {
    is_semifield(s) && prime_semifield_witness(s).is_none()
}

/// k-semi algebra clauses: nonempty proper subset, closed under both
/// operations, absorbing multiplication by every ambient element.
pub(crate) fn k_semi_algebra_clauses(
    s: &Structure,
    ambient: &[usize],
    subset: &[usize],
    log: &mut Log,
) -> bool {
    let zero = subalgebra::local_additive_identity(s, ambient);
    let nontrivial = !subset.is_empty()
        && subset.len() < ambient.len()
        && zero.map_or(true, |z| subset != [z]);
    log.check("nonempty proper subset, not just {0}", nontrivial);
    let closed = subset.iter().all(|&a| {
        subset
            .iter()
            .all(|&b| subset.contains(&s.add(a, b)) && subset.contains(&s.mul(a, b)))
    });
    log.check("closed under addition and multiplication", closed);
    let absorbing = ambient.iter().all(|&x| {
        subset
            .iter()
            .all(|&a| subset.contains(&s.mul(x, a)) && subset.contains(&s.mul(a, x)))
    });
    log.check("absorbs multiplication by every ambient element", absorbing);
    nontrivial && closed && absorbing
}

/// S-semifield of level I: the subject is a semifield containing a
/// k-semi algebra.
pub fn certify_s_semifield_i(s: &Structure, name: &str) -> CertResult {
    if !is_semifield(s) {
        return Err(NotFound { complete: true, reason: "subject is not a semifield".into() });
    }
    if s.n() > EXHAUSTIVE_LIMIT {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    let ambient: Vec<usize> = (0..s.n()).collect();
    for subset in subset_candidates(s.n(), &[s.zero().unwrap()]) {
        let mut log = Log::new();
        log.check("subject is a semifield", true);
        if k_semi_algebra_clauses(s, &ambient, &subset, &mut log) {
            return Ok(certificate(
                "s-semifield-1",
                name,
                Witness::Labels(labels_of(s, &subset)),
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no k-semi algebra inside the semifield".into() })
}

/// S-weak semifield: a semiring with a semifield subset P that is itself an
/// S-semifield of level I (it hosts a k-semi algebra over P).
pub fn certify_s_weak_semifield(s: &Structure, name: &str) -> CertResult {
    if s.n() > EXHAUSTIVE_LIMIT {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    for (p, _, _) in semifield_subsets(s, false) {
        for inner_mask in 1u32..(1 << p.len()) {
            let t: Vec<usize> = p
                .iter()
                .enumerate()
                .filter(|&(i, _)| inner_mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let mut log = Log::new();
            log.check("P is a semifield subset", true);
            if k_semi_algebra_clauses(s, &p, &t, &mut log) {
                return Ok(certificate(
                    "s-weak-semifield",
                    name,
                    Witness::Nested { outer: labels_of(s, &p), inner: labels_of(s, &t) },
                    true,
                    log,
                ));
            }
        }
    }
    Err(NotFound {
        complete: true,
        reason: "no semifield subset hosts a k-semi algebra".into(),
    })
}

/// S-semifield of level II: a field strictly inside the subject.
pub fn certify_s_semifield_ii(s: &Structure, name: &str) -> CertResult {
    match certify_s_semiring_ii(s, name) {
        Ok(mut c) => {
            c.property = "s-semifield-2".into();
            Ok(c)
        }
        Err(e) => Err(e),
    }
}
