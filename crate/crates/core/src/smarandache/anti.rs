//! Smarandache anti structures: rings or fields holding subsets that are
//! only semirings (S-anti semiring) or semifields (S-anti semifield), plus
//! S-anti ideals. Finite subjects are searched exhaustively; archetype
//! subjects are certified from symbolic witnesses in `verify`.

use crate::structure::Structure;
use crate::subalgebra;

use super::finite::{labels_of, subset_semifield_clauses};
use super::{certificate, CertResult, Log, NotFound, Witness};

/// Clauses for "subset is just a semiring, not a ring": closed under both
/// operations (associativity, commutativity of + and distributivity are
/// inherited), and it fails ring-hood — no additive identity of its own, or
/// a missing additive inverse.
pub(crate) fn semiring_not_ring_clauses(
    s: &Structure,
    subset: &[usize],
    log: &mut Log,
) -> bool {
    log.check("subset is nonempty", !subset.is_empty());
    let closed = subset.iter().all(|&a| {
        subset
            .iter()
            .all(|&b| subset.contains(&s.add(a, b)) && subset.contains(&s.mul(a, b)))
    });
    log.check("closed under addition and multiplication", closed);
    let not_ring = match subalgebra::local_additive_identity(s, subset) {
        None => true,
        Some(z) => !subset
            .iter()
            .all(|&a| subset.iter().any(|&b| s.add(a, b) == z)),
    };
    log.check("not a ring (no additive identity or missing inverses)", not_ring);
    log.all_pass()
}

/// S-anti semiring: the ring contains a subset that is a semiring but not a
/// ring. Exhaustive for n ≤ 16.
pub fn certify_s_anti_semiring(s: &Structure, name: &str) -> CertResult {
    if !s.flags().ring {
        return Err(NotFound { complete: true, reason: "subject is not a ring".into() });
    }
    if s.n() > 16 {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    for mask in 1u32..(1 << s.n()) {
        let subset: Vec<usize> = (0..s.n()).filter(|&i| mask >> i & 1 == 1).collect();
        let mut log = Log::new();
        if semiring_not_ring_clauses(s, &subset, &mut log) {
            return Ok(certificate(
                "s-anti-semiring",
                name,
                Witness::Labels(labels_of(s, &subset)),
                true,
                log,
            ));
        }
    }
    Err(NotFound {
        complete: true,
        reason: "every closed subset is a ring".into(),
    })
}

/// S-anti semifield: the ring or field contains a subset that is a
/// semifield under the induced operations.
pub fn certify_s_anti_semifield(s: &Structure, name: &str) -> CertResult {
    if !s.flags().ring {
        return Err(NotFound { complete: true, reason: "subject is not a ring".into() });
    }
    if s.n() > 16 {
        return Err(NotFound { complete: false, reason: "structure too large".into() });
    }
    for mask in 1u32..(1 << s.n()) {
        let subset: Vec<usize> = (0..s.n()).filter(|&i| mask >> i & 1 == 1).collect();
        if subset.len() == s.n() {
            continue;
        }
        let mut log = Log::new();
        if subset_semifield_clauses(s, &subset, &mut log).is_some() && log.all_pass() {
            return Ok(certificate(
                "s-anti-semifield",
                name,
                Witness::Labels(labels_of(s, &subset)),
                true,
                log,
            ));
        }
    }
    Err(NotFound { complete: true, reason: "no semifield subset".into() })
}

/// S-anti ideal: inside a declared subsemifield T of the ring, a subset P
/// that is a semiring with P·T ⊆ P.
pub fn certify_s_anti_ideal(
    s: &Structure,
    p: &[usize],
    t: &[usize],
    name: &str,
) -> CertResult {
    let mut log = Log::new();
    log.check("T is a semifield inside the subject", {
        let mut tl = Log::new();
        subset_semifield_clauses(s, t, &mut tl).is_some() && tl.all_pass()
    });
    log.check("P lies inside T", p.iter().all(|x| t.contains(x)));
    let closed = p.iter().all(|&a| {
        p.iter()
            .all(|&b| p.contains(&s.add(a, b)) && p.contains(&s.mul(a, b)))
    });
    log.check("P is a semiring (closed under both operations)", closed);
    let absorbed = p
        .iter()
        .all(|&x| t.iter().all(|&y| p.contains(&s.mul(x, y))));
    log.check("p·t stays in P", absorbed);
    if log.all_pass() {
        Ok(certificate(
            "s-anti-ideal",
            name,
            Witness::Nested { outer: labels_of(s, t), inner: labels_of(s, p) },
            true,
            log,
        ))
    } else {
        Err(NotFound {
            complete: true,
            reason: log.first_failure().unwrap().text.clone(),
        })
    }
}
