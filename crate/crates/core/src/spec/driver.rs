//! Property routing: one entry point that takes a built subject, a property
//! name and an optional witness payload, and returns a certificate or a
//! NotFound with its completeness flag. The CLI, the claims corpus and the
//! FFI all go through here.

use crate::poset::HasseDiagram;
use crate::smarandache::{
    arch_s_idempotents_absent, certify_arch_anti, certify_arch_element,
    certify_arch_s_semifield_i, certify_arch_s_semiring_ii, certify_matrix,
    certify_s_anti_ideal, certify_s_anti_semifield, certify_s_anti_semiring, certify_s_dual_ideal,
    certify_s_ideal, certify_s_pseudo_dual_ideal, certify_s_pseudo_ideal,
    certify_s_pseudo_subsemiring, certify_s_semidivision_ring, certify_s_semifield_i,
    certify_s_semifield_ii, certify_s_semiring_i, certify_s_semiring_ii, certify_s_subsemiring,
    certify_s_weak_semifield, certify_semifield, certify_tag_formal_anti_semiring,
    find_s_anti_zero_divisors, find_s_idempotents, find_s_units, find_s_zero_divisors,
    is_prime_semifield, prime_semifield_witness, resolve_labels, CertResult, Certificate,
    IdealSide, Log, NotFound, Witness,
};
use crate::structure::Structure;

use super::Subject;

fn need_witness(property: &str) -> NotFound {
    NotFound {
        complete: false,
        reason: format!("property {property:?} needs a witness payload on this subject"),
    }
}

fn labelled_subset(s: &Structure, witness: Option<&Witness>) -> Result<Vec<usize>, NotFound> {
    match witness {
        Some(Witness::Labels(l)) => {
            let mut v = resolve_labels(s, l)
                .map_err(|e| NotFound { complete: false, reason: e })?;
            v.sort_unstable();
            v.dedup();
            Ok(v)
        }
        _ => Err(NotFound {
            complete: false,
            reason: "expected a labelled subset witness".into(),
        }),
    }
}

/// The first certificate of a search list, or a complete NotFound.
fn first_of(mut certs: Vec<Certificate>, what: &str) -> CertResult {
    if certs.is_empty() {
        Err(NotFound { complete: true, reason: format!("no {what} exist") })
    } else {
        Ok(certs.remove(0))
    }
}

pub fn certify(
    subject: &Subject,
    property: &str,
    witness: Option<&Witness>,
    name: &str,
) -> CertResult {
    match subject {
        Subject::Finite(s) => match property {
            "semifield" => certify_semifield(s, name),
            "prime-semifield" => {
                if is_prime_semifield(s) {
                    let mut log = Log::new();
                    log.check("structure is a semifield", true);
                    log.check("no proper subsemifield exists", true);
                    Ok(crate::smarandache::Certificate {
                        property: "prime-semifield".into(),
                        subject: name.into(),
                        witness: Witness::None,
                        complete_search: true,
                        transcript: log.into_clauses(),
                    })
                } else {
                    let reason = match prime_semifield_witness(s) {
                        Some(w) => format!(
                            "proper subsemifield {:?}",
                            w.iter().map(|&i| s.label(i)).collect::<Vec<_>>()
                        ),
                        None => "not a semifield".into(),
                    };
                    Err(NotFound { complete: true, reason })
                }
            }
            "s-semiring-1" => certify_s_semiring_i(s, name),
            "s-semiring-2" => certify_s_semiring_ii(s, name),
            "s-semifield-1" => certify_s_semifield_i(s, name),
            "s-semifield-2" => certify_s_semifield_ii(s, name),
            "s-weak-semifield" => certify_s_weak_semifield(s, name),
            "s-subsemiring" => certify_s_subsemiring(s, &labelled_subset(s, witness)?, name),
            "s-ideal" => certify_s_ideal(s, &labelled_subset(s, witness)?, IdealSide::TwoSided, name),
            "s-ideal-left" => certify_s_ideal(s, &labelled_subset(s, witness)?, IdealSide::Left, name),
            "s-ideal-right" => {
                certify_s_ideal(s, &labelled_subset(s, witness)?, IdealSide::Right, name)
            }
            "s-pseudo-subsemiring" => {
                certify_s_pseudo_subsemiring(s, &labelled_subset(s, witness)?, name)
            }
            "s-dual-ideal" => certify_s_dual_ideal(s, &labelled_subset(s, witness)?, name),
            "s-pseudo-ideal" => certify_s_pseudo_ideal(s, &labelled_subset(s, witness)?, name),
            "s-pseudo-dual-ideal" => {
                certify_s_pseudo_dual_ideal(s, &labelled_subset(s, witness)?, name)
            }
            "s-semidivision-ring" => certify_s_semidivision_ring(s, name),
            "s-zero-divisors" => first_of(find_s_zero_divisors(s, name), "S-zero divisors"),
            "s-anti-zero-divisors" => {
                first_of(find_s_anti_zero_divisors(s, name), "S-anti zero divisors")
            }
            "s-idempotents" => first_of(find_s_idempotents(s, name), "S-idempotents"),
            "s-units" => first_of(find_s_units(s, name), "S-units"),
            "s-anti-semiring" => certify_s_anti_semiring(s, name),
            "s-anti-semifield" => certify_s_anti_semifield(s, name),
            "s-anti-ideal" => match witness {
                Some(Witness::Nested { outer, inner }) => {
                    let t = resolve_labels(s, outer)
                        .map_err(|e| NotFound { complete: false, reason: e })?;
                    let p = resolve_labels(s, inner)
                        .map_err(|e| NotFound { complete: false, reason: e })?;
                    certify_s_anti_ideal(s, &p, &t, name)
                }
                _ => Err(need_witness(property)),
            },
            other => Err(NotFound {
                complete: false,
                reason: format!("unknown property {other:?} for a finite subject"),
            }),
        },
        Subject::Arch(a) => match property {
            "s-semiring-2" | "s-semifield-2" => match witness {
                Some(w @ Witness::Tuples(_)) => {
                    let mut cert = certify_arch_s_semiring_ii(a, w, name)?;
                    cert.property = property.into();
                    Ok(cert)
                }
                _ => Err(need_witness(property)),
            },
            "s-semifield-1" => certify_arch_s_semifield_i(a, name),
            "s-zero-divisors" | "s-zero-divisor" => match witness {
                Some(w) => certify_arch_element(a, "s-zero-divisor", w, name),
                None => Err(need_witness(property)),
            },
            "s-anti-zero-divisors" | "s-anti-zero-divisor" => match witness {
                Some(w) => certify_arch_element(a, "s-anti-zero-divisor", w, name),
                None => Err(need_witness(property)),
            },
            "s-idempotents" | "s-idempotent" => match witness {
                Some(w) => certify_arch_element(a, "s-idempotent", w, name),
                None => match arch_s_idempotents_absent(a) {
                    Some(true) => Err(NotFound {
                        complete: true,
                        reason: "b² = a has only the excluded solution b = a over Z0 tuples".into(),
                    }),
                    _ => Err(need_witness(property)),
                },
            },
            "s-anti-semiring" | "s-anti-semifield" => match witness {
                Some(w) => certify_arch_anti(a, property, w, name),
                None => Err(need_witness(property)),
            },
            "s-anti-ideal" => match witness {
                Some(w @ Witness::NestedCoordSets { .. }) => {
                    certify_arch_anti(a, property, w, name)
                }
                _ => Err(need_witness(property)),
            },
            other => Err(NotFound {
                complete: false,
                reason: format!("property {other:?} is not supported on archetype subjects"),
            }),
        },
        Subject::MatrixArch(m) => match (property, witness) {
            ("s-subsemiring" | "s-semidivision-ring" | "s-weak-semifield", Some(w)) => {
                certify_matrix(m, property, w, name)
            }
            ("s-zero-divisors" | "s-zero-divisor", Some(w)) => {
                certify_matrix(m, "s-zero-divisor", w, name)
            }
            ("s-anti-zero-divisors" | "s-anti-zero-divisor", Some(w)) => {
                certify_matrix(m, "s-anti-zero-divisor", w, name)
            }
            (p, None) => Err(need_witness(p)),
            (other, _) => Err(NotFound {
                complete: false,
                reason: format!("property {other:?} is not supported on matrix archetypes"),
            }),
        },
        Subject::TagFormal(t) => match property {
            "s-anti-semiring" => certify_tag_formal_anti_semiring(t, name),
            other => Err(NotFound {
                complete: false,
                reason: format!("property {other:?} is not supported on tag formal algebras"),
            }),
        },
        Subject::Formal(f) => Err(NotFound {
            complete: false,
            reason: format!(
                "{} has {} elements; certification needs a materialized table",
                f.name,
                f.size()
            ),
        }),
        Subject::Magma(_) | Subject::Poly { .. } => Err(NotFound {
            complete: false,
            reason: "certification applies to two-operation structures".into(),
        }),
    }
}

/// Verify a certificate against a subject.
pub fn verify(subject: &Subject, cert: &Certificate) -> Result<(), String> {
    use crate::smarandache::SubjectRef;
    let sref = match subject {
        Subject::Finite(s) => SubjectRef::Finite(s),
        Subject::Arch(a) => SubjectRef::Arch(a),
        Subject::MatrixArch(m) => SubjectRef::MatrixArch(m),
        Subject::Formal(f) => SubjectRef::Formal(f),
        Subject::TagFormal(t) => SubjectRef::TagFormal(t),
        _ => return Err("subject does not support certificates".into()),
    };
    crate::smarandache::verify(&sref, cert)
        .map(|_| ())
        .map_err(|e| e.to_string())
}

/// The Hasse diagram of a lattice-derived subject.
pub fn hasse_of(subject: &Subject) -> Result<HasseDiagram, String> {
    match subject {
        Subject::Finite(s) => {
            let order = s
                .derived_order()
                .ok_or("subject is not lattice-derived; no order to draw")?;
            Ok(crate::poset::hasse(&order))
        }
        Subject::Magma(m) => {
            // idempotent commutative join table: derive the order directly
            if !m.table.is_commutative() || !m.table.is_idempotent() {
                return Err("subject is not join-derived; no order to draw".into());
            }
            let mut pairs = Vec::new();
            for a in 0..m.n() {
                for b in 0..m.n() {
                    if m.op(a, b) == b {
                        pairs.push((a, b));
                    }
                }
            }
            let p = crate::poset::poset_from_leq(&m.labels, &pairs)
                .map_err(|e| e.to_string())?;
            Ok(crate::poset::hasse(&p))
        }
        _ => Err("Hasse diagrams are drawn for finite lattice-derived subjects".into()),
    }
}
