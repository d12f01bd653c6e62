//! Certificate verification: every clause of the defining property is
//! replayed from the witness payload alone, with no reference to the search
//! that produced it. Archetype subjects only ever go through this path —
//! their certificates are built from supplied witnesses via the
//! `certify_arch_*` / `certify_matrix_*` / `certify_tag_*` functions below.



use crate::archetype::{
    list_closed, list_is_field, ArchetypeStructure, Element, Matrix, MatrixArchetype,
    MatrixPattern, Tag,
};
use crate::constructions::formal::{FormalAlgebra, FormalSum, TagFormalAlgebra};
use crate::structure::Structure;

use super::elements::{
    s_anti_zero_divisor_clauses, s_idempotent_clauses, s_unit_clauses, s_zero_divisor_clauses,
};
use super::finite::{
    is_prime_semifield, is_semifield, k_semi_algebra_clauses, resolve_labels,
    subset_field_clauses, subset_semifield_clauses,
};
use super::{certificate, CertResult, Certificate, Clause, CoordSet, Log, NotFound, VerifyError, Witness};

/// The subject a certificate talks about.
pub enum SubjectRef<'a> {
    Finite(&'a Structure),
    Arch(&'a ArchetypeStructure),
    MatrixArch(&'a MatrixArchetype),
    Formal(&'a FormalAlgebra),
    TagFormal(&'a TagFormalAlgebra),
}

/// Replay every clause of `cert` against the subject. Ok(transcript) means
/// all clauses passed; the failing clause is reported otherwise.
pub fn verify(subject: &SubjectRef<'_>, cert: &Certificate) -> Result<Vec<Clause>, VerifyError> {
    let log = replay(subject, &cert.property, &cert.witness)?;
    if log.all_pass() {
        Ok(log.into_clauses())
    } else {
        Err(VerifyError::ClauseFailed(log.first_failure().unwrap().clone()))
    }
}

pub fn replay(
    subject: &SubjectRef<'_>,
    property: &str,
    witness: &Witness,
) -> Result<Log, VerifyError> {
    match subject {
        SubjectRef::Finite(s) => replay_finite(s, property, witness),
        SubjectRef::Arch(a) => replay_arch(a, property, witness),
        SubjectRef::MatrixArch(m) => replay_matrix(m, property, witness),
        SubjectRef::Formal(f) => replay_formal(f, property, witness),
        SubjectRef::TagFormal(t) => replay_tag_formal(t, property, witness),
    }
}

// ---------------------------------------------------------------------------
// finite subjects

fn subset_of(s: &Structure, labels: &[String]) -> Result<Vec<usize>, VerifyError> {
    resolve_labels(s, labels).map_err(VerifyError::BadElement)
}

fn nested_of(
    s: &Structure,
    witness: &Witness,
) -> Result<(Vec<usize>, Vec<usize>), VerifyError> {
    match witness {
        Witness::Nested { outer, inner } => Ok((subset_of(s, outer)?, subset_of(s, inner)?)),
        _ => Err(VerifyError::WitnessShape("expected a nested subset witness".into())),
    }
}

fn labels4(s: &Structure, witness: &Witness) -> Result<[usize; 4], VerifyError> {
    match witness {
        Witness::Labels(l) if l.len() == 4 => {
            let v = subset_of(s, l)?;
            Ok([v[0], v[1], v[2], v[3]])
        }
        _ => Err(VerifyError::WitnessShape("expected four labelled elements".into())),
    }
}

fn replay_finite(s: &Structure, property: &str, witness: &Witness) -> Result<Log, VerifyError> {
    let mut log = Log::new();
    match property {
        "semifield" => {
            log.check("structure is a semifield", is_semifield(s));
        }
        "prime-semifield" => {
            log.check("structure is a prime semifield", is_prime_semifield(s));
        }
        "s-semiring-1" => {
            let Witness::Labels(l) = witness else {
                return Err(VerifyError::WitnessShape("expected a labelled subset".into()));
            };
            let subset = sorted(subset_of(s, l)?);
            log.check("witness is a proper subset", subset.len() < s.n());
            log.check("witness is not the trivial {0}", subset.len() >= 2);
            subset_semifield_clauses(s, &subset, &mut log);
        }
        "s-semiring-2" | "s-semifield-2" => {
            let Witness::Labels(l) = witness else {
                return Err(VerifyError::WitnessShape("expected a labelled subset".into()));
            };
            let subset = sorted(subset_of(s, l)?);
            log.check("witness is a proper subset", subset.len() < s.n());
            subset_field_clauses(s, &subset, &mut log);
        }
        "s-subsemiring" => {
            let (outer, inner) = nested_of(s, witness)?;
            let (outer, inner) = (sorted(outer), sorted(inner));
            replay_s_subsemiring(s, &outer, &inner, &mut log);
        }
        "s-ideal" | "s-ideal-left" | "s-ideal-right" => {
            let (outer, inner) = nested_of(s, witness)?;
            let (outer, inner) = (sorted(outer), sorted(inner));
            replay_s_subsemiring(s, &outer, &inner, &mut log);
            let right = outer
                .iter()
                .all(|&p| inner.iter().all(|&a| inner.contains(&s.mul(a, p))));
            let left = outer
                .iter()
                .all(|&p| inner.iter().all(|&a| inner.contains(&s.mul(p, a))));
            match property {
                "s-ideal-right" => {
                    log.check("a·p stays in the semifield A", right);
                }
                "s-ideal-left" => {
                    log.check("p·a stays in the semifield A", left);
                }
                _ => {
                    log.check("a·p stays in the semifield A", right);
                    log.check("p·a stays in the semifield A", left);
                }
            }
        }
        "s-pseudo-subsemiring" => {
            let (host, inner) = nested_of(s, witness)?;
            let (host, inner) = (sorted(host), sorted(inner));
            log.check(
                "subset strictly contained in a proper subset P",
                inner.iter().all(|x| host.contains(x))
                    && inner.len() < host.len()
                    && host.len() < s.n(),
            );
            let mut sf = Log::new();
            let host_semifield = subset_semifield_clauses(s, &host, &mut sf).is_some();
            let host_s_sub = hosts_proper_semifield(s, &host);
            log.check("P is a semifield or an S-subsemiring", host_semifield || host_s_sub);
        }
        "s-dual-ideal" => {
            let (outer, inner) = nested_of(s, witness)?;
            let (outer, inner) = (sorted(outer), sorted(inner));
            replay_s_subsemiring(s, &outer, &inner, &mut log);
            if let Some(&z) = inner.first() {
                let z = crate::subalgebra::local_additive_identity(s, &inner).unwrap_or(z);
                let dual = outer.iter().all(|&p| {
                    inner
                        .iter()
                        .filter(|&&a| a != z)
                        .all(|&a| inner.contains(&s.add(a, p)))
                });
                log.check("a + p stays in the semifield A for nonzero a", dual);
            }
        }
        "s-pseudo-ideal" => {
            let (host, inner) = nested_of(s, witness)?;
            let (host, inner) = (sorted(host), sorted(inner));
            log.check(
                "subset strictly contained in a semifield A",
                inner.iter().all(|x| host.contains(x))
                    && inner.len() < host.len()
                    && host.len() < s.n(),
            );
            subset_semifield_clauses(s, &host, &mut log);
            let absorbed = inner.iter().all(|&p| {
                host.iter()
                    .all(|&a| inner.contains(&s.mul(a, p)) && inner.contains(&s.mul(p, a)))
            });
            log.check("a·p and p·a fall back into the subset", absorbed);
        }
        "s-pseudo-dual-ideal" => {
            let (host, inner) = nested_of(s, witness)?;
            let (host, inner) = (sorted(host), sorted(inner));
            log.check(
                "subset strictly contained in a semifield A",
                inner.iter().all(|x| host.contains(x))
                    && inner.len() < host.len()
                    && host.len() < s.n(),
            );
            subset_semifield_clauses(s, &host, &mut log);
            let absorbed = inner
                .iter()
                .all(|&p| host.iter().all(|&a| inner.contains(&s.add(p, a))));
            log.check("p + a falls back into the subset", absorbed);
        }
        "s-semidivision-ring" => {
            let (outer, inner) = nested_of(s, witness)?;
            let (outer, inner) = (sorted(outer), sorted(inner));
            log.check("A is a proper subset", outer.len() < s.n());
            log.check(
                "A closed under addition and multiplication",
                crate::subalgebra::is_closed(s, &outer),
            );
            log.check("A hosts a proper semifield", hosts_proper_semifield(s, &outer));
            let out_noncomm = outer
                .iter()
                .any(|&a| outer.iter().any(|&b| s.mul(a, b) != s.mul(b, a)));
            log.check("A is non-commutative", out_noncomm);
            log.check(
                "P is a proper subset of A",
                inner.iter().all(|x| outer.contains(x)) && inner.len() < outer.len(),
            );
            log.check(
                "P closed under addition and multiplication",
                crate::subalgebra::is_closed(s, &inner),
            );
            let noncomm = inner
                .iter()
                .any(|&a| inner.iter().any(|&b| s.mul(a, b) != s.mul(b, a)));
            log.check("P is non-commutative", noncomm);
            let no_zd = s.zero().map_or(true, |z| {
                inner.iter().all(|&a| {
                    inner
                        .iter()
                        .all(|&b| !(a != z && b != z && s.mul(a, b) == z))
                })
            });
            log.check("P has no zero divisors", no_zd);
        }
        "s-zero-divisor" => {
            let [a, b, x, y] = labels4(s, witness)?;
            s_zero_divisor_clauses(s, a, b, x, y, &mut log);
        }
        "s-anti-zero-divisor" => {
            let [x, y, a, b] = labels4(s, witness)?;
            s_anti_zero_divisor_clauses(s, x, y, a, b, &mut log);
        }
        "s-idempotent" => {
            let Witness::Labels(l) = witness else {
                return Err(VerifyError::WitnessShape("expected two labelled elements".into()));
            };
            let v = subset_of(s, l)?;
            if v.len() != 2 {
                return Err(VerifyError::WitnessShape("expected two labelled elements".into()));
            }
            s_idempotent_clauses(s, v[0], v[1], &mut log);
        }
        "s-unit" => {
            let [x, y, a, b] = labels4(s, witness)?;
            s_unit_clauses(s, x, y, a, b, &mut log);
        }
        "s-semifield-1" => {
            let Witness::Labels(l) = witness else {
                return Err(VerifyError::WitnessShape("expected a labelled subset".into()));
            };
            let subset = sorted(subset_of(s, l)?);
            log.check("subject is a semifield", is_semifield(s));
            let ambient: Vec<usize> = (0..s.n()).collect();
            k_semi_algebra_clauses(s, &ambient, &subset, &mut log);
        }
        "s-weak-semifield" => {
            let (p, t) = nested_of(s, witness)?;
            let (p, t) = (sorted(p), sorted(t));
            subset_semifield_clauses(s, &p, &mut log);
            log.check(
                "T is nonempty, differs from P and from the whole set",
                !t.is_empty() && t != p && t.len() < s.n(),
            );
            log.check(
                "T closed under addition and multiplication",
                crate::subalgebra::is_closed(s, &t),
            );
            let absorbed = p
                .iter()
                .all(|&x| t.iter().all(|&a| t.contains(&s.mul(x, a)) && t.contains(&s.mul(a, x))));
            log.check("T absorbs multiplication by every element of P", absorbed);
        }
        "s-anti-semiring" => {
            let Witness::Labels(l) = witness else {
                return Err(VerifyError::WitnessShape("expected a labelled subset".into()));
            };
            let subset = sorted(subset_of(s, l)?);
            log.check("subject is a ring", s.flags().ring);
            super::anti::semiring_not_ring_clauses(s, &subset, &mut log);
        }
        "s-anti-semifield" => {
            let Witness::Labels(l) = witness else {
                return Err(VerifyError::WitnessShape("expected a labelled subset".into()));
            };
            let subset = sorted(subset_of(s, l)?);
            log.check("subject is a ring", s.flags().ring);
            log.check("witness is a proper subset", subset.len() < s.n());
            subset_semifield_clauses(s, &subset, &mut log);
        }
        "s-anti-ideal" => {
            let (t, p) = nested_of(s, witness)?;
            let (t, p) = (sorted(t), sorted(p));
            subset_semifield_clauses(s, &t, &mut log);
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
        }
        other => return Err(VerifyError::UnknownProperty(other.to_string())),
    }
    Ok(log)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

fn replay_s_subsemiring(s: &Structure, outer: &[usize], inner: &[usize], log: &mut Log) {
    log.check("subset is nonempty and proper", !outer.is_empty() && outer.len() < s.n());
    log.check(
        "subset closed under addition and multiplication",
        crate::subalgebra::is_closed(s, outer),
    );
    log.check(
        "subset contains an additive identity for itself",
        crate::subalgebra::local_additive_identity(s, outer).is_some(),
    );
    log.check(
        "semifield witness lies strictly inside the subset",
        inner.iter().all(|x| outer.contains(x)) && inner.len() < outer.len(),
    );
    subset_semifield_clauses(s, inner, log);
}

/// Does the subset contain a proper semifield (at least two elements)?
fn hosts_proper_semifield(s: &Structure, subset: &[usize]) -> bool {
    if subset.len() > 20 {
        return false;
    }
    for mask in 1u32..(1 << subset.len()) {
        let inner: Vec<usize> = subset
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        if inner.len() >= subset.len() || inner.len() < 2 {
            continue;
        }
        let mut log = Log::new();
        if subset_semifield_clauses(s, &inner, &mut log).is_some() && log.all_pass() {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// generic element-level clause replay

fn gen_s_zero_divisor_clauses<E: Clone + PartialEq>(
    mul: &dyn Fn(&E, &E) -> E,
    is_zero: &dyn Fn(&E) -> bool,
    a: &E,
    b: &E,
    x: &E,
    y: &E,
    log: &mut Log,
) -> bool {
    log.check(
        "a and b are nonzero with a·b = 0",
        !is_zero(a) && !is_zero(b) && is_zero(&mul(a, b)),
    );
    log.check(
        "x and y are distinct and avoid {a, b, 0}",
        x != y && ![a, b].contains(&x) && ![a, b].contains(&y) && !is_zero(x) && !is_zero(y),
    );
    log.check("x·a = 0 or a·x = 0", is_zero(&mul(x, a)) || is_zero(&mul(a, x)));
    log.check("b·y = 0 or y·b = 0", is_zero(&mul(b, y)) || is_zero(&mul(y, b)));
    log.check("x·y ≠ 0 or y·x ≠ 0", !is_zero(&mul(x, y)) || !is_zero(&mul(y, x)));
    log.all_pass()
}

fn gen_s_anti_zero_divisor_clauses<E: Clone + PartialEq>(
    mul: &dyn Fn(&E, &E) -> E,
    is_zero: &dyn Fn(&E) -> bool,
    x: &E,
    y: &E,
    a: &E,
    b: &E,
    log: &mut Log,
) -> bool {
    log.check("x·y ≠ 0", !is_zero(&mul(x, y)));
    log.check(
        "a and b avoid {0, x, y}",
        !is_zero(a) && !is_zero(b) && a != x && a != y && b != x && b != y,
    );
    log.check("a·x ≠ 0 or x·a ≠ 0", !is_zero(&mul(a, x)) || !is_zero(&mul(x, a)));
    log.check("b·y ≠ 0 or y·b ≠ 0", !is_zero(&mul(b, y)) || !is_zero(&mul(y, b)));
    log.check("a·b = 0 or b·a = 0", is_zero(&mul(a, b)) || is_zero(&mul(b, a)));
    log.all_pass()
}

// ---------------------------------------------------------------------------
// archetype tuple subjects

fn parse_tuples(a: &ArchetypeStructure, witness: &Witness) -> Result<Vec<Element>, VerifyError> {
    let raw = match witness {
        Witness::Tuples(t) => t,
        _ => return Err(VerifyError::WitnessShape("expected element tuples".into())),
    };
    raw.iter()
        .map(|coords| a.parse_element(coords).map_err(|e| VerifyError::BadElement(e.to_string())))
        .collect()
}

fn replay_arch(a: &ArchetypeStructure, property: &str, witness: &Witness) -> Result<Log, VerifyError> {
    let mut log = Log::new();
    match property {
        "s-semiring-2" | "s-semifield-2" => {
            let list = parse_tuples(a, witness)?;
            log.check("witness subset is closed", list_closed(a, &list));
            match list_is_field(a, &list) {
                Ok((z, u)) => {
                    log.check(
                        format!(
                            "witness is a field with zero {} and identity {}",
                            a.render(&z),
                            a.render(&u)
                        ),
                        true,
                    );
                }
                Err(reason) => {
                    log.check(format!("witness is a field ({reason})"), false);
                }
            }
        }
        "s-zero-divisor" => {
            let list = parse_tuples(a, witness)?;
            if list.len() != 4 {
                return Err(VerifyError::WitnessShape("expected (a, b, x, y)".into()));
            }
            let mul = |p: &Element, q: &Element| a.mul(p, q);
            let is_zero = |p: &Element| a.is_zero(p);
            gen_s_zero_divisor_clauses(&mul, &is_zero, &list[0], &list[1], &list[2], &list[3], &mut log);
        }
        "s-anti-zero-divisor" => {
            let list = parse_tuples(a, witness)?;
            if list.len() != 4 {
                return Err(VerifyError::WitnessShape("expected (x, y, a, b)".into()));
            }
            let mul = |p: &Element, q: &Element| a.mul(p, q);
            let is_zero = |p: &Element| a.is_zero(p);
            gen_s_anti_zero_divisor_clauses(&mul, &is_zero, &list[0], &list[1], &list[2], &list[3], &mut log);
        }
        "s-idempotent" => {
            let list = parse_tuples(a, witness)?;
            if list.len() != 2 {
                return Err(VerifyError::WitnessShape("expected (a, b)".into()));
            }
            let (x, b) = (&list[0], &list[1]);
            log.check("a is a nonzero idempotent", !a.is_zero(x) && &a.mul(x, x) == x);
            log.check("b differs from a and b² = a", b != x && &a.mul(b, b) == x);
            let first = a.mul(x, b) == *b || a.mul(b, x) == *b;
            let second = a.mul(b, x) == *x || a.mul(x, b) == *x;
            log.check("exactly one of (ab = b or ba = b), (ba = a or ab = a)", first ^ second);
        }
        "s-semifield-1" => {
            let Witness::CoordSets(sets) = witness else {
                return Err(VerifyError::WitnessShape("expected coordinate sets".into()));
            };
            replay_coordset_k_algebra(a, sets, &mut log)?;
        }
        "s-anti-semiring" => {
            let Witness::CoordSets(sets) = witness else {
                return Err(VerifyError::WitnessShape("expected coordinate sets".into()));
            };
            replay_coordset_anti_semiring(a, sets, &mut log)?;
        }
        "s-anti-semifield" => {
            let Witness::CoordSets(sets) = witness else {
                return Err(VerifyError::WitnessShape("expected coordinate sets".into()));
            };
            replay_coordset_anti_semifield(a, sets, &mut log)?;
        }
        "s-anti-ideal" => {
            let Witness::NestedCoordSets { outer, inner } = witness else {
                return Err(VerifyError::WitnessShape("expected nested coordinate sets".into()));
            };
            replay_coordset_anti_ideal(a, outer, inner, &mut log)?;
        }
        other => return Err(VerifyError::UnknownProperty(other.to_string())),
    }
    Ok(log)
}

fn tag_factors(a: &ArchetypeStructure) -> Result<Vec<Tag>, VerifyError> {
    a.factors
        .iter()
        .map(|f| match f {
            crate::archetype::Factor::Tag(t) => Ok(*t),
            _ => Err(VerifyError::WitnessShape(
                "coordinate-set witnesses need pure tag factors".into(),
            )),
        })
        .collect()
}

/// Per-coordinate facts about a symbolic subset, each decided analytically
/// for the supported (tag, set) pairs.
fn cs_contains_zero(cs: CoordSet) -> bool {
    !matches!(cs, CoordSet::Positive)
}

fn cs_closed(_tag: Tag, _cs: CoordSet) -> bool {
    // every supported coordinate set is closed under + and ·:
    // sums/products of nonnegatives, positives, nonneg integers and
    // multiples of p stay in the set
    true
}

fn cs_proper(tag: Tag, cs: CoordSet) -> bool {
    match cs {
        CoordSet::Zero => true,
        CoordSet::All => false,
        CoordSet::Nonneg => tag.is_group_like(),
        CoordSet::NonnegIntegers => tag != Tag::Z0,
        CoordSet::Positive => true,
        CoordSet::Multiples(p) => p >= 2 || tag != Tag::Z0,
        CoordSet::IntegerMultiples(k) => k >= 2 || tag != Tag::Z,
        CoordSet::NonnegRationals => !matches!(tag, Tag::Q0),
    }
}

/// Does tag·A ⊆ A hold for every element of the tag domain?
fn cs_absorbs_tag(tag: Tag, cs: CoordSet) -> bool {
    match cs {
        CoordSet::Zero | CoordSet::All => true,
        CoordSet::Nonneg => !tag.is_group_like(),
        CoordSet::NonnegIntegers => tag == Tag::Z0,
        CoordSet::Positive => false,
        // t·(kp) = (tk)p needs t to be a nonnegative integer
        CoordSet::Multiples(_) => tag == Tag::Z0,
        CoordSet::IntegerMultiples(_) => tag == Tag::Z,
        CoordSet::NonnegRationals => matches!(tag, Tag::Q0),
    }
}

/// Is the coordinate set a semifield in its own right (contains 0 and 1,
/// strict, zero-divisor-free)? Supported sets are subsets of a numeric
/// domain, so commutativity and freedom from zero divisors are automatic;
/// strictness needs nonnegativity, and 1 rules out the proper multiples.
fn cs_is_semifield(cs: CoordSet) -> bool {
    matches!(
        cs,
        CoordSet::Nonneg | CoordSet::NonnegIntegers | CoordSet::NonnegRationals
    )
}

/// Is the coordinate set a semiring that is not a ring? All supported sets
/// are closed; ring-hood needs an additive identity plus inverses.
fn cs_not_a_ring(tag: Tag, cs: CoordSet) -> bool {
    match cs {
        CoordSet::Positive => true,          // no additive identity
        CoordSet::Nonneg => tag.is_group_like(), // 1 has no inverse in the half-line
        CoordSet::NonnegIntegers => true,    // no inverses
        CoordSet::Multiples(_) => true,      // no inverses
        CoordSet::Zero => false,             // {0} is the zero ring
        CoordSet::All => !tag.is_group_like(),
        CoordSet::IntegerMultiples(_) => false, // kZ is a ring
        CoordSet::NonnegRationals => true,   // no inverses
    }
}

/// Does p·t ∈ P hold for all p ∈ P, t ∈ T? Only the combinations the
/// corpus uses are supported; anything else is an explicit failure.
fn cs_mul_into(p: CoordSet, t: CoordSet) -> Option<bool> {
    match (p, t) {
        (CoordSet::Multiples(_), CoordSet::NonnegIntegers) => Some(true),
        (CoordSet::Multiples(k), CoordSet::Multiples(j)) => Some(k.checked_mul(j).is_some()),
        (CoordSet::Nonneg, CoordSet::Nonneg) => Some(true),
        (CoordSet::NonnegIntegers, CoordSet::NonnegIntegers) => Some(true),
        (CoordSet::Zero, _) => Some(true),
        (_, CoordSet::Zero) => Some(true),
        _ => None,
    }
}

fn check_arity(a: &ArchetypeStructure, sets: &[CoordSet]) -> Result<Vec<Tag>, VerifyError> {
    let tags = tag_factors(a)?;
    if sets.len() != tags.len() {
        return Err(VerifyError::WitnessShape(format!(
            "expected {} coordinate sets, got {}",
            tags.len(),
            sets.len()
        )));
    }
    Ok(tags)
}

fn replay_coordset_k_algebra(
    a: &ArchetypeStructure,
    sets: &[CoordSet],
    log: &mut Log,
) -> Result<(), VerifyError> {
    let tags = check_arity(a, sets)?;
    log.check(
        "subject is a semifield",
        tags.iter().all(|t| t.is_nonneg()) && tags.len() == 1,
    );
    log.check(
        "nonempty proper subset, not just {0}",
        sets.iter().zip(&tags).any(|(&cs, &t)| cs_proper(t, cs))
            && !sets.iter().all(|&cs| matches!(cs, CoordSet::Zero)),
    );
    log.check(
        "closed under addition and multiplication",
        sets.iter().zip(&tags).all(|(&cs, &t)| cs_closed(t, cs)),
    );
    log.check(
        "absorbs multiplication by every ambient element",
        sets.iter().zip(&tags).all(|(&cs, &t)| cs_absorbs_tag(t, cs)),
    );
    Ok(())
}

fn replay_coordset_anti_semiring(
    a: &ArchetypeStructure,
    sets: &[CoordSet],
    log: &mut Log,
) -> Result<(), VerifyError> {
    let tags = check_arity(a, sets)?;
    log.check(
        "subject is a ring (every factor group-like)",
        tags.iter().all(|t| t.is_group_like()),
    );
    log.check(
        "subset closed under addition and multiplication",
        sets.iter().zip(&tags).all(|(&cs, &t)| cs_closed(t, cs)),
    );
    log.check(
        "subset is not a ring",
        sets.iter().zip(&tags).any(|(&cs, &t)| cs_not_a_ring(t, cs)),
    );
    Ok(())
}

fn replay_coordset_anti_semifield(
    a: &ArchetypeStructure,
    sets: &[CoordSet],
    log: &mut Log,
) -> Result<(), VerifyError> {
    let tags = check_arity(a, sets)?;
    log.check(
        "subject is a ring or field (every factor group-like)",
        tags.iter().all(|t| t.is_group_like()),
    );
    log.check(
        "witness is a proper subset",
        sets.iter().zip(&tags).any(|(&cs, &t)| cs_proper(t, cs)),
    );
    log.check(
        "witness is a semifield",
        sets.iter().all(|&cs| cs_is_semifield(cs)),
    );
    Ok(())
}

fn replay_coordset_anti_ideal(
    a: &ArchetypeStructure,
    outer: &[CoordSet],
    inner: &[CoordSet],
    log: &mut Log,
) -> Result<(), VerifyError> {
    let tags = check_arity(a, outer)?;
    if inner.len() != outer.len() {
        return Err(VerifyError::WitnessShape("inner/outer arity mismatch".into()));
    }
    log.check(
        "T is a subsemifield of the subject",
        outer.iter().all(|&cs| cs_is_semifield(cs)),
    );
    let contained = inner.iter().zip(outer).all(|(&p, &t)| match (p, t) {
        (CoordSet::Multiples(_), CoordSet::NonnegIntegers) => true,
        (CoordSet::Zero, _) => true,
        (p, t) => p == t,
    });
    log.check("P lies inside T", contained);
    log.check(
        "P is a semiring (closed under both operations)",
        inner.iter().zip(&tags).all(|(&cs, &t)| cs_closed(t, cs) && cs_contains_zero(cs)),
    );
    let absorbed = inner
        .iter()
        .zip(outer)
        .map(|(&p, &t)| cs_mul_into(p, t))
        .collect::<Option<Vec<bool>>>();
    match absorbed {
        Some(flags) => {
            log.check("p·t stays in P", flags.into_iter().all(|b| b));
        }
        None => {
            log.check("p·t stays in P (unsupported set combination)", false);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// matrix archetype subjects

fn pattern_of(mask: &[Vec<bool>], nonzero: bool, dim: usize) -> Result<MatrixPattern, VerifyError> {
    if mask.len() != dim || mask.iter().any(|r| r.len() != dim) {
        return Err(VerifyError::WitnessShape("pattern mask has wrong shape".into()));
    }
    Ok(MatrixPattern { mask: mask.iter().flatten().copied().collect(), nonzero })
}

/// P ⊆ A as sets of matrices.
fn pattern_subset(p: &MatrixPattern, a: &MatrixPattern) -> bool {
    if a.nonzero {
        p == a
    } else {
        p.mask.iter().zip(&a.mask).all(|(&pm, &am)| !pm || am)
    }
}

fn pattern_proper(p: &MatrixPattern) -> bool {
    p.nonzero || p.mask.iter().any(|&b| !b)
}

fn pattern_semifield_clauses(m: &MatrixArchetype, p: &MatrixPattern, log: &mut Log) {
    log.check("pattern is nonempty beyond {0}", p.popcount() >= 1);
    log.check("closed under addition", p.closed_under_add(m));
    log.check("closed under multiplication", p.closed_under_mul(m));
    log.check("multiplication commutative on the pattern", p.is_commutative(m));
    log.check("pattern has its own multiplicative identity", p.local_identity(m).is_some());
    log.check("strict (entries from a nonnegative tag)", m.tag.is_nonneg());
    log.check("no zero divisors inside the pattern", !p.has_zero_divisors(m));
}

fn parse_matrices(m: &MatrixArchetype, witness: &Witness) -> Result<Vec<Matrix>, VerifyError> {
    let raw = match witness {
        Witness::Matrices(items) => items,
        _ => return Err(VerifyError::WitnessShape("expected matrices".into())),
    };
    raw.iter()
        .map(|rows| m.parse(rows).map_err(|e| VerifyError::BadElement(e.to_string())))
        .collect()
}

fn replay_matrix(m: &MatrixArchetype, property: &str, witness: &Witness) -> Result<Log, VerifyError> {
    let mut log = Log::new();
    match property {
        "s-subsemiring" => {
            let Witness::PatternPair { outer, inner } = witness else {
                return Err(VerifyError::WitnessShape("expected a pattern pair".into()));
            };
            let a = pattern_of(&outer.0, outer.1, m.dim)?;
            let p = pattern_of(&inner.0, inner.1, m.dim)?;
            log.check("A is a proper subset", pattern_proper(&a));
            log.check("A closed under addition", a.closed_under_add(m));
            log.check("A closed under multiplication", a.closed_under_mul(m));
            log.check(
                "P lies strictly inside A",
                pattern_subset(&p, &a) && p != a,
            );
            pattern_semifield_clauses(m, &p, &mut log);
        }
        "s-semidivision-ring" => {
            let Witness::PatternPair { outer, inner } = witness else {
                return Err(VerifyError::WitnessShape("expected a pattern pair".into()));
            };
            let a = pattern_of(&outer.0, outer.1, m.dim)?;
            let p = pattern_of(&inner.0, inner.1, m.dim)?;
            log.check("A is a proper subset", pattern_proper(&a));
            log.check("A closed under addition", a.closed_under_add(m));
            log.check("A closed under multiplication", a.closed_under_mul(m));
            log.check("A is non-commutative", !a.is_commutative(m));
            // S-subsemiring-hood of A: some single-diagonal-cell pattern
            // inside A is a semifield
            let hosts = (0..m.dim).any(|i| {
                let corner = MatrixPattern::diag(m.dim, &[i], false);
                if !pattern_subset(&corner, &a) || corner == a {
                    return false;
                }
                let mut l = Log::new();
                pattern_semifield_clauses(m, &corner, &mut l);
                l.all_pass()
            });
            log.check("A hosts a proper semifield (diagonal corner)", hosts);
            log.check("P lies inside A", pattern_subset(&p, &a) && p != a);
            log.check("P closed under addition", p.closed_under_add(m));
            log.check("P closed under multiplication", p.closed_under_mul(m));
            log.check("P is non-commutative", !p.is_commutative(m));
            log.check("P has no zero divisors", !p.has_zero_divisors(m));
        }
        "s-weak-semifield" => {
            let Witness::PatternPair { outer, inner } = witness else {
                return Err(VerifyError::WitnessShape("expected a pattern pair".into()));
            };
            let p = pattern_of(&outer.0, outer.1, m.dim)?;
            let a = pattern_of(&inner.0, inner.1, m.dim)?;
            log.check("P is a proper subset", pattern_proper(&p));
            pattern_semifield_clauses(m, &p, &mut log);
            log.check("A differs from P and is nonempty", a != p && a.popcount() >= 1);
            log.check("A closed under addition", a.closed_under_add(m));
            log.check("A closed under multiplication", a.closed_under_mul(m));
            log.check(
                "A absorbs multiplication by P on both sides",
                a.absorbed_by(&p, m, true),
            );
        }
        "s-zero-divisor" => {
            let items = parse_matrices(m, witness)?;
            if items.len() != 4 {
                return Err(VerifyError::WitnessShape("expected (a, b, x, y)".into()));
            }
            let mul = |p: &Matrix, q: &Matrix| m.mul(p, q);
            let is_zero = |p: &Matrix| m.is_zero(p);
            gen_s_zero_divisor_clauses(&mul, &is_zero, &items[0], &items[1], &items[2], &items[3], &mut log);
        }
        "s-anti-zero-divisor" => {
            let items = parse_matrices(m, witness)?;
            if items.len() != 4 {
                return Err(VerifyError::WitnessShape("expected (x, y, a, b)".into()));
            }
            let mul = |p: &Matrix, q: &Matrix| m.mul(p, q);
            let is_zero = |p: &Matrix| m.is_zero(p);
            gen_s_anti_zero_divisor_clauses(&mul, &is_zero, &items[0], &items[1], &items[2], &items[3], &mut log);
        }
        other => return Err(VerifyError::UnknownProperty(other.to_string())),
    }
    Ok(log)
}

// ---------------------------------------------------------------------------
// formal-sum subjects

fn replay_formal(f: &FormalAlgebra, property: &str, witness: &Witness) -> Result<Log, VerifyError> {
    let mut log = Log::new();
    let sums = |w: &Witness| -> Result<Vec<FormalSum>, VerifyError> {
        let Witness::FormalSums(items) = w else {
            return Err(VerifyError::WitnessShape("expected formal sums".into()));
        };
        items
            .iter()
            .map(|terms| {
                f.parse_terms(terms)
                    .ok_or_else(|| VerifyError::BadElement("unknown carrier or coefficient label".into()))
            })
            .collect()
    };
    match property {
        "s-idempotent" => {
            let items = sums(witness)?;
            if items.len() != 2 {
                return Err(VerifyError::WitnessShape("expected (a, b)".into()));
            }
            let (a, b) = (&items[0], &items[1]);
            log.check("a is a nonzero idempotent", !a.is_zero() && &f.mul(a, a) == a);
            log.check("b differs from a and b² = a", b != a && &f.mul(b, b) == a);
            let first = f.mul(a, b) == *b || f.mul(b, a) == *b;
            let second = f.mul(b, a) == *a || f.mul(a, b) == *a;
            log.check("exactly one of (ab = b or ba = b), (ba = a or ab = a)", first ^ second);
        }
        "atom-factorization" => {
            let items = sums(witness)?;
            if items.len() != 3 {
                return Err(VerifyError::WitnessShape("expected (α, β, g^i)".into()));
            }
            let (alpha, beta, target) = (&items[0], &items[1], &items[2]);
            log.check(
                "target is a carrier element",
                target.as_carrier_element(&f.coeff).is_some(),
            );
            log.check(
                "α lies outside the embedded carrier",
                alpha.as_carrier_element(&f.coeff).is_none(),
            );
            log.check(
                "β lies outside the embedded carrier",
                beta.as_carrier_element(&f.coeff).is_none(),
            );
            log.check("α·β equals the target", &f.mul(alpha, beta) == target);
        }
        other => return Err(VerifyError::UnknownProperty(other.to_string())),
    }
    Ok(log)
}

fn replay_tag_formal(
    t: &TagFormalAlgebra,
    property: &str,
    witness: &Witness,
) -> Result<Log, VerifyError> {
    let mut log = Log::new();
    match property {
        "s-anti-semiring" => {
            let Witness::FormalPositiveCone = witness else {
                return Err(VerifyError::WitnessShape("expected the positive cone witness".into()));
            };
            log.check(
                "subject coefficients form a ring or field (group-like tag)",
                t.coeff_tag.is_group_like(),
            );
            // sums of positives are positive; convolution coefficients are
            // sums of products of positives, hence positive: the cone is
            // closed under both operations
            log.check("positive cone closed under addition", true);
            log.check("positive cone closed under multiplication", true);
            // the zero sum (empty support) is not in the cone
            log.check("positive cone is not a ring (no additive identity)", true);
        }
        other => return Err(VerifyError::UnknownProperty(other.to_string())),
    }
    Ok(log)
}

// ---------------------------------------------------------------------------
// verify-mode certifiers for archetype subjects

fn finish(property: &str, name: &str, witness: Witness, complete: bool, log: Log) -> CertResult {
    if log.all_pass() {
        Ok(certificate(property, name, witness, complete, log))
    } else {
        Err(NotFound {
            complete: false,
            reason: log.first_failure().unwrap().text.clone(),
        })
    }
}

/// Level-II certificate for a mixed product, from an explicit finite field
/// witness.
pub fn certify_arch_s_semiring_ii(
    a: &ArchetypeStructure,
    witness: &Witness,
    name: &str,
) -> CertResult {
    let log = replay_arch(a, "s-semiring-2", witness)
        .map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
    finish("s-semiring-2", name, witness.clone(), false, log)
}

/// S-semifield of level I on a single nonnegative tag. For Z0 the witness
/// pZ0 is certified; for Q0 and R0 the refusal is analytic and complete:
/// any subset absorbing all ambient multiples of a nonzero member contains
/// (q/a)·a = q for every q, so only {0} absorbs, and {0} is excluded.
pub fn certify_arch_s_semifield_i(a: &ArchetypeStructure, name: &str) -> CertResult {
    let tags = tag_factors(a).map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
    if tags.len() != 1 || !tags[0].is_nonneg() {
        return Err(NotFound {
            complete: false,
            reason: "level-I semifield certification covers single nonnegative tags".into(),
        });
    }
    match tags[0] {
        Tag::Z0 => {
            let witness = Witness::CoordSets(vec![CoordSet::Multiples(2)]);
            let log = replay_arch(a, "s-semifield-1", &witness)
                .map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
            finish("s-semifield-1", name, witness, true, log)
        }
        Tag::Q0 | Tag::R0 => Err(NotFound {
            complete: true,
            reason: "only {0} absorbs all rational (real) scaling, and {0} is trivial".into(),
        }),
        _ => unreachable!(),
    }
}

/// S-idempotents on a nonnegative-integer tuple archetype: complete absence.
/// Any b with b² = a (a a 0/1-vector) has coordinates solving b_i² = a_i in
/// Z0, forcing b = a, which the definition excludes.
pub fn arch_s_idempotents_absent(a: &ArchetypeStructure) -> Option<bool> {
    let tags = tag_factors(a).ok()?;
    tags.iter().all(|&t| t == Tag::Z0).then_some(true)
}

pub fn certify_arch_element(
    a: &ArchetypeStructure,
    property: &str,
    witness: &Witness,
    name: &str,
) -> CertResult {
    let log = replay_arch(a, property, witness)
        .map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
    finish(property, name, witness.clone(), false, log)
}

pub fn certify_matrix(
    m: &MatrixArchetype,
    property: &str,
    witness: &Witness,
    name: &str,
) -> CertResult {
    let log = replay_matrix(m, property, witness)
        .map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
    finish(property, name, witness.clone(), false, log)
}

pub fn certify_arch_anti(
    a: &ArchetypeStructure,
    property: &str,
    witness: &Witness,
    name: &str,
) -> CertResult {
    let log = replay_arch(a, property, witness)
        .map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
    finish(property, name, witness.clone(), false, log)
}

pub fn certify_tag_formal_anti_semiring(t: &TagFormalAlgebra, name: &str) -> CertResult {
    let witness = Witness::FormalPositiveCone;
    let log = replay_tag_formal(t, "s-anti-semiring", &witness)
        .map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
    finish("s-anti-semiring", name, witness, false, log)
}

/// Atom-factorization certificate over a materializable group semiring.
pub fn certify_atom_factorization(
    f: &FormalAlgebra,
    n: usize,
    i: usize,
    name: &str,
) -> CertResult {
    let (alpha, beta) = crate::constructions::atom_factorization(&f.coeff, n, i)
        .map_err(|e| NotFound { complete: true, reason: e.to_string() })?;
    let term_list = |x: &FormalSum| -> Vec<(String, String)> {
        x.coeffs()
            .iter()
            .map(|(&g, &c)| (f.carrier.labels[g].clone(), f.coeff.label(c).to_string()))
            .collect()
    };
    let one = f.coeff.one().expect("group semiring coefficients are unital");
    let target = FormalSum::term(i % n, one, &f.coeff);
    let witness = Witness::FormalSums(vec![
        term_list(&alpha),
        term_list(&beta),
        term_list(&target),
    ]);
    let log = replay_formal(f, "atom-factorization", &witness)
        .map_err(|e| NotFound { complete: false, reason: e.to_string() })?;
    finish("atom-factorization", name, witness, true, log)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::archetype::Factor;
    use crate::constructions::{
        chain_lattice, cyclic_group, group_semiring_lazy, matrix_semiring, zmod_ring, DEFAULT_CAP,
    };
    use std::sync::Arc;

    fn tuples(raw: &[&[&str]]) -> Witness {
        Witness::Tuples(
            raw.iter()
                .map(|t| t.iter().map(|s| s.to_string()).collect())
                .collect(),
        )
    }

    #[test]
    fn z0_z7_level_two_verifies() {
        let a = ArchetypeStructure {
            factors: vec![Factor::Tag(Tag::Z0), Factor::Table(Arc::new(zmod_ring(7)))],
            name: "Z0×Z7".into(),
        };
        let field: Vec<Vec<String>> = (0..7)
            .map(|k: usize| vec!["0".to_string(), k.to_string()])
            .collect();
        let cert = certify_arch_s_semiring_ii(&a, &Witness::Tuples(field), "Z0×Z7").unwrap();
        assert!(verify(&SubjectRef::Arch(&a), &cert).is_ok());
    }

    #[test]
    fn z10_z0_level_two_with_identity_six() {
        let a = ArchetypeStructure {
            factors: vec![Factor::Table(Arc::new(zmod_ring(10))), Factor::Tag(Tag::Z0)],
            name: "Z10×Z0".into(),
        };
        let evens = tuples(&[&["0", "0"], &["2", "0"], &["4", "0"], &["6", "0"], &["8", "0"]]);
        let cert = certify_arch_s_semiring_ii(&a, &evens, "Z10×Z0").unwrap();
        let id_clause = cert
            .transcript
            .iter()
            .find(|c| c.text.contains("identity"))
            .unwrap();
        assert!(id_clause.text.contains("(6,0)"));
        let fives = tuples(&[&["0", "0"], &["5", "0"]]);
        assert!(certify_arch_s_semiring_ii(&a, &fives, "Z10×Z0").is_ok());
        // a non-field subset is refused
        let bad = tuples(&[&["0", "0"], &["2", "0"], &["4", "0"]]);
        assert!(certify_arch_s_semiring_ii(&a, &bad, "Z10×Z0").is_err());
    }

    #[test]
    fn z0_semifield_level_one_and_rational_refusals() {
        let z0 = ArchetypeStructure::tags(vec![Tag::Z0], "Z0".into());
        let cert = certify_arch_s_semifield_i(&z0, "Z0").unwrap();
        assert!(cert.complete_search);
        assert!(verify(&SubjectRef::Arch(&z0), &cert).is_ok());
        let q0 = ArchetypeStructure::tags(vec![Tag::Q0], "Q0".into());
        let nf = certify_arch_s_semifield_i(&q0, "Q0").unwrap_err();
        assert!(nf.complete);
    }

    #[test]
    fn example_4_3_1_s_zero_divisor_tuple() {
        let a = ArchetypeStructure::tags(vec![Tag::Z0; 4], "Z0^4".into());
        let w = tuples(&[
            &["0", "0", "4", "2"],
            &["5", "0", "0", "0"],
            &["2", "8", "0", "0"],
            &["0", "1", "0", "0"],
        ]);
        let cert = certify_arch_element(&a, "s-zero-divisor", &w, "Z0^4").unwrap();
        assert!(verify(&SubjectRef::Arch(&a), &cert).is_ok());
    }

    #[test]
    fn example_4_3_4_and_4_3_5_anti_zero_divisors() {
        let a7 = ArchetypeStructure::tags(vec![Tag::Z0; 7], "Z0^7".into());
        let unit = tuples(&[
            &["1", "1", "1", "1", "1", "1", "1"],
            &["0", "0", "2", "3", "1", "0", "0"],
            &["2", "1", "0", "0", "6", "0", "0"],
            &["0", "0", "1", "2", "0", "3", "4"],
        ]);
        assert!(certify_arch_element(&a7, "s-anti-zero-divisor", &unit, "Z0^7").is_ok());
        let a5 = ArchetypeStructure::tags(vec![Tag::Z0; 5], "Z0^5".into());
        let nonunit = tuples(&[
            &["1", "1", "1", "1", "0"],
            &["0", "0", "6", "7", "0"],
            &["3", "2", "0", "0", "0"],
            &["0", "0", "0", "9", "2"],
        ]);
        assert!(certify_arch_element(&a5, "s-anti-zero-divisor", &nonunit, "Z0^5").is_ok());
        assert_eq!(arch_s_idempotents_absent(&a5), Some(true));
    }

    #[test]
    fn example_4_3_2_matrix_s_zero_divisor() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        let mats = Witness::Matrices(vec![
            vec![vec!["1".into(), "0".into()], vec!["0".into(), "0".into()]],
            vec![vec!["0".into(), "0".into()], vec!["1".into(), "0".into()]],
            vec![vec!["0".into(), "0".into()], vec!["0".into(), "1".into()]],
            vec![vec!["0".into(), "0".into()], vec!["1".into(), "1".into()]],
        ]);
        let cert = certify_matrix(&m, "s-zero-divisor", &mats, "M2x2(Z0)").unwrap();
        assert!(verify(&SubjectRef::MatrixArch(&m), &cert).is_ok());
    }

    #[test]
    fn example_4_2_4_diagonal_corner_subsemiring() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 3 };
        let a_mask = vec![
            vec![true, false, false],
            vec![false, true, false],
            vec![false, false, false],
        ];
        let p_mask = vec![
            vec![true, false, false],
            vec![false, false, false],
            vec![false, false, false],
        ];
        let w = Witness::PatternPair { outer: (a_mask, false), inner: (p_mask, false) };
        let cert = certify_matrix(&m, "s-subsemiring", &w, "M3x3(Z0)").unwrap();
        assert!(verify(&SubjectRef::MatrixArch(&m), &cert).is_ok());
    }

    #[test]
    fn example_4_2_13_semidivision_and_4_2_14_refusal() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        let upper = vec![vec![true, true], vec![false, true]];
        let w = Witness::PatternPair {
            outer: (upper.clone(), false),
            inner: (upper, true),
        };
        let cert = certify_matrix(&m, "s-semidivision-ring", &w, "M2x2(Z0)").unwrap();
        assert!(verify(&SubjectRef::MatrixArch(&m), &cert).is_ok());
        // the first-row pattern does not contain the upper-triangular one;
        // with no valid witness the result is NotFound, never "false"
        let first_row = vec![vec![true, true], vec![false, false]];
        let ut = vec![vec![true, true], vec![false, true]];
        let bad = Witness::PatternPair { outer: (first_row, false), inner: (ut, true) };
        let err = certify_matrix(&m, "s-semidivision-ring", &bad, "M2x2(Z0)").unwrap_err();
        assert!(!err.complete);
    }

    #[test]
    fn example_5_2_3_matrix_weak_semifield() {
        let m = MatrixArchetype { tag: Tag::Z0, dim: 2 };
        let diag = vec![vec![true, false], vec![false, true]];
        let corner = vec![vec![true, false], vec![false, false]];
        let w = Witness::PatternPair { outer: (diag, true), inner: (corner, true) };
        let cert = certify_matrix(&m, "s-weak-semifield", &w, "M2x2(Z0)").unwrap();
        assert!(verify(&SubjectRef::MatrixArch(&m), &cert).is_ok());
    }

    #[test]
    fn anti_structures_on_tags() {
        let z = ArchetypeStructure::tags(vec![Tag::Z], "Z".into());
        let w = Witness::CoordSets(vec![CoordSet::Positive]);
        let cert = certify_arch_anti(&z, "s-anti-semiring", &w, "Z").unwrap();
        assert!(verify(&SubjectRef::Arch(&z), &cert).is_ok());

        let q = ArchetypeStructure::tags(vec![Tag::Q], "Q".into());
        let w = Witness::CoordSets(vec![CoordSet::Nonneg]);
        assert!(certify_arch_anti(&q, "s-anti-semifield", &w, "Q").is_ok());

        let w = Witness::NestedCoordSets {
            outer: vec![CoordSet::NonnegIntegers],
            inner: vec![CoordSet::Multiples(3)],
        };
        let cert = certify_arch_anti(&q, "s-anti-ideal", &w, "Q").unwrap();
        assert!(verify(&SubjectRef::Arch(&q), &cert).is_ok());

        // Z0 is not a ring: the anti certifier refuses the subject
        let z0 = ArchetypeStructure::tags(vec![Tag::Z0], "Z0".into());
        let w = Witness::CoordSets(vec![CoordSet::Positive]);
        assert!(certify_arch_anti(&z0, "s-anti-semiring", &w, "Z0").is_err());
    }

    #[test]
    fn qg_positive_cone_anti_semiring() {
        let t = TagFormalAlgebra::new(Tag::Q, cyclic_group(3), "QG".into()).unwrap();
        let cert = certify_tag_formal_anti_semiring(&t, "QG").unwrap();
        assert!(verify(&SubjectRef::TagFormal(&t), &cert).is_ok());
        assert!(t.is_commutative());
    }

    #[test]
    fn atom_factorization_certificates() {
        let coeff = crate::structure::Structure::from_lattice(&crate::fixtures::square());
        let alg = group_semiring_lazy(coeff, cyclic_group(5), "SqC5".into()).unwrap();
        for i in 0..5 {
            let cert = certify_atom_factorization(&alg, 5, i, "SqC5").unwrap();
            assert!(verify(&SubjectRef::Formal(&alg), &cert).is_ok());
        }
        let b3 = crate::constructions::power_set_semiring(3);
        let alg7 = group_semiring_lazy(b3, cyclic_group(7), "B3C7".into()).unwrap();
        let cert = certify_atom_factorization(&alg7, 7, 3, "B3C7").unwrap();
        assert!(verify(&SubjectRef::Formal(&alg7), &cert).is_ok());
    }

    #[test]
    fn finite_verify_round_trip() {
        let m = matrix_semiring(&chain_lattice(2), 2, DEFAULT_CAP).unwrap();
        let cert = super::super::certify_s_semiring_i(&m, "M2x2(C2)").unwrap();
        assert!(verify(&SubjectRef::Finite(&m), &cert).is_ok());
        // swapping the identity for a nilpotent breaks the witness
        let mut bad = cert.clone();
        if let Witness::Labels(l) = &mut bad.witness {
            l[1] = "[[0,1],[0,0]]".into();
        }
        assert!(verify(&SubjectRef::Finite(&m), &bad).is_err());
    }
}
