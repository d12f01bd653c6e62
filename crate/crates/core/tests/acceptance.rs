//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). All algebra is exact; every expected value below is either a
//! source-stated value verified against the text or a value computed and
//! frozen by an independent oracle in this file.

use std::collections::BTreeSet;

use semicert::claims::{corpus, Check, SubjectSpec};
use semicert::congruence::{congruence_closure, congruence_simplicity_witness, is_congruence_simple};
use semicert::constructions::{
    atom_factorization, chain_lattice, cyclic_group, full_transformation, group_semiring_lazy,
    matrix_label, matrix_semiring, power_set_semiring, symmetric_group, v_of, zmod_mul_semigroup,
    zmod_ring, BuildError, DEFAULT_CAP,
};
use semicert::fixtures;
use semicert::lattice::{boolean, chain};
use semicert::semivector::{lattice_space, TupleSpace};
use semicert::smarandache::{
    certify_s_anti_semiring, certify_s_semiring_i, find_s_idempotents, verify, SubjectRef,
    Witness,
};
use semicert::spec::driver;
use semicert::spec::{build, Subject};
use semicert::structure::{characteristic, classify_elements, AxiomViolation, Characteristic, Structure};
use semicert::subalgebra::{subgroups, subgroups_exhaustive};
use semicert::archetype::Tag;

use num::rational::BigRational;
use num::BigInt;

fn line(criterion: &str, pass: bool) {
    println!("criterion {criterion}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed");
}

#[test]
fn criterion_01_lattice_predicate_table() {
    let started = std::time::Instant::now();
    let pent = fixtures::pentagon();
    let diam = fixtures::diamond();
    let mut ok = !pent.is_distributive() && !pent.is_modular();
    ok &= !diam.is_distributive() && diam.is_modular();
    for n in 2..=8 {
        let c = chain(n);
        ok &= c.is_distributive() && c.is_modular();
    }
    for k in 1..=4 {
        ok &= boolean(k).is_boolean();
    }
    ok &= started.elapsed().as_secs() < 1;
    line("01 lattice predicate table", ok);
}

#[test]
fn criterion_02_semiring_gate() {
    let mut ok = true;
    for (name, l) in fixtures::corpus() {
        let validated = Structure::validate_semiring(
            l.labels().to_vec(),
            l.join_table().clone(),
            l.meet_table().clone(),
        );
        if l.is_distributive() {
            ok &= validated.is_ok();
            assert!(validated.is_ok(), "{name} must validate");
        } else {
            ok &= validated.is_err();
        }
    }
    // the non-distributive gate reject carries a distributivity witness
    let bad = fixtures::non_semiring_lattice();
    let err = Structure::validate_semiring(
        bad.labels().to_vec(),
        bad.join_table().clone(),
        bad.meet_table().clone(),
    )
    .unwrap_err();
    ok &= matches!(err, AxiomViolation::NotDistributive { .. });
    line("02 semiring gate over the 12-lattice corpus", ok);
}

#[test]
fn criterion_03_characteristics() {
    let mut ok = true;
    for n in 2..=8 {
        ok &= characteristic(&chain_lattice(n)) == Characteristic::Undefined;
    }
    for p in [2u64, 3, 5, 7, 23] {
        ok &= characteristic(&zmod_ring(p as usize)) == Characteristic::Finite(p);
    }
    line("03 characteristics of chains and prime fields", ok);
}

#[test]
fn criterion_04_matrix_semiring_over_c2() {
    let started = std::time::Instant::now();
    let m = matrix_semiring(&chain_lattice(2), 2, DEFAULT_CAP).unwrap();
    let mut ok = m.n() == 16;
    ok &= !m.flags().commutative_mul;
    ok &= m.mul_table().commutativity_witness().is_some();
    ok &= m.flags().strict;
    ok &= !classify_elements(&m).zero_divisor_pairs.is_empty();
    let cert = certify_s_semiring_i(&m, "M2x2(C2)").unwrap();
    ok &= cert.witness
        == Witness::Labels(vec!["[[0,0],[0,0]]".into(), "[[1,0],[0,1]]".into()]);
    ok &= verify(&SubjectRef::Finite(&m), &cert).is_ok();
    ok &= started.elapsed().as_secs() < 1;
    line("04 matrix semiring over C2", ok);
}

#[test]
fn criterion_05_matrix_product_replay() {
    let base = Structure::from_lattice(&fixtures::square());
    let m = matrix_semiring(&base, 2, DEFAULT_CAP).unwrap();
    let idx = |entries: [&str; 4]| {
        let label = matrix_label(
            &entries.iter().map(|l| base.index_of(l).unwrap()).collect::<Vec<_>>(),
            2,
            &base,
        );
        m.index_of(&label).unwrap()
    };
    let a = idx(["a", "b", "0", "1"]);
    let b = idx(["1", "a", "b", "b"]);
    let ok = m.label(m.mul(a, b)) == "[[1,1],[b,b]]" && m.label(m.mul(b, a)) == "[[a,1],[0,b]]";
    line("05 byte-exact matrix product replay", ok);
}

#[test]
fn criterion_06_z12_subgroup_census() {
    let started = std::time::Instant::now();
    let m = zmod_mul_semigroup(12);
    let fast = subgroups(&m);
    let mut slow = subgroups_exhaustive(&m);
    slow.sort();
    let mut ok = fast == slow;
    for expected in [vec![1usize, 5], vec![3, 9], vec![4, 8], vec![1, 5, 7, 11]] {
        ok &= fast.contains(&expected);
    }
    // the maximal subgroups are exactly those at the four idempotents
    let maximal: BTreeSet<Vec<usize>> = fast
        .iter()
        .filter(|h| !fast.iter().any(|g| g.len() > h.len() && h.iter().all(|x| g.contains(x))))
        .cloned()
        .collect();
    ok &= maximal
        == BTreeSet::from([vec![0], vec![1, 5, 7, 11], vec![3, 9], vec![4, 8]]);
    ok &= started.elapsed().as_secs() < 1;
    line("06 Z12 multiplicative subgroup census", ok);
}

#[test]
fn criterion_07_semifield_battery() {
    let mut ok = true;
    for n in 2..=8 {
        ok &= chain_lattice(n).flags().semifield;
    }
    ok &= Structure::from_lattice(&fixtures::kite()).flags().semifield;
    for k in [2usize, 3, 4] {
        let b = power_set_semiring(k);
        ok &= !b.flags().semifield;
        // the refusal names an atom pair meeting at bottom
        let (reason, pair) = semicert::smarandache::semifield_failure(&b).unwrap();
        ok &= reason == "zero-divisor pair";
        let lat = boolean(k);
        let atoms = lat.atoms();
        ok &= pair.iter().all(|x| atoms.contains(x));
    }
    line("07 semifield battery", ok);
}

#[test]
fn criterion_08_congruence_simplicity() {
    let started = std::time::Instant::now();
    let mut ok = is_congruence_simple(&zmod_ring(5));
    ok &= is_congruence_simple(&zmod_ring(7));
    let z12 = zmod_ring(12);
    let w = congruence_simplicity_witness(&z12);
    ok &= w.is_some();
    if let Some((a, b)) = w {
        let c = congruence_closure(&z12, a, b);
        ok &= c.is_congruence(&z12) && !c.is_full() && !c.is_identity();
    }
    // The ∞-adjunction of the full transformation monoid S(2) is NOT a
    // semiring: constant maps break distributivity, which the validator
    // reports. The congruence-simple instances are the group adjunctions
    // V(S_2) and V(C_4).
    let err = v_of(&full_transformation(2)).unwrap_err();
    ok &= matches!(err, BuildError::Axiom(AxiomViolation::NotDistributive { .. }));
    ok &= is_congruence_simple(&v_of(&symmetric_group(2)).unwrap());
    ok &= is_congruence_simple(&v_of(&cyclic_group(4)).unwrap());
    ok &= started.elapsed().as_secs() < 10;
    line("08 congruence simplicity (oracle-corrected ∞-adjunction)", ok);
}

#[test]
fn criterion_09_group_semiring_s_idempotent() {
    let started = std::time::Instant::now();
    let alg = group_semiring_lazy(chain_lattice(2), symmetric_group(3), "C2S3".into()).unwrap();
    // the three equations α² = α, (Σ transpositions)² = α, α·Σ = Σ
    let s3 = &alg.carrier;
    let id = s3.table.identity().unwrap();
    let cycles: Vec<usize> = (0..6).filter(|&p| p != id && s3.op(p, p) != id).collect();
    let transpositions: Vec<usize> = (0..6).filter(|&p| p != id && s3.op(p, p) == id).collect();
    let one = 1usize;
    let alpha = semicert::constructions::FormalSum::from_terms(
        &[(id, one), (cycles[0], one), (cycles[1], one)],
        &alg.coeff,
    );
    let tsum = semicert::constructions::FormalSum::from_terms(
        &transpositions.iter().map(|&p| (p, one)).collect::<Vec<_>>(),
        &alg.coeff,
    );
    let mut ok = alg.mul(&alpha, &alpha) == alpha;
    ok &= alg.mul(&tsum, &tsum) == alpha;
    ok &= alg.mul(&alpha, &tsum) == tsum;
    // exhaustive scan over the materialized 64-element structure finds it
    let s = alg.materialize();
    let certs = find_s_idempotents(&s, "C2S3");
    let alpha_label = s.label(s.index_of(&alg.render(&alpha)).unwrap()).to_string();
    let tsum_label = alg.render(&tsum);
    ok &= certs.iter().any(|c| match &c.witness {
        Witness::Labels(l) => l[0] == alpha_label && l[1] == tsum_label,
        _ => false,
    });
    ok &= started.elapsed().as_secs() < 5;
    line("09 C2S3 S-idempotent by exhaustive scan", ok);
}

#[test]
fn criterion_10_atom_factorization() {
    let square = Structure::from_lattice(&fixtures::square());
    let alg5 = group_semiring_lazy(square.clone(), cyclic_group(5), "SqC5".into()).unwrap();
    let mut ok = true;
    // n = 5 over the two-atom square: every exponent, with the i = 4
    // instance reproducing g^4 from factors outside the carrier
    for i in 0..5 {
        let (alpha, beta) = atom_factorization(&square, 5, i).unwrap();
        ok &= alpha.as_carrier_element(&square).is_none();
        ok &= beta.as_carrier_element(&square).is_none();
        ok &= alg5.mul(&alpha, &beta).as_carrier_element(&square) == Some(i);
    }
    let b3 = power_set_semiring(3);
    let alg7 = group_semiring_lazy(b3.clone(), cyclic_group(7), "B3C7".into()).unwrap();
    for i in 0..7 {
        let (alpha, beta) = atom_factorization(&b3, 7, i).unwrap();
        ok &= alg7.mul(&alpha, &beta).as_carrier_element(&b3) == Some(i);
    }
    line("10 atom factorization over Boolean coefficients", ok);
}

#[test]
fn criterion_11_semivector_pathologies() {
    let started = std::time::Instant::now();
    let s = TupleSpace::new(vec![Tag::Z0, Tag::Z0], Tag::Z0, "Z0^2");
    let v = |coords: &[i64]| -> Vec<BigRational> {
        coords.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()
    };
    let set = vec![v(&[1, 1]), v(&[2, 1]), v(&[3, 0])];
    let (dep, complete) = s.independence(&set);
    let mut ok = dep.is_none() && complete;
    let dec = s.in_span(&set, &v(&[1, 3]));
    ok &= dec.combination.is_none() && dec.complete;

    let space = lattice_space(&chain(4), "C4/C2");
    let (bases, unique) = space.bases(4);
    ok &= unique;
    let basis = &bases[0];
    let labels: Vec<&str> = basis.iter().map(|&i| &*space.labels[i]).collect();
    ok &= labels == ["a1", "a2", "1"];
    let one = space.index_of("1").unwrap();
    let a2 = space.index_of("a2").unwrap();
    ok &= space.representation_count(basis, one).0 == 4;
    ok &= space.representation_count(basis, a2).0 == 2;
    ok &= started.elapsed().as_secs() < 1;
    line("11 semivector pathologies", ok);
}

#[test]
fn criterion_12_zn_anti_semiring_negative() {
    let started = std::time::Instant::now();
    let mut ok = true;
    for n in 2..=12 {
        let err = certify_s_anti_semiring(&zmod_ring(n), "Zn").unwrap_err();
        ok &= err.complete;
    }
    ok &= started.elapsed().as_secs() < 30;
    line("12 Z_n has no semiring-not-ring subset (complete)", ok);
}

#[test]
fn criterion_13_level_two_battery() {
    // Z0×Z7 with the field {0}×Z7
    let z0z7 = build(
        &semicert::spec::parse_spec(
            r#"{"kind":"mixed_product","factors":[{"kind":"archetype","tags":["Z0"]},{"kind":"zmod","n":7}]}"#,
        )
        .unwrap(),
        DEFAULT_CAP,
    )
    .unwrap();
    let field7 = Witness::Tuples(
        (0..7).map(|k: usize| vec!["0".to_string(), k.to_string()]).collect(),
    );
    let cert = driver::certify(&z0z7, "s-semiring-2", Some(&field7), "Z0×Z7").unwrap();
    let mut ok = driver::verify(&z0z7, &cert).is_ok();

    // Z10×Z0 with both fields, including the non-obvious identity (6,0)
    let z10z0 = build(
        &semicert::spec::parse_spec(
            r#"{"kind":"mixed_product","factors":[{"kind":"zmod","n":10},{"kind":"archetype","tags":["Z0"]}]}"#,
        )
        .unwrap(),
        DEFAULT_CAP,
    )
    .unwrap();
    let evens = Witness::Tuples(
        [0usize, 2, 4, 6, 8]
            .iter()
            .map(|k| vec![k.to_string(), "0".to_string()])
            .collect(),
    );
    let cert_evens = driver::certify(&z10z0, "s-semiring-2", Some(&evens), "Z10×Z0").unwrap();
    ok &= cert_evens
        .transcript
        .iter()
        .any(|c| c.pass && c.text.contains("identity (6,0)"));
    let fives = Witness::Tuples(vec![
        vec!["0".to_string(), "0".to_string()],
        vec!["5".to_string(), "0".to_string()],
    ]);
    ok &= driver::certify(&z10z0, "s-semiring-2", Some(&fives), "Z10×Z0").is_ok();

    // every certified level-II structure fails strictness
    for subject in [&z0z7, &z10z0] {
        match subject {
            Subject::Arch(a) => {
                let w = a.strictness_witness();
                ok &= w.is_some();
                if let Some((x, y)) = w {
                    ok &= a.is_zero(&a.add(&x, &y));
                }
            }
            _ => ok = false,
        }
    }
    line("13 level-II battery with the stated witnesses", ok);
}

#[test]
fn criterion_14_certificate_fuzzing() {
    // For every positive certificate the claims corpus produces, 20 seeded
    // single-element mutations of the witness must fail verification unless
    // the mutant is independently confirmed to be a genuine witness; a
    // verify-pass on an independently invalid mutant is a false accept, and
    // none are tolerated.
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    let mut certs_fuzzed = 0usize;
    let mut mutants_checked = 0usize;
    let mut false_accepts = Vec::new();

    for claim in corpus() {
        let SubjectSpec::Structure { spec } = &claim.subject else { continue };
        let Check::Certify { property, witness, expect_found: true, .. } = &claim.check else {
            continue;
        };
        let subject = build(spec, DEFAULT_CAP).unwrap();
        let Ok(cert) = driver::certify(&subject, property, witness.as_ref(), &claim.id) else {
            continue;
        };
        let Some(universe) = label_universe(&subject) else { continue };
        certs_fuzzed += 1;
        let mut produced = 0usize;
        let mut attempts = 0usize;
        while produced < 20 && attempts < 400 {
            attempts += 1;
            let Some(mutant) = mutate_witness(&cert.witness, &universe, &mut rng) else {
                break;
            };
            if mutant == cert.witness {
                continue;
            }
            let mut mutated = cert.clone();
            mutated.witness = mutant.clone();
            let verdict = driver::verify(&subject, &mutated).is_ok();
            match independent_validity(spec, &subject, &cert.property, &mutant) {
                Some(valid) => {
                    if verdict && !valid {
                        false_accepts.push((claim.id.clone(), mutant));
                    }
                    if !valid {
                        produced += 1;
                        mutants_checked += 1;
                        assert!(
                            !verdict,
                            "claim {}: verifier accepted an invalid mutant",
                            claim.id
                        );
                    }
                }
                None => {
                    // no independent oracle for this family: a passing
                    // mutant would be unmeasured, so demand rejection
                    produced += 1;
                    mutants_checked += 1;
                    assert!(!verdict, "claim {}: mutant unexpectedly verified", claim.id);
                }
            }
        }
    }
    println!(
        "criterion 14: fuzzed {certs_fuzzed} certificates, {mutants_checked} invalid mutants, {} false accepts",
        false_accepts.len()
    );
    line(
        "14 certificate fuzzing (0 false accepts)",
        false_accepts.is_empty() && certs_fuzzed >= 5 && mutants_checked >= 5 * 20,
    );
}

fn label_universe(subject: &Subject) -> Option<Vec<String>> {
    match subject {
        Subject::Finite(s) => Some(s.labels.clone()),
        // archetype witnesses mutate coordinate strings instead
        Subject::Arch(_) => Some(vec!["17".into(), "23".into(), "41".into()]),
        _ => None,
    }
}

fn mutate_witness(
    w: &Witness,
    universe: &[String],
    rng: &mut impl rand::Rng,
) -> Option<Witness> {
    use rand::seq::SliceRandom;
    let pick = |rng: &mut dyn rand::RngCore| universe.choose(rng).unwrap().clone();
    match w {
        Witness::Labels(l) => {
            let mut l = l.clone();
            let i = rng.gen_range(0..l.len());
            l[i] = pick(rng);
            Some(Witness::Labels(l))
        }
        Witness::Nested { outer, inner } => {
            let mut outer = outer.clone();
            let mut inner = inner.clone();
            if rng.gen_bool(0.5) && !outer.is_empty() {
                let i = rng.gen_range(0..outer.len());
                outer[i] = pick(rng);
            } else {
                let i = rng.gen_range(0..inner.len());
                inner[i] = pick(rng);
            }
            Some(Witness::Nested { outer, inner })
        }
        Witness::Tuples(ts) => {
            let mut ts = ts.clone();
            let i = rng.gen_range(0..ts.len());
            let j = rng.gen_range(0..ts[i].len());
            ts[i][j] = pick(rng);
            Some(Witness::Tuples(ts))
        }
        Witness::CoordSets(sets) => {
            use semicert::smarandache::CoordSet;
            let alts = [
                CoordSet::Zero,
                CoordSet::All,
                CoordSet::Positive,
                CoordSet::Multiples(2),
                CoordSet::IntegerMultiples(2),
            ];
            let mut sets = sets.clone();
            let i = rng.gen_range(0..sets.len());
            sets[i] = alts[rng.gen_range(0..alts.len())];
            Some(Witness::CoordSets(sets))
        }
        _ => None,
    }
}

/// Test-side reimplementation of witness validity for the families the
/// fuzzer mutates — written directly against the operation tables (or plain
/// integer arithmetic for archetype tuples), not the library's clause
/// functions.
fn independent_validity(
    spec: &semicert::spec::StructureSpec,
    subject: &Subject,
    property: &str,
    w: &Witness,
) -> Option<bool> {
    if let Subject::Arch(_) = subject {
        return arch_independent_validity(spec, property, w);
    }
    let Subject::Finite(s) = subject else { return None };
    let resolve = |labels: &[String]| -> Option<Vec<usize>> {
        let mut v: Vec<usize> = labels
            .iter()
            .map(|l| s.labels.iter().position(|x| x == l))
            .collect::<Option<_>>()?;
        v.sort_unstable();
        v.dedup();
        Some(v)
    };
    let is_semifield_subset = |subset: &[usize]| -> bool {
        if subset.len() < 2 {
            return false;
        }
        let closed = subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| subset.contains(&s.add(a, b)) && subset.contains(&s.mul(a, b)))
        });
        if !closed {
            return false;
        }
        let Some(z) = subset
            .iter()
            .copied()
            .find(|&z| subset.iter().all(|&p| s.add(z, p) == p))
        else {
            return false;
        };
        let Some(u) = subset
            .iter()
            .copied()
            .find(|&u| subset.iter().all(|&p| s.mul(u, p) == p && s.mul(p, u) == p))
        else {
            return false;
        };
        if z == u {
            return false;
        }
        let comm = subset
            .iter()
            .all(|&a| subset.iter().all(|&b| s.mul(a, b) == s.mul(b, a)));
        let strict = subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| !(a != z && b != z && s.add(a, b) == z))
        });
        let no_zd = subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| !(a != z && b != z && s.mul(a, b) == z))
        });
        comm && strict && no_zd
    };
    let is_closed = |subset: &[usize]| -> bool {
        subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| subset.contains(&s.add(a, b)) && subset.contains(&s.mul(a, b)))
        })
    };
    let local_zero = |subset: &[usize]| -> Option<usize> {
        subset
            .iter()
            .copied()
            .find(|&z| subset.iter().all(|&p| s.add(z, p) == p))
    };
    let hosts_semifield = |subset: &[usize]| -> bool {
        for mask in 1u32..(1 << subset.len()) {
            let inner: Vec<usize> = subset
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            if inner.len() < subset.len() && is_semifield_subset(&inner) {
                return true;
            }
        }
        false
    };
    match (property, w) {
        ("s-semiring-1", Witness::Labels(l)) => {
            let subset = resolve(l)?;
            Some(subset.len() < s.n() && is_semifield_subset(&subset))
        }
        ("s-subsemiring", Witness::Nested { outer, inner }) => {
            let outer = resolve(outer)?;
            let inner = resolve(inner)?;
            let outer_ok = !outer.is_empty()
                && outer.len() < s.n()
                && is_closed(&outer)
                && local_zero(&outer).is_some();
            let inner_ok = inner.iter().all(|x| outer.contains(x))
                && inner.len() < outer.len()
                && is_semifield_subset(&inner);
            Some(outer_ok && inner_ok)
        }
        ("s-dual-ideal", Witness::Nested { outer, inner }) => {
            let outer = resolve(outer)?;
            let inner = resolve(inner)?;
            let outer_ok = !outer.is_empty()
                && outer.len() < s.n()
                && is_closed(&outer)
                && local_zero(&outer).is_some();
            let inner_ok = inner.iter().all(|x| outer.contains(x))
                && inner.len() < outer.len()
                && is_semifield_subset(&inner);
            if !(outer_ok && inner_ok) {
                return Some(false);
            }
            let z = local_zero(&inner)?;
            let dual = outer.iter().all(|&p| {
                inner
                    .iter()
                    .filter(|&&a| a != z)
                    .all(|&a| inner.contains(&s.add(a, p)))
            });
            Some(dual)
        }
        ("s-pseudo-subsemiring", Witness::Nested { outer, inner }) => {
            let outer = resolve(outer)?;
            let inner = resolve(inner)?;
            let shape = inner.iter().all(|x| outer.contains(x))
                && inner.len() < outer.len()
                && outer.len() < s.n()
                && !inner.is_empty();
            Some(shape && (is_semifield_subset(&outer) || hosts_semifield(&outer)))
        }
        ("s-semidivision-ring", Witness::Nested { outer, inner }) => {
            let outer = resolve(outer)?;
            let inner = resolve(inner)?;
            let noncomm = |set: &[usize]| {
                set.iter()
                    .any(|&a| set.iter().any(|&b| s.mul(a, b) != s.mul(b, a)))
            };
            let outer_ok = outer.len() < s.n()
                && is_closed(&outer)
                && hosts_semifield(&outer)
                && noncomm(&outer);
            let inner_ok = inner.iter().all(|x| outer.contains(x))
                && inner.len() < outer.len()
                && is_closed(&inner)
                && noncomm(&inner)
                && s.zero().map_or(true, |z| {
                    inner.iter().all(|&a| {
                        inner
                            .iter()
                            .all(|&b| !(a != z && b != z && s.mul(a, b) == z))
                    })
                });
            Some(outer_ok && inner_ok)
        }
        ("s-weak-semifield", Witness::Nested { outer, inner }) => {
            let p = resolve(outer)?;
            let t = resolve(inner)?;
            let p_ok = is_semifield_subset(&p);
            let t_ok = !t.is_empty() && t != p && t.len() < s.n() && is_closed(&t);
            let absorbed = p.iter().all(|&x| {
                t.iter()
                    .all(|&a| t.contains(&s.mul(x, a)) && t.contains(&s.mul(a, x)))
            });
            Some(p_ok && t_ok && absorbed)
        }
        ("s-anti-semifield", Witness::Labels(l)) => {
            let subset = resolve(l)?;
            Some(s.flags().ring && subset.len() < s.n() && is_semifield_subset(&subset))
        }
        ("s-anti-semiring", Witness::Labels(l)) => {
            let subset = resolve(l)?;
            if !s.flags().ring || subset.is_empty() || !is_closed(&subset) {
                return Some(false);
            }
            let not_ring = match local_zero(&subset) {
                None => true,
                Some(z) => !subset
                    .iter()
                    .all(|&a| subset.iter().any(|&b| s.add(a, b) == z)),
            };
            Some(not_ring)
        }
        ("s-semiring-2" | "s-semifield-2", Witness::Labels(l)) => {
            let subset = resolve(l)?;
            if subset.len() >= s.n() || subset.len() < 2 {
                return Some(false);
            }
            let closed = subset.iter().all(|&a| {
                subset
                    .iter()
                    .all(|&b| subset.contains(&s.add(a, b)) && subset.contains(&s.mul(a, b)))
            });
            if !closed {
                return Some(false);
            }
            let z = subset
                .iter()
                .copied()
                .find(|&z| subset.iter().all(|&p| s.add(z, p) == p));
            let Some(z) = z else { return Some(false) };
            let inverses = subset
                .iter()
                .all(|&a| subset.iter().any(|&b| s.add(a, b) == z));
            let u = subset
                .iter()
                .copied()
                .find(|&u| subset.iter().all(|&p| s.mul(u, p) == p && s.mul(p, u) == p));
            let Some(u) = u else { return Some(false) };
            if u == z {
                return Some(false);
            }
            let comm = subset
                .iter()
                .all(|&a| subset.iter().all(|&b| s.mul(a, b) == s.mul(b, a)));
            let invertible = subset
                .iter()
                .filter(|&&a| a != z)
                .all(|&a| subset.iter().any(|&b| s.mul(a, b) == u));
            Some(inverses && comm && invertible)
        }
        ("s-semifield-1", Witness::Labels(l)) => {
            let subset = resolve(l)?;
            if subset.is_empty() || subset.len() >= s.n() {
                return Some(false);
            }
            if s.zero().map(|z| subset == [z]) == Some(true) {
                return Some(false);
            }
            let closed = subset.iter().all(|&a| {
                subset
                    .iter()
                    .all(|&b| subset.contains(&s.add(a, b)) && subset.contains(&s.mul(a, b)))
            });
            let absorbing = (0..s.n()).all(|x| {
                subset
                    .iter()
                    .all(|&a| subset.contains(&s.mul(x, a)) && subset.contains(&s.mul(a, x)))
            });
            Some(closed && absorbing && s.flags().semifield)
        }
        _ => None,
    }
}

/// Independent validity for archetype subjects: plain integer arithmetic
/// for tuple witnesses (with the factor moduli read off the spec) and a
/// hand truth table for symbolic coordinate sets.
fn arch_independent_validity(
    spec: &semicert::spec::StructureSpec,
    property: &str,
    w: &Witness,
) -> Option<bool> {
    use semicert::smarandache::CoordSet;
    use semicert::spec::StructureSpec;

    // factor moduli: None = a nonnegative-integer tag coordinate
    let moduli: Vec<Option<i64>> = match spec {
        StructureSpec::Archetype { tags } => tags.iter().map(|_| None).collect(),
        StructureSpec::MixedProduct { factors } => factors
            .iter()
            .map(|f| match f {
                StructureSpec::Zmod { n } => Some(*n as i64),
                StructureSpec::Archetype { .. } => None,
                _ => Some(-1),
            })
            .collect(),
        _ => return None,
    };
    if moduli.iter().any(|m| *m == Some(-1)) {
        return None;
    }

    match w {
        Witness::CoordSets(sets) => {
            let StructureSpec::Archetype { tags } = spec else { return None };
            if tags.len() != 1 || sets.len() != 1 {
                return None;
            }
            let tag = tags[0].as_str();
            let cs = sets[0];
            let verdict = match (property, tag) {
                ("s-semifield-1", "Z0") => matches!(cs, CoordSet::Multiples(p) if p >= 2),
                ("s-anti-semiring", "Z") => matches!(
                    cs,
                    CoordSet::Positive
                        | CoordSet::Nonneg
                        | CoordSet::NonnegIntegers
                        | CoordSet::Multiples(_)
                ),
                ("s-anti-semifield", "Q") => matches!(
                    cs,
                    CoordSet::Nonneg | CoordSet::NonnegIntegers | CoordSet::NonnegRationals
                ) || matches!(cs, CoordSet::Multiples(1)),
                _ => return None,
            };
            Some(verdict)
        }
        Witness::Tuples(raw) => {
            // parse as integers; a coordinate out of its domain is invalid
            let mut parsed: Vec<Vec<i64>> = Vec::with_capacity(raw.len());
            for t in raw {
                if t.len() != moduli.len() {
                    return Some(false);
                }
                let mut row = Vec::with_capacity(t.len());
                for (c, m) in t.iter().zip(&moduli) {
                    let Ok(v) = c.parse::<i64>() else { return Some(false) };
                    match m {
                        Some(n) => {
                            if v < 0 || v >= *n {
                                return Some(false);
                            }
                        }
                        None => {
                            if v < 0 {
                                return Some(false);
                            }
                        }
                    }
                    row.push(v);
                }
                parsed.push(row);
            }
            let add = |a: &[i64], b: &[i64]| -> Vec<i64> {
                a.iter()
                    .zip(b)
                    .zip(&moduli)
                    .map(|((x, y), m)| match m {
                        Some(n) => (x + y) % n,
                        None => x + y,
                    })
                    .collect()
            };
            let mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
                a.iter()
                    .zip(b)
                    .zip(&moduli)
                    .map(|((x, y), m)| match m {
                        Some(n) => (x * y) % n,
                        None => x * y,
                    })
                    .collect()
            };
            let is_zero = |a: &[i64]| a.iter().all(|&x| x == 0);
            match property {
                "s-semiring-2" | "s-semifield-2" => {
                    let list = &parsed;
                    if list.len() < 2 {
                        return Some(false);
                    }
                    let closed = list.iter().all(|x| {
                        list.iter()
                            .all(|y| list.contains(&add(x, y)) && list.contains(&mul(x, y)))
                    });
                    if !closed {
                        return Some(false);
                    }
                    let Some(z) = list.iter().find(|z| list.iter().all(|p| &add(z, p) == p))
                    else {
                        return Some(false);
                    };
                    let inverses =
                        list.iter().all(|x| list.iter().any(|y| &add(x, y) == z));
                    let Some(u) = list
                        .iter()
                        .find(|u| list.iter().all(|p| &mul(u, p) == p && &mul(p, u) == p))
                    else {
                        return Some(false);
                    };
                    if u == z {
                        return Some(false);
                    }
                    let invertible = list
                        .iter()
                        .filter(|x| x != &z)
                        .all(|x| list.iter().any(|y| &mul(x, y) == u));
                    Some(inverses && invertible)
                }
                "s-zero-divisor" => {
                    if parsed.len() != 4 {
                        return Some(false);
                    }
                    let (a, b, x, y) = (&parsed[0], &parsed[1], &parsed[2], &parsed[3]);
                    let ok = !is_zero(a)
                        && !is_zero(b)
                        && is_zero(&mul(a, b))
                        && x != y
                        && ![a, b].contains(&x)
                        && ![a, b].contains(&y)
                        && !is_zero(x)
                        && !is_zero(y)
                        && (is_zero(&mul(x, a)) || is_zero(&mul(a, x)))
                        && (is_zero(&mul(b, y)) || is_zero(&mul(y, b)))
                        && (!is_zero(&mul(x, y)) || !is_zero(&mul(y, x)));
                    Some(ok)
                }
                "s-anti-zero-divisor" => {
                    if parsed.len() != 4 {
                        return Some(false);
                    }
                    let (x, y, a, b) = (&parsed[0], &parsed[1], &parsed[2], &parsed[3]);
                    let ok = !is_zero(&mul(x, y))
                        && !is_zero(a)
                        && !is_zero(b)
                        && a != x
                        && a != y
                        && b != x
                        && b != y
                        && (!is_zero(&mul(a, x)) || !is_zero(&mul(x, a)))
                        && (!is_zero(&mul(b, y)) || !is_zero(&mul(y, b)))
                        && (is_zero(&mul(a, b)) || is_zero(&mul(b, a)));
                    Some(ok)
                }
                _ => None,
            }
        }
        _ => None,
    }
}
