//! Cross-module invariants: lattice law equivalences on randomly generated
//! sublattices, algebraic implications between the certified properties,
//! and distributivity sampling for the polynomial and formal-sum algebras.

use proptest::prelude::*;

use semicert::congruence::{congruence_closure, is_congruence_simple};
use semicert::constructions::{
    chain_lattice, group_semiring_lazy, matrix_semiring, poly_add, poly_mul, symmetric_group,
    zmod_mul_semigroup, zmod_ring, FormalSum, SparsePoly, DEFAULT_CAP,
};
use semicert::fixtures;
use semicert::lattice::{as_lattice, boolean, FiniteLattice};
use semicert::poset::{hasse, poset_from_leq};
use semicert::smarandache::{
    certify_s_semiring_i, certify_s_subsemiring, find_s_anti_zero_divisors, find_s_zero_divisors,
    Witness,
};
use semicert::structure::{characteristic, classify_elements, Characteristic, Structure};
use semicert::subalgebra::{subgroups, subgroups_exhaustive};

/// Meet/join-closed subsets of the 4-atom Boolean algebra, as lattices.
fn sublattice_of_b4(mask: u16) -> Option<FiniteLattice> {
    let b4 = boolean(4);
    let mut set: Vec<usize> = (0..16).filter(|&i| mask >> i & 1 == 1).collect();
    if set.is_empty() {
        return None;
    }
    // close under meet and join
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                for v in [b4.meet(a, b), b4.join(a, b)] {
                    if !next.contains(&v) {
                        next.push(v);
                    }
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() == set.len() {
            break;
        }
        set = next;
    }
    let labels: Vec<String> = set.iter().map(|&i| b4.labels()[i].clone()).collect();
    let mut pairs = Vec::new();
    for (i, &a) in set.iter().enumerate() {
        for (j, &b) in set.iter().enumerate() {
            if b4.leq(a, b) {
                pairs.push((i, j));
            }
        }
    }
    as_lattice(&poset_from_leq(&labels, &pairs).ok()?).ok()
}

proptest! {
    #[test]
    fn median_identity_iff_distributive(mask in 1u16..u16::MAX) {
        // sublattices of a Boolean algebra are distributive, so the median
        // identity must hold on them; the fixture rejects carry it the
        // other way below
        if let Some(l) = sublattice_of_b4(mask) {
            prop_assert!(l.is_distributive());
            for x in 0..l.n() {
                for y in 0..l.n() {
                    for z in 0..l.n() {
                        let lhs = l.join(l.join(l.meet(x, y), l.meet(y, z)), l.meet(z, x));
                        let rhs = l.meet(l.meet(l.join(x, y), l.join(y, z)), l.join(z, x));
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn hasse_reduction_idempotent_on_sublattices(mask in 1u16..u16::MAX) {
        if let Some(l) = sublattice_of_b4(mask) {
            let h = l.hasse();
            prop_assert_eq!(hasse(&h.transitive_closure()), h);
        }
    }

    #[test]
    fn poly_distributivity_sampled(
        terms_a in proptest::collection::vec((0usize..6, 0usize..6), 0..4),
        terms_b in proptest::collection::vec((0usize..6, 0usize..6), 0..4),
        terms_c in proptest::collection::vec((0usize..6, 0usize..6), 0..4),
    ) {
        let base = zmod_ring(6);
        let p = SparsePoly::new(terms_a, &base);
        let q = SparsePoly::new(terms_b, &base);
        let r = SparsePoly::new(terms_c, &base);
        let lhs = poly_mul(&p, &poly_add(&q, &r, &base), &base);
        let rhs = poly_add(&poly_mul(&p, &q, &base), &poly_mul(&p, &r, &base), &base);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn group_semiring_scalar_lift_law(
        terms in proptest::collection::vec((0usize..6, 0usize..2), 0..5),
        s in 0usize..2,
    ) {
        // s·(Σ s_i g_i) = (s at identity)·(Σ s_i g_i)
        let alg = group_semiring_lazy(chain_lattice(2), symmetric_group(3), "C2S3".into()).unwrap();
        let x = FormalSum::from_terms(&terms, &alg.coeff);
        let lifted = alg.embed_coeff(s).unwrap();
        prop_assert_eq!(alg.scale(s, &x), alg.mul(&lifted, &x));
    }

    #[test]
    fn formal_sum_distributivity_sampled(
        ta in proptest::collection::vec((0usize..6, 0usize..2), 0..4),
        tb in proptest::collection::vec((0usize..6, 0usize..2), 0..4),
        tc in proptest::collection::vec((0usize..6, 0usize..2), 0..4),
    ) {
        let alg = group_semiring_lazy(chain_lattice(2), symmetric_group(3), "C2S3".into()).unwrap();
        let a = FormalSum::from_terms(&ta, &alg.coeff);
        let b = FormalSum::from_terms(&tb, &alg.coeff);
        let c = FormalSum::from_terms(&tc, &alg.coeff);
        prop_assert_eq!(alg.mul(&a, &alg.add(&b, &c)), alg.add(&alg.mul(&a, &b), &alg.mul(&a, &c)));
    }
}

#[test]
fn poly_distributivity_exhaustive_small() {
    // all triples of polynomials over C2 with degree ≤ 2
    let base = chain_lattice(2);
    let mut polys = Vec::new();
    for mask in 0u8..8 {
        let terms: Vec<(usize, usize)> =
            (0..3).filter(|&e| mask >> e & 1 == 1).map(|e| (e, 1)).collect();
        polys.push(SparsePoly::new(terms, &base));
    }
    for p in &polys {
        for q in &polys {
            for r in &polys {
                let lhs = poly_mul(p, &poly_add(q, r, &base), &base);
                let rhs = poly_add(&poly_mul(p, q, &base), &poly_mul(p, r, &base), &base);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn corpus_distributive_implies_modular() {
    for (name, l) in fixtures::corpus() {
        if l.is_distributive() {
            assert!(l.is_modular(), "{name}");
        }
    }
}

#[test]
fn fields_are_flagged_and_congruence_simple() {
    for p in [2usize, 3, 5, 7, 11, 23] {
        let s = zmod_ring(p);
        assert!(s.flags().field);
        assert!(is_congruence_simple(&s));
    }
}

#[test]
fn zero_absorption_flag_matches_witness_scan() {
    // the flag is true exactly when no element breaks 0·x = x·0 = 0
    for s in [
        chain_lattice(5),
        zmod_ring(12),
        Structure::from_lattice(&fixtures::square()),
        matrix_semiring(&chain_lattice(2), 2, DEFAULT_CAP).unwrap(),
    ] {
        let z = s.zero().unwrap();
        let witness = (0..s.n()).find(|&x| s.mul(z, x) != z || s.mul(x, z) != z);
        assert_eq!(s.flags().zero_absorbing, witness.is_none());
    }
}

#[test]
fn pair_closures_are_least_congruences_up_to_eight() {
    // every congruence that identifies (a, b) contains the pair closure:
    // enumerate congruences as joins of pair closures on small structures
    for s in [zmod_ring(6), zmod_ring(8), chain_lattice(4)] {
        let n = s.n();
        for a in 0..n {
            for b in 0..n {
                let base = congruence_closure(&s, a, b);
                assert!(base.is_congruence(&s));
                for c in 0..n {
                    for d in 0..n {
                        let other = congruence_closure(&s, c, d);
                        if other.same(a, b) {
                            // other contains (a,b), so it must contain the
                            // least congruence identifying them
                            for x in 0..n {
                                for y in 0..n {
                                    if base.same(x, y) {
                                        assert!(other.same(x, y));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn subgroup_methods_agree_on_small_semigroups() {
    for m in [
        zmod_mul_semigroup(6),
        zmod_mul_semigroup(10),
        zmod_mul_semigroup(12),
        symmetric_group(3),
    ] {
        let fast = subgroups(&m);
        let mut slow = subgroups_exhaustive(&m);
        slow.sort();
        assert_eq!(fast, slow);
    }
}

#[test]
fn matrix_semirings_over_c2_strict_with_zero_divisors_no_characteristic() {
    for k in [2usize, 3] {
        let m = matrix_semiring(&chain_lattice(2), k, 1 << 20).unwrap();
        assert!(m.flags().strict, "k={k}");
        assert!(!classify_elements(&m).zero_divisor_pairs.is_empty(), "k={k}");
        assert_eq!(characteristic(&m), Characteristic::Undefined, "k={k}");
    }
}

#[test]
fn s_subsemiring_implies_s_semiring() {
    // wherever any subset certifies as an S-subsemiring, the whole
    // structure certifies at level I
    for s in [
        Structure::from_lattice(&fixtures::stacked_square()),
        Structure::from_lattice(&fixtures::stem_square()),
        chain_lattice(5),
        zmod_ring(10),
    ] {
        let n = s.n();
        let mut any_subset = false;
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if certify_s_subsemiring(&s, &subset, "inv").is_ok() {
                any_subset = true;
                break;
            }
        }
        if any_subset {
            assert!(certify_s_semiring_i(&s, "inv").is_ok());
        }
    }
}

#[test]
fn s_zero_divisors_are_zero_divisors_and_anti_implies_plain() {
    for s in [
        matrix_semiring(&chain_lattice(2), 2, DEFAULT_CAP).unwrap(),
        zmod_ring(12),
        Structure::from_lattice(&fixtures::square()),
    ] {
        let classes = classify_elements(&s);
        for cert in find_s_zero_divisors(&s, "inv") {
            let Witness::Labels(l) = &cert.witness else { panic!() };
            let a = s.index_of(&l[0]).unwrap();
            let b = s.index_of(&l[1]).unwrap();
            assert!(classes.zero_divisor_pairs.contains(&(a, b)));
        }
        if !find_s_anti_zero_divisors(&s, "inv").is_empty() {
            assert!(!classes.zero_divisors.is_empty());
        }
    }
}

#[test]
fn level_two_implies_non_strict_and_field_witness_is_simple() {
    // finite instance: Z10 hosts the field {0,5} (and {0,2,4,6,8})
    let s = zmod_ring(10);
    let cert = semicert::smarandache::certify_s_semiring_ii(&s, "Z10").unwrap();
    assert!(!s.flags().strict);
    let Witness::Labels(labels) = &cert.witness else { panic!() };
    // the witness field, taken as a structure of its own, is c-simple
    let idx: Vec<usize> = labels.iter().map(|l| s.index_of(l).unwrap()).collect();
    let sub_add = semicert::table::OpTable::build(idx.len(), |a, b| {
        idx.iter().position(|&x| x == s.add(idx[a], idx[b])).unwrap()
    });
    let sub_mul = semicert::table::OpTable::build(idx.len(), |a, b| {
        idx.iter().position(|&x| x == s.mul(idx[a], idx[b])).unwrap()
    });
    let field = Structure::validate_semiring(labels.clone(), sub_add, sub_mul).unwrap();
    assert!(field.flags().field);
    assert!(is_congruence_simple(&field));
}

#[test]
fn spanning_size_does_not_bound_independent_size() {
    // the corpus space Z0^2 has a 2-element spanning set (the units) and a
    // 3-element independent set
    use num::rational::BigRational;
    use num::BigInt;
    use semicert::archetype::Tag;
    use semicert::semivector::TupleSpace;
    let s = TupleSpace::new(vec![Tag::Z0, Tag::Z0], Tag::Z0, "Z0^2");
    let v = |c: &[i64]| -> Vec<BigRational> {
        c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    };
    let rep = s.standard_basis_report().unwrap();
    assert_eq!(rep.basis.len(), 2);
    let triple = vec![v(&[1, 1]), v(&[2, 1]), v(&[3, 0])];
    let (dep, complete) = s.independence(&triple);
    assert!(dep.is_none() && complete);
}

#[test]
fn dot_output_is_byte_stable() {
    let l = fixtures::stem_square();
    let a = l.hasse().to_dot();
    let b = fixtures::stem_square().hasse().to_dot();
    assert_eq!(a, b);
}
