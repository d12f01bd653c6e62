//! The claims regression corpus: each record names a subject, a check and
//! an expected outcome, replaying one concrete claim from the source
//! material (or a corrected value computed by this engine's oracles, for
//! the handful of spots where the source slips — see the repository notes).
//!
//! Records are deterministic and independent, so the runner can shuffle
//! and parallelize them freely.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use num::rational::BigRational;
use num::BigInt;

use crate::archetype::Tag;
use crate::congruence;
use crate::lattice::as_lattice;
use crate::poset::poset_from_leq;
use crate::semivector::{
    certify_s_anti_semivector, certify_s_pseudo_semivector, certify_s_subsemivector,
    check_s_linear_map, default_grid, finite_s_semivector_witness, is_subsemivector,
    lattice_space, tuple_s_semivector_witness, unit_indecomposability_holds,
    two_element_spanning_set_for_z_x_z0, valid_scalar_choices, MapSpec, TupleSpace,
};
use crate::smarandache::{self, CoordSet, Witness};
use crate::spec::driver;
use crate::spec::{build, StructureSpec, Subject};
use crate::structure::{characteristic, classify_elements, strictness_witness, Structure};
use crate::subalgebra;
use crate::table::FiniteMagma;

pub const CLAIMS_CAP: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum SubjectSpec {
    Structure { spec: StructureSpec },
    TupleSpace { factors: Vec<String>, scalar: String },
    LatticeSpace { lattice: StructureSpec },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Check {
    LatticePredicates { distributive: bool, modular: bool },
    IsBoolean { expect: bool },
    ComplementsAre { element: String, expect: Vec<String> },
    AtomsAre { expect: Vec<String> },
    AtomIsoSends { element: String, to: Vec<String> },
    HasseCovers { expect: Vec<(String, String)> },
    ValidatesSemiring { expect: bool },
    CharacteristicIs { expect: String },
    StrictIs { expect: bool },
    ZeroDivisorPairExists { pair: Option<(String, String)>, expect: bool },
    IdempotentsAre { expect: Vec<String> },
    InvertiblesAre { expect: Vec<String> },
    SubsetClosed { subset: Vec<String>, expect: bool },
    SubsemiringsInclude { subsets: Vec<Vec<String>> },
    IsIdeal { subset: Vec<String>, expect: bool },
    CongruenceClassCount { a: String, b: String, expect: usize },
    CSimple { expect: bool },
    SubgroupsInclude { subsets: Vec<Vec<String>> },
    SubgroupMethodsAgree,
    MulSSemigroup { expect: bool },
    SizeIs { expect: u64 },
    NonCommutative { expect: bool },
    MatrixReplay { a: String, b: String, ab: String, ba: String },
    InductiveStarConstOne { monotone: bool, fixed_point: bool, induction: bool },
    GroupRingZeroDivisorSupport2 { expect: bool },
    AtomFactorizationAll { n: usize },
    LazyCharacteristic { expect: String },
    Certify {
        property: String,
        witness: Option<Witness>,
        expect_found: bool,
        expect_complete: Option<bool>,
        expect_witness: Option<Witness>,
    },
    SZeroDivisorsExist { expect: bool },
    SAntiZeroDivisorsContain { x: String },
    SUnitsContain { x: String, y: String },
    SUnitsExist { expect: bool },
    SIdempotentsContain { a: String, b: String },
    SIdempotentsExist { expect: bool },
    ArchStrict { expect: bool },
    ArchSSemigroupAdd { expect: bool },
    TupleIndependent { set: Vec<Vec<i64>>, expect: bool },
    TupleInSpan { set: Vec<Vec<i64>>, target: Vec<i64>, expect: bool },
    TupleUniqueBasisDim { expect: usize },
    UnitIndecomposability { box_bound: u64 },
    NoTwoElementSpanningSet { bound: i64 },
    SpaceValid,
    SpaceUniqueBasis { labels: Vec<String>, dim: usize },
    RepresentationCount { basis: Vec<String>, v: String, expect: usize },
    FiniteSSemivector { expect: bool },
    TupleSSemivector { expect: bool },
    ScalarChoices { expect: Vec<String> },
    SSubsemivector { w: Vec<CoordSet>, expect: bool },
    PlainSubsemivector { w: Vec<CoordSet>, expect: bool },
    SPseudoSemivector { w: Vec<CoordSet>, over: String, expect: bool },
    SAntiSemivector { w: Vec<CoordSet>, field: String, sub: String },
    SLinearDoubling,
    SLinearIntegerGate { integer_grid: bool, expect: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub subject: SubjectSpec,
    pub check: Check,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

fn st(spec: StructureSpec) -> SubjectSpec {
    SubjectSpec::Structure { spec }
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn fixture(name: &str) -> StructureSpec {
    StructureSpec::Fixture { name: name.into() }
}

fn chain(n: usize) -> StructureSpec {
    StructureSpec::ChainLattice { n }
}

fn zmod(n: usize) -> StructureSpec {
    StructureSpec::Zmod { n }
}

fn tags(ts: &[&str]) -> StructureSpec {
    StructureSpec::Archetype { tags: strs(ts) }
}

fn labels_witness(v: &[&str]) -> Witness {
    Witness::Labels(strs(v))
}

fn tuples_witness(raw: &[&[&str]]) -> Witness {
    Witness::Tuples(raw.iter().map(|t| strs(t)).collect())
}

/// The full corpus.
pub fn corpus() -> Vec<ClaimRecord> {
    let mut out: Vec<ClaimRecord> = Vec::new();
    let mut add = |id: &str, subject: SubjectSpec, check: Check| {
        out.push(ClaimRecord { id: id.into(), subject, check });
    };

    // --- lattice predicates (§1.2) -------------------------------------
    add(
        "lat-pentagon-neither",
        st(fixture("pentagon")),
        Check::LatticePredicates { distributive: false, modular: false },
    );
    add(
        "lat-diamond-modular-only",
        st(fixture("diamond")),
        Check::LatticePredicates { distributive: false, modular: true },
    );
    for n in 2..=8 {
        add(
            &format!("lat-chain-c{n}-distributive"),
            st(chain(n)),
            Check::LatticePredicates { distributive: true, modular: true },
        );
    }
    for k in 1..=4 {
        add(
            &format!("lat-powerset-{k}-boolean"),
            st(StructureSpec::PowerSet { k }),
            Check::IsBoolean { expect: true },
        );
    }
    add("lat-chain3-not-boolean", st(chain(3)), Check::IsBoolean { expect: false });
    add(
        "lat-pentagon-complements-of-b",
        st(fixture("pentagon")),
        Check::ComplementsAre { element: "b".into(), expect: strs(&["a", "c"]) },
    );
    add(
        "lat-square-atoms",
        st(fixture("square")),
        Check::AtomsAre { expect: strs(&["a", "b"]) },
    );
    add(
        "lat-square-atom-iso",
        st(fixture("square")),
        Check::AtomIsoSends { element: "1".into(), to: strs(&["a", "b"]) },
    );
    add(
        "lat-hasse-chain4",
        st(chain(4)),
        Check::HasseCovers {
            expect: vec![
                ("0".into(), "a1".into()),
                ("a1".into(), "a2".into()),
                ("a2".into(), "1".into()),
            ],
        },
    );
    add(
        "lat-hasse-square",
        st(fixture("square")),
        Check::HasseCovers {
            expect: vec![
                ("0".into(), "a".into()),
                ("0".into(), "b".into()),
                ("a".into(), "1".into()),
                ("b".into(), "1".into()),
            ],
        },
    );
    add(
        "lat-hexagon-non-modular-lattice",
        st(fixture("hexagon")),
        Check::LatticePredicates { distributive: false, modular: false },
    );

    // --- semiring gate (§2.1–2.3) ---------------------------------------
    add("gate-c5-semiring", st(chain(5)), Check::ValidatesSemiring { expect: true });
    add(
        "gate-pentagon-rejected",
        st(fixture("pentagon")),
        Check::ValidatesSemiring { expect: false },
    );
    add(
        "gate-diamond-rejected",
        st(fixture("diamond")),
        Check::ValidatesSemiring { expect: false },
    );
    add("gate-z28-ring", st(zmod(28)), Check::ValidatesSemiring { expect: true });
    add("char-z23-finite", st(zmod(23)), Check::CharacteristicIs { expect: "23".into() });
    add(
        "char-chains-undefined",
        st(chain(6)),
        Check::CharacteristicIs { expect: "undefined".into() },
    );
    add("strict-lattice", st(chain(4)), Check::StrictIs { expect: true });
    add("strict-z12-fails", st(zmod(12)), Check::StrictIs { expect: false });
    add(
        "classify-square-zero-divisors",
        st(fixture("square")),
        Check::ZeroDivisorPairExists { pair: Some(("a".into(), "b".into())), expect: true },
    );
    add(
        "classify-z12-idempotents",
        st(zmod(12)),
        Check::IdempotentsAre { expect: strs(&["0", "1", "4", "9"]) },
    );
    add(
        "classify-z12-units",
        st(zmod(12)),
        Check::InvertiblesAre { expect: strs(&["1", "5", "7", "11"]) },
    );
    add(
        "sub-chain10-example",
        st(fixture("chain10")),
        Check::SubsetClosed { subset: strs(&["1", "a", "c", "d", "e", "g", "h", "0"]), expect: true },
    );
    add(
        "sub-z12-ideal-chain",
        st(zmod(12)),
        Check::SubsemiringsInclude {
            subsets: vec![
                strs(&["0", "6"]),
                strs(&["0", "3", "6", "9"]),
                strs(&["0", "2", "4", "6", "8", "10"]),
            ],
        },
    );
    add(
        "ideal-stacked-square-lower",
        st(fixture("stacked_square")),
        Check::IsIdeal { subset: strs(&["0", "d", "c", "a", "b"]), expect: true },
    );
    add(
        "ideal-01-in-c3-fails",
        st(chain(3)),
        Check::IsIdeal { subset: strs(&["0", "1"]), expect: false },
    );

    // --- congruences (§2.6) ----------------------------------------------
    add("csimple-z5", st(zmod(5)), Check::CSimple { expect: true });
    add("csimple-z7", st(zmod(7)), Check::CSimple { expect: true });
    add("csimple-z12-not", st(zmod(12)), Check::CSimple { expect: false });
    add(
        "congruence-z12-mod6",
        st(zmod(12)),
        Check::CongruenceClassCount { a: "0".into(), b: "6".into(), expect: 6 },
    );
    add(
        "csimple-v-of-cyclic4",
        st(StructureSpec::VOf { carrier: Box::new(StructureSpec::CyclicGroup { n: 4 }) }),
        Check::CSimple { expect: true },
    );
    add(
        "csimple-v-of-s2-group",
        st(StructureSpec::VOf { carrier: Box::new(StructureSpec::SymmetricGroup { n: 2 }) }),
        Check::CSimple { expect: true },
    );

    // --- semigroups and S-semigroups (§1.1) ------------------------------
    add(
        "sgrp-z12-subgroups",
        st(zmod(12)),
        Check::SubgroupsInclude {
            subsets: vec![
                strs(&["1", "5"]),
                strs(&["3", "9"]),
                strs(&["4", "8"]),
                strs(&["1", "5", "7", "11"]),
            ],
        },
    );
    add("sgrp-z12-methods-agree", st(zmod(12)), Check::SubgroupMethodsAgree);
    add("sgrp-z12-is-s-semigroup", st(zmod(12)), Check::MulSSemigroup { expect: true });
    add(
        "sgrp-z7-pair",
        st(zmod(7)),
        Check::SubgroupsInclude { subsets: vec![strs(&["1", "6"])] },
    );
    add(
        "sgrp-s3-transformation",
        st(StructureSpec::FullTransformation { n: 3 }),
        Check::MulSSemigroup { expect: true },
    );
    add(
        "sgrp-z0-additive-not",
        st(tags(&["Z0", "Z0"])),
        Check::ArchSSemigroupAdd { expect: false },
    );

    // --- constructions (§2.1–2.5) ----------------------------------------
    add(
        "con-product-c2-square",
        st(StructureSpec::DirectProduct { factors: vec![chain(2), fixture("square")] }),
        Check::SizeIs { expect: 8 },
    );
    add(
        "con-matrix-c2-16",
        st(StructureSpec::Matrix { base: Box::new(chain(2)), dim: 2 }),
        Check::SizeIs { expect: 16 },
    );
    add(
        "con-matrix-c2-noncommutative",
        st(StructureSpec::Matrix { base: Box::new(chain(2)), dim: 2 }),
        Check::NonCommutative { expect: true },
    );
    add(
        "con-matrix-square-replay-2-1-8",
        st(StructureSpec::Matrix { base: Box::new(fixture("square")), dim: 2 }),
        Check::MatrixReplay {
            a: "[[a,b],[0,1]]".into(),
            b: "[[1,a],[b,b]]".into(),
            ab: "[[1,1],[b,b]]".into(),
            ba: "[[a,1],[0,b]]".into(),
        },
    );
    add(
        "con-matrix-c2-strict-with-zero-divisors",
        st(StructureSpec::Matrix { base: Box::new(chain(2)), dim: 2 }),
        Check::ZeroDivisorPairExists { pair: None, expect: true },
    );
    add(
        "con-v-of-s2-group-size",
        st(StructureSpec::VOf { carrier: Box::new(StructureSpec::SymmetricGroup { n: 2 }) }),
        Check::SizeIs { expect: 3 },
    );
    add(
        "con-group-semiring-c2s3",
        st(StructureSpec::GroupSemiring {
            coeff: Box::new(chain(2)),
            carrier: Box::new(StructureSpec::SymmetricGroup { n: 3 }),
        }),
        Check::SizeIs { expect: 64 },
    );
    add(
        "con-z5-c12-group-ring-zero-divisors",
        st(StructureSpec::GroupRing {
            coeff: Box::new(zmod(5)),
            carrier: Box::new(StructureSpec::CyclicGroup { n: 12 }),
        }),
        Check::GroupRingZeroDivisorSupport2 { expect: true },
    );
    add(
        "con-z8s3-lazy-characteristic",
        st(StructureSpec::GroupRing {
            coeff: Box::new(zmod(8)),
            carrier: Box::new(StructureSpec::SymmetricGroup { n: 3 }),
        }),
        Check::LazyCharacteristic { expect: "8".into() },
    );
    add(
        "con-atom-factorization-square-c5",
        st(StructureSpec::GroupSemiring {
            coeff: Box::new(fixture("square")),
            carrier: Box::new(StructureSpec::CyclicGroup { n: 5 }),
        }),
        Check::AtomFactorizationAll { n: 5 },
    );
    add(
        "con-atom-factorization-b3-c7",
        st(StructureSpec::GroupSemiring {
            coeff: Box::new(StructureSpec::PowerSet { k: 3 }),
            carrier: Box::new(StructureSpec::CyclicGroup { n: 7 }),
        }),
        Check::AtomFactorizationAll { n: 7 },
    );
    add(
        "con-star-c2",
        st(chain(2)),
        Check::InductiveStarConstOne { monotone: true, fixed_point: true, induction: true },
    );
    add(
        "con-star-c3",
        st(chain(3)),
        Check::InductiveStarConstOne { monotone: true, fixed_point: true, induction: true },
    );

    // --- semifield battery (Ch. 3) ----------------------------------------
    for n in 2..=8 {
        add(
            &format!("sf-chain-c{n}"),
            st(chain(n)),
            Check::Certify {
                property: "semifield".into(),
                witness: None,
                expect_found: true,
                expect_complete: Some(true),
                expect_witness: None,
            },
        );
    }
    add(
        "sf-kite-non-chain",
        st(fixture("kite")),
        Check::Certify {
            property: "semifield".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    for k in 2..=4 {
        add(
            &format!("sf-boolean-{k}-refused"),
            st(StructureSpec::PowerSet { k }),
            Check::Certify {
                property: "semifield".into(),
                witness: None,
                expect_found: false,
                expect_complete: Some(true),
                expect_witness: None,
            },
        );
    }
    add(
        "sf-c2-prime",
        st(chain(2)),
        Check::Certify {
            property: "prime-semifield".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "sf-c5-not-prime",
        st(chain(5)),
        Check::Certify {
            property: "prime-semifield".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "sf-kite-not-prime",
        st(fixture("kite")),
        Check::Certify {
            property: "prime-semifield".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );

    // --- S-semirings level I and II (Ch. 4) --------------------------------
    add(
        "s1-matrix-c2-witness-zero-identity",
        st(StructureSpec::Matrix { base: Box::new(chain(2)), dim: 2 }),
        Check::Certify {
            property: "s-semiring-1".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: Some(labels_witness(&["[[0,0],[0,0]]", "[[1,0],[0,1]]"])),
        },
    );
    add(
        "s1-c2-refused",
        st(chain(2)),
        Check::Certify {
            property: "s-semiring-1".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "s1-c4-via-zero-one",
        st(chain(4)),
        Check::Certify {
            property: "s-semiring-1".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: Some(labels_witness(&["0", "1"])),
        },
    );
    add(
        "s2-z0xz7-field-witness",
        st(StructureSpec::MixedProduct { factors: vec![tags(&["Z0"]), zmod(7)] }),
        Check::Certify {
            property: "s-semiring-2".into(),
            witness: Some(tuples_witness(&[
                &["0", "0"],
                &["0", "1"],
                &["0", "2"],
                &["0", "3"],
                &["0", "4"],
                &["0", "5"],
                &["0", "6"],
            ])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "s2-z10xz0-identity-six",
        st(StructureSpec::MixedProduct { factors: vec![zmod(10), tags(&["Z0"])] }),
        Check::Certify {
            property: "s-semiring-2".into(),
            witness: Some(tuples_witness(&[
                &["0", "0"],
                &["2", "0"],
                &["4", "0"],
                &["6", "0"],
                &["8", "0"],
            ])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "s2-z10xz0-five-field",
        st(StructureSpec::MixedProduct { factors: vec![zmod(10), tags(&["Z0"])] }),
        Check::Certify {
            property: "s-semiring-2".into(),
            witness: Some(tuples_witness(&[&["0", "0"], &["5", "0"]])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "s2-lattices-refused",
        st(chain(4)),
        Check::Certify {
            property: "s-semiring-2".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add("s2-mixed-z0xz7-non-strict", st(StructureSpec::MixedProduct {
        factors: vec![tags(&["Z0"]), zmod(7)],
    }), Check::ArchStrict { expect: false });
    add("s2-z10xz0-non-strict", st(StructureSpec::MixedProduct {
        factors: vec![zmod(10), tags(&["Z0"])],
    }), Check::ArchStrict { expect: false });
    add(
        "s-sub-stacked-square-hosts-chain",
        st(fixture("stacked_square")),
        Check::Certify {
            property: "s-subsemiring".into(),
            witness: Some(labels_witness(&["0", "d", "c", "b", "a"])),
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "s-pseudo-chain6-inside",
        st(fixture("chain6_cdba")),
        Check::Certify {
            property: "s-pseudo-subsemiring".into(),
            witness: Some(labels_witness(&["0", "a", "b", "d"])),
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "s-pseudo-chain6-whole-but-one-refused",
        st(fixture("chain6_cdba")),
        Check::Certify {
            property: "s-pseudo-subsemiring".into(),
            witness: Some(labels_witness(&["0", "c", "d", "b", "a"])),
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "s-dual-ideal-stem-square",
        st(fixture("stem_square")),
        Check::Certify {
            property: "s-dual-ideal".into(),
            witness: Some(labels_witness(&["0", "a", "b", "d", "1"])),
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "s-dual-ideal-matrix-diag",
        st(StructureSpec::Matrix { base: Box::new(chain(2)), dim: 2 }),
        Check::Certify {
            property: "s-dual-ideal".into(),
            witness: Some(labels_witness(&[
                "[[0,0],[0,0]]",
                "[[1,0],[0,0]]",
                "[[0,0],[0,1]]",
                "[[1,0],[0,1]]",
            ])),
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "s-semidivision-matrix-c2",
        st(StructureSpec::Matrix { base: Box::new(chain(2)), dim: 2 }),
        Check::Certify {
            property: "s-semidivision-ring".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "s-semidivision-commutative-refused",
        st(chain(4)),
        Check::Certify {
            property: "s-semidivision-ring".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );

    // --- S-special elements (§4.3) -----------------------------------------
    add(
        "el-semifields-no-s-zero-divisors",
        st(chain(5)),
        Check::SZeroDivisorsExist { expect: false },
    );
    add(
        "el-matrix-c2-s-zero-divisors",
        st(StructureSpec::Matrix { base: Box::new(chain(2)), dim: 2 }),
        Check::SZeroDivisorsExist { expect: true },
    );
    add(
        "el-z04-tuple-cert",
        st(tags(&["Z0", "Z0", "Z0", "Z0"])),
        Check::Certify {
            property: "s-zero-divisor".into(),
            witness: Some(tuples_witness(&[
                &["0", "0", "4", "2"],
                &["5", "0", "0", "0"],
                &["2", "8", "0", "0"],
                &["0", "1", "0", "0"],
            ])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "el-z12-unit-anti-zero-divisor",
        st(zmod(12)),
        Check::SAntiZeroDivisorsContain { x: "1".into() },
    );
    add(
        "el-z07-unit-anti",
        st(tags(&["Z0"; 7])),
        Check::Certify {
            property: "s-anti-zero-divisor".into(),
            witness: Some(tuples_witness(&[
                &["1", "1", "1", "1", "1", "1", "1"],
                &["0", "0", "2", "3", "1", "0", "0"],
                &["2", "1", "0", "0", "6", "0", "0"],
                &["0", "0", "1", "2", "0", "3", "4"],
            ])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "el-z05-nonunit-anti",
        st(tags(&["Z0"; 5])),
        Check::Certify {
            property: "s-anti-zero-divisor".into(),
            witness: Some(tuples_witness(&[
                &["1", "1", "1", "1", "0"],
                &["0", "0", "6", "7", "0"],
                &["3", "2", "0", "0", "0"],
                &["0", "0", "0", "9", "2"],
            ])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "el-c2s3-s-idempotent",
        st(StructureSpec::GroupSemiring {
            coeff: Box::new(chain(2)),
            carrier: Box::new(StructureSpec::SymmetricGroup { n: 3 }),
        }),
        Check::SIdempotentsContain {
            a: "[123] + [231] + [312]".into(),
            b: "[132] + [213] + [321]".into(),
        },
    );
    add(
        "el-z0-tuples-no-s-idempotents",
        st(tags(&["Z0"; 5])),
        Check::Certify {
            property: "s-idempotents".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "el-boolean-no-s-units",
        st(StructureSpec::PowerSet { k: 3 }),
        Check::SUnitsExist { expect: false },
    );
    add(
        "el-z10-s-unit-three-seven",
        st(zmod(10)),
        Check::SUnitsContain { x: "3".into(), y: "7".into() },
    );

    // --- S-semifields (Ch. 5) -----------------------------------------------
    add(
        "sf1-z0-multiples",
        st(tags(&["Z0"])),
        Check::Certify {
            property: "s-semifield-1".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "sf1-q0-refused-complete",
        st(tags(&["Q0"])),
        Check::Certify {
            property: "s-semifield-1".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "sf1-c5-prefix",
        st(chain(5)),
        Check::Certify {
            property: "s-semifield-1".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "sf1-c2-refused",
        st(chain(2)),
        Check::Certify {
            property: "s-semifield-1".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "weak-host-certified",
        st(fixture("weak_semifield_host")),
        Check::Certify {
            property: "s-weak-semifield".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "weak-from-level-one-c5",
        st(chain(5)),
        Check::Certify {
            property: "s-weak-semifield".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "sf2-c7xz5",
        st(StructureSpec::MixedProduct { factors: vec![chain(7), zmod(5)] }),
        Check::Certify {
            property: "s-semifield-2".into(),
            witness: None,
            expect_found: true,
            expect_complete: Some(false),
            expect_witness: None,
        },
    );
    add(
        "sf2-z0-alone-refused",
        st(tags(&["Z0"])),
        Check::ArchStrict { expect: true },
    );

    // --- anti structures (§4.6, §5.5) ----------------------------------------
    for n in [2usize, 5, 8, 11, 12] {
        add(
            &format!("anti-zn-{n}-refused-complete"),
            st(zmod(n)),
            Check::Certify {
                property: "s-anti-semiring".into(),
                witness: None,
                expect_found: false,
                expect_complete: Some(true),
                expect_witness: None,
            },
        );
    }
    add(
        "anti-z-positives",
        st(tags(&["Z"])),
        Check::Certify {
            property: "s-anti-semiring".into(),
            witness: Some(Witness::CoordSets(vec![CoordSet::Positive])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "anti-q-nonneg-semifield",
        st(tags(&["Q"])),
        Check::Certify {
            property: "s-anti-semifield".into(),
            witness: Some(Witness::CoordSets(vec![CoordSet::Nonneg])),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "anti-z7-refused-complete",
        st(zmod(7)),
        Check::Certify {
            property: "s-anti-semifield".into(),
            witness: None,
            expect_found: false,
            expect_complete: Some(true),
            expect_witness: None,
        },
    );
    add(
        "anti-ideal-pz0-in-z0-inside-q",
        st(tags(&["Q"])),
        Check::Certify {
            property: "s-anti-ideal".into(),
            witness: Some(Witness::NestedCoordSets {
                outer: vec![CoordSet::NonnegIntegers],
                inner: vec![CoordSet::Multiples(3)],
            }),
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );
    add(
        "anti-qg-positive-cone",
        st(StructureSpec::GroupRing {
            coeff: Box::new(tags(&["Q"])),
            carrier: Box::new(StructureSpec::CyclicGroup { n: 3 }),
        }),
        Check::Certify {
            property: "s-anti-semiring".into(),
            witness: None,
            expect_found: true,
            expect_complete: None,
            expect_witness: None,
        },
    );

    // --- matrices over Z0, verify-mode (§4.2, §4.3, §5.2) ---------------------
    let z0_matrix = |dim: usize| StructureSpec::Matrix {
        base: Box::new(tags(&["Z0"])),
        dim,
    };
    add(
        "mx-diagonal-corner-subsemiring",
        st(z0_matrix(3)),
        Check::Certify {
            property: "s-subsemiring".into(),
            witness: Some(Witness::PatternPair {
                outer: (
                    vec![
                        vec![true, false, false],
                        vec![false, true, false],
                        vec![false, false, false],
                    ],
                    false,
                ),
                inner: (
                    vec![
                        vec![true, false, false],
                        vec![false, false, false],
                        vec![false, false, false],
                    ],
                    false,
                ),
            }),
            expect_found: true,
            expect_complete: Some(false),
            expect_witness: None,
        },
    );
    add(
        "mx-upper-triangular-semidivision",
        st(z0_matrix(2)),
        Check::Certify {
            property: "s-semidivision-ring".into(),
            witness: Some(Witness::PatternPair {
                outer: (vec![vec![true, true], vec![false, true]], false),
                inner: (vec![vec![true, true], vec![false, true]], true),
            }),
            expect_found: true,
            expect_complete: Some(false),
            expect_witness: None,
        },
    );
    add(
        "mx-diag-corner-weak-semifield",
        st(z0_matrix(2)),
        Check::Certify {
            property: "s-weak-semifield".into(),
            witness: Some(Witness::PatternPair {
                outer: (vec![vec![true, false], vec![false, true]], true),
                inner: (vec![vec![true, false], vec![false, false]], true),
            }),
            expect_found: true,
            expect_complete: Some(false),
            expect_witness: None,
        },
    );
    add(
        "mx-s-zero-divisor-matrices",
        st(z0_matrix(2)),
        Check::Certify {
            property: "s-zero-divisor".into(),
            witness: Some(Witness::Matrices(vec![
                vec![strs(&["1", "0"]), strs(&["0", "0"])],
                vec![strs(&["0", "0"]), strs(&["1", "0"])],
                vec![strs(&["0", "0"]), strs(&["0", "1"])],
                vec![strs(&["0", "0"]), strs(&["1", "1"])],
            ])),
            expect_found: true,
            expect_complete: Some(false),
            expect_witness: None,
        },
    );
    add(
        "mx-first-row-no-semidivision-witness",
        st(z0_matrix(2)),
        Check::Certify {
            property: "s-semidivision-ring".into(),
            witness: Some(Witness::PatternPair {
                outer: (vec![vec![true, true], vec![false, false]], false),
                inner: (vec![vec![true, true], vec![false, true]], true),
            }),
            expect_found: false,
            expect_complete: Some(false),
            expect_witness: None,
        },
    );

    // --- semivector spaces (Ch. 3, Ch. 6) -------------------------------------
    add(
        "sv-c4-over-c2-valid",
        SubjectSpec::LatticeSpace { lattice: chain(4) },
        Check::SpaceValid,
    );
    add(
        "sv-pentagon-over-c2-valid",
        SubjectSpec::LatticeSpace { lattice: fixture("pentagon") },
        Check::SpaceValid,
    );
    add(
        "sv-c4-unique-basis",
        SubjectSpec::LatticeSpace { lattice: chain(4) },
        Check::SpaceUniqueBasis { labels: strs(&["a1", "a2", "1"]), dim: 3 },
    );
    add(
        "sv-c4-representation-counts-one",
        SubjectSpec::LatticeSpace { lattice: chain(4) },
        Check::RepresentationCount { basis: strs(&["a1", "a2", "1"]), v: "1".into(), expect: 4 },
    );
    add(
        "sv-c4-representation-counts-a",
        SubjectSpec::LatticeSpace { lattice: chain(4) },
        Check::RepresentationCount { basis: strs(&["a1", "a2", "1"]), v: "a2".into(), expect: 2 },
    );
    add(
        "sv-c4-representation-zero",
        SubjectSpec::LatticeSpace { lattice: chain(4) },
        Check::RepresentationCount { basis: strs(&["a1", "a2", "1"]), v: "0".into(), expect: 1 },
    );
    add(
        "sv-z02-independent-triple",
        SubjectSpec::TupleSpace { factors: strs(&["Z0", "Z0"]), scalar: "Z0".into() },
        Check::TupleIndependent {
            set: vec![vec![1, 1], vec![2, 1], vec![3, 0]],
            expect: true,
        },
    );
    add(
        "sv-z02-one-three-outside",
        SubjectSpec::TupleSpace { factors: strs(&["Z0", "Z0"]), scalar: "Z0".into() },
        Check::TupleInSpan {
            set: vec![vec![1, 1], vec![2, 1], vec![3, 0]],
            target: vec![1, 3],
            expect: false,
        },
    );
    add(
        "sv-z02-three-two-inside",
        SubjectSpec::TupleSpace { factors: strs(&["Z0", "Z0"]), scalar: "Z0".into() },
        Check::TupleInSpan {
            set: vec![vec![1, 1], vec![2, 1], vec![3, 0]],
            target: vec![3, 2],
            expect: true,
        },
    );
    add(
        "sv-z03-unique-basis-dim3",
        SubjectSpec::TupleSpace { factors: strs(&["Z0", "Z0", "Z0"]), scalar: "Z0".into() },
        Check::TupleUniqueBasisDim { expect: 3 },
    );
    add(
        "sv-z08-poly-dim8",
        SubjectSpec::TupleSpace { factors: strs(&["Z0"; 8]), scalar: "Z0".into() },
        Check::TupleUniqueBasisDim { expect: 8 },
    );
    add(
        "sv-unit-indecomposability",
        SubjectSpec::TupleSpace { factors: strs(&["Z0", "Z0", "Z0"]), scalar: "Z0".into() },
        Check::UnitIndecomposability { box_bound: 3 },
    );
    add(
        "sv-z-x-z0-no-two-element-spanning-set",
        SubjectSpec::TupleSpace { factors: strs(&["Z", "Z0"]), scalar: "Z0".into() },
        Check::NoTwoElementSpanningSet { bound: 3 },
    );
    add(
        "sv-z-x-z0-s-semivector",
        SubjectSpec::TupleSpace { factors: strs(&["Z", "Z0"]), scalar: "Z0".into() },
        Check::TupleSSemivector { expect: true },
    );
    add(
        "sv-q03-not-s",
        SubjectSpec::TupleSpace { factors: strs(&["Q0", "Q0", "Q0"]), scalar: "Q0".into() },
        Check::TupleSSemivector { expect: false },
    );
    add(
        "sv-lattice-space-not-s",
        SubjectSpec::LatticeSpace { lattice: chain(4) },
        Check::FiniteSSemivector { expect: false },
    );
    add(
        "sv-scalar-choices-r0q0z",
        SubjectSpec::TupleSpace { factors: strs(&["R0", "Q0", "Z"]), scalar: "Z0".into() },
        Check::ScalarChoices { expect: strs(&["Z0"]) },
    );
    add(
        "sv-scalar-choices-qz0",
        SubjectSpec::TupleSpace { factors: strs(&["Q", "Z0"]), scalar: "Z0".into() },
        Check::ScalarChoices { expect: strs(&["Z0"]) },
    );
    add(
        "sv-scalar-choices-q0q0",
        SubjectSpec::TupleSpace { factors: strs(&["Q0", "Q0"]), scalar: "Q0".into() },
        Check::ScalarChoices { expect: vec![] },
    );
    add(
        "sv-s-subsemivector-6-2-1",
        SubjectSpec::TupleSpace { factors: strs(&["Q0", "Z0", "Z"]), scalar: "Z0".into() },
        Check::SSubsemivector {
            w: vec![CoordSet::All, CoordSet::All, CoordSet::IntegerMultiples(2)],
            expect: true,
        },
    );
    add(
        "sv-subsemivector-not-s-6-2-1",
        SubjectSpec::TupleSpace { factors: strs(&["Q0", "Z0", "Z"]), scalar: "Z0".into() },
        Check::SSubsemivector {
            w: vec![CoordSet::All, CoordSet::All, CoordSet::NonnegIntegers],
            expect: false,
        },
    );
    add(
        "sv-plain-subsemivector-6-2-1",
        SubjectSpec::TupleSpace { factors: strs(&["Q0", "Z0", "Z"]), scalar: "Z0".into() },
        Check::PlainSubsemivector {
            w: vec![CoordSet::All, CoordSet::All, CoordSet::NonnegIntegers],
            expect: true,
        },
    );
    add(
        "sv-pseudo-6-3-6",
        SubjectSpec::TupleSpace { factors: strs(&["Q", "R0"]), scalar: "Q0".into() },
        Check::SPseudoSemivector {
            w: vec![CoordSet::NonnegIntegers, CoordSet::All],
            over: "Z0".into(),
            expect: true,
        },
    );
    add(
        "sv-anti-6-4-1",
        SubjectSpec::TupleSpace { factors: strs(&["R"]), scalar: "Z0".into() },
        Check::SAntiSemivector {
            w: vec![CoordSet::NonnegRationals],
            field: "Q".into(),
            sub: "Z0".into(),
        },
    );
    add(
        "sv-linear-doubling-6-3-1",
        SubjectSpec::TupleSpace { factors: strs(&["Z0", "Q"]), scalar: "Z0".into() },
        Check::SLinearDoubling,
    );
    add(
        "sv-linear-gate-integer-grid",
        SubjectSpec::TupleSpace { factors: strs(&["Q0", "R"]), scalar: "Z0".into() },
        Check::SLinearIntegerGate { integer_grid: true, expect: true },
    );
    add(
        "sv-linear-gate-default-grid",
        SubjectSpec::TupleSpace { factors: strs(&["Q0", "R"]), scalar: "Z0".into() },
        Check::SLinearIntegerGate { integer_grid: false, expect: false },
    );

    out
}

// ---------------------------------------------------------------------------
// runner

fn parse_tag(s: &str) -> Result<Tag, String> {
    Tag::parse(s).ok_or_else(|| format!("unknown tag {s:?}"))
}

fn finite_subject(spec: &StructureSpec) -> Result<Structure, String> {
    match build(spec, CLAIMS_CAP).map_err(|e| e.to_string())? {
        Subject::Finite(s) => Ok(s),
        other => Err(format!("expected a finite structure, got {}", other.describe())),
    }
}

/// Join-table lattice view of a structure spec: works for both validated
/// lattice semirings and the non-distributive fixtures.
fn lattice_subject(spec: &StructureSpec) -> Result<crate::lattice::FiniteLattice, String> {
    let (labels, join): (Vec<String>, FiniteMagma) =
        match build(spec, CLAIMS_CAP).map_err(|e| e.to_string())? {
            Subject::Finite(s) => (
                s.labels.clone(),
                FiniteMagma::new(s.labels.clone(), s.add_table().clone()),
            ),
            Subject::Magma(m) => (m.labels.clone(), m),
            other => return Err(format!("not a lattice subject: {}", other.describe())),
        };
    let mut pairs = Vec::new();
    for a in 0..join.n() {
        for b in 0..join.n() {
            if join.op(a, b) == b {
                pairs.push((a, b));
            }
        }
    }
    let p = poset_from_leq(&labels, &pairs).map_err(|e| e.to_string())?;
    as_lattice(&p).map_err(|e| e.to_string())
}

fn idx_set(s: &Structure, labels: &[String]) -> Result<Vec<usize>, String> {
    let mut v = smarandache::resolve_labels(s, labels)?;
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn expect(cond: bool, detail: String) -> Result<String, String> {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

pub fn run_claim(claim: &ClaimRecord) -> ClaimOutcome {
    let start = Instant::now();
    let result = run_claim_inner(claim);
    let millis = start.elapsed().as_millis();
    match result {
        Ok(detail) => ClaimOutcome { id: claim.id.clone(), pass: true, detail, millis },
        Err(detail) => ClaimOutcome { id: claim.id.clone(), pass: false, detail, millis },
    }
}

fn tuple_space(factors: &[String], scalar: &str, name: &str) -> Result<TupleSpace, String> {
    let fs: Result<Vec<Tag>, String> = factors.iter().map(|f| parse_tag(f)).collect();
    Ok(TupleSpace::new(fs?, parse_tag(scalar)?, name))
}

fn run_claim_inner(claim: &ClaimRecord) -> Result<String, String> {
    match (&claim.subject, &claim.check) {
        (SubjectSpec::Structure { spec }, check) => run_structure_check(spec, check),
        (SubjectSpec::TupleSpace { factors, scalar }, check) => {
            let space = tuple_space(factors, scalar, &claim.id)?;
            run_tuple_check(&space, check)
        }
        (SubjectSpec::LatticeSpace { lattice }, check) => {
            let l = lattice_subject(lattice)?;
            let space = lattice_space(&l, &claim.id);
            run_lattice_space_check(&space, check)
        }
    }
}

fn run_structure_check(spec: &StructureSpec, check: &Check) -> Result<String, String> {
    match check {
        Check::LatticePredicates { distributive, modular } => {
            let l = lattice_subject(spec)?;
            expect(
                l.is_distributive() == *distributive && l.is_modular() == *modular,
                format!(
                    "distributive={} modular={}",
                    l.is_distributive(),
                    l.is_modular()
                ),
            )
        }
        Check::IsBoolean { expect: e } => {
            let l = lattice_subject(spec)?;
            expect(l.is_boolean() == *e, format!("boolean={}", l.is_boolean()))
        }
        Check::ComplementsAre { element, expect: e } => {
            let l = lattice_subject(spec)?;
            let x = l.index_of(element).ok_or("unknown element")?;
            let got: Vec<String> = l
                .complements(x)
                .into_iter()
                .map(|i| l.label(i).to_string())
                .collect();
            expect(&got == e, format!("complements({element}) = {got:?}"))
        }
        Check::AtomsAre { expect: e } => {
            let l = lattice_subject(spec)?;
            let got: Vec<String> = l.atoms().into_iter().map(|i| l.label(i).to_string()).collect();
            expect(&got == e, format!("atoms = {got:?}"))
        }
        Check::AtomIsoSends { element, to } => {
            let l = lattice_subject(spec)?;
            let iso = l.boolean_atom_iso_labelled().map_err(|e| e.to_string())?;
            let got = iso
                .iter()
                .find(|(x, _)| x == element)
                .map(|(_, s)| s.iter().cloned().collect::<Vec<_>>())
                .ok_or("unknown element")?;
            let want: std::collections::BTreeSet<String> = to.iter().cloned().collect();
            let gotset: std::collections::BTreeSet<String> = got.iter().cloned().collect();
            expect(gotset == want, format!("ψ({element}) = {got:?}"))
        }
        Check::HasseCovers { expect: e } => {
            let l = lattice_subject(spec)?;
            let got = l.hasse().cover_labels();
            expect(&got == e, format!("covers = {got:?}"))
        }
        Check::ValidatesSemiring { expect: e } => {
            let outcome = match build(spec, CLAIMS_CAP) {
                Ok(Subject::Finite(s)) => s.flags().semiring,
                Ok(Subject::Magma(_)) => false, // fixture that failed the gate
                Ok(_) => true,
                Err(err) => return Err(err.to_string()),
            };
            expect(outcome == *e, format!("semiring={outcome}"))
        }
        Check::CharacteristicIs { expect: e } => {
            let s = finite_subject(spec)?;
            let got = characteristic(&s).to_string();
            expect(&got == e, format!("characteristic = {got}"))
        }
        Check::StrictIs { expect: e } => {
            let s = finite_subject(spec)?;
            let got = s.flags().strict;
            let detail = match strictness_witness(&s) {
                Some((a, b)) => format!("strict={got} witness ({}, {})", s.label(a), s.label(b)),
                None => format!("strict={got}"),
            };
            expect(got == *e, detail)
        }
        Check::ZeroDivisorPairExists { pair, expect: e } => {
            let s = finite_subject(spec)?;
            let classes = classify_elements(&s);
            let any = !classes.zero_divisor_pairs.is_empty();
            let pair_ok = match pair {
                Some((a, b)) => {
                    let ai = s.index_of(a).ok_or("unknown element")?;
                    let bi = s.index_of(b).ok_or("unknown element")?;
                    classes.zero_divisor_pairs.contains(&(ai, bi))
                }
                None => true,
            };
            expect(any == *e && pair_ok, format!("zero-divisor pairs: {}", classes.zero_divisor_pairs.len()))
        }
        Check::IdempotentsAre { expect: e } => {
            let s = finite_subject(spec)?;
            let got: Vec<String> = classify_elements(&s)
                .idempotents
                .iter()
                .map(|&i| s.label(i).to_string())
                .collect();
            expect(&got == e, format!("idempotents = {got:?}"))
        }
        Check::InvertiblesAre { expect: e } => {
            let s = finite_subject(spec)?;
            let got: Vec<String> = classify_elements(&s)
                .invertibles
                .iter()
                .map(|&i| s.label(i).to_string())
                .collect();
            expect(&got == e, format!("invertibles = {got:?}"))
        }
        Check::SubsetClosed { subset, expect: e } => {
            let s = finite_subject(spec)?;
            let idx = idx_set(&s, subset)?;
            let got = subalgebra::is_closed(&s, &idx);
            expect(got == *e, format!("closed={got}"))
        }
        Check::SubsemiringsInclude { subsets } => {
            let s = finite_subject(spec)?;
            let found = subalgebra::subsemirings(&s, 1 << 16);
            for want in subsets {
                let idx = idx_set(&s, want)?;
                if !found.subsets.contains(&idx) {
                    return Err(format!("missing subsemiring {want:?}"));
                }
            }
            Ok(format!("{} subsemirings, complete={}", found.subsets.len(), found.complete))
        }
        Check::IsIdeal { subset, expect: e } => {
            let s = finite_subject(spec)?;
            let idx = idx_set(&s, subset)?;
            let got = subalgebra::is_ideal(&s, &idx, subalgebra::Side::TwoSided);
            expect(got == *e, format!("ideal={got}"))
        }
        Check::CongruenceClassCount { a, b, expect: e } => {
            let s = finite_subject(spec)?;
            let ai = s.index_of(a).ok_or("unknown element")?;
            let bi = s.index_of(b).ok_or("unknown element")?;
            let c = congruence::congruence_closure(&s, ai, bi);
            expect(c.class_count() == *e, format!("classes = {}", c.class_count()))
        }
        Check::CSimple { expect: e } => {
            let s = finite_subject(spec)?;
            let got = congruence::is_congruence_simple(&s);
            let detail = match congruence::congruence_simplicity_witness(&s) {
                Some((a, b)) => format!("simple={got} witness ({}, {})", s.label(a), s.label(b)),
                None => format!("simple={got}"),
            };
            expect(got == *e, detail)
        }
        Check::SubgroupsInclude { subsets } => {
            let m = mul_magma(spec)?;
            let found = subalgebra::subgroups(&m);
            for want in subsets {
                let idx: Result<Vec<usize>, String> = want
                    .iter()
                    .map(|l| m.index_of(l).ok_or(format!("unknown element {l}")))
                    .collect();
                let mut idx = idx?;
                idx.sort_unstable();
                if !found.contains(&idx) {
                    return Err(format!("missing subgroup {want:?}"));
                }
            }
            Ok(format!("{} subgroups", found.len()))
        }
        Check::SubgroupMethodsAgree => {
            let m = mul_magma(spec)?;
            if m.n() > 12 {
                return Err("exhaustive comparison capped at 12 elements".into());
            }
            let fast = subalgebra::subgroups(&m);
            let mut slow = subalgebra::subgroups_exhaustive(&m);
            slow.sort();
            expect(fast == slow, format!("{} subgroups by both methods", fast.len()))
        }
        Check::MulSSemigroup { expect: e } => {
            let m = mul_magma(spec)?;
            let got = subalgebra::is_s_semigroup(&m);
            expect(got == *e, format!("s-semigroup={got}"))
        }
        Check::SizeIs { expect: e } => {
            let size = match build(spec, CLAIMS_CAP).map_err(|er| er.to_string())? {
                Subject::Finite(s) => s.n() as u64,
                Subject::Magma(m) => m.n() as u64,
                Subject::Formal(f) => f.size() as u64,
                other => return Err(format!("no size for {}", other.describe())),
            };
            expect(size == *e, format!("size = {size}"))
        }
        Check::NonCommutative { expect: e } => {
            let s = finite_subject(spec)?;
            let got = !s.flags().commutative_mul;
            expect(got == *e, format!("non-commutative={got}"))
        }
        Check::MatrixReplay { a, b, ab, ba } => {
            let s = finite_subject(spec)?;
            let ai = s.index_of(a).ok_or("unknown matrix a")?;
            let bi = s.index_of(b).ok_or("unknown matrix b")?;
            let got_ab = s.label(s.mul(ai, bi)).to_string();
            let got_ba = s.label(s.mul(bi, ai)).to_string();
            expect(
                &got_ab == ab && &got_ba == ba,
                format!("A·B = {got_ab}, B·A = {got_ba}"),
            )
        }
        Check::InductiveStarConstOne { monotone, fixed_point, induction } => {
            let s = finite_subject(spec)?;
            let order = s.derived_order().ok_or("no derived order")?;
            let one = s.one().ok_or("no multiplicative identity")?;
            let star = vec![one; s.n()];
            let rep = crate::star::check_inductive_star(&s, &order, &star)
                .map_err(|e| format!("{e:?}"))?;
            expect(
                rep.monotone.is_ok() == *monotone
                    && rep.fixed_point.is_ok() == *fixed_point
                    && rep.induction.is_ok() == *induction,
                format!(
                    "monotone={} fixed_point={} induction={}",
                    rep.monotone.is_ok(),
                    rep.fixed_point.is_ok(),
                    rep.induction.is_ok()
                ),
            )
        }
        Check::GroupRingZeroDivisorSupport2 { expect: e } => {
            let alg = match build(spec, 1).map_err(|er| er.to_string())? {
                Subject::Formal(f) => f,
                other => return Err(format!("expected lazy algebra, got {}", other.describe())),
            };
            let found = alg.zero_divisor_support2();
            let detail = match &found {
                Some((x, y)) => format!("({})·({}) = 0", alg.render(x), alg.render(y)),
                None => "no support-2 zero divisor found".into(),
            };
            expect(found.is_some() == *e, detail)
        }
        Check::AtomFactorizationAll { n } => {
            let alg = match build(spec, 1).map_err(|er| er.to_string())? {
                Subject::Formal(f) => f,
                Subject::Finite(_) => {
                    // rebuild lazily to keep formal-sum values
                    match spec {
                        StructureSpec::GroupSemiring { coeff, carrier } => {
                            let c = finite_subject(coeff)?;
                            let g = match build(carrier, CLAIMS_CAP).map_err(|e| e.to_string())? {
                                Subject::Magma(m) => m,
                                _ => return Err("carrier must be a magma".into()),
                            };
                            crate::constructions::group_semiring_lazy(c, g, "alg".into())
                                .map_err(|e| e.to_string())?
                        }
                        _ => return Err("expected a group semiring".into()),
                    }
                }
                other => return Err(format!("unexpected subject {}", other.describe())),
            };
            for i in 0..*n {
                let cert =
                    smarandache::certify_atom_factorization(&alg, *n, i, "claim")
                        .map_err(|e| format!("g^{i}: {}", e.reason))?;
                smarandache::verify(&smarandache::SubjectRef::Formal(&alg), &cert)
                    .map_err(|e| format!("g^{i}: {e}"))?;
            }
            Ok(format!("all {n} exponents factor with both factors outside the carrier"))
        }
        Check::LazyCharacteristic { expect: e } => {
            let alg = match build(spec, 1).map_err(|er| er.to_string())? {
                Subject::Formal(f) => f,
                other => return Err(format!("expected lazy algebra, got {}", other.describe())),
            };
            let got = alg.characteristic().to_string();
            expect(&got == e, format!("characteristic = {got}"))
        }
        Check::Certify { property, witness, expect_found, expect_complete, expect_witness } => {
            let subject = build(spec, CLAIMS_CAP).map_err(|er| er.to_string())?;
            match driver::certify(&subject, property, witness.as_ref(), "claim") {
                Ok(cert) => {
                    if !*expect_found {
                        return Err(format!("unexpectedly certified: {:?}", cert.witness));
                    }
                    if let Some(c) = expect_complete {
                        if cert.complete_search != *c {
                            return Err(format!(
                                "complete_search = {}, expected {c}",
                                cert.complete_search
                            ));
                        }
                    }
                    if let Some(w) = expect_witness {
                        if &cert.witness != w {
                            return Err(format!("witness {:?}", cert.witness));
                        }
                    }
                    driver::verify(&subject, &cert)?;
                    Ok(format!("certified; witness {:?}", cert.witness))
                }
                Err(nf) => {
                    if *expect_found {
                        return Err(format!("not found: {}", nf.reason));
                    }
                    if let Some(c) = expect_complete {
                        if nf.complete != *c {
                            return Err(format!(
                                "negative with complete = {}, expected {c} ({})",
                                nf.complete, nf.reason
                            ));
                        }
                    }
                    Ok(format!("refused (complete={}): {}", nf.complete, nf.reason))
                }
            }
        }
        Check::SZeroDivisorsExist { expect: e } => {
            let s = finite_subject(spec)?;
            let certs = smarandache::find_s_zero_divisors(&s, "claim");
            expect(!certs.is_empty() == *e, format!("{} S-zero-divisor tuples", certs.len()))
        }
        Check::SAntiZeroDivisorsContain { x } => {
            let s = finite_subject(spec)?;
            let certs = smarandache::find_s_anti_zero_divisors(&s, "claim");
            let hit = certs.iter().any(|c| match &c.witness {
                Witness::Labels(l) => &l[0] == x,
                _ => false,
            });
            expect(hit, format!("{} S-anti-zero divisors", certs.len()))
        }
        Check::SUnitsContain { x, y } => {
            let s = finite_subject(spec)?;
            let certs = smarandache::find_s_units(&s, "claim");
            let hit = certs.iter().any(|c| match &c.witness {
                Witness::Labels(l) => &l[0] == x && &l[1] == y,
                _ => false,
            });
            expect(hit, format!("{} S-units", certs.len()))
        }
        Check::SUnitsExist { expect: e } => {
            let s = finite_subject(spec)?;
            let certs = smarandache::find_s_units(&s, "claim");
            expect(!certs.is_empty() == *e, format!("{} S-units", certs.len()))
        }
        Check::SIdempotentsContain { a, b } => {
            let s = finite_subject(spec)?;
            let certs = smarandache::find_s_idempotents(&s, "claim");
            let hit = certs.iter().any(|c| match &c.witness {
                Witness::Labels(l) => &l[0] == a && &l[1] == b,
                _ => false,
            });
            expect(hit, format!("{} S-idempotent pairs", certs.len()))
        }
        Check::SIdempotentsExist { expect: e } => {
            let s = finite_subject(spec)?;
            let certs = smarandache::find_s_idempotents(&s, "claim");
            expect(!certs.is_empty() == *e, format!("{} S-idempotent pairs", certs.len()))
        }
        Check::ArchStrict { expect: e } => {
            match build(spec, CLAIMS_CAP).map_err(|er| er.to_string())? {
                Subject::Arch(a) => {
                    let witness = a.strictness_witness();
                    let strict = witness.is_none();
                    let detail = match witness {
                        Some((x, y)) => {
                            format!("strict={strict}: {} + {} = 0", a.render(&x), a.render(&y))
                        }
                        None => format!("strict={strict}"),
                    };
                    expect(strict == *e, detail)
                }
                Subject::Finite(s) => {
                    let strict = s.flags().strict;
                    expect(strict == *e, format!("strict={strict}"))
                }
                other => Err(format!("no strictness for {}", other.describe())),
            }
        }
        Check::ArchSSemigroupAdd { expect: e } => {
            match build(spec, CLAIMS_CAP).map_err(|er| er.to_string())? {
                Subject::Arch(a) => {
                    let group_like = a.factors.iter().any(|f| match f {
                        crate::archetype::Factor::Tag(t) => t.is_group_like(),
                        crate::archetype::Factor::Table(s) => s.flags().group_add && s.n() > 1,
                    });
                    expect(group_like == *e, format!("additive S-semigroup = {group_like}"))
                }
                other => Err(format!("expected archetype, got {}", other.describe())),
            }
        }
        _ => Err("check does not apply to a structure subject".into()),
    }
}

fn mul_magma(spec: &StructureSpec) -> Result<FiniteMagma, String> {
    match build(spec, CLAIMS_CAP).map_err(|e| e.to_string())? {
        Subject::Finite(s) => Ok(FiniteMagma::new(s.labels.clone(), s.mul_table().clone())),
        Subject::Magma(m) => Ok(m),
        other => Err(format!("no multiplicative part for {}", other.describe())),
    }
}

fn run_tuple_check(space: &TupleSpace, check: &Check) -> Result<String, String> {
    let vecs = |raw: &[Vec<i64>]| -> Vec<Vec<BigRational>> {
        raw.iter()
            .map(|v| v.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
            .collect()
    };
    match check {
        Check::TupleIndependent { set, expect: e } => {
            let set = vecs(set);
            let (dep, complete) = space.independence(&set);
            expect(
                dep.is_none() == *e && complete,
                format!("independent={} complete={complete}", dep.is_none()),
            )
        }
        Check::TupleInSpan { set, target, expect: e } => {
            let set = vecs(set);
            let target: Vec<BigRational> =
                target.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
            let dec = space.in_span(&set, &target);
            expect(
                dec.combination.is_some() == *e && dec.complete,
                format!("member={} complete={}", dec.combination.is_some(), dec.complete),
            )
        }
        Check::TupleUniqueBasisDim { expect: e } => {
            let rep = space.standard_basis_report().ok_or("not a Z0 tuple space")?;
            expect(
                rep.independent && rep.unique && rep.dimension == *e,
                format!("dimension = {}", rep.dimension),
            )
        }
        Check::UnitIndecomposability { box_bound } => {
            let ok = unit_indecomposability_holds(space.arity(), *box_bound);
            expect(ok, format!("unit vectors indecomposable up to {box_bound}"))
        }
        Check::NoTwoElementSpanningSet { bound } => {
            let (found, b) = two_element_spanning_set_for_z_x_z0(*bound);
            expect(!found, format!("no 2-element spanning set with entries within ±{b}"))
        }
        Check::TupleSSemivector { expect: e } => {
            let got = tuple_s_semivector_witness(space).is_some();
            expect(got == *e, format!("s-semivector={got}"))
        }
        Check::ScalarChoices { expect: e } => {
            let got: Vec<String> = valid_scalar_choices(&space.factors)
                .into_iter()
                .map(|t| t.name().to_string())
                .collect();
            expect(&got == e, format!("choices = {got:?}"))
        }
        Check::SSubsemivector { w, expect: e } => {
            match certify_s_subsemivector(space, w, "claim") {
                Ok(_) => expect(*e, "certified".into()),
                Err(nf) => expect(!*e && nf.complete, format!("refused: {}", nf.reason)),
            }
        }
        Check::PlainSubsemivector { w, expect: e } => {
            let got = is_subsemivector(space, w);
            expect(got == *e, format!("subsemivector={got}"))
        }
        Check::SPseudoSemivector { w, over, expect: e } => {
            let p = parse_tag(over)?;
            match certify_s_pseudo_semivector(space, w, p, "claim") {
                Ok(_) => expect(*e, "certified".into()),
                Err(nf) => expect(!*e, format!("refused: {}", nf.reason)),
            }
        }
        Check::SAntiSemivector { w, field, sub } => {
            let f = parse_tag(field)?;
            let s = parse_tag(sub)?;
            certify_s_anti_semivector(&space.factors, f, w, s, "claim")
                .map(|_| "certified".to_string())
                .map_err(|nf| nf.reason)
        }
        Check::SLinearDoubling => {
            let w = TupleSpace::new(vec![Tag::Z0, Tag::R], Tag::Z0, "Z0×R");
            let map = MapSpec::linear_i64(&[&[0, 0], &[0, 2]]);
            let p = [CoordSet::Zero, CoordSet::All];
            let c = [CoordSet::Zero, CoordSet::All];
            let rep = check_s_linear_map(&map, space, &w, &p, &c, &default_grid());
            expect(rep.ok, format!("S-linear on {} samples", rep.samples))
        }
        Check::SLinearIntegerGate { integer_grid, expect: e } => {
            let w = TupleSpace::new(vec![Tag::Z0, Tag::Z], Tag::Z0, "Z0×Z");
            let map = MapSpec::IntegerGate(vec![
                vec![BigRational::from_integer(0.into()), BigRational::from_integer(0.into())],
                vec![BigRational::from_integer(0.into()), BigRational::from_integer(1.into())],
            ]);
            let p = [CoordSet::Zero, CoordSet::All];
            let c = [CoordSet::Zero, CoordSet::All];
            let grid: Vec<BigRational> = if *integer_grid {
                (-3i64..=3).map(|k| BigRational::from_integer(BigInt::from(k))).collect()
            } else {
                default_grid()
            };
            let rep = check_s_linear_map(&map, space, &w, &p, &c, &grid);
            expect(rep.ok == *e, format!("linear={} on {} samples", rep.ok, rep.samples))
        }
        _ => Err("check does not apply to a tuple-space subject".into()),
    }
}

fn run_lattice_space_check(
    space: &crate::semivector::FiniteSpace,
    check: &Check,
) -> Result<String, String> {
    match check {
        Check::SpaceValid => space.validate().map(|_| "axioms hold".to_string()),
        Check::SpaceUniqueBasis { labels, dim } => {
            let (bases, unique) = space.bases(space.n());
            if !unique {
                return Err(format!("{} bases found", bases.len()));
            }
            let got: Vec<String> =
                bases[0].iter().map(|&i| space.labels[i].clone()).collect();
            expect(
                &got == labels && bases[0].len() == *dim,
                format!("basis = {got:?}"),
            )
        }
        Check::RepresentationCount { basis, v, expect: e } => {
            let idx: Result<Vec<usize>, String> = basis
                .iter()
                .map(|l| space.index_of(l).ok_or(format!("unknown vector {l}")))
                .collect();
            let vi = space.index_of(v).ok_or("unknown vector")?;
            let (count, _) = space.representation_count(&idx?, vi);
            expect(count == *e, format!("{count} representations"))
        }
        Check::FiniteSSemivector { expect: e } => {
            let got = finite_s_semivector_witness(space).is_some();
            expect(got == *e, format!("s-semivector={got}"))
        }
        _ => Err("check does not apply to a lattice-space subject".into()),
    }
}

/// Run the corpus with a worker pool; claims are independent.
pub fn run_all(claims: &[ClaimRecord], workers: usize) -> Vec<ClaimOutcome> {
    let workers = workers.max(1);
    if workers == 1 || claims.len() <= 1 {
        return claims.iter().map(run_claim).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<ClaimOutcome>>> =
        claims.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers.min(claims.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= claims.len() {
                    break;
                }
                let outcome = run_claim(&claims[i]);
                *results[i].lock().unwrap() = Some(outcome);
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("claim ran"))
        .collect()
}
