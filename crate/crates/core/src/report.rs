//! Machine-readable reports with human summaries: the validate/classify
//! command outputs and the certificate rendering.

use serde::{Deserialize, Serialize};

use crate::congruence;
use crate::smarandache::Certificate;
use crate::spec::Subject;
use crate::structure::{characteristic, classify_elements, Characteristic, Structure};
use crate::subalgebra;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidateReport {
    pub ok: bool,
    pub subject: String,
    pub detail: String,
    pub flags: Option<FlagsReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlagsReport {
    pub commutative_add: bool,
    pub commutative_mul: bool,
    pub semiring: bool,
    pub ring: bool,
    pub field: bool,
    pub semifield: bool,
    pub lattice_derived: bool,
    pub strict: bool,
    pub zero_absorbing: bool,
    pub has_zero: bool,
    pub has_one: bool,
}

impl FlagsReport {
    pub fn of(s: &Structure) -> Self {
        let f = s.flags();
        FlagsReport {
            commutative_add: f.commutative_add,
            commutative_mul: f.commutative_mul,
            semiring: f.semiring,
            ring: f.ring,
            field: f.field,
            semifield: f.semifield,
            lattice_derived: f.lattice_derived,
            strict: f.strict,
            zero_absorbing: f.zero_absorbing,
            has_zero: f.has_zero,
            has_one: f.has_one,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub subject: String,
    pub size: Option<u128>,
    pub flags: Option<FlagsReport>,
    pub characteristic: String,
    pub zero_divisor_pairs: usize,
    pub idempotents: Vec<String>,
    pub invertibles: Vec<String>,
    pub congruence_simple: Option<bool>,
    pub subsemiring_count: Option<usize>,
    pub subsemiring_search_complete: Option<bool>,
    pub notes: Vec<String>,
}

pub fn classify(subject: &Subject, cap: usize) -> ClassifyReport {
    match subject {
        Subject::Finite(s) => {
            let classes = classify_elements(s);
            let census = if s.n() <= 16 {
                Some(subalgebra::subsemirings(s, cap))
            } else {
                None
            };
            let simple = if s.n() <= 64 {
                Some(congruence::is_congruence_simple(s))
            } else {
                None
            };
            ClassifyReport {
                subject: subject.describe(),
                size: Some(s.n() as u128),
                flags: Some(FlagsReport::of(s)),
                characteristic: characteristic(s).to_string(),
                zero_divisor_pairs: classes.zero_divisor_pairs.len(),
                idempotents: classes.idempotents.iter().map(|&i| s.label(i).to_string()).collect(),
                invertibles: classes.invertibles.iter().map(|&i| s.label(i).to_string()).collect(),
                congruence_simple: simple,
                subsemiring_count: census.as_ref().map(|c| c.subsets.len()),
                subsemiring_search_complete: census.as_ref().map(|c| c.complete),
                notes: Vec::new(),
            }
        }
        Subject::Arch(a) => {
            let strict = a.strictness_witness().is_none();
            let mut notes = vec![
                "archetype structure: classification is verify-only".to_string(),
                format!("strict: {strict}"),
            ];
            if let Some((x, y)) = a.strictness_witness() {
                notes.push(format!(
                    "non-strict witness: {} + {} = 0",
                    a.render(&x),
                    a.render(&y)
                ));
            }
            ClassifyReport {
                subject: subject.describe(),
                size: None,
                flags: None,
                characteristic: Characteristic::Zero.to_string(),
                zero_divisor_pairs: 0,
                idempotents: Vec::new(),
                invertibles: Vec::new(),
                congruence_simple: None,
                subsemiring_count: None,
                subsemiring_search_complete: None,
                notes,
            }
        }
        Subject::Formal(f) => ClassifyReport {
            subject: subject.describe(),
            size: Some(f.size()),
            flags: None,
            characteristic: f.characteristic().to_string(),
            zero_divisor_pairs: 0,
            idempotents: Vec::new(),
            invertibles: Vec::new(),
            congruence_simple: None,
            subsemiring_count: None,
            subsemiring_search_complete: None,
            notes: vec![format!(
                "value-lazy formal algebra; commutative: {}",
                f.is_commutative()
            )],
        },
        Subject::TagFormal(t) => ClassifyReport {
            subject: subject.describe(),
            size: None,
            flags: None,
            characteristic: t.characteristic().to_string(),
            zero_divisor_pairs: 0,
            idempotents: Vec::new(),
            invertibles: Vec::new(),
            congruence_simple: None,
            subsemiring_count: None,
            subsemiring_search_complete: None,
            notes: vec![format!("commutative: {}", t.is_commutative())],
        },
        Subject::MatrixArch(_) | Subject::Magma(_) | Subject::Poly { .. } => ClassifyReport {
            subject: subject.describe(),
            size: None,
            flags: None,
            characteristic: "n/a".into(),
            zero_divisor_pairs: 0,
            idempotents: Vec::new(),
            invertibles: Vec::new(),
            congruence_simple: None,
            subsemiring_count: None,
            subsemiring_search_complete: None,
            notes: vec!["classification on this subject is verify-only".into()],
        },
    }
}

pub fn render_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    out.push_str(&format!("property: {}\nsubject: {}\n", cert.property, cert.subject));
    out.push_str(&format!("complete_search: {}\n", cert.complete_search));
    out.push_str(&format!(
        "witness: {}\n",
        serde_json::to_string(&cert.witness).expect("witness serializes")
    ));
    out.push_str("transcript:\n");
    for c in &cert.transcript {
        out.push_str(&format!("  [{}] {}\n", if c.pass { "ok" } else { "FAIL" }, c.text));
    }
    out
}
