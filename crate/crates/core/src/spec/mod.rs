//! Structure-spec ingestion: one canonical JSON object format, strict about
//! unknown fields, mapping onto the construction kinds. A parsed spec
//! builds into a `Subject` — the engine-side handle that CLI commands and
//! the FFI operate on.

pub mod driver;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::archetype::{ArchetypeStructure, Factor, MatrixArchetype, Tag};
use crate::constructions::{
    self, chain_lattice, cyclic_group, dihedral, direct_product_capped, full_transformation,
    group_ring, group_semiring, matrix_semiring, power_set_semiring, symmetric_group,
    trivial_group, v_of, zmod_ring, FormalAlgebra,
};
use crate::constructions::formal::TagFormalAlgebra;
use crate::structure::Structure;
use crate::table::{FiniteMagma, OpTable};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StructureSpec {
    ChainLattice { n: usize },
    PowerSet { k: usize },
    LatticeTables { labels: Vec<String>, meet: Vec<Vec<usize>>, join: Vec<Vec<usize>> },
    Table { labels: Vec<String>, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>> },
    Zmod { n: usize },
    SymmetricGroup { n: usize },
    FullTransformation { n: usize },
    CyclicGroup { n: usize },
    Dihedral { n: usize },
    DirectProduct { factors: Vec<StructureSpec> },
    MixedProduct { factors: Vec<StructureSpec> },
    Matrix { base: Box<StructureSpec>, dim: usize },
    Polynomial { base: Box<StructureSpec> },
    GroupSemiring { coeff: Box<StructureSpec>, carrier: Box<StructureSpec> },
    SemigroupSemiring { coeff: Box<StructureSpec>, carrier: Box<StructureSpec> },
    GroupRing { coeff: Box<StructureSpec>, carrier: Box<StructureSpec> },
    VOf { carrier: Box<StructureSpec> },
    Archetype { tags: Vec<String> },
    /// A named fixture lattice from the corpus (pentagon, diamond, ...).
    Fixture { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    UnknownKind(String),
    MissingParam(String),
    TypeMismatch(String),
    BadInput(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::UnknownKind(m) => write!(f, "unknown kind: {m}"),
            SpecError::MissingParam(m) => write!(f, "missing parameter: {m}"),
            SpecError::TypeMismatch(m) => write!(f, "type mismatch: {m}"),
            SpecError::BadInput(m) => write!(f, "bad input: {m}"),
        }
    }
}

/// Parse the canonical object notation, classifying serde failures into the
/// three spec error families.
pub fn parse_spec(text: &str) -> Result<StructureSpec, SpecError> {
    match serde_json::from_str::<StructureSpec>(text) {
        Ok(s) => Ok(s),
        Err(e) => {
            let msg = e.to_string();
            if msg.contains("unknown variant") {
                Err(SpecError::UnknownKind(msg))
            } else if msg.contains("unknown field") {
                Err(SpecError::TypeMismatch(msg))
            } else if msg.contains("missing field") {
                Err(SpecError::MissingParam(msg))
            } else if msg.contains("invalid type") || msg.contains("expected") {
                Err(SpecError::TypeMismatch(msg))
            } else {
                Err(SpecError::BadInput(msg))
            }
        }
    }
}

pub fn serialize_spec(spec: &StructureSpec) -> String {
    serde_json::to_string(spec).expect("specs serialize")
}

/// A built subject: whatever a spec denotes, behind one handle.
pub enum Subject {
    Finite(Structure),
    Magma(FiniteMagma),
    Arch(ArchetypeStructure),
    MatrixArch(MatrixArchetype),
    Formal(FormalAlgebra),
    TagFormal(TagFormalAlgebra),
    /// polynomial semiring over a finite base, kept symbolic
    Poly { base: Structure, name: String },
}

impl Subject {
    pub fn describe(&self) -> String {
        match self {
            Subject::Finite(s) => format!("finite structure with {} elements", s.n()),
            Subject::Magma(m) => format!("semigroup with {} elements", m.n()),
            Subject::Arch(a) => format!("archetype product {}", a.name),
            Subject::MatrixArch(m) => {
                format!("{}×{} matrices over {}", m.dim, m.dim, m.tag.name())
            }
            Subject::Formal(f) => format!("formal-sum algebra {} ({} elements)", f.name, f.size()),
            Subject::TagFormal(t) => format!("tag formal algebra {}", t.name),
            Subject::Poly { name, .. } => format!("polynomial semiring {name}"),
        }
    }
}

/// Instantiation cap for materialized structures, overridable per call and
/// via the `SEMICERT_CAP` environment variable in the CLI.
pub fn build(spec: &StructureSpec, cap: u128) -> Result<Subject, SpecError> {
    let err = |e: constructions::BuildError| SpecError::BadInput(e.to_string());
    match spec {
        StructureSpec::ChainLattice { n } => {
            if *n == 0 {
                return Err(SpecError::BadInput("chain lattice needs n ≥ 1".into()));
            }
            Ok(Subject::Finite(chain_lattice(*n)))
        }
        StructureSpec::PowerSet { k } => {
            if *k > 6 {
                return Err(SpecError::BadInput("power set capped at k = 6".into()));
            }
            Ok(Subject::Finite(power_set_semiring(*k)))
        }
        StructureSpec::LatticeTables { labels, meet, join } => {
            let meet = OpTable::from_rows(meet).map_err(|e| SpecError::BadInput(e.to_string()))?;
            let join = OpTable::from_rows(join).map_err(|e| SpecError::BadInput(e.to_string()))?;
            let s = Structure::validate_semiring(labels.clone(), join, meet)
                .map_err(|e| SpecError::BadInput(e.to_string()))?;
            if !s.flags().lattice_derived {
                return Err(SpecError::BadInput(
                    "tables do not satisfy the lattice laws".into(),
                ));
            }
            Ok(Subject::Finite(s))
        }
        StructureSpec::Table { labels, add, mul } => {
            let add = OpTable::from_rows(add).map_err(|e| SpecError::BadInput(e.to_string()))?;
            let mul = OpTable::from_rows(mul).map_err(|e| SpecError::BadInput(e.to_string()))?;
            let s = Structure::validate(labels.clone(), add, mul)
                .map_err(|e| SpecError::BadInput(e.to_string()))?;
            Ok(Subject::Finite(s))
        }
        StructureSpec::Zmod { n } => {
            if *n == 0 {
                return Err(SpecError::BadInput("Z_n needs n ≥ 1".into()));
            }
            Ok(Subject::Finite(zmod_ring(*n)))
        }
        StructureSpec::SymmetricGroup { n } => Ok(Subject::Magma(symmetric_group(*n))),
        StructureSpec::FullTransformation { n } => Ok(Subject::Magma(full_transformation(*n))),
        StructureSpec::CyclicGroup { n } => {
            if *n == 0 {
                return Err(SpecError::BadInput("cyclic group needs n ≥ 1".into()));
            }
            Ok(Subject::Magma(cyclic_group(*n)))
        }
        StructureSpec::Dihedral { n } => Ok(Subject::Magma(dihedral(*n))),
        StructureSpec::DirectProduct { factors } => {
            let built: Vec<Structure> = factors
                .iter()
                .map(|f| match build(f, cap)? {
                    Subject::Finite(s) => Ok(s),
                    _ => Err(SpecError::TypeMismatch(
                        "direct products take finite table factors".into(),
                    )),
                })
                .collect::<Result<_, _>>()?;
            let refs: Vec<&Structure> = built.iter().collect();
            Ok(Subject::Finite(direct_product_capped(&refs, cap).map_err(err)?))
        }
        StructureSpec::MixedProduct { factors } => build_mixed(factors, cap),
        StructureSpec::Matrix { base, dim } => match build(base, cap)? {
            Subject::Finite(s) => {
                Ok(Subject::Finite(matrix_semiring(&s, *dim, cap).map_err(err)?))
            }
            Subject::Arch(a) if a.factors.len() == 1 => match &a.factors[0] {
                Factor::Tag(t) => Ok(Subject::MatrixArch(MatrixArchetype { tag: *t, dim: *dim })),
                _ => Err(SpecError::TypeMismatch("matrix base must be a tag or table".into())),
            },
            _ => Err(SpecError::TypeMismatch("matrix base must be a tag or table".into())),
        },
        StructureSpec::Polynomial { base } => match build(base, cap)? {
            Subject::Finite(s) => {
                if s.zero().is_none() {
                    return Err(SpecError::BadInput("polynomial base needs a zero".into()));
                }
                let name = format!("{}[x]", short_name(base));
                Ok(Subject::Poly { base: s, name })
            }
            _ => Err(SpecError::TypeMismatch("polynomial base must be finite".into())),
        },
        StructureSpec::GroupSemiring { coeff, carrier }
        | StructureSpec::SemigroupSemiring { coeff, carrier } => {
            let c = match build(coeff, cap)? {
                Subject::Finite(s) => s,
                _ => return Err(SpecError::TypeMismatch("coefficients must be finite".into())),
            };
            let g = build_carrier(carrier, cap)?;
            let name = format!("{}·{}", short_name(coeff), short_name(carrier));
            match group_semiring(c, g, name, cap)
                .map_err(|e| SpecError::BadInput(e.to_string()))?
            {
                Ok(s) => Ok(Subject::Finite(s)),
                Err(lazy) => Ok(Subject::Formal(lazy)),
            }
        }
        StructureSpec::GroupRing { coeff, carrier } => {
            let g = build_carrier(carrier, cap)?;
            let name = format!("{}·{}", short_name(coeff), short_name(carrier));
            match build(coeff, cap)? {
                Subject::Finite(s) => {
                    let alg = group_ring(s, g, name)
                        .map_err(|e| SpecError::BadInput(e.to_string()))?;
                    if alg.size() <= cap {
                        Ok(Subject::Finite(alg.materialize()))
                    } else {
                        Ok(Subject::Formal(alg))
                    }
                }
                Subject::Arch(a) if a.factors.len() == 1 => match &a.factors[0] {
                    Factor::Tag(t) => Ok(Subject::TagFormal(
                        TagFormalAlgebra::new(*t, g, name)
                            .map_err(|e| SpecError::BadInput(e.to_string()))?,
                    )),
                    _ => Err(SpecError::TypeMismatch("group ring coefficients".into())),
                },
                _ => Err(SpecError::TypeMismatch(
                    "group ring coefficients must be finite or a tag".into(),
                )),
            }
        }
        StructureSpec::VOf { carrier } => {
            let g = build_carrier(carrier, cap)?;
            Ok(Subject::Finite(v_of(&g).map_err(err)?))
        }
        StructureSpec::Archetype { tags } => {
            let parsed: Result<Vec<Tag>, _> = tags
                .iter()
                .map(|t| Tag::parse(t).ok_or_else(|| SpecError::BadInput(format!("unknown tag {t:?}"))))
                .collect();
            let parsed = parsed?;
            let name = tags.join("×");
            Ok(Subject::Arch(ArchetypeStructure::tags(parsed, name)))
        }
        StructureSpec::Fixture { name } => {
            let lattice = match name.as_str() {
                "pentagon" => crate::fixtures::pentagon(),
                "diamond" => crate::fixtures::diamond(),
                "square" => crate::fixtures::square(),
                "kite" => crate::fixtures::kite(),
                "hexagon" => crate::fixtures::hexagon(),
                "stacked_square" => crate::fixtures::stacked_square(),
                "chain10" => crate::fixtures::chain10(),
                "chain6_cdba" => crate::fixtures::chain6_cdba(),
                "stem_square" => crate::fixtures::stem_square(),
                "weak_semifield_host" => crate::fixtures::weak_semifield_host(),
                other => return Err(SpecError::BadInput(format!("unknown fixture {other:?}"))),
            };
            // non-distributive fixtures are still useful for lattice
            // commands; expose them as magmas of their join table when the
            // semiring gate fails
            match Structure::validate_semiring(
                lattice.labels().to_vec(),
                lattice.join_table().clone(),
                lattice.meet_table().clone(),
            ) {
                Ok(s) => Ok(Subject::Finite(s)),
                Err(_) => Ok(Subject::Magma(FiniteMagma::new(
                    lattice.labels().to_vec(),
                    lattice.join_table().clone(),
                ))),
            }
        }
    }
}

fn build_carrier(spec: &StructureSpec, cap: u128) -> Result<FiniteMagma, SpecError> {
    match spec {
        StructureSpec::CyclicGroup { n } if *n == 1 => Ok(trivial_group()),
        _ => match build(spec, cap)? {
            Subject::Magma(m) => Ok(m),
            Subject::Finite(s) => {
                // multiplicative part of a finite structure
                Ok(FiniteMagma::new(s.labels.clone(), s.mul_table().clone()))
            }
            _ => Err(SpecError::TypeMismatch("carrier must be finite".into())),
        },
    }
}

fn build_mixed(factors: &[StructureSpec], cap: u128) -> Result<Subject, SpecError> {
    // all-finite mixed products materialize like direct products; any tag
    // factor switches to the symbolic archetype representation
    let mut parts: Vec<Factor> = Vec::with_capacity(factors.len());
    let mut any_tag = false;
    for f in factors {
        match build(f, cap)? {
            Subject::Finite(s) => parts.push(Factor::Table(Arc::new(s))),
            Subject::Arch(a) => {
                any_tag = true;
                for sub in a.factors {
                    parts.push(sub);
                }
            }
            _ => {
                return Err(SpecError::TypeMismatch(
                    "mixed products take finite structures and tags".into(),
                ))
            }
        }
    }
    let name: Vec<String> = parts.iter().map(|p| p.describe()).collect();
    let name = name.join("×");
    if !any_tag {
        let tables: Vec<Arc<Structure>> = parts
            .into_iter()
            .map(|p| match p {
                Factor::Table(s) => s,
                Factor::Tag(_) => unreachable!(),
            })
            .collect();
        let refs: Vec<&Structure> = tables.iter().map(|s| s.as_ref()).collect();
        let built = direct_product_capped(&refs, cap)
            .map_err(|e| SpecError::BadInput(e.to_string()))?;
        Ok(Subject::Finite(built))
    } else {
        Ok(Subject::Arch(ArchetypeStructure { factors: parts, name }))
    }
}

fn short_name(spec: &StructureSpec) -> String {
    match spec {
        StructureSpec::ChainLattice { n } => format!("C{n}"),
        StructureSpec::PowerSet { k } => format!("P({k})"),
        StructureSpec::Zmod { n } => format!("Z{n}"),
        StructureSpec::SymmetricGroup { n } => format!("S{n}"),
        StructureSpec::FullTransformation { n } => format!("S({n})"),
        StructureSpec::CyclicGroup { n } => format!("C{n}grp"),
        StructureSpec::Dihedral { n } => format!("D{}", 2 * n),
        StructureSpec::Archetype { tags } => tags.join("×"),
        StructureSpec::Fixture { name } => name.clone(),
        _ => "expr".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_chain_lattice() {
        let spec = parse_spec(r#"{"kind":"chain_lattice","n":5}"#).unwrap();
        assert_eq!(spec, StructureSpec::ChainLattice { n: 5 });
        let Subject::Finite(s) = build(&spec, 1 << 16).unwrap() else { panic!() };
        assert_eq!(s.n(), 5);
    }

    #[test]
    fn parse_matrix_over_chain() {
        let spec = parse_spec(
            r#"{"kind":"matrix","base":{"kind":"chain_lattice","n":2},"dim":2}"#,
        )
        .unwrap();
        let Subject::Finite(s) = build(&spec, 1 << 16).unwrap() else { panic!() };
        assert_eq!(s.n(), 16);
    }

    #[test]
    fn missing_param_reported() {
        let err = parse_spec(r#"{"kind":"chain_lattice"}"#).unwrap_err();
        assert!(matches!(err, SpecError::MissingParam(_)));
        let err = parse_spec(r#"{"kind":"nonsense","n":1}"#).unwrap_err();
        assert!(matches!(err, SpecError::UnknownKind(_)));
        let err = parse_spec(r#"{"kind":"chain_lattice","n":"five"}"#).unwrap_err();
        assert!(matches!(err, SpecError::TypeMismatch(_)));
        // unknown fields rejected
        let err = parse_spec(r#"{"kind":"chain_lattice","n":5,"extra":1}"#).unwrap_err();
        assert!(matches!(err, SpecError::TypeMismatch(_)));
    }

    #[test]
    fn round_trip() {
        let texts = [
            r#"{"kind":"chain_lattice","n":5}"#,
            r#"{"kind":"matrix","base":{"kind":"chain_lattice","n":2},"dim":2}"#,
            r#"{"kind":"mixed_product","factors":[{"kind":"archetype","tags":["Z0"]},{"kind":"zmod","n":7}]}"#,
            r#"{"kind":"group_semiring","coeff":{"kind":"chain_lattice","n":2},"carrier":{"kind":"symmetric_group","n":3}}"#,
        ];
        for t in texts {
            let spec = parse_spec(t).unwrap();
            let round = parse_spec(&serialize_spec(&spec)).unwrap();
            assert_eq!(spec, round);
        }
    }

    #[test]
    fn mixed_product_with_tag_goes_symbolic() {
        let spec = parse_spec(
            r#"{"kind":"mixed_product","factors":[{"kind":"archetype","tags":["Z0"]},{"kind":"zmod","n":7}]}"#,
        )
        .unwrap();
        let Subject::Arch(a) = build(&spec, 1 << 16).unwrap() else { panic!() };
        assert_eq!(a.factors.len(), 2);
    }

    #[test]
    fn all_finite_mixed_product_materializes() {
        let spec = parse_spec(
            r#"{"kind":"mixed_product","factors":[{"kind":"chain_lattice","n":2},{"kind":"zmod","n":3}]}"#,
        )
        .unwrap();
        let Subject::Finite(s) = build(&spec, 1 << 16).unwrap() else { panic!() };
        assert_eq!(s.n(), 6);
    }

    #[test]
    fn group_semiring_materializes_when_small() {
        let spec = parse_spec(
            r#"{"kind":"group_semiring","coeff":{"kind":"chain_lattice","n":2},"carrier":{"kind":"symmetric_group","n":3}}"#,
        )
        .unwrap();
        let Subject::Finite(s) = build(&spec, 1 << 16).unwrap() else { panic!() };
        assert_eq!(s.n(), 64);
    }

    #[test]
    fn big_group_ring_stays_lazy() {
        let spec = parse_spec(
            r#"{"kind":"group_ring","coeff":{"kind":"zmod","n":8},"carrier":{"kind":"symmetric_group","n":3}}"#,
        )
        .unwrap();
        let Subject::Formal(f) = build(&spec, 1 << 16).unwrap() else { panic!() };
        assert_eq!(f.size(), 8u128.pow(6));
    }

    #[test]
    fn v_of_spec() {
        let spec = parse_spec(r#"{"kind":"v_of","carrier":{"kind":"cyclic_group","n":4}}"#)
            .unwrap();
        let Subject::Finite(s) = build(&spec, 1 << 16).unwrap() else { panic!() };
        assert_eq!(s.n(), 5);
    }
}
