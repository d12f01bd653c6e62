//! Smarandache property certification.
//!
//! Every positive answer is a `Certificate`: a property name, a witness
//! payload, a completeness flag for the search that produced it, and a
//! replay transcript listing each defining clause with its outcome. The
//! verifier recomputes the transcript from the witness alone, independently
//! of the search.
//!
//! Negative answers are `NotFound` values; `complete` is true only when the
//! search provably covered the whole candidate space (exhaustive subset
//! enumeration on small tables, or an analytic argument on archetypes).
//! Incomplete searches never justify a negative claim.

mod anti;
mod elements;
mod finite;
mod verify;

pub use anti::*;
pub use elements::*;
pub use finite::*;
pub use verify::*;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub text: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    None,
    /// a subset or element tuple of a finite structure, by label
    Labels(Vec<String>),
    /// two-level witness: outer subset plus the inner subset it hosts
    Nested { outer: Vec<String>, inner: Vec<String> },
    /// archetype elements: one coordinate-string vector per element
    Tuples(Vec<Vec<String>>),
    NestedTuples { outer: Vec<Vec<String>>, inner: Vec<Vec<String>> },
    /// symbolic per-coordinate subsets of a tuple archetype
    CoordSets(Vec<CoordSet>),
    NestedCoordSets { outer: Vec<CoordSet>, inner: Vec<CoordSet> },
    /// support pattern inside a matrix archetype
    Pattern { mask: Vec<Vec<bool>>, nonzero: bool },
    PatternPair { outer: (Vec<Vec<bool>>, bool), inner: (Vec<Vec<bool>>, bool) },
    /// matrices with exact rational entries
    Matrices(Vec<Vec<Vec<String>>>),
    /// formal sums as (carrier label, coefficient label) term lists
    FormalSums(Vec<Vec<(String, String)>>),
    /// positive-coefficient cone of a tag formal algebra
    FormalPositiveCone,
}

/// Symbolic subset of one tag coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoordSet {
    Zero,
    All,
    /// all nonnegative members of the tag domain
    Nonneg,
    /// nonnegative integers inside a rational tag
    NonnegIntegers,
    /// strictly positive members
    Positive,
    /// {0, p, 2p, ...}
    Multiples(u64),
    /// {.., -k, 0, k, 2k, ..} — signed multiples inside a group-like tag
    IntegerMultiples(u64),
    /// nonnegative rationals inside a real tag
    NonnegRationals,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: String,
    pub subject: String,
    pub witness: Witness,
    pub complete_search: bool,
    pub transcript: Vec<Clause>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotFound {
    pub complete: bool,
    pub reason: String,
}

pub type CertResult = Result<Certificate, NotFound>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    UnknownProperty(String),
    WitnessShape(String),
    BadElement(String),
    /// transcript replay produced a failing clause
    ClauseFailed(Clause),
}

impl std::fmt::Display for VerifyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyError::UnknownProperty(p) => write!(f, "unknown property {p:?}"),
            VerifyError::WitnessShape(m) => write!(f, "witness shape: {m}"),
            VerifyError::BadElement(m) => write!(f, "bad element: {m}"),
            VerifyError::ClauseFailed(c) => write!(f, "clause failed: {}", c.text),
        }
    }
}

/// Running clause transcript.
#[derive(Debug, Default, Clone)]
pub struct Log {
    clauses: Vec<Clause>,
}

impl Log {
    pub fn new() -> Self {
        Log::default()
    }

    pub fn check(&mut self, text: impl Into<String>, pass: bool) -> bool {
        self.clauses.push(Clause { text: text.into(), pass });
        pass
    }

    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn into_clauses(self) -> Vec<Clause> {
        self.clauses
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.pass)
    }
}

pub(crate) fn certificate(
    property: &str,
    subject: &str,
    witness: Witness,
    complete: bool,
    log: Log,
) -> Certificate {
    Certificate {
        property: property.to_string(),
        subject: subject.to_string(),
        witness,
        complete_search: complete,
        transcript: log.into_clauses(),
    }
}
