//! A computational-algebra engine for finite (and boundedly symbolic)
//! semirings, semifields and semivector spaces.
//!
//! The crate constructs table-backed structures (lattice semirings, modular
//! rings, matrix semirings, group semirings, ∞-adjunctions, mixed direct
//! products with exact-arithmetic archetype factors), classifies their
//! elements and substructures, and certifies Smarandache properties with
//! self-contained, replayable witnesses.
//!
//! Everything is exact: element arithmetic is table lookups or
//! arbitrary-precision rationals; no floating point anywhere.

pub mod archetype;
pub mod claims;
pub mod congruence;
pub mod constructions;
pub mod fixtures;
pub mod hom;
pub mod lattice;
pub mod poset;
pub mod report;
pub mod semivector;
pub mod smarandache;
pub mod spec;
pub mod star;
pub mod structure;
pub mod subalgebra;
pub mod table;

pub use lattice::{as_lattice, FiniteLattice};
pub use poset::{hasse, poset_from_leq, FinitePoset, HasseDiagram};
pub use structure::{characteristic, classify_elements, Characteristic, Structure};
