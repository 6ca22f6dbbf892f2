//! Finite-model workbench for PBZ*-lattices and their relatives.
//!
//! The crate builds, validates, transforms, enumerates and searches finite
//! bounded involution lattices equipped with a Brouwer complement `∼`.
//!
//! * [`algebra`]: the [`FiniteAlgebra`] carrier, validation, derived operations
//! * [`canon`]: isomorphism testing and canonical forms
//! * [`axioms`]: class membership and sharp-element sets
//! * [`terms`]: term language, parser, identity checking
//! * [`constructions`]: twist structures, ordinal and horizontal sums, products
//! * [`congruence`]: congruence lattices and the relations `C(p)`, `D(p)`, `E(p)`
//! * [`enumerate`], [`search`], [`claims`]: model generation and corpus checks
//! * [`catalog`]: named algebras
//! * [`format`]: algebra file format and DOT export

pub mod algebra;
pub mod axioms;
pub mod canon;
pub mod claims;
pub mod catalog;
pub mod congruence;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod lattice;
pub mod search;
pub mod terms;
mod order;

pub use algebra::{validate, Element, FiniteAlgebra, RawAlgebra, Rule, ValidationReport, Violation};
pub use axioms::{class_report, AlgebraClassReport, SharpSets, Verdict};
pub use claims::{verify_over_corpus, ClaimReport};
pub use canon::{canonical_form, is_isomorphic};
pub use congruence::{Congruence, CongruenceLattice, Partition};
pub use constructions::{Cones, Recipe};
pub use enumerate::{enumerate_lattices, enumerate_pbz, EnumerationSpec};
pub use error::{EnumerationError, AlgebraError, ConstructionError, CongruenceError, MalformedError, PreconditionError};
pub use lattice::BoundedLattice;
pub use search::{search_counterexample, SearchResult};
pub use terms::{Identity, QuasiIdentity, Statement, Term};
