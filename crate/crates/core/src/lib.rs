//! A workbench for finite ordered semigroups.
//!
//! An ordered semigroup is a semigroup with a partial order that is
//! compatible with multiplication on both sides. This crate validates such
//! structures, computes downward closures, principal ideals, Green's
//! relations and semilattice congruences, decides regularity,
//! group-likeness and the inverse-ordered property, enumerates all ordered
//! semigroups of small order and sweeps a catalog of theorem conditions over
//! the enumerated corpus looking for disagreements.

pub mod check;
pub mod enumerate;
pub mod fixtures;
pub mod format;
pub mod ideals;
pub mod iso;
pub mod model;
pub mod oracle;
pub mod properties;
pub mod relations;
pub mod subset;
pub mod theorems;

pub use check::{Check, Witness};
pub use enumerate::{EnumerationOptions, Filter, Mode, Shard};
pub use format::{parse_corpus, parse_document, parse_structure, StructureDocument};
pub use ideals::Side;
pub use iso::{canonical_form, is_isomorphic, CanonicalForm};
pub use model::{AxiomKind, OrderedSemigroup, ValidationReport};
pub use relations::{GreensRelations, Partition};
pub use subset::ElementSubset;
pub use theorems::{ConditionId, SweepReport, TheoremId, TheoremReport};
