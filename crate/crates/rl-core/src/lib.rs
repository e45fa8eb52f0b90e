//! Finite-universe engine for the relations-language calculus: four-way
//! statement classification, set and relation algebra, relation-plurality
//! taxonomy and filter detection, order structures, and constructive
//! bijections over exact rationals.

pub mod bitset;
pub mod constructions;
pub mod logic;
pub mod orders;
pub mod pluralities;
pub mod relation;
pub mod report;
pub mod sets;
pub mod universe;

pub use relation::{Relation, RelationError};
pub use sets::{PointSet, SetError};
pub use universe::{PointId, Universe, UniverseError};
