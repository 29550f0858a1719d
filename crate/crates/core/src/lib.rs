//! Finite rings as operation tables: constructions, structural subsets,
//! ring-class predicates, a construction language and a theorem checker.

pub mod constructions;
pub mod dsl;
pub mod error;
pub mod groups;
pub mod predicates;
pub mod ring;
pub mod verifier;

pub use error::{Result, RingError};
pub use groups::{group_catalog, FiniteGroup};
pub use ring::{ElementSet, Endomorphism, FiniteRing, RingHom, SetRole, Validation};
