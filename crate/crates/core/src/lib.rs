//! Finite permutation groups and their coprime commutator sets.

pub mod arith;
pub mod cli;
pub mod corpus;
mod error;
pub mod group;
pub mod lab;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod set;
pub mod star;
pub mod structure;
pub mod subgroup;
pub mod sylow_hall;

pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use perm::Permutation;
pub use quotient::QuotientMap;
pub use set::ElemSet;
pub use star::{StarCommutatorSet, StarVariant};
pub use subgroup::Subgroup;
