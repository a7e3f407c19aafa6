//! Finite semigroups, normal categories and the cone constructions connecting them.

pub mod analysis;
pub mod catalog;
pub mod category;
pub mod cones;
pub mod connected;
pub mod error;
pub mod exec;
pub mod functors;
pub mod poset;
pub mod semigroup;
mod text;

pub use error::{Error, Result};
pub use exec::Exec;
