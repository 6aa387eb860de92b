//! Cohomological and rigidity invariants of compact complex parallelizable
//! manifolds `G/Γ`, computed exactly from Lie-algebra structure constants and
//! lattice data.

pub mod closure;
pub mod error;
pub mod examples;
pub mod input;
pub mod invariants;
pub mod lattice;
pub mod liealg;
pub mod scalars;
pub mod zmodules;

pub use error::{Error, Result};
pub use input::AnalysisInput;
pub use invariants::{analyze, InvariantReport};
