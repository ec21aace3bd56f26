pub mod affine_base;
pub mod blocks;
pub mod denominators;
pub mod error;
pub mod finite_roots;
pub mod invariants;
pub mod qdata;
pub mod quantum_cartan;
pub mod scalars;
pub mod verify;

pub use error::{Error, Result};
