//! Exact character theory of symmetric and alternating groups.

pub mod character_oracles;
pub mod chartable;
pub mod class_algebra;
pub mod error;
pub mod modular_criteria;
pub mod partitions;
pub mod regularity;

pub use error::{Error, Result};
pub use partitions::Partition;
