//! Kashiwara crystals for gl_k: tableau, Gelfand-Tsetlin, tensor and 0/1
//! matrix models, Schützenberger involutions, inner and outer cactus group
//! actions, and the crystal form of skew Howe duality, together with
//! exhaustive verifiers for the identities relating them.

pub mod any;
pub mod base;
pub mod cactus;
pub mod crystal;
pub mod error;
pub mod goldens;
pub mod gt;
pub mod matrix;
pub mod report;
pub mod skew_howe;
pub mod suites;
pub mod tableau;
pub mod tensor;

pub use base::{Interval, Partition, Permutation, Weight};
pub use crystal::Crystal;
pub use error::{CrystalError, Result};
pub use report::{Report, Status};
