//! Lossless coding of memoryless sources with sequential Dirichlet,
//! sparse sequential Dirichlet and sub-alphabet estimators.
//!
//! - [`estimators`]: the coding distributions and their redundancy bounds.
//! - [`coder`]: a 64-bit range coder and the `SSDC` container format.
//! - [`bench`]: synthetic-source experiments reporting ideal code lengths.
//! - [`cli`]: the `sparsedc` command line.

pub mod bench;
pub mod cli;
pub mod coder;
pub mod estimators;

pub use estimators::{
    ideal_code_length, sequence_log2prob, AnyModel, Log2Prob, ModelError, ModelKind,
    SequentialModel, Symbol,
};
