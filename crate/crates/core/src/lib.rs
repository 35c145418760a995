//! Exact computation of h-fold sumsets, restricted sumsets, signed sumsets
//! and restricted signed sumsets of finite integer sets, with a catalogue of
//! lower bounds, executable witness families and exhaustive extremal search.
//!
//! Each capability has a runnable program under `examples/`:
//!
//! ```bash
//! cargo run --release --example compute_sumsets
//! cargo run --release --example exhaustive_search
//! ```

pub mod bits;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod intset;
pub mod report;
pub mod search;
pub mod sumset;
pub mod witness;

pub use error::{Error, Result};
pub use intset::{IntegerSet, StructureClass};
pub use sumset::{compute_dp, compute_oracle, SumsetResult, SumsetVariant};
