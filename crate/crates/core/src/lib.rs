//! Exact-arithmetic engine for the integrable maps obtained from open
//! boundary reductions of the quad equations H1 and Q1(δ=0).
//!
//! Layers, bottom up: [`exact`] (number kernel), [`quadmodel`] (bulk
//! equations and Lax matrices), [`boundarymodel`] (boundary equations,
//! duals and K matrices), [`strip`] (the reduced maps), [`monodromy`]
//! (double-row monodromy and invariants), [`gallery`] (closed forms) and
//! [`cli`] (config-driven runs).

pub mod error;
pub mod exact;
pub mod quadmodel;
pub mod boundarymodel;
pub mod sampling;
pub mod strip;
pub mod monodromy;
pub mod gallery;
pub mod suite;
pub mod cli;

pub use error::{Error, Result};
