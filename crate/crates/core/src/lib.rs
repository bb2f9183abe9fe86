//! Exact paired-domination toolkit.
//!
//! A paired-dominating set is a dominating set whose induced subgraph has a
//! perfect matching; the goal is one of minimum size. This crate provides:
//!
//! - linear-time solvers with explicit pair reconstruction for block graphs
//!   ([`block::mpdb`]), trees ([`block::mpdt`]), and connected interval
//!   graphs ([`interval::mpdi`]);
//! - brute-force oracles used to cross-validate every fast path
//!   ([`oracle::gamma_p_bruteforce`], [`oracle::min_vertex_cover_bruteforce`]);
//! - a faithful reproduction of an earlier published interval procedure that
//!   is not optimal, together with the six-interval instance exposing it
//!   ([`interval::legacy_mpd`]);
//! - executable hardness reductions from vertex cover with witness maps in
//!   both directions ([`reduce`]);
//! - seeded instance generators ([`generate`]) and the `pairdom` command-line
//!   front end.

pub mod block;
pub mod error;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod matching;
pub mod oracle;
pub mod reduce;
pub mod report;
pub mod solution;

pub use error::{Error, Result};
pub use graph::Graph;
pub use solution::{verify_paired_dominating, PairedSolution, VerifyFailure};
