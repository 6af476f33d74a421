//! Randomly perturbed, randomly edge-colored graphs.
//!
//! The model: start from an arbitrary dense host graph `H` with minimum
//! degree at least `δn`, add `m` uniformly random edges, and color every
//! edge independently and uniformly with one of `r` colors. This crate
//! provides
//!
//! * bitset-backed graph kernels, host generators, perturbation, and
//!   uniform edge coloring ([`graph`], [`host`], [`perturb`], [`color`]),
//! * an exact rainbow-connectivity decider (dynamic program over
//!   `(vertex, color-set)` states) plus a brute-force oracle ([`rainbow`]),
//! * the constructive sampled-set certificate procedure that exhibits a
//!   rainbow path of length at most 5 per vertex pair ([`certificate`]),
//! * a seeded Monte Carlo engine with coupled-monotonicity modes, Wilson
//!   intervals, CSV output, and closed-form bound audits ([`experiments`]),
//! * a plain-text colored-graph file format ([`format`]).
//!
//! Everything randomized is a pure function of its inputs and an explicit
//! 64-bit seed; there is no global RNG state.

pub mod bitset;
pub mod certificate;
pub mod color;
pub mod error;
pub mod experiments;
pub mod format;
pub mod graph;
pub mod host;
pub mod model;
pub mod perturb;
pub mod rainbow;
pub mod rng;

pub use bitset::Bitset;
pub use color::EdgeColoring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use host::HostKind;
pub use model::PerturbConfig;
pub use perturb::ReplacementMode;
