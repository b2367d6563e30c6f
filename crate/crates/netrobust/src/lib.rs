//! Structural robustness of undirected consensus networks to noise.
//!
//! A connected consensus network driven by unit white noise settles into a
//! steady state whose population variance depends only on the graph and
//! the edge weights. With weights capped at 1, the smallest achievable
//! variance H*(G) is a purely structural quantity: it is reached at
//! all-ones weights and computable from the unweighted Laplacian spectrum
//! or, equivalently, from the Kirchhoff index.
//!
//! The crate provides:
//!
//! - [`graph`]: simple undirected graphs, canonical families, a bridging
//!   construction, seeded random regular sampling, distance/degree
//!   statistics, and an edge-list text format;
//! - [`spectral`]: dense symmetric eigensolving, algebraic connectivity,
//!   and effective resistances;
//! - [`robustness`]: H*, both Kirchhoff routes, the degree/distance
//!   sandwich bounds with tightness flags, sparsity trade-off ratios, and
//!   the random-regular guarantee formulas;
//! - [`sim`]: a seeded, parallel Euler-Maruyama simulator of the noisy
//!   dynamics that estimates the steady-state variance directly.
//!
//! Graphs are immutable and all analyses are pure functions, so corpus
//! sweeps parallelize without coordination.

// Parameter guards are written as negated comparisons so that NaN inputs
// fail validation instead of slipping through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod graph;
pub mod robustness;
pub mod sim;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{bridge, lollipop, random_regular, DistanceSummary, Family, Graph};
pub use robustness::{BoundCurvePoint, RobustnessReport};
pub use sim::{estimate_h_star, simulate, SimConfig, SimResult};
