//! Exact discrete differential geometry on finite simple graphs.
//!
//! The crate treats a graph as its clique (Whitney) complex and computes,
//! with exact arithmetic throughout:
//!
//! * f-vectors, Euler characteristics (clique engine and Poincare-Hopf
//!   recursion), geometric-dimension checks, genus, spanning-tree counts
//!   ([`euler`], [`clique`], [`spanning`]);
//! * Morse indices of injective vertex functions, symmetric indices, and
//!   curvature as the exact expectation of the index ([`morse`]);
//! * level-set hypersurfaces, center surfaces with stellation completion,
//!   and the index formula relating indices to surface characteristics
//!   ([`surface`]);
//! * wheel-based Ricci and scalar curvature and the Einstein tensor
//!   ([`einstein`]);
//! * the exact Erdos-Renyi expectation of the Euler characteristic and a
//!   Monte Carlo cross-check ([`er`]);
//! * exhaustive and annealed searches for Euler-characteristic extrema
//!   ([`extremal`]);
//! * curvature-deformed path metrics, geodesics and injectivity radii
//!   ([`geodesic`]).
//!
//! Integer quantities use `num_bigint`, rational ones the [`Rat`] alias for
//! `BigRational`. Floating point appears only in Monte Carlo estimates and
//! logarithmic images of exact values. Every randomized routine is
//! deterministic in its `u64` seed.

pub mod bits;
pub mod clique;
pub mod einstein;
pub mod er;
pub mod error;
pub mod euler;
pub mod extremal;
pub mod generate;
pub mod geodesic;
pub mod graph;
pub mod io;
pub mod morse;
pub mod numeric;
pub mod rng;
pub mod spanning;
pub mod surface;

pub use error::{Error, ErrorKind, Result};
pub use graph::{Graph, Induced};
pub use numeric::Rat;

/// Exact integer type used for characteristic sums and counts.
pub type Int = num_bigint::BigInt;
