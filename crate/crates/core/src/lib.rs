//! Numerics for linear parabolic problems that degenerate at one boundary
//! piece in the normal direction only.
//!
//! The central objects are a *singularity function* `R` on `(0,1]` whose
//! reciprocal is non-integrable at `0`, the collar coordinate
//! `t = sigma(y) = ∫_y^ε dτ/R(τ)` that maps the degenerate collar onto a
//! half-line, and the push-forward of a degenerate second-order operator to
//! a uniformly parabolic operator on the resulting strip.  On top of that
//! the crate provides
//!
//! * weighted Sobolev norms computed two independent ways (graded-grid
//!   quadrature in `y` against `dy/R`, and standard quadrature in `t`),
//! * verifiers for anisotropic (normal-only) ellipticity and for
//!   boundedness/uniform continuity of the transformed coefficients,
//! * a θ-scheme solver on the truncated strip with manufactured-solution
//!   convergence studies, and
//! * an empirical probe of the maximal-regularity quotient
//!   `(‖∂_τ u‖ + ‖u‖_{W²}) / ‖f‖` over seeded forcing ensembles.
//!
//! The crate is `no_std`-compatible (`alloc` required); enable the `libm`
//! feature instead of `std` for freestanding builds.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("degparab-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod error;
pub mod geometry;
pub mod grid;
pub mod linalg;
pub mod maxreg;
pub mod norms;
pub mod operators;
pub mod quad;
pub mod rng;
pub mod singfun;
pub mod solver;

pub use error::{Error, Result};
