//! Exact calculus for intrinsic curves on blow-ups of toric surfaces at the
//! identity of the torus.
//!
//! The crate is `no_std` (it needs `alloc`): every routine is a pure function
//! over immutable values and all arithmetic is exact. File formats, dataset
//! ingestion and the command-line front end live in the `intrinsic-curves`
//! crate.
//!
//! Module map:
//!
//! * [`polygon`]: lattice polygons, lattice counts, width, normal fans,
//!   Minkowski calculus and unimodular normal forms.
//! * [`laurent`], [`univariate`], [`resultant`]: Laurent polynomials in two
//!   variables, dense univariate polynomials, resultants and implicitization.
//! * [`linsys`]: the linear systems of Laurent polynomials supported on a
//!   polygon with prescribed multiplicity at `(1,1)`.
//! * [`classify`]: numeric invariants of `(polygon, m)` pairs and the
//!   classification pipeline.
//! * [`families`], [`surface`], [`seshadri`], [`wpp`]: the infinite families,
//!   the divisor ledger of the rank-five blow-up, Seshadri bounds and slope
//!   analysis on blown-up weighted projective planes.

#![no_std]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod families;
pub mod laurent;
pub mod linalg;
pub mod linsys;
pub mod num;
pub mod polygon;
pub mod resultant;
pub mod seshadri;
pub mod surface;
pub mod univariate;
pub mod wpp;

pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use num::{Q, Z};
pub use polygon::{LatticePoint, LatticePolygon};
pub use univariate::UniPoly;

pub use num_bigint;
pub use num_rational;
pub use num_traits;
