//! Exact algebra for morphisms from Azumaya points and circles.
//!
//! All scalars are Gaussian rationals, so every identity the crate checks is an
//! exact equality. The crate is `no_std` and only needs `alloc`.
//!
//! - [`matrix`], [`poly`], [`multipoly`], [`roots`]: exact linear algebra over `Q(i)`.
//! - [`point`]: commuting matrix tuples as morphisms to affine targets.
//! - [`orbit`]: Jordan-form data and the orbit-closure order.
//! - [`higgsing`]: the deformation ODE `lambda dB/dz + [A, B] = 0`, truncated
//!   Weyl action, spectral curves.
//! - [`torus`]: A-branes on a flat torus as covering/wrapping data.
//! - [`kahler`]: formal Kahler differentials on matrix rings and the trace form.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod higgsing;
pub mod kahler;
pub mod matrix;
pub mod multipoly;
pub mod orbit;
pub mod point;
pub mod poly;
pub mod roots;
pub mod sample;
pub mod scalar;
pub mod torus;

pub use error::{Error, Result};
pub use matrix::{Mat, Matrix, PolyMatrix};
pub use multipoly::{Monomial, MultiPoly};
pub use poly::{Poly, UniPoly};
pub use roots::split_roots;
pub use scalar::{GaussianRational, Rational, Ring, GR};
