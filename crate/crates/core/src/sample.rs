//! Seeded generators for exact test data.
//!
//! Every randomized routine in the crate (and its test suites) goes through a
//! [`ChaCha8Rng`] seeded explicitly, so runs are reproducible.

use alloc::vec::Vec;

use num_traits::Zero;
pub use rand::Rng;
use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::matrix::Matrix;
use crate::poly::UniPoly;
use crate::scalar::{Rational, GR};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `-bound..=bound`.
pub fn int(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

/// `a + b i` with integer parts in `-bound..=bound`.
pub fn gaussian_int(rng: &mut impl Rng, bound: i64) -> GR {
    GR::gauss(int(rng, bound), int(rng, bound))
}

/// Real rational `n/d` with `|n| <= bound`, `1 <= d <= bound`.
pub fn rational(rng: &mut impl Rng, bound: i64) -> GR {
    let n = int(rng, bound);
    let d = rng.gen_range(1..=bound.max(1));
    GR::from_real(Rational::new(n.into(), d.into()))
}

/// Gaussian rational with both parts drawn by [`rational`].
pub fn gaussian_rational(rng: &mut impl Rng, bound: i64) -> GR {
    let re = rational(rng, bound);
    let im = rational(rng, bound);
    re + im * GR::i()
}

/// Uniform pick from a slice.
pub fn pick<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

pub fn matrix(rng: &mut impl Rng, n: usize, bound: i64) -> Matrix {
    let data = (0..n * n).map(|_| gaussian_int(rng, bound)).collect();
    Matrix::new(n, n, data).unwrap()
}

/// Upper-triangular matrix with diagonal drawn from `diagonal` and Gaussian
/// integer entries above it.
pub fn upper_triangular(rng: &mut impl Rng, n: usize, diagonal: &[GR], bound: i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = pick(rng, diagonal).clone();
        for j in i + 1..n {
            m[(i, j)] = gaussian_int(rng, bound);
        }
    }
    m
}

/// Invertible matrix `L U` with unit-diagonal triangular factors, together
/// with its inverse.
pub fn invertible(rng: &mut impl Rng, n: usize, bound: i64) -> (Matrix, Matrix) {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = gaussian_int(rng, bound);
            upper[(j, i)] = gaussian_int(rng, bound);
        }
    }
    let g = lower.mul(&upper).unwrap();
    let inv = g.inverse().expect("unit triangular product is invertible");
    (g, inv)
}

/// Random polynomial in `m` of degree at most `deg`; always commutes with `m`.
pub fn polynomial_in(rng: &mut impl Rng, m: &Matrix, deg: usize, bound: i64) -> Matrix {
    let p = UniPoly::new((0..=deg).map(|_| gaussian_int(rng, bound)).collect());
    m.eval_poly(&p).unwrap()
}

/// A nonzero Gaussian integer.
pub fn nonzero_gaussian_int(rng: &mut impl Rng, bound: i64) -> GR {
    loop {
        let g = gaussian_int(rng, bound);
        if !g.is_zero() {
            return g;
        }
    }
}

/// Vector of independent draws.
pub fn vector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<GR> {
    (0..n).map(|_| gaussian_int(rng, bound)).collect()
}
