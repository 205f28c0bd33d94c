//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls the elimination routines under test: kernels and ranks
//! are recomputed with plain textbook Gauss-Jordan over `Q(i)`.

#![allow(dead_code)]

use azumaya_core::multipoly::{Monomial, MultiPoly};
use azumaya_core::orbit::Partition;
use azumaya_core::sample::{self, Rng};
use azumaya_core::{Mat, Matrix, UniPoly, GR};
use num_traits::{One, Zero};

/// Reduced row echelon form by textbook Gauss-Jordan with division.
pub fn naive_rref(rows: &[Vec<GR>]) -> (Vec<Vec<GR>>, Vec<usize>) {
    let mut a: Vec<Vec<GR>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        a[r] = a[r].iter().map(|x| x * &inv).collect();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    (a, pivots)
}

pub fn naive_rank(m: &Matrix) -> usize {
    naive_rref(&m.to_rows()).1.len()
}

/// Kernel basis of the linear map whose rows are given.
pub fn naive_kernel(rows: &[Vec<GR>], cols: usize) -> Vec<Vec<GR>> {
    let (red, pivots) = naive_rref(rows);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![GR::zero(); cols];
            v[free] = GR::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -red[k][free].clone();
            }
            v
        })
        .collect()
}

/// Minimal polynomial as the first linear dependency among
/// `vec(I), vec(m), ..., vec(m^r)`.
pub fn min_poly_oracle(m: &Matrix) -> UniPoly {
    let n = m.rows();
    let mut powers = vec![Matrix::identity(n)];
    for d in 1..=n {
        powers.push(powers[d - 1].mul(m).unwrap());
        // rows index matrix entries, columns index powers
        let rows: Vec<Vec<GR>> = (0..n * n).map(|e| powers.iter().map(|p| p.entries()[e].clone()).collect()).collect();
        let kernel = naive_kernel(&rows, d + 1);
        if let Some(v) = kernel.into_iter().next() {
            let lead = v[d].inv().unwrap();
            return UniPoly::new(v.iter().map(|x| x * &lead).collect());
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by r")
}

/// Conjugate partition, `lambda'_j = #{i : lambda_i >= j}`.
pub fn conjugate(p: &[usize]) -> Vec<usize> {
    let top = p.first().copied().unwrap_or(0);
    (1..=top).map(|j| p.iter().filter(|&&l| l >= j).count()).collect()
}

/// `a <= b` in dominance order, decided through conjugate partitions:
/// `a <= b` iff `b'` is dominated by `a'`.
pub fn dominated(a: &Partition, b: &Partition) -> bool {
    let (ca, cb) = (conjugate(a.parts()), conjugate(b.parts()));
    let len = ca.len().max(cb.len());
    let partial = |v: &[usize], k: usize| v.iter().take(k).sum::<usize>();
    (1..=len).all(|k| partial(&cb, k) <= partial(&ca, k))
}

/// Basis of `{f : deg f <= d, f(p) = 0 for all p}` by evaluating every
/// monomial at every point; coefficients are indexed by `monos`.
pub fn evaluation_kernel(points: &[Vec<GR>], monos: &[Monomial]) -> Vec<Vec<GR>> {
    let rows: Vec<Vec<GR>> = points
        .iter()
        .map(|pt| monos.iter().map(|m| MultiPoly::term(m.clone(), GR::one()).eval(pt)).collect())
        .collect();
    naive_kernel(&rows, monos.len())
}

/// Whether two families of coefficient vectors span the same space.
pub fn same_span(a: &[Vec<GR>], b: &[Vec<GR>]) -> bool {
    let rank = |v: &[Vec<GR>]| if v.is_empty() { 0 } else { naive_rref(v).1.len() };
    let both: Vec<Vec<GR>> = a.iter().chain(b).cloned().collect();
    rank(a) == rank(b) && rank(a) == rank(&both)
}

pub fn coefficients(f: &MultiPoly, monos: &[Monomial]) -> Vec<GR> {
    monos.iter().map(|m| f.coeff(m)).collect()
}

/// Random polynomial in `n` variables of total degree at most `deg`.
pub fn random_multipoly(rng: &mut impl Rng, n: usize, deg: u32, bound: i64) -> MultiPoly {
    MultiPoly::from_terms(Monomial::up_to_degree(n, deg).into_iter().filter_map(|m| {
        if rng.gen_bool(0.5) {
            Some((m, sample::gaussian_int(rng, bound)))
        } else {
            None
        }
    }))
}

pub fn random_multipoly_matrix(rng: &mut impl Rng, r: usize, n: usize, deg: u32, bound: i64) -> Mat<MultiPoly> {
    let data = (0..r * r).map(|_| random_multipoly(rng, n, deg, bound)).collect();
    Mat::new(r, r, data).unwrap()
}

/// A random polynomial (with scalar coefficients) in `m`; commutes with `m`.
pub fn polynomial_in_matrix(rng: &mut impl Rng, m: &Mat<MultiPoly>, deg: usize, bound: i64) -> Mat<MultiPoly> {
    let r = m.rows();
    let mut acc = Mat::zeros(r, r);
    let mut power = Mat::identity(r);
    for _ in 0..=deg {
        let c = MultiPoly::constant(sample::gaussian_int(rng, bound));
        acc = acc.add(&power.scale(&c)).unwrap();
        power = power.mul(m).unwrap();
    }
    acc
}
