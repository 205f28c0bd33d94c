//! Dense matrices over a [`Ring`], with exact elimination.
//!
//! Determinants and characteristic polynomials use Bareiss fraction-free
//! elimination, which only needs exact division in the entry ring. Kernels and
//! minimal polynomials are over `Q(i)` (and over `Q(i)[z]` after clearing
//! denominators for [`PolyMatrix`]).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::poly::{Poly, UniPoly};
use crate::scalar::{Ring, GR};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix over `Q(i)`.
pub type Matrix = Mat<GR>;
/// Matrix with entries in `Q(i)[z]`.
pub type PolyMatrix = Mat<UniPoly>;

impl<T: Ring> Mat<T> {
    /// Row-major constructor.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { op: "new", left: (rows, cols), right: (data.len(), 1) });
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { op: "from_rows", left: (r, c), right: (1, bad.len()) });
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(cols: &[Vec<T>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Single 1 at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = T::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    fn same_shape(&self, o: &Self, op: &'static str) -> Result<()> {
        if self.shape() == o.shape() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { op, left: self.shape(), right: o.shape() })
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o, "add")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o, "sub")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch { op: "mul", left: self.shape(), right: o.shape() });
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { op: "mul_vec", left: self.shape(), right: (v.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn scale_scalar(&self, c: &GR) -> Self {
        self.scale(&T::from_scalar(c.clone()))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square()?;
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone()))
    }

    /// `self * o - o * self`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.require_square()?;
        self.same_shape(o, "commutator")?;
        self.mul(o)?.sub(&o.mul(self)?)
    }

    pub fn commutes_with(&self, o: &Self) -> Result<bool> {
        Ok(self.commutator(o)?.is_zero())
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Fraction-free row echelon form in place (Bareiss with row pivoting).
    /// Returns the pivot columns and the number of row swaps.
    fn bareiss_in_place(&mut self) -> (Vec<usize>, usize) {
        let mut prev = T::one();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, col)].is_zero()) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                swaps += 1;
            }
            let piv = self[(r, col)].clone();
            for i in r + 1..self.rows {
                let f = self[(i, col)].clone();
                for j in col + 1..self.cols {
                    let num = piv.clone() * self[(i, j)].clone() - f.clone() * self[(r, j)].clone();
                    self[(i, j)] = num.exact_div(&prev).expect("Bareiss step divides exactly");
                }
                self[(i, col)] = T::zero();
            }
            prev = piv;
            pivots.push(col);
            r += 1;
        }
        (pivots, swaps)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        self.clone().bareiss_in_place().0.len()
    }

    /// Determinant by Bareiss elimination.
    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        if self.rows == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let (pivots, swaps) = a.bareiss_in_place();
        if pivots.len() < self.rows {
            return Ok(T::zero());
        }
        let d = a[(self.rows - 1, self.cols - 1)].clone();
        Ok(if swaps % 2 == 1 { -d } else { d })
    }

    /// `det(x I - self)` as a polynomial over the entry ring.
    pub fn char_poly(&self) -> Result<Poly<T>> {
        self.require_square()?;
        let n = self.rows;
        let mut m: Mat<Poly<T>> = self.map(|a| Poly::constant(-a.clone()));
        for i in 0..n {
            m[(i, i)] = m[(i, i)].clone() + Poly::x();
        }
        m.det()
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<T>) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::zeros(self.rows, self.cols);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&Self::scalar(self.rows, c.clone()))?;
        }
        Ok(acc)
    }

    /// `f(m_1, ..., m_k)` for pairwise commuting square matrices.
    pub fn eval_multipoly(f: &MultiPoly, mats: &[Self], n: usize) -> Result<Self> {
        if f.width() > mats.len() {
            return Err(Error::UnknownVariable { index: f.width() - 1 });
        }
        let mut acc = Self::zeros(n, n);
        for (mono, c) in f.terms() {
            let mut t = Self::scalar(n, T::from_scalar(c.clone()));
            for (i, m) in mats.iter().enumerate().take(mono.width()) {
                for _ in 0..mono.exp(i) {
                    t = t.mul(m)?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }
}

impl<T> core::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> core::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl<T: Ring> Mat<Poly<T>> {
    /// Entrywise evaluation of the polynomial entries.
    pub fn eval_at(&self, x: &T) -> Mat<T> {
        self.map(|p| p.eval(x))
    }

    /// Entrywise formal derivative.
    pub fn derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    /// Matrix of `x^k` coefficients.
    pub fn coeff_matrix(&self, k: usize) -> Mat<T> {
        self.map(|p| p.coeff(k))
    }

    /// Largest entry degree; `None` when zero.
    pub fn degree(&self) -> Option<usize> {
        self.data.iter().filter_map(Poly::degree).max()
    }

    pub fn from_constant(m: &Mat<T>) -> Self {
        m.map(|a| Poly::constant(a.clone()))
    }
}

impl Matrix {
    /// Reduced row echelon form and its pivot columns, by ordinary field
    /// elimination.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a[(r, col)].inv().unwrap();
            for j in col..a.cols {
                a[(r, j)] *= &inv;
            }
            for i in 0..a.rows {
                if i == r || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in col..a.cols {
                    let t = &f * &a[(r, j)];
                    a[(i, j)] -= &t;
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<GR>> {
        let (a, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![GR::zero(); self.cols];
            v[free] = GR::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[(k, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * X = rhs` when `self` has full column rank and a solution
    /// exists.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        if rhs.rows != self.rows {
            return None;
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + rhs.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                aug[(i, n + j)] = rhs[(i, j)].clone();
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        // inconsistent rows show up as pivots past the coefficient block
        if red.rows > n && (n..red.rows).any(|i| red.row(i).iter().any(|x| !x.is_zero())) {
            return None;
        }
        let mut x = Matrix::zeros(n, rhs.cols);
        for i in 0..n {
            for j in 0..rhs.cols {
                x[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Matrix::identity(self.rows))
    }

    /// Matrix of `self` restricted to the invariant subspace spanned by the
    /// columns of `basis`: the unique `R` with `self * basis = basis * R`.
    pub fn restrict(&self, basis: &Matrix) -> Option<Matrix> {
        basis.solve(&self.mul(basis).ok()?)
    }

    /// Monic minimal polynomial, as the least common multiple of the
    /// minimal polynomials of the standard basis vectors.
    pub fn min_poly(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut acc = UniPoly::one();
        for j in 0..n {
            let mut e = vec![GR::zero(); n];
            e[j] = GR::one();
            acc = acc.lcm(&self.vector_min_poly(e)?);
        }
        Ok(acc)
    }

    /// Monic generator of `{f : f(self) v = 0}`.
    fn vector_min_poly(&self, v: Vec<GR>) -> Result<UniPoly> {
        let n = self.rows;
        let mut krylov = vec![v];
        loop {
            let next = self.mul_vec(krylov.last().unwrap())?;
            krylov.push(next);
            let k = Matrix::from_columns(&krylov, n).kernel_basis();
            if let Some(c) = k.into_iter().next() {
                let lead = c.last().unwrap().clone();
                let inv = lead.inv().expect("first dependency involves the newest vector");
                return Ok(UniPoly::new(c.iter().map(|x| x * &inv).collect()));
            }
        }
    }
}

impl PolyMatrix {
    /// Basis of the kernel over `Q(i)(z)`, each vector cleared to a primitive
    /// polynomial vector whose first nonzero entry is monic.
    pub fn poly_kernel_basis(&self) -> Vec<Vec<UniPoly>> {
        let mut a = self.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).filter(|&i| !a[(i, col)].is_zero()).min_by_key(|&i| a[(i, col)].degree()) else {
                continue;
            };
            a.swap_rows(p, r);
            for i in 0..a.rows {
                if i == r || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                let g = a[(r, col)].clone();
                for j in 0..a.cols {
                    a[(i, j)] = g.clone() * a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                }
                a.make_row_primitive(i);
            }
            a.make_row_primitive(r);
            pivots.push(col);
            r += 1;
        }
        let lcm = pivots.iter().enumerate().fold(UniPoly::one(), |acc, (k, &pc)| acc.lcm(&a[(k, pc)]));
        let mut basis = Vec::new();
        for free in (0..a.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![UniPoly::zero(); a.cols];
            v[free] = lcm.clone();
            for (k, &pc) in pivots.iter().enumerate() {
                let mult = lcm.div_rem(&a[(k, pc)]).0;
                v[pc] = -(a[(k, free)].clone() * mult);
            }
            basis.push(primitive_vector(v));
        }
        basis
    }

    fn make_row_primitive(&mut self, i: usize) {
        let g = self.row(i).iter().fold(UniPoly::zero(), |g, p| g.gcd(p));
        if g.is_zero() || g.is_one() {
            return;
        }
        for j in 0..self.cols {
            self[(i, j)] = self[(i, j)].div_rem(&g).0;
        }
    }
}

/// Divides out the gcd of the entries and makes the first nonzero entry monic.
pub fn primitive_vector(v: Vec<UniPoly>) -> Vec<UniPoly> {
    let g = v.iter().fold(UniPoly::zero(), |g, p| g.gcd(p));
    if g.is_zero() {
        return v;
    }
    let v: Vec<UniPoly> = v.iter().map(|p| p.div_rem(&g).0).collect();
    let lead = v.iter().find(|p| !p.is_zero()).and_then(|p| p.leading().cloned()).unwrap();
    let inv = lead.inv().unwrap();
    v.iter().map(|p| p.scale(&inv)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| GR::from(x)).collect()).collect()).unwrap()
    }

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| GR::from(x)).collect())
    }

    #[test]
    fn commutator_examples() {
        let e12 = m(&[&[0, 1], &[0, 0]]);
        let e21 = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(e12.commutator(&e21).unwrap(), m(&[&[1, 0], &[0, -1]]));
        assert!(Matrix::identity(2).commutator(&e12).unwrap().is_zero());
        assert!(e12.commutator(&e12).unwrap().is_zero());
        assert!(matches!(e12.commutator(&Matrix::identity(3)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Matrix::identity(4).rank(), 4);
        let j3 = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(j3.pow(2).unwrap().rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(2, 2).kernel_basis().len(), 2);
        let k = m(&[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![GR::from(-1), GR::from(1)]]);
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(Matrix::identity(2).char_poly().unwrap(), p(&[1, -2, 1]));
        assert_eq!(m(&[&[0, 1], &[0, 0]]).char_poly().unwrap(), p(&[0, 0, 1]));
        // companion of z^2 - 3z + 2
        assert_eq!(m(&[&[0, -2], &[1, 3]]).char_poly().unwrap(), p(&[2, -3, 1]));
        assert!(matches!(Matrix::zeros(2, 3).char_poly(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(Matrix::scalar(3, GR::from(5)).min_poly().unwrap(), p(&[-5, 1]));
        assert_eq!(Matrix::diag(&[GR::from(1), GR::from(2)]).min_poly().unwrap(), p(&[2, -3, 1]));
        assert_eq!(m(&[&[0, 1], &[0, 0]]).min_poly().unwrap(), p(&[0, 0, 1]));
    }

    #[test]
    fn det_with_pivoting() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), GR::from(-1));
        assert_eq!(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).det().unwrap(), GR::from(6));
        assert_eq!(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]).det().unwrap(), GR::zero());
    }

    #[test]
    fn solve_and_restrict() {
        let a = m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let basis = m(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(a.restrict(&basis).unwrap(), m(&[&[3, 0], &[0, 3]]));
        let not_invariant = m(&[&[1], &[1], &[0]]);
        assert!(a.restrict(&not_invariant).is_none());
    }

    #[test]
    fn poly_kernel_of_rank_one() {
        // [[1, z], [0, 0]] has kernel spanned by (-z, 1) -> monic first entry (z, -1)
        let b = PolyMatrix::from_rows(vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[]), p(&[])]]).unwrap();
        let k = b.poly_kernel_basis();
        assert_eq!(k, vec![vec![p(&[0, 1]), p(&[-1])]]);
    }
}
