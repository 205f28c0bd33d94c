//! Formal Kähler differentials on `M_r(Q(i)[z_1..z_n])`.
//!
//! A form of tensor degree `s` is a sum of words
//! `a_0 (dm_1) a_1 (dm_2) ... (dm_s) a_s`. Equality in the module of
//! differentials has no known normal form, so two comparisons are offered:
//! syntactic equality of the term lists, and [`trace_form`], which maps a
//! word to `trace(a_0 Dm_1 a_1 ... Dm_s a_s)` with `D` the entrywise
//! classical differential. The trace map respects linearity, Leibniz and the
//! pass-over relation, so equal forms have equal traces; the converse is not
//! claimed.
//!
//! `D` alone does not respect pass-over (`[m, Dm'] != 0` in general), which
//! is why only the trace is exposed.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::multipoly::MultiPoly;
use crate::scalar::GR;

/// Matrix over `Q(i)[z_1..z_n]`.
pub type MultiPolyMatrix = Mat<MultiPoly>;

/// One word `a_0 (dm_1) a_1 ... (dm_s) a_s`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormTerm {
    /// `s + 1` coefficient matrices.
    pub coeffs: Vec<MultiPolyMatrix>,
    /// `s` differentiands.
    pub diffs: Vec<MultiPolyMatrix>,
}

impl FormTerm {
    fn is_zero(&self) -> bool {
        self.coeffs.iter().chain(&self.diffs).any(Mat::is_zero)
    }
}

/// Element of the `s`-fold tensor power of the module of differentials.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalForm {
    rank: usize,
    degree: usize,
    terms: Vec<FormTerm>,
}

impl FormalForm {
    pub fn zero(rank: usize, degree: usize) -> Self {
        FormalForm { rank, degree, terms: Vec::new() }
    }

    /// Validates shapes and drops words with a zero factor.
    pub fn from_terms(rank: usize, degree: usize, terms: Vec<FormTerm>) -> Result<Self> {
        for t in &terms {
            if t.coeffs.len() != degree + 1 || t.diffs.len() != degree {
                return Err(Error::IncompatibleForms("word length does not match degree"));
            }
            if t.coeffs.iter().chain(&t.diffs).any(|m| m.shape() != (rank, rank)) {
                return Err(Error::IncompatibleForms("matrix rank differs"));
            }
        }
        Ok(FormalForm { rank, degree, terms: terms.into_iter().filter(|t| !t.is_zero()).collect() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[FormTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, o: &FormalForm) -> Result<()> {
        if self.rank != o.rank {
            return Err(Error::IncompatibleForms("matrix rank differs"));
        }
        if self.degree != o.degree {
            return Err(Error::IncompatibleForms("tensor degree differs"));
        }
        Ok(())
    }

    pub fn add(&self, o: &FormalForm) -> Result<FormalForm> {
        self.check(o)?;
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Ok(FormalForm { rank: self.rank, degree: self.degree, terms })
    }

    pub fn scale(&self, c: &GR) -> FormalForm {
        let c = MultiPoly::constant(c.clone());
        self.left_mul(&Mat::scalar(self.rank, c)).expect("scalar has matching rank")
    }

    pub fn neg(&self) -> FormalForm {
        self.scale(&GR::from(-1))
    }

    pub fn sub(&self, o: &FormalForm) -> Result<FormalForm> {
        self.add(&o.neg())
    }

    /// `m * w`.
    pub fn left_mul(&self, m: &MultiPolyMatrix) -> Result<FormalForm> {
        self.map_end(m, 0)
    }

    /// `w * m`.
    pub fn right_mul(&self, m: &MultiPolyMatrix) -> Result<FormalForm> {
        self.map_end(m, self.degree)
    }

    fn map_end(&self, m: &MultiPolyMatrix, slot: usize) -> Result<FormalForm> {
        if m.shape() != (self.rank, self.rank) {
            return Err(Error::IncompatibleForms("matrix rank differs"));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut t = t.clone();
            t.coeffs[slot] = if slot == 0 { m.mul(&t.coeffs[0])? } else { t.coeffs[slot].mul(m)? };
            if !t.is_zero() {
                terms.push(t);
            }
        }
        Ok(FormalForm { rank: self.rank, degree: self.degree, terms })
    }
}

/// `dm`, the single word `I (dm) I`.
pub fn d(m: &MultiPolyMatrix) -> Result<FormalForm> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let id = Mat::identity(m.rows());
    FormalForm::from_terms(m.rows(), 1, vec![FormTerm { coeffs: vec![id.clone(), id], diffs: vec![m.clone()] }])
}

/// `(dm) m' + m (dm')`.
pub fn leibniz_expand(m: &MultiPolyMatrix, mp: &MultiPolyMatrix) -> Result<FormalForm> {
    d(m)?.right_mul(mp)?.add(&d(mp)?.left_mul(m)?)
}

/// Tensor product over the matrix ring: adjacent boundary coefficients are
/// multiplied, so `(w a) ⊗ w' = w ⊗ (a w')` holds syntactically.
pub fn tensor(ws: &[FormalForm]) -> Result<FormalForm> {
    let (first, rest) = ws.split_first().ok_or(Error::IncompatibleForms("empty tensor product"))?;
    let mut acc = first.clone();
    for w in rest {
        if w.rank != acc.rank {
            return Err(Error::IncompatibleForms("matrix rank differs"));
        }
        let mut terms = Vec::new();
        for a in &acc.terms {
            for b in &w.terms {
                let mut coeffs = a.coeffs[..a.coeffs.len() - 1].to_vec();
                coeffs.push(a.coeffs[a.coeffs.len() - 1].mul(&b.coeffs[0])?);
                coeffs.extend(b.coeffs[1..].iter().cloned());
                let mut diffs = a.diffs.clone();
                diffs.extend(b.diffs.iter().cloned());
                terms.push(FormTerm { coeffs, diffs });
            }
        }
        acc = FormalForm::from_terms(acc.rank, acc.degree + w.degree, terms)?;
    }
    Ok(acc)
}

/// A commutative `s`-tensor `sum f_K dz_{k_1} ⊗ ... ⊗ dz_{k_s}`, keyed by
/// the index tuple `K`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommutativeForm {
    pub coeffs: BTreeMap<Vec<usize>, MultiPoly>,
}

impl CommutativeForm {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, index: &[usize]) -> MultiPoly {
        self.coeffs.get(index).cloned().unwrap_or_else(MultiPoly::zero)
    }

    fn accumulate(&mut self, index: Vec<usize>, f: MultiPoly) {
        let e = self.coeffs.entry(index).or_insert_with(MultiPoly::zero);
        *e = e.clone() + f;
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, o: &CommutativeForm) -> CommutativeForm {
        let mut out = self.clone();
        for (k, v) in &o.coeffs {
            out.accumulate(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &MultiPoly) -> CommutativeForm {
        let mut out = CommutativeForm::default();
        for (k, v) in &self.coeffs {
            out.accumulate(k.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Dense coefficient list of a 1-form over `n` variables.
    pub fn one_form_coeffs(&self, n: usize) -> Vec<MultiPoly> {
        (0..n).map(|k| self.coeff(&[k])).collect()
    }
}

/// Classical `df = sum_k (df/dz_k) dz_k`.
pub fn differential(f: &MultiPoly) -> CommutativeForm {
    let mut out = CommutativeForm::default();
    for k in 0..f.width() {
        out.accumulate(vec![k], f.partial(k));
    }
    out
}

fn partial_matrix(m: &MultiPolyMatrix, k: usize) -> MultiPolyMatrix {
    m.map(|e| e.partial(k))
}

fn matrix_width(m: &MultiPolyMatrix) -> usize {
    m.entries().iter().map(MultiPoly::width).max().unwrap_or(0)
}

/// `trace(a_0 Dm_1 a_1 ... Dm_s a_s)`, expanded over index tuples.
pub fn trace_form(w: &FormalForm) -> Result<CommutativeForm> {
    let mut out = CommutativeForm::default();
    for t in &w.terms {
        // only variables actually present in a differentiand can contribute
        let widths: Vec<usize> = t.diffs.iter().map(matrix_width).collect();
        let mut index = vec![0usize; t.diffs.len()];
        if widths.contains(&0) {
            continue;
        }
        loop {
            let mut prod = t.coeffs[0].clone();
            for (slot, &k) in index.iter().enumerate() {
                prod = prod.mul(&partial_matrix(&t.diffs[slot], k))?.mul(&t.coeffs[slot + 1])?;
            }
            out.accumulate(index.clone(), prod.trace()?);
            // odometer over index tuples
            let mut slot = 0;
            while slot < index.len() {
                index[slot] += 1;
                if index[slot] < widths[slot] {
                    break;
                }
                index[slot] = 0;
                slot += 1;
            }
            if slot == index.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// A morphism to affine space, given by commuting images of the target
/// coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct MorphismToAffine {
    target_vars: Vec<String>,
    images: Vec<MultiPolyMatrix>,
}

impl MorphismToAffine {
    pub fn new(target_vars: Vec<String>, images: Vec<MultiPolyMatrix>) -> Result<Self> {
        if target_vars.len() != images.len() {
            return Err(Error::ArityMismatch { expected: target_vars.len(), found: images.len() });
        }
        let Some(first) = images.first() else {
            return Err(Error::IncompatibleForms("morphism needs at least one image"));
        };
        let n = first.rows();
        for m in &images {
            if m.shape() != (n, n) {
                return Err(Error::DimensionMismatch { op: "morphism image", left: (n, n), right: m.shape() });
            }
        }
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                if !images[i].commutes_with(&images[j])? {
                    return Err(Error::NonCommutingImages { first: i, second: j });
                }
            }
        }
        Ok(MorphismToAffine { target_vars, images })
    }

    pub fn target_vars(&self) -> &[String] {
        &self.target_vars
    }

    pub fn images(&self) -> &[MultiPolyMatrix] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images[0].rows()
    }
}

/// `phi^#(f)`: `f` evaluated on the image matrices.
pub fn pullback(phi: &MorphismToAffine, f: &MultiPoly) -> Result<MultiPolyMatrix> {
    Mat::eval_multipoly(f, &phi.images, phi.rank())
}

/// `sum_k phi^#(f_k) d(phi^#(y_k))` for the classical form `sum_k f_k dy_k`.
pub fn pullback_form(phi: &MorphismToAffine, form: &[MultiPoly]) -> Result<FormalForm> {
    if form.len() > phi.images.len() {
        return Err(Error::ArityMismatch { expected: phi.images.len(), found: form.len() });
    }
    let mut acc = FormalForm::zero(phi.rank(), 1);
    for (f, y) in form.iter().zip(&phi.images) {
        acc = acc.add(&d(y)?.left_mul(&pullback(phi, f)?)?)?;
    }
    Ok(acc)
}
