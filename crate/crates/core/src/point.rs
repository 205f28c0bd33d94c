//! Morphisms from an Azumaya point with fundamental module `C^r` to an affine
//! target `Spec C[z_1..z_k]/(h_j)`.
//!
//! Such a morphism is a `k`-tuple of pairwise commuting `r x r` matrices on
//! which every relator vanishes. From the tuple we read off the image ideal,
//! the support of the push-forward module with local lengths, the local
//! nilpotent filtration, and the `GL_r` conjugacy relation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Mat, Matrix};
use crate::multipoly::{Monomial, MultiPoly};
use crate::poly::UniPoly;
use crate::roots::split_roots;
use crate::sample;
use crate::scalar::GR;

/// `C[z_1..z_k] / (relators)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinePresentation {
    vars: Vec<String>,
    relators: Vec<MultiPoly>,
}

impl AffinePresentation {
    pub fn new(vars: Vec<String>, relators: Vec<MultiPoly>) -> Result<Self> {
        if let Some(bad) = relators.iter().find(|h| h.width() > vars.len()) {
            return Err(Error::UnknownVariable { index: bad.width() - 1 });
        }
        Ok(AffinePresentation { vars, relators })
    }

    /// Affine space with the given coordinates and no relators.
    pub fn free(vars: Vec<String>) -> Self {
        AffinePresentation { vars, relators: Vec::new() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn relators(&self) -> &[MultiPoly] {
        &self.relators
    }
}

/// Default coordinate names `z1, ..., zk` (just `z` when `k = 1`).
pub fn default_vars(k: usize) -> Vec<String> {
    if k == 1 {
        vec![String::from("z")]
    } else {
        (1..=k).map(|i| format!("z{}", i)).collect()
    }
}

/// A tuple of `r x r` matrices, one per target coordinate.
///
/// Construction only checks shapes; commutativity and relators are what
/// [`rep_check`] decides.
#[derive(Clone, Debug, PartialEq)]
pub struct RepPoint {
    rank: usize,
    vars: Vec<String>,
    matrices: Vec<Matrix>,
}

impl RepPoint {
    pub fn new(matrices: Vec<Matrix>) -> Result<Self> {
        let vars = default_vars(matrices.len());
        Self::with_vars(vars, matrices)
    }

    pub fn with_vars(vars: Vec<String>, matrices: Vec<Matrix>) -> Result<Self> {
        if vars.len() != matrices.len() {
            return Err(Error::ArityMismatch { expected: vars.len(), found: matrices.len() });
        }
        let Some(first) = matrices.first() else {
            return Err(Error::ArityMismatch { expected: 1, found: 0 });
        };
        let rank = first.rows();
        for m in &matrices {
            if !m.is_square() {
                return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
            }
            if m.rows() != rank {
                return Err(Error::RankMismatch { expected: rank, found: m.rows() });
            }
        }
        Ok(RepPoint { rank, vars, matrices })
    }

    pub fn single(m: Matrix) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn arity(&self) -> usize {
        self.matrices.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `g m_i g^{-1}` for every coordinate.
    pub fn conjugate(&self, g: &Matrix, g_inv: &Matrix) -> Result<Self> {
        let matrices = self.matrices.iter().map(|m| g.mul(m)?.mul(g_inv)).collect::<Result<Vec<_>>>()?;
        Self::with_vars(self.vars.clone(), matrices)
    }

    fn commuting(&self) -> Result<bool> {
        for (a, ma) in self.matrices.iter().enumerate() {
            for mb in &self.matrices[a + 1..] {
                if !ma.commutes_with(mb)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `f(m_1, ..., m_k)`.
    pub fn evaluate(&self, f: &MultiPoly) -> Result<Matrix> {
        Mat::eval_multipoly(f, &self.matrices, self.rank)
    }
}

/// True iff the matrices pairwise commute and every relator evaluates to the
/// zero matrix, i.e. the tuple is a `C`-algebra homomorphism out of the
/// presented ring.
pub fn rep_check(t: &RepPoint, pres: &AffinePresentation) -> Result<bool> {
    if t.arity() != pres.vars.len() {
        return Err(Error::ArityMismatch { expected: pres.vars.len(), found: t.arity() });
    }
    if !t.commuting()? {
        return Ok(false);
    }
    for h in &pres.relators {
        if !t.evaluate(h)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generator of the kernel of `C[z] -> M_r(C)` for a single matrix: its
/// minimal polynomial.
pub fn image_ideal_univar(t: &RepPoint) -> Result<UniPoly> {
    if t.arity() != 1 {
        return Err(Error::NotUnivariate { arity: t.arity() });
    }
    t.matrices[0].min_poly()
}

/// Basis of `{f : deg f <= D, f(t) = 0}`.
///
/// The basis is reduced: each element is monic in its leading monomial
/// and no leading monomial appears in another element.
pub fn vanishing_ideal(t: &RepPoint, degree_bound: u32) -> Result<Vec<MultiPoly>> {
    let mut monos = Monomial::up_to_degree(t.arity(), degree_bound);
    monos.reverse();
    let r2 = t.rank * t.rank;
    let mut eval = Matrix::zeros(r2, monos.len());
    for (j, mono) in monos.iter().enumerate() {
        let v = t.evaluate(&MultiPoly::term(mono.clone(), GR::one()))?;
        for (i, x) in v.entries().iter().enumerate() {
            eval[(i, j)] = x.clone();
        }
    }
    let kernel = eval.kernel_basis();
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let (reduced, pivots) = Matrix::from_rows(kernel)?.rref();
    Ok((0..pivots.len())
        .map(|row| MultiPoly::from_terms(monos.iter().enumerate().map(|(j, m)| (m.clone(), reduced[(row, j)].clone()))))
        .collect())
}

/// Support points of the push-forward module with their local lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportLengthData {
    entries: Vec<(Vec<GR>, usize)>,
}

impl SupportLengthData {
    /// Sorts points canonically; rejects zero lengths and repeated points.
    pub fn new(mut entries: Vec<(Vec<GR>, usize)>) -> Result<Self> {
        entries.sort();
        if entries.iter().any(|(_, l)| *l == 0) {
            return Err(Error::InvalidSupport(String::from("zero length")));
        }
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidSupport(String::from("repeated point")));
        }
        Ok(SupportLengthData { entries })
    }

    pub fn entries(&self) -> &[(Vec<GR>, usize)] {
        &self.entries
    }

    /// `sum of r_p`, the rank of the fundamental module.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, l)| l).sum()
    }
}

/// Joint generalized eigenspace: a point and a basis of `C^r` columns.
struct JointBlock {
    point: Vec<GR>,
    basis: Matrix,
}

/// Splits `C^r` along the spectrum of `m_1`, then splits each piece along
/// `m_2` restricted to it, and so on.
fn joint_decomposition(t: &RepPoint) -> Result<Vec<JointBlock>> {
    for (i, a) in t.matrices.iter().enumerate() {
        for b in &t.matrices[i + 1..] {
            if !a.commutes_with(b)? {
                return Err(Error::InvalidSupport(String::from("coordinate matrices do not commute")));
            }
        }
    }
    let mut blocks = vec![JointBlock { point: Vec::new(), basis: Matrix::identity(t.rank) }];
    for m in &t.matrices {
        let mut next = Vec::new();
        for block in blocks {
            let local = m
                .restrict(&block.basis)
                .ok_or_else(|| Error::InvalidSupport(String::from("coordinate matrices do not commute")))?;
            let d = local.rows();
            for (gamma, mult) in split_roots(&local.char_poly()?)? {
                let shifted = local.sub(&Matrix::scalar(d, gamma.clone()))?;
                let kernel = shifted.pow(mult as u32)?.kernel_basis();
                let sub = Matrix::from_columns(&kernel, d);
                let mut point = block.point.clone();
                point.push(gamma);
                next.push(JointBlock { point, basis: block.basis.mul(&sub)? });
            }
        }
        blocks = next;
    }
    blocks.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(blocks)
}

/// Simultaneous generalized-eigenspace decomposition of the tuple.
pub fn support_length(t: &RepPoint) -> Result<SupportLengthData> {
    let entries = joint_decomposition(t)?.into_iter().map(|b| (b.point, b.basis.cols())).collect();
    SupportLengthData::new(entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardEntry {
    pub point: Vec<GR>,
    pub length: usize,
    /// `rank N^j` for `j = 1, 2, ...` while nonzero.
    pub filtration_ranks: Vec<usize>,
}

/// Push-forward of the fundamental module: per support point, its length and
/// the ranks of the local nilpotent filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushforwardModule {
    pub entries: Vec<PushforwardEntry>,
}

impl PushforwardModule {
    pub fn support(&self) -> SupportLengthData {
        SupportLengthData { entries: self.entries.iter().map(|e| (e.point.clone(), e.length)).collect() }
    }
}

/// Ranks of the powers of a nilpotent matrix until they vanish. A matrix
/// whose `n`-th power is still nonzero is not nilpotent and is refused.
pub fn nilpotent_rank_sequence(n: &Matrix) -> Result<Vec<usize>> {
    let mut ranks = Vec::new();
    let mut power = n.clone();
    for _ in 0..=n.rows() {
        let r = power.rank();
        if r == 0 {
            return Ok(ranks);
        }
        ranks.push(r);
        power = power.mul(n)?;
    }
    Err(Error::InvalidSupport(String::from("local action is not nilpotent")))
}

/// Local action used for the filtration at a support point `p`:
/// `sum_i c_i (m_i - p_i)` with the fixed coefficients `c_i = i` (1-based).
/// For one coordinate this is just `m - p`.
pub fn local_nilpotent(t: &RepPoint, point: &[GR]) -> Result<Matrix> {
    let r = t.rank;
    let mut n = Matrix::zeros(r, r);
    for (i, (m, p)) in t.matrices.iter().zip(point).enumerate() {
        let shifted = m.sub(&Matrix::scalar(r, p.clone()))?;
        n = n.add(&shifted.scale(&GR::from((i + 1) as i64)))?;
    }
    Ok(n)
}

pub fn pushforward(t: &RepPoint) -> Result<PushforwardModule> {
    let mut entries = Vec::new();
    for block in joint_decomposition(t)? {
        let n = local_nilpotent(t, &block.point)?;
        let local = n.restrict(&block.basis).expect("generalized eigenspaces are invariant");
        entries.push(PushforwardEntry {
            length: block.basis.cols(),
            filtration_ranks: nilpotent_rank_sequence(&local)?,
            point: block.point,
        });
    }
    Ok(PushforwardModule { entries })
}

/// Image of a matrix under `m -> det(lambda - m)`, with its root multiset when
/// the polynomial splits over `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertChow {
    pub char_poly: UniPoly,
    pub roots: Option<Vec<(GR, usize)>>,
}

pub fn hilbert_chow(m: &Matrix) -> Result<HilbertChow> {
    let char_poly = m.char_poly()?;
    let roots = match split_roots(&char_poly) {
        Ok(r) => Some(r),
        Err(Error::SpectrumNotSplit { .. }) | Err(Error::RootSearchLimit) => None,
        Err(e) => return Err(e),
    };
    Ok(HilbertChow { char_poly, roots })
}

fn check_comparable(t1: &RepPoint, t2: &RepPoint) -> Result<()> {
    if t1.arity() != t2.arity() {
        return Err(Error::ArityMismatch { expected: t1.arity(), found: t2.arity() });
    }
    if t1.rank != t2.rank {
        return Err(Error::RankMismatch { expected: t1.rank, found: t2.rank });
    }
    Ok(())
}

/// Basis of `{g : g m_i = m'_i g for all i}`.
pub fn intertwiner_space(t1: &RepPoint, t2: &RepPoint) -> Result<Vec<Matrix>> {
    check_comparable(t1, t2)?;
    let r = t1.rank;
    let k = t1.arity();
    let mut system = Matrix::zeros(k * r * r, r * r);
    for a in 0..r {
        for b in 0..r {
            let e = Matrix::unit(r, a, b);
            for (i, (m1, m2)) in t1.matrices.iter().zip(&t2.matrices).enumerate() {
                let image = e.mul(m1)?.sub(&m2.mul(&e)?)?;
                for (row, x) in image.entries().iter().enumerate() {
                    system[(i * r * r + row, a * r + b)] = x.clone();
                }
            }
        }
    }
    system.kernel_basis().into_iter().map(|v| Matrix::new(r, r, v)).collect()
}

/// Outcome of the conjugacy test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugacy {
    Conjugate,
    NotConjugate,
    /// Randomized evaluation and the certificate search both failed (`r > 4`).
    ProbablyNotConjugate,
}

impl Conjugacy {
    pub fn is_conjugate(self) -> bool {
        self == Conjugacy::Conjugate
    }
}

/// Largest rank for which the determinant of a generic intertwiner is
/// expanded symbolically.
pub const SYMBOLIC_RANK_LIMIT: usize = 4;
const RANDOM_TRIALS: usize = 20;

/// Conjugation invariants of a single coordinate matrix.
fn coordinate_invariants(m: &Matrix) -> Result<(UniPoly, Vec<usize>)> {
    let mut ranks = Vec::new();
    let mut p = m.clone();
    for _ in 0..m.rows() {
        ranks.push(p.rank());
        p = p.mul(m)?;
    }
    Ok((m.char_poly()?, ranks))
}

/// Decides whether the intertwiner space contains an invertible element.
pub fn is_conjugate(t1: &RepPoint, t2: &RepPoint) -> Result<Conjugacy> {
    is_conjugate_seeded(t1, t2, 0)
}

/// [`is_conjugate`] with an explicit seed for the randomized branch (`r > 4`).
pub fn is_conjugate_seeded(t1: &RepPoint, t2: &RepPoint, seed: u64) -> Result<Conjugacy> {
    check_comparable(t1, t2)?;
    for (m1, m2) in t1.matrices.iter().zip(&t2.matrices) {
        if coordinate_invariants(m1)? != coordinate_invariants(m2)? {
            return Ok(Conjugacy::NotConjugate);
        }
    }
    let basis = intertwiner_space(t1, t2)?;
    if basis.is_empty() {
        return Ok(Conjugacy::NotConjugate);
    }
    let r = t1.rank;
    if r <= SYMBOLIC_RANK_LIMIT {
        let generic: Mat<MultiPoly> = basis.iter().enumerate().fold(Mat::zeros(r, r), |acc, (j, k)| {
            let term = k.map(|x| MultiPoly::constant(x.clone())).scale(&MultiPoly::var(j));
            acc.add(&term).expect("same shape")
        });
        return Ok(if generic.det()?.is_zero() { Conjugacy::NotConjugate } else { Conjugacy::Conjugate });
    }
    let mut rng = sample::rng(seed);
    for _ in 0..RANDOM_TRIALS {
        let g = combination(&basis, |_| sample::gaussian_int(&mut rng, 50));
        if !g.det()?.is_zero() {
            return Ok(Conjugacy::Conjugate);
        }
    }
    // certificate search over single basis elements and pairwise sums
    for (a, ka) in basis.iter().enumerate() {
        if !ka.det()?.is_zero() {
            return Ok(Conjugacy::Conjugate);
        }
        for kb in &basis[a + 1..] {
            if !ka.add(kb)?.det()?.is_zero() {
                return Ok(Conjugacy::Conjugate);
            }
        }
    }
    Ok(Conjugacy::ProbablyNotConjugate)
}

fn combination(basis: &[Matrix], mut coeff: impl FnMut(usize) -> GR) -> Matrix {
    let r = basis[0].rows();
    basis.iter().enumerate().fold(Matrix::zeros(r, r), |acc, (j, k)| acc.add(&k.scale(&coeff(j))).expect("same shape"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| GR::from(x)).collect()).collect()).unwrap()
    }

    fn g(x: i64) -> GR {
        GR::from(x)
    }

    fn j2() -> Matrix {
        m(&[&[0, 1], &[0, 0]])
    }

    #[test]
    fn rep_check_examples() {
        let t = RepPoint::single(m(&[&[1, 2], &[3, 4]])).unwrap();
        assert!(rep_check(&t, &AffinePresentation::free(default_vars(1))).unwrap());

        let pair = RepPoint::new(vec![j2(), j2().transpose()]).unwrap();
        assert!(!rep_check(&pair, &AffinePresentation::free(default_vars(2))).unwrap());

        let z2 = AffinePresentation::new(default_vars(1), vec![MultiPoly::var(0) * MultiPoly::var(0)]).unwrap();
        assert!(rep_check(&RepPoint::single(j2()).unwrap(), &z2).unwrap());
        assert!(!rep_check(&RepPoint::single(Matrix::identity(2)).unwrap(), &z2).unwrap());

        assert!(matches!(rep_check(&pair, &z2), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn image_examples() {
        let d = RepPoint::single(Matrix::diag(&[g(1), g(2)])).unwrap();
        assert_eq!(image_ideal_univar(&d).unwrap(), UniPoly::new(vec![g(2), g(-3), g(1)]));
        let n = RepPoint::single(j2()).unwrap();
        assert_eq!(image_ideal_univar(&n).unwrap(), UniPoly::new(vec![g(0), g(0), g(1)]));
        let s = RepPoint::single(Matrix::scalar(3, g(7))).unwrap();
        assert_eq!(image_ideal_univar(&s).unwrap(), UniPoly::new(vec![g(-7), g(1)]));
        let pair = RepPoint::new(vec![j2(), j2()]).unwrap();
        assert_eq!(image_ideal_univar(&pair), Err(Error::NotUnivariate { arity: 2 }));
    }

    #[test]
    fn vanishing_ideal_examples() {
        let z1 = MultiPoly::var(0);
        let z2 = MultiPoly::var(1);
        let c = |x: i64| MultiPoly::constant(g(x));

        let t = RepPoint::new(vec![Matrix::diag(&[g(0), g(1)]), Matrix::zeros(2, 2)]).unwrap();
        assert_eq!(vanishing_ideal(&t, 1).unwrap(), vec![z2.clone()]);

        let t = RepPoint::new(vec![Matrix::scalar(2, g(3)), Matrix::scalar(2, g(-1))]).unwrap();
        assert_eq!(vanishing_ideal(&t, 1).unwrap(), vec![z1.clone() - c(3), z2.clone() + c(1)]);

        let t = RepPoint::new(vec![Matrix::diag(&[g(1), g(2)]), Matrix::diag(&[g(3), g(4)])]).unwrap();
        let ideal = vanishing_ideal(&t, 1).unwrap();
        assert_eq!(ideal, vec![z1 - z2 + c(2)]);
    }

    #[test]
    fn support_examples() {
        let t = RepPoint::single(Matrix::identity(3)).unwrap();
        assert_eq!(support_length(&t).unwrap().entries(), &[(vec![g(1)], 3)]);

        let t = RepPoint::single(Matrix::diag(&[g(1), g(2), g(2)])).unwrap();
        assert_eq!(support_length(&t).unwrap().entries(), &[(vec![g(1)], 1), (vec![g(2)], 2)]);

        let t = RepPoint::new(vec![Matrix::diag(&[g(0), g(0), g(1)]), Matrix::diag(&[g(5), g(5), g(7)])]).unwrap();
        assert_eq!(support_length(&t).unwrap().entries(), &[(vec![g(0), g(5)], 2), (vec![g(1), g(7)], 1)]);

        let t = RepPoint::single(m(&[&[0, -2], &[1, 0]])).unwrap();
        assert_eq!(support_length(&t), Err(Error::SpectrumNotSplit { residual_degree: 2 }));
    }

    #[test]
    fn pushforward_examples() {
        let t = RepPoint::single(Matrix::diag(&[g(1), g(2)])).unwrap();
        let pf = pushforward(&t).unwrap();
        assert_eq!(pf.entries.len(), 2);
        assert!(pf.entries.iter().all(|e| e.length == 1 && e.filtration_ranks.is_empty()));

        let pf = pushforward(&RepPoint::single(j2()).unwrap()).unwrap();
        assert_eq!(pf.entries, vec![PushforwardEntry { point: vec![g(0)], length: 2, filtration_ranks: vec![1] }]);

        let block = Matrix::block_diag(&[j2(), Matrix::zeros(1, 1)]);
        let pf = pushforward(&RepPoint::single(block).unwrap()).unwrap();
        assert_eq!(pf.entries, vec![PushforwardEntry { point: vec![g(0)], length: 3, filtration_ranks: vec![1] }]);
    }

    #[test]
    fn higgsing_endpoints_in_pushforward() {
        // diag(a, b): two length-1 points; at b = a a single length-2 point
        let apart = pushforward(&RepPoint::single(Matrix::diag(&[g(3), g(5)])).unwrap()).unwrap();
        assert_eq!(apart.support().entries(), &[(vec![g(3)], 1), (vec![g(5)], 1)]);
        let merged = pushforward(&RepPoint::single(Matrix::diag(&[g(3), g(3)])).unwrap()).unwrap();
        assert_eq!(merged.support().entries(), &[(vec![g(3)], 2)]);
        assert!(merged.entries[0].filtration_ranks.is_empty());
    }

    #[test]
    fn hilbert_chow_examples() {
        assert_eq!(hilbert_chow(&Matrix::identity(2)).unwrap().roots, Some(vec![(g(1), 2)]));
        assert_eq!(hilbert_chow(&j2()).unwrap().roots, Some(vec![(g(0), 2)]));
        assert_eq!(hilbert_chow(&Matrix::diag(&[g(1), g(2), g(2)])).unwrap().roots, Some(vec![(g(1), 1), (g(2), 2)]));
        let hc = hilbert_chow(&m(&[&[0, 2], &[1, 0]])).unwrap();
        assert_eq!(hc.roots, None);
        assert_eq!(hc.char_poly, UniPoly::new(vec![g(-2), g(0), g(1)]));
    }

    #[test]
    fn intertwiner_examples() {
        let s = RepPoint::single(Matrix::scalar(3, g(2))).unwrap();
        assert_eq!(intertwiner_space(&s, &s).unwrap().len(), 9);

        let a = RepPoint::single(j2()).unwrap();
        let zero = RepPoint::single(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(intertwiner_space(&a, &zero).unwrap().len(), 2);

        let at = RepPoint::single(j2().transpose()).unwrap();
        let flip = m(&[&[0, 1], &[1, 0]]);
        let space = intertwiner_space(&a, &at).unwrap();
        // the flip lies in the span
        let mut stacked: Vec<Vec<GR>> = space.iter().map(|k| k.entries().to_vec()).collect();
        let before = Matrix::from_rows(stacked.clone()).unwrap().rank();
        stacked.push(flip.entries().to_vec());
        assert_eq!(Matrix::from_rows(stacked).unwrap().rank(), before);
    }

    #[test]
    fn conjugacy_examples() {
        let a = RepPoint::single(j2()).unwrap();
        let at = RepPoint::single(j2().transpose()).unwrap();
        let zero = RepPoint::single(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(is_conjugate(&a, &at).unwrap(), Conjugacy::Conjugate);
        assert_eq!(is_conjugate(&a, &zero).unwrap(), Conjugacy::NotConjugate);
        assert_eq!(is_conjugate(&a, &a).unwrap(), Conjugacy::Conjugate);
    }

    #[test]
    fn conjugacy_above_symbolic_limit() {
        let mut rng = sample::rng(7);
        let n = Matrix::block_diag(&[m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]), m(&[&[2, 1], &[0, 2]])]);
        let t = RepPoint::single(n.clone()).unwrap();
        let (p, p_inv) = sample::invertible(&mut rng, 5, 2);
        let u = t.conjugate(&p, &p_inv).unwrap();
        assert_eq!(is_conjugate(&t, &u).unwrap(), Conjugacy::Conjugate);

        // same characteristic polynomial and power ranks, different Jordan type at 2
        let other =
            RepPoint::single(Matrix::block_diag(&[m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]), Matrix::scalar(2, g(2))]))
                .unwrap();
        assert_ne!(is_conjugate(&t, &other).unwrap(), Conjugacy::Conjugate);
    }
}
