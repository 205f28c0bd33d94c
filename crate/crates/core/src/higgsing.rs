//! Deformation of a rank-2 Higgs pair under `lambda dB/dz + [A, B] = 0`.
//!
//! `A = [[a1, a2], [a3, a4]]` with entries in `Q(i)[z]`. When
//! `(a1 - a4)^2 + 4 a2 a3 = 0` the equation has four closed-form polynomial
//! solutions `B_1..B_4`, each quadratic in `z`, whose constant terms are the
//! matrix units. A solution `B = sum bhat_i B_i` has the same characteristic
//! polynomial as its constant term, which drives the branch classification.
//!
//! Also here: the truncated action of `z` and `d/dz` on `Q(i)[z]^r`, and
//! spectral curves `det(lambda I - phi(z))`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, PolyMatrix};
use crate::multipoly::{Monomial, MultiPoly};
use crate::poly::{Poly, UniPoly};
use crate::roots::split_roots;
use crate::scalar::GR;

/// Default degree cap for [`WeylTrunc`].
pub const DEFAULT_DEGREE_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct HiggsProblem {
    a: PolyMatrix,
    lambda: GR,
}

impl HiggsProblem {
    pub fn new(a: PolyMatrix, lambda: GR) -> Result<Self> {
        if a.shape() != (2, 2) {
            return Err(Error::InvalidHiggsData("A must be 2x2"));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidHiggsData("lambda must be nonzero"));
        }
        Ok(HiggsProblem { a, lambda })
    }

    /// Constant `A = [[a1, a2], [a3, a4]]`.
    pub fn constant(a: [GR; 4], lambda: GR) -> Result<Self> {
        let [a1, a2, a3, a4] = a;
        let m = Matrix::from_rows(vec![vec![a1, a2], vec![a3, a4]])?;
        HiggsProblem::new(PolyMatrix::from_constant(&m), lambda)
    }

    /// The solvable family `a1 = a4 + 2u`, `a2 = u c`, `a3 = -u / c`.
    pub fn solvable_family(a4: GR, u: GR, c: GR, lambda: GR) -> Result<Self> {
        let c_inv = c.inv().ok_or(Error::InvalidHiggsData("c must be nonzero"))?;
        let a1 = &a4 + &(&u + &u);
        let a2 = &u * &c;
        let a3 = -(&u * &c_inv);
        HiggsProblem::constant([a1, a2, a3, a4], lambda)
    }

    pub fn a(&self) -> &PolyMatrix {
        &self.a
    }

    pub fn lambda(&self) -> &GR {
        &self.lambda
    }

    /// `[a1, a2, a3, a4]`, row-major.
    pub fn entries(&self) -> [&UniPoly; 4] {
        [&self.a[(0, 0)], &self.a[(0, 1)], &self.a[(1, 0)], &self.a[(1, 1)]]
    }

    pub fn is_constant(&self) -> bool {
        self.a.degree().unwrap_or(0) == 0
    }
}

/// Exact test of `(a1 - a4)^2 + 4 a2 a3 = 0` in `Q(i)[z]`.
pub fn solvability_check(p: &HiggsProblem) -> bool {
    let [a1, a2, a3, a4] = p.entries();
    let d = a1.clone() - a4.clone();
    (d.clone() * d + (a2.clone() * a3.clone()).scale(&GR::from(4))).is_zero()
}

/// The four closed-form solutions with the `a_i` substituted as given,
/// without checking any hypothesis. For constant solvable `A` these solve the
/// equation; for `z`-dependent `A` they generally do not.
pub fn closed_forms(p: &HiggsProblem) -> [PolyMatrix; 4] {
    let [a1, a2, a3, a4] = p.entries();
    let l1 = p.lambda.inv().expect("lambda is nonzero");
    let l2 = &l1 * &l1;
    let half_l2 = &l2 * &GR::frac(1, 2);
    let z = UniPoly::x();
    let z2 = z.clone() * z.clone();
    let d = a1.clone() - a4.clone();
    let a23 = a2.clone() * a3.clone();
    let one = UniPoly::one();

    // lambda^-1 f z and lambda^-2 f z^2 (times 1/2 where marked)
    let lin = |f: &UniPoly| (f.clone() * z.clone()).scale(&l1);
    let quad = |f: &UniPoly| (f.clone() * z2.clone()).scale(&l2);
    let half = |f: &UniPoly| (d.clone() * f.clone() * z2.clone()).scale(&half_l2);

    let mat = |e: [UniPoly; 4]| {
        let [p, q, r, s] = e;
        PolyMatrix::from_rows(vec![vec![p, q], vec![r, s]]).expect("2x2")
    };
    let b1 = mat([one.clone() + quad(&a23), lin(a2) - half(a2), -lin(a3) - half(a3), -quad(&a23)]);
    let b2 = mat([
        lin(a3) - half(a3),
        one.clone() - lin(&d) - quad(&a23),
        -quad(&(a3.clone() * a3.clone())),
        -lin(a3) + half(a3),
    ]);
    let b3 = mat([
        -lin(a2) - half(a2),
        -quad(&(a2.clone() * a2.clone())),
        one.clone() + lin(&d) - quad(&a23),
        lin(a2) + half(a2),
    ]);
    let b4 = mat([-quad(&a23), -lin(a2) + half(a2), lin(a3) + half(a3), one + quad(&a23)]);
    [b1, b2, b3, b4]
}

/// `B_1..B_4` for constant solvable `A`; each is checked to have zero residual.
pub fn fundamental_solutions(p: &HiggsProblem) -> Result<[PolyMatrix; 4]> {
    if !p.is_constant() {
        return Err(Error::NonConstantA);
    }
    if !solvability_check(p) {
        return Err(Error::SolvabilityViolated);
    }
    let sols = closed_forms(p);
    for b in &sols {
        if !ode_residual(p, b)?.is_zero() {
            return Err(Error::NotASolution);
        }
    }
    Ok(sols)
}

/// `lambda dB/dz + A B - B A`.
pub fn ode_residual(p: &HiggsProblem, b: &PolyMatrix) -> Result<PolyMatrix> {
    let lam = UniPoly::constant(p.lambda.clone());
    b.derivative().scale(&lam).add(&p.a.commutator(b)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HiggsSolution {
    pub bhat: [GR; 4],
    pub b: PolyMatrix,
    /// Constant term of `b`.
    pub b0: Matrix,
}

impl HiggsSolution {
    /// `sum bhat_i B_i`.
    pub fn combine(p: &HiggsProblem, bhat: [GR; 4]) -> Result<Self> {
        let sols = fundamental_solutions(p)?;
        let mut b = PolyMatrix::zeros(2, 2);
        for (c, bi) in bhat.iter().zip(&sols) {
            b = b.add(&bi.scale(&UniPoly::constant(c.clone())))?;
        }
        Ok(HiggsSolution::from_matrix(b))
    }

    /// Wraps an arbitrary `B`; `bhat` is read off its constant term.
    pub fn from_matrix(b: PolyMatrix) -> Self {
        let b0 = b.coeff_matrix(0);
        let e = b0.entries();
        let bhat = if e.len() == 4 {
            [e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()]
        } else {
            [GR::zero(), GR::zero(), GR::zero(), GR::zero()]
        };
        HiggsSolution { bhat, b, b0 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Branch {
    /// Distinct eigenvalues `nu_- < nu_+`, each with a rank-1 polynomial
    /// kernel `N_± = Ker(B - nu_±)`.
    Split { eigenvalues: [GR; 2], kernels: [Vec<UniPoly>; 2] },
    /// `B = nu I`.
    Scalar { eigenvalue: GR },
    /// `B != nu I` but `(B - nu)^2 = 0`; the kernel `N_0` gives a
    /// two-step filtration.
    Nilpotent { eigenvalue: GR, kernel: Vec<UniPoly> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchReport {
    pub branch: Branch,
    /// Generator of the kernel ideal, a polynomial in `v`.
    pub kernel_ideal: UniPoly,
    pub char_poly_b0: UniPoly,
    /// Whether `det(v - B)`, computed over `Q(i)[z]`, has no `z`-dependence
    /// and equals `det(v - B0)`.
    pub char_poly_matches: bool,
}

pub fn classify_deformation(p: &HiggsProblem, s: &HiggsSolution) -> Result<BranchReport> {
    if s.b.shape() != (2, 2) {
        return Err(Error::InvalidHiggsData("B must be 2x2"));
    }
    if !ode_residual(p, &s.b)?.is_zero() {
        return Err(Error::NotASolution);
    }
    let char_poly_b0 = s.b0.char_poly()?;
    let char_poly_b = s.b.char_poly()?;
    let char_poly_matches = char_poly_b == char_poly_b0.map(|c| UniPoly::constant(c.clone()));
    let roots = split_roots(&char_poly_b0)?;
    let shifted = |nu: &GR| s.b.sub(&PolyMatrix::scalar(2, UniPoly::constant(nu.clone())));
    let rank_one_kernel = |m: &PolyMatrix| -> Result<Vec<UniPoly>> {
        let mut basis = m.poly_kernel_basis();
        if basis.len() != 1 {
            return Err(Error::DeformationInvariantBroken);
        }
        Ok(basis.remove(0))
    };

    let (branch, kernel_ideal) = if roots.len() == 2 {
        let (lo, hi) = (roots[0].0.clone(), roots[1].0.clone());
        let kernels = [rank_one_kernel(&shifted(&lo)?)?, rank_one_kernel(&shifted(&hi)?)?];
        let ideal = UniPoly::from_roots(&[lo.clone(), hi.clone()]);
        (Branch::Split { eigenvalues: [lo, hi], kernels }, ideal)
    } else {
        let nu = roots[0].0.clone();
        let n = shifted(&nu)?;
        if n.is_zero() {
            (Branch::Scalar { eigenvalue: nu.clone() }, UniPoly::from_roots(&[nu]))
        } else if n.mul(&n)?.is_zero() {
            let kernel = rank_one_kernel(&n)?;
            (Branch::Nilpotent { eigenvalue: nu.clone(), kernel }, UniPoly::from_roots(&[nu.clone(), nu]))
        } else {
            return Err(Error::DeformationInvariantBroken);
        }
    };
    Ok(BranchReport { branch, kernel_ideal, char_poly_b0, char_poly_matches })
}

/// `z` and `d/dz` acting on `r`-tuples of polynomials of degree `< cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeylTrunc {
    cap: usize,
    rank: usize,
}

impl WeylTrunc {
    pub fn new(cap: usize, rank: usize) -> Result<Self> {
        if cap < 2 {
            return Err(Error::DegreeCapTooSmall { cap });
        }
        Ok(WeylTrunc { cap, rank })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Multiplication by `z`, dropping the degree-`cap` overflow.
    pub fn apply_z(&self, v: &[UniPoly]) -> Vec<UniPoly> {
        v.iter().map(|p| p.shift(1).truncate(self.cap)).collect()
    }

    pub fn apply_d(&self, v: &[UniPoly]) -> Vec<UniPoly> {
        v.iter().map(|p| p.derivative()).collect()
    }

    /// `(d z - z d) v`.
    pub fn commutator(&self, v: &[UniPoly]) -> Vec<UniPoly> {
        let dz = self.apply_d(&self.apply_z(v));
        let zd = self.apply_z(&self.apply_d(v));
        dz.into_iter().zip(zd).map(|(a, b)| a - b).collect()
    }
}

/// Checks `[d, z] = 1` on every basis vector `z^k e_i` with `k <= cap - 2`.
pub fn weyl_commutator_check(w: &WeylTrunc) -> bool {
    (0..w.rank).all(|i| {
        (0..=w.cap - 2).all(|k| {
            let mut v = vec![UniPoly::zero(); w.rank];
            v[i] = UniPoly::monomial(GR::one(), k);
            w.commutator(&v) == v
        })
    })
}

/// `det(lambda I - phi(z))` as a polynomial in `(z, lambda)`.
pub fn spectral_curve(phi: &PolyMatrix) -> Result<MultiPoly> {
    let cp: Poly<UniPoly> = phi.char_poly()?;
    let mut terms = Vec::new();
    for (k, ck) in cp.coeffs().iter().enumerate() {
        for (j, c) in ck.coeffs().iter().enumerate() {
            terms.push((Monomial::new(vec![j as u32, k as u32]), c.clone()));
        }
    }
    Ok(MultiPoly::from_terms(terms))
}

/// Whether every eigenvalue of `phi(z0)` lies on the spectral curve over `z0`.
pub fn spectral_contains(phi: &PolyMatrix, curve: &MultiPoly, z0: &GR) -> Result<bool> {
    let m = phi.eval_at(z0);
    let roots = split_roots(&m.char_poly()?)?;
    Ok(roots.iter().all(|(mu, _)| curve.eval(&[z0.clone(), mu.clone()]).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| GR::from(x)).collect())
    }

    fn pm(rows: [[&[i64]; 2]; 2]) -> PolyMatrix {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|c| p(c)).collect()).collect()).unwrap()
    }

    fn g(a: [i64; 4]) -> [GR; 4] {
        a.map(GR::from)
    }

    #[test]
    fn solvability_examples() {
        assert!(solvability_check(&HiggsProblem::constant(g([0, 1, 0, 0]), GR::one()).unwrap()));
        assert!(!solvability_check(&HiggsProblem::constant(g([1, 0, 0, 0]), GR::one()).unwrap()));
        let fam = HiggsProblem::solvable_family(GR::from(5), GR::frac(2, 3), GR::frac(-1, 4), GR::i()).unwrap();
        assert!(solvability_check(&fam));
    }

    #[test]
    fn fundamental_solution_examples() {
        let prob = HiggsProblem::constant(g([0, 1, 0, 0]), GR::one()).unwrap();
        let [b1, _, _, b4] = fundamental_solutions(&prob).unwrap();
        assert_eq!(b1, pm([[&[1], &[0, 1]], [&[], &[]]]));
        assert_eq!(b4, pm([[&[], &[0, -1]], [&[], &[1]]]));

        let zero = HiggsProblem::constant(g([0, 0, 0, 0]), GR::from(3)).unwrap();
        let sols = fundamental_solutions(&zero).unwrap();
        for (k, b) in sols.iter().enumerate() {
            assert_eq!(b, &PolyMatrix::from_constant(&Matrix::unit(2, k / 2, k % 2)));
        }

        let bad = HiggsProblem::constant(g([1, 0, 0, 0]), GR::one()).unwrap();
        assert_eq!(fundamental_solutions(&bad), Err(Error::SolvabilityViolated));
    }

    #[test]
    fn residual_examples() {
        let prob = HiggsProblem::constant(g([3, -1, 7, 2]), GR::one()).unwrap();
        assert!(ode_residual(&prob, &PolyMatrix::identity(2)).unwrap().is_zero());

        let zero = HiggsProblem::constant(g([0, 0, 0, 0]), GR::one()).unwrap();
        let zi = PolyMatrix::scalar(2, UniPoly::x());
        assert_eq!(ode_residual(&zero, &zi).unwrap(), PolyMatrix::identity(2));
    }

    #[test]
    fn closed_forms_fail_for_z_dependent_a() {
        // a1 - a4 = 2z, a2 = z, a3 = -z is solvable pointwise
        let a = pm([[&[0, 2], &[0, 1]], [&[0, -1], &[]]]);
        let prob = HiggsProblem::new(a, GR::one()).unwrap();
        assert!(solvability_check(&prob));
        assert_eq!(fundamental_solutions(&prob), Err(Error::NonConstantA));
        let residuals: Vec<bool> =
            closed_forms(&prob).iter().map(|b| ode_residual(&prob, b).unwrap().is_zero()).collect();
        assert!(residuals.iter().all(|ok| !ok));
    }

    #[test]
    fn classification_examples() {
        let zero = HiggsProblem::constant(g([0, 0, 0, 0]), GR::one()).unwrap();
        let s = HiggsSolution::combine(&zero, g([1, 0, 0, 2])).unwrap();
        let rep = classify_deformation(&zero, &s).unwrap();
        assert_eq!(rep.kernel_ideal, p(&[2, -3, 1]));
        assert!(matches!(rep.branch, Branch::Split { .. }));

        let s = HiggsSolution::combine(&zero, g([5, 0, 0, 5])).unwrap();
        let rep = classify_deformation(&zero, &s).unwrap();
        assert_eq!(rep.branch, Branch::Scalar { eigenvalue: GR::from(5) });
        assert_eq!(rep.kernel_ideal, p(&[-5, 1]));

        let prob = HiggsProblem::constant(g([0, 1, 0, 0]), GR::one()).unwrap();
        let s = HiggsSolution::combine(&prob, g([1, 0, 0, 0])).unwrap();
        assert_eq!(s.b, pm([[&[1], &[0, 1]], [&[], &[]]]));
        let rep = classify_deformation(&prob, &s).unwrap();
        assert!(rep.char_poly_matches);
        assert_eq!(rep.char_poly_b0, p(&[0, -1, 1]));
        let Branch::Split { eigenvalues, kernels } = rep.branch else { panic!("expected split") };
        assert_eq!(eigenvalues, [GR::zero(), GR::one()]);
        // B = [[1, z], [0, 0]]: Ker B = (z, -1) up to scale, Ker(B - 1) = (1, 0)
        assert_eq!(kernels[0], vec![p(&[0, 1]), p(&[-1])]);
        assert_eq!(kernels[1], vec![p(&[1]), p(&[])]);
    }

    #[test]
    fn nilpotent_branch() {
        let prob = HiggsProblem::constant(g([0, 1, 0, 0]), GR::one()).unwrap();
        let s = HiggsSolution::combine(&prob, g([3, 1, 0, 3])).unwrap();
        let rep = classify_deformation(&prob, &s).unwrap();
        assert!(matches!(rep.branch, Branch::Nilpotent { .. }));
        assert_eq!(rep.kernel_ideal, UniPoly::from_roots(&[GR::from(3), GR::from(3)]));

        let not_a_solution = HiggsSolution::from_matrix(PolyMatrix::scalar(2, UniPoly::x()));
        assert_eq!(classify_deformation(&prob, &not_a_solution), Err(Error::NotASolution));
    }

    #[test]
    fn weyl_examples() {
        assert!(weyl_commutator_check(&WeylTrunc::new(2, 1).unwrap()));
        assert!(weyl_commutator_check(&WeylTrunc::new(DEFAULT_DEGREE_CAP, 3).unwrap()));
        let w = WeylTrunc::new(5, 1).unwrap();
        let z3 = vec![UniPoly::monomial(GR::one(), 3)];
        assert_eq!(w.commutator(&z3), z3);
        // at the boundary z^(N-1) the truncation breaks the identity
        let z4 = vec![UniPoly::monomial(GR::one(), 4)];
        assert_ne!(w.commutator(&z4), z4);
        assert_eq!(WeylTrunc::new(1, 1), Err(Error::DegreeCapTooSmall { cap: 1 }));
    }

    #[test]
    fn spectral_curve_examples() {
        let zl = |j: u32, k: u32, c: i64| (Monomial::new(vec![j, k]), GR::from(c));
        let diag = pm([[&[0, 1], &[]], [&[], &[0, -1]]]);
        assert_eq!(spectral_curve(&diag).unwrap(), MultiPoly::from_terms([zl(0, 2, 1), zl(2, 0, -1)]));
        let comp = pm([[&[], &[1]], [&[0, 1], &[]]]);
        assert_eq!(spectral_curve(&comp).unwrap(), MultiPoly::from_terms([zl(0, 2, 1), zl(1, 0, -1)]));
        let scalar = PolyMatrix::from_rows(vec![vec![p(&[1, 0, 3])]]).unwrap();
        let expected = MultiPoly::from_terms([zl(0, 1, 1), zl(0, 0, -1), zl(2, 0, -3)]);
        assert_eq!(spectral_curve(&scalar).unwrap(), expected);

        let curve = spectral_curve(&comp).unwrap();
        assert!(spectral_contains(&comp, &curve, &GR::from(4)).unwrap());
        assert!(spectral_contains(&comp, &curve, &GR::from(-1)).unwrap());
    }
}
