use azumaya_core::higgsing::{
    classify_deformation, fundamental_solutions, ode_residual, spectral_contains, spectral_curve, Branch, HiggsProblem,
    HiggsSolution,
};
use azumaya_core::sample::{self, ChaCha8Rng};
use azumaya_core::{PolyMatrix, UniPoly, GR};
use num_traits::Zero;
use proptest::prelude::*;

fn lambdas() -> [GR; 4] {
    [GR::from(1), GR::from(2), GR::frac(1, 2), GR::i()]
}

fn sweep_values() -> Vec<GR> {
    let mut v = Vec::new();
    for k in [1, 2, 3] {
        v.push(GR::from(k));
        v.push(GR::from(-k));
    }
    v.push(GR::frac(1, 2));
    v.push(GR::frac(-1, 3));
    v
}

#[test]
fn fundamental_solutions_solve_the_whole_family() {
    for u in sweep_values() {
        for c in sweep_values() {
            for lambda in lambdas() {
                let p = HiggsProblem::solvable_family(GR::from(1), u.clone(), c.clone(), lambda).unwrap();
                for b in fundamental_solutions(&p).unwrap() {
                    assert!(ode_residual(&p, &b).unwrap().is_zero());
                }
            }
        }
    }
}

fn random_problem(rng: &mut ChaCha8Rng) -> HiggsProblem {
    let u = sample::nonzero_gaussian_int(rng, 3) * sample::rational(rng, 3);
    let u = if u.is_zero() { GR::from(1) } else { u };
    let c = sample::nonzero_gaussian_int(rng, 3);
    let lambda = sample::pick(rng, &lambdas()).clone();
    HiggsProblem::solvable_family(sample::gaussian_int(rng, 3), u, c, lambda).unwrap()
}

/// `bhat` whose constant term has eigenvalue `nu`, so the spectrum splits.
fn split_bhat(rng: &mut ChaCha8Rng) -> [GR; 4] {
    let nu = sample::gaussian_int(rng, 3);
    let b1 = loop {
        let b = sample::gaussian_int(rng, 3);
        if b != nu {
            break b;
        }
    };
    let (b2, b3) = (sample::gaussian_int(rng, 3), sample::gaussian_int(rng, 3));
    let b4 = &nu + &(&(&b2 * &b3) / &(&b1 - &nu));
    [b1, b2, b3, b4]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn combinations_solve_and_keep_char_poly(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let p = random_problem(&mut rng);
        let bhat = [0; 4].map(|_| sample::gaussian_rational(&mut rng, 4));
        let s = HiggsSolution::combine(&p, bhat.clone()).unwrap();
        prop_assert!(ode_residual(&p, &s.b).unwrap().is_zero());
        prop_assert_eq!(s.b0.entries(), &bhat[..]);
        let lifted = s.b0.char_poly().unwrap().map(|c| UniPoly::constant(c.clone()));
        prop_assert_eq!(s.b.char_poly().unwrap(), lifted);
    }

    #[test]
    fn split_branches_have_rank_one_kernels(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let p = random_problem(&mut rng);
        let s = HiggsSolution::combine(&p, split_bhat(&mut rng)).unwrap();
        let report = classify_deformation(&p, &s).unwrap();
        prop_assert!(report.char_poly_matches);
        if let Branch::Split { eigenvalues, kernels } = &report.branch {
            for (nu, v) in eigenvalues.iter().zip(kernels) {
                let shifted = s.b.sub(&PolyMatrix::scalar(2, UniPoly::constant(nu.clone()))).unwrap();
                prop_assert!(shifted.mul_vec(v).unwrap().iter().all(Zero::is_zero));
                prop_assert!(v.iter().any(|e| !e.is_zero()));
            }
            let tr = s.b0.trace().unwrap();
            let det = s.b0.det().unwrap();
            prop_assert_eq!(report.kernel_ideal, UniPoly::new(vec![det, -tr, GR::from(1)]));
        }
    }

    #[test]
    fn spectral_curve_of_block_diagonal_is_product(seed in any::<u64>(), a in 1usize..=2, b in 1usize..=2) {
        let mut rng = sample::rng(seed);
        let mut block = |n: usize| {
            let data = (0..n * n).map(|_| UniPoly::new(sample::vector(&mut rng, 3, 3))).collect();
            PolyMatrix::new(n, n, data).unwrap()
        };
        let (x, y) = (block(a), block(b));
        let whole = spectral_curve(&PolyMatrix::block_diag(&[x.clone(), y.clone()])).unwrap();
        prop_assert_eq!(whole, spectral_curve(&x).unwrap() * spectral_curve(&y).unwrap());
    }

    #[test]
    fn eigenvalues_lie_on_the_spectral_curve(seed in any::<u64>()) {
        // phi(z) = g diag(z, 2 - z) g^-1 + z^2 I splits at every point
        let mut rng = sample::rng(seed);
        let (g, gi) = sample::invertible(&mut rng, 2, 2);
        let lift = |m: &azumaya_core::Matrix| PolyMatrix::from_constant(m);
        let d = PolyMatrix::diag(&[UniPoly::x(), UniPoly::new(vec![GR::from(2), GR::from(-1)])]);
        let z2 = PolyMatrix::scalar(2, UniPoly::monomial(GR::from(1), 2));
        let phi = lift(&g).mul(&d).unwrap().mul(&lift(&gi)).unwrap().add(&z2).unwrap();
        let curve = spectral_curve(&phi).unwrap();
        let z0 = sample::gaussian_rational(&mut rng, 5);
        prop_assert!(spectral_contains(&phi, &curve, &z0).unwrap());
    }
}
