//! Linear factorization over `Q(i)`.
//!
//! The squarefree part is rescaled to a monic polynomial with Gaussian-integer
//! coefficients, whose roots are then Gaussian integers of bounded size.
//! Roots are found modulo a split prime `P = pi * conj(pi)`, lifted by Newton
//! iteration to precision `pi^k` beyond the size bound, and read back as the
//! smallest representative modulo `pi^k`. Every candidate is confirmed by
//! exact evaluation.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_integer::Roots;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::{Rational, GR};

/// Largest auxiliary prime tried before giving up.
const PRIME_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    fn from_gr(c: &GR) -> Self {
        debug_assert!(c.re().is_integer() && c.im().is_integer());
        GaussInt::new(c.re().to_integer(), c.im().to_integer())
    }

    fn to_gr(&self) -> GR {
        GR::new(Rational::from_integer(self.re.clone()), Rational::from_integer(self.im.clone()))
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    fn pow(&self, k: u32) -> GaussInt {
        (0..k).fold(GaussInt::new(BigInt::one(), BigInt::zero()), |acc, _| acc.mul(self))
    }

    /// Image in `Z / m` under `i -> iota`.
    fn reduce(&self, iota: &BigInt, m: &BigInt) -> BigInt {
        (&self.re + &self.im * iota).mod_floor(m)
    }

    /// Remainder of smallest norm-ish size: `self - round(self / d) d`.
    fn rem_nearest(&self, d: &GaussInt) -> GaussInt {
        let n = d.norm();
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let q = GaussInt::new(round_div(&re, &n), round_div(&im, &n));
        let qd = q.mul(d);
        GaussInt::new(&self.re - qd.re, &self.im - qd.im)
    }
}

/// Nearest integer to `a / m` for `m > 0`.
fn round_div(a: &BigInt, m: &BigInt) -> BigInt {
    let two = BigInt::from(2u32);
    (a * &two + m).div_floor(&(m * two))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// For a prime `p = 1 mod 4`: a square root `iota` of `-1` and `pi = a + b i`
/// with `p = a^2 + b^2` and `a + b iota = 0 mod p` (Cornacchia).
fn split_prime(p: u64) -> (u64, GaussInt) {
    let iota = (2..p).map(|c| pow_mod(c, (p - 1) / 4, p)).find(|&x| pow_mod(x, 2, p) == p - 1).unwrap();
    let (mut r0, mut r1) = (p, iota);
    while r1 * r1 > p {
        (r0, r1) = (r1, r0 % r1);
    }
    let a = r1;
    let b = (p - a * a).sqrt();
    debug_assert_eq!(a * a + b * b, p);
    let b = if (a as u128 + b as u128 * iota as u128).is_multiple_of(p as u128) { b as i64 } else { -(b as i64) };
    (iota, GaussInt::new(BigInt::from(a), BigInt::from(b)))
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn derivative_mod(coeffs: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    coeffs.iter().enumerate().skip(1).map(|(k, c)| (c * k).mod_floor(m)).collect()
}

/// Gaussian-integer roots of the monic squarefree `q`, all of absolute value
/// below `bound`.
fn integral_roots(q: &[GaussInt], bound: &BigInt) -> Result<Vec<GaussInt>> {
    let target = bound * bound * 16;
    for p in (5..PRIME_LIMIT).step_by(4).filter(|&p| is_prime(p)) {
        let (iota, pi) = split_prime(p);
        let pb = BigInt::from(p);
        let small: Vec<BigInt> = q.iter().map(|c| c.reduce(&BigInt::from(iota), &pb)).collect();
        let dsmall = derivative_mod(&small, &pb);
        let mut residues = Vec::new();
        let mut bad = false;
        for r in 0..p {
            let r = BigInt::from(r);
            if eval_mod(&small, &r, &pb).is_zero() {
                if eval_mod(&dsmall, &r, &pb).is_zero() {
                    bad = true;
                    break;
                }
                residues.push(r);
            }
        }
        if bad {
            continue;
        }

        let mut k = 1u32;
        let mut m = pb.clone();
        while m <= target {
            m *= p;
            k += 1;
        }
        let pik = pi.pow(k);
        // i = -A / B modulo pi^k = A + B i
        let b_inv = pik.im.extended_gcd(&m).x;
        let iota_k = (-&pik.re * b_inv).mod_floor(&m);
        let big: Vec<BigInt> = q.iter().map(|c| c.reduce(&iota_k, &m)).collect();
        let dbig = derivative_mod(&big, &m);

        let mut found = Vec::new();
        for mut r in residues {
            let mut precision = 1u32;
            while precision < k {
                let d = eval_mod(&dbig, &r, &m);
                let d_inv = d.extended_gcd(&m).x;
                r = (&r - eval_mod(&big, &r, &m) * d_inv).mod_floor(&m);
                precision *= 2;
            }
            let beta = GaussInt::new(r, BigInt::zero()).rem_nearest(&pik);
            if beta.norm() < target && is_root(q, &beta) {
                found.push(beta);
            }
        }
        return Ok(found);
    }
    Err(Error::RootSearchLimit)
}

fn is_root(q: &[GaussInt], x: &GaussInt) -> bool {
    let v = q.iter().rev().fold(GaussInt::new(BigInt::zero(), BigInt::zero()), |acc, c| {
        let t = acc.mul(x);
        GaussInt::new(t.re + &c.re, t.im + &c.im)
    });
    v.re.is_zero() && v.im.is_zero()
}

/// Roots with multiplicities, sorted by the canonical `(re, im)` order.
///
/// Fails with [`Error::SpectrumNotSplit`] when `p` has an irreducible factor
/// of degree at least 2 over `Q(i)`.
pub fn split_roots(p: &UniPoly) -> Result<Vec<(GR, usize)>> {
    let Some(deg) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let mut roots: Vec<(GR, usize)> = Vec::new();
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push((GR::zero(), zero_mult));
    }
    let mut q = UniPoly::new(p.coeffs()[zero_mult..].to_vec());
    if deg == zero_mult {
        return Ok(roots);
    }

    let squarefree = q.div_rem(&q.gcd(&q.derivative())).0;
    let lcm = squarefree.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let s: Vec<GaussInt> =
        squarefree.scale(&GR::from_real(Rational::from_integer(lcm))).coeffs().iter().map(GaussInt::from_gr).collect();
    // monic rescaling: roots become lead * alpha, Gaussian integers
    let n = s.len() - 1;
    let lead = s[n].clone();
    let mut monic = Vec::with_capacity(n + 1);
    let mut power = GaussInt::new(BigInt::one(), BigInt::zero());
    for k in (0..n).rev() {
        monic.push(s[k].mul(&power));
        power = power.mul(&lead);
    }
    monic.reverse();
    monic.push(GaussInt::new(BigInt::one(), BigInt::zero()));
    // Cauchy bound |beta| <= 1 + max |c_k|
    let bound = monic[..n].iter().map(|c| c.norm().sqrt()).max().unwrap_or_default() + 2;

    let lead = lead.to_gr();
    let mut candidates: Vec<GR> = integral_roots(&monic, &bound)?.iter().map(|b| &b.to_gr() / &lead).collect();
    candidates.sort();
    for c in candidates {
        let linear = UniPoly::new(alloc::vec![-c.clone(), GR::one()]);
        let mut mult = 0;
        while q.degree().unwrap_or(0) > 0 && q.eval(&c).is_zero() {
            q = q.div_rem(&linear).0;
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
    }
    match q.degree() {
        Some(0) => {
            roots.sort();
            Ok(roots)
        }
        Some(d) => Err(Error::SpectrumNotSplit { residual_degree: d }),
        None => unreachable!("deflation never reaches the zero polynomial"),
    }
}
