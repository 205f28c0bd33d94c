//! Exact scalars: rationals and Gaussian rationals `a/b + (c/d) i`.
//!
//! Everything in the crate is computed over `Q(i)`. The [`Ring`] trait is
//! the common interface for the commutative `Q(i)`-algebras that show up as
//! matrix entries (scalars, univariate and multivariate polynomials).

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// A commutative `Q(i)`-algebra without zero divisors.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a scalar.
    fn from_scalar(c: GaussianRational) -> Self;

    /// `self / d` when the quotient lies in the ring, `None` otherwise.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_scalar(GaussianRational::from(n))
    }
}

/// `re + im * i` with exact rational parts.
///
/// Ordering is lexicographic on `(re, im)`; this is the canonical point order
/// used for support data.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

pub type GR = GaussianRational;

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    /// `n/d` as a real scalar. Panics on `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_real(Rational::new(n.into(), d.into()))
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    /// `a + b i` for integers.
    pub fn gauss(a: i64, b: i64) -> Self {
        GaussianRational { re: Rational::from_integer(a.into()), im: Rational::from_integer(b.into()) }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for real integers.
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_real(Rational::from_integer(n.into()))
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::from_real(r)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational { re: Rational::one(), im: Rational::zero() }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &GaussianRational) -> GaussianRational {
        let inv = o.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl Ring for GaussianRational {
    fn from_scalar(c: GaussianRational) -> Self {
        c
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        d.inv().map(|inv| self * &inv)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text for a rational: `"a"` or `"a/b"` in lowest terms.
pub fn rational_text(r: &Rational) -> String {
    fmt_rational(r)
}

impl fmt::Display for GaussianRational {
    /// Canonical text: `3`, `-1/2`, `i`, `-2i`, `1/2-3/4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_text = |im: &Rational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                alloc::format!("{}i", fmt_rational(im))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => f.write_str(&fmt_rational(&self.re)),
            (true, false) => f.write_str(&im_text(&self.im)),
            (false, false) => {
                let im = im_text(&self.im);
                if self.im.is_positive() {
                    write!(f, "{}+{}", fmt_rational(&self.re), im)
                } else {
                    write!(f, "{}{}", fmt_rational(&self.re), im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    let err = || Error::ParseScalar(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| err())?;
            let d: BigInt = d.parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts the canonical text form plus a few conveniences
    /// (`+i`, `3+1i`, surrounding whitespace).
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::ParseScalar(s.to_string());
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::from_real(parse_rational(&t)?));
        };
        // split at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(k, _)| k).last();
        let (re_text, im_text) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() { Rational::zero() } else { parse_rational(re_text)? };
        let im = match im_text {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(GaussianRational { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn text_round_trip() {
        for s in ["0", "3", "-1/2", "i", "-i", "2i", "-2/3i", "1+i", "1/2-3/4i", "-5+7i"] {
            let g: GR = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!("2/4".parse::<GR>().unwrap(), GR::frac(1, 2));
        assert!("1/0".parse::<GR>().is_err());
        assert!("x".parse::<GR>().is_err());
    }

    #[test]
    fn field_ops() {
        let a = GR::gauss(1, 2);
        let b = GR::gauss(3, -1);
        assert_eq!(&a * &b, GR::gauss(5, 5));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(GR::i() * GR::i(), GR::from(-1));
        assert!(GR::zero().inv().is_none());
    }

    #[test]
    fn canonical_order_is_re_then_im() {
        let mut v: Vec<GR> = ["1", "i", "-1", "0", "1-i"].iter().map(|s| s.parse().unwrap()).collect();
        v.sort();
        let t: Vec<String> = v.iter().map(|g| g.to_string()).collect();
        assert_eq!(t, ["-1", "0", "i", "1-i", "1"]);
    }
}
