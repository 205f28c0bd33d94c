//! Sparse multivariate polynomials over `Q(i)` in graded lexicographic order.
//!
//! A polynomial does not carry its variable names; containers that need them
//! (presentations, spectral curves, forms) keep the ordered name list and
//! exponent vectors are indexed against it.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::UniPoly;
use crate::scalar::{GaussianRational, Ring, GR};

/// Exponent vector. Trailing zeros are trimmed so that `x^a` has the same key
/// whatever the ambient number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of leading variables this monomial can involve.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    /// Exponents padded to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.0.len())).map(|i| self.exp(i)).collect()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let n = self.0.len().max(o.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + o.exp(i)).collect())
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if o.0.len() > self.0.len() && o.0[self.0.len()..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut out = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            out.push(self.exp(i).checked_sub(o.exp(i))?);
        }
        Some(Monomial::new(out))
    }

    /// All monomials in `n` variables of total degree at most `d`, in
    /// ascending graded lexicographic order.
    pub fn up_to_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() == n {
                if left == 0 {
                    out.push(Monomial::new(prefix.clone()));
                }
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(n, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for deg in 0..=d {
            let mut layer = Vec::new();
            if n == 0 {
                if deg == 0 {
                    layer.push(Monomial::one());
                }
            } else {
                rec(n, deg, &mut Vec::new(), &mut layer);
            }
            layer.sort();
            out.extend(layer);
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            (0..n).map(|i| self.exp(i).cmp(&o.exp(i))).find(|c| c.is_ne()).unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Terms keyed by monomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, GR>,
}

impl MultiPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GR)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn constant(c: GR) -> Self {
        Self::from_terms([(Monomial::one(), c)])
    }

    /// The `i`-th coordinate function.
    pub fn var(i: usize) -> Self {
        Self::from_terms([(Monomial::var(i), GR::one())])
    }

    pub fn term(m: Monomial, c: GR) -> Self {
        Self::from_terms([(m, c)])
    }

    /// Embeds a univariate polynomial as a polynomial in variable `i`.
    pub fn from_univariate(p: &UniPoly, i: usize) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let mut e = vec![0u32; i + 1];
            e[i] = k as u32;
            (Monomial::new(e), c.clone())
        }))
    }

    fn add_term(&mut self, m: Monomial, c: GR) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(GR::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GR)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> GR {
        self.terms.get(m).cloned().unwrap_or_else(GR::zero)
    }

    /// Greatest term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GR)> {
        self.terms.iter().next_back()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Smallest number of leading variables covering every term.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.width() == 0
    }

    pub fn scale(&self, c: &GR) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Evaluates at a point. Missing coordinates are an error at the call site;
    /// here they panic, so check [`MultiPoly::width`] first.
    pub fn eval(&self, point: &[GR]) -> GR {
        let mut acc = GR::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point[..m.width()].iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t *= x;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Evaluates in any commutative algebra.
    pub fn eval_in<T: Ring>(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_scalar(c.clone());
            for (i, x) in point[..m.width()].iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
            let e = m.exp(i);
            let mut v = m.padded(i + 1);
            v[i] -= 1;
            (Monomial::new(v), c * &GR::from(e as i64))
        }))
    }

    /// Formats with the given variable names, leading term first.
    pub fn to_text(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for i in 0..m.width() {
                let name = names.get(i).copied().unwrap_or("?");
                match m.exp(i) {
                    0 => {}
                    1 => mono.push(String::from(name)),
                    e => mono.push(alloc::format!("{}^{}", name, e)),
                }
            }
            let mono = mono.join("*");
            let cs = alloc::format!("{}", c);
            parts.push(match (mono.is_empty(), cs.as_str()) {
                (true, _) => alloc::format!("({})", cs),
                (false, "1") => mono,
                (false, "-1") => alloc::format!("-{}", mono),
                _ => alloc::format!("({})*{}", cs, mono),
            });
        }
        parts.join(" + ")
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(GR::one())
    }
}

impl Add for MultiPoly {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for MultiPoly {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Sub for MultiPoly {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for MultiPoly {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Ring for MultiPoly {
    fn from_scalar(c: GaussianRational) -> Self {
        Self::constant(c)
    }

    /// Multivariate division by leading terms; exact quotients only.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.div(&dm)?;
            let t = MultiPoly::term(m, rc / &dc);
            rem = rem - t.clone() * d.clone();
            quot = quot + t;
        }
        Some(quot)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(1)
    }

    #[test]
    fn grlex_order() {
        let ms = Monomial::up_to_degree(2, 2);
        let shown: Vec<Vec<u32>> = ms.iter().map(|m| m.padded(2)).collect();
        assert_eq!(shown, [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1], [2, 0]]);
    }

    #[test]
    fn arithmetic_cancels_terms() {
        let p = (x() + y()) * (x() - y());
        let q = x() * x() - y() * y();
        assert_eq!(p, q);
        assert!((p - q).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = (x() + y()) * (x() * y() - MultiPoly::one());
        assert_eq!(p.exact_div(&(x() + y())), Some(x() * y() - MultiPoly::one()));
        assert_eq!((p + MultiPoly::one()).exact_div(&(x() + y())), None);
    }

    #[test]
    fn partials_and_eval() {
        let p = x() * x() * y() + y().scale(&GR::from(3));
        assert_eq!(p.partial(0), (x() * y()).scale(&GR::from(2)));
        assert_eq!(p.partial(1), x() * x() + MultiPoly::constant(GR::from(3)));
        assert_eq!(p.eval(&[GR::from(2), GR::from(5)]), GR::from(35));
        assert_eq!(p.to_text(&["x", "y"]), "x^2*y + (3)*y");
    }
}
