//! Univariate polynomials and rational functions over ℚ.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c·x^k`
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x − a`
    pub fn linear_root(a: &Rational) -> Self {
        Self::new(vec![-a.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn deriv(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * rational::int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() * &lead_inv;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic gcd (zero only if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(x + a)`
    pub fn shift(&self, a: &Rational) -> Self {
        let xa = Self::new(vec![a.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(&xa).add(&Self::constant(c.clone())))
    }

    /// Largest `k` with `x^k | p`.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `Some((k, c))` when the polynomial is `c·x^k`.
    pub fn as_monomial(&self) -> Option<(usize, Rational)> {
        let k = self.degree()?;
        (self.low_order() == k).then(|| (k, self.leading()))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})x^{k}")?;
        }
        Ok(())
    }
}

/// `num / den`, reduced, with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let lc = den.leading().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc { num: p, den: UPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    /// `c·x^k`, `k` of either sign.
    pub fn monomial(k: i64, c: Rational) -> Self {
        if k >= 0 {
            Self::from_poly(UPoly::monomial(k as usize, c))
        } else {
            Self::new(UPoly::constant(c), UPoly::monomial((-k) as usize, Rational::one())).unwrap()
        }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).unwrap()
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.scale(&-Rational::one()),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    pub fn deriv(&self) -> Self {
        let n = self.num.deriv().mul(&self.den).sub(&self.num.mul(&self.den.deriv()));
        Self::new(n, self.den.mul(&self.den)).unwrap()
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Expansion `Σ c_k x^k` when the denominator is a monomial.
    pub fn as_laurent(&self) -> Option<BTreeMap<i64, Rational>> {
        let (k, c) = self.den.as_monomial()?;
        let inv = c.recip();
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (i as i64 - k as i64, a * &inv))
                .collect(),
        )
    }

    /// Residue of `self·dx` at the finite point `p`.
    pub fn residue_at(&self, p: &Rational) -> Rational {
        // In t = x − p: N(t)/D(t) with D = t^k·D1, D1(0) ≠ 0; the residue is
        // the t^{k−1} coefficient of N/D1.
        let num = self.num.shift(p);
        let den = self.den.shift(p);
        let k = den.low_order();
        if k == 0 {
            return Rational::zero();
        }
        let d1 = UPoly::new(den.coeffs()[k..].to_vec());
        series_coeff(&num, &d1, k - 1)
    }

    /// Residue of `self·dx` at `x = ∞`: minus the `x^{-1}` coefficient of the
    /// expansion in `1/x`.
    pub fn residue_at_infinity(&self) -> Rational {
        let dn = match self.num.degree() {
            Some(d) => d as i64,
            None => return Rational::zero(),
        };
        let dd = self.den.degree().unwrap() as i64;
        // num/den = x^{dn−dd} · Ñ(1/x)/D̃(1/x) with reversed coefficient lists
        let rev = |p: &UPoly| UPoly::new(p.coeffs().iter().rev().cloned().collect());
        let target = dn - dd + 1; // power of 1/x inside the series giving x^{-1}
        if target < 0 {
            return Rational::zero();
        }
        -series_coeff(&rev(&self.num), &rev(&self.den), target as usize)
    }
}

/// Coefficient of `t^k` in the power series `n(t)/d(t)`, `d(0) ≠ 0`.
fn series_coeff(n: &UPoly, d: &UPoly, k: usize) -> Rational {
    let d0inv = d.coeff(0).recip();
    let mut q: Vec<Rational> = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut acc = n.coeff(i);
        for j in 1..=i {
            acc -= d.coeff(j) * &q[i - j];
        }
        q.push(acc * &d0inv);
    }
    q.pop().unwrap()
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] / [{:?}]", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn x() -> UPoly {
        UPoly::monomial(1, int(1))
    }

    #[test]
    fn gcd_and_reduction() {
        let a = x().sub(&UPoly::one()).mul(&x().add(&UPoly::constant(int(2))));
        let b = x().sub(&UPoly::one()).mul(&x());
        assert_eq!(a.gcd(&b), x().sub(&UPoly::one()));
        let f = RatFunc::new(a, b).unwrap();
        assert_eq!(f.den(), &x());
    }

    #[test]
    fn residues() {
        // 1/(x² − 1) at 1 is 1/2
        let f = RatFunc::new(UPoly::one(), x().mul(&x()).sub(&UPoly::one())).unwrap();
        assert_eq!(f.residue_at(&int(1)), rat(1, 2));
        assert_eq!(f.residue_at(&int(-1)), rat(-1, 2));
        assert_eq!(f.residue_at(&int(3)), int(0));
        assert_eq!(f.residue_at_infinity(), int(0));
        let inv = RatFunc::monomial(-1, int(1));
        assert_eq!(inv.residue_at(&int(0)), int(1));
        assert_eq!(inv.residue_at_infinity(), int(-1));
        // double pole: x/(x−2)² has residue 1 at 2
        let g = RatFunc::new(x(), x().sub(&UPoly::constant(int(2))).pow(2)).unwrap();
        assert_eq!(g.residue_at(&int(2)), int(1));
    }

    #[test]
    fn residue_theorem_on_sample() {
        // (x³ + 2)/((x − 1)²(x + 3)x)
        let num = x().pow(3).add(&UPoly::constant(int(2)));
        let den = x()
            .sub(&UPoly::one())
            .pow(2)
            .mul(&x().add(&UPoly::constant(int(3))))
            .mul(&x());
        let f = RatFunc::new(num, den).unwrap();
        let finite: Rational = [int(1), int(-3), int(0)].iter().map(|p| f.residue_at(p)).sum();
        assert_eq!(finite + f.residue_at_infinity(), int(0));
    }

    #[test]
    fn derivative_and_shift() {
        let f = RatFunc::monomial(-2, int(3));
        assert_eq!(f.deriv(), RatFunc::monomial(-3, int(-6)));
        let p = x().pow(2);
        assert_eq!(p.shift(&int(1)), x().pow(2).add(&x().scale(&int(2))).add(&UPoly::one()));
        assert!(RatFunc::new(UPoly::one(), UPoly::zero()).is_err());
    }
}
