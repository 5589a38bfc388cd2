//! Function field of `Y² = f(x)`, elements `a + b·Y` with `a, b ∈ ℚ(x)`.
//!
//! Used with `x = X − e1` so that the marked point `(e1, 0)` sits at `x = 0`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;

use crate::error::{Error, Result};
use crate::poly::ParamPoly;
use crate::rational::{self, Rational};

use super::ratfunc::{RatFunc, UPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveFunction {
    pub a: RatFunc,
    pub b: RatFunc,
    f: Rc<UPoly>,
}

impl CurveFunction {
    pub fn new(a: RatFunc, b: RatFunc, f: Rc<UPoly>) -> Self {
        CurveFunction { a, b, f }
    }

    pub fn curve(&self) -> &UPoly {
        &self.f
    }

    pub fn zero(f: Rc<UPoly>) -> Self {
        CurveFunction::new(RatFunc::zero(), RatFunc::zero(), f)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        CurveFunction::new(self.a.add(&o.a), self.b.add(&o.b), self.f.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        CurveFunction::new(self.a.sub(&o.a), self.b.sub(&o.b), self.f.clone())
    }

    /// Reduces `Y²` to `f` immediately.
    pub fn mul(&self, o: &Self) -> Self {
        let f = RatFunc::from_poly((*self.f).clone());
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(&f));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        CurveFunction::new(a, b, self.f.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CurveFunction::new(self.a.scale(c), self.b.scale(c), self.f.clone())
    }

    /// `d/dx`, using `Y' = f'/(2Y) = f'·Y/(2f)`.
    pub fn deriv(&self) -> Result<Self> {
        let f = RatFunc::from_poly((*self.f).clone());
        let fp = RatFunc::from_poly(self.f.deriv());
        let y_log = fp.div(&f.scale(&rational::int(2)))?;
        let b = self.b.deriv().add(&self.b.mul(&y_log));
        Ok(CurveFunction::new(self.a.deriv(), b, self.f.clone()))
    }

    /// Coordinates `(0, k)` for `x^k` and `(1, k)` for `x^k·Y`; fails unless
    /// both parts are Laurent polynomials in `x`.
    pub fn coordinates(&self) -> Result<BTreeMap<(u8, i64), ParamPoly>> {
        let mut out = BTreeMap::new();
        for (part, r) in [(0u8, &self.a), (1u8, &self.b)] {
            let lp = r
                .as_laurent()
                .ok_or_else(|| Error::NotInAlgebra(format!("denominator {:?} is not a power of x", r.den())))?;
            for (k, c) in lp {
                out.insert((part, k), ParamPoly::constant(c));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn curve() -> Rc<UPoly> {
        // 4x(x + 1)(x + 3)
        let x = UPoly::monomial(1, int(1));
        Rc::new(
            x.mul(&x.add(&UPoly::one()))
                .mul(&x.add(&UPoly::constant(int(3))))
                .scale(&int(4)),
        )
    }

    #[test]
    fn y_squared_reduces() {
        let f = curve();
        let y = CurveFunction::new(RatFunc::zero(), RatFunc::constant(int(1)), f.clone());
        let yy = y.mul(&y);
        assert_eq!(yy.a, RatFunc::from_poly((*f).clone()));
        assert!(yy.b.is_zero());
    }

    #[test]
    fn derivative_of_y_squared_matches_f_prime() {
        let f = curve();
        let y = CurveFunction::new(RatFunc::zero(), RatFunc::constant(int(1)), f.clone());
        let dy = y.deriv().unwrap();
        // (Y²)' = 2 Y Y'
        let lhs = y.mul(&y).deriv().unwrap();
        let rhs = y.mul(&dy).scale(&int(2));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.a, RatFunc::from_poly(f.deriv()));
    }
}
