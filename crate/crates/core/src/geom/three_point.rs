//! Genus-zero functions regular away from `{α, −α, ∞}`, symbolic in `α²`.
//!
//! With `u = z² − α²` every such function is uniquely `a(u) + b(u)·z` for
//! Laurent polynomials `a, b` in `u`, and `z² = u + α²` closes the
//! multiplication. Derivatives are taken in `z`: `du/dz = 2z`.

use alloc::collections::BTreeMap;

use crate::poly::ParamPoly;

use super::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThreePointFunction {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    alpha2: ParamPoly,
}

impl ThreePointFunction {
    pub fn new(a: LaurentPoly, b: LaurentPoly, alpha2: ParamPoly) -> Self {
        ThreePointFunction { a, b, alpha2 }
    }

    pub fn alpha2(&self) -> &ParamPoly {
        &self.alpha2
    }

    /// `z² = u + α²` as a Laurent polynomial in `u`.
    fn z_squared(&self) -> LaurentPoly {
        LaurentPoly::power(1).add(&LaurentPoly::monomial(0, self.alpha2.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.a.add(&o.a), self.b.add(&o.b), self.alpha2.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.a.sub(&o.a), self.b.sub(&o.b), self.alpha2.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(&self.z_squared()));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        Self::new(a, b, self.alpha2.clone())
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Self::new(self.a.scale(c), self.b.scale(c), self.alpha2.clone())
    }

    /// `d/dz (a + b z) = b + 2(u + α²) b' + 2 a' z`
    pub fn deriv(&self) -> Self {
        let two = ParamPoly::from_i64(2);
        let a = self.b.add(&self.z_squared().mul(&self.b.deriv()).scale(&two));
        let b = self.a.deriv().scale(&two);
        Self::new(a, b, self.alpha2.clone())
    }

    pub fn coordinates(&self) -> BTreeMap<(u8, i64), ParamPoly> {
        let mut out = BTreeMap::new();
        for (part, p) in [(0u8, &self.a), (1u8, &self.b)] {
            for (k, c) in p.terms() {
                out.insert((part, *k), c.clone());
            }
        }
        out
    }

    /// Sum of the residues of `self·dz` at `z = ±α`, i.e. minus the residue at
    /// infinity. Expanding `u^k z = z^{2k+1}(1 − α²/z²)^k` at infinity, a
    /// `z^{-1}` term needs the binomial index `k + 1 ≥ 0`, which is nonzero
    /// only for `k = −1`. The `a(u)` part has only even powers of `z`.
    pub fn residue_sum_finite(&self) -> ParamPoly {
        self.b.coeff(-1)
    }
}

impl ThreePointFunction {
    /// The same function as a rational function of `z`, at a rational value
    /// of `α²` (parameter `x0`).
    pub fn to_ratfunc(&self, alpha2: &crate::Rational) -> crate::Result<super::ratfunc::RatFunc> {
        use super::ratfunc::{RatFunc, UPoly};
        use crate::rational::int;
        let u = UPoly::new(alloc::vec![-alpha2.clone(), int(0), int(1)]);
        let u_pow = |k: i64| -> crate::Result<RatFunc> {
            if k >= 0 {
                Ok(RatFunc::from_poly(u.pow(k as u32)))
            } else {
                RatFunc::new(UPoly::one(), u.pow((-k) as u32))
            }
        };
        let at = [Some(alpha2.clone())];
        let constant = |c: &ParamPoly| c.eval_partial(&at).as_constant().ok_or(crate::Error::NonRational);
        let mut out = RatFunc::zero();
        for (k, c) in self.a.terms() {
            out = out.add(&u_pow(*k)?.scale(&constant(c)?));
        }
        let z = RatFunc::monomial(1, int(1));
        for (k, c) in self.b.terms() {
            out = out.add(&u_pow(*k)?.mul(&z).scale(&constant(c)?));
        }
        Ok(out)
    }
}
