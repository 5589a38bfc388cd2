use alloc::collections::BTreeMap;
use core::fmt;

use crate::poly::ParamPoly;
use crate::rational;

/// Finite Laurent polynomial `Σ c_k t^k` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, ParamPoly>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, ParamPoly::one())
    }

    pub fn monomial(exp: i64, c: ParamPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `t^exp`
    pub fn power(exp: i64) -> Self {
        Self::monomial(exp, ParamPoly::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, ParamPoly)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> ParamPoly {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &ParamPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, v)| (*e, v * c)))
    }

    /// Non-negative powers only.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// `d/dt`
    pub fn deriv(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(e, c)| (e - 1, c.scale(&rational::int(*e)))),
        )
    }

    /// Coefficient of `t^{-1}`: the residue at `t = 0`.
    pub fn residue_at_zero(&self) -> ParamPoly {
        self.coeff(-1)
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})t^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..4, -3i64..3), 0..5).prop_map(|t| {
            LaurentPoly::from_terms(t.into_iter().map(|(e, c)| (e, ParamPoly::from_i64(c))))
        })
    }

    #[test]
    fn derivative_of_inverse_power() {
        let p = LaurentPoly::power(-2);
        assert_eq!(p.deriv(), LaurentPoly::monomial(-3, ParamPoly::from_i64(-2)));
        assert_eq!(LaurentPoly::power(-1).residue_at_zero(), ParamPoly::one());
        assert!(LaurentPoly::power(3).residue_at_zero().is_zero());
    }

    proptest! {
        #[test]
        fn ring_and_leibniz(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b).deriv(), a.deriv().mul(&b).add(&a.mul(&b.deriv())));
        }
    }
}
