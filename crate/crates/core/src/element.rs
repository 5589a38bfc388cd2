use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::ParamPoly;
use crate::rational::Rational;

/// A basis vector `v_n` or the central element `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisIndex {
    Vector(i64),
    Central,
}

/// Finite linear combination of basis vectors with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    components: BTreeMap<BasisIndex, ParamPoly>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(n: i64) -> Self {
        Self::term(BasisIndex::Vector(n), ParamPoly::one())
    }

    pub fn central() -> Self {
        Self::term(BasisIndex::Central, ParamPoly::one())
    }

    pub fn term(index: BasisIndex, coeff: ParamPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(index, coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisIndex, ParamPoly)>) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    /// Shorthand for `Σ c_n v_n` with rational coefficients.
    pub fn from_vectors(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(n, c)| (BasisIndex::Vector(n), ParamPoly::constant(c))),
        )
    }

    pub fn add_term(&mut self, index: BasisIndex, coeff: ParamPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.components.entry(index).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.components.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement, factor: &ParamPoly) {
        for (i, c) in &other.components {
            self.add_term(*i, c * factor);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn coeff(&self, index: BasisIndex) -> ParamPoly {
        self.components.get(&index).cloned().unwrap_or_default()
    }

    pub fn vector_coeff(&self, n: i64) -> ParamPoly {
        self.coeff(BasisIndex::Vector(n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &ParamPoly)> {
        self.components.iter()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Degrees of the vector components, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.components
            .keys()
            .filter_map(|i| match i {
                BasisIndex::Vector(n) => Some(*n),
                BasisIndex::Central => None,
            })
            .collect()
    }

    pub fn scale(&self, factor: &ParamPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&ParamPoly::from_i64(-1))
    }

    pub fn add(&self, other: &LieElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &ParamPoly::one());
        out
    }

    pub fn sub(&self, other: &LieElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &ParamPoly::from_i64(-1));
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        Self::from_terms(self.components.iter().map(|(i, c)| (*i, f(c))))
    }

    pub fn eval_partial(&self, values: &[Option<Rational>]) -> Self {
        self.map_coeffs(|c| c.eval_partial(values))
    }

    /// One past the largest parameter index used by any coefficient.
    pub fn arity(&self) -> usize {
        self.components.values().map(ParamPoly::arity).max().unwrap_or(0)
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match i {
                BasisIndex::Vector(n) => write!(f, "({c:?})·v[{n}]")?,
                BasisIndex::Central => write!(f, "({c:?})·c")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn cancellation_removes_components() {
        let a = LieElement::basis(3);
        let b = a.sub(&LieElement::basis(3));
        assert!(b.is_zero());
        assert_eq!(b.len(), 0);
    }

    #[test]
    fn scalar_multiplication_distributes() {
        let x = LieElement::from_vectors([(1, int(2)), (4, int(-1))]);
        let y = LieElement::from_vectors([(4, int(1)), (5, int(3))]);
        let k = ParamPoly::var(0);
        assert_eq!(x.add(&y).scale(&k), x.scale(&k).add(&y.scale(&k)));
        assert_eq!(x.add(&y).degrees(), alloc::vec![1, 5]);
    }
}
