//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are positional (`x0, x1, ...`); their names live with whoever
//! owns the parameter list (a [`FamilySpec`](crate::FamilySpec)). Exponent
//! vectors are stored with trailing zeros trimmed, so a constant has the
//! empty vector and polynomials built against shorter parameter lists still
//! compare equal.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
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

    pub fn var(index: usize, power: u32) -> Self {
        let mut exps = alloc::vec![0; index + 1];
        exps[index] = power;
        Monomial::new(exps)
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of positions that can be nonzero.
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let exps = (0..len).map(|i| self.exponent(i) + other.exponent(i)).collect();
        Monomial::new(exps)
    }
}

#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(rational::int(c))
    }

    /// The variable `x_index`.
    pub fn var(index: usize) -> Self {
        Self::monomial(Monomial::var(index, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// One past the largest variable index that occurs.
    pub fn arity(&self) -> usize {
        self.terms.keys().map(Monomial::arity).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `values[i]` for every `x_i` that has one; other variables
    /// stay where they are.
    pub fn eval_partial(&self, values: &[Option<Rational>]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.0.clone();
            for (i, e) in exps.iter_mut().enumerate() {
                if let Some(Some(v)) = values.get(i) {
                    coeff *= num_traits::pow(v.clone(), *e as usize);
                    *e = 0;
                }
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        out
    }

    /// Full evaluation; variables beyond `values` are treated as missing and
    /// make the result `None`.
    pub fn eval(&self, values: &[Rational]) -> Option<Rational> {
        let opts: Vec<Option<Rational>> = values.iter().cloned().map(Some).collect();
        self.eval_partial(&opts).as_constant()
    }

    /// Moves `x_i` to `x_{map[i]}`. Every occurring variable must be mapped.
    pub fn reindex(&self, map: &[Option<usize>]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let target = map
                    .get(i)
                    .copied()
                    .flatten()
                    .expect("reindex: occurring variable has no target");
                if exps.len() <= target {
                    exps.resize(target + 1, 0);
                }
                exps[target] += e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Coefficient of `x_var^power`, as a polynomial in which `x_var` no longer
    /// occurs.
    pub fn coeff_of_power(&self, var: usize, power: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.exponent(var) == power {
                let mut exps = m.0.clone();
                if var < exps.len() {
                    exps[var] = 0;
                }
                out.add_term(Monomial::new(exps), c.clone());
            }
        }
        out
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Named { poly: self, names }
    }
}

struct Named<'a> {
    poly: &'a ParamPoly,
    names: &'a [String],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let negative = *c < Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let is_unit = m.0.is_empty();
            if !abs.is_one() || is_unit {
                write!(f, "{abs}")?;
                if !is_unit {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                match self.names.get(i) {
                    Some(name) => write!(f, "{name}")?,
                    None => write!(f, "x{i}")?,
                }
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(c: i64) -> Self {
        ParamPoly::from_i64(c)
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: &ParamPoly) -> ParamPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<ParamPoly> for &ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn e1() -> ParamPoly {
        ParamPoly::var(0)
    }
    fn e2() -> ParamPoly {
        ParamPoly::var(1)
    }

    #[test]
    fn no_stored_zeros() {
        let p = &e1() - &e1();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(ParamPoly::from_i64(0), ParamPoly::zero());
    }

    #[test]
    fn trailing_zero_exponents_are_trimmed() {
        let a = ParamPoly::monomial(Monomial::new(vec![2, 0, 0]), int(1));
        let b = ParamPoly::monomial(Monomial::new(vec![2]), int(1));
        assert_eq!(a, b);
    }

    #[test]
    fn elliptic_factor_expands() {
        // (e1 - e2)(e1 - e3) with e3 = -e1 - e2 is (e1 - e2)(2 e1 + e2).
        let e3 = -(&e1() + &e2());
        let lhs = (&e1() - &e2()) * (&e1() - &e3);
        let rhs = (&e1() - &e2()) * (&e1().scale(&int(2)) + &e2());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.total_degree(), 2);
    }

    #[test]
    fn partial_evaluation_and_reindex() {
        let p = &(&e1() * &e2()) + &e2().scale(&int(3));
        let q = p.eval_partial(&[Some(int(2)), None]);
        assert_eq!(q, e2().scale(&int(5)));
        let moved = q.reindex(&[None, Some(0)]);
        assert_eq!(moved, e1().scale(&int(5)));
        assert_eq!(p.eval(&[int(2), rat(1, 5)]), Some(int(1)));
    }

    #[test]
    fn coefficient_extraction() {
        let p = &e1().pow(2).scale(&int(7)) + &(&e1() * &e2());
        assert_eq!(p.coeff_of_power(0, 2), ParamPoly::from_i64(7));
        assert_eq!(p.coeff_of_power(0, 1), e2());
        assert_eq!(p.coeff_of_power(0, 0), ParamPoly::zero());
    }

    #[test]
    fn display_uses_names() {
        let p = &e1().scale(&int(3)) - &ParamPoly::from_i64(1);
        let names = vec!["e1".to_string()];
        assert_eq!(p.display_with(&names).to_string(), "3*e1 - 1");
    }

    fn arb_poly() -> impl Strategy<Value = ParamPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -5i64..5, 1i64..4), 0..5).prop_map(|terms| {
            ParamPoly::from_terms(
                terms
                    .into_iter()
                    .map(|((a, b), p, q)| (Monomial::new(vec![a, b]), rat(p, q))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a * &b).terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(), x in -4i64..4, y in -4i64..4) {
            let at = [int(x), int(y)];
            let prod = (&a * &b).eval(&at).unwrap();
            prop_assert_eq!(prod, a.eval(&at).unwrap() * b.eval(&at).unwrap());
        }
    }
}
