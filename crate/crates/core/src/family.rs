//! Bracket rules in normal form and the bracket engine.
//!
//! A rule assigns to each parity class of `(n, m)` a finite list of degree
//! shifts `w` with coefficients affine in `n` and `m`:
//!
//! ```text
//! [v_n, v_m] = Σ_w (a_w·n + b_w·m + d_w) · v_{n+m+w}
//! ```
//!
//! The odd-odd and even-even lists are read for `n < m`, the odd-even list
//! for `n` odd and `m` even; every other order follows from antisymmetry, so
//! no rule can fail to be antisymmetric. Rows for a fixed `n` (the deformed
//! rows of the formal `L_1` families) override the parity rule.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::element::{BasisIndex, LieElement};
use crate::error::{Error, Result};
use crate::poly::ParamPoly;
use crate::rational::{self, Rational};

/// `a·n + b·m + d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Affine {
    pub n: ParamPoly,
    pub m: ParamPoly,
    pub constant: ParamPoly,
}

impl Affine {
    pub fn new(n: ParamPoly, m: ParamPoly, constant: ParamPoly) -> Self {
        Affine { n, m, constant }
    }

    /// `(m - n + d)·p`, the shape of nearly every coefficient in the catalog.
    pub fn m_minus_n(d: i64, p: ParamPoly) -> Self {
        Affine {
            n: -&p,
            m: p.clone(),
            constant: p.scale(&rational::int(d)),
        }
    }

    pub fn constant(c: ParamPoly) -> Self {
        Affine {
            n: ParamPoly::zero(),
            m: ParamPoly::zero(),
            constant: c,
        }
    }

    pub fn eval(&self, n: i64, m: i64) -> ParamPoly {
        let mut out = self.n.scale(&rational::int(n));
        out += &self.m.scale(&rational::int(m));
        out += &self.constant;
        out
    }

    pub fn is_zero(&self) -> bool {
        self.n.is_zero() && self.m.is_zero() && self.constant.is_zero()
    }

    pub fn map(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        Affine {
            n: f(&self.n),
            m: f(&self.m),
            constant: f(&self.constant),
        }
    }

    fn arity(&self) -> usize {
        self.n.arity().max(self.m.arity()).max(self.constant.arity())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTerm {
    pub shift: i64,
    pub coeff: Affine,
}

impl ShiftTerm {
    pub fn new(shift: i64, coeff: Affine) -> Self {
        ShiftTerm { shift, coeff }
    }
}

/// `[v_index, v_m]` for every `m != index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalRow {
    pub index: i64,
    pub terms: Vec<ShiftTerm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParityClass {
    OddOdd,
    EvenEven,
    OddEven,
}

impl ParityClass {
    pub const ALL: [ParityClass; 3] = [ParityClass::OddOdd, ParityClass::EvenEven, ParityClass::OddEven];

    pub fn key(self) -> &'static str {
        match self {
            ParityClass::OddOdd => "odd-odd",
            ParityClass::EvenEven => "even-even",
            ParityClass::OddEven => "odd-even",
        }
    }

    pub fn from_key(key: &str) -> Option<Self> {
        ParityClass::ALL.into_iter().find(|c| c.key() == key)
    }
}

pub(crate) fn is_odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BracketRule {
    pub odd_odd: Vec<ShiftTerm>,
    pub even_even: Vec<ShiftTerm>,
    pub odd_even: Vec<ShiftTerm>,
    pub exceptional: Vec<ExceptionalRow>,
}

impl BracketRule {
    /// The same terms in all three parity classes.
    pub fn uniform(terms: Vec<ShiftTerm>) -> Self {
        BracketRule {
            odd_odd: terms.clone(),
            even_even: terms.clone(),
            odd_even: terms,
            exceptional: Vec::new(),
        }
    }

    pub fn class(&self, class: ParityClass) -> &[ShiftTerm] {
        match class {
            ParityClass::OddOdd => &self.odd_odd,
            ParityClass::EvenEven => &self.even_even,
            ParityClass::OddEven => &self.odd_even,
        }
    }

    pub fn class_mut(&mut self, class: ParityClass) -> &mut Vec<ShiftTerm> {
        match class {
            ParityClass::OddOdd => &mut self.odd_odd,
            ParityClass::EvenEven => &mut self.even_even,
            ParityClass::OddEven => &mut self.odd_even,
        }
    }

    fn all_terms(&self) -> impl Iterator<Item = &ShiftTerm> {
        self.odd_odd
            .iter()
            .chain(&self.even_even)
            .chain(&self.odd_even)
            .chain(self.exceptional.iter().flat_map(|r| r.terms.iter()))
    }

    /// `[v_n, v_m]` as `(output degree, coefficient)` pairs, merged by degree
    /// and without zero coefficients.
    pub fn apply(&self, n: i64, m: i64) -> Vec<(i64, ParamPoly)> {
        let mut acc: BTreeMap<i64, ParamPoly> = BTreeMap::new();
        if n != m {
            let (terms, a, b, sign) = self.resolve(n, m);
            for t in terms {
                let c = t.coeff.eval(a, b);
                if c.is_zero() {
                    continue;
                }
                let c = if sign { c } else { -c };
                *acc.entry(n + m + t.shift).or_default() += &c;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Which stored terms to read, at which `(n, m)`, and whether the result
    /// keeps its sign.
    fn resolve(&self, n: i64, m: i64) -> (&[ShiftTerm], i64, i64, bool) {
        if let Some(row) = self.exceptional.iter().find(|r| r.index == n) {
            return (&row.terms, n, m, true);
        }
        if let Some(row) = self.exceptional.iter().find(|r| r.index == m) {
            return (&row.terms, m, n, false);
        }
        match (is_odd(n), is_odd(m)) {
            (true, true) | (false, false) => {
                let terms = if is_odd(n) { &self.odd_odd } else { &self.even_even };
                if n < m {
                    (terms, n, m, true)
                } else {
                    (terms, m, n, false)
                }
            }
            (true, false) => (&self.odd_even, n, m, true),
            (false, true) => (&self.odd_even, m, n, false),
        }
    }

    pub fn map_coeffs(&self, f: &impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        let map_terms = |ts: &[ShiftTerm]| -> Vec<ShiftTerm> {
            ts.iter()
                .map(|t| ShiftTerm::new(t.shift, t.coeff.map(f)))
                .filter(|t| !t.coeff.is_zero())
                .collect()
        };
        BracketRule {
            odd_odd: map_terms(&self.odd_odd),
            even_even: map_terms(&self.even_even),
            odd_even: map_terms(&self.odd_even),
            exceptional: self
                .exceptional
                .iter()
                .map(|r| ExceptionalRow {
                    index: r.index,
                    terms: map_terms(&r.terms),
                })
                .collect(),
        }
    }

    /// Multiplies every coefficient at shift `w` by `factor(w)`.
    pub fn map_by_shift(&self, factor: &impl Fn(i64) -> ParamPoly) -> Self {
        let map_terms = |ts: &[ShiftTerm]| -> Vec<ShiftTerm> {
            ts.iter()
                .map(|t| {
                    let f = factor(t.shift);
                    ShiftTerm::new(t.shift, t.coeff.map(|c| c * &f))
                })
                .filter(|t| !t.coeff.is_zero())
                .collect()
        };
        BracketRule {
            odd_odd: map_terms(&self.odd_odd),
            even_even: map_terms(&self.even_even),
            odd_even: map_terms(&self.odd_even),
            exceptional: self
                .exceptional
                .iter()
                .map(|r| ExceptionalRow {
                    index: r.index,
                    terms: map_terms(&r.terms),
                })
                .collect(),
        }
    }

    /// Shifts whose coefficient is not identically zero, ascending.
    pub fn shifts(&self) -> Vec<i64> {
        let mut s: Vec<i64> = self
            .all_terms()
            .filter(|t| !t.coeff.is_zero())
            .map(|t| t.shift)
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn arity(&self) -> usize {
        self.all_terms().map(|t| t.coeff.arity()).max().unwrap_or(0)
    }

    /// Coefficient-level equality after dropping zero terms and merging
    /// equal shifts.
    pub fn same_as(&self, other: &BracketRule) -> bool {
        fn canon(ts: &[ShiftTerm]) -> BTreeMap<i64, Affine> {
            let mut out: BTreeMap<i64, Affine> = BTreeMap::new();
            for t in ts {
                let e = out.entry(t.shift).or_default();
                e.n += &t.coeff.n;
                e.m += &t.coeff.m;
                e.constant += &t.coeff.constant;
            }
            out.retain(|_, a| !a.is_zero());
            out
        }
        let rows = |r: &BracketRule| -> BTreeMap<i64, BTreeMap<i64, Affine>> {
            r.exceptional.iter().map(|row| (row.index, canon(&row.terms))).collect()
        };
        ParityClass::ALL
            .into_iter()
            .all(|c| canon(self.class(c)) == canon(other.class(c)))
            && rows(self) == rows(other)
    }
}

/// One diagonal `n + m = total` of a central cocycle:
/// `γ(v_n, v_m) = Σ_i coeffs[i]·m^i` for `n < m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalTerm {
    pub total: i64,
    pub coeffs: Vec<ParamPoly>,
}

/// Scalar 2-cocycle attached to the central element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralRule {
    /// Sum of polynomial diagonals, read for `n < m`.
    Diagonal(Vec<DiagonalTerm>),
    /// Explicit values for `n < m` inside `[lo, hi]`; absent pairs are zero.
    Table {
        entries: BTreeMap<(i64, i64), ParamPoly>,
        lo: i64,
        hi: i64,
    },
}

impl CentralRule {
    pub fn value(&self, n: i64, m: i64) -> Result<ParamPoly> {
        if n == m {
            return Ok(ParamPoly::zero());
        }
        if n > m {
            return Ok(-self.value(m, n)?);
        }
        match self {
            CentralRule::Diagonal(terms) => {
                let mut out = ParamPoly::zero();
                for t in terms.iter().filter(|t| t.total == n + m) {
                    let mut power = Rational::from_integer(1.into());
                    for c in &t.coeffs {
                        out += &c.scale(&power);
                        power *= rational::int(m);
                    }
                }
                Ok(out)
            }
            CentralRule::Table { entries, lo, hi } => {
                if n < *lo || m > *hi {
                    return Err(Error::CentralOutOfTable(n, m));
                }
                Ok(entries.get(&(n, m)).cloned().unwrap_or_default())
            }
        }
    }

    pub fn map_coeffs(&self, f: &impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        match self {
            CentralRule::Diagonal(terms) => CentralRule::Diagonal(
                terms
                    .iter()
                    .map(|t| DiagonalTerm {
                        total: t.total,
                        coeffs: t.coeffs.iter().map(f).collect(),
                    })
                    .collect(),
            ),
            CentralRule::Table { entries, lo, hi } => CentralRule::Table {
                entries: entries
                    .iter()
                    .map(|(k, v)| (*k, f(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
                lo: *lo,
                hi: *hi,
            },
        }
    }

    fn arity(&self) -> usize {
        match self {
            CentralRule::Diagonal(terms) => terms
                .iter()
                .flat_map(|t| t.coeffs.iter())
                .map(ParamPoly::arity)
                .max()
                .unwrap_or(0),
            CentralRule::Table { entries, .. } => entries.values().map(ParamPoly::arity).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisDomain {
    All,
    AtLeast(i64),
}

impl BasisDomain {
    pub fn contains(self, n: i64) -> bool {
        match self {
            BasisDomain::All => true,
            BasisDomain::AtLeast(b) => n >= b,
        }
    }

    pub fn lower_bound(self) -> Option<i64> {
        match self {
            BasisDomain::All => None,
            BasisDomain::AtLeast(b) => Some(b),
        }
    }
}

/// Output degrees of `[v_n, v_m]` lie in `[n + m + lower, n + m + upper]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradingBounds {
    pub lower: i64,
    pub upper: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub params: Vec<String>,
    pub domain: BasisDomain,
    pub rule: BracketRule,
    pub central: Option<CentralRule>,
}

impl FamilySpec {
    pub fn new(name: &str, params: &[&str], domain: BasisDomain, rule: BracketRule) -> Self {
        FamilySpec {
            name: name.to_string(),
            params: params.iter().map(|p| p.to_string()).collect(),
            domain,
            rule,
            central: None,
        }
    }

    pub fn with_central(mut self, central: CentralRule) -> Self {
        self.central = Some(central);
        self
    }

    pub fn param_index(&self, name: &str) -> Result<usize> {
        self.params
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }

    pub fn is_parameter_free(&self) -> bool {
        self.rule.arity() == 0 && self.central.as_ref().map_or(0, CentralRule::arity) == 0
    }

    fn check_index(&self, n: i64) -> Result<()> {
        match self.domain {
            BasisDomain::AtLeast(bound) if n < bound => Err(Error::OutOfDomainIndex { index: n, bound }),
            _ => Ok(()),
        }
    }

    fn check_params(&self, x: &LieElement) -> Result<()> {
        let arity = x.arity();
        if arity > self.params.len() {
            return Err(Error::ParameterMismatch {
                index: arity - 1,
                available: self.params.len(),
            });
        }
        Ok(())
    }

    /// `[v_n, v_m]`, including the central term when the family has one.
    pub fn bracket_basis(&self, n: i64, m: i64) -> Result<LieElement> {
        self.check_index(n)?;
        self.check_index(m)?;
        let mut out = LieElement::zero();
        for (deg, c) in self.rule.apply(n, m) {
            self.check_index(deg)?;
            out.add_term(BasisIndex::Vector(deg), c);
        }
        if let Some(central) = &self.central {
            out.add_term(BasisIndex::Central, central.value(n, m)?);
        }
        Ok(out)
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check_params(x)?;
        self.check_params(y)?;
        let mut out = LieElement::zero();
        for (i, a) in x.iter() {
            let BasisIndex::Vector(n) = *i else { continue };
            for (j, b) in y.iter() {
                let BasisIndex::Vector(m) = *j else { continue };
                let prod = a * b;
                out.add_scaled(&self.bracket_basis(n, m)?, &prod);
            }
        }
        Ok(out)
    }

    pub fn grading_bounds(&self) -> GradingBounds {
        let shifts = self.rule.shifts();
        GradingBounds {
            lower: shifts.first().copied().unwrap_or(0),
            upper: shifts.last().copied().unwrap_or(0),
        }
    }

    /// Substitutes the given parameters and keeps the rest (renumbered in
    /// their original order).
    pub fn substitute(&self, assignment: &[(&str, Rational)]) -> Result<FamilySpec> {
        let mut values: Vec<Option<Rational>> = alloc::vec![None; self.params.len()];
        for (name, v) in assignment {
            values[self.param_index(name)?] = Some(v.clone());
        }
        let mut map = Vec::with_capacity(self.params.len());
        let mut remaining = Vec::new();
        for (i, v) in values.iter().enumerate() {
            if v.is_none() {
                map.push(Some(remaining.len()));
                remaining.push(self.params[i].clone());
            } else {
                map.push(None);
            }
        }
        let f = |p: &ParamPoly| p.eval_partial(&values).reindex(&map);
        Ok(FamilySpec {
            name: self.name.clone(),
            params: remaining,
            domain: self.domain,
            rule: self.rule.map_coeffs(&f),
            central: self.central.as_ref().map(|c| c.map_coeffs(&f)),
        })
    }

    /// Evaluates every parameter; the result is parameter-free.
    pub fn specialize(&self, assignment: &[(&str, Rational)]) -> Result<FamilySpec> {
        for p in &self.params {
            if !assignment.iter().any(|(name, _)| name == p) {
                return Err(Error::MissingParameter(p.clone()));
            }
        }
        self.substitute(assignment)
    }

    /// Same family with all parameters evaluated positionally.
    pub fn specialize_values(&self, values: &[Rational]) -> Result<FamilySpec> {
        if values.len() < self.params.len() {
            return Err(Error::MissingParameter(self.params[values.len()].clone()));
        }
        let names: Vec<String> = self.params.clone();
        let assignment: Vec<(&str, Rational)> = names.iter().map(String::as_str).zip(values.iter().cloned()).collect();
        self.specialize(&assignment)
    }

    /// Rule- and central-level equality, ignoring names.
    pub fn same_structure(&self, other: &FamilySpec) -> bool {
        self.domain == other.domain && self.rule.same_as(&other.rule) && self.central == other.central
    }

    /// Multiplies every coefficient at shift `w` by `factor(w)`.
    pub fn map_by_shift(&self, factor: &impl Fn(i64) -> ParamPoly) -> FamilySpec {
        FamilySpec {
            rule: self.rule.map_by_shift(factor),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    fn witt_rule() -> BracketRule {
        BracketRule::uniform(vec![ShiftTerm::new(0, Affine::m_minus_n(0, ParamPoly::one()))])
    }

    #[test]
    fn antisymmetric_completion() {
        let mut rule = witt_rule();
        // an odd-even rule that is not antisymmetric on its own
        rule.odd_even = vec![ShiftTerm::new(-2, Affine::constant(ParamPoly::one()))];
        for n in -5..5 {
            for m in -5..5 {
                let a = rule.apply(n, m);
                let b: Vec<(i64, ParamPoly)> = rule.apply(m, n).into_iter().map(|(d, c)| (d, -c)).collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn lower_bound_violation_is_an_error() {
        let mut rule = witt_rule();
        rule.odd_odd.push(ShiftTerm::new(-4, Affine::constant(ParamPoly::one())));
        let fam = FamilySpec::new("bad", &[], BasisDomain::AtLeast(1), rule);
        assert_eq!(fam.bracket_basis(1, 3), Err(Error::OutOfDomainIndex { index: 0, bound: 1 }));
        assert!(fam.bracket_basis(3, 5).is_ok());
        assert!(fam.bracket_basis(0, 3).is_err());
    }

    #[test]
    fn parameter_mismatch() {
        let fam = FamilySpec::new("w", &[], BasisDomain::All, witt_rule());
        let x = LieElement::term(BasisIndex::Vector(1), ParamPoly::var(0));
        assert!(matches!(
            fam.bracket(&x, &LieElement::basis(2)),
            Err(Error::ParameterMismatch { .. })
        ));
    }

    #[test]
    fn missing_parameter() {
        let fam = FamilySpec::new("p", &["a", "b"], BasisDomain::All, witt_rule());
        assert_eq!(
            fam.specialize(&[("a", int(1))]).unwrap_err(),
            Error::MissingParameter("b".into())
        );
    }

    #[test]
    fn central_table_bounds() {
        let mut entries = BTreeMap::new();
        entries.insert((-1, 1), ParamPoly::from_i64(5));
        let c = CentralRule::Table { entries, lo: -2, hi: 2 };
        assert_eq!(c.value(1, -1).unwrap(), ParamPoly::from_i64(-5));
        assert_eq!(c.value(0, 2).unwrap(), ParamPoly::zero());
        assert_eq!(c.value(0, 3), Err(Error::CentralOutOfTable(0, 3)));
    }
}
