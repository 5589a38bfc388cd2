//! Vector-field realizations of the families, used as an independent oracle.
//!
//! Each realized basis element `V_n = g_n(z) d/dz` lives in an explicit
//! differential ring. Brackets are computed as `(g h' − h g') d/dz` and then
//! re-expanded in the realized basis by an exact linear solve over the
//! candidate indices `[n+m−4, n+m]`.

pub mod curve;
pub mod laurent;
pub mod ratfunc;
pub mod three_point;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::element::{BasisIndex, LieElement};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::jacobi::{Certificate, Verdict};
use crate::linalg::{self, PolySolveOutcome};
use crate::poly::ParamPoly;
use crate::rational::{self, Rational};

use curve::CurveFunction;
use laurent::LaurentPoly;
use ratfunc::{RatFunc, UPoly};
use three_point::ThreePointFunction;

/// `(part, exponent) ↦ coefficient`.
pub type Coords = BTreeMap<(u8, i64), ParamPoly>;

/// A commutative differential ring with coordinates in a fixed monomial basis.
pub trait Coefficient: Clone {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn derivative(&self) -> Result<Self>;
    fn vanishes(&self) -> bool;
    /// Coordinates `(part, exponent) ↦ coefficient`.
    fn coords(&self) -> Result<Coords>;
}

impl Coefficient for LaurentPoly {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn derivative(&self) -> Result<Self> {
        Ok(self.deriv())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn coords(&self) -> Result<Coords> {
        Ok(self.terms().map(|(e, c)| ((0, *e), c.clone())).collect())
    }
}

impl Coefficient for ThreePointFunction {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn derivative(&self) -> Result<Self> {
        Ok(self.deriv())
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn coords(&self) -> Result<Coords> {
        Ok(self.coordinates())
    }
}

impl Coefficient for CurveFunction {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn derivative(&self) -> Result<Self> {
        self.deriv()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn coords(&self) -> Result<Coords> {
        self.coordinates()
    }
}

/// `g d/dz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField<R> {
    pub coeff: R,
}

impl<R: Coefficient> VectorField<R> {
    pub fn new(coeff: R) -> Self {
        VectorField { coeff }
    }
}

/// `[g d/dz, h d/dz] = (g h' − h g') d/dz`.
pub fn vf_bracket<R: Coefficient>(e: &VectorField<R>, f: &VectorField<R>) -> Result<VectorField<R>> {
    let lhs = e.coeff.times(&f.coeff.derivative()?);
    let rhs = f.coeff.times(&e.coeff.derivative()?);
    Ok(VectorField::new(lhs.minus(&rhs)))
}

/// The geometric models with an explicit basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// `l_n = z^{n+1} d/dz`.
    Witt,
    /// `V_{2k} = z u^k d/dz`, `V_{2k+1} = u^{k+1} d/dz`, `u = z² − α²`.
    ThreePoint,
    /// `V_{2k} = l_{2k} − 2α² l_{2k−2} + α⁴ l_{2k−4}`,
    /// `V_{2k+1} = l_{2k+1} − α² l_{2k−1}`.
    Nodal,
    /// `V_{2k+1} = x^k Y d/dX`, `V_{2k} = ½ f x^{k−2} d/dX`, `x = X − e1`.
    Elliptic,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Witt => "witt",
            Model::ThreePoint => "three-point",
            Model::Nodal => "nodal",
            Model::Elliptic => "elliptic",
        }
    }

    /// The model realizing a catalog family, by name.
    pub fn for_family(name: &str) -> Result<Model> {
        match name {
            "witt" | "virasoro" => Ok(Model::Witt),
            "three-point" | "w1" => Ok(Model::ThreePoint),
            "nodal" => Ok(Model::Nodal),
            "elliptic" => Ok(Model::Elliptic),
            _ => Err(Error::UnsupportedFamily(name.to_string())),
        }
    }

    /// `(R, S)`: the bracket of `V_n, V_m` lies in `[n+m+R, n+m+S]`.
    pub fn shift_range(self) -> (i64, i64) {
        match self {
            Model::Witt => (0, 0),
            Model::ThreePoint => (-2, 0),
            Model::Nodal | Model::Elliptic => (-4, 0),
        }
    }

    pub fn parameter_count(self) -> usize {
        match self {
            Model::Witt => 0,
            Model::ThreePoint | Model::Nodal => 1,
            Model::Elliptic => 2,
        }
    }
}

/// `l_n = z^{n+1} d/dz`.
pub fn witt_field(n: i64) -> VectorField<LaurentPoly> {
    VectorField::new(LaurentPoly::power(n + 1))
}

/// Nodal basis in the Witt realization, with `alpha2` any polynomial.
pub fn nodal_field(n: i64, alpha2: &ParamPoly) -> VectorField<LaurentPoly> {
    // z^{2k-3}(z² − α²)² for n = 2k, z^{2k}(z² − α²) for n = 2k+1
    let u = LaurentPoly::from_terms([(2, ParamPoly::one()), (0, -alpha2)]);
    let g = if n.rem_euclid(2) == 0 {
        LaurentPoly::power(n - 3).mul(&u.pow(2))
    } else {
        LaurentPoly::power(n - 1).mul(&u)
    };
    VectorField::new(g)
}

pub fn three_point_field(n: i64, alpha2: &ParamPoly) -> VectorField<ThreePointFunction> {
    let k = n.div_euclid(2);
    let (a, b) = if n.rem_euclid(2) == 0 {
        (LaurentPoly::zero(), LaurentPoly::power(k))
    } else {
        (LaurentPoly::power(k + 1), LaurentPoly::zero())
    };
    VectorField::new(ThreePointFunction::new(a, b, alpha2.clone()))
}

/// `f(x) = 4x(x + e1 − e2)(x + e1 − e3)` for `x = X − e1`, `e3 = −e1 − e2`.
pub fn elliptic_curve(e1: &Rational, e2: &Rational) -> UPoly {
    let e3 = -(e1 + e2);
    let x = UPoly::monomial(1, rational::int(1));
    x.mul(&x.add(&UPoly::constant(e1 - e2)))
        .mul(&x.add(&UPoly::constant(e1 - &e3)))
        .scale(&rational::int(4))
}

pub fn elliptic_field(n: i64, f: &Rc<UPoly>) -> VectorField<CurveFunction> {
    let k = n.div_euclid(2);
    let (a, b) = if n.rem_euclid(2) == 1 {
        (RatFunc::zero(), RatFunc::monomial(k, rational::int(1)))
    } else {
        let half_f = RatFunc::from_poly((**f).clone()).scale(&rational::rat(1, 2));
        (half_f.mul(&RatFunc::monomial(k - 2, rational::int(1))), RatFunc::zero())
    };
    VectorField::new(CurveFunction::new(a, b, f.clone()))
}

/// One `(n, m)` pair at one sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairStatus {
    pub n: i64,
    pub m: i64,
    /// Index into the report's samples; `None` for a symbolic check.
    pub sample: Option<usize>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryWitness {
    pub n: i64,
    pub m: i64,
    pub sample: Option<usize>,
    /// The family's bracket (vector part).
    pub expected: LieElement,
    /// The geometric bracket re-expanded, or `None` if it left the span of
    /// the candidate basis.
    pub found: Option<LieElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryReport {
    pub family: String,
    pub model: Model,
    pub window: (i64, i64),
    pub samples: Vec<Vec<Rational>>,
    pub pairs: Vec<PairStatus>,
    pub verdict: Verdict<GeometryWitness>,
}

/// Re-expands `field` in the basis `realize(j)`, `j ∈ [lo, hi]`.
fn reexpand<R: Coefficient>(
    field: &VectorField<R>,
    basis: &BTreeMap<i64, VectorField<R>>,
    lo: i64,
    hi: i64,
    pair: (i64, i64),
) -> Result<Option<LieElement>> {
    let target = field.coeff.coords()?;
    let cands: Vec<(i64, Coords)> = (lo..=hi)
        .map(|j| Ok((j, basis[&j].coeff.coords()?)))
        .collect::<Result<_>>()?;
    let keys: BTreeSet<(u8, i64)> = target
        .keys()
        .chain(cands.iter().flat_map(|(_, c)| c.keys()))
        .copied()
        .collect();
    let a: Vec<Vec<ParamPoly>> = keys
        .iter()
        .map(|k| cands.iter().map(|(_, c)| c.get(k).cloned().unwrap_or_default()).collect())
        .collect();
    let b: Vec<ParamPoly> = keys.iter().map(|k| target.get(k).cloned().unwrap_or_default()).collect();
    match linalg::solve_unit_pivot(&a, &b)? {
        PolySolveOutcome::Unique(x) => Ok(Some(LieElement::from_terms(
            cands.iter().zip(x).map(|((j, _), c)| (BasisIndex::Vector(*j), c)),
        ))),
        PolySolveOutcome::Underdetermined(_) => Err(Error::NonUniqueExpansion(pair.0, pair.1)),
        PolySolveOutcome::Inconsistent(_) => Ok(None),
    }
}

fn vector_part(el: &LieElement) -> LieElement {
    LieElement::from_terms(
        el.iter()
            .filter(|(i, _)| matches!(i, BasisIndex::Vector(_)))
            .map(|(i, c)| (*i, c.clone())),
    )
}

/// Checks every `n < m` in `[lo, hi]` for one realization.
fn check_pairs<R: Coefficient>(
    family: &FamilySpec,
    model: Model,
    lo: i64,
    hi: i64,
    sample: Option<usize>,
    realize: &dyn Fn(i64) -> VectorField<R>,
    pairs: &mut Vec<PairStatus>,
) -> Result<Option<GeometryWitness>> {
    let (r, s) = model.shift_range();
    let idx: Vec<i64> = (lo..=hi).filter(|&n| family.domain.contains(n)).collect();
    let (first, last) = match (idx.first(), idx.last()) {
        (Some(a), Some(b)) => (*a, *b),
        _ => return Err(Error::WindowTooSmall(format!("[{lo}, {hi}] is empty"))),
    };
    let basis: BTreeMap<i64, VectorField<R>> = (2 * first + r..=2 * last + s).map(|j| (j, realize(j))).collect();
    for (i, &n) in idx.iter().enumerate() {
        for &m in &idx[i + 1..] {
            let geo = vf_bracket(&basis[&n], &basis[&m])?;
            let found = reexpand(&geo, &basis, n + m + r, n + m + s, (n, m))?;
            let expected = vector_part(&family.bracket_basis(n, m)?);
            let ok = found.as_ref() == Some(&expected);
            pairs.push(PairStatus { n, m, sample, ok });
            if !ok {
                return Ok(Some(GeometryWitness { n, m, sample, expected, found }));
            }
        }
    }
    Ok(None)
}

/// Three distinct roots `e1, e2, e3 = −e1 − e2`.
pub fn elliptic_is_nondegenerate(e1: &Rational, e2: &Rational) -> bool {
    let e3 = -(e1 + e2);
    e1 != e2 && e1 != &e3 && e2 != &e3
}

/// Compares the family's structure constants with the geometric brackets
/// of `model` on all pairs `n < m` of `[lo, hi]`.
///
/// With no samples the genus-0 models are checked symbolically in the
/// family parameter (`x0 = α²`). With samples, each sample is a full
/// parameter assignment; the elliptic model needs at least three
/// nondegenerate `(e1, e2)` samples.
pub fn verify_against_geometry(
    family: &FamilySpec,
    model: Model,
    lo: i64,
    hi: i64,
    samples: &[Vec<Rational>],
) -> Result<GeometryReport> {
    if family.params.len() != model.parameter_count() {
        return Err(Error::UnsupportedFamily(format!(
            "{} has {} parameters but the {} model takes {}",
            family.name,
            family.params.len(),
            model.name(),
            model.parameter_count()
        )));
    }
    if model == Model::Elliptic {
        if samples.len() < 3 {
            return Err(Error::WindowTooSmall(format!("{} elliptic samples, need at least 3", samples.len())));
        }
        for s in samples {
            if s.len() != 2 || !elliptic_is_nondegenerate(&s[0], &s[1]) {
                let show = |i: usize| s.get(i).map(rational::format).unwrap_or_default();
                return Err(Error::DegenerateSample(show(0), show(1)));
            }
        }
    }
    let mut pairs = Vec::new();
    let mut witness = None;
    let mut run = |fam: &FamilySpec, values: Option<&[Rational]>, sample: Option<usize>| -> Result<Option<GeometryWitness>> {
        match model {
            Model::Witt => check_pairs(fam, model, lo, hi, sample, &witt_field, &mut pairs),
            Model::Nodal | Model::ThreePoint => {
                let a2 = match values {
                    Some(v) => ParamPoly::constant(v[0].clone()),
                    None => ParamPoly::var(0),
                };
                if model == Model::Nodal {
                    check_pairs(fam, model, lo, hi, sample, &|n| nodal_field(n, &a2), &mut pairs)
                } else {
                    check_pairs(fam, model, lo, hi, sample, &|n| three_point_field(n, &a2), &mut pairs)
                }
            }
            Model::Elliptic => {
                let v = values.expect("elliptic samples are checked above");
                let f = Rc::new(elliptic_curve(&v[0], &v[1]));
                check_pairs(fam, model, lo, hi, sample, &|n| elliptic_field(n, &f), &mut pairs)
            }
        }
    };
    if samples.is_empty() {
        witness = run(family, None, None)?;
    } else {
        for (i, s) in samples.iter().enumerate() {
            let fam = family.specialize_values(s)?;
            witness = run(&fam, Some(s), Some(i))?;
            if witness.is_some() {
                break;
            }
        }
    }
    let verdict = match witness {
        Some(w) => Verdict::Fail(w),
        None => Verdict::Pass(Certificate::Exhaustive),
    };
    Ok(GeometryReport {
        family: family.name.clone(),
        model,
        window: (lo, hi),
        samples: samples.to_vec(),
        pairs,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::family::{Affine, ShiftTerm};
    use crate::rational::int;
    use alloc::vec;

    #[test]
    fn witt_fields() {
        let b = vf_bracket(&witt_field(1), &witt_field(2)).unwrap();
        assert_eq!(b, witt_field(3));
    }

    #[test]
    fn three_point_v1_v3() {
        let a2 = ParamPoly::var(0);
        let b = vf_bracket(&three_point_field(1, &a2), &three_point_field(3, &a2)).unwrap();
        // 2 z u² = 2 V_4
        assert_eq!(b.coeff, three_point_field(4, &a2).coeff.scale(&ParamPoly::from_i64(2)));
    }

    #[test]
    fn elliptic_v1_v2_at_sample() {
        let (e1, e2) = (int(1), int(2));
        let f = Rc::new(elliptic_curve(&e1, &e2));
        let b = vf_bracket(&elliptic_field(1, &f), &elliptic_field(2, &f)).unwrap();
        // V_3 − (e1 − e2)(2e1 + e2) V_{−1} = V_3 + 4 V_{−1}
        let expect = elliptic_field(3, &f).coeff.add(&elliptic_field(-1, &f).coeff.scale(&int(4)));
        assert_eq!(b.coeff, expect);
    }

    #[test]
    fn jacobi_for_realized_fields() {
        let f = Rc::new(elliptic_curve(&int(2), &int(5)));
        let v = |n| elliptic_field(n, &f);
        for (a, b, c) in [(-3, 1, 4), (0, 2, 5), (-1, -2, 3)] {
            let t1 = vf_bracket(&vf_bracket(&v(a), &v(b)).unwrap(), &v(c)).unwrap();
            let t2 = vf_bracket(&vf_bracket(&v(b), &v(c)).unwrap(), &v(a)).unwrap();
            let t3 = vf_bracket(&vf_bracket(&v(c), &v(a)).unwrap(), &v(b)).unwrap();
            assert!(t1.coeff.add(&t2.coeff).add(&t3.coeff).is_zero());
        }
    }

    #[test]
    fn genus_zero_families_match_symbolically() {
        for (fam, model) in [
            (catalog::witt(), Model::Witt),
            (catalog::three_point_genus0(), Model::ThreePoint),
            (catalog::nodal_subalgebra(), Model::Nodal),
        ] {
            let r = verify_against_geometry(&fam, model, -6, 6, &[]).unwrap();
            assert!(r.verdict.passed(), "{}: {:?}", fam.name, r.verdict);
            assert_eq!(r.pairs.len(), 78);
        }
    }

    #[test]
    fn elliptic_matches_at_samples() {
        let samples = vec![vec![int(1), int(2)], vec![int(1), int(-3)], vec![int(2), int(5)]];
        let r = verify_against_geometry(&catalog::elliptic(), Model::Elliptic, -4, 4, &samples).unwrap();
        assert!(r.verdict.passed(), "{:?}", r.verdict);
    }

    #[test]
    fn corrupted_rule_is_caught() {
        let mut f = catalog::three_point_genus0();
        f.rule.odd_even[1] = ShiftTerm::new(-2, Affine::m_minus_n(0, ParamPoly::var(0)));
        let r = verify_against_geometry(&f, Model::ThreePoint, -3, 3, &[]).unwrap();
        assert!(matches!(r.verdict, Verdict::Fail(_)));
    }

    #[test]
    fn sample_preconditions() {
        let few = vec![vec![int(1), int(2)]];
        assert!(verify_against_geometry(&catalog::elliptic(), Model::Elliptic, -2, 2, &few).is_err());
        let degenerate = vec![vec![int(1), int(1)]; 3];
        assert!(matches!(
            verify_against_geometry(&catalog::elliptic(), Model::Elliptic, -2, 2, &degenerate),
            Err(Error::DegenerateSample(_, _))
        ));
    }
}
