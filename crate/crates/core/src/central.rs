//! Residue cocycles at genus zero.
//!
//! `γ_R(e, f) = Σ_{P ∈ I} res_P (½(e‴f − ef‴) − R(e′f − ef′)) dz` for vector
//! fields `e d/dz`, `f d/dz`. The sum over the in-points `I` stands for the
//! integral over a cycle separating them from the out-point; no `1/2πi`
//! normalization is applied.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::catalog;
use crate::element::BasisIndex;
use crate::error::{Error, Result};
use crate::family::{CentralRule, FamilySpec};
use crate::geom::laurent::LaurentPoly;
use crate::geom::ratfunc::RatFunc;
use crate::geom::three_point::ThreePointFunction;
use crate::geom::{three_point_field, witt_field, Coefficient, VectorField};
use crate::linalg::{InfeasibilityCertificate, LinearSystem, SolveOutcome};
use crate::poly::ParamPoly;
use crate::rational::{self, Rational};

/// A point of the sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

/// Something that has a residue.
#[derive(Clone, Copy, Debug)]
pub enum Residuand<'a> {
    Laurent(&'a LaurentPoly),
    Rational(&'a RatFunc),
    /// Only at a rational value of `α²`.
    ThreePoint(&'a ThreePointFunction),
}

/// Residue of `f dz` at `point`.
pub fn residue(f: Residuand<'_>, point: &Point) -> Result<ParamPoly> {
    match (f, point) {
        // a Laurent polynomial in z is regular off {0, ∞}
        (Residuand::Laurent(p), Point::Finite(a)) if a.is_zero() => Ok(p.coeff(-1)),
        (Residuand::Laurent(_), Point::Finite(_)) => Ok(ParamPoly::zero()),
        (Residuand::Laurent(p), Point::Infinity) => Ok(-p.coeff(-1)),
        (Residuand::Rational(r), Point::Finite(a)) => Ok(ParamPoly::constant(r.residue_at(a))),
        (Residuand::Rational(r), Point::Infinity) => Ok(ParamPoly::constant(r.residue_at_infinity())),
        (Residuand::ThreePoint(t), p) => {
            let alpha2 = t
                .alpha2()
                .as_constant()
                .ok_or_else(|| Error::EssentialOrUndefined("α² is symbolic, so the point is not located".to_string()))?;
            residue(Residuand::Rational(&t.to_ratfunc(&alpha2)?), p)
        }
    }
}

/// Function rings whose in-points are fixed, with the connection `R` embedded.
pub trait InPointRing: Coefficient {
    /// `R` as an element of the same ring as `like`.
    fn connection(r: &LaurentPoly, like: &Self) -> Result<Self>;
    /// `Σ_{P ∈ I} res_P (self · dz)`.
    fn in_point_residue(&self) -> ParamPoly;
}

/// In-point `0`, out-point `∞`.
impl InPointRing for LaurentPoly {
    fn connection(r: &LaurentPoly, _: &Self) -> Result<Self> {
        Ok(r.clone())
    }
    fn in_point_residue(&self) -> ParamPoly {
        self.coeff(-1)
    }
}

/// In-points `±α`, out-point `∞`.
impl InPointRing for ThreePointFunction {
    fn connection(r: &LaurentPoly, like: &Self) -> Result<Self> {
        // z^{2j} = u_sq^j, z^{2j+1} = z·u_sq^j with u_sq = u + α²
        let alpha2 = like.alpha2().clone();
        let z_sq = LaurentPoly::from_terms([(1, ParamPoly::one()), (0, alpha2.clone())]);
        let mut a = LaurentPoly::zero();
        let mut b = LaurentPoly::zero();
        for (k, c) in r.terms() {
            if *k < 0 {
                return Err(Error::NotInAlgebra(format!(
                    "connection term z^{k} has a pole at 0, which the three-point ring excludes"
                )));
            }
            let part = z_sq.pow((*k / 2) as u32).scale(c);
            if k % 2 == 0 {
                a = a.add(&part);
            } else {
                b = b.add(&part);
            }
        }
        Ok(ThreePointFunction::new(a, b, alpha2))
    }
    fn in_point_residue(&self) -> ParamPoly {
        self.residue_sum_finite()
    }
}

/// `γ_R(e, f)` as the in-point residue sum.
pub fn kn_cocycle<R: InPointRing>(e: &VectorField<R>, f: &VectorField<R>, connection: &LaurentPoly) -> Result<ParamPoly> {
    let (g, h) = (&e.coeff, &f.coeff);
    let g1 = g.derivative()?;
    let h1 = h.derivative()?;
    let g3 = g1.derivative()?.derivative()?;
    let h3 = h1.derivative()?.derivative()?;
    let schwarz_part = g3.times(h).minus(&g.times(&h3));
    let r = R::connection(connection, g)?;
    let shift_part = r.times(&g1.times(h).minus(&g.times(&h1)));
    let half = rational::rat(1, 2);
    Ok(schwarz_part.in_point_residue().scale(&half) - shift_part.in_point_residue())
}

/// The genus-zero realizations with residue cocycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    /// `l_n = z^{n+1} d/dz`, `I = {0}`.
    Witt,
    /// `V_n` on `ℙ¹ \ {α, −α, ∞}`, `I = {α, −α}`.
    ThreePoint { alpha2: ParamPoly },
}

impl Realization {
    pub fn for_family(name: &str, alpha2: Option<ParamPoly>) -> Result<Self> {
        match name {
            "witt" | "virasoro" => Ok(Realization::Witt),
            "three-point" | "three_point" | "w1" => Ok(Realization::ThreePoint {
                alpha2: alpha2.unwrap_or_else(|| ParamPoly::var(0)),
            }),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Realization::Witt => "witt",
            Realization::ThreePoint { .. } => "three-point",
        }
    }

    /// Almost-grading degree: one less than the vanishing order at the
    /// in-points, so `l_n` has degree `n` and `V_n` has degree `⌈n/2⌉ − 1`.
    pub fn degree(&self, n: i64) -> i64 {
        match self {
            Realization::Witt => n,
            Realization::ThreePoint { .. } => (n + 1).div_euclid(2) - 1,
        }
    }

    /// `γ_R(V_n, V_m)`.
    pub fn cocycle(&self, connection: &LaurentPoly, n: i64, m: i64) -> Result<ParamPoly> {
        match self {
            Realization::Witt => kn_cocycle(&witt_field(n), &witt_field(m), connection),
            Realization::ThreePoint { alpha2 } => {
                kn_cocycle(&three_point_field(n, alpha2), &three_point_field(m, alpha2), connection)
            }
        }
    }

    /// The bracket of the realized basis, as a family.
    pub fn family(&self) -> Result<FamilySpec> {
        match self {
            Realization::Witt => Ok(catalog::witt()),
            Realization::ThreePoint { alpha2 } => {
                let f = catalog::three_point_genus0();
                match alpha2.as_constant() {
                    Some(a) => f.substitute(&[(f.params[0].as_str(), a)]),
                    None if *alpha2 == ParamPoly::var(0) => Ok(f),
                    None => Err(Error::NonRational),
                }
            }
        }
    }
}

/// Nonzero `γ(V_n, V_m)` for `n < m` in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportTable {
    pub window: (i64, i64),
    pub entries: Vec<(i64, i64, ParamPoly)>,
}

impl SupportTable {
    /// Distinct `deg V_n + deg V_m` over the support.
    pub fn levels(&self, real: &Realization) -> Vec<i64> {
        let mut v: Vec<i64> = self.entries.iter().map(|(n, m, _)| real.degree(*n) + real.degree(*m)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

pub fn support_table(real: &Realization, connection: &LaurentPoly, lo: i64, hi: i64) -> Result<SupportTable> {
    let mut entries = Vec::new();
    for n in lo..=hi {
        for m in (n + 1)..=hi {
            let v = real.cocycle(connection, n, m)?;
            if !v.is_zero() {
                entries.push((n, m, v));
            }
        }
    }
    Ok(SupportTable { window: (lo, hi), entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityReport {
    /// Smallest degree sum carrying a nonzero value; 0 when there is none.
    pub lower: i64,
    pub upper_bound_holds: bool,
    pub support: SupportTable,
}

/// Checks `γ(V_n, V_m) ≠ 0 ⇒ M ≤ deg V_n + deg V_m ≤ 0` on a symmetric
/// window, with degrees from [`Realization::degree`].
pub fn locality_bound(real: &Realization, connection: &LaurentPoly, lo: i64, hi: i64) -> Result<LocalityReport> {
    if lo != -hi {
        return Err(Error::WindowTooSmall(format!("locality needs a symmetric window, got [{lo}, {hi}]")));
    }
    let support = support_table(real, connection, lo, hi)?;
    let level = |n: i64, m: i64| real.degree(n) + real.degree(m);
    if let Some((n, m, _)) = support.entries.iter().find(|(n, m, _)| level(*n, *m) > 0) {
        return Err(Error::UpperBoundViolated { n: *n, m: *m });
    }
    let lower = support.entries.iter().map(|(n, m, _)| level(*n, *m)).min().unwrap_or(0);
    Ok(LocalityReport {
        lower,
        upper_bound_holds: true,
        support,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceOutcome {
    /// `(γ_{R₁} − γ_{R₂})(V_n, V_m) = λ([V_n, V_m])` on every window pair.
    Coboundary { lambda: BTreeMap<i64, Rational>, equations: usize },
    /// The window system has no solution.
    Inconsistent { system: LinearSystem, certificate: InfeasibilityCertificate },
}

/// Solves `(γ_{R₁} − γ_{R₂})(e, f) = λ([e, f])` for a functional `λ`.
pub fn class_independence(
    real: &Realization,
    r1: &LaurentPoly,
    r2: &LaurentPoly,
    lo: i64,
    hi: i64,
) -> Result<IndependenceOutcome> {
    let family = real.family()?;
    let mut rows = Vec::new();
    let mut unknowns = BTreeMap::new();
    for n in lo..=hi {
        for m in (n + 1)..=hi {
            let diff = real.cocycle(r1, n, m)? - real.cocycle(r2, n, m)?;
            let rhs = diff.as_constant().ok_or(Error::NonRational)?;
            let mut coeffs = Vec::new();
            for (idx, c) in family.bracket_basis(n, m)?.iter() {
                let BasisIndex::Vector(idx) = *idx else { continue };
                let c = c.as_constant().ok_or(Error::NonRational)?;
                let next = unknowns.len();
                coeffs.push((*unknowns.entry(idx).or_insert(next), c));
            }
            rows.push((coeffs, rhs));
        }
    }
    let mut system = LinearSystem::new(unknowns.len());
    for (coeffs, rhs) in rows {
        system.push(coeffs, rhs);
    }
    Ok(match system.solve() {
        SolveOutcome::Solved(sol) => IndependenceOutcome::Coboundary {
            lambda: unknowns
                .iter()
                .map(|(k, i)| (*k, sol.values[*i].clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
            equations: system.num_equations(),
        },
        SolveOutcome::Inconsistent(certificate) => IndependenceOutcome::Inconsistent { system, certificate },
    })
}

/// `γ` as an explicit central table on `[lo, hi]`.
pub fn central_table(real: &Realization, connection: &LaurentPoly, lo: i64, hi: i64) -> Result<CentralRule> {
    let support = support_table(real, connection, lo, hi)?;
    Ok(CentralRule::Table {
        entries: support.entries.into_iter().map(|(n, m, v)| ((n, m), v)).collect(),
        lo,
        hi,
    })
}

/// The realized family extended by `γ`, tabulated on `[lo, hi]`.
pub fn central_extension(real: &Realization, connection: &LaurentPoly, lo: i64, hi: i64) -> Result<FamilySpec> {
    Ok(real.family()?.with_central(central_table(real, connection, lo, hi)?))
}

/// The constant `c` with `γ_0 = c · (Virasoro rule)` on the Witt window, if
/// one exists. Both vanish off `n + m = 0`, so the ratio is read there.
pub fn virasoro_ratio(lo: i64, hi: i64) -> Result<Option<Rational>> {
    let vir = catalog::virasoro();
    let rule = vir.central.as_ref().ok_or_else(|| Error::UnsupportedFamily("virasoro".to_string()))?;
    let zero = LaurentPoly::zero();
    let mut ratio: Option<Rational> = None;
    for n in lo..=hi {
        for m in (n + 1)..=hi {
            let g = Realization::Witt.cocycle(&zero, n, m)?;
            let v = rule.value(n, m)?;
            let (g, v) = (g.as_constant().ok_or(Error::NonRational)?, v.as_constant().ok_or(Error::NonRational)?);
            match (g.is_zero(), v.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = g / v;
                    if ratio.get_or_insert_with(|| r.clone()) != &r {
                        return Ok(None);
                    }
                }
                _ => return Ok(None),
            }
        }
    }
    Ok(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ratfunc::UPoly;
    use crate::jacobi::verify_jacobi;
    use crate::rational::{int, rat};

    fn a2() -> Realization {
        Realization::ThreePoint { alpha2: ParamPoly::var(0) }
    }

    #[test]
    fn residues() {
        let origin = Point::Finite(int(0));
        let inv = LaurentPoly::power(-1);
        assert_eq!(residue(Residuand::Laurent(&inv), &origin).unwrap(), ParamPoly::one());
        let cube = LaurentPoly::power(3);
        assert!(residue(Residuand::Laurent(&cube), &origin).unwrap().is_zero());
        let r = RatFunc::new(UPoly::one(), UPoly::new(alloc::vec![int(-1), int(0), int(1)])).unwrap();
        assert_eq!(residue(Residuand::Rational(&r), &Point::Finite(int(1))).unwrap(), ParamPoly::constant(rat(1, 2)));
        let f = three_point_field(-2, &ParamPoly::var(0)).coeff;
        assert!(matches!(
            residue(Residuand::ThreePoint(&f), &Point::Finite(int(1))),
            Err(Error::EssentialOrUndefined(_))
        ));
    }

    #[test]
    fn witt_cocycle_is_virasoro_times_minus_twelve() {
        let zero = LaurentPoly::zero();
        for n in -10..=10 {
            for m in -10..=10 {
                let v = Realization::Witt.cocycle(&zero, n, m).unwrap();
                let want = if n + m == 0 { int(n * n * n - n) } else { int(0) };
                assert_eq!(v, ParamPoly::constant(want), "({n},{m})");
            }
        }
        assert_eq!(virasoro_ratio(-10, 10).unwrap(), Some(int(-12)));
        let rep = locality_bound(&Realization::Witt, &zero, -10, 10).unwrap();
        assert_eq!(rep.lower, 0);
        assert_eq!(rep.support.levels(&Realization::Witt), alloc::vec![0]);
    }

    #[test]
    fn meromorphic_connection_keeps_the_upper_bound() {
        let r = LaurentPoly::power(-2);
        assert!(locality_bound(&Realization::Witt, &r, -8, 8).unwrap().upper_bound_holds);
    }

    #[test]
    fn three_point_locality() {
        let rep = locality_bound(&a2(), &LaurentPoly::zero(), -8, 8).unwrap();
        assert_eq!(rep.lower, -2);
        assert!(rep.support.entries.contains(&(-2, 2, ParamPoly::from_i64(-6))));
        // in the index grading the support reaches n + m = 4
        assert!(rep.support.entries.iter().any(|(n, m, _)| n + m == 4));
        assert!(matches!(locality_bound(&a2(), &LaurentPoly::zero(), -8, 7), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn in_point_sum_matches_partial_fractions() {
        let alpha2 = int(9);
        let p = ParamPoly::constant(alpha2.clone());
        for (n, m) in [(-2, 4), (-3, 5), (-4, 8), (-5, 1)] {
            let (e, f) = (three_point_field(n, &p), three_point_field(m, &p));
            let sym = kn_cocycle(&e, &f, &LaurentPoly::zero()).unwrap();
            let g = |x: &ThreePointFunction| x.to_ratfunc(&alpha2).unwrap();
            let (e, f) = (g(&e.coeff), g(&f.coeff));
            let e3 = e.deriv().deriv().deriv();
            let f3 = f.deriv().deriv().deriv();
            let integrand = e3.mul(&f).sub(&e.mul(&f3)).scale(&rat(1, 2));
            let at = |x: i64| residue(Residuand::Rational(&integrand), &Point::Finite(int(x))).unwrap();
            assert_eq!(sym, at(3) + at(-3), "({n},{m})");
            // the global residue sum vanishes
            let inf = residue(Residuand::Rational(&integrand), &Point::Infinity).unwrap();
            assert_eq!(sym, -inf);
        }
    }

    #[test]
    fn antisymmetric_and_cocycle() {
        let r = LaurentPoly::from_terms([(0, ParamPoly::from_i64(2)), (-1, ParamPoly::one())]);
        for (a, b, c) in [(-3, 1, 2), (-4, 2, 5), (-1, -2, 3), (0, 3, -3)] {
            let g = |x: i64, y: i64| Realization::Witt.cocycle(&r, x, y).unwrap();
            assert_eq!(g(a, b), -g(b, a));
            // γ([e,f],g) + cyclic = 0 with [l_a,l_b] = (b − a) l_{a+b}
            let term = |x: i64, y: i64, z: i64| g(x + y, z).scale(&int(y - x));
            assert!((term(a, b, c) + term(b, c, a) + term(c, a, b)).is_zero());
        }
    }

    #[test]
    fn connection_changes_are_coboundaries() {
        let zero = LaurentPoly::zero();
        let IndependenceOutcome::Coboundary { lambda, .. } =
            class_independence(&Realization::Witt, &zero, &zero, -6, 6).unwrap()
        else {
            panic!()
        };
        assert!(lambda.is_empty());
        for r in [LaurentPoly::one(), LaurentPoly::power(-1)] {
            let out = class_independence(&Realization::Witt, &r, &zero, -10, 10).unwrap();
            let IndependenceOutcome::Coboundary { lambda, .. } = out else { panic!("{r:?}") };
            assert!(!lambda.is_empty());
        }
        let real = Realization::ThreePoint { alpha2: ParamPoly::constant(int(2)) };
        let out = class_independence(&real, &LaurentPoly::one(), &zero, -6, 6).unwrap();
        assert!(matches!(out, IndependenceOutcome::Coboundary { .. }));
    }

    #[test]
    fn extensions_stay_lie() {
        let ext = central_extension(&Realization::Witt, &LaurentPoly::one(), -16, 16).unwrap();
        assert!(verify_jacobi(&ext, -4, 4).unwrap().verdict.passed());
        let real = Realization::ThreePoint { alpha2: ParamPoly::constant(int(3)) };
        let ext = central_extension(&real, &LaurentPoly::zero(), -16, 16).unwrap();
        assert!(verify_jacobi(&ext, -4, 4).unwrap().verdict.passed());
    }
}
