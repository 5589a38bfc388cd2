//! Parameters of the cubics `Y² = 4(X − e1)(X − e2)(X − e3)`, `e1 + e2 + e3 = 0`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{CentralRule, DiagonalTerm, FamilySpec};
use crate::poly::ParamPoly;
use crate::rational::{self, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParams {
    pub e1: Rational,
    pub e2: Rational,
}

impl CurveParams {
    pub fn new(e1: Rational, e2: Rational) -> Self {
        CurveParams { e1, e2 }
    }

    pub fn e3(&self) -> Rational {
        -(&self.e1 + &self.e2)
    }

    fn values(&self) -> [Rational; 2] {
        [self.e1.clone(), self.e2.clone()]
    }

    pub fn g2(&self) -> Rational {
        g2_poly().eval(&self.values()).expect("two values")
    }

    pub fn g3(&self) -> Rational {
        g3_poly().eval(&self.values()).expect("two values")
    }

    pub fn discriminant(&self) -> Rational {
        discriminant_poly().eval(&self.values()).expect("two values")
    }

    /// `1728 g2³ / Δ`, smooth fibers only.
    pub fn j(&self) -> Option<Rational> {
        let d = self.discriminant();
        if d.is_zero() {
            return None;
        }
        Some(int(1728) * rational::powi(&self.g2(), 3) / d)
    }
}

fn e_vars() -> (ParamPoly, ParamPoly, ParamPoly) {
    let e1 = ParamPoly::var(0);
    let e2 = ParamPoly::var(1);
    let e3 = -(&e1 + &e2);
    (e1, e2, e3)
}

/// `g2 = −4(e1e2 + e1e3 + e2e3)` in `x0 = e1`, `x1 = e2`.
pub fn g2_poly() -> ParamPoly {
    let (e1, e2, e3) = e_vars();
    (&e1 * &e2 + &e1 * &e3 + &e2 * &e3).scale(&int(-4))
}

/// `g3 = 4 e1 e2 e3`.
pub fn g3_poly() -> ParamPoly {
    let (e1, e2, e3) = e_vars();
    (e1 * e2 * e3).scale(&int(4))
}

/// `Δ = 16 (e1 − e2)²(e1 − e3)²(e2 − e3)²`.
pub fn discriminant_poly() -> ParamPoly {
    let (e1, e2, e3) = e_vars();
    ((&e1 - &e2) * (&e1 - &e3) * (&e2 - &e3)).pow(2).scale(&int(16))
}

/// Whether `g2³ − 27 g3² = Δ` holds as a polynomial identity.
pub fn discriminant_identity_holds() -> bool {
    g2_poly().pow(3) - g3_poly().pow(2).scale(&int(27)) == discriminant_poly()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodalCase {
    /// `e2 = e3 ≠ e1`: the line `D_{−1/2}`.
    IIa,
    /// `e1 = e2 ≠ e3` or `e1 = e3 ≠ e2`: the lines `D_1` and `D_{−2}`.
    IIb,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fiber {
    Cuspidal,
    Nodal(NodalCase),
    Smooth { j: Rational },
}

pub fn classify_fiber(e1: &Rational, e2: &Rational) -> Fiber {
    let c = CurveParams::new(e1.clone(), e2.clone());
    let e3 = c.e3();
    if e1.is_zero() && e2.is_zero() {
        Fiber::Cuspidal
    } else if *e2 == e3 {
        Fiber::Nodal(NodalCase::IIa)
    } else if e1 == e2 || *e1 == e3 {
        Fiber::Nodal(NodalCase::IIb)
    } else {
        Fiber::Smooth { j: c.j().expect("distinct roots") }
    }
}

/// Slope `s` of the line `e2 = s·e1`; `Infinity` is `e1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineSlope {
    Finite(Rational),
    Infinity,
}

impl LineSlope {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(LineSlope::Infinity),
            _ => rational::parse(s).map(LineSlope::Finite),
        }
    }
}

/// `j` on the line: `1728·4(1 + s + s²)³ / ((1 − s)²(2 + s)²(1 + 2s)²)`,
/// and `1728` on the line at infinity.
pub fn j_of_line(s: &LineSlope) -> Result<Rational> {
    match s {
        LineSlope::Infinity => Ok(int(1728)),
        LineSlope::Finite(s) => {
            let (num, den) = j_line_parts();
            let d = den.eval(s);
            if d.is_zero() {
                return Err(Error::DegenerateLine);
            }
            Ok(num.eval(s) / d)
        }
    }
}

/// Numerator and denominator of `j(s)` as polynomials in `s`.
pub fn j_line_parts() -> (crate::geom::ratfunc::UPoly, crate::geom::ratfunc::UPoly) {
    use crate::geom::ratfunc::UPoly;
    let p = |c: &[i64]| UPoly::new(c.iter().map(|&x| int(x)).collect());
    let num = p(&[1, 1, 1]).pow(3).scale(&int(1728 * 4));
    let den = p(&[1, -1]).mul(&p(&[2, 1])).mul(&p(&[1, 2])).pow(2);
    (num, den)
}

/// `p(−1 − s)`.
fn reflect(p: &crate::geom::ratfunc::UPoly) -> crate::geom::ratfunc::UPoly {
    use crate::geom::ratfunc::UPoly;
    let arg = UPoly::new(alloc::vec![int(-1), int(-1)]);
    let mut acc = UPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&arg).add(&UPoly::constant(c.clone()));
    }
    acc
}

/// `j(s) = j(−1 − s)` as rational functions: `N(s)D(−1−s) = N(−1−s)D(s)`.
pub fn j_line_symmetry_holds() -> bool {
    let (num, den) = j_line_parts();
    num.mul(&reflect(&den)) == reflect(&num).mul(&den)
}

/// `s ↦ −1 − s`, fixing `∞` and `−1/2`.
pub fn line_partner(s: &LineSlope) -> LineSlope {
    match s {
        LineSlope::Infinity => LineSlope::Infinity,
        LineSlope::Finite(s) => LineSlope::Finite(-Rational::one() - s),
    }
}

/// `g(s) = (1 − s)(2 + s)`, the shift −4 factor on `D_s`.
pub fn line_factor(s: &Rational) -> Rational {
    (int(1) - s) * (int(2) + s)
}

/// Conjugation by `V_n ↦ λ^n V_n`: the coefficient at shift `w` is
/// multiplied by `(λ²)^{−w/2}`, a central diagonal at total `t` by
/// `(λ²)^{t/2}`.
pub fn rescale(family: &FamilySpec, lambda2: &Rational) -> Result<FamilySpec> {
    if lambda2.is_zero() {
        return Err(Error::ZeroRescale);
    }
    if let Some(w) = family.rule.shifts().into_iter().find(|w| w % 2 != 0) {
        return Err(Error::OddShiftNotRescalable(w));
    }
    let factor = |w: i64| ParamPoly::constant(rational::powi(lambda2, -w / 2));
    let mut out = family.map_by_shift(&factor);
    out.central = match &family.central {
        None => None,
        Some(CentralRule::Diagonal(terms)) => {
            let mut scaled = Vec::new();
            for t in terms {
                if t.total % 2 != 0 {
                    return Err(Error::OddShiftNotRescalable(t.total));
                }
                let f = rational::powi(lambda2, t.total / 2);
                scaled.push(DiagonalTerm {
                    total: t.total,
                    coeffs: t.coeffs.iter().map(|c| c.scale(&f)).collect(),
                });
            }
            Some(CentralRule::Diagonal(scaled))
        }
        Some(CentralRule::Table { entries, lo, hi }) => {
            let mut scaled = alloc::collections::BTreeMap::new();
            for (&(n, m), v) in entries {
                if (n + m) % 2 != 0 {
                    return Err(Error::OddShiftNotRescalable(n + m));
                }
                scaled.insert((n, m), v.scale(&rational::powi(lambda2, (n + m) / 2)));
            }
            Some(CentralRule::Table { entries: scaled, lo: *lo, hi: *hi })
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::rat;

    #[test]
    fn discriminant_identity() {
        assert!(discriminant_identity_holds());
        let c = CurveParams::new(int(1), int(2));
        assert_eq!(c.g2().pow(3) - int(27) * c.g3().pow(2), c.discriminant());
    }

    #[test]
    fn fibers() {
        assert_eq!(classify_fiber(&int(0), &int(0)), Fiber::Cuspidal);
        assert_eq!(classify_fiber(&int(1), &int(1)), Fiber::Nodal(NodalCase::IIb));
        assert_eq!(classify_fiber(&int(1), &rat(-1, 2)), Fiber::Nodal(NodalCase::IIa));
        assert_eq!(classify_fiber(&int(1), &int(-2)), Fiber::Nodal(NodalCase::IIb));
        assert!(matches!(classify_fiber(&int(1), &int(2)), Fiber::Smooth { .. }));
    }

    #[test]
    fn j_line() {
        assert_eq!(j_of_line(&LineSlope::Infinity).unwrap(), int(1728));
        assert_eq!(j_of_line(&LineSlope::Finite(int(0))).unwrap(), int(1728));
        for s in [int(1), int(-2), rat(-1, 2)] {
            assert_eq!(j_of_line(&LineSlope::Finite(s)), Err(Error::DegenerateLine));
        }
        assert!(j_line_symmetry_holds());
        // j on the line agrees with j of a point on it
        let s = rat(3, 2);
        let c = CurveParams::new(int(2), int(2) * &s);
        assert_eq!(c.j().unwrap(), j_of_line(&LineSlope::Finite(s)).unwrap());
    }

    #[test]
    fn partners() {
        assert_eq!(line_partner(&LineSlope::Finite(int(0))), LineSlope::Finite(int(-1)));
        assert_eq!(line_partner(&LineSlope::Finite(rat(-1, 2))), LineSlope::Finite(rat(-1, 2)));
        assert_eq!(line_partner(&LineSlope::Infinity), LineSlope::Infinity);
        let s = rat(5, 7);
        assert_eq!(line_factor(&s), line_factor(&(-int(1) - &s)));
    }

    #[test]
    fn rescaling_normalizes_e1() {
        let d = catalog::d_s_line(&rat(3, 2));
        let at4 = d.specialize(&[("e1", int(4))]).unwrap();
        let at1 = d.specialize(&[("e1", int(1))]).unwrap();
        assert!(rescale(&at4, &rat(1, 4)).unwrap().same_structure(&at1));
        assert!(rescale(&at1, &int(1)).unwrap().same_structure(&at1));
        let back = rescale(&rescale(&at4, &int(3)).unwrap(), &rat(1, 3)).unwrap();
        assert!(back.same_structure(&at4));
    }

    #[test]
    fn three_point_rescaled_is_the_s_equals_one_line() {
        // α² = a on the three-point family, rescaled by λ² = 3, is D_1 at e1 = a.
        let a = rat(5, 3);
        let tp = catalog::three_point_genus0().specialize(&[("alpha2", a.clone())]).unwrap();
        let d1 = catalog::d_s_line(&int(1)).specialize(&[("e1", a)]).unwrap();
        assert!(rescale(&tp, &int(3)).unwrap().same_structure(&d1));
    }

    #[test]
    fn rescale_errors() {
        let f1 = catalog::formal_family(1).unwrap();
        assert_eq!(rescale(&f1, &int(2)), Err(Error::OddShiftNotRescalable(-1)));
        assert_eq!(rescale(&catalog::witt(), &int(0)), Err(Error::ZeroRescale));
    }

    #[test]
    fn virasoro_central_term_is_rescale_invariant() {
        let v = catalog::virasoro();
        assert_eq!(rescale(&v, &int(7)).unwrap(), v);
    }
}
