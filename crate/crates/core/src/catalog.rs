//! Constructors for every family, in [`FamilySpec`] normal form.
//!
//! The elliptic-type families share one shape, differing only in the two
//! polynomials `p` (shift −2) and `q` (shift −4):
//!
//! ```text
//! odd-odd    (m−n) v_{n+m}
//! even-even  (m−n) (v_{n+m} + p v_{n+m−2} + q v_{n+m−4})
//! odd-even   (m−n) v_{n+m} + (m−n−1) p v_{n+m−2} + (m−n−2) q v_{n+m−4}
//! ```
//!
//! `e3` never appears: it is eliminated as `−e1 − e2` when the coefficients
//! are built.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::{Affine, BasisDomain, BracketRule, CentralRule, DiagonalTerm, ExceptionalRow, FamilySpec, ShiftTerm};
use crate::poly::ParamPoly;
use crate::rational::{self, Rational};

fn one() -> ParamPoly {
    ParamPoly::one()
}

fn witt_rule() -> BracketRule {
    BracketRule::uniform(vec![ShiftTerm::new(0, Affine::m_minus_n(0, one()))])
}

fn elliptic_shape(p: ParamPoly, q: ParamPoly) -> BracketRule {
    let mut rule = witt_rule();
    let push = |class: &mut Vec<ShiftTerm>, shift: i64, d: i64, c: &ParamPoly| {
        if !c.is_zero() {
            class.push(ShiftTerm::new(shift, Affine::m_minus_n(d, c.clone())));
        }
    };
    push(&mut rule.even_even, -2, 0, &p);
    push(&mut rule.even_even, -4, 0, &q);
    push(&mut rule.odd_even, -2, -1, &p);
    push(&mut rule.odd_even, -4, -2, &q);
    rule
}

/// `[l_n, l_m] = (m − n) l_{n+m}` on all of ℤ.
pub fn witt() -> FamilySpec {
    FamilySpec::new("witt", &[], BasisDomain::All, witt_rule())
}

/// Witt plus the central term `(1/12)(m³ − m) δ_{n,−m} c`.
pub fn virasoro() -> FamilySpec {
    let cubic = vec![
        ParamPoly::zero(),
        ParamPoly::constant(rational::rat(-1, 12)),
        ParamPoly::zero(),
        ParamPoly::constant(rational::rat(1, 12)),
    ];
    FamilySpec::new("virasoro", &[], BasisDomain::All, witt_rule())
        .with_central(CentralRule::Diagonal(vec![DiagonalTerm { total: 0, coeffs: cubic }]))
}

/// `(e1 − e2)(e1 − e3)` with `e3 = −e1 − e2`, in variables `x0 = e1`, `x1 = e2`.
pub fn elliptic_quartic_coefficient() -> ParamPoly {
    let e1 = ParamPoly::var(0);
    let e2 = ParamPoly::var(1);
    let e3 = -(&e1 + &e2);
    (&e1 - &e2) * (&e1 - &e3)
}

/// Vector fields on the elliptic curve `Y² = 4(X−e1)(X−e2)(X−e3)` with poles
/// at ∞ and `(e1, 0)`; symbolic in `e1`, `e2`.
pub fn elliptic() -> FamilySpec {
    let e1 = ParamPoly::var(0);
    FamilySpec::new(
        "elliptic",
        &["e1", "e2"],
        BasisDomain::All,
        elliptic_shape(e1.scale(&rational::int(3)), elliptic_quartic_coefficient()),
    )
}

/// Restriction of [`elliptic`] to the line `e2 = s·e1`, in the parameter `e1`.
pub fn d_s_line(s: &Rational) -> FamilySpec {
    let e1 = ParamPoly::var(0);
    // (1 − s)(2 + s)
    let g = (rational::int(1) - s) * (rational::int(2) + s);
    let q = e1.pow(2).scale(&g);
    FamilySpec::new(
        &format!("ds:{s}"),
        &["e1"],
        BasisDomain::All,
        elliptic_shape(e1.scale(&rational::int(3)), q),
    )
}

/// The line `e1 = 0`, `e3 = −e2`, in the parameter `e2`.
pub fn d_infinity() -> FamilySpec {
    let e2 = ParamPoly::var(0);
    FamilySpec::new(
        "ds:inf",
        &["e2"],
        BasisDomain::All,
        elliptic_shape(ParamPoly::zero(), -e2.pow(2)),
    )
}

/// Genus-zero vector fields holomorphic outside `{α, −α, ∞}`; the parameter is
/// `alpha2 = α²`.
pub fn three_point_genus0() -> FamilySpec {
    FamilySpec::new(
        "three-point",
        &["alpha2"],
        BasisDomain::All,
        elliptic_shape(ParamPoly::var(0), ParamPoly::zero()),
    )
}

/// The subalgebra of Witt with `V_{2k} = l_{2k} − 2α² l_{2k−2} + α⁴ l_{2k−4}`
/// and `V_{2k+1} = l_{2k+1} − α² l_{2k−1}`; the parameter is `alpha2 = α²`.
pub fn nodal_subalgebra() -> FamilySpec {
    let a2 = ParamPoly::var(0);
    FamilySpec::new(
        "nodal",
        &["alpha2"],
        BasisDomain::All,
        elliptic_shape(a2.scale(&rational::int(-2)), a2.pow(2)),
    )
}

/// `W_{1,α²}`: the three-point family on the basis `V_n`, `n ≥ 1`.
pub fn w1_alpha2() -> FamilySpec {
    FamilySpec {
        name: "w1".into(),
        domain: BasisDomain::AtLeast(1),
        ..three_point_genus0()
    }
}

/// `L_1 = ⟨l_n | n ≥ 1⟩ ⊂ W`.
pub fn l1_subalgebra() -> FamilySpec {
    FamilySpec::new("l1", &[], BasisDomain::AtLeast(1), witt_rule())
}

/// The three formal one-parameter deformations of `L_1` in the parameter `t`.
pub fn formal_family(i: u8) -> Result<FamilySpec> {
    let t = ParamPoly::var(0);
    let rule = match i {
        1 => BracketRule::uniform(vec![
            ShiftTerm::new(0, Affine::m_minus_n(0, one())),
            ShiftTerm::new(-1, Affine::m_minus_n(0, t)),
        ]),
        2 | 3 => {
            let index = i as i64 - 1;
            let mut rule = witt_rule();
            // [l_k, l_m] = (m − k) l_{m+k} + t·m l_m
            rule.exceptional.push(ExceptionalRow {
                index,
                terms: vec![
                    ShiftTerm::new(0, Affine::m_minus_n(0, one())),
                    ShiftTerm::new(-index, Affine::new(ParamPoly::zero(), t, ParamPoly::zero())),
                ],
            });
            rule
        }
        _ => return Err(Error::UnsupportedFamily(format!("formal{i}"))),
    };
    Ok(FamilySpec::new(&format!("formal{i}"), &["t"], BasisDomain::AtLeast(1), rule))
}

/// Names accepted by [`lookup`].
pub fn names() -> Vec<String> {
    [
        "witt",
        "virasoro",
        "elliptic",
        "ds:<s>",
        "ds:inf",
        "three-point",
        "nodal",
        "w1",
        "l1",
        "formal1",
        "formal2",
        "formal3",
    ]
    .iter()
    .map(|s| String::from(*s))
    .collect()
}

pub fn lookup(name: &str) -> Result<FamilySpec> {
    match name {
        "witt" => Ok(witt()),
        "virasoro" => Ok(virasoro()),
        "elliptic" => Ok(elliptic()),
        "ds:inf" | "d-infinity" => Ok(d_infinity()),
        "three-point" => Ok(three_point_genus0()),
        "nodal" => Ok(nodal_subalgebra()),
        "w1" => Ok(w1_alpha2()),
        "l1" => Ok(l1_subalgebra()),
        "formal1" => formal_family(1),
        "formal2" => formal_family(2),
        "formal3" => formal_family(3),
        other => match other.strip_prefix("ds:") {
            Some(s) => Ok(d_s_line(&rational::parse(s)?)),
            None => Err(Error::UnsupportedFamily(other.into())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{BasisIndex, LieElement};
    use crate::rational::{int, rat};

    fn v(n: i64) -> LieElement {
        LieElement::basis(n)
    }

    fn lin(terms: &[(i64, ParamPoly)]) -> LieElement {
        LieElement::from_terms(terms.iter().map(|(n, c)| (BasisIndex::Vector(*n), c.clone())))
    }

    fn k() -> ParamPoly {
        elliptic_quartic_coefficient()
    }

    fn p(c: i64) -> ParamPoly {
        ParamPoly::from_i64(c)
    }

    #[test]
    fn witt_examples() {
        let w = witt();
        assert_eq!(w.bracket(&v(2), &v(3)).unwrap(), v(5));
        assert_eq!(w.bracket(&v(0), &v(7)).unwrap(), v(7).scale(&p(7)));
        assert_eq!(w.bracket(&v(3), &v(3)).unwrap(), LieElement::zero());
        assert_eq!(w.bracket(&v(-2), &v(5)).unwrap(), v(3).scale(&p(7)));
    }

    #[test]
    fn virasoro_examples() {
        let vir = virasoro();
        let expected = LieElement::from_terms([
            (BasisIndex::Vector(0), p(-4)),
            (BasisIndex::Central, ParamPoly::constant(rat(-1, 2))),
        ]);
        assert_eq!(vir.bracket(&v(2), &v(-2)).unwrap(), expected);
        assert_eq!(vir.bracket(&v(1), &v(-1)).unwrap(), v(0).scale(&p(-2)));
        assert_eq!(vir.bracket(&LieElement::central(), &v(5)).unwrap(), LieElement::zero());
    }

    #[test]
    fn elliptic_examples() {
        let ell = elliptic();
        let e1 = ParamPoly::var(0);
        assert_eq!(ell.bracket(&v(2), &v(2)).unwrap(), LieElement::zero());
        assert_eq!(ell.bracket(&v(1), &v(3)).unwrap(), v(4).scale(&p(2)));
        assert_eq!(
            ell.bracket(&v(1), &v(2)).unwrap(),
            lin(&[(3, p(1)), (-1, -k())])
        );
        assert_eq!(
            ell.bracket(&v(2), &v(4)).unwrap(),
            lin(&[(6, p(2)), (4, e1.scale(&int(6))), (2, k().scale(&int(2)))])
        );
        assert_eq!(
            ell.bracket(&v(1), &v(4)).unwrap(),
            lin(&[(5, p(3)), (3, e1.scale(&int(6))), (1, k())])
        );
        // (e1 − e2)(2e1 + e2)
        let e2 = ParamPoly::var(1);
        assert_eq!(k(), (&e1 - &e2) * (&e1.scale(&int(2)) + &e2));
    }

    #[test]
    fn line_families() {
        let ds = d_s_line(&rat(-1, 2));
        let e1sq = ParamPoly::var(0).pow(2);
        let shift4: Vec<_> = ds.rule.even_even.iter().filter(|t| t.shift == -4).collect();
        assert_eq!(shift4[0].coeff, Affine::m_minus_n(0, e1sq.scale(&rat(9, 4))));
        assert!(d_s_line(&int(1)).rule.even_even.iter().all(|t| t.shift != -4));
        let e2 = ParamPoly::var(0);
        assert_eq!(
            d_infinity().bracket(&v(2), &v(4)).unwrap(),
            lin(&[(6, p(2)), (2, e2.pow(2).scale(&int(-2)))])
        );
    }

    #[test]
    fn genus_zero_families() {
        let a2 = ParamPoly::var(0);
        let tp = three_point_genus0();
        assert_eq!(tp.bracket(&v(1), &v(2)).unwrap(), v(3));
        assert_eq!(tp.bracket(&v(2), &v(4)).unwrap(), lin(&[(6, p(2)), (4, a2.scale(&int(2)))]));
        assert_eq!(tp.bracket(&v(1), &v(3)).unwrap(), v(4).scale(&p(2)));
        let nd = nodal_subalgebra();
        assert_eq!(nd.bracket(&v(1), &v(3)).unwrap(), v(4).scale(&p(2)));
        assert_eq!(
            nd.bracket(&v(2), &v(4)).unwrap(),
            lin(&[(6, p(2)), (4, a2.scale(&int(-4))), (2, a2.pow(2).scale(&int(2)))])
        );
    }

    #[test]
    fn nodal_matches_minus_one_half_line() {
        // α² = −3e1/2
        let e1 = rat(5, 7);
        let nodal = nodal_subalgebra().specialize(&[("alpha2", -rat(3, 2) * &e1)]).unwrap();
        let line = d_s_line(&rat(-1, 2)).specialize(&[("e1", e1)]).unwrap();
        assert!(nodal.same_structure(&line));
    }

    #[test]
    fn formal_families() {
        let t = ParamPoly::var(0);
        let f1 = formal_family(1).unwrap();
        assert_eq!(f1.bracket(&v(1), &v(2)).unwrap(), lin(&[(3, p(1)), (2, t.clone())]));
        let f3 = formal_family(3).unwrap();
        assert_eq!(
            f3.bracket(&v(2), &v(5)).unwrap(),
            lin(&[(7, p(3)), (5, t.scale(&int(5)))])
        );
        assert_eq!(f3.bracket(&v(1), &v(2)).unwrap(), lin(&[(3, p(1)), (1, -t.clone())]));
        let f2 = formal_family(2).unwrap();
        assert_eq!(f2.bracket(&v(3), &v(4)).unwrap(), v(7));
        assert!(formal_family(4).is_err());
    }

    #[test]
    fn grading_bounds() {
        use crate::family::GradingBounds;
        assert_eq!(witt().grading_bounds(), GradingBounds { lower: 0, upper: 0 });
        assert_eq!(elliptic().grading_bounds(), GradingBounds { lower: -4, upper: 0 });
        assert_eq!(three_point_genus0().grading_bounds(), GradingBounds { lower: -2, upper: 0 });
        assert_eq!(d_s_line(&int(1)).grading_bounds(), GradingBounds { lower: -2, upper: 0 });
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(lookup("ds:3/2").unwrap(), d_s_line(&rat(3, 2)));
        assert_eq!(lookup("ds:inf").unwrap(), d_infinity());
        assert!(lookup("genus2").is_err());
    }
}
