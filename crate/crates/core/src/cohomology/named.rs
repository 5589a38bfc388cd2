//! The cochains that appear in the deformation computations.

use alloc::collections::BTreeMap;
use alloc::vec;

use crate::catalog;
use crate::error::Result;
use crate::family::{Affine, BracketRule, ShiftTerm};
use crate::poly::ParamPoly;
use crate::rational::{self, Rational};

use super::{deformation_differential, Cochain, UnaryRule};

fn c(r: Rational) -> ParamPoly {
    ParamPoly::constant(r)
}

/// `Φ(v_n) = (a·n + d) v_{n+w}` with separate `(a, d)` for odd and even `n`.
pub fn parity_affine(weight: i64, odd: (Rational, Rational), even: (Rational, Rational)) -> Cochain {
    let term = |(a, d): (Rational, Rational)| {
        vec![ShiftTerm::new(weight, Affine::new(c(a), ParamPoly::zero(), c(d)))]
    };
    Cochain::unary(UnaryRule {
        odd: term(odd),
        even: term(even),
        pinned: BTreeMap::new(),
    })
}

/// `Φ(v_n) = c_parity · v_{n+w}`.
pub fn parity_constant(weight: i64, odd: Rational, even: Rational) -> Cochain {
    let zero = rational::int(0);
    parity_affine(weight, (zero.clone(), odd), (zero, even))
}

/// Derivative of the `D_s` families in `e1` at order 1 (independent of `s`):
/// `0 / 3(m − n) / 3(m − n − 1)` at shift −2.
pub fn omega_first() -> Cochain {
    let three = ParamPoly::from_i64(3);
    Cochain::binary(BracketRule {
        odd_odd: vec![],
        even_even: vec![ShiftTerm::new(-2, Affine::m_minus_n(0, three.clone()))],
        odd_even: vec![ShiftTerm::new(-2, Affine::m_minus_n(-1, three))],
        exceptional: vec![],
    })
}

/// `D_∞` in `e2` at order 2: `0 / −(m − n) / −(m − n − 2)` at shift −4.
pub fn omega_second() -> Cochain {
    let minus = ParamPoly::from_i64(-1);
    Cochain::binary(BracketRule {
        odd_odd: vec![],
        even_even: vec![ShiftTerm::new(-4, Affine::m_minus_n(0, minus.clone()))],
        odd_even: vec![ShiftTerm::new(-4, Affine::m_minus_n(-2, minus))],
        exceptional: vec![],
    })
}

/// `Φ(l_n) = −3 l_{n−2}` (n even), `−(3/2) l_{n−2}` (n odd); `d₁Φ = ω₁`.
pub fn phi_first() -> Cochain {
    parity_constant(-2, rational::rat(-3, 2), rational::int(-3))
}

/// `Φ(l_n) = l_{n−4}` (n even), `(1/2) l_{n−4}` (n odd); `d₁Φ = ω₂`.
pub fn phi_second() -> Cochain {
    parity_constant(-4, rational::rat(1, 2), rational::int(1))
}

/// `β⁽ⁱ⁾`: the order-1 term of formal family `i` in `t`, a cocycle on `L_1`.
pub fn beta(i: u8) -> Result<Cochain> {
    deformation_differential(&catalog::formal_family(i)?, "t", 1)
}

/// `γ⁽¹⁾(l_n) = ((n − 1)/2) l_{n−1}` with `d₁γ⁽¹⁾ = β⁽¹⁾`.
pub fn gamma_first() -> Cochain {
    let half = rational::rat(1, 2);
    let t = (half.clone(), -half);
    parity_affine(-1, t.clone(), t)
}

/// The `L_1` cocycle from `W_{1,α²}`: its `α²`-derivative at order 1.
pub fn l1_omega() -> Result<Cochain> {
    deformation_differential(&catalog::w1_alpha2(), "alpha2", 1)
}

fn pinned_low(mut phi: Cochain) -> Cochain {
    if let super::Table::Unary(rule) = &mut phi.table {
        rule.pinned.insert(1, crate::LieElement::zero());
        rule.pinned.insert(2, crate::LieElement::zero());
    }
    phi
}

/// The `L_1` witness as printed: `Φ(l_m) = −(m+8)/6 l_{m−2}` (m even),
/// `−(m+5)/6 l_{m−2}` (m odd), `Φ(l_1) = Φ(l_2) = 0`.
///
/// It satisfies `ω − d₁Φ = (1/3) β⁽³⁾` only on pairs with `n, m ≥ 3`; see
/// [`l1_phi`].
pub fn l1_phi_printed() -> Cochain {
    let sixth = rational::rat(-1, 6);
    pinned_low(parity_affine(-2, (sixth.clone(), rational::rat(-5, 6)), (sixth, rational::rat(-8, 6))))
}

/// The unique weight −2 solution of `ω − d₁Φ = c·β⁽³⁾` with
/// `Φ(l_1) = Φ(l_2) = 0`: `c = 1/3` and `Φ(l_m) = (m−1)/6 l_{m−2}` (m odd),
/// `(m−4)/6 l_{m−2}` (m even). It differs from [`l1_phi_printed`] by
/// `(1/3) ad(l_{−2})` on `m ≥ 3`.
pub fn l1_phi() -> Cochain {
    let sixth = rational::rat(1, 6);
    pinned_low(parity_affine(-2, (sixth.clone(), rational::rat(-1, 6)), (sixth, rational::rat(-4, 6))))
}

#[cfg(test)]
mod tests {
    use super::super::{agree_on_window, differential, is_cocycle};
    use super::*;
    use crate::family::BasisDomain;
    use crate::rational::int;

    #[test]
    fn printed_witnesses_round_trip() {
        let w = catalog::witt();
        let d = differential(&w, &phi_first()).unwrap();
        assert!(agree_on_window(BasisDomain::All, &d, &omega_first(), -8, 8).unwrap().is_none());
        let d = differential(&w, &phi_second()).unwrap();
        assert!(agree_on_window(BasisDomain::All, &d, &omega_second(), -8, 8).unwrap().is_none());
    }

    #[test]
    fn gamma_one_bounds_beta_one() {
        let l1 = catalog::l1_subalgebra();
        let d = differential(&l1, &gamma_first()).unwrap();
        assert!(agree_on_window(BasisDomain::AtLeast(1), &d, &beta(1).unwrap(), 1, 12).unwrap().is_none());
    }

    #[test]
    fn l1_identity() {
        let l1 = catalog::l1_subalgebra();
        let omega = l1_omega().unwrap();
        assert!(is_cocycle(&l1, &omega, 1, 10).unwrap().verdict.passed());
        let rhs = Cochain::combination(vec![(rational::rat(1, 3), beta(3).unwrap())]).unwrap();
        let lhs = omega.minus(&differential(&l1, &l1_phi()).unwrap()).unwrap();
        assert!(agree_on_window(BasisDomain::AtLeast(1), &lhs, &rhs, 1, 14).unwrap().is_none());
        // the printed witness is right away from the first two rows only
        let printed = omega.minus(&differential(&l1, &l1_phi_printed()).unwrap()).unwrap();
        assert!(agree_on_window(BasisDomain::AtLeast(3), &printed, &rhs, 3, 14).unwrap().is_none());
        let w = agree_on_window(BasisDomain::AtLeast(1), &printed, &rhs, 1, 14).unwrap().unwrap();
        assert_eq!(w.args, vec![1, 2]);
        let _ = int(0);
    }
}
