//! Jacobi identity certification on index windows.
//!
//! With coefficients affine in the indices, each component of the jacobiator
//! of `v_n, v_m, v_k` is, on each parity class of `(n, m, k)`, a polynomial
//! of degree at most 2 in the indices. A grid with three values per variable
//! inside every parity class therefore certifies vanishing everywhere. That
//! argument is only claimed for rules on all of ℤ without exceptional rows
//! or central terms; everything else is reported as exhaustive over the
//! window.

use alloc::format;
use alloc::vec::Vec;

use crate::element::LieElement;
use crate::error::{Error, Result};
use crate::family::{is_odd, BasisDomain, FamilySpec};

/// Index-degree of jacobiator components for affine rules.
pub const JACOBIATOR_INDEX_DEGREE: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every checked quantity is a polynomial of at most `degree` in the
    /// indices on each parity class, and the grid had at least
    /// `values_per_parity` values per variable in each class.
    DegreeBound { degree: u32, values_per_parity: usize },
    /// Only the window itself is claimed.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass(Certificate),
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiWitness {
    pub triple: (i64, i64, i64),
    pub value: LieElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub family: alloc::string::String,
    pub window: (i64, i64),
    pub triples_checked: usize,
    pub verdict: Verdict<JacobiWitness>,
}

/// `[[v_n, v_m], v_k] + [[v_m, v_k], v_n] + [[v_k, v_n], v_m]`.
pub fn jacobiator(family: &FamilySpec, n: i64, m: i64, k: i64) -> Result<LieElement> {
    let v = LieElement::basis;
    let mut out = LieElement::zero();
    for (a, b, c) in [(n, m, k), (m, k, n), (k, n, m)] {
        let inner = family.bracket_basis(a, b)?;
        out = out.add(&family.bracket(&inner, &v(c))?);
    }
    Ok(out)
}

/// Indices of `[lo, hi]` inside the family's basis domain, and a check that
/// each parity class has at least `needed` of them.
pub(crate) fn window_indices(domain: BasisDomain, lo: i64, hi: i64, needed: usize) -> Result<Vec<i64>> {
    let idx: Vec<i64> = (lo..=hi).filter(|&n| domain.contains(n)).collect();
    let odd = idx.iter().filter(|&&n| is_odd(n)).count();
    let even = idx.len() - odd;
    if odd < needed || even < needed {
        return Err(Error::WindowTooSmall(format!(
            "[{lo}, {hi}] has {odd} odd and {even} even indices in the domain, {needed} of each are needed"
        )));
    }
    Ok(idx)
}

pub(crate) fn certificate_for(family: &FamilySpec, idx: &[i64]) -> Certificate {
    let uniform = family.domain == BasisDomain::All && family.rule.exceptional.is_empty() && family.central.is_none();
    if uniform {
        let odd = idx.iter().filter(|&&n| is_odd(n)).count();
        Certificate::DegreeBound {
            degree: JACOBIATOR_INDEX_DEGREE,
            values_per_parity: odd.min(idx.len() - odd),
        }
    } else {
        Certificate::Exhaustive
    }
}

/// Checks the jacobiator on every triple `n < m < k` of the window (it is
/// alternating, so other orders add nothing).
pub fn verify_jacobi(family: &FamilySpec, lo: i64, hi: i64) -> Result<JacobiReport> {
    let idx = window_indices(family.domain, lo, hi, JACOBIATOR_INDEX_DEGREE as usize + 1)?;
    let mut checked = 0;
    for (i, &n) in idx.iter().enumerate() {
        for (j, &m) in idx.iter().enumerate().skip(i + 1) {
            for &k in &idx[j + 1..] {
                checked += 1;
                let value = jacobiator(family, n, m, k)?;
                if !value.is_zero() {
                    return Ok(JacobiReport {
                        family: family.name.clone(),
                        window: (lo, hi),
                        triples_checked: checked,
                        verdict: Verdict::Fail(JacobiWitness { triple: (n, m, k), value }),
                    });
                }
            }
        }
    }
    Ok(JacobiReport {
        family: family.name.clone(),
        window: (lo, hi),
        triples_checked: checked,
        verdict: Verdict::Pass(certificate_for(family, &idx)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::family::{Affine, ShiftTerm};
    use crate::poly::ParamPoly;
    use crate::rational::int;

    /// Elliptic family with the even-even shift −2 coefficient 3e1 replaced
    /// by 2e1.
    fn corrupted_elliptic() -> FamilySpec {
        let mut f = catalog::elliptic();
        for t in f.rule.even_even.iter_mut().filter(|t| t.shift == -2) {
            *t = ShiftTerm::new(-2, Affine::m_minus_n(0, ParamPoly::var(0).scale(&int(2))));
        }
        f
    }

    #[test]
    fn witt_jacobiator_vanishes() {
        assert!(jacobiator(&catalog::witt(), 1, 2, 3).unwrap().is_zero());
    }

    #[test]
    fn elliptic_jacobiator_vanishes_symbolically() {
        assert!(jacobiator(&catalog::elliptic(), 1, 2, 4).unwrap().is_zero());
    }

    #[test]
    fn corrupted_family_breaks_jacobi() {
        // The even-even rule alone is (m − n) times a fixed shift pattern, a
        // Lie algebra for any coefficients, so all-even triples cannot see
        // the corruption.
        assert!(jacobiator(&corrupted_elliptic(), 2, 4, 6).unwrap().is_zero());
        assert!(!jacobiator(&corrupted_elliptic(), 1, 2, 4).unwrap().is_zero());
        let report = verify_jacobi(&corrupted_elliptic(), -8, 8).unwrap();
        match report.verdict {
            Verdict::Fail(w) => {
                let (n, m, k) = w.triple;
                assert!(!jacobiator(&corrupted_elliptic(), n, m, k).unwrap().is_zero());
            }
            Verdict::Pass(_) => panic!("corrupted family passed"),
        }
    }

    #[test]
    fn witt_and_elliptic_pass() {
        let r = verify_jacobi(&catalog::witt(), -8, 8).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::Pass(Certificate::DegreeBound { degree: 2, values_per_parity: 8 })
        );
        assert!(verify_jacobi(&catalog::elliptic(), -8, 8).unwrap().verdict.passed());
    }

    #[test]
    fn small_window_is_rejected() {
        assert!(matches!(
            verify_jacobi(&catalog::witt(), 0, 4),
            Err(Error::WindowTooSmall(_))
        ));
        // the lower bound clips the window
        assert!(matches!(
            verify_jacobi(&catalog::l1_subalgebra(), -8, 4),
            Err(Error::WindowTooSmall(_))
        ));
    }

    #[test]
    fn l1_type_families_are_exhaustive_only() {
        let r = verify_jacobi(&catalog::formal_family(3).unwrap(), 1, 16).unwrap();
        assert_eq!(r.verdict, Verdict::Pass(Certificate::Exhaustive));
    }
}
