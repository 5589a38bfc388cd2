//! Codimension of the commutator ideal for algebras on `n ≥ 1`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::{BasisDomain, FamilySpec};
use crate::linalg;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codimension {
    pub window: i64,
    pub codim: usize,
    /// Value at `window + 4`.
    pub codim_next: usize,
    pub stabilized: bool,
}

/// Codimension of the span of `[v_n, v_m]` (all outputs inside `[1, K]`,
/// `K = N − |R|`) in the coordinate space `⟨v_1, …, v_K⟩`.
fn codim_at(family: &FamilySpec, n_max: i64) -> Result<usize> {
    let bounds = family.grading_bounds();
    let k = n_max - bounds.lower.abs();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for n in 1..=k {
        for m in (n + 1)..=k {
            if n + m + bounds.upper > k {
                break;
            }
            let el = family.bracket_basis(n, m)?;
            let mut row = vec![Rational::zero(); k as usize];
            for (deg, c) in el.degrees().into_iter().map(|d| (d, el.vector_coeff(d))) {
                let c = c.as_constant().ok_or(Error::NonRational)?;
                row[(deg - 1) as usize] = c;
            }
            rows.push(row);
        }
    }
    Ok(k as usize - linalg::rank(&rows))
}

pub fn abelianization_codim(family: &FamilySpec, n_max: i64) -> Result<Codimension> {
    if family.domain != BasisDomain::AtLeast(1) {
        return Err(Error::UnsupportedFamily(format!("{} is not bounded below by 1", family.name)));
    }
    if n_max < 8 {
        return Err(Error::WindowTooSmall(format!("N = {n_max} < 8")));
    }
    if !family.is_parameter_free() {
        return Err(Error::NonRational);
    }
    let codim = codim_at(family, n_max)?;
    let codim_next = codim_at(family, n_max + 4)?;
    Ok(Codimension {
        window: n_max,
        codim,
        codim_next,
        stabilized: codim == codim_next,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::int;

    #[test]
    fn l1_has_two_generators() {
        let c = abelianization_codim(&catalog::l1_subalgebra(), 16).unwrap();
        assert_eq!((c.codim, c.stabilized), (2, true));
    }

    #[test]
    fn w1_at_alpha_one() {
        let w1 = catalog::w1_alpha2().specialize(&[("alpha2", int(1))]).unwrap();
        let c = abelianization_codim(&w1, 16).unwrap();
        assert_eq!((c.codim, c.stabilized), (2, true));
    }

    #[test]
    fn formal_families_two_and_three() {
        for i in [2, 3] {
            let f = catalog::formal_family(i).unwrap().specialize(&[("t", int(1))]).unwrap();
            assert_eq!(abelianization_codim(&f, 16).unwrap().codim, 1, "family {i}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            abelianization_codim(&catalog::l1_subalgebra(), 6),
            Err(Error::WindowTooSmall(_))
        ));
        assert!(matches!(
            abelianization_codim(&catalog::w1_alpha2(), 16),
            Err(Error::NonRational)
        ));
        assert!(abelianization_codim(&catalog::witt(), 16).is_err());
    }
}
