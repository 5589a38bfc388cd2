//! Coboundary witnesses by exact linear algebra on an index window.
//!
//! The unknown `Φ` is homogeneous of a fixed weight `w`, so
//! `Φ(v_n) = x_n v_{n+w}`, and `d₁Φ = ω` becomes one linear equation per
//! pair `n < m` and output degree. A solution of the closed-form ansatz is
//! certified globally by the degree-bound argument (each equation is a
//! polynomial of degree at most 2 in `(n, m)` on each parity class, away
//! from finitely many exceptional indices). An inconsistent window system
//! is a global certificate on its own: any global `Φ` would restrict to a
//! solution of it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::element::{BasisIndex, LieElement};
use crate::error::{Error, Result};
use crate::family::{is_odd, Affine, BasisDomain, FamilySpec, ShiftTerm};
use crate::jacobi::Certificate;
use crate::linalg::{InfeasibilityCertificate, LinearSystem, SolveOutcome};
use crate::poly::ParamPoly;
use crate::rational::Rational;

use super::{Cochain, Mode, Table, UnaryRule, DIFFERENTIAL_INDEX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// One unknown per parity of `n`.
    ParityConstant,
    /// `a·n + b` per parity of `n`.
    AffineInN,
    /// One unknown per index of the window.
    PerIndex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ansatz {
    pub weight: i64,
    pub shape: Shape,
    /// Fixed coefficients `Φ(v_n) = c·v_{n+w}`, overriding the shape.
    pub pinned: BTreeMap<i64, Rational>,
}

impl Ansatz {
    pub fn new(weight: i64, shape: Shape) -> Self {
        Ansatz {
            weight,
            shape,
            pinned: BTreeMap::new(),
        }
    }

    pub fn pin(mut self, n: i64, value: Rational) -> Self {
        self.pinned.insert(n, value);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub phi: Cochain,
    /// The extra scalar of [`compare_classes`].
    pub scalar: Option<Rational>,
    pub equations: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub enum CoboundaryOutcome {
    Found(Witness),
    /// The window system and multipliers proving it inconsistent.
    Infeasible {
        system: LinearSystem,
        certificate: InfeasibilityCertificate,
    },
}

impl CoboundaryOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CoboundaryOutcome::Found(w) => Some(w),
            CoboundaryOutcome::Infeasible { .. } => None,
        }
    }
}

/// `Σ coeff·x_i + constant`.
#[derive(Clone, Debug, Default)]
struct LinExpr {
    coeffs: BTreeMap<usize, Rational>,
    constant: Rational,
}

impl LinExpr {
    fn add_scaled(&mut self, other: &LinExpr, f: &Rational) {
        for (k, v) in &other.coeffs {
            let slot = self.coeffs.entry(*k).or_insert_with(Rational::zero);
            *slot += v * f;
        }
        self.constant += &other.constant * f;
    }

    fn constant(c: Rational) -> Self {
        LinExpr {
            coeffs: BTreeMap::new(),
            constant: c,
        }
    }

    fn unknown(i: usize, c: Rational) -> Self {
        LinExpr {
            coeffs: [(i, c)].into_iter().collect(),
            constant: Rational::zero(),
        }
    }
}

struct Layout<'a> {
    algebra: &'a FamilySpec,
    ansatz: &'a Ansatz,
    /// Unknown number of each window index, for the per-index shape.
    per_index: BTreeMap<i64, usize>,
    num_unknowns: usize,
}

impl Layout<'_> {
    /// Indices whose image would fall outside the basis domain.
    fn forced_zero(&self, n: i64) -> bool {
        !self.algebra.domain.contains(n + self.ansatz.weight)
    }

    /// The coefficient `x_n` of `Φ(v_n) = x_n v_{n+w}`; `None` if the window
    /// has no unknown for it.
    fn coefficient(&self, n: i64) -> Option<LinExpr> {
        if let Some(c) = self.ansatz.pinned.get(&n) {
            return Some(LinExpr::constant(c.clone()));
        }
        if self.forced_zero(n) {
            return Some(LinExpr::default());
        }
        let parity = usize::from(!is_odd(n));
        match self.ansatz.shape {
            Shape::ParityConstant => Some(LinExpr::unknown(parity, Rational::from_integer(1.into()))),
            Shape::AffineInN => {
                let mut e = LinExpr::unknown(2 * parity, Rational::from_integer(n.into()));
                e.coeffs.insert(2 * parity + 1, Rational::from_integer(1.into()));
                Some(e)
            }
            Shape::PerIndex => self.per_index.get(&n).map(|&i| LinExpr::unknown(i, Rational::from_integer(1.into()))),
        }
    }
}

fn rational_coeff(c: &ParamPoly) -> Result<Rational> {
    c.as_constant().ok_or(Error::NonRational)
}

fn vector_terms(el: &LieElement) -> Result<Vec<(i64, Rational)>> {
    el.iter()
        .filter(|(i, _)| **i != BasisIndex::Central)
        .map(|(i, c)| match i {
            BasisIndex::Vector(d) => Ok((*d, rational_coeff(c)?)),
            BasisIndex::Central => unreachable!(),
        })
        .collect()
}

/// Equations of `d₁Φ (+ c·β) = ω` for the pair `(n, m)`, or `None` if they
/// need an unknown the window does not have.
fn pair_equations(
    layout: &Layout,
    omega: &Cochain,
    beta: Option<(&Cochain, usize)>,
    n: i64,
    m: i64,
) -> Result<Option<Vec<(LinExpr, Rational)>>> {
    let alg = layout.algebra;
    let w = layout.ansatz.weight;
    let mut acc: BTreeMap<i64, LinExpr> = BTreeMap::new();
    let one = Rational::from_integer(1.into());
    // Φ([v_n, v_m])
    for (k, c) in vector_terms(&alg.bracket_basis(n, m)?)? {
        let Some(x) = layout.coefficient(k) else { return Ok(None) };
        acc.entry(k + w).or_default().add_scaled(&x, &c);
    }
    // −[Φ v_n, v_m] − [v_n, Φ v_m]
    for (a, b, first) in [(n, m, true), (m, n, false)] {
        let Some(x) = layout.coefficient(a) else { return Ok(None) };
        if layout.forced_zero(a) || (x.coeffs.is_empty() && x.constant.is_zero()) {
            continue;
        }
        let br = if first {
            alg.bracket_basis(a + w, b)?
        } else {
            alg.bracket_basis(b, a + w)?
        };
        for (k, c) in vector_terms(&br)? {
            acc.entry(k).or_default().add_scaled(&x, &-c);
        }
    }
    if let Some((beta, slot)) = beta {
        for (k, c) in vector_terms(&beta.eval(&[n, m])?)? {
            acc.entry(k).or_default().add_scaled(&LinExpr::unknown(slot, one.clone()), &c);
        }
    }
    let target: BTreeMap<i64, Rational> = vector_terms(&omega.eval(&[n, m])?)?.into_iter().collect();
    let degrees: BTreeSet<i64> = acc.keys().chain(target.keys()).copied().collect();
    Ok(Some(
        degrees
            .into_iter()
            .map(|d| {
                let lhs = acc.remove(&d).unwrap_or_default();
                let rhs = target.get(&d).cloned().unwrap_or_else(Rational::zero) - &lhs.constant;
                (lhs, rhs)
            })
            .collect(),
    ))
}

/// Exceptional indices of the problem: pins, forced zeros and exceptional
/// rows of the algebra and the cochains.
fn exceptional_indices(layout: &Layout, lo: i64, cochains: &[&Cochain]) -> BTreeSet<i64> {
    let mut out: BTreeSet<i64> = layout.ansatz.pinned.keys().copied().collect();
    out.extend(layout.algebra.rule.exceptional.iter().map(|r| r.index));
    for c in cochains {
        if let Table::Binary(rule) = &c.table {
            out.extend(rule.exceptional.iter().map(|r| r.index));
        }
    }
    if let BasisDomain::AtLeast(b) = layout.algebra.domain {
        out.extend((b.min(lo)..b - layout.ansatz.weight).filter(|&n| layout.forced_zero(n)));
    }
    out
}

/// The degree-bound certificate for a closed-form solution, if the window
/// supports it.
fn closed_form_certificate(layout: &Layout, idx: &[i64], lo: i64, cochains: &[&Cochain]) -> Option<Certificate> {
    if layout.algebra.central.is_some() || !cochains.iter().all(|c| matches!(c.table, Table::Binary(_))) {
        return None;
    }
    let special = exceptional_indices(layout, lo, cochains);
    let regular: Vec<i64> = match layout.algebra.domain {
        BasisDomain::All if special.is_empty() => idx.to_vec(),
        BasisDomain::All => return None,
        BasisDomain::AtLeast(b) => {
            // all of [b, T] must be in the window, and the polynomial region
            // above T needs enough values per parity
            let t = special.iter().next_back().copied().unwrap_or(b - 1).max(b - 1);
            if idx.first() != Some(&b) || idx.iter().filter(|&&n| n <= t).count() as i64 != t - b + 1 {
                return None;
            }
            idx.iter().copied().filter(|&n| n > t).collect()
        }
    };
    let odd = regular.iter().filter(|&&n| is_odd(n)).count();
    let per_parity = odd.min(regular.len() - odd);
    (per_parity > DIFFERENTIAL_INDEX_DEGREE as usize).then_some(Certificate::DegreeBound {
        degree: DIFFERENTIAL_INDEX_DEGREE,
        values_per_parity: per_parity,
    })
}

fn check_binary_adjoint(c: &Cochain) -> Result<()> {
    if c.arity != 2 {
        return Err(Error::ArityUnsupported(c.arity));
    }
    if c.mode != Mode::Adjoint {
        return Err(Error::ModeMismatch);
    }
    Ok(())
}

fn solve(algebra: &FamilySpec, omega: &Cochain, beta: Option<&Cochain>, ansatz: &Ansatz, lo: i64, hi: i64) -> Result<CoboundaryOutcome> {
    check_binary_adjoint(omega)?;
    if let Some(b) = beta {
        check_binary_adjoint(b)?;
    }
    let idx: Vec<i64> = (lo..=hi).filter(|&n| algebra.domain.contains(n)).collect();
    if idx.len() < 2 {
        return Err(Error::WindowTooSmall(format!("[{lo}, {hi}]")));
    }
    let mut layout = Layout {
        algebra,
        ansatz,
        per_index: BTreeMap::new(),
        num_unknowns: 0,
    };
    layout.num_unknowns = match ansatz.shape {
        Shape::ParityConstant => 2,
        Shape::AffineInN => 4,
        Shape::PerIndex => {
            let free: Vec<i64> = idx
                .iter()
                .copied()
                .filter(|&n| !ansatz.pinned.contains_key(&n) && !layout.forced_zero(n))
                .collect();
            layout.per_index = free.iter().enumerate().map(|(i, &n)| (n, i)).collect();
            free.len()
        }
    };
    let scalar_slot = beta.map(|_| layout.num_unknowns);
    let total = layout.num_unknowns + usize::from(beta.is_some());
    let mut system = LinearSystem::new(total);
    for (i, &n) in idx.iter().enumerate() {
        for &m in &idx[i + 1..] {
            let eqs = pair_equations(&layout, omega, beta.zip(scalar_slot), n, m)?;
            for (lhs, rhs) in eqs.into_iter().flatten() {
                system.push(lhs.coeffs.into_iter().filter(|(_, v)| !v.is_zero()), rhs);
            }
        }
    }
    let solution = match system.solve() {
        SolveOutcome::Solved(s) => s,
        SolveOutcome::Inconsistent(certificate) => return Ok(CoboundaryOutcome::Infeasible { system, certificate }),
    };
    let x = &solution.values;
    let w = ansatz.weight;
    let at = |n: i64, c: Rational| LieElement::from_vectors([(n + w, c)]);
    let phi = match ansatz.shape {
        Shape::ParityConstant | Shape::AffineInN => {
            // parity slot 0 is odd n, 1 is even n
            let part = |p: usize| -> (Rational, Rational) {
                if ansatz.shape == Shape::ParityConstant {
                    (Rational::zero(), x[p].clone())
                } else {
                    (x[2 * p].clone(), x[2 * p + 1].clone())
                }
            };
            let (a, b) = (part(0), part(1));
            let term = |(a, b): (Rational, Rational)| {
                vec![ShiftTerm::new(w, Affine::new(ParamPoly::constant(a), ParamPoly::zero(), ParamPoly::constant(b)))]
            };
            let mut pinned: BTreeMap<i64, LieElement> = ansatz.pinned.iter().map(|(n, c)| (*n, at(*n, c.clone()))).collect();
            if let BasisDomain::AtLeast(bnd) = algebra.domain {
                for n in bnd..bnd - w.min(0) {
                    if layout.forced_zero(n) {
                        pinned.insert(n, LieElement::zero());
                    }
                }
            }
            Cochain::unary(UnaryRule {
                odd: term(a),
                even: term(b),
                pinned,
            })
        }
        Shape::PerIndex => {
            let mut entries: Vec<(Vec<i64>, LieElement)> = layout.per_index.iter().map(|(n, i)| (vec![*n], at(*n, x[*i].clone()))).collect();
            entries.extend(ansatz.pinned.iter().map(|(n, c)| (vec![*n], at(*n, c.clone()))));
            Cochain::explicit(1, Mode::Adjoint, entries)
        }
    };
    let cochains: Vec<&Cochain> = core::iter::once(omega).chain(beta).collect();
    let certificate = match ansatz.shape {
        Shape::PerIndex => Certificate::Exhaustive,
        _ => closed_form_certificate(&layout, &idx, lo, &cochains).ok_or_else(|| {
            Error::AnsatzTooWeak(format!(
                "a solution exists on [{lo}, {hi}] but the window does not certify the closed form"
            ))
        })?,
    };
    Ok(CoboundaryOutcome::Found(Witness {
        phi,
        scalar: scalar_slot.map(|s| x[s].clone()),
        equations: system.num_equations(),
        certificate,
    }))
}

/// Solves `d₁Φ = ω` on the pairs `n < m` of `[lo, hi]`.
pub fn solve_coboundary(algebra: &FamilySpec, omega: &Cochain, ansatz: &Ansatz, lo: i64, hi: i64) -> Result<CoboundaryOutcome> {
    solve(algebra, omega, None, ansatz, lo, hi)
}

/// Solves `ω − d₁Φ = c·β` for `Φ` and the scalar `c`.
pub fn compare_classes(
    algebra: &FamilySpec,
    omega: &Cochain,
    beta: &Cochain,
    ansatz: &Ansatz,
    lo: i64,
    hi: i64,
) -> Result<CoboundaryOutcome> {
    solve(algebra, omega, Some(beta), ansatz, lo, hi)
}

#[cfg(test)]
mod tests {
    use super::super::{agree_on_window, differential, named};
    use super::*;
    use crate::catalog;
    use crate::rational::{int, rat};

    fn found(o: CoboundaryOutcome) -> Witness {
        match o {
            CoboundaryOutcome::Found(w) => w,
            CoboundaryOutcome::Infeasible { .. } => panic!("expected a witness"),
        }
    }

    #[test]
    fn printed_phi_is_recovered() {
        let witt = catalog::witt();
        let w = found(solve_coboundary(&witt, &named::omega_first(), &Ansatz::new(-2, Shape::ParityConstant), -12, 12).unwrap());
        assert_eq!(w.phi, named::phi_first());
        assert!(matches!(w.certificate, Certificate::DegreeBound { .. }));
        let w = found(solve_coboundary(&witt, &named::omega_second(), &Ansatz::new(-4, Shape::ParityConstant), -12, 12).unwrap());
        assert_eq!(w.phi, named::phi_second());
    }

    #[test]
    fn gamma_one_per_index() {
        let l1 = catalog::l1_subalgebra();
        let w = found(solve_coboundary(&l1, &named::beta(1).unwrap(), &Ansatz::new(-1, Shape::PerIndex), 1, 16).unwrap());
        for n in 2..=12 {
            assert_eq!(w.phi.eval(&[n]).unwrap(), LieElement::from_vectors([(n - 1, rat(n - 1, 2))]));
        }
        let d = differential(&l1, &w.phi).unwrap();
        assert!(agree_on_window(BasisDomain::AtLeast(1), &d, &named::beta(1).unwrap(), 1, 8).unwrap().is_none());
    }

    #[test]
    fn beta_three_is_not_a_coboundary() {
        let l1 = catalog::l1_subalgebra();
        match solve_coboundary(&l1, &named::beta(3).unwrap(), &Ansatz::new(-2, Shape::PerIndex), 1, 24).unwrap() {
            CoboundaryOutcome::Infeasible { system, certificate } => assert!(system.certifies(&certificate)),
            CoboundaryOutcome::Found(w) => panic!("unexpected witness {:?}", w.phi),
        }
    }

    #[test]
    fn l1_comparison() {
        let l1 = catalog::l1_subalgebra();
        let ansatz = Ansatz::new(-2, Shape::AffineInN).pin(1, int(0)).pin(2, int(0));
        let w = found(compare_classes(&l1, &named::l1_omega().unwrap(), &named::beta(3).unwrap(), &ansatz, 1, 24).unwrap());
        assert_eq!(w.scalar, Some(rat(1, 3)));
        for m in 1..=20 {
            assert_eq!(w.phi.eval(&[m]).unwrap(), named::l1_phi().eval(&[m]).unwrap(), "m = {m}");
        }
        assert!(matches!(w.certificate, Certificate::DegreeBound { .. }));
        assert_ne!(w.phi.eval(&[3]).unwrap(), named::l1_phi_printed().eval(&[3]).unwrap());
    }

    #[test]
    fn trivial_comparisons() {
        let witt = catalog::witt();
        let zero = Cochain::binary(Default::default());
        let w = found(compare_classes(&witt, &named::omega_first(), &zero, &Ansatz::new(-2, Shape::ParityConstant), -10, 10).unwrap());
        assert_eq!(w.phi, named::phi_first());
        let l1 = catalog::l1_subalgebra();
        let b3 = named::beta(3).unwrap();
        let w = found(compare_classes(&l1, &b3, &b3, &Ansatz::new(-2, Shape::PerIndex), 1, 16).unwrap());
        assert_eq!(w.scalar, Some(int(1)));
        assert!(w.phi.eval(&[7]).unwrap().is_zero());
    }

    #[test]
    fn too_weak_window() {
        let witt = catalog::witt();
        let r = solve_coboundary(&witt, &named::omega_first(), &Ansatz::new(-2, Shape::ParityConstant).pin(0, int(-3)), -12, 12);
        assert!(matches!(r, Err(Error::AnsatzTooWeak(_))));
    }
}
