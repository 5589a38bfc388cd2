//! Exact Gaussian elimination.
//!
//! Over ℚ the solver either returns a solution (free variables set to zero)
//! or a certificate of inconsistency: multipliers `y` with `yᵀA = 0` and
//! `yᵀb = 1`, which anyone can re-check without trusting the elimination.
//! Over polynomial coefficients only unit (nonzero constant) pivots are
//! used, which covers the triangular systems of basis re-expansion.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::ParamPoly;
use crate::rational::Rational;

type SparseRow = BTreeMap<usize, Rational>;

/// `A x = b` with sparse rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    pub num_unknowns: usize,
    rows: Vec<SparseRow>,
    rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<Rational>,
    pub rank: usize,
    /// Unknowns left undetermined (set to zero in `values`).
    pub free: Vec<usize>,
}

/// `Σ_r y_r (row_r, rhs_r) = (0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub multipliers: Vec<(usize, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(Solution),
    Inconsistent(InfeasibilityCertificate),
}

impl LinearSystem {
    pub fn new(num_unknowns: usize) -> Self {
        LinearSystem {
            num_unknowns,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Adds an equation; returns its row number.
    pub fn push(&mut self, coeffs: impl IntoIterator<Item = (usize, Rational)>, rhs: Rational) -> usize {
        let mut row = SparseRow::new();
        for (j, c) in coeffs {
            assert!(j < self.num_unknowns, "unknown {j} out of range");
            let e = row.entry(j).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                row.remove(&j);
            }
        }
        self.rows.push(row);
        self.rhs.push(rhs);
        self.rows.len() - 1
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, r: usize) -> (&BTreeMap<usize, Rational>, &Rational) {
        (&self.rows[r], &self.rhs[r])
    }

    /// Re-checks a certificate against the original equations.
    pub fn certifies(&self, cert: &InfeasibilityCertificate) -> bool {
        let mut lhs = SparseRow::new();
        let mut rhs = Rational::zero();
        for (r, y) in &cert.multipliers {
            for (j, a) in &self.rows[*r] {
                *lhs.entry(*j).or_insert_with(Rational::zero) += a * y;
            }
            rhs += &self.rhs[*r] * y;
        }
        lhs.values().all(Zero::is_zero) && rhs.is_one()
    }

    pub fn residual_is_zero(&self, x: &[Rational]) -> bool {
        self.rows.iter().zip(&self.rhs).all(|(row, b)| {
            let lhs: Rational = row.iter().map(|(j, a)| a * &x[*j]).sum();
            &lhs == b
        })
    }

    pub fn solve(&self) -> SolveOutcome {
        let nrows = self.rows.len();
        let mut rows = self.rows.clone();
        let mut rhs = self.rhs.clone();
        // combination of original rows that each working row equals
        let mut combos: Vec<SparseRow> = (0..nrows)
            .map(|r| {
                let mut m = SparseRow::new();
                m.insert(r, Rational::one());
                m
            })
            .collect();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.num_unknowns];
        let mut used = vec![false; nrows];

        for col in 0..self.num_unknowns {
            let Some(p) = (0..nrows).find(|&r| !used[r] && rows[r].contains_key(&col)) else {
                continue;
            };
            used[p] = true;
            pivot_of_col[col] = Some(p);
            let inv = rows[p][&col].recip();
            scale_row(&mut rows[p], &inv);
            rhs[p] *= &inv;
            scale_row(&mut combos[p], &inv);
            let (prow, prhs, pcombo) = (rows[p].clone(), rhs[p].clone(), combos[p].clone());
            for r in 0..nrows {
                if r == p {
                    continue;
                }
                let Some(f) = rows[r].get(&col).cloned() else { continue };
                axpy(&mut rows[r], &prow, &f);
                rhs[r] -= &prhs * &f;
                axpy(&mut combos[r], &pcombo, &f);
            }
        }

        for r in 0..nrows {
            if !used[r] && !rhs[r].is_zero() {
                let inv = rhs[r].recip();
                let multipliers = combos[r].iter().map(|(i, y)| (*i, y * &inv)).collect();
                return SolveOutcome::Inconsistent(InfeasibilityCertificate { multipliers });
            }
        }

        let mut values = vec![Rational::zero(); self.num_unknowns];
        let mut free = Vec::new();
        let mut rank = 0;
        for (col, p) in pivot_of_col.iter().enumerate() {
            match p {
                Some(p) => {
                    rank += 1;
                    values[col] = rhs[*p].clone();
                }
                None => free.push(col),
            }
        }
        SolveOutcome::Solved(Solution { values, rank, free })
    }
}

fn scale_row(row: &mut SparseRow, f: &Rational) {
    for v in row.values_mut() {
        *v *= f;
    }
}

/// `row -= f * other`
fn axpy(row: &mut SparseRow, other: &SparseRow, f: &Rational) {
    for (j, a) in other {
        let e = row.entry(*j).or_insert_with(Rational::zero);
        *e -= a * f;
        if e.is_zero() {
            row.remove(j);
        }
    }
}

/// Rank of a dense rational matrix.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot) {
                *v -= pv * &f;
            }
        }
        rank += 1;
    }
    rank
}

/// Result of eliminating a polynomial system with unit pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolySolveOutcome {
    /// Unique solution (full column rank).
    Unique(Vec<ParamPoly>),
    /// Consistent, but these unknowns are undetermined.
    Underdetermined(Vec<usize>),
    /// The given original equation cannot be satisfied.
    Inconsistent(usize),
}

/// Solves `A x = b` over ℚ[params] using only constant pivots.
pub fn solve_unit_pivot(a: &[Vec<ParamPoly>], b: &[ParamPoly]) -> Result<PolySolveOutcome> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<ParamPoly>> = a.to_vec();
    let mut rhs: Vec<ParamPoly> = b.to_vec();
    let mut origin: Vec<usize> = (0..nrows).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let unit = (rank..nrows).find(|&r| m[r][col].as_constant().is_some_and(|c| !c.is_zero()));
        let Some(p) = unit else {
            if (rank..nrows).any(|r| !m[r][col].is_zero()) {
                return Err(Error::NonUnitPivot(col));
            }
            continue;
        };
        m.swap(rank, p);
        rhs.swap(rank, p);
        origin.swap(rank, p);
        let inv = m[rank][col].as_constant().unwrap().recip();
        for v in m[rank].iter_mut() {
            *v = v.scale(&inv);
        }
        rhs[rank] = rhs[rank].scale(&inv);
        let (pivot, prhs) = (m[rank].clone(), rhs[rank].clone());
        for r in 0..nrows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for (v, pv) in m[r].iter_mut().zip(&pivot) {
                *v -= &(pv * &f);
            }
            rhs[r] -= &(&prhs * &f);
        }
        pivots.push(col);
        rank += 1;
    }
    if let Some(r) = (rank..nrows).find(|&r| !rhs[r].is_zero()) {
        return Ok(PolySolveOutcome::Inconsistent(origin[r]));
    }
    if rank < ncols {
        let free = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        return Ok(PolySolveOutcome::Underdetermined(free));
    }
    let mut x = vec![ParamPoly::zero(); ncols];
    for (row, col) in pivots.iter().enumerate() {
        x[*col] = rhs[row].clone();
    }
    Ok(PolySolveOutcome::Unique(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn solves_and_reports_free_variables() {
        let mut sys = LinearSystem::new(3);
        sys.push([(0, int(1)), (1, int(1))], int(3));
        sys.push([(0, int(1)), (1, int(-1))], int(1));
        let SolveOutcome::Solved(sol) = sys.solve() else { panic!() };
        assert_eq!(sol.values, vec![int(2), int(1), int(0)]);
        assert_eq!(sol.rank, 2);
        assert_eq!(sol.free, vec![2]);
        assert!(sys.residual_is_zero(&sol.values));
    }

    #[test]
    fn inconsistency_certificate_checks_out() {
        let mut sys = LinearSystem::new(2);
        sys.push([(0, int(1)), (1, int(2))], int(1));
        sys.push([(0, int(2)), (1, int(4))], int(3));
        sys.push([(1, rat(1, 3))], int(0));
        let SolveOutcome::Inconsistent(cert) = sys.solve() else { panic!() };
        assert!(sys.certifies(&cert));
    }

    #[test]
    fn dense_rank() {
        let m = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn unit_pivots_over_polynomials() {
        let a2 = ParamPoly::var(0);
        // x0 - a2 x1 = 1, x1 = a2
        let a = vec![
            vec![ParamPoly::one(), -a2.clone()],
            vec![ParamPoly::zero(), ParamPoly::one()],
        ];
        let b = vec![ParamPoly::one(), a2.clone()];
        let out = solve_unit_pivot(&a, &b).unwrap();
        assert_eq!(out, PolySolveOutcome::Unique(vec![&ParamPoly::one() + &a2.pow(2), a2.clone()]));
        let bad = vec![vec![a2.clone()]];
        assert_eq!(solve_unit_pivot(&bad, &[ParamPoly::one()]), Err(Error::NonUnitPivot(0)));
    }
}
