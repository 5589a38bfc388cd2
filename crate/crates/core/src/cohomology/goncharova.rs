//! Graded cohomology of `L_1 = ⟨l_n | n ≥ 1⟩` with trivial coefficients.
//!
//! `C^q_(s)` has the basis of duals of `l_{i_1} ∧ … ∧ l_{i_q}` with
//! `1 ≤ i_1 < … < i_q` and `Σ i = s`, and the differential preserves `s`,
//! so each graded piece is a finite complex.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg;
use crate::rational::{self, Rational};

use super::sort_with_sign;

/// Strictly increasing `q`-tuples of positive integers with sum `s`.
pub fn partitions(q: usize, s: i64) -> Vec<Vec<i64>> {
    fn go(q: usize, s: i64, min: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if q == 0 {
            if s == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // the remaining q parts are at least min, min+1, …
        let mut a = min;
        while a * q as i64 + (q as i64 * (q as i64 - 1)) / 2 <= s {
            cur.push(a);
            go(q - 1, s - a, a + 1, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    if q == 0 {
        if s == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(q, s, 1, &mut Vec::new(), &mut out);
    out
}

/// The matrix of `d: C^q_(s) → C^{q+1}_(s)`; rows are indexed by the
/// target basis, columns by the source basis.
///
/// `(dφ)(x_0, …, x_q) = Σ_{i<j} (−1)^{i+j} φ([x_i, x_j], x_0, …, x̂_i, …, x̂_j, …)`
/// with `[l_a, l_b] = (b − a) l_{a+b}`.
pub fn differential_matrix(q: usize, s: i64) -> Vec<Vec<Rational>> {
    let source = partitions(q, s);
    let target = partitions(q + 1, s);
    let col: BTreeMap<&Vec<i64>, usize> = source.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rows = Vec::with_capacity(target.len());
    for t in &target {
        let mut row = vec![Rational::zero(); source.len()];
        for i in 0..t.len() {
            for j in (i + 1)..t.len() {
                let mut args = vec![t[i] + t[j]];
                args.extend(t.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, a)| *a));
                let Some((sorted, even)) = sort_with_sign(&args) else { continue };
                let mut c = rational::int(t[j] - t[i]);
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                if !even {
                    c = -c;
                }
                row[col[&sorted]] += c;
            }
        }
        rows.push(row);
    }
    rows
}

/// `C^{q−1}_(s) → C^q_(s) → C^{q+1}_(s)` as explicit matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplexSlice {
    pub q: usize,
    pub s: i64,
    pub dim: usize,
    /// `d_{q−1}`, `dim × dim C^{q−1}`.
    pub incoming: Vec<Vec<Rational>>,
    /// `d_q`, `dim C^{q+1} × dim`.
    pub outgoing: Vec<Vec<Rational>>,
}

impl GradedComplexSlice {
    pub fn new(q: usize, s: i64) -> Self {
        let incoming = if q == 0 { Vec::new() } else { differential_matrix(q - 1, s) };
        GradedComplexSlice {
            q,
            s,
            dim: partitions(q, s).len(),
            incoming,
            outgoing: differential_matrix(q, s),
        }
    }

    /// `dim ker d_q − rank d_{q−1}`.
    pub fn cohomology_dim(&self) -> usize {
        let kernel = self.dim - linalg::rank(&self.outgoing);
        kernel - linalg::rank(&self.incoming)
    }

    /// `d_q ∘ d_{q−1} = 0` as matrices.
    pub fn composition_vanishes(&self) -> bool {
        if self.incoming.is_empty() || self.outgoing.is_empty() {
            return true;
        }
        let inner = self.incoming[0].len();
        self.outgoing.iter().all(|row| {
            (0..inner).all(|k| {
                let mut acc = Rational::zero();
                for (j, a) in row.iter().enumerate() {
                    acc += a * &self.incoming[j][k];
                }
                acc.is_zero()
            })
        })
    }
}

pub fn goncharova_dim(q: usize, s: i64) -> usize {
    GradedComplexSlice::new(q, s).cohomology_dim()
}

/// `dim H^q_(s)(L_1)` for `1 ≤ q ≤ q_max`, `1 ≤ s ≤ s_max`, as rows per `q`.
pub fn goncharova_table(q_max: usize, s_max: i64) -> Vec<(usize, Vec<usize>)> {
    (1..=q_max)
        .map(|q| (q, (1..=s_max).map(|s| goncharova_dim(q, s)).collect()))
        .collect()
}

/// `s = (3q² ± q)/2`.
pub fn goncharova_predicted(q: usize, s: i64) -> usize {
    let q = q as i64;
    usize::from(2 * s == 3 * q * q + q || 2 * s == 3 * q * q - q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_pieces() {
        assert_eq!(partitions(2, 5), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(goncharova_dim(1, 1), 1);
        assert_eq!(goncharova_dim(1, 2), 1);
        assert_eq!(goncharova_dim(1, 3), 0);
        assert_eq!(goncharova_dim(2, 5), 1);
        assert_eq!(goncharova_dim(2, 6), 0);
    }

    #[test]
    fn d_squared_is_zero() {
        for q in 1..=3 {
            for s in 1..=16 {
                assert!(GradedComplexSlice::new(q, s).composition_vanishes(), "q={q} s={s}");
            }
        }
    }

    #[test]
    fn table_matches_the_pentagonal_numbers() {
        for (q, row) in goncharova_table(3, 20) {
            for (i, d) in row.into_iter().enumerate() {
                let s = i as i64 + 1;
                assert_eq!(d, goncharova_predicted(q, s), "q={q} s={s}");
            }
        }
    }
}
