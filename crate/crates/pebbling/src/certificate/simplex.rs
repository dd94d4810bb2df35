//! Exact simplex solver over arbitrary-precision rationals.
//!
//! Solves `maximize c·x subject to A x <= b, x >= 0` where every entry of
//! `b` is nonnegative, so the slack variables form a feasible starting
//! basis.  Pivoting follows Bland's rule (least-index entering column,
//! least-index basic variable on ratio ties), which guarantees termination
//! without any tolerance fiddling — all arithmetic is exact.

use crate::error::{Error, Result};
use num::{BigRational, One, Signed, Zero};

/// Result of an exact linear-program maximization.
#[derive(Debug, Clone)]
pub struct LpSolution {
    /// Optimal objective value.
    pub optimum: BigRational,
    /// An optimal assignment to the structural variables.
    pub primal: Vec<BigRational>,
    /// Optimal dual multipliers, one per constraint row.  They certify the
    /// optimum: `dual >= 0`, `Aᵀ·dual >= c` componentwise, and
    /// `b·dual = optimum`.
    pub dual: Vec<BigRational>,
}

/// Maximizes `c·x` over `A x <= b, x >= 0` exactly.
///
/// Requires every entry of `b` to be nonnegative (the origin is feasible).
/// Returns an error when a row length disagrees with `c` or when the
/// program is unbounded.
pub fn maximize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> Result<LpSolution> {
    let m = a.len();
    let n = c.len();
    if b.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter(
            "linear program dimensions disagree".into(),
        ));
    }
    if b.iter().any(|v| v.is_negative()) {
        return Err(Error::InvalidParameter(
            "linear program right-hand side must be nonnegative".into(),
        ));
    }

    // Tableau rows: [structural columns | slack columns | rhs].
    let width = n + m + 1;
    let mut rows: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            row.extend(a[i].iter().cloned());
            for j in 0..m {
                row.push(if j == i {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row.push(b[i].clone());
            row
        })
        .collect();
    // Objective row holds reduced costs; its rhs accumulates the objective
    // value as pivots are applied.
    let mut obj: Vec<BigRational> = c.iter().map(|v| -v.clone()).collect();
    obj.extend(std::iter::repeat_with(BigRational::zero).take(m + 1));
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering column is the least index with a negative reduced
        // cost.
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Ratio test; ties broken toward the least basic-variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if rows[i][enter].is_positive() {
                let ratio = &rows[i][width - 1] / &rows[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(pivot_row) = leave else {
            return Err(Error::InvalidParameter(
                "linear program is unbounded".into(),
            ));
        };

        // Pivot: normalize the row, eliminate the column elsewhere.
        let factor = rows[pivot_row][enter].clone();
        for entry in rows[pivot_row].iter_mut() {
            *entry /= &factor;
        }
        for i in 0..m {
            if i != pivot_row && !rows[i][enter].is_zero() {
                let scale = rows[i][enter].clone();
                for j in 0..width {
                    let delta = &scale * &rows[pivot_row][j];
                    rows[i][j] -= delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let scale = obj[enter].clone();
            for j in 0..width {
                let delta = &scale * &rows[pivot_row][j];
                obj[j] -= delta;
            }
        }
        basis[pivot_row] = enter;
    }

    let optimum = obj[width - 1].clone();
    let mut primal = vec![BigRational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            primal[var] = rows[i][width - 1].clone();
        }
    }
    let dual: Vec<BigRational> = (0..m).map(|i| obj[n + i].clone()).collect();
    Ok(LpSolution {
        optimum,
        primal,
        dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn check_duality(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational], s: &LpSolution) {
        for y in &s.dual {
            assert!(!y.is_negative());
        }
        for (j, cj) in c.iter().enumerate() {
            let col: BigRational = (0..a.len()).map(|i| &s.dual[i] * &a[i][j]).sum();
            assert!(col >= *cj, "dual infeasible at column {j}");
        }
        let value: BigRational = (0..a.len()).map(|i| &s.dual[i] * &b[i]).sum();
        assert_eq!(value, s.optimum);
        for (i, row) in a.iter().enumerate() {
            let lhs: BigRational = (0..c.len()).map(|j| &row[j] * &s.primal[j]).sum();
            assert!(lhs <= b[i], "primal infeasible at row {i}");
        }
        let attained: BigRational = (0..c.len()).map(|j| &c[j] * &s.primal[j]).sum();
        assert_eq!(attained, s.optimum);
    }

    #[test]
    fn two_variable_program() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6; optimum at (8/5, 6/5).
        let a = vec![vec![q(1), q(2)], vec![q(3), q(1)]];
        let b = vec![q(4), q(6)];
        let c = vec![q(1), q(1)];
        let s = maximize(&a, &b, &c).unwrap();
        assert_eq!(s.optimum, qr(14, 5));
        assert_eq!(s.primal, vec![qr(8, 5), qr(6, 5)]);
        check_duality(&a, &b, &c, &s);
    }

    #[test]
    fn fractional_data() {
        // max 2x + 3y s.t. x/2 + y <= 3/2, x <= 2.
        let a = vec![vec![qr(1, 2), q(1)], vec![q(1), q(0)]];
        let b = vec![qr(3, 2), q(2)];
        let c = vec![q(2), q(3)];
        let s = maximize(&a, &b, &c).unwrap();
        assert_eq!(s.optimum, qr(11, 2));
        check_duality(&a, &b, &c, &s);
    }

    #[test]
    fn degenerate_rhs_terminates() {
        // A zero right-hand side forces degenerate pivots; Bland's rule must
        // still terminate.
        let a = vec![vec![q(1), q(-1)], vec![q(-1), q(1)], vec![q(1), q(1)]];
        let b = vec![q(0), q(0), q(2)];
        let c = vec![q(1), q(1)];
        let s = maximize(&a, &b, &c).unwrap();
        assert_eq!(s.optimum, q(2));
        check_duality(&a, &b, &c, &s);
    }

    #[test]
    fn unbounded_is_reported() {
        let a = vec![vec![q(-1), q(0)]];
        let b = vec![q(1)];
        let c = vec![q(1), q(1)];
        assert!(maximize(&a, &b, &c).is_err());
    }

    #[test]
    fn zero_objective() {
        let a = vec![vec![q(1)]];
        let b = vec![q(5)];
        let c = vec![q(0)];
        let s = maximize(&a, &b, &c).unwrap();
        assert!(s.optimum.is_zero());
        check_duality(&a, &b, &c, &s);
    }
}
