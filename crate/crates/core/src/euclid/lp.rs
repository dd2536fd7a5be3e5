//! Phase-one simplex for small dense feasibility problems `A x = b, x ≥ 0`.

use thiserror::Error;

#[derive(Debug, Clone, Copy, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("simplex did not converge within {0} pivots")]
    IterationLimit(usize),
    #[error("no admissible pivot although the objective can still improve")]
    Degenerate,
}

const PIVOT_TOL: f64 = 1e-11;

/// Decides whether `A x = b, x ≥ 0` has a solution with residual at most
/// `eps`. `a` is row-major with `rows` rows and `cols` columns.
pub(crate) fn feasible(a: &[f64], b: &[f64], rows: usize, cols: usize, eps: f64) -> Result<bool, LpError> {
    debug_assert_eq!(a.len(), rows * cols);
    // tableau columns: originals, artificials, rhs
    let width = cols + rows + 1;
    let mut t = vec![0.0; (rows + 1) * width];
    for i in 0..rows {
        let sign = if b[i] < 0.0 { -1.0 } else { 1.0 };
        let row = &mut t[i * width..(i + 1) * width];
        for j in 0..cols {
            row[j] = sign * a[i * cols + j];
        }
        row[cols + i] = 1.0;
        row[width - 1] = sign * b[i];
    }
    // objective row: minimize the sum of artificials, priced out of the basis
    let obj = rows * width;
    for i in 0..rows {
        for j in 0..cols {
            t[obj + j] -= t[i * width + j];
        }
        t[obj + width - 1] -= t[i * width + width - 1];
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    let limit = 50 * (rows + cols) + 100;
    // switch from steepest reduced cost to Bland's rule if progress stalls
    let bland_after = 5 * (rows + cols);
    for iter in 0..limit {
        if -t[obj + width - 1] <= eps {
            return Ok(true);
        }
        let entering = if iter < bland_after {
            let mut best = None;
            let mut best_val = -PIVOT_TOL;
            for j in 0..cols + rows {
                if t[obj + j] < best_val {
                    best_val = t[obj + j];
                    best = Some(j);
                }
            }
            best
        } else {
            (0..cols + rows).find(|&j| t[obj + j] < -PIVOT_TOL)
        };
        let Some(q) = entering else {
            return Ok(-t[obj + width - 1] <= eps);
        };
        let mut leave = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..rows {
            let v = t[i * width + q];
            if v > PIVOT_TOL {
                let r = t[i * width + width - 1] / v;
                let better = match leave {
                    None => true,
                    Some(l) => r < best_ratio - 1e-15 || (r <= best_ratio + 1e-15 && basis[i] < basis[l]),
                };
                if better {
                    best_ratio = r;
                    leave = Some(i);
                }
            }
        }
        let Some(p) = leave else {
            return Err(LpError::Degenerate);
        };
        pivot(&mut t, width, rows + 1, p, q);
        basis[p] = q;
    }
    Err(LpError::IterationLimit(limit))
}

fn pivot(t: &mut [f64], width: usize, height: usize, p: usize, q: usize) {
    let inv = 1.0 / t[p * width + q];
    for x in &mut t[p * width..(p + 1) * width] {
        *x *= inv;
    }
    let (before, rest) = t.split_at_mut(p * width);
    let (prow, after) = rest.split_at_mut(width);
    let eliminate = |row: &mut [f64]| {
        let f = row[q];
        if f != 0.0 {
            for (x, &y) in row.iter_mut().zip(prow.iter()) {
                *x -= f * y;
            }
            row[q] = 0.0;
        }
    };
    for row in before.chunks_exact_mut(width) {
        eliminate(row);
    }
    for row in after.chunks_exact_mut(width).take(height - p - 1) {
        eliminate(row);
    }
}
