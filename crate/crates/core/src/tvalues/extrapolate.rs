//! Limit extrapolation of monotone partial sums.
//!
//! The partial sums of the parity-constrained chain series approach their
//! limit with an asymptotic tail of the form
//! `sum_t N^{-t} (c_{t,0} + c_{t,1} log N + ... )`, the log degree bounded
//! by depth - 1. Fitting sampled partial sums against the basis
//! `{1} + {N^{-t} log^j N}` and reading off the constant term recovers the
//! limit to far below the crude truncation error. The linear solve runs at
//! boosted precision because the basis is poorly conditioned by design.

use rug::ops::Pow;
use rug::Float;

/// Solve for the limit from `(cutoff, partial sum)` samples. The system is
/// square: callers must supply exactly `1 + max_pow * (logdeg + 1)` samples.
/// Returns None if the elimination hits a negligible pivot.
pub(super) fn extrapolate(
    samples: &[(usize, Float)],
    logdeg: usize,
    max_pow: usize,
    prec: u32,
) -> Option<Float> {
    let unknowns = 1 + max_pow * (logdeg + 1);
    if samples.len() != unknowns {
        return None;
    }
    let sp = prec + 192; // solve precision
    let n_rows = unknowns;

    let mut matrix: Vec<Vec<Float>> = Vec::with_capacity(n_rows);
    let mut rhs: Vec<Float> = Vec::with_capacity(n_rows);
    for (m, v) in samples {
        let x = Float::with_val(sp, *m as u64);
        let ln_x = x.clone().ln();
        let mut row = Vec::with_capacity(unknowns);
        row.push(Float::with_val(sp, 1));
        for t in 1..=max_pow {
            let x_pow = Float::with_val(sp, (&x).pow(-(t as i32)));
            let mut log_pow = Float::with_val(sp, 1);
            for _ in 0..=logdeg {
                row.push(Float::with_val(sp, &x_pow * &log_pow));
                log_pow *= &ln_x;
            }
        }
        matrix.push(row);
        rhs.push(Float::with_val(sp, v));
    }

    gaussian_solve(&mut matrix, &mut rhs, sp).map(|x| x.into_iter().next().unwrap())
}

// Plain Gaussian elimination with partial pivoting in MPFR arithmetic.
fn gaussian_solve(a: &mut [Vec<Float>], b: &mut [Float], prec: u32) -> Option<Vec<Float>> {
    let n = a.len();
    let tiny = Float::with_val(prec, 1) >> (prec - 16);
    for col in 0..n {
        let mut pivot = col;
        let mut best = Float::with_val(prec, &a[col][col]).abs();
        for row in col + 1..n {
            let mag = Float::with_val(prec, &a[row][col]).abs();
            if mag > best {
                best = mag;
                pivot = row;
            }
        }
        if best < tiny {
            return None;
        }
        if pivot != col {
            a.swap(col, pivot);
            b.swap(col, pivot);
        }
        for row in col + 1..n {
            let factor = Float::with_val(prec, &a[row][col] / &a[col][col]);
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = Float::with_val(prec, &factor * &a[col][c]);
                a[row][c] -= sub;
            }
            let sub = Float::with_val(prec, &factor * &b[col]);
            b[row] -= sub;
        }
    }
    let mut x: Vec<Float> = (0..n).map(|_| Float::new(prec)).collect();
    for row in (0..n).rev() {
        let mut acc = Float::with_val(prec, &b[row]);
        for c in row + 1..n {
            acc -= Float::with_val(prec, &a[row][c] * &x[c]);
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}
