//! The chain/prefix-sum dynamic program.
//!
//! One pass over the summation variable m maintains, for every level u, the
//! prefix value F_u(m) = sum over parity-constrained chains m_1 < ... < m_u
//! <= m of the product of m_i^{-k_i}. At step m only levels with u = m (mod
//! 2) change, and their update reads F_{u-1} at m-1, which that step never
//! touches, so a single vector of running accumulators suffices: total cost
//! O(depth * N) with O(depth) state.

use super::extrapolate::extrapolate;
use super::hurwitz::parity_tail;
use super::{EvalConfig, NumValue, Rigor};
use crate::index::Index;
use rug::ops::Pow;
use rug::Float;

pub(super) struct Outputs {
    pub t: Option<NumValue>,
    pub t_tilde: NumValue,
}

// Extrapolation shape: powers 1..=MAX_POW of 1/N, log powers up to depth-1
// (capped). A secondary solve without the highest power gives a model
// quality signal.
const MAX_POW: usize = 5;
const MAX_LOGDEG: usize = 5;
const MIN_SAMPLE: usize = 64;

// Arithmetic noise floor relative to the precision the caller will round
// the result into; covers both accumulated rounding and the final rounding.
fn ulp_floor(value: &Float, out_prec: u32) -> Float {
    let prec = value.prec();
    let mut rel = Float::with_val(prec, value);
    rel.abs_mut();
    rel >>= out_prec.saturating_sub(8);
    rel + (Float::with_val(prec, 1) >> (out_prec + 32))
}

/// Descending geometric sample schedule for tail extrapolation, aligned to
/// the outer parity grid. Returns ascending order; empty when the range is
/// too small to be useful.
fn sample_schedule(n: usize, parity: usize, count: usize) -> Vec<usize> {
    if count == 0 {
        return Vec::new();
    }
    let lo = (n / 8).max(MIN_SAMPLE);
    if lo * 2 > n {
        return Vec::new();
    }
    let ratio = (lo as f64 / n as f64).powf(1.0 / count.saturating_sub(1).max(1) as f64);
    let mut points = Vec::with_capacity(count);
    let mut x = n as f64;
    for _ in 0..count {
        let mut m = x as usize;
        if m % 2 != parity {
            m = m.saturating_sub(1);
        }
        points.push(m);
        x *= ratio;
    }
    points.sort_unstable();
    points.dedup();
    if points.len() < count || points[0] < MIN_SAMPLE {
        return Vec::new();
    }
    points
}

pub(super) fn evaluate(k: &Index, cfg: &EvalConfig) -> Outputs {
    let parts = k.parts();
    let r = parts.len();
    assert!(r >= 1, "empty index handled by the caller");
    let prec = cfg.precision + 32;
    let n = cfg.truncation;
    let admissible = k.is_admissible();
    let kr = *parts.last().unwrap() as usize;
    let outer_parity = r % 2;

    // Levels grouped by the parity of the summation variable they accept.
    let levels: [Vec<(usize, u32)>; 2] = {
        let mut by_parity = [Vec::new(), Vec::new()];
        for (u0, &ku) in parts.iter().enumerate() {
            let u = u0 + 1;
            by_parity[u % 2].push((u, ku));
        }
        by_parity
    };

    let logdeg = (r - 1).min(MAX_LOGDEG);
    let sample_count = if admissible && r >= 2 {
        1 + MAX_POW * (logdeg + 1)
    } else {
        0
    };
    let schedule = sample_schedule(n, outer_parity, sample_count);
    let mut next_sample = 0usize;
    let mut samples: Vec<(usize, Float)> = Vec::with_capacity(schedule.len());

    let mut f: Vec<Float> = (0..=r).map(|_| Float::new(prec)).collect();
    f[0] = Float::with_val(prec, 1);

    // Trailing window of alternating partial sums for the averaging pyramid.
    let window = cfg.accel_depth + 1;
    let mut ring: Vec<Float> = Vec::with_capacity(window);
    let mut ring_start = 0usize;
    let mut acc_alt = Float::new(prec);

    for m in 1..=n {
        let inv = Float::with_val(prec, m as u64).recip();
        for &(u, ku) in &levels[m % 2] {
            let mut term = Float::with_val(prec, (&inv).pow(ku));
            term *= &f[u - 1];
            if u < r {
                f[u] += &term;
            } else {
                f[r] += &term;
                let t_step = (m as i64 - r as i64).div_euclid(2);
                if t_step.rem_euclid(2) == 0 {
                    acc_alt += &term;
                } else {
                    acc_alt -= &term;
                }
                if ring.len() < window {
                    ring.push(acc_alt.clone());
                } else {
                    ring[ring_start] = acc_alt.clone();
                    ring_start = (ring_start + 1) % window;
                }
                if next_sample < schedule.len() && schedule[next_sample] == m {
                    next_sample += 1;
                    samples.push((m, f[r].clone()));
                }
            }
        }
    }

    let two_r = Float::with_val(prec, 1u32) << (r as u32);

    // Alternating outer sum: averaging pyramid over the trailing window.
    let ordered: Vec<Float> = (0..ring.len())
        .map(|i| ring[(ring_start + i) % ring.len()].clone())
        .collect();
    let (alt_value, alt_err) = average_pyramid(&ordered, prec);
    let value = Float::with_val(prec, &alt_value * &two_r);
    let err = alt_err * &two_r + ulp_floor(&value, cfg.precision);
    let t_tilde = NumValue {
        value: Float::with_val(cfg.precision, &value),
        err: Float::with_val(cfg.precision, &err),
        rigor: if kr >= 2 { Rigor::Bounded } else { Rigor::Empirical },
    };

    // Monotone outer sum with tail estimate.
    let t = if admissible {
        let s = kr as u32;
        // Integral-comparison bound on the outer tail; the inner prefix is
        // nondecreasing so its final value scales the integral.
        let int_bound = {
            let inner_max = if r >= 2 {
                f[r - 1].clone()
            } else {
                Float::with_val(prec, 1)
            };
            let nf = Float::with_val(prec, n as u64);
            let tail = Float::with_val(prec, (&nf).pow(1 - s as i32)) / (s - 1);
            inner_max * tail * &two_r
        };
        let raw = Float::with_val(prec, &f[r] * &two_r);
        let (value, err) = if r == 1 {
            // Exact Euler-Maclaurin tail on the only variable.
            let (z, zbound) = parity_tail(s, n, outer_parity, prec);
            let value = Float::with_val(prec, &f[1] + &z) * &two_r;
            let err = zbound * &two_r + ulp_floor(&value, cfg.precision);
            (value, err)
        } else if samples.len() == sample_count && sample_count > 0 {
            match tail_by_extrapolation(&samples, logdeg, prec, &two_r, &raw, &int_bound) {
                Some((value, shift)) => {
                    let err = Float::with_val(prec, &int_bound + &shift) + ulp_floor(&value, cfg.precision);
                    (value, err)
                }
                None => (raw.clone(), int_bound.clone() + ulp_floor(&raw, cfg.precision)),
            }
        } else {
            (raw.clone(), int_bound.clone() + ulp_floor(&raw, cfg.precision))
        };
        Some(NumValue {
            value: Float::with_val(cfg.precision, value),
            err: Float::with_val(cfg.precision, err),
            rigor: Rigor::Bounded,
        })
    } else {
        None
    };

    Outputs { t, t_tilde }
}

// Extrapolate the sampled raw partial sums to their limit. Returns the
// scaled value and the applied shift |value - raw|; None when the solve is
// degenerate or the correction exceeds what the whole tail could be.
fn tail_by_extrapolation(
    samples: &[(usize, Float)],
    logdeg: usize,
    prec: u32,
    two_r: &Float,
    raw: &Float,
    int_bound: &Float,
) -> Option<(Float, Float)> {
    let primary = extrapolate(samples, logdeg, MAX_POW, prec)?;
    let secondary_count = 1 + (MAX_POW - 1) * (logdeg + 1);
    let secondary = extrapolate(
        &samples[samples.len() - secondary_count..],
        logdeg,
        MAX_POW - 1,
        prec,
    )?;
    let spread = Float::with_val(prec, &primary - &secondary).abs() * two_r;
    let value = Float::with_val(prec, &primary * two_r);
    let shift = Float::with_val(prec, &value - raw).abs();
    let limit = Float::with_val(prec, int_bound * 2u32);
    if shift > limit || spread > limit {
        return None;
    }
    Some((value, shift))
}

// Repeated pairwise averaging of the trailing partial sums. The apex of the
// pyramid is the accelerated value; the error estimate is its distance to
// the last entry of the previous row.
fn average_pyramid(partials: &[Float], prec: u32) -> (Float, Float) {
    if partials.is_empty() {
        return (Float::new(prec), Float::with_val(prec, 1));
    }
    if partials.len() == 1 {
        let v = partials[0].clone();
        let e = Float::with_val(prec, &v).abs();
        return (v, e);
    }
    let mut row = partials.to_vec();
    let mut prev_last = row.last().unwrap().clone();
    while row.len() > 1 {
        prev_last = row.last().unwrap().clone();
        row = row
            .windows(2)
            .map(|w| Float::with_val(prec, &w[0] + &w[1]) / 2u32)
            .collect();
    }
    let apex = row.pop().unwrap();
    let err = Float::with_val(prec, &apex - &prev_last).abs();
    (apex, err)
}
