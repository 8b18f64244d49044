//! Arbitrary-precision evaluation of the nested parity-constrained series
//! T(k) and T-tilde(k), the A-function specialization at i, and the weighted
//! functional that combines sequence coefficients with duals of truncated
//! indices.
//!
//! Evaluation strategy, per index kind:
//!
//! - Every evaluation runs one chain/prefix-sum dynamic program over the
//!   summation variable, costing O(depth * N) arithmetic operations instead
//!   of O(N^depth).
//! - The alternating outer sums (all T-tilde values) are accelerated by
//!   repeated pairwise averaging of the trailing partial sums; the error
//!   estimate is the difference of the last two accelerated iterates.
//! - The monotone outer sums (T values) receive a tail estimate: an
//!   Euler-Maclaurin closed form at depth one, and extrapolation of the
//!   partial sums in the basis {N^-t log^j N} at higher depth. The reported
//!   error stays backed by the integral-comparison bound on the outer
//!   variable.
//!
//! Results are memoized keyed by (kind, index, config); cached and uncached
//! evaluations are bit-identical.
//!
//! The underlying A-function also admits an iterated-integral
//! representation over the forms 2dt/(1-t^2) and dt/t; it is not used as an
//! evaluation route here -- series summation is the implemented evaluator,
//! and the value at i is obtained through [`eval_a_at_i`]'s exact
//! unit-times-real decomposition instead of any complex quadrature.

mod engine;
mod extrapolate;
mod functional;
mod hurwitz;

pub use functional::{cal_t, cal_t_shuffled};
pub(crate) use functional::splits;

use crate::exact::Rational;
use crate::gauss::Unit;
use crate::index::{Index, IndexError};
use num_bigint::BigInt;
use rug::Float;
use std::collections::HashMap;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("index error: {0}")]
    Index(#[from] IndexError),
    #[error("T is undefined for non-admissible index ({0})")]
    NonAdmissible(Index),
    #[error("functional is undefined for sequence `{0}`")]
    BadSequence(String),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
}

/// Whether a reported error estimate is backed by a proven tail bound or by
/// acceleration-convergence heuristics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rigor {
    Bounded,
    Empirical,
}

/// An arbitrary-precision real result together with an error estimate.
#[derive(Debug, Clone)]
pub struct NumValue {
    pub value: Float,
    pub err: Float,
    pub rigor: Rigor,
}

impl NumValue {
    pub fn exact(value: Float) -> Self {
        let prec = value.prec();
        NumValue {
            value,
            err: Float::new(prec),
            rigor: Rigor::Bounded,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn err_f64(&self) -> f64 {
        self.err.to_f64()
    }
}

/// Working parameters for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct EvalConfig {
    /// Bits of working precision (>= 64).
    pub precision: u32,
    /// Outer summation limit (>= 16).
    pub truncation: usize,
    /// Number of pairwise-averaging passes applied to alternating tails
    /// (>= 1).
    pub accel_depth: usize,
}

impl EvalConfig {
    pub const DEFAULT_PRECISION: u32 = 192;
    pub const DEFAULT_TRUNCATION: usize = 200_000;
    pub const DEFAULT_ACCEL_DEPTH: usize = 8;

    pub fn new(precision: u32, truncation: usize, accel_depth: usize) -> Result<Self, EvalError> {
        if precision < 64 {
            return Err(EvalError::BadConfig(format!(
                "precision {precision} below the minimum of 64 bits"
            )));
        }
        if truncation < 16 {
            return Err(EvalError::BadConfig(format!(
                "truncation {truncation} below the minimum of 16"
            )));
        }
        if accel_depth < 1 {
            return Err(EvalError::BadConfig("accel_depth must be >= 1".into()));
        }
        Ok(EvalConfig {
            precision,
            truncation,
            accel_depth,
        })
    }

    /// Smaller default used by fast unit checks.
    pub fn quick() -> Self {
        EvalConfig {
            precision: 128,
            truncation: 20_000,
            accel_depth: 8,
        }
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            precision: Self::DEFAULT_PRECISION,
            truncation: Self::DEFAULT_TRUNCATION,
            accel_depth: Self::DEFAULT_ACCEL_DEPTH,
        }
    }
}

/// Pi at the working precision of the configuration.
pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, rug::float::Constant::Pi)
}

/// Pi/2 at working precision.
pub fn half_pi(prec: u32) -> Float {
    pi(prec) / 2u32
}

pub fn bigint_to_float(b: &BigInt, prec: u32) -> Float {
    let i = rug::Integer::from_str_radix(&b.to_str_radix(16), 16).expect("hex bigint");
    Float::with_val(prec, i)
}

pub fn rational_to_float(q: &Rational, prec: u32) -> Float {
    bigint_to_float(q.numer(), prec) / bigint_to_float(q.denom(), prec)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Kind {
    T,
    Ttilde,
}

type CacheKey = (Kind, Vec<u32>, EvalConfig);

static CACHE: Mutex<Option<HashMap<CacheKey, NumValue>>> = Mutex::new(None);

fn cache_get(key: &CacheKey) -> Option<NumValue> {
    CACHE.lock().unwrap().as_ref().and_then(|m| m.get(key).cloned())
}

fn cache_put(key: CacheKey, value: NumValue) {
    CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, value);
}

/// Drop all memoized evaluations (used by tests that compare cached and
/// uncached results).
pub fn clear_cache() {
    *CACHE.lock().unwrap() = None;
}

/// T(k): defined for the empty index (exactly 1) and admissible indices.
pub fn eval_t(k: &Index, cfg: &EvalConfig) -> Result<NumValue, EvalError> {
    if k.is_empty() {
        return Ok(NumValue::exact(Float::with_val(cfg.precision, 1)));
    }
    if !k.is_admissible() {
        return Err(EvalError::NonAdmissible(k.clone()));
    }
    let key = (Kind::T, k.parts().to_vec(), *cfg);
    if let Some(hit) = cache_get(&key) {
        return Ok(hit);
    }
    let out = engine::evaluate(k, cfg);
    let value = out.t.expect("admissible index always yields a T value");
    cache_put(key, value.clone());
    Ok(value)
}

/// T-tilde(k): defined for every index (and exactly 1 on the empty index).
pub fn eval_t_tilde(k: &Index, cfg: &EvalConfig) -> Result<NumValue, EvalError> {
    if k.is_empty() {
        return Ok(NumValue::exact(Float::with_val(cfg.precision, 1)));
    }
    let key = (Kind::Ttilde, k.parts().to_vec(), *cfg);
    if let Some(hit) = cache_get(&key) {
        return Ok(hit);
    }
    let out = engine::evaluate(k, cfg);
    cache_put(key, out.t_tilde.clone());
    Ok(out.t_tilde)
}

/// A(k; i) decomposed as an exact fourth root of unity times the real value
/// T-tilde(k); no complex series is summed.
pub fn eval_a_at_i(k: &Index, cfg: &EvalConfig) -> Result<(Unit, NumValue), EvalError> {
    let unit = Unit::i_pow(k.depth() as i64);
    Ok((unit, eval_t_tilde(k, cfg)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::Index;
    use rug::ops::Pow;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    fn cfg() -> EvalConfig {
        EvalConfig::quick()
    }

    fn assert_close(value: &NumValue, want: &Float, tol: f64, what: &str) {
        let diff = Float::with_val(value.value.prec(), &value.value - want)
            .abs()
            .to_f64();
        assert!(diff < tol, "{what}: diff = {diff:.3e}, err = {}", value.err_f64());
    }

    #[test]
    fn empty_index_is_exactly_one() {
        let t = eval_t(&Index::empty(), &cfg()).unwrap();
        assert_eq!(t.value.to_f64(), 1.0);
        assert_eq!(t.err.to_f64(), 0.0);
        let tt = eval_t_tilde(&Index::empty(), &cfg()).unwrap();
        assert_eq!(tt.value.to_f64(), 1.0);
    }

    #[test]
    fn non_admissible_t_is_rejected() {
        assert!(matches!(
            eval_t(&idx(&[1]), &cfg()),
            Err(EvalError::NonAdmissible(_))
        ));
        assert!(matches!(
            eval_t(&idx(&[2, 1]), &cfg()),
            Err(EvalError::NonAdmissible(_))
        ));
    }

    #[test]
    fn depth_one_closed_forms() {
        let c = cfg();
        let prec = c.precision;
        let hp = half_pi(prec);

        // T(2) = pi^2 / 4
        let want = hp.clone().square();
        assert_close(&eval_t(&idx(&[2]), &c).unwrap(), &want, 1e-25, "T(2)");

        // T-tilde(1) = pi / 2
        assert_close(&eval_t_tilde(&idx(&[1]), &c).unwrap(), &hp, 1e-20, "Tt(1)");

        // T(4) = (1/3) (pi/2)^4
        let want = Float::with_val(prec, hp.clone().pow(4u32)) / 3u32;
        assert_close(&eval_t(&idx(&[4]), &c).unwrap(), &want, 1e-25, "T(4)");

        // T-tilde(3) = (1/2) (pi/2)^3
        let want = Float::with_val(prec, hp.clone().pow(3u32)) / 2u32;
        assert_close(&eval_t_tilde(&idx(&[3]), &c).unwrap(), &want, 1e-20, "Tt(3)");
    }

    #[test]
    fn all_ones_closed_form() {
        let c = cfg();
        let prec = c.precision;
        let hp = half_pi(prec);
        let mut factorial = 1u64;
        for n in 1..=6usize {
            factorial *= n as u64;
            let want = Float::with_val(prec, hp.clone().pow(n as u32)) / factorial;
            let got = eval_t_tilde(&Index::ones(n), &c).unwrap();
            assert_close(&got, &want, 1e-15, &format!("Tt(ones({n}))"));
        }
    }

    #[test]
    fn depth_two_t_matches_product_form() {
        // T(1,2) = Tt(1) Tt(2) - Tt(1,2), a consequence of the duality
        // expansion; used here as an independent cross-check of the
        // extrapolated tail.
        let c = cfg();
        let t12 = eval_t(&idx(&[1, 2]), &c).unwrap();
        let tt1 = eval_t_tilde(&idx(&[1]), &c).unwrap();
        let tt2 = eval_t_tilde(&idx(&[2]), &c).unwrap();
        let tt12 = eval_t_tilde(&idx(&[1, 2]), &c).unwrap();
        let want = tt1.value * tt2.value - tt12.value;
        assert_close(&t12, &want, 1e-12, "T(1,2)");
    }

    #[test]
    fn doubling_truncation_stays_within_reported_error() {
        let c1 = EvalConfig::new(128, 20_000, 8).unwrap();
        let c2 = EvalConfig::new(128, 40_000, 8).unwrap();
        for parts in [&[2][..], &[1, 2][..], &[2, 3][..], &[1, 1, 2][..]] {
            let k = idx(parts);
            let a = eval_t(&k, &c1).unwrap();
            let b = eval_t(&k, &c2).unwrap();
            let moved = Float::with_val(128, &a.value - &b.value).abs();
            assert!(
                moved <= a.err,
                "T({k}) moved {:.3e} > err {:.3e}",
                moved.to_f64(),
                a.err_f64()
            );
        }
    }

    #[test]
    fn precision_scaling_is_truncation_dominated() {
        let c1 = EvalConfig::new(128, 20_000, 8).unwrap();
        let c2 = EvalConfig::new(256, 20_000, 8).unwrap();
        for parts in [&[2][..], &[1, 2][..]] {
            let k = idx(parts);
            let a = eval_t(&k, &c1).unwrap();
            let b = eval_t(&k, &c2).unwrap();
            let moved = Float::with_val(256, &a.value - &b.value).abs();
            assert!(moved <= a.err, "T({k})");
            let a = eval_t_tilde(&k, &c1).unwrap();
            let b = eval_t_tilde(&k, &c2).unwrap();
            let moved = Float::with_val(256, &a.value - &b.value).abs();
            // alternating-tail error estimates may be below arithmetic
            // noise at 128 bits; allow that floor
            let floor = Float::with_val(256, 1e-30);
            let allowed = if a.err > floor { a.err.clone() } else { floor };
            assert!(moved <= allowed, "Tt({k})");
        }
    }

    #[test]
    fn a_function_at_i() {
        let c = cfg();
        let (u, v) = eval_a_at_i(&idx(&[1]), &c).unwrap();
        assert_eq!(u, Unit::i_pow(1));
        assert_close(&v, &half_pi(c.precision), 1e-20, "A((1); i)");
        let (u, _) = eval_a_at_i(&idx(&[2]), &c).unwrap();
        assert_eq!(u, Unit::i_pow(1));
        let (u, v) = eval_a_at_i(&Index::empty(), &c).unwrap();
        assert_eq!(u, Unit::i_pow(0));
        assert_eq!(v.value.to_f64(), 1.0);
    }

    #[test]
    fn shuffle_sanity_on_ones() {
        // Tt(1)^2 = 2 Tt(1,1)
        let c = cfg();
        let a = eval_t_tilde(&Index::ones(1), &c).unwrap();
        let b = eval_t_tilde(&Index::ones(2), &c).unwrap();
        let lhs = a.value.clone().square();
        let rhs = Float::with_val(c.precision, &b.value * 2u32);
        let diff = Float::with_val(c.precision, lhs - rhs).abs().to_f64();
        assert!(diff < 1e-20, "diff = {diff:e}");
    }

    #[test]
    fn reported_error_bounds_true_error() {
        let c = cfg();
        let prec = c.precision;
        let hp = half_pi(prec);
        let cases: [(&[u32], Float); 3] = [
            (&[2], hp.clone().square()),
            (&[4], Float::with_val(prec, (&hp).pow(4u32)) / 3u32),
            (&[6], Float::with_val(prec, (&hp).pow(6u32)) * 2u32 / 15u32),
        ];
        for (parts, want) in cases {
            let k = idx(parts);
            let got = eval_t(&k, &c).unwrap();
            let true_err = Float::with_val(prec, &got.value - &want).abs();
            assert!(
                true_err <= got.err,
                "T({k}): true error {:.3e} above reported {:.3e}",
                true_err.to_f64(),
                got.err_f64()
            );
            assert_eq!(got.rigor, Rigor::Bounded);
        }
    }

    #[test]
    fn cached_and_uncached_results_are_identical() {
        let c = cfg();
        let k = idx(&[2, 2]);
        clear_cache();
        let first = eval_t(&k, &c).unwrap();
        let second = eval_t(&k, &c).unwrap(); // cache hit
        clear_cache();
        let third = eval_t(&k, &c).unwrap(); // recomputed
        assert_eq!(first.value, second.value);
        assert_eq!(first.value, third.value);
        assert_eq!(first.err, third.err);
    }

    #[test]
    fn config_validation() {
        assert!(EvalConfig::new(32, 1000, 8).is_err());
        assert!(EvalConfig::new(128, 8, 8).is_err());
        assert!(EvalConfig::new(128, 1000, 0).is_err());
        assert!(EvalConfig::new(64, 16, 1).is_ok());
    }
}
