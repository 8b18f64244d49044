//! The weighted functional over duals of truncated indices, in its defining
//! form and in the composition-sum form produced by the shuffle product.
//! The two are evaluated by independent code paths so the harness can check
//! them against each other.

use super::{eval_t_tilde, half_pi, rational_to_float, EvalConfig, EvalError, NumValue, Rigor};
use crate::exact::{self, binomial, Rational, SeqName};
use crate::index::Index;
use num_traits::Zero;
use rug::Float;

fn supported(a: SeqName) -> Result<(), EvalError> {
    match a {
        SeqName::C | SeqName::D | SeqName::E | SeqName::F | SeqName::G => Ok(()),
        other => Err(EvalError::BadSequence(other.to_string())),
    }
}

fn factorial(n: usize) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for d in 2..=n {
        acc *= Rational::from_integer(num_bigint::BigInt::from(d));
    }
    acc
}

/// cal-T(a; k; h) = sum_{n=0}^{k_r - 2} (a_n / n!) (pi/2)^n
/// T-tilde((k^(n))-dual, {1}^h).
pub fn cal_t(a: SeqName, k: &Index, h: usize, cfg: &EvalConfig) -> Result<NumValue, EvalError> {
    supported(a)?;
    if !k.is_admissible() {
        return Err(EvalError::NonAdmissible(k.clone()));
    }
    let prec = cfg.precision;
    let kr = *k.parts().last().unwrap() as usize;
    let hp = half_pi(prec);

    let mut value = Float::new(prec);
    let mut err = Float::new(prec);
    let mut rigor = Rigor::Bounded;
    let mut hp_pow = Float::with_val(prec, 1);
    for n in 0..=kr.saturating_sub(2) {
        let coeff_q = exact::seq(a, n) / factorial(n);
        if !coeff_q.is_zero() {
            let truncated = k.truncate(n)?;
            let idx = truncated.dual()?.append_ones(h);
            let tv = eval_t_tilde(&idx, cfg)?;
            let coeff = rational_to_float(&coeff_q, prec) * &hp_pow;
            value += Float::with_val(prec, &coeff * &tv.value);
            err += coeff.abs() * &tv.err;
            if tv.rigor == Rigor::Empirical {
                rigor = Rigor::Empirical;
            }
        }
        hp_pow *= &hp;
    }
    Ok(NumValue { value, err, rigor })
}

// Ordered nonnegative splits of `total` into `len` parts with the last part
// at least `min_last`.
pub(crate) fn splits(total: usize, len: usize, min_last: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; len];
    fn rec(pos: usize, left: usize, min_last: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos + 1 == cur.len() {
            if left >= min_last {
                cur[pos] = left;
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, left - v, min_last, cur, out);
        }
    }
    if len == 0 {
        return out;
    }
    rec(0, total, min_last, &mut cur, &mut out);
    out
}

/// The composition-sum form of the functional: sum over (m_0, m_1..m_r)
/// with m_0 + |m| = k_r - 1 and m_r > 0 of
/// C(h+m_0, m_0) * prod_u C(k_u + m_u - 1, m_u)
/// * (sum_n C(m_r, n) a_{k_r-1-n}) * T-tilde((k^(k_r-1) + m)-dual, {1}^{h+m_0}).
pub fn cal_t_shuffled(
    a: SeqName,
    k: &Index,
    h: usize,
    cfg: &EvalConfig,
) -> Result<NumValue, EvalError> {
    supported(a)?;
    if !k.is_admissible() {
        return Err(EvalError::NonAdmissible(k.clone()));
    }
    let prec = cfg.precision;
    let parts = k.parts();
    let r = parts.len();
    let kr = *parts.last().unwrap() as usize;
    let base = k.truncate(kr - 1)?; // (k_1, ..., k_{r-1}, 1)
    debug_assert_eq!(base.depth(), r);

    let mut value = Float::new(prec);
    let mut err = Float::new(prec);
    let mut rigor = Rigor::Bounded;
    for split in splits(kr - 1, r + 1, 1) {
        let m0 = split[0];
        let m = &split[1..];
        let mr = m[r - 1];

        let mut coeff_q = Rational::from_integer(binomial(h + m0, m0));
        for (u0, &mu) in m.iter().enumerate().take(r - 1) {
            let ku = parts[u0] as usize;
            coeff_q *= Rational::from_integer(binomial(ku + mu - 1, mu));
        }
        let mut inner = Rational::from_integer(0.into());
        for n in 1..=mr {
            inner += Rational::from_integer(binomial(mr, n)) * exact::seq(a, kr - 1 - n);
        }
        coeff_q *= inner;
        if coeff_q.is_zero() {
            continue;
        }

        let offsets: Vec<u32> = m.iter().map(|&v| v as u32).collect();
        let idx = base.add_components(&offsets).dual()?.append_ones(h + m0);
        let tv = eval_t_tilde(&idx, cfg)?;
        let coeff = rational_to_float(&coeff_q, prec);
        value += Float::with_val(prec, &coeff * &tv.value);
        err += coeff.abs() * &tv.err;
        if tv.rigor == Rigor::Empirical {
            rigor = Rigor::Empirical;
        }
    }
    Ok(NumValue { value, err, rigor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tvalues::eval_t_tilde;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    fn cfg() -> EvalConfig {
        EvalConfig::quick()
    }

    #[test]
    fn single_term_case() {
        // a = E, k = (2), h = 0: only the n = 0 term, equal to T-tilde(2)
        let c = cfg();
        let got = cal_t(SeqName::E, &idx(&[2]), 0, &c).unwrap();
        let want = eval_t_tilde(&idx(&[2]), &c).unwrap();
        let diff = Float::with_val(c.precision, &got.value - &want.value)
            .abs()
            .to_f64();
        assert!(diff < 1e-25, "diff = {diff:e}");
    }

    #[test]
    fn appended_ones_case() {
        // a = C, k = (2), h = 2: single term C_0 * T-tilde((2)-dual, 1, 1)
        let c = cfg();
        let got = cal_t(SeqName::C, &idx(&[2]), 2, &c).unwrap();
        let want = eval_t_tilde(&idx(&[2, 1, 1]), &c).unwrap();
        let diff = Float::with_val(c.precision, &got.value - &want.value)
            .abs()
            .to_f64();
        assert!(diff < 1e-25, "diff = {diff:e}");
    }

    #[test]
    fn vanishing_leading_coefficient() {
        // a = G, k = (1,3), h = 0: G_0 = 0, so only the n = 1 term remains
        let c = cfg();
        let got = cal_t(SeqName::G, &idx(&[1, 3]), 0, &c).unwrap();
        let t = idx(&[1, 3]).truncate(1).unwrap(); // (1, 2)
        let want = eval_t_tilde(&t.dual().unwrap(), &c).unwrap();
        let hp = half_pi(c.precision);
        let want_value = want.value * hp; // G_1/1! (pi/2)^1 with G_1 = 1
        let diff = Float::with_val(c.precision, &got.value - &want_value)
            .abs()
            .to_f64();
        assert!(diff < 1e-20, "diff = {diff:e}");
    }

    #[test]
    fn shuffled_form_agrees_with_definition() {
        let c = cfg();
        for (a, parts, h) in [
            (SeqName::E, &[2u32][..], 0usize),
            (SeqName::E, &[3][..], 0),
            (SeqName::F, &[3][..], 1),
            (SeqName::G, &[1, 3][..], 0),
            (SeqName::C, &[2, 2][..], 1),
            (SeqName::D, &[1, 1, 3][..], 0),
        ] {
            let k = idx(parts);
            let lhs = cal_t(a, &k, h, &c).unwrap();
            let rhs = cal_t_shuffled(a, &k, h, &c).unwrap();
            let diff = Float::with_val(c.precision, &lhs.value - &rhs.value)
                .abs()
                .to_f64();
            let allow = (lhs.err_f64() + rhs.err_f64()).max(1e-15);
            assert!(diff <= allow, "a={a:?} k={k} h={h}: diff = {diff:e}");
        }
    }

    #[test]
    fn preconditions() {
        let c = cfg();
        assert!(matches!(
            cal_t(SeqName::E, &idx(&[2, 1]), 0, &c),
            Err(EvalError::NonAdmissible(_))
        ));
        assert!(matches!(
            cal_t(SeqName::Ee, &idx(&[2]), 0, &c),
            Err(EvalError::BadSequence(_))
        ));
    }

    #[test]
    fn split_enumeration() {
        // splits of 3 into 3 parts with last >= 1
        let s = splits(3, 3, 1);
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|v| v.iter().sum::<usize>() == 3 && v[2] >= 1));
        assert_eq!(splits(0, 2, 1).len(), 0);
        assert_eq!(splits(2, 1, 1), vec![vec![2]]);
    }
}
