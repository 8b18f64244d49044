//! The four general relations (one per weighting sequence), their Genocchi
//! corollary, and the two structural lemmas about the weighted functional.

use super::context::{report_forms, report_sides, CheckResult, Ctx, VerifyError};
use crate::exact::{self, binomial, multinomial3, Rational, SeqName};
use crate::gauss::{Complex, Unit};
use crate::index::Index;
use crate::tvalues::{cal_t, cal_t_shuffled, splits};
use num_traits::Zero;
use rug::Float;

fn require(cond: bool, msg: &str) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError::Param(msg.to_string()))
    }
}

// (-1)^{j/2} a_j / j! as an exact rational; only called for even j.
fn signed_over_factorial(ctx: Ctx<'_>, a: SeqName, j: usize) -> Rational {
    debug_assert_eq!(j % 2, 0);
    let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
    ctx.seq_over_factorial(a, j) * Rational::from_integer(sign.into())
}

/// Right-hand side shared by all four general relations and the corollary:
/// i^{r-|k|} calT(a; k; 0)
/// + sum_{j=1}^{r-1} sum_{h=0}^{k_j-1} i^{r-|k^j|-h}
///   T-tilde((k_j)^(h)) calT(a; k^j; h).
fn general_rhs(ctx: Ctx<'_>, a: SeqName, k: &Index) -> Result<Complex, VerifyError> {
    let r = k.depth() as i64;
    let w = k.weight() as i64;
    let mut rhs = ctx.zero();
    let v = cal_t(a, k, 0, ctx.cfg)?;
    ctx.add(&mut rhs, Unit::i_pow(r - w), &ctx.one(), &v);
    for j in 1..k.depth() {
        let (prefix, suffix) = k.split(j)?;
        let kj = *prefix.parts().last().unwrap() as usize;
        let sw = suffix.weight() as i64;
        for h in 0..kj {
            let unit = Unit::i_pow(r - sw - h as i64);
            let left = ctx.tt(&prefix.truncate(h)?)?;
            let right = cal_t(a, &suffix, h, ctx.cfg)?;
            let prod = ctx.mul_values(&left, &right);
            ctx.add(&mut rhs, unit, &ctx.one(), &prod);
        }
    }
    Ok(rhs)
}

// The term with a_{k_r-1}/(k_r-1)! (pi/2)^{k_r-1} T-tilde(k^{(k_r-1)}),
// present in all five left-hand sides with varying sign conventions.
// `signed` selects the (-1)^{(k_r-1)/2} factor (C/D forms); the sequence
// value vanishes whenever that power would be imaginary.
fn last_term_coeff(ctx: Ctx<'_>, a: SeqName, kr: usize, signed: bool) -> Option<Float> {
    if exact::seq(a, kr - 1).is_zero() {
        return None;
    }
    let q = if signed {
        // a vanishes at odd orders wherever this sign applies, so the
        // half-integer power never materializes
        debug_assert_eq!((kr - 1) % 2, 0);
        signed_over_factorial(ctx, a, kr - 1)
    } else {
        ctx.seq_over_factorial(a, kr - 1)
    };
    Some(ctx.ratf(&q) * ctx.half_pi_pow(kr - 1))
}

/// LHS of the four general relations and the corollary, selected by the
/// weighting sequence.
fn general_lhs(ctx: Ctx<'_>, a: SeqName, k: &Index) -> Result<Complex, VerifyError> {
    let r = k.depth() as i64;
    let kr = *k.parts().last().unwrap() as usize;
    let mut lhs = ctx.zero();
    match a {
        SeqName::C => {
            let hp = ctx.half_pi();
            ctx.add(&mut lhs, Unit::i_pow(r + 1), &hp, &ctx.tt(&k.truncate(1)?)?);
            if let Some(coeff) = last_term_coeff(ctx, SeqName::C, kr, true) {
                ctx.add(&mut lhs, Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(kr - 1)?)?);
            }
            for j in (0..=kr.saturating_sub(2)).step_by(2) {
                let coeff = ctx.ratf(&signed_over_factorial(ctx, SeqName::C, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, Unit::i_pow(0), &coeff, &ctx.t(&k.truncate(j)?)?);
            }
            for j in (0..=kr - 1).step_by(2) {
                let coeff = ctx.ratf(&signed_over_factorial(ctx, SeqName::D, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, -Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(j)?)?);
            }
        }
        SeqName::D => {
            let hp = ctx.half_pi();
            ctx.add(&mut lhs, Unit::i_pow(1), &hp, &ctx.t(&k.truncate(1)?)?);
            if let Some(coeff) = last_term_coeff(ctx, SeqName::D, kr, true) {
                ctx.add(&mut lhs, Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(kr - 1)?)?);
            }
            for j in (0..=kr.saturating_sub(2)).step_by(2) {
                let coeff = ctx.ratf(&signed_over_factorial(ctx, SeqName::D, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, Unit::i_pow(0), &coeff, &ctx.t(&k.truncate(j)?)?);
            }
            for j in (0..=kr - 1).step_by(2) {
                let coeff = ctx.ratf(&signed_over_factorial(ctx, SeqName::C, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, -Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(j)?)?);
            }
        }
        SeqName::E => {
            ctx.add(&mut lhs, -Unit::i_pow(r), &ctx.one(), &ctx.tt(k)?);
            if kr % 2 == 1 {
                if let Some(coeff) = last_term_coeff(ctx, SeqName::Ee, kr, false) {
                    ctx.add(&mut lhs, Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(kr - 1)?)?);
                }
            }
            for j in (0..=kr.saturating_sub(2)).step_by(2) {
                let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Ee, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, Unit::i_pow(0), &coeff, &ctx.t(&k.truncate(j)?)?);
            }
            for j in (1..=kr - 1).step_by(2) {
                let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Ee, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, Unit::i_pow(r + 1), &coeff, &ctx.tt(&k.truncate(j)?)?);
            }
        }
        SeqName::F => {
            ctx.add(&mut lhs, Unit::i_pow(0), &ctx.one(), &ctx.t(k)?);
            if kr % 2 == 0 {
                if let Some(coeff) = last_term_coeff(ctx, SeqName::Ee, kr, false) {
                    ctx.add(&mut lhs, Unit::i_pow(r + 1), &coeff, &ctx.tt(&k.truncate(kr - 1)?)?);
                }
            }
            for j in (1..=kr.saturating_sub(2)).step_by(2) {
                let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Ee, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, Unit::i_pow(1), &coeff, &ctx.t(&k.truncate(j)?)?);
            }
            for j in (0..=kr - 1).step_by(2) {
                let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Ee, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, -Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(j)?)?);
            }
        }
        SeqName::G => {
            let hp = ctx.half_pi();
            ctx.add(&mut lhs, Unit::i_pow(r + 1), &hp, &ctx.tt(&k.truncate(1)?)?);
            ctx.add(&mut lhs, -Unit::i_pow(1), &hp, &ctx.t(&k.truncate(1)?)?);
            if let Some(coeff) = last_term_coeff(ctx, SeqName::Gg, kr, false) {
                ctx.add(&mut lhs, Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(kr - 1)?)?);
            }
            for j in (2..=kr.saturating_sub(2)).step_by(2) {
                let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Gg, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, Unit::i_pow(0), &coeff, &ctx.t(&k.truncate(j)?)?);
            }
            for j in (2..=kr - 1).step_by(2) {
                let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Gg, j)) * ctx.half_pi_pow(j);
                ctx.add(&mut lhs, Unit::i_pow(r), &coeff, &ctx.tt(&k.truncate(j)?)?);
            }
        }
        other => return Err(VerifyError::Param(format!("no general relation for {other}"))),
    }
    Ok(lhs)
}

fn check_name(a: SeqName) -> &'static str {
    match a {
        SeqName::C => "thm32",
        SeqName::D => "thm33",
        SeqName::E => "thm34",
        SeqName::F => "thm35",
        SeqName::G => "cor36",
        _ => unreachable!(),
    }
}

/// One of the general relations at a given admissible index.
pub fn check_general(ctx: Ctx<'_>, a: SeqName, k: &Index, tol: f64) -> CheckResult {
    let kr = *k.parts().last().ok_or_else(|| VerifyError::Param("empty index".into()))? as usize;
    let min_last = match a {
        SeqName::C | SeqName::E | SeqName::F => 2,
        SeqName::D | SeqName::G => 3,
        _ => return Err(VerifyError::Param(format!("no general relation for {a}"))),
    };
    require(k.is_admissible() && kr >= min_last, "index below the relation's last-part minimum")?;
    let lhs = general_lhs(ctx, a, k)?;
    let rhs = general_rhs(ctx, a, k)?;
    Ok(report_sides(check_name(a), format!("k={k}"), &lhs, &rhs, tol))
}

/// The corollary really is the difference of the two theorems it comes
/// from: both sides of the Genocchi relation must equal the C-form minus
/// the D-form, term by term.
pub fn check_cor36_difference(ctx: Ctx<'_>, k: &Index, tol: f64) -> CheckResult {
    let kr = *k.parts().last().ok_or_else(|| VerifyError::Param("empty index".into()))? as usize;
    require(k.is_admissible() && kr >= 3, "needs last part >= 3")?;
    let mut lhs_diff = general_lhs(ctx, SeqName::C, k)?;
    lhs_diff.sub(&general_lhs(ctx, SeqName::D, k)?);
    let lhs_g = general_lhs(ctx, SeqName::G, k)?;
    let mut rhs_diff = general_rhs(ctx, SeqName::C, k)?;
    rhs_diff.sub(&general_rhs(ctx, SeqName::D, k)?);
    let rhs_g = general_rhs(ctx, SeqName::G, k)?;
    let residual_l = lhs_g.residual(&lhs_diff);
    let residual_r = rhs_g.residual(&rhs_diff);
    let forms = if residual_l > residual_r {
        [&lhs_g, &lhs_diff]
    } else {
        [&rhs_g, &rhs_diff]
    };
    Ok(report_forms("cor36diff", format!("k={k}"), &forms, tol))
}

/// The functional equals its composition-sum form.
pub fn check_lemma37(ctx: Ctx<'_>, a: SeqName, k: &Index, h: usize, tol: f64) -> CheckResult {
    let lhs = ctx.real_side(&cal_t(a, k, h, ctx.cfg)?);
    let rhs = ctx.real_side(&cal_t_shuffled(a, k, h, ctx.cfg)?);
    Ok(report_sides("lemma37", format!("a={a},k={k},h={h}"), &lhs, &rhs, tol))
}

/// The three displayed forms of the prefix-contraction lemma agree.
pub fn check_lemma38(ctx: Ctx<'_>, a: SeqName, k: &Index, tol: f64) -> CheckResult {
    let r = k.depth();
    require(r >= 2 && k.is_admissible(), "lemma38 needs an admissible index of depth >= 2")?;
    let parts = k.parts();
    let k1 = parts[0] as usize;
    let kr = *parts.last().unwrap() as usize;
    let w = k.weight();
    let (prefix, suffix) = k.split(1)?;

    // form 1: case-selected component of the h-sum
    let mut hsum = ctx.zero();
    for h in 0..k1 {
        let unit = Unit::i_pow(r as i64 - suffix.weight() as i64 - h as i64);
        let left = ctx.tt(&prefix.truncate(h)?)?;
        let right = cal_t(a, &suffix, h, ctx.cfg)?;
        let prod = ctx.mul_values(&left, &right);
        ctx.add(&mut hsum, unit, &ctx.one(), &prod);
    }
    let mut form1 = ctx.zero();
    if (w - r) % 2 == 1 {
        form1.re = hsum.re.clone();
    } else {
        form1.im = hsum.im.clone();
    }
    form1.err = hsum.err.clone();

    // form 2: E-weighted double sum over truncations of the suffix
    let unit2 = Unit::i_pow(r as i64 - w as i64 + 1);
    let mut form2 = ctx.zero();
    for m in 0..k1 {
        let em = ctx.seq_over_factorial(SeqName::E, m);
        if em.is_zero() {
            continue;
        }
        for n in 0..=kr - 2 {
            let an = ctx.seq_over_factorial(a, n);
            if an.is_zero() {
                continue;
            }
            let coeff = ctx.ratf(&(em.clone() * an)) * ctx.half_pi_pow(m + n + 1);
            let idx = suffix.truncate(n)?.dual()?.append_ones(k1 - 1 - m);
            ctx.add(&mut form2, unit2, &coeff, &ctx.tt(&idx)?);
        }
    }

    // form 3: the composition sum
    let mut form3 = ctx.zero();
    let hp = ctx.half_pi();
    let base = suffix.truncate(kr - 1)?; // (k_2, ..., k_{r-1}, 1)
    for ls in splits(k1 - 1, r, 0) {
        let l1 = ls[0];
        let mut e_inner = Rational::zero();
        for h in 0..=l1 {
            e_inner += Rational::from_integer(binomial(l1, h)) * exact::seq(SeqName::E, k1 - 1 - h);
        }
        if e_inner.is_zero() {
            continue;
        }
        for ms in splits(kr - 1, r, 1) {
            let m1 = ms[0];
            let mr = ms[r - 1];
            let mut a_inner = Rational::zero();
            for n in 1..=mr {
                a_inner += Rational::from_integer(binomial(mr, n)) * exact::seq(a, kr - 1 - n);
            }
            if a_inner.is_zero() {
                continue;
            }
            let mut coeff_q = e_inner.clone() * a_inner;
            coeff_q *= Rational::from_integer(binomial(l1 + m1, l1));
            for u in 2..r {
                let ku = parts[u - 1] as usize;
                coeff_q *= Rational::from_integer(multinomial3(ku - 1, ls[u - 1], ms[u - 1]));
            }
            coeff_q *= Rational::from_integer(binomial(ls[r - 1] + mr, ls[r - 1]));
            let offsets: Vec<u32> = (1..r).map(|u| (ls[u] + ms[u]) as u32).collect();
            let idx = base.add_components(&offsets).dual()?.append_ones(l1 + m1);
            let coeff = ctx.ratf(&coeff_q) * &hp;
            ctx.add(&mut form3, unit2, &coeff, &ctx.tt(&idx)?);
        }
    }

    Ok(report_forms(
        "lemma38",
        format!("a={a},k={k}"),
        &[&form1, &form2, &form3],
        tol,
    ))
}
