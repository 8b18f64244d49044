//! Deliberately corrupted variants of three identities. The suite is only
//! trustworthy if a single flipped coefficient makes it fail; these probes
//! are run by tests (and `--mutation-probe`) and must all report FAIL.

use super::context::{report_sides, CheckResult, Ctx};
use crate::exact::{binomial, Rational};
use crate::gauss::{Unit, ONE};
use crate::index::{hook_index, Index};

/// Hooked relation with one Entringer weight bumped by one.
pub fn corrupted_kt(ctx: Ctx<'_>, n: usize, tol: f64) -> CheckResult {
    let mut lhs = ctx.zero();
    for j in 1..=n {
        let mut coeff = ctx.entringer_f(n, j)?;
        if j == 1 {
            coeff += 1u32;
        }
        let idx = hook_index(n, &[j])?;
        ctx.add(&mut lhs, ONE, &coeff, &ctx.tt(&idx)?);
    }
    let target = Index::new(vec![(n + 1) as u32])?;
    let rv = if n % 2 == 1 { ctx.tt(&target)? } else { ctx.t(&target)? };
    let rhs = ctx.real_side(&rv);
    Ok(report_sides("mutation-kt", format!("n={n}"), &lhs, &rhs, tol))
}

/// Headline depth-two relation with its first binomial knocked down.
pub fn corrupted_thm13(ctx: Ctx<'_>, k1: usize, k2: usize, tol: f64) -> CheckResult {
    let depth = k1 + k2;
    let mut lhs = ctx.zero();
    for l in 1..=k1 {
        for m in 1..=k2 {
            let count = ctx.entringer_f(k1, l)? * ctx.dumont_f(k2, m)?;
            if count.is_zero() {
                continue;
            }
            // flipped: C(k1-l+m, m) -> C(k1-l+m, m-1)
            let c = Rational::from_integer(
                binomial(k1 - l + m, m.saturating_sub(1)) * binomial(k2 - m + l, l),
            );
            let coeff = ctx.ratf(&c) * count;
            let idx = hook_index(depth, &[k1 - l + m])?;
            ctx.add(&mut lhs, ONE, &coeff, &ctx.tt(&idx)?);
        }
    }
    let target = Index::new(vec![(k1 + 1) as u32, k2 as u32])?;
    let mut rhs = ctx.real_side(&ctx.t(&target)?);
    rhs.add(&ctx.real_side(&ctx.tt(&target)?));
    Ok(report_sides("mutation-thm13", format!("k1={k1},k2={k2}"), &lhs, &rhs, tol))
}

/// Duality expansion with one inverse-factorial weight corrupted.
pub fn corrupted_duality(ctx: Ctx<'_>, k: &Index, tol: f64) -> CheckResult {
    let r = k.depth();
    let w = k.weight();
    let kr = *k.parts().last().unwrap() as usize;
    let lhs = ctx.real_side(&ctx.t(k)?);
    let mut rhs = ctx.zero();
    let mut coeff = ctx.one();
    for h in 0..kr {
        if h > 0 {
            coeff = coeff * ctx.half_pi() / h as u32;
        }
        // flipped: the h = 1 weight reads (pi/2)/2 instead of (pi/2)
        let used = if h == 1 {
            rug::Float::with_val(coeff.prec(), &coeff / 2u32)
        } else {
            coeff.clone()
        };
        let unit = Unit::i_pow(r as i64 - h as i64);
        ctx.add(&mut rhs, unit, &used, &ctx.tt(&k.truncate(h)?)?);
    }
    ctx.add(
        &mut rhs,
        Unit::i_pow(r as i64 - w as i64),
        &ctx.one(),
        &ctx.tt(&k.dual()?)?,
    );
    for j in 1..r {
        let (prefix, suffix) = k.split(j)?;
        let kj = *prefix.parts().last().unwrap() as usize;
        let sw = suffix.weight();
        let sdual = suffix.dual()?;
        for h in 0..kj {
            let unit = Unit::i_pow(r as i64 - sw as i64 - h as i64);
            let prod = ctx.mul_values(&ctx.tt(&prefix.truncate(h)?)?, &ctx.tt(&sdual.append_ones(h))?);
            ctx.add(&mut rhs, unit, &ctx.one(), &prod);
        }
    }
    Ok(report_sides("mutation-eqT", format!("k={k}"), &lhs, &rhs, tol))
}
