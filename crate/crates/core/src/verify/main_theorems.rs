//! The five headline relations: hooked T-tilde combinations weighted by
//! permutation counts against products and depth-two/three values.

use super::context::{report_sides, CheckResult, Ctx, VerifyError};
use crate::exact::{binomial, multinomial3, Rational};
use crate::gauss::ONE;
use crate::index::{hook_index, Index};
use crate::tvalues::splits;

fn require(cond: bool, msg: &str) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError::Param(msg.to_string()))
    }
}

/// Both k1 and k2 odd, k2 >= 3:
/// sum_{l,m} C(k1-l+m, m) C(k2-m+l, l) EE(k1,l) GG(k2,m)
///   T-tilde(hook at k1-l+m, depth k1+k2)
/// = T(k1+1, k2) + T-tilde(k1+1, k2).
pub fn check_thm13(ctx: Ctx<'_>, k1: usize, k2: usize, tol: f64) -> CheckResult {
    require(k1 % 2 == 1 && k2 % 2 == 1 && k2 >= 3, "thm13 needs odd k1 >= 1, odd k2 >= 3")?;
    let depth = k1 + k2;
    let mut lhs = ctx.zero();
    for l in 1..=k1 {
        for m in 1..=k2 {
            let count = ctx.entringer_f(k1, l)? * ctx.dumont_f(k2, m)?;
            if count.is_zero() {
                continue;
            }
            let c = Rational::from_integer(binomial(k1 - l + m, m) * binomial(k2 - m + l, l));
            let coeff = ctx.ratf(&c) * count;
            let idx = hook_index(depth, &[k1 - l + m])?;
            ctx.add(&mut lhs, ONE, &coeff, &ctx.tt(&idx)?);
        }
    }
    let target = Index::new(vec![(k1 + 1) as u32, k2 as u32])?;
    let sum = {
        let t = ctx.t(&target)?;
        let tt = ctx.tt(&target)?;
        let mut acc = ctx.real_side(&t);
        let side = ctx.real_side(&tt);
        acc.add(&side);
        acc
    };
    Ok(report_sides("thm13", format!("k1={k1},k2={k2}"), &lhs, &sum, tol))
}

/// Odd k2 >= 3:
/// sum_{m2} GG(k2,m2) sum_{m1=m2}^{k2} T-tilde(hooks at m2 <= m1, depth k2)
/// = T-tilde(1) (T(1,k2) + T-tilde(1,k2)).
pub fn check_thm14(ctx: Ctx<'_>, k2: usize, tol: f64) -> CheckResult {
    require(k2 % 2 == 1 && k2 >= 3, "thm14 needs odd k2 >= 3")?;
    let mut lhs = ctx.zero();
    for m2 in 1..=k2 {
        let count = ctx.dumont_f(k2, m2)?;
        if count.is_zero() {
            continue;
        }
        for m1 in m2..=k2 {
            let idx = hook_index(k2, &[m1, m2])?;
            ctx.add(&mut lhs, ONE, &count, &ctx.tt(&idx)?);
        }
    }
    let target = Index::new(vec![1, k2 as u32])?;
    let tt1 = ctx.tt(&Index::ones(1))?;
    let t = ctx.mul_values(&tt1, &ctx.t(&target)?);
    let tt = ctx.mul_values(&tt1, &ctx.tt(&target)?);
    let mut rhs = ctx.real_side(&t);
    rhs.add(&ctx.real_side(&tt));
    Ok(report_sides("thm14", format!("k2={k2}"), &lhs, &rhs, tol))
}

/// Odd k1 >= 1, k3 >= 1:
/// T-tilde(1) sum over 3-splits of k1 (l1 > 0) and k3 (m3 > 0) of binomial
/// products times EE(k1,l1) EE(k3,m3) times the double-hooked T-tilde
/// = T-tilde(k1+1,1) Tt/T(k3+1) -/+ Tt/T(k1+1,1,k3+1) by parity of k3.
pub fn check_thm15(ctx: Ctx<'_>, k1: usize, k3: usize, tol: f64) -> CheckResult {
    require(k1 % 2 == 1 && k3 >= 1, "thm15 needs odd k1 >= 1 and k3 >= 1")?;
    let depth = k1 + k3;
    let tt1 = ctx.tt(&Index::ones(1))?;
    let mut lhs = ctx.zero();
    for ls in splits(k1, 3, 0) {
        let (l1, l2, l3) = (ls[0], ls[1], ls[2]);
        if l1 == 0 {
            continue;
        }
        let e1 = ctx.entringer_f(k1, l1)?;
        if e1.is_zero() {
            continue;
        }
        for ms in splits(k3, 3, 1) {
            let (m1, m2, m3) = (ms[0], ms[1], ms[2]);
            let e3 = ctx.entringer_f(k3, m3)?;
            if e3.is_zero() {
                continue;
            }
            let c = Rational::from_integer(
                binomial(l1 + m1, l1) * binomial(l2 + m2, l2) * binomial(l3 + m3, l3),
            );
            let coeff = ctx.ratf(&c) * &e1 * &e3 * &tt1.value;
            let p1 = l3 + m3;
            let p2 = p1 + l2 + m2;
            let idx = hook_index(depth, &[p2, p1])?;
            ctx.add(&mut lhs, ONE, &coeff, &ctx.tt(&idx)?);
        }
    }
    let head = Index::new(vec![(k1 + 1) as u32, 1])?;
    let tail = Index::new(vec![(k3 + 1) as u32])?;
    let triple = Index::new(vec![(k1 + 1) as u32, 1, (k3 + 1) as u32])?;
    let mut rhs = ctx.zero();
    if k3 % 2 == 1 {
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.tt(&tail)?);
        rhs.add(&ctx.real_side(&prod));
        rhs.sub(&ctx.real_side(&ctx.tt(&triple)?));
    } else {
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.t(&tail)?);
        rhs.add(&ctx.real_side(&prod));
        rhs.add(&ctx.real_side(&ctx.t(&triple)?));
    }
    Ok(report_sides("thm15", format!("k1={k1},k3={k3}"), &lhs, &rhs, tol))
}

/// k3 >= 1:
/// sum_{m3} EE(k3,m3) sum_{m3 <= m2 <= m1 <= k3} T-tilde(triple hooks, depth k3)
/// = T-tilde(1,1) Tt/T(k3+1) -/+ Tt/T(1,1,k3+1) by parity of k3.
pub fn check_thm16(ctx: Ctx<'_>, k3: usize, tol: f64) -> CheckResult {
    require(k3 >= 1, "thm16 needs k3 >= 1")?;
    let mut lhs = ctx.zero();
    for m3 in 1..=k3 {
        let count = ctx.entringer_f(k3, m3)?;
        if count.is_zero() {
            continue;
        }
        for m2 in m3..=k3 {
            for m1 in m2..=k3 {
                let idx = hook_index(k3, &[m1, m2, m3])?;
                ctx.add(&mut lhs, ONE, &count, &ctx.tt(&idx)?);
            }
        }
    }
    let head = Index::ones(2);
    let tail = Index::new(vec![(k3 + 1) as u32])?;
    let triple = Index::new(vec![1, 1, (k3 + 1) as u32])?;
    let mut rhs = ctx.zero();
    if k3 % 2 == 1 {
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.tt(&tail)?);
        rhs.add(&ctx.real_side(&prod));
        rhs.sub(&ctx.real_side(&ctx.tt(&triple)?));
    } else {
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.t(&tail)?);
        rhs.add(&ctx.real_side(&prod));
        rhs.add(&ctx.real_side(&ctx.t(&triple)?));
    }
    Ok(report_sides("thm16", format!("k3={k3}"), &lhs, &rhs, tol)
        .with_note("middle summation bound read as k3 (statement prints k2)"))
}

/// Even k1 >= 0, k3 >= 1:
/// T-tilde(1) sum over 3-splits (no l1 constraint, m3 > 0) of
/// C(l1+m1,l1) trinomial(1,l2,m2) C(l3+m3,l3) EE(k1,k1-l1) EE(k3,m3)
/// times T-tilde with entries 2 at two separated hooks, depth k1+k3+1
/// = T-tilde(k1+1,2) Tt/T(k3+1) -/+ Tt/T(k1+1,2,k3+1) by parity of k3.
pub fn check_thm17(ctx: Ctx<'_>, k1: usize, k3: usize, tol: f64) -> CheckResult {
    require(k1 % 2 == 0 && k3 >= 1, "thm17 needs even k1 >= 0 and k3 >= 1")?;
    let depth = k1 + k3 + 1;
    let tt1 = ctx.tt(&Index::ones(1))?;
    let mut lhs = ctx.zero();
    for ls in splits(k1, 3, 0) {
        let (l1, l2, l3) = (ls[0], ls[1], ls[2]);
        let e1 = ctx.entringer_f(k1, k1 - l1)?;
        if e1.is_zero() {
            continue;
        }
        for ms in splits(k3, 3, 1) {
            let (m1, m2, m3) = (ms[0], ms[1], ms[2]);
            let e3 = ctx.entringer_f(k3, m3)?;
            if e3.is_zero() {
                continue;
            }
            let c = Rational::from_integer(
                binomial(l1 + m1, l1) * multinomial3(1, l2, m2) * binomial(l3 + m3, l3),
            );
            let coeff = ctx.ratf(&c) * &e1 * &e3 * &tt1.value;
            let q1 = l3 + m3;
            let q2 = q1 + l2 + m2 + 1;
            let idx = hook_index(depth, &[q2, q1])?;
            ctx.add(&mut lhs, ONE, &coeff, &ctx.tt(&idx)?);
        }
    }
    let head = Index::new(vec![(k1 + 1) as u32, 2])?;
    let tail = Index::new(vec![(k3 + 1) as u32])?;
    let triple = Index::new(vec![(k1 + 1) as u32, 2, (k3 + 1) as u32])?;
    let mut rhs = ctx.zero();
    if k3 % 2 == 1 {
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.tt(&tail)?);
        rhs.add(&ctx.real_side(&prod));
        rhs.sub(&ctx.real_side(&ctx.tt(&triple)?));
    } else {
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.t(&tail)?);
        rhs.add(&ctx.real_side(&prod));
        rhs.add(&ctx.real_side(&ctx.t(&triple)?));
    }
    Ok(report_sides("thm17", format!("k1={k1},k3={k3}"), &lhs, &rhs, tol))
}
