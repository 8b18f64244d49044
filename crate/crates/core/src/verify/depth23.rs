//! Depth-two and depth-three specializations: each theorem displays a named
//! closed side plus two sum forms (a coefficient double sum and a
//! composition sum); all forms are evaluated and compared.

use super::context::{report_forms, CheckResult, Ctx, VerifyError};
use crate::exact::{self, binomial, multinomial3, Rational, SeqName};
use crate::gauss::{Complex, Unit};
use crate::index::{hook_index, Index};
use crate::tvalues::splits;
use num_traits::Zero;

fn require(cond: bool, msg: &str) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError::Param(msg.to_string()))
    }
}

fn ones_then(ones: usize, head: &[u32], tail_ones: usize) -> Result<Index, VerifyError> {
    let mut parts = vec![1u32; ones];
    parts.extend_from_slice(head);
    parts.extend(std::iter::repeat(1).take(tail_ones));
    Ok(Index::new(parts)?)
}

/// Depth-two relation: for k1 + k2 even,
///   -T-tilde(k1+1, k2) (a = C) or T(k1+1, k2) (a = D)
/// equals both the E x a coefficient double sum and the composition form.
pub fn check_thm39(ctx: Ctx<'_>, a: SeqName, k1: usize, k2: usize, tol: f64) -> CheckResult {
    require((k1 + k2) % 2 == 0, "thm39 needs k1 + k2 even")?;
    require(matches!(a, SeqName::C | SeqName::D), "thm39 weights are C or D")?;
    require(k2 >= 1 && (a == SeqName::C || k2 >= 2), "k2 too small for the chosen weight")?;

    let target = Index::new(vec![(k1 + 1) as u32, k2 as u32])?;
    let mut named = ctx.zero();
    if a == SeqName::C {
        named.sub(&ctx.real_side(&ctx.tt(&target)?));
    } else {
        named.add(&ctx.real_side(&ctx.t(&target)?));
    }

    let unit = Unit::i_pow(-(k1 as i64) - k2 as i64);

    // coefficient double sum
    let mut form1 = ctx.zero();
    for m in 0..=k1 {
        let em = ctx.seq_over_factorial(SeqName::E, m);
        if em.is_zero() {
            continue;
        }
        for n in 0..k2 {
            let an = ctx.seq_over_factorial(a, n);
            if an.is_zero() {
                continue;
            }
            let coeff = ctx.ratf(&(em.clone() * an)) * ctx.half_pi_pow(m + n);
            let idx = ones_then(k2 - n - 1, &[2], k1 - m)?;
            ctx.add(&mut form1, unit, &coeff, &ctx.tt(&idx)?);
        }
    }

    // composition form
    let mut form2 = ctx.zero();
    for l1 in 0..=k1 {
        let l2 = k1 - l1;
        let mut e_inner = Rational::zero();
        for h in 0..=l1 {
            e_inner += Rational::from_integer(binomial(l1, h)) * exact::seq(SeqName::E, k1 - h);
        }
        if e_inner.is_zero() {
            continue;
        }
        for m2 in 1..=k2 {
            let m1 = k2 - m2;
            let mut a_inner = Rational::zero();
            for n in 1..=m2 {
                a_inner += Rational::from_integer(binomial(m2, n)) * exact::seq(a, k2 - n);
            }
            if a_inner.is_zero() {
                continue;
            }
            let coeff_q = e_inner.clone()
                * a_inner
                * Rational::from_integer(binomial(l1 + m1, l1) * binomial(l2 + m2, l2));
            let idx = ones_then(l2 + m2 - 1, &[2], l1 + m1)?;
            ctx.add(&mut form2, unit, &ctx.ratf(&coeff_q), &ctx.tt(&idx)?);
        }
    }

    Ok(report_forms(
        "thm39",
        format!("a={a},k1={k1},k2={k2}"),
        &[&named, &form1, &form2],
        tol,
    ))
}

/// Depth-two Genocchi form: for odd k2 >= 3,
/// T(1,k2) + T-tilde(1,k2) equals the G_{n+1}/(n+1) weighted sum and its
/// hooked composition form over depth k2 - 1.
pub fn check_thm310(ctx: Ctx<'_>, k2: usize, tol: f64) -> CheckResult {
    require(k2 % 2 == 1 && k2 >= 3, "needs odd k2 >= 3")?;
    let target = Index::new(vec![1, k2 as u32])?;
    let mut named = ctx.real_side(&ctx.t(&target)?);
    named.add(&ctx.real_side(&ctx.tt(&target)?));

    let unit = Unit::i_pow(1 - k2 as i64);

    let mut form1 = ctx.zero();
    for n in 0..=k2 - 2 {
        // G_{n+1}/(n+1)! (pi/2)^n
        let q = ctx.seq_over_factorial(SeqName::G, n + 1);
        if q.is_zero() {
            continue;
        }
        let coeff = ctx.ratf(&q) * ctx.half_pi_pow(n);
        let idx = ones_then(k2 - n - 2, &[3], 0)?;
        ctx.add(&mut form1, unit, &coeff, &ctx.tt(&idx)?);
    }

    let mut form2 = ctx.zero();
    for m2 in 1..=k2 - 1 {
        let mut inner = Rational::zero();
        for n in 1..=m2 {
            inner += Rational::from_integer(binomial(m2, n)) * exact::seq(SeqName::G, k2 - n)
                / Rational::from_integer((k2 - n).into());
        }
        if inner.is_zero() {
            continue;
        }
        let coeff = ctx.ratf(&inner);
        for m1 in m2..=k2 - 1 {
            let idx = hook_index(k2 - 1, &[m1, m2])?;
            ctx.add(&mut form2, unit, &coeff, &ctx.tt(&idx)?);
        }
    }

    Ok(report_forms("thm310", format!("k2={k2}"), &[&named, &form1, &form2], tol))
}

// Shared assembly for the two depth-three families. `middle` is the fixed
// middle part of the index (1 or 2); the `second_seq` weights the n-sum (E
// on the even branch, F on the odd branch).
struct Depth3Spec {
    middle: u32,
    k1: usize,
    k3: usize,
}

fn depth3_forms(
    ctx: Ctx<'_>,
    spec: &Depth3Spec,
    second_seq: SeqName,
    unit: Unit,
) -> Result<(Complex, Complex), VerifyError> {
    let Depth3Spec { middle, k1, k3 } = *spec;
    let mid_extra = (middle - 1) as usize; // 0 for middle 1, 1 for middle 2

    // coefficient double sum: E_m second_n with the dual family
    // ({1}^{k3-1-n}, middle+1-ish core, {1}^{k1-m}); the core is (Tail of
    // dual): middle 1 -> single 3, middle 2 -> (2, 2).
    let core: &[u32] = if middle == 1 { &[3] } else { &[2, 2] };
    let mut form1 = ctx.zero();
    for m in 0..=k1 {
        let em = ctx.seq_over_factorial(SeqName::E, m);
        if em.is_zero() {
            continue;
        }
        for n in 0..k3 {
            let an = ctx.seq_over_factorial(second_seq, n);
            if an.is_zero() {
                continue;
            }
            let coeff = ctx.ratf(&(em.clone() * an)) * ctx.half_pi_pow(m + n + 1);
            let idx = ones_then(k3 - 1 - n, core, k1 - m)?;
            ctx.add(&mut form1, unit, &coeff, &ctx.tt(&idx)?);
        }
    }

    // composition form over splits of k1 and k3
    let depth = k1 + k3 + mid_extra;
    let hp = ctx.half_pi();
    let mut form2 = ctx.zero();
    for ls in splits(k1, 3, 0) {
        let (l1, l2, l3) = (ls[0], ls[1], ls[2]);
        let mut e_inner = Rational::zero();
        for h in 0..=l1 {
            e_inner += Rational::from_integer(binomial(l1, h)) * exact::seq(SeqName::E, k1 - h);
        }
        if e_inner.is_zero() {
            continue;
        }
        for ms in splits(k3, 3, 1) {
            let (m1, m2, m3) = (ms[0], ms[1], ms[2]);
            let mut s_inner = Rational::zero();
            for n in 1..=m3 {
                s_inner += Rational::from_integer(binomial(m3, n)) * exact::seq(second_seq, k3 - n);
            }
            if s_inner.is_zero() {
                continue;
            }
            let mid_binom = if middle == 1 {
                binomial(l2 + m2, l2)
            } else {
                multinomial3(1, l2, m2)
            };
            let coeff_q = e_inner.clone()
                * s_inner
                * Rational::from_integer(binomial(l1 + m1, l1) * mid_binom * binomial(l3 + m3, l3));
            let p1 = l3 + m3;
            let p2 = p1 + l2 + m2 + mid_extra;
            let idx = hook_index(depth, &[p2, p1])?;
            let coeff = ctx.ratf(&coeff_q) * &hp;
            ctx.add(&mut form2, unit, &coeff, &ctx.tt(&idx)?);
        }
    }
    Ok((form1, form2))
}

/// Depth-three family at (k1+1, 1, k3+1): the named side depends on the
/// parity of k1 + k3 and of k3.
pub fn check_thm311(ctx: Ctx<'_>, k1: usize, k3: usize, tol: f64) -> CheckResult {
    require(k3 >= 1, "needs k3 >= 1")?;
    let spec = Depth3Spec { middle: 1, k1, k3 };
    let triple = Index::new(vec![(k1 + 1) as u32, 1, (k3 + 1) as u32])?;
    let head = Index::new(vec![(k1 + 1) as u32, 1])?;
    let tail = Index::new(vec![(k3 + 1) as u32])?;
    let even_total = (k1 + k3) % 2 == 0;

    let mut named = ctx.zero();
    let (second_seq, unit) = if even_total {
        // T-tilde(k1+1,1,k3+1) - [k3 even] EE_{k3}/k3! (pi/2)^{k3} Tt(k1+1,1,1)
        //                     - [k3 odd] Tt(k1+1,1) Tt(k3+1)
        named.add(&ctx.real_side(&ctx.tt(&triple)?));
        if k3 % 2 == 0 {
            let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Ee, k3)) * ctx.half_pi_pow(k3);
            let ones3 = Index::new(vec![(k1 + 1) as u32, 1, 1])?;
            ctx.add(&mut named, -Unit::i_pow(0), &coeff, &ctx.tt(&ones3)?);
        } else {
            let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.tt(&tail)?);
            named.sub(&ctx.real_side(&prod));
        }
        (SeqName::E, Unit::i_pow(-(k1 as i64) - k3 as i64))
    } else {
        // T(k1+1,1,k3+1) + [k3 odd] EE_{k3}/k3! (pi/2)^{k3} Tt(k1+1,1,1)
        //               + [k3 even] Tt(k1+1,1) T(k3+1)
        named.add(&ctx.real_side(&ctx.t(&triple)?));
        if k3 % 2 == 1 {
            let coeff = ctx.ratf(&ctx.seq_over_factorial(SeqName::Ee, k3)) * ctx.half_pi_pow(k3);
            let ones3 = Index::new(vec![(k1 + 1) as u32, 1, 1])?;
            ctx.add(&mut named, Unit::i_pow(0), &coeff, &ctx.tt(&ones3)?);
        } else {
            let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.t(&tail)?);
            named.add(&ctx.real_side(&prod));
        }
        (SeqName::F, Unit::i_pow(1 - k1 as i64 - k3 as i64))
    };

    let (form1, form2) = depth3_forms(ctx, &spec, second_seq, unit)?;
    Ok(report_forms(
        "thm311",
        format!("k1={k1},k3={k3}"),
        &[&named, &form1, &form2],
        tol,
    ))
}

/// The (1, 1, k3+1) specialization with the quadruple-hook middle form.
pub fn check_thm16_form(ctx: Ctx<'_>, k3: usize, tol: f64) -> CheckResult {
    require(k3 >= 1, "needs k3 >= 1")?;
    let triple = Index::new(vec![1, 1, (k3 + 1) as u32])?;
    let head = Index::ones(2);
    let tail = Index::new(vec![(k3 + 1) as u32])?;
    let odd = k3 % 2 == 1;

    let mut named = ctx.zero();
    let (seq, unit) = if odd {
        named.add(&ctx.real_side(&ctx.tt(&triple)?));
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.tt(&tail)?);
        named.sub(&ctx.real_side(&prod));
        (SeqName::E, Unit::i_pow(-1 - k3 as i64))
    } else {
        named.add(&ctx.real_side(&ctx.t(&triple)?));
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.t(&tail)?);
        named.add(&ctx.real_side(&prod));
        (SeqName::F, Unit::i_pow(-(k3 as i64)))
    };

    let mut form1 = ctx.zero();
    for n in 0..k3 {
        let an = ctx.seq_over_factorial(seq, n);
        if an.is_zero() {
            continue;
        }
        let coeff = ctx.ratf(&an) * ctx.half_pi_pow(n);
        let idx = ones_then(k3 - 1 - n, &[4], 0)?;
        ctx.add(&mut form1, unit, &coeff, &ctx.tt(&idx)?);
    }

    let mut form2 = ctx.zero();
    for m3 in 1..=k3 {
        let mut inner = Rational::zero();
        for n in 1..=m3 {
            inner += Rational::from_integer(binomial(m3, n)) * exact::seq(seq, k3 - n);
        }
        if inner.is_zero() {
            continue;
        }
        let coeff = ctx.ratf(&inner);
        for m2 in m3..=k3 {
            for m1 in m2..=k3 {
                let idx = hook_index(k3, &[m1, m2, m3])?;
                ctx.add(&mut form2, unit, &coeff, &ctx.tt(&idx)?);
            }
        }
    }

    Ok(
        report_forms("thm16form", format!("k3={k3}"), &[&named, &form1, &form2], tol)
            .with_note("middle summation bound read as k3 (statement prints k2)"),
    )
}

/// The (k1+1, 2, k3+1) family for even k1: named side against the
/// (..., 2, 2, ...) coefficient sum and the trinomial composition form.
pub fn check_thm17_form(ctx: Ctx<'_>, k1: usize, k3: usize, tol: f64) -> CheckResult {
    require(k1 % 2 == 0 && k3 >= 1, "needs even k1 and k3 >= 1")?;
    let spec = Depth3Spec { middle: 2, k1, k3 };
    let triple = Index::new(vec![(k1 + 1) as u32, 2, (k3 + 1) as u32])?;
    let head = Index::new(vec![(k1 + 1) as u32, 2])?;
    let tail = Index::new(vec![(k3 + 1) as u32])?;
    let odd = k3 % 2 == 1;

    let mut named = ctx.zero();
    let (second_seq, unit) = if odd {
        named.add(&ctx.real_side(&ctx.tt(&triple)?));
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.tt(&tail)?);
        named.sub(&ctx.real_side(&prod));
        (SeqName::E, Unit::i_pow(-(k1 as i64) - k3 as i64 - 1))
    } else {
        named.add(&ctx.real_side(&ctx.t(&triple)?));
        let prod = ctx.mul_values(&ctx.tt(&head)?, &ctx.t(&tail)?);
        named.add(&ctx.real_side(&prod));
        (SeqName::F, Unit::i_pow(-(k1 as i64) - k3 as i64))
    };

    let (form1, form2) = depth3_forms(ctx, &spec, second_seq, unit)?;
    Ok(report_forms(
        "thm17form",
        format!("k1={k1},k3={k3}"),
        &[&named, &form1, &form2],
        tol,
    ))
}
