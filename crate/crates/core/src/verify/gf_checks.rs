//! Exponential-generating-function checks: the truncated series of each
//! sequence against its closed form at the sample point X0 = 1/2, with a
//! proven Taylor tail bound.
//!
//! The bounds use |a_n|/n! <= K rho^{-n}, with (K, rho) derived from the
//! classical zeta/beta series for the Bernoulli and Euler families; the
//! sample point sits well inside every disc of convergence.

use super::context::{Ctx, VerifyError};
use crate::exact::{self, SeqName};
use crate::report::{CheckReport, SideSummary};
use rug::Float;

const X0_NUM: u32 = 1; // X0 = 1/2
const X0_DEN: u32 = 2;

// (K, rho) with rho expressed as a multiple of pi: rho = rho_pi_num/rho_pi_den * pi
fn growth_bound(name: SeqName) -> (u32, u32, u32) {
    match name {
        SeqName::B => (4, 2, 1),  // 4 (2pi)^-n
        SeqName::C => (12, 1, 1), // 12 pi^-n
        SeqName::D => (4, 1, 1),
        SeqName::E => (2, 1, 2), // 2 (pi/2)^-n
        SeqName::F => (3, 1, 2),
        SeqName::G => (16, 1, 1),
        SeqName::Ee => (4, 1, 2),
        SeqName::Gg => (16, 1, 1),
    }
}

fn closed_form(name: SeqName, x: &Float, prec: u32) -> Float {
    let ex = Float::with_val(prec, x.exp_ref());
    let emx = Float::with_val(prec, ex.recip_ref());
    match name {
        SeqName::B => x.clone() / (ex - 1u32),
        SeqName::C => Float::with_val(prec, 2 * x) / (ex - emx),
        SeqName::D => Float::with_val(prec, 2 * x) * &emx / (ex - &emx),
        SeqName::E => Float::with_val(prec, 2) / (ex + emx),
        SeqName::F => Float::with_val(prec, 2) * &emx / (ex + &emx),
        SeqName::G => Float::with_val(prec, 2 * x) / (ex + 1u32),
        SeqName::Ee => {
            let cos = Float::with_val(prec, x.cos_ref());
            let sin = Float::with_val(prec, x.sin_ref());
            (1u32 + sin) / cos
        }
        SeqName::Gg => {
            let half = Float::with_val(prec, x / 2u32);
            x.clone() + x.clone() * half.tan()
        }
    }
}

/// Tail bound sum_{n >= trunc} K (X0/rho)^n = K q^trunc / (1 - q).
fn tail_bound(name: SeqName, trunc: usize, prec: u32) -> Float {
    let (k, num, den) = growth_bound(name);
    let rho = Float::with_val(prec, rug::float::Constant::Pi) * num / den;
    let x0 = Float::with_val(prec, X0_NUM) / X0_DEN;
    let q = x0 / rho;
    let qn = Float::with_val(prec, rug::ops::Pow::pow(&q, trunc as u32));
    Float::with_val(prec, k) * qn / (Float::with_val(prec, 1) - &q)
}

/// Compare the truncated exponential generating series against the closed
/// form at X0; passes when the difference stays within the tail bound.
pub fn check_sequence_gf(ctx: Ctx<'_>, name: SeqName, trunc: usize) -> Result<CheckReport, VerifyError> {
    if trunc < 1 {
        return Err(VerifyError::Param("truncation order must be >= 1".into()));
    }
    let prec = ctx.prec();
    let x0 = Float::with_val(prec, X0_NUM) / X0_DEN;

    let mut series = Float::new(prec);
    let mut x_pow = Float::with_val(prec, 1);
    let mut factorial = Float::with_val(prec, 1);
    for n in 0..trunc {
        if n > 0 {
            x_pow *= &x0;
            factorial *= n as u32;
        }
        let coeff = ctx.ratf(&exact::seq(name, n));
        series += coeff * &x_pow / &factorial;
    }

    let closed = closed_form(name, &x0, prec);
    let bound = tail_bound(name, trunc, prec);
    // arithmetic noise of the two evaluations; the check is meaningless if
    // the tail bound sits below it
    let noise = Float::with_val(prec, &closed).abs() >> (prec - 8);
    if bound < noise {
        return Err(VerifyError::Param(format!(
            "precision {prec} too low to resolve the tail bound at truncation {trunc}"
        )));
    }
    let diff = Float::with_val(prec, &series - &closed).abs();
    let pass = diff <= bound;
    let mut report = CheckReport::numeric(
        "gf",
        format!("{name},N={trunc}"),
        SideSummary { re: series.to_f64(), im: 0.0, err: 0.0 },
        SideSummary { re: closed.to_f64(), im: 0.0, err: bound.to_f64() },
        diff.to_f64(),
        bound.to_f64(),
    );
    report.pass = pass;
    Ok(report)
}
