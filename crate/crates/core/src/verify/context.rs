//! Shared plumbing for identity checks: evaluation shortcuts, exact
//! coefficient conversion, complex side assembly, and report construction.

use crate::exact::{self, Rational, SeqName};
use crate::gauss::{Complex, Unit};
use crate::index::{Index, IndexError};
use crate::perms::PermError;
use crate::report::{CheckReport, SideSummary};
use crate::triangles::{self, TriangleError};
use crate::tvalues::{self, EvalConfig, EvalError, NumValue};
use num_bigint::BigInt;
use rug::Float;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("bad check parameters: {0}")]
    Param(String),
}

pub type CheckResult = Result<CheckReport, VerifyError>;

/// Evaluation context threading the configuration through a check.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub cfg: &'a EvalConfig,
}

impl<'a> Ctx<'a> {
    pub fn new(cfg: &'a EvalConfig) -> Self {
        Ctx { cfg }
    }

    pub fn prec(&self) -> u32 {
        self.cfg.precision
    }

    pub fn t(&self, k: &Index) -> Result<NumValue, EvalError> {
        tvalues::eval_t(k, self.cfg)
    }

    pub fn tt(&self, k: &Index) -> Result<NumValue, EvalError> {
        tvalues::eval_t_tilde(k, self.cfg)
    }

    pub fn cal_t(&self, a: SeqName, k: &Index, h: usize) -> Result<NumValue, EvalError> {
        tvalues::cal_t(a, k, h, self.cfg)
    }

    pub fn half_pi(&self) -> Float {
        tvalues::half_pi(self.prec())
    }

    /// (pi/2)^n at working precision.
    pub fn half_pi_pow(&self, n: usize) -> Float {
        Float::with_val(self.prec(), rug::ops::Pow::pow(&self.half_pi(), n as u32))
    }

    pub fn ratf(&self, q: &Rational) -> Float {
        tvalues::rational_to_float(q, self.prec())
    }

    pub fn intf(&self, b: &BigInt) -> Float {
        tvalues::bigint_to_float(b, self.prec())
    }

    pub fn one(&self) -> Float {
        Float::with_val(self.prec(), 1)
    }

    pub fn zero(&self) -> Complex {
        Complex::zero(self.prec())
    }

    /// Entringer count as a float coefficient.
    pub fn entringer_f(&self, k: usize, j: usize) -> Result<Float, TriangleError> {
        Ok(self.intf(&triangles::entringer(k, j)?))
    }

    /// Dumont count as a float coefficient.
    pub fn dumont_f(&self, k: usize, j: usize) -> Result<Float, TriangleError> {
        Ok(self.intf(&triangles::dumont_triangle(k, j)?))
    }

    /// a_n / n! as an exact rational.
    pub fn seq_over_factorial(&self, a: SeqName, n: usize) -> Rational {
        let mut q = exact::seq(a, n);
        for d in 2..=n {
            q /= Rational::from_integer(BigInt::from(d));
        }
        q
    }

    /// Product of two evaluated values with first-order error propagation.
    pub fn mul_values(&self, a: &NumValue, b: &NumValue) -> NumValue {
        let prec = self.prec();
        let value = Float::with_val(prec, &a.value * &b.value);
        let err = Float::with_val(prec, &a.value).abs() * &b.err
            + Float::with_val(prec, &b.value).abs() * &a.err;
        let rigor = match (a.rigor, b.rigor) {
            (tvalues::Rigor::Bounded, tvalues::Rigor::Bounded) => tvalues::Rigor::Bounded,
            _ => tvalues::Rigor::Empirical,
        };
        NumValue { value, err, rigor }
    }

    /// Wrap a real value as a complex side.
    pub fn real_side(&self, v: &NumValue) -> Complex {
        Complex::from_real(v.value.clone(), v.err.clone())
    }

    /// unit * coeff * value accumulated into `acc`.
    pub fn add(&self, acc: &mut Complex, unit: Unit, coeff: &Float, v: &NumValue) {
        acc.add_term(unit, coeff, &v.value, &v.err);
    }
}

fn summary(side: &Complex) -> SideSummary {
    SideSummary {
        re: side.re.to_f64(),
        im: side.im.to_f64(),
        err: side.err.to_f64(),
    }
}

/// Build a numeric report from two assembled complex sides.
pub fn report_sides(
    name: &str,
    params: impl Into<String>,
    lhs: &Complex,
    rhs: &Complex,
    tol: f64,
) -> CheckReport {
    let residual = lhs.residual(rhs).to_f64();
    CheckReport::numeric(name, params, summary(lhs), summary(rhs), residual, tol)
}

/// Build a numeric report whose residual is the max over several pairwise
/// form comparisons (used where a theorem displays several equal forms).
pub fn report_forms(
    name: &str,
    params: impl Into<String>,
    forms: &[&Complex],
    tol: f64,
) -> CheckReport {
    assert!(forms.len() >= 2);
    let mut residual = 0f64;
    for pair in forms.windows(2) {
        residual = residual.max(pair[0].residual(pair[1]).to_f64());
    }
    CheckReport::numeric(
        name,
        params,
        summary(forms[0]),
        summary(forms[forms.len() - 1]),
        residual,
        tol,
    )
}
