//! Exact arithmetic with fourth roots of unity, and a complex accumulator
//! whose real/imaginary parts are arbitrary-precision floats.
//!
//! Identity checks need the bookkeeping of powers of i to be exact: a unit
//! is never floated, only its product with a real evaluation is.

use rug::Float;
use std::fmt;
use std::ops::{Mul, Neg};

/// One of 1, i, -1, -i, stored as the exponent of i modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unit(u8);

pub const ONE: Unit = Unit(0);
pub const I: Unit = Unit(1);

impl Unit {
    /// i^n for any signed exponent.
    pub fn i_pow(n: i64) -> Unit {
        Unit(n.rem_euclid(4) as u8)
    }

    /// (real, imaginary) components, each -1, 0 or 1.
    pub fn components(self) -> (i8, i8) {
        match self.0 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        }
    }

    pub fn conj(self) -> Unit {
        Unit((4 - self.0) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0 % 2 == 0
    }
}

impl Mul for Unit {
    type Output = Unit;

    fn mul(self, rhs: Unit) -> Unit {
        Unit((self.0 + rhs.0) % 4)
    }
}

impl Neg for Unit {
    type Output = Unit;

    fn neg(self) -> Unit {
        Unit((self.0 + 2) % 4)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        })
    }
}

/// Complex accumulator: exact-unit terms times real high-precision values,
/// with a scalar first-order error bound accumulated alongside.
#[derive(Debug, Clone)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
    pub err: Float,
}

impl Complex {
    pub fn zero(prec: u32) -> Self {
        Complex {
            re: Float::new(prec),
            im: Float::new(prec),
            err: Float::new(prec),
        }
    }

    pub fn from_real(value: Float, err: Float) -> Self {
        let prec = value.prec();
        Complex {
            re: value,
            im: Float::new(prec),
            err,
        }
    }

    /// Accumulate `unit * coeff * value`, where `coeff` is real and exact
    /// for error purposes and `value_err` bounds the error in `value`.
    pub fn add_term(&mut self, unit: Unit, coeff: &Float, value: &Float, value_err: &Float) {
        let term = Float::with_val(self.re.prec(), coeff * value);
        let (re, im) = unit.components();
        match re {
            1 => self.re += &term,
            -1 => self.re -= &term,
            _ => {}
        }
        match im {
            1 => self.im += &term,
            -1 => self.im -= &term,
            _ => {}
        }
        let mut e = Float::with_val(self.err.prec(), coeff);
        e.abs_mut();
        self.err += e * value_err;
    }

    pub fn add(&mut self, other: &Complex) {
        self.re += &other.re;
        self.im += &other.im;
        self.err += &other.err;
    }

    pub fn sub(&mut self, other: &Complex) {
        self.re -= &other.re;
        self.im -= &other.im;
        self.err += &other.err;
    }

    pub fn scale_unit(&mut self, unit: Unit) {
        match unit.0 {
            0 => {}
            1 => {
                std::mem::swap(&mut self.re, &mut self.im);
                self.re = -self.re.clone();
            }
            2 => {
                self.re = -self.re.clone();
                self.im = -self.im.clone();
            }
            _ => {
                std::mem::swap(&mut self.re, &mut self.im);
                self.im = -self.im.clone();
            }
        }
    }

    /// Max of |re_lhs - re_rhs| and |im_lhs - im_rhs|.
    pub fn residual(&self, other: &Complex) -> Float {
        let dr = Float::with_val(self.re.prec(), &self.re - &other.re).abs();
        let di = Float::with_val(self.im.prec(), &self.im - &other.im).abs();
        if dr > di {
            dr
        } else {
            di
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_arithmetic() {
        assert_eq!(Unit::i_pow(0), ONE);
        assert_eq!(Unit::i_pow(5), I);
        assert_eq!(Unit::i_pow(-1), I.conj());
        assert_eq!(Unit::i_pow(-6), Unit::i_pow(2));
        assert_eq!(I * I, Unit::i_pow(2));
        assert_eq!(-ONE, Unit::i_pow(2));
        assert_eq!(I.conj(), -I);
        assert!(ONE.is_real());
        assert!(!I.is_real());
        assert_eq!(Unit::i_pow(3).components(), (0, -1));
    }

    #[test]
    fn accumulator() {
        let prec = 64;
        let mut acc = Complex::zero(prec);
        let one = Float::with_val(prec, 1);
        let half = Float::with_val(prec, 0.5);
        let no_err = Float::new(prec);
        acc.add_term(I, &half, &one, &no_err);
        acc.add_term(ONE, &one, &one, &no_err);
        assert_eq!(acc.re.to_f64(), 1.0);
        assert_eq!(acc.im.to_f64(), 0.5);
        acc.scale_unit(I);
        assert_eq!(acc.re.to_f64(), -0.5);
        assert_eq!(acc.im.to_f64(), 1.0);
        let zero = Complex::zero(prec);
        assert_eq!(acc.residual(&zero).to_f64(), 1.0);
    }
}
