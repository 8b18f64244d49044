//! Euler-Maclaurin evaluation of parity-restricted tails
//! `sum_{m > cutoff, m = parity (mod 2)} m^{-s}` for integer s >= 2.
//!
//! Rewriting the lattice as x0 + 2j reduces the tail to a Hurwitz zeta at a
//! large argument, where the Euler-Maclaurin expansion converges extremely
//! fast and its remainder is bounded by the first omitted term.

use super::rational_to_float;
use crate::exact;
use rug::ops::Pow;
use rug::Float;

// Correction terms scale with the requested precision; each term gains
// roughly 2 log2(pi * cutoff) bits, so this is generous for any cutoff the
// config validation allows.
fn em_terms(prec: u32) -> usize {
    ((prec / 16) as usize).clamp(8, 64)
}

/// (tail value, remainder bound).
pub(super) fn parity_tail(s: u32, cutoff: usize, parity: usize, prec: u32) -> (Float, Float) {
    debug_assert!(s >= 2);
    let mut x0 = cutoff + 1;
    if x0 % 2 != parity % 2 {
        x0 += 1;
    }
    // a = x0 / 2; tail = 2^{-s} zeta(s, a)
    let a = Float::with_val(prec, x0 as u64) / 2u32;
    let terms = em_terms(prec);

    // zeta(s, a) ~ a^{1-s}/(s-1) + a^{-s}/2 + sum B_{2l}/(2l)! (s)_{2l-1} a^{1-s-2l}
    let mut acc = Float::with_val(prec, (&a).pow(1 - s as i32)) / (s - 1);
    acc += Float::with_val(prec, (&a).pow(-(s as i32))) / 2u32;
    let mut prev = Float::with_val(prec, 1);
    for l in 1..=terms {
        let term = em_term(s, l, &a, prec);
        // stop once the expansion turns (possible at small cutoffs)
        let mag = term.clone().abs();
        if l > 1 && mag > prev {
            let scale = Float::with_val(prec, 2u32).pow(-(s as i32));
            return (acc * &scale, mag * &scale);
        }
        prev = mag;
        acc += term;
    }
    let bound = em_term(s, terms + 1, &a, prec).abs();

    let scale = Float::with_val(prec, 2u32).pow(-(s as i32));
    (acc * &scale, bound * &scale)
}

// B_{2l}/(2l)! * (s)_{2l-1} * a^{1-s-2l}
fn em_term(s: u32, l: usize, a: &Float, prec: u32) -> Float {
    let b = exact::bernoulli(2 * l);
    let mut coeff = rational_to_float(&b, prec);
    for d in 0..(2 * l - 1) as u32 {
        coeff *= s + d;
    }
    for d in 1..=(2 * l) as u32 {
        coeff /= d;
    }
    coeff * Float::with_val(prec, a.pow(1 - s as i32 - 2 * l as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_tail_of_exponent_two_matches_closed_form() {
        // sum over odd m of m^{-2} = pi^2/8; subtract a directly summed head
        let prec = 192;
        let n = 4001usize;
        let mut head = Float::new(prec);
        for m in (1..=n).step_by(2) {
            head += Float::with_val(prec, m as u64).pow(-2i32);
        }
        let (tail, bound) = parity_tail(2, n, 1, prec);
        let total = head + tail;
        let want = Float::with_val(prec, rug::float::Constant::Pi).square() / 8u32;
        let diff = Float::with_val(prec, &total - &want).abs();
        assert!(diff.to_f64() < 1e-40, "diff = {:e}", diff.to_f64());
        assert!(bound.to_f64() < 1e-30);
    }

    #[test]
    fn even_tail_matches_brute_extension() {
        // compare the EM tail against brutally extending the sum far beyond
        let prec = 160;
        let n = 2000usize;
        let far = 400_000usize;
        let s = 3u32;
        let mut brute = Float::new(prec);
        let mut m = n + 2; // first even beyond cutoff
        while m <= far {
            brute += Float::with_val(prec, m as u64).pow(-(s as i32));
            m += 2;
        }
        let (tail_n, _) = parity_tail(s, n, 0, prec);
        let (tail_far, _) = parity_tail(s, far, 0, prec);
        let diff = Float::with_val(prec, tail_n - brute - tail_far).abs();
        assert!(diff.to_f64() < 1e-35, "diff = {:e}", diff.to_f64());
    }
}
