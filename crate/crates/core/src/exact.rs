//! Exact computation of the eight sequences B, C, D, E, F, G, EE, GG and
//! the binomial/multinomial coefficients used throughout the crate.
//!
//! All arithmetic is exact: values are `BigRational` (integer sequences come
//! out with denominator 1). Tables are memoized and extended in place as
//! larger indices are requested; after extension they are immutable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (`num_rational` maintains both invariants).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("unknown sequence identifier `{0}`")]
    UnknownSequence(String),
}

/// Identifier of one of the eight sequences.
///
/// `Ee` and `Gg` are the ASCII spellings of the blackboard-bold variants
/// (total counts of down-up and Dumont permutations respectively).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum SeqName {
    B,
    C,
    D,
    E,
    F,
    G,
    Ee,
    Gg,
}

impl SeqName {
    pub const ALL: [SeqName; 8] = [
        SeqName::B,
        SeqName::C,
        SeqName::D,
        SeqName::E,
        SeqName::F,
        SeqName::G,
        SeqName::Ee,
        SeqName::Gg,
    ];
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeqName::B => "B",
            SeqName::C => "C",
            SeqName::D => "D",
            SeqName::E => "E",
            SeqName::F => "F",
            SeqName::G => "G",
            SeqName::Ee => "EE",
            SeqName::Gg => "GG",
        };
        f.write_str(s)
    }
}

impl FromStr for SeqName {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" => Ok(SeqName::B),
            "C" => Ok(SeqName::C),
            "D" => Ok(SeqName::D),
            "E" => Ok(SeqName::E),
            "F" => Ok(SeqName::F),
            "G" => Ok(SeqName::G),
            "EE" | "\u{1d53c}" => Ok(SeqName::Ee), // 𝔼
            "GG" | "\u{1d53e}" => Ok(SeqName::Gg), // 𝔾
            other => Err(ExactError::UnknownSequence(other.to_string())),
        }
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rat_int(n: i64) -> Rational {
    Rational::from_integer(big(n))
}

// Memoized tables. Built under a mutex, read by cloning; callers never
// observe a partially extended row.
struct Tables {
    bernoulli: Vec<Rational>,
    euler: Vec<BigInt>,
    pascal: Vec<Vec<BigInt>>,
}

static TABLES: Mutex<Option<Tables>> = Mutex::new(None);

fn with_tables<R>(f: impl FnOnce(&mut Tables) -> R) -> R {
    let mut guard = TABLES.lock().unwrap();
    let tables = guard.get_or_insert_with(|| Tables {
        bernoulli: vec![Rational::one()],
        euler: vec![BigInt::one()],
        pascal: vec![vec![BigInt::one()]],
    });
    f(tables)
}

impl Tables {
    // Pascal rows up to n inclusive.
    fn extend_pascal(&mut self, n: usize) {
        while self.pascal.len() <= n {
            let prev = self.pascal.last().unwrap();
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::one());
            self.pascal.push(row);
        }
    }

    // B_n from the convolution recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0,
    // which yields the B_1 = -1/2 convention.
    fn extend_bernoulli(&mut self, n: usize) {
        self.extend_pascal(n + 1);
        while self.bernoulli.len() <= n {
            let m = self.bernoulli.len();
            let mut acc = Rational::zero();
            for (j, b) in self.bernoulli.iter().enumerate() {
                acc += b * Rational::from_integer(self.pascal[m + 1][j].clone());
            }
            let value = -acc / rat_int((m + 1) as i64);
            self.bernoulli.push(value);
        }
    }

    // E_n from E_0 = 1, E_odd = 0 and sum_{j even <= n} C(n,j) E_j = 0 for
    // even n >= 2.
    fn extend_euler(&mut self, n: usize) {
        self.extend_pascal(n);
        while self.euler.len() <= n {
            let m = self.euler.len();
            if m % 2 == 1 {
                self.euler.push(BigInt::zero());
                continue;
            }
            let mut acc = BigInt::zero();
            for j in (0..m).step_by(2) {
                acc += &self.pascal[m][j] * &self.euler[j];
            }
            self.euler.push(-acc);
        }
    }
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    with_tables(|t| {
        t.extend_pascal(n);
        t.pascal[n][k].clone()
    })
}

/// Trinomial coefficient `(a+b+c)! / (a! b! c!)`.
pub fn multinomial3(a: usize, b: usize, c: usize) -> BigInt {
    binomial(a + b + c, a) * binomial(b + c, b)
}

/// Bernoulli number `B_n` with the `B_1 = -1/2` convention.
pub fn bernoulli(n: usize) -> Rational {
    with_tables(|t| {
        t.extend_bernoulli(n);
        t.bernoulli[n].clone()
    })
}

/// Euler number `E_n` (secant numbers: 1, 0, -1, 0, 5, 0, -61, ...).
pub fn euler(n: usize) -> BigInt {
    with_tables(|t| {
        t.extend_euler(n);
        t.euler[n].clone()
    })
}

fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// `n`-th value of the named sequence, exact.
pub fn seq(name: SeqName, n: usize) -> Rational {
    match name {
        SeqName::B => bernoulli(n),
        SeqName::C => bernoulli(n) * Rational::from_integer(big(2) - pow2(n)),
        SeqName::D => bernoulli(n) * Rational::from_integer(pow2(n)),
        SeqName::E => Rational::from_integer(euler(n)),
        SeqName::F => {
            // (2^{n+1} - 4^{n+1}) B_{n+1} / (n+1); always an integer.
            let num = pow2(n + 1) - pow2(2 * (n + 1));
            let v = bernoulli(n + 1) * Rational::from_integer(num) / rat_int((n + 1) as i64);
            debug_assert!(v.is_integer());
            v
        }
        SeqName::G => bernoulli(n) * Rational::from_integer((big(1) - pow2(n)) * big(2)),
        SeqName::Ee => {
            // i^n E_n for even n, i^{n+1} F_n for odd n, with the i-power
            // folded into a sign.
            let v = if n % 2 == 0 {
                let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
                Rational::from_integer(euler(n) * big(sign))
            } else {
                let sign = if ((n + 1) / 2) % 2 == 0 { 1 } else { -1 };
                seq(SeqName::F, n) * rat_int(sign)
            };
            debug_assert!(!v.is_negative());
            v
        }
        SeqName::Gg => {
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            let v = seq(SeqName::G, n) * rat_int(sign);
            debug_assert!(!v.is_negative());
            v
        }
    }
}

/// Integer sequence value, for the four sequences that are integral by
/// construction. Panics if the exact value has a denominator (which would
/// signal a bug in the recurrences).
pub fn seq_int(name: SeqName, n: usize) -> BigInt {
    let v = seq(name, n);
    assert!(v.is_integer(), "{name}_{n} is not an integer: {v}");
    v.to_integer()
}

/// The first `n_max + 1` values of a sequence.
pub fn sequence_table(name: SeqName, n_max: usize) -> Vec<Rational> {
    (0..=n_max).map(|n| seq(name, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    // First eleven values of each sequence, frozen from the reference table.
    const TABLE: [(SeqName, [&str; 11]); 8] = [
        (
            SeqName::B,
            ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66"],
        ),
        (
            SeqName::C,
            ["1", "0", "-1/3", "0", "7/15", "0", "-31/21", "0", "127/15", "0", "-2555/33"],
        ),
        (
            SeqName::D,
            ["1", "-1", "2/3", "0", "-8/15", "0", "32/21", "0", "-128/15", "0", "2560/33"],
        ),
        (
            SeqName::E,
            ["1", "0", "-1", "0", "5", "0", "-61", "0", "1385", "0", "-50521"],
        ),
        (
            SeqName::F,
            ["1", "-1", "0", "2", "0", "-16", "0", "272", "0", "-7936", "0"],
        ),
        (
            SeqName::G,
            ["0", "1", "-1", "0", "1", "0", "-3", "0", "17", "0", "-155"],
        ),
        (
            SeqName::Ee,
            ["1", "1", "1", "2", "5", "16", "61", "272", "1385", "7936", "50521"],
        ),
        (
            SeqName::Gg,
            ["0", "1", "1", "0", "1", "0", "3", "0", "17", "0", "155"],
        ),
    ];

    #[test]
    fn first_eleven_values_match_reference_table() {
        for (name, row) in TABLE {
            for (n, want) in row.iter().enumerate() {
                assert_eq!(seq(name, n), r(want), "{name}_{n}");
            }
        }
    }

    #[test]
    fn bernoulli_convention_and_larger_values() {
        assert_eq!(bernoulli(0), r("1"));
        assert_eq!(bernoulli(1), r("-1/2"));
        assert_eq!(bernoulli(10), r("5/66"));
        assert_eq!(bernoulli(12), r("-691/2730"));
        // Extend far enough to exercise in-place growth.
        assert_eq!(bernoulli(30), r("8615841276005/14322"));
    }

    #[test]
    fn genocchi_equals_c_minus_d() {
        for n in 0..=24 {
            assert_eq!(
                seq(SeqName::G, n),
                seq(SeqName::C, n) - seq(SeqName::D, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn parity_vanishing() {
        for n in (3..24).step_by(2) {
            for name in [SeqName::B, SeqName::D, SeqName::G, SeqName::Gg] {
                assert!(seq(name, n).is_zero(), "{name}_{n}");
            }
        }
        for n in (1..24).step_by(2) {
            assert!(seq(SeqName::C, n).is_zero(), "C_{n}");
            assert!(seq(SeqName::E, n).is_zero(), "E_{n}");
        }
        for n in (2..24).step_by(2) {
            assert!(seq(SeqName::F, n).is_zero(), "F_{n}");
        }
    }

    #[test]
    fn counting_sequences_are_nonnegative_integers() {
        for n in 0..=20 {
            for name in [SeqName::Ee, SeqName::Gg] {
                let v = seq(name, n);
                assert!(v.is_integer(), "{name}_{n}");
                assert!(!v.is_negative(), "{name}_{n}");
            }
        }
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(10, 3), big(120));
        assert_eq!(binomial(3, 7), big(0));
        assert_eq!(multinomial3(1, 2, 3), big(60));
        assert_eq!(multinomial3(1, 0, 0), big(1));
    }

    #[test]
    fn unknown_sequence_is_rejected() {
        assert!(matches!(
            "X".parse::<SeqName>(),
            Err(ExactError::UnknownSequence(_))
        ));
        assert_eq!("\u{1d53c}".parse::<SeqName>().unwrap(), SeqName::Ee);
        assert_eq!("\u{1d53e}".parse::<SeqName>().unwrap(), SeqName::Gg);
    }
}
