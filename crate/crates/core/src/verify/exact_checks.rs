//! Exact-arithmetic identity checks: the five triangle recurrences, the
//! parity identities tying the counting triangles to the explicit sums, the
//! reflection formula, the proof-level diagonal identities, and the
//! enumeration oracle. Residuals here are exactly zero or the check fails.

use super::context::CheckResult;
use crate::exact::{seq_int, SeqName};
use crate::perms;
use crate::report::CheckReport;
use crate::triangles::{
    dumont_triangle, entringer, entringer_reflected, explicit_e, explicit_f, explicit_g,
    explicit_h,
};
use num_bigint::BigInt;
use num_traits::One;

fn sgn(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn sgn_floor_half(k: i64) -> BigInt {
    if k.div_euclid(2) % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn all_equal(
    name: &str,
    params: String,
    pairs: impl Iterator<Item = (BigInt, BigInt)>,
) -> CheckResult {
    let mut last = (0f64, 0f64);
    let mut equal = true;
    for (lhs, rhs) in pairs {
        if lhs != rhs {
            equal = false;
        }
        last = (
            lhs.to_string().parse().unwrap_or(f64::NAN),
            rhs.to_string().parse().unwrap_or(f64::NAN),
        );
    }
    Ok(CheckReport::exact(name, params, last.0, last.1, equal))
}

/// One of the five recurrences of the explicit triangles, checked across a
/// whole row.
pub fn check_recurrence(which: &str, k: usize) -> CheckResult {
    let name = format!("thm23-rr{which}");
    let pairs: Vec<(BigInt, BigInt)> = (1..=k)
        .map(|j| {
            let pair = match which {
                "E" => (
                    explicit_e(k, j).unwrap(),
                    explicit_e(k, j - 1).unwrap()
                        + sgn(k) * explicit_e(k - 1, j - 1).unwrap()
                        + sgn_floor_half(k as i64 - 1) * seq_int(SeqName::E, k - 1),
                ),
                "F" => (
                    explicit_f(k, j).unwrap(),
                    explicit_f(k, j - 1).unwrap()
                        - sgn(k) * explicit_f(k - 1, j - 1).unwrap()
                        + sgn_floor_half(k as i64) * seq_int(SeqName::F, k - 1),
                ),
                "G" => (
                    explicit_g(k, j).unwrap(),
                    explicit_g(k, j - 1).unwrap()
                        + sgn(k) * explicit_g(k - 1, j - 1).unwrap()
                        + seq_int(SeqName::Gg, k - 1),
                ),
                "H" => (
                    explicit_h(k, j).unwrap(),
                    explicit_h(k, j - 1).unwrap()
                        + sgn(k) * explicit_h(k - 1, j - 1).unwrap()
                        - sgn(j) * seq_int(SeqName::Gg, k - 1),
                ),
                "HG" => (
                    explicit_h(k, j).unwrap(),
                    -explicit_h(k, j - 1).unwrap()
                        + sgn(k) * explicit_g(k - 1, j - 1).unwrap()
                        + seq_int(SeqName::Gg, k - 1),
                ),
                other => panic!("unknown recurrence {other}"),
            };
            pair
        })
        .collect();
    all_equal(&name, format!("k={k}"), pairs.into_iter())
}

/// Entringer = E (odd k) / F (even k), across a row.
pub fn check_parity_entringer(k: usize) -> CheckResult {
    let pairs = (0..=k).map(move |j| {
        let lhs = entringer(k, j).unwrap();
        let rhs = if k % 2 == 1 {
            explicit_e(k, j).unwrap()
        } else {
            explicit_f(k, j).unwrap()
        };
        (lhs, rhs)
    });
    all_equal("thm24", format!("k={k}"), pairs)
}

/// Reflection formula row check.
pub fn check_reflection(k: usize) -> CheckResult {
    let pairs = (0..=k).map(move |j| {
        (
            entringer_reflected(k, j).unwrap(),
            entringer(k, k - j).unwrap(),
        )
    });
    all_equal("thm26", format!("k={k}"), pairs)
}

/// Dumont = G (odd k) / H (even k), across a row.
pub fn check_parity_dumont(k: usize) -> CheckResult {
    let pairs = (0..=k).map(move |j| {
        let lhs = dumont_triangle(k, j).unwrap();
        let rhs = if k % 2 == 1 {
            explicit_g(k, j).unwrap()
        } else {
            explicit_h(k, j).unwrap()
        };
        (lhs, rhs)
    });
    all_equal("thm27", format!("k={k}"), pairs)
}

/// Proof-level identities: H(k,k) = 0, G(k,k) = 2 [k even] GG_k,
/// 2H(k,k) = (-1)^k H(k-1,k-1), and the odd-k bridge
/// G(k,j) = GG(k+1,j) + GG(k+1,j+1).
pub fn check_diagonal(which: &str, k: usize) -> CheckResult {
    let name = format!("thm27-{which}");
    match which {
        "Hkk" => all_equal(
            &name,
            format!("k={k}"),
            std::iter::once((explicit_h(k, k).unwrap(), BigInt::from(0))),
        ),
        "Gkk" => {
            let want = if k % 2 == 0 {
                BigInt::from(2) * seq_int(SeqName::Gg, k)
            } else {
                BigInt::from(0)
            };
            all_equal(
                &name,
                format!("k={k}"),
                std::iter::once((explicit_g(k, k).unwrap(), want)),
            )
        }
        "2Hkk" => all_equal(
            &name,
            format!("k={k}"),
            std::iter::once((
                BigInt::from(2) * explicit_h(k, k).unwrap(),
                sgn(k) * explicit_h(k - 1, k - 1).unwrap(),
            )),
        ),
        "Godd" => {
            if k % 2 == 0 || k < 3 {
                return Err(super::context::VerifyError::Param(format!(
                    "Godd needs odd k >= 3, got {k}"
                )));
            }
            let pairs = (0..=k).map(move |j| {
                (
                    explicit_g(k, j).unwrap(),
                    dumont_triangle(k + 1, j).unwrap() + dumont_triangle(k + 1, j + 1).unwrap(),
                )
            });
            all_equal(&name, format!("k={k}"), pairs)
        }
        other => panic!("unknown diagonal identity {other}"),
    }
}

/// Recurrence triangle row vs brute-force permutation enumeration.
pub fn check_oracle_entringer(k: usize) -> CheckResult {
    let pairs = (0..=k).map(move |j| {
        (
            entringer(k, j).unwrap(),
            BigInt::from(perms::count_down_up_starting(k, j).unwrap()),
        )
    });
    all_equal("oracle-EE", format!("k={k}"), pairs)
}

pub fn check_oracle_dumont(k: usize) -> CheckResult {
    let pairs = (1..k).map(move |j| {
        (
            dumont_triangle(k, j).unwrap(),
            BigInt::from(perms::count_dumont_starting(k, j).unwrap()),
        )
    });
    all_equal("oracle-GG", format!("k={k}"), pairs)
}

/// Totals: EE_n vs full down-up enumeration, GG_{2n} vs Dumont enumeration
/// in the odd symmetric group.
pub fn check_oracle_totals(which: &str, n: usize) -> CheckResult {
    match which {
        "EE" => all_equal(
            "oracle-EE-total",
            format!("n={n}"),
            std::iter::once((
                seq_int(SeqName::Ee, n),
                BigInt::from(perms::count_down_up_total(n).unwrap()),
            )),
        ),
        "GG" => all_equal(
            "oracle-GG-total",
            format!("n={n}"),
            std::iter::once((
                seq_int(SeqName::Gg, 2 * n),
                BigInt::from(perms::count_dumont_total(2 * n - 1).unwrap()),
            )),
        ),
        other => panic!("unknown total oracle {other}"),
    }
}
