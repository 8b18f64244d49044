//! The six triangular tables: the two permutation-counting triangles built
//! from their recurrences, and the four explicit-sum triangles E, F, G, H.
//!
//! Entries are exact `BigInt`s. Rows are memoized per triangle; out-of-range
//! access (j > k) is a hard error rather than a silent zero so that index
//! bugs cannot hide inside identity checks.

use crate::exact::{self, binomial, SeqName};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("entry ({k}, {j}) outside the triangle")]
    OutOfRange { k: usize, j: usize },
    #[error("unknown triangle identifier `{0}`")]
    UnknownTriangle(String),
    #[error("unknown table format `{0}`")]
    UnknownFormat(String),
    #[error("explicit formula produced a non-integer at ({k}, {j})")]
    NonInteger { k: usize, j: usize },
}

/// Identifier of one of the six triangles. `Entringer` and `Dumont` are the
/// recurrence-defined counting triangles; the other four are the explicit
/// binomial sums over the E/F/G sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum TriangleName {
    Entringer,
    Dumont,
    E,
    F,
    G,
    H,
}

impl TriangleName {
    pub const ALL: [TriangleName; 6] = [
        TriangleName::Entringer,
        TriangleName::Dumont,
        TriangleName::E,
        TriangleName::F,
        TriangleName::G,
        TriangleName::H,
    ];
}

impl fmt::Display for TriangleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriangleName::Entringer => "EE",
            TriangleName::Dumont => "GG",
            TriangleName::E => "E",
            TriangleName::F => "F",
            TriangleName::G => "G",
            TriangleName::H => "H",
        };
        f.write_str(s)
    }
}

impl FromStr for TriangleName {
    type Err = TriangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "EE" | "\u{1d53c}" => Ok(TriangleName::Entringer),
            "GG" | "\u{1d53e}" => Ok(TriangleName::Dumont),
            "E" => Ok(TriangleName::E),
            "F" => Ok(TriangleName::F),
            "G" => Ok(TriangleName::G),
            "H" => Ok(TriangleName::H),
            other => Err(TriangleError::UnknownTriangle(other.to_string())),
        }
    }
}

/// Hard cap on row index for table emission.
pub const MAX_ROWS: usize = 64;

/// A fully materialized lower-triangular table, row k holding entries
/// j = 0..=k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub name: TriangleName,
    pub rows: Vec<Vec<BigInt>>,
}

// Row caches for the two recurrence triangles.
static ENTRINGER: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());
static DUMONT: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());

fn entringer_rows(k_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = ENTRINGER.lock().unwrap();
    while rows.len() <= k_max {
        let k = rows.len();
        if k == 0 {
            rows.push(vec![BigInt::one()]);
            continue;
        }
        let mut row = vec![BigInt::zero()];
        for j in 1..=k {
            let v = &row[j - 1] + &rows[k - 1][k - j];
            row.push(v);
        }
        rows.push(row);
    }
    rows[..=k_max].to_vec()
}

// The even rows are self-contained; odd row k is derived from row k + 1,
// so the builder fills even rows first and then walks back.
fn dumont_rows(k_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = DUMONT.lock().unwrap();
    if rows.len() > k_max {
        return rows[..=k_max].to_vec();
    }
    let top = (k_max + 1).next_multiple_of(2); // highest even row needed
    let mut table: Vec<Vec<BigInt>> = vec![
        vec![BigInt::zero()],
        vec![BigInt::zero(), BigInt::zero()],
        vec![BigInt::zero(), BigInt::one(), BigInt::zero()],
    ];
    for k in 3..=top {
        if k % 2 == 1 {
            table.push(Vec::new()); // placeholder, filled from row k+1 below
            continue;
        }
        let mut row = vec![BigInt::zero()];
        for j in 1..=k {
            let prev = row[j - 1].clone();
            let v = if j % 2 == 1 {
                let s: BigInt = (0..=j.saturating_sub(2)).map(|m| table[k - 2][m].clone()).sum();
                prev - s
            } else {
                let s: BigInt = (j - 1..=k - 2).map(|m| table[k - 2][m].clone()).sum();
                prev + s
            };
            row.push(v);
        }
        table.push(row);
        // Fill the odd row below from this one.
        let ko = k - 1;
        if ko >= 3 {
            let mut row = vec![BigInt::zero()];
            for j in 1..=ko {
                row.push(&table[k][j] + &table[k][j + 1]);
            }
            table[ko] = row;
        }
    }
    table.truncate(k_max + 1);
    *rows = table;
    rows[..=k_max].to_vec()
}

fn check_range(k: usize, j: usize) -> Result<(), TriangleError> {
    if j > k {
        Err(TriangleError::OutOfRange { k, j })
    } else {
        Ok(())
    }
}

/// Entringer number: down-up permutations of S_{k+1} starting with j+1,
/// by the boustrophedon recurrence.
pub fn entringer(k: usize, j: usize) -> Result<BigInt, TriangleError> {
    check_range(k, j)?;
    Ok(entringer_rows(k)[k][j].clone())
}

/// Dumont starting-value counts by the five-case recurrence.
pub fn dumont_triangle(k: usize, j: usize) -> Result<BigInt, TriangleError> {
    check_range(k, j)?;
    Ok(dumont_rows(k)[k][j].clone())
}

fn neg_one_pow(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

// (-1)^{floor((k-1)/2)} for k >= 0; floor of (k-1)/2 at k = 0 is -1 + 1 = ...
// handled by noting (-1)^{floor((k-1)/2)} has period 4 in k: k = 0,1 -> +1 at
// k=1, and k=0 gives floor(-1/2) = -1, an odd exponent.
fn sign_floor_half(k_minus: i64) -> BigInt {
    // (-1)^{floor(k_minus / 2)} for possibly negative k_minus
    let f = k_minus.div_euclid(2);
    if f % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn weighted_sum(
    k: usize,
    j: usize,
    outer_sign: BigInt,
    seq: SeqName,
    coeff: impl Fn(usize, usize) -> BigInt,
) -> Result<BigInt, TriangleError> {
    check_range(k, j)?;
    let mut acc = exact::Rational::from_integer(BigInt::zero());
    for n in 1..=j {
        let c = exact::Rational::from_integer(coeff(j, n));
        acc += c * exact::seq(seq, k - n);
    }
    let acc = acc * exact::Rational::from_integer(outer_sign);
    if !acc.is_integer() {
        return Err(TriangleError::NonInteger { k, j });
    }
    Ok(acc.to_integer())
}

/// E(k,j) = (-1)^{floor((k-1)/2)} sum_{n=1}^{j} C(j,n) E_{k-n}.
pub fn explicit_e(k: usize, j: usize) -> Result<BigInt, TriangleError> {
    let v = weighted_sum(k, j, sign_floor_half(k as i64 - 1), SeqName::E, binomial)?;
    debug_assert!(!v.is_negative(), "E({k},{j}) negative");
    Ok(v)
}

/// F(k,j) = (-1)^{floor(k/2)} sum_{n=1}^{j} C(j,n) F_{k-n}.
pub fn explicit_f(k: usize, j: usize) -> Result<BigInt, TriangleError> {
    let v = weighted_sum(k, j, sign_floor_half(k as i64), SeqName::F, binomial)?;
    debug_assert!(!v.is_negative(), "F({k},{j}) negative");
    Ok(v)
}

/// G(k,j) = (-1)^{floor((k-1)/2)} sum_{n=1}^{j} C(j,n) G_{k-n}.
pub fn explicit_g(k: usize, j: usize) -> Result<BigInt, TriangleError> {
    let v = weighted_sum(k, j, sign_floor_half(k as i64 - 1), SeqName::G, binomial)?;
    debug_assert!(!v.is_negative(), "G({k},{j}) negative");
    Ok(v)
}

/// h(j,n) = sum_{u=n}^{j} (-1)^{j-u} C(u-1, n-1), for 1 <= n <= j.
pub fn h_coeff(j: usize, n: usize) -> Result<BigInt, TriangleError> {
    if n == 0 || n > j {
        return Err(TriangleError::OutOfRange { k: j, j: n });
    }
    let mut acc = BigInt::zero();
    for u in n..=j {
        acc += neg_one_pow(j - u) * binomial(u - 1, n - 1);
    }
    Ok(acc)
}

/// H(k,j) = (-1)^{floor((k-1)/2)} sum_{n=1}^{j} h(j,n) G_{k-n}; may be
/// negative.
pub fn explicit_h(k: usize, j: usize) -> Result<BigInt, TriangleError> {
    weighted_sum(k, j, sign_floor_half(k as i64 - 1), SeqName::G, |j, n| {
        h_coeff(j, n).expect("1 <= n <= j inside the sum")
    })
}

/// Right-hand side of the reflection formula for Entringer numbers:
/// equals entringer(k, k-j). The sum starts at n = 0 and the sequence is
/// parity-selected: E for even k, F for odd k.
pub fn entringer_reflected(k: usize, j: usize) -> Result<BigInt, TriangleError> {
    check_range(k, j)?;
    if k == 0 {
        return Err(TriangleError::OutOfRange { k, j });
    }
    let (seq, sign) = if k % 2 == 0 {
        (SeqName::E, sign_floor_half(k as i64 - 1))
    } else {
        (SeqName::F, sign_floor_half(k as i64))
    };
    let mut acc = exact::Rational::from_integer(BigInt::zero());
    for n in 0..=j {
        acc += exact::Rational::from_integer(binomial(j, n)) * exact::seq(seq, k - n);
    }
    let acc = acc * exact::Rational::from_integer(-sign);
    if !acc.is_integer() {
        return Err(TriangleError::NonInteger { k, j });
    }
    Ok(acc.to_integer())
}

/// Entry of any of the six triangles through one dispatcher.
pub fn entry(name: TriangleName, k: usize, j: usize) -> Result<BigInt, TriangleError> {
    match name {
        TriangleName::Entringer => entringer(k, j),
        TriangleName::Dumont => dumont_triangle(k, j),
        TriangleName::E => explicit_e(k, j),
        TriangleName::F => explicit_f(k, j),
        TriangleName::G => explicit_g(k, j),
        TriangleName::H => explicit_h(k, j),
    }
}

/// Materialize rows 0..=k_max of the named triangle.
pub fn build(name: TriangleName, k_max: usize) -> Result<Triangle, TriangleError> {
    let mut rows = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut row = Vec::with_capacity(k + 1);
        for j in 0..=k {
            row.push(entry(name, k, j)?);
        }
        rows.push(row);
    }
    Ok(Triangle { name, rows })
}

/// Output format for table emission.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = TriangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(TriangleError::UnknownFormat(other.to_string())),
        }
    }
}

/// Render rows 0..=k_max. CSV rows are padded to k_max + 1 cells with empty
/// fields for the upper triangle; JSON emits ragged arrays.
pub fn emit_table(name: TriangleName, k_max: usize, format: TableFormat) -> Result<String, TriangleError> {
    if k_max > MAX_ROWS {
        return Err(TriangleError::OutOfRange { k: k_max, j: 0 });
    }
    let t = build(name, k_max)?;
    match format {
        TableFormat::Csv => {
            let mut out = String::new();
            for row in &t.rows {
                let mut cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                cells.resize(k_max + 1, String::new());
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        TableFormat::Json => {
            let rows: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect();
            // numbers are emitted as JSON integers, not strings
            let rows: Vec<Vec<serde_json::Value>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| {
                            s.parse::<i64>()
                                .map(serde_json::Value::from)
                                .unwrap_or_else(|_| serde_json::Value::String(s.clone()))
                        })
                        .collect()
                })
                .collect();
            Ok(serde_json::to_string(&rows).unwrap())
        }
    }
}
