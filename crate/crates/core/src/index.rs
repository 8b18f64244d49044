//! Index combinatorics: weight, depth, admissibility, the duality
//! involution, truncation, prefix/suffix splits, and the hooked all-ones
//! indices that appear throughout the depth-two and depth-three relations.
//!
//! An index is an ordered tuple of integers >= 1; the empty index is a
//! first-class value with weight 0 and depth 0.

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("index is not admissible (needs a last part >= 2): ({0})")]
    NonAdmissible(Index),
    #[error("truncation depth {n} exceeds weight {weight}")]
    TruncateBeyondWeight { n: usize, weight: usize },
    #[error("split position {j} exceeds depth {depth}")]
    SplitOutOfRange { j: usize, depth: usize },
    #[error("hook position {pos} outside 1..={len}")]
    BadHookPosition { pos: usize, len: usize },
    #[error("hook positions must be non-increasing")]
    UnsortedHookPositions,
    #[error("cannot parse index part `{0}`")]
    ParsePart(String),
    #[error("index parts must be >= 1")]
    ZeroPart,
}

/// An immutable index; all operations return fresh values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, IndexError> {
        let parts = parts.into();
        if parts.iter().any(|&p| p == 0) {
            return Err(IndexError::ZeroPart);
        }
        Ok(Index(parts))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    /// All-ones index of the given depth.
    pub fn ones(depth: usize) -> Self {
        Index(vec![1; depth])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Admissible means nonempty with last part >= 2.
    pub fn is_admissible(&self) -> bool {
        self.0.last().is_some_and(|&p| p >= 2)
    }

    /// Dual index. Writing the index as blocks `({1}^{a_i - 1}, b_i + 1)`,
    /// the dual reverses the block list and swaps each `(a_i, b_i)`.
    /// An involution that preserves weight.
    pub fn dual(&self) -> Result<Index, IndexError> {
        if !self.is_admissible() {
            return Err(IndexError::NonAdmissible(self.clone()));
        }
        let mut blocks: Vec<(u32, u32)> = Vec::new(); // (a_i, b_i)
        let mut ones_run = 0u32;
        for &p in &self.0 {
            if p == 1 {
                ones_run += 1;
            } else {
                blocks.push((ones_run + 1, p - 1));
                ones_run = 0;
            }
        }
        debug_assert_eq!(ones_run, 0, "admissible index ends with a part >= 2");
        let mut out = Vec::new();
        for &(a, b) in blocks.iter().rev() {
            out.extend(std::iter::repeat(1).take(b as usize - 1));
            out.push(a + 1);
        }
        Ok(Index(out))
    }

    /// One truncation step: decrement the last part if it exceeds 1,
    /// otherwise drop the trailing 1. Empty stays empty only via the error
    /// path (a step from the empty index is undefined).
    fn truncate_once(&self) -> Option<Index> {
        let mut parts = self.0.clone();
        match parts.last_mut() {
            None => None,
            Some(last) if *last > 1 => {
                *last -= 1;
                Some(Index(parts))
            }
            Some(_) => {
                parts.pop();
                Some(Index(parts))
            }
        }
    }

    /// `n`-fold truncation; `n` may equal the weight, yielding the empty
    /// index.
    pub fn truncate(&self, n: usize) -> Result<Index, IndexError> {
        let weight = self.weight();
        if n > weight {
            return Err(IndexError::TruncateBeyondWeight { n, weight });
        }
        let mut cur = self.clone();
        for _ in 0..n {
            cur = cur.truncate_once().expect("n <= weight");
        }
        Ok(cur)
    }

    /// Prefix of depth `j` and the complementary suffix.
    pub fn split(&self, j: usize) -> Result<(Index, Index), IndexError> {
        if j > self.depth() {
            return Err(IndexError::SplitOutOfRange { j, depth: self.depth() });
        }
        Ok((Index(self.0[..j].to_vec()), Index(self.0[j..].to_vec())))
    }

    /// Concatenation.
    pub fn concat(&self, other: &Index) -> Index {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Index(parts)
    }

    /// Append `n` trailing ones.
    pub fn append_ones(&self, n: usize) -> Index {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat(1).take(n));
        Index(parts)
    }

    /// Componentwise sum with a nonnegative offset vector of equal length.
    pub fn add_components(&self, offsets: &[u32]) -> Index {
        assert_eq!(self.0.len(), offsets.len());
        Index(self.0.iter().zip(offsets).map(|(a, b)| a + b).collect())
    }
}

/// Builds the hooked all-ones index of the given depth: starts from
/// `(1, ..., 1)` and adds +1 at each listed position, counted from the left
/// end of the displayed tuple. Positions must be non-increasing and may
/// repeat; a repeated position accumulates.
pub fn hook_index(depth: usize, positions: &[usize]) -> Result<Index, IndexError> {
    let mut parts = vec![1u32; depth];
    let mut prev: Option<usize> = None;
    for &pos in positions {
        if pos == 0 || pos > depth {
            return Err(IndexError::BadHookPosition { pos, len: depth });
        }
        if let Some(p) = prev {
            if pos > p {
                return Err(IndexError::UnsortedHookPositions);
            }
        }
        prev = Some(pos);
        parts[pos - 1] += 1;
    }
    Ok(Index(parts))
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Index {
    type Err = IndexError;

    /// Comma-separated parts; whitespace ignored; `-` denotes the empty
    /// index.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned == "-" || cleaned.is_empty() {
            return Ok(Index::empty());
        }
        let mut parts = Vec::new();
        for tok in cleaned.split(',') {
            let p: u32 = tok
                .parse()
                .map_err(|_| IndexError::ParsePart(tok.to_string()))?;
            if p == 0 {
                return Err(IndexError::ZeroPart);
            }
            parts.push(p);
        }
        Ok(Index(parts))
    }
}

/// Iterate over every index of the given exact weight (compositions), used
/// by exhaustive small-weight checks.
pub fn compositions_of(weight: usize) -> Vec<Index> {
    if weight == 0 {
        return vec![Index::empty()];
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: usize, cur: &mut Vec<u32>, out: &mut Vec<Index>) {
        if remaining == 0 {
            out.push(Index(cur.clone()));
            return;
        }
        for first in 1..=remaining {
            cur.push(first as u32);
            rec(remaining - first, cur, out);
            cur.pop();
        }
    }
    rec(weight, &mut cur, &mut out);
    out
}
