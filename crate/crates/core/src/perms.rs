//! Brute-force enumeration of down-up and Dumont permutations.
//!
//! These counters are the independent oracle for the triangle and sequence
//! values produced elsewhere: they know nothing about recurrences and simply
//! walk the symmetric group. Enumeration is capped at n = 10; the oracle role
//! only needs desk scale and anything larger is rejected rather than allowed
//! to run for minutes.

use thiserror::Error;

/// Hard cap on the symmetric group degree accepted by the enumerators.
pub const MAX_DEGREE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree {0} exceeds the enumeration cap of {MAX_DEGREE}")]
    TooLarge(usize),
    #[error("starting value {j} out of range for {what}(k = {k})")]
    OutOfRange { what: &'static str, k: usize, j: usize },
}

/// A permutation of {1..n}, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    /// True iff the image is a bijection on {1..n}.
    pub fn is_valid(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        self.0.iter().all(|&v| {
            if v == 0 || v > n || seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        })
    }
}

/// Down-up (alternating) test: ascents exactly at even positions,
/// i.e. `sigma(i) < sigma(i+1)` iff `i` is even (1-based).
pub fn is_down_up(p: &Permutation) -> bool {
    p.0.windows(2)
        .enumerate()
        .all(|(i0, w)| (w[0] < w[1]) == ((i0 + 1) % 2 == 0))
}

/// Dumont test (first kind): ascents exactly after odd values,
/// i.e. `sigma(i) < sigma(i+1)` iff `sigma(i)` is odd. The last value is
/// unconstrained.
pub fn is_dumont(p: &Permutation) -> bool {
    p.0.windows(2).all(|w| (w[0] < w[1]) == (w[0] % 2 == 1))
}

// A pair predicate decides whether sigma(i+1) = b may follow sigma(i) = a.
// Both predicates above are local to adjacent pairs, which is what makes
// prefix pruning sound.
fn down_up_pair(pos: usize, a: usize, b: usize) -> bool {
    (a < b) == (pos % 2 == 0)
}

fn dumont_pair(_pos: usize, a: usize, b: usize) -> bool {
    (a < b) == (a % 2 == 1)
}

fn count_pruned(n: usize, first: Option<usize>, pair: fn(usize, usize, usize) -> bool) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut used = vec![false; n + 1];
    let mut stack = Vec::with_capacity(n);
    let start_vals: Vec<usize> = match first {
        Some(v) => vec![v],
        None => (1..=n).collect(),
    };
    let mut count = 0;
    for v in start_vals {
        used[v] = true;
        stack.push(v);
        count += extend(n, &mut stack, &mut used, pair);
        stack.pop();
        used[v] = false;
    }
    count
}

fn extend(n: usize, stack: &mut Vec<usize>, used: &mut [bool], pair: fn(usize, usize, usize) -> bool) -> u64 {
    if stack.len() == n {
        return 1;
    }
    let pos = stack.len(); // 1-based index of the last placed value
    let last = *stack.last().unwrap();
    let mut count = 0;
    for v in 1..=n {
        if used[v] || !pair(pos, last, v) {
            continue;
        }
        used[v] = true;
        stack.push(v);
        count += extend(n, stack, used, pair);
        stack.pop();
        used[v] = false;
    }
    count
}

fn check_degree(n: usize) -> Result<(), PermError> {
    if n > MAX_DEGREE {
        Err(PermError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Number of down-up permutations of S_{k+1} starting with j+1
/// (the oracle for the Entringer triangle entry at (k, j)).
pub fn count_down_up_starting(k: usize, j: usize) -> Result<u64, PermError> {
    if j > k {
        return Err(PermError::OutOfRange { what: "down-up", k, j });
    }
    check_degree(k + 1)?;
    Ok(count_pruned(k + 1, Some(j + 1), down_up_pair))
}

/// Number of Dumont permutations of S_{k-1} starting with j. The degenerate
/// groups below k = 2 are refused; those rows exist only through recurrence
/// initial conditions.
pub fn count_dumont_starting(k: usize, j: usize) -> Result<u64, PermError> {
    if k < 2 || j == 0 || j > k - 1 {
        return Err(PermError::OutOfRange { what: "dumont", k, j });
    }
    check_degree(k - 1)?;
    Ok(count_pruned(k - 1, Some(j), dumont_pair))
}

/// Total number of down-up permutations in S_n.
pub fn count_down_up_total(n: usize) -> Result<u64, PermError> {
    check_degree(n)?;
    Ok(count_pruned(n, None, down_up_pair))
}

/// Total number of Dumont permutations in S_n.
pub fn count_dumont_total(n: usize) -> Result<u64, PermError> {
    check_degree(n)?;
    Ok(count_pruned(n, None, dumont_pair))
}

/// Unpruned reference strategy: generate all of S_n in lexicographic order
/// and filter. Retained to cross-check the pruned walker.
pub fn count_filtered(n: usize, predicate: fn(&Permutation) -> bool) -> Result<u64, PermError> {
    check_degree(n)?;
    if n == 0 {
        return Ok(0);
    }
    let mut image: Vec<usize> = (1..=n).collect();
    let mut count = 0;
    loop {
        if predicate(&Permutation(image.clone())) {
            count += 1;
        }
        if !next_permutation(&mut image) {
            return Ok(count);
        }
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
