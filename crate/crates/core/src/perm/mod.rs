//! Permutations in one-line notation, Baxter predicate, statistics and the
//! symmetries of the square.
//!
//! Positions and values are 1-based on every public surface.

mod pattern;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use pattern::{Pattern, PatternError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("position {position}: `{token}` is not a positive integer")]
    NotANumber { position: usize, token: String },
    #[error("position {position}: value {value} is out of range 1..={n}")]
    OutOfRange { position: usize, value: usize, n: usize },
    #[error("position {position}: value {value} already occurs at position {first}")]
    Duplicate { position: usize, value: usize, first: usize },
    #[error("statistics are undefined for the empty permutation")]
    Empty,
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

/// A triple `(i, j, k)` with `i < j < k` witnessing that a permutation is not
/// Baxter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaxterWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for BaxterWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i, j, k) = ({}, {}, {})", self.i, self.j, self.k)
    }
}

/// Extremum and ascent counts of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statistics {
    pub lr_max: usize,
    pub rl_max: usize,
    pub lr_min: usize,
    pub rl_min: usize,
    pub ascents: usize,
    pub descents: usize,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that the
    /// values form a bijection on `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![0usize; n + 1];
        for (idx, &v) in values.iter().enumerate() {
            let position = idx + 1;
            if v == 0 || v > n {
                return Err(PermError::OutOfRange { position, value: v, n });
            }
            if seen[v] != 0 {
                return Err(PermError::Duplicate { position, value: v, first: seen[v] });
            }
            seen[v] = position;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    /// Standardizes a sequence of distinct keys into the permutation with the
    /// same relative order.
    pub fn standardize<T: Ord>(keys: &[T]) -> Self {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut values = vec![0; keys.len()];
        for (rank, &idx) in order.iter().enumerate() {
            values[idx] = rank + 1;
        }
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// 1-based position at which `value` occurs.
    pub fn position_of(&self, value: usize) -> usize {
        self.values.iter().position(|&v| v == value).expect("value out of range") + 1
    }

    /// Returns the first triple violating the Baxter condition, if any.
    pub fn baxter_witness(&self) -> Option<BaxterWitness> {
        let n = self.len();
        let p = |i: usize| self.values[i - 1];
        for j in 1..n {
            let (a, b) = (p(j), p(j + 1));
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if hi - lo < 3 {
                continue;
            }
            for i in 1..j {
                let vi = p(i);
                if vi <= lo || vi >= hi {
                    continue;
                }
                for k in j + 2..=n {
                    let vk = p(k);
                    let hit = if b < a {
                        // π(j+1) < π(i) < π(k) < π(j)
                        vi < vk && vk < a
                    } else {
                        // π(j) < π(k) < π(i) < π(j+1)
                        a < vk && vk < vi
                    };
                    if hit {
                        return Some(BaxterWitness { i, j, k });
                    }
                }
            }
        }
        None
    }

    pub fn is_baxter(&self) -> bool {
        self.baxter_witness().is_none()
    }

    pub fn statistics(&self) -> Result<Statistics, PermError> {
        if self.is_empty() {
            return Err(PermError::Empty);
        }
        let v = &self.values;
        let count_records = |iter: &mut dyn Iterator<Item = usize>, greater: bool| {
            let mut best: Option<usize> = None;
            let mut count = 0;
            for x in iter {
                let record = match best {
                    None => true,
                    Some(b) => (greater && x > b) || (!greater && x < b),
                };
                if record {
                    best = Some(x);
                    count += 1;
                }
            }
            count
        };
        let ascents = v.windows(2).filter(|w| w[0] < w[1]).count();
        Ok(Statistics {
            lr_max: count_records(&mut v.iter().copied(), true),
            rl_max: count_records(&mut v.iter().rev().copied(), true),
            lr_min: count_records(&mut v.iter().copied(), false),
            rl_min: count_records(&mut v.iter().rev().copied(), false),
            ascents,
            descents: v.len() - 1 - ascents,
        })
    }

    /// Positions of the left-to-right maxima, from left to right.
    pub fn lr_maxima_positions(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (idx, &x) in self.values.iter().enumerate() {
            if x > best {
                best = x;
                out.push(idx + 1);
            }
        }
        out
    }

    /// Positions of the right-to-left maxima, from right to left.
    pub fn rl_maxima_positions(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (idx, &x) in self.values.iter().enumerate().rev() {
            if x > best {
                best = x;
                out.push(idx + 1);
            }
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.len()];
        for (idx, &v) in self.values.iter().enumerate() {
            values[v - 1] = idx + 1;
        }
        Permutation { values }
    }

    pub fn reverse(&self) -> Self {
        Permutation { values: self.values.iter().rev().copied().collect() }
    }

    /// Clockwise quarter turn of the diagram: `(x, y) -> (y, n + 1 - x)`.
    pub fn rotate_cw(&self) -> Self {
        let n = self.len();
        let mut values = vec![0; n];
        for (idx, &v) in self.values.iter().enumerate() {
            values[v - 1] = n - idx;
        }
        Permutation { values }
    }

    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation { values: other.values.iter().map(|&v| self.values[v - 1]).collect() }
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.values.iter().enumerate().all(|(idx, &v)| v != idx + 1 && self.values[v - 1] == idx + 1)
    }

    /// The permutation obtained by deleting value `n` and keeping the rest in
    /// place.
    pub fn without_max(&self) -> Self {
        let n = self.len();
        Permutation { values: self.values.iter().copied().filter(|&v| v != n).collect() }
    }

    /// Inserts the value `n + 1` so that it lands at 1-based `position`.
    pub fn with_max_at(&self, position: usize) -> Self {
        let mut values = self.values.clone();
        values.insert(position - 1, self.len() + 1);
        Permutation { values }
    }

    /// Every permutation of size `n`, in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=n).collect()) }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split_whitespace()
            .enumerate()
            .map(|(idx, tok)| {
                tok.parse::<usize>()
                    .map_err(|_| PermError::NotANumber { position: idx + 1, token: tok.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(values)
    }
}

/// Lexicographic iterator over all permutations of a fixed size.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { values: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const FIG: &str = "5 3 4 9 7 8 10 6 1 2";

    #[test]
    fn baxter_examples() {
        assert!(p(FIG).is_baxter());
        assert!(p("1").is_baxter());
        assert!(Permutation::identity(0).is_baxter());
        assert_eq!(p("2 4 1 3").baxter_witness(), Some(BaxterWitness { i: 1, j: 2, k: 4 }));
        assert!(!p("3 1 4 2").is_baxter());
    }

    #[test]
    fn statistics_examples() {
        let s = p(FIG).statistics().unwrap();
        assert_eq!(
            s,
            Statistics { lr_max: 3, rl_max: 3, lr_min: 3, rl_min: 2, ascents: 5, descents: 4 }
        );
        let s = p("1").statistics().unwrap();
        assert_eq!((s.lr_max, s.rl_max, s.lr_min, s.rl_min, s.ascents, s.descents), (1, 1, 1, 1, 0, 0));
        let s = p("1 2 3").statistics().unwrap();
        assert_eq!((s.lr_max, s.rl_max, s.lr_min, s.rl_min, s.ascents), (3, 1, 1, 3, 2));
        assert_eq!(Permutation::identity(0).statistics(), Err(PermError::Empty));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(p("1 2").rotate_cw(), p("2 1"));
        assert_eq!(p("2 3 1").inverse(), p("3 1 2"));
        assert_eq!(p(FIG).reverse(), p("2 1 6 10 8 7 9 4 3 5"));
        let q = p(FIG);
        assert_eq!(q.rotate_cw(), q.reverse().inverse());
    }

    #[test]
    fn involutions() {
        assert!(p("2 1").is_fixed_point_free_involution());
        assert!(!p("1").is_fixed_point_free_involution());
        assert!(p("2 1 4 3").is_fixed_point_free_involution());
        assert!(!p("2 3 1").is_fixed_point_free_involution());
    }

    #[test]
    fn parse_errors_name_positions() {
        assert_eq!(
            "1 3 3".parse::<Permutation>(),
            Err(PermError::Duplicate { position: 3, value: 3, first: 2 })
        );
        assert_eq!(
            "1 4 2".parse::<Permutation>(),
            Err(PermError::OutOfRange { position: 2, value: 4, n: 3 })
        );
        assert!(matches!("1 x".parse::<Permutation>(), Err(PermError::NotANumber { position: 2, .. })));
    }

    #[test]
    fn all_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let baxter: Vec<usize> = (1..=6).map(|n| Permutation::all(n).filter(|q| q.is_baxter()).count()).collect();
        assert_eq!(baxter, vec![1, 2, 6, 22, 92, 422]);
    }

    #[test]
    fn maxima_positions() {
        let q = p(FIG);
        assert_eq!(q.lr_maxima_positions(), vec![1, 4, 7]);
        assert_eq!(q.rl_maxima_positions(), vec![10, 8, 7]);
    }
}
