//! Generating trees: every Baxter permutation (resp. plane bipolar
//! orientation) of size `n + 1` has a unique parent of size `n`, and the
//! children of a node are produced by left and right insertions `L_k`, `R_k`.
//! Both trees carry the same labels `(i, j)` and the same rewriting rule.

mod generate;
mod map;
mod orient;
mod perm;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use generate::{generate, generate_filtered, random_baxter, GenNode, Growth, OrientationTree, PermutationTree, Walk};
pub use map::{map_parent, MapParentError};
pub use orient::{lambda, orient_insert, orient_labels, orient_parent, replay_orientation};
pub use perm::{insertion_sequence, perm_insert, perm_labels, perm_parent, replay_permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn swapped(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

/// One insertion `(S, k)`, `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub side: Side,
    pub k: usize,
}

/// `(i, j)`: lr-maxima and rl-maxima of a permutation, or left outer degree
/// and sink degree of an orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelPair {
    pub i: usize,
    pub j: usize,
}

impl LabelPair {
    pub const ROOT: LabelPair = LabelPair { i: 1, j: 1 };

    /// Number of children: `i + j`.
    pub fn child_count(self) -> usize {
        self.i + self.j
    }

    /// The `c`-th child step, 0-based, in the order `L_1 .. L_i, R_j .. R_1`.
    pub fn child_step(self, c: usize) -> Step {
        if c < self.i {
            Step { side: Side::L, k: c + 1 }
        } else {
            Step { side: Side::R, k: self.j - (c - self.i) }
        }
    }

    /// The label the rewriting rule assigns to the child reached by `step`.
    pub fn child(self, step: Step) -> Option<LabelPair> {
        match step.side {
            Side::L if (1..=self.i).contains(&step.k) => Some(LabelPair { i: step.k, j: self.j + 1 }),
            Side::R if (1..=self.j).contains(&step.k) => Some(LabelPair { i: self.i + 1, j: step.k }),
            _ => None,
        }
    }

    /// Whether `step` is legal from a node with this label.
    pub fn allows(self, step: Step) -> bool {
        self.child(step).is_some()
    }
}

impl fmt::Display for LabelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("{side:?}{k} is not available: the node has {limit} insertion sites on that side")]
    OutOfRange { side: Side, k: usize, limit: usize },
    #[error("`{0}` is not a step such as L1 or R2")]
    Syntax(String),
    #[error("size {0} has no parent")]
    NoParent(usize),
}

/// A path from the root of a generating tree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct InsertionSeq(pub Vec<Step>);

impl InsertionSeq {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Same sequence with every `L` turned into `R` and vice versa.
    pub fn swapped(&self) -> InsertionSeq {
        InsertionSeq(self.0.iter().map(|s| Step { side: s.side.swapped(), k: s.k }).collect())
    }

    /// Label pairs along the path, starting from the root; fails on the first
    /// step that the rewriting rule does not allow.
    pub fn labels(&self) -> Result<Vec<LabelPair>, StepError> {
        let mut out = vec![LabelPair::ROOT];
        for &step in &self.0 {
            let last = *out.last().unwrap();
            let next = last.child(step).ok_or_else(|| out_of_range(last, step))?;
            out.push(next);
        }
        Ok(out)
    }
}

pub(crate) fn out_of_range(labels: LabelPair, step: Step) -> StepError {
    let limit = match step.side {
        Side::L => labels.i,
        Side::R => labels.j,
    };
    StepError::OutOfRange { side: step.side, k: step.k, limit }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.side, self.k)
    }
}

impl FromStr for Step {
    type Err = StepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || StepError::Syntax(s.to_string());
        let side = match s.chars().next() {
            Some('L') => Side::L,
            Some('R') => Side::R,
            _ => return Err(bad()),
        };
        let k: usize = s[1..].parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        Ok(Step { side, k })
    }
}

impl fmt::Display for InsertionSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, s) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for InsertionSeq {
    type Err = StepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace().map(str::parse).collect::<Result<_, _>>().map(InsertionSeq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewriting_rule() {
        let l = LabelPair { i: 2, j: 3 };
        let kids: Vec<LabelPair> = (0..l.child_count()).map(|c| l.child(l.child_step(c)).unwrap()).collect();
        let expect = [(1, 4), (2, 4), (3, 3), (3, 2), (3, 1)];
        assert_eq!(kids, expect.iter().map(|&(i, j)| LabelPair { i, j }).collect::<Vec<_>>());
        assert!(!l.allows(Step { side: Side::L, k: 3 }));
    }

    #[test]
    fn sequence_text() {
        let s: InsertionSeq = "L1 R2 L3".parse().unwrap();
        assert_eq!(s.to_string(), "L1 R2 L3");
        assert_eq!(s.swapped().to_string(), "R1 L2 R3");
        assert_eq!("".parse::<InsertionSeq>().unwrap(), InsertionSeq::default());
        assert!("L0".parse::<InsertionSeq>().is_err());
        assert!("X1".parse::<InsertionSeq>().is_err());
        let labels = "L1 R2".parse::<InsertionSeq>().unwrap().labels().unwrap();
        assert_eq!(labels.last(), Some(&LabelPair { i: 2, j: 2 }));
        assert!("R2".parse::<InsertionSeq>().unwrap().labels().is_err());
    }
}
