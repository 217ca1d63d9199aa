//! Closed-form counts of Baxter permutations and related families, with the
//! exhaustive counts they are checked against.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::gentree::{generate, OrientationTree, PermutationTree};
use crate::perm::{Pattern, Permutation};
use crate::planar::BipolarOrientation;

/// Largest size accepted by [`census`].
pub const CENSUS_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("size must be at least 1")]
    EmptySize,
    #[error("({n}, {m}, {i}, {j}) is outside 0 <= m < n, 1 <= i, j <= n")]
    Range { n: usize, m: usize, i: usize, j: usize },
    #[error("census is limited to n <= {limit}, got {n}")]
    Guard { n: usize, limit: usize },
}

/// Binomial coefficient extended to all integer arguments: `1` on the
/// diagonal `a == b`, `0` whenever `b < 0` or `b > a` otherwise.
pub fn ext_binomial(a: i64, b: i64) -> BigUint {
    if a == b {
        return BigUint::one();
    }
    if b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for t in 0..b {
        acc = acc * (a - t) / (t + 1);
    }
    acc
}

fn signed(x: BigUint) -> BigInt {
    BigInt::from(x)
}

/// Number of Baxter permutations of size `n` with `m` ascents, `i`
/// lr-maxima and `j` rl-maxima, from the closed formula.
pub fn baxter_count(n: usize, m: usize, i: usize, j: usize) -> Result<BigUint, CountError> {
    if n == 0 {
        return Err(CountError::EmptySize);
    }
    if m >= n || !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(CountError::Range { n, m, i, j });
    }
    let (n, m, i, j) = (n as i64, m as i64, i as i64, j as i64);
    let c = ext_binomial;
    let bracket = signed(c(n - i - 1, n - m - 2) * c(n - j - 1, m - 1))
        - signed(c(n - i - 1, n - m - 1) * c(n - j - 1, m));
    let numer = BigInt::from(i * j) * signed(c(n + 1, m + 1)) * bracket;
    let denom = BigInt::from(n * (n + 1));
    assert!(
        (&numer % &denom).is_zero() && !numer.is_negative(),
        "formula gives a non-integer or negative value at ({n}, {m}, {i}, {j})"
    );
    Ok((numer / denom).to_biguint().expect("checked non-negative"))
}

/// `|B_n|`, summing the formula over every cell.
pub fn baxter_number(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    formula_counts(n).into_values().sum()
}

/// Large Schröder number counting permutations of size `n` that avoid
/// both 2413 and 3142: `1, 2, 6, 22, 90, ...`.
pub fn schroder(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let top = n as u64 - 1;
    (0..=top)
        .map(|k| factorial(top + k) / (factorial(k) * factorial(k + 1) * factorial(top - k)))
        .sum()
}

/// Number of fixed-point-free Baxter involutions of length `2n`.
pub fn ffp_involution_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let n64 = n as u64;
    let numer = BigUint::from(3u32) * (BigUint::one() << (n - 1)) * ext_binomial(2 * n as i64, n as i64);
    let denom = BigUint::from((n64 + 1) * (n64 + 2));
    debug_assert!((&numer % &denom).is_zero());
    numer / denom
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `(ascents, lr-maxima, rl-maxima)`.
pub type CountKey = (usize, usize, usize);

/// Nonzero formula values for every admissible cell at size `n`.
pub fn formula_counts(n: usize) -> BTreeMap<CountKey, BigUint> {
    let mut out = BTreeMap::new();
    for m in 0..n {
        for i in 1..=n {
            for j in 1..=n {
                let v = baxter_count(n, m, i, j).expect("cell in range");
                if !v.is_zero() {
                    out.insert((m, i, j), v);
                }
            }
        }
    }
    out
}

/// Exhaustive counts over all permutations of size `n`, filtered by the
/// Baxter predicate.
pub fn brute_counts(n: usize) -> BTreeMap<CountKey, BigUint> {
    let mut out: BTreeMap<CountKey, BigUint> = BTreeMap::new();
    for p in Permutation::all(n).filter(Permutation::is_baxter) {
        let s = p.statistics().expect("non-empty");
        *out.entry((s.ascents, s.lr_max, s.rl_max)).or_default() += 1u32;
    }
    out
}

/// Cells where the two tables disagree, with `(formula, brute)` values.
pub fn count_diff(
    formula: &BTreeMap<CountKey, BigUint>,
    brute: &BTreeMap<CountKey, BigUint>,
) -> Vec<(CountKey, BigUint, BigUint)> {
    let keys: std::collections::BTreeSet<_> = formula.keys().chain(brute.keys()).copied().collect();
    keys.into_iter()
        .filter_map(|k| {
            let f = formula.get(&k).cloned().unwrap_or_default();
            let b = brute.get(&k).cloned().unwrap_or_default();
            (f != b).then_some((k, f, b))
        })
        .collect()
}

/// `(ascents, lr-maxima, rl-maxima, lr-minima, rl-minima)`, or on the
/// orientation side `(non-polar vertices, left outer degree, sink degree,
/// source degree, right outer degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusKey {
    pub m: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

pub type Census = BTreeMap<CensusKey, u64>;

pub fn permutation_key(p: &Permutation) -> CensusKey {
    let s = p.statistics().expect("non-empty");
    CensusKey { m: s.ascents, i: s.lr_max, j: s.rl_max, k: s.lr_min, l: s.rl_min }
}

pub fn orientation_key(o: &BipolarOrientation) -> CensusKey {
    let b = o.borders();
    let (source, sink) = o.pole_degrees();
    CensusKey {
        m: o.vertex_count() - 2,
        i: b.left_outer_degree(),
        j: sink,
        k: source,
        l: b.right_outer_degree(),
    }
}

fn guard(n: usize) -> Result<(), CountError> {
    match n {
        0 => Err(CountError::EmptySize),
        n if n > CENSUS_MAX_N => Err(CountError::Guard { n, limit: CENSUS_MAX_N }),
        _ => Ok(()),
    }
}

/// Joint distribution of the five statistics over `B_n`, read off the
/// Baxter generating tree.
pub fn census(n: usize) -> Result<Census, CountError> {
    guard(n)?;
    let mut out = Census::new();
    for node in generate::<PermutationTree>(n) {
        *out.entry(permutation_key(&node.object)).or_default() += 1;
    }
    Ok(out)
}

/// The same table read off the orientation tree.
pub fn orientation_census(n: usize) -> Result<Census, CountError> {
    guard(n)?;
    let mut out = Census::new();
    for node in generate::<OrientationTree>(n) {
        *out.entry(orientation_key(&node.object)).or_default() += 1;
    }
    Ok(out)
}

/// TSV with header `n m i j count`, rows in key order.
pub fn counts_tsv(n: usize, table: &BTreeMap<CountKey, BigUint>) -> String {
    let mut s = String::from("n\tm\ti\tj\tcount\n");
    for ((m, i, j), c) in table {
        writeln!(s, "{n}\t{m}\t{i}\t{j}\t{c}").unwrap();
    }
    s
}

/// TSV with header `n m i j k l count`, rows in key order.
pub fn census_tsv(n: usize, table: &Census) -> String {
    let mut s = String::from("n\tm\ti\tj\tk\tl\tcount\n");
    for (key, c) in table {
        let CensusKey { m, i, j, k, l } = key;
        writeln!(s, "{n}\t{m}\t{i}\t{j}\t{k}\t{l}\t{c}").unwrap();
    }
    s
}

/// Fixed-point-free involutions of `{1..len}`, one per perfect matching.
pub fn fixed_point_free_involutions(len: usize) -> Vec<Permutation> {
    fn extend(values: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some(first) = values.iter().position(|&v| v == 0) else {
            out.push(Permutation::new(values.clone()).expect("matching is a permutation"));
            return;
        };
        for partner in first + 1..values.len() {
            if values[partner] == 0 {
                values[first] = partner + 1;
                values[partner] = first + 1;
                extend(values, out);
                values[first] = 0;
                values[partner] = 0;
            }
        }
    }
    let mut out = Vec::new();
    if len.is_multiple_of(2) {
        extend(&mut vec![0; len], &mut out);
    }
    out
}

/// Exhaustive count of fixed-point-free Baxter involutions of length `2n`.
pub fn brute_ffp_involutions(n: usize) -> u64 {
    fixed_point_free_involutions(2 * n).iter().filter(|p| p.is_baxter()).count() as u64
}

/// Exhaustive count of permutations of size `n` avoiding 2413 and 3142.
pub fn brute_schroder(n: usize) -> u64 {
    let (a, b) = (Pattern::p2413(), Pattern::p3142());
    Permutation::all(n).filter(|p| p.avoids(&a) && p.avoids(&b)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn extended_binomial() {
        assert_eq!(ext_binomial(-1, -1), big(1));
        assert_eq!(ext_binomial(-1, 0), big(0));
        assert_eq!(ext_binomial(3, -1), big(0));
        assert_eq!(ext_binomial(3, 4), big(0));
        assert_eq!(ext_binomial(6, 2), big(15));
        assert_eq!(ext_binomial(20, 10), big(184_756));
    }

    #[test]
    fn small_cells() {
        assert_eq!(baxter_count(1, 0, 1, 1).unwrap(), big(1));
        assert_eq!(baxter_count(2, 1, 2, 1).unwrap(), big(1));
        assert_eq!(baxter_count(2, 0, 1, 2).unwrap(), big(1));
        assert_eq!(baxter_count(2, 1, 1, 1).unwrap(), big(0));
        assert!(baxter_count(0, 0, 1, 1).is_err());
        assert!(baxter_count(3, 3, 1, 1).is_err());
        assert!(baxter_count(3, 0, 0, 1).is_err());
    }

    #[test]
    fn sequences() {
        let b: Vec<BigUint> = (1..=7).map(baxter_number).collect();
        assert_eq!(b, [1u64, 2, 6, 22, 92, 422, 2074].map(big));
        let s: Vec<BigUint> = (1..=6).map(schroder).collect();
        assert_eq!(s, [1u64, 2, 6, 22, 90, 394].map(big));
        let f: Vec<BigUint> = (1..=5).map(ffp_involution_count).collect();
        assert_eq!(f, [1u64, 3, 12, 56, 288].map(big));
    }

    #[test]
    fn formula_matches_brute_force_small() {
        for n in 1..=6 {
            assert!(count_diff(&formula_counts(n), &brute_counts(n)).is_empty(), "n = {n}");
        }
    }

    #[test]
    fn census_small() {
        let one = census(1).unwrap();
        assert_eq!(one.into_iter().collect::<Vec<_>>(), [(CensusKey { m: 0, i: 1, j: 1, k: 1, l: 1 }, 1)]);
        assert_eq!(census(2).unwrap().len(), 2);
        for n in 1..=5 {
            assert_eq!(census(n).unwrap(), orientation_census(n).unwrap());
        }
        assert_eq!(census(10), Err(CountError::Guard { n: 10, limit: 9 }));
    }

    #[test]
    fn involutions() {
        assert_eq!(fixed_point_free_involutions(6).len(), 15);
        assert!(fixed_point_free_involutions(3).is_empty());
        let counts: Vec<u64> = (1..=3).map(brute_ffp_involutions).collect();
        assert_eq!(counts, [1, 3, 12]);
    }

    #[test]
    fn tsv_layout() {
        let t = counts_tsv(2, &formula_counts(2));
        assert_eq!(t, "n\tm\ti\tj\tcount\n2\t0\t1\t2\t1\n2\t1\t2\t1\t1\n");
        assert!(census_tsv(1, &census(1).unwrap()).ends_with("1\t0\t1\t1\t1\t1\t1\n"));
    }
}
