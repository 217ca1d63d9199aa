use std::collections::HashSet;

use baxter::bijection::phi_hat;
use baxter::enumeration::{
    baxter_number, brute_counts, brute_ffp_involutions, brute_schroder, census, count_diff, ffp_involution_count,
    formula_counts, orientation_census, schroder,
};
use baxter::gentree::{generate, PermutationTree};
use baxter::perm::Pattern;
use baxter::planar::canonical_code;
use num_bigint::BigUint;

#[test]
fn formula_matches_exhaustive_counts() {
    for n in 1..=8 {
        let delta = count_diff(&formula_counts(n), &brute_counts(n));
        assert!(delta.is_empty(), "n = {n}: {delta:?}");
    }
}

#[test]
fn census_tables_agree_and_sum() {
    for n in 1..=8 {
        let t = census(n).unwrap();
        assert_eq!(t, orientation_census(n).unwrap(), "n = {n}");
        let total: u64 = t.values().sum();
        assert_eq!(BigUint::from(total), baxter_number(n));
        // marginal over (m, i, j) is the formula
        let mut marginal = std::collections::BTreeMap::<_, BigUint>::new();
        for (k, c) in &t {
            *marginal.entry((k.m, k.i, k.j)).or_default() += *c;
        }
        assert_eq!(marginal, formula_counts(n));
    }
}

#[test]
fn schroder_counts_separable_permutations() {
    for n in 1..=9 {
        assert_eq!(BigUint::from(brute_schroder(n)), schroder(n), "n = {n}");
    }
}

#[test]
fn rooted_images_are_distinct() {
    let pattern = Pattern::p2413();
    for n in 1..=7 {
        let mut codes = HashSet::new();
        let mut count = 0;
        for p in generate::<PermutationTree>(n).map(|g| g.object).filter(|p| p.avoids(&pattern)) {
            codes.insert(canonical_code(&phi_hat(&p).unwrap()));
            count += 1;
        }
        assert_eq!(codes.len(), count, "n = {n}");
    }
}

#[test]
fn involution_formula() {
    for n in 1..=5 {
        assert_eq!(BigUint::from(brute_ffp_involutions(n)), ffp_involution_count(n), "n = {n}");
    }
}
