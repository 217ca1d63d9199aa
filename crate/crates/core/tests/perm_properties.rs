use baxter::perm::Pattern;
use baxter::Permutation;
use proptest::prelude::*;

fn any_permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

#[test]
fn baxter_is_barred_avoidance() {
    let (left, right) = (Pattern::baxter_left(), Pattern::baxter_right());
    for n in 1..=8 {
        for p in Permutation::all(n) {
            assert_eq!(p.is_baxter(), left.avoided_by(&p) && right.avoided_by(&p), "{p}");
        }
    }
}

#[test]
fn baxter_closed_under_square_symmetries() {
    for n in 1..=8 {
        for p in Permutation::all(n) {
            let b = p.is_baxter();
            assert_eq!(b, p.reverse().is_baxter(), "{p}");
            assert_eq!(b, p.inverse().is_baxter(), "{p}");
            assert_eq!(b, p.rotate_cw().is_baxter(), "{p}");
        }
    }
}

#[test]
fn separable_permutations_are_baxter() {
    let (a, b) = (Pattern::p2413(), Pattern::p3142());
    for n in 1..=8 {
        for p in Permutation::all(n).filter(|p| p.avoids(&a) && p.avoids(&b)) {
            assert!(p.is_baxter(), "{p}");
        }
    }
}

#[test]
fn baxter_numbers_by_brute_force() {
    let counts: Vec<usize> = (1..=7).map(|n| Permutation::all(n).filter(Permutation::is_baxter).count()).collect();
    assert_eq!(counts, [1, 2, 6, 22, 92, 422, 2074]);
}

proptest! {
    #[test]
    fn symmetry_orders(p in any_permutation(12)) {
        prop_assert_eq!(p.rotate_cw().rotate_cw().rotate_cw().rotate_cw(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse().reverse(), p.clone());
    }

    #[test]
    fn statistics_under_symmetries(p in any_permutation(12)) {
        let s = p.statistics().unwrap();
        prop_assert_eq!(p.reverse().statistics().unwrap().lr_max, s.rl_max);
        prop_assert_eq!(p.reverse().statistics().unwrap().ascents, s.descents);
        // transposing the diagram swaps the NW and SE quadrants
        let t = p.inverse().statistics().unwrap();
        prop_assert_eq!((t.lr_max, t.rl_min), (s.rl_min, s.lr_max));
        prop_assert_eq!((t.rl_max, t.lr_min), (s.rl_max, s.lr_min));
        prop_assert_eq!(s.ascents + s.descents + 1, p.len());
    }

    #[test]
    fn text_round_trip(p in any_permutation(20)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn witness_is_a_real_occurrence(p in any_permutation(10)) {
        if let Some(w) = p.baxter_witness() {
            prop_assert!(w.i < w.j && w.j + 1 < w.k + 1 && w.j < w.k);
            let (a, b, c, d) = (p.get(w.i), p.get(w.j), p.get(w.j + 1), p.get(w.k));
            let left = c < a && a < d && d < b;
            let right = b < d && d < a && a < c;
            prop_assert!(left || right, "{} {:?}", p, w);
        }
    }
}
