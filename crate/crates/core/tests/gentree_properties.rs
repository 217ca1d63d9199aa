use baxter::bijection::phi;
use baxter::enumeration::{orientation_key, permutation_key, CensusKey};
use baxter::gentree::{
    generate, generate_filtered, insertion_sequence, lambda, orient_insert, orient_labels, orient_parent, perm_insert,
    perm_labels, perm_parent, replay_permutation, LabelPair, OrientationTree, PermutationTree, Side, Step,
};
use baxter::perm::Pattern;
use baxter::planar::canonical_code;
use baxter::Permutation;

fn baxter(n: usize) -> impl Iterator<Item = Permutation> {
    generate::<PermutationTree>(n).map(|g| g.object)
}

/// The five-statistic rewriting rule: `L_1` adds an lr-minimum, `R_1` an
/// rl-minimum, every `R` an ascent.
fn extended_child(key: CensusKey, step: Step) -> CensusKey {
    let labels = LabelPair { i: key.i, j: key.j }.child(step).expect("legal step");
    let (mut m, mut k, mut l) = (key.m, key.k, key.l);
    match step.side {
        Side::L => k += (step.k == 1) as usize,
        Side::R => {
            m += 1;
            l += (step.k == 1) as usize;
        }
    }
    CensusKey { m, i: labels.i, j: labels.j, k, l }
}

#[test]
fn label_homomorphism() {
    for n in 1..8 {
        for p in baxter(n) {
            let l = perm_labels(&p);
            for c in 0..l.child_count() {
                let step = l.child_step(c);
                assert_eq!(Some(perm_labels(&perm_insert(&p, step).unwrap())), l.child(step), "{p} {step}");
            }
        }
        for g in generate::<OrientationTree>(n) {
            let l = orient_labels(&g.object);
            for c in 0..l.child_count() {
                let step = l.child_step(c);
                let child = orient_insert(&g.object, step).unwrap();
                assert_eq!(Some(orient_labels(&child)), l.child(step), "{} {step}", g.seq);
            }
        }
    }
}

#[test]
fn extended_labels_evolve_alike() {
    for n in 1..7 {
        for p in baxter(n) {
            let key = permutation_key(&p);
            let o = phi(&p).unwrap().0;
            assert_eq!(orientation_key(&o), key);
            let l = perm_labels(&p);
            for c in 0..l.child_count() {
                let step = l.child_step(c);
                let want = extended_child(key, step);
                assert_eq!(permutation_key(&perm_insert(&p, step).unwrap()), want, "{p} {step}");
                assert_eq!(orientation_key(&orient_insert(&o, step).unwrap()), want, "{p} {step}");
            }
        }
    }
}

#[test]
fn lambda_is_phi() {
    for n in 1..=7 {
        for p in baxter(n) {
            let o = phi(&p).unwrap().0;
            assert_eq!(canonical_code(&lambda(&p)), canonical_code(&o), "{p}");
            assert_eq!(canonical_code(&lambda(&p.reverse())), canonical_code(&lambda(&p).dual().mirror()), "{p}");
        }
    }
}

#[test]
fn parents_invert_insertions() {
    for n in 1..7 {
        for p in baxter(n) {
            let o = phi(&p).unwrap().0;
            let l = perm_labels(&p);
            for c in 0..l.child_count() {
                let step = l.child_step(c);
                assert_eq!(perm_parent(&perm_insert(&p, step).unwrap()).unwrap(), p);
                let child = orient_insert(&o, step).unwrap();
                assert_eq!(canonical_code(&orient_parent(&child).unwrap()), canonical_code(&o), "{p} {step}");
            }
        }
    }
}

#[test]
fn sequences_swap_under_reversal() {
    for n in 1..=7 {
        for p in baxter(n) {
            let seq = insertion_sequence(&p);
            assert_eq!(replay_permutation(&seq).unwrap(), p);
            assert_eq!(insertion_sequence(&p.reverse()), seq.swapped(), "{p}");
        }
    }
}

#[test]
fn avoidance_subtrees() {
    let (a, b) = (Pattern::p2413(), Pattern::p3142());
    for n in 1..=7 {
        let filtered: Vec<Permutation> = generate_filtered::<PermutationTree, _>(n, |p| p.avoids(&a)).map(|g| g.object).collect();
        let plain: Vec<Permutation> = baxter(n).filter(|p| p.avoids(&a)).collect();
        assert_eq!(filtered, plain);
        let no_left: Vec<_> = generate_filtered::<OrientationTree, _>(n, |o| o.find_lops().is_empty())
            .map(|g| canonical_code(&g.object))
            .collect();
        let plain: Vec<_> = baxter(n).filter(|p| p.avoids(&b)).map(|p| canonical_code(&lambda(&p))).collect();
        assert_eq!(no_left, plain);
    }
}
