use baxter::bijection::phi;
use baxter::gentree::{generate, OrientationTree, PermutationTree};
use baxter::planar::{canonical_code, enumerate_bipolar_orientations, sp_decompose, DEFAULT_MAX_BRUTE_EDGES};
use baxter::{BipolarOrientation, Permutation};

fn baxter(n: usize) -> impl Iterator<Item = Permutation> {
    generate::<PermutationTree>(n).map(|g| g.object)
}

fn images(n: usize) -> impl Iterator<Item = (Permutation, BipolarOrientation)> {
    baxter(n).map(|p| {
        let o = phi(&p).unwrap().0;
        (p, o)
    })
}

#[test]
fn generated_orientations_validate() {
    for n in 1..=8 {
        for (p, o) in images(n) {
            assert!(o.is_valid(), "{p}: {:?}", o.validate());
        }
        for g in generate::<OrientationTree>(n) {
            assert!(g.object.is_valid(), "{}: {:?}", g.seq, g.object.validate());
        }
    }
}

#[test]
fn symmetry_group() {
    for n in 1..=6 {
        for g in generate::<OrientationTree>(n) {
            let o = g.object;
            let code = canonical_code(&o);
            assert_eq!(canonical_code(&o.mirror().mirror()), code);
            assert_eq!(canonical_code(&o.reverse_all().reverse_all()), code);
            let d2 = o.dual().dual();
            assert_eq!(canonical_code(&d2), canonical_code(&o.reverse_all()), "{}", g.seq);
            assert_eq!(canonical_code(&d2.dual().dual()), code);
            assert_eq!(canonical_code(&o.dual().mirror().dual().mirror()), code, "{}", g.seq);
        }
    }
}

#[test]
fn mirror_swaps_pieces() {
    for n in 1..=7 {
        for g in generate::<OrientationTree>(n) {
            let o = g.object;
            assert_eq!(o.mirror().find_lops().len(), o.find_rops().len(), "{}", g.seq);
            assert_eq!(o.mirror().find_rops().len(), o.find_lops().len(), "{}", g.seq);
        }
    }
}

#[test]
fn euler_relation() {
    for n in 1..=7 {
        for (p, o) in images(n) {
            assert_eq!(o.faces().len() + o.vertex_count(), o.edge_count() + 1, "{p}");
            assert_eq!(o.map.face_count() + o.vertex_count(), o.edge_count() + 2, "{p}");
        }
    }
}

#[test]
fn unique_extremal_orientations() {
    for n in 1..=6 {
        for (p, o) in images(n) {
            let all = enumerate_bipolar_orientations(&o.underlying(), DEFAULT_MAX_BRUTE_EDGES).unwrap();
            assert!(all.iter().all(BipolarOrientation::is_valid));
            assert_eq!(all.iter().filter(|x| x.find_rops().is_empty()).count(), 1, "{p}");
            assert_eq!(all.iter().filter(|x| x.find_lops().is_empty()).count(), 1, "{p}");
        }
    }
}

#[test]
fn series_parallel_iff_unique_orientation() {
    for n in 1..=6 {
        for (p, o) in images(n) {
            let m = o.underlying();
            let unique = enumerate_bipolar_orientations(&m, DEFAULT_MAX_BRUTE_EDGES).unwrap().len() == 1;
            assert_eq!(sp_decompose(&m).is_ok(), unique, "{p}");
        }
    }
}

#[test]
fn brute_force_guard() {
    let (o, _) = phi(&"2 1".parse().unwrap()).unwrap();
    assert!(enumerate_bipolar_orientations(&o.underlying(), 1).is_err());
}
