use std::collections::HashSet;
use std::time::Instant;

use baxter::bijection::{correspondence_check, phi, phi_hat, psi};
use baxter::enumeration::{orientation_key, permutation_key, schroder};
use baxter::gentree::{
    generate, lambda, map_parent, orient_labels, perm_labels, random_baxter, PermutationTree,
};
use baxter::perm::Pattern;
use baxter::planar::{
    canonical_code, enumerate_bipolar_orientations, is_separable, parse_map, sp_decompose, write_map,
};
use baxter::{BipolarOrientation, Permutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Suite;

pub const DEFAULT_SEED: u64 = 0x5eed_ba87;

/// Largest size for which the symmetry suite also checks the point/edge
/// pairing.
const EDGE_PAIRING_MAX_N: usize = 5;

pub struct Options {
    pub seed: u64,
    pub samples: usize,
    pub sample_n: usize,
    pub max_brute_edges: usize,
}

type Outcome = Result<usize, String>;

fn baxter_up_to(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).flat_map(|k| generate::<PermutationTree>(k).map(|g| g.object))
}

fn image(p: &Permutation) -> Result<BipolarOrientation, String> {
    phi(p).map(|(o, _)| o).map_err(|e| format!("{p}: {e}"))
}

fn for_each_baxter(n: usize, mut check: impl FnMut(&Permutation) -> Result<(), String>) -> Outcome {
    let mut cases = 0;
    for p in baxter_up_to(n) {
        check(&p)?;
        cases += 1;
    }
    Ok(cases)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn roundtrip(n: usize) -> Outcome {
    for_each_baxter(n, |p| {
        let o = image(p)?;
        let text = write_map(&o);
        let back = parse_map(&text).map_err(|e| format!("{p}: {e}"))?;
        let (q, _) = psi(&back).map_err(|e| format!("{p}: {e}"))?;
        ensure(&q == p, || format!("{p} came back as {q}"))
    })
}

fn stats(n: usize) -> Outcome {
    for_each_baxter(n, |p| {
        let o = image(p)?;
        let s = p.statistics().expect("non-empty");
        ensure(permutation_key(p) == orientation_key(&o), || {
            format!("{p}: {:?} vs {:?}", permutation_key(p), orientation_key(&o))
        })?;
        ensure(o.edge_count() == p.len() && o.inner_face_count() == s.descents, || {
            format!("{p}: edges {} inner faces {}", o.edge_count(), o.inner_face_count())
        })
    })
}

fn symmetric(p: &Permutation) -> Result<(), String> {
    let o = image(p)?;
    let code = |q: &Permutation| image(q).map(|o| canonical_code(&o));
    ensure(code(&p.inverse())? == canonical_code(&o.mirror()), || format!("{p}: inverse is not the mirror"))?;
    ensure(code(&p.rotate_cw())? == canonical_code(&o.dual()), || format!("{p}: rotation is not the dual"))?;
    ensure(code(&p.reverse())? == canonical_code(&o.dual().mirror()), || {
        format!("{p}: reverse is not the mirrored dual")
    })
}

fn symmetry(n: usize, opts: &Options) -> Outcome {
    let mut cases = for_each_baxter(n, |p| {
        symmetric(p)?;
        if p.len() <= EDGE_PAIRING_MAX_N {
            let (o, corr) = phi(p).map_err(|e| e.to_string())?;
            ensure(correspondence_check(p, &o, &corr), || format!("{p}: edge pairing"))?;
        }
        Ok(())
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.samples {
        symmetric(&random_baxter(opts.sample_n, &mut rng))?;
        cases += 1;
    }
    Ok(cases)
}

fn lambda_suite(n: usize) -> Outcome {
    for_each_baxter(n, |p| {
        let o = image(p)?;
        ensure(perm_labels(p) == orient_labels(&o), || format!("{p}: labels differ"))?;
        ensure(canonical_code(&lambda(p)) == canonical_code(&o), || format!("{p}: tree image differs"))
    })
}

fn rop(n: usize, opts: &Options) -> Outcome {
    let (a, b) = (Pattern::p2413(), Pattern::p3142());
    for_each_baxter(n, |p| {
        let o = image(p)?;
        ensure(p.contains(&a) == !o.find_rops().is_empty(), || format!("{p}: 2413 vs right piece"))?;
        ensure(p.contains(&b) == !o.find_lops().is_empty(), || format!("{p}: 3142 vs left piece"))?;
        if p.len() > opts.max_brute_edges {
            return Ok(());
        }
        let all = enumerate_bipolar_orientations(&o.underlying(), opts.max_brute_edges).map_err(|e| e.to_string())?;
        let minimal = all.iter().filter(|x| x.find_rops().is_empty()).count();
        let maximal = all.iter().filter(|x| x.find_lops().is_empty()).count();
        ensure(minimal == 1 && maximal == 1, || format!("{p}: {minimal} without right piece, {maximal} without left"))
    })
}

fn sp(n: usize, opts: &Options) -> Outcome {
    let (a, b) = (Pattern::p2413(), Pattern::p3142());
    let mut cases = 0;
    for size in 1..=n {
        let mut count = 0u64;
        for p in generate::<PermutationTree>(size).map(|g| g.object) {
            if !(p.avoids(&a) && p.avoids(&b)) {
                continue;
            }
            count += 1;
            let m = image(&p)?.underlying();
            let tree = sp_decompose(&m).map_err(|e| format!("{p}: {e}"))?;
            let rebuilt = tree.recompose();
            ensure(canonical_code(&rebuilt.add_root_edge()) == canonical_code(&m.add_root_edge()), || {
                format!("{p}: {tree} does not rebuild the map")
            })?;
            if size <= opts.max_brute_edges {
                let k = enumerate_bipolar_orientations(&m, opts.max_brute_edges).map_err(|e| e.to_string())?.len();
                ensure(k == 1, || format!("{p}: {k} bipolar orientations"))?;
            }
            cases += 1;
        }
        // Baxter permutations include all avoiders of 2413 and 3142
        ensure(schroder(size) == count.into(), || format!("size {size}: {count} avoiders"))?;
    }
    Ok(cases)
}

/// Rooted non-separable images of 2413-avoiders, and the map tree parent
/// rule on its own subtree: the 3142-avoiders, whose orientations have no
/// left piece.
fn tm(n: usize) -> Outcome {
    let (avoid_rop, avoid_lop) = (Pattern::p2413(), Pattern::p3142());
    let mut cases = 0;
    for size in 1..=n {
        let mut seen = HashSet::new();
        for p in generate::<PermutationTree>(size).map(|g| g.object) {
            if p.avoids(&avoid_rop) {
                let m = phi_hat(&p).map_err(|e| format!("{p}: {e}"))?;
                ensure(!is_separable(&m.map), || format!("{p}: separable image"))?;
                ensure(seen.insert(canonical_code(&m)), || format!("{p}: image repeated"))?;
                let s = p.statistics().expect("non-empty");
                let got = (
                    m.edge_count(),
                    m.map.vertex_count() - 2,
                    m.map.degree(m.sink()),
                    m.map.degree(m.source()),
                    m.right_face_degree(),
                    m.left_face_degree(),
                );
                let want = (size + 1, s.ascents, s.rl_max + 1, s.lr_min + 1, s.lr_max + 1, s.rl_min + 1);
                ensure(got == want, || format!("{p}: parameters {got:?}, expected {want:?}"))?;
                cases += 1;
            }
            if size >= 2 && p.avoids(&avoid_lop) {
                let m = phi_hat(&p).map_err(|e| format!("{p}: {e}"))?;
                let parent = map_parent(&m).map_err(|e| format!("{p}: {e}"))?;
                let expect = phi_hat(&p.without_max()).map_err(|e| e.to_string())?;
                ensure(canonical_code(&parent) == canonical_code(&expect), || format!("{p}: map parent differs"))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Runs the selected suites, printing one line each. Returns whether all
/// passed.
pub fn run(n: usize, suite: Suite, opts: &Options) -> bool {
    println!("seed {}", opts.seed);
    let suites = match suite {
        Suite::All => vec![Suite::Roundtrip, Suite::Stats, Suite::Symmetry, Suite::Lambda, Suite::Rop, Suite::Sp, Suite::Tm],
        one => vec![one],
    };
    let mut ok = true;
    for s in suites {
        let clock = Instant::now();
        let outcome = match s {
            Suite::Roundtrip => roundtrip(n),
            Suite::Stats => stats(n),
            Suite::Symmetry => symmetry(n, opts),
            Suite::Lambda => lambda_suite(n),
            Suite::Rop => rop(n, opts),
            Suite::Sp => sp(n, opts),
            Suite::Tm => tm(n),
            Suite::All => unreachable!(),
        };
        let name = format!("{s:?}").to_lowercase();
        match outcome {
            Ok(cases) => println!("{name}: ok ({cases} cases, {:.2}s)", clock.elapsed().as_secs_f64()),
            Err(counterexample) => {
                println!("{name}: FAILED: {counterexample}");
                ok = false;
            }
        }
    }
    ok
}
