use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use baxter::bijection::{build_phi, phi, psi, write_svg};
use baxter::enumeration::{brute_counts, census, census_tsv, count_diff, counts_tsv, formula_counts, orientation_census};
use baxter::gentree::{
    generate_filtered, insertion_sequence, replay_orientation, replay_permutation, InsertionSeq, OrientationTree,
    PermutationTree,
};
use baxter::perm::Pattern;
use baxter::planar::{write_dot, write_map};
use baxter::{BipolarOrientation, Permutation};

use crate::input::{self, Object};
use crate::{Avoid, Cli, Command, Format, Guards, MapOp, PermOp, Reported, Tree};

pub fn run(cli: Cli) -> Result<()> {
    let guards = cli.guards;
    match cli.command {
        Command::Check { perm } => check(&input::perm(&perm)?),
        Command::ToMap { perm } => {
            print!("{}", to_map(&input::perm(&perm)?)?);
            Ok(())
        }
        Command::ToPerm { map } => {
            let (p, _) = psi(&input::map(&map)?)?;
            println!("{p}");
            Ok(())
        }
        Command::Stats { input } => {
            print!(
                "{}",
                match input::object(&input)? {
                    Object::Perm(p) => perm_stats(&p),
                    Object::Map(o) => map_stats(&o),
                }
            );
            Ok(())
        }
        Command::Sym { perm, op } => {
            let p = input::perm(&perm)?;
            let q = match op {
                PermOp::Inv => p.inverse(),
                PermOp::Rev => p.reverse(),
                PermOp::Rot => p.rotate_cw(),
            };
            println!("{q}");
            Ok(())
        }
        Command::SymMap { map, op } => {
            let o = input::map(&map)?;
            let out = match op {
                MapOp::Mir => o.mirror(),
                MapOp::Dual => o.dual(),
                MapOp::Revall => o.reverse_all(),
            };
            print!("{}", write_map(&out));
            Ok(())
        }
        Command::Seq { perm } => {
            let p = input::perm(&perm)?;
            require_baxter(&p)?;
            println!("{}", insertion_sequence(&p));
            Ok(())
        }
        Command::Replay { steps, tree } => {
            let seq: InsertionSeq = steps.join(" ").parse()?;
            match tree {
                Tree::B => println!("{}", replay_permutation(&seq)?),
                Tree::O => print!("{}", write_map(&replay_orientation(&seq)?)),
            }
            Ok(())
        }
        Command::Enumerate { n, tree, filter } => {
            guard(n, guards)?;
            enumerate(n, tree, filter);
            Ok(())
        }
        Command::Counts { n, source } => counts(n, source.brute, source.diff, guards),
        Command::Census { n, orientations } => {
            guard(n, guards)?;
            let table = if orientations { orientation_census(n)? } else { census(n)? };
            print!("{}", census_tsv(n, &table));
            Ok(())
        }
        Command::Verify { n, suite, seed, samples, sample_n } => {
            guard(n, guards)?;
            let opts = crate::verify::Options { seed, samples, sample_n, max_brute_edges: guards.max_brute_edges };
            if crate::verify::run(n, suite, &opts) {
                Ok(())
            } else {
                Err(Reported.into())
            }
        }
        Command::Render { input, format, output } => {
            let text = render(input::object(&input)?, format)?;
            match output {
                Some(path) => write_file(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
    }
}

fn guard(n: usize, guards: Guards) -> Result<()> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    if n > guards.max_n {
        bail!("n = {n} exceeds --max-n {}", guards.max_n);
    }
    Ok(())
}

fn require_baxter(p: &Permutation) -> Result<()> {
    match p.baxter_witness() {
        None => Ok(()),
        Some(w) => bail!("{p} is not Baxter: {w}"),
    }
}

fn check(p: &Permutation) -> Result<()> {
    match p.baxter_witness() {
        None => {
            println!("baxter");
            Ok(())
        }
        Some(w) => {
            let v = |x: usize| p.get(x);
            println!(
                "not baxter: {w}, values {} {} {} {}",
                v(w.i),
                v(w.j),
                v(w.j + 1),
                v(w.k)
            );
            Err(Reported.into())
        }
    }
}

/// The map followed by a blank line and a `corr` block pairing each point
/// `(i, π(i))` with its edge, all 1-based.
pub fn to_map(p: &Permutation) -> Result<String> {
    let (o, corr) = phi(p)?;
    let mut s = write_map(&o);
    s.push_str("\ncorr\n");
    for (i, e) in corr.edge_of_point.iter().enumerate() {
        writeln!(s, "{} {} {}", i + 1, p.get(i + 1), e + 1).unwrap();
    }
    Ok(s)
}

fn perm_stats(p: &Permutation) -> String {
    let mut out = format!("size {}\n", p.len());
    if let Ok(s) = p.statistics() {
        for (k, v) in [
            ("ascents", s.ascents),
            ("descents", s.descents),
            ("lr_maxima", s.lr_max),
            ("rl_maxima", s.rl_max),
            ("lr_minima", s.lr_min),
            ("rl_minima", s.rl_min),
        ] {
            writeln!(out, "{k} {v}").unwrap();
        }
    }
    writeln!(out, "baxter {}", p.is_baxter()).unwrap();
    out
}

fn map_stats(o: &BipolarOrientation) -> String {
    let b = o.borders();
    let (source, sink) = o.pole_degrees();
    let mut out = String::new();
    for (k, v) in [
        ("edges", o.edge_count()),
        ("non_polar_vertices", o.non_polar_count()),
        ("inner_faces", o.inner_face_count()),
        ("left_outer_degree", b.left_outer_degree()),
        ("right_outer_degree", b.right_outer_degree()),
        ("sink_degree", sink),
        ("source_degree", source),
    ] {
        writeln!(out, "{k} {v}").unwrap();
    }
    out
}

fn avoids(filter: Option<Avoid>, p: &Permutation) -> bool {
    match filter {
        None => true,
        Some(Avoid::P2413) => p.avoids(&Pattern::p2413()),
        Some(Avoid::P3142) => p.avoids(&Pattern::p3142()),
        Some(Avoid::Both) => p.avoids(&Pattern::p2413()) && p.avoids(&Pattern::p3142()),
    }
}

/// Orientations have a right- (left-) oriented piece exactly when the
/// permutation contains 2413 (3142).
fn orientation_avoids(filter: Option<Avoid>, o: &BipolarOrientation) -> bool {
    match filter {
        None => true,
        Some(Avoid::P2413) => o.find_rops().is_empty(),
        Some(Avoid::P3142) => o.find_lops().is_empty(),
        Some(Avoid::Both) => o.find_rops().is_empty() && o.find_lops().is_empty(),
    }
}

fn enumerate(n: usize, tree: Tree, filter: Option<Avoid>) {
    match tree {
        Tree::B => {
            for node in generate_filtered::<PermutationTree, _>(n, |p| avoids(filter, p)) {
                println!("{}", node.object);
            }
        }
        Tree::O => {
            for (idx, node) in generate_filtered::<OrientationTree, _>(n, |o| orientation_avoids(filter, o)).enumerate() {
                if idx > 0 {
                    println!();
                }
                print!("{}", write_map(&node.object));
            }
        }
    }
}

fn counts(n: usize, brute: bool, diff: bool, guards: Guards) -> Result<()> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    if !(brute || diff) {
        print!("{}", counts_tsv(n, &formula_counts(n)));
        return Ok(());
    }
    guard(n, guards)?;
    let table = brute_counts(n);
    if brute {
        print!("{}", counts_tsv(n, &table));
        return Ok(());
    }
    let delta = count_diff(&formula_counts(n), &table);
    if delta.is_empty() {
        return Ok(());
    }
    println!("n\tm\ti\tj\tformula\tbrute");
    for ((m, i, j), f, b) in delta {
        println!("{n}\t{m}\t{i}\t{j}\t{f}\t{b}");
    }
    Err(Reported.into())
}

fn render(object: Object, format: Format) -> Result<String> {
    Ok(match (object, format) {
        (Object::Perm(p), Format::Svg) => write_svg(&build_phi(&p)?),
        (Object::Perm(p), Format::Dot) => write_dot(&phi(&p)?.0),
        (Object::Map(o), Format::Dot) => write_dot(&o),
        (Object::Map(o), Format::Svg) => write_svg(&build_phi(&psi(&o)?.0)?),
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
