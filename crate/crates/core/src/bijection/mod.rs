//! The bijection between Baxter permutations and plane bipolar orientations.
//!
//! The forward direction draws the Hasse diagram of the permutation points
//! plus one white point per ascent, then erases the black points. The inverse
//! reads the abscissas and ordinates off two spanning trees of the
//! orientation with every edge subdivided.

mod diagram;
mod svg;

use std::cmp::Ordering;

use thiserror::Error;

use crate::perm::{BaxterWitness, Permutation};
use crate::planar::{dart_correspondence, twin, BipolarOrientation, Dart, PlaneMap, RootedMap, Violation};

pub use diagram::{diagram_points, hasse_covers, hasse_covers_naive, Defect, EmbeddedDiagram, Point, PointKind};
pub use svg::write_svg;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("not a Baxter permutation: {0}")]
    NotBaxter(BaxterWitness),
    #[error("the empty permutation has no orientation")]
    Empty,
    #[error("not a plane bipolar orientation: {}", join(.0))]
    InvalidOrientation(Vec<Violation>),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Pairing between the points of a permutation and the edges of its
/// orientation: `edge_of_point[i - 1]` is the edge of the point `(i, π(i))`,
/// whose label is `π(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCorrespondence {
    pub edge_of_point: Vec<usize>,
}

impl EdgeCorrespondence {
    pub fn point_of_edge(&self) -> Vec<usize> {
        let mut out = vec![0; self.edge_of_point.len()];
        for (i, &e) in self.edge_of_point.iter().enumerate() {
            out[e] = i + 1;
        }
        out
    }

    /// Whether the pairing is a bijection onto `0..len`.
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.edge_of_point.len()];
        self.edge_of_point.iter().all(|&e| e < seen.len() && !std::mem::replace(&mut seen[e], true))
    }
}

/// Builds the embedded Hasse diagram of a Baxter permutation.
pub fn build_phi(p: &Permutation) -> Result<EmbeddedDiagram, BijectionError> {
    if p.is_empty() {
        return Err(BijectionError::Empty);
    }
    if let Some(w) = p.baxter_witness() {
        return Err(BijectionError::NotBaxter(w));
    }
    let d = EmbeddedDiagram::from_points(diagram_points(p));
    debug_assert!(d.defects().is_empty(), "{p}: {:?}", d.defects());
    Ok(d)
}

/// Clockwise order of directions starting from straight up, exact.
fn clockwise(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |v: (i64, i64)| !(v.0 > 0 || (v.0 == 0 && v.1 > 0));
    half(a).cmp(&half(b)).then_with(|| {
        // b lies clockwise of a exactly when the cross product is negative
        (a.0 * b.1 - a.1 * b.0).cmp(&0)
    })
}

/// Forward bijection. White points become vertices numbered by abscissa, so
/// the source is vertex 0 and the sink the last one; the point `(i, π(i))`
/// becomes edge `i - 1`.
pub fn phi(p: &Permutation) -> Result<(BipolarOrientation, EdgeCorrespondence), BijectionError> {
    let d = build_phi(p)?;
    Ok((orientation_of(&d, p.len()), EdgeCorrespondence { edge_of_point: (0..p.len()).collect() }))
}

fn orientation_of(d: &EmbeddedDiagram, n: usize) -> BipolarOrientation {
    let mut vertex_of_point = vec![usize::MAX; d.points.len()];
    let mut whites = 0;
    for (i, pt) in d.points.iter().enumerate() {
        if !pt.is_black() {
            vertex_of_point[i] = whites;
            whites += 1;
        }
    }
    // (direction, dart) pairs around each white vertex
    let mut around: Vec<Vec<((i64, i64), Dart)>> = vec![Vec::new(); whites];
    for &(lo, hi) in &d.edges {
        let (white, black, dart) = match (d.points[lo].kind, d.points[hi].kind) {
            (PointKind::White(_), PointKind::Black(i)) => (lo, hi, 2 * (i - 1)),
            (PointKind::Black(i), PointKind::White(_)) => (hi, lo, 2 * (i - 1) + 1),
            _ => unreachable!("diagram edges are bicoloured"),
        };
        let (w, b) = (&d.points[white], &d.points[black]);
        around[vertex_of_point[white]].push(((b.x - w.x, b.y - w.y), dart));
    }
    let rotations: Vec<Vec<Dart>> = around
        .into_iter()
        .map(|mut r| {
            r.sort_by(|a, b| clockwise(a.0, b.0));
            r.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    // locate every dart's endpoint and the midpoint of its edge
    let mut white_at = vec![(0, 0); whites];
    for (i, pt) in d.points.iter().enumerate() {
        if !pt.is_black() {
            white_at[vertex_of_point[i]] = (pt.x, pt.y);
        }
    }
    let mut black_at = vec![(0, 0); n];
    for pt in &d.points {
        if let PointKind::Black(i) = pt.kind {
            black_at[i - 1] = (pt.x, pt.y);
        }
    }
    let provisional = PlaneMap::new(rotations.clone(), 0).expect("diagram rotation system");
    let faces = provisional.faces();
    let area2 = |walk: &[Dart]| {
        let poly: Vec<(i64, i64)> =
            walk.iter().flat_map(|&dt| [white_at[provisional.vertex(dt)], black_at[dt / 2]]).collect();
        (0..poly.len())
            .map(|k| {
                let (a, b) = (poly[k], poly[(k + 1) % poly.len()]);
                a.0 * b.1 - a.1 * b.0
            })
            .sum::<i64>()
    };
    // bounded faces wind counterclockwise; the outer face has the opposite
    // area, which is zero when there are no bounded faces
    let outer_walks: Vec<&Vec<Dart>> = faces.walks.iter().filter(|w| area2(w) <= 0).collect();
    assert_eq!(outer_walks.len(), 1, "exactly one face winds clockwise");
    let map = PlaneMap::new(rotations, outer_walks[0][0]).unwrap();
    let o = BipolarOrientation::new(map, 0, whites - 1);
    debug_assert!(o.is_valid(), "{:?}", o.validate());
    o
}

/// Forward bijection followed by root-edge insertion.
pub fn phi_hat(p: &Permutation) -> Result<RootedMap, BijectionError> {
    Ok(phi(p)?.0.underlying().add_root_edge())
}

/// Prefix order of the black (edge) vertices of the spanning tree that keeps
/// `keep[v]` as the parent dart of each non-source vertex. Children are read
/// clockwise from the parent dart, or counterclockwise when `ccw` is set.
fn prefix_labels(o: &BipolarOrientation, keep: &[Option<Dart>], root_first: Dart, ccw: bool) -> Vec<usize> {
    let m = &o.map;
    let sweep = |from: Dart| {
        let mut r = m.rotation_from(from);
        if ccw {
            r[1..].reverse();
        }
        r
    };
    let mut label = vec![0; o.edge_count()];
    let mut next = 1;
    let mut stack: Vec<(Vec<Dart>, usize)> = vec![(sweep(root_first), 0)];
    while let Some((darts, i)) = stack.last_mut() {
        let Some(&d) = darts.get(*i) else {
            stack.pop();
            continue;
        };
        *i += 1;
        if d % 2 == 1 {
            continue;
        }
        label[d / 2] = next;
        next += 1;
        let up = twin(d);
        if keep[m.vertex(up)] == Some(up) {
            let mut children = sweep(up);
            children.remove(0);
            stack.push((children, 0));
        }
    }
    label
}

/// Inverse bijection. Returns the permutation and, for each of its points,
/// the edge it came from.
pub fn psi(o: &BipolarOrientation) -> Result<(Permutation, EdgeCorrespondence), BijectionError> {
    let violations = o.validate();
    if !violations.is_empty() {
        return Err(BijectionError::InvalidOrientation(violations));
    }
    if o.edge_count() == 0 {
        return Err(BijectionError::Empty);
    }
    let m = &o.map;
    let n = o.edge_count();
    let start = o.start_dart();
    let sink_right = o.sink_outer_dart();
    let sink_left = m.prev_cw(sink_right);
    let mut keep_x = vec![None; o.vertex_count()];
    let mut keep_y = vec![None; o.vertex_count()];
    for v in 0..o.vertex_count() {
        if v == o.source {
            continue;
        }
        if v == o.sink {
            keep_x[v] = Some(sink_right);
            keep_y[v] = Some(sink_left);
        } else {
            keep_x[v] = Some(o.first_incoming(v));
            keep_y[v] = Some(o.last_incoming(v));
        }
    }
    let x = prefix_labels(o, &keep_x, start, false);
    let y = prefix_labels(o, &keep_y, m.prev_cw(start), true);
    let mut values = vec![0; n];
    let mut edge_of_point = vec![0; n];
    for e in 0..n {
        values[x[e] - 1] = y[e];
        edge_of_point[x[e] - 1] = e;
    }
    let p = Permutation::new(values).expect("the two tree orders give a permutation");
    assert!(p.is_baxter(), "the inverse produced a non-Baxter permutation {p}");
    Ok((p, EdgeCorrespondence { edge_of_point }))
}

/// Checks the point/edge pairing against the symmetries: the point
/// `(π(i), i)` of the inverse must match the mirrored edge, and the rotated
/// point must match the dual edge.
pub fn correspondence_check(p: &Permutation, o: &BipolarOrientation, corr: &EdgeCorrespondence) -> bool {
    if !corr.is_bijective() || corr.edge_of_point.len() != p.len() {
        return false;
    }
    let Ok((inv, inv_corr)) = phi(&p.inverse()) else { return false };
    let Ok((rot, rot_corr)) = phi(&p.rotate_cw()) else { return false };
    let (Some(to_inv), Some(to_rot)) = (dart_correspondence(&o.mirror(), &inv), dart_correspondence(&o.dual(), &rot))
    else {
        return false;
    };
    (1..=p.len()).all(|i| {
        let e = corr.edge_of_point[i - 1];
        let j = p.get(i);
        to_inv[e] == inv_corr.edge_of_point[j - 1] && to_rot[e] == rot_corr.edge_of_point[j - 1]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::canonical_code;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const FIGURE: &str = "5 3 4 9 7 8 10 6 1 2";

    #[test]
    fn small_images() {
        let (one, _) = phi(&perm("1")).unwrap();
        assert_eq!(canonical_code(&one), canonical_code(&BipolarOrientation::one_edge()));
        let (double, _) = phi(&perm("2 1")).unwrap();
        assert_eq!(double.vertex_count(), 2);
        assert_eq!(double.pole_degrees(), (2, 2));
        let (path, _) = phi(&perm("1 2")).unwrap();
        assert_eq!(path.vertex_count(), 3);
        assert_ne!(canonical_code(&double), canonical_code(&path));
    }

    #[test]
    fn figure_orientation() {
        let (o, _) = phi(&perm(FIGURE)).unwrap();
        assert!(o.is_valid());
        assert_eq!((o.edge_count(), o.vertex_count(), o.inner_face_count()), (10, 7, 4));
        let b = o.borders();
        assert_eq!((b.left_outer_degree(), b.right_outer_degree()), (3, 2));
        assert_eq!(o.pole_degrees(), (3, 3));
        assert_eq!(psi(&o).unwrap().0, perm(FIGURE));
    }

    #[test]
    fn non_baxter_is_rejected() {
        assert_eq!(phi(&perm("2 4 1 3")).unwrap_err(), BijectionError::NotBaxter(BaxterWitness { i: 1, j: 2, k: 4 }));
    }

    #[test]
    fn double_edge_reads_back_as_descent() {
        let o = BipolarOrientation::new(PlaneMap::new(vec![vec![0, 2], vec![3, 1]], 0).unwrap(), 0, 1);
        assert_eq!(psi(&o).unwrap().0, perm("2 1"));
        assert_eq!(psi(&BipolarOrientation::one_edge()).unwrap().0, perm("1"));
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=6 {
            for p in Permutation::all(n).filter(Permutation::is_baxter) {
                let (o, corr) = phi(&p).unwrap();
                let (q, back) = psi(&o).unwrap();
                assert_eq!(q, p);
                assert_eq!(back, corr);
            }
        }
    }

    #[test]
    fn correspondence_on_figure() {
        let p = perm(FIGURE);
        let (o, corr) = phi(&p).unwrap();
        assert!(correspondence_check(&p, &o, &corr));
        let (o1, c1) = phi(&perm("1")).unwrap();
        assert!(correspondence_check(&perm("1"), &o1, &c1));
    }
}
