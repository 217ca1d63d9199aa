//! Rotation-list surgery shared by the generating trees and the rooted-map
//! operations. Every function returns a fresh, densely numbered map together
//! with the old-to-new vertex and dart renumbering.

use super::{Dart, PlaneMap};

pub(crate) struct Relabel {
    pub map: PlaneMap,
    pub vertex: Vec<Option<usize>>,
    pub dart: Vec<Option<Dart>>,
}

/// Drops the darts of `removed_edges`, deletes vertices whose rotation became
/// empty and renumbers the survivors in their previous order.
fn compact(rotations: Vec<Vec<Dart>>, removed_edges: &[usize], outer: Dart, darts: usize) -> Relabel {
    let mut dart = vec![None; darts];
    let mut next = 0;
    for e in 0..darts / 2 {
        if !removed_edges.contains(&e) {
            dart[2 * e] = Some(next);
            dart[2 * e + 1] = Some(next + 1);
            next += 2;
        }
    }
    let mut vertex = vec![None; rotations.len()];
    let mut new_rot = Vec::new();
    for (v, rot) in rotations.into_iter().enumerate() {
        let r: Vec<Dart> = rot.into_iter().filter_map(|d| dart[d]).collect();
        if !r.is_empty() {
            vertex[v] = Some(new_rot.len());
            new_rot.push(r);
        }
    }
    let outer = dart[outer].expect("outer dart was removed");
    Relabel { map: PlaneMap::new(new_rot, outer).expect("surgery keeps rotations consistent"), vertex, dart }
}

/// Removes edge `e`. `outer` must be a dart that survives and whose left face
/// is the outer face after the deletion.
pub(crate) fn delete_edge(map: &PlaneMap, e: usize, outer: Dart) -> Relabel {
    let darts = map.dart_count();
    let (rotations, _) = map.clone().into_rotations();
    compact(rotations, &[e], outer, darts)
}

/// Contracts edge `e`, merging its second endpoint into its first unless
/// `keep_second` is set. The merged rotation is spliced at the contracted
/// darts.
pub(crate) fn contract_edge(map: &PlaneMap, e: usize, keep_second: bool, outer: Dart) -> Relabel {
    let (keep_dart, gone_dart) = if keep_second { (2 * e + 1, 2 * e) } else { (2 * e, 2 * e + 1) };
    let keep = map.vertex(keep_dart);
    let gone = map.vertex(gone_dart);
    assert_ne!(keep, gone, "cannot contract a loop");
    let spliced: Vec<Dart> = map.rotation_from(gone_dart).into_iter().skip(1).collect();
    let darts = map.dart_count();
    let (mut rotations, _) = map.clone().into_rotations();
    let at = rotations[keep].iter().position(|&d| d == keep_dart).unwrap();
    rotations[keep].splice(at..=at, spliced);
    rotations[gone].clear();
    compact(rotations, &[e], outer, darts)
}

/// Adds a new edge with first dart inserted at `tail` just before
/// `tail_before` (or at the end of an empty list) and second dart inserted at
/// `head` just before `head_before`. Passing `None` appends. Returns the
/// new edge index.
pub(crate) fn insert_edge(
    rotations: &mut [Vec<Dart>],
    edge_count: usize,
    tail: usize,
    tail_before: Option<Dart>,
    head: usize,
    head_before: Option<Dart>,
) -> usize {
    let e = edge_count;
    let put = |rot: &mut Vec<Dart>, before: Option<Dart>, d: Dart| match before {
        Some(b) => {
            let at = rot.iter().position(|&x| x == b).expect("anchor dart not at vertex");
            rot.insert(at, d);
        }
        None => rot.push(d),
    };
    put(&mut rotations[tail], tail_before, 2 * e);
    put(&mut rotations[head], head_before, 2 * e + 1);
    e
}

