//! Embedded multigraphs stored as rotation systems.
//!
//! Every edge `e` (0-based internally, 1-based in text formats) owns two
//! darts: `2e` at its first end and `2e + 1` at its second end. In an
//! orientation the first end is the tail. Each vertex lists its darts in
//! **clockwise** order, with the y axis pointing up. This is the only
//! rotation convention in the crate; geometric constructions convert into it.
//!
//! The face on the left of dart `d` (walking away from its vertex) is traced
//! by `d -> next_cw(twin(d))`.

mod code;
mod enumerate;
mod format;
mod orientation;
mod rooted;
mod separable;
mod sp;
pub(crate) mod surgery;

use thiserror::Error;

pub use code::{canonical_code, dart_correspondence, CanonicalCode};
pub use enumerate::{enumerate_bipolar_orientations, TooManyEdges, DEFAULT_MAX_BRUTE_EDGES};
pub use format::{parse_map, write_dot, write_map, MapParseError};
pub use orientation::{BipolarMap, BipolarOrientation, Borders, FaceInfo, OrientedPiece, Violation};
pub use rooted::RootedMap;
pub use separable::is_separable;
pub use sp::{sp_decompose, SpFailure, SpTree};

pub type Dart = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> usize {
    d >> 1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("dart {0} appears in no rotation list")]
    MissingDart(Dart),
    #[error("dart {0} appears more than once in the rotation lists")]
    RepeatedDart(Dart),
    #[error("dart {0} does not exist (the map has {1} darts)")]
    UnknownDart(Dart, usize),
    #[error("outer dart {0} does not exist")]
    BadOuterDart(Dart),
    #[error("the map has no vertices")]
    NoVertices,
}

/// Rotation system of a connected plane multigraph with a designated outer
/// face, given by one dart whose left face is the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMap {
    rotations: Vec<Vec<Dart>>,
    outer: Dart,
    vertex_of: Vec<usize>,
    position: Vec<usize>,
}

/// Face orbits of a map, indexed in order of their smallest dart.
#[derive(Debug, Clone)]
pub struct Faces {
    pub walks: Vec<Vec<Dart>>,
    pub face_of: Vec<usize>,
    pub outer: usize,
}

impl PlaneMap {
    pub fn new(rotations: Vec<Vec<Dart>>, outer: Dart) -> Result<Self, MapError> {
        if rotations.is_empty() {
            return Err(MapError::NoVertices);
        }
        let darts: usize = rotations.iter().map(Vec::len).sum();
        let darts = darts + darts % 2;
        let mut vertex_of = vec![usize::MAX; darts];
        let mut position = vec![usize::MAX; darts];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(MapError::UnknownDart(d, darts));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(MapError::RepeatedDart(d));
                }
                vertex_of[d] = v;
                position[d] = i;
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(MapError::MissingDart(d));
        }
        if darts > 0 && outer >= darts {
            return Err(MapError::BadOuterDart(outer));
        }
        Ok(PlaneMap { rotations, outer, vertex_of, position })
    }

    /// The map with one vertex and no edges.
    pub fn point() -> Self {
        PlaneMap::new(vec![vec![]], 0).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_of.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer
    }

    pub fn vertex(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Endpoints `(first, second)` of edge `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.vertex_of[2 * e], self.vertex_of[2 * e + 1])
    }

    pub fn next_cw(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.vertex_of[d]];
        rot[(self.position[d] + 1) % rot.len()]
    }

    pub fn prev_cw(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.vertex_of[d]];
        rot[(self.position[d] + rot.len() - 1) % rot.len()]
    }

    /// Successor of `d` along the boundary of the face on its left.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.next_cw(twin(d))
    }

    pub fn face_walk(&self, start: Dart) -> Vec<Dart> {
        let mut walk = vec![start];
        let mut d = self.face_next(start);
        while d != start {
            walk.push(d);
            d = self.face_next(d);
        }
        walk
    }

    pub fn faces(&self) -> Faces {
        let mut face_of = vec![usize::MAX; self.dart_count()];
        let mut walks = Vec::new();
        for d in 0..self.dart_count() {
            if face_of[d] == usize::MAX {
                let walk = self.face_walk(d);
                for &x in &walk {
                    face_of[x] = walks.len();
                }
                walks.push(walk);
            }
        }
        let outer = if self.dart_count() == 0 { 0 } else { face_of[self.outer] };
        if walks.is_empty() {
            walks.push(Vec::new());
        }
        Faces { walks, face_of, outer }
    }

    pub fn face_count(&self) -> usize {
        if self.dart_count() == 0 {
            1
        } else {
            self.faces().walks.len()
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in &self.rotations[v] {
                let w = self.vertex_of[twin(d)];
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// `V - E + F`, which equals 2 exactly for connected genus-0 embeddings.
    pub fn euler_characteristic(&self) -> isize {
        self.vertex_count() as isize - self.edge_count() as isize + self.face_count() as isize
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.edge_count()).filter(|&e| self.vertex_of[2 * e] == self.vertex_of[2 * e + 1]).collect()
    }

    /// Rotation at `v` read clockwise starting from `first`.
    pub fn rotation_from(&self, first: Dart) -> Vec<Dart> {
        let v = self.vertex_of[first];
        let rot = &self.rotations[v];
        let p = self.position[first];
        rot[p..].iter().chain(&rot[..p]).copied().collect()
    }

    /// A dart at `v` whose left face is the outer face, if `v` touches it.
    pub fn outer_dart_at(&self, v: usize, faces: &Faces) -> Option<Dart> {
        self.rotations[v].iter().copied().find(|&d| faces.face_of[d] == faces.outer)
    }

    pub(crate) fn into_rotations(self) -> (Vec<Vec<Dart>>, Dart) {
        (self.rotations, self.outer)
    }

    /// Reverses every rotation; the outer face is carried along.
    pub fn mirrored(&self) -> PlaneMap {
        let rotations = self.rotations.iter().map(|r| r.iter().rev().copied().collect()).collect();
        PlaneMap::new(rotations, twin(self.outer)).unwrap()
    }

    /// Swaps the two darts of every edge listed in `flip`.
    pub fn with_flipped_edges(&self, flip: &[bool]) -> PlaneMap {
        let swap = |d: Dart| if flip[edge_of(d)] { twin(d) } else { d };
        let rotations = self.rotations.iter().map(|r| r.iter().map(|&d| swap(d)).collect()).collect();
        PlaneMap::new(rotations, swap(self.outer)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two vertices joined by two edges, edge 0 on the left.
    pub(crate) fn double_edge() -> PlaneMap {
        PlaneMap::new(vec![vec![0, 2], vec![3, 1]], 0).unwrap()
    }

    #[test]
    fn structural_checks() {
        assert_eq!(PlaneMap::new(vec![vec![0], vec![0]], 0), Err(MapError::RepeatedDart(0)));
        assert_eq!(PlaneMap::new(vec![vec![0, 2], vec![1]], 0), Err(MapError::MissingDart(3)));
        assert_eq!(PlaneMap::new(vec![], 0), Err(MapError::NoVertices));
        assert_eq!(PlaneMap::new(vec![vec![0], vec![1]], 7), Err(MapError::BadOuterDart(7)));
    }

    #[test]
    fn faces_of_double_edge() {
        let m = double_edge();
        let f = m.faces();
        assert_eq!(f.walks.len(), 2);
        assert_eq!(f.face_of[0], f.face_of[3]);
        assert_eq!(f.face_of[2], f.face_of[1]);
        assert_eq!(f.outer, f.face_of[0]);
        assert_eq!(m.euler_characteristic(), 2);
    }

    #[test]
    fn triangle_euler() {
        // s=0, v=1, t=2; edges 0: s-v, 1: v-t, 2: s-t drawn on the right
        let m = PlaneMap::new(vec![vec![0, 4], vec![2, 1], vec![5, 3]], 0).unwrap();
        assert!(m.is_connected());
        assert_eq!(m.face_count(), 2);
        assert_eq!(m.euler_characteristic(), 2);
        let torus_like = PlaneMap::new(vec![vec![0, 2, 1, 3]], 0).unwrap();
        assert_ne!(torus_like.euler_characteristic(), 2);
    }

    #[test]
    fn mirror_keeps_outer_face() {
        let m = double_edge();
        let mm = m.mirrored();
        let f = mm.faces();
        // the mirrored outer face still contains both darts of edge 0's side
        assert_eq!(f.walks[f.outer].len(), 2);
        assert_eq!(mm.mirrored(), m);
    }
}
