use std::collections::VecDeque;
use std::fmt;

use super::{edge_of, twin, Dart, Faces, PlaneMap};

/// A plane map with two distinguished vertices on its outer face. Edge
/// directions (dart parity) carry no meaning here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipolarMap {
    pub map: PlaneMap,
    pub source: usize,
    pub sink: usize,
}

/// A plane bipolar orientation: every edge is directed from its even dart to
/// its odd dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipolarOrientation {
    pub map: PlaneMap,
    pub source: usize,
    pub sink: usize,
}

/// One broken invariant of a candidate bipolar orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    PoleOutOfRange { vertex: usize },
    PolesCoincide { vertex: usize },
    Disconnected,
    NotPlanar { euler: isize },
    Loop { edge: usize },
    SourceHasIncoming { vertex: usize, edge: usize },
    SinkHasOutgoing { vertex: usize, edge: usize },
    ExtraSource { vertex: usize },
    ExtraSink { vertex: usize },
    Cycle { vertex: usize },
    PoleOffOuterFace { vertex: usize },
    MixedRotation { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::PoleOutOfRange { vertex } => write!(f, "pole {vertex} is not a vertex"),
            Violation::PolesCoincide { vertex } => write!(f, "source and sink are both vertex {vertex}"),
            Violation::Disconnected => write!(f, "the underlying graph is disconnected"),
            Violation::NotPlanar { euler } => write!(f, "V - E + F = {euler}, expected 2"),
            Violation::Loop { edge } => write!(f, "edge {} is a loop", edge + 1),
            Violation::SourceHasIncoming { vertex, edge } => {
                write!(f, "source {vertex} has ingoing edge {}", edge + 1)
            }
            Violation::SinkHasOutgoing { vertex, edge } => {
                write!(f, "sink {vertex} has outgoing edge {}", edge + 1)
            }
            Violation::ExtraSource { vertex } => write!(f, "vertex {vertex} has no ingoing edge"),
            Violation::ExtraSink { vertex } => write!(f, "vertex {vertex} has no outgoing edge"),
            Violation::Cycle { vertex } => write!(f, "vertex {vertex} lies on a directed cycle"),
            Violation::PoleOffOuterFace { vertex } => write!(f, "pole {vertex} is not on the outer face"),
            Violation::MixedRotation { vertex } => {
                write!(f, "vertex {vertex}: outgoing and ingoing edges are not in two blocks")
            }
        }
    }
}

/// The two oriented source-to-sink paths bounding the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Borders {
    pub left_path: Vec<usize>,
    pub right_path: Vec<usize>,
    pub left_edges: Vec<usize>,
    pub right_edges: Vec<usize>,
}

impl Borders {
    pub fn left_outer_degree(&self) -> usize {
        self.left_edges.len()
    }

    pub fn right_outer_degree(&self) -> usize {
        self.right_edges.len()
    }
}

/// A bounded face seen as a small bipolar orientation. `left_vertices` and
/// `right_vertices` exclude the face's own poles and run from source to sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceInfo {
    pub face: usize,
    pub source: usize,
    pub sink: usize,
    pub left_vertices: Vec<usize>,
    pub right_vertices: Vec<usize>,
}

/// `(v1, v2, f1, f2)` certificate of a right- or left-oriented piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientedPiece {
    pub v1: usize,
    pub v2: usize,
    pub f1: usize,
    pub f2: usize,
}

impl BipolarMap {
    pub fn new(map: PlaneMap, source: usize, sink: usize) -> Self {
        BipolarMap { map, source, sink }
    }

    /// Orients the map by dart parity, as stored.
    pub fn as_orientation(&self) -> BipolarOrientation {
        BipolarOrientation { map: self.map.clone(), source: self.source, sink: self.sink }
    }
}

impl BipolarOrientation {
    pub fn new(map: PlaneMap, source: usize, sink: usize) -> Self {
        BipolarOrientation { map, source, sink }
    }

    /// The single edge `0 -> 1`.
    pub fn one_edge() -> Self {
        BipolarOrientation::new(PlaneMap::new(vec![vec![0], vec![1]], 0).unwrap(), 0, 1)
    }

    /// Validates and returns the orientation, or the list of violations.
    pub fn checked(map: PlaneMap, source: usize, sink: usize) -> Result<Self, Vec<Violation>> {
        let o = BipolarOrientation::new(map, source, sink);
        let v = o.validate();
        if v.is_empty() {
            Ok(o)
        } else {
            Err(v)
        }
    }

    pub fn underlying(&self) -> BipolarMap {
        BipolarMap::new(self.map.clone(), self.source, self.sink)
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn tail(&self, e: usize) -> usize {
        self.map.vertex(2 * e)
    }

    pub fn head(&self, e: usize) -> usize {
        self.map.vertex(2 * e + 1)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.map.rotation(v).iter().filter(|&&d| d % 2 == 0).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.map.rotation(v).iter().filter(|&&d| d % 2 == 1).count()
    }

    pub fn non_polar_count(&self) -> usize {
        self.vertex_count() - 2
    }

    pub fn validate(&self) -> Vec<Violation> {
        let m = &self.map;
        let n = m.vertex_count();
        let mut out = Vec::new();
        for pole in [self.source, self.sink] {
            if pole >= n {
                out.push(Violation::PoleOutOfRange { vertex: pole });
            }
        }
        if !out.is_empty() {
            return out;
        }
        if self.source == self.sink {
            out.push(Violation::PolesCoincide { vertex: self.source });
        }
        if !m.is_connected() {
            out.push(Violation::Disconnected);
        } else {
            let euler = m.euler_characteristic();
            if euler != 2 {
                out.push(Violation::NotPlanar { euler });
            }
        }
        for edge in m.loops() {
            out.push(Violation::Loop { edge });
        }
        for v in 0..n {
            let rot = m.rotation(v);
            if v == self.source {
                if let Some(&d) = rot.iter().find(|&&d| d % 2 == 1) {
                    out.push(Violation::SourceHasIncoming { vertex: v, edge: edge_of(d) });
                }
            } else if v == self.sink {
                if let Some(&d) = rot.iter().find(|&&d| d % 2 == 0) {
                    out.push(Violation::SinkHasOutgoing { vertex: v, edge: edge_of(d) });
                }
            } else {
                if self.in_degree(v) == 0 {
                    out.push(Violation::ExtraSource { vertex: v });
                }
                if self.out_degree(v) == 0 {
                    out.push(Violation::ExtraSink { vertex: v });
                }
                let switches = (0..rot.len()).filter(|&i| rot[i] % 2 != rot[(i + 1) % rot.len()] % 2).count();
                if switches > 2 {
                    out.push(Violation::MixedRotation { vertex: v });
                }
            }
        }
        if let Some(vertex) = self.cycle_vertex() {
            out.push(Violation::Cycle { vertex });
        }
        if m.dart_count() > 0 {
            let faces = m.faces();
            for pole in [self.source, self.sink] {
                if m.outer_dart_at(pole, &faces).is_none() {
                    out.push(Violation::PoleOffOuterFace { vertex: pole });
                }
            }
        }
        out
    }

    /// Some vertex left over by a topological sort, if the digraph has a
    /// directed cycle.
    fn cycle_vertex(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = vec![false; n];
        while let Some(v) = queue.pop_front() {
            removed[v] = true;
            for &d in self.map.rotation(v) {
                if d % 2 == 0 {
                    let w = self.map.vertex(twin(d));
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        queue.push_back(w);
                    }
                }
            }
        }
        removed.iter().position(|&r| !r)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The outgoing dart at the source whose left face is the outer face:
    /// the first edge of the left border.
    pub fn start_dart(&self) -> Dart {
        self.start_dart_with(&self.map.faces())
    }

    fn start_dart_with(&self, faces: &Faces) -> Dart {
        self.map.outer_dart_at(self.source, faces).expect("source is not on the outer face")
    }

    /// Dart at the sink whose left face is outer: the last edge of the right
    /// border, seen from the sink. Reading the sink's rotation clockwise from
    /// here lists its edges from right to left.
    pub fn sink_outer_dart(&self) -> Dart {
        let faces = self.map.faces();
        self.map.outer_dart_at(self.sink, &faces).expect("sink is not on the outer face")
    }

    pub fn borders(&self) -> Borders {
        let m = &self.map;
        let start = self.start_dart();
        let walk = m.face_walk(start);
        let split = walk.iter().position(|&d| m.vertex(twin(d)) == self.sink).expect("sink not on outer walk") + 1;
        let left_edges: Vec<usize> = walk[..split].iter().map(|&d| edge_of(d)).collect();
        let right_edges: Vec<usize> = walk[split..].iter().rev().map(|&d| edge_of(d)).collect();
        debug_assert!(walk[..split].iter().all(|d| d % 2 == 0));
        debug_assert!(walk[split..].iter().all(|d| d % 2 == 1));
        let path = |edges: &[usize]| {
            let mut p = vec![self.source];
            p.extend(edges.iter().map(|&e| self.head(e)));
            p
        };
        Borders { left_path: path(&left_edges), right_path: path(&right_edges), left_edges, right_edges }
    }

    /// `(source degree, sink degree)`.
    pub fn pole_degrees(&self) -> (usize, usize) {
        (self.map.degree(self.source), self.map.degree(self.sink))
    }

    pub fn inner_face_count(&self) -> usize {
        self.map.face_count() - 1
    }

    /// Left/right structure of every bounded face, in face-index order.
    pub fn faces(&self) -> Vec<FaceInfo> {
        let faces = self.map.faces();
        self.face_infos(&faces)
    }

    fn face_infos(&self, faces: &Faces) -> Vec<FaceInfo> {
        let m = &self.map;
        let mut out = Vec::new();
        for (id, walk) in faces.walks.iter().enumerate() {
            if id == faces.outer {
                continue;
            }
            let len = walk.len();
            // the walk keeps the face on its left: forward darts run along the
            // right side from the face's source to its sink
            let first = (0..len)
                .find(|&i| walk[i] % 2 == 0 && walk[(i + len - 1) % len] % 2 == 1)
                .expect("bounded face without two oriented sides");
            let rotated: Vec<Dart> = walk[first..].iter().chain(&walk[..first]).copied().collect();
            let split = rotated.iter().position(|&d| d % 2 == 1).expect("bounded face without a left side");
            debug_assert!(rotated[split..].iter().all(|d| d % 2 == 1));
            let source = m.vertex(rotated[0]);
            let sink = m.vertex(rotated[split]);
            let right_vertices = rotated[1..split].iter().map(|&d| m.vertex(d)).collect();
            let left_vertices = rotated[split + 1..].iter().rev().map(|&d| m.vertex(d)).collect();
            out.push(FaceInfo { face: id, source, sink, left_vertices, right_vertices });
        }
        out
    }

    /// Face on the right of a non-polar vertex: between its last outgoing and
    /// first ingoing edge in clockwise order.
    pub fn right_face(&self, v: usize) -> usize {
        let faces = self.map.faces();
        let first_in = self.first_incoming(v);
        faces.face_of[first_in]
    }

    /// Face on the left of a non-polar vertex.
    pub fn left_face(&self, v: usize) -> usize {
        let faces = self.map.faces();
        let rot = self.map.rotation(v);
        let first_out = (0..rot.len())
            .map(|i| rot[i])
            .find(|&d| d % 2 == 0 && self.map.prev_cw(d) % 2 == 1)
            .expect("vertex without both blocks");
        faces.face_of[first_out]
    }

    /// First ingoing dart in clockwise order at a non-polar vertex.
    pub fn first_incoming(&self, v: usize) -> Dart {
        self.map
            .rotation(v)
            .iter()
            .copied()
            .find(|&d| d % 2 == 1 && self.map.prev_cw(d).is_multiple_of(2))
            .expect("vertex without both blocks")
    }

    /// Last ingoing dart in clockwise order at a non-polar vertex.
    pub fn last_incoming(&self, v: usize) -> Dart {
        self.map
            .rotation(v)
            .iter()
            .copied()
            .find(|&d| d % 2 == 1 && self.map.next_cw(d).is_multiple_of(2))
            .expect("vertex without both blocks")
    }

    pub fn find_rops(&self) -> Vec<OrientedPiece> {
        self.find_pieces(true)
    }

    pub fn find_lops(&self) -> Vec<OrientedPiece> {
        self.find_pieces(false)
    }

    fn find_pieces(&self, right: bool) -> Vec<OrientedPiece> {
        let infos = self.faces();
        let mut out = Vec::new();
        for f1 in &infos {
            for f2 in &infos {
                if f1.face == f2.face {
                    continue;
                }
                let (side_f2, side_f1) = if right {
                    (&f2.left_vertices, &f1.right_vertices)
                } else {
                    (&f2.right_vertices, &f1.left_vertices)
                };
                let v1 = f1.source;
                let v2 = f2.sink;
                if side_f2.contains(&v1) && side_f1.contains(&v2) {
                    out.push(OrientedPiece { v1, v2, f1: f1.face, f2: f2.face });
                }
            }
        }
        out
    }

    pub fn mirror(&self) -> Self {
        BipolarOrientation::new(self.map.mirrored(), self.source, self.sink)
    }

    /// Flips every edge and swaps the poles.
    pub fn reverse_all(&self) -> Self {
        let flip = vec![true; self.edge_count()];
        BipolarOrientation::new(self.map.with_flipped_edges(&flip), self.sink, self.source)
    }

    /// The dual orientation. Dual edge `e*` keeps the index of `e`, crosses it
    /// from its right face to its left face, and the dual source sits in the
    /// outer region along the right border. Dual vertices: the source `0`,
    /// then bounded faces in face-index order, then the sink.
    pub fn dual(&self) -> Self {
        let m = &self.map;
        let faces = m.faces();
        let start = self.start_dart_with(&faces);
        let nf = faces.walks.len();
        let mut vertex_of_face = vec![usize::MAX; nf];
        let mut next = 1;
        for (f, slot) in vertex_of_face.iter_mut().enumerate() {
            if f != faces.outer {
                *slot = next;
                next += 1;
            }
        }
        let sink = next;
        let mut rotations = vec![Vec::new(); sink + 1];
        for (f, walk) in faces.walks.iter().enumerate() {
            if f == faces.outer {
                continue;
            }
            rotations[vertex_of_face[f]] = walk.iter().rev().map(|&d| twin(d)).collect();
        }
        let outer_walk = m.face_walk(start);
        let split = outer_walk.iter().position(|&d| m.vertex(twin(d)) == self.sink).unwrap() + 1;
        rotations[sink] = outer_walk[..split].iter().rev().map(|&d| twin(d)).collect();
        rotations[0] = outer_walk[split..].iter().rev().map(|&d| twin(d)).collect();
        let map = PlaneMap::new(rotations, start).expect("dual rotation system");
        BipolarOrientation::new(map, 0, sink)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_edge() -> BipolarOrientation {
        BipolarOrientation::new(PlaneMap::new(vec![vec![0, 2], vec![3, 1]], 0).unwrap(), 0, 1)
    }

    fn path2() -> BipolarOrientation {
        BipolarOrientation::new(PlaneMap::new(vec![vec![0], vec![2, 1], vec![3]], 0).unwrap(), 0, 2)
    }

    #[test]
    fn one_edge_is_valid() {
        let o = BipolarOrientation::one_edge();
        assert!(o.validate().is_empty());
        let b = o.borders();
        assert_eq!((b.left_outer_degree(), b.right_outer_degree()), (1, 1));
        assert_eq!(o.pole_degrees(), (1, 1));
        assert!(o.faces().is_empty());
        assert!(o.find_rops().is_empty() && o.find_lops().is_empty());
    }

    #[test]
    fn reversed_edge_is_reported() {
        let m = PlaneMap::new(vec![vec![1], vec![0]], 1).unwrap();
        let o = BipolarOrientation::new(m, 0, 1);
        let v = o.validate();
        assert!(v.contains(&Violation::SourceHasIncoming { vertex: 0, edge: 0 }));
        assert!(v.contains(&Violation::SinkHasOutgoing { vertex: 1, edge: 0 }));
        assert_eq!(v[0].to_string(), "source 0 has ingoing edge 1");
    }

    #[test]
    fn double_edge_structure() {
        let o = double_edge();
        assert!(o.is_valid());
        let b = o.borders();
        assert_eq!(b.left_edges, vec![0]);
        assert_eq!(b.right_edges, vec![1]);
        assert_eq!(o.pole_degrees(), (2, 2));
        let f = o.faces();
        assert_eq!(f.len(), 1);
        assert!(f[0].left_vertices.is_empty() && f[0].right_vertices.is_empty());
        assert_eq!((f[0].source, f[0].sink), (0, 1));
    }

    #[test]
    fn double_edge_dual_is_path() {
        let d = double_edge().dual();
        assert!(d.is_valid(), "{:?}", d.validate());
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.borders().left_outer_degree(), 2);
        assert_eq!(d.pole_degrees(), (1, 1));
        let dd = d.dual();
        assert!(dd.is_valid());
        assert_eq!(dd.pole_degrees(), (2, 2));
    }

    #[test]
    fn one_edge_is_self_dual() {
        let d = BipolarOrientation::one_edge().dual();
        assert!(d.is_valid());
        assert_eq!(d.edge_count(), 1);
        assert_eq!(d.vertex_count(), 2);
    }

    #[test]
    fn mirror_and_reverse_are_involutions() {
        for o in [double_edge(), path2(), BipolarOrientation::one_edge()] {
            assert!(o.mirror().is_valid());
            assert_eq!(o.mirror().mirror(), o);
            assert!(o.reverse_all().is_valid());
            assert_eq!(o.reverse_all().reverse_all(), o);
        }
    }

    #[test]
    fn mixed_rotation_detected() {
        // vertex 1 has clockwise rotation out, in, out, in
        // s=0 -> 1 twice on the left and right... build 4 edges around a middle vertex
        // edges: 0: s->v, 1: v->t, 2: s->v, 3: v->t with v rotation [2(out e1), 1(in e0), 6(out e3), 5(in e2)]
        let m = PlaneMap::new(vec![vec![0, 4], vec![2, 1, 6, 5], vec![7, 3]], 0).unwrap();
        let o = BipolarOrientation::new(m, 0, 2);
        assert!(o.validate().iter().any(|v| matches!(v, Violation::MixedRotation { vertex: 1 })));
    }
}
