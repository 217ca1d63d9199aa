use super::surgery::{delete_edge, insert_edge};
use super::{edge_of, twin, BipolarMap, Dart, PlaneMap};

/// A plane map with a root dart; the outer face lies on the right of the
/// root edge, which runs from its even dart to its odd dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedMap {
    pub map: PlaneMap,
    pub root: Dart,
}

impl RootedMap {
    pub fn new(map: PlaneMap, root: Dart) -> Self {
        RootedMap { map, root }
    }

    pub fn root_edge(&self) -> usize {
        edge_of(self.root)
    }

    pub fn source(&self) -> usize {
        self.map.vertex(self.root)
    }

    pub fn sink(&self) -> usize {
        self.map.vertex(twin(self.root))
    }

    pub fn edge_count(&self) -> usize {
        self.map.edge_count()
    }

    /// Degree of the face on the right of the root edge (the outer face).
    pub fn right_face_degree(&self) -> usize {
        self.map.face_walk(twin(self.root)).len()
    }

    /// Degree of the face on the left of the root edge.
    pub fn left_face_degree(&self) -> usize {
        self.map.face_walk(self.root).len()
    }

    /// Adds a root edge from the source to the sink through the outer face,
    /// keeping the outer face on its right.
    pub fn from_bipolar(m: &BipolarMap) -> RootedMap {
        let map = &m.map;
        let faces = map.faces();
        let at_source = map.outer_dart_at(m.source, &faces).expect("source is not on the outer face");
        let at_sink = map.outer_dart_at(m.sink, &faces).expect("sink is not on the outer face");
        let (mut rotations, _) = map.clone().into_rotations();
        // both darts go into the unique outer corner at their vertex, which
        // precedes the outer dart in clockwise order
        let e = insert_edge(&mut rotations, map.edge_count(), m.source, Some(at_source), m.sink, Some(at_sink));
        let map = PlaneMap::new(rotations, 2 * e + 1).expect("root insertion");
        RootedMap { map, root: 2 * e }
    }

    /// Deletes the root edge; its endpoints become the poles.
    pub fn to_bipolar(&self) -> BipolarMap {
        let e = self.root_edge();
        let (source, sink) = (self.source(), self.sink());
        let outer = self.map.next_cw(self.root);
        assert_ne!(outer, self.root, "root edge is the only edge at the source");
        let r = delete_edge(&self.map, e, outer);
        BipolarMap::new(r.map, r.vertex[source].unwrap(), r.vertex[sink].unwrap())
    }
}

impl BipolarMap {
    pub fn add_root_edge(&self) -> RootedMap {
        RootedMap::from_bipolar(self)
    }
}

impl RootedMap {
    pub fn remove_root_edge(&self) -> BipolarMap {
        self.to_bipolar()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{canonical_code, BipolarOrientation};

    #[test]
    fn one_edge_gains_a_parallel_root() {
        let m = BipolarOrientation::one_edge().underlying();
        let r = m.add_root_edge();
        assert_eq!(r.map.vertex_count(), 2);
        assert_eq!(r.edge_count(), 2);
        assert_eq!(r.map.euler_characteristic(), 2);
        assert_eq!(r.right_face_degree(), 2);
        assert_eq!(r.left_face_degree(), 2);
        let back = r.remove_root_edge();
        assert_eq!(back, m);
    }

    #[test]
    fn round_trip_on_path() {
        let o = BipolarOrientation::new(PlaneMap::new(vec![vec![0], vec![2, 1], vec![3]], 0).unwrap(), 0, 2);
        let r = o.underlying().add_root_edge();
        assert_eq!(r.map.face_count(), 2);
        assert_eq!(r.right_face_degree(), 3);
        let back = r.remove_root_edge();
        assert_eq!(canonical_code(&back.as_orientation()), canonical_code(&o));
    }
}
