use super::{twin, BipolarOrientation, Dart, PlaneMap, RootedMap};

/// Isomorphism-complete encoding of an embedded map with a distinguished
/// start dart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(pub Vec<u8>);

/// Objects with a canonical start dart.
pub trait Canonical {
    fn code(&self) -> CanonicalCode;
}

/// Breadth-first order of all darts reached from `start` through
/// clockwise-successor and twin moves.
fn visit_order(map: &PlaneMap, start: Dart) -> (Vec<Dart>, Vec<usize>) {
    let mut label = vec![usize::MAX; map.dart_count()];
    let mut order = Vec::with_capacity(map.dart_count());
    label[start] = 0;
    order.push(start);
    let mut head = 0;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for next in [map.next_cw(d), twin(d)] {
            if label[next] == usize::MAX {
                label[next] = order.len();
                order.push(next);
            }
        }
    }
    (order, label)
}

fn encode(map: &PlaneMap, start: Dart, with_direction: bool) -> CanonicalCode {
    let (order, label) = visit_order(map, start);
    let mut bytes = Vec::with_capacity(4 + order.len() * 9);
    bytes.extend_from_slice(&(order.len() as u32).to_le_bytes());
    for &d in &order {
        bytes.extend_from_slice(&(label[map.next_cw(d)] as u32).to_le_bytes());
        bytes.extend_from_slice(&(label[twin(d)] as u32).to_le_bytes());
        if with_direction {
            bytes.push((d % 2) as u8);
        }
    }
    CanonicalCode(bytes)
}

impl Canonical for BipolarOrientation {
    fn code(&self) -> CanonicalCode {
        encode(&self.map, self.start_dart(), true)
    }
}

impl Canonical for RootedMap {
    fn code(&self) -> CanonicalCode {
        encode(&self.map, self.root, false)
    }
}

pub fn canonical_code<T: Canonical>(object: &T) -> CanonicalCode {
    object.code()
}

/// For isomorphic orientations, the edge of `b` matching each edge of `a`.
pub fn dart_correspondence(a: &BipolarOrientation, b: &BipolarOrientation) -> Option<Vec<usize>> {
    if a.code() != b.code() {
        return None;
    }
    let (oa, _) = visit_order(&a.map, a.start_dart());
    let (ob, _) = visit_order(&b.map, b.start_dart());
    let mut edges = vec![usize::MAX; a.edge_count()];
    for (&da, &db) in oa.iter().zip(&ob) {
        edges[da / 2] = db / 2;
    }
    Some(edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_edge_code_is_stable() {
        let a = BipolarOrientation::one_edge();
        assert_eq!(canonical_code(&a), canonical_code(&a.clone()));
    }

    #[test]
    fn relabelled_maps_share_a_code() {
        // path s -> v -> t with the two edges numbered both ways
        let p1 = BipolarOrientation::new(PlaneMap::new(vec![vec![0], vec![2, 1], vec![3]], 0).unwrap(), 0, 2);
        let p2 = BipolarOrientation::new(PlaneMap::new(vec![vec![1], vec![2], vec![0, 3]], 2).unwrap(), 1, 0);
        assert!(p1.is_valid() && p2.is_valid());
        assert_eq!(p1.code(), p2.code());
        assert_eq!(dart_correspondence(&p1, &p2), Some(vec![1, 0]));
        let double = BipolarOrientation::new(PlaneMap::new(vec![vec![0, 2], vec![3, 1]], 0).unwrap(), 0, 1);
        assert_ne!(p1.code(), double.code());
        assert_eq!(dart_correspondence(&p1, &double), None);
    }
}
