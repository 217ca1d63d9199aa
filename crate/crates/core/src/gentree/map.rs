use thiserror::Error;

use crate::planar::surgery::{contract_edge, delete_edge};
use crate::planar::{edge_of, is_separable, twin, RootedMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapParentError {
    #[error("a map with {0} edges has no parent in the map tree")]
    TooSmall(usize),
    #[error("the map is separable")]
    Separable,
}

/// Parent in the tree of rooted non-separable maps. The edge `e` preceding
/// the root around the outer face is contracted when deleting it would
/// leave a separable map, and deleted otherwise.
pub fn map_parent(m: &RootedMap) -> Result<RootedMap, MapParentError> {
    if m.edge_count() < 3 {
        return Err(MapParentError::TooSmall(m.edge_count()));
    }
    if is_separable(&m.map) {
        return Err(MapParentError::Separable);
    }
    let head = twin(m.root);
    // dart of e at the sink
    let at_sink = m.map.prev_cw(head);
    let e = edge_of(at_sink);
    let deleted = delete_edge(&m.map, e, head);
    let r = if is_separable(&deleted.map) {
        contract_edge(&m.map, e, at_sink % 2 == 1, head)
    } else {
        deleted
    };
    let root = r.dart[m.root].expect("root survives");
    Ok(RootedMap::new(r.map, root))
}
