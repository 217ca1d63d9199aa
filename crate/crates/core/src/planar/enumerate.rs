use thiserror::Error;

use super::{BipolarMap, BipolarOrientation};

pub const DEFAULT_MAX_BRUTE_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute-force enumeration over {edges} edges exceeds the limit of {limit}")]
pub struct TooManyEdges {
    pub edges: usize,
    pub limit: usize,
}

/// Every bipolar orientation of `m` with poles `m.source`, `m.sink`, found by
/// trying all `2^E` edge directions.
pub fn enumerate_bipolar_orientations(m: &BipolarMap, max_edges: usize) -> Result<Vec<BipolarOrientation>, TooManyEdges> {
    let edges = m.map.edge_count();
    if edges > max_edges {
        return Err(TooManyEdges { edges, limit: max_edges });
    }
    let mut out = Vec::new();
    let mut flip = vec![false; edges];
    for mask in 0u64..(1u64 << edges) {
        for (e, f) in flip.iter_mut().enumerate() {
            *f = mask >> e & 1 == 1;
        }
        let o = BipolarOrientation::new(m.map.with_flipped_edges(&flip), m.source, m.sink);
        if o.is_valid() {
            out.push(o);
        }
    }
    Ok(out)
}
