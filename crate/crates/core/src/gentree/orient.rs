use super::{insertion_sequence, out_of_range, InsertionSeq, LabelPair, Side, Step, StepError};
use crate::perm::Permutation;
use crate::planar::surgery::{contract_edge, delete_edge, insert_edge};
use crate::planar::{BipolarOrientation, PlaneMap};

/// `(left outer degree, sink degree)`.
pub fn orient_labels(o: &BipolarOrientation) -> LabelPair {
    LabelPair { i: o.borders().left_outer_degree(), j: o.pole_degrees().1 }
}

/// `L_k` adds an edge from the `k`-th vertex of the left border to the sink
/// through the outer face. `R_k` splits the sink, moving its `k`-th to last
/// ingoing edges (counted from the right) onto a new vertex joined to the
/// sink. Either way the new edge becomes the last edge of the left border.
pub fn orient_insert(o: &BipolarOrientation, step: Step) -> Result<BipolarOrientation, StepError> {
    let labels = orient_labels(o);
    if !labels.allows(step) {
        return Err(out_of_range(labels, step));
    }
    let m = &o.map;
    let e = m.edge_count();
    let sink_right = o.sink_outer_dart();
    let (mut rotations, outer) = m.clone().into_rotations();
    let (map, sink) = match step.side {
        Side::L => {
            let b = o.borders();
            let v = b.left_path[step.k - 1];
            let along = 2 * b.left_edges[step.k - 1];
            // both new darts go into the outer corners, which sit just
            // before the outer darts in clockwise order
            insert_edge(&mut rotations, e, v, Some(along), o.sink, Some(sink_right));
            (PlaneMap::new(rotations, 2 * e).expect("L insertion"), o.sink)
        }
        Side::R => {
            let incoming = m.rotation_from(sink_right);
            let mut moved: Vec<usize> = incoming[step.k - 1..].to_vec();
            moved.push(2 * e);
            let mut kept: Vec<usize> = incoming[..step.k - 1].to_vec();
            kept.push(2 * e + 1);
            rotations[o.sink] = kept;
            rotations.push(moved);
            (PlaneMap::new(rotations, outer).expect("R insertion"), o.sink)
        }
    };
    let out = BipolarOrientation::new(map, o.source, sink);
    debug_assert!(out.is_valid(), "{step}: {:?}", out.validate());
    Ok(out)
}

/// Removes the last edge of the left border: contracted when its start has
/// outdegree 1, deleted otherwise.
pub fn orient_parent(o: &BipolarOrientation) -> Result<BipolarOrientation, StepError> {
    if o.edge_count() < 2 {
        return Err(StepError::NoParent(o.edge_count()));
    }
    let b = o.borders();
    let e = *b.left_edges.last().unwrap();
    let v = o.tail(e);
    let start = o.start_dart();
    let r = if o.out_degree(v) == 1 {
        contract_edge(&o.map, e, true, start)
    } else {
        let outer = if start == 2 * e { o.map.next_cw(start) } else { start };
        delete_edge(&o.map, e, outer)
    };
    let out = BipolarOrientation::new(r.map, r.vertex[o.source].unwrap(), r.vertex[o.sink].unwrap());
    debug_assert!(out.is_valid(), "{:?}", out.validate());
    Ok(out)
}

pub fn replay_orientation(seq: &InsertionSeq) -> Result<BipolarOrientation, StepError> {
    seq.steps().iter().try_fold(BipolarOrientation::one_edge(), |o, &s| orient_insert(&o, s))
}

/// The canonical bijection: replays the permutation's path in the Baxter
/// tree inside the orientation tree.
pub fn lambda(p: &Permutation) -> BipolarOrientation {
    replay_orientation(&insertion_sequence(p)).expect("both trees share the rewriting rule")
}
