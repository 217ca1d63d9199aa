use super::{out_of_range, InsertionSeq, LabelPair, Side, Step, StepError};
use crate::perm::Permutation;

/// `(lr-maxima, rl-maxima)`.
pub fn perm_labels(p: &Permutation) -> LabelPair {
    LabelPair { i: p.lr_maxima_positions().len(), j: p.rl_maxima_positions().len() }
}

/// `L_k` puts `n + 1` just before the `k`-th lr-maximum counted from the
/// left; `R_k` puts it just after the `k`-th rl-maximum counted from the
/// right.
pub fn perm_insert(p: &Permutation, step: Step) -> Result<Permutation, StepError> {
    let (positions, offset) = match step.side {
        Side::L => (p.lr_maxima_positions(), 0),
        Side::R => (p.rl_maxima_positions(), 1),
    };
    let at = positions.get(step.k.wrapping_sub(1)).ok_or_else(|| out_of_range(perm_labels(p), step))?;
    Ok(p.with_max_at(at + offset))
}

/// Deletes the largest value.
pub fn perm_parent(p: &Permutation) -> Result<Permutation, StepError> {
    if p.len() < 2 {
        return Err(StepError::NoParent(p.len()));
    }
    Ok(p.without_max())
}

/// The step leading from `perm_parent(p)` to `p`.
fn last_step(p: &Permutation) -> Step {
    let n = p.len();
    let pos = p.position_of(n);
    let parent = p.without_max();
    // the entry after n sits at position `pos` of the parent
    if let Some(k) = parent.lr_maxima_positions().iter().position(|&q| q == pos) {
        return Step { side: Side::L, k: k + 1 };
    }
    let k = parent.rl_maxima_positions().iter().position(|&q| q + 1 == pos).expect("parent of a Baxter permutation");
    Step { side: Side::R, k: k + 1 }
}

/// The unique path from `1` to `p` in the Baxter tree.
pub fn insertion_sequence(p: &Permutation) -> InsertionSeq {
    let mut steps = Vec::with_capacity(p.len().saturating_sub(1));
    let mut cur = p.clone();
    while cur.len() > 1 {
        steps.push(last_step(&cur));
        cur = cur.without_max();
    }
    steps.reverse();
    InsertionSeq(steps)
}

pub fn replay_permutation(seq: &InsertionSeq) -> Result<Permutation, StepError> {
    seq.steps().iter().try_fold(Permutation::identity(1), |p, &s| perm_insert(&p, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn root_children() {
        let one = perm("1");
        assert_eq!(perm_insert(&one, Step { side: Side::L, k: 1 }).unwrap(), perm("2 1"));
        assert_eq!(perm_insert(&one, Step { side: Side::R, k: 1 }).unwrap(), perm("1 2"));
        assert!(perm_insert(&one, Step { side: Side::R, k: 2 }).is_err());
    }

    #[test]
    fn parents() {
        assert_eq!(perm_parent(&perm("2 1")).unwrap(), perm("1"));
        assert_eq!(perm_parent(&perm("5 3 4 9 7 8 10 6 1 2")).unwrap(), perm("5 3 4 9 7 8 6 1 2"));
        assert!(perm_parent(&perm("1")).is_err());
    }

    #[test]
    fn sequences() {
        assert!(insertion_sequence(&perm("1")).is_empty());
        assert_eq!(insertion_sequence(&perm("2 1")).to_string(), "L1");
        let p = perm("5 3 4 9 7 8 10 6 1 2");
        let seq = insertion_sequence(&p);
        assert_eq!(replay_permutation(&seq).unwrap(), p);
        assert_eq!(replay_permutation(&seq.swapped()).unwrap(), p.reverse());
    }

    #[test]
    fn labels_follow_the_rule() {
        for n in 1..=6 {
            for p in Permutation::all(n).filter(Permutation::is_baxter) {
                let l = perm_labels(&p);
                for c in 0..l.child_count() {
                    let step = l.child_step(c);
                    let child = perm_insert(&p, step).unwrap();
                    assert!(child.is_baxter());
                    assert_eq!(Some(perm_labels(&child)), l.child(step));
                    assert_eq!(perm_parent(&child).unwrap(), p);
                    assert_eq!(last_step(&child), step);
                }
            }
        }
    }
}
