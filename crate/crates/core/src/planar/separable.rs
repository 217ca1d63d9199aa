use super::{twin, PlaneMap};

/// Whether deleting some vertex disconnects the map. Maps with at most two
/// vertices count as non-separable.
pub fn is_separable(m: &PlaneMap) -> bool {
    let n = m.vertex_count();
    if n <= 2 {
        return false;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| m.rotation(v).iter().map(|&d| m.vertex(twin(d))).filter(|&w| w != v).collect())
        .collect();
    if !m.is_connected() {
        return true;
    }
    articulation_points(&adj).iter().any(|&a| a)
}

/// Low-point computation, iterative to keep deep maps off the call stack.
/// Parallel edges are harmless: only the tree edge to the parent is skipped
/// once.
pub(crate) fn articulation_points(adj: &[Vec<usize>]) -> Vec<bool> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, parent edge skipped yet, next neighbour index)
        let mut stack: Vec<(usize, usize, bool, usize)> = vec![(root, usize::MAX, false, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, _, idx) = *frame;
            if idx < adj[v].len() {
                frame.3 += 1;
                let w = adj[v][idx];
                if w == parent && !frame.2 {
                    frame.2 = true;
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, false, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    cut
}
