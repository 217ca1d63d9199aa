use std::fmt;

use thiserror::Error;

use super::{BipolarMap, Dart, PlaneMap};

/// Series-parallel decomposition. Series children run from source to sink,
/// parallel children from left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpTree {
    Edge(usize),
    Series(Vec<SpTree>),
    Parallel(Vec<SpTree>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpFailure {
    #[error("the piece between {bottom} and {top} with {edges} edges is neither a series nor a parallel composition")]
    Rigid { bottom: usize, top: usize, edges: usize },
    #[error("part of the map hangs off vertex {vertex} only")]
    Dangling { vertex: usize },
}

impl fmt::Display for SpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, children) = match self {
            SpTree::Edge(e) => return write!(f, "{}", e + 1),
            SpTree::Series(c) => ("S", c),
            SpTree::Parallel(c) => ("P", c),
        };
        write!(f, "{tag}(")?;
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

struct Piece {
    edges: Vec<usize>,
    source: usize,
    sink: usize,
    /// Leftmost dart of the piece at its source.
    left: Dart,
}

struct Decomposer<'a> {
    map: &'a PlaneMap,
    /// Which child of the piece being split owns each edge.
    owner: Vec<usize>,
}

pub fn sp_decompose(m: &BipolarMap) -> Result<SpTree, SpFailure> {
    let map = &m.map;
    let faces = map.faces();
    let left = map.outer_dart_at(m.source, &faces).expect("source is not on the outer face");
    let piece = Piece { edges: (0..map.edge_count()).collect(), source: m.source, sink: m.sink, left };
    let mut d = Decomposer { map, owner: vec![usize::MAX; map.edge_count()] };
    d.split(piece)
}

impl Decomposer<'_> {
    fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.map.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Connected components of the piece after deleting `removed`. Returns the
    /// component of each vertex (`usize::MAX` for removed or absent ones).
    fn components(&self, edges: &[usize], removed: &[usize]) -> (Vec<usize>, usize) {
        let n = self.map.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &e in edges {
            let (a, b) = self.map.endpoints(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if comp[v] != usize::MAX || adj[v].is_empty() || removed.contains(&v) {
                continue;
            }
            comp[v] = count;
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if comp[y] == usize::MAX && !removed.contains(&y) {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Vertices lying on every source-sink path, ordered from the source.
    fn cut_chain(&self, p: &Piece) -> Vec<usize> {
        let mut vertices: Vec<usize> = p
            .edges
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.map.endpoints(e);
                [a, b]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let dist = self.distances(&p.edges, p.source);
        let mut cuts: Vec<usize> = vertices
            .into_iter()
            .filter(|&v| v != p.source && v != p.sink)
            .filter(|&v| {
                let (comp, _) = self.components(&p.edges, &[v]);
                comp[p.source] != comp[p.sink]
            })
            .collect();
        cuts.sort_by_key(|&v| dist[v]);
        cuts
    }

    fn distances(&self, edges: &[usize], from: usize) -> Vec<usize> {
        let n = self.map.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &e in edges {
            let (a, b) = self.map.endpoints(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut dist = vec![usize::MAX; n];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    fn split(&mut self, p: Piece) -> Result<SpTree, SpFailure> {
        if let [e] = p.edges[..] {
            return Ok(SpTree::Edge(e));
        }
        let cuts = self.cut_chain(&p);
        if cuts.is_empty() {
            self.split_parallel(p)
        } else {
            self.split_series(p, cuts)
        }
    }

    fn split_series(&mut self, p: Piece, cuts: Vec<usize>) -> Result<SpTree, SpFailure> {
        let mut chain = vec![p.source];
        chain.extend(cuts);
        chain.push(p.sink);
        let (comp, count) = self.components(&p.edges, &chain);
        // segment of each component, from the chain vertices it touches
        let mut touches: Vec<Vec<usize>> = vec![Vec::new(); count];
        for &e in &p.edges {
            let (a, b) = self.map.endpoints(e);
            for (x, y) in [(a, b), (b, a)] {
                if comp[x] != usize::MAX && comp[y] == usize::MAX {
                    let i = chain.iter().position(|&c| c == y).unwrap();
                    if !touches[comp[x]].contains(&i) {
                        touches[comp[x]].push(i);
                    }
                }
            }
        }
        let mut segment_of_comp = vec![0; count];
        for (c, t) in touches.iter_mut().enumerate() {
            t.sort_unstable();
            match t[..] {
                [i, j] if j == i + 1 => segment_of_comp[c] = i,
                _ => return Err(SpFailure::Dangling { vertex: chain[t[0]] }),
            }
        }
        let segments = chain.len() - 1;
        let mut seg_edges = vec![Vec::new(); segments];
        for &e in &p.edges {
            let (a, b) = self.map.endpoints(e);
            let seg = if comp[a] != usize::MAX {
                segment_of_comp[comp[a]]
            } else if comp[b] != usize::MAX {
                segment_of_comp[comp[b]]
            } else {
                let i = chain.iter().position(|&c| c == a).unwrap();
                let j = chain.iter().position(|&c| c == b).unwrap();
                if i.abs_diff(j) != 1 {
                    return Err(SpFailure::Dangling { vertex: a });
                }
                i.min(j)
            };
            self.owner[e] = seg;
            seg_edges[seg].push(e);
        }
        let mut lefts = vec![p.left];
        for &c in &chain[1..segments] {
            let seg = lefts.len();
            // the segment above c starts right after the block of the segment
            // below it in clockwise order
            let left = self
                .map
                .rotation(c)
                .iter()
                .copied()
                .find(|&d| self.owner[d / 2] == seg && self.owner[self.map.prev_cw(d) / 2] == seg - 1)
                .ok_or(SpFailure::Dangling { vertex: c })?;
            lefts.push(left);
        }
        let mut children = Vec::with_capacity(segments);
        for (i, edges) in seg_edges.into_iter().enumerate() {
            let piece = Piece { edges, source: chain[i], sink: chain[i + 1], left: lefts[i] };
            children.push(self.split(piece)?);
        }
        Ok(SpTree::Series(children))
    }

    fn split_parallel(&mut self, p: Piece) -> Result<SpTree, SpFailure> {
        let (comp, count) = self.components(&p.edges, &[p.source, p.sink]);
        // branch ids: components first, then each direct edge on its own
        let mut branch_of = vec![usize::MAX; self.map.edge_count()];
        let mut branches = count;
        for &e in &p.edges {
            let (a, b) = self.map.endpoints(e);
            branch_of[e] = if comp[a] != usize::MAX {
                comp[a]
            } else if comp[b] != usize::MAX {
                comp[b]
            } else {
                branches += 1;
                branches - 1
            };
        }
        if branches < 2 {
            return Err(SpFailure::Rigid { bottom: p.source, top: p.sink, edges: p.edges.len() });
        }
        let mut order = Vec::new();
        let mut lefts = Vec::new();
        for d in self.map.rotation_from(p.left) {
            let e = d / 2;
            if branch_of[e] != usize::MAX && self.other_end(e, p.source) != p.source && !order.contains(&branch_of[e]) {
                order.push(branch_of[e]);
                lefts.push(d);
            }
        }
        if order.len() != branches {
            return Err(SpFailure::Dangling { vertex: p.sink });
        }
        let mut edges_of = vec![Vec::new(); branches];
        for &e in &p.edges {
            edges_of[branch_of[e]].push(e);
        }
        let mut children = Vec::with_capacity(branches);
        for (b, left) in order.into_iter().zip(lefts) {
            let piece = Piece { edges: std::mem::take(&mut edges_of[b]), source: p.source, sink: p.sink, left };
            children.push(self.split(piece)?);
        }
        Ok(SpTree::Parallel(children))
    }
}

/// Rotation lists of a recomposed piece with its poles and outer corners.
struct Built {
    rotations: Vec<Vec<Dart>>,
    source: usize,
    sink: usize,
    /// Leftmost dart at the source.
    source_left: Dart,
    /// Rightmost dart at the sink.
    sink_right: Dart,
}

impl Built {
    /// Source rotation read left to right.
    fn source_list(&self) -> Vec<Dart> {
        rotate_to(&self.rotations[self.source], self.source_left)
    }

    /// Sink rotation read right to left.
    fn sink_list(&self) -> Vec<Dart> {
        rotate_to(&self.rotations[self.sink], self.sink_right)
    }
}

fn rotate_to(rot: &[Dart], first: Dart) -> Vec<Dart> {
    let p = rot.iter().position(|&d| d == first).unwrap();
    rot[p..].iter().chain(&rot[..p]).copied().collect()
}

/// Appends the vertices of `b` except `skip` to `into`, renumbering them.
fn absorb(into: &mut Vec<Vec<Dart>>, b: &Built, skip: &[usize]) -> Vec<usize> {
    let mut id = vec![usize::MAX; b.rotations.len()];
    for (v, rot) in b.rotations.iter().enumerate() {
        if !skip.contains(&v) {
            id[v] = into.len();
            into.push(rot.clone());
        }
    }
    id
}

impl SpTree {
    pub fn edge_count(&self) -> usize {
        match self {
            SpTree::Edge(_) => 1,
            SpTree::Series(c) | SpTree::Parallel(c) => c.iter().map(SpTree::edge_count).sum(),
        }
    }

    /// Builds the plane bipolar map described by the tree. Leaf edges keep
    /// their ids and point from source to sink.
    pub fn recompose(&self) -> BipolarMap {
        let b = self.build();
        let map = PlaneMap::new(b.rotations, b.source_left).expect("recomposed rotation system");
        BipolarMap::new(map, b.source, b.sink)
    }

    fn build(&self) -> Built {
        match self {
            SpTree::Edge(e) => Built {
                rotations: vec![vec![2 * e], vec![2 * e + 1]],
                source: 0,
                sink: 1,
                source_left: 2 * e,
                sink_right: 2 * e + 1,
            },
            SpTree::Series(children) => {
                let mut acc = children[0].build();
                for child in &children[1..] {
                    let upper = child.build();
                    let junction: Vec<Dart> = upper.source_list().into_iter().chain(acc.sink_list()).collect();
                    let mut rotations = std::mem::take(&mut acc.rotations);
                    rotations[acc.sink] = junction;
                    let id = absorb(&mut rotations, &upper, &[upper.source]);
                    acc = Built {
                        rotations,
                        source: acc.source,
                        sink: id[upper.sink],
                        source_left: acc.source_left,
                        sink_right: upper.sink_right,
                    };
                }
                acc
            }
            SpTree::Parallel(children) => {
                let mut acc = children[0].build();
                for child in &children[1..] {
                    let right = child.build();
                    let source: Vec<Dart> = acc.source_list().into_iter().chain(right.source_list()).collect();
                    let sink: Vec<Dart> = right.sink_list().into_iter().chain(acc.sink_list()).collect();
                    let mut rotations = std::mem::take(&mut acc.rotations);
                    rotations[acc.source] = source;
                    rotations[acc.sink] = sink;
                    absorb(&mut rotations, &right, &[right.source, right.sink]);
                    acc = Built { rotations, sink_right: right.sink_right, ..acc };
                }
                acc
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{canonical_code, BipolarOrientation};

    fn same_rooted(a: &BipolarMap, b: &BipolarMap) -> bool {
        canonical_code(&a.add_root_edge()) == canonical_code(&b.add_root_edge())
    }

    #[test]
    fn single_and_double_edge() {
        let one = BipolarOrientation::one_edge().underlying();
        assert_eq!(sp_decompose(&one), Ok(SpTree::Edge(0)));
        let double = BipolarMap::new(PlaneMap::new(vec![vec![0, 2], vec![3, 1]], 0).unwrap(), 0, 1);
        let t = sp_decompose(&double).unwrap();
        assert_eq!(t, SpTree::Parallel(vec![SpTree::Edge(0), SpTree::Edge(1)]));
        assert!(same_rooted(&t.recompose(), &double));
    }

    #[test]
    fn path_is_series() {
        let path = BipolarMap::new(PlaneMap::new(vec![vec![0], vec![2, 1], vec![3]], 0).unwrap(), 0, 2);
        let t = sp_decompose(&path).unwrap();
        assert_eq!(t.to_string(), "S(1,2)");
        assert!(same_rooted(&t.recompose(), &path));
    }

    #[test]
    fn k4_is_rigid() {
        let rot = vec![vec![0, 6, 4], vec![2, 9, 1], vec![5, 11, 3], vec![8, 10, 7]];
        let k4 = BipolarMap::new(PlaneMap::new(rot, 0).unwrap(), 0, 2);
        assert!(matches!(sp_decompose(&k4), Err(SpFailure::Rigid { .. })));
    }

    #[test]
    fn triangle_with_chord_side() {
        // s -> v -> t on the left, s -> t on the right
        let m = BipolarMap::new(PlaneMap::new(vec![vec![0, 4], vec![2, 1], vec![5, 3]], 0).unwrap(), 0, 2);
        let t = sp_decompose(&m).unwrap();
        assert_eq!(t.to_string(), "P(S(1,2),3)");
        assert!(same_rooted(&t.recompose(), &m));
    }
}
