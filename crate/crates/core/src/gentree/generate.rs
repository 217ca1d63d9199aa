use rand::Rng;

use super::{orient_insert, orient_labels, perm_insert, perm_labels, InsertionSeq, LabelPair, Step};
use crate::perm::Permutation;
use crate::planar::BipolarOrientation;

/// A family grown by the rewriting rule.
pub trait Growth {
    type Node: Clone;
    fn root() -> Self::Node;
    fn labels(node: &Self::Node) -> LabelPair;
    fn child(node: &Self::Node, step: Step) -> Self::Node;
}

/// Baxter permutations, grown by inserting the new maximum.
pub struct PermutationTree;

/// Plane bipolar orientations, grown by adding a left-border edge.
pub struct OrientationTree;

impl Growth for PermutationTree {
    type Node = Permutation;

    fn root() -> Permutation {
        Permutation::identity(1)
    }

    fn labels(node: &Permutation) -> LabelPair {
        perm_labels(node)
    }

    fn child(node: &Permutation, step: Step) -> Permutation {
        perm_insert(node, step).expect("step taken from the node's own labels")
    }
}

impl Growth for OrientationTree {
    type Node = BipolarOrientation;

    fn root() -> BipolarOrientation {
        BipolarOrientation::one_edge()
    }

    fn labels(node: &BipolarOrientation) -> LabelPair {
        orient_labels(node)
    }

    fn child(node: &BipolarOrientation, step: Step) -> BipolarOrientation {
        orient_insert(node, step).expect("step taken from the node's own labels")
    }
}

/// A node of a generating tree with its labels and the path that reached it.
#[derive(Debug, Clone)]
pub struct GenNode<T> {
    pub object: T,
    pub labels: LabelPair,
    pub seq: InsertionSeq,
}

struct Frame<T> {
    node: GenNode<T>,
    next_child: usize,
}

/// Depth-first walk yielding the nodes at one level, left to right. Subtrees
/// whose root fails the filter are skipped entirely.
pub struct Walk<G: Growth, F> {
    level: usize,
    stack: Vec<Frame<G::Node>>,
    keep: F,
}

impl<G: Growth, F: FnMut(&G::Node) -> bool> Iterator for Walk<G, F> {
    type Item = GenNode<G::Node>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let depth = self.stack.len();
            let frame = self.stack.last_mut()?;
            if depth == self.level {
                return self.stack.pop().map(|f| f.node);
            }
            let labels = frame.node.labels;
            if frame.next_child == labels.child_count() {
                self.stack.pop();
                continue;
            }
            let step = labels.child_step(frame.next_child);
            frame.next_child += 1;
            let object = G::child(&frame.node.object, step);
            if !(self.keep)(&object) {
                continue;
            }
            let mut seq = frame.node.seq.clone();
            seq.0.push(step);
            let labels = G::labels(&object);
            self.stack.push(Frame { node: GenNode { object, labels, seq }, next_child: 0 });
        }
    }
}

fn walk<G: Growth, F: FnMut(&G::Node) -> bool>(level: usize, mut keep: F) -> Walk<G, F> {
    let root = G::root();
    let stack = if level >= 1 && keep(&root) {
        let labels = G::labels(&root);
        vec![Frame { node: GenNode { object: root, labels, seq: InsertionSeq::default() }, next_child: 0 }]
    } else {
        Vec::new()
    };
    Walk { level, stack, keep }
}

/// All nodes at `level` (objects of size `level`), in tree order.
pub fn generate<G: Growth>(level: usize) -> Walk<G, fn(&G::Node) -> bool> {
    walk::<G, fn(&G::Node) -> bool>(level, |_| true)
}

/// Nodes at `level` of the subtree of nodes satisfying `keep`, which must be
/// inherited by parents for the result to be the filtered level.
pub fn generate_filtered<G: Growth, F: FnMut(&G::Node) -> bool>(level: usize, keep: F) -> Walk<G, F> {
    walk::<G, F>(level, keep)
}

/// A Baxter permutation of size `n` reached by a random walk down the tree,
/// choosing each child uniformly. Not uniform over all permutations of size
/// `n`.
pub fn random_baxter<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut p = Permutation::identity(n.min(1));
    while p.len() < n {
        let l = perm_labels(&p);
        let step = l.child_step(rng.gen_range(0..l.child_count()));
        p = perm_insert(&p, step).expect("step within labels");
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::canonical_code;
    use rand::SeedableRng;

    #[test]
    fn level_sizes() {
        let sizes: Vec<usize> = (1..=6).map(|n| generate::<PermutationTree>(n).count()).collect();
        assert_eq!(sizes, vec![1, 2, 6, 22, 92, 422]);
        let sizes: Vec<usize> = (1..=5).map(|n| generate::<OrientationTree>(n).count()).collect();
        assert_eq!(sizes, vec![1, 2, 6, 22, 92]);
        assert_eq!(generate::<PermutationTree>(0).count(), 0);
    }

    #[test]
    fn levels_match_brute_force() {
        let mut tree: Vec<Permutation> = generate::<PermutationTree>(5).map(|g| g.object).collect();
        tree.sort();
        let brute: Vec<Permutation> = Permutation::all(5).filter(Permutation::is_baxter).collect();
        assert_eq!(tree, brute);
        let mut codes: Vec<_> = generate::<OrientationTree>(5).map(|g| canonical_code(&g.object)).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 92);
    }

    #[test]
    fn level_two_order() {
        let kids: Vec<String> = generate::<PermutationTree>(2).map(|g| g.object.to_string()).collect();
        assert_eq!(kids, vec!["2 1", "1 2"]);
        let seqs: Vec<String> = generate::<PermutationTree>(3).map(|g| g.seq.to_string()).collect();
        assert_eq!(seqs, ["L1 L1", "L1 R2", "L1 R1", "R1 L1", "R1 L2", "R1 R1"]);
        let level: Vec<String> = generate::<PermutationTree>(3).map(|g| g.object.to_string()).collect();
        assert_eq!(level, ["3 2 1", "2 3 1", "2 1 3", "3 1 2", "1 3 2", "1 2 3"]);
    }

    #[test]
    fn random_walk_is_baxter() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [1, 5, 40] {
            let p = random_baxter(n, &mut rng);
            assert_eq!(p.len(), n);
            assert!(p.is_baxter());
        }
    }
}
