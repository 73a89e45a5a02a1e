//! Exhaustive generation of free trees, one per isomorphism class, and
//! Prüfer-sequence decoding.
//!
//! Rooted trees are interned bottom-up: a tree is a sorted multiset of
//! smaller tree ids, so equal ids mean isomorphic rooted trees. A free
//! tree is recovered either from its unique centroid (all root subtrees of
//! size at most `(n-1)/2`) or, for even orders, from its centroid edge (an
//! unordered pair of rooted trees on `n/2` vertices each). This yields
//! every isomorphism class exactly once.

use crate::graph::Graph;

#[derive(Default)]
struct RootedTrees {
    /// children id lists, sorted ascending; index = tree id
    children: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    by_size: Vec<Vec<usize>>,
}

impl RootedTrees {
    fn build(max_n: usize) -> RootedTrees {
        let mut rt = RootedTrees {
            children: Vec::new(),
            sizes: Vec::new(),
            by_size: vec![Vec::new(); max_n + 1],
        };
        if max_n == 0 {
            return rt;
        }
        rt.children.push(Vec::new());
        rt.sizes.push(1);
        rt.by_size[1].push(0);
        for n in 2..=max_n {
            let mut acc = Vec::new();
            rt.fill(n - 1, 0, &mut acc, n);
        }
        rt
    }

    /// Extends `acc` with child ids (non-decreasing, starting at `min_id`)
    /// whose sizes sum to `budget`, registering each completed multiset as
    /// a tree of size `target`.
    fn fill(&mut self, budget: usize, min_id: usize, acc: &mut Vec<usize>, target: usize) {
        if budget == 0 {
            let id = self.children.len();
            self.children.push(acc.clone());
            self.sizes.push(target);
            self.by_size[target].push(id);
            return;
        }
        for id in min_id..self.children.len() {
            if self.sizes[id] <= budget {
                acc.push(id);
                let sz = self.sizes[id];
                self.fill(budget - sz, id, acc, target);
                acc.pop();
            }
        }
    }

    /// Writes the rooted tree `id` into an edge list, rooted at `root`,
    /// allocating fresh vertex numbers from `next`; returns the count used.
    fn emit(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        for &c in &self.children[id] {
            let v = *next;
            *next += 1;
            edges.push((root, v));
            self.emit(c, v, next, edges);
        }
    }
}

/// All free trees on exactly `n` vertices, one representative per
/// isomorphism class, with deterministic vertex numbering.
pub fn free_trees_exactly(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let rt = RootedTrees::build(n);
    let mut out = Vec::new();
    // unique centroid: every root subtree has at most (n-1)/2 vertices
    let cap = (n - 1) / 2;
    for &id in &rt.by_size[n] {
        if rt.children[id].iter().all(|&c| rt.sizes[c] <= cap) {
            let mut edges = Vec::new();
            let mut next = 1;
            rt.emit(id, 0, &mut next, &mut edges);
            out.push(Graph::new(n, &edges).expect("tree edges are simple"));
        }
    }
    // centroid edge: unordered pair of rooted halves
    if n.is_multiple_of(2) {
        let halves = &rt.by_size[n / 2];
        for (i, &a) in halves.iter().enumerate() {
            for &b in &halves[i..] {
                let mut edges = Vec::new();
                let mut next = 1;
                rt.emit(a, 0, &mut next, &mut edges);
                let other_root = next;
                next += 1;
                edges.push((0, other_root));
                rt.emit(b, other_root, &mut next, &mut edges);
                out.push(Graph::new(n, &edges).expect("tree edges are simple"));
            }
        }
    }
    out
}

/// All free trees on 1 to `max_n` vertices.
pub fn free_trees(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(free_trees_exactly).collect()
}

/// Decodes a Prüfer sequence over `0..n-1` (length `n - 2`) into a tree,
/// using the smallest-leaf rule.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    assert!(n >= 2 && seq.len() == n - 2);
    assert!(seq.iter().all(|&x| x < n));
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let Reverse(u) = leaves.pop().expect("sequence leaves a leaf available");
        edges.push((u, a));
        degree[u] -= 1;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::new(n, &edges).expect("prufer decoding yields a tree")
}
