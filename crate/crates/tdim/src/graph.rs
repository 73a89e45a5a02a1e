//! Simple undirected graphs on vertices `0..n-1`.
//!
//! Graphs are immutable values: every operation that "changes" a graph
//! returns a new one. Two graphs are equal exactly when they have the same
//! order and the same edge set. Orders above 128 are rejected — the exact
//! solvers in this crate are exponential and target desk-scale instances,
//! and the cap lets adjacency rows live in single 128-bit words.

use crate::error::Error;
use crate::Result;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 128;

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects self-loops, out-of-range endpoints, duplicate edges and
    /// orders above [`MAX_VERTICES`].
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = Graph {
            n,
            adj: vec![0; n],
        };
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adjacency row of `v` as a bitmask.
    pub fn adjacency_row(&self, v: usize) -> u128 {
        self.adj[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in canonical order: `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & mask_above(u)) {
                out.push((u, v));
            }
        }
        out
    }

    /// All non-edges in canonical order: `u < v`, lexicographic.
    pub fn complement_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Returns `self + E`: the same vertex set with the listed edges added.
    ///
    /// Every pair must be a current non-edge with distinct valid endpoints;
    /// the receiver is left untouched.
    pub fn add_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::EdgeExists(u.min(v), u.max(v)));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// BFS distances from `src` to every vertex; `None` marks a different
    /// component.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        let row = self.bfs_row(src);
        row.iter()
            .map(|&d| if d == UNREACHABLE { None } else { Some(d as u32) })
            .collect()
    }

    fn bfs_row(&self, src: usize) -> Vec<u8> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut seen: u128 = 1 << src;
        let mut frontier: u128 = 1 << src;
        let mut d: u8 = 0;
        dist[src] = 0;
        while frontier != 0 {
            let mut next: u128 = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            d += 1;
            for v in BitIter(next) {
                dist[v] = d;
            }
            frontier = next;
        }
        dist
    }

    /// All-pairs hop distances via one BFS per vertex.
    pub fn distances(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n {
            d.extend_from_slice(&self.bfs_row(v));
        }
        DistanceMatrix { n: self.n, d }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_row(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Maximum pairwise distance. Errors on disconnected input.
    pub fn diameter(&self) -> Result<u32> {
        let dm = self.distances();
        let mut max = 0;
        for u in 0..self.n {
            for v in 0..self.n {
                match dm.get(u, v) {
                    Some(d) => max = max.max(d),
                    None => return Err(Error::Disconnected),
                }
            }
        }
        Ok(max)
    }

    /// The set of vertices at distance exactly `k` from `v`, ascending.
    pub fn k_neighbourhood(&self, v: usize, k: u32) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let row = self.bfs_row(v);
        Ok((0..self.n)
            .filter(|&x| row[x] != UNREACHABLE && row[x] as u32 == k)
            .collect())
    }
}

const UNREACHABLE: u8 = u8::MAX;

/// All-pairs hop-count table.
///
/// Disconnected pairs carry a distinguished marker rather than a sentinel
/// integer: [`DistanceMatrix::get`] returns `None` for them, so arithmetic
/// on distances fails loudly instead of silently overflowing.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop distance, or `None` for vertices in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.d[u * self.n + v];
        if d == UNREACHABLE {
            None
        } else {
            Some(d as u32)
        }
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }

    pub(crate) fn raw(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    /// True iff the distance vectors to `w` are pairwise distinct.
    ///
    /// This is the hot path behind the exact solvers; it assumes a connected
    /// graph and a non-empty, duplicate-free landmark slice.
    pub fn resolves(&self, w: &[usize]) -> bool {
        debug_assert!(!w.is_empty());
        // Pack each vector into a u128 key (7 bits per coordinate) while
        // checking for collisions; fall back to full rows for wide sets.
        if w.len() <= 18 {
            let mut keys = [0u128; MAX_VERTICES];
            for v in 0..self.n {
                let mut key: u128 = 0;
                for &wi in w {
                    key = key << 7 | self.raw(wi, v) as u128;
                }
                for &k in &keys[..v] {
                    if k == key {
                        return false;
                    }
                }
                keys[v] = key;
            }
            true
        } else {
            let mut rows: Vec<Vec<u8>> = (0..self.n)
                .map(|v| w.iter().map(|&wi| self.raw(wi, v)).collect())
                .collect();
            rows.sort_unstable();
            rows.windows(2).all(|p| p[0] != p[1])
        }
    }
}

/// Bits strictly above position `u`.
fn mask_above(u: usize) -> u128 {
    if u + 1 >= 128 {
        0
    } else {
        !((1u128 << (u + 1)) - 1)
    }
}

/// Iterates the set bits of a word, ascending.
pub(crate) struct BitIter(pub u128);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        make(&FamilySpec::Path { n }).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        make(&FamilySpec::Star { leaves }).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::InvalidVertex { vertex: 2, n: 2 })
        );
        assert!(Graph::new(129, &[]).is_err());
    }

    #[test]
    fn add_edges_is_value_semantics() {
        let p3 = path(3);
        let c3 = p3.add_edges(&[(0, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(p3.add_edges(&[]).unwrap(), p3);
        assert_eq!(p3.add_edges(&[(0, 1)]), Err(Error::EdgeExists(0, 1)));
    }

    #[test]
    fn complement_of_complete_graph_is_empty() {
        let k4 = make(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!(k4.complement_edges().is_empty());
        assert_eq!(path(3).complement_edges(), vec![(0, 2)]);
        // the 6 leaves of K_{1,6} leave C(6,2) = 15 non-edges
        assert_eq!(star(6).complement_edges().len(), 15);
    }

    #[test]
    fn distances_on_named_graphs() {
        let p4 = path(4);
        assert_eq!(p4.distances().get(0, 3), Some(3));
        let k15 = star(5);
        assert_eq!(k15.distances().get(1, 2), Some(2));
        // two outer leaves of the 9-vertex double-broom are 4 apart
        let l9 = make(&FamilySpec::L3n { n: 3 }).unwrap();
        assert_eq!(l9.distances().get(1, 7), Some(4));
    }

    #[test]
    fn diameter_of_named_graphs() {
        for n in 2..6 {
            assert_eq!(make(&FamilySpec::Complete { n }).unwrap().diameter().unwrap(), 1);
        }
        assert_eq!(star(6).diameter().unwrap(), 2);
        for k in 1..4 {
            let t = make(&FamilySpec::TK { k }).unwrap();
            assert_eq!(t.diameter().unwrap(), 2 * k as u32);
        }
        let two = Graph::new(2, &[]).unwrap();
        assert_eq!(two.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn k_neighbourhoods() {
        assert_eq!(path(4).k_neighbourhood(0, 3).unwrap(), vec![3]);
        assert_eq!(star(5).k_neighbourhood(0, 1).unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(path(4).k_neighbourhood(0, 0).unwrap(), vec![0]);
        // antipode on an even cycle
        assert_eq!(cycle(6).k_neighbourhood(0, 3).unwrap().len(), 1);
        assert!(path(4).k_neighbourhood(9, 1).is_err());
    }

    #[test]
    fn edge_distance_is_one() {
        let g = make(&FamilySpec::Figure4).unwrap();
        let dm = g.distances();
        for (u, v) in g.edges() {
            assert_eq!(dm.get(u, v), Some(1));
        }
        for (u, v) in g.complement_edges() {
            assert!(dm.get(u, v).unwrap() >= 2);
        }
    }

    prop_compose! {
        fn arb_graph(max_n: usize)(n in 2..=max_n)(
            n in Just(n),
            bits in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        ) -> Graph {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[i] { edges.push((u, v)); }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        }
    }

    proptest! {
        #[test]
        fn adding_edges_never_increases_distances(g in arb_graph(9), pick in any::<u64>()) {
            let comp = g.complement_edges();
            let chosen: Vec<_> = comp
                .iter()
                .enumerate()
                .filter(|(i, _)| pick & (1 << (i % 64)) != 0)
                .map(|(_, e)| *e)
                .collect();
            let h = g.add_edges(&chosen).unwrap();
            let dg = g.distances();
            let dh = h.distances();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    match (dg.get(u, v), dh.get(u, v)) {
                        (Some(a), Some(b)) => prop_assert!(b <= a),
                        (None, _) => {}
                        (Some(_), None) => prop_assert!(false, "lost connectivity"),
                    }
                }
            }
            if g.is_connected() {
                prop_assert!(h.diameter().unwrap() <= g.diameter().unwrap());
            }
        }

        #[test]
        fn distance_matrix_is_a_metric(g in arb_graph(9)) {
            let dm = g.distances();
            let n = g.n();
            for u in 0..n {
                prop_assert_eq!(dm.get(u, u), Some(0));
                for v in 0..n {
                    prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                    prop_assert_eq!(dm.get(u, v) == Some(1), g.has_edge(u, v));
                    for w in 0..n {
                        if let (Some(a), Some(b), Some(c)) =
                            (dm.get(u, w), dm.get(u, v), dm.get(v, w))
                        {
                            prop_assert!(a <= b + c);
                        }
                    }
                }
            }
        }

        #[test]
        fn bfs_matches_floyd_warshall(g in arb_graph(10)) {
            // independent oracle for the hop counts
            let n = g.n();
            const INF: u32 = u32::MAX / 4;
            let mut fw = vec![vec![INF; n]; n];
            for u in 0..n {
                fw[u][u] = 0;
            }
            for (u, v) in g.edges() {
                fw[u][v] = 1;
                fw[v][u] = 1;
            }
            for m in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        let via = fw[u][m] + fw[m][v];
                        if via < fw[u][v] {
                            fw[u][v] = via;
                        }
                    }
                }
            }
            let dm = g.distances();
            for u in 0..n {
                for v in 0..n {
                    let expect = if fw[u][v] >= INF { None } else { Some(fw[u][v]) };
                    prop_assert_eq!(dm.get(u, v), expect);
                }
            }
        }
    }
}
