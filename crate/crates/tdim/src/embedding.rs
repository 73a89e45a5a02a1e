//! Lattice embeddings into strong powers of paths.
//!
//! Vertices of the `k`-fold strong power of a path are integer `k`-vectors;
//! two distinct vectors are adjacent exactly when they differ by at most 1
//! in every coordinate, so hop distance in the power is the Chebyshev
//! distance. An embedding is *landmark-resolved* when each vertex's
//! coordinate vector equals its vector of hop distances, measured inside
//! the induced image graph, to the embedded landmarks. Such an embedding
//! exists in the `(diameter+1)`-sided grid if and only if the landmark set
//! resolves some supergraph obtained from the source graph by adding edges,
//! which is what makes the search below an exact threshold-dimension
//! decision procedure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{DistanceMatrix, Graph};
use crate::metric;
use crate::Result;

/// An injective placement of a graph's vertices on integer grid points,
/// with an ordered landmark list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEmbedding {
    pub side: usize,
    pub landmarks: Vec<usize>,
    /// One `k`-vector per vertex, indexed by vertex id.
    pub coords: Vec<Vec<u32>>,
}

impl LatticeEmbedding {
    pub fn k(&self) -> usize {
        self.landmarks.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&Wire::from(self)).expect("embedding serializes")
    }

    pub fn from_json(text: &str) -> Result<LatticeEmbedding> {
        let wire: Wire = serde_json::from_str(text)?;
        wire.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    k: usize,
    side: usize,
    landmarks: Vec<usize>,
    coords: BTreeMap<usize, Vec<u32>>,
}

impl From<&LatticeEmbedding> for Wire {
    fn from(e: &LatticeEmbedding) -> Wire {
        Wire {
            k: e.k(),
            side: e.side,
            landmarks: e.landmarks.clone(),
            coords: e.coords.iter().cloned().enumerate().collect(),
        }
    }
}

impl TryFrom<Wire> for LatticeEmbedding {
    type Error = Error;
    fn try_from(w: Wire) -> Result<LatticeEmbedding> {
        if w.k != w.landmarks.len() {
            return Err(Error::InvalidEmbedding(
                "field k disagrees with the landmark list".into(),
            ));
        }
        let n = w.coords.len();
        let mut coords = vec![Vec::new(); n];
        for (v, c) in w.coords {
            if v >= n {
                return Err(Error::InvalidEmbedding(format!(
                    "coords key {} out of range for {} vertices",
                    v, n
                )));
            }
            coords[v] = c;
        }
        Ok(LatticeEmbedding {
            side: w.side,
            landmarks: w.landmarks,
            coords,
        })
    }
}

/// Chebyshev distance between equal-length integer vectors.
pub fn chebyshev_distance(x: &[u32], y: &[u32]) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter().zip(y).map(|(&a, &b)| a.abs_diff(b)).max().unwrap_or(0))
}

/// True iff two distinct grid points are adjacent in the strong power,
/// i.e. their Chebyshev distance is exactly 1.
pub fn lattice_adjacent(x: &[u32], y: &[u32]) -> Result<bool> {
    Ok(chebyshev_distance(x, y)? == 1)
}

/// Structural validation of an embedding against its source graph.
fn validate(g: &Graph, emb: &LatticeEmbedding) -> Result<()> {
    if emb.coords.len() != g.n() {
        return Err(Error::InvalidEmbedding(format!(
            "{} coordinate rows for {} vertices",
            emb.coords.len(),
            g.n()
        )));
    }
    if emb.landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let k = emb.k();
    for (i, &w) in emb.landmarks.iter().enumerate() {
        if w >= g.n() {
            return Err(Error::InvalidVertex { vertex: w, n: g.n() });
        }
        if emb.landmarks[..i].contains(&w) {
            return Err(Error::RepeatedLandmark);
        }
    }
    for (v, row) in emb.coords.iter().enumerate() {
        if row.len() != k {
            return Err(Error::InvalidEmbedding(format!(
                "vertex {} has {} coordinates, expected {}",
                v,
                row.len(),
                k
            )));
        }
        if row.iter().any(|&c| c as usize >= emb.side) {
            return Err(Error::InvalidEmbedding(format!(
                "vertex {} leaves the side-{} grid",
                v, emb.side
            )));
        }
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if emb.coords[u] == emb.coords[v] {
                return Err(Error::InvalidEmbedding(format!(
                    "vertices {} and {} share a grid point",
                    u, v
                )));
            }
        }
    }
    for (u, v) in g.edges() {
        if !lattice_adjacent(&emb.coords[u], &emb.coords[v])? {
            return Err(Error::InvalidEmbedding(format!(
                "edge {}-{} is not preserved",
                u, v
            )));
        }
    }
    Ok(())
}

/// The graph the image induces: same vertex set, an edge wherever two
/// images are Chebyshev-adjacent. Contains the source as a spanning
/// subgraph. Errors if the embedding violates its type invariants.
pub fn induced_supergraph(g: &Graph, emb: &LatticeEmbedding) -> Result<Graph> {
    validate(g, emb)?;
    Ok(supergraph_unchecked(g.n(), &emb.coords))
}

fn supergraph_unchecked(n: usize, coords: &[Vec<u32>]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let adj = coords[u]
                .iter()
                .zip(&coords[v])
                .all(|(&a, &b)| a.abs_diff(b) <= 1);
            if adj {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("distinct points give a simple graph")
}

/// Why an embedding failed verification; the first offence in vertex-id,
/// then coordinate, order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    /// The embedding is not even structurally valid for this graph.
    Structural(String),
    /// `coords[vertex][coord]` does not equal the landmark distance in the
    /// induced supergraph (`None` means the landmark is unreachable there).
    Mismatch {
        vertex: usize,
        coord: usize,
        stated: u32,
        actual: Option<u32>,
    },
}

impl std::fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyFailure::Structural(msg) => write!(f, "structural: {}", msg),
            VerifyFailure::Mismatch {
                vertex,
                coord,
                stated,
                actual,
            } => write!(
                f,
                "vertex {} coordinate {}: stated {}, supergraph distance {}",
                vertex,
                coord,
                stated,
                match actual {
                    Some(d) => d.to_string(),
                    None => "unreachable".to_string(),
                }
            ),
        }
    }
}

/// Full check of the landmark-resolved property; `Ok(())` iff every
/// coordinate of every vertex equals the corresponding landmark distance in
/// the induced supergraph.
pub fn check_w_resolved(g: &Graph, emb: &LatticeEmbedding) -> std::result::Result<(), VerifyFailure> {
    if let Err(e) = validate(g, emb) {
        return Err(VerifyFailure::Structural(e.to_string()));
    }
    let h = supergraph_unchecked(g.n(), &emb.coords);
    let dist: Vec<Vec<Option<u32>>> = emb
        .landmarks
        .iter()
        .map(|&w| h.bfs_distances(w))
        .collect();
    for v in 0..g.n() {
        for (i, row) in dist.iter().enumerate() {
            if row[v] != Some(emb.coords[v][i]) {
                return Err(VerifyFailure::Mismatch {
                    vertex: v,
                    coord: i,
                    stated: emb.coords[v][i],
                    actual: row[v],
                });
            }
        }
    }
    Ok(())
}

/// Boolean form of [`check_w_resolved`].
pub fn verify_w_resolved(g: &Graph, emb: &LatticeEmbedding) -> bool {
    check_w_resolved(g, emb).is_ok()
}

/// The canonical embedding of a graph resolved by `w`: each vertex goes to
/// its vector of graph distances to the landmarks, in a grid of side
/// `diameter + 1`. Always passes [`verify_w_resolved`].
pub fn embedding_from_resolving_set(g: &Graph, w: &[usize]) -> Result<LatticeEmbedding> {
    match metric::is_resolving(g, w)? {
        None => Err(Error::NotResolving(w.to_vec())),
        Some(_) => {
            let dm = g.distances();
            let coords = (0..g.n())
                .map(|v| w.iter().map(|&wi| dm.get(wi, v).expect("connected")).collect())
                .collect();
            let emb = LatticeEmbedding {
                side: g.diameter()? as usize + 1,
                landmarks: w.to_vec(),
                coords,
            };
            debug_assert!(verify_w_resolved(g, &emb));
            Ok(emb)
        }
    }
}

/// Complete backtracking search for a landmark-resolved embedding of `g`
/// in the `k`-fold strong power of a path on `side` vertices.
///
/// Returns the lexicographically-first embedding (landmark rows first, then
/// the remaining vertices in descending-degree order) or `None` when the
/// whole space is exhausted. With `side = diameter + 1` a `None` answer is
/// a proof that no edge addition makes `w` a resolving set.
///
/// Sound prunings, one line each:
/// * a coordinate never exceeds the source-graph distance to its landmark,
///   because adding edges never increases distances;
/// * every vertex image stays within Chebyshev distance `coords[x][i]` of
///   landmark row `i`, because grid distance lower-bounds supergraph
///   distance;
/// * source edges force Chebyshev-adjacent images;
/// * images are pairwise distinct (occupancy set).
///
/// These conditions are necessary but not sufficient, so every complete
/// assignment is still checked with the full [`check_w_resolved`] pass.
pub fn exists_w_resolved_embedding(
    g: &Graph,
    w: &[usize],
    side: usize,
) -> Result<Option<LatticeEmbedding>> {
    if w.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    for (i, &wi) in w.iter().enumerate() {
        if wi >= g.n() {
            return Err(Error::InvalidVertex { vertex: wi, n: g.n() });
        }
        if w[..i].contains(&wi) {
            return Err(Error::RepeatedLandmark);
        }
    }
    if side == 0 || (side < 2 && g.n() > 1) {
        return Err(Error::InvalidParameter(format!(
            "grid side {} is too small for this graph",
            side
        )));
    }
    let dm = g.distances();
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }

    let mut search = Search::new(g, w, side, &dm);
    Ok(search.run())
}

struct Search<'a> {
    g: &'a Graph,
    w: &'a [usize],
    k: usize,
    side: u32,
    /// cap[v][i] = min(side - 1, d_G(w_i, v))
    cap: Vec<Vec<u32>>,
    /// assignment order: landmarks first, then by descending degree, id ties
    order: Vec<usize>,
    coords: Vec<Vec<u32>>,
    assigned: Vec<bool>,
    occupied: Occupancy,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, w: &'a [usize], side: usize, dm: &DistanceMatrix) -> Search<'a> {
        let k = w.len();
        let side = side as u32;
        let cap = (0..g.n())
            .map(|v| {
                w.iter()
                    .map(|&wi| (side - 1).min(dm.get(wi, v).expect("connected")))
                    .collect()
            })
            .collect();
        let mut rest: Vec<usize> = (0..g.n()).filter(|v| !w.contains(v)).collect();
        rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut order = w.to_vec();
        order.extend(rest);
        Search {
            g,
            w,
            k,
            side,
            cap,
            order,
            coords: vec![Vec::new(); g.n()],
            assigned: vec![false; g.n()],
            occupied: Occupancy::new(side as usize, k),
        }
    }

    fn run(&mut self) -> Option<LatticeEmbedding> {
        // Landmark rows are determined by the symmetric matrix of pairwise
        // landmark distances in the prospective supergraph: row i has 0 at
        // position i and m(i,j) at position j. Enumerate the matrix first.
        let pairs: Vec<(usize, usize)> = (0..self.k)
            .flat_map(|i| ((i + 1)..self.k).map(move |j| (i, j)))
            .collect();
        let mut m = vec![0u32; pairs.len()];
        self.landmark_matrix(&pairs, 0, &mut m)
    }

    fn landmark_matrix(
        &mut self,
        pairs: &[(usize, usize)],
        idx: usize,
        m: &mut Vec<u32>,
    ) -> Option<LatticeEmbedding> {
        if idx < pairs.len() {
            let (i, j) = pairs[idx];
            let hi = self.cap[self.w[j]][i].min(self.cap[self.w[i]][j]);
            for val in 1..=hi {
                m[idx] = val;
                if let Some(found) = self.landmark_matrix(pairs, idx + 1, m) {
                    return Some(found);
                }
            }
            return None;
        }

        let mut rows = vec![vec![0u32; self.k]; self.k];
        for (a, &(i, j)) in pairs.iter().enumerate() {
            rows[i][j] = m[a];
            rows[j][i] = m[a];
        }
        // Grid distance lower-bounds supergraph distance, so the Chebyshev
        // distance between two rows may not exceed their stated distance.
        // (This subsumes the triangle inequality among the m values.)
        for i in 0..self.k {
            for j in (i + 1)..self.k {
                let cheb = rows[i]
                    .iter()
                    .zip(&rows[j])
                    .map(|(&a, &b)| a.abs_diff(b))
                    .max()
                    .unwrap();
                if cheb > rows[i][j] {
                    return None;
                }
            }
        }
        // rows are pairwise distinct: row i is 0 at i, row j is m(i,j) >= 1
        for (i, &wi) in self.w.iter().enumerate() {
            self.coords[wi] = rows[i].clone();
            self.assigned[wi] = true;
            let fresh = self.occupied.insert(&rows[i]);
            debug_assert!(fresh);
        }
        let found = self.assign(self.k);
        for &wi in self.w {
            self.occupied.remove(&self.coords[wi]);
            self.assigned[wi] = false;
        }
        found
    }

    fn assign(&mut self, depth: usize) -> Option<LatticeEmbedding> {
        if depth == self.order.len() {
            // the prunes are necessary but not sufficient; accept only what
            // the full fixpoint check confirms
            let emb = LatticeEmbedding {
                side: self.side as usize,
                landmarks: self.w.to_vec(),
                coords: self.coords.clone(),
            };
            if check_w_resolved(self.g, &emb).is_ok() {
                return Some(emb);
            }
            return None;
        }
        let x = self.order[depth];
        let (lo, hi) = self.ranges(x)?;
        let mut tuple = lo.clone();
        'tuples: loop {
            if self.admissible(&tuple) {
                self.coords[x] = tuple.clone();
                self.assigned[x] = true;
                self.occupied.insert(&tuple);
                if self.forward_check(x) {
                    if let Some(found) = self.assign(depth + 1) {
                        return Some(found);
                    }
                }
                self.occupied.remove(&tuple);
                self.assigned[x] = false;
            }
            // advance to the next tuple in the box, lexicographically
            let mut i = self.k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if tuple[i] < hi[i] {
                    tuple[i] += 1;
                    tuple[(i + 1)..].copy_from_slice(&lo[(i + 1)..]);
                    continue 'tuples;
                }
            }
        }
    }

    /// Per-dimension bounds for the non-landmark `x`: landmark caps plus
    /// the Chebyshev balls of its already-assigned neighbours. Coordinate 0
    /// is reserved for the landmarks themselves.
    fn ranges(&self, x: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut lo = vec![1u32; self.k];
        let mut hi = self.cap[x].clone();
        for y in self.g.neighbours(x) {
            if self.assigned[y] {
                for i in 0..self.k {
                    lo[i] = lo[i].max(self.coords[y][i].saturating_sub(1));
                    hi[i] = hi[i].min(self.coords[y][i] + 1);
                }
            }
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            None
        } else {
            Some((lo, hi))
        }
    }

    /// Occupancy plus the landmark-ball condition
    /// `max_j |tuple[j] - row_i[j]| <= tuple[i]` for every landmark row.
    fn admissible(&self, tuple: &[u32]) -> bool {
        if self.occupied.contains(tuple) {
            return false;
        }
        for (i, &wi) in self.w.iter().enumerate() {
            let row = &self.coords[wi];
            let cheb = row
                .iter()
                .zip(tuple)
                .map(|(&a, &b)| a.abs_diff(b))
                .max()
                .unwrap();
            if cheb > tuple[i] {
                return false;
            }
        }
        true
    }

    /// After placing `x`, every unassigned neighbour must still have a
    /// non-empty coordinate box.
    fn forward_check(&self, x: usize) -> bool {
        for u in self.g.neighbours(x) {
            if !self.assigned[u] && self.ranges(u).is_none() {
                return false;
            }
        }
        true
    }
}

enum Occupancy {
    Dense { cells: Vec<bool>, side: u64 },
    Sparse { cells: std::collections::HashSet<u64>, side: u64 },
}

impl Occupancy {
    fn new(side: usize, k: usize) -> Occupancy {
        let total = (side as u64).checked_pow(k as u32);
        match total {
            Some(t) if t <= 1 << 22 => Occupancy::Dense {
                cells: vec![false; t as usize],
                side: side as u64,
            },
            _ => Occupancy::Sparse {
                cells: Default::default(),
                side: side as u64,
            },
        }
    }

    fn index(side: u64, tuple: &[u32]) -> u64 {
        tuple.iter().fold(0u64, |acc, &c| acc * side + c as u64)
    }

    fn contains(&self, tuple: &[u32]) -> bool {
        match self {
            Occupancy::Dense { cells, side } => cells[Self::index(*side, tuple) as usize],
            Occupancy::Sparse { cells, side } => cells.contains(&Self::index(*side, tuple)),
        }
    }

    fn insert(&mut self, tuple: &[u32]) -> bool {
        match self {
            Occupancy::Dense { cells, side } => {
                let i = Self::index(*side, tuple) as usize;
                let fresh = !cells[i];
                cells[i] = true;
                fresh
            }
            Occupancy::Sparse { cells, side } => cells.insert(Self::index(*side, tuple)),
        }
    }

    fn remove(&mut self, tuple: &[u32]) {
        match self {
            Occupancy::Dense { cells, side } => {
                cells[Self::index(*side, tuple) as usize] = false;
            }
            Occupancy::Sparse { cells, side } => {
                cells.remove(&Self::index(*side, tuple));
            }
        }
    }
}
