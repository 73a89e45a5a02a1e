//! Tree anatomy — major vertices, limbs, core, branches — and the
//! closed-form tree dimension with a constrained basis constructor.
//!
//! A *major vertex* has degree at least 3. A leaf is a *terminal vertex* of
//! the major vertex it is strictly closest to; in a tree that major is the
//! first one met on the walk inward from the leaf, so the assignment is
//! always unique. The *limb* for a terminal leaf is the path from the
//! major's neighbour out to the leaf, and the *core* is what remains after
//! deleting all limbs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// One limb: the anchor major vertex plus the path hanging off it, listed
/// from the anchor's neighbour to the leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limb {
    pub anchor: usize,
    pub path: Vec<usize>,
}

impl Limb {
    /// The terminal leaf this limb ends in.
    pub fn leaf(&self) -> usize {
        *self.path.last().expect("limbs are never empty")
    }

    /// The vertex adjacent to the anchor.
    pub fn first(&self) -> usize {
        self.path[0]
    }
}

/// Full decoration of a non-path tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeAnatomy {
    pub majors: Vec<usize>,
    pub terminal_degree: BTreeMap<usize, u32>,
    pub exterior_majors: Vec<usize>,
    pub limbs: Vec<Limb>,
    pub core_vertices: Vec<usize>,
}

impl TreeAnatomy {
    pub fn ter(&self, v: usize) -> u32 {
        self.terminal_degree.get(&v).copied().unwrap_or(0)
    }

    /// Limbs anchored at `v`, in the anatomy's deterministic order.
    pub fn limbs_at(&self, v: usize) -> Vec<&Limb> {
        self.limbs.iter().filter(|l| l.anchor == v).collect()
    }
}

/// True iff connected with exactly `n - 1` edges.
pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.is_connected() && g.edge_count() == g.n() - 1
}

/// True iff the graph is a path (including the trivial one).
pub fn is_path(g: &Graph) -> bool {
    is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// Computes the anatomy of a tree that is not a path.
pub fn tree_anatomy(t: &Graph) -> Result<TreeAnatomy> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    if is_path(t) {
        return Err(Error::PathTree);
    }
    let majors: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();

    let mut terminal_degree: BTreeMap<usize, u32> = BTreeMap::new();
    let mut limbs = Vec::new();
    for leaf in (0..t.n()).filter(|&v| t.degree(v) == 1) {
        // walk inward until the first major vertex; it is the unique
        // nearest one, and everything before it has degree 2
        let mut path = vec![leaf];
        let mut prev = leaf;
        let mut cur = t.neighbours(leaf).next().expect("leaf has a neighbour");
        while t.degree(cur) < 3 {
            path.push(cur);
            let next = t
                .neighbours(cur)
                .find(|&x| x != prev)
                .expect("interior vertex of a non-path tree leads to a major");
            prev = cur;
            cur = next;
        }
        path.reverse();
        *terminal_degree.entry(cur).or_insert(0) += 1;
        limbs.push(Limb { anchor: cur, path });
    }
    limbs.sort_by_key(|l| (l.anchor, l.first()));

    let mut on_limb = vec![false; t.n()];
    for l in &limbs {
        for &v in &l.path {
            on_limb[v] = true;
        }
    }
    let core_vertices: Vec<usize> = (0..t.n()).filter(|&v| !on_limb[v]).collect();
    let exterior_majors: Vec<usize> = majors
        .iter()
        .copied()
        .filter(|v| terminal_degree.contains_key(v))
        .collect();

    Ok(TreeAnatomy {
        majors,
        terminal_degree,
        exterior_majors,
        limbs,
        core_vertices,
    })
}

/// The branches of `g` at `x`: one vertex set per component of `g - x`,
/// each including `x` itself. Ordered by smallest member.
pub fn branches(g: &Graph, x: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    seen[x] = true;
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for u in g.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.push(x);
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// Closed-form metric dimension of a tree: 1 for paths, otherwise the sum
/// of `ter(v) - 1` over the exterior major vertices.
pub fn tree_metric_dimension(t: &Graph) -> Result<u32> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    if is_path(t) {
        return Ok(1);
    }
    let anatomy = tree_anatomy(t)?;
    Ok(anatomy
        .exterior_majors
        .iter()
        .map(|&v| anatomy.ter(v) - 1)
        .sum())
}

/// Builds a minimum resolving set for a non-path tree that contains all of
/// `required`, by taking one vertex from all but one limb at every exterior
/// major vertex.
///
/// Each required vertex must lie on a limb, required vertices must occupy
/// distinct limbs, and at most `ter(v) - 1` limbs of any one major may be
/// used. Free choices are canonical: a free limb contributes the vertex
/// adjacent to its anchor, and the skipped limb is the highest-ordered limb
/// not carrying a required vertex.
pub fn tree_basis_with(t: &Graph, required: &[usize]) -> Result<Vec<usize>> {
    let anatomy = tree_anatomy(t)?;

    // map each required vertex to its limb
    let mut required_limb: Vec<Option<usize>> = vec![None; anatomy.limbs.len()];
    for &r in required {
        let mut found = false;
        for (i, limb) in anatomy.limbs.iter().enumerate() {
            if limb.path.contains(&r) {
                if required_limb[i].is_some() {
                    return Err(Error::BasisQuota(format!(
                        "vertices {} and {} lie on the same limb",
                        required_limb[i].unwrap(),
                        r
                    )));
                }
                required_limb[i] = Some(r);
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::BasisQuota(format!("vertex {} lies on no limb", r)));
        }
    }

    let mut basis = Vec::new();
    for &v in &anatomy.exterior_majors {
        let limb_ids: Vec<usize> = (0..anatomy.limbs.len())
            .filter(|&i| anatomy.limbs[i].anchor == v)
            .collect();
        let used: Vec<usize> = limb_ids
            .iter()
            .copied()
            .filter(|&i| required_limb[i].is_some())
            .collect();
        if used.len() + 1 > limb_ids.len() {
            return Err(Error::BasisQuota(format!(
                "major {} has {} required limbs but terminal degree {}",
                v,
                used.len(),
                limb_ids.len()
            )));
        }
        let skip = *limb_ids
            .iter()
            .rev()
            .find(|i| required_limb[**i].is_none())
            .expect("quota check leaves a free limb");
        for &i in &limb_ids {
            if i == skip {
                continue;
            }
            match required_limb[i] {
                Some(r) => basis.push(r),
                None => basis.push(anatomy.limbs[i].first()),
            }
        }
    }
    basis.sort_unstable();
    Ok(basis)
}

/// Unique path between two vertices of a tree.
pub(crate) fn tree_path(t: &Graph, a: usize, b: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.n()];
    let mut stack = vec![a];
    let mut seen = vec![false; t.n()];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        for u in t.neighbours(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Induced subgraph on `keep` (ascending), plus the map new-id -> old-id.
pub(crate) fn induced_subgraph(g: &Graph, keep: &[usize]) -> (Graph, Vec<usize>) {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for &v in keep {
        for u in g.neighbours(v) {
            if u > v && index[u] != usize::MAX {
                edges.push((index[v], index[u]));
            }
        }
    }
    (
        Graph::new(keep.len(), &edges).expect("induced subgraph is simple"),
        keep.to_vec(),
    )
}
