//! Exact threshold dimension: the minimum metric dimension over all
//! graphs obtained by adding edges.
//!
//! Two independent exact methods are provided and cross-checked in the
//! test suite: a brute-force sweep over all complement-edge subsets, and a
//! search for landmark-resolved lattice embeddings, which decides "does
//! some edge addition make W resolving?" without enumerating supergraphs.
//! The star-method constructor realises the sharp `g(n)` upper bound for
//! trees by wiring unassigned vertices to distinct landmark subsets.

use serde::Serialize;

use itertools::Itertools;

use crate::embedding::{exists_w_resolved_embedding, induced_supergraph};
use crate::error::Error;
use crate::graph::Graph;
use crate::metric::{self, hernando_order_bound, log_lower_bound};
use crate::tree::{is_path, is_tree, tree_basis_with, tree_metric_dimension};
use crate::Result;

/// Per-candidate progress callback for the long-running searches.
pub type Progress<'a> = Option<&'a (dyn Fn(&str) + Sync)>;

type Witness = (Vec<(usize, usize)>, Vec<usize>);
type LevelHit = (Vec<usize>, Option<crate::embedding::LatticeEmbedding>);

fn report(progress: Progress, line: impl FnOnce() -> String) {
    if let Some(f) = progress {
        f(&line());
    }
}

/// A set of added edges plus a resolving set claimed for the augmented
/// graph. Plans are verified on construction, so holding one is holding a
/// checked certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeAdditionPlan {
    added_edges: Vec<(usize, usize)>,
    claimed_resolving_set: Vec<usize>,
    claimed_dimension: u32,
}

impl EdgeAdditionPlan {
    /// Builds a plan after checking that every added edge is a non-edge of
    /// `g` and that the claimed set resolves `g` plus the additions.
    pub fn verified(g: &Graph, added: &[(usize, usize)], w: &[usize]) -> Result<EdgeAdditionPlan> {
        let h = g
            .add_edges(added)
            .map_err(|e| Error::PlanVerification(e.to_string()))?;
        match metric::is_resolving(&h, w)? {
            Some(_) => {
                let mut added: Vec<_> = added
                    .iter()
                    .map(|&(u, v)| (u.min(v), u.max(v)))
                    .collect();
                added.sort_unstable();
                let mut w = w.to_vec();
                w.sort_unstable();
                Ok(EdgeAdditionPlan {
                    claimed_dimension: w.len() as u32,
                    claimed_resolving_set: w,
                    added_edges: added,
                })
            }
            None => Err(Error::PlanVerification(format!(
                "{:?} does not resolve the augmented graph",
                w
            ))),
        }
    }

    pub fn added_edges(&self) -> &[(usize, usize)] {
        &self.added_edges
    }

    pub fn claimed_resolving_set(&self) -> &[usize] {
        &self.claimed_resolving_set
    }

    pub fn claimed_dimension(&self) -> u32 {
        self.claimed_dimension
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plan serializes")
    }
}

/// Which exact method produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "supergraph-enumeration")]
    SupergraphEnumeration,
    #[serde(rename = "embedding-search")]
    EmbeddingSearch,
}

/// What rules out a resolving set of size `tau - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum LowerBoundProof {
    /// `tau` already equals a proven lower bound.
    #[serde(rename = "bound")]
    Bound { name: String, value: u32 },
    /// Every landmark set of size `tau - 1` was searched and failed.
    #[serde(rename = "embedding-exhaustion")]
    EmbeddingExhaustion { k: u32, candidates: u64 },
    /// Every complement-edge subset was examined.
    #[serde(rename = "supergraph-exhaustion")]
    SupergraphExhaustion { examined: u64 },
}

/// An exact threshold-dimension answer: the value, a witness supergraph
/// with its resolving set, and the reason no smaller witness exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdCertificate {
    pub tau: u32,
    pub witness_edges: Vec<(usize, usize)>,
    pub witness_basis: Vec<usize>,
    pub method: Method,
    pub lower_bound_proof: LowerBoundProof,
    /// candidates examined: supergraphs, or landmark-set searches
    pub examined: u64,
}

impl ThresholdCertificate {
    fn verified(
        g: &Graph,
        tau: u32,
        witness_edges: Vec<(usize, usize)>,
        witness_basis: Vec<usize>,
        method: Method,
        lower_bound_proof: LowerBoundProof,
        examined: u64,
    ) -> ThresholdCertificate {
        let plan = EdgeAdditionPlan::verified(g, &witness_edges, &witness_basis)
            .expect("threshold witness must verify");
        assert_eq!(plan.claimed_dimension(), tau);
        ThresholdCertificate {
            tau,
            witness_edges: plan.added_edges,
            witness_basis: plan.claimed_resolving_set,
            method,
            lower_bound_proof,
            examined,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

/// Least `d >= 0` with `2^d + d >= n`; the sharp upper bound on the
/// threshold dimension of any tree of order `n`.
pub fn g_function(n: u64) -> u32 {
    assert!(n >= 1);
    (0..)
        .find(|&d| (1u128 << d) + d as u128 >= n as u128)
        .expect("g(n) exists for every n")
}

/// Sound lower bounds on the threshold dimension, maximised.
///
/// * the trivial bound 1;
/// * 2 unless the graph is a path (a spanning supergraph of dimension 1 is
///   a path, and a connected spanning subgraph of a path is the path);
/// * the log bound: supergraphs keep the order and cannot raise distances
///   above `diam(G)`, so `(diam(G)+1)^tau >= n`;
/// * the neighbourhood-ball bound: balls only grow under edge addition, so
///   some vertex must fit `|B_k(w)| <= 1 + sum_{j<=k} (2j+1)^(tau-1)`;
/// * the order bound: every supergraph has diameter at most `diam(G)`, and
///   the maximum order of a diameter-D dimension-b graph is monotone in D.
pub fn tau_lower_bound(g: &Graph) -> Result<(u32, &'static str)> {
    let n = g.n();
    let d = g.diameter()?;
    let mut best = (1, "trivial");
    let mut take = |value: u32, name: &'static str| {
        if value > best.0 {
            best = (value, name);
        }
    };
    if !is_path(g) {
        take(2, "non-path");
    }
    if n >= 2 && d >= 1 {
        take(log_lower_bound(n as u64, d as u64), "log-order");
        take(ball_lower_bound(g, d), "neighbourhood-ball");
        take(hernando_tau_lower_bound_inner(n, d), "hernando-order");
    }
    Ok(best)
}

/// Least `b` with `hernando_order_bound(diam(G), b) >= n`; valid for the
/// threshold dimension because edge additions only shrink the diameter and
/// the order bound is monotone in the diameter.
pub fn hernando_tau_lower_bound(g: &Graph) -> Result<u32> {
    let d = g.diameter()?;
    if g.n() < 2 {
        return Ok(1);
    }
    Ok(hernando_tau_lower_bound_inner(g.n(), d.max(1)))
}

fn hernando_tau_lower_bound_inner(n: usize, d: u32) -> u32 {
    (1..)
        .find(|&b| hernando_order_bound(d, b) >= n as u128)
        .expect("the order bound is unbounded in b")
}

/// Smallest `b` such that some vertex's distance-ball profile fits under
/// the cumulative ring caps `1 + sum_{j=1..k} (2j+1)^(b-1)`.
fn ball_lower_bound(g: &Graph, d: u32) -> u32 {
    let balls: Vec<Vec<u128>> = (0..g.n())
        .map(|v| {
            let mut acc = 1u128;
            (1..=d)
                .map(|k| {
                    acc += g.k_neighbourhood(v, k).expect("valid vertex").len() as u128;
                    acc
                })
                .collect()
        })
        .collect();
    for b in 1..=g.n() as u32 {
        let caps: Vec<u128> = {
            let mut acc = 1u128;
            (1..=d)
                .map(|k| {
                    acc = acc.saturating_add((2 * k as u128 + 1).saturating_pow(b - 1));
                    acc
                })
                .collect()
        };
        if balls
            .iter()
            .any(|ball| ball.iter().zip(&caps).all(|(&x, &cap)| x <= cap))
        {
            return b;
        }
    }
    unreachable!("caps exceed n for b = n")
}

/// Exact threshold dimension by exhaustive enumeration of complement-edge
/// subsets, in subset size order with lexicographic ties.
///
/// The incumbent witness is replaced only by a strictly smaller dimension,
/// so the reported witness is the fewest-edges, lexicographically-first
/// one. The sweep short-circuits once the incumbent meets the proven lower
/// bound. Refuses graphs with more complement edges than `cap`.
pub fn threshold_via_supergraphs(
    g: &Graph,
    cap: usize,
    progress: Progress,
) -> Result<ThresholdCertificate> {
    if g.n() < 2 {
        return Err(Error::Precondition("threshold solver needs n >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let comp = g.complement_edges();
    if comp.len() > cap {
        return Err(Error::CapExceeded {
            cap,
            size: comp.len(),
        });
    }
    let (floor, floor_name) = tau_lower_bound(g)?;
    let mut best_beta = usize::MAX;
    let mut best: Option<Witness> = None;
    let mut examined: u64 = 0;
    'sweep: for size in 0..=comp.len() {
        report(progress, || {
            format!("sweep: subsets of {} added edges, best so far {:?}", size, best.as_ref().map(|_| best_beta))
        });
        for subset in comp.iter().copied().combinations(size) {
            examined += 1;
            let h = g.add_edges(&subset).expect("complement edges are fresh");
            let dm = h.distances();
            if let Some(basis) = metric::basis_below(&dm, best_beta) {
                report(progress, || {
                    format!("sweep: {:?} drops dimension to {}", subset, basis.len())
                });
                best_beta = basis.len();
                best = Some((subset, basis));
                if best_beta as u32 == floor {
                    break 'sweep;
                }
            }
        }
    }
    let (witness_edges, witness_basis) = best.expect("the empty addition always answers");
    let tau = best_beta as u32;
    let proof = if tau == floor {
        LowerBoundProof::Bound {
            name: floor_name.into(),
            value: floor,
        }
    } else {
        LowerBoundProof::SupergraphExhaustion { examined }
    };
    Ok(ThresholdCertificate::verified(
        g,
        tau,
        witness_edges,
        witness_basis,
        Method::SupergraphEnumeration,
        proof,
        examined,
    ))
}

/// Exact threshold dimension via the embedding search: for each landmark
/// count `k` from the proven lower bound upward, every vertex subset of
/// size `k` is tried in lexicographic order; the first set for which a
/// landmark-resolved embedding exists gives `tau = k` together with the
/// witness supergraph the embedding induces.
pub fn threshold_via_embeddings(g: &Graph, progress: Progress) -> Result<ThresholdCertificate> {
    threshold_via_embeddings_jobs(g, 1, progress)
}

/// [`threshold_via_embeddings`] with `jobs` worker threads evaluating
/// landmark candidates in parallel. The reported certificate is identical
/// for every job count: candidates are indexed in lexicographic order and
/// the lowest-index success wins.
pub fn threshold_via_embeddings_jobs(
    g: &Graph,
    jobs: usize,
    progress: Progress,
) -> Result<ThresholdCertificate> {
    if g.n() < 2 {
        return Err(Error::Precondition("threshold solver needs n >= 2".into()));
    }
    let dm = g.distances();
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let side = g.diameter()? as usize + 1;
    let (floor, floor_name) = tau_lower_bound(g)?;
    let mut examined: u64 = 0;
    let mut last_exhausted: Option<(u32, u64)> = None;
    for k in floor as usize..g.n() {
        let mut count: u64 = 0;
        let mut hit: Option<LevelHit> = None;
        if jobs <= 1 {
            for w in (0..g.n()).combinations(k) {
                count += 1;
                if dm.resolves(&w) {
                    report(progress, || format!("k={}: {:?} already resolves", k, w));
                    hit = Some((w, None));
                    break;
                }
                match exists_w_resolved_embedding(g, &w, side)? {
                    Some(emb) => {
                        report(progress, || format!("k={}: {:?} sat", k, w));
                        hit = Some((w, Some(emb)));
                        break;
                    }
                    None => report(progress, || format!("k={}: {:?} unsat", k, w)),
                }
            }
        } else {
            let candidates: Vec<Vec<usize>> = (0..g.n()).combinations(k).collect();
            let (evaluated, found) = parallel_level(g, &dm, side, &candidates, jobs, progress);
            count = evaluated;
            hit = found;
        }
        examined += count;
        match hit {
            Some((w, emb)) => {
                let witness_edges = match emb {
                    None => Vec::new(),
                    Some(emb) => {
                        let h = induced_supergraph(g, &emb)?;
                        h.edges()
                            .into_iter()
                            .filter(|&(u, v)| !g.has_edge(u, v))
                            .collect()
                    }
                };
                let tau = k as u32;
                let proof = if tau == floor {
                    LowerBoundProof::Bound {
                        name: floor_name.into(),
                        value: floor,
                    }
                } else {
                    let (pk, pc) = last_exhausted.expect("a level below tau was exhausted");
                    LowerBoundProof::EmbeddingExhaustion {
                        k: pk,
                        candidates: pc,
                    }
                };
                return Ok(ThresholdCertificate::verified(
                    g,
                    tau,
                    witness_edges,
                    w,
                    Method::EmbeddingSearch,
                    proof,
                    examined,
                ));
            }
            None => {
                last_exhausted = Some((k as u32, count));
            }
        }
    }
    unreachable!("tau is at most beta, and the full vertex set minus one resolves")
}

/// Evaluates one level of landmark candidates on `jobs` threads; returns
/// the candidate count up to and including the lowest-index success (the
/// same number the sequential loop reports, independent of scheduling)
/// together with that success.
fn parallel_level(
    g: &Graph,
    dm: &crate::graph::DistanceMatrix,
    side: usize,
    candidates: &[Vec<usize>],
    jobs: usize,
    progress: Progress,
) -> (u64, Option<LevelHit>) {
    use std::sync::atomic::{AtomicUsize, Ordering};

    let next = AtomicUsize::new(0);
    let found_at = AtomicUsize::new(usize::MAX);
    let results = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                // indices below a recorded success must still be drained:
                // a lower-index candidate may succeed as well and wins
                if i >= candidates.len() || i > found_at.load(Ordering::SeqCst) {
                    break;
                }
                let w = &candidates[i];
                let outcome = if dm.resolves(w) {
                    Some(None)
                } else {
                    exists_w_resolved_embedding(g, w, side)
                        .expect("candidates are valid landmark sets")
                        .map(Some)
                };
                match outcome {
                    Some(emb) => {
                        report(progress, || format!("{:?} sat", w));
                        found_at.fetch_min(i, Ordering::SeqCst);
                        results.lock().unwrap().push((i, w.clone(), emb));
                    }
                    None => report(progress, || format!("{:?} unsat", w)),
                }
            });
        }
    });
    let mut results = results.into_inner().unwrap();
    results.sort_by_key(|(i, _, _)| *i);
    match results.into_iter().next() {
        Some((i, w, emb)) => (i as u64 + 1, Some((w, emb))),
        None => (candidates.len() as u64, None),
    }
}

/// Constructive `g(n)` upper bound for trees.
///
/// If the tree's dimension is already at most `g(n)`, the plan adds
/// nothing and claims a minimum basis. Otherwise the plan's landmarks are
/// the `g(n)` lowest-id leaves, and every vertex with no landmark
/// neighbour is wired to a distinct unused landmark subset (subsets
/// ordered by size then lexicographically), making all landmark
/// neighbourhoods distinct. Plans are verified before being returned.
pub fn star_method(t: &Graph) -> Result<EdgeAdditionPlan> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    if t.n() < 2 {
        return Err(Error::Precondition("star method needs n >= 2".into()));
    }
    let n = t.n();
    let beta = tree_metric_dimension(t)?;
    let gn = g_function(n as u64);
    if beta <= gn {
        let basis = if is_path(t) {
            let endpoint = (0..n).find(|&v| t.degree(v) == 1).expect("paths have ends");
            vec![endpoint]
        } else {
            tree_basis_with(t, &[])?
        };
        return EdgeAdditionPlan::verified(t, &[], &basis);
    }

    let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    assert!(
        leaves.len() > gn as usize,
        "a tree of dimension above g(n) has more than g(n) leaves"
    );
    let w: Vec<usize> = leaves[..gn as usize].to_vec();
    let w_mask = |x: usize| -> u64 {
        w.iter()
            .enumerate()
            .filter(|&(_, &wi)| t.has_edge(x, wi))
            .fold(0u64, |m, (i, _)| m | 1 << i)
    };

    let mut taken_masks: Vec<u64> = Vec::new();
    let mut x2: Vec<usize> = Vec::new();
    for x in (0..n).filter(|x| !w.contains(x)) {
        let mask = w_mask(x);
        if mask == 0 {
            x2.push(x);
        } else {
            // landmark neighbourhoods of attached vertices are pairwise
            // disjoint, because the landmarks are leaves
            assert!(
                taken_masks.iter().all(|&m| m & mask == 0),
                "landmark neighbourhoods of attached vertices must be disjoint"
            );
            taken_masks.push(mask);
        }
    }

    // hand out unused subsets of W, ordered by size then lexicographically
    let mut pool = (0..=w.len())
        .flat_map(|s| (0..w.len()).combinations(s))
        .map(|ix| ix.iter().fold(0u64, |m, &i| m | 1 << i))
        .filter(|m| !taken_masks.contains(m));
    let mut added = Vec::new();
    for &x in &x2 {
        let mask = pool
            .next()
            .expect("the power set of W covers all unattached vertices");
        for (i, &wi) in w.iter().enumerate() {
            if mask & (1 << i) != 0 {
                added.push((x, wi));
            }
        }
    }
    Ok(EdgeAdditionPlan::verified(t, &added, &w)
        .expect("the star construction always yields a resolving set"))
}

/// True iff the graph's metric dimension equals its threshold dimension.
pub fn is_irreducible(g: &Graph) -> Result<bool> {
    let beta = metric::metric_dimension_exact(g)?.beta;
    let tau = threshold_via_embeddings(g, None)?.tau;
    debug_assert!(tau <= beta);
    Ok(beta == tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};

    fn star(leaves: usize) -> Graph {
        make(&FamilySpec::Star { leaves }).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn g_function_values() {
        assert_eq!(g_function(1), 0);
        assert_eq!(g_function(4), 2);
        assert_eq!(g_function(6), 2);
        assert_eq!(g_function(7), 3);
        assert_eq!(g_function(9), 3);
        assert_eq!(g_function(11), 3);
        assert_eq!(g_function(12), 4);
    }

    #[test]
    fn tau_floor_examples() {
        assert_eq!(tau_lower_bound(&star(6)).unwrap(), (3, "hernando-order"));
        let p5 = make(&FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!(tau_lower_bound(&p5).unwrap().0, 1);
        assert_eq!(hernando_tau_lower_bound(&star(6)).unwrap(), 3);
        assert_eq!(hernando_tau_lower_bound(&p5).unwrap(), 1);
        let sub8 = make(&FamilySpec::SubdividedStar {
            legs: vec![2; 8],
        })
        .unwrap();
        assert_eq!(hernando_tau_lower_bound(&sub8).unwrap(), 2);
    }

    #[test]
    fn complete_graph_threshold_is_trivial() {
        let k5 = make(&FamilySpec::Complete { n: 5 }).unwrap();
        let cert = threshold_via_supergraphs(&k5, 22, None).unwrap();
        assert_eq!(cert.tau, 4);
        assert!(cert.witness_edges.is_empty());
        assert_eq!(cert.examined, 1);
    }

    #[test]
    fn star6_threshold_by_both_methods() {
        let g = star(6);
        let sweep = threshold_via_supergraphs(&g, 22, None).unwrap();
        let embed = threshold_via_embeddings(&g, None).unwrap();
        assert_eq!(sweep.tau, 3);
        assert_eq!(embed.tau, 3);
        assert_eq!(sweep.method, Method::SupergraphEnumeration);
        assert_eq!(embed.method, Method::EmbeddingSearch);
    }

    #[test]
    fn pendant_clique_graph_needs_two_specific_edges() {
        let g = make(&FamilySpec::Figure4).unwrap();
        let cert = threshold_via_supergraphs(&g, 22, None).unwrap();
        assert_eq!(cert.tau, 2);
        assert_eq!(cert.witness_edges, vec![(0, 4), (0, 5)]);
        assert_eq!(cert.witness_basis, vec![4, 5]);
    }

    #[test]
    fn cycle_is_its_own_witness() {
        let cert = threshold_via_embeddings(&cycle(6), None).unwrap();
        assert_eq!(cert.tau, 2);
        assert!(cert.witness_edges.is_empty());
    }

    #[test]
    fn double_broom_drops_to_two() {
        let l9 = make(&FamilySpec::L3n { n: 3 }).unwrap();
        let cert = threshold_via_embeddings(&l9, None).unwrap();
        assert_eq!(cert.tau, 2);
    }

    #[test]
    fn parallel_certificates_match_sequential() {
        for g in [star(6), cycle(5), make(&FamilySpec::L3n { n: 3 }).unwrap()] {
            let a = threshold_via_embeddings(&g, None).unwrap();
            let b = threshold_via_embeddings_jobs(&g, 4, None).unwrap();
            assert_eq!(a.tau, b.tau);
            assert_eq!(a.witness_basis, b.witness_basis);
            assert_eq!(a.witness_edges, b.witness_edges);
        }
    }

    #[test]
    fn cap_refusal() {
        let p8 = make(&FamilySpec::Path { n: 8 }).unwrap();
        assert!(matches!(
            threshold_via_supergraphs(&p8, 5, None),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn star_method_examples() {
        // dimension 1 <= g(4) = 2: nothing to add
        let p4 = make(&FamilySpec::Path { n: 4 }).unwrap();
        let plan = star_method(&p4).unwrap();
        assert!(plan.added_edges().is_empty());
        assert_eq!(plan.claimed_dimension(), 1);

        for leaves in [6usize, 8] {
            let t = star(leaves);
            let plan = star_method(&t).unwrap();
            assert_eq!(plan.claimed_dimension(), g_function(leaves as u64 + 1));
        }
    }

    #[test]
    fn star_method_sharpness_small() {
        // tau(K_{1,5}) = g(6) = 2 and tau(K_{1,6}) = g(7) = 3
        assert_eq!(threshold_via_embeddings(&star(5), None).unwrap().tau, 2);
        assert_eq!(threshold_via_embeddings(&star(6), None).unwrap().tau, 3);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&make(&FamilySpec::Path { n: 6 }).unwrap()).unwrap());
        assert!(is_irreducible(&cycle(5)).unwrap());
        let k23 = make(&FamilySpec::CompleteBipartite { s: 2, t: 3 }).unwrap();
        assert!(!is_irreducible(&k23).unwrap());
    }

    #[test]
    fn tau_never_exceeds_beta_and_dominates_bounds() {
        for g in [
            star(4),
            star(5),
            cycle(4),
            cycle(7),
            make(&FamilySpec::Figure4).unwrap(),
            make(&FamilySpec::L3n { n: 2 }).unwrap(),
            make(&FamilySpec::CompleteBipartite { s: 2, t: 3 }).unwrap(),
        ] {
            let beta = metric::metric_dimension_exact(&g).unwrap().beta;
            let cert = threshold_via_embeddings(&g, None).unwrap();
            assert!(cert.tau <= beta);
            assert!(cert.tau >= tau_lower_bound(&g).unwrap().0);
        }
    }

    #[test]
    fn methods_agree_on_a_mixed_corpus() {
        use rand::{Rng, SeedableRng};
        let mut corpus = vec![
            star(4),
            star(5),
            star(6),
            cycle(4),
            cycle(6),
            make(&FamilySpec::Path { n: 5 }).unwrap(),
            make(&FamilySpec::Figure4).unwrap(),
            make(&FamilySpec::L3n { n: 2 }).unwrap(),
            make(&FamilySpec::CompleteBipartite { s: 2, t: 3 }).unwrap(),
            make(&FamilySpec::CompleteBipartite { s: 3, t: 3 }).unwrap(),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        while corpus.len() < 40 {
            let n = rng.random_range(3..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if g.is_connected() {
                corpus.push(g);
            }
        }
        for g in &corpus {
            let sweep = threshold_via_supergraphs(g, 22, None).unwrap();
            let embed = threshold_via_embeddings(g, None).unwrap();
            assert_eq!(sweep.tau, embed.tau, "graph {:?}", g);
        }
    }

    #[test]
    fn spanning_subgraph_threshold_bounds_dimension() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let mut done = 0;
        while done < 20 {
            let n = rng.random_range(4..=7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.6) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            // carve a random connected spanning subgraph
            let mut kept = g.edges();
            let mut i = 0;
            while i < kept.len() {
                if rng.random_bool(0.4) {
                    let mut trial = kept.clone();
                    trial.remove(i);
                    let sub = Graph::new(n, &trial).unwrap();
                    if sub.is_connected() {
                        kept = trial;
                        continue;
                    }
                }
                i += 1;
            }
            let sub = Graph::new(n, &kept).unwrap();
            let beta = metric::metric_dimension_exact(&g).unwrap().beta;
            let cert = threshold_via_embeddings(&sub, None).unwrap();
            assert!(cert.tau <= beta, "subgraph {:?} of {:?}", sub, g);
            done += 1;
        }
    }

    #[test]
    fn certificate_json_mentions_method_and_proof() {
        let cert = threshold_via_embeddings(&cycle(6), None).unwrap();
        let json = cert.to_json();
        assert!(json.contains("\"method\":\"embedding-search\""));
        assert!(json.contains("\"lower_bound_proof\""));
        assert!(json.contains("\"tau\":2"));
    }
}
