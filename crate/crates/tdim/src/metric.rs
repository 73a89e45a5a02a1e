//! Exact metric dimension with certificates, and the classical lower
//! bounds on it.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{DistanceMatrix, Graph};
use crate::Result;

/// Witness that an ordered landmark list resolves a graph: the distance
/// vector of every vertex, in landmark order. The vectors being pairwise
/// distinct *is* the resolving property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvingCertificate {
    #[serde(rename = "W")]
    pub w: Vec<usize>,
    pub vectors: BTreeMap<usize, Vec<u32>>,
}

impl ResolvingCertificate {
    fn build(dm: &DistanceMatrix, w: &[usize]) -> ResolvingCertificate {
        let vectors = (0..dm.n())
            .map(|v| {
                let vec = w
                    .iter()
                    .map(|&wi| dm.get(wi, v).expect("connected graph"))
                    .collect();
                (v, vec)
            })
            .collect();
        ResolvingCertificate {
            w: w.to_vec(),
            vectors,
        }
    }
}

fn check_landmarks(g: &Graph, w: &[usize]) -> Result<()> {
    if w.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    for &v in w {
        if v >= g.n() {
            return Err(Error::InvalidVertex { vertex: v, n: g.n() });
        }
    }
    if w.iter().duplicates().next().is_some() {
        return Err(Error::RepeatedLandmark);
    }
    Ok(())
}

/// Checks whether `w` resolves the connected graph `g`; on success returns
/// the certificate (landmarks sorted ascending).
pub fn is_resolving(g: &Graph, w: &[usize]) -> Result<Option<ResolvingCertificate>> {
    check_landmarks(g, w)?;
    let dm = g.distances();
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut w = w.to_vec();
    w.sort_unstable();
    if dm.resolves(&w) {
        Ok(Some(ResolvingCertificate::build(&dm, &w)))
    } else {
        Ok(None)
    }
}

/// Result of the exact solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricDimension {
    pub beta: u32,
    pub basis: Vec<usize>,
    pub certificate: ResolvingCertificate,
}

/// Exact metric dimension by exhaustive search.
///
/// Subsets are enumerated by increasing size and, within a size, in
/// lexicographic order on the sorted vertex lists; the first resolving set
/// found is the reported basis, so results are deterministic.
pub fn metric_dimension_exact(g: &Graph) -> Result<MetricDimension> {
    if g.n() < 2 {
        return Err(Error::Precondition("exact solver needs n >= 2".into()));
    }
    let dm = g.distances();
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let basis = dimension_basis(&dm).expect("a connected graph has a resolving set");
    Ok(MetricDimension {
        beta: basis.len() as u32,
        certificate: ResolvingCertificate::build(&dm, &basis),
        basis,
    })
}

/// Lexicographically-first minimum resolving set, or `None` below `n >= 2`.
pub(crate) fn dimension_basis(dm: &DistanceMatrix) -> Option<Vec<usize>> {
    let n = dm.n();
    for b in 1..n {
        for w in (0..n).combinations(b) {
            if dm.resolves(&w) {
                return Some(w);
            }
        }
    }
    None
}

/// Like [`dimension_basis`] but only tries sizes `< limit`; used by the
/// supergraph sweep, which only cares whether a graph beats the incumbent.
pub(crate) fn basis_below(dm: &DistanceMatrix, limit: usize) -> Option<Vec<usize>> {
    let n = dm.n();
    for b in 1..limit.min(n) {
        for w in (0..n).combinations(b) {
            if dm.resolves(&w) {
                return Some(w);
            }
        }
    }
    None
}

/// Smallest `b` with `(d + 1)^b >= n`, in exact integer arithmetic.
///
/// Every graph of order `n` that contains a spanning subgraph of diameter
/// `d` needs at least this many landmarks.
pub fn log_lower_bound(n: u64, d: u64) -> u32 {
    assert!(n >= 2 && d >= 1);
    let base = (d + 1) as u128;
    let mut pow: u128 = 1;
    let mut b = 0;
    while pow < n as u128 {
        pow = pow.saturating_mul(base);
        b += 1;
    }
    b
}

/// `(2k+1)^(b-1)`, saturating; an upper bound on the size of the distance-k
/// neighbourhood of any landmark in a size-`b` resolving set.
fn ring_cap(k: u32, b: u32) -> u128 {
    (2 * k as u128 + 1).saturating_pow(b - 1)
}

/// True iff every landmark in `w` satisfies the neighbourhood bound: for
/// all `1 <= k <= diam(G)`, `|N_k(w)| <= (2k+1)^(|w|-1)`.
pub fn neighbourhood_bound_holds(g: &Graph, w: &[usize]) -> Result<bool> {
    check_landmarks(g, w)?;
    let d = g.diameter()?;
    let b = w.len() as u32;
    for &wi in w {
        for k in 1..=d {
            let count = g.k_neighbourhood(wi, k)?.len() as u128;
            if count > ring_cap(k, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest `b >= 1` such that at least one vertex satisfies the
/// neighbourhood bound for all `k`; a valid lower bound on the metric
/// dimension, since every landmark of a size-`b` resolving set must
/// individually satisfy the per-landmark bound.
pub fn neighbourhood_lower_bound(g: &Graph) -> Result<u32> {
    let d = g.diameter()?;
    let rings: Vec<Vec<u128>> = (0..g.n())
        .map(|v| {
            (1..=d)
                .map(|k| g.k_neighbourhood(v, k).expect("valid vertex").len() as u128)
                .collect()
        })
        .collect();
    for b in 1..=g.n() as u32 {
        let ok = rings.iter().any(|ring| {
            ring.iter()
                .zip(1..=d)
                .all(|(&count, k)| count <= ring_cap(k, b))
        });
        if ok {
            return Ok(b);
        }
    }
    unreachable!("the bound is vacuous for b = n")
}

/// Maximum order of a graph with diameter `d` and metric dimension `b`:
/// `(floor(2d/3)+1)^b + b * sum_{i=1..ceil(d/3)} (2i-1)^(b-1)`.
///
/// Computed in saturating `u128`; saturation only matters far beyond any
/// graph order this crate accepts, and preserves monotonicity.
pub fn hernando_order_bound(d: u32, b: u32) -> u128 {
    assert!(d >= 1 && b >= 1);
    let main = (2 * d as u128 / 3 + 1).saturating_pow(b);
    let mut tail: u128 = 0;
    for i in 1..=d.div_ceil(3) as u128 {
        tail = tail.saturating_add((2 * i - 1).saturating_pow(b - 1));
    }
    main.saturating_add(tail.saturating_mul(b as u128))
}
