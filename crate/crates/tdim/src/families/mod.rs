//! Generators for the named graph families used throughout the crate, and
//! packaged, verifier-checked lattice embeddings for the families whose
//! threshold dimension is certified by an explicit picture.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{verify_w_resolved, LatticeEmbedding};
use crate::enumerate::prufer_decode;
use crate::error::Error;
use crate::graph::Graph;
use crate::threshold::EdgeAdditionPlan;
use crate::Result;

/// A parsed family description, e.g. from a CLI string such as
/// `t_k:5`, `l3n:4` or `subdivided_star:6:2,1,1,1,1,1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Complete { n: usize },
    /// `K_{1,leaves}`: centre 0, leaves `1..=leaves`.
    Star { leaves: usize },
    CompleteBipartite { s: usize, t: usize },
    /// The double broom on `3n` vertices: a path on `n` spine vertices,
    /// two leaves hanging from each.
    L3n { n: usize },
    /// The depth-`k` member of the five-arm family: five recursively grown
    /// arms plus one path, all of depth `k`.
    TK { k: usize },
    /// A star with each edge replaced by a path of the given length.
    SubdividedStar { legs: Vec<usize> },
    /// The 6-vertex graph built from `K_4` with two pendants, whose
    /// dimension resists every single edge addition.
    Figure4,
    RandomTree { n: usize, seed: u64 },
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        fn ints(seg: &str) -> Result<Vec<usize>> {
            seg.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad integer {:?}", t)))
                })
                .collect()
        }
        fn one(parts: &[&str]) -> Result<usize> {
            if parts.len() != 2 {
                return Err(Error::InvalidParameter(
                    "expected exactly one parameter".into(),
                ));
            }
            let v = ints(parts[1])?;
            if v.len() != 1 {
                return Err(Error::InvalidParameter(
                    "expected exactly one parameter".into(),
                ));
            }
            Ok(v[0])
        }

        let parts: Vec<&str> = s.split(':').collect();
        match parts[0] {
            "path" => Ok(FamilySpec::Path { n: one(&parts)? }),
            "complete" => Ok(FamilySpec::Complete { n: one(&parts)? }),
            "star" => Ok(FamilySpec::Star { leaves: one(&parts)? }),
            "complete_bipartite" => {
                if parts.len() != 2 {
                    return Err(Error::InvalidParameter("expected s,t".into()));
                }
                let v = ints(parts[1])?;
                if v.len() != 2 {
                    return Err(Error::InvalidParameter("expected s,t".into()));
                }
                Ok(FamilySpec::CompleteBipartite { s: v[0], t: v[1] })
            }
            "l3n" => Ok(FamilySpec::L3n { n: one(&parts)? }),
            "t_k" => Ok(FamilySpec::TK { k: one(&parts)? }),
            "subdivided_star" => {
                if parts.len() != 3 {
                    return Err(Error::InvalidParameter(
                        "expected subdivided_star:<degree>:<leg,lengths>".into(),
                    ));
                }
                let degree = ints(parts[1])?;
                let legs = ints(parts[2])?;
                if degree.len() != 1 || degree[0] != legs.len() {
                    return Err(Error::InvalidParameter(
                        "declared degree must match the number of legs".into(),
                    ));
                }
                Ok(FamilySpec::SubdividedStar { legs })
            }
            "figure4" => {
                if parts.len() != 1 {
                    return Err(Error::InvalidParameter("figure4 takes no parameters".into()));
                }
                Ok(FamilySpec::Figure4)
            }
            "random_tree" => {
                if parts.len() < 2 || parts.len() > 3 {
                    return Err(Error::InvalidParameter(
                        "expected random_tree:<n>[:<seed>]".into(),
                    ));
                }
                let n = ints(parts[1])?;
                if n.len() != 1 {
                    return Err(Error::InvalidParameter("expected a single order".into()));
                }
                let seed = if parts.len() == 3 {
                    parts[2]
                        .parse()
                        .map_err(|_| Error::InvalidParameter("bad seed".into()))?
                } else {
                    0
                };
                Ok(FamilySpec::RandomTree { n: n[0], seed })
            }
            other => Err(Error::InvalidParameter(format!("unknown family {:?}", other))),
        }
    }
}

/// Builds the graph a spec describes, with deterministic vertex numbering.
pub fn make(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path { n } => {
            require(n >= 1, "path needs n >= 1")?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)
        }
        FamilySpec::Complete { n } => {
            require(n >= 1, "complete graph needs n >= 1")?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            Graph::new(n, &edges)
        }
        FamilySpec::Star { leaves } => {
            require(leaves >= 1, "star needs at least one leaf")?;
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Graph::new(leaves + 1, &edges)
        }
        FamilySpec::CompleteBipartite { s, t } => {
            require(s >= 1 && t >= 1, "both parts must be non-empty")?;
            let edges: Vec<_> = (0..s)
                .flat_map(|u| (s..s + t).map(move |v| (u, v)))
                .collect();
            Graph::new(s + t, &edges)
        }
        FamilySpec::L3n { n } => {
            require(n >= 1, "double broom needs n >= 1")?;
            let mut edges = Vec::new();
            for k in 0..n {
                if k + 1 < n {
                    edges.push((3 * k, 3 * (k + 1)));
                }
                edges.push((3 * k, 3 * k + 1));
                edges.push((3 * k, 3 * k + 2));
            }
            Graph::new(3 * n, &edges)
        }
        FamilySpec::TK { k } => {
            require(k >= 1, "the arm family needs k >= 1")?;
            make_tk(k)
        }
        FamilySpec::SubdividedStar { ref legs } => {
            require(legs.len() >= 3, "a subdivided star needs degree >= 3")?;
            require(legs.iter().all(|&l| l >= 1), "legs must be non-empty")?;
            let mut edges = Vec::new();
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            Graph::new(next, &edges)
        }
        FamilySpec::Figure4 => Graph::new(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 5),
            ],
        ),
        FamilySpec::RandomTree { n, seed } => random_tree(n, seed),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// Centre 0, then the depth-`k` path, then five arms grown level by level:
/// every vertex of a level gets one child and the first-listed vertex of
/// the level gets a second.
fn make_tk(k: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 1;
    let mut prev = 0;
    for _ in 0..k {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    for _ in 0..5 {
        let mut level = vec![next];
        edges.push((0, next));
        next += 1;
        for _ in 1..k {
            let mut fresh = Vec::new();
            for (idx, &p) in level.iter().enumerate() {
                edges.push((p, next));
                fresh.push(next);
                next += 1;
                if idx == 0 {
                    edges.push((p, next));
                    fresh.push(next);
                    next += 1;
                }
            }
            level = fresh;
        }
    }
    Graph::new(next, &edges)
}

/// Uniformly random labelled tree via Prüfer decoding; deterministic for a
/// fixed `(n, seed)`.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 2, "random tree needs n >= 2")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    Ok(prufer_decode(n, &seq))
}

/// The two-landmark embedding of the double broom: spine vertex `s_k` at
/// `(k, k)`, its leaves at `(k-1, k)` and `(k, k-1)`, landmarks the two
/// leaves of the first spine vertex. Certifies threshold dimension 2.
pub fn l3n_embedding(n: usize) -> Result<LatticeEmbedding> {
    require(n >= 2, "the broom embedding needs n >= 2")?;
    let g = make(&FamilySpec::L3n { n })?;
    let mut coords = vec![Vec::new(); g.n()];
    for k in 0..n {
        let k32 = k as u32;
        coords[3 * k] = vec![k32 + 1, k32 + 1];
        coords[3 * k + 1] = vec![k32, k32 + 1];
        coords[3 * k + 2] = vec![k32 + 1, k32];
    }
    let emb = LatticeEmbedding {
        side: n + 1,
        landmarks: vec![1, 2],
        coords,
    };
    assert!(
        verify_w_resolved(&g, &emb),
        "broom embedding failed verification"
    );
    Ok(emb)
}

/// A two-landmark embedding for any subdivision of the degree-6 star with
/// at least one leg of length 2.
///
/// The longest leg runs to the lower landmark and a second leg to the
/// upper one; the centre sits at `(a, b)` where `a` and `b` are those two
/// legs' lengths, and the remaining four legs march diagonally away from
/// the centre. The construction is rejected here, not merely flagged, if
/// it ever fails the verifier.
pub fn k16_subdivision_embedding(legs: &[usize]) -> Result<LatticeEmbedding> {
    require(legs.len() == 6, "exactly six legs")?;
    require(legs.iter().all(|&l| l >= 1), "legs must be non-empty")?;
    require(legs.iter().any(|&l| l >= 2), "some leg must have length >= 2")?;

    let g = make(&FamilySpec::SubdividedStar { legs: legs.to_vec() })?;
    // first vertex id of each leg, walking outward from the centre
    let starts: Vec<usize> = legs
        .iter()
        .scan(1usize, |acc, &l| {
            let s = *acc;
            *acc += l;
            Some(s)
        })
        .collect();

    let pick_max = |skip: Option<usize>| -> usize {
        (0..6)
            .filter(|&i| Some(i) != skip)
            .max_by_key(|&i| (legs[i], std::cmp::Reverse(i)))
            .expect("six legs")
    };
    let b_leg = pick_max(None);
    let a_leg = pick_max(Some(b_leg));
    let (a, b) = (legs[a_leg] as i64, legs[b_leg] as i64);

    let mut pts: Vec<(i64, i64)> = vec![(0, 0); g.n()];
    pts[0] = (a, b);
    for i in 1..=legs[a_leg] {
        let i = i as i64;
        pts[starts[a_leg] + i as usize - 1] = (a - i, b + i - 1);
    }
    for j in 1..=legs[b_leg] {
        let j = j as i64;
        pts[starts[b_leg] + j as usize - 1] = (a + j - 1, b - j);
    }
    let ray_starts = [(a, b + 1), (a + 1, b + 1), (a + 1, b), (a + 1, b - 1)];
    let mut ray = 0;
    for leg in 0..6 {
        if leg == a_leg || leg == b_leg {
            continue;
        }
        let (sx, sy) = ray_starts[ray];
        ray += 1;
        for j in 0..legs[leg] as i64 {
            pts[starts[leg] + j as usize] = (sx + j, sy + j);
        }
    }

    let side = pts.iter().map(|&(x, y)| x.max(y)).max().unwrap() as usize + 1;
    let coords = pts
        .into_iter()
        .map(|(x, y)| vec![x as u32, y as u32])
        .collect();
    let emb = LatticeEmbedding {
        side,
        landmarks: vec![
            starts[a_leg] + legs[a_leg] - 1,
            starts[b_leg] + legs[b_leg] - 1,
        ],
        coords,
    };
    if !verify_w_resolved(&g, &emb) {
        return Err(Error::InvalidEmbedding(
            "subdivided-star construction failed verification".into(),
        ));
    }
    Ok(emb)
}

/// The packaged 81-vertex embedding of the depth-5 arm family in the
/// 11x11 grid, transcribed once and guarded by the verifier in the test
/// suite.
pub fn t5_embedding() -> LatticeEmbedding {
    let data = include_str!("t5_embedding.json");
    LatticeEmbedding::from_json(data).expect("packaged embedding parses")
}

/// The 6-vertex pendant-clique graph together with its verified two-edge
/// plan: joining both pendants to a common clique vertex lets the two
/// pendants resolve everything.
pub fn figure4_plan() -> (Graph, EdgeAdditionPlan) {
    let g = make(&FamilySpec::Figure4).expect("fixed construction");
    let plan = EdgeAdditionPlan::verified(&g, &[(0, 4), (0, 5)], &[4, 5])
        .expect("the packaged plan verifies");
    (g, plan)
}
