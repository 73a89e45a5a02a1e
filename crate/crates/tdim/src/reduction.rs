//! Constructive dimension reduction for trees: one added edge strictly
//! reduces the dimension of any tree of dimension at least 3, and two
//! added edges take any dimension-4 tree to dimension 2.
//!
//! The constructions follow a case analysis on the vertices of terminal
//! degree at least 2 ("heavy" vertices below) and on the leaf count of the
//! core. Every free choice is pinned by a deterministic sort, and every
//! returned plan has been re-verified; a verification failure here is an
//! implementation bug and panics with the offending tree as a
//! counterexample artifact.

use crate::error::Error;
use crate::graph::Graph;
use crate::metric::metric_dimension_exact;
use crate::threshold::EdgeAdditionPlan;
use crate::tree::{
    induced_subgraph, is_path, is_tree, tree_anatomy, tree_basis_with, tree_metric_dimension,
    tree_path, TreeAnatomy,
};
use crate::Result;

fn verified_plan(t: &Graph, edges: &[(usize, usize)], w: &[usize], label: &str) -> EdgeAdditionPlan {
    match EdgeAdditionPlan::verified(t, edges, w) {
        Ok(p) => p,
        Err(e) => panic!(
            "{}: constructed plan failed verification on tree {:?}: {}",
            label,
            t.edges(),
            e
        ),
    }
}

fn limb_first(anatomy: &TreeAnatomy, v: usize, idx: usize) -> usize {
    anatomy.limbs_at(v)[idx].first()
}

/// Adds one edge to a tree of dimension at least 3 and returns a verified
/// resolving set one smaller than the tree's dimension.
pub fn reduce_once(t: &Graph) -> Result<EdgeAdditionPlan> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let beta = tree_metric_dimension(t)?;
    if beta < 3 {
        return Err(Error::Precondition(format!(
            "one-edge reduction needs dimension >= 3, got {}",
            beta
        )));
    }
    let anatomy = tree_anatomy(t)?;

    // Case 1: some exterior major vertex keeps three or more limbs; join
    // the first vertices of its two lowest limbs and drop one of them from
    // a basis that contains both.
    if let Some(&v) = anatomy
        .exterior_majors
        .iter()
        .find(|&&v| anatomy.ter(v) >= 3)
    {
        let v1 = limb_first(&anatomy, v, 0);
        let v2 = limb_first(&anatomy, v, 1);
        let basis = tree_basis_with(t, &[v1, v2])?;
        let w: Vec<usize> = basis.into_iter().filter(|&x| x != v1).collect();
        return Ok(verified_plan(t, &[(v1, v2)], &w, "one-edge case 1"));
    }

    // Case 2: every terminal degree is at most 2, so at least three heavy
    // vertices sit in the core. Locate an anchor v with two core limbs
    // ending in core leaves v1 and v2.
    let (core, map) = induced_subgraph(t, &anatomy.core_vertices);
    let (v, v1, v2) = if is_path(&core) {
        let mut ends: Vec<usize> = (0..core.n())
            .filter(|&x| core.degree(x) <= 1)
            .map(|x| map[x])
            .collect();
        ends.sort_unstable();
        assert_eq!(ends.len(), 2, "a dimension >= 3 core is not a single vertex");
        let v = anatomy
            .core_vertices
            .iter()
            .copied()
            .find(|x| !ends.contains(x))
            .expect("the core holds a third heavy vertex");
        (v, ends[0], ends[1])
    } else {
        let core_anatomy = tree_anatomy(&core)?;
        let core2 = &core_anatomy.core_vertices;
        let v_new = if core2.len() >= 2 {
            let (cc, cmap) = induced_subgraph(&core, core2);
            (0..cc.n())
                .filter(|&x| cc.degree(x) <= 1)
                .map(|x| cmap[x])
                .min()
                .expect("a non-trivial tree has a leaf")
        } else {
            core2[0]
        };
        let limbs = core_anatomy.limbs_at(v_new);
        assert!(
            limbs.len() >= 2,
            "the chosen core vertex anchors two core limbs"
        );
        let mut leaves = [map[limbs[0].leaf()], map[limbs[1].leaf()]];
        leaves.sort_unstable();
        (map[v_new], leaves[0], leaves[1])
    };

    let path12 = tree_path(t, v1, v2);
    let has_internal_heavy = path12[1..path12.len() - 1]
        .iter()
        .any(|&z| anatomy.ter(z) == 2);

    if !has_internal_heavy {
        // Subcase 2.1: join v1's limb start to the equally-deep vertex on
        // the way to v2's limb start.
        let mut pair = [(v1, limb_first(&anatomy, v1, 0)), (v2, limb_first(&anatomy, v2, 0))];
        let depth = |p: &(usize, usize)| tree_path(t, v, p.1).len() - 1;
        if depth(&pair[0]) > depth(&pair[1]) {
            pair.swap(0, 1);
        }
        let d1 = depth(&pair[0]);
        let to_far = tree_path(t, v, pair[1].1);
        let z = to_far[d1];
        let basis = tree_basis_with(t, &[pair[0].1, pair[1].1])?;
        let w: Vec<usize> = basis.into_iter().filter(|&x| x != pair[0].1).collect();
        Ok(verified_plan(t, &[(pair[0].1, z)], &w, "one-edge subcase 2.1"))
    } else {
        // Subcase 2.2: take the heavy vertex nearest to one end of the
        // v1..v2 path and join its limb start to its neighbour toward
        // that end.
        let first_heavy_towards = |end: usize| -> Option<usize> {
            let p = tree_path(t, v, end);
            p.iter().rev().skip(1).find(|&&z| anatomy.ter(z) == 2).copied()
        };
        let (end, w_vertex) = match first_heavy_towards(v2) {
            Some(w) => (v2, w),
            None => (
                v1,
                first_heavy_towards(v1).expect("an internal heavy vertex lies on one side"),
            ),
        };
        let wp = limb_first(&anatomy, w_vertex, 0);
        let ep = limb_first(&anatomy, end, 0);
        let towards_end = tree_path(t, w_vertex, end)[1];
        let basis = tree_basis_with(t, &[wp, ep])?;
        let w: Vec<usize> = basis.into_iter().filter(|&x| x != wp).collect();
        Ok(verified_plan(t, &[(wp, towards_end)], &w, "one-edge subcase 2.2"))
    }
}

/// Adds two edges to a dimension-4 tree and returns a verified resolving
/// set of size 2.
pub fn reduce_dim4_to_2(t: &Graph) -> Result<EdgeAdditionPlan> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let beta = tree_metric_dimension(t)?;
    if beta != 4 {
        return Err(Error::Precondition(format!(
            "two-edge reduction needs dimension exactly 4, got {}",
            beta
        )));
    }
    let anatomy = tree_anatomy(t)?;
    let heavy: Vec<usize> = anatomy
        .exterior_majors
        .iter()
        .copied()
        .filter(|&v| anatomy.ter(v) >= 2)
        .collect();

    let dist = |a: usize, b: usize| tree_path(t, a, b).len() - 1;

    match heavy.len() {
        // one heavy vertex of terminal degree 5: the tree is a spider
        1 => {
            let v = heavy[0];
            assert_eq!(anatomy.ter(v), 5);
            let firsts: Vec<usize> = anatomy.limbs_at(v).iter().map(|l| l.first()).collect();
            assert_eq!(firsts.len(), 5);
            Ok(verified_plan(
                t,
                &[(firsts[0], firsts[1]), (firsts[2], firsts[3])],
                &[firsts[0], firsts[3]],
                "two-edge case 1",
            ))
        }
        // two heavy vertices with terminal degrees 4+2 or 3+3
        2 => {
            let (h1, h2) = (heavy[0], heavy[1]);
            if anatomy.ter(h1) != anatomy.ter(h2) {
                // 4+2: the richer vertex loses two limbs
                let (va, vb) = if anatomy.ter(h1) > anatomy.ter(h2) {
                    (h1, h2)
                } else {
                    (h2, h1)
                };
                assert_eq!(anatomy.ter(va), 4);
                let w = tree_path(t, va, vb)[1];
                let e1 = (limb_first(&anatomy, va, 0), limb_first(&anatomy, va, 1));
                let e2 = (limb_first(&anatomy, va, 3), w);
                let basis = [limb_first(&anatomy, va, 0), limb_first(&anatomy, vb, 0)];
                Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 2.1"))
            } else {
                // 3+3: each vertex pairs up two of its own limbs
                assert_eq!(anatomy.ter(h1), 3);
                let e1 = (limb_first(&anatomy, h1, 0), limb_first(&anatomy, h1, 1));
                let e2 = (limb_first(&anatomy, h2, 0), limb_first(&anatomy, h2, 1));
                let basis = [limb_first(&anatomy, h1, 0), limb_first(&anatomy, h2, 0)];
                Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 2.2"))
            }
        }
        // three heavy vertices, terminal degrees 3+2+2
        3 => {
            let (core, map) = induced_subgraph(t, &anatomy.core_vertices);
            let s_leaves: Vec<usize> = (0..core.n())
                .filter(|&x| core.n() > 1 && core.degree(x) <= 1)
                .map(|x| map[x])
                .collect();
            assert!(s_leaves.iter().all(|l| heavy.contains(l)));
            let ter3 = *heavy
                .iter()
                .find(|&&h| anatomy.ter(h) == 3)
                .expect("terminal degrees are 3+2+2");
            match s_leaves.len() {
                3 => {
                    // subcase 3.1: a single degree-3 core junction
                    let v = (0..core.n())
                        .filter(|&x| core.degree(x) >= 3)
                        .map(|x| map[x])
                        .min()
                        .expect("a three-leaf core has a junction");
                    let mut two: Vec<usize> =
                        heavy.iter().copied().filter(|&h| h != ter3).collect();
                    two.sort_by_key(|&h| (dist(v, h), h));
                    let (v1, v2) = (two[0], two[1]);
                    let d1 = dist(v, v1);
                    let w = tree_path(t, v, limb_first(&anatomy, v2, 0))[d1 + 1];
                    let e1 = (limb_first(&anatomy, ter3, 0), limb_first(&anatomy, ter3, 1));
                    let e2 = (limb_first(&anatomy, v1, 0), w);
                    let basis = [limb_first(&anatomy, v2, 0), limb_first(&anatomy, ter3, 0)];
                    Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 3.1"))
                }
                2 => {
                    // the core is a path; the third heavy vertex is internal
                    let internal = *heavy
                        .iter()
                        .find(|h| !s_leaves.contains(h))
                        .expect("one heavy vertex is internal to the core path");
                    if anatomy.ter(internal) == 2 {
                        // subcase 3.2.1: the terminal-degree-3 vertex is a
                        // core endpoint
                        let v1 = ter3;
                        let v2 = *s_leaves.iter().find(|&&l| l != v1).expect("two ends");
                        let w = tree_path(t, internal, v1)[1];
                        let e1 = (limb_first(&anatomy, v1, 0), limb_first(&anatomy, v1, 1));
                        let e2 = (limb_first(&anatomy, internal, 0), w);
                        let basis = [limb_first(&anatomy, v1, 0), limb_first(&anatomy, v2, 0)];
                        Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 3.2.1"))
                    } else {
                        // subcase 3.2.2: the internal vertex has terminal
                        // degree 3; both endpoints are 2s
                        let mut ends = s_leaves.clone();
                        ends.sort_by_key(|&h| (dist(internal, h), h));
                        let (v1, v2) = (ends[0], ends[1]);
                        let d1 = dist(internal, v1);
                        let w = tree_path(t, internal, limb_first(&anatomy, v2, 0))[d1 + 1];
                        let e1 = (limb_first(&anatomy, v1, 0), w);
                        let e2 =
                            (limb_first(&anatomy, internal, 0), limb_first(&anatomy, internal, 1));
                        let basis =
                            [limb_first(&anatomy, v2, 0), limb_first(&anatomy, internal, 0)];
                        Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 3.2.2"))
                    }
                }
                other => unreachable!("three heavy vertices but {} core leaves", other),
            }
        }
        // four heavy vertices, all of terminal degree 2
        4 => {
            let (core, map) = induced_subgraph(t, &anatomy.core_vertices);
            let s_leaves: Vec<usize> = (0..core.n())
                .filter(|&x| core.n() > 1 && core.degree(x) <= 1)
                .map(|x| map[x])
                .collect();
            assert!(s_leaves.iter().all(|l| heavy.contains(l)));
            match s_leaves.len() {
                2 => {
                    // subcase 4.1: the core is a path carrying all four
                    let end = *s_leaves.iter().min().expect("two ends");
                    let mut hs = heavy.clone();
                    hs.sort_by_key(|&h| dist(end, h));
                    let (v1, v2, v3, v4) = (hs[0], hs[1], hs[2], hs[3]);
                    let w = tree_path(t, v2, v1)[1];
                    let z = tree_path(t, v3, v4)[1];
                    let e1 = (limb_first(&anatomy, v2, 0), w);
                    let e2 = (limb_first(&anatomy, v3, 0), z);
                    let basis = [limb_first(&anatomy, v1, 0), limb_first(&anatomy, v4, 0)];
                    Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 4.1"))
                }
                3 => {
                    // subcase 4.2: one core junction, one internal heavy
                    let v = (0..core.n())
                        .filter(|&x| core.degree(x) >= 3)
                        .map(|x| map[x])
                        .min()
                        .expect("a three-leaf core has a junction");
                    let v2 = *heavy
                        .iter()
                        .find(|h| !s_leaves.contains(h))
                        .expect("one heavy vertex is internal");
                    let v1 = if v2 == v {
                        *s_leaves.iter().min().expect("three leaves")
                    } else {
                        *s_leaves
                            .iter()
                            .find(|&&l| tree_path(t, v, l).contains(&v2))
                            .expect("the internal heavy vertex lies toward one leaf")
                    };
                    let mut rest: Vec<usize> = s_leaves
                        .iter()
                        .copied()
                        .filter(|&l| l != v1)
                        .collect();
                    rest.sort_by_key(|&h| (dist(v, h), h));
                    let (v3, v4) = (rest[0], rest[1]);
                    let d3 = dist(v, v3);
                    let w = tree_path(t, v2, v1)[1];
                    let z = tree_path(t, v, limb_first(&anatomy, v4, 0))[d3 + 1];
                    let e1 = (limb_first(&anatomy, v2, 0), w);
                    let e2 = (limb_first(&anatomy, v3, 0), z);
                    let basis = [limb_first(&anatomy, v1, 0), limb_first(&anatomy, v4, 0)];
                    Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 4.2"))
                }
                4 => {
                    // subcase 4.3: all four are core leaves; one or two
                    // core junctions
                    let s_majors: Vec<usize> = (0..core.n())
                        .filter(|&x| core.degree(x) >= 3)
                        .map(|x| map[x])
                        .collect();
                    let core_anatomy = tree_anatomy(&core)?;
                    let anchored = |j: usize| -> Vec<usize> {
                        let jn = map.iter().position(|&o| o == j).expect("core vertex");
                        core_anatomy
                            .limbs_at(jn)
                            .iter()
                            .map(|l| map[l.leaf()])
                            .collect()
                    };
                    match s_majors.len() {
                        2 => {
                            // subcase 4.3.1
                            let (u, v) = (s_majors[0], s_majors[1]);
                            let mut at_u = anchored(u);
                            let mut at_v = anchored(v);
                            assert_eq!(at_u.len(), 2);
                            assert_eq!(at_v.len(), 2);
                            at_u.sort_by_key(|&h| (dist(u, h), h));
                            at_v.sort_by_key(|&h| (dist(v, h), h));
                            let (v2, v1) = (at_u[0], at_u[1]);
                            let (v3, v4) = (at_v[0], at_v[1]);
                            let d2 = dist(u, v2);
                            let d3 = dist(v, v3);
                            let w = tree_path(t, u, limb_first(&anatomy, v1, 0))[d2 + 1];
                            let z = tree_path(t, v, limb_first(&anatomy, v4, 0))[d3 + 1];
                            let e1 = (limb_first(&anatomy, v2, 0), w);
                            let e2 = (limb_first(&anatomy, v3, 0), z);
                            let basis =
                                [limb_first(&anatomy, v1, 0), limb_first(&anatomy, v4, 0)];
                            Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 4.3.1"))
                        }
                        1 => {
                            // subcase 4.3.2: a single degree-4 junction
                            let v = s_majors[0];
                            let mut hs = heavy.clone();
                            hs.sort_by_key(|&h| (dist(v, h), h));
                            let (v2, v1, v3, v4) = (hs[0], hs[1], hs[2], hs[3]);
                            let d2 = dist(v, v2);
                            let d3 = dist(v, v3);
                            let w = tree_path(t, v, limb_first(&anatomy, v1, 0))[d2 + 1];
                            let z = tree_path(t, v, limb_first(&anatomy, v4, 0))[d3 + 1];
                            let e1 = (limb_first(&anatomy, v2, 0), w);
                            let e2 = (limb_first(&anatomy, v3, 0), z);
                            let basis =
                                [limb_first(&anatomy, v1, 0), limb_first(&anatomy, v4, 0)];
                            Ok(verified_plan(t, &[e1, e2], &basis, "two-edge subcase 4.3.2"))
                        }
                        other => unreachable!("four core leaves but {} junctions", other),
                    }
                }
                other => unreachable!("four heavy vertices but {} core leaves", other),
            }
        }
        other => unreachable!("dimension 4 allows 1..=4 heavy vertices, found {}", other),
    }
}

/// Checks the classical two-sided edge bound for one instance:
/// `beta(T) - 2 <= beta(T + e) <= beta(T) + 1`, both sides by the exact
/// solver.
pub fn chartrand_edge_bounds_check(t: &Graph, e: (usize, usize)) -> Result<bool> {
    if !is_tree(t) || t.n() < 3 {
        return Err(Error::Precondition("needs a tree of order >= 3".into()));
    }
    let before = metric_dimension_exact(t)?.beta as i64;
    let after = metric_dimension_exact(&t.add_edges(&[e])?)?.beta as i64;
    Ok(before - 2 <= after && after <= before + 1)
}
