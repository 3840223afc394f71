//! Maximum matchings whose unsaturated vertices pairwise share no neighbor,
//! for graphs with all degrees in {2, 3}.
//!
//! Start from the lexicographically smallest maximum matching and repair one
//! bad pair at a time. Each repair takes the bad triple `(u, w, q)`, forces
//! the edge `uq` into a second maximum matching, lengthens the alternating
//! path through `uq` as far as it goes, and then either shifts the matching
//! along that path or swaps a single edge at its far end.

use std::collections::BTreeSet;

use crate::error::{precondition, Error, Result};
use crate::exact::{all_maximum_matchings, maximum_matching};
use crate::graph::{degree_two_components, Matching, Multigraph, Walk};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedMatching {
    pub matching: Matching,
    pub unsaturated: Vec<usize>,
    /// Unsaturated pairs with a common neighbor; zero on success.
    pub bad_pairs: usize,
    /// Number of repair steps applied.
    pub steps: usize,
    /// Set when a repair step failed to make progress and the result came
    /// from exhaustive search instead. Never expected to happen.
    pub used_fallback: bool,
}

fn common_neighbor(g: &Multigraph, a: usize, b: usize) -> Option<usize> {
    let nb = g.neighbors(b);
    g.neighbors(a).into_iter().find(|x| nb.contains(x))
}

/// Lexicographically ordered triples `(u, w, q)`: `u < w` unsaturated, `q`
/// a common neighbor.
pub fn bad_triples(g: &Multigraph, f: &Matching) -> Vec<(usize, usize, usize)> {
    let free = f.unsaturated(g);
    let mut out = Vec::new();
    for (i, &u) in free.iter().enumerate() {
        for &w in &free[i + 1..] {
            let nw = g.neighbors(w);
            for q in g.neighbors(u) {
                if nw.contains(&q) {
                    out.push((u, w, q));
                }
            }
        }
    }
    out
}

/// Number of unsaturated pairs with at least one common neighbor.
pub fn bad_pairs(g: &Multigraph, f: &Matching) -> usize {
    let free = f.unsaturated(g);
    let mut count = 0;
    for (i, &u) in free.iter().enumerate() {
        for &w in &free[i + 1..] {
            if common_neighbor(g, u, w).is_some() {
                count += 1;
            }
        }
    }
    count
}

fn check_degrees(g: &Multigraph) -> Result<()> {
    if g.has_loops() {
        return Err(Error::LoopForbidden(
            (0..g.m()).find(|&e| g.is_loop(e)).map(|e| g.endpoints(e).0).unwrap_or(0),
        ));
    }
    if g.n() == 0 || g.min_degree() < 2 || g.max_degree() > 3 {
        return precondition("degrees must lie in {2, 3}");
    }
    Ok(())
}

/// The alternating component of `a △ b` through edge `e`, oriented to start
/// at `start`.
fn component_through(g: &Multigraph, a: &Matching, b: &Matching, e: usize, start: usize) -> Walk {
    let walks = degree_two_components(g, &a.symmetric_difference(b)).expect("two matchings");
    let w = walks
        .into_iter()
        .find(|w| w.edges.contains(&e))
        .expect("e lies in the symmetric difference");
    assert!(!w.closed, "component through an unsaturated vertex is a path");
    if w.first() == start {
        w
    } else {
        w.reversed()
    }
}

fn mate_edge(g: &Multigraph, f: &Matching, v: usize) -> Option<usize> {
    g.incident(v).iter().map(|&(_, e)| e).find(|&e| f.contains(e))
}

fn replace(f: &Matching, out: &[usize], add: &[usize]) -> Matching {
    let mut ids: Vec<usize> = f.edges().iter().copied().filter(|e| !out.contains(e)).collect();
    ids.extend_from_slice(add);
    Matching::from_ids_unchecked(ids)
}

/// One repair for the bad triple `(u, w, q)` of the maximum matching `f`.
/// The result is a maximum matching with strictly fewer bad pairs.
pub fn improvement_step(g: &Multigraph, f: &Matching, u: usize, w: usize, q: usize) -> Result<Matching> {
    check_degrees(g)?;
    if !f.is_valid(g) {
        return Err(Error::HostMismatch);
    }
    let mates = f.mates(g);
    for x in [u, w, q] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    if u == w || mates[u].is_some() || mates[w].is_some() {
        return precondition("u and w must be distinct unsaturated vertices");
    }
    let (Some(e), Some(_)) = (g.edge_between(u, q), g.edge_between(w, q)) else {
        return precondition("q must be adjacent to both u and w");
    };
    let Some(e_q) = mate_edge(g, f, q) else {
        return precondition("q must be saturated");
    };

    let mut f2 = replace(f, &[e_q], &[e]);
    let path = loop {
        let p = component_through(g, f, &f2, e, u);
        let v = p.last();
        let on_path: BTreeSet<usize> = p.vertices.iter().copied().collect();
        let Some(v2) = g.neighbors(v).into_iter().find(|x| !on_path.contains(x)) else {
            break p;
        };
        let fv2 = mate_edge(g, &f2, v2).expect("second matching is maximum, so it covers v'");
        let vv2 = g.edge_between(v, v2).expect("adjacent");
        f2 = replace(&f2, &[fv2], &[vv2]);
    };

    let v = path.last();
    assert!(
        g.neighbors(v).iter().all(|x| path.vertices.contains(x) && *x != u && *x != q),
        "far end of a longest alternating path has all neighbors inside it"
    );
    assert!(path.len() >= 4, "longest alternating path has length at least four");
    let pv = mate_edge(g, f, v).expect("path ends with an edge of the first matching");
    let p = g.other_end(pv, v);
    Ok(match g.edge_between(p, w) {
        None => {
            let on_path: Vec<usize> = path.edges.clone();
            let keep: Vec<usize> = f2.edges().iter().copied().filter(|e| on_path.contains(e)).collect();
            replace(f, &on_path, &keep)
        }
        Some(pw) => replace(f, &[pv], &[pw]),
    })
}

/// A maximum matching whose unsaturated vertices pairwise share no neighbor.
pub fn separated_maximum_matching(g: &Multigraph) -> Result<SeparatedMatching> {
    check_degrees(g)?;
    let mut f = maximum_matching(g);
    let mut bad = bad_pairs(g, &f);
    let mut steps = 0;
    let mut used_fallback = false;
    while bad > 0 {
        let (u, w, q) = bad_triples(g, &f)[0];
        let next = improvement_step(g, &f, u, w, q)?;
        let next_bad = bad_pairs(g, &next);
        steps += 1;
        if next.len() != f.len() || next_bad >= bad {
            used_fallback = true;
            f = all_maximum_matchings(g)
                .into_iter()
                .find(|m| bad_pairs(g, m) == 0)
                .expect("a separated maximum matching exists");
            bad = 0;
            break;
        }
        f = next;
        bad = next_bad;
    }
    Ok(SeparatedMatching {
        unsaturated: f.unsaturated(g),
        matching: f,
        bad_pairs: bad,
        steps,
        used_fallback,
    })
}
