//! Cubic pseudo-graph skeletons of subcubic graphs, the loop cut, class 𝔐,
//! and recursive constructions of large matchings and matching pairs on
//! subdivided pseudo-graphs.
//!
//! A connected graph with degrees in {2, 3} is a cubic pseudo-graph `G₀`
//! whose edges `d` were replaced by paths with `k(d)` inner vertices. Loops
//! of `G₀` stand for cycles hanging off a single degree-3 vertex.
//!
//! Realizations use a fixed numbering: vertices `0..n₀` are those of `G₀`,
//! then the inner vertices of each base edge in edge order; the edges of a
//! base edge's chain are consecutive, again in base edge order. Every chain
//! runs from the lower endpoint to the higher one.

use std::ops::Deref;

use crate::decomposition::{build_system, transform_pair_through_subdivision};
use crate::error::{precondition, Error, Result};
use crate::exact::maximum_matching;
use crate::graph::{Matching, MatchingFamily, Multigraph, SubdivisionTrace};

/// A pseudo-graph in which every vertex has degree 3, loops counting twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicPseudograph {
    graph: Multigraph,
}

impl CubicPseudograph {
    pub fn new(graph: Multigraph) -> Result<Self> {
        if !graph.is_regular(3) {
            return precondition("every vertex of a cubic pseudo-graph has degree 3");
        }
        Ok(Self {
            graph: graph.into_pseudo(),
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(Multigraph::pseudo(n, edges)?)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// The two-vertex pseudo-graph: a loop, an edge, a loop.
    pub fn trivial() -> Self {
        Self::from_edges(2, [(0, 0), (0, 1), (1, 1)]).expect("cubic")
    }

    pub fn is_trivial(&self) -> bool {
        self.graph.n() == 2 && self.graph.has_loops()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.graph.m()).filter(|&e| self.graph.is_loop(e)).collect()
    }
}

impl Deref for CubicPseudograph {
    type Target = Multigraph;

    fn deref(&self) -> &Multigraph {
        &self.graph
    }
}

/// `k[e]` inner vertices on base edge `e`.
pub type SubdivisionMap = Vec<usize>;

/// A subcubic graph seen as a subdivided cubic pseudo-graph.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub base: CubicPseudograph,
    pub k: SubdivisionMap,
    /// Chain of each base edge inside the original graph.
    pub traces: Vec<SubdivisionTrace>,
}

/// Contract the degree-2 chains of a connected loopless graph with
/// `2 ≤ δ ≤ Δ = 3`.
pub fn to_cubic_pseudograph(g: &Multigraph) -> Result<Skeleton> {
    if g.has_loops() {
        return precondition("graph must be loopless");
    }
    if g.n() == 0 || !g.is_connected() {
        return precondition("graph must be connected");
    }
    if g.min_degree() < 2 || g.max_degree() > 3 {
        return precondition("degrees must lie in {2, 3}");
    }
    let big: Vec<usize> = (0..g.n()).filter(|&v| g.deg(v) == 3).collect();
    if big.is_empty() {
        return precondition("a cycle has no vertex of degree 3");
    }
    let mut id = vec![usize::MAX; g.n()];
    for (i, &v) in big.iter().enumerate() {
        id[v] = i;
    }
    let mut used = vec![false; g.m()];
    let mut base_edges = Vec::new();
    let mut k = Vec::new();
    let mut traces = Vec::new();
    for &w in &big {
        for &(next, first) in g.incident(w) {
            if used[first] {
                continue;
            }
            let mut vertices = vec![w, next];
            let mut edges = vec![first];
            used[first] = true;
            let mut at = next;
            let mut via = first;
            while g.deg(at) == 2 {
                let &(x, e) = g.incident(at).iter().find(|&&(_, e)| e != via).expect("degree 2");
                used[e] = true;
                vertices.push(x);
                edges.push(e);
                at = x;
                via = e;
            }
            let (a, b) = (id[w], id[at]);
            if a > b {
                vertices.reverse();
                edges.reverse();
            }
            let base_edge = base_edges.len();
            base_edges.push((a.min(b), a.max(b)));
            k.push(vertices.len() - 2);
            traces.push(SubdivisionTrace {
                base_edge,
                vertices,
                edges,
            });
        }
    }
    Ok(Skeleton {
        base: CubicPseudograph::from_edges(big.len(), base_edges)?,
        k,
        traces,
    })
}

/// A realization together with the chain of every base edge.
#[derive(Clone, Debug)]
pub struct Realization {
    pub graph: Multigraph,
    pub chains: Vec<SubdivisionTrace>,
}

/// `k(e)`-subdivide every edge of `g0`.
pub fn realize(g0: &CubicPseudograph, k: &[usize]) -> Result<Multigraph> {
    realize_traced(g0, k).map(|r| r.graph)
}

pub fn realize_traced(g0: &CubicPseudograph, k: &[usize]) -> Result<Realization> {
    check_map_len(g0, k)?;
    if let Some(e) = (0..g0.m()).find(|&e| g0.is_loop(e) && k[e] == 0) {
        return precondition(format!("loop {e} needs at least one inner vertex"));
    }
    let mut next_vertex = g0.n();
    let mut edges = Vec::new();
    let mut chains = Vec::new();
    for (e, &(a, b)) in g0.edges().iter().enumerate() {
        let mut vertices = vec![a];
        vertices.extend(next_vertex..next_vertex + k[e]);
        vertices.push(b);
        next_vertex += k[e];
        let ids: Vec<usize> = (edges.len()..edges.len() + k[e] + 1).collect();
        edges.extend(vertices.windows(2).map(|w| (w[0], w[1])));
        chains.push(SubdivisionTrace {
            base_edge: e,
            vertices,
            edges: ids,
        });
    }
    Ok(Realization {
        graph: Multigraph::new(next_vertex, edges)?,
        chains,
    })
}

fn check_map_len(g0: &CubicPseudograph, k: &[usize]) -> Result<()> {
    if k.len() != g0.m() {
        return precondition(format!("k has {} entries for {} edges", k.len(), g0.m()));
    }
    Ok(())
}

/// `n = n₀ + Σ k(e)`.
pub fn realized_order(g0: &CubicPseudograph, k: &[usize]) -> usize {
    g0.n() + k.iter().sum::<usize>()
}

/// The outcome of cutting the loop `e` at `u₀`: `u₀` and its neighbor `v₀`
/// are deleted and the other two neighbors `u`, `v` of `v₀` are joined by a
/// new edge `g`. Vertex and edge ids are kept in order, `g` comes last.
#[derive(Clone, Debug)]
pub struct LoopCut {
    pub graph: CubicPseudograph,
    pub g: usize,
    pub e: usize,
    pub f: usize,
    pub h: usize,
    pub h2: usize,
    pub u0: usize,
    pub v0: usize,
    /// Far ends of `h` and `h2` (equal when they are parallel).
    pub u: usize,
    pub v: usize,
    /// New id of each old vertex.
    pub vertex_map: Vec<Option<usize>>,
    /// Old id of each new edge other than `g`.
    pub edge_origin: Vec<usize>,
}

/// The vertex across the non-loop edge at a loop's vertex.
fn loop_neighbor(g0: &CubicPseudograph, e: usize) -> (usize, usize, usize) {
    let u0 = g0.endpoints(e).0;
    let f = g0.incident_edges(u0).into_iter().find(|&d| d != e).expect("loop vertex has one more edge");
    (u0, f, g0.other_end(f, u0))
}

pub fn cut_applicable(g0: &CubicPseudograph, e: usize) -> bool {
    if e >= g0.m() || !g0.is_loop(e) || g0.is_trivial() {
        return false;
    }
    let (_, _, v0) = loop_neighbor(g0, e);
    !g0.incident_edges(v0).iter().any(|&d| g0.is_loop(d))
}

/// Loops whose cut is defined, in id order.
pub fn applicable_loops(g0: &CubicPseudograph) -> Vec<usize> {
    g0.loops().into_iter().filter(|&e| cut_applicable(g0, e)).collect()
}

pub fn cut_loop(g0: &CubicPseudograph, e: usize) -> Result<LoopCut> {
    if e >= g0.m() {
        return Err(Error::EdgeOutOfRange { edge: e, m: g0.m() });
    }
    if !g0.is_loop(e) {
        return precondition(format!("edge {e} is not a loop"));
    }
    if g0.is_trivial() {
        return Err(Error::NotApplicable("the trivial pseudo-graph".into()));
    }
    let (u0, f, v0) = loop_neighbor(g0, e);
    if !cut_applicable(g0, e) {
        return Err(Error::NotApplicable(format!("vertex {v0} across the loop carries a loop")));
    }
    let others: Vec<usize> = g0.incident(v0).iter().map(|&(_, d)| d).filter(|&d| d != f).collect();
    let (h, h2) = (others[0].min(others[1]), others[0].max(others[1]));
    let (u, v) = (g0.other_end(h, v0), g0.other_end(h2, v0));
    let mut vertex_map = vec![None; g0.n()];
    let mut next = 0;
    for (x, slot) in vertex_map.iter_mut().enumerate() {
        if x != u0 && x != v0 {
            *slot = Some(next);
            next += 1;
        }
    }
    let edge_origin: Vec<usize> = (0..g0.m()).filter(|d| ![e, f, h, h2].contains(d)).collect();
    let mut edges: Vec<(usize, usize)> = edge_origin
        .iter()
        .map(|&d| {
            let (a, b) = g0.endpoints(d);
            (vertex_map[a].expect("kept"), vertex_map[b].expect("kept"))
        })
        .collect();
    edges.push((vertex_map[u].expect("kept"), vertex_map[v].expect("kept")));
    Ok(LoopCut {
        graph: CubicPseudograph::from_edges(next, edges)?,
        g: edge_origin.len(),
        e,
        f,
        h,
        h2,
        u0,
        v0,
        u,
        v,
        vertex_map,
        edge_origin,
    })
}

/// Subdivision counts after a cut: `k′(g) = k(h) + k(h′) − 2`, unchanged
/// elsewhere.
pub fn derive_k_after_cut(k: &[usize], cut: &LoopCut) -> SubdivisionMap {
    let mut out: Vec<usize> = cut.edge_origin.iter().map(|&d| k[d]).collect();
    out.push((k[cut.h] + k[cut.h2]).saturating_sub(2));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMembership {
    pub in_m: bool,
    /// `G₀` without its loops, when that is a tree.
    pub tree_skeleton: Option<Multigraph>,
    /// Non-pendant vertices of the tree.
    pub internal_vertex_count: Option<usize>,
}

/// Loops counted once, other edges twice: the subdivision pattern of class 𝔐.
pub fn is_minimal_pattern(g0: &CubicPseudograph, k: &[usize]) -> bool {
    k.len() == g0.m() && (0..g0.m()).all(|e| k[e] == if g0.is_loop(e) { 1 } else { 2 })
}

pub fn in_class_m(g0: &CubicPseudograph, k: &[usize]) -> ClassMembership {
    let loops = g0.loops();
    let (tree, _) = g0.without_edges(&loops);
    let is_tree = tree.m() + 1 == tree.n() && tree.is_connected();
    if !is_tree || !is_minimal_pattern(g0, k) {
        return ClassMembership {
            in_m: false,
            tree_skeleton: None,
            internal_vertex_count: None,
        };
    }
    let internal = (0..tree.n()).filter(|&v| tree.deg(v) > 1).count();
    ClassMembership {
        in_m: true,
        tree_skeleton: Some(tree),
        internal_vertex_count: Some(internal),
    }
}

fn check_hypothesis(g0: &CubicPseudograph, k: &[usize]) -> Result<()> {
    check_map_len(g0, k)?;
    if !g0.is_connected() {
        return precondition("pseudo-graph must be connected");
    }
    for e in 0..g0.m() {
        let need = if g0.is_loop(e) { 1 } else { 2 };
        if k[e] < need {
            return precondition(format!("k({e}) = {} is below {need}", k[e]));
        }
    }
    Ok(())
}

/// A loop with `k ≥ 2`.
pub fn has_long_loop(g0: &CubicPseudograph, k: &[usize]) -> bool {
    (0..g0.m()).any(|e| g0.is_loop(e) && k[e] >= 2)
}

/// A non-loop edge with `k ≥ 3`.
pub fn has_long_edge(g0: &CubicPseudograph, k: &[usize]) -> bool {
    (0..g0.m()).any(|e| !g0.is_loop(e) && k[e] >= 3)
}

/// The loop to cut next. Among applicable loops it prefers one whose cut
/// keeps a loop with `k ≥ 2`, or a non-loop with `k ≥ 3`, alive in the
/// smaller pseudo-graph (possibly as the new edge), so the stronger ratio
/// carries through the recursion.
pub fn choose_loop(g0: &CubicPseudograph, k: &[usize]) -> Option<usize> {
    let candidates = applicable_loops(g0);
    let lowest = *candidates.first()?;
    let long_loop = (0..g0.m()).find(|&e| g0.is_loop(e) && k[e] >= 2);
    if let Some(keep) = long_loop {
        if g0.loops().len() >= 2 {
            return candidates.iter().copied().find(|&e| e != keep).or(Some(lowest));
        }
        return Some(keep).filter(|e| candidates.contains(e)).or(Some(lowest));
    }
    if let Some(keep) = (0..g0.m()).find(|&e| !g0.is_loop(e) && k[e] >= 3) {
        return candidates
            .iter()
            .copied()
            .find(|&e| loop_neighbor(g0, e).1 != keep)
            .or(Some(lowest));
    }
    Some(lowest)
}

/// Edges of a chain read from `start`.
fn oriented(t: &SubdivisionTrace, start: usize) -> Vec<usize> {
    if t.vertices[0] == start {
        t.edges.clone()
    } else {
        t.edges.iter().rev().copied().collect()
    }
}

fn alternate(edges: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = edges.iter().step_by(2).copied().collect();
    let b = edges.iter().skip(1).step_by(2).copied().collect();
    (a, b)
}

fn family(g: &Multigraph, a: Vec<usize>, b: Vec<usize>) -> Result<MatchingFamily> {
    let fam = MatchingFamily::new(vec![Matching::new(g, a)?, Matching::new(g, b)?]);
    if !fam.is_valid(g) {
        return Err(Error::NotAMatching("pair members share an edge".into()));
    }
    Ok(fam)
}

/// Two disjoint matchings of `realize(g0, k)` with total at least
/// `⌈5n/6⌉`, at least `⌈7n/8⌉` when `g0` has no loops, and at least
/// `⌈6n/7⌉` when a loop has `k ≥ 2` or a non-loop has `k ≥ 3`.
///
/// Requires `g0` connected, `k ≥ 1` on loops and `k ≥ 2` elsewhere.
pub fn certify_pair(g0: &CubicPseudograph, k: &[usize]) -> Result<MatchingFamily> {
    check_hypothesis(g0, k)?;
    pair_rec(g0, k)
}

fn pair_rec(g0: &CubicPseudograph, k: &[usize]) -> Result<MatchingFamily> {
    if !g0.has_loops() {
        return loopless_pair(g0, k);
    }
    if g0.is_trivial() {
        return trivial_pair(g0, k);
    }
    let e = choose_loop(g0, k).ok_or_else(|| Error::NotApplicable("no loop can be cut".into()))?;
    let cut = cut_loop(g0, e)?;
    let k2 = derive_k_after_cut(k, &cut);
    let inner = pair_rec(&cut.graph, &k2)?;
    extend_pair(g0, k, &cut, &k2, &inner)
}

/// Pair on the 1-subdivision from an alternating path/cycle system, then one
/// extra edge per further subdivision vertex.
fn loopless_pair(g0: &CubicPseudograph, k: &[usize]) -> Result<MatchingFamily> {
    let ones = vec![1; g0.m()];
    let start = realize_traced(g0, &ones)?;
    let witness = build_system(&start.graph)?;
    let (mut h, mut h2) = witness.pair;
    let mut graph = start.graph;
    let mut chains = start.chains;
    for d in 0..g0.m() {
        for _ in 1..k[d] {
            let s = split_last_segment(&graph, &mut chains[d]);
            let (next, a2, b2) = transform_pair_through_subdivision(&graph, &h, &h2, s)?;
            graph = next;
            h = a2;
            h2 = b2;
        }
    }
    let target = realize_traced(g0, k)?;
    let map = chain_edge_map(&chains, &target.chains, graph.m());
    let relabel = |m: &Matching| m.edges().iter().map(|&e| map[e]).collect::<Vec<_>>();
    family(&target.graph, relabel(&h), relabel(&h2))
}

/// Record in `chain` that its last segment is about to be 1-subdivided in
/// `graph` (new vertex `n`, new edge `m`, the old id kept on the side of the
/// lower endpoint). Returns the segment's id.
pub(crate) fn split_last_segment(graph: &Multigraph, chain: &mut SubdivisionTrace) -> usize {
    let s = *chain.edges.last().expect("chain has an edge");
    let (a, _) = graph.endpoints(s);
    let (x, fresh) = (graph.n(), graph.m());
    let p = chain.vertices[chain.vertices.len() - 2];
    let at = chain.vertices.len() - 1;
    chain.vertices.insert(at, x);
    let last = chain.edges.len() - 1;
    if p == a {
        chain.edges.push(fresh);
    } else {
        chain.edges.insert(last, fresh);
    }
    s
}

/// Position-wise edge correspondence between two sets of chains of the same
/// lengths, as a map indexed by the first set's edge ids.
pub(crate) fn chain_edge_map(from: &[SubdivisionTrace], to: &[SubdivisionTrace], m: usize) -> Vec<usize> {
    let mut map = vec![usize::MAX; m];
    for (a, b) in from.iter().zip(to) {
        debug_assert_eq!(a.edges.len(), b.edges.len());
        for (&x, &y) in a.edges.iter().zip(&b.edges) {
            map[x] = y;
        }
    }
    map
}

/// The realization of the trivial pseudo-graph has a Hamiltonian path.
fn trivial_path(g0: &CubicPseudograph, r: &Realization) -> Vec<usize> {
    let loops = g0.loops();
    let (le, lg) = (loops[0], loops[1]);
    let f = (0..g0.m()).find(|&d| !g0.is_loop(d)).expect("one non-loop edge");
    let a = g0.endpoints(le).0;
    // Around the first loop ending at a, along f, around the second loop
    // stopping before b.
    let ce = &r.chains[le].edges;
    let cg = &r.chains[lg].edges;
    let mut path: Vec<usize> = ce[1..].to_vec();
    path.extend(oriented(&r.chains[f], a));
    path.extend_from_slice(&cg[..cg.len() - 1]);
    path
}

fn trivial_pair(g0: &CubicPseudograph, k: &[usize]) -> Result<MatchingFamily> {
    let r = realize_traced(g0, k)?;
    let (a, b) = alternate(&trivial_path(g0, &r));
    family(&r.graph, a, b)
}

/// Realizations before and after a cut, and the edge correspondence between
/// them outside the new edge's chain.
struct CutPair {
    big: Realization,
    small: Realization,
    /// Edge of `big` for each edge of `small`; `None` on the chain of `g`.
    lift: Vec<Option<usize>>,
}

impl CutPair {
    fn new(g0: &CubicPseudograph, k: &[usize], cut: &LoopCut, k2: &[usize]) -> Result<Self> {
        let big = realize_traced(g0, k)?;
        let small = realize_traced(&cut.graph, k2)?;
        let mut lift = vec![None; small.graph.m()];
        for (d2, &d) in cut.edge_origin.iter().enumerate() {
            for (&x, &y) in small.chains[d2].edges.iter().zip(&big.chains[d].edges) {
                lift[x] = Some(y);
            }
        }
        Ok(Self { big, small, lift })
    }

    fn lifted(&self, m: &Matching) -> Vec<usize> {
        m.edges().iter().filter_map(|&e| self.lift[e]).collect()
    }

    /// Whether `m` uses the end edge of `g`'s chain at `u` and at `v`.
    fn end_states(&self, cut: &LoopCut, m: &Matching) -> (bool, bool) {
        let chain = &self.small.chains[cut.g];
        let first = m.contains(chain.edges[0]);
        let last = m.contains(*chain.edges.last().expect("chain has an edge"));
        if cut.u != cut.v && chain.vertices[0] != cut.vertex_map[cut.u].expect("kept") {
            (last, first)
        } else {
            (first, last)
        }
    }

    /// `P_h` from `u` to `v₀`.
    fn p_h(&self, cut: &LoopCut) -> Vec<usize> {
        oriented(&self.big.chains[cut.h], cut.u)
    }

    /// `P_h′` from `v₀` to `v`.
    fn p_h2(&self, cut: &LoopCut) -> Vec<usize> {
        oriented(&self.big.chains[cut.h2], cut.v0)
    }

    /// `P_f ∖ {v₀}` followed by the loop's cycle from `u₀`, minus its last
    /// edge.
    fn p_fe(&self, cut: &LoopCut) -> Vec<usize> {
        let mut p = oriented(&self.big.chains[cut.f], cut.v0)[1..].to_vec();
        let ce = &self.big.chains[cut.e].edges;
        p.extend_from_slice(&ce[..ce.len() - 1]);
        p
    }

    /// The path through `v₀` along `h` and `h′`, starting at `u` iff
    /// `with_u` and ending at `v` iff `with_v`.
    fn p_hh2(&self, cut: &LoopCut, with_u: bool, with_v: bool) -> Vec<usize> {
        let ph = self.p_h(cut);
        let ph2 = self.p_h2(cut);
        let mut p: Vec<usize> = if with_u { ph } else { ph[1..].to_vec() };
        p.extend_from_slice(if with_v { &ph2 } else { &ph2[..ph2.len() - 1] });
        p
    }
}

fn color_first(edges: &[usize], first_in_a: bool, a: &mut Vec<usize>, b: &mut Vec<usize>) {
    let (x, y) = alternate(edges);
    if first_in_a {
        a.extend(x);
        b.extend(y);
    } else {
        a.extend(y);
        b.extend(x);
    }
}

/// Rebuild a pair of `realize(g0, k)` from a pair of the cut pseudo-graph's
/// realization. The edges of `g`'s chain are dropped; the region of `h`,
/// `h′`, `f` and the loop is covered by alternating paths whose colors at
/// `u` and `v` repeat the colors the dropped chain had there.
fn extend_pair(
    g0: &CubicPseudograph,
    k: &[usize],
    cut: &LoopCut,
    k2: &[usize],
    inner: &MatchingFamily,
) -> Result<MatchingFamily> {
    let cp = CutPair::new(g0, k, cut, k2)?;
    let (h1, h2) = (&inner.members[0], &inner.members[1]);
    let (u1, v1) = cp.end_states(cut, h1);
    let (u2, v2) = cp.end_states(cut, h2);
    // Color of the dropped chain's end edge at u and at v: Some(true) for
    // the first member, Some(false) for the second.
    let at_u = if u1 { Some(true) } else if u2 { Some(false) } else { None };
    let at_v = if v1 { Some(true) } else if v2 { Some(false) } else { None };
    let mut a = cp.lifted(h1);
    let mut b = cp.lifted(h2);
    match (at_u, at_v) {
        (Some(cu), Some(cv)) => {
            let mut p_hfe = cp.p_h(cut);
            p_hfe.extend(oriented(&cp.big.chains[cut.f], cut.v0));
            let ce = &cp.big.chains[cut.e].edges;
            p_hfe.extend_from_slice(&ce[..ce.len() - 1]);
            color_first(&p_hfe, cu, &mut a, &mut b);
            let mut rest: Vec<usize> = cp.p_h2(cut)[1..].to_vec();
            rest.reverse();
            color_first(&rest, cv, &mut a, &mut b);
        }
        (Some(cu), None) => {
            color_first(&cp.p_hh2(cut, true, false), cu, &mut a, &mut b);
            color_first(&cp.p_fe(cut), true, &mut a, &mut b);
        }
        (None, Some(cv)) => {
            let mut p = cp.p_hh2(cut, false, true);
            p.reverse();
            color_first(&p, cv, &mut a, &mut b);
            color_first(&cp.p_fe(cut), true, &mut a, &mut b);
        }
        (None, None) => {
            color_first(&cp.p_hh2(cut, false, false), true, &mut a, &mut b);
            color_first(&cp.p_fe(cut), true, &mut a, &mut b);
        }
    }
    let out = family(&cp.big.graph, a, b)?;
    assert!(
        out.total() >= inner.total() + k[cut.f] + k[cut.e] + 3,
        "extension across a loop cut gains k(f) + k(e) + 3"
    );
    Ok(out)
}

/// A matching of `realize(g0, k)` of size at least `⌈3n/7⌉`, and at least
/// `⌈6n/13⌉` in class 𝔐. Same hypothesis as [`certify_pair`].
///
/// Class 𝔐 instances get an exact maximum matching. With a loopless `g0`,
/// a loop with `k ≥ 2` or a non-loop with `k ≥ 3`, the larger member of
/// [`certify_pair`] is returned. Otherwise a loop is cut and the matching of
/// the smaller realization is extended.
pub fn certify_matching(g0: &CubicPseudograph, k: &[usize]) -> Result<Matching> {
    check_hypothesis(g0, k)?;
    matching_rec(g0, k)
}

fn matching_rec(g0: &CubicPseudograph, k: &[usize]) -> Result<Matching> {
    if in_class_m(g0, k).in_m {
        let g = realize(g0, k)?;
        let m = maximum_matching(&g);
        assert!(13 * m.len() >= 6 * g.n(), "class 𝔐 graphs have ν₁ ≥ 6n/13");
        return Ok(m);
    }
    if !g0.has_loops() || has_long_loop(g0, k) || has_long_edge(g0, k) {
        let pair = pair_rec(g0, k)?;
        let [a, b]: [Matching; 2] = pair.members.try_into().expect("two members");
        return Ok(if b.len() > a.len() { b } else { a });
    }
    let e = *applicable_loops(g0)
        .first()
        .ok_or_else(|| Error::NotApplicable("no loop can be cut".into()))?;
    let cut = cut_loop(g0, e)?;
    let k2 = derive_k_after_cut(k, &cut);
    let inner = matching_rec(&cut.graph, &k2)?;
    extend_matching(g0, k, &cut, &k2, &inner)
}

/// Keep the smaller matching off `g`'s chain and add maximum matchings of the
/// path through `v₀`, of `P_f` without its ends, and of the loop's cycle.
fn extend_matching(
    g0: &CubicPseudograph,
    k: &[usize],
    cut: &LoopCut,
    k2: &[usize],
    inner: &Matching,
) -> Result<Matching> {
    let cp = CutPair::new(g0, k, cut, k2)?;
    let (at_u, at_v) = cp.end_states(cut, inner);
    let mut ids = cp.lifted(inner);
    let mut through = cp.p_hh2(cut, at_u, at_v);
    if at_v && !at_u {
        through.reverse();
    }
    ids.extend(alternate(&through).0);
    let pf = oriented(&cp.big.chains[cut.f], cut.v0);
    ids.extend(alternate(&pf[1..pf.len() - 1]).0);
    ids.extend(alternate(&cp.big.chains[cut.e].edges).0.into_iter().take(k[cut.e].div_ceil(2)));
    let out = Matching::new(&cp.big.graph, ids)?;
    assert!(
        out.len() > inner.len() + k[cut.f] / 2 + k[cut.e].div_ceil(2),
        "extension across a loop cut gains ⌊k(f)/2⌋ + ⌊(k(e)+1)/2⌋ + 1"
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::exact::{matching_number, nu_k};
    use crate::named;

    fn k4() -> CubicPseudograph {
        CubicPseudograph::new(named::complete(4)).unwrap()
    }

    /// Loop at 0, edge to 1, and 1 joined to the looped vertices 2 and 3.
    fn four_vertex() -> CubicPseudograph {
        CubicPseudograph::from_edges(4, [(0, 0), (0, 1), (1, 2), (1, 3), (2, 2), (3, 3)]).unwrap()
    }

    /// Star with three looped leaves.
    fn star_of_loops() -> CubicPseudograph {
        CubicPseudograph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (3, 3)]).unwrap()
    }

    fn pattern(g0: &CubicPseudograph) -> Vec<usize> {
        (0..g0.m()).map(|e| if g0.is_loop(e) { 1 } else { 2 }).collect()
    }

    #[test]
    fn skeleton_of_subdivided_k4() {
        let s = to_cubic_pseudograph(&named::subdivide_all(&named::complete(4))).unwrap();
        assert!(are_isomorphic(&s.base, &named::complete(4)));
        assert_eq!(s.k, vec![1; 6]);
    }

    #[test]
    fn skeleton_of_theta() {
        let s = to_cubic_pseudograph(&named::theta()).unwrap();
        assert!(are_isomorphic(&s.base, &named::triple_edge()));
        assert_eq!(s.k, vec![1, 1, 1]);
    }

    #[test]
    fn attached_cycle_becomes_a_loop() {
        // A 4-cycle hanging off vertex 0 by a path, the rest a cubic piece.
        let g0 = CubicPseudograph::from_edges(4, [(0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (2, 3)]).unwrap();
        let g = realize(&g0, &[3, 2, 2, 2, 2, 2]).unwrap();
        let s = to_cubic_pseudograph(&g).unwrap();
        let loops = s.base.loops();
        assert_eq!(loops.len(), 1);
        assert_eq!(s.k[loops[0]], 3);
        assert!(are_isomorphic(&realize(&s.base, &s.k).unwrap(), &g));
        assert_eq!(realized_order(&s.base, &s.k), g.n());
    }

    #[test]
    fn skeleton_rejects_cycles_and_leaves() {
        assert!(to_cubic_pseudograph(&named::cycle(6)).is_err());
        assert!(to_cubic_pseudograph(&named::path(3)).is_err());
    }

    #[test]
    fn realize_examples() {
        let t = CubicPseudograph::trivial();
        assert_eq!(realize(&t, &[1, 2, 1]).unwrap().n(), 6);
        assert_eq!(realize(&k4(), &[0; 6]).unwrap(), named::complete(4));
        assert!(realize(&t, &[0, 2, 1]).is_err());
    }

    #[test]
    fn cut_of_four_vertex_example_is_trivial() {
        let g0 = four_vertex();
        let cut = cut_loop(&g0, 0).unwrap();
        assert!(cut.graph.is_trivial());
        assert_eq!((cut.u0, cut.v0, cut.u, cut.v), (0, 1, 2, 3));
        let k = vec![1, 2, 2, 2, 1, 1];
        let k2 = derive_k_after_cut(&k, &cut);
        assert_eq!(k2[cut.g], 2);
        assert_eq!(realized_order(&g0, &k) - realized_order(&cut.graph, &k2), 7);
    }

    #[test]
    fn parallel_legs_give_a_loop() {
        // Loop at 0, 0-1, and 1 doubly joined to 2.
        let g0 = CubicPseudograph::from_edges(4, [(0, 0), (0, 1), (1, 2), (1, 2), (2, 3), (3, 3)]).unwrap();
        let cut = cut_loop(&g0, 0).unwrap();
        assert!(cut.graph.is_loop(cut.g));
        assert_eq!(derive_k_after_cut(&[1, 2, 2, 3, 2, 1], &cut)[cut.g], 3);
    }

    #[test]
    fn trivial_is_not_cuttable() {
        assert!(matches!(cut_loop(&CubicPseudograph::trivial(), 0), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn class_membership_examples() {
        let t = CubicPseudograph::trivial();
        let c = in_class_m(&t, &[1, 2, 1]);
        assert!(c.in_m);
        assert_eq!(c.internal_vertex_count, Some(0));
        let s = star_of_loops();
        let c = in_class_m(&s, &pattern(&s));
        assert_eq!(c.internal_vertex_count, Some(1));
        assert!(!in_class_m(&k4(), &[2; 6]).in_m);
        assert!(!in_class_m(&t, &[1, 3, 1]).in_m);
    }

    #[test]
    fn trivial_pair_and_matching() {
        let t = CubicPseudograph::trivial();
        let g = realize(&t, &[1, 2, 1]).unwrap();
        let pair = certify_pair(&t, &[1, 2, 1]).unwrap();
        assert!(pair.is_valid(&g));
        assert_eq!(pair.total(), 5);
        assert_eq!(certify_matching(&t, &[1, 2, 1]).unwrap().len(), 3);
    }

    #[test]
    fn loopless_pair_on_k4() {
        let k = vec![2; 6];
        let g = realize(&k4(), &k).unwrap();
        let pair = certify_pair(&k4(), &k).unwrap();
        assert!(pair.is_valid(&g));
        assert!(pair.total() >= 14);
        assert!(pair.total() <= nu_k(&g, 2).value);
    }

    #[test]
    fn star_of_loops_matching_is_six_of_thirteen() {
        let s = star_of_loops();
        let k = pattern(&s);
        let g = realize(&s, &k).unwrap();
        assert_eq!(g.n(), 13);
        let m = certify_matching(&s, &k).unwrap();
        assert_eq!(m.len(), 6);
        assert_eq!(matching_number(&g), 6);
    }

    #[test]
    fn one_cut_step_gain() {
        let g0 = four_vertex();
        let k = vec![2, 3, 2, 2, 1, 1];
        let cut = cut_loop(&g0, 0).unwrap();
        let k2 = derive_k_after_cut(&k, &cut);
        let before = certify_pair(&cut.graph, &k2).unwrap().total();
        let after = certify_pair(&g0, &k).unwrap();
        assert!(after.total() >= before + k[cut.f] + k[cut.e] + 3);
        assert!(after.total() <= nu_k(&realize(&g0, &k).unwrap(), 2).value);
    }

    #[test]
    fn matching_cut_step_gain() {
        // Double edge 0-1 with looped pendants at 2 and 3: minimal pattern,
        // but the skeleton has a cycle, so not in class 𝔐.
        let g0 = CubicPseudograph::from_edges(4, [(0, 1), (0, 1), (0, 2), (1, 3), (2, 2), (3, 3)]).unwrap();
        let k = pattern(&g0);
        assert!(!in_class_m(&g0, &k).in_m);
        let e = applicable_loops(&g0)[0];
        let cut = cut_loop(&g0, e).unwrap();
        let k2 = derive_k_after_cut(&k, &cut);
        let before = certify_matching(&cut.graph, &k2).unwrap().len();
        let g = realize(&g0, &k).unwrap();
        let m = certify_matching(&g0, &k).unwrap();
        assert!(m.is_valid(&g));
        assert!(m.len() > before + k[cut.f] / 2 + k[cut.e].div_ceil(2));
        assert!(7 * m.len() >= 3 * g.n());
    }
}
