//! Multigraphs, pseudo-graphs and the structural primitives shared by every
//! construction in the crate.
//!
//! Edges are identified by a dense id `0..m`, never by their endpoint pair, so
//! parallel edges are first-class. A loop contributes two to the degree of its
//! vertex and appears twice in that vertex's adjacency list.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Whether a graph may carry loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopPolicy {
    Forbidden,
    Allowed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    /// Endpoints, normalized so that `u <= v`.
    edges: Vec<(usize, usize)>,
    loops: LoopPolicy,
    /// `(neighbor, edge id)` per incidence.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    /// A loopless multigraph.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::with_policy(n, edges, LoopPolicy::Forbidden)
    }

    /// A pseudo-graph: loops are permitted.
    pub fn pseudo(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::with_policy(n, edges, LoopPolicy::Allowed)
    }

    pub fn with_policy(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        loops: LoopPolicy,
    ) -> Result<Self> {
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (id, (a, b)) in edges.into_iter().enumerate() {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b && loops == LoopPolicy::Forbidden {
                return Err(Error::LoopForbidden(a));
            }
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            adj[u].push((v, id));
            adj[v].push((u, id));
            list.push((u, v));
        }
        Ok(Self {
            n,
            edges: list,
            loops,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            loops: LoopPolicy::Forbidden,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_policy(&self) -> LoopPolicy {
        self.loops
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Incidences at `v` as `(neighbor, edge id)`; loops appear twice.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Distinct edge ids at `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.adj[v].iter().map(|&(_, e)| e).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Distinct neighbors of `v` other than `v`, in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.adj[v]
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| w != v)
            .collect();
        set.into_iter().collect()
    }

    /// Lowest-id edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u]
            .iter()
            .filter(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .min()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.adj[v].len())
    }

    /// Degree without the range check.
    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    /// Loopless and 3-regular.
    pub fn is_cubic(&self) -> bool {
        !self.has_loops() && self.is_regular(3)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || component_labels(self).1 == 1
    }

    /// Copy with the loop policy relaxed to `Allowed`.
    pub fn into_pseudo(mut self) -> Self {
        self.loops = LoopPolicy::Allowed;
        self
    }

    /// Replace edge `e` by a path of length `k + 1`.
    ///
    /// New vertices get ids `n, n+1, ...` in path order starting from the
    /// lower-numbered endpoint. Edge `e` keeps its id for the first segment;
    /// the remaining segments get ids `m, m+1, ...` in path order.
    pub fn subdivide_edge(&self, e: usize, k: usize) -> Result<(Multigraph, SubdivisionTrace)> {
        if e >= self.m() {
            return Err(Error::EdgeOutOfRange { edge: e, m: self.m() });
        }
        let (u, v) = self.edges[e];
        let mut vertices = vec![u];
        vertices.extend(self.n..self.n + k);
        vertices.push(v);
        let mut edges = self.edges.clone();
        let mut path_edges = vec![e];
        edges[e] = (u, vertices[1]);
        for i in 1..=k {
            path_edges.push(edges.len());
            edges.push((vertices[i], vertices[i + 1]));
        }
        let g = Multigraph::with_policy(self.n + k, edges, self.loops)?;
        Ok((
            g,
            SubdivisionTrace {
                base_edge: e,
                vertices,
                edges: path_edges,
            },
        ))
    }

    /// Spanning subgraph without the listed edges. Returns the new graph and,
    /// for each of its edges, the id in `self`.
    pub fn without_edges(&self, removed: &[usize]) -> (Multigraph, Vec<usize>) {
        let drop: BTreeSet<usize> = removed.iter().copied().collect();
        let keep: Vec<usize> = (0..self.m()).filter(|e| !drop.contains(e)).collect();
        let g = Multigraph::with_policy(self.n, keep.iter().map(|&e| self.edges[e]), self.loops)
            .expect("subgraph of a valid graph");
        (g, keep)
    }

    /// Subgraph induced by `vertices` (relabelled `0..len` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> InducedSubgraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edge_map = Vec::new();
        let mut edges = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edge_map.push(e);
                edges.push((index[u], index[v]));
            }
        }
        let graph = Multigraph::with_policy(vertices.len(), edges, self.loops)
            .expect("induced subgraph of a valid graph");
        InducedSubgraph {
            vertices: vertices.to_vec(),
            graph,
            edge_map,
        }
    }

    /// Disjoint union `self ⊎ other`; `other`'s vertices and edges are shifted.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let policy = if self.loops == LoopPolicy::Allowed || other.loops == LoopPolicy::Allowed {
            LoopPolicy::Allowed
        } else {
            LoopPolicy::Forbidden
        };
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Multigraph::with_policy(self.n + other.n, edges, policy).expect("union of valid graphs")
    }
}

/// An induced subgraph together with the maps back to its host.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    /// `vertices[i]` is the host vertex of local vertex `i`.
    pub vertices: Vec<usize>,
    pub graph: Multigraph,
    /// `edge_map[e]` is the host edge of local edge `e`.
    pub edge_map: Vec<usize>,
}

/// How a base edge was replaced by a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionTrace {
    pub base_edge: usize,
    /// Vertex sequence of the replacement path, endpoints included.
    pub vertices: Vec<usize>,
    /// Edge ids along the path; `edges[i]` joins `vertices[i]` and `vertices[i+1]`.
    pub edges: Vec<usize>,
}

pub fn degree(g: &Multigraph, v: usize) -> Result<usize> {
    g.degree(v)
}

pub fn subdivide_edge(g: &Multigraph, e: usize, k: usize) -> Result<(Multigraph, SubdivisionTrace)> {
    g.subdivide_edge(e, k)
}

/// Component label per vertex and the number of components.
fn component_labels(g: &Multigraph) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.incident(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Connected components, ordered by their smallest vertex. Each carries the
/// induced subgraph and the edge-id map back to `g`.
pub fn connected_components(g: &Multigraph) -> Vec<InducedSubgraph> {
    let (label, count) = component_labels(g);
    let mut groups = vec![Vec::new(); count];
    for v in 0..g.n() {
        groups[label[v]].push(v);
    }
    groups.iter().map(|vs| g.induced(vs)).collect()
}

/// A set of edges no two of which share a vertex. Loops are never members.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    pub fn new(g: &Multigraph, ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut edges: Vec<usize> = ids.into_iter().collect();
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::NotAMatching("repeated edge id".into()));
        }
        let mut used = vec![false; g.n()];
        for &e in &edges {
            if e >= g.m() {
                return Err(Error::HostMismatch);
            }
            let (u, v) = g.endpoints(e);
            if u == v {
                return Err(Error::NotAMatching(format!("edge {e} is a loop")));
            }
            if used[u] || used[v] {
                return Err(Error::NotAMatching(format!("edge {e} shares a vertex")));
            }
            used[u] = true;
            used[v] = true;
        }
        Ok(Self { edges })
    }

    /// Trusts the caller; the ids are sorted but not checked.
    pub(crate) fn from_ids_unchecked(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Self { edges: ids }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sorted edge ids.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_valid(&self, g: &Multigraph) -> bool {
        Matching::new(g, self.edges.iter().copied()).is_ok()
    }

    /// For every vertex, the matching edge covering it.
    pub fn mates(&self, g: &Multigraph) -> Vec<Option<usize>> {
        let mut mate = vec![None; g.n()];
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            mate[u] = Some(e);
            mate[v] = Some(e);
        }
        mate
    }

    /// Vertices not covered, in increasing order.
    pub fn unsaturated(&self, g: &Multigraph) -> Vec<usize> {
        let mate = self.mates(g);
        (0..g.n()).filter(|&v| mate[v].is_none()).collect()
    }

    /// Edge ids in `self` or `other` but not both.
    pub fn symmetric_difference(&self, other: &Matching) -> Vec<usize> {
        let a: BTreeSet<usize> = self.edges.iter().copied().collect();
        let b: BTreeSet<usize> = other.edges.iter().copied().collect();
        a.symmetric_difference(&b).copied().collect()
    }

    /// Image under an edge-id map (e.g. from a component back to its host).
    pub fn mapped(&self, map: &[usize]) -> Matching {
        Matching::from_ids_unchecked(self.edges.iter().map(|&e| map[e]).collect())
    }
}

/// An ordered list of pairwise edge-disjoint matchings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingFamily {
    pub members: Vec<Matching>,
}

impl MatchingFamily {
    pub fn new(members: Vec<Matching>) -> Self {
        Self { members }
    }

    pub fn total(&self) -> usize {
        self.members.iter().map(Matching::len).sum()
    }

    pub fn max_member(&self) -> usize {
        self.members.iter().map(Matching::len).max().unwrap_or(0)
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn is_valid(&self, g: &Multigraph) -> bool {
        validate_family(g, self)
    }

    /// All member edges, sorted.
    pub fn union(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.members.iter().flat_map(|m| m.edges().iter().copied()).collect();
        all.sort_unstable();
        all
    }
}

/// Every member is a matching of `g` and no edge is used twice.
pub fn validate_family(g: &Multigraph, fam: &MatchingFamily) -> bool {
    let mut seen = vec![false; g.m()];
    for member in &fam.members {
        if !member.is_valid(g) {
            return false;
        }
        for &e in member.edges() {
            if seen[e] {
                return false;
            }
            seen[e] = true;
        }
    }
    true
}

/// A path (`closed == false`, `vertices.len() == edges.len() + 1`) or a cycle
/// (`closed == true`, `vertices.len() == edges.len()`, the last edge closes it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub closed: bool,
}

impl Walk {
    pub fn path(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        Self {
            vertices,
            edges,
            closed: false,
        }
    }

    pub fn cycle(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        Self {
            vertices,
            edges,
            closed: true,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("walk has a vertex")
    }

    pub fn reversed(&self) -> Walk {
        if self.closed {
            // Keep the start vertex; traverse the other way round.
            let mut vertices = vec![self.vertices[0]];
            vertices.extend(self.vertices[1..].iter().rev());
            let edges = self.edges.iter().rev().copied().collect();
            Walk::cycle(vertices, edges)
        } else {
            Walk::path(
                self.vertices.iter().rev().copied().collect(),
                self.edges.iter().rev().copied().collect(),
            )
        }
    }

    /// Check that consecutive vertices are joined by the recorded edges.
    pub fn check(&self, g: &Multigraph) -> Result<()> {
        let expected = if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len().saturating_sub(1)
        };
        if self.vertices.is_empty() || self.edges.len() != expected {
            return Err(Error::InvalidSystem("vertex/edge count mismatch".into()));
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if e >= g.m() {
                return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
            }
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % self.vertices.len()];
            let (x, y) = g.endpoints(e);
            if !((x == a && y == b) || (x == b && y == a)) {
                return Err(Error::InvalidSystem(format!("edge {e} does not join {a} and {b}")));
            }
        }
        let distinct: BTreeSet<usize> = self.vertices.iter().copied().collect();
        if distinct.len() != self.vertices.len() {
            return Err(Error::InvalidSystem("walk repeats a vertex".into()));
        }
        let distinct_edges: BTreeSet<usize> = self.edges.iter().copied().collect();
        if distinct_edges.len() != self.edges.len() {
            return Err(Error::InvalidSystem("walk repeats an edge".into()));
        }
        Ok(())
    }

    /// Alternate the walk's edges into two matchings, the first edge going to
    /// the first returned set.
    pub fn alternate(&self) -> (Vec<usize>, Vec<usize>) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let usable = if self.closed && self.edges.len() % 2 == 1 {
            self.edges.len() - 1
        } else {
            self.edges.len()
        };
        for (i, &e) in self.edges[..usable].iter().enumerate() {
            if i % 2 == 0 {
                a.push(e);
            } else {
                b.push(e);
            }
        }
        (a, b)
    }

    /// A maximum matching of the walk itself.
    pub fn max_matching(&self) -> Vec<usize> {
        self.alternate().0
    }
}

/// Components of an edge set in which every vertex has degree at most two.
///
/// Paths come first, each starting at its lower-numbered end vertex in order
/// of that vertex; then cycles, each starting at its lowest vertex and
/// leaving along its lower-id edge.
pub fn degree_two_components(g: &Multigraph, edge_set: &[usize]) -> Result<Vec<Walk>> {
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &e in edge_set {
        if e >= g.m() {
            return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
        }
        let (u, v) = g.endpoints(e);
        if u == v {
            return Err(Error::Precondition(format!("edge {e} is a loop")));
        }
        inc[u].push(e);
        inc[v].push(e);
    }
    for (v, list) in inc.iter_mut().enumerate() {
        if list.len() > 2 {
            return Err(Error::Precondition(format!("vertex {v} has degree {} > 2", list.len())));
        }
        list.sort_unstable();
    }
    let mut used = vec![false; g.m()];
    let mut out = Vec::new();
    let follow = |start: usize, first: usize, used: &mut Vec<bool>| -> (Vec<usize>, Vec<usize>) {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut cur = start;
        let mut next_edge = Some(first);
        while let Some(e) = next_edge {
            used[e] = true;
            edges.push(e);
            cur = g.other_end(e, cur);
            next_edge = inc[cur].iter().copied().find(|&f| !used[f]);
            if cur == start {
                break;
            }
            vertices.push(cur);
        }
        (vertices, edges)
    };
    for v in 0..g.n() {
        if inc[v].len() == 1 && !used[inc[v][0]] {
            let (vs, es) = follow(v, inc[v][0], &mut used);
            out.push(Walk::path(vs, es));
        }
    }
    for v in 0..g.n() {
        if let Some(&e) = inc[v].iter().find(|&&e| !used[e]) {
            let (vs, es) = follow(v, e, &mut used);
            out.push(Walk::cycle(vs, es));
        }
    }
    Ok(out)
}

/// Alternating components of `a △ b`: paths and even cycles whose edges
/// alternate between `a \ b` and `b \ a`.
pub fn symmetric_difference_components(
    g: &Multigraph,
    a: &Matching,
    b: &Matching,
) -> Result<Vec<Walk>> {
    if a.edges().iter().chain(b.edges()).any(|&e| e >= g.m()) {
        return Err(Error::HostMismatch);
    }
    degree_two_components(g, &a.symmetric_difference(b))
}

/// Vertex-disjoint paths and cycles of a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathCycleSystem {
    pub paths: Vec<Walk>,
    pub cycles: Vec<Walk>,
}

impl PathCycleSystem {
    pub fn walks(&self) -> impl Iterator<Item = &Walk> {
        self.paths.iter().chain(self.cycles.iter())
    }

    /// Structural invariants: each walk is well formed, cycles have at least
    /// two vertices, and all members are pairwise vertex-disjoint.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for p in &self.paths {
            if p.closed {
                return Err(Error::InvalidSystem("closed walk listed as a path".into()));
            }
        }
        for c in &self.cycles {
            if !c.closed || c.vertices.len() < 2 {
                return Err(Error::InvalidSystem("cycle with fewer than two vertices".into()));
            }
        }
        for w in self.walks() {
            w.check(g)?;
            for &v in &w.vertices {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
                }
                if seen[v] {
                    return Err(Error::InvalidSystem(format!("vertex {v} covered twice")));
                }
                seen[v] = true;
            }
        }
        Ok(())
    }

    /// Vertex -> index of the walk covering it (`paths` first, then `cycles`).
    pub fn owner(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (i, w) in self.walks().enumerate() {
            for &v in &w.vertices {
                owner[v] = Some(i);
            }
        }
        owner
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.walks().flat_map(|w| w.edges.iter().copied()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.walks().map(Walk::len).sum()
    }
}
