//! Path/cycle systems of graphs in which every edge joins a degree-2 vertex
//! to a vertex of degree at least three, how such systems survive
//! 1-subdivisions, and how an edge-disjoint pair of matchings grows when an
//! edge is subdivided.
//!
//! A system is checked against these properties:
//!
//! 1. degrees along every cycle alternate between 2 and at least 3;
//! 2. every vertex lies on a path or a cycle;
//! 3. path ends have degree 2, and their neighbors off the paths have
//!    degree at least 3;
//! 4. every edge off the system joins a degree-2 vertex to one of degree at
//!    least 3;
//! 5. some maximum matching uses only system edges.

use std::collections::BTreeSet;

use crate::blossom::maximum_matching_fast;
use crate::error::{precondition, Error, Result};
use crate::exact::nu_k;
use crate::graph::{degree_two_components, Matching, Multigraph, PathCycleSystem, Walk};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemWitness {
    pub system: PathCycleSystem,
    /// Alternation of the system's walks.
    pub pair: (Matching, Matching),
    /// A maximum matching of the host whose edges all lie on the system.
    pub included_max_matching: Option<Matching>,
}

fn is_big(g: &Multigraph, v: usize) -> bool {
    g.deg(v) >= 3
}

/// Every edge joins a degree-2 vertex to one of degree at least 3.
pub fn is_two_big_bipartite(g: &Multigraph) -> bool {
    !g.has_loops()
        && g.min_degree() >= 2
        && g.edges().iter().all(|&(u, v)| (g.deg(u) == 2) != (g.deg(v) == 2))
}

/// Connected, loopless, `δ ≥ 2`, and no edge between two vertices of
/// degree at least 3.
fn check_subdivision_host(g: &Multigraph) -> Result<()> {
    if g.has_loops() || g.n() == 0 || !g.is_connected() || g.min_degree() < 2 {
        return precondition("graph must be connected and loopless with minimum degree 2");
    }
    if g.edges().iter().any(|&(u, v)| is_big(g, u) && is_big(g, v)) {
        return precondition("an edge joins two vertices of degree at least 3");
    }
    Ok(())
}

fn is_even_cycle(g: &Multigraph) -> bool {
    g.is_regular(2) && g.is_connected() && g.n().is_multiple_of(2)
}

fn is_odd_cycle(g: &Multigraph) -> bool {
    g.is_regular(2) && g.is_connected() && g.n() % 2 == 1
}

/// Find one cycle among the vertices still `alive`, by depth-first search.
fn find_cycle(g: &Multigraph, alive: &[bool]) -> Option<Walk> {
    let n = g.n();
    let mut state = vec![0u8; n]; // 0 new, 1 on stack, 2 done
    let mut parent_edge = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if !alive[root] || state[root] != 0 {
            continue;
        }
        // Iterative DFS keeping an explicit cursor per vertex.
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, ref mut cursor)) = stack.last_mut() {
            let inc = g.incident(v);
            if *cursor == inc.len() {
                state[v] = 2;
                stack.pop();
                continue;
            }
            let (w, e) = inc[*cursor];
            *cursor += 1;
            if !alive[w] || e == parent_edge[v] || w == v {
                continue;
            }
            if state[w] == 1 {
                // Back edge closes a cycle w ... v.
                let mut vertices = vec![v];
                let mut edges = vec![e];
                let mut x = v;
                while x != w {
                    edges.push(parent_edge[x]);
                    x = parent[x];
                    vertices.push(x);
                }
                vertices.reverse();
                edges.reverse();
                return Some(Walk::cycle(vertices, edges));
            }
            if state[w] == 0 {
                state[w] = 1;
                parent[w] = v;
                parent_edge[w] = e;
                stack.push((w, 0));
            }
        }
    }
    None
}

/// Path between two leaves of the forest induced by `alive` vertices.
fn leaf_path(g: &Multigraph, alive: &[bool]) -> Option<Walk> {
    let live_deg = |v: usize| g.incident(v).iter().filter(|&&(w, _)| alive[w]).count();
    let start = (0..g.n()).find(|&v| alive[v] && live_deg(v) == 1)?;
    // BFS from `start`; the lowest-numbered other leaf in its tree is the target.
    let mut prev = vec![(usize::MAX, usize::MAX); g.n()];
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut tree = Vec::new();
    while let Some(v) = queue.pop_front() {
        tree.push(v);
        for &(w, e) in g.incident(v) {
            if alive[w] && !seen[w] {
                seen[w] = true;
                prev[w] = (v, e);
                queue.push_back(w);
            }
        }
    }
    let end = tree
        .iter()
        .copied()
        .filter(|&v| v != start && live_deg(v) == 1)
        .min()
        .expect("a tree with an edge has two leaves");
    let mut vertices = vec![end];
    let mut edges = Vec::new();
    let mut x = end;
    while x != start {
        let (p, e) = prev[x];
        edges.push(e);
        vertices.push(p);
        x = p;
    }
    vertices.reverse();
    edges.reverse();
    Some(Walk::path(vertices, edges))
}

/// A system of even cycles and even paths covering every vertex, with
/// `|V₂| − |V≥3|` paths. The included maximum matching is the first member
/// of the alternating pair.
pub fn build_system(g: &Multigraph) -> Result<SystemWitness> {
    if !is_two_big_bipartite(g) {
        return precondition("every edge must join a degree-2 vertex to one of degree at least 3");
    }
    let mut alive = vec![true; g.n()];
    let mut system = PathCycleSystem::default();
    while let Some(c) = find_cycle(g, &alive) {
        for &v in &c.vertices {
            alive[v] = false;
        }
        system.cycles.push(c);
    }
    while let Some(p) = leaf_path(g, &alive) {
        for &v in &p.vertices {
            alive[v] = false;
        }
        system.paths.push(p);
    }
    for v in 0..g.n() {
        if alive[v] {
            system.paths.push(Walk::path(vec![v], Vec::new()));
        }
    }
    let pair = system_alternating_pair(g, &system)?;
    Ok(SystemWitness {
        included_max_matching: Some(pair.0.clone()),
        pair,
        system,
    })
}

/// Alternate the edges of every walk of the system, first edge into `H`.
pub fn system_alternating_pair(g: &Multigraph, system: &PathCycleSystem) -> Result<(Matching, Matching)> {
    system.validate(g)?;
    let mut h = Vec::new();
    let mut h2 = Vec::new();
    for w in system.walks() {
        let (a, b) = w.alternate();
        h.extend(a);
        h2.extend(b);
    }
    Ok((Matching::new(g, h)?, Matching::new(g, h2)?))
}

/// Check properties (1)–(4).
pub fn check_system(g: &Multigraph, system: &PathCycleSystem) -> Result<()> {
    system.validate(g)?;
    let owner = system.owner(g.n());
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(Error::InvalidSystem(format!("vertex {v} is not covered")));
    }
    for c in &system.cycles {
        for (i, &v) in c.vertices.iter().enumerate() {
            let w = c.vertices[(i + 1) % c.vertices.len()];
            if (g.deg(v) == 2) == (g.deg(w) == 2) {
                return Err(Error::InvalidSystem(format!("cycle degrees do not alternate at {v}")));
            }
        }
    }
    let on_path: BTreeSet<usize> = system.paths.iter().flat_map(|p| p.vertices.iter().copied()).collect();
    for p in &system.paths {
        for end in [p.first(), p.last()] {
            if g.deg(end) != 2 {
                return Err(Error::InvalidSystem(format!("path end {end} has degree {}", g.deg(end))));
            }
            if let Some(x) = g.neighbors(end).into_iter().find(|x| !on_path.contains(x) && g.deg(*x) < 3) {
                return Err(Error::InvalidSystem(format!("path end {end} has a low-degree neighbor {x} off the paths")));
            }
        }
    }
    let edges = system.edge_set();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        if !edges.contains(&e) && (g.deg(u) == 2) == (g.deg(v) == 2) {
            return Err(Error::InvalidSystem(format!("edge {e} off the system does not join degrees 2 and 3+")));
        }
    }
    Ok(())
}

/// Property (5) for a given matching: maximum, and every edge on the system.
pub fn system_includes(g: &Multigraph, system: &PathCycleSystem, m: &Matching) -> bool {
    let edges = system.edge_set();
    m.is_valid(g) && m.len() == maximum_matching_fast(g).len() && m.edges().iter().all(|e| edges.contains(e))
}

/// The path obtained from cycle `c` by deleting edge `avoid` (incident to
/// `start`), traversed from `start`.
fn open_cycle(c: &Walk, start: usize, avoid: usize) -> Walk {
    let len = c.vertices.len();
    let i = c.vertices.iter().position(|&v| v == start).expect("start on cycle");
    let mut vertices = Vec::with_capacity(len);
    let mut edges = Vec::with_capacity(len - 1);
    if c.edges[i] != avoid {
        // Forward: edges[i] leaves vertices[i].
        for j in 0..len {
            vertices.push(c.vertices[(i + j) % len]);
            if j + 1 < len {
                edges.push(c.edges[(i + j) % len]);
            }
        }
        debug_assert_eq!(c.edges[(i + len - 1) % len], avoid);
    } else {
        for j in 0..len {
            vertices.push(c.vertices[(i + len - j) % len]);
            if j + 1 < len {
                edges.push(c.edges[(i + len - j - 1) % len]);
            }
        }
    }
    Walk::path(vertices, edges)
}

/// Rewrite a walk of `g` into the graph where edge `e = (a, b)`, `a < b`,
/// became `a –e– x –m– b`.
fn subdivide_walk(w: &Walk, e: usize, a: usize, x: usize, m: usize) -> Walk {
    let Some(i) = w.edges.iter().position(|&f| f == e) else {
        return w.clone();
    };
    let (first, second) = if w.vertices[i] == a { (e, m) } else { (m, e) };
    let mut vertices = w.vertices.clone();
    let mut edges = w.edges.clone();
    vertices.insert(i + 1, x);
    edges[i] = first;
    edges.insert(i + 1, second);
    Walk {
        vertices,
        edges,
        closed: w.closed,
    }
}

fn concat(a: &Walk, link: usize, b: &Walk) -> Walk {
    let mut vertices = a.vertices.clone();
    vertices.extend_from_slice(&b.vertices);
    let mut edges = a.edges.clone();
    edges.push(link);
    edges.extend_from_slice(&b.edges);
    Walk::path(vertices, edges)
}

fn oriented_to_end_at(p: &Walk, v: usize) -> Walk {
    if p.last() == v {
        p.clone()
    } else {
        p.reversed()
    }
}

fn oriented_to_start_at(p: &Walk, v: usize) -> Walk {
    if p.first() == v {
        p.clone()
    } else {
        p.reversed()
    }
}

fn prefix(p: &Walk, upto: usize) -> Walk {
    Walk::path(p.vertices[..=upto].to_vec(), p.edges[..upto].to_vec())
}

fn suffix(p: &Walk, from: usize) -> Walk {
    Walk::path(p.vertices[from..].to_vec(), p.edges[from..].to_vec())
}

/// Lift a system satisfying (1)–(5) through the 1-subdivision of `e`.
/// Returns the subdivided graph and a system on it with the same number of
/// paths, again satisfying (1)–(5).
pub fn lift_system(g: &Multigraph, witness: &SystemWitness, e: usize) -> Result<(Multigraph, SystemWitness)> {
    check_subdivision_host(g)?;
    if e >= g.m() {
        return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
    }
    check_system(g, &witness.system)?;
    let (a, b) = g.endpoints(e);
    let (g2, _) = g.subdivide_edge(e, 1)?;
    let x = g.n();
    let m_new = g.m();
    let old = &witness.system;
    let sub = |w: &Walk| subdivide_walk(w, e, a, x, m_new);
    // The segment of the subdivided edge at endpoint `end`.
    let segment_at = |end: usize| if end == a { e } else { m_new };

    let path_pos = old.paths.iter().position(|p| p.edges.contains(&e));
    let cycle_pos = old.cycles.iter().position(|c| c.edges.contains(&e));
    let mut system = PathCycleSystem::default();
    if path_pos.is_some() {
        system.paths = old.paths.iter().map(sub).collect();
        system.cycles = old.cycles.clone();
    } else if let Some(ci) = cycle_pos {
        let (u, v) = if g.deg(a) == 2 { (a, b) } else { (b, a) };
        let c = &old.cycles[ci];
        let (z, zv) = g
            .incident(v)
            .iter()
            .filter(|&&(w, f)| w != v && !c.edges.contains(&f))
            .map(|&(w, f)| (w, f))
            .min_by_key(|&(_, f)| f)
            .expect("vertex of degree 3 has an edge off its cycle");
        let zi = old
            .paths
            .iter()
            .position(|p| p.first() == z || p.last() == z)
            .ok_or_else(|| Error::InvalidSystem(format!("{z} is not a path end")))?;
        let pz = oriented_to_end_at(&old.paths[zi], z);
        let around = open_cycle(c, v, e);
        debug_assert_eq!(around.last(), u);
        let mut merged = concat(&pz, zv, &around);
        merged.vertices.push(x);
        merged.edges.push(segment_at(u));
        for (i, p) in old.paths.iter().enumerate() {
            system.paths.push(if i == zi { merged.clone() } else { p.clone() });
        }
        system.cycles = old.cycles.iter().enumerate().filter(|&(i, _)| i != ci).map(|(_, c)| c.clone()).collect();
    } else {
        let u = if g.deg(a) == 2 { a } else { b };
        let ui = old
            .paths
            .iter()
            .position(|p| p.first() == u || p.last() == u)
            .ok_or_else(|| Error::InvalidSystem(format!("{u} is not a path end")))?;
        let pu = oriented_to_start_at(&old.paths[ui], u);
        let extended = concat(&Walk::path(vec![x], Vec::new()), segment_at(u), &pu);
        for (i, p) in old.paths.iter().enumerate() {
            system.paths.push(if i == ui { extended.clone() } else { p.clone() });
        }
        system.cycles = old.cycles.clone();
    }
    check_system(&g2, &system)?;

    let matching = include_maximum_matching(&g2, &mut system);
    assert_eq!(system.paths.len(), old.paths.len(), "lift keeps the number of paths");
    check_system(&g2, &system)?;
    for c in &system.cycles {
        let on = c.edges.iter().filter(|&&f| matching.contains(f)).count();
        assert_eq!(2 * on, c.len(), "every system cycle is perfectly matched");
    }
    let pair = system_alternating_pair(&g2, &system)?;
    Ok((
        g2,
        SystemWitness {
            system,
            pair,
            included_max_matching: Some(matching),
        },
    ))
}

/// Rework `system` (keeping (1)–(4) and its path count) and pick a maximum
/// matching until every matching edge lies on the system.
fn include_maximum_matching(g: &Multigraph, system: &mut PathCycleSystem) -> Matching {
    let mut m = maximum_matching_fast(g);
    let target = m.len();
    // Each round strictly increases the number of matching edges on the system.
    loop {
        let on_system = system.edge_set();
        if let Some(c) = system.cycles.iter().find(|c| {
            2 * c.edges.iter().filter(|&&f| m.contains(f)).count() < c.len()
        }) {
            let touching: BTreeSet<usize> = c
                .vertices
                .iter()
                .flat_map(|&v| g.incident(v).iter().map(|&(_, f)| f))
                .filter(|&f| m.contains(f))
                .collect();
            let mut ids: Vec<usize> = m.edges().iter().copied().filter(|f| !touching.contains(f)).collect();
            ids.extend(c.alternate().0);
            m = Matching::from_ids_unchecked(ids);
            assert_eq!(m.len(), target, "swapping in a 1-factor keeps the matching maximum");
            continue;
        }
        let Some(&off) = m.edges().iter().find(|f| !on_system.contains(f)) else {
            return m;
        };
        let (p, q) = g.endpoints(off);
        let (u, v) = if g.deg(p) == 2 { (q, p) } else { (p, q) };
        let owner = |x: usize| {
            system
                .paths
                .iter()
                .position(|w| w.vertices.contains(&x))
                .expect("cycles are perfectly matched, so both ends lie on paths")
        };
        let (iu, iv) = (owner(u), owner(v));
        let pu = system.paths[iu].clone();
        let k = pu.vertices.iter().position(|&y| y == u).expect("u on its path");
        if iu != iv {
            // P_wu, (u, v), P_v   and   P_zu − u
            let pv = oriented_to_start_at(&system.paths[iv], v);
            let joined = concat(&prefix(&pu, k), off, &pv);
            let rest = suffix(&pu, k + 1);
            system.paths[iu] = joined;
            system.paths[iv] = rest;
        } else {
            // v is an end of u's own path: reroute through (u, v) instead.
            let pu = oriented_to_start_at(&pu, v);
            let k = pu.vertices.iter().position(|&y| y == u).expect("u on its path");
            let tail = suffix(&pu, k).reversed(); // z ... u
            let head = prefix(&pu, k - 1); // v ... (neighbor of u)
            system.paths[iu] = concat(&tail, off, &head);
        }
    }
}

/// Extend an edge-disjoint pair `(h, h2)` through the 1-subdivision of `e`,
/// gaining one edge. Returns the subdivided graph and the new pair.
pub fn transform_pair_through_subdivision(
    g: &Multigraph,
    h: &Matching,
    h2: &Matching,
    e: usize,
) -> Result<(Multigraph, Matching, Matching)> {
    check_subdivision_host(g)?;
    if is_even_cycle(g) {
        return precondition("graph is an even cycle");
    }
    if e >= g.m() {
        return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
    }
    if !h.is_valid(g) || !h2.is_valid(g) || h.edges().iter().any(|&f| h2.contains(f)) {
        return Err(Error::NotAMatching("pair must be two edge-disjoint matchings of g".into()));
    }
    let (a, b) = g.endpoints(e);
    let (g2, _) = g.subdivide_edge(e, 1)?;
    let x = g.n();
    let m_new = g.m();
    let segment_at = |end: usize| if end == a { e } else { m_new };
    let union: Vec<usize> = h.edges().iter().chain(h2.edges()).copied().collect();
    let components = degree_two_components(g, &union)?;
    let mut h_new: Vec<usize> = h.edges().to_vec();
    let mut h2_new: Vec<usize> = h2.edges().to_vec();

    let replace_walk = |hs: &mut Vec<usize>, hs2: &mut Vec<usize>, old: &Walk, new: &Walk, start_with_first: bool| {
        hs.retain(|f| !old.edges.contains(f));
        hs2.retain(|f| !old.edges.contains(f));
        let (p, q) = new.alternate();
        if start_with_first {
            hs.extend(p);
            hs2.extend(q);
        } else {
            hs.extend(q);
            hs2.extend(p);
        }
    };

    match components.iter().find(|w| w.edges.contains(&e)) {
        Some(c) if c.closed => {
            let v = c
                .vertices
                .iter()
                .copied()
                .filter(|&v| is_big(g, v))
                .min()
                .expect("a connected graph that is not a cycle has a big vertex on every cycle");
            let (u, uv) = g
                .incident(v)
                .iter()
                .copied()
                .filter(|&(_, f)| !c.edges.contains(&f))
                .min_by_key(|&(_, f)| f)
                .expect("big vertex has an edge off the cycle");
            let uw = g.incident(u).iter().map(|&(_, f)| f).find(|&f| f != uv).expect("u has degree 2");
            let i = c.vertices.iter().position(|&y| y == v).expect("v on cycle");
            let len = c.edges.len();
            let around = [c.edges[i], c.edges[(i + len - 1) % len]];
            let f = if around[0] != e { around[0] } else { around[1] };
            let path = concat(&Walk::path(vec![u], Vec::new()), uv, &open_cycle(c, v, f));
            let lifted = subdivide_walk(&path, e, a, x, m_new);
            let first = !h.contains(uw);
            replace_walk(&mut h_new, &mut h2_new, c, &lifted, first);
        }
        Some(p) => {
            let lifted = subdivide_walk(p, e, a, x, m_new);
            // Keep the original orientation of colors at the path's start.
            let first = h.contains(p.edges[0]);
            replace_walk(&mut h_new, &mut h2_new, p, &lifted, first);
        }
        None => {
            let u = [a, b].into_iter().filter(|&y| g.deg(y) == 2).min().expect("e has an end of degree 2");
            let f = g.incident(u).iter().map(|&(_, f)| f).find(|&f| f != e).expect("u has degree 2");
            let seg = segment_at(u);
            if !h.contains(f) {
                h_new.push(seg);
            } else {
                h2_new.push(seg);
            }
        }
    }
    let h1 = Matching::new(&g2, h_new)?;
    let h1b = Matching::new(&g2, h2_new)?;
    assert!(h1.len() + h1b.len() > h.len() + h2.len(), "subdivision gains an edge");
    Ok((g2, h1, h1b))
}

/// Exact `ν₂` of the 1-subdivision of `e`, predicted from `ν₂(g)`.
pub fn nu2_subdivision_value(g: &Multigraph, e: usize) -> Result<usize> {
    check_subdivision_host(g)?;
    if is_even_cycle(g) {
        return precondition("graph is an even cycle");
    }
    if e >= g.m() {
        return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
    }
    let nu2 = nu_k(g, 2).value;
    Ok(if is_odd_cycle(g) { nu2 + 2 } else { nu2 + 1 })
}
