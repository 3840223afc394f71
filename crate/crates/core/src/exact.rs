//! Exact values by complete search: ν₁, ν_k, α_k, χ′ and the number of
//! pairwise edge-disjoint maximum matchings.
//!
//! `ν_k` is found by branch and bound over edge labels `{uncolored, 1..k}`.
//! Colors are opened in order (the first edge of class `i` precedes the first
//! edge of class `i + 1`), which removes the `k!` relabelings of a solution.
//! The bound adds, for every vertex, the number of further edges it can still
//! take (`min(free colors, unprocessed incident edges)`), halved.
//!
//! Everything here is exponential in the worst case and intended for graphs
//! of up to roughly sixteen vertices.

use crate::blossom::{self, maximum_matching_fast};
use crate::graph::{Matching, MatchingFamily, Multigraph};

/// Exact `ν_k` with a witness family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuResult {
    pub k: usize,
    pub value: usize,
    pub witness: MatchingFamily,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaResult {
    pub k: usize,
    pub value: usize,
}

/// Size of a maximum matching (blossom).
pub fn matching_number(g: &Multigraph) -> usize {
    maximum_matching_fast(g).len()
}

/// The lexicographically smallest maximum matching (by sorted edge ids).
///
/// Edges are scanned in id order and kept whenever the rest of the graph can
/// still complete a maximum matching.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    let adj = blossom::simple_adjacency(g);
    let mut alive = vec![true; g.n()];
    let target = blossom::matching_size(&adj, &alive);
    let mut chosen = Vec::new();
    for e in 0..g.m() {
        if chosen.len() == target {
            break;
        }
        let (u, v) = g.endpoints(e);
        if u == v || !alive[u] || !alive[v] {
            continue;
        }
        alive[u] = false;
        alive[v] = false;
        if chosen.len() + 1 + blossom::matching_size(&adj, &alive) == target {
            chosen.push(e);
        } else {
            alive[u] = true;
            alive[v] = true;
        }
    }
    Matching::from_ids_unchecked(chosen)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Objective {
    Total,
    /// Largest single class among families of the given total.
    Alpha { total: usize },
}

struct ColorSearch<'a> {
    g: &'a Multigraph,
    k: usize,
    order: Vec<usize>,
    used: Vec<u32>,
    remaining: Vec<usize>,
    cap_sum: usize,
    label: Vec<u8>,
    class_size: Vec<usize>,
    colored: usize,
    opened: usize,
    objective: Objective,
    best: Option<usize>,
    best_label: Vec<u8>,
    ceiling: usize,
    done: bool,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a Multigraph, k: usize, objective: Objective) -> Self {
        let order = search_order(g);
        let mut remaining = vec![0; g.n()];
        for &e in &order {
            let (u, v) = g.endpoints(e);
            remaining[u] += 1;
            remaining[v] += 1;
        }
        let cap_sum = remaining.iter().map(|&r| r.min(k)).sum();
        Self {
            g,
            k,
            label: vec![0; g.m()],
            order,
            used: vec![0; g.n()],
            remaining,
            cap_sum,
            class_size: vec![0; k],
            colored: 0,
            opened: 0,
            objective,
            best: None,
            best_label: vec![0; g.m()],
            ceiling: usize::MAX,
            done: false,
        }
    }

    fn cap(&self, v: usize) -> usize {
        (self.k - self.used[v].count_ones() as usize).min(self.remaining[v])
    }

    fn value(&self) -> usize {
        match self.objective {
            Objective::Total => self.colored,
            Objective::Alpha { .. } => self.class_size.iter().copied().max().unwrap_or(0),
        }
    }

    fn offer(&mut self) {
        if let Objective::Alpha { total } = self.objective {
            if self.colored != total {
                return;
            }
        }
        let value = self.value();
        if self.best.is_none_or(|b| value > b) {
            self.best = Some(value);
            self.best_label.copy_from_slice(&self.label);
            if value >= self.ceiling {
                self.done = true;
            }
        }
    }

    fn pruned(&self, pos: usize) -> bool {
        let reachable = self.colored + self.cap_sum / 2;
        match self.objective {
            Objective::Total => self.best.is_some_and(|b| reachable <= b),
            Objective::Alpha { total } => {
                if reachable < total {
                    return true;
                }
                let left = self.order.len() - pos;
                let top = self.class_size.iter().copied().max().unwrap_or(0) + left;
                self.best.is_some_and(|b| top <= b)
            }
        }
    }

    /// Apply (`color = Some(c)`) or skip edge `e`, keeping `cap_sum` current.
    fn step(&mut self, e: usize, color: Option<usize>, undo: bool) {
        let (u, v) = self.g.endpoints(e);
        self.cap_sum -= self.cap(u) + self.cap(v);
        if undo {
            self.remaining[u] += 1;
            self.remaining[v] += 1;
        } else {
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
        }
        if let Some(c) = color {
            let bit = 1u32 << c;
            self.used[u] ^= bit;
            self.used[v] ^= bit;
        }
        self.cap_sum += self.cap(u) + self.cap(v);
    }

    fn run(&mut self, pos: usize) {
        if self.done {
            return;
        }
        if pos == self.order.len() {
            self.offer();
            return;
        }
        if self.pruned(pos) {
            return;
        }
        let e = self.order[pos];
        let (u, v) = self.g.endpoints(e);
        let limit = (self.opened + 1).min(self.k);
        for c in 0..limit {
            let bit = 1u32 << c;
            if self.used[u] & bit != 0 || self.used[v] & bit != 0 {
                continue;
            }
            let opened_before = self.opened;
            if c == self.opened {
                self.opened += 1;
            }
            self.step(e, Some(c), false);
            self.label[e] = c as u8 + 1;
            self.colored += 1;
            self.class_size[c] += 1;
            self.run(pos + 1);
            self.class_size[c] -= 1;
            self.colored -= 1;
            self.label[e] = 0;
            self.step(e, Some(c), true);
            self.opened = opened_before;
            if self.done {
                return;
            }
        }
        self.step(e, None, false);
        self.run(pos + 1);
        self.step(e, None, true);
    }

    fn family(&self) -> MatchingFamily {
        let mut members = vec![Vec::new(); self.k];
        for (e, &l) in self.best_label.iter().enumerate() {
            if l > 0 {
                members[l as usize - 1].push(e);
            }
        }
        MatchingFamily::new(members.into_iter().map(Matching::from_ids_unchecked).collect())
    }

    fn seed(&mut self, fam: &MatchingFamily) {
        let mut label = vec![0u8; self.g.m()];
        for (c, member) in fam.members.iter().enumerate() {
            for &e in member.edges() {
                label[e] = c as u8 + 1;
            }
        }
        self.best_label = label;
        self.best = Some(match self.objective {
            Objective::Total => fam.total(),
            Objective::Alpha { .. } => fam.max_member(),
        });
        if self.best >= Some(self.ceiling) {
            self.done = true;
        }
    }
}

/// Vertices in BFS order; each edge is processed once its later endpoint is
/// reached, so all edges at a vertex are decided close together.
fn search_order(g: &Multigraph) -> Vec<usize> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if pos[w] == usize::MAX {
                    pos[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..g.m()).filter(|&e| !g.is_loop(e)).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (pos[u].max(pos[v]), pos[u].min(pos[v]), e)
    });
    order
}

/// Greedy incumbent: peel off maximum matchings one after another.
fn peeled_family(g: &Multigraph, k: usize) -> MatchingFamily {
    let mut members = Vec::new();
    let mut removed: Vec<usize> = Vec::new();
    for _ in 0..k {
        let (rest, map) = g.without_edges(&removed);
        let m = maximum_matching_fast(&rest).mapped(&map);
        removed.extend_from_slice(m.edges());
        members.push(m);
    }
    MatchingFamily::new(members)
}

/// Trivial upper bound on `ν_k`.
fn nu_ceiling(g: &Multigraph, k: usize) -> usize {
    let proper = (0..g.m()).filter(|&e| !g.is_loop(e)).count();
    let mut deg = vec![0usize; g.n()];
    for e in 0..g.m() {
        if !g.is_loop(e) {
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let by_vertex: usize = deg.iter().map(|&d| d.min(k)).sum::<usize>() / 2;
    proper.min(by_vertex).min(k * (g.n() / 2))
}

/// Maximum total size of `k` pairwise edge-disjoint matchings.
pub fn nu_k(g: &Multigraph, k: usize) -> NuResult {
    assert!(k <= 8, "k above 8 is outside the exact solver's range");
    if k == 0 {
        return NuResult {
            k,
            value: 0,
            witness: MatchingFamily::default(),
        };
    }
    let mut search = ColorSearch::new(g, k, Objective::Total);
    search.ceiling = nu_ceiling(g, k);
    search.seed(&peeled_family(g, k));
    search.run(0);
    let witness = search.family();
    NuResult {
        k,
        value: witness.total(),
        witness,
    }
}

/// Largest single member over all optimal `k`-families.
pub fn alpha_k(g: &Multigraph, k: usize) -> AlphaResult {
    let nu = nu_k(g, k);
    alpha_with(g, &nu)
}

/// `α_k` given an already computed `ν_k` result.
pub fn alpha_with(g: &Multigraph, nu: &NuResult) -> AlphaResult {
    if nu.k == 0 {
        return AlphaResult { k: 0, value: 0 };
    }
    let mut search = ColorSearch::new(g, nu.k, Objective::Alpha { total: nu.value });
    search.ceiling = matching_number(g);
    search.seed(&nu.witness);
    search.run(0);
    AlphaResult {
        k: nu.k,
        value: search.best.unwrap_or(0),
    }
}

/// Smallest `k` with `ν_k = m` (loops are ignored).
pub fn chromatic_index(g: &Multigraph) -> usize {
    let proper = (0..g.m()).filter(|&e| !g.is_loop(e)).count();
    if proper == 0 {
        return 0;
    }
    let mut k = (0..g.n())
        .map(|v| g.incident(v).iter().filter(|&&(w, _)| w != v).count())
        .max()
        .unwrap_or(0)
        .max(1);
    loop {
        if nu_k(g, k).value == proper {
            return k;
        }
        k += 1;
    }
}

/// Every matching of size `ν₁`, each as sorted edge ids, in lexicographic order.
pub fn all_maximum_matchings(g: &Multigraph) -> Vec<Matching> {
    let target = matching_number(g);
    let edges: Vec<usize> = (0..g.m()).filter(|&e| !g.is_loop(e)).collect();
    let mut out = Vec::new();
    let mut alive = vec![true; g.n()];
    let mut chosen = Vec::new();
    enumerate_matchings(g, &edges, 0, target, &mut alive, &mut chosen, &mut out);
    out
}

fn enumerate_matchings(
    g: &Multigraph,
    edges: &[usize],
    from: usize,
    target: usize,
    alive: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Matching>,
) {
    if chosen.len() == target {
        out.push(Matching::from_ids_unchecked(chosen.clone()));
        return;
    }
    // Vertices that can still be matched by a later edge.
    let mut reachable = vec![false; g.n()];
    for &e in &edges[from..] {
        let (u, v) = g.endpoints(e);
        if alive[u] && alive[v] {
            reachable[u] = true;
            reachable[v] = true;
        }
    }
    if chosen.len() + reachable.iter().filter(|&&r| r).count() / 2 < target {
        return;
    }
    for i in from..edges.len() {
        let e = edges[i];
        let (u, v) = g.endpoints(e);
        if !alive[u] || !alive[v] {
            continue;
        }
        alive[u] = false;
        alive[v] = false;
        chosen.push(e);
        enumerate_matchings(g, edges, i + 1, target, alive, chosen, out);
        chosen.pop();
        alive[u] = true;
        alive[v] = true;
    }
}

/// Largest number of pairwise edge-disjoint maximum matchings.
pub fn max_disjoint_maximum_matchings(g: &Multigraph) -> usize {
    if matching_number(g) == 0 {
        // The empty matching is the only maximum matching.
        return 1;
    }
    let all = all_maximum_matchings(g);
    let bits: Vec<Vec<u64>> = all
        .iter()
        .map(|m| {
            let mut b = vec![0u64; g.m().div_ceil(64)];
            for &e in m.edges() {
                b[e / 64] |= 1 << (e % 64);
            }
            b
        })
        .collect();
    let disjoint = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & y == 0);
    let mut best = 0;
    let mut stack: Vec<usize> = Vec::new();
    grow_clique(&bits, &disjoint, 0, &mut stack, &mut best);
    best
}

fn grow_clique(
    bits: &[Vec<u64>],
    disjoint: &dyn Fn(&[u64], &[u64]) -> bool,
    from: usize,
    stack: &mut Vec<usize>,
    best: &mut usize,
) {
    *best = (*best).max(stack.len());
    if stack.len() + (bits.len() - from) <= *best {
        return;
    }
    for i in from..bits.len() {
        if stack.iter().all(|&j| disjoint(&bits[i], &bits[j])) {
            stack.push(i);
            grow_clique(bits, disjoint, i + 1, stack, best);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn maximum_matching_examples() {
        assert_eq!(maximum_matching(&named::complete(4)).len(), 2);
        assert_eq!(maximum_matching(&named::cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&named::petersen()).len(), 5);
        // Lexicographically smallest: K4 edges 0:(0,1) ... 5:(2,3).
        assert_eq!(maximum_matching(&named::complete(4)).edges(), &[0, 5]);
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_k(&named::cycle(5), 2).value, 4);
        assert_eq!(nu_k(&named::triple_edge(), 3).value, 3);
        let k4 = named::complete(4);
        assert_eq!(nu_k(&k4, 2).value, 4);
        assert_eq!(nu_k(&k4, 3).value, 6);
        for k in 1..=4 {
            let r = nu_k(&k4, k);
            assert!(r.witness.is_valid(&k4));
            assert_eq!(r.witness.k(), k);
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_k(&named::complete(4), 2).value, 2);
        assert_eq!(alpha_k(&named::cycle(4), 2).value, 2);
        // χ′ ≤ 2: an optimal pair contains a maximum matching.
        let p = named::path(6);
        assert_eq!(alpha_k(&p, 2).value, matching_number(&p));
    }

    #[test]
    fn chromatic_index_examples() {
        assert_eq!(chromatic_index(&named::complete(4)), 3);
        assert_eq!(chromatic_index(&named::petersen()), 4);
        assert_eq!(chromatic_index(&named::triple_edge()), 3);
        assert_eq!(chromatic_index(&named::cycle(5)), 3);
    }

    #[test]
    fn disjoint_maximum_matching_examples() {
        assert_eq!(max_disjoint_maximum_matchings(&named::complete(4)), 3);
        assert_eq!(max_disjoint_maximum_matchings(&named::cycle(5)), 2);
        assert_eq!(max_disjoint_maximum_matchings(&named::cycle(4)), 2);
        assert_eq!(all_maximum_matchings(&named::cycle(5)).len(), 5);
        assert_eq!(all_maximum_matchings(&named::petersen()).len(), 6);
    }

    #[test]
    fn loops_are_never_colored() {
        let g = Multigraph::pseudo(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(nu_k(&g, 3).value, 1);
        assert_eq!(chromatic_index(&g), 1);
    }
}
