//! Edmonds' blossom algorithm on the simple graph underlying a multigraph.

use crate::graph::{Matching, Multigraph};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free far end.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        NONE
    }
}

/// Maximum matching of the simple graph given by `adj`, restricted to
/// vertices with `alive[v]`. Returns the mate of every vertex.
pub(crate) fn mates(adj: &[Vec<usize>], alive: &[bool]) -> Vec<usize> {
    let n = adj.len();
    let filtered: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            if alive[v] {
                adj[v].iter().copied().filter(|&w| alive[w] && w != v).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let mut b = Blossom {
        adj: &filtered,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    // Greedy start.
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(&w) = filtered[v].iter().find(|&&w| b.mate[w] == NONE) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE || filtered[root].is_empty() {
            continue;
        }
        let mut v = b.find_path(root);
        while v != NONE {
            let pv = b.parent[v];
            let ppv = b.mate[pv];
            b.mate[v] = pv;
            b.mate[pv] = v;
            v = ppv;
        }
    }
    b.mate
}

/// Simple neighbor lists (no loops, no repeats).
pub(crate) fn simple_adjacency(g: &Multigraph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v)).collect()
}

pub(crate) fn matching_size(adj: &[Vec<usize>], alive: &[bool]) -> usize {
    mates(adj, alive).iter().filter(|&&m| m != NONE).count() / 2
}

/// A maximum matching, with the lowest-id edge chosen between matched pairs.
pub fn maximum_matching_fast(g: &Multigraph) -> Matching {
    let adj = simple_adjacency(g);
    let mate = mates(&adj, &vec![true; g.n()]);
    let ids = (0..g.n())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| g.edge_between(v, mate[v]).expect("matched vertices are adjacent"))
        .collect();
    Matching::from_ids_unchecked(ids)
}
