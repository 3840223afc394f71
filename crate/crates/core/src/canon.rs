//! Canonical labeling of multigraphs by individualization and refinement.
//!
//! Vertices are first split by (degree, loop count) and refined by the
//! multiset of neighbor colors until stable. If the coloring is not
//! discrete, every vertex of the first non-singleton cell is individualized
//! in turn; each discrete leaf gives a relabeling, and the smallest relabeled
//! edge list wins. There is no automorphism pruning, which is fine for the
//! graph sizes used here (up to a few dozen vertices).

use sha2::{Digest, Sha256};

use crate::graph::{LoopPolicy, Multigraph};

/// Relabeled, sorted edge list; equal for two graphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Multigraph {
        let policy = if self.edges.iter().any(|&(u, v)| u == v) {
            LoopPolicy::Allowed
        } else {
            LoopPolicy::Forbidden
        };
        Multigraph::with_policy(self.n, self.edges.iter().copied(), policy)
            .expect("canonical form of a valid graph")
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> (Vec<usize>, usize) {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let colors = keys
        .iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect();
    (colors, sorted.len())
}

/// Refine `colors` to the coarsest equitable coloring below it.
fn refine(g: &Multigraph, mut colors: Vec<usize>) -> Vec<usize> {
    let (mut current, mut classes) = rank(&colors);
    colors = current.clone();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..g.n())
            .map(|v| {
                let mut around: Vec<usize> = g
                    .incident(v)
                    .iter()
                    .filter(|&&(w, _)| w != v)
                    .map(|&(w, _)| colors[w])
                    .collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let (next, count) = rank(&keys);
        current = next;
        if count == classes {
            return current;
        }
        classes = count;
        colors = current.clone();
    }
}

fn relabeled(g: &Multigraph, label: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (label[u], label[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

fn search(g: &Multigraph, colors: Vec<usize>, best: &mut Option<(Vec<(usize, usize)>, Vec<usize>)>) {
    let colors = refine(g, colors);
    let mut size = vec![0usize; g.n()];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(target) = (0..g.n()).find(|&c| size[c] > 1) else {
        let edges = relabeled(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| edges < *b) {
            *best = Some((edges, colors));
        }
        return;
    };
    for v in (0..g.n()).filter(|&v| colors[v] == target) {
        let split: Vec<usize> = (0..g.n())
            .map(|x| 2 * colors[x] + usize::from(colors[x] == target && x != v))
            .collect();
        search(g, split, best);
    }
}

/// `label[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Multigraph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let initial: Vec<(usize, usize)> = (0..g.n())
        .map(|v| {
            let loops = g.incident(v).iter().filter(|&&(w, _)| w == v).count() / 2;
            (g.deg(v), loops)
        })
        .collect();
    let mut best = None;
    search(g, rank(&initial).0, &mut best);
    best.expect("at least one leaf").1
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let label = canonical_labeling(g);
    CanonicalForm {
        n: g.n(),
        edges: relabeled(g, &label),
    }
}

pub fn are_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// Short stable identifier: hex prefix of the SHA-256 of the canonical form.
pub fn graph_id(g: &Multigraph) -> String {
    let form = canonical_form(g);
    let mut text = format!("{} {}", form.n, form.edges.len());
    for (u, v) in &form.edges {
        text.push_str(&format!(" {u}-{v}"));
    }
    let digest = Sha256::digest(text.as_bytes());
    hex::encode(&digest[..8])
}
