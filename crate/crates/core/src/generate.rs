//! Graph generators: exhaustive enumeration of connected cubic (pseudo)graphs
//! up to isomorphism, random cubic and subcubic graphs, and the search for
//! graphs on which a bound holds with equality.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{precondition, Result};
use crate::exact::{matching_number, nu_k};
use crate::graph::Multigraph;

struct Filler {
    n: usize,
    loops: bool,
    deficit: Vec<usize>,
    edges: Vec<(usize, usize)>,
    touched: usize,
    out: Vec<Vec<(usize, usize)>>,
}

impl Filler {
    fn next_vertex(&mut self) {
        match (0..self.touched).find(|&v| self.deficit[v] > 0) {
            Some(v) => self.fill(v, v),
            None => {
                // Every touched vertex is saturated: either done, or the
                // component closed early and the graph would be disconnected.
                if self.touched == self.n {
                    self.out.push(self.edges.clone());
                }
            }
        }
    }

    /// Give vertex `v` its remaining edges, partners in nondecreasing order
    /// starting at `from`. Untouched vertices are interchangeable, so only the
    /// first of them is ever offered.
    fn fill(&mut self, v: usize, from: usize) {
        if self.deficit[v] == 0 {
            self.next_vertex();
            return;
        }
        if from == v && self.loops && self.deficit[v] >= 2 {
            self.deficit[v] -= 2;
            self.edges.push((v, v));
            self.fill(v, v);
            self.edges.pop();
            self.deficit[v] += 2;
        }
        let last = if self.touched < self.n { self.touched } else { self.touched - 1 };
        for w in from.max(v + 1)..=last {
            if self.deficit[w] == 0 {
                continue;
            }
            let fresh = w == self.touched;
            if fresh {
                self.touched += 1;
            }
            self.deficit[v] -= 1;
            self.deficit[w] -= 1;
            self.edges.push((v, w));
            self.fill(v, w);
            self.edges.pop();
            self.deficit[v] += 1;
            self.deficit[w] += 1;
            if fresh {
                self.touched -= 1;
            }
        }
    }
}

fn enumerate(n: usize, loops: bool) -> Result<Vec<Multigraph>> {
    if n == 0 || n % 2 == 1 {
        return precondition(format!("no cubic graph on {n} vertices (n must be even and positive)"));
    }
    let mut filler = Filler {
        n,
        loops,
        deficit: vec![3; n],
        edges: Vec::new(),
        touched: 1,
        out: Vec::new(),
    };
    filler.next_vertex();
    let forms: Vec<CanonicalForm> = filler
        .out
        .par_iter()
        .map(|edges| {
            let g = if loops {
                Multigraph::pseudo(n, edges.iter().copied())
            } else {
                Multigraph::new(n, edges.iter().copied())
            };
            canonical_form(&g.expect("generated graph is valid"))
        })
        .collect();
    let unique: BTreeMap<CanonicalForm, ()> = forms.into_iter().map(|f| (f, ())).collect();
    Ok(unique.keys().map(CanonicalForm::to_graph).collect())
}

/// Every connected loopless cubic multigraph on `n` vertices, one per
/// isomorphism class, in canonical order.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Multigraph>> {
    enumerate(n, false)
}

/// Every connected cubic pseudo-graph (loops allowed) on `n` vertices, one per
/// isomorphism class, in canonical order.
pub fn enumerate_cubic_pseudographs(n: usize) -> Result<Vec<Multigraph>> {
    enumerate(n, true).map(|gs| gs.into_iter().map(Multigraph::into_pseudo).collect())
}

/// Random loopless cubic multigraph from the configuration model; pairings
/// that create a loop are thrown away and redrawn.
pub fn random_cubic(n: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 || n % 2 == 1 {
        return precondition(format!("no cubic graph on {n} vertices (n must be even and positive)"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_cubic_with(n, &mut rng))
}

fn random_cubic_with(n: usize, rng: &mut ChaCha8Rng) -> Multigraph {
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        return Multigraph::new(n, edges).expect("pairing without loops");
    }
}

/// Random loopless graph with all degrees in {2, 3}, for `n >= 3`.
///
/// Even `n`: a random cubic graph minus a random subset of a random maximal
/// matching. Odd `n`: a random cubic graph on `n + 1` vertices minus a vertex
/// with three distinct neighbors, then minus a random subset of a maximal
/// matching among the edges whose ends both still have degree 3.
pub fn random_subcubic(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 3 {
        return precondition("random_subcubic needs n >= 3");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = if n.is_multiple_of(2) {
        random_cubic_with(n, &mut rng)
    } else {
        loop {
            let g = random_cubic_with(n + 1, &mut rng);
            let candidates: Vec<usize> = (0..n + 1).filter(|&v| g.neighbors(v).len() == 3).collect();
            if let Some(&x) = candidates.choose(&mut rng) {
                let rest: Vec<usize> = (0..n + 1).filter(|&v| v != x).collect();
                break g.induced(&rest).graph;
            }
        }
    };
    let mut order: Vec<usize> = (0..base.m()).collect();
    order.shuffle(&mut rng);
    let mut blocked = vec![false; n];
    let mut removed = Vec::new();
    for e in order {
        let (u, v) = base.endpoints(e);
        if blocked[u] || blocked[v] || base.deg(u) != 3 || base.deg(v) != 3 {
            continue;
        }
        blocked[u] = true;
        blocked[v] = true;
        if rng.gen_bool(0.5) {
            removed.push(e);
        }
    }
    let (g, _) = base.without_edges(&removed);
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    Ok(Multigraph::new(n, edges).expect("subgraph of a loopless graph"))
}

/// Named inequalities for [`search_tight`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TightBound {
    /// `ν₁ = ⌈2n/5⌉`
    Nu1TwoFifths,
    /// `ν₂ = ⌈4n/5⌉`
    Nu2FourFifths,
    /// `ν₃ = ⌈7n/6⌉`
    Nu3SevenSixths,
    /// `4ν₂ = n + 2ν₃`
    ArithmeticalMean,
}

impl TightBound {
    pub fn name(self) -> &'static str {
        match self {
            TightBound::Nu1TwoFifths => "nu1_2_5",
            TightBound::Nu2FourFifths => "nu2_4_5",
            TightBound::Nu3SevenSixths => "nu3_7_6",
            TightBound::ArithmeticalMean => "arithmetical_mean",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            TightBound::Nu1TwoFifths,
            TightBound::Nu2FourFifths,
            TightBound::Nu3SevenSixths,
            TightBound::ArithmeticalMean,
        ]
        .into_iter()
        .find(|b| b.name() == name)
    }

    /// Whether the inequality holds with equality on `g`.
    pub fn is_tight(self, g: &Multigraph) -> bool {
        let n = g.n();
        match self {
            TightBound::Nu1TwoFifths => matching_number(g) == (2 * n).div_ceil(5),
            TightBound::Nu2FourFifths => nu_k(g, 2).value == (4 * n).div_ceil(5),
            TightBound::Nu3SevenSixths => nu_k(g, 3).value == (7 * n).div_ceil(6),
            TightBound::ArithmeticalMean => 4 * nu_k(g, 2).value == n + 2 * nu_k(g, 3).value,
        }
    }
}

/// All enumerated cubic graphs on `n` vertices attaining `bound` with equality.
pub fn search_tight(n: usize, bound: TightBound) -> Result<Vec<Multigraph>> {
    let all = enumerate_cubic(n)?;
    let tight: Vec<bool> = all.par_iter().map(|g| bound.is_tight(g)).collect();
    Ok(all.into_iter().zip(tight).filter(|(_, t)| *t).map(|(g, _)| g).collect())
}
