//! Small named graphs used throughout tests and examples.

use crate::graph::Multigraph;

/// `K_n`, edges in lexicographic order of endpoints.
pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Multigraph::new(n, edges).expect("complete graph")
}

/// `C_n` with edge `i = (i, i+1 mod n)`. `C_2` is a double edge.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 2, "a cycle has at least two vertices");
    Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Multigraph {
    Multigraph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

/// Two vertices joined by `k` parallel edges.
pub fn fat_edge(k: usize) -> Multigraph {
    Multigraph::new(2, std::iter::repeat_n((0, 1), k)).expect("parallel edges")
}

/// The cubic graph on two vertices.
pub fn triple_edge() -> Multigraph {
    fat_edge(3)
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::new(10, edges).expect("petersen")
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Multigraph::new(a + b, edges).expect("complete bipartite")
}

/// Two hubs `0, 1` joined by three paths of length two through `2, 3, 4`.
pub fn theta() -> Multigraph {
    Multigraph::new(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).expect("theta")
}

/// Every edge of `g` replaced by a path of length two.
pub fn subdivide_all(g: &Multigraph) -> Multigraph {
    let mut h = g.clone();
    for e in 0..g.m() {
        h = h.subdivide_edge(e, 1).expect("valid edge").0;
    }
    h
}
