//! Library results against brute force written independently here: every
//! edge labeling for ν_k, α₂ and χ′; every edge subset for matchings;
//! generate-and-group with permutation isomorphism for enumeration.

use kmatch::canon::are_isomorphic;
use kmatch::exact::{
    alpha_k, all_maximum_matchings, chromatic_index, matching_number, max_disjoint_maximum_matchings, maximum_matching,
    nu_k,
};
use kmatch::generate::{enumerate_cubic, enumerate_cubic_pseudographs, random_subcubic};
use kmatch::graph::Multigraph;
use kmatch::named;

/// For every labeling of edges by `0..=k` (0 = unused) that is proper,
/// call `visit` with the class sizes.
fn proper_labelings(g: &Multigraph, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(g: &Multigraph, k: usize, e: usize, label: &mut Vec<usize>, sizes: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if e == g.m() {
            visit(&sizes[1..]);
            return;
        }
        let (u, v) = g.endpoints(e);
        for c in 0..=k {
            if c > 0 {
                if u == v {
                    continue;
                }
                let clash = (0..e).any(|d| {
                    label[d] == c && {
                        let (a, b) = g.endpoints(d);
                        a == u || a == v || b == u || b == v
                    }
                });
                if clash {
                    continue;
                }
            }
            label[e] = c;
            sizes[c] += 1;
            rec(g, k, e + 1, label, sizes, visit);
            sizes[c] -= 1;
            label[e] = 0;
        }
    }
    let mut label = vec![0; g.m()];
    let mut sizes = vec![0; k + 1];
    rec(g, k, 0, &mut label, &mut sizes, visit);
}

/// `(ν_k, α_k)` by full enumeration.
fn brute_nu_alpha(g: &Multigraph, k: usize) -> (usize, usize) {
    let mut best = (0, 0);
    proper_labelings(g, k, &mut |sizes| {
        let total: usize = sizes.iter().sum();
        let big = sizes.iter().copied().max().unwrap_or(0);
        if total > best.0 {
            best = (total, big);
        } else if total == best.0 {
            best.1 = best.1.max(big);
        }
    });
    best
}

fn is_matching(g: &Multigraph, ids: &[usize]) -> bool {
    let mut used = vec![false; g.n()];
    for &e in ids {
        let (u, v) = g.endpoints(e);
        if u == v || used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

/// All maximum matchings by subset enumeration, as sorted id lists.
fn brute_maximum_matchings(g: &Multigraph) -> Vec<Vec<usize>> {
    let mut best = 0;
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << g.m()) {
        let ids: Vec<usize> = (0..g.m()).filter(|&e| mask >> e & 1 == 1).collect();
        if !is_matching(g, &ids) {
            continue;
        }
        if ids.len() > best {
            best = ids.len();
            out.clear();
        }
        if ids.len() == best {
            out.push(ids);
        }
    }
    out.sort();
    out
}

fn small_graphs() -> Vec<Multigraph> {
    let mut gs: Vec<Multigraph> = [2, 4, 6].iter().flat_map(|&n| enumerate_cubic(n).unwrap()).collect();
    gs.extend([
        named::cycle(5),
        named::cycle(6),
        named::theta(),
        named::path(5),
        named::complete_bipartite(2, 3),
    ]);
    for seed in 0..12 {
        gs.push(random_subcubic(5 + seed as usize % 4, seed).unwrap());
    }
    gs
}

#[test]
fn nu_and_alpha_match_enumeration() {
    for g in small_graphs() {
        for k in 1..=3 {
            let (nu, alpha) = brute_nu_alpha(&g, k);
            let r = nu_k(&g, k);
            assert_eq!(r.value, nu, "ν{k} of {:?}", g.edges());
            assert!(r.witness.is_valid(&g) && r.witness.total() == nu);
            if k == 2 {
                assert_eq!(alpha_k(&g, 2).value, alpha, "α₂ of {:?}", g.edges());
            }
        }
    }
}

#[test]
fn chromatic_index_matches_enumeration() {
    for g in small_graphs() {
        let chi = (1..=5).find(|&k| brute_nu_alpha(&g, k).0 == g.m()).unwrap();
        assert_eq!(chromatic_index(&g), chi, "{:?}", g.edges());
    }
}

#[test]
fn matchings_match_enumeration() {
    for g in small_graphs().into_iter().filter(|g| g.m() <= 16) {
        let all = brute_maximum_matchings(&g);
        assert_eq!(matching_number(&g), all[0].len());
        assert_eq!(maximum_matching(&g).edges(), all[0].as_slice(), "lex-smallest on {:?}", g.edges());
        let ours: Vec<Vec<usize>> = all_maximum_matchings(&g).iter().map(|m| m.edges().to_vec()).collect();
        assert_eq!(ours, all);
        // Largest set of pairwise disjoint members, by brute force over subsets.
        let mut best = 1;
        let count = all.len().min(20);
        for mask in 1u32..(1 << count) {
            let pick: Vec<&Vec<usize>> = (0..count).filter(|&i| mask >> i & 1 == 1).map(|i| &all[i]).collect();
            let disjoint = pick
                .iter()
                .enumerate()
                .all(|(i, a)| pick[i + 1..].iter().all(|b| a.iter().all(|e| !b.contains(e))));
            if disjoint {
                best = best.max(pick.len());
            }
        }
        if all.len() <= 20 {
            assert_eq!(max_disjoint_maximum_matchings(&g), best, "{:?}", g.edges());
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn sorted_edges(edges: &[(usize, usize)], perm: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
        .collect();
    out.sort_unstable();
    out
}

/// Connected 3-regular edge multisets on `n` vertices, grouped by trying
/// every vertex permutation.
fn generate_and_group(n: usize, loops: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u..n).map(move |v| (u, v)))
        .filter(|&(u, v)| loops || u != v)
        .collect();
    let m = 3 * n / 2;
    let mut found: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut pick = Vec::new();
    fn rec(pairs: &[(usize, usize)], from: usize, m: usize, n: usize, pick: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let mut deg = vec![0; n];
        for &(u, v) in pick.iter() {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d > 3) {
            return;
        }
        if pick.len() == m {
            out.push(pick.clone());
            return;
        }
        for i in from..pairs.len() {
            pick.push(pairs[i]);
            rec(pairs, i, m, n, pick, out);
            pick.pop();
        }
    }
    rec(&pairs, 0, m, n, &mut pick, &mut found);
    let perms = permutations(n);
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for edges in found {
        let g = Multigraph::pseudo(n, edges.iter().copied()).unwrap();
        if !g.is_connected() {
            continue;
        }
        let form = perms.iter().map(|p| sorted_edges(&edges, p)).min().unwrap();
        if !classes.contains(&form) {
            classes.push(form);
        }
    }
    classes.len()
}

#[test]
fn enumeration_matches_generate_and_group() {
    for n in [2, 4, 6] {
        assert_eq!(enumerate_cubic(n).unwrap().len(), generate_and_group(n, false), "loopless, n = {n}");
    }
    for n in [2, 4] {
        assert_eq!(enumerate_cubic_pseudographs(n).unwrap().len(), generate_and_group(n, true), "loops, n = {n}");
    }
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    let gs = enumerate_cubic(6).unwrap();
    for (i, a) in gs.iter().enumerate() {
        for b in &gs[i + 1..] {
            assert!(!are_isomorphic(a, b));
        }
    }
}
