//! The eight acceptance criteria, one PASS/FAIL line each. Runs as a plain
//! binary so the lines are printed even when everything passes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kmatch::certify::{certify_cubic, pair_to_triple, verify_all};
use kmatch::decomposition::nu2_subdivision_value;
use kmatch::exact::{all_maximum_matchings, matching_number, nu_k};
use kmatch::generate::{enumerate_cubic, enumerate_cubic_pseudographs, random_cubic, random_subcubic};
use kmatch::graph::Multigraph;
use kmatch::named;
use kmatch::pseudograph::{
    applicable_loops, certify_matching, certify_pair, cut_loop, derive_k_after_cut, has_long_edge, has_long_loop,
    in_class_m, realize, realized_order, CubicPseudograph,
};
use kmatch::separated::{bad_pairs, separated_maximum_matching};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_cubic() -> Vec<Multigraph> {
    [2, 4, 6, 8].iter().flat_map(|&n| enumerate_cubic(n).unwrap()).collect()
}

fn exhaustive_verification() -> Outcome {
    let start = Instant::now();
    let graphs = small_cubic();
    for g in &graphs {
        let r = verify_all(g).map_err(|e| e.to_string())?;
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
        ensure(failed.is_empty(), || format!("{:?} fails {failed:?}", g.edges()))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(600), || format!("took {t:?}"))?;
    Ok(format!("{} graphs, {:.1?}", graphs.len(), t))
}

fn tight_instances() -> Outcome {
    let values = |g: &Multigraph| (g.n(), nu_k(g, 2).value, nu_k(g, 3).value);
    let (n, nu2, nu3) = values(&named::triple_edge());
    ensure((nu2, nu3) == (2, 3), || format!("triple edge: ({nu2}, {nu3})"))?;
    ensure(nu2 == (4 * n).div_ceil(5) && nu3 == (7 * n).div_ceil(6), || "triple edge not tight".into())?;
    ensure(4 * nu2 == n + 2 * nu3, || "triple edge: arithmetical mean not tight".into())?;
    let (n, nu2, nu3) = values(&named::complete(4));
    ensure((nu2, nu3) == (4, 6) && 4 * nu2 == n + 2 * nu3, || format!("K4: ({nu2}, {nu3})"))?;
    let start = Instant::now();
    let (n, nu2, nu3) = values(&named::petersen());
    let t = start.elapsed();
    ensure((nu2, nu3) == (9, 13) && 4 * nu2 == n + 2 * nu3, || format!("Petersen: ({nu2}, {nu3})"))?;
    ensure(t < Duration::from_secs(60), || format!("Petersen took {t:?}"))?;
    Ok(format!("Petersen in {t:.1?}"))
}

fn certificates() -> Outcome {
    let mut graphs = small_cubic();
    for n in [10, 12] {
        for seed in 0..500 {
            graphs.push(random_cubic(n, seed).unwrap());
        }
    }
    let mut compared = 0;
    for g in &graphs {
        let c = certify_cubic(g).map_err(|e| e.to_string())?;
        ensure(c.is_valid(), || format!("invalid witnesses on {:?}", g.edges()))?;
        let n = g.n();
        ensure(c.f.matching.len() >= (2 * n).div_ceil(5), || format!("|F| low on {:?}", g.edges()))?;
        ensure(c.pair.total() >= (4 * n).div_ceil(5), || format!("pair low on {:?}", g.edges()))?;
        ensure(c.triple.total() >= (7 * n).div_ceil(6), || format!("triple low on {:?}", g.edges()))?;
        if n <= 10 {
            let (nu2, nu3) = (nu_k(g, 2).value, nu_k(g, 3).value);
            ensure(c.pair.total() <= nu2 && c.triple.total() <= nu3, || "witness above optimum".into())?;
            compared += 1;
        }
    }
    Ok(format!("{} graphs, {compared} compared with exact values", graphs.len()))
}

fn closed_form() -> Outcome {
    let mut count = 0;
    for n0 in [2, 4, 6] {
        for g0 in enumerate_cubic_pseudographs(n0).unwrap() {
            let g0 = CubicPseudograph::new(g0).unwrap();
            let g = realize(&g0, &vec![1; g0.m()]).unwrap();
            let n = g.n();
            ensure(5 * matching_number(&g) == 2 * n, || format!("ν₁ on {:?}", g0.edges()))?;
            ensure(5 * nu_k(&g, 2).value == 4 * n, || format!("ν₂ on {:?}", g0.edges()))?;
            count += 1;
        }
    }
    for base in [named::complete(5), named::fat_edge(4)] {
        let g = named::subdivide_all(&base);
        let n = g.n();
        ensure(6 * matching_number(&g) == 2 * n, || format!("ν₁ on subdivided {:?}", base.edges()))?;
        ensure(6 * nu_k(&g, 2).value == 4 * n, || format!("ν₂ on subdivided {:?}", base.edges()))?;
    }
    Ok(format!("{count} (2,3)-biregular and 2 (2,4)-biregular graphs"))
}

/// Random connected graph with `δ ≥ 2` in which no edge joins two vertices
/// of degree at least 3: a random subcubic graph with such edges subdivided,
/// plus a few extra subdivisions.
fn random_subdivision_host(rng: &mut ChaCha8Rng) -> Multigraph {
    loop {
        let n = rng.gen_range(3..=8);
        let mut g = random_subcubic(n, rng.gen()).unwrap();
        if !g.is_connected() {
            continue;
        }
        let mut e = 0;
        while e < g.m() {
            let (u, v) = g.endpoints(e);
            if g.deg(u) >= 3 && g.deg(v) >= 3 || rng.gen_bool(0.15) {
                g = g.subdivide_edge(e, 1).unwrap().0;
            }
            e += 1;
        }
        if g.is_regular(2) && g.n().is_multiple_of(2) {
            continue;
        }
        return g;
    }
}

fn subdivision_growth() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    let mut hosts: Vec<Multigraph> = (0..50).map(|_| random_subdivision_host(&mut rng)).collect();
    hosts.extend([3, 5, 7].map(named::cycle));
    for g in &hosts {
        for e in 0..g.m() {
            let predicted = nu2_subdivision_value(g, e).map_err(|x| x.to_string())?;
            let actual = nu_k(&g.subdivide_edge(e, 1).unwrap().0, 2).value;
            ensure(predicted == actual, || format!("edge {e} of {:?}: {predicted} vs {actual}", g.edges()))?;
            checked += 1;
        }
    }
    for l in [3, 5, 7] {
        let c = named::cycle(l);
        ensure(nu2_subdivision_value(&c, 0).unwrap() == nu_k(&c, 2).value + 2, || format!("C{l}"))?;
    }
    Ok(format!("{} hosts, {checked} edges", hosts.len()))
}

/// Every k-map with entries up to 3 that gives loops at least 1 and other
/// edges at least 2.
fn k_maps(g0: &CubicPseudograph) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for e in 0..g0.m() {
        let low = if g0.is_loop(e) { 1 } else { 2 };
        out = out
            .into_iter()
            .flat_map(|k| {
                (low..=3).map(move |x| {
                    let mut k = k.clone();
                    k.push(x);
                    k
                })
            })
            .collect();
    }
    out
}

/// Every maximal loop-cut sequence from `(g0, k)`: checks the vertex count
/// identities, connectivity, the invariance of `n < 7n₀/2`, membership in
/// class 𝔐 below that ratio, and where sequences stop.
fn walk_cuts(g0: &CubicPseudograph, k: &[usize], states: &mut usize) -> Result<(), String> {
    *states += 1;
    let n = realized_order(g0, k);
    let below = 2 * n < 7 * g0.n();
    if below {
        ensure(in_class_m(g0, k).in_m, || format!("n < 7n₀/2 but not in class 𝔐: {:?} {k:?}", g0.edges()))?;
    }
    let loops = applicable_loops(g0);
    if loops.is_empty() {
        ensure(!g0.has_loops() || g0.is_trivial(), || format!("stuck at {:?}", g0.edges()))?;
        return Ok(());
    }
    for e in loops {
        let cut = cut_loop(g0, e).map_err(|x| x.to_string())?;
        let k2 = derive_k_after_cut(k, &cut);
        let n2 = realized_order(&cut.graph, &k2);
        ensure(g0.n() == cut.graph.n() + 2, || "n₀ ≠ n₀′ + 2".into())?;
        ensure(n == n2 + k[cut.f] + k[cut.e] + 4, || "n ≠ n′ + k(f) + k(e) + 4".into())?;
        ensure(cut.graph.is_connected(), || "cut disconnected the pseudo-graph".into())?;
        if below {
            ensure(2 * n2 < 7 * cut.graph.n(), || format!("n < 7n₀/2 lost after cutting {e}"))?;
        }
        walk_cuts(&cut.graph, &k2, states)?;
    }
    Ok(())
}

fn pseudograph_certificates() -> Outcome {
    let mut instances = 0;
    let mut states = 0;
    let mut class_m = 0;
    for n0 in [2, 4, 6] {
        for g0 in enumerate_cubic_pseudographs(n0).unwrap() {
            let g0 = CubicPseudograph::new(g0).unwrap();
            for k in k_maps(&g0) {
                instances += 1;
                let g = realize(&g0, &k).unwrap();
                let n = g.n();
                let label = || format!("{:?} k = {k:?}", g0.edges());
                ensure(n >= 3 * g0.n(), || format!("n < 3n₀ on {}", label()))?;
                let pair = certify_pair(&g0, &k).map_err(|e| format!("{}: {e}", label()))?;
                ensure(pair.is_valid(&g), || format!("invalid pair on {}", label()))?;
                let total = pair.total();
                ensure(6 * total >= 5 * n, || format!("5/6 fails on {}", label()))?;
                if !g0.has_loops() {
                    ensure(n >= 4 * g0.n(), || format!("n < 4n₀ on {}", label()))?;
                    ensure(8 * total >= 7 * n, || format!("7/8 fails on {}", label()))?;
                }
                if g0.is_trivial() {
                    ensure(total == n - 1, || format!("trivial case below n - 1 on {}", label()))?;
                }
                if has_long_loop(&g0, &k) || has_long_edge(&g0, &k) {
                    ensure(2 * n >= 7 * g0.n(), || format!("n < 7n₀/2 on {}", label()))?;
                    ensure(7 * total >= 6 * n, || format!("6/7 fails on {}", label()))?;
                }
                let m = certify_matching(&g0, &k).map_err(|e| format!("{}: {e}", label()))?;
                ensure(m.is_valid(&g), || format!("invalid matching on {}", label()))?;
                ensure(7 * m.len() >= 3 * n, || format!("3/7 fails on {}", label()))?;
                if in_class_m(&g0, &k).in_m {
                    class_m += 1;
                    ensure(13 * m.len() >= 6 * n, || format!("6/13 fails on {}", label()))?;
                }
                walk_cuts(&g0, &k, &mut states)?;
            }
        }
    }
    Ok(format!("{instances} instances ({class_m} in class 𝔐), {states} cut-sequence states"))
}

fn separated_matchings() -> Outcome {
    let mut brute = 0;
    for seed in 1..=1000u64 {
        let n = 3 + (seed as usize % 12);
        let g = random_subcubic(n, seed).unwrap();
        let s = separated_maximum_matching(&g).map_err(|e| e.to_string())?;
        ensure(s.matching.len() == matching_number(&g), || format!("seed {seed}: not maximum"))?;
        ensure(s.bad_pairs == 0 && bad_pairs(&g, &s.matching) == 0, || format!("seed {seed}: bad pairs"))?;
        ensure(!s.used_fallback, || format!("seed {seed}: repair steps stalled"))?;
        if n <= 9 {
            let exists = all_maximum_matchings(&g).iter().any(|m| bad_pairs(&g, m) == 0);
            ensure(exists, || format!("seed {seed}: no separated maximum matching"))?;
            brute += 1;
        }
    }
    Ok(format!("1000 graphs, {brute} confirmed by enumeration"))
}

fn pair_to_triples() -> Outcome {
    let mut runs = 0;
    for g in small_cubic() {
        let best = nu_k(&g, 2);
        let (a, b) = (&best.witness.members[0], &best.witness.members[1]);
        for (h, h2) in [(a, b), (b, a)] {
            let t = pair_to_triple(&g, h, h2).map_err(|e| e.to_string())?;
            ensure(t.triple.is_valid(&g), || format!("invalid triple on {:?}", g.edges()))?;
            ensure(t.triple.members[0].len() + t.partner.len() == best.value, || "moves changed |H| + |H′|".into())?;
            let total = t.triple.total();
            ensure(2 * total + g.n() >= 4 * best.value, || format!("below 2ν₂ − n/2 on {:?}", g.edges()))?;
            ensure(total >= t.guaranteed(), || format!("below |H| + 2μ − l/2 on {:?}", g.edges()))?;
            ensure(t.l % 2 == 0, || "odd l".into())?;
            runs += 1;
        }
    }
    Ok(format!("{runs} optimal pairs"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("exhaustive verification, n ≤ 8", exhaustive_verification),
        ("tight instances", tight_instances),
        ("certificates dominate bounds", certificates),
        ("closed form on biregular graphs", closed_form),
        ("pairs grow by one per 1-subdivision", subdivision_growth),
        ("pseudo-graph pair and matching certificates", pseudograph_certificates),
        ("separated maximum matchings", separated_matchings),
        ("pair to triple", pair_to_triples),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
