//! Certificates for cubic graphs: a matching, a pair and a triple of
//! disjoint matchings meeting `⌈2n/5⌉`, `⌈4n/5⌉` and `⌈7n/6⌉`; the
//! augmentation of a maximal matching to a triple; and the table of exact
//! values and inequalities.
//!
//! The certificate starts from a separated maximum matching `F`. Every
//! component of `G ∖ F` is a cycle or a subdivided cubic pseudo-graph with
//! at least one vertex on loops and two on other edges, so the pseudo-graph
//! constructions apply to it.

use crate::canon::graph_id;
use crate::decomposition::{build_system, lift_system};
use crate::error::{precondition, Error, Result};
use crate::exact::{alpha_with, chromatic_index, matching_number, max_disjoint_maximum_matchings, nu_k};
use crate::graph::{connected_components, degree_two_components, Matching, MatchingFamily, Multigraph};
use crate::pseudograph::{
    certify_matching, certify_pair, chain_edge_map, realize_traced, split_last_segment, to_cubic_pseudograph,
    Skeleton,
};
use crate::separated::{separated_maximum_matching, SeparatedMatching};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimedBound {
    pub name: &'static str,
    pub bound: usize,
    pub witness: usize,
}

impl ClaimedBound {
    pub fn holds(&self) -> bool {
        self.witness >= self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub graph: Multigraph,
    pub f: SeparatedMatching,
    pub pair: MatchingFamily,
    pub triple: MatchingFamily,
    pub claimed_bounds: Vec<ClaimedBound>,
    /// Components of `G ∖ F` where a pseudo-graph construction was not
    /// applicable and an exact optimum was used instead.
    pub exact_components: usize,
}

impl Certificate {
    pub fn all_hold(&self) -> bool {
        self.claimed_bounds.iter().all(ClaimedBound::holds)
    }

    /// Witnesses validate and members are pairwise disjoint.
    pub fn is_valid(&self) -> bool {
        self.f.matching.is_valid(&self.graph) && self.pair.is_valid(&self.graph) && self.triple.is_valid(&self.graph)
    }
}

fn check_cubic(g: &Multigraph) -> Result<()> {
    if g.has_loops() {
        return Err(Error::LoopForbidden(
            (0..g.m()).find(|&e| g.is_loop(e)).map(|e| g.endpoints(e).0).unwrap_or(0),
        ));
    }
    if g.n() == 0 || !g.is_cubic() {
        return precondition("graph must be cubic");
    }
    Ok(())
}

/// Certify the ν₁, ν₂ and ν₃ lower bounds on a cubic graph. Disconnected graphs
/// are handled component by component.
pub fn certify_cubic(g: &Multigraph) -> Result<Certificate> {
    check_cubic(g)?;
    let parts = connected_components(g);
    let mut f = Vec::new();
    let mut pair = vec![Vec::new(), Vec::new()];
    let mut triple = vec![Vec::new(), Vec::new(), Vec::new()];
    let mut steps = 0;
    let mut fallback = false;
    let mut exact_components = 0;
    for part in &parts {
        let c = certify_connected(&part.graph)?;
        let up = |m: &Matching| m.edges().iter().map(|&e| part.edge_map[e]).collect::<Vec<_>>();
        f.extend(up(&c.f.matching));
        for (i, m) in c.pair.members.iter().enumerate() {
            pair[i].extend(up(m));
        }
        for (i, m) in c.triple.members.iter().enumerate() {
            triple[i].extend(up(m));
        }
        steps += c.f.steps;
        fallback |= c.f.used_fallback;
        exact_components += c.exact_components;
    }
    let fm = Matching::new(g, f)?;
    let to_family = |sets: Vec<Vec<usize>>| -> Result<MatchingFamily> {
        Ok(MatchingFamily::new(
            sets.into_iter().map(|s| Matching::new(g, s)).collect::<Result<_>>()?,
        ))
    };
    let pair = to_family(pair)?;
    let triple = to_family(triple)?;
    let n = g.n();
    let claimed_bounds = vec![
        ClaimedBound {
            name: "nu1_2_5",
            bound: (2 * n).div_ceil(5),
            witness: fm.len(),
        },
        ClaimedBound {
            name: "nu2_4_5",
            bound: (4 * n).div_ceil(5),
            witness: pair.total(),
        },
        ClaimedBound {
            name: "nu3_7_6",
            bound: (7 * n).div_ceil(6),
            witness: triple.total(),
        },
    ];
    let cert = Certificate {
        graph: g.clone(),
        f: SeparatedMatching {
            unsaturated: fm.unsaturated(g),
            bad_pairs: crate::separated::bad_pairs(g, &fm),
            matching: fm,
            steps,
            used_fallback: fallback,
        },
        pair,
        triple,
        claimed_bounds,
        exact_components,
    };
    assert!(cert.is_valid(), "certificate witnesses are disjoint matchings");
    Ok(cert)
}

/// One matching and one pair of matchings on a component of `G ∖ F`.
struct ComponentWitness {
    matching: Vec<usize>,
    pair: (Vec<usize>, Vec<usize>),
    exact: bool,
}

fn cycle_witness(c: &Multigraph) -> ComponentWitness {
    let all: Vec<usize> = (0..c.m()).collect();
    let walk = degree_two_components(c, &all).expect("a cycle").remove(0);
    let (a, b) = walk.alternate();
    ComponentWitness {
        matching: a.clone(),
        pair: (a, b),
        exact: false,
    }
}

/// Skeleton edges of the realization mapped to the component's edge ids.
fn skeleton_map(s: &Skeleton) -> Result<Vec<usize>> {
    let r = realize_traced(&s.base, &s.k)?;
    Ok(chain_edge_map(&r.chains, &s.traces, r.graph.m()))
}

fn subdivided_witness(c: &Multigraph) -> Result<ComponentWitness> {
    let s = to_cubic_pseudograph(c)?;
    match (certify_matching(&s.base, &s.k), certify_pair(&s.base, &s.k)) {
        (Ok(m), Ok(p)) => {
            let map = skeleton_map(&s)?;
            let up = |m: &Matching| m.edges().iter().map(|&e| map[e]).collect::<Vec<_>>();
            Ok(ComponentWitness {
                matching: up(&m),
                pair: (up(&p.members[0]), up(&p.members[1])),
                exact: false,
            })
        }
        (Err(Error::Precondition(_)), _) | (_, Err(Error::Precondition(_))) => {
            let best = nu_k(c, 2).witness;
            Ok(ComponentWitness {
                matching: crate::exact::maximum_matching(c).edges().to_vec(),
                pair: (best.members[0].edges().to_vec(), best.members[1].edges().to_vec()),
                exact: true,
            })
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

struct ConnectedCertificate {
    f: SeparatedMatching,
    pair: MatchingFamily,
    triple: MatchingFamily,
    exact_components: usize,
}

fn certify_connected(g: &Multigraph) -> Result<ConnectedCertificate> {
    let f = separated_maximum_matching(g)?;
    let (rest, keep) = g.without_edges(f.matching.edges());
    let mut single = Vec::new();
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut exact_components = 0;
    for comp in connected_components(&rest) {
        let w = if comp.graph.is_regular(2) {
            cycle_witness(&comp.graph)
        } else {
            subdivided_witness(&comp.graph)?
        };
        exact_components += usize::from(w.exact);
        let up = |ids: &[usize]| ids.iter().map(|&e| keep[comp.edge_map[e]]).collect::<Vec<_>>();
        single.extend(up(&w.matching));
        a.extend(up(&w.pair.0));
        b.extend(up(&w.pair.1));
    }
    let pair = MatchingFamily::new(vec![f.matching.clone(), Matching::new(g, single)?]);
    let triple = MatchingFamily::new(vec![f.matching.clone(), Matching::new(g, a)?, Matching::new(g, b)?]);
    Ok(ConnectedCertificate {
        f,
        pair,
        triple,
        exact_components,
    })
}

/// Three disjoint matchings built on a maximal matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleWitness {
    pub triple: MatchingFamily,
    /// Edges moved into `H` to make it maximal (taken out of `H′` when
    /// they were there).
    pub extension: Vec<usize>,
    /// `H′` after the moves.
    pub partner: Matching,
    /// Size of a maximum matching of `G ∖ H`.
    pub mu: usize,
    /// `l = n − 2|H|`, the number of vertices missed by `H`.
    pub l: usize,
}

impl TripleWitness {
    /// `|H| + 2μ − l/2`.
    pub fn guaranteed(&self) -> usize {
        (self.triple.members[0].len() + 2 * self.mu).saturating_sub(self.l / 2)
    }
}

/// Extend `h` to a triple `(H, A, B)` with `A`, `B` disjoint matchings of
/// `G ∖ H` and `|H| + |A| + |B| ≥ |H| + 2ν₁(G ∖ H) − l/2`.
///
/// `h2` must be disjoint from `h`; if `h` is not maximal, free edges are
/// moved into it first (out of `h2` where needed), which keeps `|h| + |h2|`.
pub fn pair_to_triple(g: &Multigraph, h: &Matching, h2: &Matching) -> Result<TripleWitness> {
    check_cubic(g)?;
    if !h.is_valid(g) || !h2.is_valid(g) {
        return Err(Error::HostMismatch);
    }
    if h.edges().iter().any(|&e| h2.contains(e)) {
        return Err(Error::NotAMatching("H and H′ share an edge".into()));
    }
    let mut hs: Vec<usize> = h.edges().to_vec();
    let mut partner: Vec<usize> = h2.edges().to_vec();
    let mut free = vec![true; g.n()];
    for &e in &hs {
        let (u, v) = g.endpoints(e);
        free[u] = false;
        free[v] = false;
    }
    let mut extension = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if free[u] && free[v] {
            free[u] = false;
            free[v] = false;
            hs.push(e);
            partner.retain(|&x| x != e);
            extension.push(e);
        }
    }
    let hm = Matching::new(g, hs)?;
    let (rest, keep) = g.without_edges(hm.edges());
    let mut a = Vec::new();
    let mut b = Vec::new();
    for comp in connected_components(&rest) {
        let (x, y) = if comp.graph.is_regular(2) {
            cycle_witness(&comp.graph).pair
        } else {
            lifted_system_pair(&comp.graph)?
        };
        let up = |ids: Vec<usize>| ids.into_iter().map(|e| keep[comp.edge_map[e]]).collect::<Vec<_>>();
        a.extend(up(x));
        b.extend(up(y));
    }
    let l = g.n() - 2 * hm.len();
    let mu = matching_number(&rest);
    let triple = MatchingFamily::new(vec![hm, Matching::new(g, a)?, Matching::new(g, b)?]);
    assert!(triple.is_valid(g));
    Ok(TripleWitness {
        partner: Matching::new(g, partner)?,
        triple,
        extension,
        mu,
        l,
    })
}

/// Alternation of a path/cycle system of a component: built on the
/// 1-subdivided skeleton and lifted one subdivision vertex at a time.
fn lifted_system_pair(c: &Multigraph) -> Result<(Vec<usize>, Vec<usize>)> {
    let s = to_cubic_pseudograph(c)?;
    let ones = vec![1; s.base.m()];
    let start = realize_traced(&s.base, &ones)?;
    let mut witness = build_system(&start.graph)?;
    let mut graph = start.graph;
    let mut chains = start.chains;
    for (d, &kd) in s.k.iter().enumerate() {
        if kd == 0 {
            return precondition("two degree-3 vertices are adjacent");
        }
        for _ in 1..kd {
            let seg = split_last_segment(&graph, &mut chains[d]);
            let (next, w) = lift_system(&graph, &witness, seg)?;
            graph = next;
            witness = w;
        }
    }
    let map = chain_edge_map(&chains, &s.traces, graph.m());
    let up = |m: &Matching| m.edges().iter().map(|&e| map[e]).collect::<Vec<_>>();
    Ok((up(&witness.pair.0), up(&witness.pair.1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub pass: bool,
    /// How far the inequality is from failing; negative on failure.
    pub slack: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    /// `ν₁, ν₂, ν₃, ν₄`.
    pub nu: [usize; 4],
    pub alpha2: usize,
    pub chromatic_index: usize,
    pub disjoint_maximum_matchings: usize,
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&InequalityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn at_least(name: &'static str, value: usize, bound: usize) -> InequalityCheck {
    let slack = value as i64 - bound as i64;
    InequalityCheck {
        name,
        pass: slack >= 0,
        slack,
    }
}

/// Exact values of a cubic graph and every inequality checked against them.
pub fn verify_all(g: &Multigraph) -> Result<InequalityReport> {
    check_cubic(g)?;
    let n = g.n();
    let nu1 = matching_number(g);
    let r2 = nu_k(g, 2);
    let alpha2 = alpha_with(g, &r2).value;
    let nu2 = r2.value;
    let nu3 = nu_k(g, 3).value;
    let nu4 = nu_k(g, 4).value;
    let chi = chromatic_index(g);
    let disjoint = max_disjoint_maximum_matchings(g);
    let checks = vec![
        at_least("nu2_4_5", nu2, (4 * n).div_ceil(5)),
        at_least("nu3_7_6", nu3, (7 * n).div_ceil(6)),
        at_least("arithmetical_mean", n + 2 * nu3, 4 * nu2),
        at_least("nu2_plus_nu3", nu2 + nu3, 2 * n),
        at_least("nu1_5n_minus_2_12", nu1, (5 * n).saturating_sub(2).div_ceil(12)),
        at_least("nu1_over_alpha2_ge_1", nu1, alpha2),
        at_least("nu1_over_alpha2_le_5_4", alpha2, (4 * nu1).div_ceil(5)),
        at_least("disjoint_max_matchings_le_3", 3, disjoint),
        InequalityCheck {
            name: "nu4_eq_m",
            pass: nu4 == g.m(),
            slack: nu4 as i64 - g.m() as i64,
        },
        at_least("chromatic_index_le_4", 4, chi),
    ];
    Ok(InequalityReport {
        graph_id: graph_id(g),
        n,
        m: g.m(),
        nu: [nu1, nu2, nu3, nu4],
        alpha2,
        chromatic_index: chi,
        disjoint_maximum_matchings: disjoint,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::enumerate_cubic;
    use crate::named;

    fn bound(c: &Certificate, name: &str) -> usize {
        c.claimed_bounds.iter().find(|b| b.name == name).unwrap().witness
    }

    #[test]
    fn k4_certificate() {
        let c = certify_cubic(&named::complete(4)).unwrap();
        assert!(c.all_hold() && c.is_valid());
        assert_eq!(bound(&c, "nu2_4_5"), 4);
        assert!(bound(&c, "nu3_7_6") >= 5 && bound(&c, "nu3_7_6") <= 6);
    }

    #[test]
    fn triple_edge_certificate_is_tight() {
        let c = certify_cubic(&named::triple_edge()).unwrap();
        assert_eq!(bound(&c, "nu2_4_5"), 2);
        assert_eq!(bound(&c, "nu3_7_6"), 3);
    }

    #[test]
    fn certificates_are_deterministic() {
        let p = named::petersen();
        assert_eq!(certify_cubic(&p).unwrap(), certify_cubic(&p).unwrap());
    }

    #[test]
    fn disconnected_input_is_additive() {
        let g = named::complete(4).disjoint_union(&named::petersen());
        let c = certify_cubic(&g).unwrap();
        let a = certify_cubic(&named::complete(4)).unwrap();
        let b = certify_cubic(&named::petersen()).unwrap();
        assert_eq!(c.triple.total(), a.triple.total() + b.triple.total());
        assert!(c.all_hold());
    }

    #[test]
    fn non_cubic_is_rejected() {
        assert!(certify_cubic(&named::cycle(4)).is_err());
        assert!(verify_all(&named::path(3)).is_err());
    }

    #[test]
    fn pair_to_triple_examples() {
        let k4 = named::complete(4);
        let h = Matching::new(&k4, [0, 5]).unwrap();
        let t = pair_to_triple(&k4, &h, &Matching::empty()).unwrap();
        assert_eq!(t.l, 0);
        assert_eq!(t.triple.total(), 6);

        let k33 = named::complete_bipartite(3, 3);
        let pm = crate::exact::maximum_matching(&k33);
        let t = pair_to_triple(&k33, &pm, &Matching::empty()).unwrap();
        assert_eq!(t.triple.total(), 9);
    }

    #[test]
    fn pair_to_triple_extends_non_maximal_h() {
        let p = named::petersen();
        let h = Matching::new(&p, [0]).unwrap();
        let t = pair_to_triple(&p, &h, &Matching::empty()).unwrap();
        assert!(!t.extension.is_empty());
        assert!(t.triple.total() >= t.guaranteed());
    }

    #[test]
    fn petersen_report() {
        let r = verify_all(&named::petersen()).unwrap();
        assert_eq!(r.nu[1], 9);
        assert_eq!(r.nu[2], 13);
        assert_eq!(r.check("arithmetical_mean").unwrap().slack, 0);
        assert!(r.all_pass());
    }

    #[test]
    fn small_cubic_graphs_pass() {
        for n in [2, 4, 6] {
            for g in enumerate_cubic(n).unwrap() {
                assert!(verify_all(&g).unwrap().all_pass());
                let c = certify_cubic(&g).unwrap();
                assert!(c.all_hold(), "{:?}", g.edges());
            }
        }
    }
}
