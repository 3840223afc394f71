//! Batch runs behind the command-line tool: one JSON object per graph, keys
//! in a fixed order, graphs in a fixed order regardless of thread count.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::graph_id;
use crate::certify::{certify_cubic, verify_all, Certificate, InequalityReport};
use crate::error::{precondition, Result};
use crate::exact::nu_k;
use crate::generate::{enumerate_cubic, random_cubic, search_tight, TightBound};
use crate::graph::{Matching, Multigraph};
use crate::io::write_graph;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable holding the worker thread count.
pub const WORKERS_ENV: &str = "KMATCH_WORKERS";

/// Size the global thread pool from [`WORKERS_ENV`]; without it rayon uses
/// the available parallelism. Call once, before any parallel work.
pub fn configure_workers() -> Result<()> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let Ok(count) = raw.trim().parse::<usize>() else {
        return precondition(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}"));
    };
    if count == 0 {
        return precondition(format!("{WORKERS_ENV} must be positive"));
    }
    // A pool that is already built (tests, repeated calls) is left alone.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(count).build_global();
    Ok(())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExactValues {
    pub nu1: usize,
    pub nu2: usize,
    pub nu3: usize,
    pub nu4: usize,
    pub alpha2: usize,
    pub chromatic_index: usize,
    pub disjoint_maximum_matchings: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub slack: i64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CertificateRecord {
    pub f_size: usize,
    pub f_unsaturated: usize,
    pub f_bad_pairs: usize,
    pub pair_total: usize,
    pub triple_total: usize,
    pub exact_components: usize,
    pub pair: Vec<Vec<usize>>,
    pub triple: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NuRecord {
    pub k: usize,
    pub value: usize,
    pub witness: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportRecord {
    pub schema_version: u32,
    pub command: String,
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub source: Option<String>,
    pub nu: Option<NuRecord>,
    pub exact: Option<ExactValues>,
    pub certificate: Option<CertificateRecord>,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
    pub elapsed_ms: Option<u64>,
}

impl ReportRecord {
    fn new(command: &str, g: &Multigraph) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            graph_id: graph_id(g),
            n: g.n(),
            m: g.m(),
            source: None,
            nu: None,
            exact: None,
            certificate: None,
            checks: Vec::new(),
            pass: true,
            elapsed_ms: None,
        }
    }

    fn finish(mut self, started: Instant, timing: bool) -> Self {
        self.pass = self.checks.iter().all(|c| c.pass);
        if timing {
            self.elapsed_ms = Some(started.elapsed().as_millis() as u64);
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn ids(m: &Matching) -> Vec<usize> {
    m.edges().to_vec()
}

fn check(name: impl Into<String>, pass: bool, slack: i64) -> CheckRecord {
    CheckRecord {
        name: name.into(),
        pass,
        slack,
    }
}

fn certificate_record(c: &Certificate) -> CertificateRecord {
    CertificateRecord {
        f_size: c.f.matching.len(),
        f_unsaturated: c.f.unsaturated.len(),
        f_bad_pairs: c.f.bad_pairs,
        pair_total: c.pair.total(),
        triple_total: c.triple.total(),
        exact_components: c.exact_components,
        pair: c.pair.members.iter().map(ids).collect(),
        triple: c.triple.members.iter().map(ids).collect(),
    }
}

fn certificate_checks(c: &Certificate) -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = c
        .claimed_bounds
        .iter()
        .map(|b| check(format!("certificate_{}", b.name), b.holds(), b.witness as i64 - b.bound as i64))
        .collect();
    out.push(check("certificate_valid", c.is_valid(), 0));
    out.push(check("separated", c.f.bad_pairs == 0, -(c.f.bad_pairs as i64)));
    out
}

fn exact_values(r: &InequalityReport) -> ExactValues {
    ExactValues {
        nu1: r.nu[0],
        nu2: r.nu[1],
        nu3: r.nu[2],
        nu4: r.nu[3],
        alpha2: r.alpha2,
        chromatic_index: r.chromatic_index,
        disjoint_maximum_matchings: r.disjoint_maximum_matchings,
    }
}

/// `nu --k <k>`: the exact value and an optimal family.
pub fn nu_record(g: &Multigraph, k: usize, timing: bool) -> Result<ReportRecord> {
    if !(1..=4).contains(&k) {
        return precondition("k must be between 1 and 4");
    }
    let started = Instant::now();
    let r = nu_k(g, k);
    let mut rec = ReportRecord::new("nu", g);
    rec.nu = Some(NuRecord {
        k,
        value: r.value,
        witness: r.witness.members.iter().map(ids).collect(),
    });
    rec.checks.push(check("witness_valid", r.witness.is_valid(g) && r.witness.total() == r.value, 0));
    Ok(rec.finish(started, timing))
}

/// `certify`: the certificate alone, without exact values.
pub fn certify_record(g: &Multigraph, timing: bool) -> Result<ReportRecord> {
    let started = Instant::now();
    let c = certify_cubic(g)?;
    let mut rec = ReportRecord::new("certify", g);
    rec.checks = certificate_checks(&c);
    rec.certificate = Some(certificate_record(&c));
    Ok(rec.finish(started, timing))
}

/// `verify`: exact values, every inequality, and the certificate compared
/// against both the bounds and the optima.
pub fn verify_record(g: &Multigraph, timing: bool) -> Result<ReportRecord> {
    let started = Instant::now();
    let report = verify_all(g)?;
    let c = certify_cubic(g)?;
    let mut rec = ReportRecord::new("verify", g);
    rec.checks = report
        .checks
        .iter()
        .map(|x| check(x.name, x.pass, x.slack))
        .collect();
    rec.checks.extend(certificate_checks(&c));
    let (nu2, nu3) = (report.nu[1], report.nu[2]);
    rec.checks.push(check(
        "certificate_pair_le_nu2",
        c.pair.total() <= nu2,
        nu2 as i64 - c.pair.total() as i64,
    ));
    rec.checks.push(check(
        "certificate_triple_le_nu3",
        c.triple.total() <= nu3,
        nu3 as i64 - c.triple.total() as i64,
    ));
    rec.exact = Some(exact_values(&report));
    rec.certificate = Some(certificate_record(&c));
    Ok(rec.finish(started, timing))
}

fn verify_many(graphs: &[(Multigraph, String)], timing: bool) -> Result<Vec<ReportRecord>> {
    graphs
        .par_iter()
        .map(|(g, source)| {
            verify_record(g, timing).map(|mut r| {
                r.source = Some(source.clone());
                r
            })
        })
        .collect()
}

/// `verify --max-n`: every connected cubic multigraph with `n ≤ max_n`.
pub fn verify_exhaustive(max_n: usize, timing: bool) -> Result<Vec<ReportRecord>> {
    let mut graphs = Vec::new();
    for n in (2..=max_n).step_by(2) {
        for (i, g) in enumerate_cubic(n)?.into_iter().enumerate() {
            graphs.push((g, format!("enumerate n={n} index={i}")));
        }
    }
    verify_many(&graphs, timing)
}

/// `verify --random`: `count` random cubic graphs on `n` vertices with
/// seeds `seed, seed + 1, ...`.
pub fn verify_random(count: usize, n: usize, seed: u64, timing: bool) -> Result<Vec<ReportRecord>> {
    let graphs = (0..count as u64)
        .map(|i| random_cubic(n, seed + i).map(|g| (g, format!("random n={n} seed={}", seed + i))))
        .collect::<Result<Vec<_>>>()?;
    verify_many(&graphs, timing)
}

/// `enumerate`: one record per graph; with `out`, also one edge-list file
/// per graph named `cubic_n<n>_<index>.txt`.
pub fn enumerate_records(n: usize, out: Option<&Path>) -> Result<Vec<ReportRecord>> {
    let graphs = enumerate_cubic(n)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
    }
    let mut records = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let mut rec = ReportRecord::new("enumerate", g);
        let name = format!("cubic_n{n}_{i:04}.txt");
        if let Some(dir) = out {
            write_graph(dir.join(&name), g)?;
        }
        rec.source = Some(name);
        records.push(rec);
    }
    Ok(records)
}

/// `search-tight`: graphs on `n` vertices attaining the named bound, each
/// re-checked with the exact solver.
pub fn search_tight_records(n: usize, bound: &str, timing: bool) -> Result<Vec<ReportRecord>> {
    let Some(b) = TightBound::from_name(bound) else {
        return precondition(format!(
            "unknown bound {bound:?}; expected nu1_2_5, nu2_4_5, nu3_7_6 or arithmetical_mean"
        ));
    };
    let graphs = search_tight(n, b)?;
    graphs
        .par_iter()
        .map(|g| {
            let started = Instant::now();
            let report = verify_all(g)?;
            let mut rec = ReportRecord::new("search-tight", g);
            rec.source = Some(b.name().to_string());
            rec.checks.push(check(format!("tight_{}", b.name()), b.is_tight(g), 0));
            rec.exact = Some(exact_values(&report));
            Ok(rec.finish(started, timing))
        })
        .collect()
}
