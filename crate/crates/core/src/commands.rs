//! The operations behind the `hitset` subcommands. Each returns data; the
//! binary only parses flags, prints and chooses the exit code.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::claims::{self, ClaimRow, Suite};
use crate::error::{Error, Result};
use crate::generators::GenSpec;
use crate::geometry::find_11_simplicial;
use crate::hitters::{bipartite_hitter, locally_sparse_hitter, separator_hitter, simplicial_hitter, vc1_hitter};
use crate::hitting::{greedy_hitting_set, min_hitting_set_with, HitterReport, Method};
use crate::instance::Instance;
use crate::mis::{enumerate_mis_with, hajnal_check, independence_number_with, Limits, MisFamily};
use crate::rational::{self, rat, Rational};
use crate::two_order::{circle_to_two_order, default_beta, two_order_hitter, weak_circle_layers};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFRASTRUCTURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_THEOREM: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TheoremViolation(_) => EXIT_THEOREM,
        Error::Io(_) | Error::Csv(_) | Error::SizeLimit { .. } | Error::Explosion { .. } => EXIT_INFRASTRUCTURE,
        _ => EXIT_USAGE,
    }
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    Instance::parse(&std::fs::read_to_string(path)?)
}

/// Output format of `gen`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Dimacs,
}

/// Writes the generated instance to `out` and returns its fingerprint.
pub fn gen(spec: &GenSpec, format: Format, out: &Path) -> Result<String> {
    let inst = spec.generate()?;
    let body = match (format, &inst) {
        (Format::Json, _) => inst.to_json() + "\n",
        (Format::Dimacs, Instance::Graph(g)) => g.to_dimacs(),
        (Format::Dimacs, other) => {
            return Err(Error::Precondition(format!("{} instances have no DIMACS form", other.kind())));
        }
    };
    std::fs::write(out, body)?;
    Ok(inst.fingerprint())
}

/// Summary printed by `solve`. A field that could not be computed is null
/// and its reason is listed under `errors`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub kind: &'static str,
    pub n: usize,
    pub m: usize,
    pub alpha: Option<usize>,
    pub mis_count: Option<usize>,
    pub residual: Option<usize>,
    pub h_exact: Option<usize>,
    pub h_greedy: Option<usize>,
    pub hajnal_lhs: Option<usize>,
    pub errors: BTreeMap<&'static str, String>,
}

pub fn solve(inst: &Instance, interval_model: bool, limits: &Limits) -> SolveReport {
    let g = inst.graph_with(interval_model);
    let mut r = SolveReport { kind: inst.kind(), n: g.n(), m: g.edge_count(), ..SolveReport::default() };
    match independence_number_with(&g, limits) {
        Ok(a) => r.alpha = Some(a),
        Err(e) => {
            r.errors.insert("alpha", e.to_string());
        }
    }
    let fam = match enumerate_mis_with(&g, limits) {
        Ok(f) => f,
        Err(e) => {
            for field in ["mis_count", "residual", "h_exact", "h_greedy", "hajnal_lhs"] {
                r.errors.insert(field, e.to_string());
            }
            return r;
        }
    };
    r.mis_count = Some(fam.len());
    r.residual = Some(fam.residual().len());
    let mut record = |field: &'static str, v: Result<usize>| match v {
        Ok(x) => Some(x),
        Err(e) => {
            r.errors.insert(field, e.to_string());
            None
        }
    };
    let h_exact = record("h_exact", min_hitting_set_with(&fam, limits).map(|h| h.size()));
    let h_greedy = record("h_greedy", greedy_hitting_set(&fam).map(|h| h.size()));
    let hajnal_lhs = record("hajnal_lhs", hajnal_check(&fam).map(|h| h.lhs));
    r.h_exact = h_exact;
    r.h_greedy = h_greedy;
    r.hajnal_lhs = hajnal_lhs;
    r
}

/// Method parameters for `hit` and `bench`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HitParams {
    /// Sparsity constant of the sparse framework.
    pub s: usize,
    #[serde(with = "rational::opt_text", skip_serializing_if = "Option::is_none")]
    pub a: Option<Rational>,
    #[serde(with = "rational::text")]
    pub b_ratio: Rational,
    /// Defaults to [`default_beta`].
    #[serde(with = "rational::opt_text", skip_serializing_if = "Option::is_none")]
    pub beta: Option<Rational>,
    /// Colour-class width `M` of the circle layers.
    pub m: usize,
    /// Read intervals as an interval graph instead of a circle graph.
    pub interval_model: bool,
}

impl Default for HitParams {
    fn default() -> Self {
        HitParams { s: 1, a: None, b_ratio: rat(98, 100), beta: None, m: 2, interval_model: false }
    }
}

/// A hitter's report together with its method-specific trace.
#[derive(Clone, Debug, PartialEq)]
pub struct HitOutcome {
    pub report: HitterReport,
    pub trace: Value,
}

impl HitOutcome {
    pub fn to_json(&self) -> Value {
        json!({ "report": self.report.to_json(), "trace": self.trace })
    }
}

fn incompatible(method: Method, inst: &Instance) -> Error {
    Error::Precondition(format!("method {} does not apply to {} input", method.tag(), inst.kind()))
}

/// Runs one construction on `inst` against its exact family.
pub fn hit(inst: &Instance, method: Method, p: &HitParams, limits: &Limits) -> Result<HitOutcome> {
    let g = inst.graph_with(p.interval_model);
    let fam = enumerate_mis_with(&g, limits)?;
    hit_with_family(inst, &fam, method, p, limits)
}

pub fn hit_with_family(
    inst: &Instance,
    fam: &MisFamily,
    method: Method,
    p: &HitParams,
    limits: &Limits,
) -> Result<HitOutcome> {
    let g = inst.graph_with(p.interval_model);
    let plain = |report: HitterReport| HitOutcome { report, trace: Value::Null };
    Ok(match method {
        Method::Exact => plain(min_hitting_set_with(fam, limits)?),
        Method::Greedy => plain(greedy_hitting_set(fam)?),
        Method::SparseFramework => {
            let (report, trace) = locally_sparse_hitter(&g, fam, p.s, p.a.as_ref(), &p.b_ratio)?;
            HitOutcome { report, trace: serde_json::to_value(trace)? }
        }
        Method::Simplicial => {
            let Instance::Disks(d) = inst else { return Err(incompatible(method, inst)) };
            let cert = find_11_simplicial(d)?;
            let report = simplicial_hitter(&g, fam, cert.vertex, &cert.cliques)?;
            let cliques: Vec<Vec<usize>> = cert.cliques.iter().map(|c| c.to_vec()).collect();
            HitOutcome { report, trace: json!({ "vertex": cert.vertex, "cliques": cliques, "points": cert.points }) }
        }
        Method::Bipartite => plain(bipartite_hitter(&g, fam)?),
        Method::Vc1 => plain(vc1_hitter(&g, fam)?),
        Method::Separator => {
            let (report, levels) = separator_hitter(&g, fam)?;
            HitOutcome { report, trace: json!({ "levels": levels }) }
        }
        Method::TwoOrder => {
            let t = match inst {
                Instance::TwoOrder(t) => t.clone(),
                Instance::Intervals(s) if !p.interval_model => circle_to_two_order(s),
                _ => return Err(incompatible(method, inst)),
            };
            let beta = p.beta.clone().unwrap_or_else(|| default_beta(fam.alpha(), t.n()));
            let run = two_order_hitter(&t, fam, &beta)?;
            let trace = json!({
                "beta": rational::format(&beta),
                "branch": run.branch,
                "k": run.k,
                "min_degree": run.min_degree,
                "m": run.m,
                "t": run.t,
                "layer_sizes": run.layer_sizes,
                "hitting_offsets": run.hitting_offsets,
                "slave_violations": run.slave_violations,
            });
            HitOutcome { report: run.report, trace }
        }
        Method::CircleLayers => {
            let Instance::Intervals(s) = inst else { return Err(incompatible(method, inst)) };
            if p.interval_model {
                return Err(incompatible(method, inst));
            }
            let run = weak_circle_layers(s, fam, p.m)?;
            let trace = json!({ "m": p.m, "branch": run.branch, "candidates": run.candidates, "claims": run.claims });
            HitOutcome { report: run.report, trace }
        }
        Method::MinDegree | Method::Fallback => {
            return Err(Error::Precondition(format!("{} is an outcome, not a method", method.tag())));
        }
    })
}

/// CSV for `check-claims`, and the number of failing seeds.
pub fn check_claims_csv(suite: Suite, seeds: u64) -> Result<(String, usize)> {
    let rows: Vec<ClaimRow> = claims::check_claims(suite, seeds)?;
    let failures = rows.iter().filter(|r| !r.holds).count();
    Ok((claims::rows_to_csv(&rows)?, failures))
}

/// One entry of a bench spec list: a generator, the methods to run, and
/// optional sweeps over `n`, `seed` and `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchEntry {
    pub gen: GenSpec,
    pub methods: Vec<Method>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ns: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ks: Vec<usize>,
    #[serde(default)]
    pub params: HitParams,
}

impl BenchEntry {
    pub fn specs(&self) -> Vec<GenSpec> {
        fn sweep<T: Clone>(values: &[T], base: Option<T>) -> Vec<Option<T>> {
            if values.is_empty() {
                vec![base]
            } else {
                values.iter().cloned().map(Some).collect()
            }
        }
        let seeds = if self.seeds.is_empty() { vec![self.gen.seed] } else { self.seeds.clone() };
        let mut out = Vec::new();
        for n in sweep(&self.ns, self.gen.n) {
            for &seed in &seeds {
                for k in sweep(&self.ks, self.gen.k) {
                    out.push(GenSpec { n, seed, k, ..self.gen.clone() });
                }
            }
        }
        out
    }
}

pub const BENCH_HEADER: &str = "kind,n,seed,alpha,h_exact,method,size,bound,verified,wall_ms,error";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub kind: &'static str,
    pub n: usize,
    pub seed: u64,
    pub alpha: Option<usize>,
    pub h_exact: Option<usize>,
    pub method: &'static str,
    pub size: Option<usize>,
    pub bound: Option<String>,
    pub verified: Option<bool>,
    pub wall_ms: String,
    pub error: String,
}

fn bench_spec(spec: &GenSpec, methods: &[Method], params: &HitParams, limits: &Limits) -> Vec<BenchRow> {
    let row = |n, method: Method, error: String| BenchRow {
        kind: spec.kind.tag(),
        n,
        seed: spec.seed,
        alpha: None,
        h_exact: None,
        method: method.tag(),
        size: None,
        bound: None,
        verified: None,
        wall_ms: String::new(),
        error,
    };
    let prepared = spec.generate().and_then(|inst| {
        let fam = enumerate_mis_with(&inst.graph_with(params.interval_model), limits)?;
        Ok((inst, fam))
    });
    let (inst, fam) = match prepared {
        Ok(x) => x,
        Err(e) => return methods.iter().map(|&m| row(spec.n.unwrap_or(0), m, e.to_string())).collect(),
    };
    let h_exact = min_hitting_set_with(&fam, limits).ok().map(|h| h.size());
    methods
        .iter()
        .map(|&method| {
            let mut r = row(fam.n(), method, String::new());
            r.alpha = Some(fam.alpha());
            r.h_exact = h_exact;
            let start = Instant::now();
            let outcome = hit_with_family(&inst, &fam, method, params, limits);
            r.wall_ms = format!("{:.3}", start.elapsed().as_secs_f64() * 1000.0);
            match outcome {
                Ok(o) => {
                    r.size = Some(o.report.size());
                    r.bound = o.report.bound.as_ref().map(rational::format);
                    r.verified = Some(o.report.verified);
                }
                Err(e) => r.error = e.to_string(),
            }
            r
        })
        .collect()
}

/// Runs every entry and returns rows sorted by `(kind, n, seed)`. Errors
/// are recorded per row.
pub fn bench(entries: &[BenchEntry], limits: &Limits) -> Vec<BenchRow> {
    let mut rows: Vec<BenchRow> = entries
        .iter()
        .flat_map(|e| e.specs().into_iter().flat_map(move |s| bench_spec(&s, &e.methods, &e.params, limits)))
        .collect();
    rows.sort_by(|a, b| (a.kind, a.n, a.seed).cmp(&(b.kind, b.n, b.seed)));
    rows
}

pub fn bench_csv(rows: &[BenchRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(BENCH_HEADER.split(','))?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8"))
}

pub fn read_bench_entries(path: &Path) -> Result<Vec<BenchEntry>> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete_multipartite;
    use crate::graph::Graph;

    fn graph(g: Graph) -> Instance {
        Instance::Graph(g)
    }

    #[test]
    fn solve_examples() {
        let lim = Limits::default();
        let r = solve(&graph(Graph::cycle(5)), false, &lim);
        assert_eq!((r.alpha, r.mis_count, r.h_exact, r.residual), (Some(2), Some(5), Some(3), Some(0)));
        assert!(r.errors.is_empty());
        let r = solve(&graph(complete_multipartite(&[4, 4, 4]).unwrap()), false, &lim);
        assert_eq!((r.alpha, r.h_exact), (Some(4), Some(3)));
        let r = solve(&graph(Graph::empty(5)), false, &lim);
        assert_eq!((r.alpha, r.h_exact, r.hajnal_lhs), (Some(5), Some(1), Some(10)));
    }

    #[test]
    fn solve_reports_caps_per_field() {
        let lim = Limits { enumerate_max_n: 4, ..Limits::default() };
        let r = solve(&graph(Graph::cycle(5)), false, &lim);
        assert_eq!(r.alpha, Some(2));
        assert_eq!(r.h_exact, None);
        assert!(r.errors.contains_key("h_exact") && !r.errors.contains_key("alpha"));
    }

    #[test]
    fn hit_methods_and_incompatibility() {
        let lim = Limits::default();
        let k444 = graph(complete_multipartite(&[4, 4, 4]).unwrap());
        let o = hit(&k444, Method::Vc1, &HitParams::default(), &lim).unwrap();
        assert_eq!((o.report.size(), o.report.verified), (3, true));
        let iv = Instance::Intervals(crate::geometry::IntervalSet::from_integers(&[(1, 3), (2, 4)]).unwrap());
        let e = hit(&iv, Method::Simplicial, &HitParams::default(), &lim).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_USAGE);
        let e = hit(&k444, Method::CircleLayers, &HitParams::default(), &lim).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_USAGE);
        assert_eq!(exit_code(&Error::TheoremViolation(String::new())), EXIT_THEOREM);
    }

    #[test]
    fn bench_header_and_sorting() {
        assert_eq!(bench_csv(&bench(&[], &Limits::default())).unwrap(), format!("{BENCH_HEADER}\n"));
        let entry: BenchEntry = serde_json::from_str(
            r#"{"gen":{"kind":"chordal","density":"1/2"},"methods":["exact","sparse-framework"],"ns":[12,10],"seeds":[1,0]}"#,
        )
        .unwrap();
        let rows = bench(&[entry], &Limits::default());
        assert_eq!(rows.len(), 8);
        let keys: Vec<(usize, u64)> = rows.iter().map(|r| (r.n, r.seed)).collect();
        assert_eq!(keys, vec![(10, 0), (10, 0), (10, 1), (10, 1), (12, 0), (12, 0), (12, 1), (12, 1)]);
        assert!(rows.iter().all(|r| r.verified == Some(true) && r.error.is_empty()));
        let csv = bench_csv(&rows).unwrap();
        assert!(csv.starts_with(BENCH_HEADER));
    }

    #[test]
    fn bench_records_errors() {
        let entry: BenchEntry = serde_json::from_str(r#"{"gen":{"kind":"multipartite"},"methods":["exact"]}"#).unwrap();
        let rows = bench(&[entry], &Limits::default());
        assert_eq!(rows.len(), 1);
        assert!(rows[0].error.contains("sizes"));
    }
}
