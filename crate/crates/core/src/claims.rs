//! Seeded property suites behind `hitset check-claims`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{blowup, complete_multipartite, gnp, random_chordal, random_disks, random_intervals, Rng};
use crate::geometry::{piercing_point_in_unit_disk, DiskSet, IntervalSet, PIERCING_POINTS};
use crate::graph::Graph;
use crate::hitting::min_hitting_set;
use crate::instance::Instance;
use crate::mis::{enumerate_mis, hajnal_check, independence_number, pairwise_symmetric_difference_stats};
use crate::rational::{rat, Rational};
use crate::recognition::{find_induced_p5, vc_dimension};
use crate::two_order::{
    circle_to_two_order, cover_coloring, k_intersecting_value, validate_two_order, TwoOrderStructure,
};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hajnal,
    EvenHoleSparse,
    DiskSparse,
    DiskSix,
    CircleColor,
    TwoOrderAxioms,
    Vc1Structure,
    UnitDiskStar,
    Piercing11,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Hajnal,
        Suite::EvenHoleSparse,
        Suite::DiskSparse,
        Suite::DiskSix,
        Suite::CircleColor,
        Suite::TwoOrderAxioms,
        Suite::Vc1Structure,
        Suite::UnitDiskStar,
        Suite::Piercing11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hajnal => "hajnal",
            Suite::EvenHoleSparse => "even-hole-sparse",
            Suite::DiskSparse => "disk-sparse",
            Suite::DiskSix => "disk-six",
            Suite::CircleColor => "circle-color",
            Suite::TwoOrderAxioms => "two-order-axioms",
            Suite::Vc1Structure => "vc1-structure",
            Suite::UnitDiskStar => "unit-disk-star",
            Suite::Piercing11 => "piercing-11",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One seed of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRow {
    pub suite: &'static str,
    pub seed: u64,
    pub fingerprint: String,
    /// The claims checked, separated by `;`.
    pub claim: String,
    pub holds: bool,
    /// The first failing claim and its witness; empty when everything holds.
    pub witness: String,
}

/// Accumulates named checks for one instance.
struct Checks {
    names: Vec<&'static str>,
    failure: Option<String>,
}

impl Checks {
    fn new() -> Checks {
        Checks { names: Vec::new(), failure: None }
    }

    fn check(&mut self, name: &'static str, holds: bool, witness: impl FnOnce() -> String) {
        if !self.names.contains(&name) {
            self.names.push(name);
        }
        if !holds && self.failure.is_none() {
            self.failure = Some(format!("{name}: {}", witness()));
        }
    }

    fn row(self, suite: Suite, seed: u64, instance: &Instance) -> ClaimRow {
        ClaimRow {
            suite: suite.name(),
            seed,
            fingerprint: instance.fingerprint(),
            claim: self.names.join(";"),
            holds: self.failure.is_none(),
            witness: self.failure.unwrap_or_default(),
        }
    }
}

/// `n` uniform in `lo..=hi` from a stream keyed by `seed` and `salt`.
fn size(seed: u64, salt: u64, lo: usize, hi: usize) -> (usize, Rng) {
    let mut rng = Rng::new(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = lo + rng.below((hi - lo + 1) as u64) as usize;
    (n, rng)
}

/// Random graph for the intersection-union suite: `n` in `4..=14`, edge
/// probability in `{1/8, …, 7/8}`.
pub fn hajnal_instance(seed: u64) -> Graph {
    let (n, mut rng) = size(seed, 1, 4, 14);
    let p = rat(1 + rng.below(7) as i64, 8);
    gnp(n, &p, seed).expect("valid probability")
}

/// Random chordal graph with `n` in `4..=16`.
pub fn chordal_instance(seed: u64) -> Graph {
    let (n, mut rng) = size(seed, 2, 4, 16);
    let density = rat(1 + rng.below(7) as i64, 8);
    random_chordal(n, &density, seed).expect("positive n")
}

/// Random disks with `n` in `lo..=hi` on a square sized for a moderately
/// dense arrangement.
pub fn disk_instance(seed: u64, lo: usize, hi: usize, unit: bool) -> DiskSet {
    let (n, mut rng) = size(seed, if unit { 4 } else { 3 }, lo, hi);
    let side = if unit { 3 + rng.below(4) } else { 4 + rng.below(6) };
    random_disks(n, side, unit, seed).expect("positive radii")
}

/// Random chord diagram with `n` in `lo..=hi`.
pub fn chord_instance(seed: u64, lo: usize, hi: usize) -> IntervalSet {
    let (n, _) = size(seed, 5, lo, hi);
    random_intervals(n, seed).expect("distinct endpoints")
}

/// A graph likely to have VC-dimension at most one: a complete multipartite
/// graph, a `C5` blowup, or a sparse random graph.
pub fn vc1_candidate(seed: u64) -> Graph {
    let (choice, mut rng) = size(seed, 6, 0, 2);
    let mut parts = |count: usize| (0..count).map(|_| 1 + rng.below(3) as usize).collect::<Vec<_>>();
    match choice {
        0 => {
            let k = 1 + (seed % 4) as usize;
            complete_multipartite(&parts(k)).expect("positive parts")
        }
        1 => blowup(&Graph::cycle(5), &parts(5)).expect("five parts"),
        _ => gnp(6 + (seed % 5) as usize, &rat(1, 5), seed).expect("valid probability"),
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<ClaimRow> {
    match suite {
        Suite::Hajnal => {
            let g = hajnal_instance(seed);
            let fam = enumerate_mis(&g)?;
            let report = hajnal_check(&fam)?;
            let mut c = Checks::new();
            c.check("intersection-union", report.holds, || format!("lhs {} < 2·{}", report.lhs, fam.alpha()));
            if report.majority {
                let h = min_hitting_set(&fam)?.size();
                c.check("majority-single-vertex", h == 1 && report.majority_implies_common_vertex, || {
                    format!("alpha {} > n/2 but h = {h}", fam.alpha())
                });
            }
            Ok(c.row(suite, seed, &Instance::Graph(g)))
        }
        Suite::EvenHoleSparse => {
            let g = chordal_instance(seed);
            let fam = enumerate_mis(&g)?;
            let mut c = Checks::new();
            c.check("symmetric-difference-acyclic", true, String::new);
            for (i, a) in fam.sets().iter().enumerate() {
                for b in &fam.sets()[i + 1..] {
                    let d = a.symmetric_difference(b);
                    let (sub, _) = g.induced_subgraph(&d);
                    c.check("symmetric-difference-acyclic", sub.is_acyclic(), || {
                        format!("{:?} vs {:?}", a.to_vec(), b.to_vec())
                    });
                }
            }
            Ok(c.row(suite, seed, &Instance::Graph(g)))
        }
        Suite::DiskSparse => {
            let d = disk_instance(seed, 4, 14, false);
            let g = d.graph();
            let fam = enumerate_mis(&g)?;
            let mut c = Checks::new();
            c.check("symmetric-difference-sparse", true, String::new);
            for stat in pairwise_symmetric_difference_stats(&g, &fam) {
                c.check("symmetric-difference-sparse", stat.edges <= 5 * stat.size, || {
                    format!("pair ({}, {}): {} edges on {} vertices", stat.first, stat.second, stat.edges, stat.size)
                });
            }
            Ok(c.row(suite, seed, &Instance::Disks(d)))
        }
        Suite::DiskSix => {
            let d = disk_instance(seed, 4, 15, false);
            let g = d.graph();
            let mut c = Checks::new();
            for v in 0..g.n() {
                let a = d.larger_neighbor_independence(&g, v)?;
                c.check("larger-neighbours-at-most-five", a <= 5, || format!("vertex {v}: {a}"));
            }
            Ok(c.row(suite, seed, &Instance::Disks(d)))
        }
        Suite::CircleColor => {
            let s = chord_instance(seed, 4, 14);
            let t = circle_to_two_order(&s);
            let fam = enumerate_mis(t.graph())?;
            let mut c = Checks::new();
            let coloring = cover_coloring(&t, &fam);
            c.check("colouring-well-defined", coloring.is_ok(), || format!("{:?}", coloring.as_ref().err()));
            let k = k_intersecting_value(&t);
            c.check("two-intersecting", k <= 2, || format!("K = {k}"));
            if let Ok(coloring) = &coloring {
                for z in &coloring.zero_sets {
                    c.check("zero-set-nonempty", !z.is_empty(), String::new);
                    if let Some(w) = crossing_witness(&s, t.graph(), z) {
                        c.check("crosses-at-most-two", false, || w);
                    }
                }
            }
            Ok(c.row(suite, seed, &Instance::Intervals(s)))
        }
        Suite::TwoOrderAxioms => {
            let s = chord_instance(seed, 3, 14);
            let t = circle_to_two_order(&s);
            let mut c = Checks::new();
            let violations = validate_two_order(&t);
            c.check("axioms", violations.is_empty(), || format!("{:?}", violations.first()));
            c.check("graph-is-overlap-graph", t.graph() == &s.overlap_graph(), String::new);
            c.check("shared-lower-element-prec-incomparable", true, String::new);
            if let Some(w) = shared_lower_witness(&t) {
                c.check("shared-lower-element-prec-incomparable", false, || w);
            }
            let fam = enumerate_mis(t.graph())?;
            for set in fam.sets() {
                if let Some(w) = chain_witness(&t, set) {
                    c.check("independent-antichain-is-chain", false, || w);
                }
            }
            c.check("independent-antichain-is-chain", true, String::new);
            Ok(c.row(suite, seed, &Instance::TwoOrder(t)))
        }
        Suite::Vc1Structure => {
            let g = vc1_candidate(seed);
            let mut c = Checks::new();
            let low_vc = !vc_dimension(&g, 1)?.saturated;
            let p5 = find_induced_p5(&g);
            c.check("vc1-p5-free", !low_vc || p5.is_none(), || format!("P5 {p5:?}"));
            c.check("vc1-triangle-neighbours", true, String::new);
            if low_vc {
                if let Some(w) = triangle_witness(&g) {
                    c.check("vc1-triangle-neighbours", false, || w);
                }
            }
            Ok(c.row(suite, seed, &Instance::Graph(g)))
        }
        Suite::UnitDiskStar => {
            let d = disk_instance(seed, 4, 15, true);
            let g = d.graph();
            let mut c = Checks::new();
            c.check("no-induced-k16", true, String::new);
            for v in 0..g.n() {
                let (sub, _) = g.induced_subgraph(g.neighbors(v));
                let a = independence_number(&sub)?;
                c.check("no-induced-k16", a <= 5, || format!("vertex {v} has {a} independent neighbours"));
            }
            Ok(c.row(suite, seed, &Instance::Disks(d)))
        }
        Suite::Piercing11 => {
            let (cx, cy) = piercing_center(seed);
            let hit = (0..PIERCING_POINTS).find(|&k| piercing_point_in_unit_disk(k, &cx, &cy));
            let mut c = Checks::new();
            c.check("eleven-points-pierce", hit.is_some(), || {
                format!("centre ({}, {})", crate::rational::format(&cx), crate::rational::format(&cy))
            });
            let disk = crate::geometry::Disk::new(cx, cy, rat(1, 1));
            Ok(c.row(suite, seed, &Instance::Disks(DiskSet::new(vec![disk])?)))
        }
    }
}

/// A rational centre within distance 2 of the origin. Every fourth seed sits
/// on the circle of radius 2, the worst case.
pub fn piercing_center(seed: u64) -> (Rational, Rational) {
    let mut rng = Rng::new(seed ^ 0x5EED);
    if seed.is_multiple_of(4) {
        // (2(1-t²)/(1+t²), 4t/(1+t²)) for rational t in [-1, 1].
        let t = rat(rng.below(2049) as i64 - 1024, 1024);
        let one = rat(1, 1);
        let d = &one + &t * &t;
        return (rat(2, 1) * (&one - &t * &t) / &d, rat(4, 1) * &t / &d);
    }
    loop {
        let x = rat(rng.below(1025) as i64 - 512, 256);
        let y = rat(rng.below(1025) as i64 - 512, 256);
        if &x * &x + &y * &y <= rat(4, 1) {
            return (x, y);
        }
    }
}

/// Three pairwise non-crossing chords of `z` and another chord crossing all
/// three, if any.
fn crossing_witness(s: &IntervalSet, g: &Graph, z: &VertexSet) -> Option<String> {
    let zs = z.to_vec();
    for (i, &a) in zs.iter().enumerate() {
        for (j, &b) in zs.iter().enumerate().skip(i + 1) {
            for &c in &zs[j + 1..] {
                if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if let Some(x) = (0..s.len()).find(|&x| g.has_edge(x, a) && g.has_edge(x, b) && g.has_edge(x, c)) {
                    return Some(format!("chord {x} crosses {a}, {b}, {c}"));
                }
            }
        }
    }
    None
}

/// Distinct `a, b, c` with `c ⊆ a`, `c ⊆ b` and `a, b` comparable in `≺`.
fn shared_lower_witness(t: &TwoOrderStructure) -> Option<String> {
    let n = t.n();
    for c in 0..n {
        for a in 0..n {
            for b in 0..n {
                if a != b && a != c && b != c && t.is_sub(c, a) && t.is_sub(c, b) && t.is_prec(a, b) {
                    return Some(format!("{c} ⊆ {a}, {c} ⊆ {b}, {a} ≺ {b}"));
                }
            }
        }
    }
    None
}

/// A pair in the `⊆`-antichain part of an independent set that is not
/// `≺`-comparable. Only pairs that are `⊆`-incomparable are examined.
fn chain_witness(t: &TwoOrderStructure, set: &VertexSet) -> Option<String> {
    let v = set.to_vec();
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            let sub = t.is_sub(a, b) || t.is_sub(b, a);
            let prec = t.is_prec(a, b) || t.is_prec(b, a);
            if !sub && !prec {
                return Some(format!("{a} and {b} are independent but incomparable in both orders"));
            }
        }
    }
    None
}

/// A triangle and a fourth vertex adjacent to fewer than two of its corners.
fn triangle_witness(g: &Graph) -> Option<String> {
    let n = g.n();
    for a in 0..n {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            for c in g.neighbors(a).intersection(g.neighbors(b)).iter().filter(|&c| c > b) {
                let tri = VertexSet::from_vertices(n, [a, b, c]);
                if let Some(x) = (0..n).find(|&x| !tri.contains(x) && g.neighbors(x).intersection_len(&tri) < 2) {
                    return Some(format!("vertex {x} sees fewer than two of {a}, {b}, {c}"));
                }
            }
        }
    }
    None
}

/// Rows for seeds `0..seeds`, in seed order.
pub fn check_claims(suite: Suite, seeds: u64) -> Result<Vec<ClaimRow>> {
    (0..seeds).map(|seed| run_suite(suite, seed)).collect()
}

pub const CSV_HEADER: &str = "suite,seed,fingerprint,claim,holds,witness";

pub fn rows_to_csv(rows: &[ClaimRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    if rows.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_a_few_seeds() {
        for suite in Suite::ALL {
            for row in check_claims(suite, 12).unwrap() {
                assert!(row.holds, "{row:?}");
                assert_eq!(row.fingerprint.len(), 16);
            }
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn rows_are_deterministic() {
        let a = rows_to_csv(&check_claims(Suite::DiskSix, 5).unwrap()).unwrap();
        let b = rows_to_csv(&check_claims(Suite::DiskSix, 5).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with(CSV_HEADER));
        assert_eq!(a.lines().count(), 6);
    }

    #[test]
    fn csv_quoting() {
        let row = ClaimRow {
            suite: "hajnal",
            seed: 3,
            fingerprint: "00".into(),
            claim: "a;b".into(),
            holds: false,
            witness: "x\"y, z".into(),
        };
        let csv = rows_to_csv(&[row]).unwrap();
        assert_eq!(csv.lines().nth(1).unwrap(), "hajnal,3,00,a;b,false,\"x\"\"y, z\"");
        assert_eq!(rows_to_csv(&[]).unwrap(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn piercing_centres_stay_in_range() {
        for seed in 0..50 {
            let (x, y) = piercing_center(seed);
            assert!(&x * &x + &y * &y <= rat(4, 1));
        }
    }
}
