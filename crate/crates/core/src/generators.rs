//! Seeded generators and the explicit constructions.
//!
//! All randomness comes from [`Rng`], a SplitMix64 stream:
//!
//! ```text
//! state  = state + 0x9E3779B97F4A7C15            (wrapping)
//! z      = state
//! z      = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (wrapping)
//! z      = (z ^ (z >> 27)) * 0x94D049BB133111EB  (wrapping)
//! output = z ^ (z >> 31)
//! ```
//!
//! `below(n)` is the high word of the 128-bit product `output * n`.
//! Shuffles are Fisher–Yates from the last index down, swapping `i` with
//! `below(i + 1)`. A Bernoulli trial with rational probability `p/q` succeeds
//! when `below(q) < p`.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Arc, ArcSet, Disk, DiskSet, Interval, IntervalSet};
use crate::graph::Graph;
use crate::instance::Instance;
use crate::rational::{self, rat, Rational};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Succeeds with probability `p`, which must lie in `[0, 1]`.
    pub fn bernoulli(&mut self, p: &Probability) -> bool {
        self.below(p.denom) < p.numer
    }
}

/// A probability `numer/denom` small enough for [`Rng::bernoulli`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probability {
    numer: u64,
    denom: u64,
}

impl Probability {
    pub fn new(p: &Rational) -> Result<Probability> {
        let numer = p.numer().to_u64();
        let denom = p.denom().to_u64();
        match (numer, denom) {
            (Some(numer), Some(denom)) if numer <= denom => Ok(Probability { numer, denom }),
            _ if p.is_zero() => Ok(Probability { numer: 0, denom: 1 }),
            _ => Err(Error::Precondition(format!("{} is not a probability", rational::format(p)))),
        }
    }
}

/// Erdős–Rényi graph: each pair `u < v`, in lexicographic order, is an edge
/// with probability `p`.
pub fn gnp(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    let p = Probability::new(p)?;
    let mut rng = Rng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(&p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Chordal graph by vertex addition: vertex `v` picks a random earlier anchor
/// `w`, grows a clique from it by offering each other earlier vertex (in random
/// order) that is adjacent to the whole clique with probability `density`,
/// and joins the clique.
pub fn random_chordal(n: usize, density: &Rational, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let p = Probability::new(density)?;
    let mut rng = Rng::new(seed);
    let mut adj = vec![VertexSet::new(n); n];
    for v in 1..n {
        let w = rng.below(v as u64) as usize;
        let mut clique = VertexSet::from_vertices(n, [w]);
        let mut order: Vec<usize> = (0..v).filter(|&u| u != w).collect();
        rng.shuffle(&mut order);
        for u in order {
            if clique.is_subset(&adj[u]) && rng.bernoulli(&p) {
                clique.insert(u);
            }
        }
        for u in clique.iter() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Graph::from_rows(adj)
}

/// Replaces vertex `i` of `h` by an independent set of `sizes[i]` vertices,
/// numbered consecutively.
pub fn blowup(h: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != h.n() {
        return Err(Error::Precondition(format!("{} part sizes for a graph on {} vertices", sizes.len(), h.n())));
    }
    if sizes.contains(&0) {
        return Err(Error::Precondition("blowup part sizes must be positive".into()));
    }
    let mut offset = vec![0; sizes.len() + 1];
    for (i, s) in sizes.iter().enumerate() {
        offset[i + 1] = offset[i] + s;
    }
    let mut edges = Vec::new();
    for (a, b) in h.edges() {
        for u in offset[a]..offset[a + 1] {
            for v in offset[b]..offset[b + 1] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(offset[sizes.len()], &edges)
}

pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    blowup(&Graph::complete(sizes.len()), sizes)
}

/// Vertices are the ordered pairs `(i, j)` of distinct elements of
/// `1..=2k`, listed lexicographically; `(a, b) ~ (c, d)` iff `b = c` or
/// `a = d`.
pub fn alon_pairs_graph(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition("alon pairs graph needs k >= 1".into()));
    }
    let m = 2 * k;
    let pairs: Vec<(usize, usize)> =
        (1..=m).flat_map(|i| (1..=m).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut edges = Vec::new();
    for (x, &(a, b)) in pairs.iter().enumerate() {
        for (y, &(c, d)) in pairs.iter().enumerate().skip(x + 1) {
            if b == c || a == d {
                edges.push((x, y));
            }
        }
    }
    let labels = pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
    Ok(Graph::new(pairs.len(), &edges)?.with_labels(labels))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges).expect("valid")
}

/// Disks with centres on the grid `(1/16)·Z²` inside `[0, side]²`. Radii
/// are 1 when `unit`, otherwise drawn from `{1, 17/16, …, 63/16}`.
pub fn random_disks(n: usize, side: u64, unit: bool, seed: u64) -> Result<DiskSet> {
    let mut rng = Rng::new(seed);
    let steps = side * 16 + 1;
    let disks = (0..n)
        .map(|_| {
            let cx = rat(rng.below(steps) as i64, 16);
            let cy = rat(rng.below(steps) as i64, 16);
            let r = if unit { rat(1, 1) } else { rat(16 + rng.below(48) as i64, 16) };
            Disk::new(cx, cy, r)
        })
        .collect();
    DiskSet::new(disks)
}

/// A uniformly shuffled perfect matching of the endpoints `1..=2n`, each
/// matched pair becoming an interval; intervals are sorted by left end.
pub fn random_intervals(n: usize, seed: u64) -> Result<IntervalSet> {
    let mut rng = Rng::new(seed);
    let mut points: Vec<i64> = (1..=2 * n as i64).collect();
    rng.shuffle(&mut points);
    let mut pairs: Vec<(i64, i64)> = points.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
    pairs.sort();
    IntervalSet::new(pairs.into_iter().map(|(l, r)| Interval::new(rat(l, 1), rat(r, 1))).collect())
}

/// `2n` distinct points of the grid `{0, 1/4n, …, (4n-1)/4n}` paired up in
/// shuffled order; each pair `(s, e)` is the arc from `s` counter-clockwise
/// to `e`.
pub fn random_arcs(n: usize, seed: u64) -> Result<ArcSet> {
    let mut rng = Rng::new(seed);
    let q = 4 * n as i64;
    let mut grid: Vec<i64> = (0..q).collect();
    rng.shuffle(&mut grid);
    let arcs = grid[..2 * n].chunks(2).map(|c| Arc::new(rat(c[0], q), rat((c[1] - c[0]).rem_euclid(q), q))).collect();
    ArcSet::new(arcs)
}

/// Named small graphs: `c<n>`, `k<n>`, `p<n>`, `e<n>` (edgeless) and
/// `petersen`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let bad = || Error::Parse(format!("unknown base graph {name:?}"));
    if name == "petersen" {
        return Ok(petersen());
    }
    let (kind, size) = name.split_at(1.min(name.len()));
    let size: usize = size.parse().map_err(|_| bad())?;
    match kind {
        "c" if size >= 3 => Ok(Graph::cycle(size)),
        "k" => Ok(Graph::complete(size)),
        "p" => Ok(Graph::path(size)),
        "e" => Ok(Graph::empty(size)),
        _ => Err(bad()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Chordal,
    Blowup,
    Multipartite,
    AlonPairs,
    RandomDisks,
    RandomIntervals,
    RandomArcs,
    Gnp,
}

impl Kind {
    pub fn tag(self) -> &'static str {
        match self {
            Kind::Chordal => "chordal",
            Kind::Blowup => "blowup",
            Kind::Multipartite => "multipartite",
            Kind::AlonPairs => "alon-pairs",
            Kind::RandomDisks => "random-disks",
            Kind::RandomIntervals => "random-intervals",
            Kind::RandomArcs => "random-arcs",
            Kind::Gnp => "gnp",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown generator kind {s:?}")))
    }
}

/// Generator parameters, mirroring the flags of `hitset gen`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenSpec {
    pub kind: Kind,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub seed: u64,
    /// Edge probability for `gnp`, clique growth probability for `chordal`.
    #[serde(default, with = "rational::opt_text", skip_serializing_if = "Option::is_none")]
    pub density: Option<Rational>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sizes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<u64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub unit: bool,
}

impl GenSpec {
    pub fn new(kind: Kind) -> GenSpec {
        GenSpec {
            kind,
            n: None,
            seed: 0,
            density: None,
            sizes: Vec::new(),
            base: None,
            k: None,
            side: None,
            unit: false,
        }
    }

    fn need_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::Precondition(format!("{} needs n", self.kind.tag())))
    }

    fn density(&self) -> Rational {
        self.density.clone().unwrap_or_else(|| rat(1, 2))
    }

    pub fn generate(&self) -> Result<Instance> {
        Ok(match self.kind {
            Kind::Chordal => Instance::Graph(random_chordal(self.need_n()?, &self.density(), self.seed)?),
            Kind::Gnp => Instance::Graph(gnp(self.need_n()?, &self.density(), self.seed)?),
            Kind::Blowup => {
                let base = named_graph(self.base.as_deref().unwrap_or("c5"))?;
                let sizes = if self.sizes.is_empty() { vec![1; base.n()] } else { self.sizes.clone() };
                Instance::Graph(blowup(&base, &sizes)?)
            }
            Kind::Multipartite => {
                if self.sizes.is_empty() {
                    return Err(Error::Precondition("multipartite needs sizes".into()));
                }
                Instance::Graph(complete_multipartite(&self.sizes)?)
            }
            Kind::AlonPairs => Instance::Graph(alon_pairs_graph(self.k.unwrap_or(1))?),
            Kind::RandomDisks => {
                let n = self.need_n()?;
                let side = self.side.unwrap_or_else(|| default_side(n));
                Instance::Disks(random_disks(n, side, self.unit, self.seed)?)
            }
            Kind::RandomIntervals => Instance::Intervals(random_intervals(self.need_n()?, self.seed)?),
            Kind::RandomArcs => Instance::Arcs(random_arcs(self.need_n()?, self.seed)?),
        })
    }
}

/// Square side giving a moderately dense disk arrangement for `n` disks.
pub fn default_side(n: usize) -> u64 {
    let mut side = 2;
    while side * side < 2 * n as u64 {
        side += 1;
    }
    side + 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mis::{clique_number, independence_number, Limits};
    use crate::recognition::is_chordal;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 and seed 1234567 of the reference SplitMix64.
        let mut r = Rng::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        let mut r = Rng::new(1234567);
        assert_eq!(r.next_u64(), 6457827717110365317);
        assert_eq!(r.next_u64(), 3203168211198807973);
    }

    #[test]
    fn below_and_shuffle() {
        let mut r = Rng::new(9);
        for n in 1..50 {
            assert!(r.below(n) < n);
        }
        let mut v: Vec<usize> = (0..20).collect();
        r.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort();
        assert_eq!(sorted, (0..20).collect::<Vec<_>>());
        assert_ne!(v, sorted);
        let never = Probability::new(&rat(0, 1)).unwrap();
        let always = Probability::new(&rat(1, 1)).unwrap();
        assert!((0..100).all(|_| !r.bernoulli(&never) && r.bernoulli(&always)));
        assert!(Probability::new(&rat(3, 2)).is_err());
        assert!(Probability::new(&rat(-1, 2)).is_err());
    }

    #[test]
    fn chordal_generator() {
        assert_eq!(random_chordal(1, &rat(1, 2), 0).unwrap().n(), 1);
        let t = random_chordal(3, &rat(1, 1), 5).unwrap();
        assert_eq!(t.edge_count(), 3);
        let g = random_chordal(12, &rat(1, 2), 7).unwrap();
        assert!(is_chordal(&g));
        assert!(g.is_connected());
        assert_eq!(random_chordal(12, &rat(1, 2), 7).unwrap(), g);
        let tree = random_chordal(10, &rat(0, 1), 3).unwrap();
        assert!(tree.is_acyclic() && tree.is_connected());
    }

    #[test]
    fn blowups() {
        assert_eq!(blowup(&Graph::cycle(5), &[1; 5]).unwrap(), Graph::cycle(5));
        let c52 = blowup(&Graph::cycle(5), &[2; 5]).unwrap();
        assert_eq!(c52.n(), 10);
        assert_eq!(independence_number(&c52).unwrap(), 4);
        let k34 = blowup(&Graph::complete(2), &[3, 4]).unwrap();
        assert_eq!((k34.n(), k34.edge_count()), (7, 12));
        assert!(blowup(&Graph::complete(2), &[3]).is_err());
        assert!(blowup(&Graph::complete(2), &[3, 0]).is_err());
    }

    #[test]
    fn multipartite() {
        let g = complete_multipartite(&[4, 4, 4]).unwrap();
        assert_eq!(independence_number(&g).unwrap(), 4);
        assert_eq!(complete_multipartite(&[2]).unwrap().edge_count(), 0);
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), Graph::complete(3));
    }

    #[test]
    fn alon_pairs() {
        let g = alon_pairs_graph(1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert_eq!(g.labels().unwrap(), ["(1,2)", "(2,1)"]);
        let g = alon_pairs_graph(2).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(clique_number(&g, &Limits::default()).unwrap(), 3);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(!g.has_triangle());
    }

    #[test]
    fn geometry_generators_are_deterministic() {
        let d = random_disks(10, 6, false, 1).unwrap();
        assert_eq!(d, random_disks(10, 6, false, 1).unwrap());
        assert_eq!(d.len(), 10);
        assert!(random_disks(8, 4, true, 2).unwrap().disks().iter().all(|x| x.r == rat(1, 1)));
        let s = random_intervals(7, 3).unwrap();
        assert_eq!(s.len(), 7);
        let a = random_arcs(7, 3).unwrap();
        assert_eq!(a.len(), 7);
    }

    #[test]
    fn gen_spec_json() {
        let spec: GenSpec = serde_json::from_str(r#"{"kind":"blowup","base":"c5","sizes":[2,2,2,2,2]}"#).unwrap();
        match spec.generate().unwrap() {
            Instance::Graph(g) => assert_eq!(g.n(), 10),
            other => panic!("{other:?}"),
        }
        let spec: GenSpec = serde_json::from_str(r#"{"kind":"gnp","n":5,"density":"1/3","seed":4}"#).unwrap();
        assert_eq!(serde_json::to_string(&spec).unwrap(), r#"{"kind":"gnp","n":5,"seed":4,"density":"1/3"}"#);
        assert!(serde_json::from_str::<GenSpec>(r#"{"kind":"nope"}"#).is_err());
        assert!("alon-pairs".parse::<Kind>().is_ok());
        assert!(named_graph("x3").is_err());
        assert_eq!(named_graph("k4").unwrap(), Graph::complete(4));
    }
}
