//! Graphs carrying two compatible partial orders, and the layered hitting
//! sets built from the containment colouring.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::IntervalSet;
use crate::graph::Graph;
use crate::hitting::{min_hitting_set, HitterReport, Method};
use crate::mis::MisFamily;
use crate::rational::{self, rat, Rational};
use crate::vertex_set::VertexSet;

/// A ground set with relations `⊆` (`sub`) and `≺` (`prec`). The graph joins
/// two elements exactly when they are incomparable in both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TwoOrderJson", into = "TwoOrderJson")]
pub struct TwoOrderStructure {
    /// `sub[a]` holds every `b` with `a ⊆ b`.
    sub: Vec<VertexSet>,
    /// `prec[a]` holds every `b` with `a ≺ b`.
    prec: Vec<VertexSet>,
    graph: Graph,
}

/// `{"n": int, "sub": [[a, b], ...], "prec": [[a, b], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoOrderJson {
    pub n: usize,
    pub sub: Vec<[usize; 2]>,
    pub prec: Vec<[usize; 2]>,
}

impl TryFrom<TwoOrderJson> for TwoOrderStructure {
    type Error = Error;

    fn try_from(j: TwoOrderJson) -> Result<Self> {
        let pairs = |v: &[[usize; 2]]| v.iter().map(|p| (p[0], p[1])).collect::<Vec<_>>();
        TwoOrderStructure::new(j.n, &pairs(&j.sub), &pairs(&j.prec))
    }
}

impl From<TwoOrderStructure> for TwoOrderJson {
    fn from(t: TwoOrderStructure) -> Self {
        let pairs =
            |rel: &[VertexSet]| rel.iter().enumerate().flat_map(|(a, s)| s.iter().map(move |b| [a, b])).collect();
        TwoOrderJson { n: t.n(), sub: pairs(&t.sub), prec: pairs(&t.prec) }
    }
}

impl TwoOrderStructure {
    pub fn new(n: usize, sub: &[(usize, usize)], prec: &[(usize, usize)]) -> Result<Self> {
        let relation = |pairs: &[(usize, usize)]| -> Result<Vec<VertexSet>> {
            let mut rel = vec![VertexSet::new(n); n];
            for &(a, b) in pairs {
                for v in [a, b] {
                    if v >= n {
                        return Err(Error::VertexOutOfRange { vertex: v, n });
                    }
                }
                rel[a].insert(b);
            }
            Ok(rel)
        };
        let sub = relation(sub)?;
        let prec = relation(prec)?;
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let related = sub[a].contains(b) || sub[b].contains(a) || prec[a].contains(b) || prec[b].contains(a);
                if !related {
                    edges.push((a, b));
                }
            }
        }
        let graph = Graph::new(n, &edges)?;
        Ok(TwoOrderStructure { sub, prec, graph })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_sub(&self, a: usize, b: usize) -> bool {
        self.sub[a].contains(b)
    }

    pub fn is_prec(&self, a: usize, b: usize) -> bool {
        self.prec[a].contains(b)
    }

    /// `D(x, ⊆)`: every `y` with `y ⊆ x`.
    pub fn below(&self, x: usize) -> VertexSet {
        VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&y| self.is_sub(y, x)))
    }
}

/// A failed axiom together with the elements exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

/// Every violated axiom instance; empty iff the structure is a valid
/// 2-incomparable graph.
pub fn validate_two_order(t: &TwoOrderStructure) -> Vec<Violation> {
    let n = t.n();
    let mut out = Vec::new();
    let mut report = |axiom, witness: Vec<usize>| out.push(Violation { axiom, witness });
    for (name, rel) in [("sub", &t.sub), ("prec", &t.prec)] {
        for a in 0..n {
            if rel[a].contains(a) {
                report(if name == "sub" { "sub-irreflexive" } else { "prec-irreflexive" }, vec![a]);
            }
            for b in rel[a].iter() {
                if a < b && rel[b].contains(a) {
                    report(if name == "sub" { "sub-antisymmetric" } else { "prec-antisymmetric" }, vec![a, b]);
                }
                for c in rel[b].iter() {
                    if a != c && !rel[a].contains(c) {
                        report(if name == "sub" { "sub-transitive" } else { "prec-transitive" }, vec![a, b, c]);
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let comparable = t.is_sub(a, b) || t.is_sub(b, a) || t.is_prec(a, b) || t.is_prec(b, a);
            if t.graph.has_edge(a, b) == comparable {
                report("edge-iff-incomparable", vec![a, b]);
            }
            if t.is_sub(a, b) && (t.is_prec(a, b) || t.is_prec(b, a)) {
                report("sub-excludes-prec", vec![a, b]);
            }
            if t.is_prec(a, b) {
                for c in 0..n {
                    if c == a || c == b {
                        continue;
                    }
                    if t.is_sub(c, a) && !t.is_prec(c, b) {
                        report("prec-inherited-below-left", vec![a, b, c]);
                    }
                    if t.is_sub(c, b) && !t.is_prec(a, c) {
                        report("prec-inherited-below-right", vec![a, b, c]);
                    }
                }
            }
        }
    }
    out
}

/// `a ⊆ b` when `a` lies strictly inside `b`; `a ≺ b` when `a` ends before
/// `b` starts. The derived graph is the overlap graph.
pub fn circle_to_two_order(s: &IntervalSet) -> TwoOrderStructure {
    let iv = s.intervals();
    let n = iv.len();
    let mut sub = Vec::new();
    let mut prec = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if iv[b].contains(&iv[a]) {
                sub.push((a, b));
            }
            if iv[a].precedes(&iv[b]) {
                prec.push((a, b));
            }
        }
    }
    TwoOrderStructure::new(n, &sub, &prec).expect("indices in range")
}

/// The largest number of elements of one `≺`-chain inside a single
/// neighbourhood.
pub fn k_intersecting_value(t: &TwoOrderStructure) -> usize {
    (0..t.n()).map(|x| longest_chain(t, t.graph.neighbors(x))).max().unwrap_or(0)
}

fn longest_chain(t: &TwoOrderStructure, within: &VertexSet) -> usize {
    // Memoised longest path in the ≺ digraph; elements on the current stack
    // count as zero so a malformed cyclic relation still terminates.
    fn visit(
        t: &TwoOrderStructure,
        within: &VertexSet,
        v: usize,
        memo: &mut [Option<usize>],
        active: &mut VertexSet,
    ) -> usize {
        if let Some(d) = memo[v] {
            return d;
        }
        if active.contains(v) {
            return 0;
        }
        active.insert(v);
        let best = t.prec[v].intersection(within).iter().map(|w| visit(t, within, w, memo, active)).max().unwrap_or(0);
        active.remove(v);
        memo[v] = Some(best + 1);
        best + 1
    }
    let mut memo = vec![None; t.n()];
    let mut active = VertexSet::new(t.n());
    within.iter().map(|v| visit(t, within, v, &mut memo, &mut active)).max().unwrap_or(0)
}

/// Containment colouring of the vertices lying in some maximum independent
/// set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverColoring {
    /// `C(x) = |{y ∈ I : y ⊆ x}|` for any maximum independent set `I ∋ x`;
    /// `None` for residual vertices.
    pub colors: Vec<Option<usize>>,
    /// `layers[i] = V_i`, for `i` in `0..alpha`.
    pub layers: Vec<VertexSet>,
    /// Per maximum independent set, the members of colour zero.
    pub zero_sets: Vec<VertexSet>,
}

impl CoverColoring {
    /// Union of the layers `V_i` for `i` in `range`, clipped to existing layers.
    pub fn layer_union(&self, range: std::ops::RangeInclusive<usize>) -> VertexSet {
        let n = self.colors.len();
        let mut out = VertexSet::new(n);
        for i in range {
            if let Some(layer) = self.layers.get(i) {
                out.union_with(layer);
            }
        }
        out
    }
}

/// Colours each vertex from the lexicographically least maximum independent
/// set containing it, then checks every other containing set agrees.
pub fn cover_coloring(t: &TwoOrderStructure, fam: &MisFamily) -> Result<CoverColoring> {
    let n = t.n();
    if fam.n() != n {
        return Err(Error::Precondition(format!("family on {} vertices for a structure on {n}", fam.n())));
    }
    let below: Vec<VertexSet> = (0..n).map(|x| t.below(x)).collect();
    let mut colors = vec![None; n];
    for set in fam.sets() {
        for x in set.iter() {
            let c = below[x].intersection_len(set);
            match colors[x] {
                None => colors[x] = Some(c),
                Some(prev) if prev != c => {
                    return Err(Error::TheoremViolation(format!(
                        "vertex {x} has colour {prev} in one maximum independent set and {c} in {:?}",
                        set.to_vec()
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let mut layers = vec![VertexSet::new(n); fam.alpha()];
    for (x, c) in colors.iter().enumerate() {
        if let Some(c) = *c {
            layers[c].insert(x);
        }
    }
    let zero_sets = fam.sets().iter().map(|s| s.intersection(layers.first().unwrap_or(&VertexSet::new(n)))).collect();
    Ok(CoverColoring { colors, layers, zero_sets })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoOrderBranch {
    /// `δ(G) < L`.
    MinDegree,
    /// `K = 0` or fewer than two colour offsets fit, so no layer exists.
    Degenerate,
    Layered,
}

/// Outcome of [`two_order_hitter`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoOrderRun {
    pub report: HitterReport,
    pub branch: TwoOrderBranch,
    pub k: usize,
    pub min_degree: usize,
    /// `m`, when the layered branch ran.
    pub m: Option<usize>,
    /// The offset `t` of the chosen layer union.
    pub t: Option<usize>,
    /// `|H_t|` for `t = 1..=⌊m/2⌋`.
    pub layer_sizes: Vec<usize>,
    /// Offsets whose union met every maximum independent set.
    pub hitting_offsets: Vec<usize>,
    /// Maximum independent sets whose colour-zero part is empty or exceeds
    /// `P = 2·sqrt(β(1-β)nK)`.
    pub slave_violations: usize,
}

/// `α/n`, or `n/(n+1)` when the graph is edgeless and `α/n = 1`.
pub fn default_beta(alpha: usize, n: usize) -> Rational {
    if alpha < n {
        rat(alpha as i64, n as i64)
    } else {
        rat(n as i64, n as i64 + 1)
    }
}

/// The layered construction for a structure whose independence number is at
/// least `beta·n`.
pub fn two_order_hitter(t: &TwoOrderStructure, fam: &MisFamily, beta: &Rational) -> Result<TwoOrderRun> {
    let n = t.n();
    let zero = Rational::zero();
    let one = rat(1, 1);
    if *beta <= zero || *beta >= one {
        return Err(Error::Precondition("beta must lie strictly between 0 and 1".into()));
    }
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let nr = rat(n as i64, 1);
    if rat(fam.alpha() as i64, 1) < beta * &nr {
        return Err(Error::Precondition(format!(
            "alpha = {} is below beta·n = {}",
            fam.alpha(),
            rational::format(&(beta * &nr))
        )));
    }
    let g = t.graph();
    let (v, delta) = g.min_degree_vertex()?;
    let k = k_intersecting_value(t);
    let kr = rat(k as i64, 1);
    let co = &one - beta;
    // δ < L  ⟺  β·δ² < 4(1-β)·n·K
    let d = rat(delta as i64, 1);
    let below_l = beta * &d * &d < rat(4, 1) * &co * &nr * &kr;
    let mut run = TwoOrderRun {
        report: HitterReport::checked(g.closed_neighborhood(v), Method::MinDegree, Some(d + &one), fam),
        branch: TwoOrderBranch::MinDegree,
        k,
        min_degree: delta,
        m: None,
        t: None,
        layer_sizes: Vec::new(),
        hitting_offsets: Vec::new(),
        slave_violations: 0,
    };
    if below_l {
        return Ok(run);
    }
    // m is the largest integer with 16·m²·(1-β)·K <= β·n, at least 1.
    let m = if k == 0 {
        None
    } else {
        let limit = beta * &nr / (rat(16, 1) * &co * &kr);
        let mut m = limit.to_f64().map_or(1, |x| x.sqrt().floor().max(1.0) as usize);
        while m > 1 && rat((m * m) as i64, 1) > limit {
            m -= 1;
        }
        while rat(((m + 1) * (m + 1)) as i64, 1) <= limit {
            m += 1;
        }
        Some(m)
    };
    let Some(m) = m.filter(|m| m / 2 >= 1) else {
        run.branch = TwoOrderBranch::Degenerate;
        run.m = m;
        return Ok(run);
    };
    run.branch = TwoOrderBranch::Layered;
    run.m = Some(m);
    let coloring = cover_coloring(t, fam)?;
    let p_squared = rat(4, 1) * beta * &co * &nr * &kr;
    run.slave_violations =
        coloring.zero_sets.iter().filter(|z| z.is_empty() || rat((z.len() * z.len()) as i64, 1) > p_squared).count();
    let mut best: Option<(usize, VertexSet)> = None;
    for offset in 1..=m / 2 {
        let mut h = VertexSet::new(n);
        let mut c = offset;
        while c < coloring.layers.len() {
            h.union_with(&coloring.layers[c]);
            c += m;
        }
        run.layer_sizes.push(h.len());
        if crate::hitting::verify_hitting(fam, &h) {
            run.hitting_offsets.push(offset);
            if best.as_ref().is_none_or(|(_, b)| h.len() < b.len()) {
                best = Some((offset, h));
            }
        }
    }
    let Some((offset, set)) = best else {
        return Err(Error::TheoremViolation(format!(
            "no layer union hits every maximum independent set (m = {m}, K = {k}, δ = {delta}, sizes {:?})",
            run.layer_sizes
        )));
    };
    run.t = Some(offset);
    let bound = rat(n as i64, (m / 2) as i64);
    run.report = HitterReport::checked(set, Method::TwoOrder, Some(bound), fam);
    Ok(run)
}

/// Which claims held for one maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MisClaims {
    pub zero_size: usize,
    pub zero_nonempty: bool,
    /// `|I ∩ V_i| <= M` for every `i >= 1`.
    pub layer_bound: bool,
    /// No member directly covers more than `M` other members.
    pub direct_cover: bool,
    /// `I` meets `V_1 ∪ … ∪ V_M`.
    pub level_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerCandidate {
    /// Inclusive colour range.
    pub range: (usize, usize),
    pub size: usize,
    pub verified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeakCircleBranch {
    /// Some colour-zero set exceeded `M`.
    LargeZeroSet,
    Layers,
    /// No layer candidate verified; the exact minimum was returned.
    Fallback,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakCircleRun {
    pub report: HitterReport,
    pub branch: WeakCircleBranch,
    pub candidates: Vec<LayerCandidate>,
    pub claims: Vec<MisClaims>,
}

/// The layered construction for circle graphs with parameter `M`.
pub fn weak_circle_layers(s: &IntervalSet, fam: &MisFamily, big_m: usize) -> Result<WeakCircleRun> {
    if big_m == 0 {
        return Err(Error::Precondition("M must be positive".into()));
    }
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let t = circle_to_two_order(s);
    let g = t.graph();
    let coloring = cover_coloring(&t, fam)?;
    let relation = s.cover_relation();
    let level_one = coloring.layer_union(1..=big_m);
    let claims: Vec<MisClaims> = fam
        .sets()
        .iter()
        .zip(&coloring.zero_sets)
        .map(|(set, z)| MisClaims {
            zero_size: z.len(),
            zero_nonempty: !z.is_empty(),
            layer_bound: coloring.layers.iter().skip(1).all(|l| l.intersection_len(set) <= big_m),
            direct_cover: set.iter().all(|v| relation.direct[v].intersection_len(set) <= big_m),
            level_one: set.intersects(&level_one),
        })
        .collect();

    if let Some(z) = coloring.zero_sets.iter().find(|z| z.len() > big_m) {
        let v = z.iter().min_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(a.cmp(&b))).expect("non-empty zero set");
        let report = HitterReport::checked(
            g.closed_neighborhood(v),
            Method::MinDegree,
            Some(rat(g.degree(v) as i64 + 1, 1)),
            fam,
        );
        return Ok(WeakCircleRun { report, branch: WeakCircleBranch::LargeZeroSet, candidates: Vec::new(), claims });
    }

    // Level one, then ((2M)^j, (2M)^{j+1}] while (2M)^{j+1} <= ⌊alpha/(M+1)⌋.
    let mut ranges = vec![(1, big_m)];
    let cap = fam.alpha() / (big_m + 1);
    let base = 2 * big_m;
    let mut pow = 1usize;
    while pow.saturating_mul(base) <= cap {
        ranges.push((pow + 1, pow * base));
        pow *= base;
    }
    let mut candidates = Vec::new();
    let mut best: Option<VertexSet> = None;
    for &(a, b) in &ranges {
        let set = coloring.layer_union(a..=b);
        let verified = !set.is_empty() && crate::hitting::verify_hitting(fam, &set);
        candidates.push(LayerCandidate { range: (a, b), size: set.len(), verified });
        if verified && best.as_ref().is_none_or(|x| set.len() < x.len()) {
            best = Some(set);
        }
    }
    match best {
        Some(set) => Ok(WeakCircleRun {
            report: HitterReport::checked(set, Method::CircleLayers, None, fam),
            branch: WeakCircleBranch::Layers,
            candidates,
            claims,
        }),
        None => {
            let mut report = min_hitting_set(fam)?;
            report.method = Method::Fallback;
            Ok(WeakCircleRun { report, branch: WeakCircleBranch::Fallback, candidates, claims })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::random_intervals;
    use crate::mis::enumerate_mis;

    fn chords(pairs: &[(i64, i64)]) -> IntervalSet {
        IntervalSet::from_integers(pairs).unwrap()
    }

    #[test]
    fn validation() {
        for seed in 0..30 {
            let t = circle_to_two_order(&random_intervals(10, seed).unwrap());
            assert!(validate_two_order(&t).is_empty());
        }
        let bad = TwoOrderStructure::new(2, &[(0, 1)], &[(0, 1)]).unwrap();
        assert!(validate_two_order(&bad).iter().any(|v| v.axiom == "sub-excludes-prec"));
        let free = TwoOrderStructure::new(4, &[], &[]).unwrap();
        assert!(validate_two_order(&free).is_empty());
        assert_eq!(free.graph(), &Graph::complete(4));
        let intransitive = TwoOrderStructure::new(3, &[], &[(0, 1), (1, 2)]).unwrap();
        assert!(validate_two_order(&intransitive).iter().any(|v| v.axiom == "prec-transitive"));
        let uninherited = TwoOrderStructure::new(3, &[(2, 0)], &[(0, 1)]).unwrap();
        assert!(validate_two_order(&uninherited).iter().any(|v| v.axiom == "prec-inherited-below-left"));
        assert!(TwoOrderStructure::new(2, &[(0, 2)], &[]).is_err());
    }

    #[test]
    fn circle_examples() {
        let t = circle_to_two_order(&chords(&[(1, 2), (3, 4)]));
        assert!(t.is_prec(0, 1) && !t.is_prec(1, 0));
        assert_eq!(t.graph().edge_count(), 0);
        let t = circle_to_two_order(&chords(&[(1, 4), (2, 3)]));
        assert!(t.is_sub(1, 0));
        assert_eq!(t.graph().edge_count(), 0);
        let t = circle_to_two_order(&chords(&[(1, 3), (2, 4)]));
        assert_eq!(t.graph().edge_count(), 1);
        let json = serde_json::to_string(&circle_to_two_order(&chords(&[(1, 4), (2, 3), (5, 6)]))).unwrap();
        assert_eq!(json, r#"{"n":3,"sub":[[1,0]],"prec":[[0,2],[1,2]]}"#);
        assert_eq!(
            serde_json::from_str::<TwoOrderStructure>(&json).unwrap(),
            circle_to_two_order(&chords(&[(1, 4), (2, 3), (5, 6)]))
        );
    }

    #[test]
    fn k_intersecting_examples() {
        assert_eq!(k_intersecting_value(&circle_to_two_order(&chords(&[(1, 3), (2, 4)]))), 1);
        assert_eq!(k_intersecting_value(&circle_to_two_order(&chords(&[(1, 2), (3, 4), (5, 6)]))), 0);
        assert_eq!(k_intersecting_value(&circle_to_two_order(&chords(&[(1, 4), (5, 8), (3, 6)]))), 2);
        for seed in 0..50 {
            let t = circle_to_two_order(&random_intervals(12, seed).unwrap());
            assert!(k_intersecting_value(&t) <= 2);
        }
    }

    #[test]
    fn colourings() {
        let t = circle_to_two_order(&chords(&[(1, 6), (2, 5), (3, 4)]));
        let fam = enumerate_mis(t.graph()).unwrap();
        let c = cover_coloring(&t, &fam).unwrap();
        assert_eq!(c.colors, vec![Some(2), Some(1), Some(0)]);
        let t = circle_to_two_order(&chords(&[(1, 2), (3, 4), (5, 6)]));
        let c = cover_coloring(&t, &enumerate_mis(t.graph()).unwrap()).unwrap();
        assert_eq!(c.colors, vec![Some(0); 3]);
        for seed in 0..100 {
            let t = circle_to_two_order(&random_intervals(12, seed).unwrap());
            let fam = enumerate_mis(t.graph()).unwrap();
            let c = cover_coloring(&t, &fam).unwrap();
            let colored: usize = c.layers.iter().map(VertexSet::len).sum();
            assert_eq!(colored + fam.residual().len(), 12);
            assert!(c.zero_sets.iter().all(|z| !z.is_empty()));
        }
    }

    #[test]
    fn hitter_small_cases() {
        let t = circle_to_two_order(&chords(&[(1, 3), (2, 4)]));
        let fam = enumerate_mis(t.graph()).unwrap();
        let run = two_order_hitter(&t, &fam, &rat(1, 2)).unwrap();
        assert_eq!((run.branch, run.report.set.to_vec()), (TwoOrderBranch::MinDegree, vec![0, 1]));
        assert!(run.report.verified);

        let t = circle_to_two_order(&chords(&[(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)]));
        let fam = enumerate_mis(t.graph()).unwrap();
        let run = two_order_hitter(&t, &fam, &rat(1, 2)).unwrap();
        assert_eq!(run.report.size(), 1);
        assert!(run.report.verified);
        assert!(two_order_hitter(&t, &fam, &rat(1, 1)).is_err());
    }

    /// A 20-element `⊆`-chain fully joined to five mutually free elements:
    /// `β = 4/5`, `K = 1`, `δ = L = 5`, so the layered branch runs with `m = 2`.
    #[test]
    fn layered_branch() {
        let n = 25;
        let sub: Vec<(usize, usize)> = (0..20).flat_map(|a| (a + 1..20).map(move |b| (a, b))).collect();
        let t = TwoOrderStructure::new(n, &sub, &[]).unwrap();
        assert!(validate_two_order(&t).is_empty());
        assert_eq!(k_intersecting_value(&t), 1);
        let fam = enumerate_mis(t.graph()).unwrap();
        assert_eq!((fam.alpha(), fam.len()), (20, 1));
        let run = two_order_hitter(&t, &fam, &rat(4, 5)).unwrap();
        assert_eq!(run.branch, TwoOrderBranch::Layered);
        assert_eq!((run.m, run.t, run.slave_violations), (Some(2), Some(1), 0));
        assert_eq!(run.report.method, Method::TwoOrder);
        assert_eq!(run.report.set.to_vec(), (1..20).step_by(2).collect::<Vec<_>>());
        assert!(run.report.verified);
    }

    #[test]
    fn weak_circle_examples() {
        let nested = chords(&[(1, 8), (2, 7), (3, 6), (4, 5)]);
        let fam = enumerate_mis(&nested.overlap_graph()).unwrap();
        let run = weak_circle_layers(&nested, &fam, 2).unwrap();
        assert_eq!(run.claims[0].zero_size, 1);
        assert!(run.report.verified);

        let disjoint = chords(&[(1, 2), (3, 4), (5, 6)]);
        let fam = enumerate_mis(&disjoint.overlap_graph()).unwrap();
        let run = weak_circle_layers(&disjoint, &fam, 1).unwrap();
        assert_eq!(run.branch, WeakCircleBranch::LargeZeroSet);
        assert_eq!(run.report.size(), 1);

        let mut fallbacks = 0;
        for seed in 0..60 {
            let s = random_intervals(10, seed).unwrap();
            let fam = enumerate_mis(&s.overlap_graph()).unwrap();
            let run = weak_circle_layers(&s, &fam, 2).unwrap();
            assert!(run.report.verified, "seed {seed}");
            assert!(run.claims.iter().all(|c| c.zero_nonempty));
            fallbacks += usize::from(run.branch == WeakCircleBranch::Fallback);
        }
        assert!(fallbacks < 60);
        assert!(weak_circle_layers(&disjoint, &fam, 0).is_err());
    }
}
