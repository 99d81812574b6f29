//! Constructive hitting sets. Every report is checked against the full
//! family, so `verified` is a fact about the output, not an assumption.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::ArcSet;
use crate::graph::Graph;
use crate::hitting::{HitterReport, Method};
use crate::mis::MisFamily;
use crate::rational::{self, rat, Rational};
use crate::recognition::{sumner_structure, vc_dimension, SumnerStructure};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SparseBranch {
    /// The chosen sets cover every vertex, or no set passes the threshold.
    LowDegree,
    CNeighborhood,
}

/// Record of one run of [`locally_sparse_hitter`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SparseFrameworkTrace {
    pub s: usize,
    #[serde(with = "rational::text")]
    pub a: Rational,
    #[serde(with = "rational::text")]
    pub b: Rational,
    /// `a / log2 n`
    pub delta: f64,
    /// Indices into the family of `I_1, …, I_t`.
    pub sequence: Vec<usize>,
    /// New vertices contributed by each chosen set.
    pub new_counts: Vec<usize>,
    pub w: Vec<usize>,
    pub branch: SparseBranch,
    pub c: Option<Vec<usize>>,
    /// `⌈δn / (4s·max(t-1, 1))⌉` before clamping to `[1, |I_1|]`.
    pub c_target: Option<usize>,
    pub clamps: Vec<String>,
}

/// `x · log2(n)` compared with `y`, exactly when `n` is a power of two.
fn log_scaled_cmp(x: &Rational, n: usize, y: &Rational) -> std::cmp::Ordering {
    if n.is_power_of_two() {
        (x * rat(n.trailing_zeros() as i64, 1)).cmp(y)
    } else {
        let lhs = rational::to_f64(x) * (n as f64).log2();
        lhs.partial_cmp(&rational::to_f64(y)).expect("finite")
    }
}

/// `⌈y / log2(n)⌉`
fn ceil_over_log(y: &Rational, n: usize) -> usize {
    if n.is_power_of_two() {
        rational::ceil(&(y / rat(n.trailing_zeros() as i64, 1))).to_usize().unwrap_or(usize::MAX)
    } else {
        (rational::to_f64(y) / (n as f64).log2()).ceil() as usize
    }
}

/// The locally sparse framework with sparsity constant `s`: `a = 5s` unless
/// overridden, `δ = a / log2 n`, `b = b_ratio·a`.
pub fn locally_sparse_hitter(
    g: &Graph,
    fam: &MisFamily,
    s: usize,
    a_override: Option<&Rational>,
    b_ratio: &Rational,
) -> Result<(HitterReport, SparseFrameworkTrace)> {
    let n = g.n();
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if n < 2 || s == 0 {
        return Err(Error::Precondition("the sparse framework needs n >= 2 and s >= 1".into()));
    }
    if !rational::is_positive(b_ratio) {
        return Err(Error::Precondition("b_ratio must be positive".into()));
    }
    let a = a_override.cloned().unwrap_or_else(|| rat(5 * s as i64, 1));
    if !rational::is_positive(&a) {
        return Err(Error::Precondition("a must be positive".into()));
    }
    let b = b_ratio * &a;
    let nr = rat(n as i64, 1);
    let sets = fam.sets();

    // Set k qualifies when new > δn/(bk) = a·n/(b·k·log2 n), i.e. when
    // new·b·k·log2 n > a·n.
    let mut w = VertexSet::new(n);
    let mut sequence = Vec::new();
    let mut new_counts = Vec::new();
    loop {
        let k = sequence.len() + 1;
        let best = (0..sets.len())
            .map(|i| (sets[i].difference(&w).len(), i))
            .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)))
            .expect("non-empty family");
        let (new, i) = best;
        let lhs = rat((new * k) as i64, 1) * &b;
        if new == 0 || log_scaled_cmp(&lhs, n, &(&a * &nr)) != std::cmp::Ordering::Greater {
            break;
        }
        w.union_with(&sets[i]);
        sequence.push(i);
        new_counts.push(new);
    }
    let t = sequence.len();
    let delta = rational::to_f64(&a) / (n as f64).log2();
    let mut trace = SparseFrameworkTrace {
        s,
        a: a.clone(),
        b,
        delta,
        sequence,
        new_counts,
        w: w.to_vec(),
        branch: SparseBranch::LowDegree,
        c: None,
        c_target: None,
        clamps: Vec::new(),
    };
    if t == 0 {
        trace.clamps.push("no maximum independent set passes the threshold; min-degree branch".into());
    }
    if t == 0 || w.len() == n {
        let (v, d) = g.min_degree_vertex()?;
        let report =
            HitterReport::checked(g.closed_neighborhood(v), Method::MinDegree, Some(rat(d as i64 + 1, 1)), fam);
        return Ok((report, trace));
    }

    let first = &sets[trace.sequence[0]];
    let rest = trace.sequence[1..].iter().fold(VertexSet::new(n), |acc, &i| acc.union(&sets[i]));
    // |C| = δn / (4s·max(t-1, 1)) = a·n / (4s·max(t-1, 1)·log2 n)
    let denom = rat((4 * s * (t.max(2) - 1)) as i64, 1);
    let target = ceil_over_log(&(&a * &nr / denom), n);
    let mut size = target;
    if size < 1 {
        trace.clamps.push(format!("|C| target {target} raised to 1"));
        size = 1;
    }
    if size > first.len() {
        trace.clamps.push(format!("|C| target {target} lowered to |I_1| = {}", first.len()));
        size = first.len();
    }
    let mut by_cross: Vec<usize> = first.to_vec();
    by_cross.sort_by_key(|&v| (g.neighbors(v).intersection_len(&rest), v));
    let c = VertexSet::from_vertices(n, by_cross.into_iter().take(size));
    let set = c.union(&g.neighborhood_of(&c).intersection(&w));
    trace.branch = SparseBranch::CNeighborhood;
    trace.c = Some(c.to_vec());
    trace.c_target = Some(target);
    let bound = rat(ceil_over_log(&(&a * &nr), n) as i64, 1);
    Ok((HitterReport::checked(set, Method::SparseFramework, Some(bound), fam), trace))
}

/// `{v} ∪ N(v)` for a vertex whose neighbourhood is partitioned into the
/// given cliques.
pub fn simplicial_hitter(g: &Graph, fam: &MisFamily, v: usize, cliques: &[VertexSet]) -> Result<HitterReport> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut union = VertexSet::new(g.n());
    for (i, c) in cliques.iter().enumerate() {
        if c.universe() != g.n() {
            return Err(Error::InvalidCertificate(format!("clique {i} has the wrong universe")));
        }
        if !g.is_clique(c) {
            return Err(Error::InvalidCertificate(format!("part {i} {:?} is not a clique", c.to_vec())));
        }
        if union.intersects(c) {
            return Err(Error::InvalidCertificate(format!("part {i} overlaps an earlier part")));
        }
        union.union_with(c);
    }
    if &union != g.neighbors(v) {
        return Err(Error::InvalidCertificate(format!("parts do not cover exactly N({v})")));
    }
    // Each part is a clique, so min(|part|, ω) = |part|.
    let bound = rat(union.len() as i64 + 1, 1);
    Ok(HitterReport::checked(g.closed_neighborhood(v), Method::Simplicial, Some(bound), fam))
}

/// Maximum matching by augmenting paths from the vertices marked `left`.
/// A free neighbour is taken before any path is searched.
fn bipartite_matching(g: &Graph, left: &[bool]) -> Vec<Option<usize>> {
    fn augment(g: &Graph, u: usize, seen: &mut VertexSet, mate: &mut Vec<Option<usize>>) -> bool {
        if let Some(v) = g.neighbors(u).iter().find(|&v| mate[v].is_none()) {
            mate[v] = Some(u);
            mate[u] = Some(v);
            return true;
        }
        for v in g.neighbors(u).iter() {
            if seen.insert(v) {
                let free = match mate[v] {
                    None => true,
                    Some(w) => augment(g, w, seen, mate),
                };
                if free {
                    mate[v] = Some(u);
                    mate[u] = Some(v);
                    return true;
                }
            }
        }
        false
    }
    let mut mate = vec![None; g.n()];
    for u in (0..g.n()).filter(|&u| left[u]) {
        let mut seen = VertexSet::new(g.n());
        augment(g, u, &mut seen, &mut mate);
    }
    mate
}

pub fn bipartite_hitter(g: &Graph, fam: &MisFamily) -> Result<HitterReport> {
    let colors = g.two_coloring().ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = g.n();
    if 2 * fam.alpha() > n {
        let common = fam.intersection();
        let v = common.first().ok_or_else(|| {
            Error::TheoremViolation("alpha > n/2 but the maximum independent sets share no vertex".into())
        })?;
        return Ok(HitterReport::checked(VertexSet::from_vertices(n, [v]), Method::Bipartite, Some(rat(1, 1)), fam));
    }
    // The lowest vertex of every component has colour `false`.
    let left: Vec<bool> = colors.iter().map(|c| !c).collect();
    let mate = bipartite_matching(g, &left);
    let edge = (0..n)
        .find_map(|u| mate[u].map(|v| (u, v)))
        .ok_or_else(|| Error::TheoremViolation("alpha <= n/2 in a bipartite graph without a matching edge".into()))?;
    if mate.iter().any(Option::is_none) {
        return Err(Error::TheoremViolation("alpha <= n/2 but the matching is not perfect".into()));
    }
    let set = VertexSet::from_vertices(n, [edge.0, edge.1]);
    Ok(HitterReport::checked(set, Method::Bipartite, Some(rat(2, 1)), fam))
}

/// Hitting set of one connected component, in component indices.
fn vc1_component(g: &Graph, fam: &MisFamily) -> Result<VertexSet> {
    let n = g.n();
    if g.has_triangle() {
        let sets = fam.sets();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if sets[i].intersects(&sets[j]) {
                    return Err(Error::TheoremViolation(format!(
                        "maximum independent sets {:?} and {:?} intersect in a graph with a triangle",
                        sets[i].to_vec(),
                        sets[j].to_vec()
                    )));
                }
            }
        }
        return Ok(VertexSet::from_vertices(n, sets.iter().map(|s| s.first().expect("non-empty"))));
    }
    match sumner_structure(g) {
        SumnerStructure::Bipartite(_) => Ok(bipartite_hitter(g, fam)?.set),
        SumnerStructure::C5Blowup(parts) => {
            let low = |i: usize| parts[i % 5].first().expect("non-empty part");
            let light = (0..5).find(|&i| 5 * parts[i].union(&parts[(i + 2) % 5]).len() < 2 * n);
            let picks: Vec<usize> = match light {
                // F_i ∪ F_{i+2} is not maximum; the other four pairs all meet
                // F_{i+3} or F_{i+4}.
                Some(i) => vec![low(i + 3), low(i + 4)],
                None => vec![low(0), low(1), low(2)],
            };
            Ok(VertexSet::from_vertices(n, picks))
        }
        SumnerStructure::Neither(reason) => Err(Error::TheoremViolation(format!(
            "triangle-free component of VC-dimension one is neither bipartite nor a C5 blowup: {reason}"
        ))),
    }
}

/// Hitting set for graphs whose neighbourhood system has VC-dimension at
/// most one, built on the component that needs the fewest vertices.
///
/// `C5` blowup components are accepted as well. Their VC-dimension is two
/// (`{x_i, x_{i+2}}` is shattered), but they are the non-bipartite case of
/// the triangle-free branch.
pub fn vc1_hitter(g: &Graph, fam: &MisFamily) -> Result<HitterReport> {
    if !vc1_admissible(g)? {
        return Err(Error::Precondition("VC-dimension exceeds one".into()));
    }
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut best: Option<VertexSet> = None;
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp);
        let local = vc1_component(&sub, &fam.project(&map))?;
        let global = VertexSet::from_vertices(g.n(), local.iter().map(|i| map[i]));
        if best.as_ref().is_none_or(|b| global.len() < b.len()) {
            best = Some(global);
        }
    }
    let set = best.ok_or(Error::EmptyGraph)?;
    let n = g.n();
    let alpha = fam.alpha();
    let bound = rat(n.div_ceil(alpha).max(3) as i64, 1);
    Ok(HitterReport::checked(set, Method::Vc1, Some(bound), fam))
}

/// The input class of [`vc1_hitter`]: every component has VC-dimension at
/// most one or is a `C5` blowup.
pub fn vc1_admissible(g: &Graph) -> Result<bool> {
    for comp in g.connected_components() {
        let (h, _) = g.induced_subgraph(&comp);
        if vc_dimension(&h, 1)?.saturated && !matches!(sumner_structure(&h), SumnerStructure::C5Blowup(_)) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const SEPARATOR_MAX_N: usize = 20;

fn largest_component_without(g: &Graph, s: &VertexSet) -> usize {
    let (sub, _) = g.induced_subgraph(&s.complement());
    sub.connected_components().iter().map(VertexSet::len).max().unwrap_or(0)
}

/// Smallest `S` leaving components of at most `⌊2n/3⌋` vertices. Among
/// those, the one whose largest remaining component is smallest, then the
/// lexicographically least.
pub fn balanced_separator(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    if n > SEPARATOR_MAX_N {
        return Err(Error::SizeLimit { what: "balanced separator", size: n, limit: SEPARATOR_MAX_N });
    }
    let limit = 2 * n / 3;
    for k in 0..=n {
        let mut best: Option<(usize, VertexSet)> = None;
        let mut chosen = Vec::with_capacity(k);
        subsets(n, k, 0, &mut chosen, &mut |sel| {
            let s = VertexSet::from_vertices(n, sel.iter().copied());
            let largest = largest_component_without(g, &s);
            if largest <= limit && best.as_ref().is_none_or(|(b, _)| largest < *b) {
                best = Some((largest, s));
            }
        });
        if let Some((_, s)) = best {
            return Ok(s);
        }
    }
    unreachable!("removing every vertex leaves no component")
}

/// Calls `f` on every `k`-subset of `from..n` extending `chosen`, in
/// lexicographic order.
fn subsets(n: usize, k: usize, from: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for x in from..n {
        if n - x < k - chosen.len() {
            break;
        }
        chosen.push(x);
        subsets(n, k, x + 1, chosen, f);
        chosen.pop();
    }
}

/// One level of the separator recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorLevel {
    pub n: usize,
    pub separator: Vec<usize>,
    /// Size of the component descended into; zero at the base case.
    pub next: usize,
}

/// Separator at each level plus the whole of the final piece, descending
/// into the smallest component each time.
pub fn separator_hitter(g: &Graph, fam: &MisFamily) -> Result<(HitterReport, Vec<SeparatorLevel>)> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = g.n();
    let mut levels = Vec::new();
    let mut set = VertexSet::new(n);
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        let piece = VertexSet::from_vertices(n, current.iter().copied());
        let (sub, map) = g.induced_subgraph(&piece);
        if sub.n() <= 2 {
            set.union_with(&piece);
            levels.push(SeparatorLevel { n: sub.n(), separator: piece.to_vec(), next: 0 });
            break;
        }
        let s = balanced_separator(&sub)?;
        let global_s: Vec<usize> = s.iter().map(|i| map[i]).collect();
        set.union_with(&VertexSet::from_vertices(n, global_s.iter().copied()));
        let (rest, rest_map) = sub.induced_subgraph(&s.complement());
        let smallest = rest.connected_components().into_iter().min_by_key(VertexSet::len);
        let Some(comp) = smallest else {
            levels.push(SeparatorLevel { n: sub.n(), separator: global_s, next: 0 });
            break;
        };
        levels.push(SeparatorLevel { n: sub.n(), separator: global_s, next: comp.len() });
        current = comp.iter().map(|i| map[rest_map[i]]).collect();
    }
    let bound = rat(levels.iter().map(|l| l.separator.len()).sum::<usize>() as i64, 1);
    Ok((HitterReport::checked(set, Method::Separator, Some(bound), fam), levels))
}

/// Vertices outside the lexicographically least maximum independent set `I`
/// with at least four neighbours in `I`; none of them lies in any maximum
/// independent set.
pub fn circular_arc_prune(arcs: &ArcSet, fam: &MisFamily) -> Result<VertexSet> {
    let g = arcs.graph();
    let first = fam.sets().first().ok_or(Error::EmptyFamily)?;
    let pruned = VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&v| !first.contains(v) && g.neighbors(v).intersection_len(first) >= 4),
    );
    if !pruned.is_subset(fam.residual()) {
        return Err(Error::TheoremViolation(format!(
            "pruned vertices {:?} include members of maximum independent sets",
            pruned.difference(fam.residual()).to_vec()
        )));
    }
    Ok(pruned)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{blowup, complete_multipartite, random_chordal};
    use crate::geometry::Arc;
    use crate::hitting::min_hitting_set;
    use crate::mis::{clique_number, enumerate_mis, Limits};
    use crate::recognition::simplicial_vertex;

    fn fam(g: &Graph) -> MisFamily {
        enumerate_mis(g).unwrap()
    }

    #[test]
    fn sparse_framework_small_cases() {
        let e8 = Graph::empty(8);
        let (r, trace) = locally_sparse_hitter(&e8, &fam(&e8), 1, None, &rat(98, 100)).unwrap();
        assert_eq!((r.method, r.size(), r.verified), (Method::MinDegree, 1, true));
        assert_eq!(trace.branch, SparseBranch::LowDegree);

        let p4 = Graph::path(4);
        let f = fam(&p4);
        let (r, _) = locally_sparse_hitter(&p4, &f, 1, None, &rat(98, 100)).unwrap();
        assert!(r.verified);
        assert!(r.size() <= 2);
        assert_eq!(min_hitting_set(&f).unwrap().size(), 2);

        assert!(locally_sparse_hitter(&Graph::empty(1), &fam(&Graph::empty(1)), 1, None, &rat(1, 1)).is_err());
        assert!(locally_sparse_hitter(&p4, &f, 0, None, &rat(1, 1)).is_err());
    }

    #[test]
    fn sparse_framework_on_chordal_graphs() {
        for seed in 0..50 {
            let g = random_chordal(16, &rat(1, 2), seed).unwrap();
            let f = fam(&g);
            for b_ratio in [rat(98, 100), rat(99, 100)] {
                let (r, trace) = locally_sparse_hitter(&g, &f, 1, None, &b_ratio).unwrap();
                assert!(r.verified, "seed {seed}: {trace:?}");
                let w: usize = trace.new_counts.iter().sum();
                assert_eq!(w, trace.w.len());
            }
        }
    }

    #[test]
    fn trace_serialises() {
        let g = Graph::path(6);
        let (_, trace) = locally_sparse_hitter(&g, &fam(&g), 1, None, &rat(98, 100)).unwrap();
        let json = serde_json::to_value(&trace).unwrap();
        assert_eq!(json["a"], "5");
        assert_eq!(json["b"], "49/10");
        assert!(json["branch"].is_string());
    }

    #[test]
    fn simplicial_construction() {
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        let r = simplicial_hitter(&g, &fam(&g), 0, &[]).unwrap();
        assert_eq!(r.set.to_vec(), vec![0]);
        assert!(r.verified);

        for seed in 0..20 {
            let g = random_chordal(12, &rat(1, 2), seed).unwrap();
            let v = simplicial_vertex(&g).unwrap();
            let r = simplicial_hitter(&g, &fam(&g), v, &[g.neighbors(v).clone()]).unwrap();
            let omega = clique_number(&g, &Limits::default()).unwrap();
            assert!(r.verified && r.size() <= omega + 1);
        }

        let p3 = Graph::path(3);
        let split = [VertexSet::from_vertices(3, [0]), VertexSet::from_vertices(3, [0, 2])];
        assert!(matches!(simplicial_hitter(&p3, &fam(&p3), 1, &split), Err(Error::InvalidCertificate(_))));
        let not_clique = [VertexSet::from_vertices(3, [0, 2])];
        assert!(matches!(simplicial_hitter(&p3, &fam(&p3), 1, &not_clique), Err(Error::InvalidCertificate(_))));
        let missing = [VertexSet::from_vertices(3, [0])];
        assert!(matches!(simplicial_hitter(&p3, &fam(&p3), 1, &missing), Err(Error::InvalidCertificate(_))));
    }

    #[test]
    fn bipartite_construction() {
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        let r = bipartite_hitter(&k23, &fam(&k23)).unwrap();
        assert_eq!((r.set.to_vec(), r.verified), (vec![2], true));
        let c4 = Graph::cycle(4);
        let r = bipartite_hitter(&c4, &fam(&c4)).unwrap();
        assert_eq!((r.set.to_vec(), r.verified), (vec![0, 1], true));
        let k2 = Graph::complete(2);
        assert_eq!(bipartite_hitter(&k2, &fam(&k2)).unwrap().set.to_vec(), vec![0, 1]);
        let c5 = Graph::cycle(5);
        assert!(matches!(bipartite_hitter(&c5, &fam(&c5)), Err(Error::Precondition(_))));
    }

    #[test]
    fn vc1_construction() {
        let c5 = Graph::cycle(5);
        let r = vc1_hitter(&c5, &fam(&c5)).unwrap();
        assert_eq!((r.size(), r.verified), (3, true));
        let k444 = complete_multipartite(&[4, 4, 4]).unwrap();
        let r = vc1_hitter(&k444, &fam(&k444)).unwrap();
        assert_eq!((r.size(), r.verified), (3, true));
        let lopsided = blowup(&Graph::cycle(5), &[2, 1, 1, 1, 1]).unwrap();
        let r = vc1_hitter(&lopsided, &fam(&lopsided)).unwrap();
        assert!(r.verified && r.size() <= 2);
        let two_parts = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)]).unwrap();
        let r = vc1_hitter(&two_parts, &fam(&two_parts)).unwrap();
        assert_eq!((r.size(), r.verified), (2, true));
        let p5 = Graph::path(5);
        assert!(matches!(vc1_hitter(&p5, &fam(&p5)), Err(Error::Precondition(_))));
        assert_eq!(vc_dimension(&c5, 3).unwrap().dim, 2);
        assert!(vc1_admissible(&two_parts).unwrap());
    }

    #[test]
    fn separators() {
        assert_eq!(balanced_separator(&Graph::path(5)).unwrap().to_vec(), vec![2]);
        assert_eq!(balanced_separator(&Graph::complete(4)).unwrap().len(), 2);
        assert!(balanced_separator(&Graph::empty(6)).unwrap().is_empty());
        assert!(balanced_separator(&Graph::empty(21)).is_err());

        let star = complete_multipartite(&[1, 4]).unwrap();
        let (r, levels) = separator_hitter(&star, &fam(&star)).unwrap();
        assert_eq!(r.set.to_vec(), vec![0, 1]);
        assert!(r.verified);
        assert_eq!(levels[0].separator, vec![0]);

        let p5 = Graph::path(5);
        let (r, levels) = separator_hitter(&p5, &fam(&p5)).unwrap();
        assert!(r.verified);
        assert_eq!(levels[0].separator, vec![2]);
        assert_eq!(r.set.to_vec(), vec![0, 1, 2]);

        let k2 = Graph::complete(2);
        assert_eq!(separator_hitter(&k2, &fam(&k2)).unwrap().0.set.to_vec(), vec![0, 1]);
    }

    #[test]
    fn arc_pruning() {
        let q = |p| rat(p, 100);
        let mut arcs: Vec<Arc> = (0..4).map(|i| Arc::new(q(10 * i), q(5))).collect();
        arcs.push(Arc::new(q(3), q(29)));
        let a = ArcSet::new(arcs).unwrap();
        let f = fam(&a.graph());
        assert_eq!(circular_arc_prune(&a, &f).unwrap().to_vec(), vec![4]);

        let overlapping = ArcSet::new((0..5).map(|i| Arc::new(q(i), q(50))).collect()).unwrap();
        let f = fam(&overlapping.graph());
        assert_eq!(f.alpha(), 1);
        assert!(circular_arc_prune(&overlapping, &f).unwrap().is_empty());
    }
}
