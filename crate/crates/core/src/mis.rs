//! Exact independence number and complete enumeration of maximum independent
//! sets. Everything else in the crate is checked against this module.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{mask_bits, VertexSet};

/// Size caps for the exponential engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph accepted by the independence-number search.
    pub alpha_max_n: usize,
    /// Largest graph accepted by full enumeration.
    pub enumerate_max_n: usize,
    /// Maximum number of maximum independent sets enumerated.
    pub max_sets: usize,
    /// Largest family accepted by the exact hitting-set solver.
    pub hitting_max_sets: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { alpha_max_n: 40, enumerate_max_n: 25, max_sets: 1_000_000, hitting_max_sets: 100_000 }
    }
}

/// The independence number together with every maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisFamily {
    n: usize,
    alpha: usize,
    sets: Vec<VertexSet>,
    residual: VertexSet,
}

impl MisFamily {
    /// Assembles a family over `0..n`. Sets are sorted and deduplicated; all
    /// must have the same size.
    pub fn new(n: usize, mut sets: Vec<VertexSet>) -> Result<MisFamily> {
        sets.sort();
        sets.dedup();
        let alpha = sets.first().map_or(0, VertexSet::len);
        if let Some(bad) = sets.iter().find(|s| s.len() != alpha || s.universe() != n) {
            return Err(Error::Precondition(format!("family member {:?} does not have size {alpha} over 0..{n}", bad)));
        }
        let mut union = VertexSet::new(n);
        for s in &sets {
            union.union_with(s);
        }
        Ok(MisFamily { n, alpha, residual: union.complement(), sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Vertices lying in no maximum independent set.
    pub fn residual(&self) -> &VertexSet {
        &self.residual
    }

    pub fn union(&self) -> VertexSet {
        self.residual.complement()
    }

    pub fn intersection(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        for s in &self.sets {
            out.intersect_with(s);
        }
        out
    }

    /// The family seen from an induced subgraph: every set is intersected
    /// with `map` and re-indexed to `0..map.len()`.
    ///
    /// When `map` is a union of connected components this is exactly the
    /// family of the induced subgraph.
    pub fn project(&self, map: &[usize]) -> MisFamily {
        let sets = self
            .sets
            .iter()
            .map(|s| {
                VertexSet::from_vertices(
                    map.len(),
                    map.iter().enumerate().filter(|(_, &v)| s.contains(v)).map(|(i, _)| i),
                )
            })
            .collect();
        MisFamily::new(map.len(), sets).expect("component restrictions share one size")
    }

    pub fn to_json(&self) -> MisFamilyJson {
        MisFamilyJson {
            alpha: self.alpha,
            sets: self.sets.iter().map(VertexSet::to_vec).collect(),
            residual: self.residual.to_vec(),
        }
    }
}

/// `{"alpha": int, "sets": [[v, ...], ...], "residual": [v, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisFamilyJson {
    pub alpha: usize,
    pub sets: Vec<Vec<usize>>,
    pub residual: Vec<usize>,
}

impl TryFrom<MisFamilyJson> for MisFamily {
    type Error = Error;

    fn try_from(j: MisFamilyJson) -> Result<MisFamily> {
        // The sets and the residual partition the vertex set.
        let covered = j.sets.iter().flatten().chain(&j.residual);
        let n = covered.max().map_or(0, |&v| v + 1);
        let sets = j.sets.iter().map(|s| VertexSet::from_vertices(n, s.iter().copied())).collect();
        let fam = MisFamily::new(n, sets)?;
        if fam.alpha != j.alpha || fam.residual.to_vec() != j.residual {
            return Err(Error::Parse("alpha or residual inconsistent with sets".into()));
        }
        Ok(fam)
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).mask().expect("engine graphs fit in 64 bits")).collect()
}

fn complement_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    masks(g).into_iter().enumerate().map(|(v, row)| all & !row & !(1 << v)).collect()
}

fn check_cap(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit.min(64) {
        return Err(Error::SizeLimit { what, size, limit: limit.min(64) });
    }
    Ok(())
}

/// Branch and bound maximum clique; the bound is a greedy colouring of the
/// candidate set, i.e. a greedy clique cover of the original graph when run
/// on its complement.
struct CliqueSearch<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: u32,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: u64, size: u32, mut cand: u64) {
        let order = self.color_order(cand);
        for &(v, color) in order.iter().rev() {
            if size + color <= self.best_size {
                return;
            }
            let next = current | (1 << v);
            let next_cand = cand & self.adj[v];
            if next_cand == 0 {
                if size + 1 > self.best_size {
                    self.best_size = size + 1;
                    self.best = next;
                }
            } else {
                self.expand(next, size + 1, next_cand);
            }
            cand &= !(1 << v);
        }
    }

    fn color_order(&self, cand: u64) -> Vec<(usize, u32)> {
        let mut order = Vec::with_capacity(cand.count_ones() as usize);
        let mut uncolored = cand;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut q = uncolored;
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !(1 << v) & !self.adj[v];
                uncolored &= !(1 << v);
                order.push((v, color));
            }
        }
        order
    }
}

fn max_clique_masks(adj: &[u64]) -> u64 {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut search = CliqueSearch { adj, best: 0, best_size: 0 };
    search.expand(0, 0, all);
    search.best
}

/// A maximum independent set (not necessarily lexicographically least).
pub fn maximum_independent_set(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    check_cap("independence number", g.n(), limits.alpha_max_n)?;
    Ok(VertexSet::from_mask(g.n(), max_clique_masks(&complement_masks(g))))
}

/// Exact independence number.
pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with(g, &Limits::default())
}

pub fn independence_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(maximum_independent_set(g, limits)?.len())
}

/// Exact clique number.
pub fn clique_number(g: &Graph, limits: &Limits) -> Result<usize> {
    check_cap("clique number", g.n(), limits.alpha_max_n)?;
    Ok(max_clique_masks(&masks(g)).count_ones() as usize)
}

/// Every maximum independent set of `g`.
///
/// Maximal cliques of the complement are enumerated by Bron–Kerbosch with
/// pivoting; branches that cannot reach size alpha are cut.
pub fn enumerate_mis(g: &Graph) -> Result<MisFamily> {
    enumerate_mis_with(g, &Limits::default())
}

pub fn enumerate_mis_with(g: &Graph, limits: &Limits) -> Result<MisFamily> {
    let n = g.n();
    check_cap("MIS enumeration", n, limits.enumerate_max_n)?;
    let comp = complement_masks(g);
    let alpha = max_clique_masks(&comp).count_ones();
    let all = if n == 64 {
        !0
    } else if n == 0 {
        0
    } else {
        (1u64 << n) - 1
    };
    let mut found = Vec::new();
    let mut bk = BronKerbosch { adj: &comp, target: alpha, out: &mut found, cap: limits.max_sets };
    bk.run(0, all, 0)?;
    found.sort_unstable_by_key(|&m| lex_key(m));
    let sets = found.into_iter().map(|m| VertexSet::from_mask(n, m)).collect();
    MisFamily::new(n, sets)
}

fn lex_key(mask: u64) -> Vec<usize> {
    mask_bits(mask).collect()
}

struct BronKerbosch<'a> {
    adj: &'a [u64],
    target: u32,
    out: &'a mut Vec<u64>,
    cap: usize,
}

impl BronKerbosch<'_> {
    fn run(&mut self, r: u64, mut p: u64, mut x: u64) -> Result<()> {
        if p == 0 {
            if x == 0 && r.count_ones() == self.target {
                if self.out.len() == self.cap {
                    return Err(Error::Explosion { what: "maximum independent sets", limit: self.cap });
                }
                self.out.push(r);
            }
            return Ok(());
        }
        if r.count_ones() + p.count_ones() < self.target {
            return Ok(());
        }
        let pivot = mask_bits(p | x)
            .max_by_key(|&u| ((p & self.adj[u]).count_ones(), std::cmp::Reverse(u)))
            .expect("p is non-empty");
        for v in mask_bits(p & !self.adj[pivot]) {
            let bit = 1u64 << v;
            self.run(r | bit, p & self.adj[v], x & self.adj[v])?;
            p &= !bit;
            x |= bit;
        }
        Ok(())
    }
}

/// Outcome of the intersection-union inequality on a complete family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HajnalReport {
    pub intersection: usize,
    pub union: usize,
    /// `|∩ sets| + |∪ sets|`
    pub lhs: usize,
    /// `lhs >= 2 alpha`
    pub holds: bool,
    /// `alpha > n / 2`
    pub majority: bool,
    /// When `majority`, whether the common intersection is non-empty.
    pub majority_implies_common_vertex: bool,
}

pub fn hajnal_check(fam: &MisFamily) -> Result<HajnalReport> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let intersection = fam.intersection().len();
    let union = fam.union().len();
    let lhs = intersection + union;
    let majority = 2 * fam.alpha() > fam.n();
    Ok(HajnalReport {
        intersection,
        union,
        lhs,
        holds: lhs >= 2 * fam.alpha(),
        majority,
        majority_implies_common_vertex: !majority || intersection > 0,
    })
}

/// One unordered pair of maximum independent sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymDiffStat {
    pub first: usize,
    pub second: usize,
    /// `|I1 △ I2|`
    pub size: usize,
    /// `e(G[I1 △ I2])`
    pub edges: usize,
}

pub fn pairwise_symmetric_difference_stats(g: &Graph, fam: &MisFamily) -> Vec<SymDiffStat> {
    let sets = fam.sets();
    let mut out = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let d = sets[i].symmetric_difference(&sets[j]);
            out.push(SymDiffStat { first: i, second: j, size: d.len(), edges: g.edges_within(&d) });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, gnp, petersen, Rng};
    use crate::rational::rat;

    fn sets(fam: &MisFamily) -> Vec<Vec<usize>> {
        fam.sets().iter().map(VertexSet::to_vec).collect()
    }

    /// Exhaustive scan over all 2^n subsets.
    fn naive_family(g: &Graph) -> (usize, Vec<Vec<usize>>) {
        let n = g.n();
        let mut best = 0;
        let mut all = Vec::new();
        for mask in 0u64..(1 << n) {
            let s = VertexSet::from_mask(n, mask);
            if !g.is_independent(&s) {
                continue;
            }
            match s.len().cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = s.len();
                    all = vec![s.to_vec()];
                }
                std::cmp::Ordering::Equal => all.push(s.to_vec()),
                std::cmp::Ordering::Less => {}
            }
        }
        all.sort();
        (best, all)
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(7)).unwrap(), 7);
        // Frozen from the exhaustive scan over all 2^10 subsets.
        let p = petersen();
        assert_eq!(naive_family(&p).0, 4);
        assert_eq!(independence_number(&p).unwrap(), 4);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn size_cap_is_enforced() {
        let big = Graph::empty(41);
        assert!(matches!(independence_number(&big), Err(Error::SizeLimit { .. })));
        assert!(matches!(enumerate_mis(&Graph::empty(26)), Err(Error::SizeLimit { .. })));
        let tight = Limits { max_sets: 4, ..Limits::default() };
        assert!(matches!(enumerate_mis_with(&Graph::cycle(5), &tight), Err(Error::Explosion { .. })));
    }

    #[test]
    fn c5_family() {
        let fam = enumerate_mis(&Graph::cycle(5)).unwrap();
        assert_eq!(fam.alpha(), 2);
        assert_eq!(sets(&fam), vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert_eq!(sets(&fam), naive_family(&Graph::cycle(5)).1);
    }

    #[test]
    fn complete_bipartite_and_complete() {
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        let fam = enumerate_mis(&k33).unwrap();
        assert_eq!(fam.alpha(), 3);
        assert_eq!(sets(&fam), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let k5 = Graph::complete(5);
        let fam = enumerate_mis(&k5).unwrap();
        assert_eq!(fam.alpha(), 1);
        assert_eq!(fam.len(), 5);
        assert!(fam.residual().is_empty());
    }

    #[test]
    fn hajnal_examples() {
        let c5 = enumerate_mis(&Graph::cycle(5)).unwrap();
        let r = hajnal_check(&c5).unwrap();
        assert_eq!((r.intersection, r.union, r.lhs, r.holds), (0, 5, 5, true));

        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = hajnal_check(&enumerate_mis(&star).unwrap()).unwrap();
        assert!(r.majority);
        assert_eq!(r.intersection, 3);

        let k23 = complete_multipartite(&[2, 3]).unwrap();
        let fam = enumerate_mis(&k23).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(hajnal_check(&fam).unwrap().lhs, 2 * fam.alpha());

        let empty = MisFamily::new(3, vec![]).unwrap();
        assert!(matches!(hajnal_check(&empty), Err(Error::EmptyFamily)));
    }

    #[test]
    fn symmetric_difference_stats() {
        let c4 = Graph::cycle(4);
        let stats = pairwise_symmetric_difference_stats(&c4, &enumerate_mis(&c4).unwrap());
        assert_eq!(stats.len(), 1);
        assert_eq!((stats[0].size, stats[0].edges), (4, 4));

        let single = enumerate_mis(&complete_multipartite(&[2, 3]).unwrap()).unwrap();
        assert!(pairwise_symmetric_difference_stats(&complete_multipartite(&[2, 3]).unwrap(), &single).is_empty());

        // P4 by hand: {0,2},{0,3},{1,3}; the outer pair covers the whole path.
        let p4 = Graph::path(4);
        let fam = enumerate_mis(&p4).unwrap();
        assert_eq!(sets(&fam), vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        let stats = pairwise_symmetric_difference_stats(&p4, &fam);
        let got: Vec<_> = stats.iter().map(|s| (s.first, s.second, s.size, s.edges)).collect();
        assert_eq!(got, vec![(0, 1, 2, 1), (0, 2, 4, 3), (1, 2, 2, 1)]);
    }

    #[test]
    fn json_round_trip() {
        let fam = enumerate_mis(&Graph::path(4)).unwrap();
        let j = serde_json::to_string(&fam.to_json()).unwrap();
        assert_eq!(j, r#"{"alpha":2,"sets":[[0,2],[0,3],[1,3]],"residual":[]}"#);
        let back: MisFamilyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(MisFamily::try_from(back).unwrap(), fam);
    }

    #[test]
    fn matches_naive_scan_on_random_graphs() {
        let mut rng = Rng::new(11);
        for seed in 0..300u64 {
            let n = 1 + rng.below(14) as usize;
            let g = gnp(n, &rat(1 + rng.below(7) as i64, 8), seed).unwrap();
            let fam = enumerate_mis(&g).unwrap();
            let (alpha, all) = naive_family(&g);
            assert_eq!(fam.alpha(), alpha, "seed {seed}");
            assert_eq!(sets(&fam), all, "seed {seed}");
            assert!(hajnal_check(&fam).unwrap().holds);
            assert!(fam.sets().iter().all(|s| s.is_disjoint(fam.residual())));
        }
    }
}
