//! Hitting sets of a maximum-independent-set family: verification, the exact
//! minimum, and the greedy baseline.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mis::{Limits, MisFamily};
use crate::rational::{self, Rational};
use crate::vertex_set::{mask_bits, VertexSet};

/// Which construction produced a hitting set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    Greedy,
    SparseFramework,
    Simplicial,
    Bipartite,
    Separator,
    Vc1,
    TwoOrder,
    CircleLayers,
    MinDegree,
    Fallback,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Greedy => "greedy",
            Method::SparseFramework => "sparse-framework",
            Method::Simplicial => "simplicial",
            Method::Bipartite => "bipartite",
            Method::Separator => "separator",
            Method::Vc1 => "vc1",
            Method::TwoOrder => "two-order",
            Method::CircleLayers => "circle-layers",
            Method::MinDegree => "min-degree",
            Method::Fallback => "fallback",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// A candidate hitting set and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HitterReport {
    pub set: VertexSet,
    pub method: Method,
    /// The size guarantee of the construction, when it has one.
    pub bound: Option<Rational>,
    /// `true` iff `set` meets every set of the family it was checked against.
    pub verified: bool,
}

impl HitterReport {
    pub fn checked(set: VertexSet, method: Method, bound: Option<Rational>, fam: &MisFamily) -> Self {
        let verified = verify_hitting(fam, &set);
        HitterReport { set, method, bound, verified }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn to_json(&self) -> HitterReportJson {
        HitterReportJson {
            method: self.method,
            size: self.size(),
            set: self.set.to_vec(),
            bound: self.bound.as_ref().map(rational::format),
            verified: self.verified,
        }
    }
}

/// `{"method": str, "size": int, "set": [v, ...], "bound": str|null, "verified": bool}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitterReportJson {
    pub method: Method,
    pub size: usize,
    pub set: Vec<usize>,
    pub bound: Option<String>,
    pub verified: bool,
}

/// Does `t` meet every maximum independent set?
pub fn verify_hitting(fam: &MisFamily, t: &VertexSet) -> bool {
    fam.sets().iter().all(|s| s.intersects(t))
}

fn family_masks(fam: &MisFamily, limits: &Limits) -> Result<Vec<u64>> {
    if fam.n() > 64 {
        return Err(Error::SizeLimit { what: "hitting set universe", size: fam.n(), limit: 64 });
    }
    if fam.len() > limits.hitting_max_sets {
        return Err(Error::Explosion { what: "hitting-set family", limit: limits.hitting_max_sets });
    }
    if fam.sets().iter().any(VertexSet::is_empty) {
        return Err(Error::Precondition("the empty set cannot be hit".into()));
    }
    Ok(fam.sets().iter().map(|s| s.mask().unwrap()).collect())
}

/// Size of a greedy packing of pairwise disjoint sets, smallest first.
fn packing_bound(sets: &[u64]) -> usize {
    let mut order: Vec<u64> = sets.to_vec();
    order.sort_unstable_by_key(|s| s.count_ones());
    let mut used = 0u64;
    let mut count = 0;
    for s in order {
        if s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

fn greedy_masks(sets: &[u64], n: usize) -> u64 {
    let mut unhit: Vec<u64> = sets.to_vec();
    let mut chosen = 0u64;
    while !unhit.is_empty() {
        let mut counts = vec![0usize; n];
        for &s in &unhit {
            for v in mask_bits(s) {
                counts[v] += 1;
            }
        }
        let v = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
        chosen |= 1 << v;
        unhit.retain(|&s| s & (1 << v) == 0);
    }
    chosen
}

/// Picks the vertex hitting the most unhit sets until all are hit.
pub fn greedy_hitting_set(fam: &MisFamily) -> Result<HitterReport> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let sets = family_masks(fam, &Limits { hitting_max_sets: usize::MAX, ..Limits::default() })?;
    let chosen = greedy_masks(&sets, fam.n());
    Ok(HitterReport::checked(VertexSet::from_mask(fam.n(), chosen), Method::Greedy, None, fam))
}

struct MinCover {
    best: usize,
}

impl MinCover {
    /// `sets` are the unhit sets with forbidden vertices already removed.
    fn search(&mut self, sets: &[u64], size: usize) {
        if sets.is_empty() {
            self.best = self.best.min(size);
            return;
        }
        if size + packing_bound(sets) >= self.best {
            return;
        }
        let branch = *sets.iter().min_by_key(|s| s.count_ones()).unwrap();
        let mut forbidden = 0u64;
        for v in mask_bits(branch) {
            let bit = 1u64 << v;
            let mut rest = Vec::with_capacity(sets.len());
            let mut dead = false;
            for &s in sets {
                if s & bit != 0 {
                    continue;
                }
                let r = s & !forbidden;
                if r == 0 {
                    dead = true;
                    break;
                }
                rest.push(r);
            }
            if !dead {
                self.search(&rest, size + 1);
            }
            forbidden |= bit;
        }
    }
}

/// First hitting set of exactly `budget` vertices in lexicographic order.
fn lex_least(sets: &[u64], n: usize, budget: usize, start: usize, chosen: u64) -> Option<u64> {
    if sets.is_empty() {
        return Some(chosen);
    }
    if budget == 0 {
        return None;
    }
    for v in start..n {
        let allowed = if v == 0 { !0 } else { !((1u64 << v) - 1) };
        if sets.iter().any(|&s| s & allowed == 0) {
            return None;
        }
        if budget == 1 {
            let common = sets.iter().fold(allowed, |acc, &s| acc & s);
            return (common != 0).then(|| chosen | 1 << common.trailing_zeros());
        }
        let restricted: Vec<u64> = sets.iter().map(|&s| s & allowed).collect();
        if packing_bound(&restricted) > budget {
            return None;
        }
        let rest: Vec<u64> = sets.iter().copied().filter(|&s| s & (1 << v) == 0).collect();
        if let Some(found) = lex_least(&rest, n, budget - 1, v + 1, chosen | 1 << v) {
            return Some(found);
        }
    }
    None
}

/// Minimum hitting set, lexicographically least among the optima.
pub fn min_hitting_set(fam: &MisFamily) -> Result<HitterReport> {
    min_hitting_set_with(fam, &Limits::default())
}

pub fn min_hitting_set_with(fam: &MisFamily, limits: &Limits) -> Result<HitterReport> {
    let sets = family_masks(fam, limits)?;
    let n = fam.n();
    let upper = greedy_masks(&sets, n).count_ones() as usize;
    let mut search = MinCover { best: upper };
    search.search(&sets, 0);
    let best = lex_least(&sets, n, search.best, 0, 0).expect("optimum size is attainable");
    Ok(HitterReport::checked(VertexSet::from_mask(n, best), Method::Exact, None, fam))
}
