use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{self, Rational, Text};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub l: Rational,
    pub r: Rational,
}

impl Interval {
    pub fn new(l: Rational, r: Rational) -> Interval {
        Interval { l, r }
    }

    /// `other` lies strictly inside `self`.
    pub fn contains(&self, other: &Interval) -> bool {
        self.l < other.l && other.r < self.r
    }

    pub fn meets(&self, other: &Interval) -> bool {
        self.l <= other.r && other.l <= self.r
    }

    /// Intersecting with neither containing the other.
    pub fn overlaps(&self, other: &Interval) -> bool {
        (self.l < other.l && other.l < self.r && self.r < other.r)
            || (other.l < self.l && self.l < other.r && other.r < self.r)
    }

    /// Entirely to the left of `other`.
    pub fn precedes(&self, other: &Interval) -> bool {
        self.r < other.l
    }
}

/// Intervals on a line with pairwise distinct endpoints. Read as chords of a
/// circle cut open at a point, they also describe circle graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntervalSetJson", into = "IntervalSetJson")]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

#[derive(Serialize, Deserialize)]
struct IntervalSetJson {
    intervals: Vec<(Text, Text)>,
}

impl TryFrom<IntervalSetJson> for IntervalSet {
    type Error = Error;

    fn try_from(j: IntervalSetJson) -> Result<IntervalSet> {
        IntervalSet::new(j.intervals.into_iter().map(|(l, r)| Interval::new(l.0, r.0)).collect())
    }
}

impl From<IntervalSet> for IntervalSetJson {
    fn from(s: IntervalSet) -> Self {
        IntervalSetJson { intervals: s.intervals.into_iter().map(|i| (Text(i.l), Text(i.r))).collect() }
    }
}

pub(crate) fn check_distinct(points: &mut [(Rational, usize)]) -> Result<()> {
    points.sort();
    for w in points.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::GeneralPosition(format!(
                "objects {} and {} share the endpoint {}",
                w[0].1,
                w[1].1,
                rational::format(&w[0].0)
            )));
        }
    }
    Ok(())
}

impl IntervalSet {
    pub fn new(intervals: Vec<Interval>) -> Result<IntervalSet> {
        let mut points = Vec::with_capacity(2 * intervals.len());
        for (i, iv) in intervals.iter().enumerate() {
            if iv.l >= iv.r {
                return Err(Error::Precondition(format!("interval {i} is empty or reversed")));
            }
            points.push((iv.l.clone(), i));
            points.push((iv.r.clone(), i));
        }
        check_distinct(&mut points)?;
        Ok(IntervalSet { intervals })
    }

    /// Convenience constructor from integer endpoint pairs.
    pub fn from_integers(pairs: &[(i64, i64)]) -> Result<IntervalSet> {
        IntervalSet::new(pairs.iter().map(|&(l, r)| Interval::new(rational::int(l), rational::int(r))).collect())
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    fn graph_by(&self, adjacent: impl Fn(&Interval, &Interval) -> bool) -> Graph {
        let n = self.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(&self.intervals[u], &self.intervals[v]) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("indices in range")
    }

    /// Circle graph: adjacency is proper overlap.
    pub fn overlap_graph(&self) -> Graph {
        self.graph_by(Interval::overlaps)
    }

    pub fn interval_graph(&self) -> Graph {
        self.graph_by(Interval::meets)
    }

    pub fn cover_relation(&self) -> CoverRelation {
        let n = self.len();
        let covers: Vec<VertexSet> = (0..n)
            .map(|a| VertexSet::from_vertices(n, (0..n).filter(|&b| self.intervals[a].contains(&self.intervals[b]))))
            .collect();
        let direct = (0..n)
            .map(|a| {
                let mut d = covers[a].clone();
                for c in covers[a].iter() {
                    d.difference_with(&covers[c]);
                }
                d
            })
            .collect();
        CoverRelation { covers, direct }
    }
}

/// `covers[a]` holds every `b` nested strictly inside `a`; `direct[a]` keeps
/// those with no interval nested strictly between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverRelation {
    pub covers: Vec<VertexSet>,
    pub direct: Vec<VertexSet>,
}

pub fn overlap_graph(s: &IntervalSet) -> Graph {
    s.overlap_graph()
}

pub fn interval_graph(s: &IntervalSet) -> Graph {
    s.interval_graph()
}

pub fn chord_cover_relation(s: &IntervalSet) -> CoverRelation {
    s.cover_relation()
}
