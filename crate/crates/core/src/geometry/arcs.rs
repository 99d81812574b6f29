use serde::{Deserialize, Serialize};

use super::intervals::check_distinct;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{rat, Rational, Text};

/// A closed arc of the unit-circumference circle, from `start` going
/// counter-clockwise for `length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub start: Rational,
    pub length: Rational,
}

fn frac(x: Rational) -> Rational {
    &x - x.floor()
}

impl Arc {
    pub fn new(start: Rational, length: Rational) -> Arc {
        Arc { start, length }
    }

    pub fn end(&self) -> Rational {
        frac(&self.start + &self.length)
    }

    pub fn contains_point(&self, x: &Rational) -> bool {
        frac(x - &self.start) <= self.length
    }

    pub fn meets(&self, other: &Arc) -> bool {
        self.contains_point(&other.start) || other.contains_point(&self.start)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArcSetJson", into = "ArcSetJson")]
pub struct ArcSet {
    arcs: Vec<Arc>,
}

#[derive(Serialize, Deserialize)]
struct ArcSetJson {
    arcs: Vec<(Text, Text)>,
}

impl TryFrom<ArcSetJson> for ArcSet {
    type Error = Error;

    fn try_from(j: ArcSetJson) -> Result<ArcSet> {
        ArcSet::new(j.arcs.into_iter().map(|(s, l)| Arc::new(s.0, l.0)).collect())
    }
}

impl From<ArcSet> for ArcSetJson {
    fn from(a: ArcSet) -> Self {
        ArcSetJson { arcs: a.arcs.into_iter().map(|a| (Text(a.start), Text(a.length))).collect() }
    }
}

impl ArcSet {
    pub fn new(arcs: Vec<Arc>) -> Result<ArcSet> {
        let zero = rat(0, 1);
        let one = rat(1, 1);
        let mut points = Vec::with_capacity(2 * arcs.len());
        for (i, a) in arcs.iter().enumerate() {
            if a.start < zero || a.start >= one {
                return Err(Error::Precondition(format!("arc {i} starts outside [0,1)")));
            }
            if a.length <= zero || a.length >= one {
                return Err(Error::Precondition(format!("arc {i} has length outside (0,1)")));
            }
            points.push((a.start.clone(), i));
            points.push((a.end(), i));
        }
        check_distinct(&mut points)?;
        Ok(ArcSet { arcs })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn graph(&self) -> Graph {
        let n = self.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.arcs[u].meets(&self.arcs[v]) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("indices in range")
    }
}

pub fn circular_arc_graph(a: &ArcSet) -> Graph {
    a.graph()
}
