use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::pentagonal::{sign_with_root, unit_direction, Ext};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{independence_number_with, Limits};
use crate::rational::{self, rat, Rational};
use crate::vertex_set::VertexSet;

/// A closed disk with exact rational center and radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disk {
    #[serde(with = "rational::text")]
    pub cx: Rational,
    #[serde(with = "rational::text")]
    pub cy: Rational,
    #[serde(with = "rational::text")]
    pub r: Rational,
}

impl Disk {
    pub fn new(cx: Rational, cy: Rational, r: Rational) -> Disk {
        Disk { cx, cy, r }
    }

    pub fn intersects(&self, other: &Disk) -> bool {
        let dx = &self.cx - &other.cx;
        let dy = &self.cy - &other.cy;
        let reach = &self.r + &other.r;
        &dx * &dx + &dy * &dy <= &reach * &reach
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiskSetJson", into = "DiskSetJson")]
pub struct DiskSet {
    disks: Vec<Disk>,
}

#[derive(Serialize, Deserialize)]
struct DiskSetJson {
    disks: Vec<Disk>,
}

impl TryFrom<DiskSetJson> for DiskSet {
    type Error = Error;

    fn try_from(j: DiskSetJson) -> Result<DiskSet> {
        DiskSet::new(j.disks)
    }
}

impl From<DiskSet> for DiskSetJson {
    fn from(d: DiskSet) -> Self {
        DiskSetJson { disks: d.disks }
    }
}

impl DiskSet {
    pub fn new(disks: Vec<Disk>) -> Result<DiskSet> {
        if let Some(i) = disks.iter().position(|d| !d.r.is_positive()) {
            return Err(Error::Precondition(format!("disk {i} has non-positive radius")));
        }
        Ok(DiskSet { disks })
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    /// Intersection graph; tangent disks are adjacent.
    pub fn graph(&self) -> Graph {
        let n = self.disks.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.disks[u].intersects(&self.disks[v]) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("indices in range")
    }

    /// Independence number among the neighbours of `v` whose radius is at
    /// least that of `v`. A disk never meets six pairwise disjoint disks that
    /// are at least as large as itself, so this is at most 5.
    pub fn larger_neighbor_independence(&self, g: &Graph, v: usize) -> Result<usize> {
        let rv = &self.disks[v].r;
        let larger = VertexSet::from_vertices(g.n(), g.neighbors(v).iter().filter(|&u| self.disks[u].r >= *rv));
        let (sub, _) = g.induced_subgraph(&larger);
        independence_number_with(&sub, &Limits::default())
    }

    /// Index of a disk of minimum radius, lowest index on ties.
    pub fn smallest(&self) -> Option<usize> {
        (0..self.disks.len()).min_by(|&a, &b| self.disks[a].r.cmp(&self.disks[b].r).then(a.cmp(&b)))
    }
}

pub fn disk_graph(d: &DiskSet) -> Graph {
    d.graph()
}

/// Number of piercing points: the origin plus ten on the circle of radius 3/2.
pub const PIERCING_POINTS: usize = 11;

/// Exact test whether piercing point `k` lies in the unit disk centred at the
/// rational point `(cx, cy)`. Point 0 is the origin; point `k >= 1` sits at
/// radius 3/2 and angle `36°·(k-1)`.
pub fn piercing_point_in_unit_disk(k: usize, cx: &Rational, cy: &Rational) -> bool {
    let q = cx * cx + cy * cy;
    if k == 0 {
        return q <= rat(1, 1);
    }
    // |c - p|² - 1 = q - 2 p·c + 9/4 - 1
    let (cos, sin) = unit_direction(k - 1);
    let dot = cos.scale(cx).add(&sin.scale(cy)).scale(&rat(3, 2));
    let value = dot.scale(&rat(-2, 1)).add_rational(&(q + rat(5, 4)));
    value.sign() != Ordering::Greater
}

/// Exact test whether piercing point `k` lies in the auxiliary unit disk
/// built for a disk of radius `r >= 1` centred at `(cx, cy)`, in coordinates
/// where the smallest disk is the unit disk at the origin.
///
/// The auxiliary disk is the unit disk inside the given one that touches its
/// boundary at the point nearest the origin along the line of centres. When
/// the given disk already contains the unit disk at the origin, that disk is
/// used instead.
pub fn piercing_point_in_tangent_disk(k: usize, cx: &Rational, cy: &Rational, r: &Rational) -> bool {
    let q = cx * cx + cy * cy;
    let slack = r - rat(1, 1);
    if q <= &slack * &slack {
        return k == 0;
    }
    // Center is (s - slack)·c/s with s = |c|. Multiplying |p - center|² - 1
    // by s gives s·(|p|² - 1 - 2P + q + k²) + 2k(q - P) with k = 1 - r and
    // P = p·c.
    let shift = -slack;
    let (p_norm2, dot): (Rational, Ext) = if k == 0 {
        let (cos, _) = unit_direction(0);
        (Rational::zero(), cos.scale(&Rational::zero()))
    } else {
        let (cos, sin) = unit_direction(k - 1);
        (rat(9, 4), cos.scale(cx).add(&sin.scale(cy)).scale(&rat(3, 2)))
    };
    let coeff = dot.scale(&rat(-2, 1)).add_rational(&(p_norm2 - rat(1, 1) + &q + &shift * &shift));
    let constant = dot.scale(&rat(-1, 1)).add_rational(&q).scale(&(rat(2, 1) * &shift));
    sign_with_root(&coeff, &q, &constant) != Ordering::Greater
}

/// A vertex whose neighbourhood is covered by at most eleven cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCertificate {
    pub vertex: usize,
    /// Non-empty cliques partitioning the neighbourhood, in piercing-point order.
    pub cliques: Vec<VertexSet>,
    /// The piercing point each clique was assigned to.
    pub points: Vec<usize>,
}

/// Finds an 11-simplicial vertex: the smallest disk, with its neighbours
/// grouped by the first piercing point their auxiliary disk contains.
pub fn find_11_simplicial(d: &DiskSet) -> Result<SimplicialCertificate> {
    let v0 = d.smallest().ok_or(Error::EmptyGraph)?;
    let g = d.graph();
    let base = &d.disks[v0];
    let n = d.len();
    let mut classes = vec![VertexSet::new(n); PIERCING_POINTS];
    for v in g.neighbors(v0) {
        let disk = &d.disks[v];
        let cx = (&disk.cx - &base.cx) / &base.r;
        let cy = (&disk.cy - &base.cy) / &base.r;
        let r = &disk.r / &base.r;
        let point = (0..PIERCING_POINTS)
            .find(|&k| piercing_point_in_tangent_disk(k, &cx, &cy, &r))
            .ok_or_else(|| Error::TheoremViolation(format!("no piercing point inside the auxiliary disk of {v}")))?;
        classes[point].insert(v);
    }
    let mut cliques = Vec::new();
    let mut points = Vec::new();
    for (k, class) in classes.into_iter().enumerate() {
        if class.is_empty() {
            continue;
        }
        if !g.is_clique(&class) {
            return Err(Error::TheoremViolation(format!("piercing class {k} = {class:?} is not a clique")));
        }
        cliques.push(class);
        points.push(k);
    }
    Ok(SimplicialCertificate { vertex: v0, cliques, points })
}
