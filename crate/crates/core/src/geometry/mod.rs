//! Exact-coordinate arrangements and their intersection graphs.

pub mod arcs;
pub mod disks;
pub mod intervals;
pub mod pentagonal;

pub use arcs::{circular_arc_graph, Arc, ArcSet};
pub use disks::{
    disk_graph, find_11_simplicial, piercing_point_in_tangent_disk, piercing_point_in_unit_disk, Disk, DiskSet,
    SimplicialCertificate, PIERCING_POINTS,
};
pub use intervals::{chord_cover_relation, interval_graph, overlap_graph, CoverRelation, Interval, IntervalSet};
