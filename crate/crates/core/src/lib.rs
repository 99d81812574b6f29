//! Hitting sets for the maximum independent sets of a graph.
//!
//! The exact engines ([`mis`], [`hitting`]) enumerate every maximum
//! independent set and find a minimum set meeting all of them. The
//! constructive procedures ([`hitters`], [`two_order`]) build hitting sets
//! from graph structure, and every result is checked against the exact
//! family.
//!
//! ```
//! use hitting_sets::{enumerate_mis, min_hitting_set, Graph};
//!
//! let c5 = Graph::cycle(5);
//! let fam = enumerate_mis(&c5).unwrap();
//! assert_eq!((fam.alpha(), fam.len()), (2, 5));
//! assert_eq!(min_hitting_set(&fam).unwrap().size(), 3);
//! ```

pub mod claims;
pub mod commands;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod hitters;
pub mod hitting;
pub mod instance;
pub mod mis;
pub mod rational;
pub mod recognition;
pub mod two_order;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hitting::{greedy_hitting_set, min_hitting_set, verify_hitting, HitterReport, Method};
pub use instance::Instance;
pub use mis::{enumerate_mis, hajnal_check, independence_number, Limits, MisFamily};
pub use vertex_set::VertexSet;
