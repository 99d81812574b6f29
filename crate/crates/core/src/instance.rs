//! Input files: graphs, geometric arrangements and two-order structures.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::geometry::{ArcSet, DiskSet, IntervalSet};
use crate::graph::{Graph, GraphJson};
use crate::two_order::TwoOrderStructure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Disks(DiskSet),
    Intervals(IntervalSet),
    Arcs(ArcSet),
    TwoOrder(TwoOrderStructure),
}

impl Instance {
    /// Detects the format: JSON objects by their keys (`edges`, `disks`,
    /// `intervals`, `arcs`, `sub`/`prec`), anything else as DIMACS text.
    pub fn parse(text: &str) -> Result<Instance> {
        let trimmed = text.trim_start();
        if !trimmed.starts_with('{') {
            return Graph::from_dimacs(text).map(Instance::Graph);
        }
        let value: serde_json::Value = serde_json::from_str(text)?;
        let has = |k: &str| value.get(k).is_some();
        Ok(if has("disks") {
            Instance::Disks(serde_json::from_value(value)?)
        } else if has("intervals") {
            Instance::Intervals(serde_json::from_value(value)?)
        } else if has("arcs") {
            Instance::Arcs(serde_json::from_value(value)?)
        } else if has("sub") || has("prec") {
            Instance::TwoOrder(serde_json::from_value(value)?)
        } else if has("edges") {
            let g: GraphJson = serde_json::from_value(value)?;
            Instance::Graph(Graph::try_from(g)?)
        } else {
            return Err(Error::Parse(
                "unrecognised instance: expected edges, disks, intervals, arcs or sub/prec".into(),
            ));
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Graph(_) => "graph",
            Instance::Disks(_) => "disks",
            Instance::Intervals(_) => "intervals",
            Instance::Arcs(_) => "arcs",
            Instance::TwoOrder(_) => "two-order",
        }
    }

    /// The intersection graph. Intervals give their overlap (circle) graph
    /// unless `interval_model` is set.
    pub fn graph_with(&self, interval_model: bool) -> Graph {
        match self {
            Instance::Graph(g) => g.clone(),
            Instance::Disks(d) => d.graph(),
            Instance::Intervals(s) if interval_model => s.interval_graph(),
            Instance::Intervals(s) => s.overlap_graph(),
            Instance::Arcs(a) => a.graph(),
            Instance::TwoOrder(t) => t.graph().clone(),
        }
    }

    pub fn graph(&self) -> Graph {
        self.graph_with(false)
    }

    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        fn s<T: Serialize>(v: &T) -> String {
            serde_json::to_string(v).expect("serialisable")
        }
        match self {
            Instance::Graph(g) => s(&g.to_json()),
            Instance::Disks(d) => s(d),
            Instance::Intervals(i) => s(i),
            Instance::Arcs(a) => s(a),
            Instance::TwoOrder(t) => s(t),
        }
    }

    /// First eight bytes of the SHA-256 of [`Instance::to_json`], as hex.
    pub fn fingerprint(&self) -> String {
        fingerprint(self.to_json().as_bytes())
    }
}

pub fn fingerprint(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_formats() {
        let g = Instance::parse(r#"{"n":3,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.kind(), "graph");
        assert_eq!(g.graph().edge_count(), 1);
        let d = Instance::parse("p edge 3 1\ne 1 2\n").unwrap();
        assert_eq!(d, g);
        let disks = Instance::parse(r#"{"disks":[{"cx":"0","cy":0,"r":"1"},{"cx":"2","cy":"0","r":"1"}]}"#).unwrap();
        assert_eq!(disks.graph().edge_count(), 1);
        let iv = Instance::parse(r#"{"intervals":[["1","3"],["2","4"]]}"#).unwrap();
        assert_eq!(iv.graph().edge_count(), 1);
        let arcs = Instance::parse(r#"{"arcs":[["0","1/2"],["1/4","1/2"]]}"#).unwrap();
        assert_eq!(arcs.graph().edge_count(), 1);
        let two = Instance::parse(r#"{"n":2,"sub":[],"prec":[[0,1]]}"#).unwrap();
        assert_eq!(two.graph().edge_count(), 0);
        assert!(Instance::parse(r#"{"foo":1}"#).is_err());
    }

    #[test]
    fn fingerprint_is_stable() {
        let g = Instance::Graph(Graph::cycle(4));
        assert_eq!(g.to_json(), r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        assert_eq!(g.fingerprint().len(), 16);
        assert_eq!(g.fingerprint(), Instance::parse(&g.to_json()).unwrap().fingerprint());
        // SHA-256("abc") begins ba7816bf8f01cfea.
        assert_eq!(fingerprint(b"abc"), "ba7816bf8f01cfea");
    }
}
