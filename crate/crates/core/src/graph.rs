//! Simple undirected graphs on dense vertex indices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Simple undirected graph on `0..n` with one adjacency bit row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![VertexSet::new(n); n], labels: None }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n);
            g.adj[v].remove(v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle needs n >= 3")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    /// Builds from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        for (u, row) in adj.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::Precondition(format!(
                    "adjacency row {u} has width {}, expected {n}",
                    row.universe()
                )));
            }
            if row.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return Err(Error::Precondition(format!("adjacency is not symmetric at ({u}, {v})")));
            }
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Union of the open neighbourhoods of `set`.
    pub fn neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertex of minimum degree, lowest index on ties.
    pub fn min_degree_vertex(&self) -> Result<(usize, usize)> {
        (0..self.n()).map(|v| (v, self.degree(v))).min_by_key(|&(v, d)| (d, v)).ok_or(Error::EmptyGraph)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.min_degree_vertex().ok().map(|(_, d)| d)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { adj, labels: self.labels.clone() }
    }

    /// The subgraph induced on `set`, plus the map from new to old indices.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let k = map.len();
        let mut adj = vec![VertexSet::new(k); k];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let labels = self.labels.as_ref().map(|l| map.iter().map(|&v| l[v].clone()).collect());
        (Graph { adj, labels }, map)
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.adj[v].intersection_len(set)).sum::<usize>() / 2
    }

    /// Number of edges between two disjoint sets.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.adj[v].intersection_len(b)).sum()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    /// Components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut parts = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            let mut part = VertexSet::new(n);
            let mut frontier = VertexSet::from_vertices(n, [root]);
            while !frontier.is_empty() {
                part.union_with(&frontier);
                let mut next = self.neighborhood_of(&frontier);
                next.difference_with(&part);
                frontier = next;
            }
            seen.union_with(&part);
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Forest check by traversal: a back edge to anything other than the
    /// DFS parent closes a cycle.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if v == parent[u] {
                        continue;
                    }
                    if seen[v] {
                        return false;
                    }
                    seen[v] = true;
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        true
    }

    /// Proper 2-colouring (`false`/`true` sides), or `None` for non-bipartite
    /// graphs. Each component's smallest vertex gets `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for v in self.adj[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.adj[u].intersects(&self.adj[v]))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n(), edges: self.edges().map(|(u, v)| [u, v]).collect() }
    }

    /// DIMACS-style edge list: `p <n> <m>` then 1-indexed `e u v` lines.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p {} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Parses the DIMACS-like edge list. Accepts `p <n> <m>` and the
    /// classic `p edge <n> <m>` header; `c` lines are comments.
    pub fn from_dimacs(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: {line:?}", lineno + 1));
            match fields.first().copied() {
                None | Some("c") => {}
                Some("p") => {
                    let nums: Vec<&str> = fields[1..].iter().copied().filter(|f| f.parse::<usize>().is_ok()).collect();
                    if nums.len() != 2 || n.is_some() {
                        return Err(bad());
                    }
                    n = Some(nums[0].parse::<usize>().map_err(|_| bad())?);
                }
                Some("e") => {
                    if fields.len() != 3 {
                        return Err(bad());
                    }
                    let u: usize = fields[1].parse().map_err(|_| bad())?;
                    let v: usize = fields[2].parse().map_err(|_| bad())?;
                    if u == 0 || v == 0 {
                        return Err(bad());
                    }
                    edges.push((u - 1, v - 1));
                }
                Some(_) => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `p` header".into()))?;
        Graph::new(n, &edges)
    }
}

/// `{"n": int, "edges": [[u, v], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(g: GraphJson) -> Result<Graph> {
        let edges: Vec<_> = g.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(g.n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn build_c4_and_c5() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.edge_count(), 5);
        let e = Graph::new(3, &[]).unwrap();
        assert_eq!(e.min_degree(), Some(0));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5);
        let (p3, map) = c5.induced_subgraph(&set(5, &[0, 1, 2]));
        assert_eq!((p3.n(), p3.edge_count()), (3, 2));
        assert_eq!(map, vec![0, 1, 2]);
        let (e, _) = c5.induced_subgraph(&VertexSet::new(5));
        assert_eq!(e.n(), 0);
        let (pair, _) = Graph::cycle(4).induced_subgraph(&set(4, &[0, 2]));
        assert_eq!((pair.n(), pair.edge_count()), (2, 0));
    }

    #[test]
    fn components() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let parts = g.connected_components();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.len() == 3));
        assert_eq!(Graph::cycle(5).connected_components().len(), 1);
        let singles = Graph::empty(4).connected_components();
        assert_eq!(singles.len(), 4);
        assert!(singles.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn acyclicity() {
        assert!(Graph::path(4).is_acyclic());
        assert!(!Graph::cycle(4).is_acyclic());
        assert!(Graph::empty(0).is_acyclic());
    }

    #[test]
    fn min_degree_vertex_tie_breaks_low() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.min_degree_vertex().unwrap(), (1, 1));
        assert_eq!(Graph::cycle(5).min_degree_vertex().unwrap(), (0, 2));
        let mut k4 = Graph::complete(4).to_json();
        k4.edges.retain(|e| *e != [1, 3]);
        let k4e = Graph::try_from(k4).unwrap();
        assert_eq!(k4e.min_degree_vertex().unwrap(), (1, 2));
        assert!(matches!(Graph::empty(0).min_degree_vertex(), Err(Error::EmptyGraph)));
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let g = Graph::from_dimacs(text).unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(Graph::from_dimacs(&g.to_dimacs()).unwrap(), g);
        assert!(Graph::from_dimacs("e 1 2\n").is_err());
        assert!(Graph::from_dimacs("p 2 1\ne 0 1\n").is_err());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&Graph::path(3).to_json()).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=16).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn complement_is_an_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn full_induced_subgraph_is_identity(g in arb_graph()) {
            let (h, map) = g.induced_subgraph(&g.vertices());
            prop_assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
            prop_assert_eq!(h, g);
        }

        #[test]
        fn acyclic_iff_forest_edge_count(g in arb_graph()) {
            let forest = g.edge_count() + g.connected_components().len() == g.n();
            prop_assert_eq!(g.is_acyclic(), forest);
        }

        #[test]
        fn adjacency_stays_symmetric(g in arb_graph()) {
            for u in 0..g.n() {
                prop_assert!(!g.has_edge(u, u));
                for v in g.neighbors(u) {
                    prop_assert!(g.has_edge(v, u));
                }
            }
        }
    }
}
