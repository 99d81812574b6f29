//! Class recognizers and structural witnesses.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Maximum cardinality search order: each step visits the unvisited vertex
/// with the most visited neighbours, lowest index on ties.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v).iter() {
            weight[u] += 1;
        }
    }
    order
}

/// A perfect elimination ordering (each vertex's later neighbours form a
/// clique), or `None` when the graph is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    let mut later = VertexSet::full(g.n());
    for &v in &order {
        later.remove(v);
        if !g.is_clique(&g.neighbors(v).intersection(&later)) {
            return None;
        }
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// A vertex whose neighbourhood is a clique, if the graph is chordal.
pub fn simplicial_vertex(g: &Graph) -> Option<usize> {
    perfect_elimination_ordering(g).and_then(|o| o.first().copied())
}

pub const EVEN_HOLE_MAX_N: usize = 16;

/// Some even hole as a cyclic vertex sequence, searched exhaustively.
pub fn find_even_hole(g: &Graph) -> Result<Option<Vec<usize>>> {
    if g.n() > EVEN_HOLE_MAX_N {
        return Err(Error::SizeLimit { what: "even-hole search", size: g.n(), limit: EVEN_HOLE_MAX_N });
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if let Some(hole) = extend_hole(g, s, &mut path) {
            return Ok(Some(hole));
        }
    }
    Ok(None)
}

/// Extends an induced path starting at its minimum vertex `s`.
fn extend_hole(g: &Graph, s: usize, path: &mut Vec<usize>) -> Option<Vec<usize>> {
    let last = *path.last().expect("non-empty path");
    let mut interior = VertexSet::new(g.n());
    for &p in path.iter().take(path.len() - 1).skip(1) {
        interior.insert(p);
    }
    let blocked = g.neighborhood_of(&interior);
    for x in g.neighbors(last).iter() {
        if x <= s || path.contains(&x) || blocked.contains(x) {
            continue;
        }
        let closes = path.len() > 1 && g.has_edge(x, s);
        if closes {
            // path + x is a cycle of length path.len() + 1 once x meets s.
            if path.len() >= 3 && (path.len() + 1).is_multiple_of(2) {
                let mut hole = path.clone();
                hole.push(x);
                return Some(hole);
            }
            continue;
        }
        path.push(x);
        let found = extend_hole(g, s, path);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn is_even_hole_free(g: &Graph) -> Result<bool> {
    Ok(find_even_hole(g)?.is_none())
}

/// An induced path on five vertices, lexicographically first by DFS.
pub fn find_induced_p5(g: &Graph) -> Option<[usize; 5]> {
    fn grow(g: &Graph, path: &mut Vec<usize>) -> bool {
        if path.len() == 5 {
            return true;
        }
        let last = *path.last().expect("non-empty");
        let mut earlier = VertexSet::new(g.n());
        for &p in &path[..path.len() - 1] {
            earlier.insert(p);
        }
        let blocked = g.neighborhood_of(&earlier);
        for x in g.neighbors(last).iter() {
            if path.contains(&x) || blocked.contains(x) {
                continue;
            }
            path.push(x);
            if grow(g, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if grow(g, &mut path) {
            return Some([path[0], path[1], path[2], path[3], path[4]]);
        }
    }
    None
}

/// VC-dimension of the neighbourhood system, capped at `dmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VcDimension {
    pub dim: usize,
    /// The true dimension exceeds `dmax`.
    pub saturated: bool,
}

pub const VC_EXHAUSTIVE_MAX_N: usize = 20;
pub const VC_BOUNDED_MAX_D: usize = 4;

/// Largest `d <= dmax` such that some `d` vertices are shattered by the
/// neighbourhoods, together with a shattered witness.
pub fn vc_dimension_witness(g: &Graph, dmax: usize) -> Result<(VcDimension, Vec<usize>)> {
    if g.n() > VC_EXHAUSTIVE_MAX_N && dmax > VC_BOUNDED_MAX_D {
        return Err(Error::SizeLimit { what: "vc-dimension search", size: g.n(), limit: VC_EXHAUSTIVE_MAX_N });
    }
    let mut best = Vec::new();
    let mut d = 1;
    // 2^d distinct traces need at least 2^d vertices.
    while d <= dmax + 1 && (1usize << d) <= g.n() {
        let mut chosen = Vec::new();
        if !shattered_extension(g, d, 0, &mut chosen) {
            break;
        }
        if d == dmax + 1 {
            return Ok((VcDimension { dim: dmax, saturated: true }, best));
        }
        best = chosen;
        d += 1;
    }
    Ok((VcDimension { dim: best.len(), saturated: false }, best))
}

pub fn vc_dimension(g: &Graph, dmax: usize) -> Result<VcDimension> {
    vc_dimension_witness(g, dmax).map(|(v, _)| v)
}

fn is_shattered(g: &Graph, set: &[usize]) -> bool {
    let mut seen = 0u128;
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        let code = set.iter().enumerate().fold(0usize, |acc, (i, &x)| acc | (usize::from(nb.contains(x)) << i));
        seen |= 1 << code;
    }
    seen.count_ones() as usize == 1 << set.len()
}

/// Shattering is inherited by subsets, so partial choices are pruned early.
fn shattered_extension(g: &Graph, d: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == d {
        return true;
    }
    for x in from..g.n() {
        chosen.push(x);
        if is_shattered(g, chosen) && shattered_extension(g, d, x + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Shape of a connected, triangle-free graph without induced `P5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumnerStructure {
    /// Colour classes, the one holding the lowest vertex first.
    Bipartite([VertexSet; 2]),
    /// Parts `F1..F5` of a `C5` blowup, `F_i` complete to `F_{i±1}`.
    /// `F1` holds the lowest vertex and `F2` is its neighbouring part with the
    /// lower least element.
    C5Blowup([VertexSet; 5]),
    Neither(String),
}

pub fn sumner_structure(g: &Graph) -> SumnerStructure {
    if g.n() == 0 {
        return SumnerStructure::Neither("empty graph".into());
    }
    if !g.is_connected() {
        return SumnerStructure::Neither("not connected".into());
    }
    if g.has_triangle() {
        return SumnerStructure::Neither("contains a triangle".into());
    }
    if let Some(p) = find_induced_p5(g) {
        return SumnerStructure::Neither(format!("contains an induced P5 {p:?}"));
    }
    if let Some(colors) = g.two_coloring() {
        let first = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| colors[v] == colors[0]));
        let second = first.complement();
        return SumnerStructure::Bipartite([first, second]);
    }
    // Parts of a blowup are exactly the classes of vertices sharing a
    // neighbourhood.
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut rep: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        match rep.iter().position(|&r| g.neighbors(r) == g.neighbors(v)) {
            Some(i) => {
                classes[i].insert(v);
            }
            None => {
                rep.push(v);
                classes.push(VertexSet::from_vertices(g.n(), [v]));
            }
        }
    }
    if classes.len() != 5 {
        return SumnerStructure::Neither(format!("{} twin classes, not 5", classes.len()));
    }
    let adjacent = |a: usize, b: usize| g.has_edge(rep[a], rep[b]);
    let mut order = vec![0usize];
    let first_nbrs: Vec<usize> = (1..5).filter(|&j| adjacent(0, j)).collect();
    if first_nbrs.len() != 2 {
        return SumnerStructure::Neither("twin quotient is not a 5-cycle".into());
    }
    order.push(first_nbrs[0]);
    while order.len() < 5 {
        let cur = *order.last().expect("non-empty");
        let prev = order[order.len() - 2];
        let next: Vec<usize> = (0..5).filter(|&j| j != prev && adjacent(cur, j)).collect();
        if next.len() != 1 || order.contains(&next[0]) {
            return SumnerStructure::Neither("twin quotient is not a 5-cycle".into());
        }
        order.push(next[0]);
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let cyclic = (j - i) == 1 || (j - i) == 4;
            if adjacent(order[i], order[j]) != cyclic {
                return SumnerStructure::Neither("twin quotient is not a 5-cycle".into());
            }
        }
    }
    let parts = [0, 1, 2, 3, 4].map(|i| classes[order[i]].clone());
    SumnerStructure::C5Blowup(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{alon_pairs_graph, blowup, complete_multipartite, gnp, random_chordal, Rng};
    use crate::rational::rat;

    /// Chordality by definition: no induced cycle of length >= 4.
    fn has_hole_naive(g: &Graph, even_only: bool) -> bool {
        let n = g.n();
        for mask in 0u64..1 << n {
            let k = mask.count_ones() as usize;
            if k < 4 || (even_only && k % 2 == 1) {
                continue;
            }
            let set = VertexSet::from_mask(n, mask);
            let (sub, _) = g.induced_subgraph(&set);
            if sub.is_connected() && sub.degrees().iter().all(|&d| d == 2) {
                return true;
            }
        }
        false
    }

    fn shatter_naive(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u64..1 << n {
            let set: Vec<usize> = VertexSet::from_mask(n, mask).to_vec();
            if set.len() > best && (1usize << set.len()) <= n && is_shattered(g, &set) {
                best = set.len();
            }
        }
        best
    }

    #[test]
    fn small_recognition_examples() {
        let c4 = Graph::cycle(4);
        assert!(!is_chordal(&c4));
        assert!(!is_even_hole_free(&c4).unwrap());
        let c5 = Graph::cycle(5);
        assert!(!is_chordal(&c5));
        assert!(is_even_hole_free(&c5).unwrap());
        let tree = Graph::new(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(is_chordal(&tree));
        assert!(is_even_hole_free(&tree).unwrap());
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(&Graph::empty(0)));
        assert!(find_even_hole(&Graph::empty(17)).is_err());
    }

    #[test]
    fn recognizers_match_definitions() {
        let mut rng = Rng::new(11);
        for seed in 0..150 {
            let n = 4 + rng.below(6) as usize;
            let g = gnp(n, &rat(1 + rng.below(3) as i64, 4), seed).unwrap();
            assert_eq!(is_chordal(&g), !has_hole_naive(&g, false), "{g:?}");
            assert_eq!(is_even_hole_free(&g).unwrap(), !has_hole_naive(&g, true), "{g:?}");
            if let Some(v) = simplicial_vertex(&g) {
                assert!(g.is_clique(g.neighbors(v)));
            }
            assert_eq!(vc_dimension(&g, 10).unwrap().dim, shatter_naive(&g), "{g:?}");
        }
    }

    #[test]
    fn chordal_outputs_are_even_hole_free() {
        for seed in 0..40 {
            let g = random_chordal(14, &rat(1, 2), seed).unwrap();
            assert!(is_chordal(&g));
            assert!(is_even_hole_free(&g).unwrap());
        }
    }

    #[test]
    fn p5_search() {
        assert_eq!(find_induced_p5(&Graph::path(5)), Some([0, 1, 2, 3, 4]));
        assert!(find_induced_p5(&Graph::cycle(5)).is_none());
        assert!(find_induced_p5(&Graph::cycle(6)).is_some());
        assert!(find_induced_p5(&Graph::complete(6)).is_none());
    }

    #[test]
    fn vc_dimension_examples() {
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(vc_dimension(&k333, 5).unwrap(), VcDimension { dim: 1, saturated: false });
        let (vc, witness) = vc_dimension_witness(&Graph::path(5), 5).unwrap();
        assert!(vc.dim >= 2);
        assert!(is_shattered(&Graph::path(5), &witness));
        assert!(is_shattered(&Graph::path(5), &[1, 3]));
        let alon = alon_pairs_graph(2).unwrap();
        assert!(vc_dimension(&alon, 5).unwrap().dim <= 3);
        assert_eq!(vc_dimension(&Graph::empty(4), 3).unwrap().dim, 0);
        let capped = vc_dimension(&Graph::path(8), 1).unwrap();
        assert_eq!(capped, VcDimension { dim: 1, saturated: true });
        assert!(vc_dimension(&Graph::empty(21), 5).is_err());
        assert!(vc_dimension(&Graph::empty(30), 4).is_ok());
    }

    #[test]
    fn sumner_examples() {
        let c52 = blowup(&Graph::cycle(5), &[2; 5]).unwrap();
        match sumner_structure(&c52) {
            SumnerStructure::C5Blowup(parts) => {
                assert!(parts.iter().all(|p| p.len() == 2));
                assert_eq!(parts[0].to_vec(), vec![0, 1]);
                assert_eq!(parts[1].to_vec(), vec![2, 3]);
                assert_eq!(parts[4].to_vec(), vec![8, 9]);
            }
            other => panic!("{other:?}"),
        }
        match sumner_structure(&Graph::cycle(4)) {
            SumnerStructure::Bipartite([a, b]) => {
                assert_eq!(a.to_vec(), vec![0, 2]);
                assert_eq!(b.to_vec(), vec![1, 3]);
            }
            other => panic!("{other:?}"),
        }
        let pendant = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        assert!(matches!(sumner_structure(&pendant), SumnerStructure::Neither(r) if r.contains("P5")));
        assert!(matches!(sumner_structure(&Graph::complete(3)), SumnerStructure::Neither(_)));
    }
}
