//! The pairs graph: triangle-bounded cliques, small VC-dimension and a
//! hitting number of order `sqrt(n)`.

use hitting_sets::generators::alon_pairs_graph;
use hitting_sets::mis::clique_number;
use hitting_sets::recognition::vc_dimension;
use hitting_sets::{enumerate_mis, greedy_hitting_set, min_hitting_set, Limits};

fn main() -> hitting_sets::Result<()> {
    for k in 1..=2 {
        let g = alon_pairs_graph(k)?;
        let fam = enumerate_mis(&g)?;
        let h = min_hitting_set(&fam)?;
        let floor = (1..).find(|c| 4 * c * c >= g.n()).unwrap();
        println!(
            "k={k}: n={} omega={} vc={} alpha={} h={} >= {floor} greedy={}",
            g.n(),
            clique_number(&g, &Limits::default())?,
            vc_dimension(&g, 4)?.dim,
            fam.alpha(),
            h.size(),
            greedy_hitting_set(&fam)?.size()
        );
    }
    Ok(())
}
