//! Hitters driven by structure: bipartite matchings, neighbourhood
//! VC-dimension one, balanced separators and circular-arc pruning.

use hitting_sets::generators::{blowup, complete_multipartite, random_arcs};
use hitting_sets::hitters::{bipartite_hitter, circular_arc_prune, separator_hitter, vc1_hitter};
use hitting_sets::{enumerate_mis, Graph};

fn main() -> hitting_sets::Result<()> {
    let c6 = Graph::cycle(6);
    let r = bipartite_hitter(&c6, &enumerate_mis(&c6)?)?;
    println!("bipartite C6: {:?} verified={}", r.set.to_vec(), r.verified);

    for (name, g) in [
        ("C5", Graph::cycle(5)),
        ("C5(2,1,1,1,1)", blowup(&Graph::cycle(5), &[2, 1, 1, 1, 1])?),
        ("K4,4,4", complete_multipartite(&[4, 4, 4])?),
    ] {
        let r = vc1_hitter(&g, &enumerate_mis(&g)?)?;
        println!("vc1 {name}: {:?} verified={}", r.set.to_vec(), r.verified);
    }

    let p7 = Graph::path(7);
    let (r, levels) = separator_hitter(&p7, &enumerate_mis(&p7)?)?;
    println!("separator P7: {:?} verified={} levels={levels:?}", r.set.to_vec(), r.verified);

    let arcs = random_arcs(12, 4)?;
    let fam = enumerate_mis(&arcs.graph())?;
    println!("arcs: pruned {:?} of residual {:?}", circular_arc_prune(&arcs, &fam)?.to_vec(), fam.residual().to_vec());
    Ok(())
}
