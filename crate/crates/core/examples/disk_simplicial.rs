//! The smallest disk of an arrangement has a neighbourhood covered by eleven
//! cliques, so its closed neighbourhood hits every maximum independent set.

use hitting_sets::generators::{default_side, random_disks};
use hitting_sets::geometry::find_11_simplicial;
use hitting_sets::hitters::simplicial_hitter;
use hitting_sets::mis::clique_number;
use hitting_sets::{enumerate_mis, min_hitting_set, Limits};

fn main() -> hitting_sets::Result<()> {
    for seed in 0..6 {
        let n = 14;
        let disks = random_disks(n, default_side(n), false, seed)?;
        let g = disks.graph();
        let fam = enumerate_mis(&g)?;
        let omega = clique_number(&g, &Limits::default())?;
        let cert = find_11_simplicial(&disks)?;
        let report = simplicial_hitter(&g, &fam, cert.vertex, &cert.cliques)?;
        let exact = min_hitting_set(&fam)?;
        println!(
            "seed {seed}: disk {} has {} neighbours in {} cliques (points {:?}); hitter size {} <= {} verified={} h={}",
            cert.vertex,
            g.degree(cert.vertex),
            cert.cliques.len(),
            cert.points,
            report.size(),
            11 * omega + 1,
            report.verified,
            exact.size()
        );
    }
    Ok(())
}
