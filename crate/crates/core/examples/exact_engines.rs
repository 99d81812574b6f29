//! Independence number, the full family of maximum independent sets and the
//! minimum hitting set for a few small graphs.

use hitting_sets::generators::{blowup, complete_multipartite, petersen};
use hitting_sets::{enumerate_mis, greedy_hitting_set, hajnal_check, min_hitting_set, Graph};

fn main() -> hitting_sets::Result<()> {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("C5[2]", blowup(&Graph::cycle(5), &[2; 5])?),
        ("K4,4,4", complete_multipartite(&[4, 4, 4])?),
        ("Petersen", petersen()),
        ("P6", Graph::path(6)),
    ];
    println!(
        "{:<10} {:>3} {:>6} {:>5} {:>9} {:>8} {:>7}",
        "graph", "n", "alpha", "sets", "residual", "h_exact", "greedy"
    );
    for (name, g) in &graphs {
        let fam = enumerate_mis(g)?;
        let exact = min_hitting_set(&fam)?;
        let greedy = greedy_hitting_set(&fam)?;
        let hajnal = hajnal_check(&fam)?;
        assert!(exact.verified && hajnal.holds);
        println!(
            "{:<10} {:>3} {:>6} {:>5} {:>9} {:>8} {:>7}",
            name,
            g.n(),
            fam.alpha(),
            fam.len(),
            fam.residual().len(),
            exact.size(),
            greedy.size()
        );
    }
    let c5 = enumerate_mis(&Graph::cycle(5))?;
    println!("lex-least minimum hitting set of C5: {:?}", min_hitting_set(&c5)?.set.to_vec());
    Ok(())
}
