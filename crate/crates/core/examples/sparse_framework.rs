//! The locally sparse framework on random chordal graphs, with its trace.

use hitting_sets::generators::random_chordal;
use hitting_sets::hitters::locally_sparse_hitter;
use hitting_sets::rational::rat;
use hitting_sets::{enumerate_mis, min_hitting_set};

fn main() -> hitting_sets::Result<()> {
    for seed in 0..5 {
        let g = random_chordal(16, &rat(1, 2), seed)?;
        let fam = enumerate_mis(&g)?;
        for b_ratio in [rat(98, 100), rat(99, 100)] {
            let (report, trace) = locally_sparse_hitter(&g, &fam, 1, None, &b_ratio)?;
            println!(
                "seed {seed} b={b_ratio}: {:?} size {} verified={} sequence={:?} new={:?} clamps={:?}",
                trace.branch,
                report.size(),
                report.verified,
                trace.sequence,
                trace.new_counts,
                trace.clamps
            );
        }
        println!("seed {seed}: h = {}", min_hitting_set(&fam)?.size());
    }
    Ok(())
}
