//! Chord diagrams as two-order structures: containment colouring, the
//! layered construction and the weak-circle layers.

use hitting_sets::generators::random_intervals;
use hitting_sets::rational::rat;
use hitting_sets::two_order::{
    circle_to_two_order, cover_coloring, k_intersecting_value, two_order_hitter, validate_two_order, weak_circle_layers,
};
use hitting_sets::{enumerate_mis, min_hitting_set};

fn main() -> hitting_sets::Result<()> {
    for seed in 0..5 {
        let chords = random_intervals(12, seed)?;
        let t = circle_to_two_order(&chords);
        assert!(validate_two_order(&t).is_empty());
        let fam = enumerate_mis(t.graph())?;
        let coloring = cover_coloring(&t, &fam)?;
        let sizes: Vec<usize> = coloring.layers.iter().map(|l| l.len()).collect();
        let beta = rat(fam.alpha() as i64, t.n() as i64);
        let layered = two_order_hitter(&t, &fam, &beta)?;
        let weak = weak_circle_layers(&chords, &fam, 2)?;
        println!(
            "seed {seed}: alpha={} K={} layers={sizes:?} two-order={:?}/{} weak-circle={:?}/{} h={}",
            fam.alpha(),
            k_intersecting_value(&t),
            layered.branch,
            layered.report.size(),
            weak.branch,
            weak.report.size(),
            min_hitting_set(&fam)?.size()
        );
    }
    Ok(())
}
