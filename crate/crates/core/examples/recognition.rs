//! Structural recognisers: chordality, even holes, induced P5, neighbourhood
//! VC-dimension and the triangle-free P5-free shapes.

use hitting_sets::generators::{blowup, petersen};
use hitting_sets::recognition::{
    find_even_hole, find_induced_p5, is_chordal, perfect_elimination_ordering, sumner_structure, vc_dimension_witness,
};
use hitting_sets::Graph;

fn main() -> hitting_sets::Result<()> {
    for (name, g) in [
        ("P5", Graph::path(5)),
        ("C6", Graph::cycle(6)),
        ("C5[2]", blowup(&Graph::cycle(5), &[2; 5])?),
        ("Petersen", petersen()),
    ] {
        let (vc, witness) = vc_dimension_witness(&g, 3)?;
        println!(
            "{name}: chordal={} peo={:?} even_hole={:?} p5={:?} vc={} shattered={witness:?}",
            is_chordal(&g),
            perfect_elimination_ordering(&g),
            find_even_hole(&g)?,
            find_induced_p5(&g),
            vc.dim
        );
        if g.is_connected() && !g.has_triangle() && find_induced_p5(&g).is_none() {
            println!("  {:?}", sumner_structure(&g));
        }
    }
    Ok(())
}
