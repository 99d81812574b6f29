//! A benchmark table over generated instances, as `hitset bench` writes it.

use hitting_sets::commands::{bench, bench_csv, BenchEntry};
use hitting_sets::Limits;

const SPECS: &str = r#"[
  {"gen": {"kind": "chordal", "density": "1/2"}, "methods": ["exact", "greedy", "sparse-framework"], "ns": [10, 12, 14, 16]},
  {"gen": {"kind": "alon-pairs"}, "methods": ["exact", "greedy"], "ks": [1, 2]},
  {"gen": {"kind": "random-intervals", "n": 12}, "methods": ["two-order", "circle-layers"], "seeds": [0, 1, 2]}
]"#;

fn main() -> hitting_sets::Result<()> {
    let entries: Vec<BenchEntry> = serde_json::from_str(SPECS)?;
    print!("{}", bench_csv(&bench(&entries, &Limits::default()))?);
    Ok(())
}
