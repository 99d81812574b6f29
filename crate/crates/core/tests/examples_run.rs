use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [(&str, &str); 9] = [
    ("exact_engines", "lex-least minimum hitting set of C5: [0, 1, 2]"),
    ("disk_simplicial", "verified=true"),
    ("circle_layers", "seed 4:"),
    ("sparse_framework", "verified=true"),
    ("structured_hitters", "vc1 K4,4,4: [0, 4, 8] verified=true"),
    ("alon_pairs", "k=2: n=12 omega=3"),
    ("recognition", "C5Blowup"),
    ("claim_suites", "27 rows, 0 failing"),
    ("bench_table", "kind,n,seed,alpha,h_exact,method,size,bound,verified,wall_ms,error"),
];

/// `target/<profile>/examples`, next to the directory holding this test.
fn examples_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

fn binary(name: &str) -> PathBuf {
    let path = examples_dir().join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
    if !path.exists() {
        let status = Command::new(env!("CARGO"))
            .args(["build", "--quiet", "--examples", "--manifest-path"])
            .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/Cargo.toml"))
            .status()
            .unwrap();
        assert!(status.success());
    }
    path
}

#[test]
fn every_example_runs() {
    for (name, expect) in EXAMPLES {
        let out = Command::new(binary(name)).output().unwrap();
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(text.contains(expect), "{name} output lacks {expect:?}:\n{text}");
    }
}
