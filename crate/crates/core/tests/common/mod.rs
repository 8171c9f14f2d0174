#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trapezoid::format::parse_diagram;
use trapezoid::TrapezoidDiagram;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture(name: &str) -> TrapezoidDiagram {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    parse_diagram(&text, name.ends_with("_raw.txt")).unwrap()
}

/// Seeds and sizes of the shared random corpora: `count` diagrams with
/// `1 <= n <= max_n`.
pub fn corpus(count: u64, max_n: usize, salt: u64) -> Vec<(usize, u64)> {
    (0..count)
        .map(|k| {
            let seed = salt.wrapping_mul(1_000_003).wrapping_add(k);
            (1 + (seed.wrapping_mul(2_654_435_761) >> 7) as usize % max_n, seed)
        })
        .collect()
}

// Trapezoid k sits near position 2k on both lines with random widths, so
// the graph is sparse and frequently a tree.
pub fn sparse_diagram(n: usize, seed: u64) -> TrapezoidDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<[f64; 4]> = (0..n)
        .map(|k| {
            let base = 2.0 * k as f64;
            let a = base + rng.gen_range(-1.0..1.0);
            let c = base + rng.gen_range(-1.0..1.0);
            [a, a + rng.gen_range(0.2..3.5), c, c + rng.gen_range(0.2..3.5)]
        })
        .collect();
    TrapezoidDiagram::normalize(&rows).unwrap()
}
