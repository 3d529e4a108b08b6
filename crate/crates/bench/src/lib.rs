//! Fixed inputs shared by the benchmarks.

use dsr_core::random::{random_cograph, random_tree};
use dsr_core::{is_dominating, Configuration, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded random tree with a source and target both dominating.
pub fn tree_instance(n: usize, seed: u64) -> (Graph, Configuration, Configuration) {
    let g = random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)).expect("n > 0");
    let (s, t) = two_dominating(&g);
    (g, s, t)
}

/// Seeded random cograph with its cotree, plus two dominating configurations.
pub fn cograph_instance(
    n: usize,
    seed: u64,
) -> (dsr_core::Cotree, Graph, Configuration, Configuration) {
    let (ct, g) = random_cograph(n, &mut ChaCha8Rng::seed_from_u64(seed)).expect("n > 0");
    let (s, t) = two_dominating(&g);
    (ct, g, s, t)
}

/// Non-leaf vertices, and the same set rotated by one, padded to dominate.
fn two_dominating(g: &Graph) -> (Configuration, Configuration) {
    let inner: Vec<usize> = g.vertices().filter(|&v| g.degree(v) != 1).collect();
    let make = |vs: Vec<usize>| {
        let mut c = Configuration::from_vertices(vs);
        if c.is_empty() || !is_dominating(g, &c).unwrap() {
            c = Configuration::from_vertices(g.vertices());
        }
        c
    };
    let s = make(inner.clone());
    let mut rotated: Vec<usize> = inner.iter().map(|&v| (v + 1) % g.n()).collect();
    rotated.truncate(s.size());
    let mut t = make(rotated);
    while t.size() < s.size() {
        t.add(0);
    }
    if t.size() > s.size() {
        t = s.clone();
    }
    (s, t)
}
