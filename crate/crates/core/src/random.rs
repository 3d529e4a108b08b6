//! Seeded generators for test and benchmark corpora.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cograph::Cotree;
use crate::error::{Error, Result};
use crate::graph::{Graph, IntervalFamily, Vertex};

/// Uniform random recursive tree: vertex `i` attaches to a random earlier one.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Input("a tree needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (rng.gen_range(0..i), i)))
}

/// `n` intervals with integer endpoints in `[0, 2n]`.
pub fn random_interval_family<R: Rng>(n: usize, rng: &mut R) -> Result<IntervalFamily> {
    let span = 2 * n.max(1);
    IntervalFamily::from_pairs((0..n).map(|_| {
        let l = rng.gen_range(0..span);
        let r = rng.gen_range(l..=span);
        (l as f64, r as f64)
    }))
}

/// Erdős-Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple edges")
}

/// Random cotree on `0..n` with alternating node kinds, and its graph.
pub fn random_cograph<R: Rng>(n: usize, rng: &mut R) -> Result<(Cotree, Graph)> {
    if n == 0 {
        return Err(Error::Input("a cograph needs at least one vertex".into()));
    }
    let mut vs: Vec<Vertex> = (0..n).collect();
    vs.shuffle(rng);
    let join = rng.gen_bool(0.5);
    let tree = build(&vs, join, rng);
    let g = tree.to_graph(n)?;
    Ok((tree, g))
}

fn build<R: Rng>(vs: &[Vertex], join: bool, rng: &mut R) -> Cotree {
    if vs.len() == 1 {
        return Cotree::Leaf(vs[0]);
    }
    let parts = rng.gen_range(2..=vs.len().min(3));
    let mut cuts: Vec<usize> = (1..vs.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let bounds: Vec<usize> = std::iter::once(0)
        .chain(cuts)
        .chain(std::iter::once(vs.len()))
        .collect();
    let children = bounds
        .windows(2)
        .map(|w| build(&vs[w[0]..w[1]], !join, rng))
        .collect();
    if join {
        Cotree::Join(children)
    } else {
        Cotree::Union(children)
    }
}
