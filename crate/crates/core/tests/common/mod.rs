//! Corpora and independent checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use dsr_core::oracle::Feasibility;
use dsr_core::Graph;

/// Every graph on `n` vertices up to isomorphism, by minimum edge mask over
/// all vertex permutations.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let index = |u: usize, v: usize| {
        pairs
            .iter()
            .position(|&p| p == (u.min(v), u.max(v)))
            .unwrap()
    };
    let relabeled: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = relabeled
            .iter()
            .map(|r| {
                (0..pairs.len())
                    .filter(|&e| mask >> e & 1 == 1)
                    .fold(0u32, |acc, e| acc | 1 << r[e])
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            let edges = (0..pairs.len())
                .filter(|&e| canon >> e & 1 == 1)
                .map(|e| pairs[e]);
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every tree on `n` vertices up to isomorphism, grown leaf by leaf and
/// deduplicated by a center-rooted canonical string.
pub fn trees_up_to_iso(n: usize) -> Vec<Graph> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for parent in 0..size - 1 {
                let mut e = edges.clone();
                e.push((parent, size - 1));
                let g = Graph::from_edges(size, e.iter().copied()).unwrap();
                if seen.insert(tree_code(&g)) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|e| Graph::from_edges(n, e).unwrap())
        .collect()
}

fn tree_code(g: &Graph) -> String {
    fn rooted(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rooted(g, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    // centers: repeatedly strip leaves
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive: Vec<usize> = g.vertices().collect();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().copied().filter(|&v| deg[v] <= 1).collect();
        for &l in &leaves {
            for &w in g.neighbors(l) {
                deg[w] = deg[w].saturating_sub(1);
            }
        }
        alive.retain(|v| !leaves.contains(v));
    }
    alive
        .iter()
        .map(|&c| rooted(g, c, usize::MAX))
        .min()
        .unwrap()
}

/// Domination number by exhaustive search over vertex masks.
pub fn gamma(g: &Graph) -> usize {
    let n = g.n();
    let closed: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(1 << v, |a, &w| a | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    (0u32..=full)
        .filter(|s| {
            (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .fold(0, |a, v| a | closed[v])
                == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Every edge has a token on an endpoint.
pub struct VertexCover {
    edges: Vec<(u32, u32)>,
}

impl VertexCover {
    pub fn new(g: &Graph) -> Self {
        VertexCover {
            edges: g.edges().map(|(u, v)| (u as u32, v as u32)).collect(),
        }
    }
}

impl Feasibility for VertexCover {
    fn holds(&self, tokens: &[u32]) -> bool {
        self.edges
            .iter()
            .all(|(u, v)| tokens.binary_search(u).is_ok() || tokens.binary_search(v).is_ok())
    }
}
