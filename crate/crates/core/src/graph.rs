//! Simple undirected graphs over dense vertex ids `0..n`, with the
//! neighborhood, distance and brute-force domination primitives used by
//! every solver in the crate.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Default vertex limit for [`min_dominating_set_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 20;

/// Dense bitset over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: usize, vs: I) -> Self {
        let mut s = VertexSet::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.n
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        if v >= self.n {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::Input(format!("self-loop on vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Input(format!("duplicate edge {u}-{}", w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Open neighborhood, sorted ascending. Panics on an out-of-range id.
    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adj[u]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, u: Vertex) -> Result<()> {
        if u < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n(),
            })
        }
    }

    pub fn closed_neighborhood(&self, u: Vertex) -> Result<VertexSet> {
        self.check_vertex(u)?;
        let mut s = VertexSet::from_vertices(self.n(), self.adj[u].iter().copied());
        s.insert(u);
        Ok(s)
    }

    /// `N[S]`.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for u in s.iter().filter(|&u| u < self.n()) {
            out.insert(u);
            for &v in &self.adj[u] {
                out.insert(v);
            }
        }
        out
    }

    pub fn dominates(&self, s: &VertexSet) -> bool {
        self.closed_neighborhood_of_set(s).len() == self.n()
    }

    /// Subgraph induced by `vs` (in the given order); vertex `i` of the result
    /// is `vs[i]`.
    pub fn induced(&self, vs: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vs.len()];
        let mut m = 0;
        for (i, &v) in vs.iter().enumerate() {
            for &w in &self.adj[v] {
                if local[w] != usize::MAX {
                    adj[i].push(local[w]);
                    if local[w] > i {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj, m }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            for v in 0..n {
                if v != u && !self.has_edge(u, v) {
                    list.push(v);
                    if v > u {
                        m += 1;
                    }
                }
            }
        }
        Graph { adj, m }
    }

    /// Disjoint union plus every edge between the two parts; `g2`'s vertices
    /// are shifted by `g1.n()`.
    pub fn join(g1: &Graph, g2: &Graph) -> Graph {
        let n1 = g1.n();
        let mut edges: Vec<_> = g1.edges().collect();
        edges.extend(g2.edges().map(|(u, v)| (u + n1, v + n1)));
        for u in 0..n1 {
            for v in 0..g2.n() {
                edges.push((u, v + n1));
            }
        }
        Graph::from_edges(n1 + g2.n(), edges).expect("join of simple graphs is simple")
    }

    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
        let n1 = g1.n();
        let edges = g1.edges().chain(g2.edges().map(|(u, v)| (u + n1, v + n1)));
        Graph::from_edges(n1 + g2.n(), edges).expect("union of simple graphs is simple")
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || components(self).len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// `N[u]`.
pub fn closed_neighborhood(g: &Graph, u: Vertex) -> Result<VertexSet> {
    g.closed_neighborhood(u)
}

/// True iff `N[s] = V`.
pub fn dominates(g: &Graph, s: &VertexSet) -> bool {
    g.dominates(s)
}

/// Exhaustive minimum dominating set. Subsets are tried by size, then in
/// lexicographic order, so the witness is the lexicographically smallest
/// minimum dominating set.
pub fn min_dominating_set_bruteforce(g: &Graph) -> Result<(usize, VertexSet)> {
    min_dominating_set_bruteforce_with_limit(g, BRUTEFORCE_LIMIT)
}

pub fn min_dominating_set_bruteforce_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > limit {
        return Err(Error::Resource(format!(
            "brute-force domination limited to {limit} vertices, graph has {n}"
        )));
    }
    if n == 0 {
        return Ok((0, VertexSet::new(0)));
    }
    let masks: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(1u64 << u, |m, &v| m | 1 << v))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 1..=n {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let cover = pick.iter().fold(0u64, |acc, &v| acc | masks[v]);
            if cover == full {
                return Ok((size, VertexSet::from_vertices(n, pick)));
            }
            if !next_combination(&mut pick, n) {
                break;
            }
        }
    }
    unreachable!("V dominates every graph")
}

/// Advances `pick` to the next `k`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    component_lists(g)
        .into_iter()
        .map(|c| VertexSet::from_vertices(g.n(), c))
        .collect()
}

/// Component id per vertex; ids follow smallest-member order.
pub fn component_labels(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n()];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if label[v] == usize::MAX {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    label
}

/// Components as sorted vertex lists, ordered by smallest member.
pub fn component_lists(g: &Graph) -> Vec<Vec<Vertex>> {
    let label = component_labels(g);
    let count = label.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut out = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        out[l].push(v);
    }
    out
}

/// Unweighted distances from `u`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, u: Vertex) -> Result<Vec<Option<usize>>> {
    g.check_vertex(u)?;
    let mut dist = vec![None; g.n()];
    dist[u] = Some(0);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap();
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    Ok(dist)
}

/// Shortest path `from -> to` as a vertex list, preferring the smallest-id
/// predecessor at every step. `None` if `to` is unreachable.
pub fn shortest_path(g: &Graph, from: Vertex, to: Vertex) -> Result<Option<Vec<Vertex>>> {
    g.check_vertex(to)?;
    let dist = bfs_distances(g, to)?;
    if dist[from].is_none() {
        return Ok(None);
    }
    let mut path = vec![from];
    let mut cur = from;
    while cur != to {
        let d = dist[cur].unwrap();
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| dist[w] == Some(d - 1))
            .expect("BFS layer has a predecessor");
        path.push(cur);
    }
    Ok(Some(path))
}

/// Maximum distance from `u` to a reachable vertex. With `strict`, an
/// unreachable vertex is a domain error.
pub fn eccentricity(g: &Graph, u: Vertex, strict: bool) -> Result<usize> {
    let dist = bfs_distances(g, u)?;
    let mut ecc = 0;
    for (v, d) in dist.into_iter().enumerate() {
        match d {
            Some(d) => ecc = ecc.max(d),
            None if strict => {
                return Err(Error::Domain(format!(
                    "vertex {v} unreachable from {u}; eccentricity undefined"
                )))
            }
            None => {}
        }
    }
    Ok(ecc)
}

/// Vertex of minimum eccentricity, smallest id on ties.
pub fn min_eccentricity_vertex(g: &Graph) -> Result<Vertex> {
    if g.n() == 0 {
        return Err(Error::Domain("empty graph has no center".into()));
    }
    if !g.is_connected() {
        return Err(Error::Domain("graph is disconnected".into()));
    }
    let mut best = (usize::MAX, 0);
    for u in g.vertices() {
        let e = eccentricity(g, u, true)?;
        if e < best.0 {
            best = (e, u);
        }
    }
    Ok(best.1)
}

/// Closed interval `[left, right]` on the real line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub left: f64,
    pub right: f64,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        other.left <= self.right && self.left <= other.right
    }
}

/// One interval per vertex.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct IntervalFamily {
    intervals: Vec<Interval>,
}

impl IntervalFamily {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        for (i, iv) in intervals.iter().enumerate() {
            if iv.left.is_nan() || iv.right.is_nan() || iv.left > iv.right {
                return Err(Error::Input(format!(
                    "interval {i} has left endpoint {} after right endpoint {}",
                    iv.left, iv.right
                )));
            }
        }
        Ok(IntervalFamily { intervals })
    }

    pub fn from_pairs<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> Result<Self> {
        Self::new(
            pairs
                .into_iter()
                .map(|(left, right)| Interval { left, right })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// The intersection graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.intervals[i].intersects(&self.intervals[j]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges).expect("intersection graph is simple")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn closed_neighborhoods() {
        let p3 = path(3);
        assert_eq!(p3.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(p3.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
        let e = Graph::empty(3);
        assert_eq!(e.closed_neighborhood(2).unwrap().to_vec(), vec![2]);
        assert!(matches!(
            p3.closed_neighborhood(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn domination() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(dominates(&star, &set(4, &[0])));
        assert!(!dominates(&path(4), &set(4, &[1])));
        assert!(dominates(&path(4), &VertexSet::full(4)));
        assert!(!dominates(&path(4), &VertexSet::new(4)));
        assert!(dominates(&Graph::empty(0), &VertexSet::new(0)));
    }

    #[test]
    fn bruteforce_gamma() {
        let (g, w) = min_dominating_set_bruteforce(&path(4)).unwrap();
        assert_eq!(g, 2);
        assert_eq!(w.to_vec(), vec![0, 2]);
        let (g, w) = min_dominating_set_bruteforce(&Graph::empty(1)).unwrap();
        assert_eq!((g, w.to_vec()), (1, vec![0]));
        assert_eq!(
            min_dominating_set_bruteforce(&Graph::empty(5)).unwrap().0,
            5
        );
        assert!(matches!(
            min_dominating_set_bruteforce(&path(21)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn bruteforce_matches_subset_enumeration() {
        // Independent oracle: scan all 2^n subsets by popcount.
        for g in [path(4), path(7), cycle(5), cycle(6), complete(4)] {
            let n = g.n();
            let best = (0u32..1 << n)
                .filter(|&mask| {
                    let s = VertexSet::from_vertices(n, (0..n).filter(|i| mask >> i & 1 == 1));
                    g.dominates(&s)
                })
                .map(|mask| mask.count_ones() as usize)
                .min()
                .unwrap();
            assert_eq!(min_dominating_set_bruteforce(&g).unwrap().0, best);
        }
    }

    #[test]
    fn components_and_distances() {
        assert_eq!(components(&complete(2)).len(), 1);
        let iso = components(&Graph::empty(3));
        assert_eq!(
            iso.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            vec![vec![0], vec![1], vec![2]]
        );
        let p3p2 = Graph::disjoint_union(&path(3), &path(2));
        let sizes: Vec<_> = components(&p3p2).iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![3, 2]);

        let d = bfs_distances(&path(4), 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(3)]);
        let d = bfs_distances(&cycle(4), 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2), Some(1)]);
        let d = bfs_distances(&p3p2, 0).unwrap();
        assert_eq!(d[4], None);
    }

    #[test]
    fn eccentricities() {
        assert_eq!(eccentricity(&path(5), 2, true).unwrap(), 2);
        assert_eq!(eccentricity(&path(6), 0, true).unwrap(), 5);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(eccentricity(&star, 0, true).unwrap(), 1);
        let split = Graph::disjoint_union(&path(2), &path(2));
        assert!(matches!(
            eccentricity(&split, 0, true),
            Err(Error::Domain(_))
        ));
        assert_eq!(eccentricity(&split, 0, false).unwrap(), 1);

        assert_eq!(min_eccentricity_vertex(&path(5)).unwrap(), 2);
        assert_eq!(min_eccentricity_vertex(&path(4)).unwrap(), 1);
        assert_eq!(min_eccentricity_vertex(&complete(5)).unwrap(), 0);
        assert!(min_eccentricity_vertex(&split).is_err());
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn shortest_paths_prefer_small_ids() {
        let c4 = cycle(4);
        assert_eq!(shortest_path(&c4, 0, 2).unwrap().unwrap(), vec![0, 1, 2]);
        let split = Graph::disjoint_union(&path(2), &path(2));
        assert_eq!(shortest_path(&split, 0, 3).unwrap(), None);
    }

    #[test]
    fn interval_graphs() {
        assert!(IntervalFamily::from_pairs([(2.0, 1.0)]).is_err());
        let f = IntervalFamily::from_pairs([(1.0, 2.0), (1.0, 3.0), (2.0, 4.0)]).unwrap();
        let g = f.to_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let f = IntervalFamily::from_pairs([(0.0, 1.0), (2.0, 3.0)]).unwrap();
        assert_eq!(f.to_graph().m(), 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                    let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                    Graph::from_edges(n, edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn neighborhoods_are_symmetric(g in arb_graph(9)) {
                for u in g.vertices() {
                    let nu = g.closed_neighborhood(u).unwrap();
                    prop_assert!(nu.contains(u));
                    for v in g.vertices() {
                        prop_assert_eq!(nu.contains(v), g.closed_neighborhood(v).unwrap().contains(u));
                    }
                }
            }

            #[test]
            fn adding_an_edge_never_raises_gamma(g in arb_graph(8), a in 0usize..8, b in 0usize..8) {
                let n = g.n();
                let (a, b) = (a % n, b % n);
                prop_assume!(a != b && !g.has_edge(a, b));
                let mut edges: Vec<_> = g.edges().collect();
                edges.push((a, b));
                let h = Graph::from_edges(n, edges).unwrap();
                prop_assert!(min_dominating_set_bruteforce(&h).unwrap().0
                    <= min_dominating_set_bruteforce(&g).unwrap().0);
            }

            #[test]
            fn components_partition_and_match_distances(g in arb_graph(9)) {
                let comps = components(&g);
                let total: usize = comps.iter().map(VertexSet::len).sum();
                prop_assert_eq!(total, g.n());
                let label = component_labels(&g);
                for u in g.vertices() {
                    let d = bfs_distances(&g, u).unwrap();
                    for v in g.vertices() {
                        prop_assert_eq!(d[v].is_some(), label[u] == label[v]);
                    }
                }
            }
        }
    }
}
