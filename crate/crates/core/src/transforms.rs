//! Rule conversions between token jumping and token addition/removal, the
//! split / bipartite / incidence reductions with sequence lifting, the
//! bandwidth relabeling, and generators for the named graph families.

use std::collections::{HashMap, VecDeque};

use crate::config::{
    verify_sequence, Configuration, Instance, Move, ReconfSequence, Rule, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Role of a vertex in a constructed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Copy of an original vertex.
    Original(Vertex),
    /// Split reduction: clique copy of an original vertex.
    Clique(Vertex),
    /// Split reduction: independent-side twin of an original vertex.
    Independent(Vertex),
    /// Degree-two vertex subdividing the original edge `uv`.
    Gadget(Vertex, Vertex),
    /// Bipartite reduction hub adjacent to every original vertex.
    Apex,
    /// Degree-one vertex hanging off the apex.
    Pendant,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub original: Graph,
    pub graph: Graph,
    /// Original vertex -> its copy in `graph`.
    pub vmap: Vec<Vertex>,
    /// One role per vertex of `graph`.
    pub tags: Vec<Role>,
}

impl ReductionOutput {
    /// Image of an original configuration under `vmap`.
    pub fn image(&self, c: &Configuration) -> Configuration {
        c.map_vertices(|v| self.vmap[v])
    }

    pub fn apex(&self) -> Option<Vertex> {
        self.tags.iter().position(|&t| t == Role::Apex)
    }

    fn preimage(&self) -> HashMap<Vertex, Vertex> {
        self.vmap.iter().enumerate().map(|(o, &n)| (n, o)).collect()
    }
}

fn validated(g: &Graph, seq: &ReconfSequence) -> Result<Configuration> {
    let end = seq.final_configuration(g)?;
    let inst = Instance::new(g.clone(), seq.start.clone(), end.clone(), seq.rule)?;
    match verify_sequence(&inst, seq) {
        Verdict::Valid => Ok(end),
        Verdict::Invalid { step, reason } => Err(Error::Input(format!(
            "invalid sequence at step {step}: {reason}"
        ))),
    }
}

/// Converts a TAR sequence (cap `k + 1`) between size-`k` configurations into
/// a TJ sequence with the same endpoints.
///
/// Repeatedly takes the first configuration of minimum size below `k`: it was
/// produced by `rm x` and is followed by `add y`. The pair cancels when
/// `x = y` and is swapped to `add y, rm x` otherwise. Once every size is `k`
/// or `k + 1` the moves alternate and each `add v, rm u` pair becomes
/// `jump u v`.
pub fn tar_to_tj(g: &Graph, seq: &ReconfSequence) -> Result<ReconfSequence> {
    let Rule::Tar { cap } = seq.rule else {
        return Err(Error::Input(format!(
            "expected a tar sequence, got {}",
            seq.rule
        )));
    };
    let k = seq.start.size();
    if cap > k + 1 {
        return Err(Error::Input(format!(
            "tar cap {cap} exceeds k + 1 = {}",
            k + 1
        )));
    }
    let end = validated(g, seq)?;
    if end.size() != k {
        return Err(Error::Input(format!(
            "endpoints differ in size ({k} vs {})",
            end.size()
        )));
    }

    let mut ops = seq.moves.clone();
    loop {
        let mut size = k as isize;
        let mut lowest = (size, 0usize);
        for (i, m) in ops.iter().enumerate() {
            size += if matches!(m, Move::Add(_)) { 1 } else { -1 };
            if size < lowest.0 {
                lowest = (size, i + 1);
            }
        }
        if lowest.0 >= k as isize {
            break;
        }
        let i = lowest.1;
        match (ops[i - 1], ops[i]) {
            (Move::Remove(x), Move::Add(y)) if x == y => {
                ops.drain(i - 1..=i);
            }
            (Move::Remove(x), Move::Add(y)) => {
                ops[i - 1] = Move::Add(y);
                ops[i] = Move::Remove(x);
            }
            _ => unreachable!("a strict minimum is entered by a removal and left by an addition"),
        }
    }

    let mut moves = Vec::with_capacity(ops.len() / 2);
    for pair in ops.chunks(2) {
        match *pair {
            [Move::Add(v), Move::Remove(u)] => {
                if u != v {
                    moves.push(Move::Jump(u, v));
                }
            }
            _ => unreachable!("sizes alternate between k and k + 1"),
        }
    }
    Ok(ReconfSequence {
        rule: Rule::Tj,
        start: seq.start.clone(),
        moves,
    })
}

/// Each `jump u v` becomes `add v, rm u`; the result respects cap `k + 1`.
pub fn tj_to_tar(g: &Graph, seq: &ReconfSequence) -> Result<ReconfSequence> {
    if seq.rule != Rule::Tj {
        return Err(Error::Input(format!(
            "expected a tj sequence, got {}",
            seq.rule
        )));
    }
    validated(g, seq)?;
    let moves = seq
        .moves
        .iter()
        .flat_map(|&m| match m {
            Move::Jump(u, v) => [Move::Add(v), Move::Remove(u)],
            _ => unreachable!("validated as tj"),
        })
        .collect();
    Ok(ReconfSequence {
        rule: Rule::tar_for(seq.start.size()),
        start: seq.start.clone(),
        moves,
    })
}

/// Split graph on `2n` vertices: clique copies `0..n` and independent twins
/// `n..2n`, with `v_i w_j` an edge iff `j ∈ N[i]` in `g`.
pub fn split_reduction(g: &Graph) -> ReductionOutput {
    let n = g.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
        edges.push((i, n + i));
        for &j in g.neighbors(i) {
            edges.push((i, n + j));
        }
    }
    let tags = (0..n)
        .map(Role::Clique)
        .chain((0..n).map(Role::Independent))
        .collect();
    ReductionOutput {
        original: g.clone(),
        graph: Graph::from_edges(2 * n, edges).expect("split reduction is simple"),
        vmap: (0..n).collect(),
        tags,
    }
}

/// Lifts a TJ sequence on the original graph to a TS sequence on the split
/// graph: every jump becomes a slide along a clique edge.
pub fn split_lift(r: &ReductionOutput, seq: &ReconfSequence) -> Result<ReconfSequence> {
    if seq.rule != Rule::Tj {
        return Err(Error::Input(format!(
            "expected a tj sequence, got {}",
            seq.rule
        )));
    }
    validated(&r.original, seq)?;
    let moves = seq
        .moves
        .iter()
        .map(|&m| match m {
            Move::Jump(u, v) => Move::Slide(r.vmap[u], r.vmap[v]),
            _ => unreachable!("validated as tj"),
        })
        .collect();
    Ok(ReconfSequence {
        rule: Rule::Ts,
        start: r.image(&seq.start),
        moves,
    })
}

/// Projects a TS sequence on the split graph, with both endpoints on the
/// clique side, back to a TJ sequence on the original graph.
///
/// A token entering an independent vertex `w` from `v_i` and later leaving it
/// for `v_k` is treated as jumping `i -> k` on entry (nothing when `i = k`);
/// `N[w] ⊆ N[v_k]` keeps every projected configuration dominating.
pub fn split_project(r: &ReductionOutput, seq: &ReconfSequence) -> Result<ReconfSequence> {
    if seq.rule != Rule::Ts {
        return Err(Error::Input(format!(
            "expected a ts sequence, got {}",
            seq.rule
        )));
    }
    let end = validated(&r.graph, seq)?;
    let back = r.preimage();
    let in_clique = |c: &Configuration| c.support().all(|v| back.contains_key(&v));
    if !in_clique(&seq.start) || !in_clique(&end) {
        return Err(Error::Input(
            "projection needs both endpoints on the clique side".into(),
        ));
    }

    let mut exit_to: HashMap<usize, Vertex> = HashMap::new();
    let mut pending: HashMap<Vertex, VecDeque<usize>> = HashMap::new();
    for (p, &m) in seq.moves.iter().enumerate() {
        let Move::Slide(a, b) = m else {
            unreachable!("validated as ts")
        };
        match (back.contains_key(&a), back.contains_key(&b)) {
            (true, false) => pending.entry(b).or_default().push_back(p),
            (false, true) => {
                let entry = pending
                    .get_mut(&a)
                    .and_then(VecDeque::pop_front)
                    .expect("token entered before leaving");
                exit_to.insert(entry, b);
            }
            _ => {}
        }
    }

    let mut moves = Vec::new();
    for (p, &m) in seq.moves.iter().enumerate() {
        let Move::Slide(a, b) = m else { unreachable!() };
        match (back.get(&a), back.get(&b)) {
            (Some(&i), Some(&k)) => moves.push(Move::Jump(i, k)),
            (Some(&i), None) => {
                let k = back[&exit_to[&p]];
                if i != k {
                    moves.push(Move::Jump(i, k));
                }
            }
            _ => {}
        }
    }
    Ok(ReconfSequence {
        rule: Rule::Tj,
        start: seq.start.map_vertices(|v| back[&v]),
        moves,
    })
}

/// Bipartite graph from a vertex-cover instance: original vertices (made
/// independent) `0..n`, pendant `y = n`, one gadget `z_uv` per edge, and the
/// apex `x` adjacent to every original vertex and to `y`.
pub fn bipartite_reduction(g: &Graph) -> ReductionOutput {
    let n = g.n();
    let orig_edges: Vec<_> = g.edges().collect();
    let y = n;
    let x = n + 1 + orig_edges.len();
    let mut edges = Vec::new();
    let mut tags: Vec<Role> = (0..n).map(Role::Original).collect();
    tags.push(Role::Pendant);
    for (e, &(u, v)) in orig_edges.iter().enumerate() {
        let z = n + 1 + e;
        edges.push((u, z));
        edges.push((v, z));
        tags.push(Role::Gadget(u, v));
    }
    tags.push(Role::Apex);
    edges.extend((0..n).map(|v| (v, x)));
    edges.push((y, x));
    ReductionOutput {
        original: g.clone(),
        graph: Graph::from_edges(x + 1, edges).expect("bipartite reduction is simple"),
        vmap: (0..n).collect(),
        tags,
    }
}

/// `g` plus a degree-two vertex `z_uv` on every edge, original edges kept.
pub fn incidence_subdivision(g: &Graph) -> ReductionOutput {
    let n = g.n();
    let orig_edges: Vec<_> = g.edges().collect();
    let mut edges = orig_edges.clone();
    let mut tags: Vec<Role> = (0..n).map(Role::Original).collect();
    for (e, &(u, v)) in orig_edges.iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
        tags.push(Role::Gadget(u, v));
    }
    ReductionOutput {
        original: g.clone(),
        graph: Graph::from_edges(n + orig_edges.len(), edges).expect("subdivision is simple"),
        vmap: (0..n).collect(),
        tags,
    }
}

/// Distinct positive labels, one per vertex, with a claimed bandwidth bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub labels: Vec<usize>,
    pub bandwidth_bound: usize,
}

impl Labeling {
    pub fn new(labels: Vec<usize>, bandwidth_bound: usize) -> Result<Self> {
        let mut seen = labels.clone();
        seen.sort_unstable();
        if seen.first() == Some(&0) {
            return Err(Error::Input("labels must be positive".into()));
        }
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("label {} used twice", w[0])));
        }
        Ok(Labeling {
            labels,
            bandwidth_bound,
        })
    }

    /// Largest label gap over the edges of `g`.
    pub fn bandwidth(&self, g: &Graph) -> usize {
        g.edges()
            .map(|(u, v)| self.labels[u].abs_diff(self.labels[v]))
            .max()
            .unwrap_or(0)
    }

    /// First edge whose gap exceeds the claimed bound.
    pub fn violation(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        g.edges()
            .find(|&(u, v)| self.labels[u].abs_diff(self.labels[v]) > self.bandwidth_bound)
    }
}

/// Relabels an incidence subdivision so its bandwidth is at most `k(k+1)`
/// given a bandwidth-`k` labeling of the original graph, then compacts the
/// labels to `1..=|V'|` preserving order.
pub fn bandwidth_relabel(lbl: &Labeling, k: usize, r: &ReductionOutput) -> Result<Labeling> {
    let g = &r.original;
    if lbl.labels.len() != g.n() {
        return Err(Error::Input(format!(
            "{} labels for {} vertices",
            lbl.labels.len(),
            g.n()
        )));
    }
    let lbl = Labeling::new(lbl.labels.clone(), k)?;
    if let Some((u, v)) = lbl.violation(g) {
        return Err(Error::Input(format!(
            "edge {u}-{v} has label gap {} > bandwidth {k}",
            lbl.labels[u].abs_diff(lbl.labels[v])
        )));
    }
    let spread = |i: usize| 1 + (i - 1) * (k + 1);
    let mut wide = vec![0usize; r.graph.n()];
    for (z, role) in r.tags.iter().enumerate() {
        wide[z] = match *role {
            Role::Original(v) => spread(lbl.labels[v]),
            Role::Gadget(a, b) => {
                let (u, v) = if lbl.labels[a] < lbl.labels[b] {
                    (a, b)
                } else {
                    (b, a)
                };
                spread(lbl.labels[u]) + (lbl.labels[v] - lbl.labels[u])
            }
            other => {
                return Err(Error::Input(format!(
                    "not an incidence subdivision (found {other:?})"
                )))
            }
        };
    }
    let mut order: Vec<Vertex> = (0..wide.len()).collect();
    order.sort_by_key(|&v| wide[v]);
    let mut labels = vec![0; wide.len()];
    for (rank, &v) in order.iter().enumerate() {
        labels[v] = rank + 1;
    }
    Labeling::new(labels, k * (k + 1))
}

/// A graph whose vertices carry human-readable names.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl NamedGraph {
    pub fn id(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name)
    }

    /// Panics on an unknown name.
    pub fn ids(&self, names: &[&str]) -> Vec<Vertex> {
        names
            .iter()
            .map(|n| self.id(n).unwrap_or_else(|| panic!("no vertex named {n}")))
            .collect()
    }
}

/// `ℓ` pairs of triangles `{u, w_i, a_i}`, `{v, w_i, b_i}`. Vertex order:
/// `u, v, w_1..w_ℓ, a_1..a_ℓ, b_1..b_ℓ`.
pub fn gen_gell(ell: usize) -> Result<NamedGraph> {
    if ell < 3 {
        return Err(Error::Input(format!("G_ell needs ell >= 3, got {ell}")));
    }
    let (u, v) = (0, 1);
    let w = |i: usize| 2 + i;
    let a = |i: usize| 2 + ell + i;
    let b = |i: usize| 2 + 2 * ell + i;
    let mut edges = Vec::with_capacity(6 * ell);
    for i in 0..ell {
        edges.extend([
            (u, w(i)),
            (u, a(i)),
            (w(i), a(i)),
            (v, w(i)),
            (v, b(i)),
            (w(i), b(i)),
        ]);
    }
    let mut names = vec!["u".to_string(), "v".to_string()];
    for prefix in ["w", "a", "b"] {
        names.extend((1..=ell).map(|i| format!("{prefix}{i}")));
    }
    Ok(NamedGraph {
        graph: Graph::from_edges(3 * ell + 2, edges)?,
        names,
    })
}

/// Star `S_n`: center 0, leaves `1..=n`.
pub fn gen_star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::Input("star needs at least one leaf".into()));
    }
    Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l)))
}

pub fn gen_path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::min_dominating_set_bruteforce;
    use crate::graph::tests::{complete, path};

    fn conf(vs: &[usize]) -> Configuration {
        Configuration::from_vertices(vs.iter().copied())
    }

    fn check(g: &Graph, seq: &ReconfSequence, target: &Configuration) {
        let inst = Instance::new(g.clone(), seq.start.clone(), target.clone(), seq.rule).unwrap();
        assert_eq!(verify_sequence(&inst, seq), Verdict::Valid);
    }

    #[test]
    fn tar_pair_fuses_into_jump() {
        let k3 = complete(3);
        let tar = ReconfSequence {
            rule: Rule::Tar { cap: 3 },
            start: conf(&[0, 1]),
            moves: vec![Move::Add(2), Move::Remove(0)],
        };
        let tj = tar_to_tj(&k3, &tar).unwrap();
        assert_eq!(tj.moves, vec![Move::Jump(0, 2)]);
        assert_eq!(tj_to_tar(&k3, &tj).unwrap(), tar);

        let empty = ReconfSequence::new(Rule::Tar { cap: 3 }, conf(&[0, 1]));
        assert!(tar_to_tj(&k3, &empty).unwrap().is_empty());
        assert!(tj_to_tar(&k3, &ReconfSequence::new(Rule::Tj, conf(&[0])))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn tar_dip_below_k_is_normalized() {
        // P5, k = 3, dipping to size 2:
        // {0,2,4} +1 {0,1,2,4} -0 {1,2,4} -2 {1,4} +3 {1,3,4}
        let p5 = path(5);
        let tar = ReconfSequence {
            rule: Rule::Tar { cap: 4 },
            start: conf(&[0, 2, 4]),
            moves: vec![Move::Add(1), Move::Remove(0), Move::Remove(2), Move::Add(3)],
        };
        check(&p5, &tar, &conf(&[1, 3, 4]));
        let tj = tar_to_tj(&p5, &tar).unwrap();
        check(&p5, &tj, &conf(&[1, 3, 4]));
        assert_eq!(tj.moves, vec![Move::Jump(0, 1), Move::Jump(2, 3)]);
    }

    #[test]
    fn tar_redundant_pair_cancels() {
        let p3 = path(3);
        let tar = ReconfSequence {
            rule: Rule::Tar { cap: 3 },
            start: conf(&[1, 1]),
            moves: vec![Move::Remove(1), Move::Add(1)],
        };
        assert!(tar_to_tj(&p3, &tar).unwrap().is_empty());
    }

    #[test]
    fn conversions_reject_bad_input() {
        let p3 = path(3);
        let bad = ReconfSequence {
            rule: Rule::Tar { cap: 2 },
            start: conf(&[1]),
            moves: vec![Move::Remove(1), Move::Add(0)],
        };
        assert!(tar_to_tj(&p3, &bad).is_err());
        let uneven = ReconfSequence {
            rule: Rule::Tar { cap: 2 },
            start: conf(&[1]),
            moves: vec![Move::Add(0)],
        };
        assert!(tar_to_tj(&p3, &uneven).is_err());
        let ts = ReconfSequence::new(Rule::Ts, conf(&[1]));
        assert!(tj_to_tar(&p3, &ts).is_err());
    }

    #[test]
    fn split_reduction_shape() {
        let r = split_reduction(&path(3));
        assert_eq!(r.graph.n(), 6);
        assert_eq!(r.graph.m(), 3 + 7);
        let degs: Vec<_> = (3..6).map(|w| r.graph.degree(w)).collect();
        assert_eq!(degs, vec![2, 3, 2]);
        let r1 = split_reduction(&Graph::empty(1));
        assert_eq!((r1.graph.n(), r1.graph.m()), (2, 1));
    }

    #[test]
    fn split_lift_and_project() {
        let p3 = path(3);
        let r = split_reduction(&p3);
        let tj = ReconfSequence {
            rule: Rule::Tj,
            start: conf(&[0, 2]),
            moves: vec![Move::Jump(0, 1)],
        };
        let ts = split_lift(&r, &tj).unwrap();
        assert_eq!(ts.moves, vec![Move::Slide(0, 1)]);
        check(&r.graph, &ts, &conf(&[1, 2]));
        assert_eq!(split_project(&r, &ts).unwrap(), tj);

        // a=0, b=1, c=2; w_b = 4
        let via_w = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0, 1]),
            moves: vec![Move::Slide(0, 4), Move::Slide(4, 2)],
        };
        check(&r.graph, &via_w, &conf(&[1, 2]));
        let projected = split_project(&r, &via_w).unwrap();
        assert_eq!(projected.moves, vec![Move::Jump(0, 2)]);
        check(&p3, &projected, &conf(&[1, 2]));

        let bounce = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0, 1]),
            moves: vec![Move::Slide(0, 4), Move::Slide(4, 0)],
        };
        assert!(split_project(&r, &bounce).unwrap().is_empty());

        let off_clique = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0, 1]),
            moves: vec![Move::Slide(0, 4)],
        };
        assert!(split_project(&r, &off_clique).is_err());
    }

    #[test]
    fn bipartite_reduction_shape() {
        let r = bipartite_reduction(&complete(3));
        assert_eq!((r.graph.n(), r.graph.m()), (8, 10));
        let r = bipartite_reduction(&complete(2));
        assert_eq!((r.graph.n(), r.graph.m()), (5, 5));
        let x = r.apex().unwrap();
        assert_eq!(r.graph.degree(x), 3);
        assert!(!r.graph.has_edge(0, 1));
        // two-coloring: original vertices and y on one side
        let side: Vec<bool> = r
            .tags
            .iter()
            .map(|t| matches!(t, Role::Original(_) | Role::Pendant))
            .collect();
        assert!(r.graph.edges().all(|(a, b)| side[a] != side[b]));
    }

    #[test]
    fn incidence_shape() {
        let r = incidence_subdivision(&complete(2));
        assert_eq!(r.graph, complete(3));
        let r = incidence_subdivision(&complete(3));
        assert_eq!((r.graph.n(), r.graph.m()), (6, 9));
        let r = incidence_subdivision(&path(3));
        assert_eq!((r.graph.n(), r.graph.m()), (5, 6));
        assert!(r.graph.max_degree() <= 2 * path(3).max_degree());
    }

    #[test]
    fn relabel_path() {
        let r = incidence_subdivision(&path(3));
        let out = bandwidth_relabel(&Labeling::new(vec![1, 2, 3], 1).unwrap(), 1, &r).unwrap();
        // vertices 0,1,2 then z01 (3), z12 (4): spread labels 1,3,5 and 2,4
        assert_eq!(out.labels, vec![1, 3, 5, 2, 4]);
        assert_eq!(out.bandwidth(&r.graph), 2);
        assert_eq!(out.bandwidth_bound, 2);

        let single = incidence_subdivision(&Graph::empty(1));
        let out = bandwidth_relabel(&Labeling::new(vec![1], 0).unwrap(), 0, &single).unwrap();
        assert_eq!(out.labels, vec![1]);
    }

    #[test]
    fn relabel_rejects_bad_labeling() {
        let r = incidence_subdivision(&path(3));
        let err = bandwidth_relabel(
            &Labeling {
                labels: vec![1, 3, 2],
                bandwidth_bound: 1,
            },
            1,
            &r,
        )
        .unwrap_err();
        assert!(err.to_string().contains("edge 0-1"), "{err}");
        assert!(Labeling::new(vec![1, 1, 2], 1).is_err());
        assert!(bandwidth_relabel(
            &Labeling {
                labels: vec![1, 2, 3],
                bandwidth_bound: 1
            },
            1,
            &split_reduction(&path(3))
        )
        .is_err());
    }

    #[test]
    fn gell_shape() {
        let g3 = gen_gell(3).unwrap();
        assert_eq!((g3.graph.n(), g3.graph.m()), (11, 18));
        assert_eq!(min_dominating_set_bruteforce(&g3.graph).unwrap().0, 2);
        let uv: Vec<_> = g3.ids(&["u", "v"]);
        assert!(g3
            .graph
            .dominates(&crate::graph::VertexSet::from_vertices(11, uv)));
        assert!(gen_gell(2).is_err());
        let g4 = gen_gell(4).unwrap();
        assert_eq!((g4.graph.n(), g4.graph.m()), (14, 24));
    }

    #[test]
    fn star_shape() {
        let s = gen_star(3).unwrap();
        assert_eq!((s.n(), s.m()), (4, 3));
        assert_eq!(min_dominating_set_bruteforce(&s).unwrap().0, 1);
        assert!(gen_star(0).is_err());
    }

    mod props {
        use super::*;
        use crate::oracle::{reachable, Reachability};
        use proptest::prelude::*;

        fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(
                n,
                pairs.zip(bits.iter()).filter(|(_, b)| **b).map(|(e, _)| e),
            )
            .unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn conversions_preserve_endpoints(
                bits in proptest::collection::vec(any::<bool>(), 10),
                a in proptest::collection::vec(0usize..5, 2),
                b in proptest::collection::vec(0usize..5, 2),
            ) {
                let g = graph_from_bits(5, &bits);
                let (a, b) = (conf(&a), conf(&b));
                let ok = |c: &Configuration| crate::config::is_dominating(&g, c).unwrap();
                prop_assume!(ok(&a) && ok(&b));
                let inst = Instance::new(g.clone(), a.clone(), b.clone(), Rule::Tj).unwrap();
                if let Reachability::Yes(tj) = reachable(&inst).unwrap() {
                    let tar = tj_to_tar(&g, &tj).unwrap();
                    check(&g, &tar, &b);
                    let back = tar_to_tj(&g, &tar).unwrap();
                    check(&g, &back, &b);

                    let r = split_reduction(&g);
                    let lifted = split_lift(&r, &tj).unwrap();
                    check(&r.graph, &lifted, &r.image(&b));
                    let projected = split_project(&r, &lifted).unwrap();
                    check(&g, &projected, &b);
                }
                let tar_inst = Instance::new(g.clone(), a, b.clone(), Rule::tar_for(2)).unwrap();
                if let Reachability::Yes(tar) = reachable(&tar_inst).unwrap() {
                    check(&g, &tar_to_tj(&g, &tar).unwrap(), &b);
                }
            }
        }
    }
}
