//! Token sliding on dually chordal graphs.
//!
//! A maximum neighborhood ordering (mno) yields a canonical minimum dominating
//! set `C` through the MDS labeling scan. Any dominating configuration can be
//! slid onto a superset of `C` with at most two slides per element of `C`;
//! leftover tokens then walk to a center of their component. Two
//! configurations are reachable iff every component holds the same number of
//! tokens in both.

use std::collections::{HashSet, VecDeque};

use crate::config::{is_dominating, Configuration, Move, ReconfSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{
    component_lists, min_eccentricity_vertex, shortest_path, Graph, IntervalFamily, Vertex,
    VertexSet,
};

/// Default vertex limit for [`find_mno`].
pub const FIND_MNO_LIMIT: usize = 12;

/// A vertex ordering with a maximum neighbor for every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mno {
    order: Vec<Vertex>,
    pos: Vec<usize>,
    mn: Vec<Vertex>,
}

impl Mno {
    /// `order[i]` is the vertex at position `i`; `mn[v]` is indexed by vertex.
    pub fn new(order: Vec<Vertex>, mn: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::Input(format!(
                    "ordering is not a permutation of 0..{n}"
                )));
            }
            pos[v] = i;
        }
        if mn.len() != n {
            return Err(Error::Input(format!(
                "maximum-neighbor map has {} entries, expected {n}",
                mn.len()
            )));
        }
        if let Some(&bad) = mn.iter().find(|&&w| w >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        Ok(Mno { order, pos, mn })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    pub fn mn(&self, v: Vertex) -> Vertex {
        self.mn[v]
    }

    pub fn mn_map(&self) -> &[Vertex] {
        &self.mn
    }

    fn suffix(&self, i: usize) -> VertexSet {
        VertexSet::from_vertices(self.len(), self.order[i..].iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MnoCheck {
    Valid,
    /// `mn(vertex)` fails at `position`: `witness` is either `mn(vertex)`
    /// itself (not a neighbor in the suffix) or a suffix neighbor whose
    /// neighborhood escapes `N[mn(vertex)]`.
    Invalid {
        position: usize,
        vertex: Vertex,
        witness: Vertex,
    },
}

impl MnoCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, MnoCheck::Valid)
    }
}

fn suffix_neighborhood(g: &Graph, v: Vertex, suffix: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    out.insert(v);
    for &w in g.neighbors(v) {
        if suffix.contains(w) {
            out.insert(w);
        }
    }
    out
}

pub fn is_mno(g: &Graph, m: &Mno) -> Result<MnoCheck> {
    if m.len() != g.n() {
        return Err(Error::Input(format!(
            "ordering covers {} vertices, graph has {}",
            m.len(),
            g.n()
        )));
    }
    for (i, &v) in m.order.iter().enumerate() {
        let suffix = m.suffix(i);
        let nv = suffix_neighborhood(g, v, &suffix);
        let best = m.mn[v];
        if !nv.contains(best) {
            return Ok(MnoCheck::Invalid {
                position: i,
                vertex: v,
                witness: best,
            });
        }
        let nbest = suffix_neighborhood(g, best, &suffix);
        let escaping = nv
            .iter()
            .find(|&w| !suffix_neighborhood(g, w, &suffix).is_subset(&nbest));
        if let Some(w) = escaping {
            return Ok(MnoCheck::Invalid {
                position: i,
                vertex: v,
                witness: w,
            });
        }
    }
    Ok(MnoCheck::Valid)
}

/// Rooted at vertex 0: reverse BFS order, each vertex pointing to its parent.
pub fn mno_from_tree(g: &Graph) -> Result<Mno> {
    if !g.is_tree() {
        return Err(Error::Input("graph is not a tree".into()));
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut bfs = Vec::with_capacity(n);
    parent[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        bfs.push(u);
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    bfs.reverse();
    Mno::new(bfs, parent)
}

/// Intersection graph ordered by right endpoint (then left, then index);
/// each vertex's maximum neighbor is its latest neighbor in that order.
pub fn mno_from_intervals(f: &IntervalFamily) -> Result<(Graph, Mno)> {
    let g = f.to_graph();
    let iv = f.intervals();
    let mut order: Vec<Vertex> = (0..iv.len()).collect();
    order.sort_by(|&a, &b| {
        iv[a]
            .right
            .total_cmp(&iv[b].right)
            .then(iv[a].left.total_cmp(&iv[b].left))
            .then(a.cmp(&b))
    });
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mn = (0..order.len())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .max_by_key(|&w| pos[w])
                .unwrap_or(v)
        })
        .collect();
    let m = Mno::new(order, mn)?;
    Ok((g, m))
}

/// Backtracking search for an mno, limited to [`FIND_MNO_LIMIT`] vertices.
pub fn find_mno(g: &Graph) -> Result<Option<Mno>> {
    find_mno_with_limit(g, FIND_MNO_LIMIT)
}

pub fn find_mno_with_limit(g: &Graph, limit: usize) -> Result<Option<Mno>> {
    let n = g.n();
    if n > limit || n > 64 {
        return Err(Error::Resource(format!(
            "mno search limited to {} vertices, graph has {n}",
            limit.min(64)
        )));
    }
    let nb: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |acc, &w| acc | 1 << w)
        })
        .collect();
    let mut failed = HashSet::new();
    let mut order = Vec::with_capacity(n);
    let mut mn = vec![0; n];
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if search_mno(&nb, full, &mut order, &mut mn, &mut failed) {
        Ok(Some(Mno::new(order, mn)?))
    } else {
        Ok(None)
    }
}

/// Maximum neighbors of `v` inside `rest`, smallest id first.
fn max_neighbors(nb: &[u64], rest: u64, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
    let nv = nb[v] & rest;
    bits(nv).filter(move |&c| bits(nv).all(|w| nb[w] & rest & !nb[c] == 0))
}

fn bits(mut x: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            b
        })
    })
}

fn search_mno(
    nb: &[u64],
    rest: u64,
    order: &mut Vec<Vertex>,
    mn: &mut [Vertex],
    failed: &mut HashSet<u64>,
) -> bool {
    if rest == 0 {
        return true;
    }
    if failed.contains(&rest) {
        return false;
    }
    let mut proper = Vec::new();
    let mut selfish = Vec::new();
    for v in bits(rest) {
        let mut cands = max_neighbors(nb, rest, v);
        match cands.find(|&c| c != v) {
            Some(c) => proper.push((v, c)),
            None if max_neighbors(nb, rest, v).next().is_some() => selfish.push((v, v)),
            None => {}
        }
    }
    for (v, c) in proper.into_iter().chain(selfish) {
        order.push(v);
        mn[v] = c;
        if search_mno(nb, rest & !(1 << v), order, mn, failed) {
            return true;
        }
        order.pop();
    }
    failed.insert(rest);
    false
}

/// Output of MDS: pairs `(t_i, c_i)` with `c_i = mn(t_i)`, in the order the
/// triggers were found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriggeredDs {
    pub pairs: Vec<(Vertex, Vertex)>,
    /// Canonical vertices in mno order.
    pub canonical: Vec<Vertex>,
    /// Triggers in mno order.
    pub triggers: Vec<Vertex>,
}

impl TriggeredDs {
    pub fn gamma(&self) -> usize {
        self.pairs.len()
    }

    pub fn canonical_configuration(&self) -> Configuration {
        Configuration::from_vertices(self.canonical.iter().copied())
    }

    /// Whether the discovery order of the `c_i` agrees with their mno order.
    pub fn pairs_sorted(&self) -> bool {
        self.pairs
            .iter()
            .map(|&(_, c)| c)
            .eq(self.canonical.iter().copied())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    Bounded,
    Required,
    Free,
}

/// Labeling scan: every still-bounded vertex triggers its maximum neighbor.
pub fn mds(g: &Graph, m: &Mno) -> Result<TriggeredDs> {
    if let MnoCheck::Invalid {
        position,
        vertex,
        witness,
    } = is_mno(g, m)?
    {
        return Err(Error::Input(format!(
            "not a maximum neighborhood ordering: vertex {vertex} at position {position} (witness {witness})"
        )));
    }
    let mut label = vec![Label::Bounded; g.n()];
    let mut pairs = Vec::new();
    let mut canonical = Vec::new();
    let mut triggers = Vec::new();
    for &v in m.order() {
        if label[v] == Label::Bounded {
            let c = m.mn(v);
            label[c] = Label::Required;
            triggers.push(v);
            pairs.push((v, c));
            for u in std::iter::once(c).chain(g.neighbors(c).iter().copied()) {
                if label[u] != Label::Required {
                    label[u] = Label::Free;
                }
            }
        }
        if label[v] == Label::Required {
            canonical.push(v);
        }
    }
    Ok(TriggeredDs {
        pairs,
        canonical,
        triggers,
    })
}

/// Slides `d` onto a configuration containing every canonical vertex, with at
/// most two slides per pair.
pub fn canonicalize(
    g: &Graph,
    m: &Mno,
    tds: &TriggeredDs,
    d: &Configuration,
) -> Result<(ReconfSequence, Configuration)> {
    if !is_dominating(g, d)? {
        return Err(Error::Input(format!("{d} is not a dominating set")));
    }
    if d.size() < tds.gamma() {
        return Err(Error::Input(format!(
            "{} tokens cannot cover {} canonical vertices",
            d.size(),
            tds.gamma()
        )));
    }
    let mut cur = d.clone();
    let mut moves = Vec::new();
    let mut placed = Vec::with_capacity(tds.gamma());
    let mut slide = |cur: &mut Configuration, u: Vertex, v: Vertex| {
        debug_assert!(g.has_edge(u, v), "slide {u}->{v} off an edge");
        cur.remove(u);
        cur.add(v);
        moves.push(Move::Slide(u, v));
    };
    for &(t, c) in &tds.pairs {
        if !cur.contains(c) {
            let x = cur
                .support()
                .filter(|&x| x == t || g.has_edge(x, t))
                .min_by_key(|&x| m.position(x))
                .expect("a dominating configuration covers every trigger");
            assert!(
                !placed.contains(&x),
                "token on canonical vertex {x} chosen again"
            );
            if g.has_edge(x, c) {
                slide(&mut cur, x, c);
            } else {
                let y = m.mn(x);
                slide(&mut cur, x, y);
                slide(&mut cur, y, c);
            }
        }
        placed.push(c);
    }
    Ok((
        ReconfSequence {
            rule: Rule::Ts,
            start: d.clone(),
            moves,
        },
        cur,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DcOutcome {
    /// `meeting` is the common configuration both halves reach;
    /// `source_moves` counts the moves before it.
    Yes {
        sequence: ReconfSequence,
        meeting: Configuration,
        source_moves: usize,
    },
    /// Token counts differ on the component with this smallest vertex.
    ComponentMismatch { component: Vertex },
}

impl DcOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, DcOutcome::Yes { .. })
    }

    pub fn sequence(&self) -> Option<&ReconfSequence> {
        match self {
            DcOutcome::Yes { sequence, .. } => Some(sequence),
            DcOutcome::ComponentMismatch { .. } => None,
        }
    }
}

/// Full solver: canonicalize both endpoints, gather spare tokens on a
/// minimum-eccentricity vertex of each component, and meet in the middle.
pub fn solve_dually_chordal(
    g: &Graph,
    m: &Mno,
    source: &Configuration,
    target: &Configuration,
) -> Result<DcOutcome> {
    if source.size() != target.size() {
        return Err(Error::Input(format!(
            "source has {} tokens, target {}",
            source.size(),
            target.size()
        )));
    }
    for (name, c) in [("source", source), ("target", target)] {
        if !is_dominating(g, c)? {
            return Err(Error::Input(format!("{name} {c} is not a dominating set")));
        }
    }
    let tds = mds(g, m)?;
    let comps = component_lists(g);
    for comp in &comps {
        let inside = |c: &Configuration| comp.iter().map(|&v| c.count(v)).sum::<usize>();
        if inside(source) != inside(target) {
            return Ok(DcOutcome::ComponentMismatch { component: comp[0] });
        }
    }
    let mut hubs = vec![0; g.n()];
    for comp in &comps {
        let hub = comp[min_eccentricity_vertex(&g.induced(comp))?];
        comp.iter().for_each(|&v| hubs[v] = hub);
    }
    let half = |d: &Configuration| -> Result<(Vec<Move>, Configuration)> {
        let (seq, mut cur) = canonicalize(g, m, &tds, d)?;
        let mut moves = seq.moves;
        for a in cur.difference(&tds.canonical_configuration()).tokens() {
            let path = shortest_path(g, a, hubs[a])?.expect("hub lies in the same component");
            for w in path.windows(2) {
                cur.remove(w[0]);
                cur.add(w[1]);
                moves.push(Move::Slide(w[0], w[1]));
            }
        }
        Ok((moves, cur))
    };
    let (mut moves, meeting) = half(source)?;
    let (back, meeting_t) = half(target)?;
    debug_assert_eq!(meeting, meeting_t);
    let source_moves = moves.len();
    moves.extend(back.into_iter().rev().map(Move::reversed));
    Ok(DcOutcome::Yes {
        sequence: ReconfSequence {
            rule: Rule::Ts,
            start: source.clone(),
            moves,
        },
        meeting,
        source_moves,
    })
}
