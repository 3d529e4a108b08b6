//! Token sliding on joins and cographs.
//!
//! A join `G1 + G2` is decided by three sufficient conditions (at least three
//! tokens; a side with domination number at most two; both sides connected).
//! When none holds the instance has two tokens, one per side, and is answered
//! by whether each token can stay inside its own component. Cographs recurse
//! through their cotree: union nodes split the tokens per child, join nodes go
//! to the join decision.

use std::fmt;

use crate::config::{is_dominating, Configuration, Move, ReconfSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{component_labels, shortest_path, Graph, Vertex, VertexSet};

/// Cograph decomposition tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(Vertex),
    /// Disjoint union; children pairwise non-adjacent.
    Union(Vec<Cotree>),
    /// Join; children pairwise completely adjacent.
    Join(Vec<Cotree>),
}

impl Cotree {
    /// Vertices below this node, ascending.
    pub fn span(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<Vertex>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().for_each(|c| c.collect(out)),
        }
    }

    /// The graph this cotree describes, on `n` vertices.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        let span = self.span();
        if span != (0..n).collect::<Vec<_>>() {
            return Err(Error::Input(format!(
                "cotree leaves do not cover 0..{n} exactly once"
            )));
        }
        let mut edges = Vec::new();
        self.edges_into(&mut edges)?;
        Graph::from_edges(n, edges)
    }

    fn edges_into(&self, edges: &mut Vec<(Vertex, Vertex)>) -> Result<()> {
        match self {
            Cotree::Leaf(_) => Ok(()),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                if cs.len() < 2 {
                    return Err(Error::Input(
                        "cotree inner node with fewer than two children".into(),
                    ));
                }
                for c in cs {
                    c.edges_into(edges)?;
                }
                if let Cotree::Join(_) = self {
                    let spans: Vec<_> = cs.iter().map(Cotree::span).collect();
                    for i in 0..spans.len() {
                        for j in i + 1..spans.len() {
                            for &u in &spans[i] {
                                edges.extend(spans[j].iter().map(|&v| (u, v)));
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    /// Same tree up to the order of children.
    pub fn equivalent(&self, other: &Cotree) -> bool {
        fn canon(t: &Cotree) -> String {
            match t {
                Cotree::Leaf(v) => v.to_string(),
                Cotree::Union(cs) | Cotree::Join(cs) => {
                    let mut parts: Vec<_> = cs.iter().map(canon).collect();
                    parts.sort();
                    let tag = if matches!(t, Cotree::Join(_)) {
                        'J'
                    } else {
                        'U'
                    };
                    format!("{tag}({})", parts.join(","))
                }
            }
        }
        canon(self) == canon(other)
    }
}

/// Parenthesized term with 1-based leaves, e.g. `J(U(1,3),2)`.
impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(v) => write!(f, "{}", v + 1),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                write!(
                    f,
                    "{}(",
                    if matches!(self, Cotree::Join(_)) {
                        "J"
                    } else {
                        "U"
                    }
                )?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Certificate that a graph is not a cograph: an induced subgraph on more than
/// one vertex that is connected with a connected complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotCograph {
    pub vertices: Vec<Vertex>,
}

/// Builds the cotree by splitting on components, then on co-components.
pub fn recognize_cograph(g: &Graph) -> std::result::Result<Cotree, NotCograph> {
    if g.n() == 0 {
        return Err(NotCograph {
            vertices: Vec::new(),
        });
    }
    build_cotree(g, &(0..g.n()).collect::<Vec<_>>())
}

fn build_cotree(g: &Graph, vs: &[Vertex]) -> std::result::Result<Cotree, NotCograph> {
    if vs.len() == 1 {
        return Ok(Cotree::Leaf(vs[0]));
    }
    let h = g.induced(vs);
    let parts = |labels: Vec<usize>| {
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        for (i, l) in labels.into_iter().enumerate() {
            out[l].push(vs[i]);
        }
        out
    };
    let comps = parts(component_labels(&h));
    if comps.len() > 1 {
        return comps
            .iter()
            .map(|c| build_cotree(g, c))
            .collect::<std::result::Result<_, _>>()
            .map(Cotree::Union);
    }
    let cocomps = parts(component_labels(&h.complement()));
    if cocomps.len() > 1 {
        return cocomps
            .iter()
            .map(|c| build_cotree(g, c))
            .collect::<std::result::Result<_, _>>()
            .map(Cotree::Join);
    }
    Err(NotCograph {
        vertices: vs.to_vec(),
    })
}

/// Whether the subgraph induced by `within` has a dominating set of size at
/// most `bound` (1 or 2), by trying every single vertex and pair.
pub fn gamma_at_most(g: &Graph, within: &VertexSet, bound: usize) -> Result<bool> {
    if !(1..=2).contains(&bound) {
        return Err(Error::Input(format!("bound must be 1 or 2, got {bound}")));
    }
    let vs = within.to_vec();
    if vs.is_empty() {
        return Ok(true);
    }
    let covers = |picks: &[Vertex]| {
        vs.iter()
            .all(|&w| picks.iter().any(|&p| p == w || g.has_edge(p, w)))
    };
    if vs.iter().any(|&v| covers(&[v])) {
        return Ok(true);
    }
    if bound == 1 {
        return Ok(false);
    }
    Ok(smallest_dominating_pair(g, &vs).is_some())
}

fn smallest_dominating_pair(g: &Graph, vs: &[Vertex]) -> Option<(Vertex, Vertex)> {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if vs
                .iter()
                .all(|&w| w == a || w == b || g.has_edge(a, w) || g.has_edge(b, w))
            {
                return Some((a, b));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinReason {
    /// At least three tokens.
    ConditionI,
    /// Some side has domination number at most two.
    ConditionII,
    /// Both sides connected.
    ConditionIII,
    /// Tokens can stay inside matching components.
    ComponentMatch,
    /// Token counts or components do not line up.
    ComponentMismatch,
    TrivialEqual,
}

impl fmt::Display for JoinReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JoinReason::ConditionI => "condition-(i)",
            JoinReason::ConditionII => "condition-(ii)",
            JoinReason::ConditionIII => "condition-(iii)",
            JoinReason::ComponentMatch => "component-match",
            JoinReason::ComponentMismatch => "component-mismatch",
            JoinReason::TrivialEqual => "trivial-equal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinVerdict {
    pub answer: Answer,
    pub reason: JoinReason,
    /// Present iff the answer is yes.
    pub sequence: Option<ReconfSequence>,
}

impl JoinVerdict {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

struct Side {
    vertices: Vec<Vertex>,
    gamma_le1: bool,
    gamma_le2: bool,
    /// Lexicographically smallest dominating pair, when `γ = 2`.
    pair: Option<(Vertex, Vertex)>,
    component: Vec<usize>,
    connected: bool,
}

/// Decision and construction on `g1 + g2`. Vertex ids follow
/// [`Graph::join`]: `g1` keeps `0..n1`, `g2` is shifted to `n1..n1+n2`.
pub struct JoinSolver {
    graph: Graph,
    g1: Graph,
    g2: Graph,
    n1: usize,
    sides: [Side; 2],
}

impl JoinSolver {
    pub fn new(g1: &Graph, g2: &Graph) -> Result<Self> {
        if g1.n() == 0 || g2.n() == 0 {
            return Err(Error::Input(
                "both sides of a join must be non-empty".into(),
            ));
        }
        let graph = Graph::join(g1, g2);
        let n1 = g1.n();
        // One vertex from each side dominates the join.
        debug_assert!(
            is_dominating(&graph, &Configuration::from_vertices([0, n1])).unwrap_or(false)
        );
        let side = |offset: usize, h: &Graph| {
            let vertices: Vec<Vertex> = (offset..offset + h.n()).collect();
            let within = VertexSet::from_vertices(graph.n(), vertices.iter().copied());
            let gamma_le1 = gamma_at_most(&graph, &within, 1).expect("bound 1");
            let pair = if gamma_le1 {
                None
            } else {
                smallest_dominating_pair(&graph, &vertices)
            };
            Side {
                gamma_le1,
                gamma_le2: gamma_le1 || pair.is_some(),
                pair,
                component: component_labels(h),
                connected: h.is_connected(),
                vertices,
            }
        };
        let sides = [side(0, g1), side(n1, g2)];
        Ok(JoinSolver {
            g1: g1.clone(),
            g2: g2.clone(),
            n1,
            sides,
            graph,
        })
    }

    /// The joined graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn side_of(&self, v: Vertex) -> usize {
        usize::from(v >= self.n1)
    }

    fn count_on(&self, c: &Configuration, side: usize) -> usize {
        c.entries()
            .filter(|&(v, _)| self.side_of(v) == side)
            .map(|(_, k)| k)
            .sum()
    }

    fn check(&self, source: &Configuration, target: &Configuration) -> Result<()> {
        if source.size() != target.size() {
            return Err(Error::Input(format!(
                "source has {} tokens, target {}",
                source.size(),
                target.size()
            )));
        }
        for (name, c) in [("source", source), ("target", target)] {
            if !is_dominating(&self.graph, c)? {
                return Err(Error::Input(format!(
                    "{name} {c} does not dominate the join"
                )));
            }
        }
        Ok(())
    }

    /// Cross pair `(token on side 0, token on side 1)` of a two-token configuration.
    fn cross_pair(&self, c: &Configuration) -> Option<(Vertex, Vertex)> {
        let t = c.tokens();
        match t.as_slice() {
            &[a, b] if self.side_of(a) == 0 && self.side_of(b) == 1 => Some((a, b)),
            _ => None,
        }
    }

    fn local(&self, v: Vertex) -> (usize, Vertex) {
        let s = self.side_of(v);
        (s, if s == 0 { v } else { v - self.n1 })
    }

    /// Verdict and reason without building a sequence.
    pub fn classify(
        &self,
        source: &Configuration,
        target: &Configuration,
    ) -> Result<(Answer, JoinReason)> {
        self.check(source, target)?;
        Ok(self.classify_unchecked(source, target))
    }

    fn classify_unchecked(
        &self,
        source: &Configuration,
        target: &Configuration,
    ) -> (Answer, JoinReason) {
        let [s1, s2] = &self.sides;
        if source == target {
            (Answer::Yes, JoinReason::TrivialEqual)
        } else if source.size() >= 3 {
            (Answer::Yes, JoinReason::ConditionI)
        } else if s1.gamma_le2 || s2.gamma_le2 {
            (Answer::Yes, JoinReason::ConditionII)
        } else if s1.connected && s2.connected {
            (Answer::Yes, JoinReason::ConditionIII)
        } else {
            let (a1, a2) = self
                .cross_pair(source)
                .expect("without a small-γ side every dominating pair is cross");
            let (b1, b2) = self
                .cross_pair(target)
                .expect("without a small-γ side every dominating pair is cross");
            let same = |a: Vertex, b: Vertex| {
                let ((sa, la), (_, lb)) = (self.local(a), self.local(b));
                self.sides[sa].component[la] == self.sides[sa].component[lb]
            };
            if same(a1, b1) && same(a2, b2) {
                (Answer::Yes, JoinReason::ComponentMatch)
            } else {
                (Answer::No, JoinReason::ComponentMismatch)
            }
        }
    }

    pub fn solve(&self, source: &Configuration, target: &Configuration) -> Result<JoinVerdict> {
        self.check(source, target)?;
        let (answer, reason) = self.classify_unchecked(source, target);
        let moves = match (answer, reason) {
            (Answer::No, _) => {
                return Ok(JoinVerdict {
                    answer,
                    reason,
                    sequence: None,
                })
            }
            (_, JoinReason::TrivialEqual) => Vec::new(),
            (_, JoinReason::ConditionI) => self.route_two_sided(source, target),
            (_, JoinReason::ConditionII) => {
                let there = self.to_canonical(source);
                let back = self.to_canonical(target);
                there
                    .into_iter()
                    .chain(back.into_iter().rev().map(Move::reversed))
                    .collect()
            }
            (_, JoinReason::ConditionIII | JoinReason::ComponentMatch) => {
                self.slide_within_sides(source, target)
            }
            (_, JoinReason::ComponentMismatch) => unreachable!("mismatch is a no"),
        };
        Ok(JoinVerdict {
            answer,
            reason,
            sequence: Some(ReconfSequence {
                rule: Rule::Ts,
                start: source.clone(),
                moves,
            }),
        })
    }

    /// Three or more tokens. Keeps at least one token on each side at every
    /// intermediate step: surplus/deficit pairs on opposite sides slide
    /// directly over the join; same-side relocations detour through the other
    /// side, or borrow a token from it when the mover is its side's last one.
    fn route_two_sided(&self, source: &Configuration, target: &Configuration) -> Vec<Move> {
        let mut moves = Vec::new();
        let mut cur = source.clone();
        let first_on = |side: usize| self.sides[side].vertices[0];
        let step = |cur: &mut Configuration, moves: &mut Vec<Move>, u: Vertex, v: Vertex| {
            debug_assert!(self.graph.has_edge(u, v));
            cur.remove(u);
            cur.add(v);
            moves.push(Move::Slide(u, v));
        };

        for side in 0..2 {
            if self.count_on(&cur, side) == cur.size() {
                let x = cur.support().next().expect("non-empty");
                let other = 1 - side;
                let y = target
                    .support()
                    .find(|&v| self.side_of(v) == other)
                    .unwrap_or_else(|| first_on(other));
                step(&mut cur, &mut moves, x, y);
                break;
            }
        }

        let mut goal = target.clone();
        let mut last = None;
        for side in 0..2 {
            if self.count_on(target, side) == target.size() {
                let x = target.support().next().expect("non-empty");
                let y = first_on(1 - side);
                goal.remove(x);
                goal.add(y);
                last = Some(Move::Slide(y, x));
                break;
            }
        }

        loop {
            let surplus = cur.difference(&goal);
            let deficit = goal.difference(&cur);
            if surplus.is_empty() {
                break;
            }
            let cross = surplus.support().find_map(|x| {
                let sx = self.side_of(x);
                if self.count_on(&cur, sx) < 2 {
                    return None;
                }
                deficit
                    .support()
                    .find(|&y| self.side_of(y) != sx)
                    .map(|y| (x, y))
            });
            if let Some((x, y)) = cross {
                step(&mut cur, &mut moves, x, y);
                continue;
            }
            let (x, y) = surplus
                .support()
                .find_map(|x| {
                    deficit
                        .support()
                        .find(|&y| self.side_of(y) == self.side_of(x))
                        .map(|y| (x, y))
                })
                .expect("some surplus token has a same-side deficit");
            let other = 1 - self.side_of(x);
            if self.count_on(&cur, self.side_of(x)) > 1 {
                let z = first_on(other);
                step(&mut cur, &mut moves, x, z);
                step(&mut cur, &mut moves, z, y);
            } else {
                let o = cur
                    .support()
                    .find(|&v| self.side_of(v) == other)
                    .expect("other side holds the rest");
                step(&mut cur, &mut moves, o, y);
                step(&mut cur, &mut moves, x, o);
            }
        }
        moves.extend(last);
        moves
    }

    /// Condition (ii): reach a canonical configuration. With a universal
    /// vertex `h` every token is gathered on `h`; otherwise the canonical pair
    /// is the smallest vertex of each side.
    fn to_canonical(&self, d: &Configuration) -> Vec<Move> {
        let mut moves = Vec::new();
        if let Some(h) = self.universal_vertex() {
            for t in d.tokens() {
                if t != h {
                    moves.push(Move::Slide(t, h));
                }
            }
            return moves;
        }
        let canon = [self.sides[0].vertices[0], self.sides[1].vertices[0]];
        let mut tokens = d.tokens();
        if tokens == canon {
            return moves;
        }
        if self.side_of(tokens[0]) != self.side_of(tokens[1]) {
            let p = if self.sides[0].gamma_le2 { 0 } else { 1 };
            let (w1, w2) = self.sides[p]
                .pair
                .expect("γ = 2 side has a dominating pair");
            let (dp, dq) = if self.side_of(tokens[0]) == p {
                (tokens[0], tokens[1])
            } else {
                (tokens[1], tokens[0])
            };
            let (wa, wb) = if dp == w1 || self.graph.has_edge(dp, w1) {
                (w1, w2)
            } else {
                (w2, w1)
            };
            if dp != wa {
                moves.push(Move::Slide(dp, wa));
            }
            moves.push(Move::Slide(dq, wb));
            tokens = vec![wa.min(wb), wa.max(wb)];
        }
        let x = self.side_of(tokens[0]);
        let (ux, uy) = (canon[x], canon[1 - x]);
        let (a, b) = if tokens[0] == ux || self.graph.has_edge(tokens[0], ux) {
            (tokens[0], tokens[1])
        } else {
            (tokens[1], tokens[0])
        };
        moves.push(Move::Slide(b, uy));
        if a != ux {
            moves.push(Move::Slide(a, ux));
        }
        moves
    }

    fn universal_vertex(&self) -> Option<Vertex> {
        let n = self.graph.n();
        self.sides
            .iter()
            .filter(|s| s.gamma_le1)
            .flat_map(|s| s.vertices.iter().copied())
            .find(|&v| self.graph.degree(v) == n - 1)
    }

    /// Two cross tokens, each moved along a shortest path inside its side.
    fn slide_within_sides(&self, source: &Configuration, target: &Configuration) -> Vec<Move> {
        let (a1, a2) = self.cross_pair(source).expect("cross pair");
        let (b1, b2) = self.cross_pair(target).expect("cross pair");
        let mut moves = Vec::new();
        for (a, b) in [(a1, b1), (a2, b2)] {
            let (s, la) = self.local(a);
            let (_, lb) = self.local(b);
            let (h, offset) = if s == 0 {
                (&self.g1, 0)
            } else {
                (&self.g2, self.n1)
            };
            let path = shortest_path(h, la, lb)
                .expect("in range")
                .expect("same component");
            moves.extend(
                path.windows(2)
                    .map(|w| Move::Slide(w[0] + offset, w[1] + offset)),
            );
        }
        moves
    }
}

/// Decides token sliding between two dominating sets of `g1 + g2`, with a
/// sequence on yes. Configurations use the ids of [`Graph::join`].
pub fn decide_join(
    g1: &Graph,
    g2: &Graph,
    source: &Configuration,
    target: &Configuration,
) -> Result<JoinVerdict> {
    JoinSolver::new(g1, g2)?.solve(source, target)
}

/// Token sliding on a cograph through its cotree.
pub fn solve_cograph(
    g: &Graph,
    ct: &Cotree,
    source: &Configuration,
    target: &Configuration,
) -> Result<JoinVerdict> {
    if ct.to_graph(g.n())? != *g {
        return Err(Error::Input("cotree does not describe the graph".into()));
    }
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
    let (answer, reason, moves) = solve_node(g, ct, source, target)?;
    Ok(JoinVerdict {
        answer,
        reason,
        sequence: (answer == Answer::Yes).then(|| ReconfSequence {
            rule: Rule::Ts,
            start: source.clone(),
            moves,
        }),
    })
}

fn solve_node(
    g: &Graph,
    node: &Cotree,
    source: &Configuration,
    target: &Configuration,
) -> Result<(Answer, JoinReason, Vec<Move>)> {
    if source == target {
        return Ok((Answer::Yes, JoinReason::TrivialEqual, Vec::new()));
    }
    match node {
        Cotree::Leaf(_) => Ok((Answer::No, JoinReason::ComponentMismatch, Vec::new())),
        Cotree::Union(children) => {
            let mut moves = Vec::new();
            let parts: Vec<_> = children
                .iter()
                .map(|c| {
                    let span = VertexSet::from_vertices(g.n(), c.span());
                    (
                        source.restrict(|v| span.contains(v)),
                        target.restrict(|v| span.contains(v)),
                    )
                })
                .collect();
            if parts.iter().any(|(s, t)| s.size() != t.size()) {
                return Ok((Answer::No, JoinReason::ComponentMismatch, Vec::new()));
            }
            for (child, (s, t)) in children.iter().zip(&parts) {
                let (answer, reason, child_moves) = solve_node(g, child, s, t)?;
                if answer == Answer::No {
                    return Ok((answer, reason, Vec::new()));
                }
                moves.extend(child_moves);
            }
            Ok((Answer::Yes, JoinReason::ComponentMatch, moves))
        }
        Cotree::Join(children) => {
            let left = children[0].span();
            let mut right: Vec<Vertex> = children[1..].iter().flat_map(Cotree::span).collect();
            right.sort_unstable();
            let (answer, reason, moves) = solve_on_sides(g, &left, &right, source, target)?;
            Ok((answer, reason, moves))
        }
    }
}

/// Runs the join decision on the subgraph induced by `left ∪ right`, which
/// must be completely joined, and maps moves back to the ids of `g`.
fn solve_on_sides(
    g: &Graph,
    left: &[Vertex],
    right: &[Vertex],
    source: &Configuration,
    target: &Configuration,
) -> Result<(Answer, JoinReason, Vec<Move>)> {
    let order: Vec<Vertex> = left.iter().chain(right).copied().collect();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        local[v] = i;
    }
    let solver = JoinSolver::new(&g.induced(left), &g.induced(right))?;
    let verdict = solver.solve(
        &source.map_vertices(|v| local[v]),
        &target.map_vertices(|v| local[v]),
    )?;
    let moves = verdict
        .sequence
        .map(|s| {
            s.moves
                .into_iter()
                .map(|m| m.map_vertices(|v| order[v]))
                .collect()
        })
        .unwrap_or_default();
    Ok((verdict.answer, verdict.reason, moves))
}

/// Splits `g` into `G1 + G2`: `G1` is the co-component holding vertex 0 and
/// `G2` the rest. `None` when the complement is connected.
pub fn join_sides(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let labels = component_labels(&g.complement());
    let (left, right): (Vec<Vertex>, Vec<Vertex>) = g.vertices().partition(|&v| labels[v] == 0);
    (!right.is_empty()).then_some((left, right))
}

/// Token sliding on a graph that is a join, in its own vertex ids.
pub fn solve_join(
    g: &Graph,
    source: &Configuration,
    target: &Configuration,
) -> Result<JoinVerdict> {
    let (left, right) = join_sides(g)
        .ok_or_else(|| Error::Domain("graph is not a join: its complement is connected".into()))?;
    for v in source.support().chain(target.support()) {
        g.check_vertex(v)?;
    }
    let (answer, reason, moves) = solve_on_sides(g, &left, &right, source, target)?;
    Ok(JoinVerdict {
        answer,
        reason,
        sequence: (answer == Answer::Yes).then(|| ReconfSequence {
            rule: Rule::Ts,
            start: source.clone(),
            moves,
        }),
    })
}
