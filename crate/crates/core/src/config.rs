//! The token model: multiset configurations, moves under the three rules,
//! sequences, and an independent sequence verifier.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, MoveError, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Multiset of tokens on vertices. Several tokens may share a vertex.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    counts: BTreeMap<Vertex, usize>,
    size: usize,
}

impl Configuration {
    pub fn new() -> Self {
        Self::default()
    }

    /// One token per listed vertex; repeats stack.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vs: I) -> Self {
        let mut c = Configuration::new();
        for v in vs {
            c.add(v);
        }
        c
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn count(&self, v: Vertex) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.counts.contains_key(&v)
    }

    pub fn add(&mut self, v: Vertex) {
        *self.counts.entry(v).or_insert(0) += 1;
        self.size += 1;
    }

    /// Removes one token from `v`; false if there was none.
    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.counts.get_mut(&v) {
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.counts.remove(&v);
                }
                self.size -= 1;
                true
            }
            None => false,
        }
    }

    /// Distinct occupied vertices, ascending.
    pub fn support(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.counts.keys().copied()
    }

    /// `(vertex, count)` pairs, ascending by vertex.
    pub fn entries(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    /// Every token's vertex, ascending, with repetition. This is the canonical
    /// key used for hashing.
    pub fn tokens(&self) -> Vec<Vertex> {
        self.counts
            .iter()
            .flat_map(|(&v, &c)| std::iter::repeat_n(v, c))
            .collect()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.counts.keys().next_back().copied()
    }

    pub fn support_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.support().filter(|&v| v < n))
    }

    /// Tokens lying in `keep`.
    pub fn restrict(&self, keep: impl Fn(Vertex) -> bool) -> Configuration {
        let counts: BTreeMap<_, _> = self
            .counts
            .iter()
            .filter(|(&v, _)| keep(v))
            .map(|(&v, &c)| (v, c))
            .collect();
        let size = counts.values().sum();
        Configuration { counts, size }
    }

    /// Multiset difference `self - other`.
    pub fn difference(&self, other: &Configuration) -> Configuration {
        let mut out = Configuration::new();
        for (v, c) in self.entries() {
            for _ in other.count(v)..c {
                out.add(v);
            }
        }
        out
    }

    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Configuration {
        let mut out = Configuration::new();
        for (v, c) in self.entries() {
            for _ in 0..c {
                out.add(f(v));
            }
        }
        out
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.max_vertex() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical form: `{v×c, ...}` sorted by vertex, `×c` omitted when `c = 1`.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, c)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}×{c}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A single reconfiguration step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Slide(Vertex, Vertex),
    Jump(Vertex, Vertex),
    Add(Vertex),
    Remove(Vertex),
}

impl Move {
    pub fn reversed(self) -> Move {
        match self {
            Move::Slide(u, v) => Move::Slide(v, u),
            Move::Jump(u, v) => Move::Jump(v, u),
            Move::Add(v) => Move::Remove(v),
            Move::Remove(u) => Move::Add(u),
        }
    }

    pub fn map_vertices(self, f: impl Fn(Vertex) -> Vertex) -> Move {
        match self {
            Move::Slide(u, v) => Move::Slide(f(u), f(v)),
            Move::Jump(u, v) => Move::Jump(f(u), f(v)),
            Move::Add(v) => Move::Add(f(v)),
            Move::Remove(u) => Move::Remove(f(u)),
        }
    }

    pub fn allowed_under(self, rule: Rule) -> bool {
        matches!(
            (self, rule),
            (Move::Slide(..), Rule::Ts)
                | (Move::Jump(..), Rule::Tj)
                | (Move::Add(_) | Move::Remove(_), Rule::Tar { .. })
        )
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Slide(u, v) => write!(f, "slide {u} {v}"),
            Move::Jump(u, v) => write!(f, "jump {u} {v}"),
            Move::Add(v) => write!(f, "add {v}"),
            Move::Remove(u) => write!(f, "rm {u}"),
        }
    }
}

/// Reconfiguration rule. `Tar` carries the maximum intermediate size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Ts,
    Tj,
    Tar { cap: usize },
}

impl Rule {
    /// TAR with the `k + 1` cap under which it matches token jumping.
    pub fn tar_for(k: usize) -> Rule {
        Rule::Tar { cap: k + 1 }
    }

    pub fn preserves_size(self) -> bool {
        !matches!(self, Rule::Tar { .. })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Ts => write!(f, "ts"),
            Rule::Tj => write!(f, "tj"),
            Rule::Tar { cap } => write!(f, "tar {cap}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconfSequence {
    pub rule: Rule,
    pub start: Configuration,
    pub moves: Vec<Move>,
}

impl ReconfSequence {
    pub fn new(rule: Rule, start: Configuration) -> Self {
        ReconfSequence {
            rule,
            start,
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays the moves, checking only move legality.
    pub fn configurations(&self, g: &Graph) -> Result<Vec<Configuration>> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        let mut cur = self.start.clone();
        out.push(cur.clone());
        for &m in &self.moves {
            cur = apply_move(g, &cur, m)?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn final_configuration(&self, g: &Graph) -> Result<Configuration> {
        let mut cur = self.start.clone();
        for &m in &self.moves {
            cur = apply_move(g, &cur, m)?;
        }
        Ok(cur)
    }

    /// Appends `other`, whose start must be this sequence's end.
    pub fn extend_moves(&mut self, moves: impl IntoIterator<Item = Move>) {
        self.moves.extend(moves);
    }
}

/// A reconfiguration question: can `source` reach `target` under `rule`?
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub source: Configuration,
    pub target: Configuration,
    pub rule: Rule,
}

impl Instance {
    /// Validates ranges, sizes (TS/TJ) and that both endpoints dominate.
    pub fn new(
        graph: Graph,
        source: Configuration,
        target: Configuration,
        rule: Rule,
    ) -> Result<Self> {
        source.check_range(graph.n())?;
        target.check_range(graph.n())?;
        if rule.preserves_size() && source.size() != target.size() {
            return Err(Error::Input(format!(
                "source has {} tokens but target has {}",
                source.size(),
                target.size()
            )));
        }
        if let Rule::Tar { cap } = rule {
            if source.size().max(target.size()) > cap {
                return Err(Error::Input(format!("endpoint size exceeds TAR cap {cap}")));
            }
        }
        for (name, c) in [("source", &source), ("target", &target)] {
            if !is_dominating(&graph, c)? {
                return Err(Error::Input(format!("{name} {c} is not a dominating set")));
            }
        }
        Ok(Instance {
            graph,
            source,
            target,
            rule,
        })
    }

    /// Swaps source and target.
    pub fn reversed(&self) -> Instance {
        Instance {
            graph: self.graph.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            rule: self.rule,
        }
    }

    pub fn k(&self) -> usize {
        self.source.size()
    }
}

/// True iff the support of `c` dominates `g`.
pub fn is_dominating(g: &Graph, c: &Configuration) -> Result<bool> {
    c.check_range(g.n())?;
    Ok(g.dominates(&c.support_set(g.n())))
}

pub fn apply_move(g: &Graph, c: &Configuration, m: Move) -> Result<Configuration, MoveError> {
    let n = g.n();
    let check = |v: Vertex| {
        if v < n {
            Ok(())
        } else {
            Err(MoveError::BadVertex {
                mv: m,
                vertex: v,
                n,
            })
        }
    };
    let mut out = c.clone();
    match m {
        Move::Slide(u, v) | Move::Jump(u, v) => {
            check(u)?;
            check(v)?;
            if let Move::Slide(..) = m {
                if !g.has_edge(u, v) {
                    return Err(MoveError::MissingEdge { mv: m, u, v });
                }
            } else if u == v {
                return Err(MoveError::Degenerate { mv: m });
            }
            if !out.remove(u) {
                return Err(MoveError::MissingToken { mv: m, vertex: u });
            }
            out.add(v);
        }
        Move::Add(v) => {
            check(v)?;
            out.add(v);
        }
        Move::Remove(u) => {
            check(u)?;
            if !out.remove(u) {
                return Err(MoveError::MissingToken { mv: m, vertex: u });
            }
        }
    }
    Ok(out)
}

/// Why a sequence was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    RuleMismatch { expected: Rule, found: Rule },
    StartMismatch,
    WrongMoveKind(Move),
    IllegalMove(MoveError),
    NotDominating,
    CapExceeded { size: usize, cap: usize },
    FinalMismatch,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::RuleMismatch { expected, found } => {
                write!(
                    f,
                    "sequence rule {found} does not match instance rule {expected}"
                )
            }
            Failure::StartMismatch => write!(f, "start configuration mismatch"),
            Failure::WrongMoveKind(m) => write!(f, "move '{m}' not allowed under this rule"),
            Failure::IllegalMove(e) => write!(f, "illegal move: {e}"),
            Failure::NotDominating => write!(f, "not dominating"),
            Failure::CapExceeded { size, cap } => write!(f, "size {size} exceeds cap {cap}"),
            Failure::FinalMismatch => write!(f, "final configuration mismatch"),
        }
    }
}

/// Outcome of [`verify_sequence`]. `step` counts moves: a failure at step
/// `i > 0` concerns the `i`-th move (1-based) or the configuration it yields;
/// step 0 is the start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid { step: usize, reason: Failure },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Re-checks a sequence from scratch: rule, move legality, domination of every
/// configuration, the TAR cap, and multiset equality with the target.
pub fn verify_sequence(inst: &Instance, seq: &ReconfSequence) -> Verdict {
    let g = &inst.graph;
    let invalid = |step, reason| Verdict::Invalid { step, reason };
    if seq.rule != inst.rule {
        return invalid(
            0,
            Failure::RuleMismatch {
                expected: inst.rule,
                found: seq.rule,
            },
        );
    }
    if seq.start != inst.source {
        return invalid(0, Failure::StartMismatch);
    }
    let cap = match inst.rule {
        Rule::Tar { cap } => Some(cap),
        _ => None,
    };
    let mut cur = seq.start.clone();
    if !is_dominating(g, &cur).unwrap_or(false) {
        return invalid(0, Failure::NotDominating);
    }
    for (i, &m) in seq.moves.iter().enumerate() {
        let step = i + 1;
        if !m.allowed_under(inst.rule) {
            return invalid(step, Failure::WrongMoveKind(m));
        }
        cur = match apply_move(g, &cur, m) {
            Ok(c) => c,
            Err(e) => return invalid(step, Failure::IllegalMove(e)),
        };
        if let Some(cap) = cap {
            if cur.size() > cap {
                return invalid(
                    step,
                    Failure::CapExceeded {
                        size: cur.size(),
                        cap,
                    },
                );
            }
        }
        if !is_dominating(g, &cur).unwrap_or(false) {
            return invalid(step, Failure::NotDominating);
        }
    }
    if cur != inst.target {
        return invalid(seq.moves.len(), Failure::FinalMismatch);
    }
    Verdict::Valid
}

/// The sequence run backwards, starting from `seq`'s final configuration.
pub fn reverse_sequence(g: &Graph, seq: &ReconfSequence) -> Result<ReconfSequence> {
    let mut cur = seq.start.clone();
    if !is_dominating(g, &cur)? {
        return Err(Error::Input(format!("start {cur} is not dominating")));
    }
    for (i, &m) in seq.moves.iter().enumerate() {
        if !m.allowed_under(seq.rule) {
            return Err(Error::Input(format!(
                "move {} ({m}) not allowed under {}",
                i + 1,
                seq.rule
            )));
        }
        cur = apply_move(g, &cur, m)?;
        if !is_dominating(g, &cur)? {
            return Err(Error::Input(format!(
                "configuration after move {} is not dominating",
                i + 1
            )));
        }
    }
    Ok(ReconfSequence {
        rule: seq.rule,
        start: cur,
        moves: seq.moves.iter().rev().map(|m| m.reversed()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, path};

    fn conf(vs: &[usize]) -> Configuration {
        Configuration::from_vertices(vs.iter().copied())
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    #[test]
    fn multiset_bookkeeping() {
        let mut c = conf(&[3, 1, 3]);
        assert_eq!(c.size(), 3);
        assert_eq!(c.count(3), 2);
        assert_eq!(c.tokens(), vec![1, 3, 3]);
        assert_eq!(c.to_string(), "{1, 3×2}");
        assert!(c.remove(3));
        assert!(c.remove(3));
        assert!(!c.remove(3));
        assert!(!c.contains(3));
        assert_eq!(c, conf(&[1]));
        assert_eq!(conf(&[1, 1, 2]).difference(&conf(&[1, 3])), conf(&[1, 2]));
    }

    #[test]
    fn dominating_configurations() {
        assert!(is_dominating(&star(3), &conf(&[0, 0])).unwrap());
        assert!(!is_dominating(&path(4), &conf(&[0, 0])).unwrap());
        assert!(is_dominating(&path(2), &conf(&[5])).is_err());
    }

    #[test]
    fn moves() {
        let k2 = path(2);
        assert_eq!(
            apply_move(&k2, &conf(&[0, 1]), Move::Slide(0, 1)).unwrap(),
            conf(&[1, 1])
        );
        let p3 = path(3);
        assert!(matches!(
            apply_move(&p3, &conf(&[0]), Move::Slide(0, 2)),
            Err(MoveError::MissingEdge { u: 0, v: 2, .. })
        ));
        let p4 = path(4);
        assert_eq!(
            apply_move(&p4, &conf(&[0, 3]), Move::Jump(0, 3)).unwrap(),
            conf(&[3, 3])
        );
        assert!(matches!(
            apply_move(&p4, &conf(&[1]), Move::Jump(0, 3)),
            Err(MoveError::MissingToken { vertex: 0, .. })
        ));
        assert!(matches!(
            apply_move(&p4, &conf(&[1]), Move::Add(9)),
            Err(MoveError::BadVertex { vertex: 9, .. })
        ));
        assert_eq!(
            apply_move(&p4, &conf(&[1]), Move::Add(1)).unwrap().size(),
            2
        );
        assert_eq!(
            apply_move(&p4, &conf(&[1, 2]), Move::Remove(1)).unwrap(),
            conf(&[2])
        );
    }

    #[test]
    fn verifier_accepts_hand_built_sequence() {
        let g = path(4);
        let inst = Instance::new(g.clone(), conf(&[0, 3]), conf(&[1, 3]), Rule::Ts).unwrap();
        let seq = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0, 3]),
            moves: vec![Move::Slide(0, 1)],
        };
        assert_eq!(verify_sequence(&inst, &seq), Verdict::Valid);
        // same answer as replaying with apply_move + is_dominating
        let confs = seq.configurations(&g).unwrap();
        assert!(confs.iter().all(|c| is_dominating(&g, c).unwrap()));
        assert_eq!(confs.last().unwrap(), &inst.target);
    }

    #[test]
    fn verifier_edge_cases() {
        let g = path(4);
        let inst = Instance::new(g.clone(), conf(&[1, 2]), conf(&[1, 2]), Rule::Ts).unwrap();
        assert!(verify_sequence(&inst, &ReconfSequence::new(Rule::Ts, conf(&[1, 2]))).is_valid());

        // {1,2} -> {1×2} leaves vertex 3 undominated
        let bad = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[1, 2]),
            moves: vec![Move::Slide(2, 1)],
        };
        assert_eq!(
            verify_sequence(&inst, &bad),
            Verdict::Invalid {
                step: 1,
                reason: Failure::NotDominating
            }
        );

        let truncated_inst =
            Instance::new(g.clone(), conf(&[0, 3]), conf(&[1, 2]), Rule::Ts).unwrap();
        let truncated = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0, 3]),
            moves: vec![Move::Slide(0, 1)],
        };
        assert_eq!(
            verify_sequence(&truncated_inst, &truncated),
            Verdict::Invalid {
                step: 1,
                reason: Failure::FinalMismatch
            }
        );

        let jumpy = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0, 3]),
            moves: vec![Move::Jump(0, 1)],
        };
        assert!(matches!(
            verify_sequence(&truncated_inst, &jumpy),
            Verdict::Invalid {
                step: 1,
                reason: Failure::WrongMoveKind(_)
            }
        ));

        let nonedge = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0, 3]),
            moves: vec![Move::Slide(0, 2)],
        };
        assert!(matches!(
            verify_sequence(&truncated_inst, &nonedge),
            Verdict::Invalid {
                step: 1,
                reason: Failure::IllegalMove(MoveError::MissingEdge { .. })
            }
        ));
    }

    #[test]
    fn verifier_enforces_tar_cap() {
        let g = complete(3);
        let inst = Instance::new(g, conf(&[0]), conf(&[0]), Rule::Tar { cap: 2 }).unwrap();
        let seq = ReconfSequence {
            rule: Rule::Tar { cap: 2 },
            start: conf(&[0]),
            moves: vec![Move::Add(1), Move::Add(2), Move::Remove(1), Move::Remove(2)],
        };
        assert_eq!(
            verify_sequence(&inst, &seq),
            Verdict::Invalid {
                step: 2,
                reason: Failure::CapExceeded { size: 3, cap: 2 }
            }
        );
    }

    #[test]
    fn instance_validation() {
        let g = path(3);
        assert!(Instance::new(g.clone(), conf(&[1]), conf(&[1, 1]), Rule::Ts).is_err());
        assert!(Instance::new(g.clone(), conf(&[0]), conf(&[1]), Rule::Ts).is_err());
        assert!(Instance::new(g, conf(&[1]), conf(&[1, 1]), Rule::Tar { cap: 2 }).is_ok());
    }

    #[test]
    fn reversal() {
        let k2 = path(2);
        let seq = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0]),
            moves: vec![Move::Slide(0, 1)],
        };
        let rev = reverse_sequence(&k2, &seq).unwrap();
        assert_eq!(rev.start, conf(&[1]));
        assert_eq!(rev.moves, vec![Move::Slide(1, 0)]);
        let empty = ReconfSequence::new(Rule::Ts, conf(&[0]));
        assert_eq!(reverse_sequence(&k2, &empty).unwrap(), empty);
        let broken = ReconfSequence {
            rule: Rule::Ts,
            start: conf(&[0]),
            moves: vec![Move::Slide(1, 0)],
        };
        assert!(reverse_sequence(&k2, &broken).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        // Random walk of legal, domination-preserving moves on a fixed graph.
        fn random_valid(
            g: &Graph,
            rule: Rule,
            start: &Configuration,
            choices: &[usize],
        ) -> ReconfSequence {
            let mut seq = ReconfSequence::new(rule, start.clone());
            let mut cur = start.clone();
            for &pick in choices {
                let mut options = Vec::new();
                for u in cur.support() {
                    match rule {
                        Rule::Ts => {
                            options.extend(g.neighbors(u).iter().map(|&v| Move::Slide(u, v)))
                        }
                        Rule::Tj => options
                            .extend(g.vertices().filter(|&v| v != u).map(|v| Move::Jump(u, v))),
                        Rule::Tar { .. } => options.push(Move::Remove(u)),
                    }
                }
                if let Rule::Tar { cap } = rule {
                    if cur.size() < cap {
                        options.extend(g.vertices().map(Move::Add));
                    }
                }
                let legal: Vec<_> = options
                    .into_iter()
                    .filter_map(|m| apply_move(g, &cur, m).ok().map(|c| (m, c)))
                    .filter(|(_, c)| is_dominating(g, c).unwrap())
                    .collect();
                if legal.is_empty() {
                    break;
                }
                let (m, c) = legal[pick % legal.len()].clone();
                seq.moves.push(m);
                cur = c;
            }
            seq
        }

        fn rule_strategy() -> impl Strategy<Value = Rule> {
            prop_oneof![Just(Rule::Ts), Just(Rule::Tj), Just(Rule::Tar { cap: 4 })]
        }

        proptest! {
            #[test]
            fn reverse_round_trips(rule in rule_strategy(), choices in proptest::collection::vec(any::<usize>(), 0..12)) {
                let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
                let start = conf(&[1, 4, 4]);
                let seq = random_valid(&g, rule, &start, &choices);
                let end = seq.final_configuration(&g).unwrap();
                let inst = Instance::new(g.clone(), start.clone(), end.clone(), rule).unwrap();
                prop_assert!(verify_sequence(&inst, &seq).is_valid());

                let rev = reverse_sequence(&g, &seq).unwrap();
                prop_assert!(verify_sequence(&inst.reversed(), &rev).is_valid());
                prop_assert_eq!(reverse_sequence(&g, &rev).unwrap(), seq.clone());

                let mut cur = start;
                for &m in &seq.moves {
                    let next = apply_move(&g, &cur, m).unwrap();
                    prop_assert_eq!(apply_move(&g, &next, m.reversed()).unwrap(), cur);
                    if rule == Rule::Ts {
                        prop_assert_eq!(next.size(), 3);
                    }
                    cur = next;
                }
            }
        }
    }
}
