//! Exact decision procedures by breadth-first search over the
//! reconfiguration graph. Exponential; intended as ground truth at desk scale.
//!
//! States are canonical sorted token lists (multisets with repetition), so a
//! plain hash map serves as the visited set. Neighbors are generated in
//! ascending move order, which makes every BFS witness the lexicographically
//! smallest shortest sequence.

use std::collections::{HashMap, VecDeque};

use crate::config::{Configuration, Instance, Move, ReconfSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

type Key = Box<[u32]>;

/// Guards against state-space blow-up. Exceeding either is an error, never a
/// silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_states: usize,
    pub max_key_bytes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 10_000_000,
            max_key_bytes: 8 << 30,
        }
    }
}

impl Limits {
    fn check(&self, states: usize, k: usize) -> Result<()> {
        let bytes = states.saturating_mul(k * 4 + 48);
        if states > self.max_states || bytes > self.max_key_bytes {
            return Err(Error::Resource(format!(
                "state-space guard exceeded after exploring {states} states (limit {} states / {} bytes)",
                self.max_states, self.max_key_bytes
            )));
        }
        Ok(())
    }
}

/// Predicate a configuration must satisfy to be a state. `tokens` is sorted
/// and may repeat.
pub trait Feasibility {
    fn holds(&self, tokens: &[u32]) -> bool;
}

/// The support dominates the graph.
pub struct Domination {
    words: usize,
    masks: Vec<u64>,
    full: Vec<u64>,
}

impl Domination {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut masks = vec![0u64; n * words];
        for u in 0..n {
            let row = &mut masks[u * words..(u + 1) * words];
            row[u / 64] |= 1 << (u % 64);
            for &v in g.neighbors(u) {
                row[v / 64] |= 1 << (v % 64);
            }
        }
        let mut full = vec![0u64; words];
        for v in 0..n {
            full[v / 64] |= 1 << (v % 64);
        }
        Domination { words, masks, full }
    }
}

impl Feasibility for Domination {
    fn holds(&self, tokens: &[u32]) -> bool {
        if self.words == 1 {
            let acc = tokens.iter().fold(0u64, |a, &t| a | self.masks[t as usize]);
            return acc == self.full[0];
        }
        let mut acc = vec![0u64; self.words];
        for &t in tokens {
            let row = &self.masks[t as usize * self.words..(t as usize + 1) * self.words];
            for (a, r) in acc.iter_mut().zip(row) {
                *a |= r;
            }
        }
        acc == self.full
    }
}

fn key_of(c: &Configuration) -> Key {
    c.tokens().into_iter().map(|v| v as u32).collect()
}

fn config_of(key: &[u32]) -> Configuration {
    Configuration::from_vertices(key.iter().map(|&v| v as Vertex))
}

fn replace_one(tokens: &[u32], at: usize, v: u32) -> Key {
    let mut out: Vec<u32> = Vec::with_capacity(tokens.len());
    out.extend_from_slice(&tokens[..at]);
    out.extend_from_slice(&tokens[at + 1..]);
    let pos = out.partition_point(|&x| x < v);
    out.insert(pos, v);
    out.into_boxed_slice()
}

fn remove_one(tokens: &[u32], at: usize) -> Key {
    let mut out: Vec<u32> = tokens.to_vec();
    out.remove(at);
    out.into_boxed_slice()
}

fn insert_one(tokens: &[u32], v: u32) -> Key {
    let mut out: Vec<u32> = tokens.to_vec();
    let pos = out.partition_point(|&x| x < v);
    out.insert(pos, v);
    out.into_boxed_slice()
}

/// All feasible one-move successors of `tokens`, in ascending move order.
fn expand<F: Feasibility>(
    g: &Graph,
    rule: Rule,
    feas: &F,
    tokens: &[u32],
    out: &mut Vec<(Move, Key)>,
) {
    out.clear();
    let n = g.n() as u32;
    let mut push = |m: Move, k: Key| {
        if feas.holds(&k) {
            out.push((m, k));
        }
    };
    if let Rule::Tar { cap } = rule {
        if tokens.len() < cap {
            for v in 0..n {
                push(Move::Add(v as Vertex), insert_one(tokens, v));
            }
        }
    }
    for (i, &u) in tokens.iter().enumerate() {
        if i > 0 && tokens[i - 1] == u {
            continue;
        }
        let uv = u as Vertex;
        match rule {
            Rule::Ts => {
                for &v in g.neighbors(uv) {
                    push(Move::Slide(uv, v), replace_one(tokens, i, v as u32));
                }
            }
            Rule::Tj => {
                for v in (0..n).filter(|&v| v != u) {
                    push(Move::Jump(uv, v as Vertex), replace_one(tokens, i, v));
                }
            }
            Rule::Tar { .. } => push(Move::Remove(uv), remove_one(tokens, i)),
        }
    }
}

/// Configurations reachable in one legal move that still dominate `g`,
/// ordered by move.
pub fn neighbors(g: &Graph, c: &Configuration, rule: Rule) -> Vec<(Move, Configuration)> {
    let feas = Domination::new(g);
    let mut out = Vec::new();
    expand(g, rule, &feas, &key_of(c), &mut out);
    out.into_iter().map(|(m, k)| (m, config_of(&k))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reachability {
    Yes(ReconfSequence),
    No,
}

impl Reachability {
    pub fn is_yes(&self) -> bool {
        matches!(self, Reachability::Yes(_))
    }

    pub fn witness(&self) -> Option<&ReconfSequence> {
        match self {
            Reachability::Yes(s) => Some(s),
            Reachability::No => None,
        }
    }
}

/// BFS from `source` under an arbitrary feasibility predicate. Returns a
/// shortest witness, or `None` when `target` is unreachable.
pub fn search<F: Feasibility>(
    g: &Graph,
    rule: Rule,
    feas: &F,
    source: &Configuration,
    target: &Configuration,
    limits: &Limits,
) -> Result<Option<ReconfSequence>> {
    let start = key_of(source);
    let goal = key_of(target);
    let k = start.len();
    let mut index: HashMap<Key, u32> = HashMap::new();
    let mut parent: Vec<Option<(u32, Move)>> = vec![None];
    let mut keys: Vec<Key> = vec![start.clone()];
    index.insert(start, 0);
    let mut queue = VecDeque::from([0u32]);
    let mut found = if keys[0] == goal { Some(0) } else { None };
    let mut buf = Vec::new();
    while found.is_none() {
        let Some(cur) = queue.pop_front() else { break };
        let tokens = keys[cur as usize].clone();
        expand(g, rule, feas, &tokens, &mut buf);
        for (m, next) in buf.drain(..) {
            if index.contains_key(&next) {
                continue;
            }
            let id = keys.len() as u32;
            let hit = next == goal;
            index.insert(next.clone(), id);
            keys.push(next);
            parent.push(Some((cur, m)));
            limits.check(keys.len(), k + 1)?;
            if hit {
                found = Some(id);
                break;
            }
            queue.push_back(id);
        }
    }
    Ok(found.map(|mut id| {
        let mut moves = Vec::new();
        while let Some((p, m)) = parent[id as usize] {
            moves.push(m);
            id = p;
        }
        moves.reverse();
        ReconfSequence {
            rule,
            start: source.clone(),
            moves,
        }
    }))
}

pub fn reachable(inst: &Instance) -> Result<Reachability> {
    reachable_with(inst, &Limits::default())
}

/// Decides reachability, returning a shortest witness on yes.
pub fn reachable_with(inst: &Instance, limits: &Limits) -> Result<Reachability> {
    let feas = Domination::new(&inst.graph);
    let found = search(
        &inst.graph,
        inst.rule,
        &feas,
        &inst.source,
        &inst.target,
        limits,
    )?;
    Ok(match found {
        Some(seq) => Reachability::Yes(seq),
        None => Reachability::No,
    })
}

/// Exact BFS distance, `None` when unreachable.
pub fn shortest_distance(inst: &Instance) -> Result<Option<usize>> {
    shortest_distance_with(inst, &Limits::default())
}

pub fn shortest_distance_with(inst: &Instance, limits: &Limits) -> Result<Option<usize>> {
    Ok(reachable_with(inst, limits)?
        .witness()
        .map(ReconfSequence::len))
}

/// Number of size-`k` multisets over `n` vertices, saturating.
pub fn multiset_count(n: usize, k: usize) -> u128 {
    if n == 0 {
        return u128::from(k == 0);
    }
    // C(n + k - 1, k)
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.saturating_mul(n as u128 - 1 + i + 1) / (i + 1);
    }
    acc
}

/// Summary of `R_k(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconfGraphStats {
    pub num_configs: usize,
    pub num_components: usize,
    /// Largest shortest-path length; `None` when `R_k` is disconnected.
    pub diameter: Option<usize>,
    /// Largest shortest-path length inside any single component.
    pub max_component_diameter: usize,
    pub frozen: Vec<Configuration>,
}

/// The explicit reconfiguration graph over every feasible size-`k` multiset.
/// Supports the size-preserving rules only.
pub struct ReconfGraph {
    keys: Vec<Key>,
    index: HashMap<Key, u32>,
    adj: Vec<Vec<u32>>,
    component: Vec<u32>,
    num_components: usize,
}

impl ReconfGraph {
    pub fn build(g: &Graph, k: usize, rule: Rule) -> Result<Self> {
        Self::build_with(g, k, rule, &Domination::new(g), &Limits::default())
    }

    pub fn build_with<F: Feasibility>(
        g: &Graph,
        k: usize,
        rule: Rule,
        feas: &F,
        limits: &Limits,
    ) -> Result<Self> {
        if !rule.preserves_size() {
            return Err(Error::Input(
                "reconfiguration graph enumeration supports ts and tj only".into(),
            ));
        }
        let n = g.n();
        let total = multiset_count(n, k);
        limits.check(usize::try_from(total).unwrap_or(usize::MAX), k)?;

        let mut keys: Vec<Key> = Vec::new();
        let mut index = HashMap::new();
        if n > 0 || k == 0 {
            let mut cur = vec![0u32; k];
            loop {
                if feas.holds(&cur) {
                    index.insert(cur.clone().into_boxed_slice(), keys.len() as u32);
                    keys.push(cur.clone().into_boxed_slice());
                }
                // next non-decreasing sequence
                let mut i = k;
                let mut advanced = false;
                while i > 0 {
                    i -= 1;
                    if (cur[i] as usize) < n - 1 {
                        let v = cur[i] + 1;
                        for c in &mut cur[i..] {
                            *c = v;
                        }
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    break;
                }
            }
        }

        let mut adj = vec![Vec::new(); keys.len()];
        let mut buf = Vec::new();
        for (id, key) in keys.iter().enumerate() {
            expand(g, rule, feas, key, &mut buf);
            adj[id] = buf.iter().map(|(_, nk)| index[nk]).collect();
        }

        let mut component = vec![u32::MAX; keys.len()];
        let mut num_components = 0;
        let mut queue = VecDeque::new();
        for s in 0..keys.len() {
            if component[s] != u32::MAX {
                continue;
            }
            component[s] = num_components as u32;
            queue.push_back(s as u32);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x as usize] {
                    if component[y as usize] == u32::MAX {
                        component[y as usize] = num_components as u32;
                        queue.push_back(y);
                    }
                }
            }
            num_components += 1;
        }
        Ok(ReconfGraph {
            keys,
            index,
            adj,
            component,
            num_components,
        })
    }

    pub fn num_configs(&self) -> usize {
        self.keys.len()
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    pub fn configurations(&self) -> impl Iterator<Item = Configuration> + '_ {
        self.keys.iter().map(|k| config_of(k))
    }

    /// Component id of a configuration, `None` if it is not a state.
    pub fn component_of(&self, c: &Configuration) -> Option<usize> {
        self.index
            .get(&key_of(c))
            .map(|&i| self.component[i as usize] as usize)
    }

    pub fn connected(&self, a: &Configuration, b: &Configuration) -> bool {
        match (self.component_of(a), self.component_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    pub fn degree(&self, c: &Configuration) -> Option<usize> {
        self.index
            .get(&key_of(c))
            .map(|&i| self.adj[i as usize].len())
    }

    /// BFS distances from one configuration to every state.
    pub fn distances_from(&self, c: &Configuration) -> Option<Vec<Option<usize>>> {
        let s = *self.index.get(&key_of(c))? as usize;
        Some(self.bfs(s))
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.keys.len()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y as usize].is_none() {
                    dist[y as usize] = Some(d + 1);
                    queue.push_back(y as usize);
                }
            }
        }
        dist
    }

    pub fn stats(&self) -> ReconfGraphStats {
        let mut max_component_diameter = 0;
        for s in 0..self.keys.len() {
            let far = self.bfs(s).into_iter().flatten().max().unwrap_or(0);
            max_component_diameter = max_component_diameter.max(far);
        }
        let frozen = (0..self.keys.len())
            .filter(|&i| self.adj[i].is_empty())
            .map(|i| config_of(&self.keys[i]))
            .collect();
        ReconfGraphStats {
            num_configs: self.keys.len(),
            num_components: self.num_components,
            diameter: (self.num_components <= 1).then_some(max_component_diameter),
            max_component_diameter,
            frozen,
        }
    }
}

/// Exact enumeration of the dominating size-`k` configurations and their
/// move graph.
pub fn reconf_graph_stats(g: &Graph, k: usize, rule: Rule) -> Result<ReconfGraphStats> {
    reconf_graph_stats_with(g, k, rule, &Limits::default())
}

pub fn reconf_graph_stats_with(
    g: &Graph,
    k: usize,
    rule: Rule,
    limits: &Limits,
) -> Result<ReconfGraphStats> {
    Ok(ReconfGraph::build_with(g, k, rule, &Domination::new(g), limits)?.stats())
}
