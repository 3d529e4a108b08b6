//! Text formats. Files use 1-based vertex ids; everything in memory is
//! 0-based. Lines starting with `c` are comments, blank lines are skipped,
//! any other unknown line type is an error.

use std::fmt::Write as _;

use dsr_core::dually_chordal::Mno;
use dsr_core::{
    Configuration, Graph, Instance, IntervalFamily, Move, ReconfSequence, Rule, Vertex,
};

use crate::CliError;

/// A graph file, optionally carrying an instance (`r`, `s`, `t` lines).
#[derive(Clone, Debug, PartialEq)]
pub struct GraphFile {
    pub graph: Graph,
    pub comments: Vec<String>,
    pub rule: Option<RuleSpec>,
    pub source: Option<Configuration>,
    pub target: Option<Configuration>,
}

/// Rule as written; a `tar` line without a cap means `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleSpec {
    Ts,
    Tj,
    Tar(Option<usize>),
}

impl RuleSpec {
    pub fn resolve(self, k: usize) -> Rule {
        match self {
            RuleSpec::Ts => Rule::Ts,
            RuleSpec::Tj => Rule::Tj,
            RuleSpec::Tar(Some(cap)) => Rule::Tar { cap },
            RuleSpec::Tar(None) => Rule::tar_for(k),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-comment lines as `(line number, tag, fields)`.
fn records(text: &str) -> impl Iterator<Item = (usize, &str, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let mut it = raw.split_whitespace();
        let tag = it.next()?;
        (tag != "c").then(|| (i + 1, tag, it.collect()))
    })
}

fn comment_lines(text: &str) -> Vec<String> {
    text.lines()
        .filter_map(|l| {
            let t = l.trim_start();
            (t == "c" || t.starts_with("c "))
                .then(|| t.strip_prefix('c').unwrap().trim().to_string())
        })
        .collect()
}

fn number(line: usize, s: &str) -> Result<usize, CliError> {
    s.parse()
        .map_err(|_| err(line, format!("expected a non-negative integer, got {s:?}")))
}

fn vertex(line: usize, s: &str, n: usize) -> Result<Vertex, CliError> {
    let v = number(line, s)?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn arity(line: usize, tag: &str, fields: &[&str], want: usize) -> Result<(), CliError> {
    if fields.len() != want {
        return Err(err(
            line,
            format!("`{tag}` takes {want} fields, got {}", fields.len()),
        ));
    }
    Ok(())
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, CliError> {
    let mut n = None;
    let mut declared_m = 0;
    let mut header_line = 0;
    let mut edges = Vec::new();
    let mut rule = None;
    let mut source = None;
    let mut target = None;
    let mut last_line = 0;
    for (line, tag, fields) in records(text) {
        last_line = line;
        if tag != "p" && n.is_none() {
            return Err(err(line, "expected `p ds n m` header first"));
        }
        let nv = n.unwrap_or(0);
        match tag {
            "p" => {
                if n.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                arity(line, tag, &fields, 3)?;
                if fields[0] != "ds" {
                    return Err(err(
                        line,
                        format!("expected problem `ds`, got {:?}", fields[0]),
                    ));
                }
                n = Some(number(line, fields[1])?);
                header_line = line;
                declared_m = number(line, fields[2])?;
            }
            "e" => {
                arity(line, tag, &fields, 2)?;
                let (u, v) = (vertex(line, fields[0], nv)?, vertex(line, fields[1], nv)?);
                edges.push((line, u, v));
            }
            "r" => {
                if rule.is_some() {
                    return Err(err(line, "duplicate rule line"));
                }
                rule = Some(match (fields.first().copied(), fields.len()) {
                    (Some("ts"), 1) => RuleSpec::Ts,
                    (Some("tj"), 1) => RuleSpec::Tj,
                    (Some("tar"), 1) => RuleSpec::Tar(None),
                    (Some("tar"), 2) => RuleSpec::Tar(Some(number(line, fields[1])?)),
                    _ => return Err(err(line, "rule must be `ts`, `tj` or `tar [cap]`")),
                });
            }
            "s" | "t" => {
                let slot = if tag == "s" { &mut source } else { &mut target };
                if slot.is_some() {
                    return Err(err(line, format!("duplicate `{tag}` line")));
                }
                let vs = fields
                    .iter()
                    .map(|f| vertex(line, f, nv))
                    .collect::<Result<Vec<_>, _>>()?;
                *slot = Some(Configuration::from_vertices(vs));
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let Some(n) = n else {
        return Err(err(last_line.max(1), "missing `p ds n m` header"));
    };
    if edges.len() != declared_m {
        return Err(err(
            header_line,
            format!("header declares {declared_m} edges, found {}", edges.len()),
        ));
    }
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in &edges {
        if u == v {
            return Err(err(line, format!("self-loop on vertex {}", u + 1)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
    }
    let graph =
        Graph::from_edges(n, edges.iter().map(|&(_, u, v)| (u, v))).map_err(CliError::from)?;
    Ok(GraphFile {
        graph,
        comments: comment_lines(text),
        rule,
        source,
        target,
    })
}

impl GraphFile {
    pub fn from_graph(graph: Graph) -> Self {
        GraphFile {
            graph,
            comments: Vec::new(),
            rule: None,
            source: None,
            target: None,
        }
    }

    /// The instance this file describes; needs `r`, `s` and `t` lines.
    pub fn instance(&self) -> Result<Instance, CliError> {
        let (Some(rule), Some(s), Some(t)) = (self.rule, &self.source, &self.target) else {
            return Err(CliError::Input(
                "instance needs `r`, `s` and `t` lines".into(),
            ));
        };
        Ok(Instance::new(
            self.graph.clone(),
            s.clone(),
            t.clone(),
            rule.resolve(s.size()),
        )?)
    }

    /// Normalized text: comments, header, sorted edges, then `r`, `s`, `t`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("c\n");
            } else {
                writeln!(out, "c {c}").unwrap();
            }
        }
        writeln!(out, "p ds {} {}", self.graph.n(), self.graph.m()).unwrap();
        for (u, v) in self.graph.edges() {
            writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
        }
        if let Some(rule) = self.rule {
            match rule {
                RuleSpec::Ts => out.push_str("r ts\n"),
                RuleSpec::Tj => out.push_str("r tj\n"),
                RuleSpec::Tar(None) => out.push_str("r tar\n"),
                RuleSpec::Tar(Some(cap)) => writeln!(out, "r tar {cap}").unwrap(),
            }
        }
        for (tag, c) in [("s", &self.source), ("t", &self.target)] {
            if let Some(c) = c {
                writeln!(out, "{tag}{}", tokens_text(c)).unwrap();
            }
        }
        out
    }
}

fn tokens_text(c: &Configuration) -> String {
    c.tokens().iter().map(|v| format!(" {}", v + 1)).collect()
}

/// Configuration in 1-based ids, e.g. `{1, 3, 3}`.
pub fn show_configuration(c: &Configuration) -> String {
    let parts: Vec<String> = c.tokens().iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Moves with the line each came from.
pub struct SequenceFile {
    pub moves: Vec<Move>,
    pub lines: Vec<usize>,
}

pub fn parse_sequence(text: &str, n: usize) -> Result<SequenceFile, CliError> {
    let mut moves = Vec::new();
    let mut lines = Vec::new();
    for (line, tag, fields) in records(text) {
        let mv = match tag {
            "slide" | "jump" => {
                arity(line, tag, &fields, 2)?;
                let (u, v) = (vertex(line, fields[0], n)?, vertex(line, fields[1], n)?);
                if tag == "slide" {
                    Move::Slide(u, v)
                } else {
                    Move::Jump(u, v)
                }
            }
            "add" => {
                arity(line, tag, &fields, 1)?;
                Move::Add(vertex(line, fields[0], n)?)
            }
            "rm" => {
                arity(line, tag, &fields, 1)?;
                Move::Remove(vertex(line, fields[0], n)?)
            }
            other => return Err(err(line, format!("unknown move `{other}`"))),
        };
        moves.push(mv);
        lines.push(line);
    }
    Ok(SequenceFile { moves, lines })
}

pub fn render_move(m: Move) -> String {
    match m {
        Move::Slide(u, v) => format!("slide {} {}", u + 1, v + 1),
        Move::Jump(u, v) => format!("jump {} {}", u + 1, v + 1),
        Move::Add(v) => format!("add {}", v + 1),
        Move::Remove(u) => format!("rm {}", u + 1),
    }
}

pub fn render_sequence(seq: &ReconfSequence) -> String {
    seq.moves.iter().map(|&m| render_move(m) + "\n").collect()
}

/// `o v_1 .. v_n` plus one `n u mn(u)` line per vertex.
pub fn parse_mno(text: &str, n: usize) -> Result<Mno, CliError> {
    let mut order = None;
    let mut mn = vec![None; n];
    for (line, tag, fields) in records(text) {
        match tag {
            "o" => {
                if order.is_some() {
                    return Err(err(line, "duplicate ordering line"));
                }
                arity(line, tag, &fields, n)?;
                order = Some(
                    fields
                        .iter()
                        .map(|f| vertex(line, f, n))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            "n" => {
                arity(line, tag, &fields, 2)?;
                let (u, w) = (vertex(line, fields[0], n)?, vertex(line, fields[1], n)?);
                if mn[u].replace(w).is_some() {
                    return Err(err(
                        line,
                        format!("second maximum neighbor for vertex {}", u + 1),
                    ));
                }
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let order = order.ok_or_else(|| CliError::Input("mno file has no `o` line".into()))?;
    let mn = mn
        .into_iter()
        .enumerate()
        .map(|(v, w)| {
            w.ok_or_else(|| {
                CliError::Input(format!("no maximum neighbor given for vertex {}", v + 1))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Mno::new(order, mn)?)
}

pub fn render_mno(m: &Mno) -> String {
    let mut out = String::from("o");
    for v in m.order() {
        write!(out, " {}", v + 1).unwrap();
    }
    out.push('\n');
    for (v, w) in m.mn_map().iter().enumerate() {
        writeln!(out, "n {} {}", v + 1, w + 1).unwrap();
    }
    out
}

/// `i v l r` per vertex.
pub fn parse_intervals(text: &str) -> Result<IntervalFamily, CliError> {
    let mut rows = Vec::new();
    for (line, tag, fields) in records(text) {
        if tag != "i" {
            return Err(err(line, format!("unknown line type `{tag}`")));
        }
        arity(line, tag, &fields, 3)?;
        let v = number(line, fields[0])?;
        let real = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| err(line, format!("bad endpoint {s:?}")))
        };
        rows.push((line, v, real(fields[1])?, real(fields[2])?));
    }
    let n = rows.len();
    let mut pairs = vec![None; n];
    for (line, v, l, r) in rows {
        if v == 0 || v > n {
            return Err(err(line, format!("vertex {v} out of range 1..={n}")));
        }
        if l > r {
            return Err(err(
                line,
                format!("interval [{l}, {r}] has left end after right end"),
            ));
        }
        if pairs[v - 1].replace((l, r)).is_some() {
            return Err(err(line, format!("second interval for vertex {v}")));
        }
    }
    Ok(IntervalFamily::from_pairs(
        pairs.into_iter().map(|p| p.expect("every slot filled")),
    )?)
}

pub fn render_intervals(f: &IntervalFamily) -> String {
    f.intervals()
        .iter()
        .enumerate()
        .map(|(v, iv)| format!("i {} {} {}\n", v + 1, iv.left, iv.right))
        .collect()
}

/// `l v label` per vertex.
pub fn parse_labels(text: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut labels = vec![None; n];
    for (line, tag, fields) in records(text) {
        if tag != "l" {
            return Err(err(line, format!("unknown line type `{tag}`")));
        }
        arity(line, tag, &fields, 2)?;
        let v = vertex(line, fields[0], n)?;
        if labels[v].replace(number(line, fields[1])?).is_some() {
            return Err(err(line, format!("second label for vertex {}", v + 1)));
        }
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| CliError::Input(format!("no label for vertex {}", v + 1))))
        .collect()
}
