use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use dsr_core::cograph::NotCograph;
use dsr_core::oracle::{reachable_with, shortest_distance_with, Reachability};
use dsr_core::random::{random_cograph, random_interval_family};
use dsr_core::transforms::{
    bandwidth_relabel, bipartite_reduction, gen_gell, gen_path, gen_star, incidence_subdivision,
    split_reduction, Labeling, ReductionOutput, Role,
};
use dsr_core::{
    find_mno, is_mno, mno_from_intervals, mno_from_tree, recognize_cograph, solve_cograph,
    solve_dually_chordal, solve_join, verify_sequence, Answer, Configuration, DcOutcome, Failure,
    Graph, Instance, JoinVerdict, Limits, Mno, MnoCheck, MoveError, ReconfGraph, ReconfSequence,
    Rule, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::format::{
    parse_graph_file, parse_intervals, parse_labels, parse_mno, parse_sequence, render_intervals,
    render_move, render_sequence, show_configuration, GraphFile,
};
use crate::{Class, CliError, Command, GenKind, Outcome, ReduceKind};

type Result<T> = std::result::Result<T, CliError>;

pub fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Solve {
            instance,
            class,
            mno,
            intervals,
            emit_sequence,
            explain,
            max_states,
        } => {
            let req = SolveRequest {
                class,
                mno: mno.as_deref(),
                intervals: intervals.as_deref(),
                emit: emit_sequence.as_deref(),
                explain,
                limits: limits(max_states),
            };
            solve(&instance, &req, out, err)
        }
        Command::Verify { instance, sequence } => verify(&instance, &sequence, out),
        Command::Oracle {
            instance,
            shortest,
            stats,
            max_states,
        } => oracle(&instance, shortest, stats, &limits(max_states), out),
        Command::Reduce {
            kind,
            graph,
            labels,
            bandwidth,
        } => reduce(kind, &graph, labels.as_deref().zip(bandwidth), out),
        Command::Gen { kind } => generate(kind, out),
    }
}

fn limits(max_states: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(m) = max_states {
        l.max_states = m;
    }
    l
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        emit($out, &format!("{}\n", format_args!($($arg)*)))
    };
}

fn load_instance(path: &Path) -> Result<(GraphFile, Instance)> {
    let file = parse_graph_file(&read(path)?)?;
    let inst = file.instance()?;
    Ok((file, inst))
}

pub struct SolveRequest<'a> {
    pub class: Class,
    pub mno: Option<&'a Path>,
    pub intervals: Option<&'a Path>,
    pub emit: Option<&'a Path>,
    pub explain: bool,
    pub limits: Limits,
}

struct Solved {
    answer: Answer,
    sequence: Option<ReconfSequence>,
    notes: Vec<String>,
}

pub fn solve(
    path: &Path,
    req: &SolveRequest,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let (_, inst) = load_instance(path)?;
    let mut notes = Vec::new();
    // Supplied orderings are checked even when another solver ends up used.
    let supplied = match req.mno.is_some() || req.intervals.is_some() {
        true => acquire_mno(&inst.graph, req, &mut notes)?,
        false => None,
    };
    let solved = match req.class {
        Class::Oracle => by_oracle(&inst, &req.limits)?,
        Class::Cograph => {
            require_ts(&inst, "cograph")?;
            let ct = recognize_cograph(&inst.graph).map_err(not_a_cograph)?;
            by_cograph(&inst, &ct)?
        }
        Class::Join => {
            require_ts(&inst, "join")?;
            let v = solve_join(&inst.graph, &inst.source, &inst.target).map_err(|e| match e {
                dsr_core::Error::Domain(msg) => CliError::Recognition(msg),
                other => other.into(),
            })?;
            from_join(v, vec!["class join".into()])
        }
        Class::DuallyChordal => {
            require_ts(&inst, "dually chordal")?;
            let found = match supplied {
                Some(m) => Some(m),
                None => acquire_mno(&inst.graph, req, &mut notes)?,
            };
            let m = found.ok_or_else(|| {
                CliError::Recognition(format!(
                    "no maximum neighborhood ordering available ({}); pass --mno or --intervals",
                    notes.last().map(String::as_str).unwrap_or("none found")
                ))
            })?;
            by_dually_chordal(&inst, &m)?
        }
        Class::Auto => {
            if inst.rule != Rule::Ts {
                notes.push(format!("rule {} has no structural solver", inst.rule));
                by_oracle(&inst, &req.limits)?
            } else if let Ok(ct) = recognize_cograph(&inst.graph) {
                by_cograph(&inst, &ct)?
            } else if let Some(m) = match supplied {
                Some(m) => Some(m),
                None => acquire_mno(&inst.graph, req, &mut notes)?,
            } {
                by_dually_chordal(&inst, &m)?
            } else {
                notes.push("neither a cograph nor a known dually chordal graph".into());
                by_oracle(&inst, &req.limits)?
            }
        }
    };
    notes.extend(solved.notes);
    if req.explain {
        for n in &notes {
            writeln!(err, "explain: {n}").ok();
        }
    }
    match solved.answer {
        Answer::Yes => {
            say!(out, "YES")?;
            if let Some(seq) = &solved.sequence {
                say!(out, "moves {}", seq.len())?;
                if let Some(p) = req.emit {
                    if let Verdict::Invalid { step, reason } = verify_sequence(&inst, seq) {
                        return Err(CliError::Input(format!(
                            "refusing to write a sequence that fails verification at step {step}: {}",
                            describe_failure(&reason, inst.rule)
                        )));
                    }
                    write_file(p, &render_sequence(seq))?;
                }
            }
            Ok(Outcome::Yes)
        }
        Answer::No => {
            say!(out, "NO")?;
            Ok(Outcome::No)
        }
    }
}

fn require_ts(inst: &Instance, class: &str) -> Result<()> {
    if inst.rule != Rule::Ts {
        return Err(CliError::Input(format!(
            "the {class} solver handles token sliding only, instance uses {}",
            inst.rule
        )));
    }
    Ok(())
}

fn not_a_cograph(e: NotCograph) -> CliError {
    let vs: Vec<String> = e.vertices.iter().map(|v| (v + 1).to_string()).collect();
    CliError::Recognition(format!(
        "not a cograph: vertices {{{}}} induce a subgraph connected in both it and its complement",
        vs.join(", ")
    ))
}

fn by_oracle(inst: &Instance, limits: &Limits) -> Result<Solved> {
    let notes = vec!["class oracle".to_string()];
    Ok(match reachable_with(inst, limits)? {
        Reachability::Yes(seq) => Solved {
            answer: Answer::Yes,
            sequence: Some(seq),
            notes,
        },
        Reachability::No => Solved {
            answer: Answer::No,
            sequence: None,
            notes,
        },
    })
}

fn by_cograph(inst: &Instance, ct: &dsr_core::Cotree) -> Result<Solved> {
    let v = solve_cograph(&inst.graph, ct, &inst.source, &inst.target)?;
    Ok(from_join(
        v,
        vec!["class cograph".into(), format!("cotree {ct}")],
    ))
}

fn from_join(v: JoinVerdict, mut notes: Vec<String>) -> Solved {
    notes.push(format!("reason {}", v.reason));
    Solved {
        answer: v.answer,
        sequence: v.sequence,
        notes,
    }
}

fn by_dually_chordal(inst: &Instance, m: &Mno) -> Result<Solved> {
    let mut notes = vec!["class dually-chordal".to_string()];
    Ok(
        match solve_dually_chordal(&inst.graph, m, &inst.source, &inst.target)? {
            DcOutcome::Yes {
                sequence,
                meeting,
                source_moves,
            } => {
                notes.push(format!("meeting {}", show_configuration(&meeting)));
                notes.push(format!(
                    "source half {source_moves} moves, target half {}",
                    sequence.len() - source_moves
                ));
                Solved {
                    answer: Answer::Yes,
                    sequence: Some(sequence),
                    notes,
                }
            }
            DcOutcome::ComponentMismatch { component } => {
                notes.push(format!(
                    "token counts differ on the component of vertex {}",
                    component + 1
                ));
                Solved {
                    answer: Answer::No,
                    sequence: None,
                    notes,
                }
            }
        },
    )
}

/// Finds an mno from the flags, the graph shape, or a bounded search. `None`
/// means none was found; the reason is the last note.
fn acquire_mno(g: &Graph, req: &SolveRequest, notes: &mut Vec<String>) -> Result<Option<Mno>> {
    if let Some(p) = req.mno {
        let m = parse_mno(&read(p)?, g.n())?;
        if let MnoCheck::Invalid {
            position,
            vertex,
            witness,
        } = is_mno(g, &m)?
        {
            return Err(CliError::Recognition(format!(
                "{}: not a maximum neighborhood ordering: at position {} vertex {} sees {} outside N[mn]",
                p.display(),
                position + 1,
                vertex + 1,
                witness + 1
            )));
        }
        notes.push("mno from file".into());
        return Ok(Some(m));
    }
    if let Some(p) = req.intervals {
        let fam = parse_intervals(&read(p)?)?;
        let (h, m) = mno_from_intervals(&fam)?;
        if h != *g {
            return Err(CliError::Input(format!(
                "{}: interval model does not match the instance graph",
                p.display()
            )));
        }
        notes.push("mno from interval model".into());
        return Ok(Some(m));
    }
    // The search is exhaustive on small graphs; larger trees still have a
    // direct construction.
    match find_mno(g) {
        Ok(Some(m)) => {
            notes.push("mno from search".into());
            Ok(Some(m))
        }
        Ok(None) => {
            notes.push("search proved there is no mno".into());
            Ok(None)
        }
        Err(dsr_core::Error::Resource(_)) if g.is_tree() => {
            notes.push("mno from tree".into());
            Ok(Some(mno_from_tree(g)?))
        }
        Err(dsr_core::Error::Resource(msg)) => {
            notes.push(msg);
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn verify(instance: &Path, sequence: &Path, out: &mut dyn Write) -> Result<Outcome> {
    let (_, inst) = load_instance(instance)?;
    let file = parse_sequence(&read(sequence)?, inst.graph.n())?;
    let seq = ReconfSequence {
        rule: inst.rule,
        start: inst.source.clone(),
        moves: file.moves,
    };
    match verify_sequence(&inst, &seq) {
        Verdict::Valid => {
            say!(out, "valid ({} moves)", seq.len())?;
            Ok(Outcome::Yes)
        }
        Verdict::Invalid { step, reason } => {
            let at = match (step, &reason) {
                (_, Failure::FinalMismatch) if step > 0 => {
                    format!("after line {}", file.lines[step - 1])
                }
                (0, _) => "at the start".to_string(),
                _ => format!("at line {} (move {step})", file.lines[step - 1]),
            };
            say!(
                out,
                "invalid {at}: {}",
                describe_failure(&reason, inst.rule)
            )?;
            Ok(Outcome::No)
        }
    }
}

/// Failure text with 1-based vertex ids.
fn describe_failure(f: &Failure, rule: Rule) -> String {
    match f {
        Failure::WrongMoveKind(m) => {
            format!("move '{}' not allowed under rule {rule}", render_move(*m))
        }
        Failure::IllegalMove(e) => match *e {
            MoveError::MissingToken { mv, vertex } => {
                format!("'{}': no token on vertex {}", render_move(mv), vertex + 1)
            }
            MoveError::MissingEdge { mv, u, v } => {
                format!("'{}': {}-{} is not an edge", render_move(mv), u + 1, v + 1)
            }
            MoveError::BadVertex { mv, vertex, n } => {
                format!(
                    "'{}': vertex {} out of range 1..={n}",
                    render_move(mv),
                    vertex + 1
                )
            }
            MoveError::Degenerate { mv } => {
                format!("'{}': source and destination coincide", render_move(mv))
            }
        },
        other => other.to_string(),
    }
}

pub fn oracle(
    path: &Path,
    shortest: bool,
    stats: Option<usize>,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<Outcome> {
    if let Some(k) = stats {
        let file = parse_graph_file(&read(path)?)?;
        let rule = file.rule.map_or(Rule::Ts, |r| r.resolve(k));
        let names = vertex_names(&file.comments);
        let rg = ReconfGraph::build_with(
            &file.graph,
            k,
            rule,
            &dsr_core::oracle::Domination::new(&file.graph),
            limits,
        )?;
        let s = rg.stats();
        say!(out, "configs {}", s.num_configs)?;
        say!(out, "components {}", s.num_components)?;
        match s.diameter {
            Some(d) => say!(out, "diameter {d}")?,
            None => say!(out, "diameter none")?,
        }
        say!(out, "max-component-diameter {}", s.max_component_diameter)?;
        say!(out, "frozen {}", s.frozen.len())?;
        for c in &s.frozen {
            say!(out, "  {}{}", show_configuration(c), named(c, &names))?;
        }
        return Ok(Outcome::Yes);
    }
    let (_, inst) = load_instance(path)?;
    if shortest {
        return match shortest_distance_with(&inst, limits)? {
            Some(d) => {
                say!(out, "distance {d}")?;
                Ok(Outcome::Yes)
            }
            None => {
                say!(out, "unreachable")?;
                Ok(Outcome::No)
            }
        };
    }
    match reachable_with(&inst, limits)? {
        Reachability::Yes(seq) => {
            say!(out, "YES")?;
            say!(out, "moves {}", seq.len())?;
            Ok(Outcome::Yes)
        }
        Reachability::No => {
            say!(out, "NO")?;
            Ok(Outcome::No)
        }
    }
}

/// Names from `c name <id> <name>` comments.
fn vertex_names(comments: &[String]) -> HashMap<usize, String> {
    comments
        .iter()
        .filter_map(|c| {
            let mut it = c.split_whitespace();
            (it.next()? == "name").then_some(())?;
            let id = it.next()?.parse::<usize>().ok()?.checked_sub(1)?;
            Some((id, it.next()?.to_string()))
        })
        .collect()
}

fn named(c: &Configuration, names: &HashMap<usize, String>) -> String {
    if names.is_empty() {
        return String::new();
    }
    let parts: Vec<&str> = c
        .tokens()
        .iter()
        .map(|v| names.get(v).map_or("?", String::as_str))
        .collect();
    format!(" = {{{}}}", parts.join(", "))
}

fn role_text(r: Role) -> String {
    match r {
        Role::Original(v) => format!("original {}", v + 1),
        Role::Clique(v) => format!("clique {}", v + 1),
        Role::Independent(v) => format!("independent {}", v + 1),
        Role::Gadget(u, v) => format!("gadget {} {}", u + 1, v + 1),
        Role::Apex => "apex".into(),
        Role::Pendant => "pendant".into(),
    }
}

pub fn reduce(
    kind: ReduceKind,
    path: &Path,
    relabel: Option<(&Path, usize)>,
    out: &mut dyn Write,
) -> Result<Outcome> {
    let g = parse_graph_file(&read(path)?)?.graph;
    let (name, r): (&str, ReductionOutput) = match kind {
        ReduceKind::Split => ("split", split_reduction(&g)),
        ReduceKind::Bipartite => ("bipartite", bipartite_reduction(&g)),
        ReduceKind::Incidence => ("incidence", incidence_subdivision(&g)),
    };
    let mut file = GraphFile::from_graph(r.graph.clone());
    file.comments
        .push(format!("reduce {name} of a {}-vertex graph", g.n()));
    for (v, &role) in r.tags.iter().enumerate() {
        file.comments
            .push(format!("role {} {}", v + 1, role_text(role)));
    }
    if let Some((labels_path, k)) = relabel {
        if kind != ReduceKind::Incidence {
            return Err(CliError::Input(
                "--labels applies to the incidence reduction only".into(),
            ));
        }
        let labels = parse_labels(&read(labels_path)?, g.n())?;
        let lbl = bandwidth_relabel(&Labeling::new(labels, k)?, k, &r)?;
        for (v, l) in lbl.labels.iter().enumerate() {
            file.comments.push(format!("label {} {l}", v + 1));
        }
        file.comments
            .push(format!("bandwidth {}", lbl.bandwidth_bound));
    }
    emit(out, &file.render())?;
    Ok(Outcome::Yes)
}

pub fn generate(kind: GenKind, out: &mut dyn Write) -> Result<Outcome> {
    let file = match kind {
        GenKind::Gell { ell } => {
            let ng = gen_gell(ell)?;
            let mut f = GraphFile::from_graph(ng.graph);
            f.comments.push(format!("gell {ell}"));
            f.comments.extend(
                ng.names
                    .iter()
                    .enumerate()
                    .map(|(v, n)| format!("name {} {n}", v + 1)),
            );
            f
        }
        GenKind::Star { n } => {
            let mut f = GraphFile::from_graph(gen_star(n)?);
            f.comments
                .push(format!("star {n}: center 1, leaves 2..={}", n + 1));
            f
        }
        GenKind::Path { n } => {
            if n == 0 {
                return Err(CliError::Input("a path needs at least one vertex".into()));
            }
            let mut f = GraphFile::from_graph(gen_path(n));
            f.comments.push(format!("path {n}"));
            f
        }
        GenKind::RandomInterval {
            n,
            seed,
            intervals_out,
        } => {
            let fam = random_interval_family(n, &mut ChaCha8Rng::seed_from_u64(seed))?;
            if let Some(p) = intervals_out {
                write_file(&p, &render_intervals(&fam))?;
            }
            let mut f = GraphFile::from_graph(fam.to_graph());
            f.comments.push(format!("random-interval {n} seed {seed}"));
            f
        }
        GenKind::RandomCograph { n, seed } => {
            let (ct, g) = random_cograph(n, &mut ChaCha8Rng::seed_from_u64(seed))?;
            let mut f = GraphFile::from_graph(g);
            f.comments.push(format!("random-cograph {n} seed {seed}"));
            f.comments.push(format!("cotree {ct}"));
            f
        }
    };
    emit(out, &file.render())?;
    Ok(Outcome::Yes)
}
