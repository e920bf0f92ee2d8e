//! Command-line front end. Every invocation prints one JSON object on
//! stdout; timings and a human summary go to stderr so stdout stays
//! byte-identical across runs.
//!
//! Exit codes: 0 when the checked property holds or generation succeeded,
//! 1 when the property fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::berge::{find_berge_witness, BergeIndex};
use crate::constructions::{build_c, build_h_feedback, build_h_min_deg, build_s, Construction};
use crate::error::{Error, Result};
use crate::hypergraph::{parse_csv, Graph, Hypergraph};
use crate::invariants::{make_clique, report};
use crate::oracle::{greedy_saturate, min_saturation_search};
use crate::saturation::{all_cores_present, all_pairs_good, is_saturated, CheckMode};
use crate::witness::SearchConstraints;

#[derive(Parser, Debug)]
#[command(name = "bergesat", version, about = "Berge saturation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a construction.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Containment, freeness and saturation checks.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Pair-goodness and core conditions.
    #[command(subcommand)]
    VerifyLemma(LemmaCommand),
    /// Graph invariants of a pattern graph.
    Invariants {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Exhaustive and greedy searches.
    #[command(subcommand)]
    Search(SearchCommand),
}

#[derive(Args, Debug)]
struct Output {
    /// Hypergraph output file.
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
    /// Optional vertex-role sidecar file.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// C(k, ell): the small base hypergraph.
    C {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        out: Output,
    },
    /// S(n, k, ell): the saturated hypergraph for Berge-K_ell.
    S {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Minimum-degree construction for a pattern graph.
    Mindeg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Feedback-set construction for a pattern graph.
    Feedback {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated vertex ids of a minimum feedback set, as in the
        /// graph file.
        #[arg(long)]
        feedback_set: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct Pattern {
    /// Pattern graph edge list.
    #[arg(long, conflicts_with = "clique", required_unless_present = "clique")]
    graph: Option<PathBuf>,
    /// Use the complete graph on this many vertices as the pattern.
    #[arg(long)]
    clique: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// Search for a Berge copy of the pattern.
    Contains {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        hgraph: PathBuf,
        /// Host vertices that must be core vertices.
        #[arg(long)]
        require_core: Option<String>,
        /// Host edge that must be used.
        #[arg(long)]
        require_edge: Option<String>,
    },
    /// Check that the host has no Berge copy of the pattern.
    Free {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        hgraph: PathBuf,
    },
    /// Check Berge saturation of a k-uniform host.
    Saturated {
        #[arg(long)]
        hgraph: PathBuf,
        #[command(flatten)]
        pattern: Pattern,
        #[arg(long)]
        k: usize,
        /// Worker threads for the missing-edge checks.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Check this many randomly drawn missing edges instead of all.
        #[arg(long, requires = "seed", conflicts_with = "orbits")]
        sample: Option<u64>,
        #[arg(long, requires = "sample")]
        seed: Option<u64>,
        /// Check one missing edge per twin-class orbit.
        #[arg(long)]
        orbits: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LemmaCommand {
    /// Every pair not already a 2-edge is ell-good.
    PairsGood {
        #[arg(long)]
        hgraph: PathBuf,
        #[arg(long)]
        ell: usize,
    },
    /// Every (ell-1)-set is the core of a Berge-K_{ell-1}.
    Cores {
        #[arg(long)]
        hgraph: PathBuf,
        #[arg(long)]
        ell: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SearchCommand {
    /// Exact minimum size of a saturated hypergraph (tiny n only).
    Minsat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        pattern: Pattern,
        #[arg(long)]
        max_m: usize,
        /// Test only one edge set per isomorphism class.
        #[arg(long)]
        isomorph_reject: bool,
    },
    /// Greedily complete a free host to a saturated one.
    Greedy {
        #[arg(long)]
        hgraph: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

struct Outcome {
    holds: bool,
    json: Value,
    summary: String,
}

impl Outcome {
    fn new(holds: bool, json: Value, summary: impl Into<String>) -> Self {
        Outcome {
            holds,
            json,
            summary: summary.into(),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let start = std::time::Instant::now();
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = writeln!(stdout, "{}", outcome.json);
            let _ = writeln!(
                stderr,
                "{} ({:.3}s)",
                outcome.summary,
                start.elapsed().as_secs_f64()
            );
            if outcome.holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    Hypergraph::parse(&read(path)?)
}

fn pattern(p: &Pattern) -> Result<Graph> {
    match (&p.graph, p.clique) {
        (Some(path), _) => read_graph(path),
        (None, Some(l)) => make_clique(l),
        (None, None) => Err(Error::InvalidParameter("no pattern given".into())),
    }
}

fn emit(c: &Construction, out: &Output, name: String, extra: Value) -> Result<Outcome> {
    write(&out.output, &c.hypergraph.to_text())?;
    if let Some(labels) = &out.labels {
        write(labels, &c.labels.to_text())?;
    }
    let mut json = json!({
        "construction": name,
        "n": c.hypergraph.n(),
        "edges": c.hypergraph.edge_count(),
        "warnings": c.warnings,
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut json, extra) {
        map.extend(more);
    }
    let mut summary = format!(
        "{name}: {} vertices, {} edges written to {}",
        c.hypergraph.n(),
        c.hypergraph.edge_count(),
        out.output.display()
    );
    for w in &c.warnings {
        summary.push_str(&format!("\nwarning: {w}"));
    }
    Ok(Outcome::new(true, json, summary))
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Gen(g) => generate(g),
        Command::Check(c) => check(c),
        Command::VerifyLemma(l) => lemma(l),
        Command::Invariants { graph } => {
            let g = read_graph(&graph)?;
            let r = report(&g)?;
            let summary = format!(
                "alpha={} beta={} delta={} girth={} feedback={}",
                r.alpha, r.beta, r.delta, r.girth, r.feedback
            );
            Ok(Outcome::new(
                true,
                serde_json::to_value(r).expect("serializable"),
                summary,
            ))
        }
        Command::Search(s) => search(s),
    }
}

fn generate(g: GenCommand) -> Result<Outcome> {
    match g {
        GenCommand::C { k, ell, out } => {
            let c = build_c(k, ell)?;
            emit(&c, &out, format!("C({k},{ell})"), json!({}))
        }
        GenCommand::S { n, k, ell, out } => {
            let (c, p) = build_s(n, k, ell)?;
            emit(
                &c,
                &out,
                format!("S({n},{k},{ell})"),
                json!({"a": p.a, "b": p.b}),
            )
        }
        GenCommand::Mindeg { n, k, graph, out } => {
            let f = read_graph(&graph)?;
            let c = build_h_min_deg(n, k, &f)?;
            emit(&c, &out, format!("mindeg({n},{k})"), json!({}))
        }
        GenCommand::Feedback {
            n,
            k,
            a,
            graph,
            feedback_set,
            out,
        } => {
            let (g, ids) = Graph::parse_with_ids(&read(&graph)?)?;
            let s = match feedback_set {
                None => None,
                Some(csv) => Some(
                    parse_csv(&csv)?
                        .into_iter()
                        .map(|v| {
                            ids.iter().position(|&id| id == v).ok_or_else(|| {
                                Error::InvalidParameter(format!("vertex {v} is not in the graph"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            let c = build_h_feedback(n, k, a, &g, s.as_deref())?;
            emit(&c, &out, format!("feedback({n},{k},{a})"), json!({}))
        }
    }
}

fn check(c: CheckCommand) -> Result<Outcome> {
    match c {
        CheckCommand::Contains {
            graph,
            hgraph,
            require_core,
            require_edge,
        } => {
            let f = read_graph(&graph)?;
            let h = read_hypergraph(&hgraph)?;
            let mut constraints = SearchConstraints::default();
            if let Some(csv) = require_core {
                constraints.required_core = parse_csv(&csv)?;
                if let Some(&v) = constraints.required_core.iter().find(|&&v| v >= h.n()) {
                    return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
                }
            }
            if let Some(csv) = require_edge {
                let e = parse_csv(&csv)?;
                if !h.contains_edge(&e) {
                    return Err(Error::InvalidEdge(e));
                }
                constraints.required_edge = Some(e);
            }
            let w = find_berge_witness(&f, &h, &constraints);
            let summary = match &w {
                Some(_) => "Berge copy found".to_string(),
                None => "no Berge copy".to_string(),
            };
            let json = json!({
                "contains": w.is_some(),
                "witness": w.as_ref().map(|w| w.to_text(&f, &h)),
            });
            Ok(Outcome::new(w.is_some(), json, summary))
        }
        CheckCommand::Free { graph, hgraph } => {
            let f = read_graph(&graph)?;
            let h = read_hypergraph(&hgraph)?;
            let w = BergeIndex::new(&h).find_witness(&f, &SearchConstraints::default());
            let json = json!({
                "is_free": w.is_none(),
                "witness": w.as_ref().map(|w| w.to_text(&f, &h)),
            });
            let summary = if w.is_none() {
                "Berge-free"
            } else {
                "not Berge-free"
            };
            Ok(Outcome::new(w.is_none(), json, summary))
        }
        CheckCommand::Saturated {
            hgraph,
            pattern: p,
            k,
            jobs,
            sample,
            seed,
            orbits,
        } => {
            let h = read_hypergraph(&hgraph)?;
            let f = pattern(&p)?;
            let mode = match (sample, seed, orbits) {
                (Some(count), Some(seed), _) => CheckMode::Sampled { count, seed },
                (_, _, true) => CheckMode::Orbits,
                _ => CheckMode::Full,
            };
            let r = is_saturated(&h, &f, k, mode, jobs)?;
            let mut json = json!({
                "is_free": r.is_free,
                "violations_free": r.violations_free.iter().map(|w| w.to_text(&f, &h)).collect::<Vec<_>>(),
                "checked_missing": r.checked_missing,
                "violations_sat": r.violations_sat,
                "mode": mode.to_string(),
                "saturated": r.is_saturated(),
            });
            let mut summary = if !r.is_free {
                "not Berge-free".to_string()
            } else {
                format!(
                    "{} of {} checked missing edges create no new Berge copy",
                    r.violations_sat.len(),
                    r.checked_missing
                )
            };
            if let Some(o) = &r.orbits {
                let reduction = o.covered as f64 / r.checked_missing.max(1) as f64;
                let map = json.as_object_mut().expect("object");
                map.insert("orbit_classes".into(), json!(o.classes));
                map.insert("orbit_covered".into(), json!(o.covered));
                map.insert("orbit_reduction".into(), json!(reduction));
                summary.push_str(&format!(
                    "; {} twin classes, {} representatives cover {} missing edges ({reduction:.1}x)",
                    o.classes, r.checked_missing, o.covered
                ));
            }
            if r.no_violations() && !r.is_saturated() {
                summary.push_str("; not a certificate (full mode certifies)");
            }
            Ok(Outcome::new(r.no_violations(), json, summary))
        }
    }
}

fn lemma(l: LemmaCommand) -> Result<Outcome> {
    match l {
        LemmaCommand::PairsGood { hgraph, ell } => {
            let h = read_hypergraph(&hgraph)?;
            let r = all_pairs_good(&h, ell)?;
            let good = r.checked - r.failures.len() as u64;
            let json = json!({
                "checked": r.checked,
                "good": good,
                "failures": r.failures,
            });
            let summary = format!("{good}/{} pairs are {ell}-good", r.checked);
            Ok(Outcome::new(r.passed(), json, summary))
        }
        LemmaCommand::Cores { hgraph, ell } => {
            let h = read_hypergraph(&hgraph)?;
            let r = all_cores_present(&h, ell)?;
            let json = json!({
                "subset_size": r.subset_size,
                "checked": r.checked,
                "failures": r.failures,
            });
            let summary = format!(
                "{}/{} vertex {}-sets are Berge-K_{} cores",
                r.checked - r.failures.len() as u64,
                r.checked,
                r.subset_size,
                r.subset_size
            );
            Ok(Outcome::new(r.passed(), json, summary))
        }
    }
}

fn search(s: SearchCommand) -> Result<Outcome> {
    match s {
        SearchCommand::Minsat {
            n,
            k,
            pattern: p,
            max_m,
            isomorph_reject,
        } => {
            let f = pattern(&p)?;
            let r = min_saturation_search(n, k, &f, max_m, isomorph_reject)?;
            Ok(match r {
                Some(r) => Outcome::new(
                    true,
                    json!({
                        "m_star": r.m_star,
                        "examined": r.examined,
                        "witness": r.witness.to_text(),
                    }),
                    format!(
                        "minimum saturated size {} ({} edge sets examined)",
                        r.m_star, r.examined
                    ),
                ),
                None => Outcome::new(
                    false,
                    json!({"m_star": null, "examined": null, "witness": null}),
                    format!("no saturated hypergraph with at most {max_m} edges"),
                ),
            })
        }
        SearchCommand::Greedy {
            hgraph,
            graph,
            k,
            output,
        } => {
            let h = read_hypergraph(&hgraph)?;
            let f = read_graph(&graph)?;
            let out = greedy_saturate(&h, &f, k, None)?;
            write(&output, &out.to_text())?;
            let added = out.edge_count() - h.edge_count();
            Ok(Outcome::new(
                true,
                json!({"edges": out.edge_count(), "added": added}),
                format!(
                    "added {added} edges, {} total, written to {}",
                    out.edge_count(),
                    output.display()
                ),
            ))
        }
    }
}
