use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use super::document::{parse_complex_file, parse_graph_document, InputFormat};
use super::render::{render_report, round_real, round_significant, RenderMode, ReportDocument};
use crate::cheeger::{
    exact_h, full_report, graph_bounds, prt_minimizer, theorem_bound, ReportOptions, SearchOptions,
    DEFAULT_MAX_GRAPH_VERTICES, DEFAULT_MAX_VERTICES,
};
use crate::complex::SimplicialComplex;
use crate::corpus::{self, Expected, Payload};
use crate::embedded::EmbeddedGraph;
use crate::error::Error;
use crate::graph::AdjacencyMatrix;
use crate::spectral::{eigenvalues_symmetric, DEFAULT_TOL};

/// Cheeger-type constants of pure simplicial complexes and their spectral bounds.
///
/// FILE is a path, `-` for standard input, or `corpus:NAME` for a bundled
/// fixture or generated complex (see `corpus list`).
#[derive(Debug, Parser)]
#[command(name = "cheeger", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_TOL, value_name = "R")]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES, value_name = "N")]
    pub max_exact_vertices: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GRAPH_VERTICES, value_name = "N")]
    pub max_exact_graph: usize,
    /// Skip vertex sets with disconnected induced 1-skeleton (2-complexes only).
    #[arg(long, global = true)]
    pub prune_connected: bool,
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    pub workers: usize,
    /// Complex file format.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check purity and connectivity.
    Validate { file: String },
    /// Dimension, face counts, degrees.
    Info { file: String },
    /// Summary of the embedded graph, optionally written as DOT.
    Embedded {
        file: String,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Adjacency spectrum of the embedded graph, or of a graph file.
    Spectrum {
        #[arg(required_unless_present = "graph", conflicts_with = "graph")]
        file: Option<String>,
        #[arg(long, value_name = "FILE")]
        graph: Option<String>,
    },
    /// Exact H by exhaustive search.
    Cheeger {
        file: String,
        /// Also compute the rainbow-partition constant.
        #[arg(long)]
        prt: bool,
    },
    /// Spectral lower bound and graph Cheeger bounds.
    Bounds { file: String },
    /// Full report; exit 0 if every applicable check passes, 1 on a failure, 2 on invalid input.
    Verify { file: String },
    /// Bundled fixtures and generators.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Subcommand)]
pub enum CorpusCommand {
    List,
    /// Print a fixture or generated complex (e.g. `bipyramid-6`) as JSON.
    Emit {
        name: String,
    },
}

/// Exit status for errors: 2 when the input is unusable, 1 when a computation could not finish.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. }
        | Error::NoConvergence { .. }
        | Error::ResidualTooLarge { .. }
        | Error::InvariantViolation(_) => 1,
        _ => 2,
    }
}

struct Loaded {
    name: Option<String>,
    complex: SimplicialComplex,
    expected: BTreeMap<String, Expected>,
}

struct Context<'a> {
    g: &'a GlobalArgs,
}

impl Context<'_> {
    fn search(&self) -> SearchOptions {
        SearchOptions {
            max_vertices: self.g.max_exact_vertices,
            max_graph_vertices: self.g.max_exact_graph,
            prune_connected: self.g.prune_connected,
            workers: self.g.workers.max(1),
            ..SearchOptions::default()
        }
    }

    fn read(&self, file: &str) -> Result<Vec<u8>, (i32, String)> {
        let result = if file == "-" {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map(|_| buf)
        } else {
            std::fs::read(Path::new(file))
        };
        result.map_err(|e| (2, format!("{file}: {e}")))
    }

    fn load_complex(&self, file: &str) -> Result<Loaded, (i32, String)> {
        let fail = |e: Error| (exit_code(&e), format!("{file}: {e}"));
        if let Some(name) = file.strip_prefix("corpus:") {
            let f = corpus::resolve(name).map_err(fail)?;
            let complex = f.complex().map_err(fail)?;
            return Ok(Loaded {
                name: Some(f.name),
                complex,
                expected: f.expected,
            });
        }
        let doc = parse_complex_file(&self.read(file)?, self.g.format).map_err(fail)?;
        let complex = doc.to_complex().map_err(fail)?;
        Ok(Loaded {
            name: doc.name,
            complex,
            expected: doc.expected,
        })
    }

    fn load_graph(&self, file: &str) -> Result<(Option<String>, AdjacencyMatrix), (i32, String)> {
        let fail = |e: Error| (exit_code(&e), format!("{file}: {e}"));
        if let Some(name) = file.strip_prefix("corpus:") {
            let f = corpus::resolve(name).map_err(fail)?;
            let m = match &f.payload {
                Payload::Graph(m) => m.clone(),
                Payload::Complex(_) => EmbeddedGraph::build(&f.complex().map_err(fail)?)
                    .map_err(fail)?
                    .adjacency_matrix(),
            };
            return Ok((Some(f.name), m));
        }
        let doc = parse_graph_document(&self.read(file)?).map_err(fail)?;
        let m = AdjacencyMatrix::from_rows(&doc.adjacency).map_err(fail)?;
        Ok((doc.name, m))
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

fn fmt_real(x: f64) -> String {
    format!("{}", round_real(x))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if cli.global.tol.is_nan() || cli.global.tol <= 0.0 {
        let _ = writeln!(err, "error: {}", Error::BadTolerance);
        return 2;
    }
    let ctx = Context { g: &cli.global };
    match dispatch(&ctx, &cli.command) {
        Ok((code, text)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            code
        }
        Err((code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

type Outcome = Result<(i32, String), (i32, String)>;

fn dispatch(ctx: &Context, command: &Command) -> Outcome {
    let json = ctx.g.json;
    let compute = |e: Error| (exit_code(&e), e.to_string());
    match command {
        Command::Validate { file } => {
            let x = ctx.load_complex(file)?.complex;
            let v = x.validate();
            let code = if v.is_valid() { 0 } else { 1 };
            let text = if json {
                pretty(
                    &json!({ "pure": v.pure, "dimension": v.dimension, "connected": v.connected, "valid": v.is_valid() }),
                )
            } else {
                format!(
                    "pure: {}\ndimension: {}\nconnected: {}\n{}\n",
                    yes_no(v.pure),
                    v.dimension,
                    yes_no(v.connected),
                    if v.is_valid() { "valid" } else { "invalid" }
                )
            };
            Ok((code, text))
        }
        Command::Info { file } => {
            let loaded = ctx.load_complex(file)?;
            let x = &loaded.complex;
            let counts: Vec<usize> = (0..=x.dimension()).map(|k| x.num_faces(k)).collect();
            let labels: Vec<String> = x.labels().iter().map(ToString::to_string).collect();
            let profile = x.profile().map_err(compute)?;
            let text = if json {
                pretty(&json!({
                    "name": loaded.name,
                    "labels": labels,
                    "face_counts": counts,
                    "profile": profile,
                    "k": profile.k(),
                }))
            } else {
                let mut s = String::new();
                if let Some(n) = &loaded.name {
                    s.push_str(&format!("{n}\n"));
                }
                s.push_str(&format!("dimension: {}\n", profile.n));
                s.push_str(&format!("vertices: {}\n", labels.join(" ")));
                let counts: Vec<String> = counts.iter().map(ToString::to_string).collect();
                s.push_str(&format!("face counts: {}\n", counts.join(" ")));
                s.push_str(&format!("|W|: {}\n", profile.num_codim1));
                s.push_str(&format!(
                    "D: {}\n",
                    profile
                        .degree_d
                        .map_or("not constant".into(), |d| d.to_string())
                ));
                s.push_str(&format!("delta_min: {}\n", profile.delta_min));
                s.push_str(&format!("k: {}\n", profile.k()));
                s
            };
            Ok((0, text))
        }
        Command::Embedded { file, dot } => {
            let x = ctx.load_complex(file)?.complex;
            let g = EmbeddedGraph::build(&x).map_err(compute)?;
            let m = g.adjacency_matrix();
            if let Some(path) = dot {
                std::fs::write(path, g.export_dot())
                    .map_err(|e| (1, format!("{}: {e}", path.display())))?;
            }
            let text = if json {
                pretty(&json!({
                    "order": g.order(),
                    "edges": g.edge_count(),
                    "regular_degree": m.regular_degree(),
                    "connected": m.is_connected(),
                    "vertices": g.vertex_names(),
                }))
            } else {
                format!(
                    "order: {}\nedges: {}\nregular: {}\nconnected: {}\n",
                    g.order(),
                    g.edge_count(),
                    m.regular_degree()
                        .map_or("no".into(), |d| format!("{d}-regular")),
                    yes_no(m.is_connected())
                )
            };
            Ok((0, text))
        }
        Command::Spectrum { file, graph } => {
            let m = match (file, graph) {
                (_, Some(g)) => ctx.load_graph(g)?.1,
                (Some(f), None) => {
                    let x = ctx.load_complex(f)?.complex;
                    EmbeddedGraph::build(&x)
                        .map_err(compute)?
                        .adjacency_matrix()
                }
                (None, None) => return Err((2, "a FILE or --graph FILE is required".into())),
            };
            let s = eigenvalues_symmetric(&m, ctx.g.tol).map_err(compute)?;
            let lambda = s.second_largest().ok();
            let text = if json {
                let eig: Vec<f64> = s.eigenvalues.iter().map(|&x| round_real(x)).collect();
                pretty(&json!({
                    "order": s.order(),
                    "eigenvalues": eig,
                    "lambda": lambda.map(round_real),
                    "residual_bound": round_significant(s.residual_bound),
                }))
            } else {
                let eig: Vec<String> = s.eigenvalues.iter().map(|&x| fmt_real(x)).collect();
                format!(
                    "order: {}\neigenvalues: {}\nlambda: {}\n",
                    s.order(),
                    eig.join(" "),
                    lambda.map_or("undefined".into(), fmt_real)
                )
            };
            Ok((0, text))
        }
        Command::Cheeger { file, prt } => {
            let x = ctx.load_complex(file)?.complex;
            let opts = ctx.search();
            let cut = exact_h(&x, &opts).map_err(compute)?;
            let names = |vs: &[usize]| {
                vs.iter()
                    .map(|&v| x.label(v).to_string())
                    .collect::<Vec<_>>()
            };
            let partition = if *prt {
                Some(prt_minimizer(&x, &opts).map_err(compute)?)
            } else {
                None
            };
            let text = if json {
                let p = partition.as_ref().map(|p| {
                    json!({
                        "value": p.value,
                        "blocks": p.blocks.iter().map(|b| names(b)).collect::<Vec<_>>(),
                        "rainbow_faces": p.rainbow_faces,
                    })
                });
                pretty(&json!({
                    "H": cut.value,
                    "side_a": names(&cut.side_a),
                    "complement": names(&cut.complement()),
                    "crossing": cut.crossing,
                    "prt": p,
                }))
            } else {
                let mut s = format!(
                    "H = {}\nA = {}\ncrossing = {}\n",
                    cut.value,
                    x.subset_name(&cut.side_a),
                    cut.crossing
                );
                if let Some(p) = &partition {
                    let blocks: Vec<String> = p.blocks.iter().map(|b| x.subset_name(b)).collect();
                    s.push_str(&format!(
                        "prt h = {}\nblocks = {}\nrainbow = {}\n",
                        p.value,
                        blocks.join(" "),
                        p.rainbow_faces
                    ));
                }
                s
            };
            Ok((0, text))
        }
        Command::Bounds { file } => {
            let x = ctx.load_complex(file)?.complex;
            let profile = x.profile().map_err(compute)?;
            let g = EmbeddedGraph::build(&x).map_err(compute)?;
            let m = g.adjacency_matrix();
            let s = eigenvalues_symmetric(&m, ctx.g.tol).map_err(compute)?;
            let lambda = s.second_largest().map_err(compute)?;
            let bound = match theorem_bound(&profile, lambda) {
                Ok(b) => Some(b),
                Err(Error::NonConstantDegree | Error::WrongDimension { .. }) => None,
                Err(e) => return Err(compute(e)),
            };
            let sandwich = match (m.regular_degree(), m.is_connected()) {
                (Some(d), true) => Some(graph_bounds(d, lambda)),
                _ => None,
            };
            let text = if json {
                pretty(&json!({
                    "profile": profile,
                    "k": profile.k(),
                    "lambda": round_real(lambda),
                    "bound": bound.map(round_real),
                    "graph_bounds": sandwich.map(|(lo, hi)| [round_real(lo), round_real(hi)]),
                }))
            } else {
                let mut s = format!("lambda = {}\n", fmt_real(lambda));
                match bound {
                    Some(b) => s.push_str(&format!("bound = {}\n", fmt_real(b))),
                    None if profile.degree_d.is_none() => {
                        s.push_str("bound: not applicable (non-constant D)\n")
                    }
                    None => s.push_str("bound: not applicable (dimension below 2)\n"),
                }
                if let Some((lo, hi)) = sandwich {
                    s.push_str(&format!(
                        "graph: {} <= h(G) <= {}\n",
                        fmt_real(lo),
                        fmt_real(hi)
                    ));
                }
                s
            };
            Ok((0, text))
        }
        Command::Verify { file } => {
            let loaded = ctx.load_complex(file)?;
            let opts = ReportOptions {
                search: ctx.search(),
                tol: ctx.g.tol,
            };
            let report = full_report(&loaded.complex, &opts).map_err(compute)?;
            let doc = ReportDocument::new(&report, &loaded.complex, loaded.name, &loaded.expected);
            let mode = if json {
                RenderMode::Json
            } else {
                RenderMode::Human
            };
            let code = if report.verdicts.any_fail() { 1 } else { 0 };
            Ok((code, render_report(&doc, mode)))
        }
        Command::Corpus(CorpusCommand::List) => {
            let entries = corpus::list();
            let text = if json {
                let items: Vec<_> = entries
                    .iter()
                    .map(
                        |e| json!({ "name": e.name, "kind": e.kind, "description": e.description }),
                    )
                    .collect();
                pretty(&serde_json::Value::Array(items))
            } else {
                let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
                entries
                    .iter()
                    .map(|e| format!("{:<width$}  {:<12}  {}\n", e.name, e.kind, e.description))
                    .collect()
            };
            Ok((0, text))
        }
        Command::Corpus(CorpusCommand::Emit { name }) => {
            let f = corpus::resolve(name).map_err(compute)?;
            Ok((0, f.to_json()))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_from_args(
            std::iter::once("cheeger").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn corpus_commands() {
        let (code, out, _) = run_args(&["corpus", "list"]);
        assert_eq!(code, 0);
        assert!(out.contains("ex41") && out.contains("bipyramid-<m>"));
        let (code, out, _) = run_args(&["corpus", "emit", "bipyramid-4"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"facets\""));
        let (code, _, err) = run_args(&["corpus", "emit", "nope"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown corpus entry"));
    }

    #[test]
    fn verify_fixture() {
        let (code, out, _) = run_args(&["verify", "corpus:ex41"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("H = 3/2"));
    }

    #[test]
    fn budget_exit_code() {
        let (code, _, err) =
            run_args(&["--max-exact-vertices", "4", "cheeger", "corpus:bipyramid-6"]);
        assert_eq!(code, 1);
        assert!(err.contains("exact search limit"), "{err}");
    }
}
