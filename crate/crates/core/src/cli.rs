//! Subcommands of the `ramsey-chromatic` binary.
//!
//! Every subcommand writes one JSON document (to standard output or
//! `--json-out`) and maps its result to an exit code: 0 success or
//! certificate found, 1 legitimate negative, 2 input error or rejected
//! certificate, 3 budget ran out before a conclusion.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chromatic::{chi_exact, verify_proper, ChiResult, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::io::{parse_edge_coloring, parse_graph, Format};
use crate::graph::{EdgeColoring, Graph, VertexColoring};
use crate::hunter::{
    generate_candidates, hunt, ramsey_bruteforce, AcyclicPattern, Candidate, CandidateKind, HuntLimits,
    DEFAULT_GUARD_BITS,
};
use crate::mono_matching::{
    find_mono_matching_checked, kiraly_route, ramsey_matching_number, verify_matching_certificate,
    MatchingCertificate, MatchingTargets, ReducedInstance,
};
use crate::mono_tree::{
    build_dual, edge_color_dual, mono_tree_certificate, vertex_coloring_from_dual, verify_tree_certificate,
    TreeCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Negative = 1,
    InputError = 2,
    Inconclusive = 3,
}

#[derive(Debug, Parser)]
#[command(name = "ramsey-chromatic", version, about = "Monochromatic tree and matching certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Graph file format: edges, dimacs or g6.
    #[arg(long, default_value = "edges")]
    pub format: String,
    /// Write JSON here instead of standard output.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
    /// Node budget for searches (chromatic solver, hunt colorings).
    #[arg(long)]
    pub budget: Option<u64>,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic number bounds with a coloring witness.
    Chi {
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Monochromatic tree on at least χ vertices from a 2-edge-coloring.
    TreeCert {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Monochromatic matching of the target size in some color.
    MatchCert {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        targets: String,
        /// Use the class-contraction route instead of direct matching.
        #[arg(long)]
        kiraly: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Matching Ramsey number, and exhaustive arrowing checks on K_n.
    Ramsey {
        #[arg(long)]
        targets: Option<String>,
        /// With --targets, confirm the threshold by search at R-1 and R.
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Contract an optimal vertex coloring into a colored complete graph.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Search candidate hosts for a t-coloring avoiding the pattern.
    Hunt {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        ramsey_value: usize,
        /// mycielski:COUNT, kneser:N,K, multipartite:A,B,..., cycles:L,...,
        /// random:N,P,ATTEMPTS,MIN_CHI, g6:PATH (`-` for standard input).
        #[arg(long = "candidates", required = true)]
        candidates: Vec<String>,
        #[arg(long)]
        chi_budget: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Re-check a certificate against its graph and coloring.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Chi { common, .. }
            | Command::TreeCert { common, .. }
            | Command::MatchCert { common, .. }
            | Command::Ramsey { common, .. }
            | Command::Reduce { common, .. }
            | Command::Hunt { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

/// JSON document, exit status, and human diagnostics of one run.
#[derive(Debug)]
pub struct RunOutput {
    pub status: ExitStatus,
    pub json: Value,
    pub diagnostics: Vec<String>,
}

impl RunOutput {
    fn new(status: ExitStatus, json: Value) -> Self {
        RunOutput { status, json, diagnostics: Vec::new() }
    }
}

pub fn run(cmd: &Command) -> RunOutput {
    let mut out = match dispatch(cmd) {
        Ok(out) => out,
        Err(e) => {
            let mut out = RunOutput::new(ExitStatus::InputError, json!({ "error": e.to_string() }));
            out.diagnostics.push(format!("error: {e}"));
            out
        }
    };
    // the bare formula answer `{"R":r}` is kept exactly as is
    if let Some(obj) = out.json.as_object_mut() {
        if !(obj.len() == 1 && obj.contains_key("R")) {
            obj.entry("seed").or_insert(json!(cmd.common().seed));
        }
    }
    out
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| Error::input(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn read_text(path: &Path) -> Result<String> {
    String::from_utf8(read_input(path)?).map_err(|_| Error::input(format!("{}: not UTF-8", path.display())))
}

fn load_graph(path: &Path, common: &Common) -> Result<Graph> {
    parse_graph(&read_input(path)?, common.format.parse::<Format>()?)
}

fn load_coloring(path: &Path, g: &Graph, t: Option<usize>) -> Result<EdgeColoring> {
    parse_edge_coloring(&read_text(path)?, g, t)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn coloring_triples(ec: &EdgeColoring) -> Value {
    to_value(&ec.iter().map(|(e, c)| [e.u, e.v, c]).collect::<Vec<_>>())
}

fn dispatch(cmd: &Command) -> Result<RunOutput> {
    let common = cmd.common();
    let budget = common.budget.unwrap_or(DEFAULT_BUDGET);
    match cmd {
        Command::Chi { graph, .. } => {
            let g = load_graph(graph, common)?;
            let chi = chi_exact(&g, budget);
            let status = if chi.exact { ExitStatus::Success } else { ExitStatus::Inconclusive };
            let mut out = RunOutput::new(status, to_value(&chi));
            out.diagnostics.push(format!("n={} m={} chi in [{}, {}]", g.n(), g.m(), chi.lower, chi.upper));
            Ok(out)
        }
        Command::TreeCert { graph, coloring, .. } => {
            let g = load_graph(graph, common)?;
            let ec = load_coloring(coloring, &g, Some(2))?;
            let chi = chi_exact(&g, budget);
            let dual = build_dual(&g, &ec)?;
            let link_colors = edge_color_dual(&dual);
            let vc = vertex_coloring_from_dual(&g, &dual, &link_colors)?;
            let cert = mono_tree_certificate(&g, &ec, chi.lower)?;
            let json = json!({
                "kind": "tree",
                "certificate": cert,
                "chi": { "lower": chi.lower, "upper": chi.upper, "exact": chi.exact },
                "dual": {
                    "left": dual.left,
                    "right": dual.right,
                    "links": dual.links,
                    "delta": dual.max_degree(),
                    "link_colors": link_colors,
                    "vertex_classes": vc.classes(),
                },
            });
            Ok(RunOutput::new(ExitStatus::Success, json))
        }
        Command::MatchCert { graph, coloring, targets, kiraly, .. } => {
            let g = load_graph(graph, common)?;
            let targets: MatchingTargets = targets.parse()?;
            let ec = load_coloring(coloring, &g, Some(targets.t()))?;
            let chi = chi_exact(&g, budget);
            let r = ramsey_matching_number(&targets);
            let chi_json = json!({ "lower": chi.lower, "upper": chi.upper, "exact": chi.exact });
            let found = if *kiraly {
                kiraly_route(&g, &ec, &targets, &chi.witness).map(|(ri, cert)| (cert, Some(ri)))
            } else {
                find_mono_matching_checked(&g, &ec, &targets, chi.lower).map(|cert| (cert, None))
            };
            let route = if *kiraly { "kiraly" } else { "direct" };
            match found {
                Ok((cert, ri)) => {
                    let mut json = json!({ "kind": "matching", "route": route, "R": r, "chi": chi_json, "certificate": cert });
                    if let Some(ri) = ri {
                        json["reduced"] = to_value(&ri);
                    }
                    Ok(RunOutput::new(ExitStatus::Success, json))
                }
                Err(Error::NotFound) => {
                    let mut out = RunOutput::new(
                        ExitStatus::Negative,
                        json!({ "kind": "matching", "route": route, "R": r, "chi": chi_json, "found": false }),
                    );
                    out.diagnostics.push(format!("no color reaches its target; chi >= {} < R = {r}", chi.lower));
                    Ok(out)
                }
                Err(e) => Err(e),
            }
        }
        Command::Ramsey { targets, brute, pattern, t, n, .. } => ramsey_command(targets.as_deref(), *brute, pattern.as_deref(), *t, *n),
        Command::Reduce { graph, coloring, .. } => {
            let g = load_graph(graph, common)?;
            let ec = load_coloring(coloring, &g, None)?;
            let chi = chi_exact(&g, budget);
            let ri = crate::mono_matching::kiraly_reduce(&g, &ec, &chi.witness)?;
            let status = if chi.exact { ExitStatus::Success } else { ExitStatus::Inconclusive };
            Ok(RunOutput::new(status, json!({ "kind": "reduced", "chi_exact": chi.exact, "instance": ri })))
        }
        Command::Hunt { pattern, t, ramsey_value, candidates, chi_budget, .. } => {
            let h = load_pattern(pattern)?;
            let mut cands: Vec<Candidate> = Vec::new();
            let chi_budget = chi_budget.unwrap_or(DEFAULT_BUDGET);
            for spec in candidates {
                let kind = parse_candidate_spec(spec, common.seed, chi_budget)?;
                cands.extend(generate_candidates(&kind)?);
            }
            let limits = HuntLimits { coloring_budget: common.budget.unwrap_or(10_000_000), chi_budget };
            let report = hunt(&h, *t, *ramsey_value, cands, limits)?;
            let status = if report.counterexample.is_some() {
                ExitStatus::Success
            } else if report.conclusive() {
                ExitStatus::Negative
            } else {
                ExitStatus::Inconclusive
            };
            let mut out = RunOutput::new(status, json!({ "kind": "hunt", "report": report }));
            for c in &report.candidates {
                out.diagnostics.push(format!(
                    "{:<24} n={:<3} m={:<4} chi={:<4} {:?} ({} colorings)",
                    c.id,
                    c.n,
                    c.m,
                    c.chi.map_or("?".to_string(), |x| x.to_string()),
                    c.status,
                    c.colorings_examined
                ));
            }
            Ok(out)
        }
        Command::Verify { graph, certificate, coloring, t, .. } => {
            let g = load_graph(graph, common)?;
            let doc: Value = serde_json::from_str(&read_text(certificate)?)
                .map_err(|e| Error::input(format!("certificate is not JSON: {e}")))?;
            let (kind, problems) = verify_document(&g, &doc, coloring.as_deref(), *t)?;
            let valid = problems.is_empty();
            let mut out = RunOutput::new(
                if valid { ExitStatus::Success } else { ExitStatus::InputError },
                json!({ "kind": kind, "valid": valid, "problems": problems }),
            );
            out.diagnostics.extend(problems.iter().map(|p| format!("mismatch: {p}")));
            Ok(out)
        }
    }
}

fn ramsey_command(
    targets: Option<&str>,
    brute: bool,
    pattern: Option<&str>,
    t: Option<usize>,
    n: Option<usize>,
) -> Result<RunOutput> {
    if let Some(targets) = targets {
        let targets: MatchingTargets = targets.parse()?;
        let r = ramsey_matching_number(&targets);
        if !brute {
            return Ok(RunOutput::new(ExitStatus::Success, json!({ "R": r })));
        }
        let patterns: Vec<AcyclicPattern> = targets.as_slice().iter().map(|&a| AcyclicPattern::matching(a)).collect();
        let below = ramsey_bruteforce(&patterns, r - 1, DEFAULT_GUARD_BITS)?;
        let at = ramsey_bruteforce(&patterns, r, DEFAULT_GUARD_BITS)?;
        let confirmed = !below.arrowing && at.arrowing;
        let json = json!({
            "R": r,
            "brute": {
                "below": { "n": r - 1, "arrowing": below.arrowing, "avoiding_coloring": below.avoiding_coloring.as_ref().map(coloring_triples) },
                "at": { "n": r, "arrowing": at.arrowing },
                "threshold_confirmed": confirmed,
            },
        });
        return Ok(RunOutput::new(if confirmed { ExitStatus::Success } else { ExitStatus::Negative }, json));
    }
    let (Some(pattern), Some(n)) = (pattern, n) else {
        return Err(Error::input("ramsey needs --targets, or --pattern with --n"));
    };
    let h = load_pattern(pattern)?;
    let patterns = vec![h; t.unwrap_or(2)];
    let o = ramsey_bruteforce(&patterns, n, DEFAULT_GUARD_BITS)?;
    let json = json!({
        "n": n,
        "t": patterns.len(),
        "arrowing": o.arrowing,
        "avoiding_coloring": o.avoiding_coloring.as_ref().map(coloring_triples),
    });
    Ok(RunOutput::new(if o.arrowing { ExitStatus::Success } else { ExitStatus::Negative }, json))
}

/// `path:K`, `star:K`, `matching:K`, or `tree-file:PATH` (edge list).
pub fn load_pattern(spec: &str) -> Result<AcyclicPattern> {
    if let Some(path) = spec.strip_prefix("tree-file:") {
        let g = parse_graph(&read_input(Path::new(path))?, Format::EdgeList)?;
        return AcyclicPattern::new(g);
    }
    spec.parse()
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::input(format!("bad {what} `{x}`"))))
        .collect()
}

pub fn parse_candidate_spec(spec: &str, seed: u64, chi_budget: u64) -> Result<CandidateKind> {
    let (kind, args) = spec.split_once(':').ok_or_else(|| Error::input(format!("bad candidate spec `{spec}`")))?;
    Ok(match kind {
        "mycielski" => CandidateKind::Mycielski { count: parse_list::<usize>(args, "count")?[0] },
        "kneser" => match parse_list::<usize>(args, "kneser parameter")?.as_slice() {
            &[n, k] => CandidateKind::Kneser { n, k },
            _ => return Err(Error::input("kneser:N,K")),
        },
        "multipartite" => CandidateKind::CompleteMultipartite { parts: parse_list(args, "part size")? },
        "cycles" => CandidateKind::Cycles { lengths: parse_list(args, "cycle length")? },
        "random" => match parse_list::<f64>(args, "random parameter")?.as_slice() {
            &[n, p, attempts, min_chi] => CandidateKind::Random {
                n: n as usize,
                p,
                attempts: attempts as usize,
                min_chi: min_chi as usize,
                chi_budget,
                seed,
            },
            _ => return Err(Error::input("random:N,P,ATTEMPTS,MIN_CHI")),
        },
        "g6" => CandidateKind::Graph6Stream { text: read_text(Path::new(args))? },
        other => return Err(Error::input(format!("unknown candidate kind `{other}`"))),
    })
}

fn field_set(doc: &Value) -> Vec<&str> {
    doc.as_object().map(|o| o.keys().map(String::as_str).collect()).unwrap_or_default()
}

fn parse_doc<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::input(format!("malformed certificate: {e}")))
}

/// Classifies a certificate (bare, or wrapped as emitted by a subcommand)
/// and re-checks it. Returns the kind and the list of problems.
pub fn verify_document(g: &Graph, doc: &Value, coloring: Option<&Path>, t: Option<usize>) -> Result<(String, Vec<String>)> {
    let (kind, body) = match (doc.get("kind").and_then(Value::as_str), doc.get("certificate"), doc.get("instance")) {
        (Some(k), Some(c), _) => (k.to_string(), c),
        (Some(k), None, Some(i)) => (k.to_string(), i),
        _ => {
            let keys = field_set(doc);
            let has = |k: &str| keys.contains(&k);
            let kind = if has("chi_lower_used") {
                "tree"
            } else if has("target") {
                "matching"
            } else if has("classes") && has("upper") {
                "chi"
            } else if has("pairs") {
                "reduced"
            } else {
                return Err(Error::input("unrecognized certificate"));
            };
            (kind.to_string(), doc)
        }
    };
    let need_coloring = |t: Option<usize>| -> Result<EdgeColoring> {
        let path = coloring.ok_or_else(|| Error::input(format!("{kind} certificates need --coloring")))?;
        load_coloring(path, g, t)
    };
    let problems = match kind.as_str() {
        "tree" => {
            let cert: TreeCertificate = parse_doc(body)?;
            let ec = need_coloring(Some(t.unwrap_or(2)))?;
            verify_tree_certificate(g, &ec, &cert).err().unwrap_or_default()
        }
        "matching" => {
            let cert: MatchingCertificate = parse_doc(body)?;
            let ec = need_coloring(t)?;
            verify_matching_certificate(g, &ec, &cert).err().unwrap_or_default()
        }
        "chi" => {
            let chi: ChiResult = parse_doc(body)?;
            check_chi(g, &chi)
        }
        "reduced" => {
            let ri: ReducedInstance = parse_doc(body)?;
            let ec = need_coloring(t)?;
            check_reduced(g, &ec, &ri)
        }
        other => return Err(Error::input(format!("cannot verify `{other}` documents"))),
    };
    Ok((kind, problems))
}

fn check_chi(g: &Graph, chi: &ChiResult) -> Vec<String> {
    let mut problems = Vec::new();
    if chi.witness.n() != g.n() {
        problems.push(format!("witness covers {} of {} vertices", chi.witness.n(), g.n()));
        return problems;
    }
    if !verify_proper(g, &chi.witness).unwrap_or(false) {
        problems.push("witness coloring is not proper".into());
    }
    if chi.witness.used_classes() != chi.upper {
        problems.push(format!("witness uses {} classes, upper bound claims {}", chi.witness.used_classes(), chi.upper));
    }
    if chi.lower > chi.upper || chi.exact != (chi.lower == chi.upper) {
        problems.push("inconsistent bounds".into());
    }
    problems
}

fn check_reduced(g: &Graph, ec: &EdgeColoring, ri: &ReducedInstance) -> Vec<String> {
    let mut problems = Vec::new();
    let vc = match VertexColoring::from_classes(g.n(), &ri.classes) {
        Ok(vc) => vc,
        Err(e) => return vec![format!("classes: {e}")],
    };
    if !verify_proper(g, &vc).unwrap_or(false) {
        problems.push("a class is not independent".into());
    }
    if ri.k != ri.classes.len() || ri.pairs.len() != ri.k * ri.k.saturating_sub(1) / 2 {
        problems.push("class pairs do not cover the complete graph".into());
    }
    for p in &ri.pairs {
        let e = p.provenance;
        let joins = e.v < g.n()
            && ((vc.class_of(e.u) == p.a && vc.class_of(e.v) == p.b) || (vc.class_of(e.u) == p.b && vc.class_of(e.v) == p.a));
        if !joins || !g.has_edge(e.u, e.v) {
            problems.push(format!("provenance {e} does not join classes {} and {}", p.a, p.b));
        } else if ec.color(e) != Some(p.color) {
            problems.push(format!("provenance {e} has color {:?}, pair claims {}", ec.color(e), p.color));
        }
    }
    problems
}

/// Parses `args`, runs, writes JSON and diagnostics. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitStatus::InputError as i32 } else { 0 };
        }
    };
    let out = run(&cli.command);
    for line in &out.diagnostics {
        eprintln!("{line}");
    }
    let text = format!("{}\n", out.json);
    match &cli.command.common().json_out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitStatus::InputError as i32;
            }
        }
        None => print!("{text}"),
    }
    out.status as i32
}
