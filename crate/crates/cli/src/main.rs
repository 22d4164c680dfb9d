//! `projtri`: validate, classify, transform and generate projective-plane
//! triangulations, and cross-check verdicts against the polytope oracle.
//!
//! Exit codes: 0 success / t-perfect, 1 t-imperfect, 2 invalid input,
//! 3 oracle cap exceeded, 4 oracle and classifier disagree.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use projtri::catalog::{build_family, FamilySpec};
use projtri::detectors::{self, Certificate, ClassificationReport, ClassifyError};
use projtri::oracle::{self, Caps, OracleError};
use projtri::surface::{parse_pprs, validate, write_pprs, EmbeddedGraph, ValidateOptions};
use projtri::transforms::{self, LogEntry, TransformLog};
use projtri::Graph;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "projtri", version, about = "t-perfection of projective-plane triangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// `.pprs` file, or `-` for standard input
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct Output {
    /// where to write the resulting `.pprs` (standard output if omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    /// also write the transform log here
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the embedding invariants and report violations.
    Validate {
        #[command(flatten)]
        input: Input,
        /// only check the projective-plane embedding, not that faces are triangles
        #[arg(long)]
        embedding_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide t-perfection and print the forbidden-structure certificates.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Even-contract at a degree-4 vertex x with opposite link vertices b, b'.
    Contract {
        #[command(flatten)]
        input: Input,
        /// x,b,b'
        #[arg(long, value_parser = triple)]
        site: [usize; 3],
        #[command(flatten)]
        output: Output,
    },
    /// Even-split vertex y between the gate neighbours a, a'.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        at: usize,
        /// a,a'
        #[arg(long, value_parser = pair)]
        gate: [usize; 2],
        #[command(flatten)]
        output: Output,
    },
    /// Attach an octahedron into a face, or delete one enclosed by a triangle.
    #[command(group(ArgGroup::new("op").required(true).args(["attach", "delete"])))]
    Octa {
        #[command(flatten)]
        input: Input,
        /// face u,v,w
        #[arg(long, value_parser = triple)]
        attach: Option<[usize; 3]>,
        /// enclosing triangle u,v,w
        #[arg(long, value_parser = triple)]
        delete: Option<[usize; 3]>,
        #[command(flatten)]
        output: Output,
    },
    /// Apply reductions until the triangulation is irreducible.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Generate a family instance, e.g. `gen i16 1,2,3`, `gen i18 2`, `gen i19 1`.
    Gen {
        family: String,
        params: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force polytope / perfection verdicts, compared with `classify`.
    Oracle {
        #[arg(value_enum, default_value_t = OracleMode::Tperfect)]
        mode: OracleMode,
        #[command(flatten)]
        input: Input,
        /// override every oracle size cap
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Graphviz export with the certificate highlighted.
    ExportDot {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply a transform log (one move per line) to a triangulation.
    Replay {
        #[command(flatten)]
        input: Input,
        #[arg(long = "moves")]
        moves: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    /// integrality of TSTAB by vertex enumeration
    Tperfect,
    /// chromatic number = clique number on all induced subgraphs
    Perfect,
    /// list the TSTAB inequalities
    Tstab,
    /// list all stable sets
    StableSets,
}

fn triple(s: &str) -> Result<[usize; 3], String> {
    ids::<3>(s)
}

fn pair(s: &str) -> Result<[usize; 2], String> {
    ids::<2>(s)
}

fn ids<const K: usize>(s: &str) -> Result<[usize; K], String> {
    let v: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("`{p}` is not a vertex id")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("expected {K} comma-separated vertex ids"))
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = if matches!(e, OracleError::CapExceeded { .. }) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

impl From<transforms::TransformError> for Failure {
    fn from(e: transforms::TransformError) -> Self {
        Failure::invalid(e)
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::invalid(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
    }
}

fn read_graph(input: &Input) -> Result<EmbeddedGraph, Failure> {
    parse_pprs(&read_text(&input.input)?).map_err(|e| Failure::invalid(format!("{}: {e}", input.input.display())))
}

/// Parsed, and a valid projective-plane triangulation.
fn read_triangulation(input: &Input) -> Result<EmbeddedGraph, Failure> {
    let g = read_graph(input)?;
    let r = validate(&g, ValidateOptions { triangulation: true });
    if !r.ok {
        let first = &r.violations[0];
        return Err(Failure::invalid(format!(
            "not a projective-plane triangulation: {}: {}",
            first.rule, first.locus
        )));
    }
    Ok(g)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cert_line(out: &mut String, key: &str, cert: &Option<Certificate>) {
    match cert {
        Some(c) => writeln!(out, "{key}: {}", c.to_json()),
        None => writeln!(out, "{key}: none"),
    }
    .expect("string write");
}

fn classification_text(g: &Graph, r: &ClassificationReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "VERTICES: {}", g.n()).unwrap();
    writeln!(w, "EDGES: {}", g.edge_count()).unwrap();
    writeln!(w, "EULERIAN: {}", yes(r.eulerian)).unwrap();
    cert_line(w, "NON_EULERIAN", &r.non_eulerian);
    match r.non_nice_triangle {
        Some(t) => writeln!(w, "NICE: no (triangle {} {} {} has interior vertices)", t[0], t[1], t[2]).unwrap(),
        None => writeln!(w, "NICE: yes").unwrap(),
    }
    cert_line(w, "K4", &r.k4);
    cert_line(w, "ODD_HOLE", &r.odd_hole);
    cert_line(w, "C7BAR", &r.c7bar);
    cert_line(w, "LOOSE_ODD_WHEEL", &r.loose_odd_wheel);
    writeln!(w, "PERFECT: {}", yes(r.perfect)).unwrap();
    writeln!(w, "STRONGLY_T_PERFECT: {}", yes(r.strongly_t_perfect)).unwrap();
    writeln!(w, "T_PERFECT: {}", yes(r.t_perfect)).unwrap();
    writeln!(w, "PERFECT_WITHOUT_K4: {}", yes(r.perfect && r.k4.is_none())).unwrap();
    writeln!(w, "NO_LOOSE_ODD_WHEEL_NO_C7BAR: {}", yes(r.t_perfect)).unwrap();
    writeln!(w, "CONSISTENT: {}", yes(r.consistent)).unwrap();
    writeln!(w, "VERDICT: {}", if r.t_perfect { "t-perfect" } else { "t-imperfect" }).unwrap();
    out
}

fn verdict_code(t_perfect: bool) -> u8 {
    if t_perfect {
        0
    } else {
        1
    }
}

fn map_text(map: &[Option<usize>]) -> String {
    map.iter()
        .enumerate()
        .map(|(v, m)| match m {
            Some(w) => format!("{v}:{w}"),
            None => format!("{v}:-"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes the result graph and reports the moves.
fn emit(g: &EmbeddedGraph, log: &TransformLog, source_n: usize, output: &Output) -> Result<String, Failure> {
    if let Some(path) = &output.log {
        write_file(path, &log.to_text())?;
    }
    let pprs = write_pprs(g);
    match &output.output {
        None => Ok(pprs),
        Some(path) => {
            write_file(path, &pprs)?;
            let mut out = String::new();
            for e in &log.entries {
                writeln!(out, "MOVE: {}", e.step).unwrap();
            }
            writeln!(out, "STEPS: {}", log.len()).unwrap();
            writeln!(out, "MAP: {}", map_text(&log.composite_map(source_n))).unwrap();
            writeln!(out, "VERTICES: {}", g.n()).unwrap();
            writeln!(out, "EDGES: {}", g.edge_count()).unwrap();
            writeln!(out, "WROTE: {}", path.display()).unwrap();
            Ok(out)
        }
    }
}

fn single(entry: LogEntry) -> TransformLog {
    TransformLog { entries: vec![entry] }
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Validate { input, embedding_only, json } => {
            let g = read_graph(&input)?;
            let r = validate(&g, ValidateOptions { triangulation: !embedding_only });
            let code = if r.ok { 0 } else { 2 };
            if json {
                return Ok((serde_json::to_string(&r).expect("serialisable") + "\n", code));
            }
            let mut out = String::new();
            writeln!(out, "VALID: {}", yes(r.ok)).unwrap();
            writeln!(out, "VERTICES: {}", r.vertices).unwrap();
            writeln!(out, "EDGES: {}", r.edges).unwrap();
            if let Some(f) = r.faces {
                writeln!(out, "FACES: {f}").unwrap();
            }
            if let Some(chi) = r.euler_characteristic {
                writeln!(out, "EULER_CHARACTERISTIC: {chi}").unwrap();
            }
            for v in &r.violations {
                writeln!(out, "VIOLATION: {}: {}", v.rule, v.locus).unwrap();
            }
            Ok((out, code))
        }
        Command::Classify { input, json } => {
            let g = read_graph(&input)?;
            let r = detectors::classify(&g).map_err(|e| match e {
                ClassifyError::Invalid(rep) => Failure::invalid(format!(
                    "not a projective-plane triangulation: {}",
                    rep.violations
                        .iter()
                        .map(|v| format!("{}: {}", v.rule, v.locus))
                        .collect::<Vec<_>>()
                        .join("; ")
                )),
            })?;
            let text = if json {
                serde_json::to_string(&r).expect("serialisable") + "\n"
            } else {
                classification_text(g.graph(), &r)
            };
            Ok((text, verdict_code(r.t_perfect)))
        }
        Command::Contract { input, site, output } => {
            let g = read_triangulation(&input)?;
            let [x, b, b2] = site;
            let s = transforms::find_even_contractions(&g)
                .into_iter()
                .find(|s| s.x == x && ((s.b, s.b2) == (b, b2) || (s.b, s.b2) == (b2, b)))
                .ok_or_else(|| Failure::invalid(format!("{x},{b},{b2} is not an even-contraction site")))?;
            let (h, entry) = transforms::even_contract(&g, &s)?;
            Ok((emit(&h, &single(entry), g.n(), &output)?, 0))
        }
        Command::Split { input, at, gate, output } => {
            let g = read_triangulation(&input)?;
            let (h, entry) = transforms::even_split(&g, at, gate[0], gate[1])?;
            Ok((emit(&h, &single(entry), g.n(), &output)?, 0))
        }
        Command::Octa { input, attach, delete, output } => {
            let g = read_triangulation(&input)?;
            let (h, entry) = match (attach, delete) {
                (Some(f), _) => transforms::attach_octahedron(&g, f)?,
                (None, Some(t)) => transforms::delete_octahedron(&g, t)?,
                (None, None) => unreachable!("clap requires one of --attach, --delete"),
            };
            Ok((emit(&h, &single(entry), g.n(), &output)?, 0))
        }
        Command::Reduce { input, output } => {
            let g = read_triangulation(&input)?;
            let (h, log) = transforms::reduce_to_irreducible(&g)?;
            Ok((emit(&h, &log, g.n(), &output)?, 0))
        }
        Command::Replay { input, moves, output } => {
            let g = read_triangulation(&input)?;
            let steps = transforms::parse_log(&read_text(&moves)?)?;
            let (h, log) = transforms::replay(&g, &steps)?;
            Ok((emit(&h, &log, g.n(), &output)?, 0))
        }
        Command::Gen { family, params, output } => {
            let spec = FamilySpec::parse(&family, &params).map_err(Failure::invalid)?;
            let entry = build_family(&spec).map_err(Failure::invalid)?;
            let pprs = write_pprs(&entry.graph);
            match output {
                None => Ok((pprs, 0)),
                Some(path) => {
                    write_file(&path, &pprs)?;
                    Ok((
                        format!("FAMILY: {spec}\nVERTICES: {}\nWROTE: {}\n", entry.graph.n(), path.display()),
                        0,
                    ))
                }
            }
        }
        Command::Oracle { mode, input, cap, json } => {
            let eg = read_graph(&input)?;
            let caps = cap.map(Caps::uniform).unwrap_or_default();
            run_oracle(mode, &eg, &caps, json)
        }
        Command::ExportDot { input, output } => {
            let eg = read_graph(&input)?;
            let dot = export_dot(&eg);
            match output {
                None => Ok((dot, 0)),
                Some(path) => {
                    write_file(&path, &dot)?;
                    Ok((format!("WROTE: {}\n", path.display()), 0))
                }
            }
        }
    }
}

/// Classification to compare the oracle against: the embedded classifier
/// on valid triangulations, the graph-level detectors otherwise.
fn reference(eg: &EmbeddedGraph) -> (ClassificationReport, &'static str) {
    match detectors::classify(eg) {
        Ok(r) => (r, "classify"),
        Err(_) => (detectors::classify_graph(eg.graph(), None), "graph detectors (input is not a projective-plane triangulation)"),
    }
}

fn agreement(out: &mut String, oracle_says: bool, classifier_says: bool, source: &str) -> u8 {
    if oracle_says == classifier_says {
        writeln!(out, "AGREEMENT: agree with {source}").unwrap();
        0
    } else {
        writeln!(out, "AGREEMENT: DISAGREE with {source} ({})", yes(classifier_says)).unwrap();
        4
    }
}

fn run_oracle(mode: OracleMode, eg: &EmbeddedGraph, caps: &Caps, json: bool) -> Result<(String, u8), Failure> {
    let g = eg.graph();
    let mut out = String::new();
    match mode {
        OracleMode::Tperfect => {
            let v = oracle::is_t_perfect_bruteforce(g, caps)?;
            let (r, source) = reference(eg);
            let points = |p: &Option<Vec<_>>| p.as_ref().map(|p: &Vec<_>| oracle::format_point(p));
            if json {
                let value = serde_json::json!({
                    "t_perfect": v.t_perfect,
                    "tstab_vertices": v.vertex_count,
                    "witness": points(&v.witness),
                    "fractional_vertex": points(&v.fractional_vertex),
                    "classifier_t_perfect": r.t_perfect,
                    "agree": v.t_perfect == r.t_perfect,
                });
                let code = if v.t_perfect != r.t_perfect { 4 } else { verdict_code(v.t_perfect) };
                return Ok((value.to_string() + "\n", code));
            }
            match &v.witness {
                Some(w) => writeln!(out, "T_PERFECT: false, witness {}", oracle::format_point(w)).unwrap(),
                None => writeln!(out, "T_PERFECT: true").unwrap(),
            }
            writeln!(out, "TSTAB_VERTICES: {}", v.vertex_count).unwrap();
            if let Some(p) = &v.fractional_vertex {
                writeln!(out, "FRACTIONAL_VERTEX: {}", oracle::format_point(p)).unwrap();
            }
            let code = agreement(&mut out, v.t_perfect, r.t_perfect, source);
            Ok((out, if code == 0 { verdict_code(v.t_perfect) } else { code }))
        }
        OracleMode::Perfect => {
            let p = oracle::is_perfect_bruteforce(g, caps)?;
            let method = if g.n() <= caps.sweep { "chromatic sweep" } else { "odd hole / anti-hole search" };
            let (r, source) = reference(eg);
            if json {
                let value = serde_json::json!({ "perfect": p, "method": method, "classifier_perfect": r.perfect });
                return Ok((value.to_string() + "\n", if p == r.perfect { 0 } else { 4 }));
            }
            writeln!(out, "PERFECT: {p}").unwrap();
            writeln!(out, "METHOD: {method}").unwrap();
            let code = agreement(&mut out, p, r.perfect, source);
            Ok((out, code))
        }
        OracleMode::Tstab => {
            let s = oracle::tstab_system(g, caps)?;
            for row in &s.rows {
                let lhs: Vec<String> = row
                    .support
                    .iter()
                    .map(|&v| {
                        let c = &row.coeffs[v];
                        if c.to_string() == "1" {
                            format!("x{v}")
                        } else {
                            format!("{c} x{v}")
                        }
                    })
                    .collect();
                writeln!(out, "{}: {} <= {}", row.tag, lhs.join(" + "), row.rhs).unwrap();
            }
            Ok((out, 0))
        }
        OracleMode::StableSets => {
            let sets = oracle::enumerate_stable_sets(g, caps)?;
            writeln!(out, "COUNT: {}", sets.len()).unwrap();
            for s in sets {
                let ids: Vec<String> = s.iter().map(usize::to_string).collect();
                writeln!(out, "{{{}}}", ids.join(",")).unwrap();
            }
            Ok((out, 0))
        }
    }
}

/// DOT with certificate vertices in red (the hub double-circled), the
/// certificate cycle drawn bold and orientation-reversing edges dashed.
fn export_dot(eg: &EmbeddedGraph) -> String {
    let g = eg.graph();
    let (r, _) = reference(eg);
    let cert = r
        .loose_odd_wheel
        .or(r.c7bar)
        .or(r.k4)
        .or(r.odd_hole)
        .or(r.non_eulerian);
    let mut marked = vec![false; g.n()];
    let mut cycle_edges = Vec::new();
    let mut hub = None;
    if let Some(c) = &cert {
        for &v in &c.vertices {
            marked[v] = true;
        }
        hub = c.hub;
        let cyc = c.cycle.clone().unwrap_or_else(|| c.vertices.clone());
        if cyc.len() >= 3 {
            for i in 0..cyc.len() {
                let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                cycle_edges.push((a.min(b), a.max(b)));
            }
        }
        if let Some(h) = c.hub {
            for &w in c.odd_neighbours.iter().flatten() {
                cycle_edges.push((h.min(w), h.max(w)));
            }
        }
    }
    let mut out = String::from("graph projtri {\n");
    if let Some(c) = &cert {
        writeln!(out, "  // certificate {}", c.to_json()).unwrap();
    }
    writeln!(out, "  node [shape=circle];").unwrap();
    for (v, &m) in marked.iter().enumerate() {
        let mut attrs = Vec::new();
        if m {
            attrs.push("color=red".to_string());
            attrs.push("class=certificate".to_string());
        }
        if hub == Some(v) {
            attrs.push("shape=doublecircle".to_string());
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for (u, v) in g.edges() {
        let mut attrs = Vec::new();
        if eg.signature(u, v) == Some(true) {
            attrs.push("style=dashed");
        }
        if cycle_edges.contains(&(u, v)) {
            attrs.push("color=red");
            attrs.push("penwidth=2.5");
        }
        if attrs.is_empty() {
            writeln!(out, "  {u} -- {v};").unwrap();
        } else {
            writeln!(out, "  {u} -- {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
