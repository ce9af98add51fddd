//! The `kappa` command line: argument parsing, dispatch and rendering.
//!
//! Exit codes: 0 success, 1 internal error (including overflow), 2 usage,
//! 3 unreadable file, 4 malformed graph file, 5 malformed bits, edge or
//! word, 6 enumeration cap exceeded, 7 violated precondition (bridge,
//! disconnected graph, cyclic orientation, ...), 8 selftest violations.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use kappa_core::corpus;
use kappa_core::kappa::{interval, interval_of_class, SignatureBasis};
use kappa_core::{
    conjugate_elements, count_acyclic, enumerate_acyclic, kappa_classes_bfs, kappa_count, parse_graph, theta,
    theta_inverse, tutte, CoxeterWord, EdgeKind, EdgeRef, Error, Graph, KappaClass, NuSignature, Orientation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bfs,
    Recursion,
    Tutte,
}

#[derive(Debug, Parser)]
#[command(name = "kappa", version, about = "Acyclic orientations under source-to-sink moves")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Largest edge count accepted by enumeration-backed commands.
    #[arg(long, global = true, default_value_t = 30)]
    max_edges: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of acyclic orientations.
    CountAcyc { file: PathBuf },
    /// Number of κ-classes.
    CountKappa {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "recursion")]
        method: Method,
    },
    /// All acyclic orientations, optionally grouped by κ-class.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        classes: bool,
    },
    /// ν-signature of an orientation.
    Signature { file: PathBuf, bits: String },
    /// Whether two orientations are κ-equivalent.
    SameClass {
        file: PathBuf,
        bits1: String,
        bits2: String,
    },
    /// The interval of an edge {U, V}.
    Interval {
        file: PathBuf,
        bits: String,
        #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
        edge: Vec<usize>,
        /// Use the class-level interval.
        #[arg(long)]
        class: bool,
    },
    /// Image of an orientation's class under the deletion/contraction bijection.
    Theta {
        file: PathBuf,
        bits: String,
        #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
        edge: Vec<usize>,
    },
    /// Tutte polynomial, or its value at (X, Y).
    Tutte {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
        eval: Option<Vec<i64>>,
    },
    /// Whether two Coxeter elements are conjugate.
    Conjugate {
        file: PathBuf,
        word1: String,
        word2: String,
    },
    /// Cross-validates the library on generated graphs.
    Selftest {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=6))]
        max_n: u8,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// Outcome of one invocation. `exit_code` is 0 iff `status` is ok.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub format: Format,
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub exit_code: u8,
}

impl CommandResult {
    /// What goes to stdout (success) or stderr (failure).
    pub fn render(&self) -> String {
        match self.format {
            Format::Json => {
                let body = json!({ "status": self.status, "payload": self.payload });
                serde_json::to_string_pretty(&body).expect("values serialize") + "\n"
            }
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
        }
    }
}

/// Failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(code: u8, kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            kind,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::InvalidBits(_)
            | Error::LengthMismatch { .. }
            | Error::InvalidWord(_)
            | Error::NotAnEdge { .. }
            | Error::VertexOutOfRange { .. }
            | Error::InvalidEdgeRef { .. } => (5, "malformed-argument"),
            Error::CapExceeded { .. } => (6, "cap-exceeded"),
            Error::Overflow => (1, "overflow"),
            Error::Parse { .. } => (4, "graph-parse"),
            _ => (7, "precondition"),
        };
        Failure::new(code, kind, e.to_string())
    }
}

type Outcome = std::result::Result<(Value, String), Failure>;

struct Context {
    max_edges: usize,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let format = sniff_format(&argv);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    status: Status::Ok,
                    payload: json!({ "help": text }),
                    format,
                    text,
                    exit_code: 0,
                },
                _ => failure(format, Failure::new(2, "usage", text)),
            };
        }
    };
    let ctx = Context {
        max_edges: cli.max_edges,
    };
    match dispatch(&ctx, cli.command) {
        Ok((payload, text)) => CommandResult {
            status: Status::Ok,
            payload,
            format: cli.format,
            text,
            exit_code: 0,
        },
        Err(f) => failure(cli.format, f),
    }
}

/// Best-effort `--format` lookup so that usage errors honour it too.
fn sniff_format(argv: &[OsString]) -> Format {
    let args: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    for (i, a) in args.iter().enumerate() {
        let value = if a == "--format" {
            args.get(i + 1).map(String::as_str)
        } else {
            a.strip_prefix("--format=")
        };
        if value == Some("json") {
            return Format::Json;
        }
    }
    Format::Text
}

fn failure(format: Format, f: Failure) -> CommandResult {
    let raw = f.message.trim_end();
    let message = raw.strip_prefix("error: ").unwrap_or(raw);
    // clap renders its own usage text, prefix included.
    let text = if f.kind == "usage" {
        raw.to_string()
    } else {
        format!("error: {}", message)
    };
    CommandResult {
        status: Status::Error,
        payload: json!({ "error": message, "kind": f.kind, "exit_code": f.code }),
        format,
        text,
        exit_code: f.code,
    }
}

fn dispatch(ctx: &Context, command: Command) -> Outcome {
    match command {
        Command::CountAcyc { file } => {
            let alpha = count_acyclic(&load(&file)?)?;
            Ok((json!({ "alpha": alpha }), alpha.to_string()))
        }
        Command::CountKappa { file, method } => count_kappa(ctx, &file, method),
        Command::Enumerate { file, classes } => enumerate(ctx, &file, classes),
        Command::Signature { file, bits } => {
            let o = orientation(&load_simple(&file)?, &bits)?;
            let sig = SignatureBasis::new(o.graph())?.signature(&o)?;
            Ok((
                json!({ "orientation": o.to_string(), "signature": sig }),
                sig.to_string(),
            ))
        }
        Command::SameClass { file, bits1, bits2 } => {
            let g = load_simple(&file)?;
            let (o1, o2) = (orientation(&g, &bits1)?, orientation(&g, &bits2)?);
            let basis = SignatureBasis::new(&g)?;
            let (s1, s2) = (basis.signature(&o1)?, basis.signature(&o2)?);
            let same = s1 == s2;
            Ok((json!({ "same_class": same, "signatures": [s1, s2] }), same.to_string()))
        }
        Command::Interval {
            file,
            bits,
            edge,
            class,
        } => {
            let g = load_simple(&file)?;
            let o = orientation(&g, &bits)?;
            let e = edge_ref(&g, &edge)?;
            let i = if class {
                interval_of_class(&o, e)?
            } else {
                interval(&o, e)?
            };
            let text = join(i.vertices());
            Ok((json!({ "vertices": i.vertices(), "relations": i.relations() }), text))
        }
        Command::Theta { file, bits, edge } => {
            let g = load_simple(&file)?;
            let o = orientation(&g, &bits)?;
            let e = edge_ref(&g, &edge)?;
            let image = theta(&o, e)?;
            let back = theta_inverse(&g, e, &image)?;
            debug_assert!(back.contains(&o));
            let class = image.class();
            let target = class.representative.graph();
            let payload = json!({
                "tag": image.tag(),
                "representative": class.representative.to_string(),
                "signature": class.signature,
                "size": class.size(),
                "graph": target.to_string(),
            });
            let text = format!("{} {}\n{}", image.tag(), class.representative, target);
            Ok((payload, text))
        }
        Command::Tutte { file, eval } => tutte_command(&file, eval),
        Command::Conjugate { file, word1, word2 } => {
            let g = load_simple(&file)?;
            let (w1, w2) = (word1.parse::<CoxeterWord>()?, word2.parse::<CoxeterWord>()?);
            let c = conjugate_elements(&g, &w1, &w2)?;
            let (s1, s2) = c.signatures;
            let text = format!("{}\n[{}] [{}]", c.conjugate, s1, s2);
            Ok((json!({ "conjugate": c.conjugate, "signatures": [s1, s2] }), text))
        }
        Command::Selftest { max_n } => selftest(ctx, max_n as usize),
    }
}

fn load(path: &Path) -> std::result::Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(3, "unreadable-file", format!("{}: {}", path.display(), e)))?;
    parse_graph(&text).map_err(|e| Failure::new(4, "graph-parse", format!("{}: {}", path.display(), e)))
}

/// Orientation commands work on the underlying simple graph.
fn load_simple(path: &Path) -> std::result::Result<Arc<Graph>, Failure> {
    Ok(Arc::new(load(path)?.simplified()))
}

fn orientation(g: &Arc<Graph>, bits: &str) -> std::result::Result<Orientation, Failure> {
    let o = Orientation::from_bit_string(Arc::clone(g), bits)?;
    if !o.is_acyclic() {
        return Err(Error::NotAcyclic.into());
    }
    Ok(o)
}

fn edge_ref(g: &Graph, endpoints: &[usize]) -> std::result::Result<EdgeRef, Failure> {
    let (a, b) = (endpoints[0], endpoints[1]);
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    g.edge_index(a, b).map(EdgeRef).ok_or_else(|| {
        Error::NotAnEdge {
            u: a.min(b),
            v: a.max(b),
        }
        .into()
    })
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn check_cap(ctx: &Context, g: &Graph) -> std::result::Result<(), Failure> {
    if g.edge_slots() > ctx.max_edges {
        return Err(Error::CapExceeded {
            edges: g.edge_slots(),
            cap: ctx.max_edges,
        }
        .into());
    }
    Ok(())
}

/// κ of each connected component, multiplied.
fn kappa_by_bfs(ctx: &Context, g: &Graph) -> std::result::Result<u64, Failure> {
    check_cap(ctx, g)?;
    let mut total = 1u64;
    for component in g.connected_components() {
        let (sub, _) = g.induced_subgraph(&component);
        let k = kappa_classes_bfs(&Arc::new(sub), ctx.max_edges)?.len() as u64;
        total = total.checked_mul(k).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

fn count_kappa(ctx: &Context, file: &Path, method: Method) -> Outcome {
    let g = load(file)?.simplified();
    let (k, name) = match method {
        Method::Bfs => (kappa_by_bfs(ctx, &g)?, "bfs"),
        Method::Recursion => (kappa_count(&g)?, "recursion"),
        Method::Tutte => (tutte(&g)?.evaluate(&1u64, &0)?, "tutte"),
    };
    Ok((json!({ "kappa": k, "method": name }), k.to_string()))
}

fn class_json(c: &KappaClass) -> Value {
    json!({
        "representative": c.representative.to_string(),
        "signature": c.signature,
        "members": c.members.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
    })
}

fn enumerate(ctx: &Context, file: &Path, classes: bool) -> Outcome {
    let g = load_simple(file)?;
    if classes {
        let list = kappa_classes_bfs(&g, ctx.max_edges)?;
        let mut text = String::new();
        for c in &list {
            let members: Vec<String> = c.members.iter().map(|o| o.to_string()).collect();
            writeln!(text, "[{}] {}", c.signature, members.join(" ")).unwrap();
        }
        let payload = json!({ "classes": list.iter().map(class_json).collect::<Vec<_>>() });
        Ok((payload, text))
    } else {
        let all: Vec<String> = enumerate_acyclic(&g, ctx.max_edges)?.map(|o| o.to_string()).collect();
        let text = all.join("\n");
        Ok((json!({ "orientations": all }), text))
    }
}

fn tutte_command(file: &Path, eval: Option<Vec<i64>>) -> Outcome {
    let g = load(file)?;
    let t = tutte(&g)?;
    match eval {
        Some(xy) => {
            let value = t.evaluate(&(xy[0] as i128), &(xy[1] as i128))?;
            let number = serde_json::to_value(value).map_err(|_| Failure::from(Error::Overflow))?;
            Ok((json!({ "x": xy[0], "y": xy[1], "value": number }), value.to_string()))
        }
        None => {
            let terms: Vec<(usize, usize, u64)> = t.terms().map(|(i, j, &c)| (i, j, c)).collect();
            let mut text = t.to_string();
            for (i, j, c) in &terms {
                write!(text, "\n{} {} {}", i, j, c).unwrap();
            }
            Ok((json!({ "polynomial": t.to_string(), "terms": terms }), text))
        }
    }
}

/// Three-way κ agreement, α agreement, Θ round trips and click invariance
/// on every connected graph up to `max_n` vertices.
fn selftest(ctx: &Context, max_n: usize) -> Outcome {
    let graphs = corpus::connected_graphs_up_to(max_n);
    let mut rng = corpus::rng(max_n as u64);
    let mut checks = 0usize;
    let mut violations: Vec<String> = Vec::new();
    let mut check = |ok: bool, what: &dyn Fn() -> String| {
        checks += 1;
        if !ok {
            violations.push(what());
        }
    };
    for g in &graphs {
        let arc = Arc::new(g.clone());
        let classes = kappa_classes_bfs(&arc, ctx.max_edges)?;
        let k = [classes.len() as u64, kappa_count(g)?, tutte(g)?.evaluate(&1u64, &0)?];
        check(k[0] == k[1] && k[1] == k[2], &|| {
            format!("kappa disagreement {:?} on {:?}", k, g)
        });
        let alpha = enumerate_acyclic(&arc, ctx.max_edges)?.count() as u64;
        let a = [alpha, count_acyclic(g)?, tutte(g)?.evaluate(&2u64, &0)?];
        check(a[0] == a[1] && a[1] == a[2], &|| {
            format!("alpha disagreement {:?} on {:?}", a, g)
        });
        for (i, kind) in g.classify_edges().into_iter().enumerate() {
            if kind != EdgeKind::CycleEdge {
                continue;
            }
            for c in &classes {
                let e = EdgeRef(i);
                let round = theta(&c.representative, e).and_then(|t| theta_inverse(&arc, e, &t));
                check(round.as_ref() == Ok(c), &|| {
                    format!("theta round trip failed on {:?} edge {}", g, i)
                });
            }
        }
        if g.n() >= 2 {
            let basis = SignatureBasis::new(g)?;
            let o = corpus::random_acyclic(&arc, &mut rng);
            let end = o.apply_clicks(&corpus::random_clicks(&o, 20, &mut rng))?;
            let same: Option<NuSignature> = basis.signature(&o).ok();
            check(same == basis.signature(&end).ok(), &|| {
                format!("signature changed by clicks on {:?}", g)
            });
        }
    }
    let passed = violations.is_empty();
    let text = format!(
        "{} graphs, {} checks, {} violations: {}",
        graphs.len(),
        checks,
        violations.len(),
        if passed { "PASS" } else { "FAIL" }
    );
    if !passed {
        let message = format!("{}\n{}", text, violations.join("\n"));
        return Err(Failure::new(8, "selftest", message));
    }
    Ok((
        json!({ "graphs": graphs.len(), "checks": checks, "violations": violations, "passed": passed }),
        text,
    ))
}
