//! Command-line front end. `main.rs` only forwards to [`main_with_args`].
//!
//! Exit codes: 0 when everything checked out, 1 when a claim or certificate
//! failed, 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arcs::{arc_complex, disjointness_graph, Surface};
use crate::certify::{certify, flip_graph, Effort, Verdict};
use crate::collapse::{is_collapsible, verify_trace, CollapseTrace, Collapsibility, DEFAULT_BUDGET};
use crate::error::Error;
use crate::simplicial::Complex;
use crate::strong::{core, strong_to_elementary, CoreOrder};
use crate::theorems::{crown_schedule, mobius_collapse_schedule, run_all_with, strip_schedule, Limits};

#[derive(Debug, Parser)]
#[command(name = "arclab", version, about = "Arc complexes of marked surfaces and their collapse certificates")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Node ceiling for backtracking searches.
    #[arg(long, global = true, env = "ARCLAB_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for the theorem suite.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the arc complex of a surface.
    Gen(GenArgs),
    /// Certify a complex as a ball or sphere.
    Check(InputArgs),
    /// Find an elementary collapse of a complex onto a point.
    Collapse(CollapseArgs),
    /// Compute the core by removing dominated vertices.
    Core(CoreArgs),
    /// Flip-graph statistics of a pure complex.
    Flip(FlipArgs),
    /// Run the theorem suite and emit a report.
    Theorems(TheoremArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Polygon,
    Crown,
    Mobius,
    Strip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    surface: Family,
    #[arg(long)]
    n: u32,
    /// Blue vertex count, strips only.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    /// The surface's own collapse schedule when it has one, search otherwise.
    Schedule,
    /// Canonical core, converted to elementary collapses.
    Strong,
    /// Backtracking search over free pairs.
    Search,
}

#[derive(Debug, Args)]
struct CollapseArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, value_enum, default_value_t = Strategy::Schedule)]
    strategy: Strategy,
}

#[derive(Debug, Args)]
struct CoreArgs {
    #[command(flatten)]
    io: InputArgs,
    /// Remove dominated vertices in a seeded random order instead of lowest id first.
    #[arg(long)]
    random: bool,
}

#[derive(Debug, Args)]
struct FlipArgs {
    #[command(flatten)]
    io: InputArgs,
    /// Print only the diameter.
    #[arg(long)]
    diameter: bool,
}

#[derive(Debug, Args)]
struct TheoremArgs {
    #[arg(long, default_value_t = Limits::default().polygon)]
    max_polygon: u32,
    #[arg(long, default_value_t = Limits::default().crown)]
    max_crown: u32,
    #[arg(long, default_value_t = Limits::default().mobius)]
    max_mobius: u32,
    #[arg(long, default_value_t = Limits::default().inner)]
    max_inner: u32,
    /// Largest m + n for integral strips.
    #[arg(long, default_value_t = Limits::default().strip)]
    max_strip: u32,
    /// Directory for report.json and the evidence files.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Claim,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`main_with_args`], writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a, out, err),
        Command::Check(a) => cmd_check(&cli, a, out),
        Command::Collapse(a) => cmd_collapse(&cli, a, out, err),
        Command::Core(a) => cmd_core(&cli, a, out, err),
        Command::Flip(a) => cmd_flip(a, out),
        Command::Theorems(a) => cmd_theorems(&cli, a, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Claim) => 1,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

fn load(path: &Path) -> Result<Complex, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Complex::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn surface_of(a: &GenArgs) -> Result<Surface, Failure> {
    let n = a.n;
    let s = match (a.surface, a.m) {
        (Family::Strip, Some(m)) => Surface::IntegralStrip { m, n },
        (Family::Strip, None) => return Err(Failure::Usage("--surface strip needs --m".into())),
        (_, Some(_)) => return Err(Failure::Usage("--m only applies to strips".into())),
        (Family::Polygon, None) => Surface::Polygon { n },
        (Family::Crown, None) => Surface::Crown { n },
        (Family::Mobius, None) => Surface::MobiusCrown { n },
    };
    s.validate()?;
    Ok(s)
}

fn dot(surface: &Surface) -> Result<String, Error> {
    let a = arc_complex(surface)?;
    let g = disjointness_graph(surface, &a.arcs)?;
    let mut s = format!("graph \"{surface}\" {{\n");
    for arc in &a.arcs {
        let _ = writeln!(s, "  \"{arc}\";");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  \"{}\" -- \"{}\";", a.arcs[u], a.arcs[v]);
    }
    s.push_str("}\n");
    Ok(s)
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let surface = surface_of(a)?;
    let complex = arc_complex(&surface)?.complex;
    if complex.is_void() {
        writeln!(err, "warning: {surface} has no nontrivial arcs; its arc complex is empty")?;
    }
    let text = match a.format {
        Format::Json => complex.to_json(),
        Format::Dot => dot(&surface)?,
    };
    emit(&text, a.out.as_deref(), out)
}

fn cmd_check(cli: &Cli, a: &InputArgs, out: &mut dyn Write) -> Outcome {
    let c = load(&a.input)?;
    let effort = Effort {
        shelling_budget: cli.budget,
        collapse_budget: cli.budget,
    };
    let cert = certify(&c, effort);
    emit(&cert.to_json(), a.out.as_deref(), out)?;
    if cert.verdict == Verdict::Undetermined {
        return Err(Failure::Claim);
    }
    Ok(())
}

/// The trace of the surface's own schedule, if the loaded complex is exactly
/// the generated arc complex of its recorded surface.
fn scheduled_trace(c: &Complex) -> Result<Option<CollapseTrace>, Failure> {
    let Some(surface) = c.surface() else { return Ok(None) };
    if arc_complex(&surface)?.complex != *c {
        return Ok(None);
    }
    let failed = |e: crate::theorems::TheoremError| Failure::Usage(e.to_string());
    let trace = match surface {
        Surface::MobiusCrown { n } => mobius_collapse_schedule(n).map_err(failed)?.full_trace(),
        Surface::Crown { n } => {
            let s = crown_schedule(n).map_err(failed)?;
            let mut t = strong_to_elementary(c, &s.trace)?;
            let (rest, strong) = core(&s.terminal, CoreOrder::Canonical);
            debug_assert_eq!(rest.vertex_count(), 1);
            t.append(strong_to_elementary(&s.terminal, &strong)?);
            t
        }
        Surface::IntegralStrip { m, n } => match strip_schedule(m, n) {
            Ok(s) => strong_to_elementary(c, &s.trace)?,
            Err(_) => return Ok(None),
        },
        Surface::Polygon { .. } => return Ok(None),
    };
    Ok(Some(trace))
}

fn cmd_collapse(cli: &Cli, a: &CollapseArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let c = load(&a.io.input)?;
    let found = match a.strategy {
        Strategy::Schedule => match scheduled_trace(&c)? {
            Some(t) => Collapsibility::Proven(t),
            None => is_collapsible(&c, cli.budget),
        },
        Strategy::Strong => {
            let (k, t) = core(&c, CoreOrder::Canonical);
            if k.vertex_count() == 1 {
                Collapsibility::Proven(strong_to_elementary(&c, &t)?)
            } else {
                Collapsibility::Inconclusive
            }
        }
        Strategy::Search => is_collapsible(&c, cli.budget),
    };
    match found {
        Collapsibility::Proven(t) => {
            let end = verify_trace(&c, &t)?;
            writeln!(err, "collapsed onto {} in {} steps", c.face_labels(end.vertices()).join(" "), t.len())?;
            emit(&t.to_json(), a.io.out.as_deref(), out)
        }
        Collapsibility::Disproven => {
            writeln!(err, "not collapsible")?;
            Err(Failure::Claim)
        }
        Collapsibility::Inconclusive => {
            writeln!(err, "no collapse found within the budget")?;
            Err(Failure::Claim)
        }
    }
}

fn cmd_core(cli: &Cli, a: &CoreArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let c = load(&a.io.input)?;
    let order = if a.random { CoreOrder::Random(cli.seed) } else { CoreOrder::Canonical };
    let (k, t) = core(&c, order);
    writeln!(err, "core has {} vertices after {} removals", k.vertex_count(), t.len())?;
    let file: serde_json::Value = serde_json::from_str(&k.to_json()).expect("complex json parses");
    let value = json!({
        "seed": cli.seed,
        "order": if a.random { "random" } else { "canonical" },
        "vertices": k.vertex_count(),
        "core": file,
        "trace": t,
    });
    emit(&pretty(&value), a.io.out.as_deref(), out)
}

fn cmd_flip(a: &FlipArgs, out: &mut dyn Write) -> Outcome {
    let c = load(&a.io.input)?;
    let g = flip_graph(&c).map_err(|_| Failure::Usage("the flip graph needs a pure complex".into()))?;
    let diameter = g.diameter();
    let text = if a.diameter {
        match diameter {
            Some(d) => format!("{d}\n"),
            None => "disconnected\n".to_string(),
        }
    } else {
        pretty(&json!({
            "triangulations": g.vertex_count(),
            "flips": g.edge_count(),
            "connected": g.is_connected(),
            "diameter": diameter,
        }))
    };
    emit(&text, a.io.out.as_deref(), out)?;
    if diameter.is_none() {
        return Err(Failure::Claim);
    }
    Ok(())
}

fn cmd_theorems(cli: &Cli, a: &TheoremArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let limits = Limits {
        polygon: a.max_polygon,
        crown: a.max_crown,
        mobius: a.max_mobius,
        inner: a.max_inner,
        strip: a.max_strip,
    };
    let report = run_all_with(limits, cli.seed, cli.jobs);
    match &a.out {
        Some(dir) => {
            std::fs::create_dir_all(dir.join("evidence"))?;
            for claim in &report.claims {
                if let (Some(path), Some(value)) = (&claim.evidence_path, &claim.evidence) {
                    std::fs::write(dir.join(path), pretty(value))?;
                }
            }
            std::fs::write(dir.join("report.json"), report.to_json())?;
        }
        None => out.write_all(report.to_json().as_bytes())?,
    }
    for claim in report.failures() {
        writeln!(err, "FAIL {} {:?}: {}", claim.claim, claim.n, claim.detail)?;
    }
    writeln!(
        err,
        "{} claims, {} failed",
        report.claims.len(),
        report.failures().count()
    )?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}
