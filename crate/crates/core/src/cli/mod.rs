//! Command-line driver. Every run produces a [`RunReport`].
//!
//! Exit codes: 0 success, 2 failed check, 3 input or parse error,
//! 4 resource truncation.

pub mod checks;
pub mod figures;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

pub use report::{Check, RunReport};

use crate::error::Error;
use crate::moebius::GenCircle;
use crate::orbit::{approximate_limit_set, enumerate_orbit, GeneratorSet, OrbitConfig};
use crate::quadgroup::{defect, fuchsian_defect, solve_quadrilateral, QuadGroupData};
use crate::render::{render_svg, render_svg_with_counts, Layer, LayerItems, Scene, Style, Viewport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_TRUNCATED: i32 = 4;

const CLOSURE_SAMPLES: usize = 1000;
const CLOSURE_SEED: u64 = 0;

#[derive(Debug, Parser, Serialize)]
#[command(name = "kleinian", version, about = "Exotic circles of quadrilateral reflection groups")]
pub struct Cli {
    /// Also write the run report to this file.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Locate t0 and verify the four-plane tangency configuration.
    SolveT0 {
        /// Verify the residual suite at this t instead of t0.
        #[arg(long)]
        t: Option<f64>,
    },
    /// Work with the reflection group of a quadrilateral datum.
    Quad {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(subcommand)]
        action: QuadAction,
    },
    /// Enumerate the orbit of a circle under a generator file.
    Orbit {
        #[arg(long)]
        gens: PathBuf,
        /// Seed circle as A,B_re,B_im,D.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, default_value = "orbit.jsonl")]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Half-width of the SVG view around the origin.
        #[arg(long, default_value_t = 2.0)]
        view_half_width: f64,
    },
    /// Rerun every reproducible number and figure into a directory.
    Repro {
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadAction {
    /// Solved datum and its invariants.
    Info,
    /// Accumulation of the eta orbit of C on C′.
    Exotic {
        #[arg(long, default_value_t = 15)]
        k_max: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Orbit of C under the reflection group, as JSON lines.
    Orbit {
        #[arg(long, default_value = "quad_orbit.jsonl")]
        out: PathBuf,
    },
    /// Limit-set approximation from the mirror orbits.
    Limitset {
        /// Write the points as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Figure pair: mirrors with limit set, and the orbit of C.
    Render {
        #[arg(short = 'o', long = "output", default_value = "figure.svg")]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EngineArgs {
    #[arg(long = "max-depth", visible_alias = "depth", default_value_t = OrbitConfig::default().max_depth)]
    pub max_depth: usize,
    #[arg(long, default_value_t = OrbitConfig::default().min_diameter)]
    pub min_diameter: f64,
    #[arg(long, default_value_t = OrbitConfig::default().dedup_epsilon)]
    pub dedup_epsilon: f64,
    #[arg(long, default_value_t = OrbitConfig::default().max_items)]
    pub max_items: usize,
    #[arg(long, default_value_t = OrbitConfig::default().limit_point_diameter)]
    pub limit_point_diameter: f64,
    /// Worker threads, 0 for the machine default. Never changes outputs.
    #[arg(long, default_value_t = OrbitConfig::default().workers)]
    pub workers: usize,
}

impl EngineArgs {
    pub fn config(&self) -> OrbitConfig {
        OrbitConfig {
            max_depth: self.max_depth,
            min_diameter: self.min_diameter,
            dedup_epsilon: self.dedup_epsilon,
            max_items: self.max_items,
            limit_point_diameter: self.limit_point_diameter,
            workers: self.workers,
        }
    }
}

/// Error that ends a run with a given exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CannotCertifyClosure => EXIT_TRUNCATED,
            Error::SolverDiverged { .. } => EXIT_CHECK_FAILED,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn write_file(path: &Path, contents: &str, rep: &mut RunReport) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    rep.outputs.push(path.display().to_string());
    Ok(())
}

/// Parse `args`, run, print the report, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let rep = execute(&cli);
    if let Some(msg) = &rep.error {
        eprintln!("error: {msg}");
    }
    let _ = writeln!(std::io::stdout(), "{}", rep.to_json());
    rep.exit_code
}

/// Run a parsed command. Writes `--json` when given.
pub fn execute(cli: &Cli) -> RunReport {
    let start = Instant::now();
    let name = match &cli.command {
        Command::SolveT0 { .. } => "solve-t0".to_string(),
        Command::Quad { action, .. } => format!("quad {}", action_name(action)),
        Command::Orbit { .. } => "orbit".to_string(),
        Command::Repro { .. } => "repro".to_string(),
    };
    let inputs = serde_json::to_value(&cli.command).expect("arguments are serializable");
    let mut rep = RunReport::new(&name, inputs);
    let outcome = match &cli.command {
        Command::SolveT0 { t } => solve_t0(*t, &mut rep),
        Command::Quad { n, s, t, engine, action } => quad(*n, *s, *t, engine, action, &mut rep),
        Command::Orbit { gens, seed, engine, out, svg, view_half_width } => {
            orbit(gens, seed, engine, out, svg.as_deref(), *view_half_width, &mut rep)
        }
        Command::Repro { out_dir } => repro(out_dir, &mut rep),
    };
    rep.exit_code = match outcome {
        Err(f) => {
            rep.error = Some(f.message);
            f.code
        }
        Ok(code) if code != EXIT_OK => code,
        Ok(_) if !rep.all_passed() => EXIT_CHECK_FAILED,
        Ok(_) => EXIT_OK,
    };
    rep.wall_time_s = start.elapsed().as_secs_f64();
    if let Some(path) = &cli.json {
        rep.outputs.push(path.display().to_string());
        let text = rep.to_json();
        if let Err(f) = write_file(path, &text, &mut RunReport::new("", json!(null))) {
            rep.outputs.pop();
            rep.error = Some(f.message);
            rep.exit_code = EXIT_INPUT;
        }
    }
    rep
}

fn action_name(a: &QuadAction) -> &'static str {
    match a {
        QuadAction::Info => "info",
        QuadAction::Exotic { .. } => "exotic",
        QuadAction::Orbit { .. } => "orbit",
        QuadAction::Limitset { .. } => "limitset",
        QuadAction::Render { .. } => "render",
    }
}

type Outcome = Result<i32, Failure>;

fn solve_t0(t: Option<f64>, rep: &mut RunReport) -> Outcome {
    let (c1, r1) = checks::t0_reproduction();
    let (c2, r2) = checks::h_endpoint_values();
    let t0 = r1["t0_bisection"].as_f64().expect("root is a number");
    let t_verify = t.unwrap_or(t0);
    let (c3, tan) = checks::residual_suite(t_verify)?;
    let (c4, r4) = checks::factorization_identity()?;
    rep.checks = vec![c1, c2, c3, c4];
    rep.results = json!({
        "t0_bisection": r1["t0_bisection"],
        "t0_closed_form": r1["t0_closed_form"],
        "bracket": r1["bracket"],
        "sturm_count": r1["sturm_count"],
        "cubic_at_t0": r1["cubic_at_t0"],
        "verified_at": t_verify,
        "residuals": {
            "orthogonality": tan.orthogonality,
            "unit": tan.unit_residual,
            "tangency": tan.tangency_inner,
            "boundary_inversive_distance": tan.boundary_inversive_distance,
        },
        "h_endpoint_values": r2,
        "factorization": r4,
    });
    Ok(EXIT_OK)
}

fn build_quad(n: u32, s: f64, t: f64) -> Result<QuadGroupData, Failure> {
    solve_quadrilateral(n, s, t).map_err(|e| match e {
        Error::NotDiscrete { .. } => Failure::input(format!(
            "{e}; a discrete group needs (s-1)(t-1) <= 4cos^2(pi/n), with equality exactly in the Fuchsian case"
        )),
        other => other.into(),
    })
}

fn quad(n: u32, s: f64, t: f64, engine: &EngineArgs, action: &QuadAction, rep: &mut RunReport) -> Outcome {
    let cfg = engine.config();
    cfg.validate()?;
    let d = build_quad(n, s, t)?;
    let gens = GeneratorSet::from_quadgroup(&d);
    match action {
        QuadAction::Info => {
            rep.checks.push(checks::quad_invariants(&d));
            if d.is_fuchsian() {
                rep.checks.push(checks::prop21_boundary(&d));
            }
            rep.results = json!({
                "data": d,
                "defect": defect(n, s, t),
                "fuchsian_defect": fuchsian_defect(&d),
                "is_fuchsian": d.is_fuchsian(),
                "exotic_circle": d.exotic_circle().ok(),
                "limit_circle": d.limit_circle().ok(),
                "invariants": d.invariants(),
            });
            Ok(EXIT_OK)
        }
        QuadAction::Exotic { k_max, tol } => {
            let acc = d.verify_accumulation(*k_max, *tol)?;
            rep.checks.push(checks::quad_invariants(&d));
            rep.checks.push(checks::accumulation(&d, &acc));
            rep.results = json!({
                "exotic_circle": d.exotic_circle()?,
                "limit_circle": d.limit_circle()?,
                "contraction": d.contraction(),
                "accumulation": acc,
                "isolation_radius_depth_8": d.isolation_radius(8),
                "isolation_radius_depth_12": d.isolation_radius(12),
            });
            Ok(EXIT_OK)
        }
        QuadAction::Orbit { out } => {
            let c = d.exotic_circle()?;
            let orbit = enumerate_orbit(&gens, &c, &cfg)?;
            write_file(out, &orbit.to_json_lines(), rep)?;
            let mins = checks::min_distance_by_depth(&orbit, &d.limit_circle()?);
            rep.checks.push(closure_or_truncated(&gens, &orbit)?);
            rep.checks.push(checks::orbit_accumulates(&mins));
            rep.results = json!({
                "items": orbit.len(),
                "truncated": orbit.truncated,
                "stats": orbit.stats,
                "min_distance_to_limit_circle": mins,
            });
            Ok(if orbit.truncated { EXIT_TRUNCATED } else { EXIT_OK })
        }
        QuadAction::Limitset { out } => {
            let ls = approximate_limit_set(&gens, &cfg)?;
            rep.checks.push(checks::limit_set_closed_curve(&ls.points));
            rep.checks.push(if d.is_fuchsian() {
                checks::fuchsian_round_limit_set(&d, &ls)?
            } else {
                checks::quasicircle_not_round(&ls)?
            });
            if let Some(path) = out {
                let pts: Vec<[f64; 2]> =
                    ls.points.iter().filter_map(|p| p.finite()).map(|z| [z.re, z.im]).collect();
                let text = serde_json::to_string(&json!({"schema": 1, "kind": "limit_set", "points": pts}))
                    .expect("points are serializable");
                write_file(path, &text, rep)?;
            }
            rep.results = json!({
                "points": ls.points.len(),
                "fixed_points": ls.fixed_points,
                "truncated": ls.truncated,
                "unresolved": ls.unresolved,
                "stats": ls.stats,
            });
            Ok(if ls.truncated { EXIT_TRUNCATED } else { EXIT_OK })
        }
        QuadAction::Render { output } => {
            let c = d.exotic_circle()?;
            let ls = approximate_limit_set(&gens, &cfg)?;
            let orbit = enumerate_orbit(&gens, &c, &cfg)?;
            let (path_a, path_b) = figures::figure_paths(output);
            let (svg_a, counts_a) = render_svg_with_counts(&figures::figure_a(&d, &ls)?);
            let (svg_b, counts_b) = render_svg_with_counts(&figures::figure_b(&d, &orbit)?);
            write_file(&path_a, &svg_a, rep)?;
            write_file(&path_b, &svg_b, rep)?;
            let mins = checks::min_distance_by_depth(&orbit, &d.limit_circle()?);
            rep.checks.push(checks::limit_set_closed_curve(&ls.points));
            rep.checks.push(checks::orbit_accumulates(&mins));
            rep.results = json!({
                "limit_set_points": ls.points.len(),
                "orbit_items": orbit.len(),
                "figure_a_layers": counts_a,
                "figure_b_layers": counts_b,
                "min_distance_to_limit_circle": mins,
            });
            Ok(if ls.truncated || orbit.truncated { EXIT_TRUNCATED } else { EXIT_OK })
        }
    }
}

fn closure_or_truncated(gens: &GeneratorSet, orbit: &crate::orbit::OrbitSet) -> Result<Check, Failure> {
    if orbit.truncated {
        return Ok(Check::new("orbit_closure", false, None, "not certified: orbit was truncated at maxItems"));
    }
    Ok(checks::orbit_closure(gens, orbit, CLOSURE_SAMPLES, CLOSURE_SEED)?)
}

fn parse_seed(text: &str) -> Result<GenCircle, Failure> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::input(format!("seed {text:?}: {e}")))?;
    let [a, b_re, b_im, d] = parts[..] else {
        return Err(Failure::input(format!("seed {text:?}: expected A,B_re,B_im,D")));
    };
    Ok(GenCircle::new(a, Complex64::new(b_re, b_im), d)?)
}

fn orbit(
    gens_path: &Path,
    seed: &str,
    engine: &EngineArgs,
    out: &Path,
    svg: Option<&Path>,
    view_half_width: f64,
    rep: &mut RunReport,
) -> Outcome {
    let cfg = engine.config();
    cfg.validate()?;
    let text = fs::read_to_string(gens_path).map_err(|e| Failure::input(format!("{}: {e}", gens_path.display())))?;
    let gens = GeneratorSet::from_json(&text)?;
    let seed = parse_seed(seed)?;
    let orbit = enumerate_orbit(&gens, &seed, &cfg)?;
    write_file(out, &orbit.to_json_lines(), rep)?;
    if let Some(path) = svg {
        let viewport = Viewport::new(Complex64::new(0.0, 0.0), view_half_width, figures::FIGURE_SIZE_PX)?;
        let layer = Layer {
            id: "orbit".into(),
            items: LayerItems::Circles(orbit.circles()),
            style: Style { stroke: "#000000".into(), stroke_width: 0.5, fill: None, point_radius: 0.0 },
        };
        write_file(path, &render_svg(&Scene { layers: vec![layer], viewport }), rep)?;
    }
    rep.checks.push(closure_or_truncated(&gens, &orbit)?);
    rep.results = json!({
        "items": orbit.len(),
        "truncated": orbit.truncated,
        "stats": orbit.stats,
        "labels": gens.labels(),
    });
    Ok(if orbit.truncated { EXIT_TRUNCATED } else { EXIT_OK })
}

/// Invocations run by `repro`, relative to the output directory.
pub fn repro_invocations(dir: &Path) -> Vec<Vec<String>> {
    let p = |name: &str| dir.join(name).display().to_string();
    let quad = |t: &str, rest: &[&str], json: &str| {
        let mut v: Vec<String> = ["quad", "--n", "3", "--s", "2", "--t", t].iter().chain(rest).map(|x| x.to_string()).collect();
        v.push("--json".into());
        v.push(p(json));
        v
    };
    let fig = p("fig4.svg");
    vec![
        vec!["solve-t0".into(), "--json".into(), p("t0.json")],
        quad("2", &["info"], "fuchsian_info.json"),
        quad("2", &["limitset"], "fuchsian_limitset.json"),
        quad("1.5", &["info"], "exotic_info.json"),
        quad("1.5", &["exotic"], "exotic_accumulation.json"),
        quad("1.5", &["limitset"], "exotic_limitset.json"),
        quad("1.5", &["render", "-o", &fig], "fig4_render.json"),
    ]
}

fn repro(dir: &Path, rep: &mut RunReport) -> Outcome {
    fs::create_dir_all(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    let invocations = repro_invocations(dir);
    let mut listing = String::new();
    let mut runs = Vec::new();
    let mut worst = EXIT_OK;
    for args in &invocations {
        listing.push_str("kleinian ");
        listing.push_str(&args.join(" "));
        listing.push('\n');
        let cli = Cli::try_parse_from(std::iter::once("kleinian".to_string()).chain(args.iter().cloned()))
            .map_err(|e| Failure::input(e.to_string()))?;
        let sub = execute(&cli);
        for c in &sub.checks {
            let mut c = c.clone();
            c.detail = format!("[{}] {}", sub.command, c.detail);
            rep.checks.push(c);
        }
        rep.outputs.extend(sub.outputs.iter().cloned());
        worst = worse(worst, sub.exit_code);
        runs.push(json!({"args": args, "exit_code": sub.exit_code, "error": sub.error}));
    }
    write_file(&dir.join("commands.txt"), &listing, rep)?;
    rep.results = json!({ "runs": runs });
    Ok(worst)
}

fn worse(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        EXIT_INPUT => 3,
        EXIT_TRUNCATED => 2,
        EXIT_CHECK_FAILED => 1,
        _ => 0,
    };
    if rank(b) > rank(a) { b } else { a }
}
