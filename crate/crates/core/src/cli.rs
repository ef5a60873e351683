//! Command-line interface. [`run`] parses arguments, executes one command
//! and returns what should be written to stdout/stderr with an exit code,
//! so it can be driven in-process by tests.

use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::acyclicity::{classify, find_induced_cycle};
use crate::bigcount::BigCount;
use crate::counting::{count_on, CountKind};
use crate::error::{Error, Result};
use crate::gadgets::{parallel_paths, quotient_census, subdivide_edges, verify_gadget_identities, GadgetReport, GraphSize, Suite};
use crate::generators::{rng, HostGenerator};
use crate::graph::{degeneracy_order, load_graph, write_edge_list, Graph, GraphFormat};
use crate::hom::{DispatchPath, Host, Policy, FALLBACK_WARNING};
use crate::oracle::{brute_hom, brute_ind, brute_inj};
use crate::pattern::{count_automorphisms, Pattern, HARD_MAX_VERTICES};
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "degencount", version, about = "Exact subgraph counting on bounded-degeneracy graphs")]
pub struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for generated hosts and helper searches.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Lift the brute-force budget and allow fallback patterns in benches.
    #[arg(long, global = true)]
    force: bool,
    /// Largest accepted pattern.
    #[arg(long, default_value_t = crate::MAX_PATTERN_SIZE, global = true)]
    max_pattern: usize,
    /// Include wall-clock time in the result.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Hom,
    Inj,
    Ind,
    Copies,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a pattern for the hom, inj and ind problems.
    Classify { pattern: String },
    /// Count copies of a pattern in a host edge list.
    Count {
        #[arg(value_enum)]
        mode: Mode,
        pattern: String,
        host: PathBuf,
        /// Use brute force only.
        #[arg(long)]
        oracle: bool,
        /// Also run brute force and compare.
        #[arg(long)]
        check: bool,
        /// For `copies`: count induced copies.
        #[arg(long)]
        induced: bool,
    },
    /// Build gadgets or verify their identities.
    Gadget {
        #[command(subcommand)]
        action: GadgetAction,
    },
    /// Time hom counting on generated hosts of growing size.
    Bench {
        pattern: String,
        /// degen2, tree or attach<k>.
        generator: String,
        /// Comma separated sizes, e.g. 1e5,2e5,4e5.
        sizes: String,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
    /// Brute-force count.
    Oracle {
        #[arg(value_enum)]
        mode: Mode,
        pattern: String,
        host: PathBuf,
        #[arg(long)]
        induced: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GadgetAction {
    /// Replace every edge by a path of length `ell`.
    Subdivide {
        #[arg(long)]
        ell: usize,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replace every edge by two parallel paths of lengths `p` and `q`.
    Parallel {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a suite of counting identities on the gadgets built from a graph.
    Verify {
        #[arg(long)]
        suite: String,
        input: PathBuf,
    },
    /// Classify all quotients of a cycle.
    Census {
        #[arg(long)]
        k: usize,
    },
}

/// Everything a command reports.
#[derive(Clone, Debug, Serialize)]
pub struct RunResult {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub output: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    pub warnings: Vec<String>,
}

/// Text for stdout/stderr and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    limits: Limits,
    seed: u64,
    force: bool,
    digest: Sha256,
    warnings: Vec<String>,
}

impl Ctx {
    fn read_graph(&mut self, path: &Path) -> Result<Graph> {
        let bytes = fs::read(path)?;
        self.digest.update((bytes.len() as u64).to_le_bytes());
        self.digest.update(&bytes);
        load_graph(BufReader::new(bytes.as_slice()), GraphFormat::EdgeList)
    }

    fn pattern(&mut self, spec: &str) -> Result<Pattern> {
        self.digest.update((spec.len() as u64).to_le_bytes());
        self.digest.update(spec.as_bytes());
        Pattern::parse(spec, self.limits.max_pattern)
    }

    fn warn(&mut self, w: impl Into<String>) {
        let w = w.into();
        if !self.warnings.contains(&w) {
            self.warnings.push(w);
        }
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("degencount".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let g = &cli.global;
    let mut limits = Limits {
        max_pattern: g.max_pattern.min(HARD_MAX_VERTICES),
        ..Limits::default()
    };
    if g.force {
        limits.oracle_budget = f64::INFINITY;
    }
    let mut ctx = Ctx {
        limits,
        seed: g.seed,
        force: g.force,
        digest: Sha256::new(),
        warnings: Vec::new(),
    };
    ctx.digest.update(g.seed.to_le_bytes());
    let started = Instant::now();
    let result = match g.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &mut ctx)),
            Err(e) => Err(Error::InvalidInput(format!("cannot build thread pool: {e}"))),
        },
        None => execute(&cli.command, &mut ctx),
    };
    let elapsed = started.elapsed();
    match result {
        Ok((output, verified)) => {
            let r = RunResult {
                command: args,
                inputs_digest: hex::encode(ctx.digest.finalize()),
                output,
                timing_ms: g.timing.then(|| elapsed.as_secs_f64() * 1e3),
                warnings: ctx.warnings,
            };
            let stdout = match g.format {
                Format::Json => serde_json::to_string_pretty(&r).expect("serializable") + "\n",
                Format::Plain => render_plain(&r),
            };
            Outcome {
                code: if verified { EXIT_OK } else { EXIT_VERIFY },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            log::debug!("command failed: {e:?}");
            Outcome {
                code: EXIT_INPUT,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn render_plain(r: &RunResult) -> String {
    let mut out = String::new();
    match &r.output {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::String(s) if s.contains('\n') => out.push_str(s),
                    Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                    other => out.push_str(&format!("{k}: {other}\n")),
                }
            }
        }
        other => out.push_str(&format!("{other}\n")),
    }
    for w in &r.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    if let Some(t) = r.timing_ms {
        out.push_str(&format!("time_ms: {t:.3}\n"));
    }
    out
}

/// Returns the output value and whether every verification passed.
fn execute(cmd: &Command, ctx: &mut Ctx) -> Result<(Value, bool)> {
    match cmd {
        Command::Classify { pattern } => {
            let h = ctx.pattern(pattern)?;
            let labels: Vec<u64> = (0..h.n() as u64).collect();
            let c = classify(&h, &ctx.limits)?;
            Ok((json!({ "pattern": h.to_string(), "classification": c.to_json(&labels) }), true))
        }
        Command::Count {
            mode,
            pattern,
            host,
            oracle,
            check,
            induced,
        } => cmd_count(ctx, *mode, pattern, host, *oracle, *check, *induced),
        Command::Oracle {
            mode,
            pattern,
            host,
            induced,
        } => cmd_count(ctx, *mode, pattern, host, true, false, *induced),
        Command::Gadget { action } => cmd_gadget(ctx, action),
        Command::Bench {
            pattern,
            generator,
            sizes,
            repeats,
        } => cmd_bench(ctx, pattern, generator, sizes, *repeats),
    }
}

fn kind_of(mode: Mode, induced: bool) -> CountKind {
    match mode {
        Mode::Hom => CountKind::Hom,
        Mode::Inj => CountKind::Inj,
        Mode::Ind => CountKind::Ind,
        Mode::Copies => CountKind::Copies { induced },
    }
}

fn oracle_count(kind: CountKind, h: &Pattern, g: &Graph, limits: &Limits) -> Result<BigCount> {
    match kind {
        CountKind::Hom => brute_hom(h, g, limits),
        CountKind::Inj => brute_inj(h, g, limits),
        CountKind::Ind => brute_ind(h, g, limits),
        CountKind::Copies { induced } => {
            let labelled = if induced { brute_ind(h, g, limits)? } else { brute_inj(h, g, limits)? };
            Ok(labelled / count_automorphisms(h))
        }
    }
}

fn cmd_count(ctx: &mut Ctx, mode: Mode, spec: &str, host: &Path, oracle: bool, check: bool, induced: bool) -> Result<(Value, bool)> {
    let h = ctx.pattern(spec)?;
    let g = ctx.read_graph(host)?;
    let kind = kind_of(mode, induced);
    let mut out = json!({
        "mode": format!("{mode:?}").to_lowercase(),
        "pattern": h.to_string(),
        "host": { "n": g.n(), "m": g.m() },
    });
    if mode == Mode::Copies {
        out["induced"] = json!(induced);
    }
    if oracle {
        let count = oracle_count(kind, &h, &g, &ctx.limits)?;
        out["count"] = json!(count.to_string());
        out["method"] = json!("oracle");
        return Ok((out, true));
    }
    let host_ctx = Host::new(&g);
    let report = count_on(kind, &h, &host_ctx, Policy::Auto, &ctx.limits)?;
    out["host"]["degeneracy"] = json!(host_ctx.kappa());
    out["count"] = json!(report.count.to_string());
    out["method"] = json!("engine");
    for t in &report.evaluation.terms {
        for w in &t.warnings {
            ctx.warn(w.clone());
        }
    }
    if kind == CountKind::Hom {
        out["path"] = serde_json::to_value(report.evaluation.terms[0].path).expect("serializable");
    } else {
        out["terms"] = serde_json::to_value(&report.evaluation.terms).expect("serializable");
    }
    let mut verified = true;
    if check {
        let expected = oracle_count(kind, &h, &g, &ctx.limits)?;
        verified = expected == report.count;
        out["oracle_count"] = json!(expected.to_string());
        out["check"] = json!(if verified { "pass" } else { "fail" });
    }
    Ok((out, verified))
}

fn gadget_output(name: String, input: &Graph, g: &Graph, output: &Option<PathBuf>) -> Result<(Value, bool)> {
    let report = GadgetReport {
        construction: name,
        input: GraphSize {
            name: "F".into(),
            n: input.n(),
            m: input.m(),
        },
        outputs: vec![GraphSize {
            name: "G".into(),
            n: g.n(),
            m: g.m(),
        }],
        identities: Vec::new(),
    };
    let mut out = json!({
        "report": report,
        "girth": g.girth(),
        "degeneracy": degeneracy_order(g).kappa,
    });
    let mut text = Vec::new();
    write_edge_list(g, &mut text)?;
    match output {
        Some(path) => {
            fs::write(path, &text)?;
            out["written_to"] = json!(path.display().to_string());
        }
        None => out["edge_list"] = json!(String::from_utf8(text).expect("ascii")),
    }
    Ok((out, true))
}

fn cmd_gadget(ctx: &mut Ctx, action: &GadgetAction) -> Result<(Value, bool)> {
    match action {
        GadgetAction::Subdivide { ell, input, output } => {
            let f = ctx.read_graph(input)?;
            let g = subdivide_edges(&f, *ell)?;
            gadget_output(format!("subdivide(ell={ell})"), &f, &g, output)
        }
        GadgetAction::Parallel { p, q, input, output } => {
            let f = ctx.read_graph(input)?;
            let g = parallel_paths(&f, *p, *q)?;
            gadget_output(format!("parallel(p={p},q={q})"), &f, &g, output)
        }
        GadgetAction::Verify { suite, input } => {
            let suite: Suite = suite.parse()?;
            let f = ctx.read_graph(input)?;
            let report = verify_gadget_identities(&f, suite)?;
            let ok = report.passed();
            Ok((json!({ "report": report, "passed": ok }), ok))
        }
        GadgetAction::Census { k } => {
            ctx.digest.update((*k as u64).to_le_bytes());
            let census = quotient_census(*k)?;
            let ok = census.passed();
            Ok((json!({ "census": census, "passed": ok }), ok))
        }
    }
}

fn parse_sizes(sizes: &str) -> Result<Vec<usize>> {
    sizes
        .split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<usize>()
                .ok()
                .or_else(|| s.parse::<f64>().ok().filter(|x| x.is_finite() && *x >= 0.0 && x.fract() == 0.0).map(|x| x as usize))
                .ok_or_else(|| Error::InvalidInput(format!("bad size {s:?}")))
        })
        .collect()
}

fn cmd_bench(ctx: &mut Ctx, spec: &str, generator: &str, sizes: &str, repeats: usize) -> Result<(Value, bool)> {
    let h = ctx.pattern(spec)?;
    let gen: HostGenerator = generator.parse()?;
    ctx.digest.update(generator.as_bytes());
    ctx.digest.update(sizes.as_bytes());
    let sizes = parse_sizes(sizes)?;
    if !ctx.force && !h.is_forest() {
        if let Some(cycle) = find_induced_cycle(&h, 6) {
            return Err(Error::guard(
                "benchmark pattern induced cycle length (brute-force fallback; use --force)",
                cycle.len(),
                5,
            ));
        }
        if h.m() > ctx.limits.max_orientation_edges {
            return Err(Error::guard("benchmark pattern edges", h.m(), ctx.limits.max_orientation_edges));
        }
    }
    let mut rows = Vec::new();
    let mut times: Vec<f64> = Vec::new();
    for &n in &sizes {
        let g = gen.generate(n, &mut rng(ctx.seed));
        let mut best = f64::INFINITY;
        let mut result = None;
        for _ in 0..repeats.max(1) {
            let t = Instant::now();
            let host = Host::new(&g);
            let r = crate::hom::hom_count_on(&h, &host, Policy::Auto, &ctx.limits)?;
            best = best.min(t.elapsed().as_secs_f64() * 1e3);
            result = Some((r, host.kappa()));
        }
        let (r, kappa) = result.expect("at least one run");
        if r.meta.path == DispatchPath::Oracle {
            ctx.warn(FALLBACK_WARNING);
        }
        times.push(best);
        rows.push(json!({
            "n": g.n(),
            "m": g.m(),
            "degeneracy": kappa,
            "count": r.count.to_string(),
            "path": r.meta.path,
            "ms": best,
        }));
    }
    let ratios: Vec<f64> = times.windows(2).map(|w| w[1] / w[0]).collect();
    Ok((
        json!({
            "pattern": h.to_string(),
            "generator": generator,
            "runs": rows,
            "ratios": ratios,
        }),
        true,
    ))
}
