//! Command-line front end for the `stablemap` engine.
//!
//! Every command renders its whole output into a string first, so output is
//! byte-identical across runs and worker counts, and tests can drive the
//! commands without spawning a process.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stablemap::eulerchi::{chi_potential, chi_table, crosscheck_chi, solve_phi0_chi};
use stablemap::qfield::{format_bigrat, rat};
use stablemap::series::MultiSeries;
use stablemap::solver::{
    ode_residuals, potential_expansion_sides, solve, verify_implicit_numeric, ClassTable,
};
use stablemap::target::{
    count_maps_bruteforce, map_class_pn, verify_recurrence, TargetSpace, TargetSpec,
};
use stablemap::trees::{enum_trees, tree_sum_potential};
use stablemap::Error;

/// Spread bound for the floating-point implicit-solution check.
pub const IMPLICIT_TOLERANCE: f64 = 1e-5;
const IMPLICIT_U: i64 = 4;
const IMPLICIT_Z: f64 = 0.01;
const IMPLICIT_T: [f64; 3] = [0.0, 0.005, 0.01];

#[derive(Parser, Debug)]
#[command(name = "stablemap", version, about = "Virtual Poincaré polynomials of genus-zero stable map spaces")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Target space: `point`, `pn:N` or `file:PATH`.
    #[arg(long, global = true, default_value = "point")]
    pub target: String,
    /// Largest number of marked points.
    #[arg(long, global = true, default_value_t = 4)]
    pub kmax: usize,
    /// Degree bound, one comma-separated component per curve class
    /// generator. Defaults to all zeros.
    #[arg(long, global = true, value_delimiter = ',')]
    pub dmax: Option<Vec<usize>>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Size of the worker pool used by the tree sum and enumeration.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Class table from the closed-form solver.
    Compute,
    /// Tree-sum potential as a series.
    Oracle,
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Euler characteristic table from the u -> 1 limit.
    Euler,
    /// Unlabeled trees with their automorphism group orders.
    Trees {
        #[arg(long)]
        vmax: usize,
    },
    /// Count degree-d maps P^1 -> P^n over F_p by enumeration.
    CountFf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Comma-separated suites, or `all`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub suite: Vec<Suite>,
    /// Projective dimension for `recurrence` and `ffcount`.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Degree bound for `recurrence` and `ffcount`.
    #[arg(long, default_value_t = 2)]
    pub dmaxff: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    pub primes: Vec<u64>,
    /// Largest power of the critical-point variable in the `potential` suite.
    #[arg(long, default_value_t = 4)]
    pub nmax: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ode,
    Dt,
    Oracle,
    Potential,
    Implicit,
    Recurrence,
    Ffcount,
    Chi,
    All,
}

impl Suite {
    const EVERY: [Suite; 8] = [
        Suite::Ode,
        Suite::Dt,
        Suite::Oracle,
        Suite::Potential,
        Suite::Implicit,
        Suite::Recurrence,
        Suite::Ffcount,
        Suite::Chi,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Ode => "ode",
            Suite::Dt => "dt",
            Suite::Oracle => "oracle",
            Suite::Potential => "potential",
            Suite::Implicit => "implicit",
            Suite::Recurrence => "recurrence",
            Suite::Ffcount => "ffcount",
            Suite::Chi => "chi",
            Suite::All => "all",
        }
    }
}

/// Validated configuration shared by all commands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub target: TargetSpec,
    pub kmax: usize,
    pub dmax: Option<Vec<usize>>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub workers: usize,
}

impl RunConfig {
    pub fn from_args(g: &GlobalArgs) -> Result<Self, CliError> {
        let target: TargetSpec = g.target.parse().map_err(CliError::Data)?;
        let workers = match g.workers {
            Some(0) => return Err(CliError::Usage("--workers must be at least 1".into())),
            Some(w) => w,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(RunConfig {
            target,
            kmax: g.kmax,
            dmax: g.dmax.clone(),
            out: g.out.clone(),
            format: g.format,
            workers,
        })
    }

    /// The target together with a degree bound of matching rank.
    pub fn resolve(&self) -> Result<(TargetSpace, Vec<usize>), CliError> {
        let w = self.target.resolve().map_err(CliError::Data)?;
        let dmax = match &self.dmax {
            None => vec![0; w.rank()],
            Some(d) if d.len() == w.rank() => d.clone(),
            Some(d) => {
                return Err(CliError::Usage(format!(
                    "--dmax has {} components but {} has rank {}",
                    d.len(),
                    w.name(),
                    w.rank()
                )))
            }
        };
        Ok((w, dmax))
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Data(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e)
    }
}

/// What a command produced: the document for `--out`/stdout, optional
/// human-readable lines that always go to stdout, and whether every check
/// passed.
#[derive(Debug, Default)]
pub struct Output {
    pub report: String,
    pub document: String,
    pub ok: bool,
}

impl Output {
    fn document(document: String) -> Self {
        Output {
            report: String::new(),
            document,
            ok: true,
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

/// Runs one command and writes its document to `--out` when given.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = RunConfig::from_args(&cli.global)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cfg.workers)))?;
    let out = pool.install(|| dispatch(&cli.command, &cfg))?;
    if let Some(path) = &cfg.out {
        std::fs::write(path, &out.document)
            .map_err(|e| CliError::Data(Error::Io(format!("{}: {e}", path.display()))))?;
    }
    Ok(out)
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Output, CliError> {
    match cmd {
        Command::Compute => cmd_compute(cfg),
        Command::Oracle => cmd_oracle(cfg),
        Command::Verify(v) => cmd_verify(cfg, v),
        Command::Euler => cmd_euler(cfg),
        Command::Trees { vmax } => cmd_trees(cfg, *vmax),
        Command::CountFf { n, d, p } => cmd_count_ff(cfg, *n, *d, *p),
    }
}

fn csv_document<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn json_document<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn beta_field(beta: &[usize]) -> String {
    beta.iter().map(usize::to_string).collect::<Vec<_>>().join(";")
}

pub fn cmd_compute(cfg: &RunConfig) -> Result<Output, CliError> {
    let (w, dmax) = cfg.resolve()?;
    let table: ClassTable = solve(&w, cfg.kmax, &dmax)?.classes()?;
    Ok(Output::document(match cfg.format {
        Format::Json => table.to_json(),
        Format::Csv => table.to_csv(),
    }))
}

pub fn cmd_oracle(cfg: &RunConfig) -> Result<Output, CliError> {
    let (w, dmax) = cfg.resolve()?;
    let phi = tree_sum_potential(&w, cfg.kmax, &dmax)?;
    Ok(Output::document(match cfg.format {
        Format::Json => phi.to_json(),
        Format::Csv => csv_document(
            &["k", "beta", "coeff"],
            phi.terms()
                .map(|(k, d, c)| [k.to_string(), beta_field(&d), c.to_string()]),
        ),
    }))
}

#[derive(Serialize)]
struct ChiRow {
    k: usize,
    beta: Vec<usize>,
    chi: String,
}

#[derive(Serialize)]
struct ChiDoc {
    target: String,
    kmax: usize,
    dmax: Vec<usize>,
    entries: Vec<ChiRow>,
}

pub fn cmd_euler(cfg: &RunConfig) -> Result<Output, CliError> {
    let (w, dmax) = cfg.resolve()?;
    let phi = solve_phi0_chi(&w, cfg.kmax, &dmax)?;
    let rows: Vec<ChiRow> = chi_table(&chi_potential(&w, &phi)?)?
        .into_iter()
        .map(|(k, beta, v)| ChiRow {
            k,
            beta,
            chi: format_bigrat(&v),
        })
        .collect();
    Ok(Output::document(match cfg.format {
        Format::Json => json_document(&ChiDoc {
            target: w.name().to_string(),
            kmax: cfg.kmax,
            dmax,
            entries: rows,
        }),
        Format::Csv => csv_document(
            &["k", "beta", "chi"],
            rows.into_iter()
                .map(|r| [r.k.to_string(), beta_field(&r.beta), r.chi]),
        ),
    }))
}

#[derive(Serialize)]
struct TreeRow {
    vcount: usize,
    code: String,
    aut: String,
}

pub fn cmd_trees(cfg: &RunConfig, vmax: usize) -> Result<Output, CliError> {
    let rows: Vec<TreeRow> = enum_trees(vmax)
        .into_iter()
        .map(|(t, aut)| TreeRow {
            vcount: t.vcount(),
            code: String::from_utf8_lossy(t.canonical_code()).into_owned(),
            aut: aut.to_string(),
        })
        .collect();
    Ok(Output::document(match cfg.format {
        Format::Json => json_document(&rows),
        Format::Csv => csv_document(
            &["vcount", "code", "aut"],
            rows.into_iter()
                .map(|r| [r.vcount.to_string(), r.code, r.aut]),
        ),
    }))
}

#[derive(Serialize)]
struct CountDoc {
    n: usize,
    d: usize,
    p: u64,
    count: u64,
    class_at_p: String,
}

pub fn cmd_count_ff(cfg: &RunConfig, n: usize, d: usize, p: u64) -> Result<Output, CliError> {
    let count = count_maps_bruteforce(n, d, p)?;
    let class_at_p = format_bigrat(&map_class_pn(n, d).eval(&rat(p as i64)));
    let ok = class_at_p == count.to_string();
    let doc = CountDoc {
        n,
        d,
        p,
        count,
        class_at_p,
    };
    let document = match cfg.format {
        Format::Json => json_document(&doc),
        Format::Csv => csv_document(
            &["n", "d", "p", "count", "class_at_p"],
            [[
                n.to_string(),
                d.to_string(),
                p.to_string(),
                count.to_string(),
                doc.class_at_p.clone(),
            ]],
        ),
    };
    Ok(Output {
        report: String::new(),
        document,
        ok,
    })
}

#[derive(Serialize)]
struct SuiteResult {
    suite: Suite,
    passed: bool,
    detail: String,
    /// Only the implicit suite reports a floating-point value.
    #[serde(skip_serializing_if = "Option::is_none")]
    advisory_spread: Option<f64>,
}

#[derive(Serialize)]
struct VerifySummary {
    target: String,
    kmax: usize,
    dmax: Vec<usize>,
    passed: bool,
    suites: Vec<SuiteResult>,
}

/// The first cell where two series of the same box differ.
fn first_difference(a: &MultiSeries, b: &MultiSeries) -> Option<String> {
    a.cells()
        .zip(b.cells())
        .find(|((_, _, x), (_, _, y))| x != y)
        .map(|((k, d, x), (_, _, y))| format!("(k={k}, beta={d:?}): {x} vs {y}"))
}

fn first_nonzero(s: &MultiSeries) -> Option<String> {
    s.terms()
        .next()
        .map(|(k, d, c)| format!("(k={k}, beta={d:?}) = {c}"))
}

fn verdict(diff: Option<String>, ok: &str) -> (bool, String) {
    match diff {
        None => (true, ok.to_string()),
        Some(m) => (false, m),
    }
}

fn run_suite(
    suite: Suite,
    w: &TargetSpace,
    kmax: usize,
    dmax: &[usize],
    v: &VerifyArgs,
) -> Result<SuiteResult, CliError> {
    let mut spread = None;
    let (passed, detail) = match suite {
        Suite::Ode => {
            let r = solve(w, kmax, dmax)?;
            let (r1, r2) = ode_residuals(&r.phi0)?;
            match (first_nonzero(&r1), first_nonzero(&r2)) {
                (None, None) => (true, "both residuals vanish".into()),
                (Some(m), _) => (false, format!("first form residual nonzero at {m}")),
                (None, Some(m)) => (false, format!("second form residual nonzero at {m}")),
            }
        }
        Suite::Dt => {
            let r = solve(w, kmax, dmax)?;
            let pw_inv = stablemap::qfield::RatFunc::from_poly(w.pw().clone()).inv()?;
            let lhs = r.potential.dt().scale(&pw_inv);
            let rhs = r.phi0.truncate(lhs.kmax(), lhs.dmax())?;
            verdict(first_difference(&lhs, &rhs), "dPhi/dt / [W] equals phi0")
        }
        Suite::Oracle => {
            let r = solve(w, kmax, dmax)?;
            let oracle = tree_sum_potential(w, kmax, dmax)?;
            verdict(
                first_difference(&r.potential, &oracle),
                "solver potential equals tree sum",
            )
        }
        Suite::Potential => {
            if v.nmax < 2 {
                return Err(CliError::Usage("--nmax must be at least 2".into()));
            }
            let (a, b) = potential_expansion_sides(w, v.nmax, kmax, dmax)?;
            verdict(
                first_difference(&a, &b),
                &format!("term sum equals closed form up to phi^{}", v.nmax),
            )
        }
        Suite::Implicit => {
            let s = verify_implicit_numeric(w, kmax, dmax, &rat(IMPLICIT_U), IMPLICIT_Z, &IMPLICIT_T)?;
            spread = Some(s);
            (
                s <= IMPLICIT_TOLERANCE,
                format!("relative spread {s:.3e} (bound {IMPLICIT_TOLERANCE:e}, advisory)"),
            )
        }
        Suite::Recurrence => {
            let ok = verify_recurrence(v.n, v.dmaxff);
            let msg = format!("n={}, d<={}", v.n, v.dmaxff);
            (ok, if ok { msg } else { format!("identity fails for {msg}") })
        }
        Suite::Ffcount => ffcount_suite(v)?,
        Suite::Chi => {
            let ok = crosscheck_chi(w, kmax, dmax)?;
            let msg = if ok {
                "classes at u = 1 equal the Euler limit table"
            } else {
                "classes at u = 1 differ from the Euler limit table"
            };
            (ok, msg.into())
        }
        Suite::All => unreachable!("expanded before dispatch"),
    };
    Ok(SuiteResult {
        suite,
        passed,
        detail,
        advisory_spread: spread,
    })
}

fn ffcount_suite(v: &VerifyArgs) -> Result<(bool, String), CliError> {
    let mut checked = 0;
    let mut skipped = 0;
    for d in 1..=v.dmaxff {
        for &p in &v.primes {
            let count = match count_maps_bruteforce(v.n, d, p) {
                Err(Error::TooLarge(_)) => {
                    skipped += 1;
                    continue;
                }
                other => other?,
            };
            let want = map_class_pn(v.n, d).eval(&rat(p as i64));
            if rat(count as i64) != want {
                return Ok((
                    false,
                    format!("(n={}, d={d}, p={p}): counted {count}, class gives {want}", v.n),
                ));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} counts match, {skipped} beyond the enumeration guard")))
}

pub fn cmd_verify(cfg: &RunConfig, v: &VerifyArgs) -> Result<Output, CliError> {
    let (w, dmax) = cfg.resolve()?;
    let requested = if v.suite.contains(&Suite::All) {
        Suite::EVERY.to_vec()
    } else {
        v.suite.clone()
    };
    let mut suites: Vec<Suite> = Vec::new();
    for s in requested {
        if !suites.contains(&s) {
            suites.push(s);
        }
    }
    let mut results = Vec::new();
    let mut report = String::new();
    for s in suites {
        let r = run_suite(s, &w, cfg.kmax, &dmax, v)?;
        let status = if r.passed { "PASS" } else { "FAIL" };
        report.push_str(&format!("{status} {}: {}\n", s.name(), r.detail));
        results.push(r);
    }
    let passed = results.iter().all(|r| r.passed);
    let summary = VerifySummary {
        target: w.name().to_string(),
        kmax: cfg.kmax,
        dmax,
        passed,
        suites: results,
    };
    Ok(Output {
        report,
        document: json_document(&summary),
        ok: passed,
    })
}
