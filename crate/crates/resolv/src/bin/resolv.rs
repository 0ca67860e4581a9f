//! Batch CLI: construct codes, run the Betti/purity pipelines, emit JSON
//! or aligned tables, cache results, and replay the verification suite.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 parameter error, 3 budget
//! exceeded, 4 solver inconsistency.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use resolv::betti::{
    betti_shifts, betti_table_hochster, bs_solve, closed_form, first_step_betti, purity,
    BettiTable, ClosedFormKind,
};
use resolv::cache;
use resolv::code::LinearCode;
use resolv::families::{
    denniston_arc, dual_hyperoval, hermitian, hyperoval, mds_rs, ovoid, reed_muller, simplex,
    subfield_system, ProjectiveSystem,
};
use resolv::json::{
    format_table, BettiTableJson, CodeJson, GhwJson, ProjectiveSystemJson, PurityJson,
    WeightDistributionJson,
};
use resolv::verify;
use resolv::{Budgets, Error};

#[derive(Parser)]
#[command(name = "resolv", version, about = "Exact Betti tables and weight hierarchies of linear codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code family and print it as JSON
    Family {
        /// rm | simplex | rs | hyperoval | dual-hyperoval | denniston | ovoid | hermitian | subfield
        name: String,
        #[command(flatten)]
        params: FamilyParams,
    },
    /// Compute a graded Betti table
    Betti {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        job: JobArgs,
    },
    /// Purity report with witnesses
    Purity {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        job: JobArgs,
    },
    /// Generalized Hamming weight hierarchy
    Ghw {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        job: JobArgs,
    },
    /// Weight distribution by full enumeration
    Wdist {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        job: JobArgs,
    },
    /// Run the verification suite
    Verify {
        /// Only run items whose id contains this string
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        job: JobArgs,
    },
}

#[derive(Args, Clone, Default)]
struct FamilyParams {
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    h: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Family name (with its parameters) as the code source
    #[arg(long)]
    family: Option<String>,
    /// Path to a code JSON file as the code source
    #[arg(long, conflicts_with = "family")]
    generator: Option<PathBuf>,
    #[command(flatten)]
    params: FamilyParams,
}

#[derive(Args, Clone)]
struct JobArgs {
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Maximum code length for full subset scans
    #[arg(long)]
    scan_limit: Option<usize>,
    /// Maximum subcodes enumerated per dimension
    #[arg(long)]
    subcode_limit: Option<u64>,
    /// Maximum codewords enumerated
    #[arg(long)]
    codeword_limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cache directory (falls back to RESOLV_CACHE_DIR)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for the compute pools
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Hochster,
    Shifts,
    BsSolve,
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

impl JobArgs {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        if let Some(v) = self.scan_limit {
            b.scan_limit = v;
        }
        if let Some(v) = self.subcode_limit {
            b.max_subcodes = v;
        }
        if let Some(v) = self.codeword_limit {
            b.max_codewords = v;
        }
        b
    }

    fn cache_dir(&self) -> Option<PathBuf> {
        self.cache_dir
            .clone()
            .or_else(|| std::env::var_os("RESOLV_CACHE_DIR").map(PathBuf::from))
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExceeded { .. } => 3,
            Error::RepeatedShift
            | Error::NonIntegralBetti
            | Error::SingularSystem
            | Error::TooManyUnknowns { .. }
            | Error::NegativeBetti => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure { code: 2, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure { code: 2, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Family { name, params } => {
            let (code, system) = build_family(&name, &params)?;
            #[derive(Serialize)]
            struct FamilyOut {
                code: CodeJson,
                #[serde(skip_serializing_if = "Option::is_none")]
                projective_system: Option<ProjectiveSystemJson>,
            }
            let out = FamilyOut {
                code: CodeJson::of(&code),
                projective_system: system.as_ref().map(ProjectiveSystemJson::of),
            };
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti { source, job } => {
            setup_threads(&job)?;
            let (code, family) = resolve_source(&source)?;
            cmd_betti(&code, family.as_deref(), &job)
        }
        Command::Purity { source, job } => {
            setup_threads(&job)?;
            let (code, _) = resolve_source(&source)?;
            let report = purity(&code, &job.budgets()).map_err(Failure::from)?;
            let json = PurityJson::of(&report);
            match job.format {
                Format::Json => println!("{}", serde_json::to_string(&json)?),
                Format::Table => {
                    println!("pure: {}", json.pure);
                    if let Some(t) = &json.pure_type {
                        println!("type: {:?}", t);
                    }
                    for step in &json.steps {
                        println!("  step {}: weights {:?}", step.i, step.weights);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ghw { source, job } => {
            setup_threads(&job)?;
            let (code, _) = resolve_source(&source)?;
            let ghw = code.ghw_vector(&job.budgets()).map_err(Failure::from)?;
            let out = GhwJson { n: code.n(), k: code.k(), q: code.q(), ghw };
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wdist { source, job } => {
            setup_threads(&job)?;
            let (code, _) = resolve_source(&source)?;
            let wd = code.weight_distribution(&job.budgets()).map_err(Failure::from)?;
            let out = WeightDistributionJson::of(&code, &wd);
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { only, job } => {
            setup_threads(&job)?;
            let results = verify::run_all(only.as_deref(), &job.budgets());
            if results.is_empty() {
                return Err(Failure { code: 2, message: format!("no item matches {:?}", only) });
            }
            let ok = verify::print_results(&results);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn setup_threads(job: &JobArgs) -> Result<(), Failure> {
    if let Some(t) = job.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure { code: 2, message: e.to_string() })?;
    }
    Ok(())
}

fn need<T: Copy>(v: Option<T>, name: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure {
        code: 2,
        message: format!("family {} requires --{}", family, name),
    })
}

fn build_family(
    name: &str,
    p: &FamilyParams,
) -> Result<(LinearCode, Option<ProjectiveSystem>), Failure> {
    let budgets = Budgets::default();
    match name {
        "rm" => {
            let code = reed_muller(
                need(p.q, "q", name)?,
                need(p.r, "r", name)?,
                need(p.m, "m", name)?,
            )?;
            Ok((code, None))
        }
        "simplex" => Ok((simplex(need(p.q, "q", name)?, need(p.k, "k", name)?)?, None)),
        "rs" => Ok((
            mds_rs(need(p.q, "q", name)?, need(p.n, "n", name)?, need(p.k, "k", name)?)?,
            None,
        )),
        "hyperoval" => wrap_system(hyperoval(need(p.q, "q", name)?)?),
        "dual-hyperoval" => wrap_system(dual_hyperoval(need(p.q, "q", name)?)?),
        "denniston" => {
            wrap_system(denniston_arc(need(p.q, "q", name)?, need(p.h, "h", name)?)?)
        }
        "ovoid" => wrap_system(ovoid(need(p.q, "q", name)?)?),
        "hermitian" => wrap_system(hermitian(
            need(p.q, "q", name)?,
            need(p.k, "k", name)?,
            &budgets,
        )?),
        "subfield" => wrap_system(subfield_system(need(p.q, "q", name)?, need(p.k, "k", name)?)?),
        other => Err(Error::UnknownFamily(other.to_string()).into()),
    }
}

fn wrap_system(system: ProjectiveSystem) -> Result<(LinearCode, Option<ProjectiveSystem>), Failure> {
    let code = system.code()?;
    Ok((code, Some(system)))
}

fn resolve_source(source: &SourceArgs) -> Result<(LinearCode, Option<String>), Failure> {
    match (&source.family, &source.generator) {
        (Some(name), None) => {
            let (code, _) = build_family(name, &source.params)?;
            Ok((code, Some(name.clone())))
        }
        (None, Some(path)) => {
            let bytes = std::fs::read(path)?;
            let json: CodeJson = serde_json::from_slice(&bytes)?;
            Ok((json.build()?, None))
        }
        _ => Err(Failure {
            code: 2,
            message: "exactly one of --family or --generator is required".into(),
        }),
    }
}

fn cmd_betti(code: &LinearCode, family: Option<&str>, job: &JobArgs) -> Result<ExitCode, Failure> {
    let budgets = job.budgets();
    let method = match job.method {
        Method::Auto => {
            if code.n() <= budgets.scan_limit {
                Method::Hochster
            } else {
                Method::BsSolve
            }
        }
        m => m,
    };

    if method == Method::Shifts {
        let shifts = betti_shifts(code, &budgets).map_err(Failure::from)?;
        #[derive(Serialize)]
        struct ShiftsOut {
            n: usize,
            k: usize,
            q: u64,
            shifts: BTreeMap<usize, Vec<usize>>,
        }
        let out = ShiftsOut {
            n: code.n(),
            k: code.k(),
            q: code.q(),
            shifts: shifts
                .into_iter()
                .map(|(i, js)| (i, js.into_iter().collect()))
                .collect(),
        };
        println!("{}", serde_json::to_string(&out)?);
        return Ok(ExitCode::SUCCESS);
    }

    let method_name = match method {
        Method::Hochster => "hochster",
        Method::BsSolve => "shifts+bs_solve",
        Method::ClosedForm => "closed_form",
        _ => unreachable!(),
    };
    let code_json = CodeJson::of(code);
    let key = cache::cache_key(&code_json, method_name);
    if job.format == Format::Json {
        if let Some(dir) = job.cache_dir() {
            if let Some(bytes) = cache::read(&dir, &key) {
                eprintln!("cache: hit {}", key);
                use std::io::Write;
                std::io::stdout().lock().write_all(&bytes)?;
                return Ok(ExitCode::SUCCESS);
            }
        }
    }

    let table = compute_table(code, family, method, &budgets)?;
    match job.format {
        Format::Json => {
            let json = BettiTableJson::of(&table);
            let mut bytes = serde_json::to_vec(&json)?;
            bytes.push(b'\n');
            if let Some(dir) = job.cache_dir() {
                cache::write(&dir, &key, &bytes)?;
                eprintln!("cache: miss {}", key);
            }
            use std::io::Write;
            std::io::stdout().lock().write_all(&bytes)?;
        }
        Format::Table => {
            println!(
                "[{},{}]_{} Betti table ({})",
                table.n, table.k, table.q, table.method.as_str()
            );
            print!("{}", format_table(&table));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn compute_table(
    code: &LinearCode,
    family: Option<&str>,
    method: Method,
    budgets: &Budgets,
) -> Result<BettiTable, Failure> {
    match method {
        Method::Hochster => Ok(betti_table_hochster(code, budgets)?),
        Method::BsSolve => {
            let shifts = betti_shifts(code, budgets)?;
            let first = first_step_betti(code, budgets)?;
            let knowns: BTreeMap<(usize, usize), BigInt> =
                first.into_iter().map(|(w, v)| ((1, w), v)).collect();
            Ok(bs_solve(code.n(), code.k(), code.q(), &shifts, &knowns)?)
        }
        Method::ClosedForm => {
            let kind = closed_form_kind(code, family)?;
            Ok(closed_form(kind, code.q())?)
        }
        _ => unreachable!(),
    }
}

fn closed_form_kind(code: &LinearCode, family: Option<&str>) -> Result<ClosedFormKind, Failure> {
    let q = code.q();
    match family {
        Some("rs") | Some("hyperoval") => Ok(ClosedFormKind::Mds { n: code.n(), k: code.k() }),
        Some("simplex") => Ok(ClosedFormKind::ConstantWeight {
            q,
            k: code.k(),
            d: (q as usize).pow(code.k() as u32 - 1),
        }),
        Some("rm") if code.k() >= 1 => {
            // first-order only: n = q^m, k = m + 1
            let m = code.k() - 1;
            if (q as usize).pow(m as u32) == code.n() {
                Ok(ClosedFormKind::Rm1 { q, m })
            } else {
                Err(Error::InvalidParameters(
                    "closed form for Reed-Muller codes needs order 1".into(),
                )
                .into())
            }
        }
        _ => Err(Error::InvalidParameters(
            "no closed form for this code; use hochster or bs-solve".into(),
        )
        .into()),
    }
}
