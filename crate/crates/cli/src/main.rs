use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use fibdense::algebra::rational;
use fibdense::bounds::{global_bound, DEFAULT_MAX_DEGREE};
use fibdense::certifier::{certify_point, certify_threshold, CertifyConfig, Outcome, ThresholdInput, ThresholdMode};
use fibdense::diagonal::{certify_diagonal, conjecture_search, DiagonalQuartic, QuarticPoint4};
use fibdense::exclusion::{class_order, emit_t_equations, EquationConfig, SearchConfig};
use fibdense::surface::{Axis, Surface222, SurfacePoint, CHI_DEGREE};

mod error;
use error::CliError;

#[derive(Parser, Debug, Serialize)]
#[command(name = "fibdense", version, about = "Density certificates for surfaces with two elliptic fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for searches (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Reports are always JSON; accepted for compatibility.
    #[arg(long, global = true)]
    #[serde(skip)]
    json: bool,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
enum Command {
    /// Torsion bound table for number fields of degree d.
    Bound {
        #[arg(long, default_value_t = 1)]
        degree: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Validation and fibration invariants of a surface.
    Analyze { surface: PathBuf },
    /// Class order of (alpha(P)) - (P) on the fiber through P.
    Order {
        surface: PathBuf,
        #[arg(long)]
        point: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        axis: u8,
    },
    /// Equations for the order-r torsion locus.
    Exclusion {
        surface: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        axis: u8,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        equations: EquationArgs,
    },
    /// Single-point density certificate.
    Certify {
        surface: PathBuf,
        #[arg(long)]
        point: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: u32,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Density certificate from a count of points.
    CertifyThreshold {
        surface: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        nk: u64,
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Search x^4 - y^4 = t (z^4 - w^4) for a certifying point.
    QuarticSearch {
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 1000)]
        height: u64,
        #[arg(long)]
        all: bool,
    },
    /// Certify a point on a x^4 + b y^4 + c z^4 + d w^4 = 0.
    QuarticCertify {
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        point: String,
    },
}

#[derive(Args, Debug, Serialize)]
struct SearchArgs {
    /// Height bound for witness candidates.
    #[arg(long, default_value_t = SearchConfig::default().height)]
    height: u64,
    #[arg(long, default_value_t = SearchConfig::default().max_candidates)]
    max_candidates: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            height: self.height,
            max_candidates: self.max_candidates,
        }
    }
}

#[derive(Args, Debug, Serialize)]
struct EquationArgs {
    #[arg(long, default_value_t = EquationConfig::default().r_max)]
    r_max: u32,
    #[arg(long)]
    allow_expensive: bool,
    #[arg(long, default_value_t = EquationConfig::default().monomial_budget)]
    budget: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Mode {
    Min,
    Sum,
}

/// Result payload plus the exit status it implies.
struct Done {
    result: Value,
    status: Status,
}

#[derive(Clone, Copy)]
enum Status {
    Success,
    Inconclusive,
}

fn outcome_status(o: Outcome) -> Status {
    match o {
        Outcome::Dense => Status::Success,
        Outcome::Inconclusive => Status::Inconclusive,
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(format!("{}: {}", path.display(), e)))
}

fn load_surface(path: &PathBuf) -> Result<Surface222, CliError> {
    let s: Surface222 = read_json(path)?;
    Ok(s.validated()?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn axis(a: u8) -> Result<Axis, CliError> {
    Ok(Axis::from_index(a)?)
}

fn parse_list(s: &str, what: &str) -> Result<[rational::Rational; 4], CliError> {
    let parts: Vec<_> = s.split(',').map(|p| rational::parse(p.trim())).collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|_| CliError::BadArgument(format!("{} needs four comma-separated values", what)))
}

fn analyze(s: &Surface222) -> Result<Value, CliError> {
    let report = s.validate();
    if let Some(c) = report.first_failure() {
        return Err(CliError::Surface(fibdense::surface::SurfaceError::Invalid {
            check: c.name.clone(),
            witness: c.witness.clone().unwrap_or_default(),
        }));
    }
    let mut axes = Vec::new();
    for a in Axis::both() {
        let j = s.j_map(a)?;
        let locus = s.singular_locus(a)?;
        axes.push(json!({
            "axis": a,
            "d": match j.degree { Some(d) => json!(d), None => json!("infinity") },
            "M": CHI_DEGREE,
            "isotrivial": j.degree.is_none(),
            "j_map": j,
            "delta": locus.delta,
            "delta_degree": locus.delta.degree_in(0).unwrap_or(0),
            "singular_fibers": locus.rational_points(),
            "vertical_lines": s.vertical_lines(a)?,
        }));
    }
    Ok(json!({ "validation": report, "fibrations": axes }))
}

fn run(cli: &Cli) -> Result<Done, CliError> {
    let success = |result: Value| Done {
        result,
        status: Status::Success,
    };
    match &cli.command {
        Command::Bound { degree, max_degree } => {
            if *degree > *max_degree {
                return Err(CliError::BadArgument(format!(
                    "degree {} exceeds --max-degree {}",
                    degree, max_degree
                )));
            }
            Ok(success(to_value(&global_bound(*degree)?)))
        }
        Command::Analyze { surface } => {
            let s: Surface222 = read_json(surface)?;
            Ok(success(analyze(&s)?))
        }
        Command::Order { surface, point, axis: a } => {
            let s = load_surface(surface)?;
            let p: SurfacePoint = read_json(point)?;
            Ok(success(to_value(&class_order(&s, axis(*a)?, &p)?)))
        }
        Command::Exclusion {
            surface,
            axis: a,
            r,
            equations,
        } => {
            let s = load_surface(surface)?;
            let cfg = EquationConfig {
                r_max: equations.r_max,
                allow_expensive: equations.allow_expensive,
                monomial_budget: equations.budget,
            };
            Ok(success(to_value(&emit_t_equations(&s, axis(*a)?, *r, &cfg)?)))
        }
        Command::Certify {
            surface,
            point,
            degree,
            search,
        } => {
            let s = load_surface(surface)?;
            let p: SurfacePoint = read_json(point)?;
            let cfg = CertifyConfig {
                degree: *degree,
                search: search.config(),
            };
            let v = certify_point(&s, &p, &cfg)?;
            Ok(Done {
                status: outcome_status(v.outcome),
                result: to_value(&v),
            })
        }
        Command::CertifyThreshold {
            surface,
            points,
            nk,
            mode,
            search,
        } => {
            let s = load_surface(surface)?;
            let pts: Vec<SurfacePoint> = read_json(points)?;
            let input = ThresholdInput {
                points: pts,
                n_k: *nk,
                mode: match mode {
                    Mode::Min => ThresholdMode::Min,
                    Mode::Sum => ThresholdMode::Sum,
                },
            };
            let v = certify_threshold(&s, &input, &search.config())?;
            Ok(Done {
                status: outcome_status(v.outcome),
                result: to_value(&v),
            })
        }
        Command::QuarticSearch { t, height, all } => {
            let t = rational::parse(t)?;
            let r = conjecture_search(&t, *height, *all)?;
            Ok(Done {
                status: if r.found.is_some() {
                    Status::Success
                } else {
                    Status::Inconclusive
                },
                result: to_value(&r),
            })
        }
        Command::QuarticCertify { coeffs, point } => {
            let [a, b, c, d] = parse_list(coeffs, "--coeffs")?;
            let q = DiagonalQuartic::new(a, b, c, d)?;
            let p = QuarticPoint4::new(parse_list(point, "--point")?)?;
            if !q.contains(&p) {
                return Err(fibdense::diagonal::DiagonalError::NotOnSurface.into());
            }
            let v = certify_diagonal(&q, &p);
            Ok(Done {
                status: outcome_status(v.outcome),
                result: to_value(&v),
            })
        }
    }
}

fn emit(cli: &Cli, report: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let mut report = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "config": to_value(&cli),
    });
    let code = match run(&cli) {
        Ok(done) => {
            report["result"] = done.result;
            match done.status {
                Status::Success => 0,
                Status::Inconclusive => 2,
            }
        }
        Err(e) => {
            report["error"] = json!({ "code": e.code(), "message": e.to_string() });
            1
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("{}", e);
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
