use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use detsolve::detsys::{bounds_report, weighted_bounds};
use detsolve::error::{Error, Result};
use detsolve::geom::{convex_hull, mixed_volume, Point};
use detsolve::homotopy::{build_start, solve, solve_start, LambdaChoice, SolveOptions};
use detsolve::scalar::Scalar;
use detsolve::sysfile::{self, SystemFile};
use detsolve::zdp::{ParamJson, ZeroDimParam};

#[derive(Parser)]
#[command(name = "detsolve", version, about = "Solve rank F(x) < p, g(x) = 0 over a prime field")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// System file
    file: PathBuf,
    /// Override the file's prime
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Args)]
struct Random {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Linear form: xN for the N-th variable, or `random`
    #[arg(long)]
    lambda: Option<String>,
    /// Sample start data even if the file provides it
    #[arg(long)]
    fresh_start: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Root-count bounds of a system
    Bounds {
        #[command(flatten)]
        common: Common,
        /// Skip weighted bounds even if the file has weights
        #[arg(long)]
        no_weighted: bool,
    },
    /// Solve the start system
    Start {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        random: Random,
    },
    /// Solve the system by homotopy
    Solve {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        random: Random,
        /// Lifting precision instead of 2*rho+2
        #[arg(long)]
        precision: Option<usize>,
    },
    /// Check a parametrization (JSON) against a system
    Verify {
        #[command(flatten)]
        common: Common,
        param: PathBuf,
    },
    /// Mixed volume of polytopes given as JSON point lists
    Mv { points: PathBuf },
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {e}", path.display()),
    })
}

fn load(common: &Common) -> Result<SystemFile> {
    sysfile::parse(&read(&common.file)?, common.prime)
}

fn lambda_choice(spec: Option<&str>, n: usize) -> Result<LambdaChoice> {
    let bad = || Error::Parse {
        line: 0,
        column: 0,
        message: "--lambda takes xN or random".into(),
    };
    match spec {
        None => Ok(LambdaChoice::LastVariable),
        Some("random") => Ok(LambdaChoice::Random),
        Some(s) => {
            let k: usize = s.strip_prefix('x').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if k == 0 || k > n {
                return Err(bad());
            }
            let mut l = vec![Scalar::ZERO; n];
            l[k - 1] = Scalar::ONE;
            Ok(LambdaChoice::Fixed(l))
        }
    }
}

fn print<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::ShapeError(format!("serialization: {e}")))?;
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Bounds {
            common,
            no_weighted,
        } => {
            let file = load(&common)?;
            let bounds = bounds_report(&file.sys)?;
            let weighted = match (&file.weights, no_weighted) {
                (Some(w), false) => Some(weighted_bounds(&file.sys, w)?),
                _ => None,
            };
            eprintln!("chi = {}, rho = {}, dense = {}", bounds.chi, bounds.rho, bounds.dense);
            print(&json!({ "bounds": bounds, "weighted": weighted }))
        }
        Command::Start { common, random } => {
            let file = load(&common)?;
            let sys = &file.sys;
            let start = match (&file.start, random.fresh_start) {
                (Some(s), false) => s.clone(),
                _ => build_start(sys, random.seed),
            };
            let lambda = match lambda_choice(random.lambda.as_deref(), sys.n)? {
                LambdaChoice::Fixed(l) => l,
                LambdaChoice::LastVariable => {
                    let mut l = vec![Scalar::ZERO; sys.n];
                    l[sys.n - 1] = Scalar::ONE;
                    l
                }
                LambdaChoice::Random => {
                    let mut s = detsolve::scalar::Sampler::new(random.seed).derive(1);
                    (0..sys.n).map(|i| s.scalar(sys.fp, i == sys.n - 1)).collect()
                }
            };
            let sol = solve_start(sys, &start, &lambda)?;
            eprintln!("start degree {}", sol.param.degree());
            let subsets: Vec<_> = sol
                .parts
                .iter()
                .map(|(cols, p)| {
                    json!({
                        "columns": cols.iter().map(|j| j + 1).collect::<Vec<_>>(),
                        "degree": p.degree(),
                        "param": p.to_json(),
                    })
                })
                .collect();
            print(&json!({ "param": sol.param.to_json(), "subsets": subsets }))
        }
        Command::Solve {
            common,
            random,
            precision,
        } => {
            let file = load(&common)?;
            let opts = SolveOptions {
                seed: random.seed,
                lambda: lambda_choice(random.lambda.as_deref(), file.sys.n)?,
                precision,
                start: if random.fresh_start { None } else { file.start.clone() },
            };
            let (param, report) = solve(&file.sys, &opts)?;
            eprintln!(
                "degree {} (chi {}), {} retries",
                param.degree(),
                report.chi,
                report.retries
            );
            let j = param.to_json();
            print(&json!({
                "prime": j.prime,
                "lambda": j.lambda,
                "w": j.w,
                "v": j.v,
                "report": report,
            }))
        }
        Command::Verify { common, param } => {
            let file = load(&common)?;
            let text = read(&param)?;
            let pj: ParamJson = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            let param = ZeroDimParam::from_json(&pj)?;
            param.verify_against(&file.sys.equations()?)?;
            eprintln!("ok: {} points verified", param.degree());
            print(&json!({ "ok": true, "degree": param.degree() }))
        }
        Command::Mv { points } => {
            let text = read(&points)?;
            let sets: Vec<Vec<Point>> = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            let dim = sets
                .first()
                .and_then(|s| s.first())
                .map(Vec::len)
                .ok_or(Error::ZeroInput)?;
            let polys = sets
                .iter()
                .map(|s| convex_hull(dim, s))
                .collect::<Result<Vec<_>>>()?;
            let mv = mixed_volume(&polys)?;
            eprintln!("mixed volume {mv}");
            print(&json!({ "mixed_volume": mv }))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let record = json!({ "error": e.kind(), "message": e.to_string() });
            println!("{record}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
