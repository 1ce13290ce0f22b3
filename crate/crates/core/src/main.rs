use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lagrange_biortho::cli::{self, ContourOptions, Mode, Options, ProblemFile, Report};
use lagrange_biortho::{Error, Result, Tolerance};

#[derive(Parser)]
#[command(name = "lagrange-biortho", version, about = "Interpolants and their biorthogonal rational functions")]
struct Args {
    /// Overrides the "mode" field of the problem file.
    #[arg(long, global = true)]
    mode: Option<String>,
    /// Relative and absolute tolerance for float mode.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Newton and Lagrange interpolants and their agreement.
    Interpolate {
        /// Problem JSON file, or "-" for stdin.
        problem: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Rebuild the monic interpolants from their alphas via the recurrence.
    Recurrence {
        problem: PathBuf,
        #[arg(long)]
        n_max: usize,
    },
    /// Pairing matrix of the monic interpolants with V_0..V_n.
    CheckBiortho {
        problem: PathBuf,
        #[arg(long)]
        n_max: usize,
    },
    /// Expand a polynomial (JSON array of coefficient strings) in the monic interpolants.
    Expand {
        problem: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Closed forms for exp(hz) on 0, 1, 2, ... with q = e^h given exactly.
    ExpExample {
        #[arg(long)]
        q: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        with_contour: bool,
        /// Defaults to ln q.
        #[arg(long, allow_negative_numbers = true)]
        h: Option<f64>,
        /// RADIUS/SAMPLES, either part may be empty.
        #[arg(long)]
        contour: Option<String>,
    },
    /// Hermite contour integral of exp(hz) / omega_{k+1}.
    Hermite {
        #[arg(long, allow_negative_numbers = true)]
        h: f64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        contour: Option<String>,
    },
}

fn read_problem(path: &PathBuf) -> Result<ProblemFile> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(e.to_string()))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    ProblemFile::from_json(&text)
}

fn parse_contour(spec: Option<&str>) -> Result<ContourOptions> {
    let Some(spec) = spec else {
        return Ok(ContourOptions::default());
    };
    let (radius, samples) = spec.split_once('/').unwrap_or((spec, ""));
    let bad = |e: String| Error::Parse(format!("--contour {spec:?}: {e}"));
    Ok(ContourOptions {
        radius: match radius {
            "" => None,
            r => Some(r.parse().map_err(|e| bad(format!("{e}")))?),
        },
        samples: match samples {
            "" => None,
            s => Some(s.parse().map_err(|e| bad(format!("{e}")))?),
        },
    })
}

fn run(args: Args) -> Result<Report> {
    let opts = Options {
        mode: args.mode.as_deref().map(str::parse::<Mode>).transpose()?,
        tolerance: Tolerance::new(args.tolerance, args.tolerance)?,
    };
    match args.command {
        Command::Interpolate { problem, degree } => cli::cmd_interpolate(&read_problem(&problem)?, degree, &opts),
        Command::Recurrence { problem, n_max } => cli::cmd_recurrence(&read_problem(&problem)?, n_max, &opts),
        Command::CheckBiortho { problem, n_max } => cli::cmd_check_biortho(&read_problem(&problem)?, n_max, &opts),
        Command::Expand { problem, poly } => {
            let coeffs: Vec<String> = serde_json::from_str(&poly).map_err(|e| Error::Parse(e.to_string()))?;
            cli::cmd_expand(&read_problem(&problem)?, &coeffs, &opts)
        }
        Command::ExpExample { q, n_max, with_contour, h, contour } => {
            cli::cmd_exp_example(&q, n_max, with_contour, h, &parse_contour(contour.as_deref())?)
        }
        Command::Hermite { h, k, contour } => cli::cmd_hermite(h, k, &parse_contour(contour.as_deref())?),
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(report) => {
            println!("{}", report.to_json());
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("{}", cli::error_json(&err));
            ExitCode::from(cli::exit_code(&err) as u8)
        }
    }
}
