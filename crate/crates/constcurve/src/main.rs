//! Command-line front end: batch verification, triangle solving, and
//! direct access to the geometric primitives.
//!
//! Exit codes: 0 success (and verification pass), 1 verification
//! failure, 2 usage or input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use constcurve::harness::{fmt_g17, ReportFormat};
use constcurve::{harness, laws, solver, surface};
use constcurve::{Curvature, GeneratorConfig, Geometry, PolarCoordinate, SurfacePoint};
use std::fs::File;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "constcurve", version, about = "Constant-curvature trigonometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the trigonometric identities on seeded random triangles.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        curvature: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        tol: f64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Solve a triangle from partial data.
    Solve {
        #[command(subcommand)]
        mode: SolveMode,
    },
    /// Embed polar coordinates as a Cartesian point on the model surface.
    Embed {
        #[arg(long, allow_hyphen_values = true)]
        curvature: f64,
        #[arg(short)]
        r: f64,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Parallel-translate a surface point along the line ℓ.
    Translate {
        #[arg(long, allow_hyphen_values = true)]
        curvature: f64,
        /// Point as "X,Y,Z".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(short, allow_hyphen_values = true)]
        d: f64,
    },
    /// Evaluate the unified coefficient (gcos p + gcos q)/(1 + gcos r).
    Coeff {
        #[arg(long, allow_hyphen_values = true)]
        curvature: f64,
        #[arg(short)]
        p: f64,
        #[arg(short)]
        q: f64,
        #[arg(short)]
        r: f64,
    },
}

#[derive(Subcommand)]
enum SolveMode {
    /// Two sides and the included angle.
    Sas(SasArgs),
    /// Three sides.
    Sss(SssArgs),
}

#[derive(Args)]
struct SasArgs {
    #[arg(long, allow_hyphen_values = true)]
    curvature: f64,
    #[arg(short)]
    b: f64,
    #[arg(short)]
    c: f64,
    #[arg(short = 'A')]
    angle_a: f64,
}

#[derive(Args)]
struct SssArgs {
    #[arg(long, allow_hyphen_values = true)]
    curvature: f64,
    #[arg(short)]
    a: f64,
    #[arg(short)]
    b: f64,
    #[arg(short)]
    c: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { curvature, trials, seed, tol, out, format } => {
            let k = Curvature::new(curvature).map_err(|e| e.to_string())?;
            if trials == 0 {
                return Err("--trials must be at least 1".into());
            }
            if tol.is_nan() || tol <= 0.0 {
                return Err("--tol must be positive".into());
            }
            let cfg = GeneratorConfig::new(k, seed, trials);
            let report = harness::run_verification(&cfg, tol).map_err(|e| e.to_string())?;
            let fmt = match format {
                FormatArg::Json => ReportFormat::Json,
                FormatArg::Csv => ReportFormat::Csv,
            };
            match out {
                Some(path) => {
                    let mut file = File::create(&path).map_err(|e| e.to_string())?;
                    report.emit(fmt, &mut file).map_err(|e| e.to_string())?;
                }
                None => {
                    let mut stdout = std::io::stdout().lock();
                    report.emit(fmt, &mut stdout).map_err(|e| e.to_string())?;
                }
            }
            Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Solve { mode } => {
            let result = match mode {
                SolveMode::Sas(args) => {
                    let k = Curvature::new(args.curvature).map_err(|e| e.to_string())?;
                    solver::solve_sas(k, args.b, args.c, args.angle_a)
                }
                SolveMode::Sss(args) => {
                    let k = Curvature::new(args.curvature).map_err(|e| e.to_string())?;
                    solver::solve_sss(k, args.a, args.b, args.c)
                }
            }
            .map_err(|e| e.to_string())?;
            let (s, ang) = (result.triangle.sides, result.triangle.angles);
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "a = {}", fmt_g17(s.a)).map_err(|e| e.to_string())?;
            writeln!(stdout, "b = {}", fmt_g17(s.b)).map_err(|e| e.to_string())?;
            writeln!(stdout, "c = {}", fmt_g17(s.c)).map_err(|e| e.to_string())?;
            writeln!(stdout, "A = {}", fmt_g17(ang.a)).map_err(|e| e.to_string())?;
            writeln!(stdout, "B = {}", fmt_g17(ang.b)).map_err(|e| e.to_string())?;
            writeln!(stdout, "C = {}", fmt_g17(ang.c)).map_err(|e| e.to_string())?;
            writeln!(stdout, "max_residual = {}", fmt_g17(result.residual_summary))
                .map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed { curvature, r, theta } => {
            let g = unit_geometry(curvature)?;
            let p = surface::polar_to_cartesian(g, PolarCoordinate { r, theta })
                .map_err(|e| e.to_string())?;
            println!("{} {} {}", fmt_g17(p.x), fmt_g17(p.y), fmt_g17(p.z));
            Ok(ExitCode::SUCCESS)
        }
        Command::Translate { curvature, point, d } => {
            let g = unit_geometry(curvature)?;
            let [x, y, z] = parse_point(&point)?;
            let p = SurfacePoint { x, y, z, geometry: g };
            if !p.is_on_surface(1e-9) {
                return Err(format!(
                    "point ({x}, {y}, {z}) is not on the {} surface",
                    g.label()
                ));
            }
            let t = surface::parallel_translate(p, d);
            println!("{} {} {}", fmt_g17(t.x), fmt_g17(t.y), fmt_g17(t.z));
            Ok(ExitCode::SUCCESS)
        }
        Command::Coeff { curvature, p, q, r } => {
            let k = Curvature::new(curvature).map_err(|e| e.to_string())?;
            let value = laws::coefficient(k, p, q, r).map_err(|e| e.to_string())?;
            println!("{}", fmt_g17(value));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn unit_geometry(curvature: f64) -> Result<Geometry, String> {
    let k = Curvature::new(curvature).map_err(|e| e.to_string())?;
    if k.value() != 0.0 && k.value() != 1.0 && k.value() != -1.0 {
        return Err(format!(
            "embeddings exist only for curvature -1, 0 or 1 (got {curvature})"
        ));
    }
    Ok(Geometry::from_sign(k))
}

fn parse_point(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<_> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("--point expects X,Y,Z (got {text:?})"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad coordinate {part:?}: {e}"))?;
    }
    Ok(out)
}
