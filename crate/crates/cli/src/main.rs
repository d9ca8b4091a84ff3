use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use palinlace::dynamics::{alpha_grid, alpha_profile, root_trajectories};
use palinlace::families::{FamilySpec, FAMILY_NAMES};
use palinlace::{Polynomial, Precision, Scalar};
use palinlace_cli::input::{parse_grid, parse_pairs, parse_scalar, polynomial, trim_from_coeffs};
use palinlace_cli::report::{analyze, CSV_HEADER, FORMAT_VERSION};
use palinlace_cli::{classify, plot, resolve_precision, scan, views};
use serde_json::json;

#[derive(Parser)]
#[command(name = "palinlace", version, about = "Interlace and circle numbers of trim palindromic polynomials")]
struct Cli {
    /// Working precision in bits for the float track (default 128, or $PALINLACE_PRECISION).
    #[arg(long, global = true)]
    precision: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct PolyArgs {
    /// Coefficients of x^1 … x^(n-1), comma separated; `re:im` for complex entries.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// σ-coordinates σ_1 … σ_(n/2), comma separated.
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    #[arg(long)]
    darga: Option<usize>,
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    tsv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one polynomial.
    Analyze {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        format: Format,
        /// Add wall-clock timings (makes the output run dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Print a member of a named family.
    Family {
        /// One of: geometric, sigma, gcd, coprime, fekete, binomial, hadamard-binomial,
        /// be-witness, exact, two-interval, not-fourat.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        a: Option<String>,
        /// `a:b` pairs for two-interval.
        #[arg(long)]
        params: Option<String>,
        /// Print the analysis report instead of the coefficients.
        #[arg(long)]
        analyze: bool,
    },
    /// Functionals, cones and polar vertices of the fan in darga n.
    Foic {
        #[arg(long)]
        darga: usize,
        /// Optional polynomial whose cones are reported.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
    },
    /// Breakpoints and circle-rooted intervals of p_α.
    Dynamics {
        #[command(flatten)]
        poly: PolyArgs,
        /// Root trajectories on `lo:hi:steps`.
        #[arg(long)]
        grid: Option<String>,
        /// Emit the trajectories as TSV instead of JSON.
        #[arg(long)]
        tsv: bool,
    },
    /// Seeded random batch, one CSV row per polynomial.
    Scan {
        #[arg(long)]
        darga: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// σ-coordinates are drawn from [-range, range].
        #[arg(long, default_value_t = 100)]
        range: i64,
        /// Extra polynomials (coefficient lists) appended after the random ones.
        #[arg(long, allow_hyphen_values = true)]
        inject: Vec<String>,
    },
    /// il, cn and be along rays of σ-space (darga 4 or 5).
    Plotdata {
        #[arg(long)]
        darga: usize,
        #[arg(long, default_value_t = 720)]
        steps: usize,
        /// Single rays `b,c` instead of the sweep; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        ray: Vec<String>,
    },
}

fn print_json(v: &serde_json::Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_analyze(p: &Polynomial, prec: Precision, format: Format, timings: bool) -> Result<()> {
    let start = Instant::now();
    let rep = analyze(p, prec)?;
    let elapsed = start.elapsed();
    if format.csv {
        let mut out = io::stdout().lock();
        writeln!(out, "# palinlace analyze csv v{FORMAT_VERSION}")?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        w.write_record(rep.csv_row(0))?;
        w.flush()?;
        return Ok(());
    }
    let mut j = rep.to_json()?;
    if timings {
        j["timings_ms"] = json!(elapsed.as_secs_f64() * 1e3);
    }
    if format.tsv {
        let mut out = io::stdout().lock();
        for key in ["il", "cn"] {
            writeln!(out, "{key}\t{}", j[key]["value"]["repr"].as_str().unwrap_or(""))?;
        }
        writeln!(out, "be\t{}", j["be"]["repr"].as_str().unwrap_or(""))?;
        writeln!(out, "exact\t{}", j["exactness"]["exact"])?;
        return Ok(());
    }
    print_json(&j)
}

fn cmd_family(
    name: &str,
    n: Option<usize>,
    k: Option<usize>,
    q: Option<usize>,
    a: Option<&str>,
    params: Option<&str>,
    prec: Precision,
) -> Result<Polynomial> {
    if !FAMILY_NAMES.contains(&name) {
        bail!("unknown family {name:?}; expected one of {}", FAMILY_NAMES.join(", "));
    }
    let mut spec = FamilySpec::new(name);
    for (key, v) in [("n", n), ("k", k), ("q", q)] {
        if let Some(v) = v {
            spec = spec.with(key, Scalar::int(v as i64));
        }
    }
    if let Some(a) = a {
        spec = spec.with("a", parse_scalar(a, prec)?);
    }
    if let Some(ps) = params {
        spec.pairs = parse_pairs(ps, prec)?;
    }
    Ok(spec.build(prec)?)
}

fn run(cli: Cli) -> Result<()> {
    let prec = resolve_precision(cli.precision)?;
    match cli.command {
        Command::Analyze { poly, format, timings } => {
            let p = polynomial(poly.coeffs.as_deref(), poly.sigma.as_deref(), poly.darga, prec)?;
            cmd_analyze(&p, prec, format, timings)
        }
        Command::Family { name, n, k, q, a, params, analyze } => {
            let p = cmd_family(&name, n, k, q, a.as_deref(), params.as_deref(), prec)?;
            if analyze {
                cmd_analyze(&p, prec, Format { json: true, csv: false, tsv: false }, false)
            } else {
                println!("{}", p.to_text());
                Ok(())
            }
        }
        Command::Foic { darga, coeffs } => {
            let p = coeffs.as_deref().map(|c| trim_from_coeffs(c, prec)).transpose()?;
            if let Some(p) = &p {
                if p.darga() != darga {
                    return Err(palinlace::Error::DargaMismatch { expected: darga, found: p.darga() }.into());
                }
            }
            print_json(&views::foic_json(darga, p.as_ref())?)
        }
        Command::Dynamics { poly, grid, tsv } => {
            let p = polynomial(poly.coeffs.as_deref(), poly.sigma.as_deref(), poly.darga, prec)?;
            let traj = match grid.as_deref() {
                Some(g) => {
                    let (lo, hi, steps) = parse_grid(g)?;
                    Some(root_trajectories(&p, &alpha_grid(lo, hi, steps))?)
                }
                None => None,
            };
            if tsv {
                match &traj {
                    Some(t) => {
                        print!("{}", views::trajectories_tsv(t));
                        return Ok(());
                    }
                    None => bail!("--tsv needs --grid"),
                }
            }
            let prof = alpha_profile(&p)?;
            let mut j = views::profile_json(&p, &prof);
            if let Some(t) = &traj {
                j["trajectories"] = views::trajectories_json(t);
            }
            print_json(&j)
        }
        Command::Scan { darga, count, seed, range, inject } => {
            if darga < 2 {
                bail!("scan needs darga ≥ 2");
            }
            if range < 1 {
                bail!("--range must be positive");
            }
            let mut polys = scan::batch(darga, count, seed, range);
            for c in &inject {
                polys.push(trim_from_coeffs(c, prec)?);
            }
            let results = scan::run(&polys, prec);
            scan::write_csv(io::stdout().lock(), &polys, &results)?;
            if let Some(m) = scan::max_be(&results) {
                eprintln!("max be = {}", m.repr());
            }
            Ok(())
        }
        Command::Plotdata { darga, steps, ray } => {
            let points = if ray.is_empty() {
                plot::circle_sweep(darga, steps, prec)?
            } else {
                ray.iter()
                    .map(|r| {
                        let Some((b, c)) = r.split_once(',') else { bail!("ray {r:?} is not b,c") };
                        plot::evaluate(darga, 0.0, parse_scalar(b, prec)?, parse_scalar(c, prec)?, prec)
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            plot::write_tsv(io::stdout().lock(), &points)
        }
    }
}

fn broken_pipe(e: &anyhow::Error) -> bool {
    let pipe = Some(io::ErrorKind::BrokenPipe);
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>().map(|e| e.kind()) == pipe
            || c.downcast_ref::<serde_json::Error>().and_then(|e| e.io_error_kind()) == pipe
            || matches!(c.downcast_ref::<csv::Error>().map(|e| e.kind()), Some(csv::ErrorKind::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            let (kind, code) = classify(&e);
            let obj = json!({ "error": { "kind": kind, "message": format!("{e:#}") } });
            println!("{obj}");
            eprintln!("error: {e:#}");
            ExitCode::from(code as u8)
        }
    }
}
