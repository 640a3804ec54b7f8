use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mixvol::caps::{theoretical_constants, FamilyKind, Placement};
use mixvol::error::{Error, Result};
use mixvol::estimator::{mc_d_g, mc_rho_g_in, BoundingBox};
use mixvol::harness::{family_csv, fit_csv, report_csv, run_sweep, run_verify, svg_plot, verify_csv, SweepConfig};
use mixvol::io::{parse_vector, read_gen_polytope, read_polytope};
use mixvol::metrics::metric_report;
use mixvol::scalar::{format_scalar, to_f64};

#[derive(Parser)]
#[command(name = "mixvol", version, about = "Mixed-volume quasi-metrics d_G and rho_G on convex polytopes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    CapSlice,
    Scaling,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlacementArg {
    Center,
    Vertex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact d_G, rho_G, d_H and bound checks for one pair K, L inside G.
    Report {
        #[arg(short = 'g', long = "body")]
        body: PathBuf,
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        l: PathBuf,
        /// Write the CSV row here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cap/slice or scaling family over a geometric schedule.
    Sweep {
        #[arg(short = 'g', long = "body")]
        body: PathBuf,
        /// Cap direction "a,b[,c]"; defaults to the vertex of largest norm.
        #[arg(long = "dir", allow_hyphen_values = true)]
        dir: Option<String>,
        #[arg(long = "t-min", default_value_t = 1.0 / 65536.0)]
        t_min: f64,
        #[arg(long = "t-max", default_value_t = 0.5)]
        t_max: f64,
        #[arg(long, default_value_t = 16)]
        steps: usize,
        #[arg(long, value_enum, default_value = "cap-slice")]
        family: FamilyArg,
        /// Origin used by the scaling family.
        #[arg(long, value_enum, default_value = "center")]
        placement: PlacementArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a log-log plot of dG against dH.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Least-squares slope of log dG against log dH from a sweep CSV.
    Fit {
        csv: PathBuf,
        /// Keep rows with h in "lo,hi".
        #[arg(long)]
        window: Option<String>,
    },
    /// Random pairs inside G, each checked against the sandwich and both bounds.
    Verify {
        #[arg(short = 'g', long = "body")]
        body: PathBuf,
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Explicit constants of the Hölder bounds for G.
    Constants {
        #[arg(short = 'g', long = "body")]
        body: PathBuf,
        /// Also report the smooth-body constants for this rolling radius.
        #[arg(long = "rolling-radius")]
        rolling_radius: Option<f64>,
    },
    /// Monte Carlo estimates of rho_G and d_G in any dimension.
    Estimate {
        #[arg(short = 'g', long = "body")]
        body: PathBuf,
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        l: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// "auto" or "lo:hi,lo:hi,..." covering G + (K hull L).
        #[arg(long = "box", default_value = "auto", allow_hyphen_values = true)]
        bbox: String,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_window(text: &str) -> Result<(f64, f64)> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| Error::Config(format!("bad window bound {s:?}"))))
        .collect::<Result<_>>()?;
    match parts[..] {
        [lo, hi] if lo < hi => Ok((lo, hi)),
        _ => Err(Error::Config(format!("window must be \"lo,hi\" with lo < hi, got {text:?}"))),
    }
}

fn parse_box(text: &str) -> Result<Option<BoundingBox>> {
    if text == "auto" {
        return Ok(None);
    }
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for part in text.split(',') {
        let (a, b) = part.split_once(':').ok_or_else(|| Error::Config(format!("box entry {part:?} is not lo:hi")))?;
        let num = |s: &str| s.trim().parse::<f64>().map_err(|_| Error::Config(format!("bad box bound {s:?}")));
        lo.push(num(a)?);
        hi.push(num(b)?);
    }
    BoundingBox::new(lo, hi).map(Some)
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Report { body, k, l, out } => {
            let (g, k, l) = (read_polytope(&body)?, read_polytope(&k)?, read_polytope(&l)?);
            let r = metric_report(&g, &k, &l)?;
            eprintln!("dG = {} ({})", format_scalar(&r.d_g), to_f64(&r.d_g));
            eprintln!("rhoG = {} ({})", format_scalar(&r.rho_g), to_f64(&r.rho_g));
            eprintln!("dH^2 = {}  dH = {}", format_scalar(&r.dh_sq), r.dh);
            eprintln!("sandwich {} <= {} <= {}*dG: {}", format_scalar(&r.d_g), format_scalar(&r.rho_g), r.binom, r.sandwich_ok);
            eprintln!("upper bound: {}  lower bound: {}  lower bound / binom: {}", r.upper_ok, r.lower_ok, r.lower_binom_ok);
            emit(out.as_deref(), &report_csv(&r)?)
        }
        Cmd::Sweep { body, dir, t_min, t_max, steps, family, placement, seed, out, svg } => {
            let cfg = SweepConfig {
                body: read_polytope(&body)?,
                direction: dir.as_deref().map(parse_vector).transpose()?,
                t_min,
                t_max,
                steps,
                family: match family {
                    FamilyArg::CapSlice => FamilyKind::CapSlice,
                    FamilyArg::Scaling => FamilyKind::Scaling,
                },
                placement: match placement {
                    PlacementArg::Center => Placement::ChebyshevCenter,
                    PlacementArg::Vertex => Placement::Vertex,
                },
                seed,
            };
            let fam = run_sweep(&cfg)?;
            let text = family_csv(&fam)?;
            if let Some(p) = svg {
                fs::write(p, svg_plot(&text)?)?;
            }
            if !fam.dh_monotone {
                eprintln!("warning: dH is not strictly decreasing along the schedule");
            }
            emit(out.as_deref(), &text)
        }
        Cmd::Fit { csv, window } => {
            let text = fs::read_to_string(&csv).map_err(|e| Error::Parse(format!("{}: {e}", csv.display())))?;
            let fit = fit_csv(&text, window.as_deref().map(parse_window).transpose()?)?;
            println!("{}", serde_json::to_string_pretty(&fit)?);
            Ok(())
        }
        Cmd::Verify { body, pairs, seed, out } => {
            let g = read_polytope(&body)?;
            let s = run_verify(&g, pairs, seed)?;
            eprintln!(
                "n={} pairs={} violations: sandwich={} upper={} lower={} lower/binom={}",
                s.n, s.pairs, s.sandwich_violations, s.upper_violations, s.lower_violations, s.lower_binom_violations
            );
            eprintln!("pairs with dG = 0 and K != L: {}", s.zero_distance_distinct);
            match &s.quasi_triangle {
                Some(q) => eprintln!("empirical quasi-triangle ratio: {} ({})", format_scalar(q), to_f64(q)),
                None => eprintln!("empirical quasi-triangle ratio: n/a"),
            }
            emit(out.as_deref(), &verify_csv(&s)?)
        }
        Cmd::Constants { body, rolling_radius } => {
            let g = read_polytope(&body)?;
            let c = theoretical_constants(&g, rolling_radius)?;
            let smooth = c.smooth.as_ref().map(|s| {
                json!({
                    "rolling_radius": s.rolling_radius,
                    "small_h": s.small_h,
                    "large_h": s.large_h,
                    "recomputed": s.recomputed,
                    "displayed": s.displayed,
                })
            });
            let v = json!({
                "n": c.n,
                "diam_sq": format_scalar(&c.diam_sq),
                "diam": c.diam,
                "inradius_lower_bound": format_scalar(&c.inradius.radius),
                "inradius_exact": c.inradius.exact,
                "chebyshev_center": c.inradius.center.coords().iter().map(format_scalar).collect::<Vec<_>>(),
                "mv1_ball": c.mv1_ball.to_string(),
                "c_upper": c.c_upper.to_string(),
                "c_upper_value": c.c_upper.to_f64(),
                "c_lower": c.c_lower,
                "c_lower_binom": c.c_lower_binom,
                "smooth": smooth,
                "omega": c.omega,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(())
        }
        Cmd::Estimate { body, k, l, samples, seed, bbox } => {
            let (g, k, l) = (read_gen_polytope(&body)?, read_gen_polytope(&k)?, read_gen_polytope(&l)?);
            let bbox = parse_box(&bbox)?;
            let rho = mc_rho_g_in(&g, &k, &l, samples, seed, bbox.as_ref())?;
            let dg = mc_d_g(&g, &k, &l, samples, seed)?;
            let v = json!({
                "samples": samples,
                "seed": seed,
                "rhoG": rho.rho,
                "rhoG_ci95": rho.rho_ci95,
                "vol_G_plus_union": rho.union.mean,
                "vol_G_plus_K": rho.k.mean,
                "vol_G_plus_L": rho.l.mean,
                "dG": dg.d_g,
                "dG_ci95": dg.ci95_halfwidth,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
