//! Experiment drivers behind the command-line tool: family sweeps, log–log
//! slope fits, random verification suites and their CSV/SVG output.

use std::fmt::Write as _;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::{cap_slice_family, geometric_schedule, scaling_family, Family, FamilyKind, FamilyPoint, Placement};
use crate::error::{Error, Result};
use crate::geometry::{Point, VPolytope};
use crate::metrics::{quasi_triangle_probe, MetricReport, Reference};
use crate::scalar::{format_scalar, parse_scalar, to_f64, Scalar};

pub const FAMILY_HEADER: [&str; 13] = [
    "family",
    "t",
    "s",
    "h",
    "dH_sq",
    "dH",
    "dG",
    "rhoG",
    "volC",
    "height_ok",
    "rho_cap_ok",
    "closed_form_ok",
    "rho_over_dH_1.5",
];

pub const REPORT_HEADER: [&str; 9] =
    ["n", "dG", "rhoG", "dH_sq", "dH", "sandwich_ok", "upper_ok", "lower_ok", "lower_binom_ok"];

/// Denominator of the grid random bodies are drawn from.
pub const BODY_GRID: i64 = 1024;
/// Number of consecutive-body triples fed to the quasi-triangle probe.
pub const PROBE_TRIPLES: usize = 50;

fn flag(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn family_row(kind: FamilyKind, p: &FamilyPoint) -> Vec<String> {
    vec![
        kind.name().to_string(),
        format_scalar(&p.t),
        format_scalar(&p.s),
        p.h.to_string(),
        format_scalar(&p.dh_sq),
        p.dh.to_string(),
        format_scalar(&p.d_g),
        format_scalar(&p.rho_g),
        p.vol_c.as_ref().map(format_scalar).unwrap_or_default(),
        flag(p.height_ok),
        flag(p.rho_cap_ok),
        flag(p.closed_form_ok),
        (to_f64(&p.rho_g) / p.dh.powf(1.5)).to_string(),
    ]
}

pub fn family_csv(f: &Family) -> Result<String> {
    csv_string(&FAMILY_HEADER, f.points.iter().map(|p| family_row(f.kind, p)).collect())
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub body: VPolytope,
    pub direction: Option<Vec<Scalar>>,
    pub t_min: f64,
    pub t_max: f64,
    pub steps: usize,
    pub family: FamilyKind,
    pub placement: Placement,
    /// Recorded for reproducibility; the exact families draw no randomness.
    pub seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_min > 0.0 && self.t_min < self.t_max) {
            return Err(Error::Config(format!("need 0 < t-min < t-max, got {} and {}", self.t_min, self.t_max)));
        }
        if self.steps < 4 {
            return Err(Error::Config(format!("need at least 4 steps for a slope fit, got {}", self.steps)));
        }
        if self.family == FamilyKind::Scaling && self.t_max >= 1.0 {
            return Err(Error::Config("scaling family uses s = 1 − r, so t-max must be below 1".into()));
        }
        if self.family == FamilyKind::Scaling && self.direction.is_some() {
            return Err(Error::Config("the scaling family takes no direction".into()));
        }
        Ok(())
    }

    /// Decreasing schedule of `s` values.
    pub fn schedule(&self) -> Result<Vec<Scalar>> {
        geometric_schedule(self.t_max, self.t_min, self.steps)
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<Family> {
    cfg.validate()?;
    let sched = cfg.schedule()?;
    match cfg.family {
        FamilyKind::CapSlice => cap_slice_family(&cfg.body, cfg.direction.as_deref(), &sched),
        FamilyKind::Scaling => {
            let rs: Vec<Scalar> = sched.iter().map(|s| Scalar::from_integer(1.into()) - s).collect();
            scaling_family(&cfg.body, &rs, cfg.placement)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub window: (f64, f64),
    pub points: usize,
    pub residuals: Vec<f64>,
}

/// One `(h, d_H, d_G)` observation.
pub type FitRow = (f64, f64, f64);

/// Least squares of `log d_G` on `log d_H` over the rows with `h` in the
/// closed window (all rows when `window` is `None`).
pub fn fit_loglog(rows: &[FitRow], window: Option<(f64, f64)>) -> Result<SlopeFit> {
    let (lo, hi) = window.unwrap_or((f64::NEG_INFINITY, f64::INFINITY));
    let used: Vec<&FitRow> = rows.iter().filter(|r| r.0 >= lo && r.0 <= hi).collect();
    if used.len() < 4 {
        return Err(Error::Config(format!("slope fit needs at least 4 rows in the window, got {}", used.len())));
    }
    if used.iter().any(|r| !(r.1 > 0.0 && r.2 > 0.0)) {
        return Err(Error::InvalidArgument("slope fit needs positive dH and dG".into()));
    }
    let xs: Vec<f64> = used.iter().map(|r| r.1.ln()).collect();
    let ys: Vec<f64> = used.iter().map(|r| r.2.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("all dH values coincide".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals: Vec<f64> = xs.iter().zip(&ys).map(|(x, y)| y - intercept - slope * x).collect();
    let ss_res: f64 = residuals.iter().map(|r| r * r).sum();
    let r2 = if syy == 0.0 { 1.0 } else { (1.0 - ss_res / syy).clamp(0.0, 1.0) };
    let hs = used.iter().map(|r| r.0);
    let window = (hs.clone().fold(f64::INFINITY, f64::min), hs.fold(f64::NEG_INFINITY, f64::max));
    Ok(SlopeFit { slope, intercept, r2, window, points: used.len(), residuals })
}

pub fn family_rows(f: &Family) -> Vec<FitRow> {
    f.points.iter().map(|p| (p.h, p.dh, to_f64(&p.d_g))).collect()
}

/// Reads the `h`, `dH` and `dG` columns of a family CSV.
pub fn csv_rows(text: &str) -> Result<Vec<FitRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers()?.clone();
    let col = |name: &str| {
        headers.iter().position(|h| h == name).ok_or_else(|| Error::Parse(format!("CSV has no {name} column")))
    };
    let (ih, idh, idg) = (col("h")?, col("dH")?, col("dG")?);
    let num = |s: &str| -> Result<f64> { s.parse::<f64>().map_err(|_| Error::Parse(format!("not a number: {s:?}"))) };
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let dg = parse_scalar(&rec[idg]).map(|v| to_f64(&v)).or_else(|_| num(&rec[idg]))?;
        out.push((num(&rec[ih])?, num(&rec[idh])?, dg));
    }
    Ok(out)
}

pub fn fit_csv(text: &str, window: Option<(f64, f64)>) -> Result<SlopeFit> {
    fit_loglog(&csv_rows(text)?, window)
}

/// Hull of `k ∈ [3, 12]` points of `G`, drawn uniformly from the
/// `1/BODY_GRID` lattice in the bounding box of `G` and kept when inside.
pub fn random_body(g: &VPolytope, rng: &mut ChaCha8Rng) -> Result<VPolytope> {
    let n = g.dim();
    let lo: Vec<i64> = (0..n).map(|i| grid_bound(g, i, false)).collect();
    let hi: Vec<i64> = (0..n).map(|i| grid_bound(g, i, true)).collect();
    let k = rng.gen_range(3..=12);
    let mut pts = Vec::with_capacity(k);
    while pts.len() < k {
        let p = Point::new(
            (0..n).map(|i| Scalar::new(rng.gen_range(lo[i]..=hi[i]).into(), BODY_GRID.into())).collect(),
        );
        if g.contains(&p) {
            pts.push(p);
        }
    }
    VPolytope::from_points(&pts)
}

fn grid_bound(g: &VPolytope, i: usize, upper: bool) -> i64 {
    let vals = g.vertices().iter().map(|v| &v.coords()[i] * Scalar::from_integer(BODY_GRID.into()));
    let v = if upper { vals.max() } else { vals.min() }.expect("nonempty");
    let r = if upper { v.floor() } else { v.ceil() };
    i64::try_from(r.to_integer()).unwrap_or(if upper { i64::MAX / 2 } else { i64::MIN / 2 })
}

#[derive(Clone, Debug)]
pub struct VerifySummary {
    pub n: usize,
    pub pairs: usize,
    pub reports: Vec<MetricReport>,
    pub sandwich_violations: usize,
    pub upper_violations: usize,
    pub lower_violations: usize,
    pub lower_binom_violations: usize,
    /// Pairs with `d_G = 0` but `K ≠ L`.
    pub zero_distance_distinct: usize,
    pub quasi_triangle: Option<Scalar>,
}

impl VerifySummary {
    pub fn violations(&self) -> usize {
        self.sandwich_violations + self.upper_violations + self.lower_violations + self.lower_binom_violations
    }
}

/// Random pairs `(K_i, L_i)` inside `G`, each checked with a full metric report.
pub fn run_verify(g: &VPolytope, pairs: usize, seed: u64) -> Result<VerifySummary> {
    let reference = Reference::new(g.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bodies: Vec<(VPolytope, VPolytope)> =
        (0..pairs).map(|_| Ok((random_body(g, &mut rng)?, random_body(g, &mut rng)?))).collect::<Result<_>>()?;
    let reports: Vec<MetricReport> =
        bodies.par_iter().map(|(k, l)| reference.report(k, l)).collect::<Result<_>>()?;
    let count = |f: &dyn Fn(&MetricReport) -> bool| reports.iter().filter(|r| !f(r)).count();
    let zero_distance_distinct =
        reports.iter().zip(&bodies).filter(|(r, (k, l))| r.d_g.is_zero() && k != l).count();
    let triples: Vec<_> = bodies
        .windows(2)
        .take(PROBE_TRIPLES)
        .map(|w| (w[0].0.clone(), w[0].1.clone(), w[1].0.clone()))
        .collect();
    let quasi_triangle = quasi_triangle_probe(g, &triples)?;
    Ok(VerifySummary {
        n: g.dim(),
        pairs,
        sandwich_violations: count(&|r| r.sandwich_ok),
        upper_violations: count(&|r| r.upper_ok),
        lower_violations: count(&|r| r.lower_ok),
        lower_binom_violations: count(&|r| r.lower_binom_ok),
        zero_distance_distinct,
        quasi_triangle,
        reports,
    })
}

pub fn report_row(r: &MetricReport) -> Vec<String> {
    vec![
        r.n.to_string(),
        format_scalar(&r.d_g),
        format_scalar(&r.rho_g),
        format_scalar(&r.dh_sq),
        r.dh.to_string(),
        r.sandwich_ok.to_string(),
        r.upper_ok.to_string(),
        r.lower_ok.to_string(),
        r.lower_binom_ok.to_string(),
    ]
}

pub fn report_csv(r: &MetricReport) -> Result<String> {
    csv_string(&REPORT_HEADER, vec![report_row(r)])
}

pub fn verify_csv(s: &VerifySummary) -> Result<String> {
    let mut header = vec!["pair"];
    header.extend(REPORT_HEADER);
    let rows = s
        .reports
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![i.to_string()];
            row.extend(report_row(r));
            row
        })
        .collect();
    csv_string(&header, rows)
}

/// Static log–log plot of `dG` against `dH`, built from a family CSV.
pub fn svg_plot(csv_text: &str) -> Result<String> {
    let rows: Vec<FitRow> = csv_rows(csv_text)?.into_iter().filter(|r| r.1 > 0.0 && r.2 > 0.0).collect();
    let (w, h, m) = (640.0, 480.0, 60.0);
    let mut svg = String::new();
    writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).ok();
    writeln!(svg, r#"<rect width="{w}" height="{h}" fill="white"/>"#).ok();
    writeln!(
        svg,
        r#"<rect x="{m}" y="{m}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        w - 2.0 * m,
        h - 2.0 * m
    )
    .ok();
    writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">log10 dH</text>"#, w / 2.0, h - 15.0).ok();
    writeln!(
        svg,
        r#"<text x="18" y="{}" text-anchor="middle" font-size="14" transform="rotate(-90 18 {})">log10 dG</text>"#,
        h / 2.0,
        h / 2.0
    )
    .ok();
    if !rows.is_empty() {
        let xs: Vec<f64> = rows.iter().map(|r| r.1.log10()).collect();
        let ys: Vec<f64> = rows.iter().map(|r| r.2.log10()).collect();
        let range = |v: &[f64]| {
            let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            if hi > lo {
                (lo, hi)
            } else {
                (lo - 0.5, hi + 0.5)
            }
        };
        let (x0, x1) = range(&xs);
        let (y0, y1) = range(&ys);
        let px = |x: f64| m + (x - x0) / (x1 - x0) * (w - 2.0 * m);
        let py = |y: f64| h - m - (y - y0) / (y1 - y0) * (h - 2.0 * m);
        let path: Vec<String> = xs.iter().zip(&ys).map(|(x, y)| format!("{:.2},{:.2}", px(*x), py(*y))).collect();
        writeln!(svg, r#"<polyline fill="none" stroke="steelblue" points="{}"/>"#, path.join(" ")).ok();
        for (x, y) in xs.iter().zip(&ys) {
            writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="steelblue"/>"#, px(*x), py(*y)).ok();
        }
        for (v, anchor, xpos, ypos) in [
            (x0, "start", m, h - m + 18.0),
            (x1, "end", w - m, h - m + 18.0),
        ] {
            writeln!(svg, r#"<text x="{xpos}" y="{ypos}" text-anchor="{anchor}" font-size="11">{v:.2}</text>"#).ok();
        }
        for (v, ypos) in [(y0, h - m), (y1, m + 10.0)] {
            writeln!(svg, r#"<text x="{}" y="{ypos}" text-anchor="end" font-size="11">{v:.2}</text>"#, m - 4.0).ok();
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn square() -> VPolytope {
        VPolytope::cube(2, int(1)).unwrap()
    }

    fn cfg(steps: usize) -> SweepConfig {
        SweepConfig {
            body: square(),
            direction: None,
            t_min: 2f64.powi(-16),
            t_max: 0.5,
            steps,
            family: FamilyKind::CapSlice,
            placement: Placement::ChebyshevCenter,
            seed: 0,
        }
    }

    #[test]
    fn synthetic_fit() {
        let rows: Vec<FitRow> = (1..=8).map(|k| {
            let t = 0.5f64.powi(k);
            (t, t, t * t)
        }).collect();
        let f = fit_loglog(&rows, None).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12);
        assert!((f.r2 - 1.0).abs() < 1e-12);
        assert!(fit_loglog(&rows[..3], None).is_err());
        assert!(fit_loglog(&rows, Some((0.1, 0.6))).is_err());
    }

    #[test]
    fn square_sweep_rows_and_fit() {
        let fam = run_sweep(&cfg(16)).unwrap();
        let text = family_csv(&fam).unwrap();
        assert_eq!(text.lines().count(), 17);
        assert!(text.starts_with(&FAMILY_HEADER.join(",")));
        let f = fit_csv(&text, None).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-9);
        assert!(matches!(run_sweep(&cfg(3)), Err(Error::Config(_))));
    }

    #[test]
    fn random_bodies_stay_inside() {
        let g = VPolytope::unit_simplex(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert!(random_body(&g, &mut rng).unwrap().is_subset_of(&g));
        }
    }

    #[test]
    fn verify_small_suite() {
        let s = run_verify(&square(), 6, 7).unwrap();
        assert_eq!(s.reports.len(), 6);
        assert_eq!(s.violations(), 0);
        let empty = run_verify(&square(), 0, 7).unwrap();
        assert!(empty.reports.is_empty() && empty.quasi_triangle.is_none());
        assert_eq!(verify_csv(&empty).unwrap().lines().count(), 1);
    }

    #[test]
    fn svg_is_derived_from_csv() {
        let text = family_csv(&run_sweep(&cfg(5)).unwrap()).unwrap();
        let svg = svg_plot(&text).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 5);
        assert_eq!(svg, svg_plot(&text).unwrap());
    }
}
