//! Caps, slices, the cap/slice and scaling families, spherical caps, and the
//! explicit constants of the Hölder bounds between `d_G` and `d_H`.
//!
//! Directions are rational and never normalised: a cap is parametrised by its
//! scaled height `s = h_G(d) − c`, and the geometric height is `s/|d|`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{
    clip, diameter_sq, hausdorff, inradius_center, norm_sq, slice as slice_plane, support_value,
    Halfspace, Inradius, Point, VPolytope,
};
use crate::metrics::{central_binomial, le_tol, scalar_le_f64, PairProfiles};
use crate::mixed_volume::mv1_ball;
use crate::quadrature::integrate;
use crate::scalar::{dyadic, gcd_all, int, pow, to_f64, Scalar, Surd};

/// Bits of the dyadic grid used for schedules.
pub const SCHEDULE_BITS: u32 = 32;
/// Bits of the dyadic grid used for polygon proxies of the disk.
pub const PROXY_BITS: u32 = 30;
pub const QUAD_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct Cap {
    pub body: VPolytope,
    pub direction: Vec<Scalar>,
    pub scaled_height: Scalar,
    pub height: f64,
}

fn check_direction(g: &VPolytope, d: &[Scalar]) -> Result<()> {
    if d.len() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: d.len() });
    }
    if d.iter().all(Zero::is_zero) {
        return Err(Error::ZeroDirection);
    }
    Ok(())
}

fn geometric_height(d: &[Scalar], s: &Scalar) -> f64 {
    to_f64(s) / to_f64(&norm_sq(d)).sqrt()
}

/// `C_G(d, s) = {x ∈ G : d·x ≥ h_G(d) − s}`.
pub fn cap(g: &VPolytope, d: &[Scalar], s: &Scalar) -> Result<Cap> {
    check_direction(g, d)?;
    if s.is_negative() {
        return Err(Error::InvalidArgument("cap height must be nonnegative".into()));
    }
    let top = support_value(g, d)?;
    let h = Halfspace::new(d.to_vec(), top - s)?;
    let body = clip(g, &h)?.into_body()?;
    Ok(Cap { body, direction: d.to_vec(), scaled_height: s.clone(), height: geometric_height(d, s) })
}

/// `G ∩ {d·x = h_G(d) − s}`.
pub fn slice(g: &VPolytope, d: &[Scalar], s: &Scalar) -> Result<VPolytope> {
    check_direction(g, d)?;
    if s.is_negative() {
        return Err(Error::InvalidArgument("slice depth must be nonnegative".into()));
    }
    let top = support_value(g, d)?;
    slice_plane(g, &Halfspace::new(d.to_vec(), top - s)?)
}

/// Smallest integer multiple of a nonzero rational vector.
pub fn primitive_direction(d: &[Scalar]) -> Result<Vec<Scalar>> {
    if d.iter().all(Zero::is_zero) {
        return Err(Error::ZeroDirection);
    }
    let lcm = d.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = d.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let g = gcd_all(&ints);
    Ok(ints.into_iter().map(|v| Scalar::from_integer(v / &g)).collect())
}

/// Direction towards the vertex of largest norm (last one on ties).
pub fn farthest_vertex_direction(g: &VPolytope) -> Result<Vec<Scalar>> {
    let v = g
        .vertices()
        .iter()
        .max_by(|a, b| a.norm_sq().cmp(&b.norm_sq()))
        .ok_or(Error::EmptyInput)?;
    primitive_direction(v.coords())
}

/// `steps` values from `t_max` down to `t_min`, geometrically spaced and
/// rounded to a dyadic grid.
pub fn geometric_schedule(t_max: f64, t_min: f64, steps: usize) -> Result<Vec<Scalar>> {
    if !(t_min > 0.0 && t_min < t_max && t_max.is_finite()) {
        return Err(Error::Config(format!("need 0 < t_min < t_max, got {t_min} and {t_max}")));
    }
    if steps < 2 {
        return Err(Error::Config("schedule needs at least 2 steps".into()));
    }
    let ratio = (t_min / t_max).powf(1.0 / (steps - 1) as f64);
    let out: Vec<Scalar> = (0..steps).map(|k| dyadic(t_max * ratio.powi(k as i32), SCHEDULE_BITS)).collect();
    check_schedule(&out)?;
    Ok(out)
}

fn check_schedule(schedule: &[Scalar]) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::Config("empty schedule".into()));
    }
    if schedule.iter().any(|t| !t.is_positive()) {
        return Err(Error::Config("schedule values must be positive".into()));
    }
    if schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Config("schedule must be strictly decreasing".into()));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    CapSlice,
    Scaling,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::CapSlice => "cap-slice",
            FamilyKind::Scaling => "scaling",
        }
    }
}

/// Where the origin sits before `G` is scaled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    ChebyshevCenter,
    Vertex,
}

#[derive(Clone, Debug)]
pub struct FamilyPoint {
    /// Family parameter: `s` for caps, `r` for scaling.
    pub t: Scalar,
    pub s: Scalar,
    pub h: f64,
    pub k: VPolytope,
    pub l: VPolytope,
    pub dh_sq: Scalar,
    pub dh: f64,
    pub d_g: Scalar,
    pub rho_g: Scalar,
    pub vol_c: Option<Scalar>,
    /// `d_H²·|d|² ≥ s²`.
    pub height_ok: Option<bool>,
    /// `ρ_G(C,S) ≤ 2ⁿ⁺¹Vol(C)` and `Vol(G+C) − Vol(G+S) ≤ 2ⁿVol(C)`.
    pub rho_cap_ok: Option<bool>,
    /// Scaling closed forms for `ρ_G` and `d_H²`, exactly.
    pub closed_form_ok: Option<bool>,
}

impl FamilyPoint {
    pub fn flags_ok(&self) -> bool {
        [self.height_ok, self.rho_cap_ok, self.closed_form_ok].iter().all(|f| f.unwrap_or(true))
    }
}

#[derive(Clone, Debug)]
pub struct Family {
    pub kind: FamilyKind,
    /// Reference body as used (translated for the scaling family).
    pub body: VPolytope,
    pub direction: Option<Vec<Scalar>>,
    pub points: Vec<FamilyPoint>,
    /// `d_H` strictly decreases along the schedule.
    pub dh_monotone: bool,
}

fn dh_monotone(points: &[FamilyPoint]) -> bool {
    points.windows(2).all(|w| w[1].dh_sq < w[0].dh_sq)
}

/// `K_s = C_G(d, s)`, `L_s = S_G(d, s)` along a decreasing schedule of scaled
/// heights. Without `d`, the direction points at the vertex of largest norm.
pub fn cap_slice_family(g: &VPolytope, d: Option<&[Scalar]>, schedule: &[Scalar]) -> Result<Family> {
    if !g.is_full_dimensional() {
        return Err(Error::LowerDimensional("cap_slice_family reference body"));
    }
    check_schedule(schedule)?;
    let d = match d {
        Some(d) => {
            check_direction(g, d)?;
            d.to_vec()
        }
        None => farthest_vertex_direction(g)?,
    };
    let n = g.dim() as u32;
    let d_sq = norm_sq(&d);
    let points = schedule
        .par_iter()
        .map(|s| -> Result<FamilyPoint> {
            let c = cap(g, &d, s)?;
            let sl = slice(g, &d, s)?;
            let prof = PairProfiles::new(g, &c.body, &sl)?;
            let w = hausdorff(&c.body, &sl)?;
            let vol_c = c.body.volume().clone();
            let rho = prof.rho_g();
            let one = int(1);
            let gap = prof.k.volume_at(&one) - prof.l.volume_at(&one);
            let rho_cap_ok = rho <= pow(&int(2), n + 1) * &vol_c && gap <= pow(&int(2), n) * &vol_c;
            let height_ok = &w.value_sq * &d_sq >= s * s;
            Ok(FamilyPoint {
                t: s.clone(),
                s: s.clone(),
                h: c.height,
                dh_sq: w.value_sq.clone(),
                dh: w.value,
                d_g: prof.d_g(),
                rho_g: rho,
                vol_c: Some(vol_c),
                height_ok: Some(height_ok),
                rho_cap_ok: Some(rho_cap_ok),
                closed_form_ok: None,
                k: c.body,
                l: sl,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let dh_monotone = dh_monotone(&points);
    Ok(Family { kind: FamilyKind::CapSlice, body: g.clone(), direction: Some(d), points, dh_monotone })
}

/// `K = G`, `L = rG` after moving the chosen point of `G` to the origin.
pub fn scaling_family(g: &VPolytope, r_schedule: &[Scalar], placement: Placement) -> Result<Family> {
    if !g.is_full_dimensional() {
        return Err(Error::LowerDimensional("scaling_family reference body"));
    }
    if r_schedule.iter().any(|r| !r.is_positive() || r >= &int(1)) {
        return Err(Error::Config("scaling parameters must lie in (0, 1)".into()));
    }
    let anchor = match placement {
        Placement::ChebyshevCenter => inradius_center(g)?.center,
        Placement::Vertex => g.vertices()[0].clone(),
    };
    let g0 = g.translate(&anchor.scale(&int(-1)))?;
    let n = g0.dim() as u32;
    let m_sq = g0.vertices().iter().map(Point::norm_sq).max().expect("nonempty");
    let vol = g0.volume().clone();
    let points = r_schedule
        .par_iter()
        .map(|r| -> Result<FamilyPoint> {
            let l = g0.scale(r)?;
            let prof = PairProfiles::new(&g0, &g0, &l)?;
            let w = hausdorff(&g0, &l)?;
            let rho = prof.rho_g();
            let one_minus = int(1) - r;
            let rho_closed = &vol * (pow(&int(2), n) - pow(&(int(1) + r), n));
            let dh_closed = &m_sq * &one_minus * &one_minus;
            let closed_form_ok = rho == rho_closed && w.value_sq == dh_closed;
            Ok(FamilyPoint {
                t: r.clone(),
                h: to_f64(&one_minus),
                s: one_minus,
                k: g0.clone(),
                l,
                dh_sq: w.value_sq.clone(),
                dh: w.value,
                d_g: prof.d_g(),
                rho_g: rho,
                vol_c: None,
                height_ok: None,
                rho_cap_ok: None,
                closed_form_ok: Some(closed_form_ok),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut points = points;
    points.sort_by(|a, b| b.s.cmp(&a.s));
    let dh_monotone = dh_monotone(&points);
    Ok(Family { kind: FamilyKind::Scaling, body: g0, direction: None, points, dh_monotone })
}

/// `r = 1 − 2^{-k}` for `k = 1..=count`.
pub fn dyadic_r_schedule(count: u32) -> Vec<Scalar> {
    (1..=count).map(|k| int(1) - Scalar::new(BigInt::one(), BigInt::one() << k as usize)).collect()
}

/// Regular `m`-gon inscribed in the circle of radius `radius` about the
/// origin, with a vertex at `(radius, 0)` and coordinates on a dyadic grid.
pub fn regular_polygon(m: usize, radius: f64, bits: u32) -> Result<VPolytope> {
    if m < 3 {
        return Err(Error::InvalidArgument("a polygon needs at least 3 vertices".into()));
    }
    let pts: Vec<Point> = (0..m)
        .map(|k| {
            let a = 2.0 * PI * k as f64 / m as f64;
            Point::new(vec![dyadic(radius * a.cos(), bits), dyadic(radius * a.sin(), bits)])
        })
        .collect();
    VPolytope::from_points(&pts)
}

/// Depth of the circular segment cut off by one edge of the inscribed `m`-gon.
pub fn sagitta(m: usize, radius: f64) -> f64 {
    radius * (1.0 - (PI / m as f64).cos())
}

/// Volume `ω_k` of the unit ball in `R^k`, for `k = 0..=n`.
pub fn omega_table(n: usize) -> Vec<f64> {
    let mut w = vec![1.0, 2.0];
    for k in 2..=n {
        w.push(2.0 * PI / k as f64 * w[k - 2]);
    }
    w.truncate(n + 1);
    w
}

pub fn omega(k: usize) -> f64 {
    omega_table(k)[k]
}

/// `Vol(C_{rB}(u, h)) = ω_{n−1} rⁿ ∫_0^{arccos(1−h/r)} sinⁿθ dθ`.
pub fn spherical_cap_volume(n: usize, r: f64, h: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::UnsupportedDimension(n));
    }
    if !(r > 0.0) || !(0.0..=r).contains(&h) {
        return Err(Error::InvalidArgument(format!("cap height {h} outside [0, {r}]")));
    }
    let upper = (1.0 - h / r).clamp(-1.0, 1.0).acos();
    let integral = integrate(|t: f64| t.sin().powi(n as i32), 0.0, upper, QUAD_TOL / (omega(n - 1) * r.powi(n as i32)));
    Ok(omega(n - 1) * r.powi(n as i32) * integral)
}

/// Constants of the lower bound `C'·d_H^{(n+1)/2} ≤ Vol(cap)` for a body
/// with rolling radius `r`.
#[derive(Clone, Debug)]
pub struct SmoothConstants {
    pub rolling_radius: f64,
    /// `ω_{n−1}·2^{n+(n+1)/2}·r^{(n−1)/2} / (πⁿ(n+1))`, valid for `h ≤ r`.
    pub small_h: f64,
    /// `½ω_n rⁿ diam^{−(n+1)/2}`, valid for `r ≤ h ≤ diam`.
    pub large_h: f64,
    /// `min(small_h, large_h)`.
    pub recomputed: f64,
    /// `ω_{n−1}π^{n+1}r^{(n−1)/2} / (2^{(n+1)/2}(n+1))`, kept for comparison.
    /// It overshoots the cap volume and is never used as a bound.
    pub displayed: f64,
}

impl SmoothConstants {
    pub fn new(n: usize, r: f64, diam: f64) -> Self {
        let nf = n as f64;
        let half = (nf + 1.0) / 2.0;
        let w1 = omega(n - 1);
        let small_h = w1 * 2f64.powf(nf + half) * r.powf((nf - 1.0) / 2.0) / (PI.powi(n as i32) * (nf + 1.0));
        let large_h = 0.5 * omega(n) * r.powi(n as i32) * diam.powf(-half);
        let displayed = w1 * PI.powi(n as i32 + 1) * r.powf((nf - 1.0) / 2.0) / (2f64.powf(half) * (nf + 1.0));
        SmoothConstants { rolling_radius: r, small_h, large_h, recomputed: small_h.min(large_h), displayed }
    }
}

#[derive(Clone, Debug)]
pub struct ConstantsReport {
    pub n: usize,
    pub diam_sq: Scalar,
    pub diam: f64,
    pub inradius: Inradius,
    pub mv1_ball: Surd,
    /// `n(n+1)·MV₁(G, B)`.
    pub c_upper: Surd,
    /// `(ω_{n−1}/n)(r/diam)^{2n−1}` with `r` the certified inradius bound.
    pub c_lower: f64,
    /// `c_lower / binom(n, ⌊n/2⌋)`.
    pub c_lower_binom: f64,
    pub smooth: Option<SmoothConstants>,
    pub omega: Vec<f64>,
}

impl ConstantsReport {
    /// `(d_G ≤ C_upper·d_H, C_lower·d_Hⁿ ≤ d_G, C_lower/binom·d_Hⁿ ≤ d_G)`.
    pub fn check_bounds(&self, d_g: &Scalar, dh: f64) -> (bool, bool, bool) {
        let upper = scalar_le_f64(d_g, self.c_upper.to_f64() * dh);
        let dg = to_f64(d_g);
        let dhn = dh.powi(self.n as i32);
        (upper, le_tol(self.c_lower * dhn, dg), le_tol(self.c_lower_binom * dhn, dg))
    }
}

pub fn theoretical_constants(g: &VPolytope, rolling_radius: Option<f64>) -> Result<ConstantsReport> {
    if !g.is_full_dimensional() {
        return Err(Error::LowerDimensional("theoretical_constants"));
    }
    let n = g.dim();
    let diam_sq = diameter_sq(g);
    let diam = to_f64(&diam_sq).sqrt();
    let inradius = inradius_center(g)?;
    let mv1 = mv1_ball(g)?;
    let c_upper = mv1.scale(&int((n * (n + 1)) as i64));
    let c_lower = omega(n - 1) / n as f64 * (inradius.radius_f64() / diam).powi(2 * n as i32 - 1);
    let c_lower_binom = c_lower / to_f64(&central_binomial(n));
    let smooth = rolling_radius.map(|r| SmoothConstants::new(n, r, diam));
    Ok(ConstantsReport {
        n,
        diam_sq,
        diam,
        inradius,
        mv1_ball: mv1,
        c_upper,
        c_lower,
        c_lower_binom,
        smooth,
        omega: omega_table(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn square() -> VPolytope {
        VPolytope::cube(2, int(1)).unwrap()
    }

    #[test]
    fn cap_examples() {
        let g = square();
        let c = cap(&g, &[int(0), int(1)], &ratio(1, 2)).unwrap();
        assert_eq!(c.body.volume(), &ratio(1, 2));
        let c = cap(&g, &[int(1), int(1)], &ratio(1, 2)).unwrap();
        assert_eq!(c.body.volume(), &ratio(1, 8));
        assert!((c.height - 0.5 / 2f64.sqrt()).abs() < 1e-15);
        let c = cap(&g, &[int(1), int(1)], &int(0)).unwrap();
        assert_eq!(c.body.vertices(), &[Point::from_ints(&[1, 1])]);
        assert_eq!(cap(&g, &[int(1), int(1)], &int(5)).unwrap().body, g);
        assert!(matches!(cap(&g, &[int(0), int(0)], &int(1)), Err(Error::ZeroDirection)));
    }

    #[test]
    fn slice_examples() {
        let g = square();
        let s = slice(&g, &[int(1), int(1)], &ratio(1, 2)).unwrap();
        assert_eq!(s.vertices(), &[Point::from_ratios(&[(1, 2), (1, 1)]), Point::from_ratios(&[(1, 1), (1, 2)])]);
        let cube = VPolytope::cube(3, int(1)).unwrap();
        let s = slice(&cube, &[int(0), int(0), int(1)], &ratio(1, 4)).unwrap();
        assert_eq!(s.intrinsic_dim(), 2);
        assert!(s.vertices().iter().all(|v| v.coords()[2] == ratio(3, 4)));
        assert!(slice(&g, &[int(1), int(1)], &int(3)).is_err());
    }

    #[test]
    fn square_family_is_exact_power_law() {
        let g = square();
        let sched: Vec<Scalar> = (1..=6).map(|k| Scalar::new(BigInt::one(), BigInt::one() << k)).collect();
        let fam = cap_slice_family(&g, None, &sched).unwrap();
        assert_eq!(fam.direction, Some(vec![int(1), int(1)]));
        assert!(fam.dh_monotone);
        for p in &fam.points {
            assert_eq!(p.vol_c.as_ref().unwrap(), &(&p.s * &p.s / int(2)));
            assert_eq!(p.d_g, &p.s * &p.s / int(2));
            assert_eq!(p.dh_sq, &p.s * &p.s / int(2));
            assert!(p.flags_ok());
        }
    }

    #[test]
    fn schedule_validation() {
        let g = square();
        assert!(cap_slice_family(&g, None, &[ratio(1, 4), ratio(1, 2)]).is_err());
        assert!(cap_slice_family(&g, None, &[int(0)]).is_err());
        let s = geometric_schedule(0.5, 0.5f64.powi(16), 16).unwrap();
        assert_eq!(s.len(), 16);
        assert_eq!(s[15], Scalar::new(BigInt::one(), BigInt::one() << 16));
        assert!(geometric_schedule(0.5, 0.6, 5).is_err());
    }

    #[test]
    fn scaling_closed_forms_both_placements() {
        let g = square();
        let sched = dyadic_r_schedule(4);
        for placement in [Placement::ChebyshevCenter, Placement::Vertex] {
            let fam = scaling_family(&g, &sched, placement).unwrap();
            assert!(fam.points.iter().all(|p| p.closed_form_ok == Some(true)));
            assert!(fam.dh_monotone);
        }
        let fam = scaling_family(&g, &[ratio(1, 2)], Placement::Vertex).unwrap();
        assert_eq!(fam.points[0].rho_g, ratio(7, 4));
        assert_eq!(fam.points[0].dh_sq, ratio(1, 2));
        assert!(scaling_family(&g, &[int(1)], Placement::Vertex).is_err());
    }

    #[test]
    fn spherical_caps() {
        assert!((spherical_cap_volume(2, 1.0, 1.0).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!((spherical_cap_volume(3, 1.0, 1.0).unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
        let h = 1.0 - (PI / 4.0).cos();
        assert!((spherical_cap_volume(2, 1.0, h).unwrap() - (PI / 4.0 - 0.5)).abs() < 1e-12);
        assert!((spherical_cap_volume(3, 2.0, 2.0).unwrap() - omega(3) * 8.0 / 2.0).abs() < 1e-11);
        assert!(spherical_cap_volume(2, 1.0, 1.5).is_err());
    }

    #[test]
    fn omega_values() {
        let w = omega_table(3);
        assert_eq!(w[1], 2.0);
        assert!((w[2] - PI).abs() < 1e-15);
        assert!((w[3] - 4.0 * PI / 3.0).abs() < 1e-15);
    }

    #[test]
    fn square_constants() {
        let c = theoretical_constants(&square(), None).unwrap();
        assert_eq!(c.c_upper.as_rational(), Some(int(12)));
        assert!((c.c_lower - 2f64.powf(-4.5)).abs() < 1e-15);
        assert!((c.c_lower_binom - 2f64.powf(-5.5)).abs() < 1e-15);
        let c2 = theoretical_constants(&VPolytope::cube(2, int(2)).unwrap(), None).unwrap();
        assert_eq!(c2.c_upper.as_rational(), Some(int(24)));
    }

    #[test]
    fn displayed_smooth_constant_overshoots() {
        let s = SmoothConstants::new(2, 1.0, 2.0);
        let half_disk = spherical_cap_volume(2, 1.0, 1.0).unwrap();
        assert!(s.displayed > half_disk);
        for k in 1..=20 {
            let h = k as f64 / 10.0;
            let vol = if h <= 1.0 {
                spherical_cap_volume(2, 1.0, h).unwrap()
            } else {
                PI - spherical_cap_volume(2, 1.0, 2.0 - h).unwrap()
            };
            assert!(s.recomputed * h.powf(1.5) <= vol, "h = {h}");
        }
    }

    #[test]
    fn polygon_proxy() {
        let p = regular_polygon(256, 1.0, PROXY_BITS).unwrap();
        assert_eq!(p.vertices().len(), 256);
        assert!(p.contains(&Point::from_ints(&[1, 0])));
        assert!((sagitta(256, 1.0) - 7.53e-5).abs() < 1e-7);
    }
}
