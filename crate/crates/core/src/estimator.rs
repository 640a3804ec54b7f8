//! Monte Carlo estimates of volumes, `ρ_G` and `d_G` in any dimension.
//!
//! Bodies are vertex lists without hulls. Membership in a Minkowski sum
//! `P + Q` is an LP feasibility problem over convex weights on the vertices of
//! `P` and of `Q`. Sampling is hit-or-miss in a bounding box; every sample
//! chunk draws from its own ChaCha stream so results do not depend on the
//! number of threads.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::VPolytope;
use crate::lp::feasible_eq;
use crate::mixed_volume::solve_vandermonde;
use crate::scalar::{int, to_f64, Scalar};

/// Largest total vertex count decided with the exact LP.
pub const EXACT_VERTEX_CAP: usize = 32;
pub const MIN_SAMPLES: usize = 1000;
const CHUNK: usize = 4096;
const Z95: f64 = 1.959_963_984_540_054;

/// Convex hull of finitely many points in `R^dim`, kept as a point list.
#[derive(Clone, Debug, PartialEq)]
pub struct GenPolytope {
    dim: usize,
    vertices: Vec<Vec<Scalar>>,
    approx: Vec<Vec<f64>>,
}

impl GenPolytope {
    pub fn new(dim: usize, vertices: Vec<Vec<Scalar>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        if vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
        let approx = vertices.iter().map(|v| v.iter().map(to_f64).collect()).collect();
        Ok(GenPolytope { dim, vertices, approx })
    }

    /// `[0, side]^dim`.
    pub fn cube(dim: usize, side: Scalar) -> Result<Self> {
        let vertices = (0..1usize << dim)
            .map(|mask| (0..dim).map(|i| if mask >> i & 1 == 1 { side.clone() } else { Scalar::zero() }).collect())
            .collect();
        Self::new(dim, vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Scalar>] {
        &self.vertices
    }

    pub fn scale(&self, t: &Scalar) -> Result<Self> {
        Self::new(self.dim, self.vertices.iter().map(|v| v.iter().map(|c| c * t).collect()).collect())
    }

    pub fn translate(&self, by: &[Scalar]) -> Result<Self> {
        if by.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: by.len() });
        }
        Self::new(self.dim, self.vertices.iter().map(|v| v.iter().zip(by).map(|(a, b)| a + b).collect()).collect())
    }

    /// `K ∪̃ L` as the concatenated vertex list.
    pub fn hull_union(&self, other: &Self) -> Result<Self> {
        same_dim(self, other)?;
        let mut v = self.vertices.clone();
        v.extend(other.vertices.iter().cloned());
        Self::new(self.dim, v)
    }

    /// Exact test `x ∈ self`.
    pub fn contains(&self, x: &[Scalar]) -> bool {
        let m = self.vertices.len();
        let mut a: Vec<Vec<Scalar>> = (0..self.dim).map(|i| self.vertices.iter().map(|v| v[i].clone()).collect()).collect();
        a.push(vec![Scalar::one(); m]);
        let mut b = x.to_vec();
        b.push(Scalar::one());
        feasible_eq(&a, &b).is_some()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices.iter().all(|v| other.contains(v))
    }

    fn bounds(&self) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            for i in 0..self.dim {
                if v[i] < lo[i] {
                    lo[i] = v[i].clone();
                }
                if v[i] > hi[i] {
                    hi[i] = v[i].clone();
                }
            }
        }
        (lo, hi)
    }
}

impl From<&VPolytope> for GenPolytope {
    fn from(p: &VPolytope) -> Self {
        let vertices = p.vertices().iter().map(|v| v.coords().to_vec()).collect();
        GenPolytope::new(p.dim(), vertices).expect("a VPolytope is nonempty")
    }
}

fn same_dim(p: &GenPolytope, q: &GenPolytope) -> Result<()> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: q.dim });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundingBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoundingBox {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::Config("box bounds must have equal, nonzero length".into()));
        }
        if lo.iter().zip(&hi).any(|(a, b)| !(a < b) || !a.is_finite() || !b.is_finite()) {
            return Err(Error::Config("degenerate sampling box".into()));
        }
        Ok(BoundingBox { lo, hi })
    }

    /// Bounding box of `P + Q`.
    pub fn of_sum(p: &GenPolytope, q: &GenPolytope) -> Result<Self> {
        same_dim(p, q)?;
        let (plo, phi) = p.bounds();
        let (qlo, qhi) = q.bounds();
        let lo = plo.iter().zip(&qlo).map(|(a, b)| to_f64(&(a + b))).collect();
        let hi = phi.iter().zip(&qhi).map(|(a, b)| to_f64(&(a + b))).collect();
        Self::new(lo, hi)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn volume(&self) -> f64 {
        self.lo.iter().zip(&self.hi).map(|(a, b)| b - a).product()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub inside: bool,
    /// Decided by the exact rational LP rather than the tolerance-based one.
    pub exact: bool,
}

fn sum_system<T: Clone>(p: &[Vec<T>], q: &[Vec<T>], dim: usize, one: T, zero: T) -> Vec<Vec<T>> {
    let (mp, mq) = (p.len(), q.len());
    let mut a: Vec<Vec<T>> = (0..dim)
        .map(|i| p.iter().map(|v| v[i].clone()).chain(q.iter().map(|w| w[i].clone())).collect())
        .collect();
    let mut row = vec![one.clone(); mp];
    row.extend(vec![zero.clone(); mq]);
    a.push(row);
    let mut row = vec![zero; mp];
    row.extend(vec![one; mq]);
    a.push(row);
    a
}

/// `x ∈ P + Q`: exists `λ, μ ≥ 0`, `Σλ = Σμ = 1`, `Σλv + Σμw = x`. Boundary
/// points are members. Above [`EXACT_VERTEX_CAP`] vertices the float LP decides
/// and the answer is flagged inexact.
pub fn member_minkowski(x: &[Scalar], p: &GenPolytope, q: &GenPolytope) -> Result<Membership> {
    same_dim(p, q)?;
    if x.len() != p.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: x.len() });
    }
    if p.vertices.len() + q.vertices.len() <= EXACT_VERTEX_CAP {
        let a = sum_system(&p.vertices, &q.vertices, p.dim, Scalar::one(), Scalar::zero());
        let mut b = x.to_vec();
        b.extend([Scalar::one(), Scalar::one()]);
        return Ok(Membership { inside: feasible_eq(&a, &b).is_some(), exact: true });
    }
    let xf: Vec<f64> = x.iter().map(to_f64).collect();
    Ok(Membership { inside: SumOracle::new(p, q).contains(&xf), exact: false })
}

/// Float membership oracle for `P + Q` with a bounding-box prefilter.
#[derive(Clone, Debug)]
pub struct SumOracle {
    a: Vec<Vec<f64>>,
    bbox: BoundingBox,
}

impl SumOracle {
    pub fn new(p: &GenPolytope, q: &GenPolytope) -> Self {
        let a = sum_system(&p.approx, &q.approx, p.dim, 1.0, 0.0);
        let bbox = BoundingBox::of_sum(p, q).unwrap_or_else(|_| {
            // flat in some coordinate: keep the raw bounds, the LP decides
            let (lo, hi) = (p.bounds(), q.bounds());
            BoundingBox {
                lo: lo.0.iter().zip(&hi.0).map(|(a, b)| to_f64(&(a + b))).collect(),
                hi: lo.1.iter().zip(&hi.1).map(|(a, b)| to_f64(&(a + b))).collect(),
            }
        });
        SumOracle { a, bbox }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        let tol = 1e-9;
        if x.iter().zip(self.bbox.lo.iter().zip(&self.bbox.hi)).any(|(v, (a, b))| *v < a - tol || *v > b + tol) {
            return false;
        }
        let mut b = x.to_vec();
        b.extend([1.0, 1.0]);
        feasible_eq(&self.a, &b).is_some()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeEstimate {
    pub mean: f64,
    pub ci95_halfwidth: f64,
    pub samples: usize,
    pub bbox: BoundingBox,
}

impl VolumeEstimate {
    pub fn within(&self, truth: f64, k: f64) -> bool {
        (self.mean - truth).abs() <= k * self.ci95_halfwidth
    }
}

/// Per-chunk sums of a sample statistic.
#[derive(Clone, Copy, Default)]
struct Moments {
    n: usize,
    sum: f64,
    sum_sq: f64,
}

impl Moments {
    fn push(&mut self, z: f64) {
        self.n += 1;
        self.sum += z;
        self.sum_sq += z * z;
    }

    fn merge(mut self, o: &Moments) -> Moments {
        self.n += o.n;
        self.sum += o.sum;
        self.sum_sq += o.sum_sq;
        self
    }

    /// Mean and 95% half-width of `scale · Z`.
    fn estimate(&self, scale: f64) -> (f64, f64) {
        let n = self.n as f64;
        let mean = self.sum / n;
        let var = if self.n > 1 { ((self.sum_sq - n * mean * mean) / (n - 1.0)).max(0.0) } else { 0.0 };
        (scale * mean, Z95 * scale * (var / n).sqrt())
    }
}

/// Runs `stat` on `samples` uniform points of the box, `k` statistics per
/// point, with one ChaCha stream per chunk of samples.
fn sample_moments<F>(bbox: &BoundingBox, samples: usize, seed: u64, k: usize, stat: F) -> Vec<Moments>
where
    F: Fn(&[f64], &mut [f64]) + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    let per_chunk: Vec<Vec<Moments>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = CHUNK.min(samples - c * CHUNK);
            let mut out = vec![Moments::default(); k];
            let mut x = vec![0.0; bbox.dim()];
            let mut z = vec![0.0; k];
            for _ in 0..count {
                for (i, xi) in x.iter_mut().enumerate() {
                    *xi = rng.gen_range(bbox.lo[i]..bbox.hi[i]);
                }
                stat(&x, &mut z);
                for (m, v) in out.iter_mut().zip(&z) {
                    m.push(*v);
                }
            }
            out
        })
        .collect();
    per_chunk.iter().fold(vec![Moments::default(); k], |acc, c| acc.iter().zip(c).map(|(a, b)| a.merge(b)).collect())
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::Config(format!("need at least {MIN_SAMPLES} samples, got {samples}")));
    }
    Ok(())
}

/// Hit-or-miss volume of `{x : oracle(x)}` inside `bbox`.
pub fn mc_volume<F>(oracle: F, bbox: &BoundingBox, samples: usize, seed: u64) -> Result<VolumeEstimate>
where
    F: Fn(&[f64]) -> bool + Sync,
{
    check_samples(samples)?;
    let m = sample_moments(bbox, samples, seed, 1, |x, z| z[0] = if oracle(x) { 1.0 } else { 0.0 });
    let (mean, ci) = m[0].estimate(bbox.volume());
    Ok(VolumeEstimate { mean, ci95_halfwidth: ci, samples, bbox: bbox.clone() })
}

fn check_contained(g: &GenPolytope, k: &GenPolytope, name: &'static str) -> Result<()> {
    same_dim(g, k)?;
    if !k.is_subset_of(g) {
        return Err(Error::NotContained(name));
    }
    Ok(())
}

/// `K ∪̃ L`, reusing `K` or `L` when one contains the other so that equal
/// Minkowski sums get identical classifications.
fn union_body(k: &GenPolytope, l: &GenPolytope) -> Result<GenPolytope> {
    if l.is_subset_of(k) {
        Ok(k.clone())
    } else if k.is_subset_of(l) {
        Ok(l.clone())
    } else {
        k.hull_union(l)
    }
}

#[derive(Clone, Debug)]
pub struct RhoEstimate {
    /// `Vol(G + K∪̃L)`, `Vol(G + K)`, `Vol(G + L)`.
    pub union: VolumeEstimate,
    pub k: VolumeEstimate,
    pub l: VolumeEstimate,
    pub rho: f64,
    pub rho_ci95: f64,
    pub samples: usize,
}

/// `ρ̂_G` with common random numbers: each sample is classified against all
/// three sums, and the CI comes from the per-sample difference
/// `2·1[G+K∪̃L] − 1[G+K] − 1[G+L]`.
pub fn mc_rho_g(g: &GenPolytope, k: &GenPolytope, l: &GenPolytope, samples: usize, seed: u64) -> Result<RhoEstimate> {
    mc_rho_g_in(g, k, l, samples, seed, None)
}

/// [`mc_rho_g`] in a caller-chosen box, which must cover `G + K∪̃L`.
pub fn mc_rho_g_in(
    g: &GenPolytope,
    k: &GenPolytope,
    l: &GenPolytope,
    samples: usize,
    seed: u64,
    bbox: Option<&BoundingBox>,
) -> Result<RhoEstimate> {
    check_samples(samples)?;
    check_contained(g, k, "K")?;
    check_contained(g, l, "L")?;
    let u = union_body(k, l)?;
    let auto = BoundingBox::of_sum(g, &u)?;
    let bbox = match bbox {
        None => auto,
        Some(b) => {
            let covers = b.dim() == auto.dim()
                && b.lo.iter().zip(&auto.lo).all(|(a, c)| a <= c)
                && b.hi.iter().zip(&auto.hi).all(|(a, c)| a >= c);
            if !covers {
                return Err(Error::Config("sampling box does not cover G + K∪̃L".into()));
            }
            b.clone()
        }
    };
    let ou = SumOracle::new(g, &u);
    let ok = if &u == k { None } else { Some(SumOracle::new(g, k)) };
    let same = k == l;
    let ol = if &u == l || same { None } else { Some(SumOracle::new(g, l)) };
    let m = sample_moments(&bbox, samples, seed, 4, |x, z| {
        // G+K and G+L are inside G+K∪̃L
        let a = ou.contains(x);
        let b = a && ok.as_ref().map_or(true, |o| o.contains(x));
        let c = if same { b } else { a && ol.as_ref().map_or(true, |o| o.contains(x)) };
        let f = |v: bool| if v { 1.0 } else { 0.0 };
        z[0] = f(a);
        z[1] = f(b);
        z[2] = f(c);
        z[3] = 2.0 * f(a) - f(b) - f(c);
    });
    let vol = bbox.volume();
    let est = |i: usize| {
        let (mean, ci) = m[i].estimate(vol);
        VolumeEstimate { mean, ci95_halfwidth: ci, samples, bbox: bbox.clone() }
    };
    let (rho, rho_ci95) = m[3].estimate(vol);
    Ok(RhoEstimate { union: est(0), k: est(1), l: est(2), rho, rho_ci95, samples })
}

#[derive(Clone, Debug)]
pub struct DgEstimate {
    pub d_g: f64,
    pub ci95_halfwidth: f64,
    pub samples: usize,
    /// Per-sample weights of the nodes `t = 1..=n`.
    pub node_weights: Vec<f64>,
}

/// Weights `w_t` with `Σ_{j≥1} c_j / binom(n,j) = Σ_t w_t·V(t)` for the
/// interpolating polynomial `Σ c_j t^j` through `V(0..=n)`.
pub fn dg_node_weights(n: usize) -> Vec<f64> {
    let nodes: Vec<Scalar> = (0..=n).map(|t| int(t as i64)).collect();
    // column t of the inverse Vandermonde matrix: coefficients for the unit vector e_t
    (0..=n)
        .map(|t| {
            let e: Vec<Scalar> = (0..=n).map(|i| if i == t { Scalar::one() } else { Scalar::zero() }).collect();
            let c = solve_vandermonde(&nodes, &e);
            let w: Scalar = (1..=n).map(|j| &c[j] / Scalar::from_integer(crate::scalar::binomial(n, j).into())).sum();
            to_f64(&w)
        })
        .collect()
}

/// `d̂_G` from the Steiner polynomials of `K`, `L` and `K∪̃L` sampled at
/// `t = 1..=n` with one shared point stream. The node `t = 0` has volume
/// `Vol(G)` for all three bodies and drops out.
pub fn mc_d_g(g: &GenPolytope, k: &GenPolytope, l: &GenPolytope, samples: usize, seed: u64) -> Result<DgEstimate> {
    check_samples(samples)?;
    check_contained(g, k, "K")?;
    check_contained(g, l, "L")?;
    let n = g.dim();
    let u = union_body(k, l)?;
    let weights = dg_node_weights(n);
    let big_u = u.scale(&int(n as i64))?;
    let bbox = BoundingBox::of_sum(g, &big_u)?;
    let mut oracles = Vec::with_capacity(n);
    for t in 1..=n {
        let ts = int(t as i64);
        let ou = SumOracle::new(g, &u.scale(&ts)?);
        let ok = if &u == k { None } else { Some(SumOracle::new(g, &k.scale(&ts)?)) };
        let ol = if &u == l || k == l { None } else { Some(SumOracle::new(g, &l.scale(&ts)?)) };
        oracles.push((ou, ok, ol));
    }
    let same = k == l;
    let m = sample_moments(&bbox, samples, seed, 1, |x, z| {
        let mut acc = 0.0;
        for (i, (ou, ok, ol)) in oracles.iter().enumerate() {
            let a = ou.contains(x);
            if !a {
                // G + tK and G + tL lie inside G + tU
                continue;
            }
            let b = ok.as_ref().map_or(true, |o| o.contains(x));
            let c = if same { b } else { ol.as_ref().map_or(true, |o| o.contains(x)) };
            let f = |v: bool| if v { 1.0 } else { 0.0 };
            acc += weights[i + 1] * (2.0 - f(b) - f(c));
        }
        z[0] = acc;
    });
    let (d, ci) = m[0].estimate(bbox.volume());
    Ok(DgEstimate { d_g: d, ci95_halfwidth: ci, samples, node_weights: weights })
}

/// Exact `ρ_G` closed form of the scaling family, `Vol(G)(2ⁿ − (1+r)ⁿ)`.
pub fn scaling_rho_closed_form(vol_g: &Scalar, n: usize, r: &Scalar) -> Scalar {
    vol_g * (crate::scalar::pow(&int(2), n as u32) - crate::scalar::pow(&(int(1) + r), n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{minkowski_sum, Point};
    use crate::scalar::ratio;
    use rand::Rng;

    fn square() -> GenPolytope {
        GenPolytope::cube(2, int(1)).unwrap()
    }

    #[test]
    fn membership_of_vertex_sums_and_outside_points() {
        let p = square();
        let q = GenPolytope::new(2, vec![vec![int(0), int(0)], vec![int(1), int(1)]]).unwrap();
        let m = member_minkowski(&[int(2), int(2)], &p, &q).unwrap();
        assert!(m.inside && m.exact);
        assert!(!member_minkowski(&[int(3), int(0)], &p, &q).unwrap().inside);
        assert!(!member_minkowski(&[int(2), int(0)], &p, &q).unwrap().inside);
        assert!(member_minkowski(&[int(2), int(1)], &p, &q).unwrap().inside);
    }

    #[test]
    fn large_sums_fall_back_to_float() {
        let c = GenPolytope::cube(5, int(1)).unwrap();
        let m = member_minkowski(&vec![ratio(1, 2); 5], &c, &c).unwrap();
        assert!(m.inside && !m.exact);
    }

    #[test]
    fn exact_membership_matches_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts = |rng: &mut ChaCha8Rng, k: usize| -> Vec<Point> {
            (0..k).map(|_| Point::from_ratios(&[(rng.gen_range(0..=16), 16), (rng.gen_range(0..=16), 16)])).collect()
        };
        let p = VPolytope::from_points(&pts(&mut rng, 6)).unwrap();
        let q = VPolytope::from_points(&pts(&mut rng, 5)).unwrap();
        let sum = minkowski_sum(&p, &q).unwrap();
        let (gp, gq) = (GenPolytope::from(&p), GenPolytope::from(&q));
        for _ in 0..300 {
            let x = Point::from_ratios(&[(rng.gen_range(0..=64), 32), (rng.gen_range(0..=64), 32)]);
            assert_eq!(member_minkowski(x.coords(), &gp, &gq).unwrap().inside, sum.contains(&x), "{x}");
        }
    }

    #[test]
    fn full_box_is_all_hits() {
        let b = BoundingBox::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let e = mc_volume(|_| true, &b, 2000, 1).unwrap();
        assert_eq!(e.mean, 1.0);
        assert_eq!(e.ci95_halfwidth, 0.0);
        assert!(mc_volume(|_| true, &b, 10, 1).is_err());
        assert!(BoundingBox::new(vec![0.0], vec![0.0]).is_err());
    }

    #[test]
    fn disk_area() {
        let b = BoundingBox::new(vec![-1.0, -1.0], vec![1.0, 1.0]).unwrap();
        let e = mc_volume(|x| x[0] * x[0] + x[1] * x[1] <= 1.0, &b, 100_000, 11).unwrap();
        assert!(e.within(std::f64::consts::PI, 3.0), "{e:?}");
    }

    #[test]
    fn crn_zero_and_determinism() {
        let g = square();
        let k = GenPolytope::new(2, vec![vec![int(0), int(0)], vec![int(1), ratio(1, 2)]]).unwrap();
        let r = mc_rho_g(&g, &k, &k, 5000, 9).unwrap();
        assert_eq!(r.rho, 0.0);
        let l = GenPolytope::new(2, vec![vec![int(1), int(0)]]).unwrap();
        let a = mc_rho_g(&g, &k, &l, 5000, 9).unwrap();
        let b = mc_rho_g(&g, &k, &l, 5000, 9).unwrap();
        assert_eq!(a.rho.to_bits(), b.rho.to_bits());
        assert!(matches!(mc_rho_g(&g, &GenPolytope::cube(2, int(2)).unwrap(), &k, 5000, 1), Err(Error::NotContained("K"))));
    }

    #[test]
    fn dg_weights_reproduce_profile() {
        // V(t) = 1 + 2·2t + 1·t² has MV₁ = 2, MV₂ = 1, so the sum is 3
        let w = dg_node_weights(2);
        let v = |t: f64| 1.0 + 4.0 * t + t * t;
        let s: f64 = (0..=2).map(|t| w[t] * v(t as f64)).sum();
        assert!((s - 3.0).abs() < 1e-12, "{s}");
        assert!(w[0].abs() > 0.0);
        let total: f64 = w.iter().sum();
        assert!(total.abs() < 1e-12);
    }

    #[test]
    fn dg_estimate_of_two_points() {
        let g = square();
        let k = GenPolytope::new(2, vec![vec![int(0), int(0)]]).unwrap();
        let l = GenPolytope::new(2, vec![vec![int(1), int(0)]]).unwrap();
        let e = mc_d_g(&g, &k, &l, 40_000, 5).unwrap();
        assert!((e.d_g - 1.0).abs() <= 3.0 * e.ci95_halfwidth, "{e:?}");
    }
}
