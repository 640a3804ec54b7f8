//! The quasi-metrics `d_G` and `ρ_G` on convex subsets of a reference body.
//!
//! ```text
//! d_G(K, L) = Σ_{j=1..n} 2·MV_j(G, K∪̃L) − MV_j(G, K) − MV_j(G, L)
//! ρ_G(K, L) = 2·Vol(G + K∪̃L) − Vol(G + K) − Vol(G + L)
//! ```
//!
//! with `d_G ≤ ρ_G ≤ binom(n, ⌊n/2⌋)·d_G`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::caps::{theoretical_constants, ConstantsReport};
use crate::error::{Error, Result};
use crate::geometry::{hausdorff, HausdorffWitness, VPolytope};
use crate::mixed_volume::{steiner_profile, SteinerProfile};
use crate::scalar::{binomial, int, to_f64, Scalar};

/// Relative slack for inequalities whose right-hand side involves `d_H`.
pub const BOUND_REL_TOL: f64 = 1e-9;

pub fn check_contained(g: &VPolytope, body: &VPolytope, name: &'static str) -> Result<()> {
    if body.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: body.dim() });
    }
    if !body.is_subset_of(g) {
        return Err(Error::NotContained(name));
    }
    Ok(())
}

fn check_reference(g: &VPolytope) -> Result<()> {
    if !g.is_full_dimensional() {
        return Err(Error::LowerDimensional("reference body"));
    }
    Ok(())
}

/// Steiner profiles of `K`, `L` and `K ∪̃ L` against the same reference body.
#[derive(Clone, Debug)]
pub struct PairProfiles {
    pub k: SteinerProfile,
    pub l: SteinerProfile,
    pub union: SteinerProfile,
}

impl PairProfiles {
    pub fn new(g: &VPolytope, k: &VPolytope, l: &VPolytope) -> Result<Self> {
        check_reference(g)?;
        check_contained(g, k, "K")?;
        check_contained(g, l, "L")?;
        let union = k.hull_union(l)?;
        let mut out: Vec<SteinerProfile> = [k, l, &union]
            .par_iter()
            .map(|b| steiner_profile(g, b))
            .collect::<Result<_>>()?;
        let union = out.pop().expect("three profiles");
        let l = out.pop().expect("three profiles");
        let k = out.pop().expect("three profiles");
        Ok(PairProfiles { k, l, union })
    }

    /// `2·MV_j(G, K∪̃L) − MV_j(G, K) − MV_j(G, L)` for `j = 0..=n`.
    pub fn terms(&self) -> Vec<Scalar> {
        self.union
            .mv
            .iter()
            .zip(&self.k.mv)
            .zip(&self.l.mv)
            .map(|((u, k), l)| int(2) * u - k - l)
            .collect()
    }

    pub fn d_g(&self) -> Scalar {
        self.terms().into_iter().skip(1).sum()
    }

    pub fn rho_g(&self) -> Scalar {
        let one = int(1);
        int(2) * self.union.volume_at(&one) - self.k.volume_at(&one) - self.l.volume_at(&one)
    }
}

pub fn d_g(g: &VPolytope, k: &VPolytope, l: &VPolytope) -> Result<Scalar> {
    Ok(PairProfiles::new(g, k, l)?.d_g())
}

pub fn rho_g(g: &VPolytope, k: &VPolytope, l: &VPolytope) -> Result<Scalar> {
    check_reference(g)?;
    check_contained(g, k, "K")?;
    check_contained(g, l, "L")?;
    let union = k.hull_union(l)?;
    let vols: Vec<Scalar> = [&union, k, l]
        .par_iter()
        .map(|b| Ok(crate::geometry::minkowski_sum(g, b)?.volume().clone()))
        .collect::<Result<_>>()?;
    Ok(int(2) * &vols[0] - &vols[1] - &vols[2])
}

pub fn central_binomial(n: usize) -> Scalar {
    Scalar::from_integer(BigInt::from(binomial(n, n / 2)))
}

#[derive(Clone, Debug)]
pub struct MetricReport {
    pub n: usize,
    pub d_g: Scalar,
    pub rho_g: Scalar,
    pub dh_sq: Scalar,
    pub dh: f64,
    pub binom: Scalar,
    /// `0 ≤ d_G ≤ ρ_G ≤ binom·d_G`, checked exactly.
    pub sandwich_ok: bool,
    /// `d_G ≤ n(n+1)·MV₁(G,B)·d_H`.
    pub upper_ok: bool,
    /// `(ω_{n−1}/n)(r/diam)^{2n−1}·d_Hⁿ ≤ d_G`.
    pub lower_ok: bool,
    /// Same with the constant divided by `binom`, which is what the cap
    /// argument actually yields for `d_G`.
    pub lower_binom_ok: bool,
    pub witness: HausdorffWitness,
}

impl MetricReport {
    pub fn all_ok(&self) -> bool {
        self.sandwich_ok && self.upper_ok && self.lower_ok && self.lower_binom_ok
    }
}

/// A validated reference body with its bound constants computed once.
#[derive(Clone, Debug)]
pub struct Reference {
    g: VPolytope,
    constants: ConstantsReport,
}

impl Reference {
    pub fn new(g: VPolytope) -> Result<Self> {
        check_reference(&g)?;
        let constants = theoretical_constants(&g, None)?;
        Ok(Reference { g, constants })
    }

    pub fn body(&self) -> &VPolytope {
        &self.g
    }

    pub fn constants(&self) -> &ConstantsReport {
        &self.constants
    }

    pub fn d_g(&self, k: &VPolytope, l: &VPolytope) -> Result<Scalar> {
        d_g(&self.g, k, l)
    }

    pub fn report(&self, k: &VPolytope, l: &VPolytope) -> Result<MetricReport> {
        let profiles = PairProfiles::new(&self.g, k, l)?;
        let d = profiles.d_g();
        let rho = profiles.rho_g();
        let witness = hausdorff(k, l)?;
        let n = self.g.dim();
        let binom = central_binomial(n);
        let sandwich_ok = !d.is_negative() && d <= rho && rho <= &binom * &d;
        let (upper_ok, lower_ok, lower_binom_ok) = self.constants.check_bounds(&d, witness.value);
        Ok(MetricReport {
            n,
            d_g: d,
            rho_g: rho,
            dh_sq: witness.value_sq.clone(),
            dh: witness.value,
            binom,
            sandwich_ok,
            upper_ok,
            lower_ok,
            lower_binom_ok,
            witness,
        })
    }
}

pub fn metric_report(g: &VPolytope, k: &VPolytope, l: &VPolytope) -> Result<MetricReport> {
    Reference::new(g.clone())?.report(k, l)
}

/// `max d_G(K,M) / (d_G(K,L) + d_G(L,M))` over the triples, skipping `0/0`.
/// Exploratory only: no quasi-triangle constant is known for general `G`.
pub fn quasi_triangle_probe(
    g: &VPolytope,
    triples: &[(VPolytope, VPolytope, VPolytope)],
) -> Result<Option<Scalar>> {
    let ratios: Vec<Option<Scalar>> = triples
        .par_iter()
        .map(|(k, l, m)| {
            let km = d_g(g, k, m)?;
            let den = d_g(g, k, l)? + d_g(g, l, m)?;
            if den.is_zero() {
                return Ok(None);
            }
            Ok(Some(km / den))
        })
        .collect::<Result<_>>()?;
    Ok(ratios.into_iter().flatten().max())
}

/// Numeric `a ≤ b` with relative slack.
pub(crate) fn le_tol(a: f64, b: f64) -> bool {
    a <= b + BOUND_REL_TOL * b.abs().max(f64::MIN_POSITIVE)
}

pub(crate) fn scalar_le_f64(a: &Scalar, b: f64) -> bool {
    le_tol(to_f64(a), b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::scalar::ratio;

    fn square() -> VPolytope {
        VPolytope::cube(2, int(1)).unwrap()
    }

    fn pt(x: i64, y: i64) -> VPolytope {
        VPolytope::point(Point::from_ints(&[x, y])).unwrap()
    }

    #[test]
    fn zero_on_diagonal() {
        let g = square();
        let k = VPolytope::from_points(&[Point::from_ratios(&[(1, 4), (0, 1)]), Point::from_ints(&[1, 1])]).unwrap();
        assert!(d_g(&g, &k, &k).unwrap().is_zero());
        assert!(rho_g(&g, &k, &k).unwrap().is_zero());
    }

    #[test]
    fn two_opposite_corners() {
        let g = square();
        let (k, l) = (pt(0, 0), pt(1, 0));
        assert_eq!(d_g(&g, &k, &l).unwrap(), int(1));
        assert_eq!(rho_g(&g, &k, &l).unwrap(), int(2));
        let p = PairProfiles::new(&g, &k, &l).unwrap();
        assert_eq!(p.terms(), vec![int(0), int(1), int(0)]);
        let r = metric_report(&g, &k, &l).unwrap();
        assert!(r.sandwich_ok && r.all_ok());
        assert_eq!(r.dh_sq, int(1));
        assert_eq!(r.binom, int(2));
    }

    #[test]
    fn scaled_square_pair() {
        let g = square();
        let half = g.scale(&ratio(1, 2)).unwrap();
        let rho = rho_g(&g, &g, &half).unwrap();
        assert_eq!(rho, ratio(7, 4));
        let d = d_g(&g, &g, &half).unwrap();
        // d_G = MV₁ gap (1 − 1/2) + Vol gap (1 − 1/4) = 5/4
        assert_eq!(d, ratio(5, 4));
        assert!(d >= ratio(7, 8) && d <= ratio(7, 4));
    }

    #[test]
    fn containment_is_enforced() {
        let g = square();
        let outside = pt(2, 0);
        assert!(matches!(d_g(&g, &outside, &pt(0, 0)), Err(Error::NotContained("K"))));
        assert!(matches!(rho_g(&g, &pt(0, 0), &outside), Err(Error::NotContained("L"))));
    }

    #[test]
    fn probe_skips_degenerate_triples() {
        let g = square();
        let a = pt(0, 0);
        assert_eq!(quasi_triangle_probe(&g, &[(a.clone(), a.clone(), a.clone())]).unwrap(), None);
        let nested = (
            pt(0, 0),
            VPolytope::from_points(&[Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])]).unwrap(),
            g.clone(),
        );
        let r = quasi_triangle_probe(&g, &[nested]).unwrap().unwrap();
        assert!(r <= int(1));
    }
}
