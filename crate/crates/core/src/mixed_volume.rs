//! Exact mixed volumes of polytopes.
//!
//! `Vol(G + tK)` is a polynomial of degree `n` in `t ≥ 0` whose coefficients are
//! `binom(n, j)·MV_j(G, K)`. [`steiner_profile`] recovers them by exact
//! interpolation at `t = 0..=n`; [`mixed_volume_full`] evaluates the polarised
//! form by inclusion–exclusion and serves as an independent route.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{minkowski_sum, same_dim, surface_measure, VPolytope};
use crate::scalar::{binomial, int, ratio, Scalar, Surd};

/// `mv[j] = MV(G[n−j], K[j])` for `j = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerProfile {
    pub n: usize,
    pub mv: Vec<Scalar>,
}

impl SteinerProfile {
    /// `Vol(G + tK)` recovered from the profile.
    pub fn volume_at(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        let mut tp = Scalar::one();
        for (j, mv) in self.mv.iter().enumerate() {
            acc += Scalar::from_integer(BigInt::from(binomial(self.n, j))) * mv * &tp;
            tp *= t;
        }
        acc
    }
}

/// Solves `Σ_j c_j t_i^j = v_i` exactly by Gaussian elimination.
pub(crate) fn solve_vandermonde(nodes: &[Scalar], values: &[Scalar]) -> Vec<Scalar> {
    let m = nodes.len();
    let mut a: Vec<Vec<Scalar>> = nodes
        .iter()
        .zip(values)
        .map(|(t, v)| {
            let mut row = Vec::with_capacity(m + 1);
            let mut p = Scalar::one();
            for _ in 0..m {
                row.push(p.clone());
                p *= t;
            }
            row.push(v.clone());
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| !a[r][col].is_zero()).expect("distinct nodes");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    a.into_iter().map(|row| row[m].clone()).collect()
}

/// `Vol(G + tK)` for `t = 0..=n`.
pub fn minkowski_volumes(g: &VPolytope, k: &VPolytope) -> Result<Vec<Scalar>> {
    same_dim(g, k)?;
    let n = g.dim();
    (0..=n)
        .into_par_iter()
        .map(|t| {
            if t == 0 {
                return Ok(g.volume().clone());
            }
            let tk = k.scale(&int(t as i64))?;
            Ok(minkowski_sum(g, &tk)?.volume().clone())
        })
        .collect()
}

/// Profile from the node volumes `Vol(G + tK)`, `t = 0..=n`.
pub fn profile_from_volumes(n: usize, volumes: &[Scalar]) -> SteinerProfile {
    let nodes: Vec<Scalar> = (0..=n).map(|t| int(t as i64)).collect();
    let coeffs = solve_vandermonde(&nodes, volumes);
    let mv = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| c / Scalar::from_integer(BigInt::from(binomial(n, j))))
        .collect();
    SteinerProfile { n, mv }
}

pub fn steiner_profile(g: &VPolytope, k: &VPolytope) -> Result<SteinerProfile> {
    same_dim(g, k)?;
    if !g.is_full_dimensional() {
        return Err(Error::LowerDimensional("steiner_profile reference body"));
    }
    let volumes = minkowski_volumes(g, k)?;
    Ok(profile_from_volumes(g.dim(), &volumes))
}

/// `MV(K₁, …, Kₙ) = (1/n!) Σ_{∅≠S} (−1)^{n−|S|} Vol(Σ_{i∈S} Kᵢ)`.
pub fn mixed_volume_full(bodies: &[VPolytope]) -> Result<Scalar> {
    let first = bodies.first().ok_or(Error::EmptyInput)?;
    let n = first.dim();
    if bodies.len() != n {
        return Err(Error::InvalidArgument(format!(
            "mixed volume in dimension {n} takes {n} bodies, got {}",
            bodies.len()
        )));
    }
    for b in bodies {
        same_dim(first, b)?;
    }
    let terms: Vec<Scalar> = (1u32..(1 << n))
        .into_par_iter()
        .map(|mask| -> Result<Scalar> {
            let mut members = (0..n).filter(|i| mask >> i & 1 == 1);
            let mut sum = bodies[members.next().expect("nonempty subset")].clone();
            for i in members {
                sum = minkowski_sum(&sum, &bodies[i])?;
            }
            let size = mask.count_ones() as usize;
            let vol = sum.volume().clone();
            Ok(if (n - size) % 2 == 0 { vol } else { -vol })
        })
        .collect::<Result<_>>()?;
    let total: Scalar = terms.into_iter().sum();
    let factorial: i64 = (1..=n as i64).product();
    Ok(total / int(factorial))
}

/// `MV₁(G, B)` for the Euclidean unit ball: perimeter/2 in the plane,
/// surface area/3 in space.
pub fn mv1_ball(g: &VPolytope) -> Result<Surd> {
    if !g.is_full_dimensional() {
        return Err(Error::LowerDimensional("mv1_ball"));
    }
    let s = surface_measure(g)?;
    Ok(s.scale(&ratio(1, g.dim() as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn square() -> VPolytope {
        VPolytope::cube(2, int(1)).unwrap()
    }

    #[test]
    fn profile_of_body_with_itself_is_constant() {
        let g = VPolytope::unit_simplex(3).unwrap();
        let p = steiner_profile(&g, &g).unwrap();
        assert!(p.mv.iter().all(|v| v == g.volume()));
    }

    #[test]
    fn profile_with_segment_and_point() {
        let seg = VPolytope::from_points(&[Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])]).unwrap();
        let p = steiner_profile(&square(), &seg).unwrap();
        assert_eq!(p.mv, vec![int(1), ratio(1, 2), int(0)]);
        let pt = VPolytope::point(Point::from_ratios(&[(1, 3), (2, 3)])).unwrap();
        let p = steiner_profile(&square(), &pt).unwrap();
        assert_eq!(p.mv, vec![int(1), int(0), int(0)]);
        assert_eq!(p.volume_at(&int(5)), int(1));
    }

    #[test]
    fn full_mixed_volume_examples() {
        let sq = square();
        assert_eq!(mixed_volume_full(&[sq.clone(), sq.clone()]).unwrap(), int(1));
        let diag = VPolytope::from_points(&[Point::from_ints(&[0, 0]), Point::from_ints(&[1, 1])]).unwrap();
        assert_eq!(mixed_volume_full(&[sq.clone(), diag]).unwrap(), int(1));
        assert!(mixed_volume_full(&[sq.clone()]).is_err());
    }

    #[test]
    fn mv1_of_ball() {
        assert_eq!(mv1_ball(&square()).unwrap().as_rational(), Some(int(2)));
        assert_eq!(mv1_ball(&VPolytope::cube(3, int(1)).unwrap()).unwrap().as_rational(), Some(int(2)));
        assert_eq!(mv1_ball(&VPolytope::cube(2, int(2)).unwrap()).unwrap().as_rational(), Some(int(4)));
    }

    #[test]
    fn vandermonde_recovers_polynomial() {
        // 2 − t + 3t²
        let nodes: Vec<Scalar> = (0..3).map(int).collect();
        let vals: Vec<Scalar> = nodes.iter().map(|t| int(2) - t + int(3) * t * t).collect();
        assert_eq!(solve_vandermonde(&nodes, &vals), vec![int(2), int(-1), int(3)]);
    }
}
