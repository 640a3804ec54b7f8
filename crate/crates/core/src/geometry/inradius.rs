//! Chebyshev centre by exact linear programming.
//!
//! Maximise `r` subject to `aᵢ·x + r·|aᵢ| ≤ bᵢ` over the facets. Facet normals
//! are primitive integer vectors; when `|aᵢ|` is irrational it is replaced by a
//! rational upper bound `uᵢ ≥ |aᵢ|`, so the returned radius is a certified lower
//! bound of the true inradius with relative gap at most `2^-40`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lp::{maximize_le, LpOutcome};
use crate::scalar::{exact_sqrt, sqrt_bounds, to_f64, Scalar};

use super::{norm_sq, Point, VPolytope};

const NORM_BITS: u32 = 48;

#[derive(Clone, Debug)]
pub struct Inradius {
    /// Certified lower bound; equal to the inradius when `exact`.
    pub radius: Scalar,
    pub center: Point,
    pub exact: bool,
}

impl Inradius {
    pub fn radius_f64(&self) -> f64 {
        to_f64(&self.radius)
    }
}

pub fn inradius_center(p: &VPolytope) -> Result<Inradius> {
    if !p.is_full_dimensional() {
        return Err(Error::LowerDimensional("inradius_center"));
    }
    let n = p.dim();
    // Shift to the vertex centroid so the right-hand sides are positive.
    let c0 = p.centroid_of_vertices();
    let mut exact = true;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for f in p.facets() {
        let len = match exact_sqrt(&norm_sq(&f.normal)) {
            Some(v) => v,
            None => {
                exact = false;
                sqrt_bounds(&norm_sq(&f.normal), NORM_BITS).1
            }
        };
        // variables: y⁺ (n), y⁻ (n), r
        let mut row: Vec<Scalar> = f.normal.clone();
        row.extend(f.normal.iter().map(|v| -v));
        row.push(len);
        rows.push(row);
        rhs.push(&f.offset - c0.dot(&f.normal));
    }
    let mut cost = vec![Scalar::zero(); 2 * n];
    cost.push(Scalar::one());
    match maximize_le(&rows, &rhs, &cost) {
        LpOutcome::Optimal { x, value } => {
            let shift: Vec<Scalar> = (0..n).map(|k| &x[k] - &x[n + k]).collect();
            Ok(Inradius { radius: value, center: c0.add(&Point::new(shift)), exact })
        }
        LpOutcome::Unbounded => Err(Error::Lp("unbounded")),
    }
}
