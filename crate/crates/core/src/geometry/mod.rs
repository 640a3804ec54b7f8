//! Exact V-polytope kernel in ambient dimension 2 and 3.
//!
//! A [`VPolytope`] is always canonical: its vertex list is exactly the set of
//! extreme points, sorted lexicographically, so two polytopes are equal iff
//! their vertex lists are equal. Lower-dimensional bodies (points, segments,
//! flat polygons in space) are ordinary values with volume zero.

mod clip;
mod distance;
mod hull;
mod inradius;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, ratio, to_f64, Scalar, Surd};

pub use clip::{clip, slice, ClipResult};
pub use distance::{hausdorff, nearest_point, HausdorffWitness, WitnessSide};
pub use inradius::{inradius_center, Inradius};

/// A point (or direction) with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Point(coords.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn dot(&self, d: &[Scalar]) -> Scalar {
        self.0.iter().zip(d).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, t: &Scalar) -> Point {
        Point(self.0.iter().map(|a| a * t).collect())
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(&self.0)
    }

    pub fn dist_sq(&self, other: &Point) -> Scalar {
        self.sub(other).norm_sq()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn norm_sq(d: &[Scalar]) -> Scalar {
    d.iter().map(|x| x * x).sum()
}

/// Closed halfspace `{x : normal · x ≥ offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    normal: Vec<Scalar>,
    offset: Scalar,
}

impl Halfspace {
    pub fn new(normal: Vec<Scalar>, offset: Scalar) -> Result<Self> {
        if normal.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroDirection);
        }
        Ok(Halfspace { normal, offset })
    }

    pub fn normal(&self) -> &[Scalar] {
        &self.normal
    }

    pub fn offset(&self) -> &Scalar {
        &self.offset
    }

    /// `normal · x − offset`; nonnegative inside.
    pub fn eval(&self, x: &Point) -> Scalar {
        x.dot(&self.normal) - &self.offset
    }

    pub fn contains(&self, x: &Point) -> bool {
        !self.eval(x).is_negative()
    }
}

/// Facet of a full-dimensional polytope: `normal · x ≤ offset` on the body,
/// with equality on the facet. The normal is a primitive integer vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
    /// Vertex indices, counter-clockwise seen from outside (2D: the edge
    /// endpoints in counter-clockwise order of the polygon).
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Point>,
    intrinsic_dim: usize,
    facets: Vec<Facet>,
    polygon: Vec<usize>,
    plane: Option<(Vec<Scalar>, Scalar)>,
    volume: Scalar,
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for VPolytope {}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(dim))
    }
}

/// Canonical convex hull of a finite point set.
pub fn convex_hull(points: &[Point], dim: usize) -> Result<VPolytope> {
    check_dim(dim)?;
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let data = hull::hull(&pts, dim);

    let mut remap = vec![usize::MAX; pts.len()];
    for (new, &old) in data.vertices.iter().enumerate() {
        remap[old] = new;
    }
    let vertices: Vec<Point> = data.vertices.iter().map(|&i| pts[i].clone()).collect();
    let facets = data
        .facets
        .iter()
        .map(|(normal, cycle)| {
            let normal: Vec<Scalar> = normal.iter().map(|v| Scalar::from_integer(v.clone())).collect();
            let cycle: Vec<usize> = cycle.iter().map(|&i| remap[i]).collect();
            let offset = hull::offset(&normal, &vertices[cycle[0]]);
            Facet { normal, offset, cycle }
        })
        .collect();
    let polygon = data.polygon.iter().map(|&i| remap[i]).collect();
    let plane = data.plane_normal.as_ref().map(|n| {
        let normal: Vec<Scalar> = n.iter().map(|v| Scalar::from_integer(v.clone())).collect();
        let off = vertices[0].dot(&normal);
        (normal, off)
    });
    let factorial: BigInt = (1..=dim as u64).product::<u64>().into();
    let den_pow = num_traits::pow(data.denominator.clone(), dim);
    let volume = Scalar::new(data.scaled_volume.clone(), factorial * den_pow);
    Ok(VPolytope {
        dim,
        vertices,
        intrinsic_dim: data.intrinsic_dim,
        facets,
        polygon,
        plane,
        volume,
    })
}

impl VPolytope {
    pub fn from_points(points: &[Point]) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyInput)?.dim();
        convex_hull(points, dim)
    }

    pub fn point(p: Point) -> Result<Self> {
        let dim = p.dim();
        convex_hull(&[p], dim)
    }

    /// Axis-aligned box `[0, side]^dim`.
    pub fn cube(dim: usize, side: Scalar) -> Result<Self> {
        let pts: Vec<Point> = (0..1usize << dim)
            .map(|mask| {
                Point::new(
                    (0..dim)
                        .map(|k| if mask >> k & 1 == 1 { side.clone() } else { Scalar::zero() })
                        .collect(),
                )
            })
            .collect();
        convex_hull(&pts, dim)
    }

    /// Unit simplex `conv(0, e₁, …, e_dim)`.
    pub fn unit_simplex(dim: usize) -> Result<Self> {
        let mut pts = vec![Point::origin(dim)];
        for k in 0..dim {
            let mut c = vec![Scalar::zero(); dim];
            c[k] = int(1);
            pts.push(Point::new(c));
        }
        convex_hull(&pts, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.intrinsic_dim == self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Cyclic vertex order of a 2-dimensional body (empty otherwise).
    pub fn polygon(&self) -> &[usize] {
        &self.polygon
    }

    /// Supporting plane `normal · x = offset` of a flat body in space.
    pub fn plane(&self) -> Option<(&[Scalar], &Scalar)> {
        self.plane.as_ref().map(|(n, o)| (n.as_slice(), o))
    }

    /// Exact Lebesgue measure in the ambient dimension.
    pub fn volume(&self) -> &Scalar {
        &self.volume
    }

    /// Undirected edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        match self.intrinsic_dim {
            0 => Vec::new(),
            1 => vec![(0, 1)],
            2 => {
                let m = self.polygon.len();
                let set: BTreeSet<_> = (0..m)
                    .map(|k| key(self.polygon[k], self.polygon[(k + 1) % m]))
                    .collect();
                set.into_iter().collect()
            }
            _ => {
                let mut set = BTreeSet::new();
                for f in &self.facets {
                    let m = f.cycle.len();
                    for k in 0..m {
                        set.insert(key(f.cycle[k], f.cycle[(k + 1) % m]));
                    }
                }
                set.into_iter().collect()
            }
        }
    }

    /// Exact membership, boundary included.
    pub fn contains(&self, x: &Point) -> bool {
        if x.dim() != self.dim {
            return false;
        }
        match self.intrinsic_dim {
            0 => &self.vertices[0] == x,
            1 => {
                let a = &self.vertices[0];
                let e = self.vertices[1].sub(a);
                let w = x.sub(a);
                let t = w.dot(e.coords()) / e.norm_sq();
                if t.is_negative() || t > int(1) {
                    return false;
                }
                a.add(&e.scale(&t)) == *x
            }
            2 if self.dim == 3 => {
                let (normal, off) = self.plane.as_ref().expect("flat body has a plane");
                if &x.dot(normal) != off {
                    return false;
                }
                let m = self.polygon.len();
                (0..m).all(|k| {
                    let a = &self.vertices[self.polygon[k]];
                    let b = &self.vertices[self.polygon[(k + 1) % m]];
                    let c = cross(&b.sub(a), &x.sub(a));
                    !c.dot(normal).is_negative()
                })
            }
            _ => self.facets.iter().all(|f| x.dot(&f.normal) <= f.offset),
        }
    }

    /// `self ⊆ other`, checked on the vertices of `self`.
    pub fn is_subset_of(&self, other: &VPolytope) -> bool {
        self.vertices.iter().all(|v| other.contains(v))
    }

    pub fn translate(&self, by: &Point) -> Result<VPolytope> {
        let pts: Vec<Point> = self.vertices.iter().map(|v| v.add(by)).collect();
        convex_hull(&pts, self.dim)
    }

    /// Homothetic copy `t·P` for `t ≥ 0`.
    pub fn scale(&self, t: &Scalar) -> Result<VPolytope> {
        if t.is_negative() {
            return Err(Error::InvalidArgument("negative scale factor".into()));
        }
        let pts: Vec<Point> = self.vertices.iter().map(|v| v.scale(t)).collect();
        convex_hull(&pts, self.dim)
    }

    /// Closed convex hull of the union, `K ∪̃ L`.
    pub fn hull_union(&self, other: &VPolytope) -> Result<VPolytope> {
        same_dim(self, other)?;
        let mut pts = self.vertices.clone();
        pts.extend(other.vertices.iter().cloned());
        convex_hull(&pts, self.dim)
    }

    pub fn centroid_of_vertices(&self) -> Point {
        let n = Scalar::from_integer(BigInt::from(self.vertices.len()));
        let mut acc = Point::origin(self.dim);
        for v in &self.vertices {
            acc = acc.add(v);
        }
        acc.scale(&(Scalar::from_integer(1.into()) / n))
    }
}

pub(crate) fn same_dim(p: &VPolytope, q: &VPolytope) -> Result<()> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: q.dim });
    }
    Ok(())
}

pub(crate) fn cross(a: &Point, b: &Point) -> Point {
    let (a, b) = (a.coords(), b.coords());
    Point::new(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

/// Boundary measure: perimeter in the plane, total facet area in space.
pub fn surface_measure(p: &VPolytope) -> Result<Surd> {
    if !p.is_full_dimensional() {
        return Err(Error::LowerDimensional("surface_measure"));
    }
    let mut total = Surd::zero();
    for f in &p.facets {
        if p.dim == 2 {
            let len_sq = p.vertices[f.cycle[0]].dist_sq(&p.vertices[f.cycle[1]]);
            total = total.add(&Surd::sqrt_of(&len_sq, int(1)));
        } else {
            let o = &p.vertices[f.cycle[0]];
            let mut area = Point::origin(3);
            for k in 1..f.cycle.len() - 1 {
                let a = p.vertices[f.cycle[k]].sub(o);
                let b = p.vertices[f.cycle[k + 1]].sub(o);
                area = area.add(&cross(&a, &b));
            }
            total = total.add(&Surd::sqrt_of(&area.norm_sq(), ratio(1, 2)));
        }
    }
    Ok(total)
}

/// Hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &VPolytope, q: &VPolytope) -> Result<VPolytope> {
    same_dim(p, q)?;
    let mut pts = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            pts.push(a.add(b));
        }
    }
    convex_hull(&pts, p.dim)
}

/// Support function `h_P(d) = max_{v} d · v`.
pub fn support_value(p: &VPolytope, d: &[Scalar]) -> Result<Scalar> {
    if d.len() != p.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: d.len() });
    }
    if d.iter().all(|c| c.is_zero()) {
        return Err(Error::ZeroDirection);
    }
    Ok(p.vertices.iter().map(|v| v.dot(d)).max().expect("nonempty"))
}

/// Squared diameter, the largest squared vertex distance.
pub fn diameter_sq(p: &VPolytope) -> Scalar {
    let v = &p.vertices;
    let mut best = Scalar::zero();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = v[i].dist_sq(&v[j]);
            if d > best {
                best = d;
            }
        }
    }
    best
}
