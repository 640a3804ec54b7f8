//! Exact convex hulls in the plane and in space.
//!
//! Input rationals are brought to a common denominator so that every
//! predicate is an integer determinant. When the scaled coordinates are small
//! enough the determinants are evaluated in `i128` (bounds below); otherwise the
//! same code runs on `BigInt`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{gcd_all, Scalar};

use super::Point;

/// 2D: |x| < 2^60 keeps every cross product below 2^123.
const I128_BITS_2D: u64 = 60;
/// 3D: |x| < 2^39 keeps every 3×3 determinant of differences below 2^123.
const I128_BITS_3D: u64 = 39;

pub(crate) trait Ring: Clone + Ord + Signed + Debug {
    fn from_big(v: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Ring for i128 {
    fn from_big(v: &BigInt) -> Self {
        v.to_i128().expect("coordinate exceeds i128 fast path")
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn from_big(v: &BigInt) -> Self {
        v.clone()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Combinatorial hull data, indices refer to the (sorted, deduplicated) input.
#[derive(Debug, Clone)]
pub(crate) struct HullData {
    pub intrinsic_dim: usize,
    pub vertices: Vec<usize>,
    /// Outward primitive integer normal and the facet's vertex cycle,
    /// counter-clockwise seen from outside.
    pub facets: Vec<(Vec<BigInt>, Vec<usize>)>,
    /// Cyclic vertex order when the intrinsic dimension is 2.
    pub polygon: Vec<usize>,
    /// Primitive normal of the supporting plane of a flat body in space.
    pub plane_normal: Option<Vec<BigInt>>,
    /// `dim! · Vol · D^dim` where `D` is the common denominator.
    pub scaled_volume: BigInt,
    pub denominator: BigInt,
}

/// Common-denominator integer image of the points.
fn lattice(points: &[Point]) -> (BigInt, Vec<Vec<BigInt>>) {
    let mut den = BigInt::one();
    for p in points {
        for c in p.coords() {
            den = den.lcm(c.denom());
        }
    }
    let ints = points
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect()
        })
        .collect();
    (den, ints)
}

/// Hull of sorted, deduplicated points in dimension 2 or 3.
pub(crate) fn hull(points: &[Point], dim: usize) -> HullData {
    let (den, ints) = lattice(points);
    let bits = ints
        .iter()
        .flatten()
        .map(|v| v.bits())
        .max()
        .unwrap_or(0);
    let limit = if dim == 2 { I128_BITS_2D } else { I128_BITS_3D };
    let mut data = if bits < limit {
        let pts: Vec<Vec<i128>> = ints
            .iter()
            .map(|p| p.iter().map(i128::from_big).collect())
            .collect();
        build(&pts, dim)
    } else {
        build(&ints, dim)
    };
    data.denominator = den;
    data
}

fn build<T: Ring>(pts: &[Vec<T>], dim: usize) -> HullData {
    let mut data = HullData {
        intrinsic_dim: 0,
        vertices: vec![0],
        facets: Vec::new(),
        polygon: Vec::new(),
        plane_normal: None,
        scaled_volume: BigInt::zero(),
        denominator: BigInt::one(),
    };
    if pts.len() == 1 {
        return data;
    }
    match dim {
        2 => build2(pts, &mut data),
        3 => build3(pts, &mut data),
        _ => unreachable!("exact hull only in dimension 2 or 3"),
    }
    data
}

fn cross2<T: Ring>(o: &[T], a: &[T], b: &[T]) -> T {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

/// Andrew's monotone chain over `order` (already sorted lexicographically in
/// the given 2D coordinates). Collinear points are dropped. Returns the
/// counter-clockwise cycle, or the two extremes when everything is collinear.
fn monotone_chain<T: Ring>(pts2: &[[T; 2]], order: &[usize]) -> Vec<usize> {
    if order.len() <= 2 {
        return order.to_vec();
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in order {
        while lower.len() >= 2
            && !cross2(
                &pts2[lower[lower.len() - 2]],
                &pts2[lower[lower.len() - 1]],
                &pts2[i],
            )
            .is_positive()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && !cross2(
                &pts2[upper[upper.len() - 2]],
                &pts2[upper[upper.len() - 1]],
                &pts2[i],
            )
            .is_positive()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn build2<T: Ring>(pts: &[Vec<T>], data: &mut HullData) {
    let pts2: Vec<[T; 2]> = pts.iter().map(|p| [p[0].clone(), p[1].clone()]).collect();
    let order: Vec<usize> = (0..pts.len()).collect();
    let cycle = monotone_chain(&pts2, &order);
    if cycle.len() == 2 {
        data.intrinsic_dim = 1;
        data.vertices = vec![cycle[0], cycle[1]];
        return;
    }
    data.intrinsic_dim = 2;
    let m = cycle.len();
    let o = &pts2[cycle[0]];
    let mut area2 = T::zero();
    for k in 1..m - 1 {
        area2 = area2 + cross2(o, &pts2[cycle[k]], &pts2[cycle[k + 1]]);
    }
    data.scaled_volume = area2.to_big();
    for k in 0..m {
        let a = &pts2[cycle[k]];
        let b = &pts2[cycle[(k + 1) % m]];
        let normal = vec![
            (b[1].clone() - a[1].clone()).to_big(),
            (a[0].clone() - b[0].clone()).to_big(),
        ];
        data.facets.push((primitive(normal), vec![cycle[k], cycle[(k + 1) % m]]));
    }
    let mut verts = cycle.clone();
    verts.sort_unstable();
    data.vertices = verts;
    data.polygon = cycle;
}

fn sub3<T: Ring>(a: &[T], b: &[T]) -> [T; 3] {
    [
        a[0].clone() - b[0].clone(),
        a[1].clone() - b[1].clone(),
        a[2].clone() - b[2].clone(),
    ]
}

fn cross3<T: Ring>(u: &[T; 3], v: &[T; 3]) -> [T; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

fn dot3<T: Ring>(u: &[T; 3], v: &[T; 3]) -> T {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

/// Signed volume orientation of `p` against the plane through `a, b, c`.
fn orient3<T: Ring>(a: &[T], b: &[T], c: &[T], p: &[T]) -> T {
    let n = cross3(&sub3(b, a), &sub3(c, a));
    dot3(&n, &sub3(p, a))
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = gcd_all(&v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Counter-clockwise (around `normal`) strictly convex cycle of coplanar points.
fn planar_cycle<T: Ring>(pts: &[Vec<T>], members: &[usize], normal: &[BigInt]) -> Vec<usize> {
    let axis = (0..3)
        .max_by_key(|&k| normal[k].abs())
        .expect("three axes");
    let (i, j) = ((axis + 1) % 3, (axis + 2) % 3);
    let pts2: Vec<[T; 2]> = members
        .iter()
        .map(|&m| [pts[m][i].clone(), pts[m][j].clone()])
        .collect();
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&a, &b| pts2[a].cmp(&pts2[b]));
    order.dedup_by(|a, b| pts2[*a] == pts2[*b]);
    let mut cycle: Vec<usize> = monotone_chain(&pts2, &order)
        .into_iter()
        .map(|k| members[k])
        .collect();
    if normal[axis].is_negative() {
        cycle.reverse();
    }
    cycle
}

fn build3<T: Ring>(pts: &[Vec<T>], data: &mut HullData) {
    let n = pts.len();
    let (i0, i1) = (0usize, 1usize);
    let e1 = sub3(&pts[i1], &pts[i0]);
    let i2 = (2..n).find(|&i| {
        let c = cross3(&e1, &sub3(&pts[i], &pts[i0]));
        !(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    });
    let Some(i2) = i2 else {
        // Collinear: the lexicographic extremes are the endpoints.
        data.intrinsic_dim = 1;
        data.vertices = vec![0, n - 1];
        return;
    };
    let i3 = (2..n).find(|&i| !orient3(&pts[i0], &pts[i1], &pts[i2], &pts[i]).is_zero());
    let Some(i3) = i3 else {
        let normal = cross3(&e1, &sub3(&pts[i2], &pts[i0]));
        let normal = primitive(normal.iter().map(|v| v.to_big()).collect());
        let all: Vec<usize> = (0..n).collect();
        let cycle = planar_cycle(pts, &all, &normal);
        data.intrinsic_dim = 2;
        let mut verts = cycle.clone();
        verts.sort_unstable();
        data.vertices = verts;
        data.polygon = cycle;
        data.plane_normal = Some(normal);
        return;
    };

    // Outward-oriented triangles: every hull point satisfies orient ≤ 0.
    let mut faces: Vec<[usize; 3]> = Vec::new();
    let simplex = [i0, i1, i2, i3];
    for skip in 0..4 {
        let tri: Vec<usize> = (0..4).filter(|&k| k != skip).map(|k| simplex[k]).collect();
        let (a, b, c) = (tri[0], tri[1], tri[2]);
        if orient3(&pts[a], &pts[b], &pts[c], &pts[simplex[skip]]).is_positive() {
            faces.push([a, c, b]);
        } else {
            faces.push([a, b, c]);
        }
    }
    for p in 0..n {
        if simplex.contains(&p) {
            continue;
        }
        let visible: Vec<bool> = faces
            .iter()
            .map(|f| orient3(&pts[f[0]], &pts[f[1]], &pts[f[2]], &pts[p]).is_positive())
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut edges: HashSet<(usize, usize)> = HashSet::new();
        for (f, _) in faces.iter().zip(&visible).filter(|(_, &v)| v) {
            edges.insert((f[0], f[1]));
            edges.insert((f[1], f[2]));
            edges.insert((f[2], f[0]));
        }
        let mut next: Vec<[usize; 3]> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| *f)
            .collect();
        let mut horizon: Vec<(usize, usize)> = edges
            .iter()
            .filter(|(a, b)| !edges.contains(&(*b, *a)))
            .copied()
            .collect();
        horizon.sort_unstable();
        for (a, b) in horizon {
            next.push([a, b, p]);
        }
        faces = next;
    }

    // Merge coplanar triangles into facets keyed by their primitive normal.
    let mut groups: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    for f in &faces {
        let normal = cross3(&sub3(&pts[f[1]], &pts[f[0]]), &sub3(&pts[f[2]], &pts[f[0]]));
        let key = primitive(normal.iter().map(|v| v.to_big()).collect());
        groups.entry(key).or_default().extend_from_slice(f);
    }
    let mut vertex_set = std::collections::BTreeSet::new();
    for (normal, mut members) in groups {
        members.sort_unstable();
        members.dedup();
        let cycle = planar_cycle(pts, &members, &normal);
        vertex_set.extend(cycle.iter().copied());
        data.facets.push((normal, cycle));
    }
    data.vertices = vertex_set.into_iter().collect();
    let o = &pts[data.vertices[0]];
    let mut vol6 = T::zero();
    for (_, cycle) in &data.facets {
        let a = sub3(&pts[cycle[0]], o);
        for k in 1..cycle.len() - 1 {
            let b = sub3(&pts[cycle[k]], o);
            let c = sub3(&pts[cycle[k + 1]], o);
            vol6 = vol6 + dot3(&a, &cross3(&b, &c));
        }
    }
    data.scaled_volume = vol6.to_big();
    data.intrinsic_dim = 3;
}

/// Facet offset `normal · v` for an integer normal and a rational vertex.
pub(crate) fn offset(normal: &[Scalar], v: &Point) -> Scalar {
    v.dot(normal)
}
