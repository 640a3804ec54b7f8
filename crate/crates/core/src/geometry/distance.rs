use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::scalar::{int, to_f64, Scalar};

use super::{cross, same_dim, Halfspace, Point, VPolytope};

/// Nearest point of the segment `[a, b]` to `x` with its squared distance.
fn segment_nearest(x: &Point, a: &Point, b: &Point) -> (Point, Scalar) {
    let e = b.sub(a);
    let len = e.norm_sq();
    if len.is_zero() {
        return (a.clone(), x.dist_sq(a));
    }
    let mut t = x.sub(a).dot(e.coords()) / len;
    if t.is_negative() {
        t = Scalar::zero();
    } else if t > int(1) {
        t = int(1);
    }
    let y = a.add(&e.scale(&t));
    let d = x.dist_sq(&y);
    (y, d)
}

/// Closest point of a planar polygon (vertex cycle, CCW around `normal`) in space.
fn polygon_nearest(x: &Point, verts: &[Point], cycle: &[usize], normal: &[Scalar], offset: &Scalar) -> (Point, Scalar) {
    let n2: Scalar = normal.iter().map(|c| c * c).sum();
    let lift = (x.dot(normal) - offset) / n2;
    let y = x.sub(&Point::new(normal.iter().map(|c| c * &lift).collect()));
    let m = cycle.len();
    let inside = (0..m).all(|k| {
        let a = &verts[cycle[k]];
        let b = &verts[cycle[(k + 1) % m]];
        !cross(&b.sub(a), &y.sub(a)).dot(normal).is_negative()
    });
    if inside {
        let d = x.dist_sq(&y);
        return (y, d);
    }
    edges_nearest(x, verts, cycle)
}

fn edges_nearest(x: &Point, verts: &[Point], cycle: &[usize]) -> (Point, Scalar) {
    let m = cycle.len();
    (0..m)
        .map(|k| segment_nearest(x, &verts[cycle[k]], &verts[cycle[(k + 1) % m]]))
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("polygon has edges")
}

/// Exact Euclidean projection of `x` onto `p` and its squared distance.
///
/// The minimiser is found by enumerating the faces that can carry it: facets
/// whose supporting plane separates `x` from the body, then their edges.
pub fn nearest_point(x: &Point, p: &VPolytope) -> Result<(Point, Scalar)> {
    if x.dim() != p.dim() {
        return Err(crate::Error::DimensionMismatch { expected: p.dim(), found: x.dim() });
    }
    if p.contains(x) {
        return Ok((x.clone(), Scalar::zero()));
    }
    let v = p.vertices();
    let best = match p.intrinsic_dim() {
        0 => (v[0].clone(), x.dist_sq(&v[0])),
        1 => segment_nearest(x, &v[0], &v[1]),
        2 if p.dim() == 2 => edges_nearest(x, v, p.polygon()),
        2 => {
            let (normal, offset) = p.plane().expect("flat body has a plane");
            polygon_nearest(x, v, p.polygon(), normal, offset)
        }
        _ => p
            .facets()
            .iter()
            .filter(|f| x.dot(&f.normal) > f.offset)
            .map(|f| polygon_nearest(x, v, &f.cycle, &f.normal, &f.offset))
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("an exterior point sees some facet"),
    };
    Ok(best)
}

/// Which body the witness halfspace supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSide {
    /// The distance is attained from a point of `L`; the plane through `p` supports `K`.
    K,
    /// The distance is attained from a point of `K`; the plane through `q` supports `L`.
    L,
}

#[derive(Clone, Debug)]
pub struct HausdorffWitness {
    pub value_sq: Scalar,
    pub value: f64,
    /// Point of `K`.
    pub p: Point,
    /// Point of `L`.
    pub q: Point,
    /// Halfspace orthogonal to `[p, q]` containing the supported body, with its
    /// boundary through the supported endpoint; `None` when `K = L`.
    pub support: Option<Halfspace>,
    pub side: WitnessSide,
}

/// Exact Hausdorff distance, attained at a vertex of one of the two bodies.
pub fn hausdorff(k: &VPolytope, l: &VPolytope) -> Result<HausdorffWitness> {
    same_dim(k, l)?;
    let mut best: Option<(Scalar, Point, Point, WitnessSide)> = None;
    for v in k.vertices() {
        let (q, d) = nearest_point(v, l)?;
        if best.as_ref().map_or(true, |b| d > b.0) {
            best = Some((d, v.clone(), q, WitnessSide::L));
        }
    }
    for w in l.vertices() {
        let (p, d) = nearest_point(w, k)?;
        if best.as_ref().map_or(true, |b| d > b.0) {
            best = Some((d, p, w.clone(), WitnessSide::K));
        }
    }
    let (value_sq, p, q, side) = best.expect("nonempty bodies");
    let support = if value_sq.is_zero() {
        None
    } else {
        let (normal, anchor) = match side {
            WitnessSide::K => (p.sub(&q), &p),
            WitnessSide::L => (q.sub(&p), &q),
        };
        let offset = anchor.dot(normal.coords());
        Some(Halfspace::new(normal.into_coords(), offset)?)
    };
    Ok(HausdorffWitness { value: to_f64(&value_sq).sqrt(), value_sq, p, q, support, side })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::convex_hull;
    use crate::scalar::ratio;

    fn square() -> VPolytope {
        VPolytope::cube(2, int(1)).unwrap()
    }

    #[test]
    fn nearest_point_cases() {
        let sq = square();
        let inside = Point::from_ratios(&[(1, 3), (1, 2)]);
        assert_eq!(nearest_point(&inside, &sq).unwrap(), (inside.clone(), Scalar::zero()));
        assert_eq!(
            nearest_point(&Point::from_ints(&[2, 0]), &sq).unwrap(),
            (Point::from_ints(&[1, 0]), int(1))
        );
        assert_eq!(
            nearest_point(&Point::from_ints(&[2, 2]), &sq).unwrap(),
            (Point::from_ints(&[1, 1]), int(2))
        );
    }

    #[test]
    fn nearest_vertex_case_beats_dense_sampling() {
        let sq = square();
        let x = Point::from_ints(&[2, 2]);
        let (_, d) = nearest_point(&x, &sq).unwrap();
        let mut best = f64::INFINITY;
        for i in 0..=50 {
            for j in 0..=50 {
                let y = [i as f64 / 50.0, j as f64 / 50.0];
                best = best.min((2.0 - y[0]).powi(2) + (2.0 - y[1]).powi(2));
            }
        }
        assert!((to_f64(&d) - best).abs() < 1e-12);
    }

    #[test]
    fn nearest_point_on_cube_faces_edges_and_vertices() {
        let cube = VPolytope::cube(3, int(1)).unwrap();
        let face = nearest_point(&Point::from_ratios(&[(1, 2), (1, 2), (3, 1)]), &cube).unwrap();
        assert_eq!(face, (Point::from_ratios(&[(1, 2), (1, 2), (1, 1)]), int(4)));
        let edge = nearest_point(&Point::from_ratios(&[(1, 2), (2, 1), (2, 1)]), &cube).unwrap();
        assert_eq!(edge, (Point::from_ratios(&[(1, 2), (1, 1), (1, 1)]), int(2)));
        let vertex = nearest_point(&Point::from_ints(&[-1, -1, -1]), &cube).unwrap();
        assert_eq!(vertex, (Point::from_ints(&[0, 0, 0]), int(3)));
    }

    #[test]
    fn nearest_point_on_flat_bodies_in_space() {
        let tri = convex_hull(
            &[Point::from_ints(&[0, 0, 0]), Point::from_ints(&[2, 0, 0]), Point::from_ints(&[0, 2, 0])],
            3,
        )
        .unwrap();
        let above = nearest_point(&Point::from_ratios(&[(1, 2), (1, 2), (5, 1)]), &tri).unwrap();
        assert_eq!(above, (Point::from_ratios(&[(1, 2), (1, 2), (0, 1)]), int(25)));
        let beside = nearest_point(&Point::from_ints(&[2, 2, 0]), &tri).unwrap();
        assert_eq!(beside, (Point::from_ints(&[1, 1, 0]), int(2)));
    }

    #[test]
    fn hausdorff_examples() {
        let sq = square();
        assert!(hausdorff(&sq, &sq).unwrap().value_sq.is_zero());
        let origin = VPolytope::point(Point::from_ints(&[0, 0])).unwrap();
        assert_eq!(hausdorff(&sq, &origin).unwrap().value_sq, int(2));
        let half = sq.scale(&ratio(1, 2)).unwrap();
        let w = hausdorff(&sq, &half).unwrap();
        assert_eq!(w.value_sq, ratio(1, 2));
        assert!((w.value - 2f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn witness_supports_the_right_body() {
        let sq = square();
        let far = convex_hull(&[Point::from_ints(&[3, 0]), Point::from_ints(&[3, 1])], 2).unwrap();
        for (k, l) in [(&sq, &far), (&far, &sq)] {
            let w = hausdorff(k, l).unwrap();
            assert_eq!(w.p.dist_sq(&w.q), w.value_sq);
            let h = w.support.as_ref().unwrap();
            let (body, anchor) = match w.side {
                WitnessSide::K => (k, &w.p),
                WitnessSide::L => (l, &w.q),
            };
            assert!(body.vertices().iter().all(|v| h.contains(v)));
            assert!(h.eval(anchor).is_zero());
            assert!(k.contains(&w.p) && l.contains(&w.q));
        }
    }
}
