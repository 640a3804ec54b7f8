use num_bigint::Sign;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::sign;

use super::{convex_hull, Halfspace, Point, VPolytope};

/// Result of intersecting a polytope with a halfspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClipResult {
    Empty,
    Body(VPolytope),
}

impl ClipResult {
    pub fn is_empty(&self) -> bool {
        matches!(self, ClipResult::Empty)
    }

    pub fn into_body(self) -> Result<VPolytope> {
        match self {
            ClipResult::Body(p) => Ok(p),
            ClipResult::Empty => Err(Error::EmptyIntersection),
        }
    }
}

fn check(p: &VPolytope, h: &Halfspace) -> Result<()> {
    if h.normal().len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: h.normal().len() });
    }
    Ok(())
}

/// Point where the edge `[a, b]` meets `{value = 0}`, given the signed values.
fn crossing(a: &Point, b: &Point, va: &crate::Scalar, vb: &crate::Scalar) -> Point {
    let t = va / (va - vb);
    a.add(&b.sub(a).scale(&t))
}

/// `P ∩ H`: kept vertices plus edge/boundary crossings, re-hulled.
pub fn clip(p: &VPolytope, h: &Halfspace) -> Result<ClipResult> {
    check(p, h)?;
    let values: Vec<_> = p.vertices().iter().map(|v| h.eval(v)).collect();
    if values.iter().all(|v| sign(v) != Sign::Minus) {
        return Ok(ClipResult::Body(p.clone()));
    }
    let mut pts: Vec<Point> = p
        .vertices()
        .iter()
        .zip(&values)
        .filter(|(_, v)| sign(v) != Sign::Minus)
        .map(|(x, _)| x.clone())
        .collect();
    for (i, j) in p.edges() {
        let (si, sj) = (sign(&values[i]), sign(&values[j]));
        if (si == Sign::Minus && sj == Sign::Plus) || (si == Sign::Plus && sj == Sign::Minus) {
            pts.push(crossing(&p.vertices()[i], &p.vertices()[j], &values[i], &values[j]));
        }
    }
    if pts.is_empty() {
        return Ok(ClipResult::Empty);
    }
    Ok(ClipResult::Body(convex_hull(&pts, p.dim())?))
}

/// `P ∩ {normal · x = offset}` for the boundary hyperplane of `h`.
pub fn slice(p: &VPolytope, h: &Halfspace) -> Result<VPolytope> {
    check(p, h)?;
    let values: Vec<_> = p.vertices().iter().map(|v| h.eval(v)).collect();
    let mut pts: Vec<Point> = p
        .vertices()
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_zero())
        .map(|(x, _)| x.clone())
        .collect();
    for (i, j) in p.edges() {
        let (si, sj) = (sign(&values[i]), sign(&values[j]));
        if (si == Sign::Minus && sj == Sign::Plus) || (si == Sign::Plus && sj == Sign::Minus) {
            pts.push(crossing(&p.vertices()[i], &p.vertices()[j], &values[i], &values[j]));
        }
    }
    if pts.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    convex_hull(&pts, p.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn square() -> VPolytope {
        VPolytope::cube(2, int(1)).unwrap()
    }

    #[test]
    fn clip_square_by_horizontal_line() {
        let h = Halfspace::new(vec![int(0), int(1)], ratio(1, 2)).unwrap();
        let c = clip(&square(), &h).unwrap().into_body().unwrap();
        assert_eq!(c.volume(), &ratio(1, 2));
        assert_eq!(c.vertices().len(), 4);
    }

    #[test]
    fn clip_corner_triangle_area() {
        for s in [ratio(1, 3), ratio(1, 2), ratio(7, 8)] {
            let h = Halfspace::new(vec![int(1), int(1)], int(2) - &s).unwrap();
            let c = clip(&square(), &h).unwrap().into_body().unwrap();
            assert_eq!(c.volume(), &(&s * &s / int(2)));
        }
    }

    #[test]
    fn clip_is_identity_when_halfspace_contains_body() {
        let h = Halfspace::new(vec![int(1), int(0)], int(-5)).unwrap();
        assert_eq!(clip(&square(), &h).unwrap(), ClipResult::Body(square()));
    }

    #[test]
    fn clip_empty_and_touching() {
        let h = Halfspace::new(vec![int(1), int(0)], int(2)).unwrap();
        let r = clip(&square(), &h).unwrap();
        assert!(r.is_empty());
        assert!(matches!(r.into_body(), Err(Error::EmptyIntersection)));
        let touch = Halfspace::new(vec![int(1), int(1)], int(2)).unwrap();
        let c = clip(&square(), &touch).unwrap().into_body().unwrap();
        assert_eq!(c.intrinsic_dim(), 0);
    }

    #[test]
    fn clip_cube_corner() {
        let cube = VPolytope::cube(3, int(1)).unwrap();
        let h = Halfspace::new(vec![int(1), int(1), int(1)], ratio(5, 2)).unwrap();
        let c = clip(&cube, &h).unwrap().into_body().unwrap();
        assert_eq!(c.vertices().len(), 4);
        assert_eq!(c.volume(), &ratio(1, 48));
    }

    #[test]
    fn slices() {
        let h = Halfspace::new(vec![int(1), int(1)], ratio(3, 2)).unwrap();
        let s = slice(&square(), &h).unwrap();
        assert_eq!(s.vertices(), &[Point::from_ratios(&[(1, 2), (1, 1)]), Point::from_ratios(&[(1, 1), (1, 2)])]);
        let top = Halfspace::new(vec![int(0), int(1)], int(1)).unwrap();
        assert_eq!(slice(&square(), &top).unwrap().vertices().len(), 2);
        let cube = VPolytope::cube(3, int(1)).unwrap();
        let z = Halfspace::new(vec![int(0), int(0), int(1)], ratio(3, 4)).unwrap();
        let sq = slice(&cube, &z).unwrap();
        assert_eq!(sq.intrinsic_dim(), 2);
        assert_eq!(sq.vertices().len(), 4);
        assert!(sq.vertices().iter().all(|v| v.coords()[2] == ratio(3, 4)));
        let miss = Halfspace::new(vec![int(0), int(0), int(1)], int(2)).unwrap();
        assert!(slice(&cube, &miss).is_err());
    }
}
