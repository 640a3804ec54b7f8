//! Polytope JSON files: `{"dim": n, "vertices": [["p/q", ...], ...]}`.
//!
//! Coordinates are rational strings; plain JSON integers are also accepted on
//! input. Output always uses strings in lowest terms.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::estimator::GenPolytope;
use crate::geometry::{convex_hull, Point, VPolytope};
use crate::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Serialize, Deserialize)]
struct RawFile {
    dim: usize,
    vertices: Vec<Vec<Value>>,
}

#[derive(Serialize)]
struct OutFile<'a> {
    dim: usize,
    vertices: &'a [Vec<String>],
}

fn coordinate(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_scalar(&n.to_string()),
        other => Err(Error::Parse(format!("coordinate must be a rational string or integer, got {other}"))),
    }
}

/// Parses the file contents into a dimension and raw point list.
pub fn parse_points(text: &str) -> Result<(usize, Vec<Vec<Scalar>>)> {
    let raw: RawFile = serde_json::from_str(text)?;
    if raw.dim == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    if raw.vertices.is_empty() {
        return Err(Error::Parse("vertex list is empty".into()));
    }
    let mut pts = Vec::with_capacity(raw.vertices.len());
    for (i, v) in raw.vertices.iter().enumerate() {
        if v.len() != raw.dim {
            return Err(Error::Parse(format!("vertex {i} has {} coordinates, expected {}", v.len(), raw.dim)));
        }
        pts.push(v.iter().map(coordinate).collect::<Result<Vec<_>>>()?);
    }
    Ok((raw.dim, pts))
}

pub fn parse_polytope(text: &str) -> Result<VPolytope> {
    let (dim, pts) = parse_points(text)?;
    let pts: Vec<Point> = pts.into_iter().map(Point::new).collect();
    convex_hull(&pts, dim)
}

pub fn parse_gen_polytope(text: &str) -> Result<GenPolytope> {
    let (dim, pts) = parse_points(text)?;
    GenPolytope::new(dim, pts)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn read_polytope(path: &Path) -> Result<VPolytope> {
    parse_polytope(&read(path)?)
}

pub fn read_gen_polytope(path: &Path) -> Result<GenPolytope> {
    parse_gen_polytope(&read(path)?)
}

pub fn points_to_json(dim: usize, vertices: &[Vec<Scalar>]) -> String {
    let v: Vec<Vec<String>> = vertices.iter().map(|p| p.iter().map(format_scalar).collect()).collect();
    serde_json::to_string(&OutFile { dim, vertices: &v }).expect("plain data serialises")
}

pub fn polytope_to_json(p: &VPolytope) -> String {
    let v: Vec<Vec<Scalar>> = p.vertices().iter().map(|x| x.coords().to_vec()).collect();
    points_to_json(p.dim(), &v)
}

pub fn write_polytope(path: &Path, p: &VPolytope) -> Result<()> {
    fs::write(path, polytope_to_json(p))?;
    Ok(())
}

/// `"a,b[,c]"` as a rational vector.
pub fn parse_vector(text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(parse_scalar).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn round_trip() {
        let text = r#"{"dim":2,"vertices":[["0","0"],["1","0"],["1/2","1/2"],["0","1"],["1","1"]]}"#;
        let p = parse_polytope(text).unwrap();
        assert_eq!(p.vertices().len(), 4);
        let out = polytope_to_json(&p);
        assert_eq!(out, r#"{"dim":2,"vertices":[["0","0"],["0","1"],["1","0"],["1","1"]]}"#);
        assert_eq!(parse_polytope(&out).unwrap(), p);
    }

    #[test]
    fn integers_accepted_floats_rejected() {
        let p = parse_polytope(r#"{"dim":2,"vertices":[[0,0],[2,"1/3"]]}"#).unwrap();
        assert_eq!(p.vertices()[1].coords(), &[int(2), ratio(1, 3)]);
        let e = parse_polytope(r#"{"dim":2,"vertices":[[0.5,0]]}"#).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(parse_polytope(r#"{"dim":2,"vertices":[["1"]]}"#).is_err());
        assert!(parse_polytope(r#"{"dim":2,"vertices":[]}"#).is_err());
        assert!(parse_polytope("not json").is_err());
    }

    #[test]
    fn higher_dimension_goes_to_point_lists() {
        let text = r#"{"dim":4,"vertices":[["0","0","0","0"],["1","1","1","1"]]}"#;
        assert!(parse_polytope(text).is_err());
        assert_eq!(parse_gen_polytope(text).unwrap().dim(), 4);
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("1,-1/2").unwrap(), vec![int(1), ratio(-1, 2)]);
        assert!(parse_vector("1,x").is_err());
    }
}
