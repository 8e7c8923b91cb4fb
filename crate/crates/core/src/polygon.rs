//! Fano polygons: validation, edge data, lattice points, K² and a
//! GL(2,Z) normal form.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{det, ext_gcd, gcd, int, rat, LatticePoint, Rational, UnimodularMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("NOT_2D: vertices do not span a two-dimensional polygon")]
    NotTwoDimensional,
    #[error("ORIGIN_NOT_INTERIOR: the origin is not a strict interior point")]
    OriginNotInterior,
    #[error("NONPRIMITIVE_VERTEX: vertex {0} is not primitive")]
    NonprimitiveVertex(LatticePoint),
    #[error("NOT_CONVEX: point {0} is not a vertex of the convex hull")]
    NotConvex(LatticePoint),
}

impl PolygonError {
    pub fn code(&self) -> &'static str {
        match self {
            PolygonError::NotTwoDimensional => "NOT_2D",
            PolygonError::OriginNotInterior => "ORIGIN_NOT_INTERIOR",
            PolygonError::NonprimitiveVertex(_) => "NONPRIMITIVE_VERTEX",
            PolygonError::NotConvex(_) => "NOT_CONVEX",
        }
    }
}

/// A validated Fano polygon with vertices counterclockwise, starting at the
/// lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FanoPolygon {
    vertices: Vec<LatticePoint>,
}

/// Edge from `tail` to `head` (counterclockwise), with primitive inward
/// normal `normal`, height `h = -<normal|tail>` and lattice length `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub tail: LatticePoint,
    pub head: LatticePoint,
    pub normal: LatticePoint,
    pub height: i64,
    pub width: i64,
}

impl Edge {
    /// Primitive direction from tail to head.
    pub fn direction(&self) -> LatticePoint {
        let d = self.head - self.tail;
        LatticePoint::new(d.x / self.width, d.y / self.width)
    }

    /// Lattice point at step `j` from the tail, `0 <= j <= w`.
    pub fn point(&self, j: i64) -> LatticePoint {
        self.tail + j * self.direction()
    }
}

/// Strict convex hull (no collinear points), counterclockwise.
fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: LatticePoint, a: LatticePoint, b: LatticePoint| det(a - o, b - o);
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Builds a polygon from the convex hull of arbitrary points, checking Fano
/// conditions but not that every input point is a vertex.
pub fn from_hull(points: &[LatticePoint]) -> Result<FanoPolygon, PolygonError> {
    let hull = convex_hull(points);
    validate(&hull)
}

/// Validates a vertex list given in any order.
pub fn validate(vertices: &[LatticePoint]) -> Result<FanoPolygon, PolygonError> {
    let hull = convex_hull(vertices);
    if hull.len() < 3 {
        return Err(PolygonError::NotTwoDimensional);
    }
    let mut seen = Vec::new();
    for v in vertices {
        if !hull.contains(v) || seen.contains(v) {
            return Err(PolygonError::NotConvex(*v));
        }
        seen.push(*v);
    }
    let n = hull.len();
    for i in 0..n {
        let (a, b) = (hull[i], hull[(i + 1) % n]);
        if det(b - a, LatticePoint::ORIGIN - a) <= 0 {
            return Err(PolygonError::OriginNotInterior);
        }
    }
    if let Some(v) = hull.iter().find(|v| !v.is_primitive()) {
        return Err(PolygonError::NonprimitiveVertex(*v));
    }
    Ok(FanoPolygon::from_ccw(hull))
}

impl FanoPolygon {
    fn from_ccw(mut ccw: Vec<LatticePoint>) -> Self {
        let start = (0..ccw.len()).min_by_key(|&i| ccw[i]).unwrap_or(0);
        ccw.rotate_left(start);
        FanoPolygon { vertices: ccw }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Image under a unimodular map; orientation is restored if reversed.
    pub fn transform(&self, m: &UnimodularMap) -> FanoPolygon {
        let mut vs: Vec<LatticePoint> = self.vertices.iter().map(|v| m.apply(*v)).collect();
        if m.determinant() < 0 {
            vs.reverse();
        }
        FanoPolygon::from_ccw(vs)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let tail = self.vertices[i];
                let head = self.vertices[(i + 1) % n];
                let d = head - tail;
                let width = gcd(d.x, d.y);
                let normal = LatticePoint::new(-d.y / width, d.x / width);
                let height = -normal.dot(tail);
                Edge { tail, head, normal, height, width }
            })
            .collect()
    }

    /// Whether `p` lies in the closed polygon.
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.edges().iter().all(|e| e.normal.dot(p) >= -e.height)
    }

    pub fn contains_strictly(&self, p: LatticePoint) -> bool {
        self.edges().iter().all(|e| e.normal.dot(p) > -e.height)
    }

    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        (
            LatticePoint::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            LatticePoint::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    fn points_where(&self, strict: bool) -> Vec<LatticePoint> {
        let edges = self.edges();
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let p = LatticePoint::new(x, y);
                let inside = edges.iter().all(|e| {
                    let v = e.normal.dot(p) + e.height;
                    if strict {
                        v > 0
                    } else {
                        v >= 0
                    }
                });
                if inside {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        self.points_where(false)
    }

    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        self.points_where(true)
    }

    pub fn boundary_point_count(&self) -> i64 {
        self.edges().iter().map(|e| e.width).sum()
    }

    /// Twice the Euclidean area.
    pub fn double_area(&self) -> i64 {
        let n = self.vertices.len();
        (0..n).map(|i| det(self.vertices[i], self.vertices[(i + 1) % n])).sum()
    }

    pub fn area(&self) -> Rational {
        rat(self.double_area(), 2)
    }

    /// `Σ_v r_v / (h_left h_right)` over vertices.
    pub fn anticanonical_degree(&self) -> Rational {
        let edges = self.edges();
        let n = edges.len();
        let mut total = Rational::zero();
        for i in 0..n {
            let (left, right) = (&edges[(i + n - 1) % n], &edges[i]);
            let r = det(left.normal, right.normal).abs();
            total += rat(r, left.height * right.height);
        }
        total
    }

    /// Lattice-normalized volume (twice the area) of the dual polygon, whose
    /// vertices are `u_i / h_i`.
    pub fn dual_volume(&self) -> Rational {
        let dual: Vec<(Rational, Rational)> = self
            .edges()
            .iter()
            .map(|e| (rat(e.normal.x, e.height), rat(e.normal.y, e.height)))
            .collect();
        let n = dual.len();
        let mut s = Rational::zero();
        for i in 0..n {
            let (a, b) = (&dual[i], &dual[(i + 1) % n]);
            s += &a.0 * &b.1 - &a.1 * &b.0;
        }
        s
    }

    /// Canonical representative of the GL(2,Z) orbit.
    pub fn normal_form(&self) -> FanoPolygon {
        let reflected = self.transform(&UnimodularMap::new(-1, 0, 0, 1).expect("unimodular"));
        let mut best: Option<Vec<LatticePoint>> = None;
        for poly in [self, &reflected] {
            let n = poly.vertices.len();
            for e in poly.edges() {
                let f = e.direction();
                let candidate = edge_frame(f, e.normal, e.tail);
                let mut vs: Vec<LatticePoint> = poly.vertices.iter().map(|v| candidate.apply(*v)).collect();
                debug_assert_eq!(vs.len(), n);
                let start = (0..n).min_by_key(|&i| vs[i]).unwrap();
                vs.rotate_left(start);
                if best.as_ref().is_none_or(|b| vs < *b) {
                    best = Some(vs);
                }
            }
        }
        FanoPolygon { vertices: best.expect("polygon has edges") }
    }
}

/// Orientation-preserving map sending `f` to (1,0) and the edge line
/// `<normal|·> = -h` to `y = -h`, sheared so the image of `tail` has x in
/// `[0, h)`.
fn edge_frame(f: LatticePoint, normal: LatticePoint, tail: LatticePoint) -> UnimodularMap {
    let (g, s, t) = ext_gcd(f.x, f.y);
    debug_assert_eq!(g, 1);
    let phi0 = LatticePoint::new(s, t);
    let h = -normal.dot(tail);
    let x0 = phi0.dot(tail);
    let shift = x0.div_euclid(h);
    let phi = LatticePoint::new(phi0.x + shift * normal.x, phi0.y + shift * normal.y);
    UnimodularMap::new(phi.x, phi.y, normal.x, normal.y).expect("frame is unimodular")
}

impl fmt::Display for FanoPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Pick's formula area for cross-checks: `I + B/2 - 1`.
pub fn pick_area(interior: i64, boundary: i64) -> Rational {
    int(interior) + rat(boundary, 2) - int(1)
}
