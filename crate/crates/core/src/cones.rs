//! T-cone / R-cone decomposition of edge cones and singularity content.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::{cone_type, det, gcd, primitive_part, LatticePoint};
use crate::polygon::{Edge, FanoPolygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RCone {
    pub width: i64,
    pub span: (LatticePoint, LatticePoint),
    pub r: i64,
    pub a: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDecomposition {
    pub edge: Edge,
    pub t_cone_count: i64,
    pub t_cone_spans: Vec<(LatticePoint, LatticePoint)>,
    pub r_cone: Option<RCone>,
}

/// One R-cone of the basket: type `1/r(1,a)` over a segment of height `h`
/// and width `w < h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasketEntry {
    pub r: i64,
    pub a: i64,
    pub height: i64,
    pub width: i64,
}

impl fmt::Display for BasketEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.r, self.a)
    }
}

/// Number of primitive T-cones and the basket of R-cones (sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularityContent {
    pub k: i64,
    pub basket: Vec<BasketEntry>,
}

impl SingularityContent {
    pub fn new(k: i64, mut basket: Vec<BasketEntry>) -> Self {
        basket.sort();
        SingularityContent { k, basket }
    }

    /// Number of basket entries of type `1/3(1,1)`, if those are all there is.
    pub fn one_third_count(&self) -> Option<usize> {
        self.basket.iter().all(|b| (b.r, b.a) == (3, 1)).then_some(self.basket.len())
    }
}

impl fmt::Display for SingularityContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.basket.iter().map(|b| b.to_string()).collect();
        write!(f, "({}, {{{}}})", self.k, b.join(", "))
    }
}

/// Type of the cone over the segment `[p, q]`.
fn segment_type(p: LatticePoint, q: LatticePoint) -> (i64, i64) {
    let (pp, _) = primitive_part(p).expect("edge points are nonzero");
    let (qq, _) = primitive_part(q).expect("edge points are nonzero");
    cone_type(pp, qq).expect("distinct points on an edge span a strictly convex cone")
}

/// Decomposition with the R-cone leftmost.
pub fn decompose_edge(edge: &Edge) -> EdgeDecomposition {
    decompose_edge_at(edge, 0)
}

/// Decomposition with the R-cone placed after `slot` T-cones, `0 <= slot <= k`
/// (clamped).
pub fn decompose_edge_at(edge: &Edge, slot: i64) -> EdgeDecomposition {
    let (h, w) = (edge.height, edge.width);
    let k = w / h;
    let e = w % h;
    let slot = if e == 0 { 0 } else { slot.clamp(0, k) };
    let mut t_cone_spans = Vec::new();
    let mut r_cone = None;
    let mut pos = 0;
    for i in 0..=k {
        if e > 0 && i == slot {
            let span = (edge.point(pos), edge.point(pos + e));
            let (r, a) = segment_type(span.0, span.1);
            r_cone = Some(RCone { width: e, span, r, a });
            pos += e;
        }
        if i < k {
            t_cone_spans.push((edge.point(pos), edge.point(pos + h)));
            pos += h;
        }
    }
    debug_assert_eq!(pos, w);
    EdgeDecomposition { edge: *edge, t_cone_count: k, t_cone_spans, r_cone }
}

pub fn decompositions(p: &FanoPolygon) -> Vec<EdgeDecomposition> {
    p.edges().iter().map(decompose_edge).collect()
}

pub fn singularity_content(p: &FanoPolygon) -> SingularityContent {
    let mut k = 0;
    let mut basket = Vec::new();
    for d in decompositions(p) {
        k += d.t_cone_count;
        if let Some(rc) = d.r_cone {
            basket.push(BasketEntry { r: rc.r, a: rc.a, height: d.edge.height, width: rc.width });
        }
    }
    SingularityContent::new(k, basket)
}

/// Points of the open triangle `(0, p, q)`.
fn open_triangle_points(p: LatticePoint, q: LatticePoint) -> Vec<LatticePoint> {
    let (p, q) = if det(p, q) > 0 { (p, q) } else { (q, p) };
    let lo = LatticePoint::new(p.x.min(q.x).min(0), p.y.min(q.y).min(0));
    let hi = LatticePoint::new(p.x.max(q.x).max(0), p.y.max(q.y).max(0));
    let mut out = Vec::new();
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            let z = LatticePoint::new(x, y);
            if det(p, z) > 0 && det(z, q) > 0 && det(q - p, z - p) > 0 {
                out.push(z);
            }
        }
    }
    out
}

/// Twice the number of interior points of `P` in the cone over `[p, q]`
/// (excluding the origin), where points on the two bounding rays count
/// one half each since they are shared with the neighbouring cone.
pub fn cone_interior_points_doubled(p: LatticePoint, q: LatticePoint) -> i64 {
    let strict = open_triangle_points(p, q).len() as i64;
    2 * strict + (gcd(p.x, p.y) - 1) + (gcd(q.x, q.y) - 1)
}

/// Interior lattice points of `P` strictly inside some R-cone.
pub fn r_cone_interior_points(p: &FanoPolygon) -> Vec<LatticePoint> {
    decompositions(p)
        .iter()
        .filter_map(|d| d.r_cone)
        .flat_map(|rc| open_triangle_points(rc.span.0, rc.span.1))
        .collect()
}

/// Interior points attributed to R-cones; shared ray points count half.
/// With primitive spanning rays this is exactly the number of points
/// strictly inside the R-cones.
pub fn r_cone_interior_point_count(p: &FanoPolygon) -> i64 {
    let doubled: i64 = decompositions(p)
        .iter()
        .filter_map(|d| d.r_cone)
        .map(|rc| cone_interior_points_doubled(rc.span.0, rc.span.1))
        .sum();
    debug_assert_eq!(doubled % 2, 0);
    doubled / 2
}

/// Interior points of a T-cone of height `h`: `h(h-1)/2`.
pub fn t_cone_interior_count(h: i64) -> i64 {
    h * (h - 1) / 2
}
