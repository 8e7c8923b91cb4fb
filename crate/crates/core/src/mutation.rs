//! Polygon mutation and bounded exploration of mutation classes.
//!
//! Mutation data `(u, F)` is oriented so that the slices `P_r = P ∩ {<u|·> = r}`
//! with `r > 0` lose `r` copies of `[0, F]` at their `F`-maximal end and the
//! slices with `r < 0` gain `|r|` copies there. For the mutation contracting
//! the T-cones of an edge `E`, `u` is minus the inward normal of `E` (so `E`
//! sits at height `h > 0`) and `F` is the primitive direction of `E` from tail
//! to head.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{ext_gcd, rat, LatticePoint, Rational};
use crate::polygon::{from_hull, Edge, FanoPolygon, PolygonError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MutationError {
    #[error("INVALID_DATA: u={u} and F={f} must be primitive with <u|F> = 0")]
    InvalidData { u: LatticePoint, f: LatticePoint },
    #[error("NOT_MUTABLE: slice at height {height} is shorter than {height} copies of F")]
    NotMutable { height: i64 },
    #[error("mutated polygon is not Fano: {0}")]
    Polygon(#[from] PolygonError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MutationData {
    pub u: LatticePoint,
    pub f: LatticePoint,
}

impl MutationData {
    pub fn new(u: LatticePoint, f: LatticePoint) -> Result<Self, MutationError> {
        if !u.is_primitive() || !f.is_primitive() || u.dot(f) != 0 {
            return Err(MutationError::InvalidData { u, f });
        }
        Ok(MutationData { u, f })
    }

    /// Data contracting the T-cones of `edge`.
    pub fn for_edge(edge: &Edge) -> Self {
        MutationData { u: -edge.normal, f: edge.direction() }
    }

    pub fn frame(&self) -> Frame {
        Frame::new(self.u, self.f)
    }
}

/// Coordinates `p = x F + y G` with `y = <u|p>` and `<u|G> = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub u: LatticePoint,
    pub f: LatticePoint,
    pub g: LatticePoint,
    phi: LatticePoint,
}

impl Frame {
    pub fn new(u: LatticePoint, f: LatticePoint) -> Self {
        let (gcd, s, t) = ext_gcd(u.x, u.y);
        debug_assert_eq!(gcd, 1);
        let g = LatticePoint::new(s, t);
        // f = sign · (u.y, -u.x); φ is the row dual to f.
        let sign = if f == LatticePoint::new(u.y, -u.x) { 1 } else { -1 };
        let phi = LatticePoint::new(sign * g.y, -sign * g.x);
        Frame { u, f, g, phi }
    }

    pub fn to_frame(&self, p: LatticePoint) -> (i64, i64) {
        (self.phi.dot(p), self.u.dot(p))
    }

    pub fn from_frame(&self, x: i64, y: i64) -> LatticePoint {
        x * self.f + y * self.g
    }
}

/// Interval `[lo, hi]` of the frame x-coordinate on the slice at height `y`.
fn slice_interval(verts: &[(i64, i64)], y: i64) -> Option<(Rational, Rational)> {
    let n = verts.len();
    let mut xs: Vec<Rational> = Vec::new();
    for i in 0..n {
        let (a, b) = (verts[i], verts[(i + 1) % n]);
        let (ylo, yhi) = (a.1.min(b.1), a.1.max(b.1));
        if y < ylo || y > yhi {
            continue;
        }
        if a.1 == b.1 {
            xs.push(rat(a.0, 1));
            xs.push(rat(b.0, 1));
        } else {
            xs.push(rat(a.0, 1) + rat((b.0 - a.0) * (y - a.1), b.1 - a.1));
        }
    }
    let lo = xs.iter().min()?.clone();
    let hi = xs.iter().max()?.clone();
    Some((lo, hi))
}

/// Mutates `P`; the result keeps the raw coordinates (use
/// [`FanoPolygon::normal_form`] for the canonical representative).
pub fn mutate_polygon(p: &FanoPolygon, data: &MutationData) -> Result<FanoPolygon, MutationError> {
    let data = MutationData::new(data.u, data.f)?;
    let frame = data.frame();
    let verts: Vec<(i64, i64)> = p.vertices().iter().map(|v| frame.to_frame(*v)).collect();
    let ymax = verts.iter().map(|v| v.1).max().unwrap();
    for y in 1..=ymax {
        let (lo, hi) = slice_interval(&verts, y).expect("slice inside the height range");
        if hi - lo < rat(y, 1) {
            return Err(MutationError::NotMutable { height: y });
        }
    }
    let mut out = Vec::new();
    for &(x, y) in &verts {
        let (lo, hi) = slice_interval(&verts, y).expect("vertex lies on its own slice");
        if hi == rat(x, 1) {
            out.push(frame.from_frame(x - y, y));
        }
        if lo == rat(x, 1) {
            out.push(frame.from_frame(x, y));
        }
    }
    Ok(from_hull(&out)?)
}

/// One mutation per edge carrying at least one T-cone, in edge order.
pub fn available_mutations(p: &FanoPolygon) -> Vec<MutationData> {
    p.edges().iter().filter(|e| e.width >= e.height).map(MutationData::for_edge).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub data: MutationData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationGraph {
    /// Normal forms in discovery order; node 0 is the start.
    pub nodes: Vec<FanoPolygon>,
    /// Arrows with data expressed in the coordinates of the source node.
    pub arrows: Vec<Arrow>,
    pub depth: usize,
    pub complete: bool,
}

pub const DEFAULT_MAX_NODES: usize = 10_000;
pub const DEFAULT_MAX_DEPTH: usize = 12;

/// Breadth-first search over normal forms. `complete` is true iff every
/// discovered node was expanded and no limit prevented adding a node.
pub fn mutation_graph(p: &FanoPolygon, max_nodes: usize, max_depth: usize) -> MutationGraph {
    let start = p.normal_form();
    let mut index: BTreeMap<FanoPolygon, usize> = BTreeMap::new();
    let mut nodes = vec![start.clone()];
    let mut depths = vec![0usize];
    index.insert(start, 0);
    let mut arrows = Vec::new();
    let mut complete = true;
    let mut queue = VecDeque::from([0usize]);
    let mut reached = 0;
    while let Some(i) = queue.pop_front() {
        let node = nodes[i].clone();
        for data in available_mutations(&node) {
            let Ok(m) = mutate_polygon(&node, &data) else {
                continue;
            };
            let nf = m.normal_form();
            let target = match index.get(&nf) {
                Some(&j) => j,
                None => {
                    if depths[i] >= max_depth || nodes.len() >= max_nodes {
                        complete = false;
                        continue;
                    }
                    let j = nodes.len();
                    nodes.push(nf.clone());
                    depths.push(depths[i] + 1);
                    reached = reached.max(depths[i] + 1);
                    index.insert(nf, j);
                    queue.push_back(j);
                    j
                }
            };
            arrows.push(Arrow { from: i, to: target, data });
        }
    }
    MutationGraph { nodes, arrows, depth: reached, complete }
}
