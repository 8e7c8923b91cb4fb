//! Sectional and mutable genus, and the order of the Picard-Fuchs operator.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cones::{decompositions, r_cone_interior_point_count, t_cone_interior_count};
use crate::polygon::FanoPolygon;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenusError {
    #[error("edge {edge} has no T-cone with index {cone}")]
    UnknownCone { edge: usize, cone: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeGenus {
    pub height: i64,
    pub width: i64,
    pub t_cones: i64,
    /// Interior points in the T-cones of the edge.
    pub t_interior: i64,
    pub r_width: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub sectional_genus: i64,
    pub mutable_genus: i64,
    pub operator_order: i64,
    pub edges: Vec<EdgeGenus>,
}

pub fn sectional_genus(p: &FanoPolygon) -> i64 {
    p.interior_lattice_points().len() as i64
}

pub fn mutable_genus(p: &FanoPolygon) -> i64 {
    r_cone_interior_point_count(p) + 1
}

pub fn operator_order(p: &FanoPolygon) -> i64 {
    2 * mutable_genus(p)
}

/// Genus when exactly the listed T-cones `(edge index, cone index)` are
/// mutable: the sectional genus minus `h(h-1)/2` per mutable cone.
pub fn genus_for_assignment(p: &FanoPolygon, mutable: &[(usize, usize)]) -> Result<i64, GenusError> {
    let decs = decompositions(p);
    let mut g = sectional_genus(p);
    for &(edge, cone) in mutable {
        let d = decs.get(edge).ok_or(GenusError::UnknownCone { edge, cone })?;
        if cone as i64 >= d.t_cone_count {
            return Err(GenusError::UnknownCone { edge, cone });
        }
        g -= t_cone_interior_count(d.edge.height);
    }
    Ok(g)
}

/// Every T-cone of `P` as `(edge index, cone index)`.
pub fn all_t_cones(p: &FanoPolygon) -> Vec<(usize, usize)> {
    decompositions(p)
        .iter()
        .enumerate()
        .flat_map(|(i, d)| (0..d.t_cone_count as usize).map(move |j| (i, j)))
        .collect()
}

pub fn genus_report(p: &FanoPolygon) -> GenusReport {
    let edges = decompositions(p)
        .iter()
        .map(|d| EdgeGenus {
            height: d.edge.height,
            width: d.edge.width,
            t_cones: d.t_cone_count,
            t_interior: d.t_cone_count * t_cone_interior_count(d.edge.height),
            r_width: d.r_cone.map_or(0, |r| r.width),
        })
        .collect();
    let g = mutable_genus(p);
    GenusReport { sectional_genus: sectional_genus(p), mutable_genus: g, operator_order: 2 * g, edges }
}
