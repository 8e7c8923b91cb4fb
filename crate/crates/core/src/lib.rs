//! Exact combinatorics of toric Fano polygons and their mirror Laurent
//! polynomials.
//!
//! The pipeline runs from lattice polygons (validation, normal forms,
//! edge data) through singularity content and mutation, to maximally
//! mutable Laurent polynomials, the monodromy of their fibrations at
//! `t = 0`, and period sequences with their Picard-Fuchs operators.

pub mod cones;
pub mod format;
pub mod genus;
pub mod hj;
pub mod lattice;
pub mod laurent;
pub mod monodromy;
pub mod mutation;
pub mod periods;
pub mod poly;
pub mod polygon;

pub use cones::{singularity_content, BasketEntry, SingularityContent};
pub use lattice::{LatticePoint, Rational};
pub use polygon::{validate, FanoPolygon, PolygonError};
