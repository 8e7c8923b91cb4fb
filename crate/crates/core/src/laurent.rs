//! Laurent polynomials over exact or symbolic coefficients, slices,
//! cluster-transformation mutation and standard MMLP synthesis.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cones::{decompose_edge, r_cone_interior_points};
use crate::lattice::{
    format_rational, solve_linear_system, AffineExpression, LatticePoint, Rational, SolutionSpace,
};
use crate::mutation::{available_mutations, mutate_polygon, MutationData};
use crate::polygon::{from_hull, FanoPolygon, PolygonError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("NOT_FANO: Newton polygon is not Fano: {0}")]
    NotFano(PolygonError),
    #[error("NOT_MUTABLE: slice at height {height} is not divisible by the factor")]
    NotMutable { height: i64 },
    #[error("INCONSISTENT: no Laurent polynomial satisfies the mutability constraints")]
    Inconsistent,
    #[error("factor must have nonzero coefficients")]
    ZeroFactor,
    #[error("assignment lists {given} factors on edge {edge}, which has {expected} T-cones")]
    AssignmentMismatch { edge: usize, given: usize, expected: usize },
    #[error("expected {expected} parameter values, got {given}")]
    ParameterCount { expected: usize, given: usize },
}

/// Coefficient ring operations needed by slices and mutation.
pub trait Coefficient: Clone + PartialEq + Debug {
    fn zero_coeff() -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
    fn from_rational(q: Rational) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-Rational::one()))
    }
}

impl Coefficient for Rational {
    fn zero_coeff() -> Self {
        Zero::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
}

impl Coefficient for AffineExpression {
    fn zero_coeff() -> Self {
        AffineExpression::zero()
    }
    fn is_zero_coeff(&self) -> bool {
        AffineExpression::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn scale(&self, s: &Rational) -> Self {
        AffineExpression::scale(self, s)
    }
    fn from_rational(q: Rational) -> Self {
        AffineExpression::constant(q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<LatticePoint, C>,
}

pub type LaurentPolynomial = LaurentPoly<Rational>;

impl<C: Coefficient> LaurentPoly<C> {
    pub fn new() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (LatticePoint, C)>) -> Self {
        let mut p = Self::new();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: LatticePoint, c: C) {
        let sum = match self.terms.get(&e) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if sum.is_zero_coeff() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, C> {
        &self.terms
    }

    pub fn coefficient(&self, e: LatticePoint) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero_coeff)
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn newton_polygon(&self) -> Result<FanoPolygon, LaurentError> {
        from_hull(&self.support()).map_err(LaurentError::NotFano)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Product with a polynomial with rational coefficients.
    pub fn mul_rational(&self, other: &LaurentPolynomial) -> Self {
        let mut out = Self::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(*ea + *eb, ca.scale(cb));
            }
        }
        out
    }

    /// Slice at height `r` w.r.t. `u`, in the coordinate along
    /// `F = (u.y, -u.x)`.
    pub fn slice(&self, u: LatticePoint, r: i64) -> Slice<C> {
        let data = MutationData { u, f: LatticePoint::new(u.y, -u.x) };
        self.slice_along(&data, r)
    }

    pub fn slice_along(&self, data: &MutationData, r: i64) -> Slice<C> {
        let frame = data.frame();
        let entries: Vec<(i64, C)> = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let (x, y) = frame.to_frame(*e);
                (y == r).then(|| (x, c.clone()))
            })
            .collect();
        let Some(lo) = entries.iter().map(|(x, _)| *x).min() else {
            return Slice { start: 0, coeffs: vec![] };
        };
        let hi = entries.iter().map(|(x, _)| *x).max().unwrap();
        let mut coeffs = vec![C::zero_coeff(); (hi - lo + 1) as usize];
        for (x, c) in entries {
            coeffs[(x - lo) as usize] = c;
        }
        Slice { start: lo, coeffs }
    }
}

/// `Σ coeffs[j] X^(start + j)` in one variable `X = x^F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice<C> {
    pub start: i64,
    pub coeffs: Vec<C>,
}

impl<C: Coefficient> Slice<C> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_coeff())
    }
}

/// Linear factor `γ + η X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub gamma: Rational,
    pub eta: Rational,
}

impl Factor {
    pub fn new(gamma: Rational, eta: Rational) -> Result<Self, LaurentError> {
        if gamma.is_zero() || eta.is_zero() {
            return Err(LaurentError::ZeroFactor);
        }
        Ok(Factor { gamma, eta })
    }

    /// `1 + X`.
    pub fn standard() -> Self {
        Factor { gamma: Rational::one(), eta: Rational::one() }
    }

    /// The root `-γ/η`; two factors define the same point iff roots agree.
    pub fn root(&self) -> Rational {
        -(&self.gamma / &self.eta)
    }
}

/// Divides by `γ + ηX`, returning quotient and remainder (constant term).
fn divide_once<C: Coefficient>(coeffs: &[C], factor: &Factor) -> (Vec<C>, C) {
    if coeffs.is_empty() {
        return (vec![], C::zero_coeff());
    }
    let mut work: Vec<C> = coeffs.to_vec();
    let n = work.len() - 1;
    let mut q = vec![C::zero_coeff(); n];
    let inv_eta = factor.eta.recip();
    for j in (1..=n).rev() {
        let qj = work[j].scale(&inv_eta);
        work[j - 1] = work[j - 1].minus(&qj.scale(&factor.gamma));
        q[j - 1] = qj;
    }
    (q, work[0].clone())
}

fn multiply_once<C: Coefficient>(coeffs: &[C], factor: &Factor) -> Vec<C> {
    let mut out = vec![C::zero_coeff(); coeffs.len() + 1];
    for (j, c) in coeffs.iter().enumerate() {
        out[j] = out[j].plus(&c.scale(&factor.gamma));
        out[j + 1] = out[j + 1].plus(&c.scale(&factor.eta));
    }
    out
}

/// Applies `f_r ↦ f_r (γ + η x^F)^(-r)` to every slice and returns the
/// result together with every division remainder (all zero iff mutable).
pub fn mutate_with_remainders<C: Coefficient>(
    f: &LaurentPoly<C>,
    data: &MutationData,
    factor: &Factor,
) -> (LaurentPoly<C>, Vec<(i64, C)>) {
    let frame = data.frame();
    let mut heights: Vec<i64> = f.terms.keys().map(|e| frame.to_frame(*e).1).collect();
    heights.sort();
    heights.dedup();
    let mut out = LaurentPoly::new();
    let mut remainders = Vec::new();
    for r in heights {
        let slice = f.slice_along(data, r);
        let mut coeffs = slice.coeffs;
        if r > 0 {
            for _ in 0..r {
                let (q, rem) = divide_once(&coeffs, factor);
                remainders.push((r, rem));
                coeffs = q;
            }
        } else {
            for _ in 0..(-r) {
                coeffs = multiply_once(&coeffs, factor);
            }
        }
        for (j, c) in coeffs.into_iter().enumerate() {
            out.add_term(frame.from_frame(slice.start + j as i64, r), c);
        }
    }
    (out, remainders)
}

/// Whether `(γ + η x^F)^r` divides every slice at height `0 < r`.
pub fn is_mutable<C: Coefficient>(f: &LaurentPoly<C>, data: &MutationData, factor: &Factor) -> bool {
    let (_, rems) = mutate_with_remainders(f, data, factor);
    rems.iter().all(|(_, c)| c.is_zero_coeff())
}

pub fn mutate_laurent<C: Coefficient>(
    f: &LaurentPoly<C>,
    data: &MutationData,
    factor: &Factor,
) -> Result<LaurentPoly<C>, LaurentError> {
    let (g, rems) = mutate_with_remainders(f, data, factor);
    if let Some((height, _)) = rems.iter().find(|(_, c)| !c.is_zero_coeff()) {
        return Err(LaurentError::NotMutable { height: *height });
    }
    Ok(g)
}

/// Data of the inverse mutation: `(-u, F)` with the same factor undoes
/// `(u, F)`.
pub fn inverse_data(data: &MutationData) -> MutationData {
    MutationData { u: -data.u, f: data.f }
}

impl LaurentPolynomial {
    pub fn mul(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.mul_rational(other)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(LatticePoint::ORIGIN)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeMode {
    /// Edge coefficients of `(1 + x)^w`.
    Binomial,
    /// Edge coefficients of `(1 + x)^(kh) (1 + x^e)`, the R-cone segment
    /// contributing `1 + x^e`.
    TBinomial,
}

/// Laurent polynomial with affine-linear coefficients in named parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicLaurentPolynomial {
    pub params: Vec<String>,
    pub poly: LaurentPoly<AffineExpression>,
}

impl SymbolicLaurentPolynomial {
    pub fn substitute(&self, values: &[Rational]) -> Result<LaurentPolynomial, LaurentError> {
        if values.len() != self.params.len() {
            return Err(LaurentError::ParameterCount { expected: self.params.len(), given: values.len() });
        }
        Ok(self.poly.map_coefficients(|c| c.eval(values)))
    }

    /// Substitutes zero for every parameter.
    pub fn at_zero(&self) -> LaurentPolynomial {
        let zeros = vec![Rational::zero(); self.params.len()];
        self.poly.map_coefficients(|c| c.eval(&zeros))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MmlpResult {
    pub polynomial: SymbolicLaurentPolynomial,
    /// Lattice point carrying each free parameter, aligned with `params`.
    pub parameter_points: Vec<LatticePoint>,
    /// Depth at which the constraint rank stopped growing, if it did.
    pub stabilized_at: Option<usize>,
    pub depth_explored: usize,
    pub constraint_rank: usize,
}

fn binomial_row(n: i64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = row[k as usize].clone() * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

fn edge_coefficients(w: i64, h: i64, mode: EdgeMode) -> Vec<Rational> {
    let to_q = |v: Vec<BigInt>| v.into_iter().map(Rational::from_integer).collect::<Vec<_>>();
    match mode {
        EdgeMode::Binomial => to_q(binomial_row(w)),
        EdgeMode::TBinomial => {
            let (k, e) = (w / h, w % h);
            let t = binomial_row(k * h);
            let mut out = vec![BigInt::zero(); (w + 1) as usize];
            for (j, c) in t.iter().enumerate() {
                out[j] += c;
                if e > 0 {
                    out[j + e as usize] += c;
                }
            }
            to_q(out)
        }
    }
}

/// Standard maximally mutable Laurent polynomial of `P` with constraints
/// from mutation sequences up to `closure_depth`, all with factor `1 + x^F`.
pub fn standard_mmlp(p: &FanoPolygon, mode: EdgeMode, closure_depth: usize) -> Result<MmlpResult, LaurentError> {
    let boundary: BTreeMap<LatticePoint, Rational> = p
        .edges()
        .iter()
        .flat_map(|e| {
            let d = decompose_edge(e);
            let coeffs = edge_coefficients(e.width, e.height, mode);
            debug_assert_eq!(d.edge.width + 1, coeffs.len() as i64);
            (0..=e.width).map(move |j| (e.point(j), coeffs[j as usize].clone())).collect::<Vec<_>>()
        })
        .collect();

    // R-cone interior points get the largest ids so that they stay free.
    let r_points: Vec<LatticePoint> = {
        let mut v = r_cone_interior_points(p);
        v.sort();
        v
    };
    let mut unknowns: Vec<LatticePoint> = p
        .interior_lattice_points()
        .into_iter()
        .filter(|q| !q.is_zero() && !r_points.contains(q))
        .collect();
    unknowns.extend(r_points.iter().copied().filter(|q| !q.is_zero()));

    let mut f0: LaurentPoly<AffineExpression> = LaurentPoly::new();
    for (pt, c) in &boundary {
        f0.add_term(*pt, AffineExpression::constant(c.clone()));
    }
    for (id, pt) in unknowns.iter().enumerate() {
        f0.add_term(*pt, AffineExpression::param(id));
    }

    let factor = Factor::standard();
    let mut constraints: Vec<AffineExpression> = Vec::new();
    let mut frontier: Vec<(LaurentPoly<AffineExpression>, FanoPolygon, Option<MutationData>)> =
        vec![(f0.clone(), p.clone(), None)];
    let mut rank = 0usize;
    let mut stabilized_at = None;
    let mut depth_explored = 0;
    let mut solution = SolutionSpace::Consistent { pivots: BTreeMap::new() };
    for depth in 1..=closure_depth {
        let mut next = Vec::new();
        for (g, q, came_from) in &frontier {
            for data in available_mutations(q) {
                if came_from.is_some_and(|prev| inverse_data(&prev) == data) {
                    continue;
                }
                let Ok(q2) = mutate_polygon(q, &data) else {
                    continue;
                };
                let (g2, rems) = mutate_with_remainders(g, &data, &factor);
                constraints.extend(rems.into_iter().map(|(_, c)| c));
                next.push((g2, q2, Some(data)));
            }
        }
        depth_explored = depth;
        solution = solve_linear_system(&constraints);
        let Some(pivots) = solution.pivots() else {
            return Err(LaurentError::Inconsistent);
        };
        let new_rank = pivots.len();
        constraints = pivots
            .iter()
            .map(|(id, e)| AffineExpression::param(*id) - e.clone())
            .collect();
        for (g, _, _) in next.iter_mut() {
            *g = g.map_coefficients(|c| c.substitute(pivots));
        }
        next.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
        if depth > 1 && new_rank == rank {
            stabilized_at = Some(depth);
            rank = new_rank;
            break;
        }
        rank = new_rank;
        frontier = next;
    }

    let pivots = solution.pivots().cloned().unwrap_or_default();
    let free: Vec<usize> = (0..unknowns.len()).filter(|id| !pivots.contains_key(id)).collect();
    let remap: BTreeMap<usize, usize> = free.iter().enumerate().map(|(new, old)| (*old, new)).collect();
    let poly = f0.map_coefficients(|c| c.substitute(&pivots).reindex(&remap));
    let parameter_points: Vec<LatticePoint> = free.iter().map(|id| unknowns[*id]).collect();
    let params = parameter_points.iter().map(|q| format!("a({},{})", q.x, q.y)).collect();
    Ok(MmlpResult {
        polynomial: SymbolicLaurentPolynomial { params, poly },
        parameter_points,
        stabilized_at,
        depth_explored,
        constraint_rank: rank,
    })
}

pub const DEFAULT_CLOSURE_DEPTH: usize = 3;

/// Per-edge linear factors for the T-cones, aligned with `P.edges()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorAssignment {
    pub edges: Vec<Vec<Factor>>,
}

impl FactorAssignment {
    /// Every T-cone gets `1 + x`.
    pub fn standard(p: &FanoPolygon) -> Self {
        FactorAssignment {
            edges: p
                .edges()
                .iter()
                .map(|e| vec![Factor::standard(); (e.width / e.height) as usize])
                .collect(),
        }
    }
}

/// `k` minus, per edge, the number of T-cones sharing a factor with an
/// earlier one. Factors are compared through their roots.
pub fn k_eff(p: &FanoPolygon, assignment: &FactorAssignment) -> Result<i64, LaurentError> {
    let edges = p.edges();
    if assignment.edges.len() != edges.len() {
        return Err(LaurentError::AssignmentMismatch { edge: edges.len(), given: assignment.edges.len(), expected: 0 });
    }
    let mut total = 0;
    for (i, (e, fs)) in edges.iter().zip(&assignment.edges).enumerate() {
        let k = (e.width / e.height) as usize;
        if fs.len() != k {
            return Err(LaurentError::AssignmentMismatch { edge: i, given: fs.len(), expected: k });
        }
        let mut roots: Vec<Rational> = Vec::new();
        for f in fs {
            if f.gamma.is_zero() || f.eta.is_zero() {
                return Err(LaurentError::ZeroFactor);
            }
            let r = f.root();
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        total += roots.len() as i64;
    }
    Ok(total)
}

/// Renders a coefficient the way the grid in the tests reads it.
pub fn describe(c: &AffineExpression, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (id, q) in c.terms() {
        let coeff = if q.is_one() { String::new() } else { format!("{}*", format_rational(q)) };
        parts.push(format!("{}{}", coeff, names[*id]));
    }
    if !c.constant.is_zero() || parts.is_empty() {
        parts.push(format_rational(&c.constant));
    }
    parts.join("+")
}
