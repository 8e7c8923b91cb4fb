//! Period sequences, Picard-Fuchs operators in `∇ = t d/dt`, operator
//! guessing by exact linear algebra, and degree predictions for
//! `1/3(1,1)` baskets.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cones::singularity_content;
use crate::genus::mutable_genus;
use crate::lattice::{int, nullspace, to_coprime_integers, LatticePoint, Rational};
use crate::laurent::{k_eff, FactorAssignment, LaurentError, LaurentPolynomial};
use crate::monodromy::{assemble_monodromy, MonodromyError};
use crate::polygon::FanoPolygon;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeriodsError {
    #[error("OUT_OF_SCOPE_BASKET: basket {basket} is not made of 1/3(1,1) cones (formula would give degree {extrapolated_degree})")]
    OutOfScopeBasket { basket: String, extrapolated_degree: i64 },
    #[error("GUESS_NOT_FOUND: no operator of order <= {max_order} and degree <= {max_degree} annihilates the sequence")]
    NotFound { max_order: usize, max_degree: usize },
    #[error("SEQUENCE_TOO_SHORT: need at least {needed} terms, have {have}")]
    SequenceTooShort { needed: usize, have: usize },
    #[error("operator must have a nonzero leading coefficient")]
    ZeroLeading,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
}

/// Constant terms `c_k` of `f^k` for `k = 0..=n`.
pub fn period_sequence(f: &LaurentPolynomial, n: usize) -> Vec<Rational> {
    let support = f.support();
    if support.is_empty() {
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = Rational::one();
        return out;
    }
    let (min_x, max_x) = (support.iter().map(|e| e.x).min().unwrap(), support.iter().map(|e| e.x).max().unwrap());
    let (min_y, max_y) = (support.iter().map(|e| e.y).min().unwrap(), support.iter().map(|e| e.y).max().unwrap());
    let mut power: BTreeMap<LatticePoint, Rational> = BTreeMap::from([(LatticePoint::ORIGIN, Rational::one())]);
    let mut out = vec![Rational::one()];
    for k in 1..=n as i64 {
        // Only exponents that can still return to the origin in the
        // remaining steps matter.
        let left = n as i64 - k;
        let keep = |e: &LatticePoint| {
            e.x >= -left * max_x && e.x <= -left * min_x && e.y >= -left * max_y && e.y <= -left * min_y
        };
        let mut next: BTreeMap<LatticePoint, Rational> = BTreeMap::new();
        for (e, c) in &power {
            for (d, fc) in f.terms() {
                let s = *e + *d;
                if keep(&s) {
                    *next.entry(s).or_insert_with(Rational::zero) += c * fc;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        out.push(next.get(&LatticePoint::ORIGIN).cloned().unwrap_or_else(Rational::zero));
        power = next;
    }
    out
}

/// `Σ_i p_i(t) ∇^i`; `coeffs[i]` holds `p_i` with ascending powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialOperator {
    pub coeffs: Vec<Vec<Rational>>,
}

impl DifferentialOperator {
    pub fn new(coeffs: Vec<Vec<Rational>>) -> Result<Self, PeriodsError> {
        let op = DifferentialOperator { coeffs };
        if op.coeffs.last().is_none_or(|p| p.iter().all(|c| c.is_zero())) {
            return Err(PeriodsError::ZeroLeading);
        }
        Ok(op)
    }

    pub fn identity() -> Self {
        DifferentialOperator { coeffs: vec![vec![Rational::one()]] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest power of `t` with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().filter_map(|p| p.iter().rposition(|c| !c.is_zero())).max().unwrap_or(0)
    }

    /// Scales to coprime integers with the lowest nonzero coefficient of the
    /// leading `p_order` positive.
    pub fn normalized(&self) -> Self {
        let width = self.degree() + 1;
        let flat: Vec<Rational> = self
            .coeffs
            .iter()
            .flat_map(|p| (0..width).map(move |j| p.get(j).cloned().unwrap_or_else(Rational::zero)))
            .collect();
        let ints = to_coprime_integers(&flat);
        let lead = &ints[self.order() * width..];
        let sign = match lead.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => -1,
            _ => 1,
        };
        let coeffs = ints
            .chunks(width)
            .map(|row| trim(row.iter().map(|c| Rational::from_integer(c.clone()) * int(sign)).collect()))
            .collect();
        DifferentialOperator { coeffs }
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

impl fmt::Display for DifferentialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, p) in self.coeffs.iter().enumerate() {
            for (j, c) in p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = match j {
                    0 => String::new(),
                    1 => "t".into(),
                    _ => format!("t^{j}"),
                };
                let d = match i {
                    0 => String::new(),
                    1 => "D".into(),
                    _ => format!("D^{i}"),
                };
                parts.push(format!("({}){t}{d}", crate::lattice::format_rational(c)));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Coefficients of `L · Σ c_n t^n` up to `t^N`. Each depends only on
/// `c_0..c_n`, so every returned term is exact.
pub fn apply_operator(op: &DifferentialOperator, seq: &[Rational]) -> Vec<Rational> {
    (0..seq.len())
        .map(|n| {
            let mut acc = Rational::zero();
            for (i, p) in op.coeffs.iter().enumerate() {
                for (j, c) in p.iter().enumerate().take(n + 1) {
                    if c.is_zero() {
                        continue;
                    }
                    let m = (n - j) as i64;
                    acc += c * int(m.pow(i as u32)) * &seq[n - j];
                }
            }
            acc
        })
        .collect()
}

/// Minimal operator (by order, then degree) annihilating `seq` through its
/// last term. A candidate shape is tried only with at least five more
/// equations than unknowns.
pub fn guess_operator(seq: &[Rational], max_order: usize, max_degree: usize) -> Result<DifferentialOperator, PeriodsError> {
    let mut tried = false;
    for order in 0..=max_order {
        for degree in 0..=max_degree {
            let unknowns = (order + 1) * (degree + 1);
            if seq.len() < unknowns + 5 {
                continue;
            }
            tried = true;
            let rows: Vec<Vec<Rational>> = (0..seq.len())
                .map(|n| {
                    let mut row = Vec::with_capacity(unknowns);
                    for i in 0..=order {
                        for j in 0..=degree {
                            row.push(if j > n {
                                Rational::zero()
                            } else {
                                int(((n - j) as i64).pow(i as u32)) * &seq[n - j]
                            });
                        }
                    }
                    row
                })
                .collect();
            let Some(v) = nullspace(&rows, unknowns).into_iter().next() else {
                continue;
            };
            let coeffs: Vec<Vec<Rational>> = v.chunks(degree + 1).map(|c| c.to_vec()).collect();
            if coeffs[order].iter().all(|c| c.is_zero()) {
                continue;
            }
            return Ok(DifferentialOperator { coeffs }.normalized());
        }
    }
    if !tried {
        return Err(PeriodsError::SequenceTooShort { needed: 6, have: seq.len() });
    }
    Err(PeriodsError::NotFound { max_order, max_degree })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub g: i64,
    pub n: i64,
    pub k_eff: i64,
    pub rf: i64,
    pub degree: i64,
    pub delta: i64,
    pub trivial_point_lower_bound: i64,
}

/// Predicted degree `g² + 3g - 1 + 2g·rf`.
pub fn predicted_degree(g: i64, rf: i64) -> i64 {
    g * g + 3 * g - 1 + 2 * g * rf
}

/// Lower bound `g² + g - 2 + (2g - δ)·rf` on the trivial singular points.
pub fn trivial_point_bound(g: i64, rf: i64, delta: i64) -> i64 {
    g * g + g - 2 + (2 * g - delta) * rf
}

/// `rf = 2g(d - 1) - δ - Σ E_i`.
pub fn rf_from_formula(g: i64, degree: i64, delta: i64, eigenspace_sum: i64) -> i64 {
    2 * g * (degree - 1) - delta - eigenspace_sum
}

/// Prediction for `P` with the given T-cone factors (`None` for the
/// standard choice).
pub fn predict(p: &FanoPolygon, assignment: Option<&FactorAssignment>) -> Result<Prediction, PeriodsError> {
    let content = singularity_content(p);
    let standard;
    let assignment = match assignment {
        Some(a) => a,
        None => {
            standard = FactorAssignment::standard(p);
            &standard
        }
    };
    let ke = k_eff(p, assignment)?;
    let g = mutable_genus(p);
    let n = content.basket.len() as i64;
    let rf = n + ke - 3;
    if content.one_third_count().is_none() {
        let basket: Vec<String> = content.basket.iter().map(|b| b.to_string()).collect();
        return Err(PeriodsError::OutOfScopeBasket {
            basket: format!("{{{}}}", basket.join(", ")),
            extrapolated_degree: predicted_degree(g, rf),
        });
    }
    let shear = assemble_monodromy(p)?.beta_shear().clone();
    let delta = if shear.is_zero() { 2 } else { 1 };
    Ok(Prediction {
        g,
        n,
        k_eff: ke,
        rf,
        degree: predicted_degree(g, rf),
        delta,
        trivial_point_lower_bound: trivial_point_bound(g, rf, delta),
    })
}
