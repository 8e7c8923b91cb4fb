//! Dense univariate polynomials over the rationals, coefficients ascending.

use num_traits::{One, Zero};

use crate::lattice::Rational;

pub type UPoly = Vec<Rational>;

pub fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &UPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let b = trim(b.clone());
    let db = degree(&b).expect("division by the zero polynomial");
    let mut r = trim(a.clone());
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &c * bj;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn eval(p: &UPoly, x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// `x^n - 1` divided by every `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic(n: usize) -> UPoly {
    let mut p = vec![Rational::zero(); n + 1];
    p[0] = -Rational::one();
    p[n] = Rational::one();
    for d in 1..n {
        if n % d == 0 {
            p = divrem(&p, &cyclotomic(d)).0;
        }
    }
    p
}

/// Product of linear factors `(x - r)`.
pub fn from_roots(roots: &[Rational]) -> UPoly {
    roots.iter().fold(vec![Rational::one()], |acc, r| mul(&acc, &vec![-r.clone(), Rational::one()]))
}
