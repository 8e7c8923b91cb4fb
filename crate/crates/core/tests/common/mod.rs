#![allow(dead_code)]

use fanolab_core::lattice::{int, LatticePoint, Rational};
use fanolab_core::periods::DifferentialOperator;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use fanolab_core::laurent::{LaurentPoly, LaurentPolynomial};
use fanolab_core::polygon::{validate, FanoPolygon};

pub fn pts(vs: &[(i64, i64)]) -> Vec<LatticePoint> {
    vs.iter().map(|&v| v.into()).collect()
}

pub fn poly(vs: &[(i64, i64)]) -> FanoPolygon {
    validate(&pts(vs)).unwrap_or_else(|e| panic!("{vs:?}: {e}"))
}

pub fn lp(terms: &[((i64, i64), i64)]) -> LaurentPolynomial {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e.into(), int(c))))
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub const PROJECTIVE_PLANE: &[(i64, i64)] = &[(0, 1), (1, 0), (-1, -1)];
pub const PENTAGON: &[(i64, i64)] = &[(-2, 1), (-1, 2), (3, 2), (3, -1), (-2, -1)];
pub const PENTAGON_MUTATED: &[(i64, i64)] = &[(-1, 1), (1, 2), (3, 2), (3, -1), (-3, -1)];
pub const HEXAGON_TWO_THIRDS: &[(i64, i64)] = &[(-1, 2), (1, 2), (2, 1), (2, -1), (-2, -1), (-2, 1)];
pub const QUADRILATERAL_DEGREE_FIVE: &[(i64, i64)] = &[(0, 1), (1, 0), (-1, -1), (1, 1)];
pub const WIDE_TRIANGLE: &[(i64, i64)] = &[(-3, 1), (3, 1), (0, -1)];
pub const KITE: &[(i64, i64)] = &[(-1, -1), (-1, 2), (1, 1), (2, -1)];
pub const ONE_FIFTH_TRIANGLE: &[(i64, i64)] = &[(-1, 0), (2, 1), (3, -1)];
pub const DEGENERATE_TRIANGLE: &[(i64, i64)] = &[(-1, 2), (1, 2), (0, -1)];

/// Fano polygons exercised by the corpus-wide checks.
pub fn corpus() -> Vec<(&'static str, Vec<(i64, i64)>)> {
    let mut c: Vec<(&'static str, &[(i64, i64)])> = vec![
        ("projective plane", PROJECTIVE_PLANE),
        ("pentagon with one 1/3 cone", PENTAGON),
        ("mutated pentagon", PENTAGON_MUTATED),
        ("hexagon with two 1/3 cones", HEXAGON_TWO_THIRDS),
        ("degree five quadrilateral", QUADRILATERAL_DEGREE_FIVE),
        ("wide triangle", WIDE_TRIANGLE),
        ("kite", KITE),
        ("1/5 triangle", ONE_FIFTH_TRIANGLE),
        ("triangle with a long edge", DEGENERATE_TRIANGLE),
    ];
    c.extend::<Vec<(&'static str, &[(i64, i64)])>>(vec![
        ("P1xP1", &[(1, 0), (0, 1), (-1, 0), (0, -1)]),
        ("dP6 hexagon", &[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]),
        ("P(1,1,2)", &[(1, 0), (0, 1), (-1, -2)]),
        ("P(1,2,3)", &[(1, 0), (0, 1), (-2, -3)]),
        ("P2/Z3", &[(2, -1), (-1, 2), (-1, -1)]),
        ("F1", &[(1, 0), (0, 1), (-1, 0), (-1, -1)]),
        ("reflexive triangle", &[(1, 1), (-1, 1), (0, -1)]),
        ("two 1/3 quadrilateral", &[(1, 2), (-1, 1), (-1, -2), (1, -1)]),
        ("one 1/3 quadrilateral", &[(2, 1), (-1, 1), (-1, -1), (1, -1)]),
        ("one 1/3 triangle", &[(1, 3), (-1, 0), (1, -1)]),
        ("skew quadrilateral", &[(-1, 1), (1, 2), (1, -2), (-1, -1)]),
        ("reflexive triangle 8", &[(3, 1), (-1, 1), (-1, -1)]),
        ("skew kite", &[(1, 1), (-1, 2), (-1, -1), (2, -1)]),
        ("1/3 and 1/5(1,2)", &[(-2, 3), (-1, 3), (-1, -1), (1, -1)]),
        ("1/6(1,1) triangle", &[(-4, 3), (-2, 3), (1, -1)]),
        ("1/6(1,1) and 1/7(1,3)", &[(-4, 3), (-2, 3), (-1, -1), (1, -1)]),
        ("1/10(1,1) triangle", &[(-6, 5), (-4, 5), (1, -1)]),
        ("1/15(1,2) triangle", &[(-6, 5), (-3, 5), (1, -1)]),
        ("1/5(1,2) and 1/7(1,3)", &[(-2, 5), (-1, 5), (-1, -1), (1, -1)]),
        ("1/7(1,1) and 1/11(1,7)", &[(-4, 7), (-3, 7), (-1, -1), (1, -1)]),
        ("1/8(1,1) and 1/9(1,4)", &[(-5, 4), (-3, 4), (-1, -1), (1, -1)]),
    ]);
    c.into_iter().map(|(n, v)| (n, v.to_vec())).collect()
}

pub fn corpus_polygons() -> Vec<(&'static str, FanoPolygon)> {
    corpus().into_iter().map(|(n, v)| (n, poly(&v))).collect()
}

/// Polynomial product over the integers, ascending coefficients.
pub fn pmul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a∇ + b` as an ascending polynomial in `∇`.
pub fn lin(a: i64, b: i64) -> Vec<i64> {
    vec![b, a]
}

/// Operator `Σ scale · t^j · Π factors(∇)`, assembled term by term.
pub fn operator(terms: &[(usize, i64, Vec<Vec<i64>>)]) -> DifferentialOperator {
    let mut coeffs: Vec<Vec<Rational>> = Vec::new();
    for (j, scale, factors) in terms {
        let prod = factors.iter().fold(vec![*scale], |acc, f| pmul(&acc, f));
        for (i, c) in prod.iter().enumerate() {
            if coeffs.len() <= i {
                coeffs.resize(i + 1, Vec::new());
            }
            if coeffs[i].len() <= *j {
                coeffs[i].resize(j + 1, int(0));
            }
            coeffs[i][*j] += int(*c);
        }
    }
    DifferentialOperator::new(coeffs).expect("nonzero leading term")
}

/// `∇² - 27t³(∇+1)(∇+2)`.
pub fn projective_plane_operator() -> DifferentialOperator {
    operator(&[(0, 1, vec![lin(1, 0), lin(1, 0)]), (3, -27, vec![lin(1, 1), lin(1, 2)])])
}

/// The degree-five operator annihilating the period of `x + y + 1/(xy) + xy`.
pub fn quadrilateral_operator() -> DifferentialOperator {
    operator(&[
        (0, 8, vec![lin(1, 0), lin(1, 0)]),
        (1, 1, vec![lin(1, 0), lin(17, -1)]),
        (2, -1, vec![lin(5, 8), lin(11, 8)]),
        (3, -12, vec![vec![47, 78, 30]]),
        (4, -4, vec![lin(1, 1), lin(103, 147)]),
        (5, -99, vec![lin(1, 1), lin(1, 2)]),
    ])
}

/// Determinant by fraction-free elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&s| !m[s][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
