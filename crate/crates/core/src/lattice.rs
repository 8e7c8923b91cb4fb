//! Lattice primitives over Z^2, exact rationals, affine-linear expressions in
//! named parameters, and exact linear solving.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("zero vector has no primitive part")]
    ZeroVector,
    #[error("vector {0} is not primitive")]
    NotPrimitive(LatticePoint),
    #[error("vectors {0} and {1} are linearly dependent")]
    Dependent(LatticePoint, LatticePoint),
    #[error("matrix [[{0}, {1}], [{2}, {3}]] is not unimodular")]
    NotUnimodular(i64, i64, i64, i64),
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p` for integers and `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, LatticeError> {
    let bad = || LatticeError::BadRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn rational_to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.abs().gcd(&b.abs())
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

/// A point of N = Z^2. Elements of the dual lattice M use the same type; the
/// pairing is the standard dot product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

pub type LatticeVector = LatticePoint;

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn dot(self, other: LatticePoint) -> i64 {
        self.x * other.x + self.y * other.y
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_primitive(self) -> bool {
        gcd(self.x, self.y) == 1
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint { x, y }
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl Mul<LatticePoint> for i64 {
    type Output = LatticePoint;
    fn mul(self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self * p.x, self * p.y)
    }
}

/// det of the 2x2 matrix with columns `u`, `v`.
pub fn det(u: LatticePoint, v: LatticePoint) -> i64 {
    u.x * v.y - u.y * v.x
}

/// Linear automorphism of N given by `[[a, b], [c, d]]` acting on columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl UnimodularMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, LatticeError> {
        if (a * d - b * c).abs() != 1 {
            return Err(LatticeError::NotUnimodular(a, b, c, d));
        }
        Ok(UnimodularMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        UnimodularMap { a: 1, b: 0, c: 0, d: 1 }
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let e = self.determinant();
        UnimodularMap { a: e * self.d, b: -e * self.b, c: -e * self.c, d: e * self.a }
    }

    /// The contragredient action on the dual lattice M, so that
    /// `<dual(u) | apply(p)> = <u | p>`.
    pub fn dual(&self) -> UnimodularMap {
        let inv = self.inverse();
        UnimodularMap { a: inv.a, b: inv.c, c: inv.b, d: inv.d }
    }
}

/// Returns `(v / g, g)` with `g = gcd(|x|, |y|)`.
pub fn primitive_part(v: LatticeVector) -> Result<(LatticeVector, i64), LatticeError> {
    if v.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let g = gcd(v.x, v.y);
    Ok((LatticePoint::new(v.x / g, v.y / g), g))
}

/// Type `1/r(1,a)` of the cone spanned by primitive `u`, `v`.
///
/// Searches the half-open fundamental parallelogram of `(u, v)` for the point
/// `p = (u + a v)/r`; such a `p` together with `v` is a lattice basis. Among
/// `(r, a)` and `(r, a^-1 mod r)` the lexicographically smaller pair is
/// returned, so the answer does not depend on the order of the rays. Smooth
/// cones give `(1, 0)`.
pub fn cone_type(u: LatticePoint, v: LatticePoint) -> Result<(i64, i64), LatticeError> {
    for w in [u, v] {
        if w.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        if !w.is_primitive() {
            return Err(LatticeError::NotPrimitive(w));
        }
    }
    let r = det(u, v).abs();
    if r == 0 {
        return Err(LatticeError::Dependent(u, v));
    }
    if r == 1 {
        return Ok((1, 0));
    }
    let a = (1..r)
        .find(|&a| {
            let p = u + a * v;
            p.x % r == 0 && p.y % r == 0
        })
        .expect("primitive rays always admit the point p");
    let inv = mod_inverse(a, r).expect("a is a unit modulo r");
    Ok((r, a.min(inv)))
}

/// `constant + Σ coeff_i · param_i`, with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AffineExpression {
    pub constant: Rational,
    terms: BTreeMap<usize, Rational>,
}

impl AffineExpression {
    pub fn zero() -> Self {
        AffineExpression { constant: Rational::zero(), terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        AffineExpression { constant: c, terms: BTreeMap::new() }
    }

    pub fn param(id: usize) -> Self {
        Self::term(id, Rational::one())
    }

    pub fn term(id: usize, coeff: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(id, coeff);
        e
    }

    pub fn terms(&self) -> &BTreeMap<usize, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, id: usize) -> Rational {
        self.terms.get(&id).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, id: usize, coeff: Rational) {
        let entry = self.terms.entry(id).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&id);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lowest_param(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        AffineExpression {
            constant: &self.constant * s,
            terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }

    pub fn params(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    /// Evaluates with `values[id]` for each parameter.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        let mut acc = self.constant.clone();
        for (id, c) in &self.terms {
            acc += c * &values[*id];
        }
        acc
    }

    /// Replaces every parameter with an expression (missing ids stay put).
    pub fn substitute(&self, subst: &BTreeMap<usize, AffineExpression>) -> Self {
        let mut out = AffineExpression::constant(self.constant.clone());
        for (id, c) in &self.terms {
            match subst.get(id) {
                Some(e) => out = out + e.scale(c),
                None => out.add_term(*id, c.clone()),
            }
        }
        out
    }

    /// Renames parameters through `map`; ids not present are dropped only if
    /// their coefficient is zero, otherwise this panics.
    pub fn reindex(&self, map: &BTreeMap<usize, usize>) -> Self {
        let mut out = AffineExpression::constant(self.constant.clone());
        for (id, c) in &self.terms {
            let new_id = *map.get(id).expect("reindex map covers all parameters");
            out.add_term(new_id, c.clone());
        }
        out
    }
}

impl From<Rational> for AffineExpression {
    fn from(c: Rational) -> Self {
        AffineExpression::constant(c)
    }
}

impl Add for AffineExpression {
    type Output = AffineExpression;
    fn add(mut self, o: AffineExpression) -> AffineExpression {
        self.constant += o.constant;
        for (id, c) in o.terms {
            self.add_term(id, c);
        }
        self
    }
}

impl Sub for AffineExpression {
    type Output = AffineExpression;
    fn sub(self, o: AffineExpression) -> AffineExpression {
        self + (-o)
    }
}

impl Neg for AffineExpression {
    type Output = AffineExpression;
    fn neg(self) -> AffineExpression {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for AffineExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (id, c) in &self.terms {
            parts.push(format!("{}*p{}", format_rational(c), id));
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(format_rational(&self.constant));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Result of [`solve_linear_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSpace {
    /// Each pivot parameter is expressed through free parameters of strictly
    /// larger id (reduced row echelon form).
    Consistent { pivots: BTreeMap<usize, AffineExpression> },
    Inconsistent,
}

impl SolutionSpace {
    pub fn is_consistent(&self) -> bool {
        matches!(self, SolutionSpace::Consistent { .. })
    }

    pub fn pivots(&self) -> Option<&BTreeMap<usize, AffineExpression>> {
        match self {
            SolutionSpace::Consistent { pivots } => Some(pivots),
            SolutionSpace::Inconsistent => None,
        }
    }

    pub fn rank(&self) -> Option<usize> {
        self.pivots().map(|p| p.len())
    }

    pub fn substitute(&self, e: &AffineExpression) -> Option<AffineExpression> {
        self.pivots().map(|p| e.substitute(p))
    }
}

/// Solves `e = 0` for every input expression by exact Gauss-Jordan
/// elimination, always pivoting on the lowest parameter id present.
pub fn solve_linear_system(equations: &[AffineExpression]) -> SolutionSpace {
    let mut pivots: BTreeMap<usize, AffineExpression> = BTreeMap::new();
    for eq in equations {
        let reduced = eq.substitute(&pivots);
        let Some(p) = reduced.lowest_param() else {
            if reduced.constant.is_zero() {
                continue;
            }
            return SolutionSpace::Inconsistent;
        };
        let c = reduced.coefficient(p);
        let mut rest = reduced.clone();
        rest.add_term(p, -c.clone());
        let value = rest.scale(&(-c.recip()));
        let single: BTreeMap<usize, AffineExpression> = [(p, value.clone())].into_iter().collect();
        for expr in pivots.values_mut() {
            if !expr.coefficient(p).is_zero() {
                *expr = expr.substitute(&single);
            }
        }
        pivots.insert(p, value);
    }
    SolutionSpace::Consistent { pivots }
}

/// Basis of the right nullspace of a dense rational matrix, one vector per
/// free column (in increasing column order), each with a 1 in its own free
/// column.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(sel) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Least common multiple of denominators, used to clear fractions.
pub fn denominators_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales a rational vector to coprime integers (sign untouched).
pub fn to_coprime_integers(v: &[Rational]) -> Vec<BigInt> {
    let l = denominators_lcm(v);
    let ints: Vec<BigInt> = v.iter().map(|q| (q * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn is_integral(q: &Rational) -> bool {
    q.is_integer()
}

pub fn abs_rational(q: &Rational) -> Rational {
    q.abs()
}
