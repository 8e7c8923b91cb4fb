//! Hirzebruch-Jung continued fractions, the s/t/d sequences, exceptional
//! multiplicities, the degree correction A(σ) and the power p(σ).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cones::SingularityContent;
use crate::lattice::{gcd, int, rat, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HjError {
    #[error("invalid cone type 1/{r}(1,{a})")]
    InvalidType { r: i64, a: i64 },
    #[error("multiplicity m_{index} = {value} is not an integer")]
    NonIntegralMultiplicity { index: usize, value: String },
    #[error("no power p in [1, {h}) makes A + 1 - 2p/h integral for 1/{r}(1,{a})")]
    NoValidPower { r: i64, a: i64, h: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HjData {
    pub r: i64,
    pub a: i64,
    /// `b_1..b_k`, all at least 2.
    pub b: Vec<i64>,
    /// `s_0..s_{k+1}`.
    pub s: Vec<i64>,
    /// `t_0..t_{k+1}`.
    pub t: Vec<i64>,
    /// `d_1..d_k`.
    pub d: Vec<Rational>,
}

pub fn hj_expand(r: i64, a: i64) -> Result<Vec<i64>, HjError> {
    if !(0 < a && a < r) || gcd(r, a) != 1 {
        return Err(HjError::InvalidType { r, a });
    }
    let (mut p, mut q) = (r, a);
    let mut b = Vec::new();
    loop {
        let c = (p + q - 1) / q;
        b.push(c);
        let next = c * q - p;
        if next == 0 {
            return Ok(b);
        }
        (p, q) = (q, next);
    }
}

impl HjData {
    /// Data of a smooth cone: no exceptional curves.
    pub fn smooth() -> Self {
        HjData { r: 1, a: 0, b: vec![], s: vec![0, 1], t: vec![1, 0], d: vec![] }
    }

    pub fn new(r: i64, a: i64) -> Result<Self, HjError> {
        if r == 1 {
            return Ok(Self::smooth());
        }
        let b = hj_expand(r, a)?;
        Ok(st_sequences(r, a, b))
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }
}

/// Fills in `s`, `t` and `d` from the expansion.
pub fn st_sequences(r: i64, a: i64, b: Vec<i64>) -> HjData {
    let k = b.len();
    let mut s = vec![0i64; k + 2];
    s[1] = 1;
    for i in 1..=k {
        s[i + 1] = b[i - 1] * s[i] - s[i - 1];
    }
    let mut t = vec![0i64; k + 2];
    t[k] = 1;
    for i in (1..=k).rev() {
        t[i - 1] = b[i - 1] * t[i] - t[i + 1];
    }
    let d = (1..=k).map(|i| rat(s[i] + t[i], r) - int(1)).collect();
    HjData { r, a, b, s, t, d }
}

/// `m_i = (t_i m_0 + s_i m_{k+1}) / r` for `i = 0..k+1`.
pub fn multiplicities(m0: i64, mk1: i64, hj: &HjData) -> Result<Vec<i64>, HjError> {
    (0..hj.s.len())
        .map(|i| {
            let num = hj.t[i] * m0 + hj.s[i] * mk1;
            if num % hj.r != 0 {
                return Err(HjError::NonIntegralMultiplicity {
                    index: i,
                    value: format!("{}/{}", num, hj.r),
                });
            }
            Ok(num / hj.r)
        })
        .collect()
}

/// β-coefficient subtracted from α by one vertex: `r/(h_l h_r)`.
pub fn vertex_contribution(h_left: i64, h_right: i64, r: i64) -> Rational {
    rat(r, h_left * h_right)
}

/// `A(σ) = k + 1 - Σ d_i² b_i + 2 Σ d_i d_{i+1}`.
pub fn a_sigma(r: i64, a: i64) -> Result<Rational, HjError> {
    let hj = HjData::new(r, a)?;
    Ok(a_sigma_of(&hj))
}

pub fn a_sigma_of(hj: &HjData) -> Rational {
    let k = hj.k();
    let mut acc = int(k as i64 + 1);
    for i in 0..k {
        acc -= &hj.d[i] * &hj.d[i] * int(hj.b[i]);
    }
    for i in 0..k.saturating_sub(1) {
        acc += int(2) * &hj.d[i] * &hj.d[i + 1];
    }
    acc
}

/// `12 - k - Σ A(σ)`.
pub fn degree_via_content(content: &SingularityContent) -> Result<Rational, HjError> {
    let mut acc = int(12 - content.k);
    for b in &content.basket {
        acc -= a_sigma(b.r, b.a)?;
    }
    Ok(acc)
}

/// Height and width `(h, w)` of an R-cone of type `1/r(1,a)`: the width is
/// `gcd(r, a+1)`.
pub fn r_cone_shape(r: i64, a: i64) -> (i64, i64) {
    let w = gcd(r, a + 1);
    (r / w, w)
}

/// Smallest `p` in `[1, h-1]` with `A(σ) + 1 - 2p/h` integral.
pub fn power_selection(r: i64, a: i64, h: i64) -> Result<i64, HjError> {
    let base = a_sigma(r, a)? + Rational::one();
    (1..h)
        .find(|&p| (&base - rat(2 * p, h)).is_integer())
        .ok_or(HjError::NoValidPower { r, a, h })
}

/// `m(σ) = A(σ) + 1 - 2p/h` with `p` from [`power_selection`] and `h` the
/// height of the cone.
pub fn m_sigma(r: i64, a: i64) -> Result<i64, HjError> {
    let (h, _) = r_cone_shape(r, a);
    let p = power_selection(r, a, h)?;
    let m = a_sigma(r, a)? + int(1) - rat(2 * p, h);
    debug_assert!(m.is_integer());
    Ok(crate::lattice::rational_to_i64(&m).expect("integral by construction"))
}

/// Sum of `1/(m_i m_{i+1})` along the chain.
pub fn chain_sum(ms: &[i64]) -> Rational {
    ms.windows(2).fold(Rational::zero(), |acc, w| acc + rat(1, w[0] * w[1]))
}
