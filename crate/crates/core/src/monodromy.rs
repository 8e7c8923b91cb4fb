//! Local monodromy blocks of R-cones, the global monodromy matrix at `t = 0`,
//! recovery of singularity content from such a matrix and its eigenvalues.
//!
//! Matrices act on column vectors: column `j` holds the image of basis
//! vector `j`. Every basis starts with the relative cycle `α` and the
//! vanishing cycle `β`, followed by the cycles of the local blocks.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cones::{decompositions, BasketEntry, SingularityContent};
use crate::hj::{a_sigma, power_selection, r_cone_shape, HjError};
use crate::lattice::{gcd, int, mod_inverse, rat, Rational};
use crate::poly::{self, UPoly};
use crate::polygon::FanoPolygon;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("NON_INTEGRAL: monodromy entry {0} is not an integer")]
    NonIntegral(String),
    #[error("UNSUPPORTED_CONE: no local block for 1/{r}(1,{a})")]
    UnsupportedCone { r: i64, a: i64 },
    #[error("UNRECOGNIZED_BLOCK: {0}")]
    UnrecognizedBlock(String),
    #[error(transparent)]
    Hj(#[from] HjError),
}

/// Square matrix over the rationals, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { rows: vec![vec![Rational::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Self {
        let n = columns.len();
        let mut m = Self::zero(n);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), n, "column length");
            for (i, x) in c.iter().enumerate() {
                m.rows[i][j] = x.clone();
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.rows[i][j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.size();
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !other.rows[k][j].is_zero() {
                        out.rows[i][j] += a * &other.rows[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Self::identity(self.size());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        (0..self.size()).map(|i| self.rows[i][i].clone()).sum()
    }

    /// Principal submatrix on the given indices.
    pub fn submatrix(&self, idx: &[usize]) -> Matrix {
        Matrix { rows: idx.iter().map(|&i| idx.iter().map(|&j| self.rows[i][j].clone()).collect()).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_integer())
    }

    /// Smallest `n` in `1..=max` with `M^n = I`.
    pub fn order(&self, max: u64) -> Option<u64> {
        let id = Self::identity(self.size());
        let mut acc = self.clone();
        for n in 1..=max {
            if acc == id {
                return Some(n);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Characteristic polynomial `det(λI - M)`, coefficients ascending
    /// (Faddeev-LeVerrier).
    pub fn characteristic_polynomial(&self) -> UPoly {
        let n = self.size();
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Self::zero(n);
        let id = Self::identity(n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                next.rows[i][i] += &coeffs[n + 1 - k] * &id.rows[i][i];
            }
            m = next;
            coeffs[n - k] = -self.mul(&m).trace() / int(k as i64);
        }
        coeffs
    }
}

/// Monodromy matrix together with the labels of its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyMatrix {
    pub basis: Vec<String>,
    pub matrix: Matrix,
}

impl MonodromyMatrix {
    /// β-coefficient of the image of α.
    pub fn beta_shear(&self) -> &Rational {
        self.matrix.get(1, 0)
    }
}

impl fmt::Display for MonodromyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, label) in self.basis.iter().enumerate() {
            let image: Vec<String> = (0..self.basis.len())
                .filter(|&i| !self.matrix.get(i, j).is_zero())
                .map(|i| format!("{}·{}", crate::lattice::format_rational(self.matrix.get(i, j)), self.basis[i]))
                .collect();
            let rhs = if image.is_empty() { "0".to_string() } else { image.join(" + ") };
            writeln!(f, "{label} ↦ {rhs}")?;
        }
        Ok(())
    }
}

/// Local monodromy around one R-cone, on the basis `[α, β, cycles...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBlock {
    pub r: i64,
    pub a: i64,
    pub h: i64,
    pub w: i64,
    pub p: i64,
    pub labels: Vec<String>,
    pub matrix: Matrix,
    /// Cycle parts of the image of α for every admissible labeling (only
    /// populated for blocks of width at least two).
    pub ambiguity_set: Vec<Vec<Rational>>,
}

impl LocalBlock {
    pub fn cycle_count(&self) -> usize {
        self.labels.len()
    }

    /// β-coefficient of the image of α.
    pub fn beta_coefficient(&self) -> &Rational {
        self.matrix.get(1, 0)
    }

    /// Cycle part of the image of α.
    pub fn alpha_cycles(&self) -> Vec<Rational> {
        self.matrix.column(0)[2..].to_vec()
    }

    /// The block restricted to β and the cycles.
    pub fn cycle_matrix(&self) -> Matrix {
        let idx: Vec<usize> = (1..self.matrix.size()).collect();
        self.matrix.submatrix(&idx)
    }

    fn with_power(mut self, p: i64) -> Self {
        self.matrix = self.matrix.pow(p as u64);
        self.p = p;
        self
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += s * b;
    }
}

/// Block of `1/3(1,1)`: `α ↦ α + β/3 - a₂`, `a₁ ↦ a₂`, `a₂ ↦ β - a₁ - a₂`.
pub fn block_one_third() -> LocalBlock {
    let (o, one) = (Rational::zero(), Rational::one());
    let m = Matrix::from_columns(&[
        vec![one.clone(), rat(1, 3), o.clone(), -one.clone()],
        unit(4, 1),
        unit(4, 3),
        vec![o.clone(), one.clone(), -one.clone(), -one],
    ]);
    LocalBlock { r: 3, a: 1, h: 3, w: 1, p: 1, labels: vec!["a1".into(), "a2".into()], matrix: m, ambiguity_set: vec![] }
}

/// Block of `1/4(1,1)`: `α ↦ α + β - a₁ - a₂`, `aᵢ ↦ -aᵢ`.
pub fn block_one_quarter() -> LocalBlock {
    let one = Rational::one();
    let m = Matrix::from_columns(&[
        vec![one.clone(), one.clone(), -one.clone(), -one.clone()],
        unit(4, 1),
        vec![int(0), int(0), -one.clone(), int(0)],
        vec![int(0), int(0), int(0), -one],
    ]);
    LocalBlock { r: 4, a: 1, h: 2, w: 2, p: 1, labels: vec!["a1".into(), "a2".into()], matrix: m, ambiguity_set: vec![] }
}

/// Width-one block `ω_h^p` on `(α, β, c₁..c_{h-1})` with
/// `ω_h(α) = α + (1 - 2/h)β - Σ_{i≥2} cᵢ`, `cᵢ ↦ c_{i+1}` and
/// `c_{h-1} ↦ β - Σ cᵢ`.
pub fn block_width1(h: i64, p: i64) -> Result<LocalBlock, MonodromyError> {
    if h < 2 || p < 1 || p >= h {
        return Err(HjError::NoValidPower { r: h, a: 1, h }.into());
    }
    let n = (h + 1) as usize;
    let mut cols = Vec::with_capacity(n);
    let mut alpha = unit(n, 0);
    alpha[1] = int(1) - rat(2, h);
    for c in alpha.iter_mut().skip(3) {
        *c = int(-1);
    }
    cols.push(alpha);
    cols.push(unit(n, 1));
    for i in 2..n - 1 {
        cols.push(unit(n, i + 1));
    }
    let mut last = vec![int(-1); n];
    last[0] = int(0);
    last[1] = int(1);
    cols.push(last);
    let labels = (1..h).map(|i| format!("c{i}")).collect();
    let base = LocalBlock { r: h, a: 1, h, w: 1, p: 1, labels, matrix: Matrix::from_columns(&cols), ambiguity_set: vec![] };
    Ok(base.with_power(p))
}

/// Admissible labelings of the second polygon for a cone of height `h` and
/// width `w ≥ 2`: `labels[q-1]` is the index `i` of the cycle `c_i` at
/// position `q` (`1 ≤ q ≤ hw`). Sorted lexicographically.
///
/// Position of `c_hw` is `hw`, `c_{i+w}` sits `w` positions after `c_i`, and
/// `c_{i+1}` never sits immediately before `c_i`.
pub fn enumerate_labelings(h: i64, w: i64) -> Vec<Vec<usize>> {
    if h < 2 || w < 2 {
        return vec![];
    }
    let n = (h * w) as usize;
    let (hu, wu) = (h as usize, w as usize);
    let mut out = Vec::new();
    // Free choice: the multiple j of w added to the base position of c_ρ.
    let mut choice = vec![0usize; wu - 1];
    loop {
        // pos[i] for i in 0..n (c_0 = c_hw)
        let mut pos = vec![0usize; n];
        for rho in 0..wu {
            let start = if rho == 0 { 0 } else { ((wu - rho) % wu + choice[rho - 1] * wu) % n };
            for j in 0..hu {
                pos[(rho + j * wu) % n] = (start + j * wu) % n;
            }
        }
        let ok = (0..n).all(|i| pos[(i + 1) % n] != (pos[i] + n - 1) % n);
        if ok {
            let mut labels = vec![0usize; n];
            for (i, &q) in pos.iter().enumerate() {
                let q = if q == 0 { n } else { q };
                labels[q - 1] = if i == 0 { n } else { i };
            }
            out.push(labels);
        }
        // next choice
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < hu {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    out.sort();
    out
}

/// Image of α under the general block, cycle part only, for one labeling.
/// Cycles are `e_1..e_{(h-1)w}` with `e_j = Σ_{k<w} c_{j+k}`.
fn general_alpha(h: i64, w: i64, labeling: &[usize], ext: &dyn Fn(usize) -> Vec<Rational>, n: usize) -> Vec<Rational> {
    let (hu, wu) = (h as usize, w as usize);
    let mut v = unit(n, 0);
    v[1] = int(1) - rat(2, h);
    let minus = int(-1);
    let one = Rational::one();
    for k in 1..hu {
        axpy(&mut v, &minus, &ext(k * wu));
    }
    // c_w + Σ_i c_[i] = e_1 + Σ_i (c_[i] - c_i), telescoped into e's.
    axpy(&mut v, &one, &ext(1));
    for i in 1..wu {
        let label = labeling[wu - i - 1];
        debug_assert_eq!(label % wu, i);
        let steps = (label - i) / wu;
        for m in 0..steps {
            axpy(&mut v, &one, &ext(i + m * wu + 1));
            axpy(&mut v, &minus, &ext(i + m * wu));
        }
    }
    v
}

/// Block for a cone of height `h`, width `w ≥ 2`, on `(α, β, e_1..e_{(h-1)w})`
/// using `labeling` for the image of α, raised to the power `p`.
/// `ambiguity_set` holds the α-images of every admissible labeling.
pub fn block_general(h: i64, w: i64, labeling: &[usize], p: i64) -> Result<LocalBlock, MonodromyError> {
    if h < 2 || w < 1 || p < 1 || p >= h || labeling.len() != (h * w) as usize {
        return Err(MonodromyError::UnsupportedCone { r: h * w, a: -1 });
    }
    let (hu, wu) = (h as usize, w as usize);
    let cycles = (hu - 1) * wu;
    let total = hu * wu;
    let n = cycles + 2;
    let ext = move |j: usize| -> Vec<Rational> {
        if j <= cycles {
            return unit(n, j + 1);
        }
        let mut v = unit(n, 1);
        for k in 1..hu {
            let idx = (j + k * wu - 1) % total + 1;
            v[idx + 1] -= Rational::one();
        }
        v
    };
    let mut cols = vec![general_alpha(h, w, labeling, &ext, n), unit(n, 1)];
    for j in 1..=cycles {
        cols.push(ext(j + wu));
    }
    let base = Matrix::from_columns(&cols);
    let power = base.pow(p as u64);
    let mut ambiguity_set = BTreeSet::new();
    for lab in enumerate_labelings(h, w) {
        let mut cs = cols.clone();
        cs[0] = general_alpha(h, w, &lab, &ext, n);
        ambiguity_set.insert(Matrix::from_columns(&cs).pow(p as u64).column(0)[2..].to_vec());
    }
    Ok(LocalBlock {
        r: h * w,
        a: -1,
        h,
        w,
        p,
        labels: (1..=cycles).map(|j| format!("e{j}")).collect(),
        matrix: power,
        ambiguity_set: ambiguity_set.into_iter().collect(),
    })
}

/// Normalised representative `min(a, a⁻¹ mod r)`.
fn normalise_type(r: i64, a: i64) -> i64 {
    mod_inverse(a, r).map_or(a, |inv| a.min(inv))
}

/// Local block used for a basket entry of type `1/r(1,a)`.
pub fn block_for_type(r: i64, a: i64) -> Result<LocalBlock, MonodromyError> {
    let (h, w) = r_cone_shape(r, a);
    let block = if (r, a) == (3, 1) {
        block_one_third()
    } else if (r, a) == (4, 1) {
        block_one_quarter()
    } else {
        let p = power_selection(r, a, h)?;
        if w == 1 {
            block_width1(h, p)?
        } else {
            let labelings = enumerate_labelings(h, w);
            let first = labelings.first().ok_or(MonodromyError::UnsupportedCone { r, a })?;
            block_general(h, w, first, p)?
        }
    };
    Ok(LocalBlock { r, a, ..block })
}

/// Integer `m(σ) = A(σ) + β-coefficient of the block`.
pub fn block_correction(block: &LocalBlock) -> Result<Rational, MonodromyError> {
    Ok(a_sigma(block.r, block.a)? + block.beta_coefficient())
}

fn integral(q: &Rational, what: &str) -> Result<(), MonodromyError> {
    if q.is_integer() {
        Ok(())
    } else {
        Err(MonodromyError::NonIntegral(format!("{what} = {}", crate::lattice::format_rational(q))))
    }
}

/// Local blocks of `P` in basis order: sorted by `(h, w, r, a)` then edge.
pub fn local_blocks(p: &FanoPolygon) -> Result<Vec<LocalBlock>, MonodromyError> {
    let mut keyed = Vec::new();
    for (edge, d) in decompositions(p).iter().enumerate() {
        if let Some(rc) = d.r_cone {
            let (h, w) = r_cone_shape(rc.r, rc.a);
            keyed.push(((h, w, rc.r, rc.a, edge), block_for_type(rc.r, rc.a)?));
        }
    }
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(keyed.into_iter().map(|(_, b)| b).collect())
}

/// Global monodromy `ω` at `t = 0` on `[α, β, block cycles...]`.
pub fn assemble_monodromy(p: &FanoPolygon) -> Result<MonodromyMatrix, MonodromyError> {
    let blocks = local_blocks(p)?;
    let n = 2 + blocks.iter().map(|b| b.cycle_count()).sum::<usize>();
    let mut m = Matrix::identity(n);
    let mut basis = vec!["alpha".to_string(), "beta".to_string()];
    let mut shear = -p.anticanonical_degree();
    let mut offset = 2;
    for (j, b) in blocks.iter().enumerate() {
        shear += b.beta_coefficient();
        let c = b.cycle_count();
        for i in 0..c {
            basis.push(format!("{}^{}", b.labels[i], j + 1));
            m.set(offset + i, 0, b.matrix.get(2 + i, 0).clone());
            for k in 0..c {
                m.set(1, offset + k, b.matrix.get(1, 2 + k).clone());
                m.set(offset + i, offset + k, b.matrix.get(2 + i, 2 + k).clone());
            }
        }
        offset += c;
    }
    integral(&shear, "β-coefficient of ω(α)")?;
    m.set(1, 0, shear);
    if let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !m.get(i, j).is_integer()) {
        return Err(MonodromyError::NonIntegral(format!("entry ({}, {})", basis[i], basis[j])));
    }
    Ok(MonodromyMatrix { basis, matrix: m })
}

/// Cycle indices grouped by block: by the `^j` suffix of their labels when
/// present, otherwise by connected components of the coupling pattern
/// (including coupling through the image of α).
fn cycle_groups(m: &MonodromyMatrix) -> Vec<Vec<usize>> {
    let n = m.matrix.size();
    let suffixes: Option<Vec<&str>> = m.basis[2..].iter().map(|l| l.rsplit_once('^').map(|(_, s)| s)).collect();
    if let Some(suffixes) = suffixes {
        let mut groups: Vec<(&str, Vec<usize>)> = Vec::new();
        for (i, s) in suffixes.into_iter().enumerate() {
            match groups.iter_mut().find(|(t, _)| *t == s) {
                Some((_, g)) => g.push(i + 2),
                None => groups.push((s, vec![i + 2])),
            }
        }
        return groups.into_iter().map(|(_, g)| g).collect();
    }
    let mat = &m.matrix;
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 2..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 2..n {
                if !seen[j] && (!mat.get(i, j).is_zero() || !mat.get(j, i).is_zero()) {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort();
        comps.push(comp);
    }
    comps
}

fn unrecognized(msg: impl Into<String>) -> MonodromyError {
    MonodromyError::UnrecognizedBlock(msg.into())
}

/// Finds the cone type whose block reproduces the given restriction to
/// `β ∪ cycles` and α-image. Every shape `(h, w)` with `(h-1)w` equal to the
/// number of cycles is tried.
fn identify_block(sub: &Matrix, alpha: &[Rational]) -> Option<LocalBlock> {
    let size = alpha.len() as i64;
    for w in (1..=size).filter(|w| size % w == 0) {
        let h = size / w + 1;
        if w >= h {
            continue;
        }
        let r = h * w;
        let candidates: BTreeSet<i64> =
            (1..r).filter(|&a| gcd(a, r) == 1 && gcd(r, a + 1) == w).map(|a| normalise_type(r, a)).collect();
        for a in candidates {
            let Ok(b) = block_for_type(r, a) else { continue };
            if b.cycle_matrix() == *sub && b.alpha_cycles() == alpha {
                return Some(b);
            }
        }
    }
    None
}

/// Reads the singularity content back off an assembled matrix.
pub fn recover_content(m: &MonodromyMatrix) -> Result<SingularityContent, MonodromyError> {
    let mat = &m.matrix;
    let n = mat.size();
    if n < 2 || m.basis.len() != n {
        return Err(unrecognized("matrix needs at least α and β and one label per basis vector"));
    }
    if mat.column(1) != unit(n, 1) || *mat.get(0, 0) != Rational::one() || (1..n).any(|j| !mat.get(0, j).is_zero()) {
        return Err(unrecognized("matrix does not fix β or mixes α into other images"));
    }
    let mut correction = Rational::zero();
    let mut basket = Vec::new();
    for group in cycle_groups(m) {
        let mut idx = vec![1];
        idx.extend(&group);
        let sub = mat.submatrix(&idx);
        let alpha: Vec<Rational> = group.iter().map(|&i| mat.get(i, 0).clone()).collect();
        let b = identify_block(&sub, &alpha)
            .ok_or_else(|| unrecognized(format!("no cone type matches the block on {}", m.basis[group[0]])))?;
        correction += block_correction(&b)?;
        basket.push(BasketEntry { r: b.r, a: b.a, height: b.h, width: b.w });
    }
    let k = mat.get(1, 0) + int(12) - correction;
    let k = crate::lattice::rational_to_i64(&k).ok_or_else(|| unrecognized("non-integral T-cone count"))?;
    if k < 0 {
        return Err(unrecognized(format!("negative T-cone count {k}")));
    }
    Ok(SingularityContent::new(k, basket))
}

/// Factorisation of a characteristic polynomial into cyclotomic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueMultiset {
    /// `(n, multiplicity)`: every primitive `n`-th root of unity occurs with
    /// this multiplicity.
    pub roots_of_unity: Vec<(usize, usize)>,
    /// Monic part with no cyclotomic factor; `[1]` when there is none.
    pub residual: UPoly,
}

impl fmt::Display for EigenvalueMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots_of_unity.iter().map(|(n, m)| format!("Φ_{n}^{m}")).collect();
        write!(f, "{}", parts.join(" · "))?;
        if self.residual.len() > 1 {
            write!(f, " · (non-cyclotomic part of degree {})", self.residual.len() - 1)?;
        }
        Ok(())
    }
}

pub fn eigenvalue_multiset(m: &Matrix) -> EigenvalueMultiset {
    let mut rest = m.characteristic_polynomial();
    let mut roots = Vec::new();
    let mut n = 1usize;
    // φ(n) ≥ sqrt(n/2), so no cyclotomic factor of degree ≤ d has n > 2d².
    let limit = 2 * m.size() * m.size() + 2;
    while poly::degree(&rest).unwrap_or(0) > 0 && n <= limit {
        let phi = poly::cyclotomic(n);
        let mut mult = 0;
        loop {
            if poly::degree(&rest) < poly::degree(&phi) {
                break;
            }
            let (q, r) = poly::divrem(&rest, &phi);
            if !r.is_empty() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((n, mult));
        }
        n += 1;
    }
    EigenvalueMultiset { roots_of_unity: roots, residual: rest }
}

/// Number of fixed points on `ℝ²/ℤ²` of the map induced by an integer
/// `2×2` matrix, `|det(M - I)|`, or `None` when it is not finite.
pub fn torus_fixed_points(m: [[i64; 2]; 2]) -> Option<i64> {
    let d = (m[0][0] - 1) * (m[1][1] - 1) - m[0][1] * m[1][0];
    (d != 0).then_some(d.abs())
}

/// Order of an integer `2×2` matrix, if at most `max`.
pub fn order_2x2(m: [[i64; 2]; 2], max: u32) -> Option<u32> {
    let mut acc = m;
    for n in 1..=max {
        if acc == [[1, 0], [0, 1]] {
            return Some(n);
        }
        acc = [
            [acc[0][0] * m[0][0] + acc[0][1] * m[1][0], acc[0][0] * m[0][1] + acc[0][1] * m[1][1]],
            [acc[1][0] * m[0][0] + acc[1][1] * m[1][0], acc[1][0] * m[0][1] + acc[1][1] * m[1][1]],
        ];
    }
    None
}
