//! Acceptance suite: one line per criterion. Criteria listed in
//! `KNOWN_UNATTAINABLE` are implemented faithfully and expected to fail;
//! only unexpected failures make the run exit nonzero.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use fanolab_core::cones::{r_cone_interior_point_count, singularity_content, BasketEntry, SingularityContent};
use fanolab_core::genus::operator_order;
use fanolab_core::hj::{a_sigma, degree_via_content, m_sigma, r_cone_shape, vertex_contribution, HjData};
use fanolab_core::lattice::{cone_type, gcd, int, rat, LatticePoint, Rational};
use fanolab_core::laurent::{
    describe, inverse_data, is_mutable, mutate_laurent, standard_mmlp, EdgeMode, Factor, DEFAULT_CLOSURE_DEPTH,
};
use fanolab_core::monodromy::{
    assemble_monodromy, block_width1, enumerate_labelings, order_2x2, recover_content, torus_fixed_points, Matrix,
};
use fanolab_core::mutation::{available_mutations, mutate_polygon, MutationData};
use fanolab_core::periods::{apply_operator, guess_operator, period_sequence, predict, PeriodsError};
use fanolab_core::polygon::FanoPolygon;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = fn() -> Result<(), String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    check: Check,
}

/// Criteria whose expected values cannot all be reproduced, with the reason.
const KNOWN_UNATTAINABLE: &[(&str, &str)] = &[
    (
        "06",
        "the wide triangle and the kite each carry two 1/3(1,1) R-cones with three interior points, so the mutable genus is 3 and the order 6, not 4",
    ),
    (
        "08",
        "1/8(1,1) and 1/8(1,5) (and 1/9(1,1), 1/9(1,4)) share height, width and power, so their blocks coincide and the matrix cannot tell them apart",
    ),
    (
        "10",
        "the enumeration admits 3 labelings for h=w=3 (both listed sequences plus [5,7,3,8,1,6,2,4,9]) and exceeds (h-1)^(w-2)(h-2) whenever w >= 3",
    ),
    (
        "12",
        "with content (6,{2 x 1/3(1,1)}) the wide triangle and the kite give g=3, so the formula yields degrees 17 and 23 instead of 9 and 13",
    ),
    (
        "14",
        "the integrality rule gives m(1/5(1,2)) = 2 and the solution 4l - l^2 of the (1,2) congruence; the closed form 0 and the class 2 - l^2 disagree with it",
    ),
    (
        "x3",
        "adding a constant a to f replaces the period by (1-at)^-1 pi_f(t/(1-at)), so the operator order cannot drop at a=0; it stays 2",
    ),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn content(k: i64, thirds: usize) -> SingularityContent {
    SingularityContent::new(k, vec![BasketEntry { r: 3, a: 1, height: 3, width: 1 }; thirds])
}

fn singularity_contents() -> Result<(), String> {
    for (verts, want) in [(PENTAGON, content(9, 1)), (HEXAGON_TWO_THIRDS, content(7, 2)), (PROJECTIVE_PLANE, content(3, 0))] {
        let got = singularity_content(&poly(verts));
        ensure(got == want, || format!("{verts:?}: got {got}, want {want}"))?;
    }
    Ok(())
}

fn top_edge_data(p: &FanoPolygon) -> MutationData {
    let e = p.edges().into_iter().find(|e| e.tail == (3, 2).into()).expect("edge from (3,2)");
    MutationData::for_edge(&e)
}

fn mutation_round_trip() -> Result<(), String> {
    let p = poly(PENTAGON);
    let data = top_edge_data(&p);
    let q = mutate_polygon(&p, &data).map_err(|e| e.to_string())?;
    let printed = poly(PENTAGON_MUTATED);
    ensure(q.normal_form() == printed.normal_form(), || format!("mutation gave {q}, want {printed}"))?;
    ensure(singularity_content(&q) == singularity_content(&p), || "content changed".into())?;
    let back = mutate_polygon(&q, &inverse_data(&data)).map_err(|e| e.to_string())?;
    ensure(back.normal_form() == p.normal_form(), || format!("inverse mutation gave {back}"))
}

/// Inward normals and heights computed directly from the vertex list.
fn normals_and_heights(p: &FanoPolygon) -> Vec<(LatticePoint, i64)> {
    let v = p.vertices();
    (0..v.len())
        .map(|i| {
            let d = v[(i + 1) % v.len()] - v[i];
            let g = gcd(d.x, d.y);
            let n = LatticePoint::new(-d.y / g, d.x / g);
            (n, -n.dot(v[i]))
        })
        .collect()
}

fn degree_cross_check() -> Result<(), String> {
    ensure(a_sigma(3, 1).unwrap() == rat(5, 3), || "A(1/3(1,1)) != 5/3".into())?;
    let corpus = corpus_polygons();
    ensure(corpus.len() >= 20, || "corpus too small".into())?;
    for (name, p) in corpus {
        let nh = normals_and_heights(&p);
        let n = nh.len();
        let mut vertices = Rational::zero();
        let mut dual_twice_area = Rational::zero();
        for i in 0..n {
            let ((a, ha), (b, hb)) = (nh[(i + n - 1) % n], nh[i]);
            let r = (a.x * b.y - a.y * b.x).abs();
            vertices += rat(r, ha * hb);
            dual_twice_area += rat(a.x, ha) * rat(b.y, hb) - rat(a.y, ha) * rat(b.x, hb);
        }
        let via_content = degree_via_content(&singularity_content(&p)).map_err(|e| e.to_string())?;
        ensure(vertices == dual_twice_area && vertices == via_content && vertices == p.anticanonical_degree(), || {
            format!("{name}: vertices {vertices}, dual {dual_twice_area}, content {via_content}")
        })?;
    }
    Ok(())
}

fn hj_identities() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for r in 2..=200i64 {
        for a in (1..r).filter(|&a| gcd(r, a) == 1) {
            let hj = HjData::new(r, a).map_err(|e| e.to_string())?;
            let k = hj.k();
            for i in 1..=k {
                let b = hj.b[i - 1];
                ensure(hj.s[i + 1] + hj.s[i - 1] == b * hj.s[i] && hj.t[i + 1] + hj.t[i - 1] == b * hj.t[i], || {
                    format!("1/{r}(1,{a}): recursion fails at i={i}")
                })?;
            }
            for _ in 0..3 {
                let (m0, mk1) = (rng.random_range(1..=10i64), rng.random_range(1..=10i64));
                let m: Vec<Rational> = (0..=k + 1).map(|i| rat(hj.t[i] * m0 + hj.s[i] * mk1, r)).collect();
                for i in 0..=k {
                    let lhs = int(hj.s[i + 1]) * &m[i] - int(hj.s[i]) * &m[i + 1];
                    ensure(lhs == int(m0), || format!("1/{r}(1,{a}), heights ({m0},{mk1}): m0 identity fails at i={i}"))?;
                }
                let sum: Rational = m.windows(2).map(|w| (&w[0] * &w[1]).recip()).sum();
                ensure(sum == rat(r, m0 * mk1), || format!("1/{r}(1,{a}), heights ({m0},{mk1}): chain sum {sum}"))?;
            }
        }
    }
    Ok(())
}

fn standard_mmlp_grids() -> Result<(), String> {
    let res = standard_mmlp(&poly(HEXAGON_TWO_THIRDS), EdgeMode::Binomial, DEFAULT_CLOSURE_DEPTH).map_err(|e| e.to_string())?;
    let f = &res.polynomial;
    ensure(f.params.len() == 2, || format!("{} free parameters", f.params.len()))?;
    let name = |pt: (i64, i64)| {
        let i = res.parameter_points.iter().position(|q| *q == pt.into());
        i.map(|i| f.params[i].clone())
    };
    let (Some(p), Some(q)) = (name((-1, 1)), name((1, 1))) else {
        return Err(format!("parameters sit at {:?}", res.parameter_points));
    };
    let want: BTreeMap<(i64, i64), String> = [
        ((-1, 2), "1".to_string()),
        ((0, 2), "2".into()),
        ((1, 2), "1".into()),
        ((-2, 1), "1".into()),
        ((-1, 1), p.clone()),
        ((0, 1), format!("{p}+{q}+-2")),
        ((1, 1), q.clone()),
        ((2, 1), "1".into()),
        ((-2, 0), "2".into()),
        ((-1, 0), format!("{p}+3")),
        ((1, 0), format!("{q}+3")),
        ((2, 0), "2".into()),
        ((-2, -1), "1".into()),
        ((-1, -1), "4".into()),
        ((0, -1), "6".into()),
        ((1, -1), "4".into()),
        ((2, -1), "1".into()),
    ]
    .into_iter()
    .collect();
    let got: BTreeMap<(i64, i64), String> =
        f.poly.terms().iter().map(|(e, c)| ((e.x, e.y), describe(c, &f.params))).collect();
    ensure(got == want, || format!("grid {got:?}"))?;

    let res = standard_mmlp(&poly(PROJECTIVE_PLANE), EdgeMode::Binomial, DEFAULT_CLOSURE_DEPTH).map_err(|e| e.to_string())?;
    ensure(res.polynomial.params.is_empty(), || "P2 has free parameters".into())?;
    let f = res.polynomial.at_zero();
    ensure(f == lp(&[((1, 0), 1), ((0, 1), 1), ((-1, -1), 1)]), || "P2 polynomial differs from x+y+1/(xy)".into())
}

fn genus_and_order() -> Result<(), String> {
    let mut errors = Vec::new();
    for (verts, want) in [(PROJECTIVE_PLANE, 2), (WIDE_TRIANGLE, 4), (KITE, 4)] {
        let p = poly(verts);
        let got = operator_order(&p);
        if got != want {
            errors.push(format!("{verts:?}: order {got}, want {want} (content {})", singularity_content(&p)));
        }
    }
    for (name, p) in corpus_polygons() {
        let res = standard_mmlp(&p, EdgeMode::Binomial, DEFAULT_CLOSURE_DEPTH).map_err(|e| format!("{name}: {e}"))?;
        let count = r_cone_interior_point_count(&p);
        if res.polynomial.params.len() as i64 != count {
            errors.push(format!("{name}: {} parameters, {count} R-cone interior points", res.polynomial.params.len()));
        }
    }
    ensure(errors.is_empty(), || errors.join("; "))
}

/// The global matrix for content `(k, {n x 1/3(1,1)})` written out from the
/// closed form, on `[α, β, a1^1, a2^1, ..., a1^n, a2^n]`.
fn one_third_formula(k: i64, n: usize) -> Matrix {
    let size = 2 + 2 * n;
    let mut cols = vec![vec![int(0); size]; size];
    cols[0][0] = int(1);
    cols[0][1] = int(k + 2 * n as i64 - 12);
    cols[1][1] = int(1);
    for j in 0..n {
        let (a1, a2) = (2 + 2 * j, 3 + 2 * j);
        cols[0][a2] = int(-1);
        cols[a1][a2] = int(1);
        cols[a2][1] = int(1);
        cols[a2][a1] = int(-1);
        cols[a2][a2] = int(-1);
    }
    Matrix::from_columns(&cols)
}

fn monodromy_assembly() -> Result<(), String> {
    for (name, p) in corpus_polygons() {
        let m = assemble_monodromy(&p).map_err(|e| format!("{name}: {e}"))?;
        ensure(m.matrix.is_integral(), || format!("{name}: not integral"))?;
        let c = singularity_content(&p);
        if let Some(n) = c.one_third_count() {
            ensure(m.matrix == one_third_formula(c.k, n), || format!("{name}: differs from the closed form\n{m}"))?;
        }
    }
    let printed = Matrix::from_columns(&[
        vec![int(1), rat(1, 3), int(0), int(-1)],
        vec![int(0), int(1), int(0), int(0)],
        vec![int(0), int(0), int(0), int(1)],
        vec![int(0), int(1), int(-1), int(-1)],
    ]);
    ensure(block_width1(3, 1).map_err(|e| e.to_string())?.matrix == printed, || "width-one block for h=3 differs".into())
}

fn content_round_trip() -> Result<(), String> {
    let mut errors = Vec::new();
    for (name, p) in corpus_polygons() {
        let m = assemble_monodromy(&p).map_err(|e| format!("{name}: {e}"))?;
        match recover_content(&m) {
            Ok(c) if c == singularity_content(&p) => {}
            Ok(c) => errors.push(format!("{name}: recovered {c}, actual {}", singularity_content(&p))),
            Err(e) => errors.push(format!("{name}: {e}")),
        }
    }
    ensure(errors.is_empty(), || errors.join("; "))
}

fn eval_int(p: &[i64], x: i64) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn eigenvalues() -> Result<(), String> {
    for (name, p) in corpus_polygons() {
        let c = singularity_content(&p);
        let Some(n) = c.one_third_count() else { continue };
        let want = (0..n).fold(pmul(&[1, -1], &[1, -1]), |acc, _| pmul(&acc, &[1, 1, 1]));
        let m = assemble_monodromy(&p).map_err(|e| format!("{name}: {e}"))?;
        let got = m.matrix.characteristic_polynomial();
        let want_q: Vec<Rational> = want.iter().map(|&c| int(c)).collect();
        ensure(got == want_q, || format!("{name}: characteristic polynomial {got:?}"))?;
        // det(xI - M) at a few integers, by independent elimination.
        let size = m.matrix.size();
        for x in [2i64, 3, -2, 5] {
            let rows = (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| {
                            let e = m.matrix.get(i, j).to_integer();
                            if i == j { BigInt::from(x) - e } else { -e }
                        })
                        .collect()
                })
                .collect();
            ensure(determinant(rows) == eval_int(&want, x), || format!("{name}: det(xI-M) at x={x}"))?;
        }
    }
    Ok(())
}

fn labeling_counts() -> Result<(), String> {
    let mut errors = Vec::new();
    let n32 = enumerate_labelings(3, 2).len();
    if n32 != 1 {
        errors.push(format!("(3,2): {n32} labelings"));
    }
    let l33 = enumerate_labelings(3, 3);
    for printed in [vec![2, 7, 3, 5, 1, 6, 8, 4, 9], vec![5, 1, 3, 8, 4, 6, 2, 7, 9]] {
        if !l33.contains(&printed) {
            errors.push(format!("(3,3) misses {printed:?}"));
        }
    }
    if l33.len() != 2 {
        errors.push(format!("(3,3): {} labelings {:?}", l33.len(), l33));
    }
    for h in 3..=6i64 {
        for w in 2..=4i64 {
            let got = enumerate_labelings(h, w).len() as i64;
            let want = (h - 1).pow(w as u32 - 2) * (h - 2);
            if got != want {
                errors.push(format!("({h},{w}): {got} vs {want}"));
            }
        }
    }
    ensure(errors.is_empty(), || errors.join("; "))
}

fn periods_and_operators() -> Result<(), String> {
    let f1 = lp(&[((1, 0), 1), ((0, 1), 1), ((-1, -1), 1)]);
    let f2 = lp(&[((1, 0), 1), ((0, 1), 1), ((-1, -1), 1), ((1, 1), 1)]);
    let s1 = period_sequence(&f1, 40);
    ensure(s1[3] == int(6) && s1[6] == int(90), || format!("c3={}, c6={}", s1[3], s1[6]))?;
    let s2 = period_sequence(&f2, 40);
    for (s, op, bounds) in [(&s1, projective_plane_operator(), (2, 3)), (&s2, quadrilateral_operator(), (2, 5))] {
        let res = apply_operator(&op, s);
        ensure(res.iter().all(|c| c.is_zero()), || format!("nonzero residual for {op}"))?;
        let guessed = guess_operator(s, bounds.0, bounds.1).map_err(|e| e.to_string())?;
        ensure(guessed == op.normalized(), || format!("guessed {guessed}, want {op}"))?;
    }
    Ok(())
}

fn predictions() -> Result<(), String> {
    let mut errors = Vec::new();
    for (verts, want) in [
        (PROJECTIVE_PLANE, (1, 0, 3)),
        (QUADRILATERAL_DEGREE_FIVE, (1, 1, 5)),
        (WIDE_TRIANGLE, (2, 0, 9)),
        (KITE, (2, 1, 13)),
    ] {
        match predict(&poly(verts), None) {
            Ok(p) if (p.g, p.rf, p.degree) == want => {}
            Ok(p) => errors.push(format!("{verts:?}: (g, rf, degree) = ({}, {}, {}), want {want:?}", p.g, p.rf, p.degree)),
            Err(e) => errors.push(format!("{verts:?}: {e}")),
        }
    }
    match predict(&poly(ONE_FIFTH_TRIANGLE), None) {
        Err(PeriodsError::OutOfScopeBasket { extrapolated_degree: 17, .. }) => {}
        other => errors.push(format!("1/5 triangle: {other:?} (formula 17, actual degree 19)")),
    }
    ensure(errors.is_empty(), || errors.join("; "))
}

fn period_invariance() -> Result<(), String> {
    let mut pairs = 0;
    for (name, p) in corpus_polygons() {
        // Constraints from the first mutation step already make every
        // neighbouring mutation valid.
        let res = standard_mmlp(&p, EdgeMode::Binomial, 1).map_err(|e| format!("{name}: {e}"))?;
        let ones = vec![int(1); res.polynomial.params.len()];
        let f = res.polynomial.substitute(&ones).map_err(|e| e.to_string())?;
        let base = period_sequence(&f, 12);
        for data in available_mutations(&p) {
            if !is_mutable(&f, &data, &Factor::standard()) {
                continue;
            }
            let g = mutate_laurent(&f, &data, &Factor::standard()).map_err(|e| e.to_string())?;
            ensure(period_sequence(&g, 12) == base, || format!("{name}: periods differ after mutating with {data:?}"))?;
            pairs += 1;
        }
    }
    ensure(pairs >= 5, || format!("only {pairs} mutable pairs"))
}

fn m_sigma_closed_forms() -> Result<(), String> {
    let mut errors = Vec::new();
    for r in (3..=99i64).step_by(2) {
        let got = m_sigma(r, 1).map_err(|e| e.to_string())?;
        if got != 5 - r {
            errors.push(format!("m(1/{r}(1,1)) = {got}"));
        }
        let (h, w) = r_cone_shape(r, 2);
        if w < h && r % 2 == 1 {
            let got = m_sigma(r, 2).map_err(|e| e.to_string())?;
            if got != 0 {
                errors.push(format!("m(1/{r}(1,2)) = {got}"));
            }
        }
    }
    // Every m in [0, r) making A + 1 - 2m/r integral, against the listed classes.
    for r in (5..=99i64).step_by(2) {
        for a in 1..=3i64 {
            if gcd(r, a) != 1 {
                continue;
            }
            let big_a = a_sigma(r, a).map_err(|e| e.to_string())?;
            let sols: Vec<i64> = (0..r).filter(|&m| (&big_a + int(1) - rat(2 * m, r)).is_integer()).collect();
            let class = match a {
                1 => -2,
                2 => {
                    let l = (r - 1) / 2;
                    2 - l * l
                }
                _ if r % 3 == 1 => 2 * ((r - 1) / 3 - 1),
                _ => -8 * ((r - 2) / 3 + 1),
            }
            .rem_euclid(r);
            if sols != [class] {
                errors.push(format!("1/{r}(1,{a}): solutions {sols:?}, class {class}"));
            }
        }
    }
    let shown = errors.len().min(6);
    ensure(errors.is_empty(), || format!("{} mismatches, e.g. {}", errors.len(), errors[..shown].join("; ")))
}

fn finite_order_torus_maps() -> Result<(), String> {
    for a in -10..=10i64 {
        for b in -10..=10i64 {
            for c in -10..=10i64 {
                for d in -10..=10i64 {
                    let m = [[a, b], [c, d]];
                    match (order_2x2(m, 12), torus_fixed_points(m)) {
                        (Some(2), Some(4)) => ensure(m == [[-1, 0], [0, -1]], || format!("{m:?}: order 2, 4 fixpoints"))?,
                        (Some(3), Some(3)) => ensure(a + d == -1 && a * d - b * c == 1, || format!("{m:?}: order 3, 3 fixpoints"))?,
                        _ => {}
                    }
                }
            }
        }
    }
    Ok(())
}

/// Composes `α ↦ α - β/(m_i m_{i+1})` along each vertex resolution chain.
fn vertex_chains() -> Result<(), String> {
    for (name, p) in corpus_polygons() {
        let nh = normals_and_heights(&p);
        let n = nh.len();
        for i in 0..n {
            let ((u, m0), (v, mk1)) = (nh[(i + n - 1) % n], nh[i]);
            let (r, a) = cone_type(u, v).map_err(|e| e.to_string())?;
            let candidates = if r == 1 {
                vec![HjData::smooth()]
            } else {
                let inv = (1..r).find(|x| (a * x) % r == 1).unwrap();
                vec![HjData::new(r, a).unwrap(), HjData::new(r, inv).unwrap()]
            };
            let chain = candidates.iter().find_map(|hj| {
                let ms: Vec<i64> = (0..hj.s.len())
                    .map(|j| hj.t[j] * m0 + hj.s[j] * mk1)
                    .map(|x| if x % hj.r == 0 { Some(x / hj.r) } else { None })
                    .collect::<Option<_>>()?;
                Some(ms)
            });
            let Some(ms) = chain else {
                return Err(format!("{name}: no integral chain at vertex {i}"));
            };
            let mut shear = Rational::zero();
            for w in ms.windows(2) {
                shear -= rat(1, w[0] * w[1]);
            }
            ensure(-shear.clone() == vertex_contribution(m0, mk1, r), || format!("{name}: vertex {i} gives {shear}"))?;
        }
    }
    Ok(())
}

fn degenerate_genus_drop() -> Result<(), String> {
    let order_at = |a: i64| -> Result<usize, String> {
        let mut terms = vec![((-1, 2), 1), ((0, 2), 2), ((1, 2), 1), ((0, -1), 1)];
        if a != 0 {
            terms.push(((0, 0), a));
        }
        let s = period_sequence(&lp(&terms), 40);
        guess_operator(&s, 3, 6).map(|op| op.order()).map_err(|e| format!("a={a}: {e}"))
    };
    let (at_zero, at_one) = (order_at(0)?, order_at(1)?);
    ensure(at_zero < 2 && at_one == 2, || format!("order {at_zero} at a=0 and {at_one} at a=1"))
}

fn criteria() -> Vec<Criterion> {
    let s = |secs| Some(Duration::from_secs(secs));
    vec![
        Criterion { id: "01", title: "singularity content of the worked polygons", limit: s(1), check: singularity_contents },
        Criterion { id: "02", title: "pentagon mutation and its inverse", limit: s(1), check: mutation_round_trip },
        Criterion { id: "03", title: "degree: vertices = dual volume = 12 - k - sum A", limit: None, check: degree_cross_check },
        Criterion { id: "04", title: "continued-fraction identities for r <= 200", limit: None, check: hj_identities },
        Criterion { id: "05", title: "standard MMLP coefficient grids", limit: s(5), check: standard_mmlp_grids },
        Criterion { id: "06", title: "operator order and free-parameter count", limit: None, check: genus_and_order },
        Criterion { id: "07", title: "assembled monodromy against the 1/3 closed form", limit: None, check: monodromy_assembly },
        Criterion { id: "08", title: "singularity content recovered from monodromy", limit: None, check: content_round_trip },
        Criterion { id: "09", title: "characteristic polynomials for 1/3 baskets", limit: None, check: eigenvalues },
        Criterion { id: "10", title: "edge labeling counts", limit: s(10), check: labeling_counts },
        Criterion { id: "11", title: "periods, operator residuals and guessing", limit: s(30), check: periods_and_operators },
        Criterion { id: "12", title: "degree and ramification predictions", limit: None, check: predictions },
        Criterion { id: "13", title: "periods invariant under mutation", limit: s(60), check: period_invariance },
        Criterion { id: "14", title: "m(sigma) closed forms and power congruences", limit: None, check: m_sigma_closed_forms },
        Criterion { id: "x1", title: "finite-order integer 2x2 maps and their fixpoints", limit: None, check: finite_order_torus_maps },
        Criterion { id: "x2", title: "resolution chains reproduce vertex contributions", limit: None, check: vertex_chains },
        Criterion { id: "x3", title: "constant-term specialisation drops the operator order", limit: None, check: degenerate_genus_drop },
    ]
}

fn main() -> ExitCode {
    let mut unexpected = 0;
    for c in criteria() {
        let start = Instant::now();
        let mut result = (c.check)();
        let took = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, c.limit) {
            if took > limit {
                result = Err(format!("took {took:.2?}, limit {limit:?}"));
            }
        }
        let known = KNOWN_UNATTAINABLE.iter().find(|(id, _)| *id == c.id).map(|(_, why)| *why);
        match (&result, known) {
            (Ok(()), _) => println!("PASS {} {} ({took:.2?})", c.id, c.title),
            (Err(e), Some(why)) => println!("FAIL {} {} ({took:.2?}) [known: {why}]: {e}", c.id, c.title),
            (Err(e), None) => {
                unexpected += 1;
                println!("FAIL {} {} ({took:.2?}): {e}", c.id, c.title);
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
