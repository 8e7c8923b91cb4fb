use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use fanolab_core::cones::{decompositions, r_cone_interior_point_count, singularity_content};
use fanolab_core::format::{
    assignment_from_json, content_to_json, graph_to_json, laurent_from_json, laurent_to_json, matrix_from_json,
    matrix_to_json, mutation_data_to_json, operator_from_json, operator_to_json, point_to_json, polygon_to_json,
    sequence_from_json, sequence_to_json, symbolic_to_json, vertices_from_json,
};
use fanolab_core::genus::genus_report;
use fanolab_core::hj::degree_via_content;
use fanolab_core::lattice::{format_rational, LatticePoint, Rational};
use fanolab_core::laurent::{describe, mutate_laurent, standard_mmlp, EdgeMode, Factor, LaurentPolynomial};
use fanolab_core::monodromy::{assemble_monodromy, eigenvalue_multiset, recover_content, MonodromyMatrix};
use fanolab_core::mutation::{mutate_polygon, mutation_graph, MutationData};
use fanolab_core::periods::{apply_operator, guess_operator, period_sequence};
use fanolab_core::{validate as validate_vertices, FanoPolygon};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::{read_document, Output};

fn q(x: &Rational) -> String {
    format_rational(x)
}

fn polygon(arg: &str) -> Result<FanoPolygon> {
    let doc = read_document(arg)?;
    Ok(validate_vertices(&vertices_from_json(&doc)?)?)
}

fn laurent_to_string(f: &LaurentPolynomial) -> String {
    let parts: Vec<String> = f.terms().iter().map(|(e, c)| format!("{}·x^{}y^{}", q(c), e.x, e.y)).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn parse_point(s: &str) -> Result<LatticePoint> {
    let (x, y) = s.split_once(',').ok_or_else(|| anyhow!("expected \"x,y\", got {s:?}"))?;
    Ok(LatticePoint::new(x.trim().parse()?, y.trim().parse()?))
}

pub fn validate(arg: &str) -> Result<Output> {
    let p = polygon(arg)?;
    let mut json = polygon_to_json(&p);
    json["valid"] = json!(true);
    Ok(Output { json, pretty: format!("valid Fano polygon {p}") })
}

pub fn edges(arg: &str) -> Result<Output> {
    let p = polygon(arg)?;
    let mut pretty = String::new();
    let list: Vec<Value> = p
        .edges()
        .iter()
        .map(|e| {
            let _ = writeln!(pretty, "{} -> {}: height {}, width {}, normal {}", e.tail, e.head, e.height, e.width, e.normal);
            json!({
                "tail": point_to_json(e.tail),
                "head": point_to_json(e.head),
                "normal": point_to_json(e.normal),
                "height": e.height,
                "width": e.width,
            })
        })
        .collect();
    Ok(Output { json: json!({ "edges": list }), pretty })
}

pub fn content(arg: &str) -> Result<Output> {
    let c = singularity_content(&polygon(arg)?);
    Ok(Output { json: content_to_json(&c), pretty: format!("singularity content {c}") })
}

pub fn degree(arg: &str) -> Result<Output> {
    let p = polygon(arg)?;
    let k2 = p.anticanonical_degree();
    let dual = p.dual_volume();
    let via = degree_via_content(&singularity_content(&p))?;
    if k2 != dual || k2 != via {
        bail!("degree routes disagree: {} vs {} vs {}", q(&k2), q(&dual), q(&via));
    }
    Ok(Output {
        json: json!({ "degree": q(&k2), "dual_volume": q(&dual), "via_content": q(&via) }),
        pretty: format!("degree {}", q(&k2)),
    })
}

fn mutation_data(u: Option<&str>, f: Option<&str>, edge: Option<usize>, p: &FanoPolygon) -> Result<MutationData> {
    match (u, f, edge) {
        (Some(u), Some(f), None) => Ok(MutationData::new(parse_point(u)?, parse_point(f)?)?),
        (None, None, Some(i)) => {
            let edges = p.edges();
            let e = edges.get(i).ok_or_else(|| anyhow!("edge index {i} out of range (polygon has {})", edges.len()))?;
            Ok(MutationData::for_edge(e))
        }
        _ => bail!("give either --u and --factor, or --edge"),
    }
}

pub fn mutate(arg: &str, u: Option<&str>, f: Option<&str>, edge: Option<usize>, laurent: bool) -> Result<Output> {
    if laurent {
        let g = laurent_from_json(&read_document(arg)?)?;
        let newton = g.newton_polygon()?;
        let data = mutation_data(u, f, edge, &newton)?;
        let out = mutate_laurent(&g, &data, &Factor::standard())?;
        return Ok(Output {
            json: json!({ "data": mutation_data_to_json(&data), "terms": laurent_to_json(&out) }),
            pretty: laurent_to_string(&out),
        });
    }
    let p = polygon(arg)?;
    let data = mutation_data(u, f, edge, &p)?;
    let out = mutate_polygon(&p, &data)?;
    let mut json = polygon_to_json(&out);
    json["data"] = mutation_data_to_json(&data);
    json["normal_form"] = polygon_to_json(&out.normal_form())["vertices"].clone();
    Ok(Output { json, pretty: format!("{out} (normal form {})", out.normal_form()) })
}

pub fn orbit(arg: &str, max_nodes: usize, max_depth: usize) -> Result<Output> {
    let g = mutation_graph(&polygon(arg)?, max_nodes, max_depth);
    let mut pretty = format!(
        "{} polygons, {} arrows, depth {}, {}\n",
        g.nodes.len(),
        g.arrows.len(),
        g.depth,
        if g.complete { "complete" } else { "truncated" }
    );
    for (i, n) in g.nodes.iter().enumerate() {
        let _ = writeln!(pretty, "{i}: {n}");
    }
    Ok(Output { json: graph_to_json(&g), pretty })
}

pub fn mmlp(arg: &str, depth: usize) -> Result<Output> {
    let res = standard_mmlp(&polygon(arg)?, EdgeMode::Binomial, depth)?;
    let mut json = symbolic_to_json(&res.polynomial);
    json["parameter_points"] = Value::Array(res.parameter_points.iter().map(|p| point_to_json(*p)).collect());
    json["stabilized_at"] = json!(res.stabilized_at);
    json["depth_explored"] = json!(res.depth_explored);
    let names = &res.polynomial.params;
    let terms: Vec<String> = res
        .polynomial
        .poly
        .terms()
        .iter()
        .map(|(e, c)| format!("({})·x^{}y^{}", describe(c, names), e.x, e.y))
        .collect();
    let pretty = format!("{} free parameters: {}\n{}", names.len(), names.join(", "), terms.join(" + "));
    Ok(Output { json, pretty })
}

pub fn genus(arg: &str) -> Result<Output> {
    let p = polygon(arg)?;
    let report = genus_report(&p);
    let mut json = serde_json::to_value(&report)?;
    json["r_cone_interior_points"] = json!(r_cone_interior_point_count(&p));
    let pretty = format!(
        "sectional genus {}, mutable genus {}, operator order {}",
        report.sectional_genus, report.mutable_genus, report.operator_order
    );
    Ok(Output { json, pretty })
}

pub fn monodromy(arg: &str) -> Result<Output> {
    let m = assemble_monodromy(&polygon(arg)?)?;
    Ok(Output { json: matrix_to_json(&m), pretty: m.to_string() })
}

pub fn recover(arg: &str) -> Result<Output> {
    let m = matrix_from_json(&read_document(arg)?)?;
    let c = recover_content(&m)?;
    Ok(Output { json: content_to_json(&c), pretty: format!("singularity content {c}") })
}

/// A polygon document is assembled first; anything else is read as a matrix.
fn matrix_or_polygon(arg: &str) -> Result<MonodromyMatrix> {
    let doc = read_document(arg)?;
    if doc.get("vertices").is_some() {
        Ok(assemble_monodromy(&validate_vertices(&vertices_from_json(&doc)?)?)?)
    } else {
        Ok(matrix_from_json(&doc)?)
    }
}

pub fn eigenvalues(arg: &str) -> Result<Output> {
    let m = matrix_or_polygon(arg)?;
    let e = eigenvalue_multiset(&m.matrix);
    let charpoly: Vec<String> = m.matrix.characteristic_polynomial().iter().map(q).collect();
    let roots: Vec<Value> = e.roots_of_unity.iter().map(|(n, k)| json!({ "n": n, "multiplicity": k })).collect();
    Ok(Output {
        json: json!({
            "characteristic_polynomial": charpoly,
            "roots_of_unity": roots,
            "residual": e.residual.iter().map(q).collect::<Vec<_>>(),
        }),
        pretty: e.to_string(),
    })
}

/// A Laurent polynomial document is used as is; a polygon gives its
/// standard MMLP with every parameter at zero.
fn laurent_or_polygon(arg: &str) -> Result<LaurentPolynomial> {
    let doc = read_document(arg)?;
    if doc.get("vertices").is_some() {
        let p = validate_vertices(&vertices_from_json(&doc)?)?;
        Ok(standard_mmlp(&p, EdgeMode::Binomial, fanolab_core::laurent::DEFAULT_CLOSURE_DEPTH)?.polynomial.at_zero())
    } else {
        Ok(laurent_from_json(&doc)?)
    }
}

pub fn period(arg: &str, terms: usize) -> Result<Output> {
    let f = laurent_or_polygon(arg)?;
    let s = period_sequence(&f, terms);
    let pretty = s.iter().map(q).collect::<Vec<_>>().join(", ");
    Ok(Output { json: sequence_to_json(&s), pretty })
}

pub fn apply_op(op: &str, seq: &str) -> Result<Output> {
    let op = operator_from_json(&read_document(op)?).context("reading the operator")?;
    let s = sequence_from_json(&read_document(seq)?).context("reading the sequence")?;
    let r = apply_operator(&op, &s);
    let annihilated = r.iter().all(Zero::is_zero);
    let mut json = sequence_to_json(&r);
    json["annihilated"] = json!(annihilated);
    let pretty = if annihilated {
        format!("operator annihilates all {} terms", r.len())
    } else {
        format!("residual {}", r.iter().map(q).collect::<Vec<_>>().join(", "))
    };
    Ok(Output { json, pretty })
}

pub fn guess_op(arg: &str, max_order: usize, max_degree: usize) -> Result<Output> {
    let s = sequence_from_json(&read_document(arg)?)?;
    let op = guess_operator(&s, max_order, max_degree)?;
    Ok(Output { json: operator_to_json(&op), pretty: op.to_string() })
}

pub fn predict(arg: &str, assignment: Option<&str>) -> Result<Output> {
    let p = polygon(arg)?;
    let a = assignment.map(|a| read_document(a).and_then(|d| Ok(assignment_from_json(&d)?))).transpose()?;
    if let Some(a) = &a {
        if a.edges.len() != decompositions(&p).len() {
            bail!("assignment lists {} edges, polygon has {}", a.edges.len(), p.edges().len());
        }
    }
    let pr = fanolab_core::periods::predict(&p, a.as_ref())?;
    let json = json!({
        "g": pr.g,
        "n": pr.n,
        "k_eff": pr.k_eff,
        "rf": pr.rf,
        "degree": pr.degree,
        "delta": pr.delta,
        "trivial_point_lower_bound": pr.trivial_point_lower_bound,
        "order": 2 * pr.g,
    });
    let pretty = format!("order {}, degree {}, rf {} (g = {}, k_eff = {})", 2 * pr.g, pr.degree, pr.rf, pr.g, pr.k_eff);
    Ok(Output { json, pretty })
}

pub fn normal_form(arg: &str) -> Result<Output> {
    let nf = polygon(arg)?.normal_form();
    Ok(Output { json: polygon_to_json(&nf), pretty: nf.to_string() })
}
