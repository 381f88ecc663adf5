use std::fmt::Write as _;
use std::path::Path;

use hhkit_core::algebra::{ideal_generated_by, idempotent_ideal, make_incidence, make_path_algebra_quotient, FinDimAlgebra, SubBimodule};
use hhkit_core::cochain::hh_dims;
use hhkit_core::combinat::{homological_ideal_report, order_complex, simplicial_cohomology, QuiverPresentation};
use hhkit_core::les::{crown_check, five_term_regular, flat_ideal_report, happel_report_at_vertex, pair_report, ExactSequenceReport};
use hhkit_core::monogenic::{self, presentation, verify_presentation_in_oracle};
use hhkit_core::{FieldSpec, Poly};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::input::{load_poset, load_quiver};

/// What a command produced: the text report, the JSON document, and the
/// first failed check if any.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub failure: Option<String>,
}

pub enum Failure {
    /// Bad input; exit code 2.
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Run = Result<Outcome, Failure>;

fn dims_json(dims: &[usize], first: usize) -> Value {
    let mut m = Map::new();
    for (k, d) in dims.iter().enumerate() {
        m.insert((first + k).to_string(), json!(d));
    }
    Value::Object(m)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn join(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn document(dims: &[usize], first: usize, presentation: Option<Value>, report: Option<Value>) -> Value {
    let mut m = Map::new();
    m.insert("dims".into(), dims_json(dims, first));
    if let Some(p) = presentation {
        m.insert("presentation".into(), p);
    }
    if let Some(r) = report {
        m.insert("report".into(), r);
    }
    Value::Object(m)
}

pub fn monogenic(field: FieldSpec, poly: &str, p_max: usize, verify: bool, bracket_table: bool) -> Run {
    let f = Poly::parse(poly, field)?;
    let pres = presentation(&f)?;
    let dims = monogenic::hh_dims(&pres, p_max);
    let mut text = String::new();
    let s = pres.summary();
    writeln!(text, "A = {field}[X]/({})", s.f).ok();
    writeln!(text, "d = {}", s.d).ok();
    writeln!(text, "q = {}", s.q).ok();
    writeln!(text, "u = {}", s.u).ok();
    writeln!(text, "w = {}", s.w).ok();
    writeln!(text, "HH dims: {}", join(&dims)).ok();
    let mut report = Map::new();
    if bracket_table {
        let mut rows = Vec::new();
        for (a, b, c) in pres.bracket_table() {
            writeln!(text, "[{a}, {b}] = {c}").ok();
            rows.push(json!([a, b, c.to_string()]));
        }
        report.insert("bracket_table".into(), Value::Array(rows));
    }
    let mut failure = None;
    if verify {
        let v = verify_presentation_in_oracle(&f, p_max)?;
        writeln!(text, "oracle dims: {}", join(&v.oracle)).ok();
        writeln!(text, "periodic complex dims: {}", join(&v.periodic)).ok();
        writeln!(text, "verification {}", if v.passed() { "PASS" } else { "FAIL" }).ok();
        if !v.passed() {
            failure = Some(first_oracle_failure(&v));
        }
        report.insert("verification".into(), to_value(&v));
    }
    let report = (!report.is_empty()).then_some(Value::Object(report));
    Ok(Outcome { text, json: document(&dims, 0, Some(to_value(&s)), report), failure })
}

fn first_oracle_failure(v: &hhkit_core::monogenic::OracleReport) -> String {
    if !v.dims_agree {
        let p = (0..v.oracle.len())
            .find(|&p| v.closed_form[p] != v.oracle[p] || v.oracle[p] != v.periodic[p])
            .unwrap_or(0);
        return format!(
            "degree {p}: closed form {}, oracle {}, periodic complex {}",
            v.closed_form[p], v.oracle[p], v.periodic[p]
        );
    }
    if !v.ring_relation {
        return "t ⌣ t - u z is not a coboundary".into();
    }
    if v.u_vanishes == Some(false) {
        return "u is not zero modulo d".into();
    }
    if !v.tau_x.holds() {
        return "[t, x] is neither q nor -q".into();
    }
    if !v.zeta_tau.holds() {
        return "[z, t] differs from ±w z by a non-coboundary".into();
    }
    "a bracket [z, z] or [t, t] is not a coboundary".into()
}

fn vertex_ideal(alg: &FinDimAlgebra, pres: &QuiverPresentation, vertex: &str) -> Result<SubBimodule, Failure> {
    let v = pres.quiver().vertex_index(vertex)?;
    Ok(idempotent_ideal(alg, &alg.basis_vector(v))?)
}

fn arrow_ideal(alg: &FinDimAlgebra, arrows: &[String]) -> Result<SubBimodule, Failure> {
    let gens = arrows
        .iter()
        .map(|a| {
            alg.index_of(a)
                .map(|i| alg.basis_vector(i))
                .ok_or_else(|| Failure::Input(format!("unknown arrow or path: {a}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ideal_generated_by(alg, &gens))
}

fn sequence_outcome(report: &ExactSequenceReport, text_extra: String, dims: &[usize], first: usize, extra: Map<String, Value>) -> Outcome {
    let mut r = extra;
    r.insert("sequence".into(), to_value(report));
    Outcome {
        text: format!("{text_extra}{report}\n"),
        json: document(dims, first, None, Some(Value::Object(r))),
        failure: (!report.passed()).then(|| report.first_failure().unwrap_or_else(|| "report failed".into())),
    }
}

pub enum AlgebraTask<'a> {
    Hh,
    Homological { vertex: &'a str },
    Happel { vertex: &'a str },
    FiveTerm { vertex: Option<&'a str>, arrows: &'a [String] },
    Flat { vertex: Option<&'a str> },
}

pub fn algebra(path: &Path, field: Option<FieldSpec>, task: AlgebraTask, p_max: usize, q_max: usize) -> Run {
    let pres = load_quiver(path, field)?;
    let alg = make_path_algebra_quotient(&pres)?;
    match task {
        AlgebraTask::Hh => {
            let dims = hh_dims(&alg, p_max)?;
            let text = format!("dim A = {}\nHH dims: {}\n", alg.dim(), join(&dims));
            Ok(Outcome { text, json: document(&dims, 0, None, None), failure: None })
        }
        AlgebraTask::Homological { vertex } => {
            let r = homological_ideal_report(&pres, vertex, q_max)?;
            let mut text = String::new();
            writeln!(text, "I = A e{vertex} A").ok();
            writeln!(text, "internal vertex: {}", r.internal_vertex).ok();
            writeln!(text, "circuit free: {}", r.circuit_free).ok();
            writeln!(text, "dim Ae = {}, dim eA = {}, dim AeA = {}", r.dim_ae, r.dim_ea, r.dim_aea).ok();
            writeln!(text, "dim I ⊗_A I = {}, rank of multiplication = {}", r.dim_i_tensor_i, r.mu_rank).ok();
            writeln!(text, "dim I/I^2 = {}", r.dim_i_mod_i2).ok();
            writeln!(text, "Tor dims: {}", join(&r.tor)).ok();
            writeln!(text, "verdict: {}", verdict_text(&r.verdict)).ok();
            Ok(Outcome { text, json: document(&r.tor, 0, None, Some(to_value(&r))), failure: None })
        }
        AlgebraTask::Happel { vertex } => {
            let report = happel_report_at_vertex(&pres, vertex, p_max, q_max)?;
            let column = |k: usize| -> Vec<usize> { report.term_dims.iter().skip(k).step_by(3).copied().collect() };
            let (h_i, hh_a) = (column(0), column(1));
            let hh_b = report.side_checks.iter().find(|s| s.name.starts_with("H(A,B)")).map(|s| s.right.clone()).unwrap_or_default();
            let mut extra = Map::new();
            extra.insert("hh_A".into(), json!(hh_a));
            extra.insert("hh_B".into(), json!(hh_b));
            extra.insert("h_A_I".into(), json!(h_i));
            let head = format!("HH(A): {}\nHH(B): {}\nH(A,I): {}\n", join(&hh_a), join(&hh_b), join(&h_i));
            Ok(sequence_outcome(&report, head, &hh_a, 0, extra))
        }
        AlgebraTask::FiveTerm { vertex, arrows } => {
            let ideal = match (vertex, arrows.is_empty()) {
                (Some(v), true) => vertex_ideal(&alg, &pres, v)?,
                (None, false) => arrow_ideal(&alg, arrows)?,
                _ => return Err(Failure::Input("five-term needs exactly one of --vertex or --ideal".into())),
            };
            let report = five_term_regular(&alg, &ideal)?;
            let dims = [report.term_dims[1], report.term_dims[4]];
            Ok(sequence_outcome(&report, String::new(), &dims, 1, Map::new()))
        }
        AlgebraTask::Flat { vertex } => {
            let e = match vertex {
                Some(v) => Some(alg.basis_vector(pres.quiver().vertex_index(v)?)),
                None => None,
            };
            let report = flat_ideal_report(&alg, e.as_ref(), None, p_max)?;
            let dims: Vec<usize> = report.term_dims.iter().skip(1).step_by(3).copied().collect();
            Ok(sequence_outcome(&report, String::new(), &dims, 1, Map::new()))
        }
    }
}

fn verdict_text(v: &hhkit_core::combinat::Verdict) -> String {
    use hhkit_core::combinat::Verdict;
    match v {
        Verdict::Proved { criterion } => format!("homological (proved: {criterion})"),
        Verdict::TorVanishesUpTo { q_max } => format!("Tor vanishes up to degree {q_max}"),
        Verdict::NotHomological { degree } => format!("not homological (Tor_{degree} is nonzero)"),
    }
}

pub fn poset(path: &Path, field: Option<FieldSpec>, ideal: &[String], p_max: usize) -> Run {
    let (x, field) = load_poset(path, field)?;
    if ideal.is_empty() {
        let hh = hh_dims(&make_incidence(&x, field), p_max)?;
        let top = simplicial_cohomology(&order_complex(&x), None, p_max, field)?;
        let text = format!("HH(kX): {}\nH(|X|): {}\n", join(&hh), join(&top));
        let failure = (hh != top).then(|| {
            let p = (0..=p_max).find(|&p| hh[p] != top[p]).unwrap_or(0);
            format!("degree {p}: HH(kX) = {} but H(|X|) = {}", hh[p], top[p])
        });
        let report = json!({ "simplicial": top });
        return Ok(Outcome { text, json: document(&hh, 0, None, Some(report)), failure });
    }
    let report = pair_report(&x, ideal, p_max, field)?;
    let relative: Vec<usize> = report.term_dims.iter().step_by(3).copied().collect();
    let head = format!("relative dims: {}\n", join(&relative));
    Ok(sequence_outcome(&report, head, &relative, 0, Map::new()))
}

pub fn crown(n: usize, m: usize, p_max: usize, field: FieldSpec) -> Run {
    let r = crown_check(n, m, p_max, field)?;
    Ok(Outcome {
        text: format!("{r}\n"),
        json: document(&r.dims, 0, None, Some(to_value(&r))),
        failure: r.first_failure(),
    })
}
