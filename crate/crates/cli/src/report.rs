//! Report rendering. JSON output is canonical: object keys are sorted (the
//! default `serde_json` map is ordered) and every number that is part of the
//! mathematics is a string with rationals as `p/q`.

use std::fmt::Write as _;

use infchar_core::scalar::format_rational;
use infchar_core::sen::SenError;
use infchar_core::{BasedRootDatum, GaloisParameterSpec, InfCharError, Mode, Scalar, Weight, ZetaReport};
use serde_json::{json, Map, Value};

pub fn to_canonical_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize")
}

pub fn weight_json(w: &Weight) -> Value {
    json!(w.coords().iter().map(format_rational).collect::<Vec<_>>())
}

fn scalars_json(v: &[Scalar]) -> Value {
    json!(v.iter().map(Scalar::to_string).collect::<Vec<_>>())
}

fn ints_json(rows: &[Vec<i64>]) -> Value {
    json!(rows.iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

/// A datum in the explicit group format accepted by spec files.
pub fn datum_json(d: &BasedRootDatum) -> Value {
    json!({
        "rank": d.rank(),
        "roots": ints_json(d.roots()),
        "coroots": ints_json(d.coroots()),
        "simple": d.simple_indices(),
    })
}

pub fn error_kind(e: &InfCharError) -> &'static str {
    match e {
        InfCharError::Sen { error, .. } => match error {
            SenError::MixedRepresentationKind => "mixed_representation_kind",
            SenError::CharPolyDoesNotSplit { .. } => "char_poly_does_not_split",
            SenError::NotTypeA => "not_type_a",
            SenError::SizeMismatch { .. } => "size_mismatch",
            SenError::Ring(_) => "ring",
        },
        InfCharError::TauIndependenceViolated { .. } => "tau_independence_violated",
        InfCharError::UnknownSigma(_) => "unknown_sigma",
        InfCharError::UnknownTau(_) => "unknown_tau",
        InfCharError::NotHodgeTate { .. } => "not_hodge_tate",
        InfCharError::NotRegular { .. } => "not_regular",
        InfCharError::NotCMode => "not_c_mode",
        InfCharError::Invariants(_) => "invariants",
        InfCharError::Ring(_) => "ring",
    }
}

fn opt<T>(x: &Option<T>, f: impl Fn(&T) -> Value) -> Value {
    x.as_ref().map_or(Value::Null, f)
}

fn mode_str(m: Mode) -> &'static str {
    match m {
        Mode::L => "L",
        Mode::C => "C",
    }
}

pub fn render(spec: &GaloisParameterSpec, r: &ZetaReport, check_roundtrip: bool) -> Value {
    let mut sigmas = Map::new();
    for s in &r.sigmas {
        sigmas.insert(
            s.sigma.clone(),
            json!({
                "point": scalars_json(s.character.point()),
                "dominant_representative": opt(&s.dominant_representative, weight_json),
                "algebraic_match": opt(&s.algebraic_match, weight_json),
                "taus": s.taus,
                "tau_independent": s.tau_independence.independent,
                "witness": s.tau_independence.witness,
            }),
        );
    }
    let mut nu = Map::new();
    let mut taus = Map::new();
    for t in &r.taus {
        nu.insert(t.tau.clone(), opt(&t.nu, weight_json));
        let mut entry = Map::new();
        entry.insert("hodge_tate".into(), json!(t.hodge_tate.hodge_tate));
        entry.insert("reason".into(), json!(t.hodge_tate.reason));
        if let Some(reg) = &t.regularity {
            entry.insert("dominant".into(), json!(reg.dominant));
            entry.insert("strict".into(), json!(reg.strict));
            entry.insert("lambda".into(), weight_json(&reg.lambda));
        }
        taus.insert(t.tau.clone(), Value::Object(entry));
    }
    let pi_alg = opt(&r.pi_alg, |v| {
        Value::Object(v.iter().map(|(s, w)| (s.clone(), weight_json(w))).collect())
    });
    let error = opt(&r.error, |e| json!({ "kind": error_kind(e), "message": e.to_string() }));
    json!({
        "name": spec.name(),
        "mode": mode_str(spec.mode()),
        "sigma_characters": sigmas,
        "tau_independence": r.tau_independence,
        "hodge_tate": r.hodge_tate,
        "nu": nu,
        "taus": taus,
        "regular": r.regular,
        "pi_alg": pi_alg,
        "roundtrip": r.roundtrip,
        "roundtrip_checked": check_roundtrip,
        "status": if r.error.is_some() { "computation_error" } else { "ok" },
        "error": error,
    })
}

fn show_weight(w: &Option<Weight>) -> String {
    w.as_ref().map_or_else(|| "none".to_string(), Weight::to_string)
}

fn show_flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

pub fn render_text(spec: &GaloisParameterSpec, r: &ZetaReport) -> String {
    let mut out = String::new();
    if let Some(name) = spec.name() {
        let _ = writeln!(out, "spec: {name}");
    }
    let _ = writeln!(out, "mode: {}", mode_str(spec.mode()));
    for s in &r.sigmas {
        let point: Vec<String> = s.character.point().iter().map(Scalar::to_string).collect();
        let _ = writeln!(out, "sigma {}: orbit of ({})", s.sigma, point.join(", "));
        let _ = writeln!(out, "  dominant representative: {}", show_weight(&s.dominant_representative));
        let _ = writeln!(out, "  algebraic match: {}", show_weight(&s.algebraic_match));
        if let Some(w) = &s.tau_independence.witness {
            let _ = writeln!(out, "  tau-independence violated at {w}");
        }
    }
    let _ = writeln!(out, "tau-independent: {}", show_flag(Some(r.tau_independence)));
    let _ = writeln!(out, "Hodge-Tate: {}", show_flag(r.hodge_tate));
    for t in &r.taus {
        let mut line = format!("  tau {}: nu = {}", t.tau, show_weight(&t.nu));
        if let Some(reason) = &t.hodge_tate.reason {
            let _ = write!(line, " ({reason})");
        }
        if let Some(reg) = &t.regularity {
            let _ = write!(line, ", dominant {}, strict {}", show_flag(Some(reg.dominant)), show_flag(Some(reg.strict)));
        }
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "regular: {}", show_flag(r.regular));
    if let Some(pi) = &r.pi_alg {
        for (s, w) in pi {
            let _ = writeln!(out, "pi_alg at {s}: {w}");
        }
    }
    let _ = writeln!(out, "round trip: {}", show_flag(r.roundtrip));
    if let Some(e) = &r.error {
        let _ = writeln!(out, "error [{}]: {e}", error_kind(e));
    }
    out
}
