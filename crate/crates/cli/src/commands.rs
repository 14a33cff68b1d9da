use std::fmt::Write as _;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use algknot_core::obstruction::{family_check, obstruct_minimal, ObstructionError};
use algknot_core::pl::{Breakpoint, PiecewiseLinear};
use algknot_core::rational;
use algknot_core::signature::torus_signature;
use algknot_core::upsilon::{first_singularity, semigroup_of, tau_of, upsilon_of};
use algknot_core::{BigRational, KnotSpec, ObstructionReport};

use crate::output::Document;
use crate::CliError;

fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    rational::parse(text).ok_or_else(|| CliError::Input(format!("bad rational {text:?}")))
}

fn fmt(value: &BigRational) -> String {
    rational::format(value)
}

fn approx(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

fn breakpoint_json(points: &[Breakpoint]) -> Value {
    serde_json::to_value(points).expect("breakpoints serialize")
}

pub fn info(knot: &KnotSpec) -> Result<Document, CliError> {
    let seq = knot.sequence();
    let summary = seq.summary();
    let semigroup = semigroup_of(knot);
    let tau = tau_of(knot);
    let singularity = first_singularity(knot).map_err(CliError::internal)?;
    let cable = seq.to_cable_stages().to_string();

    let mut json = serde_json::to_value(&summary).expect("summary serializes");
    let obj = json.as_object_mut().expect("summary is an object");
    obj.insert("knot".into(), json!(knot.to_string()));
    obj.insert("multiplicity".into(), json!(seq.multiplicity()));
    obj.insert("cable".into(), json!(cable));
    obj.insert("slice_genus".into(), json!(seq.slice_genus()));
    obj.insert("unknotting_number".into(), json!(seq.unknotting_number()));
    obj.insert("tau".into(), json!(tau));
    obj.insert("first_singularity".into(), json!(fmt(&singularity)));
    obj.insert(
        "semigroup".into(),
        serde_json::to_value(semigroup.summary()).expect("semigroup serializes"),
    );

    let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let stages = summary
        .cable_stages
        .iter()
        .map(|[p, r]| format!("{p}:{r}"))
        .collect::<Vec<_>>()
        .join(" ");
    let fields = vec![
        ("knot", knot.to_string()),
        ("puiseux", summary.puiseux.clone()),
        ("gcd_chain", join(&summary.gcd_chain)),
        ("semigroup_generators", join(&summary.semigroup_generators)),
        ("cable_stages", stages),
        ("cable", cable),
        ("milnor", summary.milnor.to_string()),
        ("genus", summary.genus.to_string()),
        ("slice_genus", seq.slice_genus().to_string()),
        ("unknotting_number", seq.unknotting_number().to_string()),
        ("tau", tau.to_string()),
        ("multiplicity", seq.multiplicity().to_string()),
        ("first_singularity", fmt(&singularity)),
        ("conductor", semigroup.conductor().to_string()),
    ];
    let mut text = String::new();
    for (key, value) in &fields {
        writeln!(text, "{key:<22}{value}").unwrap();
    }
    let rows = fields
        .into_iter()
        .map(|(k, v)| vec![k.to_string(), v])
        .collect();
    Ok(Document::new(json, &["key", "value"], rows, text))
}

pub fn upsilon(
    knot: &KnotSpec,
    at: &[String],
    samples: Option<usize>,
    extend: bool,
) -> Result<Document, CliError> {
    let base = upsilon_of(knot);
    let f: PiecewiseLinear = if extend {
        base.extend_symmetric()
    } else {
        base
    };
    let evaluations = at
        .iter()
        .map(|text| {
            let t = parse_rational(text)?;
            let v = f.evaluate(&t).map_err(CliError::input)?;
            Ok(Breakpoint { t, v })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let sampled = samples.map(|n| f.samples(n)).unwrap_or_default();
    let singularity = first_singularity(knot).map_err(CliError::internal)?;
    let (lo, hi) = f.domain();

    let json = json!({
        "knot": knot.to_string(),
        "genus": knot.genus(),
        "tau": tau_of(knot),
        "first_singularity": fmt(&singularity),
        "domain": [fmt(lo), fmt(hi)],
        "breakpoints": breakpoint_json(f.breakpoints()),
        "evaluations": breakpoint_json(&evaluations),
        "samples": sampled.iter().map(|p| json!({
            "t": fmt(&p.t),
            "v": fmt(&p.v),
            "t_approx": approx(&p.t),
            "v_approx": approx(&p.v),
        })).collect::<Vec<_>>(),
    });

    let mut rows = Vec::new();
    for (kind, points) in [
        ("breakpoint", f.breakpoints()),
        ("evaluation", &evaluations[..]),
        ("sample", &sampled[..]),
    ] {
        for p in points {
            rows.push(vec![
                kind.to_string(),
                fmt(&p.t),
                fmt(&p.v),
                approx(&p.v).to_string(),
            ]);
        }
    }

    let mut text = format!(
        "Upsilon of {knot}: genus {}, first singularity at t = {}\n",
        knot.genus(),
        fmt(&singularity)
    );
    let slopes = f.slopes();
    for (w, slope) in f.breakpoints().windows(2).zip(&slopes) {
        writeln!(
            text,
            "  [{}, {}]  {} -> {}  slope {}",
            fmt(&w[0].t),
            fmt(&w[1].t),
            fmt(&w[0].v),
            fmt(&w[1].v),
            slope
        )
        .unwrap();
    }
    for p in &evaluations {
        writeln!(text, "  Υ({}) = {}", fmt(&p.t), fmt(&p.v)).unwrap();
    }
    for p in &sampled {
        writeln!(
            text,
            "  sample {} {} (≈ {:.6})",
            fmt(&p.t),
            fmt(&p.v),
            approx(&p.v)
        )
        .unwrap();
    }
    Ok(Document::new(
        json,
        &["kind", "t", "v", "v_approx"],
        rows,
        text,
    ))
}

pub fn signature(knot: &KnotSpec, at: &[String]) -> Result<Document, CliError> {
    let (p, q) = knot
        .torus_parameters()
        .ok_or_else(|| CliError::Input(format!("{knot} is not a torus knot")))?;
    let sigma = torus_signature(p, q).map_err(CliError::input)?;
    let evaluations = at
        .iter()
        .map(|text| {
            let x = parse_rational(text)?;
            let value = sigma.evaluate(&x).map_err(CliError::input)?;
            Ok((x.clone(), value, sigma.is_jump(&x)))
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    // constant pieces between consecutive jump locations
    let mut cuts = vec![rational::int(0)];
    cuts.extend(sigma.jumps().iter().map(|j| j.x.clone()));
    cuts.push(rational::int(1));
    cuts.dedup();
    let steps: Vec<(BigRational, BigRational, i64)> = cuts
        .windows(2)
        .zip(sigma.interval_representatives())
        .map(|(w, mid)| {
            let value = sigma.evaluate(&mid).expect("midpoint inside [0, 1]");
            (w[0].clone(), w[1].clone(), value)
        })
        .collect();

    let json = json!({
        "knot": knot.to_string(),
        "jumps": serde_json::to_value(&sigma).expect("jumps serialize"),
        "steps": steps.iter().map(|(a, b, v)| json!({
            "from": fmt(a), "to": fmt(b), "value": v,
        })).collect::<Vec<_>>(),
        "evaluations": evaluations.iter().map(|(x, v, at_jump)| json!({
            "x": fmt(x), "value": v, "at_jump": at_jump,
        })).collect::<Vec<_>>(),
    });

    let mut rows = Vec::new();
    for j in sigma.jumps() {
        rows.push(vec!["jump".into(), fmt(&j.x), j.delta.to_string()]);
    }
    for (x, v, _) in &evaluations {
        rows.push(vec!["evaluation".into(), fmt(x), v.to_string()]);
    }

    let mut text = format!("Tristram-Levine signature of T({p},{q})\n");
    for (a, b, v) in &steps {
        writeln!(text, "  ({}, {}): {v}", fmt(a), fmt(b)).unwrap();
    }
    for (x, v, at_jump) in &evaluations {
        let note = if *at_jump { " (jump, averaged)" } else { "" };
        writeln!(text, "  σ({}) = {v}{note}", fmt(x)).unwrap();
    }
    Ok(Document::new(json, &["kind", "x", "value"], rows, text))
}

fn report(k0: &KnotSpec, k1: &KnotSpec) -> Result<ObstructionReport, CliError> {
    obstruct_minimal(k0, k1).map_err(|err| match err {
        ObstructionError::GenusOrderViolated { .. } => CliError::input(err),
        ObstructionError::Theorem(_) => CliError::internal(err),
    })
}

pub fn obstruct(k0: &KnotSpec, k1: &KnotSpec) -> Result<Document, CliError> {
    let r = report(k0, k1)?;
    let json = serde_json::to_value(&r).expect("report serializes");
    let signature = r.signature_bound.map(|s| s.to_string()).unwrap_or_default();
    let row = vec![
        r.k0.clone(),
        r.k1.clone(),
        r.g0.to_string(),
        r.g1.to_string(),
        r.tau_bound.to_string(),
        r.upsilon_bound.to_string(),
        signature.clone(),
        fmt(&r.witness_t),
        r.verdict.to_string(),
    ];
    let mut text = format!(
        "K0 = {} (genus {}), K1 = {} (genus {})\n",
        r.k0, r.g0, r.k1, r.g1
    );
    writeln!(text, "tau bound        {}", r.tau_bound).unwrap();
    writeln!(
        text,
        "Upsilon bound    {} (attained at t = {})",
        r.upsilon_bound,
        fmt(&r.witness_t)
    )
    .unwrap();
    if !signature.is_empty() {
        writeln!(text, "signature bound  {signature}").unwrap();
    }
    writeln!(text, "verdict          {}", r.verdict).unwrap();
    Ok(Document::new(
        json,
        &[
            "k0",
            "k1",
            "g0",
            "g1",
            "tau_bound",
            "upsilon_bound",
            "signature_bound",
            "witness_t",
            "verdict",
        ],
        vec![row],
        text,
    ))
}

pub fn search_family(max_a: u64, max_b: Option<u64>, max_c: u64) -> Result<Document, CliError> {
    let max_b = max_b.unwrap_or(max_c.saturating_sub(1) / 3);
    let triples: Vec<(u64, u64, u64)> = (1..=max_a)
        .flat_map(|a| (1..=max_b).flat_map(move |b| (1..=max_c).map(move |c| (a, b, c))))
        .collect();
    let hits = triples
        .par_iter()
        .filter_map(|&(a, b, c)| family_check(a, b, c).ok())
        .map(|pair| {
            let (k0, k1) = (
                KnotSpec::from(pair.k0.clone()),
                KnotSpec::from(pair.k1.clone()),
            );
            report(&k0, &k1).map(|r| (pair, r))
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let header = [
        "a",
        "b",
        "c",
        "d",
        "seq0",
        "seq1",
        "g0",
        "g1",
        "tau_bound",
        "upsilon_bound",
        "verdict",
    ];
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut text = format!(
        "{:>4} {:>4} {:>4} {:>3}  {:<14} {:<14} {:>5} {:>5} {:>4} {:>4}  verdict\n",
        "a", "b", "c", "d", "seq0", "seq1", "g0", "g1", "tau", "ups"
    );
    for (pair, r) in &hits {
        let (s0, s1) = (pair.k0.to_string(), pair.k1.to_string());
        rows.push(vec![
            pair.a.to_string(),
            pair.b.to_string(),
            pair.c.to_string(),
            pair.d.to_string(),
            s0.clone(),
            s1.clone(),
            r.g0.to_string(),
            r.g1.to_string(),
            r.tau_bound.to_string(),
            r.upsilon_bound.to_string(),
            r.verdict.to_string(),
        ]);
        json_rows.push(json!({
            "a": pair.a, "b": pair.b, "c": pair.c, "d": pair.d,
            "seq0": s0, "seq1": s1,
            "cable0": pair.k0.to_cable_stages().to_string(),
            "cable1": pair.k1.to_cable_stages().to_string(),
            "g0": r.g0, "g1": r.g1,
            "tau_bound": r.tau_bound,
            "upsilon_bound": r.upsilon_bound,
            "witness_t": fmt(&r.witness_t),
            "verdict": r.verdict.to_string(),
        }));
        writeln!(
            text,
            "{:>4} {:>4} {:>4} {:>3}  {:<14} {:<14} {:>5} {:>5} {:>4} {:>4}  {}",
            pair.a,
            pair.b,
            pair.c,
            pair.d,
            s0,
            s1,
            r.g0,
            r.g1,
            r.tau_bound,
            r.upsilon_bound,
            r.verdict
        )
        .unwrap();
    }
    Ok(Document::new(Value::Array(json_rows), &header, rows, text))
}
