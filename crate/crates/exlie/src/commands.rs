//! Payload builders for every subcommand.
//!
//! Each builder is a pure function from parsed arguments to an
//! [`Outcome`]: the renderable [`CommandOutput`] plus an optional failure
//! summary.  The binary only dispatches and renders, mapping
//! [`UsageError`] to exit code 2 and a failed verification to exit code 1
//! (after printing the report).

use serde_json::{json, Value};

use exlie_core::composition_algebra::{CompLabel, CompositionAlgebra};
use exlie_core::fts::Fts;
use exlie_core::jordan_core::JordanAlgebra;
use exlie_core::parabolic::{
    grading_profile, long_short_counts, maximal_parabolic, maximal_parabolics,
    standard_parabolic, ParabolicSubalgebra,
};
use exlie_core::real_form::RealForm;
use exlie_core::registry::{self, FormLabel};
use exlie_core::relations::{
    complexified_levi, enumerate_max_related, jordan_interpretation, parabolically_related,
};
use exlie_core::root_system::{RootSystem, SimpleType};
use exlie_core::symmetry_dims::{check_chain_arithmetic, magic_dims, structure_dim};

use crate::desc::{parse_element, parse_jordan};
use crate::output::{rat_json, CommandOutput, Rows};
use crate::verify;

/// Errors surfaced to the binary: bad invocations — exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

/// A completed command: its printable output, plus the failure summary when
/// a verification ran and found mismatches (exit code 1 — the report is
/// still printed first).
pub struct Outcome {
    /// what to render
    pub output: CommandOutput,
    /// `Some(summary)` when checks failed
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(output: CommandOutput) -> Result<Self, UsageError> {
        Ok(Outcome { output, failure: None })
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

fn parse_form(label: &str) -> Result<FormLabel, UsageError> {
    FormLabel::parse(label)
        .ok_or_else(|| UsageError(format!("unknown real form label {label:?}")))
}

fn jordan_algebra(descriptor: &str) -> Result<JordanAlgebra, UsageError> {
    match parse_jordan(descriptor) {
        Some(kind) => Ok(JordanAlgebra::new(kind)),
        None => usage(format!("unknown Jordan algebra descriptor {descriptor:?}")),
    }
}

/// `algebra table --label <L>`: multiplication table of a composition algebra.
pub fn algebra_table(label: &str) -> Result<Outcome, UsageError> {
    let Some(l) = CompLabel::parse(label) else {
        return usage(format!("unknown composition algebra label {label:?}"));
    };
    let a = CompositionAlgebra::new(l);
    let unit_name = |k: usize| if k == 0 { "1".to_string() } else { format!("e{k}") };
    // each basis product is a signed basis unit; read it off the structure constants
    let cell = |i: usize, j: usize| -> String {
        for k in 0..a.dim {
            match a.sc(i, j, k) {
                0 => {}
                1 => return unit_name(k),
                -1 => return format!("-{}", unit_name(k)),
                c => return format!("{c}{}", unit_name(k)),
            }
        }
        "0".to_string()
    };
    let table: Vec<Vec<String>> = (0..a.dim).map(|i| (0..a.dim).map(|j| cell(i, j)).collect()).collect();
    let (pos, neg) = a.signature();
    let payload = json!({
        "label": l.name(),
        "dim": a.dim,
        "split": l.is_split(),
        "norm_signature": [pos, neg],
        "table": table,
    });
    let mut headers = vec!["*".to_string()];
    headers.extend((0..a.dim).map(unit_name));
    let rows = table
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![unit_name(i)];
            row.extend(r.iter().cloned());
            row
        })
        .collect();
    Outcome::ok(CommandOutput::with_rows(payload, Rows { headers, rows }))
}

/// `jordan check --algebra <desc> --trials N [--seed S]`.
pub fn jordan_check(descriptor: &str, trials: usize, seed: u64) -> Result<Outcome, UsageError> {
    let j = jordan_algebra(descriptor)?;
    let report = verify::jordan_suite(&j, trials, seed);
    let failures: usize = report.iter().map(|c| c.failures).sum();
    let out = check_report(
        json!({ "algebra": j.kind.name(), "dim": j.dim, "trials": trials, "seed": seed }),
        &report,
    );
    let failure =
        (failures > 0).then(|| format!("{failures} Jordan axiom failures on {}", j.kind.name()));
    Ok(Outcome { output: out, failure })
}

/// `jordan norm --algebra <desc> --element <json>`: the cubic data
/// `N(x)`, `Tr(x)` and `S(x) = Tr(x♯)` of one exact element.
pub fn jordan_norm(descriptor: &str, element: &str) -> Result<Outcome, UsageError> {
    let j = jordan_algebra(descriptor)?;
    let Some(cubic) = &j.cubic else {
        return usage(format!("{} is not cubic; no norm form N/Tr/S", j.kind.name()));
    };
    let x = parse_element(element, j.dim).map_err(UsageError)?;
    let n = cubic.norm(&x);
    let tr = cubic.trace(&x);
    let s = cubic.trace(&cubic.sharp(&x));
    let payload = json!({
        "algebra": j.kind.name(),
        "element": x.iter().map(rat_json).collect::<Vec<_>>(),
        "N": rat_json(&n),
        "Tr": rat_json(&tr),
        "S": rat_json(&s),
    });
    Outcome::ok(CommandOutput::new(payload))
}

/// `fts check --algebra <desc> --trials N [--seed S]`.
pub fn fts_check(descriptor: &str, trials: usize, seed: u64) -> Result<Outcome, UsageError> {
    let j = jordan_algebra(descriptor)?;
    if j.cubic.is_none() {
        return usage(format!("{} is not cubic; no triple system F(J)", j.kind.name()));
    }
    let name = j.kind.name();
    let f = Fts::new(j);
    let report = verify::fts_suite(&f, trials, seed);
    let failures: usize = report.iter().map(|c| c.failures).sum();
    let out = check_report(
        json!({ "algebra": name, "fts_dim": f.dim, "trials": trials, "seed": seed }),
        &report,
    );
    let failure = (failures > 0).then(|| format!("{failures} triple-system failures on F({name})"));
    Ok(Outcome { output: out, failure })
}

/// `fts quartic --algebra <desc> --element <json>`: `Δ(x)` and `κ(x)`.
pub fn fts_quartic(descriptor: &str, element: &str) -> Result<Outcome, UsageError> {
    let j = jordan_algebra(descriptor)?;
    if j.cubic.is_none() {
        return usage(format!("{} is not cubic; no triple system F(J)", j.kind.name()));
    }
    let name = j.kind.name();
    let f = Fts::new(j);
    let x = parse_element(element, f.dim).map_err(UsageError)?;
    let payload = json!({
        "algebra": name,
        "fts_dim": f.dim,
        "element": x.iter().map(rat_json).collect::<Vec<_>>(),
        "quartic": rat_json(&f.quartic(&x)),
        "kappa": rat_json(&f.kappa(&x)),
    });
    Outcome::ok(CommandOutput::new(payload))
}

/// `symmetry report --algebra <desc>`: the symmetry chain dimensions.
pub fn symmetry_report(descriptor: &str) -> Result<Outcome, UsageError> {
    let j = jordan_algebra(descriptor)?;
    let payload = if j.cubic.is_some() {
        let m = magic_dims(&j);
        let chain_ok = check_chain_arithmetic(&j, &m);
        let labels = verify::chain_labels(&j.kind);
        json!({
            "algebra": j.kind.name(),
            "dim": j.dim,
            "der": m.der, "str0": m.str0, "conf": m.conf, "qconf": m.qconf,
            "chain_arithmetic_ok": chain_ok,
            "labels": labels.map(|(a, s, c, q)| json!({
                "aut": a, "str0": s, "conf": c, "qconf": q,
            })).unwrap_or(Value::Null),
        })
    } else {
        // degree-2 spin factor: no quartic layer, report der/str0/conf only
        let str_full = structure_dim(&j);
        json!({
            "algebra": j.kind.name(),
            "dim": j.dim,
            "der": exlie_core::symmetry_dims::derivation_dim(&j),
            "str0": str_full - 1,
            "conf": 2 * j.dim + str_full,
            "qconf": Value::Null,
        })
    };
    Outcome::ok(CommandOutput::new(payload))
}

/// `symmetry verify-table1`: recompute the whole symmetry-dimension table.
pub fn symmetry_verify_table1() -> Result<Outcome, UsageError> {
    let report = verify::table1_suite();
    let failures: usize = report.iter().map(|c| c.failures).sum();
    let out = check_report(json!({ "table": "symmetry dimensions" }), &report);
    let failure = (failures > 0).then(|| format!("{failures} symmetry-table mismatches"));
    Ok(Outcome { output: out, failure })
}

/// `roots info --type <T>`: counts and Cartan matrix of `E6/E7/E8/F4/G2`.
pub fn roots_info(type_name: &str) -> Result<Outcome, UsageError> {
    let stype = match type_name.trim().to_ascii_uppercase().as_str() {
        "E6" => SimpleType::E6,
        "E7" => SimpleType::E7,
        "E8" => SimpleType::E8,
        "F4" => SimpleType::F4,
        "G2" => SimpleType::G2,
        other => return usage(format!("unknown root system type {other:?} (want E6/E7/E8/F4/G2)")),
    };
    let rs = RootSystem::new(stype);
    let payload = json!({
        "type": stype.name(),
        "rank": rs.rank,
        "roots": rs.roots.len(),
        "positive_roots": rs.positives.len(),
        "lie_dim": rs.lie_dim(),
        "cartan_matrix": rs.cartan_matrix(),
        "highest_root": rs.highest_root_coeffs(),
    });
    let mut headers = vec![String::new()];
    headers.extend((1..=rs.rank).map(|i| format!("a{i}")));
    let rows = rs
        .cartan_matrix()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = vec![format!("a{}", i + 1)];
            r.extend(row.iter().map(i64::to_string));
            r
        })
        .collect();
    Outcome::ok(CommandOutput::with_rows(payload, Rows { headers, rows }))
}

fn realform_row(f: &RealForm) -> Vec<String> {
    let e = f.entry;
    vec![
        f.label.name().to_string(),
        f.label.alt_name().to_string(),
        f.label.complex_type().name().to_string(),
        f.dim_g().to_string(),
        e.k_label.to_string(),
        e.dim_k.to_string(),
        f.split_rank().to_string(),
        e.restricted_name.to_string(),
        e.m0_label.to_string(),
        e.dim_m0.to_string(),
    ]
}

fn realform_json(f: &RealForm) -> Value {
    let e = f.entry;
    json!({
        "form": f.label.name(),
        "alt_name": f.label.alt_name(),
        "complex_type": f.label.complex_type().name(),
        "dim": f.dim_g(),
        "k": e.k_label, "dim_k": e.dim_k,
        "split_rank": f.split_rank(),
        "restricted_type": e.restricted_name,
        "m0": e.m0_label, "dim_m0": e.dim_m0,
        "dim_n_minimal": e.dim_npm,
        "satake": {
            "black_nodes": e.black,
            "arrows": e.arrows.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        },
    })
}

/// `realform list`: one row per non-compact exceptional real form.
pub fn realform_list() -> Result<Outcome, UsageError> {
    let forms = RealForm::all();
    let payload = Value::Array(forms.iter().map(realform_json).collect());
    let headers = ["form", "cartan", "complex", "dim", "k", "dim_k", "rank", "restricted", "m0", "dim_m0"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rows = forms.iter().map(realform_row).collect();
    Outcome::ok(CommandOutput::with_rows(payload, Rows { headers, rows }))
}

/// `realform info --form <label>`: one form in full detail.
pub fn realform_info(label: &str) -> Result<Outcome, UsageError> {
    let form = RealForm::new(parse_form(label)?);
    Outcome::ok(CommandOutput::new(realform_json(&form)))
}

/// `realform restricted --form <label>`: the restricted root system with
/// multiplicities.
pub fn realform_restricted(label: &str) -> Result<Outcome, UsageError> {
    let form = RealForm::new(parse_form(label)?);
    let rs = form.restricted_root_system();
    let positives: Vec<Value> = rs
        .positives
        .iter()
        .map(|(root, mult)| {
            json!({
                "root": root.iter().map(rat_json).collect::<Vec<_>>(),
                "mult": mult,
            })
        })
        .collect();
    let payload = json!({
        "form": form.label.name(),
        "split_rank": rs.split_rank,
        "reduced_type": rs.reduced_type,
        "non_reduced": rs.non_reduced,
        "positive_count": rs.positives.len(),
        "sum_multiplicities": rs.sum_positive_multiplicities(),
        "positives": positives,
    });
    let headers = vec!["root".to_string(), "mult".to_string()];
    let rows = rs
        .positives
        .iter()
        .map(|(root, mult)| {
            let coords: Vec<String> = root.iter().map(|r| r.to_string()).collect();
            vec![format!("({})", coords.join(", ")), mult.to_string()]
        })
        .collect();
    Outcome::ok(CommandOutput::with_rows(payload, Rows { headers, rows }))
}

/// `realform dump-registry` / top-level `dump-registry`: canonical frozen
/// data and its hash.
pub fn dump_registry() -> Result<Outcome, UsageError> {
    let canonical = registry::canonical_dump();
    let payload = json!({
        "canonical": canonical,
        "sha256": crate::output::registry_hash(),
    });
    Outcome::ok(CommandOutput::new(payload))
}

fn parabolic_json(p: &ParabolicSubalgebra, form: &RealForm) -> Value {
    let mut doc = json!({
        "form": p.form.name(),
        "theta": p.theta,
        "levi": p.levi.display(),
        "abelian_rank": p.levi.abelian,
        "dim_a": p.dim_a_theta,
        "dim_n": p.dim_n_theta,
        "dim_m": p.dim_m_theta,
        "maximal": p.is_maximal,
    });
    if let Some(j) = p.deleted_node {
        let g = grading_profile(form, j);
        let grading: Value = g
            .grades
            .iter()
            .map(|&(k, d)| (k.to_string(), Value::from(d)))
            .collect::<serde_json::Map<_, _>>()
            .into();
        doc["node"] = Value::from(j);
        doc["depth"] = Value::from(g.depth);
        doc["grading"] = grading;
        if let Some((long, short)) = long_short_counts(form, j) {
            doc["long_short"] = json!([long, short]);
        }
    }
    doc
}

fn grading_cell(form: &RealForm, j: usize) -> String {
    let g = grading_profile(form, j);
    let parts: Vec<String> =
        g.grades.iter().map(|&(k, d)| format!("{k}:{d}")).collect();
    parts.join(" ")
}

/// `parabolic max --form <label> [--node j]`.
pub fn parabolic_max(label: &str, node: Option<usize>) -> Result<Outcome, UsageError> {
    let form = RealForm::new(parse_form(label)?);
    let count = form.entry.pins.len();
    let ps: Vec<ParabolicSubalgebra> = match node {
        Some(j) => {
            if j == 0 || j > count {
                return usage(format!(
                    "{} has maximal parabolics P_1 .. P_{count}; --node {j} is out of range",
                    form.label.name()
                ));
            }
            vec![maximal_parabolic(&form, j)]
        }
        None => maximal_parabolics(&form),
    };
    let payload = Value::Array(ps.iter().map(|p| parabolic_json(p, &form)).collect());
    let headers = ["form", "node", "levi", "dim_n", "depth", "grading"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rows = ps
        .iter()
        .map(|p| {
            let j = p.deleted_node.expect("maximal parabolic has a deleted node");
            vec![
                p.form.name().to_string(),
                j.to_string(),
                p.levi.display(),
                p.dim_n_theta.to_string(),
                grading_profile(&form, j).depth.to_string(),
                grading_cell(&form, j),
            ]
        })
        .collect();
    Outcome::ok(CommandOutput::with_rows(payload, Rows { headers, rows }))
}

/// `parabolic all --form <label>`: every standard parabolic `P_Θ`.
pub fn parabolic_all(label: &str) -> Result<Outcome, UsageError> {
    let form = RealForm::new(parse_form(label)?);
    let r = form.split_rank();
    let mut payload_rows = Vec::new();
    let mut rows = Vec::new();
    for mask in 0..(1_usize << r) {
        let theta: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let p = standard_parabolic(&form, &theta);
        let theta_s = if theta.is_empty() {
            "{}".to_string()
        } else {
            format!("{{{}}}", theta.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        };
        rows.push(vec![
            theta_s,
            p.levi.display(),
            p.dim_a_theta.to_string(),
            p.dim_n_theta.to_string(),
            p.dim_m_theta.to_string(),
        ]);
        payload_rows.push(json!({
            "theta": p.theta,
            "levi": p.levi.display(),
            "dim_a": p.dim_a_theta,
            "dim_n": p.dim_n_theta,
            "dim_m": p.dim_m_theta,
            "maximal": p.is_maximal,
        }));
    }
    let headers =
        ["theta", "levi", "dim_a", "dim_n", "dim_m"].iter().map(|s| s.to_string()).collect();
    Outcome::ok(CommandOutput::with_rows(Value::Array(payload_rows), Rows { headers, rows }))
}

/// `related enumerate --max`: all classes of parabolically related maximal
/// parabolics across the twelve forms.
pub fn related_enumerate() -> Result<Outcome, UsageError> {
    let forms = RealForm::all();
    let classes = enumerate_max_related(&forms);
    let mut payload_rows = Vec::new();
    let mut rows = Vec::new();
    for c in &classes {
        let complex = {
            let names: Vec<String> = c.complex_levi.factors.iter().map(|t| t.name()).collect();
            let mut s = names.join("+");
            if c.complex_levi.abelian > 0 {
                if !s.is_empty() {
                    s.push('+');
                }
                s.push_str(&format!("u(1)^{}", c.complex_levi.abelian));
            }
            s
        };
        let members: Vec<Value> = c
            .members
            .iter()
            .map(|m| {
                json!({
                    "form": m.form.name(),
                    "indices": m.indices,
                    "levi": m.levi,
                    "dim_m": m.dim_m,
                    "registry_only": m.registry_only,
                    "note": m.note,
                })
            })
            .collect();
        payload_rows.push(json!({
            "row": c.row,
            "dim_n": c.dim_n,
            "complex_levi": complex,
            "beyond_known_table": c.beyond_paper(),
            "members": members,
        }));
        for m in &c.members {
            let idx =
                m.indices.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            rows.push(vec![
                c.row.map(|r| r.to_string()).unwrap_or_else(|| "?".to_string()),
                complex.clone(),
                c.dim_n.to_string(),
                m.form.name().to_string(),
                idx,
                m.levi.clone(),
                m.dim_m.to_string(),
                if m.registry_only { "yes".to_string() } else { String::new() },
            ]);
        }
    }
    let headers = ["class", "complex levi", "dim_n", "form", "nodes", "levi", "dim_m", "registry"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Outcome::ok(CommandOutput::with_rows(Value::Array(payload_rows), Rows { headers, rows }))
}

/// `related check --form1 --node1 --form2 --node2`.
pub fn related_check(
    label1: &str,
    node1: usize,
    label2: &str,
    node2: usize,
) -> Result<Outcome, UsageError> {
    let f1 = RealForm::new(parse_form(label1)?);
    let f2 = RealForm::new(parse_form(label2)?);
    for (f, n) in [(&f1, node1), (&f2, node2)] {
        let count = f.entry.pins.len();
        if n == 0 || n > count {
            return usage(format!(
                "{} has maximal parabolics P_1 .. P_{count}; node {n} is out of range",
                f.label.name()
            ));
        }
    }
    let p1 = maximal_parabolic(&f1, node1);
    let p2 = maximal_parabolic(&f2, node2);
    let related = parabolically_related(&p1, &p2);
    let show = |levi: &exlie_core::parabolic::LeviDecomposition| {
        let c = complexified_levi(levi);
        let names: Vec<String> = c.factors.iter().map(|t| t.name()).collect();
        format!("[{}] + u(1)^{}", names.join("+"), c.abelian)
    };
    let payload = json!({
        "form1": f1.label.name(), "node1": node1, "levi1": p1.levi.display(),
        "complex_levi1": show(&p1.levi),
        "form2": f2.label.name(), "node2": node2, "levi2": p2.levi.display(),
        "complex_levi2": show(&p2.levi),
        "same_complex_type": f1.label.complex_type() == f2.label.complex_type(),
        "related": related,
    });
    Outcome::ok(CommandOutput::new(payload))
}

/// `interpret --label <L>`: Jordan-algebraic readings of a Lie algebra label.
pub fn interpret(label: &str) -> Result<Outcome, UsageError> {
    let hits = jordan_interpretation(label);
    if hits.is_empty() {
        return usage(format!(
            "no Jordan-algebraic interpretation on record for {label:?}"
        ));
    }
    let payload: Vec<Value> = hits
        .iter()
        .map(|(row, role, context)| json!({ "class": row, "role": role, "context": context }))
        .collect();
    let headers = ["class", "role", "context"].iter().map(|s| s.to_string()).collect();
    let rows = hits
        .iter()
        .map(|(row, role, context)| vec![row.to_string(), role.clone(), context.clone()])
        .collect();
    Outcome::ok(CommandOutput::with_rows(Value::Array(payload), Rows { headers, rows }))
}

/// `verify-all [--only <suite>] [--seed S]`: the full verification battery.
pub fn verify_all(only: Option<&str>, seed: u64) -> Result<Outcome, UsageError> {
    let results = verify::run(only, seed);
    if results.is_empty() {
        return usage(format!(
            "--only {:?} matches no suite (have: {})",
            only.unwrap_or(""),
            verify::SUITE_NAMES.join(", ")
        ));
    }
    let total_checks: usize = results.iter().map(|s| s.checks).sum();
    let total_failures: usize = results.iter().map(|s| s.failures.len()).sum();
    let suites: Vec<Value> = results
        .iter()
        .map(|s| {
            json!({
                "suite": s.suite,
                "checks": s.checks,
                "failures": s.failures,
                "status": if s.failures.is_empty() { "ok" } else { "FAIL" },
            })
        })
        .collect();
    let payload = json!({
        "seed": seed,
        "suites": suites,
        "total_checks": total_checks,
        "total_failures": total_failures,
        "status": if total_failures == 0 { "ok" } else { "FAIL" },
    });
    let headers = ["suite", "checks", "failures", "status"].iter().map(|s| s.to_string()).collect();
    let rows = results
        .iter()
        .map(|s| {
            vec![
                s.suite.clone(),
                s.checks.to_string(),
                s.failures.len().to_string(),
                if s.failures.is_empty() { "ok".to_string() } else { "FAIL".to_string() },
            ]
        })
        .collect();
    let out = CommandOutput::with_rows(payload, Rows { headers, rows });
    let failure = (total_failures > 0)
        .then(|| format!("{total_failures} of {total_checks} checks failed"));
    Ok(Outcome { output: out, failure })
}

/// Tabular report from a list of named check counters.
fn check_report(mut payload: Value, report: &[verify::CheckCount]) -> CommandOutput {
    let checks: Vec<Value> = report
        .iter()
        .map(|c| {
            json!({
                "check": c.name,
                "runs": c.runs,
                "failures": c.failures,
                "status": if c.failures == 0 { "ok" } else { "FAIL" },
            })
        })
        .collect();
    payload["checks"] = Value::Array(checks);
    let headers = ["check", "runs", "failures", "status"].iter().map(|s| s.to_string()).collect();
    let rows = report
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.runs.to_string(),
                c.failures.to_string(),
                if c.failures == 0 { "ok".to_string() } else { "FAIL".to_string() },
            ]
        })
        .collect();
    CommandOutput::with_rows(payload, Rows { headers, rows })
}
