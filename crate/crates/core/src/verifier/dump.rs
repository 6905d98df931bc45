//! JSON artifacts in the canonical scalar grammar.
//!
//! Matrices are nested arrays of scalar strings and every object has sorted
//! keys, so the same value always serializes to the same bytes.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::difcalc::{Calculus, OneForm};
use crate::error::{Error, Result};
use crate::funalg::{FunElement, FunKey};
use crate::qlie::{fit_sudbery, q_antisymmetry_report, structure_constants, SudberyFit, DIM};
use crate::repcat::{braiding, cg_system, r_matrix};
use crate::ScalarMatrix;

pub fn matrix_json(m: &ScalarMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| Value::String(m[(r, c)].to_string())).collect()))
            .collect(),
    )
}

/// `[twoJ, a, b, scalar]` records, sorted by key.
pub fn element_json(a: &FunElement) -> Value {
    Value::Array(a.records().into_iter().map(|(j, r, c, s)| json!([j, r, c, s])).collect())
}

pub fn form_json(w: &OneForm) -> Value {
    Value::Array(w.coeffs.iter().map(element_json).collect())
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn structure_constants_json() -> Result<Value> {
    let c = structure_constants()?;
    Ok(Value::Array(
        c.iter()
            .map(|by_j| {
                Value::Array(
                    by_j.iter()
                        .map(|by_i| Value::Array(by_i.iter().map(|x| Value::String(x.to_string())).collect()))
                        .collect(),
                )
            })
            .collect(),
    ))
}

pub fn gamma_json(calc: &Calculus) -> Result<Value> {
    Ok(matrix_json(&calc.gamma_metric()?))
}

/// `d(T_a^b)` for the four fundamental matrix elements, keyed `pi1[a][b]`.
pub fn d_table_json(calc: &Calculus) -> Result<Value> {
    let mut out = Map::new();
    for key in FunKey::all(1) {
        out.insert(key.to_string(), form_json(&calc.exterior_d(&FunElement::basis(key))?));
    }
    Ok(Value::Object(out))
}

pub fn cg_json(mu: u32, nu: u32) -> Result<Value> {
    let cg = cg_system(mu, nu)?;
    let components = cg
        .components
        .iter()
        .map(|c| {
            json!({
                "twoJ": c.two_j,
                "embed": matrix_json(&c.embed),
                "project": matrix_json(&c.project),
            })
        })
        .collect();
    Ok(json!({ "mu": mu, "nu": nu, "components": Value::Array(components) }))
}

pub fn rmatrix_json(mu: u32, nu: u32) -> Result<Value> {
    Ok(json!({
        "mu": mu,
        "nu": nu,
        "braiding": matrix_json(braiding(mu, nu)?.as_ref()),
        "r": matrix_json(&r_matrix(mu, nu)?),
    }))
}

pub fn sudbery_json(fit: &SudberyFit) -> Result<Value> {
    let mut c = Map::new();
    for (mu, m) in fit.c.iter() {
        c.insert(mu.to_string(), matrix_json(m));
    }
    let mut f = Map::new();
    for j in 0..DIM {
        for i in 0..DIM {
            let mut per = Map::new();
            for (nu, m) in fit.f[j][i].iter() {
                per.insert(nu.to_string(), matrix_json(m));
            }
            f.insert(format!("f[{j}][{i}]"), Value::Object(per));
        }
    }
    let pairs: Vec<Value> = fit.pairs.iter().map(|(a, b)| json!([a, b])).collect();
    Ok(json!({ "pairs": pairs, "C": Value::Object(c), "f": Value::Object(f) }))
}

pub fn antisymmetry_json() -> Result<Value> {
    let report = q_antisymmetry_report(&structure_constants()?);
    let lines: Vec<Value> = report.render().lines().map(|l| Value::String(l.to_string())).collect();
    Ok(Value::Array(lines))
}

/// Pairs `{0, 1, 2}²`, the default family for the fit.
pub fn default_sudbery_pairs() -> Vec<(u32, u32)> {
    grid(&[0, 1, 2])
}

pub fn grid(labels: &[u32]) -> Vec<(u32, u32)> {
    labels.iter().flat_map(|&a| labels.iter().map(move |&b| (a, b))).collect()
}

fn label(word: Option<&String>, selector: &str) -> Result<u32> {
    word.ok_or_else(|| Error::Usage(format!("`{selector}` takes two labels")))?
        .parse()
        .map_err(|_| Error::Usage(format!("`{selector}` labels must be non-negative integers")))
}

pub const SELECTORS: &[&str] = &[
    "structure-constants",
    "gamma",
    "d-table",
    "antisymmetry",
    "sudbery",
    "cg <twoJ> <twoJ>",
    "rmatrix <twoJ> <twoJ>",
];

/// Serializes the artifact named by `selector`.
pub fn dump(selector: &[String], max_two_j: u32) -> Result<Value> {
    let Some(head) = selector.first() else {
        return Err(Error::Usage(format!("missing selector; one of: {}", SELECTORS.join(", "))));
    };
    let arity = match head.as_str() {
        "cg" | "rmatrix" => 3,
        _ => 1,
    };
    if selector.len() != arity {
        return Err(Error::Usage(format!("`{}` takes {} argument(s)", head, arity - 1)));
    }
    match head.as_str() {
        "structure-constants" => structure_constants_json(),
        "gamma" => gamma_json(&Calculus::new(max_two_j)?),
        "d-table" => d_table_json(&Calculus::new(max_two_j)?),
        "antisymmetry" => antisymmetry_json(),
        "sudbery" => sudbery_json(&fit_sudbery(&default_sudbery_pairs())?),
        "cg" => cg_json(label(selector.get(1), head)?, label(selector.get(2), head)?),
        "rmatrix" => rmatrix_json(label(selector.get(1), head)?, label(selector.get(2), head)?),
        other => Err(Error::Usage(format!(
            "unknown selector `{other}`; one of: {}",
            SELECTORS.join(", ")
        ))),
    }
}

/// Outcome of comparing an artifact against its pinned file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenStatus {
    Match,
    Regenerated,
    Missing,
    Differs { line: usize },
}

/// Compares `text` with `dir/name`, overwriting it first when `regen` is set.
pub fn check_golden(dir: &Path, name: &str, text: &str, regen: bool) -> Result<GoldenStatus> {
    let path = dir.join(name);
    if regen {
        std::fs::create_dir_all(dir)?;
        std::fs::write(&path, text)?;
        return Ok(GoldenStatus::Regenerated);
    }
    let pinned = match std::fs::read_to_string(&path) {
        Ok(s) => s,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(GoldenStatus::Missing),
        Err(e) => return Err(e.into()),
    };
    if pinned == text {
        return Ok(GoldenStatus::Match);
    }
    let line = pinned
        .lines()
        .zip(text.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| pinned.lines().count().min(text.lines().count()));
    Ok(GoldenStatus::Differs { line: line + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn cg_dump_has_two_components() {
        let v = dump(&words("cg 1 1"), 4).unwrap();
        let comps = v["components"].as_array().unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1]["twoJ"], 0);
        assert_eq!(comps[1]["embed"], json!([["0"], ["1"], ["-s^2"], ["0"]]));
    }

    #[test]
    fn unknown_selector_is_usage_error() {
        assert!(matches!(dump(&words("nonsense"), 4), Err(Error::Usage(_))));
        assert!(matches!(dump(&words("cg 1"), 4), Err(Error::Usage(_))));
        assert!(matches!(dump(&words("rmatrix 1 x"), 4), Err(Error::Usage(_))));
        assert!(matches!(dump(&[], 4), Err(Error::Usage(_))));
    }

    #[test]
    fn structure_constants_dump_is_stable() {
        let a = to_text(&dump(&words("structure-constants"), 4).unwrap());
        let b = to_text(&structure_constants_json().unwrap());
        assert_eq!(a, b);
        assert_eq!(serde_json::from_str::<Value>(&a).unwrap().as_array().unwrap().len(), 3);
    }

    #[test]
    fn golden_round_trip() {
        let dir = std::env::temp_dir().join(format!("qcalc-golden-{}", std::process::id()));
        assert_eq!(check_golden(&dir, "x.json", "a\nb\n", false).unwrap(), GoldenStatus::Missing);
        assert_eq!(check_golden(&dir, "x.json", "a\nb\n", true).unwrap(), GoldenStatus::Regenerated);
        assert_eq!(check_golden(&dir, "x.json", "a\nb\n", false).unwrap(), GoldenStatus::Match);
        assert_eq!(
            check_golden(&dir, "x.json", "a\nc\n", false).unwrap(),
            GoldenStatus::Differs { line: 2 }
        );
        std::fs::remove_dir_all(dir).unwrap();
    }
}
