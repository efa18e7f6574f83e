//! The JSON document layout is a stable contract: same keys, same order.

use serde_json::Value;
use torus_charvar::modular::KnotType;
use torus_charvar::tool::{emit_json, parse_json};
use torus_charvar::variety::enumerate_variety;

/// Every `"key":` in document order.
fn keys(text: &str) -> Vec<&str> {
    // quoted strings sit at the odd positions of the split
    let parts: Vec<&str> = text.split('"').collect();
    (1..parts.len().saturating_sub(1))
        .step_by(2)
        .filter(|&i| parts[i + 1].starts_with(':'))
        .map(|i| parts[i])
        .collect()
}

fn assert_close(got: &Value, want: &Value, path: &str) {
    match (got, want) {
        (Value::Number(g), Value::Number(w)) if w.is_f64() || g.is_f64() => {
            let (g, w) = (g.as_f64().unwrap(), w.as_f64().unwrap());
            assert!((g - w).abs() <= 1e-12, "{path}: {g} vs {w}");
        }
        (Value::Array(g), Value::Array(w)) => {
            assert_eq!(g.len(), w.len(), "{path}");
            for (i, (g, w)) in g.iter().zip(w).enumerate() {
                assert_close(g, w, &format!("{path}[{i}]"));
            }
        }
        (Value::Object(g), Value::Object(w)) => {
            assert_eq!(g.len(), w.len(), "{path}");
            for (k, w) in w {
                assert_close(&g[k], w, &format!("{path}.{k}"));
            }
        }
        _ => assert_eq!(got, want, "{path}"),
    }
}

fn check(m: i64, n: i64, golden: &str) {
    let text = emit_json(&enumerate_variety(KnotType::new(m, n).unwrap()).unwrap());
    assert_eq!(keys(&text), keys(golden.trim()));
    let got: Value = serde_json::from_str(&text).unwrap();
    let want: Value = serde_json::from_str(golden).unwrap();
    assert_close(&got, &want, "$");
    parse_json(golden).unwrap();
}

#[test]
fn trefoil_matches_golden() {
    check(2, 3, include_str!("golden/trefoil.json"));
}

#[test]
fn unknot_matches_golden() {
    let golden = include_str!("golden/unknot.json");
    assert_eq!(
        keys(golden),
        [
            "m",
            "n",
            "components",
            "type",
            "counts",
            "irr_lines",
            "intersection_points"
        ]
    );
    check(1, 2, golden);
}

#[test]
fn trefoil_key_order() {
    let k = keys(include_str!("golden/trefoil.json"));
    let irr = k.iter().position(|&x| x == "kp").unwrap();
    assert_eq!(
        k[irr - 2..irr + 6],
        [
            "type",
            "k",
            "kp",
            "lambda",
            "mu",
            "psi_base",
            "psi_dir",
            "intersections"
        ]
    );
    assert_eq!(
        k[irr + 6..irr + 11],
        ["endpoint", "l_raw", "l_folded", "s", "psi"]
    );
}
