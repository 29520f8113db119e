//! The JSON structure-constant format for finite-dimensional algebras.
//!
//! ```json
//! {"dim": 2, "kind": "jordan", "labels": ["x", "y"], "parity": [0, 0],
//!  "degree": [1, 2], "table": [[0, 0, [1, 1, 1]]]}
//! ```
//!
//! Each table row is `[i, j, [k, num, den], …]`, meaning
//! `e_i e_j = Σ num/den · e_k`. Numerators and denominators may be JSON
//! integers or decimal strings. `kind` defaults to `jordan`; `degree` is
//! optional.

use anyhow::{anyhow, bail, Context, Result};
use freejord_core::kernel::Q;
use freejord_core::tkk::{AlgebraFD, Kind};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    #[serde(default)]
    kind: Option<String>,
    labels: Vec<String>,
    parity: Vec<u8>,
    #[serde(default)]
    degree: Option<Vec<u32>>,
    table: Vec<Vec<Value>>,
}

fn big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| anyhow!("coefficient {n} is not an integer")),
        Value::String(s) => s.parse().with_context(|| format!("coefficient {s:?}")),
        other => bail!("coefficient {other} is neither an integer nor a string"),
    }
}

fn index(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| anyhow!("index {v} is not a natural number"))
}

/// Exact integers as JSON numbers when they fit, strings otherwise.
pub fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFD> {
    let f: AlgebraFile = serde_json::from_str(text).context("malformed algebra file")?;
    if f.labels.len() != f.dim {
        bail!("dim is {} but there are {} labels", f.dim, f.labels.len());
    }
    let kind = match f.kind.as_deref() {
        None | Some("jordan") => Kind::Jordan,
        Some("lie") => Kind::Lie,
        Some(other) => bail!("unknown algebra kind {other:?}"),
    };
    let mut products = Vec::new();
    for row in &f.table {
        if row.len() < 2 {
            bail!("table row {row:?} needs at least i and j");
        }
        let (i, j) = (index(&row[0])?, index(&row[1])?);
        for term in &row[2..] {
            let t = term.as_array().filter(|t| t.len() == 3).ok_or_else(|| anyhow!("term {term} is not [k, num, den]"))?;
            let den = big(&t[2])?;
            if den == BigInt::from(0) {
                bail!("zero denominator in {term}");
            }
            products.push((i, j, index(&t[0])?, Q::new(big(&t[1])?, den)));
        }
    }
    Ok(AlgebraFD::new(kind, f.labels, f.parity, f.degree, &products)?)
}

pub fn algebra_to_json(a: &AlgebraFD) -> Value {
    let n = a.dim();
    let mut table = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let p = a.product(i, j);
            if p.is_empty() {
                continue;
            }
            let mut row = vec![json!(i), json!(j)];
            row.extend(p.iter().map(|(k, c)| json!([k, int_value(c.numer()), int_value(c.denom())])));
            table.push(Value::Array(row));
        }
    }
    let mut out = json!({
        "dim": n,
        "kind": if a.kind() == Kind::Jordan { "jordan" } else { "lie" },
        "labels": a.labels(),
        "parity": a.parities(),
        "table": table,
    });
    if let Some(d) = a.degrees() {
        out["degree"] = json!(d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use freejord_core::tkk::samples::symmetric_2x2;

    #[test]
    fn round_trip() {
        let a = symmetric_2x2();
        let text = algebra_to_json(&a).to_string();
        let b = parse_algebra(&text).unwrap();
        assert_eq!(algebra_to_json(&b), algebra_to_json(&a));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse_algebra("{}").is_err());
        let bad = r#"{"dim":1,"labels":["x"],"parity":[0],"table":[[0,0,[0,1,0]]]}"#;
        assert!(parse_algebra(bad).is_err());
        let big = r#"{"dim":1,"labels":["x"],"parity":[0],"table":[[0,0,[0,"1","1"]]]}"#;
        assert_eq!(parse_algebra(big).unwrap().dim(), 1);
        let not_comm = r#"{"dim":2,"labels":["x","y"],"parity":[0,0],"table":[[0,1,[1,1,1]]]}"#;
        assert!(parse_algebra(not_comm).is_err());
    }
}
