//! Instance documents.
//!
//! A TOML document with fixed field names. Players are numbered from 1 and
//! every rational is a `"num/den"` (or integer) string so values survive the
//! round trip exactly:
//!
//! ```toml
//! kind = "SwC"
//! n = 3
//! m = 3
//! conflict_edges = [[1, 2], [1, 3], [2, 3]]
//! friendship_edges = []
//! machine_values = ["61/10", "0", "0"]
//! ```
//!
//! `alpha`, `beta`, `gamma` are required for BwCF and rejected elsewhere.
//! `edge_weights` is a list of `{ edge = [i, j], weight = "w" }` tables
//! (sharing games only).

use serde::{Deserialize, Serialize};

use crate::error::{GameError, Result};
use crate::game::{CostWeights, GameKind, Instance};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    kind: String,
    n: i64,
    m: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gamma: Option<String>,
    #[serde(default)]
    conflict_edges: Vec<[i64; 2]>,
    #[serde(default)]
    friendship_edges: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    machine_values: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    edge_weights: Vec<WeightEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightEntry {
    edge: [i64; 2],
    weight: String,
}

fn schema(field: impl Into<String>, reason: impl Into<String>) -> GameError {
    GameError::InvalidInstance {
        field: field.into(),
        reason: reason.into(),
    }
}

fn rational_field(field: &str, text: &str) -> Result<Rational> {
    parse_rational(text).ok_or_else(|| schema(field, format!("not a rational: {text:?}")))
}

fn count_field(field: &str, v: i64) -> Result<usize> {
    if v < 1 {
        return Err(schema(field, format!("must be >= 1, got {v}")));
    }
    Ok(v as usize)
}

fn edge_list(field: &str, n: usize, raw: &[[i64; 2]]) -> Result<Vec<(usize, usize)>> {
    raw.iter()
        .enumerate()
        .map(|(idx, &[a, b])| {
            let path = format!("{field}[{idx}]");
            let endpoint = |v: i64| -> Result<usize> {
                if v < 1 || v as usize > n {
                    return Err(schema(path.clone(), format!("endpoint {v} not in 1..={n}")));
                }
                Ok(v as usize - 1)
            };
            Ok((endpoint(a)?, endpoint(b)?))
        })
        .collect()
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: Document = toml::from_str(text).map_err(|e| GameError::Parse(e.to_string()))?;
    let kind: GameKind = doc.kind.parse()?;
    let n = count_field("n", doc.n)?;
    let m = count_field("m", doc.m)?;

    let mut b = Instance::builder(kind, n, m)
        .conflicts(edge_list("conflict_edges", n, &doc.conflict_edges)?)
        .friendships(edge_list("friendship_edges", n, &doc.friendship_edges)?);

    let weight_fields = [&doc.alpha, &doc.beta, &doc.gamma];
    if kind == GameKind::BwCF {
        let get = |name: &str, v: &Option<String>| -> Result<Rational> {
            let text = v.as_deref().ok_or_else(|| schema(name, "required for BwCF"))?;
            rational_field(name, text)
        };
        b = b.weights(CostWeights::new(
            get("alpha", &doc.alpha)?,
            get("beta", &doc.beta)?,
            get("gamma", &doc.gamma)?,
        ));
    } else if let Some(pos) = weight_fields.iter().position(|v| v.is_some()) {
        let name = ["alpha", "beta", "gamma"][pos];
        return Err(schema(name, format!("only BwCF takes {name}")));
    }

    if let Some(values) = &doc.machine_values {
        let parsed = values
            .iter()
            .enumerate()
            .map(|(k, t)| rational_field(&format!("machine_values[{k}]"), t))
            .collect::<Result<Vec<_>>>()?;
        b = b.machine_values(parsed);
    }
    for (idx, entry) in doc.edge_weights.iter().enumerate() {
        let path = format!("edge_weights[{idx}]");
        let (a, c) = edge_list(&path, n, &[entry.edge])?[0];
        b = b.edge_weight(a, c, rational_field(&format!("{path}.weight"), &entry.weight)?);
    }
    b.build()
}

pub fn write_instance(inst: &Instance) -> String {
    let one_based = |edges: &[crate::game::Edge]| -> Vec<[i64; 2]> {
        edges
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                [a as i64 + 1, b as i64 + 1]
            })
            .collect()
    };
    let bwcf = inst.kind() == GameKind::BwCF;
    let w = inst.weights();
    let doc = Document {
        kind: inst.kind().tag().to_string(),
        n: inst.n() as i64,
        m: inst.m() as i64,
        alpha: bwcf.then(|| format_rational(&w.alpha)),
        beta: bwcf.then(|| format_rational(&w.beta)),
        gamma: bwcf.then(|| format_rational(&w.gamma)),
        conflict_edges: one_based(inst.conflict_edges()),
        friendship_edges: one_based(inst.friendship_edges()),
        machine_values: inst
            .machine_values()
            .map(|p| p.iter().map(format_rational).collect()),
        edge_weights: inst
            .edge_weights()
            .iter()
            .map(|(e, w)| {
                let (a, b) = e.endpoints();
                WeightEntry {
                    edge: [a as i64 + 1, b as i64 + 1],
                    weight: format_rational(w),
                }
            })
            .collect(),
    };
    toml::to_string(&doc).expect("instance documents always serialize")
}
