//! Algebra specifications in JSON.
//!
//! Three shapes are accepted:
//!
//! * `{"catalog": NAME, "params": {...}}`
//! * `{"dim": n, "labels": [...], "brackets": [[i, j, k, s], ...], "metric": [[i, j, s], ...]}`
//!   with 0-based indices, brackets only for `i < j`, and the metric symmetrized
//! * `{"extension": {"g": SPEC, "h": {"dim", "labels", "brackets", "form"}, "pi": [matrix, ...]}}`

use crate::error::{CliError, CliResult};
use crate::json::{
    array, index, matrix_from_json, matrix_to_json, scalar_from_json, scalar_to_json, vector_from_json, vector_to_json,
};
use serde_json::{json, Map, Value};
use spinhol::catalog::{self, Param, ParamKind, Params};
use spinhol::extension::{double_extend, ExtensionData, NormalDerivationSet};
use spinhol::lie::{default_labels, DegenerateFormAlgebra, LieAlgebra, MetricLieAlgebra};
use spinhol::{Matrix, Scalar};
use std::collections::BTreeMap;
use std::hash::{DefaultHasher, Hash, Hasher};

#[derive(Clone, Debug, PartialEq)]
pub enum Identity {
    Catalog { name: String, params: Value },
    Explicit { hash: String },
}

impl Identity {
    pub fn to_json(&self) -> Value {
        match self {
            Identity::Catalog { name, params } => json!({ "catalog": name, "params": params }),
            Identity::Explicit { hash } => json!({ "hash": hash }),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Identity::Catalog { name, params } if params.as_object().is_some_and(Map::is_empty) => name.clone(),
            Identity::Catalog { name, params } => format!("{name} {params}"),
            Identity::Explicit { hash } => format!("explicit {hash}"),
        }
    }
}

/// A parsed specification, ready for analysis.
#[derive(Clone, Debug)]
pub struct Input {
    pub identity: Identity,
    pub algebra: MetricLieAlgebra,
    pub extension: Option<ExtensionData>,
    pub tower: Option<NormalDerivationSet>,
}

pub fn parse_spec(text: &str) -> CliResult<Input> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::parse(format!("malformed JSON: {e}")))?;
    spec_from_value(&v, "$")
}

fn object<'a>(v: &'a Value, path: &str) -> CliResult<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| CliError::parse(format!("{path}: expected an object")))
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> CliResult<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(CliError::parse(format!("{path}: unknown field `{k}`"))),
        None => Ok(()),
    }
}

pub fn spec_from_value(v: &Value, path: &str) -> CliResult<Input> {
    let obj = object(v, path)?;
    if obj.contains_key("catalog") {
        check_keys(obj, &["catalog", "params"], path)?;
        let name =
            obj["catalog"].as_str().ok_or_else(|| CliError::parse(format!("{path}.catalog: expected a string")))?;
        let params = parse_params(name, obj.get("params"), &format!("{path}.params"))?;
        return from_catalog(name, &params);
    }
    if let Some(ext) = obj.get("extension") {
        check_keys(obj, &["extension"], path)?;
        let data = extension_from_value(ext, &format!("{path}.extension"))?;
        let algebra = double_extend(&data)?;
        let identity = Identity::Explicit { hash: structure_hash(&algebra) };
        return Ok(Input { identity, algebra, extension: Some(data), tower: None });
    }
    check_keys(obj, &["dim", "labels", "brackets", "metric"], path)?;
    let (algebra, metric) = explicit_parts(obj, "metric", path)?;
    let algebra = MetricLieAlgebra::new(algebra, metric);
    let identity = Identity::Explicit { hash: structure_hash(&algebra) };
    Ok(Input { identity, algebra, extension: None, tower: None })
}

pub fn from_catalog(name: &str, params: &Params) -> CliResult<Input> {
    let entry = catalog::catalog(name, params)?;
    let identity = Identity::Catalog { name: entry.name.clone(), params: params_to_json(params) };
    Ok(Input { identity, algebra: entry.algebra, extension: entry.extension.map(|x| x.data), tower: entry.tower })
}

fn explicit_parts(obj: &Map<String, Value>, form_key: &str, path: &str) -> CliResult<(LieAlgebra, Matrix)> {
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::parse(format!("{path}.dim: expected a non-negative integer")))? as usize;
    let labels = match obj.get("labels") {
        None => default_labels("e", dim),
        Some(l) => {
            let l = array(l, &format!("{path}.labels"))?
                .iter()
                .map(|x| x.as_str().map(str::to_string))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| CliError::parse(format!("{path}.labels: expected strings")))?;
            if l.len() != dim {
                return Err(CliError::parse(format!("{path}.labels: expected {dim} labels, got {}", l.len())));
            }
            l
        }
    };
    let mut brackets = Vec::new();
    let mut seen = BTreeMap::new();
    if let Some(b) = obj.get("brackets") {
        for (n, entry) in array(b, &format!("{path}.brackets"))?.iter().enumerate() {
            let p = format!("{path}.brackets[{n}]");
            let e = array(entry, &p)?;
            if e.len() != 4 {
                return Err(CliError::parse(format!("{p}: expected [i, j, k, scalar]")));
            }
            let i = index(&e[0], dim, &format!("{p}[0]"))?;
            let j = index(&e[1], dim, &format!("{p}[1]"))?;
            let k = index(&e[2], dim, &format!("{p}[2]"))?;
            if i >= j {
                return Err(CliError::parse(format!("{p}: brackets are listed only for i < j")));
            }
            if seen.insert((i, j, k), ()).is_some() {
                return Err(CliError::parse(format!("{p}: duplicate entry ({i}, {j}, {k})")));
            }
            brackets.push((i, j, k, scalar_from_json(&e[3], &format!("{p}[3]"))?));
        }
    }
    let algebra = LieAlgebra::from_brackets(labels, &brackets)?;
    let mut metric = Matrix::zeros(dim, dim);
    let mut set = vec![false; dim * dim];
    if let Some(m) = obj.get(form_key) {
        for (n, entry) in array(m, &format!("{path}.{form_key}"))?.iter().enumerate() {
            let p = format!("{path}.{form_key}[{n}]");
            let e = array(entry, &p)?;
            if e.len() != 3 {
                return Err(CliError::parse(format!("{p}: expected [i, j, scalar]")));
            }
            let i = index(&e[0], dim, &format!("{p}[0]"))?;
            let j = index(&e[1], dim, &format!("{p}[1]"))?;
            let s = scalar_from_json(&e[2], &format!("{p}[2]"))?;
            if set[i * dim + j] && metric[(i, j)] != s {
                return Err(CliError::parse(format!("{p}: conflicting value for ({i}, {j})")));
            }
            set[i * dim + j] = true;
            set[j * dim + i] = true;
            metric[(i, j)] = s.clone();
            metric[(j, i)] = s;
        }
    }
    Ok((algebra, metric))
}

fn extension_from_value(v: &Value, path: &str) -> CliResult<ExtensionData> {
    let obj = object(v, path)?;
    check_keys(obj, &["g", "h", "pi"], path)?;
    let field = |k: &str| obj.get(k).ok_or_else(|| CliError::parse(format!("{path}: missing `{k}`")));
    let g = spec_from_value(field("g")?, &format!("{path}.g"))?.algebra;
    let h_obj = object(field("h")?, &format!("{path}.h"))?;
    check_keys(h_obj, &["dim", "labels", "brackets", "form"], &format!("{path}.h"))?;
    let (h_alg, form) = explicit_parts(h_obj, "form", &format!("{path}.h"))?;
    let h = DegenerateFormAlgebra::new(h_alg, form);
    let pi_path = format!("{path}.pi");
    let pi = array(field("pi")?, &pi_path)?
        .iter()
        .enumerate()
        .map(|(a, m)| {
            let p = format!("{pi_path}[{a}]");
            let m = matrix_from_json(m, &p)?;
            if m.rows() != g.dim() || m.cols() != g.dim() {
                return Err(CliError::parse(format!("{p}: expected a {0}x{0} matrix", g.dim())));
            }
            Ok(m)
        })
        .collect::<CliResult<Vec<_>>>()?;
    if pi.len() != h.dim() {
        return Err(CliError::parse(format!("{pi_path}: expected {} matrices, got {}", h.dim(), pi.len())));
    }
    let data = ExtensionData::new(g, h, pi);
    data.validate()?;
    Ok(data)
}

/// Parse catalog parameters according to the family's declared kinds.
pub fn parse_params(name: &str, v: Option<&Value>, path: &str) -> CliResult<Params> {
    let kinds = catalog::param_kinds(name)?;
    let mut out = Params::new();
    let Some(v) = v else { return Ok(out) };
    for (key, val) in object(v, path)? {
        let p = format!("{path}.{key}");
        let (_, kind) = kinds
            .iter()
            .find(|(k, _)| k == key)
            .ok_or_else(|| CliError::parse(format!("{p}: unknown parameter for `{name}`")))?;
        let param = match kind {
            ParamKind::Scalar => Param::Scalar(scalar_from_json(val, &p)?),
            ParamKind::List => match val {
                Value::Array(_) => Param::List(vector_from_json(val, &p)?),
                other => Param::List(vec![scalar_from_json(other, &p)?]),
            },
            ParamKind::Matrix => Param::Matrix(matrix_from_json(val, &p)?),
            ParamKind::Matrices => Param::Matrices(
                array(val, &p)?
                    .iter()
                    .enumerate()
                    .map(|(i, m)| matrix_from_json(m, &format!("{p}[{i}]")))
                    .collect::<CliResult<_>>()?,
            ),
        };
        out.insert(key.clone(), param);
    }
    Ok(out)
}

pub fn params_to_json(params: &Params) -> Value {
    let map = params
        .iter()
        .map(|(k, p)| {
            let v = match p {
                Param::Scalar(s) => scalar_to_json(s),
                Param::List(l) => vector_to_json(l),
                Param::Matrix(m) => matrix_to_json(m),
                Param::Matrices(ms) => Value::Array(ms.iter().map(matrix_to_json).collect()),
            };
            (k.clone(), v)
        })
        .collect();
    Value::Object(map)
}

/// Explicit structure-constant spec of a metric Lie algebra.
pub fn export_spec(a: &MetricLieAlgebra) -> Value {
    let n = a.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (k, s) in a.algebra.bracket_basis(i, j).iter().enumerate() {
                if !s.is_zero() {
                    brackets.push(json!([i, j, k, scalar_to_json(s)]));
                }
            }
        }
    }
    let mut metric = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s: &Scalar = &a.metric[(i, j)];
            if !s.is_zero() {
                metric.push(json!([i, j, scalar_to_json(s)]));
            }
        }
    }
    json!({ "dim": n, "labels": a.algebra.labels(), "brackets": brackets, "metric": metric })
}

fn structure_hash(a: &MetricLieAlgebra) -> String {
    let mut h = DefaultHasher::new();
    export_spec(a).to_string().hash(&mut h);
    format!("{:016x}", h.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2_text() -> &'static str {
        r#"{"dim": 3, "labels": ["e1", "e2", "e3"],
            "brackets": [[0, 1, 2, 1], [0, 2, 1, -1], [1, 2, 0, 1]],
            "metric": [[0, 0, ["1", "0", "0", "0"]], [1, 1, 1], [2, 2, 1]]}"#
    }

    #[test]
    fn catalog_spec() {
        let input = parse_spec(r#"{"catalog": "osc", "params": {"lambda": ["1"]}}"#).unwrap();
        assert_eq!(input.algebra.dim(), 4);
        assert!(input.extension.is_some());
        assert_eq!(input.identity.label(), r#"osc {"lambda":[["1","0","0","0"]]}"#);
    }

    #[test]
    fn explicit_su2_is_valid() {
        let input = parse_spec(su2_text()).unwrap();
        assert!(input.algebra.validate().is_valid());
        assert_eq!(input.algebra.algebra.bracket_basis(0, 1)[2], Scalar::one());
        assert!(matches!(input.identity, Identity::Explicit { .. }));
    }

    #[test]
    fn parse_errors() {
        for (text, needle) in [
            (r#"{"dim": 2, "brackets": [[0, 2, 1, 1]]}"#, "brackets[0][1]"),
            (r#"{"dim": 2, "brackets": [[1, 0, 1, 1]]}"#, "i < j"),
            (r#"{"dim": 2, "metric": [[0, 0, "x"]]}"#, "metric[0][2]"),
            (r#"{"dim": 2, "metrix": []}"#, "metrix"),
            (r#"{"catalog": "osc", "params": {"mu": 1}}"#, "mu"),
            ("{\"dim\": 2,\n", "line 2"),
        ] {
            let err = parse_spec(text).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{text}");
            assert!(err.to_string().contains(needle), "{err}");
        }
        assert_eq!(parse_spec(r#"{"catalog": "nope"}"#).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn extension_spec_builds_oscillator() {
        let text = r#"{"extension": {
            "g": {"dim": 2, "metric": [[0, 0, 1], [1, 1, 1]]},
            "h": {"dim": 1, "form": []},
            "pi": [[[0, -1], [1, 0]]]}}"#;
        let input = parse_spec(text).unwrap();
        let osc = from_catalog("osc", &Params::new()).unwrap();
        assert_eq!(input.algebra.metric, osc.algebra.metric);
        assert_eq!(input.algebra.algebra.structure(), osc.algebra.algebra.structure());
        let bad = text.replace("[[0, -1], [1, 0]]", "[[0, 1], [1, 0]]");
        assert_eq!(parse_spec(&bad).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn export_round_trip() {
        let osc = from_catalog("N3", &Params::new()).unwrap();
        let back = spec_from_value(&export_spec(&osc.algebra), "$").unwrap();
        assert_eq!(back.algebra, osc.algebra);
    }
}
