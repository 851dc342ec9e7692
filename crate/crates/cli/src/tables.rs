//! Reproduction of the classification tables and the su(2) weight tables.

use crate::error::{CliError, CliResult};
use crate::json::scalar_to_json;
use crate::spec::{from_catalog, params_to_json, parse_params};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use spinhol::catalog::{param_kinds, Param, Params};
use spinhol::geometry::classify;
use spinhol::spin::{parallel_spinor_dim, parallel_spinor_dim_extension, su2_weight_count, Su2Rep};
use spinhol::Scalar;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub catalog: String,
    pub params: Value,
    pub dim: usize,
    pub signature: String,
    pub geometry: String,
    pub scalar_curvature: Value,
    pub expected: usize,
    pub computed: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub number: u8,
    pub title: String,
    pub rows: Vec<TableRow>,
}

/// Expected count for a row, given its effective parameters.
#[derive(Clone, Copy, Debug)]
enum Expect {
    Fixed(usize),
    /// `2^m` with `m = len(lambda)`.
    PowerOfLambda,
    /// `2^{m}` with `m` the number of blocks of `A0`.
    PowerOfA0,
    /// `2^{[n/2]-1}` with `n = dim`.
    HalfDimMinusOne,
}

struct RowDef {
    label: &'static str,
    catalog: &'static str,
    defaults: Vec<(&'static str, Param)>,
    expect: Expect,
}

fn ints(xs: &[i64]) -> Param {
    Param::List(xs.iter().map(|&x| Scalar::from_i64(x)).collect())
}

fn scalar(x: i64) -> Param {
    Param::Scalar(Scalar::from_i64(x))
}

fn row(label: &'static str, catalog: &'static str, defaults: Vec<(&'static str, Param)>, expect: Expect) -> RowDef {
    RowDef { label, catalog, defaults, expect }
}

fn definitions(n: u8) -> Option<(&'static str, Vec<RowDef>)> {
    use Expect::*;
    Some(match n {
        1 => (
            "Lorentzian signature",
            vec![
                row("SL~(2,R), cB", "simple_sl2", vec![("c", scalar(1))], Fixed(0)),
                row("Osc(1)", "osc", vec![("lambda", ints(&[1]))], PowerOfLambda),
                row("Osc(1,1)", "osc", vec![("lambda", ints(&[1, 1]))], PowerOfLambda),
                row("Osc(1,1,1)", "osc", vec![("lambda", ints(&[1, 1, 1]))], PowerOfLambda),
            ],
        ),
        2 => (
            "signature (2, n-2)",
            vec![
                row("SL~(2,R), -cB", "simple_sl2", vec![("c", scalar(-1))], Fixed(0)),
                row("L2", "L2", vec![], Fixed(2)),
                row("L3", "L3", vec![], Fixed(3)),
                row("L2,λ (n=6)", "L2lambda", vec![("lambda", ints(&[1]))], HalfDimMinusOne),
                row("L3,λ (n=7)", "L3lambda", vec![("lambda", ints(&[1]))], HalfDimMinusOne),
                row("Osc(A0,U1)", "OscA0U1", vec![], PowerOfA0),
                row("D(A0,U1)", "D_A0U1", vec![], PowerOfA0),
            ],
        ),
        3 => (
            "dimension 3",
            vec![
                row("SU(2), -cB", "simple_su2", vec![("c", scalar(1))], Fixed(0)),
                row("SL~(2,R), -cB", "simple_sl2", vec![("c", scalar(-1))], Fixed(0)),
            ],
        ),
        4 => (
            "dimension 4",
            vec![
                row("Osc(1)", "osc", vec![("lambda", ints(&[1]))], PowerOfLambda),
                row("L2(1,1)", "L2", vec![], Fixed(2)),
            ],
        ),
        5 => ("dimension 5", vec![row("L3(1,2)", "L3", vec![], Fixed(3))]),
        6 => (
            "dimension 6",
            vec![
                row("Osc(1,λ)", "osc", vec![("lambda", ints(&[1, 1]))], PowerOfLambda),
                row("L2,λ(1,3)", "L2lambda", vec![("lambda", ints(&[1]))], HalfDimMinusOne),
                row("Spin(1,3)", "simple_sl2c", vec![("c", scalar(1))], Fixed(0)),
                row("T*SU(2)_c", "Tsu2", vec![("c", scalar(1))], Fixed(1)),
                row("T*SL~(2,R)_c", "Tsl2", vec![("c", scalar(1))], Fixed(1)),
                row("N1(2,2)", "N1", vec![], Fixed(8)),
                row("N2,t(2,2)", "N2", vec![("t", scalar(1))], Fixed(4)),
                row("N3,±(2,2)", "N3", vec![("sign", scalar(1))], Fixed(4)),
                row("N4,t(2,2)", "N4", vec![("t", scalar(1))], Fixed(4)),
                row("N5(2,2)", "N5", vec![], Fixed(4)),
                row("N6,t(2,2)", "N6", vec![("t", scalar(1))], Fixed(4)),
            ],
        ),
        _ => return None,
    })
}

fn geometry_text(f: &spinhol::geometry::CurvatureReport) -> String {
    if f.flat {
        "flat".into()
    } else if f.ricci_flat {
        "Ricci-flat".into()
    } else if let Some(k) = &f.einstein {
        format!("Einstein, Ric = {k}·g")
    } else if f.ricci_2step_nilpotent {
        "Ric² = 0".into()
    } else {
        "-".into()
    }
}

fn compute_row(def: &RowDef, overrides: &Params) -> CliResult<TableRow> {
    let kinds = param_kinds(def.catalog)?;
    let mut params: Params = def.defaults.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    for (k, v) in overrides {
        if kinds.iter().any(|(name, _)| name == k) {
            params.insert(k.clone(), v.clone());
        }
    }
    let input = from_catalog(def.catalog, &params)?;
    let a = &input.algebra;
    let curv = classify(a)?;
    let computed = match &input.extension {
        Some(e) => parallel_spinor_dim_extension(e)?,
        None => parallel_spinor_dim(a)?,
    };
    let expected = match def.expect {
        Expect::Fixed(k) => k,
        Expect::PowerOfLambda => match params.get("lambda") {
            Some(Param::List(l)) => 1 << l.len(),
            _ => 2,
        },
        Expect::PowerOfA0 => {
            let tower_or_g = input.tower.as_ref().map_or(a.dim() - 5, |t| t.n);
            1 << (tower_or_g / 2)
        }
        Expect::HalfDimMinusOne => 1 << (a.dim() / 2 - 1),
    };
    Ok(TableRow {
        label: def.label.to_string(),
        catalog: def.catalog.to_string(),
        params: params_to_json(&params),
        dim: a.dim(),
        signature: a.signature()?.to_string(),
        geometry: geometry_text(&curv),
        scalar_curvature: scalar_to_json(&curv.scalar),
        expected,
        computed,
        matches: expected == computed,
    })
}

/// Rebuild table `n` (1 to 6). `overrides` replaces row parameters for every
/// row whose family accepts the key, e.g. `{"t": 2}` or `{"c": 3}`.
pub fn reproduce_table(n: u8, overrides: Option<&Value>) -> CliResult<Table> {
    let (title, defs) = definitions(n).ok_or_else(|| CliError::parse(format!("no table {n}; expected 1 to 6")))?;
    let overrides = match overrides {
        None => Params::new(),
        Some(v) => {
            let obj = v.as_object().ok_or_else(|| CliError::parse("--params: expected an object"))?;
            let mut out = Params::new();
            for (k, val) in obj {
                let family = defs
                    .iter()
                    .map(|d| d.catalog)
                    .find(|c| param_kinds(c).is_ok_and(|ks| ks.iter().any(|(name, _)| name == k)))
                    .ok_or_else(|| {
                        CliError::parse(format!("--params.{k}: no row of table {n} takes this parameter"))
                    })?;
                let single = serde_json::json!({ k.clone(): val.clone() });
                out.extend(parse_params(family, Some(&single), "--params")?);
            }
            out
        }
    };
    let rows = defs.par_iter().map(|d| compute_row(d, &overrides)).collect::<CliResult<Vec<_>>>()?;
    Ok(Table { number: n, title: title.to_string(), rows })
}

impl Table {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::to_value(self).expect("table serializes")).expect("value serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("## Table {}: {}\n\n", self.number, self.title);
        s.push_str("| algebra | dim | signature | geometry | dim P expected | dim P computed | match |\n");
        s.push_str("|---|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} |",
                r.label,
                r.dim,
                r.signature,
                r.geometry,
                r.expected,
                r.computed,
                if r.matches { "yes" } else { "NO" }
            );
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Su2Table {
    pub rep: String,
    pub counts: Vec<(usize, i64)>,
}

pub const RHO_KMAX: usize = 24;
pub const SIGMA_KMAX: usize = 12;

pub fn su2_table(kind: Su2Rep, kmax: usize) -> CliResult<Su2Table> {
    let limit = match kind {
        Su2Rep::Rho => RHO_KMAX,
        Su2Rep::Sigma => SIGMA_KMAX,
    };
    if kmax == 0 || kmax > limit {
        return Err(CliError::parse(format!("--kmax must lie between 1 and {limit} for {kind}")));
    }
    let counts = (1..=kmax).into_par_iter().map(|k| (k, su2_weight_count(kind, k))).collect();
    Ok(Su2Table { rep: kind.to_string(), counts })
}

impl Su2Table {
    pub fn to_markdown(&self) -> String {
        let head = if self.rep == "rho" { "N0 - N2" } else { "N0' - N2'" };
        let mut s = format!("| k | {head} |\n|---|---|\n");
        for (k, c) in &self.counts {
            let _ = writeln!(s, "| {k} | {c} |");
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::to_value(self).expect("table serializes")).expect("value serializes")
    }
}
