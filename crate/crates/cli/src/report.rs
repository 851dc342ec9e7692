//! The analysis pipeline and its JSON / markdown renderings.

use crate::json::{matrix_to_json, scalar_to_json};
use crate::spec::Input;
use serde::Serialize;
use serde_json::Value;
use spinhol::geometry::{classify, killing_blocks, BlockPair};
use spinhol::holonomy::holonomy_algebra;
use spinhol::spin::{parallel_spinor_dim, parallel_spinor_dim_extension, spinor_lower_bound};
use spinhol::{Error, Matrix, Scalar};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockReport {
    pub formula: Value,
    pub computed: Value,
    pub agrees: bool,
}

impl From<&BlockPair> for BlockReport {
    fn from(b: &BlockPair) -> Self {
        BlockReport { formula: matrix_to_json(&b.formula), computed: matrix_to_json(&b.computed), agrees: b.agrees() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KillingBlockReport {
    pub g_g: BlockReport,
    pub hstar_d: BlockReport,
    pub h_h: BlockReport,
    pub g_h: BlockReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Flags {
    pub flat: bool,
    pub ricci_flat: bool,
    pub ricci_2step_nilpotent: bool,
    pub einstein: bool,
    pub einstein_constant: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HolonomyReport {
    pub dim: usize,
    pub abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound: usize,
    pub exact: usize,
}

/// Everything computed for one algebra. Fields after `violations` are absent
/// when validation fails.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub identity: Value,
    pub dim: usize,
    pub labels: Vec<String>,
    pub valid: bool,
    pub violations: Vec<String>,
    pub signature: Option<String>,
    pub center_dim: Option<usize>,
    pub derived_dim: Option<usize>,
    pub killing: Option<Value>,
    pub killing_blocks: Option<KillingBlockReport>,
    pub ricci: Option<Value>,
    pub scalar_curvature: Option<Value>,
    pub flags: Option<Flags>,
    pub holonomy: Option<HolonomyReport>,
    pub parallel_spinor_dim: Option<usize>,
    pub parallel_spinor_error: Option<String>,
    pub lower_bound: Option<BoundReport>,
    pub lower_bound_note: Option<String>,
}

fn scalar_text(s: &Scalar) -> String {
    s.to_string()
}

pub fn analyze(input: &Input) -> AnalysisReport {
    let a = &input.algebra;
    let validation = a.validate();
    let mut report = AnalysisReport {
        identity: input.identity.to_json(),
        dim: a.dim(),
        labels: a.algebra.labels().to_vec(),
        valid: validation.is_valid(),
        violations: validation.violations.iter().map(ToString::to_string).collect(),
        signature: None,
        center_dim: None,
        derived_dim: None,
        killing: None,
        killing_blocks: None,
        ricci: None,
        scalar_curvature: None,
        flags: None,
        holonomy: None,
        parallel_spinor_dim: None,
        parallel_spinor_error: None,
        lower_bound: None,
        lower_bound_note: None,
    };
    if !report.valid {
        return report;
    }
    report.signature = a.signature().ok().map(|s| s.to_string());
    report.center_dim = Some(a.algebra.center().dim());
    report.derived_dim = Some(a.algebra.derived_subalgebra().dim());
    report.killing = Some(matrix_to_json(&a.algebra.killing_form()));
    if let Some(e) = &input.extension {
        let d = spinhol::extension::double_extend(e).expect("validated extension");
        let b = killing_blocks(e, &d);
        report.killing_blocks = Some(KillingBlockReport {
            g_g: (&b.gg).into(),
            hstar_d: (&b.hstar_d).into(),
            h_h: (&b.hh).into(),
            g_h: (&b.gh).into(),
        });
    }
    let curv = classify(a).expect("valid metric is invertible");
    report.ricci = Some(matrix_to_json(&curv.ricci));
    report.scalar_curvature = Some(scalar_to_json(&curv.scalar));
    report.flags = Some(Flags {
        flat: curv.flat,
        ricci_flat: curv.ricci_flat,
        ricci_2step_nilpotent: curv.ricci_2step_nilpotent,
        einstein: curv.einstein.is_some(),
        einstein_constant: curv.einstein.as_ref().map(scalar_to_json),
    });
    let hol = holonomy_algebra(a);
    report.holonomy = Some(HolonomyReport { dim: hol.dim(), abelian: hol.is_abelian });
    let count = match &input.extension {
        Some(e) => parallel_spinor_dim_extension(e),
        None => parallel_spinor_dim(a),
    };
    match count {
        Ok(k) => report.parallel_spinor_dim = Some(k),
        Err(e) => report.parallel_spinor_error = Some(e.to_string()),
    }
    if let Some(e) = &input.extension {
        match spinor_lower_bound(e) {
            Ok(t) => report.lower_bound = Some(BoundReport { bound: t.bound, exact: t.exact }),
            Err(Error::Hypothesis(msg)) => report.lower_bound_note = Some(format!("not applicable: {msg}")),
            Err(err) => report.lower_bound_note = Some(err.to_string()),
        }
    }
    report
}

impl AnalysisReport {
    /// Canonical JSON: sorted keys, two-space indentation.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let title = match self.identity.get("catalog") {
            Some(name) => format!("{} {}", name.as_str().unwrap_or_default(), self.identity["params"]),
            None => format!("explicit algebra {}", self.identity["hash"].as_str().unwrap_or_default()),
        };
        let _ = writeln!(s, "## {title}\n");
        let _ = writeln!(s, "| quantity | value |");
        let _ = writeln!(s, "|---|---|");
        let mut row = |k: &str, v: String| {
            let _ = writeln!(s, "| {k} | {v} |");
        };
        row("dim", self.dim.to_string());
        row("basis", self.labels.join(", "));
        row("valid", self.valid.to_string());
        if !self.valid {
            row("violations", self.violations.join("; "));
        }
        let opt = |v: &Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        if let Some(sig) = &self.signature {
            row("signature", sig.clone());
        }
        row("center dim", opt(&self.center_dim));
        row("derived dim", opt(&self.derived_dim));
        if let Some(sc) = &self.scalar_curvature {
            row("scalar curvature", json_scalar_text(sc));
        }
        if let Some(f) = &self.flags {
            let mut g = Vec::new();
            if f.flat {
                g.push("flat".to_string());
            } else if f.ricci_flat {
                g.push("Ricci-flat".to_string());
            } else if f.ricci_2step_nilpotent {
                g.push("Ric² = 0".to_string());
            }
            if let (Some(k), false) = (&f.einstein_constant, f.ricci_flat) {
                g.push(format!("Einstein, Ric = {}·g", json_scalar_text(k)));
            }
            row("geometry", if g.is_empty() { "-".into() } else { g.join(", ") });
        }
        if let Some(r) = &self.ricci {
            row("Ricci", json_matrix_text(r));
        }
        if let Some(kb) = &self.killing_blocks {
            row("Killing g×g", format!("{} (agrees: {})", json_matrix_text(&kb.g_g.computed), kb.g_g.agrees));
            row("Killing h×h", format!("{} (agrees: {})", json_matrix_text(&kb.h_h.computed), kb.h_h.agrees));
            row("Killing g×h", format!("{} (agrees: {})", json_matrix_text(&kb.g_h.computed), kb.g_h.agrees));
            row("Killing h*×d", format!("zero: {}", kb.hstar_d.agrees));
        }
        if let Some(h) = &self.holonomy {
            row("holonomy dim", format!("{}{}", h.dim, if h.abelian { " (abelian)" } else { "" }));
        }
        match (&self.parallel_spinor_dim, &self.parallel_spinor_error) {
            (Some(k), _) => row("parallel spinors", k.to_string()),
            (None, Some(e)) => row("parallel spinors", format!("unavailable: {e}")),
            _ => {}
        }
        if let Some(t) = &self.lower_bound {
            row("lower bound (b, hol(g))", format!("{} ≤ {}", t.bound, t.exact));
        } else if let Some(n) = &self.lower_bound_note {
            row("lower bound (b, hol(g))", n.clone());
        }
        s
    }
}

fn json_scalar_text(v: &Value) -> String {
    let parts: Option<Vec<String>> =
        v.as_array().map(|a| a.iter().map(|x| x.as_str().unwrap_or("0").to_string()).collect());
    match parts.and_then(|p| Scalar::parse_components(&p).ok()) {
        Some(s) => scalar_text(&s),
        None => v.to_string(),
    }
}

fn json_matrix_text(v: &Value) -> String {
    let rows: Vec<String> = v
        .as_array()
        .map(|rows| {
            rows.iter()
                .map(|r| {
                    r.as_array()
                        .map(|xs| xs.iter().map(json_scalar_text).collect::<Vec<_>>().join(" "))
                        .unwrap_or_default()
                })
                .collect()
        })
        .unwrap_or_default();
    format!("[{}]", rows.join("; "))
}

/// A small dense matrix rendered one row per line.
pub fn matrix_text(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join("\t"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{from_catalog, parse_spec};
    use spinhol::catalog::Params;

    #[test]
    fn oscillator_report() {
        let r = analyze(&from_catalog("osc", &Params::new()).unwrap());
        assert_eq!(r.signature.as_deref(), Some("(1,3)"));
        assert_eq!(r.parallel_spinor_dim, Some(2));
        assert_eq!(r.scalar_curvature, Some(scalar_to_json(&Scalar::zero())));
        assert!(r.killing_blocks.as_ref().unwrap().h_h.agrees);
        assert_eq!(r.lower_bound, Some(BoundReport { bound: 2, exact: 2 }));
    }

    #[test]
    fn flat_and_split_rows() {
        let n1 = analyze(&from_catalog("N1", &Params::new()).unwrap());
        assert!(n1.flags.as_ref().unwrap().flat);
        assert_eq!(n1.parallel_spinor_dim, Some(8));
        assert_eq!(n1.holonomy.as_ref().unwrap().dim, 0);
        let t = analyze(&from_catalog("T*SL2", &Params::new()).unwrap());
        assert_eq!(t.signature.as_deref(), Some("(3,3)"));
        assert_eq!(t.parallel_spinor_dim, Some(1));
    }

    #[test]
    fn invalid_algebra_reports_violation() {
        let input = parse_spec(r#"{"dim": 2, "metric": [[0, 1, 1]], "brackets": [[0, 1, 0, 1]]}"#).unwrap();
        let r = analyze(&input);
        assert!(!r.valid);
        assert!(!r.violations.is_empty());
        assert!(r.flags.is_none());
    }

    #[test]
    fn json_has_sorted_keys_and_markdown_renders() {
        let r = analyze(&from_catalog("simple_su2", &Params::new()).unwrap());
        let j = r.to_json();
        let c = j.find("\"center_dim\"").unwrap();
        let d = j.find("\"derived_dim\"").unwrap();
        let v = j.find("\"violations\"").unwrap();
        assert!(c < d && d < v);
        let md = r.to_markdown();
        assert!(md.contains("| scalar curvature | 3/4 |"), "{md}");
        assert!(md.contains("Einstein"));
    }
}
