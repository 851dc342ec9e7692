//! Named metric Lie algebras, built from their defining matrices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::extension::{build_tower, DoubleExtension, ExtensionData, NormalDerivationSet};
use crate::lie::{default_labels, DegenerateFormAlgebra, LieAlgebra, MetricLieAlgebra};
use crate::linalg::{Matrix, OperatorSpan};
use crate::scalar::Scalar;

/// A catalog parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Param {
    Scalar(Scalar),
    List(Vec<Scalar>),
    Matrix(Matrix),
    Matrices(Vec<Matrix>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    Scalar,
    List,
    Matrix,
    Matrices,
}

pub type Params = BTreeMap<String, Param>;

/// Canonical family names, in presentation order.
pub const NAMES: &[&str] = &[
    "osc",
    "A",
    "L2",
    "L3",
    "L2lambda",
    "L3lambda",
    "N1",
    "N2",
    "N3",
    "N4",
    "N5",
    "N6",
    "Tsu2",
    "Tsl2",
    "simple_su2",
    "simple_sl2",
    "simple_sl2c",
    "D_abelian_simple",
    "OscA0U1",
    "D_A0U1",
    "tower",
];

fn canonical(name: &str) -> Option<&'static str> {
    let alias = match name {
        "T*su2" | "T*SU2" => "Tsu2",
        "T*sl2" | "T*sl2R" | "T*SL2" => "Tsl2",
        "spin13" => "simple_sl2c",
        "Osc" => "osc",
        other => other,
    };
    NAMES.iter().copied().find(|n| *n == alias)
}

/// Accepted parameter keys and their kinds for a family.
pub fn param_kinds(name: &str) -> Result<&'static [(&'static str, ParamKind)]> {
    use ParamKind::*;
    let name = canonical(name).ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    Ok(match name {
        "osc" | "L2lambda" | "L3lambda" => &[("lambda", List)],
        "A" => &[("metric", Matrix), ("A", Matrix)],
        "L2" | "L3" | "N1" | "N5" => &[],
        "N2" | "N4" | "N6" => &[("t", Scalar)],
        "N3" => &[("sign", Scalar)],
        "Tsu2" | "Tsl2" | "simple_su2" | "simple_sl2" | "simple_sl2c" => &[("c", Scalar)],
        "D_abelian_simple" => &[("metric", Matrix), ("h", Matrices), ("c", Scalar)],
        "OscA0U1" | "D_A0U1" => &[("A0", Matrix), ("U1", Matrix)],
        "tower" => &[("U", Matrices), ("Z", Matrices)],
        _ => unreachable!(),
    })
}

/// A constructed catalog algebra.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Params,
    pub algebra: MetricLieAlgebra,
    /// Present when the algebra is (the last step of) a double extension; its
    /// basis coincides with that of `algebra`.
    pub extension: Option<DoubleExtension>,
    pub tower: Option<NormalDerivationSet>,
}

struct P<'a> {
    name: &'static str,
    params: &'a Params,
}

impl P<'_> {
    fn bad(&self, reason: impl Into<String>) -> Error {
        Error::BadParams { name: self.name.to_string(), reason: reason.into() }
    }

    fn real(&self, s: &Scalar, key: &str) -> Result<()> {
        if s.is_real() {
            Ok(())
        } else {
            Err(self.bad(format!("`{key}` must lie in Q(sqrt2)")))
        }
    }

    fn scalar(&self, key: &str, default: i64) -> Result<Scalar> {
        match self.params.get(key) {
            None => Ok(Scalar::from_i64(default)),
            Some(Param::Scalar(s)) => self.real(s, key).map(|_| s.clone()),
            Some(Param::List(l)) if l.len() == 1 => self.real(&l[0], key).map(|_| l[0].clone()),
            Some(_) => Err(self.bad(format!("`{key}` must be a scalar"))),
        }
    }

    fn list(&self, key: &str, default: &[i64]) -> Result<Vec<Scalar>> {
        let l = match self.params.get(key) {
            None => default.iter().map(|&x| Scalar::from_i64(x)).collect(),
            Some(Param::List(l)) => l.clone(),
            Some(Param::Scalar(s)) => vec![s.clone()],
            Some(_) => return Err(self.bad(format!("`{key}` must be a list of scalars"))),
        };
        for s in &l {
            self.real(s, key)?;
        }
        Ok(l)
    }

    fn matrix(&self, key: &str) -> Result<Option<Matrix>> {
        match self.params.get(key) {
            None => Ok(None),
            Some(Param::Matrix(m)) => {
                if !m.is_real() {
                    return Err(self.bad(format!("`{key}` must have entries in Q(sqrt2)")));
                }
                Ok(Some(m.clone()))
            }
            Some(_) => Err(self.bad(format!("`{key}` must be a matrix"))),
        }
    }

    fn matrices(&self, key: &str) -> Result<Option<Vec<Matrix>>> {
        match self.params.get(key) {
            None => Ok(None),
            Some(Param::Matrices(ms)) => {
                if ms.iter().any(|m| !m.is_real()) {
                    return Err(self.bad(format!("`{key}` must have entries in Q(sqrt2)")));
                }
                Ok(Some(ms.clone()))
            }
            Some(Param::Matrix(m)) => Ok(Some(vec![m.clone()])),
            Some(_) => Err(self.bad(format!("`{key}` must be a list of matrices"))),
        }
    }

    fn positive(&self, key: &str, s: &Scalar) -> Result<()> {
        if s.real_signum() == Some(1) {
            Ok(())
        } else {
            Err(self.bad(format!("`{key}` must be positive")))
        }
    }
}

/// Block rotation `A_λ = diag(Λ_1, …, Λ_m)`, `Λ_r = [[0, −λ_r], [λ_r, 0]]`.
pub fn a_lambda(lambda: &[Scalar]) -> Matrix {
    let blocks: Vec<Matrix> = lambda
        .iter()
        .map(|l| Matrix::new(2, 2, vec![Scalar::zero(), -l, l.clone(), Scalar::zero()]).expect("2x2"))
        .collect();
    Matrix::block_diag(&blocks)
}

pub fn a_lambda_ints(lambda: &[i64]) -> Matrix {
    a_lambda(&lambda.iter().map(|&l| Scalar::from_i64(l)).collect::<Vec<_>>())
}

/// `diag(−1,…,−1, 1,…,1)`.
pub fn pseudo_euclidean(p: usize, q: usize) -> Matrix {
    let d: Vec<Scalar> = (0..p + q).map(|i| Scalar::from_i64(if i < p { -1 } else { 1 })).collect();
    Matrix::diagonal(&d)
}

/// The matrix `L_2`.
pub fn l2() -> Matrix {
    Matrix::from_ints(&[[0, 1], [1, 0]])
}

/// The matrix `L_3`.
pub fn l3() -> Matrix {
    Matrix::from_ints(&[[0, 1, 0], [1, 0, 1], [0, -1, 0]])
}

/// Neutral metric of signature (2,2) used with `N_1,…,N_5`.
pub fn n_metric_anti() -> Matrix {
    Matrix::from_ints(&[[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
}

/// `(N_k, metric)` for `k = 1,…,6`.
pub fn n_family(k: u8, t: &Scalar, sign: i64) -> (Matrix, Matrix) {
    let z = Scalar::zero;
    let i = Scalar::from_i64;
    match k {
        1 => (Matrix::from_ints(&[[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]), n_metric_anti()),
        2 => {
            let a = Matrix::from_rows(vec![
                vec![i(1), -t, z(), z()],
                vec![t.clone(), i(1), z(), z()],
                vec![z(), z(), i(-1), -t],
                vec![z(), z(), t.clone(), i(-1)],
            ])
            .expect("4x4");
            (a, n_metric_anti())
        }
        3 => (Matrix::from_ints(&[[0, -1, sign, 0], [1, 0, 0, sign], [0, 0, 0, -1], [0, 0, 1, 0]]), n_metric_anti()),
        4 => {
            let a = Matrix::from_rows(vec![
                vec![z(), i(-1), z(), z()],
                vec![i(1), z(), z(), z()],
                vec![z(), z(), z(), -t],
                vec![z(), z(), t.clone(), z()],
            ])
            .expect("4x4");
            (a, pseudo_euclidean(2, 2))
        }
        5 => (Matrix::from_ints(&[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]]), n_metric_anti()),
        6 => {
            let a = Matrix::diagonal(&[i(1), i(-1), t.clone(), -t]);
            let g = Matrix::from_ints(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
            (a, g)
        }
        _ => panic!("N-family index {k} out of range"),
    }
}

pub fn su2_algebra() -> LieAlgebra {
    let one = Scalar::one();
    LieAlgebra::from_brackets(default_labels("e", 3), &[(0, 1, 2, one.clone()), (1, 2, 0, one.clone()), (2, 0, 1, one)])
        .expect("valid indices")
}

/// Basis `(H, E, F)`.
pub fn sl2_algebra() -> LieAlgebra {
    let i = Scalar::from_i64;
    LieAlgebra::from_brackets(
        vec!["H".into(), "E".into(), "F".into()],
        &[(0, 1, 1, i(2)), (0, 2, 2, i(-2)), (1, 2, 0, i(1))],
    )
    .expect("valid indices")
}

/// Realification of `sl(2,C)`: basis `e_1,e_2,e_3, f_a = i·e_a`.
pub fn sl2c_algebra() -> LieAlgebra {
    let mut br = Vec::new();
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        br.push((a, b, c, Scalar::one()));
        br.push((a, 3 + b, 3 + c, Scalar::one()));
        br.push((3 + a, b, 3 + c, Scalar::one()));
        br.push((3 + a, 3 + b, c, Scalar::from_i64(-1)));
    }
    let mut labels = default_labels("e", 3);
    labels.extend(default_labels("f", 3));
    LieAlgebra::from_brackets(labels, &br).expect("valid indices")
}

/// `su(2) ⊂ so(4)`: halves of left multiplication by `i, j, k` on the
/// quaternions with basis `(1, i, j, k)`.
pub fn quaternion_su2() -> Vec<Matrix> {
    let li = Matrix::from_ints(&[[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
    let lj = Matrix::from_ints(&[[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]);
    let lk = Matrix::from_ints(&[[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]);
    let half = Scalar::frac(1, 2);
    vec![li.scale(&half), lj.scale(&half), lk.scale(&half)]
}

/// Structure constants of the matrix Lie algebra spanned by `mats` in that basis.
pub fn matrix_algebra(mats: &[Matrix], labels: Vec<String>) -> Result<LieAlgebra> {
    let r = mats.len();
    let n = mats.first().map_or(0, Matrix::rows);
    if mats.iter().any(|m| (m.rows(), m.cols()) != (n, n)) {
        return Err(Error::Shape("matrices of differing sizes".into()));
    }
    let cols: Vec<_> = mats.iter().map(|m| m.data().to_vec()).collect();
    let basis = Matrix::from_columns(n * n, &cols);
    if basis.rank() < r {
        return Err(Error::InvalidAlgebra("matrices are linearly dependent".into()));
    }
    let mut br = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let c = mats[a].commutator(&mats[b]);
            let coeffs = basis
                .solve(c.data())
                .ok_or_else(|| Error::InvalidAlgebra("matrices do not span a Lie algebra".into()))?;
            for (k, s) in coeffs.into_iter().enumerate() {
                if !s.is_zero() {
                    br.push((a, b, k, s));
                }
            }
        }
    }
    LieAlgebra::from_brackets(labels, &br)
}

fn entry(name: &str, params: &Params, algebra: MetricLieAlgebra) -> CatalogEntry {
    CatalogEntry { name: name.to_string(), params: params.clone(), algebra, extension: None, tower: None }
}

fn from_extension(name: &str, params: &Params, data: ExtensionData) -> Result<CatalogEntry> {
    let ext = DoubleExtension::new(data)?;
    Ok(CatalogEntry {
        name: name.to_string(),
        params: params.clone(),
        algebra: ext.algebra.clone(),
        extension: Some(ext),
        tower: None,
    })
}

fn from_tower(name: &str, params: &Params, s: NormalDerivationSet) -> Result<CatalogEntry> {
    let algebra = build_tower(&s)?;
    let m = s.m();
    let below = if m == 1 {
        MetricLieAlgebra::abelian_euclidean(s.n)
    } else {
        build_tower(&NormalDerivationSet { n: s.n, u: s.u[..m - 1].to_vec(), z: s.z[..m - 2].to_vec() })?
    };
    let ext = DoubleExtension::new(ExtensionData::line(below, s.derivation(m - 1)))?;
    debug_assert_eq!(ext.algebra.algebra.structure(), algebra.algebra.structure());
    Ok(CatalogEntry { name: name.to_string(), params: params.clone(), algebra, extension: Some(ext), tower: Some(s) })
}

fn line_over(g: MetricLieAlgebra, a: Matrix) -> ExtensionData {
    ExtensionData::line(g, a)
}

fn abelian(metric: Matrix) -> MetricLieAlgebra {
    let n = metric.rows();
    MetricLieAlgebra::new(LieAlgebra::abelian(n).with_labels(default_labels("X", n)), metric)
}

fn simple_metric(p: &P, algebra: LieAlgebra, sign: i64) -> Result<MetricLieAlgebra> {
    let c = p.scalar("c", 1)?;
    if c.is_zero() {
        return Err(p.bad("`c` must be nonzero"));
    }
    let b = algebra.killing_form();
    let metric = b.scale(&(&c * &Scalar::from_i64(sign)));
    MetricLieAlgebra::checked(algebra, metric)
}

/// Build a catalog algebra by family name.
pub fn catalog(name: &str, params: &Params) -> Result<CatalogEntry> {
    let canon = canonical(name).ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    let kinds = param_kinds(canon)?;
    let p = P { name: canon, params };
    for key in params.keys() {
        if !kinds.iter().any(|(k, _)| k == key) {
            return Err(p.bad(format!("unknown parameter `{key}`")));
        }
    }
    let e = match canon {
        "osc" => {
            let lambda = p.list("lambda", &[1])?;
            if lambda.is_empty() || lambda.iter().any(|l| l.is_zero()) {
                return Err(p.bad("`lambda` must be a nonempty list of nonzero scalars"));
            }
            let n = 2 * lambda.len();
            from_extension(canon, params, line_over(abelian(Matrix::identity(n)), a_lambda(&lambda)))?
        }
        "A" => {
            let a = p.matrix("A")?.ok_or_else(|| p.bad("`A` is required"))?;
            let metric = match p.matrix("metric")? {
                Some(m) => m,
                None => Matrix::identity(a.rows()),
            };
            if metric.rows() != a.rows() {
                return Err(p.bad("`metric` and `A` differ in size"));
            }
            from_extension(canon, params, line_over(abelian(metric), a))?
        }
        "L2" => from_extension(canon, params, line_over(abelian(pseudo_euclidean(1, 1)), l2()))?,
        "L3" => from_extension(canon, params, line_over(abelian(pseudo_euclidean(1, 2)), l3()))?,
        "L2lambda" | "L3lambda" => {
            let lambda = p.list("lambda", &[1])?;
            if lambda.is_empty() || lambda.iter().any(|l| l.is_zero()) {
                return Err(p.bad("`lambda` must be a nonempty list of nonzero scalars"));
            }
            let (l, q) = if canon == "L2lambda" { (l2(), 1) } else { (l3(), 2) };
            let metric = pseudo_euclidean(1, q + 2 * lambda.len());
            let a = Matrix::block_diag(&[l, a_lambda(&lambda)]);
            from_extension(canon, params, line_over(abelian(metric), a))?
        }
        "N1" | "N2" | "N3" | "N4" | "N5" | "N6" => {
            let k = canon.as_bytes()[1] - b'0';
            let t = p.scalar("t", 1)?;
            if matches!(k, 2 | 4) {
                p.positive("t", &t)?;
            }
            if k == 6 && (&t - &Scalar::one()).real_signum() == Some(-1) {
                return Err(p.bad("`t` must be at least 1"));
            }
            let sign = p.scalar("sign", 1)?;
            let sign = if sign.is_one() {
                1
            } else if (-&sign).is_one() {
                -1
            } else {
                return Err(p.bad("`sign` must be 1 or -1"));
            };
            let (a, g) = n_family(k, &t, sign);
            from_extension(canon, params, line_over(abelian(g), a))?
        }
        "Tsu2" | "Tsl2" => {
            let c = p.scalar("c", 1)?;
            let h = if canon == "Tsu2" { su2_algebra() } else { sl2_algebra() };
            let h = h.with_labels(default_labels("H", 3));
            let form = h.killing_form().scale(&c);
            let g = MetricLieAlgebra::new(LieAlgebra::abelian(0), Matrix::zeros(0, 0));
            let data = ExtensionData::new(g, DegenerateFormAlgebra::new(h, form), vec![Matrix::zeros(0, 0); 3]);
            from_extension(canon, params, data)?
        }
        "simple_su2" => entry(canon, params, simple_metric(&p, su2_algebra(), -1)?),
        "simple_sl2" => entry(canon, params, simple_metric(&p, sl2_algebra(), 1)?),
        "simple_sl2c" => entry(canon, params, simple_metric(&p, sl2c_algebra(), -1)?),
        "D_abelian_simple" => {
            let mats = p.matrices("h")?.unwrap_or_else(quaternion_su2);
            let n = mats.first().map_or(0, Matrix::rows);
            let metric = p.matrix("metric")?.unwrap_or_else(|| Matrix::identity(n));
            let c = p.scalar("c", 0)?;
            let h = matrix_algebra(&mats, default_labels("H", mats.len())).map_err(|e| p.bad(e.to_string()))?;
            let form = h.killing_form().scale(&c);
            let data = ExtensionData::new(abelian(metric), DegenerateFormAlgebra::new(h, form), mats);
            from_extension(canon, params, data)?
        }
        "OscA0U1" | "D_A0U1" => {
            let a0 = p.matrix("A0")?.unwrap_or_else(|| a_lambda_ints(&[1, 1]));
            let u1 = p.matrix("U1")?.unwrap_or_else(|| a_lambda_ints(&[1, -1]));
            if (a0.rows(), a0.cols()) != (u1.rows(), u1.cols()) || !a0.is_square() {
                return Err(p.bad("`A0` and `U1` must be square of equal size"));
            }
            if OperatorSpan::from_generators(a0.rows(), [a0.clone(), u1.clone()]).dim() < 2 {
                return Err(p.bad("`A0` and `U1` must be linearly independent"));
            }
            if canon == "OscA0U1" {
                let s = NormalDerivationSet::oscillator(vec![a0, u1]);
                from_tower(canon, params, s)?
            } else {
                d_a0u1(canon, params, a0, u1)?
            }
        }
        "tower" => {
            let u = p.matrices("U")?.ok_or_else(|| p.bad("`U` is required"))?;
            let n = u.first().map_or(0, Matrix::rows);
            let z = match p.matrices("Z")? {
                Some(z) => z,
                None => (1..u.len()).map(|k| Matrix::zeros(k, k)).collect(),
            };
            from_tower(canon, params, NormalDerivationSet { n, u, z })?
        }
        _ => unreachable!(),
    };
    e.algebra.validate().into_result()?;
    Ok(e)
}

/// `d_A(R y ⊕ osc(A_0), R)` with `A y = −α_1`, `A H_1 = y`, `A|g_0 = U_1`.
fn d_a0u1(name: &str, params: &Params, a0: Matrix, u1: Matrix) -> Result<CatalogEntry> {
    let n0 = a0.rows();
    let osc = build_tower(&NormalDerivationSet::oscillator(vec![a0]))?;
    let line = MetricLieAlgebra::new(LieAlgebra::abelian(1).with_labels(vec!["y".into()]), Matrix::identity(1));
    let g = line.direct_sum(&osc);
    // basis of g: (y, α_1, X_1..X_n0, H_1)
    let dim = g.dim();
    let mut a = Matrix::zeros(dim, dim);
    a[(1, 0)] = Scalar::from_i64(-1);
    a[(0, dim - 1)] = Scalar::one();
    a.set_block(2, 2, &u1);
    debug_assert_eq!(dim, n0 + 3);
    from_extension(name, params, line_over(g, a))
}

/// Every family at its default parameters.
pub fn default_entries() -> Vec<(String, Params)> {
    let mut out = Vec::new();
    for &name in NAMES {
        let params = match name {
            "A" => {
                let mut p = Params::new();
                p.insert("metric".into(), Param::Matrix(pseudo_euclidean(1, 3)));
                // L_3 padded by zero: a nilpotent element of so(1,3).
                let a = Matrix::from_ints(&[[0, 1, 0, 0], [1, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 0]]);
                p.insert("A".into(), Param::Matrix(a));
                p
            }
            "tower" => {
                let mut p = Params::new();
                p.insert(
                    "U".into(),
                    Param::Matrices(vec![a_lambda_ints(&[1, 2]), a_lambda_ints(&[1, 0]), Matrix::zeros(4, 4)]),
                );
                p.insert("Z".into(), Param::Matrices(vec![Matrix::zeros(1, 1), Matrix::from_ints(&[[0, 1], [-1, 0]])]));
                p
            }
            _ => Params::new(),
        };
        out.push((name.to_string(), params));
    }
    out
}
