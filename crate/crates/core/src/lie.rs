//! Lie algebras given by structure constants, with invariant forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{form_signature, unit_vector, Matrix, Signature, Subspace, Vector};
use crate::scalar::Scalar;

/// Structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    labels: Vec<String>,
    c: Vec<Scalar>,
}

impl LieAlgebra {
    /// `structure` is the flat `n³` array indexed `(i*n + j)*n + k`.
    pub fn new(labels: Vec<String>, structure: Vec<Scalar>) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n * n * n {
            return Err(Error::Shape(format!("{} structure constants for dimension {n}", structure.len())));
        }
        Ok(LieAlgebra { labels, c: structure })
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra { labels: default_labels("e", n), c: vec![Scalar::zero(); n * n * n] }
    }

    /// Build from the brackets `[e_i, e_j] = Σ s e_k` with `i < j`; the
    /// remaining constants follow by antisymmetry.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let n = labels.len();
        let mut c = vec![Scalar::zero(); n * n * n];
        for (i, j, k, s) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidAlgebra(format!("bracket index ({i},{j},{k}) out of range")));
            }
            if i == j {
                if !s.is_zero() {
                    return Err(Error::InvalidAlgebra(format!("[e{i}, e{i}] must vanish")));
                }
                continue;
            }
            c[(i * n + j) * n + k] += s;
            c[(j * n + i) * n + k] -= s;
        }
        Ok(LieAlgebra { labels, c })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &[Scalar] {
        &self.c
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Matrix of `y ↦ [e_i, y]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.c(i, j, k).clone())
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] += xi * c;
                    }
                }
            }
        }
        m
    }

    pub fn ad_all(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.ad_basis(i)).collect()
    }

    /// `B(x, y) = tr(ad x ∘ ad y)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads = self.ad_all();
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                b[(j, i)] = t.clone();
                b[(i, j)] = t;
            }
        }
        b
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let mut s = Subspace::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    s.insert(v.to_vec());
                }
            }
        }
        s
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row (j, k) of the stacked system: Σ_i x_i c[i][j][k] = 0.
        let m = Matrix::from_fn(n * n, n, |r, i| self.c(i, r / n, r % n).clone());
        Subspace::span(n, m.kernel_basis())
    }

    /// `[e_i, e_j]`-images of a subspace, i.e. `[S, T]`.
    pub fn bracket_subspaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for x in s.basis() {
            for y in t.basis() {
                out.insert(self.bracket(x, y));
            }
        }
        out
    }

    fn structural_violations(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if !(self.c(i, j, k) + self.c(j, i, k)).is_zero() {
                        out.push(Violation::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        let ads = self.ad_all();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
                    let a = ads[i].mul_vec(self.bracket_basis(j, k));
                    let b = ads[j].mul_vec(self.bracket_basis(k, i));
                    let c = ads[k].mul_vec(self.bracket_basis(i, j));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(&(x + y) + z).is_zero()) {
                        out.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        out
    }

    fn invariance_violations(&self, form: &Matrix) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for (i, ad) in self.ad_all().iter().enumerate() {
            // ⟨[e_i,e_j],e_k⟩ + ⟨e_j,[e_i,e_k]⟩ = (ad_iᵀ G + G ad_i)_{jk}
            let lhs = &(&ad.transpose() * form) + &(form * ad);
            for j in 0..n {
                for k in j..n {
                    if !lhs[(j, k)].is_zero() {
                        out.push(Violation::NotInvariant { i, j, k });
                    }
                }
            }
        }
        out
    }

    /// Checks `A[x,y] = [Ax,y] + [x,Ay]` and, given a form, `⟨Ax,y⟩ + ⟨x,Ay⟩ = 0`.
    pub fn derivation_report(&self, a: &Matrix, form: Option<&Matrix>) -> DerivationReport {
        let n = self.dim();
        assert_eq!((a.rows(), a.cols()), (n, n), "derivation has the wrong size");
        let mut leibniz = Vec::new();
        for i in 0..n {
            let ai = a.column(i);
            for j in i + 1..n {
                let aj = a.column(j);
                let lhs = a.mul_vec(self.bracket_basis(i, j));
                let r1 = self.bracket(&ai, &unit_vector(n, j));
                let r2 = self.bracket(&unit_vector(n, i), &aj);
                if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (x, y))| *l != x + y) {
                    leibniz.push((i, j));
                }
            }
        }
        let antisymmetric = form.is_none_or(|g| crate::linalg::is_antisymmetric_for(a, g));
        DerivationReport { leibniz_failures: leibniz, antisymmetric }
    }

    /// Basis of all derivations antisymmetric for `form`.
    pub fn antisymmetric_derivations(&self, form: &Matrix) -> Vec<Matrix> {
        let n = self.dim();
        let var = |r: usize, c: usize| r * n + c;
        let mut rows: Vec<Vector> = Vec::new();
        // Leibniz: Σ_k A[l][k] c[i][j][k] − Σ_m A[m][i] c[m][j][l] − Σ_m A[m][j] c[i][m][l] = 0
        for i in 0..n {
            for j in i + 1..n {
                for l in 0..n {
                    let mut row = vec![Scalar::zero(); n * n];
                    for k in 0..n {
                        row[var(l, k)] += self.c(i, j, k);
                    }
                    for m in 0..n {
                        row[var(m, i)] -= self.c(m, j, l);
                        row[var(m, j)] -= self.c(i, m, l);
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        // (AᵀG + GA)_{pq} = Σ_r A[r][p] G[r][q] + G[p][r] A[r][q] = 0
        for p in 0..n {
            for q in p..n {
                let mut row = vec![Scalar::zero(); n * n];
                for r in 0..n {
                    row[var(r, p)] += &form[(r, q)];
                    row[var(r, q)] += &form[(p, r)];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let sys = Matrix::from_rows(rows).unwrap_or_else(|_| unreachable!());
        let sys = if sys.rows() == 0 { Matrix::zeros(0, n * n) } else { sys };
        sys.kernel_basis().into_iter().map(|v| Matrix::new(n, n, v).expect("n*n entries")).collect()
    }

    /// Direct sum `self ⊕ other` (basis of `self` first).
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim(), other.dim());
        let n = a + b;
        let mut c = vec![Scalar::zero(); n * n * n];
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    c[(i * n + j) * n + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    c[((a + i) * n + a + j) * n + a + k] = other.c(i, j, k).clone();
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebra { labels, c }
    }
}

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    /// Basis pairs `(i, j)` where the Leibniz rule fails.
    pub leibniz_failures: Vec<(usize, usize)>,
    pub antisymmetric: bool,
}

impl DerivationReport {
    pub fn is_derivation(&self) -> bool {
        self.leibniz_failures.is_empty()
    }

    pub fn is_metric_derivation(&self) -> bool {
        self.is_derivation() && self.antisymmetric
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, k: usize },
    FormShape,
    FormNotSymmetric,
    FormNotReal,
    FormDegenerate,
    NotInvariant { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => write!(f, "antisymmetry: c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]"),
            Violation::Jacobi { i, j, k } => write!(f, "jacobi identity fails on (e{i}, e{j}, e{k})"),
            Violation::FormShape => write!(f, "form has the wrong size"),
            Violation::FormNotSymmetric => write!(f, "form is not symmetric"),
            Violation::FormNotReal => write!(f, "form has non-real entries"),
            Violation::FormDegenerate => write!(f, "form is degenerate"),
            Violation::NotInvariant { i, j, k } => {
                write!(f, "ad-invariance: <[e{i},e{j}],e{k}> + <e{j},[e{i},e{k}]> != 0")
            }
        }
    }
}

/// Outcome of [`MetricLieAlgebra::validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidAlgebra(format!("{v} ({} violation(s))", self.violations.len()))),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn form_violations(algebra: &LieAlgebra, form: &Matrix, nondegenerate: bool) -> Vec<Violation> {
    let n = algebra.dim();
    if (form.rows(), form.cols()) != (n, n) {
        return vec![Violation::FormShape];
    }
    let mut out = Vec::new();
    if !form.is_symmetric() {
        out.push(Violation::FormNotSymmetric);
    }
    if !form.is_real() {
        out.push(Violation::FormNotReal);
    }
    if nondegenerate && form.rank() < n {
        out.push(Violation::FormDegenerate);
    }
    out.extend(algebra.invariance_violations(form));
    out
}

/// Lie algebra with a non-degenerate ad-invariant symmetric form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricLieAlgebra {
    pub algebra: LieAlgebra,
    pub metric: Matrix,
}

impl MetricLieAlgebra {
    /// Pairs an algebra with a metric without checking the invariants.
    pub fn new(algebra: LieAlgebra, metric: Matrix) -> Self {
        MetricLieAlgebra { algebra, metric }
    }

    /// Like [`MetricLieAlgebra::new`] but rejects invalid input.
    pub fn checked(algebra: LieAlgebra, metric: Matrix) -> Result<Self> {
        let a = MetricLieAlgebra { algebra, metric };
        a.validate().into_result()?;
        Ok(a)
    }

    pub fn abelian_euclidean(n: usize) -> Self {
        MetricLieAlgebra { algebra: LieAlgebra::abelian(n), metric: Matrix::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.algebra.structural_violations();
        violations.extend(form_violations(&self.algebra, &self.metric, true));
        ValidationReport { violations }
    }

    pub fn signature(&self) -> Result<Signature> {
        form_signature(&self.metric)
    }

    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::linalg::bilinear(&self.metric, x, y)
    }

    pub fn is_metric_derivation(&self, a: &Matrix) -> DerivationReport {
        self.algebra.derivation_report(a, Some(&self.metric))
    }

    pub fn antisymmetric_derivations(&self) -> Vec<Matrix> {
        self.algebra.antisymmetric_derivations(&self.metric)
    }

    pub fn direct_sum(&self, other: &MetricLieAlgebra) -> MetricLieAlgebra {
        MetricLieAlgebra {
            algebra: self.algebra.direct_sum(&other.algebra),
            metric: Matrix::block_diag(&[self.metric.clone(), other.metric.clone()]),
        }
    }
}

/// Lie algebra with an ad-invariant symmetric form that may degenerate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegenerateFormAlgebra {
    pub algebra: LieAlgebra,
    pub form: Matrix,
}

impl DegenerateFormAlgebra {
    pub fn new(algebra: LieAlgebra, form: Matrix) -> Self {
        DegenerateFormAlgebra { algebra, form }
    }

    /// The line `R` with the zero form.
    pub fn line() -> Self {
        DegenerateFormAlgebra {
            algebra: LieAlgebra::abelian(1).with_labels(vec!["H".into()]),
            form: Matrix::zeros(1, 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = self.algebra.structural_violations();
        violations.extend(form_violations(&self.algebra, &self.form, false));
        ValidationReport { violations }
    }
}

impl From<MetricLieAlgebra> for DegenerateFormAlgebra {
    fn from(m: MetricLieAlgebra) -> Self {
        DegenerateFormAlgebra { algebra: m.algebra, form: m.metric }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2() -> LieAlgebra {
        let one = Scalar::one();
        LieAlgebra::from_brackets(
            default_labels("e", 3),
            &[(0, 1, 2, one.clone()), (1, 2, 0, one.clone()), (2, 0, 1, one)],
        )
        .unwrap()
    }

    #[test]
    fn abelian_is_valid() {
        let a = MetricLieAlgebra::abelian_euclidean(3);
        assert!(a.validate().is_valid());
        assert!(a.algebra.killing_form().is_zero());
        assert_eq!(a.algebra.derived_subalgebra().dim(), 0);
        assert_eq!(a.algebra.center().dim(), 3);
        assert!(a.algebra.ad(&unit_vector(3, 1)).is_zero());
    }

    #[test]
    fn su2_killing_and_validation() {
        let g = su2();
        let b = g.killing_form();
        assert_eq!(b, Matrix::identity(3).scale(&Scalar::from_i64(-2)));
        let a = MetricLieAlgebra::new(g.clone(), -&b);
        assert!(a.validate().is_valid());
        assert_eq!(g.derived_subalgebra().dim(), 3);
        assert_eq!(g.center().dim(), 0);
        // ad e1: e2 -> e3, e3 -> -e2
        assert_eq!(g.ad_basis(0), Matrix::from_ints(&[[0, 0, 0], [0, 0, -1], [0, 1, 0]]));
    }

    #[test]
    fn su2_with_wrong_metric() {
        let m = Matrix::diagonal(&[Scalar::one(), Scalar::one(), Scalar::from_i64(2)]);
        let r = MetricLieAlgebra::new(su2(), m).validate();
        assert!(r.violations.iter().any(|v| matches!(v, Violation::NotInvariant { .. })));
    }

    #[test]
    fn broken_jacobi_detected() {
        // [e1,e2] = e3, [e1,e3] = e1 violates Jacobi on (e1,e2,e3)... check by hand:
        // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 + [e2,-e1] + 0 = e3 != 0.
        let one = Scalar::one();
        let g = LieAlgebra::from_brackets(default_labels("e", 3), &[(0, 1, 2, one.clone()), (0, 2, 0, one)]).unwrap();
        let r = MetricLieAlgebra::new(g, Matrix::identity(3)).validate();
        assert!(r.violations.contains(&Violation::Jacobi { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn inner_derivations_are_metric() {
        let g = su2();
        let a = MetricLieAlgebra::new(g.clone(), Matrix::identity(3));
        for i in 0..3 {
            assert!(a.is_metric_derivation(&g.ad_basis(i)).is_metric_derivation());
        }
        assert!(a.is_metric_derivation(&Matrix::zeros(3, 3)).is_metric_derivation());
        // su(2) is simple, so all derivations are inner.
        assert_eq!(a.antisymmetric_derivations().len(), 3);
        let bad = Matrix::from_ints(&[[1, 0, 0], [0, 0, 0], [0, 0, 0]]);
        assert!(!a.is_metric_derivation(&bad).is_derivation());
    }

    #[test]
    fn abelian_metric_derivations_are_so() {
        let g = Matrix::from_ints(&[[-1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let a = MetricLieAlgebra::new(LieAlgebra::abelian(3), g);
        assert_eq!(a.antisymmetric_derivations().len(), 3);
    }
}
