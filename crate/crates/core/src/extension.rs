//! Double extensions `h* ⊕ g ⊕ h` and towers of one-dimensional extensions.

use crate::error::{Error, Result};
use crate::lie::{default_labels, DegenerateFormAlgebra, LieAlgebra, MetricLieAlgebra};
use crate::linalg::{Matrix, OperatorSpan};
use crate::scalar::Scalar;

/// Data `(g, h, π)` of a double extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    pub g: MetricLieAlgebra,
    pub h: DegenerateFormAlgebra,
    /// `π(H_a)` as a matrix on `g`, one per basis vector of `h`.
    pub pi: Vec<Matrix>,
}

impl ExtensionData {
    pub fn new(g: MetricLieAlgebra, h: DegenerateFormAlgebra, pi: Vec<Matrix>) -> Self {
        ExtensionData { g, h, pi }
    }

    /// Extension by the line `R` (zero form) acting through `a`.
    pub fn line(g: MetricLieAlgebra, a: Matrix) -> Self {
        ExtensionData { g, h: DegenerateFormAlgebra::line(), pi: vec![a] }
    }

    pub fn n(&self) -> usize {
        self.g.dim()
    }

    pub fn r(&self) -> usize {
        self.h.dim()
    }

    pub fn validate(&self) -> Result<()> {
        self.g.validate().into_result().map_err(|e| Error::InvalidExtension(format!("g: {e}")))?;
        self.h.validate().into_result().map_err(|e| Error::InvalidExtension(format!("h: {e}")))?;
        let (n, r) = (self.n(), self.r());
        if self.pi.len() != r {
            return Err(Error::InvalidExtension(format!("{} matrices for dim h = {r}", self.pi.len())));
        }
        for (a, p) in self.pi.iter().enumerate() {
            if (p.rows(), p.cols()) != (n, n) {
                return Err(Error::InvalidExtension(format!("pi(H{}) is not {n}x{n}", a + 1)));
            }
            let rep = self.g.is_metric_derivation(p);
            if !rep.is_derivation() {
                return Err(Error::InvalidExtension(format!("pi(H{}) is not a derivation of g", a + 1)));
            }
            if !rep.antisymmetric {
                return Err(Error::InvalidExtension(format!("pi(H{}) is not antisymmetric", a + 1)));
            }
        }
        for a in 0..r {
            for b in a + 1..r {
                let lhs = self.pi_of(self.h.algebra.bracket_basis(a, b));
                let rhs = self.pi[a].commutator(&self.pi[b]);
                if lhs != rhs {
                    return Err(Error::InvalidExtension(format!(
                        "pi is not a homomorphism on (H{}, H{})",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// `π(H)` for `H = Σ h_a H_a`.
    pub fn pi_of(&self, h: &[Scalar]) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        for (c, p) in h.iter().zip(&self.pi) {
            if !c.is_zero() {
                m = &m + &p.scale(c);
            }
        }
        m
    }

    /// The ideal `b = ad_g(π(h)g) + π([h,h])` as a span of operators on `g`.
    pub fn b_span(&self) -> OperatorSpan {
        let n = self.n();
        let mut s = OperatorSpan::new(n);
        for p in &self.pi {
            for x in p.columns() {
                s.insert(self.g.algebra.ad(&x));
            }
        }
        for z in self.h.algebra.derived_subalgebra().basis() {
            s.insert(self.pi_of(z));
        }
        s
    }
}

/// Positions of `α_a`, `X_j`, `H_a` in the basis `(α_r,…,α_1, X_1,…,X_n, H_1,…,H_r)`.
///
/// All indices are 0-based: `alpha(0)` is `α_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layout {
    pub r: usize,
    pub n: usize,
}

impl Layout {
    pub fn dim(&self) -> usize {
        self.n + 2 * self.r
    }

    pub fn alpha(&self, a: usize) -> usize {
        self.r - 1 - a
    }

    pub fn x(&self, j: usize) -> usize {
        self.r + j
    }

    pub fn h(&self, a: usize) -> usize {
        self.r + self.n + a
    }

    /// Embed a vector of `g`.
    pub fn embed_g(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (j, c) in x.iter().enumerate() {
            v[self.x(j)] = c.clone();
        }
        v
    }

    /// Embed `Σ c_a H_a`.
    pub fn embed_h(&self, h: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (a, c) in h.iter().enumerate() {
            v[self.h(a)] = c.clone();
        }
        v
    }

    /// Embed `Σ c_a α_a`.
    pub fn embed_alpha(&self, al: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (a, c) in al.iter().enumerate() {
            v[self.alpha(a)] = c.clone();
        }
        v
    }
}

fn dual_label(h: &str) -> String {
    match h.strip_prefix('H') {
        Some(rest) => format!("alpha{rest}"),
        None => format!("{h}*"),
    }
}

/// A double extension together with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleExtension {
    pub data: ExtensionData,
    pub algebra: MetricLieAlgebra,
    pub layout: Layout,
}

impl DoubleExtension {
    pub fn new(data: ExtensionData) -> Result<Self> {
        data.validate()?;
        let algebra = build(&data);
        let layout = Layout { r: data.r(), n: data.n() };
        Ok(DoubleExtension { data, algebra, layout })
    }
}

fn build(e: &ExtensionData) -> MetricLieAlgebra {
    let (n, r) = (e.n(), e.r());
    let lay = Layout { r, n };
    let d = lay.dim();
    let g = &e.g;
    let h = &e.h.algebra;
    let mut br: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    // [X_i, X_j] = Σ_a ⟨π(H_a)X_i, X_j⟩ α_a + [X_i, X_j]_g
    for i in 0..n {
        for j in i + 1..n {
            for (a, p) in e.pi.iter().enumerate() {
                let v = g.inner(&p.column(i), &crate::linalg::unit_vector(n, j));
                if !v.is_zero() {
                    br.push((lay.x(i), lay.x(j), lay.alpha(a), v));
                }
            }
            for (k, c) in g.algebra.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    br.push((lay.x(i), lay.x(j), lay.x(k), c.clone()));
                }
            }
        }
    }
    // [α_b, H_a] = −ad*(H_a)α_b = Σ_c c_h[a][c][b] α_c
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let s = h.c(a, c, b);
                if !s.is_zero() {
                    let (i, j) = (lay.alpha(b), lay.h(a));
                    br.push((i, j, lay.alpha(c), s.clone()));
                }
            }
        }
    }
    // [X_j, H_a] = −π(H_a)X_j
    for (a, p) in e.pi.iter().enumerate() {
        for j in 0..n {
            for k in 0..n {
                let s = &p[(k, j)];
                if !s.is_zero() {
                    br.push((lay.x(j), lay.h(a), lay.x(k), -s));
                }
            }
        }
    }
    // [H_a, H_b] = [H_a, H_b]_h
    for a in 0..r {
        for b in a + 1..r {
            for c in 0..r {
                let s = h.c(a, b, c);
                if !s.is_zero() {
                    br.push((lay.h(a), lay.h(b), lay.h(c), s.clone()));
                }
            }
        }
    }
    let mut labels = vec![String::new(); d];
    for a in 0..r {
        labels[lay.h(a)] = h.labels()[a].clone();
        labels[lay.alpha(a)] = dual_label(&h.labels()[a]);
    }
    for j in 0..n {
        labels[lay.x(j)] = g.algebra.labels()[j].clone();
    }
    let algebra = LieAlgebra::from_brackets(labels, &br).expect("indices in range");
    let mut metric = Matrix::zeros(d, d);
    for a in 0..r {
        for b in 0..r {
            metric[(lay.h(a), lay.h(b))] = e.h.form[(a, b)].clone();
        }
        metric[(lay.alpha(a), lay.h(a))] = Scalar::one();
        metric[(lay.h(a), lay.alpha(a))] = Scalar::one();
    }
    for i in 0..n {
        for j in 0..n {
            metric[(lay.x(i), lay.x(j))] = g.metric[(i, j)].clone();
        }
    }
    MetricLieAlgebra::new(algebra, metric)
}

/// The metric Lie algebra `d_π(g, h)` on `h* ⊕ g ⊕ h`.
pub fn double_extend(e: &ExtensionData) -> Result<MetricLieAlgebra> {
    Ok(DoubleExtension::new(e.clone())?.algebra)
}

/// `d_A(g, R)` with the `c = 0` metric.
pub fn extend_by_line(g: &MetricLieAlgebra, a: &Matrix) -> Result<MetricLieAlgebra> {
    double_extend(&ExtensionData::line(g.clone(), a.clone()))
}

/// Tower data: `U_0,…,U_{m−1} ∈ so(n)` and antisymmetric `Z_k` (`k×k`) for
/// `k = 1,…,m−1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalDerivationSet {
    pub n: usize,
    pub u: Vec<Matrix>,
    pub z: Vec<Matrix>,
}

impl NormalDerivationSet {
    /// All `Z_k = 0`.
    pub fn oscillator(u: Vec<Matrix>) -> Self {
        let n = u.first().map_or(0, Matrix::rows);
        let z = (1..u.len()).map(|k| Matrix::zeros(k, k)).collect();
        NormalDerivationSet { n, u, z }
    }

    pub fn m(&self) -> usize {
        self.u.len()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::InvalidNormalSet(s));
        let (n, m) = (self.n, self.m());
        if m == 0 {
            return bad("need at least one derivation".into());
        }
        for (k, u) in self.u.iter().enumerate() {
            if (u.rows(), u.cols()) != (n, n) {
                return bad(format!("U{k} is not {n}x{n}"));
            }
            if u.transpose() != -u {
                return bad(format!("U{k} is not in so({n})"));
            }
        }
        if self.u[0].rank() < n {
            return bad("U0 is not bijective".into());
        }
        if self.z.len() != m - 1 {
            return bad(format!("expected {} Z matrices, got {}", m - 1, self.z.len()));
        }
        for (i, z) in self.z.iter().enumerate() {
            let k = i + 1;
            if (z.rows(), z.cols()) != (k, k) || z.transpose() != -z {
                return bad(format!("Z{k} is not an antisymmetric {k}x{k} matrix"));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if !self.u[i].commutator(&self.u[j]).is_zero() {
                    return bad(format!("U{i} and U{j} do not commute"));
                }
            }
        }
        Ok(())
    }

    /// `K = m − dim span{U_0,…,U_{m−1}}`.
    pub fn k_defect(&self) -> usize {
        self.m() - OperatorSpan::from_generators(self.n, self.u.iter().cloned()).dim()
    }

    /// The level-`k` derivation on `g_k` in the basis `(α_k,…,α_1, X, H_1,…,H_k)`.
    pub fn derivation(&self, k: usize) -> Matrix {
        let n = self.n;
        let lay = Layout { r: k, n };
        let mut a = Matrix::zeros(lay.dim(), lay.dim());
        a.set_block(lay.x(0), lay.x(0), &self.u[k]);
        if k > 0 {
            let z = &self.z[k - 1];
            for i in 0..k {
                for l in 0..k {
                    a[(lay.alpha(l), lay.h(i))] = z[(l, i)].clone();
                }
            }
        }
        a
    }
}

/// `g_m^0 = d(g_0, A_0^0, …, A_{m−1}^0)` in the basis `(α_m,…,α_1, X, H_1,…,H_m)`.
pub fn build_tower(s: &NormalDerivationSet) -> Result<MetricLieAlgebra> {
    s.validate()?;
    let mut g = MetricLieAlgebra::abelian_euclidean(s.n);
    for k in 0..s.m() {
        g = extend_by_line(&g, &s.derivation(k))
            .map_err(|e| Error::InvalidNormalSet(format!("level {k} derivation rejected: {e}")))?;
    }
    let m = s.m();
    let mut labels = Vec::with_capacity(g.dim());
    labels.extend((1..=m).rev().map(|a| format!("alpha{a}")));
    labels.extend(default_labels("X", s.n));
    labels.extend(default_labels("H", m));
    g.algebra = g.algebra.with_labels(labels);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{form_signature, Signature};

    fn rot(l: i64) -> Matrix {
        Matrix::from_ints(&[[0, -l], [l, 0]])
    }

    #[test]
    fn trivial_extension_is_hyperbolic_plane() {
        let g = MetricLieAlgebra::new(LieAlgebra::abelian(0), Matrix::zeros(0, 0));
        let d = extend_by_line(&g, &Matrix::zeros(0, 0)).unwrap();
        assert!(d.algebra.is_abelian());
        assert_eq!(d.signature().unwrap(), Signature::new(1, 1, 0));
    }

    #[test]
    fn oscillator_from_rotation() {
        let d = extend_by_line(&MetricLieAlgebra::abelian_euclidean(2), &rot(1)).unwrap();
        assert!(d.validate().is_valid());
        assert_eq!(d.signature().unwrap(), Signature::new(1, 3, 0));
        // basis (α, X1, X2, H): [H, X1] = X2, [X1, X2] = ⟨A X1, X2⟩ α = α
        assert_eq!(d.algebra.bracket_basis(3, 1), &[Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()][..]);
        assert_eq!(d.algebra.bracket_basis(1, 2), &[Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()][..]);
        assert_eq!(d.algebra.center().dim(), 1);
        assert_eq!(d.algebra.derived_subalgebra().dim(), 3);
    }

    #[test]
    fn non_derivation_rejected() {
        let sym = Matrix::from_ints(&[[0, 1], [1, 0]]);
        let err = extend_by_line(&MetricLieAlgebra::abelian_euclidean(2), &sym).unwrap_err();
        assert!(matches!(err, Error::InvalidExtension(_)));
    }

    #[test]
    fn signature_rule_with_nontrivial_h() {
        let one = Scalar::one();
        let su2 = LieAlgebra::from_brackets(
            default_labels("H", 3),
            &[(0, 1, 2, one.clone()), (1, 2, 0, one.clone()), (2, 0, 1, one)],
        )
        .unwrap();
        let b = su2.killing_form();
        let g = MetricLieAlgebra::new(LieAlgebra::abelian(0), Matrix::zeros(0, 0));
        let e = ExtensionData::new(g, DegenerateFormAlgebra::new(su2, b), vec![Matrix::zeros(0, 0); 3]);
        let d = double_extend(&e).unwrap();
        assert!(d.validate().is_valid());
        assert_eq!(form_signature(&d.metric).unwrap(), Signature::new(3, 3, 0));
    }

    #[test]
    fn tower_center_and_signature() {
        let u0 = Matrix::block_diag(&[rot(1), rot(1)]);
        let u1 = Matrix::block_diag(&[rot(1), rot(-1)]);
        let s = NormalDerivationSet::oscillator(vec![u0, u1]);
        let t = build_tower(&s).unwrap();
        assert_eq!(t.dim(), 8);
        assert_eq!(t.signature().unwrap(), Signature::new(2, 6, 0));
        assert!(t.validate().is_valid());
        let lay = Layout { r: 2, n: 4 };
        let c = t.algebra.center();
        assert!(c.contains(&lay.embed_alpha(&[Scalar::one(), Scalar::zero()])));
        assert!(c.contains(&lay.embed_alpha(&[Scalar::zero(), Scalar::one()])));
        assert_eq!(s.k_defect(), 0);
    }

    #[test]
    fn tower_with_z_matches_bracket_formula() {
        let u0 = rot(1);
        let z1 = Matrix::zeros(1, 1);
        let z2 = Matrix::from_ints(&[[0, 1], [-1, 0]]);
        let s = NormalDerivationSet { n: 2, u: vec![u0, rot(2), Matrix::zeros(2, 2)], z: vec![z1, z2] };
        let t = build_tower(&s).unwrap();
        assert!(t.validate().is_valid());
        let lay = Layout { r: 3, n: 2 };
        // H_3 acts through A_2^0, whose Z_2 block sends H_1 to −α_2.
        let v = t.algebra.bracket(
            &lay.embed_h(&[Scalar::zero(), Scalar::zero(), Scalar::one()]),
            &lay.embed_h(&[Scalar::one(), Scalar::zero(), Scalar::zero()]),
        );
        let expected = lay.embed_alpha(&[Scalar::zero(), Scalar::from_i64(-1), Scalar::zero()]);
        assert_eq!(v, expected);
        assert_eq!(s.k_defect(), 2);
    }

    #[test]
    fn invalid_normal_sets() {
        let singular = NormalDerivationSet::oscillator(vec![Matrix::zeros(2, 2)]);
        assert!(matches!(build_tower(&singular), Err(Error::InvalidNormalSet(_))));
        let a = Matrix::from_ints(&[[0, -1, 0], [1, 0, -1], [0, 1, 0]]);
        let b = Matrix::from_ints(&[[0, 0, -1], [0, 0, 0], [1, 0, 0]]);
        let nc = NormalDerivationSet { n: 3, u: vec![a, b], z: vec![Matrix::zeros(1, 1)] };
        assert!(nc.validate().is_err());
    }
}
