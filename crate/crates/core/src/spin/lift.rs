//! Spin lifts `so → spin`, orthonormal frames, and the adapted frame of a
//! double extension.

use super::clifford::CliffordRep;
use crate::error::{Error, Result};
use crate::extension::{double_extend, ExtensionData, Layout};
use crate::lie::{default_labels, DegenerateFormAlgebra, LieAlgebra, MetricLieAlgebra};
use crate::linalg::{diagonalize, is_antisymmetric_for, orthonormal_frame, unit_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// `¼ Σ κ_i γ_i γ(A e_i)` for `A ∈ so(diag κ)`.
pub fn spin_lift(rep: &CliffordRep, a: &Matrix) -> Result<Matrix> {
    let n = rep.n();
    if a.rows() != n || a.cols() != n {
        return Err(Error::Shape(format!("expected {n}x{n} operator, got {}x{}", a.rows(), a.cols())));
    }
    let k = Matrix::diagonal(&rep.signs().iter().map(|&s| Scalar::from_i64(i64::from(s))).collect::<Vec<_>>());
    if !is_antisymmetric_for(a, &k) {
        return Err(Error::NotAntisymmetric);
    }
    let d = rep.spinor_dim();
    let mut out = Matrix::zeros(d, d);
    let quarter = Scalar::frac(1, 4);
    for i in 0..n {
        let w = if rep.signs()[i] < 0 { -&quarter } else { quarter.clone() };
        for kk in 0..n {
            let c = &a[(kk, i)];
            if !c.is_zero() {
                rep.monomial(i).mul(rep.monomial(kk)).add_scaled_to(&mut out, &(c * &w));
            }
        }
    }
    Ok(out)
}

/// Spinor module of a metric vector space through a chosen orthonormal frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedSpinModule {
    frame: Matrix,
    frame_inv: Matrix,
    rep: CliffordRep,
}

impl FramedSpinModule {
    /// Uses an orthonormal frame of `metric`, negative vectors first.
    pub fn new(metric: &Matrix) -> Result<Self> {
        let (f, signs) = orthonormal_frame(metric)?;
        Self::from_frame(f, &signs)
    }

    /// `frame` holds the orthonormal vectors as columns with norms `signs`.
    pub fn from_frame(frame: Matrix, signs: &[i32]) -> Result<Self> {
        let frame_inv = frame.inverse()?;
        Ok(FramedSpinModule { frame, frame_inv, rep: CliffordRep::with_signs(signs) })
    }

    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    pub fn rep(&self) -> &CliffordRep {
        &self.rep
    }

    pub fn spinor_dim(&self) -> usize {
        self.rep.spinor_dim()
    }

    pub fn coords(&self, v: &[Scalar]) -> Vector {
        self.frame_inv.mul_vec(v)
    }

    pub fn gamma_of(&self, v: &[Scalar]) -> Matrix {
        self.rep.gamma_vec(&self.coords(v))
    }

    /// Clifford product `v · w`.
    pub fn product(&self, v: &[Scalar], w: &[Scalar]) -> Matrix {
        self.rep.vec_product(&self.coords(v), &self.coords(w))
    }

    pub fn lift(&self, a: &Matrix) -> Result<Matrix> {
        spin_lift(&self.rep, &(&(&self.frame_inv * a) * &self.frame))
    }
}

/// Adapted orthonormal frame of `h* ⊕ g ⊕ h`:
/// `e_{2i−1} = (H_i − (c_i/2+1)α_i)/√2`, `e_{2i} = (H_i − (c_i/2−1)α_i)/√2`,
/// followed by an orthonormal frame of `g`.
///
/// The basis of `h` is first replaced by one that is orthogonal for its form,
/// with `c_i = ⟨H_i,H_i⟩`; `ext` and `algebra` refer to that basis. The pairs
/// occupy the rightmost tensor factors, so `Δ = Δ_g ⊗ Δ_{r,r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub ext: ExtensionData,
    pub algebra: MetricLieAlgebra,
    pub layout: Layout,
    pub c: Vec<Scalar>,
    /// Orthonormal frame of `g` (columns) and its signs.
    pub g_frame: Matrix,
    pub g_signs: Vec<i32>,
    pub module: FramedSpinModule,
    pub g_module: FramedSpinModule,
}

fn rebase(e: &ExtensionData) -> Result<(ExtensionData, Vec<Scalar>)> {
    let r = e.r();
    let (p, diag) = diagonalize(&e.h.form)?;
    if p == Matrix::identity(r) {
        return Ok((e.clone(), diag));
    }
    let pinv = p.inverse()?;
    let cols = p.columns();
    let mut structure = vec![Scalar::zero(); r * r * r];
    for i in 0..r {
        for j in 0..r {
            let v = pinv.mul_vec(&e.h.algebra.bracket(&cols[i], &cols[j]));
            for (k, x) in v.into_iter().enumerate() {
                structure[(i * r + j) * r + k] = x;
            }
        }
    }
    let h = DegenerateFormAlgebra::new(LieAlgebra::new(default_labels("H", r), structure)?, Matrix::diagonal(&diag));
    let pi = cols.iter().map(|c| e.pi_of(c)).collect();
    Ok((ExtensionData::new(e.g.clone(), h, pi), diag))
}

impl AdaptedBasis {
    pub fn new(e: &ExtensionData) -> Result<Self> {
        let (ext, c) = rebase(e)?;
        let algebra = double_extend(&ext)?;
        let layout = Layout { r: ext.r(), n: ext.n() };
        let (g_frame, g_signs) =
            if layout.n == 0 { (Matrix::zeros(0, 0), Vec::new()) } else { orthonormal_frame(&ext.g.metric)? };
        let s = Scalar::inv_sqrt2();
        let one = Scalar::one();
        let half = Scalar::frac(1, 2);
        let mut cols = Vec::with_capacity(layout.dim());
        let mut signs = Vec::with_capacity(layout.dim());
        for (i, ci) in c.iter().enumerate() {
            for (shift, sign) in [(&one, -1), (&-&one, 1)] {
                let mut v = vec![Scalar::zero(); layout.dim()];
                v[layout.h(i)] = s.clone();
                v[layout.alpha(i)] = -&(&s * &(&(&half * ci) + shift));
                cols.push(v);
                signs.push(sign);
            }
        }
        for f in g_frame.columns() {
            cols.push(layout.embed_g(&f));
        }
        signs.extend(&g_signs);
        let module = FramedSpinModule::from_frame(Matrix::from_columns(layout.dim(), &cols), &signs)?;
        let g_module = FramedSpinModule::from_frame(g_frame.clone(), &g_signs)?;
        Ok(AdaptedBasis { ext, algebra, layout, c, g_frame, g_signs, module, g_module })
    }

    pub fn r(&self) -> usize {
        self.layout.r
    }

    pub fn n(&self) -> usize {
        self.layout.n
    }

    /// `α_i` as a vector of `d` (0-based `i`).
    pub fn alpha(&self, i: usize) -> Vector {
        unit_vector(self.layout.dim(), self.layout.alpha(i))
    }

    /// `H_i` as a vector of `d` (0-based `i`).
    pub fn h(&self, i: usize) -> Vector {
        unit_vector(self.layout.dim(), self.layout.h(i))
    }

    /// The `j`-th orthonormal vector of `g`, embedded in `d`.
    pub fn x(&self, j: usize) -> Vector {
        self.layout.embed_g(&self.g_frame.column(j))
    }

    pub fn frame_vector(&self, k: usize) -> Vector {
        self.module.frame().column(k)
    }

    pub fn product(&self, v: &[Scalar], w: &[Scalar]) -> Matrix {
        self.module.product(v, w)
    }
}

/// `¼Σ_i (H_i·A(α_i) + α_i·A(H_i) − c_i α_i·A(α_i)) + ¼Σ_j κ_j X_j·A(X_j)`.
pub fn adapted_spin_lift(ab: &AdaptedBasis, a: &Matrix) -> Result<Matrix> {
    if !is_antisymmetric_for(a, &ab.algebra.metric) {
        return Err(Error::NotAntisymmetric);
    }
    let d = ab.module.spinor_dim();
    let mut out = Matrix::zeros(d, d);
    for i in 0..ab.r() {
        let (al, h) = (ab.alpha(i), ab.h(i));
        let aal = a.mul_vec(&al);
        out = &out + &ab.product(&h, &aal);
        out = &out + &ab.product(&al, &a.mul_vec(&h));
        if !ab.c[i].is_zero() {
            out = &out - &ab.product(&al, &aal).scale(&ab.c[i]);
        }
    }
    for (j, &k) in ab.g_signs.iter().enumerate() {
        let x = ab.x(j);
        let p = ab.product(&x, &a.mul_vec(&x));
        out = if k < 0 { &out - &p } else { &out + &p };
    }
    Ok(out.scale(&Scalar::frac(1, 4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, Params};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_so(rng: &mut ChaCha8Rng, signs: &[i32]) -> Matrix {
        let n = signs.len();
        let mut s = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = Scalar::from_i64(rng.gen_range(-3..=3));
                s[(i, j)] = v.clone();
                s[(j, i)] = -v;
            }
        }
        // A = K S keeps A antisymmetric for K = diag(κ)
        Matrix::from_fn(n, n, |i, j| if signs[i] < 0 { -&s[(i, j)] } else { s[(i, j)].clone() })
    }

    #[test]
    fn lift_of_rotation_in_the_plane() {
        let rep = CliffordRep::new(0, 2);
        let a = Matrix::from_ints(&[[0, -1], [1, 0]]);
        let expect = (&rep.gamma(0) * &rep.gamma(1)).scale(&Scalar::frac(1, 2));
        assert_eq!(spin_lift(&rep, &a).unwrap(), expect);
        assert!(spin_lift(&rep, &Matrix::zeros(2, 2)).unwrap().is_zero());
        assert!(matches!(spin_lift(&rep, &Matrix::identity(2)), Err(Error::NotAntisymmetric)));
    }

    #[test]
    fn lift_commutator_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (r, s) in [(0, 3), (1, 1), (2, 2), (1, 4), (3, 2)] {
            let rep = CliffordRep::new(r, s);
            for _ in 0..5 {
                let a = random_so(&mut rng, rep.signs());
                let l = spin_lift(&rep, &a).unwrap();
                for v in 0..r + s {
                    let g = rep.gamma(v);
                    let lhs = l.commutator(&g);
                    assert_eq!(lhs, rep.gamma_vec(&a.column(v)), "({r},{s})");
                }
            }
        }
    }

    #[test]
    fn adapted_frame_is_orthonormal() {
        for name in ["osc", "L2", "Tsu2", "Tsl2", "D_abelian_simple", "N3"] {
            let e = catalog(name, &Params::new()).unwrap().extension.unwrap();
            let ab = AdaptedBasis::new(&e.data).unwrap();
            let f = ab.module.frame();
            let gram = &(&f.transpose() * &ab.algebra.metric) * f;
            let signs: Vec<Scalar> = ab.module.rep().signs().iter().map(|&s| Scalar::from_i64(i64::from(s))).collect();
            assert_eq!(gram, Matrix::diagonal(&signs), "{name}");
            for i in 0..ab.r() {
                let diff: Vec<Scalar> = ab
                    .frame_vector(2 * i + 1)
                    .iter()
                    .zip(ab.frame_vector(2 * i))
                    .map(|(a, b)| &(a - &b) * &Scalar::inv_sqrt2())
                    .collect();
                assert_eq!(diff, ab.alpha(i));
            }
        }
    }

    #[test]
    fn adapted_lift_agrees_with_frame_lift() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let e = catalog("osc", &Params::new()).unwrap().extension.unwrap();
        let ab = AdaptedBasis::new(&e.data).unwrap();
        let signs = ab.module.rep().signs().to_vec();
        for _ in 0..20 {
            let k = random_so(&mut rng, &signs);
            let f = ab.module.frame();
            let a = &(f * &k) * &f.inverse().unwrap();
            assert_eq!(adapted_spin_lift(&ab, &a).unwrap(), ab.module.lift(&a).unwrap());
        }
    }

    #[test]
    fn rebasing_non_diagonal_h_form() {
        let e = catalog("Tsl2", &Params::new()).unwrap().extension.unwrap();
        let ab = AdaptedBasis::new(&e.data).unwrap();
        assert!(ab.ext.h.form.is_symmetric());
        assert!(ab.algebra.validate().is_valid());
        assert_eq!(ab.algebra.signature().unwrap(), e.algebra.signature().unwrap());
    }
}
