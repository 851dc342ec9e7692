//! Curvature of biinvariant metrics: `R(x,y)z = −¼[[x,y],z]`, `Ric = −¼B`.

use crate::error::Result;
use crate::extension::{ExtensionData, Layout};
use crate::lie::MetricLieAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

fn quarter() -> Scalar {
    Scalar::frac(-1, 4)
}

/// `R(x,y)z = −¼[[x,y],z]`.
pub fn curvature(a: &MetricLieAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let xy = a.algebra.bracket(x, y);
    let v = a.algebra.bracket(&xy, z);
    crate::linalg::scale_vec(&quarter(), &v)
}

/// `Ric = −¼B`.
pub fn ricci(a: &MetricLieAlgebra) -> Matrix {
    a.algebra.killing_form().scale(&quarter())
}

/// `Ric(x,y) = tr(z ↦ R(z,x)y)`, evaluated from the curvature tensor.
pub fn ricci_from_curvature(a: &MetricLieAlgebra) -> Matrix {
    let n = a.dim();
    let e = |i| crate::linalg::unit_vector(n, i);
    Matrix::from_fn(n, n, |i, j| (0..n).map(|k| curvature(a, &e(k), &e(i), &e(j))[k].clone()).sum())
}

/// `Ric(x,y) = Σ_k κ_k ⟨R(f_k,x)y, f_k⟩` over an orthonormal frame `f` (columns).
pub fn ricci_in_frame(a: &MetricLieAlgebra, frame: &Matrix, signs: &[i32]) -> Matrix {
    let n = a.dim();
    let e = |i| crate::linalg::unit_vector(n, i);
    let fs = frame.columns();
    Matrix::from_fn(n, n, |i, j| {
        fs.iter()
            .zip(signs)
            .map(|(f, &s)| {
                let v = a.inner(&curvature(a, f, &e(i), &e(j)), f);
                if s < 0 {
                    -v
                } else {
                    v
                }
            })
            .sum()
    })
}

/// `G⁻¹ Ric`.
pub fn ricci_endomorphism(a: &MetricLieAlgebra) -> Result<Matrix> {
    Ok(&a.metric.inverse()? * &ricci(a))
}

pub fn scalar_curvature(a: &MetricLieAlgebra) -> Result<Scalar> {
    Ok(ricci_endomorphism(a)?.trace())
}

pub fn is_flat(a: &MetricLieAlgebra) -> bool {
    let n = a.dim();
    let derived = a.algebra.derived_subalgebra();
    derived
        .basis()
        .iter()
        .all(|z| (0..n).all(|j| a.algebra.bracket(z, &crate::linalg::unit_vector(n, j)).iter().all(Scalar::is_zero)))
}

/// `κ` with `Ric = κ·G`, if any.
pub fn einstein_constant(ric: &Matrix, g: &Matrix) -> Option<Scalar> {
    let (i, j) = (0..g.rows()).flat_map(|i| (0..g.cols()).map(move |j| (i, j))).find(|&(i, j)| !g[(i, j)].is_zero())?;
    let kappa = &ric[(i, j)] / &g[(i, j)];
    (g.scale(&kappa) == *ric).then_some(kappa)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureReport {
    pub ricci: Matrix,
    pub scalar: Scalar,
    pub flat: bool,
    pub ricci_flat: bool,
    /// `(G⁻¹Ric)² = 0`.
    pub ricci_2step_nilpotent: bool,
    /// Einstein constant, when `Ric = κ·G`.
    pub einstein: Option<Scalar>,
}

pub fn classify(a: &MetricLieAlgebra) -> Result<CurvatureReport> {
    let ric = ricci(a);
    let endo = ricci_endomorphism(a)?;
    Ok(CurvatureReport {
        scalar: endo.trace(),
        flat: is_flat(a),
        ricci_flat: ric.is_zero(),
        ricci_2step_nilpotent: (&endo * &endo).is_zero(),
        einstein: einstein_constant(&ric, &a.metric),
        ricci: ric,
    })
}

/// One block of the Killing form of a double extension: the closed-form value
/// next to the value read off the computed Killing form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPair {
    pub formula: Matrix,
    pub computed: Matrix,
}

impl BlockPair {
    pub fn agrees(&self) -> bool {
        self.formula == self.computed
    }
}

/// Killing-form blocks of `d_π(g,h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingBlocks {
    /// `g × g`: `B_g`.
    pub gg: BlockPair,
    /// `h* × d`: zero.
    pub hstar_d: BlockPair,
    /// `h × h`: `tr_g(π(H)π(H̃)) + 2B_h(H,H̃)`.
    pub hh: BlockPair,
    /// `g × h`: `tr_g(ad_g(X)∘π(H))`.
    pub gh: BlockPair,
    /// Full Ricci form `−¼B_d`.
    pub ricci: Matrix,
}

impl KillingBlocks {
    pub fn agrees(&self) -> bool {
        self.gg.agrees() && self.hstar_d.agrees() && self.hh.agrees() && self.gh.agrees()
    }
}

pub fn killing_blocks(e: &ExtensionData, d: &MetricLieAlgebra) -> KillingBlocks {
    let (n, r) = (e.n(), e.r());
    let lay = Layout { r, n };
    let b = d.algebra.killing_form();
    let bg = e.g.algebra.killing_form();
    let bh = e.h.algebra.killing_form();
    let gg = BlockPair { formula: bg, computed: Matrix::from_fn(n, n, |i, j| b[(lay.x(i), lay.x(j))].clone()) };
    let hstar_d = BlockPair {
        formula: Matrix::zeros(r, lay.dim()),
        computed: Matrix::from_fn(r, lay.dim(), |a, j| b[(lay.alpha(a), j)].clone()),
    };
    let two = Scalar::from_i64(2);
    let hh = BlockPair {
        formula: Matrix::from_fn(r, r, |a, c| &(&e.pi[a] * &e.pi[c]).trace() + &(&two * &bh[(a, c)])),
        computed: Matrix::from_fn(r, r, |a, c| b[(lay.h(a), lay.h(c))].clone()),
    };
    let gh = BlockPair {
        formula: Matrix::from_fn(n, r, |j, a| (&e.g.algebra.ad_basis(j) * &e.pi[a]).trace()),
        computed: Matrix::from_fn(n, r, |j, a| b[(lay.x(j), lay.h(a))].clone()),
    };
    KillingBlocks { gg, hstar_d, hh, gh, ricci: b.scale(&quarter()) }
}
