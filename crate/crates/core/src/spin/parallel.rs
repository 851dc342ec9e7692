//! Spin holonomy and parallel spinors.

use super::clifford::CliffordRep;
use super::lift::{spin_lift, AdaptedBasis, FramedSpinModule};
use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::extension::ExtensionData;
use crate::holonomy::holonomy_algebra;
use crate::lie::MetricLieAlgebra;
use crate::linalg::{joint_kernel_dim, unit_vector, Matrix};
use crate::scalar::Scalar;

fn add_scaled(out: &mut Matrix, m: &Matrix, s: &Scalar) {
    if !s.is_zero() {
        *out = &*out + &m.scale(s);
    }
}

/// Generators of the spin holonomy of a double extension, written as
/// Clifford expressions in `α_i`, `H_i` and an orthonormal frame `X_j` of `g`:
///
/// * `Σ⟨π([H_i,H_j])Y_1,Y_2⟩ α_i·α_j + 2Σ π(H_j)Y·α_j + Σ κ_j X_j·[Y,X_j]`, `Y = [Y_1,Y_2]`
/// * `2Σ [H,H_j]·α_j + 2Σ α_j([H,H_j]) + Σ c_i α_i([H,H_j]) α_i·α_j − Σ κ_j X_j·π(H)X_j`, `H ∈ [h,h]`
/// * `Σ α([H_i,H_j]) α_i·α_j`, `α ∈ ad*(h)h*`
/// * `2Σ π(H_j)X·α_j + Σ κ_j X_j·[X,X_j]`, `X ∈ π(h)g`
pub fn spin_holonomy(ab: &AdaptedBasis) -> Vec<Matrix> {
    let e = &ab.ext;
    let (n, r) = (ab.n(), ab.r());
    let dim = ab.module.spinor_dim();
    let lay = ab.layout;
    let hb = |i: usize, j: usize| e.h.algebra.bracket_basis(i, j).to_vec();
    let g_frame: Vec<_> = ab.g_frame.columns();
    let frame_sum = |f: &dyn Fn(&[Scalar]) -> Vec<Scalar>| {
        let mut out = Matrix::zeros(dim, dim);
        for (x, &k) in g_frame.iter().zip(&ab.g_signs) {
            let p = ab.product(&lay.embed_g(x), &lay.embed_g(&f(x)));
            out = if k < 0 { &out - &p } else { &out + &p };
        }
        out
    };
    let two = Scalar::from_i64(2);
    let mut gens = Vec::new();

    for i1 in 0..n {
        for i2 in i1 + 1..n {
            let (y1, y2) = (unit_vector(n, i1), unit_vector(n, i2));
            let y = e.g.algebra.bracket(&y1, &y2);
            let mut m = frame_sum(&|x| e.g.algebra.bracket(&y, x));
            for i in 0..r {
                for j in 0..r {
                    let w = crate::linalg::bilinear(&e.g.metric, &e.pi_of(&hb(i, j)).mul_vec(&y1), &y2);
                    add_scaled(&mut m, &ab.product(&ab.alpha(i), &ab.alpha(j)), &w);
                }
                let py = lay.embed_g(&e.pi[i].mul_vec(&y));
                add_scaled(&mut m, &ab.product(&py, &ab.alpha(i)), &two);
            }
            gens.push(m);
        }
    }

    for h in e.h.algebra.derived_subalgebra().basis() {
        let pih = e.pi_of(h);
        let mut m = frame_sum(&|x| pih.mul_vec(x));
        m = m.scale(&Scalar::from_i64(-1));
        let mut trace = Scalar::zero();
        for j in 0..r {
            let hhj = e.h.algebra.bracket(h, &unit_vector(r, j));
            add_scaled(&mut m, &ab.product(&lay.embed_h(&hhj), &ab.alpha(j)), &two);
            trace += &hhj[j];
            for (i, (ci, hi)) in ab.c.iter().zip(&hhj).enumerate() {
                let w = ci * hi;
                add_scaled(&mut m, &ab.product(&ab.alpha(i), &ab.alpha(j)), &w);
            }
        }
        add_scaled(&mut m, &Matrix::identity(dim), &(&two * &trace));
        gens.push(m);
    }

    for a in 0..r {
        for b in 0..r {
            // α = ad*(H_a)α_b = −α_b∘ad H_a
            let alpha: Vec<Scalar> = (0..r).map(|c| -e.h.algebra.c(a, c, b)).collect();
            if alpha.iter().all(Scalar::is_zero) {
                continue;
            }
            let mut m = Matrix::zeros(dim, dim);
            for i in 0..r {
                for j in 0..r {
                    let w: Scalar = hb(i, j).iter().zip(&alpha).map(|(x, y)| x * y).sum();
                    add_scaled(&mut m, &ab.product(&ab.alpha(i), &ab.alpha(j)), &w);
                }
            }
            gens.push(m);
        }
    }

    for p in &e.pi {
        for x in p.columns() {
            if x.iter().all(Scalar::is_zero) {
                continue;
            }
            let mut m = frame_sum(&|v| e.g.algebra.bracket(&x, v));
            for j in 0..r {
                let px = lay.embed_g(&e.pi[j].mul_vec(&x));
                add_scaled(&mut m, &ab.product(&px, &ab.alpha(j)), &two);
            }
            gens.push(m);
        }
    }
    gens
}

/// Spin lifts of a basis of `hol(d)` through the adapted frame.
pub fn lifted_holonomy(ab: &AdaptedBasis) -> Result<Vec<Matrix>> {
    holonomy_algebra(&ab.algebra).basis().iter().map(|m| ab.module.lift(m)).collect()
}

/// Dimension of the space of parallel spinors, using any exact orthonormal frame.
pub fn parallel_spinor_dim(a: &MetricLieAlgebra) -> Result<usize> {
    let module = if a.dim() == 0 {
        FramedSpinModule::from_frame(Matrix::zeros(0, 0), &[])?
    } else {
        FramedSpinModule::new(&a.metric)?
    };
    let lifts: Vec<Matrix> = holonomy_algebra(a).basis().iter().map(|m| module.lift(m)).collect::<Result<_>>()?;
    Ok(joint_kernel_dim(module.spinor_dim(), &lifts))
}

/// Same count for a double extension, through its adapted frame.
pub fn parallel_spinor_dim_extension(e: &ExtensionData) -> Result<usize> {
    let ab = AdaptedBasis::new(e)?;
    let lifts = lifted_holonomy(&ab)?;
    Ok(joint_kernel_dim(ab.module.spinor_dim(), &lifts))
}

/// Uses the double-extension structure when the entry has one.
pub fn entry_parallel_spinor_dim(entry: &CatalogEntry) -> Result<usize> {
    match &entry.extension {
        Some(x) => parallel_spinor_dim_extension(&x.data),
        None => parallel_spinor_dim(&entry.algebra),
    }
}

/// Dimension of `{v ∈ Δ : λ*⁻¹(a)·v = 0}`.
pub fn annihilator_dim(rep: &CliffordRep, ops: &[Matrix]) -> Result<usize> {
    let lifts: Vec<Matrix> = ops.iter().map(|a| spin_lift(rep, a)).collect::<Result<_>>()?;
    Ok(joint_kernel_dim(rep.spinor_dim(), &lifts))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinorLowerBound {
    pub bound: usize,
    pub exact: usize,
}

/// `dim(V_b ∩ V_hol(g))` with `b = ad_g(π(h)g) + π([h,h])`, next to the
/// exact parallel-spinor count. Requires `h` abelian or semisimple.
pub fn spinor_lower_bound(e: &ExtensionData) -> Result<SpinorLowerBound> {
    let h = &e.h.algebra;
    let semisimple = h.killing_form().rank() == h.dim();
    if !h.is_abelian() && !semisimple {
        return Err(Error::Hypothesis("h must be abelian or semisimple".into()));
    }
    let g_module = if e.n() == 0 {
        FramedSpinModule::from_frame(Matrix::zeros(0, 0), &[])?
    } else {
        FramedSpinModule::new(&e.g.metric)?
    };
    let mut ops = e.b_span().basis();
    ops.extend(holonomy_algebra(&e.g).basis());
    let lifts: Vec<Matrix> = ops.iter().map(|m| g_module.lift(m)).collect::<Result<_>>()?;
    let bound = joint_kernel_dim(g_module.spinor_dim(), &lifts);
    let exact = parallel_spinor_dim_extension(e)?;
    debug_assert!(bound <= exact);
    Ok(SpinorLowerBound { bound, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, default_entries, quaternion_su2, Params};
    use crate::linalg::OperatorSpan;

    fn entry(name: &str) -> CatalogEntry {
        catalog(name, &Params::new()).unwrap()
    }

    #[test]
    fn table_counts() {
        for (name, count) in [("osc", 2), ("L2", 2), ("L3", 3), ("Tsu2", 1), ("Tsl2", 1), ("N1", 8), ("N5", 4)] {
            assert_eq!(entry_parallel_spinor_dim(&entry(name)).unwrap(), count, "{name}");
        }
    }

    #[test]
    fn frame_and_adapted_counts_agree() {
        for name in ["osc", "L2", "N3", "D_A0U1"] {
            let e = entry(name);
            assert_eq!(parallel_spinor_dim(&e.algebra).unwrap(), entry_parallel_spinor_dim(&e).unwrap(), "{name}");
        }
    }

    #[test]
    fn clifford_generators_span_lifted_holonomy() {
        for (name, params) in default_entries() {
            let e = catalog(&name, &params).unwrap();
            let Some(x) = e.extension else { continue };
            let ab = AdaptedBasis::new(&x.data).unwrap();
            let d = ab.module.spinor_dim();
            let literal = OperatorSpan::from_generators(d, spin_holonomy(&ab));
            let lifted = OperatorSpan::from_generators(d, lifted_holonomy(&ab).unwrap());
            assert_eq!(literal, lifted, "{name}");
        }
    }

    #[test]
    fn annihilators() {
        let rep = CliffordRep::new(0, 4);
        assert_eq!(annihilator_dim(&rep, &[]).unwrap(), 4);
        assert_eq!(annihilator_dim(&rep, &quaternion_su2()).unwrap(), 2);
        let rep = CliffordRep::new(0, 2);
        let a = Matrix::from_ints(&[[0, -1], [1, 0]]);
        assert!(matches!(annihilator_dim(&rep, &[&a * &a]), Err(Error::NotAntisymmetric)));
        assert_eq!(annihilator_dim(&rep, &[a]).unwrap(), 0);
    }

    #[test]
    fn lower_bound_examples() {
        let x = entry("D_abelian_simple").extension.unwrap();
        let t = spinor_lower_bound(&x.data).unwrap();
        assert_eq!(t.bound, 2);
        assert!(t.exact >= 2);
        let t = spinor_lower_bound(&entry("Tsu2").extension.unwrap().data).unwrap();
        assert_eq!(t, SpinorLowerBound { bound: 1, exact: 1 });
        let t = spinor_lower_bound(&entry("N1").extension.unwrap().data).unwrap();
        assert!(t.bound <= t.exact);
    }
}
