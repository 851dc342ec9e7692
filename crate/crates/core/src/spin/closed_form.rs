//! Clifford multiplication by `α_j`, `H_j` and `X ∈ g` on `Δ_g ⊗ Δ_{r,r}`
//! written out on the basis spinors `u ⊗ u(ε_r,…,ε_1)`.

use super::clifford::spinor_basis_vector;
use super::lift::AdaptedBasis;
use crate::linalg::Vector;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug)]
pub enum CliffordElement<'a> {
    /// `α_j`, 0-based.
    Alpha(usize),
    /// `H_j`, 0-based.
    H(usize),
    /// A vector of `g` in its own coordinates.
    G(&'a [Scalar]),
}

fn eps_at(eps: &[i32], j: usize) -> i32 {
    // eps = (ε_r, …, ε_1); ε_j sits at r − j
    eps[eps.len() - j]
}

fn tensor(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
}

/// `el · (u ⊗ u(ε_r,…,ε_1))`.
pub fn closed_form_action(ab: &AdaptedBasis, el: CliffordElement<'_>, u: &[Scalar], eps: &[i32]) -> Vector {
    let r = eps.len();
    assert_eq!(r, ab.r(), "sign vector length must equal dim h");
    let s = |k: i32| Scalar::from_i64(i64::from(k));
    match el {
        CliffordElement::Alpha(j0) | CliffordElement::H(j0) => {
            let j = j0 + 1;
            let ej = eps_at(eps, j);
            let prefix: i32 =
                (1..j).map(|k| eps_at(eps, k)).product::<i32>() * if (j - 1).is_multiple_of(2) { 1 } else { -1 };
            let factor = match el {
                CliffordElement::Alpha(_) => s(ej + 1),
                _ => &s(ej - 1) + &(&(&ab.c[j0] * &Scalar::frac(1, 2)) * &s(ej + 1)),
            };
            let coef = &(&Scalar::inv_sqrt2() * &s(prefix)) * &factor;
            let mut flipped = eps.to_vec();
            flipped[r - j] = -ej;
            tensor(u, &spinor_basis_vector(&flipped)).into_iter().map(|x| &x * &coef).collect()
        }
        CliffordElement::G(x) => {
            let sign: i32 = eps.iter().product::<i32>() * if r.is_multiple_of(2) { 1 } else { -1 };
            let xu = ab.g_module.gamma_of(x).mul_vec(u);
            tensor(&xu, &spinor_basis_vector(eps)).into_iter().map(|v| &v * &s(sign)).collect()
        }
    }
}

/// The same action computed through the Clifford matrices of the adapted frame.
pub fn matrix_action(ab: &AdaptedBasis, el: CliffordElement<'_>, u: &[Scalar], eps: &[i32]) -> Vector {
    let v = match el {
        CliffordElement::Alpha(j) => ab.alpha(j),
        CliffordElement::H(j) => ab.h(j),
        CliffordElement::G(x) => ab.layout.embed_g(x),
    };
    ab.module.gamma_of(&v).mul_vec(&tensor(u, &spinor_basis_vector(eps)))
}
