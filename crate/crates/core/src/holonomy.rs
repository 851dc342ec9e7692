//! Holonomy algebras `hol = ad([d,d]) ⊂ so(d)`.

use crate::extension::{ExtensionData, Layout, NormalDerivationSet};
use crate::lie::MetricLieAlgebra;
use crate::linalg::{bilinear, is_antisymmetric_for, Matrix, OperatorSpan, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyResult {
    pub span: OperatorSpan,
    pub is_abelian: bool,
}

impl HolonomyResult {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.span.basis()
    }
}

pub fn holonomy_algebra(a: &MetricLieAlgebra) -> HolonomyResult {
    let n = a.dim();
    let derived = a.algebra.derived_subalgebra();
    let span = OperatorSpan::from_generators(n, derived.basis().iter().map(|z| a.algebra.ad(z)));
    debug_assert!(span.is_closed());
    debug_assert!(span.basis().iter().all(|m| is_antisymmetric_for(m, &a.metric)));
    HolonomyResult { is_abelian: span.is_abelian(), span }
}

/// True when every holonomy operator maps `s` into itself.
pub fn invariant_subspace_check(hr: &HolonomyResult, s: &Subspace) -> bool {
    hr.span.basis().iter().all(|m| s.is_invariant_under(m))
}

/// Image of a basis vector of `d = h* ⊕ g ⊕ h` split into its three parts.
struct Image {
    alpha: Vector,
    x: Vector,
    h: Vector,
}

enum Slot {
    Alpha(usize),
    X(usize),
    H(usize),
}

fn assemble(lay: Layout, f: impl Fn(Slot) -> Option<Image>) -> Matrix {
    let mut m = Matrix::zeros(lay.dim(), lay.dim());
    let slots = (0..lay.r)
        .map(|a| (lay.alpha(a), Slot::Alpha(a)))
        .chain((0..lay.n).map(|j| (lay.x(j), Slot::X(j))))
        .chain((0..lay.r).map(|a| (lay.h(a), Slot::H(a))));
    for (col, slot) in slots {
        if let Some(img) = f(slot) {
            for (a, v) in img.alpha.into_iter().enumerate() {
                m[(lay.alpha(a), col)] = v;
            }
            for (j, v) in img.x.into_iter().enumerate() {
                m[(lay.x(j), col)] = v;
            }
            for (a, v) in img.h.into_iter().enumerate() {
                m[(lay.h(a), col)] = v;
            }
        }
    }
    m
}

struct Ctx<'a> {
    e: &'a ExtensionData,
    lay: Layout,
}

impl Ctx<'_> {
    fn zero_r(&self) -> Vector {
        vec![Scalar::zero(); self.lay.r]
    }

    fn zero_n(&self) -> Vector {
        vec![Scalar::zero(); self.lay.n]
    }

    fn ch(&self, a: usize, b: usize, c: usize) -> &Scalar {
        self.e.h.algebra.c(a, b, c)
    }

    /// `β(X,Y)` as coefficients on `α_a`.
    fn beta(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.e.pi.iter().map(|p| bilinear(&self.e.g.metric, &p.mul_vec(x), y)).collect()
    }

    /// `ad*(H)α = −α∘ad H`.
    fn coad(&self, h: &[Scalar], alpha: &[Scalar]) -> Vector {
        let r = self.lay.r;
        (0..r)
            .map(|e| {
                let mut s = Scalar::zero();
                for (f, hf) in h.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    for (b, ab) in alpha.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        s -= &(&(hf * ab) * self.ch(f, e, b));
                    }
                }
                s
            })
            .collect()
    }

    fn unit_h(&self, a: usize) -> Vector {
        crate::linalg::unit_vector(self.lay.r, a)
    }

    fn unit_g(&self, j: usize) -> Vector {
        crate::linalg::unit_vector(self.lay.n, j)
    }

    /// First family: `Y = [Y1,Y2]_g`.
    fn family_y(&self, y1: &[Scalar], y2: &[Scalar]) -> Matrix {
        let y = self.e.g.algebra.bracket(y1, y2);
        let b12 = self.beta(y1, y2);
        assemble(self.lay, |slot| match slot {
            Slot::Alpha(_) => None,
            Slot::X(j) => {
                let xj = self.unit_g(j);
                Some(Image { alpha: self.beta(&y, &xj), x: self.e.g.algebra.bracket(&y, &xj), h: self.zero_r() })
            }
            Slot::H(c) => Some(Image {
                alpha: self.coad(&self.unit_h(c), &b12).into_iter().map(|v| -v).collect(),
                x: self.e.pi[c].mul_vec(&y).into_iter().map(|v| -v).collect(),
                h: self.zero_r(),
            }),
        })
    }

    /// Second family: `H ∈ [h,h]`.
    fn family_h(&self, h: &[Scalar]) -> Matrix {
        let pi = self.e.pi_of(h);
        assemble(self.lay, |slot| match slot {
            Slot::Alpha(b) => Some(Image { alpha: self.coad(h, &self.unit_h(b)), x: self.zero_n(), h: self.zero_r() }),
            Slot::X(j) => Some(Image { alpha: self.zero_r(), x: pi.column(j), h: self.zero_r() }),
            Slot::H(c) => {
                Some(Image { alpha: self.zero_r(), x: self.zero_n(), h: self.e.h.algebra.bracket(h, &self.unit_h(c)) })
            }
        })
    }

    /// Third family: `α ∈ ad*(h)h*`.
    fn family_alpha(&self, alpha: &[Scalar]) -> Matrix {
        assemble(self.lay, |slot| match slot {
            Slot::H(c) => Some(Image {
                alpha: self.coad(&self.unit_h(c), alpha).into_iter().map(|v| -v).collect(),
                x: self.zero_n(),
                h: self.zero_r(),
            }),
            _ => None,
        })
    }

    /// Fourth family: `X ∈ π(h)g`.
    fn family_x(&self, x: &[Scalar]) -> Matrix {
        assemble(self.lay, |slot| match slot {
            Slot::Alpha(_) => None,
            Slot::X(j) => {
                let xj = self.unit_g(j);
                Some(Image { alpha: self.beta(x, &xj), x: self.e.g.algebra.bracket(x, &xj), h: self.zero_r() })
            }
            Slot::H(c) => Some(Image {
                alpha: self.zero_r(),
                x: self.e.pi[c].mul_vec(x).into_iter().map(|v| -v).collect(),
                h: self.zero_r(),
            }),
        })
    }
}

/// The four generator families of `hol(D_π)` in block form, instantiated over
/// basis choices of `Y1, Y2 ∈ g`, `H ∈ [h,h]`, `α = ad*(H_a)α_b`, `X = π(H_a)X_k`.
pub fn holonomy_block_generators(e: &ExtensionData) -> OperatorSpan {
    let lay = Layout { r: e.r(), n: e.n() };
    let cx = Ctx { e, lay };
    let (n, r) = (lay.n, lay.r);
    let mut span = OperatorSpan::new(lay.dim());
    for i in 0..n {
        for k in i + 1..n {
            span.insert(cx.family_y(&cx.unit_g(i), &cx.unit_g(k)));
        }
    }
    for h in e.h.algebra.derived_subalgebra().basis() {
        span.insert(cx.family_h(h));
    }
    for a in 0..r {
        for b in 0..r {
            let alpha = cx.coad(&cx.unit_h(a), &cx.unit_h(b));
            if alpha.iter().any(|v| !v.is_zero()) {
                span.insert(cx.family_alpha(&alpha));
            }
        }
    }
    for p in &e.pi {
        for x in p.columns() {
            if x.iter().any(|v| !v.is_zero()) {
                span.insert(cx.family_x(&x));
            }
        }
    }
    span
}

/// Holonomy of a tower: `{ ad X | X ∈ g_0 }` written as the block operators
/// with rows `(U_{k-1}X)ᵀ` into `α_k` and columns `−U_{i-1}X` out of `H_i`.
pub fn tower_holonomy(s: &NormalDerivationSet) -> OperatorSpan {
    let (n, m) = (s.n, s.m());
    let lay = Layout { r: m, n };
    let mut span = OperatorSpan::new(lay.dim());
    for j in 0..n {
        let x = crate::linalg::unit_vector(n, j);
        let ux: Vec<Vector> = s.u.iter().map(|u| u.mul_vec(&x)).collect();
        let mut mat = Matrix::zeros(lay.dim(), lay.dim());
        for (k, v) in ux.iter().enumerate() {
            for (c, val) in v.iter().enumerate() {
                mat[(lay.alpha(k), lay.x(c))] = val.clone();
                mat[(lay.x(c), lay.h(k))] = -val;
            }
        }
        span.insert(mat);
    }
    span
}
