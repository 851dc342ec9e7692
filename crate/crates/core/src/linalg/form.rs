//! Symmetric bilinear forms: inertia and orthonormal frames.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::matrix::{Matrix, Vector};
use crate::scalar::{Real, Scalar};

/// Sylvester inertia `(negative, positive, zero)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub neg: usize,
    pub pos: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(neg: usize, pos: usize, zero: usize) -> Self {
        Signature { neg, pos, zero }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero == 0 {
            write!(f, "({},{})", self.neg, self.pos)
        } else {
            write!(f, "({},{};{})", self.neg, self.pos, self.zero)
        }
    }
}

fn check_real_symmetric(g: &Matrix) -> Result<()> {
    if !g.is_square() || !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !g.is_real() {
        return Err(Error::NotReal);
    }
    Ok(())
}

/// Congruence diagonalization: returns `P` (columns are the new basis) and the
/// diagonal of `PᵀGP`.
///
/// Pivots `v` with `accept(⟨v,v⟩)` are preferred; candidates are basis vectors
/// of the remaining complement and small combinations `e_i + t e_j`.
fn diagonalize_with(g: &Matrix, accept: impl Fn(&Scalar) -> bool) -> Result<(Vec<Vector>, Vec<Scalar>)> {
    let n = g.rows();
    // Work on an explicit basis of the current orthogonal complement.
    let mut rest: Vec<Vector> = (0..n).map(|i| crate::linalg::unit_vector(n, i)).collect();
    let mut cols = Vec::with_capacity(n);
    let mut diag = Vec::with_capacity(n);
    let q = |v: &Vector| crate::linalg::bilinear(g, v, v);
    while !rest.is_empty() {
        let mut chosen: Option<(usize, Vector, Scalar)> = None;
        let mut fallback: Option<(usize, Vector, Scalar)> = None;
        let coeffs: [i64; 4] = [1, -1, 2, -2];
        'search: for i in 0..rest.len() {
            let qi = q(&rest[i]);
            if !qi.is_zero() {
                if accept(&qi) {
                    chosen = Some((i, rest[i].clone(), qi));
                    break 'search;
                }
                fallback.get_or_insert((i, rest[i].clone(), qi));
            }
            for j in 0..rest.len() {
                if j == i || crate::linalg::bilinear(g, &rest[i], &rest[j]).is_zero() {
                    continue;
                }
                for t in coeffs {
                    let w = crate::linalg::add_vec(&rest[i], &crate::linalg::scale_vec(&Scalar::from_i64(t), &rest[j]));
                    let qw = q(&w);
                    if qw.is_zero() {
                        continue;
                    }
                    if accept(&qw) {
                        chosen = Some((i, w, qw));
                        break 'search;
                    }
                    fallback.get_or_insert((i, w, qw));
                }
            }
        }
        let Some((idx, v, qv)) = chosen.or(fallback) else {
            // Remaining space is totally isotropic.
            for r in rest.drain(..) {
                cols.push(r);
                diag.push(Scalar::zero());
            }
            break;
        };
        rest.remove(idx);
        // Project the remaining vectors onto v⊥.
        let qinv = qv.inv()?;
        let gv = g.mul_vec(&v);
        for r in rest.iter_mut() {
            let c = crate::linalg::dot(r, &gv);
            if !c.is_zero() {
                let f = &c * &qinv;
                for (x, y) in r.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        cols.push(v);
        diag.push(qv);
    }
    Ok((cols, diag))
}

/// Basis `P` (as columns) with `PᵀGP` diagonal; also returns that diagonal.
pub fn diagonalize(g: &Matrix) -> Result<(Matrix, Vec<Scalar>)> {
    check_real_symmetric(g)?;
    let (cols, diag) = diagonalize_with(g, |_| true)?;
    Ok((Matrix::from_columns(g.rows(), &cols), diag))
}

pub fn form_signature(g: &Matrix) -> Result<Signature> {
    let (_, diag) = diagonalize(g)?;
    let mut s = Signature::new(0, 0, 0);
    for d in &diag {
        match d.re().signum() {
            -1 => s.neg += 1,
            1 => s.pos += 1,
            _ => s.zero += 1,
        }
    }
    Ok(s)
}

fn abs_sqrt(x: &Scalar) -> Option<Real> {
    x.re().abs().sqrt()
}

/// Orthonormal frame of a non-degenerate form over Q(√2).
///
/// Returns the frame as the columns of `F` together with the signs `κ` such
/// that `FᵀGF = diag(κ)`, negative vectors first.
pub fn orthonormal_frame(g: &Matrix) -> Result<(Matrix, Vec<i32>)> {
    check_real_symmetric(g)?;
    let (cols, diag) = diagonalize_with(g, |d| abs_sqrt(d).is_some())?;
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    for (v, d) in cols.into_iter().zip(diag) {
        let sign = d.re().signum();
        if sign == 0 {
            return Err(Error::UnsupportedMetric("form is degenerate".into()));
        }
        let root = abs_sqrt(&d).ok_or_else(|| {
            Error::UnsupportedMetric(format!("no orthonormal frame over Q(sqrt2): |{d}| has no square root"))
        })?;
        let s = Scalar::from_real(root).inv()?;
        let u = crate::linalg::scale_vec(&s, &v);
        if sign < 0 {
            neg.push(u);
        } else {
            pos.push(u);
        }
    }
    let mut signs = vec![-1; neg.len()];
    signs.extend(std::iter::repeat_n(1, pos.len()));
    neg.extend(pos);
    Ok((Matrix::from_columns(g.rows(), &neg), signs))
}

/// `AᵀG + GA = 0`.
pub fn is_antisymmetric_for(a: &Matrix, g: &Matrix) -> bool {
    let ga = g * a;
    (&a.transpose() * g).data().iter().zip(ga.data()).all(|(x, y)| (x + y).is_zero())
}
