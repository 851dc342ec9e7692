use crate::linalg::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

/// Linear subspace of `K^n`, stored as the rows of its reduced echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(|i| crate::linalg::unit_vector(ambient, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &mut Vector) {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(b).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }

    /// Add a vector; returns `true` if the dimension grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for b in &mut self.basis {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (x, y) in b.iter_mut().zip(&v).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coeffs: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= c * y;
                }
            }
        }
        w.iter().all(Scalar::is_zero).then_some(coeffs)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Subspace::zero(self.ambient);
        }
        // Σ a_i u_i − Σ b_j w_j = 0
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect::<Vector>()));
        let m = Matrix::from_columns(self.ambient, &cols);
        let vecs = m.kernel_basis().into_iter().map(|c| {
            let mut v = vec![Scalar::zero(); self.ambient];
            for (a, u) in c.iter().take(k).zip(&self.basis) {
                if a.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(u) {
                    *x += a * y;
                }
            }
            v
        });
        Subspace::span(self.ambient, vecs)
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn as_columns(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }
}

/// Dimension of `∩ ker M_i`, computed by successive restriction.
pub fn joint_kernel_dim(n: usize, ops: &[Matrix]) -> usize {
    joint_kernel(n, ops).len()
}

/// Basis of the common kernel of the given `n`-column matrices.
pub fn joint_kernel(n: usize, ops: &[Matrix]) -> Vec<Vector> {
    // Columns of `k` span the current common kernel.
    let mut k = Matrix::identity(n);
    for m in ops {
        if k.cols() == 0 {
            break;
        }
        let mk = m * &k;
        if mk.is_zero() {
            continue;
        }
        let sub = mk.kernel_basis();
        k = &k * &Matrix::from_columns(k.cols(), &sub);
    }
    k.columns()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_i64(x)).collect()
    }

    #[test]
    fn canonical_basis_is_order_independent() {
        let a = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, [v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert!(a.contains(&v(&[2, 3, 1])));
        assert!(!a.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span(3, [unit_vector(3, 0), unit_vector(3, 1)]);
        let b = Subspace::span(3, [unit_vector(3, 1), unit_vector(3, 2)]);
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.intersection(&b), Subspace::span(3, [unit_vector(3, 1)]));
    }

    #[test]
    fn coordinates_reconstruct() {
        let a = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let x = v(&[2, 5, 3]);
        let c = a.coordinates(&x).unwrap();
        let mut y = vec![Scalar::zero(); 3];
        for (ci, b) in c.iter().zip(a.basis()) {
            for (yi, bi) in y.iter_mut().zip(b) {
                *yi += ci * bi;
            }
        }
        assert_eq!(y, x);
        assert!(a.coordinates(&v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn joint_kernel_matches_stacked_kernel() {
        let a = Matrix::from_ints(&[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
        let b = Matrix::from_ints(&[[0, 1, -1, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
        let stacked = Matrix::vstack(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(joint_kernel_dim(4, &[a, b]), stacked.kernel_dim());
    }
}
