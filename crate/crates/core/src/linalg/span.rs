use crate::linalg::matrix::Matrix;
use crate::linalg::subspace::Subspace;

/// Finite-dimensional space of `n × n` matrices.
#[derive(Clone, Debug)]
pub struct OperatorSpan {
    n: usize,
    generators: Vec<Matrix>,
    space: Subspace,
}

impl PartialEq for OperatorSpan {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.space == other.space
    }
}

impl Eq for OperatorSpan {}

impl OperatorSpan {
    pub fn new(n: usize) -> Self {
        OperatorSpan { n, generators: Vec::new(), space: Subspace::zero(n * n) }
    }

    pub fn from_generators<I: IntoIterator<Item = Matrix>>(n: usize, gens: I) -> Self {
        let mut s = OperatorSpan::new(n);
        for g in gens {
            s.insert(g);
        }
        s
    }

    /// Add a generator; returns `true` if the span grew.
    pub fn insert(&mut self, m: Matrix) -> bool {
        assert_eq!((m.rows(), m.cols()), (self.n, self.n), "operator has the wrong size");
        let grew = self.space.insert(m.data().to_vec());
        self.generators.push(m);
        grew
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(m.data())
    }

    pub fn contains_span(&self, other: &OperatorSpan) -> bool {
        self.space.contains_subspace(&other.space)
    }

    /// Echelon basis reshaped into matrices.
    pub fn basis(&self) -> Vec<Matrix> {
        self.space.basis().iter().map(|v| Matrix::new(self.n, self.n, v.clone()).expect("n*n entries")).collect()
    }

    /// Smallest commutator-closed span containing this one.
    pub fn bracket_closure(&self) -> OperatorSpan {
        let mut s = OperatorSpan::from_generators(self.n, self.basis());
        loop {
            let basis = s.basis();
            let mut grew = false;
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    let c = basis[i].commutator(&basis[j]);
                    if !c.is_zero() && s.insert(c) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return s;
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        let basis = self.basis();
        (0..basis.len()).all(|i| (i + 1..basis.len()).all(|j| self.contains(&basis[i].commutator(&basis[j]))))
    }

    pub fn is_abelian(&self) -> bool {
        let basis = self.basis();
        (0..basis.len()).all(|i| (i + 1..basis.len()).all(|j| basis[i].commutator(&basis[j]).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_matrix_is_closed() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let s = OperatorSpan::from_generators(2, [a]);
        assert_eq!(s.bracket_closure(), s);
    }

    #[test]
    fn so3_closure() {
        let l1 = Matrix::from_ints(&[[0, 0, 0], [0, 0, -1], [0, 1, 0]]);
        let l2 = Matrix::from_ints(&[[0, 0, 1], [0, 0, 0], [-1, 0, 0]]);
        let s = OperatorSpan::from_generators(3, [l1, l2]);
        assert_eq!(s.dim(), 2);
        let c = s.bracket_closure();
        assert_eq!(c.dim(), 3);
        assert!(c.contains_span(&s));
        assert_eq!(c.bracket_closure(), c);
        assert!(!c.is_abelian());
    }

    #[test]
    fn dependent_generators() {
        let a = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let b = a.scale(&crate::scalar::Scalar::from_i64(3));
        let s = OperatorSpan::from_generators(2, [a, b]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.generators().len(), 2);
        assert!(s.is_abelian());
    }
}
