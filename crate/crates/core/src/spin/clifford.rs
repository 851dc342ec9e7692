//! Clifford generators as tensor products of the 2×2 matrices `U, V, E, T`.

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A matrix with exactly one entry per column: `M e_j = coef[j] e_{perm[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub perm: Vec<usize>,
    pub coef: Vec<Scalar>,
}

impl Monomial {
    pub fn identity(n: usize) -> Self {
        Monomial { perm: (0..n).collect(), coef: vec![Scalar::one(); n] }
    }

    fn from_2x2(m: [[i64; 2]; 2], imaginary: bool) -> Self {
        let unit = if imaginary { Scalar::i() } else { Scalar::one() };
        let mut perm = vec![0; 2];
        let mut coef = vec![Scalar::zero(); 2];
        for j in 0..2 {
            let i = (0..2).find(|&i| m[i][j] != 0).expect("monomial");
            perm[j] = i;
            coef[j] = &unit * &Scalar::from_i64(m[i][j]);
        }
        Monomial { perm, coef }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Monomial { perm: self.perm.clone(), coef: self.coef.iter().map(|c| c * s).collect() }
    }

    /// `self · other`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let perm = other.perm.iter().map(|&k| self.perm[k]).collect();
        let coef = other.coef.iter().zip(&other.perm).map(|(c, &k)| c * &self.coef[k]).collect();
        Monomial { perm, coef }
    }

    pub fn kron(&self, other: &Monomial) -> Monomial {
        let m = other.dim();
        let mut perm = Vec::with_capacity(self.dim() * m);
        let mut coef = Vec::with_capacity(self.dim() * m);
        for (a, ca) in self.perm.iter().zip(&self.coef) {
            for (b, cb) in other.perm.iter().zip(&other.coef) {
                perm.push(a * m + b);
                coef.push(ca * cb);
            }
        }
        Monomial { perm, coef }
    }

    /// `target += s · self`.
    pub fn add_scaled_to(&self, target: &mut Matrix, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (j, (i, c)) in self.perm.iter().zip(&self.coef).enumerate() {
            target[(*i, j)] += &(c * s);
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        self.add_scaled_to(&mut m, &Scalar::one());
        m
    }
}

pub fn u_matrix() -> Matrix {
    Monomial::from_2x2([[1, 0], [0, -1]], true).to_matrix()
}

pub fn v_matrix() -> Matrix {
    Monomial::from_2x2([[0, 1], [1, 0]], true).to_matrix()
}

pub fn t_matrix() -> Matrix {
    Monomial::from_2x2([[0, -1], [1, 0]], true).to_matrix()
}

fn kron_all(factors: &[Monomial]) -> Monomial {
    factors.iter().fold(Monomial::identity(1), |acc, f| acc.kron(f))
}

/// Generators `γ_1 … γ_n` with `γ_iγ_j + γ_jγ_i = −2κ_iδ_ij`.
///
/// Pair `j` (generators `2j−1`, `2j`) acts on tensor factor `j` counted from
/// the right and carries `j−1` factors `T` to its right. In odd dimension the
/// last generator is `τ·iT⊗…⊗T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordRep {
    signs: Vec<i32>,
    gammas: Vec<Monomial>,
    m: usize,
}

impl CliffordRep {
    pub fn with_signs(signs: &[i32]) -> Self {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1), "signs must be ±1");
        let n = signs.len();
        let m = n / 2;
        let u = Monomial::from_2x2([[1, 0], [0, -1]], true);
        let v = Monomial::from_2x2([[0, 1], [1, 0]], true);
        let t = Monomial::from_2x2([[0, -1], [1, 0]], true);
        let e = Monomial::identity(2);
        let tau = |k: usize| if signs[k] < 0 { Scalar::i() } else { Scalar::one() };
        let mut gammas = Vec::with_capacity(n);
        for j in 1..=m {
            for (k, mid) in [(2 * j - 2, &u), (2 * j - 1, &v)] {
                let mut factors = vec![e.clone(); m - j];
                factors.push(mid.clone());
                factors.extend(std::iter::repeat_n(t.clone(), j - 1));
                gammas.push(kron_all(&factors).scale(&tau(k)));
            }
        }
        if n % 2 == 1 {
            let last = kron_all(&vec![t.clone(); m]).scale(&(&tau(n - 1) * &Scalar::i()));
            gammas.push(last);
        }
        CliffordRep { signs: signs.to_vec(), gammas, m }
    }

    /// Signature `(r,s)`: the `r` negative generators come first.
    pub fn new(r: usize, s: usize) -> Self {
        let signs: Vec<i32> = std::iter::repeat_n(-1, r).chain(std::iter::repeat_n(1, s)).collect();
        Self::with_signs(&signs)
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn spinor_dim(&self) -> usize {
        1 << self.m
    }

    pub fn signs(&self) -> &[i32] {
        &self.signs
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.gammas[i]
    }

    pub fn gamma(&self, i: usize) -> Matrix {
        self.gammas[i].to_matrix()
    }

    /// `γ(v) = Σ v_i γ_i` for coordinates in the orthonormal basis.
    pub fn gamma_vec(&self, v: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.spinor_dim(), self.spinor_dim());
        for (g, c) in self.gammas.iter().zip(v) {
            g.add_scaled_to(&mut out, c);
        }
        out
    }

    /// Clifford product `γ(a)γ(b)`.
    pub fn vec_product(&self, a: &[Scalar], b: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.spinor_dim(), self.spinor_dim());
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, bk) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                self.gammas[i].mul(&self.gammas[k]).add_scaled_to(&mut out, &(ai * bk));
            }
        }
        out
    }

    /// Pairs `(i,j)` whose anticommutator differs from `−2κ_iδ_ij·Id`.
    pub fn anticommutator_failures(&self) -> Vec<(usize, usize)> {
        let d = self.spinor_dim();
        let mut bad = Vec::new();
        for i in 0..self.n() {
            for j in i..self.n() {
                let mut ac = self.gammas[i].mul(&self.gammas[j]).to_matrix();
                self.gammas[j].mul(&self.gammas[i]).add_scaled_to(&mut ac, &Scalar::one());
                let expected = if i == j {
                    Matrix::identity(d).scale(&Scalar::from_i64(-2 * i64::from(self.signs[i])))
                } else {
                    Matrix::zeros(d, d)
                };
                if ac != expected {
                    bad.push((i, j));
                }
            }
        }
        bad
    }
}

pub fn clifford_generators(r: usize, s: usize) -> CliffordRep {
    CliffordRep::new(r, s)
}

/// `u(ε) = (1, −εi)/√2`.
pub fn u_eps(eps: i32) -> Vec<Scalar> {
    let h = Scalar::inv_sqrt2();
    vec![h.clone(), &(&h * &Scalar::i()) * &Scalar::from_i64(-i64::from(eps))]
}

/// `u(ε_m) ⊗ … ⊗ u(ε_1)`, with `eps` listed as `(ε_m, …, ε_1)`.
pub fn spinor_basis_vector(eps: &[i32]) -> Vec<Scalar> {
    eps.iter().fold(vec![Scalar::one()], |acc, &e| {
        let u = u_eps(e);
        acc.iter().flat_map(|a| u.iter().map(move |b| a * b)).collect()
    })
}

/// All sign vectors `(ε_m, …, ε_1)` in lexicographic order with `+1 < −1`.
pub fn sign_vectors(m: usize) -> Vec<Vec<i32>> {
    (0..1usize << m).map(|bits| (0..m).map(|k| if bits >> (m - 1 - k) & 1 == 1 { -1 } else { 1 }).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutators_up_to_eight() {
        for n in 0..=8 {
            for r in 0..=n {
                let rep = CliffordRep::new(r, n - r);
                assert!(rep.anticommutator_failures().is_empty(), "({r},{})", n - r);
                assert_eq!(rep.gammas.len(), n);
            }
        }
    }

    #[test]
    fn small_signatures() {
        let rep = CliffordRep::new(0, 2);
        assert_eq!(rep.gamma(0), u_matrix());
        assert_eq!(rep.gamma(1), v_matrix());
        assert_eq!(&rep.gamma(0) * &rep.gamma(0), Matrix::identity(2).scale(&Scalar::from_i64(-1)));
        let rep = CliffordRep::new(1, 1);
        assert_eq!(rep.gamma(0), u_matrix().scale(&Scalar::i()));
        assert_eq!(&rep.gamma(0) * &rep.gamma(0), Matrix::identity(2));
    }

    #[test]
    fn tensor_layout() {
        let rep = CliffordRep::new(0, 4);
        assert_eq!(rep.gamma(0), Matrix::identity(2).kron(&u_matrix()));
        assert_eq!(rep.gamma(3), v_matrix().kron(&t_matrix()));
        let odd = CliffordRep::new(0, 5);
        assert_eq!(odd.gamma(4), t_matrix().kron(&t_matrix()).scale(&Scalar::i()));
    }

    #[test]
    fn spinor_basis_is_orthonormal_and_t_acts_by_sign() {
        let vs: Vec<Vec<Scalar>> = sign_vectors(2).iter().map(|e| spinor_basis_vector(e)).collect();
        assert_eq!(sign_vectors(2)[1], vec![1, -1]);
        for (a, x) in vs.iter().enumerate() {
            for (b, y) in vs.iter().enumerate() {
                let h: Scalar = x.iter().zip(y).map(|(p, q)| p * &q.conj()).sum();
                assert_eq!(h, if a == b { Scalar::one() } else { Scalar::zero() });
            }
        }
        for e in [1, -1] {
            let tu = t_matrix().mul_vec(&u_eps(e));
            let expect: Vec<Scalar> = u_eps(e).iter().map(|x| x * &Scalar::from_i64(-i64::from(e))).collect();
            assert_eq!(tu, expect);
        }
    }

    #[test]
    fn monomial_product_matches_dense() {
        let rep = CliffordRep::new(2, 3);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(rep.monomial(i).mul(rep.monomial(j)).to_matrix(), &rep.gamma(i) * &rep.gamma(j));
            }
        }
    }
}
