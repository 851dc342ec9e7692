//! Weight counts for the irreducible real representations of `su(2)`.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Su2Rep {
    /// `ρ_k : su(2) → so(2k+1)`.
    Rho,
    /// `σ_k : su(2) → so(4k)`.
    Sigma,
}

impl fmt::Display for Su2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Su2Rep::Rho => "rho",
            Su2Rep::Sigma => "sigma",
        })
    }
}

impl FromStr for Su2Rep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rho" => Ok(Su2Rep::Rho),
            "sigma" => Ok(Su2Rep::Sigma),
            other => Err(format!("unknown su(2) representation '{other}' (expected rho or sigma)")),
        }
    }
}

/// Counts sign vectors by the value of `Σ w_i ε_i`, returning `N(z0) − N(z1)`.
fn signed_count(weights: &[i64], z0: i64, z1: i64) -> i64 {
    let n = weights.len();
    let total: i64 = weights.iter().sum();
    let (mut n0, mut n1) = (0i64, 0i64);
    for bits in 0u64..1u64 << n {
        // ε_i = −1 where the bit is set
        let mut s = total;
        let mut b = bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            s -= 2 * weights[i];
            b &= b - 1;
        }
        if s == z0 {
            n0 += 1;
        } else if s == z1 {
            n1 += 1;
        }
    }
    n0 - n1
}

/// `N_0 − N_2` for `ρ_k` (weights `1,…,k`), or `N_0′ − N_2′` for `σ_k`
/// (weights `1,−1,3,−3,…,2k−1,−(2k−1)`, target `4`).
pub fn su2_weight_count(kind: Su2Rep, k: usize) -> i64 {
    assert!(k >= 1, "k must be at least 1");
    match kind {
        Su2Rep::Rho => {
            let w: Vec<i64> = (1..=k as i64).collect();
            signed_count(&w, 0, 2)
        }
        Su2Rep::Sigma => {
            let w: Vec<i64> = (1..=k as i64).flat_map(|i| [2 * i - 1, -(2 * i - 1)]).collect();
            signed_count(&w, 0, 4)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    // subset-sum dynamic programme over the value of Σ w_i ε_i
    fn dp(weights: &[i64]) -> HashMap<i64, i64> {
        let mut m = HashMap::from([(0i64, 1i64)]);
        for w in weights {
            let mut next = HashMap::new();
            for (s, c) in m {
                *next.entry(s + w).or_insert(0) += c;
                *next.entry(s - w).or_insert(0) += c;
            }
            m = next;
        }
        m
    }

    #[test]
    fn rho_table() {
        let ks = [3, 4, 7, 8, 11, 12, 15, 16, 19, 20];
        let vals = [1, 0, 0, 1, 1, 1, 3, 1, 5, 12];
        for (k, v) in ks.iter().zip(vals) {
            assert_eq!(su2_weight_count(Su2Rep::Rho, *k), v, "k={k}");
        }
    }

    #[test]
    fn sigma_table() {
        let vals = [2, 3, 4, 5, 8, 11, 16, 29, 50, 94];
        for (k, v) in (1..=10).zip(vals) {
            assert_eq!(su2_weight_count(Su2Rep::Sigma, k), v, "k={k}");
        }
    }

    #[test]
    fn agrees_with_dynamic_programme() {
        for k in 1..=14usize {
            let w: Vec<i64> = (1..=k as i64).collect();
            let m = dp(&w);
            let get = |s| *m.get(&s).unwrap_or(&0);
            assert_eq!(su2_weight_count(Su2Rep::Rho, k), get(0) - get(2));
        }
        for k in 1..=6usize {
            let w: Vec<i64> = (1..=k as i64).flat_map(|i| [2 * i - 1, -(2 * i - 1)]).collect();
            let m = dp(&w);
            let get = |s| *m.get(&s).unwrap_or(&0);
            assert_eq!(su2_weight_count(Su2Rep::Sigma, k), get(0) - get(4));
        }
    }

    #[test]
    fn parse_kind() {
        assert_eq!("sigma".parse::<Su2Rep>().unwrap(), Su2Rep::Sigma);
        assert!("tau".parse::<Su2Rep>().is_err());
    }
}
