//! Laplacian characteristic-polynomial coefficients, spectrum, Laplacian-like
//! energy and the Wiener index.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify, Graph};

/// Coefficients `c_0..c_n` with `det(xI - L) = sum (-1)^k c_k x^(n-k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoeffVector {
    pub c: Vec<BigUint>,
}

impl CoeffVector {
    pub fn new(c: Vec<BigUint>) -> Self {
        CoeffVector { c }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        CoeffVector {
            c: values.iter().map(|&v| BigUint::from(v)).collect(),
        }
    }

    /// Graph order, i.e. the polynomial degree.
    pub fn order(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.c[k]
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.c.iter().map(ToString::to_string).collect()
    }

    /// The polynomial in `x`, highest power first, e.g. `x^3-6x^2+9x`.
    pub fn polynomial_string(&self) -> String {
        let n = self.order();
        let mut out = String::new();
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let power = n - k;
            let sign = if k % 2 == 0 { '+' } else { '-' };
            if !out.is_empty() || sign == '-' {
                out.push(sign);
            }
            if !ck.is_one() || power == 0 {
                out.push_str(&ck.to_string());
            }
            match power {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{power}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Integer Laplacian `D - A`.
pub fn laplacian_matrix(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut m = vec![vec![0i64; n]; n];
    for v in 0..n {
        m[v][v] = g.degree(v) as i64;
        for &w in g.neighbors(v) {
            m[v][w] = -1;
        }
    }
    m
}

/// Characteristic polynomial `det(xI - M)` of an integer matrix by
/// Berkowitz's division-free algorithm. Returns coefficients highest
/// power first, so `p[0] = 1`.
pub fn charpoly_berkowitz(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        // leading block is a[0..k][0..k]; new row r, column col, corner a[k][k]
        let mut t = Vec::with_capacity(k + 2);
        t.push(BigInt::one());
        t.push(-a[k][k].clone());
        let mut v: Vec<BigInt> = (0..k).map(|i| a[i][k].clone()).collect();
        for _ in 0..k {
            let rv: BigInt = (0..k).map(|j| &a[k][j] * &v[j]).sum();
            t.push(-rv);
            v = (0..k)
                .map(|i| (0..k).map(|j| &a[i][j] * &v[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if i >= j {
                    *slot += &t[i - j] * pj;
                }
            }
        }
        p = next;
    }
    p
}

/// Exact Laplacian coefficients of `g`.
pub fn laplacian_coefficients(g: &Graph) -> CoeffVector {
    let p = charpoly_berkowitz(&laplacian_matrix(g));
    let c = p
        .into_iter()
        .enumerate()
        .map(|(k, pk)| {
            let ck = if k % 2 == 0 { pk } else { -pk };
            match ck.to_biguint() {
                Some(v) => v,
                None if ck.sign() == Sign::NoSign => BigUint::zero(),
                None => panic!("negative Laplacian coefficient c_{k} = {ck}"),
            }
        })
        .collect();
    CoeffVector { c }
}

/// Laplacian eigenvalues in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub mu: Vec<f64>,
}

pub fn laplacian_spectrum(g: &Graph) -> Spectrum {
    let n = g.order();
    if n == 0 {
        return Spectrum { mu: Vec::new() };
    }
    let lap = laplacian_matrix(g);
    let m = DMatrix::from_fn(n, n, |i, j| lap[i][j] as f64);
    let eig = SymmetricEigen::new(m);
    let mut mu: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    mu.sort_by(|a, b| b.total_cmp(a));
    Spectrum { mu }
}

/// Laplacian-like energy: sum of square roots of the `n - 1` largest
/// Laplacian eigenvalues.
pub fn lel(g: &Graph) -> f64 {
    lel_of(&laplacian_spectrum(g))
}

pub fn lel_of(spectrum: &Spectrum) -> f64 {
    let n = spectrum.mu.len();
    spectrum.mu[..n.saturating_sub(1)]
        .iter()
        .map(|&m| m.max(0.0).sqrt())
        .sum()
}

/// Sum of distances over unordered vertex pairs of a tree.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    if !classify(g).is_tree {
        return Err(Error::RequiresTree);
    }
    let total: usize = (0..g.order())
        .map(|s| g.distances_from(s).into_iter().flatten().sum::<usize>())
        .sum();
    Ok((total / 2) as u64)
}
