//! Brute-force spanning-forest sums, used as an independent oracle for the
//! Laplacian coefficients, plus exact spanning-tree counting.
//!
//! `c_{n-k}` equals the sum, over spanning forests with `k` components, of
//! the product of the component orders.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{laplacian_matrix, CoeffVector};

/// Largest order accepted by the forest enumeration.
pub const MAX_FOREST_ORDER: usize = 14;
/// Largest edge count accepted by the forest enumeration (it walks up to
/// `2^m` edge subsets).
pub const MAX_FOREST_EDGES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestSum {
    pub k: usize,
    pub total: BigUint,
}

/// Union-find with undo, no path compression.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns false (and records nothing) when `a` and `b` are already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }

    fn gamma(&self) -> u128 {
        (0..self.parent.len())
            .filter(|&v| self.parent[v] == v)
            .map(|v| self.size[v] as u128)
            .product()
    }
}

fn check_guard(g: &Graph) -> Result<()> {
    if g.order() > MAX_FOREST_ORDER {
        return Err(Error::GuardExceeded(format!(
            "forest enumeration limited to n <= {MAX_FOREST_ORDER}, got {}",
            g.order()
        )));
    }
    if g.size() > MAX_FOREST_EDGES {
        return Err(Error::GuardExceeded(format!(
            "forest enumeration limited to {MAX_FOREST_EDGES} edges, got {}",
            g.size()
        )));
    }
    Ok(())
}

/// Sums of `gamma(F)` indexed by the number of forest edges.
fn forest_sums_by_edges(g: &Graph, only: Option<usize>) -> Vec<BigUint> {
    let edges = g.edges();
    let n = g.order();
    let mut sums = vec![0u128; n];
    let mut dsu = RollbackDsu::new(n);

    fn walk(
        i: usize,
        taken: usize,
        edges: &[(usize, usize)],
        only: Option<usize>,
        dsu: &mut RollbackDsu,
        sums: &mut [u128],
    ) {
        if let Some(target) = only {
            if taken > target || taken + (edges.len() - i) < target {
                return;
            }
        }
        if i == edges.len() {
            sums[taken] += dsu.gamma();
            return;
        }
        walk(i + 1, taken, edges, only, dsu, sums);
        let (u, v) = edges[i];
        if dsu.union(u, v) {
            walk(i + 1, taken + 1, edges, only, dsu, sums);
            dsu.undo();
        }
    }

    if n > 0 {
        walk(0, 0, edges, only, &mut dsu, &mut sums);
    }
    sums.into_iter().map(BigUint::from).collect()
}

/// Sum of `gamma(F)` over spanning forests of `g` with exactly `k` components.
pub fn forest_coefficient(g: &Graph, k: usize) -> Result<ForestSum> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::ComponentCountOutOfRange { k, n });
    }
    check_guard(g)?;
    let sums = forest_sums_by_edges(g, Some(n - k));
    Ok(ForestSum {
        k,
        total: sums[n - k].clone(),
    })
}

/// All coefficients from forest sums, with `c_0 = 1` and `c_n = 0`.
pub fn coefficients_via_forests(g: &Graph) -> Result<CoeffVector> {
    check_guard(g)?;
    let n = g.order();
    let sums = forest_sums_by_edges(g, None);
    let mut c = Vec::with_capacity(n + 1);
    // c_m sums forests with m edges; the edgeless forest gives c_0 = 1.
    c.extend(sums);
    c.push(BigUint::zero());
    if n == 0 {
        c = vec![BigUint::one()];
    }
    Ok(CoeffVector::new(c))
}

/// Number of spanning trees via the matrix-tree theorem, computed with
/// fraction-free Bareiss elimination on a reduced Laplacian.
pub fn spanning_tree_count(g: &Graph) -> BigUint {
    let n = g.order();
    if n <= 1 {
        return BigUint::one();
    }
    let lap = laplacian_matrix(g);
    let mut m: Vec<Vec<BigInt>> = lap[1..]
        .iter()
        .map(|row| row[1..].iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_determinant(&mut m)
        .to_biguint()
        .expect("reduced Laplacian determinant is nonnegative")
}

fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = val;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
