//! Spanning tree counts via the matrix-tree theorem.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Result of a spanning tree count. A disconnected graph is not an error:
/// it reports zero with the flag cleared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCount {
    pub count: BigUint,
    pub connected: bool,
}

/// Number of spanning trees, i.e. Det(L_0)/n where Det is the product of
/// nonzero Laplacian eigenvalues. Computed exactly as the determinant of the
/// Laplacian with row and column 0 deleted (the two agree on connected
/// graphs, and both vanish on disconnected ones).
pub fn spanning_tree_count(g: &Graph) -> Result<TreeCount> {
    if g.n() == 0 {
        return Err(Error::Input("spanning tree count needs at least one vertex".into()));
    }
    let connected = g.is_connected();
    if !connected {
        return Ok(TreeCount { count: BigUint::zero(), connected });
    }
    let m = g.n() - 1;
    let mut mat: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); m]; m];
    for i in 0..m {
        mat[i][i] = BigInt::from(g.degree(i + 1));
        for j in 0..m {
            if i != j && g.has_edge(i + 1, j + 1) {
                mat[i][j] = -BigInt::one();
            }
        }
    }
    let det = bareiss_determinant(mat);
    debug_assert!(!det.is_negative(), "reduced Laplacian determinant is nonnegative");
    Ok(TreeCount { count: det.magnitude().clone(), connected })
}

/// Exact integer determinant by Bareiss fraction-free elimination.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
