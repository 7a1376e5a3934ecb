//! Injective vertex functions, Poincare-Hopf indices, and curvature as the
//! exact expectation of the index over random functions.

use crate::clique::{self, CliqueOptions};
use crate::error::{Error, Result};
use crate::euler::euler_characteristic;
use crate::graph::Graph;
use crate::numeric::{rat_int, Rat};
use crate::rng::derive_seed;
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Injective real function on the vertices, stored exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexFunction {
    values: Vec<Rat>,
}

impl VertexFunction {
    /// Values in vertex-id order. Rejects repeated values: indices are only
    /// defined for injective functions.
    pub fn new(values: Vec<Rat>) -> Result<VertexFunction> {
        let mut sorted = values.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("vertex function is not injective".into()));
        }
        Ok(VertexFunction { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<VertexFunction> {
        VertexFunction::new(values.iter().map(|&v| rat_int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> &Rat {
        &self.values[v]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn negated(&self) -> VertexFunction {
        VertexFunction { values: self.values.iter().map(|v| -v).collect() }
    }
}

/// Uniform values on [-1,1] with granularity 2^-62, one per vertex,
/// deterministic in the seed. A collision resamples the colliding vertex, so
/// the result is always injective.
pub fn sample_function(g: &Graph, seed: u64) -> VertexFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 0x6d6f));
    let scale = 1i64 << 62;
    let mut taken = std::collections::BTreeSet::new();
    let mut values = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let raw = loop {
            let r = rng.gen_range(-scale..=scale);
            if taken.insert(r) {
                break r;
            }
        };
        values.push(Rat::new(BigInt::from(raw), BigInt::from(scale)));
    }
    VertexFunction { values }
}

fn check_pair(g: &Graph, f: &VertexFunction, x: usize) -> Result<()> {
    if f.len() != g.n() {
        return Err(Error::Input(format!(
            "function has {} values for a graph on {} vertices",
            f.len(),
            g.n()
        )));
    }
    if x >= g.n() {
        return Err(Error::Input(format!("vertex {x} out of range (n = {})", g.n())));
    }
    Ok(())
}

/// Poincare-Hopf index i_f(x) = 1 - chi(S_f^-(x)), where S_f^-(x) is the
/// part of the unit sphere where f is below f(x).
pub fn index(g: &Graph, f: &VertexFunction, x: usize) -> Result<i64> {
    check_pair(g, f, x)?;
    let fx = f.value(x);
    if let Some(rows) = g.rows_u64() {
        let mut below = 0u64;
        for y in g.neighbors(x) {
            if f.value(y) < fx {
                below |= 1 << y;
            }
        }
        return Ok(1 - if below == 0 { 0 } else { clique::chi_u64(&rows, below) });
    }
    let lower: Vec<usize> = g.neighbors(x).filter(|&y| f.value(y) < fx).collect();
    let sub = g.induced(&lower)?.graph;
    Ok(1 - euler_characteristic(&sub))
}

/// j_f(x) = (i_f(x) + i_{-f}(x)) / 2, an exact half-integer.
pub fn symmetric_index(g: &Graph, f: &VertexFunction, x: usize) -> Result<Rat> {
    let up = index(g, f, x)?;
    let down = index(g, &f.negated(), x)?;
    Ok(Rat::new(BigInt::from(up + down), BigInt::from(2)))
}

/// Sum of the indices over all vertices. The sum is the Euler characteristic
/// for every injective f, and so is the sum for -f; both identities are
/// asserted against the clique engine.
pub fn poincare_hopf_sum(g: &Graph, f: &VertexFunction) -> Result<i64> {
    if f.len() != g.n() {
        return Err(Error::Input(format!(
            "function has {} values for a graph on {} vertices",
            f.len(),
            g.n()
        )));
    }
    let neg = f.negated();
    let mut up = 0i64;
    let mut down = 0i64;
    for x in g.vertices() {
        up += index(g, f, x)?;
        down += index(g, &neg, x)?;
    }
    let chi = euler_characteristic(g);
    assert_eq!(up, chi, "Poincare-Hopf sum disagrees with the clique engine");
    assert_eq!(down, chi, "Poincare-Hopf sum for -f disagrees with the clique engine");
    Ok(up)
}

/// Curvature K(x): the expectation of i_f(x) over random injective f.
///
/// A k-simplex of S(x) lies entirely below x with probability 1/(k+2) under
/// any exchangeable atomless law on the k+2 involved values, so the
/// expectation collapses to 1 - sum_k (-1)^k V_k(x)/(k+2) with V the sphere
/// f-vector. Exact rational output.
pub fn exact_index_expectation(g: &Graph, x: usize) -> Result<Rat> {
    if x >= g.n() {
        return Err(Error::Input(format!("vertex {x} out of range (n = {})", g.n())));
    }
    let sphere = g.unit_sphere(x)?.graph;
    let fv = clique::f_vector(&sphere, &CliqueOptions::default())?;
    let mut k_x = Rat::new(BigInt::from(1), BigInt::from(1));
    for (k, count) in fv.counts().iter().enumerate() {
        let term = Rat::new(BigInt::from(count.clone()), BigInt::from(k as i64 + 2));
        if k % 2 == 0 {
            k_x -= term;
        } else {
            k_x += term;
        }
    }
    Ok(k_x)
}

/// Per-vertex curvature with its total.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureReport {
    pub curvatures: Vec<Rat>,
    pub total: Rat,
}

/// All vertex curvatures; the total is checked against chi(G) (Gauss-Bonnet)
/// and a mismatch panics, since it would mean a broken engine rather than
/// bad input.
pub fn curvature_report(g: &Graph) -> Result<CurvatureReport> {
    let curvatures: Vec<Rat> = g
        .vertices()
        .map(|x| exact_index_expectation(g, x))
        .collect::<Result<_>>()?;
    let total: Rat = curvatures.iter().sum();
    let chi = rat_int(euler_characteristic(g));
    assert_eq!(total, chi, "Gauss-Bonnet violated: curvature total != chi");
    Ok(CurvatureReport { curvatures, total })
}

/// Monte Carlo estimate of E[i_f(x)].
#[derive(Clone, Debug, PartialEq)]
pub struct McEstimate {
    pub samples: u64,
    /// Exact sample mean (the index sum is an integer).
    pub mean: Rat,
    /// Standard error of the mean; 0 for a single sample.
    pub stderr: f64,
}

/// Samples `samples` functions with per-sample seeds derived from `seed` and
/// averages the index at x. Sums are integers, so the mean is exact and
/// independent of summation order.
pub fn curvature_expectation(
    g: &Graph,
    x: usize,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::Input("need at least one sample".into()));
    }
    if x >= g.n() {
        return Err(Error::Input(format!("vertex {x} out of range (n = {})", g.n())));
    }
    let mut sum = 0i128;
    let mut sumsq = 0i128;
    for k in 0..samples {
        let f = sample_function(g, derive_seed(seed, k));
        let i = index(g, &f, x)? as i128;
        sum += i;
        sumsq += i * i;
    }
    let mean = Rat::new(BigInt::from(sum), BigInt::from(samples));
    let stderr = if samples < 2 {
        0.0
    } else {
        let n = samples as f64;
        let var = (sumsq as f64 - (sum as f64) * (sum as f64) / n) / (n - 1.0);
        (var.max(0.0) / n).sqrt()
    };
    Ok(McEstimate { samples, mean, stderr })
}
