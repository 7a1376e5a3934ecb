//! Expected Euler characteristic of Erdos-Renyi graphs, exactly and by
//! Monte Carlo, plus the signed-log sweep table behind the (n, p) plots.

use crate::error::{Error, Result};
use crate::euler::euler_characteristic_ph;
use crate::generate::{generate, Family};
use crate::morse::McEstimate;
use crate::numeric::{decimal_string, rat, rat_int, rational_string, Rat};
use crate::rng::derive_seed;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;

pub use crate::numeric::log_pm;

/// sign(x) * ln|x| with 0 mapped to 0, for floating inputs.
pub fn log_pm_f64(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.signum() * x.abs().ln()
    }
}

/// E_{n,p}[chi] = sum_{k=1}^{n} (-1)^(k+1) C(n,k) p^C(k,2), exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ErExpectation {
    pub n: u64,
    pub p: Rat,
    pub value: Rat,
    /// The signed summands, when requested.
    pub terms: Option<Vec<Rat>>,
}

impl ErExpectation {
    pub fn value_f64(&self) -> f64 {
        crate::numeric::rat_to_f64(&self.value)
    }
}

fn check_probability(p: &Rat) -> Result<()> {
    if *p < rat_int(0) || *p > rat_int(1) {
        return Err(Error::Input(format!(
            "probability {} is outside [0, 1]",
            rational_string(p)
        )));
    }
    Ok(())
}

pub fn expected_chi_exact(n: u64, p: &Rat) -> Result<ErExpectation> {
    expected_chi(n, p, false)
}

pub fn expected_chi_exact_with_terms(n: u64, p: &Rat) -> Result<ErExpectation> {
    expected_chi(n, p, true)
}

/// Evaluates the alternating sum over the common denominator b^C(n,2) where
/// p = a/b in lowest terms. The numerator of term k is
/// C(n,k) a^C(k,2) b^(C(n,2)-C(k,2)); the a-powers grow with k by a factor
/// a^(k-1) and the b-powers are laid down from k = n backwards, so no
/// exponentiation from scratch ever happens. The single reduction is the
/// final Rat construction.
fn expected_chi(n: u64, p: &Rat, with_terms: bool) -> Result<ErExpectation> {
    if n == 0 {
        return Err(Error::Input("order must be at least 1".into()));
    }
    check_probability(p)?;
    let un = n as usize;
    let a = p.numer().magnitude().clone();
    let b = p.denom().magnitude().clone();

    // a_pows[k-1] = a^C(k,2); the 0^0 = 1 case (p = 0) falls out of the
    // running product starting at one
    let mut a_pows = Vec::with_capacity(un);
    let mut cur = BigUint::one();
    let mut step = BigUint::one();
    for _k in 1..=un {
        a_pows.push(cur.clone());
        step *= &a;
        cur *= &step;
    }

    // b_pows[k-1] = b^(C(n,2) - C(k,2)), built descending from b^0 at k = n
    let mut small: Vec<BigUint> = Vec::with_capacity(un + 1); // b^j
    let mut bj = BigUint::one();
    for _ in 0..=un {
        small.push(bj.clone());
        bj *= &b;
    }
    let mut b_pows = vec![BigUint::one(); un];
    for k in (1..un).rev() {
        b_pows[k - 1] = &b_pows[k] * &small[k];
    }

    // binomials C(n,k) for k = 1..=n
    let mut binoms = Vec::with_capacity(un);
    let mut c = BigUint::from(n);
    binoms.push(c.clone());
    for k in 2..=n {
        c = c * BigUint::from(n - k + 1) / BigUint::from(k);
        binoms.push(c.clone());
    }

    let numerators: Vec<BigInt> = (0..un)
        .into_par_iter()
        .map(|i| {
            let mag = &binoms[i] * &a_pows[i] * &b_pows[i];
            if i % 2 == 0 {
                BigInt::from(mag)
            } else {
                -BigInt::from(mag)
            }
        })
        .collect();
    let denom = BigInt::from(b_pows[0].clone() * &small[0]); // b^C(n,2)
    let total: BigInt = numerators.iter().sum();
    let value = Rat::new(total, denom.clone());
    let terms = with_terms
        .then(|| numerators.into_iter().map(|t| Rat::new(t, denom.clone())).collect());
    Ok(ErExpectation { n, p: p.clone(), value, terms })
}

/// Guard for Monte Carlo sampling; dense high-order graphs make per-sample
/// chi computation explode.
#[derive(Clone, Debug)]
pub struct McCap {
    pub max_n: u64,
    pub max_p: Rat,
}

impl Default for McCap {
    fn default() -> Self {
        McCap { max_n: 64, max_p: rat(7, 10) }
    }
}

pub fn expected_chi_mc(n: u64, p: &Rat, samples: u64, seed: u64) -> Result<McEstimate> {
    expected_chi_mc_capped(n, p, samples, seed, &McCap::default())
}

/// Monte Carlo mean of chi over sampled graphs, each evaluated with the
/// Poincare-Hopf engine. Integer accumulation keeps the mean exact and
/// independent of sample order.
pub fn expected_chi_mc_capped(
    n: u64,
    p: &Rat,
    samples: u64,
    seed: u64,
    cap: &McCap,
) -> Result<McEstimate> {
    if n == 0 {
        return Err(Error::Input("order must be at least 1".into()));
    }
    check_probability(p)?;
    if samples == 0 {
        return Err(Error::Input("need at least one sample".into()));
    }
    if n > cap.max_n || *p > cap.max_p {
        return Err(Error::Capacity(format!(
            "Monte Carlo guard: n <= {} and p <= {} (got n = {n}, p = {})",
            cap.max_n,
            rational_string(&cap.max_p),
            rational_string(p)
        )));
    }
    let (sum, sumsq) = (0..samples)
        .into_par_iter()
        .map(|k| {
            let fam = Family::ErdosRenyi {
                n: n as usize,
                p: p.clone(),
                seed: derive_seed(seed, k),
            };
            let g = generate(&fam).expect("validated parameters");
            let chi = euler_characteristic_ph(&g) as i128;
            (chi, chi * chi)
        })
        .reduce(|| (0i128, 0i128), |x, y| (x.0 + y.0, x.1 + y.1));
    let mean = Rat::new(BigInt::from(sum), BigInt::from(samples));
    let stderr = if samples < 2 {
        0.0
    } else {
        let fs = samples as f64;
        let var = (sumsq as f64 - (sum as f64) * (sum as f64) / fs) / (fs - 1.0);
        (var.max(0.0) / fs).sqrt()
    };
    Ok(McEstimate { samples, mean, stderr })
}

/// One sweep cell: the exact expectation and its signed-log image.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub n: u64,
    pub p: Rat,
    pub value: Rat,
    pub log_pm: f64,
}

/// Exact expectations for every (n, p) with n = 1..=n_max, evaluated in
/// parallel and returned sorted by (n, p).
pub fn sweep(n_max: u64, ps: &[Rat]) -> Result<Vec<SweepRow>> {
    if n_max == 0 {
        return Err(Error::Input("order must be at least 1".into()));
    }
    for p in ps {
        check_probability(p)?;
    }
    let mut cells: Vec<(u64, Rat)> = Vec::new();
    for n in 1..=n_max {
        for p in ps {
            cells.push((n, p.clone()));
        }
    }
    let mut rows: Vec<SweepRow> = cells
        .into_par_iter()
        .map(|(n, p)| {
            let e = expected_chi(n, &p, false).expect("validated parameters");
            let image = log_pm(&e.value);
            SweepRow { n, p, value: e.value, log_pm: image }
        })
        .collect();
    rows.sort_by(|x, y| (x.n, &x.p).cmp(&(y.n, &y.p)));
    Ok(rows)
}

/// CSV rendering: exact fraction for p, 15 significant digits for the
/// expectation, shortest-roundtrip float for the log image.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("n,p,expected_chi,log_pm\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n,
            rational_string(&r.p),
            decimal_string(&r.value, 15),
            r.log_pm
        ));
    }
    out
}
