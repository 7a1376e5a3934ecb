//! Extremal Euler characteristic over graphs of a fixed order: exhaustive
//! scan through order 7, simulated annealing beyond, and the monotonicity
//! table for the connected minima and maxima.

use crate::clique::{chi_u64, full_mask};
use crate::einstein::is_einstein;
use crate::error::{Error, Result};
use crate::euler::{euler_characteristic, euler_characteristic_ph};
use crate::graph::Graph;
use crate::io::{serialize_graph, GraphFormat};
use crate::rng::derive_seed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Hard cap for the labeled-graph scan: 2^21 graphs at order 7.
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

const WITNESS_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Min,
    Max,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Min => "min",
            Mode::Max => "max",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Anneal,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::Anneal => "anneal",
        })
    }
}

/// Outcome of one extremal search. Witnesses are pairwise non-isomorphic
/// for exhaustive scans (capped at ten) and a single best-ever state for
/// annealing; every witness re-evaluates to `best_value`.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub order: usize,
    pub mode: Mode,
    pub connected_only: bool,
    pub best_value: i64,
    pub witnesses: Vec<Graph>,
    pub method: Method,
    pub seed: Option<u64>,
    pub evaluations: u64,
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn rows_connected(rows: &[u64]) -> bool {
    let n = rows.len();
    if n == 0 {
        return true;
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full_mask(n)
}

const FILTERED: i16 = i16::MIN;

fn scan_chi(n: usize, pairs: &[(usize, usize)], mask: u64, connected_only: bool) -> i16 {
    let mut rows = [0u64; MAX_EXHAUSTIVE_ORDER];
    for (t, &(u, v)) in pairs.iter().enumerate() {
        if mask >> t & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    if connected_only && !rows_connected(&rows[..n]) {
        return FILTERED;
    }
    let chi = chi_u64(&rows[..n], full_mask(n));
    debug_assert!(chi.abs() < i16::MAX as i64);
    chi as i16
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Result<Graph> {
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(n, &edges)
}

/// Exact connected (or unrestricted) extrema of the Euler characteristic
/// over all labeled graphs of order `n <= 7`, with up to ten pairwise
/// non-isomorphic witnesses per extreme.
pub fn exhaustive_extremal(n: usize, connected_only: bool) -> Result<(SearchResult, SearchResult)> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Capacity(format!(
            "exhaustive scan handles order <= {MAX_EXHAUSTIVE_ORDER}, got {n}; use anneal_extremal"
        )));
    }
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    let chis: Vec<i16> = (0..total)
        .into_par_iter()
        .map(|mask| scan_chi(n, &pairs, mask, connected_only))
        .collect();
    let mut lo = i16::MAX;
    let mut hi = i16::MIN;
    let mut evaluations = 0u64;
    for &c in &chis {
        if c == FILTERED {
            continue;
        }
        evaluations += 1;
        lo = lo.min(c);
        hi = hi.max(c);
    }
    let witnesses = |target: i16| -> Result<Vec<Graph>> {
        let mut keys: Vec<Vec<u64>> = Vec::new();
        let mut out: Vec<Graph> = Vec::new();
        for (mask, &c) in chis.iter().enumerate() {
            if c != target {
                continue;
            }
            let g = graph_from_mask(n, &pairs, mask as u64)?;
            let key = g.canonical_key()?;
            if keys.contains(&key) {
                continue;
            }
            assert_eq!(euler_characteristic(&g), i64::from(target));
            keys.push(key);
            out.push(g);
            if out.len() == WITNESS_CAP {
                break;
            }
        }
        Ok(out)
    };
    let result = |mode: Mode, value: i16, wits: Vec<Graph>| SearchResult {
        order: n,
        mode,
        connected_only,
        best_value: i64::from(value),
        witnesses: wits,
        method: Method::Exhaustive,
        seed: None,
        evaluations,
    };
    let min_wits = witnesses(lo)?;
    let max_wits = witnesses(hi)?;
    Ok((result(Mode::Min, lo, min_wits), result(Mode::Max, hi, max_wits)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnealSchedule {
    pub steps: u64,
    pub t_start: f64,
    pub t_end: f64,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        AnnealSchedule { steps: 100_000, t_start: 2.0, t_end: 0.05 }
    }
}

/// Simulated annealing over single edge flips, geometric temperature
/// schedule, objective evaluated by the Poincare-Hopf engine. Starts from
/// the path graph and returns the best state ever visited; deterministic in
/// `seed`. Disconnecting flips are rejected outright when `connected_only`
/// is set.
pub fn anneal_extremal(
    n: usize,
    mode: Mode,
    schedule: &AnnealSchedule,
    connected_only: bool,
    seed: u64,
) -> Result<SearchResult> {
    if n < 2 {
        return Err(Error::Input(format!("annealing needs order >= 2, got {n}")));
    }
    if schedule.steps < 1 {
        return Err(Error::Input("annealing needs at least one step".into()));
    }
    if !(schedule.t_start > 0.0 && schedule.t_end > 0.0)
        || !schedule.t_start.is_finite()
        || !schedule.t_end.is_finite()
    {
        return Err(Error::Input(format!(
            "temperatures must be finite and positive, got {} -> {}",
            schedule.t_start, schedule.t_end
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 0x616e));
    let path: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let mut g = Graph::from_edges(n, &path)?;
    let sign: i64 = match mode {
        Mode::Min => 1,
        Mode::Max => -1,
    };
    let mut current = sign * euler_characteristic_ph(&g);
    let mut evaluations = 1u64;
    let mut best = current;
    let mut best_graph = g.clone();
    let pairs = vertex_pairs(n);
    let cool = if schedule.steps > 1 {
        (schedule.t_end / schedule.t_start).powf(1.0 / (schedule.steps - 1) as f64)
    } else {
        1.0
    };
    let mut t = schedule.t_start;
    for _ in 0..schedule.steps {
        let (u, v) = pairs[rng.gen_range(0..pairs.len())];
        let removing = g.has_edge(u, v);
        g.toggle_edge(u, v);
        if connected_only && removing && !g.is_connected() {
            g.toggle_edge(u, v);
        } else {
            let proposed = sign * euler_characteristic_ph(&g);
            evaluations += 1;
            let delta = (proposed - current) as f64;
            if delta <= 0.0 || rng.gen::<f64>() < (-delta / t).exp() {
                current = proposed;
                if current < best {
                    best = current;
                    best_graph = g.clone();
                }
            } else {
                g.toggle_edge(u, v);
            }
        }
        t *= cool;
    }
    Ok(SearchResult {
        order: n,
        mode,
        connected_only,
        best_value: sign * best,
        witnesses: vec![best_graph],
        method: Method::Anneal,
        seed: Some(seed),
        evaluations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityRow {
    pub order: usize,
    pub min_chi: i64,
    pub max_chi: i64,
}

/// Connected extrema for every order 1..=n_max. Panics if the minimum ever
/// rises or the maximum ever falls as the order grows.
pub fn monotonicity_report(n_max: usize) -> Result<Vec<MonotonicityRow>> {
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (min, max) = exhaustive_extremal(n, true)?;
        rows.push(MonotonicityRow { order: n, min_chi: min.best_value, max_chi: max.best_value });
    }
    for w in rows.windows(2) {
        assert!(
            w[1].min_chi <= w[0].min_chi,
            "minimum rose from {} at order {} to {} at order {}",
            w[0].min_chi,
            w[0].order,
            w[1].min_chi,
            w[1].order
        );
        assert!(
            w[1].max_chi >= w[0].max_chi,
            "maximum fell from {} at order {} to {} at order {}",
            w[0].max_chi,
            w[0].order,
            w[1].max_chi,
            w[1].order
        );
    }
    Ok(rows)
}

/// A search result with one Einstein flag per witness, index-aligned.
#[derive(Clone, Debug)]
pub struct AnnotatedResult {
    pub result: SearchResult,
    pub einstein: Vec<bool>,
}

pub fn einstein_filter(result: SearchResult) -> Result<AnnotatedResult> {
    let einstein = result
        .witnesses
        .iter()
        .map(|w| Ok(is_einstein(w)?.is_einstein))
        .collect::<Result<Vec<bool>>>()?;
    Ok(AnnotatedResult { result, einstein })
}

#[derive(serde::Serialize)]
struct SearchJson {
    order: usize,
    mode: String,
    connected_only: bool,
    best_value: i64,
    witnesses: Vec<String>,
    method: String,
    seed: Option<u64>,
    evaluations: u64,
}

pub fn search_json(r: &SearchResult) -> String {
    let j = SearchJson {
        order: r.order,
        mode: r.mode.to_string(),
        connected_only: r.connected_only,
        best_value: r.best_value,
        witnesses: r.witnesses.iter().map(|w| serialize_graph(w, GraphFormat::EdgeList)).collect(),
        method: r.method.to_string(),
        seed: r.seed,
        evaluations: r.evaluations,
    };
    serde_json::to_string(&j).expect("search json serializes")
}
