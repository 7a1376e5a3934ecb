//! Curvature-deformed path metrics, minimal geodesics, injectivity radius,
//! and the genus action along paths.

use crate::error::{Error, Result};
use crate::euler::is_geometric;
use crate::graph::Graph;
use crate::morse::{exact_index_expectation, sample_function, symmetric_index, McEstimate};
use crate::numeric::{rat_int, rational_string, Rat};
use crate::rng::derive_seed;
use crate::surface::sectional_total_curvature;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

const GEODESIC_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Metric {
    /// Every edge weighs 1.
    Hop,
    /// Vertex terms -c * K(v): hop length minus c times the curvature sum
    /// along the path, endpoints at half weight.
    Curvature2d { c: Rat },
    /// Vertex terms +2 * epsilon * K(v), the per-vertex decomposition of
    /// |path| - epsilon * (genus action). The action's path-independent
    /// offset is dropped so lengths add under concatenation; minimizers
    /// between fixed endpoints are unchanged.
    Genus4d { epsilon: Rat },
}

/// A validated metric on a fixed graph. Edge (u, v) weighs
/// 1 + h(u) + h(v) where h is half the vertex term, so a path costs its
/// hop length plus full vertex terms at interior vertices and half terms
/// at its two endpoints. Validation requires 1 + 2 h(v) > 0 everywhere,
/// which keeps every edge weight positive.
#[derive(Clone, Debug, PartialEq)]
pub struct PathMetricConfig {
    metric: Metric,
    half_terms: Vec<Rat>,
}

impl PathMetricConfig {
    pub fn new(g: &Graph, metric: Metric) -> Result<PathMetricConfig> {
        let half_terms: Vec<Rat> = match &metric {
            Metric::Hop => vec![Rat::zero(); g.n()],
            Metric::Curvature2d { c } => {
                if c.is_negative() {
                    return Err(Error::Input(format!(
                        "deformation parameter must be nonnegative, got {}",
                        rational_string(c)
                    )));
                }
                g.vertices()
                    .map(|v| Ok(-(c * exact_index_expectation(g, v)?) / rat_int(2)))
                    .collect::<Result<_>>()?
            }
            Metric::Genus4d { epsilon } => {
                if epsilon.is_negative() {
                    return Err(Error::Input(format!(
                        "deformation parameter must be nonnegative, got {}",
                        rational_string(epsilon)
                    )));
                }
                g.vertices()
                    .map(|v| Ok(epsilon * exact_index_expectation(g, v)?))
                    .collect::<Result<_>>()?
            }
        };
        for (v, h) in half_terms.iter().enumerate() {
            let weight = rat_int(1) + h + h;
            if !weight.is_positive() {
                return Err(Error::Input(format!(
                    "deformation is too large: vertex {v} carries weight {}",
                    rational_string(&weight)
                )));
            }
        }
        Ok(PathMetricConfig { metric, half_terms })
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    fn order(&self) -> usize {
        self.half_terms.len()
    }

    fn edge_weight(&self, u: usize, v: usize) -> Rat {
        rat_int(1) + &self.half_terms[u] + &self.half_terms[v]
    }
}

fn check_graph(g: &Graph, config: &PathMetricConfig) -> Result<()> {
    if config.order() != g.n() {
        return Err(Error::Input(format!(
            "metric was built for order {}, graph has order {}",
            config.order(),
            g.n()
        )));
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::Input(format!("vertex {v} out of range (n = {})", g.n())));
    }
    Ok(())
}

fn check_walk(g: &Graph, path: &[usize]) -> Result<()> {
    if path.is_empty() {
        return Err(Error::Input("path must contain at least one vertex".into()));
    }
    for &x in path {
        check_vertex(g, x)?;
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::Input(format!("vertices {} and {} are not adjacent", w[0], w[1])));
        }
    }
    Ok(())
}

/// Length of a walk (repeated vertices allowed) under the configured
/// metric. A single vertex has length 0.
pub fn path_length(g: &Graph, path: &[usize], config: &PathMetricConfig) -> Result<Rat> {
    check_graph(g, config)?;
    check_walk(g, path)?;
    let mut total = Rat::zero();
    for w in path.windows(2) {
        total += config.edge_weight(w[0], w[1]);
    }
    Ok(total)
}

struct ShortestPaths {
    dist: Vec<Option<Rat>>,
    /// preds[v]: neighbors u with dist[u] + weight(u, v) = dist[v].
    preds: Vec<Vec<usize>>,
}

fn dijkstra(g: &Graph, source: usize, config: &PathMetricConfig) -> ShortestPaths {
    let mut dist: Vec<Option<Rat>> = vec![None; g.n()];
    let mut heap: BinaryHeap<Reverse<(Rat, usize)>> = BinaryHeap::new();
    dist[source] = Some(Rat::zero());
    heap.push(Reverse((Rat::zero(), source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u].as_ref() != Some(&d) {
            continue;
        }
        for v in g.neighbors(u) {
            let cand = &d + config.edge_weight(u, v);
            if dist[v].as_ref().map_or(true, |cur| cand < *cur) {
                dist[v] = Some(cand.clone());
                heap.push(Reverse((cand, v)));
            }
        }
    }
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for v in g.vertices() {
        let Some(dv) = &dist[v] else { continue };
        for u in g.neighbors(v) {
            if let Some(du) = &dist[u] {
                if du + config.edge_weight(u, v) == *dv {
                    preds[v].push(u);
                }
            }
        }
    }
    ShortestPaths { dist, preds }
}

/// Exact minimal path length between two vertices.
pub fn distance(g: &Graph, a: usize, b: usize, config: &PathMetricConfig) -> Result<Rat> {
    check_graph(g, config)?;
    check_vertex(g, a)?;
    check_vertex(g, b)?;
    let sp = dijkstra(g, a, config);
    sp.dist[b].clone().ok_or_else(|| Error::Domain(format!("no path from {a} to {b}")))
}

/// All minimizing paths from `a` to `b`, each as a vertex sequence,
/// lexicographically sorted. Minimizers under positive edge weights are
/// simple, so the shortest-path graph is acyclic and the unfolding
/// terminates.
pub fn minimal_geodesics(g: &Graph, a: usize, b: usize, config: &PathMetricConfig) -> Result<Vec<Vec<usize>>> {
    check_graph(g, config)?;
    check_vertex(g, a)?;
    check_vertex(g, b)?;
    let sp = dijkstra(g, a, config);
    if sp.dist[b].is_none() {
        return Err(Error::Domain(format!("no path from {a} to {b}")));
    }
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![b];
    unfold(&sp, a, &mut stack, &mut paths)?;
    paths.sort();
    Ok(paths)
}

fn unfold(sp: &ShortestPaths, source: usize, stack: &mut Vec<usize>, paths: &mut Vec<Vec<usize>>) -> Result<()> {
    let tip = *stack.last().expect("stack holds the partial path");
    if tip == source {
        if paths.len() == GEODESIC_CAP {
            return Err(Error::Capacity(format!("more than {GEODESIC_CAP} minimal geodesics")));
        }
        paths.push(stack.iter().rev().copied().collect());
        return Ok(());
    }
    for &u in &sp.preds[tip] {
        stack.push(u);
        unfold(sp, source, stack, paths)?;
        stack.pop();
    }
    Ok(())
}

/// Largest hop radius around `v` inside which every vertex is reached by a
/// unique minimal geodesic (under the configured metric); the eccentricity
/// of `v` within its component when no tie occurs at all.
pub fn injectivity_radius(g: &Graph, v: usize, config: &PathMetricConfig) -> Result<usize> {
    check_graph(g, config)?;
    check_vertex(g, v)?;
    let sp = dijkstra(g, v, config);
    let hops = g.hop_distances(v)?;
    // Count minimal geodesics per target along increasing distance,
    // saturating at 2: only uniqueness matters.
    let mut order: Vec<usize> = g.vertices().filter(|&w| sp.dist[w].is_some()).collect();
    order.sort_by(|&x, &y| sp.dist[x].cmp(&sp.dist[y]).then(x.cmp(&y)));
    let mut count = vec![0u32; g.n()];
    count[v] = 1;
    let mut radius = usize::MAX;
    for &w in &order {
        if w == v {
            continue;
        }
        let total: u32 = sp.preds[w].iter().map(|&u| count[u]).sum();
        count[w] = total.min(2);
        if count[w] > 1 {
            radius = radius.min(hops[w].saturating_sub(1));
        }
    }
    if radius == usize::MAX {
        radius = order.iter().map(|&w| hops[w]).max().unwrap_or(0);
    }
    Ok(radius)
}

fn action_dimension(g: &Graph) -> Result<usize> {
    if is_geometric(g, 4).is_geometric {
        Ok(4)
    } else if is_geometric(g, 3).is_geometric {
        Ok(3)
    } else {
        Err(Error::Domain("genus action needs a 3- or 4-geometric graph".into()))
    }
}

/// Exact genus action of a path: the expected Euler characteristic of the
/// level surface glued along the path, 2 - 2 sum_k K(x_k) in the
/// 4-geometric case. In the 3-geometric case every level surface has
/// characteristic zero and so does the action.
pub fn genus_action_exact(g: &Graph, path: &[usize]) -> Result<Rat> {
    check_walk(g, path)?;
    match action_dimension(g)? {
        4 => {
            let mut sum = Rat::zero();
            for &x in path {
                sum += exact_index_expectation(g, x)?;
            }
            Ok(rat_int(2) - rat_int(2) * sum)
        }
        _ => {
            for &x in path {
                assert!(
                    exact_index_expectation(g, x)?.is_zero(),
                    "odd-dimensional curvature must vanish at vertex {x}"
                );
            }
            Ok(Rat::zero())
        }
    }
}

/// Monte Carlo genus action: averages 2 - 2 sum_k j_f(x_k) over seeded
/// random functions (4-geometric case). In the 3-geometric case each
/// sampled surface characteristic is asserted to vanish.
pub fn genus_action_sampled(g: &Graph, path: &[usize], samples: u64, seed: u64) -> Result<McEstimate> {
    check_walk(g, path)?;
    if samples == 0 {
        return Err(Error::Input("need at least one sample".into()));
    }
    let dimension = action_dimension(g)?;
    let mut sum = 0i128;
    let mut sumsq = 0i128;
    for k in 0..samples {
        let f = sample_function(g, derive_seed(seed, k));
        let value: i128 = match dimension {
            4 => {
                let mut j_total = Rat::zero();
                for &x in path {
                    j_total += symmetric_index(g, &f, x)?;
                }
                let chi = rat_int(2) - rat_int(2) * j_total;
                assert!(chi.is_integer(), "glued surface characteristic must be an integer");
                chi.to_integer().to_i128().expect("characteristic fits in i128")
            }
            _ => {
                for &x in path {
                    let chi = sectional_total_curvature(g, &f, x)?;
                    assert_eq!(chi, 0, "level surface in an odd-dimensional graph at vertex {x}");
                }
                0
            }
        };
        sum += value;
        sumsq += value * value;
    }
    let n = samples as i128;
    let mean = Rat::new(sum.into(), n.into());
    let stderr = if samples < 2 {
        0.0
    } else {
        let num = (sumsq as f64) - (sum as f64) * (sum as f64) / (n as f64);
        (num.max(0.0) / ((n - 1) as f64) / (n as f64)).sqrt()
    };
    Ok(McEstimate { samples, mean, stderr })
}
