//! Wheels, Ricci and scalar curvature, and the Einstein tensor.
//!
//! A wheel is a vertex together with a simple cycle in its unit sphere. The
//! Ricci curvature of an edge averages the curvatures 1 - n/6 of the wheels
//! having that edge as a spoke; the scalar curvature averages the Ricci
//! curvatures of the incident edges; the Einstein tensor is their difference.
//! Everything is an exact rational and the Einstein test is exact equality.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{rat_int, rational_string, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// A wheel subgraph: `center` plus a simple cycle `rim` in its unit sphere.
/// The rim is stored canonically: smallest vertex first, direction chosen so
/// the second entry is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wheel {
    pub center: usize,
    pub rim: Vec<usize>,
}

impl Wheel {
    pub fn rim_length(&self) -> usize {
        self.rim.len()
    }
}

fn canonical_rim(mut rim: Vec<usize>) -> Vec<usize> {
    let pos = rim
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    rim.rotate_left(pos);
    if rim.len() >= 3 && rim[1] > rim[rim.len() - 1] {
        rim[1..].reverse();
    }
    rim
}

/// All simple cycles (length >= 3, each listed once, undirected) of `g`.
/// `cap` bounds the cycle length; the flag reports whether the cap may have
/// cut off longer cycles.
fn simple_cycles(g: &Graph, cap: Option<usize>) -> (Vec<Vec<usize>>, bool) {
    fn rec(
        g: &Graph,
        s: usize,
        path: &mut Vec<usize>,
        visited: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        limit: usize,
        truncated: &mut bool,
    ) {
        let u = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(u, s) && path[1] < u {
            out.push(path.clone());
        }
        for w in g.neighbors(u) {
            if w > s && !visited[w] {
                if path.len() == limit {
                    *truncated = true;
                    continue;
                }
                visited[w] = true;
                path.push(w);
                rec(g, s, path, visited, out, limit, truncated);
                path.pop();
                visited[w] = false;
            }
        }
    }
    let n = g.n();
    let limit = cap.unwrap_or(n).min(n);
    let mut cycles = Vec::new();
    let mut truncated = false;
    let mut visited = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        visited[s] = true;
        rec(g, s, &mut path, &mut visited, &mut cycles, limit, &mut truncated);
        visited[s] = false;
    }
    (cycles, truncated)
}

/// Wheels centered at `center`, optionally only those whose rim passes
/// `through`, sorted by (rim length, rim). `rim_cap` bounds the rim length;
/// see [`enumerate_wheels_capped`] for the truncation flag.
pub fn enumerate_wheels(
    g: &Graph,
    center: usize,
    through: Option<usize>,
) -> Result<Vec<Wheel>> {
    enumerate_wheels_capped(g, center, through, None).map(|(w, _)| w)
}

/// As [`enumerate_wheels`] with a rim-length cap; the flag is true when the
/// cap may have hidden longer rims.
pub fn enumerate_wheels_capped(
    g: &Graph,
    center: usize,
    through: Option<usize>,
    rim_cap: Option<usize>,
) -> Result<(Vec<Wheel>, bool)> {
    if center >= g.n() {
        return Err(Error::Input(format!("vertex {center} out of range (n = {})", g.n())));
    }
    if let Some(t) = through {
        if t >= g.n() {
            return Err(Error::Input(format!("vertex {t} out of range (n = {})", g.n())));
        }
    }
    let sphere = g.unit_sphere(center)?;
    let (cycles, truncated) = simple_cycles(&sphere.graph, rim_cap);
    let mut wheels: Vec<Wheel> = cycles
        .into_iter()
        .map(|cyc| {
            let rim = canonical_rim(cyc.into_iter().map(|i| sphere.vertices[i]).collect());
            Wheel { center, rim }
        })
        .filter(|w| through.map_or(true, |t| w.rim.contains(&t)))
        .collect();
    wheels.sort_by(|a, b| (a.rim.len(), &a.rim).cmp(&(b.rim.len(), &b.rim)));
    Ok((wheels, truncated))
}

/// Curvature 1 - n/6 of a wheel with rim length n: the vertex curvature of
/// the center inside the standalone wheel (sphere f-vector (n, n) gives
/// 1 - n/2 + n/3).
pub fn wheel_curvature(w: &Wheel) -> Rat {
    rat_int(1) - Rat::new(BigInt::from(w.rim.len()), BigInt::from(6))
}

/// Ricci curvature of an edge: the mean wheel curvature over all wheels
/// having the edge as a spoke (centered at either endpoint, rim through the
/// other). Edges carried by no wheel get 0, which is what makes
/// triangle-free graphs vacuously Einstein.
pub fn ricci(g: &Graph, e: (usize, usize)) -> Result<Rat> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::Input(format!("({u}, {v}) is not an edge")));
    }
    let mut vals: Vec<Rat> = enumerate_wheels(g, u, Some(v))?
        .iter()
        .map(wheel_curvature)
        .collect();
    vals.extend(enumerate_wheels(g, v, Some(u))?.iter().map(wheel_curvature));
    Ok(mean_or_zero(&vals))
}

fn mean_or_zero(vals: &[Rat]) -> Rat {
    if vals.is_empty() {
        rat_int(0)
    } else {
        vals.iter().sum::<Rat>() / rat_int(vals.len() as i64)
    }
}

/// How the scalar curvature at a vertex is averaged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    /// Mean of the Ricci curvatures of the incident edges. The conservation
    /// law of the tensor is exact in this mode.
    IncidentRicci,
    /// Mean curvature of all wheels containing the vertex anywhere (center
    /// or rim). Provided for comparison; no identities are claimed.
    WheelsThroughVertex,
}

/// Scalar curvature: mean incident Ricci, 0 at isolated vertices.
pub fn scalar(g: &Graph, v: usize) -> Result<Rat> {
    if v >= g.n() {
        return Err(Error::Input(format!("vertex {v} out of range (n = {})", g.n())));
    }
    let vals: Vec<Rat> = g
        .neighbors(v)
        .map(|w| ricci(g, (v.min(w), v.max(w))))
        .collect::<Result<_>>()?;
    Ok(mean_or_zero(&vals))
}

/// Einstein tensor entry T_v(e) = ricci(e) - scalar(v) for an incident edge.
pub fn einstein_tensor(g: &Graph, v: usize, e: (usize, usize)) -> Result<Rat> {
    if e.0 != v && e.1 != v {
        return Err(Error::Input(format!("edge ({}, {}) is not incident to {v}", e.0, e.1)));
    }
    Ok(ricci(g, e)? - scalar(g, v)?)
}

#[derive(Clone, Debug)]
pub struct EinsteinOptions {
    /// Bound on rim lengths during wheel enumeration; None is exhaustive.
    pub rim_cap: Option<usize>,
    pub scalar_mode: ScalarMode,
}

impl Default for EinsteinOptions {
    fn default() -> Self {
        EinsteinOptions { rim_cap: None, scalar_mode: ScalarMode::IncidentRicci }
    }
}

/// Full curvature tableau of a graph.
#[derive(Clone, Debug)]
pub struct EinsteinReport {
    /// Per edge (lexicographic), the Ricci curvature.
    pub ricci: Vec<((usize, usize), Rat)>,
    /// Per vertex, the scalar curvature.
    pub scalar: Vec<Rat>,
    /// Per (vertex, incident edge), the tensor entry, vertices ascending and
    /// edges lexicographic within a vertex.
    pub tensor: Vec<(usize, (usize, usize), Rat)>,
    pub max_abs_tensor: Rat,
    /// True iff every tensor entry is exactly zero.
    pub is_einstein: bool,
    /// True when a rim cap may have truncated wheel enumeration.
    pub approximate: bool,
}

pub fn einstein_report(g: &Graph, opts: &EinsteinOptions) -> Result<EinsteinReport> {
    let mut per_center: Vec<Vec<Wheel>> = Vec::with_capacity(g.n());
    let mut approximate = false;
    for v in g.vertices() {
        let (ws, truncated) = enumerate_wheels_capped(g, v, None, opts.rim_cap)?;
        approximate |= truncated;
        per_center.push(ws);
    }
    let mut ricci_map: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    let mut ricci_rows = Vec::new();
    for (u, v) in g.edges() {
        let mut vals: Vec<Rat> = per_center[u]
            .iter()
            .filter(|w| w.rim.contains(&v))
            .map(wheel_curvature)
            .collect();
        vals.extend(
            per_center[v].iter().filter(|w| w.rim.contains(&u)).map(wheel_curvature),
        );
        let r = mean_or_zero(&vals);
        ricci_map.insert((u, v), r.clone());
        ricci_rows.push(((u, v), r));
    }
    let scalar: Vec<Rat> = g
        .vertices()
        .map(|v| match opts.scalar_mode {
            ScalarMode::IncidentRicci => {
                let vals: Vec<Rat> = g
                    .neighbors(v)
                    .map(|w| ricci_map[&(v.min(w), v.max(w))].clone())
                    .collect();
                mean_or_zero(&vals)
            }
            ScalarMode::WheelsThroughVertex => {
                let vals: Vec<Rat> = g
                    .vertices()
                    .flat_map(|c| {
                        per_center[c]
                            .iter()
                            .filter(move |w| c == v || w.rim.contains(&v))
                            .map(wheel_curvature)
                    })
                    .collect();
                mean_or_zero(&vals)
            }
        })
        .collect();
    let mut tensor = Vec::new();
    let mut max_abs = rat_int(0);
    for v in g.vertices() {
        let mut conservation = rat_int(0);
        let mut degree = 0usize;
        for w in g.neighbors(v) {
            let key = (v.min(w), v.max(w));
            let t = ricci_map[&key].clone() - scalar[v].clone();
            conservation += t.clone();
            degree += 1;
            if t.abs() > max_abs {
                max_abs = t.abs();
            }
            tensor.push((v, key, t));
        }
        if degree > 0 && opts.scalar_mode == ScalarMode::IncidentRicci {
            assert!(conservation.is_zero(), "conservation law violated at vertex {v}");
        }
    }
    let is_einstein = tensor.iter().all(|(_, _, t)| t.is_zero());
    Ok(EinsteinReport {
        ricci: ricci_rows,
        scalar,
        tensor,
        max_abs_tensor: max_abs,
        is_einstein,
        approximate,
    })
}

/// Full report with exhaustive wheel enumeration and incident-Ricci scalar.
pub fn is_einstein(g: &Graph) -> Result<EinsteinReport> {
    einstein_report(g, &EinsteinOptions::default())
}

#[derive(serde::Serialize)]
struct EinsteinJson {
    ricci: Vec<(usize, usize, String)>,
    scalar: Vec<String>,
    einstein: bool,
}

/// {"ricci": [[u, v, "p/q"], ...], "scalar": ["p/q", ...], "einstein": bool}
pub fn einstein_json(r: &EinsteinReport) -> String {
    let doc = EinsteinJson {
        ricci: r
            .ricci
            .iter()
            .map(|((u, v), val)| (*u, *v, rational_string(val)))
            .collect(),
        scalar: r.scalar.iter().map(rational_string).collect(),
        einstein: r.is_einstein,
    };
    serde_json::to_string(&doc).expect("serializable")
}
