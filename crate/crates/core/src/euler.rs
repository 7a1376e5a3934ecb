//! Euler characteristic engines, geometric graphs, genus, tree functional.

use crate::clique::{self, CliqueOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::Rat;
use crate::rng::derive_seed;
use crate::spanning::spanning_tree_count;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Euler characteristic of the clique complex: alternating sum of clique
/// counts, computed by the counting engine without materialization.
pub fn euler_characteristic(g: &Graph) -> i64 {
    if let Some(rows) = g.rows_u64() {
        clique::chi_u64(&rows, clique::full_mask(g.n()))
    } else {
        let counts = clique::count_cliques(g, &CliqueOptions::default()).expect("default budget");
        clique::alternating_i64(&counts)
    }
}

/// Euler characteristic by the Poincare-Hopf recursion
/// chi(G) = sum over x of (1 - chi(S^-(x))), with S^-(x) the induced
/// subgraph on the neighbors of x that come earlier in the vertex order.
/// The empty graph contributes 0 and an edgeless graph its vertex count.
/// The default order is vertex id order.
pub fn euler_characteristic_ph(g: &Graph) -> i64 {
    match g.rows_u64() {
        Some(rows) => clique::ph_chi_u64(&rows, clique::full_mask(g.n())),
        None => ph_chi_words(g),
    }
}

/// Poincare-Hopf engine under a seeded random vertex order. The value is
/// order-independent; the seed only picks the traversal.
pub fn euler_characteristic_ph_seeded(g: &Graph, seed: u64) -> i64 {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 0x9e37));
    perm.shuffle(&mut rng);
    let relabeled = g.relabeled(&perm).expect("permutation is valid");
    euler_characteristic_ph(&relabeled)
}

fn ph_chi_words(g: &Graph) -> i64 {
    use crate::bits;
    fn rec(rows: &[Vec<u64>], active: &[u64]) -> i64 {
        let mut chi = 0i64;
        for v in bits::iter_bits(active).collect::<Vec<_>>() {
            let mut below = vec![0u64; active.len()];
            bits::and_into(active, &rows[v], &mut below);
            bits::keep_below(&mut below, v);
            chi += 1 - if bits::is_empty(&below) { 0 } else { rec(rows, &below) };
        }
        chi
    }
    let rows: Vec<Vec<u64>> = (0..g.n()).map(|v| g.row(v).to_vec()).collect();
    let mut all = vec![0u64; g.words_per_row()];
    for v in 0..g.n() {
        crate::bits::set_bit(&mut all, v);
    }
    rec(&rows, &all)
}

/// Genus 1 - chi/2, an exact rational (half-integers occur at odd chi).
pub fn genus(g: &Graph) -> Rat {
    Rat::new(BigInt::from(2 - euler_characteristic(g)), BigInt::from(2))
}

/// chi(G) * spanning_tree_count(G), exact. Domain error when disconnected.
pub fn tree_functional(g: &Graph) -> Result<Rat> {
    let trees = spanning_tree_count(g)?;
    if !trees.connected {
        return Err(Error::Domain("tree functional needs a connected graph".into()));
    }
    let chi = BigInt::from(euler_characteristic(g));
    Ok(Rat::from_integer(chi * BigInt::from(trees.count)))
}

/// Why a vertex (or the graph) fails a geometric-dimension check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    /// The graph is empty; no dimension is witnessed.
    EmptyGraph,
    /// d = 0 requires an edgeless graph; this vertex has an edge.
    UnexpectedEdge,
    /// The unit sphere has the wrong Euler characteristic.
    SphereChi { expected: i64, found: i64 },
    /// The unit sphere fails the recursive check one dimension down.
    SphereNotGeometric { dimension: usize },
}

impl std::fmt::Display for Defect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Defect::EmptyGraph => write!(f, "graph is empty"),
            Defect::UnexpectedEdge => write!(f, "vertex has an edge in a 0-dimensional check"),
            Defect::SphereChi { expected, found } => {
                write!(f, "unit sphere has chi {found}, expected {expected}")
            }
            Defect::SphereNotGeometric { dimension } => {
                write!(f, "unit sphere is not geometric of dimension {dimension}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeometricReport {
    pub claimed_dimension: usize,
    pub is_geometric: bool,
    /// First offending vertex per defect class, as (vertex, defect). The
    /// empty-graph defect carries vertex 0 by convention.
    pub witnesses: Vec<(usize, Defect)>,
}

/// Recursive geometric-dimension check. A graph is geometric of dimension 0
/// when nonempty and edgeless; geometric of dimension d >= 1 when nonempty
/// and every unit sphere is geometric of dimension d-1 with Euler
/// characteristic 1 - (-1)^d.
pub fn is_geometric(g: &Graph, dimension: usize) -> GeometricReport {
    let mut witnesses = Vec::new();
    if g.n() == 0 {
        witnesses.push((0, Defect::EmptyGraph));
        return GeometricReport { claimed_dimension: dimension, is_geometric: false, witnesses };
    }
    if dimension == 0 {
        if let Some((u, _)) = g.edges().next() {
            witnesses.push((u, Defect::UnexpectedEdge));
        }
        return GeometricReport {
            claimed_dimension: 0,
            is_geometric: witnesses.is_empty(),
            witnesses,
        };
    }
    let expected = 1 - if dimension % 2 == 0 { 1 } else { -1 };
    let mut chi_witness: Option<(usize, Defect)> = None;
    let mut rec_witness: Option<(usize, Defect)> = None;
    for v in g.vertices() {
        let sphere = g.unit_sphere(v).expect("vertex in range").graph;
        if chi_witness.is_none() {
            let found = euler_characteristic(&sphere);
            if found != expected {
                chi_witness = Some((v, Defect::SphereChi { expected, found }));
            }
        }
        if rec_witness.is_none() && !is_geometric(&sphere, dimension - 1).is_geometric {
            rec_witness = Some((v, Defect::SphereNotGeometric { dimension: dimension - 1 }));
        }
        if chi_witness.is_some() && rec_witness.is_some() {
            break;
        }
    }
    witnesses.extend(chi_witness);
    witnesses.extend(rec_witness);
    GeometricReport {
        claimed_dimension: dimension,
        is_geometric: witnesses.is_empty(),
        witnesses,
    }
}
