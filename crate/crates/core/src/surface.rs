//! Level-surface graphs: the hypersurface of a function on a graph, center
//! surfaces inside unit spheres with their canonical completion, the genus
//! lemma, and the glued-surface Euler characteristic.

use crate::clique::{enumerate_cliques, CliqueOptions};
use crate::error::{Error, Result};
use crate::euler::{euler_characteristic, is_geometric};
use crate::graph::Graph;
use crate::morse::{symmetric_index, VertexFunction};
use crate::numeric::{rat_int, Rat};
use num_bigint::BigInt;

/// The hypersurface of (host, f, c): one surface vertex per host edge on
/// which f crosses c, one surface edge per host triangle with mixed signs.
#[derive(Clone, Debug)]
pub struct LevelSurface {
    pub host: Graph,
    pub threshold: Rat,
    /// Host edges crossing the threshold, oriented (below, above) by f and
    /// sorted by (min id, max id).
    pub surface_vertices: Vec<(usize, usize)>,
    /// Host triangles with mixed signs, ascending triples in lexicographic
    /// order. Triangle k joins the two crossing edges it contains.
    pub surface_edges: Vec<[usize; 3]>,
    pub graph: Graph,
}

impl LevelSurface {
    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(&self.graph)
    }
}

/// Builds the level surface of f at threshold c.
///
/// A triangle with vertices on both sides of c contains exactly two crossing
/// edges (the minority vertex contributes both), which the construction
/// asserts; this is what makes the surface a graph rather than a hypergraph.
pub fn hypersurface(host: &Graph, f: &VertexFunction, c: &Rat) -> Result<LevelSurface> {
    if f.len() != host.n() {
        return Err(Error::Input(format!(
            "function has {} values for a graph on {} vertices",
            f.len(),
            host.n()
        )));
    }
    for v in host.vertices() {
        if f.value(v) == c {
            return Err(Error::Input(format!(
                "threshold equals the function value at vertex {v}"
            )));
        }
    }
    let below = |v: usize| f.value(v) < c;
    let mut surface_vertices = Vec::new();
    let mut id_of = std::collections::BTreeMap::new();
    for (u, v) in host.edges() {
        if below(u) != below(v) {
            id_of.insert((u, v), surface_vertices.len());
            surface_vertices.push(if below(u) { (u, v) } else { (v, u) });
        }
    }
    let mut surface_edges = Vec::new();
    let mut b_edges = Vec::new();
    let opts = CliqueOptions { max_dim: Some(2), ..Default::default() };
    let cliques = enumerate_cliques(host, &opts)?.cliques;
    if let Some(triangles) = cliques.get(2) {
        for t in triangles {
            let (a, b, c3) = (t[0] as usize, t[1] as usize, t[2] as usize);
            let lows = [a, b, c3].iter().filter(|&&v| below(v)).count();
            if lows == 0 || lows == 3 {
                continue;
            }
            let crossing: Vec<usize> = [(a, b), (a, c3), (b, c3)]
                .iter()
                .filter_map(|e| id_of.get(e).copied())
                .collect();
            assert_eq!(crossing.len(), 2, "mixed triangle must contain exactly 2 crossing edges");
            surface_edges.push([a, b, c3]);
            b_edges.push((crossing[0], crossing[1]));
        }
    }
    let graph = Graph::from_edges(surface_vertices.len(), &b_edges)?;
    Ok(LevelSurface {
        host: host.clone(),
        threshold: c.clone(),
        surface_vertices,
        surface_edges,
        graph,
    })
}

/// Which diagonal of a 2-2 cell's 4-cycle a chord completion inserts. With
/// the below pair {a<b} and above pair {c<d}, `Low` joins (a,c)-(b,d) and
/// `High` joins (a,d)-(b,c).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diagonal {
    Low,
    High,
}

/// How 2-2 split tetrahedra are closed up. Stellation is the canonical
/// choice; the chord modes exist to check that the Euler characteristic does
/// not depend on the completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionMode {
    Stellation,
    Chord(Diagonal),
}

/// One completed cell: a tetrahedron of the sphere split 2-2 by the
/// threshold. Vertex ids are sphere-local; `sphere_vertices` on the owning
/// surface maps them to host ids.
#[derive(Clone, Debug)]
pub struct AddedCell {
    pub tetrahedron: [usize; 4],
    /// Stellation vertex id in the completed graph, for stellation mode.
    pub new_vertex: Option<usize>,
    /// Chord endpoints (surface vertex ids), for chord mode.
    pub chord: Option<(usize, usize)>,
}

/// Center surface B_f(x): the hypersurface of f at c = f(x) inside the unit
/// sphere S(x), completed cell by cell when S(x) is a 3-dimensional
/// geometric graph.
#[derive(Clone, Debug)]
pub struct CompletedSurface {
    pub raw: LevelSurface,
    /// Map from sphere-local vertex ids (used by `raw`) to host graph ids.
    pub sphere_vertices: Vec<usize>,
    pub center: usize,
    /// False when the sphere is not 3-dimensional geometric; `graph` is then
    /// the raw surface unchanged.
    pub completed: bool,
    pub added_cells: Vec<AddedCell>,
    pub graph: Graph,
}

impl CompletedSurface {
    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(&self.graph)
    }
}

pub fn center_surface(g: &Graph, f: &VertexFunction, x: usize) -> Result<CompletedSurface> {
    center_surface_with(g, f, x, CompletionMode::Stellation)
}

pub fn center_surface_with(
    g: &Graph,
    f: &VertexFunction,
    x: usize,
    mode: CompletionMode,
) -> Result<CompletedSurface> {
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
    let sphere = g.unit_sphere(x)?;
    let local_f = VertexFunction::new(
        sphere.vertices.iter().map(|&v| f.value(v).clone()).collect(),
    )?;
    let c = f.value(x).clone();
    let raw = hypersurface(&sphere.graph, &local_f, &c)?;

    if !is_geometric(&sphere.graph, 3).is_geometric {
        let graph = raw.graph.clone();
        return Ok(CompletedSurface {
            raw,
            sphere_vertices: sphere.vertices,
            center: x,
            completed: false,
            added_cells: Vec::new(),
            graph,
        });
    }

    let id_of: std::collections::BTreeMap<(usize, usize), usize> = raw
        .surface_vertices
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
        .collect();
    let below = |v: usize| local_f.value(v) < &c;
    let opts = CliqueOptions { max_dim: Some(3), ..Default::default() };
    let cliques = enumerate_cliques(&sphere.graph, &opts)?.cliques;
    let mut added_cells = Vec::new();
    let mut extra_edges: Vec<(usize, usize)> = Vec::new();
    let raw_n = raw.graph.n();
    if let Some(tetrahedra) = cliques.get(3) {
        for t in tetrahedra {
            let vs = [t[0] as usize, t[1] as usize, t[2] as usize, t[3] as usize];
            let lows: Vec<usize> = vs.iter().copied().filter(|&v| below(v)).collect();
            if lows.len() != 2 {
                continue;
            }
            let highs: Vec<usize> = vs.iter().copied().filter(|&v| !below(v)).collect();
            let (a, b) = (lows[0], lows[1]);
            let (cc, d) = (highs[0], highs[1]);
            let sv = |p: usize, q: usize| id_of[&(p.min(q), p.max(q))];
            let (ac, ad, bc, bd) = (sv(a, cc), sv(a, d), sv(b, cc), sv(b, d));
            // the cell's 4-cycle ac-ad-bd-bc is chordless in the raw surface:
            // a chord would need a mixed triangle containing two disjoint edges
            assert!(!raw.graph.has_edge(ac, bd) && !raw.graph.has_edge(ad, bc));
            let cell = match mode {
                CompletionMode::Stellation => {
                    let nv = raw_n + added_cells.len();
                    extra_edges.extend([(nv, ac), (nv, ad), (nv, bc), (nv, bd)]);
                    AddedCell { tetrahedron: vs, new_vertex: Some(nv), chord: None }
                }
                CompletionMode::Chord(diag) => {
                    let chord = match diag {
                        Diagonal::Low => (ac, bd),
                        Diagonal::High => (ad, bc),
                    };
                    extra_edges.push(chord);
                    AddedCell { tetrahedron: vs, new_vertex: None, chord: Some(chord) }
                }
            };
            added_cells.push(cell);
        }
    }
    let new_n = match mode {
        CompletionMode::Stellation => raw_n + added_cells.len(),
        CompletionMode::Chord(_) => raw_n,
    };
    let mut all_edges: Vec<(usize, usize)> = raw.graph.edges().collect();
    all_edges.extend(extra_edges);
    let graph = Graph::from_edges(new_n, &all_edges)?;
    if mode == CompletionMode::Stellation {
        for cell in &added_cells {
            assert_eq!(graph.degree(cell.new_vertex.unwrap()), 4);
        }
    }
    // each closed cell raises chi by one: a stellation adds 1 vertex, 4
    // edges, 4 triangles; a chord adds 1 edge, 2 triangles
    assert_eq!(
        euler_characteristic(&graph),
        raw.euler_characteristic() + added_cells.len() as i64,
    );
    Ok(CompletedSurface {
        raw,
        sphere_vertices: sphere.vertices,
        center: x,
        completed: true,
        added_cells,
        graph,
    })
}

/// chi(B_f(x)) of the completed center surface: the total curvature of the
/// local surface at x, by the surface's own Gauss-Bonnet.
pub fn sectional_total_curvature(g: &Graph, f: &VertexFunction, x: usize) -> Result<i64> {
    Ok(center_surface(g, f, x)?.euler_characteristic())
}

/// One vertex's worth of evidence for the index formula
/// j_f(x) = 1 - chi(S(x))/2 - chi(B_f(x))/2 and, where the center surface
/// was completed (3-dimensional geometric sphere), the genus form
/// chi(B) = 2 - 2 j_f(x).
#[derive(Clone, Debug)]
pub struct GenusLemmaReport {
    pub vertex: usize,
    pub symmetric_index: Rat,
    pub sphere_characteristic: i64,
    pub surface_characteristic: i64,
    pub index_formula_holds: bool,
    /// None when the sphere is not 3-dimensional geometric.
    pub genus_form_holds: Option<bool>,
}

pub fn genus_lemma_check(g: &Graph, f: &VertexFunction, x: usize) -> Result<GenusLemmaReport> {
    let surface = center_surface(g, f, x)?;
    let j = symmetric_index(g, f, x)?;
    let chi_s = euler_characteristic(&g.unit_sphere(x)?.graph);
    let chi_b = surface.euler_characteristic();
    let rhs = rat_int(1)
        - Rat::new(BigInt::from(chi_s), BigInt::from(2))
        - Rat::new(BigInt::from(chi_b), BigInt::from(2));
    let index_formula_holds = j == rhs;
    let genus_form_holds = surface
        .completed
        .then(|| rat_int(chi_b) == rat_int(2) - rat_int(2) * j.clone());
    Ok(GenusLemmaReport {
        vertex: x,
        symmetric_index: j,
        sphere_characteristic: chi_s,
        surface_characteristic: chi_b,
        index_formula_holds,
        genus_form_holds,
    })
}

/// Euler characteristic of the glued surface G(f) of a 4-dimensional
/// geometric graph, through genus additivity: the genus of G(f) is
/// sum_x (1 - chi(B_f(x))/2) = sum_x j_f(x) = chi(G), so chi(G(f)) is
/// 2 - 2 chi(G). Both sums are recomputed and cross-checked vertex by
/// vertex; the glued complex itself is never built.
pub fn glued_surface_characteristic(g: &Graph, f: &VertexFunction) -> Result<i64> {
    if !is_geometric(g, 4).is_geometric {
        return Err(Error::Domain(
            "glued surface needs a 4-dimensional geometric graph".into(),
        ));
    }
    let mut genus_sum = rat_int(0);
    let mut index_sum = rat_int(0);
    for x in g.vertices() {
        let chi_b = sectional_total_curvature(g, f, x)?;
        let j = symmetric_index(g, f, x)?;
        let local = rat_int(1) - Rat::new(BigInt::from(chi_b), BigInt::from(2));
        assert_eq!(local, j, "index formula failed at vertex {x}");
        genus_sum += local;
        index_sum += j;
    }
    assert_eq!(genus_sum, index_sum);
    let chi = euler_characteristic(g);
    assert_eq!(index_sum, rat_int(chi), "index sum disagrees with chi");
    Ok(2 - 2 * chi)
}

#[derive(serde::Serialize)]
struct SurfaceJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    cells: Vec<[usize; 4]>,
}

/// Json for a completed surface: the abstract graph in the usual
/// {n, edges} shape plus a "cells" array listing each closed tetrahedron in
/// host vertex ids.
pub fn surface_json(s: &CompletedSurface) -> String {
    let cells = s
        .added_cells
        .iter()
        .map(|c| {
            let mut t = c.tetrahedron.map(|v| s.sphere_vertices[v]);
            t.sort();
            t
        })
        .collect();
    let doc = SurfaceJson { n: s.graph.n(), edges: s.graph.edges().collect(), cells };
    serde_json::to_string(&doc).expect("serializable")
}
