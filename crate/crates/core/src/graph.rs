//! Finite simple graphs with dense vertex ids and bitset adjacency.

use crate::bits;
use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is a row-major bitset matrix, so neighbor intersections (the
/// workhorse of clique counting and the Poincare-Hopf recursion) are word
/// operations. Graphs at the scale this crate targets fit comfortably.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = bits::words_for(n).max(1);
        Graph { n, words, adj: vec![0; n * words], labels: None }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self
    /// loops and out-of-range endpoints are input errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u}, {v}) exceeds vertex count {n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        let w = self.words;
        if present {
            bits::set_bit(&mut self.adj[u * w..(u + 1) * w], v);
            bits::set_bit(&mut self.adj[v * w..(v + 1) * w], u);
        } else {
            bits::clear_bit(&mut self.adj[u * w..(u + 1) * w], v);
            bits::clear_bit(&mut self.adj[v * w..(v + 1) * w], u);
        }
    }

    /// Flips edge presence; used by the annealing search.
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        let present = self.has_edge(u, v);
        self.set_edge(u, v, !present);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test_bit(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count_ones(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter_bits(self.row(v))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as ordered pairs (u, v) with u < v, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::Input(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Single-word adjacency rows, available when n <= 64. The fast compute
    /// engines run on this form.
    pub fn rows_u64(&self) -> Option<Vec<u64>> {
        if self.n <= 64 {
            Some((0..self.n).map(|v| self.row(v)[0]).collect())
        } else {
            None
        }
    }

    /// Induced subgraph on `vertices` (distinct, in the given order). The
    /// returned [`Induced`] keeps the relabeling: new id i corresponds to
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Induced> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::Input(format!("vertex {v} out of range (n = {})", self.n)));
            }
            if pos[v] != usize::MAX {
                return Err(Error::Input(format!("vertex {v} repeated in induced set")));
            }
            pos[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = if w < self.n { pos[w] } else { usize::MAX };
                if j != usize::MAX && j > i {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(Induced { graph: g, vertices: vertices.to_vec() })
    }

    /// Unit sphere S(v): induced subgraph on the neighbors of v, ascending.
    pub fn unit_sphere(&self, v: usize) -> Result<Induced> {
        if v >= self.n {
            return Err(Error::Input(format!("vertex {v} out of range (n = {})", self.n)));
        }
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        self.induced(&nbrs)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut stack = vec![0usize];
        bits::set_bit(&mut seen, 0);
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !bits::test_bit(&seen, w) {
                    bits::set_bit(&mut seen, w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Hop distances from `v` by breadth-first search; unreachable vertices
    /// get `usize::MAX`.
    pub fn hop_distances(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.n {
            return Err(Error::Input(format!("vertex {v} out of range (n = {})", self.n)));
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Canonical isomorphism key by brute force over vertex permutations.
    /// Intended for witness deduplication and small-graph isomorphism tests;
    /// guarded to n <= 9.
    pub fn canonical_key(&self) -> Result<Vec<u64>> {
        if self.n > 9 {
            return Err(Error::Capacity(format!(
                "canonical form by permutation scan is limited to 9 vertices, got {}",
                self.n
            )));
        }
        let n = self.n;
        let mut best: Option<u64> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let mut key = 0u64;
            let mut bit = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if self.has_edge(perm[i], perm[j]) {
                        key |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            best = Some(match best {
                Some(b) => b.min(key),
                None => key,
            });
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(vec![n as u64, best.unwrap_or(0)])
    }

    pub fn is_isomorphic_small(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        Ok(self.canonical_key()? == other.canonical_key()?)
    }

    /// Relabels vertices: new id i takes old vertex `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Input("permutation length mismatch".into()));
        }
        Ok(self.induced(perm)?.graph)
    }
}

/// Induced subgraph plus the relabeling back into the host graph:
/// `vertices[new_id] = old_id`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
