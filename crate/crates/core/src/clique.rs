//! Clique counting and enumeration over the Whitney complex of a graph.
//!
//! A k-dimensional simplex is a clique on k+1 vertices. Counting and
//! enumeration both run an ordered branch extension: a clique is grown only
//! by vertices larger than its current maximum, so every clique is visited
//! exactly once and, per dimension, in lexicographic order.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

/// Face counts of the clique complex: `counts[k]` is the number of
/// k-dimensional simplices (cliques on k+1 vertices). Trailing zeros are
/// trimmed, so the empty graph has an empty sequence and `counts.len() - 1`
/// is the complex dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<BigUint>,
}

impl FVector {
    pub fn new(mut counts: Vec<BigUint>) -> FVector {
        while counts.last().is_some_and(|c| c.is_zero()) {
            counts.pop();
        }
        FVector { counts }
    }

    pub fn from_u64(counts: &[u64]) -> FVector {
        FVector::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Dimension of the complex; `None` for the empty graph.
    pub fn dimension(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    /// Alternating sum over the face counts.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::zero();
        for (k, c) in self.counts.iter().enumerate() {
            let term = BigInt::from(c.clone());
            if k % 2 == 0 {
                chi += term;
            } else {
                chi -= term;
            }
        }
        chi
    }
}

/// All cliques, grouped by dimension: `cliques[k]` lists the k-simplices as
/// ascending vertex vectors, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSet {
    pub cliques: Vec<Vec<Vec<u32>>>,
}

impl CliqueSet {
    pub fn f_vector(&self) -> FVector {
        FVector::new(self.cliques.iter().map(|level| BigUint::from(level.len())).collect())
    }
}

/// Guards for clique work.
#[derive(Clone, Copy, Debug)]
pub struct CliqueOptions {
    /// Largest simplex dimension to enumerate; `None` means unbounded.
    pub max_dim: Option<usize>,
    /// Cap on the number of cliques materialized or counted before a
    /// capacity error is raised.
    pub max_cliques: u64,
}

impl Default for CliqueOptions {
    fn default() -> Self {
        CliqueOptions { max_dim: None, max_cliques: 50_000_000 }
    }
}

fn capacity_err(counted: u64, depth_reached: usize) -> Error {
    Error::Capacity(format!(
        "clique budget exhausted after {counted} cliques (deepest dimension reached: {depth_reached})"
    ))
}

// ---- single-word engines (n <= 64) ----

fn count_rec_u64(
    rows: &[u64],
    cand: u64,
    depth: usize,
    counts: &mut Vec<u64>,
    budget: &mut u64,
    max_dim: Option<usize>,
) -> Result<()> {
    if counts.len() == depth {
        counts.push(0);
    }
    let mut c = cand;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        if *budget == 0 {
            return Err(capacity_err(counts.iter().sum(), depth));
        }
        *budget -= 1;
        counts[depth] += 1;
        if max_dim.map_or(true, |d| depth < d) {
            let next = if v == 63 { 0 } else { cand & rows[v] & (u64::MAX << (v + 1)) };
            if next != 0 {
                count_rec_u64(rows, next, depth + 1, counts, budget, max_dim)?;
            }
        }
    }
    Ok(())
}

/// Per-dimension clique counts of the subgraph induced on `active`.
pub fn count_cliques_u64(rows: &[u64], active: u64, opts: &CliqueOptions) -> Result<Vec<u64>> {
    let mut counts = Vec::new();
    let mut budget = opts.max_cliques;
    count_rec_u64(rows, active, 0, &mut counts, &mut budget, opts.max_dim)?;
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

/// Euler characteristic of the subgraph induced on `active`, by alternating
/// clique counting without materialization. No cap: the recursion visits one
/// node per clique, which is the same resource envelope as the f-vector.
pub fn chi_u64(rows: &[u64], active: u64) -> i64 {
    fn rec(rows: &[u64], cand: u64, sign: i64) -> i64 {
        let mut chi = 0i64;
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            chi += sign;
            let next = if v == 63 { 0 } else { cand & rows[v] & (u64::MAX << (v + 1)) };
            if next != 0 {
                chi += rec(rows, next, -sign);
            }
        }
        chi
    }
    rec(rows, active, 1)
}

/// Poincare-Hopf recursion on the subgraph induced on `active`, with the
/// vertex order given by the ids: chi = sum over x of 1 - chi(S^-(x)) where
/// S^-(x) is the induced subgraph on earlier neighbors of x. The empty set
/// contributes 0 and an edgeless set falls out of the sum as its cardinality.
pub fn ph_chi_u64(rows: &[u64], active: u64) -> i64 {
    let mut chi = 0i64;
    let mut c = active;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        let below = if v == 0 { 0 } else { active & rows[v] & (u64::MAX >> (64 - v)) };
        chi += 1 - if below == 0 { 0 } else { ph_chi_u64(rows, below) };
    }
    chi
}

// ---- multi-word engines (any n) ----

fn count_rec_words(
    rows: &[Vec<u64>],
    cand: &[u64],
    depth: usize,
    counts: &mut Vec<u64>,
    budget: &mut u64,
    max_dim: Option<usize>,
) -> Result<()> {
    if counts.len() == depth {
        counts.push(0);
    }
    for v in bits::iter_bits(cand).collect::<Vec<_>>() {
        if *budget == 0 {
            return Err(capacity_err(counts.iter().sum(), depth));
        }
        *budget -= 1;
        counts[depth] += 1;
        if max_dim.map_or(true, |d| depth < d) {
            let mut next = vec![0u64; cand.len()];
            bits::and_into(cand, &rows[v], &mut next);
            clear_upto(&mut next, v);
            if !bits::is_empty(&next) {
                count_rec_words(rows, &next, depth + 1, counts, budget, max_dim)?;
            }
        }
    }
    Ok(())
}

/// Zeroes bits at positions <= i.
fn clear_upto(words: &mut [u64], i: usize) {
    let wi = i / 64;
    for (k, w) in words.iter_mut().enumerate() {
        if k < wi {
            *w = 0;
        } else if k == wi {
            let off = i % 64;
            *w &= if off == 63 { 0 } else { u64::MAX << (off + 1) };
        }
    }
}

fn count_cliques_words(g: &Graph, opts: &CliqueOptions) -> Result<Vec<u64>> {
    let rows: Vec<Vec<u64>> = (0..g.n()).map(|v| g.row(v).to_vec()).collect();
    let w = g.words_per_row();
    let mut all = vec![0u64; w];
    for v in 0..g.n() {
        bits::set_bit(&mut all, v);
    }
    let mut counts = Vec::new();
    let mut budget = opts.max_cliques;
    count_rec_words(&rows, &all, 0, &mut counts, &mut budget, opts.max_dim)?;
    while counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

/// Per-dimension clique counts of the whole graph.
pub fn count_cliques(g: &Graph, opts: &CliqueOptions) -> Result<Vec<u64>> {
    match g.rows_u64() {
        Some(rows) => {
            let active = full_mask(g.n());
            count_cliques_u64(&rows, active, opts)
        }
        None => count_cliques_words(g, opts),
    }
}

pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// f-vector of the clique complex.
pub fn f_vector(g: &Graph, opts: &CliqueOptions) -> Result<FVector> {
    Ok(FVector::from_u64(&count_cliques(g, opts)?))
}

/// Materializes all cliques grouped by dimension, ascending vertex order
/// inside each clique, lexicographic order per dimension.
pub fn enumerate_cliques(g: &Graph, opts: &CliqueOptions) -> Result<CliqueSet> {
    let mut cliques: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut budget = opts.max_cliques;
    let mut stack: Vec<u32> = Vec::new();

    fn rec(
        g: &Graph,
        cand: &[u64],
        stack: &mut Vec<u32>,
        out: &mut Vec<Vec<Vec<u32>>>,
        budget: &mut u64,
        max_dim: Option<usize>,
    ) -> Result<()> {
        let depth = stack.len();
        if out.len() == depth {
            out.push(Vec::new());
        }
        for v in bits::iter_bits(cand).collect::<Vec<_>>() {
            if *budget == 0 {
                return Err(capacity_err(out.iter().map(|l| l.len() as u64).sum(), depth));
            }
            *budget -= 1;
            stack.push(v as u32);
            out[depth].push(stack.clone());
            if max_dim.map_or(true, |d| depth < d) {
                let mut next = vec![0u64; cand.len()];
                bits::and_into(cand, g.row(v), &mut next);
                clear_upto(&mut next, v);
                if !bits::is_empty(&next) {
                    rec(g, &next, stack, out, budget, max_dim)?;
                }
            }
            stack.pop();
        }
        Ok(())
    }

    let w = g.words_per_row();
    let mut all = vec![0u64; w];
    for v in 0..g.n() {
        bits::set_bit(&mut all, v);
    }
    rec(g, &all, &mut stack, &mut cliques, &mut budget, opts.max_dim)?;
    while cliques.last().is_some_and(|l| l.is_empty()) {
        cliques.pop();
    }
    Ok(CliqueSet { cliques })
}

/// Euler characteristic of the induced subgraph on an arbitrary vertex mask
/// of a possibly multiword graph.
pub fn chi_of_mask(g: &Graph, mask: &[u64]) -> i64 {
    if let Some(rows) = g.rows_u64() {
        return chi_u64(&rows, mask[0]);
    }
    let verts: Vec<usize> = bits::iter_bits(mask).collect();
    let sub = g.induced(&verts).expect("mask within range");
    let counts = count_cliques_words(&sub.graph, &CliqueOptions::default()).expect("no cap");
    alternating_i64(&counts)
}

pub fn alternating_i64(counts: &[u64]) -> i64 {
    let mut chi = BigInt::zero();
    for (k, &c) in counts.iter().enumerate() {
        if k % 2 == 0 {
            chi += BigInt::from(c);
        } else {
            chi -= BigInt::from(c);
        }
    }
    chi.to_i64().expect("Euler characteristic fits i64 at this scale")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{self, Family};

    /// Brute force reference: scan all 2^n vertex subsets.
    fn brute_counts(g: &Graph) -> Vec<u64> {
        let n = g.n();
        assert!(n <= 16);
        let mut counts = Vec::new();
        'subset: for mask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            for i in 0..verts.len() {
                for j in (i + 1)..verts.len() {
                    if !g.has_edge(verts[i], verts[j]) {
                        continue 'subset;
                    }
                }
            }
            let k = verts.len() - 1;
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
        counts
    }

    #[test]
    fn counts_match_subset_scan() {
        let cases = [
            Family::Complete(5),
            Family::Cycle(6),
            Family::Path(4),
            Family::Wheel(5),
            Family::CrossPolytope(2),
            Family::Kite,
            Family::TwoStar(3),
            Family::ErdosRenyi { n: 10, p: crate::numeric::rat(2, 5), seed: 3 },
            Family::ErdosRenyi { n: 12, p: crate::numeric::rat(1, 2), seed: 9 },
        ];
        for fam in cases {
            let g = generate::generate(&fam).unwrap();
            let fast = count_cliques(&g, &CliqueOptions::default()).unwrap();
            assert_eq!(fast, brute_counts(&g), "family {fam:?}");
        }
    }

    #[test]
    fn enumeration_consistent_with_counts() {
        let g = generate::generate(&Family::ErdosRenyi {
            n: 11,
            p: crate::numeric::rat(1, 2),
            seed: 4,
        })
        .unwrap();
        let set = enumerate_cliques(&g, &CliqueOptions::default()).unwrap();
        let counts = count_cliques(&g, &CliqueOptions::default()).unwrap();
        assert_eq!(
            set.cliques.iter().map(|l| l.len() as u64).collect::<Vec<_>>(),
            counts
        );
        // lexicographic order per dimension, ascending inside each clique
        for level in &set.cliques {
            let mut sorted = level.clone();
            sorted.sort();
            assert_eq!(*level, sorted);
            for c in level {
                let mut s = c.clone();
                s.sort();
                assert_eq!(*c, s);
            }
        }
        // vertex level is all vertices
        assert_eq!(set.cliques[0].len(), g.n());
    }

    #[test]
    fn fvector_basics() {
        let g = generate::generate(&Family::CrossPolytope(2)).unwrap();
        let f = f_vector(&g, &CliqueOptions::default()).unwrap();
        assert_eq!(
            f.counts(),
            &[BigUint::from(6u32), BigUint::from(12u32), BigUint::from(8u32)]
        );
        assert_eq!(f.dimension(), Some(2));
        assert_eq!(f.euler_characteristic(), BigInt::from(2));
        let empty = f_vector(&Graph::empty(0), &CliqueOptions::default()).unwrap();
        assert_eq!(empty.counts().len(), 0);
        assert_eq!(empty.dimension(), None);
        assert_eq!(empty.euler_characteristic(), BigInt::from(0));
    }

    #[test]
    fn v0_equals_order_with_isolated_vertices() {
        let mut g = Graph::empty(5);
        g.toggle_edge(0, 1);
        let f = f_vector(&g, &CliqueOptions::default()).unwrap();
        assert_eq!(f.counts()[0], BigUint::from(5u32));
        assert_eq!(f.counts()[1], BigUint::from(1u32));
    }

    #[test]
    fn max_dim_cap_truncates() {
        let g = generate::generate(&Family::Complete(6)).unwrap();
        let capped = count_cliques(&g, &CliqueOptions { max_dim: Some(1), ..Default::default() }).unwrap();
        assert_eq!(capped, vec![6, 15]);
        let set = enumerate_cliques(&g, &CliqueOptions { max_dim: Some(2), ..Default::default() }).unwrap();
        assert_eq!(set.cliques.len(), 3);
        assert_eq!(set.cliques[2].len(), 20);
    }

    #[test]
    fn clique_budget_is_a_capacity_error() {
        let g = generate::generate(&Family::Complete(10)).unwrap();
        let err = count_cliques(&g, &CliqueOptions { max_dim: None, max_cliques: 100 }).unwrap_err();
        assert_eq!(err.kind(), crate::error::ErrorKind::Capacity);
        let err = enumerate_cliques(&g, &CliqueOptions { max_dim: None, max_cliques: 100 }).unwrap_err();
        assert_eq!(err.kind(), crate::error::ErrorKind::Capacity);
    }

    #[test]
    fn engines_agree_on_multiword() {
        // 70-vertex sparse graph exercises the multiword path
        let edges: Vec<(usize, usize)> = (0..69).map(|i| (i, i + 1)).chain([(69, 0), (0, 35)]).collect();
        let g = Graph::from_edges(70, &edges).unwrap();
        let counts = count_cliques(&g, &CliqueOptions::default()).unwrap();
        assert_eq!(counts, vec![70, 71]);
        assert_eq!(alternating_i64(&counts), -1);
    }

    #[test]
    fn ph_matches_clique_engine_small() {
        for (fam, expect) in [
            (Family::Cycle(5), 0),
            (Family::Complete(6), 1),
            (Family::CrossPolytope(2), 2),
            (Family::CompleteMultipartite(vec![3, 3]), -3),
        ] {
            let g = generate::generate(&fam).unwrap();
            let rows = g.rows_u64().unwrap();
            let m = full_mask(g.n());
            assert_eq!(chi_u64(&rows, m), expect);
            assert_eq!(ph_chi_u64(&rows, m), expect);
        }
    }
}
