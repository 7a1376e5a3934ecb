//! Graph family generators and the `name(arg, ...)` spec parser.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{parse_rational, Rat};
use crate::rng::pair_coin;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// Cycle C_n, n >= 3.
    Cycle(usize),
    /// Path P_n on n >= 1 vertices (n - 1 edges).
    Path(usize),
    /// Complete graph K_n, n >= 0.
    Complete(usize),
    /// Complete multipartite graph; every part size >= 1.
    CompleteMultipartite(Vec<usize>),
    /// Star with k >= 0 rays: center 0, rays 1..=k.
    Star(usize),
    /// Wheel: center 0 joined to a rim cycle of length >= 3.
    Wheel(usize),
    /// Boundary of the (d+1)-dimensional cross-polytope: K_{2,...,2} with
    /// d+1 parts, d >= 1.
    CrossPolytope(usize),
    /// The icosahedron graph (12 vertices, every unit sphere a 5-cycle).
    Icosahedron,
    /// Two triangles sharing an edge: vertices 0..4, shared edge (1, 2).
    Kite,
    /// Two star centers glued along k >= 1 rays: K_{2,k}, centers 0 and 1.
    TwoStar(usize),
    /// Flat torus triangulation on an a x b grid with one diagonal per
    /// square; a, b >= 4 so every unit sphere is a 6-cycle.
    TorusTriangulation(usize, usize),
    /// Erdos-Renyi G(n, p): each pair present independently with
    /// probability p, decided by a counter-based coin keyed (seed, u, v).
    ErdosRenyi { n: usize, p: Rat, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Cycle(n) => {
            if *n < 3 {
                return Err(Error::Input(format!("cycle needs at least 3 vertices, got {n}")));
            }
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(*n, &edges)
        }
        Family::Path(n) => {
            if *n < 1 {
                return Err(Error::Input("path needs at least 1 vertex".into()));
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(*n, &edges)
        }
        Family::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in (u + 1)..*n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(*n, &edges)
        }
        Family::CompleteMultipartite(sizes) => complete_multipartite(sizes),
        Family::Star(k) => {
            let edges: Vec<_> = (1..=*k).map(|i| (0, i)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        Family::Wheel(rim) => {
            if *rim < 3 {
                return Err(Error::Input(format!("wheel rim needs at least 3 vertices, got {rim}")));
            }
            let mut edges: Vec<_> = (1..=*rim).map(|i| (0, i)).collect();
            for i in 0..*rim {
                edges.push((1 + i, 1 + (i + 1) % rim));
            }
            Graph::from_edges(rim + 1, &edges)
        }
        Family::CrossPolytope(d) => {
            if *d < 1 {
                return Err(Error::Input("cross polytope dimension must be >= 1".into()));
            }
            complete_multipartite(&vec![2; d + 1])
        }
        Family::Icosahedron => icosahedron(),
        Family::Kite => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        Family::TwoStar(k) => {
            if *k < 1 {
                return Err(Error::Input("two_star needs at least 1 ray".into()));
            }
            complete_multipartite(&[2, *k])
        }
        Family::TorusTriangulation(a, b) => torus(*a, *b),
        Family::ErdosRenyi { n, p, seed } => erdos_renyi(*n, p, *seed),
    }
}

fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(Error::Input("multipartite parts must be nonempty".into()));
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (pi, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat(pi).take(s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

fn icosahedron() -> Result<Graph> {
    // apex 0, upper pentagon 1..=5, lower pentagon 6..=10, apex 11;
    // upper k is joined to lower k and lower k+1 (antiprism band)
    let mut edges = Vec::new();
    for k in 0..5 {
        let u = 1 + k;
        let l = 6 + k;
        edges.push((0, u));
        edges.push((u, 1 + (k + 1) % 5));
        edges.push((l, 6 + (k + 1) % 5));
        edges.push((11, l));
        edges.push((u, l));
        edges.push((u, 6 + (k + 1) % 5));
    }
    Graph::from_edges(12, &edges)
}

fn torus(a: usize, b: usize) -> Result<Graph> {
    if a < 4 || b < 4 {
        return Err(Error::Input(format!(
            "torus triangulation needs both sides >= 4, got {a} x {b}"
        )));
    }
    let id = |i: usize, j: usize| (i % a) * b + (j % b);
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((id(i, j), id(i + 1, j)));
            edges.push((id(i, j), id(i, j + 1)));
            edges.push((id(i, j), id(i + 1, j + 1)));
        }
    }
    Graph::from_edges(a * b, &edges)
}

fn erdos_renyi(n: usize, p: &Rat, seed: u64) -> Result<Graph> {
    if p.is_negative() || *p > Rat::one() {
        return Err(Error::Input(format!(
            "edge probability must lie in [0, 1], got {}",
            crate::numeric::rational_string(p)
        )));
    }
    // Coin u64 accepted below floor(p * 2^64); exact for p = 0 and 1,
    // quantized at 2^-64 otherwise.
    let threshold: u128 = {
        let scaled: BigInt = p.numer() * (BigInt::one() << 64) / p.denom();
        scaled.to_u128().expect("p in [0,1] scales into u128")
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if (pair_coin(seed, u, v) as u128) < threshold {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parses a generator spec of the form `name` or `name(arg1, arg2, ...)`.
pub fn parse_spec(spec: &str) -> Result<Family> {
    let s = spec.trim();
    let (name, args): (&str, Vec<String>) = match s.find('(') {
        None => (s, Vec::new()),
        Some(open) => {
            let close = s
                .rfind(')')
                .ok_or_else(|| Error::Input(format!("unbalanced parentheses in spec {s:?}")))?;
            if close != s.len() - 1 {
                return Err(Error::Input(format!("trailing text after ')' in spec {s:?}")));
            }
            let inner = &s[open + 1..close];
            let args = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|a| a.trim().to_string()).collect()
            };
            (&s[..open], args)
        }
    };
    let name = name.trim();
    let want = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::Input(format!("{name} expects {k} argument(s), got {}", args.len())))
        }
    };
    let int = |i: usize| -> Result<usize> {
        args[i]
            .parse::<usize>()
            .map_err(|_| Error::Input(format!("argument {:?} of {name} is not a nonnegative integer", args[i])))
    };
    match name {
        "cycle" => {
            want(1)?;
            Ok(Family::Cycle(int(0)?))
        }
        "path" => {
            want(1)?;
            Ok(Family::Path(int(0)?))
        }
        "complete" => {
            want(1)?;
            Ok(Family::Complete(int(0)?))
        }
        "complete_multipartite" => {
            if args.is_empty() {
                return Err(Error::Input("complete_multipartite expects at least 1 part".into()));
            }
            let sizes = (0..args.len()).map(int).collect::<Result<Vec<_>>>()?;
            Ok(Family::CompleteMultipartite(sizes))
        }
        "star" => {
            want(1)?;
            Ok(Family::Star(int(0)?))
        }
        "wheel" => {
            want(1)?;
            Ok(Family::Wheel(int(0)?))
        }
        "cross_polytope" => {
            want(1)?;
            Ok(Family::CrossPolytope(int(0)?))
        }
        "icosahedron" => {
            want(0)?;
            Ok(Family::Icosahedron)
        }
        "kite" => {
            want(0)?;
            Ok(Family::Kite)
        }
        "two_star" => {
            want(1)?;
            Ok(Family::TwoStar(int(0)?))
        }
        "torus_triangulation" => {
            want(2)?;
            Ok(Family::TorusTriangulation(int(0)?, int(1)?))
        }
        "erdos_renyi" => {
            want(3)?;
            let n = int(0)?;
            let p = parse_rational(&args[1])?;
            let seed = args[2]
                .parse::<u64>()
                .map_err(|_| Error::Input(format!("seed {:?} is not a u64", args[2])))?;
            Ok(Family::ErdosRenyi { n, p, seed })
        }
        other => Err(Error::Input(format!("unknown generator {other:?}"))),
    }
}

/// Convenience: parse and generate in one step.
pub fn from_spec(spec: &str) -> Result<Graph> {
    generate(&parse_spec(spec)?)
}
