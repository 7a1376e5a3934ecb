//! Acceptance gate: one test per criterion, exact arithmetic unless a
//! criterion states a statistical tolerance.

use graphcurv::einstein::{einstein_report, is_einstein, EinsteinOptions};
use graphcurv::er::{expected_chi_exact, expected_chi_mc};
use graphcurv::euler::{euler_characteristic, euler_characteristic_ph, euler_characteristic_ph_seeded};
use graphcurv::extremal::{anneal_extremal, exhaustive_extremal, monotonicity_report, AnnealSchedule, Mode};
use graphcurv::generate::from_spec;
use graphcurv::geodesic::{distance, minimal_geodesics, Metric, PathMetricConfig};
use graphcurv::morse::{curvature_report, poincare_hopf_sum, sample_function, symmetric_index};
use graphcurv::numeric::{parse_rational, rat_int, Rat};
use graphcurv::surface::{
    center_surface, center_surface_with, genus_lemma_check, glued_surface_characteristic,
    CompletionMode, Diagonal,
};
use graphcurv::Graph;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use std::time::Instant;

/// One graph per generator, sized so exhaustive wheel enumeration and
/// all-pairs geodesics stay cheap.
const CORPUS: &[&str] = &[
    "cycle(4)",
    "cycle(7)",
    "path(6)",
    "complete(5)",
    "complete_multipartite(3,3)",
    "complete_multipartite(2,3)",
    "star(3)",
    "star(6)",
    "wheel(5)",
    "wheel(6)",
    "cross_polytope(2)",
    "cross_polytope(3)",
    "cross_polytope(4)",
    "icosahedron",
    "kite",
    "two_star(3)",
    "torus_triangulation(5,5)",
    "erdos_renyi(12,1/2,7)",
    "erdos_renyi(20,3/10,3)",
];

fn corpus() -> Vec<(String, Graph)> {
    CORPUS
        .iter()
        .map(|spec| (spec.to_string(), from_spec(spec).expect(spec)))
        .collect()
}

fn random_graph(s: u64) -> Graph {
    let n = 5 + s % 21;
    let p = ["1/4", "3/10", "1/2", "3/5"][(s % 4) as usize];
    from_spec(&format!("erdos_renyi({n},{p},{s})")).unwrap()
}

#[test]
fn criterion_01_gauss_bonnet() {
    let mut checked = 0;
    for (spec, g) in corpus() {
        let report = curvature_report(&g).expect(&spec);
        let chi = euler_characteristic(&g);
        assert_eq!(report.total, rat_int(chi), "sum of curvatures vs chi on {spec}");
        checked += 1;
    }
    let failures: Vec<u64> = (0..200u64)
        .into_par_iter()
        .filter(|&s| {
            let g = random_graph(s);
            let report = curvature_report(&g).unwrap();
            report.total != rat_int(euler_characteristic(&g))
        })
        .collect();
    assert!(failures.is_empty(), "Gauss-Bonnet failed for seeds {failures:?}");
    println!("PASS criterion 1: Gauss-Bonnet exact on {checked} generator graphs and 200 random graphs");
}

#[test]
fn criterion_02_poincare_hopf() {
    let failures: Vec<u64> = (0..200u64)
        .into_par_iter()
        .filter(|&s| {
            let g = random_graph(1000 + s);
            let f = sample_function(&g, 9000 + s);
            let chi = euler_characteristic(&g);
            if poincare_hopf_sum(&g, &f).unwrap() != chi {
                return true;
            }
            let sym: Rat = g.vertices().map(|x| symmetric_index(&g, &f, x).unwrap()).sum();
            sym != rat_int(chi)
        })
        .collect();
    assert!(failures.is_empty(), "Poincare-Hopf failed for seeds {failures:?}");
    println!("PASS criterion 2: index and symmetric-index sums equal chi on 200 seeded (G,f) pairs");
}

#[test]
fn criterion_03_engine_equivalence() {
    for (spec, g) in corpus() {
        let chi = euler_characteristic(&g);
        assert_eq!(chi, euler_characteristic_ph(&g), "engines disagree on {spec}");
        assert_eq!(chi, euler_characteristic_ph_seeded(&g, 5), "seeded engine disagrees on {spec}");
    }
    let g = from_spec("erdos_renyi(40,3/10,5)").unwrap();
    let mut clique_ns = u128::MAX;
    let mut ph_ns = u128::MAX;
    let mut a = 0;
    let mut b = 0;
    for _ in 0..3 {
        let t = Instant::now();
        a = std::hint::black_box(euler_characteristic(std::hint::black_box(&g)));
        clique_ns = clique_ns.min(t.elapsed().as_nanos());
        let t = Instant::now();
        b = std::hint::black_box(euler_characteristic_ph(std::hint::black_box(&g)));
        ph_ns = ph_ns.min(t.elapsed().as_nanos());
    }
    assert_eq!(a, b, "engines disagree on erdos_renyi(40,3/10,5)");
    let ratio = clique_ns as f64 / ph_ns as f64;
    println!(
        "PASS criterion 3: engines agree on the corpus; erdos_renyi(40,3/10) clique {clique_ns}ns vs recursive {ph_ns}ns, ratio {ratio:.2}"
    );
}

#[test]
fn criterion_04_named_values() {
    assert_eq!(euler_characteristic(&from_spec("complete_multipartite(3,3)").unwrap()), -3);
    for n in 1..=10i64 {
        let g = from_spec(&format!("complete_multipartite({n},{n})")).unwrap();
        assert_eq!(euler_characteristic(&g), 2 * n - n * n, "chi of K_{{{n},{n}}}");
    }

    let octa = curvature_report(&from_spec("cross_polytope(2)").unwrap()).unwrap();
    for k in &octa.curvatures {
        assert_eq!(*k, parse_rational("1/3").unwrap());
    }

    let ico = from_spec("icosahedron").unwrap();
    let sixth = parse_rational("1/6").unwrap();
    for k in &curvature_report(&ico).unwrap().curvatures {
        assert_eq!(*k, sixth);
    }
    let report = is_einstein(&ico).unwrap();
    assert!(report.is_einstein, "icosahedron tensor does not vanish");
    for (_, r) in &report.ricci {
        assert_eq!(*r, sixth);
    }
    for s in &report.scalar {
        assert_eq!(*s, sixth);
    }

    let star = curvature_report(&from_spec("star(3)").unwrap()).unwrap();
    assert_eq!(star.curvatures[0], parse_rational("-1/2").unwrap(), "star center");

    assert_eq!(euler_characteristic(&from_spec("two_star(3)").unwrap()), -1);

    for spec in [
        "cycle(4)",
        "cycle(5)",
        "cycle(6)",
        "star(3)",
        "star(5)",
        "complete(3)",
        "complete(5)",
        "complete_multipartite(3,3)",
        "cross_polytope(2)",
    ] {
        let g = from_spec(spec).unwrap();
        assert!(is_einstein(&g).unwrap().is_einstein, "{spec} should be Einstein");
    }
    println!("PASS criterion 4: all named curvature, chi and Einstein values hold exactly");
}

#[test]
fn criterion_05_genus_lemma() {
    let g = from_spec("cross_polytope(4)").unwrap();
    let checks: Vec<(u64, usize)> = (0..100u64).flat_map(|s| g.vertices().map(move |x| (s, x))).collect();
    checks.par_iter().for_each(|&(s, x)| {
        let f = sample_function(&g, 4000 + s);
        let rep = genus_lemma_check(&g, &f, x).unwrap();
        assert!(rep.index_formula_holds, "index formula at vertex {x}, seed {s}");
        assert_eq!(rep.genus_form_holds, Some(true), "genus form at vertex {x}, seed {s}");
        let stellated = center_surface_with(&g, &f, x, CompletionMode::Stellation).unwrap();
        for mode in [CompletionMode::Chord(Diagonal::Low), CompletionMode::Chord(Diagonal::High)] {
            let chord = center_surface_with(&g, &f, x, mode).unwrap();
            assert_eq!(
                chord.euler_characteristic(),
                stellated.euler_characteristic(),
                "completion choice changed chi at vertex {x}, seed {s}"
            );
        }
    });
    println!("PASS criterion 5: genus lemma and completion invariance on cross_polytope(4), 100 functions, every vertex");
}

#[test]
fn criterion_06_hilbert_einstein() {
    let g = from_spec("cross_polytope(4)").unwrap();
    let n = g.n();
    let exact: Vec<Rat> = curvature_report(&g).unwrap().curvatures;
    const SAMPLES: u64 = 10_000;

    // Per sample and vertex, t = 2 - chi(B) = 2 j is a small integer; sums
    // of t and t^2 give the mean and standard error exactly.
    let (sum, sumsq) = (0..SAMPLES)
        .into_par_iter()
        .map(|k| {
            let f = sample_function(&g, 60_000 + k);
            assert_eq!(
                glued_surface_characteristic(&g, &f).unwrap(),
                -2,
                "glued surface characteristic at sample {k}"
            );
            let t: Vec<i64> = g
                .vertices()
                .map(|x| 2 - center_surface(&g, &f, x).unwrap().euler_characteristic())
                .collect();
            let tsq: Vec<i64> = t.iter().map(|v| v * v).collect();
            (t, tsq)
        })
        .reduce(
            || (vec![0i64; n], vec![0i64; n]),
            |(mut s, mut q), (t, tsq)| {
                for x in 0..n {
                    s[x] += t[x];
                    q[x] += tsq[x];
                }
                (s, q)
            },
        );

    let nf = SAMPLES as f64;
    for x in 0..n {
        let mean = sum[x] as f64 / (2.0 * nf);
        let var_t = (sumsq[x] as f64 - (sum[x] as f64).powi(2) / nf) / (nf - 1.0);
        let stderr = (var_t.max(0.0) / nf).sqrt() / 2.0;
        let k = exact[x].to_f64().unwrap();
        assert!(
            (mean - k).abs() <= 4.0 * stderr,
            "vertex {x}: mean {mean} vs curvature {k}, stderr {stderr}"
        );
    }
    println!("PASS criterion 6: sampled genus means match curvature within 4 standard errors; glued chi = -2 for all 10^4 samples");
}

#[test]
fn criterion_07_odd_dimension_triviality() {
    let cp3 = from_spec("cross_polytope(3)").unwrap();
    for k in &curvature_report(&cp3).unwrap().curvatures {
        assert_eq!(*k, rat_int(0));
    }
    // Circular graphs need n >= 4: the clique complex of cycle(3) is a
    // filled triangle, not a circle.
    for n in 4..=12 {
        let g = from_spec(&format!("cycle({n})")).unwrap();
        for k in &curvature_report(&g).unwrap().curvatures {
            assert_eq!(*k, rat_int(0), "cycle({n})");
        }
    }
    for s in 0..50u64 {
        let f = sample_function(&cp3, 7000 + s);
        for x in cp3.vertices() {
            let b = center_surface(&cp3, &f, x).unwrap();
            assert_eq!(b.euler_characteristic(), 0, "chi of B at vertex {x}, seed {s}");
            for v in b.graph.vertices() {
                assert_eq!(b.graph.degree(v), 2, "surface vertex degree at {x}, seed {s}");
            }
        }
    }
    println!("PASS criterion 7: odd-dimensional curvature vanishes; every sampled center surface in cross_polytope(3) is a union of circles");
}

/// Exact E[chi] over all labeled graphs on n vertices: sum chi(mask) times
/// p^edges (1-p)^(missing edges).
fn brute_force_expected_chi(n: usize, p: &Rat) -> Rat {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    let q = rat_int(1) - p.clone();
    let mut total = rat_int(0);
    for mask in 0u32..(1 << m) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let mut w = rat_int(euler_characteristic(&g));
        for i in 0..m {
            w *= if mask >> i & 1 == 1 { p.clone() } else { q.clone() };
        }
        total += w;
    }
    total
}

#[test]
fn criterion_08_erdos_renyi_formula() {
    // Both sides are polynomials in p of degree at most C(4,2) = 6, so
    // agreement at eight points is a polynomial identity.
    let points = ["0", "1", "1/2", "1/3", "2/7", "9/10", "3/5", "1/10"];
    for n in 1..=4 {
        for s in points {
            let p = parse_rational(s).unwrap();
            let exact = expected_chi_exact(n as u64, &p).unwrap().value;
            assert_eq!(exact, brute_force_expected_chi(n, &p), "n = {n}, p = {s}");
        }
    }

    let p = parse_rational("1/2").unwrap();
    let exact8 = expected_chi_exact(8, &p).unwrap().value.to_f64().unwrap();
    let mc = expected_chi_mc(8, &p, 10_000, 17).unwrap();
    let err = (mc.mean.to_f64().unwrap() - exact8).abs();
    assert!(err <= 4.0 * mc.stderr, "mc {err} vs stderr {}", mc.stderr);

    let v300 = expected_chi_exact(300, &p).unwrap().value;
    assert!(v300 < rat_int(-22200), "chi expectation at n = 300");
    let start = Instant::now();
    let v400 = expected_chi_exact(400, &parse_rational("9/10").unwrap()).unwrap().value;
    let elapsed = start.elapsed();
    assert!(v400 > rat_int(400), "chi expectation at n = 400");
    assert!(elapsed.as_secs() < 60, "n = 400 evaluation took {elapsed:?}");
    println!(
        "PASS criterion 8: formula matches brute force (n <= 4) and Monte Carlo; n=300 and n=400 spot checks hold, n=400 in {elapsed:?}"
    );
}

#[test]
fn criterion_09_extremal_search() {
    let (min6, max6) = exhaustive_extremal(6, true).unwrap();
    assert_eq!((min6.best_value, max6.best_value), (-3, 2));
    let k33 = from_spec("complete_multipartite(3,3)").unwrap();
    assert!(
        min6.witnesses.iter().any(|w| w.is_isomorphic_small(&k33).unwrap()),
        "K_3,3 missing from the minimum witnesses"
    );
    let octa = from_spec("cross_polytope(2)").unwrap();
    assert!(
        max6.witnesses.iter().any(|w| w.is_isomorphic_small(&octa).unwrap()),
        "octahedron missing from the maximum witnesses"
    );

    let (min5, _) = exhaustive_extremal(5, true).unwrap();
    assert_eq!(min5.best_value, -1);
    let k23 = from_spec("complete_multipartite(2,3)").unwrap();
    assert!(min5.witnesses.iter().any(|w| w.is_isomorphic_small(&k23).unwrap()));

    let (min4, _) = exhaustive_extremal(4, true).unwrap();
    assert_eq!(min4.best_value, 0);
    let c4 = from_spec("cycle(4)").unwrap();
    assert!(min4.witnesses.iter().any(|w| w.is_isomorphic_small(&c4).unwrap()));

    let rows = monotonicity_report(6).unwrap();
    assert_eq!(rows.last().map(|r| (r.min_chi, r.max_chi)), Some((-3, 2)));

    let schedule = AnnealSchedule::default();
    assert_eq!(schedule.steps, 100_000);
    let hits = (0..100u64)
        .into_par_iter()
        .filter(|&s| anneal_extremal(6, Mode::Min, &schedule, true, s).unwrap().best_value == -3)
        .count();
    assert!(hits >= 95, "annealing found the n=6 minimum in only {hits}/100 runs");
    println!("PASS criterion 9: exhaustive extrema, witnesses and monotonicity hold; annealing hit the optimum in {hits}/100 runs");
}

#[test]
fn criterion_10_conservation_law() {
    for (spec, g) in corpus() {
        let report = einstein_report(&g, &EinsteinOptions::default()).expect(&spec);
        assert!(!report.approximate, "{spec} was truncated");
        let mut per_vertex = vec![rat_int(0); g.n()];
        for (v, _, t) in &report.tensor {
            per_vertex[*v] += t.clone();
        }
        for (v, sum) in per_vertex.iter().enumerate() {
            assert_eq!(*sum, rat_int(0), "tensor sum at vertex {v} of {spec}");
        }
    }
    println!("PASS criterion 10: Einstein tensor sums to zero over every vertex sphere of every corpus graph");
}

fn distance_matrix(g: &Graph, config: &PathMetricConfig) -> Vec<Vec<Rat>> {
    g.vertices()
        .map(|a| g.vertices().map(|b| distance(g, a, b, config).unwrap()).collect())
        .collect()
}

#[test]
fn criterion_11_geodesics() {
    let kite = from_spec("kite").unwrap();
    let hop = PathMetricConfig::new(&kite, Metric::Hop).unwrap();
    assert_eq!(distance(&kite, 0, 3, &hop).unwrap(), rat_int(2));
    assert_eq!(minimal_geodesics(&kite, 0, 3, &hop).unwrap(), vec![vec![0, 1, 3], vec![0, 2, 3]]);

    let configs = |g: &Graph| -> Vec<(String, PathMetricConfig)> {
        let mut out = vec![("hop".to_string(), PathMetricConfig::new(g, Metric::Hop).unwrap())];
        for (name, metric) in [
            ("curvature2d(1/2)", Metric::Curvature2d { c: parse_rational("1/2").unwrap() }),
            ("curvature2d(1)", Metric::Curvature2d { c: rat_int(1) }),
            ("genus4d(1/10)", Metric::Genus4d { epsilon: parse_rational("1/10").unwrap() }),
        ] {
            // Only configurations the positivity validation admits qualify.
            if let Ok(config) = PathMetricConfig::new(g, metric) {
                out.push((name.to_string(), config));
            }
        }
        out
    };

    let graphs = corpus();
    graphs.par_iter().for_each(|(spec, g)| {
        for (name, config) in configs(g) {
            let d = distance_matrix(g, &config);
            for u in g.vertices() {
                assert_eq!(d[u][u], rat_int(0), "{spec} {name}");
                for v in g.vertices() {
                    assert_eq!(d[u][v], d[v][u], "{spec} {name} symmetry {u},{v}");
                    if u != v {
                        assert!(d[u][v] > rat_int(0), "{spec} {name} positivity {u},{v}");
                    }
                    for w in g.vertices() {
                        assert!(
                            d[u][v] <= d[u][w].clone() + d[w][v].clone(),
                            "{spec} {name} triangle {u},{w},{v}"
                        );
                    }
                }
            }
        }
        let zero = PathMetricConfig::new(g, Metric::Curvature2d { c: rat_int(0) }).unwrap();
        for u in g.vertices() {
            let hops = g.hop_distances(u).unwrap();
            for v in g.vertices() {
                assert_eq!(
                    distance(g, u, v, &zero).unwrap(),
                    rat_int(hops[v] as i64),
                    "{spec} c=0 vs hop {u},{v}"
                );
            }
        }
    });
    println!("PASS criterion 11: kite geodesics, metric axioms over all corpus triples, and the c=0 degeneration all hold");
}
