//! Command line front end: every subcommand drives one library operation
//! and renders its result as text, json or csv.

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphcurv::einstein::{einstein_json, einstein_report, EinsteinOptions};
use graphcurv::er::{expected_chi_exact, expected_chi_exact_with_terms, expected_chi_mc, sweep, sweep_csv};
use graphcurv::error::{Error, ErrorKind};
use graphcurv::euler::euler_characteristic;
use graphcurv::extremal::{anneal_extremal, einstein_filter, exhaustive_extremal, search_json, AnnealSchedule, Mode, SearchResult, MAX_EXHAUSTIVE_ORDER};
use graphcurv::generate::from_spec;
use graphcurv::geodesic::{distance, genus_action_exact, genus_action_sampled, injectivity_radius, minimal_geodesics, path_length, Metric, PathMetricConfig};
use graphcurv::io::{parse_graph, serialize_graph, GraphFormat};
use graphcurv::morse::{curvature_report, index, poincare_hopf_sum, sample_function, symmetric_index};
use graphcurv::numeric::{decimal_string, exact_decimal, parse_rational, rational_string, Rat};
use graphcurv::surface::{center_surface, hypersurface, surface_json};
use graphcurv::{Graph, Result};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "graphcurv", version, about = "Curvature, Morse indices and level surfaces of finite simple graphs")]
struct Cli {
    /// Seed for every randomized operation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on worker threads; results never depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct GraphSource {
    /// Read the graph from a file (edge list, or json when it starts with '{').
    #[arg(long, value_name = "FILE", conflicts_with = "generate")]
    graph: Option<PathBuf>,
    /// Generate the graph from a spec such as icosahedron or erdos_renyi(20,1/2,7).
    #[arg(long, value_name = "SPEC")]
    generate: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic of the clique complex [euler_characteristic].
    Chi {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Exact curvature at every vertex and the Gauss-Bonnet total [curvature_report].
    Curvature {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Poincare-Hopf indices of a seeded random function [index, symmetric_index, poincare_hopf_sum].
    Index {
        #[command(flatten)]
        source: GraphSource,
        /// Report symmetric indices j instead of i.
        #[arg(long)]
        symmetric: bool,
    },
    /// Level surface of a seeded function at a threshold, or the completed center surface at a vertex [hypersurface, center_surface].
    Levelset {
        #[command(flatten)]
        source: GraphSource,
        /// Threshold c for the plain hypersurface.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "vertex")]
        level: Option<String>,
        /// Center vertex x for the center surface at c = f(x).
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Ricci and scalar curvature, Einstein tensor and flag [einstein_report].
    Einstein {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Expected Euler characteristic of an Erdos-Renyi graph [expected_chi_exact, expected_chi_mc].
    ErExpect {
        /// Graph order.
        #[arg(long)]
        n: u64,
        /// Edge probability as a rational or decimal.
        #[arg(long)]
        p: String,
        /// Estimate by Monte Carlo instead of the exact formula.
        #[arg(long)]
        mc: bool,
        /// Sample count for --mc.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// Also list the alternating terms of the exact formula.
        #[arg(long, conflicts_with = "mc")]
        terms: bool,
    },
    /// Expected-characteristic table over all orders up to n-max [sweep].
    ErSweep {
        /// Largest order; every n from 1 is included.
        #[arg(long)]
        n_max: u64,
        /// Comma-separated probabilities.
        #[arg(long, value_delimiter = ',')]
        p: Vec<String>,
    },
    /// Extremal Euler characteristic search [exhaustive_extremal, anneal_extremal, monotonicity_report].
    Extremal {
        /// Graph order.
        #[arg(long)]
        n: usize,
        /// Which extreme to report.
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Search connected graphs only (the default class).
        #[arg(long, conflicts_with = "all_graphs")]
        connected: bool,
        /// Search all graphs, disconnected ones included.
        #[arg(long)]
        all_graphs: bool,
        /// exhaustive (n <= 7), anneal, or auto to pick by order.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Annealing steps.
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
        /// Annealing start temperature.
        #[arg(long, default_value_t = 2.0)]
        t_start: f64,
        /// Annealing end temperature.
        #[arg(long, default_value_t = 0.05)]
        t_end: f64,
        /// Annotate each witness with its Einstein flag [einstein_filter].
        #[arg(long)]
        einstein: bool,
    },
    /// Distances, minimal geodesics, injectivity radius and the genus action [distance, minimal_geodesics, injectivity_radius, path_length, genus_action].
    Geodesic {
        #[command(flatten)]
        source: GraphSource,
        /// Source vertex.
        #[arg(long)]
        from: Option<usize>,
        /// Target vertex: reports distance and all minimal geodesics.
        #[arg(long)]
        to: Option<usize>,
        /// Explicit comma-separated vertex path for length or action.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        path: Option<Vec<usize>>,
        /// Injectivity radius around --from.
        #[arg(long)]
        injectivity: bool,
        /// Genus action of --path (exact; --samples switches to Monte Carlo).
        #[arg(long)]
        action: bool,
        /// Sample count for the sampled genus action.
        #[arg(long)]
        samples: Option<u64>,
        /// Path metric.
        #[arg(long, value_enum, default_value_t = MetricArg::Hop)]
        metric: MetricArg,
        /// Deformation strength for --metric curvature2d.
        #[arg(long)]
        c: Option<String>,
        /// Deformation strength for --metric genus4d.
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Emit the chosen graph as an edge list, json or csv [generate, serialize_graph].
    Generate {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Time the clique-complex engine against the Poincare-Hopf engine over a generator corpus; emits csv [euler_characteristic, euler_characteristic_ph].
    Bench {
        /// Timing repetitions per graph; the minimum is reported.
        #[arg(long, default_value_t = 3)]
        repeats: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Min,
    Max,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Exhaustive,
    Anneal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Hop,
    Curvature2d,
    Genus4d,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(1);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(&cli) {
        Ok(out) => print!("{out}"),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err.kind() {
                ErrorKind::Input => 1,
                ErrorKind::Domain => 2,
                ErrorKind::Capacity => 3,
            };
            std::process::exit(code);
        }
    }
}

fn load_graph(source: &GraphSource) -> Result<Graph> {
    match (&source.graph, &source.generate) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            let format = if text.trim_start().starts_with('{') { GraphFormat::Json } else { GraphFormat::EdgeList };
            parse_graph(&text, format)
        }
        (None, Some(spec)) => from_spec(spec),
        _ => Err(Error::Input("provide exactly one of --graph FILE or --generate SPEC".into())),
    }
}

fn minimal_decimal(x: &Rat) -> String {
    exact_decimal(x, 30).unwrap_or_else(|| decimal_string(x, 15))
}

fn run(cli: &Cli) -> Result<String> {
    let format = cli.format;
    let seed = cli.seed;
    match &cli.command {
        Command::Chi { source } => {
            let chi = euler_characteristic(&load_graph(source)?);
            Ok(match format {
                Format::Text => format!("{chi}\n"),
                Format::Json => format!("{{\"chi\":{chi}}}\n"),
                Format::Csv => format!("chi\n{chi}\n"),
            })
        }
        Command::Curvature { source } => {
            let report = curvature_report(&load_graph(source)?)?;
            Ok(match format {
                Format::Text => {
                    let mut out = String::new();
                    for (v, k) in report.curvatures.iter().enumerate() {
                        out.push_str(&format!("{v} {}\n", rational_string(k)));
                    }
                    out.push_str(&format!("total {}\n", rational_string(&report.total)));
                    out
                }
                Format::Json => {
                    let curvatures: Vec<String> = report.curvatures.iter().map(rational_string).collect();
                    let doc = serde_json::json!({
                        "curvatures": curvatures,
                        "total": rational_string(&report.total),
                    });
                    format!("{doc}\n")
                }
                Format::Csv => {
                    let mut out = String::from("vertex,curvature\n");
                    for (v, k) in report.curvatures.iter().enumerate() {
                        out.push_str(&format!("{v},{}\n", rational_string(k)));
                    }
                    out
                }
            })
        }
        Command::Index { source, symmetric } => {
            let g = load_graph(source)?;
            let f = sample_function(&g, seed);
            if *symmetric {
                let values: Vec<Rat> =
                    g.vertices().map(|x| symmetric_index(&g, &f, x)).collect::<Result<_>>()?;
                let sum: Rat = values.iter().sum();
                Ok(render_indexed(format, "index", &values.iter().map(rational_string).collect::<Vec<_>>(), &rational_string(&sum)))
            } else {
                let values: Vec<i64> = g.vertices().map(|x| index(&g, &f, x)).collect::<Result<_>>()?;
                let sum = poincare_hopf_sum(&g, &f)?;
                Ok(render_indexed(format, "index", &values.iter().map(i64::to_string).collect::<Vec<_>>(), &sum.to_string()))
            }
        }
        Command::Levelset { source, level, vertex } => {
            let g = load_graph(source)?;
            let f = sample_function(&g, seed);
            match (level, vertex) {
                (Some(c), None) => {
                    let c = parse_rational(c)?;
                    let s = hypersurface(&g, &f, &c)?;
                    let chi = s.euler_characteristic();
                    Ok(match format {
                        Format::Text => format!(
                            "vertices {}\nedges {}\nchi {chi}\n",
                            s.graph.n(),
                            s.graph.edge_count()
                        ),
                        Format::Json => {
                            let doc = serde_json::json!({
                                "n": s.graph.n(),
                                "edges": s.graph.edges().collect::<Vec<_>>(),
                                "crossing_edges": &s.surface_vertices,
                                "chi": chi,
                            });
                            format!("{doc}\n")
                        }
                        Format::Csv => format!(
                            "vertices,edges,chi\n{},{},{chi}\n",
                            s.graph.n(),
                            s.graph.edge_count()
                        ),
                    })
                }
                (None, Some(x)) => {
                    let s = center_surface(&g, &f, *x)?;
                    let chi = s.euler_characteristic();
                    Ok(match format {
                        Format::Text => format!(
                            "vertices {}\nedges {}\nchi {chi}\ncompleted {}\n",
                            s.graph.n(),
                            s.graph.edge_count(),
                            s.completed
                        ),
                        Format::Json => format!("{}\n", surface_json(&s)),
                        Format::Csv => format!(
                            "vertices,edges,chi,completed\n{},{},{chi},{}\n",
                            s.graph.n(),
                            s.graph.edge_count(),
                            s.completed
                        ),
                    })
                }
                _ => Err(Error::Input("provide exactly one of --level C or --vertex X".into())),
            }
        }
        Command::Einstein { source } => {
            let report = einstein_report(&load_graph(source)?, &EinsteinOptions::default())?;
            Ok(match format {
                Format::Text => {
                    let mut out = String::new();
                    for ((u, v), r) in &report.ricci {
                        out.push_str(&format!("ricci {u} {v} {}\n", rational_string(r)));
                    }
                    for (v, s) in report.scalar.iter().enumerate() {
                        out.push_str(&format!("scalar {v} {}\n", rational_string(s)));
                    }
                    out.push_str(&format!("max_abs_tensor {}\n", rational_string(&report.max_abs_tensor)));
                    if report.approximate {
                        out.push_str("approximate true\n");
                    }
                    out.push_str(&format!("einstein {}\n", report.is_einstein));
                    out
                }
                Format::Json => format!("{}\n", einstein_json(&report)),
                Format::Csv => {
                    let mut out = String::from("edge_u,edge_v,ricci\n");
                    for ((u, v), r) in &report.ricci {
                        out.push_str(&format!("{u},{v},{}\n", rational_string(r)));
                    }
                    out
                }
            })
        }
        Command::ErExpect { n, p, mc, samples, terms } => {
            let p = parse_rational(p)?;
            if *mc {
                let est = expected_chi_mc(*n, &p, *samples, seed)?;
                Ok(match format {
                    Format::Text => format!(
                        "mean {} {}\nstderr {}\nsamples {}\n",
                        rational_string(&est.mean),
                        minimal_decimal(&est.mean),
                        est.stderr,
                        est.samples
                    ),
                    Format::Json => {
                        let doc = serde_json::json!({
                            "n": n,
                            "p": rational_string(&p),
                            "mean": rational_string(&est.mean),
                            "decimal": minimal_decimal(&est.mean),
                            "stderr": est.stderr,
                            "samples": est.samples,
                        });
                        format!("{doc}\n")
                    }
                    Format::Csv => format!(
                        "n,p,mean,stderr,samples\n{n},{},{},{},{}\n",
                        rational_string(&p),
                        rational_string(&est.mean),
                        est.stderr,
                        est.samples
                    ),
                })
            } else {
                let result = if *terms {
                    expected_chi_exact_with_terms(*n, &p)?
                } else {
                    expected_chi_exact(*n, &p)?
                };
                let value = rational_string(&result.value);
                let decimal = minimal_decimal(&result.value);
                Ok(match format {
                    Format::Text => {
                        let mut out = format!("{value} {decimal}\n");
                        if let Some(terms) = &result.terms {
                            for (k, t) in terms.iter().enumerate() {
                                out.push_str(&format!("term {} {}\n", k + 1, rational_string(t)));
                            }
                        }
                        out
                    }
                    Format::Json => {
                        let terms = result
                            .terms
                            .as_ref()
                            .map(|ts| ts.iter().map(rational_string).collect::<Vec<_>>());
                        let doc = serde_json::json!({
                            "n": n,
                            "p": rational_string(&p),
                            "value": value,
                            "decimal": decimal,
                            "terms": terms,
                        });
                        format!("{doc}\n")
                    }
                    Format::Csv => {
                        format!("n,p,value,decimal\n{n},{},{value},{decimal}\n", rational_string(&p))
                    }
                })
            }
        }
        Command::ErSweep { n_max, p } => {
            let ps: Vec<Rat> = p.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
            let rows = sweep(*n_max, &ps)?;
            Ok(match format {
                Format::Text | Format::Csv => sweep_csv(&rows),
                Format::Json => {
                    let docs: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "n": r.n,
                                "p": rational_string(&r.p),
                                "expected_chi": decimal_string(&r.value, 15),
                                "log_pm": r.log_pm,
                            })
                        })
                        .collect();
                    format!("{}\n", serde_json::Value::Array(docs))
                }
            })
        }
        Command::Extremal { n, mode, connected: _, all_graphs, method, steps, t_start, t_end, einstein } => {
            let connected_only = !*all_graphs;
            let mode = match mode {
                ModeArg::Min => Mode::Min,
                ModeArg::Max => Mode::Max,
            };
            let use_anneal = match method {
                MethodArg::Exhaustive => false,
                MethodArg::Anneal => true,
                MethodArg::Auto => *n > MAX_EXHAUSTIVE_ORDER,
            };
            let result = if use_anneal {
                let schedule = AnnealSchedule { steps: *steps, t_start: *t_start, t_end: *t_end };
                anneal_extremal(*n, mode, &schedule, connected_only, seed)?
            } else {
                if *n > MAX_EXHAUSTIVE_ORDER {
                    return Err(Error::Capacity(format!(
                        "exhaustive scan handles order <= {MAX_EXHAUSTIVE_ORDER}, got {n}; rerun with --method anneal"
                    )));
                }
                let (min, max) = exhaustive_extremal(*n, connected_only)?;
                match mode {
                    Mode::Min => min,
                    Mode::Max => max,
                }
            };
            if *einstein {
                let annotated = einstein_filter(result)?;
                render_search(format, &annotated.result, Some(&annotated.einstein))
            } else {
                render_search(format, &result, None)
            }
        }
        Command::Geodesic { source, from, to, path, injectivity, action, samples, metric, c, epsilon } => {
            let g = load_graph(source)?;
            let needs = |name: &str, value: &Option<String>| -> Result<Rat> {
                match value {
                    Some(s) => parse_rational(s),
                    None => Err(Error::Input(format!("--metric {name} needs --{}", if name == "curvature2d" { "c" } else { "epsilon" }))),
                }
            };
            let metric = match metric {
                MetricArg::Hop => Metric::Hop,
                MetricArg::Curvature2d => Metric::Curvature2d { c: needs("curvature2d", c)? },
                MetricArg::Genus4d => Metric::Genus4d { epsilon: needs("genus4d", epsilon)? },
            };
            if *action {
                let path = path.clone().ok_or_else(|| Error::Input("--action needs --path".into()))?;
                return match samples {
                    Some(k) => {
                        let est = genus_action_sampled(&g, &path, *k, seed)?;
                        Ok(match format {
                            Format::Text => format!(
                                "mean {} {}\nstderr {}\nsamples {}\n",
                                rational_string(&est.mean),
                                minimal_decimal(&est.mean),
                                est.stderr,
                                est.samples
                            ),
                            Format::Json => {
                                let doc = serde_json::json!({
                                    "mean": rational_string(&est.mean),
                                    "stderr": est.stderr,
                                    "samples": est.samples,
                                });
                                format!("{doc}\n")
                            }
                            Format::Csv => format!(
                                "mean,stderr,samples\n{},{},{}\n",
                                rational_string(&est.mean),
                                est.stderr,
                                est.samples
                            ),
                        })
                    }
                    None => {
                        let s = genus_action_exact(&g, &path)?;
                        Ok(match format {
                            Format::Text => format!("{} {}\n", rational_string(&s), minimal_decimal(&s)),
                            Format::Json => format!("{{\"action\":\"{}\"}}\n", rational_string(&s)),
                            Format::Csv => format!("action\n{}\n", rational_string(&s)),
                        })
                    }
                };
            }
            let config = PathMetricConfig::new(&g, metric)?;
            if let Some(path) = path {
                let len = path_length(&g, path, &config)?;
                return Ok(match format {
                    Format::Text => format!("{}\n", rational_string(&len)),
                    Format::Json => format!("{{\"length\":\"{}\"}}\n", rational_string(&len)),
                    Format::Csv => format!("length\n{}\n", rational_string(&len)),
                });
            }
            if *injectivity {
                let v = (*from).ok_or_else(|| Error::Input("--injectivity needs --from".into()))?;
                let r = injectivity_radius(&g, v, &config)?;
                return Ok(match format {
                    Format::Text => format!("{r}\n"),
                    Format::Json => format!("{{\"vertex\":{v},\"radius\":{r}}}\n"),
                    Format::Csv => format!("vertex,radius\n{v},{r}\n"),
                });
            }
            match (from, to) {
                (Some(a), Some(b)) => {
                    let d = distance(&g, *a, *b, &config)?;
                    let paths = minimal_geodesics(&g, *a, *b, &config)?;
                    Ok(match format {
                        Format::Text => {
                            let mut out = format!("distance {}\n", rational_string(&d));
                            for p in &paths {
                                let ids: Vec<String> = p.iter().map(usize::to_string).collect();
                                out.push_str(&format!("{}\n", ids.join(" ")));
                            }
                            out
                        }
                        Format::Json => {
                            let doc = serde_json::json!({
                                "distance": rational_string(&d),
                                "geodesics": paths,
                            });
                            format!("{doc}\n")
                        }
                        Format::Csv => {
                            format!("from,to,distance,geodesics\n{a},{b},{},{}\n", rational_string(&d), paths.len())
                        }
                    })
                }
                _ => Err(Error::Input(
                    "specify --from and --to, or --path, or --injectivity with --from".into(),
                )),
            }
        }
        Command::Generate { source } => {
            let g = load_graph(source)?;
            Ok(match format {
                Format::Text => serialize_graph(&g, GraphFormat::EdgeList),
                Format::Json => format!("{}\n", serialize_graph(&g, GraphFormat::Json)),
                Format::Csv => {
                    let mut out = String::from("u,v\n");
                    for (u, v) in g.edges() {
                        out.push_str(&format!("{u},{v}\n"));
                    }
                    out
                }
            })
        }
        Command::Bench { repeats } => bench(seed, (*repeats).max(1)),
    }
}

fn render_indexed(format: Format, label: &str, values: &[String], sum: &str) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (v, value) in values.iter().enumerate() {
                out.push_str(&format!("{v} {value}\n"));
            }
            out.push_str(&format!("sum {sum}\n"));
            out
        }
        Format::Json => {
            let doc = serde_json::json!({ "indices": values, "sum": sum });
            format!("{doc}\n")
        }
        Format::Csv => {
            let mut out = format!("vertex,{label}\n");
            for (v, value) in values.iter().enumerate() {
                out.push_str(&format!("{v},{value}\n"));
            }
            out
        }
    }
}

fn render_search(format: Format, r: &SearchResult, einstein: Option<&[bool]>) -> Result<String> {
    Ok(match format {
        Format::Text => {
            let mut out = format!(
                "best {}\nmethod {}\nevaluations {}\n",
                r.best_value, r.method, r.evaluations
            );
            for (i, w) in r.witnesses.iter().enumerate() {
                let tag = match einstein {
                    Some(flags) if flags[i] => " (einstein)",
                    Some(_) => " (not einstein)",
                    None => "",
                };
                out.push_str(&format!("witness{tag}:\n{}", serialize_graph(w, GraphFormat::EdgeList)));
            }
            out
        }
        Format::Json => match einstein {
            None => format!("{}\n", search_json(r)),
            Some(flags) => {
                let witnesses: Vec<String> =
                    r.witnesses.iter().map(|w| serialize_graph(w, GraphFormat::EdgeList)).collect();
                let doc = serde_json::json!({
                    "order": r.order,
                    "mode": r.mode.to_string(),
                    "connected_only": r.connected_only,
                    "best_value": r.best_value,
                    "witnesses": witnesses,
                    "method": r.method.to_string(),
                    "seed": r.seed,
                    "evaluations": r.evaluations,
                    "einstein": flags,
                });
                format!("{doc}\n")
            }
        },
        Format::Csv => format!(
            "order,mode,connected_only,best_value,method,evaluations\n{},{},{},{},{},{}\n",
            r.order, r.mode, r.connected_only, r.best_value, r.method, r.evaluations
        ),
    })
}

fn bench(seed: u64, repeats: u32) -> Result<String> {
    use graphcurv::euler::euler_characteristic_ph;
    let specs = vec![
        "icosahedron".to_string(),
        "cross_polytope(3)".to_string(),
        "cross_polytope(4)".to_string(),
        "torus_triangulation(5,5)".to_string(),
        "complete(14)".to_string(),
        format!("erdos_renyi(25,1/2,{seed})"),
        format!("erdos_renyi(40,3/10,{seed})"),
    ];
    let corpus: Vec<(String, Graph)> = specs
        .into_iter()
        .map(|spec| {
            let g = from_spec(&spec)?;
            Ok((spec, g))
        })
        .collect::<Result<_>>()?;
    let mut out = String::from("graph,n,clique_ns,ph_ns,ratio\n");
    for (name, g) in &corpus {
        let mut clique_ns = u128::MAX;
        let mut ph_ns = u128::MAX;
        let mut chi_clique = 0;
        let mut chi_ph = 0;
        for _ in 0..repeats {
            let t = Instant::now();
            chi_clique = std::hint::black_box(euler_characteristic(std::hint::black_box(g)));
            clique_ns = clique_ns.min(t.elapsed().as_nanos());
            let t = Instant::now();
            chi_ph = std::hint::black_box(euler_characteristic_ph(std::hint::black_box(g)));
            ph_ns = ph_ns.min(t.elapsed().as_nanos());
        }
        assert_eq!(chi_clique, chi_ph, "engines disagree on {name}");
        let ratio = clique_ns as f64 / ph_ns as f64;
        let name = if name.contains(',') { format!("\"{name}\"") } else { name.clone() };
        out.push_str(&format!("{name},{},{clique_ns},{ph_ns},{ratio:.2}\n", g.n()));
    }
    Ok(out)
}
