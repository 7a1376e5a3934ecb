use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphcurv"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("spawn graphcurv");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "graphcurv {args:?} exited {code}: {stderr}");
    stdout
}

fn scratch(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("graphcurv_cli_{}_{name}", std::process::id()));
    std::fs::write(&path, contents).expect("write scratch file");
    path
}

#[test]
fn chi_of_generated_graphs() {
    assert_eq!(ok(&["chi", "--generate", "icosahedron"]), "2\n");
    assert_eq!(ok(&["chi", "--generate", "kite"]), "1\n");
    assert_eq!(ok(&["chi", "--generate", "complete_multipartite(3,3)"]), "-3\n");
    assert_eq!(ok(&["chi", "--generate", "cross_polytope(4)"]), "2\n");
    assert_eq!(ok(&["chi", "--generate", "cross_polytope(3)"]), "0\n");
}

#[test]
fn chi_reads_both_file_formats() {
    let edges = ok(&["generate", "--generate", "kite"]);
    let json = ok(&["generate", "--generate", "kite", "--format", "json"]);
    let ef = scratch("kite.txt", &edges);
    let jf = scratch("kite.json", &json);
    assert_eq!(ok(&["chi", "--graph", ef.to_str().unwrap()]), "1\n");
    assert_eq!(ok(&["chi", "--graph", jf.to_str().unwrap()]), "1\n");
    let _ = std::fs::remove_file(ef);
    let _ = std::fs::remove_file(jf);
}

#[test]
fn curvature_totals_match_chi() {
    let out = ok(&["curvature", "--generate", "cross_polytope(2)"]);
    assert!(out.contains("0 1/3\n"), "octahedron curvature: {out}");
    assert!(out.ends_with("total 2\n"), "octahedron total: {out}");
    let csv = ok(&["curvature", "--generate", "cross_polytope(2)", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("vertex,curvature"));
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn index_sums_to_chi() {
    let out = ok(&["index", "--generate", "icosahedron", "--seed", "11"]);
    assert!(out.ends_with("sum 2\n"), "{out}");
    let sym = ok(&["index", "--generate", "icosahedron", "--seed", "11", "--symmetric"]);
    assert!(sym.ends_with("sum 2\n"), "{sym}");
}

#[test]
fn er_expect_exact() {
    assert_eq!(ok(&["er-expect", "--n", "3", "--p", "1/2"]), "13/8 1.625\n");
    let terms = ok(&["er-expect", "--n", "3", "--p", "1/2", "--terms"]);
    assert_eq!(terms, "13/8 1.625\nterm 1 3\nterm 2 -3/2\nterm 3 1/8\n");
    let csv = ok(&["er-expect", "--n", "4", "--p", "0.3", "--format", "csv"]);
    assert_eq!(csv, "n,p,value,decimal\n4,3/10,2307271/1000000,2.307271\n");
}

#[test]
fn er_expect_mc_is_seed_deterministic() {
    let args = ["er-expect", "--n", "8", "--p", "1/2", "--mc", "--samples", "400", "--seed", "9"];
    let first = ok(&args);
    let second = ok(&args);
    assert_eq!(first, second);
    assert!(first.starts_with("mean "), "{first}");
    let other = ok(&["er-expect", "--n", "8", "--p", "1/2", "--mc", "--samples", "400", "--seed", "10"]);
    assert_ne!(first, other);
}

#[test]
fn er_sweep_table() {
    let out = ok(&["er-sweep", "--n-max", "3", "--p", "1/2,9/10"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,p,expected_chi,log_pm");
    assert_eq!(lines.len(), 7);
    assert!(lines[5].starts_with("3,1/2,1.625"), "{out}");
}

#[test]
fn extremal_exhaustive_min_at_six() {
    let out = ok(&["extremal", "--n", "6", "--mode", "min"]);
    assert!(out.contains("best -3\n"), "{out}");
    assert!(out.contains("method exhaustive\n"), "{out}");
    assert!(out.contains("evaluations 26704\n"), "{out}");
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["extremal", "--n", "6", "--mode", "min", "--format", "json"])).unwrap();
    assert_eq!(json["best_value"], -3);
    assert_eq!(json["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn extremal_einstein_annotation() {
    let out = ok(&["extremal", "--n", "6", "--mode", "max", "--einstein"]);
    assert!(out.contains("witness (einstein):"), "{out}");
}

#[test]
fn extremal_anneal_is_seed_deterministic() {
    let args = [
        "extremal", "--n", "8", "--mode", "min", "--method", "anneal", "--steps", "4000", "--seed", "3",
    ];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn geodesics_on_the_kite() {
    let out = ok(&["geodesic", "--generate", "kite", "--from", "0", "--to", "3"]);
    assert_eq!(out, "distance 2\n0 1 3\n0 2 3\n");
}

#[test]
fn curvature_metric_distance() {
    let out = ok(&[
        "geodesic", "--generate", "icosahedron", "--from", "0", "--to", "7", "--metric", "curvature2d",
        "--c", "1", "--format", "json",
    ]);
    assert_eq!(out, "{\"distance\":\"5/3\",\"geodesics\":[[0,1,7],[0,2,7]]}\n");
}

#[test]
fn genus_action_of_a_path() {
    let out = ok(&["geodesic", "--generate", "cross_polytope(4)", "--path", "0,2,4", "--action"]);
    assert_eq!(out, "4/5 0.8\n");
}

#[test]
fn injectivity_radius_on_the_icosahedron() {
    assert_eq!(ok(&["geodesic", "--generate", "icosahedron", "--from", "0", "--injectivity"]), "1\n");
}

#[test]
fn levelset_is_seed_deterministic() {
    let args = ["levelset", "--generate", "icosahedron", "--vertex", "0", "--seed", "4", "--format", "json"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let doc: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert!(doc.get("cells").is_some(), "{first}");
}

#[test]
fn bench_emits_one_row_per_graph() {
    let out = ok(&["bench", "--repeats", "1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "graph,n,clique_ns,ph_ns,ratio");
    assert_eq!(lines.len(), 8);
    for row in &lines[1..] {
        // Graph names may hold commas (then they are quoted); the four
        // numeric fields always close the row.
        let fields: Vec<&str> = row.rsplitn(5, ',').collect();
        assert_eq!(fields.len(), 5, "{row}");
        fields[0].parse::<f64>().expect("ratio");
        fields[1].parse::<u64>().expect("ph_ns");
        fields[2].parse::<u64>().expect("clique_ns");
        fields[3].parse::<u64>().expect("n");
    }
}

#[test]
fn input_errors_exit_one() {
    let (code, _, stderr) = run(&["chi", "--generate", "moebius"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("input error"), "{stderr}");
    let (code, _, _) = run(&["chi"]);
    assert_eq!(code, 1);
    let (code, _, stderr) = run(&["er-expect", "--n", "3", "--p", "2"]);
    assert_eq!(code, 1, "{stderr}");
}

#[test]
fn domain_errors_exit_two() {
    let (code, _, stderr) = run(&[
        "geodesic", "--generate", "complete_multipartite(2)", "--from", "0", "--to", "1",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no path"), "{stderr}");
}

#[test]
fn capacity_errors_exit_three() {
    let (code, _, stderr) = run(&["extremal", "--n", "8", "--mode", "min", "--method", "exhaustive"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("capacity error"), "{stderr}");
}

#[test]
fn help_and_version_exit_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("graphcurv"));
    let (code, stdout, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("graphcurv "));
}
