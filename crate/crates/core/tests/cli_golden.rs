//! Exact stdout of the command line for stable reports.

use minorsat::cli::{run, EXIT_BUDGET, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};
use minorsat::graph::parse_edge_list;

fn run_str(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["minorsat"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn verify_paper_r6() {
    let (code, out) = run_str(&["verify-paper", "--r", "6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "\
graph: GP(8,3) target: K6
vertices: 16 edges: 24
minor-free: yes (counting bound: 24 < 25)
certificate base: valid, missing pair A5 A6
certificate M1 (x0 A4 -> A6): valid, missing pair A4 A5
certificate M2 (y2 A3 -> A5): valid, missing pair A3 A6
non-edge orbits: 10 (dihedral group of order 16)
coverage: 10/10 orbits covered (base 4, M1 3, M2 3)
status: Saturated
sat(16, M(K6)) = 24: lower bound 3n/2, upper bound by exhibit
"
    );
}

#[test]
fn verify_paper_other_sizes() {
    let (code, out) = run_str(&["verify-paper", "--r", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("coverage: 16/16 orbits covered (base 8, M1 4, M2 2, M3 2)\n"));
    assert!(out.ends_with("sat(26, M(K7)) = 39: lower bound 3n/2, upper bound by exhibit\n"));
    let (code, out) = run_str(&["verify-paper", "--r", "8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("coverage: 25/25 orbits covered (base 12, M1 5, M2 6, M3 2)\n"));
    assert!(out.ends_with("sat(38, M(K8)) = 57: lower bound 3n/2, upper bound by exhibit\n"));
}

#[test]
fn verify_paper_verbose_dumps_groups_and_models() {
    let (_, out) = run_str(&["-v", "verify-paper", "--r", "6"]);
    assert!(out.contains("  A1: x3 x4 x5\n"));
    assert!(out.contains("  A6: y0 y5 x0\n"));
    assert!(out.contains("  x0y1 ~ x1y0 @ base: [["));
}

#[test]
fn blind_r6() {
    let (code, out) = run_str(&["verify-paper", "--r", "6", "--blind", "--jobs", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graph: GP(8,3) target: K6\nstatus: Saturated\nnon-edges checked: 10\n"));
    assert!(out.contains("orbits agreeing with certificates: 10/10\n"));
}

#[test]
fn minor_counting_bound() {
    let (code, out) = run_str(&["minor", "--host", "GP(8,3)", "--target", "K6"]);
    assert_eq!(code, EXIT_REFUTED);
    assert_eq!(out, "NoMinor (counting bound: 24 < 25)\nnodes: 0\n");
    let (code, out) = run_str(&["minor", "--host", "K4", "--target", "K3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("Model [["));
}

#[test]
fn sat_exact_k4() {
    let (code, out) = run_str(&["sat-exact", "--n", "5", "--target", "K4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "n: 5\ntarget: K4\nsat = 7\nwitness: 0-1 0-2 0-3 0-4 1-2 1-3 1-4\ngraphs checked: 968\n"
    );
    let (_, out) = run_str(&[
        "sat-exact",
        "--n",
        "5",
        "--target",
        "K4",
        "--reverse",
        "--degree-filter",
    ]);
    assert!(out.contains("sat = 7\n"));
}

#[test]
fn saturated_verdicts() {
    let (code, out) = run_str(&["saturated", "--graph", "C5", "--target", "K4"]);
    assert_eq!(
        (code, out.as_str()),
        (EXIT_REFUTED, "status: MissingEdge\nwitness: 0 2\nnodes: 0\n")
    );
    let (code, out) = run_str(&["saturated", "--graph", "wagner", "--target", "K5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("status: Saturated\nnon-edges checked: 16\n"));
    let (code, _) = run_str(&["saturated", "--graph", "wagner", "--target", "K5", "--budget", "1"]);
    assert_eq!(code, EXIT_BUDGET);
    let (code, _) = run_str(&[
        "saturated",
        "--graph",
        "wagner",
        "--target",
        "K5",
        "--group",
        "dihedral",
    ]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn densities() {
    assert_eq!(run_str(&["density", "--thm22", "6", "3"]).1, "density: 9/4\n");
    assert_eq!(run_str(&["density", "--thm22", "4", "3"]).1, "density: 2/1\n");
    assert_eq!(
        run_str(&["density", "--block", "GP(8,3)", "--shared", "2"]).1,
        "density: 23/14\n"
    );
    assert_eq!(
        run_str(&["density", "--block", "wagner", "--shared", "2"]).1,
        "density: 11/6\n"
    );
}

#[test]
fn chain_summary() {
    let (code, out) = run_str(&["chain", "--family", "wagner", "--copies", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with(
        "# chain wagner copies=2\n# n: 14 m: 23\n# density per block: 11/6\n# counting bound: 23 >= 19, not decided\n14 23\n"
    ));
    let g = parse_edge_list(&out).unwrap();
    assert_eq!((g.n(), g.m()), (14, 23));
    let (_, out) = run_str(&["chain", "--family", "gp6", "--copies", "1"]);
    assert!(out.contains("# counting bound: 24 < 25, K6-minor-free\n"));
}

#[test]
fn gen_headers_and_files() {
    let (code, out) = run_str(&["gen", "gp", "8", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("# minorsat gen gp 8 3\n# vertices: x_i -> i, y_i -> n + i\n16 24\n0 1\n"));
    let (_, out) = run_str(&["gen", "thm22", "6", "3", "--kappa", "3", "--copies", "2"]);
    let g = parse_edge_list(&out).unwrap();
    assert_eq!((g.n(), g.m()), (26, 55));
    let (_, out) = run_str(&["gen", "gp-chain", "7", "2"]);
    let g = parse_edge_list(&out).unwrap();
    assert_eq!((g.n(), g.m()), (50, 77));

    let dir = std::env::temp_dir().join(format!("minorsat-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("star.txt");
    let (code, out) = run_str(&["gen", "star", "4", "5", "--out", file.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let (code, out) = run_str(&["saturated", "--graph", file.to_str().unwrap(), "--target", "K1,4"]);
    assert_eq!(code, EXIT_OK, "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}
