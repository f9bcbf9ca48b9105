use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_stdin(args, "")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["kcg"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = kcg::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn factor_prints_the_multiset() {
    let (code, out, _) = run(&["factor", "--poly", "1;-3;5;-3;1"]);
    assert_eq!((code, out.as_str()), (0, "(1;-3;5;-3;1)^1\n"));
    let (code, out, _) = run(&["factor", "--poly", "4;-15;30;-37;30;-15;4"]);
    assert_eq!((code, out.as_str()), (0, "(1;-1;1)^2 * (4;-7;4)^1\n"));
    let (code, out, _) = run(&["factor", "--poly", "1;-9;28;-39;28;-9;1"]);
    assert_eq!((code, out.as_str()), (0, "(1;-3;1)^1 * (1;-6;9;-6;1)^1\n"));
}

#[test]
fn invariants_of_the_trefoil() {
    let (code, out, _) = run(&["invariants", "--seifert", "-1,1;0,-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("alexander\t1;-1;1\n"));
    assert!(out.contains("murasugi_signature\t-2\n"));
    assert!(out.contains("jumps\t1.0471975512:-2\n"));
    assert!(out.contains("gc_poly_lower_bound\t1\n"));
}

#[test]
fn bound_of_one_knot() {
    let (code, out, _) = run(&["bound", "--name", "11a_1", "--table", &data("worked_11.csv")]);
    assert_eq!((code, out.as_str()), (0, "11a_1 3 3 determined polynomial=3\n"));
    let (code, out, _) = run(&["bound", "--name", "11a_6", "--table", &data("undetermined_11.csv")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("11a_6 1 3 undetermined "));
}

#[test]
fn census_writes_report_and_counts() {
    let dir = std::env::temp_dir().join(format!("kcg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("out.tsv");
    let (code, out, _) = run(&["census", "--table", &data("slice_11.csv"), "--report", report.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("slice\t30\n") && out.ends_with("total\t30\n"));
    let tsv = std::fs::read_to_string(&report).unwrap();
    assert!(tsv.starts_with("name\tgc_lower\tgc_upper\tcategory\tcontributors\tcandidates\n"));
    assert_eq!(tsv.lines().count(), 31);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn census_is_deterministic_across_jobs() {
    let table = data("undetermined_11.csv");
    let cands = data("knots_le8.csv");
    let a = run(&["census", "--table", &table, "--candidates", &cands, "--report", "-"]);
    let b = run(&["census", "--table", &table, "--candidates", &cands, "--report", "-", "--jobs", "4"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn match_lists_candidates() {
    let (code, out, _) = run(&[
        "match",
        "--name",
        "11a_196",
        "--table",
        &data("worked_11.csv"),
        "--candidates",
        &data("knots_le8.csv"),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("3_1\t1\t3\t-2\t1;-1;1\n"));
}

#[test]
fn table_from_stdin() {
    let text = "name,crossings,alexander,signature,genus3,genus4_min,genus4_max,slice,seifert,concordant_to\n\
                3_1,3,1;-1;1,-2,1,1,1,not_slice,\"-1,1;0,-1\",\n";
    let (code, out, _) = run_with_stdin(&["bound", "--name", "3_1", "--table", "-"], text);
    assert_eq!((code, out.as_str()), (0, "3_1 1 1 determined genus4=1,signature=1,polynomial=1\n"));
}

#[test]
fn errors_are_single_lines() {
    for (args, want) in [
        (vec!["factor", "--poly", "1;x"], 1),
        (vec!["factor", "--poly", "0"], 1),
        (vec!["invariants", "--seifert", "1,0;0,1"], 1),
        (vec!["bound", "--name", "nope", "--table", "/nonexistent.csv"], 1),
        (vec!["factor", "--poly", "1", "--bogus"], 2),
        (vec!["frobnicate"], 2),
        (vec!["census"], 2),
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, want, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
    let (code, _, err) = run(&["bound", "--name", "nope", "--table", &data("worked_11.csv")]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_kcg");
    let ok = Command::new(bin).args(["factor", "--poly", "2;-5;2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "(1;-2)^1 * (2;-1)^1\n");
    let usage = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
