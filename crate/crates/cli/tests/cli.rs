use std::process::{Command, Output};

use slope_calc_cli::{parse_node_limit, NODE_LIMIT_VAR};

const PLUMBING: [&str; 10] = [
    "--companion",
    "1 1 1",
    "--strands",
    "2",
    "--pattern",
    "1 1 1",
    "--pattern-strands",
    "2",
    "--twist",
    "0 -1 1 0",
];

fn slope_calc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slope-calc"))
        .args(args)
        .env_remove(NODE_LIMIT_VAR)
        .output()
        .unwrap()
}

fn with_plumbing(cmd: &str, extra: &[&str]) -> Vec<String> {
    std::iter::once(cmd)
        .chain(PLUMBING)
        .chain(extra.iter().copied())
        .map(String::from)
        .collect()
}

fn run_plumbing(cmd: &str, extra: &[&str]) -> Output {
    let args = with_plumbing(cmd, extra);
    slope_calc(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn braid_reports_figure_eight() {
    let o = slope_calc(&["braid", "--word", "1 -2 1 -2", "--strands", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["alexander"], "1-3t+t^2");
    assert_eq!(v["genus"]["lower"], 1);
    assert_eq!(v["genus"]["exact"], true);
    assert_eq!(v["nontrivial"], true);
    assert_eq!(v["permutation"], "(1 3 2)");
}

#[test]
fn braid_file_input_matches_flags() {
    let dir = std::env::temp_dir().join(format!("slope-calc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig8.braid");
    std::fs::write(&path, "strands=3\n1 -2 1 -2\n").unwrap();
    let from_file = slope_calc(&["braid", "--file", path.to_str().unwrap()]);
    let from_flags = slope_calc(&["braid", "--word", "1 -2 1 -2", "--strands", "3"]);
    assert_eq!(from_file.stdout, from_flags.stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn undecided_nontriviality_is_null() {
    let o = slope_calc(&["braid", "--word", "1 -1 1", "--strands", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["nontrivial"].is_null());
    assert_eq!(v["genus"]["exact"], false);
}

#[test]
fn parse_errors_exit_with_two() {
    let o = slope_calc(&["braid", "--word", "1 x", "--strands", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = slope_calc(&["braid", "--word", "3", "--strands", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("out of range"));
    let o = run_plumbing("satellite", &["--range", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("N ≥ 1 required"));
    let o = run_plumbing("satellite", &["--slope", "2/4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hypothesis_violations_exit_with_one_and_name_the_hypothesis() {
    let o = slope_calc(&["torus-norm", "--braid", "1 -1 1", "--strands", "2", "--slope", "1/1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("braid-torus-norm"), "{}", stderr(&o));

    let o = slope_calc(&["torus-norm", "--braid", "1 1", "--strands", "2", "--slope", "1/1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn genus_override_certifies_the_norm() {
    let o = slope_calc(&[
        "torus-norm",
        "--braid",
        "1 -1 1",
        "--strands",
        "2",
        "--slope",
        "1/2",
        "--genus",
        "1",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][0]["norm"]["value"], "2");
    assert_eq!(v["genus"]["method"], "UserSupplied");
    let o = slope_calc(&[
        "torus-norm",
        "--braid",
        "1 1 1",
        "--strands",
        "2",
        "--slope",
        "1/2",
        "--genus",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn satellite_single_slope() {
    let o = run_plumbing("satellite", &["--slope", "1/1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["norm"]["value"], "2");
    assert_eq!(v["norm"]["kind"], "Exact");
    assert_eq!(v["singular_genus"]["singular_exact"], 2);
    assert_eq!(v["genus_upper"], 2);
}

#[test]
fn slope_accepts_space_separated_and_negative_forms() {
    let a = run_plumbing("satellite", &["--slope", "-1/-1"]);
    let b = run_plumbing("satellite", &["--slope", "1 1"]);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn satellite_table_csv_ends_with_index_row() {
    let o = run_plumbing("satellite", &["--range", "1", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "x,y,norm,norm_kind,singular_lower,singular_upper,singular_exact,genus_upper"
    );
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[1], "0,1,1,Exact,1,2,,1");
    assert_eq!(lines[5], "index_at_least,2,value-set-index,,,,,");
}

#[test]
fn non_plumbing_table_reports_lower_bounds() {
    let o = slope_calc(&[
        "satellite",
        "--companion",
        "1 1 1",
        "--strands",
        "2",
        "--pattern",
        "1 1 1",
        "--pattern-strands",
        "2",
        "--twist",
        "1 1 1 2",
        "--range",
        "2",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["norm"]["kind"], "LowerBound");
    }
    assert!(v["index_bound"]["unavailable"].is_string());
}

#[test]
fn unit_ball_svg_and_unbounded() {
    let o = run_plumbing("unit-ball", &[]);
    assert!(o.status.success());
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(r#"data-vertices="(1,0) (0,1) (-1,0) (0,-1)""#));

    let args = [
        "unit-ball",
        "--companion",
        "1 1 1",
        "--strands",
        "2",
        "--pattern",
        "1 1 1",
        "--pattern-strands",
        "2",
        "--twist",
        "1 1 0 1",
    ];
    let o = slope_calc(&[&args[..], &["--format", "json"]].concat());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["unbounded"]["null_direction"], serde_json::json!([1, 0]));
    let o = slope_calc(&args);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn extendability_verdicts() {
    let o = run_plumbing(
        "extendability",
        &["--range", "3", "--dehn-slope", "1/0", "--singular-genus", "0"],
    );
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["finiteness_from_norm"]["verdict"]["conclusion"], "Finite");
    assert_eq!(
        v["finiteness_from_twist"]["verdict"]["justification"]["citation"],
        "twist-finiteness"
    );
    assert_eq!(v["dehn_twist"]["verdict"]["conclusion"], "StablyExtendable");
    assert_eq!(v["unknotted_torus"]["extendable_index"], 3);
}

#[test]
fn cl_reports_witness_or_null() {
    let o = slope_calc(&["cl", "--word", "x y X Y x y X Y", "--k-max", "1", "--len-max", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["cl_upper_bound"].is_null());

    let o = slope_calc(&["cl", "--word", "x"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn node_limit_is_read_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_slope-calc"))
        .args(["cl", "--word", "x y X Y x y X Y", "--k-max", "2", "--len-max", "3"])
        .env(NODE_LIMIT_VAR, "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("limit of 10"), "{}", stderr(&o));

    assert_eq!(parse_node_limit(None).unwrap(), slope_calc::word::DEFAULT_NODE_LIMIT);
    assert_eq!(parse_node_limit(Some(" 77 ")).unwrap(), 77);
    assert!(parse_node_limit(Some("lots")).is_err());
}
