use std::io::Write;
use std::process::{Command, Output, Stdio};

use paravector::Paravector;
use paravector_cli::wire;
use proptest::prelude::*;

fn pv(args: &[&str]) -> Output {
    pv_with(args, None, &[])
}

fn pv_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pv"));
    cmd.args(args).env_remove("PV_TOL").stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("pv runs");
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn determinant_of_example() {
    let o = pv(&["det", "[1,1,1,0,0,0,0,0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[-1,2]\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn singular_inverse_is_domain_error() {
    let o = pv(&["inv", "[1,0,1,0,0,0,0,0]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("singular paravector"));
    assert!(o.stdout.is_empty());
}

#[test]
fn parse_errors_are_usage_errors() {
    for bad in ["[1,0,0]", "[1,0,0,0,0,0,0,x]", "1", ""] {
        let o = pv(&["rev", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty());
        assert!(stderr(&o).starts_with("pv: invalid paravector"));
    }
    assert!(stderr(&pv(&["rev", "[1,0,0]"])).contains("expected 8 numbers, found 3"));
    assert!(stderr(&pv(&["rev", "[1,0,\n0,x]"])).contains("line 2, column 3"));
}

#[test]
fn usage_errors() {
    assert_eq!(pv(&["fuzz", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(pv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pv(&["add", "[1,0,0,0,0,0,0,0]"]).status.code(), Some(2));
    assert_eq!(pv(&["--left", "--right", "vprod", "[1,0,0,0,0,0,0,0]", "[1,0,0,0,0,0,0,0]"]).status.code(), Some(2));
    assert_eq!(pv(&["det", "--tol", "-1", "[1,0,0,0,0,0,0,0]"]).status.code(), Some(2));
    let help = pv(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("fuzz"));
}

#[test]
fn algebra_commands() {
    let a = "[1,1,1,0,0,0,0,0]";
    let b = "[0,0,0,1,0,0,0,0]";
    let run = |args: &[&str]| {
        let o = pv(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        stdout(&o)
    };
    assert_eq!(run(&["add", a, b]), "[1,1,1,1,0,0,0,0]\n");
    // e₁e₂ = i e₃
    assert_eq!(run(&["mul", "[0,0,1,0,0,0,0,0]", b]), "[0,0,0,0,0,0,0,1]\n");
    assert_eq!(run(&["rev", a]), "[1,1,-1,-0,-0,-0,-0,-0]\n");
    assert_eq!(run(&["conj", a]), "[1,-1,1,0,0,-0,-0,-0]\n");
    assert_eq!(run(&["vig", "[1,0,1,0,0,0,0,0]"]), "[2,0,2,0,0,0,0,0]\n");
    let inv = wire::parse(&run(&["inv", "[2,0,1,0,0,0,0,0]"])).unwrap().to_components();
    assert_eq!(inv, [2.0 / 3.0, 0.0, -1.0 / 3.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    assert_eq!(run(&["module", "[2,0,1,0,0,0,0,0]"]), format!("{}\n", 3f64.sqrt()));
    assert_eq!(run(&["sprod", "[2,0,1,0,0,0,0,0]", "[1,0,2,0,0,0,0,0]"]), "[0,0]\n");
    let normalized = wire::parse(&run(&["normalize", "[2,0,1,0,0,0,0,0]"])).unwrap();
    assert!((normalized.det().re - 1.0).abs() < 1e-12);
}

#[test]
fn orientation_flags() {
    let a = "[2,0,1,0,0,0,0,0]";
    let b = "[2,0,0,1,0,0,0,0]";
    let right = stdout(&pv(&["vprod", a, b]));
    assert_eq!(right, stdout(&pv(&["vprod", "--right", a, b])));
    assert_ne!(right, stdout(&pv(&["vprod", "--left", a, b])));
    let cos = wire::parse(&stdout(&pv(&["angle", a, b]))).unwrap().scalar();
    assert!((cos.re - 4.0 / 3.0).abs() < 1e-12);
}

#[test]
fn angle_composition() {
    // two quarter turns about e₃
    let q = format!("[{c},0,0,0,0,0,0,{c}]", c = std::f64::consts::FRAC_1_SQRT_2);
    let o = pv(&["compose-angle", &q, &q]);
    let p = wire::parse(&stdout(&o)).unwrap();
    let expected = Paravector::from_components([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
    assert!(p.max_diff(&expected) < 1e-12);
    // not an angle: determinant 3
    assert_eq!(pv(&["compose-angle", "[2,0,1,0,0,0,0,0]", &q]).status.code(), Some(1));
}

#[test]
fn transforms() {
    let axis = format!("[{c},0,0,0,0,0,0,{c}]", c = std::f64::consts::FRAC_1_SQRT_2);
    let rotated = wire::parse(&stdout(&pv(&["rotate", "[0,0,1,0,0,0,0,0]", &axis]))).unwrap();
    assert!(rotated.to_components().iter().zip([0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]).all(|(x, y)| (x - y).abs() < 1e-12));
    assert_eq!(stdout(&pv(&["mirror", "[0,0,0,0,0,1,2,3]", "[0,0,0,0,0,1]"])), "[0,0,0,0,0,1,2,-3]\n");
    assert_eq!(stdout(&pv(&["axial", "[0.5,0,1,2,3,0,0,0]", "[0,0,1,0,0,0]"])), "[0.5,0,-1,-2,3,0,0,0]\n");
    let isotropic = pv(&["mirror", "[1,0,0,0,0,0,0,0]", "[1,0,0,0,1,0]"]);
    assert_eq!(isotropic.status.code(), Some(1));
    assert!(stderr(&isotropic).contains("isotropic"));
    assert_eq!(pv(&["mirror", "[1,0,0,0,0,0,0,0]", "[1,0,0]"]).status.code(), Some(2));
}

#[test]
fn euler_composition() {
    let quarter = format!("[0,0,1,{}]", std::f64::consts::FRAC_PI_4);
    let out: Vec<f64> = serde_json::from_str(&stdout(&pv(&["euler", &quarter, &quarter]))).unwrap();
    assert!((out[2] - 1.0).abs() < 1e-12 && (out[3] - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    let back = format!("[0,0,1,{}]", -std::f64::consts::FRAC_PI_4);
    assert_eq!(stdout(&pv(&["euler", &quarter, &back])), "[0,0,0,0]\n");
    assert_eq!(pv(&["euler", "[0,0,2,1]", &quarter]).status.code(), Some(1));
}

#[test]
fn matrices() {
    let o = stdout(&pv(&["pauli", "[0,0,1,0,0,0,0,0]"]));
    assert_eq!(o, "[ 0+0i  1+0i ]\n[ 1+0i  0+0i ]\n");
    let o = stdout(&pv(&["matrep", "[1,0,0,0,0,0,0,0]"]));
    assert_eq!(o.lines().count(), 4);
    assert!(o.starts_with("[ 1+0i  0+0i  0+0i  0+0i ]"));
}

#[test]
fn classification_text_and_json() {
    let text = stdout(&pv(&["classify", "[2,0,1,0,0,0,0,0]"]));
    assert!(text.contains("det: [3,0]") && text.contains("proper: true") && text.contains("singular: false"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&pv(&["classify", "--json", "[1,0,1,0,0,0,0,0]"]))).unwrap();
    assert_eq!(json["is_singular"], true);
    assert_eq!(json["det"], serde_json::json!([0.0, 0.0]));
}

#[test]
fn tolerance_from_environment_and_flag() {
    let near = "[1,0,1.0001,0,0,0,0,0]";
    let singular = |o: &Output| stdout(o).contains("singular: true");
    assert!(!singular(&pv(&["classify", near])));
    assert!(singular(&pv_with(&["classify", near], None, &[("PV_TOL", "1e-3")])));
    assert!(!singular(&pv_with(&["classify", "--tol", "1e-9", near], None, &[("PV_TOL", "1e-3")])));
    assert_eq!(pv_with(&["classify", near], None, &[("PV_TOL", "abc")]).status.code(), Some(2));
}

#[test]
fn operand_from_stdin() {
    let o = pv_with(&["mul", "-", "-"], Some("[0,0,1,0,0,0,0,0]\n"), &[]);
    assert_eq!(stdout(&o), "[1,0,0,0,0,0,0,0]\n");
}

#[test]
fn fuzz_campaign_passes() {
    let o = pv(&["fuzz", "--seed", "42", "--trials", "10000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().contains("0 failing"));
    for p in paravector::fuzz::properties() {
        assert!(text.contains(p.name), "{} missing from report", p.name);
    }
}

#[test]
fn fuzz_is_deterministic() {
    let args = ["fuzz", "--seed", "9", "--trials", "50", "--json"];
    let first = pv(&args);
    assert_eq!(first.stdout, pv(&args).stdout);
    let report: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["seed"], 9);
    assert_eq!(report["properties"].as_array().unwrap().len(), paravector::fuzz::properties().len());
}

#[test]
fn fuzz_reports_mutants() {
    for m in ["drop-cross-term", "rev-sign-error", "transposed-matrix"] {
        let o = pv(&["fuzz", "--seed", "42", "--trials", "1000", "--mutant", m]);
        assert_eq!(o.status.code(), Some(3), "{m}");
        assert!(stdout(&o).contains("first counterexample at trial"));
        assert!(o.stderr.is_empty());
    }
}

fn run_in_process(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = paravector_cli::run(
        std::iter::once("pv").chain(args.iter().copied()),
        &mut std::io::empty(),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rev_round_trips_through_the_wire(c in prop::array::uniform8(-1e6f64..1e6)) {
        let p = Paravector::from_components(c).unwrap();
        let text = wire::serialize(&p);
        let (code, out, err) = run_in_process(&["rev", &text]);
        prop_assert_eq!(code, 0);
        prop_assert!(err.is_empty());
        let back = wire::parse(&out).unwrap();
        prop_assert_eq!(back.rev().to_components().map(f64::to_bits), c.map(f64::to_bits));
    }

    #[test]
    fn output_is_deterministic(c in prop::array::uniform8(-2f64..2.0), d in prop::array::uniform8(-2f64..2.0)) {
        let (a, b) = (wire::serialize(&Paravector::from_components(c).unwrap()), wire::serialize(&Paravector::from_components(d).unwrap()));
        for cmd in ["mul", "sprod", "vprod"] {
            prop_assert_eq!(run_in_process(&[cmd, &a, &b]), run_in_process(&[cmd, &a, &b]));
        }
    }
}
