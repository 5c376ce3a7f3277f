use serde_json::Value;
use unified_cli::report::{poly_from_json, Report};
use unified_cli::run;
use unified_core::qcalc::qint;

fn call(args: &[&str]) -> unified_cli::Outcome {
    run(std::iter::once("unified").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Report {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = call(&a);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stderr))
}

#[test]
fn jones_hopf_is_quantum_six() {
    let rep = json(&["jones", "--link", "hopf(0,0)", "--colors", "2,3"]);
    assert_eq!(poly_from_json(&rep.rows[0].got).unwrap(), qint(6));
    let text = call(&["jones", "--link", "unknot(0)", "--colors", "3"]);
    assert_eq!(text.code, 0);
    assert!(text.stdout.contains("q^-1 + 1 + q"), "{}", text.stdout);
}

#[test]
fn wrt_rows_per_root() {
    let rep = json(&["wrt", "--manifold", "poincare", "--roots", "odd:3..7"]);
    let rs: Vec<u64> = rep.rows.iter().map(|r| r.got["r"].as_u64().unwrap()).collect();
    assert_eq!(rs, [3, 5, 7]);
    assert!(rep.rows.iter().all(|r| r.got["integral"] == Value::Bool(true)));
    let all = json(&["wrt", "--manifold", "lens(5)", "--roots", "7", "--galois"]);
    assert_eq!(all.rows.len(), 6);
    let su2 = json(&["wrt", "--manifold", "poincare", "--roots", "4", "--variant", "su2"]);
    assert_eq!(su2.rows[0].got["tau"]["text"], "-1");
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["jones", "--link", "nope", "--colors", "2"]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["wrt", "--manifold", "poincare", "--roots", "odd:4..4"]).code, 2);
    assert_eq!(call(&["unify", "--manifold", "unknot(2)", "--K", "2"]).code, 2);
    assert_eq!(call(&["--help"]).code, 0);
    assert_eq!(call(&["verify", "rr", "--order", "20"]).code, 0);
    assert_eq!(call(&["verify", "andrews", "--N", "0"]).code, 2);
}

#[test]
fn capacity_errors_exit_three() {
    // colors far beyond the default state-space bound
    let out = call(&["jones", "--link", "hopf(0,0)", "--colors", "3000,3000"]);
    assert_eq!(out.code, 3, "{}", out.stderr);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let args = ["verify", "laplace", "--b", "-1,3", "--k", "0..1", "--r-max", "7", "--format", "json"];
    let a = call(&args);
    let b = call(&args);
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("meta");
        v.to_string()
    };
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
    let rep: Report = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(serde_json::from_str::<Report>(&serde_json::to_string(&rep).unwrap()).unwrap(), rep);
    assert!(!a.stdout.contains("e-") && rep.all_pass());
}

#[test]
fn unify_and_ohtsuki_commands() {
    let rep = json(&["unify", "--manifold", "poincare", "--K", "6", "--verify-roots", "odd:3..7"]);
    assert_eq!(rep.rows.len(), 7 + 3);
    assert_eq!(rep.rows[0].got["text"], "1");
    assert!(rep.all_pass());
    let rep = json(&["ohtsuki", "--manifold", "poincare", "--p", "5", "--n-max", "2"]);
    assert!(rep.all_pass());
    let a1 = &rep.rows[0].got[1]["a_n"]["coeffs"][0];
    assert_eq!(a1, "-6");
}

#[test]
fn quick_profile_passes() {
    std::env::set_var(unified_cli::cli::THREADS_VAR, "2");
    let out = call(&["verify", "all", "--quick"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("all: "));
}
