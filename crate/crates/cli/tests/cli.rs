//! End-to-end checks of the command-line surface through the library entry
//! point, including exit codes and the JSON report schema.

use gsp4_bessel_cli::run;

fn cmd(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["gsp4bessel"];
    argv.extend_from_slice(args);
    let out = run(argv);
    (out.code, out.stdout)
}

fn cmd_json(args: &[&str]) -> serde_json::Value {
    let mut argv = args.to_vec();
    argv.push("--json");
    let (code, out) = cmd(&argv);
    assert_eq!(code, 0, "command failed: {out}");
    serde_json::from_str(&out).expect("valid JSON")
}

#[test]
fn lfactor_of_a_twisted_steinberg() {
    let v = cmd_json(&["lfactor", "--type", "IVa", "--sigma", "sigma"]);
    assert_eq!(v["L_reg"], "L(s, nu^3/2 sigma)");
    assert_eq!(v["L_sreg_quotient"], "1");
    assert_eq!(v["exists"], true);
}

#[test]
fn bessel_module_without_split_model() {
    let v = cmd_json(&["bessel", "--type", "VIb", "--rho", "sigma"]);
    assert_eq!(v["exists"], false);
    assert_eq!(v["degree"], 0);
    assert_eq!(v["bessel_module"], "i_*(nu^1/2 sigma)");
    assert_eq!(v["beta_upper"], "i_*(nu^1/2 sigma)");
}

#[test]
fn classify_reports_the_exceptional_case() {
    let v = cmd_json(&["classify", "--type", "I", "--rho", "nu^-1/2 sigma"]);
    assert_eq!(v["exceptional_case"], "fully-induced non-ordinary");
    assert_eq!(v["exists"], true);
    assert!(v["delta_sets"]["delta_plus"].as_array().unwrap().len() == 4);
    // the generic-position assumptions made on the way are reported
    assert!(!v["assumptions"].as_array().unwrap().is_empty());
}

#[test]
fn classify_rejects_invalid_parameters() {
    let v = cmd_json(&["classify", "--type", "I", "--chi1", "nu", "--rho", "rho0"]);
    let violations = v["violations"].as_array().unwrap();
    assert!(violations.iter().any(|x| x.as_str().unwrap().contains("chi1 != nu")));
}

#[test]
fn lfactor_fails_cleanly_without_model() {
    let (code, out) = cmd(&["lfactor", "--type", "IVd", "--rho", "rho0", "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"].as_str().unwrap().contains("no split Bessel model"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _) = cmd(&["lfactor", "--no-such-flag"]);
    assert_eq!(code, 2);
    let (code, _) = cmd(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn explicit_generator_declarations() {
    let v = cmd_json(&[
        "lfactor",
        "--type",
        "IIa",
        "--gen",
        "chi order=inf ramified=false",
        "--gen",
        "s order=inf ramified=false",
        "--chi1",
        "chi",
        "--sigma",
        "s",
        "--rho",
        "s",
    ]);
    assert_eq!(v["L_reg"], "L(s, nu^1/2 chi s) L(s, chi^2 s) L(s, s)");
}

#[test]
fn ramified_parameters_drop_their_factors() {
    let v = cmd_json(&[
        "lfactor",
        "--type",
        "X",
        "--gen",
        "w order=4 ramified=true",
        "--gen",
        "s order=inf ramified=false",
        "--omega-pi",
        "w",
        "--sigma",
        "s",
        "--rho",
        "rho",
        "--gen",
        "rho order=inf ramified=false",
    ]);
    // the ramified omega_pi sigma factor degenerates to 1
    assert_eq!(v["L_reg"], "L(s, s)");
}

#[test]
fn asserts_extend_the_default_context() {
    // a declared inequation suppresses the generic-position assumption
    let v = cmd_json(&[
        "classify",
        "--type",
        "IIIa",
        "--rho",
        "rho0",
        "--assert",
        "chi1 != 1",
    ]);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    let assumptions = v["assumptions"].as_array().unwrap();
    assert!(assumptions.iter().all(|a| a.as_str().unwrap() != "chi1 != 1"));
}

#[test]
fn verify_suite_smoke() {
    let v = cmd_json(&["verify", "--suite", "combinatorics", "--model", "3,4"]);
    assert_eq!(v["ok"], true);
    assert!(v["cases"].as_u64().unwrap() > 0);
}

#[test]
fn tables_dump_contains_every_type() {
    let (code, out) = cmd(&["tables"]);
    assert_eq!(code, 0);
    for ty in ["IIIa", "VId", "CuspNonGeneric"] {
        assert!(out.contains(ty), "missing {ty} in the dump");
    }
}

#[test]
fn zeta_evaluation_from_file() {
    let dir = std::env::temp_dir().join("gsp4bessel-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coeffs.json");
    std::fs::write(
        &path,
        r#"{ "n0": 0, "explicit": [], "tails": [ { "mu": "1", "poly": ["0", "1"] } ] }"#,
    )
    .unwrap();
    let v = cmd_json(&["zeta", "--coeffs", path.to_str().unwrap(), "--chi", "1", "--q", "3"]);
    assert_eq!(v["zeta"], "(t) / ((1 - 1 t)^2)");
    let v = cmd_json(&[
        "zeta",
        "--coeffs",
        path.to_str().unwrap(),
        "--chi",
        "1",
        "--order",
        "2",
    ]);
    assert!(v["functional"].as_str().unwrap().contains("log(q)"));
}
