use std::process::Command;

use gvdkit::run;
use serde_json::Value;

fn ok(args: &[&str]) -> String {
    let mut argv = vec!["gvdkit"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, 0, "{:?}: {}", args, out.stderr);
    out.stdout
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let text = ok(&full);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    v
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("gvdkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["localize", "--type", "A2", "--w", "1", "--v", "1,2,1", "--ring", "H", "--method", "direct"]), "a1 + a2\n");
    assert_eq!(ok(&["bruhat", "leq", "--type", "A2", "--u", "1", "--w", "2"]), "false\n");
    let path = temp_file("example.txt", "l*(x^2 - y^2) - y^2\n");
    let v = json(&["gvd", "split", "--ring", "x,y,l", "--gens", &format!("@{}", path), "--y", "l"]);
    assert_eq!(v["result"]["decomposition_holds"], true);
    assert_eq!(v["result"]["C"], serde_json::json!(["x^2 - y^2"]));
    assert_eq!(v["result"]["P"], serde_json::json!(["l"]));
}

#[test]
fn bruhat_words_and_witness() {
    assert_eq!(ok(&["bruhat", "words", "--type", "A2", "--w", "1,2,1"]), "1,2,1\n2,1,2\n");
    let v = json(&["bruhat", "leq", "--type", "A3", "--u", "1,2", "--w", "1,2,3,1"]);
    assert_eq!(v["result"]["result"], true);
    assert!(v["result"]["witnesses"]["positions"].is_array());
}

#[test]
fn localize_methods_agree() {
    for ring in ["H", "K"] {
        for (w, v) in [("1", "1,2,1"), ("2,1", "1,2,3,1,2,1"), ("", "2,3"), ("1,2", "1,2,3,1,2")] {
            let a = ok(&["localize", "--type", "A3", "--w", w, "--v", v, "--ring", ring, "--method", "direct"]);
            let b = ok(&["localize", "--type", "A3", "--w", w, "--v", v, "--ring", ring, "--method", "recursive"]);
            assert_eq!(a, b, "{} {} {}", ring, w, v);
        }
    }
}

#[test]
fn subword_complex_round_trips_through_the_file_format() {
    let text = ok(&["subword", "complex", "--type", "A2", "--Q", "1,2,1", "--w", "1"]);
    assert_eq!(text, "# vertices: 1,2,3\n1,2\n2,3\n");
    let path = temp_file("cplx.txt", &text);
    assert_eq!(ok(&["simplicial", "cm", "--in", &path]), "cohen-macaulay: true\n");
    assert!(ok(&["simplicial", "shell", "--in", &path]).starts_with("shellable"));
    assert_eq!(ok(&["simplicial", "homology", "--in", &path]), "H~_-1 = Q^0\nH~_0 = Q^0\nH~_1 = Q^0\n");
    assert_eq!(ok(&["simplicial", "sr", "--in", &path]), "x1*x3\n");
    let top = ok(&["subword", "complex", "--type", "A2", "--Q", "1,2,1", "--w", "1,2,1"]);
    assert_eq!(top, "# vertices: 1,2,3\n{}\n");
}

#[test]
fn non_cm_complex_is_an_answer_not_an_error() {
    let path = temp_file("edges.txt", "a,b\nc,d\n");
    assert_eq!(ok(&["simplicial", "cm", "--in", &path]), "cohen-macaulay: false\nlink of {} has homology below its dimension\n");
    assert_eq!(ok(&["simplicial", "shell", "--in", &path]), "not shellable\n");
}

#[test]
fn ideal_commands() {
    assert_eq!(ok(&["ideal", "gb", "--ring", "x,y", "--gens", "x^2 - y; x*y", "--order", "lex"]), "y^2\nx*y\nx^2 - y\n");
    assert_eq!(ok(&["ideal", "dim", "--ring", "x,y,z", "--gens", "x*y; x*z"]), "dimension 2\ncodimension 1\n");
    let v = json(&["ideal", "kpoly", "--ring", "x,y", "--gens", "y^2 - x"]);
    assert_eq!(v["result"]["kpoly"], "1 - t^2");
    let v = json(&["ideal", "kpoly", "--ring", "x,y", "--gens", "y^2 - x", "--order", "lex"]);
    assert_eq!(v["result"]["kpoly"], "1 - t^2");
}

#[test]
fn family_and_probe() {
    let v = json(&["gvd", "family", "--ring", "x,y", "--gens", "y^2 - x", "--y", "y"]);
    assert_eq!(v["result"]["fiber_0"], serde_json::json!(["y^2"]));
    assert_eq!(v["result"]["fiber_0_is_initial_y_ideal"], true);
    assert_eq!(v["result"]["fiber_1_is_input"], true);
    let v = json(&["gvd", "probe", "--ring", "x,y,l", "--gens", "l*(x^2 - y^2) - y^2", "--y", "l"]);
    assert_eq!(v["result"]["singular_codim"], 1);
    assert_eq!(v["result"]["normal"], false);
}

#[test]
fn patch_commands() {
    let v = json(&["patch", "ideal", "--n", "3", "--w", "2,1,3", "--v", "3,2,1"]);
    assert_eq!(v["result"]["multidegree"], "a1 + a2");
    assert_eq!(v["result"]["codim"], 1);
    let v = json(&["patch", "step", "--n", "3", "--w", "2,1,3", "--v", "3,2,1", "--alpha", "1"]);
    assert_eq!(v["result"]["case"], "C");
    assert_eq!(v["result"]["verified"], true);
    let v = json(&["patch", "degenerate", "--n", "3", "--w", "2,1,3", "--Q", "1,2,1"]);
    assert_eq!(v["result"]["matches"], true);
    assert_eq!(v["result"]["limit"], serde_json::json!(["x1*x3"]));
    assert!(!v["result"]["trace"].as_array().unwrap().is_empty());
    assert!(!v["certificates"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "patch", "degenerate", "--n", "4", "--w", "1,3,2,4", "--Q", "1,2,3,1,2,1"];
    let a = run(["gvdkit"].iter().chain(args.iter()));
    let b = run(["gvdkit"].iter().chain(args.iter()));
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    let out = run(["gvdkit", "gvd", "rll", "--ring", "x,y", "--gens", "x^2"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.starts_with("hypothesis failed: generically reduced"));
    let out = run(["gvdkit", "ideal", "gb", "--ring", "x,y", "--gens", "x^2 +* y"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("parse error at"));
    let out = run(["gvdkit", "--json", "patch", "step", "--n", "3", "--w", "2,1,3", "--v", "2,1,3", "--alpha", "2"]);
    assert_eq!(out.code, 1);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "precondition");
    let out = run(["gvdkit", "bruhat", "leq", "--type", "A2", "--u", "1"]);
    assert_eq!(out.code, 1);
    assert_eq!(run(["gvdkit", "--help"]).code, 0);
}

#[test]
fn suite_subset() {
    let v = json(&["suite", "--only", "5,9"]);
    let rows = v["result"]["criteria"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["passed"] == true));
}

#[test]
fn resource_cap_from_the_environment() {
    let bin = env!("CARGO_BIN_EXE_gvdkit");
    let out = Command::new(bin)
        .args(["--json", "ideal", "gb", "--ring", "a,b,c,d", "--gens", "a*c - b^2; b*d - c^2; a*d - b*c"])
        .env("GVDKIT_CAPS", "max_basis=1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "resource_cap");
    assert!(String::from_utf8_lossy(&out.stderr).contains("time:"));
    let out = Command::new(bin).args(["roots", "--type", "A2"]).env("GVDKIT_CAPS", "nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
