//! End-to-end tests of the installed binary: exit codes, canonical output
//! bytes, format renderings, and the perturbation contract.
//!
//! Every expected string below was captured from a run of the binary and
//! cross-checked against the library's own verification suites; the tests
//! pin the output byte-for-byte so accidental format drift is caught.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fivevertex"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

// ---- verify: passing suites ----

#[test]
fn verify_rll_passes() {
    let out = run(&["verify", "--suite", "rll"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pass suite=rll model=osc"));
    assert!(text.contains("pass suite=rll model=vic"));
    assert!(text.ends_with("all 6 reports passed\n"));
}

#[test]
fn verify_rll_single_model() {
    let out = run(&["verify", "--suite", "rll", "--model", "vic"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(!text.contains("model=osc"));
    assert!(text.contains("pass suite=rll model=vic"));
}

#[test]
fn verify_sixteen_n3_osc() {
    let out = run(&["verify", "--suite", "sixteen", "--N", "3", "--model", "osc"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pass suite=sixteen model=osc N=3"));
    assert!(text.ends_with("all 1 reports passed\n"));
}

#[test]
fn verify_all_small_with_workers() {
    let out = run(&["verify", "--N", "2", "--jobs", "4"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.ends_with("all 23 reports passed\n"), "got: {text}");
    // worker count must not change report content or order; only the
    // elapsed_ms timing field may vary between runs
    let strip = |s: &str| {
        s.lines()
            .map(|l| l.split(" elapsed_ms=").next().expect("line").to_string())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let seq = run(&["verify", "--N", "2", "--jobs", "1"]);
    assert_eq!(strip(&stdout(&seq)), strip(&text));
}

// ---- verify: usage errors ----

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("unknown suite 'nope'"));
    assert!(err.contains("rll"), "error must list known suites: {err}");
}

#[test]
fn verify_unknown_model_is_usage_error() {
    let out = run(&["verify", "--suite", "rll", "--model", "xyz"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown model 'xyz'"));
}

#[test]
fn verify_over_cap_is_usage_error() {
    let out = run(&["verify", "--suite", "sixteen", "--N", "9"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("exceeds the cap"));
}

#[test]
fn verify_n_zero_is_usage_error() {
    let out = run(&["verify", "--N", "0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("N must be at least 1"));
}

#[test]
fn verify_all_over_cap_skips_with_notice() {
    let out = run(&["verify", "--N", "6"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("skipping suite rll (cap 5 < N=6)"));
    assert!(stdout(&out).contains("pass suite=quantum model=- N=6"));
}

#[test]
fn perturb_without_variant_is_usage_error() {
    let out = run(&["verify", "--suite", "lattice", "--perturb"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no perturbed variant"));
}

#[test]
fn bad_out_path_is_usage_error() {
    let out = run(&["verify", "--suite", "rll", "--out", "/nonexistent/dir/x.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cannot write output"));
}

// ---- verify: perturbations must fail ----

#[test]
fn perturbed_rll_fails_with_mismatches() {
    let out = run(&["verify", "--suite", "rll", "--perturb"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL suite=rll"));
    assert!(text.contains("spoiled-rll row="), "mismatch listing expected: {text}");
}

#[test]
fn perturbed_sixteen_fails_for_various_seeds() {
    for seed in ["0", "1", "7", "42"] {
        let out = run(&["verify", "--suite", "sixteen", "--perturb", "--seed", seed]);
        assert_eq!(code(&out), 1, "seed {seed}");
        let text = stdout(&out);
        assert!(text.contains("FAIL suite=sixteen"), "seed {seed}: {text}");
        assert!(text.contains("spoiled:"), "seed {seed} lists mismatches");
    }
}

#[test]
fn perturbed_sym_fails_and_is_seed_reproducible() {
    let a = run(&["verify", "--suite", "sym", "--perturb", "--seed", "3"]);
    let b = run(&["verify", "--suite", "sym", "--perturb", "--seed", "3"]);
    assert_eq!(code(&a), 1);
    assert!(stdout(&a).contains("spoiled-commute"));
    // identical seed, identical mismatch listing (timing line may differ)
    let strip = |s: &str| {
        s.lines()
            .filter(|l| l.starts_with("  "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&stdout(&a)), strip(&stdout(&b)));
}

// ---- compute: canonical outputs, captured from the binary and verified
// ---- against the defining formulas ----

#[test]
fn operator_c_n3_standard_basis() {
    let out = run(&["compute", "operator", "--tag", "C", "--N", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "000  001  1\n\
         001  011  1\n\
         010  011  t2 + x\n\
         010  101  1\n\
         011  111  1\n\
         100  101  t1 + x\n\
         101  111  t1 + x\n\
         110  111  t1*t2 + t1*x + t2*x + x^2\n"
    );
}

#[test]
fn operator_a_n2_bethe_basis_is_diagonal() {
    let out = run(&["compute", "operator", "--tag", "A", "--N", "2", "--basis", "bethe"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "00  00  1\n\
         01  01  t2 + x\n\
         10  10  t1 + x\n\
         11  11  t1*t2 + t1*x + t2*x + x^2\n"
    );
}

#[test]
fn bethe_single_zero_examples() {
    // one zero at position 1: the vector collapses to a single basis word
    let out = run(&["compute", "bethe", "--N", "3", "--zeros", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "011  -  1\n");

    // one zero at position 2
    let out = run(&["compute", "bethe", "--N", "3", "--zeros", "2"]);
    assert_eq!(stdout(&out), "011  -  1\n101  -  t1 - t2\n");

    // one zero at position 3
    let out = run(&["compute", "bethe", "--N", "3", "--zeros", "3"]);
    assert_eq!(
        stdout(&out),
        "011  -  1\n\
         101  -  t1 - t3\n\
         110  -  t1*t2 - t1*t3 - t2*t3 + t3^2\n"
    );
}

#[test]
fn bethe_staircase_collapses() {
    let out = run(&["compute", "bethe", "--N", "3", "--zeros", "1,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "001  -  1\n");
    let out = run(&["compute", "bethe", "--N", "3"]);
    assert_eq!(stdout(&out), "111  -  1\n");
}

#[test]
fn schubert_two_point_tables() {
    // untwisted chamber
    let out = run(&["compute", "schubert", "--N", "2", "--twist", "e"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "00  00  1\n\
         01  01  1\n\
         01  10  1\n\
         10  01  0\n\
         10  10  t1 - t2\n\
         11  11  1\n"
    );
    // opposite chamber
    let out = run(&["compute", "schubert", "--N", "2", "--twist", "s1"]);
    assert_eq!(
        stdout(&out),
        "00  00  1\n\
         01  01  -t1 + t2\n\
         01  10  0\n\
         10  01  1\n\
         10  10  1\n\
         11  11  1\n"
    );
}

#[test]
fn gamma_n2_both_signs() {
    let out = run(&["compute", "gamma", "--tag", "+1", "--N", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "01  00  t2\n\
         10  00  t1\n\
         11  01  -t1 / (t1-t2)\n\
         11  10  t2 / (t1-t2)\n"
    );
    let out = run(&["compute", "gamma", "--tag", "-1", "--N", "2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "00  01  -t2 / (t1-t2)\n\
         00  10  t1 / (t1-t2)\n\
         01  11  t1\n\
         10  11  t2\n"
    );
}

// ---- compute: usage errors ----

#[test]
fn compute_usage_errors() {
    let cases: &[&[&str]] = &[
        &["compute", "operator", "--N", "3"],                    // missing tag
        &["compute", "operator", "--tag", "C"],                  // missing N
        &["compute", "operator", "--tag", "X", "--N", "3"],      // bad tag
        &["compute", "operator", "--tag", "C", "--N", "3", "--basis", "w"], // bad basis
        &["compute", "operator", "--tag", "C", "--N", "3", "--model", "zzz"], // bad model
        &["compute", "bethe", "--N", "3", "--zeros", "5"],       // zero out of range
        &["compute", "bethe", "--N", "3", "--zeros", "1,1"],     // repeated zero
        &["compute", "bethe", "--N", "9"],                       // over cap
        &["compute", "gamma", "--N", "5", "--tag", "+1"],        // over gamma cap
        &["compute", "schubert", "--N", "2", "--twist", "s5"],   // bad twist index
        &["compute", "schubert", "--N", "2", "--twist", "zz"],   // unparsable twist
        &["compute", "gamma", "--N", "2", "--tag", "q3"],        // bad gamma tag
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 2, "args {args:?}: {}", stderr(&out));
        assert!(stdout(&out).is_empty(), "no stdout on usage error for {args:?}");
    }
}

// ---- formats and determinism ----

#[test]
fn compute_runs_are_byte_identical() {
    let args = ["compute", "schubert", "--N", "3", "--twist", "s1s2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn verify_json_schema() {
    let out = run(&["verify", "--suite", "rll", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let arr = v.as_array().expect("array of reports");
    assert_eq!(arr.len(), 6);
    for r in arr {
        let o = r.as_object().expect("object");
        for key in ["suite", "model", "N", "status", "elapsed_ms", "mismatches"] {
            assert!(o.contains_key(key), "missing {key}");
        }
        assert_eq!(o["status"], "pass");
        assert!(o["mismatches"].as_array().expect("array").is_empty());
    }
}

#[test]
fn perturbed_json_lists_mismatches() {
    let out = run(&["verify", "--suite", "rll", "--perturb", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let r = &v.as_array().expect("array")[0];
    assert_eq!(r["status"], "fail");
    let ms = r["mismatches"].as_array().expect("array");
    assert!(!ms.is_empty());
    for m in ms {
        for key in ["relation", "row", "col", "lhs", "rhs"] {
            assert!(m.as_object().expect("object").contains_key(key), "missing {key}");
        }
    }
}

#[test]
fn verify_csv_layout() {
    let out = run(&["verify", "--suite", "rll", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("suite,model,N,status,relation,row,col,lhs,rhs"));
    assert_eq!(lines.next(), Some("rll,osc,-,pass,,,,,"));
}

#[test]
fn compute_csv_and_json() {
    let out = run(&["compute", "operator", "--tag", "C", "--N", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(
        text,
        "row word,column word,entry text\n\
         00,01,1\n\
         01,11,1\n\
         10,11,t1 + x\n"
    );
    let out = run(&["compute", "operator", "--tag", "C", "--N", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let arr = v.as_array().expect("array");
    assert_eq!(arr.len(), 3);
    assert_eq!(arr[1]["row"], "01");
    assert_eq!(arr[1]["col"], "11");
    assert_eq!(arr[1]["entry"], "1");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("fivevertex-cli-test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("c2.txt");
    let out = run(&[
        "compute", "operator", "--tag", "C", "--N", "2", "--out",
        path.to_str().expect("utf8 path"),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).expect("file written");
    assert_eq!(written, "00  01  1\n01  11  1\n10  11  t1 + x\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["verify", "--help"])), 0);
    assert_eq!(code(&run(&["compute", "--help"])), 0);
    // a genuinely malformed invocation is a usage error
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&[])), 2);
}
