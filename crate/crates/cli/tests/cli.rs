// SPDX-License-Identifier: Apache-2.0

use qfi_cli::{run, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use qfi_core::Envelope;

fn qfi(args: &[&str]) -> Outcome {
    run(std::iter::once("qfi").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Envelope {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = qfi(&full);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    Envelope::from_json(&out.stdout).unwrap()
}

#[test]
fn split_reports() {
    let env = json(&["split", "--d", "5", "--q", "101"]);
    assert_eq!(env.command, "split");
    assert_eq!(env.result["splitting"], "split");
    assert_eq!(env.result["n"], "45");
    assert_eq!(env.result["l"], "20");
    assert_eq!(env.result["form"]["b"], "45");
    assert_eq!(json(&["split", "--d", "5", "--q", "5"]).result["splitting"], "ramified");
    assert_eq!(json(&["split", "--d", "5", "--q", "3"]).result["splitting"], "inert");
    let env = json(&["split", "--d=-23", "--q", "3"]);
    assert_eq!((env.result["n"].as_str(), env.result["l"].as_str()), (Some("1"), Some("8")));
}

#[test]
fn negative_radicands_parse_both_ways() {
    let a = qfi(&["principal", "--d", "-5", "--q", "47"]);
    let b = qfi(&["principal", "--d=-5", "--q=47"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a, b);
    assert!(a.stdout.contains("verdict: not principal"));
}

#[test]
fn principal_text_and_derivation() {
    let out = qfi(&["principal", "--d", "5", "--q", "101", "--emit-derivation"]);
    assert_eq!(out.code, EXIT_OK);
    for line in ["verdict: principal", "generator: (22-4√5)/2", "norm: 101 (verified)", "c = 0, d = 166, a = -8, b = -74", "w = "] {
        assert!(out.stdout.contains(line), "missing {line:?} in\n{}", out.stdout);
    }
    let env = json(&["principal", "--d", "10", "--q", "71", "--emit-derivation"]);
    assert_eq!(env.result["generator"]["element"], "9+√10");
    assert!(env.result["derivation"]["w"].is_string());
}

#[test]
fn represents_reports() {
    let env = json(&["represents", "--form", "8,2,3", "--target", "4"]);
    assert!(env.result["results"][0]["representation"].is_null());
    assert_eq!(env.result["method"], "definite-enumeration");
    let env = json(&["represents", "--form", "20,90,101", "--target", "4"]);
    assert_eq!(env.result["method"], "indefinite-window");
    assert!(env.result["results"][0]["representation"].is_object());
    let env = json(&["represents", "--form", "1,0,1", "--target", "2", "--all-signs"]);
    assert_eq!(env.result["results"][0]["representation"]["x"], "1");
    assert_eq!(env.result["results"][0]["representation"]["y"], "1");
    assert!(env.result["results"][1]["representation"].is_null());
    let env = json(&["represents", "--form", "1,0,-3", "--target", "-2"]);
    assert!(env.result["results"][0]["representation"].is_object());
}

#[test]
fn h1_and_certificate() {
    let env = json(&["h1", "--d", "-163"]);
    assert_eq!(env.result["verdict"], true);
    assert_eq!(env.result["evidence"]["rows"].as_array().unwrap().len(), 40);
    let env = json(&["h1", "--d", "-907"]);
    assert_eq!(env.result["verdict"], false);
    assert_eq!(env.result["evidence"]["value"], "247");
    assert_eq!(env.result["evidence"]["x"], 5);
    let env = json(&["certificate", "--d", "-6"]);
    assert_eq!(env.result["evidence"]["kind"], "non-principal-ideal");
    assert_eq!(env.result["validated"], true);
    let out = qfi(&["certificate", "--d", "-163"]);
    assert!(out.stdout.contains("1601"));
}

#[test]
fn scan_summary_and_determinism() {
    let out = qfi(&["scan", "--min", "1", "--max", "200"]);
    assert!(out.stdout.contains("class number one: -1 -2 -3 -7 -11 -19 -43 -67 -163"));
    let one = qfi(&["scan", "--min", "1", "--max", "2000", "--jobs", "1", "--format", "json"]);
    let four = qfi(&["scan", "--min", "1", "--max", "2000", "--jobs", "4", "--format", "json"]);
    assert_eq!(one.code, EXIT_OK);
    assert_eq!(one.stdout, four.stdout);
    let env = json(&["scan", "--min", "164", "--max", "3000"]);
    assert_eq!(env.result["class_number_one"].as_array().unwrap().len(), 0);
}

#[test]
fn json_is_repeatable() {
    let args = ["principal", "--d", "-1", "--q", "13", "--format", "json"];
    assert_eq!(qfi(&args).stdout, qfi(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(qfi(&["split", "--d", "5", "--q", "2"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["split", "--d", "5", "--q", "9"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["split", "--d", "4", "--q", "3"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["principal", "--d", "5", "--q", "3"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["principal", "--d", "5", "--q", "5"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["represents", "--form", "1,2,1", "--target", "1"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["represents", "--form", "0,2,1", "--target", "1"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["represents", "--form", "1,0,1", "--target", "0"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["h1", "--d", "7"]).code, EXIT_DOMAIN);
    assert_eq!(qfi(&["scan", "--min", "5", "--max", "1"]).code, EXIT_DOMAIN);

    assert_eq!(qfi(&["represents", "--form", "1,1,1", "--target", "1"]).code, EXIT_USAGE);
    assert_eq!(qfi(&["represents", "--form", "1,2", "--target", "1"]).code, EXIT_USAGE);
    assert_eq!(qfi(&["split", "--d", "5"]).code, EXIT_USAGE);
    assert_eq!(qfi(&["split", "--d", "x", "--q", "3"]).code, EXIT_USAGE);
    assert_eq!(qfi(&["scan", "--min", "1", "--max", "5", "--jobs", "0"]).code, EXIT_USAGE);
    assert_eq!(qfi(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(qfi(&["h1", "--d", "-5", "--format", "xml"]).code, EXIT_USAGE);

    let help = qfi(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("principal"));
    let err = qfi(&["split", "--d", "5", "--q", "2"]);
    assert!(err.stdout.is_empty() && err.stderr.starts_with("error:"));
}

#[test]
fn binary_matches_library() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_qfi"))
        .args(["split", "--d", "-23", "--q", "3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), qfi(&["split", "--d", "-23", "--q", "3", "--format", "json"]).stdout);
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_qfi")).args(["split", "--d", "5", "--q", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));
}
