//! End-to-end tests of the `pebble` binary: argument handling, piping,
//! output formats, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use num::BigRational;
use pebbling::certificate::Strategy;
use pebbling::families::{self, SquareKind};
use pebbling::io::{export_graph, Format};

fn pebble(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pebble"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn pebble_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pebble"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn family_builds_named_graphs() {
    let out = pebble(&["family", "cycle", "5"]);
    assert_eq!(code_of(&out), 0);
    let g: pebbling::Graph = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!((g.order(), g.size()), (5, 5));

    let out = pebble(&["family", "sqchain", "3", "--kind", "ortho"]);
    let g: pebbling::Graph = serde_json::from_str(&stdout_of(&out)).unwrap();
    let expected = families::square_chain(3, SquareKind::Ortho, false, false).unwrap();
    assert_eq!(g.edges(), expected.edges());

    let out = pebble(&["family", "friendship", "2", "4"]);
    let g: pebbling::Graph = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(g.order(), 7);

    let out = pebble(&["family", "cycle", "4", "--format", "dot"]);
    assert!(stdout_of(&out).starts_with("graph pebbling {"));
}

#[test]
fn graphs_pipe_between_commands() {
    // The round trip: build | compute equals computing on the library graph.
    let exported = stdout_of(&pebble(&["family", "qnm", "3", "3"]));
    let out = pebble_with_stdin(&["pi", "-", "--json"], &exported);
    assert_eq!(code_of(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["results"][0]["value"], 14);
    assert_eq!(report["results"][0]["exhaustive"], true);
    assert_eq!(report["budget"], 10_000_000);

    // Identical runs differ only in the timing field.
    let again = pebble_with_stdin(&["pi", "-", "--json"], &exported);
    let mut a: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&stdout_of(&again)).unwrap();
    a["elapsed_ms"] = 0.into();
    b["elapsed_ms"] = 0.into();
    assert_eq!(a, b);
}

#[test]
fn rooted_and_repeated_demands() {
    let c5 = export_graph(&families::cycle(5).unwrap(), Format::Json);
    let out = pebble_with_stdin(&["pi", "-", "--t", "2"], &c5);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("pi_2 = 9"));

    // Roots resolve by label as well as by id.
    let f = export_graph(&families::friendship(3, 4).unwrap(), Format::Json);
    let by_label = pebble_with_stdin(&["pi", "-", "--root", "hub", "--json"], &f);
    let by_id = pebble_with_stdin(&["pi", "-", "--root", "0", "--json"], &f);
    let a: serde_json::Value = serde_json::from_str(&stdout_of(&by_label)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout_of(&by_id)).unwrap();
    assert_eq!(a["results"][0]["value"], 10);
    assert_eq!(a["results"][0]["value"], b["results"][0]["value"]);
}

#[test]
fn optimal_values_with_and_without_caps() {
    let f24 = export_graph(&families::friendship(2, 4).unwrap(), Format::Json);
    let out = pebble_with_stdin(&["opt", "-", "--cap", "2"], &f24);
    assert!(stdout_of(&out).contains("pi_star_2 = 4"));

    let c4 = export_graph(&families::cycle(4).unwrap(), Format::Json);
    let out = pebble_with_stdin(&["opt", "-", "--json"], &c4);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["results"][0]["quantity"], "pi_star");
    assert_eq!(report["results"][0]["value"], 3);
}

#[test]
fn certificates_and_their_exit_codes() {
    // Default strategies settle the 2-square chain exactly.
    let q2 = export_graph(
        &families::square_chain(2, SquareKind::Para, false, false).unwrap(),
        Format::Json,
    );
    let out = pebble_with_stdin(&["certify", "-", "--root", "0"], &q2);
    assert_eq!(code_of(&out), 0);
    let cert: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(cert["upper"], 16);
    assert_eq!(cert["lower"], 16);
    assert_eq!(cert["verdict"], "exact");
    assert!(stderr_of(&out).contains("budget: 10000000"));

    // Built-in recognition picks the ortho root and strategies.
    let o3 = export_graph(
        &families::square_chain(3, SquareKind::Ortho, false, false).unwrap(),
        Format::Json,
    );
    let out = pebble_with_stdin(&["certify", "-", "--family-default"], &o3);
    assert_eq!(code_of(&out), 0);
    let cert: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(cert["root"], 3);
    assert_eq!(cert["upper"], 34);
    assert_eq!(cert["lp_optimum"], "33");

    // Recognition refuses graphs that are not built-in chains.
    let c5 = export_graph(&families::cycle(5).unwrap(), Format::Json);
    let out = pebble_with_stdin(&["certify", "-", "--family-default"], &c5);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn invalid_strategies_exit_2_with_a_reason() {
    let p4 = families::path(4).unwrap();
    let mut bad = Strategy::new(4, 0).unwrap();
    let one = BigRational::from_integer(1.into());
    bad.attach(1, 0, one.clone()).unwrap();
    bad.attach(2, 1, one).unwrap(); // parent weight 1 < 2*1: invalid
    let file = std::env::temp_dir().join("pebble_bad_strategies.json");
    std::fs::write(&file, serde_json::to_string(&vec![bad]).unwrap()).unwrap();

    let graph = export_graph(&p4, Format::Json);
    let out = pebble_with_stdin(
        &["certify", "-", "--root", "0", "--strategies", file.to_str().unwrap()],
        &graph,
    );
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("invalid strategy"));
    std::fs::remove_file(&file).ok();
}

#[test]
fn exhausted_budgets_exit_3_but_still_bracket() {
    let q33 = export_graph(&families::qnm(3, 3).unwrap(), Format::Json);
    let out = pebble_with_stdin(&["pi", "-", "--budget", "40"], &q33);
    assert_eq!(code_of(&out), 3);
    let text = stdout_of(&out);
    assert!(text.contains("pi_lower"));
    assert!(text.contains("pi_upper"));
    assert!(stderr_of(&out).contains("budget exhausted"));

    // The bracket is honest: lower <= true value 14 <= upper.
    let json = pebble_with_stdin(&["pi", "-", "--budget", "40", "--json"], &q33);
    assert_eq!(code_of(&json), 3);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    let lower = report["results"][0]["value"].as_u64().unwrap();
    let upper = report["results"][1]["value"].as_u64().unwrap();
    assert!(lower <= 14 && 14 <= upper);
}

#[test]
fn reproduce_emits_the_fixed_csv() {
    let out = pebble(&["reproduce", "--section", "4"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "section,family,params,quantity,formula,computed,method,agree"
    );
    for line in lines {
        assert_eq!(line.split(',').count(), 8, "bad row: {line}");
        assert!(line.ends_with(",true"), "row disagrees: {line}");
        assert!(line.starts_with("4,"));
    }
    assert!(stderr_of(&out).contains("budget: 10000000"));

    let out = pebble(&["reproduce", "--section", "4", "--json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(rows.as_array().unwrap().len() >= 8);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["family", "nosuch", "3"][..],
        &["family", "cycle", "5", "--pendant"][..],
        &["family", "cycle"][..],
        &["family", "cycle", "five"][..],
        &["reproduce", "--section", "9"][..],
        &["pi", "/nonexistent/graph.json"][..],
    ] {
        let out = pebble(args);
        assert_eq!(code_of(&out), 2, "args {args:?} should exit 2");
        assert!(!stderr_of(&out).is_empty());
    }

    // Unparsable graphs are validation failures too.
    let out = pebble_with_stdin(&["pi", "-"], "this is not a graph");
    assert_eq!(code_of(&out), 2);
}
