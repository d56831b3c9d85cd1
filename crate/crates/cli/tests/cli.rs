use std::process::{Command, Output};

use korbit::graph::GraphContext;
use korbit::{hasse, Family};
use korbit_cli::document::{Edges, PosetDocument};

fn korbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_korbit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn enumerate_lists_one_param_per_line() {
    let o = korbit(&["enumerate", "--family", "AIII", "--p", "2", "--q", "1"]);
    assert_eq!(code(&o), 0);
    let mut lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    lines.sort();
    assert_eq!(lines, ["++-", "+-+", "+11", "-++", "1+1", "11+"]);
    assert_eq!(stdout(&korbit(&["enumerate", "--family", "CI", "--m", "2"])).lines().count(), 11);
    assert_eq!(stdout(&korbit(&["enumerate", "--family", "AI", "--n", "4"])).lines().count(), 10);
    assert_eq!(stdout(&korbit(&["enumerate", "--family", "AII", "--n", "4"])).lines().count(), 3);
}

#[test]
fn exit_codes() {
    // Unknown subcommand and missing sizes are usage errors.
    assert_eq!(code(&korbit(&["frobnicate"])), 2);
    assert_eq!(code(&korbit(&["enumerate", "--family", "AIII"])), 2);
    assert_eq!(code(&korbit(&["enumerate", "--family", "AII", "--n", "3"])), 2);
    // A malformed parameter.
    assert_eq!(code(&korbit(&["rank", "--family", "AIII", "--param", "1+x1"])), 4);
    // An interval whose ends are incomparable.
    assert_eq!(code(&korbit(&["hasse", "--family", "AI", "--n", "4", "--interval", "2143", "4321"])), 3);
    assert_eq!(code(&korbit(&["hasse", "--family", "AI", "--n", "4", "--interval", "4321", "2143"])), 0);
    // A Richardson pair that is not Grassmannian.
    assert_eq!(code(&korbit(&["richardson", "--param", "--"])), 1);
    assert_eq!(code(&korbit(&["richardson", "--param", "1212"])), 4);
}

#[test]
fn compare_words() {
    let cmp = |x: &str, y: &str| stdout(&korbit(&["compare", "--family", "AIII", "--param", x, y])).trim().to_string();
    assert_eq!(cmp("11+-", "1122"), "less");
    assert_eq!(cmp("1122", "11+-"), "greater");
    assert_eq!(cmp("1221", "1221"), "equal");
    assert_eq!(cmp("++--", "--++"), "incomparable");
}

#[test]
fn hasse_json_round_trips() {
    let o = korbit(&["hasse", "--family", "AIII", "--p", "2", "--q", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: PosetDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.vertices.len(), 21);
    assert_eq!(doc.edges.len(), 38);
    let back = doc.to_poset().unwrap();
    let direct = hasse(&Family::AIII { p: 2, q: 2 }).unwrap();
    assert_eq!(back.vertices.len(), direct.vertices.len());
    for (i, x) in back.vertices.iter().enumerate() {
        let j = direct.index_of(x).unwrap();
        assert_eq!(back.ranks[i], direct.ranks[j]);
        for (k, y) in back.vertices.iter().enumerate() {
            assert_eq!(back.leq(i, k), direct.leq(j, direct.index_of(y).unwrap()), "{x} {y}");
        }
    }
    let covers = |p: &korbit::OrbitPoset| {
        let mut c: Vec<(String, String)> =
            p.covers().iter().map(|&(a, b)| (p.vertices[a].to_string(), p.vertices[b].to_string())).collect();
        c.sort();
        c
    };
    assert_eq!(covers(&back), covers(&direct));
}

#[test]
fn graph_document_keeps_every_cover() {
    let f = Family::CI { m: 2 };
    let ctx = GraphContext::new(&f).unwrap();
    let keep: Vec<usize> = (0..ctx.poset.len()).collect();
    let hasse_doc = PosetDocument::build(&ctx, &keep, Edges::Hasse).unwrap();
    let all_doc = PosetDocument::build(&ctx, &keep, Edges::All).unwrap();
    assert!(all_doc.edges.len() >= hasse_doc.edges.len());
    assert_eq!(hasse_doc.to_poset().unwrap().covers().len(), 16);
    assert_eq!(all_doc.to_poset().unwrap().covers().len(), 16);
}

#[test]
fn dot_output_is_deterministic() {
    let args = ["graph", "--family", "AI", "--n", "4", "--format", "dot"];
    let a = stdout(&korbit(&args));
    let b = stdout(&korbit(&args));
    assert_eq!(a, b);
    assert!(a.starts_with("digraph"));
    assert_eq!(a.matches("[label=").count(), 10);
}

#[test]
fn classify_examples() {
    let verdict = |family: &str, param: &str| -> serde_json::Value {
        let o = korbit(&["classify", "--family", family, "--param", param]);
        assert_eq!(code(&o), 0, "{family} {param}");
        serde_json::from_str(&stdout(&o)).unwrap()
    };
    let v = verdict("AIII", "1++-2-21");
    assert_eq!(v["rationally_smooth"], false);
    assert_eq!(verdict("AI", "21354")["rationally_smooth"], true);
    assert_eq!(verdict("AI", "213465")["rationally_smooth"], false);
    let ci = verdict("CI", "1+-1");
    assert_eq!(ci["rationally_smooth"], true);
    assert_eq!(ci["smooth"], false);
}

#[test]
fn verify_reports_json() {
    let o = korbit(&["verify", "--family", "CII", "--max-size", "6"]);
    assert_eq!(code(&o), 0);
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(reports.iter().any(|r| r["suite"] == "moves-vs-counting" && r["passed"] == true));
    // Known counterexamples in the BDI grid make the run fail.
    assert_eq!(code(&korbit(&["verify", "--family", "BDI", "--max-size", "4"])), 1);
}
