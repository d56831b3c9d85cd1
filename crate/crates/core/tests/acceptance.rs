//! One PASS/FAIL line per acceptance criterion. Criteria listed in
//! `EXPECTED_FAIL` fail for reasons analysed in the project notes; the test
//! asserts every outcome against that table so any change in status is
//! caught.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use common::{fixture_covers, fixture_vertices};
use korbit::graph::{AiEdgeRule, GraphContext};
use korbit::moves::successors;
use korbit::oracle::{self, Coxeter};
use korbit::order::{bruhat_leq_a, bruhat_leq_bc, bruhat_leq_d};
use korbit::richardson::{u_listing, v_listing};
use korbit::singularity::{avoidance_sense_report, classify};
use korbit::verify::{verify_only, Suite, SuiteReport};
use korbit::{enumerate, hasse, validate_family, Clan, Family, FamilyTag, Param, Perm, SignedPerm};

const EXPECTED_FAIL: [u8; 5] = [3, 4, 6, 8, 9];

/// Sizes of the common grid: AIII p+q <= 6, AI n <= 6, AII n <= 8, clan
/// length <= 8 for the other clan families.
const GRID: [(FamilyTag, usize); 7] = [
    (FamilyTag::AIII, 6),
    (FamilyTag::AI, 6),
    (FamilyTag::AII, 8),
    (FamilyTag::CI, 8),
    (FamilyTag::CII, 8),
    (FamilyTag::BDI, 8),
    (FamilyTag::DIII, 8),
];

type Criterion = (u8, Duration, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Outcome {
        Outcome { passed, detail: detail.into() }
    }
}

fn timed(limit: Duration, body: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = body();
    let elapsed = start.elapsed();
    if elapsed > limit {
        out.passed = false;
        out.detail += &format!("; over time limit {limit:?}");
    }
    (out, elapsed)
}

fn run_suites(grid: &[(FamilyTag, usize)], suites: &[Suite]) -> Vec<SuiteReport> {
    grid.iter().flat_map(|&(tag, max)| verify_only(tag, max, suites).unwrap()).collect()
}

/// Passes when every gating report passed; the detail names the failures.
fn summarize(reports: &[SuiteReport]) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| r.gating && !r.passed)
        .map(|r| format!("{} {} x{} e.g. {}", r.family, r.suite, r.failures, r.counterexample.as_deref().unwrap_or("?")))
        .collect();
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    if failed.is_empty() {
        Outcome::new(true, format!("{checked} checks"))
    } else {
        Outcome::new(false, format!("{checked} checks; {}", failed.join(" | ")))
    }
}

fn listed(f: &Family) -> BTreeSet<String> {
    enumerate(f).iter().map(Param::to_string).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    let lists = [
        (Family::AIII { p: 2, q: 1 }, set(&["1+1", "+11", "11+", "++-", "+-+", "-++"])),
        (Family::CI { m: 2 }, set(&["++--", "+-+-", "-+-+", "--++", "1122", "1212", "1221", "1+-1", "1-+1", "+11-", "-11+"])),
        (Family::CII { p: 1, q: 1 }, set(&["1212", "1122", "+--+", "-++-"])),
    ];
    for (f, want) in lists {
        if listed(&f) != want {
            bad.push(format!("{f} list"));
        }
    }
    for (f, n) in [(Family::AI { n: 4 }, 10), (Family::AII { n: 4 }, 3)] {
        if enumerate(&f).len() != n {
            bad.push(format!("{f} count {}", enumerate(&f).len()));
        }
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { "5 families exact".into() } else { bad.join(", ") })
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for (f, fixture) in [
        (Family::AIII { p: 2, q: 2 }, "hasse_aiii_2_2.txt"),
        (Family::AI { n: 4 }, "hasse_ai_4.txt"),
        (Family::CI { m: 2 }, "hasse_ci_2.txt"),
    ] {
        let want = fixture_covers(fixture);
        let p = hasse(&f).unwrap();
        let vertices: BTreeSet<String> = p.vertices.iter().map(Param::to_string).collect();
        let covers: BTreeSet<(String, String)> =
            p.covers().iter().map(|&(a, b)| (p.vertices[a].to_string(), p.vertices[b].to_string())).collect();
        if vertices != fixture_vertices(&want) || covers != want {
            bad.push(f.to_string());
        }
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { "3 diagrams identical".into() } else { bad.join(", ") })
}

fn criterion_3() -> Outcome {
    summarize(&run_suites(&GRID, &[Suite::RankHeight, Suite::OrderAxioms]))
}

fn criterion_4() -> Outcome {
    let reports = run_suites(&GRID, &[Suite::MovesVsCounting, Suite::DescentOracle, Suite::ReverseBruhat]);
    let mut out = summarize(&reports);
    let readings =
        reports.iter().filter(|r| r.suite == "moves-vs-counting").filter_map(|r| r.notes.first().map(|n| format!("{} {n}", r.family)));
    let readings: Vec<String> = readings.collect();
    out.detail += &format!("; {}", readings.join("; "));
    out
}

fn criterion_5() -> Outcome {
    summarize(&run_suites(&GRID, &[Suite::BrionLowerBound]))
}

fn criterion_6() -> Outcome {
    let part = |tag, max| {
        let r = summarize(&run_suites(&[(tag, max)], &[Suite::Classifier]));
        (r.passed, format!("{tag}: {}", if r.passed { "ok".into() } else { r.detail }))
    };
    let (a, da) = part(FamilyTag::AIII, 6);
    let (b, db) = part(FamilyTag::AII, 8);
    let (c, dc) = part(FamilyTag::AI, 6);
    // The literal AI edge rule, reported alongside the adopted one.
    let mut literal = 0;
    for n in 1..=6 {
        let f = Family::AI { n };
        let ctx = GraphContext::with_rule(&f, AiEdgeRule::Literal).unwrap();
        for d in 0..ctx.poset.len() {
            let brion = ctx.brion_excess(d).unwrap().is_empty();
            if classify(&ctx.poset.vertices[d], &f).unwrap().rationally_smooth != brion {
                literal += 1;
            }
        }
    }
    Outcome::new(a && b && c, format!("6a {da}; 6b {db}; 6c {dc}; literal AI edge rule: {literal} discrepancies"))
}

fn clan(s: &str) -> Clan {
    s.parse().unwrap()
}

fn moves_to(from: &str, to: &str, f: Family) -> bool {
    let (x, target) = (f.parse_param(from).unwrap(), f.parse_param(to).unwrap());
    successors(&x, &f).unwrap().iter().any(|(_, y)| *y == target)
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let f = Family::AIII { p: 4, q: 4 };
    let ctx = GraphContext::new(&f).unwrap();
    let d = ctx.poset.index_of(&f.parse_param("1++-2-21").unwrap()).unwrap();
    let witnesses: Vec<String> = ctx.brion_excess(d).unwrap().iter().map(|&(c, _)| ctx.poset.vertices[c].to_string()).collect();
    if !witnesses.contains(&"+++---+-".to_string()) || classify(&ctx.poset.vertices[d], &f).unwrap().rationally_smooth {
        bad.push(format!("1++-2-21 witnesses {witnesses:?}"));
    }
    let ai = |s: &str| {
        let f = Family::AI { n: s.len() };
        classify(&f.parse_param(s).unwrap(), &f).unwrap().rationally_smooth
    };
    if !ai("21354") || ai("213465") {
        bad.push("AI pins".into());
    }
    let c = clan("12+-12");
    if v_listing(&c).to_string() != "123456" || u_listing(&c).to_string() != "356124" {
        bad.push(format!("12+-12 gives v={} u={}", v_listing(&c), u_listing(&c)));
    }
    let diii = Family::DIII { n: 4 };
    if !validate_family(&clan("12++--12"), &diii).unwrap() || validate_family(&clan("12+-+-12"), &diii).unwrap() {
        bad.push("DIII validity".into());
    }
    for (from, to, f) in [
        ("1-+12+-2", "13312442", Family::CII { p: 2, q: 2 }),
        ("1+-1", "1221", Family::CI { m: 2 }),
        ("11223344", "12123434", Family::CII { p: 2, q: 2 }),
    ] {
        if !moves_to(from, to, f) {
            bad.push(format!("move {from} -> {to}"));
        }
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { "all pins hold".into() } else { bad.join(", ") })
}

fn signed(v: &[i64]) -> SignedPerm {
    SignedPerm::new(v.to_vec()).unwrap()
}

fn perm(v: &[i64]) -> Perm {
    Perm::new(v.iter().map(|&x| x as usize).collect()).unwrap()
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let (a, b) = (perm(&[2, 3, 1, 4]), perm(&[4, 1, 2, 3]));
    if bruhat_leq_a(&a, &b).unwrap() || bruhat_leq_a(&b, &a).unwrap() {
        bad.push("2314 vs 4123 comparable".into());
    }
    let (v, w) = ([-6, -5, -4, -1, 2, -3], [-4, 6, 3, 2, 5, -1]);
    let stated = bruhat_leq_bc(&signed(&v), &signed(&w)).unwrap();
    let reverse = bruhat_leq_bc(&signed(&w), &signed(&v)).unwrap();
    let (o_stated, o_reverse) = (oracle::leq_subword(&v, &w, Coxeter::B).unwrap(), oracle::leq_subword(&w, &v, Coxeter::B).unwrap());
    if !stated || stated != o_stated {
        bad.push(format!("BC pair v<=w: comparator {stated} oracle {o_stated}; w<=v: comparator {reverse} oracle {o_reverse}"));
    }
    let (x, y) = ([2, 3, 1], [3, -2, -1]);
    let d_pair = [bruhat_leq_d(&signed(&x), &signed(&y)).unwrap(), bruhat_leq_d(&signed(&y), &signed(&x)).unwrap()];
    let d_oracle = [oracle::leq_subword(&x, &y, Coxeter::D).unwrap(), oracle::leq_subword(&y, &x, Coxeter::D).unwrap()];
    if d_pair != [false, false] || d_pair != d_oracle {
        bad.push(format!("D3 pair {d_pair:?} oracle {d_oracle:?}"));
    }
    let mut mismatches = 0;
    let mut pairs = 0;
    for (kind, sizes) in [(Coxeter::A, 1..=4), (Coxeter::B, 1..=4), (Coxeter::D, 2..=4)] {
        for n in sizes {
            let el = oracle::elements(n, kind);
            for p in &el {
                let lower = oracle::lower_set(p, kind);
                for q in &el {
                    let fast = match kind {
                        Coxeter::A => bruhat_leq_a(&perm(q), &perm(p)).unwrap(),
                        Coxeter::B => bruhat_leq_bc(&signed(q), &signed(p)).unwrap(),
                        Coxeter::D => bruhat_leq_d(&signed(q), &signed(p)).unwrap(),
                    };
                    pairs += 1;
                    if fast != lower.contains(q) {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    if mismatches > 0 {
        bad.push(format!("{mismatches} comparator/oracle mismatches"));
    }
    let head = format!("{pairs} pairs against the reduced-word oracle");
    Outcome::new(bad.is_empty(), if bad.is_empty() { head } else { format!("{head}; {}", bad.join(", ")) })
}

fn criterion_9() -> Outcome {
    let reports = run_suites(&[(FamilyTag::AIII, 7)], &[Suite::Richardson]);
    summarize(&reports)
}

fn criterion_10() -> Outcome {
    let report = || -> Vec<String> {
        let fams = (1..=7).map(|n| Family::AI { n }).chain([2, 4, 6, 8].map(|n| Family::AII { n }));
        fams.flat_map(|f| avoidance_sense_report(&f).unwrap().into_iter().map(move |d| format!("{f} {}", d.involution))).collect()
    };
    let first = report();
    let second = report();
    Outcome::new(first == second, format!("{} discrepancies, identical on rerun: {}", first.len(), first == second))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, Duration::from_secs(1), criterion_1),
        (2, Duration::from_secs(1), criterion_2),
        (3, Duration::from_secs(60), criterion_3),
        (4, Duration::from_secs(120), criterion_4),
        (5, Duration::from_secs(120), criterion_5),
        (6, Duration::from_secs(300), criterion_6),
        (7, Duration::from_secs(1), criterion_7),
        (8, Duration::from_secs(10), criterion_8),
        (9, Duration::from_secs(30), criterion_9),
        (10, Duration::from_secs(60), criterion_10),
    ];
    let mut surprises = Vec::new();
    for (id, limit, body) in criteria {
        let (out, elapsed) = timed(limit, body);
        let status = if out.passed { "PASS" } else { "FAIL" };
        // Written to the raw handle so the line survives libtest's output capture.
        let line = format!("criterion {id}: {status} ({}; {elapsed:.2?}, limit {limit:?})\n", out.detail);
        let _ = std::io::stderr().write_all(line.as_bytes());
        if out.passed == EXPECTED_FAIL.contains(&id) {
            surprises.push(id);
        }
    }
    assert!(surprises.is_empty(), "criteria with unexpected status: {surprises:?}");
}
