use std::io::Write;
use std::process::{Command, Stdio};

use ramanujan_cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use ramanujan_core::bijection::color_split;
use ramanujan_core::bijection::ColoredTree;
use ramanujan_core::format::{format_colored, format_tree};
use ramanujan_core::{enumerate_rooted, enumerate_unrooted, ClassFilter, RootedTree};

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert_eq!(out.status, EXIT_OK, "args {args:?} stderr {}", out.stderr);
    out.stdout
}

#[test]
fn poly_examples() {
    assert_eq!(ok(&["poly", "--family", "q", "--method", "shor", "--n", "5", "--k", "2"], ""), "45x^2+195x+190\n");
    assert_eq!(
        ok(&["poly", "--family", "psi", "--method", "ramanujan", "--n", "4", "--k", "2"], ""),
        "10x^3-80x^2+200x-154\n"
    );
    assert_eq!(ok(&["poly", "--family", "q", "--method", "zeng-b", "--n", "5", "--k", "3"], ""), "105x+210\n");
    assert_eq!(ok(&["poly", "--family", "f", "--n", "4", "--k", "3"], ""), "15\n");
    assert_eq!(ok(&["poly", "--family", "q", "--n", "3", "--k", "7"], ""), "0\n");
}

#[test]
fn every_method_agrees() {
    for method in ["shor", "shor-alt", "zeng-a", "zeng-b", "from-psi"] {
        assert_eq!(ok(&["poly", "--family", "q", "--method", method, "--n", "4", "--k", "1"], ""), "6x^2+22x+18\n");
    }
}

#[test]
fn lowering_example() {
    assert_eq!(ok(&["bij", "--map", "lower", "--dir", "fwd"], "2 0 4 2 9 4 2 9 6\n"), "2 0 4 6 9 9 2 9 2\n");
    assert_eq!(ok(&["bij", "--map", "lift", "--dir", "fwd"], "2 0 4 6 9 9 2 9 2\n"), "2 0 4 2 9 4 2 9 6\n");
}

#[test]
fn plane_example() {
    assert_eq!(ok(&["bij", "--map", "plane", "--dir", "fwd"], "9 6 7 0 9 4 4 9 6\n"), "1(5(8(9)) 2(6) 3(7 4))\n");
}

#[test]
fn audit_goes_to_stderr() {
    let out = run(&["bij", "--map", "rooted", "--dir", "fwd", "--audit"], "3 1 0\n");
    assert_eq!(out.status, EXIT_OK);
    assert!(out.stderr.starts_with("audit: direction=fwd"), "{}", out.stderr);
    assert!(out.stderr.contains("route=transfer case="));
    let quiet = run(&["bij", "--map", "rooted", "--dir", "fwd"], "3 1 0\n");
    assert!(quiet.stderr.is_empty());
    assert_eq!(quiet.stdout, out.stdout);
}

#[test]
fn enumerate_counts_match_published_values() {
    assert_eq!(ok(&["enumerate", "--n", "5", "--k", "2", "--lambda", "1", "--count"], ""), "29\n");
    assert_eq!(ok(&["enumerate", "--n", "4", "--k", "3", "--lambda", "3", "--count"], ""), "3\n");
    assert_eq!(ok(&["enumerate", "--n", "4", "--k", "1", "--deg1", ">0", "--count"], ""), "16\n");
    assert_eq!(ok(&["enumerate", "--n", "5", "--unrooted", "--count"], ""), "125\n");
    let listed = ok(&["enumerate", "--n", "4", "--k", "2", "--degmax", ">=1", "--list"], "");
    assert_eq!(listed.lines().count(), 16);
}

#[test]
fn tables() {
    let q = ok(&["table", "--which", "q", "--max", "5"], "");
    assert!(q.contains("Q n=5 k=3: 105x+210\n"));
    let lambda = ok(&["table", "--which", "lambda", "--max", "5"], "");
    assert!(lambda.contains("R_{n,k}[lambda=2]"));
    assert!(lambda.contains("   3                       4      37\n"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["tables", "recurrences", "identities", "bijections", "conjecture", "genfun"] {
        let out = run(&["verify", "--suite", suite, "--nmax", "5"], "");
        assert_eq!(out.status, EXIT_OK, "{suite}: {}", out.stdout);
        assert!(out.stdout.contains(&format!("suite {suite}:")));
    }
}

#[test]
fn json_reports() {
    let out = ok(&["verify", "--suite", "tables", "--json"], "");
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 71);
    assert!(records.iter().take(70).all(|r| r["pass"] == true && r["suite"] == "tables"));
    assert_eq!(records[70]["summary"], true);
}

#[test]
fn genfun_command() {
    assert_eq!(ok(&["genfun", "--r", "4", "--x", "-2", "--order", "10"], ""), "genfun r=4 x=-2 M=10: PASS\n");
}

#[test]
fn usage_errors_are_distinct_from_verification_failures() {
    assert_ne!(EXIT_USAGE, EXIT_VERIFY_FAILED);
    for args in [
        vec!["poly", "--family", "q", "--n", "3", "--k", "1", "--bogus"],
        vec!["poly", "--family", "q", "--method", "nope", "--n", "3", "--k", "1"],
        vec!["verify", "--suite", "nope"],
        vec!["enumerate", "--n", "4"],
        vec!["enumerate", "--n", "4", "--deg1", "lots", "--count"],
        vec!["bij", "--map", "lower", "--dir", "sideways"],
    ] {
        let out = run(&args, "");
        assert_eq!(out.status, EXIT_USAGE, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    // malformed or out-of-domain input
    assert_eq!(run(&["bij", "--map", "rooted", "--dir", "fwd"], "1 2 x\n").status, EXIT_USAGE);
    assert_eq!(run(&["bij", "--map", "rooted", "--dir", "fwd"], "2 3 0\n").status, EXIT_USAGE);
    assert_eq!(run(&["bij", "--map", "rooted", "--dir", "fwd"], "").status, EXIT_USAGE);
    assert_eq!(run(&["--help"], "").status, EXIT_OK);
}

fn listing(trees: impl IntoIterator<Item = RootedTree>) -> String {
    trees.into_iter().map(|t| format_tree(&t) + "\n").collect()
}

fn deg(t: &RootedTree, v: u32) -> usize {
    t.degree(v).unwrap()
}

/// `bij --dir fwd` followed by `bij --dir inv` reproduces every domain listing byte-for-byte.
#[test]
fn forward_then_inverse_is_the_identity_on_every_domain() {
    type Domain = fn(&RootedTree) -> bool;
    let rooted: [(&str, Domain); 5] = [
        ("lower", |t| t.proper_on_max_path() >= 1),
        ("lift", |t| deg(t, t.max_label()) > 0),
        ("lemma36", |t| deg(t, t.min_label()) == 1),
        ("rooted", |t| deg(t, t.min_label()) > 0),
        ("cor22", |_| true),
    ];
    for n in 1..=6 {
        for (map, domain) in rooted {
            let input = listing(enumerate_rooted(n, &ClassFilter::new()).filter(domain));
            if input.is_empty() {
                continue;
            }
            let image = ok(&["bij", "--map", map, "--dir", "fwd"], &input);
            assert_eq!(ok(&["bij", "--map", map, "--dir", "inv"], &image), input, "map {map} n={n}");
        }
        let input = listing(enumerate_unrooted(n).filter(|t| n >= 2 && deg(t, 2) > 0));
        if !input.is_empty() {
            let image = ok(&["bij", "--map", "unrooted", "--dir", "fwd"], &input);
            assert_eq!(ok(&["bij", "--map", "unrooted", "--dir", "inv"], &image), input, "unrooted n={n}");
        }
        let input = listing(enumerate_rooted(n, &ClassFilter::new().improper(n - 1)));
        let image = ok(&["bij", "--map", "plane", "--dir", "fwd"], &input);
        assert_eq!(ok(&["bij", "--map", "plane", "--dir", "inv"], &image), input, "plane n={n}");

        let mut colored = String::new();
        for t in enumerate_rooted(n, &ClassFilter::new()) {
            let kids = t.children(1).unwrap();
            for mask in 0..1u32 << kids.len() {
                let black: Vec<u32> =
                    kids.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &c)| c).collect();
                colored.push_str(&format_colored(&t, &black));
                colored.push('\n');
            }
        }
        let image = ok(&["bij", "--map", "color", "--dir", "fwd"], &colored);
        assert_eq!(ok(&["bij", "--map", "color", "--dir", "inv"], &image), colored, "color n={n}");
    }
}

#[test]
fn color_example() {
    let t = RootedTree::from_parent_array(&[0, 1]).unwrap();
    let expected = format_tree(&color_split(&ColoredTree::new(t, [2]).unwrap()).unwrap());
    assert_eq!(ok(&["bij", "--map", "color", "--dir", "fwd"], "0 1\nblack: 2\n"), expected + "\n");
}

/// The binary behaves like `run`, including reading stdin and the exit status.
#[test]
fn binary_pipeline() {
    let exe = env!("CARGO_BIN_EXE_ramanujan");
    let mut child = Command::new(exe)
        .args(["bij", "--map", "lower", "--dir", "fwd"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"2 0 4 2 9 4 2 9 6\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2 0 4 6 9 9 2 9 2\n");

    let status = Command::new(exe).args(["verify", "--suite", "nope"]).output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_USAGE));
}
