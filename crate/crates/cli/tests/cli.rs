use std::process::{Command, Output};

use qpartition_core::identities::{ids, VerificationReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpartition"))
        .args(args)
        .output()
        .expect("spawn qpartition")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Coefficients printed by `expand` as "q^e c" lines.
fn coeffs(o: &Output) -> Vec<(i64, i64)> {
    stdout(o)
        .lines()
        .map(|l| {
            let (e, c) = l.strip_prefix("q^").unwrap().split_once(' ').unwrap();
            (e.parse().unwrap(), c.parse().unwrap())
        })
        .collect()
}

/// Partitions of `n` into parts at most `max`, largest part first.
fn partitions(n: u64, max: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn verify_single_identity_passes() {
    let o = run(&["verify", "theorem1", "--order", "60", "--xdeg", "12"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("PASS theorem1"));

    let o = run(&["verify", "schur-product", "--order", "200"]);
    assert!(o.status.success());
}

#[test]
fn unknown_identity_lists_valid_ids() {
    let o = run(&["verify", "no-such-id"]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("no-such-id"));
    for id in ids() {
        assert!(err.contains(id), "missing {id} in {err}");
    }
}

#[test]
fn nonpositive_order_is_rejected() {
    assert!(!run(&["verify", "theorem1", "--order", "0"]).status.success());
    assert!(!run(&["expand", "fS", "--order", "0"]).status.success());
}

#[test]
fn list_prints_every_id_in_registry_order() {
    let o = run(&["verify", "--list"]);
    assert!(o.status.success());
    let listed: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(listed, ids());
}

#[test]
fn verify_all_json_is_ordered_and_round_trips() {
    let o = run(&["verify", "all", "--order", "20", "--xdeg", "4", "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let reports: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
    let got: Vec<&str> = reports.iter().map(|r| r.identity_id.as_str()).collect();
    assert_eq!(got, ids());
    assert!(reports.iter().all(|r| r.passed() && r.first_discrepancy.is_none()));
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", text);
}

#[test]
fn expand_schur_generating_function() {
    let o = run(&["expand", "fS", "--order", "6"]);
    assert!(o.status.success());
    assert_eq!(coeffs(&o), vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 2)]);

    assert_eq!(coeffs(&run(&["expand", "fS", "--order", "1"])), vec![(0, 1)]);
}

#[test]
fn expand_r_matches_distinct_odd_parts() {
    let o = run(&["expand", "R", "2", "1", "1", "1", "2", "2", "--order", "30"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let expected: Vec<(i64, i64)> = (0..30u64)
        .map(|n| {
            let c = partitions(n, n)
                .into_iter()
                .filter(|p| p.iter().all(|x| x % 2 == 1) && p.windows(2).all(|w| w[0] > w[1]))
                .count();
            (n as i64, c as i64)
        })
        .collect();
    assert_eq!(coeffs(&o), expected);
}

#[test]
fn expand_json_has_terms() {
    let o = run(&["expand", "fGG", "--order", "8", "--xdeg", "2", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["trunc"], 8);
    // one part: any size n >= 1 counts once
    let ones: Vec<_> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["xpow"] == 1 && t["coeff"] == "1")
        .collect();
    assert_eq!(ones.len(), 7);
}

#[test]
fn enumerate_examples() {
    assert_eq!(stdout(&run(&["enumerate", "S", "5", "--json"])).trim(), "[[5],[4,1]]");
    assert_eq!(stdout(&run(&["enumerate", "GG", "0", "--json"])).trim(), "[[]]");
}

#[test]
fn enumerate_matches_exhaustive_gollnitz_filter() {
    for n in 0..=18 {
        let o = run(&["enumerate", "G", &n.to_string(), "--json"]);
        let got: Vec<Vec<u64>> = serde_json::from_str(&stdout(&o)).unwrap();
        let expected: Vec<Vec<u64>> = partitions(n, n)
            .into_iter()
            .filter(|p| {
                p.windows(2).all(|w| {
                    let odd = w[0] % 2 == 1 || w[1] % 2 == 1;
                    w[0] - w[1] >= 2 && (!odd || w[0] - w[1] > 2)
                })
            })
            .collect();
        assert_eq!(got, expected, "n = {n}");
    }
}

#[test]
fn biject_map_worked_example() {
    let o = run(&["biject", "--map", "30+26+23+18+12+8+4+1", "--d", "3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["image"], serde_json::json!([9, 8, 8, 6, 3, 2, 1, 1]));
}

#[test]
fn biject_presets_pass() {
    for family in ["S", "GG", "G"] {
        let o = run(&["biject", family, "--max-size", "20"]);
        assert!(o.status.success(), "{family}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }
}
