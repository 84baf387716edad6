//! End-to-end run of the whole law catalog at the default corpus scale, the
//! way `sortforge check --all` runs it, plus replay of every reported
//! witness. Witness replay is the contract that makes reports trustworthy:
//! parsing the witness back and re-executing the operation must reproduce
//! the recorded violation.

use sortforge_core::corpus::CorpusConfig;
use sortforge_core::hsort::{h2list, ist_h};
use sortforge_core::invariants::{all_list, is_bst, is_heap};
use sortforge_core::laws::{law_ids, run_checks};
use sortforge_core::ordered::insert;
use sortforge_core::qsort::{build_bst, bst2list, ist_bst, qaux};
use sortforge_core::text::{parse_list, parse_node_tree};
use sortforge_core::trees::{unfold_node_tree, Key, NodeStep};
use sortforge_core::CheckStatus;
use std::time::Instant;

/// Extract the value of `key=` from a witness laid out as space-separated
/// `key=value` fields. Values may contain spaces (tree renderings do), so a
/// value ends only where the next `ident=` field begins.
fn field<'a>(witness: &'a str, key: &str) -> &'a str {
    let pat = format!("{key}=");
    let start = if witness.starts_with(&pat) {
        0
    } else {
        witness
            .find(&format!(" {pat}"))
            .map(|i| i + 1)
            .unwrap_or_else(|| panic!("no field `{key}` in witness `{witness}`"))
    };
    let rest = &witness[start + pat.len()..];
    let bytes = rest.as_bytes();
    for i in 0..rest.len() {
        if bytes[i] == b' ' {
            let mut j = i + 1;
            while j < rest.len()
                && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'-' || bytes[j] == b'_')
            {
                j += 1;
            }
            if j > i + 1 && j < rest.len() && bytes[j] == b'=' {
                return &rest[..i];
            }
        }
    }
    rest
}

#[test]
fn full_catalog_passes_at_default_scale_within_budget() {
    let start = Instant::now();
    let config = CorpusConfig::default();
    let reports = run_checks(&config, None).expect("default config is valid");
    let elapsed = start.elapsed();

    assert_eq!(reports.len(), law_ids().len());
    for r in &reports {
        println!("{}", r.text_line());
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.ok())
        .map(|r| r.law_id.as_str())
        .collect();
    assert!(failed.is_empty(), "laws failed: {failed:?}");
    assert!(
        reports.iter().all(|r| r.cases_run > 0),
        "a law ran zero cases"
    );

    // The recorded negative results must come back confirmed, with witnesses.
    let expected_fail = [
        "tl2-universal:heap",
        "tl2-universal:bst",
        "build-equiv-tie-left:qsort",
        "app-props-2:raw",
        "app-props-5:as-printed",
    ];
    for id in expected_fail {
        let r = reports.iter().find(|r| r.law_id == id).unwrap();
        assert_eq!(r.status, CheckStatus::ExpectedFailConfirmed, "{id}");
        assert!(r.witness.is_some(), "{id} has no witness");
    }
    for r in &reports {
        if !expected_fail.contains(&r.law_id.as_str()) {
            assert_eq!(r.status, CheckStatus::Pass, "{}", r.law_id);
        }
    }

    // Corpus sizes the statements promise: all 87,381 lists of length <= 8
    // over four keys plus 10,000 random ones.
    let isort_spec = reports.iter().find(|r| r.law_id == "isort-spec").unwrap();
    assert_eq!(isort_spec.cases_run, 87_381 + 10_000);
    for id in ["sort-equiv:msort", "sort-equiv:hsort", "sort-equiv:qsort"] {
        let r = reports.iter().find(|r| r.law_id == id).unwrap();
        assert_eq!(r.cases_run, 87_381 + 10_000, "{id}");
    }

    // Replay every witness that came back.
    for r in &reports {
        let Some(w) = &r.witness else { continue };
        match r.law_id.as_str() {
            "tl2-universal:heap" => {
                let x: Key = field(w, "x").parse().unwrap();
                let c = parse_node_tree(field(w, "c")).unwrap();
                assert!(!is_heap(&c), "heap witness satisfies the invariant: {w}");
                assert_ne!(h2list(&ist_h(x, c.clone())), insert(x, &h2list(&c)), "{w}");
            }
            "tl2-universal:bst" => {
                let x: Key = field(w, "x").parse().unwrap();
                let c = parse_node_tree(field(w, "c")).unwrap();
                assert!(!is_bst(&c), "bst witness satisfies the invariant: {w}");
                assert_ne!(
                    bst2list(&ist_bst(x, c.clone())),
                    insert(x, &bst2list(&c)),
                    "{w}"
                );
            }
            "build-equiv-tie-left:qsort" => {
                let l = parse_list(field(w, "l")).unwrap();
                let tie_left = |seed: Vec<Key>| match seed.split_first() {
                    None => NodeStep::Stop,
                    Some((&x, rest)) => {
                        let (left, right) = qaux(x, rest);
                        NodeStep::Split { key: x, left, right }
                    }
                };
                let unfolded = unfold_node_tree(tie_left, l.clone()).unwrap();
                assert_ne!(unfolded, build_bst(&l), "{w}");
            }
            "app-props-2:raw" => {
                let l1 = parse_list(field(w, "l1")).unwrap();
                let l2 = parse_list(field(w, "l2")).unwrap();
                let x: Key = field(w, "x").parse().unwrap();
                assert!(all_list(|e| e <= x, &l1), "guard must hold: {w}");
                let mut whole = l1.clone();
                whole.extend_from_slice(&l2);
                let mut rhs = l1.clone();
                rhs.extend_from_slice(&insert(x, &l2));
                assert_ne!(insert(x, &whole), rhs, "{w}");
            }
            "app-props-5:as-printed" => {
                let l1 = parse_list(field(w, "l1")).unwrap();
                let x: Key = field(w, "x").parse().unwrap();
                assert!(all_list(|e| e < x, &l1), "guard must hold: {w}");
                let mut cons = vec![x];
                cons.extend_from_slice(&l1);
                assert_ne!(insert(x, &l1), cons, "{w}");
            }
            other => panic!("unexpected witness from {other}: {w}"),
        }
    }

    assert!(
        elapsed.as_secs() < 60,
        "default suite took {elapsed:.1?}, budget is 60s"
    );
}

#[test]
fn catalog_is_stable_under_reruns_and_seed_changes_only_move_random_cases() {
    let quick = CorpusConfig {
        max_len: 4,
        random_cases: 200,
        max_random_len: 32,
        ..CorpusConfig::default()
    };
    let sel: Vec<String> = ["isort-spec", "build-equiv:qsort", "tl2-universal:heap"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let a = run_checks(&quick, Some(&sel)).unwrap();
    let b = run_checks(&quick, Some(&sel)).unwrap();
    assert_eq!(a.len(), b.len());
    for (ra, rb) in a.iter().zip(&b) {
        assert_eq!(ra.law_id, rb.law_id);
        assert_eq!(ra.status, rb.status);
        assert_eq!(ra.cases_run, rb.cases_run);
        assert_eq!(ra.witness, rb.witness);
    }

    // A different seed keeps every verdict; only random corpora move.
    let other = run_checks(&CorpusConfig { seed: 99, ..quick }, Some(&sel)).unwrap();
    for (ra, ro) in a.iter().zip(&other) {
        assert_eq!(ra.status, ro.status, "{}", ra.law_id);
    }
    // The fixed-size corpus behind tl2 keeps its witness verbatim.
    let heap_a = a.iter().find(|r| r.law_id == "tl2-universal:heap").unwrap();
    let heap_o = other.iter().find(|r| r.law_id == "tl2-universal:heap").unwrap();
    assert_eq!(heap_a.witness, heap_o.witness);
}
