mod common;

use std::fs;

use central_cli::exit;
use central_cli::oeis::{cache_key, lookup, query_url, Cache, Source};
use central_cli::OeisMode;
use central_core::IntSequence;
use common::{central, fixtures, Canned, NoNetwork, Unreachable};
use serde_json::Value;

fn fixture_cache() -> Cache {
    Cache::new(fixtures())
}

#[test]
fn fixtures_are_keyed_by_query_hash() {
    for terms in [vec![1, 1, 2, 5, 14, 42], vec![1, 3, 12, 51, 222]] {
        let url = query_url(&IntSequence::from_i64s(terms));
        assert!(
            fixtures()
                .join(format!("{}.json", cache_key(&url)))
                .is_file(),
            "{url}"
        );
    }
}

#[test]
fn catalan_prefix_is_identified_from_cache() {
    let r = lookup(
        &IntSequence::from_i64s([1, 1, 2, 5, 14, 42]),
        OeisMode::Offline,
        &fixture_cache(),
        &mut NoNetwork,
    );
    assert_eq!(r.source, Source::Cache);
    assert!(r.matches.iter().any(|m| m.a_number == "A000108"));
}

#[test]
fn image_of_linear_ratio_case_is_identified() {
    let r = lookup(
        &IntSequence::from_i64s([1, 3, 12, 51, 222]),
        OeisMode::Offline,
        &fixture_cache(),
        &mut NoNetwork,
    );
    assert!(r.matches.iter().any(|m| m.a_number == "A007854"));
}

#[test]
fn empty_cache_offline_is_unidentified() {
    let dir = tempfile::tempdir().unwrap();
    let r = lookup(
        &IntSequence::from_i64s([1, 1, 2, 5, 14, 42]),
        OeisMode::Offline,
        &Cache::new(dir.path()),
        &mut NoNetwork,
    );
    assert!(!r.identified());
    assert_eq!(r.source, Source::None);
}

#[test]
fn network_failure_is_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    let r = lookup(
        &IntSequence::from_i64s([1, 2, 3, 4, 5, 6]),
        OeisMode::Online,
        &Cache::new(dir.path()),
        &mut Unreachable,
    );
    assert!(!r.identified());
    assert!(r.reason.unwrap().contains("connection refused"));
    assert_eq!(fs::read_dir(dir.path()).map(|d| d.count()).unwrap_or(0), 0);
}

#[test]
fn online_responses_are_cached_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path().join("nested"));
    let terms = IntSequence::from_i64s([1, 1, 2, 5, 14, 42]);
    let body = fs::read(fixture_cache().path(&query_url(&terms))).unwrap();
    let mut transport = Canned {
        body: body.clone(),
        requests: Vec::new(),
    };

    let first = lookup(&terms, OeisMode::Online, &cache, &mut transport);
    assert_eq!(first.source, Source::Network);
    assert_eq!(transport.requests, vec![query_url(&terms)]);
    assert_eq!(cache.get(&query_url(&terms)).unwrap(), body);

    let second = lookup(&terms, OeisMode::Online, &cache, &mut transport);
    assert_eq!(second.source, Source::Cache);
    assert_eq!(transport.requests.len(), 1);
    assert_eq!(second.matches, first.matches);
}

#[test]
fn identify_command_reads_cache_dir() {
    let dir = fixtures();
    let out = central(&[
        "--cache-dir",
        dir.to_str().unwrap(),
        "identify",
        "1,1,2,5,14,42",
    ]);
    assert_eq!(out.code, exit::OK);
    assert!(out.stdout.starts_with("A000108"));
    assert!(out.stdout.contains("source: cache"));

    let out = central(&[
        "--cache-dir",
        dir.to_str().unwrap(),
        "--format",
        "json",
        "--no-timestamp",
        "identify",
        "1,3,12,51,222",
    ]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["identified"], true);
    assert_eq!(v["matches"][0]["a_number"], "A007854");
    assert!(out.stderr.contains("recommended"));
}

#[test]
fn identify_miss_is_reported_not_raised() {
    let dir = tempfile::tempdir().unwrap();
    let out = central(&[
        "--cache-dir",
        dir.path().to_str().unwrap(),
        "identify",
        "7,7,7,7,7,8",
    ]);
    assert_eq!(out.code, exit::OK);
    assert!(out.stdout.starts_with("unidentified"));
}
