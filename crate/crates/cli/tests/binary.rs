//! The installed binary: exit statuses and environment overrides.

use std::process::Command;

fn central() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_central"));
    c.env_remove("CENTRAL_ORDER")
        .env_remove("CENTRAL_CACHE_DIR");
    c
}

#[test]
fn default_order_is_24() {
    let out = central().args(["expand", "1/(1-x)"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout)
            .unwrap()
            .trim()
            .split(',')
            .count(),
        25
    );
}

#[test]
fn order_from_environment() {
    let out = central()
        .env("CENTRAL_ORDER", "5")
        .args(["expand", "1/(1-x)"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,1,1,1,1,1\n");
    // the flag wins over the environment
    let out = central()
        .env("CENTRAL_ORDER", "5")
        .args(["expand", "1/(1-x)", "--order", "2"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,1,1\n");
}

#[test]
fn cache_dir_from_environment() {
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/oeis");
    let out = central()
        .env("CENTRAL_CACHE_DIR", fixtures)
        .args(["identify", "1,1,2,5,14,42"])
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("A000108"));
}

#[test]
fn exit_statuses() {
    let code = |args: &[&str]| {
        central()
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(code(&["ctransform", "1/(1-x)", "--order", "8"]), 0);
    assert_eq!(code(&["nope"]), 2);
    assert_eq!(code(&["expand", "(("]), 3);
    assert_eq!(code(&["cinverse", "2"]), 4);
}
