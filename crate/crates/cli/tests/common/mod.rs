#![allow(dead_code)]

use std::path::PathBuf;

use central_cli::oeis::Transport;
use central_cli::Outcome;

/// Fails the test on any attempted request.
pub struct NoNetwork;

impl Transport for NoNetwork {
    fn get(&mut self, url: &str) -> Result<Vec<u8>, String> {
        panic!("network access attempted: {url}");
    }
}

/// Serves a fixed body and counts requests.
pub struct Canned {
    pub body: Vec<u8>,
    pub requests: Vec<String>,
}

impl Transport for Canned {
    fn get(&mut self, url: &str) -> Result<Vec<u8>, String> {
        self.requests.push(url.to_string());
        Ok(self.body.clone())
    }
}

/// Always fails, as an unreachable host would.
pub struct Unreachable;

impl Transport for Unreachable {
    fn get(&mut self, _url: &str) -> Result<Vec<u8>, String> {
        Err("connection refused".into())
    }
}

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/oeis")
}

/// Runs `central <args>` in-process without network access.
pub fn central(args: &[&str]) -> Outcome {
    let argv = std::iter::once("central").chain(args.iter().copied());
    central_cli::run(argv, &mut NoNetwork)
}
