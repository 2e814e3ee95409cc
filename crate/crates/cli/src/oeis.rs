//! OEIS identification with a content-addressed response cache.
//!
//! Cache entries are the raw response bytes, stored under the SHA-256 of
//! the query URL, so a cache hit replays exactly what the network returned.

use std::fs;
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, Instant};

use central_core::IntSequence;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::OeisMode;

pub const SEARCH_ENDPOINT: &str = "https://oeis.org/search";

/// Prefixes shorter than this tend to match too many entries.
pub const RECOMMENDED_TERMS: usize = 6;

const MIN_INTERVAL: Duration = Duration::from_secs(1);

pub fn query_url(terms: &IntSequence) -> String {
    let joined: Vec<String> = terms.terms().iter().map(ToString::to_string).collect();
    format!("{SEARCH_ENDPOINT}?q={}&fmt=json", joined.join(","))
}

pub fn cache_key(url: &str) -> String {
    hex::encode(Sha256::digest(url.as_bytes()))
}

/// Blocking HTTP GET returning the response body.
pub trait Transport {
    fn get(&mut self, url: &str) -> Result<Vec<u8>, String>;
}

/// Network transport allowing at most one request per second.
pub struct HttpTransport {
    agent: ureq::Agent,
    last: Option<Instant>,
}

impl HttpTransport {
    pub fn new() -> Self {
        let config = ureq::Agent::config_builder()
            .timeout_global(Some(Duration::from_secs(30)))
            .build();
        HttpTransport {
            agent: config.into(),
            last: None,
        }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        Self::new()
    }
}

impl Transport for HttpTransport {
    fn get(&mut self, url: &str) -> Result<Vec<u8>, String> {
        if let Some(wait) = self
            .last
            .and_then(|t| MIN_INTERVAL.checked_sub(t.elapsed()))
        {
            thread::sleep(wait);
        }
        self.last = Some(Instant::now());
        let mut response = self.agent.get(url).call().map_err(|e| e.to_string())?;
        response.body_mut().read_to_vec().map_err(|e| e.to_string())
    }
}

/// Directory of raw responses named `<sha256 of url>.json`.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, url: &str) -> PathBuf {
        self.dir.join(format!("{}.json", cache_key(url)))
    }

    pub fn get(&self, url: &str) -> Option<Vec<u8>> {
        fs::read(self.path(url)).ok()
    }

    pub fn put(&self, url: &str, body: &[u8]) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        fs::write(self.path(url), body)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Cache,
    Network,
    /// Neither the cache nor the network produced a response.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisMatch {
    pub a_number: String,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisResult {
    #[serde(serialize_with = "terms_as_text")]
    pub query_terms: IntSequence,
    pub matches: Vec<OeisMatch>,
    pub source: Source,
    /// Why nothing was identified, when `matches` is empty.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn terms_as_text<S: serde::Serializer>(t: &IntSequence, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(t.terms().iter().map(ToString::to_string))
}

impl OeisResult {
    pub fn identified(&self) -> bool {
        !self.matches.is_empty()
    }

    fn unidentified(query_terms: IntSequence, source: Source, reason: impl Into<String>) -> Self {
        OeisResult {
            query_terms,
            matches: Vec::new(),
            source,
            reason: Some(reason.into()),
        }
    }
}

/// Reads either a bare array of entries or an object with a `results` array.
pub fn parse_response(body: &[u8]) -> Result<Vec<OeisMatch>, String> {
    let value: serde_json::Value =
        serde_json::from_slice(body).map_err(|e| format!("malformed response: {e}"))?;
    let entries = match &value {
        serde_json::Value::Array(a) => a.as_slice(),
        serde_json::Value::Object(o) => match o.get("results") {
            Some(serde_json::Value::Array(a)) => a.as_slice(),
            _ => &[],
        },
        _ => &[],
    };
    entries
        .iter()
        .map(|e| {
            let number = e
                .get("number")
                .and_then(serde_json::Value::as_u64)
                .ok_or_else(|| "entry without a number".to_string())?;
            let name = e
                .get("name")
                .and_then(serde_json::Value::as_str)
                .unwrap_or("")
                .to_string();
            Ok(OeisMatch {
                a_number: format!("A{number:06}"),
                name,
            })
        })
        .collect()
}

/// Cache first; the network only in online mode, and every network
/// response is cached before it is parsed. Failures are not fatal.
pub fn lookup(
    terms: &IntSequence,
    mode: OeisMode,
    cache: &Cache,
    transport: &mut dyn Transport,
) -> OeisResult {
    let url = query_url(terms);
    let (body, source) = match (cache.get(&url), mode) {
        (Some(body), _) => (body, Source::Cache),
        (None, OeisMode::Offline) => {
            return OeisResult::unidentified(terms.clone(), Source::None, "not cached and offline");
        }
        (None, OeisMode::Online) => match transport.get(&url) {
            Ok(body) => {
                if let Err(e) = cache.put(&url, &body) {
                    return OeisResult::unidentified(
                        terms.clone(),
                        Source::Network,
                        format!("cache write failed: {e}"),
                    );
                }
                (body, Source::Network)
            }
            Err(e) => {
                return OeisResult::unidentified(
                    terms.clone(),
                    Source::None,
                    format!("network: {e}"),
                )
            }
        },
    };
    match parse_response(&body) {
        Ok(matches) if matches.is_empty() => {
            OeisResult::unidentified(terms.clone(), source, "no matching entries")
        }
        Ok(matches) => OeisResult {
            query_terms: terms.clone(),
            matches,
            source,
            reason: None,
        },
        Err(e) => OeisResult::unidentified(terms.clone(), source, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn url_and_key() {
        let t = IntSequence::from_i64s([1, 1, 2, 5, 14, 42]);
        let url = query_url(&t);
        assert_eq!(url, "https://oeis.org/search?q=1,1,2,5,14,42&fmt=json");
        assert_eq!(cache_key(&url).len(), 64);
        assert_ne!(
            cache_key(&url),
            cache_key(&query_url(&IntSequence::from_i64s([1, 1, 2, 5, 14])))
        );
    }

    #[test]
    fn both_response_shapes() {
        let bare = br#"[{"number": 108, "name": "Catalan numbers"}]"#;
        let wrapped =
            br#"{"greeting": "hi", "results": [{"number": 108, "name": "Catalan numbers"}]}"#;
        let want = vec![OeisMatch {
            a_number: "A000108".into(),
            name: "Catalan numbers".into(),
        }];
        assert_eq!(parse_response(bare).unwrap(), want);
        assert_eq!(parse_response(wrapped).unwrap(), want);
        assert_eq!(parse_response(b"null").unwrap(), Vec::new());
        assert!(parse_response(b"<html>").is_err());
    }
}
