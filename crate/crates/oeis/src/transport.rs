use std::time::Duration;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;

use crate::fixture::{SeqFixture, Source};
use crate::{OeisError, Result};

pub const OEIS_SEARCH_URL: &str = "https://oeis.org/search";

/// Fetches the raw JSON body of an OEIS search for comma-separated terms.
pub trait Transport {
    fn search(&self, query: &str) -> Result<String>;
}

#[derive(Debug, Clone)]
pub struct HttpTransport {
    pub endpoint: String,
    pub timeout: Duration,
}

impl Default for HttpTransport {
    fn default() -> Self {
        HttpTransport {
            endpoint: OEIS_SEARCH_URL.to_string(),
            timeout: Duration::from_secs(20),
        }
    }
}

impl HttpTransport {
    pub fn with_timeout(timeout: Duration) -> Self {
        HttpTransport {
            timeout,
            ..Self::default()
        }
    }
}

impl Transport for HttpTransport {
    fn search(&self, query: &str) -> Result<String> {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(self.timeout))
            .build()
            .into();
        let network = |e: ureq::Error| OeisError::Network(e.to_string());
        agent
            .get(&self.endpoint)
            .query("q", query)
            .query("fmt", "json")
            .call()
            .map_err(network)?
            .body_mut()
            .read_to_string()
            .map_err(network)
    }
}

#[derive(Deserialize)]
struct Entry {
    number: u64,
    #[serde(default)]
    name: Option<String>,
    data: String,
}

/// Accepts either a bare array of entries or an object with a `results`
/// array; `null` results mean no match.
pub(crate) fn parse_response(body: &str) -> Result<Vec<SeqFixture>> {
    let bad = |e: &dyn std::fmt::Display| OeisError::Response(e.to_string());
    let value: Value = serde_json::from_str(body).map_err(|e| bad(&e))?;
    let list = match value {
        Value::Null => return Ok(Vec::new()),
        Value::Array(items) => items,
        Value::Object(mut map) => match map.remove("results") {
            None | Some(Value::Null) => return Ok(Vec::new()),
            Some(Value::Array(items)) => items,
            Some(other) => return Err(bad(&format!("unexpected results value {other}"))),
        },
        other => return Err(bad(&format!("unexpected response {other}"))),
    };
    list.into_iter()
        .map(|item| {
            let entry: Entry = serde_json::from_value(item).map_err(|e| bad(&e))?;
            let terms = entry
                .data
                .split(',')
                .map(|t| t.trim().parse::<BigInt>().map_err(|e| bad(&e)))
                .collect::<Result<Vec<_>>>()?;
            SeqFixture::new(&format!("A{:06}", entry.number), entry.name, terms, Source::Live)
        })
        .collect()
}
