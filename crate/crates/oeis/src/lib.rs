//! Cross-matching computed integer sequences against OEIS entries.
//!
//! Lookups are offline by default and search only the vendored fixtures and
//! the local cache. Live mode queries the OEIS search endpoint through a
//! [`Transport`] and writes every returned entry to the cache.

mod cache;
mod fixture;
mod transport;

pub use cache::Cache;
pub use fixture::{vendored, SeqFixture, Source};
pub use transport::{HttpTransport, Transport, OEIS_SEARCH_URL};

use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("invalid OEIS identifier {0:?}")]
    InvalidId(String),
    #[error("a sequence needs at least one term")]
    EmptyTerms,
    #[error("at least {MIN_QUERY_TERMS} terms are needed for a lookup, {0} given")]
    TooFewTerms(usize),
    #[error("network error: {0}")]
    Network(String),
    #[error("malformed OEIS response: {0}")]
    Response(String),
    #[error("cache error at {path}: {message}")]
    Cache { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, OeisError>;

pub const MIN_QUERY_TERMS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Offline,
    Live,
}

/// True when `needle` occurs as a contiguous run inside `haystack`.
pub fn contains_run(haystack: &[BigInt], needle: &[BigInt]) -> bool {
    needle.is_empty() || haystack.windows(needle.len()).any(|w| w == needle)
}

/// Looks up sequences through the vendored data, a cache and a transport.
pub struct Matcher {
    cache: Option<Cache>,
    transport: Box<dyn Transport>,
}

impl Matcher {
    pub fn new(cache: Option<Cache>, transport: Box<dyn Transport>) -> Self {
        Matcher { cache, transport }
    }

    /// Cache from the environment and the HTTP transport with its default
    /// timeout.
    pub fn from_env() -> Self {
        Self::new(Cache::from_env(), Box::new(HttpTransport::default()))
    }

    /// Entries containing `terms` as a contiguous run. Offline mode never
    /// touches the transport.
    pub fn lookup(&self, terms: &[BigInt], mode: Mode) -> Result<Vec<SeqFixture>> {
        if terms.len() < MIN_QUERY_TERMS {
            return Err(OeisError::TooFewTerms(terms.len()));
        }
        let mut found: Vec<SeqFixture> = Vec::new();
        let push = |fx: SeqFixture, found: &mut Vec<SeqFixture>| {
            if contains_run(&fx.terms, terms) && !found.iter().any(|f| f.id == fx.id) {
                found.push(fx);
            }
        };
        for fx in vendored() {
            push(fx, &mut found);
        }
        if let Some(cache) = &self.cache {
            for fx in cache.load_all()? {
                push(fx, &mut found);
            }
        }
        if mode == Mode::Live {
            let query = terms.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            let body = self.transport.search(&query)?;
            for fx in transport::parse_response(&body)? {
                if let Some(cache) = &self.cache {
                    cache.store(&fx)?;
                }
                push(fx, &mut found);
            }
        }
        Ok(found)
    }
}

/// Lookup with the environment cache and the default HTTP transport.
pub fn match_terms(terms: &[BigInt], mode: Mode) -> Result<Vec<SeqFixture>> {
    Matcher::from_env().lookup(terms, mode)
}
