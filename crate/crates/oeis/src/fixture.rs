use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{OeisError, Result};

/// Where a fixture came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Vendored,
    Cached,
    Live,
}

/// An OEIS entry: identifier, optional name and its leading terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqFixture {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(with = "terms_as_strings")]
    pub terms: Vec<BigInt>,
    pub source: Source,
}

impl SeqFixture {
    pub fn new(id: &str, name: Option<String>, terms: Vec<BigInt>, source: Source) -> Result<Self> {
        if !valid_id(id) {
            return Err(OeisError::InvalidId(id.to_string()));
        }
        if terms.is_empty() {
            return Err(OeisError::EmptyTerms);
        }
        Ok(SeqFixture {
            id: id.to_string(),
            name,
            terms,
            source,
        })
    }

    /// Parses and validates a JSON fixture.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SeqFixture =
            serde_json::from_str(text).map_err(|e| OeisError::Response(e.to_string()))?;
        Self::new(&raw.id, raw.name, raw.terms, raw.source)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixtures always serialize")
    }
}

/// `A` followed by exactly six digits.
pub fn valid_id(id: &str) -> bool {
    let bytes = id.as_bytes();
    bytes.len() == 7 && bytes[0] == b'A' && bytes[1..].iter().all(u8::is_ascii_digit)
}

mod terms_as_strings {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(terms: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(terms.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|t| t.parse().map_err(|_| D::Error::custom(format!("bad term {t:?}"))))
            .collect()
    }
}

const VENDORED: [&str; 6] = [
    include_str!("../data/A000108.json"),
    include_str!("../data/A006318.json"),
    include_str!("../data/A080246.json"),
    include_str!("../data/A080247.json"),
    include_str!("../data/A133367.json"),
    include_str!("../data/A174347.json"),
];

/// The fixtures shipped with the crate.
pub fn vendored() -> Vec<SeqFixture> {
    VENDORED
        .iter()
        .map(|text| SeqFixture::from_json(text).expect("vendored fixtures are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifiers() {
        assert!(valid_id("A006318"));
        assert!(!valid_id("A06318"));
        assert!(!valid_id("a006318"));
        assert!(!valid_id("A0063189"));
        assert!(!valid_id("A00631x"));
    }

    #[test]
    fn vendored_fixtures_are_long_enough() {
        let all = vendored();
        assert_eq!(all.len(), 6);
        for fx in all {
            assert!(fx.terms.len() >= 20, "{}", fx.id);
            assert_eq!(fx.source, Source::Vendored);
        }
    }

    #[test]
    fn json_round_trip() {
        let fx = SeqFixture::new(
            "A000001",
            None,
            vec![BigInt::from(-3), "123456789012345678901234567890".parse().unwrap()],
            Source::Cached,
        )
        .unwrap();
        let text = fx.to_json();
        assert!(text.contains("\"-3\""));
        assert_eq!(SeqFixture::from_json(&text).unwrap(), fx);
    }

    #[test]
    fn invalid_fixtures_rejected() {
        assert!(matches!(
            SeqFixture::new("B000001", None, vec![BigInt::from(1)], Source::Live),
            Err(OeisError::InvalidId(_))
        ));
        assert!(matches!(
            SeqFixture::new("A000001", None, vec![], Source::Live),
            Err(OeisError::EmptyTerms)
        ));
    }
}
