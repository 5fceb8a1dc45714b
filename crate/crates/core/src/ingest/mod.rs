//! Building semimatroids from JSON documents and seeded generators.

mod arrangement;
mod explicit;
mod random;

use serde_json::Value;

pub use arrangement::{bareiss_pivots, from_arrangement, ArrangementDoc, HyperplaneDoc, RationalDoc};
pub use explicit::{emit, from_explicit, from_matroid_rank, from_matroid_table, ExplicitDoc};
pub use random::{random_arrangement, random_instance, RandomSpec};

use crate::error::{InputError, Result};
use crate::semimatroid::Semimatroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Explicit(ExplicitDoc),
    Arrangement(ArrangementDoc),
}

impl Document {
    /// An object with a `hyperplanes` field is an arrangement; anything
    /// else must be an explicit document.
    pub fn parse(text: &str) -> Result<Document, InputError> {
        let bad = |e: serde_json::Error| InputError::Document(e.to_string());
        let value: Value = serde_json::from_str(text).map_err(bad)?;
        if value.get("hyperplanes").is_some() {
            Ok(Document::Arrangement(serde_json::from_value(value).map_err(bad)?))
        } else {
            Ok(Document::Explicit(serde_json::from_value(value).map_err(bad)?))
        }
    }

    pub fn build(&self) -> Result<Semimatroid> {
        match self {
            Document::Explicit(d) => from_explicit(d),
            Document::Arrangement(d) => from_arrangement(d),
        }
    }
}

/// Parse and validate a document of either kind.
pub fn load(text: &str) -> Result<Semimatroid> {
    Document::parse(text)?.build()
}
