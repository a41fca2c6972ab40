//! Built-in presentations of the 25 cataloged prime knots.
//!
//! Relations are listed in the same order as the published equation lists;
//! arcs are labeled `a`, `b`, ... as in the standard Rolfsen diagrams.

use std::sync::OnceLock;

use super::{parse_presentations, KnotPresentation};
use crate::error::{Error, Result};

/// The catalog in the presentation file format.
pub const CATALOG_SOURCE: &str = include_str!("../../data/catalog.kq");

static CATALOG: OnceLock<Vec<KnotPresentation>> = OnceLock::new();

/// All cataloged presentations, in catalog order.
pub fn catalog() -> &'static [KnotPresentation] {
    CATALOG.get_or_init(|| {
        parse_presentations(CATALOG_SOURCE).expect("embedded catalog must parse")
    })
}

pub fn catalog_names() -> Vec<&'static str> {
    catalog().iter().map(|p| p.name()).collect()
}

pub fn catalog_lookup(name: &str) -> Result<KnotPresentation> {
    catalog()
        .iter()
        .find(|p| p.name() == name)
        .cloned()
        .ok_or_else(|| Error::UnknownKnot {
            name: name.to_string(),
            available: catalog_names().into_iter().map(String::from).collect(),
        })
}
