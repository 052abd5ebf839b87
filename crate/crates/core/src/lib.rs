//! Schubert structure constants `c_{w0 u, v}^w` in types B and D from the
//! monoid action on symmetric clans, checked against divided differences.

pub mod action;
pub mod bruhat;
pub mod chevalley;
pub mod clan;
pub mod cli;
pub mod coset;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod richardson;
pub mod tables;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}
