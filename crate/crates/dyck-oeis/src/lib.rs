//! OEIS b-file tooling: fetch with a local cache, parse, serialize, and
//! diff locally computed sequences against the published data.

mod bfile;
mod client;
mod error;

pub use bfile::{compare, BFile, DiffReport, Mismatch, SeqId};
pub use client::{Client, FetchMeta, CACHE_ENV, DEFAULT_BASE_URL};
pub use error::OeisError;
