//! Maximum k-edge-colorable subgraphs of cubic and subcubic multigraphs.
//!
//! [`exact`] computes ν_k, α_k and χ′ by search and is the reference for
//! everything else. [`certify`] builds pairs and triples of disjoint
//! matchings for a cubic graph without search, from a separated maximum
//! matching ([`separated`]), path/cycle systems ([`decomposition`]) and
//! loop cutting on subdivided pseudo-graphs ([`pseudograph`]). [`harness`]
//! runs both over enumerated or random graphs.

pub mod blossom;
pub mod canon;
pub mod certify;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod io;
pub mod named;
pub mod pseudograph;
pub mod separated;
