//! Exact tools for star edge-coloring of subcubic multigraphs.
//!
//! - [`multigraph`]: loopless multigraphs with stable edge ids, canonical
//!   forms, graph6 and edge-list I/O.
//! - [`density`]: maximum average degree (max-flow and brute force) and girth.
//! - [`starcolor`]: star-coloring verification, the exact star chromatic
//!   index with certificates, and star criticality.
//! - [`structure`]: vertex classes, the reducible-configuration predicates
//!   for star 5-critical graphs, and covers of the 3-cube.
//! - [`discharge`]: charges `d_H(v) - 12/5`, the four redistribution rules,
//!   and the conservation and nonnegativity audit.
//! - [`atlas`]: isomorph-free enumeration of small subcubic graphs, sweeps
//!   with a resumable result cache, and critical-graph search.

pub mod atlas;
pub mod density;
pub mod discharge;
pub mod error;
pub mod multigraph;
pub mod named;
pub mod rational;
pub mod starcolor;
pub mod structure;

pub use error::{Error, Result};
pub use multigraph::{CanonicalForm, Multigraph};
pub use rational::Rational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/density.md")]
    mod density {}
    #[doc = include_str!("../../../book/src/star-coloring.md")]
    mod star_coloring {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/discharging.md")]
    mod discharging {}
    #[doc = include_str!("../../../book/src/atlas.md")]
    mod atlas {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
