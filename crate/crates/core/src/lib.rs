//! Efficient open and closed domination.
//!
//! A graph is an EOCD graph when it has an EOD set `D` (open neighborhoods
//! partition `V`) and an ECD set `P` (closed neighborhoods partition `V`).
//! This crate searches for such pairs, checks their structure, builds and
//! decomposes EOCD trees, generates the classical families and Sierpinski
//! graphs, and reduces one-in-three 3-SAT to the EOCD problem.

pub mod claims;
pub mod corpus;
pub mod domination;
pub mod edgelist;
pub mod empty_pd;
pub mod exact_cover;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod sierpinski;
pub mod transforms;
pub mod tree;

pub use domination::{find_eocd, EocdCertificate, SearchMode};
pub use graph::{Graph, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/empty_pd.md")]
    mod empty_pd {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    mod reduction {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
