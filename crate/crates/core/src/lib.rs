//! Exact fractional matchings, their structural normal form, and checks of
//! lower bounds on `α′(G) + α′(Ḡ)` over a graph and its complement.

pub mod bipartite;
pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod families;
pub mod fm;
pub mod graph;
pub mod half;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod partition;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use fm::{alpha_prime, canonicalize_fm, extract_fm, FractionalMatching};
pub use graph::{Graph, VertexSet};
pub use half::HalfInt;
