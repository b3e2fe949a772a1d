//! Exact independent-set counting and the Merrifield–Simmons sign question.
//!
//! * [`graph`], [`vertex_set`], [`generators`]: immutable simple graphs,
//!   word-packed vertex sets, graph families and labeled enumeration.
//! * [`sigma`]: `σ(G)`, the number of independent sets, by brute force and
//!   by a memoized component-splitting recursion.
//! * [`delta`]: `Δ(G, A, B) = σ(G - A)·σ(G - B) - σ(G)·σ(G - A - B)` and
//!   its recurrences.
//! * [`paths`]: induced A-B-paths, parity classes, parity graphs.
//! * [`verify`]: conjecture and identity checks, counterexample search.
//! * [`io`], [`cli`]: graph6 and edge-list input, reports, the `msc` binary.
//!
//! ```
//! use msc_core::{delta::delta_vertices, generators::Family, sigma::sigma};
//!
//! let p3 = Family::Path(3).generate().unwrap();
//! assert_eq!(sigma(&p3), 5u32.into());
//! assert_eq!(delta_vertices(&p3, 0, 2).unwrap().to_string(), "-1");
//! ```

pub mod cli;
pub mod delta;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod paths;
pub mod sigma;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Distance, Graph};
pub use vertex_set::VertexSet;
