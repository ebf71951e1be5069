//! Exact values, constructive bounds and probabilistic bounds for
//! (a,b)-domination.
//!
//! A set `S` of vertices is (a,b)-dominating when every vertex of `S` has at
//! least `a` neighbors in `S` and every vertex outside `S` has at least `b`
//! neighbors in `S`. The crate offers:
//!
//! * [`exact`]: a verifier and branch-and-bound minimum for small graphs;
//! * [`turan`]: auxiliary-graph constructions whose independent sets
//!   complement to dominating sets, with a greedy extractor;
//! * [`lll`]: exact local-lemma color counts and Moser–Tardos resampling;
//! * [`bounds`]: closed-form comparators from the literature;
//! * [`cli`]: the `dominator` command line.

pub mod bounds;
pub mod cli;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lll;
pub mod matching;
pub mod turan;

pub use exact::{gamma_exact, independence_number_exact, is_ab_dominating, DominationCertificate, GammaOutcome, Method};
pub use graph::{DegreeProfile, Edge, Graph, GraphError, Vertex};
