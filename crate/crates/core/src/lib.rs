//! Exact domination and edge-domination numbers on small graphs, constructive
//! dominating-set schemes built from minimum maximal matchings, and a batch
//! harness checking `γ(G) ≤ γ_e(G)` on regular graphs.
pub mod clawfree;
pub mod cubic;
pub mod dyadic;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod selection;
pub mod threshold;
