//! Graph-minor containment and minor-saturation.
//!
//! * [`graph`]: simple graphs, generators, Generalized Petersen graphs,
//!   permutations and the edge-list format.
//! * [`minor`]: minor models and a complete backtracking minor search.
//! * [`saturation`]: saturation checks, orbit reduction and exact census.
//! * [`constructions`]: saturated-graph families and clique gluing.
//! * [`certificates`]: partition certificates for GP graphs and their verifier.
//! * [`cli`]: the `minorsat` command line.

pub mod bitset;
pub mod certificates;
pub mod cli;
pub mod constructions;
pub mod graph;
pub mod minor;
pub mod saturation;
