//! Solvers, constructions, and bound checks for outer-independent total
//! double Roman domination (OITDRD) in simple graphs.
//!
//! A labeling `V -> {0,1,2,3}` is an OITDRDF when every 0-vertex has a
//! 3-neighbor or two 2-neighbors, every 1-vertex has a neighbor labeled at
//! least 2, the positively labeled vertices induce a subgraph without
//! isolated vertices, and the 0-vertices form an independent set. The
//! OITDRD-number of a graph is the minimum total weight of such a labeling.
//!
//! The crate provides:
//!
//! * [`graph`]: immutable simple graphs, edge-list I/O, vertex roles;
//! * [`labeling`]: labelings and validity checkers for the DRDF, TDRDF,
//!   OIDRDF and OITDRDF classes;
//! * [`solver`]: exact branch-and-bound minimization, the classical
//!   domination numbers, exact maximum matching, and enumeration of all
//!   optimal labelings;
//! * [`tree_dp`]: a linear-time exact solver on trees;
//! * [`constructions`]: closed-form values and certified labelings for
//!   paths, cycles, stars, double stars, coronas, matchings and regular
//!   graphs of girth at least eight;
//! * [`reduction`]: the star-gadget construction relating OIDRD to OITDRD
//!   and a desk-scale verifier for it;
//! * [`bounds`]: exact-rational evaluation of every supported inequality
//!   on a given graph;
//! * [`families`]: deterministic generators for the graph families used
//!   throughout, including exhaustive small-graph and free-tree streams.
//!
//! See the crate examples for runnable tours of each capability, and the
//! `oitdrd` binary for the command-line interface.

pub mod bounds;
pub mod constructions;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod reduction;
pub mod solver;
pub mod tree_dp;

pub use graph::{classify_vertices, Graph, GraphError, VertexClassification, VertexRole};
pub use labeling::{
    check_conditions, check_drdf, check_oidrdf, check_oitdrdf, check_set_properties, check_tdrdf,
    Labeling, LabelingError, SetProperties, Verdict, ViolationKind,
};
pub use solver::{
    domination_number, enumerate_optimal_oitdrdf, matching_number, maximum_matching,
    solve_oidrd, solve_oitdrd, solve_tdrd, total_coindependent_number, total_domination_number,
    SolveOptions, SolveResult, Variant,
};
pub use tree_dp::solve_tree;
