//! Deciding Cohen-Macaulayness of bipartite graphs.
//!
//! The decision runs in near-linear time by peeling degree-one vertices and
//! then checking two adjacency conditions on the resulting perfect matching.
//! Positive answers come with a certificate (the matching and a compatible
//! ordering of its pairs), negative ones with a witness that can be
//! re-checked against the graph. The [`oracles`] module holds exponential
//! ground-truth procedures used to cross-check the fast path.
//!
//! ```
//! use cmbip::{is_cohen_macaulay, parse_str};
//!
//! let p4 = parse_str("p bip 2 2 3\ne 1 1\ne 2 1\ne 2 2\n").unwrap().graph;
//! let verdict = is_cohen_macaulay(&p4);
//! assert!(verdict.is_cm);
//! assert!(verdict.validate(&p4));
//! ```

pub mod cm;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod oracles;
pub mod report;
pub mod sweep;

pub use cm::{
    check_condition1, check_condition2, check_order, find_hh_order, is_cohen_macaulay, is_cohen_macaulay_with,
    is_unmixed, peel, verify_hh_order, verify_villarreal_order, Certificate, HhOrderError, OrderKind,
    OrderViolation, OrderedMatching, Outcome, PeelFailure, Provenance, Unmixedness, Verdict, Witness,
};
pub use graph::{
    parse_graph, parse_str, BipartiteGraph, Completeness, GraphError, GraphRecord, Normalized, ParseError,
    ParseErrorKind, ParsedGraph, Side, StripReport, VertexRef,
};
pub use matching::{
    enumerate_perfect_matchings, hall_violator, has_unique_perfect_matching, max_matching, Enumeration,
    HallViolator, Matching, MatchingError, Uniqueness, DEFAULT_ENUMERATION_CAP,
};
