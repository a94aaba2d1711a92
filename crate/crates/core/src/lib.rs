//! Strong edge-coloring of k-degenerate multigraphs.
//!
//! Edges are ordered by repeatedly removing a *special edge* (one joining a
//! vertex with at most `k` high-degree neighbors to a vertex of degree at most
//! `k`), then colored first-fit in that order. For a `k`-degenerate graph of
//! maximum degree `Δ` this uses at most `(4k-2)Δ - k(2k-1) + 1` colors.
//!
//! ```
//! use strongedge::{color_graph, named};
//!
//! let (coloring, _, report) = color_graph(&named::cycle(5), None).unwrap();
//! assert!(report.valid);
//! assert_eq!(report.bound, Some(7));
//! assert!(coloring.colors_used <= 7);
//! ```

pub mod audit;
pub mod bench;
pub mod coloring;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod ordering;

pub use audit::{audit, AuditChecks, AuditRecord, AuditSummary};
pub use coloring::{
    bound, color_graph, greedy_color, verify_strong_coloring, ColorReport, ColoringVerdict,
    StrongColoring,
};
pub use error::{Error, Result};
pub use exact::{exact_chi_s, sandwich_check, ExactResult};
pub use generators::{generate, saturate_k, Family, GenSpec};
pub use graph::{named, EdgeId, EdgeSubset, MultiGraph, Vertex};
pub use io::{parse_graph, write_canonical};
pub use ordering::{
    build_ordering, build_ordering_with, degeneracy, find_special_edge, is_special_vertex,
    verify_ordering, DegeneracyCertificate, EdgeOrdering, OrderingVerdict, SelectionPolicy,
    SpecialEdge,
};
