//! Interval-spectrum parameters of small graphs.
//!
//! For a connected simple graph `G` and a proper edge coloring that uses all
//! of `1..=t`, `f(G, φ)` counts the vertices whose incident colors form an
//! interval. This crate computes the extremes of `f` per palette size by
//! exhaustive pruned search, recognizes and builds galaxies (caterpillar
//! trees), colors them with interval colorings for every feasible `t`, and
//! runs corpus checks of `mu21(G) = |V(G)|` against galaxy recognition.

pub mod coloring;
pub mod galaxy;
pub mod graph;
pub mod search;
pub mod verify;

pub use coloring::{
    chromatic_index, f_value, find_clash, is_proper, spectrum_summary, uses_all_colors, vertex_spectrum,
    ColoringError, EdgeColoring, SpectrumEntry, SpectrumSummary, UNCOLORED,
};
pub use galaxy::{
    build_galaxy, galaxy_interval_coloring, galaxy_maximal_coloring, recognize_galaxy, GalaxyDecomposition,
    GalaxyError, NotGalaxy, Spine,
};
pub use graph::{parse_edge_list, parse_graph6, validate, ConnectedGraph, Graph, GraphError};
pub use search::{
    count_proper_colorings, exists_interval_coloring, for_each_proper_coloring, interval_spread, mu_bounds,
    mu_table, Enumeration, IntervalSpread, MuBounds, MuRow, MuTable, SearchBudget, SearchConfig, SearchError,
};
pub use verify::{verify_corpus, TheoremReport, VerifyOptions};
