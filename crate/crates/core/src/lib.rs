//! Enumeration of maximal Δ-k-plexes in temporal graphs.
//!
//! A Δ-k-plex is a vertex set `C` with an interval `I` of Δ-frames such that,
//! in every frame of `I`, each member of `C` misses at most `k` members of
//! `C` (itself included). [`enumerate_maximal_plexes`] lists every plex that
//! is maximal in both vertices and time using a Bron–Kerbosch style
//! recursion over vertex-interval-set pairs.

pub mod cli;
pub mod degeneracy;
pub mod error;
pub mod frames;
pub mod graph;
pub mod heuristics;
pub mod interval;
pub mod oracle;
pub mod pairset;
pub mod par;
pub mod plex;
pub mod pool;

pub use degeneracy::{delta_slice_degeneracy, plex_count_upper_bound, static_degeneracy};
pub use error::{GraphError, ParamError};
pub use frames::{FrameDomain, NonNeighborhoodIndex};
pub use graph::{parse_edge_list, ParseOptions, TemporalEdge, TemporalGraph, Time, Vertex};
pub use interval::{Interval, IntervalSet};
pub use pairset::PairSet;
pub use par::Execution;
pub use plex::{
    enumerate_maximal_plexes, enumerate_observed, CountingSink, PlexRecord, PlexSink, RunStats,
    SearchConfig,
};
pub use pool::Pool;
