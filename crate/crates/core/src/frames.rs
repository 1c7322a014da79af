//! Δ-frames and the precomputed per-pair non-neighbor frame sets.

use std::collections::HashMap;

use crate::error::ParamError;
use crate::graph::{TemporalGraph, Time, Vertex};
use crate::interval::{Interval, IntervalSet};

/// The frames `Δ_i = [i, i+Δ]` for `i` in `1..=lifetime-Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrameDomain {
    delta: u32,
    lifetime: Time,
}

impl FrameDomain {
    pub fn new(delta: u32, lifetime: Time) -> Result<Self, ParamError> {
        if delta >= lifetime {
            return Err(ParamError::DeltaTooLarge { delta, lifetime });
        }
        Ok(FrameDomain { delta, lifetime })
    }

    pub fn for_graph(graph: &TemporalGraph, delta: u32) -> Result<Self, ParamError> {
        Self::new(delta, graph.lifetime())
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn lifetime(&self) -> Time {
        self.lifetime
    }

    pub fn last_frame(&self) -> u32 {
        self.lifetime - self.delta
    }

    pub fn frame_count(&self) -> u32 {
        self.last_frame()
    }

    pub fn all_frames(&self) -> Interval {
        Interval::new(1, self.last_frame())
    }

    pub fn full(&self) -> IntervalSet {
        IntervalSet::single(self.all_frames())
    }

    /// Time steps spanned by frame `i`.
    pub fn window(&self, i: u32) -> Interval {
        Interval::new(i, i + self.delta)
    }

    /// Frames whose window contains time step `t`.
    pub fn frames_covered(&self, t: Time) -> Interval {
        debug_assert!(1 <= t && t <= self.lifetime);
        Interval::new(
            t.saturating_sub(self.delta).max(1),
            t.min(self.last_frame()),
        )
    }
}

#[inline]
fn pair_key(u: Vertex, v: Vertex) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    ((a as u64) << 32) | b as u64
}

/// For every vertex pair, the frames in which the two are not neighbors.
///
/// Only pairs that share at least one edge are stored; any other pair (and
/// every vertex paired with itself) is a non-neighbor in the whole domain.
#[derive(Clone, Debug)]
pub struct NonNeighborhoodIndex {
    domain: FrameDomain,
    full: IntervalSet,
    pairs: HashMap<u64, IntervalSet>,
    adjacency: Vec<Vec<Vertex>>,
}

impl NonNeighborhoodIndex {
    pub fn build(graph: &TemporalGraph, domain: FrameDomain) -> Self {
        debug_assert_eq!(graph.lifetime(), domain.lifetime());
        // edges arrive sorted by time, so each pair's neighbor frames are
        // appended in order and merged on the fly
        let mut neighbor: HashMap<u64, Vec<Interval>> = HashMap::new();
        for e in graph.edges() {
            let cover = domain.frames_covered(e.t);
            let runs = neighbor.entry(pair_key(e.u, e.v)).or_default();
            match runs.last_mut() {
                Some(last) if cover.start() <= last.end() + 1 => {
                    *last = Interval::new(last.start(), last.end().max(cover.end()));
                }
                _ => runs.push(cover),
            }
        }
        let full = domain.full();
        let mut adjacency = vec![Vec::new(); graph.vertex_count()];
        let pairs = neighbor
            .into_iter()
            .map(|(key, runs)| {
                let (a, b) = ((key >> 32) as Vertex, key as u32);
                adjacency[a as usize].push(b);
                adjacency[b as usize].push(a);
                let nbr = IntervalSet::from_sorted_unchecked(runs);
                (key, full.minus(&nbr))
            })
            .collect();
        for list in &mut adjacency {
            list.sort_unstable();
        }
        NonNeighborhoodIndex {
            domain,
            full,
            pairs,
            adjacency,
        }
    }

    pub fn domain(&self) -> FrameDomain {
        self.domain
    }

    /// The whole frame domain as a set.
    pub fn full(&self) -> &IntervalSet {
        &self.full
    }

    /// Frames in which `u` and `v` are non-neighbors (the full domain when
    /// `u == v`).
    pub fn non_neighbor_frames(&self, u: Vertex, v: Vertex) -> &IntervalSet {
        if u == v {
            return &self.full;
        }
        self.pairs.get(&pair_key(u, v)).unwrap_or(&self.full)
    }

    pub fn neighbor_frames(&self, u: Vertex, v: Vertex) -> IntervalSet {
        self.full.minus(self.non_neighbor_frames(u, v))
    }

    /// Vertices sharing at least one edge with `v`, ascending.
    pub fn ever_adjacent(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v as usize]
    }

    /// Number of explicitly stored pairs.
    pub fn stored_pairs(&self) -> usize {
        self.pairs.len()
    }
}
