//! The Δ-k Bron–Kerbosch recursion.
//!
//! Each call holds a vertex set `C` together with the interval set on which
//! `C` is a time-maximal Δ-k-plex, a candidate set `P` and an exclusion set
//! `X` of vertex-interval-set pairs, and the non-neighbor [`Pool`] for `C`.

use std::time::{Duration, Instant};

use crate::error::ParamError;
use crate::frames::{FrameDomain, NonNeighborhoodIndex};
use crate::graph::{TemporalGraph, Vertex};
use crate::heuristics::{connected_candidates, select_pivot};
use crate::interval::{Interval, IntervalSet};
use crate::pairset::PairSet;
use crate::pool::Pool;

/// A maximal Δ-k-plex: sorted vertex set and frame interval.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlexRecord {
    pub vertices: Vec<Vertex>,
    pub interval: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub delta: u32,
    pub k: u32,
    pub pivoting: bool,
    pub connectedness: bool,
    pub time_limit: Option<Duration>,
}

impl SearchConfig {
    pub fn new(delta: u32, k: u32) -> Self {
        SearchConfig {
            delta,
            k,
            pivoting: false,
            connectedness: false,
            time_limit: None,
        }
    }

    pub fn with_pivoting(mut self, on: bool) -> Self {
        self.pivoting = on;
        self
    }

    pub fn with_connectedness(mut self, on: bool) -> Self {
        self.connectedness = on;
        self
    }

    pub fn with_time_limit(mut self, limit: Option<Duration>) -> Self {
        self.time_limit = limit;
        self
    }

    /// Smallest plex order reported: `2k+1` in connected mode, else 1.
    pub fn min_size(&self) -> usize {
        if self.connectedness {
            2 * self.k as usize + 1
        } else {
            1
        }
    }

    pub fn validate(&self, graph: &TemporalGraph) -> Result<FrameDomain, ParamError> {
        if self.k < 1 {
            return Err(ParamError::ZeroK);
        }
        FrameDomain::for_graph(graph, self.delta)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunStats {
    pub plex_count: u64,
    pub max_plex_order: usize,
    pub max_lifetime_length: u32,
    pub recursive_calls: u64,
    pub wall_time_seconds: f64,
    pub timed_out: bool,
}

/// Receives maximal plexes as they are found.
pub trait PlexSink {
    fn accept(&mut self, record: PlexRecord);
}

impl PlexSink for Vec<PlexRecord> {
    fn accept(&mut self, record: PlexRecord) {
        self.push(record);
    }
}

/// Discards records; [`RunStats`] still counts them.
#[derive(Debug, Default)]
pub struct CountingSink;

impl PlexSink for CountingSink {
    fn accept(&mut self, _record: PlexRecord) {}
}

/// Adapts a closure into a sink.
pub struct FnSink<F>(pub F);

impl<F: FnMut(PlexRecord)> PlexSink for FnSink<F> {
    fn accept(&mut self, record: PlexRecord) {
        (self.0)(record)
    }
}

/// Snapshot of a recursive call at entry, for instrumentation.
pub struct CallState<'a> {
    pub depth: usize,
    pub plex: &'a [Vertex],
    pub lifetime: &'a IntervalSet,
    pub candidates: &'a PairSet,
    pub excluded: &'a PairSet,
    pub pool: &'a Pool,
}

pub trait CallObserver {
    fn on_call(&mut self, state: &CallState<'_>);
}

impl CallObserver for () {
    fn on_call(&mut self, _state: &CallState<'_>) {}
}

/// Adds `v` (the last member of `plex`) to the counters.
///
/// Every tracked vertex gains one on the frames, within its own interval set
/// and `v_frames`, where it misses `v`; members of `plex` are tracked over
/// `v_frames`. Returns the new pool and the frames where a count just
/// reached `k`.
#[allow(clippy::too_many_arguments)]
pub fn update_pool(
    pool: &Pool,
    plex: &[Vertex],
    v: Vertex,
    v_frames: &IntervalSet,
    candidates: &PairSet,
    excluded: &PairSet,
    index: &NonNeighborhoodIndex,
    k: u32,
) -> (Pool, PairSet) {
    debug_assert!(plex.contains(&v));
    let mut next = pool.clone();
    let mut crit: Vec<(Vertex, IntervalSet)> = Vec::new();

    for &c in plex {
        let frames = if c == v {
            v_frames.clone()
        } else {
            v_frames.intersect(index.non_neighbor_frames(v, c))
        };
        let hit = next.increment(c, &frames, k);
        if !hit.is_empty() {
            crit.push((c, hit));
        }
    }
    for (w, w_frames) in candidates.iter().chain(excluded.iter()) {
        if w == v {
            continue;
        }
        let frames = w_frames
            .intersect(v_frames)
            .intersect(index.non_neighbor_frames(v, w));
        let hit = next.increment(w, &frames, k);
        if !hit.is_empty() {
            crit.push((w, hit));
        }
    }
    crit.sort_unstable_by_key(|(w, _)| *w);
    (next, PairSet::from_sorted_unchecked(crit))
}

/// Narrows `P` or `X` after `v` joined the plex.
///
/// Each entry other than `v` is cut down to `v_frames`, then loses every
/// frame in which it, or one of its non-neighbors in `plex`, is critical.
pub fn update_candidates(
    set: &PairSet,
    plex: &[Vertex],
    crit: &PairSet,
    v: Vertex,
    v_frames: &IntervalSet,
    index: &NonNeighborhoodIndex,
) -> PairSet {
    let plex_crit: Vec<(Vertex, &IntervalSet)> = plex
        .iter()
        .filter_map(|&c| crit.get(c).map(|s| (c, s)))
        .collect();
    let mut out = Vec::with_capacity(set.len());
    for (w, w_frames) in set.iter() {
        if w == v {
            continue;
        }
        let mut frames = w_frames.intersect(v_frames);
        if let Some(own) = crit.get(w) {
            frames = frames.minus(own);
        }
        for &(c, c_crit) in &plex_crit {
            if frames.is_empty() {
                break;
            }
            let blocked = c_crit.intersect(index.non_neighbor_frames(w, c));
            frames = frames.minus(&blocked);
        }
        if !frames.is_empty() {
            out.push((w, frames));
        }
    }
    PairSet::from_sorted_unchecked(out)
}

/// The intervals of `lifetime` that no pair of `P ∪ X` holds verbatim,
/// provided `plex` is large enough.
pub fn emit_maximal(
    plex: &[Vertex],
    lifetime: &IntervalSet,
    candidates: &PairSet,
    excluded: &PairSet,
    min_size: usize,
) -> Vec<PlexRecord> {
    if plex.len() < min_size.max(1) {
        return Vec::new();
    }
    let mut sorted = plex.to_vec();
    sorted.sort_unstable();
    lifetime
        .iter()
        .filter(|iv| !candidates.has_exact_interval(iv) && !excluded.has_exact_interval(iv))
        .map(|&interval| PlexRecord {
            vertices: sorted.clone(),
            interval,
        })
        .collect()
}

/// Enumerates every maximal Δ-k-plex of `graph` into `sink`.
pub fn enumerate_maximal_plexes<S: PlexSink>(
    graph: &TemporalGraph,
    config: &SearchConfig,
    sink: &mut S,
) -> Result<RunStats, ParamError> {
    let domain = config.validate(graph)?;
    let index = NonNeighborhoodIndex::build(graph, domain);
    Ok(Enumerator::new(graph, &index, config).run(sink, &mut ()))
}

/// Same as [`enumerate_maximal_plexes`] with a caller-provided index and a
/// hook invoked at every recursive call.
pub fn enumerate_observed<S: PlexSink, O: CallObserver>(
    graph: &TemporalGraph,
    index: &NonNeighborhoodIndex,
    config: &SearchConfig,
    sink: &mut S,
    observer: &mut O,
) -> Result<RunStats, ParamError> {
    let domain = config.validate(graph)?;
    if domain != index.domain() {
        return Err(ParamError::DeltaTooLarge {
            delta: config.delta,
            lifetime: graph.lifetime(),
        });
    }
    Ok(Enumerator::new(graph, index, config).run(sink, observer))
}

struct Enumerator<'g> {
    graph: &'g TemporalGraph,
    index: &'g NonNeighborhoodIndex,
    config: &'g SearchConfig,
    deadline: Option<Instant>,
    stats: RunStats,
}

impl<'g> Enumerator<'g> {
    fn new(
        graph: &'g TemporalGraph,
        index: &'g NonNeighborhoodIndex,
        config: &'g SearchConfig,
    ) -> Self {
        Enumerator {
            graph,
            index,
            config,
            deadline: None,
            stats: RunStats::default(),
        }
    }

    fn run<S: PlexSink, O: CallObserver>(mut self, sink: &mut S, observer: &mut O) -> RunStats {
        let started = Instant::now();
        self.deadline = self.config.time_limit.map(|d| started + d);
        let full = self.index.full().clone();
        let candidates = PairSet::from_sorted_unchecked(
            self.graph.vertices().map(|v| (v, full.clone())).collect(),
        );
        let pool = Pool::zeroed(self.graph.vertex_count(), self.index.domain().last_frame());
        let mut plex = Vec::new();
        self.recurse(
            &mut plex,
            &full,
            candidates,
            PairSet::new(),
            &pool,
            sink,
            observer,
        );
        self.stats.wall_time_seconds = started.elapsed().as_secs_f64();
        self.stats
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse<S: PlexSink, O: CallObserver>(
        &mut self,
        plex: &mut Vec<Vertex>,
        lifetime: &IntervalSet,
        mut candidates: PairSet,
        mut excluded: PairSet,
        pool: &Pool,
        sink: &mut S,
        observer: &mut O,
    ) {
        if self.stats.timed_out {
            return;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stats.timed_out = true;
            return;
        }
        self.stats.recursive_calls += 1;
        observer.on_call(&CallState {
            depth: plex.len(),
            plex,
            lifetime,
            candidates: &candidates,
            excluded: &excluded,
            pool,
        });

        for record in emit_maximal(
            plex,
            lifetime,
            &candidates,
            &excluded,
            self.config.min_size(),
        ) {
            self.stats.plex_count += 1;
            self.stats.max_plex_order = self.stats.max_plex_order.max(record.vertices.len());
            self.stats.max_lifetime_length =
                self.stats.max_lifetime_length.max(record.interval.len());
            sink.accept(record);
        }

        let mut order: Vec<Vertex> = if self.config.connectedness {
            connected_candidates(&candidates, plex, lifetime, self.index)
                .vertices()
                .collect()
        } else {
            candidates.vertices().collect()
        };
        if order.is_empty() {
            return;
        }
        if self.config.pivoting {
            if let Some(choice) = select_pivot(plex, lifetime, &candidates, &excluded, self.index) {
                // A skipped branch is recovered through some unsuppressed
                // candidate, which must itself be branched on here.
                let recoverable = !self.config.connectedness
                    || candidates.vertices().all(|v| {
                        choice.suppressed.binary_search(&v).is_ok()
                            || order.binary_search(&v).is_ok()
                    });
                if recoverable {
                    order.retain(|v| choice.suppressed.binary_search(v).is_err());
                }
            }
        }

        let k = self.config.k;
        for v in order {
            let v_frames = candidates.remove(v).expect("candidate order drawn from P");
            plex.push(v);
            let (child_pool, crit) = update_pool(
                pool,
                plex,
                v,
                &v_frames,
                &candidates,
                &excluded,
                self.index,
                k,
            );
            let child_p = update_candidates(&candidates, plex, &crit, v, &v_frames, self.index);
            let child_x = update_candidates(&excluded, plex, &crit, v, &v_frames, self.index);
            self.recurse(
                plex,
                &v_frames,
                child_p,
                child_x,
                &child_pool,
                sink,
                observer,
            );
            plex.pop();
            excluded.merge(v, &v_frames);
            if self.stats.timed_out {
                return;
            }
        }
    }
}
