//! Brute-force ground truth for small instances.
//!
//! Nothing here uses the interval algebra, the non-neighbor index or the
//! pool. Adjacency is read straight off the edge list.

use crate::error::ParamError;
use crate::graph::{TemporalGraph, Vertex};
use crate::interval::Interval;
use crate::par::{self, Execution};
use crate::plex::PlexRecord;

/// Refusal thresholds for [`enumerate_all_maximal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_vertices: usize,
    pub max_frames: u32,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_vertices: 12,
            max_frames: 64,
        }
    }
}

/// `Δ`-frame `i` is the window `[i, i+Δ]`; `true` if `u` and `v` share an
/// edge inside it. Scans the edge list.
fn scan_adjacent(graph: &TemporalGraph, delta: u32, u: Vertex, v: Vertex, i: u32) -> bool {
    graph
        .edges()
        .iter()
        .any(|e| ((e.u == u && e.v == v) || (e.u == v && e.v == u)) && i <= e.t && e.t <= i + delta)
}

/// `true` iff every member of `plex` misses at most `k` members (itself
/// included) in every frame of `interval`.
pub fn is_plex(
    graph: &TemporalGraph,
    delta: u32,
    k: u32,
    plex: &[Vertex],
    interval: Interval,
) -> bool {
    interval.iter().all(|i| {
        plex.iter().all(|&v| {
            let missing = plex
                .iter()
                .filter(|&&u| u == v || !scan_adjacent(graph, delta, u, v, i))
                .count();
            missing <= k as usize
        })
    })
}

/// Per-frame adjacency matrices built by scanning the edge list.
#[derive(Clone, Debug)]
pub struct FrameAdjacency {
    n: usize,
    frames: u32,
    delta: u32,
    // frame-major n×n matrices, frame 1 first
    adj: Vec<bool>,
}

impl FrameAdjacency {
    pub fn new(graph: &TemporalGraph, delta: u32) -> Self {
        let n = graph.vertex_count();
        let frames = graph.lifetime().saturating_sub(delta);
        let mut adj = vec![false; frames as usize * n * n];
        for i in 1..=frames {
            for e in graph.edges() {
                if i <= e.t && e.t <= i + delta {
                    let base = (i as usize - 1) * n * n;
                    adj[base + e.u as usize * n + e.v as usize] = true;
                    adj[base + e.v as usize * n + e.u as usize] = true;
                }
            }
        }
        FrameAdjacency {
            n,
            frames,
            delta,
            adj,
        }
    }

    pub fn frame_count(&self) -> u32 {
        self.frames
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex, frame: u32) -> bool {
        let base = (frame as usize - 1) * self.n * self.n;
        self.adj[base + u as usize * self.n + v as usize]
    }

    /// Members of `set` that are not neighbors of `w` in `frame`, counting `w`
    /// itself when it belongs to `set`.
    pub fn missing_in(&self, w: Vertex, set: &[Vertex], frame: u32) -> usize {
        set.iter()
            .filter(|&&u| u == w || !self.adjacent(u, w, frame))
            .count()
    }

    pub fn feasible(&self, set: &[Vertex], k: u32, frame: u32) -> bool {
        set.iter()
            .all(|&v| self.missing_in(v, set, frame) <= k as usize)
    }

    /// Frames in which `set` satisfies the k-plex condition, ascending.
    pub fn feasible_frames(&self, set: &[Vertex], k: u32) -> Vec<u32> {
        (1..=self.frames)
            .filter(|&i| self.feasible(set, k, i))
            .collect()
    }
}

/// Maximal runs of consecutive integers in an ascending list.
pub fn maximal_runs(points: &[u32]) -> Vec<Interval> {
    let mut runs: Vec<Interval> = Vec::new();
    for &p in points {
        match runs.last_mut() {
            Some(last) if last.end() + 1 == p => *last = Interval::new(last.start(), p),
            _ => runs.push(Interval::point(p)),
        }
    }
    runs
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleResult {
    /// Sorted by vertex set, then interval.
    pub plexes: Vec<PlexRecord>,
}

pub fn enumerate_all_maximal(
    graph: &TemporalGraph,
    delta: u32,
    k: u32,
) -> Result<OracleResult, ParamError> {
    enumerate_all_maximal_with(graph, delta, k, SizeGuard::default(), Execution::default())
}

/// Tries every vertex subset, takes the maximal runs of feasible frames and
/// keeps those runs no outside vertex can join.
pub fn enumerate_all_maximal_with(
    graph: &TemporalGraph,
    delta: u32,
    k: u32,
    guard: SizeGuard,
    exec: Execution,
) -> Result<OracleResult, ParamError> {
    if k < 1 {
        return Err(ParamError::ZeroK);
    }
    if delta >= graph.lifetime() {
        return Err(ParamError::DeltaTooLarge {
            delta,
            lifetime: graph.lifetime(),
        });
    }
    let n = graph.vertex_count();
    let frames = graph.lifetime() - delta;
    if n > guard.max_vertices || frames > guard.max_frames {
        return Err(ParamError::OracleGuard {
            vertices: n,
            frames,
            max_vertices: guard.max_vertices,
            max_frames: guard.max_frames,
        });
    }
    let adj = FrameAdjacency::new(graph, delta);
    let masks = 1u64 << n;
    let mut plexes = par::flat_map_indexed(exec, masks, |mask| {
        if mask == 0 {
            return Vec::new();
        }
        let set: Vec<Vertex> = (0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect();
        let runs = maximal_runs(&adj.feasible_frames(&set, k));
        runs.into_iter()
            .filter(|run| {
                (0..n as Vertex).filter(|&v| mask >> v & 1 == 0).all(|v| {
                    let mut grown = set.clone();
                    grown.push(v);
                    !run.iter().all(|i| adj.feasible(&grown, k, i))
                })
            })
            .map(|interval| PlexRecord {
                vertices: set.clone(),
                interval,
            })
            .collect()
    });
    plexes.sort();
    Ok(OracleResult { plexes })
}

/// Degeneracy by repeatedly deleting a vertex of minimum remaining degree.
pub fn static_degeneracy(adjacency: &[Vec<usize>]) -> u32 {
    let n = adjacency.len();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| degree[v])
            .expect("a live vertex remains");
        best = best.max(degree[v]);
        alive[v] = false;
        for &u in &adjacency[v] {
            if alive[u] {
                degree[u] -= 1;
            }
        }
    }
    best as u32
}

/// Adjacency lists of frame `i` (window `[i, i+Δ]`), deduplicated.
pub fn frame_adjacency_lists(graph: &TemporalGraph, delta: u32, i: u32) -> Vec<Vec<usize>> {
    adjacency_lists(graph, |t| i <= t && t <= i + delta)
}

/// Adjacency lists of the union of all snapshots.
pub fn union_adjacency_lists(graph: &TemporalGraph) -> Vec<Vec<usize>> {
    adjacency_lists(graph, |_| true)
}

fn adjacency_lists(graph: &TemporalGraph, keep: impl Fn(u32) -> bool) -> Vec<Vec<usize>> {
    let mut lists = vec![Vec::new(); graph.vertex_count()];
    for e in graph.edges().iter().filter(|e| keep(e.t)) {
        lists[e.u as usize].push(e.v as usize);
        lists[e.v as usize].push(e.u as usize);
    }
    for l in &mut lists {
        l.sort_unstable();
        l.dedup();
    }
    lists
}

/// All maximal k-plexes of a static graph, by subset enumeration; each
/// vertex may miss at most `k` members, itself included.
pub fn maximal_static_kplexes(adjacency: &[Vec<usize>], k: u32) -> Vec<Vec<Vertex>> {
    let n = adjacency.len();
    assert!(n <= 20, "static brute force limited to 20 vertices");
    let adjacent = |u: usize, v: usize| adjacency[u].binary_search(&v).is_ok();
    let is_kplex = |mask: u64| {
        (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| {
            let missing = (0..n)
                .filter(|&u| mask >> u & 1 == 1 && (u == v || !adjacent(u, v)))
                .count();
            missing <= k as usize
        })
    };
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if !is_kplex(mask) {
            continue;
        }
        let maximal = (0..n)
            .filter(|&v| mask >> v & 1 == 0)
            .all(|v| !is_kplex(mask | 1 << v));
        if maximal {
            out.push((0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}
