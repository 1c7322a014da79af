#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tkplex::oracle::FrameAdjacency;
use tkplex::plex::{CallObserver, CallState};
use tkplex::{
    enumerate_maximal_plexes, parse_edge_list, IntervalSet, ParseOptions, PlexRecord, RunStats,
    SearchConfig, TemporalGraph, Vertex,
};

pub const TRIAD: &str = "1 b c\n2 a b\n4 a c\n5 b c\n6 a b\n6 a c\n6 b c\n";

pub fn triad() -> TemporalGraph {
    parse_edge_list(TRIAD, &ParseOptions::default()).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, lifetime: u32, density: f64) -> TemporalGraph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            for t in 1..=lifetime {
                if rng.gen_bool(density) {
                    edges.push((u, v, t));
                }
            }
        }
    }
    TemporalGraph::from_indexed_edges(n, lifetime, edges).unwrap()
}

pub const DENSITIES: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];

/// Random graphs with 2..=6 vertices and lifetime 3..=8, densities cycled
/// through [`DENSITIES`]. Edgeless draws are redrawn; the edgeless case has
/// its own closed form.
pub fn sweep_corpus(seed: u64, count: usize) -> Vec<TemporalGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let density = DENSITIES[i % DENSITIES.len()];
            loop {
                let n = rng.gen_range(2..=6);
                let lifetime = rng.gen_range(3..=8);
                let g = random_graph(&mut rng, n, lifetime, density);
                if g.edge_count() > 0 {
                    return g;
                }
            }
        })
        .collect()
}

pub fn run(graph: &TemporalGraph, config: &SearchConfig) -> (BTreeSet<PlexRecord>, RunStats) {
    let mut out: Vec<PlexRecord> = Vec::new();
    let stats = enumerate_maximal_plexes(graph, config, &mut out).unwrap();
    let set: BTreeSet<PlexRecord> = out.iter().cloned().collect();
    assert_eq!(set.len(), out.len(), "duplicate emission");
    (set, stats)
}

pub fn oracle_set(graph: &TemporalGraph, delta: u32, k: u32) -> BTreeSet<PlexRecord> {
    tkplex::oracle::enumerate_all_maximal(graph, delta, k)
        .unwrap()
        .plexes
        .into_iter()
        .collect()
}

fn runs_of(points: impl IntoIterator<Item = u32>) -> IntervalSet {
    IntervalSet::from_points(points)
}

/// Recomputes the pool, candidate and exclusion sets of every call from the
/// brute-force adjacency and records any disagreement.
pub struct InvariantChecker {
    adj: FrameAdjacency,
    n: usize,
    k: u32,
    seen_calls: HashSet<(Vec<Vertex>, IntervalSet)>,
    seen_plexes: HashSet<(Vec<Vertex>, u32, u32)>,
    pub calls: u64,
    pub violations: Vec<String>,
}

impl InvariantChecker {
    pub fn new(graph: &TemporalGraph, delta: u32, k: u32) -> Self {
        InvariantChecker {
            adj: FrameAdjacency::new(graph, delta),
            n: graph.vertex_count(),
            k,
            seen_calls: HashSet::new(),
            seen_plexes: HashSet::new(),
            calls: 0,
            violations: Vec::new(),
        }
    }

    fn fail(&mut self, what: String) {
        if self.violations.len() < 20 {
            self.violations.push(what);
        }
    }
}

impl CallObserver for InvariantChecker {
    fn on_call(&mut self, s: &CallState<'_>) {
        self.calls += 1;
        let mut plex = s.plex.to_vec();
        plex.sort_unstable();

        // pool equality
        for &c in &plex {
            for t in s.lifetime.points() {
                let want = self.adj.missing_in(c, &plex, t) as u32;
                if s.pool.count(c, t) != want {
                    self.fail(format!(
                        "pool: C={plex:?} member {c} frame {t}: {} != {want}",
                        s.pool.count(c, t)
                    ));
                }
            }
        }
        for (w, frames) in s.candidates.iter().chain(s.excluded.iter()) {
            for t in frames.points() {
                let want = self.adj.missing_in(w, &plex, t) as u32;
                if s.pool.count(w, t) != want {
                    self.fail(format!(
                        "pool: C={plex:?} tracked {w} frame {t}: {} != {want}",
                        s.pool.count(w, t)
                    ));
                }
            }
        }
        if !s.pool.is_well_formed() {
            self.fail(format!("pool: C={plex:?} malformed runs"));
        }

        // every interval of the lifetime is a maximal feasible run for C
        let feasible = runs_of(self.adj.feasible_frames(&plex, self.k));
        for iv in s.lifetime.iter() {
            if !feasible.has_member(iv) {
                self.fail(format!(
                    "lifetime: C={plex:?} interval {iv} not time-maximal"
                ));
            }
        }

        // P ∪ X holds exactly the time-maximal extensions inside the lifetime
        for v in 0..self.n as Vertex {
            if plex.contains(&v) {
                if s.candidates.contains(v) || s.excluded.contains(v) {
                    self.fail(format!("sets: C={plex:?} member {v} still tracked"));
                }
                continue;
            }
            if s.candidates.contains(v) && s.excluded.contains(v) {
                self.fail(format!("sets: C={plex:?} vertex {v} in both P and X"));
            }
            let mut grown = plex.clone();
            grown.push(v);
            let want = runs_of(
                s.lifetime
                    .points()
                    .filter(|&t| self.adj.feasible(&grown, self.k, t)),
            );
            let got = s
                .candidates
                .get(v)
                .or_else(|| s.excluded.get(v))
                .cloned()
                .unwrap_or_default();
            if got != want {
                self.fail(format!(
                    "sets: C={plex:?} vertex {v}: tracked {got}, expected {want}"
                ));
            }
        }

        // call uniqueness
        if !self.seen_calls.insert((plex.clone(), s.lifetime.clone())) {
            self.fail(format!("repeat call: C={plex:?} lifetime {}", s.lifetime));
        }
        for iv in s.lifetime.iter() {
            if !self
                .seen_plexes
                .insert((plex.clone(), iv.start(), iv.end()))
            {
                self.fail(format!("repeat plex: C={plex:?} interval {iv}"));
            }
        }
    }
}

/// Frames `1..=30` as bits of a `u32`; bit `t` stands for frame `t`.
pub const BITSET_SPAN: u32 = 30;
pub const BITSET_FULL: u32 = ((1u32 << BITSET_SPAN) - 1) << 1;

pub fn set_to_mask(set: &IntervalSet) -> u32 {
    set.points().fold(0, |m, t| m | 1 << t)
}

pub fn mask_to_points(mask: u32) -> Vec<u32> {
    (1..=BITSET_SPAN).filter(|t| mask >> t & 1 == 1).collect()
}

/// Number of maximal runs of set bits.
pub fn mask_runs(mask: u32) -> usize {
    (mask & !(mask << 1)).count_ones() as usize
}

/// A random interval set inside `1..=30` built from up to `parts` arbitrary,
/// possibly overlapping or touching, intervals.
pub fn random_set(rng: &mut impl Rng, parts: usize) -> IntervalSet {
    let count = rng.gen_range(0..=parts);
    IntervalSet::from_intervals((0..count).map(|_| {
        let a = rng.gen_range(1..=BITSET_SPAN);
        let b = rng.gen_range(a..=(a + 6).min(BITSET_SPAN));
        tkplex::Interval::new(a, b)
    }))
}

/// Checks union, intersection, difference, coverage and overlap of `a` and
/// `b` against bit operations, returning a description of the first mismatch.
pub fn check_against_bitset(a: &IntervalSet, b: &IntervalSet) -> Result<(), String> {
    let (ma, mb) = (set_to_mask(a), set_to_mask(b));
    let cases = [
        ("union", a.union(b), ma | mb),
        ("intersect", a.intersect(b), ma & mb),
        ("minus", a.minus(b), ma & !mb),
    ];
    for (name, got, want) in cases {
        if !got.is_canonical() || set_to_mask(&got) != want || got.len() != mask_runs(want) {
            return Err(format!("{name}({a}, {b}) = {got}"));
        }
    }
    if a.covers_set(b) != (mb & !ma == 0) {
        return Err(format!("covers_set({a}, {b})"));
    }
    if a.intersects(b) != (ma & mb != 0) {
        return Err(format!("intersects({a}, {b})"));
    }
    Ok(())
}
