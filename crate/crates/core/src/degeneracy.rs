//! Δ-slice degeneracy and the time-maximal plex count bound.

use num_bigint::BigUint;

use crate::frames::FrameDomain;
use crate::graph::{TemporalGraph, Vertex};
use crate::par::{self, Execution};

/// Degeneracy of a simple graph given as an edge list over arbitrary vertex
/// ids, by bucket-queue minimum-degree peeling. Duplicate edges are ignored.
pub fn degeneracy_of_edges(edges: &[(Vertex, Vertex)]) -> u32 {
    if edges.is_empty() {
        return 0;
    }
    let mut pairs: Vec<(Vertex, Vertex)> = edges
        .iter()
        .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
        .filter(|(u, v)| u != v)
        .collect();
    pairs.sort_unstable();
    pairs.dedup();

    let mut ids: Vec<Vertex> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let n = ids.len();
    let local = |v: Vertex| ids.binary_search(&v).unwrap();

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &pairs {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);

    // bucket sort by degree; pos/vert/bin layout as in Batagelj–Zaversnik
    let mut bin = vec![0usize; max_deg + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[degree[v]];
        vert[pos[v]] = v;
        bin[degree[v]] += 1;
    }
    for d in (1..=max_deg).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    let mut best = 0;
    for i in 0..n {
        let v = vert[i];
        best = best.max(degree[v]);
        for &u in &adj[v] {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    best as u32
}

/// Degeneracy of the static graph of frame `i`.
pub fn frame_degeneracy(graph: &TemporalGraph, domain: FrameDomain, i: u32) -> u32 {
    let w = domain.window(i);
    let edges: Vec<(Vertex, Vertex)> = graph
        .edges_between(w.start(), w.end())
        .iter()
        .map(|e| (e.u, e.v))
        .collect();
    degeneracy_of_edges(&edges)
}

/// Maximum over all frames of the frame graph's degeneracy.
pub fn delta_slice_degeneracy(graph: &TemporalGraph, domain: FrameDomain) -> u32 {
    delta_slice_degeneracy_with(graph, domain, Execution::default())
}

pub fn delta_slice_degeneracy_with(
    graph: &TemporalGraph,
    domain: FrameDomain,
    exec: Execution,
) -> u32 {
    par::max_over(exec, 1, domain.last_frame(), |i| {
        frame_degeneracy(graph, domain, i)
    })
}

/// Degeneracy of the union of all snapshots.
pub fn static_degeneracy(graph: &TemporalGraph) -> u32 {
    let edges: Vec<(Vertex, Vertex)> = graph.edges().iter().map(|e| (e.u, e.v)).collect();
    degeneracy_of_edges(&edges)
}

/// `n · C(n,k) · 2^(d+k) · min(m, ω)`, the bound on the number of
/// time-maximal Δ-k-plexes for a graph of Δ-slice degeneracy `d`.
pub fn plex_count_upper_bound(n: u64, k: u32, d: u32, m: u64, lifetime: u64) -> BigUint {
    let binom = binomial(n, k as u64);
    BigUint::from(n)
        * binom
        * (BigUint::from(1u32) << (d as u64 + k as u64))
        * BigUint::from(m.min(lifetime))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
