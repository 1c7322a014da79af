//! Pivot selection and the connectedness filter.

use crate::frames::NonNeighborhoodIndex;
use crate::graph::Vertex;
use crate::interval::IntervalSet;
use crate::pairset::PairSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotChoice {
    pub pivot: Vertex,
    /// Candidates of `P` skipped in the current call, ascending.
    pub suppressed: Vec<Vertex>,
}

/// Picks a pivot from `V(P) ∪ V(X)` that is a neighbor of every member of
/// `plex` throughout its own interval set, maximizing the number of
/// suppressible candidates. A candidate `w` of `P` is suppressible when its
/// interval set lies inside the pivot's and it neighbors the pivot throughout
/// it. Ties go to the smallest vertex. Returns `None` when no vertex qualifies
/// or `P` is empty.
pub fn select_pivot(
    plex: &[Vertex],
    _lifetime: &IntervalSet,
    candidates: &PairSet,
    excluded: &PairSet,
    index: &NonNeighborhoodIndex,
) -> Option<PivotChoice> {
    if candidates.is_empty() {
        return None;
    }
    let mut pool: Vec<(Vertex, &IntervalSet)> = candidates.iter().chain(excluded.iter()).collect();
    pool.sort_unstable_by_key(|(v, _)| *v);

    let mut best: Option<(Vertex, Vec<Vertex>)> = None;
    for &(p, p_frames) in &pool {
        let attached = plex
            .iter()
            .all(|&c| !p_frames.intersects(index.non_neighbor_frames(p, c)));
        if !attached {
            continue;
        }
        let covered: Vec<Vertex> = candidates
            .iter()
            .filter(|&(w, w_frames)| {
                w != p
                    && p_frames.covers_set(w_frames)
                    && !w_frames.intersects(index.non_neighbor_frames(p, w))
            })
            .map(|(w, _)| w)
            .collect();
        if best.as_ref().is_none_or(|(_, b)| covered.len() > b.len()) {
            best = Some((p, covered));
        }
    }
    best.map(|(pivot, suppressed)| PivotChoice { pivot, suppressed })
}

/// The candidates with at least one edge to some member of `plex` inside a
/// frame lying in both the candidate's interval set and `lifetime`. With an
/// empty plex every candidate is returned.
pub fn connected_candidates(
    candidates: &PairSet,
    plex: &[Vertex],
    lifetime: &IntervalSet,
    index: &NonNeighborhoodIndex,
) -> PairSet {
    if plex.is_empty() {
        return candidates.clone();
    }
    candidates.restrict_vertices(|w| {
        let frames = candidates
            .get(w)
            .expect("vertex taken from the set")
            .intersect(lifetime);
        plex.iter().any(|&c| {
            // any frame of `frames` outside the non-neighbor set holds an edge
            !frames.is_empty() && !index.non_neighbor_frames(w, c).covers_set(&frames)
        })
    })
}
