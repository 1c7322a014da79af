//! Sets of vertex-interval-set pairs, kept sorted by vertex.

use std::fmt;

use crate::graph::Vertex;
use crate::interval::IntervalSet;

/// At most one entry per vertex; entries never carry an empty interval set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairSet {
    entries: Vec<(Vertex, IntervalSet)>,
}

impl PairSet {
    pub fn new() -> Self {
        PairSet::default()
    }

    /// Collects pairs; later entries for the same vertex are merged by union
    /// and empty interval sets are skipped.
    pub fn from_pairs<I: IntoIterator<Item = (Vertex, IntervalSet)>>(it: I) -> Self {
        let mut out = PairSet::new();
        for (v, s) in it {
            out.merge(v, &s);
        }
        out
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(Vertex, IntervalSet)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, s)| !s.is_empty()));
        PairSet { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &IntervalSet)> + '_ {
        self.entries.iter().map(|(v, s)| (*v, s))
    }

    /// `V(X)` in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.entries.iter().map(|(v, _)| *v)
    }

    pub fn get(&self, v: Vertex) -> Option<&IntervalSet> {
        self.entries
            .binary_search_by_key(&v, |(w, _)| *w)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.get(v).is_some()
    }

    pub fn remove(&mut self, v: Vertex) -> Option<IntervalSet> {
        match self.entries.binary_search_by_key(&v, |(w, _)| *w) {
            Ok(i) => Some(self.entries.remove(i).1),
            Err(_) => None,
        }
    }

    /// `(v, 𝓘ᵥ) ⊔ Y` in place: insert, or union with the existing entry.
    pub fn merge(&mut self, v: Vertex, frames: &IntervalSet) {
        if frames.is_empty() {
            return;
        }
        match self.entries.binary_search_by_key(&v, |(w, _)| *w) {
            Ok(i) => {
                let merged = self.entries[i].1.union(frames);
                self.entries[i].1 = merged;
            }
            Err(i) => self.entries.insert(i, (v, frames.clone())),
        }
    }

    /// `X[𝓘]`: every entry intersected with `frames`.
    pub fn restrict_time(&self, frames: &IntervalSet) -> PairSet {
        let entries = self
            .entries
            .iter()
            .filter_map(|(v, s)| {
                let r = s.intersect(frames);
                (!r.is_empty()).then_some((*v, r))
            })
            .collect();
        PairSet { entries }
    }

    /// `X[V']`: entries whose vertex satisfies `keep`.
    pub fn restrict_vertices<F: Fn(Vertex) -> bool>(&self, keep: F) -> PairSet {
        let entries = self
            .entries
            .iter()
            .filter(|(v, _)| keep(*v))
            .cloned()
            .collect();
        PairSet { entries }
    }

    /// `X ⊓ Y`.
    pub fn intersect(&self, other: &PairSet) -> PairSet {
        let (a, b) = (&self.entries, &other.entries);
        let mut entries = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let r = a[i].1.intersect(&b[j].1);
                    if !r.is_empty() {
                        entries.push((a[i].0, r));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        PairSet { entries }
    }

    /// True iff some entry holds `iv` as one of its maximal intervals.
    pub fn has_exact_interval(&self, iv: &crate::interval::Interval) -> bool {
        self.entries.iter().any(|(_, s)| s.has_member(iv))
    }
}

impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, s)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}→{s}")?;
        }
        f.write_str("}")
    }
}
