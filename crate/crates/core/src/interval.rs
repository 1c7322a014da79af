//! Closed discrete intervals and canonical interval sets.
//!
//! An [`IntervalSet`] is kept sorted, pairwise disjoint and non-adjacent at
//! all times, so two sets covering the same integers are structurally equal.
//! Every binary operation is a single linear merge over both operands.

use std::fmt;

/// A closed range `[start, end]` of discrete time steps or frame indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    start: u32,
    end: u32,
}

impl Interval {
    /// Panics if `start > end`.
    pub fn new(start: u32, end: u32) -> Self {
        assert!(start <= end, "interval start {start} exceeds end {end}");
        Interval { start, end }
    }

    pub fn try_new(start: u32, end: u32) -> Option<Self> {
        (start <= end).then_some(Interval { start, end })
    }

    pub fn point(t: u32) -> Self {
        Interval { start: t, end: t }
    }

    #[inline]
    pub fn start(&self) -> u32 {
        self.start
    }

    #[inline]
    pub fn end(&self) -> u32 {
        self.end
    }

    /// Number of integers in the interval.
    #[inline]
    #[allow(clippy::len_without_is_empty)] // never empty
    pub fn len(&self) -> u32 {
        self.end - self.start + 1
    }

    #[inline]
    pub fn contains(&self, t: u32) -> bool {
        self.start <= t && t <= self.end
    }

    #[inline]
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        Interval::try_new(self.start.max(other.start), self.end.min(other.end))
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// Ordered set of pairwise disjoint, non-adjacent intervals.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

/// Appends `iv` to a sorted canonical sequence, merging it with the last
/// member when they overlap or touch. `iv.start` must not precede the last
/// member's start.
#[inline]
fn push_merged(out: &mut Vec<Interval>, iv: Interval) {
    if let Some(last) = out.last_mut() {
        if iv.start <= last.end.saturating_add(1) {
            last.end = last.end.max(iv.end);
            return;
        }
    }
    out.push(iv);
}

impl IntervalSet {
    pub const fn empty() -> Self {
        IntervalSet {
            intervals: Vec::new(),
        }
    }

    pub fn single(iv: Interval) -> Self {
        IntervalSet {
            intervals: vec![iv],
        }
    }

    /// Builds the canonical set covering the union of arbitrary intervals.
    pub fn from_intervals<I: IntoIterator<Item = Interval>>(it: I) -> Self {
        let mut v: Vec<Interval> = it.into_iter().collect();
        v.sort_unstable();
        let mut out = Vec::with_capacity(v.len());
        for iv in v {
            push_merged(&mut out, iv);
        }
        IntervalSet { intervals: out }
    }

    /// Builds the canonical set of maximal runs over a collection of points.
    pub fn from_points<I: IntoIterator<Item = u32>>(it: I) -> Self {
        Self::from_intervals(it.into_iter().map(Interval::point))
    }

    /// Wraps an already canonical sequence; checked in debug builds.
    pub(crate) fn from_sorted_unchecked(intervals: Vec<Interval>) -> Self {
        let s = IntervalSet { intervals };
        debug_assert!(s.is_canonical());
        s
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Number of maximal intervals.
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Number of covered integers.
    pub fn point_count(&self) -> u64 {
        self.intervals.iter().map(|iv| iv.len() as u64).sum()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.intervals.iter()
    }

    pub fn points(&self) -> impl Iterator<Item = u32> + '_ {
        self.intervals.iter().flat_map(|iv| iv.iter())
    }

    pub fn first(&self) -> Option<Interval> {
        self.intervals.first().copied()
    }

    pub fn last(&self) -> Option<Interval> {
        self.intervals.last().copied()
    }

    /// Checks sortedness, disjointness and non-adjacency.
    pub fn is_canonical(&self) -> bool {
        self.intervals.iter().all(|iv| iv.start <= iv.end)
            && self
                .intervals
                .windows(2)
                .all(|w| (w[0].end as u64) + 1 < w[1].start as u64)
    }

    pub fn contains_point(&self, t: u32) -> bool {
        let idx = self.intervals.partition_point(|iv| iv.end < t);
        self.intervals.get(idx).is_some_and(|iv| iv.start <= t)
    }

    /// True iff some member interval is exactly `iv`.
    pub fn has_member(&self, iv: &Interval) -> bool {
        self.intervals.binary_search(iv).is_ok()
    }

    /// `iv ⊑ self`: some member contains `iv`.
    pub fn covers_interval(&self, iv: &Interval) -> bool {
        let idx = self.intervals.partition_point(|m| m.end < iv.end);
        self.intervals
            .get(idx)
            .is_some_and(|m| m.contains_interval(iv))
    }

    /// `other ⊑ self`: every member of `other` is covered by `self`.
    pub fn covers_set(&self, other: &IntervalSet) -> bool {
        let mut j = 0;
        for iv in &other.intervals {
            while j < self.intervals.len() && self.intervals[j].end < iv.end {
                j += 1;
            }
            match self.intervals.get(j) {
                Some(m) if m.contains_interval(iv) => {}
                _ => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let (a, b) = (&self.intervals, &other.intervals);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = if j >= b.len() || (i < a.len() && a[i].start <= b[j].start) {
                i += 1;
                a[i - 1]
            } else {
                j += 1;
                b[j - 1]
            };
            push_merged(&mut out, next);
        }
        IntervalSet { intervals: out }
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let (a, b) = (&self.intervals, &other.intervals);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if let Some(iv) = a[i].intersection(&b[j]) {
                // pieces of a canonical pair never touch, so no merging needed
                out.push(iv);
            }
            if a[i].end < b[j].end {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { intervals: out }
    }

    pub fn intersect_interval(&self, iv: &Interval) -> IntervalSet {
        let lo = self.intervals.partition_point(|m| m.end < iv.start);
        let out = self.intervals[lo..]
            .iter()
            .take_while(|m| m.start <= iv.end)
            .filter_map(|m| m.intersection(iv))
            .collect();
        IntervalSet { intervals: out }
    }

    /// True iff the two sets share at least one integer.
    pub fn intersects(&self, other: &IntervalSet) -> bool {
        let (a, b) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].start <= b[j].end && b[j].start <= a[i].end {
                return true;
            }
            if a[i].end < b[j].end {
                i += 1;
            } else {
                j += 1;
            }
        }
        false
    }

    pub fn minus(&self, other: &IntervalSet) -> IntervalSet {
        if self.is_empty() || other.is_empty() {
            return self.clone();
        }
        let b = &other.intervals;
        let mut out = Vec::with_capacity(self.intervals.len() + b.len());
        let mut j = 0;
        for iv in &self.intervals {
            let mut cur = iv.start;
            while j < b.len() && b[j].end < cur {
                j += 1;
            }
            let mut k = j;
            while k < b.len() && b[k].start <= iv.end {
                if b[k].start > cur {
                    out.push(Interval::new(cur, b[k].start - 1));
                }
                if b[k].end >= iv.end {
                    cur = iv.end + 1;
                    break;
                }
                cur = b[k].end + 1;
                k += 1;
            }
            if cur <= iv.end {
                out.push(Interval::new(cur, iv.end));
            }
            // b[k] may extend into the next member of self
            j = k.min(b.len());
        }
        IntervalSet { intervals: out }
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{iv}")?;
        }
        f.write_str("}")
    }
}

impl From<Interval> for IntervalSet {
    fn from(iv: Interval) -> Self {
        IntervalSet::single(iv)
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        IntervalSet::from_intervals(iter)
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.intervals.iter()
    }
}
