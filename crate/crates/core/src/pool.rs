//! Run-length encoded non-neighbor counters.
//!
//! For each vertex the pool stores how many of its non-neighbors lie in the
//! current plex vertex set, per frame, as maximal runs of equal count. Rows
//! are shared copy-on-write, so cloning a pool for a child call costs one
//! pointer per vertex and only rows touched by the child are rebuilt.

use std::sync::Arc;

use crate::graph::Vertex;
use crate::interval::{Interval, IntervalSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub frames: Interval,
    pub count: u32,
}

#[derive(Clone, Debug)]
pub struct Pool {
    last_frame: u32,
    // None: zero everywhere
    rows: Vec<Option<Arc<Vec<Run>>>>,
}

impl Pool {
    /// All counters zero over frames `1..=last_frame`.
    pub fn zeroed(vertex_count: usize, last_frame: u32) -> Self {
        Pool {
            last_frame,
            rows: vec![None; vertex_count],
        }
    }

    pub fn last_frame(&self) -> u32 {
        self.last_frame
    }

    pub fn count(&self, v: Vertex, frame: u32) -> u32 {
        match &self.rows[v as usize] {
            None => 0,
            Some(runs) => {
                let i = runs.partition_point(|r| r.frames.end() < frame);
                runs.get(i).map_or(0, |r| r.count)
            }
        }
    }

    /// The runs of `v`, partitioning the whole frame domain.
    pub fn runs(&self, v: Vertex) -> Vec<Run> {
        match &self.rows[v as usize] {
            None => vec![Run {
                frames: Interval::new(1, self.last_frame),
                count: 0,
            }],
            Some(runs) => runs.as_ref().clone(),
        }
    }

    pub fn run_count(&self, v: Vertex) -> usize {
        self.rows[v as usize].as_ref().map_or(1, |r| r.len())
    }

    /// Adds one to every frame of `v` in `frames` and returns the frames where
    /// the new count equals `threshold`.
    pub fn increment(&mut self, v: Vertex, frames: &IntervalSet, threshold: u32) -> IntervalSet {
        if frames.is_empty() {
            return IntervalSet::empty();
        }
        let zero = [Run {
            frames: Interval::new(1, self.last_frame),
            count: 0,
        }];
        let old: &[Run] = match &self.rows[v as usize] {
            None => &zero,
            Some(r) => r.as_slice(),
        };
        let cuts = frames.intervals();
        let mut out: Vec<Run> = Vec::with_capacity(old.len() + 2 * cuts.len());
        let mut hit: Vec<Interval> = Vec::new();
        let push = |out: &mut Vec<Run>, frames: Interval, count: u32| {
            if let Some(last) = out.last_mut() {
                if last.count == count && last.frames.end() + 1 == frames.start() {
                    last.frames = Interval::new(last.frames.start(), frames.end());
                    return;
                }
            }
            out.push(Run { frames, count });
        };

        let mut j = 0;
        for run in old {
            let mut cur = run.frames.start();
            let end = run.frames.end();
            while j < cuts.len() && cuts[j].end() < cur {
                j += 1;
            }
            let mut k = j;
            while cur <= end && k < cuts.len() && cuts[k].start() <= end {
                let c = cuts[k];
                if c.start() > cur {
                    push(&mut out, Interval::new(cur, c.start() - 1), run.count);
                    cur = c.start();
                }
                let piece_end = c.end().min(end);
                let piece = Interval::new(cur, piece_end);
                let count = run.count + 1;
                if count == threshold {
                    match hit.last_mut() {
                        Some(last) if last.end() + 1 == piece.start() => {
                            *last = Interval::new(last.start(), piece.end())
                        }
                        _ => hit.push(piece),
                    }
                }
                push(&mut out, piece, count);
                cur = piece_end + 1;
                if c.end() <= end {
                    k += 1;
                } else {
                    break;
                }
            }
            if cur <= end {
                push(&mut out, Interval::new(cur, end), run.count);
            }
            j = k;
        }
        self.rows[v as usize] = Some(Arc::new(out));
        IntervalSet::from_sorted_unchecked(hit)
    }

    /// Checks that every row partitions the domain into maximal runs.
    pub fn is_well_formed(&self) -> bool {
        self.rows.iter().flatten().all(|runs| {
            runs.first().is_some_and(|r| r.frames.start() == 1)
                && runs
                    .last()
                    .is_some_and(|r| r.frames.end() == self.last_frame)
                && runs.windows(2).all(|w| {
                    w[0].frames.end() + 1 == w[1].frames.start() && w[0].count != w[1].count
                })
        })
    }
}
