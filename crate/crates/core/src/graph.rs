//! Temporal graph model and edge-list ingestion.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::GraphError;

/// Dense vertex index assigned at ingestion.
pub type Vertex = u32;
/// Normalized time step, `1..=lifetime`.
pub type Time = u32;

/// An undirected edge `{u, v}` present at time step `t`; always `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalEdge {
    pub t: Time,
    pub u: Vertex,
    pub v: Vertex,
}

impl TemporalEdge {
    pub fn new(u: Vertex, v: Vertex, t: Time) -> Self {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        TemporalEdge { t, u, v }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    labels: Vec<String>,
    edges: Vec<TemporalEdge>,
    lifetime: Time,
}

impl TemporalGraph {
    /// Validates and canonicalizes the edge list: endpoints in range, no
    /// self-loops, timestamps within `1..=lifetime`. Duplicates are dropped
    /// and edges end up sorted by time.
    pub fn new<I>(labels: Vec<String>, lifetime: Time, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Time)>,
    {
        let n = labels.len() as u32;
        let mut out = Vec::new();
        for (u, v, t) in edges {
            let reason = if u == v {
                Some("self-loop")
            } else if u >= n || v >= n {
                Some("endpoint out of range")
            } else if t == 0 || t > lifetime {
                Some("timestamp outside lifetime")
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(GraphError::InvalidEdge { u, v, t, reason });
            }
            out.push(TemporalEdge::new(u, v, t));
        }
        if lifetime == 0 {
            return Err(GraphError::EmptyInput);
        }
        out.sort_unstable();
        out.dedup();
        Ok(TemporalGraph {
            labels,
            edges: out,
            lifetime,
        })
    }

    /// Graph on `n` vertices labelled `0..n` with no edges.
    pub fn edgeless(n: usize, lifetime: Time) -> Self {
        TemporalGraph {
            labels: (0..n).map(|i| i.to_string()).collect(),
            edges: Vec::new(),
            lifetime: lifetime.max(1),
        }
    }

    /// Convenience constructor with labels `0..n`.
    pub fn from_indexed_edges<I>(n: usize, lifetime: Time, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Time)>,
    {
        Self::new((0..n).map(|i| i.to_string()).collect(), lifetime, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn lifetime(&self) -> Time {
        self.lifetime
    }

    /// Edges sorted non-decreasing by time.
    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as Vertex)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.labels.len() as Vertex
    }

    /// Edges with timestamp in `[from, to]`.
    pub fn edges_between(&self, from: Time, to: Time) -> &[TemporalEdge] {
        let lo = self.edges.partition_point(|e| e.t < from);
        let hi = self.edges.partition_point(|e| e.t <= to);
        &self.edges[lo..hi.max(lo)]
    }

    /// Re-buckets time steps: shift so the earliest edge is at 1, then
    /// divide offsets by `resolution`.
    pub fn with_resolution(&self, resolution: u64) -> Result<Self, GraphError> {
        let raw: Vec<u64> = self.edges.iter().map(|e| e.t as u64).collect();
        let times = normalize_timestamps(&raw, resolution)?;
        let lifetime = times.iter().copied().max().unwrap_or(1);
        let edges = self.edges.iter().zip(times).map(|(e, t)| (e.u, e.v, t));
        Self::new(self.labels.clone(), lifetime, edges)
    }

    /// Renders the graph as an edge list that [`parse_edge_list`] reads
    /// back into an identical graph.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "#! lifetime {}", self.lifetime);
        s.push_str("#! vertices");
        for l in &self.labels {
            s.push(' ');
            s.push_str(l);
        }
        s.push('\n');
        for e in &self.edges {
            let _ = writeln!(s, "{} {} {}", e.t, self.label(e.u), self.label(e.v));
        }
        s
    }
}

/// Shifts raw timestamps so the minimum maps to 1, then divides every offset
/// by `resolution`, which must divide all of them.
pub fn normalize_timestamps(raw: &[u64], resolution: u64) -> Result<Vec<Time>, GraphError> {
    if resolution == 0 {
        return Err(GraphError::ZeroResolution);
    }
    let Some(&min) = raw.iter().min() else {
        return Ok(Vec::new());
    };
    raw.iter()
        .map(|&t| {
            let offset = t - min;
            if offset % resolution != 0 {
                return Err(GraphError::Indivisible { offset, resolution });
            }
            let step = offset / resolution + 1;
            Time::try_from(step).map_err(|_| GraphError::TimestampOverflow(t))
        })
        .collect()
}

/// Positions of the timestamp and the two endpoint columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnSpec {
    pub time: usize,
    pub first: usize,
    pub second: usize,
}

impl Default for ColumnSpec {
    fn default() -> Self {
        ColumnSpec {
            time: 0,
            first: 1,
            second: 2,
        }
    }
}

impl std::str::FromStr for ColumnSpec {
    type Err = String;

    /// Parses an order such as `t,u,v` or `u,v,t`; `_` marks a skipped column.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (mut time, mut first, mut second) = (None, None, None);
        for (i, name) in s.split(',').map(str::trim).enumerate() {
            let slot = match name {
                "t" => &mut time,
                "u" => &mut first,
                "v" => &mut second,
                "_" => continue,
                other => return Err(format!("unknown column name '{other}'")),
            };
            if slot.replace(i).is_some() {
                return Err(format!("column '{name}' given twice"));
            }
        }
        match (time, first, second) {
            (Some(time), Some(first), Some(second)) => Ok(ColumnSpec {
                time,
                first,
                second,
            }),
            _ => Err("column order must name t, u and v".to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParseOptions {
    pub columns: ColumnSpec,
    /// Drop repeated `(u, v, t)` lines instead of rejecting them.
    pub dedupe: bool,
    /// Skip self-loops instead of failing.
    pub skip_self_loops: bool,
    pub resolution: u64,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            columns: ColumnSpec::default(),
            dedupe: true,
            skip_self_loops: false,
            resolution: 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub lines_read: usize,
    pub skipped_self_loops: usize,
    pub duplicates_removed: usize,
}

/// Parses a whitespace-separated edge list.
///
/// Lines starting with `#` are comments, except for two directives written
/// by [`TemporalGraph::render`]: `#! vertices <label>...` declares vertices
/// (isolated ones included) and `#! lifetime <n>` fixes the lifetime. When a
/// lifetime is declared, timestamps are taken as already normalized.
pub fn parse_edge_list(text: &str, opts: &ParseOptions) -> Result<TemporalGraph, GraphError> {
    parse_edge_list_with_report(text, opts).map(|(g, _)| g)
}

pub fn parse_edge_list_with_report(
    text: &str,
    opts: &ParseOptions,
) -> Result<(TemporalGraph, ParseReport), GraphError> {
    let mut report = ParseReport::default();
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let mut lifetime: Option<Time> = None;
    let mut raw: Vec<(String, String, u64, usize)> = Vec::new();
    let mut self_loops = 0usize;
    let mut first_loop_line = 0usize;
    let width = opts
        .columns
        .time
        .max(opts.columns.first)
        .max(opts.columns.second)
        + 1;

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(directive) = line.strip_prefix("#!") {
            let mut parts = directive.split_whitespace();
            match parts.next() {
                Some("vertices") => declared.extend(parts.map(str::to_string)),
                Some("lifetime") => {
                    let value = parts.next().and_then(|s| s.parse::<Time>().ok());
                    match value {
                        Some(w) if w >= 1 => lifetime = Some(w),
                        _ => {
                            return Err(GraphError::Malformed {
                                line: lineno,
                                reason: "lifetime directive needs a positive integer".into(),
                            })
                        }
                    }
                }
                _ => {}
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        report.lines_read += 1;
        let cols: Vec<&str> = line.split_whitespace().collect();
        if cols.len() < width {
            return Err(GraphError::Malformed {
                line: lineno,
                reason: format!("expected at least {width} columns, found {}", cols.len()),
            });
        }
        let t: u64 = cols[opts.columns.time]
            .parse()
            .map_err(|_| GraphError::Malformed {
                line: lineno,
                reason: format!("invalid timestamp '{}'", cols[opts.columns.time]),
            })?;
        let (a, b) = (cols[opts.columns.first], cols[opts.columns.second]);
        if a == b {
            if self_loops == 0 {
                first_loop_line = lineno;
            }
            self_loops += 1;
            continue;
        }
        raw.push((a.to_string(), b.to_string(), t, lineno));
    }

    if self_loops > 0 && !opts.skip_self_loops {
        return Err(GraphError::SelfLoops {
            count: self_loops,
            first_line: first_loop_line,
        });
    }
    report.skipped_self_loops = self_loops;

    if raw.is_empty() && (lifetime.is_none() || declared.is_empty()) {
        return Err(GraphError::EmptyInput);
    }

    let mut labels = declared;
    for (a, b, _, _) in &raw {
        labels.insert(a.clone());
        labels.insert(b.clone());
    }
    let labels: Vec<String> = labels.into_iter().collect();
    let index: HashMap<&str, Vertex> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i as Vertex))
        .collect();

    let times: Vec<Time> = match lifetime {
        Some(_) => {
            if opts.resolution != 1 {
                // declared lifetimes are in normalized units already
                return Err(GraphError::Malformed {
                    line: 0,
                    reason: "resolution cannot be combined with a lifetime directive".into(),
                });
            }
            raw.iter()
                .map(|&(_, _, t, line)| match Time::try_from(t) {
                    Ok(t) if t >= 1 => Ok(t),
                    _ => Err(GraphError::Malformed {
                        line,
                        reason: format!("timestamp {t} outside the declared lifetime"),
                    }),
                })
                .collect::<Result<_, _>>()?
        }
        None => {
            let ts: Vec<u64> = raw.iter().map(|r| r.2).collect();
            normalize_timestamps(&ts, opts.resolution)?
        }
    };
    let last = times.iter().copied().max().unwrap_or(1);
    let lifetime = match lifetime {
        Some(w) if w < last => return Err(GraphError::LifetimeTooShort { declared: w, last }),
        Some(w) => w,
        None => last,
    };

    let mut edges: Vec<(TemporalEdge, usize)> = raw
        .iter()
        .zip(&times)
        .map(|((a, b, _, line), &t)| {
            (
                TemporalEdge::new(index[a.as_str()], index[b.as_str()], t),
                *line,
            )
        })
        .collect();
    edges.sort_unstable();
    let before = edges.len();
    if opts.dedupe {
        edges.dedup_by_key(|(e, _)| *e);
    } else if let Some(w) = edges.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(GraphError::Malformed {
            line: w[1].1,
            reason: "duplicate edge".into(),
        });
    }
    report.duplicates_removed = before - edges.len();

    let graph = TemporalGraph {
        labels,
        edges: edges.into_iter().map(|(e, _)| e).collect(),
        lifetime,
    };
    Ok((graph, report))
}
