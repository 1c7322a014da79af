use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty input")]
    EmptyInput,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("{count} self-loop(s) encountered (first on line {first_line})")]
    SelfLoops { count: usize, first_line: usize },
    #[error("resolution must be at least 1")]
    ZeroResolution,
    #[error("timestamp offset {offset} is not divisible by resolution {resolution}")]
    Indivisible { offset: u64, resolution: u64 },
    #[error("timestamp {0} does not fit the supported range")]
    TimestampOverflow(u64),
    #[error("edge ({u},{v}) at time {t} is invalid: {reason}")]
    InvalidEdge {
        u: u32,
        v: u32,
        t: u32,
        reason: &'static str,
    },
    #[error("declared lifetime {declared} is shorter than the last timestamp {last}")]
    LifetimeTooShort { declared: u32, last: u32 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("delta too large for lifetime (delta={delta}, lifetime={lifetime})")]
    DeltaTooLarge { delta: u32, lifetime: u32 },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("cannot scale delta on a graph without edges")]
    NoEdgesForScaling,
    #[error("instance too large for the brute-force oracle ({vertices} vertices, {frames} frames; limit {max_vertices} vertices, {max_frames} frames)")]
    OracleGuard {
        vertices: usize,
        frames: u32,
        max_vertices: usize,
        max_frames: u32,
    },
}
