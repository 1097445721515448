//! Error and diagnostic types shared across the crate.

use thiserror::Error;

/// A parse or well-formedness problem, anchored to a source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// 1-based line number.
    pub line: u32,
    /// 1-based column number.
    pub col: u32,
    pub message: String,
}

impl Diagnostic {
    pub fn new(line: u32, col: u32, message: impl Into<String>) -> Self {
        Diagnostic {
            line,
            col,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

/// Errors raised while building or reducing configurations.
#[derive(Debug, Error)]
pub enum RuntimeError {
    #[error("entity `{0}` is not defined")]
    UndefinedEntity(String),
    #[error("entity `{entity}` expects {expected} argument(s), got {got}")]
    ArityMismatch {
        entity: String,
        expected: usize,
        got: usize,
    },
    #[error("channel `{0}` used but not declared")]
    UndeclaredChannel(String),
    #[error("region `{0}` is not defined")]
    UndefinedRegion(String),
    #[error("a timed configuration may not contain another timed configuration")]
    NestedTimer,
    #[error("could not place initial instance of `{entity}` inside region `{region}` after {attempts} attempts")]
    PlacementInfeasible {
        entity: String,
        region: String,
        attempts: u64,
    },
    #[error("run configuration requires at least one stop condition (t_max or step_max)")]
    NoStopCondition,
    #[error("substitution arity mismatch: {params} parameter(s) vs {args} argument(s)")]
    SubstitutionArity { params: usize, args: usize },
}

/// I/O and format errors for trace files.
#[derive(Debug, Error)]
pub enum TraceError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed trace file: {0}")]
    Format(String),
}
