use thiserror::Error;

/// Errors produced while reading the `digraph n` / `graph n` text formats.
///
/// Each malformed-input condition gets its own variant so callers (and
/// tests) can distinguish a loop from a duplicate from a range violation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line (expected `{expected} <n>`)")]
    MissingHeader { expected: &'static str },
    #[error("line {line}: bad header `{text}` (expected `{expected} <n>`)")]
    BadHeader {
        line: usize,
        text: String,
        expected: &'static str,
    },
    #[error("line {line}: header declares `{found}` input where `{expected}` was expected")]
    WrongKind {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("line {line}: expected two vertex labels, got `{text}`")]
    BadPair { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop at vertex {vertex} is not allowed")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate {what} ({a}, {b})")]
    Duplicate {
        line: usize,
        what: &'static str,
        a: usize,
        b: usize,
    },
}
