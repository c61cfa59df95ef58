//! Source positions and compile diagnostics.
//!
//! Every error produced by the compiler carries the 1-based line and column
//! of the offending character, the pipeline stage that rejected the input,
//! and a single-line message. Diagnostics render as `line:col: error: message`.

use std::fmt;

/// 1-based line/column position in a source unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourcePos {
    pub line: u32,
    pub col: u32,
}

impl SourcePos {
    pub fn new(line: u32, col: u32) -> Self {
        SourcePos { line, col }
    }

    /// Position of the first character of a unit.
    pub fn start() -> Self {
        SourcePos { line: 1, col: 1 }
    }
}

impl fmt::Display for SourcePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// Pipeline stage that produced a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Tokenize,
    Parse,
    Compile,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Tokenize => "tokenize",
            Stage::Parse => "parse",
            Stage::Compile => "compile",
        };
        f.write_str(name)
    }
}

/// A single compile error with its stage, message, and source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub stage: Stage,
    pub message: String,
    pub pos: SourcePos,
}

impl Diagnostic {
    pub fn new(stage: Stage, pos: SourcePos, message: impl Into<String>) -> Self {
        Diagnostic {
            stage,
            message: message.into(),
            pos,
        }
    }
}

impl fmt::Display for Diagnostic {
    /// Renders as `line:col: error: message`, the format the CLI prints to stderr.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: error: {}", self.pos, self.message)
    }
}

impl std::error::Error for Diagnostic {}
