//! Lexing and parsing of DriftScript source.
//!
//! The frontend turns raw text into a flat token stream and then into a
//! tree of atoms and lists. It knows nothing about sentence keywords,
//! copulas, or quoting rules; those live in codegen. The only vocabulary
//! decision made here is structural: parentheses, string literals,
//! keywords (a leading `:`), comments, and symbols.

mod lexer;
mod parser;

pub use lexer::{escape_string_content, tokenize};
pub use parser::parse;

use crate::diag::SourcePos;

/// Hard cap on tokens per compile call.
pub const MAX_TOKENS: usize = 1024;
/// Hard cap on AST nodes (atoms plus lists) per compile call.
pub const MAX_NODES: usize = 2048;
/// Hard cap on children of a single list.
pub const MAX_CHILDREN: usize = 16;

/// What a token is, with its text where applicable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    LParen,
    RParen,
    /// Option keyword such as `:now`; the text keeps the leading colon.
    Keyword(String),
    /// String literal; the text is the content with escapes resolved.
    String(String),
    /// Any other run of non-delimiter characters.
    Symbol(String),
}

/// A token plus the position of its first character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: SourcePos,
}

/// Parsed form: either a leaf atom or a list of child nodes.
///
/// `quoted` records whether the atom came from a string literal; codegen
/// uses it to enforce the quoting rules. Keywords stay atoms with their
/// leading colon so the parser needs no keyword table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AstNode {
    Atom {
        value: String,
        quoted: bool,
        pos: SourcePos,
    },
    List {
        children: Vec<AstNode>,
        pos: SourcePos,
    },
}

impl AstNode {
    pub fn pos(&self) -> SourcePos {
        match self {
            AstNode::Atom { pos, .. } => *pos,
            AstNode::List { pos, .. } => *pos,
        }
    }
}
