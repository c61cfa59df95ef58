//! Tokenizer: characters in, tokens out, positions exact.

use super::{Token, TokenKind, MAX_TOKENS};
use crate::diag::{Diagnostic, SourcePos, Stage};

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(source: &'a str) -> Self {
        Lexer {
            chars: source.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn pos(&self) -> SourcePos {
        SourcePos::new(self.line, self.col)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    /// Consumes one character, advancing line/col. Tabs count one column.
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, pos: SourcePos, message: impl Into<String>) -> Diagnostic {
        Diagnostic::new(Stage::Tokenize, pos, message)
    }
}

fn is_symbol_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '(' | ')' | '"' | ';')
}

/// Splits `source` into tokens or reports the first lexical error.
///
/// Comments run from `;` to end of line. String escapes are limited to
/// `\"` and `\\`; anything else after a backslash is an error at the
/// backslash. An unterminated string is reported at its opening quote.
pub fn tokenize(source: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut lx = Lexer::new(source);
    let mut tokens: Vec<Token> = Vec::new();

    loop {
        let c = match lx.peek() {
            Some(c) => c,
            None => return Ok(tokens),
        };

        if c.is_whitespace() {
            lx.bump();
            continue;
        }
        if c == ';' {
            while let Some(c) = lx.peek() {
                if c == '\n' {
                    break;
                }
                lx.bump();
            }
            continue;
        }

        let start = lx.pos();
        let kind = match c {
            '(' => {
                lx.bump();
                TokenKind::LParen
            }
            ')' => {
                lx.bump();
                TokenKind::RParen
            }
            '"' => {
                lx.bump();
                let mut content = String::new();
                loop {
                    match lx.peek() {
                        None => return Err(lx.error(start, "unterminated string")),
                        Some('"') => {
                            lx.bump();
                            break;
                        }
                        Some('\\') => {
                            let esc_pos = lx.pos();
                            lx.bump();
                            match lx.peek() {
                                Some('"') | Some('\\') => {
                                    content.push(lx.bump().unwrap());
                                }
                                Some(_) => {
                                    return Err(lx.error(esc_pos, "invalid escape sequence"))
                                }
                                None => return Err(lx.error(start, "unterminated string")),
                            }
                        }
                        Some(_) => content.push(lx.bump().unwrap()),
                    }
                }
                TokenKind::String(content)
            }
            ':' => {
                lx.bump();
                let mut text = String::from(":");
                while let Some(c) = lx.peek() {
                    if !is_symbol_char(c) {
                        break;
                    }
                    text.push(lx.bump().unwrap());
                }
                if text.len() < 2 {
                    return Err(lx.error(start, "bare ':' with no identifier"));
                }
                TokenKind::Keyword(text)
            }
            _ => {
                let mut text = String::new();
                while let Some(c) = lx.peek() {
                    if !is_symbol_char(c) {
                        break;
                    }
                    text.push(lx.bump().unwrap());
                }
                TokenKind::Symbol(text)
            }
        };

        if tokens.len() == MAX_TOKENS {
            return Err(lx.error(start, format!("too many tokens (max {})", MAX_TOKENS)));
        }
        tokens.push(Token { kind, pos: start });
    }
}

/// Escapes string content for embedding between double quotes, so that
/// tokenizing the quoted result yields the original content.
pub fn escape_string_content(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            _ => out.push(c),
        }
    }
    out
}
