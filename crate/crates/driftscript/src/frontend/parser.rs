//! Parser: tokens in, atom/list trees out, limits enforced.

use super::{AstNode, Token, TokenKind, MAX_CHILDREN, MAX_NODES};
use crate::diag::{Diagnostic, SourcePos, Stage};

struct Parser<'a> {
    tokens: &'a [Token],
    i: usize,
    nodes: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.i)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.i);
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn error(&self, pos: SourcePos, message: impl Into<String>) -> Diagnostic {
        Diagnostic::new(Stage::Parse, pos, message)
    }

    /// Counts one node against the per-call budget.
    fn charge_node(&mut self, pos: SourcePos) -> Result<(), Diagnostic> {
        self.nodes += 1;
        if self.nodes > MAX_NODES {
            return Err(self.error(pos, format!("too many nodes (max {})", MAX_NODES)));
        }
        Ok(())
    }

    fn form(&mut self) -> Result<AstNode, Diagnostic> {
        let tok = self.bump().expect("caller checked for a token");
        match &tok.kind {
            TokenKind::LParen => {
                self.charge_node(tok.pos)?;
                let mut children = Vec::new();
                loop {
                    match self.peek() {
                        None => return Err(self.error(tok.pos, "unclosed '('")),
                        Some(t) if t.kind == TokenKind::RParen => {
                            self.bump();
                            return Ok(AstNode::List {
                                children,
                                pos: tok.pos,
                            });
                        }
                        Some(t) => {
                            if children.len() == MAX_CHILDREN {
                                return Err(self.error(
                                    t.pos,
                                    format!("too many list elements (max {})", MAX_CHILDREN),
                                ));
                            }
                            let child = self.form()?;
                            children.push(child);
                        }
                    }
                }
            }
            TokenKind::RParen => Err(self.error(tok.pos, "unexpected ')'")),
            TokenKind::Keyword(s) => {
                self.charge_node(tok.pos)?;
                Ok(AstNode::Atom {
                    value: s.clone(),
                    quoted: false,
                    pos: tok.pos,
                })
            }
            TokenKind::Symbol(s) => {
                self.charge_node(tok.pos)?;
                Ok(AstNode::Atom {
                    value: s.clone(),
                    quoted: false,
                    pos: tok.pos,
                })
            }
            TokenKind::String(s) => {
                self.charge_node(tok.pos)?;
                Ok(AstNode::Atom {
                    value: s.clone(),
                    quoted: true,
                    pos: tok.pos,
                })
            }
        }
    }
}

/// Builds the top-level form list from a token stream.
///
/// Bare atoms are legal here; codegen rejects them with a clearer message
/// than the grammar could give. Structural errors (stray or missing
/// parentheses, oversized lists, node budget) are reported at the
/// offending token.
pub fn parse(tokens: &[Token]) -> Result<Vec<AstNode>, Diagnostic> {
    let mut p = Parser { tokens, i: 0, nodes: 0 };
    let mut forms = Vec::new();
    while p.peek().is_some() {
        forms.push(p.form()?);
    }
    Ok(forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::tokenize;

    fn parse_str(source: &str) -> Result<Vec<AstNode>, Diagnostic> {
        parse(&tokenize(source).unwrap())
    }

    fn atom(value: &str, quoted: bool, line: u32, col: u32) -> AstNode {
        AstNode::Atom {
            value: value.into(),
            quoted,
            pos: SourcePos::new(line, col),
        }
    }

    #[test]
    fn parses_a_flat_list() {
        let forms = parse_str("(believe \"bird\" :now)").unwrap();
        assert_eq!(
            forms,
            vec![AstNode::List {
                children: vec![
                    atom("believe", false, 1, 2),
                    atom("bird", true, 1, 10),
                    atom(":now", false, 1, 17),
                ],
                pos: SourcePos::new(1, 1),
            }]
        );
    }

    #[test]
    fn parses_nested_lists() {
        let forms = parse_str("(a (b (c)))").unwrap();
        match &forms[0] {
            AstNode::List { children, .. } => {
                assert_eq!(children.len(), 2);
                match &children[1] {
                    AstNode::List { children, pos } => {
                        assert_eq!(*pos, SourcePos::new(1, 4));
                        assert!(matches!(&children[1], AstNode::List { .. }));
                    }
                    other => panic!("expected list, got {:?}", other),
                }
            }
            other => panic!("expected list, got {:?}", other),
        }
    }

    #[test]
    fn multiple_top_level_forms_in_order() {
        let forms = parse_str("(a) b (c)").unwrap();
        assert_eq!(forms.len(), 3);
        assert_eq!(forms[1], atom("b", false, 1, 5));
    }

    #[test]
    fn bare_atoms_parse_fine() {
        let forms = parse_str("\"x\"").unwrap();
        assert_eq!(forms, vec![atom("x", true, 1, 1)]);
    }

    #[test]
    fn empty_input_parses_to_nothing() {
        assert!(parse_str("").unwrap().is_empty());
    }

    #[test]
    fn stray_rparen_is_reported_where_it_sits() {
        let err = parse_str("(a) )").unwrap_err();
        assert_eq!(err.stage, Stage::Parse);
        assert_eq!(err.message, "unexpected ')'");
        assert_eq!(err.pos, SourcePos::new(1, 5));
    }

    #[test]
    fn unclosed_list_points_at_its_open_paren() {
        let err = parse_str("(a (b \"c\"").unwrap_err();
        assert_eq!(err.message, "unclosed '('");
        assert_eq!(err.pos, SourcePos::new(1, 4));
    }

    #[test]
    fn sixteen_children_are_accepted() {
        let inner = "x ".repeat(16);
        let forms = parse_str(&format!("({})", inner.trim_end())).unwrap();
        match &forms[0] {
            AstNode::List { children, .. } => assert_eq!(children.len(), 16),
            other => panic!("expected list, got {:?}", other),
        }
    }

    #[test]
    fn seventeenth_child_is_rejected_at_its_own_position() {
        let inner = "x ".repeat(17);
        let err = parse_str(&format!("({})", inner.trim_end())).unwrap_err();
        assert_eq!(err.message, "too many list elements (max 16)");
        // '(' then 16 children at cols 2,4,..,32; the 17th starts at col 34
        assert_eq!(err.pos, SourcePos::new(1, 34));
    }

    #[test]
    fn node_budget_counts_atoms_and_lists() {
        // The token limit keeps real sources under the node budget, so feed
        // the parser a synthetic stream: n bare atoms are n nodes.
        let toks = |n: usize| -> Vec<Token> {
            (0..n)
                .map(|k| Token {
                    kind: TokenKind::Symbol(format!("s{}", k)),
                    pos: SourcePos::new(1, k as u32 + 1),
                })
                .collect()
        };
        assert_eq!(parse(&toks(MAX_NODES)).unwrap().len(), MAX_NODES);

        let err = parse(&toks(MAX_NODES + 1)).unwrap_err();
        assert_eq!(err.message, "too many nodes (max 2048)");
        assert_eq!(err.pos, SourcePos::new(1, MAX_NODES as u32 + 1));
    }
}
