//! Term compilation: atoms, copula forms, connector forms, and `call`.

use super::vars::{VarClass, VarScope};
use crate::diag::{Diagnostic, SourcePos, Stage};
use crate::frontend::AstNode;

fn err(pos: SourcePos, message: impl Into<String>) -> Diagnostic {
    Diagnostic::new(Stage::Compile, pos, message)
}

/// Copula heads and their Narsese operators. All take exactly two terms
/// and render as `<lhs op rhs>`.
const COPULAS: [(&str, &str); 6] = [
    ("inherit", "-->"),
    ("similar", "<->"),
    ("imply", "==>"),
    ("predict", "=/>"),
    ("equiv", "<=>"),
    ("instance", "|->"),
];

/// How many elements a connector accepts.
#[derive(Clone, Copy)]
enum Arity {
    Exactly(usize),
    TwoOrThree,
    AtLeastOne,
}

impl Arity {
    fn accepts(self, n: usize) -> bool {
        match self {
            Arity::Exactly(k) => n == k,
            Arity::TwoOrThree => n == 2 || n == 3,
            Arity::AtLeastOne => n >= 1,
        }
    }

    fn describe(self) -> String {
        match self {
            Arity::Exactly(1) => "takes 1 element".into(),
            Arity::Exactly(k) => format!("takes {} elements", k),
            Arity::TwoOrThree => "takes 2-3 elements".into(),
            Arity::AtLeastOne => "takes at least 1 element".into(),
        }
    }
}

/// How a connector renders once its arity checks out.
enum Shape {
    /// `(lhs op rhs)`, single spaces.
    InfixBinary(&'static str),
    /// `(a &/ b)` or left-nested `((a &/ b) &/ c)`.
    Seq,
    /// `(-- x)`.
    Negation,
    /// `(*, a, b)`.
    Product,
    /// `{a, b}` or `[a, b]`.
    Set(char, char),
}

fn connector(head: &str) -> Option<(Arity, Shape)> {
    let entry = match head {
        "seq" => (Arity::TwoOrThree, Shape::Seq),
        "and" => (Arity::Exactly(2), Shape::InfixBinary("&&")),
        "or" => (Arity::Exactly(2), Shape::InfixBinary("||")),
        "not" => (Arity::Exactly(1), Shape::Negation),
        "product" => (Arity::AtLeastOne, Shape::Product),
        "ext-set" => (Arity::AtLeastOne, Shape::Set('{', '}')),
        "int-set" => (Arity::AtLeastOne, Shape::Set('[', ']')),
        "ext-inter" => (Arity::Exactly(2), Shape::InfixBinary("&")),
        "int-inter" => (Arity::Exactly(2), Shape::InfixBinary("|")),
        "ext-diff" => (Arity::Exactly(2), Shape::InfixBinary("-")),
        "int-diff" => (Arity::Exactly(2), Shape::InfixBinary("~")),
        "ext-image1" => (Arity::Exactly(2), Shape::InfixBinary("/1")),
        "ext-image2" => (Arity::Exactly(2), Shape::InfixBinary("/2")),
        "int-image1" => (Arity::Exactly(2), Shape::InfixBinary("\\1")),
        "int-image2" => (Arity::Exactly(2), Shape::InfixBinary("\\2")),
        _ => return None,
    };
    Some(entry)
}

fn forbidden_in_concept_name(c: char) -> bool {
    // The double quote is banned so that emitted Narsese never needs an
    // escape mechanism: payload text is safe to print verbatim.
    c.is_whitespace()
        || c.is_control()
        || matches!(c, '<' | '>' | '(' | ')' | '{' | '}' | '[' | ']' | '"')
}

/// Validates and emits a quoted atom as a concept name.
fn concept_name(value: &str, pos: SourcePos) -> Result<String, Diagnostic> {
    let Some(first) = value.chars().next() else {
        return Err(err(pos, "empty concept name"));
    };
    match first {
        ':' => return Err(err(pos, "keywords must not be quoted")),
        '^' => return Err(err(pos, "operations must not be quoted")),
        '$' | '#' | '?' => return Err(err(pos, "variables must not be quoted")),
        _ => {}
    }
    if value.chars().any(forbidden_in_concept_name) {
        return Err(err(pos, "invalid character in concept name"));
    }
    Ok(value.to_string())
}

/// Compiles one term node to its Narsese text.
pub(crate) fn compile_term(node: &AstNode, vars: &mut VarScope) -> Result<String, Diagnostic> {
    match node {
        AstNode::Atom { value, quoted: true, pos } => concept_name(value, *pos),
        AstNode::Atom { value, quoted: false, pos } => {
            let mut chars = value.chars();
            let first = chars.next().expect("tokenizer emits no empty symbols");
            if let Some(class) = VarClass::from_sigil(first) {
                let name = chars.as_str();
                if name.is_empty() {
                    return Err(err(*pos, "empty variable name"));
                }
                return Ok(vars.resolve(class, name));
            }
            match first {
                '^' => {
                    if chars.as_str().is_empty() {
                        Err(err(*pos, "empty operation name"))
                    } else {
                        Ok(value.clone())
                    }
                }
                ':' => Err(err(*pos, format!("expected a term, found '{}'", value))),
                _ => Err(err(*pos, "concept names must be quoted")),
            }
        }
        AstNode::List { children, pos } => compile_compound(children, *pos, vars),
    }
}

fn compile_compound(
    children: &[AstNode],
    pos: SourcePos,
    vars: &mut VarScope,
) -> Result<String, Diagnostic> {
    let Some(head) = children.first() else {
        return Err(err(pos, "empty form"));
    };
    let head_value = match head {
        AstNode::Atom { value, quoted: false, .. } => value.as_str(),
        AstNode::Atom { quoted: true, pos, .. } => {
            return Err(err(*pos, "head symbol must not be quoted"))
        }
        AstNode::List { pos, .. } => return Err(err(*pos, "form head must be a symbol")),
    };
    let args = &children[1..];

    if let Some((_, op)) = COPULAS.iter().find(|(name, _)| *name == head_value) {
        if args.len() != 2 {
            return Err(err(pos, format!("{} takes 2 elements", head_value)));
        }
        let lhs = compile_term(&args[0], vars)?;
        let rhs = compile_term(&args[1], vars)?;
        return Ok(format!("<{} {} {}>", lhs, op, rhs));
    }

    if let Some((arity, shape)) = connector(head_value) {
        if !arity.accepts(args.len()) {
            return Err(err(pos, format!("{} {}", head_value, arity.describe())));
        }
        let parts: Vec<String> = args
            .iter()
            .map(|a| compile_term(a, vars))
            .collect::<Result<_, _>>()?;
        return Ok(match shape {
            Shape::InfixBinary(op) => format!("({} {} {})", parts[0], op, parts[1]),
            Shape::Seq => {
                if parts.len() == 2 {
                    format!("({} &/ {})", parts[0], parts[1])
                } else {
                    format!("(({} &/ {}) &/ {})", parts[0], parts[1], parts[2])
                }
            }
            Shape::Negation => format!("(-- {})", parts[0]),
            Shape::Product => format!("(*, {})", parts.join(", ")),
            Shape::Set(open, close) => format!("{}{}{}", open, parts.join(", "), close),
        });
    }

    if head_value == "call" {
        return compile_call(args, pos, vars);
    }

    Err(err(head.pos(), format!("unknown form '{}'", head_value)))
}

/// Compiles `(call ^op args...)`: no arguments gives the bare operation,
/// otherwise an inheritance of the argument product into the operation.
fn compile_call(
    args: &[AstNode],
    list_pos: SourcePos,
    vars: &mut VarScope,
) -> Result<String, Diagnostic> {
    let op = match args.first() {
        Some(AstNode::Atom { value, quoted: false, pos }) if value.starts_with('^') => {
            if value.len() == 1 {
                return Err(err(*pos, "empty operation name"));
            }
            value.clone()
        }
        Some(node) => {
            return Err(err(node.pos(), "operation must be unquoted and start with '^'"))
        }
        None => return Err(err(list_pos, "operation must be unquoted and start with '^'")),
    };
    let call_args = &args[1..];
    if call_args.is_empty() {
        return Ok(op);
    }
    let parts: Vec<String> = call_args
        .iter()
        .map(|a| compile_term(a, vars))
        .collect::<Result<_, _>>()?;
    Ok(format!("<(*, {}) --> {}>", parts.join(", "), op))
}
