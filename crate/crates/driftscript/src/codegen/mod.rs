//! Translation from parsed forms to engine input.
//!
//! Each top-level form becomes one tagged result. Sentence forms and
//! `call` forms produce Narsese text; `cycles` and `def-op` produce their
//! own kinds so a driver can route them to the right engine entry point;
//! `reset`, `config`, and `concurrent` become shell-style `*` directives.

mod sentence;
mod term;
mod vars;

use crate::diag::{Diagnostic, SourcePos, Stage};
use crate::frontend::AstNode;
use sentence::{compile_sentence, is_decimal, is_uint};
use term::compile_term;
use vars::VarScope;

/// What a compiled payload is, so callers can route it without parsing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResultKind {
    /// A Narsese sentence or operation event for the reasoner input channel.
    Narsese,
    /// A `*`-prefixed engine directive.
    ShellCommand,
    /// An inference step count.
    Cycles,
    /// An operator registration (`^name`).
    DefOp,
}

impl ResultKind {
    /// Stable uppercase tag, used by the CLI's `--kinds` output.
    pub fn as_str(self) -> &'static str {
        match self {
            ResultKind::Narsese => "NARSESE",
            ResultKind::ShellCommand => "SHELL_COMMAND",
            ResultKind::Cycles => "CYCLES",
            ResultKind::DefOp => "DEF_OP",
        }
    }

    /// Inverse of [`ResultKind::as_str`].
    pub fn from_tag(tag: &str) -> Option<ResultKind> {
        match tag {
            "NARSESE" => Some(ResultKind::Narsese),
            "SHELL_COMMAND" => Some(ResultKind::ShellCommand),
            "CYCLES" => Some(ResultKind::Cycles),
            "DEF_OP" => Some(ResultKind::DefOp),
            _ => None,
        }
    }
}

impl std::fmt::Display for ResultKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One compiled top-level form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompileResult {
    pub kind: ResultKind,
    pub payload: String,
}

impl CompileResult {
    fn new(kind: ResultKind, payload: impl Into<String>) -> Self {
        CompileResult {
            kind,
            payload: payload.into(),
        }
    }
}

fn err(pos: SourcePos, message: impl Into<String>) -> Diagnostic {
    Diagnostic::new(Stage::Compile, pos, message)
}

/// Compiles one top-level form to its tagged result.
pub fn compile_form(form: &AstNode) -> Result<CompileResult, Diagnostic> {
    let (children, list_pos) = match form {
        AstNode::Atom { pos, .. } => return Err(err(*pos, "bare atom at top level")),
        AstNode::List { children, pos } => (children.as_slice(), *pos),
    };
    let Some(head) = children.first() else {
        return Err(err(list_pos, "empty form"));
    };
    let head_value = match head {
        AstNode::Atom { value, quoted: false, .. } => value.as_str(),
        AstNode::Atom { quoted: true, pos, .. } => {
            return Err(err(*pos, "head symbol must not be quoted"))
        }
        AstNode::List { pos, .. } => return Err(err(*pos, "form head must be a symbol")),
    };
    let args = &children[1..];

    match head_value {
        "believe" | "ask" | "goal" => {
            let mut scope = VarScope::prescan(form);
            let payload = compile_sentence(head_value, list_pos, args, &mut scope)?;
            Ok(CompileResult::new(ResultKind::Narsese, payload))
        }
        "call" => {
            let mut scope = VarScope::prescan(form);
            let payload = compile_term(form, &mut scope)?;
            Ok(CompileResult::new(ResultKind::Narsese, payload))
        }
        "cycles" => compile_cycles(args, list_pos),
        "def-op" => compile_def_op(args, list_pos),
        "reset" => {
            expect_no_args("reset", args, list_pos)?;
            Ok(CompileResult::new(ResultKind::ShellCommand, "*reset"))
        }
        "concurrent" => {
            expect_no_args("concurrent", args, list_pos)?;
            Ok(CompileResult::new(ResultKind::ShellCommand, "*concurrent"))
        }
        "config" => compile_config(args, list_pos),
        _ => Err(err(head.pos(), format!("unknown form '{}'", head_value))),
    }
}

fn expect_no_args(name: &str, args: &[AstNode], pos: SourcePos) -> Result<(), Diagnostic> {
    if args.is_empty() {
        Ok(())
    } else {
        Err(err(pos, format!("{} takes no arguments", name)))
    }
}

fn compile_cycles(args: &[AstNode], list_pos: SourcePos) -> Result<CompileResult, Diagnostic> {
    let [arg] = args else {
        return Err(err(list_pos, "cycles takes 1 argument"));
    };
    let n = match arg {
        AstNode::Atom { value, quoted: false, .. } if is_uint(value) => {
            value.parse::<u64>().ok().filter(|&n| n >= 1)
        }
        _ => None,
    };
    match n {
        Some(n) => Ok(CompileResult::new(ResultKind::Cycles, n.to_string())),
        None => Err(err(arg.pos(), "cycles requires a positive integer")),
    }
}

fn compile_def_op(args: &[AstNode], list_pos: SourcePos) -> Result<CompileResult, Diagnostic> {
    let [arg] = args else {
        return Err(err(list_pos, "def-op takes 1 argument"));
    };
    match arg {
        AstNode::Atom { value, quoted: false, pos } if value.starts_with('^') => {
            if value.len() == 1 {
                Err(err(*pos, "empty operation name"))
            } else {
                Ok(CompileResult::new(ResultKind::DefOp, value.clone()))
            }
        }
        other => Err(err(
            other.pos(),
            "operation must be unquoted and start with '^'",
        )),
    }
}

/// Engine settings reachable through `(config key value)`.
const CONFIG_KEYS: [&str; 2] = ["volume", "decisionthreshold"];

fn compile_config(args: &[AstNode], list_pos: SourcePos) -> Result<CompileResult, Diagnostic> {
    let [key, value] = args else {
        return Err(err(list_pos, "config takes 2 arguments"));
    };
    let key_text = match key {
        AstNode::Atom { value, quoted: false, .. } => value.as_str(),
        AstNode::Atom { quoted: true, pos, .. } => {
            return Err(err(*pos, "config key must not be quoted"))
        }
        AstNode::List { pos, .. } => return Err(err(*pos, "config key must be a symbol")),
    };
    if !CONFIG_KEYS.contains(&key_text) {
        return Err(err(key.pos(), format!("unknown config key '{}'", key_text)));
    }
    let value_text = match value {
        AstNode::Atom { value, quoted: false, .. } if is_decimal(value) => value.as_str(),
        other => return Err(err(other.pos(), "config value must be numeric")),
    };
    Ok(CompileResult::new(
        ResultKind::ShellCommand,
        format!("*{}={}", key_text, value_text),
    ))
}
