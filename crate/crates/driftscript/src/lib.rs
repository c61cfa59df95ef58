//! DriftScript: an S-expression front end for Narsese.
//!
//! DriftScript programs are lists of forms. Sentence forms (`believe`,
//! `ask`, `goal`) compile to punctuated Narsese sentences; meta forms
//! (`cycles`, `def-op`, `reset`, `config`, `concurrent`) compile to
//! engine directives; `call` forms compile to operation events. The
//! pipeline is:
//!
//! ```text
//! source ── tokenize ──> tokens ── parse ──> forms ── compile ──> tagged results
//! ```
//!
//! Compilation is strict and all-or-nothing: the first error stops the
//! unit and is reported with its 1-based line and column. Concept names
//! must be written as string literals; keywords, variables, and `^`
//! operations must not be.
//!
//! ```
//! use driftscript::compile_source;
//!
//! let results = compile_source(r#"(believe (inherit "robin" "bird"))"#, 16).unwrap();
//! assert_eq!(results[0].payload, "<robin --> bird>.");
//! ```

pub mod api;
pub mod codegen;
pub mod conformance;
pub mod diag;
pub mod frontend;
pub mod stats;

pub use api::{compile_batch, compile_source, render_diagnostic, CompileOutcome};
pub use codegen::{compile_form, CompileResult, ResultKind};
pub use diag::{Diagnostic, SourcePos, Stage};
