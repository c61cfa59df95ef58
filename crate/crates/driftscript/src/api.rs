//! Whole-unit compilation entry points.
//!
//! A unit is one source string holding any number of top-level forms.
//! Compilation is all-or-nothing: the first error anywhere aborts the
//! unit and nothing is returned but the diagnostic. Results come back in
//! source order, one per form.

use crate::codegen::{compile_form, CompileResult};
use crate::diag::{Diagnostic, Stage};
use crate::frontend::{parse, tokenize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Either every form's result, in order, or the first error.
pub type CompileOutcome = Result<Vec<CompileResult>, Diagnostic>;

/// Compiles one source unit.
///
/// `max_results` caps how many forms the caller is prepared to receive;
/// a unit with more forms fails with "too many results" at the first
/// form past the cap. An empty unit (or one holding only whitespace and
/// comments) succeeds with no results.
pub fn compile_source(source: &str, max_results: usize) -> CompileOutcome {
    let tokens = tokenize(source)?;
    let forms = parse(&tokens)?;
    let mut results = Vec::with_capacity(forms.len().min(max_results));
    for form in &forms {
        if results.len() == max_results {
            return Err(Diagnostic::new(Stage::Compile, form.pos(), "too many results"));
        }
        results.push(compile_form(form)?);
    }
    Ok(results)
}

/// Compiles many independent units.
///
/// Outcomes line up with `sources` by index. With the `parallel` feature
/// (on by default) units are compiled on the rayon thread pool; without
/// it they run sequentially. Both give identical outcomes because units
/// share no state.
pub fn compile_batch<S: AsRef<str> + Sync>(sources: &[S], max_results: usize) -> Vec<CompileOutcome> {
    #[cfg(feature = "parallel")]
    {
        sources
            .par_iter()
            .map(|s| compile_source(s.as_ref(), max_results))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sources
            .iter()
            .map(|s| compile_source(s.as_ref(), max_results))
            .collect()
    }
}

/// Renders a diagnostic the way the CLI prints it: `line:col: error: message`.
pub fn render_diagnostic(d: &Diagnostic) -> String {
    d.to_string()
}
