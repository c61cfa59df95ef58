//! Sentence compilation: `believe` / `ask` / `goal` plus their options.
//!
//! Annotations always render in the same order after the term:
//! punctuation, tense marker, truth value, then `:dt`. Goals carry the
//! present-tense marker whether or not the source wrote `:now`.

use super::term::compile_term;
use super::vars::VarScope;
use crate::diag::{Diagnostic, SourcePos, Stage};
use crate::frontend::AstNode;

fn err(pos: SourcePos, message: impl Into<String>) -> Diagnostic {
    Diagnostic::new(Stage::Compile, pos, message)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tense {
    Now,
    Past,
    Future,
}

impl Tense {
    fn marker(self) -> &'static str {
        match self {
            Tense::Now => ":|:",
            Tense::Past => ":\\:",
            Tense::Future => ":/:",
        }
    }
}

/// One parsed sentence option set: at most one tense, one truth, one dt.
#[derive(Default)]
struct Options {
    tense: Option<(Tense, SourcePos)>,
    truth: Option<(f64, f64, SourcePos)>,
    dt: Option<u64>,
}

/// True for `digits` or `digits.digits`, the only accepted number shape.
pub(crate) fn is_decimal(s: &str) -> bool {
    let mut parts = s.split('.');
    let int = parts.next().unwrap_or("");
    let frac = parts.next();
    if parts.next().is_some() {
        return false;
    }
    let all_digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    all_digits(int) && frac.map_or(true, all_digits)
}

/// True for a plain digit run (no sign, no fraction).
pub(crate) fn is_uint(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn numeric_arg(node: &AstNode, option: &str) -> Result<f64, Diagnostic> {
    match node {
        AstNode::Atom { value, quoted: false, pos } if is_decimal(value) => value
            .parse()
            .map_err(|_| err(*pos, format!("'{}' arguments must be numeric", option))),
        other => Err(err(
            other.pos(),
            format!("'{}' arguments must be numeric", option),
        )),
    }
}

fn parse_options(kw: &str, args: &[AstNode]) -> Result<Options, Diagnostic> {
    let mut opts = Options::default();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let keyword = match arg {
            AstNode::Atom { value, quoted: false, pos } if value.starts_with(':') => {
                (value.as_str(), *pos)
            }
            AstNode::Atom { value, quoted: true, pos } if value.starts_with(':') => {
                return Err(err(*pos, "keywords must not be quoted"))
            }
            other => return Err(err(other.pos(), "expected option keyword")),
        };
        let (name, pos) = keyword;
        match name {
            ":now" | ":past" | ":future" => {
                if opts.tense.is_some() {
                    return Err(err(pos, "duplicate tense option"));
                }
                let tense = match name {
                    ":now" => Tense::Now,
                    ":past" => Tense::Past,
                    _ => Tense::Future,
                };
                if tense == Tense::Future && kw == "believe" {
                    return Err(err(pos, "':future' is not allowed on believe"));
                }
                if kw == "goal" && tense != Tense::Now {
                    return Err(err(pos, format!("'{}' is not allowed on goal", name)));
                }
                opts.tense = Some((tense, pos));
                i += 1;
            }
            ":truth" => {
                if opts.truth.is_some() {
                    return Err(err(pos, "duplicate ':truth' option"));
                }
                if kw == "ask" {
                    return Err(err(pos, "':truth' is not allowed on ask"));
                }
                if args.len() < i + 3 {
                    return Err(err(pos, "':truth' takes two arguments"));
                }
                let f = numeric_arg(&args[i + 1], ":truth")?;
                let c = numeric_arg(&args[i + 2], ":truth")?;
                if !(0.0..=1.0).contains(&f) {
                    return Err(err(args[i + 1].pos(), "frequency out of range"));
                }
                if !(0.0..=1.0).contains(&c) {
                    return Err(err(args[i + 2].pos(), "confidence out of range"));
                }
                opts.truth = Some((f, c, pos));
                i += 3;
            }
            ":dt" => {
                if opts.dt.is_some() {
                    return Err(err(pos, "duplicate ':dt' option"));
                }
                if args.len() < i + 2 {
                    return Err(err(pos, "':dt' takes one argument"));
                }
                let value = match &args[i + 1] {
                    AstNode::Atom { value, quoted: false, .. } if is_uint(value) => {
                        value.parse::<u64>().ok().filter(|&n| n >= 1)
                    }
                    _ => None,
                };
                match value {
                    Some(n) => opts.dt = Some(n),
                    None => {
                        return Err(err(args[i + 1].pos(), "':dt' requires a positive integer"))
                    }
                }
                i += 2;
            }
            _ => return Err(err(pos, format!("unknown option '{}'", name))),
        }
    }
    Ok(opts)
}

/// Formats a truth component: shortest decimal that round-trips, with a
/// leading zero, and integral values written as `1.0` / `0.0`.
pub(crate) fn format_truth(v: f64) -> String {
    if v == v.trunc() {
        format!("{:.1}", v)
    } else {
        format!("{}", v)
    }
}

/// Compiles one sentence form. `kw` is `believe`, `ask`, or `goal`;
/// `args` are the elements after it.
pub(crate) fn compile_sentence(
    kw: &str,
    list_pos: SourcePos,
    args: &[AstNode],
    vars: &mut VarScope,
) -> Result<String, Diagnostic> {
    if args.is_empty() {
        return Err(err(list_pos, format!("{} requires a term", kw)));
    }
    let term = compile_term(&args[0], vars)?;
    let opts = parse_options(kw, &args[1..])?;

    let punct = match kw {
        "believe" => '.',
        "ask" => '?',
        _ => '!',
    };
    let mut out = format!("{}{}", term, punct);
    if kw == "goal" {
        out.push_str(" :|:");
    } else if let Some((tense, _)) = opts.tense {
        out.push(' ');
        out.push_str(tense.marker());
    }
    if let Some((f, c, _)) = opts.truth {
        out.push_str(&format!(" {{{} {}}}", format_truth(f), format_truth(c)));
    }
    if let Some(n) = opts.dt {
        out.push_str(&format!(" :dt={}", n));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::compile_form;
    use crate::frontend::{parse, tokenize};

    fn sentence(source: &str) -> Result<String, Diagnostic> {
        let forms = parse(&tokenize(source).unwrap()).unwrap();
        compile_form(&forms[0]).map(|r| r.payload)
    }

    fn ok(source: &str) -> String {
        sentence(source).unwrap()
    }

    fn fail(source: &str) -> Diagnostic {
        sentence(source).unwrap_err()
    }

    // ── punctuation and tense ────────────────────────────────────────

    #[test]
    fn belief_question_goal_punctuation() {
        assert_eq!(ok(r#"(believe "robin")"#), "robin.");
        assert_eq!(ok(r#"(ask "robin")"#), "robin?");
        assert_eq!(ok(r#"(goal "clean")"#), "clean! :|:");
    }

    #[test]
    fn tense_markers_render_after_punctuation() {
        assert_eq!(ok(r#"(believe "light_on" :now)"#), "light_on. :|:");
        assert_eq!(ok(r#"(believe "rained" :past)"#), "rained. :\\:");
        assert_eq!(ok(r#"(ask "rain" :future)"#), "rain? :/:");
        assert_eq!(ok(r#"(ask "rain" :past)"#), "rain? :\\:");
        assert_eq!(ok(r#"(ask "rain" :now)"#), "rain? :|:");
    }

    #[test]
    fn goal_is_always_present_tense_and_never_doubled() {
        assert_eq!(ok(r#"(goal "x" :now)"#), "x! :|:");
    }

    #[test]
    fn illegal_tense_combinations() {
        assert_eq!(fail(r#"(believe "x" :future)"#).message, "':future' is not allowed on believe");
        assert_eq!(fail(r#"(goal "x" :past)"#).message, "':past' is not allowed on goal");
        assert_eq!(fail(r#"(goal "x" :future)"#).message, "':future' is not allowed on goal");
    }

    // ── truth ────────────────────────────────────────────────────────

    #[test]
    fn truth_renders_in_braces() {
        assert_eq!(ok(r#"(believe "x" :truth 0.8 0.9)"#), "x. {0.8 0.9}");
        assert_eq!(ok(r#"(believe "x" :truth 1 0.9)"#), "x. {1.0 0.9}");
        assert_eq!(ok(r#"(believe "x" :truth 0.05 0.125)"#), "x. {0.05 0.125}");
    }

    #[test]
    fn truth_formatting_drops_trailing_zeros() {
        assert_eq!(ok(r#"(believe "x" :truth 0.80 0.900)"#), "x. {0.8 0.9}");
    }

    #[test]
    fn truth_after_tense_in_annotation_order() {
        assert_eq!(
            ok(r#"(believe "x" :now :truth 0.8 0.9)"#),
            "x. :|: {0.8 0.9}"
        );
        assert_eq!(
            ok(r#"(believe "x" :truth 0.8 0.9 :now)"#),
            "x. :|: {0.8 0.9}"
        );
    }

    #[test]
    fn goal_with_truth_keeps_order() {
        assert_eq!(ok(r#"(goal "x" :truth 0.9 0.9)"#), "x! :|: {0.9 0.9}");
    }

    #[test]
    fn truth_range_errors_point_at_the_value() {
        let e = fail(r#"(believe "x" :truth 1.2 0.9)"#);
        assert_eq!(e.message, "frequency out of range");
        assert_eq!((e.pos.line, e.pos.col), (1, 21));
        assert_eq!(fail(r#"(believe "x" :truth 0.9 1.01)"#).message, "confidence out of range");
    }

    #[test]
    fn truth_argument_shape_errors() {
        assert_eq!(fail(r#"(believe "x" :truth 0.8)"#).message, "':truth' takes two arguments");
        assert_eq!(fail(r#"(believe "x" :truth)"#).message, "':truth' takes two arguments");
        assert_eq!(fail(r#"(believe "x" :truth a 0.9)"#).message, "':truth' arguments must be numeric");
        assert_eq!(fail(r#"(believe "x" :truth "0.8" 0.9)"#).message, "':truth' arguments must be numeric");
        assert_eq!(fail(r#"(believe "x" :truth 0.8 -0.9)"#).message, "':truth' arguments must be numeric");
        assert_eq!(fail(r#"(believe "x" :truth 1e0 0.9)"#).message, "':truth' arguments must be numeric");
    }

    #[test]
    fn truth_is_rejected_on_questions() {
        assert_eq!(fail(r#"(ask "x" :truth 0.8 0.9)"#).message, "':truth' is not allowed on ask");
    }

    // ── dt ───────────────────────────────────────────────────────────

    #[test]
    fn dt_renders_as_trailing_annotation() {
        assert_eq!(ok(r#"(believe "x" :dt 5)"#), "x. :dt=5");
        assert_eq!(
            ok(r#"(believe "x" :now :truth 0.8 0.9 :dt 12)"#),
            "x. :|: {0.8 0.9} :dt=12"
        );
    }

    #[test]
    fn dt_argument_validation() {
        assert_eq!(fail(r#"(believe "x" :dt 0)"#).message, "':dt' requires a positive integer");
        assert_eq!(fail(r#"(believe "x" :dt -3)"#).message, "':dt' requires a positive integer");
        assert_eq!(fail(r#"(believe "x" :dt 1.5)"#).message, "':dt' requires a positive integer");
        assert_eq!(fail(r#"(believe "x" :dt)"#).message, "':dt' takes one argument");
    }

    // ── option structure ─────────────────────────────────────────────

    #[test]
    fn duplicate_options_are_rejected() {
        assert_eq!(fail(r#"(believe "x" :now :past)"#).message, "duplicate tense option");
        assert_eq!(fail(r#"(believe "x" :now :now)"#).message, "duplicate tense option");
        assert_eq!(
            fail(r#"(believe "x" :truth 0.8 0.9 :truth 0.7 0.9)"#).message,
            "duplicate ':truth' option"
        );
        assert_eq!(fail(r#"(believe "x" :dt 1 :dt 2)"#).message, "duplicate ':dt' option");
    }

    #[test]
    fn unknown_option_names_the_keyword() {
        let e = fail(r#"(believe "x" :speed)"#);
        assert_eq!(e.message, "unknown option ':speed'");
        assert_eq!((e.pos.line, e.pos.col), (1, 14));
    }

    #[test]
    fn non_keyword_after_term_is_rejected() {
        assert_eq!(fail(r#"(believe "x" "y")"#).message, "expected option keyword");
        assert_eq!(fail(r#"(believe "x" (inherit "a" "b"))"#).message, "expected option keyword");
    }

    #[test]
    fn quoted_keyword_in_option_position() {
        let e = fail(r#"(believe "x" ":now")"#);
        assert_eq!(e.message, "keywords must not be quoted");
        assert_eq!((e.pos.line, e.pos.col), (1, 14));
    }

    #[test]
    fn sentence_requires_a_term() {
        assert_eq!(fail("(believe)").message, "believe requires a term");
        assert_eq!(fail("(ask)").message, "ask requires a term");
        assert_eq!(fail("(goal)").message, "goal requires a term");
    }

    // ── truth formatting helper ──────────────────────────────────────

    #[test]
    fn format_truth_integral_and_fractional() {
        assert_eq!(format_truth(1.0), "1.0");
        assert_eq!(format_truth(0.0), "0.0");
        assert_eq!(format_truth(0.8), "0.8");
        assert_eq!(format_truth(0.125), "0.125");
        assert_eq!(format_truth(0.9), "0.9");
    }
}
