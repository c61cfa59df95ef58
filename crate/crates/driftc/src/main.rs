//! driftc: compile DriftScript files to engine input on stdout.
//!
//! Payloads go to stdout one per line; diagnostics go to stderr as
//! `line:col: error: message`. Exit code 0 means success, 1 a compile
//! error, 2 a usage or I/O error.

use clap::Parser;
use driftscript::stats::{compute_stats, ratio, StatsReport};
use driftscript::{compile_source, render_diagnostic};
use std::io::{IsTerminal, Read};
use std::process::ExitCode;

/// Matches the per-call token limit: a form needs at least one token,
/// so a unit can never hold more forms than this.
const MAX_RESULTS: usize = 1024;

const USAGE: &str = "\
usage: driftc [--check | --kinds] <file|->
       driftc --stats <file>
       driftc --compare <driftscript-file> <narsese-file>";

#[derive(Parser)]
#[command(name = "driftc", about = "DriftScript compiler", override_usage = USAGE)]
struct Cli {
    /// Validate only; print nothing on success
    #[arg(long, conflicts_with_all = ["kinds", "stats", "compare"])]
    check: bool,

    /// Prefix each payload with its kind tag and a tab
    #[arg(long, conflicts_with_all = ["stats", "compare"])]
    kinds: bool,

    /// Print character counts for one file instead of compiling it
    #[arg(long, conflicts_with = "compare")]
    stats: bool,

    /// Compare character counts of a DriftScript file and a Narsese file
    #[arg(long)]
    compare: bool,

    /// Input files; `-` reads stdin
    inputs: Vec<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    if cli.compare {
        return match cli.inputs.as_slice() {
            [a, b] => run_compare(a, b),
            _ => usage_error(),
        };
    }
    if cli.stats {
        return match cli.inputs.as_slice() {
            [file] => run_stats(file),
            _ => usage_error(),
        };
    }
    match cli.inputs.as_slice() {
        [file] => run_compile(file, cli.check, cli.kinds),
        [] if !std::io::stdin().is_terminal() => run_compile("-", cli.check, cli.kinds),
        _ => usage_error(),
    }
}

fn usage_error() -> ExitCode {
    eprintln!("{}", USAGE);
    ExitCode::from(2)
}

fn read_input(path: &str) -> Result<String, ExitCode> {
    let result = if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| {
        eprintln!("driftc: {}: {}", path, e);
        ExitCode::from(2)
    })
}

fn run_compile(path: &str, check: bool, kinds: bool) -> ExitCode {
    let source = match read_input(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match compile_source(&source, MAX_RESULTS) {
        Ok(results) => {
            if !check {
                for r in results {
                    if kinds {
                        println!("{}\t{}", r.kind.as_str(), r.payload);
                    } else {
                        println!("{}", r.payload);
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(d) => {
            eprintln!("{}", render_diagnostic(&d));
            ExitCode::from(1)
        }
    }
}

fn run_stats(path: &str) -> ExitCode {
    let text = match read_input(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    print!("{}", render_stats(&compute_stats(&text)));
    ExitCode::SUCCESS
}

fn run_compare(script_path: &str, narsese_path: &str) -> ExitCode {
    let script = match read_input(script_path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let narsese = match read_input(narsese_path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    print!("{}", render_compare(&compute_stats(&script), &compute_stats(&narsese)));
    ExitCode::SUCCESS
}

fn format_ratio(value: Option<f64>, suffix: &str) -> String {
    match value {
        Some(v) => format!("{:.2}{}", v, suffix),
        None => "n/a".to_string(),
    }
}

fn render_stats(s: &StatsReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("total chars:      {}\n", s.total_chars));
    out.push_str(&format!("alpha chars:      {}\n", s.alpha_chars));
    out.push_str(&format!("symbol chars:     {}\n", s.symbol_chars));
    out.push_str(&format!("distinct symbols: {}\n", s.distinct_symbols));
    out.push_str(&format!("alpha ratio:      {}\n", format_ratio(s.alpha_ratio(), "")));
    out
}

/// Side-by-side counts with a driftscript/narsese ratio column.
fn render_compare(script: &StatsReport, narsese: &StatsReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<18}{:>12}{:>12}{:>8}\n",
        "metric", "driftscript", "narsese", "ratio"
    ));
    let rows = [
        ("total chars", script.total_chars, narsese.total_chars),
        ("alpha chars", script.alpha_chars, narsese.alpha_chars),
        ("symbol chars", script.symbol_chars, narsese.symbol_chars),
        ("distinct symbols", script.distinct_symbols, narsese.distinct_symbols),
    ];
    for (label, a, b) in rows {
        out.push_str(&format!(
            "{:<18}{:>12}{:>12}{:>8}\n",
            label,
            a,
            b,
            format_ratio(ratio(a, b), "x")
        ));
    }
    out.push_str(&format!(
        "{:<18}{:>12}{:>12}{:>8}\n",
        "alpha ratio",
        format_ratio(script.alpha_ratio(), ""),
        format_ratio(narsese.alpha_ratio(), ""),
        "-"
    ));
    out
}
