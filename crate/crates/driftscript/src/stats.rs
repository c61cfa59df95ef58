//! Character-level readability counts for comparing source texts.
//!
//! The counts deliberately ignore layout: whitespace never contributes,
//! so the same program formatted on one line or ten scores identically.
//! The double-quote delimiter is excluded from the symbol counts because
//! it marks names rather than carrying structure.

use std::collections::BTreeSet;

/// Character counts for one text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsReport {
    /// Non-whitespace characters.
    pub total_chars: usize,
    /// Letters.
    pub alpha_chars: usize,
    /// Characters that are not letters, digits, whitespace, or `"`.
    pub symbol_chars: usize,
    /// Size of the set behind `symbol_chars`.
    pub distinct_symbols: usize,
}

impl StatsReport {
    /// Letters as a share of non-whitespace characters, if any exist.
    pub fn alpha_ratio(&self) -> Option<f64> {
        ratio(self.alpha_chars, self.total_chars)
    }
}

/// `a / b`, or `None` when `b` is zero.
pub fn ratio(a: usize, b: usize) -> Option<f64> {
    if b == 0 {
        None
    } else {
        Some(a as f64 / b as f64)
    }
}

/// Counts characters in `text` by class.
pub fn compute_stats(text: &str) -> StatsReport {
    let mut total = 0;
    let mut alpha = 0;
    let mut symbol = 0;
    let mut distinct = BTreeSet::new();
    for c in text.chars() {
        if c.is_whitespace() {
            continue;
        }
        total += 1;
        if c.is_alphabetic() {
            alpha += 1;
        } else if !c.is_numeric() && c != '"' {
            symbol += 1;
            distinct.insert(c);
        }
    }
    StatsReport {
        total_chars: total,
        alpha_chars: alpha,
        symbol_chars: symbol,
        distinct_symbols: distinct.len(),
    }
}
