//! Grammar-directed random program generation.
//!
//! The generator builds programs from the same vocabulary the compiler
//! accepts: quoted concept names, variables, operations, copula and
//! connector forms within their arities, sentence options legal for
//! their sentence kind, and meta commands. With `allow_invalid` it also
//! injects known-bad forms so fuzzing exercises the diagnostic path.
//! Everything is driven by a seedable RNG, so runs reproduce exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A reproducible RNG for generation.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const WORDS: &[&str] = &[
    "robin", "bird", "animal", "light_on", "light_off", "switch", "park",
    "agent", "cat", "feline", "tweety", "hot", "door_open", "alarm",
    "battery_low", "SELF", "kitchen", "charge",
];

const OPS: &[&str] = &["^press", "^goto", "^grab", "^left", "^pick"];

const COPULA_HEADS: &[&str] = &["inherit", "similar", "imply", "predict", "equiv", "instance"];

/// Connector heads with the argument count range to draw from.
const CONNECTOR_HEADS: &[(&str, usize, usize)] = &[
    ("seq", 2, 3),
    ("and", 2, 2),
    ("or", 2, 2),
    ("not", 1, 1),
    ("product", 1, 4),
    ("ext-set", 1, 4),
    ("int-set", 1, 4),
    ("ext-inter", 2, 2),
    ("int-inter", 2, 2),
    ("ext-diff", 2, 2),
    ("int-diff", 2, 2),
    ("ext-image1", 2, 2),
    ("ext-image2", 2, 2),
    ("int-image1", 2, 2),
    ("int-image2", 2, 2),
];

fn concept(rng: &mut ChaCha8Rng) -> String {
    format!("\"{}\"", WORDS.choose(rng).unwrap())
}

fn variable(rng: &mut ChaCha8Rng) -> String {
    let sigil = ['$', '#', '?'].choose(rng).unwrap();
    if rng.gen_bool(0.3) {
        format!("{}{}", sigil, rng.gen_range(1..=4))
    } else {
        let name = ['a', 'b', 'c', 'd'].choose(rng).unwrap();
        format!("{}{}", sigil, name)
    }
}

fn atom(rng: &mut ChaCha8Rng) -> String {
    match rng.gen_range(0..10) {
        0..=6 => concept(rng),
        7 | 8 => variable(rng),
        _ => OPS.choose(rng).unwrap().to_string(),
    }
}

fn term(rng: &mut ChaCha8Rng, depth: usize) -> String {
    if depth == 0 || rng.gen_bool(0.55) {
        return atom(rng);
    }
    match rng.gen_range(0..10) {
        0..=2 => {
            let head = COPULA_HEADS.choose(rng).unwrap();
            format!("({} {} {})", head, term(rng, depth - 1), term(rng, depth - 1))
        }
        3..=8 => {
            let (head, lo, hi) = CONNECTOR_HEADS.choose(rng).unwrap();
            let n = rng.gen_range(*lo..=*hi);
            let args: Vec<String> = (0..n).map(|_| term(rng, depth - 1)).collect();
            format!("({} {})", head, args.join(" "))
        }
        _ => call_form(rng, depth - 1),
    }
}

fn call_form(rng: &mut ChaCha8Rng, depth: usize) -> String {
    let op = OPS.choose(rng).unwrap();
    let n = rng.gen_range(0..=2);
    if n == 0 {
        return format!("(call {})", op);
    }
    let args: Vec<String> = (0..n).map(|_| term(rng, depth)).collect();
    format!("(call {} {})", op, args.join(" "))
}

fn truth_component(rng: &mut ChaCha8Rng) -> &'static str {
    ["0.5", "0.8", "0.9", "0.95", "1", "0.05", "0.125"].choose(rng).unwrap()
}

fn sentence(rng: &mut ChaCha8Rng) -> String {
    let kw = ["believe", "ask", "goal"].choose(rng).unwrap();
    let term = term(rng, 3);
    let mut options: Vec<String> = Vec::new();
    let tense_pool: &[&str] = match *kw {
        "believe" => &[":now", ":past"],
        "ask" => &[":now", ":past", ":future"],
        _ => &[":now"],
    };
    if rng.gen_bool(0.4) {
        options.push(tense_pool.choose(rng).unwrap().to_string());
    }
    if *kw != "ask" && rng.gen_bool(0.3) {
        options.push(format!(":truth {} {}", truth_component(rng), truth_component(rng)));
    }
    if rng.gen_bool(0.15) {
        options.push(format!(":dt {}", rng.gen_range(1..=30)));
    }
    options.shuffle(rng);
    if options.is_empty() {
        format!("({} {})", kw, term)
    } else {
        format!("({} {} {})", kw, term, options.join(" "))
    }
}

fn meta(rng: &mut ChaCha8Rng) -> String {
    match rng.gen_range(0..6) {
        0 => format!("(cycles {})", rng.gen_range(1..=50)),
        1 => format!("(def-op {})", OPS.choose(rng).unwrap()),
        2 => "(reset)".to_string(),
        3 => "(concurrent)".to_string(),
        4 => format!("(config volume {})", rng.gen_range(0..=3)),
        _ => format!(
            "(config decisionthreshold 0.{})",
            rng.gen_range(1..=9)
        ),
    }
}

/// Forms that must each produce a diagnostic.
const TWISTED_FORMS: &[&str] = &[
    "(believe bird)",
    "(frobnicate \"x\")",
    "(believe \"x\" :truth 1.2 0.9)",
    "(goal \"x\" :future)",
    "(believe \"x\" :future)",
    "(cycles 0)",
    "(believe (seq \"a\"))",
    "\"bare\"",
    "(believe \"x\" :truth 0.8)",
    "(call \"press\")",
    "(config speed 1)",
    "(ask \"x\" :truth 0.8 0.9)",
    "(believe \"a b\")",
    "(def-op press)",
    "(believe \"x\" :now :past)",
    "(believe \"x\" :speed)",
    "(believe (\"inherit\" \"a\" \"b\"))",
    "(believe \":now\")",
];

/// Generates one program: one to five newline-separated forms.
///
/// With `allow_invalid`, roughly one form in seven is drawn from a pool
/// of known-bad forms; the program then compiles to a diagnostic rather
/// than results.
pub fn random_program(rng: &mut ChaCha8Rng, allow_invalid: bool) -> String {
    let n = rng.gen_range(1..=5);
    let forms: Vec<String> = (0..n)
        .map(|_| {
            if allow_invalid && rng.gen_bool(0.15) {
                TWISTED_FORMS.choose(rng).unwrap().to_string()
            } else if rng.gen_bool(0.3) {
                meta(rng)
            } else {
                sentence(rng)
            }
        })
        .collect();
    forms.join("\n")
}

/// A deterministic 300-form unit that stays inside the per-call token
/// budget: three-token forms (`reset`, `concurrent`) carry the count,
/// four-token forms add variety. 180 * 3 + 120 * 4 = 1020 tokens.
pub fn perf_unit() -> String {
    let mut forms = Vec::with_capacity(300);
    for i in 0..300usize {
        let form = if i % 5 < 3 {
            if i % 2 == 0 { "(reset)".to_string() } else { "(concurrent)".to_string() }
        } else {
            match i % 4 {
                0 => format!("(cycles {})", 1 + i % 40),
                1 => format!("(believe \"{}\")", WORDS[i % WORDS.len()]),
                2 => format!("(ask \"{}\")", WORDS[i % WORDS.len()]),
                _ => format!("(def-op {})", OPS[i % OPS.len()]),
            }
        };
        forms.push(form);
    }
    forms.join("\n")
}
