//! A minimal structural validator for compiled Narsese payloads.
//!
//! This is deliberately not a Narsese parser. It checks just enough to
//! catch mangled output: bracket balance (aware that copula operators
//! like `-->` and `<=>` contain bracket characters), terminal
//! punctuation, annotation shape, and the absence of quote or control
//! characters. Unpunctuated payloads are accepted only when they look
//! like operation events (`^name`, or an inheritance into a `^name`).

/// Copula operators whose spellings contain `<` or `>`; these must be
/// skipped as units during bracket matching.
const ANGLED_OPERATORS: [&str; 6] = ["-->", "<->", "==>", "=/>", "<=>", "|->"];

fn is_decimal(s: &str) -> bool {
    let mut parts = s.split('.');
    let int = parts.next().unwrap_or("");
    let frac = parts.next();
    if parts.next().is_some() {
        return false;
    }
    let all_digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    all_digits(int) && frac.map_or(true, all_digits)
}

/// True when the bracket pairs `<>`, `()`, `{}`, `[]` in `term` balance,
/// skipping copula operator spellings.
fn balanced(term: &str) -> bool {
    let bytes = term.as_bytes();
    let mut stack: Vec<u8> = Vec::new();
    let mut i = 0;
    // Work on bytes so multi-byte characters in concept names cannot
    // split a slice; every bracket and operator is plain ASCII.
    'outer: while i < bytes.len() {
        for op in ANGLED_OPERATORS {
            if bytes[i..].starts_with(op.as_bytes()) {
                i += op.len();
                continue 'outer;
            }
        }
        match bytes[i] {
            b'<' | b'(' | b'{' | b'[' => stack.push(bytes[i]),
            b'>' => {
                if stack.pop() != Some(b'<') {
                    return false;
                }
            }
            b')' => {
                if stack.pop() != Some(b'(') {
                    return false;
                }
            }
            b'}' => {
                if stack.pop() != Some(b'{') {
                    return false;
                }
            }
            b']' => {
                if stack.pop() != Some(b'[') {
                    return false;
                }
            }
            _ => {}
        }
        i += 1;
    }
    stack.is_empty()
}

/// Strips one trailing annotation, returning the shortened payload.
fn strip_annotation(s: &str) -> Option<&str> {
    for marker in [" :|:", " :\\:", " :/:"] {
        if let Some(rest) = s.strip_suffix(marker) {
            return Some(rest);
        }
    }
    // ` :dt=N`
    let digits = s.len() - s.bytes().rev().take_while(|b| b.is_ascii_digit()).count();
    if digits < s.len() {
        if let Some(rest) = s[..digits].strip_suffix(" :dt=") {
            return Some(rest);
        }
    }
    // ` {F C}`
    if let Some(body) = s.strip_suffix('}') {
        if let Some(at) = body.rfind(" {") {
            let inner = &body[at + 2..];
            let mut parts = inner.split(' ');
            if let (Some(f), Some(c), None) = (parts.next(), parts.next(), parts.next()) {
                if is_decimal(f) && is_decimal(c) {
                    return Some(&s[..at]);
                }
            }
        }
    }
    None
}

/// True when `payload` is acceptable reasoner input: a punctuated
/// sentence with well-shaped annotations, or a bare operation event.
pub fn check_narsese_wellformed(payload: &str) -> bool {
    if payload.chars().any(|c| c == '"' || c.is_control()) {
        return false;
    }
    let mut body = payload;
    while let Some(shorter) = strip_annotation(body) {
        body = shorter;
    }
    if body.is_empty() {
        return false;
    }
    if let Some(term) = body.strip_suffix(['.', '?', '!']) {
        return !term.is_empty() && !term.ends_with(' ') && balanced(term);
    }
    // No punctuation: operation events only.
    if let Some(name) = body.strip_prefix('^') {
        return !name.is_empty()
            && payload == body
            && !name.contains([' ', '<', '>', '(', ')', '{', '}', '[', ']']);
    }
    body.starts_with('<')
        && body.ends_with('>')
        && body.contains(" --> ^")
        && payload == body
        && balanced(body)
}
