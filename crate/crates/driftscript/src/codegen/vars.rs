//! Variable renumbering, scoped to one top-level form.
//!
//! Narsese variables are numbered per class: `$` independent, `#`
//! dependent, `?` query. Source variables may be named (`$x`) or
//! explicitly numbered (`$2`). Explicit numbers map to themselves and are
//! reserved up front by a pre-scan of the whole form, so a later `$2` in
//! the source never collides with a number handed to a named variable.
//! Named variables then receive the smallest free positive number in
//! order of first appearance.

use crate::frontend::AstNode;
use std::collections::{HashMap, HashSet};

/// Variable class, keyed by sigil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarClass {
    Independent,
    Dependent,
    Query,
}

impl VarClass {
    pub fn from_sigil(c: char) -> Option<VarClass> {
        match c {
            '$' => Some(VarClass::Independent),
            '#' => Some(VarClass::Dependent),
            '?' => Some(VarClass::Query),
            _ => None,
        }
    }

    pub fn sigil(self) -> char {
        match self {
            VarClass::Independent => '$',
            VarClass::Dependent => '#',
            VarClass::Query => '?',
        }
    }

    fn index(self) -> usize {
        match self {
            VarClass::Independent => 0,
            VarClass::Dependent => 1,
            VarClass::Query => 2,
        }
    }
}

#[derive(Debug, Default)]
struct ClassState {
    assigned: HashMap<String, u64>,
    taken: HashSet<u64>,
}

/// Renumbering state for one top-level form.
#[derive(Debug, Default)]
pub struct VarScope {
    classes: [ClassState; 3],
}

/// True when `name` (the text after the sigil) is an explicit number.
fn explicit_number(name: &str) -> Option<u64> {
    if !name.is_empty() && name.bytes().all(|b| b.is_ascii_digit()) {
        name.parse().ok()
    } else {
        None
    }
}

impl VarScope {
    /// Builds the scope for `form`, reserving every explicitly numbered
    /// variable in it so named variables can never collide with one.
    pub fn prescan(form: &AstNode) -> VarScope {
        let mut scope = VarScope::default();
        scope.walk(form);
        scope
    }

    fn walk(&mut self, node: &AstNode) {
        match node {
            AstNode::Atom { value, quoted: false, .. } => {
                let mut chars = value.chars();
                if let Some(class) = chars.next().and_then(VarClass::from_sigil) {
                    if let Some(n) = explicit_number(chars.as_str()) {
                        self.classes[class.index()].taken.insert(n);
                    }
                }
            }
            AstNode::Atom { .. } => {}
            AstNode::List { children, .. } => {
                for child in children {
                    self.walk(child);
                }
            }
        }
    }

    /// Maps one variable occurrence to its rendered form (sigil plus number).
    ///
    /// `name` is the text after the sigil and must be non-empty. Explicit
    /// numbers render as themselves; digit runs too long for a u64 pass
    /// through verbatim.
    pub fn resolve(&mut self, class: VarClass, name: &str) -> String {
        debug_assert!(!name.is_empty());
        if name.bytes().all(|b| b.is_ascii_digit()) {
            return match explicit_number(name) {
                Some(n) => format!("{}{}", class.sigil(), n),
                None => format!("{}{}", class.sigil(), name),
            };
        }
        let state = &mut self.classes[class.index()];
        if let Some(&n) = state.assigned.get(name) {
            return format!("{}{}", class.sigil(), n);
        }
        let mut n = 1u64;
        while state.taken.contains(&n) {
            n += 1;
        }
        state.taken.insert(n);
        state.assigned.insert(name.to_string(), n);
        format!("{}{}", class.sigil(), n)
    }
}
