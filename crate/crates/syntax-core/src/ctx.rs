use crate::expr::Expr;

/// Callback deciding whether an expression is a type (a collection or
/// below) over a prefix context. Implemented by the theory checkers.
pub trait EntryChecker {
    fn entry_is_type(&self, prefix: &Context, ty: &Expr) -> bool;
}

impl<F: Fn(&Context, &Expr) -> bool> EntryChecker for F {
    fn entry_is_type(&self, prefix: &Context, ty: &Expr) -> bool {
        self(prefix, ty)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContextError {
    IllScoped(usize),
    EntryNotAType(usize),
    DuplicateName(usize),
}

impl std::fmt::Display for ContextError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContextError::IllScoped(i) => write!(f, "entry {i} is not well-scoped"),
            ContextError::EntryNotAType(i) => write!(f, "entry {i} is not a type"),
            ContextError::DuplicateName(i) => write!(f, "entry {i} reuses a variable name"),
        }
    }
}

impl std::error::Error for ContextError {}

/// A telescopic context: each entry's type may mention the earlier entries.
///
/// De Bruijn convention: in a term under the context, `Var(0)` refers to
/// the *last* entry, `Var(len - 1)` to the first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Context {
    entries: Vec<(String, Expr)>,
}

impl Context {
    pub fn empty() -> Self {
        Context::default()
    }

    pub fn from_entries(entries: Vec<(String, Expr)>) -> Self {
        Context { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(String, Expr)] {
        &self.entries
    }

    /// Extend with a fresh entry (becomes `Var(0)` in the extension).
    pub fn extended(&self, name: impl Into<String>, ty: Expr) -> Context {
        let mut entries = self.entries.clone();
        entries.push((name.into(), ty));
        Context { entries }
    }

    pub fn push(&mut self, name: impl Into<String>, ty: Expr) {
        self.entries.push((name.into(), ty));
    }

    /// The type of `Var(idx)`, shifted so it is well-scoped in the whole
    /// context.
    pub fn lookup(&self, idx: usize) -> Option<Expr> {
        let n = self.len();
        if idx >= n {
            return None;
        }
        let (_, ty) = &self.entries[n - 1 - idx];
        Some(ty.shifted(idx as isize + 1))
    }

    pub fn name_of(&self, idx: usize) -> Option<&str> {
        let n = self.len();
        if idx >= n {
            return None;
        }
        Some(self.entries[n - 1 - idx].0.as_str())
    }

    /// The prefix context of length `k`.
    pub fn prefix(&self, k: usize) -> Context {
        Context {
            entries: self.entries[..k].to_vec(),
        }
    }

    /// Every entry is well-scoped over its prefix.
    pub fn well_scoped(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, (_, ty))| ty.well_scoped_under(i))
    }

    /// Are all names distinct?
    pub fn names_distinct(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.entries.iter().all(|(n, _)| seen.insert(n.as_str()))
    }

    /// Accepted iff each entry's type checks as a type over its prefix,
    /// per the given checker, with distinct names and correct scoping.
    pub fn check(&self, checker: &impl EntryChecker) -> Result<(), ContextError> {
        let mut seen = std::collections::HashSet::new();
        for (i, (name, ty)) in self.entries.iter().enumerate() {
            if !seen.insert(name.as_str()) {
                return Err(ContextError::DuplicateName(i));
            }
            if !ty.well_scoped_under(i) {
                return Err(ContextError::IllScoped(i));
            }
            if !checker.entry_is_type(&self.prefix(i), ty) {
                return Err(ContextError::EntryNotAType(i));
            }
        }
        Ok(())
    }

    /// `other` extends `self` by exactly the given tail of entries
    /// (types compared up to alpha).
    pub fn extends_by(&self, other: &Context, tail: &[(&str, &Expr)]) -> bool {
        if other.len() != self.len() + tail.len() {
            return false;
        }
        if other.entries[..self.len()] != self.entries[..] {
            return false;
        }
        other.entries[self.len()..]
            .iter()
            .zip(tail)
            .all(|((_, ty), (_, want))| ty == *want)
    }
}
