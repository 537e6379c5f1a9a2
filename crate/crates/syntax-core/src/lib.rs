//! Shared abstract syntax for a two-level foundation: an intensional
//! calculus with decidable checking and an extensional calculus verified
//! by derivation certificates, both over one expression language.

pub mod build;
pub mod ctx;
pub mod expr;
pub mod judgement;
pub mod print;
pub mod sort;

pub use ctx::{Context, ContextError, EntryChecker};
pub use expr::{alpha_eq, Abs, Expr};
pub use judgement::{Judgement, JudgementForm, Theory};
pub use sort::Sort;
