//! Decidable type checker and definitional-equality engine for the
//! intensional level (mTT), optionally extended with generic dependent
//! product collections (mTT-dp).
//!
//! The checker is bidirectional: introduction forms are checked against an
//! expected type, eliminators and variables infer. Definitional equality is
//! decided by weak-head normalization plus structural comparison; under
//! lambda binders the calculus has no xi-rule, so only redexes that do not
//! touch the bound variables may be contracted before comparing bodies.

mod checker;
pub mod oracle;

use syntax_core::{Context, ContextError, Expr, Sort, Theory};

pub use checker::is_type_former;

/// Configuration for one checking run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelConfig {
    /// `Theory::Mtt` or `Theory::MttDp`; the extensional theories are
    /// rejected with [`KernelError::TheoryViolation`].
    pub theory: Theory,
    /// Upper bound on reduction steps per top-level call; exhausting it is
    /// an error, never an acceptance.
    pub fuel: u64,
    /// Optional computation rule `El_N1(star, c) = c`. The printed calculus
    /// has no computation rule for the singleton eliminator; off by default.
    pub n1_computation: bool,
}

impl KernelConfig {
    pub fn new(theory: Theory) -> Self {
        KernelConfig {
            theory,
            fuel: 100_000,
            n1_computation: false,
        }
    }

    pub fn mtt() -> Self {
        KernelConfig::new(Theory::Mtt)
    }

    pub fn mtt_dp() -> Self {
        KernelConfig::new(Theory::MttDp)
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        assert!(fuel > 0, "fuel must be positive");
        self.fuel = fuel;
        self
    }

    pub fn with_n1_computation(mut self, on: bool) -> Self {
        self.n1_computation = on;
        self
    }
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig::mtt()
    }
}

/// Result of a successful type check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeReport {
    /// Least sort at which the type classifies; it also checks at every
    /// larger sort of the subsumption order.
    pub sort: Sort,
    /// Weak-head normal form of the type.
    pub whnf: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("not a type at {path}: {detail}")]
    NotAType { path: String, detail: String },
    #[error("sort too small: required {required}, found {found}")]
    SortTooSmall { required: Sort, found: Sort },
    #[error("theory violation: {0}")]
    TheoryViolation(String),
    #[error("type mismatch at {path}: expected {expected}, inferred {inferred}")]
    TypeMismatch {
        path: String,
        expected: String,
        inferred: String,
    },
    #[error("unknown head at {path}: {detail}")]
    UnknownHead { path: String, detail: String },
    #[error("motive mismatch at {path}: {detail}")]
    MotiveMismatch { path: String, detail: String },
    #[error("not convertible at {path}")]
    NotConvertible { path: String },
    #[error("fuel exhausted after {steps} steps")]
    FuelExhausted { steps: u64 },
    #[error("unbound variable #{index}")]
    UnboundVar { index: usize },
    #[error("cannot infer a type at {path}: {detail}")]
    CannotInfer { path: String, detail: String },
    #[error("ill-formed context: {0}")]
    Context(ContextError),
}

impl From<ContextError> for KernelError {
    fn from(e: ContextError) -> Self {
        KernelError::Context(e)
    }
}

fn ensure_intensional(cfg: &KernelConfig) -> Result<(), KernelError> {
    if cfg.theory.is_extensional() {
        Err(KernelError::TheoryViolation(format!(
            "{} is not handled by the intensional kernel",
            cfg.theory
        )))
    } else {
        Ok(())
    }
}

/// Accept the context iff every entry's type checks as a collection (or
/// below) over its prefix.
pub fn check_context(ctx: &Context, cfg: &KernelConfig) -> Result<(), KernelError> {
    ensure_intensional(cfg)?;
    ctx.check(&|prefix: &Context, ty: &Expr| {
        checker::Checker::new(cfg).sort_of(prefix, ty).is_ok()
    })
    .map_err(KernelError::from)
}

/// Accept iff `A s [ctx]` is derivable, reporting the minimal sort.
pub fn check_type(
    ctx: &Context,
    a: &Expr,
    s: Sort,
    cfg: &KernelConfig,
) -> Result<TypeReport, KernelError> {
    ensure_intensional(cfg)?;
    let mut ck = checker::Checker::new(cfg);
    let minimal = ck.sort_of(ctx, a)?;
    if !minimal.leq(s) {
        return Err(KernelError::SortTooSmall {
            required: s,
            found: minimal,
        });
    }
    let whnf = ck.whnf(a)?;
    Ok(TypeReport {
        sort: minimal,
        whnf,
    })
}

/// The minimal sort at which `A` classifies over `ctx`.
pub fn infer_sort(ctx: &Context, a: &Expr, cfg: &KernelConfig) -> Result<Sort, KernelError> {
    ensure_intensional(cfg)?;
    checker::Checker::new(cfg).sort_of(ctx, a)
}

/// Accept iff `t in A [ctx]` is derivable. `A` is assumed to check as a
/// type over `ctx`.
pub fn check_term(
    ctx: &Context,
    t: &Expr,
    a: &Expr,
    cfg: &KernelConfig,
) -> Result<(), KernelError> {
    ensure_intensional(cfg)?;
    checker::Checker::new(cfg).check(ctx, t, a)
}

/// Infer a type for `t` over `ctx` (eliminators, variables and a few
/// unambiguous introductions; other introductions are check-only).
pub fn infer_type(ctx: &Context, t: &Expr, cfg: &KernelConfig) -> Result<Expr, KernelError> {
    ensure_intensional(cfg)?;
    checker::Checker::new(cfg).infer(ctx, t)
}

/// Weak-head normal form of `t`: head-reduce by the computation rules
/// until the head is stable; never reduces under a binder.
pub fn whnf(ctx: &Context, t: &Expr, cfg: &KernelConfig) -> Result<Expr, KernelError> {
    ensure_intensional(cfg)?;
    if !t.well_scoped_under(ctx.len()) {
        return Err(KernelError::UnboundVar {
            index: t.max_free_var().unwrap_or(0),
        });
    }
    checker::Checker::new(cfg).whnf(t)
}

/// Accept iff `A = B s [ctx]` holds definitionally. Both sides are
/// required to check at sort `s` first.
pub fn conv_type(
    ctx: &Context,
    a: &Expr,
    b: &Expr,
    s: Sort,
    cfg: &KernelConfig,
) -> Result<(), KernelError> {
    ensure_intensional(cfg)?;
    check_type(ctx, a, s, cfg)?;
    check_type(ctx, b, s, cfg)?;
    checker::Checker::new(cfg).conv(a, b)
}

/// Accept iff `a = b in A [ctx]` holds definitionally. Both sides are
/// required to check against `A` first.
pub fn conv_term(
    ctx: &Context,
    a: &Expr,
    b: &Expr,
    ty: &Expr,
    cfg: &KernelConfig,
) -> Result<(), KernelError> {
    ensure_intensional(cfg)?;
    let mut ck = checker::Checker::new(cfg);
    ck.check(ctx, a, ty)?;
    ck.check(ctx, b, ty)?;
    ck.conv(a, b)
}
