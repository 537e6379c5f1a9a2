//! Certificate verifier for the extensional level (emTT), optionally
//! extended with dependent product collections and quotient collections
//! (emTT-dp).
//!
//! Extensional type checking is undecidable, so judgements are not checked
//! by search: a [`DerivationCert`] is an explicit derivation tree, one node
//! per rule application, and [`verify`] replays it. Every node stores its
//! full context (the usual shared-context convention is made explicit), an
//! instantiation of the rule's metavariables, and the concluded judgement;
//! verification recomputes the rule's premise and conclusion schemas from
//! the instantiation and compares them, up to alpha, with what the
//! certificate claims.

mod rules;
mod schema;

pub use rules::RuleId;

use std::collections::BTreeMap;
use syntax_core::{Abs, Context, Expr, Judgement, JudgementForm, Sort, Theory};

/// Instantiation of a rule's metavariables.
///
/// `ctx` is the ambient context shared by all judgements of the node (rules
/// extend it by their printed telescopes). Closed-over-`ctx` expressions go
/// in `exprs`; families and branches with bound variables go in `abss`
/// keyed by the letter used in the rule, with the arity the rule expects;
/// the n-ary substitution rules take their telescope and the two
/// substitution vectors from `tel` and `lists`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Inst {
    pub ctx: Context,
    pub sort: Option<Sort>,
    pub exprs: BTreeMap<String, Expr>,
    pub abss: BTreeMap<String, Abs>,
    pub lists: BTreeMap<String, Vec<Expr>>,
    pub tel: Option<Context>,
    /// Display name for a bound variable introduced by the rule itself
    /// (only context extension uses it).
    pub name: Option<String>,
}

impl Inst {
    pub fn new(ctx: Context) -> Self {
        Inst {
            ctx,
            ..Inst::default()
        }
    }

    pub fn with_sort(mut self, s: Sort) -> Self {
        self.sort = Some(s);
        self
    }

    pub fn with_expr(mut self, k: impl Into<String>, e: Expr) -> Self {
        self.exprs.insert(k.into(), e);
        self
    }

    pub fn with_abs(mut self, k: impl Into<String>, a: Abs) -> Self {
        self.abss.insert(k.into(), a);
        self
    }

    pub fn with_list(mut self, k: impl Into<String>, es: Vec<Expr>) -> Self {
        self.lists.insert(k.into(), es);
        self
    }

    pub fn with_tel(mut self, tel: Context) -> Self {
        self.tel = Some(tel);
        self
    }

    pub fn with_name(mut self, n: impl Into<String>) -> Self {
        self.name = Some(n.into());
        self
    }

    /// Every instantiated expression is well-scoped over the ambient
    /// context (families over the context plus their binders).
    pub fn well_scoped(&self) -> bool {
        let n = self.ctx.len();
        self.ctx.well_scoped()
            && self.exprs.values().all(|e| e.well_scoped_under(n))
            && self
                .abss
                .values()
                .all(|a| a.body.well_scoped_under(n + a.arity()))
            && self
                .lists
                .values()
                .all(|es| es.iter().all(|e| e.well_scoped_under(n)))
            && self.tel.as_ref().map_or(true, |t| {
                t.entries()
                    .iter()
                    .enumerate()
                    .all(|(i, (_, ty))| ty.well_scoped_under(n + i))
            })
    }
}

/// One node of a derivation tree.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationCert {
    pub rule: RuleId,
    pub inst: Inst,
    pub premises: Vec<DerivationCert>,
    pub concl: Judgement,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VerifyError {
    #[error("rule mismatch at {path}: {detail}")]
    RuleMismatch { path: String, detail: String },
    #[error("missing premise at {path}: rule takes {expected}, certificate has {found}")]
    MissingPremise {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("side condition `{name}` failed at {path}")]
    SideConditionFailed { path: String, name: String },
    #[error("ill-scoped certificate node at {path}")]
    ScopeError { path: String },
    #[error("missing metavariable `{name}` at {path}")]
    MissingMeta { path: String, name: String },
    #[error("arity mismatch at {path}: {detail}")]
    ArityMismatch { path: String, detail: String },
    #[error("theory violation: {0}")]
    TheoryViolation(String),
}

fn ensure_extensional(theory: Theory) -> Result<(), VerifyError> {
    if theory.is_extensional() {
        Ok(())
    } else {
        Err(VerifyError::TheoryViolation(format!(
            "{theory} judgements are checked by the intensional kernel, not by certificates"
        )))
    }
}

/// Contexts compared by entry types only (display names are hints).
fn ctx_eq(a: &Context, b: &Context) -> bool {
    a.len() == b.len()
        && a.entries()
            .iter()
            .zip(b.entries())
            .all(|((_, x), (_, y))| x == y)
}

/// Judgement-form equality up to alpha (binder hints and context entry
/// names ignored).
pub fn form_eq(a: &JudgementForm, b: &JudgementForm) -> bool {
    use JudgementForm::*;
    match (a, b) {
        (
            Type { ctx, ty, sort },
            Type {
                ctx: c2,
                ty: t2,
                sort: s2,
            },
        ) => sort == s2 && ty == t2 && ctx_eq(ctx, c2),
        (
            TypeEq {
                ctx,
                lhs,
                rhs,
                sort,
            },
            TypeEq {
                ctx: c2,
                lhs: l2,
                rhs: r2,
                sort: s2,
            },
        ) => sort == s2 && lhs == l2 && rhs == r2 && ctx_eq(ctx, c2),
        (
            Term { ctx, term, ty },
            Term {
                ctx: c2,
                term: t2,
                ty: a2,
            },
        ) => term == t2 && ty == a2 && ctx_eq(ctx, c2),
        (
            TermEq { ctx, lhs, rhs, ty },
            TermEq {
                ctx: c2,
                lhs: l2,
                rhs: r2,
                ty: a2,
            },
        ) => lhs == l2 && rhs == r2 && ty == a2 && ctx_eq(ctx, c2),
        (Cont { ctx }, Cont { ctx: c2 }) => ctx_eq(ctx, c2),
        _ => false,
    }
}

/// Build one certificate node: computes the conclusion from the rule and
/// the instantiation and checks the premise count and scoping eagerly. It
/// does *not* verify the premises; that is [`verify`]'s job.
pub fn apply_rule(
    rule: RuleId,
    inst: Inst,
    premises: Vec<DerivationCert>,
    theory: Theory,
) -> Result<DerivationCert, VerifyError> {
    ensure_extensional(theory)?;
    if !inst.well_scoped() {
        return Err(VerifyError::ScopeError {
            path: "root".into(),
        });
    }
    let (expected, concl) = schema::schema(rule, &inst, theory, "root")?;
    if premises.len() != expected.len() {
        return Err(VerifyError::ArityMismatch {
            path: "root".into(),
            detail: format!(
                "{} takes {} premises, got {}",
                rule.name(),
                expected.len(),
                premises.len()
            ),
        });
    }
    Ok(DerivationCert {
        rule,
        inst,
        premises,
        concl: Judgement::new(theory, concl),
    })
}

/// Replay a derivation tree. Accepted iff every node's conclusion and
/// premises are exactly the rule's schemas under its instantiation (up to
/// alpha), side conditions hold, and the whole tree is well-scoped.
/// Returns the checked root judgement.
pub fn verify(cert: &DerivationCert, theory: Theory) -> Result<Judgement, VerifyError> {
    ensure_extensional(theory)?;
    verify_at(cert, theory, "root")
}

fn verify_at(
    cert: &DerivationCert,
    theory: Theory,
    path: &str,
) -> Result<Judgement, VerifyError> {
    if cert.rule.requires_dp() && !theory.has_dependent_products() {
        return Err(VerifyError::TheoryViolation(format!(
            "rule {} needs dependent product collections, absent from {theory}",
            cert.rule.name()
        )));
    }
    if !cert.inst.well_scoped() {
        return Err(VerifyError::ScopeError { path: path.into() });
    }
    let (expected, concl) = schema::schema(cert.rule, &cert.inst, theory, path)?;
    if cert.premises.len() != expected.len() {
        return Err(VerifyError::MissingPremise {
            path: path.into(),
            expected: expected.len(),
            found: cert.premises.len(),
        });
    }
    for (i, (sub, want)) in cert.premises.iter().zip(&expected).enumerate() {
        let sub_path = format!("{path}.{i}");
        let got = verify_at(sub, theory, &sub_path)?;
        if got.theory != theory || !form_eq(&got.form, want) {
            return Err(VerifyError::RuleMismatch {
                path: sub_path,
                detail: format!(
                    "premise {i} of {} does not match the rule schema",
                    cert.rule.name()
                ),
            });
        }
    }
    if cert.concl.theory != theory || !form_eq(&cert.concl.form, &concl) {
        return Err(VerifyError::RuleMismatch {
            path: path.into(),
            detail: format!("conclusion does not match the {} schema", cert.rule.name()),
        });
    }
    if !cert.concl.form.well_scoped() {
        return Err(VerifyError::ScopeError { path: path.into() });
    }
    Ok(cert.concl.clone())
}

// ---- defined notations ----
//
// These are macros over the core syntax; they are expanded before any
// verification and never appear as primitive formers.

/// The truth constant `tt`, i.e. `falsum -> falsum`.
pub fn truth() -> Expr {
    syntax_core::build::tt()
}

/// Membership `a eps W`, defined as `Eq(P(1), Ap(W, a), [tt])`.
pub fn epsilon(a: Expr, w: Expr) -> Expr {
    use syntax_core::build::*;
    eq(pow1(), ap(w, a), pcl(truth()))
}

/// Comprehension `{x in A | B(x)}`, defined as the function
/// `lambda x^A. [B(x)]` into the power collection of the singleton.
pub fn comprehension(dom: Expr, prop: Abs) -> Expr {
    assert_eq!(prop.arity(), 1, "comprehension takes a one-variable family");
    Expr::Lam {
        dom: Box::new(dom),
        body: Abs::new(prop.hints.clone(), Expr::Pcl(prop.body.clone())),
    }
}

/// The power collection `P(A)`, defined as the function collection
/// `A -> P(1)`.
pub fn powerset(a: Expr) -> Expr {
    Expr::FunPow1(Box::new(a))
}
