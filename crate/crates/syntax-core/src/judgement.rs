use crate::ctx::Context;
use crate::expr::Expr;
use crate::sort::Sort;
use std::fmt;

/// Which of the four calculi a judgement is stated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    Mtt,
    MttDp,
    Emtt,
    EmttDp,
}

impl Theory {
    pub fn is_extensional(self) -> bool {
        matches!(self, Theory::Emtt | Theory::EmttDp)
    }

    pub fn has_dependent_products(self) -> bool {
        matches!(self, Theory::MttDp | Theory::EmttDp)
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::Mtt => "mTT",
            Theory::MttDp => "mTT-dp",
            Theory::Emtt => "emTT",
            Theory::EmttDp => "emTT-dp",
        })
    }
}

/// The four judgement forms plus context formation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JudgementForm {
    /// `A sort [ctx]`
    Type { ctx: Context, ty: Expr, sort: Sort },
    /// `A = B sort [ctx]`
    TypeEq {
        ctx: Context,
        lhs: Expr,
        rhs: Expr,
        sort: Sort,
    },
    /// `a in A [ctx]`
    Term { ctx: Context, term: Expr, ty: Expr },
    /// `a = b in A [ctx]`
    TermEq {
        ctx: Context,
        lhs: Expr,
        rhs: Expr,
        ty: Expr,
    },
    /// `ctx cont`
    Cont { ctx: Context },
}

impl JudgementForm {
    pub fn ctx(&self) -> &Context {
        match self {
            JudgementForm::Type { ctx, .. }
            | JudgementForm::TypeEq { ctx, .. }
            | JudgementForm::Term { ctx, .. }
            | JudgementForm::TermEq { ctx, .. }
            | JudgementForm::Cont { ctx } => ctx,
        }
    }

    /// All embedded expressions are well-scoped over the context and the
    /// context itself is telescopic.
    pub fn well_scoped(&self) -> bool {
        let n = self.ctx().len();
        let ok = match self {
            JudgementForm::Type { ty, .. } => ty.well_scoped_under(n),
            JudgementForm::TypeEq { lhs, rhs, .. } => {
                lhs.well_scoped_under(n) && rhs.well_scoped_under(n)
            }
            JudgementForm::Term { term, ty, .. } => {
                term.well_scoped_under(n) && ty.well_scoped_under(n)
            }
            JudgementForm::TermEq { lhs, rhs, ty, .. } => {
                lhs.well_scoped_under(n) && rhs.well_scoped_under(n) && ty.well_scoped_under(n)
            }
            JudgementForm::Cont { .. } => true,
        };
        ok && self.ctx().well_scoped()
    }
}

/// A judgement tagged with the theory it is stated in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Judgement {
    pub theory: Theory,
    pub form: JudgementForm,
}

impl Judgement {
    pub fn new(theory: Theory, form: JudgementForm) -> Self {
        Judgement { theory, form }
    }
}
