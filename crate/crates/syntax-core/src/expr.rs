//! Abstract syntax shared by the intensional and extensional calculi.
//!
//! Bound variables are de Bruijn indices; binders keep a printing hint.
//! Alpha-equivalence is therefore plain structural equality, with hints
//! ignored by the `PartialEq` instance of [`Abs`].

use std::fmt;

/// A binding form: `hints.len()` variables bound simultaneously over `body`.
///
/// Inside `body`, index 0 refers to the *last* hint (the innermost binder),
/// index `hints.len() - 1` to the first.
#[derive(Debug, Clone)]
pub struct Abs {
    pub hints: Vec<String>,
    pub body: Box<Expr>,
}

impl PartialEq for Abs {
    fn eq(&self, other: &Self) -> bool {
        self.hints.len() == other.hints.len() && self.body == other.body
    }
}
impl Eq for Abs {}

impl Abs {
    pub fn new(hints: Vec<String>, body: Expr) -> Self {
        Abs {
            hints,
            body: Box::new(body),
        }
    }

    pub fn arity(&self) -> usize {
        self.hints.len()
    }

    /// Substitute the bound variables by `args` (given in binding order:
    /// `args[0]` for the first hint) and unshift the remainder.
    pub fn instantiate(&self, args: &[Expr]) -> Expr {
        let n = self.arity();
        assert_eq!(args.len(), n, "binder arity mismatch");
        self.body.map_vars(0, &|depth, idx| {
            if idx < depth {
                Expr::Var(idx)
            } else if idx < depth + n {
                args[n - 1 - (idx - depth)].shifted(depth as isize)
            } else {
                Expr::Var(idx - n)
            }
        })
    }

    /// Instantiate a one-binder form.
    pub fn apply1(&self, arg: &Expr) -> Expr {
        self.instantiate(std::slice::from_ref(arg))
    }

    /// Weaken the binder under `extra` fresh context entries: free
    /// variables of the body (those outside the binder) are shifted up.
    pub fn weakened(&self, extra: usize) -> Abs {
        Abs {
            hints: self.hints.clone(),
            body: Box::new(self.body.shifted_above(extra as isize, self.arity())),
        }
    }

    /// Does the body mention any of the bound variables?
    pub fn uses_bound(&self) -> bool {
        let n = self.arity();
        let mut used = false;
        self.body.visit_vars(0, &mut |depth, idx| {
            if idx >= depth && idx < depth + n {
                used = true;
            }
        });
        used
    }

    /// Strip a binder whose body does not mention the bound variables,
    /// returning the unshifted body.
    pub fn strip_unused(&self) -> Option<Expr> {
        if self.uses_bound() {
            None
        } else {
            let n = self.arity() as isize;
            Some(self.body.shifted_above(-n, 0))
        }
    }
}

/// One constructor per type or term former of the two calculi.
///
/// The final block of variants (`Eq` through `FunPow1`) belongs to the
/// extensional level only; the intensional kernel rejects them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(usize),

    // Empty set
    N0,
    /// `emp_o(a)` with explicit motive `A(x) col [x in N0]`.
    ElN0 { scrut: Box<Expr>, motive: Abs },

    // Singleton set
    N1,
    Star,
    /// `El_N1(t, c)` with explicit motive `M(z) col [z in N1]`.
    ElN1 {
        scrut: Box<Expr>,
        motive: Abs,
        branch: Box<Expr>,
    },

    // Strong indexed sum
    Sigma { dom: Box<Expr>, cod: Abs },
    Pair { fst: Box<Expr>, snd: Box<Expr> },
    /// `El_Sigma(d, (x,y).m)` with explicit motive `M(z)`.
    ElSigma {
        scrut: Box<Expr>,
        motive: Abs,
        branch: Abs,
    },

    // List set
    List(Box<Expr>),
    Nil,
    /// `cons(s, c)`: list `s` extended with last element `c`.
    Cons { init: Box<Expr>, last: Box<Expr> },
    /// `El_List(s, a, (x,y,z).l)` with explicit motive `L(w)`.
    ElList {
        scrut: Box<Expr>,
        motive: Abs,
        base: Box<Expr>,
        step: Abs,
    },

    // Disjoint sum set
    Plus { left: Box<Expr>, right: Box<Expr> },
    Inl(Box<Expr>),
    Inr(Box<Expr>),
    /// `El_+(w, (x).a_B, (y).a_C)` with explicit motive `A(z)`.
    ElPlus {
        scrut: Box<Expr>,
        motive: Abs,
        left: Abs,
        right: Abs,
    },

    // Dependent product
    Pi { dom: Box<Expr>, cod: Abs },
    Lam { dom: Box<Expr>, body: Abs },
    Ap { fun: Box<Expr>, arg: Box<Expr> },

    // Falsum
    Bot,
    /// `r_o(a)` eliminating falsum toward the (non-dependent) prop `target`.
    ElBot { scrut: Box<Expr>, target: Box<Expr> },

    // Disjunction
    Or { left: Box<Expr>, right: Box<Expr> },
    OrInl(Box<Expr>),
    OrInr(Box<Expr>),
    /// `El_or(w, (x).a_B, (y).a_C)` toward the non-dependent prop `target`.
    ElOr {
        scrut: Box<Expr>,
        target: Box<Expr>,
        left: Abs,
        right: Abs,
    },

    // Conjunction
    And { left: Box<Expr>, right: Box<Expr> },
    AndPair { fst: Box<Expr>, snd: Box<Expr> },
    Proj1(Box<Expr>),
    Proj2(Box<Expr>),

    // Implication
    Imp { left: Box<Expr>, right: Box<Expr> },
    ImpLam { dom: Box<Expr>, body: Abs },
    ImpAp { fun: Box<Expr>, arg: Box<Expr> },

    // Existential quantification
    Exists { dom: Box<Expr>, cod: Abs },
    ExPair { fst: Box<Expr>, snd: Box<Expr> },
    /// `El_ex(d, (x,y).m)` toward the non-dependent prop `target`.
    ElExists {
        scrut: Box<Expr>,
        target: Box<Expr>,
        branch: Abs,
    },

    // Universal quantification
    Forall { dom: Box<Expr>, cod: Abs },
    FaLam { dom: Box<Expr>, body: Abs },
    FaAp { fun: Box<Expr>, arg: Box<Expr> },

    // Propositional (intensional) equality
    Id {
        ty: Box<Expr>,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Refl(Box<Expr>),
    /// `El_Id(p, (x).c)` with explicit motive `C(x,y) prop`.
    ElId {
        scrut: Box<Expr>,
        motive: Abs,
        branch: Abs,
    },

    // Collection of small propositions and functions into it
    PropS,
    FunPropS(Box<Expr>),

    // ---- extensional-only formers ----

    // Extensional propositional equality
    Eq {
        ty: Box<Expr>,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    /// The canonical proof term `true`.
    TrueTm,

    // Quotients
    Quot { set: Box<Expr>, rel: Abs },
    QClass(Box<Expr>),
    /// `El_Q(p, (x).l)` with explicit motive `L(z)`.
    ElQ {
        scrut: Box<Expr>,
        motive: Abs,
        branch: Abs,
    },

    // Power collection of the singleton
    Pow1,
    /// `[B]`, the class of a small proposition in `P(1)`.
    Pcl(Box<Expr>),
    FunPow1(Box<Expr>),
}

impl Expr {
    /// Rebuild the term, calling `f(depth, idx)` at every variable
    /// occurrence, where `depth` counts the binders crossed.
    pub fn map_vars(&self, depth: usize, f: &impl Fn(usize, usize) -> Expr) -> Expr {
        use Expr::*;
        let go = |e: &Expr| Box::new(e.map_vars(depth, f));
        let go_abs = |a: &Abs| Abs {
            hints: a.hints.clone(),
            body: Box::new(a.body.map_vars(depth + a.arity(), f)),
        };
        match self {
            Var(i) => f(depth, *i),
            N0 | N1 | Star | Nil | Bot | PropS | Pow1 | TrueTm => self.clone(),
            ElN0 { scrut, motive } => ElN0 {
                scrut: go(scrut),
                motive: go_abs(motive),
            },
            ElN1 {
                scrut,
                motive,
                branch,
            } => ElN1 {
                scrut: go(scrut),
                motive: go_abs(motive),
                branch: go(branch),
            },
            Sigma { dom, cod } => Sigma {
                dom: go(dom),
                cod: go_abs(cod),
            },
            Pair { fst, snd } => Pair {
                fst: go(fst),
                snd: go(snd),
            },
            ElSigma {
                scrut,
                motive,
                branch,
            } => ElSigma {
                scrut: go(scrut),
                motive: go_abs(motive),
                branch: go_abs(branch),
            },
            List(c) => List(go(c)),
            Cons { init, last } => Cons {
                init: go(init),
                last: go(last),
            },
            ElList {
                scrut,
                motive,
                base,
                step,
            } => ElList {
                scrut: go(scrut),
                motive: go_abs(motive),
                base: go(base),
                step: go_abs(step),
            },
            Plus { left, right } => Plus {
                left: go(left),
                right: go(right),
            },
            Inl(b) => Inl(go(b)),
            Inr(c) => Inr(go(c)),
            ElPlus {
                scrut,
                motive,
                left,
                right,
            } => ElPlus {
                scrut: go(scrut),
                motive: go_abs(motive),
                left: go_abs(left),
                right: go_abs(right),
            },
            Pi { dom, cod } => Pi {
                dom: go(dom),
                cod: go_abs(cod),
            },
            Lam { dom, body } => Lam {
                dom: go(dom),
                body: go_abs(body),
            },
            Ap { fun, arg } => Ap {
                fun: go(fun),
                arg: go(arg),
            },
            ElBot { scrut, target } => ElBot {
                scrut: go(scrut),
                target: go(target),
            },
            Or { left, right } => Or {
                left: go(left),
                right: go(right),
            },
            OrInl(b) => OrInl(go(b)),
            OrInr(c) => OrInr(go(c)),
            ElOr {
                scrut,
                target,
                left,
                right,
            } => ElOr {
                scrut: go(scrut),
                target: go(target),
                left: go_abs(left),
                right: go_abs(right),
            },
            And { left, right } => And {
                left: go(left),
                right: go(right),
            },
            AndPair { fst, snd } => AndPair {
                fst: go(fst),
                snd: go(snd),
            },
            Proj1(d) => Proj1(go(d)),
            Proj2(d) => Proj2(go(d)),
            Imp { left, right } => Imp {
                left: go(left),
                right: go(right),
            },
            ImpLam { dom, body } => ImpLam {
                dom: go(dom),
                body: go_abs(body),
            },
            ImpAp { fun, arg } => ImpAp {
                fun: go(fun),
                arg: go(arg),
            },
            Exists { dom, cod } => Exists {
                dom: go(dom),
                cod: go_abs(cod),
            },
            ExPair { fst, snd } => ExPair {
                fst: go(fst),
                snd: go(snd),
            },
            ElExists {
                scrut,
                target,
                branch,
            } => ElExists {
                scrut: go(scrut),
                target: go(target),
                branch: go_abs(branch),
            },
            Forall { dom, cod } => Forall {
                dom: go(dom),
                cod: go_abs(cod),
            },
            FaLam { dom, body } => FaLam {
                dom: go(dom),
                body: go_abs(body),
            },
            FaAp { fun, arg } => FaAp {
                fun: go(fun),
                arg: go(arg),
            },
            Id { ty, lhs, rhs } => Id {
                ty: go(ty),
                lhs: go(lhs),
                rhs: go(rhs),
            },
            Refl(a) => Refl(go(a)),
            ElId {
                scrut,
                motive,
                branch,
            } => ElId {
                scrut: go(scrut),
                motive: go_abs(motive),
                branch: go_abs(branch),
            },
            FunPropS(b) => FunPropS(go(b)),
            Eq { ty, lhs, rhs } => Eq {
                ty: go(ty),
                lhs: go(lhs),
                rhs: go(rhs),
            },
            Quot { set, rel } => Quot {
                set: go(set),
                rel: go_abs(rel),
            },
            QClass(a) => QClass(go(a)),
            ElQ {
                scrut,
                motive,
                branch,
            } => ElQ {
                scrut: go(scrut),
                motive: go_abs(motive),
                branch: go_abs(branch),
            },
            Pcl(b) => Pcl(go(b)),
            FunPow1(b) => FunPow1(go(b)),
        }
    }

    /// Rebuild the node by transforming each immediate child with `f`,
    /// which receives the number of binders entered for that child.
    /// Stops at the first error.
    pub fn try_map_children<E>(
        &self,
        f: &mut impl FnMut(&Expr, usize) -> Result<Expr, E>,
    ) -> Result<Expr, E> {
        use Expr::*;
        macro_rules! go {
            ($e:expr) => {
                Box::new(f($e, 0)?)
            };
        }
        macro_rules! go_abs {
            ($a:expr) => {
                Abs {
                    hints: $a.hints.clone(),
                    body: Box::new(f(&$a.body, $a.arity())?),
                }
            };
        }
        Ok(match self {
            Var(_) | N0 | N1 | Star | Nil | Bot | PropS | Pow1 | TrueTm => self.clone(),
            ElN0 { scrut, motive } => ElN0 {
                scrut: go!(scrut),
                motive: go_abs!(motive),
            },
            ElN1 {
                scrut,
                motive,
                branch,
            } => ElN1 {
                scrut: go!(scrut),
                motive: go_abs!(motive),
                branch: go!(branch),
            },
            Sigma { dom, cod } => Sigma {
                dom: go!(dom),
                cod: go_abs!(cod),
            },
            Pair { fst, snd } => Pair {
                fst: go!(fst),
                snd: go!(snd),
            },
            ElSigma {
                scrut,
                motive,
                branch,
            } => ElSigma {
                scrut: go!(scrut),
                motive: go_abs!(motive),
                branch: go_abs!(branch),
            },
            List(c) => List(go!(c)),
            Cons { init, last } => Cons {
                init: go!(init),
                last: go!(last),
            },
            ElList {
                scrut,
                motive,
                base,
                step,
            } => ElList {
                scrut: go!(scrut),
                motive: go_abs!(motive),
                base: go!(base),
                step: go_abs!(step),
            },
            Plus { left, right } => Plus {
                left: go!(left),
                right: go!(right),
            },
            Inl(b) => Inl(go!(b)),
            Inr(c) => Inr(go!(c)),
            ElPlus {
                scrut,
                motive,
                left,
                right,
            } => ElPlus {
                scrut: go!(scrut),
                motive: go_abs!(motive),
                left: go_abs!(left),
                right: go_abs!(right),
            },
            Pi { dom, cod } => Pi {
                dom: go!(dom),
                cod: go_abs!(cod),
            },
            Lam { dom, body } => Lam {
                dom: go!(dom),
                body: go_abs!(body),
            },
            Ap { fun, arg } => Ap {
                fun: go!(fun),
                arg: go!(arg),
            },
            ElBot { scrut, target } => ElBot {
                scrut: go!(scrut),
                target: go!(target),
            },
            Or { left, right } => Or {
                left: go!(left),
                right: go!(right),
            },
            OrInl(b) => OrInl(go!(b)),
            OrInr(c) => OrInr(go!(c)),
            ElOr {
                scrut,
                target,
                left,
                right,
            } => ElOr {
                scrut: go!(scrut),
                target: go!(target),
                left: go_abs!(left),
                right: go_abs!(right),
            },
            And { left, right } => And {
                left: go!(left),
                right: go!(right),
            },
            AndPair { fst, snd } => AndPair {
                fst: go!(fst),
                snd: go!(snd),
            },
            Proj1(d) => Proj1(go!(d)),
            Proj2(d) => Proj2(go!(d)),
            Imp { left, right } => Imp {
                left: go!(left),
                right: go!(right),
            },
            ImpLam { dom, body } => ImpLam {
                dom: go!(dom),
                body: go_abs!(body),
            },
            ImpAp { fun, arg } => ImpAp {
                fun: go!(fun),
                arg: go!(arg),
            },
            Exists { dom, cod } => Exists {
                dom: go!(dom),
                cod: go_abs!(cod),
            },
            ExPair { fst, snd } => ExPair {
                fst: go!(fst),
                snd: go!(snd),
            },
            ElExists {
                scrut,
                target,
                branch,
            } => ElExists {
                scrut: go!(scrut),
                target: go!(target),
                branch: go_abs!(branch),
            },
            Forall { dom, cod } => Forall {
                dom: go!(dom),
                cod: go_abs!(cod),
            },
            FaLam { dom, body } => FaLam {
                dom: go!(dom),
                body: go_abs!(body),
            },
            FaAp { fun, arg } => FaAp {
                fun: go!(fun),
                arg: go!(arg),
            },
            Id { ty, lhs, rhs } => Id {
                ty: go!(ty),
                lhs: go!(lhs),
                rhs: go!(rhs),
            },
            Refl(a) => Refl(go!(a)),
            ElId {
                scrut,
                motive,
                branch,
            } => ElId {
                scrut: go!(scrut),
                motive: go_abs!(motive),
                branch: go_abs!(branch),
            },
            FunPropS(b) => FunPropS(go!(b)),
            Eq { ty, lhs, rhs } => Eq {
                ty: go!(ty),
                lhs: go!(lhs),
                rhs: go!(rhs),
            },
            Quot { set, rel } => Quot {
                set: go!(set),
                rel: go_abs!(rel),
            },
            QClass(a) => QClass(go!(a)),
            ElQ {
                scrut,
                motive,
                branch,
            } => ElQ {
                scrut: go!(scrut),
                motive: go_abs!(motive),
                branch: go_abs!(branch),
            },
            Pcl(b) => Pcl(go!(b)),
            FunPow1(b) => FunPow1(go!(b)),
        })
    }

    /// Visit every variable occurrence with the crossing depth.
    pub fn visit_vars(&self, depth: usize, f: &mut impl FnMut(usize, usize)) {
        use Expr::*;
        match self {
            Var(i) => f(depth, *i),
            N0 | N1 | Star | Nil | Bot | PropS | Pow1 | TrueTm => {}
            ElN0 { scrut, motive } => {
                scrut.visit_vars(depth, f);
                motive.body.visit_vars(depth + motive.arity(), f);
            }
            ElN1 {
                scrut,
                motive,
                branch,
            } => {
                scrut.visit_vars(depth, f);
                motive.body.visit_vars(depth + motive.arity(), f);
                branch.visit_vars(depth, f);
            }
            Sigma { dom, cod } | Pi { dom, cod } | Exists { dom, cod } | Forall { dom, cod } => {
                dom.visit_vars(depth, f);
                cod.body.visit_vars(depth + cod.arity(), f);
            }
            Lam { dom, body } | ImpLam { dom, body } | FaLam { dom, body } => {
                dom.visit_vars(depth, f);
                body.body.visit_vars(depth + body.arity(), f);
            }
            Pair { fst, snd } | AndPair { fst, snd } | ExPair { fst, snd } => {
                fst.visit_vars(depth, f);
                snd.visit_vars(depth, f);
            }
            ElSigma {
                scrut,
                motive,
                branch,
            }
            | ElQ {
                scrut,
                motive,
                branch,
            }
            | ElId {
                scrut,
                motive,
                branch,
            } => {
                scrut.visit_vars(depth, f);
                motive.body.visit_vars(depth + motive.arity(), f);
                branch.body.visit_vars(depth + branch.arity(), f);
            }
            List(c) | Inl(c) | Inr(c) | OrInl(c) | OrInr(c) | Proj1(c) | Proj2(c) | Refl(c)
            | FunPropS(c) | QClass(c) | Pcl(c) | FunPow1(c) => c.visit_vars(depth, f),
            Cons { init, last } => {
                init.visit_vars(depth, f);
                last.visit_vars(depth, f);
            }
            ElList {
                scrut,
                motive,
                base,
                step,
            } => {
                scrut.visit_vars(depth, f);
                motive.body.visit_vars(depth + motive.arity(), f);
                base.visit_vars(depth, f);
                step.body.visit_vars(depth + step.arity(), f);
            }
            Plus { left, right } | Or { left, right } | And { left, right }
            | Imp { left, right } => {
                left.visit_vars(depth, f);
                right.visit_vars(depth, f);
            }
            ElPlus {
                scrut,
                motive,
                left,
                right,
            } => {
                scrut.visit_vars(depth, f);
                motive.body.visit_vars(depth + motive.arity(), f);
                left.body.visit_vars(depth + left.arity(), f);
                right.body.visit_vars(depth + right.arity(), f);
            }
            Ap { fun, arg } | ImpAp { fun, arg } | FaAp { fun, arg } => {
                fun.visit_vars(depth, f);
                arg.visit_vars(depth, f);
            }
            ElBot { scrut, target } => {
                scrut.visit_vars(depth, f);
                target.visit_vars(depth, f);
            }
            ElOr {
                scrut,
                target,
                left,
                right,
            } => {
                scrut.visit_vars(depth, f);
                target.visit_vars(depth, f);
                left.body.visit_vars(depth + left.arity(), f);
                right.body.visit_vars(depth + right.arity(), f);
            }
            ElExists {
                scrut,
                target,
                branch,
            } => {
                scrut.visit_vars(depth, f);
                target.visit_vars(depth, f);
                branch.body.visit_vars(depth + branch.arity(), f);
            }
            Id { ty, lhs, rhs } | Eq { ty, lhs, rhs } => {
                ty.visit_vars(depth, f);
                lhs.visit_vars(depth, f);
                rhs.visit_vars(depth, f);
            }
            Quot { set, rel } => {
                set.visit_vars(depth, f);
                rel.body.visit_vars(depth + rel.arity(), f);
            }
        }
    }

    /// Shift free variables at or above `cutoff` by `by`.
    pub fn shifted_above(&self, by: isize, cutoff: usize) -> Expr {
        if by == 0 {
            return self.clone();
        }
        self.map_vars(0, &|depth, idx| {
            if idx >= depth + cutoff {
                let j = idx as isize + by;
                assert!(j >= depth as isize, "negative shift crossed a binder");
                Expr::Var(j as usize)
            } else {
                Expr::Var(idx)
            }
        })
    }

    /// Shift all free variables by `by`.
    pub fn shifted(&self, by: isize) -> Expr {
        self.shifted_above(by, 0)
    }

    /// Capture-avoiding substitution of the free variable `target`
    /// (counted at the term's top level) by `value`, unshifting the
    /// variables above it.
    pub fn subst(&self, target: usize, value: &Expr) -> Expr {
        self.map_vars(0, &|depth, idx| {
            if idx == depth + target {
                value.shifted(depth as isize)
            } else if idx > depth + target {
                Expr::Var(idx - 1)
            } else {
                Expr::Var(idx)
            }
        })
    }

    /// Does the term mention the free variable `target`?
    pub fn mentions(&self, target: usize) -> bool {
        let mut hit = false;
        self.visit_vars(0, &mut |depth, idx| {
            if idx == depth + target {
                hit = true;
            }
        });
        hit
    }

    /// The largest free variable index, if any.
    pub fn max_free_var(&self) -> Option<usize> {
        let mut max: Option<usize> = None;
        self.visit_vars(0, &mut |depth, idx| {
            if idx >= depth {
                let free = idx - depth;
                max = Some(max.map_or(free, |m| m.max(free)));
            }
        });
        max
    }

    /// Is every free variable below `n`?
    pub fn well_scoped_under(&self, n: usize) -> bool {
        self.max_free_var().map_or(true, |m| m < n)
    }
}

/// Alpha-equivalence: structural equality with binder hints ignored.
pub fn alpha_eq(a: &Expr, b: &Expr) -> bool {
    a == b
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::print::fmt_expr(self, &mut Vec::new(), f)
    }
}
