//! The checking engine: weak-head reduction, definitional equality and
//! bidirectional type checking for the intensional level.

use crate::{KernelConfig, KernelError};
use syntax_core::{alpha_eq, Abs, Context, Expr, Sort, Theory};

/// Is the expression a (possible) type former rather than a term former?
/// Extensional-only formers count as type formers of the other level.
pub fn is_type_former(e: &Expr) -> bool {
    use Expr::*;
    matches!(
        e,
        N0 | N1
            | Sigma { .. }
            | List(_)
            | Plus { .. }
            | Pi { .. }
            | Bot
            | Or { .. }
            | And { .. }
            | Imp { .. }
            | Exists { .. }
            | Forall { .. }
            | Id { .. }
            | PropS
            | FunPropS(_)
            | Eq { .. }
            | Quot { .. }
            | Pow1
            | FunPow1(_)
    )
}

/// Contract `e` if it is itself a redex of one of the computation rules.
pub(crate) fn contract(e: &Expr, n1_computation: bool) -> Option<Expr> {
    use Expr::*;
    match e {
        Ap { fun, arg } => match fun.as_ref() {
            Lam { body, .. } => Some(body.apply1(arg)),
            _ => None,
        },
        ImpAp { fun, arg } => match fun.as_ref() {
            ImpLam { body, .. } => Some(body.apply1(arg)),
            _ => None,
        },
        FaAp { fun, arg } => match fun.as_ref() {
            FaLam { body, .. } => Some(body.apply1(arg)),
            _ => None,
        },
        Proj1(d) => match d.as_ref() {
            AndPair { fst, .. } => Some((**fst).clone()),
            _ => None,
        },
        Proj2(d) => match d.as_ref() {
            AndPair { snd, .. } => Some((**snd).clone()),
            _ => None,
        },
        ElSigma { scrut, branch, .. } => match scrut.as_ref() {
            Pair { fst, snd } => Some(branch.instantiate(&[(**fst).clone(), (**snd).clone()])),
            _ => None,
        },
        ElList {
            scrut,
            motive,
            base,
            step,
        } => match scrut.as_ref() {
            Nil => Some((**base).clone()),
            Cons { init, last } => {
                let rec = ElList {
                    scrut: init.clone(),
                    motive: motive.clone(),
                    base: base.clone(),
                    step: step.clone(),
                };
                Some(step.instantiate(&[(**init).clone(), (**last).clone(), rec]))
            }
            _ => None,
        },
        ElPlus {
            scrut, left, right, ..
        } => match scrut.as_ref() {
            Inl(b) => Some(left.apply1(b)),
            Inr(c) => Some(right.apply1(c)),
            _ => None,
        },
        ElOr {
            scrut, left, right, ..
        } => match scrut.as_ref() {
            OrInl(b) => Some(left.apply1(b)),
            OrInr(c) => Some(right.apply1(c)),
            _ => None,
        },
        ElExists { scrut, branch, .. } => match scrut.as_ref() {
            ExPair { fst, snd } => Some(branch.instantiate(&[(**fst).clone(), (**snd).clone()])),
            _ => None,
        },
        ElId { scrut, branch, .. } => match scrut.as_ref() {
            Refl(a) => Some(branch.apply1(a)),
            _ => None,
        },
        ElN1 { scrut, branch, .. } if n1_computation => match scrut.as_ref() {
            Star => Some((**branch).clone()),
            _ => None,
        },
        _ => None,
    }
}

/// Does `e` mention any of its `k` innermost free variables?
fn mentions_below(e: &Expr, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    let mut hit = false;
    e.visit_vars(0, &mut |depth, idx| {
        if idx >= depth && idx - depth < k {
            hit = true;
        }
    });
    hit
}

pub struct Checker {
    cfg: KernelConfig,
    fuel: u64,
    path: Vec<String>,
}

impl Checker {
    pub fn new(cfg: &KernelConfig) -> Self {
        Checker {
            cfg: *cfg,
            fuel: cfg.fuel,
            path: Vec::new(),
        }
    }

    fn spend(&mut self) -> Result<(), KernelError> {
        if self.fuel == 0 {
            Err(KernelError::FuelExhausted {
                steps: self.cfg.fuel,
            })
        } else {
            self.fuel -= 1;
            Ok(())
        }
    }

    fn here(&self) -> String {
        if self.path.is_empty() {
            "<root>".to_string()
        } else {
            self.path.join(".")
        }
    }

    fn at<T>(
        &mut self,
        seg: &str,
        f: impl FnOnce(&mut Self) -> Result<T, KernelError>,
    ) -> Result<T, KernelError> {
        self.path.push(seg.to_string());
        let r = f(self);
        self.path.pop();
        r
    }

    // ---- reduction ----

    /// Weak-head normal form: reduce the scrutinee position, contract at
    /// the head, repeat. Never reduces under a binder.
    pub fn whnf(&mut self, e: &Expr) -> Result<Expr, KernelError> {
        use Expr::*;
        let head = match e {
            Ap { fun, arg } => Ap {
                fun: Box::new(self.whnf(fun)?),
                arg: arg.clone(),
            },
            ImpAp { fun, arg } => ImpAp {
                fun: Box::new(self.whnf(fun)?),
                arg: arg.clone(),
            },
            FaAp { fun, arg } => FaAp {
                fun: Box::new(self.whnf(fun)?),
                arg: arg.clone(),
            },
            Proj1(d) => Proj1(Box::new(self.whnf(d)?)),
            Proj2(d) => Proj2(Box::new(self.whnf(d)?)),
            ElSigma {
                scrut,
                motive,
                branch,
            } => ElSigma {
                scrut: Box::new(self.whnf(scrut)?),
                motive: motive.clone(),
                branch: branch.clone(),
            },
            ElList {
                scrut,
                motive,
                base,
                step,
            } => ElList {
                scrut: Box::new(self.whnf(scrut)?),
                motive: motive.clone(),
                base: base.clone(),
                step: step.clone(),
            },
            ElPlus {
                scrut,
                motive,
                left,
                right,
            } => ElPlus {
                scrut: Box::new(self.whnf(scrut)?),
                motive: motive.clone(),
                left: left.clone(),
                right: right.clone(),
            },
            ElOr {
                scrut,
                target,
                left,
                right,
            } => ElOr {
                scrut: Box::new(self.whnf(scrut)?),
                target: target.clone(),
                left: left.clone(),
                right: right.clone(),
            },
            ElExists {
                scrut,
                target,
                branch,
            } => ElExists {
                scrut: Box::new(self.whnf(scrut)?),
                target: target.clone(),
                branch: branch.clone(),
            },
            ElId {
                scrut,
                motive,
                branch,
            } => ElId {
                scrut: Box::new(self.whnf(scrut)?),
                motive: motive.clone(),
                branch: branch.clone(),
            },
            ElN1 {
                scrut,
                motive,
                branch,
            } if self.cfg.n1_computation => ElN1 {
                scrut: Box::new(self.whnf(scrut)?),
                motive: motive.clone(),
                branch: branch.clone(),
            },
            _ => return Ok(e.clone()),
        };
        if let Some(next) = contract(&head, self.cfg.n1_computation) {
            self.spend()?;
            self.whnf(&next)
        } else {
            Ok(head)
        }
    }

    /// Restricted normalization used under lambda binders, where the theory
    /// has no xi-rule: contract only redexes that mention none of the
    /// `blocked` innermost bound variables (the fragment generated by the
    /// explicit substitution rule).
    fn rnf(&mut self, e: &Expr, blocked: usize) -> Result<Expr, KernelError> {
        let rebuilt = e.try_map_children(&mut |child, binders| self.rnf(child, blocked + binders))?;
        if !mentions_below(&rebuilt, blocked) {
            if let Some(next) = contract(&rebuilt, self.cfg.n1_computation) {
                self.spend()?;
                return self.rnf(&next, blocked);
            }
        }
        Ok(rebuilt)
    }

    // ---- definitional equality ----

    pub fn conv(&mut self, a: &Expr, b: &Expr) -> Result<(), KernelError> {
        if alpha_eq(a, b) {
            return Ok(());
        }
        let a = self.whnf(a)?;
        let b = self.whnf(b)?;
        if alpha_eq(&a, &b) {
            return Ok(());
        }
        use Expr::*;
        match (&a, &b) {
            (Sigma { dom: d1, cod: c1 }, Sigma { dom: d2, cod: c2 })
            | (Pi { dom: d1, cod: c1 }, Pi { dom: d2, cod: c2 })
            | (Exists { dom: d1, cod: c1 }, Exists { dom: d2, cod: c2 })
            | (Forall { dom: d1, cod: c1 }, Forall { dom: d2, cod: c2 }) => {
                self.at("dom", |s| s.conv(d1, d2))?;
                self.conv_abs_type("cod", c1, c2)
            }
            (Quot { set: a1, rel: r1 }, Quot { set: a2, rel: r2 }) => {
                self.at("set", |s| s.conv(a1, a2))?;
                self.conv_abs_type("rel", r1, r2)
            }
            (List(x), List(y))
            | (FunPropS(x), FunPropS(y))
            | (FunPow1(x), FunPow1(y))
            | (Pcl(x), Pcl(y))
            | (Inl(x), Inl(y))
            | (Inr(x), Inr(y))
            | (OrInl(x), OrInl(y))
            | (OrInr(x), OrInr(y))
            | (Refl(x), Refl(y))
            | (QClass(x), QClass(y))
            | (Proj1(x), Proj1(y))
            | (Proj2(x), Proj2(y)) => self.at("arg", |s| s.conv(x, y)),
            (Plus { left: l1, right: r1 }, Plus { left: l2, right: r2 })
            | (Or { left: l1, right: r1 }, Or { left: l2, right: r2 })
            | (And { left: l1, right: r1 }, And { left: l2, right: r2 })
            | (Imp { left: l1, right: r1 }, Imp { left: l2, right: r2 }) => {
                self.at("left", |s| s.conv(l1, l2))?;
                self.at("right", |s| s.conv(r1, r2))
            }
            (
                Id {
                    ty: t1,
                    lhs: l1,
                    rhs: r1,
                },
                Id {
                    ty: t2,
                    lhs: l2,
                    rhs: r2,
                },
            )
            | (
                Eq {
                    ty: t1,
                    lhs: l1,
                    rhs: r1,
                },
                Eq {
                    ty: t2,
                    lhs: l2,
                    rhs: r2,
                },
            ) => {
                self.at("ty", |s| s.conv(t1, t2))?;
                self.at("lhs", |s| s.conv(l1, l2))?;
                self.at("rhs", |s| s.conv(r1, r2))
            }
            (Lam { dom: d1, body: b1 }, Lam { dom: d2, body: b2 })
            | (ImpLam { dom: d1, body: b1 }, ImpLam { dom: d2, body: b2 })
            | (FaLam { dom: d1, body: b1 }, FaLam { dom: d2, body: b2 }) => {
                self.at("dom", |s| s.conv(d1, d2))?;
                self.conv_abs_term("body", b1, b2)
            }
            (Pair { fst: f1, snd: s1 }, Pair { fst: f2, snd: s2 })
            | (AndPair { fst: f1, snd: s1 }, AndPair { fst: f2, snd: s2 })
            | (ExPair { fst: f1, snd: s1 }, ExPair { fst: f2, snd: s2 }) => {
                self.at("fst", |s| s.conv(f1, f2))?;
                self.at("snd", |s| s.conv(s1, s2))
            }
            (Cons { init: i1, last: l1 }, Cons { init: i2, last: l2 }) => {
                self.at("init", |s| s.conv(i1, i2))?;
                self.at("last", |s| s.conv(l1, l2))
            }
            (Ap { fun: f1, arg: a1 }, Ap { fun: f2, arg: a2 })
            | (ImpAp { fun: f1, arg: a1 }, ImpAp { fun: f2, arg: a2 })
            | (FaAp { fun: f1, arg: a1 }, FaAp { fun: f2, arg: a2 }) => {
                self.at("fun", |s| s.conv(f1, f2))?;
                self.at("arg", |s| s.conv(a1, a2))
            }
            (
                ElN0 {
                    scrut: s1,
                    motive: m1,
                },
                ElN0 {
                    scrut: s2,
                    motive: m2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.conv_abs_type("motive", m1, m2)
            }
            (
                ElN1 {
                    scrut: s1,
                    motive: m1,
                    branch: c1,
                },
                ElN1 {
                    scrut: s2,
                    motive: m2,
                    branch: c2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.conv_abs_type("motive", m1, m2)?;
                self.at("branch", |s| s.conv(c1, c2))
            }
            (
                ElSigma {
                    scrut: s1,
                    motive: m1,
                    branch: c1,
                },
                ElSigma {
                    scrut: s2,
                    motive: m2,
                    branch: c2,
                },
            )
            | (
                ElQ {
                    scrut: s1,
                    motive: m1,
                    branch: c1,
                },
                ElQ {
                    scrut: s2,
                    motive: m2,
                    branch: c2,
                },
            )
            | (
                ElId {
                    scrut: s1,
                    motive: m1,
                    branch: c1,
                },
                ElId {
                    scrut: s2,
                    motive: m2,
                    branch: c2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.conv_abs_type("motive", m1, m2)?;
                self.conv_abs_term("branch", c1, c2)
            }
            (
                ElList {
                    scrut: s1,
                    motive: m1,
                    base: a1,
                    step: l1,
                },
                ElList {
                    scrut: s2,
                    motive: m2,
                    base: a2,
                    step: l2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.conv_abs_type("motive", m1, m2)?;
                self.at("base", |s| s.conv(a1, a2))?;
                self.conv_abs_term("step", l1, l2)
            }
            (
                ElPlus {
                    scrut: s1,
                    motive: m1,
                    left: l1,
                    right: r1,
                },
                ElPlus {
                    scrut: s2,
                    motive: m2,
                    left: l2,
                    right: r2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.conv_abs_type("motive", m1, m2)?;
                self.conv_abs_term("left", l1, l2)?;
                self.conv_abs_term("right", r1, r2)
            }
            (
                ElBot {
                    scrut: s1,
                    target: t1,
                },
                ElBot {
                    scrut: s2,
                    target: t2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.at("target", |s| s.conv(t1, t2))
            }
            (
                ElOr {
                    scrut: s1,
                    target: t1,
                    left: l1,
                    right: r1,
                },
                ElOr {
                    scrut: s2,
                    target: t2,
                    left: l2,
                    right: r2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.at("target", |s| s.conv(t1, t2))?;
                self.conv_abs_term("left", l1, l2)?;
                self.conv_abs_term("right", r1, r2)
            }
            (
                ElExists {
                    scrut: s1,
                    target: t1,
                    branch: c1,
                },
                ElExists {
                    scrut: s2,
                    target: t2,
                    branch: c2,
                },
            ) => {
                self.at("scrut", |s| s.conv(s1, s2))?;
                self.at("target", |s| s.conv(t1, t2))?;
                self.conv_abs_term("branch", c1, c2)
            }
            _ => Err(KernelError::NotConvertible { path: self.here() }),
        }
    }

    /// Bodies of type formers: full congruence (licensed by the
    /// substitution rule for type equality).
    fn conv_abs_type(&mut self, seg: &str, a: &Abs, b: &Abs) -> Result<(), KernelError> {
        if a.arity() != b.arity() {
            return Err(KernelError::NotConvertible { path: self.here() });
        }
        self.at(seg, |s| s.conv(&a.body, &b.body))
    }

    /// Bodies of lambda flavors and eliminator branches: no xi-rule, so
    /// only the substitution-generated fragment is available. Contract
    /// redexes not touching the bound variables, then compare up to alpha.
    fn conv_abs_term(&mut self, seg: &str, a: &Abs, b: &Abs) -> Result<(), KernelError> {
        if a.arity() != b.arity() {
            return Err(KernelError::NotConvertible { path: self.here() });
        }
        self.path.push(seg.to_string());
        let res = (|| {
            let x = self.rnf(&a.body, a.arity())?;
            let y = self.rnf(&b.body, b.arity())?;
            if alpha_eq(&x, &y) {
                Ok(())
            } else {
                Err(KernelError::NotConvertible { path: self.here() })
            }
        })();
        self.path.pop();
        res
    }

    // ---- sort inference for types ----

    /// Minimal sort at which `a` classifies over `ctx`; errs if `a` is not
    /// a type of the configured theory.
    pub fn sort_of(&mut self, ctx: &Context, a: &Expr) -> Result<Sort, KernelError> {
        use Expr::*;
        match a {
            N0 | N1 => Ok(Sort::Set),
            List(c) => {
                let s = self.at("List", |k| k.sort_of(ctx, c))?;
                if !s.leq(Sort::Set) {
                    return Err(KernelError::SortTooSmall {
                        required: Sort::Set,
                        found: s,
                    });
                }
                Ok(Sort::Set)
            }
            Plus { left, right } => {
                for (seg, part) in [("Plus.left", left), ("Plus.right", right)] {
                    let s = self.at(seg, |k| k.sort_of(ctx, part))?;
                    if !s.leq(Sort::Set) {
                        return Err(KernelError::SortTooSmall {
                            required: Sort::Set,
                            found: s,
                        });
                    }
                }
                Ok(Sort::Set)
            }
            Sigma { dom, cod } => {
                let s1 = self.at("Sigma.dom", |k| k.sort_of(ctx, dom))?;
                let ext = ctx.extended(hint(cod, 0), (**dom).clone());
                let s2 = self.at("Sigma.cod", |k| k.sort_of(&ext, &cod.body))?;
                if s1.leq(Sort::Set) && s2.leq(Sort::Set) {
                    Ok(Sort::Set)
                } else {
                    Ok(Sort::Col)
                }
            }
            Pi { dom, cod } => {
                let s1 = self.at("Pi.dom", |k| k.sort_of(ctx, dom))?;
                let ext = ctx.extended(hint(cod, 0), (**dom).clone());
                let s2 = self.at("Pi.cod", |k| k.sort_of(&ext, &cod.body))?;
                if s1.leq(Sort::Set) && s2.leq(Sort::Set) {
                    Ok(Sort::Set)
                } else if self.cfg.theory.has_dependent_products() {
                    Ok(Sort::Col)
                } else {
                    Err(KernelError::TheoryViolation(
                        "dependent products over collections need the dp extension \
                         (only functions into the small propositions form a collection here)"
                            .to_string(),
                    ))
                }
            }
            FunPropS(b) => {
                let s = self.at("FunPropS", |k| k.sort_of(ctx, b))?;
                if !s.leq(Sort::Set) {
                    return Err(KernelError::SortTooSmall {
                        required: Sort::Set,
                        found: s,
                    });
                }
                Ok(Sort::Col)
            }
            PropS => Ok(Sort::Col),
            Bot => Ok(Sort::PropS),
            Or { left, right } | And { left, right } | Imp { left, right } => {
                let tag = match a {
                    Or { .. } => "Or",
                    And { .. } => "And",
                    _ => "Imp",
                };
                let mut small = true;
                for (seg, part) in [("left", left), ("right", right)] {
                    let s = self.at(&format!("{tag}.{seg}"), |k| k.sort_of(ctx, part))?;
                    if !s.leq(Sort::Prop) {
                        return Err(KernelError::SortTooSmall {
                            required: Sort::Prop,
                            found: s,
                        });
                    }
                    small &= s == Sort::PropS;
                }
                Ok(if small { Sort::PropS } else { Sort::Prop })
            }
            Exists { dom, cod } | Forall { dom, cod } => {
                let tag = if matches!(a, Exists { .. }) {
                    "Exists"
                } else {
                    "Forall"
                };
                let s1 = self.at(&format!("{tag}.dom"), |k| k.sort_of(ctx, dom))?;
                let ext = ctx.extended(hint(cod, 0), (**dom).clone());
                let s2 = self.at(&format!("{tag}.cod"), |k| k.sort_of(&ext, &cod.body))?;
                if !s2.leq(Sort::Prop) {
                    return Err(KernelError::SortTooSmall {
                        required: Sort::Prop,
                        found: s2,
                    });
                }
                if s1.leq(Sort::Set) && s2 == Sort::PropS {
                    Ok(Sort::PropS)
                } else {
                    Ok(Sort::Prop)
                }
            }
            Id { ty, lhs, rhs } => {
                let s = self.at("Id.ty", |k| k.sort_of(ctx, ty))?;
                self.at("Id.lhs", |k| k.check(ctx, lhs, ty))?;
                self.at("Id.rhs", |k| k.check(ctx, rhs, ty))?;
                Ok(if s.leq(Sort::Set) {
                    Sort::PropS
                } else {
                    Sort::Prop
                })
            }
            Eq { .. } | TrueTm | Quot { .. } | QClass(_) | ElQ { .. } | Pow1 | Pcl(_)
            | FunPow1(_) => Err(KernelError::TheoryViolation(format!(
                "extensional former {a} is not part of {}",
                self.cfg.theory
            ))),
            // Terms whose type is PropS are themselves small propositions
            // (the small propositions form a Russell-style collection).
            _ => {
                let t = self.infer(ctx, a)?;
                let w = self.whnf(&t)?;
                if alpha_eq(&w, &Expr::PropS) {
                    Ok(Sort::PropS)
                } else {
                    Err(KernelError::NotAType {
                        path: self.here(),
                        detail: format!("a term of type {w} is not a type"),
                    })
                }
            }
        }
    }

    // ---- term checking ----

    /// Check `t` against the expected type `a` (assumed to be a valid type
    /// over `ctx`).
    pub fn check(&mut self, ctx: &Context, t: &Expr, a: &Expr) -> Result<(), KernelError> {
        use Expr::*;
        let w = self.whnf(a)?;
        match (t, &w) {
            (Star, N1) | (Nil, List(_)) => Ok(()),
            (Cons { init, last }, List(c)) => {
                self.at("cons.init", |k| k.check(ctx, init, &w))?;
                self.at("cons.last", |k| k.check(ctx, last, c))
            }
            (Pair { fst, snd }, Sigma { dom, cod }) => {
                self.at("pair.fst", |k| k.check(ctx, fst, dom))?;
                let snd_ty = cod.apply1(fst);
                self.at("pair.snd", |k| k.check(ctx, snd, &snd_ty))
            }
            (ExPair { fst, snd }, Exists { dom, cod }) => {
                self.at("expair.fst", |k| k.check(ctx, fst, dom))?;
                let snd_ty = cod.apply1(fst);
                self.at("expair.snd", |k| k.check(ctx, snd, &snd_ty))
            }
            (AndPair { fst, snd }, And { left, right }) => {
                self.at("andpair.fst", |k| k.check(ctx, fst, left))?;
                self.at("andpair.snd", |k| k.check(ctx, snd, right))
            }
            (Inl(b), Plus { left, .. }) => self.at("inl", |k| k.check(ctx, b, left)),
            (Inr(c), Plus { right, .. }) => self.at("inr", |k| k.check(ctx, c, right)),
            (OrInl(b), Or { left, .. }) => self.at("orinl", |k| k.check(ctx, b, left)),
            (OrInr(c), Or { right, .. }) => self.at("orinr", |k| k.check(ctx, c, right)),
            (Lam { dom, body }, Pi { dom: pd, cod }) => {
                self.at("lam.dom", |k| k.conv(dom, pd))?;
                let ext = ctx.extended(hint(body, 0), (**pd).clone());
                self.at("lam.body", |k| k.check(&ext, &body.body, &cod.body))
            }
            (Lam { dom, body }, FunPropS(b)) => {
                self.at("lam.dom", |k| k.conv(dom, b))?;
                let ext = ctx.extended(hint(body, 0), (**b).clone());
                self.at("lam.body", |k| k.check(&ext, &body.body, &PropS))
            }
            (ImpLam { dom, body }, Imp { left, right }) => {
                self.at("implam.dom", |k| k.conv(dom, left))?;
                let ext = ctx.extended(hint(body, 0), (**left).clone());
                let target = right.shifted(1);
                self.at("implam.body", |k| k.check(&ext, &body.body, &target))
            }
            (FaLam { dom, body }, Forall { dom: fd, cod }) => {
                self.at("falam.dom", |k| k.conv(dom, fd))?;
                let ext = ctx.extended(hint(body, 0), (**fd).clone());
                self.at("falam.body", |k| k.check(&ext, &body.body, &cod.body))
            }
            (Refl(x), Id { ty, lhs, rhs }) => {
                self.at("refl", |k| k.check(ctx, x, ty))?;
                self.at("refl.lhs", |k| k.conv(x, lhs))?;
                self.at("refl.rhs", |k| k.conv(x, rhs))
            }
            _ => {
                if alpha_eq(&w, &PropS) && is_type_former(t) {
                    let s = self.sort_of(ctx, t)?;
                    return if s == Sort::PropS {
                        Ok(())
                    } else {
                        Err(KernelError::SortTooSmall {
                            required: Sort::PropS,
                            found: s,
                        })
                    };
                }
                let inferred = self.infer(ctx, t)?;
                let path = self.here();
                self.conv(&inferred, &w)
                    .map_err(|_| KernelError::TypeMismatch {
                        path,
                        expected: w.to_string(),
                        inferred: inferred.to_string(),
                    })
            }
        }
    }

    /// Infer a type for `t` over `ctx`.
    pub fn infer(&mut self, ctx: &Context, t: &Expr) -> Result<Expr, KernelError> {
        use Expr::*;
        match t {
            Var(i) => ctx
                .lookup(*i)
                .ok_or(KernelError::UnboundVar { index: *i }),
            Star => Ok(N1),
            Cons { init, last } => {
                let lt = self.infer_whnf(ctx, init)?;
                let List(c) = &lt else {
                    return Err(self.unknown_head("cons of a term whose type is not a list", &lt));
                };
                self.at("cons.last", |k| k.check(ctx, last, c))?;
                Ok(lt)
            }
            AndPair { fst, snd } => {
                let bt = self.at("andpair.fst", |k| k.infer(ctx, fst))?;
                let ct = self.at("andpair.snd", |k| k.infer(ctx, snd))?;
                for part in [&bt, &ct] {
                    let s = self.sort_of(ctx, part)?;
                    if !s.leq(Sort::Prop) {
                        return Err(KernelError::SortTooSmall {
                            required: Sort::Prop,
                            found: s,
                        });
                    }
                }
                Ok(And {
                    left: Box::new(bt),
                    right: Box::new(ct),
                })
            }
            Refl(x) => {
                let ty = self.at("refl", |k| k.infer(ctx, x))?;
                Ok(Id {
                    ty: Box::new(ty),
                    lhs: Box::new((**x).clone()),
                    rhs: Box::new((**x).clone()),
                })
            }
            Nil | Pair { .. } | ExPair { .. } | Inl(_) | Inr(_) | OrInl(_) | OrInr(_) => {
                Err(KernelError::CannotInfer {
                    path: self.here(),
                    detail: format!("{t} needs an expected type"),
                })
            }
            Lam { dom, body } => {
                let s_dom = self.at("lam.dom", |k| k.sort_of(ctx, dom))?;
                let ext = ctx.extended(hint(body, 0), (**dom).clone());
                let bt = self.at("lam.body", |k| k.infer(&ext, &body.body))?;
                let bt_w = self.whnf(&bt)?;
                if self.cfg.theory == Theory::Mtt {
                    if alpha_eq(&bt_w, &PropS) {
                        if !s_dom.leq(Sort::Set) {
                            return Err(KernelError::TheoryViolation(
                                "functions into the small propositions need a set domain"
                                    .to_string(),
                            ));
                        }
                        return Ok(FunPropS(dom.clone()));
                    }
                    let s_cod = self.at("lam.body", |k| k.sort_of(&ext, &bt))?;
                    if !(s_dom.leq(Sort::Set) && s_cod.leq(Sort::Set)) {
                        return Err(KernelError::TheoryViolation(
                            "dependent products over collections need the dp extension"
                                .to_string(),
                        ));
                    }
                } else {
                    self.at("lam.body", |k| k.sort_of(&ext, &bt))?;
                }
                Ok(Pi {
                    dom: dom.clone(),
                    cod: Abs::new(body.hints.clone(), bt),
                })
            }
            ImpLam { dom, body } => {
                let s_dom = self.at("implam.dom", |k| k.sort_of(ctx, dom))?;
                if !s_dom.leq(Sort::Prop) {
                    return Err(KernelError::SortTooSmall {
                        required: Sort::Prop,
                        found: s_dom,
                    });
                }
                let ext = ctx.extended(hint(body, 0), (**dom).clone());
                let bt = self.at("implam.body", |k| k.infer(&ext, &body.body))?;
                let s_cod = self.at("implam.body", |k| k.sort_of(&ext, &bt))?;
                if !s_cod.leq(Sort::Prop) {
                    return Err(KernelError::SortTooSmall {
                        required: Sort::Prop,
                        found: s_cod,
                    });
                }
                if bt.mentions(0) {
                    return Err(KernelError::CannotInfer {
                        path: self.here(),
                        detail: "the body's type depends on the assumption; implication is \
                                 not dependent"
                            .to_string(),
                    });
                }
                Ok(Imp {
                    left: dom.clone(),
                    right: Box::new(bt.shifted_above(-1, 0)),
                })
            }
            FaLam { dom, body } => {
                self.at("falam.dom", |k| k.sort_of(ctx, dom))?;
                let ext = ctx.extended(hint(body, 0), (**dom).clone());
                let bt = self.at("falam.body", |k| k.infer(&ext, &body.body))?;
                let s_cod = self.at("falam.body", |k| k.sort_of(&ext, &bt))?;
                if !s_cod.leq(Sort::Prop) {
                    return Err(KernelError::SortTooSmall {
                        required: Sort::Prop,
                        found: s_cod,
                    });
                }
                Ok(Forall {
                    dom: dom.clone(),
                    cod: Abs::new(body.hints.clone(), bt),
                })
            }
            Ap { fun, arg } => {
                let ft = self.at("ap.fun", |k| k.infer_whnf(ctx, fun))?;
                match &ft {
                    Pi { dom, cod } => {
                        self.at("ap.arg", |k| k.check(ctx, arg, dom))?;
                        Ok(cod.apply1(arg))
                    }
                    FunPropS(b) => {
                        self.at("ap.arg", |k| k.check(ctx, arg, b))?;
                        Ok(PropS)
                    }
                    _ => Err(self.unknown_head("applying a term whose type is not a product", &ft)),
                }
            }
            ImpAp { fun, arg } => {
                let ft = self.at("impap.fun", |k| k.infer_whnf(ctx, fun))?;
                let Imp { left, right } = &ft else {
                    return Err(
                        self.unknown_head("applying a term whose type is not an implication", &ft)
                    );
                };
                self.at("impap.arg", |k| k.check(ctx, arg, left))?;
                Ok((**right).clone())
            }
            FaAp { fun, arg } => {
                let ft = self.at("faap.fun", |k| k.infer_whnf(ctx, fun))?;
                let Forall { dom, cod } = &ft else {
                    return Err(
                        self.unknown_head("applying a term whose type is not universal", &ft)
                    );
                };
                self.at("faap.arg", |k| k.check(ctx, arg, dom))?;
                Ok(cod.apply1(arg))
            }
            Proj1(d) => {
                let dt = self.at("proj1", |k| k.infer_whnf(ctx, d))?;
                let And { left, .. } = &dt else {
                    return Err(
                        self.unknown_head("projecting a term whose type is not a conjunction", &dt)
                    );
                };
                Ok((**left).clone())
            }
            Proj2(d) => {
                let dt = self.at("proj2", |k| k.infer_whnf(ctx, d))?;
                let And { right, .. } = &dt else {
                    return Err(
                        self.unknown_head("projecting a term whose type is not a conjunction", &dt)
                    );
                };
                Ok((**right).clone())
            }
            ElN0 { scrut, motive } => {
                self.at("ElN0.scrut", |k| k.check(ctx, scrut, &N0))?;
                self.check_motive(ctx, motive, &N0, Sort::Col, "ElN0.motive")?;
                Ok(motive.apply1(scrut))
            }
            ElN1 {
                scrut,
                motive,
                branch,
            } => {
                self.at("ElN1.scrut", |k| k.check(ctx, scrut, &N1))?;
                self.check_motive(ctx, motive, &N1, Sort::Col, "ElN1.motive")?;
                let at_star = motive.apply1(&Star);
                self.at("ElN1.branch", |k| k.check(ctx, branch, &at_star))?;
                Ok(motive.apply1(scrut))
            }
            ElSigma {
                scrut,
                motive,
                branch,
            } => {
                let st = self.at("ElSigma.scrut", |k| k.infer_whnf(ctx, scrut))?;
                let Sigma { dom, cod } = &st else {
                    return Err(
                        self.unknown_head("eliminating a term whose type is not a sum", &st)
                    );
                };
                self.check_motive(ctx, motive, &st, Sort::Col, "ElSigma.motive")?;
                self.expect_arity(branch, 2, "ElSigma.branch")?;
                let ext = ctx
                    .extended(hint(branch, 0), (**dom).clone())
                    .extended(hint(branch, 1), (*cod.body).clone());
                let expected = motive.weakened(2).apply1(&Expr::Pair {
                    fst: Box::new(Var(1)),
                    snd: Box::new(Var(0)),
                });
                self.at("ElSigma.branch", |k| k.check(&ext, &branch.body, &expected))?;
                Ok(motive.apply1(scrut))
            }
            ElList {
                scrut,
                motive,
                base,
                step,
            } => {
                let st = self.at("ElList.scrut", |k| k.infer_whnf(ctx, scrut))?;
                let List(c) = &st else {
                    return Err(
                        self.unknown_head("eliminating a term whose type is not a list", &st)
                    );
                };
                self.check_motive(ctx, motive, &st, Sort::Col, "ElList.motive")?;
                let at_nil = motive.apply1(&Nil);
                self.at("ElList.base", |k| k.check(ctx, base, &at_nil))?;
                self.expect_arity(step, 3, "ElList.step")?;
                let ih_ty = motive.weakened(2).apply1(&Var(1));
                let ext = ctx
                    .extended(hint(step, 0), st.clone())
                    .extended(hint(step, 1), c.shifted(1))
                    .extended(hint(step, 2), ih_ty);
                let expected = motive.weakened(3).apply1(&Expr::Cons {
                    init: Box::new(Var(2)),
                    last: Box::new(Var(1)),
                });
                self.at("ElList.step", |k| k.check(&ext, &step.body, &expected))?;
                Ok(motive.apply1(scrut))
            }
            ElPlus {
                scrut,
                motive,
                left,
                right,
            } => {
                let st = self.at("ElPlus.scrut", |k| k.infer_whnf(ctx, scrut))?;
                let Plus { left: b, right: c } = &st else {
                    return Err(self.unknown_head(
                        "eliminating a term whose type is not a disjoint sum",
                        &st,
                    ));
                };
                self.check_motive(ctx, motive, &st, Sort::Col, "ElPlus.motive")?;
                self.expect_arity(left, 1, "ElPlus.left")?;
                self.expect_arity(right, 1, "ElPlus.right")?;
                let ext_l = ctx.extended(hint(left, 0), (**b).clone());
                let exp_l = motive.weakened(1).apply1(&Inl(Box::new(Var(0))));
                self.at("ElPlus.left", |k| k.check(&ext_l, &left.body, &exp_l))?;
                let ext_r = ctx.extended(hint(right, 0), (**c).clone());
                let exp_r = motive.weakened(1).apply1(&Inr(Box::new(Var(0))));
                self.at("ElPlus.right", |k| k.check(&ext_r, &right.body, &exp_r))?;
                Ok(motive.apply1(scrut))
            }
            ElBot { scrut, target } => {
                self.at("ElBot.scrut", |k| k.check(ctx, scrut, &Bot))?;
                self.expect_prop(ctx, target, "ElBot.target")?;
                Ok((**target).clone())
            }
            ElOr {
                scrut,
                target,
                left,
                right,
            } => {
                let st = self.at("ElOr.scrut", |k| k.infer_whnf(ctx, scrut))?;
                let Or { left: b, right: c } = &st else {
                    return Err(self.unknown_head(
                        "eliminating a term whose type is not a disjunction",
                        &st,
                    ));
                };
                self.expect_prop(ctx, target, "ElOr.target")?;
                self.expect_arity(left, 1, "ElOr.left")?;
                self.expect_arity(right, 1, "ElOr.right")?;
                let shifted = target.shifted(1);
                let ext_l = ctx.extended(hint(left, 0), (**b).clone());
                self.at("ElOr.left", |k| k.check(&ext_l, &left.body, &shifted))?;
                let ext_r = ctx.extended(hint(right, 0), (**c).clone());
                self.at("ElOr.right", |k| k.check(&ext_r, &right.body, &shifted))?;
                Ok((**target).clone())
            }
            ElExists {
                scrut,
                target,
                branch,
            } => {
                let st = self.at("ElExists.scrut", |k| k.infer_whnf(ctx, scrut))?;
                let Exists { dom, cod } = &st else {
                    return Err(self.unknown_head(
                        "eliminating a term whose type is not existential",
                        &st,
                    ));
                };
                self.expect_prop(ctx, target, "ElExists.target")?;
                self.expect_arity(branch, 2, "ElExists.branch")?;
                let ext = ctx
                    .extended(hint(branch, 0), (**dom).clone())
                    .extended(hint(branch, 1), (*cod.body).clone());
                let shifted = target.shifted(2);
                self.at("ElExists.branch", |k| k.check(&ext, &branch.body, &shifted))?;
                Ok((**target).clone())
            }
            ElId {
                scrut,
                motive,
                branch,
            } => {
                let st = self.at("ElId.scrut", |k| k.infer_whnf(ctx, scrut))?;
                let Id { ty, lhs, rhs } = &st else {
                    return Err(self.unknown_head(
                        "eliminating a term whose type is not an identity",
                        &st,
                    ));
                };
                self.expect_arity(motive, 2, "ElId.motive")?;
                let ext2 = ctx
                    .extended(hint(motive, 0), (**ty).clone())
                    .extended(hint(motive, 1), ty.shifted(1));
                let ms = self.at("ElId.motive", |k| k.sort_of(&ext2, &motive.body))?;
                if !ms.leq(Sort::Prop) {
                    return Err(KernelError::MotiveMismatch {
                        path: self.here(),
                        detail: format!(
                            "the identity eliminator needs a propositional motive, found {ms}"
                        ),
                    });
                }
                self.expect_arity(branch, 1, "ElId.branch")?;
                let ext1 = ctx.extended(hint(branch, 0), (**ty).clone());
                let expected = motive.weakened(1).instantiate(&[Var(0), Var(0)]);
                self.at("ElId.branch", |k| k.check(&ext1, &branch.body, &expected))?;
                Ok(motive.instantiate(&[(**lhs).clone(), (**rhs).clone()]))
            }
            Eq { .. } | TrueTm | Quot { .. } | QClass(_) | ElQ { .. } | Pow1 | Pcl(_)
            | FunPow1(_) => Err(KernelError::TheoryViolation(format!(
                "extensional former {t} is not part of {}",
                self.cfg.theory
            ))),
            // Small propositions are elements of PropS.
            _ if is_type_former(t) => {
                let s = self.sort_of(ctx, t)?;
                if s == Sort::PropS {
                    Ok(PropS)
                } else {
                    Err(KernelError::CannotInfer {
                        path: self.here(),
                        detail: format!("a type of sort {s} is not a term"),
                    })
                }
            }
            _ => Err(KernelError::CannotInfer {
                path: self.here(),
                detail: format!("no inference rule applies to {t}"),
            }),
        }
    }

    /// Infer and weak-head normalize the type of `t`.
    fn infer_whnf(&mut self, ctx: &Context, t: &Expr) -> Result<Expr, KernelError> {
        let ty = self.infer(ctx, t)?;
        self.whnf(&ty)
    }

    fn check_motive(
        &mut self,
        ctx: &Context,
        motive: &Abs,
        over: &Expr,
        bound: Sort,
        seg: &str,
    ) -> Result<(), KernelError> {
        self.expect_arity(motive, 1, seg)?;
        let ext = ctx.extended(hint(motive, 0), over.clone());
        let s = self.at(seg, |k| k.sort_of(&ext, &motive.body))?;
        if s.leq(bound) {
            Ok(())
        } else {
            Err(KernelError::MotiveMismatch {
                path: self.here(),
                detail: format!("motive of sort {s} exceeds the bound {bound}"),
            })
        }
    }

    fn expect_prop(&mut self, ctx: &Context, target: &Expr, seg: &str) -> Result<(), KernelError> {
        let s = self.at(seg, |k| k.sort_of(ctx, target))?;
        if s.leq(Sort::Prop) {
            Ok(())
        } else {
            Err(KernelError::SortTooSmall {
                required: Sort::Prop,
                found: s,
            })
        }
    }

    fn expect_arity(&mut self, abs: &Abs, want: usize, seg: &str) -> Result<(), KernelError> {
        if abs.arity() == want {
            Ok(())
        } else {
            Err(KernelError::MotiveMismatch {
                path: format!("{}.{seg}", self.here()),
                detail: format!("expected a {want}-binder form, found {}", abs.arity()),
            })
        }
    }

    fn unknown_head(&self, detail: &str, ty: &Expr) -> KernelError {
        KernelError::UnknownHead {
            path: self.here(),
            detail: format!("{detail}: {ty}"),
        }
    }
}

fn hint(abs: &Abs, i: usize) -> String {
    abs.hints.get(i).cloned().unwrap_or_else(|| "x".to_string())
}
