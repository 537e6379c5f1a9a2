//! Premise and conclusion schemas, one arm per rule.
//!
//! Given a rule and an instantiation of its metavariables, `schema`
//! computes the exact list of premise judgements and the conclusion, all
//! with fully explicit contexts. The verifier compares these against the
//! certificate; the builder uses the conclusion to assemble nodes.

use crate::{Inst, RuleId, VerifyError};
use syntax_core::{Abs, Context, Expr, JudgementForm, Sort, Theory};

type Schema = (Vec<JudgementForm>, JudgementForm);

struct S<'a> {
    inst: &'a Inst,
    path: &'a str,
}

impl<'a> S<'a> {
    fn e(&self, k: &str) -> Result<Expr, VerifyError> {
        self.inst
            .exprs
            .get(k)
            .cloned()
            .ok_or_else(|| VerifyError::MissingMeta {
                path: self.path.into(),
                name: k.into(),
            })
    }

    fn f(&self, k: &str, arity: usize) -> Result<Abs, VerifyError> {
        let a = self
            .inst
            .abss
            .get(k)
            .ok_or_else(|| VerifyError::MissingMeta {
                path: self.path.into(),
                name: k.into(),
            })?;
        if a.arity() != arity {
            return Err(VerifyError::ArityMismatch {
                path: self.path.into(),
                detail: format!("family `{k}` must bind {arity} variables, binds {}", a.arity()),
            });
        }
        Ok(a.clone())
    }

    fn sort(&self) -> Result<Sort, VerifyError> {
        self.inst.sort.ok_or_else(|| VerifyError::MissingMeta {
            path: self.path.into(),
            name: "sort".into(),
        })
    }

    fn list(&self, k: &str) -> Result<Vec<Expr>, VerifyError> {
        self.inst
            .lists
            .get(k)
            .cloned()
            .ok_or_else(|| VerifyError::MissingMeta {
                path: self.path.into(),
                name: k.into(),
            })
    }

    fn tel(&self) -> Result<Context, VerifyError> {
        self.inst
            .tel
            .clone()
            .ok_or_else(|| VerifyError::MissingMeta {
                path: self.path.into(),
                name: "tel".into(),
            })
    }
}

fn jty(ctx: Context, ty: Expr, sort: Sort) -> JudgementForm {
    JudgementForm::Type { ctx, ty, sort }
}

fn jtyeq(ctx: Context, lhs: Expr, rhs: Expr, sort: Sort) -> JudgementForm {
    JudgementForm::TypeEq {
        ctx,
        lhs,
        rhs,
        sort,
    }
}

fn jtm(ctx: Context, term: Expr, ty: Expr) -> JudgementForm {
    JudgementForm::Term { ctx, term, ty }
}

fn jtmeq(ctx: Context, lhs: Expr, rhs: Expr, ty: Expr) -> JudgementForm {
    JudgementForm::TermEq { ctx, lhs, rhs, ty }
}

/// A family applied under `extra` fresh context entries.
fn app(f: &Abs, extra: usize, args: &[Expr]) -> Expr {
    f.weakened(extra).instantiate(args)
}

fn v(i: usize) -> Expr {
    Expr::Var(i)
}

fn tru() -> Expr {
    Expr::TrueTm
}

fn pair(a: Expr, b: Expr) -> Expr {
    Expr::Pair {
        fst: Box::new(a),
        snd: Box::new(b),
    }
}

fn sigma(dom: Expr, cod: Abs) -> Expr {
    Expr::Sigma {
        dom: Box::new(dom),
        cod,
    }
}

fn pi(dom: Expr, cod: Abs) -> Expr {
    Expr::Pi {
        dom: Box::new(dom),
        cod,
    }
}

fn lam(dom: Expr, body: Abs) -> Expr {
    Expr::Lam {
        dom: Box::new(dom),
        body,
    }
}

fn apt(fun: Expr, arg: Expr) -> Expr {
    Expr::Ap {
        fun: Box::new(fun),
        arg: Box::new(arg),
    }
}

fn quot(set: Expr, rel: Abs) -> Expr {
    Expr::Quot {
        set: Box::new(set),
        rel,
    }
}

fn qcl(a: Expr) -> Expr {
    Expr::QClass(Box::new(a))
}

fn elq(scrut: Expr, motive: Abs, branch: Abs) -> Expr {
    Expr::ElQ {
        scrut: Box::new(scrut),
        motive,
        branch,
    }
}

fn imp(l: Expr, r: Expr) -> Expr {
    Expr::Imp {
        left: Box::new(l),
        right: Box::new(r),
    }
}

fn iff(l: Expr, r: Expr) -> Expr {
    Expr::And {
        left: Box::new(imp(l.clone(), r.clone())),
        right: Box::new(imp(r, l)),
    }
}

fn eqp(ty: Expr, lhs: Expr, rhs: Expr) -> Expr {
    Expr::Eq {
        ty: Box::new(ty),
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
    }
}

fn abs1(h: &str, body: Expr) -> Abs {
    Abs::new(vec![h.into()], body)
}

/// `ctx, x:A, y:A`.
fn ext_xy(ctx: &Context, a: &Expr) -> Context {
    ctx.extended("x", a.clone()).extended("y", a.shifted(1))
}

/// The three premises stating that `r` is an equivalence relation on `a`
/// (reflexivity, symmetry, transitivity, each with its printed telescope).
fn equiv_premises(ctx: &Context, a: &Expr, r: &Abs) -> Vec<JudgementForm> {
    let refl = jtm(
        ctx.extended("x", a.clone()),
        tru(),
        app(r, 1, &[v(0), v(0)]),
    );
    let cxyu = ext_xy(ctx, a).extended("u", app(r, 2, &[v(1), v(0)]));
    let sym = jtm(cxyu, tru(), app(r, 3, &[v(1), v(2)]));
    let cxyz = ext_xy(ctx, a).extended("z", a.shifted(2));
    let c4 = cxyz.extended("u", app(r, 3, &[v(2), v(1)]));
    let c5 = c4.extended("v", app(r, 4, &[v(2), v(1)]));
    let tra = jtm(c5, tru(), app(r, 5, &[v(4), v(2)]));
    vec![refl, sym, tra]
}

/// Quotient elimination premises shared by the set- and collection-level
/// rules: the motive, the scrutinee-like premise built by the caller, the
/// branch, and its compatibility with the relation.
fn quot_branch_premises(
    ctx: &Context,
    a: &Expr,
    r: &Abs,
    big_l: &Abs,
    l: &Abs,
) -> (JudgementForm, JudgementForm) {
    let branch = jtm(
        ctx.extended("x", a.clone()),
        (*l.body).clone(),
        app(big_l, 1, &[qcl(v(0))]),
    );
    let cd = ext_xy(ctx, a).extended("d", app(r, 2, &[v(1), v(0)]));
    let compat = jtmeq(
        cd,
        app(l, 3, &[v(2)]),
        app(l, 3, &[v(1)]),
        app(big_l, 3, &[qcl(v(2))]),
    );
    (branch, compat)
}

pub(crate) fn schema(
    rule: RuleId,
    inst: &Inst,
    _theory: Theory,
    path: &str,
) -> Result<Schema, VerifyError> {
    let s = S { inst, path };
    let g = inst.ctx.clone();
    use Sort::{Col, Prop, PropS, Set};
    Ok(match rule {
        // ---- contexts and assumptions ----
        RuleId::ContEmpty => {
            if !g.is_empty() {
                return Err(VerifyError::RuleMismatch {
                    path: path.into(),
                    detail: "the empty-context axiom takes an empty context".into(),
                });
            }
            (vec![], JudgementForm::Cont { ctx: g })
        }
        RuleId::ContExt => {
            let a = s.e("A")?;
            let name = inst.name.clone().unwrap_or_else(|| "x".into());
            let extended = g.extended(name, a.clone());
            if !extended.names_distinct() {
                return Err(VerifyError::SideConditionFailed {
                    path: path.into(),
                    name: "fresh variable name".into(),
                });
            }
            (
                vec![jty(g, a, Col)],
                JudgementForm::Cont { ctx: extended },
            )
        }
        RuleId::Var => {
            let x = s.e("x")?;
            let Expr::Var(i) = x else {
                return Err(VerifyError::RuleMismatch {
                    path: path.into(),
                    detail: "the assumption rule concludes a variable".into(),
                });
            };
            let ty = g.lookup(i).ok_or_else(|| VerifyError::ScopeError {
                path: path.into(),
            })?;
            (
                vec![JudgementForm::Cont { ctx: g.clone() }],
                jtm(g, Expr::Var(i), ty),
            )
        }

        // ---- embeddings ----
        RuleId::SetIntoCol => {
            let a = s.e("A")?;
            (vec![jty(g.clone(), a.clone(), Set)], jty(g, a, Col))
        }
        RuleId::PropIntoCol => {
            let a = s.e("A")?;
            (vec![jty(g.clone(), a.clone(), Prop)], jty(g, a, Col))
        }
        RuleId::PropSIntoSet => {
            let a = s.e("A")?;
            (vec![jty(g.clone(), a.clone(), PropS)], jty(g, a, Set))
        }
        RuleId::PropSIntoProp => {
            let a = s.e("A")?;
            (vec![jty(g.clone(), a.clone(), PropS)], jty(g, a, Prop))
        }

        // ---- equivalence, substitution, conversion ----
        RuleId::RefTy => {
            let (a, srt) = (s.e("A")?, s.sort()?);
            (
                vec![jty(g.clone(), a.clone(), srt)],
                jtyeq(g, a.clone(), a, srt),
            )
        }
        RuleId::SymTy => {
            let (a, b, srt) = (s.e("A")?, s.e("B")?, s.sort()?);
            (
                vec![jtyeq(g.clone(), a.clone(), b.clone(), srt)],
                jtyeq(g, b, a, srt),
            )
        }
        RuleId::TraTy => {
            let (a, b, c, srt) = (s.e("A")?, s.e("B")?, s.e("C")?, s.sort()?);
            (
                vec![
                    jtyeq(g.clone(), a.clone(), b.clone(), srt),
                    jtyeq(g.clone(), b, c.clone(), srt),
                ],
                jtyeq(g, a, c, srt),
            )
        }
        RuleId::SubT => {
            let (tel, srt) = (s.tel()?, s.sort()?);
            let n = tel.len();
            let c = s.f("C", n)?;
            let (a, b) = (s.list("a")?, s.list("b")?);
            let eqs = subst_equalities(&g, &tel, &a, &b, n, path)?;
            let mut premises = vec![jty(extend_all(&g, &tel), (*c.body).clone(), srt)];
            premises.extend(eqs);
            (
                premises,
                jtyeq(g, c.instantiate(&a), c.instantiate(&b), srt),
            )
        }
        RuleId::RefTm => {
            let (a, big_a) = (s.e("a")?, s.e("A")?);
            (
                vec![jtm(g.clone(), a.clone(), big_a.clone())],
                jtmeq(g, a.clone(), a, big_a),
            )
        }
        RuleId::SymTm => {
            let (a, b, big_a) = (s.e("a")?, s.e("b")?, s.e("A")?);
            (
                vec![jtmeq(g.clone(), a.clone(), b.clone(), big_a.clone())],
                jtmeq(g, b, a, big_a),
            )
        }
        RuleId::TraTm => {
            let (a, b, c, big_a) = (s.e("a")?, s.e("b")?, s.e("c")?, s.e("A")?);
            (
                vec![
                    jtmeq(g.clone(), a.clone(), b.clone(), big_a.clone()),
                    jtmeq(g.clone(), b, c.clone(), big_a.clone()),
                ],
                jtmeq(g, a, c, big_a),
            )
        }
        RuleId::Sub => {
            let tel = s.tel()?;
            let n = tel.len();
            let (c, big_c) = (s.f("c", n)?, s.f("C", n)?);
            let (a, b) = (s.list("a")?, s.list("b")?);
            let eqs = subst_equalities(&g, &tel, &a, &b, n, path)?;
            let mut premises = vec![jtm(
                extend_all(&g, &tel),
                (*c.body).clone(),
                (*big_c.body).clone(),
            )];
            premises.extend(eqs);
            (
                premises,
                jtmeq(g, c.instantiate(&a), c.instantiate(&b), big_c.instantiate(&a)),
            )
        }
        RuleId::Conv => {
            let (a, big_a, big_b, srt) = (s.e("a")?, s.e("A")?, s.e("B")?, s.sort()?);
            (
                vec![
                    jtm(g.clone(), a.clone(), big_a.clone()),
                    jtyeq(g.clone(), big_a, big_b.clone(), srt),
                ],
                jtm(g, a, big_b),
            )
        }
        RuleId::ConvEq => {
            let (a, b, big_a, big_b, srt) =
                (s.e("a")?, s.e("b")?, s.e("A")?, s.e("B")?, s.sort()?);
            (
                vec![
                    jtmeq(g.clone(), a.clone(), b.clone(), big_a.clone()),
                    jtyeq(g.clone(), big_a, big_b.clone(), srt),
                ],
                jtmeq(g, a, b, big_b),
            )
        }

        // ---- strong indexed sum ----
        RuleId::FSigma | RuleId::FSigmaSet => {
            let (b, c) = (s.e("B")?, s.f("C", 1)?);
            let srt = if rule == RuleId::FSigma { Col } else { Set };
            (
                vec![jty(g.extended("x", b.clone()), (*c.body).clone(), srt)],
                jty(g, sigma(b, c), srt),
            )
        }
        RuleId::ISigma => {
            let (big_b, b, c, fam) = (s.e("B")?, s.e("b")?, s.e("c")?, s.f("C", 1)?);
            (
                vec![
                    jtm(g.clone(), b.clone(), big_b.clone()),
                    jtm(g.clone(), c.clone(), fam.apply1(&b)),
                    jty(g.extended("x", big_b.clone()), (*fam.body).clone(), Col),
                ],
                jtm(g, pair(b, c), sigma(big_b, fam)),
            )
        }
        RuleId::ESigma => {
            let (big_b, d) = (s.e("B")?, s.e("d")?);
            let (fam, m, br) = (s.f("C", 1)?, s.f("M", 1)?, s.f("m", 2)?);
            let sig = sigma(big_b.clone(), fam.clone());
            let cxy = g
                .extended("x", big_b.clone())
                .extended("y", (*fam.body).clone());
            (
                vec![
                    jty(g.extended("z", sig.clone()), (*m.body).clone(), Col),
                    jtm(g.clone(), d.clone(), sig),
                    jtm(cxy, (*br.body).clone(), app(&m, 2, &[pair(v(1), v(0))])),
                ],
                jtm(
                    g,
                    Expr::ElSigma {
                        scrut: Box::new(d.clone()),
                        motive: m.clone(),
                        branch: br,
                    },
                    m.apply1(&d),
                ),
            )
        }
        RuleId::CSigma => {
            let (big_b, b, c) = (s.e("B")?, s.e("b")?, s.e("c")?);
            let (fam, m, br) = (s.f("C", 1)?, s.f("M", 1)?, s.f("m", 2)?);
            let sig = sigma(big_b.clone(), fam.clone());
            let cxy = g
                .extended("x", big_b.clone())
                .extended("y", (*fam.body).clone());
            let p = pair(b.clone(), c.clone());
            (
                vec![
                    jty(g.extended("z", sig), (*m.body).clone(), Col),
                    jtm(g.clone(), b.clone(), big_b),
                    jtm(g.clone(), c.clone(), fam.apply1(&b)),
                    jtm(cxy, (*br.body).clone(), app(&m, 2, &[pair(v(1), v(0))])),
                ],
                jtmeq(
                    g,
                    Expr::ElSigma {
                        scrut: Box::new(p.clone()),
                        motive: m.clone(),
                        branch: br.clone(),
                    },
                    br.instantiate(&[b, c]),
                    m.apply1(&p),
                ),
            )
        }

        // ---- empty set ----
        RuleId::FN0 => (vec![], jty(g, Expr::N0, Set)),
        RuleId::EN0 => {
            let (a, fam) = (s.e("a")?, s.f("A", 1)?);
            (
                vec![
                    jtm(g.clone(), a.clone(), Expr::N0),
                    jty(g.extended("x", Expr::N0), (*fam.body).clone(), Col),
                ],
                jtm(
                    g,
                    Expr::ElN0 {
                        scrut: Box::new(a.clone()),
                        motive: fam.clone(),
                    },
                    fam.apply1(&a),
                ),
            )
        }

        // ---- singleton set ----
        RuleId::FN1 => (vec![], jty(g, Expr::N1, Set)),
        RuleId::IN1 => (vec![], jtm(g, Expr::Star, Expr::N1)),
        RuleId::CN1 => {
            let (t, c, m) = (s.e("t")?, s.e("c")?, s.f("M", 1)?);
            (
                vec![
                    jtm(g.clone(), t.clone(), Expr::N1),
                    jty(g.extended("z", Expr::N1), (*m.body).clone(), Col),
                    jtm(g.clone(), c.clone(), m.apply1(&Expr::Star)),
                ],
                jtm(
                    g,
                    Expr::ElN1 {
                        scrut: Box::new(t.clone()),
                        motive: m.clone(),
                        branch: Box::new(c),
                    },
                    m.apply1(&t),
                ),
            )
        }

        // ---- lists ----
        RuleId::FList => {
            let c = s.e("C")?;
            (
                vec![jty(g.clone(), c.clone(), Set)],
                jty(g, Expr::List(Box::new(c)), Set),
            )
        }
        RuleId::I1List => {
            let c = s.e("C")?;
            let lc = Expr::List(Box::new(c));
            (
                vec![jty(g.clone(), lc.clone(), Set)],
                jtm(g, Expr::Nil, lc),
            )
        }
        RuleId::I2List => {
            let (big_c, sq, c) = (s.e("C")?, s.e("s")?, s.e("c")?);
            let lc = Expr::List(Box::new(big_c.clone()));
            (
                vec![
                    jtm(g.clone(), sq.clone(), lc.clone()),
                    jtm(g.clone(), c.clone(), big_c),
                ],
                jtm(
                    g,
                    Expr::Cons {
                        init: Box::new(sq),
                        last: Box::new(c),
                    },
                    lc,
                ),
            )
        }
        RuleId::EList => {
            let (big_c, sq, a) = (s.e("C")?, s.e("s")?, s.e("a")?);
            let (big_l, l) = (s.f("L", 1)?, s.f("l", 3)?);
            let lc = Expr::List(Box::new(big_c.clone()));
            (
                vec![
                    jty(g.extended("z", lc.clone()), (*big_l.body).clone(), Col),
                    jtm(g.clone(), sq.clone(), lc.clone()),
                    jtm(g.clone(), a.clone(), big_l.apply1(&Expr::Nil)),
                    list_step_premise(&g, &big_c, &big_l, &l),
                ],
                jtm(
                    g,
                    Expr::ElList {
                        scrut: Box::new(sq.clone()),
                        motive: big_l.clone(),
                        base: Box::new(a),
                        step: l,
                    },
                    big_l.apply1(&sq),
                ),
            )
        }
        RuleId::C1List => {
            let (big_c, a) = (s.e("C")?, s.e("a")?);
            let (big_l, l) = (s.f("L", 1)?, s.f("l", 3)?);
            let lc = Expr::List(Box::new(big_c.clone()));
            (
                vec![
                    jty(g.extended("z", lc), (*big_l.body).clone(), Col),
                    jtm(g.clone(), a.clone(), big_l.apply1(&Expr::Nil)),
                    list_step_premise(&g, &big_c, &big_l, &l),
                ],
                jtmeq(
                    g,
                    Expr::ElList {
                        scrut: Box::new(Expr::Nil),
                        motive: big_l.clone(),
                        base: Box::new(a.clone()),
                        step: l,
                    },
                    a,
                    big_l.apply1(&Expr::Nil),
                ),
            )
        }
        RuleId::C2List => {
            let (big_c, sq, c, a) = (s.e("C")?, s.e("s")?, s.e("c")?, s.e("a")?);
            let (big_l, l) = (s.f("L", 1)?, s.f("l", 3)?);
            let lc = Expr::List(Box::new(big_c.clone()));
            let consd = Expr::Cons {
                init: Box::new(sq.clone()),
                last: Box::new(c.clone()),
            };
            let rec = Expr::ElList {
                scrut: Box::new(sq.clone()),
                motive: big_l.clone(),
                base: Box::new(a.clone()),
                step: l.clone(),
            };
            (
                vec![
                    jty(g.extended("z", lc.clone()), (*big_l.body).clone(), Col),
                    jtm(g.clone(), sq.clone(), lc),
                    jtm(g.clone(), c.clone(), big_c.clone()),
                    jtm(g.clone(), a.clone(), big_l.apply1(&Expr::Nil)),
                    list_step_premise(&g, &big_c, &big_l, &l),
                ],
                jtmeq(
                    g,
                    Expr::ElList {
                        scrut: Box::new(consd.clone()),
                        motive: big_l.clone(),
                        base: Box::new(a),
                        step: l.clone(),
                    },
                    l.instantiate(&[sq, c, rec]),
                    big_l.apply1(&consd),
                ),
            )
        }

        // ---- disjoint sum ----
        RuleId::FPlus => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![
                    jty(g.clone(), b.clone(), Set),
                    jty(g.clone(), c.clone(), Set),
                ],
                jty(
                    g,
                    Expr::Plus {
                        left: Box::new(b),
                        right: Box::new(c),
                    },
                    Set,
                ),
            )
        }
        RuleId::I1Plus | RuleId::I2Plus => {
            let (big_b, big_c) = (s.e("B")?, s.e("C")?);
            let sum = Expr::Plus {
                left: Box::new(big_b.clone()),
                right: Box::new(big_c.clone()),
            };
            let (elt, of, inj): (Expr, Expr, fn(Expr) -> Expr) = if rule == RuleId::I1Plus {
                (s.e("b")?, big_b.clone(), |e| Expr::Inl(Box::new(e)))
            } else {
                (s.e("c")?, big_c.clone(), |e| Expr::Inr(Box::new(e)))
            };
            (
                vec![
                    jtm(g.clone(), elt.clone(), of),
                    jty(g.clone(), big_b, Set),
                    jty(g.clone(), big_c, Set),
                ],
                jtm(g, inj(elt), sum),
            )
        }
        RuleId::EPlus => {
            let (big_b, big_c, w) = (s.e("B")?, s.e("C")?, s.e("w")?);
            let (fam, ab, ac) = (s.f("A", 1)?, s.f("aB", 1)?, s.f("aC", 1)?);
            let sum = Expr::Plus {
                left: Box::new(big_b.clone()),
                right: Box::new(big_c.clone()),
            };
            (
                vec![
                    jty(g.extended("z", sum.clone()), (*fam.body).clone(), Col),
                    jtm(g.clone(), w.clone(), sum),
                    jtm(
                        g.extended("x", big_b),
                        (*ab.body).clone(),
                        app(&fam, 1, &[Expr::Inl(Box::new(v(0)))]),
                    ),
                    jtm(
                        g.extended("y", big_c),
                        (*ac.body).clone(),
                        app(&fam, 1, &[Expr::Inr(Box::new(v(0)))]),
                    ),
                ],
                jtm(
                    g,
                    Expr::ElPlus {
                        scrut: Box::new(w.clone()),
                        motive: fam.clone(),
                        left: ab,
                        right: ac,
                    },
                    fam.apply1(&w),
                ),
            )
        }
        RuleId::C1Plus | RuleId::C2Plus => {
            let (big_b, big_c) = (s.e("B")?, s.e("C")?);
            let (fam, ab, ac) = (s.f("A", 1)?, s.f("aB", 1)?, s.f("aC", 1)?);
            let sum = Expr::Plus {
                left: Box::new(big_b.clone()),
                right: Box::new(big_c.clone()),
            };
            let left_case = rule == RuleId::C1Plus;
            let elt = if left_case { s.e("b")? } else { s.e("c")? };
            let of = if left_case {
                big_b.clone()
            } else {
                big_c.clone()
            };
            let injected = if left_case {
                Expr::Inl(Box::new(elt.clone()))
            } else {
                Expr::Inr(Box::new(elt.clone()))
            };
            let picked = if left_case { &ab } else { &ac };
            (
                vec![
                    jty(g.extended("z", sum), (*fam.body).clone(), Col),
                    jtm(g.clone(), elt.clone(), of),
                    jtm(
                        g.extended("x", big_b),
                        (*ab.body).clone(),
                        app(&fam, 1, &[Expr::Inl(Box::new(v(0)))]),
                    ),
                    jtm(
                        g.extended("y", big_c),
                        (*ac.body).clone(),
                        app(&fam, 1, &[Expr::Inr(Box::new(v(0)))]),
                    ),
                ],
                jtmeq(
                    g,
                    Expr::ElPlus {
                        scrut: Box::new(injected.clone()),
                        motive: fam.clone(),
                        left: ab.clone(),
                        right: ac.clone(),
                    },
                    picked.apply1(&elt),
                    fam.apply1(&injected),
                ),
            )
        }

        // ---- dependent product ----
        RuleId::FPi | RuleId::FPiCol => {
            let (b, c) = (s.e("B")?, s.f("C", 1)?);
            let mut premises = vec![jty(
                g.extended("x", b.clone()),
                (*c.body).clone(),
                if rule == RuleId::FPi { Set } else { Col },
            )];
            if rule == RuleId::FPi {
                premises.push(jty(g.clone(), b.clone(), Set));
            }
            let srt = if rule == RuleId::FPi { Set } else { Col };
            (premises, jty(g, pi(b, c), srt))
        }
        RuleId::IPi | RuleId::IPiCol => {
            let (b, fam, body) = (s.e("B")?, s.f("C", 1)?, s.f("c", 1)?);
            let cx = g.extended("x", b.clone());
            let mut premises = vec![jtm(cx.clone(), (*body.body).clone(), (*fam.body).clone())];
            if rule == RuleId::IPi {
                premises.push(jty(cx, (*fam.body).clone(), Set));
                premises.push(jty(g.clone(), b.clone(), Set));
            }
            (premises, jtm(g, lam(b.clone(), body), pi(b, fam)))
        }
        RuleId::EPi | RuleId::EPiCol => {
            let (big_b, b, f, fam) = (s.e("B")?, s.e("b")?, s.e("f")?, s.f("C", 1)?);
            (
                vec![
                    jtm(g.clone(), b.clone(), big_b.clone()),
                    jtm(g.clone(), f.clone(), pi(big_b, fam.clone())),
                ],
                jtm(g, apt(f, b.clone()), fam.apply1(&b)),
            )
        }
        RuleId::BetaPi | RuleId::BetaPiCol => {
            let (big_b, b, fam, body) = (s.e("B")?, s.e("b")?, s.f("C", 1)?, s.f("c", 1)?);
            let cx = g.extended("x", big_b.clone());
            let mut premises = vec![
                jtm(g.clone(), b.clone(), big_b.clone()),
                jtm(cx.clone(), (*body.body).clone(), (*fam.body).clone()),
            ];
            if rule == RuleId::BetaPi {
                premises.push(jty(cx, (*fam.body).clone(), Set));
                premises.push(jty(g.clone(), big_b.clone(), Set));
            }
            (
                premises,
                jtmeq(
                    g,
                    apt(lam(big_b, body.clone()), b.clone()),
                    body.apply1(&b),
                    fam.apply1(&b),
                ),
            )
        }
        RuleId::EtaPi | RuleId::EtaPiCol => {
            let (big_b, f, fam) = (s.e("B")?, s.e("f")?, s.f("C", 1)?);
            let ty = pi(big_b.clone(), fam);
            let expanded = lam(big_b, abs1("x", apt(f.shifted(1), v(0))));
            (
                vec![jtm(g.clone(), f.clone(), ty.clone())],
                jtmeq(g, expanded, f, ty),
            )
        }

        // ---- quotients (set level and, with Col, collection level) ----
        RuleId::FQuot => {
            let (a, r) = (s.e("A")?, s.f("R", 2)?);
            let mut premises = vec![
                jty(g.clone(), a.clone(), Set),
                jty(ext_xy(&g, &a), (*r.body).clone(), PropS),
            ];
            premises.extend(equiv_premises(&g, &a, &r));
            (premises, jty(g, quot(a, r), Set))
        }
        RuleId::QuotCol => {
            let (a, r) = (s.e("A")?, s.f("R", 2)?);
            let mut premises = vec![jty(ext_xy(&g, &a), (*r.body).clone(), Prop)];
            premises.extend(equiv_premises(&g, &a, &r));
            (premises, jty(g, quot(a, r), Col))
        }
        RuleId::IQuot | RuleId::IQuotCol => {
            let (a, elt, r) = (s.e("A")?, s.e("a")?, s.f("R", 2)?);
            let q = quot(a.clone(), r);
            let srt = if rule == RuleId::IQuot { Set } else { Col };
            (
                vec![
                    jtm(g.clone(), elt.clone(), a),
                    jty(g.clone(), q.clone(), srt),
                ],
                jtm(g, qcl(elt), q),
            )
        }
        RuleId::QClassEq | RuleId::QClassEqCol => {
            let (a, ea, eb, r) = (s.e("A")?, s.e("a")?, s.e("b")?, s.f("R", 2)?);
            let q = quot(a.clone(), r.clone());
            let srt = if rule == RuleId::QClassEq { Set } else { Col };
            (
                vec![
                    jtm(g.clone(), ea.clone(), a.clone()),
                    jtm(g.clone(), eb.clone(), a),
                    jtm(g.clone(), tru(), r.instantiate(&[ea.clone(), eb.clone()])),
                    jty(g.clone(), q.clone(), srt),
                ],
                jtmeq(g, qcl(ea), qcl(eb), q),
            )
        }
        RuleId::EQuot | RuleId::EQuotCol => {
            let (a, p, r) = (s.e("A")?, s.e("p")?, s.f("R", 2)?);
            let (big_l, l) = (s.f("L", 1)?, s.f("l", 1)?);
            let q = quot(a.clone(), r.clone());
            let (branch, compat) = quot_branch_premises(&g, &a, &r, &big_l, &l);
            (
                vec![
                    jty(g.extended("z", q.clone()), (*big_l.body).clone(), Col),
                    jtm(g.clone(), p.clone(), q),
                    branch,
                    compat,
                ],
                jtm(g, elq(p.clone(), big_l.clone(), l), big_l.apply1(&p)),
            )
        }
        RuleId::CQuot | RuleId::CQuotCol => {
            let (a, elt, r) = (s.e("A")?, s.e("a")?, s.f("R", 2)?);
            let (big_l, l) = (s.f("L", 1)?, s.f("l", 1)?);
            let q = quot(a.clone(), r.clone());
            let (branch, compat) = quot_branch_premises(&g, &a, &r, &big_l, &l);
            let cls = qcl(elt.clone());
            (
                vec![
                    jty(g.extended("z", q), (*big_l.body).clone(), Col),
                    jtm(g.clone(), elt.clone(), a),
                    branch,
                    compat,
                ],
                jtmeq(
                    g,
                    elq(cls.clone(), big_l.clone(), l.clone()),
                    l.apply1(&elt),
                    big_l.apply1(&cls),
                ),
            )
        }
        RuleId::Eff | RuleId::EffCol => {
            let (a, ea, eb, r) = (s.e("A")?, s.e("a")?, s.e("b")?, s.f("R", 2)?);
            let q = quot(a.clone(), r.clone());
            let srt = if rule == RuleId::Eff { Set } else { Col };
            (
                vec![
                    jtm(g.clone(), ea.clone(), a.clone()),
                    jtm(g.clone(), eb.clone(), a),
                    jtmeq(g.clone(), qcl(ea.clone()), qcl(eb.clone()), q.clone()),
                    jty(g.clone(), q, srt),
                ],
                jtm(g, tru(), r.instantiate(&[ea, eb])),
            )
        }

        // ---- proof irrelevance ----
        RuleId::PropMono => {
            let (a, p, q) = (s.e("A")?, s.e("p")?, s.e("q")?);
            (
                vec![
                    jty(g.clone(), a.clone(), Prop),
                    jtm(g.clone(), p.clone(), a.clone()),
                    jtm(g.clone(), q.clone(), a.clone()),
                ],
                jtmeq(g, p, q, a),
            )
        }
        RuleId::PropTrue => {
            let (a, p) = (s.e("A")?, s.e("p")?);
            (
                vec![
                    jty(g.clone(), a.clone(), Prop),
                    jtm(g.clone(), p, a.clone()),
                ],
                jtm(g, tru(), a),
            )
        }

        // ---- falsum ----
        RuleId::FBot => (vec![], jty(g, Expr::Bot, Prop)),
        RuleId::EBot => {
            let a = s.e("A")?;
            (
                vec![
                    jtm(g.clone(), tru(), Expr::Bot),
                    jty(g.clone(), a.clone(), Prop),
                ],
                jtm(g, tru(), a),
            )
        }

        // ---- extensional propositional equality ----
        RuleId::FEq => {
            let (c, lhs, rhs) = (s.e("C")?, s.e("c")?, s.e("d")?);
            (
                vec![
                    jty(g.clone(), c.clone(), Col),
                    jtm(g.clone(), lhs.clone(), c.clone()),
                    jtm(g.clone(), rhs.clone(), c.clone()),
                ],
                jty(g, eqp(c, lhs, rhs), Prop),
            )
        }
        RuleId::IEq => {
            let (c, elt) = (s.e("C")?, s.e("c")?);
            (
                vec![jtm(g.clone(), elt.clone(), c.clone())],
                jtm(g, tru(), eqp(c, elt.clone(), elt)),
            )
        }
        RuleId::EEq => {
            let (c, lhs, rhs) = (s.e("C")?, s.e("c")?, s.e("d")?);
            (
                vec![jtm(
                    g.clone(),
                    tru(),
                    eqp(c.clone(), lhs.clone(), rhs.clone()),
                )],
                jtmeq(g, lhs, rhs, c),
            )
        }

        // ---- implication ----
        RuleId::FImp => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![
                    jty(g.clone(), b.clone(), Prop),
                    jty(g.clone(), c.clone(), Prop),
                ],
                jty(g, imp(b, c), Prop),
            )
        }
        RuleId::IImp => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![
                    jtm(g.extended("x", b.clone()), tru(), c.shifted(1)),
                    jty(g.clone(), b.clone(), Prop),
                    jty(g.clone(), c.clone(), Prop),
                ],
                jtm(g, tru(), imp(b, c)),
            )
        }
        RuleId::EImp => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![
                    jtm(g.clone(), tru(), b.clone()),
                    jtm(g.clone(), tru(), imp(b, c.clone())),
                ],
                jtm(g, tru(), c),
            )
        }

        // ---- conjunction ----
        RuleId::FAnd => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![
                    jty(g.clone(), b.clone(), Prop),
                    jty(g.clone(), c.clone(), Prop),
                ],
                jty(
                    g,
                    Expr::And {
                        left: Box::new(b),
                        right: Box::new(c),
                    },
                    Prop,
                ),
            )
        }
        RuleId::IAnd => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![
                    jtm(g.clone(), tru(), b.clone()),
                    jtm(g.clone(), tru(), c.clone()),
                    jty(g.clone(), b.clone(), Prop),
                    jty(g.clone(), c.clone(), Prop),
                ],
                jtm(
                    g,
                    tru(),
                    Expr::And {
                        left: Box::new(b),
                        right: Box::new(c),
                    },
                ),
            )
        }
        RuleId::E1And | RuleId::E2And => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            let conj = Expr::And {
                left: Box::new(b.clone()),
                right: Box::new(c.clone()),
            };
            let out = if rule == RuleId::E1And { b } else { c };
            (vec![jtm(g.clone(), tru(), conj)], jtm(g, tru(), out))
        }

        // ---- disjunction ----
        RuleId::FOr => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![
                    jty(g.clone(), b.clone(), Prop),
                    jty(g.clone(), c.clone(), Prop),
                ],
                jty(
                    g,
                    Expr::Or {
                        left: Box::new(b),
                        right: Box::new(c),
                    },
                    Prop,
                ),
            )
        }
        RuleId::I1Or | RuleId::I2Or => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            let disj = Expr::Or {
                left: Box::new(b.clone()),
                right: Box::new(c.clone()),
            };
            let shown = if rule == RuleId::I1Or { &b } else { &c };
            (
                vec![
                    jtm(g.clone(), tru(), shown.clone()),
                    jty(g.clone(), b.clone(), Prop),
                    jty(g.clone(), c.clone(), Prop),
                ],
                jtm(g, tru(), disj),
            )
        }
        RuleId::EOr => {
            let (a, b, c) = (s.e("A")?, s.e("B")?, s.e("C")?);
            let disj = Expr::Or {
                left: Box::new(b.clone()),
                right: Box::new(c.clone()),
            };
            (
                vec![
                    jty(g.clone(), a.clone(), Prop),
                    jtm(g.clone(), tru(), disj),
                    jtm(g.extended("x", b), tru(), a.shifted(1)),
                    jtm(g.extended("y", c), tru(), a.shifted(1)),
                ],
                jtm(g, tru(), a),
            )
        }

        // ---- existential quantification ----
        RuleId::FExists => {
            let (b, c) = (s.e("B")?, s.f("C", 1)?);
            (
                vec![jty(g.extended("x", b.clone()), (*c.body).clone(), Prop)],
                jty(
                    g,
                    Expr::Exists {
                        dom: Box::new(b),
                        cod: c,
                    },
                    Prop,
                ),
            )
        }
        RuleId::IExists => {
            let (big_b, b, c) = (s.e("B")?, s.e("b")?, s.f("C", 1)?);
            (
                vec![
                    jtm(g.clone(), b.clone(), big_b.clone()),
                    jtm(g.clone(), tru(), c.apply1(&b)),
                    jty(g.extended("x", big_b.clone()), (*c.body).clone(), Prop),
                ],
                jtm(
                    g,
                    tru(),
                    Expr::Exists {
                        dom: Box::new(big_b),
                        cod: c,
                    },
                ),
            )
        }
        RuleId::EExists => {
            let (big_b, m, c) = (s.e("B")?, s.e("M")?, s.f("C", 1)?);
            let ex = Expr::Exists {
                dom: Box::new(big_b.clone()),
                cod: c.clone(),
            };
            let cxy = g
                .extended("x", big_b)
                .extended("y", (*c.body).clone());
            (
                vec![
                    jty(g.clone(), m.clone(), Prop),
                    jtm(g.clone(), tru(), ex),
                    jtm(cxy, tru(), m.shifted(2)),
                ],
                jtm(g, tru(), m),
            )
        }

        // ---- universal quantification ----
        RuleId::FForall => {
            let (b, c) = (s.e("B")?, s.f("C", 1)?);
            (
                vec![jty(g.extended("x", b.clone()), (*c.body).clone(), Prop)],
                jty(
                    g,
                    Expr::Forall {
                        dom: Box::new(b),
                        cod: c,
                    },
                    Prop,
                ),
            )
        }
        RuleId::IForall => {
            let (b, c) = (s.e("B")?, s.f("C", 1)?);
            let cx = g.extended("x", b.clone());
            (
                vec![
                    jtm(cx.clone(), tru(), (*c.body).clone()),
                    jty(cx, (*c.body).clone(), Prop),
                ],
                jtm(
                    g,
                    tru(),
                    Expr::Forall {
                        dom: Box::new(b),
                        cod: c,
                    },
                ),
            )
        }
        RuleId::EForall => {
            let (big_b, b, c) = (s.e("B")?, s.e("b")?, s.f("C", 1)?);
            let fa = Expr::Forall {
                dom: Box::new(big_b.clone()),
                cod: c.clone(),
            };
            (
                vec![
                    jtm(g.clone(), b.clone(), big_b),
                    jtm(g.clone(), tru(), fa),
                ],
                jtm(g, tru(), c.apply1(&b)),
            )
        }

        // ---- small propositions ----
        RuleId::BotPropS => (vec![], jty(g, Expr::Bot, PropS)),
        RuleId::OrPropS | RuleId::ImpPropS | RuleId::AndPropS => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            let out = match rule {
                RuleId::OrPropS => Expr::Or {
                    left: Box::new(b.clone()),
                    right: Box::new(c.clone()),
                },
                RuleId::ImpPropS => imp(b.clone(), c.clone()),
                _ => Expr::And {
                    left: Box::new(b.clone()),
                    right: Box::new(c.clone()),
                },
            };
            (
                vec![
                    jty(g.clone(), b, PropS),
                    jty(g.clone(), c, PropS),
                ],
                jty(g, out, PropS),
            )
        }
        RuleId::ExistsPropS | RuleId::ForallPropS => {
            let (b, c) = (s.e("B")?, s.f("C", 1)?);
            let out = if rule == RuleId::ExistsPropS {
                Expr::Exists {
                    dom: Box::new(b.clone()),
                    cod: c.clone(),
                }
            } else {
                Expr::Forall {
                    dom: Box::new(b.clone()),
                    cod: c.clone(),
                }
            };
            (
                vec![
                    jty(g.extended("x", b.clone()), (*c.body).clone(), PropS),
                    jty(g.clone(), b, Set),
                ],
                jty(g, out, PropS),
            )
        }
        RuleId::EqPropS => {
            let (a, lhs, rhs) = (s.e("A")?, s.e("a")?, s.e("b")?);
            (
                vec![
                    jty(g.clone(), a.clone(), Set),
                    jtm(g.clone(), lhs.clone(), a.clone()),
                    jtm(g.clone(), rhs.clone(), a.clone()),
                ],
                jty(g, eqp(a, lhs, rhs), PropS),
            )
        }

        // ---- power collection of the singleton ----
        RuleId::FPow1 => (vec![], jty(g, Expr::Pow1, Col)),
        RuleId::IPow1 => {
            let b = s.e("B")?;
            (
                vec![jty(g.clone(), b.clone(), PropS)],
                jtm(g, Expr::Pcl(Box::new(b)), Expr::Pow1),
            )
        }
        RuleId::EqPow1 => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![jtm(g.clone(), tru(), iff(b.clone(), c.clone()))],
                jtmeq(
                    g,
                    Expr::Pcl(Box::new(b)),
                    Expr::Pcl(Box::new(c)),
                    Expr::Pow1,
                ),
            )
        }
        RuleId::EffPow1 => {
            let (b, c) = (s.e("B")?, s.e("C")?);
            (
                vec![jtmeq(
                    g.clone(),
                    Expr::Pcl(Box::new(b.clone())),
                    Expr::Pcl(Box::new(c.clone())),
                    Expr::Pow1,
                )],
                jtm(g, tru(), iff(b, c)),
            )
        }
        RuleId::EtaPow1 => {
            let u = s.e("U")?;
            let canon = Expr::Pcl(Box::new(eqp(
                Expr::Pow1,
                u.clone(),
                Expr::Pcl(Box::new(crate::truth())),
            )));
            (
                vec![jtm(g.clone(), u.clone(), Expr::Pow1)],
                jtmeq(g, u, canon, Expr::Pow1),
            )
        }

        // ---- function collections toward the power of the singleton ----
        RuleId::FFc => {
            let b = s.e("B")?;
            (
                vec![jty(g.clone(), b.clone(), Set)],
                jty(g, Expr::FunPow1(Box::new(b)), Col),
            )
        }
        RuleId::IFc => {
            let (b, body) = (s.e("B")?, s.f("c", 1)?);
            (
                vec![
                    jtm(g.extended("x", b.clone()), (*body.body).clone(), Expr::Pow1),
                    jty(g.clone(), b.clone(), Set),
                ],
                jtm(g, lam(b.clone(), body), Expr::FunPow1(Box::new(b))),
            )
        }
        RuleId::EFc => {
            let (big_b, b, f) = (s.e("B")?, s.e("b")?, s.e("f")?);
            (
                vec![
                    jtm(g.clone(), b.clone(), big_b.clone()),
                    jtm(g.clone(), f.clone(), Expr::FunPow1(Box::new(big_b))),
                ],
                jtm(g, apt(f, b), Expr::Pow1),
            )
        }
        RuleId::BetaFc => {
            let (big_b, b, body) = (s.e("B")?, s.e("b")?, s.f("c", 1)?);
            (
                vec![
                    jtm(g.clone(), b.clone(), big_b.clone()),
                    jtm(
                        g.extended("x", big_b.clone()),
                        (*body.body).clone(),
                        Expr::Pow1,
                    ),
                    jty(g.clone(), big_b.clone(), Set),
                ],
                jtmeq(
                    g,
                    apt(lam(big_b, body.clone()), b.clone()),
                    body.apply1(&b),
                    Expr::Pow1,
                ),
            )
        }
        RuleId::EtaFc => {
            let (big_b, f) = (s.e("B")?, s.e("f")?);
            let ty = Expr::FunPow1(Box::new(big_b.clone()));
            let expanded = lam(big_b, abs1("x", apt(f.shifted(1), v(0))));
            (
                vec![jtm(g.clone(), f.clone(), ty.clone())],
                jtmeq(g, expanded, f, ty),
            )
        }

        // ---- type-equality congruences ----
        RuleId::EqSigma | RuleId::EqSigmaSet => {
            let (b, e) = (s.e("B")?, s.e("E")?);
            let (c, d) = (s.f("C", 1)?, s.f("D", 1)?);
            let srt = if rule == RuleId::EqSigma { Col } else { Set };
            (
                vec![
                    jtyeq(
                        g.extended("x", b.clone()),
                        (*c.body).clone(),
                        (*d.body).clone(),
                        srt,
                    ),
                    jtyeq(g.clone(), b.clone(), e.clone(), srt),
                ],
                jtyeq(g, sigma(b, c), sigma(e, d), srt),
            )
        }
        RuleId::EqFc => {
            let (b, e) = (s.e("B")?, s.e("E")?);
            (
                vec![jtyeq(g.clone(), b.clone(), e.clone(), Set)],
                jtyeq(
                    g,
                    Expr::FunPow1(Box::new(b)),
                    Expr::FunPow1(Box::new(e)),
                    Col,
                ),
            )
        }
        RuleId::EqList => {
            let (c, d) = (s.e("C")?, s.e("D")?);
            (
                vec![jtyeq(g.clone(), c.clone(), d.clone(), Set)],
                jtyeq(
                    g,
                    Expr::List(Box::new(c)),
                    Expr::List(Box::new(d)),
                    Set,
                ),
            )
        }
        RuleId::EqPlus => {
            let (b, c, d, e) = (s.e("B")?, s.e("C")?, s.e("D")?, s.e("E")?);
            (
                vec![
                    jtyeq(g.clone(), b.clone(), d.clone(), Set),
                    jtyeq(g.clone(), c.clone(), e.clone(), Set),
                ],
                jtyeq(
                    g,
                    Expr::Plus {
                        left: Box::new(b),
                        right: Box::new(c),
                    },
                    Expr::Plus {
                        left: Box::new(d),
                        right: Box::new(e),
                    },
                    Set,
                ),
            )
        }
        RuleId::EqPi | RuleId::EqPiCol => {
            let (b, e) = (s.e("B")?, s.e("E")?);
            let (c, d) = (s.f("C", 1)?, s.f("D", 1)?);
            let srt = if rule == RuleId::EqPi { Set } else { Col };
            (
                vec![
                    jtyeq(
                        g.extended("x", b.clone()),
                        (*c.body).clone(),
                        (*d.body).clone(),
                        srt,
                    ),
                    jtyeq(g.clone(), b.clone(), e.clone(), srt),
                ],
                jtyeq(g, pi(b, c), pi(e, d), srt),
            )
        }
        RuleId::EqQuot | RuleId::EqQuotCol => {
            let (a, b) = (s.e("A")?, s.e("B")?);
            let (r, rel2) = (s.f("R", 2)?, s.f("S", 2)?);
            let set_level = rule == RuleId::EqQuot;
            let (tysort, relsort) = if set_level { (Set, PropS) } else { (Col, Prop) };
            let mut premises = vec![
                jtyeq(g.clone(), a.clone(), b.clone(), tysort),
                jtyeq(
                    ext_xy(&g, &a),
                    (*r.body).clone(),
                    (*rel2.body).clone(),
                    relsort,
                ),
            ];
            premises.extend(equiv_premises(&g, &a, &r));
            premises.extend(equiv_premises(&g, &a, &rel2));
            (
                premises,
                jtyeq(g, quot(a, r), quot(b, rel2), tysort),
            )
        }
        RuleId::EqOr | RuleId::EqImp | RuleId::EqAnd | RuleId::EqOrPropS
        | RuleId::EqImpPropS | RuleId::EqAndPropS => {
            let (b, c, d, e) = (s.e("B")?, s.e("C")?, s.e("D")?, s.e("E")?);
            let srt = if matches!(rule, RuleId::EqOr | RuleId::EqImp | RuleId::EqAnd) {
                Prop
            } else {
                PropS
            };
            let mk = |l: Expr, r: Expr| match rule {
                RuleId::EqOr | RuleId::EqOrPropS => Expr::Or {
                    left: Box::new(l),
                    right: Box::new(r),
                },
                RuleId::EqImp | RuleId::EqImpPropS => imp(l, r),
                _ => Expr::And {
                    left: Box::new(l),
                    right: Box::new(r),
                },
            };
            (
                vec![
                    jtyeq(g.clone(), b.clone(), d.clone(), srt),
                    jtyeq(g.clone(), c.clone(), e.clone(), srt),
                ],
                jtyeq(g, mk(b, c), mk(d, e), srt),
            )
        }
        RuleId::EqEq | RuleId::EqEqPropS => {
            let (a, e) = (s.e("A")?, s.e("E")?);
            let (ta, tb, tc, te) = (s.e("a")?, s.e("b")?, s.e("c")?, s.e("e")?);
            let small = rule == RuleId::EqEqPropS;
            let (tysort, outsort) = if small { (Set, PropS) } else { (Col, Prop) };
            (
                vec![
                    jtyeq(g.clone(), a.clone(), e.clone(), tysort),
                    jtmeq(g.clone(), ta.clone(), te.clone(), a.clone()),
                    jtmeq(g.clone(), tb.clone(), tc.clone(), a.clone()),
                ],
                jtyeq(g, eqp(a, ta, tb), eqp(e, te, tc), outsort),
            )
        }
        RuleId::EqExists | RuleId::EqForall | RuleId::EqExistsPropS | RuleId::EqForallPropS => {
            let (b, e) = (s.e("B")?, s.e("E")?);
            let (c, d) = (s.f("C", 1)?, s.f("D", 1)?);
            let small = matches!(rule, RuleId::EqExistsPropS | RuleId::EqForallPropS);
            let (bodysort, domsort, outsort) = if small {
                (PropS, Set, PropS)
            } else {
                (Prop, Col, Prop)
            };
            let existential = matches!(rule, RuleId::EqExists | RuleId::EqExistsPropS);
            let mk = |dom: Expr, cod: Abs| {
                if existential {
                    Expr::Exists {
                        dom: Box::new(dom),
                        cod,
                    }
                } else {
                    Expr::Forall {
                        dom: Box::new(dom),
                        cod,
                    }
                }
            };
            (
                vec![
                    jtyeq(
                        g.extended("x", b.clone()),
                        (*c.body).clone(),
                        (*d.body).clone(),
                        bodysort,
                    ),
                    jtyeq(g.clone(), b.clone(), e.clone(), domsort),
                ],
                jtyeq(g, mk(b, c), mk(e, d), outsort),
            )
        }

        // ---- transfer of type equality along the embeddings ----
        RuleId::PropIntoColEq => transfer(&s, g, Prop, Col)?,
        RuleId::PropSIntoPropEq => transfer(&s, g, PropS, Prop)?,
        RuleId::PropSIntoSetEq => transfer(&s, g, PropS, Set)?,
        RuleId::SetIntoColEq => transfer(&s, g, Set, Col)?,
        RuleId::PropSEq1 => {
            let (a, b) = (s.e("A")?, s.e("B")?);
            (
                vec![jtyeq(g.clone(), a.clone(), b.clone(), PropS)],
                jtmeq(g, a, b, Expr::PropS),
            )
        }
        RuleId::PropSEq2 => {
            let (a, b) = (s.e("A")?, s.e("B")?);
            (
                vec![jtmeq(g.clone(), a.clone(), b.clone(), Expr::PropS)],
                jtyeq(g, a, b, PropS),
            )
        }

        // ---- term-equality congruences ----
        RuleId::IEqSigma => {
            let (big_b, b, b2, c, c2) =
                (s.e("B")?, s.e("b")?, s.e("b'")?, s.e("c")?, s.e("c'")?);
            let fam = s.f("C", 1)?;
            (
                vec![
                    jtmeq(g.clone(), b.clone(), b2.clone(), big_b.clone()),
                    jtmeq(g.clone(), c.clone(), c2.clone(), fam.apply1(&b)),
                    jty(g.extended("x", big_b.clone()), (*fam.body).clone(), Col),
                ],
                jtmeq(g, pair(b, c), pair(b2, c2), sigma(big_b, fam)),
            )
        }
        RuleId::EEqSigma => {
            let (big_b, d, d2) = (s.e("B")?, s.e("d")?, s.e("d'")?);
            let (fam, m, br, br2) = (s.f("C", 1)?, s.f("M", 1)?, s.f("m", 2)?, s.f("m'", 2)?);
            let sig = sigma(big_b.clone(), fam.clone());
            let cxy = g
                .extended("x", big_b)
                .extended("y", (*fam.body).clone());
            (
                vec![
                    jty(g.extended("z", sig.clone()), (*m.body).clone(), Col),
                    jtmeq(g.clone(), d.clone(), d2.clone(), sig),
                    jtmeq(
                        cxy,
                        (*br.body).clone(),
                        (*br2.body).clone(),
                        app(&m, 2, &[pair(v(1), v(0))]),
                    ),
                ],
                jtmeq(
                    g,
                    Expr::ElSigma {
                        scrut: Box::new(d.clone()),
                        motive: m.clone(),
                        branch: br,
                    },
                    Expr::ElSigma {
                        scrut: Box::new(d2),
                        motive: m.clone(),
                        branch: br2,
                    },
                    m.apply1(&d),
                ),
            )
        }
        RuleId::EEqN0 => {
            let (a, a2, fam) = (s.e("a")?, s.e("a'")?, s.f("A", 1)?);
            (
                vec![
                    jtmeq(g.clone(), a.clone(), a2.clone(), Expr::N0),
                    jty(g.extended("x", Expr::N0), (*fam.body).clone(), Col),
                ],
                jtmeq(
                    g,
                    Expr::ElN0 {
                        scrut: Box::new(a.clone()),
                        motive: fam.clone(),
                    },
                    Expr::ElN0 {
                        scrut: Box::new(a2),
                        motive: fam.clone(),
                    },
                    fam.apply1(&a),
                ),
            )
        }
        RuleId::EEqN1 => {
            let (t, t2, c, c2, m) =
                (s.e("t")?, s.e("t'")?, s.e("c")?, s.e("c'")?, s.f("M", 1)?);
            (
                vec![
                    jtmeq(g.clone(), t.clone(), t2.clone(), Expr::N1),
                    jty(g.extended("z", Expr::N1), (*m.body).clone(), Col),
                    jtmeq(g.clone(), c.clone(), c2.clone(), m.apply1(&Expr::Star)),
                ],
                jtmeq(
                    g,
                    Expr::ElN1 {
                        scrut: Box::new(t.clone()),
                        motive: m.clone(),
                        branch: Box::new(c),
                    },
                    Expr::ElN1 {
                        scrut: Box::new(t2),
                        motive: m.clone(),
                        branch: Box::new(c2),
                    },
                    m.apply1(&t),
                ),
            )
        }
        RuleId::I2EqList => {
            let (big_c, sq, sq2, c, c2) =
                (s.e("C")?, s.e("s")?, s.e("s'")?, s.e("c")?, s.e("c'")?);
            let lc = Expr::List(Box::new(big_c.clone()));
            (
                vec![
                    jtmeq(g.clone(), sq.clone(), sq2.clone(), lc.clone()),
                    jtmeq(g.clone(), c.clone(), c2.clone(), big_c),
                ],
                jtmeq(
                    g,
                    Expr::Cons {
                        init: Box::new(sq),
                        last: Box::new(c),
                    },
                    Expr::Cons {
                        init: Box::new(sq2),
                        last: Box::new(c2),
                    },
                    lc,
                ),
            )
        }
        RuleId::EEqList => {
            let (big_c, sq, sq2, a, a2) =
                (s.e("C")?, s.e("s")?, s.e("s'")?, s.e("a")?, s.e("a'")?);
            let (big_l, l, l2) = (s.f("L", 1)?, s.f("l", 3)?, s.f("l'", 3)?);
            let lc = Expr::List(Box::new(big_c.clone()));
            let step_ctx = list_step_ctx(&g, &big_c, &big_l);
            (
                vec![
                    jty(g.extended("z", lc.clone()), (*big_l.body).clone(), Col),
                    jtmeq(g.clone(), sq.clone(), sq2.clone(), lc),
                    jtmeq(g.clone(), a.clone(), a2.clone(), big_l.apply1(&Expr::Nil)),
                    jtmeq(
                        step_ctx,
                        (*l.body).clone(),
                        (*l2.body).clone(),
                        app(
                            &big_l,
                            3,
                            &[Expr::Cons {
                                init: Box::new(v(2)),
                                last: Box::new(v(1)),
                            }],
                        ),
                    ),
                ],
                jtmeq(
                    g,
                    Expr::ElList {
                        scrut: Box::new(sq.clone()),
                        motive: big_l.clone(),
                        base: Box::new(a),
                        step: l,
                    },
                    Expr::ElList {
                        scrut: Box::new(sq2),
                        motive: big_l.clone(),
                        base: Box::new(a2),
                        step: l2,
                    },
                    big_l.apply1(&sq),
                ),
            )
        }
        RuleId::IEqQuot | RuleId::IEqQuotCol => {
            let (a, ea, ea2, r) = (s.e("A")?, s.e("a")?, s.e("a'")?, s.f("R", 2)?);
            let q = quot(a.clone(), r);
            let srt = if rule == RuleId::IEqQuot { Set } else { Col };
            (
                vec![
                    jtmeq(g.clone(), ea.clone(), ea2.clone(), a),
                    jty(g.clone(), q.clone(), srt),
                ],
                jtmeq(g, qcl(ea), qcl(ea2), q),
            )
        }
        RuleId::EEqQuot | RuleId::EEqQuotCol => {
            let (a, p, p2, r) = (s.e("A")?, s.e("p")?, s.e("p'")?, s.f("R", 2)?);
            let (big_l, l, l2) = (s.f("L", 1)?, s.f("l", 1)?, s.f("l'", 1)?);
            let q = quot(a.clone(), r.clone());
            let branch_eq = jtmeq(
                g.extended("x", a.clone()),
                (*l.body).clone(),
                (*l2.body).clone(),
                app(&big_l, 1, &[qcl(v(0))]),
            );
            let (_, compat) = quot_branch_premises(&g, &a, &r, &big_l, &l);
            (
                vec![
                    jty(g.extended("z", q.clone()), (*big_l.body).clone(), Col),
                    jtmeq(g.clone(), p.clone(), p2.clone(), q),
                    branch_eq,
                    compat,
                ],
                jtmeq(
                    g,
                    elq(p.clone(), big_l.clone(), l),
                    elq(p2, big_l.clone(), l2),
                    big_l.apply1(&p),
                ),
            )
        }
        RuleId::I1EqPlus | RuleId::I2EqPlus => {
            let (big_b, big_c) = (s.e("B")?, s.e("C")?);
            let sum = Expr::Plus {
                left: Box::new(big_b.clone()),
                right: Box::new(big_c.clone()),
            };
            let left_case = rule == RuleId::I1EqPlus;
            let (x, x2, of): (Expr, Expr, Expr) = if left_case {
                (s.e("b")?, s.e("b'")?, big_b.clone())
            } else {
                (s.e("c")?, s.e("c'")?, big_c.clone())
            };
            let inj = |e: Expr| {
                if left_case {
                    Expr::Inl(Box::new(e))
                } else {
                    Expr::Inr(Box::new(e))
                }
            };
            (
                vec![
                    jtmeq(g.clone(), x.clone(), x2.clone(), of),
                    jty(g.clone(), big_b, Set),
                    jty(g.clone(), big_c, Set),
                ],
                jtmeq(g, inj(x), inj(x2), sum),
            )
        }
        RuleId::EEqPlus => {
            let (big_b, big_c, d, d2) = (s.e("B")?, s.e("C")?, s.e("d")?, s.e("d'")?);
            let (fam, ab, ab2, ac, ac2) = (
                s.f("A", 1)?,
                s.f("aB", 1)?,
                s.f("aB'", 1)?,
                s.f("aC", 1)?,
                s.f("aC'", 1)?,
            );
            let sum = Expr::Plus {
                left: Box::new(big_b.clone()),
                right: Box::new(big_c.clone()),
            };
            (
                vec![
                    jty(g.extended("z", sum.clone()), (*fam.body).clone(), Col),
                    jtmeq(g.clone(), d.clone(), d2.clone(), sum),
                    jtmeq(
                        g.extended("x", big_b),
                        (*ab.body).clone(),
                        (*ab2.body).clone(),
                        app(&fam, 1, &[Expr::Inl(Box::new(v(0)))]),
                    ),
                    jtmeq(
                        g.extended("y", big_c),
                        (*ac.body).clone(),
                        (*ac2.body).clone(),
                        app(&fam, 1, &[Expr::Inr(Box::new(v(0)))]),
                    ),
                ],
                jtmeq(
                    g,
                    Expr::ElPlus {
                        scrut: Box::new(d.clone()),
                        motive: fam.clone(),
                        left: ab,
                        right: ac,
                    },
                    Expr::ElPlus {
                        scrut: Box::new(d2),
                        motive: fam.clone(),
                        left: ab2,
                        right: ac2,
                    },
                    fam.apply1(&d),
                ),
            )
        }
        RuleId::IEqPi | RuleId::IEqPiCol => {
            let (b, fam) = (s.e("B")?, s.f("C", 1)?);
            let (body, body2) = (s.f("c", 1)?, s.f("c'", 1)?);
            let cx = g.extended("x", b.clone());
            let mut premises = vec![jtmeq(
                cx.clone(),
                (*body.body).clone(),
                (*body2.body).clone(),
                (*fam.body).clone(),
            )];
            if rule == RuleId::IEqPi {
                premises.push(jty(cx, (*fam.body).clone(), Set));
                premises.push(jty(g.clone(), b.clone(), Set));
            }
            (
                premises,
                jtmeq(
                    g,
                    lam(b.clone(), body),
                    lam(b.clone(), body2),
                    pi(b, fam),
                ),
            )
        }
        RuleId::EEqPi | RuleId::EEqPiCol => {
            let (big_b, b, b2, f, f2) =
                (s.e("B")?, s.e("b")?, s.e("b'")?, s.e("f")?, s.e("f'")?);
            let fam = s.f("C", 1)?;
            (
                vec![
                    jtmeq(g.clone(), b.clone(), b2.clone(), big_b.clone()),
                    jtmeq(g.clone(), f.clone(), f2.clone(), pi(big_b, fam.clone())),
                ],
                jtmeq(g, apt(f, b.clone()), apt(f2, b2), fam.apply1(&b)),
            )
        }
        RuleId::IEqFc => {
            let (b, body, body2) = (s.e("B")?, s.f("c", 1)?, s.f("c'", 1)?);
            (
                vec![
                    jtmeq(
                        g.extended("x", b.clone()),
                        (*body.body).clone(),
                        (*body2.body).clone(),
                        Expr::Pow1,
                    ),
                    jty(g.clone(), b.clone(), Set),
                ],
                jtmeq(
                    g,
                    lam(b.clone(), body),
                    lam(b.clone(), body2),
                    Expr::FunPow1(Box::new(b)),
                ),
            )
        }
        RuleId::EEqFc => {
            let (big_b, b, b2, f, f2) =
                (s.e("B")?, s.e("b")?, s.e("b'")?, s.e("f")?, s.e("f'")?);
            (
                vec![
                    jtmeq(g.clone(), b.clone(), b2.clone(), big_b.clone()),
                    jtmeq(
                        g.clone(),
                        f.clone(),
                        f2.clone(),
                        Expr::FunPow1(Box::new(big_b)),
                    ),
                ],
                jtmeq(g, apt(f, b), apt(f2, b2), Expr::Pow1),
            )
        }
    })
}

/// `ctx, x:List C, y:C, z:L(x)` — the list-step telescope.
fn list_step_ctx(ctx: &Context, c: &Expr, big_l: &Abs) -> Context {
    let lc = Expr::List(Box::new(c.clone()));
    ctx.extended("x", lc)
        .extended("y", c.shifted(1))
        .extended("z", app(big_l, 2, &[v(1)]))
}

/// The list-step premise `l(x,y,z) in L(cons(x,y))` over its telescope.
fn list_step_premise(ctx: &Context, c: &Expr, big_l: &Abs, l: &Abs) -> JudgementForm {
    jtm(
        list_step_ctx(ctx, c, big_l),
        (*l.body).clone(),
        app(
            big_l,
            3,
            &[Expr::Cons {
                init: Box::new(v(2)),
                last: Box::new(v(1)),
            }],
        ),
    )
}

/// `ctx` extended by every entry of a telescope.
fn extend_all(ctx: &Context, tel: &Context) -> Context {
    let mut out = ctx.clone();
    for (name, ty) in tel.entries() {
        out.push(name.clone(), ty.clone());
    }
    out
}

/// The n component equalities `a_i = b_i in A_i(a_1 .. a_{i-1})` of the
/// substitution rules.
fn subst_equalities(
    ctx: &Context,
    tel: &Context,
    a: &[Expr],
    b: &[Expr],
    n: usize,
    path: &str,
) -> Result<Vec<JudgementForm>, VerifyError> {
    if n == 0 || a.len() != n || b.len() != n {
        return Err(VerifyError::ArityMismatch {
            path: path.into(),
            detail: format!(
                "substitution of {n} variables needs {n} equalities, got {} and {}",
                a.len(),
                b.len()
            ),
        });
    }
    Ok((0..n)
        .map(|i| {
            let (_, ai) = &tel.entries()[i];
            let hints = vec![String::from("_"); i];
            let ai_inst = Abs::new(hints, ai.clone()).instantiate(&a[..i]);
            jtmeq(ctx.clone(), a[i].clone(), b[i].clone(), ai_inst)
        })
        .collect())
}

fn transfer(s: &S, g: Context, from: Sort, to: Sort) -> Result<Schema, VerifyError> {
    let (a, b) = (s.e("A")?, s.e("B")?);
    Ok((
        vec![jtyeq(g.clone(), a.clone(), b.clone(), from)],
        jtyeq(g, a, b, to),
    ))
}
