//! Derivation-tree replay tests for the extensional verifier.

use emtt_verifier::{
    apply_rule, comprehension, epsilon, powerset, truth, verify, DerivationCert, Inst, RuleId,
    VerifyError,
};
use syntax_core::build::*;
use syntax_core::{Context, Expr, JudgementForm, Sort, Theory};

const TH: Theory = Theory::Emtt;

fn node(rule: RuleId, inst: Inst, premises: Vec<DerivationCert>) -> DerivationCert {
    apply_rule(rule, inst, premises, TH)
        .unwrap_or_else(|e| panic!("apply_rule({rule}) failed: {e}"))
}

/// `A col [ctx]` for the handful of closed types the tests use.
fn ty_col(ctx: &Context, ty: &Expr) -> DerivationCert {
    let i = Inst::new(ctx.clone()).with_expr("A", ty.clone());
    match ty {
        Expr::N1 => node(RuleId::SetIntoCol, i, vec![fset(ctx, ty)]),
        Expr::Bot | Expr::Imp { .. } => node(RuleId::PropIntoCol, i, vec![fprop(ctx, ty)]),
        Expr::Pow1 => node(RuleId::FPow1, Inst::new(ctx.clone()), vec![]),
        _ => panic!("ty_col: unsupported type {ty:?}"),
    }
}

/// `A set [ctx]` for N1.
fn fset(ctx: &Context, ty: &Expr) -> DerivationCert {
    match ty {
        Expr::N1 => node(RuleId::FN1, Inst::new(ctx.clone()), vec![]),
        _ => panic!("fset: unsupported type {ty:?}"),
    }
}

/// `A prop [ctx]` for falsum and implications between supported props.
fn fprop(ctx: &Context, ty: &Expr) -> DerivationCert {
    match ty {
        Expr::Bot => node(RuleId::FBot, Inst::new(ctx.clone()), vec![]),
        Expr::Imp { left, right } => node(
            RuleId::FImp,
            Inst::new(ctx.clone())
                .with_expr("B", (**left).clone())
                .with_expr("C", (**right).clone()),
            vec![fprop(ctx, left), fprop(ctx, right)],
        ),
        _ => panic!("fprop: unsupported type {ty:?}"),
    }
}

/// `ctx cont` built entry by entry from the empty context.
fn cont_of(ctx: &Context) -> DerivationCert {
    let mut cert = node(RuleId::ContEmpty, Inst::new(Context::empty()), vec![]);
    for (i, (name, ty)) in ctx.entries().iter().enumerate() {
        let prefix = ctx.prefix(i);
        cert = node(
            RuleId::ContExt,
            Inst::new(prefix.clone())
                .with_expr("A", ty.clone())
                .with_name(name.clone()),
            vec![ty_col(&prefix, ty)],
        );
    }
    cert
}

/// `x_i in A_i [ctx]` by the assumption rule.
fn assume(ctx: &Context, i: usize) -> DerivationCert {
    node(
        RuleId::Var,
        Inst::new(ctx.clone()).with_expr("x", var(i)),
        vec![cont_of(ctx)],
    )
}

/// `true in tt [ctx]`, where tt is falsum -> falsum.
fn true_tt(ctx: &Context) -> DerivationCert {
    let cx = ctx.extended("h", bot());
    let from_hyp = node(
        RuleId::PropTrue,
        Inst::new(cx.clone())
            .with_expr("A", bot())
            .with_expr("p", var(0)),
        vec![fprop(&cx, &bot()), assume(&cx, 0)],
    );
    node(
        RuleId::IImp,
        Inst::new(ctx.clone())
            .with_expr("B", bot())
            .with_expr("C", bot()),
        vec![from_hyp, fprop(ctx, &bot()), fprop(ctx, &bot())],
    )
}

/// `tt props [ctx]`.
fn props_tt(ctx: &Context) -> DerivationCert {
    let b = node(RuleId::BotPropS, Inst::new(ctx.clone()), vec![]);
    node(
        RuleId::ImpPropS,
        Inst::new(ctx.clone())
            .with_expr("B", bot())
            .with_expr("C", bot()),
        vec![b.clone(), b],
    )
}

/// `N1 / tt set [ctx]` — the quotient of the singleton by the total
/// (trivially true) relation.
fn quot_n1_tt(ctx: &Context) -> DerivationCert {
    let r = abs2("x", "y", tt());
    let cxy = ctx.extended("x", n1()).extended("y", n1());
    let refl = true_tt(&ctx.extended("x", n1()));
    let sym = true_tt(&cxy.extended("u", tt()));
    let tra = true_tt(
        &cxy.extended("z", n1())
            .extended("u", tt())
            .extended("v", tt()),
    );
    node(
        RuleId::FQuot,
        Inst::new(ctx.clone())
            .with_expr("A", n1())
            .with_abs("R", r),
        vec![fset(ctx, &n1()), props_tt(&cxy), refl, sym, tra],
    )
}

#[test]
fn reflexivity_of_propositional_equality() {
    let cert = node(
        RuleId::IEq,
        Inst::new(Context::empty())
            .with_expr("C", n1())
            .with_expr("c", star()),
        vec![node(RuleId::IN1, Inst::new(Context::empty()), vec![])],
    );
    let j = verify(&cert, TH).unwrap();
    assert_eq!(
        j.form,
        JudgementForm::Term {
            ctx: Context::empty(),
            term: true_tm(),
            ty: eq(n1(), star(), star()),
        }
    );
}

#[test]
fn equality_reflection_under_a_hypothesis() {
    // In the context x in N1, w in Eq(N1, x, star), conclude x = star in N1.
    let ctx1 = Context::empty().extended("x", n1());
    let hyp = eq(n1(), var(0), star());
    let ctx2 = ctx1.extended("w", hyp.clone());

    // Eq(N1, x, star) prop in the extended context (x is now Var(1)).
    let shifted_hyp = eq(n1(), var(1), star());
    let feq = node(
        RuleId::FEq,
        Inst::new(ctx2.clone())
            .with_expr("C", n1())
            .with_expr("c", var(1))
            .with_expr("d", star()),
        vec![
            ty_col(&ctx2, &n1()),
            cont2_assume(&ctx2, &ctx1, &hyp, 1),
            node(RuleId::IN1, Inst::new(ctx2.clone()), vec![]),
        ],
    );
    // The hypothesis proves its own truth.
    let truth_of_hyp = node(
        RuleId::PropTrue,
        Inst::new(ctx2.clone())
            .with_expr("A", shifted_hyp.clone())
            .with_expr("p", var(0)),
        vec![feq, cont2_assume(&ctx2, &ctx1, &hyp, 0)],
    );
    let cert = node(
        RuleId::EEq,
        Inst::new(ctx2.clone())
            .with_expr("C", n1())
            .with_expr("c", var(1))
            .with_expr("d", star()),
        vec![truth_of_hyp],
    );
    let j = verify(&cert, TH).unwrap();
    assert_eq!(
        j.form,
        JudgementForm::TermEq {
            ctx: ctx2,
            lhs: var(1),
            rhs: star(),
            ty: n1(),
        }
    );
}

/// Assumption in the two-entry context of the reflection test, whose second
/// entry is not covered by the generic `ty_col`.
fn cont2_assume(ctx2: &Context, ctx1: &Context, hyp: &Expr, i: usize) -> DerivationCert {
    let feq1 = node(
        RuleId::FEq,
        Inst::new(ctx1.clone())
            .with_expr("C", n1())
            .with_expr("c", var(0))
            .with_expr("d", star()),
        vec![
            ty_col(ctx1, &n1()),
            assume(ctx1, 0),
            node(RuleId::IN1, Inst::new(ctx1.clone()), vec![]),
        ],
    );
    let hyp_col = node(
        RuleId::PropIntoCol,
        Inst::new(ctx1.clone()).with_expr("A", hyp.clone()),
        vec![feq1],
    );
    let cont2 = node(
        RuleId::ContExt,
        Inst::new(ctx1.clone())
            .with_expr("A", hyp.clone())
            .with_name("w"),
        vec![hyp_col],
    );
    node(
        RuleId::Var,
        Inst::new(ctx2.clone()).with_expr("x", var(i)),
        vec![cont2],
    )
}

#[test]
fn quotient_effectiveness_and_a_missing_premise_mutant() {
    let ctx = Context::empty();
    let r = abs2("x", "y", tt());
    let star_in = node(RuleId::IN1, Inst::new(ctx.clone()), vec![]);
    let class_eq = node(
        RuleId::QClassEq,
        Inst::new(ctx.clone())
            .with_expr("A", n1())
            .with_expr("a", star())
            .with_expr("b", star())
            .with_abs("R", r.clone()),
        vec![
            star_in.clone(),
            star_in.clone(),
            true_tt(&ctx),
            quot_n1_tt(&ctx),
        ],
    );
    let eff = node(
        RuleId::Eff,
        Inst::new(ctx.clone())
            .with_expr("A", n1())
            .with_expr("a", star())
            .with_expr("b", star())
            .with_abs("R", r),
        vec![star_in.clone(), star_in, class_eq, quot_n1_tt(&ctx)],
    );
    let j = verify(&eff, TH).unwrap();
    assert_eq!(
        j.form,
        JudgementForm::Term {
            ctx,
            term: true_tm(),
            ty: tt(),
        }
    );

    // Dropping the quotient-formation premise must be caught.
    let mut mutant = eff;
    mutant.premises.pop();
    assert_eq!(
        verify(&mutant, TH),
        Err(VerifyError::MissingPremise {
            path: "root".into(),
            expected: 4,
            found: 3,
        })
    );
}

#[test]
fn quotient_computation() {
    // ElQ([star], z.N1, x.star) = star in N1.
    let ctx = Context::empty();
    let r = abs2("x", "y", tt());
    let q = quot(n1(), r.clone());
    let motive = abs1("z", n1());
    let branch = abs1("x", star());
    let motive_col = ty_col(&ctx.extended("z", q), &n1());
    let star_in = node(RuleId::IN1, Inst::new(ctx.clone()), vec![]);
    let branch_tm = node(RuleId::IN1, Inst::new(ctx.extended("x", n1())), vec![]);
    let compat_ctx = ctx
        .extended("x", n1())
        .extended("y", n1())
        .extended("d", tt());
    let compat = node(
        RuleId::RefTm,
        Inst::new(compat_ctx.clone())
            .with_expr("a", star())
            .with_expr("A", n1()),
        vec![node(RuleId::IN1, Inst::new(compat_ctx), vec![])],
    );
    let cert = node(
        RuleId::CQuot,
        Inst::new(ctx.clone())
            .with_expr("A", n1())
            .with_expr("a", star())
            .with_abs("R", r)
            .with_abs("L", motive.clone())
            .with_abs("l", branch.clone()),
        vec![motive_col, star_in, branch_tm, compat],
    );
    let j = verify(&cert, TH).unwrap();
    assert_eq!(
        j.form,
        JudgementForm::TermEq {
            ctx,
            lhs: elq(qclass(star()), motive, branch),
            rhs: star(),
            ty: n1(),
        }
    );
}

#[test]
fn xi_rule_is_derivable_extensionally() {
    // The intensional kernel rejects lambda x. Ap(lambda y. y, x) = lambda x. x,
    // but the extensional congruence for lambda derives it from beta.
    let ctx = Context::empty();
    let cx = ctx.extended("x", n1());
    let cxy = cx.extended("y", n1());
    let identity = abs1("y", var(0));
    let redex_body = abs1("x", ap(lam("y", n1(), var(0)), var(0)));
    let plain_body = abs1("x", var(0));
    let fam = abs1("x", n1());

    let beta = node(
        RuleId::BetaPi,
        Inst::new(cx.clone())
            .with_expr("B", n1())
            .with_expr("b", var(0))
            .with_abs("C", abs1("y", n1()))
            .with_abs("c", identity),
        vec![
            assume(&cx, 0),
            assume(&cxy, 0),
            fset(&cxy, &n1()),
            fset(&cx, &n1()),
        ],
    );
    let cert = node(
        RuleId::IEqPi,
        Inst::new(ctx.clone())
            .with_expr("B", n1())
            .with_abs("C", fam.clone())
            .with_abs("c", redex_body.clone())
            .with_abs("c'", plain_body.clone()),
        vec![beta, fset(&cx, &n1()), fset(&ctx, &n1())],
    );
    let j = verify(&cert, TH).unwrap();
    assert_eq!(
        j.form,
        JudgementForm::TermEq {
            ctx,
            lhs: Expr::Lam {
                dom: Box::new(n1()),
                body: redex_body,
            },
            rhs: Expr::Lam {
                dom: Box::new(n1()),
                body: plain_body,
            },
            ty: pi("x", n1(), n1()),
        }
    );
}

#[test]
fn canonical_form_in_the_power_of_the_singleton() {
    let ctx = Context::empty().extended("U", pow1());
    let cert = node(
        RuleId::EtaPow1,
        Inst::new(ctx.clone()).with_expr("U", var(0)),
        vec![assume(&ctx, 0)],
    );
    let j = verify(&cert, TH).unwrap();
    assert_eq!(
        j.form,
        JudgementForm::TermEq {
            ctx,
            lhs: var(0),
            rhs: pcl(eq(pow1(), var(0), pcl(tt()))),
            ty: pow1(),
        }
    );
}

#[test]
fn quotient_collections_need_the_dependent_extension() {
    let ctx = Context::empty();
    let r = abs2("x", "y", tt());
    let cxy = ctx.extended("x", n1()).extended("y", n1());
    let relation_prop = fprop(&cxy, &tt());
    let refl = true_tt(&ctx.extended("x", n1()));
    let sym = true_tt(&cxy.extended("u", tt()));
    let tra = true_tt(
        &cxy.extended("z", n1())
            .extended("u", tt())
            .extended("v", tt()),
    );
    let mk = |th: Theory| {
        let step = |rule, inst, premises| apply_rule(rule, inst, premises, th).unwrap();
        // Rebuild the equivalence premises under the requested theory.
        fn retheory(c: &DerivationCert, th: Theory) -> DerivationCert {
            let premises = c.premises.iter().map(|p| retheory(p, th)).collect();
            apply_rule(c.rule, c.inst.clone(), premises, th).unwrap()
        }
        step(
            RuleId::QuotCol,
            Inst::new(ctx.clone())
                .with_expr("A", n1())
                .with_abs("R", r.clone()),
            vec![
                retheory(&relation_prop, th),
                retheory(&refl, th),
                retheory(&sym, th),
                retheory(&tra, th),
            ],
        )
    };
    let dp_cert = mk(Theory::EmttDp);
    assert!(verify(&dp_cert, Theory::EmttDp).is_ok());
    let plain_cert = mk(Theory::Emtt);
    assert!(matches!(
        verify(&plain_cert, Theory::Emtt),
        Err(VerifyError::TheoryViolation(_))
    ));
}

#[test]
fn tampered_conclusion_is_rejected() {
    let mut cert = node(
        RuleId::IEq,
        Inst::new(Context::empty())
            .with_expr("C", n1())
            .with_expr("c", star()),
        vec![node(RuleId::IN1, Inst::new(Context::empty()), vec![])],
    );
    cert.concl.form = JudgementForm::Term {
        ctx: Context::empty(),
        term: true_tm(),
        ty: eq(n1(), star(), eln1(star(), abs1("z", n1()), star())),
    };
    assert!(matches!(
        verify(&cert, TH),
        Err(VerifyError::RuleMismatch { path, .. }) if path == "root"
    ));
}

#[test]
fn builder_checks_premise_count_and_scope() {
    let arity = apply_rule(
        RuleId::RefTy,
        Inst::new(Context::empty())
            .with_expr("A", n1())
            .with_sort(Sort::Set),
        vec![],
        TH,
    );
    assert!(matches!(arity, Err(VerifyError::ArityMismatch { .. })));

    let scope = apply_rule(
        RuleId::IN1,
        Inst::new(Context::empty()).with_expr("junk", var(5)),
        vec![],
        TH,
    );
    assert!(matches!(scope, Err(VerifyError::ScopeError { .. })));

    let intensional = apply_rule(RuleId::FN1, Inst::new(Context::empty()), vec![], Theory::Mtt);
    assert!(matches!(intensional, Err(VerifyError::TheoryViolation(_))));
}

#[test]
fn weakening_preserves_verification() {
    // Prepending a fresh outermost assumption to every context of a closed
    // derivation keeps it valid without touching a single index.
    fn weaken(c: &DerivationCert) -> DerivationCert {
        let mut out = c.clone();
        out.inst.ctx = prepend(&out.inst.ctx);
        out.premises = c.premises.iter().map(weaken).collect();
        out.concl.form = match out.concl.form {
            JudgementForm::Type { ctx, ty, sort } => JudgementForm::Type {
                ctx: prepend(&ctx),
                ty,
                sort,
            },
            JudgementForm::TypeEq { ctx, lhs, rhs, sort } => JudgementForm::TypeEq {
                ctx: prepend(&ctx),
                lhs,
                rhs,
                sort,
            },
            JudgementForm::Term { ctx, term, ty } => JudgementForm::Term {
                ctx: prepend(&ctx),
                term,
                ty,
            },
            JudgementForm::TermEq { ctx, lhs, rhs, ty } => JudgementForm::TermEq {
                ctx: prepend(&ctx),
                lhs,
                rhs,
                ty,
            },
            JudgementForm::Cont { ctx } => JudgementForm::Cont { ctx: prepend(&ctx) },
        };
        out
    }
    fn prepend(ctx: &Context) -> Context {
        let mut entries = vec![("fresh0".to_string(), n1())];
        entries.extend(ctx.entries().iter().cloned());
        Context::from_entries(entries)
    }

    let cert = node(
        RuleId::IEq,
        Inst::new(Context::empty())
            .with_expr("C", n1())
            .with_expr("c", star()),
        vec![node(RuleId::IN1, Inst::new(Context::empty()), vec![])],
    );
    verify(&cert, TH).unwrap();
    let weakened = weaken(&cert);
    let j = verify(&weakened, TH).unwrap();
    assert_eq!(j.form.ctx().len(), 1);
}

#[test]
fn rule_names_round_trip() {
    for r in RuleId::ALL {
        assert_eq!(RuleId::from_name(r.name()), Some(r), "{r}");
    }
    assert_eq!(RuleId::from_name("no-such-rule"), None);
}

#[test]
fn defined_notations_expand_to_core_syntax() {
    assert_eq!(truth(), imp(bot(), bot()));
    assert_eq!(
        epsilon(star(), var(0)),
        eq(pow1(), ap(var(0), star()), pcl(tt()))
    );
    assert_eq!(
        comprehension(n1(), abs1("x", eq(n1(), var(0), star()))),
        lam("x", n1(), pcl(eq(n1(), var(0), star())))
    );
    assert_eq!(powerset(n1()), fun_pow1(n1()));
}
