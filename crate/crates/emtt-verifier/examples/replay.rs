//! Building and replaying an extensional derivation certificate.
//!
//! The derivation below proves the xi-instance
//!   lambda x. Ap(lambda y. y, x) = lambda x. x in Pi_{x in N1} N1
//! which the intensional kernel rejects: extensionally it follows from
//! beta and the congruence rule for lambda.

use emtt_verifier::{apply_rule, verify, DerivationCert, Inst, RuleId};
use syntax_core::build::*;
use syntax_core::{Context, Theory};

const TH: Theory = Theory::Emtt;

fn node(rule: RuleId, inst: Inst, premises: Vec<DerivationCert>) -> DerivationCert {
    apply_rule(rule, inst, premises, TH).expect("rule instantiation")
}

fn main() {
    let ctx = Context::empty();
    let cx = ctx.extended("x", n1());
    let cxy = cx.extended("y", n1());

    let n1_set = |c: &Context| node(RuleId::FN1, Inst::new(c.clone()), vec![]);
    let var_of = |c: &Context, i: usize| {
        let mut cont = node(RuleId::ContEmpty, Inst::new(Context::empty()), vec![]);
        for (k, (name, ty)) in c.entries().iter().enumerate() {
            let prefix = c.prefix(k);
            let col = node(
                RuleId::SetIntoCol,
                Inst::new(prefix.clone()).with_expr("A", ty.clone()),
                vec![n1_set(&prefix)],
            );
            cont = node(
                RuleId::ContExt,
                Inst::new(prefix).with_expr("A", ty.clone()).with_name(name.clone()),
                vec![col],
            );
        }
        node(RuleId::Var, Inst::new(c.clone()).with_expr("x", var(i)), vec![cont])
    };

    // Beta: in x in N1, Ap(lambda y. y, x) = x in N1.
    let beta = node(
        RuleId::BetaPi,
        Inst::new(cx.clone())
            .with_expr("B", n1())
            .with_expr("b", var(0))
            .with_abs("C", abs1("y", n1()))
            .with_abs("c", abs1("y", var(0))),
        vec![var_of(&cx, 0), var_of(&cxy, 0), n1_set(&cxy), n1_set(&cx)],
    );

    // Congruence for lambda over the beta premise.
    let cert = node(
        RuleId::IEqPi,
        Inst::new(ctx)
            .with_expr("B", n1())
            .with_abs("C", abs1("x", n1()))
            .with_abs("c", abs1("x", ap(lam("y", n1(), var(0)), var(0))))
            .with_abs("c'", abs1("x", var(0))),
        vec![beta, n1_set(&cx), n1_set(&Context::empty())],
    );

    match verify(&cert, TH) {
        Ok(j) => println!("verified: {:?}", j.form),
        Err(e) => println!("rejected: {e}"),
    }

    // The same tree under the intensional theory is refused outright.
    match verify(&cert, Theory::Mtt) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("intensional check refused: {e}"),
    }
}
