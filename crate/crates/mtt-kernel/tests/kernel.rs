use mtt_kernel::{
    check_context, check_term, check_type, conv_term, conv_type, infer_sort, infer_type, oracle,
    whnf, KernelConfig, KernelError,
};
use syntax_core::build::*;
use syntax_core::ctx::ContextError;
use syntax_core::{alpha_eq, Context, Expr, Sort, Theory};

fn mtt() -> KernelConfig {
    KernelConfig::mtt()
}

fn ctx1(name: &str, ty: Expr) -> Context {
    Context::empty().extended(name, ty)
}

/// Type ascription via an immediately applied identity function: gives
/// check-only introduction forms an inferable wrapper.
fn annot(t: Expr, ty: Expr) -> Expr {
    ap(lam("anno", ty, var(0)), t)
}

// ---- check_type ----

#[test]
fn sigma_of_identity_is_a_set() {
    let a = sigma("x", n1(), id(n1(), var(0), star()));
    let report = check_type(&Context::empty(), &a, Sort::Set, &mtt()).unwrap();
    assert_eq!(report.sort, Sort::Set);
}

#[test]
fn identity_over_a_set_is_small() {
    let a = id(n1(), star(), star());
    let report = check_type(&Context::empty(), &a, Sort::PropS, &mtt()).unwrap();
    assert_eq!(report.sort, Sort::PropS);
}

#[test]
fn pi_over_collections_rejected_in_base_theory() {
    let a = pi("x", props(), props());
    let err = check_type(&Context::empty(), &a, Sort::Set, &mtt()).unwrap_err();
    assert!(matches!(err, KernelError::TheoryViolation(_)), "{err}");
}

#[test]
fn pi_over_collections_is_a_collection_with_dp() {
    let a = pi("x", props(), props());
    let cfg = KernelConfig::mtt_dp();
    let report = check_type(&Context::empty(), &a, Sort::Col, &cfg).unwrap();
    assert_eq!(report.sort, Sort::Col);
    let err = check_type(&Context::empty(), &a, Sort::Set, &cfg).unwrap_err();
    assert!(matches!(err, KernelError::SortTooSmall { .. }), "{err}");
}

#[test]
fn extensional_formers_rejected() {
    let a = eq(n1(), star(), star());
    let err = check_type(&Context::empty(), &a, Sort::Prop, &mtt()).unwrap_err();
    assert!(matches!(err, KernelError::TheoryViolation(_)), "{err}");
}

#[test]
fn extensional_theory_tag_rejected() {
    let cfg = KernelConfig::new(Theory::Emtt);
    let err = check_type(&Context::empty(), &n1(), Sort::Set, &cfg).unwrap_err();
    assert!(matches!(err, KernelError::TheoryViolation(_)), "{err}");
}

#[test]
fn subsumption_coherence_for_small_props() {
    for a in [bot(), id(n1(), star(), star())] {
        for s in [Sort::PropS, Sort::Prop, Sort::Set, Sort::Col] {
            assert!(
                check_type(&Context::empty(), &a, s, &mtt()).is_ok(),
                "{a} at {s}"
            );
        }
    }
}

// ---- infer_sort ----

#[test]
fn falsum_is_small() {
    assert_eq!(infer_sort(&Context::empty(), &bot(), &mtt()).unwrap(), Sort::PropS);
}

#[test]
fn small_propositions_form_a_collection() {
    assert_eq!(infer_sort(&Context::empty(), &props(), &mtt()).unwrap(), Sort::Col);
}

#[test]
fn forall_over_a_collection_is_not_small() {
    let a = forall("x", props(), id(props(), var(0), var(0)));
    assert_eq!(infer_sort(&Context::empty(), &a, &mtt()).unwrap(), Sort::Prop);
}

#[test]
fn forall_over_a_set_with_small_body_is_small() {
    let a = forall("x", n1(), id(n1(), var(0), var(0)));
    assert_eq!(infer_sort(&Context::empty(), &a, &mtt()).unwrap(), Sort::PropS);
}

#[test]
fn variable_of_type_props_is_a_small_proposition() {
    let ctx = ctx1("P", props());
    assert_eq!(infer_sort(&ctx, &var(0), &mtt()).unwrap(), Sort::PropS);
}

#[test]
fn application_into_props_is_a_small_proposition() {
    let ctx = ctx1("f", fun_props(n1()));
    assert_eq!(infer_sort(&ctx, &ap(var(0), star()), &mtt()).unwrap(), Sort::PropS);
}

// ---- check_term ----

#[test]
fn star_inhabits_the_singleton() {
    check_term(&Context::empty(), &star(), &n1(), &mtt()).unwrap();
}

#[test]
fn dependent_pair_with_reflexivity() {
    let ty = sigma("x", n1(), id(n1(), var(0), var(0)));
    let t = pair(star(), refl(star()));
    check_term(&Context::empty(), &t, &ty, &mtt()).unwrap();
}

#[test]
fn left_injection_into_disjoint_sum() {
    check_term(&Context::empty(), &inl(star()), &plus(n1(), n0()), &mtt()).unwrap();
}

#[test]
fn ill_typed_term_rejected() {
    let err = check_term(&Context::empty(), &star(), &n0(), &mtt()).unwrap_err();
    assert!(matches!(err, KernelError::TypeMismatch { .. }), "{err}");
}

#[test]
fn lambda_into_small_propositions_infers_a_function_collection() {
    let t = lam("x", n1(), bot());
    let ty = infer_type(&Context::empty(), &t, &mtt()).unwrap();
    assert!(alpha_eq(&ty, &fun_props(n1())));
    check_term(&Context::empty(), &t, &fun_props(n1()), &mtt()).unwrap();
}

/// The proof-irrelevant encoding of sum disjointness: a small proposition
/// by cases on the sum, true on the left, false on the right.
fn disjointness_fibre(z: Expr) -> Expr {
    elplus(z, abs1("w", props()), abs1("x", tt()), abs1("y", bot()))
}

#[test]
fn case_split_toward_small_propositions_checks() {
    let ctx = ctx1("z", plus(n1(), n1()));
    check_term(&ctx, &disjointness_fibre(var(0)), &props(), &mtt()).unwrap();
    assert_eq!(
        infer_sort(&ctx, &disjointness_fibre(var(0)), &mtt()).unwrap(),
        Sort::PropS
    );
}

#[test]
fn sum_disjointness_is_inhabited() {
    let plus_ty = plus(n1(), n1());
    let id_ty = id(plus_ty.clone(), inl(star()), inr(star()));
    // transport the fibre along the identity proof, then apply to the
    // canonical truth witness
    let motive = abs2(
        "u",
        "v",
        imp(disjointness_fibre(var(1)), disjointness_fibre(var(0))),
    );
    let branch = abs1("x", implam("w", disjointness_fibre(var(0)), var(0)));
    let transport = elid(var(0), motive, branch);
    let proof = implam("p", id_ty.clone(), impap(transport, tt_proof()));
    check_term(&Context::empty(), &proof, &imp(id_ty, bot()), &mtt()).unwrap();
}

// ---- whnf ----

#[test]
fn beta_reduces_application() {
    let t = ap(lam("x", n1(), var(0)), star());
    assert!(alpha_eq(&whnf(&Context::empty(), &t, &mtt()).unwrap(), &star()));
}

#[test]
fn pair_eliminator_computes() {
    let t = elsigma(
        pair(star(), star()),
        abs1("z", n1()),
        abs2("x", "y", var(0)),
    );
    assert!(alpha_eq(&whnf(&Context::empty(), &t, &mtt()).unwrap(), &star()));
}

#[test]
fn list_eliminator_computes_through_both_rules() {
    // the step returns the inductive hypothesis, so the cons case chains
    // into the nil case and yields the base
    let ctx = ctx1("a", n1());
    let t = ellist(
        cons(nil(), star()),
        abs1("w", n1()),
        var(0),
        abs3("x", "y", "z", var(0)),
    );
    assert!(alpha_eq(&whnf(&ctx, &t, &mtt()).unwrap(), &var(0)));
}

#[test]
fn singleton_eliminator_has_no_computation_rule_by_default() {
    let t = eln1(star(), abs1("z", n1()), nil());
    assert!(alpha_eq(&whnf(&Context::empty(), &t, &mtt()).unwrap(), &t));
    let cfg = mtt().with_n1_computation(true);
    assert!(alpha_eq(&whnf(&Context::empty(), &t, &cfg).unwrap(), &nil()));
}

#[test]
fn fuel_exhaustion_is_an_error() {
    let t = ap(
        lam("x", n1(), var(0)),
        ap(lam("y", n1(), var(0)), star()),
    );
    let cfg = mtt().with_fuel(1);
    let err = whnf(&Context::empty(), &t, &cfg).unwrap_err();
    assert!(matches!(err, KernelError::FuelExhausted { .. }), "{err}");
}

// ---- conversion ----

#[test]
fn beta_convertibility_accepted() {
    let a = ap(lam("x", n1(), var(0)), star());
    conv_term(&Context::empty(), &a, &star(), &n1(), &mtt()).unwrap();
}

#[test]
fn reflexive_type_equality_in_context() {
    let ctx = ctx1("x", n1());
    let a = id(n1(), var(0), var(0));
    conv_type(&ctx, &a, &a.clone(), Sort::PropS, &mtt()).unwrap();
}

#[test]
fn types_computed_by_open_application_are_equal() {
    // full congruence is available at type positions: the codomain on the
    // right computes to Bot even though the redex mentions the bound x
    let a = pi("x", n1(), bot());
    let b = pi("x", n1(), ap(lam("y", n1(), bot()), var(0)));
    conv_type(&Context::empty(), &a, &b, Sort::Set, &mtt()).unwrap();
}

/// The theory has no xi-rule: the open bodies are convertible, but the
/// lambda abstractions are not.
#[test]
fn no_xi_rule_witness() {
    let cfg = mtt();
    let open_lhs = ap(lam("y", n1(), var(0)), var(0));
    let open_rhs = var(0);
    conv_term(&ctx1("x", n1()), &open_lhs, &open_rhs, &n1(), &cfg).unwrap();

    let lam_lhs = lam("x", n1(), ap(lam("y", n1(), var(0)), var(0)));
    let lam_rhs = lam("x", n1(), var(0));
    let ty = pi("x", n1(), n1());
    let err = conv_term(&Context::empty(), &lam_lhs, &lam_rhs, &ty, &cfg).unwrap_err();
    assert!(matches!(err, KernelError::NotConvertible { .. }), "{err}");

    // frozen verdicts of the declarative oracle (bounded rewrite search)
    assert!(oracle::derivably_equal(&open_lhs, &open_rhs, 6, false));
    assert!(!oracle::derivably_equal(&lam_lhs, &lam_rhs, 6, false));
}

#[test]
fn closed_redexes_reduce_under_binders() {
    // the redex does not touch the bound variable, so the substitution
    // rule alone equates the abstractions
    let a = lam("x", n1(), ap(lam("y", n1(), var(0)), star()));
    let b = lam("x", n1(), star());
    let ty = pi("x", n1(), n1());
    conv_term(&Context::empty(), &a, &b, &ty, &mtt()).unwrap();
    assert!(oracle::derivably_equal(&a, &b, 6, false));
}

#[test]
fn conversion_is_a_congruence_for_substitution() {
    // pair(w, w) with convertible components
    let ctx = ctx1("x", n1());
    let c1 = ap(lam("y", n1(), var(0)), var(0));
    let c2 = var(0);
    let ty = sigma("u", n1(), n1());
    conv_term(&ctx, &pair(c1.clone(), c1), &pair(c2.clone(), c2), &ty, &mtt()).unwrap();
}

#[test]
fn non_convertible_terms_rejected() {
    let err = conv_term(&Context::empty(), &inl(star()), &inr(star()), &plus(n1(), n1()), &mtt())
        .unwrap_err();
    assert!(matches!(err, KernelError::NotConvertible { .. }), "{err}");
}

// ---- contexts ----

#[test]
fn empty_context_accepted() {
    check_context(&Context::empty(), &mtt()).unwrap();
}

#[test]
fn telescopic_context_accepted() {
    let ctx = Context::empty()
        .extended("x", n1())
        .extended("y", id(n1(), var(0), star()));
    check_context(&ctx, &mtt()).unwrap();
}

#[test]
fn term_entry_rejected() {
    let ctx = ctx1("x", star());
    assert_eq!(
        check_context(&ctx, &mtt()).unwrap_err(),
        KernelError::Context(ContextError::EntryNotAType(0))
    );
}

// ---- subject reduction at desk scale ----

#[test]
fn subject_reduction_on_samples() {
    let cfg = mtt();
    let samples: Vec<(Context, Expr, Expr)> = vec![
        (
            Context::empty(),
            ap(lam("x", n1(), var(0)), star()),
            n1(),
        ),
        (
            Context::empty(),
            elsigma(
                annot(
                    pair(star(), refl(star())),
                    sigma("x", n1(), id(n1(), var(0), var(0))),
                ),
                abs1("z", n1()),
                abs2("x", "y", var(1)),
            ),
            n1(),
        ),
        (
            ctx1("a", n1()),
            ellist(
                annot(cons(nil(), var(0)), list(n1())),
                abs1("w", n1()),
                star(),
                abs3("x", "y", "z", var(1)),
            ),
            n1(),
        ),
        (
            Context::empty(),
            elplus(
                annot(inl(star()), plus(n1(), n1())),
                abs1("w", n1()),
                abs1("x", var(0)),
                abs1("y", var(0)),
            ),
            n1(),
        ),
        (
            Context::empty(),
            proj1(andpair(tt_proof(), tt_proof())),
            tt(),
        ),
        (
            Context::empty(),
            elid(refl(star()), abs2("u", "v", id(n1(), var(1), var(0))), abs1("x", refl(var(0)))),
            id(n1(), star(), star()),
        ),
    ];
    for (ctx, t, ty) in samples {
        check_term(&ctx, &t, &ty, &cfg).unwrap_or_else(|e| panic!("{t} : {ty}: {e}"));
        let r = whnf(&ctx, &t, &cfg).unwrap();
        check_term(&ctx, &r, &ty, &cfg).unwrap_or_else(|e| panic!("reduct {r} : {ty}: {e}"));
        conv_term(&ctx, &t, &r, &ty, &cfg).unwrap();
    }
}

// ---- the oracle itself ----

#[test]
fn oracle_joins_computation_chains() {
    let t = ellist(
        cons(cons(nil(), star()), star()),
        abs1("w", n1()),
        star(),
        abs3("x", "y", "z", var(0)),
    );
    assert!(oracle::derivably_equal(&t, &star(), 6, false));
}

#[test]
fn oracle_rejects_distinct_normal_forms() {
    assert!(!oracle::derivably_equal(&inl(star()), &inr(star()), 6, false));
}
