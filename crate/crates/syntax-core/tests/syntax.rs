use syntax_core::build::*;
use syntax_core::ctx::ContextError;
use syntax_core::expr::alpha_eq;
use syntax_core::{Context, Expr};

// ---- substitution ----

#[test]
fn subst_direct_replacement() {
    // ap(f, x) with f = Var(1), x = Var(0); substituting x by star
    // unshifts f to Var(0).
    let e = ap(var(1), var(0));
    assert_eq!(e.subst(0, &star()), ap(var(0), star()));
}

#[test]
fn subst_shadowing_leaves_body_intact() {
    // lam(x:N1. x) does not mention the free variable at all.
    let e = lam("x", n1(), var(0));
    assert_eq!(e.subst(0, &star()), lam("x", n1(), var(0)));
}

#[test]
fn subst_under_binder() {
    // Sigma(y:B. Id(B, y, x)) with free vars x = 0, B = 1.
    let e = sigma("y", var(1), id(var(2), var(0), var(1)));
    let got = e.subst(0, &star());
    // x replaced by star; B unshifts to 0 outside, 1 under the binder.
    assert_eq!(got, sigma("y", var(0), id(var(1), var(0), star())));
}

#[test]
fn subst_avoids_capture() {
    // Substituting a term that mentions a free variable under a binder
    // must shift it past the binder.
    let e = lam("y", n1(), ap(var(2), var(0))); // free f = 1 inside, i.e. 0 outside... e mentions free 1
    let v = var(0); // some other free variable
    let got = e.subst(1, &v);
    // inside the binder the substituted occurrence must be Var(1), not Var(0)
    assert_eq!(got, lam("y", n1(), ap(var(1), var(0))));
}

#[test]
fn subst_composition_law() {
    // subst(subst(e,x,u),y,v) == subst(subst(e,y,v),x,u) for closed u, v
    // (x = Var 0, y = Var 1).
    let es = [
        ap(var(0), var(1)),
        sigma("z", n1(), id(n1(), var(1), var(2))),
        pair(var(0), lam("w", n1(), ap(var(1), var(2)))),
        ellist(var(0), abs1("l", n1()), var(1), abs3("a", "b", "c", var(3))),
    ];
    let u = star();
    let v = lam("t", n1(), var(0));
    for e in es {
        let lhs = e.subst(0, &u).subst(0, &v);
        let rhs = e.subst(1, &v).subst(0, &u);
        assert!(alpha_eq(&lhs, &rhs), "composition failed on {e}");
    }
}

// ---- alpha equivalence ----

#[test]
fn alpha_eq_renames_binders() {
    assert!(alpha_eq(&lam("x", n1(), var(0)), &lam("y", n1(), var(0))));
}

#[test]
fn alpha_eq_distinguishes_bodies() {
    assert!(!alpha_eq(&lam("x", n1(), var(0)), &lam("x", n1(), star())));
}

#[test]
fn alpha_eq_pi_bodies() {
    let a = pi("x", var(0), id(var(1), var(0), var(0)));
    let b = pi("z", var(0), id(var(1), var(0), var(0)));
    assert!(alpha_eq(&a, &b));
}

#[test]
fn alpha_eq_is_congruence() {
    let a = lam("x", n1(), var(0));
    let b = lam("y", n1(), var(0));
    assert!(alpha_eq(&ap(a.clone(), star()), &ap(b.clone(), star())));
    assert!(alpha_eq(&pair(a.clone(), a.clone()), &pair(b.clone(), b)));
}

// ---- binder helpers ----

#[test]
fn instantiate_multi_binder() {
    // (x y z . cons(x, y) at z's type) applied in binding order.
    let step = abs3("x", "y", "z", pair(var(2), pair(var(1), var(0))));
    let got = step.instantiate(&[nil(), star(), var(0)]);
    assert_eq!(got, pair(nil(), pair(star(), var(0))));
}

#[test]
fn strip_unused_binder() {
    let a = abs1("x", star());
    assert_eq!(a.strip_unused(), Some(star()));
    let b = abs1("x", var(0));
    assert_eq!(b.strip_unused(), None);
    let c = abs1("x", var(1));
    assert_eq!(c.strip_unused(), Some(var(0)));
}

// ---- contexts ----

fn naive_checker(_: &Context, ty: &Expr) -> bool {
    // Structural stand-in for the kernel: accepts the closed base types
    // and Id over them.
    match ty {
        Expr::N0 | Expr::N1 | Expr::Bot | Expr::PropS => true,
        Expr::Id { .. } => true,
        _ => false,
    }
}

#[test]
fn empty_context_accepted() {
    assert_eq!(Context::empty().check(&naive_checker), Ok(()));
}

#[test]
fn telescopic_context_accepted() {
    let ctx = Context::empty()
        .extended("x", n1())
        .extended("y", id(n1(), var(0), star()));
    assert_eq!(ctx.check(&naive_checker), Ok(()));
}

#[test]
fn term_entry_rejected() {
    let ctx = Context::empty().extended("x", star());
    assert_eq!(ctx.check(&naive_checker), Err(ContextError::EntryNotAType(0)));
}

#[test]
fn context_check_monotone_under_prefix() {
    let ctx = Context::empty()
        .extended("x", n1())
        .extended("y", id(n1(), var(0), star()));
    assert!(ctx.check(&naive_checker).is_ok());
    for k in 0..=ctx.len() {
        assert!(ctx.prefix(k).check(&naive_checker).is_ok());
    }
}

#[test]
fn lookup_shifts_types() {
    let ctx = Context::empty()
        .extended("x", n1())
        .extended("p", id(n1(), var(0), star()));
    // Var(0) is p; its type mentions x as Var(0) in its own scope,
    // which is Var(1) in the full context.
    assert_eq!(ctx.lookup(0), Some(id(n1(), var(1), star())));
    assert_eq!(ctx.lookup(1), Some(n1()));
    assert_eq!(ctx.lookup(2), None);
}

#[test]
fn ill_scoped_context_rejected() {
    let ctx = Context::empty().extended("x", id(n1(), var(3), star()));
    assert_eq!(ctx.check(&naive_checker), Err(ContextError::IllScoped(0)));
}
