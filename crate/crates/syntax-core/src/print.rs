//! Human-readable printing, used in error messages and diagnostics.
//! The machine-readable S-expression format lives in the front-end crate.

use crate::expr::{Abs, Expr};
use std::fmt::{self, Write};

fn fresh(env: &[String], hint: &str) -> String {
    let base = if hint.is_empty() { "x" } else { hint };
    if !env.iter().any(|n| n == base) {
        return base.to_string();
    }
    let mut i = 1;
    loop {
        let cand = format!("{base}{i}");
        if !env.iter().any(|n| n == &cand) {
            return cand;
        }
        i += 1;
    }
}

fn fmt_abs(
    head: &str,
    parts: &[&Expr],
    abs: &[&Abs],
    env: &mut Vec<String>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    write!(f, "{head}(")?;
    let mut first = true;
    for p in parts {
        if !first {
            f.write_str(", ")?;
        }
        first = false;
        fmt_expr(p, env, f)?;
    }
    for a in abs {
        if !first {
            f.write_str("; ")?;
        }
        first = false;
        let names: Vec<String> = a.hints.iter().map(|h| fresh(env, h)).collect();
        for (i, n) in names.iter().enumerate() {
            if i > 0 {
                f.write_char(' ')?;
            }
            f.write_str(n)?;
        }
        f.write_str(". ")?;
        for n in &names {
            env.push(n.clone());
        }
        fmt_expr(&a.body, env, f)?;
        for _ in &names {
            env.pop();
        }
    }
    f.write_char(')')
}

pub fn fmt_expr(e: &Expr, env: &mut Vec<String>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    use Expr::*;
    match e {
        Var(i) => {
            if *i < env.len() {
                f.write_str(&env[env.len() - 1 - i])
            } else {
                write!(f, "#{}", i - env.len())
            }
        }
        N0 => f.write_str("N0"),
        N1 => f.write_str("N1"),
        Star => f.write_str("star"),
        Nil => f.write_str("nil"),
        Bot => f.write_str("Bot"),
        PropS => f.write_str("PropS"),
        Pow1 => f.write_str("Pow1"),
        TrueTm => f.write_str("true"),
        ElN0 { scrut, motive } => fmt_abs("ElN0", &[scrut], &[motive], env, f),
        ElN1 {
            scrut,
            motive,
            branch,
        } => fmt_abs("ElN1", &[scrut, branch], &[motive], env, f),
        Sigma { dom, cod } => fmt_abs("Sigma", &[dom], &[cod], env, f),
        Pair { fst, snd } => fmt_abs("pair", &[fst, snd], &[], env, f),
        ElSigma {
            scrut,
            motive,
            branch,
        } => fmt_abs("ElSigma", &[scrut], &[motive, branch], env, f),
        List(c) => fmt_abs("List", &[c], &[], env, f),
        Cons { init, last } => fmt_abs("cons", &[init, last], &[], env, f),
        ElList {
            scrut,
            motive,
            base,
            step,
        } => fmt_abs("ElList", &[scrut, base], &[motive, step], env, f),
        Plus { left, right } => fmt_abs("Plus", &[left, right], &[], env, f),
        Inl(b) => fmt_abs("inl", &[b], &[], env, f),
        Inr(c) => fmt_abs("inr", &[c], &[], env, f),
        ElPlus {
            scrut,
            motive,
            left,
            right,
        } => fmt_abs("ElPlus", &[scrut], &[motive, left, right], env, f),
        Pi { dom, cod } => fmt_abs("Pi", &[dom], &[cod], env, f),
        Lam { dom, body } => fmt_abs("lam", &[dom], &[body], env, f),
        Ap { fun, arg } => fmt_abs("ap", &[fun, arg], &[], env, f),
        ElBot { scrut, target } => fmt_abs("ElBot", &[scrut, target], &[], env, f),
        Or { left, right } => fmt_abs("Or", &[left, right], &[], env, f),
        OrInl(b) => fmt_abs("orinl", &[b], &[], env, f),
        OrInr(c) => fmt_abs("orinr", &[c], &[], env, f),
        ElOr {
            scrut,
            target,
            left,
            right,
        } => fmt_abs("ElOr", &[scrut, target], &[left, right], env, f),
        And { left, right } => fmt_abs("And", &[left, right], &[], env, f),
        AndPair { fst, snd } => fmt_abs("andpair", &[fst, snd], &[], env, f),
        Proj1(d) => fmt_abs("proj1", &[d], &[], env, f),
        Proj2(d) => fmt_abs("proj2", &[d], &[], env, f),
        Imp { left, right } => fmt_abs("Imp", &[left, right], &[], env, f),
        ImpLam { dom, body } => fmt_abs("implam", &[dom], &[body], env, f),
        ImpAp { fun, arg } => fmt_abs("impap", &[fun, arg], &[], env, f),
        Exists { dom, cod } => fmt_abs("Exists", &[dom], &[cod], env, f),
        ExPair { fst, snd } => fmt_abs("expair", &[fst, snd], &[], env, f),
        ElExists {
            scrut,
            target,
            branch,
        } => fmt_abs("ElExists", &[scrut, target], &[branch], env, f),
        Forall { dom, cod } => fmt_abs("Forall", &[dom], &[cod], env, f),
        FaLam { dom, body } => fmt_abs("falam", &[dom], &[body], env, f),
        FaAp { fun, arg } => fmt_abs("faap", &[fun, arg], &[], env, f),
        Id { ty, lhs, rhs } => fmt_abs("Id", &[ty, lhs, rhs], &[], env, f),
        Refl(a) => fmt_abs("refl", &[a], &[], env, f),
        ElId {
            scrut,
            motive,
            branch,
        } => fmt_abs("ElId", &[scrut], &[motive, branch], env, f),
        FunPropS(b) => fmt_abs("FunPropS", &[b], &[], env, f),
        Eq { ty, lhs, rhs } => fmt_abs("Eq", &[ty, lhs, rhs], &[], env, f),
        Quot { set, rel } => fmt_abs("Quot", &[set], &[rel], env, f),
        QClass(a) => fmt_abs("qclass", &[a], &[], env, f),
        ElQ {
            scrut,
            motive,
            branch,
        } => fmt_abs("ElQ", &[scrut], &[motive, branch], env, f),
        Pcl(b) => fmt_abs("pcl", &[b], &[], env, f),
        FunPow1(b) => fmt_abs("FunPow1", &[b], &[], env, f),
    }
}
