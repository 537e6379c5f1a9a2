//! Ergonomic constructors. The model and translator assemble large terms;
//! these keep that code close to the written notation.

use crate::expr::{Abs, Expr};

pub fn abs1(h: impl Into<String>, body: Expr) -> Abs {
    Abs::new(vec![h.into()], body)
}

pub fn abs2(h1: impl Into<String>, h2: impl Into<String>, body: Expr) -> Abs {
    Abs::new(vec![h1.into(), h2.into()], body)
}

pub fn abs3(
    h1: impl Into<String>,
    h2: impl Into<String>,
    h3: impl Into<String>,
    body: Expr,
) -> Abs {
    Abs::new(vec![h1.into(), h2.into(), h3.into()], body)
}

pub fn var(i: usize) -> Expr {
    Expr::Var(i)
}

pub fn n0() -> Expr {
    Expr::N0
}

pub fn eln0(scrut: Expr, motive: Abs) -> Expr {
    Expr::ElN0 {
        scrut: Box::new(scrut),
        motive,
    }
}

pub fn n1() -> Expr {
    Expr::N1
}

pub fn star() -> Expr {
    Expr::Star
}

pub fn eln1(scrut: Expr, motive: Abs, branch: Expr) -> Expr {
    Expr::ElN1 {
        scrut: Box::new(scrut),
        motive,
        branch: Box::new(branch),
    }
}

pub fn sigma(h: impl Into<String>, dom: Expr, cod: Expr) -> Expr {
    Expr::Sigma {
        dom: Box::new(dom),
        cod: abs1(h, cod),
    }
}

pub fn pair(fst: Expr, snd: Expr) -> Expr {
    Expr::Pair {
        fst: Box::new(fst),
        snd: Box::new(snd),
    }
}

pub fn elsigma(scrut: Expr, motive: Abs, branch: Abs) -> Expr {
    Expr::ElSigma {
        scrut: Box::new(scrut),
        motive,
        branch,
    }
}

pub fn list(c: Expr) -> Expr {
    Expr::List(Box::new(c))
}

pub fn nil() -> Expr {
    Expr::Nil
}

pub fn cons(init: Expr, last: Expr) -> Expr {
    Expr::Cons {
        init: Box::new(init),
        last: Box::new(last),
    }
}

pub fn ellist(scrut: Expr, motive: Abs, base: Expr, step: Abs) -> Expr {
    Expr::ElList {
        scrut: Box::new(scrut),
        motive,
        base: Box::new(base),
        step,
    }
}

pub fn plus(left: Expr, right: Expr) -> Expr {
    Expr::Plus {
        left: Box::new(left),
        right: Box::new(right),
    }
}

pub fn inl(b: Expr) -> Expr {
    Expr::Inl(Box::new(b))
}

pub fn inr(c: Expr) -> Expr {
    Expr::Inr(Box::new(c))
}

pub fn elplus(scrut: Expr, motive: Abs, left: Abs, right: Abs) -> Expr {
    Expr::ElPlus {
        scrut: Box::new(scrut),
        motive,
        left,
        right,
    }
}

pub fn pi(h: impl Into<String>, dom: Expr, cod: Expr) -> Expr {
    Expr::Pi {
        dom: Box::new(dom),
        cod: abs1(h, cod),
    }
}

pub fn lam(h: impl Into<String>, dom: Expr, body: Expr) -> Expr {
    Expr::Lam {
        dom: Box::new(dom),
        body: abs1(h, body),
    }
}

pub fn ap(fun: Expr, arg: Expr) -> Expr {
    Expr::Ap {
        fun: Box::new(fun),
        arg: Box::new(arg),
    }
}

pub fn bot() -> Expr {
    Expr::Bot
}

pub fn elbot(scrut: Expr, target: Expr) -> Expr {
    Expr::ElBot {
        scrut: Box::new(scrut),
        target: Box::new(target),
    }
}

pub fn or(left: Expr, right: Expr) -> Expr {
    Expr::Or {
        left: Box::new(left),
        right: Box::new(right),
    }
}

pub fn orinl(b: Expr) -> Expr {
    Expr::OrInl(Box::new(b))
}

pub fn orinr(c: Expr) -> Expr {
    Expr::OrInr(Box::new(c))
}

pub fn elor(scrut: Expr, target: Expr, left: Abs, right: Abs) -> Expr {
    Expr::ElOr {
        scrut: Box::new(scrut),
        target: Box::new(target),
        left,
        right,
    }
}

pub fn and(left: Expr, right: Expr) -> Expr {
    Expr::And {
        left: Box::new(left),
        right: Box::new(right),
    }
}

pub fn andpair(fst: Expr, snd: Expr) -> Expr {
    Expr::AndPair {
        fst: Box::new(fst),
        snd: Box::new(snd),
    }
}

pub fn proj1(d: Expr) -> Expr {
    Expr::Proj1(Box::new(d))
}

pub fn proj2(d: Expr) -> Expr {
    Expr::Proj2(Box::new(d))
}

pub fn imp(left: Expr, right: Expr) -> Expr {
    Expr::Imp {
        left: Box::new(left),
        right: Box::new(right),
    }
}

pub fn implam(h: impl Into<String>, dom: Expr, body: Expr) -> Expr {
    Expr::ImpLam {
        dom: Box::new(dom),
        body: abs1(h, body),
    }
}

pub fn impap(fun: Expr, arg: Expr) -> Expr {
    Expr::ImpAp {
        fun: Box::new(fun),
        arg: Box::new(arg),
    }
}

pub fn exists(h: impl Into<String>, dom: Expr, cod: Expr) -> Expr {
    Expr::Exists {
        dom: Box::new(dom),
        cod: abs1(h, cod),
    }
}

pub fn expair(fst: Expr, snd: Expr) -> Expr {
    Expr::ExPair {
        fst: Box::new(fst),
        snd: Box::new(snd),
    }
}

pub fn elexists(scrut: Expr, target: Expr, branch: Abs) -> Expr {
    Expr::ElExists {
        scrut: Box::new(scrut),
        target: Box::new(target),
        branch,
    }
}

pub fn forall(h: impl Into<String>, dom: Expr, cod: Expr) -> Expr {
    Expr::Forall {
        dom: Box::new(dom),
        cod: abs1(h, cod),
    }
}

pub fn falam(h: impl Into<String>, dom: Expr, body: Expr) -> Expr {
    Expr::FaLam {
        dom: Box::new(dom),
        body: abs1(h, body),
    }
}

pub fn faap(fun: Expr, arg: Expr) -> Expr {
    Expr::FaAp {
        fun: Box::new(fun),
        arg: Box::new(arg),
    }
}

pub fn id(ty: Expr, lhs: Expr, rhs: Expr) -> Expr {
    Expr::Id {
        ty: Box::new(ty),
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
    }
}

pub fn refl(a: Expr) -> Expr {
    Expr::Refl(Box::new(a))
}

pub fn elid(scrut: Expr, motive: Abs, branch: Abs) -> Expr {
    Expr::ElId {
        scrut: Box::new(scrut),
        motive,
        branch,
    }
}

pub fn props() -> Expr {
    Expr::PropS
}

pub fn fun_props(dom: Expr) -> Expr {
    Expr::FunPropS(Box::new(dom))
}

pub fn eq(ty: Expr, lhs: Expr, rhs: Expr) -> Expr {
    Expr::Eq {
        ty: Box::new(ty),
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
    }
}

pub fn true_tm() -> Expr {
    Expr::TrueTm
}

pub fn quot(set: Expr, rel: Abs) -> Expr {
    Expr::Quot {
        set: Box::new(set),
        rel,
    }
}

pub fn qclass(a: Expr) -> Expr {
    Expr::QClass(Box::new(a))
}

pub fn elq(scrut: Expr, motive: Abs, branch: Abs) -> Expr {
    Expr::ElQ {
        scrut: Box::new(scrut),
        motive,
        branch,
    }
}

pub fn pow1() -> Expr {
    Expr::Pow1
}

pub fn pcl(b: Expr) -> Expr {
    Expr::Pcl(Box::new(b))
}

pub fn fun_pow1(dom: Expr) -> Expr {
    Expr::FunPow1(Box::new(dom))
}

/// The truth constant `tt ::= Bot -> Bot`.
pub fn tt() -> Expr {
    imp(bot(), bot())
}

/// The canonical inhabitant of `tt`.
pub fn tt_proof() -> Expr {
    implam("w", bot(), var(0))
}

/// Iterated conjunction `a /\ b` made right-nested from a list.
pub fn ands(mut parts: Vec<Expr>) -> Expr {
    let last = parts.pop().expect("ands of nothing");
    parts.into_iter().rev().fold(last, |acc, p| and(p, acc))
}
