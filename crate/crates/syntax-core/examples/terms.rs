//! Building, printing and substituting raw terms.

use syntax_core::build::*;
use syntax_core::{Context, Expr};

fn main() {
    // The successor-free "double star" pair in Sigma_{x in N1} N1.
    let p = pair(star(), star());
    let ty = sigma("x", n1(), n1());
    println!("term: {p}");
    println!("type: {ty}");

    // A lambda and a beta redex over it.
    let swap = lam("z", sigma("x", n1(), n1()), pair(var(0), var(0)));
    let redex = ap(swap.clone(), p.clone());
    println!("redex: {redex}");

    // Instantiating the lambda body performs capture-avoiding substitution.
    let Expr::Lam { body, .. } = &swap else {
        unreachable!()
    };
    println!("body {} instantiated at {p}: {}", body.body, body.apply1(&p));

    // Contexts give names to free variables for display only; indices are
    // what the library compares.
    let ctx = Context::empty()
        .extended("a", n1())
        .extended("b", sigma("x", n1(), n1()));
    println!(
        "context [{}] has {} entries; variable 1 has type {}",
        ctx.entries()
            .iter()
            .map(|(n, t)| format!("{n} in {t}"))
            .collect::<Vec<_>>()
            .join(", "),
        ctx.len(),
        ctx.lookup(1).unwrap(),
    );
}
