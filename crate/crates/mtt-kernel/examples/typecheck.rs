//! Checking terms with the intensional kernel, including the absence of
//! the xi-rule.

use mtt_kernel::{check_term, check_type, conv_term, whnf, KernelConfig};
use syntax_core::build::*;
use syntax_core::{Context, Sort};

fn main() {
    let cfg = KernelConfig::mtt();
    let ctx = Context::empty();

    // A dependent pair and its type.
    let ty = sigma("x", n1(), n1());
    let report = check_type(&ctx, &ty, Sort::Set, &cfg).unwrap();
    println!("{ty} is a {}", report.sort);
    check_term(&ctx, &pair(star(), star()), &ty, &cfg).unwrap();
    println!("<*, *> checks in {ty}");

    // Computation: the first projection of the pair reduces to star.
    let first = elsigma(pair(star(), star()), abs1("z", n1()), abs2("x", "y", var(1)));
    println!("whnf of El_Sigma(<*, *>, x.y.x) = {}", whnf(&ctx, &first, &cfg).unwrap());

    // Under a lambda nothing computes pointwise: the equality
    //   lambda x. Ap(lambda y. y, x) = lambda x. x
    // is *not* definitional here, because term equality has no xi-rule.
    let fn_ty = pi("x", n1(), n1());
    let eta_like = lam("x", n1(), ap(lam("y", n1(), var(0)), var(0)));
    let identity = lam("x", n1(), var(0));
    match conv_term(&ctx, &eta_like, &identity, &fn_ty, &cfg) {
        Ok(()) => println!("unexpectedly convertible"),
        Err(e) => println!("rejected, as the theory demands: {e}"),
    }

    // Applied to an argument, both sides do compute to the same value.
    conv_term(&ctx, &ap(eta_like, star()), &ap(identity, star()), &n1(), &cfg).unwrap();
    println!("their applications at * are convertible");
}
