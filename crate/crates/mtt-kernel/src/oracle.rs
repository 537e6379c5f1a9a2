//! A brute-force reference oracle for definitional equality, used for
//! differential testing of the conversion algorithm.
//!
//! In the declarative presentation, term equality is generated by
//! reflexivity, symmetry, transitivity, the computation axioms, and the
//! explicit substitution rule — there is no xi-rule. Substituting a
//! computation-equal pair into a term template rewrites a subterm that
//! mentions no locally bound variables (a context variable cannot refer to
//! a binder inside the template). The oracle therefore enumerates exactly
//! those rewrites, breadth-first from both sides, and accepts when the two
//! reachability sets meet. Acceptance implies derivability; the bound makes
//! the search total.

use crate::checker;
use syntax_core::{alpha_eq, Expr};

/// All terms reachable from `t` by contracting one redex at a position
/// where the redex mentions none of the locally bound variables.
pub fn sub_fragment_steps(t: &Expr, n1_computation: bool) -> Vec<Expr> {
    let mut out = Vec::new();
    steps_at(t, 0, n1_computation, &mut |rewritten| out.push(rewritten));
    out
}

fn steps_at(t: &Expr, local: usize, n1: bool, emit: &mut dyn FnMut(Expr)) {
    // Contract here if legal.
    if !mentions_below(t, local) {
        if let Some(next) = checker::contract(t, n1) {
            emit(next);
        }
    }
    // Recurse into each child, rebuilding the surrounding term.
    let mut index = 0usize;
    // First pass: count children by probing with an identity map.
    loop {
        let mut seen = 0usize;
        let mut rewritten: Vec<(Expr, usize)> = Vec::new();
        let probe: Result<Expr, ()> = t.try_map_children(&mut |child, binders| {
            if seen == index {
                // Collect this child's one-step rewrites.
                steps_at(child, local + binders, n1, &mut |r| {
                    rewritten.push((r, binders));
                });
            }
            seen += 1;
            Ok(child.clone())
        });
        let total = seen;
        let _ = probe;
        for (r, _) in rewritten {
            // Rebuild the node with the `index`-th child replaced.
            let mut k = 0usize;
            let built: Result<Expr, ()> = t.try_map_children(&mut |child, _| {
                let e = if k == index { r.clone() } else { child.clone() };
                k += 1;
                Ok(e)
            });
            if let Ok(b) = built {
                emit(b);
            }
        }
        index += 1;
        if index >= total {
            break;
        }
    }
}

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

/// Bounded joinability: are `a` and `b` connected by at most `depth`
/// legal rewrite steps in total (searching from both sides)?
pub fn derivably_equal(a: &Expr, b: &Expr, depth: usize, n1_computation: bool) -> bool {
    let half = depth.div_ceil(2);
    let ra = reachable(a, half, n1_computation);
    let rb = reachable(b, depth - half, n1_computation);
    ra.iter().any(|x| rb.iter().any(|y| alpha_eq(x, y)))
}

fn reachable(start: &Expr, depth: usize, n1: bool) -> Vec<Expr> {
    let mut seen = vec![start.clone()];
    let mut frontier = vec![start.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for t in &frontier {
            for r in sub_fragment_steps(t, n1) {
                if !seen.iter().any(|s| alpha_eq(s, &r)) {
                    seen.push(r.clone());
                    next.push(r);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}
