//! Deterministic proof-term templates over propositional identity.
//!
//! Every function here builds a concrete term; nothing searches. The
//! templates are the building blocks used by the model constructions to
//! discharge their law obligations: transport of a propositional family
//! along an identity proof, symmetry/transitivity/congruence of identity,
//! and the projections out of dependent pairs.
//!
//! Conventions: expressions passed in live in the caller's ambient context;
//! type arguments (`ty`, `dom`, ...) are the relevant *types in that same
//! context*. Families are 1-ary [`Abs`] values over the same context.

use syntax_core::build::*;
use syntax_core::{Abs, Expr};

/// Transport a proof of `fam(lhs)` to `fam(rhs)` along `d : Id(ty, lhs, rhs)`.
///
/// The family must be propositional; the template eliminates `d` with the
/// motive `x y |- fam(x) -> fam(y)` whose diagonal is the identity function.
pub fn transport(fam: &Abs, d: Expr, pf: Expr) -> Expr {
    let motive = Abs::new(
        vec!["x".into(), "y".into()],
        imp(
            fam.weakened(2).apply1(&var(1)),
            fam.weakened(2).apply1(&var(0)),
        ),
    );
    let branch = abs1("w", implam("h", fam.weakened(1).apply1(&var(0)), var(0)));
    impap(elid(d, motive, branch), pf)
}

/// From `d : Id(ty, a, b)` build a proof of `Id(ty, b, a)`.
pub fn sym_id(ty: &Expr, d: Expr) -> Expr {
    let motive = Abs::new(
        vec!["x".into(), "y".into()],
        id(ty.shifted(2), var(0), var(1)),
    );
    elid(d, motive, abs1("w", refl(var(0))))
}

/// From `d1 : Id(ty, a, b)` and `d2 : Id(ty, b, c)` build `Id(ty, a, c)`.
/// The first endpoint `a` must be supplied explicitly.
pub fn tra_id(ty: &Expr, a: &Expr, d1: Expr, d2: Expr) -> Expr {
    let fam = abs1("w", id(ty.shifted(1), a.shifted(1), var(0)));
    transport(&fam, d2, d1)
}

/// Congruence: from `d : Id(ty, a, b)` build `Id(cod, fa, f(b))` for a
/// 1-ary term `f` from `ty` to `cod`, where `fa` is any term convertible to
/// `f(a)`. Passing the reduced value keeps the seed `refl(fa)` checkable
/// even when `f` is an eliminator that would get stuck on a canonical
/// argument.
pub fn cong_id(cod: &Expr, f: &Abs, fa: &Expr, d: Expr) -> Expr {
    let fam = abs1(
        "w",
        id(cod.shifted(1), fa.shifted(1), f.weakened(1).apply1(&var(0))),
    );
    transport(&fam, d, refl(fa.clone()))
}

/// Whether a term already synthesises its type, so it can head an
/// eliminator without an ascription. Conservative: `false` means "wrap to
/// be safe", not "ill-typed".
fn inferable(e: &Expr) -> bool {
    use Expr::*;
    match e {
        // A variable synthesises, but an ascription on one is still kept:
        // accessors build *open* law bodies, and a slot filled later with a
        // canonical form must stay guarded.
        Var(_) => false,
        // An application headed by a literal lambda is the ascription idiom
        // itself; the kernel synthesises the lambda's type directly.
        Ap { fun, .. } if matches!(&**fun, Lam { .. }) => true,
        Ap { fun, .. } | ImpAp { fun, .. } | FaAp { fun, .. } => inferable(fun),
        Proj1(inner) | Proj2(inner) | Refl(inner) => inferable(inner),
        ElN0 { scrut, .. }
        | ElN1 { scrut, .. }
        | ElSigma { scrut, .. }
        | ElList { scrut, .. }
        | ElPlus { scrut, .. }
        | ElBot { scrut, .. }
        | ElOr { scrut, .. }
        | ElExists { scrut, .. }
        | ElId { scrut, .. }
        | ElQ { scrut, .. } => inferable(scrut),
        _ => false,
    }
}

/// Whether a type is, syntactically, a set or a small proposition. Only
/// such types may appear as lambda domains without the dependent-product
/// extension, so ascriptions are restricted to them. Conservative: unknown
/// shapes (neutral types, collections) yield `false`.
fn small_type(ty: &Expr) -> bool {
    use Expr::*;
    match ty {
        N0 | N1 | Bot => true,
        List(elem) => small_type(elem),
        Plus { left, right } | Or { left, right } | And { left, right } | Imp { left, right } => {
            small_type(left) && small_type(right)
        }
        Sigma { dom, cod }
        | Pi { dom, cod }
        | Exists { dom, cod }
        | Forall { dom, cod } => small_type(dom) && small_type(&cod.body),
        Id { ty, .. } => small_type(ty),
        _ => false,
    }
}

thread_local! {
    static COL_ASCRIPTIONS: std::cell::Cell<bool> = const { std::cell::Cell::new(false) };
}

/// While the returned guard is alive, [`annot`] also wraps terms whose type
/// is a collection. The identity lambda this produces is only well formed
/// in the theory with dependent product collections, so constructions check
/// the configured theory before enabling it.
pub fn allow_col_ascriptions() -> ColAscriptionGuard {
    ColAscriptionGuard(COL_ASCRIPTIONS.with(|c| c.replace(true)))
}

pub struct ColAscriptionGuard(bool);

impl Drop for ColAscriptionGuard {
    fn drop(&mut self) {
        let prev = self.0;
        COL_ASCRIPTIONS.with(|c| c.set(prev));
    }
}

/// Type ascription via an immediately applied identity function; it turns a
/// checkable term into an inferable one so it can head an eliminator. Terms
/// that already synthesise are returned untouched, and ascriptions at
/// collection types are skipped (the identity lambda would need the
/// dependent-product extension there) unless a guard from
/// [`allow_col_ascriptions`] is active.
pub fn annot(t: Expr, ty: Expr) -> Expr {
    if inferable(&t) {
        return t;
    }
    if !small_type(&ty) && !COL_ASCRIPTIONS.with(|c| c.get()) {
        return t;
    }
    ap(lam("a", ty, var(0)), t)
}

/// First projection out of `Sigma_{x in dom} _`.
pub fn fst(dom: &Expr, scrut: Expr) -> Expr {
    elsigma(
        scrut,
        abs1("z", dom.shifted(1)),
        abs2("a", "b", var(1)),
    )
}

/// Second projection out of a non-dependent `Sigma`; `cod` must not use the
/// bound variable.
pub fn snd(cod: &Expr, scrut: Expr) -> Expr {
    elsigma(
        scrut,
        abs1("z", cod.shifted(1)),
        abs2("a", "b", var(0)),
    )
}

/// Second projection out of a dependent `Sigma_{x in dom} cod(x)`; the
/// motive substitutes the first projection into the family.
pub fn snd_dep(dom: &Expr, cod: &Abs, scrut: Expr) -> Expr {
    let motive = abs1(
        "z",
        cod.weakened(1).apply1(&fst(&dom.shifted(1), var(0))),
    );
    elsigma(scrut, motive, abs2("a", "b", var(0)))
}

/// A small proposition that holds exactly on the empty list: `tt` at `nil`,
/// absurdity at any cons. Used to refute identifications of `nil` with a
/// composite list.
pub fn is_nil_fam() -> Abs {
    abs1(
        "v",
        ellist(
            var(0),
            abs1("w", props()),
            tt(),
            abs3("x", "y", "w", bot()),
        ),
    )
}

/// Initial segment of a list (identity on `nil`).
pub fn tail_fam(elem: &Expr) -> Abs {
    abs1(
        "v",
        ellist(
            var(0),
            abs1("w", list(elem.shifted(2))),
            nil(),
            abs3("x", "y", "w", var(2)),
        ),
    )
}

/// Last element of a list, with an explicit default for `nil`.
pub fn head_fam(elem: &Expr, default: &Expr) -> Abs {
    abs1(
        "v",
        ellist(
            var(0),
            abs1("w", elem.shifted(2)),
            default.shifted(1),
            abs3("x", "y", "w", var(1)),
        ),
    )
}

/// Open a two-layer existential pack `exists x. exists x'. P(x, x')`
/// against a propositional `target` (expressed in the ambient context).
/// The continuation receives the two witnesses and the inner proof as
/// variables of the extended context (ambient indices shift by 4).
pub fn open_pack2(pack: Expr, target: &Expr, body: Expr) -> Expr {
    elexists(
        pack,
        target.clone(),
        abs2(
            "x",
            "r",
            elexists(var(0), target.shifted(2), abs2("x'", "p", body)),
        ),
    )
}
