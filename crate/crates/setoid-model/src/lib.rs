//! The setoid (quotient) model of the extensional level inside the
//! intensional one.
//!
//! Extensional collections are interpreted as intensional collections
//! equipped with an equivalence relation whose reflexivity, symmetry and
//! transitivity are witnessed by explicit proof terms; morphisms carry a
//! preservation witness. Every construction in this crate *emits* the proof
//! terms it needs and every emitted proof term is checked by the intensional
//! kernel: the module never asserts a law it cannot witness.
//!
//! Supports, relations and all stored components are closed expressions;
//! binding is handled with [`Abs`] values of a fixed arity per field, so a
//! binary relation is an `Abs` of arity 2 whose slots are the two compared
//! elements, in that order.

mod colimits;
mod depty;
mod limits;
mod logic;
mod quotient;
pub mod toolkit;

pub use colimits::{
    copair, copair_beta, copair_unique, coproduct, emp_to, initial, initial_uniqueness,
    list_object, list_recursor, Coproduct, ListObject,
};
pub use depty::{
    dep_to_collection, dep_to_morphism, dependent_product, morphism_to_dep, powerset, pullback,
    pullback_stability, roundtrip_iso, total_space, DepIso, DependentProduct, ExtDepType,
};
pub use limits::{
    bang, equalizer, equalizer_mediate, equalizer_unique, pairing, pairing_beta, pairing_unique,
    product, terminal, terminal_uniqueness, Equalizer, Product,
};
pub use logic::{
    conj, curry, disj, entail_compose, entail_id, falsity, implication, meet_elim1, meet_elim2,
    meet_intro, prop_to_dep, pullback_prop, truth, uncurry, PqEntailment, PqProposition,
};
pub use quotient::{
    comprehension, comprehension_mono, comprehension_witness, pullback_rel, quotient,
    quotient_factor, Comprehension, ExtEquivRel, Quotient,
};

use mtt_kernel::{check_term, infer_sort, KernelConfig, KernelError};
use syntax_core::build::*;
use syntax_core::{Abs, Context, Expr, Sort};

/// Errors raised while validating or constructing model objects.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetoidError {
    #[error("the support is not a collection: {0}")]
    SupportNotACol(KernelError),
    #[error("the equality component is not a proposition: {0}")]
    EqNotAProp(KernelError),
    #[error("the {law} law fails to check: {source}")]
    LawFails {
        law: &'static str,
        source: KernelError,
    },
    #[error("invalid input: {0}")]
    InputInvalid(String),
    #[error("not an extensional set: {0}")]
    NotAnExtSet(String),
    #[error("mode violation: {0}")]
    ModeViolation(String),
    #[error("synthesis of the {obligation} obligation produced a term the kernel rejects: {source}")]
    LawSynthesisFailed {
        obligation: String,
        source: KernelError,
    },
    #[error("the relation is not an equivalence ({law} fails): {source}")]
    NotEquivalence {
        law: &'static str,
        source: KernelError,
    },
}

type Result<T> = std::result::Result<T, SetoidError>;

/// An extensional collection: a closed intensional support together with an
/// equivalence relation and proof terms for its three laws.
///
/// Field arities (slot order):
/// * `eq`: 2 — the compared elements `x`, `y`;
/// * `rfl`: 1 — proves `eq(x, x)` for `x` in the support;
/// * `sym`: 3 — `x`, `y` and a proof of `eq(x, y)`, proves `eq(y, x)`;
/// * `tra`: 5 — `x`, `y`, `z`, proofs of `eq(x, y)` and `eq(y, z)`,
///   proves `eq(x, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtCollection {
    pub support: Expr,
    pub eq: Abs,
    pub rfl: Abs,
    pub sym: Abs,
    pub tra: Abs,
    /// The support is a set and the equality is a small proposition.
    pub is_set: bool,
}

impl ExtCollection {
    /// The relation instantiated at two elements.
    pub fn eq_at(&self, x: &Expr, y: &Expr) -> Expr {
        self.eq.instantiate(&[x.clone(), y.clone()])
    }

    pub fn rfl_at(&self, x: &Expr) -> Expr {
        self.rfl.apply1(x)
    }

    /// The symmetry law instantiated; the proof argument is ascribed with
    /// its equality type so that eliminators inside the law body stay
    /// inferable when the proof is a canonical form.
    pub fn sym_at(&self, x: &Expr, y: &Expr, u: &Expr) -> Expr {
        let u = toolkit::annot(u.clone(), self.eq_at(x, y));
        self.sym.instantiate(&[x.clone(), y.clone(), u])
    }

    /// The transitivity law instantiated; both proof arguments are ascribed
    /// (see [`Self::sym_at`]).
    pub fn tra_at(&self, x: &Expr, y: &Expr, z: &Expr, u: &Expr, v: &Expr) -> Expr {
        let u = toolkit::annot(u.clone(), self.eq_at(x, y));
        let v = toolkit::annot(v.clone(), self.eq_at(y, z));
        self.tra
            .instantiate(&[x.clone(), y.clone(), z.clone(), u, v])
    }

    /// The discrete extensional collection over a closed support: elements
    /// are equal exactly when they are propositionally identical.
    pub fn by_id(support: Expr, cfg: &KernelConfig) -> Result<ExtCollection> {
        let eq = Abs::new(
            vec!["x".into(), "y".into()],
            id(support.clone(), var(1), var(0)),
        );
        let rfl = abs1("x", refl(var(0)));
        let sym = abs3("x", "y", "u", toolkit::sym_id(&support, var(0)));
        let tra = Abs::new(
            vec!["x".into(), "y".into(), "z".into(), "u".into(), "v".into()],
            toolkit::tra_id(&support, &var(4), var(1), var(0)),
        );
        mk_setoid(support, eq, rfl, sym, tra, cfg)
    }
}

/// Build and validate an extensional collection from its raw components.
///
/// The support must be a closed type, the relation a proposition over two
/// elements of it, and the three supplied proof terms must check in the
/// telescopes of the respective laws. The collection is marked as a set when
/// the support is a set and the relation is small.
pub fn mk_setoid(
    support: Expr,
    eq: Abs,
    rfl: Abs,
    sym: Abs,
    tra: Abs,
    cfg: &KernelConfig,
) -> Result<ExtCollection> {
    for (abs, arity, what) in [
        (&eq, 2, "equality"),
        (&rfl, 1, "reflexivity"),
        (&sym, 3, "symmetry"),
        (&tra, 5, "transitivity"),
    ] {
        if abs.arity() != arity {
            return Err(SetoidError::InputInvalid(format!(
                "the {what} component must bind {arity} variables, found {}",
                abs.arity()
            )));
        }
    }
    let empty = Context::empty();
    let support_sort =
        infer_sort(&empty, &support, cfg).map_err(SetoidError::SupportNotACol)?;
    let cxy = empty.extended("x", support.clone()).extended("y", support.clone());
    let eq_sort = infer_sort(&cxy, &eq.instantiate(&[var(1), var(0)]), cfg)
        .map_err(SetoidError::EqNotAProp)?;
    if !eq_sort.leq(Sort::Prop) {
        return Err(SetoidError::EqNotAProp(KernelError::SortTooSmall {
            required: Sort::Prop,
            found: eq_sort,
        }));
    }
    let col = ExtCollection {
        support,
        eq,
        rfl,
        sym,
        tra,
        is_set: support_sort.leq(Sort::Set) && eq_sort == Sort::PropS,
    };

    let cx = Context::empty().extended("x", col.support.clone());
    check_term(&cx, &col.rfl_at(&var(0)), &col.eq_at(&var(0), &var(0)), cfg)
        .map_err(|source| SetoidError::LawFails { law: "reflexivity", source })?;

    let csym = cxy.extended("u", col.eq_at(&var(1), &var(0)));
    check_term(
        &csym,
        &col.sym_at(&var(2), &var(1), &var(0)),
        &col.eq_at(&var(1), &var(2)),
        cfg,
    )
    .map_err(|source| SetoidError::LawFails { law: "symmetry", source })?;

    let ctra = cxy
        .extended("z", col.support.clone())
        .extended("u", col.eq_at(&var(2), &var(1)))
        .extended("v", col.eq_at(&var(2), &var(1)));
    check_term(
        &ctra,
        &col.tra_at(&var(4), &var(3), &var(2), &var(1), &var(0)),
        &col.eq_at(&var(4), &var(2)),
        cfg,
    )
    .map_err(|source| SetoidError::LawFails { law: "transitivity", source })?;

    Ok(col)
}

/// A morphism of extensional collections: a closed open term `term(x)` in
/// one variable of the domain support, together with a preservation witness
/// `pr1(x, y, u)` proving `cod.eq(term(x), term(y))` from `u : dom.eq(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtMorphism {
    pub dom: ExtCollection,
    pub cod: ExtCollection,
    pub term: Abs,
    pub pr1: Abs,
}

impl ExtMorphism {
    pub fn at(&self, x: &Expr) -> Expr {
        self.term.apply1(x)
    }

    /// The preservation witness instantiated, ascribed with its equality
    /// type so it can head an eliminator even when it reduces to a
    /// canonical form.
    pub fn pr1_at(&self, x: &Expr, y: &Expr, u: &Expr) -> Expr {
        let img = |e: &Expr| toolkit::annot(self.at(e), self.cod.support.clone());
        toolkit::annot(
            self.pr1.instantiate(&[x.clone(), y.clone(), u.clone()]),
            self.cod.eq_at(&img(x), &img(y)),
        )
    }

    /// Build and validate a morphism from its components.
    pub fn new(
        dom: ExtCollection,
        cod: ExtCollection,
        term: Abs,
        pr1: Abs,
        cfg: &KernelConfig,
    ) -> Result<ExtMorphism> {
        if term.arity() != 1 || pr1.arity() != 3 {
            return Err(SetoidError::InputInvalid(
                "a morphism is a 1-ary term with a 3-ary preservation witness".into(),
            ));
        }
        let m = ExtMorphism { dom, cod, term, pr1 };
        let cx = Context::empty().extended("x", m.dom.support.clone());
        check_term(&cx, &m.at(&var(0)), &m.cod.support, cfg)
            .map_err(|source| SetoidError::LawFails { law: "underlying term", source })?;
        let cu = cx
            .extended("y", m.dom.support.clone())
            .extended("u", m.dom.eq_at(&var(1), &var(0)));
        check_term(
            &cu,
            &m.pr1_at(&var(2), &var(1), &var(0)),
            &m.cod.eq_at(&m.at(&var(2)), &m.at(&var(1))),
            cfg,
        )
        .map_err(|source| SetoidError::LawFails { law: "preservation", source })?;
        Ok(m)
    }

    /// The identity morphism.
    pub fn identity(col: &ExtCollection) -> ExtMorphism {
        ExtMorphism {
            dom: col.clone(),
            cod: col.clone(),
            term: abs1("x", var(0)),
            pr1: abs3("x", "y", "u", var(0)),
        }
    }

    /// Composition `g . f`, defined by substitution; the preservation
    /// witness composes the two component witnesses. The inner image is
    /// ascribed with the intermediate support so that eliminators in `g`
    /// remain inferable when `f` produces a canonical form.
    pub fn compose(g: &ExtMorphism, f: &ExtMorphism) -> Result<ExtMorphism> {
        if g.dom.support != f.cod.support || g.dom.eq != f.cod.eq {
            return Err(SetoidError::InputInvalid(
                "composition needs the codomain of the first arrow to be the domain of the second"
                    .into(),
            ));
        }
        let mid = |x: Expr| toolkit::annot(f.at(&x), f.cod.support.clone());
        Ok(ExtMorphism {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            term: abs1("x", g.at(&mid(var(0)))),
            pr1: abs3(
                "x",
                "y",
                "u",
                g.pr1_at(
                    &mid(var(2)),
                    &mid(var(1)),
                    &f.pr1_at(&var(2), &var(1), &var(0)),
                ),
            ),
        })
    }
}

/// A proof that two parallel morphisms are equal: `pr2(x)` proves
/// `cod.eq(lhs(x), rhs(x))` for every `x` in the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismEq {
    pub lhs: ExtMorphism,
    pub rhs: ExtMorphism,
    pub pr2: Abs,
}

impl MorphismEq {
    pub fn new(
        lhs: ExtMorphism,
        rhs: ExtMorphism,
        pr2: Abs,
        cfg: &KernelConfig,
    ) -> Result<MorphismEq> {
        if pr2.arity() != 1 {
            return Err(SetoidError::InputInvalid(
                "a morphism-equality witness binds one variable".into(),
            ));
        }
        if lhs.dom.support != rhs.dom.support || lhs.cod.support != rhs.cod.support {
            return Err(SetoidError::InputInvalid(
                "morphism equality needs a parallel pair".into(),
            ));
        }
        let w = MorphismEq { lhs, rhs, pr2 };
        let cx = Context::empty().extended("x", w.lhs.dom.support.clone());
        check_term(
            &cx,
            &w.pr2.apply1(&var(0)),
            &w.lhs.cod.eq_at(&w.lhs.at(&var(0)), &w.rhs.at(&var(0))),
            cfg,
        )
        .map_err(|source| SetoidError::LawFails { law: "pointwise equality", source })?;
        Ok(w)
    }
}

/// Check a synthesized proof obligation, reporting failures as
/// [`SetoidError::LawSynthesisFailed`]. Used internally by every
/// construction that emits proof terms.
pub(crate) fn check_synth(
    ctx: &Context,
    term: &Expr,
    ty: &Expr,
    cfg: &KernelConfig,
    obligation: &str,
) -> Result<()> {
    check_term(ctx, term, ty, cfg).map_err(|source| SetoidError::LawSynthesisFailed {
        obligation: obligation.to_string(),
        source,
    })
}
