//! Quotients and comprehensions of extensional collections.
//!
//! A quotient keeps the support of its base and *replaces* the equality by
//! the given equivalence relation; effectiveness therefore holds by
//! construction: two elements are equal in the quotient exactly when they
//! are related. A comprehension restricts the support to the elements
//! satisfying a predicate and keeps the base equality.

use crate::logic::PqProposition;
use crate::toolkit::{fst, snd_dep};
use crate::{
    check_synth, mk_setoid, ExtCollection, ExtMorphism, MorphismEq, Result, SetoidError,
};
use mtt_kernel::{check_term, KernelConfig};
use syntax_core::build::*;
use syntax_core::{Abs, Context, Expr};

/// An equivalence relation over an extensional collection, with a witness
/// that the relation respects the collection's own equality.
///
/// Field arities (slot order):
/// * `rel`: 2 — the related elements;
/// * `ps`: 6 — `x`, `y`, `x'`, `y'`, proofs of `eq(x, x')` and `eq(y, y')`,
///   proves `rel(x, y) -> rel(x', y')`;
/// * `rfl`/`sym`/`tra`: the equivalence laws, with the arities of the
///   corresponding [`ExtCollection`] fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtEquivRel {
    pub base: ExtCollection,
    pub rel: Abs,
    pub ps: Abs,
    pub rfl: Abs,
    pub sym: Abs,
    pub tra: Abs,
}

impl ExtEquivRel {
    pub fn rel_at(&self, x: &Expr, y: &Expr) -> Expr {
        self.rel.instantiate(&[x.clone(), y.clone()])
    }

    /// Validate the components: the relation must be propositional, respect
    /// the base equality, and be an equivalence. Failures of the three
    /// equivalence laws are reported as [`SetoidError::NotEquivalence`].
    pub fn new(
        base: ExtCollection,
        rel: Abs,
        ps: Abs,
        rfl: Abs,
        sym: Abs,
        tra: Abs,
        cfg: &KernelConfig,
    ) -> Result<ExtEquivRel> {
        for (abs, arity, what) in [
            (&rel, 2, "relation"),
            (&ps, 6, "equality-respect"),
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
        let r = ExtEquivRel {
            base,
            rel,
            ps,
            rfl,
            sym,
            tra,
        };
        let sup = r.base.support.clone();
        let cxy = Context::empty()
            .extended("x", sup.clone())
            .extended("y", sup.clone());
        // The respect witness lives in the telescope of two equal pairs.
        let cps = cxy
            .extended("x'", sup.clone())
            .extended("y'", sup.clone())
            .extended("d1", r.base.eq_at(&var(3), &var(1)))
            .extended("d2", r.base.eq_at(&var(3), &var(1)));
        check_synth(
            &cps,
            &r.ps.instantiate(&[var(5), var(4), var(3), var(2), var(1), var(0)]),
            &imp(r.rel_at(&var(5), &var(4)), r.rel_at(&var(3), &var(2))),
            cfg,
            "relation respects equality",
        )?;
        let cx = Context::empty().extended("x", sup.clone());
        check_term(&cx, &r.rfl.apply1(&var(0)), &r.rel_at(&var(0), &var(0)), cfg).map_err(
            |source| SetoidError::NotEquivalence {
                law: "reflexivity",
                source,
            },
        )?;
        let csym = cxy.extended("u", r.rel_at(&var(1), &var(0)));
        check_term(
            &csym,
            &r.sym.instantiate(&[var(2), var(1), var(0)]),
            &r.rel_at(&var(1), &var(2)),
            cfg,
        )
        .map_err(|source| SetoidError::NotEquivalence {
            law: "symmetry",
            source,
        })?;
        let ctra = cxy
            .extended("z", sup)
            .extended("u", r.rel_at(&var(2), &var(1)))
            .extended("v", r.rel_at(&var(2), &var(1)));
        check_term(
            &ctra,
            &r.tra
                .instantiate(&[var(4), var(3), var(2), var(1), var(0)]),
            &r.rel_at(&var(4), &var(2)),
            cfg,
        )
        .map_err(|source| SetoidError::NotEquivalence {
            law: "transitivity",
            source,
        })?;
        Ok(r)
    }
}

/// Pull an equivalence relation back along a morphism into its base; all
/// components are conjugated through the morphism.
pub fn pullback_rel(
    r: &ExtEquivRel,
    delta: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<ExtEquivRel> {
    if delta.cod.support != r.base.support || delta.cod.eq != r.base.eq {
        return Err(SetoidError::InputInvalid(
            "the pullback morphism must target the relation's base".into(),
        ));
    }
    let rel = Abs::new(
        vec!["w".into(), "w'".into()],
        r.rel_at(&delta.at(&var(1)), &delta.at(&var(0))),
    );
    let ps = Abs::new(
        vec![
            "w".into(),
            "v".into(),
            "w'".into(),
            "v'".into(),
            "e1".into(),
            "e2".into(),
        ],
        r.ps.instantiate(&[
            delta.at(&var(5)),
            delta.at(&var(4)),
            delta.at(&var(3)),
            delta.at(&var(2)),
            delta.pr1_at(&var(5), &var(3), &var(1)),
            delta.pr1_at(&var(4), &var(2), &var(0)),
        ]),
    );
    let rfl = abs1("w", r.rfl.apply1(&delta.at(&var(0))));
    let sym = abs3(
        "w",
        "w'",
        "u",
        r.sym
            .instantiate(&[delta.at(&var(2)), delta.at(&var(1)), var(0)]),
    );
    let tra = Abs::new(
        vec!["w".into(), "w'".into(), "w''".into(), "u".into(), "v".into()],
        r.tra.instantiate(&[
            delta.at(&var(4)),
            delta.at(&var(3)),
            delta.at(&var(2)),
            var(1),
            var(0),
        ]),
    );
    ExtEquivRel::new(delta.dom.clone(), rel, ps, rfl, sym, tra, cfg)
}

/// A quotient collection with its canonical projection and the effectiveness
/// witness.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub obj: ExtCollection,
    pub proj: ExtMorphism,
    /// `x, y` and a proof of `obj.eq(x, y)` yield a proof of `rel(x, y)`;
    /// quotient equality *is* the relation, so the witness is the identity.
    pub effectiveness: Abs,
}

/// Quotient an extensional collection by an equivalence relation.
pub fn quotient(r: &ExtEquivRel, cfg: &KernelConfig) -> Result<Quotient> {
    let obj = mk_setoid(
        r.base.support.clone(),
        r.rel.clone(),
        r.rfl.clone(),
        r.sym.clone(),
        r.tra.clone(),
        cfg,
    )?;
    // The projection is the identity on supports; its preservation witness
    // moves a base equality into the relation through the respect proof at
    // a reflexive corner.
    let pr1 = abs3(
        "x",
        "y",
        "u",
        impap(
            r.ps.instantiate(&[
                var(2),
                var(2),
                var(2),
                var(1),
                r.base.rfl_at(&var(2)),
                var(0),
            ]),
            r.rfl.apply1(&var(2)),
        ),
    );
    let proj = ExtMorphism::new(r.base.clone(), obj.clone(), abs1("x", var(0)), pr1, cfg)
        .map_err(|e| crate::limits::synth_of("quotient projection", e))?;
    let effectiveness = abs3("x", "y", "w", var(0));
    let ceff = Context::empty()
        .extended("x", obj.support.clone())
        .extended("y", obj.support.clone())
        .extended("w", obj.eq_at(&var(1), &var(0)));
    check_synth(
        &ceff,
        &effectiveness.instantiate(&[var(2), var(1), var(0)]),
        &r.rel_at(&var(2), &var(1)),
        cfg,
        "quotient effectiveness",
    )?;
    Ok(Quotient {
        obj,
        proj,
        effectiveness,
    })
}

/// Factor a relation-compatible morphism through the quotient: `compat` must
/// prove `f.cod.eq(f(x), f(y))` from `rel(x, y)` (arity 3, slots `x`, `y`,
/// proof). The factored arrow has the quotient as its domain.
pub fn quotient_factor(
    q: &Quotient,
    f: &ExtMorphism,
    compat: Abs,
    cfg: &KernelConfig,
) -> Result<ExtMorphism> {
    if f.dom.support != q.obj.support {
        return Err(SetoidError::InputInvalid(
            "the factored morphism must be defined on the quotient's support".into(),
        ));
    }
    ExtMorphism::new(q.obj.clone(), f.cod.clone(), f.term.clone(), compat, cfg)
        .map_err(|e| crate::limits::synth_of("quotient factorization", e))
}

/// A comprehension sub-collection with its monic projection.
#[derive(Debug, Clone)]
pub struct Comprehension {
    pub obj: ExtCollection,
    pub proj: ExtMorphism,
}

/// The sub-collection of elements satisfying an equality-respecting
/// predicate; equality compares the underlying elements only, so the
/// projection is monic (see [`comprehension_mono`]).
pub fn comprehension(p: &PqProposition, cfg: &KernelConfig) -> Result<Comprehension> {
    let a = &p.base;
    let support = sigma("x", a.support.clone(), p.prop.body.as_ref().clone());
    let fx = |z: Expr| fst(&a.support, z);
    let eq = Abs::new(
        vec!["z".into(), "z'".into()],
        a.eq_at(&fx(var(1)), &fx(var(0))),
    );
    let rfl = abs1("z", a.rfl_at(&fx(var(0))));
    let sym = abs3("z", "z'", "u", a.sym_at(&fx(var(2)), &fx(var(1)), &var(0)));
    let tra = Abs::new(
        vec!["z".into(), "z'".into(), "z''".into(), "u".into(), "v".into()],
        a.tra_at(&fx(var(4)), &fx(var(3)), &fx(var(2)), &var(1), &var(0)),
    );
    let obj = mk_setoid(support, eq, rfl, sym, tra, cfg)
        .map_err(|e| crate::limits::synth_of("comprehension", e))?;
    let proj = ExtMorphism::new(
        obj.clone(),
        a.clone(),
        abs1("z", fx(var(0))),
        abs3("z", "z'", "u", var(0)),
        cfg,
    )
    .map_err(|e| crate::limits::synth_of("comprehension projection", e))?;
    Ok(Comprehension { obj, proj })
}

/// Recover the membership proof of a comprehension element.
pub fn comprehension_witness(p: &PqProposition, z: &Expr) -> Expr {
    snd_dep(&p.base.support, &p.prop, z.clone())
}

/// The comprehension projection is monic: arrows with equal composites along
/// it are already equal, with the same pointwise witness.
pub fn comprehension_mono(
    c: &Comprehension,
    h: &ExtMorphism,
    k: &ExtMorphism,
    w: &MorphismEq,
    cfg: &KernelConfig,
) -> Result<MorphismEq> {
    let _ = c;
    MorphismEq::new(h.clone(), k.clone(), w.pr2.clone(), cfg)
        .map_err(|e| crate::limits::synth_of("comprehension monicity", e))
}
