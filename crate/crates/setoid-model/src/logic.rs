//! Equality-respecting propositions over an extensional collection and
//! entailments between them, with the meet and implication structure.

use crate::{check_synth, ExtCollection, ExtMorphism, Result, SetoidError};
use mtt_kernel::{infer_sort, KernelConfig};
use syntax_core::build::*;
use syntax_core::{Abs, Context, Expr, Sort};

/// A proposition over an extensional collection together with a witness
/// that it respects the collection's equality.
///
/// Field arities (slot order):
/// * `prop`: 1 — the element the proposition speaks about;
/// * `ps`: 3 — `x`, `y` and a proof of `eq(x, y)`, proves
///   `prop(x) -> prop(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqProposition {
    pub base: ExtCollection,
    pub prop: Abs,
    pub ps: Abs,
    /// The proposition is small.
    pub small: bool,
}

impl PqProposition {
    pub fn at(&self, x: &Expr) -> Expr {
        self.prop.apply1(x)
    }

    pub fn ps_at(&self, x: &Expr, y: &Expr, d: &Expr) -> Expr {
        self.ps.instantiate(&[x.clone(), y.clone(), d.clone()])
    }

    /// Validate the components: the body must be a proposition over the
    /// support and the respect witness must check.
    pub fn new(
        base: ExtCollection,
        prop: Abs,
        ps: Abs,
        cfg: &KernelConfig,
    ) -> Result<PqProposition> {
        if prop.arity() != 1 || ps.arity() != 3 {
            return Err(SetoidError::InputInvalid(
                "a proposition binds one variable; its respect witness binds three".into(),
            ));
        }
        let cx = Context::empty().extended("x", base.support.clone());
        let sort = infer_sort(&cx, &prop.apply1(&var(0)), cfg)
            .map_err(SetoidError::EqNotAProp)?;
        if !sort.leq(Sort::Prop) {
            return Err(SetoidError::InputInvalid(format!(
                "the body must be a proposition, found sort {sort:?}"
            )));
        }
        let p = PqProposition {
            base,
            prop,
            ps,
            small: sort == Sort::PropS,
        };
        let cps = cx
            .extended("y", p.base.support.clone())
            .extended("d", p.base.eq_at(&var(1), &var(0)));
        check_synth(
            &cps,
            &p.ps_at(&var(2), &var(1), &var(0)),
            &imp(p.at(&var(2)), p.at(&var(1))),
            cfg,
            "proposition respects equality",
        )?;
        Ok(p)
    }
}

fn same_base(p: &PqProposition, q: &PqProposition) -> Result<()> {
    if p.base.support != q.base.support || p.base.eq != q.base.eq {
        return Err(SetoidError::InputInvalid(
            "the propositions must share a base".into(),
        ));
    }
    Ok(())
}

/// The true proposition over a collection.
pub fn truth(base: &ExtCollection, cfg: &KernelConfig) -> Result<PqProposition> {
    PqProposition::new(
        base.clone(),
        abs1("x", tt()),
        abs3("x", "y", "d", implam("w", tt(), var(0))),
        cfg,
    )
}

/// The false proposition over a collection.
pub fn falsity(base: &ExtCollection, cfg: &KernelConfig) -> Result<PqProposition> {
    PqProposition::new(
        base.clone(),
        abs1("x", bot()),
        abs3("x", "y", "d", implam("w", bot(), var(0))),
        cfg,
    )
}

/// Pointwise conjunction.
pub fn conj(p: &PqProposition, q: &PqProposition, cfg: &KernelConfig) -> Result<PqProposition> {
    same_base(p, q)?;
    let prop = abs1("x", and(p.at(&var(0)), q.at(&var(0))));
    let ps = abs3(
        "x",
        "y",
        "d",
        implam(
            "w",
            and(p.at(&var(2)), q.at(&var(2))),
            andpair(
                impap(p.ps_at(&var(3), &var(2), &var(1)), proj1(var(0))),
                impap(q.ps_at(&var(3), &var(2), &var(1)), proj2(var(0))),
            ),
        ),
    );
    PqProposition::new(p.base.clone(), prop, ps, cfg)
}

/// Pointwise disjunction.
pub fn disj(p: &PqProposition, q: &PqProposition, cfg: &KernelConfig) -> Result<PqProposition> {
    same_base(p, q)?;
    let prop = abs1("x", or(p.at(&var(0)), q.at(&var(0))));
    let target = or(p.at(&var(2)), q.at(&var(2)));
    let ps = abs3(
        "x",
        "y",
        "d",
        implam(
            "w",
            or(p.at(&var(2)), q.at(&var(2))),
            elor(
                var(0),
                target,
                abs1(
                    "l",
                    orinl(impap(p.ps_at(&var(4), &var(3), &var(2)), var(0))),
                ),
                abs1(
                    "r",
                    orinr(impap(q.ps_at(&var(4), &var(3), &var(2)), var(0))),
                ),
            ),
        ),
    );
    PqProposition::new(p.base.clone(), prop, ps, cfg)
}

/// Pointwise implication; respect uses the symmetric turn of the equality
/// on the antecedent side.
pub fn implication(
    p: &PqProposition,
    q: &PqProposition,
    cfg: &KernelConfig,
) -> Result<PqProposition> {
    same_base(p, q)?;
    let prop = abs1("x", imp(p.at(&var(0)), q.at(&var(0))));
    let ps = abs3(
        "x",
        "y",
        "d",
        implam(
            "h",
            imp(p.at(&var(2)), q.at(&var(2))),
            implam(
                "v",
                p.at(&var(2)),
                impap(
                    q.ps_at(&var(4), &var(3), &var(2)),
                    impap(
                        var(1),
                        impap(
                            p.ps_at(
                                &var(3),
                                &var(4),
                                &p.base.sym_at(&var(4), &var(3), &var(2)),
                            ),
                            var(0),
                        ),
                    ),
                ),
            ),
        ),
    );
    PqProposition::new(p.base.clone(), prop, ps, cfg)
}

/// Pull a proposition back along a morphism into its base; the respect
/// witness is conjugated through the morphism's preservation witness.
pub fn pullback_prop(
    p: &PqProposition,
    delta: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<PqProposition> {
    if delta.cod.support != p.base.support || delta.cod.eq != p.base.eq {
        return Err(SetoidError::InputInvalid(
            "the pullback morphism must target the proposition's base".into(),
        ));
    }
    PqProposition::new(
        delta.dom.clone(),
        abs1("w", p.at(&delta.at(&var(0)))),
        abs3(
            "w",
            "w'",
            "e",
            p.ps_at(
                &delta.at(&var(2)),
                &delta.at(&var(1)),
                &delta.pr1_at(&var(2), &var(1), &var(0)),
            ),
        ),
        cfg,
    )
}

/// View a proposition as a dependent type with proof-irrelevant fibres:
/// the fibre equality is trivially true and substitution is the respect
/// witness. Through this view the pullback-stability isomorphisms of
/// dependent types apply to propositions and their comprehensions.
pub fn prop_to_dep(p: &PqProposition, cfg: &KernelConfig) -> Result<crate::ExtDepType> {
    let triv6 = Abs::new(
        vec![
            "a".into(),
            "b".into(),
            "c".into(),
            "d".into(),
            "e".into(),
            "f".into(),
        ],
        tt_proof(),
    );
    crate::ExtDepType::new(
        p.base.clone(),
        p.prop.clone(),
        abs3("x", "y", "y'", tt()),
        Abs::new(vec!["x".into(), "y".into()], tt_proof()),
        Abs::new(
            vec!["x".into(), "y".into(), "y'".into(), "u".into()],
            tt_proof(),
        ),
        triv6.clone(),
        Abs::new(
            vec!["x1".into(), "x2".into(), "d".into(), "y".into()],
            impap(
                p.ps_at(
                    &var(3),
                    &var(2),
                    &crate::toolkit::annot(var(1), p.base.eq_at(&var(3), &var(2))),
                ),
                var(0),
            ),
        ),
        triv6.clone(),
        Abs::new(
            vec![
                "x1".into(),
                "x2".into(),
                "d1".into(),
                "d2".into(),
                "y".into(),
            ],
            tt_proof(),
        ),
        Abs::new(vec!["x".into(), "y".into()], tt_proof()),
        triv6,
        cfg,
    )
}

/// A pointwise entailment between two propositions over the same base:
/// `pt(x)` proves `from(x) -> to(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqEntailment {
    pub from: PqProposition,
    pub to: PqProposition,
    pub pt: Abs,
}

impl PqEntailment {
    pub fn new(
        from: PqProposition,
        to: PqProposition,
        pt: Abs,
        cfg: &KernelConfig,
    ) -> Result<PqEntailment> {
        same_base(&from, &to)?;
        if pt.arity() != 1 {
            return Err(SetoidError::InputInvalid(
                "an entailment witness binds one variable".into(),
            ));
        }
        let cx = Context::empty().extended("x", from.base.support.clone());
        check_synth(
            &cx,
            &pt.apply1(&var(0)),
            &imp(from.at(&var(0)), to.at(&var(0))),
            cfg,
            "entailment",
        )?;
        Ok(PqEntailment { from, to, pt })
    }
}

/// The identity entailment.
pub fn entail_id(p: &PqProposition, cfg: &KernelConfig) -> Result<PqEntailment> {
    PqEntailment::new(
        p.clone(),
        p.clone(),
        abs1("x", implam("w", p.at(&var(0)), var(0))),
        cfg,
    )
}

/// Composition of entailments.
pub fn entail_compose(
    g: &PqEntailment,
    f: &PqEntailment,
    cfg: &KernelConfig,
) -> Result<PqEntailment> {
    if g.from.prop != f.to.prop {
        return Err(SetoidError::InputInvalid(
            "entailments compose along a common proposition".into(),
        ));
    }
    PqEntailment::new(
        f.from.clone(),
        g.to.clone(),
        abs1(
            "x",
            implam(
                "w",
                f.from.at(&var(0)),
                impap(
                    g.pt.apply1(&var(1)),
                    impap(f.pt.apply1(&var(1)), var(0)),
                ),
            ),
        ),
        cfg,
    )
}

/// The two projections out of a conjunction.
pub fn meet_elim1(p: &PqProposition, q: &PqProposition, cfg: &KernelConfig) -> Result<PqEntailment> {
    PqEntailment::new(
        conj(p, q, cfg)?,
        p.clone(),
        abs1(
            "x",
            implam("w", and(p.at(&var(0)), q.at(&var(0))), proj1(var(0))),
        ),
        cfg,
    )
}

pub fn meet_elim2(p: &PqProposition, q: &PqProposition, cfg: &KernelConfig) -> Result<PqEntailment> {
    PqEntailment::new(
        conj(p, q, cfg)?,
        q.clone(),
        abs1(
            "x",
            implam("w", and(p.at(&var(0)), q.at(&var(0))), proj2(var(0))),
        ),
        cfg,
    )
}

/// Pairing of entailments into a conjunction.
pub fn meet_intro(
    e1: &PqEntailment,
    e2: &PqEntailment,
    cfg: &KernelConfig,
) -> Result<PqEntailment> {
    if e1.from.prop != e2.from.prop {
        return Err(SetoidError::InputInvalid(
            "meet introduction needs a common antecedent".into(),
        ));
    }
    PqEntailment::new(
        e1.from.clone(),
        conj(&e1.to, &e2.to, cfg)?,
        abs1(
            "x",
            implam(
                "w",
                e1.from.at(&var(0)),
                andpair(
                    impap(e1.pt.apply1(&var(1)), var(0)),
                    impap(e2.pt.apply1(&var(1)), var(0)),
                ),
            ),
        ),
        cfg,
    )
}

/// One direction of the meet/implication adjunction: from
/// `p /\ q |- r` obtain `p |- q -> r`.
pub fn curry(
    e: &PqEntailment,
    p: &PqProposition,
    q: &PqProposition,
    cfg: &KernelConfig,
) -> Result<PqEntailment> {
    PqEntailment::new(
        p.clone(),
        implication(q, &e.to, cfg)?,
        abs1(
            "x",
            implam(
                "u",
                p.at(&var(0)),
                implam(
                    "v",
                    q.at(&var(1)),
                    impap(e.pt.apply1(&var(2)), andpair(var(1), var(0))),
                ),
            ),
        ),
        cfg,
    )
}

/// The other direction: from `p |- q -> r` obtain `p /\ q |- r`. The
/// consequent `r` is passed explicitly; the kernel check on the built
/// witness confirms that `e` really targets `q -> r`.
pub fn uncurry(
    e: &PqEntailment,
    p: &PqProposition,
    q: &PqProposition,
    r: &PqProposition,
    cfg: &KernelConfig,
) -> Result<PqEntailment> {
    PqEntailment::new(
        conj(p, q, cfg)?,
        r.clone(),
        abs1(
            "x",
            implam(
                "w",
                and(p.at(&var(0)), q.at(&var(0))),
                impap(
                    impap(e.pt.apply1(&var(1)), proj1(var(0))),
                    proj2(var(0)),
                ),
            ),
        ),
        cfg,
    )
}
