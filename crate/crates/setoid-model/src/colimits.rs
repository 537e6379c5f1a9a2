//! Initial object, binary coproducts and list objects of extensional sets.
//!
//! The equalities on sums and lists are *defined* propositionally: two
//! elements of a sum are equal when both are identifiable as injections of
//! componentwise equal elements, and two lists are equal when some list of
//! related pairs projects onto them. The equivalence laws of these
//! relations are genuine theorems and the constructions below synthesize
//! their proof terms; the hardest is transitivity for lists, proved through
//! an inductively established zip lemma.

use crate::limits::{synth_of, Product};
use crate::toolkit::{
    annot, cong_id, fst, head_fam, is_nil_fam, open_pack2, snd_dep, sym_id, tail_fam, tra_id,
    transport,
};
use crate::{mk_setoid, ExtCollection, ExtMorphism, MorphismEq, Result, SetoidError};
use mtt_kernel::KernelConfig;
use syntax_core::build::*;
use syntax_core::{Abs, Expr};

/// The initial extensional set: the empty set with propositional identity.
pub fn initial(cfg: &KernelConfig) -> Result<ExtCollection> {
    ExtCollection::by_id(n0(), cfg)
}

/// The unique morphism out of the initial collection.
pub fn emp_to(cod: &ExtCollection, cfg: &KernelConfig) -> Result<ExtMorphism> {
    let ini = initial(cfg)?;
    let emp = |x: Expr| eln0(x, abs1("w", cod.support.clone()));
    ExtMorphism::new(
        ini,
        cod.clone(),
        abs1("x", emp(var(0))),
        abs3(
            "x",
            "y",
            "u",
            eln0(
                var(2),
                abs1("w", cod.eq_at(&emp(var(0)), &emp(var(2)))),
            ),
        ),
        cfg,
    )
    .map_err(|e| synth_of("initial arrow", e))
}

/// Any morphism out of the initial collection equals the canonical one.
pub fn initial_uniqueness(g: &ExtMorphism, cfg: &KernelConfig) -> Result<MorphismEq> {
    let canon = emp_to(&g.cod, cfg)?;
    let pr2 = abs1(
        "x",
        eln0(
            var(0),
            abs1("w", g.cod.eq_at(&g.at(&var(0)), &canon.at(&var(0)))),
        ),
    );
    MorphismEq::new(g.clone(), canon, pr2, cfg).map_err(|e| synth_of("initial uniqueness", e))
}

// ---- coproducts ----

/// A binary coproduct with its injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub obj: ExtCollection,
    pub inl: ExtMorphism,
    pub inr: ExtMorphism,
}

struct CoprodParts {
    b: ExtCollection,
    c: ExtCollection,
    bc: Expr,
}

impl CoprodParts {
    /// `exists x exists x'. Id(z, inl x) /\ Id(z', inl x') /\ x = x'`,
    /// with `z`, `z'` given in the ambient context.
    fn lpack(&self, z: &Expr, zp: &Expr) -> Expr {
        exists(
            "x",
            self.b.support.clone(),
            exists(
                "x'",
                self.b.support.clone(),
                ands(vec![
                    id(self.bc.clone(), z.shifted(2), inl(var(1))),
                    id(self.bc.clone(), zp.shifted(2), inl(var(0))),
                    self.b.eq_at(&var(1), &var(0)),
                ]),
            ),
        )
    }

    fn rpack(&self, z: &Expr, zp: &Expr) -> Expr {
        exists(
            "y",
            self.c.support.clone(),
            exists(
                "y'",
                self.c.support.clone(),
                ands(vec![
                    id(self.bc.clone(), z.shifted(2), inr(var(1))),
                    id(self.bc.clone(), zp.shifted(2), inr(var(0))),
                    self.c.eq_at(&var(1), &var(0)),
                ]),
            ),
        )
    }

    fn eq_at(&self, z: &Expr, zp: &Expr) -> Expr {
        or(self.lpack(z, zp), self.rpack(z, zp))
    }

    /// Refute an identification of an `inl` with an `inr`: transport the
    /// small proposition "is a left injection" along it and explode.
    fn confusion(&self, d: Expr, target: Expr) -> Expr {
        let is_left = abs1(
            "w",
            elplus(
                var(0),
                abs1("v", props()),
                abs1("a", tt()),
                abs1("a", bot()),
            ),
        );
        elbot(transport(&is_left, d, tt_proof()), target)
    }

    /// From `d : Id(B + C, inl a, inl b)` conclude `Id(B, a, b)` by
    /// congruence along the left projection (with `a` as default).
    fn inl_inj(&self, a: &Expr, d: Expr) -> Expr {
        let projl = abs1(
            "w",
            elplus(
                var(0),
                abs1("v", self.b.support.clone()),
                abs1("u", var(0)),
                abs1("u", a.shifted(2)),
            ),
        );
        cong_id(&self.b.support, &projl, a, d)
    }

    fn inr_inj(&self, a: &Expr, d: Expr) -> Expr {
        let projr = abs1(
            "w",
            elplus(
                var(0),
                abs1("v", self.c.support.clone()),
                abs1("u", a.shifted(2)),
                abs1("u", var(0)),
            ),
        );
        cong_id(&self.c.support, &projr, a, d)
    }
}

/// The coproduct of two extensional sets.
pub fn coproduct(
    b: &ExtCollection,
    c: &ExtCollection,
    cfg: &KernelConfig,
) -> Result<Coproduct> {
    if !b.is_set || !c.is_set {
        return Err(SetoidError::NotAnExtSet(
            "coproducts are formed over extensional sets".into(),
        ));
    }
    let parts = CoprodParts {
        b: b.clone(),
        c: c.clone(),
        bc: plus(b.support.clone(), c.support.clone()),
    };
    let p = &parts;
    let eq = Abs::new(vec!["z".into(), "z'".into()], p.eq_at(&var(1), &var(0)));

    // Reflexivity: case on the element and inject a trivial pack.
    let rfl = abs1(
        "z",
        elplus(
            var(0),
            abs1("w", p.eq_at(&var(0), &var(0))),
            abs1(
                "x",
                orinl(expair(
                    var(0),
                    expair(
                        var(0),
                        andpair(
                            refl(inl(var(0))),
                            andpair(refl(inl(var(0))), b.rfl_at(&var(0))),
                        ),
                    ),
                )),
            ),
            abs1(
                "y",
                orinr(expair(
                    var(0),
                    expair(
                        var(0),
                        andpair(
                            refl(inr(var(0))),
                            andpair(refl(inr(var(0))), c.rfl_at(&var(0))),
                        ),
                    ),
                )),
            ),
        ),
    );

    // Symmetry: open the pack and swap its components.
    let sym_t = p.eq_at(&var(1), &var(2));
    let sym = abs3(
        "z",
        "z'",
        "u",
        elor(
            var(0),
            sym_t.clone(),
            abs1(
                "lu",
                open_pack2(
                    var(0),
                    &sym_t.shifted(1),
                    orinl(expair(
                        var(1),
                        expair(
                            var(3),
                            andpair(
                                proj1(proj2(var(0))),
                                andpair(
                                    proj1(var(0)),
                                    b.sym_at(&var(3), &var(1), &proj2(proj2(var(0)))),
                                ),
                            ),
                        ),
                    )),
                ),
            ),
            abs1(
                "ru",
                open_pack2(
                    var(0),
                    &sym_t.shifted(1),
                    orinr(expair(
                        var(1),
                        expair(
                            var(3),
                            andpair(
                                proj1(proj2(var(0))),
                                andpair(
                                    proj1(var(0)),
                                    c.sym_at(&var(3), &var(1), &proj2(proj2(var(0)))),
                                ),
                            ),
                        ),
                    )),
                ),
            ),
        ),
    );

    // Transitivity: four cases; matching injections compose through
    // injectivity, mismatched ones are refuted by disjointness.
    //
    // Inside a fully opened double pack the indices are: the first pack's
    // witnesses at 7 and 5 with proof at 4, the second pack's at 3 and 1
    // with proof at 0; the three compared elements sit at 14, 13, 12.
    let tra_t = p.eq_at(&var(4), &var(2));
    let case_ll = {
        let x = var(7);
        let x2 = var(5);
        let pk = var(4);
        let w1 = var(3);
        let w2 = var(1);
        let q = var(0);
        let dmid = tra_id(
            &p.bc,
            &inl(x2.clone()),
            sym_id(&p.bc, proj1(proj2(pk.clone()))),
            proj1(q.clone()),
        );
        let dinj = p.inl_inj(&x2, dmid);
        let famv = abs1("v", b.eq_at(&x.shifted(1), &var(0)));
        let ebr = transport(&famv, dinj, proj2(proj2(pk.clone())));
        let e3 = b.tra_at(&x, &w1, &w2, &ebr, &proj2(proj2(q.clone())));
        orinl(expair(
            x,
            expair(
                w2,
                andpair(proj1(pk), andpair(proj1(proj2(q)), e3)),
            ),
        ))
    };
    let case_rr = {
        let x = var(7);
        let x2 = var(5);
        let pk = var(4);
        let w1 = var(3);
        let w2 = var(1);
        let q = var(0);
        let dmid = tra_id(
            &p.bc,
            &inr(x2.clone()),
            sym_id(&p.bc, proj1(proj2(pk.clone()))),
            proj1(q.clone()),
        );
        let dinj = p.inr_inj(&x2, dmid);
        let famv = abs1("v", c.eq_at(&x.shifted(1), &var(0)));
        let ebr = transport(&famv, dinj, proj2(proj2(pk.clone())));
        let e3 = c.tra_at(&x, &w1, &w2, &ebr, &proj2(proj2(q.clone())));
        orinr(expair(
            x,
            expair(
                w2,
                andpair(proj1(pk), andpair(proj1(proj2(q)), e3)),
            ),
        ))
    };
    let deep_t = tra_t.shifted(10);
    let case_lr = {
        // The middle element is pinned both to `inl x2` and to `inr w1`.
        let dbad = tra_id(
            &p.bc,
            &inl(var(5)),
            sym_id(&p.bc, proj1(proj2(var(4)))),
            proj1(var(0)),
        );
        p.confusion(dbad, deep_t.clone())
    };
    let case_rl = {
        let dbad = tra_id(
            &p.bc,
            &inr(var(5)),
            sym_id(&p.bc, proj1(proj2(var(4)))),
            proj1(var(0)),
        );
        let flipped = sym_id(&p.bc, dbad);
        p.confusion(flipped, deep_t)
    };
    // Case split on both hypotheses first, then open the two packs; the
    // opened double pack is where the deep indices above apply.
    let both = |case: Expr| {
        open_pack2(
            var(1),
            &tra_t.shifted(2),
            open_pack2(var(4), &tra_t.shifted(6), case),
        )
    };
    let tra = Abs::new(
        vec!["z".into(), "z'".into(), "z''".into(), "u".into(), "v".into()],
        elor(
            var(1),
            tra_t.clone(),
            abs1(
                "lu",
                elor(
                    var(1),
                    tra_t.shifted(1),
                    abs1("lv", both(case_ll)),
                    abs1("rv", both(case_lr)),
                ),
            ),
            abs1(
                "ru",
                elor(
                    var(1),
                    tra_t.shifted(1),
                    abs1("lv", both(case_rl)),
                    abs1("rv", both(case_rr)),
                ),
            ),
        ),
    );

    let obj = mk_setoid(p.bc.clone(), eq, rfl, sym, tra, cfg)
        .map_err(|e| synth_of("coproduct", e))?;

    let inl_m = ExtMorphism::new(
        b.clone(),
        obj.clone(),
        abs1("x", inl(var(0))),
        abs3(
            "x",
            "y",
            "u",
            orinl(expair(
                var(2),
                expair(
                    var(1),
                    andpair(refl(inl(var(2))), andpair(refl(inl(var(1))), var(0))),
                ),
            )),
        ),
        cfg,
    )
    .map_err(|e| synth_of("left injection", e))?;
    let inr_m = ExtMorphism::new(
        c.clone(),
        obj.clone(),
        abs1("y", inr(var(0))),
        abs3(
            "x",
            "y",
            "u",
            orinr(expair(
                var(2),
                expair(
                    var(1),
                    andpair(refl(inr(var(2))), andpair(refl(inr(var(1))), var(0))),
                ),
            )),
        ),
        cfg,
    )
    .map_err(|e| synth_of("right injection", e))?;
    Ok(Coproduct {
        obj,
        inl: inl_m,
        inr: inr_m,
    })
}

/// The copairing `[f, g]` out of a coproduct.
pub fn copair(
    cp: &Coproduct,
    f: &ExtMorphism,
    g: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<ExtMorphism> {
    if f.cod.support != g.cod.support {
        return Err(SetoidError::InputInvalid(
            "copairing needs a common codomain".into(),
        ));
    }
    let z = &f.cod;
    let bc = &cp.obj.support;
    let cop = |w: Expr| {
        elplus(
            w,
            abs1("v", z.support.clone()),
            abs1("x", f.at(&var(0))),
            abs1("y", g.at(&var(0))),
        )
    };
    // One branch of the preservation witness: rewrite both identifications
    // into the copaired images and use the component witness in between.
    // Pack indices after opening: witnesses 3 and 1, proof pack 0; the
    // compared sum elements are at 7 and 6.
    let branch = |inj: &dyn Fn(Expr) -> Expr, pr1_case: Expr| {
        let s1 = pr1_case; // z.eq(cop (in w3), cop (in w1))
        let fam2 = abs1(
            "v",
            z.eq_at(&cop(annot(inj(var(4)), bc.clone())), &cop(var(0))),
        );
        let t1 = transport(&fam2, sym_id(bc, proj1(proj2(var(0)))), s1);
        let fam1 = abs1("v", z.eq_at(&cop(var(0)), &cop(var(7))));
        transport(&fam1, sym_id(bc, proj1(var(0))), t1)
    };
    let target = z.eq_at(&cop(var(2)), &cop(var(1)));
    let pr1 = abs3(
        "z",
        "z'",
        "u",
        elor(
            var(0),
            target.clone(),
            abs1(
                "lu",
                open_pack2(
                    var(0),
                    &target.shifted(1),
                    branch(&inl, f.pr1_at(&var(3), &var(1), &proj2(proj2(var(0))))),
                ),
            ),
            abs1(
                "ru",
                open_pack2(
                    var(0),
                    &target.shifted(1),
                    branch(&inr, g.pr1_at(&var(3), &var(1), &proj2(proj2(var(0))))),
                ),
            ),
        ),
    );
    ExtMorphism::new(
        cp.obj.clone(),
        z.clone(),
        abs1("w", cop(var(0))),
        pr1,
        cfg,
    )
    .map_err(|e| synth_of("copairing", e))
}

/// `[f, g] . inl = f` and `[f, g] . inr = g`, by computation.
pub fn copair_beta(
    cp: &Coproduct,
    f: &ExtMorphism,
    g: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<(MorphismEq, MorphismEq)> {
    let med = copair(cp, f, g, cfg)?;
    let left = MorphismEq::new(
        ExtMorphism::compose(&med, &cp.inl)?,
        f.clone(),
        abs1("x", f.cod.rfl_at(&f.at(&var(0)))),
        cfg,
    )
    .map_err(|e| synth_of("left copairing triangle", e))?;
    let right = MorphismEq::new(
        ExtMorphism::compose(&med, &cp.inr)?,
        g.clone(),
        abs1("y", g.cod.rfl_at(&g.at(&var(0)))),
        cfg,
    )
    .map_err(|e| synth_of("right copairing triangle", e))?;
    Ok((left, right))
}

/// Uniqueness of copairing: a morphism agreeing with `f` and `g` on the
/// injections equals `[f, g]`.
pub fn copair_unique(
    cp: &Coproduct,
    h: &ExtMorphism,
    f: &ExtMorphism,
    g: &ExtMorphism,
    tri_l: &MorphismEq,
    tri_r: &MorphismEq,
    cfg: &KernelConfig,
) -> Result<MorphismEq> {
    let med = copair(cp, f, g, cfg)?;
    let pr2 = abs1(
        "w",
        elplus(
            var(0),
            abs1("v", h.cod.eq_at(&h.at(&var(0)), &med.at(&var(0)))),
            abs1("x", tri_l.pr2.apply1(&var(0))),
            abs1("y", tri_r.pr2.apply1(&var(0))),
        ),
    );
    MorphismEq::new(h.clone(), med, pr2, cfg).map_err(|e| synth_of("copairing uniqueness", e))
}

// ---- lists ----

/// A list object together with its structure maps.
#[derive(Debug, Clone)]
pub struct ListObject {
    pub obj: ExtCollection,
    pub elem: ExtCollection,
    /// The product `List(C) x C` used as the domain of `cons`.
    pub cons_domain: Product,
    pub cons: ExtMorphism,
}

pub(crate) struct ListParts {
    pub c: ExtCollection,
    pub lsup: Expr,
    pub rsup: Expr,
}

impl ListParts {
    pub fn new(c: &ExtCollection) -> ListParts {
        let csup = c.support.clone();
        let rsup = sigma(
            "x",
            csup.clone(),
            sigma("y", csup.clone(), c.eq_at(&var(1), &var(0))),
        );
        ListParts {
            c: c.clone(),
            lsup: list(csup),
            rsup,
        }
    }

    fn r_cod(&self) -> Abs {
        abs1(
            "x",
            sigma(
                "y",
                self.c.support.clone(),
                self.c.eq_at(&var(1), &var(0)),
            ),
        )
    }

    pub fn pi1(&self, r: Expr) -> Expr {
        fst(&self.c.support, r)
    }

    pub fn pi2(&self, r: Expr) -> Expr {
        fst(
            &self.c.support,
            snd_dep(&self.c.support, &self.r_cod(), r),
        )
    }

    /// The relatedness proof carried by an element of the relation set.
    pub fn prel(&self, r: Expr) -> Expr {
        elsigma(
            r,
            abs1(
                "w",
                self.c.eq_at(&self.pi1(var(0)), &self.pi2(var(0))),
            ),
            abs2(
                "a",
                "b",
                elsigma(
                    var(0),
                    abs1(
                        "w",
                        self.c
                            .eq_at(&var(2), &fst(&self.c.support, var(0))),
                    ),
                    abs2("y", "d", var(0)),
                ),
            ),
        )
    }

    /// The lifted first (or second) projection on lists of related pairs.
    pub fn proj_list(&self, first: bool, l: Expr) -> Expr {
        let head = if first {
            self.pi1(var(1))
        } else {
            self.pi2(var(1))
        };
        ellist(
            l,
            abs1("w", self.lsup.clone()),
            nil(),
            abs3("x", "y", "w", cons(var(0), head)),
        )
    }

    pub fn p1(&self, l: Expr) -> Expr {
        self.proj_list(true, l)
    }

    pub fn p2(&self, l: Expr) -> Expr {
        self.proj_list(false, l)
    }

    pub fn eq_at(&self, z: &Expr, zp: &Expr) -> Expr {
        exists(
            "l",
            list(self.rsup.clone()),
            and(
                id(self.lsup.clone(), self.p1(var(0)), z.shifted(1)),
                id(self.lsup.clone(), self.p2(var(0)), zp.shifted(1)),
            ),
        )
    }
}

/// The list object over an extensional set, with the existential
/// "zipped list of related pairs" equality.
pub fn list_object(c: &ExtCollection, cfg: &KernelConfig) -> Result<ListObject> {
    if !c.is_set {
        return Err(SetoidError::NotAnExtSet(
            "list objects are formed over extensional sets".into(),
        ));
    }
    let parts = ListParts::new(c);
    let p = &parts;
    let lr = list(p.rsup.clone());
    let lsup = p.lsup.clone();

    let eq = Abs::new(vec!["z".into(), "z'".into()], p.eq_at(&var(1), &var(0)));

    // Reflexivity: zip a list with itself along reflexivity of the
    // elements, then show by induction that both projections give it back.
    let diag = |z: Expr| {
        ellist(
            z,
            abs1("w", lr.clone()),
            nil(),
            abs3(
                "x",
                "y",
                "w",
                cons(
                    var(0),
                    pair(var(1), pair(var(1), c.rfl_at(&var(1)))),
                ),
            ),
        )
    };
    let dlem = {
        let motive = abs1(
            "v",
            and(
                id(lsup.clone(), p.p1(diag(var(0))), var(0)),
                id(lsup.clone(), p.p2(diag(var(0))), var(0)),
            ),
        );
        let step = abs3("x", "y", "w", {
            let f = abs1("v", cons(var(0), var(2)));
            andpair(
                cong_id(
                    &lsup,
                    &f,
                    &cons(p.p1(diag(var(2))), var(1)),
                    proj1(var(0)),
                ),
                cong_id(
                    &lsup,
                    &f,
                    &cons(p.p2(diag(var(2))), var(1)),
                    proj2(var(0)),
                ),
            )
        });
        move |z: Expr| {
            ellist(
                z,
                motive.clone(),
                andpair(refl(nil()), refl(nil())),
                step.clone(),
            )
        }
    };
    let rfl = abs1("z", expair(diag(var(0)), dlem(var(0))));

    // Symmetry: swap each related pair and flip the projection lemmas.
    let swap = |l: Expr| {
        ellist(
            l,
            abs1("w", lr.clone()),
            nil(),
            abs3(
                "x",
                "y",
                "w",
                cons(
                    var(0),
                    pair(
                        p.pi2(var(1)),
                        pair(
                            p.pi1(var(1)),
                            c.sym_at(&p.pi1(var(1)), &p.pi2(var(1)), &p.prel(var(1))),
                        ),
                    ),
                ),
            ),
        )
    };
    let slem = {
        let motive = abs1(
            "v",
            and(
                id(lsup.clone(), p.p1(swap(var(0))), p.p2(var(0))),
                id(lsup.clone(), p.p2(swap(var(0))), p.p1(var(0))),
            ),
        );
        let step = abs3("x", "y", "w", {
            let f1 = abs1("v", cons(var(0), p.pi2(var(2))));
            let f2 = abs1("v", cons(var(0), p.pi1(var(2))));
            andpair(
                cong_id(
                    &lsup,
                    &f1,
                    &cons(p.p1(swap(var(2))), p.pi2(var(1))),
                    proj1(var(0)),
                ),
                cong_id(
                    &lsup,
                    &f2,
                    &cons(p.p2(swap(var(2))), p.pi1(var(1))),
                    proj2(var(0)),
                ),
            )
        });
        move |l: Expr| {
            ellist(
                l,
                motive.clone(),
                andpair(refl(nil()), refl(nil())),
                step.clone(),
            )
        }
    };
    let sym_t = p.eq_at(&var(1), &var(2));
    let sym = abs3(
        "z",
        "z'",
        "u",
        elexists(
            var(0),
            sym_t,
            abs2(
                "lw",
                "pk",
                expair(
                    swap(var(1)),
                    andpair(
                        tra_id(
                            &lsup,
                            &p.p1(swap(var(1))),
                            proj1(slem(var(1))),
                            proj2(var(0)),
                        ),
                        tra_id(
                            &lsup,
                            &p.p2(swap(var(1))),
                            proj2(slem(var(1))),
                            proj1(var(0)),
                        ),
                    ),
                ),
            ),
        ),
    );

    // Transitivity: open both packs, align the middle lists and zip. The
    // zip lemma is proved by induction on the first pack with the second
    // quantified, so the induction hypothesis can be applied to the tail.
    let zip_motive = Abs::new(
        vec!["w".into()],
        forall(
            "l2",
            lr.clone(),
            imp(
                id(lsup.clone(), p.p2(var(1)), p.p1(var(0))),
                exists(
                    "l3",
                    lr.clone(),
                    and(
                        id(lsup.clone(), p.p1(var(0)), p.p1(var(2))),
                        id(lsup.clone(), p.p2(var(0)), p.p2(var(1))),
                    ),
                ),
            ),
        ),
    );
    let zip_base = {
        let sub_motive = abs1(
            "w",
            imp(
                id(lsup.clone(), nil(), p.p1(var(0))),
                id(lsup.clone(), nil(), p.p2(var(0))),
            ),
        );
        let sub_base = implam("h", id(lsup.clone(), nil(), p.p1(annot(nil(), lr.clone()))), var(0));
        let sub_step = abs3(
            "x",
            "y",
            "w",
            implam(
                "h",
                id(lsup.clone(), nil(), p.p1(cons(var(2), var(1)))),
                elbot(
                    transport(&is_nil_fam(), var(0), tt_proof()),
                    id(
                        lsup.clone(),
                        nil(),
                        p.p2(annot(cons(var(3), var(2)), lr.clone())),
                    ),
                ),
            ),
        );
        falam(
            "l2",
            lr.clone(),
            implam(
                "h",
                id(lsup.clone(), p.p2(annot(nil(), lr.clone())), p.p1(var(0))),
                expair(
                    nil(),
                    andpair(
                        refl(nil()),
                        impap(
                            ellist(var(1), sub_motive, sub_base, sub_step),
                            var(0),
                        ),
                    ),
                ),
            ),
        )
    };
    let zip_step = {
        // Step context: x (tail pack), y (head pair), ih, then l2. Literal
        // cons heads inside sort-checked targets are ascribed so the target
        // proposition stays inferable.
        let g_motive = Abs::new(
            vec!["w".into()],
            imp(
                id(
                    lsup.clone(),
                    p.p2(annot(cons(var(4), var(3)), lr.clone())),
                    p.p1(var(0)),
                ),
                exists(
                    "l3",
                    lr.clone(),
                    and(
                        id(
                            lsup.clone(),
                            p.p1(var(0)),
                            p.p1(annot(cons(var(5), var(4)), lr.clone())),
                        ),
                        id(lsup.clone(), p.p2(var(0)), p.p2(var(1))),
                    ),
                ),
            ),
        );
        let g_base = implam(
            "h",
            id(
                lsup.clone(),
                p.p2(annot(cons(var(3), var(2)), lr.clone())),
                p.p1(annot(nil(), lr.clone())),
            ),
            elbot(
                transport(&is_nil_fam(), sym_id(&lsup, var(0)), tt_proof()),
                exists(
                    "l3",
                    lr.clone(),
                    and(
                        id(
                            lsup.clone(),
                            p.p1(var(0)),
                            p.p1(annot(cons(var(5), var(4)), lr.clone())),
                        ),
                        id(
                            lsup.clone(),
                            p.p2(var(0)),
                            p.p2(annot(nil(), lr.clone())),
                        ),
                    ),
                ),
            ),
        );
        let g_step = {
            // Inside: s2 = 2, y2 = 1, ih2 = 0 over (x = 6, y = 5, ih = 4,
            // l2 = 3); under the implam h sits at 0 and everything shifts.
            let x = var(7);
            let y = var(6);
            let ih = var(5);
            let s2 = var(3);
            let h = var(0);
            let tl = cong_id(
                &lsup,
                &tail_fam(&c.support),
                &p.p2(x.clone()),
                h.clone(),
            );
            let hd = cong_id(
                &c.support,
                &head_fam(&c.support, &p.pi2(y.clone())),
                &p.pi2(y.clone()),
                h.clone(),
            );
            let exres = impap(faap(ih, s2.clone()), tl);
            // After opening the induction result: l3 = 1, q = 0.
            let fin = {
                let yy = var(8);
                let yy2 = var(4);
                let l3 = var(1);
                let q = var(0);
                let hd2 = hd.shifted(2);
                let famv = abs1(
                    "v",
                    c.eq_at(&p.pi1(yy.shifted(1)), &var(0)),
                );
                let step2 = transport(&famv, hd2, p.prel(yy.clone()));
                let dd = c.tra_at(
                    &p.pi1(yy.clone()),
                    &p.pi1(yy2.clone()),
                    &p.pi2(yy2.clone()),
                    &step2,
                    &p.prel(yy2.clone()),
                );
                let rr = pair(p.pi1(yy.clone()), pair(p.pi2(yy2.clone()), dd));
                let c1 = cong_id(
                    &lsup,
                    &abs1("v", cons(var(0), p.pi1(yy.shifted(1)))),
                    &cons(p.p1(l3.clone()), p.pi1(yy.clone())),
                    proj1(q.clone()),
                );
                let c2 = cong_id(
                    &lsup,
                    &abs1("v", cons(var(0), p.pi2(yy2.shifted(1)))),
                    &cons(p.p2(l3.clone()), p.pi2(yy2.clone())),
                    proj2(q),
                );
                expair(cons(l3, rr), andpair(c1, c2))
            };
            let goal = exists(
                "l3",
                lr.clone(),
                and(
                    id(
                        lsup.clone(),
                        p.p1(var(0)),
                        p.p1(annot(cons(var(8), var(7)), lr.clone())),
                    ),
                    id(
                        lsup.clone(),
                        p.p2(var(0)),
                        p.p2(annot(cons(var(4), var(3)), lr.clone())),
                    ),
                ),
            );
            abs3(
                "s2",
                "y2",
                "ih2",
                implam(
                    "h",
                    id(
                        lsup.clone(),
                        p.p2(cons(var(6), var(5))),
                        p.p1(cons(var(2), var(1))),
                    ),
                    elexists(exres, goal, abs2("l3", "q", fin)),
                ),
            )
        };
        abs3(
            "x",
            "y",
            "ih",
            falam(
                "l2",
                lr.clone(),
                ellist(var(0), g_motive, g_base, g_step),
            ),
        )
    };
    let tra_t = p.eq_at(&var(4), &var(2));
    let tra = Abs::new(
        vec!["z".into(), "z'".into(), "z''".into(), "u".into(), "v".into()],
        elexists(
            var(1),
            tra_t.clone(),
            abs2(
                "l1",
                "q1",
                elexists(
                    var(2),
                    tra_t.shifted(2),
                    abs2("l2", "q2", {
                        let l1 = var(3);
                        let q1 = var(2);
                        let l2 = var(1);
                        let q2 = var(0);
                        let mid = tra_id(
                            &lsup,
                            &p.p2(l1.clone()),
                            proj2(q1.clone()),
                            sym_id(&lsup, proj1(q2.clone())),
                        );
                        let zipped = impap(
                            faap(
                                ellist(
                                    l1,
                                    zip_motive.clone(),
                                    zip_base.clone(),
                                    zip_step.clone(),
                                ),
                                l2.clone(),
                            ),
                            mid,
                        );
                        elexists(
                            zipped,
                            tra_t.shifted(4),
                            abs2(
                                "l3",
                                "q",
                                expair(
                                    var(1),
                                    andpair(
                                        tra_id(
                                            &lsup,
                                            &p.p1(var(1)),
                                            proj1(var(0)),
                                            proj1(var(4)),
                                        ),
                                        tra_id(
                                            &lsup,
                                            &p.p2(var(1)),
                                            proj2(var(0)),
                                            proj2(var(2)),
                                        ),
                                    ),
                                ),
                            ),
                        )
                    }),
                ),
            ),
        ),
    );

    let obj = mk_setoid(lsup.clone(), eq, rfl, sym, tra, cfg)
        .map_err(|e| synth_of("list object", e))?;

    // The cons morphism out of List(C) x C.
    let dom = crate::limits::product(&obj, c, cfg)?;
    let fz = |z: Expr| dom.fst_at(z);
    let sz = |z: Expr| dom.snd_at(z);
    let cons_pr1 = abs3("z", "z'", "u", {
        let target = p.eq_at(
            &cons(fz(var(2)), sz(var(2))),
            &cons(fz(var(1)), sz(var(1))),
        );
        elexists(
            proj1(var(0)),
            target,
            abs2("lw", "pk", {
                let z = var(4);
                let zp = var(3);
                let u = var(2);
                let lw = var(1);
                let pk = var(0);
                let rr = pair(sz(z.clone()), pair(sz(zp.clone()), proj2(u)));
                let c1 = cong_id(
                    &lsup,
                    &abs1("v", cons(var(0), sz(z.shifted(1)))),
                    &cons(p.p1(lw.clone()), sz(z.clone())),
                    proj1(pk.clone()),
                );
                let c2 = cong_id(
                    &lsup,
                    &abs1("v", cons(var(0), sz(zp.shifted(1)))),
                    &cons(p.p2(lw.clone()), sz(zp.clone())),
                    proj2(pk),
                );
                expair(cons(lw, rr), andpair(c1, c2))
            }),
        )
    });
    let cons_m = ExtMorphism::new(
        dom.obj.clone(),
        obj.clone(),
        abs1("z", cons(fz(var(0)), sz(var(0)))),
        cons_pr1,
        cfg,
    )
    .map_err(|e| synth_of("cons", e))?;

    Ok(ListObject {
        obj,
        elem: c.clone(),
        cons_domain: dom,
        cons: cons_m,
    })
}

/// The simple recursor: given a target collection, a closed base element
/// and a step morphism `step : Z x C -> Z`, fold lists into `Z`.
pub fn list_recursor(
    lo: &ListObject,
    step_domain: &Product,
    base: Expr,
    step: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<ExtMorphism> {
    let z = &step.cod;
    if step.dom.support != step_domain.obj.support {
        return Err(SetoidError::InputInvalid(
            "the step morphism must be defined on the given product".into(),
        ));
    }
    let p = ListParts::new(&lo.elem);
    let rec = |l: Expr| {
        ellist(
            l,
            abs1("w", z.support.clone()),
            base.clone(),
            abs3(
                "x",
                "y",
                "w",
                step.at(&annot(
                    pair(var(0), var(1)),
                    step_domain.obj.support.clone(),
                )),
            ),
        )
    };
    // Compatibility: fold the witness list, using the step preservation at
    // every cons, then transport along the two projection identities.
    let lem_motive = abs1(
        "v",
        z.eq_at(&rec(p.p1(var(0))), &rec(p.p2(var(0)))),
    );
    let lem_base = z.rfl_at(&annot(base.clone(), z.support.clone()));
    let psup = &step_domain.obj.support;
    let lem_step = abs3("x", "y", "w", {
        let a1 = annot(pair(rec(p.p1(var(2))), p.pi1(var(1))), psup.clone());
        let a2 = annot(pair(rec(p.p2(var(2))), p.pi2(var(1))), psup.clone());
        step.pr1_at(
            &a1,
            &a2,
            &annot(
                andpair(var(0), p.prel(var(1))),
                step_domain.obj.eq_at(&a1, &a2),
            ),
        )
    });
    let pr1 = abs3("zl", "zl'", "u", {
        let target = z.eq_at(&rec(var(2)), &rec(var(1)));
        elexists(
            var(0),
            target,
            abs2("lw", "pk", {
                let lem = ellist(
                    var(1),
                    lem_motive.clone(),
                    lem_base.clone(),
                    lem_step.clone(),
                );
                let fam_l = abs1(
                    "v",
                    z.eq_at(&rec(var(0)), &rec(p.p2(var(2)))),
                );
                let t1 = transport(&fam_l, proj1(var(0)), lem);
                let fam_r = abs1("v", z.eq_at(&rec(var(5)), &rec(var(0))));
                transport(&fam_r, proj2(var(0)), t1)
            }),
        )
    });
    ExtMorphism::new(
        lo.obj.clone(),
        z.clone(),
        abs1("l", rec(var(0))),
        pr1,
        cfg,
    )
    .map_err(|e| synth_of("list recursor", e))
}
