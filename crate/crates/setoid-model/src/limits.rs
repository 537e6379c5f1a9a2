//! Terminal object, binary products and equalizers of extensional
//! collections, with mediating arrows and their uniqueness witnesses.

use crate::toolkit::{fst, snd, snd_dep};
use crate::{mk_setoid, ExtCollection, ExtMorphism, MorphismEq, Result, SetoidError};
use mtt_kernel::KernelConfig;
use syntax_core::build::*;
use syntax_core::{Abs, Expr};

/// The terminal extensional set: the singleton with propositional identity.
pub fn terminal(cfg: &KernelConfig) -> Result<ExtCollection> {
    ExtCollection::by_id(n1(), cfg)
}

/// The unique morphism from any collection into the terminal one.
pub fn bang(dom: &ExtCollection, cfg: &KernelConfig) -> Result<ExtMorphism> {
    ExtMorphism::new(
        dom.clone(),
        terminal(cfg)?,
        abs1("x", star()),
        abs3("x", "y", "u", refl(star())),
        cfg,
    )
}

/// Any morphism into the terminal collection equals the canonical one; the
/// witness eliminates the image into the identity with the star.
pub fn terminal_uniqueness(g: &ExtMorphism, cfg: &KernelConfig) -> Result<MorphismEq> {
    let pr2 = abs1(
        "x",
        eln1(
            g.at(&var(0)),
            abs1("z", id(n1(), var(0), star())),
            refl(star()),
        ),
    );
    MorphismEq::new(g.clone(), bang(&g.dom, cfg)?, pr2, cfg)
}

/// A binary product with its projections.
#[derive(Debug, Clone)]
pub struct Product {
    pub obj: ExtCollection,
    pub proj1: ExtMorphism,
    pub proj2: ExtMorphism,
}

impl Product {
    pub(crate) fn fst_at(&self, z: Expr) -> Expr {
        fst(&self.proj1.cod.support, z)
    }

    pub(crate) fn snd_at(&self, z: Expr) -> Expr {
        snd(&self.proj2.cod.support, z)
    }
}

/// The product of two extensional collections: pairs with componentwise
/// equality; the law proofs pair the component laws at the projections.
pub fn product(a: &ExtCollection, b: &ExtCollection, cfg: &KernelConfig) -> Result<Product> {
    let fa = |z: Expr| fst(&a.support, z);
    let sb = |z: Expr| snd(&b.support, z);
    let support = sigma("z", a.support.clone(), b.support.clone());
    let eq = Abs::new(
        vec!["z".into(), "z'".into()],
        and(
            a.eq_at(&fa(var(1)), &fa(var(0))),
            b.eq_at(&sb(var(1)), &sb(var(0))),
        ),
    );
    let rfl = abs1(
        "z",
        andpair(a.rfl_at(&fa(var(0))), b.rfl_at(&sb(var(0)))),
    );
    let sym = abs3(
        "z",
        "z'",
        "u",
        andpair(
            a.sym_at(&fa(var(2)), &fa(var(1)), &proj1(var(0))),
            b.sym_at(&sb(var(2)), &sb(var(1)), &proj2(var(0))),
        ),
    );
    let tra = Abs::new(
        vec!["z".into(), "z'".into(), "z''".into(), "u".into(), "v".into()],
        andpair(
            a.tra_at(
                &fa(var(4)),
                &fa(var(3)),
                &fa(var(2)),
                &proj1(var(1)),
                &proj1(var(0)),
            ),
            b.tra_at(
                &sb(var(4)),
                &sb(var(3)),
                &sb(var(2)),
                &proj2(var(1)),
                &proj2(var(0)),
            ),
        ),
    );
    let obj = mk_setoid(support, eq, rfl, sym, tra, cfg)
        .map_err(|e| synth_of("product", e))?;
    let proj1m = ExtMorphism::new(
        obj.clone(),
        a.clone(),
        abs1("z", fa(var(0))),
        abs3("z", "z'", "u", proj1(var(0))),
        cfg,
    )
    .map_err(|e| synth_of("product first projection", e))?;
    let proj2m = ExtMorphism::new(
        obj.clone(),
        b.clone(),
        abs1("z", sb(var(0))),
        abs3("z", "z'", "u", proj2(var(0))),
        cfg,
    )
    .map_err(|e| synth_of("product second projection", e))?;
    Ok(Product {
        obj,
        proj1: proj1m,
        proj2: proj2m,
    })
}

/// The mediating arrow `<f, g>` into a product.
pub fn pairing(
    p: &Product,
    f: &ExtMorphism,
    g: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<ExtMorphism> {
    if f.dom.support != g.dom.support {
        return Err(SetoidError::InputInvalid(
            "pairing needs a common domain".into(),
        ));
    }
    ExtMorphism::new(
        f.dom.clone(),
        p.obj.clone(),
        abs1("x", pair(f.at(&var(0)), g.at(&var(0)))),
        abs3(
            "x",
            "y",
            "u",
            andpair(
                f.pr1_at(&var(2), &var(1), &var(0)),
                g.pr1_at(&var(2), &var(1), &var(0)),
            ),
        ),
        cfg,
    )
    .map_err(|e| synth_of("product pairing", e))
}

/// `proj1 . <f, g> = f` and `proj2 . <f, g> = g`, definitionally up to the
/// computation rules for pairs.
pub fn pairing_beta(
    p: &Product,
    f: &ExtMorphism,
    g: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<(MorphismEq, MorphismEq)> {
    let med = pairing(p, f, g, cfg)?;
    let left = MorphismEq::new(
        ExtMorphism::compose(&p.proj1, &med)?,
        f.clone(),
        abs1("x", f.cod.rfl_at(&f.at(&var(0)))),
        cfg,
    )
    .map_err(|e| synth_of("first pairing triangle", e))?;
    let right = MorphismEq::new(
        ExtMorphism::compose(&p.proj2, &med)?,
        g.clone(),
        abs1("x", g.cod.rfl_at(&g.at(&var(0)))),
        cfg,
    )
    .map_err(|e| synth_of("second pairing triangle", e))?;
    Ok((left, right))
}

/// Uniqueness of the mediating arrow: any `h` into the product equals the
/// pairing of its composites with the projections.
pub fn pairing_unique(
    p: &Product,
    h: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<MorphismEq> {
    let f = ExtMorphism::compose(&p.proj1, h)?;
    let g = ExtMorphism::compose(&p.proj2, h)?;
    let med = pairing(p, &f, &g, cfg)?;
    let hx = crate::toolkit::annot(h.at(&var(0)), p.obj.support.clone());
    let pr2 = abs1(
        "x",
        andpair(
            p.proj1.cod.rfl_at(&p.fst_at(hx.clone())),
            p.proj2.cod.rfl_at(&p.snd_at(hx)),
        ),
    );
    MorphismEq::new(h.clone(), med, pr2, cfg).map_err(|e| synth_of("pairing uniqueness", e))
}

/// An equalizer with its (monic) embedding and the commuting witness.
#[derive(Debug, Clone)]
pub struct Equalizer {
    pub obj: ExtCollection,
    pub embed: ExtMorphism,
    pub commute: MorphismEq,
}

/// The equalizer of a parallel pair `f, g : A -> B`: the sub-collection of
/// elements of `A` together with a proof that the two images agree, compared
/// on first components only.
pub fn equalizer(f: &ExtMorphism, g: &ExtMorphism, cfg: &KernelConfig) -> Result<Equalizer> {
    if f.dom.support != g.dom.support || f.cod.support != g.cod.support {
        return Err(SetoidError::InputInvalid(
            "an equalizer needs a parallel pair".into(),
        ));
    }
    let a = &f.dom;
    let b = &f.cod;
    let fam = abs1("y", b.eq_at(&f.at(&var(0)), &g.at(&var(0))));
    let support = sigma("y", a.support.clone(), fam.body.as_ref().clone());
    let fa = |z: Expr| fst(&a.support, z);
    let eq = Abs::new(
        vec!["z".into(), "z'".into()],
        a.eq_at(&fa(var(1)), &fa(var(0))),
    );
    let rfl = abs1("z", a.rfl_at(&fa(var(0))));
    let sym = abs3(
        "z",
        "z'",
        "u",
        a.sym_at(&fa(var(2)), &fa(var(1)), &var(0)),
    );
    let tra = Abs::new(
        vec!["z".into(), "z'".into(), "z''".into(), "u".into(), "v".into()],
        a.tra_at(&fa(var(4)), &fa(var(3)), &fa(var(2)), &var(1), &var(0)),
    );
    let obj = mk_setoid(support, eq, rfl, sym, tra, cfg)
        .map_err(|e| synth_of("equalizer", e))?;
    let embed = ExtMorphism::new(
        obj.clone(),
        a.clone(),
        abs1("z", fa(var(0))),
        abs3("z", "z'", "u", var(0)),
        cfg,
    )
    .map_err(|e| synth_of("equalizer embedding", e))?;
    let fe = ExtMorphism::compose(f, &embed)?;
    let ge = ExtMorphism::compose(g, &embed)?;
    let commute = MorphismEq::new(
        fe,
        ge,
        abs1("z", snd_dep(&a.support, &fam, var(0))),
        cfg,
    )
    .map_err(|e| synth_of("equalizer commuting square", e))?;
    Ok(Equalizer { obj, embed, commute })
}

/// The mediating arrow into an equalizer from a fork `c` with commuting
/// witness `w : f . c = g . c`.
pub fn equalizer_mediate(
    e: &Equalizer,
    c: &ExtMorphism,
    w: &MorphismEq,
    cfg: &KernelConfig,
) -> Result<ExtMorphism> {
    ExtMorphism::new(
        c.dom.clone(),
        e.obj.clone(),
        abs1("x", pair(c.at(&var(0)), w.pr2.apply1(&var(0)))),
        abs3("x", "y", "u", c.pr1_at(&var(2), &var(1), &var(0))),
        cfg,
    )
    .map_err(|e| synth_of("equalizer mediating arrow", e))
}

/// Two arrows into an equalizer with equal composites along the embedding
/// are equal; the witness is inherited unchanged because equality in the
/// equalizer only compares the embedded components.
pub fn equalizer_unique(
    e: &Equalizer,
    h: &ExtMorphism,
    k: &ExtMorphism,
    w: &MorphismEq,
    cfg: &KernelConfig,
) -> Result<MorphismEq> {
    let _ = e;
    MorphismEq::new(h.clone(), k.clone(), w.pr2.clone(), cfg)
        .map_err(|err| synth_of("equalizer uniqueness", err))
}

pub(crate) fn synth_of(what: &str, e: SetoidError) -> SetoidError {
    match e {
        SetoidError::LawFails { law, source } => SetoidError::LawSynthesisFailed {
            obligation: format!("{what}: {law}"),
            source,
        },
        other => other,
    }
}
