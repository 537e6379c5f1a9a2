//! Dependent extensional types: families of setoids with substitution
//! morphisms, their total spaces, the equivalence with morphisms into the
//! base, pullbacks with stability witnesses, and dependent products.
//!
//! A dependent type carries, besides the fibrewise equivalence structure,
//! the substitution morphisms `sigma` along base equalities together with
//! the four laws that make them a groupoid action up to fibre equality:
//! preservation of fibre equality, proof irrelevance in the base proof,
//! the identity law and the composition law.

use crate::limits::{product, synth_of};
use crate::logic::PqProposition;
use crate::quotient::comprehension;
use crate::toolkit::{annot, fst, snd, snd_dep};
use crate::{
    check_term, mk_setoid, ExtCollection, ExtMorphism, MorphismEq, Result, SetoidError,
};
use mtt_kernel::{infer_sort, KernelConfig};
use syntax_core::build::*;
use syntax_core::{Abs, Context, Expr, Sort};

/// A dependent extensional type over a base collection.
///
/// Field arities (slot order):
/// * `fam`: 1 — the base element; gives the fibre support;
/// * `feq`: 3 — base element `x`, then the two compared fibre elements;
/// * `frfl`: 2 / `fsym`: 4 / `ftra`: 6 — the fibrewise equivalence laws,
///   each with the base element first;
/// * `sigma`: 4 — `x1`, `x2`, a proof of `eq(x1, x2)`, an element of the
///   fibre over `x1`; yields an element of the fibre over `x2`;
/// * `pres`: 6 — `x1`, `x2`, `d`, `y`, `y'`, a proof of `feq(x1, y, y')`;
///   proves that `sigma` preserves fibre equality;
/// * `irr`: 5 — `x1`, `x2`, `d1`, `d2`, `y`; proves `sigma` is irrelevant
///   in the base proof;
/// * `idl`: 2 — `x`, `y`; proves `sigma` along `rfl(x)` is the identity;
/// * `cmp`: 6 — `x1`, `x2`, `x3`, `d1`, `d2`, `y`; proves the two-step
///   substitution equals the one along the composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtDepType {
    pub base: ExtCollection,
    pub fam: Abs,
    pub feq: Abs,
    pub frfl: Abs,
    pub fsym: Abs,
    pub ftra: Abs,
    pub sigma: Abs,
    pub pres: Abs,
    pub irr: Abs,
    pub idl: Abs,
    pub cmp: Abs,
    /// Fibres are sets with small equality over a set base.
    pub is_set: bool,
}

impl ExtDepType {
    pub fn fam_at(&self, x: &Expr) -> Expr {
        self.fam.apply1(x)
    }

    pub fn feq_at(&self, x: &Expr, y: &Expr, y2: &Expr) -> Expr {
        self.feq.instantiate(&[x.clone(), y.clone(), y2.clone()])
    }

    pub fn frfl_at(&self, x: &Expr, y: &Expr) -> Expr {
        self.frfl.instantiate(&[x.clone(), y.clone()])
    }

    pub fn fsym_at(&self, x: &Expr, y: &Expr, y2: &Expr, u: &Expr) -> Expr {
        self.fsym
            .instantiate(&[x.clone(), y.clone(), y2.clone(), u.clone()])
    }

    pub fn ftra_at(&self, x: &Expr, y: &Expr, y2: &Expr, y3: &Expr, u: &Expr, v: &Expr) -> Expr {
        self.ftra.instantiate(&[
            x.clone(),
            y.clone(),
            y2.clone(),
            y3.clone(),
            u.clone(),
            v.clone(),
        ])
    }

    /// The substitution instantiated, ascribed with the target fibre so the
    /// result can head an eliminator even when it reduces to a canonical
    /// form.
    pub fn sigma_at(&self, x1: &Expr, x2: &Expr, d: &Expr, y: &Expr) -> Expr {
        annot(
            self.sigma
                .instantiate(&[x1.clone(), x2.clone(), d.clone(), y.clone()]),
            self.fam_at(x2),
        )
    }

    pub fn pres_at(&self, x1: &Expr, x2: &Expr, d: &Expr, y: &Expr, y2: &Expr, w: &Expr) -> Expr {
        self.pres.instantiate(&[
            x1.clone(),
            x2.clone(),
            d.clone(),
            y.clone(),
            y2.clone(),
            w.clone(),
        ])
    }

    pub fn irr_at(&self, x1: &Expr, x2: &Expr, d1: &Expr, d2: &Expr, y: &Expr) -> Expr {
        self.irr.instantiate(&[
            x1.clone(),
            x2.clone(),
            d1.clone(),
            d2.clone(),
            y.clone(),
        ])
    }

    pub fn idl_at(&self, x: &Expr, y: &Expr) -> Expr {
        self.idl.instantiate(&[x.clone(), y.clone()])
    }

    pub fn cmp_at(
        &self,
        x1: &Expr,
        x2: &Expr,
        x3: &Expr,
        d1: &Expr,
        d2: &Expr,
        y: &Expr,
    ) -> Expr {
        self.cmp.instantiate(&[
            x1.clone(),
            x2.clone(),
            x3.clone(),
            d1.clone(),
            d2.clone(),
            y.clone(),
        ])
    }

    /// Build and validate a dependent type: the family must be a fibrewise
    /// collection, the fibre equality a proposition, and all nine law
    /// proofs must kernel-check in their telescopes.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        base: ExtCollection,
        fam: Abs,
        feq: Abs,
        frfl: Abs,
        fsym: Abs,
        ftra: Abs,
        sigma: Abs,
        pres: Abs,
        irr: Abs,
        idl: Abs,
        cmp: Abs,
        cfg: &KernelConfig,
    ) -> Result<ExtDepType> {
        for (abs, arity, what) in [
            (&fam, 1, "family"),
            (&feq, 3, "fibre equality"),
            (&frfl, 2, "fibre reflexivity"),
            (&fsym, 4, "fibre symmetry"),
            (&ftra, 6, "fibre transitivity"),
            (&sigma, 4, "substitution"),
            (&pres, 6, "substitution preservation"),
            (&irr, 5, "substitution irrelevance"),
            (&idl, 2, "substitution identity"),
            (&cmp, 6, "substitution composition"),
        ] {
            if abs.arity() != arity {
                return Err(SetoidError::InputInvalid(format!(
                    "the {what} component must bind {arity} variables, found {}",
                    abs.arity()
                )));
            }
        }
        let d = ExtDepType {
            base,
            fam,
            feq,
            frfl,
            fsym,
            ftra,
            sigma,
            pres,
            irr,
            idl,
            cmp,
            is_set: false,
        };
        let a = &d.base;
        let sup = a.support.clone();
        let cx = Context::empty().extended("x", sup.clone());
        let fam_sort =
            infer_sort(&cx, &d.fam_at(&var(0)), cfg).map_err(SetoidError::SupportNotACol)?;
        let cfe = cx
            .extended("y", d.fam_at(&var(0)))
            .extended("y'", d.fam_at(&var(1)));
        let feq_sort = infer_sort(&cfe, &d.feq_at(&var(2), &var(1), &var(0)), cfg)
            .map_err(SetoidError::EqNotAProp)?;
        if !feq_sort.leq(Sort::Prop) {
            return Err(SetoidError::EqNotAProp(
                mtt_kernel::KernelError::SortTooSmall {
                    required: Sort::Prop,
                    found: feq_sort,
                },
            ));
        }
        let law = |law: &'static str, ctx: &Context, term: &Expr, ty: &Expr| {
            check_term(ctx, term, ty, cfg)
                .map_err(|source| SetoidError::LawFails { law, source })
        };
        let cfrfl = cx.extended("y", d.fam_at(&var(0)));
        law(
            "fibre reflexivity",
            &cfrfl,
            &d.frfl_at(&var(1), &var(0)),
            &d.feq_at(&var(1), &var(0), &var(0)),
        )?;
        let cfsym = cfe.extended("u", d.feq_at(&var(2), &var(1), &var(0)));
        law(
            "fibre symmetry",
            &cfsym,
            &d.fsym_at(&var(3), &var(2), &var(1), &var(0)),
            &d.feq_at(&var(3), &var(1), &var(2)),
        )?;
        let cftra = cfe
            .extended("y''", d.fam_at(&var(2)))
            .extended("u", d.feq_at(&var(3), &var(2), &var(1)))
            .extended("v", d.feq_at(&var(4), &var(2), &var(1)));
        law(
            "fibre transitivity",
            &cftra,
            &d.ftra_at(&var(5), &var(4), &var(3), &var(2), &var(1), &var(0)),
            &d.feq_at(&var(5), &var(4), &var(2)),
        )?;
        let csig = Context::empty()
            .extended("x1", sup.clone())
            .extended("x2", sup.clone())
            .extended("d", a.eq_at(&var(1), &var(0)))
            .extended("y", d.fam_at(&var(2)));
        law(
            "substitution",
            &csig,
            &d.sigma_at(&var(3), &var(2), &var(1), &var(0)),
            &d.fam_at(&var(2)),
        )?;
        let cpres = csig
            .extended("y'", d.fam_at(&var(3)))
            .extended("w", d.feq_at(&var(4), &var(1), &var(0)));
        law(
            "substitution preservation",
            &cpres,
            &d.pres_at(&var(5), &var(4), &var(3), &var(2), &var(1), &var(0)),
            &d.feq_at(
                &var(4),
                &d.sigma_at(&var(5), &var(4), &var(3), &var(2)),
                &d.sigma_at(&var(5), &var(4), &var(3), &var(1)),
            ),
        )?;
        let cirr = Context::empty()
            .extended("x1", sup.clone())
            .extended("x2", sup.clone())
            .extended("d1", a.eq_at(&var(1), &var(0)))
            .extended("d2", a.eq_at(&var(2), &var(1)))
            .extended("y", d.fam_at(&var(3)));
        law(
            "substitution irrelevance",
            &cirr,
            &d.irr_at(&var(4), &var(3), &var(2), &var(1), &var(0)),
            &d.feq_at(
                &var(3),
                &d.sigma_at(&var(4), &var(3), &var(2), &var(0)),
                &d.sigma_at(&var(4), &var(3), &var(1), &var(0)),
            ),
        )?;
        let cidl = cx.extended("y", d.fam_at(&var(0)));
        law(
            "substitution identity",
            &cidl,
            &d.idl_at(&var(1), &var(0)),
            &d.feq_at(
                &var(1),
                &d.sigma_at(&var(1), &var(1), &a.rfl_at(&var(1)), &var(0)),
                &var(0),
            ),
        )?;
        let ccmp = Context::empty()
            .extended("x1", sup.clone())
            .extended("x2", sup.clone())
            .extended("x3", sup)
            .extended("d1", a.eq_at(&var(2), &var(1)))
            .extended("d2", a.eq_at(&var(2), &var(1)))
            .extended("y", d.fam_at(&var(4)));
        law(
            "substitution composition",
            &ccmp,
            &d.cmp_at(&var(5), &var(4), &var(3), &var(2), &var(1), &var(0)),
            &d.feq_at(
                &var(3),
                &d.sigma_at(
                    &var(4),
                    &var(3),
                    &var(1),
                    &d.sigma_at(&var(5), &var(4), &var(2), &var(0)),
                ),
                &d.sigma_at(
                    &var(5),
                    &var(3),
                    &a.tra_at(&var(5), &var(4), &var(3), &var(2), &var(1)),
                    &var(0),
                ),
            ),
        )?;
        Ok(ExtDepType {
            is_set: d.base.is_set && fam_sort.leq(Sort::Set) && feq_sort == Sort::PropS,
            ..d
        })
    }
}

/// `feq(x2, sigma(d, sigma(sym d, y)), y)`: transporting back and forth
/// along the same base equality cancels, by composition, irrelevance and
/// the identity law.
fn sigma_cancel(b: &ExtDepType, x1: &Expr, x2: &Expr, d: &Expr, y: &Expr) -> Expr {
    let a = &b.base;
    let sd = a.sym_at(x1, x2, d);
    let yb = b.sigma_at(x2, x1, &sd, y);
    let tr = a.tra_at(x2, x1, x2, &sd, d);
    let c1 = b.cmp_at(x2, x1, x2, &sd, d, y);
    let i1 = b.irr_at(x2, x2, &tr, &a.rfl_at(x2), y);
    let l1 = b.idl_at(x2, y);
    let s_tr = b.sigma_at(x2, x2, &tr, y);
    let s_rfl = b.sigma_at(x2, x2, &a.rfl_at(x2), y);
    let inner = b.ftra_at(x2, &s_tr, &s_rfl, y, &i1, &l1);
    b.ftra_at(x2, &b.sigma_at(x1, x2, d, &yb), &s_tr, y, &c1, &inner)
}

/// The fibre of a dependent type over a closed point of the base.
pub fn dep_to_collection(b: &ExtDepType, x: &Expr, cfg: &KernelConfig) -> Result<ExtCollection> {
    let eq = Abs::new(
        vec!["y".into(), "y'".into()],
        b.feq.instantiate(&[x.shifted(2), var(1), var(0)]),
    );
    let rfl = abs1("y", b.frfl.instantiate(&[x.shifted(1), var(0)]));
    let sym = abs3(
        "y",
        "y'",
        "u",
        b.fsym.instantiate(&[x.shifted(3), var(2), var(1), var(0)]),
    );
    let tra = Abs::new(
        vec!["y".into(), "y'".into(), "y''".into(), "u".into(), "v".into()],
        b.ftra
            .instantiate(&[x.shifted(5), var(4), var(3), var(2), var(1), var(0)]),
    );
    mk_setoid(b.fam_at(x), eq, rfl, sym, tra, cfg).map_err(|e| synth_of("fibre collection", e))
}

/// The total space of a dependent type: pairs of a base point and a fibre
/// element, equal when the base points are equal by some proof along which
/// the fibre elements correspond.
pub fn total_space(b: &ExtDepType, cfg: &KernelConfig) -> Result<ExtCollection> {
    let a = &b.base;
    let asup = a.support.clone();
    let support = sigma("x", asup.clone(), b.fam.body.as_ref().clone());
    let fz = |z: Expr| fst(&asup, z);
    let sz = |z: Expr| snd_dep(&asup, &b.fam, z);
    let eq_at = |z: Expr, z2: Expr| {
        // The bound witness sits under one extra binder. The substitution
        // instance is ascribed so the fibre equality stays inferable even
        // when the substitution reduces to a canonical form.
        exists(
            "d",
            a.eq_at(&fz(z.clone()), &fz(z2.clone())),
            b.feq_at(
                &fz(z2.shifted(1)),
                &annot(
                    b.sigma_at(
                        &fz(z.shifted(1)),
                        &fz(z2.shifted(1)),
                        &var(0),
                        &sz(z.shifted(1)),
                    ),
                    b.fam_at(&fz(z2.shifted(1))),
                ),
                &sz(z2.shifted(1)),
            ),
        )
    };
    let eq = Abs::new(vec!["z".into(), "z'".into()], eq_at(var(1), var(0)));
    let rfl = abs1(
        "z",
        expair(
            a.rfl_at(&fz(var(0))),
            b.idl_at(&fz(var(0)), &sz(var(0))),
        ),
    );
    let sym = abs3("z", "z'", "u", {
        // After opening: z = 4, z' = 3, d = 1, e = 0.
        let x = fz(var(4));
        let x2 = fz(var(3));
        let y = sz(var(4));
        let y2 = sz(var(3));
        let d = var(1);
        let sd = a.sym_at(&x, &x2, &d);
        let s_dy = b.sigma_at(&x, &x2, &d, &y);
        let s_back = b.sigma_at(&x2, &x, &sd, &s_dy);
        let tr = a.tra_at(&x, &x2, &x, &d, &sd);
        let s_tr = b.sigma_at(&x, &x, &tr, &y);
        let s_rfl = b.sigma_at(&x, &x, &a.rfl_at(&x), &y);
        let s1 = b.pres_at(&x2, &x, &sd, &s_dy, &y2, &var(0));
        let s2 = b.cmp_at(&x, &x2, &x, &d, &sd, &y);
        let s3 = b.irr_at(&x, &x, &tr, &a.rfl_at(&x), &y);
        let s4 = b.idl_at(&x, &y);
        let t1 = b.ftra_at(&x, &s_tr, &s_rfl, &y, &s3, &s4);
        let t2 = b.ftra_at(&x, &s_back, &s_tr, &y, &s2, &t1);
        let t3 = b.fsym_at(&x, &s_back, &b.sigma_at(&x2, &x, &sd, &y2), &s1);
        let res = b.ftra_at(
            &x,
            &b.sigma_at(&x2, &x, &sd, &y2),
            &s_back,
            &y,
            &t3,
            &t2,
        );
        elexists(
            var(0),
            eq_at(var(1), var(2)),
            abs2("d", "e", expair(sd, res)),
        )
    });
    let tra = Abs::new(
        vec!["z".into(), "z'".into(), "z''".into(), "u".into(), "v".into()],
        elexists(
            var(1),
            eq_at(var(4), var(2)),
            abs2(
                "d1",
                "e1",
                elexists(var(2), eq_at(var(6), var(4)), abs2("d2", "e2", {
                    // z = 8, z' = 7, z'' = 6, d1 = 3, e1 = 2, d2 = 1, e2 = 0.
                    let x = fz(var(8));
                    let x2 = fz(var(7));
                    let x3 = fz(var(6));
                    let y = sz(var(8));
                    let y2 = sz(var(7));
                    let y3 = sz(var(6));
                    let (d1, e1, d2, e2) = (var(3), var(2), var(1), var(0));
                    let dt = a.tra_at(&x, &x2, &x3, &d1, &d2);
                    let s_d1 = b.sigma_at(&x, &x2, &d1, &y);
                    let s_21 = b.sigma_at(&x2, &x3, &d2, &s_d1);
                    let s_dt = b.sigma_at(&x, &x3, &dt, &y);
                    let s_d2y2 = b.sigma_at(&x2, &x3, &d2, &y2);
                    let c1 = b.cmp_at(&x, &x2, &x3, &d1, &d2, &y);
                    let p1 = b.pres_at(&x2, &x3, &d2, &s_d1, &y2, &e1);
                    let f1 = b.fsym_at(&x3, &s_21, &s_dt, &c1);
                    let inner = b.ftra_at(&x3, &s_21, &s_d2y2, &y3, &p1, &e2);
                    let res = b.ftra_at(&x3, &s_dt, &s_21, &y3, &f1, &inner);
                    expair(dt, res)
                })),
            ),
        ),
    );
    mk_setoid(support, eq, rfl, sym, tra, cfg).map_err(|e| synth_of("total space", e))
}

/// The projection of a total space onto its base.
pub fn dep_to_morphism(b: &ExtDepType, cfg: &KernelConfig) -> Result<ExtMorphism> {
    let a = &b.base;
    let total = total_space(b, cfg)?;
    let fz = |z: Expr| fst(&a.support, z);
    let pr1 = abs3(
        "z",
        "z'",
        "u",
        elexists(
            var(0),
            a.eq_at(&fz(var(2)), &fz(var(1))),
            abs2("d", "e", var(1)),
        ),
    );
    ExtMorphism::new(total, a.clone(), abs1("z", fz(var(0))), pr1, cfg)
        .map_err(|e| synth_of("total space projection", e))
}

/// Turn a morphism `f : C -> A` into the dependent type over `A` whose
/// fibre over `x` collects the elements of `C` mapped to `x`, compared by
/// the equality of `C`.
pub fn morphism_to_dep(f: &ExtMorphism, cfg: &KernelConfig) -> Result<ExtDepType> {
    let a = &f.cod;
    let c = &f.dom;
    let csup = c.support.clone();
    let fam = abs1(
        "x",
        sigma("y", csup.clone(), a.eq_at(&f.at(&var(0)), &var(1))),
    );
    let fy = |w: Expr| fst(&csup, w);
    // The proof component of a fibre element, at a given base point.
    let pf = |x: Expr, w: Expr| {
        snd_dep(
            &csup,
            &abs1("y", a.eq_at(&f.at(&var(0)), &x.shifted(1))),
            w,
        )
    };
    let feq = abs3(
        "x",
        "w",
        "w'",
        c.eq_at(&fy(var(1)), &fy(var(0))),
    );
    let frfl = Abs::new(vec!["x".into(), "w".into()], c.rfl_at(&fy(var(0))));
    let fsym = Abs::new(
        vec!["x".into(), "w".into(), "w'".into(), "u".into()],
        c.sym_at(&fy(var(2)), &fy(var(1)), &var(0)),
    );
    let ftra = Abs::new(
        vec![
            "x".into(),
            "w".into(),
            "w'".into(),
            "w''".into(),
            "u".into(),
            "v".into(),
        ],
        c.tra_at(&fy(var(4)), &fy(var(3)), &fy(var(2)), &var(1), &var(0)),
    );
    let sigma_m = Abs::new(
        vec!["x1".into(), "x2".into(), "d".into(), "w".into()],
        pair(
            fy(var(0)),
            a.tra_at(
                &f.at(&fy(var(0))),
                &var(3),
                &var(2),
                &pf(var(3), var(0)),
                &var(1),
            ),
        ),
    );
    let pres = Abs::new(
        vec![
            "x1".into(),
            "x2".into(),
            "d".into(),
            "w".into(),
            "w'".into(),
            "u".into(),
        ],
        var(0),
    );
    let irr = Abs::new(
        vec![
            "x1".into(),
            "x2".into(),
            "d1".into(),
            "d2".into(),
            "w".into(),
        ],
        c.rfl_at(&fy(var(0))),
    );
    let idl = Abs::new(vec!["x".into(), "w".into()], c.rfl_at(&fy(var(0))));
    let cmp = Abs::new(
        vec![
            "x1".into(),
            "x2".into(),
            "x3".into(),
            "d1".into(),
            "d2".into(),
            "w".into(),
        ],
        c.rfl_at(&fy(var(0))),
    );
    ExtDepType::new(
        a.clone(),
        fam,
        feq,
        frfl,
        fsym,
        ftra,
        sigma_m,
        pres,
        irr,
        idl,
        cmp,
        cfg,
    )
}

/// An isomorphism of extensional collections: two mutually inverse
/// morphisms with kernel-checked round-trip witnesses.
#[derive(Debug, Clone)]
pub struct DepIso {
    pub to: ExtMorphism,
    pub from: ExtMorphism,
    /// `from . to = id` on the left object.
    pub from_to: MorphismEq,
    /// `to . from = id` on the right object.
    pub to_from: MorphismEq,
}

/// Round trip of the morphism/dependent-type correspondence: the domain of
/// `f` is isomorphic to the total space of the dependent type built from
/// `f`.
pub fn roundtrip_iso(f: &ExtMorphism, cfg: &KernelConfig) -> Result<DepIso> {
    let a = &f.cod;
    let c = &f.dom;
    let csup = c.support.clone();
    let dep = morphism_to_dep(f, cfg)?;
    let total = total_space(&dep, cfg)?;
    let fy = |w: Expr| fst(&csup, w);
    let fz = |z: Expr| fst(&a.support, z);
    let sz = |z: Expr| snd_dep(&a.support, &dep.fam, z);
    let to = ExtMorphism::new(
        c.clone(),
        total.clone(),
        abs1(
            "y",
            pair(
                f.at(&var(0)),
                pair(var(0), a.rfl_at(&f.at(&var(0)))),
            ),
        ),
        abs3(
            "y",
            "y'",
            "u",
            expair(f.pr1_at(&var(2), &var(1), &var(0)), var(0)),
        ),
        cfg,
    )
    .map_err(|e| synth_of("round trip (into the total space)", e))?;
    let from = ExtMorphism::new(
        total.clone(),
        c.clone(),
        abs1("z", fy(sz(var(0)))),
        abs3(
            "z",
            "z'",
            "u",
            elexists(
                var(0),
                c.eq_at(&fy(sz(var(2))), &fy(sz(var(1)))),
                abs2("d", "e", var(0)),
            ),
        ),
        cfg,
    )
    .map_err(|e| synth_of("round trip (out of the total space)", e))?;
    let from_to = MorphismEq::new(
        ExtMorphism::compose(&from, &to)?,
        ExtMorphism::identity(c),
        abs1("y", c.rfl_at(&var(0))),
        cfg,
    )
    .map_err(|e| synth_of("round trip on the domain", e))?;
    // The witness that a fibre element is mapped to the base point.
    let pd = |z: Expr| {
        snd_dep(
            &csup,
            &abs1("y", a.eq_at(&f.at(&var(0)), &fz(z.clone()).shifted(1))),
            sz(z.clone()),
        )
    };
    let to_from = MorphismEq::new(
        ExtMorphism::compose(&to, &from)?,
        ExtMorphism::identity(&total),
        abs1(
            "z",
            expair(pd(var(0)), c.rfl_at(&fy(sz(var(0))))),
        ),
        cfg,
    )
    .map_err(|e| synth_of("round trip on the total space", e))?;
    Ok(DepIso {
        to,
        from,
        from_to,
        to_from,
    })
}

/// Pull a dependent type back along a morphism into its base; the
/// substitution morphisms are conjugated through the morphism's
/// preservation witness, with irrelevance bridging the proof mismatch in
/// the identity and composition laws.
pub fn pullback(b: &ExtDepType, delta: &ExtMorphism, cfg: &KernelConfig) -> Result<ExtDepType> {
    if delta.cod.support != b.base.support || delta.cod.eq != b.base.eq {
        return Err(SetoidError::InputInvalid(
            "the pullback morphism must target the dependent type's base".into(),
        ));
    }
    let a = &b.base;
    let dd = &delta.dom;
    let fam = abs1("w", b.fam.apply1(&delta.at(&var(0))));
    let feq = abs3(
        "w",
        "y",
        "y'",
        b.feq.instantiate(&[delta.at(&var(2)), var(1), var(0)]),
    );
    let frfl = Abs::new(
        vec!["w".into(), "y".into()],
        b.frfl.instantiate(&[delta.at(&var(1)), var(0)]),
    );
    let fsym = Abs::new(
        vec!["w".into(), "y".into(), "y'".into(), "u".into()],
        b.fsym
            .instantiate(&[delta.at(&var(3)), var(2), var(1), var(0)]),
    );
    let ftra = Abs::new(
        vec![
            "w".into(),
            "y".into(),
            "y'".into(),
            "y''".into(),
            "u".into(),
            "v".into(),
        ],
        b.ftra.instantiate(&[
            delta.at(&var(5)),
            var(4),
            var(3),
            var(2),
            var(1),
            var(0),
        ]),
    );
    let sigma_p = Abs::new(
        vec!["w1".into(), "w2".into(), "e".into(), "y".into()],
        b.sigma_at(
            &delta.at(&var(3)),
            &delta.at(&var(2)),
            &delta.pr1_at(&var(3), &var(2), &var(1)),
            &var(0),
        ),
    );
    let pres = Abs::new(
        vec![
            "w1".into(),
            "w2".into(),
            "e".into(),
            "y".into(),
            "y'".into(),
            "u".into(),
        ],
        b.pres_at(
            &delta.at(&var(5)),
            &delta.at(&var(4)),
            &delta.pr1_at(&var(5), &var(4), &var(3)),
            &var(2),
            &var(1),
            &var(0),
        ),
    );
    let irr = Abs::new(
        vec![
            "w1".into(),
            "w2".into(),
            "e1".into(),
            "e2".into(),
            "y".into(),
        ],
        b.irr_at(
            &delta.at(&var(4)),
            &delta.at(&var(3)),
            &delta.pr1_at(&var(4), &var(3), &var(2)),
            &delta.pr1_at(&var(4), &var(3), &var(1)),
            &var(0),
        ),
    );
    let idl = Abs::new(vec!["w".into(), "y".into()], {
        let x = delta.at(&var(1));
        let dr = delta.pr1_at(&var(1), &var(1), &dd.rfl_at(&var(1)));
        let i = b.irr_at(&x, &x, &dr, &a.rfl_at(&x), &var(0));
        let l = b.idl_at(&x, &var(0));
        b.ftra_at(
            &x,
            &b.sigma_at(&x, &x, &dr, &var(0)),
            &b.sigma_at(&x, &x, &a.rfl_at(&x), &var(0)),
            &var(0),
            &i,
            &l,
        )
    });
    let cmp = Abs::new(
        vec![
            "w1".into(),
            "w2".into(),
            "w3".into(),
            "e1".into(),
            "e2".into(),
            "y".into(),
        ],
        {
            let x1 = delta.at(&var(5));
            let x2 = delta.at(&var(4));
            let x3 = delta.at(&var(3));
            let d1 = delta.pr1_at(&var(5), &var(4), &var(2));
            let d2 = delta.pr1_at(&var(4), &var(3), &var(1));
            let at = a.tra_at(&x1, &x2, &x3, &d1, &d2);
            let dt = delta.pr1_at(
                &var(5),
                &var(3),
                &dd.tra_at(&var(5), &var(4), &var(3), &var(2), &var(1)),
            );
            let q = b.cmp_at(&x1, &x2, &x3, &d1, &d2, &var(0));
            let i = b.irr_at(&x1, &x3, &at, &dt, &var(0));
            b.ftra_at(
                &x3,
                &b.sigma_at(&x2, &x3, &d2, &b.sigma_at(&x1, &x2, &d1, &var(0))),
                &b.sigma_at(&x1, &x3, &at, &var(0)),
                &b.sigma_at(&x1, &x3, &dt, &var(0)),
                &q,
                &i,
            )
        },
    );
    ExtDepType::new(
        dd.clone(),
        fam,
        feq,
        frfl,
        fsym,
        ftra,
        sigma_p,
        pres,
        irr,
        idl,
        cmp,
        cfg,
    )
}

/// Stability of the total-space projection under pullback: the total space
/// of the pulled-back dependent type is isomorphic to the comprehension-
/// style pullback object of the projection along the morphism, with both
/// directions and both round trips kernel-checked.
pub fn pullback_stability(
    b: &ExtDepType,
    delta: &ExtMorphism,
    cfg: &KernelConfig,
) -> Result<DepIso> {
    let a = &b.base;
    let dd = &delta.dom;
    let dsup = dd.support.clone();
    let pb = pullback(b, delta, cfg)?;
    let left = total_space(&pb, cfg)?;
    let tb = total_space(b, cfg)?;
    let tbsup = tb.support.clone();
    let fz_tb = |t: Expr| fst(&a.support, t);
    let sz_tb = |t: Expr| snd_dep(&a.support, &b.fam, t);
    // The pullback object: pairs in D x (total space) whose images in the
    // base agree, built as a comprehension over the product.
    let prod = product(dd, &tb, cfg)?;
    let prodsup = prod.obj.support.clone();
    let pi = dep_to_morphism(b, cfg)?;
    let w_of = |p: Expr| fst(&dsup, p);
    let t_of = |p: Expr| snd(&tbsup, p);
    let prop = abs1(
        "p",
        a.eq_at(&delta.at(&w_of(var(0))), &fz_tb(t_of(var(0)))),
    );
    let ps = abs3("p", "p'", "u", {
        let h = a.eq_at(&delta.at(&w_of(var(2))), &fz_tb(t_of(var(2))));
        implam("h", h, {
            // p = 3, p' = 2, u = 1, h = 0.
            let dl = delta.at(&w_of(var(3)));
            let dl2 = delta.at(&w_of(var(2)));
            let tl = fz_tb(t_of(var(3)));
            let tl2 = fz_tb(t_of(var(2)));
            let s = a.sym_at(
                &dl,
                &dl2,
                &delta.pr1_at(&w_of(var(3)), &w_of(var(2)), &proj1(var(1))),
            );
            let t1 = a.tra_at(&dl2, &dl, &tl, &s, &var(0));
            let t2 = pi.pr1_at(&t_of(var(3)), &t_of(var(2)), &proj2(var(1)));
            a.tra_at(&dl2, &tl, &tl2, &t1, &t2)
        })
    });
    let pred = PqProposition::new(prod.obj.clone(), prop, ps, cfg)?;
    let right = comprehension(&pred, cfg)?.obj;
    // Accessors into the pullback object.
    let pr_of = |r: Expr| fst(&prodsup, r);
    let q_of = |r: Expr| {
        snd_dep(
            &prodsup,
            &abs1(
                "p",
                a.eq_at(&delta.at(&w_of(var(0))), &fz_tb(t_of(var(0)))),
            ),
            r,
        )
    };
    let w1 = |r: Expr| w_of(pr_of(r));
    let t1 = |r: Expr| t_of(pr_of(r));
    // Accessors into the total space of the pullback.
    let wz = |z: Expr| fst(&dsup, z);
    let yz = |z: Expr| snd_dep(&dsup, &pb.fam, z);
    let to_term = abs1("z", {
        let inner = annot(
            pair(delta.at(&wz(var(0))), yz(var(0))),
            tbsup.clone(),
        );
        annot(
            pair(
                annot(pair(wz(var(0)), inner), prodsup.clone()),
                a.rfl_at(&delta.at(&wz(var(0)))),
            ),
            right.support.clone(),
        )
    });
    let to_pr1 = abs3("z", "z'", "u", {
        // Open the total-space witness: z = 4, z' = 3, e = 1, g = 0.
        elexists(
            var(0),
            right.eq_at(
                &to_body_at(&to_term, var(2)),
                &to_body_at(&to_term, var(1)),
            ),
            abs2(
                "e",
                "g",
                andpair(
                    var(1),
                    expair(
                        delta.pr1_at(&wz(var(4)), &wz(var(3)), &var(1)),
                        var(0),
                    ),
                ),
            ),
        )
    });
    let to = ExtMorphism::new(left.clone(), right.clone(), to_term, to_pr1, cfg)
        .map_err(|e| synth_of("pullback stability (into the pullback)", e))?;
    let from_term = abs1("z", {
        let r = var(0);
        annot(
            pair(
                w1(r.clone()),
                b.sigma_at(
                    &fz_tb(t1(r.clone())),
                    &delta.at(&w1(r.clone())),
                    &a.sym_at(&delta.at(&w1(r.clone())), &fz_tb(t1(r.clone())), &q_of(r.clone())),
                    &sz_tb(t1(r)),
                ),
            ),
            left.support.clone(),
        )
    });
    let from_pr1 = abs3("r", "r'", "u", {
        let target = left.eq_at(
            &to_body_at(&from_term, var(2)),
            &to_body_at(&from_term, var(1)),
        );
        elexists(proj2(var(0)), target, abs2("d", "g", {
            // r = 4, r' = 3, u = 2, d = 1, g = 0.
            let r = var(4);
            let r2 = var(3);
            let xa = fz_tb(t1(r.clone()));
            let xa2 = fz_tb(t1(r2.clone()));
            let xb = delta.at(&w1(r.clone()));
            let xb2 = delta.at(&w1(r2.clone()));
            let y0 = sz_tb(t1(r.clone()));
            let y02 = sz_tb(t1(r2.clone()));
            let s = a.sym_at(&xb, &xa, &q_of(r.clone()));
            let s2 = a.sym_at(&xb2, &xa2, &q_of(r2.clone()));
            let e = delta.pr1_at(&w1(r.clone()), &w1(r2.clone()), &proj1(var(2)));
            let tr_se = a.tra_at(&xa, &xb, &xb2, &s, &e);
            let tr_ds = a.tra_at(&xa, &xa2, &xb2, &var(1), &s2);
            let a1 = b.sigma_at(&xb, &xb2, &e, &b.sigma_at(&xa, &xb, &s, &y0));
            let a2 = b.sigma_at(&xa, &xb2, &tr_se, &y0);
            let a3 = b.sigma_at(&xa, &xb2, &tr_ds, &y0);
            let a4 = b.sigma_at(&xa2, &xb2, &s2, &b.sigma_at(&xa, &xa2, &var(1), &y0));
            let a5 = b.sigma_at(&xa2, &xb2, &s2, &y02);
            let k1 = b.cmp_at(&xa, &xb, &xb2, &s, &e, &y0);
            let k2 = b.irr_at(&xa, &xb2, &tr_se, &tr_ds, &y0);
            let k3 = b.fsym_at(&xb2, &a4, &a3, &b.cmp_at(&xa, &xa2, &xb2, &var(1), &s2, &y0));
            let k4 = b.pres_at(
                &xa2,
                &xb2,
                &s2,
                &b.sigma_at(&xa, &xa2, &var(1), &y0),
                &y02,
                &var(0),
            );
            let res = b.ftra_at(
                &xb2,
                &a1,
                &a2,
                &a5,
                &k1,
                &b.ftra_at(&xb2, &a2, &a3, &a5, &k2, &b.ftra_at(&xb2, &a3, &a4, &a5, &k3, &k4)),
            );
            expair(proj1(var(2)), res)
        }))
    });
    let from = ExtMorphism::new(right.clone(), left.clone(), from_term, from_pr1, cfg)
        .map_err(|e| synth_of("pullback stability (out of the pullback)", e))?;
    let from_to = MorphismEq::new(
        ExtMorphism::compose(&from, &to)?,
        ExtMorphism::identity(&left),
        abs1("z", {
            let x = delta.at(&wz(var(0)));
            let y = yz(var(0));
            let sr = a.sym_at(&x, &x, &a.rfl_at(&x));
            let e = delta.pr1_at(&wz(var(0)), &wz(var(0)), &dd.rfl_at(&wz(var(0))));
            let tr = a.tra_at(&x, &x, &x, &sr, &e);
            let a1 = b.sigma_at(&x, &x, &e, &b.sigma_at(&x, &x, &sr, &y));
            let a2 = b.sigma_at(&x, &x, &tr, &y);
            let a3 = b.sigma_at(&x, &x, &a.rfl_at(&x), &y);
            let j1 = b.cmp_at(&x, &x, &x, &sr, &e, &y);
            let j2 = b.irr_at(&x, &x, &tr, &a.rfl_at(&x), &y);
            let j3 = b.idl_at(&x, &y);
            let res = b.ftra_at(
                &x,
                &a1,
                &a2,
                &y,
                &j1,
                &b.ftra_at(&x, &a2, &a3, &y, &j2, &j3),
            );
            expair(dd.rfl_at(&wz(var(0))), res)
        }),
        cfg,
    )
    .map_err(|e| synth_of("pullback stability round trip (total space)", e))?;
    let to_from = MorphismEq::new(
        ExtMorphism::compose(&to, &from)?,
        ExtMorphism::identity(&right),
        abs1("r", {
            let r = var(0);
            let xa = fz_tb(t1(r.clone()));
            let xb = delta.at(&w1(r.clone()));
            let q = q_of(r.clone());
            let y0 = sz_tb(t1(r.clone()));
            let s = a.sym_at(&xb, &xa, &q);
            let tr = a.tra_at(&xa, &xb, &xa, &s, &q);
            let a1 = b.sigma_at(&xb, &xa, &q, &b.sigma_at(&xa, &xb, &s, &y0));
            let a2 = b.sigma_at(&xa, &xa, &tr, &y0);
            let a3 = b.sigma_at(&xa, &xa, &a.rfl_at(&xa), &y0);
            let j1 = b.cmp_at(&xa, &xb, &xa, &s, &q, &y0);
            let j2 = b.irr_at(&xa, &xa, &tr, &a.rfl_at(&xa), &y0);
            let j3 = b.idl_at(&xa, &y0);
            let res = b.ftra_at(
                &xa,
                &a1,
                &a2,
                &y0,
                &j1,
                &b.ftra_at(&xa, &a2, &a3, &y0, &j2, &j3),
            );
            andpair(dd.rfl_at(&w1(r)), expair(q, res))
        }),
        cfg,
    )
    .map_err(|e| synth_of("pullback stability round trip (pullback object)", e))?;
    Ok(DepIso {
        to,
        from,
        from_to,
        to_from,
    })
}

/// Apply a morphism's underlying 1-ary term to an expression. Used to state
/// equalities between composite images without re-deriving their shape.
fn to_body_at(term: &Abs, x: Expr) -> Expr {
    term.apply1(&x)
}

/// The power collection of an extensional set: small-propositional
/// functions on the support, compared by pointwise logical equivalence.
pub fn powerset(b: &ExtCollection, cfg: &KernelConfig) -> Result<ExtCollection> {
    if !b.is_set {
        return Err(SetoidError::NotAnExtSet(
            "the power collection exists over extensional sets only".into(),
        ));
    }
    let bsup = b.support.clone();
    let fsup = fun_props(bsup.clone());
    // Support: propositional functions respecting the equality of the base.
    let respects = forall(
        "y1",
        bsup.clone(),
        forall(
            "y2",
            bsup.clone(),
            imp(
                b.eq_at(&var(1), &var(0)),
                and(
                    imp(ap(var(2), var(1)), ap(var(2), var(0))),
                    imp(ap(var(2), var(0)), ap(var(2), var(1))),
                ),
            ),
        ),
    );
    let support = sigma("h", fsup.clone(), respects);
    let fh = |u: Expr| fst(&fsup, u);
    let iff_at = |u: Expr, v: Expr, y: Expr| {
        and(
            imp(ap(fh(u.clone()), y.clone()), ap(fh(v.clone()), y.clone())),
            imp(ap(fh(v), y.clone()), ap(fh(u), y)),
        )
    };
    let eq = Abs::new(
        vec!["u".into(), "v".into()],
        forall("y", bsup.clone(), iff_at(var(2), var(1), var(0))),
    );
    let rfl = abs1(
        "u",
        falam("y", bsup.clone(), {
            let p = ap(fh(var(1)), var(0));
            andpair(implam("w", p.clone(), var(0)), implam("w", p, var(0)))
        }),
    );
    let sym = abs3(
        "u",
        "v",
        "w",
        falam(
            "y",
            bsup.clone(),
            andpair(proj2(faap(var(1), var(0))), proj1(faap(var(1), var(0)))),
        ),
    );
    let tra = Abs::new(
        vec!["u".into(), "v".into(), "w".into(), "p".into(), "q".into()],
        falam("y", bsup, {
            // u = 5, w = 3, p = 2, q = 1, y = 0.
            let forward = implam("h", ap(fh(var(5)), var(0)), {
                impap(
                    proj1(faap(var(2), var(1))),
                    impap(proj1(faap(var(3), var(1))), var(0)),
                )
            });
            let backward = implam("h", ap(fh(var(3)), var(0)), {
                impap(
                    proj2(faap(var(3), var(1))),
                    impap(proj2(faap(var(2), var(1))), var(0)),
                )
            });
            andpair(forward, backward)
        }),
    );
    mk_setoid(support, eq, rfl, sym, tra, cfg).map_err(|e| synth_of("power collection", e))
}

/// A dependent product with its application and abstraction builders.
#[derive(Debug, Clone)]
pub struct DependentProduct {
    pub obj: ExtDepType,
    b: ExtDepType,
    c: ExtDepType,
    tb: ExtCollection,
}

/// The dependent product of `c` (a dependent type over the total space of
/// `b`) along `b` (a dependent type over `A`): the dependent type over `A`
/// whose fibre collects the fibrewise functions that respect fibre
/// equality, compared pointwise. In the theory without dependent product
/// collections this is only permitted when everything is set-sized.
pub fn dependent_product(
    b: &ExtDepType,
    c: &ExtDepType,
    cfg: &KernelConfig,
) -> Result<DependentProduct> {
    let tb = total_space(b, cfg)?;
    if c.base.support != tb.support || c.base.eq != tb.eq {
        return Err(SetoidError::InputInvalid(
            "the fibre family must live over the total space of the index family".into(),
        ));
    }
    if !cfg.theory.has_dependent_products() && !(b.is_set && c.is_set) {
        return Err(SetoidError::ModeViolation(
            "collection-level dependent products need the extension with dependent product \
             collections; only set-sized instances are available otherwise"
                .into(),
        ));
    }
    // With the extension, lambdas over collections are legal, so ascriptions
    // may guard collection-typed subterms as well.
    let _col = cfg
        .theory
        .has_dependent_products()
        .then(crate::toolkit::allow_col_ascriptions);
    let parts = DpParts {
        b: b.clone(),
        c: c.clone(),
        tb: tb.clone(),
    };
    let a = &b.base;
    let fam = abs1(
        "x",
        sigma("h", parts.pith(&var(0)), parts.good(&var(1), &var(0))),
    );
    let feq = abs3(
        "x",
        "z",
        "z'",
        forall(
            "y",
            b.fam_at(&var(2)),
            c.feq_at(
                &parts.point(&var(3), &var(0)),
                &ap(parts.fh(&var(3), &var(2)), var(0)),
                &ap(parts.fh(&var(3), &var(1)), var(0)),
            ),
        ),
    );
    let frfl = Abs::new(
        vec!["x".into(), "z".into()],
        falam(
            "y",
            b.fam_at(&var(1)),
            c.frfl_at(
                &parts.point(&var(2), &var(0)),
                &ap(parts.fh(&var(2), &var(1)), var(0)),
            ),
        ),
    );
    let fsym = Abs::new(
        vec!["x".into(), "z".into(), "z'".into(), "u".into()],
        falam(
            "y",
            b.fam_at(&var(3)),
            c.fsym_at(
                &parts.point(&var(4), &var(0)),
                &ap(parts.fh(&var(4), &var(3)), var(0)),
                &ap(parts.fh(&var(4), &var(2)), var(0)),
                &faap(var(1), var(0)),
            ),
        ),
    );
    let ftra = Abs::new(
        vec![
            "x".into(),
            "z".into(),
            "z'".into(),
            "z''".into(),
            "u".into(),
            "v".into(),
        ],
        falam(
            "y",
            b.fam_at(&var(5)),
            c.ftra_at(
                &parts.point(&var(6), &var(0)),
                &ap(parts.fh(&var(6), &var(5)), var(0)),
                &ap(parts.fh(&var(6), &var(4)), var(0)),
                &ap(parts.fh(&var(6), &var(3)), var(0)),
                &faap(var(2), var(0)),
                &faap(var(1), var(0)),
            ),
        ),
    );
    let sigma_pi = Abs::new(
        vec!["x1".into(), "x2".into(), "d".into(), "z".into()],
        pair(
            parts.reindexed_fun(&var(3), &var(2), &var(1), &var(0)),
            parts.reindexed_good(&var(3), &var(2), &var(1), &var(0)),
        ),
    );
    let pres = Abs::new(
        vec![
            "x1".into(),
            "x2".into(),
            "d".into(),
            "z".into(),
            "z'".into(),
            "w".into(),
        ],
        falam("y", b.fam_at(&var(4)), {
            // x1 = 6, x2 = 5, d = 4, z = 3, z' = 2, w = 1, y = 0.
            let (x1, x2, d, y) = (var(6), var(5), var(4), var(0));
            let yb = parts.back(&x1, &x2, &d, &y);
            let e = parts.path(&x1, &x2, &d, &y);
            let ta = parts.point(&x1, &yb);
            let tc = parts.point(&x2, &y);
            c.pres_at(
                &ta,
                &tc,
                &e,
                &ap(parts.fh(&x1, &var(3)), yb.clone()),
                &ap(parts.fh(&x1, &var(2)), yb.clone()),
                &faap(var(1), yb),
            )
        }),
    );
    let irr = Abs::new(
        vec![
            "x1".into(),
            "x2".into(),
            "d1".into(),
            "d2".into(),
            "z".into(),
        ],
        falam("y", b.fam_at(&var(3)), {
            // x1 = 5, x2 = 4, d1 = 3, d2 = 2, z = 1, y = 0.
            let (x1, x2, d1, d2, z, y) = (var(5), var(4), var(3), var(2), var(1), var(0));
            let sa = parts.back(&x1, &x2, &d1, &y);
            let sb = parts.back(&x1, &x2, &d2, &y);
            let j = b.irr_at(
                &x2,
                &x1,
                &b.base.sym_at(&x1, &x2, &d1),
                &b.base.sym_at(&x1, &x2, &d2),
                &y,
            );
            let h = parts.fh(&x1, &z);
            let hsa = ap(h.clone(), sa.clone());
            let hsb = ap(h, sb.clone());
            let p_j = parts.pair_eq(&x1, &sa, &sb, &j);
            let g = impap(
                faap(faap(parts.gd(&x1, &z), sa.clone()), sb.clone()),
                j,
            );
            let ta = parts.point(&x1, &sa);
            let ta2 = parts.point(&x1, &sb);
            let tc = parts.point(&x2, &y);
            let e1 = parts.path(&x1, &x2, &d1, &y);
            let e2 = parts.path(&x1, &x2, &d2, &y);
            let tbt = parts.tb.tra_at(&ta, &ta2, &tc, &p_j, &e2);
            let a1 = c.sigma_at(&ta, &tc, &e1, &hsa);
            let a2 = c.sigma_at(&ta, &tc, &tbt, &hsa);
            let a3 = c.sigma_at(&ta2, &tc, &e2, &c.sigma_at(&ta, &ta2, &p_j, &hsa));
            let a4 = c.sigma_at(&ta2, &tc, &e2, &hsb);
            let n1 = c.irr_at(&ta, &tc, &e1, &tbt, &hsa);
            let n2 = c.fsym_at(&tc, &a3, &a2, &c.cmp_at(&ta, &ta2, &tc, &p_j, &e2, &hsa));
            let n3 = c.pres_at(
                &ta2,
                &tc,
                &e2,
                &c.sigma_at(&ta, &ta2, &p_j, &hsa),
                &hsb,
                &g,
            );
            c.ftra_at(
                &tc,
                &a1,
                &a2,
                &a4,
                &n1,
                &c.ftra_at(&tc, &a2, &a3, &a4, &n2, &n3),
            )
        }),
    );
    let idl = Abs::new(
        vec!["x".into(), "z".into()],
        falam("y", b.fam_at(&var(1)), {
            // x = 2, z = 1, y = 0.
            let (x, z, y) = (var(2), var(1), var(0));
            let r = a.rfl_at(&x);
            let ys = parts.back(&x, &x, &r, &y);
            let i = b.irr_at(&x, &x, &a.sym_at(&x, &x, &r), &r, &y);
            let l = b.idl_at(&x, &y);
            let dfib = b.ftra_at(
                &x,
                &ys,
                &b.sigma_at(&x, &x, &r, &y),
                &y,
                &i,
                &l,
            );
            let h = parts.fh(&x, &z);
            let hys = ap(h.clone(), ys.clone());
            let g = impap(faap(faap(parts.gd(&x, &z), ys.clone()), y.clone()), dfib.clone());
            let e = parts.path(&x, &x, &r, &y);
            let p = parts.pair_eq(&x, &ys, &y, &dfib);
            let t0 = parts.point(&x, &ys);
            let tc = parts.point(&x, &y);
            let k1 = c.irr_at(&t0, &tc, &e, &p, &hys);
            c.ftra_at(
                &tc,
                &c.sigma_at(&t0, &tc, &e, &hys),
                &c.sigma_at(&t0, &tc, &p, &hys),
                &ap(h, y),
                &k1,
                &g,
            )
        }),
    );
    let cmp = Abs::new(
        vec![
            "x1".into(),
            "x2".into(),
            "x3".into(),
            "d1".into(),
            "d2".into(),
            "z".into(),
        ],
        falam("y", b.fam_at(&var(3)), {
            // x1 = 6, x2 = 5, x3 = 4, d1 = 3, d2 = 2, z = 1, y = 0.
            let (x1, x2, x3, d1, d2, z, y) =
                (var(6), var(5), var(4), var(3), var(2), var(1), var(0));
            let sd1 = a.sym_at(&x1, &x2, &d1);
            let sd2 = a.sym_at(&x2, &x3, &d2);
            let yp = parts.back(&x2, &x3, &d2, &y);
            let ya = b.sigma_at(&x2, &x1, &sd1, &yp);
            let dtra = a.tra_at(&x1, &x2, &x3, &d1, &d2);
            let sdt = a.sym_at(&x1, &x3, &dtra);
            let ybm = b.sigma_at(&x3, &x1, &sdt, &y);
            let back_tr = a.tra_at(&x3, &x2, &x1, &sd2, &sd1);
            let q1 = b.cmp_at(&x3, &x2, &x1, &sd2, &sd1, &y);
            let q2 = b.irr_at(&x3, &x1, &back_tr, &sdt, &y);
            let dfib = b.ftra_at(
                &x1,
                &ya,
                &b.sigma_at(&x3, &x1, &back_tr, &y),
                &ybm,
                &q1,
                &q2,
            );
            let h = parts.fh(&x1, &z);
            let hya = ap(h.clone(), ya.clone());
            let hybm = ap(h, ybm.clone());
            let g = impap(
                faap(faap(parts.gd(&x1, &z), ya.clone()), ybm.clone()),
                dfib.clone(),
            );
            let ta = parts.point(&x1, &ya);
            let tm = parts.point(&x2, &yp);
            let tc = parts.point(&x3, &y);
            let ta2 = parts.point(&x1, &ybm);
            let e1 = parts.path(&x1, &x2, &d1, &yp);
            let e2 = parts.path(&x2, &x3, &d2, &y);
            let et = parts.path(&x1, &x3, &dtra, &y);
            let p = parts.pair_eq(&x1, &ya, &ybm, &dfib);
            let tb1 = parts.tb.tra_at(&ta, &tm, &tc, &e1, &e2);
            let tb2 = parts.tb.tra_at(&ta, &ta2, &tc, &p, &et);
            let a1 = c.sigma_at(&tm, &tc, &e2, &c.sigma_at(&ta, &tm, &e1, &hya));
            let a2 = c.sigma_at(&ta, &tc, &tb1, &hya);
            let a3 = c.sigma_at(&ta, &tc, &tb2, &hya);
            let a4 = c.sigma_at(&ta2, &tc, &et, &c.sigma_at(&ta, &ta2, &p, &hya));
            let a5 = c.sigma_at(&ta2, &tc, &et, &hybm);
            let w1 = c.cmp_at(&ta, &tm, &tc, &e1, &e2, &hya);
            let w2 = c.irr_at(&ta, &tc, &tb1, &tb2, &hya);
            let w3 = c.fsym_at(&tc, &a4, &a3, &c.cmp_at(&ta, &ta2, &tc, &p, &et, &hya));
            let w4 = c.pres_at(
                &ta2,
                &tc,
                &et,
                &c.sigma_at(&ta, &ta2, &p, &hya),
                &hybm,
                &g,
            );
            c.ftra_at(
                &tc,
                &a1,
                &a2,
                &a5,
                &w1,
                &c.ftra_at(
                    &tc,
                    &a2,
                    &a3,
                    &a5,
                    &w2,
                    &c.ftra_at(&tc, &a3, &a4, &a5, &w3, &w4),
                ),
            )
        }),
    );
    let obj = ExtDepType::new(
        a.clone(),
        fam,
        feq,
        frfl,
        fsym,
        ftra,
        sigma_pi,
        pres,
        irr,
        idl,
        cmp,
        cfg,
    )?;
    Ok(DependentProduct {
        obj,
        b: b.clone(),
        c: c.clone(),
        tb,
    })
}

/// Shared term plumbing for the dependent-product construction.
struct DpParts {
    b: ExtDepType,
    c: ExtDepType,
    tb: ExtCollection,
}

impl DpParts {
    /// The total-space point `<x, y>`, ascribed so projections of it infer.
    fn point(&self, x: &Expr, y: &Expr) -> Expr {
        annot(pair(x.clone(), y.clone()), self.tb.support.clone())
    }

    /// The fibrewise function type over `x`.
    fn pith(&self, x: &Expr) -> Expr {
        pi(
            "y",
            self.b.fam_at(x),
            self.c.fam_at(&self.point(&x.shifted(1), &var(0))),
        )
    }

    /// The function component of a dependent-product element.
    fn fh(&self, x: &Expr, z: &Expr) -> Expr {
        fst(&self.pith(x), z.clone())
    }

    /// The respect component of a dependent-product element.
    fn gd(&self, x: &Expr, z: &Expr) -> Expr {
        let cod = abs1("h", self.good(&x.shifted(1), &var(0)));
        snd_dep(&self.pith(x), &cod, z.clone())
    }

    /// The total-space equality between `<x, y1>` and `<x, y2>` induced by
    /// a fibre equality.
    fn pair_eq(&self, x: &Expr, y1: &Expr, y2: &Expr, d: &Expr) -> Expr {
        let a = &self.b.base;
        let s_rfl = self.b.sigma_at(x, x, &a.rfl_at(x), y1);
        expair(
            a.rfl_at(x),
            self.b
                .ftra_at(x, &s_rfl, y1, y2, &self.b.idl_at(x, y1), d),
        )
    }

    /// The respect condition on a fibrewise function `h` over `x`.
    fn good(&self, x: &Expr, h: &Expr) -> Expr {
        let b = &self.b;
        let c = &self.c;
        forall(
            "y1",
            b.fam_at(x),
            forall(
                "y2",
                b.fam_at(&x.shifted(1)),
                imp(b.feq_at(&x.shifted(2), &var(1), &var(0)), {
                    let x3 = x.shifted(3);
                    let h3 = h.shifted(3);
                    let (y1, y2, d) = (var(2), var(1), var(0));
                    c.feq_at(
                        &self.point(&x3, &y2),
                        &c.sigma_at(
                            &self.point(&x3, &y1),
                            &self.point(&x3, &y2),
                            &self.pair_eq(&x3, &y1, &y2, &d),
                            &ap(h3, y1),
                        ),
                        &ap(h.shifted(3), y2),
                    )
                }),
            ),
        )
    }

    /// The element of the fibre over `x1` a reindexed function is sampled
    /// at: transport of the argument back along the symmetric equality.
    fn back(&self, x1: &Expr, x2: &Expr, d: &Expr, y: &Expr) -> Expr {
        self.b
            .sigma_at(x2, x1, &self.b.base.sym_at(x1, x2, d), y)
    }

    /// The total-space path `<x1, back(y)> = <x2, y>` used to reindex the
    /// values of a dependent function.
    fn path(&self, x1: &Expr, x2: &Expr, d: &Expr, y: &Expr) -> Expr {
        expair(d.clone(), sigma_cancel(&self.b, x1, x2, d, y))
    }

    /// The function component of `sigma` on the dependent product.
    /// Context: `x1 = 3, x2 = 2, d = 1, z = 0` (shifted under the lambda).
    fn reindexed_fun(&self, x1: &Expr, x2: &Expr, d: &Expr, z: &Expr) -> Expr {
        lam("y", self.b.fam_at(x2), {
            let (x1, x2, d, z) = (
                x1.shifted(1),
                x2.shifted(1),
                d.shifted(1),
                z.shifted(1),
            );
            let yb = self.back(&x1, &x2, &d, &var(0));
            self.c.sigma_at(
                &self.point(&x1, &yb),
                &self.point(&x2, &var(0)),
                &self.path(&x1, &x2, &d, &var(0)),
                &ap(self.fh(&x1, &z), yb.clone()),
            )
        })
    }

    /// The respect proof of the reindexed function.
    fn reindexed_good(&self, x1: &Expr, x2: &Expr, d: &Expr, z: &Expr) -> Expr {
        let b = &self.b;
        let c = &self.c;
        let a = &b.base;
        falam(
            "y1",
            b.fam_at(x2),
            falam(
                "y2",
                b.fam_at(&x2.shifted(1)),
                implam(
                    "d2",
                    b.feq_at(&x2.shifted(2), &var(1), &var(0)),
                    {
                        let x1 = x1.shifted(3);
                        let x2 = x2.shifted(3);
                        let d = d.shifted(3);
                        let z = z.shifted(3);
                        let (y1, y2, d2) = (var(2), var(1), var(0));
                        let sd = a.sym_at(&x1, &x2, &d);
                        let s1 = b.sigma_at(&x2, &x1, &sd, &y1);
                        let s2 = b.sigma_at(&x2, &x1, &sd, &y2);
                        let d2p = b.pres_at(&x2, &x1, &sd, &y1, &y2, &d2);
                        let h = self.fh(&x1, &z);
                        let h1 = ap(h.clone(), s1.clone());
                        let h2 = ap(h, s2.clone());
                        let g0 = impap(
                            faap(faap(self.gd(&x1, &z), s1.clone()), s2.clone()),
                            d2p.clone(),
                        );
                        let ta = self.point(&x1, &s1);
                        let ta2 = self.point(&x1, &s2);
                        let tb1 = self.point(&x2, &y1);
                        let tc = self.point(&x2, &y2);
                        let e1 = self.path(&x1, &x2, &d, &y1);
                        let e2 = self.path(&x1, &x2, &d, &y2);
                        let p12 = self.pair_eq(&x2, &y1, &y2, &d2);
                        let p12p = self.pair_eq(&x1, &s1, &s2, &d2p);
                        let tbt1 = self.tb.tra_at(&ta, &tb1, &tc, &e1, &p12);
                        let tbt2 = self.tb.tra_at(&ta, &ta2, &tc, &p12p, &e2);
                        let a1 = c.sigma_at(&tb1, &tc, &p12, &c.sigma_at(&ta, &tb1, &e1, &h1));
                        let a2 = c.sigma_at(&ta, &tc, &tbt1, &h1);
                        let a3 = c.sigma_at(&ta, &tc, &tbt2, &h1);
                        let a4 =
                            c.sigma_at(&ta2, &tc, &e2, &c.sigma_at(&ta, &ta2, &p12p, &h1));
                        let a5 = c.sigma_at(&ta2, &tc, &e2, &h2);
                        let m1 = c.cmp_at(&ta, &tb1, &tc, &e1, &p12, &h1);
                        let m2 = c.irr_at(&ta, &tc, &tbt1, &tbt2, &h1);
                        let m3 = c.fsym_at(
                            &tc,
                            &a4,
                            &a3,
                            &c.cmp_at(&ta, &ta2, &tc, &p12p, &e2, &h1),
                        );
                        let m4 = c.pres_at(
                            &ta2,
                            &tc,
                            &e2,
                            &c.sigma_at(&ta, &ta2, &p12p, &h1),
                            &h2,
                            &g0,
                        );
                        c.ftra_at(
                            &tc,
                            &a1,
                            &a2,
                            &a5,
                            &m1,
                            &c.ftra_at(
                                &tc,
                                &a2,
                                &a3,
                                &a5,
                                &m2,
                                &c.ftra_at(&tc, &a3, &a4, &a5, &m3, &m4),
                            ),
                        )
                    },
                ),
            ),
        )
    }
}

impl DependentProduct {
    /// The application term `Ap(h, y)` of a dependent-product element.
    pub fn apply(&self, x: &Expr, z: &Expr, y: &Expr) -> Expr {
        let parts = self.parts();
        ap(parts.fh(x, z), y.clone())
    }

    /// The witness that application respects the product equality: from a
    /// pointwise equality of `z` and `z'` obtain the fibre equality of
    /// their values at `y`.
    pub fn apply_respects(&self, u: &Expr, y: &Expr) -> Expr {
        faap(u.clone(), y.clone())
    }

    /// Abstraction: package a fibrewise term `m` (arity 2: base point,
    /// fibre argument) with its respect witness `mlaw` (arity 4: base
    /// point, both arguments, fibre equality) into a 1-ary family of
    /// dependent-product elements, validated over the base.
    pub fn abstraction(&self, m: &Abs, mlaw: &Abs, cfg: &KernelConfig) -> Result<Abs> {
        if m.arity() != 2 || mlaw.arity() != 4 {
            return Err(SetoidError::InputInvalid(
                "abstraction takes a 2-ary term and a 4-ary respect witness".into(),
            ));
        }
        let _col = cfg
            .theory
            .has_dependent_products()
            .then(crate::toolkit::allow_col_ascriptions);
        let b = &self.b;
        let hat = abs1(
            "x",
            pair(
                lam(
                    "y",
                    b.fam_at(&var(0)),
                    m.instantiate(&[var(1), var(0)]),
                ),
                falam(
                    "y1",
                    b.fam_at(&var(0)),
                    falam(
                        "y2",
                        b.fam_at(&var(1)),
                        implam(
                            "d",
                            b.feq_at(&var(2), &var(1), &var(0)),
                            mlaw.instantiate(&[var(3), var(2), var(1), var(0)]),
                        ),
                    ),
                ),
            ),
        );
        let cx = Context::empty().extended("x", b.base.support.clone());
        crate::check_synth(
            &cx,
            &hat.apply1(&var(0)),
            &self.obj.fam_at(&var(0)),
            cfg,
            "dependent abstraction",
        )?;
        Ok(hat)
    }

    /// The computation witness `Ap(fst (m^ x), y) = m(x, y)` in the fibre
    /// over `<x, y>`; it holds by reduction, so the emitted proof is the
    /// fibre reflexivity at the reduced value.
    pub fn beta(&self, m: &Abs, x: &Expr, y: &Expr) -> Expr {
        let parts = self.parts();
        self.c.frfl_at(
            &parts.point(x, y),
            &m.instantiate(&[x.clone(), y.clone()]),
        )
    }

    /// The expected type of a respect witness passed to [`Self::abstraction`],
    /// in the telescope `x, y1, y2, d`.
    pub fn law_type(&self, m: &Abs) -> Expr {
        let parts = self.parts();
        let (x, y1, y2, d) = (var(3), var(2), var(1), var(0));
        self.c.feq_at(
            &parts.point(&x, &y2),
            &self.c.sigma_at(
                &parts.point(&x, &y1),
                &parts.point(&x, &y2),
                &parts.pair_eq(&x, &y1, &y2, &d),
                &m.instantiate(&[x.clone(), y1.clone()]),
            ),
            &m.instantiate(&[x, y2]),
        )
    }

    fn parts(&self) -> DpParts {
        DpParts {
            b: self.b.clone(),
            c: self.c.clone(),
            tb: self.tb.clone(),
        }
    }
}
