//! Building blocks of the extensional model: every constructor call below
//! type-checks the proof terms it emits with the intensional kernel, so a
//! returned value is itself a verified piece of structure.

use mtt_kernel::KernelConfig;
use setoid_model::*;
use syntax_core::build::*;
use syntax_core::Abs;

fn main() {
    let cfg = KernelConfig::mtt();

    // Discrete collections: supports compared by the intensional identity.
    let bools = ExtCollection::by_id(plus(n1(), n1()), &cfg).expect("booleans");
    let lists = ExtCollection::by_id(list(n1()), &cfg).expect("lists");
    println!("booleans are a set: {}", bools.is_set);

    // The binary product with its mediating arrow.
    let p = product(&lists, &bools, &cfg).expect("product");
    let f = ExtMorphism::new(
        bools.clone(),
        lists.clone(),
        abs1("x", nil()),
        abs3("x", "y", "u", refl(nil())),
        &cfg,
    )
    .expect("constant nil");
    let med = pairing(&p, &f, &ExtMorphism::identity(&bools), &cfg).expect("pairing");
    pairing_beta(&p, &f, &ExtMorphism::identity(&bools), &cfg).expect("beta");
    pairing_unique(&p, &med, &cfg).expect("uniqueness");
    println!("product support: {}", p.obj.support);

    // A quotient is the same support with the relation as its equality, so
    // effectiveness holds by construction.
    let everything = ExtEquivRel::new(
        lists.clone(),
        Abs::new(vec!["x".into(), "y".into()], tt()),
        Abs::new(
            vec![
                "x".into(),
                "y".into(),
                "x'".into(),
                "y'".into(),
                "d1".into(),
                "d2".into(),
            ],
            implam("w", tt(), var(0)),
        ),
        abs1("x", tt_proof()),
        abs3("x", "y", "u", var(0)),
        Abs::new(
            vec!["x".into(), "y".into(), "z".into(), "u".into(), "v".into()],
            var(0),
        ),
        &cfg,
    )
    .expect("total relation");
    let q = quotient(&everything, &cfg).expect("quotient");
    println!(
        "quotient equality is the relation: {}",
        q.obj.eq_at(&var(1), &var(0)) == everything.rel_at(&var(1), &var(0))
    );

    // A morphism becomes a dependent type of fibres; its total space is
    // isomorphic to the domain.
    let unit = ExtCollection::by_id(n1(), &cfg).expect("unit");
    let to_unit = ExtMorphism::new(
        bools.clone(),
        unit,
        abs1("x", star()),
        abs3("x", "y", "u", refl(star())),
        &cfg,
    )
    .expect("to the point");
    let dep = morphism_to_dep(&to_unit, &cfg).expect("fibres");
    let total = total_space(&dep, &cfg).expect("total space");
    println!("total space support: {}", total.support);
    roundtrip_iso(&to_unit, &cfg).expect("domain = total space of the fibres");
    println!("the fibrewise reading round-trips");
}
