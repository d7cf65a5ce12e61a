use proptest::prelude::*;
use ulrich_core::ideal::{
    buchberger, is_auto_reduced, local_colength, local_colength_by_truncation, minors, s_pair_audit, IdealHandle,
    PresentedQuotient, QuotientDim, DEFAULT_BUDGET,
};
use ulrich_core::polyring::{parse_poly, parse_poly_list, reduce, Monomial, Polynomial, Ring, RingRef, Scalar};
use ulrich_core::presentations::{instantiate, FamilyTag};
use ulrich_core::report::rtp_grid;

fn xyzt() -> RingRef {
    Ring::grevlex(&["x", "y", "z", "t"])
}

fn ideal(r: &RingRef, s: &str) -> IdealHandle {
    IdealHandle::new(r, parse_poly_list(r, s).unwrap()).unwrap()
}

fn a123() -> &'static str {
    "xy - t^5, xz - t^6 - z t^2, yz + y t^4 - z t^3"
}

#[test]
fn groebner_examples() {
    let r = xyzt();
    let gb = ideal(&r, "x^2, xy").gb().to_vec();
    assert_eq!(gb, parse_poly_list(&r, "x^2, xy").unwrap());
    let m = ideal(&r, "x, y, z, t");
    assert_eq!(m.gb().len(), 4);
    let a = ideal(&r, a123());
    assert!(s_pair_audit(a.gb()));
    assert!(is_auto_reduced(a.gb()));
    assert!(a.member(&parse_poly(&r, "xy - t^5").unwrap()).unwrap());
}

#[test]
fn membership() {
    let r = xyzt();
    assert!(!ideal(&r, "x, y, z, t").member(&Polynomial::one(&r)).unwrap());
    assert!(ideal(&r, "x").member(&parse_poly(&r, "x^2").unwrap()).unwrap());
    assert!(!ideal(&r, "x^2").member(&parse_poly(&r, "x").unwrap()).unwrap());
}

#[test]
fn equality() {
    let r = xyzt();
    assert!(ideal(&r, "x, x + y").equal(&ideal(&r, "x, y")).unwrap());
    assert!(ideal(&r, "x, y, z, t^2, t^3").equal(&ideal(&r, "x, y, z, t^2")).unwrap());
    assert!(!ideal(&r, "x, y, z, t^2").equal(&ideal(&r, "x, y, z, t")).unwrap());
    // Trace of A(1,2,3) from the matrix entries.
    let a = ideal(&r, a123());
    let tr = ideal(&r, "x, t^3, t^4 + z, t^2, y, z").sum(&a).unwrap();
    assert!(tr.equal(&ideal(&r, "x, y, z, t^2").sum(&a).unwrap()).unwrap());
}

#[test]
fn sums_products_powers() {
    let r = xyzt();
    assert!(ideal(&r, "x").sum(&ideal(&r, "y")).unwrap().equal(&ideal(&r, "x, y")).unwrap());
    let xy = ideal(&r, "x, y");
    assert!(xy.product(&xy).unwrap().equal(&ideal(&r, "x^2, xy, y^2")).unwrap());
    assert_eq!(ideal(&r, "x, y, z, t").power(2).unwrap().quotient_dim(), QuotientDim::Finite(5));
    assert!(xy.power(3).unwrap().equal(&xy.product(&xy).unwrap().product(&xy).unwrap()).unwrap());
}

#[test]
fn colon_examples() {
    let r = xyzt();
    assert!(ideal(&r, "x^2").colon(&ideal(&r, "x")).unwrap().equal(&ideal(&r, "x")).unwrap());
    assert!(ideal(&r, "x, y").colon(&IdealHandle::unit(&r)).unwrap().equal(&ideal(&r, "x, y")).unwrap());
    assert!(ideal(&r, "x y, x z").colon(&ideal(&r, "x")).unwrap().equal(&ideal(&r, "y, z")).unwrap());
    let a = ideal(&r, a123());
    let q = ideal(&r, "t, x + y + z").sum(&a).unwrap();
    let j = ideal(&r, "x, y, z, t").sum(&a).unwrap();
    assert!(q.colon(&j).unwrap().equal(&j).unwrap());
}

#[test]
fn intersection() {
    let r = xyzt();
    let meet = ideal(&r, "x").intersect(&ideal(&r, "y")).unwrap();
    assert!(meet.equal(&ideal(&r, "x y")).unwrap());
    let meet = ideal(&r, "x^2, y").intersect(&ideal(&r, "x, y^2")).unwrap();
    assert!(meet.equal(&ideal(&r, "x^2, x y, y^2")).unwrap());
}

#[test]
fn minors_examples() {
    let r = xyzt();
    let m = |rows: [[&str; 3]; 2]| -> Vec<Vec<Polynomial>> {
        rows.iter().map(|row| row.iter().map(|s| parse_poly(&r, s).unwrap()).collect()).collect()
    };
    for n in 0..3 {
        let e = format!("t^{}", n + 1);
        let mat = m([["x", &e, &format!("{e} + z")], [&e, "y", "z"]]);
        let i1 = minors(&r, &mat, 1).unwrap();
        assert!(i1.equal(&ideal(&r, &format!("x, y, z, {e}"))).unwrap());
    }
    let sq: Vec<Vec<Polynomial>> =
        [["x", "y"], ["z", "t"]].iter().map(|row| row.iter().map(|s| parse_poly(&r, s).unwrap()).collect()).collect();
    assert!(minors(&r, &sq, 2).unwrap().equal(&ideal(&r, "x t - y z")).unwrap());
    assert!(minors(&r, &sq, 3).is_err());
    let mat = m([["x", "t^3", "t^4 + z"], ["t^2", "y", "z"]]);
    assert!(minors(&r, &mat, 2).unwrap().equal(&ideal(&r, a123())).unwrap());
}

#[test]
fn quotient_dims() {
    let r = xyzt();
    assert_eq!(ideal(&r, "x, y, z, t").quotient_dim(), QuotientDim::Finite(1));
    let r2 = Ring::grevlex(&["x", "y"]);
    assert_eq!(ideal(&r2, "x").quotient_dim(), QuotientDim::Infinite);
    assert_eq!(ideal(&r2, "x^2, y^3").quotient_dim(), QuotientDim::Finite(6));
}

#[test]
fn local_lengths_of_catalog_rings() {
    let tag = FamilyTag::A(1, 2, 3);
    let rp = instantiate(tag).unwrap();
    let a = &rp.quotient;
    assert_eq!(a.local_length(&a.maximal()).unwrap(), 1);
    for i in 1..=3 {
        let j = ideal(a.ring(), &format!("x, y, z, t^{i}"));
        assert_eq!(a.local_length(&j).unwrap(), i as usize);
        if i <= 2 {
            assert_eq!(a.min_gens(&j).unwrap(), 4);
        }
    }
    for t in rtp_grid(2) {
        let q = instantiate(t).unwrap().quotient;
        assert_eq!(q.local_length(&q.maximal()).unwrap(), 1, "{t}");
        assert_eq!(q.min_gens(&q.maximal()).unwrap(), 4, "{t}");
    }
}

#[test]
fn local_length_ignores_other_components() {
    let r = Ring::grevlex(&["x", "y"]);
    let j = ideal(&r, "x^2 (x - 1)^3, y^2");
    assert_eq!(local_colength(&j, DEFAULT_BUDGET).unwrap(), 4);
    assert_eq!(local_colength_by_truncation(&j, DEFAULT_BUDGET).unwrap(), 4);
    let j = ideal(&r, "x y - x, y^2 - y");
    assert_eq!(local_colength(&j, DEFAULT_BUDGET).unwrap(), 1);
}

#[test]
fn length_budget_is_reported() {
    let r = Ring::grevlex(&["x", "y"]);
    // Not m-primary: the length grows without bound.
    let j = ideal(&r, "x");
    assert!(local_colength(&j, 8).is_err());
}

#[test]
fn fast_length_agrees_with_truncation_on_catalog() {
    for t in [FamilyTag::A(1, 2, 3), FamilyTag::H(5), FamilyTag::F(2), FamilyTag::Gamma1] {
        let rp = instantiate(t).unwrap();
        for i in 1..=4 {
            let j = rp.pattern_ideal(i).unwrap();
            let full = rp.quotient.extend(&j).unwrap();
            assert_eq!(
                local_colength(&full, DEFAULT_BUDGET).unwrap(),
                local_colength_by_truncation(&full, DEFAULT_BUDGET).unwrap(),
                "{t} i={i}"
            );
        }
    }
}

fn xyz() -> RingRef {
    Ring::grevlex(&["x", "y", "z"])
}

type Raw = Vec<([u32; 3], i64, i64)>;

fn arb_poly(terms: usize, exp: u32) -> impl Strategy<Value = Raw> {
    prop::collection::vec((prop::array::uniform3(0..=exp), -3i64..=3, -1i64..=1), 1..=terms)
}

fn build(r: &RingRef, raw: &Raw) -> Polynomial {
    Polynomial::from_terms(r, raw.iter().map(|(e, a, b)| (Monomial::from_exps(e), Scalar::gaussian(*a, *b))).collect())
}

fn build_all(r: &RingRef, raws: &[Raw]) -> Vec<Polynomial> {
    raws.iter().map(|p| build(r, p)).filter(|p| !p.is_zero()).collect()
}

fn brute_quotient_dim(exps: &[[u32; 3]], bound: u32) -> usize {
    let mut n = 0;
    for a in 0..bound {
        for b in 0..bound {
            for c in 0..bound {
                let m = [a, b, c];
                if !exps.iter().any(|g| (0..3).all(|k| g[k] <= m[k])) {
                    n += 1;
                }
            }
        }
    }
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Every emitted basis passes an independent S-pair audit, is reduced,
    /// and reduces its own generators to zero.
    #[test]
    fn groebner_s_pair_audit(gens in prop::collection::vec(arb_poly(3, 2), 1..=3)) {
        let r = xyz();
        let gens = build_all(&r, &gens);
        prop_assume!(!gens.is_empty());
        let gb = buchberger(&gens);
        prop_assert!(s_pair_audit(&gb));
        prop_assert!(is_auto_reduced(&gb));
        for g in &gens {
            prop_assert!(reduce(g, &gb, r.order()).is_zero());
        }
    }

    /// `I ⊆ J` gives `ℓ(A/I) >= ℓ(A/J)` in `A = S/(xy - z^2)`.
    #[test]
    fn local_length_is_monotone(
        pw in prop::array::uniform3(1u32..=3),
        extra in arb_poly(3, 2),
        more in arb_poly(3, 2),
    ) {
        let r = xyz();
        let a = PresentedQuotient::new(ideal(&r, "x y - z^2")).unwrap();
        let base = ideal(&r, &format!("x^{}, y^{}, z^{}", pw[0], pw[1], pw[2]));
        let i = base.sum(&IdealHandle::new(&r, build_all(&r, &[extra])).unwrap()).unwrap();
        let j = i.sum(&IdealHandle::new(&r, build_all(&r, &[more])).unwrap()).unwrap();
        prop_assert!(a.local_length(&i).unwrap() >= a.local_length(&j).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn equality_is_stable_under_shuffle_and_rescaling(
        gens in prop::collection::vec(arb_poly(3, 2), 1..=3),
        units in prop::collection::vec((1i64..=3, -2i64..=2), 3),
        seed in any::<u64>(),
    ) {
        let r = xyz();
        let gens = build_all(&r, &gens);
        prop_assume!(!gens.is_empty());
        let i = IdealHandle::new(&r, gens.clone()).unwrap();
        let mut shuffled: Vec<Polynomial> = gens
            .iter()
            .zip(units.iter().cycle())
            .map(|(g, (a, b))| g.scale(&Scalar::gaussian(*a, *b)))
            .collect();
        let k = (seed as usize) % shuffled.len();
        shuffled.rotate_left(k);
        if seed % 2 == 0 {
            shuffled.reverse();
        }
        // A redundant combination must not change the ideal either.
        let combo = gens[0].mul(&gens[gens.len() - 1]).unwrap().add(&gens[0]).unwrap();
        shuffled.push(combo);
        let j = IdealHandle::new(&r, shuffled).unwrap();
        prop_assert!(i.equal(&i).unwrap());
        prop_assert!(i.equal(&j).unwrap());
        prop_assert!(j.equal(&i).unwrap());
        let k = IdealHandle::new(&r, j.gb().to_vec()).unwrap();
        prop_assert!(j.equal(&k).unwrap() && i.equal(&k).unwrap());
    }

    #[test]
    fn quotient_dim_matches_brute_force(
        pure in prop::array::uniform3(1u32..=4),
        mixed in prop::collection::vec(prop::array::uniform3(0u32..=3), 0..=4),
    ) {
        let r = xyz();
        let mut exps: Vec<[u32; 3]> = vec![[pure[0], 0, 0], [0, pure[1], 0], [0, 0, pure[2]]];
        exps.extend(mixed.iter().filter(|e| e.iter().any(|&x| x > 0)));
        let gens = exps.iter().map(|e| Polynomial::monomial(&r, Monomial::from_exps(e))).collect();
        let i = IdealHandle::new(&r, gens).unwrap();
        prop_assert_eq!(i.quotient_dim(), QuotientDim::Finite(brute_quotient_dim(&exps, 5)));
    }

    #[test]
    fn fast_length_matches_truncation(
        pw in prop::array::uniform3(1u32..=3),
        extra in arb_poly(3, 2),
    ) {
        let r = xyz();
        let j = ideal(&r, &format!("x y - z^2, x^{}, y^{}, z^{}", pw[0], pw[1], pw[2]))
            .sum(&IdealHandle::new(&r, build_all(&r, &[extra])).unwrap())
            .unwrap();
        prop_assert_eq!(
            local_colength(&j, DEFAULT_BUDGET).unwrap(),
            local_colength_by_truncation(&j, DEFAULT_BUDGET).unwrap()
        );
    }
}
