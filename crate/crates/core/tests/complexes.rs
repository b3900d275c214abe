mod common;

use common::{homogeneous_corpus, monomial_corpus, polys, prime_ring, rational_ring, row};
use locdual::complexes::{
    homology_presentation, homotopy_between, koszul, lift_chain_map, minimize, schreyer_resolution,
    taylor, ChainMap,
};
use locdual::groebner::Submodule;
use locdual::ring::RingMatrix;

#[test]
fn koszul_on_regular_sequence_is_acyclic() {
    let r = rational_ring(&["x", "y", "z"]);
    for gens in [vec!["x", "y", "z"], vec!["x^2", "y*z", "y^3 + z^3"], vec!["x + y", "z^2"]] {
        let fs = polys(&r, &gens);
        let k = koszul(&fs).unwrap();
        for i in 1..=k.length() {
            assert!(homology_presentation(&k, i).unwrap().is_zero(), "H_{i} of {gens:?}");
        }
        let h0 = homology_presentation(&k, 0).unwrap();
        assert!(h0.relation_module().same_as(&Submodule::ideal(&r, &fs).unwrap()).unwrap());
    }
}

#[test]
fn koszul_on_non_regular_sequence_has_homology() {
    let r = rational_ring(&["x", "y"]);
    let k = koszul(&polys(&r, &["x", "x*y"])).unwrap();
    let h1 = homology_presentation(&k, 1).unwrap();
    assert!(!h1.is_zero());
    assert!(h1.verify().unwrap());
}

#[test]
fn resolutions_are_exact_and_minimize() {
    let mut inputs: Vec<_> = monomial_corpus(20).into_iter().map(|(r, i)| {
        let g = i.to_polynomials(&r);
        (r, g)
    }).collect();
    inputs.extend(homogeneous_corpus());
    for (r, gens) in inputs {
        let p = row(&r, &gens);
        let res = schreyer_resolution(&p, 0).unwrap();
        for k in 1..=res.length() {
            assert!(homology_presentation(&res, k).unwrap().is_zero(), "{gens:?} at {k}");
        }
        let m = minimize(&res);
        assert!(m.minimized);
        let c = &m.complex;
        assert!(c.length() <= r.nvars());
        assert!(c.image(0).same_as(&Submodule::new(p.clone())).unwrap());
        for k in 1..=c.length() {
            assert!(homology_presentation(c, k).unwrap().is_zero());
            assert!(c.d(k).entries().all(|e| !e.is_unit()), "not minimal: {gens:?}");
        }
    }
}

#[test]
fn taylor_minimizes_to_betti_numbers() {
    let r = prime_ring(&["x", "y"]);
    let t = taylor(&polys(&r, &["x^2", "x*y", "y^2"])).unwrap();
    assert_eq!(t.ranks(), &[1, 3, 3, 1]);
    let m = minimize(&t).complex;
    assert_eq!(m.ranks(), &[1, 3, 2]);
}

#[test]
fn hom_dual_is_an_involution() {
    let r = rational_ring(&["x", "y", "z"]);
    let k = koszul(&polys(&r, &["x", "y^2", "z"])).unwrap();
    let back = k.hom_dual().hom_dual();
    assert!(back.same_matrices(&k));
    let m = minimize(&k.hom_dual()).complex;
    assert!(m.same_matrices(&k.hom_dual()));
}

#[test]
fn lifts_are_homotopic() {
    let r = rational_ring(&["x", "y"]);
    let fs = polys(&r, &["x^2", "y^2"]);
    let k = koszul(&fs).unwrap();
    let e = minimize(&schreyer_resolution(&row(&r, &polys(&r, &["x", "y"])), 0).unwrap()).complex;
    let alpha = RingMatrix::identity(&r, 1);
    let a = lift_chain_map(&alpha, &k, &e).unwrap();
    // a different representative of the same map on cokernels
    let alpha2 = RingMatrix::from_rows(&r, vec![vec![r.parse("1 + x").unwrap()]]).unwrap();
    let b0 = lift_chain_map(&alpha2, &k, &e).unwrap();
    assert!(!homotopy_between(&a, &b0).unwrap().is_empty());
    // perturb a by phi s + s psi
    let s0 = RingMatrix::from_rows(&r, vec![vec![r.parse("y").unwrap()], vec![r.parse("x").unwrap()]]).unwrap();
    let c0 = a.component(0).try_add(&e.d(1).try_mul(&s0).unwrap()).unwrap();
    let c1 = a.component(1).try_add(&s0.try_mul(k.d(1)).unwrap()).unwrap();
    let b = ChainMap { source: &k, target: &e, components: vec![c0, c1, a.component(2).clone()] };
    assert!(b.is_chain_map().unwrap());
    let s = homotopy_between(&a, &b).unwrap();
    for i in 0..=k.length() {
        let mut rhs = RingMatrix::zero(&r, e.rank(i), k.rank(i));
        if i < e.length() {
            rhs = rhs.try_add(&e.d(i + 1).try_mul(&s[i]).unwrap()).unwrap();
        }
        if i >= 1 {
            rhs = rhs.try_add(&s[i - 1].try_mul(k.d(i)).unwrap()).unwrap();
        }
        assert_eq!(a.component(i).try_sub(b.component(i)).unwrap(), rhs);
    }
}

#[test]
fn lift_rejects_maps_that_do_not_descend() {
    let r = rational_ring(&["x", "y"]);
    let k = koszul(&polys(&r, &["x"])).unwrap();
    let e = koszul(&polys(&r, &["x^2"])).unwrap();
    assert!(lift_chain_map(&RingMatrix::identity(&r, 1), &k, &e).is_err());
    let x = RingMatrix::from_rows(&r, vec![vec![r.parse("x").unwrap()]]).unwrap();
    assert!(lift_chain_map(&x, &k, &e).is_ok());
}
