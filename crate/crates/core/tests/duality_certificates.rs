mod common;

use common::{homogeneous_corpus, monomial_corpus, row};
use locdual::complexes::{schreyer_resolution, ChainMap, Direction, FreeComplex, Origin};
use locdual::duality::{
    coh_equal, find_regular_sequence, functoriality_values, pairing_eval, pairing_lift,
    pairing_report, pairing_value_from_lift, level_complex, pull_back_class, purity_test, sk_test,
    ExtClass, PresentedModule,
};
use locdual::oracle::{mono_codimension, mono_top_part};
use locdual::ring::{MonomialOrder, Polynomial, Ring, RingMatrix, RingVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(Ring, Vec<Polynomial>)> {
    let mut out: Vec<(Ring, Vec<Polynomial>)> = monomial_corpus(50)
        .into_iter()
        .map(|(r, i)| {
            let g = i.to_polynomials(&r);
            (r, g)
        })
        .collect();
    out.extend(homogeneous_corpus());
    out
}

fn module(r: &Ring, gens: &[Polynomial]) -> (PresentedModule, usize) {
    let g = PresentedModule::new(&row(r, gens)).unwrap();
    let p = g.codimension().unwrap().unwrap();
    (g, p)
}

fn random_poly(r: &Ring, rng: &mut ChaCha8Rng, deg: u32) -> Polynomial {
    let n = r.nvars();
    let mut acc = r.zero();
    for _ in 0..3 {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=deg) {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = rng.gen_range(-3i64..=3);
        acc = acc + r.monomial(&e).scale(&r.field().from_i64(c));
    }
    acc
}

#[test]
fn left_and_right_nondegeneracy() {
    for (r, gens) in corpus() {
        let (g, p) = module(&r, &gens);
        let rep = pairing_report(&g, p, 0).unwrap();
        assert!(rep.left_nondegenerate, "left kernel differs from hull for {gens:?}");
        assert!(rep.right_nondegenerate(), "right kernel nonzero for {gens:?}");
        assert!(rep.hull_seed_independent, "{gens:?}");
    }
}

#[test]
fn left_kernel_matches_oracle_top_part() {
    for (r, i) in monomial_corpus(50) {
        let p = mono_codimension(&i).unwrap();
        let (g, _) = module(&r, &i.to_polynomials(&r));
        let rep = pairing_report(&g, p, 0).unwrap();
        let top = mono_top_part(&i, p).unwrap().to_submodule(&r);
        assert!(rep.left_kernel.same_as(&top).unwrap(), "{i}");
    }
}

#[test]
fn ext_is_pure_and_s2() {
    for (r, gens) in corpus() {
        let (g, p) = module(&r, &gens);
        let ext = g.ext(p).unwrap();
        let x = PresentedModule::new(ext.relations()).unwrap();
        assert_eq!(x.codimension().unwrap(), Some(p), "{gens:?}");
        let purity = purity_test(&x, p, 0).unwrap();
        assert!(purity.pure && purity.consistent, "{gens:?}");
        assert!(sk_test(&x, p, 2).unwrap().passes, "{gens:?}");
    }
}

#[test]
fn functoriality_square_commutes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (k, (r, gens)) in corpus().into_iter().enumerate().step_by(5) {
        let (gm, p) = module(&r, &gens);
        // F = O/J^2 maps to G = O/J by multiplication with h
        let sq: Vec<Polynomial> = gens.iter().flat_map(|a| gens.iter().map(move |b| a * b)).collect();
        let (fm, pf) = module(&r, &sq);
        assert_eq!(p, pf);
        let h = random_poly(&r, &mut rng, 2);
        let alpha = RingMatrix::from_rows(&r, vec![vec![h]]).unwrap();
        let ext = gm.ext(p).unwrap();
        for j in 0..ext.num_generators() {
            let xi = ExtClass::generator(&gm, p, j).unwrap();
            let v = RingVector::new(&r, vec![random_poly(&r, &mut rng, 2)]).unwrap();
            let (left, right) = functoriality_values(&alpha, &fm, &gm, &v, &xi, k as u64).unwrap();
            assert_eq!(left.value(), right.value(), "{gens:?}");
        }
    }
}

fn lex_resolution(p: &RingMatrix) -> FreeComplex {
    let ring = p.ring();
    let lex = ring.with_order(MonomialOrder::Lex);
    let res = schreyer_resolution(&p.to_ring(&lex).unwrap(), ring.nvars()).unwrap();
    let maps = res.maps().iter().map(|m| m.to_ring(ring).unwrap()).collect();
    FreeComplex::new(ring, res.ranks().to_vec(), maps, Direction::Chain, Origin::Manual).unwrap()
}

#[test]
fn pairing_is_well_defined() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (r, gens) in corpus().into_iter().step_by(6).take(10) {
        let pres = row(&r, &gens);
        let (g, p) = module(&r, &gens);
        let level = find_regular_sequence(g.annihilator().unwrap(), p, 0).unwrap();
        let other_level = find_regular_sequence(g.annihilator().unwrap(), p, 1).unwrap();
        let g2 = PresentedModule::with_resolution(&pres, lex_resolution(&pres)).unwrap();
        for j in 0..g.ext(p).unwrap().num_generators() {
            let xi = ExtClass::generator(&g, p, j).unwrap();
            let v = RingVector::new(&r, vec![random_poly(&r, &mut rng, 2)]).unwrap();
            let base = pairing_eval(&g, &v, &xi, &level).unwrap();

            // another resolution, with the class carried across
            let xi2 = pull_back_class(&RingMatrix::identity(&r, 1), &g2, &g, &xi).unwrap();
            let other_res = pairing_eval(&g2, &v, &xi2, &level).unwrap();
            assert_eq!(base.value(), other_res.value(), "resolution change for {gens:?}");

            // another lift: c + phi h + h psi
            let k = level_complex(&level).unwrap();
            let c = pairing_lift(&g, &v, &k).unwrap();
            let e = g.resolution();
            let hs: Vec<RingMatrix> = (0..=k.length())
                .map(|i| {
                    let mut m = RingMatrix::zero(&r, e.rank(i + 1), k.rank(i));
                    for a in 0..m.rows() {
                        for b in 0..m.cols() {
                            m.set(a, b, random_poly(&r, &mut rng, 1));
                        }
                    }
                    m
                })
                .collect();
            let comps: Vec<RingMatrix> = (0..=k.length())
                .map(|i| {
                    let mut m = c.component(i).clone();
                    if i < e.length() {
                        m = m.try_add(&e.d(i + 1).try_mul(&hs[i]).unwrap()).unwrap();
                    }
                    if i >= 1 && i - 1 < e.length() {
                        m = m.try_add(&hs[i - 1].try_mul(k.d(i)).unwrap()).unwrap();
                    }
                    m
                })
                .collect();
            let c2 = ChainMap {
                source: &k,
                target: e,
                components: comps,
            };
            assert!(c2.is_chain_map().unwrap());
            let other_lift = pairing_value_from_lift(&xi, &c2, &level).unwrap();
            assert_eq!(base.value(), other_lift.value(), "lift change for {gens:?}");

            // g0 + element of J
            let shift = pres.try_mul_vector(&RingVector::new(&r, (0..gens.len()).map(|_| random_poly(&r, &mut rng, 1)).collect()).unwrap()).unwrap();
            let moved = pairing_eval(&g, &v.try_add(&shift).unwrap(), &xi, &level).unwrap();
            assert_eq!(base.value(), moved.value(), "representative change for {gens:?}");

            // xi0 + coboundary
            if p >= 1 {
                let d = e.d(p).transpose();
                let w = RingVector::new(&r, (0..d.cols()).map(|_| random_poly(&r, &mut rng, 1)).collect()).unwrap();
                let xi_b = ExtClass::new(&g, p, xi.xi0().try_add(&d.try_mul_vector(&w).unwrap()).unwrap()).unwrap();
                let moved = pairing_eval(&g, &v, &xi_b, &level).unwrap();
                assert_eq!(base.value(), moved.value(), "cocycle change for {gens:?}");
            }

            // another complete intersection, compared after refinement
            let other = pairing_eval(&g, &v, &xi, &other_level).unwrap();
            assert!(coh_equal(&base, &other, 2).unwrap(), "level change for {gens:?}");
        }
    }
}
