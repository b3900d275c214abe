#![allow(dead_code)]

use locdual::oracle::{random_monomial_ideal, MonomialIdeal};
use locdual::ring::{Field, Polynomial, Ring, RingMatrix, DEFAULT_PRIME};

pub fn prime_ring(vars: &[&str]) -> Ring {
    Ring::degrevlex(Field::prime(DEFAULT_PRIME).unwrap(), vars.iter().copied()).unwrap()
}

pub fn rational_ring(vars: &[&str]) -> Ring {
    Ring::degrevlex(Field::Rational, vars.iter().copied()).unwrap()
}

pub fn polys(r: &Ring, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|s| r.parse(s).unwrap()).collect()
}

pub fn row(r: &Ring, gens: &[Polynomial]) -> RingMatrix {
    if gens.is_empty() {
        return RingMatrix::zero(r, 1, 0);
    }
    RingMatrix::from_rows(r, vec![gens.to_vec()]).unwrap()
}

/// Seeded random monomial ideals in 2 or 3 variables over F_32003.
pub fn monomial_corpus(count: u64) -> Vec<(Ring, MonomialIdeal)> {
    (0..count)
        .map(|seed| {
            let n = 2 + (seed % 2) as usize;
            let vars = &["x", "y", "z"][..n];
            (prime_ring(vars), random_monomial_ideal(seed, n, 5, 4))
        })
        .collect()
}

/// Homogeneous ideals that are not monomial.
pub fn homogeneous_corpus() -> Vec<(Ring, Vec<Polynomial>)> {
    let xyz = prime_ring(&["x", "y", "z"]);
    let xyzw = prime_ring(&["x", "y", "z", "w"]);
    vec![
        (xyz.clone(), polys(&xyz, &["x^2 - y*z", "x*y"])),
        (xyz.clone(), polys(&xyz, &["x^3 - x*y*z", "x^2*y - y^2*z"])),
        (xyzw.clone(), polys(&xyzw, &["x*z - y^2", "x*w - y*z", "y*w - z^2"])),
        (xyzw.clone(), polys(&xyzw, &["x^2 - z^2", "x*y - y*z", "x*w + z*w", "y*w"])),
        (xyz.clone(), polys(&xyz, &["x^2 + y^2", "x*z"])),
        (xyz, polys(&prime_ring(&["x", "y", "z"]), &["x*y - z^2", "x^2*z"])),
    ]
}
