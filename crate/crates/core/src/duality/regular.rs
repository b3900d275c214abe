use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{codimension, Submodule};
use crate::ring::{Polynomial, Ring};

/// Largest coefficient box searched by [`find_regular_sequence`].
pub const MAX_BOX: i64 = 8;
const SAMPLES_PER_BOX: usize = 25;

/// A regular sequence `f_1, ..., f_p`, certified by `codim(f_1..f_k) = k`
/// for every prefix.
#[derive(Clone, Debug)]
pub struct CompleteIntersection {
    ring: Ring,
    gens: Vec<Polynomial>,
    ideal: Submodule,
}

impl CompleteIntersection {
    /// Checks the prefix codimensions.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<CompleteIntersection> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::SessionMismatch);
        }
        for k in 1..=gens.len() {
            if !prefix_ok(ring, &gens[..k]) {
                return Err(Error::precondition_with(
                    format!("not a regular sequence: prefix of length {k} has the wrong codimension"),
                    gens[k - 1].to_string(),
                ));
            }
        }
        let ideal = Submodule::ideal(ring, &gens)?;
        Ok(CompleteIntersection {
            ring: ring.clone(),
            gens,
            ideal,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The ideal generated by the sequence.
    pub fn ideal(&self) -> &Submodule {
        &self.ideal
    }

    /// Length of the sequence, which is also the codimension.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Normal form modulo the ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ideal.reduce_poly(f)
    }

    pub fn same_ideal(&self, other: &CompleteIntersection) -> Result<bool> {
        self.ideal.same_as(&other.ideal)
    }
}

fn prefix_ok(ring: &Ring, prefix: &[Polynomial]) -> bool {
    let Ok(ideal) = Submodule::ideal(ring, prefix) else {
        return false;
    };
    matches!(codimension(&ideal), Ok(c) if c == prefix.len())
}

/// A regular sequence of length `p` inside the ideal `a`. Single generators
/// are tried first (in input order for seed 0, otherwise in a seeded
/// shuffle), then random integer combinations with coefficients in
/// `[-b, b]` for `b = 1, ..., 8`.
pub fn find_regular_sequence(a: &Submodule, p: usize, seed: u64) -> Result<CompleteIntersection> {
    if a.rank() != 1 {
        return Err(Error::precondition("find_regular_sequence needs an ideal"));
    }
    let ring = a.ring().clone();
    if p == 0 {
        return CompleteIntersection::new(&ring, Vec::new());
    }
    let codim = codimension(a).map_err(|_| Error::precondition("the unit ideal contains no regular sequence of fixed length"))?;
    if codim < p {
        return Err(Error::precondition_with(
            format!("ideal has codimension {codim} < {p}"),
            format!("codim = {codim}"),
        ));
    }
    let gens: Vec<Polynomial> = a.ideal_generators().into_iter().filter(|g| !g.is_zero()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut singles = gens.clone();
    if seed != 0 {
        singles.shuffle(&mut rng);
    }
    let mut chosen: Vec<Polynomial> = Vec::with_capacity(p);
    for _ in 0..p {
        let mut found = None;
        'search: for b in 0..=MAX_BOX {
            let candidates: Vec<Polynomial> = if b == 0 {
                singles.clone()
            } else {
                (0..SAMPLES_PER_BOX)
                    .map(|_| {
                        gens.iter().fold(ring.zero(), |acc, g| {
                            let c = rng.gen_range(-b..=b);
                            acc + g.scale(&ring.field().from_i64(c))
                        })
                    })
                    .collect()
            };
            for f in candidates {
                if f.is_zero() {
                    continue;
                }
                let mut prefix = chosen.clone();
                prefix.push(f.clone());
                if prefix_ok(&ring, &prefix) {
                    found = Some(f);
                    break 'search;
                }
            }
        }
        match found {
            Some(f) => chosen.push(f),
            None => {
                return Err(Error::SearchExhausted {
                    p,
                    seed,
                    max_box: MAX_BOX,
                })
            }
        }
    }
    CompleteIntersection::new(&ring, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn ring() -> Ring {
        Ring::degrevlex(Field::Rational, ["x", "y", "z", "w"]).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Submodule {
        let g: Vec<_> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
        Submodule::ideal(r, &g).unwrap()
    }

    #[test]
    fn first_generator_suffices() {
        let r = ring();
        let ci = find_regular_sequence(&ideal(&r, &["x^2", "x*y"]), 1, 0).unwrap();
        assert_eq!(ci.generators(), &[r.parse("x^2").unwrap()]);
    }

    #[test]
    fn artinian_monomial() {
        let r = Ring::degrevlex(Field::Rational, ["z", "w"]).unwrap();
        let ci = find_regular_sequence(&ideal(&r, &["z^2", "z*w", "w^2"]), 2, 0).unwrap();
        let g: Vec<String> = ci.generators().iter().map(|f| f.to_string()).collect();
        assert_eq!(g, ["z^2", "w^2"]);
    }

    #[test]
    fn two_planes() {
        let r = ring();
        let a = ideal(&r, &["x*z", "x*w", "y*z", "y*w"]);
        for seed in 0..3 {
            let ci = find_regular_sequence(&a, 2, seed).unwrap();
            assert_eq!(ci.len(), 2);
            for f in ci.generators() {
                assert!(a.contains_poly(f).unwrap());
            }
        }
    }

    #[test]
    fn codimension_too_small() {
        let r = ring();
        let err = find_regular_sequence(&ideal(&r, &["x^2", "x*y"]), 2, 0).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
    }

    #[test]
    fn rejects_non_regular() {
        let r = ring();
        let x = r.parse("x").unwrap();
        assert!(CompleteIntersection::new(&r, vec![x.clone(), x]).is_err());
    }
}
