//! Brute-force combinatorics on monomial ideals, kept independent of the
//! Gröbner engine so that it can serve as ground truth.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::ring::{Polynomial, Ring};

/// A monomial ideal stored by its minimal generators (exponent vectors).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Keeps only minimal generators, sorted.
    pub fn new(nvars: usize, gens: Vec<Vec<u32>>) -> MonomialIdeal {
        let set: BTreeSet<Vec<u32>> = gens.into_iter().collect();
        let all: Vec<Vec<u32>> = set.into_iter().collect();
        let gens = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    /// The ideal generated by the given polynomials, which must be monomials.
    pub fn from_polynomials(ring: &Ring, polys: &[Polynomial]) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for p in polys {
            if p.is_zero() {
                continue;
            }
            if !p.is_monomial() || p.ring() != ring {
                return Err(Error::precondition_with("not a monomial", p.to_string()));
            }
            gens.push(p.leading_monomial().unwrap().exponents().to_vec());
        }
        Ok(MonomialIdeal::new(ring.nvars(), gens))
    }

    pub fn to_polynomials(&self, ring: &Ring) -> Vec<Polynomial> {
        self.gens.iter().map(|g| ring.monomial(g)).collect()
    }

    pub fn to_submodule(&self, ring: &Ring) -> Submodule {
        Submodule::ideal(ring, &self.to_polynomials(ring)).expect("same ring")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    pub fn contains_monomial(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    /// Whether every generator is a pure power of a variable.
    pub fn is_irreducible(&self) -> bool {
        self.gens.iter().all(|g| g.iter().filter(|&&e| e > 0).count() == 1)
    }

    /// Variables appearing in some generator.
    fn support_size(&self) -> usize {
        (0..self.nvars).filter(|&i| self.gens.iter().any(|g| g[i] > 0)).count()
    }

    fn with(&self, extra: Vec<u32>) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(extra);
        MonomialIdeal::new(self.nvars, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| format!("{g:?}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `I ∩ J`, generated by pairwise lcms.
pub fn mono_intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for a in &i.gens {
        for b in &j.gens {
            gens.push(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
        }
    }
    MonomialIdeal::new(i.nvars, gens)
}

/// `I : m` for a single monomial.
fn colon_monomial(i: &MonomialIdeal, m: &[u32]) -> MonomialIdeal {
    let gens = i
        .gens
        .iter()
        .map(|g| g.iter().zip(m).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect();
    MonomialIdeal::new(i.nvars, gens)
}

/// `I : J = ∩_{m ∈ gens J} (I : m)`.
pub fn mono_quotient(i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
    let mut acc = MonomialIdeal::new(i.nvars, vec![vec![0; i.nvars]]);
    for m in &j.gens {
        acc = mono_intersect(&acc, &colon_monomial(i, m));
    }
    acc
}

/// Krull dimension of `O/I`: the largest set of variables containing the
/// support of no generator. `None` for the unit ideal.
pub fn mono_dimension(i: &MonomialIdeal) -> Option<usize> {
    if i.is_unit() {
        return None;
    }
    let n = i.nvars;
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let inside = |g: &Vec<u32>| (0..n).all(|v| g[v] == 0 || mask & (1 << v) != 0);
        if !i.gens.iter().any(inside) {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Some(best)
}

/// `n - dim`; `None` for the unit ideal.
pub fn mono_codimension(i: &MonomialIdeal) -> Option<usize> {
    mono_dimension(i).map(|d| i.nvars - d)
}

/// Irreducible decomposition: the first generator with mixed support is
/// split on its lowest variable, `x_v^a u` giving `I + (x_v^a)` and
/// `I + (u)`. Components containing another component are dropped.
pub fn mono_primary_decomposition(i: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    if i.is_unit() {
        return Err(Error::precondition("the unit ideal has no primary decomposition"));
    }
    let mut done: BTreeSet<MonomialIdeal> = BTreeSet::new();
    let mut stack = vec![i.clone()];
    while let Some(cur) = stack.pop() {
        let mixed = cur
            .gens
            .iter()
            .find(|g| g.iter().filter(|&&e| e > 0).count() > 1);
        match mixed {
            None => {
                done.insert(cur);
            }
            Some(g) => {
                let v = g.iter().position(|&e| e > 0).unwrap();
                let mut power = vec![0; cur.nvars];
                power[v] = g[v];
                let mut rest = g.clone();
                rest[v] = 0;
                stack.push(cur.with(rest));
                stack.push(cur.with(power));
            }
        }
    }
    let comps: Vec<MonomialIdeal> = done.into_iter().collect();
    let minimal = comps
        .iter()
        .filter(|c| !comps.iter().any(|d| d != *c && c.contains(d)))
        .cloned()
        .collect();
    Ok(minimal)
}

/// Codimension of an irreducible component: the number of variables used.
pub fn component_codimension(c: &MonomialIdeal) -> usize {
    c.support_size()
}

/// Intersection of the components of codimension `p`; `p` must be the
/// codimension of `I`.
pub fn mono_top_part(i: &MonomialIdeal, p: usize) -> Result<MonomialIdeal> {
    let comps = mono_primary_decomposition(i)?;
    let codim = comps.iter().map(component_codimension).min().unwrap_or(0);
    if codim != p {
        return Err(Error::precondition_with(
            format!("ideal has codimension {codim}, not {p}"),
            i.to_string(),
        ));
    }
    let mut acc = MonomialIdeal::new(i.nvars, vec![vec![0; i.nvars]]);
    for c in comps.iter().filter(|c| component_codimension(c) == p) {
        acc = mono_intersect(&acc, c);
    }
    Ok(acc)
}

/// A seeded random monomial ideal with 1 to `max_gens` generators of
/// degree 1 to `max_degree`.
pub fn random_monomial_ideal(seed: u64, nvars: usize, max_degree: u32, max_gens: usize) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_gens.max(1));
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let deg = rng.gen_range(1..=max_degree.max(1));
        let mut e = vec![0u32; nvars];
        for _ in 0..deg {
            e[rng.gen_range(0..nvars)] += 1;
        }
        gens.push(e);
    }
    MonomialIdeal::new(nvars, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect())
    }

    fn as_set(v: Vec<MonomialIdeal>) -> BTreeSet<MonomialIdeal> {
        v.into_iter().collect()
    }

    #[test]
    fn artinian_decomposition() {
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let got = as_set(mono_primary_decomposition(&i).unwrap());
        let want = as_set(vec![mi(2, &[&[2, 0], &[0, 1]]), mi(2, &[&[1, 0], &[0, 2]])]);
        assert_eq!(got, want);
    }

    #[test]
    fn embedded_decomposition() {
        let i = mi(2, &[&[2, 0], &[1, 1]]);
        let got = as_set(mono_primary_decomposition(&i).unwrap());
        assert_eq!(got, as_set(vec![mi(2, &[&[1, 0]]), mi(2, &[&[2, 0], &[0, 1]])]));
        assert_eq!(mono_top_part(&i, 1).unwrap(), mi(2, &[&[1, 0]]));
        assert!(mono_top_part(&i, 2).is_err());
    }

    #[test]
    fn prime_decomposes_to_itself() {
        let i = mi(1, &[&[1]]);
        assert_eq!(mono_primary_decomposition(&i).unwrap(), vec![i.clone()]);
        assert!(mono_primary_decomposition(&mi(1, &[&[0]])).is_err());
    }

    #[test]
    fn two_planes_are_unmixed() {
        let i = mi(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(mono_top_part(&i, 2).unwrap(), i);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(mono_dimension(&mi(2, &[&[2, 0], &[1, 1]])), Some(1));
        assert_eq!(mono_intersect(&mi(2, &[&[1, 0]]), &mi(2, &[&[0, 1]])), mi(2, &[&[1, 1]]));
        assert_eq!(mono_quotient(&mi(1, &[&[2]]), &mi(1, &[&[1]])), mi(1, &[&[1]]));
        assert_eq!(mono_dimension(&mi(2, &[&[0, 0]])), None);
    }

    #[test]
    fn minimal_generators() {
        let i = mi(2, &[&[2, 0], &[3, 1], &[2, 0]]);
        assert_eq!(i.generators(), &[vec![2, 0]]);
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_monomial_ideal(5, 3, 5, 4), random_monomial_ideal(5, 3, 5, 4));
    }
}
