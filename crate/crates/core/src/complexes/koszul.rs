use crate::error::{Error, Result};
use crate::ring::{subsets, Monomial, Polynomial, Ring, RingMatrix};

use super::{Direction, FreeComplex, Origin};

/// Koszul complex of `f_1, ..., f_p`: `K_k` has basis `e_S` for the
/// `k`-subsets `S` in lexicographic order and
/// `d(e_S) = sum_t (-1)^t f_{s_t} e_{S \ s_t}` (positions counted from 0).
pub fn koszul(fs: &[Polynomial]) -> Result<FreeComplex> {
    let Some(first) = fs.first() else {
        return Err(Error::precondition("the Koszul complex needs at least one polynomial"));
    };
    koszul_allow_empty(first.ring(), fs)
}

/// As [`koszul`], but an empty sequence gives `O` in degree 0.
pub(crate) fn koszul_allow_empty(ring: &Ring, fs: &[Polynomial]) -> Result<FreeComplex> {
    if fs.iter().any(|f| f.ring() != ring) {
        return Err(Error::SessionMismatch);
    }
    let p = fs.len();
    let levels: Vec<Vec<Vec<usize>>> = (0..=p).map(|k| subsets(p, k)).collect();
    let ranks = levels.iter().map(Vec::len).collect();
    let mut maps = Vec::with_capacity(p);
    for k in 1..=p {
        let lower = &levels[k - 1];
        let mut m = RingMatrix::zero(ring, lower.len(), levels[k].len());
        for (col, s) in levels[k].iter().enumerate() {
            for (t, &i) in s.iter().enumerate() {
                let face: Vec<usize> = s.iter().copied().filter(|&x| x != i).collect();
                let row = lower.binary_search(&face).expect("subsets are sorted");
                let entry = if t % 2 == 0 { fs[i].clone() } else { fs[i].neg() };
                m.set(row, col, entry);
            }
        }
        maps.push(m);
    }
    FreeComplex::new(ring, ranks, maps, Direction::Chain, Origin::Koszul)
}

/// Taylor resolution of a monomial ideal: basis `e_S` for all subsets of the
/// generators and `d(e_S) = sum_t (-1)^t (m_S / m_{S \ s_t}) e_{S \ s_t}`
/// with `m_S` the lcm over `S`.
pub fn taylor(monomials: &[Polynomial]) -> Result<FreeComplex> {
    let Some(first) = monomials.first() else {
        return Err(Error::precondition("the Taylor complex needs at least one monomial"));
    };
    let ring = first.ring().clone();
    let mut monos = Vec::with_capacity(monomials.len());
    for m in monomials {
        if m.ring() != &ring {
            return Err(Error::SessionMismatch);
        }
        if !m.is_monomial() || m.is_zero() {
            return Err(Error::precondition(format!("{m} is not a monomial")));
        }
        monos.push(m.leading_monomial().unwrap().clone());
    }
    let s = monos.len();
    let lcm = |set: &[usize]| {
        set.iter()
            .fold(Monomial::one(ring.nvars()), |acc, &i| acc.lcm(&monos[i]))
    };
    let levels: Vec<Vec<Vec<usize>>> = (0..=s).map(|k| subsets(s, k)).collect();
    let ranks = levels.iter().map(Vec::len).collect();
    let one = ring.field().one();
    let mut maps = Vec::with_capacity(s);
    for k in 1..=s {
        let lower = &levels[k - 1];
        let mut m = RingMatrix::zero(&ring, lower.len(), levels[k].len());
        for (col, set) in levels[k].iter().enumerate() {
            let top = lcm(set);
            for (t, &i) in set.iter().enumerate() {
                let face: Vec<usize> = set.iter().copied().filter(|&x| x != i).collect();
                let row = lower.binary_search(&face).expect("subsets are sorted");
                let q = lcm(&face).quotient_of(&top);
                let c = if t % 2 == 0 { one.clone() } else { one.neg() };
                m.set(row, col, ring.term(q, c));
            }
        }
        maps.push(m);
    }
    FreeComplex::new(&ring, ranks, maps, Direction::Chain, Origin::Taylor)
}
