use crate::error::Result;
use crate::groebner::buchberger::Ctx;
use crate::groebner::modpoly::MPoly;
use crate::groebner::schreyer::frame;
use crate::groebner::Submodule;
use crate::ring::{RingMatrix, RingVector};

use super::{grading, Direction, FreeComplex, Origin};

/// Free resolution of `coker P` by iterated Schreyer frames. The first
/// differential is a reduced Gröbner basis of the columns of `P`; each
/// further one is the Schreyer syzygy basis of the previous. The full
/// resolution is always computed, so its length is at least `min_length`
/// whenever the projective dimension allows it.
pub fn schreyer_resolution(p: &RingMatrix, min_length: usize) -> Result<FreeComplex> {
    let _ = min_length;
    let ring = p.ring().clone();
    let n = ring.nvars();
    let sub = Submodule::new(p.clone());
    let gb = sub.groebner();
    let mut ranks = vec![p.rows()];
    let mut maps = Vec::new();
    if !gb.is_empty() {
        let mut order = gb.order().clone();
        let mut elems: Vec<MPoly> = gb.elems.clone();
        let mut prev = p.rows();
        loop {
            let ctx = Ctx::new(&order, n);
            let fr = frame(&ctx, &elems);
            let cols: Vec<RingVector> = fr.basis.iter().map(|e| e.to_vector(&ring, prev)).collect();
            maps.push(RingMatrix::from_columns(&ring, prev, &cols)?);
            ranks.push(fr.basis.len());
            if fr.syz.is_empty() {
                break;
            }
            prev = fr.basis.len();
            order = fr.order;
            elems = fr.syz;
        }
    }
    FreeComplex::new(&ring, ranks, maps, Direction::Chain, Origin::Schreyer)
}

/// Outcome of [`minimize`].
#[derive(Clone, Debug)]
pub struct Minimized {
    pub complex: FreeComplex,
    /// False when no common grading exists and the input was returned as is.
    pub minimized: bool,
}

/// Cancels unit entries of a graded complex until none remain.
pub fn minimize(c: &FreeComplex) -> Minimized {
    minimize_from(c, 0)
}

/// As [`minimize`], leaving `maps[..first]` untouched.
pub(crate) fn minimize_from(c: &FreeComplex, first: usize) -> Minimized {
    if c.direction() == Direction::Cochain {
        let m = minimize_from(&c.hom_dual(), first);
        let mut complex = m.complex.hom_dual();
        if m.minimized {
            complex.origin = Origin::Minimized;
        }
        return Minimized {
            complex,
            minimized: m.minimized,
        };
    }
    if grading(c).is_none() {
        return Minimized {
            complex: c.clone(),
            minimized: false,
        };
    }
    let mut ranks = c.ranks().to_vec();
    let mut maps = c.maps().to_vec();
    while let Some((k, i, j)) = find_unit(&maps, first) {
        cancel(&mut maps, k, i, j);
        ranks[k] -= 1;
        ranks[k + 1] -= 1;
    }
    while ranks.len() > 1 && *ranks.last().unwrap() == 0 {
        ranks.pop();
        maps.pop();
    }
    let complex = FreeComplex::new(c.ring(), ranks, maps, Direction::Chain, Origin::Minimized)
        .expect("cancellation preserves d^2 = 0");
    Minimized {
        complex,
        minimized: true,
    }
}

fn find_unit(maps: &[RingMatrix], first: usize) -> Option<(usize, usize, usize)> {
    for (k, m) in maps.iter().enumerate().skip(first) {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m.get(i, j).is_unit() {
                    return Some((k, i, j));
                }
            }
        }
    }
    None
}

/// Splits off `O --u--> O` at entry `(i, j)` of `maps[k]`.
fn cancel(maps: &mut [RingMatrix], k: usize, i: usize, j: usize) {
    let m = &maps[k];
    let inv = m.get(i, j).constant_value().expect("unit").inv();
    let mut out = m.clone();
    for a in 0..m.rows() {
        let col = m.get(a, j);
        if a == i || col.is_zero() {
            continue;
        }
        let f = col.scale(&inv);
        for b in 0..m.cols() {
            let row = m.get(i, b);
            if b == j || row.is_zero() {
                continue;
            }
            out.set(a, b, m.get(a, b) - &(&f * row));
        }
    }
    let rows: Vec<usize> = (0..m.rows()).filter(|&a| a != i).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&b| b != j).collect();
    maps[k] = out.select_rows(&rows).select_columns(&cols);
    if k + 1 < maps.len() {
        let rows: Vec<usize> = (0..maps[k + 1].rows()).filter(|&a| a != j).collect();
        maps[k + 1] = maps[k + 1].select_rows(&rows);
    }
    if k > 0 {
        let cols: Vec<usize> = (0..maps[k - 1].cols()).filter(|&b| b != i).collect();
        maps[k - 1] = maps[k - 1].select_columns(&cols);
    }
}
