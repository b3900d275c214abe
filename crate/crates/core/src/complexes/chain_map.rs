use crate::error::{Error, Result};
use crate::groebner::Lift;
use crate::ring::{RingMatrix, RingVector};

use super::{Direction, FreeComplex};

/// Components `a_k : K_k -> E_k` of a morphism of chain complexes.
#[derive(Clone, Debug)]
pub struct ChainMap<'a> {
    pub source: &'a FreeComplex,
    pub target: &'a FreeComplex,
    pub components: Vec<RingMatrix>,
}

impl ChainMap<'_> {
    pub fn component(&self, k: usize) -> &RingMatrix {
        &self.components[k]
    }

    /// Checks `phi_k a_k = a_{k-1} psi_k` for every `k >= 1`.
    pub fn is_chain_map(&self) -> Result<bool> {
        for k in 1..self.components.len() {
            let left = if k <= self.target.length() {
                self.target.d(k).try_mul(&self.components[k])?
            } else {
                RingMatrix::zero(self.source.ring(), 0, self.source.rank(k))
            };
            let right = self.components[k - 1].try_mul(self.source.d(k))?;
            let expected_rows = self.target.rank(k - 1);
            if right.rows() != expected_rows {
                return Ok(false);
            }
            if k <= self.target.length() {
                if left != right {
                    return Ok(false);
                }
            } else if !right.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn require_chain(c: &FreeComplex) -> Result<()> {
    if c.direction() != Direction::Chain {
        return Err(Error::precondition("chain maps are lifted between chain complexes"));
    }
    Ok(())
}

/// Lifts every column of `m` through `target.d(k)`, i.e. solves
/// `target.d(k) * x = m`.
fn lift_columns(target: &FreeComplex, k: usize, m: &RingMatrix) -> Result<std::result::Result<RingMatrix, RingVector>> {
    let im = target.image(k - 1);
    let mut cols = Vec::with_capacity(m.cols());
    for v in m.columns() {
        match im.lift(&v)? {
            Lift::Coefficients(c) => cols.push(c),
            Lift::NotInModule { witness } => return Ok(Err(witness)),
        }
    }
    Ok(Ok(RingMatrix::from_columns(m.ring(), target.rank(k), &cols)?))
}

/// Extends `alpha : K_0 -> E_0` to a chain map `K -> E` of resolutions.
/// Fails with a precondition error when `alpha` does not descend to the
/// cokernels, reporting the offending column.
pub fn lift_chain_map<'a>(
    alpha: &RingMatrix,
    k: &'a FreeComplex,
    e: &'a FreeComplex,
) -> Result<ChainMap<'a>> {
    require_chain(k)?;
    require_chain(e)?;
    if alpha.ring() != k.ring() || k.ring() != e.ring() {
        return Err(Error::SessionMismatch);
    }
    if alpha.rows() != e.rank(0) || alpha.cols() != k.rank(0) {
        return Err(Error::Shape(format!(
            "alpha is {}x{}, expected {}x{}",
            alpha.rows(),
            alpha.cols(),
            e.rank(0),
            k.rank(0)
        )));
    }
    let ring = k.ring();
    let mut comps = vec![alpha.clone()];
    for step in 1..=k.length() {
        let target = comps[step - 1].try_mul(k.d(step))?;
        let next = if step <= e.length() {
            match lift_columns(e, step, &target)? {
                Ok(m) => m,
                Err(_) => {
                    let col = (0..target.cols())
                        .find(|&j| !e.image(step - 1).contains(&target.column(j)).unwrap_or(false))
                        .unwrap_or(0);
                    let msg = if step == 1 {
                        format!("alpha does not descend to the cokernels (column {col})")
                    } else {
                        format!("target is not exact at position {}", step - 1)
                    };
                    return Err(Error::precondition_with(msg, target.column(col).to_string()));
                }
            }
        } else {
            if !target.is_zero() {
                let msg = if step == 1 {
                    "alpha does not descend to the cokernels".to_string()
                } else {
                    format!("target resolution is too short at position {step}")
                };
                return Err(Error::precondition_with(msg, target.to_string()));
            }
            RingMatrix::zero(ring, 0, k.rank(step))
        };
        comps.push(next);
    }
    let map = ChainMap {
        source: k,
        target: e,
        components: comps,
    };
    debug_assert!(map.is_chain_map()?);
    Ok(map)
}

/// Maps `s_k : K_k -> E_{k+1}` with
/// `a_k - b_k = phi_{k+1} s_k + s_{k-1} psi_k`.
pub fn homotopy_between(a: &ChainMap, b: &ChainMap) -> Result<Vec<RingMatrix>> {
    if !std::ptr::eq(a.source, b.source) && !a.source.same_matrices(b.source)
        || !std::ptr::eq(a.target, b.target) && !a.target.same_matrices(b.target)
    {
        return Err(Error::precondition("chain maps have different source or target"));
    }
    let (k, e) = (a.source, a.target);
    let ring = k.ring();
    let mut s: Vec<RingMatrix> = Vec::with_capacity(k.length() + 1);
    for step in 0..=k.length() {
        let mut t = a.components[step].try_sub(&b.components[step])?;
        if step >= 1 {
            t = t.try_sub(&s[step - 1].try_mul(k.d(step))?)?;
        }
        let next = if step < e.length() {
            match lift_columns(e, step + 1, &t)? {
                Ok(m) => m,
                Err(w) => {
                    return Err(Error::NoHomotopy(format!(
                        "position {step}: {w} is not a boundary"
                    )))
                }
            }
        } else {
            if !t.is_zero() {
                return Err(Error::NoHomotopy(format!("position {step}: {t} is nonzero")));
            }
            RingMatrix::zero(ring, 0, k.rank(step))
        };
        s.push(next);
    }
    Ok(s)
}
