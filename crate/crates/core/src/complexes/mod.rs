//! Finite free complexes over the polynomial ring.

mod chain_map;
mod homology;
mod koszul;
mod resolution;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::ring::{Ring, RingMatrix};

pub use chain_map::{homotopy_between, lift_chain_map, ChainMap};
pub use homology::{homology_presentation, SubquotientPresentation};
pub use koszul::{koszul, taylor};
pub use resolution::{minimize, schreyer_resolution, Minimized};

pub(crate) use koszul::koszul_allow_empty;
pub(crate) use resolution::minimize_from;

/// Whether differentials lower or raise the index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `d_k : F_k -> F_{k-1}`.
    Chain,
    /// `d^k : C^k -> C^{k+1}`.
    Cochain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Koszul,
    Taylor,
    Schreyer,
    Minimized,
    Dual,
    Manual,
}

/// Free modules `O^{r_0}, ..., O^{r_N}` with differentials. `maps[i]`
/// always connects positions `i` and `i + 1`: for chain complexes it is
/// `F_{i+1} -> F_i`, for cochain complexes `C^i -> C^{i+1}`.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    ring: Ring,
    ranks: Vec<usize>,
    maps: Vec<RingMatrix>,
    direction: Direction,
    origin: Origin,
    images: Vec<OnceLock<Submodule>>,
}

impl FreeComplex {
    /// Checks shapes and `d ∘ d = 0` exactly.
    pub fn new(
        ring: &Ring,
        ranks: Vec<usize>,
        maps: Vec<RingMatrix>,
        direction: Direction,
        origin: Origin,
    ) -> Result<FreeComplex> {
        if ranks.is_empty() {
            return Err(Error::NotAComplex("a complex needs at least one module".into()));
        }
        if maps.len() + 1 != ranks.len() {
            return Err(Error::NotAComplex(format!(
                "{} modules need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.ring() != ring {
                return Err(Error::SessionMismatch);
            }
            let want = match direction {
                Direction::Chain => (ranks[i], ranks[i + 1]),
                Direction::Cochain => (ranks[i + 1], ranks[i]),
            };
            if (m.rows(), m.cols()) != want {
                return Err(Error::NotAComplex(format!(
                    "differential {i} has shape {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        for i in 0..maps.len().saturating_sub(1) {
            let comp = match direction {
                Direction::Chain => maps[i].try_mul(&maps[i + 1])?,
                Direction::Cochain => maps[i + 1].try_mul(&maps[i])?,
            };
            if !comp.is_zero() {
                return Err(Error::NotAComplex(format!(
                    "differentials {i} and {} do not compose to zero",
                    i + 1
                )));
            }
        }
        let images = (0..maps.len()).map(|_| OnceLock::new()).collect();
        Ok(FreeComplex {
            ring: ring.clone(),
            ranks,
            maps,
            direction,
            origin,
            images,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    /// Index of the last module.
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// The matrix between positions `i` and `i + 1`.
    pub fn map_between(&self, i: usize) -> &RingMatrix {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[RingMatrix] {
        &self.maps
    }

    /// `d_k : F_k -> F_{k-1}` of a chain complex, `k >= 1`.
    pub fn d(&self, k: usize) -> &RingMatrix {
        assert_eq!(self.direction, Direction::Chain);
        &self.maps[k - 1]
    }

    /// `im d_{i+1} ⊆ F_i` of a chain complex, with a cached Gröbner basis.
    pub fn image(&self, i: usize) -> &Submodule {
        assert_eq!(self.direction, Direction::Chain);
        self.images[i].get_or_init(|| Submodule::new(self.maps[i].clone()))
    }

    /// `Hom(-, O)`: transposed differentials, direction reversed.
    pub fn hom_dual(&self) -> FreeComplex {
        let direction = match self.direction {
            Direction::Chain => Direction::Cochain,
            Direction::Cochain => Direction::Chain,
        };
        FreeComplex {
            ring: self.ring.clone(),
            ranks: self.ranks.clone(),
            maps: self.maps.iter().map(RingMatrix::transpose).collect(),
            direction,
            origin: Origin::Dual,
            images: (0..self.maps.len()).map(|_| OnceLock::new()).collect(),
        }
    }

    /// Whether all differentials are homogeneous for a common grading.
    pub fn is_graded(&self) -> bool {
        grading(self).is_some()
    }

    /// Same modules and matrices (origin and caches ignored).
    pub fn same_matrices(&self, other: &FreeComplex) -> bool {
        self.ranks == other.ranks && self.maps == other.maps && self.direction == other.direction
    }
}

/// Degrees for every basis vector of every module making all differentials
/// homogeneous, if possible. Entry `(i, j)` of a map from position `b` to
/// position `a` forces `deg(b, j) = deg(a, i) + deg(entry)`.
pub(crate) fn grading(c: &FreeComplex) -> Option<Vec<Vec<i64>>> {
    let mut deg: Vec<Vec<Option<i64>>> = c.ranks.iter().map(|&r| vec![None; r]).collect();
    // edges: (pos_a, i, pos_b, j, e) meaning deg_b[j] = deg_a[i] + e
    let mut edges: Vec<Vec<(usize, usize, i64)>> = Vec::new();
    let mut index = Vec::new();
    let mut total = 0;
    for &r in &c.ranks {
        index.push(total);
        total += r;
    }
    edges.resize(total, Vec::new());
    for (k, m) in c.maps.iter().enumerate() {
        let (src, dst) = match c.direction {
            Direction::Chain => (k + 1, k),
            Direction::Cochain => (k, k + 1),
        };
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let p = m.get(i, j);
                if p.is_zero() {
                    continue;
                }
                if !p.is_homogeneous() {
                    return None;
                }
                let e = p.total_degree().unwrap() as i64;
                let (a, b) = (index[dst] + i, index[src] + j);
                edges[a].push((b, 0, e));
                edges[b].push((a, 0, -e));
            }
        }
    }
    let mut flat: Vec<Option<i64>> = vec![None; total];
    for start in 0..total {
        if flat[start].is_some() {
            continue;
        }
        flat[start] = Some(0);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let du = flat[u].unwrap();
            for &(v, _, e) in &edges[u] {
                match flat[v] {
                    None => {
                        flat[v] = Some(du + e);
                        stack.push(v);
                    }
                    Some(x) if x != du + e => return None,
                    _ => {}
                }
            }
        }
    }
    for (pos, r) in c.ranks.iter().enumerate() {
        for i in 0..*r {
            deg[pos][i] = flat[index[pos] + i];
        }
    }
    Some(
        deg.into_iter()
            .map(|v| v.into_iter().map(|d| d.unwrap_or(0)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    #[test]
    fn rejects_non_complex() {
        let r = Ring::degrevlex(Field::Rational, ["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap();
        let d1 = RingMatrix::from_rows(&r, vec![vec![p("x"), p("y")]]).unwrap();
        let d2 = RingMatrix::from_rows(&r, vec![vec![p("y")], vec![p("x")]]).unwrap();
        let err = FreeComplex::new(&r, vec![1, 2, 1], vec![d1, d2], Direction::Chain, Origin::Manual);
        assert!(matches!(err, Err(Error::NotAComplex(_))));
    }

    #[test]
    fn double_dual_is_identity() {
        let r = Ring::degrevlex(Field::Rational, ["x", "y"]).unwrap();
        let k = koszul(&[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let dual = k.hom_dual();
        assert_eq!(dual.direction(), Direction::Cochain);
        assert_eq!(dual.map_between(0), &k.d(1).transpose());
        assert!(dual.hom_dual().same_matrices(&k));
        let zero = FreeComplex::new(&r, vec![0], vec![], Direction::Chain, Origin::Manual).unwrap();
        assert_eq!(zero.hom_dual().ranks(), &[0]);
    }
}
