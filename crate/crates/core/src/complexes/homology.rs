use crate::error::{Error, Result};
use crate::groebner::{syzygies, Submodule};
use crate::ring::{Polynomial, Ring, RingMatrix, RingVector};

use super::{Direction, FreeComplex};

/// `ker(out) / im(in)` at one position of a complex, presented as
/// `O^g / im(relations)` with generator columns in the ambient free module.
#[derive(Clone, Debug)]
pub struct SubquotientPresentation {
    ring: Ring,
    degree: usize,
    ambient_rank: usize,
    generators: RingMatrix,
    relations: RingMatrix,
    kernel: Submodule,
    image: Submodule,
    projection: RingMatrix,
}

impl SubquotientPresentation {
    /// The zero module in degree `degree`, with zero ambient rank.
    pub(crate) fn zero(ring: &Ring, degree: usize) -> SubquotientPresentation {
        SubquotientPresentation {
            ring: ring.clone(),
            degree,
            ambient_rank: 0,
            generators: RingMatrix::zero(ring, 0, 0),
            relations: RingMatrix::zero(ring, 0, 0),
            kernel: Submodule::zero(ring, 0),
            image: Submodule::zero(ring, 0),
            projection: RingMatrix::zero(ring, 0, 0),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Generator columns in the ambient module (`ambient_rank x g`).
    pub fn generators(&self) -> &RingMatrix {
        &self.generators
    }

    pub fn generator(&self, j: usize) -> RingVector {
        self.generators.column(j)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.cols()
    }

    /// Relations among the generators (`g x m`).
    pub fn relations(&self) -> &RingMatrix {
        &self.relations
    }

    pub fn relation_module(&self) -> Submodule {
        Submodule::new(self.relations.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num_generators() == 0
    }

    /// The cycles, generated by a reduced Gröbner basis.
    pub fn kernel(&self) -> &Submodule {
        &self.kernel
    }

    /// The boundaries.
    pub fn image(&self) -> &Submodule {
        &self.image
    }

    pub fn is_cycle(&self, v: &RingVector) -> Result<bool> {
        self.kernel.contains(v)
    }

    /// Coordinates of the class of the cycle `v` in terms of the generators.
    pub fn coordinates(&self, v: &RingVector) -> Result<RingVector> {
        let Some(c0) = self.kernel.lift(v)?.coefficients() else {
            return Err(Error::precondition_with("vector is not a cycle", v.to_string()));
        };
        self.projection.try_mul_vector(&c0)
    }

    /// Whether the cycle `v` is a boundary.
    pub fn is_zero_class(&self, v: &RingVector) -> Result<bool> {
        if !self.is_cycle(v)? {
            return Err(Error::precondition_with("vector is not a cycle", v.to_string()));
        }
        self.image.contains(v)
    }

    /// The ambient cycle represented by coordinates `c`.
    pub fn cycle(&self, c: &RingVector) -> Result<RingVector> {
        self.generators.try_mul_vector(c)
    }

    /// Checks that generators are cycles and relations map to boundaries.
    pub fn verify(&self) -> Result<bool> {
        for g in self.generators.columns() {
            if !self.kernel.contains(&g)? {
                return Ok(false);
            }
        }
        let pushed = self.generators.try_mul(&self.relations)?;
        for v in pushed.columns() {
            if !self.image.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Presents the homology of `c` at position `k` (cohomology for cochain
/// complexes). Generators are a reduced Gröbner basis of the cycles;
/// relations are the lifted boundaries plus the syzygies of the generators.
/// Generators killed by a unit relation are then eliminated.
pub fn homology_presentation(c: &FreeComplex, k: usize) -> Result<SubquotientPresentation> {
    if k > c.length() {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: c.length(),
        });
    }
    let ring = c.ring().clone();
    let rank = c.rank(k);
    let (out, inc) = match c.direction() {
        Direction::Chain => (
            (k >= 1).then(|| c.map_between(k - 1)),
            (k < c.length()).then(|| c.map_between(k)),
        ),
        Direction::Cochain => (
            (k < c.length()).then(|| c.map_between(k)),
            (k >= 1).then(|| c.map_between(k - 1)),
        ),
    };
    let kernel = match out {
        Some(m) => syzygies(&Submodule::new(m.clone())),
        None => Submodule::free(&ring, rank),
    };
    let image = match inc {
        Some(m) => Submodule::new(m.clone()),
        None => Submodule::zero(&ring, rank),
    };
    let kmat = kernel.gens().clone();
    let g0 = kmat.cols();
    let mut rel_cols = Vec::new();
    for v in image.generators() {
        let lift = kernel.lift(&v)?.coefficients().ok_or_else(|| {
            Error::NotAComplex(format!("boundary {v} is not a cycle at position {k}"))
        })?;
        rel_cols.push(lift);
    }
    rel_cols.extend(syzygies(&kernel).generators());
    let relations = RingMatrix::from_columns(&ring, g0, &rel_cols)?;

    let mut state = Pruning {
        gens: kmat.clone(),
        rel: relations,
        proj: RingMatrix::identity(&ring, g0),
    };
    loop {
        state.prune();
        let relmod = Submodule::new(state.rel.clone());
        if relmod.is_everything() {
            state = Pruning {
                gens: RingMatrix::zero(&ring, rank, 0),
                rel: RingMatrix::zero(&ring, 0, 0),
                proj: RingMatrix::zero(&ring, 0, g0),
            };
            break;
        }
        let reduced = relmod.groebner().as_matrix();
        let again = reduced.entries().any(Polynomial::is_unit);
        state.rel = reduced;
        if !again {
            break;
        }
    }
    Ok(SubquotientPresentation {
        ring,
        degree: k,
        ambient_rank: rank,
        generators: state.gens,
        relations: state.rel,
        kernel,
        image,
        projection: state.proj,
    })
}

struct Pruning {
    gens: RingMatrix,
    rel: RingMatrix,
    proj: RingMatrix,
}

impl Pruning {
    /// Uses a relation with a unit entry to express one generator through
    /// the others, then drops that generator and relation.
    fn prune(&mut self) {
        while let Some((i, c)) = self.unit_entry() {
            let u = self.rel.get(i, c).constant_value().expect("unit").inv();
            let g = self.rel.rows();
            let keep: Vec<usize> = (0..g).filter(|&l| l != i).collect();
            // x'_l = x_l - u^{-1} rel[l][c] x_i for l != i
            let eliminate = |m: &RingMatrix| {
                let mut out = m.select_rows(&keep);
                for (row, &l) in keep.iter().enumerate() {
                    let f = self.rel.get(l, c);
                    if f.is_zero() {
                        continue;
                    }
                    let f = f.scale(&u);
                    for b in 0..m.cols() {
                        let x = m.get(i, b);
                        if !x.is_zero() {
                            out.set(row, b, out.get(row, b) - &(&f * x));
                        }
                    }
                }
                out
            };
            let rel = eliminate(&self.rel);
            self.proj = eliminate(&self.proj);
            let cols: Vec<usize> = (0..rel.cols())
                .filter(|&b| b != c && (0..rel.rows()).any(|a| !rel.get(a, b).is_zero()))
                .collect();
            self.rel = rel.select_columns(&cols);
            self.gens = self.gens.select_columns(&keep);
        }
    }

    fn unit_entry(&self) -> Option<(usize, usize)> {
        for c in 0..self.rel.cols() {
            for i in 0..self.rel.rows() {
                if self.rel.get(i, c).is_unit() {
                    return Some((i, c));
                }
            }
        }
        None
    }
}
