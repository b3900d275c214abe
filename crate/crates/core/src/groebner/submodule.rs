use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Ring, RingMatrix, RingVector};

use super::buchberger::{self, Ctx};
use super::modpoly::MPoly;
use super::order::ModuleOrder;

/// A Gröbner basis of a submodule of `O^r`, remembering how each element
/// is built from the original generators.
#[derive(Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    rank: usize,
    ngens: usize,
    order: ModuleOrder,
    pub(crate) elems: Vec<MPoly>,
    trans: Vec<MPoly>,
    leads: Vec<(Monomial, usize)>,
}

/// Result of expressing a vector in terms of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lift {
    /// `generators * coefficients = v`.
    Coefficients(RingVector),
    /// The nonzero normal form certifying non-membership.
    NotInModule { witness: RingVector },
}

impl Lift {
    pub fn coefficients(self) -> Option<RingVector> {
        match self {
            Lift::Coefficients(c) => Some(c),
            Lift::NotInModule { .. } => None,
        }
    }
}

/// Computes a reduced Gröbner basis of `m` under `order`.
pub fn groebner_basis(m: &Submodule, order: ModuleOrder) -> GroebnerBasis {
    let ctx = Ctx::new(&order, m.ring.nvars());
    let gens: Vec<MPoly> = m
        .gens
        .columns()
        .iter()
        .map(|c| MPoly::from_vector(c, &order))
        .collect();
    let out = buchberger::groebner(&ctx, &gens, true, m.rank == 1);
    let leads = buchberger::leading_terms(&out.elems);
    GroebnerBasis {
        ring: m.ring.clone(),
        rank: m.rank,
        ngens: m.gens.cols(),
        order,
        elems: out.elems,
        trans: out.trans.expect("tracked"),
        leads,
    }
}

impl GroebnerBasis {
    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> Vec<RingVector> {
        self.elems.iter().map(|e| e.to_vector(&self.ring, self.rank)).collect()
    }

    pub fn as_matrix(&self) -> RingMatrix {
        RingMatrix::from_columns(&self.ring, self.rank, &self.elements()).expect("consistent")
    }

    /// `T` with `basis = generators * T` (`s x len`).
    pub fn transition_matrix(&self) -> RingMatrix {
        let cols: Vec<RingVector> = self
            .trans
            .iter()
            .map(|t| t.to_vector(&self.ring, self.ngens))
            .collect();
        RingMatrix::from_columns(&self.ring, self.ngens, &cols).expect("consistent")
    }

    /// Leading monomial and component of every element.
    pub fn leading_terms(&self) -> &[(Monomial, usize)] {
        &self.leads
    }

    pub(crate) fn ctx(&self) -> Ctx<'_> {
        Ctx::new(&self.order, self.ring.nvars())
    }

    pub(crate) fn transitions(&self) -> &[MPoly] {
        &self.trans
    }

    fn check(&self, v: &RingVector) -> Result<()> {
        if v.ring() != &self.ring {
            return Err(Error::SessionMismatch);
        }
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: v.rank(),
            });
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &RingVector) -> Result<RingVector> {
        self.check(v)?;
        let ctx = self.ctx();
        let mv = MPoly::from_vector(v, &self.order);
        let (rem, _) = buchberger::divide(&ctx, &mv, &self.elems, &self.leads, false);
        Ok(rem.to_vector(&self.ring, self.rank))
    }

    pub fn contains(&self, v: &RingVector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn lift(&self, v: &RingVector) -> Result<Lift> {
        self.check(v)?;
        let ctx = self.ctx();
        let mv = MPoly::from_vector(v, &self.order);
        let (rem, quots) = buchberger::divide(&ctx, &mv, &self.elems, &self.leads, true);
        if !rem.is_zero() {
            return Ok(Lift::NotInModule {
                witness: rem.to_vector(&self.ring, self.rank),
            });
        }
        let mut acc = MPoly::zero();
        for (k, q) in quots.iter().enumerate() {
            for (m, c) in q {
                acc.add_mul(c, m, &self.trans[k], &ctx.tord);
            }
        }
        Ok(Lift::Coefficients(acc.to_vector(&self.ring, self.ngens)))
    }

    /// Re-checks Buchberger's criterion.
    pub fn verify(&self) -> bool {
        buchberger::is_groebner(&self.ctx(), &self.elems)
    }
}

/// A submodule of `O^r` given by generator columns.
#[derive(Debug)]
pub struct Submodule {
    ring: Ring,
    rank: usize,
    gens: RingMatrix,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Submodule {
    fn clone(&self) -> Submodule {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Submodule {
            ring: self.ring.clone(),
            rank: self.rank,
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl Submodule {
    /// Submodule generated by the columns of `gens`.
    pub fn new(gens: RingMatrix) -> Submodule {
        Submodule {
            ring: gens.ring().clone(),
            rank: gens.rows(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn from_vectors(ring: &Ring, rank: usize, gens: &[RingVector]) -> Result<Submodule> {
        Ok(Submodule::new(RingMatrix::from_columns(ring, rank, gens)?))
    }

    /// Ideal of `O` as a submodule of `O^1`.
    pub fn ideal(ring: &Ring, gens: &[Polynomial]) -> Result<Submodule> {
        let rows = vec![gens.to_vec()];
        if gens.is_empty() {
            return Ok(Submodule::zero(ring, 1));
        }
        Ok(Submodule::new(RingMatrix::from_rows(ring, rows)?))
    }

    pub fn zero(ring: &Ring, rank: usize) -> Submodule {
        Submodule::new(RingMatrix::zero(ring, rank, 0))
    }

    pub fn free(ring: &Ring, rank: usize) -> Submodule {
        Submodule::new(RingMatrix::identity(ring, rank))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &RingMatrix {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.cols()
    }

    pub fn generators(&self) -> Vec<RingVector> {
        self.gens.columns()
    }

    /// Generators of an ideal as polynomials.
    pub fn ideal_generators(&self) -> Vec<Polynomial> {
        assert_eq!(self.rank, 1, "not an ideal");
        (0..self.gens.cols()).map(|j| self.gens.get(0, j).clone()).collect()
    }

    /// Cached Gröbner basis in term-over-position for the ring's order.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            Arc::new(groebner_basis(
                self,
                ModuleOrder::TermOverPosition(self.ring.order()),
            ))
        })
    }

    /// The same submodule generated by its reduced Gröbner basis.
    pub fn reduced(&self) -> Submodule {
        Submodule::new(self.groebner().as_matrix())
    }

    fn check_vector(&self, v: &RingVector) -> Result<()> {
        if v.ring() != &self.ring {
            return Err(Error::SessionMismatch);
        }
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: v.rank(),
            });
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &RingVector) -> Result<RingVector> {
        self.check_vector(v)?;
        self.groebner().normal_form(v)
    }

    pub fn contains(&self, v: &RingVector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Membership of a polynomial in an ideal.
    pub fn contains_poly(&self, p: &Polynomial) -> Result<bool> {
        self.contains(&RingVector::new(&self.ring, vec![p.clone()])?)
    }

    /// Normal form of a polynomial modulo an ideal.
    pub fn reduce_poly(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(self.normal_form(&RingVector::new(&self.ring, vec![p.clone()])?)?.get(0).clone())
    }

    pub fn lift(&self, v: &RingVector) -> Result<Lift> {
        self.check_vector(v)?;
        self.groebner().lift(v)
    }

    fn check_rank(&self, other: &Submodule) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::SessionMismatch);
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        self.check_rank(other)?;
        for v in other.generators() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual membership of generators.
    pub fn same_as(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_module(other)? && other.contains_module(self)?)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_rank(other)?;
        Ok(Submodule::new(self.gens.hconcat(&other.gens)?))
    }

    pub fn is_zero(&self) -> bool {
        self.groebner().is_empty()
    }

    /// Whether the submodule is all of `O^r`.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|i| {
            self.contains(&RingVector::unit(&self.ring, self.rank, i))
                .expect("same ring")
        })
    }

    /// `I * O^r` for an ideal `I`.
    pub fn ideal_times_free(ideal: &Submodule, rank: usize) -> Submodule {
        let ring = ideal.ring();
        let gens = ideal.ideal_generators();
        let mut cols = Vec::new();
        for i in 0..rank {
            for g in &gens {
                let mut v = RingVector::zero(ring, rank).into_entries();
                v[i] = g.clone();
                cols.push(RingVector::new(ring, v).expect("same ring"));
            }
        }
        Submodule::from_vectors(ring, rank, &cols).expect("consistent")
    }
}
