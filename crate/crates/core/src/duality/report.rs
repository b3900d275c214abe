use crate::error::{Error, Result};
use crate::groebner::Submodule;
use crate::ring::RingMatrix;

use super::hull::{equidimensional_hull, hull_at_level};
use super::module::PresentedModule;
use super::pairing::{kernel_mod_ideal, pairing_matrix, right_injectivity_check, InjectivityReport};
use super::regular::{find_regular_sequence, CompleteIntersection};

/// Everything computed when checking non-degeneracy of the pairing.
#[derive(Clone, Debug)]
pub struct PairingReport {
    pub p: usize,
    /// `None` for the zero module.
    pub codim: Option<usize>,
    pub certified: bool,
    pub zero_module: bool,
    /// `None` when the module is zero.
    pub level: Option<CompleteIntersection>,
    /// Ext generators `xi_j`, as columns.
    pub ext_generators: RingMatrix,
    /// Rows `w_j` with `<g, xi_j> = [w_j · g]`.
    pub pairing_matrix: RingMatrix,
    pub left_kernel: Submodule,
    pub hull: Submodule,
    /// The hull from a complete intersection found with another seed.
    pub hull_other_seed: Submodule,
    pub left_nondegenerate: bool,
    pub right: Option<InjectivityReport>,
    pub hull_seed_independent: bool,
}

impl PairingReport {
    pub fn right_nondegenerate(&self) -> bool {
        self.right.as_ref().is_none_or(|r| r.injective)
    }

    pub fn all_pass(&self) -> bool {
        self.left_nondegenerate && self.right_nondegenerate() && self.hull_seed_independent
    }
}

/// Computes the pairing matrix, its left kernel and the hull, and checks
/// left and right non-degeneracy. Requires `codim G >= p`.
pub fn pairing_report(g: &PresentedModule, p: usize, seed: u64) -> Result<PairingReport> {
    let ring = g.ring();
    let r = g.rank();
    let codim = g.codimension()?;
    let certified = g.certified();
    let j = g.relations();
    if codim.is_none() {
        let free = Submodule::free(ring, r);
        return Ok(PairingReport {
            p,
            codim,
            certified,
            zero_module: true,
            level: None,
            ext_generators: RingMatrix::zero(ring, 0, 0),
            pairing_matrix: RingMatrix::zero(ring, 0, r),
            left_kernel: free.clone(),
            hull: free.clone(),
            hull_other_seed: free,
            left_nondegenerate: true,
            right: None,
            hull_seed_independent: true,
        });
    }
    let c = codim.unwrap();
    if c < p {
        return Err(Error::precondition_with(
            format!("module has codimension {c} < {p}"),
            format!("codim = {c}"),
        ));
    }
    let level = find_regular_sequence(g.annihilator()?, p, seed)?;
    let w = pairing_matrix(g, &level)?;
    let left_kernel = kernel_mod_ideal(&w, level.ideal())?;
    let hull = hull_at_level(&j, &level)?;
    let other = seed.wrapping_add(1);
    let hull_other_seed = equidimensional_hull(&j, p, other)?;
    let left_nondegenerate = left_kernel.same_as(&hull)?;
    let hull_seed_independent = hull.same_as(&hull_other_seed)?;
    let right = right_injectivity_check(g, &level)?;
    let ext_generators = g.ext_or_zero(p)?.generators().clone();
    Ok(PairingReport {
        p,
        codim,
        certified,
        zero_module: false,
        level: Some(level),
        ext_generators,
        pairing_matrix: w,
        left_kernel,
        hull,
        hull_other_seed,
        left_nondegenerate,
        right: Some(right),
        hull_seed_independent,
    })
}
