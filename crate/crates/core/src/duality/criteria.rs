use crate::error::{Error, Result};
use crate::groebner::{colength, ideal_diagonal, kernel_mod, module_codimension, Submodule};
use crate::ring::RingMatrix;

use super::hull::equidimensional_hull;
use super::module::PresentedModule;
use super::pairing::{kernel_mod_ideal, pairing_left_kernel, pairing_matrix};
use super::regular::{find_regular_sequence, CompleteIntersection};

/// One line of a codimension table: `codim Ext^ell` against the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimRow {
    pub ell: usize,
    /// `None` when `Ext^ell` vanishes.
    pub codim: Option<usize>,
    pub required: usize,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct SkReport {
    pub p: usize,
    pub k: usize,
    pub rows: Vec<CodimRow>,
    pub passes: bool,
}

impl SkReport {
    pub fn first_failure(&self) -> Option<&CodimRow> {
        self.rows.iter().find(|r| !r.ok)
    }
}

fn codim_table(g: &PresentedModule, p: usize, k: usize) -> Result<Vec<CodimRow>> {
    let n = g.ring().nvars();
    let mut rows = Vec::new();
    for ell in p + 1..=n {
        let ext = g.ext_or_zero(ell)?;
        let codim = if ext.is_zero() {
            None
        } else {
            module_codimension(ext.relations())?
        };
        let required = ell + k;
        rows.push(CodimRow {
            ell,
            codim,
            required,
            ok: codim.is_none_or(|c| c >= required),
        });
    }
    Ok(rows)
}

/// Serre's condition for a module of pure codimension `p`:
/// `codim Ext^ell(G, O) >= ell + k` for `ell = p+1, ..., n`.
pub fn sk_test(g: &PresentedModule, p: usize, k: usize) -> Result<SkReport> {
    let rows = codim_table(g, p, k)?;
    let passes = rows.iter().all(|r| r.ok);
    Ok(SkReport { p, k, rows, passes })
}

#[derive(Clone, Debug)]
pub struct PurityReport {
    pub pure: bool,
    pub rows: Vec<CodimRow>,
    /// Whether `J` equals its equidimensional hull.
    pub hull_equal: bool,
    /// Both criteria agree.
    pub consistent: bool,
}

/// Whether `G` has pure codimension `p`, from `codim Ext^k >= k + 1` for
/// `k > p`, cross-checked against `J = J_[p]`.
pub fn purity_test(g: &PresentedModule, p: usize, seed: u64) -> Result<PurityReport> {
    match g.codimension()? {
        Some(c) if c == p => {}
        other => {
            return Err(Error::precondition_with(
                format!("purity is tested in the codimension of the module, not {p}"),
                format!("codim = {other:?}"),
            ))
        }
    }
    let rows = codim_table(g, p, 1)?;
    let pure = rows.iter().all(|r| r.ok);
    let j = g.relations();
    let hull = equidimensional_hull(&j, p, seed)?;
    let hull_equal = hull.same_as(&j)?;
    Ok(PurityReport {
        pure,
        rows,
        hull_equal,
        consistent: pure == hull_equal,
    })
}

#[derive(Clone, Debug)]
pub struct RoosReport {
    pub level: CompleteIntersection,
    /// `Ext^p(Ext^p(G, O), O)` modelled as `Hom(Ext^p(G, O), O/I)`, given
    /// by vectors of `O^m` modulo `I O^m`.
    pub double_dual: Submodule,
    /// The map `O^r -> Hom(Ext^p(G, O), O/I)`, `g -> W g`.
    pub map: RingMatrix,
    pub kernel: Submodule,
    pub hull: Submodule,
    pub injective: bool,
    pub surjective: bool,
    /// Length of the cokernel; `None` when infinite.
    pub cokernel_length: Option<usize>,
    /// Generators of the double dual outside the image.
    pub cokernel_witnesses: Vec<crate::ring::RingVector>,
    /// `S_2` verdict for `O^r / J_[p]`.
    pub hull_s2: bool,
    /// `Ext^p(Ext^p(G,O),O)` from a resolution of the Ext module vanishes
    /// exactly when the model does.
    pub resolved_agrees: bool,
}

/// The natural map `G / G_(p+1) -> Ext^p(Ext^p(G, O), O)`.
pub fn roos_map(g: &PresentedModule, p: usize, seed: u64) -> Result<RoosReport> {
    let ann = g.annihilator()?;
    if ann.is_everything() {
        return Err(Error::precondition("the module is zero"));
    }
    let codim = g.codimension()?.unwrap_or(usize::MAX);
    if codim < p {
        return Err(Error::precondition_with(
            format!("module has codimension {codim} < {p}"),
            format!("codim = {codim}"),
        ));
    }
    let ring = g.ring();
    let level = find_regular_sequence(ann, p, seed)?;
    let ext = g.ext_or_zero(p)?;
    let m = ext.num_generators();
    let w = pairing_matrix(g, &level)?;
    let rel = ext.relations();
    let double_dual = if m == 0 {
        Submodule::zero(ring, 0)
    } else {
        kernel_mod_ideal(&rel.transpose(), level.ideal())?
    };
    let image = Submodule::new(w.hconcat(&ideal_diagonal(level.ideal(), m))?);
    let mut cokernel_witnesses = Vec::new();
    for h in double_dual.generators() {
        if !image.contains(&h)? {
            cokernel_witnesses.push(h);
        }
    }
    let surjective = cokernel_witnesses.is_empty();
    let cokernel_length = if m == 0 {
        Some(0)
    } else {
        let rels = kernel_mod(double_dual.gens(), image.gens())?;
        colength(&rels)
    };
    let kernel = pairing_left_kernel(g, &level)?;
    let hull = equidimensional_hull(&g.relations(), p, seed)?;
    let injective = kernel.same_as(&hull)?;
    let hull_module = PresentedModule::new(hull.gens())?;
    let hull_s2 = hull_module.is_zero()? || sk_test(&hull_module, p, 2)?.passes;
    let model_zero = double_dual.generators().iter().all(|h| {
        Submodule::ideal_times_free(level.ideal(), m)
            .contains(h)
            .unwrap_or(false)
    });
    let resolved_zero = if m == 0 {
        true
    } else {
        PresentedModule::new(rel)?.ext_or_zero(p)?.is_zero()
    };
    Ok(RoosReport {
        level,
        double_dual,
        map: w,
        kernel,
        hull,
        injective,
        surjective,
        cokernel_length,
        cokernel_witnesses,
        hull_s2,
        resolved_agrees: model_zero == resolved_zero,
    })
}
