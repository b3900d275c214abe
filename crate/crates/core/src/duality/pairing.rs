use crate::complexes::{koszul_allow_empty, lift_chain_map, ChainMap, FreeComplex};
use crate::error::{Error, Result};
use crate::groebner::{ideal_diagonal, intersect, kernel_mod, Submodule};
use crate::ring::{Polynomial, RingMatrix, RingVector};

use super::module::{CohClass, ExtClass, PresentedModule};
use super::regular::{find_regular_sequence, CompleteIntersection};

fn require_killed(g: &PresentedModule, ci: &CompleteIntersection) -> Result<()> {
    if let Some(f) = g.is_killed_by(ci)? {
        return Err(Error::precondition_with(
            "the complete intersection is not contained in the annihilator",
            f.to_string(),
        ));
    }
    Ok(())
}

/// The Koszul complex of the level, with `O` in degree 0 when `p = 0`.
pub fn level_complex(ci: &CompleteIntersection) -> Result<FreeComplex> {
    koszul_allow_empty(ci.ring(), ci.generators())
}

/// Lift of `epsilon_g : O/I -> G, 1 -> g` to `Koszul(I) -> E`.
pub fn pairing_lift<'a>(
    g: &'a PresentedModule,
    v: &RingVector,
    koszul: &'a FreeComplex,
) -> Result<ChainMap<'a>> {
    if v.rank() != g.rank() {
        return Err(Error::RankMismatch {
            left: g.rank(),
            right: v.rank(),
        });
    }
    lift_chain_map(&v.as_column(), koszul, g.resolution())
}

/// `xi0 · c_p` modulo the level, for any lift `c`.
pub fn pairing_value_from_lift(xi: &ExtClass, c: &ChainMap, ci: &CompleteIntersection) -> Result<CohClass> {
    let p = ci.len();
    if xi.degree() != p {
        return Err(Error::precondition(format!(
            "class has degree {} but the level has length {p}",
            xi.degree()
        )));
    }
    let cp = c.component(p);
    if cp.rows() != xi.xi0().rank() {
        return Err(Error::RankMismatch {
            left: cp.rows(),
            right: xi.xi0().rank(),
        });
    }
    let value = if cp.rows() == 0 {
        ci.ring().zero()
    } else {
        xi.xi0().dot(&cp.column(0))?
    };
    CohClass::new(ci, &value)
}

/// `<g, xi>` at the level of a complete intersection `I ⊆ Ann G`.
pub fn pairing_eval(
    g: &PresentedModule,
    v: &RingVector,
    xi: &ExtClass,
    ci: &CompleteIntersection,
) -> Result<CohClass> {
    require_killed(g, ci)?;
    let k = level_complex(ci)?;
    let c = pairing_lift(g, v, &k)?;
    pairing_value_from_lift(xi, &c, ci)
}

/// Rows `w_j` with `<g, xi_j> = [w_j · g]` for the Ext generators `xi_j`.
/// Entries are normal forms modulo the level.
pub fn pairing_matrix(g: &PresentedModule, ci: &CompleteIntersection) -> Result<RingMatrix> {
    require_killed(g, ci)?;
    let p = ci.len();
    let ring = g.ring();
    let ext = g.ext_or_zero(p)?;
    let m = ext.num_generators();
    let r = g.rank();
    let mut w = RingMatrix::zero(ring, m, r);
    if m == 0 {
        return Ok(w);
    }
    let k = level_complex(ci)?;
    for i in 0..r {
        let e = RingVector::unit(ring, r, i);
        let c = pairing_lift(g, &e, &k)?;
        let cp = c.component(p).column(0);
        for j in 0..m {
            let val = ext.generator(j).dot(&cp)?;
            w.set(j, i, ci.reduce(&val)?);
        }
    }
    Ok(w)
}

/// `{ g ∈ O^r : w_j · g ∈ I for all j }`.
pub fn pairing_left_kernel(g: &PresentedModule, ci: &CompleteIntersection) -> Result<Submodule> {
    let w = pairing_matrix(g, ci)?;
    kernel_mod_ideal(&w, ci.ideal())
}

/// `{ v : A v ∈ I^rows }`, the whole free module when `A` has no rows.
pub(crate) fn kernel_mod_ideal(a: &RingMatrix, ideal: &Submodule) -> Result<Submodule> {
    if a.rows() == 0 {
        return Ok(Submodule::free(a.ring(), a.cols()));
    }
    kernel_mod(a, &ideal_diagonal(ideal, a.rows()))
}

/// Outcome of [`right_injectivity_check`].
#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub injective: bool,
    /// Coordinate vectors of Ext classes pairing to zero with everything.
    pub kernel: Submodule,
    /// Kernel generators that are nonzero classes.
    pub witnesses: Vec<RingVector>,
}

/// Whether `alpha^* : Ext^p(G, O) -> Ext^p((O/I)^r, O) ≅ (O/I)^r` is
/// injective, where `alpha : (O/I)^r -> G` is the identity on `O^r`.
pub fn right_injectivity_check(g: &PresentedModule, ci: &CompleteIntersection) -> Result<InjectivityReport> {
    let w = pairing_matrix(g, ci)?;
    let ext = g.ext_or_zero(ci.len())?;
    let kernel = kernel_mod_ideal(&w.transpose(), ci.ideal())?;
    let rel = ext.relation_module();
    let mut witnesses = Vec::new();
    for v in kernel.generators() {
        if !rel.contains(&v)? {
            witnesses.push(v);
        }
    }
    Ok(InjectivityReport {
        injective: witnesses.is_empty(),
        kernel,
        witnesses,
    })
}

/// `alpha^* xi = xi0 · a_p` for the lift `a` of `alpha : F -> G`.
pub fn pull_back_class(
    alpha: &RingMatrix,
    f: &PresentedModule,
    g: &PresentedModule,
    xi: &ExtClass,
) -> Result<ExtClass> {
    let a = lift_chain_map(alpha, f.resolution(), g.resolution())?;
    let p = xi.degree();
    let ring = f.ring();
    let xi0 = if p <= f.resolution().length() {
        let ap = a.component(p);
        if ap.rows() == 0 {
            RingVector::zero(ring, ap.cols())
        } else {
            ap.transpose().try_mul_vector(xi.xi0())?
        }
    } else {
        RingVector::zero(ring, 0)
    };
    ExtClass::new(f, p, xi0)
}

/// Matrix of `alpha^* : Ext^p(G, O) -> Ext^p(F, O)` on the presentation
/// generators: column `j` holds the coordinates of `alpha^* xi_j`.
pub fn induced_ext_map(
    alpha: &RingMatrix,
    f: &PresentedModule,
    g: &PresentedModule,
    p: usize,
) -> Result<RingMatrix> {
    let ext_g = g.ext_or_zero(p)?;
    let ext_f = f.ext_or_zero(p)?;
    let ring = f.ring();
    let mut cols = Vec::with_capacity(ext_g.num_generators());
    for j in 0..ext_g.num_generators() {
        let xi = ExtClass::raw(p, ext_g.generator(j));
        let pulled = pull_back_class(alpha, f, g, &xi)?;
        let c = if ext_f.is_zero() {
            RingVector::zero(ring, 0)
        } else {
            ext_f.coordinates(pulled.xi0())?
        };
        cols.push(c);
    }
    RingMatrix::from_columns(ring, ext_f.num_generators(), &cols)
}

/// `<alpha(v), xi>_G` and `<v, alpha^* xi>_F` at a common level inside
/// `Ann F ∩ Ann G`.
pub fn functoriality_values(
    alpha: &RingMatrix,
    f: &PresentedModule,
    g: &PresentedModule,
    v: &RingVector,
    xi: &ExtClass,
    seed: u64,
) -> Result<(CohClass, CohClass)> {
    let p = xi.degree();
    let common = intersect(f.annihilator()?, g.annihilator()?)?;
    let ci = find_regular_sequence(&common, p, seed)?;
    let image = alpha.try_mul_vector(v)?;
    let left = pairing_eval(g, &image, xi, &ci)?;
    let pulled = pull_back_class(alpha, f, g, xi)?;
    let right = pairing_eval(f, v, &pulled, &ci)?;
    Ok((left, right))
}

/// The matrix `A` with `fine_i = sum_j A_ij f_j`.
pub fn transition_matrix(coarse: &CompleteIntersection, fine: &CompleteIntersection) -> Result<RingMatrix> {
    let ring = coarse.ring();
    if fine.len() != coarse.len() {
        return Err(Error::precondition(format!(
            "levels of different length {} and {}",
            fine.len(),
            coarse.len()
        )));
    }
    let mut rows = Vec::with_capacity(fine.len());
    for f in fine.generators() {
        let v = RingVector::new(ring, vec![f.clone()])?;
        let coeffs = coarse.ideal().lift(&v)?.coefficients().ok_or_else(|| {
            Error::precondition_with("the finer level is not contained in the coarser", f.to_string())
        })?;
        rows.push(coeffs.into_entries());
    }
    if rows.is_empty() {
        return Ok(RingMatrix::zero(ring, 0, 0));
    }
    RingMatrix::from_rows(ring, rows)
}

/// The image of a class under `Ext^p(O/I, O) -> Ext^p(O/I_fine, O)`,
/// which multiplies by `det A` where `f_fine = A f`.
pub fn ci_level_map(c: &CohClass, fine: &CompleteIntersection) -> Result<CohClass> {
    let a = transition_matrix(c.level(), fine)?;
    let det = if a.rows() == 0 { fine.ring().one() } else { a.det()? };
    CohClass::new(fine, &(c.value() * &det))
}

/// Refines both classes to a common complete intersection inside the
/// intersection of their levels and compares normal forms there.
pub fn coh_equal(a: &CohClass, b: &CohClass, seed: u64) -> Result<bool> {
    if a.level().len() != b.level().len() {
        return Err(Error::precondition("classes live in different codimensions"));
    }
    if a.level().generators() == b.level().generators() {
        return Ok(a.value() == b.value());
    }
    let common = intersect(a.level().ideal(), b.level().ideal())?;
    let fine = find_regular_sequence(&common, a.level().len(), seed)?;
    let (fa, fb) = (ci_level_map(a, &fine)?, ci_level_map(b, &fine)?);
    Ok(fa.value() == fb.value())
}

/// `value · g` for a class and a polynomial.
pub fn coh_scale(c: &CohClass, f: &Polynomial) -> Result<CohClass> {
    CohClass::new(c.level(), &(c.value() * f))
}
