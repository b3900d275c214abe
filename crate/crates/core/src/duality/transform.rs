use crate::complexes::{koszul_allow_empty, lift_chain_map, ChainMap};
use crate::error::{Error, Result};
use crate::ring::{Polynomial, RingMatrix, RingVector};

use super::module::{ci_ext_generator, CohClass};
use super::pairing::{ci_level_map, pairing_eval, pairing_value_from_lift};
use super::regular::CompleteIntersection;

#[derive(Clone, Debug)]
pub struct TransformationReport {
    /// `Λ^k A^T : Koszul(f)_k -> Koszul(g)_k` commutes with the differentials.
    pub wedge_chain_map: bool,
    pub det: Polynomial,
    /// `<1, xi_g>` computed at level `f` by a fresh lift.
    pub direct: CohClass,
    /// `<1, xi_g>` at level `g`, carried to level `f`.
    pub mapped: CohClass,
    /// The pairing read off from the wedge-power chain map.
    pub from_wedges: CohClass,
    pub holds: bool,
}

/// Transformation law for `f = A g`: wedge powers of `A` give a chain map
/// of Koszul complexes, and the class `[1]_g` becomes `[det A]_f`.
pub fn transformation_check(
    g: &CompleteIntersection,
    f: &CompleteIntersection,
    a: &RingMatrix,
) -> Result<TransformationReport> {
    let ring = g.ring();
    let p = g.len();
    if f.len() != p || a.rows() != p || a.cols() != p {
        return Err(Error::Shape(format!(
            "A must be {p}x{p} for sequences of length {p} and {}",
            f.len()
        )));
    }
    if p > 0 {
        let gv = RingVector::new(ring, g.generators().to_vec())?;
        let av = a.try_mul_vector(&gv)?;
        for (i, (lhs, rhs)) in f.generators().iter().zip(av.entries()).enumerate() {
            if lhs != rhs {
                return Err(Error::precondition_with(
                    format!("f_{} differs from row {} of A·g", i + 1, i + 1),
                    format!("{lhs} != {rhs}"),
                ));
            }
        }
    }
    let kf = koszul_allow_empty(ring, f.generators())?;
    let kg = koszul_allow_empty(ring, g.generators())?;
    let at = a.transpose();
    let comps: Vec<RingMatrix> = (0..=p)
        .map(|k| {
            if k == 0 {
                RingMatrix::identity(ring, 1)
            } else {
                at.exterior_power(k)
            }
        })
        .collect();
    let wedges = ChainMap {
        source: &kf,
        target: &kg,
        components: comps,
    };
    let wedge_chain_map = wedges.is_chain_map()?;
    let det = if p == 0 { ring.one() } else { a.det()? };

    let (gmod, xi) = ci_ext_generator(g)?;
    let one = RingVector::new(ring, vec![ring.one()])?;
    let direct = pairing_eval(&gmod, &one, &xi, f)?;
    let coarse = pairing_eval(&gmod, &one, &xi, g)?;
    let mapped = ci_level_map(&coarse, f)?;
    let from_wedges = pairing_value_from_lift(&xi, &wedges, f)?;
    let expected = f.reduce(&det)?;
    let lifted = lift_chain_map(&RingMatrix::identity(ring, 1), &kf, &kg)?;
    let from_lift = pairing_value_from_lift(&xi, &lifted, f)?;
    let holds = wedge_chain_map
        && direct.value() == &expected
        && mapped.value() == &expected
        && from_wedges.value() == &expected
        && from_lift.value() == &expected;
    Ok(TransformationReport {
        wedge_chain_map,
        det,
        direct,
        mapped,
        from_wedges,
        holds,
    })
}
