use std::sync::OnceLock;

use crate::complexes::{
    homology_presentation, koszul_allow_empty, minimize_from, schreyer_resolution, FreeComplex,
    SubquotientPresentation,
};
use crate::error::{Error, Result};
use crate::groebner::{annihilator, is_graded_matrix, is_monomial_matrix, module_codimension, Submodule};
use crate::ring::{Polynomial, Ring, RingMatrix, RingVector};

use super::regular::CompleteIntersection;

/// `G = O^r / im P` together with a free resolution `E -> G`.
#[derive(Debug)]
pub struct PresentedModule {
    presentation: RingMatrix,
    resolution: FreeComplex,
    ext: Vec<OnceLock<SubquotientPresentation>>,
    ann: OnceLock<Submodule>,
}

impl PresentedModule {
    /// Resolves `coker P` by Schreyer frames, minimized above degree 1 when
    /// the resolution is graded.
    pub fn new(p: &RingMatrix) -> Result<PresentedModule> {
        let res = schreyer_resolution(p, p.ring().nvars())?;
        let res = minimize_from(&res, 1).complex;
        PresentedModule::with_resolution(p, res)
    }

    /// Uses a given resolution; `E_0` must be `O^r` and `im d_1 = im P`.
    pub fn with_resolution(p: &RingMatrix, res: FreeComplex) -> Result<PresentedModule> {
        if res.ring() != p.ring() {
            return Err(Error::SessionMismatch);
        }
        if res.rank(0) != p.rows() {
            return Err(Error::RankMismatch {
                left: p.rows(),
                right: res.rank(0),
            });
        }
        let j = Submodule::new(p.clone());
        let im = if res.length() >= 1 {
            Submodule::new(res.d(1).clone())
        } else {
            Submodule::zero(p.ring(), p.rows())
        };
        if !j.same_as(&im)? {
            return Err(Error::precondition("the resolution does not present the module"));
        }
        let n = res.length() + 1;
        Ok(PresentedModule {
            presentation: p.clone(),
            resolution: res,
            ext: (0..n).map(|_| OnceLock::new()).collect(),
            ann: OnceLock::new(),
        })
    }

    /// `O / I` resolved by the Koszul complex of the sequence.
    pub fn complete_intersection(ci: &CompleteIntersection) -> Result<PresentedModule> {
        let ring = ci.ring();
        let p = if ci.is_empty() {
            RingMatrix::zero(ring, 1, 0)
        } else {
            RingMatrix::from_rows(ring, vec![ci.generators().to_vec()])?
        };
        PresentedModule::with_resolution(&p, koszul_allow_empty(ring, ci.generators())?)
    }

    pub fn ring(&self) -> &Ring {
        self.presentation.ring()
    }

    pub fn presentation(&self) -> &RingMatrix {
        &self.presentation
    }

    /// Rank of the free cover `O^r`.
    pub fn rank(&self) -> usize {
        self.presentation.rows()
    }

    pub fn resolution(&self) -> &FreeComplex {
        &self.resolution
    }

    /// `J = im P ⊆ O^r`.
    pub fn relations(&self) -> Submodule {
        Submodule::new(self.presentation.clone())
    }

    pub fn annihilator(&self) -> Result<&Submodule> {
        if let Some(a) = self.ann.get() {
            return Ok(a);
        }
        let a = annihilator(&self.presentation)?;
        Ok(self.ann.get_or_init(|| a))
    }

    /// `None` for the zero module.
    pub fn codimension(&self) -> Result<Option<usize>> {
        module_codimension(&self.presentation)
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.annihilator()?.is_everything())
    }

    /// Whether every presentation entry is homogeneous for a common grading
    /// or a monomial, so that the polynomial computation is faithful to the
    /// local ring at the origin.
    pub fn certified(&self) -> bool {
        certified(&self.presentation)
    }

    /// `Ext^k(G, O)` as the cohomology of the dualized resolution.
    pub fn ext(&self, k: usize) -> Result<&SubquotientPresentation> {
        if k >= self.ext.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: self.ext.len() - 1,
            });
        }
        if let Some(e) = self.ext[k].get() {
            return Ok(e);
        }
        let e = homology_presentation(&self.resolution.hom_dual(), k)?;
        Ok(self.ext[k].get_or_init(|| e))
    }

    /// `Ext^k(G, O)`, the zero module beyond the resolution length.
    pub fn ext_or_zero(&self, k: usize) -> Result<SubquotientPresentation> {
        if k > self.resolution.length() {
            return Ok(SubquotientPresentation::zero(self.ring(), k));
        }
        Ok(self.ext(k)?.clone())
    }

    /// Rank of `E_k` (zero beyond the length).
    pub fn resolution_rank(&self, k: usize) -> usize {
        self.resolution.rank(k)
    }

    /// Whether `f O^r ⊆ J` for every generator of the sequence.
    pub fn is_killed_by(&self, ci: &CompleteIntersection) -> Result<Option<Polynomial>> {
        let j = self.relations();
        for f in ci.generators() {
            for i in 0..self.rank() {
                let v = RingVector::unit(self.ring(), self.rank(), i).mul_poly(f);
                if !j.contains(&v)? {
                    return Ok(Some(f.clone()));
                }
            }
        }
        Ok(None)
    }
}

pub fn certified(p: &RingMatrix) -> bool {
    is_graded_matrix(p) || is_monomial_matrix(p)
}

/// `Ext^k(coker P, O)`.
pub fn ext_module(p: &RingMatrix, k: usize) -> Result<SubquotientPresentation> {
    PresentedModule::new(p)?.ext_or_zero(k)
}

/// A class in `Ext^p(G, O)` given by a cocycle `xi0 ∈ Hom(E_p, O)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    degree: usize,
    xi0: RingVector,
}

impl ExtClass {
    /// Checks `xi0 ∘ phi_{p+1} = 0`.
    pub fn new(g: &PresentedModule, degree: usize, xi0: RingVector) -> Result<ExtClass> {
        if xi0.rank() != g.resolution_rank(degree) {
            return Err(Error::RankMismatch {
                left: g.resolution_rank(degree),
                right: xi0.rank(),
            });
        }
        let res = g.resolution();
        if degree < res.length() {
            let row = res.d(degree + 1).transpose().try_mul_vector(&xi0)?;
            if !row.is_zero() {
                return Err(Error::precondition_with("not a cocycle", xi0.to_string()));
            }
        }
        Ok(ExtClass { degree, xi0 })
    }

    /// The `j`-th generator of the Ext presentation.
    pub fn generator(g: &PresentedModule, degree: usize, j: usize) -> Result<ExtClass> {
        let ext = g.ext(degree)?;
        if j >= ext.num_generators() {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: ext.num_generators(),
            });
        }
        Ok(ExtClass {
            degree,
            xi0: ext.generator(j),
        })
    }

    /// The class with coordinates `c` in the Ext presentation.
    pub fn from_coordinates(g: &PresentedModule, degree: usize, c: &RingVector) -> Result<ExtClass> {
        let xi0 = g.ext(degree)?.cycle(c)?;
        Ok(ExtClass { degree, xi0 })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn xi0(&self) -> &RingVector {
        &self.xi0
    }

    pub fn is_zero(&self, g: &PresentedModule) -> Result<bool> {
        if self.xi0.rank() == 0 {
            return Ok(true);
        }
        g.ext(self.degree)?.is_zero_class(&self.xi0)
    }

    /// Equality modulo `im phi_p^*`.
    pub fn equals(&self, other: &ExtClass, g: &PresentedModule) -> Result<bool> {
        if self.degree != other.degree {
            return Ok(false);
        }
        let diff = ExtClass {
            degree: self.degree,
            xi0: self.xi0.try_sub(&other.xi0)?,
        };
        diff.is_zero(g)
    }

    pub fn add(&self, other: &ExtClass) -> Result<ExtClass> {
        Ok(ExtClass {
            degree: self.degree,
            xi0: self.xi0.try_add(&other.xi0)?,
        })
    }

    pub fn scale(&self, f: &Polynomial) -> ExtClass {
        ExtClass {
            degree: self.degree,
            xi0: self.xi0.mul_poly(f),
        }
    }

    pub(crate) fn raw(degree: usize, xi0: RingVector) -> ExtClass {
        ExtClass { degree, xi0 }
    }
}

/// The class `h = 1` of `Ext^p(O/I, O) ≅ O/I`, i.e. the dual of the top
/// wedge `e_1 ∧ ... ∧ e_p` over the Koszul resolution.
pub fn ci_ext_generator(ci: &CompleteIntersection) -> Result<(PresentedModule, ExtClass)> {
    let g = PresentedModule::complete_intersection(ci)?;
    let one = RingVector::new(ci.ring(), vec![ci.ring().one()])?;
    let xi = ExtClass::new(&g, ci.len(), one)?;
    Ok((g, xi))
}

/// Checks `Ext^p(O/I, O) ≅ O/I`: the presentation has a single generator
/// `u (e_1 ∧ ... ∧ e_p)^*` with `u` a unit and relation module exactly `I`.
pub fn ci_ext_isomorphism(ci: &CompleteIntersection) -> Result<bool> {
    let (g, _) = ci_ext_generator(ci)?;
    let ext = g.ext(ci.len())?;
    if ext.num_generators() != 1 || !ext.generator(0).get(0).is_unit() {
        return Ok(false);
    }
    ext.relation_module().same_as(ci.ideal())
}

/// A value in `Ext^p(O/I, O) ≅ O/I`, kept as a normal form modulo `I`.
#[derive(Clone, Debug)]
pub struct CohClass {
    level: CompleteIntersection,
    value: Polynomial,
}

impl CohClass {
    pub fn new(level: &CompleteIntersection, value: &Polynomial) -> Result<CohClass> {
        Ok(CohClass {
            value: level.reduce(value)?,
            level: level.clone(),
        })
    }

    pub fn level(&self) -> &CompleteIntersection {
        &self.level
    }

    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn ci(r: &Ring, gens: &[&str]) -> CompleteIntersection {
        CompleteIntersection::new(r, gens.iter().map(|s| r.parse(s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn ci_ext_isomorphisms() {
        let r = Ring::degrevlex(Field::Rational, ["x", "y", "z", "w"]).unwrap();
        for gens in [&["x"][..], &["x", "y"], &["x^2", "y^3"], &["z^2", "w^2"]] {
            assert!(ci_ext_isomorphism(&ci(&r, gens)).unwrap(), "{gens:?}");
        }
    }

    #[test]
    fn ext_of_two_monomials() {
        let r = Ring::degrevlex(Field::Rational, ["x", "y"]).unwrap();
        let p = RingMatrix::from_rows(&r, vec![vec![r.parse("x^2").unwrap(), r.parse("x*y").unwrap()]]).unwrap();
        let g = PresentedModule::new(&p).unwrap();
        assert!(g.ext(0).unwrap().is_zero());
        let e1 = g.ext(1).unwrap();
        assert_eq!(e1.num_generators(), 1);
        let x = Submodule::ideal(&r, &[r.parse("x").unwrap()]).unwrap();
        assert!(e1.relation_module().same_as(&x).unwrap());
        assert!(!g.ext(2).unwrap().is_zero());
        assert!(ext_module(&p, 5).unwrap().is_zero());
    }

    #[test]
    fn ext_of_regular_pair_vanishes_below_codim() {
        let r = Ring::degrevlex(Field::Rational, ["x", "y"]).unwrap();
        let p = RingMatrix::from_rows(&r, vec![vec![r.parse("x").unwrap(), r.parse("y").unwrap()]]).unwrap();
        assert!(ext_module(&p, 1).unwrap().is_zero());
    }

    #[test]
    fn artinian_ext_has_two_generators() {
        let r = Ring::degrevlex(Field::Rational, ["z", "w"]).unwrap();
        let p = RingMatrix::from_rows(&r, vec![["z^2", "z*w", "w^2"].iter().map(|s| r.parse(s).unwrap()).collect()]).unwrap();
        assert_eq!(ext_module(&p, 2).unwrap().num_generators(), 2);
    }
}
