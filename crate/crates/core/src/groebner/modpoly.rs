//! Internal sparse representation of free-module elements: a list of terms
//! `c * m * e_comp` sorted strictly descending in a module order.

use std::cmp::Ordering;

use crate::ring::{Monomial, Polynomial, Ring, RingVector, Scalar};

use super::order::ModuleOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mono: Monomial,
    pub comp: usize,
    pub coef: Scalar,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct MPoly {
    pub terms: Vec<Term>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn unit(nvars: usize, comp: usize, one: Scalar) -> MPoly {
        MPoly {
            terms: vec![Term {
                mono: Monomial::one(nvars),
                comp,
                coef: one,
            }],
        }
    }

    /// Sorts and combines an arbitrary list of terms.
    pub fn from_terms(mut terms: Vec<Term>, ord: &ModuleOrder) -> MPoly {
        terms.sort_by(|a, b| ord.cmp(&b.mono, b.comp, &a.mono, a.comp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mono == t.mono => {
                    l.coef = l.coef.add(&t.coef);
                    if l.coef.is_zero() {
                        out.pop();
                    }
                }
                _ if t.coef.is_zero() => {}
                _ => out.push(t),
            }
        }
        MPoly { terms: out }
    }

    pub fn from_entries(entries: &[Polynomial], ord: &ModuleOrder) -> MPoly {
        Self::from_entries_offset(entries, 0, ord)
    }

    /// Places `entries[i]` at component `offset + i`.
    pub fn from_entries_offset(entries: &[Polynomial], offset: usize, ord: &ModuleOrder) -> MPoly {
        let terms = entries
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    mono: m.clone(),
                    comp: offset + i,
                    coef: c.clone(),
                })
            })
            .collect();
        MPoly::from_terms(terms, ord)
    }

    pub fn from_vector(v: &RingVector, ord: &ModuleOrder) -> MPoly {
        MPoly::from_entries(v.entries(), ord)
    }

    /// Entries for components `lo..hi` as polynomials of `ring`.
    pub fn to_entries_range(&self, ring: &Ring, lo: usize, hi: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); hi - lo];
        for t in &self.terms {
            if t.comp >= lo && t.comp < hi {
                buckets[t.comp - lo].push((t.mono.clone(), t.coef.clone()));
            }
        }
        buckets.into_iter().map(|b| ring.from_terms(b)).collect()
    }

    pub fn to_vector(&self, ring: &Ring, rank: usize) -> RingVector {
        RingVector::new(ring, self.to_entries_range(ring, 0, rank)).expect("same ring")
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    comp: t.comp,
                    coef: t.coef.mul(c),
                })
                .collect(),
        }
    }

    /// Leading coefficient one (zero stays zero). Returns the factor used.
    pub fn make_monic(&mut self) -> Option<Scalar> {
        let inv = self.terms.first()?.coef.inv();
        if !inv.is_one() {
            *self = self.scale(&inv);
        }
        Some(inv)
    }

    /// `self += c * m * other`.
    pub fn add_mul(&mut self, c: &Scalar, m: &Monomial, other: &MPoly, ord: &ModuleOrder) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + other.terms.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = other.terms.iter().map(|t| Term {
            mono: t.mono.mul(m),
            comp: t.comp,
            coef: t.coef.mul(c),
        });
        let mut bnext = bi.next();
        loop {
            match (ai.peek(), &bnext) {
                (None, None) => break,
                (Some(_), None) => out.push(ai.next().unwrap()),
                (None, Some(_)) => {
                    out.push(bnext.take().unwrap());
                    bnext = bi.next();
                }
                (Some(x), Some(y)) => match ord.cmp(&x.mono, x.comp, &y.mono, y.comp) {
                    Ordering::Greater => out.push(ai.next().unwrap()),
                    Ordering::Less => {
                        out.push(bnext.take().unwrap());
                        bnext = bi.next();
                    }
                    Ordering::Equal => {
                        let mut x = ai.next().unwrap();
                        x.coef = x.coef.add(&y.coef);
                        if !x.coef.is_zero() {
                            out.push(x);
                        }
                        bnext = bi.next();
                    }
                },
            }
        }
        self.terms = out;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder};

    #[test]
    fn add_mul_cancels() {
        let r = Ring::degrevlex(Field::Rational, ["x", "y"]).unwrap();
        let ord = ModuleOrder::TermOverPosition(MonomialOrder::DegRevLex);
        let v = |a: &str, b: &str| MPoly::from_entries(&[r.parse(a).unwrap(), r.parse(b).unwrap()], &ord);
        let mut f = v("x^2*y", "x*y");
        let g = v("x^2", "x");
        f.add_mul(&r.field().from_i64(-1), &Monomial::from_exponents(&[0, 1]), &g, &ord);
        assert!(f.is_zero());
        let h = v("x + y", "1");
        assert_eq!(h.to_vector(&r, 2).to_string(), "[x + y, 1]");
        assert_eq!(h.lead().unwrap().comp, 0);
    }
}
