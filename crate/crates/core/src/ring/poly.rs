use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::monomial::{Monomial, MonomialOrder};
use super::scalar::{Field, Scalar};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// A polynomial ring `k[x_1..x_n]` together with its term order. Cheap to
/// clone; two handles compare equal when field, variables and order agree.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl Ring {
    pub fn new<S: Into<String>>(
        field: Field,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Shape(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring(Arc::new(RingData { field, vars, order })))
    }

    /// Ring over `field` with degrevlex order.
    pub fn degrevlex<S: Into<String>>(field: Field, vars: impl IntoIterator<Item = S>) -> Result<Ring> {
        Ring::new(field, vars, MonomialOrder::DegRevLex)
    }

    /// Same field and variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring(Arc::new(RingData {
            field: self.0.field,
            vars: self.0.vars.clone(),
            order,
        }))
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn from_i64(&self, c: i64) -> Polynomial {
        self.constant(self.field().from_i64(c))
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: Scalar) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn monomial(&self, exps: &[u32]) -> Polynomial {
        self.term(Monomial::from_exponents(exps), self.field().one())
    }

    pub fn var(&self, index: usize) -> Result<Polynomial> {
        if index >= self.nvars() {
            return Err(Error::IndexOutOfRange {
                index,
                max: self.nvars().saturating_sub(1),
            });
        }
        Ok(self.term(Monomial::variable(self.nvars(), index), self.field().one()))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Polynomial {
        let mut terms: Vec<(Monomial, Scalar)> = terms.into_iter().collect();
        let ord = self.order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.clone(),
            terms: combine_sorted(terms),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.0.vars.join(","))
    }
}

fn combine_sorted(terms: Vec<(Monomial, Scalar)>) -> Vec<(Monomial, Scalar)> {
    let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => {
                *lc = lc.add(&c);
                if lc.is_zero() {
                    out.pop();
                }
            }
            _ if c.is_zero() => {}
            _ => out.push((m, c)),
        }
    }
    out
}

/// Sparse polynomial with terms strictly descending in the ring order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(self.ring.field().zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Nonzero constant, i.e. a unit of the polynomial ring.
    pub fn is_unit(&self) -> bool {
        matches!(self.constant_value(), Some(c) if !c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self.constant_value(), Some(c) if c.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|t| t.0.degree() == d)
            }
        }
    }

    /// Single term (or zero).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::SessionMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        // multiply the shorter operand term by term into the longer one
        let (a, b) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = self.ring.zero();
        for (m, c) in &a.terms {
            acc = acc.merge(&b.mul_term(m, c), false);
        }
        Ok(acc)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { c.neg() } else { c.clone() })));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `c * m * self`; order is preserved by multiplicativity.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc.mul(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Moves the polynomial into another ring with the same variables
    /// (re-sorting terms for that ring's order).
    pub fn to_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() || ring.field() != self.ring.field() {
            return Err(Error::SessionMismatch);
        }
        Ok(ring.from_terms(self.terms.iter().cloned()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_repr();
            let abs = if negative { c.neg() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                let v = &self.ring.var_names()[i];
                match e {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomials from different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$try(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}
