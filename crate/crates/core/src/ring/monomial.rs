use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn variable(nvars: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    pub(crate) fn insert_front(&self, exp: u32) -> Monomial {
        let mut v = SmallVec::with_capacity(self.0.len() + 1);
        v.push(exp);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    pub(crate) fn drop_front(&self) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[1..]))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Term order on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Block order: degrevlex on the first `block` variables, ties broken by
    /// degrevlex on the rest. Eliminates the leading block.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        self.cmp_by(a.len(), |i| a[i], |i| b[i])
    }

    /// Compares `a * sa` with `b * sb` without materialising the products.
    pub fn cmp_shifted(&self, a: &Monomial, sa: &Monomial, b: &Monomial, sb: &Monomial) -> Ordering {
        let (a, sa, b, sb) = (a.exponents(), sa.exponents(), b.exponents(), sb.exponents());
        self.cmp_by(a.len(), |i| a[i] + sa[i], |i| b[i] + sb[i])
    }

    #[inline]
    fn cmp_by(&self, n: usize, fa: impl Fn(usize) -> u32, fb: impl Fn(usize) -> u32) -> Ordering {
        match *self {
            MonomialOrder::Lex => {
                for i in 0..n {
                    match fa(i).cmp(&fb(i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => degrevlex_range(0, n, &fa, &fb),
            MonomialOrder::Elimination { block } => {
                let block = block.min(n);
                degrevlex_range(0, block, &fa, &fb).then_with(|| degrevlex_range(block, n, &fa, &fb))
            }
        }
    }
}

#[inline]
fn degrevlex_range(
    lo: usize,
    hi: usize,
    fa: &impl Fn(usize) -> u32,
    fb: &impl Fn(usize) -> u32,
) -> Ordering {
    let da: u32 = (lo..hi).map(fa).sum();
    let db: u32 = (lo..hi).map(fb).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        match fa(i).cmp(&fb(i)) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// How module terms `m * e_i` are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionStrategy {
    TermOverPosition,
    PositionOverTerm,
}

/// Checked comparison on monomials.
pub fn mono_cmp(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::LengthMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(ord.cmp(a, b))
}
