//! Exact coefficient fields: the rationals and prime fields `F_q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default prime for `F_q` sessions.
pub const DEFAULT_PRIME: u32 = 32003;

/// Field descriptor shared by every scalar of a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Builds a prime field, rejecting composite or out-of-range moduli.
    pub fn prime(q: u32) -> Result<Field> {
        if !(2..=(1 << 31)).contains(&q) || !is_prime(q) {
            return Err(Error::InvalidField(format!("{q} is not a supported prime")));
        }
        Ok(Field::Prime(q))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(q) => Scalar::Modular {
                value: v.rem_euclid(q as i64) as u32,
                modulus: q,
            },
        }
    }

    /// Maps an exact rational into the field; fails when the denominator vanishes mod q.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        match *self {
            Field::Rational => Ok(Scalar::Rational(r.clone())),
            Field::Prime(q) => {
                let qb = BigInt::from(q);
                let num = r.numer().mod_floor(&qb).to_u32().unwrap_or(0);
                let den = r.denom().mod_floor(&qb).to_u32().unwrap_or(0);
                if den == 0 {
                    return Err(Error::InvalidField(format!(
                        "denominator of {r} vanishes modulo {q}"
                    )));
                }
                let n = Scalar::Modular { value: num, modulus: q };
                let d = Scalar::Modular { value: den, modulus: q };
                Ok(n.mul(&d.inv()))
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => true,
            (Field::Prime(q), Scalar::Modular { modulus, .. }) => q == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(q) => write!(f, "Fp({q})"),
        }
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q as u64 {
        if (q as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator; modular values are reduced into `0..modulus`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: q }, Scalar::Modular { value: b, modulus: q2 }) => {
                debug_assert_eq!(q, q2);
                let s = *a as u64 + *b as u64;
                Scalar::Modular { value: (s % *q as u64) as u32, modulus: *q }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: q }, Scalar::Modular { value: b, modulus: q2 }) => {
                debug_assert_eq!(q, q2);
                let p = *a as u64 * *b as u64;
                Scalar::Modular { value: (p % *q as u64) as u32, modulus: *q }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Modular { value, modulus } => {
                let (mut t, mut new_t) = (0i64, 1i64);
                let (mut r, mut new_r) = (*modulus as i64, *value as i64);
                while new_r != 0 {
                    let quot = r / new_r;
                    (t, new_t) = (new_t, t - quot * new_t);
                    (r, new_r) = (new_r, r - quot * new_r);
                }
                Scalar::Modular {
                    value: t.rem_euclid(*modulus as i64) as u32,
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Signed representative used for printing: rationals as-is, residues in
    /// the symmetric range `(-q/2, q/2]`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(r) => r.clone(),
            Scalar::Modular { value, modulus } => {
                let v = if *value > modulus / 2 {
                    *value as i64 - *modulus as i64
                } else {
                    *value as i64
                };
                BigRational::from_integer(BigInt::from(v))
            }
        }
    }

    pub fn is_negative_repr(&self) -> bool {
        self.to_rational().is_negative()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_rational();
        if r.is_integer() {
            write!(f, "{}", r.numer())
        } else {
            write!(f, "{}/{}", r.numer(), r.denom())
        }
    }
}
