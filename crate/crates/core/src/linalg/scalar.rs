//! Exact field elements over ℚ and prime fields 𝔽p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::HopfError;

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    /// 𝔽p for a prime `p`. Construct through [`FieldSpec::prime`].
    Prime(u64),
}

impl FieldSpec {
    /// 𝔽p, rejecting composite or trivial moduli.
    pub fn prime(p: u64) -> Result<Self, HopfError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(HopfError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `numer / denom` in this field; `None` when `denom` vanishes in the field.
    pub fn from_fraction(&self, numer: i64, denom: i64) -> Option<Scalar> {
        self.from_i64(denom).inv().map(|d| &self.from_i64(numer) * &d)
    }

    /// Whether `s` is an element of this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Residue { modulus, value }) => p == modulus && value < p,
            _ => false,
        }
    }

    /// Parses the textual form used by the JSON schemas: `"a"` or `"a/b"` over ℚ,
    /// a (possibly negative) integer over 𝔽p.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, HopfError> {
        let text = text.trim();
        match *self {
            FieldSpec::Rationals => {
                let (n, d) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let n: BigInt = n
                    .parse()
                    .map_err(|_| HopfError::Parse(format!("bad rational numerator `{text}`")))?;
                let d: BigInt = d
                    .parse()
                    .map_err(|_| HopfError::Parse(format!("bad rational denominator `{text}`")))?;
                if d.is_zero() {
                    return Err(HopfError::Parse(format!("zero denominator in `{text}`")));
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            FieldSpec::Prime(p) => {
                let v: BigInt = text
                    .parse()
                    .map_err(|_| HopfError::Parse(format!("bad residue `{text}`")))?;
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                let value = u64::try_from(r).expect("residue below modulus");
                Ok(Scalar::Residue { value, modulus: p })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// `{"kind": "Q"}` or `{"kind": "Fp", "p": p}`.
impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            FieldSpec::Rationals => {
                let mut m = serializer.serialize_map(Some(1))?;
                m.serialize_entry("kind", "Q")?;
                m.end()
            }
            FieldSpec::Prime(p) => {
                let mut m = serializer.serialize_map(Some(2))?;
                m.serialize_entry("kind", "Fp")?;
                m.serialize_entry("p", p)?;
                m.end()
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar. Rationals are kept reduced with a positive denominator
/// (guaranteed by [`BigRational`]); residues lie in `[0, modulus)`.
///
/// Arithmetic between scalars of different fields is a programming error and panics;
/// [`crate::Matrix`] validates fields at its boundaries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc = 1u128 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "arithmetic across different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => panic!("arithmetic across different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % p as u128) as u64,
                    modulus: p,
                }
            }
            _ => panic!("arithmetic across different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Rationals serialize as reduced `"a/b"` strings (`"a"` for integers), residues as integers.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(_) => serializer.serialize_str(&self.to_string()),
            Scalar::Residue { value, .. } => serializer.serialize_u64(*value),
        }
    }
}

impl Scalar {
    /// Sign of a rational (−1, 0, 1); residues report 0 or 1.
    pub fn signum(&self) -> i8 {
        match self {
            Scalar::Rational(q) if q.is_zero() => 0,
            Scalar::Rational(q) if q.is_negative() => -1,
            Scalar::Rational(_) => 1,
            Scalar::Residue { value, .. } => i8::from(*value != 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        let q = FieldSpec::Rationals;
        let a = q.parse_scalar("6/-4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(q.parse_scalar("4/2").unwrap().to_string(), "2");
        assert!(q.parse_scalar("1/0").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        let two = f5.from_i64(2);
        let three = f5.from_i64(-2);
        assert!((&two + &three).is_zero());
        assert_eq!(two.inv().unwrap(), three);
        assert_eq!(f5.parse_scalar("-1").unwrap(), f5.from_i64(4));
        assert!(f5.zero().inv().is_none());
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(0).is_err());
        assert_eq!(FieldSpec::prime(7).unwrap().characteristic(), 7);
    }

    #[test]
    fn fractions_in_char_p() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.from_fraction(1, 2).unwrap(), f3.from_i64(2));
        assert!(f3.from_fraction(1, 3).is_none());
    }
}
