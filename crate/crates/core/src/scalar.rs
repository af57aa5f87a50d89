//! Exact scalars: reduced rationals or residues modulo a small prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ForgeError;

/// Primes supported for finite-field enumeration.
pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// The base field every scalar of an environment lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Prime field `F_p`; only the primes in [`SUPPORTED_PRIMES`] are accepted.
    pub fn prime(p: u32) -> Result<Self, ForgeError> {
        if SUPPORTED_PRIMES.contains(&p) {
            Ok(Field::Prime(p))
        } else {
            Err(ForgeError::UnsupportedPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Prime {
                p,
                r: v.rem_euclid(p as i64) as u32,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar, ForgeError> {
        if den == 0 {
            return Err(ForgeError::DivisionByZero);
        }
        self.from_i64(num).mul_checked(&self.from_i64(den).inv()?)
    }

    /// All elements of a prime field in residue order; `None` for the rationals.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|r| Scalar::Prime { p, r }).collect()),
        }
    }

    pub fn size(self) -> Option<u32> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    /// Parses a canonical scalar string: reduced `n/d` (or `n`) over the
    /// rationals, a residue in `0..p` over `F_p`.
    pub fn parse(self, s: &str) -> Result<Scalar, ForgeError> {
        let bad = || ForgeError::NonCanonicalScalar(s.to_string());
        match self {
            Field::Prime(p) => {
                if !is_canonical_uint(s) {
                    return Err(bad());
                }
                let r: u64 = s.parse().map_err(|_| bad())?;
                if r >= p as u64 {
                    return Err(bad());
                }
                Ok(Scalar::Prime { p, r: r as u32 })
            }
            Field::Rational => {
                let (num_str, den_str) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let (neg, digits) = match num_str.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, num_str),
                };
                if !is_canonical_uint(digits) || (neg && digits == "0") {
                    return Err(bad());
                }
                let mut num: BigInt = digits.parse().map_err(|_| bad())?;
                if neg {
                    num = -num;
                }
                let den: BigInt = match den_str {
                    None => BigInt::one(),
                    Some(d) => {
                        if !is_canonical_uint(d) {
                            return Err(bad());
                        }
                        let d: BigInt = d.parse().map_err(|_| bad())?;
                        if d <= BigInt::one() {
                            return Err(bad());
                        }
                        d
                    }
                };
                let q = BigRational::new(num.clone(), den.clone());
                if q.numer() != &num || q.denom() != &den {
                    return Err(bad());
                }
                Ok(Scalar::Rational(q))
            }
        }
    }
}

fn is_canonical_uint(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'))
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element. Arithmetic between different fields is a
/// programming error and panics; use the `*_checked` forms at trust boundaries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { p: u32, r: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { r, .. } => *r == 1,
        }
    }

    pub fn add_checked(&self, o: &Scalar) -> Result<Scalar, ForgeError> {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Prime { p, r }, Scalar::Prime { p: q, r: s }) if p == q => Ok(Scalar::Prime {
                p: *p,
                r: (r + s) % p,
            }),
            _ => Err(ForgeError::FieldMismatch(self.field(), o.field())),
        }
    }

    pub fn mul_checked(&self, o: &Scalar) -> Result<Scalar, ForgeError> {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Prime { p, r }, Scalar::Prime { p: q, r: s }) if p == q => Ok(Scalar::Prime {
                p: *p,
                r: (r * s) % p,
            }),
            _ => Err(ForgeError::FieldMismatch(self.field(), o.field())),
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Scalar, ForgeError> {
        if self.is_zero() {
            return Err(ForgeError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { p, r } => {
                // Fermat: r^(p-2).
                let mut acc = 1u64;
                for _ in 0..p - 2 {
                    acc = acc * (*r as u64) % (*p as u64);
                }
                Scalar::Prime { p: *p, r: acc as u32 }
            }
        })
    }

    /// Canonical text form: reduced `n/d` (denominator omitted when 1) or a residue.
    pub fn to_canonical(&self) -> String {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { r, .. } => r.to_string(),
        }
    }

    /// Sort key usable for lexicographic comparison inside one prime field.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Prime { r, .. } => Some(*r),
            Scalar::Rational(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_checked(o).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_checked(o).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime { p, r } => Scalar::Prime {
                p: *p,
                r: (p - r) % p,
            },
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}
