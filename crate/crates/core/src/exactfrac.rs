//! Irreducible fractions over arbitrary-precision integers, extended by a
//! single point at infinity.
//!
//! `1/0` and `-1/0` name the same point, stored as `1/0`. Every value built
//! through [`ExtRational::new`] is canonical: the denominator is non-negative,
//! the sign lives in the numerator and `gcd(|num|, den) = 1`.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::string::String;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An irreducible fraction `num/den`, or `∞ = 1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: BigInt,
    den: BigUint,
}

impl ExtRational {
    /// Reduces `n/d` to its canonical representative.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self, Error> {
        let n = n.into();
        let d = d.into();
        if n.is_zero() && d.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        if d.is_zero() {
            return Ok(Self::infinity());
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / &g, d / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Ok(Self {
            num: n,
            den: d.into_parts().1,
        })
    }

    /// Builds a value from a pair the caller knows to be coprime.
    ///
    /// Only the sign is normalized. Debug builds check coprimality.
    pub(crate) fn from_coprime(n: BigInt, d: BigInt) -> Self {
        debug_assert!(!(n.is_zero() && d.is_zero()));
        debug_assert!(n.gcd(&d).is_one(), "{n}/{d} is not reduced");
        if d.is_zero() {
            return Self::infinity();
        }
        let (n, d) = if d.is_negative() { (-n, -d) } else { (n, d) };
        Self {
            num: n,
            den: d.into_parts().1,
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigUint::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigUint::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    /// The denominator as a signed integer, for determinant arithmetic.
    pub fn denom_int(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.den.clone())
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive_finite(&self) -> bool {
        self.num.is_positive() && !self.is_infinite()
    }

    /// `-x`, with `-∞ = ∞`.
    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        Self::from_coprime(self.denom_int(), self.num.clone())
    }

    /// `|num·other.den − other.num·den|`, the distance between two slopes.
    pub fn distance(&self, other: &Self) -> BigUint {
        let det = &self.num * other.denom_int() - &other.num * self.denom_int();
        det.into_parts().1
    }

    /// `num + den` for a non-negative value; `size(∞) = 1`.
    pub fn size(&self) -> Result<BigUint, Error> {
        if self.is_negative() {
            return Err(Error::NegativeInput);
        }
        Ok(self.num.magnitude() + &self.den)
    }
}

impl Ord for ExtRational {
    /// Rational order with `∞` above every finite value.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * other.denom_int()).cmp(&(&other.num * self.denom_int())),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for ExtRational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

/// Parses `"p/q"` or a bare integer `"p"`.
impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| BigInt::from_str(t.trim()).map_err(|_| Error::Parse(String::from(s)));
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::integer(parse(s)?)),
        }
    }
}

/// Shorthand for [`ExtRational::new`] on machine integers; panics on `0/0`.
pub fn frac(n: i64, d: i64) -> ExtRational {
    ExtRational::new(n, d).expect("0/0 is not a fraction")
}

/// Canonical representative of `n/d`.
pub fn reduce(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<ExtRational, Error> {
    ExtRational::new(n, d)
}

pub fn distance(a: &ExtRational, b: &ExtRational) -> BigUint {
    a.distance(b)
}

pub fn size(x: &ExtRational) -> Result<BigUint, Error> {
    x.size()
}

/// Parameters of a lens space `L(p, q)` that contains non-orientable
/// surfaces.
///
/// `q_normalized` is the representative of `±q mod p` in `[1, p/2]`. Some
/// older write-ups print this range as `1 ≤ q ≤ 2/p`; the intended bound is
/// `p/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LensParams {
    pub p: BigInt,
    pub q: BigInt,
    pub q_normalized: BigInt,
}

impl LensParams {
    /// `p/q_normalized`, which is at least 2.
    pub fn slope(&self) -> ExtRational {
        ExtRational::from_coprime(self.p.clone(), self.q_normalized.clone())
    }

    /// True when normalization changed `q`.
    pub fn was_normalized(&self) -> bool {
        self.q != self.q_normalized
    }
}

/// Folds `q` into `[1, p/2]` using `L(p,q) ≅ L(p,q+p) ≅ L(p,−q)`.
pub fn normalize_lens(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<LensParams, Error> {
    let p = p.into();
    let q = q.into();
    if p < BigInt::from(2) {
        return Err(Error::PTooSmall(p));
    }
    if p.is_odd() {
        return Err(Error::OddP(p));
    }
    let r = q.mod_floor(&p);
    if r.is_zero() {
        return Err(Error::QZeroModP { p, q });
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::NotCoprime { p, q });
    }
    let flipped = &p - &r;
    let q_normalized = if flipped < r { flipped } else { r };
    Ok(LensParams { p, q, q_normalized })
}
