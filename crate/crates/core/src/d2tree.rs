//! The tree whose vertices are the fractions `p/q` with `p` even and whose
//! edges join slopes at distance exactly 2.
//!
//! Every non-root vertex on the non-negative side has a unique *mother*,
//! obtained by lowering the last term of its standard expansion by 2. The
//! negative side is the mirror image under `x ↦ −x`; nothing here builds
//! continued fractions of negative numbers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::contfrac::{eval, std_expand, ContFrac};
use crate::exactfrac::normalize_lens;
use crate::{Error, ExtRational};

pub fn is_vertex(x: &ExtRational) -> bool {
    x.numer().is_even()
}

fn require_vertex(x: &ExtRational) -> Result<(), Error> {
    if is_vertex(x) {
        Ok(())
    } else {
        Err(Error::NotAVertex(x.clone()))
    }
}

/// `M(x)`: lower the last standard term by 2 and re-evaluate.
///
/// Negative vertices use `M(−x) = −M(x)`.
pub fn mother(x: &ExtRational) -> Result<ExtRational, Error> {
    require_vertex(x)?;
    if x.is_zero() {
        return Err(Error::RootHasNoMother);
    }
    if x.is_negative() {
        return mother(&x.neg()).map(|m| m.neg());
    }
    let cf = std_expand(x)?;
    let tail = ExtRational::integer(cf.last() - 2);
    eval(&cf.with_last(tail))
}

/// Child parameters in the order `1, −3, 3, −5, 5, …`; at the root only
/// `1, 3, 5, …` (the non-negative side).
pub fn default_t_values(x: &ExtRational, count: usize) -> Vec<BigInt> {
    if x.is_zero() {
        return (0..count).map(|k| BigInt::from(2 * k + 1)).collect();
    }
    (0..count)
        .map(|k| {
            let m = BigInt::from(k.div_ceil(2) * 2 + 1);
            if k % 2 == 1 {
                -m
            } else {
                m
            }
        })
        .collect()
}

fn check_t(x: &ExtRational, t: &BigInt) -> Result<(), Error> {
    let bad = t.is_even() || *t == -BigInt::one() || (x.is_zero() && !t.is_positive());
    if bad {
        Err(Error::BadT(t.clone()))
    } else {
        Ok(())
    }
}

/// The child `[a0, …, a(n−1), an + 2/t]` of `x` for each odd `t ≠ −1`.
///
/// At the root `0/1 = [0]` this yields `2/t`, so only `t ≥ 1` is accepted.
pub fn children(x: &ExtRational, ts: &[BigInt]) -> Result<Vec<ExtRational>, Error> {
    require_vertex(x)?;
    if x.is_negative() {
        return Err(Error::NegativeInput);
    }
    let cf = std_expand(x)?;
    ts.iter()
        .map(|t| {
            check_t(x, t)?;
            let tail = ExtRational::new(cf.last() * t + 2, t.clone())?;
            eval(&cf.with_last(tail))
        })
        .collect()
}

/// Number of mother steps from `x` down to `0/1`.
///
/// Negative vertices are measured through their mirror image.
pub fn generation(x: &ExtRational) -> Result<usize, Error> {
    require_vertex(x)?;
    let mut cur = if x.is_negative() { x.neg() } else { x.clone() };
    let mut k = 0;
    while !cur.is_zero() {
        cur = mother(&cur)?;
        k += 1;
    }
    Ok(k)
}

/// An open interval `(lo, hi)` of the non-negative half line, where `hi`
/// may be `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Territory {
    pub lo: ExtRational,
    pub hi: ExtRational,
}

impl Territory {
    pub fn contains(&self, x: &ExtRational) -> bool {
        self.lo < *x && *x < self.hi
    }

    pub fn contains_interval(&self, other: &Territory) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_disjoint(&self, other: &Territory) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }
}

/// The open interval that holds `x` and all of its descendants.
///
/// The endpoints are the expansion of `x` with its last term replaced by
/// `an − 1` and by `∞`; which one is the lower end depends on the parity of
/// `n`. The result is always stored low to high.
pub fn territory(x: &ExtRational) -> Result<Territory, Error> {
    require_vertex(x)?;
    if !x.is_positive_finite() {
        return Err(Error::NonPositive(x.clone()));
    }
    let cf = std_expand(x)?;
    let near = eval(&cf.with_last(ExtRational::integer(cf.last() - 1)))?;
    let far = eval(&cf.with_last(ExtRational::infinity()))?;
    let (lo, hi) = if cf.last_index() % 2 == 0 {
        (near, far)
    } else {
        (far, near)
    };
    debug_assert!(lo < hi);
    Ok(Territory { lo, hi })
}

/// Boundary slopes of the surfaces produced by successive band sums, from
/// the meridian disk at `0/1` to the slope `p/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathResult {
    pub slopes: Vec<ExtRational>,
    /// Standard expansion of `|r_i|` for each slope `r_i`.
    pub expansions: Vec<ContFrac>,
    /// Number of band sums, which is the minimum crosscap number.
    pub crosscap: usize,
    /// `2 − crosscap`.
    pub euler_char: i64,
}

/// Walks the mother chain from `p/q` back to `0/1`.
///
/// `q` is taken literally: `p/(q + p)` and `p/(−q)` are different vertices
/// with root paths of the same length.
pub fn slope_path(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<PathResult, Error> {
    let p = p.into();
    let q = q.into();
    normalize_lens(p.clone(), q.clone())?;
    let target = ExtRational::new(p, q)?;
    let mut slopes = alloc::vec![target.clone()];
    let mut cur = target;
    while !cur.is_zero() {
        cur = mother(&cur)?;
        slopes.push(cur.clone());
    }
    slopes.reverse();
    let expansions = slopes
        .iter()
        .map(|s| std_expand(&if s.is_negative() { s.neg() } else { s.clone() }))
        .collect::<Result<Vec<_>, _>>()?;
    let crosscap = slopes.len() - 1;
    Ok(PathResult {
        slopes,
        expansions,
        crosscap,
        euler_char: 2 - crosscap as i64,
    })
}

/// True when `a` and `b` are joined by an edge, that is `|ps − rq| = 2`.
pub fn is_edge(a: &ExtRational, b: &ExtRational) -> Result<bool, Error> {
    require_vertex(a)?;
    require_vertex(b)?;
    Ok(a.distance(b) == 2u32.into())
}
