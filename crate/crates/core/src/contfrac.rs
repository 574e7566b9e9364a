//! Continued fractions `[a0, a1, …, an] = a0 + 1/(a1 + 1/(… + 1/an))` and
//! the integer Möbius maps `x ↦ [an, …, a1, x]`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, ExtRational};

/// The standard expansion of a non-negative rational: `a0 ≥ 0`, `ai ≥ 1`
/// and a last term `≥ 2`, except for `[0]` and `[1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ContFrac {
    terms: Vec<BigInt>,
}

impl ContFrac {
    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    /// Index of the last term, `n` in `[a0, …, an]`.
    pub fn last_index(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn last(&self) -> &BigInt {
        self.terms.last().expect("expansions are never empty")
    }

    /// The expansion with its last term replaced by `tail`, as an
    /// evaluable sequence.
    pub fn with_last(&self, tail: ExtRational) -> Vec<ExtRational> {
        let (_, head) = self.terms.split_last().expect("expansions are never empty");
        head.iter()
            .cloned()
            .map(ExtRational::integer)
            .chain(core::iter::once(tail))
            .collect()
    }

    pub fn value(&self) -> ExtRational {
        let seq: Vec<_> = self
            .terms
            .iter()
            .cloned()
            .map(ExtRational::integer)
            .collect();
        eval(&seq).expect("standard expansions always evaluate")
    }
}

impl fmt::Display for ContFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for ContFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Standard expansion by Euclidean division.
pub fn std_expand(x: &ExtRational) -> Result<ContFrac, Error> {
    if x.is_infinite() {
        return Err(Error::InfinityInput);
    }
    if x.is_negative() {
        return Err(Error::NegativeInput);
    }
    let mut n = x.numer().clone();
    let mut d = x.denom_int();
    let mut terms = Vec::new();
    while !d.is_zero() {
        let (a, r) = n.div_rem(&d);
        terms.push(a);
        n = d;
        d = r;
    }
    // Past the first step the final quotient is at least 2, since the
    // remainder before it is strictly smaller than its divisor.
    Ok(ContFrac { terms })
}

/// Evaluates `[s0, s1, …, sk]` right to left with `r/0 = ∞`, `r/∞ = 0` and
/// `∞ + r = ∞`.
///
/// Terms may be any extended rationals, so non-standard tails such as
/// `an − 2`, `∞` or `an + 2/t` are accepted. Only `∞ + ∞` has no value.
pub fn eval(seq: &[ExtRational]) -> Result<ExtRational, Error> {
    let (last, rest) = seq.split_last().ok_or(Error::IndeterminateForm)?;
    let mut n = last.numer().clone();
    let mut d = last.denom_int();
    for a in rest.iter().rev() {
        // a + d/n = (a.num·n + a.den·d) / (a.den·n)
        let an = a.numer();
        let ad = a.denom_int();
        let new_n = an * &n + &ad * &d;
        let new_d = &ad * &n;
        n = new_n;
        d = new_d;
        if n.is_zero() && d.is_zero() {
            return Err(Error::IndeterminateForm);
        }
    }
    ExtRational::new(n, d)
}

/// Evaluates a sequence of plain integers.
pub fn eval_ints(seq: &[BigInt]) -> Result<ExtRational, Error> {
    let terms: Vec<_> = seq.iter().cloned().map(ExtRational::integer).collect();
    eval(&terms)
}

/// `[[a11, a12], [a21, a22]]` with determinant `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniModMatrix {
    pub a11: BigInt,
    pub a12: BigInt,
    pub a21: BigInt,
    pub a22: BigInt,
}

impl UniModMatrix {
    pub fn identity() -> Self {
        Self {
            a11: BigInt::one(),
            a12: BigInt::zero(),
            a21: BigInt::zero(),
            a22: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    /// Linear forms `(a11·n + a12·d, a21·n + a22·d)` before any reduction.
    pub fn act(&self, x: &ExtRational) -> (BigInt, BigInt) {
        let n = x.numer();
        let d = x.denom_int();
        (
            &self.a11 * n + &self.a12 * &d,
            &self.a21 * n + &self.a22 * &d,
        )
    }

    pub fn apply(&self, x: &ExtRational) -> Result<ExtRational, Error> {
        apply_mobius(self, x)
    }
}

/// Matrix of `x ↦ [an, …, a1, x]`, built as `A_n ⋯ A_1` with
/// `A_i = [[ai, 1], [1, 0]]`.
pub fn mobius_of(a: &[BigInt]) -> UniModMatrix {
    a.iter()
        .fold(UniModMatrix::identity(), |m, ai| UniModMatrix {
            a11: ai * &m.a11 + &m.a21,
            a12: ai * &m.a12 + &m.a22,
            a21: m.a11,
            a22: m.a12,
        })
}

pub fn apply_mobius(m: &UniModMatrix, x: &ExtRational) -> Result<ExtRational, Error> {
    let (n, d) = m.act(x);
    if n.is_zero() && d.is_zero() {
        return Err(Error::IndeterminateForm);
    }
    // A unimodular matrix maps coprime pairs to coprime pairs.
    debug_assert!(m.det().abs().is_one());
    Ok(ExtRational::from_coprime(n, d))
}
