//! Closed-form minimum crosscap numbers of `L(p, q)`, `p` even.
//!
//! Both formulas read the standard expansion of `p/q` with `q` folded into
//! `[1, p/2]`, so the leading term is at least 2.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::contfrac::{std_expand, ContFrac};
use crate::exactfrac::{normalize_lens, LensParams};
use crate::{Error, ExtRational};

/// Step trace of the Bredon–Wood sum `Cr = Σ bi / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BWTrace {
    pub lens: LensParams,
    pub a: ContFrac,
    pub b: Vec<BigInt>,
    pub total: BigInt,
}

/// Step trace of the halving formula `Cr = Σ βi`.
///
/// `alpha` lists the standard terms from the integer part `αn` down to the
/// last term `α0`. `alpha_prime` and `beta` are indexed from 0 upward, so
/// `alpha_prime[0] = α0` is the last standard term. `∞` entries in
/// `alpha_prime` are stored as `1/0`; finite ones as `k/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewTrace {
    pub lens: LensParams,
    pub alpha: ContFrac,
    pub alpha_prime: Vec<ExtRational>,
    pub beta: Vec<BigInt>,
    pub total: BigInt,
}

pub fn crosscap_bw(lens: &LensParams) -> BWTrace {
    let a = std_expand(&lens.slope()).expect("p/q is positive and finite");
    let terms = a.terms();
    let mut b: Vec<BigInt> = Vec::with_capacity(terms.len());
    let mut running = BigInt::zero();
    for (i, ai) in terms.iter().enumerate() {
        let bi = if i == 0 || b[i - 1] != terms[i - 1] || running.is_odd() {
            ai.clone()
        } else {
            BigInt::zero()
        };
        running += &bi;
        b.push(bi);
    }
    assert!(
        running.is_even(),
        "Σ b = {running} is odd for {}",
        lens.slope()
    );
    let total = running / 2;
    BWTrace {
        lens: lens.clone(),
        a,
        b,
        total,
    }
}

pub fn crosscap_new(lens: &LensParams) -> NewTrace {
    let alpha = std_expand(&lens.slope()).expect("p/q is positive and finite");
    // α0 is the last standard term.
    let reversed: Vec<&BigInt> = alpha.terms().iter().rev().collect();
    let mut alpha_prime: Vec<Option<BigInt>> = Vec::with_capacity(reversed.len());
    for (i, &ai) in reversed.iter().enumerate() {
        let next = match alpha_prime.last() {
            None => Some(ai.clone()),
            Some(None) => Some(ai.clone()),
            Some(Some(prev)) if prev.is_odd() => Some(ai + 1),
            Some(Some(_)) => None,
        };
        debug_assert!(i == alpha_prime.len());
        alpha_prime.push(next);
    }
    if let Some(Some(last)) = alpha_prime.last() {
        assert!(
            last.is_even(),
            "final α' = {last} is odd for {}",
            lens.slope()
        );
    }
    let beta: Vec<BigInt> = alpha_prime
        .iter()
        .map(|a| match a {
            None => BigInt::zero(),
            Some(a) => a / 2,
        })
        .collect();
    let total = beta.iter().sum();
    NewTrace {
        lens: lens.clone(),
        alpha,
        alpha_prime: alpha_prime
            .into_iter()
            .map(|a| a.map_or_else(ExtRational::infinity, ExtRational::integer))
            .collect(),
        beta,
        total,
    }
}

/// Minimum crosscap number of `L(p, q)` by the Bredon–Wood formula.
pub fn crosscap(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<BigInt, Error> {
    Ok(crosscap_bw(&normalize_lens(p, q)?).total)
}
