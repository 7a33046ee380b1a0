//! Exact binomial coefficients, Macaulay d-binomial representations, and the
//! two canonical leading-term decompositions.
//!
//! Every positive integer `a` has a unique expansion
//! `a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j)` with
//! `k_d > k_{d-1} > ... > k_j >= j >= 1`, found greedily: `k_d` is the largest
//! integer with `C(k_d, d) <= a`. This module computes those expansions and
//! the derived "leading binomial plus remainder" decompositions used by the
//! inequality machinery.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nat::Nat;

/// Binomial coefficient `C(a, b)`, exact; zero when `a < b`.
pub fn binom(a: &Nat, b: &Nat) -> Nat {
    if a < b {
        return Nat::zero();
    }
    // Iterate over the smaller of b and a-b.
    let other = &a.0 - &b.0;
    let k = if b.0 <= other { &b.0 } else { &other };
    if k.is_zero() {
        return Nat::one();
    }
    if let Some(v) = binom_u128(&a.0, k) {
        return Nat(BigUint::from(v));
    }
    let base = &a.0 - k; // factors run base+1 ..= base+k
    let mut result = BigUint::one();
    let mut i = BigUint::one();
    while i <= *k {
        // Exact at every step: i consecutive integers contain a multiple of i.
        result = result * (&base + &i) / &i;
        i += 1u32;
    }
    Nat(result)
}

/// Fast path for coefficients that fit in machine words.
fn binom_u128(a: &BigUint, k: &BigUint) -> Option<u128> {
    let a = a.to_u128()?;
    let k = k.to_u128()?;
    let base = a - k;
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result.checked_mul(base + i)? / i;
    }
    Some(result)
}

/// `C(m-1+d, d)`: the pure leading binomial indexed by `m`.
///
/// These are the values the corrected hypotheses pin the dominant term to;
/// `m = 0` gives zero.
pub fn bound_value(m: &Nat, d: u32) -> Nat {
    let index = match (m + d).checked_sub(&Nat::one()) {
        Some(v) => v,
        None => return Nat::zero(), // m = 0 and d = 0
    };
    binom(&index, &Nat::from(d))
}

/// Largest `k` with `C(k, i) <= r`; requires `r >= 1` and `i >= 1`.
///
/// `k -> C(k, i)` is strictly increasing for `k >= i`, so an exponential probe
/// followed by bisection works for inputs of any size.
pub(crate) fn largest_binomial_index(r: &Nat, i: u32) -> Nat {
    debug_assert!(!r.is_zero() && i >= 1);
    let mut lo = Nat::from(i); // C(i, i) = 1 <= r
    let mut hi = &lo + 1u32;
    while binom(&hi, &Nat::from(i)) <= *r {
        lo = hi.clone();
        hi = Nat(&hi.0 * 2u32);
    }
    // Invariant: C(lo, i) <= r < C(hi, i).
    let one = BigUint::one();
    while &hi.0 - &lo.0 > one {
        let mid = Nat((&hi.0 + &lo.0) >> 1);
        if binom(&mid, &Nat::from(i)) <= *r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The Macaulay d-binomial representation of a nonnegative integer.
///
/// `ks` lists `(k_i, i)` pairs with `i` descending consecutively from `d`
/// down to some `j >= 1`. The empty list represents zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialRep {
    /// Top degree of the expansion.
    pub d: u32,
    /// `(k_i, i)` terms, `i = d, d-1, ..., j`.
    pub ks: Vec<(Nat, u32)>,
}

impl BinomialRep {
    /// Check the structural invariants: consecutive descending indices from
    /// `d`, strictly decreasing `k`s, and `k_i >= i` everywhere.
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidDegree);
        }
        for (pos, (k, i)) in self.ks.iter().enumerate() {
            let expected = self
                .d
                .checked_sub(pos as u32)
                .filter(|i| *i >= 1)
                .ok_or_else(|| {
                    Error::InvalidRep(format!("too many terms for top degree {}", self.d))
                })?;
            if *i != expected {
                return Err(Error::InvalidRep(format!(
                    "index {} at position {pos}, expected {expected}",
                    i
                )));
            }
            if k.to_u64().is_some_and(|v| v < u64::from(*i)) {
                return Err(Error::InvalidRep(format!("k = {k} below its index {i}")));
            }
            if pos > 0 && self.ks[pos - 1].0 <= *k {
                return Err(Error::InvalidRep(format!(
                    "ks not strictly decreasing at position {pos}"
                )));
            }
        }
        Ok(())
    }
}

/// Greedy d-binomial representation of `a`; the empty representation for 0.
pub fn d_binomial_rep(a: &Nat, d: u32) -> Result<BinomialRep> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    let mut ks = Vec::new();
    let mut rest = a.clone();
    for i in (1..=d).rev() {
        if rest.is_zero() {
            break;
        }
        let k = largest_binomial_index(&rest, i);
        rest = rest
            .checked_sub(&binom(&k, &Nat::from(i)))
            .expect("greedy term exceeds remainder");
        ks.push((k, i));
    }
    debug_assert!(rest.is_zero(), "greedy expansion must terminate at index 1");
    let rep = BinomialRep { d, ks };
    debug_assert!(rep.validate().is_ok());
    Ok(rep)
}

/// Sum the representation back into the integer it stands for.
pub fn rep_value(rep: &BinomialRep) -> Result<Nat> {
    rep.validate()?;
    Ok(rep.ks.iter().map(|(k, i)| binom(k, &Nat::from(*i))).sum())
}

/// Left-lexicographic comparison of two representations with the same top
/// degree; a missing trailing entry counts as smaller. Agrees with numeric
/// order of the represented integers.
pub fn rep_lex_compare(r1: &BinomialRep, r2: &BinomialRep) -> Result<Ordering> {
    if r1.d != r2.d {
        return Err(Error::DegreeMismatch(r1.d, r2.d));
    }
    r1.validate()?;
    r2.validate()?;
    for (term1, term2) in r1.ks.iter().zip(r2.ks.iter()) {
        match term1.0.cmp(&term2.0) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(r1.ks.len().cmp(&r2.ks.len()))
}

/// Which range constraint the remainder of a [`Decomposition`] satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionForm {
    /// `a = C(c-1+d, d) + A` with `0 <= A < C(c-1+d, d-1)`, `c > 0`.
    HalfOpen,
    /// `a = C(c-1+d, d) + A` with `0 < A <= C(c-1+d, d-1)`, `c >= 0`.
    HalfClosed,
}

/// A positive integer written as a leading binomial plus remainder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub c: Nat,
    /// The remainder `A`.
    pub remainder: Nat,
    pub form: DecompositionForm,
    pub d: u32,
}

impl Decomposition {
    /// `C(c-1+d, d) + A`, the integer that was decomposed.
    pub fn value(&self) -> Nat {
        &binom(&self.top_index(), &Nat::from(self.d)) + &self.remainder
    }

    /// `C(c-1+d, d-1)`, the bound the remainder is measured against.
    pub fn remainder_bound(&self) -> Nat {
        binom(&self.top_index(), &Nat::from(self.d - 1))
    }

    /// `c - 1 + d`, computed as `c + d - 1` so that `c = 0` stays in range.
    fn top_index(&self) -> Nat {
        (&self.c + self.d)
            .checked_sub(&Nat::one())
            .expect("d >= 1 keeps c+d-1 nonnegative")
    }

    /// Check the range constraint of the tagged form.
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidDegree);
        }
        let bound = self.remainder_bound();
        match self.form {
            DecompositionForm::HalfOpen => {
                if self.c.is_zero() {
                    return Err(Error::InvalidRep("half-open form requires c > 0".into()));
                }
                if self.remainder >= bound {
                    return Err(Error::InvalidRep(format!(
                        "half-open remainder {} not below {bound}",
                        self.remainder
                    )));
                }
            }
            DecompositionForm::HalfClosed => {
                if self.remainder.is_zero() || self.remainder > bound {
                    return Err(Error::InvalidRep(format!(
                        "half-closed remainder {} not in (0, {bound}]",
                        self.remainder
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Write `a > 0` as `C(c-1+d, d) + A` with `0 <= A < C(c-1+d, d-1)`.
///
/// `c` is `k_d - d + 1` for the greedy leading term `k_d`.
pub fn decompose_half_open(a: &Nat, d: u32) -> Result<Decomposition> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if a.is_zero() {
        return Err(Error::InvalidInput("cannot decompose zero".into()));
    }
    let k = largest_binomial_index(a, d);
    let c = (&k + 1u32)
        .checked_sub(&Nat::from(d))
        .expect("k >= d for the greedy leading index");
    let remainder = a
        .checked_sub(&binom(&k, &Nat::from(d)))
        .expect("leading binomial does not exceed a");
    let dec = Decomposition {
        c,
        remainder,
        form: DecompositionForm::HalfOpen,
        d,
    };
    debug_assert!(dec.validate().is_ok());
    Ok(dec)
}

/// Write `a > 0` as `C(c-1+d, d) + A` with `0 < A <= C(c-1+d, d-1)`.
///
/// When `a` is exactly `C(b-1+d, d)` this steps the leading index down one,
/// giving `c = b - 1` and `A = C(b-2+d, d-1)`; otherwise it coincides with
/// the half-open decomposition.
pub fn decompose_half_closed(a: &Nat, d: u32) -> Result<Decomposition> {
    let open = decompose_half_open(a, d)?;
    let dec = if open.remainder.is_zero() {
        let c = open
            .c
            .checked_sub(&Nat::one())
            .expect("half-open c is positive");
        // C((c-1)+d-1, d-1) with the new c, i.e. C(c+d-1, d-1) shifted down.
        let remainder = binom(
            &(&c + d)
                .checked_sub(&Nat::one())
                .expect("d >= 1 keeps the index nonnegative"),
            &Nat::from(d - 1),
        );
        Decomposition {
            c,
            remainder,
            form: DecompositionForm::HalfClosed,
            d,
        }
    } else {
        Decomposition {
            form: DecompositionForm::HalfClosed,
            ..open
        }
    };
    debug_assert!(dec.validate().is_ok());
    debug_assert_eq!(&dec.value(), a);
    Ok(dec)
}

/// Decompose `a > 0` in the requested form.
pub fn decompose(a: &Nat, d: u32, form: DecompositionForm) -> Result<Decomposition> {
    match form {
        DecompositionForm::HalfOpen => decompose_half_open(a, d),
        DecompositionForm::HalfClosed => decompose_half_closed(a, d),
    }
}
