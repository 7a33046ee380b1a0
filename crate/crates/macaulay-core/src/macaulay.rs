//! The Macaulay growth function `a^<d>`, computed two independent ways.
//!
//! Definitionally, shift every term `C(k_i, i)` of the d-binomial
//! representation to `C(k_i + 1, i + 1)` and sum. Recursively, peel one
//! leading-binomial decomposition per degree:
//! `a^<d> = C(c+d, d+1) + A^<d-1>`, which holds for either decomposition
//! form. Both routes agree everywhere; tests and sweeps lean on that.

use serde::{Deserialize, Serialize};

use crate::binomial::{binom, d_binomial_rep, decompose, DecompositionForm};
use crate::error::{Error, Result};
use crate::nat::Nat;

/// `a^<d>` via the shifted d-binomial representation; `0^<d> = 0`.
pub fn macaulay(a: &Nat, d: u32) -> Result<Nat> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if a.is_zero() {
        return Ok(Nat::zero());
    }
    let rep = d_binomial_rep(a, d)?;
    Ok(rep
        .ks
        .iter()
        .map(|(k, i)| binom(&(k + 1u32), &Nat::from(*i + 1)))
        .sum())
}

/// `a^<d>` via the peeling recursion, defaulting to the half-open form.
pub fn macaulay_recursive(a: &Nat, d: u32) -> Result<Nat> {
    macaulay_recursive_with(a, d, DecompositionForm::HalfOpen)
}

/// `a^<d>` via the peeling recursion, using `form` at every level.
pub fn macaulay_recursive_with(a: &Nat, d: u32, form: DecompositionForm) -> Result<Nat> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if a.is_zero() {
        return Ok(Nat::zero());
    }
    if d == 1 {
        return Ok(triangular(a));
    }
    let dec = decompose(a, d, form)?;
    let lead = binom(&(&dec.c + d), &Nat::from(d + 1));
    Ok(&lead + &macaulay_recursive_with(&dec.remainder, d - 1, form)?)
}

/// `a(a+1)/2`, the closed form of `a^<1>`.
fn triangular(a: &Nat) -> Nat {
    Nat((&a.0 * (&a.0 + 1u32)) >> 1)
}

/// Whether `a < b  =>  a^<d> < b^<d>` holds for this instance.
///
/// Vacuously true when `a >= b`; expected true always.
pub fn strictly_monotone(a: &Nat, b: &Nat, d: u32) -> Result<bool> {
    if a >= b {
        return Ok(true);
    }
    Ok(macaulay(a, d)? < macaulay(b, d)?)
}

/// How a [`MacaulayValue`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Definitional,
    Recursive,
}

/// One evaluation of the growth function, tagged with its route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayValue {
    pub input: Nat,
    pub d: u32,
    pub output: Nat,
    pub method: Method,
}

impl MacaulayValue {
    pub fn compute(a: &Nat, d: u32, method: Method) -> Result<Self> {
        let output = match method {
            Method::Definitional => macaulay(a, d)?,
            Method::Recursive => macaulay_recursive(a, d)?,
        };
        Ok(MacaulayValue {
            input: a.clone(),
            d,
            output,
            method,
        })
    }
}

/// Dense table of `a^<d>` for `a = 0..=max` at one fixed degree.
///
/// Sweeps evaluate the growth function millions of times; building the table
/// once up front keeps them pure and cheap to share across workers.
#[derive(Debug, Clone)]
pub struct MacaulayTable {
    d: u32,
    values: Vec<Nat>,
}

impl MacaulayTable {
    pub fn build(d: u32, max: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree);
        }
        let values = (0..=max)
            .map(|a| macaulay(&Nat::from(a), d))
            .collect::<Result<Vec<_>>>()?;
        Ok(MacaulayTable { d, values })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn max(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// `a^<d>` for `a <= max`; panics past the end.
    pub fn get(&self, a: u64) -> &Nat {
        &self.values[a as usize]
    }
}
