//! Checkers and constructive machinery for the superadditivity lemmas.
//!
//! Three inequalities live here:
//!
//! * plain superadditivity, `a^<d> + b^<d> <= (a+b)^<d>`;
//! * its constrained variant: when `max(a, b) <= C(m-1+d, d)` and
//!   `a + b <= C(m-1+d, d) + c` with `c >= 1`, then
//!   `a^<d> + b^<d> <= C(m-1+d, d)^<d> + c^<d>`;
//! * the sequence inequality that sums of `a_i^<d>` stay below sums of
//!   `b_i^<d>` when the `b` side is a run of the bound value.
//!
//! The unconstrained two-term claim (`a1 + a2 <= b1 + b2` implies the same
//! for growth values) is false in general; [`naive_claim_35`] evaluates it
//! anyway so the search module can exhibit violations.
//!
//! Besides direct evaluation, the module replays the constructive proofs:
//! the pair-rewriting step that pushes `(a, b)` towards `(a+b, 0)` while the
//! growth-value sum never decreases, and the induction over sequence
//! instances.

use serde::{Deserialize, Serialize};

use crate::binomial::{bound_value, decompose_half_closed, decompose_half_open};
use crate::error::{Error, Result};
use crate::macaulay::macaulay;
use crate::nat::Nat;

/// How a pair state was produced from its predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepCase {
    Initial,
    /// Remainders fit together under the leading bound: move `B` across.
    Case1,
    /// Remainders overflow the bound: jump `a` to the next pure binomial.
    Case2,
}

/// One `(a_i, b_i)` state of the pair-rewriting construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairState {
    pub a: Nat,
    pub b: Nat,
    pub step_index: usize,
    pub case_applied: StepCase,
}

/// Full iteration of the pair construction, with the two landmark indices:
/// `l1` where `a` hits the bound `C(m-1+d, d)` (so `b` is `c`), and `l2`
/// where `b` reaches zero (so `a` is the full sum).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub states: Vec<PairState>,
    pub l1: usize,
    pub l2: usize,
}

/// The input tuple a report refers to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "lemma")]
pub enum LemmaInstance {
    Superadditive {
        a: Nat,
        b: Nat,
        d: u32,
    },
    Constrained {
        m: Nat,
        d: u32,
        a: Nat,
        b: Nat,
        c: Nat,
    },
    Naive35 {
        a1: Nat,
        a2: Nat,
        b1: Nat,
        b2: Nat,
        d: u32,
    },
    Sequence {
        #[serde(rename = "as")]
        a_seq: Vec<Nat>,
        #[serde(rename = "bs")]
        b_seq: Vec<Nat>,
        d: u32,
        m: Nat,
    },
}

/// Verdict plus witness values for one lemma instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub instance: LemmaInstance,
    pub lhs: Nat,
    pub rhs: Nat,
    pub holds: bool,
    pub trace: Option<ReportTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportTrace {
    Pairs(Vec<PairState>),
    Replay(Vec<ReplayRecord>),
}

/// Which reduction the sequence-lemma replay applied at one node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReplayCase {
    /// t = 1: single `a`, settled by monotonicity against `b_s`.
    BaseT1,
    /// s = 1: settled by iterated superadditivity plus monotonicity.
    BaseS1,
    /// b1 >= a1: absorb `a1` into `b1` and recurse on the shorter `a` side.
    Case1,
    /// b1 < a1 with s = 2: collapse the `a` tail into a single term.
    Case2S2,
    /// b1 < a1 and the `a`s already fit under `b2..b_s`: drop `b1`.
    Case2Drop,
    /// b1 < a1 general step: pair `(a1, surplus)` against `(bound, b1)` and
    /// recurse with the surplus as the new small `b`.
    Case2Relabel,
}

/// One node of the sequence-lemma replay, in pre-order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayRecord {
    pub depth: usize,
    pub case: ReplayCase,
    #[serde(rename = "as")]
    pub a_seq: Vec<Nat>,
    #[serde(rename = "bs")]
    pub b_seq: Vec<Nat>,
    pub lhs: Nat,
    pub rhs: Nat,
}

/// An instance of the sequence inequality: nondecreasing `a`s against `b`s
/// where every `b` past the first equals `C(m-1+d, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceInstance {
    #[serde(rename = "as")]
    pub a_seq: Vec<Nat>,
    #[serde(rename = "bs")]
    pub b_seq: Vec<Nat>,
    pub d: u32,
    pub m: Nat,
}

impl SequenceInstance {
    pub fn new(a_seq: Vec<Nat>, b_seq: Vec<Nat>, d: u32, m: Nat) -> Result<Self> {
        let inst = SequenceInstance { a_seq, b_seq, d, m };
        inst.validate()?;
        Ok(inst)
    }

    /// `C(m-1+d, d)`, the value the `b` run is pinned to.
    pub fn bound(&self) -> Nat {
        bound_value(&self.m, self.d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidDegree);
        }
        if self.m.is_zero() {
            return Err(Error::PreconditionViolated("m must be positive".into()));
        }
        if self.a_seq.is_empty() || self.b_seq.is_empty() {
            return Err(Error::PreconditionViolated(
                "both sequences must be nonempty".into(),
            ));
        }
        if self.a_seq.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::PreconditionViolated(
                "the a-sequence must be nondecreasing".into(),
            ));
        }
        let bound = self.bound();
        if self.b_seq.len() >= 2 {
            if self.b_seq[1..].iter().any(|b| *b != bound) {
                return Err(Error::PreconditionViolated(format!(
                    "b_2..b_s must all equal C(m-1+d, d) = {bound}"
                )));
            }
            if self.b_seq[0] > self.b_seq[1] {
                return Err(Error::PreconditionViolated("b_1 must not exceed b_2".into()));
            }
        } else if self.b_seq[0] > bound {
            return Err(Error::PreconditionViolated(format!(
                "b_1 must not exceed C(m-1+d, d) = {bound}"
            )));
        }
        let last_b = self.b_seq.last().expect("nonempty");
        if self.a_seq.iter().any(|a| a > last_b) {
            return Err(Error::PreconditionViolated(
                "every a_i must be at most b_s".into(),
            ));
        }
        let sum_a: Nat = self.a_seq.iter().sum();
        let sum_b: Nat = self.b_seq.iter().sum();
        if sum_a > sum_b {
            return Err(Error::PreconditionViolated(
                "sum of the a-sequence exceeds sum of the b-sequence".into(),
            ));
        }
        Ok(())
    }
}

/// How to evaluate a sequence instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceMode {
    /// Evaluate both sides directly.
    Direct,
    /// Replay the induction and record every reduction step.
    ProofReplay,
}

/// Plain superadditivity: `a^<d> + b^<d> <= (a+b)^<d>`. Holds for all inputs.
pub fn check_superadditive(a: &Nat, b: &Nat, d: u32) -> Result<LemmaReport> {
    let lhs = &macaulay(a, d)? + &macaulay(b, d)?;
    let rhs = macaulay(&(a + b), d)?;
    let holds = lhs <= rhs;
    Ok(LemmaReport {
        instance: LemmaInstance::Superadditive {
            a: a.clone(),
            b: b.clone(),
            d,
        },
        lhs,
        rhs,
        holds,
        trace: None,
    })
}

/// Constrained superadditivity against the bound `C(m-1+d, d)`.
///
/// Preconditions: `max(a, b) <= C(m-1+d, d)`, `a + b <= C(m-1+d, d) + c`,
/// `c >= 1`. A precondition failure is an error distinct from a genuine
/// inequality failure: the latter is impossible for valid inputs, so it is
/// reported as an internal invariant failure.
pub fn check_constrained(m: &Nat, d: u32, a: &Nat, b: &Nat, c: &Nat) -> Result<LemmaReport> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if m.is_zero() {
        return Err(Error::PreconditionViolated("m must be positive".into()));
    }
    if c.is_zero() {
        return Err(Error::PreconditionViolated("c must be positive".into()));
    }
    let bound = bound_value(m, d);
    if a > &bound || b > &bound {
        return Err(Error::PreconditionViolated(format!(
            "max(a, b) must be at most C(m-1+d, d) = {bound}"
        )));
    }
    if a + b > &bound + c {
        return Err(Error::PreconditionViolated(format!(
            "a + b must be at most C(m-1+d, d) + c = {}",
            &bound + c
        )));
    }
    let lhs = &macaulay(a, d)? + &macaulay(b, d)?;
    let rhs = &macaulay(&bound, d)? + &macaulay(c, d)?;
    if lhs > rhs {
        return Err(Error::Internal(format!(
            "constrained superadditivity failed on a valid instance: \
             m={m} d={d} a={a} b={b} c={c} ({lhs} > {rhs})"
        )));
    }
    Ok(LemmaReport {
        instance: LemmaInstance::Constrained {
            m: m.clone(),
            d,
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
        },
        lhs,
        rhs,
        holds: true,
        trace: None,
    })
}

/// The unconstrained two-term claim. False in general; `holds` reports what
/// this instance does.
///
/// Preconditions: `a1 <= b1`, `a2 <= b1`, `a1 + a2 <= b1 + b2`.
pub fn naive_claim_35(a1: &Nat, a2: &Nat, b1: &Nat, b2: &Nat, d: u32) -> Result<LemmaReport> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if a1 > b1 || a2 > b1 {
        return Err(Error::PreconditionViolated(
            "a1 and a2 must be at most b1".into(),
        ));
    }
    if a1 + a2 > b1 + b2 {
        return Err(Error::PreconditionViolated(
            "a1 + a2 must be at most b1 + b2".into(),
        ));
    }
    let lhs = &macaulay(a1, d)? + &macaulay(a2, d)?;
    let rhs = &macaulay(b1, d)? + &macaulay(b2, d)?;
    let holds = lhs <= rhs;
    Ok(LemmaReport {
        instance: LemmaInstance::Naive35 {
            a1: a1.clone(),
            a2: a2.clone(),
            b1: b1.clone(),
            b2: b2.clone(),
            d,
        },
        lhs,
        rhs,
        holds,
        trace: None,
    })
}

/// Raw values of one pair-rewriting step; shared by the public step and the
/// trace loop. Requires `a >= b > 0` and `d >= 2`.
fn pair_step_values(a: &Nat, b: &Nat, d: u32) -> Result<(Nat, Nat, StepCase)> {
    let dec_a = decompose_half_open(a, d)?;
    let dec_b = decompose_half_closed(b, d)?;
    let lead_bound = dec_a.remainder_bound(); // C(s-1+d, d-1)
    let joined = &dec_a.remainder + &dec_b.remainder;

    let (next_a, next_b, case) = if joined < lead_bound {
        // Move B over: a1 = C(s-1+d, d) + A + B = a + B, b1 = b - B.
        let next_a = a + &dec_b.remainder;
        let next_b = b
            .checked_sub(&dec_b.remainder)
            .expect("half-closed remainder is at most b");
        (next_a, next_b, StepCase::Case1)
    } else {
        let excess = joined
            .checked_sub(&lead_bound)
            .expect("joined remainder at least the bound in this branch");
        // The proof needs 0 <= e < C(t-1+d, d-1); assert rather than assume.
        if excess >= dec_b.remainder_bound() {
            return Err(Error::Internal(format!(
                "excess {excess} not below C(t-1+d, d-1) = {} for a={a} b={b} d={d}",
                dec_b.remainder_bound()
            )));
        }
        // a1 = C(s+d, d); by the Pascal identity that is a + (bound - A).
        let next_a = a
            + &lead_bound
                .checked_sub(&dec_a.remainder)
                .expect("half-open remainder is below its bound");
        let next_b = b
            .checked_sub(&dec_b.remainder)
            .expect("half-closed remainder is at most b")
            + excess;
        (next_a, next_b, StepCase::Case2)
    };

    // Transition invariants: sum preserved, strict moves, growth-sum monotone.
    if &next_a + &next_b != a + b {
        return Err(Error::Internal(format!(
            "pair step broke the sum: ({a}, {b}) -> ({next_a}, {next_b})"
        )));
    }
    if !(next_b < *b && *a < next_a) {
        return Err(Error::Internal(format!(
            "pair step not strictly ordered: ({a}, {b}) -> ({next_a}, {next_b})"
        )));
    }
    let before = &macaulay(a, d)? + &macaulay(b, d)?;
    let after = &macaulay(&next_a, d)? + &macaulay(&next_b, d)?;
    if before > after {
        return Err(Error::Internal(format!(
            "growth-value sum decreased: ({a}, {b}) -> ({next_a}, {next_b})"
        )));
    }
    Ok((next_a, next_b, case))
}

/// One step of the pair-rewriting construction.
///
/// Requires `a >= b > 0` and `d >= 2`; returns the input tagged `Initial`
/// and its successor tagged with the case that produced it.
pub fn construct_pair_step(a: &Nat, b: &Nat, d: u32) -> Result<(PairState, PairState)> {
    if d <= 1 {
        return Err(Error::InvalidInput(
            "pair construction requires d >= 2; degree one is settled in closed form".into(),
        ));
    }
    if b.is_zero() {
        return Err(Error::InvalidInput(
            "pair construction requires b > 0".into(),
        ));
    }
    if a < b {
        return Err(Error::InvalidInput(
            "pair construction requires a >= b".into(),
        ));
    }
    let (next_a, next_b, case) = pair_step_values(a, b, d)?;
    Ok((
        PairState {
            a: a.clone(),
            b: b.clone(),
            step_index: 0,
            case_applied: StepCase::Initial,
        },
        PairState {
            a: next_a,
            b: next_b,
            step_index: 1,
            case_applied: case,
        },
    ))
}

/// Outcome of normalizing a raw constrained instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalization {
    /// `b` (after swapping) is zero; monotonicity of the growth function
    /// settles the inequality outright.
    TrivialZeroB,
    /// `b <= c` (equivalently, `a` can be raised to the bound), so both terms
    /// are dominated by monotonicity.
    TrivialBound,
    /// A pair ready for the construction: `a >= b > 0`, `a < C(m-1+d, d)`,
    /// and `a + b = C(m-1+d, d) + c`.
    Ready { a: Nat, b: Nat },
}

/// Apply the proof's reductions to a raw constrained instance: swap so that
/// `a >= b`, peel off the trivial cases, and raise `a` until the sum meets
/// `C(m-1+d, d) + c` exactly.
pub fn normalize_constrained(m: &Nat, d: u32, a: &Nat, b: &Nat, c: &Nat) -> Result<Normalization> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if m.is_zero() || c.is_zero() {
        return Err(Error::PreconditionViolated(
            "m and c must be positive".into(),
        ));
    }
    let bound = bound_value(m, d);
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if hi > &bound {
        return Err(Error::PreconditionViolated(format!(
            "max(a, b) must be at most C(m-1+d, d) = {bound}"
        )));
    }
    if hi + lo > &bound + c {
        return Err(Error::PreconditionViolated(
            "a + b must be at most C(m-1+d, d) + c".into(),
        ));
    }
    if lo.is_zero() {
        return Ok(Normalization::TrivialZeroB);
    }
    if lo <= c {
        // Raising `hi` tops out at the bound before the sum is exact.
        return Ok(Normalization::TrivialBound);
    }
    let raised = (&bound + c)
        .checked_sub(lo)
        .expect("lo <= bound and c >= 1 keep this nonnegative");
    debug_assert!(raised < bound && &raised >= hi);
    Ok(Normalization::Ready {
        a: raised,
        b: lo.clone(),
    })
}

/// Iterate the pair construction from a normalized instance until `b` hits
/// zero, recording every state and the two landmark indices.
///
/// Preconditions (the normalized shape): `d >= 2`, `a >= b >= 1`, `c >= 1`,
/// `a < C(m-1+d, d)`, and `a + b = C(m-1+d, d) + c`.
pub fn trace_construction(
    a: &Nat,
    b: &Nat,
    d: u32,
    m: &Nat,
    c: &Nat,
) -> Result<ConstructionTrace> {
    if d <= 1 {
        return Err(Error::PreconditionViolated(
            "the construction runs at d >= 2".into(),
        ));
    }
    if m.is_zero() || c.is_zero() {
        return Err(Error::PreconditionViolated(
            "m and c must be positive".into(),
        ));
    }
    if b.is_zero() {
        return Err(Error::PreconditionViolated(
            "b must be positive; the proof drops b = 0 before iterating".into(),
        ));
    }
    if a < b {
        return Err(Error::PreconditionViolated(
            "a must be at least b; normalize before tracing".into(),
        ));
    }
    let bound = bound_value(m, d);
    if a >= &bound {
        return Err(Error::PreconditionViolated(format!(
            "a must be strictly below C(m-1+d, d) = {bound}"
        )));
    }
    let total = a + b;
    if total != &bound + c {
        return Err(Error::PreconditionViolated(format!(
            "a + b must equal C(m-1+d, d) + c = {}",
            &bound + c
        )));
    }

    let budget = total
        .to_u64()
        .ok_or_else(|| Error::InvalidInput("trace instance too large to iterate".into()))?
        + 1;
    let mut states = vec![PairState {
        a: a.clone(),
        b: b.clone(),
        step_index: 0,
        case_applied: StepCase::Initial,
    }];
    let mut l1 = None;
    let (mut cur_a, mut cur_b) = (a.clone(), b.clone());
    while !cur_b.is_zero() {
        if states.len() as u64 > budget {
            return Err(Error::Internal(format!(
                "construction exceeded its step budget of {budget}"
            )));
        }
        let (next_a, next_b, case) = pair_step_values(&cur_a, &cur_b, d)?;
        states.push(PairState {
            a: next_a.clone(),
            b: next_b.clone(),
            step_index: states.len(),
            case_applied: case,
        });
        if next_a == bound {
            l1 = Some(states.len() - 1);
        }
        cur_a = next_a;
        cur_b = next_b;
    }

    let l2 = states.len() - 1;
    if cur_a != total {
        return Err(Error::Internal(
            "terminal state does not carry the full sum".into(),
        ));
    }
    let l1 = l1.ok_or_else(|| {
        Error::Internal(format!("construction never landed on the bound {bound}"))
    })?;
    if &states[l1].b != c {
        return Err(Error::Internal(
            "state at the bound does not carry b = c".into(),
        ));
    }
    Ok(ConstructionTrace { states, l1, l2 })
}

/// Evaluate a sequence instance directly or by replaying the induction.
pub fn check_sequence_lemma(inst: &SequenceInstance, mode: SequenceMode) -> Result<LemmaReport> {
    inst.validate()?;
    let lhs = sum_macaulay(&inst.a_seq, inst.d)?;
    let rhs = sum_macaulay(&inst.b_seq, inst.d)?;
    let (holds, trace) = match mode {
        SequenceMode::Direct => (lhs <= rhs, None),
        SequenceMode::ProofReplay => {
            let mut records = Vec::new();
            let ok = replay(inst, 0, &mut records)?;
            (ok, Some(ReportTrace::Replay(records)))
        }
    };
    Ok(LemmaReport {
        instance: LemmaInstance::Sequence {
            a_seq: inst.a_seq.clone(),
            b_seq: inst.b_seq.clone(),
            d: inst.d,
            m: inst.m.clone(),
        },
        lhs,
        rhs,
        holds,
        trace,
    })
}

fn sum_macaulay(values: &[Nat], d: u32) -> Result<Nat> {
    let mut total = Nat::zero();
    for v in values {
        total = total + macaulay(v, d)?;
    }
    Ok(total)
}

/// The two-term bound step used inside the replay: either the constrained
/// inequality when the slack `c` is positive, or superadditivity plus
/// monotonicity when `c` is zero.
fn pair_bound_holds(x: &Nat, y: &Nat, bound: &Nat, c: &Nat, d: u32) -> Result<bool> {
    if c.is_zero() {
        if x + y > *bound {
            return Err(Error::ReplayDivergence(format!(
                "zero-slack step needs x + y <= bound, got {x} + {y} > {bound}"
            )));
        }
        Ok(&macaulay(x, d)? + &macaulay(y, d)? <= macaulay(bound, d)?)
    } else {
        if x > bound || y > bound {
            return Err(Error::ReplayDivergence(format!(
                "pair step operands exceed the bound: x={x} y={y} bound={bound}"
            )));
        }
        if x + y > bound + c {
            return Err(Error::ReplayDivergence(format!(
                "pair step sum {} exceeds bound + c = {}",
                x + y,
                bound + c
            )));
        }
        let lhs = &macaulay(x, d)? + &macaulay(y, d)?;
        let rhs = &macaulay(bound, d)? + &macaulay(c, d)?;
        Ok(lhs <= rhs)
    }
}

/// Replay the induction on `(t, s)`. Returns whether every base case and
/// two-term step checked out numerically; records each node in pre-order.
fn replay(inst: &SequenceInstance, depth: usize, out: &mut Vec<ReplayRecord>) -> Result<bool> {
    let d = inst.d;
    let lhs = sum_macaulay(&inst.a_seq, d)?;
    let rhs = sum_macaulay(&inst.b_seq, d)?;
    let t = inst.a_seq.len();
    let s = inst.b_seq.len();

    let record = |case: ReplayCase, out: &mut Vec<ReplayRecord>| {
        out.push(ReplayRecord {
            depth,
            case,
            a_seq: inst.a_seq.clone(),
            b_seq: inst.b_seq.clone(),
            lhs: lhs.clone(),
            rhs: rhs.clone(),
        });
    };

    if t == 1 {
        record(ReplayCase::BaseT1, out);
        // a_1 <= b_s, so monotonicity closes the case.
        let last_b = inst.b_seq.last().expect("nonempty");
        return Ok(macaulay(&inst.a_seq[0], d)? <= macaulay(last_b, d)?);
    }
    if s == 1 {
        record(ReplayCase::BaseS1, out);
        // Iterated superadditivity collapses the a-side, then monotonicity.
        let total: Nat = inst.a_seq.iter().sum();
        let collapsed = macaulay(&total, d)?;
        return Ok(lhs <= collapsed && collapsed <= macaulay(&inst.b_seq[0], d)?);
    }

    let bound = inst.bound();
    let a1 = &inst.a_seq[0];
    let b1 = &inst.b_seq[0];

    if b1 >= a1 {
        record(ReplayCase::Case1, out);
        // a1^<d> + (b1 - a1)^<d> <= b1^<d> by superadditivity.
        let gap = b1.checked_sub(a1).expect("b1 >= a1 in this branch");
        let absorb_ok =
            &macaulay(a1, d)? + &macaulay(&gap, d)? <= macaulay(b1, d)?;
        let mut b_rest = vec![gap];
        b_rest.extend_from_slice(&inst.b_seq[1..]);
        let sub = SequenceInstance::new(inst.a_seq[1..].to_vec(), b_rest, d, inst.m.clone())
            .map_err(|e| Error::ReplayDivergence(format!("case-1 sub-instance: {e}")))?;
        return Ok(absorb_ok && replay(&sub, depth + 1, out)?);
    }

    if s == 2 {
        record(ReplayCase::Case2S2, out);
        // With b1 < a1 the whole a-tail fits under b2.
        let tail: Nat = inst.a_seq[1..].iter().sum();
        if tail > inst.b_seq[1] {
            return Err(Error::ReplayDivergence(format!(
                "s = 2 tail sum {tail} exceeds b2 = {}",
                inst.b_seq[1]
            )));
        }
        let tail_ok = sum_macaulay(&inst.a_seq[1..], d)? <= macaulay(&tail, d)?;
        let pair_ok = pair_bound_holds(a1, &tail, &bound, b1, d)?;
        return Ok(tail_ok && pair_ok);
    }

    let sum_a: Nat = inst.a_seq.iter().sum();
    let sum_b_rest: Nat = inst.b_seq[1..].iter().sum();
    if sum_a <= sum_b_rest {
        record(ReplayCase::Case2Drop, out);
        let sub = SequenceInstance::new(
            inst.a_seq.clone(),
            inst.b_seq[1..].to_vec(),
            d,
            inst.m.clone(),
        )
        .map_err(|e| Error::ReplayDivergence(format!("drop-b1 sub-instance: {e}")))?;
        return replay(&sub, depth + 1, out);
    }

    record(ReplayCase::Case2Relabel, out);
    // surplus = a2 + ... + a_t - (b3 + ... + b_s), strictly positive here.
    let sum_a_tail: Nat = inst.a_seq[1..].iter().sum();
    let sum_b_tail: Nat = inst.b_seq[2..].iter().sum();
    let surplus = sum_a_tail.checked_sub(&sum_b_tail).ok_or_else(|| {
        Error::ReplayDivergence("relabel step expected a positive surplus".into())
    })?;
    if surplus > bound {
        return Err(Error::ReplayDivergence(format!(
            "relabel surplus {surplus} exceeds the bound {bound}"
        )));
    }
    let pair_ok = pair_bound_holds(a1, &surplus, &bound, b1, d)?;
    let mut b_new = vec![surplus];
    b_new.extend_from_slice(&inst.b_seq[2..]);
    let sub = SequenceInstance::new(inst.a_seq[1..].to_vec(), b_new, d, inst.m.clone())
        .map_err(|e| Error::ReplayDivergence(format!("relabel sub-instance: {e}")))?;
    Ok(pair_ok && replay(&sub, depth + 1, out)?)
}
