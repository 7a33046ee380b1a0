//! Exhaustive sweeps: counterexample search for the unconstrained two-term
//! claim, verification sweeps for the corrected lemmas, and an independent
//! order-ideal oracle for the growth function.
//!
//! All sweeps enumerate deterministically. Parallel runs partition by a
//! leading coordinate and merge in order, so a summary is byte-for-byte
//! identical no matter how many workers computed it.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{binom, bound_value, largest_binomial_index};
use crate::error::{Error, Result};
use crate::lemmas::{
    check_sequence_lemma, LemmaInstance, LemmaReport, SequenceInstance, SequenceMode,
};
use crate::macaulay::MacaulayTable;
use crate::nat::Nat;

/// Which inequality a sweep exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaKind {
    Superadditive,
    Constrained,
    Sequence,
    Naive35,
}

/// Bounds and execution knobs for one sweep.
///
/// `max_value` bounds every enumerated integer: pair entries for the
/// superadditive and two-term scans, and both `m` and the sequence lengths
/// for the constrained and sequence sweeps (their entry ranges derive from
/// `C(m-1+d, d)`). Degrees run `min_d..=max_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub lemma: LemmaKind,
    pub max_value: u64,
    #[serde(default = "default_min_d")]
    pub min_d: u32,
    pub max_d: u32,
    #[serde(default = "default_workers")]
    pub workers: usize,
}

fn default_min_d() -> u32 {
    1
}

fn default_workers() -> usize {
    1
}

impl SweepConfig {
    pub fn new(lemma: LemmaKind, max_value: u64, max_d: u32) -> Self {
        SweepConfig {
            lemma,
            max_value,
            min_d: 1,
            max_d,
            workers: 1,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    /// Restrict the sweep to a single degree.
    pub fn with_single_degree(mut self, d: u32) -> Self {
        self.min_d = d;
        self.max_d = d;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_value < 1 {
            return Err(Error::InvalidInput("max_value must be at least 1".into()));
        }
        if self.min_d < 1 {
            return Err(Error::InvalidDegree);
        }
        if self.min_d > self.max_d {
            return Err(Error::InvalidInput(format!(
                "empty degree range {}..={}",
                self.min_d, self.max_d
            )));
        }
        if self.workers < 1 {
            return Err(Error::InvalidInput("workers must be at least 1".into()));
        }
        Ok(())
    }
}

/// A tuple refuting the unconstrained two-term claim within its hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub a1: Nat,
    pub a2: Nat,
    pub b1: Nat,
    pub b2: Nat,
    pub d: u32,
    pub lhs: Nat,
    pub rhs: Nat,
}

impl ViolationRecord {
    /// Re-derive everything the record claims: the hypotheses hold, the
    /// stored sides match fresh evaluations, the inequality genuinely fails,
    /// and `b1` is not a pure binomial `C(m-1+d, d)` (it cannot be, or the
    /// constrained lemma would be contradicted).
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidDegree);
        }
        if self.a1 > self.b1 || self.a2 > self.b1 {
            return Err(Error::Internal("violation record breaks a_i <= b1".into()));
        }
        if &self.a1 + &self.a2 > &self.b1 + &self.b2 {
            return Err(Error::Internal(
                "violation record breaks a1 + a2 <= b1 + b2".into(),
            ));
        }
        let lhs = &crate::macaulay::macaulay(&self.a1, self.d)?
            + &crate::macaulay::macaulay(&self.a2, self.d)?;
        let rhs = &crate::macaulay::macaulay(&self.b1, self.d)?
            + &crate::macaulay::macaulay(&self.b2, self.d)?;
        if lhs != self.lhs || rhs != self.rhs {
            return Err(Error::Internal(
                "violation record sides do not match re-evaluation".into(),
            ));
        }
        if lhs <= rhs {
            return Err(Error::Internal(
                "violation record does not actually violate the claim".into(),
            ));
        }
        if pure_binomial_parameter(&self.b1, self.d)?.is_some() {
            return Err(Error::Internal(format!(
                "violation record has b1 = {} of the excluded pure-binomial form",
                self.b1
            )));
        }
        Ok(())
    }
}

/// If `x = C(m-1+d, d)` for some `m >= 1`, return that `m`.
pub fn pure_binomial_parameter(x: &Nat, d: u32) -> Result<Option<Nat>> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if x.is_zero() {
        return Ok(None);
    }
    let k = largest_binomial_index(x, d);
    if &binom(&k, &Nat::from(d)) == x {
        let m = (&k + 1u32)
            .checked_sub(&Nat::from(d))
            .expect("leading index is at least d");
        Ok(Some(m))
    } else {
        Ok(None)
    }
}

/// Summary of one sweep: the configuration echoed back, how many in-bounds
/// instances satisfied the hypotheses, and every violation found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub lemma: LemmaKind,
    pub max_value: u64,
    pub min_d: u32,
    pub max_d: u32,
    pub instances_checked: u64,
    pub violations: Vec<LemmaReport>,
}

/// Enumerate every tuple satisfying the two-term claim's hypotheses inside
/// the bounds and return the violations, ordered by
/// `(d, a1+a2, a1, a2, b1, b2)`.
pub fn find_violations_35(cfg: &SweepConfig) -> Result<Vec<ViolationRecord>> {
    if cfg.lemma != LemmaKind::Naive35 {
        return Err(Error::InvalidInput(
            "find_violations_35 requires a naive35 sweep configuration".into(),
        ));
    }
    cfg.validate()?;
    let pool = build_pool(cfg.workers)?;
    let (_, records) = pool.install(|| naive35_scan(cfg))?;
    Ok(records)
}

/// Run the configured lemma checker over every in-bounds instance.
pub fn sweep_lemma(cfg: &SweepConfig) -> Result<SweepSummary> {
    cfg.validate()?;
    let pool = build_pool(cfg.workers)?;
    let (instances_checked, violations) = pool.install(|| match cfg.lemma {
        LemmaKind::Superadditive => superadditive_scan(cfg),
        LemmaKind::Constrained => constrained_scan(cfg),
        LemmaKind::Sequence => sequence_scan(cfg),
        LemmaKind::Naive35 => {
            let (count, records) = naive35_scan(cfg)?;
            let reports = records.into_iter().map(violation_to_report).collect();
            Ok((count, reports))
        }
    })?;
    Ok(SweepSummary {
        lemma: cfg.lemma,
        max_value: cfg.max_value,
        min_d: cfg.min_d,
        max_d: cfg.max_d,
        instances_checked,
        violations,
    })
}

fn build_pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("could not build worker pool: {e}")))
}

fn violation_to_report(rec: ViolationRecord) -> LemmaReport {
    LemmaReport {
        instance: LemmaInstance::Naive35 {
            a1: rec.a1,
            a2: rec.a2,
            b1: rec.b1,
            b2: rec.b2,
            d: rec.d,
        },
        lhs: rec.lhs,
        rhs: rec.rhs,
        holds: false,
        trace: None,
    }
}

fn naive35_scan(cfg: &SweepConfig) -> Result<(u64, Vec<ViolationRecord>)> {
    let max = cfg.max_value;
    let mut total = 0u64;
    let mut records = Vec::new();
    for d in cfg.min_d..=cfg.max_d {
        let table = MacaulayTable::build(d, max)?;
        let per_b1: Vec<(u64, Vec<ViolationRecord>)> = (0..=max)
            .into_par_iter()
            .map(|b1| {
                let mut count = 0u64;
                let mut found = Vec::new();
                let rhs_b1 = table.get(b1);
                for a1 in 0..=b1 {
                    for a2 in 0..=b1 {
                        let lhs = table.get(a1) + table.get(a2);
                        let b2_min = (a1 + a2).saturating_sub(b1);
                        if b2_min > max {
                            continue;
                        }
                        count += max - b2_min + 1;
                        // rhs grows with b2, so violations form a prefix.
                        for b2 in b2_min..=max {
                            let rhs = rhs_b1 + table.get(b2);
                            if lhs <= rhs {
                                break;
                            }
                            found.push(ViolationRecord {
                                a1: Nat::from(a1),
                                a2: Nat::from(a2),
                                b1: Nat::from(b1),
                                b2: Nat::from(b2),
                                d,
                                lhs: lhs.clone(),
                                rhs,
                            });
                        }
                    }
                }
                (count, found)
            })
            .collect();
        let mut degree_records = Vec::new();
        for (count, found) in per_b1 {
            total += count;
            degree_records.extend(found);
        }
        degree_records.sort_by_key(sort_key_35);
        records.extend(degree_records);
    }
    debug_assert!(records.iter().all(|r| r.validate().is_ok()));
    Ok((total, records))
}

fn sort_key_35(rec: &ViolationRecord) -> (u64, u64, u64, u64, u64) {
    let a1 = rec.a1.to_u64().expect("in-bounds value");
    let a2 = rec.a2.to_u64().expect("in-bounds value");
    let b1 = rec.b1.to_u64().expect("in-bounds value");
    let b2 = rec.b2.to_u64().expect("in-bounds value");
    (a1 + a2, a1, a2, b1, b2)
}

fn superadditive_scan(cfg: &SweepConfig) -> Result<(u64, Vec<LemmaReport>)> {
    let max = cfg.max_value;
    let mut total = 0u64;
    let mut violations = Vec::new();
    for d in cfg.min_d..=cfg.max_d {
        let table = MacaulayTable::build(d, 2 * max)?;
        let per_a: Vec<(u64, Vec<LemmaReport>)> = (0..=max)
            .into_par_iter()
            .map(|a| {
                let mut found = Vec::new();
                let val_a = table.get(a);
                for b in 0..=max {
                    let lhs = val_a + table.get(b);
                    let rhs = table.get(a + b);
                    if &lhs > rhs {
                        found.push(LemmaReport {
                            instance: LemmaInstance::Superadditive {
                                a: Nat::from(a),
                                b: Nat::from(b),
                                d,
                            },
                            lhs,
                            rhs: rhs.clone(),
                            holds: false,
                            trace: None,
                        });
                    }
                }
                (max + 1, found)
            })
            .collect();
        for (count, found) in per_a {
            total += count;
            violations.extend(found);
        }
    }
    Ok((total, violations))
}

fn constrained_scan(cfg: &SweepConfig) -> Result<(u64, Vec<LemmaReport>)> {
    let mut total = 0u64;
    let mut violations = Vec::new();
    for d in cfg.min_d..=cfg.max_d {
        let top_bound = bound_value(&Nat::from(cfg.max_value), d)
            .to_u64()
            .ok_or_else(|| {
                Error::InvalidInput("constrained sweep bound too large to enumerate".into())
            })?;
        let table = MacaulayTable::build(d, top_bound)?;
        for m in 1..=cfg.max_value {
            let bound = bound_value(&Nat::from(m), d)
                .to_u64()
                .expect("within the top bound");
            let bound_val = table.get(bound);
            // c ranges over [1, bound] so that bound + c <= 2 * bound.
            let per_c: Vec<(u64, Vec<LemmaReport>)> = (1..=bound)
                .into_par_iter()
                .map(|c| {
                    let mut count = 0u64;
                    let mut found = Vec::new();
                    let rhs = bound_val + table.get(c);
                    for a in 0..=bound {
                        let b_max = bound.min(bound + c - a);
                        count += b_max + 1;
                        // lhs grows with b: checking the top of the range
                        // covers the rest, and any violations are a suffix.
                        let lhs_top = table.get(a) + table.get(b_max);
                        if lhs_top <= rhs {
                            continue;
                        }
                        let mut suffix = Vec::new();
                        for b in (0..=b_max).rev() {
                            let lhs = table.get(a) + table.get(b);
                            if lhs <= rhs {
                                break;
                            }
                            suffix.push(LemmaReport {
                                instance: LemmaInstance::Constrained {
                                    m: Nat::from(m),
                                    d,
                                    a: Nat::from(a),
                                    b: Nat::from(b),
                                    c: Nat::from(c),
                                },
                                lhs,
                                rhs: rhs.clone(),
                                holds: false,
                                trace: None,
                            });
                        }
                        suffix.reverse();
                        found.extend(suffix);
                    }
                    (count, found)
                })
                .collect();
            for (count, found) in per_c {
                total += count;
                violations.extend(found);
            }
        }
    }
    Ok((total, violations))
}

fn sequence_scan(cfg: &SweepConfig) -> Result<(u64, Vec<LemmaReport>)> {
    let max_len = cfg.max_value as usize;
    let mut total = 0u64;
    let mut violations = Vec::new();
    for d in cfg.min_d..=cfg.max_d {
        for m in 1..=cfg.max_value {
            let bound = bound_value(&Nat::from(m), d).to_u64().ok_or_else(|| {
                Error::InvalidInput("sequence sweep bound too large to enumerate".into())
            })?;
            let mut tasks = Vec::new();
            for t in 1..=max_len {
                for s in 1..=max_len {
                    for b1 in 0..=bound {
                        tasks.push((t, s, b1));
                    }
                }
            }
            let per_task: Vec<Result<(u64, Vec<LemmaReport>)>> = tasks
                .par_iter()
                .map(|&(t, s, b1)| sequence_task(d, m, bound, t, s, b1))
                .collect();
            for item in per_task {
                let (count, found) = item?;
                total += count;
                violations.extend(found);
            }
        }
    }
    Ok((total, violations))
}

/// All instances with fixed shape `(t, s)` and first bound entry `b1`.
fn sequence_task(
    d: u32,
    m: u64,
    bound: u64,
    t: usize,
    s: usize,
    b1: u64,
) -> Result<(u64, Vec<LemmaReport>)> {
    let mut b_seq = vec![b1];
    b_seq.extend(std::iter::repeat_n(bound, s - 1));
    let cap = if s == 1 { b1 } else { bound };
    let sum_b: u64 = b_seq.iter().sum();
    let b_nats: Vec<Nat> = b_seq.iter().map(|&v| Nat::from(v)).collect();

    let mut count = 0u64;
    let mut found = Vec::new();
    let mut failure = None;
    for_each_nondecreasing(t, cap, &mut |a_seq| {
        if failure.is_some() {
            return;
        }
        let sum_a: u64 = a_seq.iter().sum();
        if sum_a > sum_b {
            return;
        }
        count += 1;
        let inst = SequenceInstance {
            a_seq: a_seq.iter().map(|&v| Nat::from(v)).collect(),
            b_seq: b_nats.clone(),
            d,
            m: Nat::from(m),
        };
        let direct = match check_sequence_lemma(&inst, SequenceMode::Direct) {
            Ok(report) => report,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        let replay = match check_sequence_lemma(&inst, SequenceMode::ProofReplay) {
            Ok(report) => report,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        if !direct.holds || !replay.holds || direct.holds != replay.holds {
            found.push(LemmaReport {
                trace: None,
                ..direct
            });
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok((count, found)),
    }
}

/// Visit every nondecreasing tuple of the given length with entries in
/// `0..=max_entry`.
fn for_each_nondecreasing(len: usize, max_entry: u64, f: &mut impl FnMut(&[u64])) {
    fn go(buf: &mut Vec<u64>, len: usize, min: u64, max: u64, f: &mut impl FnMut(&[u64])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for v in min..=max {
            buf.push(v);
            go(buf, len, v, max, f);
            buf.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, 0, max_entry, f)
}

/// Growth of the lex-smallest order ideal: take the `a` lex-smallest
/// monomials of degree `d` in `n` ordered variables and count the monomials
/// of degree `d+1` all of whose degree-`d` divisors lie in that set.
///
/// For `n` large enough the count stabilizes at `a^<d>`; this is the
/// independent cross-check oracle for the growth function.
pub fn macaulay_via_order_ideal(a: &Nat, d: u32, n: u32) -> Result<Nat> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if n == 0 {
        return Err(Error::InvalidInput("need at least one variable".into()));
    }
    if a.is_zero() {
        return Ok(Nat::zero());
    }
    let capacity = binom(&Nat::from(n as u64 - 1 + d as u64), &Nat::from(d));
    if &capacity < a {
        return Err(Error::InsufficientVariables(format!(
            "C(n-1+d, d) = {capacity} < a = {a} at n = {n}, d = {d}"
        )));
    }
    let take = a
        .to_usize()
        .ok_or_else(|| Error::InvalidInput("order-ideal input too large".into()))?;

    let mut chosen: HashSet<Vec<u32>> = HashSet::with_capacity(take);
    let mut remaining = take;
    for_each_composition(n as usize, d, &mut |mono| {
        if remaining > 0 {
            chosen.insert(mono.to_vec());
            remaining -= 1;
        }
    });

    let mut count = 0usize;
    for_each_composition(n as usize, d + 1, &mut |mono| {
        let mut divisor = mono.to_vec();
        for idx in 0..divisor.len() {
            if divisor[idx] == 0 {
                continue;
            }
            divisor[idx] -= 1;
            let present = chosen.contains(&divisor);
            divisor[idx] += 1;
            if !present {
                return;
            }
        }
        count += 1;
    });
    Ok(Nat::from(count))
}

/// Run the order-ideal count with the fewest workable variables and grow `n`
/// until two consecutive counts agree.
pub fn macaulay_order_ideal_stabilized(a: &Nat, d: u32) -> Result<Nat> {
    if d == 0 {
        return Err(Error::InvalidDegree);
    }
    if a.is_zero() {
        return Ok(Nat::zero());
    }
    let mut n = 1u32;
    while &binom(&Nat::from(n as u64 - 1 + d as u64), &Nat::from(d)) < a {
        n += 1;
    }
    let mut prev = macaulay_via_order_ideal(a, d, n)?;
    for _ in 0..512 {
        n += 1;
        let cur = macaulay_via_order_ideal(a, d, n)?;
        if cur == prev {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Internal(format!(
        "order-ideal count failed to stabilize for a = {a}, d = {d}"
    )))
}

/// Exponent vectors of total degree `deg` in `n` variables, visited in
/// ascending lexicographic order.
fn for_each_composition(n: usize, deg: u32, f: &mut impl FnMut(&[u32])) {
    fn go(buf: &mut Vec<u32>, n: usize, rest: u32, f: &mut impl FnMut(&[u32])) {
        if buf.len() + 1 == n {
            buf.push(rest);
            f(buf);
            buf.pop();
            return;
        }
        for v in 0..=rest {
            buf.push(v);
            go(buf, n, rest - v, f);
            buf.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, deg, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::macaulay;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    fn naive35_cfg(max_value: u64, max_d: u32) -> SweepConfig {
        SweepConfig::new(LemmaKind::Naive35, max_value, max_d)
    }

    #[test]
    fn finds_the_known_violation() {
        let records = find_violations_35(&naive35_cfg(6, 3)).unwrap();
        assert!(records.iter().any(|r| {
            (&r.a1, &r.a2, &r.b1, &r.b2, r.d) == (&nat(4), &nat(4), &nat(6), &nat(2), 3)
                && r.lhs == nat(10)
                && r.rhs == nat(9)
        }));
    }

    #[test]
    fn no_violations_at_tiny_bounds_degree_one() {
        let records = find_violations_35(&naive35_cfg(3, 1)).unwrap();
        assert!(records.is_empty());
    }

    #[test]
    fn violations_are_canonically_ordered_and_valid() {
        let records = find_violations_35(&naive35_cfg(10, 3).with_workers(3)).unwrap();
        assert!(!records.is_empty());
        for rec in &records {
            rec.validate().unwrap();
        }
        let keys: Vec<_> = records.iter().map(|r| (r.d, sort_key_35(r))).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn known_violation_is_among_minimal_sums() {
        let records = find_violations_35(&naive35_cfg(10, 3).with_single_degree(3)).unwrap();
        let sum = |r: &ViolationRecord| r.a1.to_u64().unwrap() + r.a2.to_u64().unwrap();
        let min_sum = records.iter().map(|r| sum(r)).min().unwrap();
        assert_eq!(min_sum, 8);
        assert!(records
            .iter()
            .filter(|r| sum(r) == min_sum)
            .any(|r| (&r.a1, &r.a2, &r.b1, &r.b2) == (&nat(4), &nat(4), &nat(6), &nat(2))));
    }

    #[test]
    fn rejects_mismatched_kind() {
        let cfg = SweepConfig::new(LemmaKind::Superadditive, 5, 2);
        assert!(matches!(
            find_violations_35(&cfg),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn pure_binomial_parameter_examples() {
        assert_eq!(pure_binomial_parameter(&nat(4), 3).unwrap(), Some(nat(2)));
        assert_eq!(pure_binomial_parameter(&nat(1), 3).unwrap(), Some(nat(1)));
        assert_eq!(pure_binomial_parameter(&nat(10), 3).unwrap(), Some(nat(3)));
        assert_eq!(pure_binomial_parameter(&nat(5), 3).unwrap(), None);
        assert_eq!(pure_binomial_parameter(&nat(0), 3).unwrap(), None);
    }

    #[test]
    fn superadditive_sweep_small_is_clean() {
        let cfg = SweepConfig::new(LemmaKind::Superadditive, 80, 3).with_workers(2);
        let summary = sweep_lemma(&cfg).unwrap();
        assert!(summary.violations.is_empty());
        assert_eq!(summary.instances_checked, 81 * 81 * 3);
    }

    #[test]
    fn constrained_sweep_small_is_clean() {
        let cfg = SweepConfig::new(LemmaKind::Constrained, 4, 3).with_workers(2);
        let summary = sweep_lemma(&cfg).unwrap();
        assert!(summary.violations.is_empty());
        assert!(summary.instances_checked > 0);
    }

    #[test]
    fn sequence_sweep_small_is_clean() {
        let cfg = SweepConfig::new(LemmaKind::Sequence, 3, 2).with_workers(2);
        let summary = sweep_lemma(&cfg).unwrap();
        assert!(summary.violations.is_empty());
        assert!(summary.instances_checked > 0);
    }

    #[test]
    fn naive35_sweep_reports_violations() {
        let cfg = naive35_cfg(10, 3).with_single_degree(3);
        let summary = sweep_lemma(&cfg).unwrap();
        assert!(!summary.violations.is_empty());
        assert!(summary.violations.iter().all(|v| !v.holds));
    }

    #[test]
    fn summaries_identical_across_worker_counts() {
        let bases = [
            SweepConfig::new(LemmaKind::Superadditive, 60, 2),
            SweepConfig::new(LemmaKind::Constrained, 3, 3),
            SweepConfig::new(LemmaKind::Sequence, 3, 2),
            SweepConfig::new(LemmaKind::Naive35, 12, 2),
        ];
        for base in bases {
            let reference =
                serde_json::to_string(&sweep_lemma(&base.clone().with_workers(1)).unwrap())
                    .unwrap();
            for workers in [2, 8] {
                let summary = sweep_lemma(&base.clone().with_workers(workers)).unwrap();
                assert_eq!(
                    serde_json::to_string(&summary).unwrap(),
                    reference,
                    "summary changed under {workers} workers for {base:?}"
                );
            }
        }
    }

    #[test]
    fn order_ideal_hand_checked_values() {
        assert_eq!(macaulay_via_order_ideal(&nat(4), 3, 3).unwrap(), nat(5));
        assert_eq!(macaulay_via_order_ideal(&nat(6), 3, 3).unwrap(), nat(7));
        assert_eq!(macaulay_via_order_ideal(&nat(2), 3, 3).unwrap(), nat(2));
        assert_eq!(macaulay_via_order_ideal(&nat(0), 3, 2).unwrap(), nat(0));
    }

    #[test]
    fn order_ideal_needs_enough_variables() {
        assert!(matches!(
            macaulay_via_order_ideal(&nat(5), 3, 1),
            Err(Error::InsufficientVariables(_))
        ));
    }

    #[test]
    fn stabilized_oracle_matches_growth_function_smoke() {
        for d in 1u32..=3 {
            for a in 0u64..=40 {
                assert_eq!(
                    macaulay_order_ideal_stabilized(&nat(a), d).unwrap(),
                    macaulay(&nat(a), d).unwrap(),
                    "a={a} d={d}"
                );
            }
        }
    }
}
