//! Dense sweeps of the module invariants at desk scale. Everything here is
//! expected to hold with zero exceptions; ranges follow the contracts the
//! operations advertise.

use std::cmp::Ordering;

use rayon::prelude::*;

use macaulay_core::{
    bound_value, check_sequence_lemma, construct_pair_step, d_binomial_rep, decompose, macaulay,
    naive_claim_35, pure_binomial_parameter, rep_lex_compare, rep_value, strictly_monotone,
    DecompositionForm, MacaulayTable, Nat, SequenceInstance, SequenceMode,
};

fn nat(v: u64) -> Nat {
    Nat::from(v)
}

#[test]
fn representations_round_trip_up_to_1e5() {
    (0u64..=100_000).into_par_iter().for_each(|a| {
        for d in 1u32..=8 {
            let rep = d_binomial_rep(&nat(a), d).unwrap();
            rep.validate().unwrap();
            assert_eq!(rep_value(&rep).unwrap(), nat(a), "a={a} d={d}");
        }
    });
}

#[test]
fn lex_order_matches_numeric_order_up_to_2000() {
    for d in 1u32..=6 {
        let reps: Vec<_> = (0u64..=2000)
            .map(|a| d_binomial_rep(&nat(a), d).unwrap())
            .collect();
        (0usize..reps.len()).into_par_iter().for_each(|a| {
            for b in (a + 1)..reps.len() {
                assert_eq!(
                    rep_lex_compare(&reps[a], &reps[b]).unwrap(),
                    Ordering::Less,
                    "a={a} b={b} d={d}"
                );
            }
        });
    }
}

#[test]
fn strict_monotonicity_up_to_2000() {
    for d in 1u32..=5 {
        let table = MacaulayTable::build(d, 2000).unwrap();
        (0u64..2000).into_par_iter().for_each(|a| {
            for b in (a + 1)..=2000 {
                assert!(table.get(a) < table.get(b), "a={a} b={b} d={d}");
            }
        });
        // The helper agrees with the table on a diagonal sample.
        for a in (0u64..=2000).step_by(97) {
            assert!(strictly_monotone(&nat(a), &nat(a + 1), d).unwrap());
        }
    }
}

#[test]
fn degree_one_closed_form_up_to_1e4() {
    for a in 0u64..=10_000 {
        assert_eq!(macaulay(&nat(a), 1).unwrap(), nat(a * (a + 1) / 2));
    }
}

#[test]
fn decompositions_reconstruct_up_to_1e4() {
    (1u64..=10_000).into_par_iter().for_each(|a| {
        for d in 1u32..=6 {
            let open = decompose(&nat(a), d, DecompositionForm::HalfOpen).unwrap();
            open.validate().unwrap();
            assert_eq!(open.value(), nat(a), "half-open a={a} d={d}");

            let closed = decompose(&nat(a), d, DecompositionForm::HalfClosed).unwrap();
            closed.validate().unwrap();
            assert_eq!(closed.value(), nat(a), "half-closed a={a} d={d}");

            if !open.remainder.is_zero() {
                assert_eq!(open.c, closed.c, "forms diverged at a={a} d={d}");
                assert_eq!(open.remainder, closed.remainder);
            }
        }
    });
}

#[test]
fn pair_step_invariants_up_to_300() {
    for d in [2u32, 3, 4] {
        let table = MacaulayTable::build(d, 600).unwrap();
        (1u64..=300).into_par_iter().for_each(|b| {
            for a in b..=300 {
                let (from, to) = construct_pair_step(&nat(a), &nat(b), d).unwrap();
                let to_a = to.a.to_u64().unwrap();
                let to_b = to.b.to_u64().unwrap();
                assert_eq!(to_a + to_b, a + b, "sum broken at a={a} b={b} d={d}");
                assert!(to_b < b && a < to_a, "order broken at a={a} b={b} d={d}");
                let before = table.get(a) + table.get(b);
                let after = table.get(to_a) + table.get(to_b);
                assert!(before <= after, "growth sum fell at a={a} b={b} d={d}");
                assert_eq!(&from.a, &nat(a));
            }
        });
    }
}

/// Sequence instances with t, s <= 4 over every (m, d <= 3) whose bound
/// C(m-1+d, d) is at most 10: the inequality holds and both evaluation modes
/// agree.
#[test]
fn sequence_lemma_clean_for_small_bounds() {
    let mut shapes = Vec::new();
    for d in 1u32..=3 {
        for m in 1u64.. {
            let bound = bound_value(&nat(m), d).to_u64().unwrap();
            if bound > 10 {
                break;
            }
            shapes.push((d, m, bound));
        }
    }
    shapes.par_iter().for_each(|&(d, m, bound)| {
        for s in 1usize..=4 {
            for b1 in 0..=bound {
                let mut b_seq = vec![b1];
                b_seq.extend(std::iter::repeat_n(bound, s - 1));
                let cap = if s == 1 { b1 } else { bound };
                let sum_b: u64 = b_seq.iter().sum();
                let b_nats: Vec<Nat> = b_seq.iter().map(|&v| nat(v)).collect();
                for t in 1usize..=4 {
                    each_nondecreasing(t, cap, &mut |a_seq| {
                        if a_seq.iter().sum::<u64>() > sum_b {
                            return;
                        }
                        let inst = SequenceInstance::new(
                            a_seq.iter().map(|&v| nat(v)).collect(),
                            b_nats.clone(),
                            d,
                            nat(m),
                        )
                        .unwrap();
                        let direct = check_sequence_lemma(&inst, SequenceMode::Direct).unwrap();
                        let replay =
                            check_sequence_lemma(&inst, SequenceMode::ProofReplay).unwrap();
                        assert!(direct.holds, "direct failed on {inst:?}");
                        assert!(replay.holds, "replay failed on {inst:?}");
                    });
                }
            }
        }
    });
}

fn each_nondecreasing(len: usize, max: u64, f: &mut impl FnMut(&[u64])) {
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
    go(&mut Vec::with_capacity(len), len, 0, max, f)
}

/// Wherever b1 is a pure binomial C(m-1+d, d), the two-term claim falls
/// inside the corrected lemma's domain and must hold.
#[test]
fn naive_claim_holds_on_the_constrained_domain() {
    for d in 1u32..=3 {
        let pure: Vec<u64> = (0u64..=60)
            .filter(|b1| pure_binomial_parameter(&nat(*b1), d).unwrap().is_some())
            .collect();
        pure.par_iter().for_each(|&b1| {
            for b2 in 0u64..=60 {
                for a1 in 0..=b1 {
                    for a2 in 0..=b1 {
                        if a1 + a2 > b1 + b2 {
                            continue;
                        }
                        let report =
                            naive_claim_35(&nat(a1), &nat(a2), &nat(b1), &nat(b2), d).unwrap();
                        assert!(
                            report.holds,
                            "claim failed on constrained domain: \
                             a1={a1} a2={a2} b1={b1} b2={b2} d={d}"
                        );
                    }
                }
            }
        });
    }
}
