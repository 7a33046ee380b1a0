//! Exact-integer combinatorics around Macaulay binomial representations.
//!
//! The crate computes d-binomial representations and the growth function
//! `a^<d>` on arbitrary-precision integers, checks the superadditivity
//! inequalities that govern it (including constructive replays of their
//! proofs), and exhaustively searches for counterexamples to the unguarded
//! two-term comparison, which fails without the pure-binomial hypothesis on
//! the dominant term.
//!
//! Everything is a pure function on immutable values; sweeps parallelize by
//! partitioning their leading coordinate and merging in order, so results
//! are identical for any worker count.

pub mod binomial;
pub mod error;
pub mod lemmas;
pub mod macaulay;
pub mod nat;
pub mod search;

pub use binomial::{
    binom, bound_value, d_binomial_rep, decompose, decompose_half_closed, decompose_half_open,
    rep_lex_compare, rep_value, BinomialRep, Decomposition, DecompositionForm,
};
pub use error::{Error, Result};
pub use lemmas::{
    check_constrained, check_sequence_lemma, check_superadditive, construct_pair_step,
    naive_claim_35, normalize_constrained, trace_construction, ConstructionTrace, LemmaInstance,
    LemmaReport, Normalization, PairState, ReplayCase, ReplayRecord, ReportTrace,
    SequenceInstance, SequenceMode, StepCase,
};
pub use macaulay::{
    macaulay, macaulay_recursive, macaulay_recursive_with, strictly_monotone, MacaulayTable,
    MacaulayValue, Method,
};
pub use nat::Nat;
pub use search::{
    find_violations_35, macaulay_order_ideal_stabilized, macaulay_via_order_ideal,
    pure_binomial_parameter, sweep_lemma, LemmaKind, SweepConfig, SweepSummary, ViolationRecord,
};
