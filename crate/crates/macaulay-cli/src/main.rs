//! Command-line front end for the Macaulay growth-function toolkit.
//!
//! Exit codes: 0 success (and the checked inequality holds), 2 bad usage or
//! violated precondition, 3 internal invariant failure, 4 a genuine
//! inequality violation was found.

mod output;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use macaulay_core::{
    check_constrained, check_sequence_lemma, check_superadditive, d_binomial_rep, macaulay,
    macaulay_recursive, naive_claim_35, rep_value, sweep_lemma, trace_construction, Error,
    LemmaKind, LemmaReport, Nat, SequenceInstance, SequenceMode, SweepConfig,
};
use output::{emit, Format, OutputRecord};

#[derive(Parser)]
#[command(
    name = "macaulay",
    version,
    about = "Macaulay d-binomial representations, growth values, and superadditivity checks"
)]
struct Cli {
    /// Output format: JSON records (one per line) or flat text.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the d-binomial representation of a.
    Rep { a: Nat, d: u32 },

    /// Evaluate the growth function `a^<d>`.
    Macaulay {
        a: Nat,
        d: u32,
        /// Evaluation route; `both` also reports whether the routes agree.
        #[arg(long, value_enum, default_value = "definitional")]
        method: MethodArg,
    },

    /// Check one lemma instance and report the two sides.
    #[command(subcommand)]
    Check(CheckCmd),

    /// Replay the pair construction for a normalized constrained instance.
    Trace {
        a: Nat,
        b: Nat,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: Nat,
        #[arg(long)]
        c: Nat,
    },

    /// Exhaustively scan all in-bounds instances of one inequality.
    Sweep {
        lemma: LemmaArg,
        /// Upper bound for enumerated values.
        #[arg(long)]
        max: u64,
        /// Sweep degrees 1 through this value.
        #[arg(long = "max-d", conflicts_with = "d")]
        max_d: Option<u32>,
        /// Sweep exactly this degree.
        #[arg(long)]
        d: Option<u32>,
        /// Worker threads; output bytes are identical for any count.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// `a^<d> + b^<d> <= (a+b)^<d>`.
    Super {
        a: Nat,
        b: Nat,
        #[arg(long)]
        d: u32,
    },
    /// The bounded variant against C(m-1+d, d) with slack c.
    Constrained {
        a: Nat,
        b: Nat,
        #[arg(long)]
        m: Nat,
        #[arg(long)]
        c: Nat,
        #[arg(long)]
        d: u32,
    },
    /// The unguarded two-term comparison; false in general.
    Naive35 {
        a1: Nat,
        a2: Nat,
        b1: Nat,
        b2: Nat,
        #[arg(long)]
        d: u32,
    },
    /// The sequence inequality, evaluated directly or by proof replay.
    Seq {
        /// Comma-separated nondecreasing a-sequence.
        #[arg(long = "as", value_delimiter = ',', required = true)]
        a_seq: Vec<Nat>,
        /// Comma-separated b-sequence; entries past the first must equal C(m-1+d, d).
        #[arg(long = "bs", value_delimiter = ',', required = true)]
        b_seq: Vec<Nat>,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: Nat,
        #[arg(long, value_enum, default_value = "direct")]
        mode: ModeArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Definitional,
    Recursive,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Direct,
    ProofReplay,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaArg {
    Super,
    Constrained,
    Seq,
    Naive35,
}

impl From<LemmaArg> for LemmaKind {
    fn from(arg: LemmaArg) -> Self {
        match arg {
            LemmaArg::Super => LemmaKind::Superadditive,
            LemmaArg::Constrained => LemmaKind::Constrained,
            LemmaArg::Seq => LemmaKind::Sequence,
            LemmaArg::Naive35 => LemmaKind::Naive35,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Internal(_) | Error::ReplayDivergence(_) => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn run(command: Command, format: Format) -> Result<i32, Error> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match command {
        Command::Rep { a, d } => {
            let rep = d_binomial_rep(&a, d)?;
            let value = rep_value(&rep)?;
            let inputs = inputs([("a", a.to_string()), ("d", d.to_string())]);
            let result = json!({
                "ks": serde_json::to_value(&rep.ks).expect("serializable"),
                "value": value,
            });
            write_record(&mut out, format, OutputRecord::new("rep", inputs, result));
            0
        }
        Command::Macaulay { a, d, method } => {
            let inputs = inputs([
                ("a", a.to_string()),
                ("d", d.to_string()),
                ("method", method_name(method).to_string()),
            ]);
            let result = match method {
                MethodArg::Definitional => json!({
                    "method": "definitional",
                    "value": macaulay(&a, d)?,
                }),
                MethodArg::Recursive => json!({
                    "method": "recursive",
                    "value": macaulay_recursive(&a, d)?,
                }),
                MethodArg::Both => {
                    let definitional = macaulay(&a, d)?;
                    let recursive = macaulay_recursive(&a, d)?;
                    if definitional != recursive {
                        return Err(Error::Internal(format!(
                            "evaluation routes disagree: definitional {definitional}, \
                             recursive {recursive}"
                        )));
                    }
                    json!({
                        "value": definitional,
                        "definitional": definitional,
                        "recursive": recursive,
                        "agree": true,
                    })
                }
            };
            write_record(
                &mut out,
                format,
                OutputRecord::new("macaulay", inputs, result),
            );
            0
        }
        Command::Check(check) => {
            let (inputs, report) = run_check(check)?;
            let result = serde_json::to_value(&report).expect("serializable");
            write_record(&mut out, format, OutputRecord::new("check", inputs, result));
            if report.holds {
                0
            } else {
                4
            }
        }
        Command::Trace { a, b, d, m, c } => {
            let trace = trace_construction(&a, &b, d, &m, &c)?;
            let inputs = inputs([
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("d", d.to_string()),
                ("m", m.to_string()),
                ("c", c.to_string()),
            ]);
            let result = serde_json::to_value(&trace).expect("serializable");
            write_record(&mut out, format, OutputRecord::new("trace", inputs, result));
            0
        }
        Command::Sweep {
            lemma,
            max,
            max_d,
            d,
            workers,
        } => {
            let (min_d, max_d) = match (d, max_d) {
                (Some(d), None) => (d, d),
                (None, Some(max_d)) => (1, max_d),
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "specify a degree range with --d or --max-d".into(),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap rejects conflicting flags"),
            };
            let kind = LemmaKind::from(lemma);
            let cfg = SweepConfig {
                lemma: kind,
                max_value: max,
                min_d,
                max_d,
                workers,
            };
            let summary = sweep_lemma(&cfg)?;
            // Workers deliberately left out of the record: output bytes must
            // not depend on how the sweep was parallelized.
            let inputs = inputs([
                ("lemma", lemma_name(lemma).to_string()),
                ("max", max.to_string()),
                ("min-d", min_d.to_string()),
                ("max-d", max_d.to_string()),
            ]);
            for violation in &summary.violations {
                let result = json!({
                    "violation": serde_json::to_value(violation).expect("serializable"),
                });
                write_record(
                    &mut out,
                    format,
                    OutputRecord::new("sweep", inputs.clone(), result),
                );
            }
            let result = json!({
                "instances_checked": summary.instances_checked,
                "violations_found": summary.violations.len(),
            });
            write_record(&mut out, format, OutputRecord::new("sweep", inputs, result));
            if !summary.violations.is_empty() && kind != LemmaKind::Naive35 {
                4
            } else {
                0
            }
        }
    };
    Ok(code)
}

fn run_check(check: CheckCmd) -> Result<(BTreeMap<String, String>, LemmaReport), Error> {
    match check {
        CheckCmd::Super { a, b, d } => {
            let report = check_superadditive(&a, &b, d)?;
            let inputs = inputs([
                ("lemma", "super".to_string()),
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("d", d.to_string()),
            ]);
            Ok((inputs, report))
        }
        CheckCmd::Constrained { a, b, m, c, d } => {
            let report = check_constrained(&m, d, &a, &b, &c)?;
            let inputs = inputs([
                ("lemma", "constrained".to_string()),
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("m", m.to_string()),
                ("c", c.to_string()),
                ("d", d.to_string()),
            ]);
            Ok((inputs, report))
        }
        CheckCmd::Naive35 { a1, a2, b1, b2, d } => {
            let report = naive_claim_35(&a1, &a2, &b1, &b2, d)?;
            let inputs = inputs([
                ("lemma", "naive35".to_string()),
                ("a1", a1.to_string()),
                ("a2", a2.to_string()),
                ("b1", b1.to_string()),
                ("b2", b2.to_string()),
                ("d", d.to_string()),
            ]);
            Ok((inputs, report))
        }
        CheckCmd::Seq {
            a_seq,
            b_seq,
            d,
            m,
            mode,
        } => {
            let inputs = inputs([
                ("lemma", "seq".to_string()),
                ("as", join_nats(&a_seq)),
                ("bs", join_nats(&b_seq)),
                ("d", d.to_string()),
                ("m", m.to_string()),
                (
                    "mode",
                    match mode {
                        ModeArg::Direct => "direct".to_string(),
                        ModeArg::ProofReplay => "proof-replay".to_string(),
                    },
                ),
            ]);
            let inst = SequenceInstance::new(a_seq, b_seq, d, m)?;
            let mode = match mode {
                ModeArg::Direct => SequenceMode::Direct,
                ModeArg::ProofReplay => SequenceMode::ProofReplay,
            };
            let report = check_sequence_lemma(&inst, mode)?;
            Ok((inputs, report))
        }
    }
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn join_nats(values: &[Nat]) -> String {
    values
        .iter()
        .map(Nat::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn method_name(method: MethodArg) -> &'static str {
    match method {
        MethodArg::Definitional => "definitional",
        MethodArg::Recursive => "recursive",
        MethodArg::Both => "both",
    }
}

fn lemma_name(lemma: LemmaArg) -> &'static str {
    match lemma {
        LemmaArg::Super => "super",
        LemmaArg::Constrained => "constrained",
        LemmaArg::Seq => "seq",
        LemmaArg::Naive35 => "naive35",
    }
}

fn write_record(out: &mut impl Write, format: Format, record: OutputRecord) {
    if let Err(err) = emit(out, format, &record) {
        // A broken pipe downstream is not our error; anything else is fatal.
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {err}");
        std::process::exit(3);
    }
}
