use clap::ValueEnum;
use sylvester::oracle::{sampling_refute, spectrum_classify, SpectrumVerdict};
use sylvester::{
    all_principal_minors, classify, classify_critical_point, classify_with_evidence,
    leading_minors, psd_certificate, verify_certificate, DefinitenessClass, Error, Evidence,
    PsdOutcome, SymMatrix, Witness,
};

use crate::input::Source;
use crate::report::{strings, EvidenceJson, MinorJson, OracleJson, Report, SamplingJson};

pub const EXIT_NONNEGATIVE: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Definiteness class with supporting evidence.
    Classify,
    /// Sum-of-squares certificate for Q, or a vector where Q < 0.
    Certify,
    /// Vectors where Q is negative and where it is positive.
    Witness,
    /// Leading principal minors; `--all` adds every principal minor.
    Minors,
    /// Second-derivative test, reading the input as a Hessian.
    Hessian,
    /// Floating-point eigenvalue and sampling cross-check.
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Certify => "certify",
            Command::Witness => "witness",
            Command::Minors => "minors",
            Command::Hessian => "hessian",
            Command::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub all: bool,
    pub seed: u64,
    pub trials: usize,
}

fn class_exit(class: DefinitenessClass) -> i32 {
    if class.is_nonnegative() {
        EXIT_NONNEGATIVE
    } else {
        EXIT_OTHER
    }
}

/// Failure that aborts one item: input problems exit 2, anything that
/// failed its own check exits 3.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidCertificate(_) => EXIT_VERIFICATION,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn verification_failure(what: &str) -> Failure {
    Failure {
        code: EXIT_VERIFICATION,
        message: format!("internal verification failed: {what}"),
    }
}

/// Runs one command on one input. Never panics on bad input; errors end up
/// in `Report::error` with the matching exit code.
pub fn run(command: Command, opts: Options, source: &Source) -> Report {
    let mut report = Report {
        command: command.name().to_string(),
        input: source.text().trim().to_string(),
        ..Report::default()
    };
    let outcome = source
        .parse()
        .map_err(Failure::from)
        .and_then(|a| fill(command, opts, &a, &mut report));
    match outcome {
        Ok(code) => report.exit_code = code,
        Err(f) => {
            // Nothing unverified is left behind.
            report.evidence = None;
            report.verified = None;
            report.error = Some(f.message);
            report.exit_code = f.code;
        }
    }
    report
}

fn fill(command: Command, opts: Options, a: &SymMatrix, r: &mut Report) -> Result<i32, Failure> {
    r.dimension = Some(a.dim());
    r.matrix = Some(a.rows().iter().map(|row| strings(row)).collect());
    let class = classify(a);
    r.class = Some(class.name().to_string());

    match command {
        Command::Classify => {
            let c = classify_with_evidence(a)?;
            // classify_with_evidence already checks its evidence; check again
            // here so the claim in the report does not rest on that alone.
            if c.class != class || !c.evidence.verify(a) {
                return Err(verification_failure("classification evidence"));
            }
            r.evidence = Some(match &c.evidence {
                Evidence::Certificate(cert) => EvidenceJson::certificate(cert, false),
                Evidence::NegatedCertificate(cert) => EvidenceJson::certificate(cert, true),
                Evidence::Witnesses { positive, negative } => {
                    EvidenceJson::witnesses(Some(positive), Some(negative))
                }
            });
            r.verified = Some(true);
        }
        Command::Certify => {
            match psd_certificate(a) {
                PsdOutcome::Certificate(cert) => {
                    if !verify_certificate(a, &cert)? || !class.is_nonnegative() {
                        return Err(verification_failure("sum-of-squares certificate"));
                    }
                    r.evidence = Some(EvidenceJson::certificate(&cert, false));
                }
                PsdOutcome::Witness(w) => {
                    if !w.verify(a) || class.is_nonnegative() {
                        return Err(verification_failure("negative witness"));
                    }
                    r.evidence = Some(EvidenceJson::witnesses(None, Some(&w)));
                }
            }
            r.verified = Some(true);
        }
        Command::Witness => {
            let negative = psd_certificate(a).witness().cloned();
            let positive = match psd_certificate(&a.negate()).witness() {
                Some(w) => Witness::new(a, w.x().clone())?,
                None => None,
            };
            let ok = negative.as_ref().map_or(class.is_nonnegative(), |w| w.verify(a))
                && positive.as_ref().map_or(class.is_nonpositive(), |w| w.verify(a));
            if !ok {
                return Err(verification_failure("sign witnesses"));
            }
            r.evidence = Some(EvidenceJson::witnesses(positive.as_ref(), negative.as_ref()));
            r.verified = Some(true);
        }
        Command::Minors => {
            r.leading_minors = Some(strings(leading_minors(a).values()));
            if opts.all {
                let table = all_principal_minors(a);
                r.principal_minors = Some(
                    table
                        .iter()
                        .map(|(s, v)| MinorJson {
                            set: s.indices().iter().map(|i| i + 1).collect(),
                            value: v.to_string(),
                        })
                        .collect(),
                );
            }
        }
        Command::Hessian => {
            r.critical_point = Some(classify_critical_point(a).to_string());
        }
        Command::Oracle => {
            let spectrum = spectrum_classify(a, None)?;
            let (verdict, agrees) = match spectrum.verdict {
                SpectrumVerdict::Class(c) => (c.name().to_string(), Some(c == class)),
                SpectrumVerdict::Unresolved => ("Unresolved".to_string(), None),
            };
            let witness = sampling_refute(a, opts.trials, opts.seed);
            if witness.as_ref().is_some_and(|w| !w.verify(a) || class.is_nonnegative()) {
                return Err(verification_failure("sampled witness"));
            }
            r.oracle = Some(OracleJson {
                eigenvalues: spectrum.eigenvalues,
                zero_threshold: spectrum.zero_threshold,
                verdict,
                agrees,
                sampling: SamplingJson {
                    trials: opts.trials,
                    seed: opts.seed,
                    witness: witness.as_ref().map(Into::into),
                },
            });
        }
    }
    Ok(class_exit(class))
}
