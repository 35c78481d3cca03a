//! Serializable report and its text rendering.
//!
//! Every exact number is carried as a string in `p/q` or integer form so
//! that it parses back to the same rational. Oracle eigenvalues are the
//! one exception: they are floating-point by nature and stay JSON numbers.

use std::fmt::Write as _;

use serde::Serialize;
use sylvester::parse::render_squares;
use sylvester::{Rational, SosCertificate, SquareTerm, Witness};

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub weight: String,
    pub form: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub x: Vec<String>,
    pub value: String,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            x: strings(w.x().components()),
            value: w.value().to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EvidenceJson {
    /// `Q = Σ wᵢ (ℓᵢ)²`.
    Certificate { terms: Vec<TermJson>, rendered: String },
    /// `−Q = Σ wᵢ (ℓᵢ)²`.
    NegatedCertificate { terms: Vec<TermJson>, rendered: String },
    Witnesses {
        positive: Option<WitnessJson>,
        negative: Option<WitnessJson>,
    },
}

impl EvidenceJson {
    pub fn certificate(cert: &SosCertificate, negated: bool) -> Self {
        let terms = cert.terms().iter().map(term_json).collect();
        let rendered = render_squares(cert.terms(), cert.dim());
        if negated {
            EvidenceJson::NegatedCertificate { terms, rendered }
        } else {
            EvidenceJson::Certificate { terms, rendered }
        }
    }

    pub fn witnesses(positive: Option<&Witness>, negative: Option<&Witness>) -> Self {
        EvidenceJson::Witnesses {
            positive: positive.map(WitnessJson::from),
            negative: negative.map(WitnessJson::from),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorJson {
    /// 1-based indices.
    pub set: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SamplingJson {
    pub trials: usize,
    pub seed: u64,
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleJson {
    pub eigenvalues: Vec<f64>,
    pub zero_threshold: f64,
    pub verdict: String,
    /// `None` when the spectral verdict is unresolved.
    pub agrees: Option<bool>,
    pub sampling: SamplingJson,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<EvidenceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leading_minors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub principal_minors: Option<Vec<MinorJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical_point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

pub fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

fn term_json(t: &SquareTerm) -> TermJson {
    TermJson {
        weight: t.weight.to_string(),
        form: strings(t.form.components()),
    }
}

fn witness_text(w: &WitnessJson) -> String {
    format!("Q({}) = {}", w.x.join(", "), w.value)
}

fn evidence_text(e: &EvidenceJson) -> String {
    match e {
        EvidenceJson::Certificate { rendered, .. } => format!("Q = {rendered}"),
        EvidenceJson::NegatedCertificate { rendered, .. } => format!("-Q = {rendered}"),
        EvidenceJson::Witnesses { positive, negative } => {
            let parts: Vec<String> = [positive, negative]
                .into_iter()
                .flatten()
                .map(witness_text)
                .collect();
            parts.join(", ")
        }
    }
}

impl Report {
    /// Human-readable rendering. The first line is the headline result of
    /// the command; error reports render to nothing (the error goes to stderr).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.error.is_some() {
            return out;
        }
        let class = self.class.as_deref().unwrap_or("?");
        match self.command.as_str() {
            "classify" => {
                let _ = writeln!(out, "{class}");
                if let Some(e) = &self.evidence {
                    let _ = writeln!(out, "evidence: {}", evidence_text(e));
                }
            }
            "certify" => {
                match &self.evidence {
                    Some(EvidenceJson::Certificate { rendered, .. }) => {
                        let _ = writeln!(out, "certificate: {rendered}");
                    }
                    Some(EvidenceJson::Witnesses { negative: Some(w), .. }) => {
                        let _ = writeln!(out, "witness: {}", witness_text(w));
                    }
                    _ => {}
                }
                if let Some(v) = self.verified {
                    let _ = writeln!(out, "verified: {v}");
                }
                let _ = writeln!(out, "class: {class}");
            }
            "witness" => {
                if let Some(EvidenceJson::Witnesses { positive, negative }) = &self.evidence {
                    let line = |w: &Option<WitnessJson>, none: &str| match w {
                        Some(w) => witness_text(w),
                        None => none.to_string(),
                    };
                    let _ = writeln!(out, "negative: {}", line(negative, "none (Q >= 0)"));
                    let _ = writeln!(out, "positive: {}", line(positive, "none (Q <= 0)"));
                }
                let _ = writeln!(out, "class: {class}");
            }
            "minors" => {
                if let Some(d) = &self.leading_minors {
                    let _ = writeln!(out, "Δ: {}", d.join(", "));
                }
                for m in self.principal_minors.iter().flatten() {
                    let set: Vec<String> = m.set.iter().map(usize::to_string).collect();
                    let _ = writeln!(out, "{{{}}}: {}", set.join(","), m.value);
                }
            }
            "hessian" => {
                let cp = self.critical_point.as_deref().unwrap_or("?");
                let _ = writeln!(out, "{cp}");
                let _ = writeln!(out, "class: {class}");
            }
            "oracle" => {
                if let Some(o) = &self.oracle {
                    let eig: Vec<String> = o.eigenvalues.iter().map(|l| format!("{l:.12e}")).collect();
                    let _ = writeln!(out, "eigenvalues: {}", eig.join(", "));
                    let _ = writeln!(out, "zero threshold: {:e}", o.zero_threshold);
                    let _ = writeln!(out, "spectrum: {}", o.verdict);
                    let _ = writeln!(out, "exact: {class}");
                    let agrees = match o.agrees {
                        Some(true) => "yes",
                        Some(false) => "NO",
                        None => "n/a (unresolved)",
                    };
                    let _ = writeln!(out, "agree: {agrees}");
                    let s = &o.sampling;
                    match &s.witness {
                        Some(w) => {
                            let _ = writeln!(out, "sampling: {} (seed {})", witness_text(w), s.seed);
                        }
                        None => {
                            let _ = writeln!(
                                out,
                                "sampling: no negative value in {} trials (seed {})",
                                s.trials, s.seed
                            );
                        }
                    }
                }
            }
            _ => {}
        }
        out
    }
}
