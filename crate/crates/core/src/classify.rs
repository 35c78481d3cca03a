//! Definiteness classification by principal minors.
//!
//! Positive definiteness is decided by the leading minors alone; nonnegative
//! definiteness needs every principal minor. The negative side runs the same
//! tests on `−A`.

use std::fmt;
use std::str::FromStr;

use crate::certificates::{psd_certificate, verify_certificate, PsdOutcome, Sign, SosCertificate, Witness};
use crate::error::{Error, Result};
use crate::matrix::{IndexSet, SymMatrix};
use crate::minors::{leading_minors, principal_minor};

/// Six labels partitioning all symmetric matrices.
///
/// `PositiveSemidefinite` is exclusive: nonnegative definite but not
/// positive definite. `Zero` is split out because the zero matrix is both
/// nonnegative and nonpositive definite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DefinitenessClass {
    PositiveDefinite,
    PositiveSemidefinite,
    NegativeDefinite,
    NegativeSemidefinite,
    Indefinite,
    Zero,
}

impl DefinitenessClass {
    pub const ALL: [DefinitenessClass; 6] = [
        DefinitenessClass::PositiveDefinite,
        DefinitenessClass::PositiveSemidefinite,
        DefinitenessClass::NegativeDefinite,
        DefinitenessClass::NegativeSemidefinite,
        DefinitenessClass::Indefinite,
        DefinitenessClass::Zero,
    ];

    /// The class of `−A` given the class of `A`.
    pub fn mirror(self) -> Self {
        use DefinitenessClass::*;
        match self {
            PositiveDefinite => NegativeDefinite,
            NegativeDefinite => PositiveDefinite,
            PositiveSemidefinite => NegativeSemidefinite,
            NegativeSemidefinite => PositiveSemidefinite,
            Indefinite => Indefinite,
            Zero => Zero,
        }
    }

    /// `Q(x) ≥ 0` everywhere.
    pub fn is_nonnegative(self) -> bool {
        use DefinitenessClass::*;
        matches!(self, PositiveDefinite | PositiveSemidefinite | Zero)
    }

    pub fn is_nonpositive(self) -> bool {
        self.mirror().is_nonnegative()
    }

    pub fn name(self) -> &'static str {
        use DefinitenessClass::*;
        match self {
            PositiveDefinite => "PositiveDefinite",
            PositiveSemidefinite => "PositiveSemidefinite",
            NegativeDefinite => "NegativeDefinite",
            NegativeSemidefinite => "NegativeSemidefinite",
            Indefinite => "Indefinite",
            Zero => "Zero",
        }
    }
}

impl fmt::Display for DefinitenessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DefinitenessClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown class `{s}`")))
    }
}

/// All principal minors `≥ 0`, scanned by increasing size and stopping at
/// the first negative one.
fn principal_minors_nonnegative(a: &SymMatrix) -> bool {
    let n = a.dim();
    (1..=n).all(|k| {
        IndexSet::of_size(n, k)
            .iter()
            .all(|s| !principal_minor(a, s).is_negative())
    })
}

fn nonnegative_class(a: &SymMatrix) -> Option<DefinitenessClass> {
    if leading_minors(a).all_positive() {
        Some(DefinitenessClass::PositiveDefinite)
    } else if principal_minors_nonnegative(a) {
        Some(DefinitenessClass::PositiveSemidefinite)
    } else {
        None
    }
}

pub fn classify(a: &SymMatrix) -> DefinitenessClass {
    if a.is_zero() {
        return DefinitenessClass::Zero;
    }
    if let Some(c) = nonnegative_class(a) {
        return c;
    }
    match nonnegative_class(&a.negate()) {
        Some(c) => c.mirror(),
        None => DefinitenessClass::Indefinite,
    }
}

/// Independently checkable support for a classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// `Q` itself is a nonnegative sum of squares (PD, PSD, Zero).
    Certificate(SosCertificate),
    /// `−Q` is a nonnegative sum of squares (ND, NSD).
    NegatedCertificate(SosCertificate),
    /// `Q` takes both signs.
    Witnesses { positive: Witness, negative: Witness },
}

impl Evidence {
    /// Re-checks the evidence against `a` from scratch.
    pub fn verify(&self, a: &SymMatrix) -> bool {
        match self {
            Evidence::Certificate(c) => verify_certificate(a, c).unwrap_or(false),
            Evidence::NegatedCertificate(c) => verify_certificate(&a.negate(), c).unwrap_or(false),
            Evidence::Witnesses { positive, negative } => {
                positive.sign() == Sign::Positive
                    && negative.sign() == Sign::Negative
                    && positive.verify(a)
                    && negative.verify(a)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: DefinitenessClass,
    pub evidence: Evidence,
}

/// Classifies and attaches evidence. Returns `InvalidCertificate` if the
/// minor-based class and the congruence construction disagree, which would
/// be an internal bug.
pub fn classify_with_evidence(a: &SymMatrix) -> Result<Classification> {
    let class = classify(a);
    let inconsistent = |what: &str| {
        Error::InvalidCertificate(format!("{class} but congruence produced {what}"))
    };
    let evidence = if class.is_nonnegative() {
        match psd_certificate(a) {
            PsdOutcome::Certificate(c) => Evidence::Certificate(c),
            PsdOutcome::Witness(_) => return Err(inconsistent("a negative witness")),
        }
    } else if class.is_nonpositive() {
        match psd_certificate(&a.negate()) {
            PsdOutcome::Certificate(c) => Evidence::NegatedCertificate(c),
            PsdOutcome::Witness(_) => return Err(inconsistent("a positive witness")),
        }
    } else {
        let negative = psd_certificate(a)
            .witness()
            .cloned()
            .ok_or_else(|| inconsistent("a certificate for Q"))?;
        let flipped = psd_certificate(&a.negate())
            .witness()
            .cloned()
            .ok_or_else(|| inconsistent("a certificate for -Q"))?;
        let positive = Witness::new(a, flipped.x().clone())?
            .ok_or_else(|| inconsistent("a zero-valued witness"))?;
        Evidence::Witnesses { positive, negative }
    };
    if !evidence.verify(a) {
        return Err(Error::InvalidCertificate(format!("evidence for {class} failed to verify")));
    }
    Ok(Classification { class, evidence })
}

/// Second-derivative test verdict at a critical point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriticalPointVerdict {
    LocalMin,
    LocalMax,
    Saddle,
    Inconclusive,
}

impl fmt::Display for CriticalPointVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalPointVerdict::LocalMin => "LocalMin",
            CriticalPointVerdict::LocalMax => "LocalMax",
            CriticalPointVerdict::Saddle => "Saddle",
            CriticalPointVerdict::Inconclusive => "Inconclusive",
        })
    }
}

impl From<DefinitenessClass> for CriticalPointVerdict {
    fn from(c: DefinitenessClass) -> Self {
        use DefinitenessClass::*;
        match c {
            PositiveDefinite => CriticalPointVerdict::LocalMin,
            NegativeDefinite => CriticalPointVerdict::LocalMax,
            Indefinite => CriticalPointVerdict::Saddle,
            PositiveSemidefinite | NegativeSemidefinite | Zero => CriticalPointVerdict::Inconclusive,
        }
    }
}

/// `h` must be the Hessian at a critical point; semidefinite Hessians are
/// reported as inconclusive rather than as an error.
pub fn classify_critical_point(h: &SymMatrix) -> CriticalPointVerdict {
    classify(h).into()
}
