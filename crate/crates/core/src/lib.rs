//! Exact definiteness classification of real quadratic forms.
//!
//! A symmetric rational matrix `A` is classified by its principal minors:
//! positive definite iff every leading principal minor is positive,
//! nonnegative definite iff every principal minor is nonnegative, and the
//! negative cases by applying the same tests to `−A`. Every verdict can be
//! backed by evidence that is checked independently of the minors: a
//! sum-of-squares decomposition (verified by exact coefficient comparison)
//! or explicit vectors on which the form takes a given sign.
//!
//! ```
//! use sylvester::{classify, parse_matrix, DefinitenessClass};
//!
//! // Leading minors 0, 0 are nonnegative, yet Q(x, y) = -y² is not.
//! let a = parse_matrix("0 0; 0 -1").unwrap();
//! assert_eq!(classify(&a), DefinitenessClass::NegativeSemidefinite);
//! ```

pub mod certificates;
pub mod classify;
mod error;
pub mod matrix;
pub mod minors;
pub mod oracle;
pub mod parse;
pub mod rational;

pub use certificates::{
    avatar_identities_ternary, lb_decompose, negative_witness_ternary, nested_minor_check,
    psd_certificate, verify_certificate, PsdOutcome, Sign, SosCertificate, SosClaim, SquareTerm,
    Witness,
};
pub use classify::{
    classify, classify_critical_point, classify_with_evidence, Classification,
    CriticalPointVerdict, DefinitenessClass, Evidence,
};
pub use error::{Error, ParseError, Result};
pub use matrix::{IndexSet, RVector, SymMatrix};
pub use minors::{all_principal_minors, char_poly_sums, det, leading_minors};
pub use parse::{parse_form, parse_matrix, render_form};
pub use rational::Rational;
