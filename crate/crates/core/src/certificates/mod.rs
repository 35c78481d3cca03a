//! Sum-of-squares certificates and sign witnesses.
//!
//! A certificate is an exact polynomial identity `Q(x) = Σ wᵢ (ℓᵢ·x)²` with
//! `wᵢ ≥ 0`; it is checked by comparing the coefficient of every monomial
//! `xⱼxₖ` on both sides, so no sampling is involved. A witness is a single
//! vector with an exactly evaluated, nonzero form value.

mod congruence;
mod lagrange_beltrami;
mod substitution;
mod ternary;

pub use congruence::{psd_certificate, PsdOutcome};
pub use lagrange_beltrami::{lb_decompose, LbDecomposition};
pub use substitution::TriangularSubstitution;
pub use ternary::{avatar_identities_ternary, negative_witness_ternary, AvatarIdentity, AvatarSlot};

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{IndexSet, RVector, SymMatrix};
use crate::minors::principal_minor;
use crate::rational::Rational;

/// One weighted square `weight · (form · x)²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareTerm {
    pub weight: Rational,
    pub form: RVector,
}

impl SquareTerm {
    pub fn new(weight: Rational, form: RVector) -> Self {
        SquareTerm { weight, form }
    }
}

/// Upper-triangle monomial coefficients of `Σ wᵢ (ℓᵢ·x)²`, row-major over
/// `j <= k`.
fn expand_squares(n: usize, terms: &[SquareTerm]) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); n * (n + 1) / 2];
    for term in terms {
        let l = term.form.components();
        let mut idx = 0;
        for j in 0..n {
            for k in j..n {
                if !l[j].is_zero() && !l[k].is_zero() {
                    let mut c = &term.weight * &l[j] * &l[k];
                    if j != k {
                        c = c * Rational::from(2);
                    }
                    coeffs[idx] += c;
                }
                idx += 1;
            }
        }
    }
    coeffs
}

/// Upper-triangle monomial coefficients of `scale · x A xᵀ`.
fn expand_form(a: &SymMatrix, scale: &Rational) -> Vec<Rational> {
    let n = a.dim();
    let two = Rational::from(2);
    let mut coeffs = Vec::with_capacity(n * (n + 1) / 2);
    for j in 0..n {
        for k in j..n {
            let c = a.get(j, k) * scale;
            coeffs.push(if j == k { c } else { c * &two });
        }
    }
    coeffs
}

/// Whether `scale · Q(x) = Σ terms` holds as a polynomial identity. Terms
/// may carry weights of any sign.
pub fn squares_identity_holds(a: &SymMatrix, scale: &Rational, terms: &[SquareTerm]) -> bool {
    terms.iter().all(|t| t.form.len() == a.dim())
        && expand_squares(a.dim(), terms) == expand_form(a, scale)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SosClaim {
    /// `Q(x) ≥ 0` for all x.
    Nonnegative,
    /// `Q` is identically zero.
    Zero,
}

/// A nonnegative weighted sum of squares claimed to equal `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SosCertificate {
    n: usize,
    terms: Vec<SquareTerm>,
    claim: SosClaim,
}

impl SosCertificate {
    /// Checks the structural invariants: forms of length `n`, weights
    /// `≥ 0`, at most `n` terms. Whether the identity actually holds for a
    /// given matrix is [`verify_certificate`]'s job.
    pub fn new(n: usize, terms: Vec<SquareTerm>) -> Result<Self> {
        if terms.len() > n {
            return Err(Error::InvalidCertificate(format!(
                "{} terms for dimension {n}",
                terms.len()
            )));
        }
        for t in &terms {
            if t.form.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.form.len(),
                });
            }
            if t.weight.is_negative() {
                return Err(Error::InvalidCertificate(format!("negative weight {}", t.weight)));
            }
        }
        let claim = if terms.iter().all(|t| t.weight.is_zero() || t.form.is_zero()) {
            SosClaim::Zero
        } else {
            SosClaim::Nonnegative
        };
        Ok(SosCertificate { n, terms, claim })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[SquareTerm] {
        &self.terms
    }

    pub fn claim(&self) -> SosClaim {
        self.claim
    }

    /// True when the certificate also proves `Q(x) > 0` for `x ≠ 0`: `n`
    /// strictly positive weights on linearly independent forms.
    pub fn proves_positive_definite(&self) -> bool {
        self.terms.len() == self.n
            && self.terms.iter().all(|t| t.weight.is_positive())
            && rank(self.terms.iter().map(|t| t.form.components().to_vec()).collect()) == self.n
    }

    /// Evaluates `Σ wᵢ (ℓᵢ·x)²`.
    pub fn evaluate(&self, x: &RVector) -> Result<Rational> {
        let mut total = Rational::zero();
        for t in &self.terms {
            total += &t.weight * t.form.dot(x)?.square();
        }
        Ok(total)
    }
}

/// Exact rank by row reduction.
fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for k in c..cols {
                let d = &f * &rows[r][k];
                rows[i][k] -= d;
            }
        }
        r += 1;
    }
    r
}

/// Exact check that the certificate's squares expand to `x A xᵀ`, comparing
/// every monomial coefficient.
pub fn verify_certificate(a: &SymMatrix, cert: &SosCertificate) -> Result<bool> {
    if cert.n != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: cert.n,
        });
    }
    Ok(cert.terms.iter().all(|t| !t.weight.is_negative())
        && squares_identity_holds(a, &Rational::one(), &cert.terms))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

/// A nonzero vector together with its exact form value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    x: RVector,
    value: Rational,
    sign: Sign,
}

impl Witness {
    /// Evaluates `Q(x)`; `None` when the value is zero (no sign to claim).
    pub fn new(a: &SymMatrix, x: RVector) -> Result<Option<Self>> {
        let value = a.evaluate_form(&x)?;
        let sign = match value.signum() {
            -1 => Sign::Negative,
            1 => Sign::Positive,
            _ => return Ok(None),
        };
        Ok(Some(Witness { x, value, sign }))
    }

    pub fn x(&self) -> &RVector {
        &self.x
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Re-evaluates against `a` and checks value and sign.
    pub fn verify(&self, a: &SymMatrix) -> bool {
        a.evaluate_form(&self.x).is_ok_and(|v| {
            v == self.value
                && match self.sign {
                    Sign::Negative => v.is_negative(),
                    Sign::Positive => v.is_positive(),
                }
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{} = {}", self.x, self.value)
    }
}

/// Checks that every principal minor along a nested chain
/// `S₁ ⊂ S₂ ⊂ … ⊂ Sₙ = {1,…,n}` with `|Sₖ| = k` is strictly positive.
pub fn nested_minor_check(a: &SymMatrix, chain: &[IndexSet]) -> Result<bool> {
    let n = a.dim();
    if chain.len() != n {
        return Err(Error::MalformedChain(format!(
            "chain has {} sets, expected {n}",
            chain.len()
        )));
    }
    for (k, set) in chain.iter().enumerate() {
        if set.len() != k + 1 {
            return Err(Error::MalformedChain(format!(
                "set {set} at position {} has size {}",
                k + 1,
                set.len()
            )));
        }
        if set.indices().iter().any(|&i| i >= n) {
            return Err(Error::MalformedChain(format!("set {set} exceeds dimension {n}")));
        }
        if k > 0 && !chain[k - 1].is_subset_of(set) {
            return Err(Error::MalformedChain(format!(
                "{} is not contained in {set}",
                chain[k - 1]
            )));
        }
    }
    Ok(chain.iter().all(|s| principal_minor(a, s).is_positive()))
}
