//! Total nonnegativity decision by symmetric pivoted congruence.
//!
//! Each step picks the first remaining index with a positive diagonal entry,
//! emits `d·(xₚ + Σ (mₚₗ/d) xₗ)²` and replaces the remaining block with its
//! Schur complement. All emitted forms are written in the original
//! coordinates, so the certificate needs no permutation to be read back.
//! When no positive diagonal entry is left, either the remainder is zero
//! (done) or it has a negative diagonal entry or a nonzero off-diagonal entry
//! over a zero diagonal; either gives a negative vector for the remainder,
//! which is lifted through the emitted forms by back-substitution.

use crate::matrix::{RVector, SymMatrix};
use crate::rational::Rational;

use super::{verify_certificate, SosCertificate, SquareTerm, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdOutcome {
    Certificate(SosCertificate),
    Witness(Witness),
}

impl PsdOutcome {
    pub fn certificate(&self) -> Option<&SosCertificate> {
        match self {
            PsdOutcome::Certificate(c) => Some(c),
            PsdOutcome::Witness(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            PsdOutcome::Witness(w) => Some(w),
            PsdOutcome::Certificate(_) => None,
        }
    }
}

/// Either a verified nonnegative sum-of-squares certificate for `Q`, or a
/// vector with `Q(x) < 0`. Never both.
///
/// Panics if an internal consistency check fails (a lifted witness whose
/// value disagrees with the remainder, or a certificate that does not
/// expand to `Q`); either would indicate a bug, not bad input.
pub fn psd_certificate(a: &SymMatrix) -> PsdOutcome {
    let n = a.dim();
    let mut m = a.rows();
    let mut remaining: Vec<usize> = (0..n).collect();
    // (pivot index, form coefficients) in elimination order
    let mut eliminated: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut terms = Vec::new();

    loop {
        if let Some(pos) = remaining.iter().position(|&i| m[i][i].is_positive()) {
            let p = remaining.remove(pos);
            let d = m[p][p].clone();
            let mut form = vec![Rational::zero(); n];
            form[p] = Rational::one();
            for &l in &remaining {
                form[l] = &m[p][l] / &d;
            }
            for &i in &remaining {
                if m[i][p].is_zero() {
                    continue;
                }
                let factor = &m[i][p] / &d;
                for &j in &remaining {
                    let delta = &factor * &m[p][j];
                    m[i][j] -= delta;
                }
            }
            terms.push(SquareTerm::new(d, RVector::new(form.clone())));
            eliminated.push((p, form));
            continue;
        }

        let Some((local, expected)) = negative_direction(&m, &remaining, n) else {
            let cert = SosCertificate::new(n, terms).expect("pivots are positive and at most n");
            assert!(
                verify_certificate(a, &cert).unwrap_or(false),
                "congruence certificate failed to expand to Q"
            );
            return PsdOutcome::Certificate(cert);
        };

        let x = lift(local, &eliminated);
        let witness = Witness::new(a, x)
            .expect("dimensions agree")
            .expect("lifted witness has nonzero value");
        assert_eq!(
            witness.value(),
            &expected,
            "lifted witness value disagrees with the Schur remainder"
        );
        assert!(witness.value().is_negative());
        return PsdOutcome::Witness(witness);
    }
}

/// A vector supported on `remaining` on which the remainder form is
/// negative, with that value. `None` when the remainder vanishes (all
/// diagonal entries are then zero or negative, so zero).
fn negative_direction(
    m: &[Vec<Rational>],
    remaining: &[usize],
    n: usize,
) -> Option<(Vec<Rational>, Rational)> {
    if let Some(&i) = remaining.iter().find(|&&i| m[i][i].is_negative()) {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        return Some((v, m[i][i].clone()));
    }
    // all remaining diagonal entries are zero here
    for (k, &i) in remaining.iter().enumerate() {
        for &j in &remaining[k + 1..] {
            let mij = &m[i][j];
            if !mij.is_zero() {
                let mut v = vec![Rational::zero(); n];
                v[i] = Rational::one();
                v[j] = Rational::from(-mij.signum());
                let value = Rational::from(-2) * mij.abs();
                return Some((v, value));
            }
        }
    }
    None
}

/// Fills in eliminated coordinates so every emitted form vanishes, latest
/// pivot first.
fn lift(mut x: Vec<Rational>, eliminated: &[(usize, Vec<Rational>)]) -> RVector {
    for (p, form) in eliminated.iter().rev() {
        let mut v = Rational::zero();
        for (l, c) in form.iter().enumerate() {
            if l != *p && !c.is_zero() {
                v -= c * &x[l];
            }
        }
        x[*p] = v;
    }
    RVector::new(x)
}
