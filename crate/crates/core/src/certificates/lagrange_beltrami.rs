//! `Q(x) = Σ (Δᵢ/Δᵢ₋₁) yᵢ²` with a unit-triangular substitution `y = Tx`,
//! built by symmetric Gaussian elimination without pivoting. The i-th pivot
//! of that elimination is exactly `Δᵢ/Δᵢ₋₁`, so the construction succeeds
//! precisely when `Δ₁ ⋯ Δₙ₋₁ ≠ 0`.

use crate::error::{Error, Result};
use crate::matrix::{RVector, SymMatrix};
use crate::rational::Rational;

use super::{squares_identity_holds, SosCertificate, SquareTerm, TriangularSubstitution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LbDecomposition {
    pub substitution: TriangularSubstitution,
    /// `weights[i] = Δᵢ₊₁/Δᵢ` (0-based).
    pub weights: Vec<Rational>,
}

impl LbDecomposition {
    /// The decomposition as weighted squares of linear forms in x.
    pub fn terms(&self) -> Vec<SquareTerm> {
        self.weights
            .iter()
            .zip(self.substitution.rows())
            .map(|(w, row)| SquareTerm::new(w.clone(), row.clone()))
            .collect()
    }

    /// Expands `Σ wᵢ yᵢ²` through the substitution and compares with `Q`.
    pub fn identity_holds(&self, a: &SymMatrix) -> bool {
        squares_identity_holds(a, &Rational::one(), &self.terms())
    }

    /// A certificate when every weight is nonnegative; zero-weight squares
    /// are dropped.
    pub fn certificate(&self) -> Option<SosCertificate> {
        if self.weights.iter().any(Rational::is_negative) {
            return None;
        }
        let n = self.substitution.dim();
        let terms = self.terms().into_iter().filter(|t| !t.weight.is_zero()).collect();
        SosCertificate::new(n, terms).ok()
    }
}

pub fn lb_decompose(a: &SymMatrix) -> Result<LbDecomposition> {
    let n = a.dim();
    let mut m = a.rows();
    let mut rows = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let pivot = m[i][i].clone();
        let mut row = vec![Rational::zero(); n];
        row[i] = Rational::one();
        if pivot.is_zero() {
            if i + 1 < n {
                return Err(Error::DegeneratePivot { k: i + 1 });
            }
        } else {
            for j in i + 1..n {
                row[j] = &m[i][j] / &pivot;
            }
            for j in i + 1..n {
                if m[j][i].is_zero() {
                    continue;
                }
                let factor = &m[j][i] / &pivot;
                for k in i + 1..n {
                    let d = &factor * &m[i][k];
                    m[j][k] -= d;
                }
            }
        }
        rows.push(RVector::new(row));
        weights.push(pivot);
    }
    Ok(LbDecomposition {
        substitution: TriangularSubstitution::new(rows)?,
        weights,
    })
}
