use crate::error::{Error, Result};
use crate::matrix::RVector;
use crate::rational::Rational;

/// `yᵢ = xᵢ + Σ_{j>i} bᵢⱼ xⱼ`: unit diagonal, zeros left of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSubstitution {
    rows: Vec<RVector>,
}

impl TriangularSubstitution {
    pub fn new(rows: Vec<RVector>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if !row[i].is_one() {
                return Err(Error::InvalidSubstitution(format!(
                    "coefficient of x{} in y{} is {}, expected 1",
                    i + 1,
                    i + 1,
                    row[i]
                )));
            }
            if let Some(j) = (0..i).find(|&j| !row[j].is_zero()) {
                return Err(Error::InvalidSubstitution(format!(
                    "y{} depends on earlier variable x{}",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(TriangularSubstitution { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Coefficient list of `yᵢ` in terms of x.
    pub fn row(&self, i: usize) -> &RVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[RVector] {
        &self.rows
    }

    /// `bᵢⱼ` for `j > i` (and 1 on the diagonal, 0 below).
    pub fn coefficient(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// Computes y from x.
    pub fn apply(&self, x: &RVector) -> Result<RVector> {
        self.rows.iter().map(|r| r.dot(x)).collect::<Result<Vec<_>>>().map(RVector::new)
    }

    /// Inverts the substitution by back-substitution from the last row.
    pub fn solve(&self, y: &RVector) -> Result<RVector> {
        let n = self.dim();
        if y.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: y.len(),
            });
        }
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut v = y[i].clone();
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                v -= &self.rows[i][j] * xj;
            }
            x[i] = v;
        }
        Ok(RVector::new(x))
    }
}
