//! Floating-point and sampling oracles used to cross-check the exact path.
//!
//! Nothing here decides a classification on its own: the spectral verdict
//! abstains whenever an eigenvalue is within the zero threshold, and the
//! sampler can only ever produce an (exactly evaluated) negative witness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificates::Witness;
use crate::classify::DefinitenessClass;
use crate::error::{Error, Result};
use crate::matrix::{RVector, SymMatrix};
use crate::rational::Rational;

pub const MAX_SWEEPS: usize = 50;

/// Dense symmetric f64 matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    n: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    /// Converts each entry to the nearest double and symmetrizes with
    /// `(M + Mᵀ)/2`.
    pub fn from_exact(a: &SymMatrix) -> Self {
        let n = a.dim();
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = a.get(i, j).to_f64();
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let v = 0.5 * (data[i * n + j] + data[j * n + i]);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        FloatMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.data[i * self.n + j].powi(2);
                }
            }
        }
        s.sqrt()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below `sweep_tol`. Eigenvalues are returned in ascending order.
pub fn jacobi_eigenvalues(m: &FloatMatrix, sweep_tol: f64) -> Result<Vec<f64>> {
    if !(sweep_tol > 0.0) {
        return Err(Error::InvalidArgument(format!("sweep tolerance {sweep_tol} must be positive")));
    }
    let n = m.n;
    let mut a = m.data.clone();
    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        let off = FloatMatrix { n, data: a.clone() }.off_diagonal_norm();
        if off < sweep_tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NonConvergence { sweeps: MAX_SWEEPS });
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumVerdict {
    Class(DefinitenessClass),
    /// Some eigenvalue is too close to zero to call, or Jacobi failed.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    /// Ascending; empty when the eigensolver did not converge.
    pub eigenvalues: Vec<f64>,
    pub zero_threshold: f64,
    pub verdict: SpectrumVerdict,
}

/// `1e-9 · max(1, max |aᵢⱼ|)`.
pub fn default_zero_threshold(a: &SymMatrix) -> f64 {
    1e-9 * a.max_abs_entry().to_f64().max(1.0)
}

/// Spectral verdict: PD if every eigenvalue exceeds the threshold, ND if
/// every eigenvalue is below its negative, Indefinite if both signs clear
/// it, otherwise Unresolved.
pub fn spectrum_classify(a: &SymMatrix, zero_threshold: Option<f64>) -> Result<SpectrumReport> {
    let zero_threshold = zero_threshold.unwrap_or_else(|| default_zero_threshold(a));
    if !(zero_threshold > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "zero threshold {zero_threshold} must be positive"
        )));
    }
    let fm = FloatMatrix::from_exact(a);
    let sweep_tol = 1e-14 * fm.frobenius_norm().max(1.0);
    let Ok(eigenvalues) = jacobi_eigenvalues(&fm, sweep_tol) else {
        return Ok(SpectrumReport {
            eigenvalues: Vec::new(),
            zero_threshold,
            verdict: SpectrumVerdict::Unresolved,
        });
    };
    let any_pos = eigenvalues.iter().any(|&l| l > zero_threshold);
    let any_neg = eigenvalues.iter().any(|&l| l < -zero_threshold);
    let all_pos = eigenvalues.iter().all(|&l| l > zero_threshold);
    let all_neg = eigenvalues.iter().all(|&l| l < -zero_threshold);
    let verdict = if all_pos {
        SpectrumVerdict::Class(DefinitenessClass::PositiveDefinite)
    } else if all_neg {
        SpectrumVerdict::Class(DefinitenessClass::NegativeDefinite)
    } else if any_pos && any_neg {
        SpectrumVerdict::Class(DefinitenessClass::Indefinite)
    } else {
        SpectrumVerdict::Unresolved
    };
    Ok(SpectrumReport {
        eigenvalues,
        zero_threshold,
        verdict,
    })
}

/// Evaluates `Q` exactly at `trials` seeded random vectors with entries in
/// `{−3, …, 3}` and returns the first negative one. `None` proves nothing.
pub fn sampling_refute(a: &SymMatrix, trials: usize, seed: u64) -> Option<Witness> {
    let n = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = RVector::new((0..n).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect());
        if x.is_zero() {
            continue;
        }
        if let Ok(Some(w)) = Witness::new(a, x) {
            if w.value().is_negative() {
                return Some(w);
            }
        }
    }
    None
}

/// Elementary symmetric functions `e₁, …, eₙ` of the given values.
pub fn elementary_symmetric(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for (k, &v) in values.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            e[j] += v * e[j - 1];
        }
    }
    e.remove(0);
    e
}
