//! Exact determinants and principal minors.
//!
//! Determinants use fraction-free Bareiss elimination: each row is first
//! scaled to integers by the lcm of its denominators, so all intermediate
//! values are integers whose size is bounded by a minor of the scaled matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::{IndexSet, SymMatrix};
use crate::rational::Rational;

/// Exact determinant of a symmetric matrix.
pub fn det(a: &SymMatrix) -> Rational {
    let rows: Vec<&[Rational]> = (0..a.dim()).map(|i| a.row(i)).collect();
    det_rows(&rows)
}

/// Exact determinant of an arbitrary square matrix given by rows.
pub(crate) fn det_rows(rows: &[&[Rational]]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        debug_assert_eq!(row.len(), n);
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        m.push(
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    let d = bareiss(&mut m);
    Rational::new(d, scale)
}

/// Determinant of an integer matrix, destroying it in the process.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's determinant identity
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `[Δ₀, Δ₁, …, Δₙ]` with `Δ₀ = 1` and `Δₖ` the determinant of the top-left
/// k×k block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingMinorSequence {
    values: Vec<Rational>,
}

impl LeadingMinorSequence {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `Δₖ` for `0 <= k <= n`.
    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    /// The matrix dimension n.
    pub fn dim(&self) -> usize {
        self.values.len() - 1
    }

    /// `Δ₁, …, Δₙ` all strictly positive.
    pub fn all_positive(&self) -> bool {
        self.values[1..].iter().all(Rational::is_positive)
    }

    /// First k in `1..n` with `Δₖ = 0`, ignoring `Δₙ`.
    pub fn first_vanishing_below_n(&self) -> Option<usize> {
        let n = self.dim();
        (1..n).find(|&k| self.values[k].is_zero())
    }
}

pub fn leading_minors(a: &SymMatrix) -> LeadingMinorSequence {
    let n = a.dim();
    let mut values = Vec::with_capacity(n + 1);
    values.push(Rational::one());
    for k in 1..=n {
        let rows: Vec<&[Rational]> = (0..k).map(|i| &a.row(i)[..k]).collect();
        values.push(det_rows(&rows));
    }
    LeadingMinorSequence { values }
}

/// Every principal minor of a matrix, keyed by index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalMinorTable {
    n: usize,
    minors: BTreeMap<IndexSet, Rational>,
}

impl PrincipalMinorTable {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, set: &IndexSet) -> Option<&Rational> {
        self.minors.get(set)
    }

    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    /// Entries in lexicographic order of their sorted index lists.
    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, &Rational)> {
        self.minors.iter()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.minors.values().all(|v| !v.is_negative())
    }
}

pub fn principal_minor(a: &SymMatrix, set: &IndexSet) -> Rational {
    let rows: Vec<Vec<Rational>> = set
        .indices()
        .iter()
        .map(|&i| set.indices().iter().map(|&j| a.get(i, j).clone()).collect())
        .collect();
    let refs: Vec<&[Rational]> = rows.iter().map(Vec::as_slice).collect();
    det_rows(&refs)
}

/// All `2ⁿ − 1` principal minors, each computed independently.
pub fn all_principal_minors(a: &SymMatrix) -> PrincipalMinorTable {
    let minors = IndexSet::all_nonempty(a.dim())
        .into_iter()
        .map(|s| {
            let v = principal_minor(a, &s);
            (s, v)
        })
        .collect();
    PrincipalMinorTable { n: a.dim(), minors }
}

/// `[c₁, …, cₙ]` where `cₖ` is the sum of all k×k principal minors. These
/// are the elementary symmetric functions of the eigenvalues.
pub fn char_poly_sums(a: &SymMatrix) -> Vec<Rational> {
    let table = all_principal_minors(a);
    let mut sums = vec![Rational::zero(); a.dim()];
    for (set, v) in table.iter() {
        sums[set.len() - 1] += v;
    }
    sums
}
