//! Symmetric rational matrices, rational vectors and principal index sets.
//!
//! Indices are 0-based in the API. Index sets and error messages render
//! 1-based, matching how matrix entries are usually written by hand.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A rational vector, also used for the coefficient list of a linear form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVector(Vec<Rational>);

impl RVector {
    pub fn new(components: Vec<Rational>) -> Self {
        RVector(components)
    }

    pub fn from_i64(components: &[i64]) -> Self {
        RVector(components.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        RVector(vec![Rational::zero(); n])
    }

    /// The i-th coordinate vector (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_components(self) -> Vec<Rational> {
        self.0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RVector(self.0.iter().map(|v| v * c).collect())
    }

    pub fn neg(&self) -> Self {
        RVector(self.0.iter().map(|v| -v).collect())
    }

    pub fn dot(&self, other: &RVector) -> Result<Rational> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }
}

impl Index<usize> for RVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A nonempty, strictly increasing set of 0-based indices below some `n`.
///
/// The derived ordering is lexicographic on the sorted index list, which is
/// the order principal minors are reported in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Validates 0-based indices against dimension `n`. The input may be in
    /// any order but must not contain duplicates.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidIndexSet("empty".into()));
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndexSet("duplicate index".into()));
        }
        if let Some(&last) = indices.last() {
            if last >= n {
                return Err(Error::IndexOutOfBounds { index: last + 1, n });
            }
        }
        Ok(IndexSet(indices))
    }

    /// Same as [`IndexSet::new`] but with 1-based indices.
    pub fn from_one_based(indices: &[usize], n: usize) -> Result<Self> {
        if let Some(&i) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfBounds { index: i, n });
        }
        Self::new(indices.iter().map(|i| i - 1).collect(), n)
    }

    /// `{0, 1, …, k-1}`, the index set of the k-th leading principal minor.
    pub fn leading(k: usize) -> Self {
        assert!(k > 0, "leading index set needs k >= 1");
        IndexSet((0..k).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// Every nonempty subset of `{0, …, n-1}`, lexicographically ordered.
    pub fn all_nonempty(n: usize) -> Vec<IndexSet> {
        fn extend(start: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            for i in start..n {
                prefix.push(i);
                out.push(IndexSet(prefix.clone()));
                extend(i + 1, n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::with_capacity((1usize << n.min(30)).saturating_sub(1));
        extend(0, n, &mut Vec::new(), &mut out);
        out
    }

    /// Every subset of `{0, …, n-1}` with exactly `k` elements, in
    /// lexicographic order.
    pub fn of_size(n: usize, k: usize) -> Vec<IndexSet> {
        fn extend(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if prefix.len() == k {
                out.push(IndexSet(prefix.clone()));
                return;
            }
            for i in start..n {
                if n - i < k - prefix.len() {
                    break;
                }
                prefix.push(i);
                extend(i + 1, n, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if k > 0 && k <= n {
            extend(0, n, k, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// An n×n symmetric matrix of rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    /// Validates shape and symmetry. `NotSymmetric` names the first
    /// offending upper-triangle position in row-major order.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(SymMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    /// Builds from the upper triangle `f(i, j)` for `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                entries[j * n + i] = v.clone();
                entries[i * n + j] = v;
            }
        }
        SymMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n).map(<[Rational]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn negate(&self) -> Self {
        SymMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SymMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn principal_submatrix(&self, set: &IndexSet) -> Result<Self> {
        if let Some(&i) = set.indices().iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfBounds { index: i + 1, n: self.n });
        }
        let idx = set.indices();
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        Ok(SymMatrix { n: k, entries })
    }

    /// `Q(x) = x A xᵀ`, evaluated exactly.
    pub fn evaluate_form(&self, x: &RVector) -> Result<Rational> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        let mut total = Rational::zero();
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            let mut row_sum = Rational::zero();
            for j in 0..self.n {
                if !x[j].is_zero() {
                    row_sum += self.get(i, j) * &x[j];
                }
            }
            total += row_sum * &x[i];
        }
        Ok(total)
    }

    /// Largest absolute entry.
    pub fn max_abs_entry(&self) -> Rational {
        self.entries
            .iter()
            .map(Rational::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for SymMatrix {
    /// Row-major, entries separated by spaces and rows by `; `, which is
    /// accepted back by the matrix parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}
