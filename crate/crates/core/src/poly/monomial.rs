use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Index pair `(i, j)` of the variable `x[i,j]`, with `1 <= i < j <= n`.
///
/// The derived order is row-major, which is the variable order
/// `x[1,2] > x[1,3] > ... > x[n-1,n]` read from the largest variable down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i >= 1 && i < j && j <= n {
            Ok(Self { i, j })
        } else {
            Err(Error::Index(format!("x[{i},{j}] needs 1 <= i < j <= {n}")))
        }
    }

    /// Position of this variable in the dense row-major exponent vector.
    pub fn offset(self, n: usize) -> usize {
        (self.i - 1) * n - (self.i - 1) * self.i / 2 + (self.j - self.i - 1)
    }

    pub fn all(n: usize) -> impl Iterator<Item = PairIndex> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| PairIndex { i, j }))
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.i, self.j)
    }
}

pub fn num_vars(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A monomial in the variables `x[i,j]`, `1 <= i < j <= n`.
///
/// Exponents are kept densely in row-major variable order, so the derived
/// lexicographic comparison of exponent vectors is exactly the inverse
/// lexicographic term order determined by `x[1,2] > x[1,3] > ... > x[n-1,n]`:
/// two monomials compare at the largest variable where their exponents differ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XMonomial {
    n: usize,
    exps: Vec<u32>,
}

impl XMonomial {
    pub fn one(n: usize) -> Self {
        Self {
            n,
            exps: vec![0; num_vars(n)],
        }
    }

    pub fn var(n: usize, p: PairIndex) -> Self {
        let mut m = Self::one(n);
        m.exps[p.offset(n)] = 1;
        m
    }

    /// `x[i,j]`, checking the index invariant.
    pub fn x(n: usize, i: usize, j: usize) -> Result<Self> {
        Ok(Self::var(n, PairIndex::new(i, j, n)?))
    }

    pub fn from_exponents<I: IntoIterator<Item = (PairIndex, u32)>>(n: usize, iter: I) -> Result<Self> {
        let mut m = Self::one(n);
        for (p, e) in iter {
            PairIndex::new(p.i, p.j, n)?;
            m.exps[p.offset(n)] += e;
        }
        Ok(m)
    }

    /// Build from `(i, j, exponent)` triples; panics on an invalid index.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, u32)]) -> Self {
        Self::from_exponents(n, pairs.iter().map(|&(i, j, e)| (PairIndex { i, j }, e))).expect("valid variable indices")
    }

    pub(crate) fn from_dense(n: usize, exps: Vec<u32>) -> Self {
        debug_assert_eq!(exps.len(), num_vars(n));
        Self { n, exps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dense(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, p: PairIndex) -> u32 {
        self.exps[p.offset(self.n)]
    }

    pub fn exp_ij(&self, i: usize, j: usize) -> u32 {
        self.exp(PairIndex { i, j })
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Variables with positive exponent, in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (PairIndex, u32)> + '_ {
        PairIndex::all(self.n)
            .zip(self.exps.iter())
            .filter(|(_, &e)| e > 0)
            .map(|(p, &e)| (p, e))
    }

    pub fn mul(&self, other: &XMonomial) -> XMonomial {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        XMonomial {
            n: self.n,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &XMonomial) -> bool {
        self.n == other.n && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &XMonomial) -> Option<XMonomial> {
        if !self.divides(other) {
            return None;
        }
        Some(XMonomial {
            n: self.n,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &XMonomial) -> XMonomial {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        XMonomial {
            n: self.n,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_disjoint(&self, other: &XMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Term-order comparison, rejecting monomials of different ambient size.
    pub fn order_cmp(&self, other: &XMonomial) -> Result<Ordering> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(self.exps.cmp(&other.exps))
    }

    /// All `(i, j, k)` with `i < j < k` and `x[i,j]*x[j,k]` dividing this
    /// monomial, in lexicographic order.
    pub fn path_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.exp_ij(i, j) == 0 {
                    continue;
                }
                for k in j + 1..=n {
                    if self.exp_ij(j, k) > 0 {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// All `(i, j, k)` with `i < j < k` and `x[i,j]*x[i,k]` dividing this
    /// monomial, in lexicographic order.
    pub fn fork_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.exp_ij(i, j) == 0 {
                    continue;
                }
                for k in j + 1..=n {
                    if self.exp_ij(i, k) > 0 {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_pathless(&self) -> bool {
        let n = self.n;
        // x[i,j] and x[j,k] both present means column j and row j are both hit.
        (2..n).all(|j| {
            let into = (1..j).any(|i| self.exp_ij(i, j) > 0);
            let out = (j + 1..=n).any(|k| self.exp_ij(j, k) > 0);
            !(into && out)
        })
    }

    /// At most one variable per row.
    pub fn is_forkless(&self) -> bool {
        let n = self.n;
        (1..n).all(|i| (i + 1..=n).filter(|&j| self.exp_ij(i, j) > 0).count() <= 1)
    }

    /// `Σ a[i,j] (n - j + i)`; strictly decreases under every pathless
    /// rewrite step.
    pub fn weight_pathless(&self) -> u64 {
        self.iter().map(|(p, e)| e as u64 * (self.n - p.j + p.i) as u64).sum()
    }

    /// `Σ a[i,j] (j - i)`.
    pub fn weight_alt(&self) -> u64 {
        self.iter().map(|(p, e)| e as u64 * (p.j - p.i) as u64).sum()
    }

    /// Row sums `b_i = Σ_j a[i,j]` for `i = 1..n-1` (index 0 is row 1).
    pub fn row_sums(&self) -> Vec<u32> {
        (1..self.n)
            .map(|i| (i + 1..=self.n).map(|j| self.exp_ij(i, j)).sum())
            .collect()
    }
}

impl PartialOrd for XMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

impl fmt::Debug for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl XMonomial {
    pub(crate) fn factors(&self) -> Vec<String> {
        self.iter()
            .map(|(p, e)| crate::ring::power_factor(&p.to_string(), e))
            .collect()
    }
}
