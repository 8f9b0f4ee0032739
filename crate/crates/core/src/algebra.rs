//! Reversed variables `x[j,i] = -β - x[i,j]`, the symmetric generators
//! `J_{i,j,k}`, the action of the symmetric group, and the forkless monomial
//! basis with its degree counts.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideal_member, relation};
use crate::poly::{PairIndex, XMonomial, XPoly};
use crate::rewrite::trial_rng;
use crate::ring::{ParamCoeff, Params};

/// A bijection of `1..=n`, stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(n, images));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(n, vec![a, b]));
        }
        images.swap(a - 1, b - 1);
        Ok(Self { images })
    }

    pub fn random<R: Rng>(rng: &mut R, n: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Self { images }
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation { images: prefix.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutation size mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `x[i,j]` for `i < j`, and `-β - x[j,i]` for `i > j`.
pub fn x_general(i: usize, j: usize, n: usize) -> Result<XPoly> {
    if i == j {
        return Err(Error::RepeatedIndex { indices: vec![i, j], n });
    }
    if i < j {
        PairIndex::new(i, j, n)?;
        Ok(XPoly::x(n, i, j))
    } else {
        PairIndex::new(j, i, n)?;
        Ok(&XPoly::constant(n, -&ParamCoeff::beta()) - &XPoly::x(n, j, i))
    }
}

fn check_distinct(indices: &[usize], n: usize) -> Result<()> {
    let bad = indices.iter().any(|&v| v == 0 || v > n)
        || (0..indices.len()).any(|a| (a + 1..indices.len()).any(|b| indices[a] == indices[b]));
    if bad {
        Err(Error::RepeatedIndex {
            indices: indices.to_vec(),
            n,
        })
    } else {
        Ok(())
    }
}

/// `J_{i,j,k} = x[i,j]x[j,k] + x[j,k]x[k,i] + x[k,i]x[i,j]
/// + β(x[i,j] + x[j,k] + x[k,i]) + β² - α`, expanded with [`x_general`].
pub fn j_generator(i: usize, j: usize, k: usize, n: usize) -> Result<XPoly> {
    check_distinct(&[i, j, k], n)?;
    let a = x_general(i, j, n)?;
    let b = x_general(j, k, n)?;
    let c = x_general(k, i, n)?;
    let beta = XPoly::constant(n, ParamCoeff::beta());
    let quad = &(&(&a * &b) + &(&b * &c)) + &(&c * &a);
    let lin = &beta * &(&(&a + &b) + &c);
    let konst = XPoly::constant(n, &ParamCoeff::beta().pow(2) - &ParamCoeff::alpha());
    Ok(&(&quad + &lin) + &konst)
}

/// The automorphism `x[i,j] -> x[σ(i),σ(j)]`.
pub fn apply_perm(sigma: &Permutation, p: &XPoly) -> XPoly {
    let n = p.n();
    assert_eq!(sigma.n(), n, "permutation size mismatch");
    p.substitute(n, |v| {
        x_general(sigma.apply(v.i), sigma.apply(v.j), n).expect("σ is a bijection")
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub n: usize,
    /// `J_{i,j,k}` equals the defining relation for `i < j < k`.
    pub matches_relation: bool,
    /// `J_{i,j,k}` is unchanged by reordering its indices.
    pub order_invariant: bool,
    /// `σ·J_{i,j,k} = J_{σ(i),σ(j),σ(k)}`.
    pub equivariant: bool,
    /// `σ` maps every relation into `J`.
    pub ideal_stable: bool,
    pub permutations_checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// The symmetry checks with the standard `J_{i,j,k}`; all permutations for
/// `n <= 4`, otherwise 10 random ones.
pub fn verify_symmetry(n: usize) -> SymmetryReport {
    verify_symmetry_with(n, 0, &|i, j, k, n| j_generator(i, j, k, n).expect("distinct indices"))
}

/// The symmetry checks against a caller-supplied `J_{i,j,k}`.
pub fn verify_symmetry_with(n: usize, seed: u64, j: &dyn Fn(usize, usize, usize, usize) -> XPoly) -> SymmetryReport {
    let perms: Vec<Permutation> = if n <= 4 {
        Permutation::all(n)
    } else {
        let mut rng = trial_rng(seed, 0);
        (0..10).map(|_| Permutation::random(&mut rng, n)).collect()
    };
    let mut failures = Vec::new();
    let (mut matches_relation, mut order_invariant, mut equivariant, mut ideal_stable) = (true, true, true, true);
    let generic = Params::generic();
    for i in 1..=n {
        for jj in i + 1..=n {
            for k in jj + 1..=n {
                let base = j(i, jj, k, n);
                if base != relation(n, (i, jj, k), &generic) {
                    matches_relation = false;
                    failures.push(format!("J_{{{i},{jj},{k}}} differs from the relation"));
                }
                for [a, b, c] in [[i, jj, k], [i, k, jj], [jj, i, k], [jj, k, i], [k, i, jj], [k, jj, i]] {
                    if j(a, b, c, n) != base {
                        order_invariant = false;
                        failures.push(format!("J_{{{a},{b},{c}}} != J_{{{i},{jj},{k}}}"));
                    }
                }
                for s in &perms {
                    let lhs = apply_perm(s, &base);
                    if lhs != j(s.apply(i), s.apply(jj), s.apply(k), n) {
                        equivariant = false;
                        failures.push(format!("σ = {s} does not map J_{{{i},{jj},{k}}} correctly"));
                    }
                    if !ideal_member(&apply_perm(s, &relation(n, (i, jj, k), &generic))) {
                        ideal_stable = false;
                        failures.push(format!("σ = {s} moves relation ({i},{jj},{k}) out of J"));
                    }
                }
            }
        }
    }
    SymmetryReport {
        n,
        matches_relation,
        order_invariant,
        equivariant,
        ideal_stable,
        permutations_checked: perms.len(),
        passed: failures.is_empty(),
        failures,
    }
}

/// Every forkless monomial of total degree `degree`, in descending term
/// order. A forkless monomial picks for each row `i` at most one column
/// `j > i` and a positive exponent.
pub fn enumerate_forkless(n: usize, degree: u32) -> Vec<XMonomial> {
    fn rec(n: usize, row: usize, left: u32, picks: &mut Vec<(usize, usize, u32)>, out: &mut Vec<XMonomial>) {
        if left == 0 {
            out.push(XMonomial::from_pairs(n, picks));
            return;
        }
        if row >= n {
            return;
        }
        rec(n, row + 1, left, picks, out);
        for j in row + 1..=n {
            for e in 1..=left {
                picks.push((row, j, e));
                rec(n, row + 1, left - e, picks, out);
                picks.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 1, degree, &mut Vec::new(), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Counts `f_{n,0}, f_{n,1}, ...` of monomials per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub n: usize,
    pub counts: Vec<u128>,
}

impl CountTable {
    /// `degree,count` lines without a header.
    pub fn to_csv(&self) -> String {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, c)| format!("{d},{c}\n"))
            .collect()
    }

    pub fn from_csv(n: usize, text: &str) -> Result<Self> {
        let mut counts = Vec::new();
        for (lineno, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let bad = || Error::Parse {
                pos: lineno + 1,
                message: format!("expected 'degree,count' on line {}", lineno + 1),
            };
            let (d, c) = line.trim().split_once(',').ok_or_else(bad)?;
            let d: usize = d.trim().parse().map_err(|_| bad())?;
            if d != counts.len() {
                return Err(bad());
            }
            counts.push(c.trim().parse().map_err(|_| bad())?);
        }
        Ok(Self { n, counts })
    }
}

pub fn count_forkless(n: usize, max_degree: u32) -> CountTable {
    CountTable {
        n,
        counts: (0..=max_degree)
            .map(|d| enumerate_forkless(n, d).len() as u128)
            .collect(),
    }
}

/// Coefficients of `∏_{j=0}^{n-2} (1 + j t) / (1 - t)^{n-1}` through
/// `t^max_degree`.
pub fn gf_coeffs(n: usize, max_degree: u32) -> Result<CountTable> {
    let len = max_degree as usize + 1;
    if n == 0 {
        return Err(Error::Index("n must be at least 1".into()));
    }
    // numerator ∏ (1 + j t), exact
    let mut num = vec![BigUint::from(1u32)];
    for j in 0..n.saturating_sub(1) {
        let mut next = vec![BigUint::from(0u32); num.len() + 1];
        for (k, c) in num.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * BigUint::from(j);
        }
        num = next;
    }
    // 1/(1-t)^{n-1} = Σ C(k+n-2, n-2) t^k; for n = 1 this is just 1
    let denom = |k: usize| -> BigUint {
        if n == 1 {
            BigUint::from(u32::from(k == 0))
        } else {
            binomial(BigUint::from(k + n - 2), BigUint::from(n - 2))
        }
    };
    let mut counts = Vec::with_capacity(len);
    for d in 0..len {
        let mut acc = BigUint::from(0u32);
        for (k, c) in num.iter().enumerate().take(d + 1) {
            acc += c * denom(d - k);
        }
        counts.push(acc.to_u128().ok_or_else(|| Error::Overflow(acc.to_string()))?);
    }
    Ok(CountTable { n, counts })
}
