use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::PairIndex;
use crate::ring::{ParamCoeff, Params};

/// Exponent vector of a Laurent monomial `q_1^a_1 ... q_n^a_n`.
pub type QExponent = Vec<i32>;

/// Sum of the negative entries, negated.
pub fn negative_mass(a: &[i32]) -> u32 {
    a.iter().filter(|&&e| e < 0).map(|&e| (-e) as u32).sum()
}

pub(crate) fn q_factors(a: &[i32]) -> Vec<String> {
    a.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("q[{}]", i + 1)
            } else {
                format!("q[{}]^{}", i + 1, e)
            }
        })
        .collect()
}

/// A Laurent polynomial in `q_1..q_n` over ℚ[β, α].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurentPoly {
    n: usize,
    terms: BTreeMap<QExponent, ParamCoeff>,
}

impl QLaurentPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ParamCoeff::one())
    }

    pub fn constant(n: usize, c: ParamCoeff) -> Self {
        Self::term(vec![0; n], c)
    }

    pub fn term(a: QExponent, c: ParamCoeff) -> Self {
        let mut p = Self::zero(a.len());
        p.add_term(a, c);
        p
    }

    /// `q_i^e`.
    pub fn q(n: usize, i: usize, e: i32) -> Self {
        assert!(i >= 1 && i <= n, "q[{i}] out of range for n = {n}");
        let mut a = vec![0; n];
        a[i - 1] = e;
        Self::term(a, ParamCoeff::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&QExponent, &ParamCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &[i32]) -> ParamCoeff {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: QExponent, c: ParamCoeff) {
        assert_eq!(a.len(), self.n, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &ParamCoeff) -> Self {
        let mut out = Self::zero(self.n);
        for (a, k) in &self.terms {
            out.add_term(a.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn apply_params(&self, params: &Params) -> Self {
        let mut out = Self::zero(self.n);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), params.apply(c));
        }
        out
    }

    /// The linear polynomial `q_j - q_i`.
    pub fn difference(n: usize, p: PairIndex) -> Self {
        &Self::q(n, p.j, 1) - &Self::q(n, p.i, 1)
    }
}

impl fmt::Display for QLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (a, c) in self.terms.iter().rev() {
            c.write_terms(&mut out, &mut first, &q_factors(a));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for QLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurentPoly(n={}; {})", self.n, self)
    }
}

impl Add for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn add(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl Sub for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn sub(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), -c);
        }
        out
    }
}

impl Mul for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn mul(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = QLaurentPoly::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d);
            }
        }
        out
    }
}

impl Neg for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn neg(self) -> QLaurentPoly {
        self.scale(&ParamCoeff::from_int(-1))
    }
}

/// A fraction `numerator / ∏ (q_j - q_i)^m` with the denominator kept as a
/// multiset of pairs `(i, j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct QRatFrac {
    pub numerator: QLaurentPoly,
    pub denom_factors: BTreeMap<PairIndex, u32>,
}

impl QRatFrac {
    pub fn from_laurent(p: QLaurentPoly) -> Self {
        Self {
            numerator: p,
            denom_factors: BTreeMap::new(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_laurent(QLaurentPoly::zero(n))
    }

    pub fn one(n: usize) -> Self {
        Self::from_laurent(QLaurentPoly::one(n))
    }

    pub fn n(&self) -> usize {
        self.numerator.n()
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> QLaurentPoly {
        let n = self.n();
        let mut acc = QLaurentPoly::one(n);
        for (&p, &m) in &self.denom_factors {
            acc = &acc * &QLaurentPoly::difference(n, p).pow(m);
        }
        acc
    }

    /// Multiply numerator and denominator by `(q_j - q_i)^m`.
    pub fn extend(&self, p: PairIndex, m: u32) -> Self {
        let mut out = self.clone();
        out.numerator = &out.numerator * &QLaurentPoly::difference(self.n(), p).pow(m);
        *out.denom_factors.entry(p).or_insert(0) += m;
        out
    }

    /// Rewrite over the denominator `target`, which must contain ours.
    fn over(&self, target: &BTreeMap<PairIndex, u32>) -> QLaurentPoly {
        let n = self.n();
        let mut num = self.numerator.clone();
        for (&p, &m) in target {
            let have = self.denom_factors.get(&p).copied().unwrap_or(0);
            debug_assert!(have <= m);
            if m > have {
                num = &num * &QLaurentPoly::difference(n, p).pow(m - have);
            }
        }
        num
    }

    /// Sum of fractions over the least common multiple of their denominators.
    pub fn sum<'a>(n: usize, fracs: impl IntoIterator<Item = &'a QRatFrac>) -> QRatFrac {
        let fracs: Vec<&QRatFrac> = fracs.into_iter().collect();
        let mut denom: BTreeMap<PairIndex, u32> = BTreeMap::new();
        for f in &fracs {
            for (&p, &m) in &f.denom_factors {
                let e = denom.entry(p).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let mut num = QLaurentPoly::zero(n);
        for f in &fracs {
            num = &num + &f.over(&denom);
        }
        QRatFrac {
            numerator: num,
            denom_factors: denom,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

pub fn rat_is_zero(f: &QRatFrac) -> bool {
    f.is_zero()
}

/// Equality after rewriting both sides over the lcm of their denominators.
pub fn rat_eq(f: &QRatFrac, g: &QRatFrac) -> bool {
    let mut denom = f.denom_factors.clone();
    for (&p, &m) in &g.denom_factors {
        let e = denom.entry(p).or_insert(0);
        *e = (*e).max(m);
    }
    f.over(&denom) == g.over(&denom)
}

impl Add for &QRatFrac {
    type Output = QRatFrac;
    fn add(self, rhs: &QRatFrac) -> QRatFrac {
        QRatFrac::sum(self.n(), [self, rhs])
    }
}

impl Mul for &QRatFrac {
    type Output = QRatFrac;
    fn mul(self, rhs: &QRatFrac) -> QRatFrac {
        let mut denom = self.denom_factors.clone();
        for (&p, &m) in &rhs.denom_factors {
            *denom.entry(p).or_insert(0) += m;
        }
        QRatFrac {
            numerator: &self.numerator * &rhs.numerator,
            denom_factors: denom,
        }
    }
}

impl fmt::Display for QRatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_factors.is_empty() || self.numerator.is_zero() {
            return write!(f, "{}", self.numerator);
        }
        let den: Vec<String> = self
            .denom_factors
            .iter()
            .map(|(p, &m)| {
                if m == 1 {
                    format!("(q[{}]-q[{}])", p.j, p.i)
                } else {
                    format!("(q[{}]-q[{}])^{m}", p.j, p.i)
                }
            })
            .collect();
        write!(f, "({}) / {}", self.numerator, den.join("*"))
    }
}

impl fmt::Debug for QRatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFrac({self})")
    }
}
