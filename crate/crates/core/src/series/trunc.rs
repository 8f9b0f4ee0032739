use std::collections::BTreeMap;
use std::fmt;

use super::laurent::{negative_mass, q_factors, QExponent};
use crate::poly::TPoly;
use crate::ring::ParamCoeff;

/// A Laurent series in the `q_i` keeping only exponents of negative mass at
/// most `w`.
#[derive(Clone, PartialEq, Eq)]
pub struct QTruncSeries {
    n: usize,
    w: u32,
    terms: BTreeMap<QExponent, ParamCoeff>,
}

impl QTruncSeries {
    pub fn zero(n: usize, w: u32) -> Self {
        Self {
            n,
            w,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, w: u32) -> Self {
        let mut s = Self::zero(n, w);
        s.add_term(vec![0; n], ParamCoeff::one());
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.w
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

    /// Add a term; terms beyond the truncation order are dropped.
    pub fn add_term(&mut self, a: QExponent, c: ParamCoeff) {
        assert_eq!(a.len(), self.n, "exponent vector length");
        if c.is_zero() || negative_mass(&a) > self.w {
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

    /// Truncated product. Exact on the retained range as long as negative
    /// mass is additive, which holds when the two supports never have
    /// exponents of opposite signs at the same index.
    pub fn mul(&self, other: &QTruncSeries) -> QTruncSeries {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        let mut out = QTruncSeries::zero(self.n, self.w.min(other.w));
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: QExponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d);
            }
        }
        out
    }

    /// Nonnegative exponents on `subset`, nonpositive elsewhere.
    pub fn is_adequate(&self, subset: &[usize]) -> bool {
        self.terms.keys().all(|a| {
            a.iter()
                .enumerate()
                .all(|(idx, &e)| if subset.contains(&(idx + 1)) { e >= 0 } else { e <= 0 })
        })
    }
}

impl fmt::Display for QTruncSeries {
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

impl fmt::Debug for QTruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTruncSeries(n={}, W={}; {})", self.n, self.w, self)
    }
}

/// A power series in `w` truncated after `w^W`, with coefficients that are
/// polynomials in the `t_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct TWSeries {
    n: usize,
    coeffs: Vec<TPoly>,
}

impl TWSeries {
    pub fn zero(n: usize, w: u32) -> Self {
        Self {
            n,
            coeffs: vec![TPoly::zero(n); w as usize + 1],
        }
    }

    pub fn one(n: usize, w: u32) -> Self {
        Self::constant(TPoly::one(n), w)
    }

    /// `p * w^0`.
    pub fn constant(p: TPoly, w: u32) -> Self {
        let mut s = Self::zero(p.n(), w);
        s.coeffs[0] = p;
        s
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<TPoly>) -> Self {
        assert!(!coeffs.is_empty(), "at least the w^0 coefficient is needed");
        assert!(coeffs.iter().all(|c| c.n() == n), "ambient size mismatch");
        Self { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Coefficient of `w^d`.
    pub fn coeff(&self, d: u32) -> &TPoly {
        &self.coeffs[d as usize]
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_zero)
    }

    pub(crate) fn coeff_mut(&mut self, d: u32) -> &mut TPoly {
        &mut self.coeffs[d as usize]
    }

    pub fn add(&self, other: &TWSeries) -> TWSeries {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        let w = self.order().min(other.order()) as usize;
        let coeffs = (0..=w).map(|d| &self.coeffs[d] + &other.coeffs[d]).collect();
        TWSeries { n: self.n, coeffs }
    }

    pub fn mul(&self, other: &TWSeries) -> TWSeries {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        let w = self.order().min(other.order()) as usize;
        let mut coeffs = vec![TPoly::zero(self.n); w + 1];
        for (d1, c1) in self.coeffs.iter().enumerate().take(w + 1) {
            if c1.is_zero() {
                continue;
            }
            for (d2, c2) in other.coeffs.iter().enumerate().take(w + 1 - d1) {
                if !c2.is_zero() {
                    coeffs[d1 + d2] = &coeffs[d1 + d2] + &(c1 * c2);
                }
            }
        }
        TWSeries { n: self.n, coeffs }
    }

    pub fn pow(&self, e: u32) -> TWSeries {
        let mut acc = TWSeries::one(self.n, self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &ParamCoeff) -> TWSeries {
        TWSeries {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Drop every coefficient past `w^order`.
    pub fn truncate(&self, order: u32) -> TWSeries {
        let keep = (order as usize + 1).min(self.coeffs.len());
        TWSeries {
            n: self.n,
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }
}

impl fmt::Display for TWSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => format!("({c})"),
                1 => format!("({c})*w"),
                _ => format!("({c})*w^{d}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for TWSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TWSeries(n={}, W={}; {})", self.n, self.order(), self)
    }
}
