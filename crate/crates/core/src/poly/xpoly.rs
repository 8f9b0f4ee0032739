use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{PairIndex, XMonomial};
use super::tpoly::TPoly;
use crate::error::{Error, Result};
use crate::ring::{ParamCoeff, Params};

/// A polynomial in the `x[i,j]` with coefficients in ℚ[β, α].
///
/// Terms are kept in ascending term order; the last entry is the head term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<XMonomial, ParamCoeff>,
}

impl XPoly {
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
        Self::term(XMonomial::one(n), c)
    }

    pub fn term(m: XMonomial, c: ParamCoeff) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: XMonomial) -> Self {
        Self::term(m, ParamCoeff::one())
    }

    /// The variable `x[i,j]`; panics on an invalid index.
    pub fn x(n: usize, i: usize, j: usize) -> Self {
        Self::monomial(XMonomial::x(n, i, j).expect("valid variable index"))
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

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&XMonomial, &ParamCoeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &XMonomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &XMonomial) -> ParamCoeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn contains(&self, m: &XMonomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Largest monomial with its coefficient.
    pub fn head(&self) -> Option<(&XMonomial, &ParamCoeff)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: XMonomial, c: ParamCoeff) {
        assert_eq!(m.n(), self.n, "ambient size mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub(crate) fn remove_term(&mut self, m: &XMonomial) -> Option<ParamCoeff> {
        self.terms.remove(m)
    }

    pub(crate) fn pop_head(&mut self) -> Option<(XMonomial, ParamCoeff)> {
        self.terms.pop_last()
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &ParamCoeff, m: &XMonomial, other: &XPoly) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), c * oc);
        }
    }

    fn check_n(&self, other: &XPoly) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.n, other.n))
        }
    }

    pub fn checked_add(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &XPoly) -> Result<XPoly> {
        self.check_n(other)?;
        let mut out = XPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ParamCoeff) -> XPoly {
        let mut out = XPoly::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (m, mc) in &self.terms {
            out.add_term(m.clone(), c * mc);
        }
        out
    }

    pub fn mul_monomial(&self, m: &XMonomial) -> XPoly {
        XPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> XPoly {
        let mut acc = XPoly::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_pathless(&self) -> bool {
        self.terms.keys().all(XMonomial::is_pathless)
    }

    pub fn is_forkless(&self) -> bool {
        self.terms.keys().all(XMonomial::is_forkless)
    }

    /// Largest total degree among the terms (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(XMonomial::degree).max().unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&ParamCoeff) -> ParamCoeff) -> XPoly {
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Substitute the parameter values for the symbols β, α in every
    /// coefficient.
    pub fn apply_params(&self, params: &Params) -> XPoly {
        if params.is_generic() {
            return self.clone();
        }
        self.map_coeffs(|c| params.apply(c))
    }

    /// Algebra homomorphism sending each `x[i,j]` to `image(i, j)`.
    pub fn substitute(&self, n_out: usize, image: impl Fn(PairIndex) -> XPoly) -> XPoly {
        let images: Vec<XPoly> = PairIndex::all(self.n).map(&image).collect();
        let mut out = XPoly::zero(n_out);
        for (m, c) in &self.terms {
            let mut prod = XPoly::constant(n_out, c.clone());
            for (idx, &e) in m.dense().iter().enumerate() {
                for _ in 0..e {
                    prod = &prod * &images[idx];
                }
            }
            out = &out + &prod;
        }
        out
    }

    /// The substitution homomorphism `D: x[i,j] -> t_i`.
    pub fn d_image(&self) -> TPoly {
        let mut out = TPoly::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.n];
            for (p, k) in m.iter() {
                e[p.i - 1] += k;
            }
            out.add_term(e, c.clone());
        }
        out
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            c.write_terms(&mut out, &mut first, &m.factors());
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly(n={}; {})", self.n, self)
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.checked_add(rhs).expect("ambient size mismatch")
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.checked_sub(rhs).expect("ambient size mismatch")
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.checked_mul(rhs).expect("ambient size mismatch")
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        self.scale(&ParamCoeff::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: XPoly) -> XPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn x(i: usize, j: usize) -> XPoly {
        XPoly::x(4, i, j)
    }

    #[test]
    fn arithmetic_examples() {
        let p = &x(1, 2) * &x(2, 3);
        assert_eq!(p.num_terms(), 1);
        let (m, c) = p.head().unwrap();
        assert_eq!(*m, XMonomial::from_pairs(4, &[(1, 2, 1), (2, 3, 1)]));
        assert!(c.is_one());

        let q = &x(1, 2) + &XPoly::constant(4, ParamCoeff::beta());
        assert!((&q + &q.scale(&ParamCoeff::from_int(-1))).is_zero());

        let r = &q * &(&x(1, 2) - &XPoly::constant(4, ParamCoeff::beta()));
        let expected = &x(1, 2).pow(2) - &XPoly::constant(4, ParamCoeff::beta().pow(2));
        assert_eq!(r, expected);
    }

    #[test]
    fn mismatch_is_an_error() {
        assert_eq!(
            XPoly::one(3).checked_add(&XPoly::one(4)),
            Err(Error::AmbientMismatch(3, 4))
        );
    }

    #[test]
    fn d_image_examples() {
        let p = &(&x(1, 2) * &x(2, 3)) * &x(3, 4);
        let d = p.d_image();
        assert_eq!(d.to_string(), "t[1]*t[2]*t[3]");
        assert_eq!(XPoly::one(4).d_image(), TPoly::one(4));
    }

    #[test]
    fn canonical_rendering() {
        let n = 3;
        let g = &(&XPoly::x(n, 1, 2) * &XPoly::x(n, 2, 3))
            - &(&XPoly::x(n, 1, 3)
                * &(&(&XPoly::x(n, 1, 2) + &XPoly::x(n, 2, 3)) + &XPoly::constant(n, ParamCoeff::beta())));
        let g = &g - &XPoly::constant(n, ParamCoeff::alpha());
        assert_eq!(
            g.to_string(),
            "-x[1,2]*x[1,3] + x[1,2]*x[2,3] - x[1,3]*x[2,3] - b*x[1,3] - a"
        );
        let c = XPoly::constant(n, &ParamCoeff::beta() + &ParamCoeff::from_int(1))
            .scale(&ParamCoeff::from(crate::ring::rat(-1, 2)));
        assert_eq!(c.to_string(), "-1/2*b - 1/2");
        assert_eq!(XPoly::zero(n).to_string(), "0");
        assert_eq!(XPoly::constant(n, ParamCoeff::from(int(5))).to_string(), "5");
    }
}
