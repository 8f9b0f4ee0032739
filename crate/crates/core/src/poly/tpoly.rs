use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::{power_factor, ParamCoeff, Params};

/// A polynomial in `t_1..t_n` over ℚ[β, α]. Images of `D` only involve
/// `t_1..t_{n-1}`; `t_n` is present so the same type serves the codomain of
/// the Laurent-series map `B`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, ParamCoeff>,
}

impl TPoly {
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
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// `t_i`, `1 <= i <= n`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "t[{i}] out of range for n = {n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, ParamCoeff::one());
        p
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &ParamCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> ParamCoeff {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: ParamCoeff) {
        assert_eq!(e.len(), self.n, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    /// Largest `i` with `t_i` appearing, 0 for constants.
    pub fn max_var(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|e| e.iter().rposition(|&k| k > 0))
            .max()
            .map(|p| p + 1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &ParamCoeff) -> TPoly {
        let mut out = TPoly::zero(self.n);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, e: u32) -> TPoly {
        let mut acc = TPoly::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn apply_params(&self, params: &Params) -> TPoly {
        if params.is_generic() {
            return self.clone();
        }
        let mut out = TPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), params.apply(c));
        }
        out
    }

    /// Algebra homomorphism sending `t_i` to `images[i-1]`.
    pub fn substitute(&self, images: &[TPoly]) -> TPoly {
        assert_eq!(images.len(), self.n);
        let n_out = images.first().map(TPoly::n).unwrap_or(self.n);
        let mut out = TPoly::zero(n_out);
        for (e, c) in &self.terms {
            let mut prod = TPoly::constant(n_out, c.clone());
            for (idx, &k) in e.iter().enumerate() {
                if k > 0 {
                    prod = &prod * &images[idx].pow(k);
                }
            }
            out = &out + &prod;
        }
        out
    }

    pub(crate) fn factors(e: &[u32]) -> Vec<String> {
        e.iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| power_factor(&format!("t[{}]", i + 1), k))
            .collect()
    }

    pub(crate) fn write_sum(&self, out: &mut String) {
        if self.is_zero() {
            out.push('0');
            return;
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            c.write_terms(out, &mut first, &Self::factors(e));
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_sum(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly(n={}; {})", self.n, self)
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        assert_eq!(self.n, rhs.n, "ambient size mismatch");
        let mut out = TPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(&ParamCoeff::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_and_arithmetic() {
        let n = 3;
        let t1 = TPoly::var(n, 1);
        let t2 = TPoly::var(n, 2);
        let b = TPoly::constant(n, ParamCoeff::beta());
        let p = &(&t1 + &b) * &(&t2 + &b);
        assert_eq!(p.to_string(), "t[1]*t[2] + b*t[1] + b*t[2] + b^2");
        assert_eq!(p.max_var(), 2);
        assert_eq!(TPoly::one(n).max_var(), 0);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_is_homomorphic() {
        let n = 2;
        let t1 = TPoly::var(n, 1);
        let t2 = TPoly::var(n, 2);
        let p = &t1.pow(2) * &t2;
        // swap the variables
        let swapped = p.substitute(&[t2.clone(), t1.clone()]);
        assert_eq!(swapped, &t2.pow(2) * &t1);
    }
}
