//! Exact coefficients: the rationals and the universal coefficient ring ℚ[β, α].
//!
//! Every identity in this crate is checked with β and α kept as formal
//! indeterminates. [`Params`] carries the values substituted for them when a
//! computation needs the defining relation; the generic choice is the pair of
//! symbols themselves, and a numeric choice recovers any rational instance.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exponent pair `(deg_β, deg_α)` of a coefficient term.
pub type ParamExp = (u32, u32);

/// An element of ℚ[β, α]. Zero terms are never stored, so structural equality
/// is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamCoeff {
    terms: BTreeMap<ParamExp, Rational>,
}

impl ParamCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn beta() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn alpha() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(int(v))
    }

    /// `c · β^deg_beta · α^deg_alpha`.
    pub fn monomial(c: Rational, deg_beta: u32, deg_alpha: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_beta, deg_alpha), c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (ParamExp, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Terms in ascending `(deg_β, deg_α)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ParamExp, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_beta: u32, deg_alpha: u32) -> Rational {
        self.terms
            .get(&(deg_beta, deg_alpha))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The constant term, if the coefficient has no β or α dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: ParamExp, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at `β = beta0`, `α = alpha0`.
    pub fn specialize(&self, beta0: &Rational, alpha0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(db, da), c) in &self.terms {
            acc += c * num_traits::pow(beta0.clone(), db as usize) * num_traits::pow(alpha0.clone(), da as usize);
        }
        acc
    }

    /// Substitute arbitrary coefficients for β and α.
    pub fn substitute(&self, beta: &ParamCoeff, alpha: &ParamCoeff) -> ParamCoeff {
        let mut acc = ParamCoeff::zero();
        for (&(db, da), c) in &self.terms {
            acc += &(&beta.pow(db) * &alpha.pow(da)).scale(c);
        }
        acc
    }

    /// Append the terms of `self` (descending order) to a signed sum, each
    /// term multiplied by the trailing `factors`.
    pub(crate) fn write_terms(&self, out: &mut String, first: &mut bool, factors: &[String]) {
        for (&(db, da), c) in self.terms.iter().rev() {
            let mut all = Vec::with_capacity(factors.len() + 2);
            if db > 0 {
                all.push(power_factor("b", db));
            }
            if da > 0 {
                all.push(power_factor("a", da));
            }
            all.extend(factors.iter().cloned());
            write_signed_term(out, first, c, &all);
        }
    }
}

pub(crate) fn power_factor(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

/// Append `± |c|*f1*f2...` to a sum being rendered. A unit coefficient is
/// omitted when at least one factor is present.
pub(crate) fn write_signed_term(out: &mut String, first: &mut bool, c: &Rational, factors: &[String]) {
    let neg = c.is_negative();
    if *first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    *first = false;
    let abs = c.abs();
    let mut parts: Vec<String> = Vec::with_capacity(factors.len() + 1);
    if !abs.is_one() || factors.is_empty() {
        parts.push(abs.to_string());
    }
    parts.extend(factors.iter().cloned());
    out.push_str(&parts.join("*"));
}

impl fmt::Display for ParamCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        self.write_terms(&mut out, &mut first, &[]);
        f.write_str(&out)
    }
}

impl fmt::Debug for ParamCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for ParamCoeff {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for ParamCoeff {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl AddAssign<&ParamCoeff> for ParamCoeff {
    fn add_assign(&mut self, rhs: &ParamCoeff) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&ParamCoeff> for ParamCoeff {
    fn sub_assign(&mut self, rhs: &ParamCoeff) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &ParamCoeff {
    type Output = ParamCoeff;
    fn add(self, rhs: &ParamCoeff) -> ParamCoeff {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ParamCoeff {
    type Output = ParamCoeff;
    fn sub(self, rhs: &ParamCoeff) -> ParamCoeff {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &ParamCoeff {
    type Output = ParamCoeff;
    fn mul(self, rhs: &ParamCoeff) -> ParamCoeff {
        let mut out = ParamCoeff::zero();
        for (&(b1, a1), c1) in &self.terms {
            for (&(b2, a2), c2) in &rhs.terms {
                out.add_term((b1 + b2, a1 + a2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ParamCoeff {
    type Output = ParamCoeff;
    fn neg(self) -> ParamCoeff {
        ParamCoeff {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ParamCoeff {
            type Output = ParamCoeff;
            fn $m(self, rhs: ParamCoeff) -> ParamCoeff { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ParamCoeff {
    type Output = ParamCoeff;
    fn neg(self) -> ParamCoeff {
        -&self
    }
}

/// Values substituted for β and α wherever the defining relation is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub beta: ParamCoeff,
    pub alpha: ParamCoeff,
}

impl Params {
    /// β and α stay symbolic.
    pub fn generic() -> Self {
        Self {
            beta: ParamCoeff::beta(),
            alpha: ParamCoeff::alpha(),
        }
    }

    pub fn specialized(beta0: Rational, alpha0: Rational) -> Self {
        Self {
            beta: ParamCoeff::constant(beta0),
            alpha: ParamCoeff::constant(alpha0),
        }
    }

    /// Rewrite a coefficient written in the symbols β, α in terms of these
    /// parameter values. The identity for [`Params::generic`].
    pub fn apply(&self, c: &ParamCoeff) -> ParamCoeff {
        c.substitute(&self.beta, &self.alpha)
    }

    pub fn is_generic(&self) -> bool {
        *self == Self::generic()
    }
}

impl Default for Params {
    fn default() -> Self {
        Self::generic()
    }
}

/// Serialized form of a rational for reports: `"p/q"` or `"p"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalText(pub String);

impl From<&Rational> for RationalText {
    fn from(r: &Rational) -> Self {
        RationalText(r.to_string())
    }
}

/// Parse `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (body, "1"),
    };
    if num.is_empty()
        || den.is_empty()
        || !num.bytes().all(|b| b.is_ascii_digit())
        || !den.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    let r = Rational::new(num, den);
    Some(if neg { -r } else { r })
}
