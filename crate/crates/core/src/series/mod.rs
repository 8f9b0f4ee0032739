//! The maps `A`, `B`, `E` and the identities relating them to `D`.
//!
//! `A` sends `x[i,j]` to `-(q_i*q_j + β*q_j + α)/(q_j - q_i)` and is handled
//! exactly as a rational function. `B` and `E` land in power series in `w`
//! and are computed through a fixed `w`-order.

mod laurent;
mod trunc;

pub use laurent::{negative_mass, rat_eq, rat_is_zero, QExponent, QLaurentPoly, QRatFrac};
pub use trunc::{QTruncSeries, TWSeries};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::relation;
use crate::poly::{all_monomials, PairIndex, TPoly, XMonomial, XPoly};
use crate::rewrite::{random_coeff_pool, random_monomial, trial_rng, Triple};
use crate::ring::{ParamCoeff, Params};

/// Numerator `-(q_i*q_j + β*q_j + α)` of `A(x[i,j])`.
pub fn a_numerator(n: usize, p: PairIndex) -> QLaurentPoly {
    let qi = QLaurentPoly::q(n, p.i, 1);
    let qj = QLaurentPoly::q(n, p.j, 1);
    let num = &(&(&qi * &qj) + &qj.scale(&ParamCoeff::beta())) + &QLaurentPoly::constant(n, ParamCoeff::alpha());
    -&num
}

/// `A(p)` as a single fraction over the product of the `(q_j - q_i)`.
pub fn a_image_rat(p: &XPoly) -> QRatFrac {
    let n = p.n();
    let images: Vec<(PairIndex, QLaurentPoly)> = PairIndex::all(n).map(|v| (v, a_numerator(n, v))).collect();
    let fracs: Vec<QRatFrac> = p
        .terms()
        .map(|(m, c)| {
            let mut num = QLaurentPoly::constant(n, c.clone());
            let mut frac = QRatFrac::zero(n);
            for (v, e) in m.iter() {
                let img = &images.iter().find(|(w, _)| *w == v).expect("all variables").1;
                num = &num * &img.pow(e);
                frac.denom_factors.insert(v, e);
            }
            frac.numerator = num;
            frac
        })
        .collect();
    QRatFrac::sum(n, &fracs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AKillsJReport {
    pub n: usize,
    pub generators_checked: usize,
    pub multiples_checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Check that `A` annihilates every generator of `J` and 50 random
/// multiples `c*m*g`.
pub fn verify_a_kills_j(n: usize) -> AKillsJReport {
    verify_a_kills_j_with(n, 0, &|n, t| relation(n, t, &Params::generic()))
}

/// Same check with a caller-supplied generator family.
pub fn verify_a_kills_j_with(
    n: usize,
    seed: u64,
    generator: &(dyn Fn(usize, Triple) -> XPoly + Sync),
) -> AKillsJReport {
    let triples: Vec<Triple> = (1..=n)
        .flat_map(|i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
        .collect();
    let mut failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&t| {
            let g = generator(n, t);
            (!a_image_rat(&g).is_zero()).then(|| format!("generator {t:?}: A({g}) != 0"))
        })
        .collect();
    let multiples = if triples.is_empty() { 0 } else { 50 };
    let pool = random_coeff_pool();
    let extra: Vec<String> = (0..multiples)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = trial_rng(seed, trial as u64);
            let t = triples[rng.gen_range(0..triples.len())];
            let m = random_monomial(&mut rng, n, 2);
            let c = pool[rng.gen_range(0..pool.len())].clone();
            let p = generator(n, t).mul_monomial(&m).scale(&c);
            (!a_image_rat(&p).is_zero()).then(|| format!("multiple of {t:?}: A({p}) != 0"))
        })
        .collect();
    failures.extend(extra);
    AKillsJReport {
        n,
        generators_checked: triples.len(),
        multiples_checked: multiples,
        passed: failures.is_empty(),
        failures,
    }
}

/// Every variable `x[i,j]` of `m` has `i` in `subset` and `j` outside it.
pub fn is_s_friendly(m: &XMonomial, subset: &[usize]) -> bool {
    m.iter().all(|(p, _)| subset.contains(&p.i) && !subset.contains(&p.j))
}

/// `Σ_{k=0..w} (-q_i^{k+1} q_j^{-k} - β q_i^k q_j^{-k} - α q_i^k q_j^{-k-1})`,
/// the expansion of `A(x[i,j])` in powers of `q_i/q_j`.
pub fn a_factor_expansion(n: usize, p: PairIndex, w: u32) -> QTruncSeries {
    let mut s = QTruncSeries::zero(n, w);
    let exp = |ei: i32, ej: i32| {
        let mut a = vec![0; n];
        a[p.i - 1] = ei;
        a[p.j - 1] = ej;
        a
    };
    for k in 0..=w as i32 {
        s.add_term(exp(k + 1, -k), ParamCoeff::from_int(-1));
        s.add_term(exp(k, -k), -&ParamCoeff::beta());
        s.add_term(exp(k, -k - 1), -&ParamCoeff::alpha());
    }
    s
}

/// `A_S(m)` truncated at negative mass `w`. Requires `m` to be S-friendly,
/// which makes the truncation exact on every retained exponent.
pub fn a_s_expand(m: &XMonomial, subset: &[usize], w: u32) -> Result<QTruncSeries> {
    if !is_s_friendly(m, subset) {
        return Err(Error::NotSFriendly {
            monomial: m.to_string(),
            subset: subset.to_vec(),
        });
    }
    let n = m.n();
    let mut acc = QTruncSeries::one(n, w);
    for (p, e) in m.iter() {
        let f = a_factor_expansion(n, p, w);
        for _ in 0..e {
            acc = acc.mul(&f);
        }
    }
    Ok(acc)
}

/// `q^a -> ∏_{a_i > 0} t_i^{a_i} * w^{negative mass of a}`.
pub fn b_map(f: &QTruncSeries) -> TWSeries {
    let n = f.n();
    let mut out = TWSeries::zero(n, f.order());
    for (a, c) in f.terms() {
        let t: Vec<u32> = a.iter().map(|&e| e.max(0) as u32).collect();
        out.coeff_mut(negative_mass(a)).add_term(t, c.clone());
    }
    out
}

/// `E(t_i) = -(t_i + β + α*w) / (1 - t_i*w)` through `w^order`.
pub fn e_of_t(n: usize, i: usize, order: u32) -> TWSeries {
    let t = TPoly::var(n, i);
    let b = TPoly::constant(n, ParamCoeff::beta());
    let a = TPoly::constant(n, ParamCoeff::alpha());
    let coeffs = (0..=order)
        .map(|d| {
            // w^d coefficient: -(t^{d+1} + β t^d + α t^{d-1})
            let mut c = &t.pow(d + 1) + &(&b * &t.pow(d));
            if d >= 1 {
                c = &c + &(&a * &t.pow(d - 1));
            }
            -&c
        })
        .collect();
    TWSeries::from_coeffs(n, coeffs)
}

/// The ring homomorphism `E` applied to `p`, through `w^order`.
pub fn e_image(p: &TPoly, order: u32) -> TWSeries {
    let n = p.n();
    let gens: Vec<TWSeries> = (1..=n).map(|i| e_of_t(n, i, order)).collect();
    let mut powers: Vec<Vec<TWSeries>> = vec![vec![TWSeries::one(n, order)]; n];
    let mut out = TWSeries::zero(n, order);
    for (e, c) in p.terms() {
        let mut prod = TWSeries::one(n, order).scale(c);
        for (idx, &k) in e.iter().enumerate() {
            while powers[idx].len() <= k as usize {
                let next = powers[idx].last().expect("nonempty").mul(&gens[idx]);
                powers[idx].push(next);
            }
            if k > 0 {
                prod = prod.mul(&powers[idx][k as usize]);
            }
        }
        out = out.add(&prod);
    }
    out
}

/// Rows of `m` with positive total exponent.
pub fn pathless_subset(m: &XMonomial) -> Vec<usize> {
    m.row_sums()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b > 0)
        .map(|(i, _)| i + 1)
        .collect()
}

/// `(E∘D)(m)` and `(B∘A_S)(m)` through `w^order`, for a pathless monomial.
pub fn ed_ba_sides(m: &XMonomial, order: u32) -> Result<(TWSeries, TWSeries)> {
    if !m.is_pathless() {
        return Err(Error::NotPathless(m.to_string()));
    }
    let s = pathless_subset(m);
    let ba = b_map(&a_s_expand(m, &s, order)?);
    let ed = e_image(&XPoly::monomial(m.clone()).d_image(), order);
    Ok((ed, ba))
}

pub fn verify_ed_eq_ba(m: &XMonomial, order: u32) -> Result<bool> {
    let (ed, ba) = ed_ba_sides(m, order)?;
    Ok(ed == ba)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdBaReport {
    pub n: usize,
    pub order: u32,
    pub monomials_checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

fn ed_ba_report(n: usize, order: u32, monomials: Vec<XMonomial>) -> EdBaReport {
    let failures: Vec<String> = monomials
        .par_iter()
        .filter(|m| !verify_ed_eq_ba(m, order).expect("pathless input"))
        .map(|m| m.to_string())
        .collect();
    EdBaReport {
        n,
        order,
        monomials_checked: monomials.len(),
        passed: failures.is_empty(),
        failures,
    }
}

/// Every pathless monomial of degree at most `max_deg`.
pub fn pathless_monomials(n: usize, max_deg: u32) -> Vec<XMonomial> {
    (0..=max_deg)
        .flat_map(|d| all_monomials(n, d))
        .filter(XMonomial::is_pathless)
        .collect()
}

pub fn verify_ed_eq_ba_exhaustive(n: usize, max_deg: u32, order: u32) -> EdBaReport {
    ed_ba_report(n, order, pathless_monomials(n, max_deg))
}

/// A random monomial of degree at most `max_deg`, conditioned on being
/// pathless (rejection sampling).
pub fn random_pathless_monomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> XMonomial {
    loop {
        let m = random_monomial(rng, n, max_deg);
        if m.is_pathless() {
            return m;
        }
    }
}

pub fn verify_ed_eq_ba_random(n: usize, max_deg: u32, order: u32, samples: usize, seed: u64) -> EdBaReport {
    let monomials = (0..samples)
        .map(|k| random_pathless_monomial(&mut trial_rng(seed, k as u64), n, max_deg))
        .collect();
    ed_ba_report(n, order, monomials)
}

/// `t_i -> -t_i - β`.
pub fn g_map(p: &TPoly) -> TPoly {
    let n = p.n();
    let b = TPoly::constant(n, ParamCoeff::beta());
    let images: Vec<TPoly> = (1..=n).map(|i| -&(&TPoly::var(n, i) + &b)).collect();
    p.substitute(&images)
}

/// The constant term in `w`.
pub fn f_map(s: &TWSeries) -> TPoly {
    s.coeff(0).clone()
}

/// A random polynomial in `t_1..t_n`: up to `max_terms` terms of degree at
/// most `max_deg` with coefficients from the usual pool.
pub fn random_tpoly<R: Rng>(rng: &mut R, n: usize, max_deg: u32, max_terms: usize) -> TPoly {
    let pool = random_coeff_pool();
    let mut p = TPoly::zero(n);
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            e[rng.gen_range(0..n)] += 1;
        }
        p.add_term(e, pool[rng.gen_range(0..pool.len())].clone());
    }
    p
}

/// `G(F(E(p))) == p` on `samples` random polynomials (n = 4, degree <= 3,
/// up to 4 terms).
pub fn verify_e_left_inverse(samples: usize, seed: u64) -> bool {
    (0..samples).into_par_iter().all(|k| {
        let p = random_tpoly(&mut trial_rng(seed, k as u64), 4, 3, 4);
        g_map(&f_map(&e_image(&p, 0))) == p
    })
}

/// `q`-exponents to `r`-exponents: `q_i = r_i r_{i+1} ... r_n` makes the
/// exponent of `r_k` the prefix sum `a_1 + ... + a_k`.
pub fn q_to_r_exponent(a: &[i32]) -> Vec<i32> {
    a.iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

pub fn r_to_q_exponent(r: &[i32]) -> Vec<i32> {
    r.iter()
        .enumerate()
        .map(|(k, &x)| if k == 0 { x } else { x - r[k - 1] })
        .collect()
}
