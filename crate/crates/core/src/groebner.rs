//! The explicit Gröbner basis of `J`, reduction modulo it, and ideal
//! membership.
//!
//! For `i < j < k` the basis element is
//! `g = x[i,k]*x[i,j] - x[i,j]*x[j,k] + x[i,k]*x[j,k] + β*x[i,k] + α`,
//! minus the defining relation. Its head term is `x[i,k]*x[i,j]`, so the
//! `G`-reduced monomials are exactly the forkless ones.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{XMonomial, XPoly};
use crate::rewrite::Triple;
use crate::ring::{ParamCoeff, Params};

/// Hard cap on reduction steps in a single normal-form computation. Hitting it
/// means the basis is not a valid rewriting system.
pub const MAX_REDUCTION_STEPS: usize = 50_000_000;

/// The defining relation `x[i,j]*x[j,k] - x[i,k]*(x[i,j] + x[j,k] + β) - α`.
pub fn relation(n: usize, (i, j, k): Triple, params: &Params) -> XPoly {
    let xij = XPoly::x(n, i, j);
    let xjk = XPoly::x(n, j, k);
    let xik = XPoly::x(n, i, k);
    let inner = &(&xij + &xjk) + &XPoly::constant(n, params.beta.clone());
    &(&(&xij * &xjk) - &(&xik * &inner)) - &XPoly::constant(n, params.alpha.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBasisElement {
    pub triple: Triple,
    pub poly: XPoly,
}

impl GBasisElement {
    pub fn new(n: usize, triple: Triple, params: &Params) -> Self {
        Self {
            triple,
            poly: -&relation(n, triple, params),
        }
    }

    pub fn head(&self) -> &XMonomial {
        self.poly.head().expect("basis elements are nonzero").0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBasis {
    n: usize,
    elements: Vec<GBasisElement>,
    /// Everything but the head term, negated: `t = s*HT(g)` rewrites to `s*tails[g]`.
    tails: Vec<XPoly>,
}

/// The basis for generic β, α.
pub fn generate_basis(n: usize) -> GBasis {
    generate_basis_with(n, &Params::generic())
}

/// The basis with β, α replaced by the given parameters.
pub fn generate_basis_with(n: usize, params: &Params) -> GBasis {
    let mut elements = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                elements.push(GBasisElement::new(n, (i, j, k), params));
            }
        }
    }
    GBasis::from_elements(n, elements).expect("the standard family is monic")
}

impl GBasis {
    /// Build a reduction system from arbitrary monic elements (used to check
    /// that a perturbed family fails the Buchberger criterion). Elements are
    /// sorted by triple.
    pub fn from_elements(n: usize, mut elements: Vec<GBasisElement>) -> Result<Self> {
        elements.sort_by_key(|e| e.triple);
        let mut tails = Vec::with_capacity(elements.len());
        for e in &elements {
            if e.poly.n() != n {
                return Err(Error::AmbientMismatch(n, e.poly.n()));
            }
            let (h, c) = e.poly.head().ok_or(Error::ZeroPolynomial)?;
            if !c.is_one() {
                return Err(Error::NotMonic(e.poly.to_string()));
            }
            let mut tail = -&e.poly;
            tail.add_term(h.clone(), ParamCoeff::one());
            tails.push(tail);
        }
        Ok(Self { n, elements, tails })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[GBasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the element with the smallest triple whose head divides `t`.
    pub fn first_divisor(&self, t: &XMonomial) -> Option<usize> {
        self.elements.iter().position(|e| e.head().divides(t))
    }

    pub fn divisors(&self, t: &XMonomial) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&g| self.elements[g].head().divides(t))
            .collect()
    }

    pub fn is_reduced(&self, t: &XMonomial) -> bool {
        self.first_divisor(t).is_none()
    }

    /// `p - a*s*g` where `t = s*HT(g)` has coefficient `a` in `p`; this
    /// removes `t` and adds only terms smaller than `t`.
    fn rewrite_into(&self, work: &mut XPoly, t: &XMonomial, a: &ParamCoeff, g: usize) {
        let s = self.elements[g].head().quotient_of(t).expect("head divides t");
        for (m, c) in self.tails[g].terms() {
            work.add_term(s.mul(m), a * c);
        }
    }
}

pub fn head_term(p: &XPoly) -> Result<XMonomial> {
    p.head().map(|(m, _)| m.clone()).ok_or(Error::ZeroPolynomial)
}

pub fn head_coeff(p: &XPoly) -> Result<ParamCoeff> {
    p.head().map(|(_, c)| c.clone()).ok_or(Error::ZeroPolynomial)
}

/// One reduction step with the canonical rule (largest reducible monomial,
/// smallest triple), or `None` if `p` is already `G`-reduced.
pub fn reduce_step_g(p: &XPoly, basis: &GBasis) -> Option<XPoly> {
    let (t, a, g) = p
        .terms()
        .rev()
        .find_map(|(t, a)| basis.first_divisor(t).map(|g| (t.clone(), a.clone(), g)))?;
    let mut out = p.clone();
    out.remove_term(&t);
    basis.rewrite_into(&mut out, &t, &a, g);
    Some(out)
}

/// Which reducible term and basis element each step uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Largest reducible monomial, smallest triple.
    Canonical,
    /// A uniformly random reducible monomial, then a uniformly random basis
    /// element whose head divides it.
    Random(u64),
}

/// The unique `G`-reduced (for the standard basis: forkless) polynomial
/// congruent to `p`.
pub fn normal_form(p: &XPoly, basis: &GBasis) -> XPoly {
    normal_form_with(p, basis, Selection::Canonical)
}

pub fn normal_form_with(p: &XPoly, basis: &GBasis, selection: Selection) -> XPoly {
    assert_eq!(p.n(), basis.n(), "ambient size mismatch");
    match selection {
        Selection::Canonical => canonical_nf(p, basis),
        Selection::Random(seed) => random_nf(p, basis, seed),
    }
}

fn canonical_nf(p: &XPoly, basis: &GBasis) -> XPoly {
    // New terms are always below the rewritten one, so once the largest
    // remaining term is reduced it is final.
    let mut work = p.clone();
    let mut out = XPoly::zero(p.n());
    let mut steps = 0usize;
    while let Some((t, a)) = work.pop_head() {
        match basis.first_divisor(&t) {
            None => out.add_term(t, a),
            Some(g) => {
                steps += 1;
                assert!(steps <= MAX_REDUCTION_STEPS, "reduction step bound exceeded");
                basis.rewrite_into(&mut work, &t, &a, g);
            }
        }
    }
    out
}

fn random_nf(p: &XPoly, basis: &GBasis, seed: u64) -> XPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = p.clone();
    let mut reducible: BTreeMap<XMonomial, Vec<usize>> = BTreeMap::new();
    for t in p.monomials() {
        let ds = basis.divisors(t);
        if !ds.is_empty() {
            reducible.insert(t.clone(), ds);
        }
    }
    let mut steps = 0usize;
    while !reducible.is_empty() {
        steps += 1;
        assert!(steps <= MAX_REDUCTION_STEPS, "reduction step bound exceeded");
        let idx = rng.gen_range(0..reducible.len());
        let (t, ds) = reducible.iter().nth(idx).expect("in range");
        let (t, g) = (t.clone(), ds[rng.gen_range(0..ds.len())]);
        let a = work.remove_term(&t).expect("indexed terms are present");
        reducible.remove(&t);
        let s = basis.elements[g].head().quotient_of(&t).expect("head divides t");
        for (m, c) in basis.tails[g].terms() {
            let u = s.mul(m);
            let had = work.contains(&u);
            work.add_term(u.clone(), &a * c);
            match (had, work.contains(&u)) {
                (true, false) => {
                    reducible.remove(&u);
                }
                (false, true) => {
                    let ds = basis.divisors(&u);
                    if !ds.is_empty() {
                        reducible.insert(u, ds);
                    }
                }
                _ => {}
            }
        }
    }
    work
}

/// `s1*g1 - s2*g2` with `s1*HT(g1) = s2*HT(g2) = lcm(HT(g1), HT(g2))`.
pub fn spol(g1: &GBasisElement, g2: &GBasisElement) -> XPoly {
    spol_polys(&g1.poly, &g2.poly)
}

/// S-polynomial of two monic polynomials.
pub fn spol_polys(p1: &XPoly, p2: &XPoly) -> XPoly {
    let h1 = p1.head().expect("nonzero").0;
    let h2 = p2.head().expect("nonzero").0;
    let l = h1.lcm(h2);
    let s1 = h1.quotient_of(&l).expect("divides lcm");
    let s2 = h2.quotient_of(&l).expect("divides lcm");
    &p1.mul_monomial(&s1) - &p2.mul_monomial(&s2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpolFailure {
    pub first: Triple,
    pub second: Triple,
    pub remainder: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuchbergerReport {
    pub n: usize,
    pub basis_size: usize,
    /// Unordered pairs (including equal ones) with non-disjoint heads.
    pub pairs_checked: usize,
    pub failures: Vec<SpolFailure>,
    pub passed: bool,
}

/// Reduce the S-polynomial of every pair with non-disjoint head terms.
pub fn buchberger_report(basis: &GBasis) -> BuchbergerReport {
    let els = basis.elements();
    let pairs: Vec<(usize, usize)> = (0..els.len())
        .flat_map(|a| (a..els.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| !els[a].head().is_disjoint(els[b].head()))
        .collect();
    let failures: Vec<SpolFailure> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            if a == b {
                return None;
            }
            let r = normal_form(&spol(&els[a], &els[b]), basis);
            (!r.is_zero()).then(|| SpolFailure {
                first: els[a].triple,
                second: els[b].triple,
                remainder: r.to_string(),
            })
        })
        .collect();
    BuchbergerReport {
        n: basis.n(),
        basis_size: els.len(),
        pairs_checked: pairs.len(),
        passed: failures.is_empty(),
        failures,
    }
}

pub fn buchberger_check(basis: &GBasis) -> bool {
    buchberger_report(basis).passed
}

/// Whether `p` lies in `J` for generic β, α.
pub fn ideal_member(p: &XPoly) -> bool {
    ideal_member_with(p, &Params::generic())
}

/// Whether `p` lies in the ideal with β, α specialized as in `params`.
pub fn ideal_member_with(p: &XPoly, params: &Params) -> bool {
    normal_form(p, &generate_basis_with(p.n(), params)).is_zero()
}

/// `u1..u4` for `a < b < c < d`: the basis elements for the triples
/// `(a,b,c)`, `(a,b,d)`, `(a,c,d)`, `(b,c,d)`.
pub fn u_polys(n: usize, [a, b, c, d]: [usize; 4], params: &Params) -> [XPoly; 4] {
    assert!(1 <= a && a < b && b < c && c < d && d <= n);
    [(a, b, c), (a, b, d), (a, c, d), (b, c, d)].map(|t| GBasisElement::new(n, t, params).poly)
}

/// A term `coeff * multiplier * u[index]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTerm {
    pub coeff: ParamCoeff,
    pub multiplier: XMonomial,
    pub index: usize,
}

/// `Σ lhs = Σ rhs` as a linear combination of `u1..u4`.
#[derive(Clone, Debug)]
pub struct UIdentity {
    pub name: &'static str,
    pub lhs: Vec<UTerm>,
    pub rhs: Vec<UTerm>,
}

impl UIdentity {
    fn side(terms: &[UTerm], u: &[XPoly; 4]) -> XPoly {
        let n = u[0].n();
        let mut out = XPoly::zero(n);
        for t in terms {
            out.add_scaled(&t.coeff, &t.multiplier, &u[t.index]);
        }
        out
    }

    /// `lhs - rhs` expanded.
    pub fn difference(&self, u: &[XPoly; 4]) -> XPoly {
        &Self::side(&self.lhs, u) - &Self::side(&self.rhs, u)
    }

    pub fn holds(&self, u: &[XPoly; 4]) -> bool {
        self.difference(u).is_zero()
    }

    /// `multiplier * HT(u[index])` for every right-hand term.
    pub fn rhs_head_monomials(&self, u: &[XPoly; 4]) -> Vec<XMonomial> {
        self.rhs
            .iter()
            .map(|t| t.multiplier.mul(u[t.index].head().expect("nonzero").0))
            .collect()
    }

    pub fn rhs_heads_distinct(&self, u: &[XPoly; 4]) -> bool {
        let mut hs = self.rhs_head_monomials(u);
        let len = hs.len();
        hs.sort();
        hs.dedup();
        hs.len() == len
    }
}

/// The identities among `u1..u4` that show the three S-polynomials reduce
/// to zero. The first is the full vanishing combination; the others have
/// an S-polynomial on the left.
pub fn u_identities(n: usize, [a, b, c, d]: [usize; 4]) -> Vec<UIdentity> {
    let x = |i, j| XMonomial::from_pairs(n, &[(i, j, 1)]);
    let one = XMonomial::one(n);
    let t = |c: i64, m: &XMonomial, idx: usize| UTerm {
        coeff: ParamCoeff::from_int(c),
        multiplier: m.clone(),
        index: idx - 1,
    };
    let bt = |sign: i64, idx: usize| UTerm {
        coeff: ParamCoeff::beta().scale(&crate::ring::int(sign)),
        multiplier: one.clone(),
        index: idx - 1,
    };
    vec![
        UIdentity {
            name: "vanishing combination",
            lhs: vec![
                t(1, &x(a, d), 1),
                t(-1, &x(b, d), 1),
                t(-1, &x(a, c), 2),
                t(1, &x(b, c), 2),
                t(-1, &x(b, c), 3),
                t(1, &x(b, d), 3),
                t(1, &x(a, c), 4),
                t(-1, &x(a, d), 4),
            ],
            rhs: vec![],
        },
        UIdentity {
            name: "spol(u1,u2)",
            lhs: vec![t(1, &x(a, d), 1), t(-1, &x(a, c), 2)],
            rhs: vec![
                t(-1, &x(b, c), 2),
                t(-1, &x(a, c), 4),
                t(1, &x(b, d), 1),
                t(1, &x(b, c), 3),
                t(1, &x(a, d), 4),
                t(-1, &x(b, d), 3),
            ],
        },
        UIdentity {
            name: "spol(u1,u3)",
            lhs: vec![t(1, &x(a, d), 1), t(-1, &x(a, b), 3)],
            rhs: vec![
                bt(1, 3),
                bt(-1, 2),
                t(-1, &x(a, b), 4),
                t(-1, &x(b, c), 2),
                t(1, &x(b, c), 3),
                t(1, &x(a, d), 4),
                t(1, &x(c, d), 1),
                t(-1, &x(c, d), 2),
            ],
        },
        UIdentity {
            name: "spol(u2,u3)",
            lhs: vec![t(1, &x(a, c), 2), t(-1, &x(a, b), 3)],
            rhs: vec![
                bt(1, 3),
                bt(-1, 2),
                t(-1, &x(a, b), 4),
                t(1, &x(a, c), 4),
                t(-1, &x(b, d), 1),
                t(1, &x(c, d), 1),
                t(1, &x(b, d), 3),
                t(-1, &x(c, d), 2),
            ],
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UIdentityReport {
    pub n: usize,
    pub quadruples: usize,
    pub identities_checked: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Check every identity for every `a < b < c < d <= n`: the identity holds,
/// the left side of each S-polynomial identity equals `spol`, and the
/// right-hand head monomials are pairwise distinct.
pub fn verify_u_identities(n: usize) -> UIdentityReport {
    let params = Params::generic();
    let mut quads = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    quads.push([a, b, c, d]);
                }
            }
        }
    }
    let mut failures = Vec::new();
    let mut checked = 0;
    for &q in &quads {
        let u = u_polys(n, q, &params);
        let spols = [
            spol_polys(&u[0], &u[1]),
            spol_polys(&u[0], &u[2]),
            spol_polys(&u[1], &u[2]),
        ];
        for (k, id) in u_identities(n, q).iter().enumerate() {
            checked += 1;
            if !id.holds(&u) {
                failures.push(format!("{:?}: {} does not hold", q, id.name));
            }
            if k > 0 {
                if UIdentity::side(&id.lhs, &u) != spols[k - 1] {
                    failures.push(format!("{:?}: left side of {} is not the S-polynomial", q, id.name));
                }
                if !id.rhs_heads_distinct(&u) {
                    failures.push(format!("{:?}: {} has repeated head monomials", q, id.name));
                }
            }
        }
    }
    UIdentityReport {
        n,
        quadruples: quads.len(),
        identities_checked: checked,
        passed: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn basis_shape() {
        assert!(generate_basis(2).is_empty());
        assert_eq!(generate_basis(5).len(), 10);
        let g = generate_basis(3);
        assert_eq!(g.len(), 1);
        let e = &g.elements()[0];
        assert_eq!(*e.head(), XMonomial::from_pairs(3, &[(1, 2, 1), (1, 3, 1)]));
        assert_eq!(
            e.poly.to_string(),
            "x[1,2]*x[1,3] - x[1,2]*x[2,3] + x[1,3]*x[2,3] + b*x[1,3] + a"
        );
        for e in generate_basis(6).elements() {
            let (i, j, k) = e.triple;
            assert_eq!(*e.head(), XMonomial::from_pairs(6, &[(i, j, 1), (i, k, 1)]));
            assert!(head_coeff(&e.poly).unwrap().is_one());
        }
    }

    #[test]
    fn head_examples() {
        assert_eq!(head_term(&XPoly::zero(3)), Err(Error::ZeroPolynomial));
        let five = parse_poly("5", 3).unwrap();
        assert!(head_term(&five).unwrap().is_one());
        assert_eq!(head_coeff(&five).unwrap(), ParamCoeff::from_int(5));
        let bx = parse_poly("b*x[2,3]", 3).unwrap();
        assert_eq!(head_coeff(&bx).unwrap(), ParamCoeff::beta());
    }

    #[test]
    fn single_steps() {
        let g = generate_basis(3);
        let p = parse_poly("x[1,3]*x[1,2]", 3).unwrap();
        let expected = parse_poly("x[1,2]*x[2,3] - x[1,3]*x[2,3] - b*x[1,3] - a", 3).unwrap();
        assert_eq!(reduce_step_g(&p, &g), Some(expected.clone()));
        let p2 = parse_poly("x[1,3]^2*x[1,2]", 3).unwrap();
        let expected2 = expected.mul_monomial(&XMonomial::from_pairs(3, &[(1, 3, 1)]));
        assert_eq!(reduce_step_g(&p2, &g), Some(expected2));
        assert_eq!(reduce_step_g(&parse_poly("x[1,2]*x[2,3]", 3).unwrap(), &g), None);
    }

    #[test]
    fn generators_reduce_to_zero() {
        let g = generate_basis(5);
        for e in g.elements() {
            assert!(normal_form(&relation(5, e.triple, &Params::generic()), &g).is_zero());
        }
        assert!(!ideal_member(&XPoly::x(3, 1, 2)));
    }

    #[test]
    fn normal_form_is_forkless_and_confluent() {
        let g = generate_basis(4);
        let p = parse_poly("x[1,2]*x[2,3]*x[3,4] + x[1,2]*x[1,3]*x[1,4]^2 - b*x[1,3]*x[1,2]", 4).unwrap();
        let nf = normal_form(&p, &g);
        assert!(nf.is_forkless());
        for seed in 0..5 {
            assert_eq!(normal_form_with(&p, &g, Selection::Random(seed)), nf);
        }
        assert!(ideal_member(&(&p - &nf)));
    }

    #[test]
    fn spol_examples() {
        let g = generate_basis(6);
        let e = &g.elements()[0];
        assert!(spol(e, e).is_zero());
        let find = |t| g.elements().iter().find(|e| e.triple == t).unwrap();
        let (g1, g2) = (find((1, 2, 3)), find((4, 5, 6)));
        let expected = &g1.poly.mul_monomial(g2.head()) - &g2.poly.mul_monomial(g1.head());
        assert_eq!(spol(g1, g2), expected);
    }

    #[test]
    fn buchberger_small() {
        assert!(buchberger_check(&generate_basis(3)));
        assert!(buchberger_check(&generate_basis(4)));
        let r = buchberger_report(&generate_basis(4));
        assert_eq!(r.basis_size, 4);
        assert!(r.pairs_checked > r.basis_size);
    }

    #[test]
    fn perturbed_basis_fails() {
        let n = 4;
        let mut els = generate_basis(n).elements().to_vec();
        els[0].poly.add_term(XMonomial::one(n), -&ParamCoeff::alpha());
        let perturbed = GBasis::from_elements(n, els).unwrap();
        assert!(!buchberger_check(&perturbed));
    }

    #[test]
    fn non_monic_is_rejected() {
        let el = GBasisElement {
            triple: (1, 2, 3),
            poly: parse_poly("2*x[1,3]*x[1,2] + a", 3).unwrap(),
        };
        assert!(matches!(GBasis::from_elements(3, vec![el]), Err(Error::NotMonic(_))));
    }

    #[test]
    fn u_identities_at_n4() {
        let r = verify_u_identities(4);
        assert_eq!(r.quadruples, 1);
        assert!(r.passed, "{:?}", r.failures);
    }
}
