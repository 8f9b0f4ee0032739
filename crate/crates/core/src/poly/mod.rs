//! Sparse polynomials in the `x[i,j]` and `t_i`, monomial predicates, weights,
//! the term order, and the substitution homomorphism `D`.

mod monomial;
mod parse;
mod tpoly;
mod xpoly;

pub use monomial::{num_vars, PairIndex, XMonomial};
pub use parse::{parse_monomial, parse_poly, parse_tpoly};
pub use tpoly::TPoly;
pub use xpoly::XPoly;

/// Canonical text form; `parse_poly(&format_poly(p), p.n()) == p`.
pub fn format_poly(p: &XPoly) -> String {
    p.to_string()
}

/// Every monomial of total degree exactly `degree` in the variables of `n`,
/// in descending term order.
pub fn all_monomials(n: usize, degree: u32) -> Vec<XMonomial> {
    let nv = num_vars(n);
    let mut out = Vec::new();
    let mut exps = vec![0u32; nv];
    fn rec(n: usize, idx: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<XMonomial>) {
        if idx + 1 >= exps.len() {
            if exps.is_empty() {
                if left == 0 {
                    out.push(XMonomial::one(n));
                }
                return;
            }
            exps[idx] = left;
            out.push(XMonomial::from_dense(n, exps.clone()));
            exps[idx] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[idx] = e;
            rec(n, idx + 1, left - e, exps, out);
        }
        exps[idx] = 0;
    }
    rec(n, 0, degree, &mut exps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_monomials_counts_and_order() {
        // C(d + v - 1, v - 1) monomials of degree d in v variables.
        assert_eq!(all_monomials(3, 2).len(), 6);
        assert_eq!(all_monomials(4, 3).len(), 56);
        assert_eq!(all_monomials(1, 0).len(), 1);
        assert!(all_monomials(1, 2).is_empty());
        let ms = all_monomials(4, 3);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }
}
