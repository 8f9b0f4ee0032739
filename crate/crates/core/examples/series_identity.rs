//! E∘D = B∘A_S on pathless monomials, and G∘F∘E = id.

use subdivision_algebra::parse_monomial;
use subdivision_algebra::series::{ed_ba_sides, verify_e_left_inverse, verify_ed_eq_ba_exhaustive};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = parse_monomial("x[1,3]*x[2,3]", 3)?;
    let (ed, ba) = ed_ba_sides(&m, 2)?;
    println!("m = {m}");
    println!("E(D(m)) = {ed}");
    println!("B(A(m)) = {ba}");
    assert_eq!(ed, ba);
    for n in 2..=4 {
        let r = verify_ed_eq_ba_exhaustive(n, 3, 3);
        println!("n={n}: {} pathless monomials, passed={}", r.monomials_checked, r.passed);
    }
    println!("G(F(E(p))) = p on 100 samples: {}", verify_e_left_inverse(100, 5));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
