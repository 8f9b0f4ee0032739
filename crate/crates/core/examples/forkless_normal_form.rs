//! The Gröbner basis of J, its S-polynomial check, and forkless normal forms.

use subdivision_algebra::groebner::{buchberger_report, generate_basis, normal_form, verify_u_identities};
use subdivision_algebra::parse_poly;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let basis = generate_basis(4);
    for g in basis.elements() {
        println!("{:?}: {}", g.triple, g.poly);
    }
    let report = buchberger_report(&basis);
    println!(
        "{} pairs, all S-polynomials reduce to 0: {}",
        report.pairs_checked, report.passed
    );
    println!("u-identities hold: {}", verify_u_identities(4).passed);

    let p = parse_poly("x[1,2]*x[1,3]*x[1,4] + b*x[1,3]*x[1,2]", 4)?;
    let nf = normal_form(&p, &basis);
    println!("{p}\n  -> {nf}");
    assert!(nf.is_forkless());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
