//! The map A into rational functions of q vanishes on J.

use subdivision_algebra::groebner::relation;
use subdivision_algebra::series::{a_image_rat, verify_a_kills_j};
use subdivision_algebra::{Params, XPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("A(x[1,2]) = {}", a_image_rat(&XPoly::x(3, 1, 2)));
    let g = relation(3, (1, 2, 3), &Params::generic());
    println!("A({g}) = {}", a_image_rat(&g));
    for n in 3..=5 {
        let r = verify_a_kills_j(n);
        println!(
            "n={n}: {} generators, {} multiples, passed={}",
            r.generators_checked, r.multiples_checked, r.passed
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
