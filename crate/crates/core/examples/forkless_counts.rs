//! Forkless monomials per degree against the generating function
//! ∏_{j<n-1} (1 + j t) / (1 - t)^{n-1}.

use subdivision_algebra::algebra::{count_forkless, enumerate_forkless, gf_coeffs};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=6 {
        let counted = count_forkless(n, 5);
        let predicted = gf_coeffs(n, 5)?;
        println!(
            "n={n}: {:?} (generating function agrees: {})",
            counted.counts,
            counted.counts == predicted.counts
        );
        assert_eq!(counted, predicted);
    }
    let degree2: Vec<String> = enumerate_forkless(3, 2).iter().map(ToString::to_string).collect();
    println!("degree 2, n=3: {}", degree2.join(", "));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
