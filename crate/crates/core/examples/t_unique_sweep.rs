//! Random inputs, several move orders each: pathless forms may differ but
//! their D-images never do.

use subdivision_algebra::rewrite::{verify_t_unique, TUniqueConfig};
use subdivision_algebra::Params;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 3..=5 {
        let cfg = TUniqueConfig {
            n,
            trials: 40,
            strategies: 4,
            seed: 1,
            max_deg: 4,
            max_terms: 4,
        };
        let r = verify_t_unique(&cfg, &Params::generic());
        println!(
            "n={n}: {} inputs, {} moves, {} with differing pathless forms, passed={}",
            r.inputs_checked, r.total_moves, r.inputs_with_distinct_results, r.passed
        );
        if !r.passed {
            return Err(format!("counterexample: {:?}", r.counterexamples[0]).into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
