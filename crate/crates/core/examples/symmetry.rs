//! With x[j,i] = -b - x[i,j] the generators J_{i,j,k} are symmetric and
//! permuting indices preserves J.

use subdivision_algebra::algebra::{apply_perm, j_generator, verify_symmetry, Permutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let j = j_generator(1, 2, 3, 3)?;
    println!("J_{{1,2,3}} = {j}");
    let s = Permutation::new(vec![2, 3, 1])?;
    println!("{s} · J_{{1,2,3}} = {}", apply_perm(&s, &j));
    for n in 3..=5 {
        let r = verify_symmetry(n);
        println!("n={n}: {} permutations, passed={}", r.permutations_checked, r.passed);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
