//! Plays the pathless game on `x[1,2]*x[2,3]*x[3,4]` with b = 1, a = 0,
//! following a fixed script and printing every intermediate polynomial.

use subdivision_algebra::rewrite::{format_step, parse_script, reduce_pathless, Strategy};
use subdivision_algebra::ring::int;
use subdivision_algebra::{parse_poly, Params};

const SCRIPT: &str = "\
m=x[1,2]*x[2,3]*x[3,4] t=(1,2,3)
m=x[1,2]*x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[2,3]*x[3,4] t=(1,3,4)
m=x[1,4]*x[2,3]*x[3,4] t=(2,3,4)
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = Params::specialized(int(1), int(0));
    let p = parse_poly("x[1,2]*x[2,3]*x[3,4]", 4)?;
    let steps = parse_script(SCRIPT, 4)?;
    let r = reduce_pathless(&p, &params, &Strategy::Script(steps))?;
    println!("start: {p}");
    for (k, s) in r.trace.steps.iter().enumerate() {
        println!("{}. {}", k + 1, format_step(&s.monomial, s.triple));
        println!("   -> {}", s.after);
    }
    assert!(r.result.is_pathless());
    println!("pathless form ({} terms): {}", r.result.num_terms(), r.result);
    println!("D: {}", r.result.d_image());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
