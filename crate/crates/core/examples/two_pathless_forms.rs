//! Two move orders from the same start reach different pathless
//! polynomials. Their difference lies in J and their D-images agree.

use subdivision_algebra::groebner::ideal_member_with;
use subdivision_algebra::rewrite::{parse_script, pathless_form, Strategy};
use subdivision_algebra::ring::int;
use subdivision_algebra::{parse_poly, Params};

const FIRST: &str = "\
m=x[1,2]*x[2,3]*x[3,4] t=(1,2,3)
m=x[1,2]*x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[2,3]*x[3,4] t=(1,3,4)
m=x[1,4]*x[2,3]*x[3,4] t=(2,3,4)
";

const SECOND: &str = "\
m=x[1,2]*x[2,3]*x[3,4] t=(1,2,3)
m=x[1,2]*x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[2,3]*x[3,4] t=(2,3,4)
m=x[1,3]*x[3,4] t=(1,3,4)
m=x[1,3]*x[2,4]*x[3,4] t=(1,3,4)
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = Params::specialized(int(1), int(0));
    let p = parse_poly("x[1,2]*x[2,3]*x[3,4]", 4)?;
    let (q1, _) = pathless_form(&p, &params, &Strategy::Script(parse_script(FIRST, 4)?))?;
    let (q2, _) = pathless_form(&p, &params, &Strategy::Script(parse_script(SECOND, 4)?))?;
    println!("q1 = {q1}");
    println!("q2 = {q2}");
    let diff = &q1 - &q2;
    println!("q1 - q2 = {diff}");
    println!("q1 - q2 in J: {}", ideal_member_with(&diff, &params));
    println!("D(q1) = {}", q1.d_image());
    println!("D(q2) = {}", q2.d_image());
    assert_ne!(q1, q2);
    assert_eq!(q1.d_image(), q2.d_image());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
