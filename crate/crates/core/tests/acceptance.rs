//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line; exits nonzero if any
//! criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use subdivision_algebra::algebra::{count_forkless, gf_coeffs, verify_symmetry};
use subdivision_algebra::groebner::{
    buchberger_report, generate_basis, ideal_member_with, normal_form, normal_form_with, verify_u_identities, Selection,
};
use subdivision_algebra::poly::all_monomials;
use subdivision_algebra::rewrite::{
    parse_script, produced_monomials, random_poly, reduce_pathless, trial_rng, verify_t_unique, Strategy, TUniqueConfig,
};
use subdivision_algebra::ring::int;
use subdivision_algebra::series::{
    verify_a_kills_j, verify_a_kills_j_with, verify_e_left_inverse, verify_ed_eq_ba_exhaustive, verify_ed_eq_ba_random,
};
use subdivision_algebra::{parse_poly, parse_tpoly, ParamCoeff, Params, XMonomial, XPoly};

const WORKED_GAME: &str = include_str!("data/worked_game.script");
const SECOND_GAME: &str = include_str!("data/second_game.script");

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:.2?}, limit {limit:?}"))
}

fn game_params() -> Params {
    Params::specialized(int(1), int(0))
}

fn start_poly() -> XPoly {
    parse_poly("x[1,2]*x[2,3]*x[3,4]", 4).unwrap()
}

fn play(script: &str) -> subdivision_algebra::rewrite::Reduction {
    let steps = parse_script(script, 4).unwrap();
    reduce_pathless(&start_poly(), &game_params(), &Strategy::Script(steps)).unwrap()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let r = play(WORKED_GAME);
    // states after each move, transcribed term by term
    let states = [
        "x[1,2]*x[1,3]*x[3,4] + x[1,3]*x[2,3]*x[3,4] + x[1,3]*x[3,4]",
        "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,2]*x[1,4] + x[1,3]*x[2,3]*x[3,4] + x[1,3]*x[3,4]",
        "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,2]*x[1,4] + x[1,3]*x[2,3]*x[2,4] + x[1,3]*x[2,4]*x[3,4] \
         + x[1,3]*x[2,4] + x[1,3]*x[3,4]",
        "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,2]*x[1,4] + x[1,3]*x[2,3]*x[2,4] + x[1,3]*x[2,4]*x[3,4] \
         + x[1,3]*x[2,4] + x[1,3]*x[1,4] + x[1,4]*x[3,4] + x[1,4]",
        "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,2]*x[1,4] + x[1,3]*x[2,3]*x[2,4] + x[1,3]*x[1,4]*x[2,4] \
         + x[1,4]*x[2,4]*x[3,4] + x[1,4]*x[2,4] + x[1,3]*x[2,4] + x[1,3]*x[1,4] + x[1,4]*x[3,4] + x[1,4]",
    ];
    ensure(r.trace.steps.len() == states.len(), "wrong number of moves")?;
    for (k, (step, text)) in r.trace.steps.iter().zip(states).enumerate() {
        ensure(
            step.after == parse_poly(text, 4).unwrap(),
            format!("state after move {} differs", k + 1),
        )?;
    }
    ensure(r.result.num_terms() == 11, "final polynomial should have 11 terms")?;
    let t1 = parse_tpoly("t[1]", 4).unwrap();
    let inner = parse_tpoly(
        "2*t[1] + 2*t[2] + t[3] + t[1]^2 + t[2]^2 + t[1]*t[2] + t[1]*t[3] + t[2]*t[3] + 1",
        4,
    )
    .unwrap();
    ensure(r.result.d_image() == &t1 * &inner, "D-image differs")?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("5 moves, 11 terms, D = {}", r.result.d_image()))
}

fn two_pathless_forms() -> Outcome {
    let start = Instant::now();
    let q1_text = "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,3]*x[1,4] + x[1,3]*x[1,4]*x[2,4] \
                   + x[1,3]*x[2,3]*x[2,4] + x[1,3]*x[2,4] + x[1,4] + x[1,4]*x[2,4] + x[1,4]*x[2,4]*x[3,4] + x[1,4]*x[3,4]";
    let q2_text = "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,3]*x[1,4] + x[1,3]*x[1,4]*x[2,3] \
                   + x[1,4] + x[1,4]*x[2,3] + x[1,4]*x[2,3]*x[2,4] + x[1,4]*x[2,4] + x[1,4]*x[2,4]*x[3,4] + x[1,4]*x[3,4]";
    let q1 = play(WORKED_GAME).result;
    let q2 = play(SECOND_GAME).result;
    ensure(q1 == parse_poly(q1_text, 4).unwrap(), "first game does not end at q1")?;
    ensure(q2 == parse_poly(q2_text, 4).unwrap(), "second game does not end at q2")?;
    ensure(q1 != q2, "q1 and q2 coincide")?;
    ensure(ideal_member_with(&(&q1 - &q2), &game_params()), "q1 - q2 is not in J")?;
    ensure(q1.d_image() == q2.d_image(), "D-images differ")?;
    within(start, Duration::from_secs(1))?;
    Ok("q1 != q2, q1 - q2 in J, D(q1) = D(q2)".into())
}

fn t_unique_sweep() -> Outcome {
    let start = Instant::now();
    let mut distinct = 0;
    for n in 3..=6 {
        let cfg = TUniqueConfig {
            n,
            trials: 100,
            strategies: 5,
            seed: 2024 + n as u64,
            max_deg: 4,
            max_terms: 5,
        };
        let r = verify_t_unique(&cfg, &Params::generic());
        ensure(r.passed, format!("n = {n}: {:?}", r.counterexamples.first()))?;
        distinct += r.inputs_with_distinct_results;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "400 inputs x 5 strategies; {distinct} inputs had differing pathless results"
    ))
}

fn groebner_verification() -> Outcome {
    let mut notes = Vec::new();
    for n in 3..=6 {
        let start = Instant::now();
        let r = buchberger_report(&generate_basis(n));
        ensure(r.passed, format!("n = {n}: {:?}", r.failures.first()))?;
        if n == 6 {
            within(start, Duration::from_secs(120))?;
        }
        notes.push(format!("n={n}: {} pairs", r.pairs_checked));
    }
    let u = verify_u_identities(6);
    ensure(u.passed, format!("{:?}", u.failures.first()))?;
    ensure(u.quadruples == 15, "expected 15 quadruples for n = 6")?;
    Ok(format!(
        "{}; u-identities on {} quadruples",
        notes.join(", "),
        u.quadruples
    ))
}

fn confluence() -> Outcome {
    for k in 0..200u64 {
        let n = 3 + (k % 3) as usize;
        let mut rng = trial_rng(77, k);
        let p = random_poly(&mut rng, n, 4, 5);
        let basis = generate_basis(n);
        let canonical = normal_form(&p, &basis);
        ensure(canonical.is_forkless(), format!("input {k}: normal form not forkless"))?;
        for s in 0..3 {
            let other = normal_form_with(&p, &basis, Selection::Random(1000 * k + s));
            ensure(
                other == canonical,
                format!("input {k}: selection rule {s} disagrees on {p}"),
            )?;
        }
    }
    Ok("200 inputs, canonical = 3 randomized rules".into())
}

fn a_kills_j() -> Outcome {
    let start = Instant::now();
    for n in 3..=6 {
        let r = verify_a_kills_j(n);
        ensure(r.passed, format!("n = {n}: {:?}", r.failures.first()))?;
    }
    let drop_alpha = |n: usize, t: (usize, usize, usize)| {
        let g = subdivision_algebra::groebner::relation(n, t, &Params::generic());
        &g + &XPoly::constant(n, ParamCoeff::alpha())
    };
    ensure(
        !verify_a_kills_j_with(4, 0, &drop_alpha).passed,
        "perturbed generator not detected",
    )?;
    within(start, Duration::from_secs(10))?;
    Ok("n = 3..6 exact; perturbed generator rejected".into())
}

fn ed_eq_ba() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 2..=4 {
        let r = verify_ed_eq_ba_exhaustive(n, 3, 4);
        ensure(r.passed, format!("n = {n}: {:?}", r.failures.first()))?;
        count += r.monomials_checked;
    }
    let r = verify_ed_eq_ba_random(5, 5, 5, 100, 31);
    ensure(r.passed, format!("n = 5: {:?}", r.failures.first()))?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{count} pathless monomials exhaustively at W=4, 100 random at n=5, W=5"
    ))
}

fn e_left_inverse() -> Outcome {
    ensure(verify_e_left_inverse(200, 5), "G(F(E(p))) != p for some sample")?;
    Ok("200 random polynomials".into())
}

fn hilbert_counts() -> Outcome {
    let start = Instant::now();
    for n in 1..=6 {
        let c = count_forkless(n, 6);
        let g = gf_coeffs(n, 6).map_err(|e| e.to_string())?;
        ensure(
            c.counts == g.counts,
            format!("n = {n}: {:?} vs {:?}", c.counts, g.counts),
        )?;
    }
    // brute-force oracle: filter every monomial
    let brute = |n: usize| -> Vec<u128> {
        (0..=3)
            .map(|d| all_monomials(n, d).iter().filter(|m| m.is_forkless()).count() as u128)
            .collect()
    };
    ensure(brute(3) == vec![1, 3, 5, 7], "n = 3 spot values")?;
    ensure(brute(4) == vec![1, 6, 17, 34], "n = 4 spot values")?;
    ensure(
        count_forkless(3, 3).counts == brute(3) && count_forkless(4, 3).counts == brute(4),
        "enumeration vs filter",
    )?;
    within(start, Duration::from_secs(30))?;
    Ok("n <= 6, degree <= 6; (1,3,5,7) and (1,6,17,34) confirmed".into())
}

fn symmetry() -> Outcome {
    for n in 3..=5 {
        let r = verify_symmetry(n);
        ensure(r.passed, format!("n = {n}: {:?}", r.failures.first()))?;
    }
    Ok("n = 3..5".into())
}

fn weight_descent() -> Outcome {
    let mut steps = 0usize;
    let mut check = |r: &subdivision_algebra::rewrite::Reduction| -> Result<(), String> {
        for s in &r.trace.steps {
            let w = s.monomial.weight_pathless();
            let produced = produced_monomials(&s.monomial, s.triple).map_err(|e| e.to_string())?;
            ensure(
                produced.iter().all(|u: &XMonomial| u.weight_pathless() < w),
                format!("weight did not drop rewriting {} along {:?}", s.monomial, s.triple),
            )?;
            steps += 1;
        }
        Ok(())
    };
    check(&play(WORKED_GAME))?;
    check(&play(SECOND_GAME))?;
    for k in 0..200u64 {
        let n = 3 + (k % 4) as usize;
        let mut rng = trial_rng(99, k);
        let p = random_poly(&mut rng, n, 4, 5);
        for s in [Strategy::FirstByOrder, Strategy::LastByOrder, Strategy::Random(k)] {
            check(&reduce_pathless(&p, &Params::generic(), &s).map_err(|e| e.to_string())?)?;
        }
    }
    let inline = if cfg!(debug_assertions) {
        "; in-step assertion active"
    } else {
        ""
    };
    Ok(format!("{steps} moves checked{inline}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("worked example", worked_example),
        ("non-unique pathless forms", two_pathless_forms),
        ("D-image uniqueness sweep", t_unique_sweep),
        ("Groebner basis", groebner_verification),
        ("normal form confluence", confluence),
        ("A kills J", a_kills_j),
        ("E o D = B o A on pathless monomials", ed_eq_ba),
        ("E left inverse", e_left_inverse),
        ("forkless counts", hilbert_counts),
        ("symmetric generators", symmetry),
        ("weight descent", weight_descent),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (idx, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name} ({took:.2?}): {detail}", idx + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({took:.2?}): {why}", idx + 1);
            }
        }
    }
    let _ = panic::take_hook();
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
