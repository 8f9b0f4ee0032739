//! The pathless reduction game.
//!
//! A move picks a monomial `m` of the current polynomial and a triple
//! `i < j < k` with `x[i,j]*x[j,k] | m`, and replaces `c*m` by
//! `c * m/(x[i,j]*x[j,k]) * (x[i,k]*x[i,j] + x[i,k]*x[j,k] + β*x[i,k] + α)`.
//! The game always terminates in a pathless polynomial, but which one depends
//! on the choices; the image under `D` does not.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{parse_monomial, PairIndex, XMonomial, XPoly};
use crate::ring::{ParamCoeff, Params};

pub type Triple = (usize, usize, usize);

/// One scripted move: rewrite `monomial` along `triple`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptStep {
    pub monomial: XMonomial,
    pub triple: Triple,
}

/// How the game chooses its moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Largest reducible monomial in term order, lexicographically smallest triple.
    FirstByOrder,
    /// Smallest reducible monomial, lexicographically largest triple.
    LastByOrder,
    /// Uniform over all (reducible monomial, applicable triple) pairs.
    Random(u64),
    Script(Vec<ScriptStep>),
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::FirstByOrder => f.write_str("first"),
            Strategy::LastByOrder => f.write_str("last"),
            Strategy::Random(seed) => write!(f, "random({seed})"),
            Strategy::Script(steps) => write!(f, "script({} steps)", steps.len()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub monomial: XMonomial,
    pub triple: Triple,
    /// The polynomial right after this move.
    pub after: XPoly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    /// One `m=<monomial> t=(i,j,k)` line per step; the same format scripts
    /// are read from.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format_step(&s.monomial, s.triple));
            out.push('\n');
        }
        out
    }

    pub fn as_script(&self) -> Vec<ScriptStep> {
        self.steps
            .iter()
            .map(|s| ScriptStep {
                monomial: s.monomial.clone(),
                triple: s.triple,
            })
            .collect()
    }
}

pub fn format_step(m: &XMonomial, (i, j, k): Triple) -> String {
    format!("m={m} t=({i},{j},{k})")
}

/// Parse the line-oriented script/trace format. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_script(text: &str, n: usize) -> Result<Vec<ScriptStep>> {
    let mut steps = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Parse {
            pos: lineno + 1,
            message: format!("script line {}: {msg}", lineno + 1),
        };
        let rest = line.strip_prefix("m=").ok_or_else(|| bad("expected 'm='"))?;
        let (mono, triple) = rest.rsplit_once("t=").ok_or_else(|| bad("expected 't=(i,j,k)'"))?;
        let monomial = parse_monomial(mono.trim(), n)?;
        let inner = triple
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| bad("triple must be parenthesized"))?;
        let nums: Vec<usize> = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("triple entries must be unsigned integers"))?;
        if nums.len() != 3 {
            return Err(bad("triple must have three entries"));
        }
        let t = (nums[0], nums[1], nums[2]);
        check_triple(t, n)?;
        steps.push(ScriptStep { monomial, triple: t });
    }
    Ok(steps)
}

fn check_triple((i, j, k): Triple, n: usize) -> Result<()> {
    if 1 <= i && i < j && j < k && k <= n {
        Ok(())
    } else {
        Err(Error::MalformedTriple(i, j, k, n))
    }
}

/// All `i < j < k` with `x[i,j]*x[j,k] | m`, lexicographically ordered.
pub fn find_path_triples(m: &XMonomial) -> Vec<Triple> {
    m.path_triples()
}

/// `x[i,k]*x[i,j] + x[i,k]*x[j,k] + β*x[i,k] + α`, the right-hand side of the
/// defining relation for `x[i,j]*x[j,k]`.
pub fn relation_rhs(n: usize, (i, j, k): Triple, params: &Params) -> XPoly {
    let xik = XPoly::x(n, i, k);
    let mut out = &(&xik * &XPoly::x(n, i, j)) + &(&xik * &XPoly::x(n, j, k));
    out = &out + &xik.scale(&params.beta);
    &out + &XPoly::constant(n, params.alpha.clone())
}

/// The polynomial that replaces the monomial `m` (coefficient 1) in a move.
pub fn replacement(m: &XMonomial, t: Triple, params: &Params) -> Result<XPoly> {
    let n = m.n();
    check_triple(t, n)?;
    let (i, j, k) = t;
    let divisor = XMonomial::from_pairs(n, &[(i, j, 1), (j, k, 1)]);
    let cofactor = divisor.quotient_of(m).ok_or_else(|| Error::DivisorAbsent {
        monomial: m.to_string(),
        i,
        j,
        k,
    })?;
    Ok(relation_rhs(n, t, params).mul_monomial(&cofactor))
}

/// Monomials produced when `m` is rewritten along `t`, whatever the
/// parameter values are (up to vanishing coefficients).
pub fn produced_monomials(m: &XMonomial, t: Triple) -> Result<Vec<XMonomial>> {
    let r = replacement(m, t, &Params::generic())?;
    Ok(r.monomials().cloned().collect())
}

/// One move of the game: rewrite the full term `c*m` of `p` along `t`.
pub fn pathless_step(p: &XPoly, m: &XMonomial, t: Triple, params: &Params) -> Result<XPoly> {
    let c = p.coeff(m);
    if c.is_zero() {
        return Err(Error::MonomialAbsent(m.to_string()));
    }
    let r = replacement(m, t, params)?;
    debug_assert!(
        r.monomials().all(|u| u.weight_pathless() < m.weight_pathless()),
        "weight must strictly decrease"
    );
    let mut out = p.clone();
    out.add_term(m.clone(), -&c);
    out.add_scaled(&c, &XMonomial::one(p.n()), &r);
    Ok(out)
}

/// The polynomial being reduced, plus an index of its non-pathless
/// monomials and their applicable triples.
struct GameState {
    poly: XPoly,
    reducible: BTreeMap<XMonomial, Vec<Triple>>,
}

impl GameState {
    fn new(p: &XPoly) -> Self {
        let reducible = p
            .monomials()
            .filter_map(|m| {
                let ts = m.path_triples();
                (!ts.is_empty()).then(|| (m.clone(), ts))
            })
            .collect();
        Self {
            poly: p.clone(),
            reducible,
        }
    }

    fn add_term(&mut self, m: XMonomial, c: ParamCoeff) {
        let had = self.poly.contains(&m);
        self.poly.add_term(m.clone(), c);
        let has = self.poly.contains(&m);
        if had && !has {
            self.reducible.remove(&m);
        } else if !had && has {
            let ts = m.path_triples();
            if !ts.is_empty() {
                self.reducible.insert(m, ts);
            }
        }
    }

    fn apply(&mut self, m: &XMonomial, t: Triple, params: &Params) -> Result<()> {
        let c = self.poly.coeff(m);
        if c.is_zero() {
            return Err(Error::MonomialAbsent(m.to_string()));
        }
        let r = replacement(m, t, params)?;
        debug_assert!(
            r.monomials().all(|u| u.weight_pathless() < m.weight_pathless()),
            "weight must strictly decrease"
        );
        self.add_term(m.clone(), -&c);
        for (u, uc) in r.terms() {
            self.add_term(u.clone(), &c * uc);
        }
        Ok(())
    }
}

enum Chooser<'a> {
    First,
    Last,
    Random(Box<ChaCha8Rng>),
    Script(&'a [ScriptStep], usize),
}

impl Chooser<'_> {
    fn new(s: &Strategy) -> Chooser<'_> {
        match s {
            Strategy::FirstByOrder => Chooser::First,
            Strategy::LastByOrder => Chooser::Last,
            Strategy::Random(seed) => Chooser::Random(Box::new(ChaCha8Rng::seed_from_u64(*seed))),
            Strategy::Script(steps) => Chooser::Script(steps, 0),
        }
    }

    /// Next move, `None` once the polynomial is pathless.
    fn choose(&mut self, state: &GameState) -> Result<Option<(XMonomial, Triple)>> {
        match self {
            Chooser::First => Ok(state.reducible.iter().next_back().map(|(m, ts)| (m.clone(), ts[0]))),
            Chooser::Last => Ok(state
                .reducible
                .iter()
                .next()
                .map(|(m, ts)| (m.clone(), *ts.last().expect("nonempty")))),
            Chooser::Random(rng) => {
                let total: usize = state.reducible.values().map(Vec::len).sum();
                if total == 0 {
                    return Ok(None);
                }
                let mut pick = rng.gen_range(0..total);
                for (m, ts) in &state.reducible {
                    if pick < ts.len() {
                        return Ok(Some((m.clone(), ts[pick])));
                    }
                    pick -= ts.len();
                }
                unreachable!("pick < total")
            }
            Chooser::Script(steps, idx) => {
                let pathless = state.reducible.is_empty();
                match (steps.get(*idx), pathless) {
                    (None, true) => Ok(None),
                    (None, false) => Err(Error::ScriptExhausted(*idx)),
                    (Some(_), true) => Err(Error::ScriptInapplicable {
                        step: *idx + 1,
                        reason: "the polynomial is already pathless".into(),
                    }),
                    (Some(step), false) => {
                        let here = *idx + 1;
                        *idx += 1;
                        let Some(ts) = state.reducible.get(&step.monomial) else {
                            let reason = if state.poly.contains(&step.monomial) {
                                format!("{} is pathless", step.monomial)
                            } else {
                                format!("{} does not appear", step.monomial)
                            };
                            return Err(Error::ScriptInapplicable { step: here, reason });
                        };
                        if !ts.contains(&step.triple) {
                            let (i, j, k) = step.triple;
                            return Err(Error::ScriptInapplicable {
                                step: here,
                                reason: format!("x[{i},{j}]*x[{j},{k}] does not divide {}", step.monomial),
                            });
                        }
                        Ok(Some((step.monomial.clone(), step.triple)))
                    }
                }
            }
        }
    }
}

/// Result of playing the game to the end.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub result: XPoly,
    pub trace: ReductionTrace,
}

fn play(
    p: &XPoly,
    params: &Params,
    strategy: &Strategy,
    mut on_step: impl FnMut(&XMonomial, Triple, &XPoly),
) -> Result<XPoly> {
    let mut state = GameState::new(p);
    let mut chooser = Chooser::new(strategy);
    while let Some((m, t)) = chooser.choose(&state)? {
        state.apply(&m, t, params)?;
        on_step(&m, t, &state.poly);
    }
    debug_assert!(state.poly.is_pathless());
    Ok(state.poly)
}

/// Play the game from `p` under `strategy`, recording every move.
pub fn reduce_pathless(p: &XPoly, params: &Params, strategy: &Strategy) -> Result<Reduction> {
    let mut trace = ReductionTrace::default();
    let result = play(p, params, strategy, |m, t, after| {
        trace.steps.push(TraceStep {
            monomial: m.clone(),
            triple: t,
            after: after.clone(),
        })
    })?;
    Ok(Reduction { result, trace })
}

/// Like [`reduce_pathless`] without keeping snapshots; returns the final
/// polynomial and the number of moves.
pub fn pathless_form(p: &XPoly, params: &Params, strategy: &Strategy) -> Result<(XPoly, usize)> {
    let mut moves = 0;
    let q = play(p, params, strategy, |_, _, _| moves += 1)?;
    Ok((q, moves))
}

/// Coefficients used by [`random_poly`]: ±1, ±2, β, α, β+1.
pub fn random_coeff_pool() -> Vec<ParamCoeff> {
    vec![
        ParamCoeff::from_int(1),
        ParamCoeff::from_int(-1),
        ParamCoeff::from_int(2),
        ParamCoeff::from_int(-2),
        ParamCoeff::beta(),
        ParamCoeff::alpha(),
        &ParamCoeff::beta() + &ParamCoeff::one(),
    ]
}

/// A random monomial: total degree uniform in `0..=max_deg`, each factor a
/// uniformly chosen variable.
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> XMonomial {
    let vars: Vec<PairIndex> = PairIndex::all(n).collect();
    if vars.is_empty() {
        return XMonomial::one(n);
    }
    let deg = rng.gen_range(0..=max_deg);
    let picks = (0..deg).map(|_| (vars[rng.gen_range(0..vars.len())], 1));
    XMonomial::from_exponents(n, picks).expect("valid indices")
}

/// A random polynomial: `1..=max_terms` random monomials of degree at most
/// `max_deg`, coefficients drawn uniformly from [`random_coeff_pool`].
pub fn random_poly<R: Rng>(rng: &mut R, n: usize, max_deg: u32, max_terms: usize) -> XPoly {
    let pool = random_coeff_pool();
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut p = XPoly::zero(n);
    for _ in 0..terms {
        let m = random_monomial(rng, n, max_deg);
        let c = pool[rng.gen_range(0..pool.len())].clone();
        p.add_term(m, c);
    }
    p
}

/// Independent random stream for trial `index` of a seeded sweep.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// The `count` strategies used per input: first, last, then random ones.
pub fn sweep_strategies<R: Rng>(rng: &mut R, count: usize) -> Vec<Strategy> {
    (0..count)
        .map(|k| match k {
            0 => Strategy::FirstByOrder,
            1 => Strategy::LastByOrder,
            _ => Strategy::Random(rng.gen()),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TUniqueConfig {
    pub n: usize,
    pub trials: usize,
    pub strategies: usize,
    pub seed: u64,
    pub max_deg: u32,
    pub max_terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TUniqueCounterexample {
    pub trial: usize,
    pub input: String,
    pub strategy_a: String,
    pub strategy_b: String,
    pub result_a: String,
    pub result_b: String,
    pub d_image_a: String,
    pub d_image_b: String,
    pub trace_a: String,
    pub trace_b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TUniqueReport {
    pub config: TUniqueConfig,
    pub inputs_checked: usize,
    pub total_moves: usize,
    /// Inputs on which at least two strategies ended at different polynomials.
    pub inputs_with_distinct_results: usize,
    pub counterexamples: Vec<TUniqueCounterexample>,
    pub passed: bool,
}

/// Reduce random inputs under several strategies and check that all final
/// polynomials have the same image under `D`.
pub fn verify_t_unique(config: &TUniqueConfig, params: &Params) -> TUniqueReport {
    assert!(config.n >= 2 && config.trials >= 1 && config.strategies >= 2);
    let per_trial: Vec<(usize, bool, Option<TUniqueCounterexample>)> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, trial as u64);
            let p = random_poly(&mut rng, config.n, config.max_deg, config.max_terms).apply_params(params);
            let strategies = sweep_strategies(&mut rng, config.strategies);
            let mut moves = 0;
            let mut results = Vec::with_capacity(strategies.len());
            for s in &strategies {
                let (q, k) = pathless_form(&p, params, s).expect("non-script strategies never fail");
                moves += k;
                results.push(q);
            }
            let distinct = results.iter().any(|q| *q != results[0]);
            let d0 = results[0].d_image();
            let bad = results
                .iter()
                .position(|q| q.d_image() != d0)
                .map(|b| counterexample(trial, &p, params, &strategies[0], &strategies[b]));
            (moves, distinct, bad)
        })
        .collect();
    let total_moves = per_trial.iter().map(|t| t.0).sum();
    let inputs_with_distinct_results = per_trial.iter().filter(|t| t.1).count();
    let counterexamples: Vec<_> = per_trial.into_iter().filter_map(|t| t.2).collect();
    TUniqueReport {
        config: config.clone(),
        inputs_checked: config.trials,
        total_moves,
        inputs_with_distinct_results,
        passed: counterexamples.is_empty(),
        counterexamples,
    }
}

fn counterexample(trial: usize, p: &XPoly, params: &Params, a: &Strategy, b: &Strategy) -> TUniqueCounterexample {
    let ra = reduce_pathless(p, params, a).expect("reduction");
    let rb = reduce_pathless(p, params, b).expect("reduction");
    TUniqueCounterexample {
        trial,
        input: p.to_string(),
        strategy_a: a.to_string(),
        strategy_b: b.to_string(),
        result_a: ra.result.to_string(),
        result_b: rb.result.to_string(),
        d_image_a: ra.result.d_image().to_string(),
        d_image_b: rb.result.d_image().to_string(),
        trace_a: ra.trace.to_text(),
        trace_b: rb.trace.to_text(),
    }
}

/// `p = x[1,2]*x[2,3]` (n = 3) and its one-move reduction `q`: congruent
/// modulo `J`, yet `D(p) != D(q)`.
pub fn d_invariance_counterexample() -> (XPoly, XPoly) {
    let p = &XPoly::x(3, 1, 2) * &XPoly::x(3, 2, 3);
    let m = p.head().expect("nonzero").0.clone();
    let q = pathless_step(&p, &m, (1, 2, 3), &Params::generic()).expect("applicable move");
    (p, q)
}
