//! The `subdiv` command line.
//!
//! Exit codes: 0 success, 1 failed verification or generating-function
//! mismatch, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{count_forkless, enumerate_forkless, gf_coeffs, verify_symmetry};
use crate::error::Error;
use crate::groebner::{buchberger_report, generate_basis_with, normal_form, verify_u_identities};
use crate::poly::{parse_poly, XPoly};
use crate::rewrite::{parse_script, reduce_pathless, verify_t_unique, Strategy, TUniqueConfig};
use crate::ring::{parse_rational, ParamCoeff, Params};
use crate::series::{verify_a_kills_j, verify_e_left_inverse, verify_ed_eq_ba_exhaustive};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "subdiv", version, about = "Exact computations in the subdivision algebra")]
pub struct Cli {
    /// Ambient size: variables are x[i,j] with 1 <= i < j <= n.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Value of b: "sym" or a rational such as 1, -2, 3/4.
    #[arg(long, global = true, default_value = "sym", allow_hyphen_values = true)]
    pub beta: String,
    /// Value of a: "sym" or a rational.
    #[arg(long, global = true, default_value = "sym", allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce a polynomial to pathless or forkless form.
    Reduce(ReduceArgs),
    /// Run one of the built-in verifications.
    Verify(VerifyArgs),
    /// Count monomials per degree.
    Count(CountArgs),
    /// List the basis monomials of one degree.
    Basis(BasisArgs),
    /// Print the image under x[i,j] -> t[i].
    DImage { input: String },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Pathless,
    Forkless,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    First,
    Last,
    Random,
    Script,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(long, value_enum, default_value = "pathless")]
    pub mode: Mode,
    /// Move selection for pathless mode; `random` uses --seed.
    #[arg(long, value_enum, default_value = "first")]
    pub strategy: StrategyArg,
    /// Moves for `--strategy script`, one "m=<monomial> t=(i,j,k)" per line.
    #[arg(long)]
    pub script_file: Option<PathBuf>,
    /// Print every move.
    #[arg(long)]
    pub trace: bool,
    /// Also print the image of the result under D.
    #[arg(long)]
    pub d_image: bool,
    pub input: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Groebner,
    TUnique,
    AKillsJ,
    EdBa,
    Symmetry,
    EInverse,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub which: Check,
    /// Random inputs for t-unique.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Strategies per input for t-unique.
    #[arg(long, default_value_t = 5)]
    pub strategies: usize,
    /// Maximal degree of random inputs (t-unique) or of enumerated monomials (ed-ba).
    #[arg(long)]
    pub max_deg: Option<u32>,
    #[arg(long, default_value_t = 5)]
    pub max_terms: usize,
    /// Truncation order in w for ed-ba.
    #[arg(long, default_value_t = 4)]
    pub w_order: u32,
    /// Random polynomials for e-inverse.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Forkless,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
    /// Compare with the generating function and fail on mismatch.
    #[arg(long)]
    pub check_gf: bool,
}

#[derive(Args, Debug)]
pub struct BasisArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub degree: u32,
}

/// A failure that maps to an exit code.
#[derive(Debug)]
enum Fail {
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

struct Ctx<'a> {
    n: usize,
    params: Params,
    seed: u64,
    json: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn emit_json(&mut self, v: &impl Serialize) {
        let text = serde_json::to_string_pretty(v).expect("reports serialize");
        self.line(text);
    }
}

fn parse_param(text: &str, symbol: ParamCoeff, flag: &str) -> Result<ParamCoeff, Fail> {
    if text == "sym" {
        return Ok(symbol);
    }
    parse_rational(text)
        .map(ParamCoeff::constant)
        .ok_or_else(|| Fail::Usage(format!("--{flag} must be 'sym' or a rational, got '{text}'")))
}

fn params_json(p: &Params) -> serde_json::Value {
    json!({ "beta": p.beta.to_string(), "alpha": p.alpha.to_string() })
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Fail::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Fail> {
    let n = cli.n.ok_or_else(|| Fail::Usage("--n is required".into()))?;
    if n == 0 {
        return Err(Fail::Usage("--n must be at least 1".into()));
    }
    let params = Params {
        beta: parse_param(&cli.beta, ParamCoeff::beta(), "beta")?,
        alpha: parse_param(&cli.alpha, ParamCoeff::alpha(), "alpha")?,
    };
    let mut ctx = Ctx {
        n,
        params,
        seed: cli.seed,
        json: cli.json,
        out,
    };
    match cli.command {
        Command::Reduce(a) => cmd_reduce(&mut ctx, a),
        Command::Verify(a) => cmd_verify(&mut ctx, a),
        Command::Count(a) => cmd_count(&mut ctx, a),
        Command::Basis(a) => cmd_basis(&mut ctx, a),
        Command::DImage { input } => cmd_d_image(&mut ctx, &input),
    }
}

fn read_input(ctx: &Ctx, text: &str) -> Result<XPoly, Fail> {
    Ok(parse_poly(text, ctx.n)?.apply_params(&ctx.params))
}

fn cmd_reduce(ctx: &mut Ctx, a: ReduceArgs) -> Result<i32, Fail> {
    let p = read_input(ctx, &a.input)?;
    let (result, trace) = match a.mode {
        Mode::Forkless => {
            let basis = generate_basis_with(ctx.n, &ctx.params);
            (normal_form(&p, &basis), None)
        }
        Mode::Pathless => {
            let strategy = match a.strategy {
                StrategyArg::First => Strategy::FirstByOrder,
                StrategyArg::Last => Strategy::LastByOrder,
                StrategyArg::Random => Strategy::Random(ctx.seed),
                StrategyArg::Script => {
                    let path = a
                        .script_file
                        .as_ref()
                        .ok_or_else(|| Fail::Usage("--strategy script needs --script-file".into()))?;
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Fail::Usage(format!("cannot read {}: {e}", path.display())))?;
                    Strategy::Script(parse_script(&text, ctx.n)?)
                }
            };
            let r = reduce_pathless(&p, &ctx.params, &strategy)?;
            (r.result, Some(r.trace))
        }
    };
    let d = result.d_image();
    if ctx.json {
        let steps: Vec<_> = trace
            .iter()
            .flat_map(|t| &t.steps)
            .map(|s| json!({ "monomial": s.monomial.to_string(), "triple": [s.triple.0, s.triple.1, s.triple.2] }))
            .collect();
        let v = json!({
            "n": ctx.n,
            "params": params_json(&ctx.params),
            "seed": ctx.seed,
            "input": p.to_string(),
            "result": result.to_string(),
            "d_image": d.to_string(),
            "trace": steps,
        });
        ctx.emit_json(&v);
        return Ok(EXIT_OK);
    }
    if a.trace {
        if let Some(t) = &trace {
            let _ = write!(ctx.out, "{}", t.to_text());
        }
    }
    ctx.line(result.to_string());
    if a.d_image {
        ctx.line(format!("D: {d}"));
    }
    Ok(EXIT_OK)
}

fn cmd_verify(ctx: &mut Ctx, a: VerifyArgs) -> Result<i32, Fail> {
    let n = ctx.n;
    let need = |min: usize| -> Result<(), Fail> {
        if n < min {
            Err(Fail::Usage(format!("this check needs --n >= {min}")))
        } else {
            Ok(())
        }
    };
    let (name, passed, report) = match a.which {
        Check::Groebner => {
            let b = buchberger_report(&generate_basis_with(n, &ctx.params));
            let u = verify_u_identities(n);
            let passed = b.passed && u.passed;
            ("groebner", passed, json!({ "buchberger": b, "u_identities": u }))
        }
        Check::TUnique => {
            need(2)?;
            if a.strategies < 2 || a.trials == 0 {
                return Err(Fail::Usage("t-unique needs --trials >= 1 and --strategies >= 2".into()));
            }
            let cfg = TUniqueConfig {
                n,
                trials: a.trials,
                strategies: a.strategies,
                seed: ctx.seed,
                max_deg: a.max_deg.unwrap_or(4),
                max_terms: a.max_terms,
            };
            let r = verify_t_unique(&cfg, &ctx.params);
            ("t-unique", r.passed, serde_json::to_value(&r).expect("serializable"))
        }
        Check::AKillsJ => {
            need(3)?;
            let r = verify_a_kills_j(n);
            ("a-kills-j", r.passed, serde_json::to_value(&r).expect("serializable"))
        }
        Check::EdBa => {
            let r = verify_ed_eq_ba_exhaustive(n, a.max_deg.unwrap_or(3), a.w_order);
            ("ed-ba", r.passed, serde_json::to_value(&r).expect("serializable"))
        }
        Check::Symmetry => {
            need(3)?;
            let r = verify_symmetry(n);
            ("symmetry", r.passed, serde_json::to_value(&r).expect("serializable"))
        }
        Check::EInverse => {
            let passed = verify_e_left_inverse(a.samples, ctx.seed);
            ("e-inverse", passed, json!({ "samples": a.samples, "passed": passed }))
        }
    };
    if ctx.json {
        let v = json!({
            "check": name,
            "n": n,
            "params": params_json(&ctx.params),
            "seed": ctx.seed,
            "passed": passed,
            "report": report,
        });
        ctx.emit_json(&v);
    } else {
        let verdict = if passed { "PASS" } else { "FAIL" };
        ctx.line(format!("{verdict} {name} n={n} seed={}", ctx.seed));
        if !passed {
            ctx.line(serde_json::to_string_pretty(&report).expect("serializable"));
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_count(ctx: &mut Ctx, a: CountArgs) -> Result<i32, Fail> {
    let Family::Forkless = a.family;
    let table = count_forkless(ctx.n, a.max_degree);
    let gf = if a.check_gf {
        Some(gf_coeffs(ctx.n, a.max_degree)?)
    } else {
        None
    };
    let matches = gf.as_ref().is_none_or(|g| g.counts == table.counts);
    if ctx.json {
        let v = json!({
            "n": ctx.n,
            "counts": table.counts,
            "generating_function": gf.as_ref().map(|g| &g.counts),
            "matches": matches,
        });
        ctx.emit_json(&v);
    } else {
        let _ = write!(ctx.out, "{}", table.to_csv());
        if let Some(g) = &gf {
            if !matches {
                let _ = writeln!(ctx.out, "generating function disagrees:");
                let _ = write!(ctx.out, "{}", g.to_csv());
            }
        }
    }
    Ok(if matches { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_basis(ctx: &mut Ctx, a: BasisArgs) -> Result<i32, Fail> {
    let Family::Forkless = a.family;
    let ms: Vec<String> = enumerate_forkless(ctx.n, a.degree)
        .iter()
        .map(ToString::to_string)
        .collect();
    if ctx.json {
        let v = json!({ "n": ctx.n, "degree": a.degree, "monomials": ms });
        ctx.emit_json(&v);
    } else {
        for m in ms {
            ctx.line(m);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_d_image(ctx: &mut Ctx, input: &str) -> Result<i32, Fail> {
    let p = read_input(ctx, input)?;
    let d = p.d_image();
    if ctx.json {
        let v = json!({ "n": ctx.n, "input": p.to_string(), "d_image": d.to_string() });
        ctx.emit_json(&v);
    } else {
        ctx.line(d.to_string());
    }
    Ok(EXIT_OK)
}
