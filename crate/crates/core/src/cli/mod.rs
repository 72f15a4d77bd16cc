//! The `grassk` command line.

mod report;

pub use report::{col, emit_report, Column, Format, Report};

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::charring::{identity_suite, Caps, CharError};
use crate::chern::{
    build_knk, build_p, ch_gamma, compare_knk_k0, verify_ch_surjectivity, verify_eq22_chain,
    ChernError,
};
use crate::exactmath::{binomial, cokernel_group, smith_normal_form, ExactError, IntMatrix};
use crate::ktheory::{
    build_presentation, compute_kgroups, eliminate_mu, hopf_class_order, k0_gb,
    verify_barb_reduced, Engine, GrassmannParams, KError, KOptions,
};
use crate::poly::{PolyError, Polynomial, Var};
use crate::zgb::{
    q_dimension, quotient_group_structure, strong_groebner, Budget, IdealPresentation,
    MonomialOrder, ZgbError,
};

#[derive(Parser, Debug)]
#[command(name = "grassk", version, about = "K-theory and cohomology of real Grassmannians")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// K^0 and K^1 for n = 0 mod 4, k odd.
    Kgroups(KgroupsArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// The even rational cohomology P(n,k).
    Cohomology(CohomologyArgs),
    /// Order of the Hopf class: exact, or bounds.
    HopfOrder(CasesArgs),
    /// Strong Gröbner basis of an ideal.
    Gb(GbArgs),
    /// Smith normal form of an integer matrix.
    Snf(SnfArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CasesArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Inclusive range of n, e.g. "8..16".
    #[arg(long)]
    pub range: Option<String>,
    #[arg(long)]
    pub budget_ms: Option<u64>,
    #[command(flatten)]
    #[serde(skip)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineArg {
    Gb,
    Schur,
    Both,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct KgroupsArgs {
    #[command(flatten)]
    pub cases: CasesArgs,
    #[arg(long, value_enum, default_value = "both")]
    pub engine: EngineArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Suite {
    #[value(name = "charring")]
    #[serde(rename = "charring")]
    Charring,
    #[value(name = "barB")]
    #[serde(rename = "barB")]
    BarB,
    #[value(name = "chern")]
    #[serde(rename = "chern")]
    Chern,
    #[value(name = "knk")]
    #[serde(rename = "knk")]
    Knk,
    #[value(name = "all")]
    #[serde(rename = "all")]
    All,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 6)]
    pub max_m: usize,
    #[arg(long, default_value_t = 3)]
    pub max_st: usize,
    /// Restrict the barB, chern and knk suites to one case.
    #[arg(long, requires = "k")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub k: Option<usize>,
    #[arg(long)]
    pub budget_ms: Option<u64>,
    #[command(flatten)]
    #[serde(skip)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CohomologyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Degree cap for ch(gamma); defaults to 2k(n-k).
    #[arg(long)]
    pub cap: Option<u32>,
    #[command(flatten)]
    #[serde(skip)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RingArg {
    Z,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GbArgs {
    /// Generators separated by ';'.
    #[arg(long)]
    pub gens: String,
    /// Variables, largest first, separated by ','; defaults to those in the generators.
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long, value_enum, default_value = "z")]
    pub ring: RingArg,
    #[arg(long, value_enum, default_value = "grevlex")]
    pub order: OrderArg,
    #[arg(long)]
    pub budget_ms: Option<u64>,
    #[command(flatten)]
    #[serde(skip)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SnfArgs {
    /// Rows as JSON, e.g. "[[2,4],[6,8]]".
    #[arg(long)]
    pub matrix: String,
    #[command(flatten)]
    #[serde(skip)]
    pub output: OutputArgs,
}

/// Exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INVALID, message: message.into() }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INTERNAL, message: message.into() }
    }
}

impl From<KError> for CliError {
    fn from(e: KError) -> Self {
        match e {
            KError::InvalidParams(_) | KError::UnsupportedParity { .. } => CliError::invalid(e.to_string()),
            _ => CliError::internal(e.to_string()),
        }
    }
}

impl From<ChernError> for CliError {
    fn from(e: ChernError) -> Self {
        match e {
            ChernError::K(k) => k.into(),
            ChernError::Params(_) | ChernError::CapExceeded(_) => CliError::invalid(e.to_string()),
            _ => CliError::internal(e.to_string()),
        }
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::Params(_) | CharError::InvalidSymbol(_) | CharError::CapExceeded(_) => {
                CliError::invalid(e.to_string())
            }
            _ => CliError::internal(e.to_string()),
        }
    }
}

impl From<ZgbError> for CliError {
    fn from(e: ZgbError) -> Self {
        match e {
            ZgbError::UndeclaredVariable(_) => CliError::invalid(e.to_string()),
            _ => CliError::internal(e.to_string()),
        }
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::invalid(e.to_string())
    }
}

fn budget(ms: Option<u64>) -> Result<Budget, CliError> {
    match ms {
        Some(0) => Err(CliError::invalid("--budget-ms must be positive")),
        Some(ms) => Ok(Budget::millis(ms)),
        None => Ok(Budget::unlimited()),
    }
}

fn progress(msg: &str, start: Instant) {
    eprintln!("[grassk] {msg} ({} ms)", start.elapsed().as_millis());
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::invalid(format!("bad range {s:?}, expected \"n1..n2\""));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Explicit `(n, k)` or every `(n, k)` with `n` in the range that `keep` accepts.
fn cases(args: &CasesArgs, keep: impl Fn(usize, usize) -> bool) -> Result<Vec<(usize, usize)>, CliError> {
    match (&args.range, args.n, args.k) {
        (Some(_), Some(_), _) => Err(CliError::invalid("give either --n or --range")),
        (Some(r), None, k) => {
            let (a, b) = parse_range(r)?;
            let mut out = Vec::new();
            for n in a..=b {
                for kk in 2..=n / 2 {
                    if k.is_none_or(|k| k == kk) && keep(n, kk) {
                        out.push((n, kk));
                    }
                }
            }
            Ok(out)
        }
        (None, Some(n), Some(k)) => {
            GrassmannParams::new(n, k)?;
            Ok(vec![(n, k)])
        }
        _ => Err(CliError::invalid("need --n and --k, or --range")),
    }
}

fn kgroups(args: &KgroupsArgs) -> Result<Report, CliError> {
    let list = cases(&args.cases, |n, k| n % 4 == 0 && k % 2 == 1)?;
    let engine = match args.engine {
        EngineArg::Gb => Engine::Gb,
        EngineArg::Schur => Engine::Schur,
        EngineArg::Both => Engine::Both,
    };
    let opts = KOptions {
        engine,
        budget: budget(args.cases.budget_ms)?,
        ..KOptions::default()
    };
    let mut report = Report::new(
        "kgroups",
        to_value(args),
        vec![
            col("n", "/n"),
            col("k", "/k"),
            col("rank K0", "/K0/rank"),
            col("torsion", "/K0/invariant_factors"),
            col("r", "/hopf_order_exponent"),
        ],
    );
    for (n, k) in list {
        let start = Instant::now();
        let g = compute_kgroups(n, k, &opts)?;
        progress(&format!("kgroups n={n} k={k}"), start);
        report.push(g.to_json(), g.passed());
    }
    Ok(report)
}

fn default_or(args: &VerifyArgs, list: &[(usize, usize)]) -> Vec<(usize, usize)> {
    match (args.n, args.k) {
        (Some(n), Some(k)) => vec![(n, k)],
        _ => list.to_vec(),
    }
}

const K_CASES: [(usize, usize); 3] = [(8, 3), (12, 3), (12, 5)];
const CHERN_CASES: [(usize, usize); 5] = [(5, 2), (6, 2), (7, 3), (8, 3), (9, 4)];

fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let mut report = Report::new(
        "verify",
        to_value(args),
        vec![col("suite", "/suite"), col("case", "/case"), col("pass", "/pass")],
    );
    let all = args.suite == Suite::All;
    let mut row = |suite: &str, case: String, pass: bool, detail: Value| {
        report.push(json!({"suite": suite, "case": case, "pass": pass, "detail": detail}), pass);
    };
    let budget = budget(args.budget_ms)?;
    if all || args.suite == Suite::Charring {
        let start = Instant::now();
        let caps = Caps { max_m: args.max_m, max_st: args.max_st };
        for r in identity_suite(&caps)? {
            row("charring", format!("{} {}", r.case, r.params), r.pass, to_value(&r));
        }
        progress("charring suite", start);
    }
    if all || args.suite == Suite::BarB {
        for (n, k) in default_or(args, &K_CASES) {
            let start = Instant::now();
            let red = eliminate_mu(&build_presentation(n, k)?)?;
            let ring = k0_gb(&red, budget)?;
            let r = verify_barb_reduced(&red, &ring, budget)?;
            row("barB", format!("n={n},k={k}"), r.all_pass(), to_value(&r));
            progress(&format!("barB n={n} k={k}"), start);
        }
    }
    if all || args.suite == Suite::Chern {
        for (n, k) in default_or(args, &CHERN_CASES) {
            let start = Instant::now();
            let r = verify_ch_surjectivity(n, k)?;
            row("chern", format!("n={n},k={k}"), r.pass, to_value(&r));
            progress(&format!("chern n={n} k={k}"), start);
        }
    }
    if all || args.suite == Suite::Knk {
        let start = Instant::now();
        if args.n.is_none() {
            for s in 1..=args.max_st {
                for t in 1..=args.max_st {
                    let r = verify_eq22_chain(s, t)?;
                    row("knk", format!("eq22 s={s},t={t}"), r.pass, to_value(&r));
                }
            }
        }
        for (n, k) in default_or(args, &CHERN_CASES) {
            let r = build_knk(n, k)?.report(budget)?;
            row("knk", format!("Kbar n={n},k={k}"), r.pass, to_value(&r));
        }
        let compare = match (args.n, args.k) {
            (Some(n), Some(k)) if n % 4 == 0 && k % 2 == 1 => vec![(n, k)],
            (Some(_), Some(_)) => Vec::new(),
            _ => K_CASES.to_vec(),
        };
        for (n, k) in compare {
            let r = compare_knk_k0(n, k)?;
            row("knk", format!("compare n={n},k={k}"), r.pass, to_value(&r));
        }
        progress("knk suite", start);
    }
    Ok(report)
}

fn rational_json(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

fn cohomology(args: &CohomologyArgs) -> Result<Report, CliError> {
    let ring = build_p(args.n, args.k)?;
    let cap = args.cap.unwrap_or(ring.default_cap());
    let ch = ch_gamma(&ring, cap)?;
    let expected = binomial((ring.s + ring.t) as u64, ring.s as u64);
    let graded: serde_json::Map<String, Value> = ring
        .graded_dimensions()
        .into_iter()
        .map(|(d, c)| (d.to_string(), json!(c)))
        .collect();
    let row = json!({
        "n": ring.n,
        "k": ring.k,
        "s": ring.s,
        "t": ring.t,
        "dimension": ring.q_dimension(),
        "expected_dimension": crate::exactmath::big_to_json(&expected),
        "graded_dimensions": graded,
        "basis": ring.basis.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "relations": ring.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "cap": cap,
        "ch_gamma": ch.value.to_string(),
        "ch_gamma_constant": rational_json(&ch.constant()),
    });
    let mut report = Report::new(
        "cohomology",
        to_value(args),
        vec![col("n", "/n"), col("k", "/k"), col("dimension", "/dimension"), col("ch(gamma)", "/ch_gamma")],
    );
    report.push(row, BigInt::from(ring.q_dimension()) == expected);
    Ok(report)
}

fn hopf_order(args: &CasesArgs) -> Result<Report, CliError> {
    let list = cases(args, |n, k| n % 4 != 0 || k % 2 == 1)?;
    let mut report = Report::new(
        "hopf-order",
        to_value(args),
        vec![col("n", "/n"), col("k", "/k"), col("r", "/exact"), col("lower", "/lower"), col("upper", "/upper")],
    );
    for (n, k) in list {
        let start = Instant::now();
        let p = GrassmannParams::new(n, k)?;
        let (row, pass) = if p.is_exact_case() {
            let r = hopf_class_order(n, k)? as usize;
            let (lo, hi) = (2 * p.l - 1, p.m - 1);
            (json!({"n": n, "k": k, "exact": r, "lower": lo, "upper": hi}), lo <= r && r <= hi)
        } else if p.j != 0 {
            let (lo, hi) = crate::ktheory::hopf_order_bounds(n, k)?;
            (json!({"n": n, "k": k, "exact": null, "lower": lo, "upper": hi}), true)
        } else {
            return Err(CliError::invalid(format!(
                "no bound on the Hopf order for n={n} divisible by 4 with k={k} even"
            )));
        };
        progress(&format!("hopf-order n={n} k={k}"), start);
        report.push(row, pass);
    }
    Ok(report)
}

fn gb_report<C: crate::poly::Coeff>(args: &GbArgs) -> Result<(Value, crate::zgb::StrongGB<C>), CliError> {
    let gens = args
        .gens
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Polynomial<C>>())
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = match &args.vars {
        Some(v) => IdealPresentation::new(v.split(',').map(|x| Var::new(x.trim())).collect(), gens),
        None => IdealPresentation::from_generators(gens),
    };
    let order = match args.order {
        OrderArg::Grevlex => MonomialOrder::Grevlex,
        OrderArg::Lex => MonomialOrder::Lex,
    };
    let gb = strong_groebner(&ideal.with_order(order), budget(args.budget_ms)?)?;
    Ok((gb.to_json(), gb))
}

fn gb(args: &GbArgs) -> Result<Report, CliError> {
    let mut row = match args.ring {
        RingArg::Z => {
            let (mut v, gb) = gb_report::<BigInt>(args)?;
            v["quotient"] = match quotient_group_structure(&gb) {
                Ok(q) => q.to_json(),
                Err(ZgbError::NotFinitelyGenerated(_)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            v
        }
        RingArg::Q => {
            let (mut v, gb) = gb_report::<BigRational>(args)?;
            v["q_dimension"] = match q_dimension(&gb) {
                Ok(d) => json!(d),
                Err(ZgbError::NotFinitelyGenerated(_)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            v
        }
    };
    row["size"] = json!(row["basis"].as_array().map_or(0, Vec::len));
    let mut report = Report::new(
        "gb",
        to_value(args),
        vec![col("ring", "/ring"), col("order", "/order"), col("size", "/size"), col("basis", "/basis")],
    );
    report.push(row, true);
    Ok(report)
}

fn snf(args: &SnfArgs) -> Result<Report, CliError> {
    let rows: Vec<Vec<BigInt>> = serde_json::from_str::<Vec<Vec<Value>>>(&args.matrix)
        .map_err(|e| CliError::invalid(format!("bad matrix: {e}")))?
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| {
                    let s = match x {
                        Value::String(s) => s,
                        Value::Number(n) => n.to_string(),
                        _ => return Err(CliError::invalid("matrix entries must be integers")),
                    };
                    s.parse::<BigInt>().map_err(|_| CliError::invalid(format!("not an integer: {s}")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    let m = IntMatrix::from_rows(cols, rows)?;
    let d = smith_normal_form(&m)?;
    let coker = cokernel_group(&m, cols)?;
    let row = json!({
        "rows": m.rows(),
        "cols": cols,
        "rank": d.rank(),
        "invariant_factors": d.invariant_factors.iter().map(crate::exactmath::big_to_json).collect::<Vec<_>>(),
        "cokernel": coker,
    });
    let mut report = Report::new(
        "snf",
        to_value(args),
        vec![col("rows", "/rows"), col("cols", "/cols"), col("rank", "/rank"), col("invariant factors", "/invariant_factors")],
    );
    report.push(row, true);
    Ok(report)
}

/// Runs a parsed command; the report and the output options.
pub fn run(command: &Command) -> Result<(Report, OutputArgs), CliError> {
    Ok(match command {
        Command::Kgroups(a) => (kgroups(a)?, a.cases.output.clone()),
        Command::Verify(a) => (verify(a)?, a.output.clone()),
        Command::Cohomology(a) => (cohomology(a)?, a.output.clone()),
        Command::HopfOrder(a) => (hopf_order(a)?, a.output.clone()),
        Command::Gb(a) => (gb(a)?, a.output.clone()),
        Command::Snf(a) => (snf(a)?, a.output.clone()),
    })
}

/// Parses `argv`, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(argv: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_INVALID,
            };
        }
    };
    let (report, output) = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return e.code;
        }
    };
    finish(&report, &output, stdout)
}

/// Writes the report and maps its outcome to an exit code.
pub fn finish(report: &Report, output: &OutputArgs, stdout: &mut dyn Write) -> i32 {
    let bytes = match emit_report(report, output.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let written = match &output.out {
        Some(path) => std::fs::write(path, &bytes),
        None => stdout.write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_INTERNAL;
    }
    if report.pass {
        EXIT_PASS
    } else {
        EXIT_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let argv = std::iter::once("grassk").chain(args.iter().copied());
        let code = main_with_args(argv, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn kgroups_8_3() {
        let (code, out) = run_args(&["kgroups", "--n", "8", "--k", "3", "--engine", "both"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"][0]["K0"]["rank"], 3);
        assert_eq!(v["results"][0]["engines_agree"], true);
        assert_eq!(run_args(&["kgroups", "--n", "8", "--k", "3"]).1, out);
    }

    #[test]
    fn unsupported_parity_is_invalid_input() {
        let (code, out) = run_args(&["kgroups", "--n", "9", "--k", "3"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(out.is_empty());
        assert_eq!(CliError::from(KError::UnsupportedParity { n: 9, k: 3 }).message, crate::ktheory::UNSUPPORTED_PARITY);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["kgroups", "--n", "8"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["gb", "--gens", "x^2 +"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["kgroups", "--n", "8", "--k", "3", "--budget-ms", "0"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["--help"]).0, EXIT_PASS);
        let budget = ["kgroups", "--n", "16", "--k", "5", "--engine", "gb", "--budget-ms", "1"];
        assert_eq!(run_args(&budget).0, EXIT_INTERNAL);
        // an empty range is a valid, passing report
        let (code, out) = run_args(&["kgroups", "--range", "9..11"]);
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["results"], json!([]));
    }

    #[test]
    fn failed_verification_exits_2() {
        let mut report = Report::new("verify", json!({}), vec![col("pass", "/pass")]);
        report.push(json!({"pass": true}), true);
        report.push(json!({"pass": false}), false);
        let json_out = OutputArgs { format: Format::Json, out: None };
        let mut out = Vec::new();
        assert_eq!(finish(&report, &json_out, &mut out), EXIT_FAILED);
        let v: Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["pass"], false);
        let bad_path = OutputArgs { format: Format::Md, out: Some("/nonexistent/dir/report.md".into()) };
        assert_eq!(finish(&report, &bad_path, &mut Vec::new()), EXIT_INTERNAL);
        assert_eq!(run_args(&["cohomology", "--n", "8", "--k", "3", "--cap", "1000"]).0, EXIT_INVALID);
    }

    #[test]
    fn markdown_kgroups_table() {
        let (code, out) = run_args(&["kgroups", "--n", "8", "--k", "3", "--engine", "schur", "--format", "md"]);
        assert_eq!(code, 0);
        assert!(out.contains("| n | k | rank K0 | torsion | r |"));
        assert!(out.contains("| 8 | 3 | 3 | 8,8,8 | 3 |"));
    }

    #[test]
    fn small_commands() {
        let (code, out) = run_args(&["snf", "--matrix", "[[2,4],[6,8]]", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "rows,cols,rank,invariant factors\n2,2,2,\"2,4\"\n");
        let (code, out) = run_args(&["gb", "--gens", "x^2; x*y; y^2; 2*x"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"][0]["quotient"]["group"]["rank"], 2);
        let (code, out) = run_args(&["hopf-order", "--n", "10", "--k", "3"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["results"][0]["lower"].clone(), v["results"][0]["upper"].clone()), (json!(3), json!(5)));
        assert_eq!(run_args(&["hopf-order", "--n", "8", "--k", "2"]).0, EXIT_INVALID);
        let (code, out) = run_args(&["cohomology", "--n", "9", "--k", "4"]);
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["results"][0]["dimension"], 6);
    }

    #[test]
    fn verify_charring() {
        let (code, out) = run_args(&["verify", "--suite", "charring", "--max-m", "6"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["results"].as_array().unwrap().len() >= 40);
    }
}
