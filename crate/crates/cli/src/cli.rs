use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::json;
use unified_core::cyclo::{is_integral, RootSpec};
use unified_core::habiro::unified_ihs;
use unified_core::jones::{colored_jones, cyclotomic_coeffs, verify_habiro_integrality, ColoredLink};
use unified_core::wrt::{tau, tau_prime, tau_su2, Manifold};
use unified_core::Error;

use crate::linkfile::load_link;
use crate::profile::Profile;
use crate::ranges::parse_list;
use crate::report::{cyc_json, poly_json, Report, Row};
use crate::suites::{self, andrews_cases, ohtsuki_cases, qbk_suite, rr_case, run_cases, unify_cases, Case};

/// Environment variable holding the worker thread count.
pub const THREADS_VAR: &str = "UNIFIED_THREADS";

#[derive(Parser, Debug)]
#[command(name = "unified", version, about = "Exact quantum invariants of links and 3-manifolds")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    So3,
    Su2,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Colored Jones polynomial of a link.
    Jones {
        /// Catalog name like `hopf(0,0)` or a JSON link file.
        #[arg(long)]
        link: String,
        #[arg(long)]
        colors: String,
    },
    /// Cyclotomic expansion coefficients C_L(k) for k <= K.
    Cyclotomic {
        #[arg(long)]
        link: String,
        #[arg(long = "K", default_value_t = 4)]
        k: u32,
    },
    /// WRT invariants at roots of unity.
    Wrt {
        #[arg(long)]
        manifold: String,
        #[arg(long, default_value = "odd:3..7")]
        roots: String,
        #[arg(long, value_enum, default_value_t = VariantArg::So3)]
        variant: VariantArg,
        /// Every primitive exponent j, not only j = 1.
        #[arg(long)]
        galois: bool,
    },
    /// Unified invariant as a truncated Habiro-ring element.
    Unify {
        #[arg(long)]
        manifold: String,
        #[arg(long = "K", default_value_t = 12)]
        k: usize,
        #[arg(long = "verify-roots")]
        verify_roots: Option<String>,
    },
    /// Ohtsuki coefficients and their stabilization modulo p.
    Ohtsuki {
        #[arg(long)]
        manifold: String,
        #[arg(long = "p", default_value = "5,7,11")]
        primes: String,
        #[arg(long = "n-max", default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        r: u64,
    },
    /// Verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub suite: Suite,
    /// Reduced bounds.
    #[arg(long, global = true, conflicts_with = "full")]
    pub quick: bool,
    /// Acceptance bounds (the default).
    #[arg(long, global = true)]
    pub full: bool,
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Every suite.
    All,
    Jones,
    Gauss,
    Lemma,
    ClosedForm,
    /// Per-root identity for Q_{b,k}.
    Laplace {
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long = "r-max")]
        r_max: Option<u64>,
    },
    Integrality,
    Unify,
    Ohtsuki,
    Andrews {
        #[arg(long = "N")]
        n: Option<String>,
        #[arg(long)]
        k: Option<String>,
    },
    Rr {
        #[arg(long, default_value_t = 50)]
        order: usize,
    },
    Cyclo,
    Kirby,
}

/// Result of one invocation.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Capacity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapacityExceeded { .. } => Failure::Capacity(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

/// Runs one command line (program name first). Exit codes: 0 all checks pass,
/// 1 a check failed, 2 usage error, 3 capacity exceeded.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome { code, stdout: text, stderr: String::new() } } else { Outcome { code, stdout: String::new(), stderr: text } };
        }
    };
    let threads = match std::env::var(THREADS_VAR) {
        Ok(v) => match v.parse::<usize>() {
            Ok(n) => n,
            Err(_) => return Outcome { code: 2, stdout: String::new(), stderr: format!("{THREADS_VAR}: not a number: `{v}`\n") },
        },
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let res = pool.install(|| dispatch(&cli.command));
    match res {
        Ok(rep) => {
            let stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&rep).expect("report serializes") + "\n",
                Format::Text => rep.to_text(),
            };
            Outcome { code: if rep.all_pass() { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Capacity(m)) => Outcome { code: 3, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

fn single(suite: &str, id: &str, inputs: serde_json::Value, got: serde_json::Value, pass: bool) -> Report {
    let row = Row { id: id.into(), inputs, expected: serde_json::Value::Null, got, pass };
    Report::new(suite, vec![(row, 0)])
}

fn manifold(spec: &str) -> Result<Manifold, Failure> {
    Ok(Manifold::new(load_link(spec)?))
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Jones { link, colors } => {
            let l = load_link(link)?;
            let cols = parse_list::<u32>(colors)?;
            let j = colored_jones(&ColoredLink::new(l, cols.clone())?)?;
            Ok(single("jones", link, json!({ "link": link, "colors": cols }), poly_json(&j), true))
        }
        Command::Cyclotomic { link, k } => {
            let l = load_link(link)?;
            let e = match cyclotomic_coeffs(&l, *k) {
                Err(Error::IntegralityViolation { index }) => {
                    return Ok(single("cyclotomic", link, json!({ "link": link, "K": k }), json!({ "integrality_violation": index }), false))
                }
                r => r?,
            };
            let rep = verify_habiro_integrality(&e);
            let mut rows: Vec<(Row, u64)> = rep
                .entries
                .iter()
                .map(|(idx, ok)| {
                    let row = Row { id: format!("C{idx:?}"), inputs: json!({ "k": idx }), expected: json!("divisible"), got: poly_json(&e.coeffs[idx]), pass: *ok };
                    (row, 0)
                })
                .collect();
            for (idx, ok) in &rep.held_out {
                rows.push((Row { id: format!("held_out{idx:?}"), inputs: json!({ "k": idx }), expected: json!(true), got: json!(ok), pass: *ok }, 0));
            }
            Ok(Report::new("cyclotomic", rows))
        }
        Command::Wrt { manifold: name, roots, variant, galois } => {
            let mf = manifold(name)?;
            let h1 = mf.h1().order().and_then(|o| u64::try_from(o).ok()).unwrap_or(0);
            let mut cases = Vec::new();
            for r in parse_list::<u64>(roots)? {
                let js: Vec<u64> = if *galois { (1..r.max(2)).filter(|j| j.gcd(&r) == 1).collect() } else { vec![1] };
                for j in js {
                    let (mf, variant) = (mf.clone(), *variant);
                    cases.push(Case::new(format!("r{r:02}/j{j:02}"), json!({ "r": r, "j": j }), move || {
                        let xi = RootSpec::new(r, j)?;
                        let (t, tp) = match variant {
                            VariantArg::So3 => (tau(&mf, xi)?, if h1 > 0 { Some(tau_prime(&mf, xi)?) } else { None }),
                            VariantArg::Su2 => (tau_su2(&mf, xi)?, None),
                        };
                        let integral = match &tp {
                            Some(x) => is_integral(x, h1),
                            None => is_integral(&t, 1),
                        };
                        let got = json!({ "r": r, "j": j, "tau": cyc_json(&t), "tau_prime": tp.as_ref().map(cyc_json), "integral": integral });
                        Ok((serde_json::Value::Null, got, true))
                    }));
                }
            }
            Ok(run_cases("wrt", cases)?)
        }
        Command::Unify { manifold: name, k, verify_roots } => {
            let link = load_link(name)?;
            let ihs = unified_ihs(&link, *k)?;
            let mut rows: Vec<(Row, u64)> = ihs
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, f)| (Row { id: format!("f{i:02}"), inputs: json!({ "k": i }), expected: serde_json::Value::Null, got: poly_json(f), pass: f.is_q_integral() }, 0))
                .collect();
            if let Some(spec) = verify_roots {
                let roots = parse_list::<u64>(spec)?;
                let rep = run_cases("unify", unify_cases(name, &link, *k, &roots)?)?;
                rows.extend(rep.rows.into_iter().map(|r| {
                    let us = rep.meta.row_micros.get(&r.id).copied().unwrap_or(0);
                    (r, us)
                }));
            }
            Ok(Report::new("unify", rows))
        }
        Command::Ohtsuki { manifold: name, primes, n_max, r } => {
            let mf = manifold(name)?;
            Ok(run_cases("ohtsuki", ohtsuki_cases(name, &mf, *n_max, &parse_list::<u64>(primes)?, *r)?)?)
        }
        Command::Verify(v) => verify(v),
    }
}

fn verify(v: &VerifyArgs) -> Result<Report, Failure> {
    let p = if v.quick { Profile::quick() } else { Profile::full() };
    let name = match &v.suite {
        Suite::All => {
            let parts = suites::SUITES.iter().map(|s| suites::by_name(s, &p)).collect::<Result<Vec<_>, _>>()?;
            return Ok(Report::merge("all", parts));
        }
        Suite::Laplace { b, k, r_max } => {
            let bs = match b {
                Some(s) => parse_list::<i64>(s)?,
                None => p.qbk_bs.clone(),
            };
            let ks = match k {
                Some(s) => parse_list::<u32>(s)?,
                None => (0..=p.qbk_k_max).collect(),
            };
            return Ok(qbk_suite(&bs, &ks, r_max.unwrap_or(p.qbk_r_max))?);
        }
        Suite::Andrews { n, k } => {
            let ns = match n {
                Some(s) => parse_list::<u32>(s)?,
                None => (1..=p.andrews_n_max).collect(),
            };
            let ks: Vec<usize> = match k {
                Some(s) => parse_list::<u32>(s)?.into_iter().map(|x| x as usize).collect(),
                None => (1..=p.andrews_k_max).collect(),
            };
            if ns.contains(&0) || ks.contains(&0) {
                return Err(Failure::Usage("N and k must be positive".into()));
            }
            return Ok(run_cases("andrews", andrews_cases(&ns, &ks))?);
        }
        Suite::Rr { order } => return Ok(run_cases("rr", vec![rr_case(*order)])?),
        Suite::Jones => "jones",
        Suite::Gauss => "gauss",
        Suite::Lemma => "lemma",
        Suite::ClosedForm => "closed_form",
        Suite::Integrality => "integrality",
        Suite::Unify => "unify",
        Suite::Ohtsuki => "ohtsuki",
        Suite::Cyclo => "cyclo",
        Suite::Kirby => "kirby",
    };
    Ok(suites::by_name(name, &p)?)
}

