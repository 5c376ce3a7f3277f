//! Verification suites. Each builds a list of independent cases, runs them in
//! parallel and reports rows in case order.

use std::time::Instant;

use num_integer::Integer;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use unified_core::cyclo::{gauss_sum, CycNumber, RootSpec};
use unified_core::habiro::{hab_eval, poincare_series, stabilization_check, taylor_at, unified_ihs};
use unified_core::jones::{colored_jones, cyclotomic_coeffs, verify_habiro_integrality, ColoredLink};
use unified_core::laplace::{andrews_check, closed_form_check, rr_check, verify_laplace_lemma, verify_q_bk, AndrewsParams, RootOutcome};
use unified_core::links::{catalog, FramedLink};
use unified_core::qcalc::{
    bareiss_det, cyclotomic_coeffs as phi_coeffs, cyclotomic_poly, euler_phi, factorize, is_prime, qint, BivariatePoly, LaurentPoly,
};
use unified_core::wrt::{tau, Manifold};
use unified_core::{BigInt, Error};

use crate::profile::Profile;
use crate::report::{cyc_json, poly_json, Report, Row};

type Outcome = unified_core::Result<(Value, Value, bool)>;

pub struct Case {
    id: String,
    inputs: Value,
    check: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Case {
    pub fn new(id: impl Into<String>, inputs: Value, check: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Self { id: id.into(), inputs, check: Box::new(check) }
    }
}

/// Capacity errors abort the suite; any other error fails its row.
pub fn run_cases(suite: &str, cases: Vec<Case>) -> unified_core::Result<Report> {
    let rows: Vec<unified_core::Result<(Row, u64)>> = cases
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let (expected, got, pass) = match (c.check)() {
                Ok(x) => x,
                Err(e @ Error::CapacityExceeded { .. }) => return Err(e),
                Err(e) => (Value::Null, json!({ "error": e.to_string() }), false),
            };
            let row = Row { id: c.id, inputs: c.inputs, expected, got, pass };
            Ok((row, start.elapsed().as_micros() as u64))
        })
        .collect();
    Ok(Report::new(suite, rows.into_iter().collect::<unified_core::Result<Vec<_>>>()?))
}

fn eq_row<T: PartialEq>(expected: T, got: T, show: impl Fn(&T) -> Value) -> Outcome {
    let pass = expected == got;
    Ok((show(&expected), show(&got), pass))
}

fn flag(ok: bool) -> Outcome {
    Ok((json!(true), json!(ok), ok))
}

fn jones(link: &FramedLink, colors: &[u32]) -> unified_core::Result<LaurentPoly> {
    colored_jones(&ColoredLink::new(link.clone(), colors.to_vec())?)
}

fn with_framing(link: &FramedLink, i: usize, delta: i64) -> unified_core::Result<FramedLink> {
    let mut fr = link.framings().to_vec();
    fr[i] += delta;
    FramedLink::new(link.strands(), link.word().to_vec(), fr)
}

fn random_catalog(rng: &mut ChaCha8Rng) -> String {
    let f = rng.gen_range(-2i64..=2);
    match rng.gen_range(0..5) {
        0 => format!("unknot({f})"),
        1 => format!("hopf({f},{})", rng.gen_range(-2i64..=2)),
        2 => format!("trefoil_left({f})"),
        3 => format!("trefoil_right({f})"),
        _ => format!("figure8({f})"),
    }
}

/// Unknot values, framing covariance and disjoint unions on random catalog
/// links, and q-integrality at odd colors.
pub fn jones_suite(p: &Profile) -> unified_core::Result<Report> {
    let mut cases = Vec::new();
    for n in 1..=p.jones_n_max {
        cases.push(Case::new(format!("unknot/{n}"), json!({ "n": n }), move || {
            eq_row(qint(n as i64), jones(&FramedLink::unknot(0), &[n])?, poly_json)
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..p.jones_cases {
        let a = random_catalog(&mut rng);
        if i % 2 == 0 {
            let la = catalog(&a)?;
            let cols: Vec<u32> = (0..la.num_components()).map(|_| rng.gen_range(1..=4)).collect();
            let comp = rng.gen_range(0..la.num_components());
            cases.push(Case::new(format!("framing/{i:03}"), json!({ "link": a, "colors": cols, "component": comp }), move || {
                let n = cols[comp] as i64;
                let want = jones(&la, &cols)?.shift_v(n * n - 1);
                eq_row(want, jones(&with_framing(&la, comp, 1)?, &cols)?, poly_json)
            }));
        } else {
            let b = random_catalog(&mut rng);
            let (la, lb) = (catalog(&a)?, catalog(&b)?);
            let ca: Vec<u32> = (0..la.num_components()).map(|_| rng.gen_range(1..=3)).collect();
            let cb: Vec<u32> = (0..lb.num_components()).map(|_| rng.gen_range(1..=3)).collect();
            cases.push(Case::new(format!("union/{i:03}"), json!({ "links": [a, b], "colors": [ca, cb] }), move || {
                let want = &jones(&la, &ca)? * &jones(&lb, &cb)?;
                let cols: Vec<u32> = ca.iter().chain(&cb).copied().collect();
                eq_row(want, jones(&la.disjoint_union(&lb), &cols)?, poly_json)
            }));
        }
    }
    for name in ["trefoil_left(0)", "trefoil_right(0)", "figure8(0)", "trefoil_left(-1)", "figure8(2)"] {
        for n in (1..=p.jones_n_max.min(7)).step_by(2) {
            let link = catalog(name)?;
            cases.push(Case::new(format!("odd/{name}/{n}"), json!({ "link": name, "n": n }), move || {
                flag(jones(&link, &[n])?.is_q_integral())
            }));
        }
    }
    run_cases("jones", cases)
}

/// `gamma_b(xi) != 0` and `gamma_b(xi) = c gamma_{b/c}(xi^c)` with `c = gcd(b, r)`.
pub fn gauss_suite(p: &Profile) -> unified_core::Result<Report> {
    let mut cases = Vec::new();
    for r in (3..=p.gauss_r_max).step_by(2) {
        for b in 1..=p.gauss_b_max {
            cases.push(Case::new(format!("r{r:02}/b{b:02}"), json!({ "r": r, "b": b }), move || {
                let xi = RootSpec::primitive(r);
                let c = (b as u64).gcd(&r);
                let g = gauss_sum(b, xi)?;
                let reduced = gauss_sum(b / c as i64, xi.power(c as i64))?.scale(&BigInt::from(c).into());
                let nonzero = !g.is_zero();
                Ok((cyc_json(&reduced), cyc_json(&g), nonzero && g == reduced))
            }));
        }
    }
    run_cases("gauss", cases)
}

fn random_f(rng: &mut ChaCha8Rng) -> BivariatePoly {
    let mut f = BivariatePoly::zero();
    for _ in 0..rng.gen_range(1..=8) {
        f.add_term(4 * rng.gen_range(-5i64..=5), rng.gen_range(-6i64..=6), BigInt::from(rng.gen_range(-4i64..=4)));
    }
    f
}

/// The transform lemma on random polynomials in `q^{+-1}, z^{+-1}`, at every primitive root.
pub fn lemma_suite(p: &Profile) -> unified_core::Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a71ace);
    let mut cases = Vec::new();
    for &b in &p.lemma_bs {
        for &r in &p.lemma_rs {
            for s in 0..p.lemma_samples {
                let f = random_f(&mut rng);
                let id = format!("b{b}/r{r}/{s:02}");
                cases.push(Case::new(id, json!({ "b": b, "r": r, "f": f.to_string() }), move || flag(verify_laplace_lemma(&f, b, r)?)));
            }
        }
    }
    run_cases("lemma", cases)
}

pub fn closed_form_suite(p: &Profile) -> unified_core::Result<Report> {
    let cases = (0..=p.closed_form_k_max)
        .map(|k| Case::new(format!("k{k:02}"), json!({ "k": k }), move || flag(closed_form_check(k))))
        .collect();
    run_cases("closed_form", cases)
}

/// The per-root identity for `Q_{b,k}`. Roots with `r > 2k+1` must hold; the
/// rest are recorded, and a note counts how many of them fail.
pub fn qbk_suite(bs: &[i64], ks: &[u32], r_max: u64) -> unified_core::Result<Report> {
    let mut cases = Vec::new();
    for &b in bs {
        for &k in ks {
            cases.push(Case::new(format!("b{b}/k{k}"), json!({ "b": b, "k": k, "r_max": r_max }), move || {
                let res = verify_q_bk(b, k, r_max)?;
                let mut high_ok = true;
                let mut low = Vec::new();
                for (xi, out) in &res {
                    if xi.m > 2 * k as u64 + 1 {
                        high_ok &= *out == RootOutcome::Holds;
                    } else {
                        low.push(json!([xi.m, xi.j, format!("{out:?}")]));
                    }
                }
                let got = json!({ "roots": res.len(), "above_2k+1_hold": high_ok, "at_or_below_2k+1": low });
                Ok((json!({ "above_2k+1_hold": true }), got, high_ok))
            }));
        }
    }
    let mut rep = run_cases("qbk", cases)?;
    let (mut low_total, mut low_hold) = (0usize, 0usize);
    for row in &rep.rows {
        if let Some(low) = row.got.get("at_or_below_2k+1").and_then(Value::as_array) {
            low_total += low.len();
            low_hold += low.iter().filter(|x| x[2] == "Holds").count();
        }
    }
    rep.notes.push(format!("literal identity at r <= 2k+1: {low_hold} of {low_total} roots hold"));
    Ok(rep)
}

pub fn literal_qbk_failures(rep: &Report) -> Option<(usize, usize)> {
    let note = rep.notes.iter().find(|n| n.starts_with("literal identity"))?;
    let nums: Vec<usize> = note.split(|c: char| !c.is_ascii_digit()).filter_map(|s| s.parse().ok()).collect();
    let (hold, total) = (*nums.get(2)?, *nums.get(3)?);
    Some((total - hold, total))
}

/// Divisibility of every `C_L(k)` and reconstruction of `J_L(n) [n]` on the grid.
pub fn integrality_suite(p: &Profile) -> unified_core::Result<Report> {
    let k_max = p.integrality_k;
    let mut cases = Vec::new();
    for name in ["trefoil_left(0)", "trefoil_right(0)", "figure8(0)"] {
        let link = catalog(name)?;
        cases.push(Case::new(format!("{name}/divisibility"), json!({ "link": name, "K": k_max }), {
            let link = link.clone();
            move || {
                let e = cyclotomic_coeffs(&link, k_max)?;
                let rep = verify_habiro_integrality(&e);
                let got = json!({ "entries": rep.entries.len(), "held_out": rep.held_out.iter().map(|h| h.1).collect::<Vec<_>>() });
                Ok((json!("all divisible"), got, rep.all_pass() && rep.entries.len() == k_max as usize + 1))
            }
        }));
        cases.push(Case::new(format!("{name}/reconstruction"), json!({ "link": name, "K": k_max }), move || {
            let e = cyclotomic_coeffs(&link, k_max)?;
            let mut bad = Vec::new();
            for n in 1..=k_max + 1 {
                if e.reconstruct(&[n]) != &jones(&link, &[n])? * &qint(n as i64) {
                    bad.push(n);
                }
            }
            Ok((json!([]), json!(bad), bad.is_empty()))
        }));
    }
    run_cases("integrality", cases)
}

/// `hab_eval(I_M, xi) = tau(M, xi)` at the given roots, all primitive exponents.
pub fn unify_cases(name: &str, link: &FramedLink, k_max: usize, roots: &[u64]) -> unified_core::Result<Vec<Case>> {
    let ihs = std::sync::Arc::new(unified_ihs(link, k_max)?);
    let mf = std::sync::Arc::new(Manifold::new(link.clone()));
    let mut cases = Vec::new();
    for &r in roots {
        let (ihs, mf) = (ihs.clone(), mf.clone());
        cases.push(Case::new(format!("{name}/r{r:02}"), json!({ "manifold": name, "K": k_max, "r": r }), move || {
            let mut got = Vec::new();
            let mut want = Vec::new();
            for j in (1..r).filter(|j| j.gcd(&r) == 1) {
                let xi = RootSpec::new(r, j)?;
                want.push(tau(&mf, xi)?);
                got.push(hab_eval(&ihs, xi)?);
            }
            eq_row(want, got, |v: &Vec<CycNumber>| json!(v.iter().map(cyc_json).collect::<Vec<_>>()))
        }));
    }
    Ok(cases)
}

/// The Poincare sphere through both pipelines, plus agreement with the closed-form series.
pub fn unify_suite(p: &Profile) -> unified_core::Result<Report> {
    let link = FramedLink::poincare();
    let roots: Vec<u64> = (3..=p.unify_r_max).step_by(2).collect();
    let mut cases = unify_cases("poincare", &link, p.unify_k, &roots)?;
    let (k, depth) = (p.unify_k, p.taylor_depth);
    let ihs = std::sync::Arc::new(unified_ihs(&link, k)?);
    let closed = std::sync::Arc::new(poincare_series(k)?);
    for &r in &roots {
        let (ihs, closed) = (ihs.clone(), closed.clone());
        cases.push(Case::new(format!("closed_form/r{r:02}"), json!({ "K": k, "r": r }), move || {
            let xi = RootSpec::primitive(r);
            eq_row(hab_eval(&closed, xi)?, hab_eval(&ihs, xi)?, cyc_json)
        }));
    }
    cases.push(Case::new("closed_form/taylor", json!({ "K": k, "depth": depth }), move || {
        let (a, b) = (taylor_at(&closed, 1, depth)?, taylor_at(&ihs, 1, depth)?);
        let show = |t: &Vec<CycNumber>| json!(t.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        eq_row(a.coeffs, b.coeffs, show)
    }));
    run_cases("unify", cases)
}

pub fn ohtsuki_cases(name: &str, mf: &Manifold, n_max: usize, primes: &[u64], r: u64) -> unified_core::Result<Vec<Case>> {
    let mut cases = Vec::new();
    for &pr in primes {
        let mf = mf.clone();
        cases.push(Case::new(format!("{name}/p{pr:02}"), json!({ "manifold": name, "p": pr, "n_max": n_max, "r": r }), move || {
            let rows = stabilization_check(&mf, n_max, &[pr], r)?;
            let ok = rows.iter().all(|x| x.holds) && !rows.is_empty();
            let got: Vec<Value> = rows
                .iter()
                .map(|x| json!({ "n": x.n, "a_n": cyc_json(&x.a_n), "a_pn": cyc_json(&x.a_pn), "holds": x.holds }))
                .collect();
            Ok((json!("a_n = a_{p,n} mod p"), json!(got), ok))
        }));
    }
    Ok(cases)
}

pub fn ohtsuki_suite(p: &Profile) -> unified_core::Result<Report> {
    let mf = Manifold::new(FramedLink::poincare());
    run_cases("ohtsuki", ohtsuki_cases("poincare", &mf, p.ohtsuki_n_max, &p.ohtsuki_primes, 1)?)
}

fn andrews_grid(n: u32, k: usize) -> Vec<AndrewsParams> {
    let mut out = vec![Vec::new()];
    for _ in 0..2 * k {
        out = out.into_iter().flat_map(|v: Vec<i64>| (2..=4).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out.into_iter().map(|v| AndrewsParams { n, bs: v[..k].to_vec(), cs: v[k..].to_vec() }).collect()
}

/// Andrews' identity on `b_i, c_i in {q^2, q^3, q^4}`; substitutions that hit a pole are skipped.
pub fn andrews_cases(ns: &[u32], ks: &[usize]) -> Vec<Case> {
    let mut cases = Vec::new();
    for &n in ns {
        for &k in ks {
            for pa in andrews_grid(n, k) {
                let id = format!("N{n}/k{k}/b{:?}/c{:?}", pa.bs, pa.cs);
                cases.push(Case::new(id, json!({ "N": n, "bs": pa.bs, "cs": pa.cs }), move || match andrews_check(&pa) {
                    Err(Error::PoleAtSubstitution(f)) => Ok((json!("skipped"), json!({ "pole": f }), true)),
                    r => flag(r?),
                }));
            }
        }
    }
    cases
}

pub fn andrews_suite(p: &Profile) -> unified_core::Result<Report> {
    let ns: Vec<u32> = (1..=p.andrews_n_max).collect();
    let ks: Vec<usize> = (1..=p.andrews_k_max).collect();
    let mut cases = andrews_cases(&ns, &ks);
    cases.push(rr_case(p.rr_order));
    let mut rep = run_cases("andrews", cases)?;
    let poles = rep.rows.iter().filter(|r| r.got.get("pole").is_some()).count();
    rep.notes.push(format!("{poles} substitutions hit a pole and were skipped"));
    Ok(rep)
}

pub fn rr_case(order: usize) -> Case {
    Case::new(format!("rogers_ramanujan/{order}"), json!({ "order": order }), move || flag(rr_check(order)))
}

fn sylvester_resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let mut rows = vec![vec![BigInt::from(0); m + n]; m + n];
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(rows)
}

/// `Phi_n(q^p)` factorization and the resultant dichotomy for cyclotomic polynomials.
pub fn cyclo_suite(p: &Profile) -> unified_core::Result<Report> {
    let mut cases = Vec::new();
    let primes: Vec<u64> = (2..=p.cyclo_max).filter(|&x| is_prime(x)).collect();
    for n in 1..=p.cyclo_max {
        let primes = primes.clone();
        cases.push(Case::new(format!("frobenius/n{n:02}"), json!({ "n": n, "primes": primes }), move || {
            let mut bad = Vec::new();
            for &pr in &primes {
                let lhs = cyclotomic_poly(n).substitute_power(pr as i64);
                let mut rhs = cyclotomic_poly(n * pr);
                if n % pr != 0 {
                    rhs = &rhs * &cyclotomic_poly(n);
                }
                if lhs != rhs {
                    bad.push(pr);
                }
            }
            Ok((json!([]), json!(bad), bad.is_empty()))
        }));
    }
    for n in 1..=p.cyclo_max {
        for m in 1..n {
            cases.push(Case::new(format!("resultant/{n:02}/{m:02}"), json!({ "n": n, "m": m }), move || {
                let res = sylvester_resultant(&phi_coeffs(n), &phi_coeffs(m)).abs();
                let ratio_prime = if n % m == 0 {
                    match factorize(n / m).as_slice() {
                        [(pr, _)] => Some(*pr),
                        _ => None,
                    }
                } else {
                    None
                };
                let want = match ratio_prime {
                    Some(pr) => BigInt::from(pr).pow(euler_phi(m) as u32),
                    None => BigInt::from(1),
                };
                Ok((json!(want.to_string()), json!(res.to_string()), res == want))
            }));
        }
    }
    run_cases("cyclo", cases)
}

pub const KIRBY_CATALOG: &[&str] = &["s3", "poincare", "lens(3)", "lens(-2)", "lens(5)", "trefoil_right(1)", "figure8(-1)", "hopf(2,-3)"];

/// `tau` is unchanged by a split `+-1` framed unknot.
pub fn kirby_suite(p: &Profile) -> unified_core::Result<Report> {
    let mut cases = Vec::new();
    for name in KIRBY_CATALOG {
        for r in (3..=p.kirby_r_max).step_by(2) {
            for s in [1i64, -1] {
                let link = catalog(name)?;
                cases.push(Case::new(format!("{name}/r{r:02}/{s:+}"), json!({ "manifold": name, "r": r, "unknot": s }), move || {
                    let xi = RootSpec::primitive(r);
                    let base = tau(&Manifold::new(link.clone()), xi)?;
                    let blown = tau(&Manifold::new(link.disjoint_union(&FramedLink::unknot(s))), xi)?;
                    eq_row(base, blown, cyc_json)
                }));
            }
        }
    }
    run_cases("kirby", cases)
}

pub const SUITES: &[&str] = &["jones", "gauss", "lemma", "closed_form", "qbk", "integrality", "unify", "ohtsuki", "andrews", "cyclo", "kirby"];

pub fn by_name(name: &str, p: &Profile) -> unified_core::Result<Report> {
    match name {
        "jones" => jones_suite(p),
        "gauss" => gauss_suite(p),
        "lemma" => lemma_suite(p),
        "closed_form" => closed_form_suite(p),
        "qbk" => qbk_suite(&p.qbk_bs, &(0..=p.qbk_k_max).collect::<Vec<_>>(), p.qbk_r_max),
        "integrality" => integrality_suite(p),
        "unify" => unify_suite(p),
        "ohtsuki" => ohtsuki_suite(p),
        "andrews" => andrews_suite(p),
        "cyclo" => cyclo_suite(p),
        "kirby" => kirby_suite(p),
        _ => Err(Error::UnknownName(name.into())),
    }
}
