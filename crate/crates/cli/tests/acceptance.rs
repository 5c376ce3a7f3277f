//! One line per acceptance criterion, each with its time budget. Runs the
//! full-profile suites; exits nonzero if an asserted criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use unified_cli::profile::Profile;
use unified_cli::report::Report;
use unified_cli::suites::{self, andrews_cases, literal_qbk_failures, rr_case, run_cases};

struct Line {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
    asserted: bool,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let x = f();
    (x, t.elapsed())
}

fn suite_line(id: u32, title: &'static str, budget: u64, f: impl FnOnce() -> unified_core::Result<Report>) -> Line {
    let (rep, dt) = timed(f);
    match rep {
        Ok(rep) => {
            let in_time = dt <= Duration::from_secs(budget);
            let mut detail = format!("{}/{} rows, {:.1}s of {}s", rep.summary.passed, rep.summary.total, dt.as_secs_f64(), budget);
            if let Some(bad) = rep.rows.iter().find(|r| !r.pass) {
                detail += &format!(", first failure {}", bad.id);
            }
            Line { id, title, pass: rep.all_pass() && in_time, detail, asserted: true }
        }
        Err(e) => Line { id, title, pass: false, detail: e.to_string(), asserted: true },
    }
}

fn main() -> ExitCode {
    let p = Profile::full();
    let mut lines = vec![
        suite_line(1, "colored Jones contracts", 10, || suites::jones_suite(&p)),
        suite_line(2, "Gauss sums and their reduction", 5, || suites::gauss_suite(&p)),
        suite_line(3, "transform lemma", 30, || suites::lemma_suite(&p)),
        suite_line(4, "closed form of the transform", 5, || suites::closed_form_suite(&p)),
    ];

    // The identity as stated cannot hold at r <= 2k+1 (the denominator
    // (q^{k+1};q)_{k+1} vanishes there), so that part is reported, not asserted.
    let ks: Vec<u32> = (0..=p.qbk_k_max).collect();
    let (qbk, dt) = timed(|| suites::qbk_suite(&p.qbk_bs, &ks, p.qbk_r_max));
    match qbk {
        Ok(rep) => {
            let (fails, total) = literal_qbk_failures(&rep).unwrap_or((usize::MAX, 0));
            let high = rep.all_pass() && dt <= Duration::from_secs(60);
            lines.push(Line {
                id: 5,
                title: "per-root identity, literal grid",
                pass: fails == 0,
                detail: format!("{fails} of {total} roots with r <= 2k+1 do not hold"),
                asserted: false,
            });
            lines.push(Line {
                id: 5,
                title: "per-root identity, r > 2k+1",
                pass: high,
                detail: format!("{}/{} (b, k) pairs, {:.1}s of 60s", rep.summary.passed, rep.summary.total, dt.as_secs_f64()),
                asserted: true,
            });
        }
        Err(e) => lines.push(Line { id: 5, title: "per-root identity", pass: false, detail: e.to_string(), asserted: true }),
    }

    lines.push(suite_line(6, "cyclotomic expansion integrality", 60, || suites::integrality_suite(&p)));
    lines.push(suite_line(7, "two pipelines for the Poincare sphere", 300, || suites::unify_suite(&p)));
    lines.push(suite_line(8, "Ohtsuki stabilization", 120, || suites::ohtsuki_suite(&p)));
    let ns: Vec<u32> = (1..=p.andrews_n_max).collect();
    let ks: Vec<usize> = (1..=p.andrews_k_max).collect();
    lines.push(suite_line(9, "Andrews identity", 60, || run_cases("andrews", andrews_cases(&ns, &ks))));
    lines.push(suite_line(9, "Rogers-Ramanujan", 1, || run_cases("rr", vec![rr_case(p.rr_order)])));
    lines.push(suite_line(10, "cyclotomic polynomial facts", 5, || suites::cyclo_suite(&p)));
    lines.push(suite_line(11, "blow-up invariance", 60, || suites::kirby_suite(&p)));

    let mut ok = true;
    for l in &lines {
        let mark = if l.pass { "PASS" } else { "FAIL" };
        let tag = if l.asserted { "" } else { " (reported, not asserted)" };
        println!("criterion {:>2} {mark} {}: {}{tag}", l.id, l.title, l.detail);
        ok &= l.pass || !l.asserted;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
