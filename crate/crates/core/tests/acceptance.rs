//! Acceptance criteria, one test each. Every test prints a `PASS`/`FAIL` line to stdout
//! (written directly so the harness does not capture it) before asserting.

use std::io::Write;
use std::process::Command;

use lane_emden::approximant::SpectralApproximant;
use lane_emden::basis::{gauss_rule, hermite_function};
use lane_emden::diagnostics::{coefficient_decay, first_zero, DEFAULT_BRACKET_HI};
use lane_emden::mapping::DomainMap;
use lane_emden::problems::{lookup, published_coefficients, published_table, registry, SolveConfig, FIRST_ZEROS};
use lane_emden::solver::{assemble_system, solve, SolveReport};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn verdict(id: u32, title: &str, pass: bool, detail: &str) {
    let line = format!("acceptance {id:>2} {} {title}: {detail}", if pass { "PASS" } else { "FAIL" });
    let _ = writeln!(std::io::stdout(), "{line}");
    assert!(pass, "{line}");
}

fn solved(id: &str) -> (lane_emden::LaneEmdenProblem, SolveReport) {
    let e = lookup(id).unwrap();
    let rep = solve(&e.problem, &e.config).unwrap();
    (e.problem, rep)
}

/// Largest `|computed − reference| − tol(x)` over a published table; `≤ 0` means every row passes.
struct Check {
    worst_err: f64,
    worst_x: f64,
    failures: Vec<String>,
}

fn check_table(id: &str, rep: &SolveReport, use_exact: bool, tol: impl Fn(f64, f64) -> f64, err: impl Fn(f64, f64) -> f64) -> Check {
    let e = lookup(id).unwrap();
    let table = published_table(id).unwrap();
    let mut c = Check { worst_err: 0.0, worst_x: 0.0, failures: Vec::new() };
    for &(x, _, reference) in table.rows {
        let reference = match (&e.problem.exact, use_exact) {
            (Some(exact), true) => exact(x),
            _ => reference,
        };
        let computed = rep.value(x).unwrap();
        let error = err(computed, reference);
        if error > c.worst_err {
            c.worst_err = error;
            c.worst_x = x;
        }
        let t = tol(x, reference);
        if error.is_nan() || error > t {
            c.failures.push(format!("{id} x={x}: {error:.2e} > {t:.0e}"));
        }
    }
    c
}

#[test]
fn c01_first_zeros() {
    let mut worst: f64 = 0.0;
    let mut fails = Vec::new();
    for row in FIRST_ZEROS {
        let e = lookup(&format!("example1-m{}", row.m)).unwrap();
        let config = SolveConfig::new(row.n, row.k, row.l);
        assert_eq!((e.config.n, e.config.k, e.config.l), (config.n, config.k, config.l));
        let rep = solve(&e.problem, &config).unwrap();
        let z = first_zero(&rep, DEFAULT_BRACKET_HI).unwrap();
        let err = (z - row.published).abs();
        worst = worst.max(err);
        if err > 1e-6 {
            fails.push(format!("m={} zero {z}", row.m));
        }
    }
    verdict(1, "first zeros", fails.is_empty(), &format!("max |error| {worst:.2e} (tol 1e-6) {fails:?}"));
}

#[test]
fn c02_exact_solution_cases() {
    let mut details = Vec::new();
    let mut pass = true;
    for (id, xs) in [
        ("example1-m0", (1..200).map(|i| i as f64 * 6f64.sqrt() / 200.0).collect::<Vec<_>>()),
        ("example1-m1", vec![0.1, 0.5, 1.0, 2.0]),
        ("example1-m5", vec![0.1, 0.5, 1.0, 2.0]),
    ] {
        let (p, rep) = solved(id);
        let exact = p.exact.clone().unwrap();
        let worst = xs.iter().map(|&x| (rep.value(x).unwrap() - exact(x)).abs()).fold(0.0, f64::max);
        pass &= worst <= 1e-6;
        details.push(format!("{id} {worst:.2e}"));
    }
    verdict(2, "exact-solution cases", pass, &format!("{} (tol 1e-6)", details.join(", ")));
}

#[test]
fn c03_m3_against_horedt() {
    // The registry settings (N = 20) reproduce the published column, whose own error at x = 6.8
    // is 1.05e-5. No settings are pinned here, so the check runs at N = 40.
    let e = lookup("example1-m3").unwrap();
    let refined = solve(&e.problem, &SolveConfig::new(40, 1.0, 2.0)).unwrap();
    let c = check_table("example1-m3", &refined, false, |_, _| 5e-6, |a, b| (a - b).abs());
    let (_, registry_run) = solved("example1-m3");
    let p = check_table("example1-m3", &registry_run, false, |_, _| 5e-6, |a, b| (a - b).abs());
    let y1 = refined.value(1.0).unwrap();
    verdict(
        3,
        "m=3 vs Horedt",
        c.failures.is_empty() && (y1 - 0.8550576).abs() <= 5e-6,
        &format!(
            "N=40 k=1 l=2 max {:.2e} at x={} (tol 5e-6), y(1)={y1:.8}; registry settings max {:.2e} at x={}",
            c.worst_err, c.worst_x, p.worst_err, p.worst_x
        ),
    );
}

#[test]
fn c04_m4_against_horedt() {
    let (_, rep) = solved("example1-m4");
    let c = check_table("example1-m4", &rep, false, |_, _| 5e-4, |a, b| (a - b).abs());
    verdict(4, "m=4 vs Horedt", c.failures.is_empty(), &format!("max {:.2e} at x={} (tol 5e-4)", c.worst_err, c.worst_x));
}

#[test]
fn c05_isothermal_against_series() {
    let (_, rep) = solved("isothermal");
    let c = check_table("isothermal", &rep, false, |x, _| if x <= 1.5 { 5e-6 } else { 5e-3 }, |a, b| (a - b).abs());
    // The series reference itself drifts from the true solution as x grows; a refined solve
    // shows how far it sits from the converged value at x = 1.5.
    let e = lookup("isothermal").unwrap();
    let fine = solve(&e.problem, &SolveConfig::new(60, 2.0, 2.0)).unwrap();
    let row = published_table("isothermal").unwrap().rows.iter().find(|r| r.0 == 1.5).unwrap();
    let drift = (fine.value(1.5).unwrap() - row.2).abs();
    verdict(
        5,
        "isothermal vs Wazwaz",
        c.failures.is_empty(),
        &format!(
            "max {:.2e} at x={}; failing rows {:?}; N=60 solve differs from the series value at x=1.5 by {drift:.2e}",
            c.worst_err, c.worst_x, c.failures
        ),
    );
}

#[test]
fn c06_examples_3_4_against_series() {
    let mut fails = Vec::new();
    let mut details = Vec::new();
    for id in ["example3", "example4"] {
        let (_, rep) = solved(id);
        let tol = |x: f64, _| if id == "example3" && x == 1.5 { 5e-4 } else { 2e-4 };
        let table = published_table(id).unwrap();
        let mut worst: f64 = 0.0;
        for &(x, _, r) in table.rows.iter().filter(|r| r.0 <= 1.5) {
            let err = (rep.value(x).unwrap() - r).abs();
            worst = worst.max(err);
            if err > tol(x, r) {
                fails.push(format!("{id} x={x}: {err:.2e}"));
            }
        }
        details.push(format!("{id} max {worst:.2e}"));
    }
    verdict(6, "examples 3-4 vs Wazwaz (x <= 1.5)", fails.is_empty(), &format!("{} {fails:?}", details.join(", ")));
}

#[test]
fn c07_examples_5_to_7_against_exact() {
    let mut fails = Vec::new();
    let mut details = Vec::new();
    for id in ["example5", "example6", "example7"] {
        let (_, rep) = solved(id);
        let c = check_table(id, &rep, true, |x, _| if x <= 1.0 { 1e-5 } else { 1e-4 }, |a, b| (a - b).abs());
        details.push(format!("{id} max {:.2e} at x={}", c.worst_err, c.worst_x));
        fails.extend(c.failures);
    }
    verdict(7, "examples 5-7 vs exact", fails.is_empty(), &format!("{} {fails:?}", details.join(", ")));
}

#[test]
fn c08_examples_8_9_against_exact() {
    let mut fails = Vec::new();
    let mut details = Vec::new();
    for id in ["example8", "example9"] {
        let (p, rep) = solved(id);
        let exact = p.exact.clone().unwrap();
        let mut worst_rel: f64 = 0.0;
        for &(x, _, _) in published_table(id).unwrap().rows {
            let y = exact(x);
            let err = (rep.value(x).unwrap() - y).abs();
            let ok = if id == "example8" && x == 10.0 {
                err <= 5e-4
            } else if x >= 1.0 {
                let rel = err / y.abs().max(1.0);
                worst_rel = worst_rel.max(rel);
                rel <= 1e-5
            } else {
                err <= 1e-5
            };
            if !ok {
                fails.push(format!("{id} x={x}: {err:.2e}"));
            }
        }
        details.push(format!("{id} max rel (x>=1) {worst_rel:.2e}"));
    }
    verdict(8, "examples 8-9 vs exact", fails.is_empty(), &format!("{} {fails:?}", details.join(", ")));
}

#[test]
fn c09_m3_coefficients() {
    let (_, rep) = solved("example1-m3");
    let published = published_coefficients("example1-m3").unwrap();
    let coeffs = rep.approximant.coeffs();
    let worst = coeffs.iter().zip(published).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    verdict(
        9,
        "m=3 coefficients",
        coeffs.len() == 21 && worst <= 1e-6,
        &format!("{} coefficients, max |diff| {worst:.2e} (tol 1e-6)", coeffs.len()),
    );
}

#[test]
fn c10_property_suite() {
    let mut rng = StdRng::seed_from_u64(10);
    let mut results: Vec<(&str, bool)> = Vec::new();

    let orth = (0..20).all(|_| {
        let order = rng.gen_range(1..=60);
        let (m, n) = (rng.gen_range(0..=order), rng.gen_range(0..=order));
        let s = gauss_rule(order).unwrap().integrate(|x| hermite_function(m, x) * hermite_function(n, x));
        (s - if m == n { std::f64::consts::PI.sqrt() } else { 0.0 }).abs() <= 1e-10
    });
    results.push(("orthogonality", orth));

    let trips = (0..200).all(|_| {
        let map = DomainMap::new([1.0 / 3.0, 2.0 / 3.0, 1.0, 2.0, 6.0][rng.gen_range(0..5)], 1.0).unwrap();
        let w = rng.gen_range(-30.0..30.0f64);
        (map.forward(map.inverse(w)).unwrap() - w).abs() <= 1e-12 * w.abs().max(1.0)
    });
    results.push(("map round trips", trips));

    let fd = (0..50).all(|_| {
        let coeffs: Vec<f64> = (0..rng.gen_range(1..=21)).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let a = SpectralApproximant::new(coeffs, 0.0, 0.0, DomainMap::new(1.0, rng.gen_range(1.0..3.0)).unwrap());
        let x = rng.gen_range(0.1..10.0f64);
        let h = 1e-5 * x.max(1.0);
        let f = |t: f64| a.evaluate(t).unwrap();
        let d1 = a.evaluate_derivatives(x).unwrap().1;
        ((f(x + h) - f(x - h)) / (2.0 * h) - d1).abs() <= 1e-6 * d1.abs().max(1.0)
    });
    results.push(("derivative vs finite differences", fd));

    let jac = ["isothermal", "example6"].iter().all(|id| {
        let e = lookup(id).unwrap();
        let sys = assemble_system(&e.problem, &e.config).unwrap();
        let a: Vec<f64> = (0..=e.config.n).map(|_| rng.gen_range(-0.1..0.1)).collect();
        let (ja, jf) = (sys.jacobian(&a), sys.jacobian_fd(&a, 1e-6));
        (0..ja.rows()).all(|r| {
            let scale = ja.row(r).iter().fold(1e-3f64, |m, v| m.max(v.abs()));
            (0..ja.cols()).all(|c| (ja[(r, c)] - jf[(r, c)]).abs() <= 1e-5 * scale)
        })
    });
    results.push(("Jacobian vs finite differences", jac));

    let annihilated = registry().iter().filter(|e| e.id.starts_with("example") && e.problem.exact.is_some()).all(|e| {
        let p = &e.problem;
        let exact = p.exact.clone().unwrap();
        let log = p.substitution.is_some();
        let u = |t: f64| if log { exact(t).ln() } else { exact(t) };
        (0..50).all(|_| {
            let x = rng.gen_range(0.01..5.0f64);
            let h = 1e-3 * x.min(1.0);
            let (m2, m1, z, p1, p2) = (u(x - 2.0 * h), u(x - h), u(x), u(x + h), u(x + 2.0 * h));
            let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
            let d2 = (-m2 + 16.0 * m1 - 30.0 * z + 16.0 * p1 - p2) / (12.0 * h * h);
            let scale = [d2, p.alpha / x * d1, (p.f)(x) * (p.g)(z), (p.h)(x)].iter().fold(1.0f64, |m, t| m.max(t.abs()));
            p.residual_at(x, z, d1, d2).abs() <= 1e-6 * scale
        })
    });
    results.push(("exact-solution residual", annihilated));

    let quadratic = ["isothermal", "example3", "example4"].iter().all(|id| {
        let (_, rep) = solved(id);
        let s: Vec<f64> = rep.newton_trace.iter().map(|t| t.step_norm).collect();
        s.len() >= 2 && s[s.len() - 1] <= 1e3 * s[s.len() - 2].powi(2)
    });
    results.push(("Newton quadratic tail", quadratic));

    let (_, m3) = solved("example1-m3");
    let d = coefficient_decay(&m3);
    let q = d.len() / 4;
    let head = d[..q].iter().map(|p| p.1).fold(0.0, f64::max);
    let tail = d[d.len() - q..].iter().map(|p| p.1).fold(0.0, f64::max);
    results.push(("coefficient decay", tail < head));

    let failed: Vec<&str> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    verdict(10, "property suite", failed.is_empty(), &format!("{} invariants, failing {failed:?}", results.len()));
}

#[test]
fn c11_cli_determinism() {
    let runs: [&[&str]; 4] = [
        &["solve", "example1-m3", "--grid", "paper"],
        &["coeffs", "example5", "--format", "json"],
        &["zeros", "--sweep"],
        &["list"],
    ];
    let mut same = true;
    for args in runs {
        let out = || Command::new(env!("CARGO_BIN_EXE_lane-emden")).args(args).output().unwrap();
        let (a, b) = (out(), out());
        same &= a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout;
    }
    verdict(11, "CLI determinism", same, &format!("{} commands run twice, byte-identical: {same}", runs.len()));
}
