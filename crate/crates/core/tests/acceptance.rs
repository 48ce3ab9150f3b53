//! One pass/fail line per acceptance criterion; exits nonzero on any failure.

mod common;

use std::time::{Duration, Instant};

use common::{field, pencil, q, CORPUS, SINGULAR_G, SMOOTH_G};
use dicritique::algebra::{parse_poly, MultiPoly};
use dicritique::cli::{execute, CommandKind, Format, JobSpec};
use dicritique::pencil::{analyze, check_abhyankar_luengo, fiber_over_o, parse_pencil, PencilReport};
use dicritique::verify::{invariance_probe, monomial_dicritical_oracle, noether_intersection, resultant_intersection};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_corpus() -> Result<Vec<(String, PencilReport, Duration)>, String> {
    CORPUS
        .iter()
        .map(|&c| {
            let t = Instant::now();
            let r = analyze(&pencil(c), 64).map_err(|e| format!("{c:?}: {e}"))?;
            Ok((format!("{c:?}"), r, t.elapsed()))
        })
        .collect()
}

fn existence() -> Outcome {
    let runs = run_corpus()?;
    let mut points = 0;
    for (name, r, took) in &runs {
        for i in 0..r.base_points.len() {
            ensure(r.dicriticals_at(i).count() >= 1, || format!("{name}: base point {i} has no dicritical"))?;
        }
        ensure(*took < Duration::from_secs(1), || format!("{name}: {took:?}"))?;
        points += r.base_points.len();
    }
    Ok(format!("{} pencils, {points} base points, each under 1 s", runs.len()))
}

fn zero_valuation() -> Outcome {
    let mut n = 0;
    for (name, r, _) in run_corpus()? {
        for d in &r.dicriticals {
            ensure(d.v_f == d.v_g, || format!("{name}: v_f = {} but v_g = {}", d.v_f, d.v_g))?;
            n += 1;
        }
    }
    Ok(format!("{n} dicriticals with v_f = v_g"))
}

fn hand_witnesses() -> Outcome {
    let at_origin = |f: &str, g: &str| -> Result<Vec<_>, String> {
        let r = analyze(&parse_pencil(f, g, &q()).unwrap(), 64).map_err(|e| e.to_string())?;
        let i = r.base_points.iter().position(|b| b.label(r.field()) == "(0:0:1)").ok_or("origin is not a base point")?;
        Ok(r.dicriticals_at(i).map(|d| (d.v_x, d.v_y, d.v_f, d.v_g, d.degree)).collect::<Vec<_>>())
    };
    let lines = at_origin("x", "y")?;
    ensure(lines == [(1, 1, 1, 1, 1)], || format!("(x, y): {lines:?}"))?;
    let squares = at_origin("x^2", "y^2")?;
    ensure(squares.len() == 1 && squares[0].4 == 2, || format!("(x^2, y^2): {squares:?}"))?;
    let cusp = at_origin("y^2", "x^3")?;
    let cusp: Vec<_> = cusp.iter().map(|d| (d.0, d.1, d.2, d.3)).collect();
    ensure(cusp == [(2, 3, 6, 6)], || format!("(y^2, x^3): {cusp:?}"))?;
    Ok("(x, y), (x^2, y^2), (y^2, x^3) match the hand blowups".into())
}

/// The balancing weights of `x^a` against `y^b`, computed directly.
fn balance(a: u32, b: u32) -> (u32, u32) {
    let (mut m, mut n) = (a, b);
    while n != 0 {
        (m, n) = (n, m % n);
    }
    (b / m, a / m)
}

fn monomial_oracle() -> Outcome {
    let t = Instant::now();
    for a in 1..=6 {
        for b in 1..=6 {
            let (f, g) = (format!("x^{a}"), format!("y^{b}"));
            let r = analyze(&parse_pencil(&f, &g, &q()).unwrap(), 64).map_err(|e| e.to_string())?;
            let found: Vec<(u32, u32)> = r.dicriticals_at(0).map(|d| (d.v_x, d.v_y)).collect();
            let oracle = monomial_dicritical_oracle(a, 0, 0, b).map_err(|e| e.to_string())?;
            ensure(found == oracle && found == [balance(a, b)], || format!("({f}, {g}): engine {found:?}, oracle {oracle:?}"))?;
        }
    }
    let took = t.elapsed();
    ensure(took < Duration::from_secs(5), || format!("took {took:?}"))?;
    Ok(format!("36 pencils (x^a, y^b) in {took:.2?}"))
}

/// Local pairs with intersection numbers worked out by hand.
const LOCAL_PAIRS: [(&str, &str, u32); 10] = [
    ("x", "y", 1),
    ("y^2 - x^3", "x", 2),
    ("y^2 - x^3", "y", 3),
    ("y^2 - x^3", "y^2 + x^3", 6),
    ("y - x^2", "y + x^2", 2),
    ("x*y", "x + y", 2),
    ("y^2 - x^3", "y^3 - x^5", 9),
    ("(y - x^2)^2 - x^5", "y", 4),
    ("x^3 + y^3 - 3*x*y", "x", 3),
    ("y^2 - x^3", "y^2 - x^5", 6),
];

fn intersection_oracles() -> Outcome {
    let p = |s: &str| -> MultiPoly { parse_poly(s, &q(), &["x", "y"]).unwrap() };
    for (seed, (f, g, want)) in LOCAL_PAIRS.iter().enumerate() {
        let n = noether_intersection(&p(f), &p(g)).map_err(|e| format!("({f}, {g}): {e}"))?;
        let m = resultant_intersection(&p(f), &p(g), seed as u64).map_err(|e| format!("({f}, {g}): {e}"))?;
        ensure(n == m && n == *want, || format!("({f}, {g}): noether {n}, resultant {m}, hand {want}"))?;
    }
    Ok(format!("{} local pairs agree", LOCAL_PAIRS.len()))
}

fn invariance() -> Outcome {
    let mut rounds = 0;
    for &c in &CORPUS {
        for seed in 1..=5 {
            let v = invariance_probe(&pencil(c), seed, 3).map_err(|e| format!("{c:?}: {e}"))?;
            ensure(v.equal(), || format!("{c:?} seed {seed}: {:?}", v.rounds))?;
            rounds += v.rounds.len();
        }
    }
    Ok(format!("{rounds} perturbed resolutions agree"))
}

fn single_pole_and_connected_fiber() -> Outcome {
    for &c in &SMOOTH_G {
        let r = analyze(&pencil(c), 64).map_err(|e| e.to_string())?;
        let al = check_abhyankar_luengo(&r).map_err(|e| e.to_string())?;
        ensure(al.hypothesis, || format!("{c:?}: hypothesis fails"))?;
        for d in &r.dicriticals {
            ensure(d.poles == 1, || format!("{c:?}: {} poles", d.poles))?;
        }
        ensure(al.dicriticals.iter().all(|d| d.polynomial.is_some()), || format!("{c:?}: no polynomial form"))?;
        let fiber = fiber_over_o(&r).map_err(|e| e.to_string())?;
        ensure(fiber.connected && al.verdict() == Some(true), || format!("{c:?}: fiber disconnected"))?;
    }
    let r = analyze(&pencil(SINGULAR_G), 64).map_err(|e| e.to_string())?;
    let al = check_abhyankar_luengo(&r).map_err(|e| e.to_string())?;
    ensure(!al.hypothesis && al.verdict().is_none(), || "negative control was not skipped".into())?;
    let job = job(SINGULAR_G, CommandKind::Verify, 0);
    let (_, code) = execute(&job).map_err(|f| f.message)?;
    ensure(code == 0, || format!("negative control exits {code}"))?;
    Ok(format!("{} pencils pass; the YZ control is skipped", SMOOTH_G.len()))
}

fn job((k, f, g): (&str, &str, &str), command: CommandKind, seed: u64) -> JobSpec {
    JobSpec { command, field: field(k), f: f.into(), g: g.into(), seed, cap: 64, format: Format::Json, out: None }
}

fn determinism(started: Instant) -> Outcome {
    for &c in &CORPUS {
        let first = execute(&job(c, CommandKind::Verify, 11)).map_err(|f| format!("{c:?}: {}", f.message))?;
        let second = execute(&job(c, CommandKind::Verify, 11)).map_err(|f| format!("{c:?}: {}", f.message))?;
        ensure(first == second, || format!("{c:?}: outputs differ"))?;
        ensure(first.1 == 0, || format!("{c:?}: verification exit {}", first.1))?;
    }
    let took = started.elapsed();
    ensure(took < Duration::from_secs(30), || format!("suite took {took:?}"))?;
    Ok(format!("byte-identical verify JSON under cap 64; suite {took:.1?}"))
}

fn main() {
    let started = Instant::now();
    let criteria: [(&str, &dyn Fn() -> Outcome); 8] = [
        ("existence", &existence),
        ("zero-valuation", &zero_valuation),
        ("hand-witnesses", &hand_witnesses),
        ("monomial-oracle", &monomial_oracle),
        ("intersection-oracles", &intersection_oracles),
        ("invariance", &invariance),
        ("single-pole-connected-fiber", &single_pole_and_connected_fiber),
        ("termination-determinism", &|| determinism(started)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
