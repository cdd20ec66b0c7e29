//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Two clauses are known to be unattainable and are reported as FAIL
//! without failing the run: the binary Maiorana-McFarland example is not
//! minimal (no binary code with its enumerator is), and the distance
//! formula for the DHZ preset counts the coordinate x = 0 that D_f drops.
//! Any other failing clause makes the process exit nonzero.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{criterion_instances, oracle_code_minimal};
use minicode_core::code::{defining_set, linearity_check, parse_enumerator_terms, weight_distribution, WeightEnumerator};
use minicode_core::families::{preset, presets, validate_hypotheses};
use minicode_core::linalg::{self, Matrix};
use minicode_core::minimality::{
    ab_condition, dhz_criterion, is_minimal_definition, rank_criterion_code, verify_certificate, CheckOptions, Verdict,
};
use minicode_core::witness::{
    full_weight_basis, hyperplane_low_weight_basis, linear_system_solutions, unit_inner_basis, TheoremWitness,
};
use minicode_core::{Field, Scalar, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Clause {
    what: String,
    ok: bool,
    /// Set when the clause cannot hold; the reason is printed.
    unattainable: Option<&'static str>,
}

#[derive(Default)]
struct Outcome {
    clauses: Vec<Clause>,
    notes: Vec<String>,
}

impl Outcome {
    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.clauses.push(Clause {
            what: what.into(),
            ok,
            unattainable: None,
        });
    }

    fn known(&mut self, what: impl Into<String>, ok: bool, reason: &'static str) {
        self.clauses.push(Clause {
            what: what.into(),
            ok,
            unattainable: Some(reason),
        });
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let t = start.elapsed();
        self.check(format!("runtime {t:.2?} < {limit:?}"), t < limit);
    }
}

/// n, k, d, w_max, exact enumerator and rank-criterion verdict of a preset.
struct Measured {
    we: WeightEnumerator,
    n: usize,
    k: usize,
    d: usize,
    w_max: usize,
    minimal: bool,
}

fn measure(name: &str) -> Measured {
    let p = preset(name).unwrap();
    let d = defining_set(&p.spec).unwrap();
    let we = weight_distribution(&d).unwrap();
    let params = we.params().unwrap();
    let report = rank_criterion_code(&d, &CheckOptions::default()).unwrap();
    if report.is_minimal() {
        assert!(verify_certificate(&d, report.certificate().unwrap()).unwrap());
    }
    Measured {
        n: params.n,
        k: params.k,
        d: params.d,
        w_max: params.w_max,
        minimal: report.verdict == Verdict::Minimal,
        we,
    }
}

fn enumerator_case(out: &mut Outcome, name: &str, nkd: (usize, usize, usize), published: &str) -> Measured {
    let m = measure(name);
    out.check(format!("{name} [n, k, d] = {nkd:?}"), (m.n, m.k, m.d) == nkd);
    out.check(
        format!("{name} enumerator {published}"),
        m.we.counts == parse_enumerator_terms(published).unwrap(),
    );
    out.notes.push(format!("{name}: {} {}", m.we.params().unwrap(), m.we));
    m
}

fn ac_enumerators(cases: &[(&str, (usize, usize, usize), &str)], limit: Duration) -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    for &(name, nkd, published) in cases {
        let m = enumerator_case(&mut out, name, nkd, published);
        out.check(format!("{name} minimal"), m.minimal);
    }
    out.within(start, limit);
    out
}

fn ac1() -> Outcome {
    ac_enumerators(
        &[("sec4_f1", (80, 5, 32), "1+2z^32+64z^50+48z^53+80z^54+32z^56+16z^65")],
        Duration::from_secs(1),
    )
}

fn ac2() -> Outcome {
    ac_enumerators(
        &[("sec4_f2", (80, 5, 41), "1+2z^41+24z^47+40z^50+24z^53+80z^54+58z^56+14z^65")],
        Duration::from_secs(1),
    )
}

fn ac3() -> Outcome {
    ac_enumerators(
        &[
            ("sec5_f1", (31, 6, 10), "1+6z^10+47z^16+10z^18"),
            ("sec5_f2", (31, 6, 6), "1+z^6+5z^12+5z^14+41z^16+10z^18+z^20"),
            ("sec5_f3", (31, 6, 10), "1+3z^10+4z^12+3z^14+43z^16+9z^18+z^22"),
        ],
        Duration::from_secs(1),
    )
}

fn ac4() -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    let m = enumerator_case(
        &mut out,
        "sec6_q2",
        (127, 8, 39),
        "1+z^39+12z^55+8z^59+72z^63+127z^64+24z^67+10z^71+z^103",
    );
    out.known(
        "sec6_q2 minimal",
        m.minimal,
        "in any binary code with this enumerator the weight-39 and weight-103 words sum to weight 64, \
         so the weight-39 support lies inside the weight-103 support",
    );
    out.within(start, Duration::from_secs(1));
    out
}

fn ac5() -> Outcome {
    ac_enumerators(
        &[(
            "sec6_q3",
            (2186, 8, 1295),
            "1+2z^1295+18z^1376+90z^1403+108z^1439+3588z^1457+2186z^1458+378z^1466+180z^1484+8z^1538+2z^2024",
        )],
        Duration::from_secs(30),
    )
}

fn ac6() -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    for (name, d, w_max) in [("sec7_f1", 2208, 4602), ("sec7_f3", 2424, 4764), ("sec7_f4", 2664, 4716)] {
        let m = measure(name);
        out.check(format!("{name} d = {d}"), m.d == d);
        out.check(format!("{name} w_max = {w_max}"), m.w_max == w_max);
        out.check(format!("{name} minimal"), m.minimal);
    }
    let m = measure("sec7_f2");
    out.check("sec7_f2 w_max = 4401", m.w_max == 4401);
    out.check("sec7_f2 minimal", m.minimal);
    out.check("sec7_f2 d is one of the published 4320, 4302", [4320, 4302].contains(&m.d));
    out.notes.push(format!("sec7_f2: computed d = {} (published as 4320 and as 4302)", m.d));
    out.within(start, Duration::from_secs(600));
    out
}

fn ac7() -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    let m = measure("dhz_m7");
    let (mm, s, t) = (7u32, 4u32, 3u32);
    let formula = (1usize << (mm - 1)) - (1usize << (t - 1)) * (s as usize - 1);
    out.known(
        format!("dhz_m7 d = {formula}"),
        m.d == formula,
        "the formula is the distance of the length-2^m code including x = 0, where the \
         minimum-weight word is nonzero; D_f drops that coordinate",
    );
    out.check("dhz_m7 minimal", m.minimal);
    out.notes.push(format!("dhz_m7: computed d = {}", m.d));
    out.within(start, Duration::from_secs(1));
    out
}

fn ac8() -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    let (mut checked, mut disagreements) = (0, 0);
    for f in criterion_instances() {
        if linearity_check(&f).unwrap().is_some() {
            continue;
        }
        checked += 1;
        let d = defining_set(&f).unwrap();
        let def = is_minimal_definition(&d).unwrap().is_minimal();
        let dhz = dhz_criterion(&d).unwrap().is_minimal();
        let rank = rank_criterion_code(&d, &CheckOptions::default()).unwrap().is_minimal();
        if def != dhz || def != rank || def != oracle_code_minimal(&d) {
            disagreements += 1;
        }
    }
    out.check(format!("{checked} nonlinear instances, {disagreements} disagreements"), disagreements == 0);
    out.notes.push(format!("{checked} nonlinear instances, {disagreements} disagreements"));
    out.within(start, Duration::from_secs(60));
    out
}

fn ac9() -> Outcome {
    let mut out = Outcome::default();
    let (mut claimed, mut counterexamples) = (0, 0);
    for f in criterion_instances() {
        if linearity_check(&f).unwrap().is_some() {
            continue;
        }
        let d = defining_set(&f).unwrap();
        if ab_condition(&d).unwrap().is_minimal() {
            claimed += 1;
            if !oracle_code_minimal(&d) {
                counterexamples += 1;
            }
        }
    }
    out.check(format!("{claimed} ratio-minimal instances, {counterexamples} counterexamples"), counterexamples == 0);
    out.notes.push(format!("{claimed} ratio-minimal instances, {counterexamples} counterexamples"));
    out
}

fn ac10() -> Outcome {
    let mut out = Outcome::default();
    for p in presets() {
        if !validate_hypotheses(&p.spec, p.theorem).unwrap().passed() {
            out.notes.push(format!("{}: hypotheses of {} fail, skipped", p.name, p.theorem));
            continue;
        }
        let d = defining_set(&p.spec).unwrap();
        let ok = TheoremWitness::new(p.theorem, &p.spec)
            .and_then(|tw| tw.certificate())
            .and_then(|c| c.to_index_certificate(&d))
            .and_then(|c| verify_certificate(&d, &c))
            .unwrap_or(false);
        out.check(format!("{} witnesses for {} verify", p.name, p.theorem), ok);
    }
    out
}

fn random_nonzero_vector(rng: &mut ChaCha8Rng, q: u32, m: usize) -> Vector {
    loop {
        let v = Vector((0..m).map(|_| Scalar(rng.gen_range(0..q))).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

fn ac11() -> Outcome {
    let mut out = Outcome::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    for q in [2, 3, 4, 5, 7] {
        let field = Field::with_order(q).unwrap();
        for m in 1..=8 {
            if q == 2 && m < 2 {
                continue;
            }
            let min_weight = match (q, m % 2) {
                (2, 0) => m - 1,
                (2, _) => m - 2,
                _ => m,
            };
            let ok = full_weight_basis(&field, m).is_ok_and(|b| {
                b.vectors.len() == m
                    && linalg::rank_of(&field, m, &b.vectors).unwrap() == m
                    && b.vectors.iter().all(|v| linalg::weight(v) >= min_weight)
            });
            if !ok {
                failures.push(format!("full_weight q={q} m={m}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..500 {
        let q = [2, 3, 5][i % 3];
        let field = Field::with_order(q).unwrap();
        let m = rng.gen_range(2..=8);
        let omega = random_nonzero_vector(&mut rng, q, m);
        let ok = unit_inner_basis(&field, &omega).is_ok_and(|b| {
            linalg::rank_of(&field, m, &b.vectors).unwrap() == m
                && b.vectors.iter().all(|beta| {
                    (1..=2).contains(&linalg::weight(beta)) && linalg::dot(&field, &omega, beta).unwrap() == Scalar::ONE
                })
        });
        if !ok {
            failures.push(format!("unit_inner omega={omega}"));
        }
        let v = random_nonzero_vector(&mut rng, q, m);
        let ok = hyperplane_low_weight_basis(&field, &v).is_ok_and(|b| {
            linalg::rank_of(&field, m, &b.vectors).unwrap() == m - 1
                && b.vectors.iter().all(|beta| {
                    (1..=2).contains(&linalg::weight(beta)) && linalg::dot(&field, &v, beta).unwrap().is_zero()
                })
        });
        if !ok {
            failures.push(format!("hyperplane v={v}"));
        }
        let n = rng.gen_range(1..=6);
        let rows = rng.gen_range(1..=4);
        let a = Matrix::from_rows(
            (0..rows)
                .map(|_| Vector((0..n).map(|_| Scalar(rng.gen_range(0..q))).collect()))
                .collect(),
        )
        .unwrap();
        let x = Vector((0..n).map(|_| Scalar(rng.gen_range(0..q))).collect());
        let b = Vector(a.rows().iter().map(|r| linalg::dot(&field, r, &x).unwrap()).collect());
        let r = linalg::rank(&field, &a);
        let want = if b.is_zero() { n - r } else { n - r + 1 };
        let ok = linear_system_solutions(&field, &a, &b).is_ok_and(|sols| {
            sols.len() == want
                && linalg::rank_of(&field, n, &sols).unwrap() == want
                && sols.iter().all(|s| {
                    a.rows().iter().zip(b.iter()).all(|(row, &bi)| linalg::dot(&field, row, s).unwrap() == bi)
                })
        });
        if !ok {
            failures.push(format!("system q={q} n={n} rows={rows}"));
        }
    }
    out.check(format!("{} failures", failures.len()), failures.is_empty());
    out.notes.extend(failures.into_iter().take(5));
    out.within(start, Duration::from_secs(60));
    out
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
        ("AC11", ac11),
    ];
    let mut unexpected = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let outcome = outcome.unwrap_or_else(|_| {
            let mut o = Outcome::default();
            o.check("criterion ran without panicking", false);
            o
        });
        let failed: Vec<&Clause> = outcome.clauses.iter().filter(|c| !c.ok).collect();
        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!("{id} {status} [{elapsed:.2?}]");
        for c in &failed {
            match c.unattainable {
                Some(reason) => println!("    failed (unattainable): {}: {reason}", c.what),
                None => {
                    unexpected += 1;
                    println!("    failed: {}", c.what)
                }
            }
        }
        for n in &outcome.notes {
            println!("    {n}");
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failing clauses");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
