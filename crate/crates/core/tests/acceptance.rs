//! Acceptance criteria 1 to 8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use koszul::numbers::{bernoulli, bernoulli_two_index, binomial, gauge_k, parse_rational};
use koszul::verify::{self, CheckSpec, Mutation, VerificationReport};
use koszul::Rational;

const SEED: u64 = 20;
const SAMPLES: usize = 20;

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

struct Criterion {
    title: &'static str,
    checks: &'static [&'static str],
    budget: Duration,
}

const CRITERIA: [Criterion; 7] = [
    Criterion {
        title: "number tables",
        checks: &["bernoulli-identities"],
        budget: Duration::from_secs(1),
    },
    Criterion {
        title: "mu-bracket table",
        checks: &["mu-table"],
        budget: Duration::from_secs(60),
    },
    Criterion {
        title: "cross-formula equivalence",
        checks: &["cross-formula"],
        budget: Duration::from_secs(120),
    },
    Criterion {
        title: "generalized Jacobi",
        checks: &["jacobi"],
        budget: Duration::from_secs(120),
    },
    Criterion {
        title: "gauge fixing",
        checks: &["gauge-fixing", "nonunital-d2"],
        budget: Duration::from_secs(60),
    },
    Criterion {
        title: "closed forms and witnesses",
        checks: &[
            "closed-forms",
            "unit-reduction",
            "unit-formulas",
            "left-right",
            "nonhereditary",
            "phi3-d2",
            "antibracket",
        ],
        budget: Duration::from_secs(60),
    },
    Criterion {
        title: "curved L-infinity",
        checks: &["curved-linf"],
        budget: Duration::from_secs(60),
    },
];

fn number_values() -> Result<(), String> {
    let expected = [
        "1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730",
    ];
    for (n, b) in expected.iter().enumerate() {
        if bernoulli(n) != q(b) {
            return Err(format!("B_{n} = {}, expected {b}", bernoulli(n)));
        }
    }
    for n in 0..=12 {
        if bernoulli_two_index(0, n) != bernoulli(n) {
            return Err(format!("B_(0,{n}) != B_{n}"));
        }
        let sum: Rational = (0..=n)
            .map(|i| Rational::from_integer(binomial(n, i)) * bernoulli_two_index(i, n - i))
            .sum();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        if sum != Rational::from(sign) {
            return Err(format!("binomial sum at n = {n} is {sum}"));
        }
        for i in 0..=12 {
            if bernoulli_two_index(i, n) != bernoulli_two_index(n, i) {
                return Err(format!("B_({i},{n}) is not symmetric"));
            }
        }
    }
    for (i, j, v) in [(1, 1, "1/3"), (2, 2, "2/15")] {
        if bernoulli_two_index(i, j) != q(v) {
            return Err(format!("B_({i},{j}) != {v}"));
        }
    }
    let printed = [(1, "1"), (2, "-1/2"), (3, "1/2"), (5, "11/12"), (6, "-3/4"), (7, "-11/6")];
    for (n, k) in printed {
        if gauge_k(n) != q(k) {
            return Err(format!("K_{n} = {}, expected {k}", gauge_k(n)));
        }
    }
    Ok(())
}

fn describe(r: &VerificationReport) -> String {
    if let Some(e) = &r.error {
        return format!("{}: {e}", r.check_id);
    }
    match &r.counterexample {
        Some(c) => format!("{}: {}", r.check_id, c.label),
        None => format!("{}: failed", r.check_id),
    }
}

fn judge(c: &Criterion, reports: &[VerificationReport]) -> Result<String, String> {
    let mut total = Duration::ZERO;
    let mut samples = 0;
    for id in c.checks {
        let r = reports
            .iter()
            .find(|r| r.check_id == *id)
            .ok_or_else(|| format!("{id} missing from the suite"))?;
        if !r.passed() {
            return Err(describe(r));
        }
        total += r.elapsed;
        samples += r.samples_run;
    }
    if total > c.budget {
        return Err(format!("took {total:.2?}, budget {:?}", c.budget));
    }
    Ok(format!("{samples} samples in {total:.2?}"))
}

fn mutation_run(name: &str, mutation: Mutation, targets: &[(&str, Option<usize>)]) -> Result<String, String> {
    let specs: Vec<_> = targets
        .iter()
        .map(|(id, arity)| {
            let spec = CheckSpec::new(id).with_seed(SEED).with_samples(SAMPLES);
            let spec = match arity {
                Some(n) => spec.with_max_arity(*n),
                None => spec,
            };
            spec.with_mutation(mutation.clone())
        })
        .collect();
    let reports = verify::run_suite(&specs, koszul::par::default_jobs());
    if let Some(r) = reports.iter().find(|r| r.error.is_some()) {
        return Err(describe(r));
    }
    let caught: Vec<_> = reports
        .iter()
        .filter(|r| r.counterexample.as_ref().is_some_and(|c| c.lhs != c.rhs))
        .map(|r| r.check_id.as_str())
        .collect();
    if caught.is_empty() {
        return Err(format!("{name} went unnoticed"));
    }
    Ok(format!("{name} caught by {}", caught.join(", ")))
}

fn mutations() -> Result<String, String> {
    let two_index = mutation_run(
        "B(2,1) + 1",
        Mutation::TwoIndex {
            i: 2,
            j: 1,
            delta: Rational::from(1),
        },
        &[("cross-formula", Some(3)), ("closed-forms", None)],
    )?;
    let shuffle = mutation_run(
        "shuffle sign 1",
        Mutation::ShuffleSign { index: 1 },
        &[("mu-table", Some(2)), ("nr-structure", Some(2))],
    )?;
    Ok(format!("{two_index}; {shuffle}"))
}

fn line(n: usize, title: &str, result: &Result<String, String>) -> bool {
    match result {
        Ok(detail) => println!("criterion {n} PASS  {title}: {detail}"),
        Err(why) => println!("criterion {n} FAIL  {title}: {why}"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    let start = Instant::now();
    let suite = verify::default_suite(SEED, SAMPLES);
    let reports = verify::run_suite(&suite, koszul::par::default_jobs());
    let mut ok = true;
    for (i, c) in CRITERIA.iter().enumerate() {
        let mut result = judge(c, &reports);
        if i == 0 {
            result = number_values().and(result);
        }
        ok &= line(i + 1, c.title, &result);
    }
    ok &= line(8, "mutation sensitivity", &mutations());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(describe).collect();
    let whole = if failed.is_empty() {
        Ok(format!("{} checks", reports.len()))
    } else {
        Err(failed.join("; "))
    };
    match &whole {
        Ok(d) => println!("default suite PASS  {d}"),
        Err(d) => println!("default suite FAIL  {d}"),
    }
    ok &= whole.is_ok();
    println!("acceptance finished in {:.1?}", start.elapsed());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
