//! Randomized identity checks with exact comparison.
//!
//! A [`CheckSpec`] names a registered check and its parameters; [`run_check`]
//! turns it into a [`VerificationReport`]. Every comparison is exact equality
//! of algebra elements, and every random choice comes from a ChaCha8 stream
//! seeded by the spec, so identical specs give identical reports.

mod checks;
mod context;
pub mod fixtures;
mod random;
pub(crate) mod report;
mod tables;

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use random::{Sampler, MAX_WORD_LEN};
pub use report::{Counterexample, Status, VerificationReport};
pub use tables::{emit_tables, render_table_text, table_rows, TableKind, TABLE_BOUND};

use crate::algebra::json::{AlgebraDoc, SourceDoc};
use crate::algebra::Signature;
use crate::brackets::Koszul;
use crate::numbers::{rational_string, Rational};
use crate::operators::NrConfig;
use crate::{par, Error, Result};
use context::Ctx;

/// A deliberate defect injected into the construction context, used to show
/// that the suite notices it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Mutation {
    /// Adds `delta` to `B(i,j)` (and `B(j,i)`).
    TwoIndex {
        i: usize,
        j: usize,
        #[serde(with = "rational_string")]
        delta: Rational,
    },
    /// Adds `delta` to the Bernoulli number `B_n`.
    Bernoulli {
        n: usize,
        #[serde(with = "rational_string")]
        delta: Rational,
    },
    /// Negates the term of shuffle number `index` in every
    /// Nijenhuis-Richardson product.
    ShuffleSign { index: usize },
}

impl Mutation {
    pub fn apply(&self, koszul: Koszul) -> Koszul {
        match self {
            Mutation::TwoIndex { i, j, delta } => {
                let mut t = koszul.table().clone();
                t.perturb_two_index(*i, *j, delta);
                koszul.with_table(t)
            }
            Mutation::Bernoulli { n, delta } => {
                let mut t = koszul.table().clone();
                t.perturb_bernoulli(*n, delta);
                koszul.with_table(t)
            }
            Mutation::ShuffleSign { index } => koszul.with_nr(NrConfig {
                shuffle_sign_flip: Some(*index),
            }),
        }
    }
}

fn default_samples() -> usize {
    20
}

/// One entry of a suite file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckSpec {
    pub check_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_arity: Option<usize>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sources: Vec<SourceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
}

impl CheckSpec {
    pub fn new(check_id: &str) -> Self {
        CheckSpec {
            check_id: check_id.to_string(),
            max_arity: None,
            samples: default_samples(),
            seed: 0,
            algebra: None,
            sources: Vec::new(),
            mutation: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_max_arity(mut self, max_arity: usize) -> Self {
        self.max_arity = Some(max_arity);
        self
    }

    pub fn with_mutation(mut self, mutation: Mutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    /// Parses a suite file: a JSON list of specs.
    pub fn parse_suite(text: &str) -> Result<Vec<CheckSpec>> {
        Ok(serde_json::from_str(text)?)
    }
}

type CheckFn = fn(&Ctx, &mut report::Outcome) -> Result<()>;

/// A registered check: default algebra, default and largest arity.
struct Registered {
    id: &'static str,
    run: CheckFn,
    algebra: fn() -> Result<Arc<Signature>>,
    max_arity: usize,
    arity_limit: usize,
}

fn registry() -> Vec<Registered> {
    use checks::*;
    let mixed: fn() -> Result<Arc<Signature>> = || Ok(Signature::default_mixed());
    let ground: fn() -> Result<Arc<Signature>> = || Ok(Signature::ground_field());
    let reg = |id, run, algebra, max_arity, arity_limit| Registered {
        id,
        run,
        algebra,
        max_arity,
        arity_limit,
    };
    vec![
        reg("bernoulli-identities", numbers::bernoulli_identities as CheckFn, ground, 12, 12),
        reg("mu-table", operators::mu_table, mixed, 3, 4),
        reg("nr-structure", operators::nr_structure, mixed, 3, 4),
        reg("symmetry", operators::symmetry, mixed, 4, 5),
        reg("cross-formula", brackets::cross_formula, mixed, 4, 5),
        reg("exp-adjoint", brackets::exp_adjoint, mixed, 4, 5),
        reg("jacobi", brackets::jacobi, mixed, 3, 4),
        reg("gauge-fixing", gauge::gauge_fixing, ground, 6, 8),
        reg("nonunital-d2", gauge::nonunital_d2, nonunital, 4, 5),
        reg("closed-forms", examples::closed_forms, mixed, 2, 2),
        reg("unit-reduction", examples::unit_reduction, mixed, 4, 5),
        reg("unit-formulas", examples::unit_formulas, mixed, 4, 5),
        reg("derivation-vanishing", examples::derivation_vanishing, mixed, 4, 5),
        reg("left-right", examples::left_right, mixed, 3, 4),
        reg("nonhereditary", examples::nonhereditary, mixed, 2, 2),
        reg("phi3-d2", examples::phi3_d2, two_even, 3, 3),
        reg("tensor-converse", examples::tensor_converse, mixed, 2, 2),
        reg("commutative", examples::commutative, polynomial, 3, 4),
        reg("antibracket", examples::antibracket, mixed, 2, 2),
        reg("symmetrized-iterated", examples::symmetrized_iterated, two_even, 2, 2),
        reg("curved-linf", brackets::curved_linf, square_zero_algebra, 4, 4),
    ]
}

fn nonunital() -> Result<Arc<Signature>> {
    Signature::free_nonunital(Signature::default_mixed().generators().to_vec())
}

fn two_even() -> Result<Arc<Signature>> {
    use crate::algebra::Generator;
    Signature::free_unital(vec![Generator::new("p", 0), Generator::new("q", 0)])
}

fn polynomial() -> Result<Arc<Signature>> {
    Signature::polynomial(0)
}

fn square_zero_algebra() -> Result<Arc<Signature>> {
    Ok(fixtures::square_zero()?.0)
}

/// Identifiers of every registered check, in suite order.
pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|r| r.id).collect()
}

/// Runs one check. Errors (unknown id, malformed input, arity too large)
/// come back as failed reports carrying the message.
pub fn run_check(spec: &CheckSpec) -> VerificationReport {
    let start = Instant::now();
    match run_inner(spec) {
        Ok(outcome) => VerificationReport::from_outcome(&spec.check_id, outcome, start.elapsed()),
        Err(e) => VerificationReport::from_error(&spec.check_id, &e, start.elapsed()),
    }
}

fn run_inner(spec: &CheckSpec) -> Result<report::Outcome> {
    let reg = registry()
        .into_iter()
        .find(|r| r.id == spec.check_id)
        .ok_or_else(|| Error::UnknownCheck(spec.check_id.clone()))?;
    if spec.samples == 0 {
        return Err(Error::Unsupported("samples must be at least 1".into()));
    }
    if let Some(n) = spec.max_arity {
        if n > reg.arity_limit {
            return Err(Error::Unsupported(format!(
                "check {} supports arity up to {}, requested {n}",
                reg.id, reg.arity_limit
            )));
        }
    }
    let mut koszul = Koszul::default();
    if let Some(m) = &spec.mutation {
        koszul = m.apply(koszul);
    }
    let ctx = Ctx::new(spec, koszul, (reg.algebra)()?, reg.max_arity)?;
    let mut outcome = report::Outcome::default();
    (reg.run)(&ctx, &mut outcome)?;
    Ok(outcome)
}

/// Runs the specs on up to `parallelism` workers. Reports follow spec order
/// whatever the parallelism.
pub fn run_suite(specs: &[CheckSpec], parallelism: usize) -> Vec<VerificationReport> {
    par::with_jobs(parallelism, || par::map(specs, run_check))
}

/// Every registered check with its defaults and the given seed and samples.
pub fn default_suite(seed: u64, samples: usize) -> Vec<CheckSpec> {
    check_ids()
        .into_iter()
        .map(|id| CheckSpec::new(id).with_seed(seed).with_samples(samples))
        .collect()
}

/// True iff every report passed (vacuously true for an empty suite).
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed())
}

