use std::time::Instant;

use super::MultiOperator;
use crate::algebra::{is_odd, Element};
use crate::par;
use crate::verify::report::{Counterexample, Outcome};
use crate::verify::{Sampler, VerificationReport};

/// Evaluates `f` on random homogeneous tuples and on every adjacent
/// transposition of each; passes iff the values agree up to the Koszul sign.
pub fn check_symmetry(f: &MultiOperator, samples: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut outcome = Outcome::default();
    let arity = f.arity();
    if arity >= 2 {
        let mut sampler = Sampler::new(f.signature(), seed);
        let tuples = sampler.tuples(samples.max(1), arity, true);
        let results = par::map(&tuples, |t| transposition_mismatch(f, t));
        for r in results {
            outcome.samples += 1;
            match r {
                Ok(Some(cx)) => outcome.record(cx),
                Ok(None) => {}
                Err(e) => return VerificationReport::from_error("symmetry", &e, start.elapsed()),
            }
        }
    } else {
        outcome.samples = samples.max(1);
    }
    VerificationReport::from_outcome("symmetry", outcome, start.elapsed())
}

fn transposition_mismatch(f: &MultiOperator, t: &[Element]) -> crate::Result<Option<Counterexample>> {
    let base = f.eval(t)?;
    for i in 0..t.len() - 1 {
        let mut swapped = t.to_vec();
        swapped.swap(i, i + 1);
        let da = t[i].degree().unwrap_or(0);
        let db = t[i + 1].degree().unwrap_or(0);
        let mut other = f.eval(&swapped)?;
        if is_odd(da * db) {
            other = -&other;
        }
        if other != base {
            return Ok(Some(Counterexample::new(
                format!("transpose slots {i} and {}", i + 1),
                t,
                &base,
                &other,
            )));
        }
    }
    Ok(None)
}
