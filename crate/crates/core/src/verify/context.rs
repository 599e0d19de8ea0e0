use std::sync::Arc;

use super::report::{Counterexample, Outcome};
use super::{CheckSpec, Sampler};
use crate::algebra::{Element, Signature};
use crate::brackets::{BracketSource, Koszul};
use crate::operators::MultiOperator;
use crate::{par, Result};

/// Everything a check needs: the parsed check parameters, the construction context and
/// a seeded sampler factory.
pub(crate) struct Ctx {
    pub koszul: Koszul,
    pub sig: Arc<Signature>,
    pub sources: Vec<BracketSource>,
    pub max_arity: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Ctx {
    pub fn new(spec: &CheckSpec, koszul: Koszul, default_sig: Arc<Signature>, max_arity: usize) -> Result<Self> {
        let sig = match &spec.algebra {
            Some(doc) => doc.to_signature()?,
            None => default_sig,
        };
        let sources = spec
            .sources
            .iter()
            .map(|s| s.to_source(&sig))
            .collect::<Result<_>>()?;
        Ok(Ctx {
            koszul,
            sig,
            sources,
            max_arity: spec.max_arity.unwrap_or(max_arity),
            samples: spec.samples,
            seed: spec.seed,
        })
    }

    /// An independent stream for each `stream` tag.
    pub fn sampler_on(&self, sig: &Arc<Signature>, stream: u64) -> Sampler {
        let mixed = self
            .seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(stream.wrapping_mul(0xbf58_476d_1ce4_e5b9));
        Sampler::new(sig, mixed)
    }

    /// `count` tuples of homogeneous elements of independent random degrees.
    /// Elements get fewer terms as the arity grows, to keep permutation sums
    /// affordable; by multilinearity this loses nothing.
    pub fn tuples_on(&self, sig: &Arc<Signature>, stream: u64, n: usize, count: usize) -> Vec<Vec<Element>> {
        let cap = match n {
            0..=3 => 3,
            4 => 2,
            _ => 1,
        };
        let mut s = self.sampler_on(sig, stream).with_max_terms(cap);
        s.tuples(count, n, true)
    }

    pub fn tuples(&self, stream: u64, n: usize) -> Vec<Vec<Element>> {
        self.tuples_on(&self.sig, stream, n, self.samples)
    }

    /// Evaluates `f` on every tuple (in parallel) and records the first
    /// tuple, by position, on which the two sides differ.
    pub fn compare<F>(&self, out: &mut Outcome, label: &str, tuples: &[Vec<Element>], f: F) -> Result<()>
    where
        F: Fn(&[Element]) -> Result<(Element, Element)> + Sync + Send,
    {
        if out.failed() {
            return Ok(());
        }
        let results = par::map(tuples, |t| f(t));
        for (t, r) in tuples.iter().zip(results) {
            let (lhs, rhs) = r?;
            out.samples += 1;
            if lhs != rhs {
                out.record(Counterexample::new(label, t, &lhs, &rhs));
                break;
            }
        }
        Ok(())
    }

    pub fn compare_ops(
        &self,
        out: &mut Outcome,
        label: &str,
        lhs: &MultiOperator,
        rhs: &MultiOperator,
        tuples: &[Vec<Element>],
    ) -> Result<()> {
        self.compare(out, label, tuples, |t| Ok((lhs.eval(t)?, rhs.eval(t)?)))
    }

    pub fn expect_zero(
        &self,
        out: &mut Outcome,
        label: &str,
        op: &MultiOperator,
        tuples: &[Vec<Element>],
    ) -> Result<()> {
        let zero = Element::zero(op.signature());
        self.compare(out, label, tuples, |t| Ok((op.eval(t)?, zero.clone())))
    }

    /// Passes iff `op` is nonzero on at least one tuple. A failure carries
    /// the last tuple tried, with both sides zero.
    pub fn expect_nonzero(
        &self,
        out: &mut Outcome,
        label: &str,
        op: &MultiOperator,
        tuples: &[Vec<Element>],
    ) -> Result<()> {
        if out.failed() {
            return Ok(());
        }
        for t in tuples {
            out.samples += 1;
            if !op.eval(t)?.is_zero() {
                return Ok(());
            }
        }
        let zero = Element::zero(op.signature());
        let last: &[Element] = tuples.last().map(|t| t.as_slice()).unwrap_or(&[]);
        out.record(Counterexample::new(
            format!("{label}: expected a nonzero value"),
            last,
            &zero,
            &zero,
        ));
        Ok(())
    }
}
