use super::{BracketSource, Koszul};
use crate::numbers::int;
use crate::operators::{mu, nr_bracket_with, MultiOperator};
use crate::{Error, Result};

impl Koszul {
    /// `Phi^0 .. Phi^n` by the recursion through `[-, mu_h]`.
    pub(super) fn phi_recursive_family(
        &self,
        source: &BracketSource,
        n: usize,
    ) -> Result<Vec<MultiOperator>> {
        let sig = source.signature();
        if !sig.is_unital() {
            return Err(Error::NonUnital);
        }
        let mus = (1..=n)
            .map(|h| mu(h as i32, sig))
            .collect::<Result<Vec<_>>>()?;
        let bracket_sum = |fam: &[MultiOperator], top: usize, denom: usize| {
            let level = top as i32 - 1;
            let mut terms = Vec::new();
            for h in 1..=denom {
                let prev = &fam[top - h];
                let b = nr_bracket_with(self.nr, prev, &mus[h - 1])?;
                let sign = if h % 2 == 1 { 1 } else { -1 };
                terms.push((int(sign) / int(denom as i64), b));
            }
            MultiOperator::linear(sig, level, terms)
        };
        let mut fam = Vec::with_capacity(n + 1);
        match source {
            BracketSource::Element(x) => {
                fam.push(MultiOperator::constant(x)?);
                for k in 1..=n {
                    let next = bracket_sum(&fam, k, k)?;
                    fam.push(next);
                }
            }
            BracketSource::Endo(f) => {
                fam.push(MultiOperator::zero(sig, -1, f.degree()));
                if n >= 1 {
                    fam.push(MultiOperator::endomorphism(f));
                }
                for k in 2..=n {
                    let next = bracket_sum(&fam, k, k - 1)?;
                    fam.push(next);
                }
            }
        }
        Ok(fam)
    }
}
