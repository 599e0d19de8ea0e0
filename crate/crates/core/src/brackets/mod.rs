//! Koszul brackets `Psi^n` and reduced Koszul brackets `Phi^n` of an element
//! or an endomorphism of a graded associative algebra.
//!
//! `Psi^n` and `Phi^n` are operators with `n` arguments (level `n - 1`).
//! Four independent constructions are provided:
//!
//! * [`Formula::Recursive`]: the recursion through Nijenhuis-Richardson
//!   brackets with the symmetrized products `mu_h`;
//! * [`Formula::Bering`]: the closed sum over permutations weighted by the
//!   two-index Bernoulli numbers `B(i,j)`;
//! * [`Formula::Bandiera`]: nested graded commutators of the iterated
//!   brackets `[..[f, L_a1], .., L_ak](1)`, weighted by Bernoulli numbers;
//! * [`Formula::ExpAdjoint`]: `exp([-, sum K_n mu_n]) exp([-, mu_-1]) u`.
//!
//! On graded commutative algebras [`Formula::Commutative`] evaluates the
//! classical permutation formula.

mod antibracket;
mod closed;
mod export;
mod gauge;
mod recursive;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::One;

pub use antibracket::quantum_antibracket;
pub use closed::iterated_bracket;
pub use export::Evaluation;
pub use gauge::{GaugeKind, GaugePreset, LevelSeries};

use crate::algebra::{Element, Endomorphism, Signature};
use crate::numbers::{CoefficientTable, Rational};
use crate::operators::{MultiOperator, NrConfig};
use crate::{Error, Result};

/// What the brackets are attached to: an element `x` or a linear map `f`.
#[derive(Clone, Debug, PartialEq)]
pub enum BracketSource {
    Element(Element),
    Endo(Endomorphism),
}

impl BracketSource {
    /// An element source; `x` must be homogeneous.
    pub fn element(x: Element) -> Result<Self> {
        if !x.is_homogeneous() {
            return Err(Error::Inhomogeneous(x.to_string()));
        }
        Ok(BracketSource::Element(x))
    }

    pub fn endo(f: Endomorphism) -> Self {
        BracketSource::Endo(f)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        match self {
            BracketSource::Element(x) => x.signature(),
            BracketSource::Endo(f) => f.signature(),
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            BracketSource::Element(x) => x.degree().unwrap_or(0),
            BracketSource::Endo(f) => f.degree(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Recursive,
    Bering,
    Bandiera,
    Commutative,
    ExpAdjoint,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Recursive => "recursive",
            Formula::Bering => "bering",
            Formula::Bandiera => "bandiera",
            Formula::Commutative => "commutative",
            Formula::ExpAdjoint => "exp-adjoint",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "recursive" => Formula::Recursive,
            "bering" => Formula::Bering,
            "bandiera" => Formula::Bandiera,
            "commutative" => Formula::Commutative,
            "exp-adjoint" => Formula::ExpAdjoint,
            other => return Err(Error::Unsupported(format!("unknown formula {other:?}"))),
        })
    }
}

/// The brackets `Psi^0 .. Psi^N` (or `Phi^0 .. Phi^N`) of one source.
#[derive(Clone, Debug)]
pub struct BracketFamily {
    pub source: BracketSource,
    pub reduced: bool,
    pub formula: Formula,
    pub max_arity: usize,
    /// `members[n]` takes `n` arguments.
    pub members: Vec<MultiOperator>,
}

impl BracketFamily {
    pub fn get(&self, n: usize) -> Option<&MultiOperator> {
        self.members.get(n)
    }
}

/// Construction context: the coefficient tables used by the closed formulas
/// and the Nijenhuis-Richardson product configuration. `Koszul::default()`
/// is the correct one; other contexts exist to test the verifier.
#[derive(Clone, Debug)]
pub struct Koszul {
    table: Arc<CoefficientTable>,
    nr: NrConfig,
}

impl Default for Koszul {
    fn default() -> Self {
        Koszul {
            table: Arc::new(CoefficientTable::standard(26)),
            nr: NrConfig::default(),
        }
    }
}

impl Koszul {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_table(mut self, table: CoefficientTable) -> Self {
        self.table = Arc::new(table);
        self
    }

    pub fn with_nr(mut self, nr: NrConfig) -> Self {
        self.nr = nr;
        self
    }

    pub fn nr(&self) -> NrConfig {
        self.nr
    }

    pub fn table(&self) -> &CoefficientTable {
        &self.table
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if n > self.table.max_index() {
            return Err(Error::Unsupported(format!(
                "arity {n} exceeds the coefficient table bound {}",
                self.table.max_index()
            )));
        }
        Ok(())
    }

    /// `Psi^n` by the requested construction.
    pub fn psi(&self, source: &BracketSource, n: usize, formula: Formula) -> Result<MultiOperator> {
        self.check_arity(n)?;
        match formula {
            Formula::Recursive => {
                let fam = self.psi_recursive_family(source, n)?;
                Ok(fam[n].clone())
            }
            Formula::Bering => self.psi_bering(source, n),
            Formula::Bandiera => self.psi_bandiera(source, n),
            Formula::Commutative => self.psi_commutative(source, n),
            Formula::ExpAdjoint => {
                let fam = self.psi_exp_adjoint_family(source, n, &GaugePreset::koszul())?;
                Ok(fam[n].clone())
            }
        }
    }

    /// `Psi^0 .. Psi^max_arity`.
    pub fn psi_family(
        &self,
        source: &BracketSource,
        max_arity: usize,
        formula: Formula,
    ) -> Result<BracketFamily> {
        self.check_arity(max_arity)?;
        let members = match formula {
            Formula::Recursive => self.psi_recursive_family(source, max_arity)?,
            Formula::ExpAdjoint => {
                self.psi_exp_adjoint_family(source, max_arity, &GaugePreset::koszul())?
            }
            _ => (0..=max_arity)
                .map(|n| self.psi(source, n, formula))
                .collect::<Result<_>>()?,
        };
        Ok(BracketFamily {
            source: source.clone(),
            reduced: false,
            formula,
            max_arity,
            members,
        })
    }

    /// `Phi^0 .. Phi^max_arity` by the recursion.
    pub fn phi_family(&self, source: &BracketSource, max_arity: usize) -> Result<BracketFamily> {
        Ok(BracketFamily {
            source: source.clone(),
            reduced: true,
            formula: Formula::Recursive,
            max_arity,
            members: self.phi_recursive_family(source, max_arity)?,
        })
    }

    /// `Phi^n` by the recursion.
    pub fn phi_recursive(&self, source: &BracketSource, n: usize) -> Result<MultiOperator> {
        Ok(self.phi_recursive_family(source, n)?[n].clone())
    }

    fn psi_recursive_family(&self, source: &BracketSource, n: usize) -> Result<Vec<MultiOperator>> {
        match source {
            BracketSource::Element(_) => self.phi_recursive_family(source, n),
            BracketSource::Endo(f) => {
                let sig = f.signature();
                let phi_f = self.phi_recursive_family(source, n)?;
                let phi_f1 =
                    self.phi_recursive_family(&BracketSource::Element(f.at_unit()?), n)?;
                phi_f
                    .iter()
                    .zip(&phi_f1)
                    .map(|(a, b)| {
                        MultiOperator::linear(
                            sig,
                            a.level(),
                            [(Rational::one(), a.clone()), (Rational::one(), b.clone())],
                        )
                    })
                    .collect()
            }
        }
    }

    fn psi_exp_adjoint_family(
        &self,
        source: &BracketSource,
        max_arity: usize,
        preset: &GaugePreset,
    ) -> Result<Vec<MultiOperator>> {
        let series = LevelSeries::from_source(source)?;
        let out = self.exp_adjoint(&series, preset, max_arity, true)?;
        Ok(out.members(source.signature(), source.degree(), max_arity))
    }

    /// `Phi^n_f` of the extension to algebras without unit:
    /// `exp([-, sum K_n mu_n]) f`, with no `mu_-1` factor.
    pub fn phi_nonunital(&self, f: &Endomorphism, n: usize) -> Result<MultiOperator> {
        let series = LevelSeries::from_source(&BracketSource::Endo(f.clone()))?;
        let out = self.exp_adjoint(&series, &GaugePreset::koszul(), n, false)?;
        Ok(out.members(f.signature(), f.degree(), n)[n].clone())
    }
}

/// `Phi^n` by the recursion, default context.
pub fn phi_recursive(source: &BracketSource, n: usize) -> Result<MultiOperator> {
    Koszul::default().phi_recursive(source, n)
}

/// `Psi^n` by the requested construction, default context.
pub fn psi(source: &BracketSource, n: usize, formula: Formula) -> Result<MultiOperator> {
    Koszul::default().psi(source, n, formula)
}

pub fn psi_bering(source: &BracketSource, n: usize) -> Result<MultiOperator> {
    Koszul::default().psi_bering(source, n)
}

pub fn psi_bandiera(source: &BracketSource, n: usize) -> Result<MultiOperator> {
    Koszul::default().psi_bandiera(source, n)
}

pub fn psi_commutative(f: &Endomorphism, n: usize) -> Result<MultiOperator> {
    Koszul::default().psi_commutative(&BracketSource::Endo(f.clone()), n)
}

pub fn phi_nonunital(f: &Endomorphism, n: usize) -> Result<MultiOperator> {
    Koszul::default().phi_nonunital(f, n)
}

pub fn exp_adjoint(
    u: &LevelSeries,
    preset: &GaugePreset,
    max_arity: usize,
    unit_shift: bool,
) -> Result<LevelSeries> {
    Koszul::default().exp_adjoint(u, preset, max_arity, unit_shift)
}
