use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{BracketSource, Koszul};
use crate::algebra::Signature;
use crate::numbers::{gauge_k, Rational};
use crate::operators::{mu, nr_bracket_with, MultiOperator};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaugeKind {
    Koszul,
    Borjeson,
    Trivial,
    Custom,
}

/// Coefficients `K_1, K_2, ..` of `X = sum K_n mu_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugePreset {
    kind: GaugeKind,
    custom: Vec<Rational>,
}

impl GaugePreset {
    pub fn koszul() -> Self {
        Self::of(GaugeKind::Koszul)
    }

    pub fn borjeson() -> Self {
        Self::of(GaugeKind::Borjeson)
    }

    pub fn trivial() -> Self {
        Self::of(GaugeKind::Trivial)
    }

    /// Explicit `K_1, K_2, ..`; missing entries are zero.
    pub fn custom(coefficients: Vec<Rational>) -> Self {
        GaugePreset {
            kind: GaugeKind::Custom,
            custom: coefficients,
        }
    }

    fn of(kind: GaugeKind) -> Self {
        GaugePreset {
            kind,
            custom: Vec::new(),
        }
    }

    pub fn kind(&self) -> GaugeKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            GaugeKind::Koszul => "koszul",
            GaugeKind::Borjeson => "borjeson",
            GaugeKind::Trivial => "trivial",
            GaugeKind::Custom => "custom",
        }
    }

    /// `K_n` for `n >= 1`.
    pub fn coefficient(&self, n: usize) -> Rational {
        assert!(n >= 1, "gauge coefficients start at index 1");
        match self.kind {
            GaugeKind::Koszul => gauge_k(n),
            GaugeKind::Borjeson if n == 1 => Rational::one(),
            GaugeKind::Borjeson | GaugeKind::Trivial => Rational::zero(),
            GaugeKind::Custom => self.custom.get(n - 1).cloned().unwrap_or_default(),
        }
    }

    /// `K_1 ..= K_len`.
    pub fn coefficients(&self, len: usize) -> Vec<Rational> {
        (1..=len).map(|n| self.coefficient(n)).collect()
    }
}

/// A finite sum of operators indexed by level, the truncation of an element
/// of `D(A)` to levels `-1 ..= max`.
#[derive(Clone, Debug, Default)]
pub struct LevelSeries {
    terms: BTreeMap<i32, MultiOperator>,
}

impl LevelSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(op: MultiOperator) -> Self {
        let mut s = Self::new();
        s.insert(op);
        s
    }

    /// `x` at level `-1` for an element, `f` at level `0` for a map.
    pub fn from_source(source: &BracketSource) -> Result<Self> {
        Ok(Self::single(match source {
            BracketSource::Element(x) => MultiOperator::constant(x)?,
            BracketSource::Endo(f) => MultiOperator::endomorphism(f),
        }))
    }

    /// Adds `op` to the component at its level.
    pub fn insert(&mut self, op: MultiOperator) {
        if op.is_trivially_zero() {
            return;
        }
        let level = op.level();
        let merged = match self.terms.remove(&level) {
            Some(old) => old.add(&op).expect("components share a level and degree"),
            None => op,
        };
        if !merged.is_trivially_zero() {
            self.terms.insert(level, merged);
        }
    }

    pub fn get(&self, level: i32) -> Option<&MultiOperator> {
        self.terms.get(&level)
    }

    pub fn levels(&self) -> impl Iterator<Item = (i32, &MultiOperator)> {
        self.terms.iter().map(|(l, op)| (*l, op))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Component of arity `n` (level `n - 1`) for `n = 0 ..= max_arity`,
    /// with zero operators where nothing survived.
    pub fn members(&self, sig: &Arc<Signature>, degree: i64, max_arity: usize) -> Vec<MultiOperator> {
        (0..=max_arity as i32)
            .map(|n| {
                self.terms
                    .get(&(n - 1))
                    .cloned()
                    .unwrap_or_else(|| MultiOperator::zero(sig, n - 1, degree))
            })
            .collect()
    }
}

impl Koszul {
    /// `sum_k (1/k!) [..[u, y]..., y]` for `y = sum c_h y_h`, keeping levels
    /// `-1 ..= max_level`. Terminates because every `y_h` moves levels in
    /// one direction.
    fn exp_ad(
        &self,
        u: &LevelSeries,
        y: &[(Rational, MultiOperator)],
        max_level: i32,
    ) -> Result<LevelSeries> {
        let mut out = u.clone();
        let mut term = u.clone();
        for k in 1u32.. {
            let mut next = LevelSeries::new();
            for (_, op) in term.levels() {
                for (c, yh) in y {
                    let level = op.level() + yh.level();
                    if !(-1..=max_level).contains(&level) {
                        continue;
                    }
                    let b = nr_bracket_with(self.nr, op, yh)?;
                    next.insert(b.scaled(c));
                }
            }
            if next.is_empty() {
                break;
            }
            let inv = Rational::one() / Rational::from_integer(k.into());
            term = LevelSeries::new();
            for (_, op) in next.levels() {
                let s = op.scaled(&inv);
                out.insert(s.clone());
                term.insert(s);
            }
        }
        Ok(out)
    }

    /// `exp([-, sum K_n mu_n]) exp([-, mu_-1]) u`, truncated at arity
    /// `max_arity`. With `unit_shift` false the `mu_-1` factor is omitted.
    pub fn exp_adjoint(
        &self,
        u: &LevelSeries,
        preset: &GaugePreset,
        max_arity: usize,
        unit_shift: bool,
    ) -> Result<LevelSeries> {
        let Some((_, first)) = u.levels().next() else {
            return Ok(LevelSeries::new());
        };
        let sig = first.signature().clone();
        let max_level = max_arity as i32 - 1;
        let shifted = if unit_shift {
            if !sig.is_unital() {
                return Err(Error::NonUnital);
            }
            let unit = mu(-1, &sig)?;
            self.exp_ad(u, &[(Rational::one(), unit)], max_level)?
        } else {
            u.clone()
        };
        let mut x = Vec::new();
        for n in 1..=(max_level + 1).max(0) as usize {
            let c = preset.coefficient(n);
            if !c.is_zero() {
                x.push((c, mu(n as i32, &sig)?));
            }
        }
        self.exp_ad(&shifted, &x, max_level)
    }
}
