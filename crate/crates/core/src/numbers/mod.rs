//! Exact rationals and the combinatorial number tables used by the bracket
//! formulas: Bernoulli numbers, the two-index numbers `B(i,j)`, Stirling
//! numbers of the second kind and the gauge coefficients `K(n)`.
//!
//! Bernoulli numbers follow the convention `B(1) = -1/2`, i.e. the generating
//! series `x / (e^x - 1)`. The other convention (`B(1) = +1/2`) silently
//! breaks the Bering formula, so it is not offered.

mod rational;

use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub use rational::Rational;

/// Builds the rational `num / den`.
///
/// # Panics
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer string.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Serde adapter writing rationals as `"p/q"` strings. Deserialization also
/// accepts JSON integers.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(int(n)),
            Raw::Str(s) => parse_rational(&s)
                .ok_or_else(|| serde::de::Error::custom(format!("invalid rational {s:?}"))),
        }
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod rational_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format_rational(q))?;
        }
        seq.end()
    }
}

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static STIRLING: RwLock<Vec<Vec<BigUint>>> = RwLock::new(Vec::new());
static GAUGE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// The Bernoulli number `B(n)` with `B(1) = -1/2`.
///
/// Computed from `sum_{k=0}^{n} C(n+1,k) B(k) = 0` and memoized.
pub fn bernoulli(n: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().unwrap().get(n) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().unwrap();
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= n {
        let m = table.len();
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += Rational::from_integer(binomial(m + 1, k)) * b;
            }
        }
        let next = -acc / Rational::from_integer(BigInt::from(m + 1));
        table.push(next);
    }
    table[n].clone()
}

/// `B(i,j) = (-1)^j sum_{k=0}^{j} C(j,k) B(i+k)`.
pub fn bernoulli_two_index(i: usize, j: usize) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=j {
        acc += Rational::from_integer(binomial(j, k)) * bernoulli(i + k);
    }
    if j % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// Stirling number of the second kind `S{n,k}`; zero when `k > n`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if let Some(row) = STIRLING.read().unwrap().get(n) {
        return row[k].clone();
    }
    let mut table = STIRLING.write().unwrap();
    if table.is_empty() {
        table.push(vec![BigUint::one()]);
    }
    while table.len() <= n {
        let m = table.len();
        let prev = &table[m - 1];
        let mut row = vec![BigUint::zero(); m + 1];
        for (j, slot) in row.iter_mut().enumerate().skip(1) {
            let stay = prev.get(j).map(|s| s * BigUint::from(j)).unwrap_or_default();
            *slot = stay + &prev[j - 1];
        }
        table.push(row);
    }
    table[n][k].clone()
}

/// Gauge coefficient `K(n)`, `n >= 1`, from the Stirling recursion
/// `K(n) = -2/((n+2)(n-1)) sum_{i=1}^{n-1} S{n+1,i} K(i)` with `K(1) = 1`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn gauge_k(n: usize) -> Rational {
    assert!(n >= 1, "gauge coefficients are indexed from 1");
    if let Some(k) = GAUGE.read().unwrap().get(n - 1) {
        return k.clone();
    }
    // collect Stirling rows before taking the gauge lock
    for m in 0..=n + 1 {
        stirling2(m, 0);
    }
    let mut table = GAUGE.write().unwrap();
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() < n {
        let m = table.len() + 1;
        let mut acc = Rational::zero();
        for (i, k) in table.iter().enumerate() {
            let s = BigInt::from(stirling2(m + 1, i + 1));
            acc += Rational::from_integer(s) * k;
        }
        let scale = ratio(-2, ((m + 2) * (m - 1)) as i64);
        table.push(scale * acc);
    }
    table[n - 1].clone()
}

/// A frozen snapshot of the coefficient families consumed by the closed
/// bracket formulas. Tests build perturbed copies to check that the verifier
/// notices a wrong coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    bernoulli: Vec<Rational>,
    two_index: Vec<Vec<Rational>>,
}

impl CoefficientTable {
    /// Exact tables covering every index with `i + j <= max`.
    pub fn standard(max: usize) -> Self {
        let bernoulli = (0..=max).map(bernoulli).collect();
        let two_index = (0..=max)
            .map(|i| (0..=max - i).map(|j| bernoulli_two_index(i, j)).collect())
            .collect();
        CoefficientTable {
            bernoulli,
            two_index,
        }
    }

    pub fn max_index(&self) -> usize {
        self.bernoulli.len() - 1
    }

    pub fn bernoulli(&self, n: usize) -> &Rational {
        &self.bernoulli[n]
    }

    pub fn two_index(&self, i: usize, j: usize) -> &Rational {
        &self.two_index[i][j]
    }

    /// Adds `delta` to `B(i,j)` and `B(j,i)` only.
    pub fn perturb_two_index(&mut self, i: usize, j: usize, delta: &Rational) {
        self.two_index[i][j] += delta;
        if i != j {
            self.two_index[j][i] += delta;
        }
    }

    pub fn perturb_bernoulli(&mut self, n: usize, delta: &Rational) {
        self.bernoulli[n] += delta;
    }
}

impl Default for CoefficientTable {
    fn default() -> Self {
        Self::standard(12)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_matches_series() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(10), ratio(5, 66));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
    }

    #[test]
    fn two_index_values() {
        assert_eq!(bernoulli_two_index(1, 1), ratio(1, 3));
        assert_eq!(bernoulli_two_index(2, 2), ratio(2, 15));
        for n in 0..10 {
            assert_eq!(bernoulli_two_index(0, n), bernoulli(n));
        }
    }

    #[test]
    fn stirling_edges() {
        assert_eq!(stirling2(0, 0), BigUint::one());
        assert_eq!(stirling2(5, 5), BigUint::one());
        assert_eq!(stirling2(6, 1), BigUint::one());
        assert_eq!(stirling2(3, 5), BigUint::zero());
        assert_eq!(stirling2(4, 0), BigUint::zero());
    }

    #[test]
    fn gauge_first_terms() {
        assert_eq!(gauge_k(1), int(1));
        assert_eq!(gauge_k(2), ratio(-1, 2));
        assert_eq!(gauge_k(3), ratio(1, 2));
        assert_eq!(gauge_k(4), ratio(-2, 3));
        assert_eq!(gauge_k(5), ratio(11, 12));
        assert_eq!(gauge_k(6), ratio(-3, 4));
        assert_eq!(gauge_k(7), ratio(-11, 6));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&ratio(-4, 6)), "-2/3");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(parse_rational(" 3/-6"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn perturbed_table_differs_only_where_asked() {
        let base = CoefficientTable::standard(6);
        let mut t = base.clone();
        t.perturb_two_index(1, 2, &int(1));
        assert_eq!(t.two_index(1, 2), &(base.two_index(1, 2) + int(1)));
        assert_eq!(t.two_index(2, 1), &(base.two_index(2, 1) + int(1)));
        assert_eq!(t.two_index(1, 1), base.two_index(1, 1));
    }
}
