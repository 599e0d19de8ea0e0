//! Graded associative algebras over the rationals: free algebras (unital,
//! non-unital and length-truncated) and the one-variable polynomial algebra.
//!
//! Every algebra here is a monomial algebra, so an element is a finite
//! rational combination of basis words and multiplication is concatenation
//! followed by the signature's truncation rule.

mod endo;
pub mod json;
mod sign;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

pub use endo::{EndoRule, Endomorphism};
pub use sign::{
    is_odd, koszul_sign, koszul_sign_of_sequence, permutations, shuffles, SignedPermutation,
};

use crate::numbers::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub degree: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, degree: i64) -> Self {
        Generator {
            id: id.into(),
            degree,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    FreeUnital,
    FreeNonunital,
    /// `T(V)` modulo the ideal spanned by words of length `>= max_len`.
    FreeTruncated { max_len: usize },
    /// `K[t]`; the variable must have even degree so the algebra is graded
    /// commutative and `t^n` never vanishes.
    Polynomial,
}

/// Which algebra an element lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    kind: AlgebraKind,
    generators: Vec<Generator>,
}

impl Signature {
    pub fn new(kind: AlgebraKind, generators: Vec<Generator>) -> Result<Arc<Self>> {
        if generators.len() > u8::MAX as usize {
            return Err(Error::InvalidSignature("at most 255 generators".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.id == g.id) {
                return Err(Error::InvalidSignature(format!(
                    "duplicate generator id {:?}",
                    g.id
                )));
            }
        }
        match kind {
            AlgebraKind::FreeTruncated { max_len: 0 } => {
                return Err(Error::InvalidSignature(
                    "truncated algebra needs maxLen >= 1".into(),
                ))
            }
            AlgebraKind::Polynomial => {
                if generators.len() != 1 {
                    return Err(Error::InvalidSignature(
                        "polynomial algebra has exactly one generator".into(),
                    ));
                }
                if is_odd(generators[0].degree) {
                    return Err(Error::InvalidSignature(
                        "polynomial variable must have even degree".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(Arc::new(Signature { kind, generators }))
    }

    pub fn free_unital(generators: Vec<Generator>) -> Result<Arc<Self>> {
        Self::new(AlgebraKind::FreeUnital, generators)
    }

    pub fn free_nonunital(generators: Vec<Generator>) -> Result<Arc<Self>> {
        Self::new(AlgebraKind::FreeNonunital, generators)
    }

    pub fn free_truncated(max_len: usize, generators: Vec<Generator>) -> Result<Arc<Self>> {
        Self::new(AlgebraKind::FreeTruncated { max_len }, generators)
    }

    /// `K[t]` with `t` of the given (even) degree.
    pub fn polynomial(var_degree: i64) -> Result<Arc<Self>> {
        Self::new(AlgebraKind::Polynomial, vec![Generator::new("t", var_degree)])
    }

    /// The ground field `K` seen as the free unital algebra on no generators.
    pub fn ground_field() -> Arc<Self> {
        Arc::new(Signature {
            kind: AlgebraKind::FreeUnital,
            generators: Vec::new(),
        })
    }

    /// Free unital algebra on `x` (degree 0), `e` (degree 1), `u` (degree -1).
    pub fn default_mixed() -> Arc<Self> {
        Self::free_unital(vec![
            Generator::new("x", 0),
            Generator::new("e", 1),
            Generator::new("u", -1),
        ])
        .expect("valid signature")
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn is_unital(&self) -> bool {
        !matches!(self.kind, AlgebraKind::FreeNonunital)
    }

    /// True when the algebra is graded commutative: the polynomial algebra,
    /// or a free algebra on at most one even generator.
    pub fn is_commutative(&self) -> bool {
        match self.kind {
            AlgebraKind::Polynomial => true,
            _ => match self.generators.as_slice() {
                [] => true,
                [g] => !is_odd(g.degree),
                _ => false,
            },
        }
    }

    pub fn generator_index(&self, id: &str) -> Result<u8> {
        self.generators
            .iter()
            .position(|g| g.id == id)
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownGenerator(id.to_string()))
    }

    pub fn word_degree(&self, word: &Word) -> i64 {
        word.letters()
            .iter()
            .map(|&l| self.generators[l as usize].degree)
            .sum()
    }

    /// Whether `word` is a nonzero basis element of this algebra.
    pub fn admits(&self, word: &Word) -> bool {
        if word.letters().iter().any(|&l| l as usize >= self.generators.len()) {
            return false;
        }
        match self.kind {
            AlgebraKind::FreeUnital | AlgebraKind::Polynomial => true,
            AlgebraKind::FreeNonunital => !word.is_empty(),
            AlgebraKind::FreeTruncated { max_len } => word.len() < max_len,
        }
    }

    /// All basis words of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut layer = vec![Word::unit()];
        for len in 0..=max_len {
            out.extend(layer.iter().filter(|w| self.admits(w)).cloned());
            if len == max_len {
                break;
            }
            let letters = match self.kind {
                AlgebraKind::Polynomial => 1,
                _ => self.generators.len(),
            };
            layer = layer
                .iter()
                .flat_map(|w| (0..letters as u8).map(move |l| w.with_letter(l)))
                .collect();
        }
        out
    }

    fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// A basis monomial: a sequence of generator indices. The empty word is the
/// unit. In the polynomial algebra `t^n` is the word of `n` copies of `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(SmallVec<[u8; 16]>);

impl Word {
    pub fn unit() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = u8>) -> Self {
        Word(letters.into_iter().collect())
    }

    /// `t^n` in the polynomial algebra.
    pub fn power(n: usize) -> Self {
        Word(std::iter::repeat_n(0, n).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    fn with_letter(&self, l: u8) -> Word {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }
}

/// A finite rational linear combination of basis words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    sig: Arc<Signature>,
    /// Sorted by word, without repeats or zero coefficients.
    terms: Vec<(Word, Rational)>,
}

/// Sorts and merges repeated words, dropping zero coefficients.
fn normalize(mut v: Vec<(Word, Rational)>) -> Vec<(Word, Rational)> {
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Word, Rational)> = Vec::with_capacity(v.len());
    for (w, c) in v {
        match out.last_mut() {
            Some((last, acc)) if *last == w => *acc += c,
            _ => out.push((w, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl Element {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        Element {
            sig: sig.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(sig: &Arc<Signature>) -> Result<Self> {
        if !sig.is_unital() {
            return Err(Error::NonUnital);
        }
        Ok(Self::word(sig, Word::unit(), Rational::one()))
    }

    pub fn scalar(sig: &Arc<Signature>, c: Rational) -> Result<Self> {
        Ok(Self::one(sig)? * c)
    }

    pub fn generator(sig: &Arc<Signature>, id: &str) -> Result<Self> {
        let idx = sig.generator_index(id)?;
        Ok(Self::word(sig, Word::from_letters([idx]), Rational::one()))
    }

    /// `c * word`, or zero when the word is not a basis element (for example
    /// a word killed by truncation).
    pub fn word(sig: &Arc<Signature>, word: Word, c: Rational) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() && sig.admits(&word) {
            terms.push((word, c));
        }
        Element {
            sig: sig.clone(),
            terms,
        }
    }

    /// Builds an element from `(word, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        sig: &Arc<Signature>,
        terms: impl IntoIterator<Item = (Word, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(sig);
        for (w, c) in terms {
            if w.letters().iter().any(|&l| l as usize >= sig.generators.len()) {
                return Err(Error::InvalidWord(format!("{w:?}")));
            }
            if !sig.is_unital() && w.is_empty() {
                return Err(Error::NonUnital);
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter().map(|(w, c)| (w, c))
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        match self.terms.binary_search_by(|(x, _)| x.cmp(w)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds an element from unsorted terms, merging repeats once and
    /// dropping words the signature kills.
    pub(crate) fn from_raw(sig: &Arc<Signature>, mut terms: Vec<(Word, Rational)>) -> Self {
        terms.retain(|(w, _)| sig.admits(w));
        Element {
            sig: sig.clone(),
            terms: normalize(terms),
        }
    }

    /// Appends the terms of `c * self` to a buffer for [`Element::from_raw`].
    pub(crate) fn push_scaled(&self, buf: &mut Vec<(Word, Rational)>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            buf.extend(self.terms.iter().cloned());
        } else {
            buf.extend(self.terms.iter().map(|(w, d)| (w.clone(), d * c)));
        }
    }

    /// Adds `c * w`, dropping words the signature kills.
    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() || !self.sig.admits(&w) {
            return;
        }
        match self.terms.binary_search_by(|(x, _)| x.cmp(&w)) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (w, c)),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Rational) {
        debug_assert!(self.sig.same(&other.sig));
        if c.is_zero() || other.terms.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            self.terms = other.scaled(c).terms;
            return;
        }
        let unit = c.is_one();
        let old = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(old.len() + other.terms.len());
        let mut a = old.into_iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let order = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => break,
            };
            let scaled = |d: &Rational| if unit { d.clone() } else { d * c };
            match order {
                std::cmp::Ordering::Less => out.push(a.next().unwrap()),
                std::cmp::Ordering::Greater => {
                    let (w, d) = b.next().unwrap();
                    out.push((w.clone(), scaled(d)));
                }
                std::cmp::Ordering::Equal => {
                    let (w, mut x) = a.next().unwrap();
                    x += scaled(&b.next().unwrap().1);
                    if !x.is_zero() {
                        out.push((w, x));
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn scaled(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Self::zero(&self.sig);
        }
        if c.is_one() {
            return self.clone();
        }
        Element {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    /// The associative product, reporting a signature mismatch as an error.
    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        if !self.sig.same(&other.sig) {
            return Err(Error::SignatureMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let w = w1.concat(w2);
                if self.sig.admits(&w) {
                    terms.push((w, c1 * c2));
                }
            }
        }
        Ok(Element {
            sig: self.sig.clone(),
            terms: normalize(terms),
        })
    }

    /// Product of a sequence; the empty product is the unit.
    pub fn product<'a>(sig: &Arc<Signature>, factors: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        let mut it = factors.into_iter();
        let Some(first) = it.next() else {
            return Self::one(sig);
        };
        let mut acc = first.clone();
        for f in it {
            acc = acc.try_mul(f)?;
        }
        Ok(acc)
    }

    /// Degree of a nonzero homogeneous element; `None` for zero or mixed
    /// degrees.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|(w, _)| self.sig.word_degree(w));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Splits into homogeneous parts keyed by degree; the parts sum to `self`.
    pub fn homogeneous_components(&self) -> BTreeMap<i64, Element> {
        let mut out: BTreeMap<i64, Element> = BTreeMap::new();
        for (w, c) in &self.terms {
            let d = self.sig.word_degree(w);
            out.entry(d)
                .or_insert_with(|| Self::zero(&self.sig))
                .terms
                .push((w.clone(), c.clone()));
        }
        out
    }

    /// Homogeneous parts paired with their degree.
    pub fn split(&self) -> Vec<(i64, Element)> {
        if let Some(d) = self.degree() {
            return vec![(d, self.clone())];
        }
        self.homogeneous_components().into_iter().collect()
    }

    /// The graded commutator `{a,b} = ab - (-1)^{|a||b|} ba`, extended
    /// bilinearly over homogeneous components.
    pub fn commutator(&self, other: &Element) -> Result<Element> {
        if !self.sig.same(&other.sig) {
            return Err(Error::SignatureMismatch);
        }
        let mut out = Self::zero(&self.sig);
        for (da, a) in self.split() {
            for (db, b) in other.split() {
                out += &a.try_mul(&b)?;
                let ba = b.try_mul(&a)?;
                if is_odd(da * db) {
                    out += &ba;
                } else {
                    out -= &ba;
                }
            }
        }
        Ok(out)
    }

    /// Plain-text rendering, e.g. `2 x·e - 1/2 u`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// LaTeX rendering, e.g. `2\,x e - \frac{1}{2}\,u`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let word = self.latex_word(w);
            let coeff = if a.is_integer() {
                a.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            match (a.is_one(), w.is_empty()) {
                (true, true) => s.push('1'),
                (true, false) => s.push_str(&word),
                (false, true) => s.push_str(&coeff),
                (false, false) => {
                    s.push_str(&coeff);
                    s.push_str("\\,");
                    s.push_str(&word);
                }
            }
        }
        s
    }

    fn word_text(&self, w: &Word, sep: &str) -> String {
        if let AlgebraKind::Polynomial = self.sig.kind {
            let t = &self.sig.generators[0].id;
            return match w.len() {
                1 => t.clone(),
                n => format!("{t}^{n}"),
            };
        }
        w.letters()
            .iter()
            .map(|&l| self.sig.generators[l as usize].id.as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    fn latex_word(&self, w: &Word) -> String {
        if let AlgebraKind::Polynomial = self.sig.kind {
            let t = &self.sig.generators[0].id;
            return match w.len() {
                1 => t.clone(),
                n => format!("{t}^{{{n}}}"),
            };
        }
        self.word_text(w, " ")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            match (a.is_one(), w.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&self.word_text(w, "·"))?,
                (false, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a} {}", self.word_text(w, "·"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        assert!(self.sig.same(&rhs.sig), "signature mismatch");
        self.add_scaled(rhs, &Rational::one());
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        assert!(self.sig.same(&rhs.sig), "signature mismatch");
        self.add_scaled(rhs, &-Rational::one());
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scaled(&-Rational::one())
    }
}

/// Panics on signature mismatch; use [`Element::try_mul`] to get an error.
impl Mul<&Element> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("signature mismatch")
    }
}

impl Mul<Rational> for Element {
    type Output = Element;
    fn mul(self, c: Rational) -> Element {
        self.scaled(&c)
    }
}

impl Mul<&Rational> for &Element {
    type Output = Element;
    fn mul(self, c: &Rational) -> Element {
        self.scaled(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{int, ratio};

    fn gens() -> Vec<Generator> {
        vec![
            Generator::new("v1", 0),
            Generator::new("v2", 0),
            Generator::new("v3", 0),
        ]
    }

    #[test]
    fn unit_is_neutral() {
        let sig = Signature::default_mixed();
        let one = Element::one(&sig).unwrap();
        let w = &Element::generator(&sig, "x").unwrap() * &Element::generator(&sig, "e").unwrap();
        assert_eq!(&one * &w, w);
        assert_eq!(&w * &one, w);
    }

    #[test]
    fn truncation_kills_long_words() {
        let sig = Signature::free_truncated(3, gens()).unwrap();
        let v1 = Element::generator(&sig, "v1").unwrap();
        let v2 = Element::generator(&sig, "v2").unwrap();
        let v3 = Element::generator(&sig, "v3").unwrap();
        let v12 = &v1 * &v2;
        assert_eq!(v12.num_terms(), 1);
        assert!((&v12 * &v3).is_zero());
    }

    #[test]
    fn nonunital_has_no_one() {
        let sig = Signature::free_nonunital(gens()).unwrap();
        assert!(matches!(Element::one(&sig), Err(Error::NonUnital)));
    }

    #[test]
    fn mismatched_signatures() {
        let a = Element::generator(&Signature::default_mixed(), "x").unwrap();
        let b = Element::generator(&Signature::polynomial(0).unwrap(), "t").unwrap();
        assert!(matches!(a.try_mul(&b), Err(Error::SignatureMismatch)));
    }

    #[test]
    fn invalid_signatures() {
        assert!(Signature::free_truncated(0, gens()).is_err());
        assert!(Signature::polynomial(1).is_err());
        assert!(Signature::free_unital(vec![Generator::new("a", 0), Generator::new("a", 1)]).is_err());
    }

    #[test]
    fn components_split_by_degree() {
        let sig = Signature::default_mixed();
        assert!(Element::zero(&sig).homogeneous_components().is_empty());
        let x = Element::generator(&sig, "x").unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let c = (&x + &e).homogeneous_components();
        assert_eq!(c.len(), 2);
        assert_eq!(c[&0], x);
        assert_eq!(c[&1], e);
        assert_eq!(x.homogeneous_components()[&0], x);
    }

    #[test]
    fn commutator_signs() {
        let sig = Signature::default_mixed();
        let one = Element::one(&sig).unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let x = Element::generator(&sig, "x").unwrap();
        assert!(one.commutator(&e).unwrap().is_zero());
        // odd-odd: {e,e} = 2 ee
        assert_eq!(e.commutator(&e).unwrap(), (&e * &e) * int(2));
        assert_eq!(x.commutator(&e).unwrap(), &(&x * &e) - &(&e * &x));
        let poly = Signature::polynomial(0).unwrap();
        let t = Element::generator(&poly, "t").unwrap();
        assert!(t.commutator(&t).unwrap().is_zero());
    }

    #[test]
    fn rendering() {
        let sig = Signature::default_mixed();
        let x = Element::generator(&sig, "x").unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let v = &(&(&x * &e) * &ratio(1, 2)) - &(&e * &x);
        assert_eq!(v.to_string(), "1/2 x·e - e·x");
        assert_eq!(v.to_latex(), "\\frac{1}{2}\\,x e - e x");
        let poly = Signature::polynomial(0).unwrap();
        let t3 = Element::word(&poly, Word::power(3), int(12));
        assert_eq!(t3.to_string(), "12 t^3");
    }

    #[test]
    fn words_enumeration_respects_kind() {
        let sig = Signature::free_nonunital(gens()).unwrap();
        let ws = sig.words_up_to(2);
        assert_eq!(ws.len(), 3 + 9);
        let poly = Signature::polynomial(0).unwrap();
        assert_eq!(poly.words_up_to(4).len(), 5);
    }
}
