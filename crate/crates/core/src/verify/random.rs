use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraKind, Element, Signature, Word};
use crate::numbers::int;

/// Longest word drawn by the sampler.
pub const MAX_WORD_LEN: usize = 3;

/// Seeded source of random algebra elements. ChaCha8 keeps streams identical
/// across platforms.
pub struct Sampler {
    rng: ChaCha8Rng,
    sig: Arc<Signature>,
    words: Vec<Word>,
    max_terms: usize,
}

impl Sampler {
    pub fn new(sig: &Arc<Signature>, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            sig: sig.clone(),
            words: sig.words_up_to(MAX_WORD_LEN),
            max_terms: 3,
        }
    }

    /// Caps the number of terms per element (at least one, at most three).
    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms.clamp(1, 3);
        self
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A nonzero coefficient in `{-3, .., 3}`.
    pub fn coefficient(&mut self) -> i64 {
        let c = self.rng.gen_range(1..=3);
        if self.rng.gen_bool(0.5) {
            -c
        } else {
            c
        }
    }

    pub fn word(&mut self) -> Word {
        let i = self.rng.gen_range(0..self.words.len());
        self.words[i].clone()
    }

    /// One to three terms with random words; may be inhomogeneous. Never
    /// zero unless the algebra has no basis words at all.
    pub fn element(&mut self) -> Element {
        loop {
            let terms = self.rng.gen_range(1..=self.max_terms);
            let mut e = Element::zero(&self.sig);
            for _ in 0..terms {
                let w = self.word();
                let c = self.coefficient();
                e.add_term(w, int(c));
            }
            if !e.is_zero() || self.words.is_empty() {
                return e;
            }
        }
    }

    /// A nonzero homogeneous element with up to three terms.
    pub fn homogeneous(&mut self) -> Element {
        let first = self.word();
        let d = self.sig.word_degree(&first);
        let same: Vec<Word> = self
            .words
            .iter()
            .filter(|w| self.sig.word_degree(w) == d)
            .cloned()
            .collect();
        let c0 = self.coefficient();
        let mut e = Element::word(&self.sig, first, int(c0));
        let extra = self.rng.gen_range(0..self.max_terms);
        for _ in 0..extra {
            let w = same[self.rng.gen_range(0..same.len())].clone();
            let c = self.coefficient();
            let mut next = e.clone();
            next.add_term(w, int(c));
            if !next.is_zero() {
                e = next;
            }
        }
        e
    }

    /// A nonzero homogeneous element of degree `d`, if words of that degree
    /// exist.
    pub fn of_degree(&mut self, d: i64) -> Option<Element> {
        let same: Vec<Word> = self
            .words
            .iter()
            .filter(|w| self.sig.word_degree(w) == d)
            .cloned()
            .collect();
        if same.is_empty() {
            return None;
        }
        let mut e = Element::zero(&self.sig);
        while e.is_zero() {
            for _ in 0..self.rng.gen_range(1..=self.max_terms) {
                let w = same[self.rng.gen_range(0..same.len())].clone();
                let c = self.coefficient();
                e.add_term(w, int(c));
            }
        }
        Some(e)
    }

    pub fn tuple(&mut self, n: usize) -> Vec<Element> {
        (0..n).map(|_| self.element()).collect()
    }

    pub fn homogeneous_tuple(&mut self, n: usize) -> Vec<Element> {
        (0..n).map(|_| self.homogeneous()).collect()
    }

    /// `count` tuples of arity `n`; mixed-degree unless `homogeneous`.
    pub fn tuples(&mut self, count: usize, n: usize, homogeneous: bool) -> Vec<Vec<Element>> {
        (0..count)
            .map(|_| {
                if homogeneous {
                    self.homogeneous_tuple(n)
                } else {
                    self.tuple(n)
                }
            })
            .collect()
    }

    /// `c t^k` with `k <= max_power`, on the polynomial algebra.
    pub fn monomial(&mut self, max_power: usize) -> Element {
        debug_assert_eq!(self.sig.kind(), AlgebraKind::Polynomial);
        let k = self.rng.gen_range(0..=max_power);
        let c = self.coefficient();
        Element::word(&self.sig, Word::power(k), int(c))
    }
}
