use std::collections::BTreeMap;
use std::sync::Arc;


use super::{is_odd, AlgebraKind, Element, Signature, Word};
use crate::numbers::Rational;
use crate::{Error, Result};

/// A homogeneous linear map `A -> A` described by a finite rule.
#[derive(Clone, Debug, PartialEq)]
pub struct Endomorphism {
    sig: Arc<Signature>,
    degree: i64,
    rule: Arc<EndoRule>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum EndoRule {
    /// Explicit images of basis words. Words without an entry map to zero;
    /// with `strict` set, words longer than `bound` are rejected instead.
    Table {
        entries: BTreeMap<Word, Element>,
        bound: Option<usize>,
        strict: bool,
    },
    /// The derivation extending the given generator images by the graded
    /// Leibniz rule. Generators without an image map to zero.
    Derivation(BTreeMap<u8, Element>),
    LeftMult(Element),
    /// `a -> (-1)^{|a||x|} a x`.
    RightMult(Element),
    Identity,
    /// `c` times the identity.
    Scale(Rational),
    Sum(Vec<Endomorphism>),
    /// `Compose(f, g)` is `f` after `g`.
    Compose(Endomorphism, Endomorphism),
    /// Graded commutator `f g - (-1)^{|f||g|} g f`.
    Commutator(Endomorphism, Endomorphism),
    /// `t^n -> n (n-1) ... (n-k+1) t^{n-k}` on the polynomial algebra.
    PolynomialDerivative(u32),
}

fn homogeneous_degree(x: &Element) -> Result<i64> {
    if x.is_zero() {
        return Ok(0);
    }
    x.degree()
        .ok_or_else(|| Error::Inhomogeneous(x.to_string()))
}

impl Endomorphism {
    fn build(sig: &Arc<Signature>, degree: i64, rule: EndoRule) -> Self {
        Endomorphism {
            sig: sig.clone(),
            degree,
            rule: Arc::new(rule),
        }
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn rule(&self) -> &EndoRule {
        &self.rule
    }

    pub fn identity(sig: &Arc<Signature>) -> Self {
        Self::build(sig, 0, EndoRule::Identity)
    }

    pub fn zero(sig: &Arc<Signature>, degree: i64) -> Self {
        Self::build(
            sig,
            degree,
            EndoRule::Table {
                entries: BTreeMap::new(),
                bound: None,
                strict: false,
            },
        )
    }

    pub fn scale(sig: &Arc<Signature>, c: Rational) -> Self {
        Self::build(sig, 0, EndoRule::Scale(c))
    }

    /// Table map of the given degree. Every image must be homogeneous of
    /// degree `|word| + degree`.
    pub fn table(
        sig: &Arc<Signature>,
        degree: i64,
        entries: BTreeMap<Word, Element>,
        bound: Option<usize>,
        strict: bool,
    ) -> Result<Self> {
        for (w, img) in &entries {
            if !sig.admits(w) {
                return Err(Error::InvalidWord(format!("{w:?}")));
            }
            check_image(sig, img, sig.word_degree(w) + degree)?;
            if let Some(b) = bound {
                if w.len() > b {
                    return Err(Error::InvalidEndomorphism(format!(
                        "table entry of length {} exceeds bound {b}",
                        w.len()
                    )));
                }
            }
        }
        Ok(Self::build(
            sig,
            degree,
            EndoRule::Table {
                entries,
                bound,
                strict,
            },
        ))
    }

    /// The derivation of the given degree with prescribed generator images.
    pub fn derivation(
        sig: &Arc<Signature>,
        degree: i64,
        images: BTreeMap<u8, Element>,
    ) -> Result<Self> {
        for (&g, img) in &images {
            let gen = sig
                .generators()
                .get(g as usize)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?;
            check_image(sig, img, gen.degree + degree)?;
        }
        Ok(Self::build(sig, degree, EndoRule::Derivation(images)))
    }

    pub fn left_mult(x: &Element) -> Result<Self> {
        let d = homogeneous_degree(x)?;
        Ok(Self::build(x.signature(), d, EndoRule::LeftMult(x.clone())))
    }

    pub fn right_mult(x: &Element) -> Result<Self> {
        let d = homogeneous_degree(x)?;
        Ok(Self::build(x.signature(), d, EndoRule::RightMult(x.clone())))
    }

    /// Sum of endomorphisms of a common degree.
    pub fn sum(sig: &Arc<Signature>, terms: Vec<Endomorphism>) -> Result<Self> {
        let degree = terms.first().map(|t| t.degree).unwrap_or(0);
        for t in &terms {
            if !same_sig(&t.sig, sig) {
                return Err(Error::SignatureMismatch);
            }
            if t.degree != degree {
                return Err(Error::InvalidEndomorphism(
                    "sum of endomorphisms of different degrees".into(),
                ));
            }
        }
        Ok(Self::build(sig, degree, EndoRule::Sum(terms)))
    }

    /// `f` after `g`.
    pub fn compose(f: &Endomorphism, g: &Endomorphism) -> Result<Self> {
        if !same_sig(&f.sig, &g.sig) {
            return Err(Error::SignatureMismatch);
        }
        Ok(Self::build(
            &f.sig,
            f.degree + g.degree,
            EndoRule::Compose(f.clone(), g.clone()),
        ))
    }

    pub fn commutator(f: &Endomorphism, g: &Endomorphism) -> Result<Self> {
        if !same_sig(&f.sig, &g.sig) {
            return Err(Error::SignatureMismatch);
        }
        Ok(Self::build(
            &f.sig,
            f.degree + g.degree,
            EndoRule::Commutator(f.clone(), g.clone()),
        ))
    }

    /// `k`-th derivative on the polynomial algebra.
    pub fn polynomial_derivative(sig: &Arc<Signature>, order: u32) -> Result<Self> {
        if sig.kind() != AlgebraKind::Polynomial {
            return Err(Error::InvalidEndomorphism(
                "derivatives are defined on the polynomial algebra only".into(),
            ));
        }
        let d = -(order as i64) * sig.generators()[0].degree;
        Ok(Self::build(sig, d, EndoRule::PolynomialDerivative(order)))
    }

    /// `f(1)`.
    pub fn at_unit(&self) -> Result<Element> {
        self.apply(&Element::one(&self.sig)?)
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        if !same_sig(&self.sig, a.signature()) {
            return Err(Error::SignatureMismatch);
        }
        self.apply_unchecked(a)
    }

    fn apply_unchecked(&self, a: &Element) -> Result<Element> {
        let sig = &self.sig;
        match &*self.rule {
            EndoRule::Identity => Ok(a.clone()),
            EndoRule::Scale(c) => Ok(a.scaled(c)),
            EndoRule::LeftMult(x) => x.try_mul(a),
            EndoRule::RightMult(x) => {
                let mut out = Element::zero(sig);
                for (d, part) in a.split() {
                    let p = part.try_mul(x)?;
                    if is_odd(d * self.degree) {
                        out -= &p;
                    } else {
                        out += &p;
                    }
                }
                Ok(out)
            }
            EndoRule::Table {
                entries,
                bound,
                strict,
            } => {
                let mut buf = Vec::new();
                for (w, c) in a.terms() {
                    match entries.get(w) {
                        Some(img) => img.push_scaled(&mut buf, c),
                        None => {
                            if let (true, Some(b)) = (*strict, bound) {
                                if w.len() > *b {
                                    return Err(Error::OutsideTable {
                                        length: w.len(),
                                        bound: *b,
                                    });
                                }
                            }
                        }
                    }
                }
                Ok(Element::from_raw(sig, buf))
            }
            EndoRule::Derivation(images) => {
                let mut buf = Vec::new();
                for (w, c) in a.terms() {
                    let letters = w.letters();
                    let mut prefix_degree = 0;
                    for (i, &l) in letters.iter().enumerate() {
                        if let Some(img) = images.get(&l) {
                            let sign = if is_odd(prefix_degree * self.degree) {
                                -c.clone()
                            } else {
                                c.clone()
                            };
                            for (v, d) in img.terms() {
                                let word = Word::from_letters(
                                    letters[..i]
                                        .iter()
                                        .chain(v.letters())
                                        .chain(&letters[i + 1..])
                                        .copied(),
                                );
                                buf.push((word, d * &sign));
                            }
                        }
                        prefix_degree += sig.generators()[l as usize].degree;
                    }
                }
                Ok(Element::from_raw(sig, buf))
            }
            EndoRule::Sum(terms) => {
                let mut out = Element::zero(sig);
                for t in terms {
                    out += &t.apply_unchecked(a)?;
                }
                Ok(out)
            }
            EndoRule::Compose(f, g) => f.apply_unchecked(&g.apply_unchecked(a)?),
            EndoRule::Commutator(f, g) => {
                let fg = f.apply_unchecked(&g.apply_unchecked(a)?)?;
                let gf = g.apply_unchecked(&f.apply_unchecked(a)?)?;
                if is_odd(f.degree * g.degree) {
                    Ok(&fg + &gf)
                } else {
                    Ok(&fg - &gf)
                }
            }
            EndoRule::PolynomialDerivative(k) => {
                let k = *k as usize;
                let mut out = Element::zero(sig);
                for (w, c) in a.terms() {
                    let n = w.len();
                    if n < k {
                        continue;
                    }
                    let falling: i64 = (n - k + 1..=n).map(|m| m as i64).product();
                    out.add_term(Word::power(n - k), c * Rational::from_integer(falling.into()));
                }
                Ok(out)
            }
        }
    }
}

fn same_sig(a: &Arc<Signature>, b: &Arc<Signature>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_image(sig: &Arc<Signature>, img: &Element, expected: i64) -> Result<()> {
    if !same_sig(sig, img.signature()) {
        return Err(Error::SignatureMismatch);
    }
    if img.is_zero() {
        return Ok(());
    }
    match img.degree() {
        Some(d) if d == expected => Ok(()),
        Some(d) => Err(Error::InvalidEndomorphism(format!(
            "image {img} has degree {d}, expected {expected}"
        ))),
        None => Err(Error::Inhomogeneous(img.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::int;

    fn mixed() -> (Arc<Signature>, Element, Element, Element) {
        let sig = Signature::default_mixed();
        let x = Element::generator(&sig, "x").unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let u = Element::generator(&sig, "u").unwrap();
        (sig, x, e, u)
    }

    #[test]
    fn identity_and_scale() {
        let (sig, x, e, _) = mixed();
        let a = &(&x * &e) + &e;
        assert_eq!(Endomorphism::identity(&sig).apply(&a).unwrap(), a);
        assert_eq!(Endomorphism::scale(&sig, int(3)).apply(&a).unwrap(), a.scaled(&int(3)));
    }

    #[test]
    fn right_mult_sign() {
        let (_, _, e, u) = mixed();
        let r = Endomorphism::right_mult(&e).unwrap();
        // |e| = |u| = odd
        assert_eq!(r.apply(&u).unwrap(), -&(&u * &e));
    }

    #[test]
    fn second_derivative() {
        let sig = Signature::polynomial(0).unwrap();
        let d2 = Endomorphism::polynomial_derivative(&sig, 2).unwrap();
        let t3 = Element::word(&sig, Word::power(3), int(1));
        assert_eq!(d2.apply(&t3).unwrap(), Element::word(&sig, Word::power(1), int(6)));
        let t1 = Element::word(&sig, Word::power(1), int(1));
        assert!(d2.apply(&t1).unwrap().is_zero());
    }

    #[test]
    fn leibniz_on_words() {
        let (sig, x, e, u) = mixed();
        // odd derivation: x -> e, e -> x e x? (degree 1 requires |img| = |g|+1)
        let mut images = BTreeMap::new();
        images.insert(0u8, e.clone());
        images.insert(2u8, &x * &x);
        let d = Endomorphism::derivation(&sig, 1, images).unwrap();
        let a = &e * &u;
        let b = &x * &u;
        let lhs = d.apply(&(&a * &b)).unwrap();
        let sign = if is_odd(a.degree().unwrap() * d.degree()) { -1 } else { 1 };
        let rhs = &(&d.apply(&a).unwrap() * &b) + &(&a * &d.apply(&b).unwrap()).scaled(&int(sign));
        assert_eq!(lhs, rhs);
        assert!(d.at_unit().unwrap().is_zero());
    }

    #[test]
    fn table_modes() {
        let (sig, x, _, _) = mixed();
        let mut entries = BTreeMap::new();
        entries.insert(Word::unit(), x.clone());
        let strict = Endomorphism::table(&sig, 0, entries.clone(), Some(1), true).unwrap();
        let lax = Endomorphism::table(&sig, 0, entries, Some(1), false).unwrap();
        let xx = &x * &x;
        assert!(matches!(strict.apply(&xx), Err(Error::OutsideTable { .. })));
        assert!(lax.apply(&xx).unwrap().is_zero());
        assert_eq!(strict.at_unit().unwrap(), x);
        assert!(strict.apply(&x).unwrap().is_zero());
    }

    #[test]
    fn table_rejects_wrong_degree() {
        let (sig, _, e, _) = mixed();
        let mut entries = BTreeMap::new();
        entries.insert(Word::unit(), e);
        assert!(Endomorphism::table(&sig, 0, entries, None, false).is_err());
    }

    #[test]
    fn commutator_of_left_and_right_is_inner_derivation() {
        let (sig, x, e, u) = mixed();
        let l = Endomorphism::left_mult(&e).unwrap();
        let r = Endomorphism::right_mult(&e).unwrap();
        let diff = Endomorphism::sum(
            &sig,
            vec![l, Endomorphism::compose(&Endomorphism::scale(&sig, int(-1)), &r).unwrap()],
        )
        .unwrap();
        for a in [&x, &e, &u, &(&x * &u)] {
            assert_eq!(diff.apply(a).unwrap(), e.commutator(a).unwrap());
        }
    }
}
