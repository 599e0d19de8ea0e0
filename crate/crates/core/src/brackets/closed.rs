use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{BracketSource, Koszul};
use crate::algebra::{is_odd, permutations, Element, Endomorphism, Signature};
use crate::numbers::{factorial, int, Rational};
use crate::operators::{Arg, MultiOperator};
use crate::{Error, Result};

fn require_unit(sig: &Signature) -> Result<()> {
    if sig.is_unital() {
        Ok(())
    } else {
        Err(Error::NonUnital)
    }
}

fn degree_sum(args: &[Arg], idx: &[usize]) -> i64 {
    idx.iter().map(|&i| args[i].0).sum()
}

fn ordered_product(sig: &Arc<Signature>, args: &[Arg], idx: &[usize]) -> Result<Element> {
    Element::product(sig, idx.iter().map(|&i| &args[i].1))
}

fn signed(sign_negative: bool, c: Rational) -> Rational {
    if sign_negative {
        -c
    } else {
        c
    }
}

/// `[..[[f, L_a1], L_a2], .., L_an](1)` for homogeneous arguments.
pub fn iterated_bracket(f: &Endomorphism, args: &[Element]) -> Result<Element> {
    let sig = f.signature().clone();
    require_unit(&sig)?;
    let mut hom = Vec::with_capacity(args.len());
    for a in args {
        if a.is_zero() {
            return Ok(Element::zero(&sig));
        }
        let d = a.degree().ok_or_else(|| Error::Inhomogeneous(a.to_string()))?;
        hom.push((d, a.clone()));
    }
    iterated_hom(f, &hom, &Element::one(&sig)?)
}

/// `F_k(b) = F_{k-1}(a_k b) - (-1)^{|F_{k-1}||a_k|} a_k F_{k-1}(b)` with
/// `F_0 = f`, where `|F_k| = |f| + |a_1| + .. + |a_k|`.
fn iterated_hom(f: &Endomorphism, args: &[Arg], b: &Element) -> Result<Element> {
    let Some(((d, a), rest)) = args.split_last() else {
        return f.apply(b);
    };
    let inner_degree = f.degree() + rest.iter().map(|x| x.0).sum::<i64>();
    let mut out = iterated_hom(f, rest, &a.try_mul(b)?)?;
    let tail = a.try_mul(&iterated_hom(f, rest, b)?)?;
    if is_odd(inner_degree * d) {
        out += &tail;
    } else {
        out -= &tail;
    }
    Ok(out)
}

fn iterated_commutators(mut acc: Element, args: &[Arg], rest: &[usize]) -> Result<Element> {
    for &i in rest {
        if acc.is_zero() {
            break;
        }
        acc = acc.commutator(&args[i].1)?;
    }
    Ok(acc)
}

impl Koszul {
    /// Bering's closed formula.
    pub fn psi_bering(&self, source: &BracketSource, n: usize) -> Result<MultiOperator> {
        self.check_arity(n)?;
        let sig = source.signature().clone();
        require_unit(&sig)?;
        let table = self.table.clone();
        let level = n as i32 - 1;
        let degree = source.degree();
        match source.clone() {
            BracketSource::Element(x) => {
                let s = sig.clone();
                Ok(MultiOperator::from_fn(&sig, level, degree, "bering", move |args| {
                    let mut out = Element::zero(&s);
                    if x.is_zero() {
                        return Ok(out);
                    }
                    let degrees: Vec<i64> = args.iter().map(|a| a.0).collect();
                    let coeffs: Vec<Rational> = (0..=n)
                        .map(|i| table.two_index(i, n - i) / (factorial(i) * factorial(n - i)))
                        .collect();
                    for p in permutations(&degrees) {
                        for (i, c) in coeffs.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let (head, tail) = p.perm.split_at(i);
                            let neg = p.negative ^ is_odd(degree * degree_sum(args, head));
                            let term = ordered_product(&s, args, head)?
                                .try_mul(&x)?
                                .try_mul(&ordered_product(&s, args, tail)?)?;
                            out.add_scaled(&term, &signed(neg, c.clone()));
                        }
                    }
                    Ok(out)
                }))
            }
            BracketSource::Endo(f) => {
                let s = sig.clone();
                Ok(MultiOperator::from_fn(&sig, level, degree, "bering", move |args| {
                    let mut out = Element::zero(&s);
                    let degrees: Vec<i64> = args.iter().map(|a| a.0).collect();
                    let mut triples = Vec::new();
                    for i in 0..=n {
                        for j in 0..=n - i {
                            let k = n - i - j;
                            let c = table.two_index(i, j)
                                / (factorial(i) * factorial(j) * factorial(k));
                            if !c.is_zero() {
                                triples.push((i, k, c));
                            }
                        }
                    }
                    for p in permutations(&degrees) {
                        for (i, k, c) in &triples {
                            let (head, rest) = p.perm.split_at(*i);
                            let (mid, tail) = rest.split_at(*k);
                            let neg = p.negative ^ is_odd(degree * degree_sum(args, head));
                            let inner = f.apply(&ordered_product(&s, args, mid)?)?;
                            if inner.is_zero() {
                                continue;
                            }
                            let term = ordered_product(&s, args, head)?
                                .try_mul(&inner)?
                                .try_mul(&ordered_product(&s, args, tail)?)?;
                            out.add_scaled(&term, &signed(neg, c.clone()));
                        }
                    }
                    Ok(out)
                }))
            }
        }
    }

    /// Bandiera's closed formula.
    pub fn psi_bandiera(&self, source: &BracketSource, n: usize) -> Result<MultiOperator> {
        self.check_arity(n)?;
        let sig = source.signature().clone();
        require_unit(&sig)?;
        let table = self.table.clone();
        let level = n as i32 - 1;
        let degree = source.degree();
        let coeffs: Vec<Rational> = (0..=n)
            .map(|k| table.bernoulli(n - k) / (factorial(k) * factorial(n - k)))
            .collect();
        let s = sig.clone();
        let source = source.clone();
        Ok(MultiOperator::from_fn(&sig, level, degree, "bandiera", move |args| {
            let mut out = Element::zero(&s);
            let degrees: Vec<i64> = args.iter().map(|a| a.0).collect();
            let mut heads: HashMap<Vec<usize>, Element> = HashMap::new();
            for p in permutations(&degrees) {
                for (k, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (head, tail) = p.perm.split_at(k);
                    let first = match heads.get(head) {
                        Some(v) => v.clone(),
                        None => {
                            let v = match &source {
                                BracketSource::Element(x) => {
                                    x.try_mul(&ordered_product(&s, args, head)?)?
                                }
                                BracketSource::Endo(f) => {
                                    let h: Vec<Arg> =
                                        head.iter().map(|&i| args[i].clone()).collect();
                                    iterated_hom(f, &h, &Element::one(&s)?)?
                                }
                            };
                            heads.insert(head.to_vec(), v.clone());
                            v
                        }
                    };
                    let term = iterated_commutators(first, args, tail)?;
                    let sign_flip = matches!(source, BracketSource::Element(_)) && n % 2 == 1;
                    out.add_scaled(&term, &signed(p.negative ^ sign_flip, c.clone()));
                }
            }
            Ok(out)
        }))
    }

    /// The permutation formula valid on graded commutative algebras.
    pub fn psi_commutative(&self, source: &BracketSource, n: usize) -> Result<MultiOperator> {
        let sig = source.signature().clone();
        if !sig.is_commutative() {
            return Err(Error::Unsupported(
                "the commutative formula needs a graded commutative algebra".into(),
            ));
        }
        require_unit(&sig)?;
        let level = n as i32 - 1;
        let degree = source.degree();
        let s = sig.clone();
        match source.clone() {
            BracketSource::Element(x) => {
                let c = int(if n % 2 == 1 { -1 } else { 1 });
                Ok(MultiOperator::from_fn(&sig, level, degree, "commutative", move |args| {
                    let prod = Element::product(&s, args.iter().map(|a| &a.1))?;
                    Ok(x.try_mul(&prod)?.scaled(&c))
                }))
            }
            BracketSource::Endo(f) => {
                Ok(MultiOperator::from_fn(&sig, level, degree, "commutative", move |args| {
                    let mut out = Element::zero(&s);
                    let degrees: Vec<i64> = args.iter().map(|a| a.0).collect();
                    for p in permutations(&degrees) {
                        for k in 0..=n {
                            let (head, tail) = p.perm.split_at(k);
                            let c = int(if (n - k) % 2 == 1 { -1 } else { 1 })
                                / (factorial(k) * factorial(n - k));
                            let term = f
                                .apply(&ordered_product(&s, args, head)?)?
                                .try_mul(&ordered_product(&s, args, tail)?)?;
                            out.add_scaled(&term, &signed(p.negative, c));
                        }
                    }
                    Ok(out)
                }))
            }
        }
    }
}
