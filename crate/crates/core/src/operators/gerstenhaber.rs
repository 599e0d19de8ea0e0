use std::sync::Arc;

use itertools::Itertools;
use num_traits::One;

use super::{Arg, MultiOperator};
use crate::algebra::{is_odd, permutations, Element, Signature};
use crate::numbers::Rational;
use crate::{Error, Result};

type TensorFn = dyn Fn(&[Arg]) -> Result<Element> + Send + Sync;

/// A multilinear map `A^{⊗k} -> A` with no symmetry assumed.
#[derive(Clone)]
pub struct TensorOperator {
    sig: Arc<Signature>,
    arity: usize,
    degree: i64,
    eval: Arc<TensorFn>,
}

impl TensorOperator {
    pub fn from_fn<F>(sig: &Arc<Signature>, arity: usize, degree: i64, f: F) -> Self
    where
        F: Fn(&[Arg]) -> Result<Element> + Send + Sync + 'static,
    {
        TensorOperator {
            sig: sig.clone(),
            arity,
            degree,
            eval: Arc::new(f),
        }
    }

    /// `a_1 ⊗ ... ⊗ a_k -> a_1 ... a_k`.
    pub fn multiplication(sig: &Arc<Signature>, arity: usize) -> Self {
        let s = sig.clone();
        Self::from_fn(sig, arity, 0, move |args| {
            Element::product(&s, args.iter().map(|a| &a.1))
        })
    }

    pub fn identity(sig: &Arc<Signature>) -> Self {
        Self::from_fn(sig, 1, 0, |args| Ok(args[0].1.clone()))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn eval_hom(&self, args: &[Arg]) -> Result<Element> {
        (self.eval)(args)
    }

    pub fn eval(&self, args: &[Element]) -> Result<Element> {
        if args.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: args.len(),
            });
        }
        let mut out = Element::zero(&self.sig);
        if args.is_empty() {
            return self.eval_hom(&[]);
        }
        for combo in args.iter().map(|a| a.split()).multi_cartesian_product() {
            out += &self.eval_hom(&combo)?;
        }
        Ok(out)
    }

    /// The Gerstenhaber product
    /// `f∘g(v_0..v_p) = sum_i (-1)^{|g|(|v_0|+..+|v_{i-1}|)} f(v_0..v_{i-1}, g(v_i..v_{i+n}), ..)`.
    pub fn gerstenhaber(f: &TensorOperator, g: &TensorOperator) -> Result<TensorOperator> {
        if !Arc::ptr_eq(&f.sig, &g.sig) && *f.sig != *g.sig {
            return Err(Error::SignatureMismatch);
        }
        let arity = (f.arity + g.arity).saturating_sub(1);
        let (f2, g2) = (f.clone(), g.clone());
        let sig = f.sig.clone();
        Ok(Self::from_fn(&f.sig, arity, f.degree + g.degree, move |args| {
            let mut out = Element::zero(&sig);
            if f2.arity == 0 {
                return Ok(out);
            }
            let k = g2.arity;
            for i in 0..f2.arity {
                let passed: i64 = args[..i].iter().map(|a| a.0).sum();
                let inner = g2.eval_hom(&args[i..i + k])?;
                for part in inner.split() {
                    let mut full: Vec<Arg> = args[..i].to_vec();
                    full.push(part);
                    full.extend_from_slice(&args[i + k..]);
                    let term = f2.eval_hom(&full)?;
                    if is_odd(g2.degree * passed) {
                        out -= &term;
                    } else {
                        out += &term;
                    }
                }
            }
            Ok(out)
        }))
    }

    /// `f N`: the graded symmetric operator
    /// `(v_0..v_n) -> sum_sigma eps(sigma) f(v_sigma(0), .., v_sigma(n))`.
    pub fn symmetrized(&self) -> MultiOperator {
        let f = self.clone();
        let sig = self.sig.clone();
        MultiOperator::from_fn(
            &self.sig,
            self.arity as i32 - 1,
            self.degree,
            "fN",
            move |args| {
                let mut out = Element::zero(&sig);
                for (c, tuple) in symmetrize_hom(args) {
                    out.add_scaled(&f.eval_hom(&tuple)?, &c);
                }
                Ok(out)
            },
        )
    }
}

fn symmetrize_hom(args: &[Arg]) -> Vec<(Rational, Vec<Arg>)> {
    let degrees: Vec<i64> = args.iter().map(|a| a.0).collect();
    permutations(&degrees)
        .into_iter()
        .map(|p| {
            let c = if p.negative {
                -Rational::one()
            } else {
                Rational::one()
            };
            (c, p.perm.iter().map(|&i| args[i].clone()).collect())
        })
        .collect()
}

/// `N(v_0 ⊙ .. ⊙ v_n) = sum_sigma eps(sigma) v_sigma(0) ⊗ .. ⊗ v_sigma(n)` on
/// homogeneous elements, as a list of signed ordered tuples.
pub fn symmetrize_map(tuple: &[Element]) -> Result<Vec<(Rational, Vec<Element>)>> {
    let args = tuple
        .iter()
        .map(|e| {
            e.degree()
                .map(|d| (d, e.clone()))
                .ok_or_else(|| Error::Inhomogeneous(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(symmetrize_hom(&args)
        .into_iter()
        .map(|(c, t)| (c, t.into_iter().map(|a| a.1).collect()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::int;
    use crate::operators::{mu, nr_product};

    #[test]
    fn symmetrize_small_cases() {
        let sig = Signature::default_mixed();
        let x = Element::generator(&sig, "x").unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let u = Element::generator(&sig, "u").unwrap();
        let s = symmetrize_map(std::slice::from_ref(&x)).unwrap();
        assert_eq!(s, vec![(int(1), vec![x.clone()])]);
        let s = symmetrize_map(&[x.clone(), &x * &x]).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|(c, _)| *c == int(1)));
        let s = symmetrize_map(&[e.clone(), u.clone()]).unwrap();
        assert_eq!(s[1], (int(-1), vec![u.clone(), e.clone()]));
    }

    #[test]
    fn composition_with_identity_counts_slots() {
        let sig = Signature::default_mixed();
        let m = TensorOperator::multiplication(&sig, 2);
        let comp = TensorOperator::gerstenhaber(&m, &TensorOperator::identity(&sig)).unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let u = Element::generator(&sig, "u").unwrap();
        let args = [e.clone(), u.clone()];
        assert_eq!(comp.eval(&args).unwrap(), m.eval(&args).unwrap().scaled(&int(2)));
    }

    #[test]
    fn multiplication_composed_with_itself() {
        let sig = Signature::default_mixed();
        let m = TensorOperator::multiplication(&sig, 2);
        let comp = TensorOperator::gerstenhaber(&m, &m).unwrap();
        let x = Element::generator(&sig, "x").unwrap();
        let xx = &x * &x;
        let one = Element::one(&sig).unwrap();
        let v = comp.eval(&[x.clone(), xx.clone(), one]).unwrap();
        assert_eq!(v, (&x * &xx).scaled(&int(2)));
    }

    #[test]
    fn constant_outer_gives_empty_sum() {
        let sig = Signature::default_mixed();
        let c = TensorOperator::from_fn(&sig, 0, 0, {
            let s = sig.clone();
            move |_| Element::one(&s)
        });
        let comp = TensorOperator::gerstenhaber(&c, &TensorOperator::identity(&sig)).unwrap();
        assert!(comp.eval(&[]).unwrap().is_zero());
    }

    #[test]
    fn symmetrized_multiplication_is_scaled_mu() {
        let sig = Signature::default_mixed();
        let m2 = TensorOperator::multiplication(&sig, 2).symmetrized();
        let e = Element::generator(&sig, "e").unwrap();
        let u = Element::generator(&sig, "u").unwrap();
        let lhs = m2.eval(&[e.clone(), u.clone()]).unwrap();
        let rhs = mu(1, &sig).unwrap().eval(&[e, u]).unwrap().scaled(&int(2));
        assert_eq!(lhs, rhs);
        let p = nr_product(&m2, &m2).unwrap();
        assert_eq!(p.level(), 2);
    }
}
