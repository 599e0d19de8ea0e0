use std::sync::Arc;

use itertools::Itertools;
use koszul::algebra::{koszul_sign, shuffles, Element, Endomorphism, Generator, Signature, Word};
use koszul::numbers::{bernoulli, binomial, factorial, gauge_k, ratio, stirling2};
use koszul::operators::{mu, mu_reference, nr_bracket, MultiOperator};
use koszul::verify::{fixtures, Sampler};
use koszul::Rational;
use num_bigint::BigUint;

fn restricted_growth(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                let top = s.iter().max().map_or(0, |m| m + 1);
                (0..=top).map(move |b| {
                    let mut t = s.clone();
                    t.push(b);
                    t
                })
            })
            .collect();
    }
    out
}

#[test]
fn stirling_counts_set_partitions() {
    for n in 1..=8 {
        let mut blocks = vec![0u64; n + 1];
        for s in restricted_growth(n) {
            blocks[s.iter().max().unwrap() + 1] += 1;
        }
        for k in 0..=n {
            assert_eq!(stirling2(n, k), BigUint::from(blocks[k]), "S({n},{k})");
        }
    }
}

#[test]
fn bernoulli_matches_akiyama_tanigawa() {
    let mut a: Vec<Rational> = Vec::new();
    for m in 0..=16usize {
        a.push(ratio(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = Rational::from(j as i64) * (&a[j - 1] - &a[j]);
        }
        let b = if m == 1 { -a[0].clone() } else { a[0].clone() };
        assert_eq!(bernoulli(m), b, "B_{m}");
    }
}

#[test]
fn gauge_coefficients_satisfy_their_recursion() {
    for n in 2..=10usize {
        let sum: Rational = (1..n)
            .map(|i| Rational::from_integer(stirling2(n + 1, i).into()) * gauge_k(i))
            .sum();
        let lhs = Rational::from(((n + 2) * (n - 1)) as i64) * gauge_k(n);
        assert_eq!(lhs, Rational::from(-2) * sum, "K_{n}");
    }
    assert_eq!(gauge_k(4), ratio(-2, 3));
}

fn bubble_sign(perm: &[usize], degrees: &[i64]) -> i8 {
    let mut seq = perm.to_vec();
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in 0..seq.len() - 1 - i {
            if seq[j] > seq[j + 1] {
                if degrees[seq[j]] * degrees[seq[j + 1]] % 2 != 0 {
                    sign = -sign;
                }
                seq.swap(j, j + 1);
            }
        }
    }
    sign
}

#[test]
fn koszul_sign_matches_adjacent_transpositions() {
    let degree_sets: [&[i64]; 4] = [&[1, 1, 1], &[0, 1, -1, 1], &[1, 2, 3, 1, 0], &[-1, -1, 1, 1]];
    for degrees in degree_sets {
        for perm in (0..degrees.len()).permutations(degrees.len()) {
            assert_eq!(koszul_sign(&perm, degrees).unwrap(), bubble_sign(&perm, degrees), "{perm:?}");
        }
    }
}

#[test]
fn shuffle_counts_are_binomial() {
    let degrees = [1, 0, 1, 1, 0, 1];
    for p in 0..=degrees.len() {
        let s = shuffles(&degrees, p);
        assert_eq!(BigUint::from(s.len()), binomial(6, p).to_biguint().unwrap());
        for sp in &s {
            assert!(sp.perm[..p].windows(2).all(|w| w[0] < w[1]));
            assert!(sp.perm[p..].windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn mu_agrees_with_reference_sum() {
    let sig = Signature::default_mixed();
    let mut s = Sampler::new(&sig, 7);
    for n in 0..=3 {
        let op = mu(n as i32, &sig).unwrap();
        for _ in 0..10 {
            let args = s.tuple(n + 1);
            assert_eq!(op.eval(&args).unwrap(), mu_reference(n, &args).unwrap());
        }
    }
}

#[test]
fn first_mu_by_hand() {
    let sig = Signature::default_mixed();
    let g = |id| Element::generator(&sig, id).unwrap();
    let mu1 = mu(1, &sig).unwrap();
    let w = |w: &str, c: i64, d: i64| Element::word(&sig, fixtures::word(&sig, w).unwrap(), ratio(c, d));
    let xe = mu1.eval(&[g("x"), g("e")]).unwrap();
    assert_eq!(xe, &w("x e", 1, 2) + &w("e x", 1, 2));
    assert!(mu1.eval(&[g("e"), g("e")]).unwrap().is_zero());
    let uu = mu1.eval(&[g("u"), g("u")]).unwrap();
    assert!(uu.is_zero());
    let eu = mu1.eval(&[g("e"), g("u")]).unwrap();
    assert_eq!(eu, &w("e u", 1, 2) - &w("u e", 1, 2));
}

#[test]
fn factorial_and_binomial() {
    assert_eq!(factorial(6), Rational::from(720));
    assert_eq!(binomial(10, 3), 120.into());
    assert_eq!(binomial(3, 5), 0.into());
}

fn truncated() -> Arc<Signature> {
    Signature::free_truncated(3, vec![Generator::new("v1", 0), Generator::new("v2", 0)]).unwrap()
}

fn vanishing_map(sig: &Arc<Signature>, image: &[(i64, &str)]) -> Endomorphism {
    let neg: Vec<_> = image.iter().map(|(c, w)| (-c, *w)).collect();
    fixtures::table(sig, 0, &[("v1 v2", image), ("v2 v1", &neg)]).unwrap()
}

fn mu1_commutator(f: &Endomorphism) -> MultiOperator {
    let sig = f.signature();
    nr_bracket(&MultiOperator::endomorphism(f), &mu(1, sig).unwrap()).unwrap()
}

#[test]
fn vanishing_on_symmetric_tensors_needs_quadratic_image() {
    let sig = truncated();
    let el = |t: &[(i64, &str)]| fixtures::element(&sig, t).unwrap();
    let a = el(&[(2, ""), (-3, "v2"), (-1, "v2 v1")]);
    let b = el(&[(-2, "v1 v2"), (-1, "v2 v1")]);

    let linear = vanishing_map(&sig, &[(1, "v1")]);
    let value = mu1_commutator(&linear).eval(&[a.clone(), b.clone()]).unwrap();
    let expected = el(&[(1, "v1 v2"), (1, "v2 v1")]).scaled(&ratio(-3, 2));
    assert_eq!(value, expected);

    let quadratic = vanishing_map(&sig, &[(1, "v1 v1"), (-2, "v2 v2")]);
    assert!(mu1_commutator(&quadratic).eval(&[a, b]).unwrap().is_zero());
}

#[test]
fn truncation_kills_long_words() {
    let sig = truncated();
    let v = |id| Element::generator(&sig, id).unwrap();
    let cube = Element::product(&sig, [&v("v1"), &v("v2"), &v("v1")]).unwrap();
    assert!(cube.is_zero());
    let square = v("v1").try_mul(&v("v2")).unwrap();
    assert_eq!(square.coefficient(&Word::from_letters([0, 1])), Rational::from(1));
}
