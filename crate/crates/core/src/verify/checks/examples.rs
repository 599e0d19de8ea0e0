use std::sync::Arc;

use num_traits::One;

use crate::algebra::{is_odd, Element, Endomorphism, Generator, Signature};
use crate::brackets::{iterated_bracket, quantum_antibracket, BracketSource, Formula};
use crate::numbers::{int, ratio, Rational};
use crate::operators::{mu, nr_bracket_with, MultiOperator};
use crate::verify::context::Ctx;
use crate::verify::fixtures::{self, element, MixedFixtures};
use crate::verify::report::Outcome;
use crate::Result;

const CLOSED_FORMULAS: [Formula; 3] = [Formula::Recursive, Formula::Bering, Formula::Bandiera];

fn pm(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

fn deg(a: &Element) -> i64 {
    a.degree().unwrap_or(0)
}

fn mul(factors: &[&Element]) -> Result<Element> {
    let sig = factors[0].signature();
    Element::product(sig, factors.iter().copied())
}

fn endo_sources(ctx: &Ctx) -> Result<Vec<(&'static str, Endomorphism)>> {
    Ok(MixedFixtures::new(&ctx.sig)?.endo_sources())
}

/// The explicit low arity formulas for `Phi_x`, `Phi_f` and `Psi_f`.
pub(crate) fn closed_forms(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let k = &ctx.koszul;
    let tuples = ctx.tuples(1, 3);
    ctx.compare(out, "Phi^1_x", &tuples, |t| {
        let (x, a) = (&t[0], &t[1]);
        let phi = k.phi_recursive(&BracketSource::element(x.clone())?, 1)?;
        let mut rhs = mul(&[x, a])?;
        rhs.add_scaled(&mul(&[a, x])?, &pm(is_odd(deg(x) * deg(a))));
        Ok((phi.eval(std::slice::from_ref(a))?, rhs.scaled(&ratio(-1, 2))))
    })?;
    ctx.compare(out, "Phi^2_x", &tuples, |t| {
        let (x, a, b) = (&t[0], &t[1], &t[2]);
        let phi = k.phi_recursive(&BracketSource::element(x.clone())?, 2)?;
        let h = |a: &Element, b: &Element| -> Result<Element> {
            let mut h = mul(&[x, a, b])?;
            h.add_scaled(&mul(&[a, x, b])?, &(pm(is_odd(deg(a) * deg(x))) * int(4)));
            h.add_scaled(&mul(&[a, b, x])?, &pm(is_odd(deg(x) * (deg(a) + deg(b)))));
            Ok(h)
        };
        let mut rhs = h(a, b)?;
        rhs.add_scaled(&h(b, a)?, &pm(is_odd(deg(a) * deg(b))));
        Ok((phi.eval(&[a.clone(), b.clone()])?, rhs.scaled(&ratio(1, 12))))
    })?;
    for (si, (name, f)) in endo_sources(ctx)?.into_iter().enumerate() {
        let src = BracketSource::Endo(f.clone());
        let df = f.degree();
        let f1 = f.at_unit()?;
        let phi1 = k.phi_recursive(&src, 1)?;
        let phi2 = k.phi_recursive(&src, 2)?;
        let psi1 = k.psi(&src, 1, Formula::Recursive)?;
        let psi2 = k.psi(&src, 2, Formula::Recursive)?;
        let tuples = ctx.tuples(10 + si as u64, 2);
        ctx.compare(out, &format!("Phi^1 of {name}"), &tuples, |t| {
            Ok((phi1.eval(&t[..1])?, f.apply(&t[0])?))
        })?;
        ctx.compare(out, &format!("Psi^1 of {name}"), &tuples, |t| {
            let a = &t[0];
            let mut corr = mul(&[&f1, a])?;
            corr.add_scaled(&mul(&[a, &f1])?, &pm(is_odd(df * deg(a))));
            let mut rhs = f.apply(a)?;
            rhs.add_scaled(&corr, &ratio(-1, 2));
            Ok((psi1.eval(&t[..1])?, rhs))
        })?;
        let g = |a: &Element, b: &Element| -> Result<Element> {
            let mut g = f.apply(&mul(&[a, b])?)?;
            g -= &mul(&[&f.apply(a)?, b])?;
            g.add_scaled(&mul(&[a, &f.apply(b)?])?, &-pm(is_odd(df * deg(a))));
            Ok(g.scaled(&ratio(1, 2)))
        };
        let unit_part = |a: &Element, b: &Element| -> Result<Element> {
            let mut u = mul(&[&f1, a, b])?;
            u.add_scaled(&mul(&[a, &f1, b])?, &(pm(is_odd(df * deg(a))) * int(4)));
            u.add_scaled(&mul(&[a, b, &f1])?, &pm(is_odd(df * (deg(a) + deg(b)))));
            Ok(u.scaled(&ratio(1, 12)))
        };
        let swap = |t: &[Element], h: &dyn Fn(&Element, &Element) -> Result<Element>| {
            let mut v = h(&t[0], &t[1])?;
            v.add_scaled(&h(&t[1], &t[0])?, &pm(is_odd(deg(&t[0]) * deg(&t[1]))));
            Ok::<_, crate::Error>(v)
        };
        ctx.compare(out, &format!("Phi^2 of {name}"), &tuples, |t| {
            Ok((phi2.eval(t)?, swap(t, &g)?))
        })?;
        ctx.compare(out, &format!("Psi^2 of {name}"), &tuples, |t| {
            let mut rhs = swap(t, &g)?;
            rhs += &swap(t, &unit_part)?;
            Ok((psi2.eval(t)?, rhs))
        })?;
    }
    Ok(())
}

/// Inserting the unit: `Phi^n_x(1,..) = -Phi^{n-1}_x(..)`,
/// `Phi^n_f(1,..) = Phi^{n-1}_{f(1)}(..)`, `Psi^n_f(1,..) = 0` and
/// `Phi^n_f(1,..,1) = (-1)^{n-1} f(1)`.
pub(crate) fn unit_reduction(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let k = &ctx.koszul;
    let one = Element::one(&ctx.sig)?;
    let with_unit = |t: &[Element]| {
        let mut v = vec![one.clone()];
        v.extend_from_slice(t);
        v
    };
    let top = ctx.max_arity;
    for (si, (name, x)) in MixedFixtures::element_sources(&ctx.sig)?.into_iter().enumerate() {
        let phi = k.phi_family(&x, top)?;
        for n in 1..=top {
            let tuples = ctx.tuples((si * 16 + n) as u64, n - 1);
            ctx.compare(out, &format!("Phi^{n}_{name}(1, ..)"), &tuples, |t| {
                Ok((phi.members[n].eval(&with_unit(t))?, -&phi.members[n - 1].eval(t)?))
            })?;
        }
    }
    for (si, (name, f)) in endo_sources(ctx)?.into_iter().enumerate() {
        let src = BracketSource::Endo(f.clone());
        let f1 = f.at_unit()?;
        let phi = k.phi_family(&src, top)?;
        let phi_f1 = k.phi_family(&BracketSource::element(f1.clone())?, top)?;
        for n in 1..=top {
            let tuples = ctx.tuples((100 + si * 16 + n) as u64, n - 1);
            ctx.compare(out, &format!("Phi^{n} of {name} at (1, ..)"), &tuples, |t| {
                Ok((phi.members[n].eval(&with_unit(t))?, phi_f1.members[n - 1].eval(t)?))
            })?;
            for formula in CLOSED_FORMULAS {
                let psi = k.psi(&src, n, formula)?;
                let zero = Element::zero(&ctx.sig);
                ctx.compare(out, &format!("{formula} Psi^{n} of {name} at (1, ..)"), &tuples, |t| {
                    Ok((psi.eval(&with_unit(t))?, zero.clone()))
                })?;
            }
            let ones = vec![vec![one.clone(); n]];
            let expected = f1.scaled(&pm(n % 2 == 0));
            ctx.compare(out, &format!("Phi^{n} of {name} at (1, .., 1)"), &ones, |t| {
                Ok((phi.members[n].eval(t)?, expected.clone()))
            })?;
        }
    }
    Ok(())
}

/// `Psi^n_1 = (-1)^n mu_{n-1}`, `Psi_Id = mu_-1` and
/// `Phi^{n+1}_Id = (-1)^n mu_n`.
pub(crate) fn unit_formulas(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let k = &ctx.koszul;
    let sig = &ctx.sig;
    let one = BracketSource::element(Element::one(sig)?)?;
    let id = BracketSource::Endo(Endomorphism::identity(sig));
    let phi_id = k.phi_family(&id, ctx.max_arity)?;
    for n in 0..=ctx.max_arity {
        let tuples = ctx.tuples(n as u64, n);
        let level = n as i32 - 1;
        let mu_prev = mu(level, sig)?;
        for formula in CLOSED_FORMULAS {
            let psi1 = k.psi(&one, n, formula)?;
            let expected = mu_prev.scaled(&pm(n % 2 == 1));
            ctx.compare_ops(out, &format!("{formula} Psi^{n}_1"), &psi1, &expected, &tuples)?;
            let psi_id = k.psi(&id, n, formula)?;
            let expected = if n == 0 {
                mu_prev.clone()
            } else {
                MultiOperator::zero(sig, level, 0)
            };
            ctx.compare_ops(out, &format!("{formula} Psi^{n}_Id"), &psi_id, &expected, &tuples)?;
        }
        let expected = if n == 0 {
            MultiOperator::zero(sig, -1, 0)
        } else {
            mu_prev.scaled(&pm(n % 2 == 0))
        };
        ctx.compare_ops(out, &format!("Phi^{n}_Id"), &phi_id.members[n], &expected, &tuples)?;
    }
    Ok(())
}

/// Derivations commute with every `mu_n`, so their brackets of arity two
/// and more vanish; likewise for a map on `T(V)/V^3` that kills `1`, `V` and
/// symmetric tensors and takes values in `V^2`.
pub(crate) fn derivation_vanishing(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let fx = MixedFixtures::new(&ctx.sig)?;
    let trunc = Signature::free_truncated(3, vec![Generator::new("v1", 0), Generator::new("v2", 0)])?;
    let w: &[(i64, &str)] = &[(1, "v1 v1"), (-2, "v2 v2")];
    let neg_w: &[(i64, &str)] = &[(-1, "v1 v1"), (2, "v2 v2")];
    let truncated = fixtures::table(&trunc, 0, &[("v1 v2", w), ("v2 v1", neg_w)])?;
    let cases = [
        ("derivation", fx.derivation_even.clone(), ctx.sig.clone()),
        ("odd derivation", fx.derivation_odd.clone(), ctx.sig.clone()),
        ("truncated map", truncated, trunc.clone()),
    ];
    for (ci, (name, f, sig)) in cases.iter().enumerate() {
        let src = BracketSource::Endo(f.clone());
        let fop = MultiOperator::endomorphism(f);
        let phi = ctx.koszul.phi_family(&src, ctx.max_arity)?;
        for n in 1..ctx.max_arity {
            let tuples = ctx.tuples_on(sig, (ci * 16 + n) as u64, n + 1, ctx.samples);
            let b = nr_bracket_with(ctx.koszul.nr(), &fop, &mu(n as i32, sig)?)?;
            ctx.expect_zero(out, &format!("[{name}, mu{n}]"), &b, &tuples)?;
            ctx.expect_zero(out, &format!("Phi^{} of {name}", n + 1), &phi.members[n + 1], &tuples)?;
            for formula in CLOSED_FORMULAS {
                let psi = ctx.koszul.psi(&src, n + 1, formula)?;
                ctx.expect_zero(out, &format!("{formula} Psi^{} of {name}", n + 1), &psi, &tuples)?;
            }
        }
    }
    Ok(())
}

fn left_right_sources(sig: &Arc<Signature>) -> Result<Vec<Element>> {
    Ok(vec![
        element(sig, &[(1, "x"), (2, "e u")])?,
        element(sig, &[(1, "e"), (-1, "x e")])?,
        element(sig, &[(1, "u"), (-1, "x u")])?,
    ])
}

/// Left and right multiplication maps.
pub(crate) fn left_right(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let k = &ctx.koszul;
    for (xi, x) in left_right_sources(&ctx.sig)?.into_iter().enumerate() {
        let l = Endomorphism::left_mult(&x)?;
        let r = Endomorphism::right_mult(&x)?;
        let lr = Endomorphism::sum(&ctx.sig, vec![l.clone(), r.clone()])?;
        let (ls, rs, lrs) = (
            BracketSource::Endo(l),
            BracketSource::Endo(r),
            BracketSource::Endo(lr),
        );
        let tuples = ctx.tuples((xi * 16) as u64, 2);
        let half_bracket = |a: &Element, s: i64| Ok::<_, crate::Error>(x.commutator(a)?.scaled(&ratio(s, 2)));
        let psi_l1 = k.psi(&ls, 1, Formula::Recursive)?;
        let psi_r1 = k.psi(&rs, 1, Formula::Recursive)?;
        ctx.compare(out, &format!("Psi^1 of L_({x})"), &tuples, |t| {
            Ok((psi_l1.eval(&t[..1])?, half_bracket(&t[0], 1)?))
        })?;
        ctx.compare(out, &format!("Psi^1 of R_({x})"), &tuples, |t| {
            Ok((psi_r1.eval(&t[..1])?, half_bracket(&t[0], -1)?))
        })?;
        ctx.expect_zero(out, "Psi^1 of L + R", &k.psi(&lrs, 1, Formula::Recursive)?, &ctx.tuples(1, 1))?;
        let dx = deg(&x);
        let phi2 = |a: &Element, b: &Element| -> Result<Element> {
            let mut v = mul(&[a, &x, b])?.scaled(&pm(is_odd(deg(a) * dx)));
            v.add_scaled(&mul(&[b, &x, a])?, &pm(is_odd((deg(a) + dx) * deg(b))));
            Ok(v.scaled(&ratio(-1, 2)))
        };
        let nested = |a: &Element, b: &Element| -> Result<Element> {
            let mut v = x.commutator(a)?.commutator(b)?;
            v.add_scaled(&x.commutator(b)?.commutator(a)?, &pm(is_odd(deg(a) * deg(b))));
            Ok(v)
        };
        for (label, src) in [("L", &ls), ("R", &rs)] {
            let phi = k.phi_recursive(src, 2)?;
            let psi = k.psi(src, 2, Formula::Recursive)?;
            ctx.compare(out, &format!("Phi^2 of {label}_({x})"), &tuples, |t| {
                Ok((phi.eval(t)?, phi2(&t[0], &t[1])?))
            })?;
            ctx.compare(out, &format!("Psi^2 of {label}_({x})"), &tuples, |t| {
                Ok((psi.eval(t)?, nested(&t[0], &t[1])?.scaled(&ratio(1, 12))))
            })?;
        }
        let psi = k.psi(&lrs, 2, Formula::Recursive)?;
        ctx.compare(out, &format!("Psi^2 of L + R for {x}"), &tuples, |t| {
            Ok((psi.eval(t)?, nested(&t[0], &t[1])?.scaled(&ratio(1, 6))))
        })?;
        for n in 2..=ctx.max_arity {
            let tuples = ctx.tuples((xi * 16 + n) as u64, n);
            let (pl, pr) = (k.phi_recursive(&ls, n)?, k.phi_recursive(&rs, n)?);
            ctx.compare_ops(out, &format!("Phi^{n} of L and R for {x}"), &pl, &pr, &tuples)?;
            let (pl, pr) = (k.psi(&ls, n, Formula::Bering)?, k.psi(&rs, n, Formula::Bering)?);
            ctx.compare_ops(out, &format!("Psi^{n} of L and R for {x}"), &pl, &pr, &tuples)?;
        }
    }
    Ok(())
}

/// All tuples drawn from `items`, of length `n`.
fn grid(items: &[Element], n: usize) -> Vec<Vec<Element>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                items.iter().map(move |a| {
                    let mut t = t.clone();
                    t.push(a.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// `f = L_x + R_x` with `|x| = 0` has `Psi^1_f = 0` but `Psi^2_f != 0`.
pub(crate) fn nonhereditary(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let sig = &ctx.sig;
    let x = element(sig, &[(1, "x"), (2, "e u")])?;
    let f = Endomorphism::sum(sig, vec![Endomorphism::left_mult(&x)?, Endomorphism::right_mult(&x)?])?;
    let src = BracketSource::Endo(f);
    for formula in CLOSED_FORMULAS {
        let psi1 = ctx.koszul.psi(&src, 1, formula)?;
        ctx.expect_zero(out, &format!("{formula} Psi^1"), &psi1, &ctx.tuples(1, 1))?;
    }
    let gens: Vec<Element> = sig
        .generators()
        .iter()
        .map(|g| Element::generator(sig, &g.id))
        .collect::<Result<_>>()?;
    let psi2 = ctx.koszul.psi(&src, 2, Formula::Recursive)?;
    ctx.expect_nonzero(out, "Psi^2 of L_x + R_x", &psi2, &grid(&gens, 2))
}

/// For the derivation `d(p) = q`, `d(q) = p`, `Phi^3_{d^2}` is nonzero.
pub(crate) fn phi3_d2(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let sig = &ctx.sig;
    let ids: Vec<String> = sig.generators().iter().map(|g| g.id.clone()).collect();
    if ids.len() < 2 {
        return Err(crate::Error::Unsupported("phi3-d2 needs two generators".into()));
    }
    let (p, q) = (ids[0].as_str(), ids[1].as_str());
    let d = fixtures::derivation(sig, 0, &[(p, &[(1, q)]), (q, &[(1, p)])])?;
    let d2 = BracketSource::Endo(Endomorphism::compose(&d, &d)?);
    let phi3 = ctx.koszul.phi_recursive(&d2, 3)?;
    let bering = ctx.koszul.psi(&d2, 3, Formula::Bering)?;
    ctx.compare_ops(out, "Phi^3 of d^2 against Bering", &phi3, &bering, &ctx.tuples(1, 3))?;
    let words: Vec<Element> = sig
        .words_up_to(2)
        .into_iter()
        .filter(|w| !w.is_empty())
        .map(|w| Element::word(sig, w, int(1)))
        .collect();
    ctx.expect_nonzero(out, "Phi^3 of d^2", &phi3, &grid(&words, 3))
}

/// Derivations have `Phi^2 = 0`; a map that is not a derivation does not.
pub(crate) fn tensor_converse(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let fx = MixedFixtures::new(&ctx.sig)?;
    for (name, d) in [("derivation", &fx.derivation_even), ("odd derivation", &fx.derivation_odd)] {
        let phi = ctx.koszul.phi_recursive(&BracketSource::Endo(d.clone()), 2)?;
        ctx.expect_zero(out, &format!("Phi^2 of {name}"), &phi, &ctx.tuples(1, 2))?;
    }
    let x_image: &[(i64, &str)] = &[(1, "x")];
    let f = fixtures::table(&ctx.sig, 0, &[("x x", x_image)])?;
    let phi = ctx.koszul.phi_recursive(&BracketSource::Endo(f), 2)?;
    let gens: Vec<Element> = ["x", "e", "u"]
        .iter()
        .map(|g| Element::generator(&ctx.sig, g))
        .collect::<Result<_>>()?;
    ctx.expect_nonzero(out, "Phi^2 of a non-derivation", &phi, &grid(&gens, 2))?;
    let phi = ctx.koszul.phi_recursive(&BracketSource::Endo(fx.table_even.clone()), 2)?;
    let one = Element::one(&ctx.sig)?;
    let expected = -&fx.table_even.at_unit()?;
    ctx.compare(out, "Phi^2_f(1, 1) = -f(1)", &[vec![one.clone(), one]], |t| {
        Ok((phi.eval(t)?, expected.clone()))
    })
}

/// On the polynomial algebra the classical permutation formula, the
/// iterated brackets and the closed formulas agree.
pub(crate) fn commutative(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let k = &ctx.koszul;
    let sig = &ctx.sig;
    let t = |n: usize| Element::word(sig, crate::algebra::Word::power(n), int(1));
    let one = Element::one(sig)?;
    let mut endos = vec![
        ("left mult", Endomorphism::left_mult(&(&t(1) + &one))?),
        ("table", {
            let mut entries = std::collections::BTreeMap::new();
            entries.insert(crate::algebra::Word::power(0), &one + &t(1));
            entries.insert(crate::algebra::Word::power(1), t(3));
            entries.insert(crate::algebra::Word::power(2), one.scaled(&int(2)));
            Endomorphism::table(sig, 0, entries, None, false)?
        }),
    ];
    if sig.kind() == crate::algebra::AlgebraKind::Polynomial {
        endos.push(("d", Endomorphism::polynomial_derivative(sig, 1)?));
        endos.push(("d^2", Endomorphism::polynomial_derivative(sig, 2)?));
    }
    for (ei, (name, f)) in endos.iter().enumerate() {
        let src = BracketSource::Endo(f.clone());
        for n in 0..=ctx.max_arity {
            let tuples = ctx.tuples((ei * 16 + n) as u64, n);
            let comm = k.psi(&src, n, Formula::Commutative)?;
            for formula in [Formula::Bering, Formula::Recursive] {
                let other = k.psi(&src, n, formula)?;
                ctx.compare_ops(out, &format!("Psi^{n} of {name}: commutative vs {formula}"), &comm, &other, &tuples)?;
            }
            ctx.compare(out, &format!("Psi^{n} of {name} as an iterated bracket"), &tuples, |a| {
                Ok((comm.eval(a)?, iterated_bracket(f, a)?))
            })?;
        }
    }
    let x = &t(1) + &one.scaled(&int(2));
    let y = &t(2) - &one;
    let xy = x.try_mul(&y)?;
    for n in 0..=ctx.max_arity {
        let tuples = ctx.tuples((100 + n) as u64, n);
        let psi_x = k.psi(&BracketSource::element(y.clone())?, n, Formula::Recursive)?;
        let comm = k.psi(&BracketSource::element(y.clone())?, n, Formula::Commutative)?;
        ctx.compare_ops(out, &format!("Psi^{n}_y against (-1)^n y c1..cn"), &psi_x, &comm, &tuples)?;
        let psi_xy = k.psi(&BracketSource::element(xy.clone())?, n, Formula::Recursive)?;
        ctx.compare(out, &format!("Psi^{n}_(xy) = x Psi^{n}_y"), &tuples, |a| {
            Ok((psi_xy.eval(a)?, x.try_mul(&psi_x.eval(a)?)?))
        })?;
    }
    Ok(())
}

/// `Psi^2_{L_Q} = Psi^2_{R_Q} = -1/6 B_Q` for odd `Q`, and `B_Q(1, b) = 0`.
pub(crate) fn antibracket(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let sig = &ctx.sig;
    let qs = [
        element(sig, &[(1, "e")])?,
        element(sig, &[(1, "e"), (2, "x e")])?,
        element(sig, &[(1, "u e e"), (-1, "e x")])?,
    ];
    let one = Element::one(sig)?;
    for (qi, q) in qs.iter().enumerate() {
        let tuples = ctx.tuples((qi * 16) as u64, 2);
        for (side, f) in [("L", Endomorphism::left_mult(q)?), ("R", Endomorphism::right_mult(q)?)] {
            let psi = ctx.koszul.psi(&BracketSource::Endo(f), 2, Formula::Recursive)?;
            ctx.compare(out, &format!("Psi^2 of {side}_({q})"), &tuples, |t| {
                Ok((psi.eval(t)?, quantum_antibracket(q, &t[0], &t[1])?.scaled(&ratio(-1, 6))))
            })?;
        }
        ctx.compare(out, &format!("B_({q})(1, b)"), &tuples, |t| {
            Ok((quantum_antibracket(q, &one, &t[0])?, Element::zero(sig)))
        })?;
    }
    Ok(())
}

/// For degree zero `a, b` and `f(1) = 0`, the symmetrized iterated bracket
/// differs from `Psi^2_f(a,b)` by `1/2 ({f(a),b} + {f(b),a})`.
pub(crate) fn symmetrized_iterated(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let sig = &ctx.sig;
    let ids: Vec<String> = sig.generators().iter().map(|g| g.id.clone()).collect();
    if ids.len() < 2 || sig.generators().iter().any(|g| g.degree != 0) {
        return Err(crate::Error::Unsupported(
            "symmetrized-iterated needs two or more generators of degree zero".into(),
        ));
    }
    let (p, q) = (ids[0].as_str(), ids[1].as_str());
    let pq = format!("{p} {q}");
    let qp = format!("{q} {p}");
    let qq = format!("{q} {q}");
    let ppq = format!("{p} {p} {q}");
    let f = fixtures::table(
        sig,
        0,
        &[
            (p, &[(1, qq.as_str())]),
            (q, &[(1, p)]),
            (pq.as_str(), &[(1, "")]),
            (qp.as_str(), &[(1, ppq.as_str())]),
        ],
    )?;
    let psi2 = ctx.koszul.psi(&BracketSource::Endo(f.clone()), 2, Formula::Recursive)?;
    ctx.compare(out, "symmetrized iterated bracket minus Psi^2", &ctx.tuples(1, 2), |t| {
        let (a, b) = (&t[0], &t[1]);
        let mut lhs = iterated_bracket(&f, &[a.clone(), b.clone()])?;
        lhs += &iterated_bracket(&f, &[b.clone(), a.clone()])?;
        let mut lhs = lhs.scaled(&ratio(1, 2));
        lhs -= &psi2.eval(t)?;
        let mut rhs = f.apply(a)?.commutator(b)?;
        rhs += &f.apply(b)?.commutator(a)?;
        Ok((lhs, rhs.scaled(&ratio(1, 2))))
    })
}
