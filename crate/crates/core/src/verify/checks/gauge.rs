use crate::algebra::{Element, Endomorphism, Signature};
use crate::brackets::{BracketSource, GaugePreset, LevelSeries};
use crate::numbers::int;
use crate::operators::{mu, MultiOperator};
use crate::verify::context::Ctx;
use crate::brackets::Koszul;
use crate::verify::fixtures::{self, MixedFixtures};
use crate::verify::report::Outcome;
use crate::Result;

/// On the ground field, `exp([-, sum K_n mu_n]) (mu_0 + mu_-1) = mu_-1`, both
/// directly and through the unit shift of `mu_0`.
pub(crate) fn gauge_fixing(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let sig = &ctx.sig;
    let unit = mu(-1, sig)?;
    let mut direct = LevelSeries::single(mu(0, sig)?);
    direct.insert(unit.clone());
    let shifted = LevelSeries::single(mu(0, sig)?);
    let koszul = GaugePreset::koszul();
    let runs = [
        ("mu0 + mu-1", ctx.koszul.exp_adjoint(&direct, &koszul, ctx.max_arity, false)?),
        ("unit shift of mu0", ctx.koszul.exp_adjoint(&shifted, &koszul, ctx.max_arity, true)?),
    ];
    for (ri, (name, series)) in runs.iter().enumerate() {
        let members = series.members(sig, 0, ctx.max_arity);
        for (n, op) in members.iter().enumerate() {
            let expected = if n == 0 {
                unit.clone()
            } else {
                MultiOperator::zero(sig, n as i32 - 1, 0)
            };
            let tuples = ctx.tuples((ri * 16 + n) as u64, n);
            let label = format!("{name}: arity {n}");
            ctx.compare_ops(out, &label, op, &expected, &tuples)?;
        }
    }
    Ok(())
}

fn monomial_tuples(ctx: &Ctx, sig: &std::sync::Arc<Signature>, stream: u64, n: usize) -> Vec<Vec<Element>> {
    let mut s = ctx.sampler_on(sig, stream);
    (0..ctx.samples)
        .map(|_| (0..n).map(|_| s.monomial(5)).collect())
        .collect()
}

type PhiRoute = fn(&Koszul, &Endomorphism, usize) -> Result<MultiOperator>;

/// The brackets of the extension to algebras without unit.
pub(crate) fn nonunital_d2(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let sig = &ctx.sig;
    let id = Endomorphism::identity(sig);
    for n in 0..=ctx.max_arity {
        let phi = ctx.koszul.phi_nonunital(&id, n)?;
        let expected = if n == 0 {
            MultiOperator::zero(sig, -1, 0)
        } else {
            let s = if n % 2 == 1 { 1 } else { -1 };
            mu(n as i32 - 1, sig)?.scaled(&int(s))
        };
        let tuples = ctx.tuples(n as u64, n);
        ctx.compare_ops(out, &format!("Phi^{n} of Id"), &phi, &expected, &tuples)?;
    }
    if let Ok(f) = fixtures::derivation(
        sig,
        0,
        &[("x", &[(1, "e u"), (-1, "x x")]), ("e", &[(1, "x e")]), ("u", &[(2, "u x")])],
    ) {
        let tuples = ctx.tuples(50, 1);
        let phi = ctx.koszul.phi_nonunital(&f, 1)?;
        ctx.compare_ops(out, "Phi^1_f = f", &phi, &MultiOperator::endomorphism(&f), &tuples)?;
        let tuples = ctx.tuples(51, 2);
        let phi = ctx.koszul.phi_nonunital(&f, 2)?;
        ctx.expect_zero(out, "Phi^2 of a derivation", &phi, &tuples)?;
    }
    let unital = Signature::default_mixed();
    for (si, (name, f)) in MixedFixtures::new(&unital)?.endo_sources().into_iter().enumerate() {
        let rec = ctx.koszul.phi_family(&BracketSource::Endo(f.clone()), ctx.max_arity)?;
        for n in 0..=ctx.max_arity {
            let phi = ctx.koszul.phi_nonunital(&f, n)?;
            let tuples = ctx.tuples_on(&unital, (100 + si * 16 + n) as u64, n, ctx.samples);
            let label = format!("Phi^{n} of {name}: without unit vs recursive");
            ctx.compare_ops(out, &label, &phi, &rec.members[n], &tuples)?;
        }
    }
    let poly = Signature::polynomial(0)?;
    let d1 = Endomorphism::polynomial_derivative(&poly, 1)?;
    let d2 = Endomorphism::polynomial_derivative(&poly, 2)?;
    let routes: [(&str, PhiRoute); 2] = [
        ("without unit", |k, f, n| k.phi_nonunital(f, n)),
        ("recursive", |k, f, n| k.phi_recursive(&BracketSource::Endo(f.clone()), n)),
    ];
    for (route, phis) in routes {
        let phi2 = phis(&ctx.koszul, &d2, 2)?;
        let tuples = monomial_tuples(ctx, &poly, 200, 2);
        ctx.compare(out, &format!("Phi^2 of d^2 ({route})"), &tuples, |t| {
            let rhs = d1.apply(&t[0])?.try_mul(&d1.apply(&t[1])?)?.scaled(&int(2));
            Ok((phi2.eval(t)?, rhs))
        })?;
        for n in 3..=ctx.max_arity.max(4) {
            let phin = phis(&ctx.koszul, &d2, n)?;
            let tuples = monomial_tuples(ctx, &poly, 200 + n as u64, n);
            ctx.expect_zero(out, &format!("Phi^{n} of d^2 ({route})"), &phin, &tuples)?;
        }
    }
    Ok(())
}
