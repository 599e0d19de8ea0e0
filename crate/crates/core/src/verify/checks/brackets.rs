use crate::algebra::{Element, Endomorphism};
use crate::brackets::{BracketSource, Formula, GaugePreset, LevelSeries};
use crate::operators::{nr_bracket_with, MultiOperator};
use crate::verify::context::Ctx;
use crate::verify::fixtures::{self, MixedFixtures};
use crate::verify::report::{Counterexample, Outcome};
use crate::Result;

/// Sources named by the check parameters, or the fixed mixed-degree fixtures.
fn sources(ctx: &Ctx) -> Result<Vec<(String, BracketSource)>> {
    if !ctx.sources.is_empty() {
        return Ok(ctx
            .sources
            .iter()
            .enumerate()
            .map(|(i, s)| (format!("source {i}"), s.clone()))
            .collect());
    }
    let mut out: Vec<(String, BracketSource)> = MixedFixtures::element_sources(&ctx.sig)?
        .into_iter()
        .map(|(n, s)| (n.to_string(), s))
        .collect();
    for (name, f) in MixedFixtures::new(&ctx.sig)?.endo_sources() {
        out.push((name.to_string(), BracketSource::Endo(f)));
    }
    Ok(out)
}

/// Recursive, Bering and Bandiera brackets agree.
pub(crate) fn cross_formula(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    for (si, (name, source)) in sources(ctx)?.iter().enumerate() {
        let rec = ctx.koszul.psi_family(source, ctx.max_arity, Formula::Recursive)?;
        for n in 0..=ctx.max_arity {
            let tuples = ctx.tuples((si * 16 + n) as u64, n);
            for formula in [Formula::Bering, Formula::Bandiera] {
                let other = ctx.koszul.psi(source, n, formula)?;
                let label = format!("Psi^{n} of {name}: recursive vs {formula}");
                ctx.compare_ops(out, &label, &rec.members[n], &other, &tuples)?;
            }
        }
    }
    Ok(())
}

fn pairs(fx: &MixedFixtures) -> Vec<(&'static str, Endomorphism, &'static str, Endomorphism)> {
    vec![
        ("L_x", fx.left_x.clone(), "derivation", fx.derivation_even.clone()),
        ("R_u", fx.right_u.clone(), "table", fx.table_even.clone()),
        ("table", fx.table_even.clone(), "odd table", fx.table_odd.clone()),
        ("odd derivation", fx.derivation_odd.clone(), "L_e", fx.left_e.clone()),
        ("derivation", fx.derivation_even.clone(), "odd table", fx.table_odd.clone()),
        ("L_x", fx.left_x.clone(), "R_x", fx.right_x.clone()),
        ("odd table", fx.table_odd.clone(), "odd table", fx.table_odd.clone()),
    ]
}

/// `sum_i [B^i_f, B^{n-i+1}_g]` from two families indexed by arity.
fn split_sum(
    ctx: &Ctx,
    bf: &[MultiOperator],
    bg: &[MultiOperator],
    n: usize,
) -> Result<MultiOperator> {
    let mut terms = Vec::new();
    for i in 0..=n + 1 {
        terms.push((
            crate::numbers::int(1),
            nr_bracket_with(ctx.koszul.nr(), &bf[i], &bg[n + 1 - i])?,
        ));
    }
    MultiOperator::linear(&ctx.sig, n as i32 - 1, terms)
}

/// `Psi^n_{[f,g]} = sum_i [Psi^i_f, Psi^{n-i+1}_g]`.
pub(crate) fn jacobi(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let fx = MixedFixtures::new(&ctx.sig)?;
    let top = ctx.max_arity;
    for (pi, (fname, f, gname, g)) in pairs(&fx).into_iter().enumerate() {
        let fg = Endomorphism::commutator(&f, &g)?;
        let psi = |h: &Endomorphism, n| {
            ctx.koszul
                .psi_family(&BracketSource::Endo(h.clone()), n, Formula::Recursive)
        };
        let (pf, pg, pfg) = (psi(&f, top + 1)?, psi(&g, top + 1)?, psi(&fg, top)?);
        for n in 0..=top {
            let rhs = split_sum(ctx, &pf.members, &pg.members, n)?;
            let tuples = ctx.tuples((pi * 16 + n) as u64, n);
            let label = format!("Psi^{n} of [{fname}, {gname}]");
            ctx.compare_ops(out, &label, &pfg.members[n], &rhs, &tuples)?;
        }
    }
    Ok(())
}

/// The exponential construction agrees with the recursion, and with the
/// Borjeson coefficients it is still a Lie morphism.
pub(crate) fn exp_adjoint(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    for (si, (name, source)) in sources(ctx)?.iter().enumerate() {
        let rec = ctx.koszul.psi_family(source, ctx.max_arity, Formula::Recursive)?;
        let exp = ctx.koszul.psi_family(source, ctx.max_arity, Formula::ExpAdjoint)?;
        for n in 0..=ctx.max_arity {
            let tuples = ctx.tuples((si * 16 + n) as u64, n);
            let label = format!("Psi^{n} of {name}: recursive vs exp-adjoint");
            ctx.compare_ops(out, &label, &rec.members[n], &exp.members[n], &tuples)?;
        }
    }
    if !ctx.sources.is_empty() {
        return Ok(());
    }
    let fx = MixedFixtures::new(&ctx.sig)?;
    let top = ctx.max_arity.min(3);
    let borjeson = |h: &Endomorphism, n: usize| -> Result<Vec<MultiOperator>> {
        let series = LevelSeries::from_source(&BracketSource::Endo(h.clone()))?;
        let s = ctx.koszul.exp_adjoint(&series, &GaugePreset::borjeson(), n, true)?;
        Ok(s.members(&ctx.sig, h.degree(), n))
    };
    for (pi, (fname, f, gname, g)) in pairs(&fx).into_iter().take(5).enumerate() {
        let fg = Endomorphism::commutator(&f, &g)?;
        let (bf, bg, bfg) = (borjeson(&f, top)?, borjeson(&g, top)?, borjeson(&fg, top - 1)?);
        for (n, lhs) in bfg.iter().enumerate().take(top) {
            let rhs = split_sum(ctx, &bf, &bg, n)?;
            let tuples = ctx.tuples((1000 + pi * 16 + n) as u64, n);
            let label = format!("Borjeson family of [{fname}, {gname}] at arity {n}");
            ctx.compare_ops(out, &label, lhs, &rhs, &tuples)?;
        }
    }
    Ok(())
}

/// For a square zero odd `f`, `sum_i [Psi^i_f, Psi^{n-i+1}_f]` vanishes.
pub(crate) fn curved_linf(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let (sig, f) = fixtures::square_zero()?;
    if sig != ctx.sig {
        return Err(crate::Error::Unsupported(
            "curved-linf runs on its own witness algebra".into(),
        ));
    }
    let ff = Endomorphism::compose(&f, &f)?;
    for w in sig.words_up_to(5) {
        out.samples += 1;
        let a = Element::word(&sig, w, crate::numbers::int(1));
        let v = ff.apply(&a)?;
        if !v.is_zero() {
            out.record(Counterexample::new("f o f = 0", &[a], &v, &Element::zero(&sig)));
            return Ok(());
        }
    }
    let top = ctx.max_arity;
    let fam = ctx
        .koszul
        .psi_family(&BracketSource::Endo(f), top + 1, Formula::Recursive)?;
    for n in 0..=top {
        let op = split_sum(ctx, &fam.members, &fam.members, n)?;
        let tuples = ctx.tuples(n as u64, n);
        ctx.expect_zero(out, &format!("[Psi_f, Psi_f] at arity {n}"), &op, &tuples)?;
    }
    Ok(())
}
