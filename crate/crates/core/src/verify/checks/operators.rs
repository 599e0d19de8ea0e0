use num_traits::Zero;

use crate::algebra::is_odd;
use crate::brackets::{BracketSource, Formula};
use crate::numbers::int;
use crate::operators::{
    check_symmetry, mu, mu_bracket_coefficient, mu_product_coefficient, nr_bracket_with,
    nr_product_with, MultiOperator, TensorOperator,
};
use crate::verify::context::Ctx;
use crate::verify::fixtures::MixedFixtures;
use crate::verify::report::Outcome;
use crate::{Error, Result};

fn scaled_mu(ctx: &Ctx, level: i32, c: &crate::Rational) -> Result<MultiOperator> {
    if c.is_zero() {
        return Ok(MultiOperator::zero(&ctx.sig, level, 0));
    }
    Ok(mu(level, &ctx.sig)?.scaled(c))
}

/// `mu_n ∧̄ mu_m` and `[mu_n, mu_m]` against their closed forms.
pub(crate) fn mu_table(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let lo = if ctx.sig.is_unital() { -1 } else { 0 };
    let hi = ctx.max_arity as i32;
    for n in lo..=hi {
        for m in lo..=hi {
            if n + m < -1 {
                continue;
            }
            let (mn, mm) = (mu(n, &ctx.sig)?, mu(m, &ctx.sig)?);
            let tuples = ctx.tuples(((n + 2) * 16 + (m + 2)) as u64, (n + m + 1) as usize);
            let prod = nr_product_with(ctx.koszul.nr(), &mn, &mm)?;
            let expected = scaled_mu(ctx, n + m, &mu_product_coefficient(n, m))?;
            ctx.compare_ops(out, &format!("mu{n} * mu{m}"), &prod, &expected, &tuples)?;
            let br = nr_bracket_with(ctx.koszul.nr(), &mn, &mm)?;
            let expected = scaled_mu(ctx, n + m, &mu_bracket_coefficient(n, m))?;
            ctx.compare_ops(out, &format!("[mu{n}, mu{m}]"), &br, &expected, &tuples)?;
        }
    }
    Ok(())
}

/// Graded Jacobi, `[f, Id] = n f`, the product/bracket relation and the
/// symmetrized Gerstenhaber product.
pub(crate) fn nr_structure(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let nr = ctx.koszul.nr();
    let sig = &ctx.sig;
    let fx = MixedFixtures::new(sig)?;
    let mut pool = vec![
        ("mu0", mu(0, sig)?),
        ("mu1", mu(1, sig)?),
        ("mu2", mu(2, sig)?),
        ("L_x", MultiOperator::endomorphism(&fx.left_x)),
        ("derivation", MultiOperator::endomorphism(&fx.derivation_even)),
        ("odd derivation", MultiOperator::endomorphism(&fx.derivation_odd)),
        ("odd table", MultiOperator::endomorphism(&fx.table_odd)),
    ];
    if ctx.max_arity >= 3 {
        pool.push(("mu3", mu(3, sig)?));
    }
    let max_level = ctx.max_arity as i32 + 1;
    let identity = mu(0, sig)?;
    for (i, (name, f)) in pool.iter().enumerate() {
        let tuples = ctx.tuples(100 + i as u64, f.arity());
        let lhs = nr_bracket_with(nr, f, &identity)?;
        let rhs = f.scaled(&int(f.level() as i64));
        ctx.compare_ops(out, &format!("[{name}, Id]"), &lhs, &rhs, &tuples)?;
    }
    let mut stream = 200;
    for (fi, (fname, f)) in pool.iter().enumerate() {
        for (gname, g) in &pool[fi..] {
            stream += 1;
            let level = f.level() + g.level();
            if level > max_level {
                continue;
            }
            let tuples = ctx.tuples(stream, (level + 1) as usize);
            let fg = nr_product_with(nr, f, g)?;
            let gf = nr_product_with(nr, g, f)?;
            let br = nr_bracket_with(nr, f, g)?;
            let odd = is_odd(f.degree() * g.degree());
            ctx.compare(out, &format!("[{fname}, {gname}] from products"), &tuples, |t| {
                let mut rhs = fg.eval(t)?;
                let other = gf.eval(t)?;
                if odd {
                    rhs += &other;
                } else {
                    rhs -= &other;
                }
                Ok((br.eval(t)?, rhs))
            })?;
        }
    }
    for (fi, (fname, f)) in pool.iter().enumerate() {
        for (gi, (gname, g)) in pool.iter().enumerate() {
            for (hname, h) in &pool[gi.max(fi)..] {
                stream += 1;
                let level = f.level() + g.level() + h.level();
                if level > max_level.min(4) {
                    continue;
                }
                let lhs = nr_bracket_with(nr, f, &nr_bracket_with(nr, g, h)?)?;
                let a = nr_bracket_with(nr, &nr_bracket_with(nr, f, g)?, h)?;
                let b = nr_bracket_with(nr, g, &nr_bracket_with(nr, f, h)?)?;
                let s = if is_odd(f.degree() * g.degree()) { -1 } else { 1 };
                let rhs = MultiOperator::linear(sig, level, [(int(1), a), (int(s), b)])?;
                let tuples = ctx.tuples(stream, (level + 1) as usize);
                let label = format!("Jacobi for ({fname}, {gname}, {hname})");
                ctx.compare_ops(out, &label, &lhs, &rhs, &tuples)?;
            }
        }
    }
    for fa in 1..=3usize {
        for ga in 1..=3usize {
            if fa + ga - 1 > ctx.max_arity + 1 {
                continue;
            }
            stream += 1;
            let f = TensorOperator::multiplication(sig, fa);
            let g = TensorOperator::multiplication(sig, ga);
            let lhs = TensorOperator::gerstenhaber(&f, &g)?.symmetrized();
            let rhs = nr_product_with(nr, &f.symmetrized(), &g.symmetrized())?;
            let tuples = ctx.tuples(stream, fa + ga - 1);
            ctx.compare_ops(out, &format!("(m{fa} o m{ga}) N"), &lhs, &rhs, &tuples)?;
        }
    }
    Ok(())
}

/// Every operator the library builds passes the transposition test.
pub(crate) fn symmetry(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let sig = &ctx.sig;
    let fx = MixedFixtures::new(sig)?;
    let mut ops: Vec<(String, MultiOperator)> = Vec::new();
    for n in 1..=ctx.max_arity.min(4) as i32 {
        ops.push((format!("mu{n}"), mu(n, sig)?));
    }
    let mut sources: Vec<(String, BracketSource)> = MixedFixtures::element_sources(sig)?
        .into_iter()
        .map(|(n, s)| (n.to_string(), s))
        .collect();
    for (name, f) in fx.endo_sources().into_iter().take(4) {
        sources.push((name.to_string(), BracketSource::Endo(f)));
    }
    for (name, s) in &sources {
        for formula in [Formula::Recursive, Formula::Bering, Formula::Bandiera] {
            let fam = ctx.koszul.psi_family(s, ctx.max_arity, formula)?;
            for (n, op) in fam.members.iter().enumerate().skip(2) {
                ops.push((format!("{formula} Psi^{n} of {name}"), op.clone()));
            }
        }
    }
    for (i, (name, op)) in ops.iter().enumerate() {
        let report = check_symmetry(op, ctx.samples, ctx.seed.wrapping_add(i as u64));
        if let Some(e) = report.error {
            return Err(Error::Unsupported(format!("{name}: {e}")));
        }
        out.samples += report.samples_run;
        if let Some(mut cx) = report.counterexample {
            cx.label = format!("{name}: {}", cx.label);
            out.record(cx);
        }
    }
    Ok(())
}
