use num_traits::{One, Zero};

use crate::algebra::{Element, Signature};
use crate::numbers::{binomial, gauge_k, int, ratio, stirling2, Rational};
use crate::verify::context::Ctx;
use crate::verify::report::{Counterexample, Outcome};
use crate::Result;

/// Largest index covered by the table identities.
const BOUND: usize = 12;

struct Tally<'a> {
    out: &'a mut Outcome,
}

impl Tally<'_> {
    fn eq(&mut self, label: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) {
        self.out.samples += 1;
        if lhs != rhs && !self.out.failed() {
            let sig = Signature::ground_field();
            let l = Element::scalar(&sig, lhs.clone()).expect("ground field is unital");
            let r = Element::scalar(&sig, rhs.clone()).expect("ground field is unital");
            self.out.record(Counterexample::new(label(), &[], &l, &r));
        }
    }
}

fn choose(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub(crate) fn bernoulli_identities(ctx: &Ctx, out: &mut Outcome) -> Result<()> {
    let t = ctx.koszul.table();
    let bound = ctx.max_arity.min(BOUND);
    let mut tally = Tally { out };
    let printed = [
        int(1),
        ratio(-1, 2),
        ratio(1, 6),
        int(0),
        ratio(-1, 30),
        int(0),
        ratio(1, 42),
        int(0),
        ratio(-1, 30),
        int(0),
        ratio(5, 66),
        int(0),
        ratio(-691, 2730),
    ];
    for (n, b) in printed.iter().enumerate().take(bound + 1) {
        tally.eq(|| format!("B_{n}"), t.bernoulli(n), b);
    }
    for n in 1..=bound {
        let s: Rational = (0..=n).map(|k| choose(n + 1, k) * t.bernoulli(k)).sum();
        tally.eq(|| format!("recurrence at n = {n}"), &s, &Rational::zero());
        let s: Rational = (0..=n).map(|k| choose(n, k) * t.bernoulli(k)).sum();
        tally.eq(
            || format!("sum C({n},k) B_k = (-1)^n B_n"),
            &s,
            &(sign(n) * t.bernoulli(n)),
        );
    }
    for i in 0..=bound {
        for j in 0..=bound {
            let b = t.two_index(i, j);
            tally.eq(|| format!("B({i},{j}) = B({j},{i})"), b, t.two_index(j, i));
            let def: Rational = (0..=j).map(|k| choose(j, k) * t.bernoulli(i + k)).sum();
            tally.eq(|| format!("B({i},{j}) from the defining sum"), b, &(sign(j) * def));
            let rel = b + t.two_index(i + 1, j) + t.two_index(i, j + 1);
            tally.eq(
                || format!("B({i},{j}) + B({},{j}) + B({i},{}) = 0", i + 1, j + 1),
                &rel,
                &Rational::zero(),
            );
        }
    }
    for n in 0..=bound {
        tally.eq(|| format!("B(0,{n}) = B_{n}"), t.two_index(0, n), t.bernoulli(n));
        let s: Rational = (0..=n).map(|i| choose(n, i) * t.two_index(i, n - i)).sum();
        tally.eq(|| format!("sum C({n},i) B(i,{n}-i) = (-1)^{n}"), &s, &sign(n));
    }
    let printed_k = [
        (1, int(1)),
        (2, ratio(-1, 2)),
        (3, ratio(1, 2)),
        (5, ratio(11, 12)),
        (6, ratio(-3, 4)),
        (7, ratio(-11, 6)),
    ];
    for (n, k) in &printed_k {
        tally.eq(|| format!("K_{n}"), &gauge_k(*n), k);
    }
    for n in 2..=bound {
        let s: Rational = (1..n)
            .map(|i| Rational::from_integer(stirling2(n + 1, i).into()) * gauge_k(i))
            .sum();
        let expected = ratio(-2, ((n + 2) * (n - 1)) as i64) * s;
        tally.eq(|| format!("K_{n} recursion"), &gauge_k(n), &expected);
    }
    Ok(())
}
