//! Graded symmetric multilinear operators `A^{(n+1)} -> A` and the
//! Nijenhuis-Richardson pre-Lie product and bracket on them.
//!
//! An operator at level `n` takes `n + 1` arguments; level `-1` operators
//! are constants. Operators are expression trees evaluated on demand: the
//! underlying algebras are infinite dimensional, so every identity in this
//! crate is checked by evaluating both sides on sample tuples.

mod gerstenhaber;
mod symmetry;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::{One, Zero};

pub use gerstenhaber::{symmetrize_map, TensorOperator};
pub use symmetry::check_symmetry;

use crate::algebra::{is_odd, Element, Endomorphism, Signature, Word};
use crate::numbers::{factorial, int, Rational};
use crate::{Error, Result};

/// A homogeneous argument: its degree and the (nonzero) element.
pub type Arg = (i64, Element);

type FormulaFn = dyn Fn(&[Arg]) -> Result<Element> + Send + Sync;

/// Values of shared subtrees within one evaluation, keyed by node address
/// and arguments.
type Memo = HashMap<(usize, Vec<Arg>), Element>;

/// Arguments larger than this are not memoized: they rarely repeat and are
/// expensive to hash.
const MEMO_MAX_TERMS: usize = 4;

/// Element of `D_n(A)`, shared and immutable.
#[derive(Clone)]
pub struct MultiOperator(Arc<Node>);

struct Node {
    level: i32,
    degree: i64,
    sig: Arc<Signature>,
    kind: Kind,
}

enum Kind {
    Zero,
    Constant(Element),
    Mu(usize),
    Endo(Endomorphism),
    Product {
        left: MultiOperator,
        right: MultiOperator,
        flip: Option<usize>,
    },
    Linear(Vec<(Rational, MultiOperator)>),
    Formula {
        name: String,
        eval: Arc<FormulaFn>,
    },
}

/// Knobs for the Nijenhuis-Richardson product. The default is the correct
/// product; `shuffle_sign_flip` negates the term of one shuffle (by
/// enumeration index) and exists only to test that checks catch it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NrConfig {
    pub shuffle_sign_flip: Option<usize>,
}

impl MultiOperator {
    fn new(sig: &Arc<Signature>, level: i32, degree: i64, kind: Kind) -> Self {
        MultiOperator(Arc::new(Node {
            level,
            degree,
            sig: sig.clone(),
            kind,
        }))
    }

    pub fn level(&self) -> i32 {
        self.0.level
    }

    /// Number of arguments, `level + 1`.
    pub fn arity(&self) -> usize {
        (self.0.level + 1) as usize
    }

    pub fn degree(&self) -> i64 {
        self.0.degree
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.0.sig
    }

    /// True when the operator is syntactically zero. A false result does not
    /// mean the operator is nonzero.
    pub fn is_trivially_zero(&self) -> bool {
        matches!(self.0.kind, Kind::Zero)
    }

    pub fn zero(sig: &Arc<Signature>, level: i32, degree: i64) -> Self {
        Self::new(sig, level, degree, Kind::Zero)
    }

    /// A constant (level `-1`). The element must be homogeneous.
    pub fn constant(x: &Element) -> Result<Self> {
        if x.is_zero() {
            return Ok(Self::zero(x.signature(), -1, 0));
        }
        let d = x
            .degree()
            .ok_or_else(|| Error::Inhomogeneous(x.to_string()))?;
        Ok(Self::new(x.signature(), -1, d, Kind::Constant(x.clone())))
    }

    pub fn endomorphism(f: &Endomorphism) -> Self {
        Self::new(f.signature(), 0, f.degree(), Kind::Endo(f.clone()))
    }

    /// Wraps a closure evaluated on homogeneous, nonzero arguments. The
    /// closure is responsible for multilinearity and graded symmetry.
    pub fn from_fn<F>(sig: &Arc<Signature>, level: i32, degree: i64, name: &str, f: F) -> Self
    where
        F: Fn(&[Arg]) -> Result<Element> + Send + Sync + 'static,
    {
        Self::new(
            sig,
            level,
            degree,
            Kind::Formula {
                name: name.to_string(),
                eval: Arc::new(f),
            },
        )
    }

    /// `sum c_i op_i` over operators of a common level. Degrees must agree
    /// unless an operand is trivially zero.
    pub fn linear(
        sig: &Arc<Signature>,
        level: i32,
        terms: impl IntoIterator<Item = (Rational, MultiOperator)>,
    ) -> Result<Self> {
        let mut kept = Vec::new();
        let mut degree = None;
        for (c, op) in terms {
            if op.level() != level {
                return Err(Error::Unsupported(format!(
                    "linear combination mixes levels {level} and {}",
                    op.level()
                )));
            }
            if !same_sig(sig, op.signature()) {
                return Err(Error::SignatureMismatch);
            }
            if c.is_zero() || op.is_trivially_zero() {
                continue;
            }
            match degree {
                None => degree = Some(op.degree()),
                Some(d) if d != op.degree() => {
                    return Err(Error::Unsupported(
                        "linear combination of operators of different degrees".into(),
                    ))
                }
                _ => {}
            }
            kept.push((c, op));
        }
        let Some(degree) = degree else {
            return Ok(Self::zero(sig, level, 0));
        };
        if kept.len() == 1 && kept[0].0.is_one() {
            return Ok(kept.pop().unwrap().1);
        }
        Ok(Self::new(sig, level, degree, Kind::Linear(kept)))
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::linear(&self.0.sig, self.level(), [(c.clone(), self.clone())])
            .expect("single-term combination")
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::linear(
            &self.0.sig,
            self.level(),
            [(Rational::one(), self.clone()), (Rational::one(), other.clone())],
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::linear(
            &self.0.sig,
            self.level(),
            [(Rational::one(), self.clone()), (-Rational::one(), other.clone())],
        )
    }

    /// Evaluates on an argument tuple. Arguments may be inhomogeneous; they
    /// are split into homogeneous parts and the results summed.
    pub fn eval(&self, args: &[Element]) -> Result<Element> {
        if args.len() != self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                found: args.len(),
            });
        }
        for a in args {
            if !same_sig(&self.0.sig, a.signature()) {
                return Err(Error::SignatureMismatch);
            }
        }
        if args.is_empty() {
            return self.eval_hom(&[]);
        }
        let parts: Vec<Vec<Arg>> = args.iter().map(|a| a.split()).collect();
        let mut out = Element::zero(&self.0.sig);
        if parts.iter().any(|p| p.is_empty()) {
            return Ok(out);
        }
        let mut memo = Memo::new();
        for combo in parts.iter().map(|p| p.iter()).multi_cartesian_product() {
            let hom: Vec<Arg> = combo.into_iter().cloned().collect();
            out += &self.eval_memo(&hom, &mut memo)?;
        }
        Ok(out)
    }

    /// Evaluation on homogeneous nonzero arguments.
    pub fn eval_hom(&self, args: &[Arg]) -> Result<Element> {
        self.eval_memo(args, &mut Memo::new())
    }

    fn eval_memo(&self, args: &[Arg], memo: &mut Memo) -> Result<Element> {
        let sig = &self.0.sig;
        let (left, right, flip) = match &self.0.kind {
            Kind::Zero => return Ok(Element::zero(sig)),
            Kind::Constant(x) => return Ok(x.clone()),
            Kind::Mu(n) => return mu_eval(sig, *n, args),
            Kind::Endo(f) => return f.apply(&args[0].1),
            Kind::Formula { eval, .. } => return eval(args),
            Kind::Linear(terms) => {
                let mut out = Element::zero(sig);
                for (c, op) in terms {
                    out.add_scaled(&op.eval_memo(args, memo)?, c);
                }
                return Ok(out);
            }
            Kind::Product { left, right, flip } => (left, right, *flip),
        };
        if args.iter().any(|a| a.1.num_terms() > MEMO_MAX_TERMS) {
            return product_eval(left, right, flip, args, memo);
        }
        let key = (Arc::as_ptr(&self.0) as usize, args.to_vec());
        if let Some(v) = memo.get(&key) {
            return Ok(v.clone());
        }
        let value = product_eval(left, right, flip, args, memo)?;
        memo.insert(key, value.clone());
        Ok(value)
    }
}

fn same_sig(a: &Arc<Signature>, b: &Arc<Signature>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Evaluates an operator on a possibly inhomogeneous element in the first
/// slot followed by homogeneous arguments.
fn eval_with_head(op: &MultiOperator, head: &Element, rest: &[Arg], memo: &mut Memo) -> Result<Element> {
    let mut out = Element::zero(op.signature());
    for part in head.split() {
        let mut full = Vec::with_capacity(rest.len() + 1);
        full.push(part);
        full.extend_from_slice(rest);
        out += &op.eval_memo(&full, memo)?;
    }
    Ok(out)
}

fn product_eval(
    f: &MultiOperator,
    g: &MultiOperator,
    flip: Option<usize>,
    args: &[Arg],
    memo: &mut Memo,
) -> Result<Element> {
    let sig = f.signature();
    if f.level() < 0 {
        return Ok(Element::zero(sig));
    }
    if g.level() < 0 {
        let c = g.eval_memo(&[], memo)?;
        return eval_with_head(f, &c, args, memo);
    }
    let take = g.arity();
    let degrees: Vec<i64> = args.iter().map(|a| a.0).collect();
    let mut buf = Vec::new();
    for (idx, chosen) in (0..args.len()).combinations(take).enumerate() {
        let mut negative = flip == Some(idx);
        let mut inner_args = Vec::with_capacity(take);
        let mut rest = Vec::with_capacity(args.len() - take);
        let mut ci = 0;
        for (i, a) in args.iter().enumerate() {
            if ci < chosen.len() && chosen[ci] == i {
                // moving v_i in front of the earlier unchosen elements
                let passed: i64 = rest.iter().map(|r: &Arg| r.0).sum();
                if is_odd(degrees[i] * passed) {
                    negative = !negative;
                }
                inner_args.push(a.clone());
                ci += 1;
            } else {
                rest.push(a.clone());
            }
        }
        let inner = g.eval_memo(&inner_args, memo)?;
        if inner.is_zero() {
            continue;
        }
        let term = eval_with_head(f, &inner, &rest, memo)?;
        term.push_scaled(&mut buf, &if negative { -Rational::one() } else { Rational::one() });
    }
    Ok(Element::from_raw(sig, buf))
}

fn mu_eval(sig: &Arc<Signature>, n: usize, args: &[Arg]) -> Result<Element> {
    if n == 0 {
        return Ok(args[0].1.clone());
    }
    if sig.is_commutative() {
        return Element::product(sig, args.iter().map(|a| &a.1));
    }
    let mut buf = Vec::new();
    let mut used = vec![false; args.len()];
    signed_products(args, &mut used, None, false, &mut buf)?;
    Ok(Element::from_raw(sig, buf).scaled(&(Rational::one() / factorial(n + 1))))
}

/// Depth-first sum of `eps(sigma) a_sigma(0) ... a_sigma(n)` sharing prefix
/// products. Picking `a_j` next passes it over the unused `a_i`, `i < j`.
fn signed_products(
    args: &[Arg],
    used: &mut [bool],
    prefix: Option<Element>,
    negative: bool,
    out: &mut Vec<(Word, Rational)>,
) -> Result<()> {
    let mut passed = 0;
    let mut any = false;
    for j in 0..args.len() {
        if used[j] {
            continue;
        }
        any = true;
        let neg = negative ^ is_odd(args[j].0 * passed);
        passed += args[j].0;
        let next = match &prefix {
            None => args[j].1.clone(),
            Some(p) => p.try_mul(&args[j].1)?,
        };
        used[j] = true;
        signed_products(args, used, Some(next), neg, out)?;
        used[j] = false;
    }
    if !any {
        if let Some(p) = prefix {
            p.push_scaled(out, &if negative { -Rational::one() } else { Rational::one() });
        }
    }
    Ok(())
}

/// The symmetrized product `mu_n`, `n >= -1`. `mu_{-1}` is the unit and
/// `mu_0` the identity.
pub fn mu(n: i32, sig: &Arc<Signature>) -> Result<MultiOperator> {
    match n {
        i32::MIN..=-2 => Err(Error::Unsupported(format!("mu_{n} is not defined"))),
        -1 => MultiOperator::constant(&Element::one(sig)?),
        _ => Ok(MultiOperator::new(sig, n, 0, Kind::Mu(n as usize))),
    }
}

/// `mu_n` from the defining factorial sum, without the commutative shortcut
/// or shared prefixes. Kept as a slow reference for tests.
pub fn mu_reference(n: usize, args: &[Element]) -> Result<Element> {
    let sig = args
        .first()
        .map(|a| a.signature().clone())
        .ok_or(Error::Arity {
            expected: n + 1,
            found: 0,
        })?;
    let mut out = Element::zero(&sig);
    for (d, a) in args
        .iter()
        .map(|a| a.split())
        .multi_cartesian_product()
        .map(|c| c.into_iter().unzip::<_, _, Vec<i64>, Vec<Element>>())
    {
        for p in crate::algebra::permutations(&d) {
            let prod = Element::product(&sig, p.perm.iter().map(|&i| &a[i]))?;
            if p.negative {
                out -= &prod;
            } else {
                out += &prod;
            }
        }
    }
    Ok(out.scaled(&(Rational::one() / factorial(n + 1))))
}

/// The Nijenhuis-Richardson product `f ∧̄ g`, at level `level(f) + level(g)`.
pub fn nr_product(f: &MultiOperator, g: &MultiOperator) -> Result<MultiOperator> {
    nr_product_with(NrConfig::default(), f, g)
}

pub fn nr_product_with(
    cfg: NrConfig,
    f: &MultiOperator,
    g: &MultiOperator,
) -> Result<MultiOperator> {
    if !same_sig(f.signature(), g.signature()) {
        return Err(Error::SignatureMismatch);
    }
    let sig = f.signature();
    let level = f.level() + g.level();
    let degree = f.degree() + g.degree();
    if f.level() < 0 || f.is_trivially_zero() || g.is_trivially_zero() {
        return Ok(MultiOperator::zero(sig, level, degree));
    }
    Ok(MultiOperator::new(
        sig,
        level,
        degree,
        Kind::Product {
            left: f.clone(),
            right: g.clone(),
            flip: cfg.shuffle_sign_flip,
        },
    ))
}

/// `[f, g] = f ∧̄ g - (-1)^{|f||g|} g ∧̄ f`.
pub fn nr_bracket(f: &MultiOperator, g: &MultiOperator) -> Result<MultiOperator> {
    nr_bracket_with(NrConfig::default(), f, g)
}

pub fn nr_bracket_with(
    cfg: NrConfig,
    f: &MultiOperator,
    g: &MultiOperator,
) -> Result<MultiOperator> {
    let fg = nr_product_with(cfg, f, g)?;
    let gf = nr_product_with(cfg, g, f)?;
    let sign = if is_odd(f.degree() * g.degree()) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let level = f.level() + g.level();
    if fg.is_trivially_zero() && gf.is_trivially_zero() {
        return Ok(MultiOperator::zero(f.signature(), level, f.degree() + g.degree()));
    }
    MultiOperator::linear(f.signature(), level, [(Rational::one(), fg), (sign, gf)])
}

/// Coefficient in `mu_n ∧̄ mu_m = C(n+m+1, m+1) mu_{n+m}`.
pub fn mu_product_coefficient(n: i32, m: i32) -> Rational {
    let top = n + m + 1;
    if top < 0 || m + 1 < 0 || m + 1 > top {
        return Rational::zero();
    }
    Rational::from_integer(crate::numbers::binomial(top as usize, (m + 1) as usize))
}

/// Coefficient in `[mu_n, mu_m] = (n-m) (n+m+1)! / ((n+1)! (m+1)!) mu_{n+m}`.
pub fn mu_bracket_coefficient(n: i32, m: i32) -> Rational {
    if n + m + 1 < 0 {
        return Rational::zero();
    }
    int((n - m) as i64) * factorial((n + m + 1) as usize)
        / (factorial((n + 1) as usize) * factorial((m + 1) as usize))
}

impl fmt::Debug for MultiOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl MultiOperator {
    /// Short structural description, for diagnostics.
    pub fn describe(&self) -> String {
        match &self.0.kind {
            Kind::Zero => "0".into(),
            Kind::Constant(x) => format!("({x})"),
            Kind::Mu(n) => format!("mu{n}"),
            Kind::Endo(_) => "f".into(),
            Kind::Product { left, right, .. } => {
                format!("({} * {})", left.describe(), right.describe())
            }
            Kind::Linear(terms) => terms
                .iter()
                .map(|(c, op)| format!("{c}·{}", op.describe()))
                .join(" + "),
            Kind::Formula { name, .. } => name.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::ratio;

    fn mixed() -> (Arc<Signature>, Element, Element, Element) {
        let sig = Signature::default_mixed();
        let x = Element::generator(&sig, "x").unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let u = Element::generator(&sig, "u").unwrap();
        (sig, x, e, u)
    }

    #[test]
    fn mu_low_levels() {
        let (sig, x, e, u) = mixed();
        let a = &x + &e;
        assert_eq!(mu(0, &sig).unwrap().eval(std::slice::from_ref(&a)).unwrap(), a);
        assert_eq!(mu(-1, &sig).unwrap().eval(&[]).unwrap(), Element::one(&sig).unwrap());
        let xx = &x * &x;
        let m1 = mu(1, &sig).unwrap().eval(&[x.clone(), xx.clone()]).unwrap();
        assert_eq!(m1, (&(&x * &xx) + &(&xx * &x)).scaled(&ratio(1, 2)));
        // odd-odd: (eu - ue)/2
        let m1 = mu(1, &sig).unwrap().eval(&[e.clone(), u.clone()]).unwrap();
        assert_eq!(m1, (&(&e * &u) - &(&u * &e)).scaled(&ratio(1, 2)));
    }

    #[test]
    fn mu_undefined_cases() {
        let sig = Signature::free_nonunital(vec![crate::Generator::new("a", 0)]).unwrap();
        assert!(mu(-1, &sig).is_err());
        assert!(mu(-2, &Signature::default_mixed()).is_err());
    }

    #[test]
    fn mu_matches_reference() {
        let (sig, x, e, u) = mixed();
        let args = vec![&x + &e, &u * &e, &(&x * &u) - &e];
        let fast = mu(2, &sig).unwrap().eval(&args).unwrap();
        assert_eq!(fast, mu_reference(2, &args).unwrap());
    }

    #[test]
    fn mu_on_polynomials_is_the_product() {
        let sig = Signature::polynomial(0).unwrap();
        let t = Element::generator(&sig, "t").unwrap();
        let t2 = &t * &t;
        let v = mu(2, &sig).unwrap().eval(&[t.clone(), t2.clone(), t.clone()]).unwrap();
        assert_eq!(v, &(&t * &t2) * &t);
        assert_eq!(mu_reference(2, &[t.clone(), t2.clone(), t.clone()]).unwrap(), v);
    }

    #[test]
    fn product_with_constant_plugs_first_slot() {
        let (sig, x, e, _) = mixed();
        let m1 = mu(1, &sig).unwrap();
        let c = MultiOperator::constant(&e).unwrap();
        let p = nr_product(&m1, &c).unwrap();
        assert_eq!(p.level(), 0);
        assert_eq!(p.eval(std::slice::from_ref(&x)).unwrap(), m1.eval(&[e.clone(), x.clone()]).unwrap());
        let z = nr_product(&c, &m1).unwrap();
        assert!(z.is_trivially_zero());
        assert_eq!(z.level(), 0);
    }

    #[test]
    fn mu_products_on_degree_zero() {
        let (sig, x, _, _) = mixed();
        let args = vec![x.clone(), &x * &x, Element::one(&sig).unwrap()];
        let p = nr_product(&mu(1, &sig).unwrap(), &mu(1, &sig).unwrap()).unwrap();
        let lhs = p.eval(&args).unwrap();
        let rhs = mu(2, &sig).unwrap().eval(&args).unwrap().scaled(&int(3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_coefficients() {
        assert_eq!(mu_product_coefficient(1, 1), int(3));
        assert_eq!(mu_bracket_coefficient(1, 1), int(0));
        assert_eq!(mu_bracket_coefficient(2, 1), int(2));
        assert_eq!(mu_product_coefficient(-1, 2), int(0));
        assert_eq!(mu_bracket_coefficient(0, -1), int(1));
    }

    #[test]
    fn arity_errors() {
        let (sig, x, _, _) = mixed();
        let m = mu(1, &sig).unwrap();
        assert!(matches!(m.eval(&[x]), Err(Error::Arity { expected: 2, found: 1 })));
    }
}
