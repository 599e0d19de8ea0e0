//! Fixed sources used by the default suite.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Element, Endomorphism, Signature, Word};
use crate::brackets::BracketSource;
use crate::numbers::int;
use crate::{Error, Result};

/// Builds an element from `(coefficient, "g1 g2 ..")` pairs; the empty string
/// is the unit word.
pub fn element(sig: &Arc<Signature>, terms: &[(i64, &str)]) -> Result<Element> {
    let mut out = Element::zero(sig);
    for (c, w) in terms {
        out.add_term(word(sig, w)?, int(*c));
    }
    Ok(out)
}

pub fn word(sig: &Arc<Signature>, w: &str) -> Result<Word> {
    let letters = w
        .split_whitespace()
        .map(|id| sig.generator_index(id))
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::from_letters(letters))
}

/// Table map from `("word", image terms)` rows.
pub fn table(
    sig: &Arc<Signature>,
    degree: i64,
    rows: &[(&str, &[(i64, &str)])],
) -> Result<Endomorphism> {
    let mut entries = BTreeMap::new();
    for (w, img) in rows {
        entries.insert(word(sig, w)?, element(sig, img)?);
    }
    Endomorphism::table(sig, degree, entries, None, false)
}

/// Derivation from `("generator", image terms)` rows.
pub fn derivation(
    sig: &Arc<Signature>,
    degree: i64,
    rows: &[(&str, &[(i64, &str)])],
) -> Result<Endomorphism> {
    let mut images = BTreeMap::new();
    for (g, img) in rows {
        images.insert(sig.generator_index(g)?, element(sig, img)?);
    }
    Endomorphism::derivation(sig, degree, images)
}

fn require(sig: &Arc<Signature>, ids: &[&str]) -> Result<()> {
    for id in ids {
        sig.generator_index(id)?;
    }
    if !sig.is_unital() {
        return Err(Error::NonUnital);
    }
    Ok(())
}

/// Named endomorphisms of the mixed algebra `(x:0, e:1, u:-1)`.
pub struct MixedFixtures {
    pub left_x: Endomorphism,
    pub left_e: Endomorphism,
    pub right_x: Endomorphism,
    pub right_u: Endomorphism,
    pub derivation_even: Endomorphism,
    pub derivation_odd: Endomorphism,
    pub table_even: Endomorphism,
    pub table_odd: Endomorphism,
}

impl MixedFixtures {
    pub fn new(sig: &Arc<Signature>) -> Result<Self> {
        require(sig, &["x", "e", "u"])?;
        let x = element(sig, &[(1, "x"), (2, "e u")])?;
        Ok(MixedFixtures {
            left_x: Endomorphism::left_mult(&x)?,
            left_e: Endomorphism::left_mult(&element(sig, &[(1, "e")])?)?,
            right_x: Endomorphism::right_mult(&x)?,
            right_u: Endomorphism::right_mult(&element(sig, &[(1, "u"), (-1, "x u")])?)?,
            derivation_even: derivation(
                sig,
                0,
                &[
                    ("x", &[(1, "e u"), (-1, "x x")]),
                    ("e", &[(1, "x e")]),
                    ("u", &[(2, "u x")]),
                ],
            )?,
            derivation_odd: derivation(
                sig,
                1,
                &[("x", &[(1, "e")]), ("e", &[(1, "e e")]), ("u", &[(1, "x"), (-1, "")])],
            )?,
            table_even: table(
                sig,
                0,
                &[
                    ("", &[(2, ""), (1, "x")]),
                    ("x", &[(1, "e u")]),
                    ("e", &[(1, "e x x")]),
                    ("u", &[(-1, "u")]),
                    ("x e", &[(1, "e")]),
                    ("e u", &[(1, "x x x")]),
                    ("u e", &[(3, "")]),
                    ("x x", &[(1, "x"), (-2, "u e")]),
                ],
            )?,
            table_odd: table(
                sig,
                1,
                &[
                    ("", &[(1, "e")]),
                    ("x", &[(1, "x e")]),
                    ("u", &[(1, "x"), (-1, "")]),
                    ("e", &[(1, "e e")]),
                    ("x x", &[(1, "e x")]),
                    ("e u", &[(2, "e")]),
                ],
            )?,
        })
    }

    /// Endomorphism sources exercising every rule kind and both parities.
    pub fn endo_sources(&self) -> Vec<(&'static str, Endomorphism)> {
        vec![
            ("L_x", self.left_x.clone()),
            ("L_e", self.left_e.clone()),
            ("R_x", self.right_x.clone()),
            ("R_u", self.right_u.clone()),
            ("derivation", self.derivation_even.clone()),
            ("odd derivation", self.derivation_odd.clone()),
            ("table", self.table_even.clone()),
            ("odd table", self.table_odd.clone()),
        ]
    }

    /// Element sources of degrees 0, 1 and -1.
    pub fn element_sources(sig: &Arc<Signature>) -> Result<Vec<(&'static str, BracketSource)>> {
        require(sig, &["x", "e", "u"])?;
        Ok(vec![
            ("x", BracketSource::element(element(sig, &[(1, "x"), (-1, "u e")])?)?),
            ("e", BracketSource::element(element(sig, &[(1, "e"), (2, "x e")])?)?),
            ("u", BracketSource::element(element(sig, &[(1, "u")])?)?),
        ])
    }
}

/// Free unital algebra on `(e:1, u:0)` with a degree one table map `f`
/// defined on words in `u`, whose images all contain exactly one `e`. Any
/// composite `f(f(w))` then contains `e` twice and `f` vanishes on such
/// words, so `f∘f = 0`; callers still verify it.
pub fn square_zero() -> Result<(Arc<Signature>, Endomorphism)> {
    use crate::algebra::Generator;
    let sig = Signature::free_unital(vec![Generator::new("e", 1), Generator::new("u", 0)])?;
    let f = table(
        &sig,
        1,
        &[
            ("", &[(1, "e")]),
            ("u", &[(1, "e u"), (-1, "u e")]),
            ("u u", &[(1, "u e u"), (2, "e")]),
            ("u u u", &[(1, "e u u")]),
        ],
    )?;
    Ok((sig, f))
}
