//! JSON documents for algebras, elements, endomorphisms and bracket sources.
//!
//! ```json
//! {"kind": "free-unital", "generators": [{"id": "x", "degree": 0}]}
//! [{"word": ["x", "e"], "coeff": "1/2"}, {"word": [], "coeff": 3}]
//! {"kind": "left-mult", "x": [{"word": ["x"], "coeff": 1}]}
//! ```
//!
//! Coefficients are written as `"p/q"` strings; integers are accepted on
//! input. In the polynomial algebra a word may also be given as an exponent.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{AlgebraKind, Element, EndoRule, Endomorphism, Generator, Signature, Word};
use crate::brackets::BracketSource;
use crate::numbers::{rational_string, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub id: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraDoc {
    /// `free-unital`, `free-nonunital`, `free-truncated` or `polynomial`.
    pub kind: String,
    #[serde(default)]
    pub generators: Vec<GeneratorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub var_degree: Option<i64>,
}

impl AlgebraDoc {
    pub fn to_signature(&self) -> Result<Arc<Signature>> {
        let gens = self
            .generators
            .iter()
            .map(|g| Generator::new(g.id.clone(), g.degree))
            .collect();
        match self.kind.as_str() {
            "free-unital" => Signature::free_unital(gens),
            "free-nonunital" => Signature::free_nonunital(gens),
            "free-truncated" => {
                let max_len = self.max_len.ok_or_else(|| {
                    Error::InvalidSignature("free-truncated requires maxLen".into())
                })?;
                Signature::free_truncated(max_len, gens)
            }
            "polynomial" => {
                if self.generators.is_empty() {
                    Signature::polynomial(self.var_degree.unwrap_or(0))
                } else {
                    Signature::new(AlgebraKind::Polynomial, gens)
                }
            }
            other => Err(Error::InvalidSignature(format!("unknown kind {other:?}"))),
        }
    }

    pub fn from_signature(sig: &Signature) -> Self {
        let (kind, max_len, var_degree) = match sig.kind() {
            AlgebraKind::FreeUnital => ("free-unital", None, None),
            AlgebraKind::FreeNonunital => ("free-nonunital", None, None),
            AlgebraKind::FreeTruncated { max_len } => ("free-truncated", Some(max_len), None),
            AlgebraKind::Polynomial => ("polynomial", None, Some(sig.generators()[0].degree)),
        };
        AlgebraDoc {
            kind: kind.into(),
            generators: sig
                .generators()
                .iter()
                .map(|g| GeneratorDoc {
                    id: g.id.clone(),
                    degree: g.degree,
                })
                .collect(),
            max_len,
            var_degree,
        }
    }

    pub fn parse(text: &str) -> Result<Arc<Signature>> {
        let doc: AlgebraDoc = serde_json::from_str(text)?;
        doc.to_signature()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordDoc {
    Letters(Vec<String>),
    Exponent(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub word: WordDoc,
    #[serde(with = "rational_string")]
    pub coeff: Rational,
}

pub type ElementDoc = Vec<TermDoc>;

fn word_from_doc(sig: &Arc<Signature>, doc: &WordDoc) -> Result<Word> {
    match doc {
        WordDoc::Letters(ids) => {
            let letters = ids
                .iter()
                .map(|id| sig.generator_index(id))
                .collect::<Result<Vec<_>>>()?;
            Ok(Word::from_letters(letters))
        }
        WordDoc::Exponent(n) => {
            if sig.kind() != AlgebraKind::Polynomial {
                return Err(Error::InvalidWord(format!(
                    "exponent {n} outside the polynomial algebra"
                )));
            }
            Ok(Word::power(*n))
        }
    }
}

pub fn element_from_doc(sig: &Arc<Signature>, doc: &[TermDoc]) -> Result<Element> {
    let terms = doc
        .iter()
        .map(|t| Ok((word_from_doc(sig, &t.word)?, t.coeff.clone())))
        .collect::<Result<Vec<_>>>()?;
    Element::from_terms(sig, terms)
}

pub fn element_to_doc(e: &Element) -> ElementDoc {
    let sig = e.signature();
    e.terms()
        .map(|(w, c)| TermDoc {
            word: match sig.kind() {
                AlgebraKind::Polynomial => WordDoc::Exponent(w.len()),
                _ => WordDoc::Letters(
                    w.letters()
                        .iter()
                        .map(|&l| sig.generators()[l as usize].id.clone())
                        .collect(),
                ),
            },
            coeff: c.clone(),
        })
        .collect()
}

pub fn parse_element(sig: &Arc<Signature>, text: &str) -> Result<Element> {
    let doc: ElementDoc = serde_json::from_str(text)?;
    element_from_doc(sig, &doc)
}

/// Parses a JSON list of elements (an argument tuple).
pub fn parse_elements(sig: &Arc<Signature>, text: &str) -> Result<Vec<Element>> {
    let doc: Vec<ElementDoc> = serde_json::from_str(text)?;
    doc.iter().map(|d| element_from_doc(sig, d)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableEntryDoc {
    pub word: WordDoc,
    pub image: ElementDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivationImageDoc {
    pub generator: String,
    pub image: ElementDoc,
}

/// An endomorphism rule, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EndoDoc {
    Table {
        #[serde(default)]
        degree: i64,
        entries: Vec<TableEntryDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<usize>,
        #[serde(default)]
        strict: bool,
    },
    Derivation {
        #[serde(default)]
        degree: i64,
        images: Vec<DerivationImageDoc>,
    },
    LeftMult {
        x: ElementDoc,
    },
    RightMult {
        x: ElementDoc,
    },
    Identity,
    Scale {
        #[serde(with = "rational_string")]
        c: Rational,
    },
    Sum {
        terms: Vec<EndoDoc>,
    },
    /// `outer` after `inner`.
    Compose {
        outer: Box<EndoDoc>,
        inner: Box<EndoDoc>,
    },
    Commutator {
        left: Box<EndoDoc>,
        right: Box<EndoDoc>,
    },
    PolynomialDerivative {
        order: u32,
    },
}

impl EndoDoc {
    pub fn to_endomorphism(&self, sig: &Arc<Signature>) -> Result<Endomorphism> {
        match self {
            EndoDoc::Table {
                degree,
                entries,
                bound,
                strict,
            } => {
                let mut map = BTreeMap::new();
                for e in entries {
                    map.insert(word_from_doc(sig, &e.word)?, element_from_doc(sig, &e.image)?);
                }
                Endomorphism::table(sig, *degree, map, *bound, *strict)
            }
            EndoDoc::Derivation { degree, images } => {
                let mut map = BTreeMap::new();
                for i in images {
                    map.insert(sig.generator_index(&i.generator)?, element_from_doc(sig, &i.image)?);
                }
                Endomorphism::derivation(sig, *degree, map)
            }
            EndoDoc::LeftMult { x } => Endomorphism::left_mult(&element_from_doc(sig, x)?),
            EndoDoc::RightMult { x } => Endomorphism::right_mult(&element_from_doc(sig, x)?),
            EndoDoc::Identity => Ok(Endomorphism::identity(sig)),
            EndoDoc::Scale { c } => Ok(Endomorphism::scale(sig, c.clone())),
            EndoDoc::Sum { terms } => {
                let terms = terms
                    .iter()
                    .map(|t| t.to_endomorphism(sig))
                    .collect::<Result<Vec<_>>>()?;
                Endomorphism::sum(sig, terms)
            }
            EndoDoc::Compose { outer, inner } => {
                Endomorphism::compose(&outer.to_endomorphism(sig)?, &inner.to_endomorphism(sig)?)
            }
            EndoDoc::Commutator { left, right } => {
                Endomorphism::commutator(&left.to_endomorphism(sig)?, &right.to_endomorphism(sig)?)
            }
            EndoDoc::PolynomialDerivative { order } => {
                Endomorphism::polynomial_derivative(sig, *order)
            }
        }
    }

    pub fn from_endomorphism(f: &Endomorphism) -> Self {
        let sig = f.signature();
        let word_doc = |w: &Word| -> WordDoc {
            element_to_doc(&Element::word(sig, w.clone(), num_traits::One::one()))
                .pop()
                .map(|t| t.word)
                .unwrap_or(WordDoc::Letters(Vec::new()))
        };
        match f.rule() {
            EndoRule::Table {
                entries,
                bound,
                strict,
            } => EndoDoc::Table {
                degree: f.degree(),
                entries: entries
                    .iter()
                    .map(|(w, img)| TableEntryDoc {
                        word: word_doc(w),
                        image: element_to_doc(img),
                    })
                    .collect(),
                bound: *bound,
                strict: *strict,
            },
            EndoRule::Derivation(images) => EndoDoc::Derivation {
                degree: f.degree(),
                images: images
                    .iter()
                    .map(|(g, img)| DerivationImageDoc {
                        generator: sig.generators()[*g as usize].id.clone(),
                        image: element_to_doc(img),
                    })
                    .collect(),
            },
            EndoRule::LeftMult(x) => EndoDoc::LeftMult {
                x: element_to_doc(x),
            },
            EndoRule::RightMult(x) => EndoDoc::RightMult {
                x: element_to_doc(x),
            },
            EndoRule::Identity => EndoDoc::Identity,
            EndoRule::Scale(c) => EndoDoc::Scale { c: c.clone() },
            EndoRule::Sum(terms) => EndoDoc::Sum {
                terms: terms.iter().map(Self::from_endomorphism).collect(),
            },
            EndoRule::Compose(a, b) => EndoDoc::Compose {
                outer: Box::new(Self::from_endomorphism(a)),
                inner: Box::new(Self::from_endomorphism(b)),
            },
            EndoRule::Commutator(a, b) => EndoDoc::Commutator {
                left: Box::new(Self::from_endomorphism(a)),
                right: Box::new(Self::from_endomorphism(b)),
            },
            EndoRule::PolynomialDerivative(k) => EndoDoc::PolynomialDerivative { order: *k },
        }
    }
}

/// `{"element": [...]}` or `{"endomorphism": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceDoc {
    Element(ElementDoc),
    Endomorphism(EndoDoc),
}

impl SourceDoc {
    pub fn to_source(&self, sig: &Arc<Signature>) -> Result<BracketSource> {
        match self {
            SourceDoc::Element(e) => BracketSource::element(element_from_doc(sig, e)?),
            SourceDoc::Endomorphism(f) => Ok(BracketSource::Endo(f.to_endomorphism(sig)?)),
        }
    }

    pub fn from_source(s: &BracketSource) -> Self {
        match s {
            BracketSource::Element(x) => SourceDoc::Element(element_to_doc(x)),
            BracketSource::Endo(f) => SourceDoc::Endomorphism(EndoDoc::from_endomorphism(f)),
        }
    }

    pub fn parse(sig: &Arc<Signature>, text: &str) -> Result<BracketSource> {
        let doc: SourceDoc = serde_json::from_str(text)?;
        doc.to_source(sig)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{int, ratio};

    #[test]
    fn algebra_round_trip() {
        let text = r#"{"kind":"free-truncated","maxLen":3,"generators":[{"id":"v1","degree":0},{"id":"v2","degree":1}]}"#;
        let sig = AlgebraDoc::parse(text).unwrap();
        assert_eq!(sig.kind(), AlgebraKind::FreeTruncated { max_len: 3 });
        let back = serde_json::to_string(&AlgebraDoc::from_signature(&sig)).unwrap();
        assert_eq!(AlgebraDoc::parse(&back).unwrap(), sig);
        assert!(AlgebraDoc::parse(r#"{"kind":"free-truncated","generators":[]}"#).is_err());
        assert!(AlgebraDoc::parse(r#"{"kind":"weird"}"#).is_err());
    }

    #[test]
    fn element_parsing() {
        let sig = Signature::default_mixed();
        let e = parse_element(&sig, r#"[{"word":["x","e"],"coeff":"1/2"},{"word":[],"coeff":3}]"#).unwrap();
        assert_eq!(e.num_terms(), 2);
        assert_eq!(e.coefficient(&Word::unit()), int(3));
        let json = serde_json::to_string(&element_to_doc(&e)).unwrap();
        assert_eq!(json, r#"[{"word":[],"coeff":"3"},{"word":["x","e"],"coeff":"1/2"}]"#);
        assert!(parse_element(&sig, r#"[{"word":["q"],"coeff":1}]"#).is_err());
        assert!(parse_element(&sig, r#"[{"word":2,"coeff":1}]"#).is_err());
    }

    #[test]
    fn polynomial_exponents() {
        let sig = Signature::polynomial(0).unwrap();
        let e = parse_element(&sig, r#"[{"word":3,"coeff":"-2"},{"word":["t"],"coeff":1}]"#).unwrap();
        assert_eq!(e.coefficient(&Word::power(3)), int(-2));
        let json = serde_json::to_string(&element_to_doc(&e)).unwrap();
        assert_eq!(json, r#"[{"word":1,"coeff":"1"},{"word":3,"coeff":"-2"}]"#);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let sig = Signature::default_mixed();
        let err = parse_element(&sig, "[{\"word\": [\"x\"],\n \"coeff\": }]").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn endomorphism_docs() {
        let sig = Signature::default_mixed();
        let text = r#"{"kind":"sum","terms":[
            {"kind":"left-mult","x":[{"word":["e"],"coeff":1}]},
            {"kind":"compose","outer":{"kind":"scale","c":"-1/2"},
             "inner":{"kind":"right-mult","x":[{"word":["e"],"coeff":1}]}}]}"#;
        let doc: EndoDoc = serde_json::from_str(text).unwrap();
        let f = doc.to_endomorphism(&sig).unwrap();
        assert_eq!(f.degree(), 1);
        let x = Element::generator(&sig, "x").unwrap();
        let e = Element::generator(&sig, "e").unwrap();
        let expected = &(&e * &x) - &(&x * &e).scaled(&ratio(1, 2));
        assert_eq!(f.apply(&x).unwrap(), expected);
        let again = EndoDoc::from_endomorphism(&f).to_endomorphism(&sig).unwrap();
        assert_eq!(again.apply(&x).unwrap(), expected);

        let d: EndoDoc = serde_json::from_str(
            r#"{"kind":"derivation","degree":1,"images":[{"generator":"x","image":[{"word":["e"],"coeff":1}]}]}"#,
        )
        .unwrap();
        let d = d.to_endomorphism(&sig).unwrap();
        assert_eq!(d.apply(&(&x * &x)).unwrap(), &(&e * &x) + &(&x * &e));
    }

    #[test]
    fn source_docs() {
        let sig = Signature::polynomial(0).unwrap();
        let s = SourceDoc::parse(&sig, r#"{"endomorphism":{"kind":"polynomial-derivative","order":2}}"#).unwrap();
        assert!(matches!(s, BracketSource::Endo(_)));
        let s = SourceDoc::parse(&sig, r#"{"element":[{"word":2,"coeff":1}]}"#).unwrap();
        assert!(matches!(s, BracketSource::Element(_)));
    }
}
