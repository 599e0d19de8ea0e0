use serde_json::{json, Value};

use super::{BracketSource, Formula, Koszul};
use crate::algebra::json::{element_to_doc, SourceDoc};
use crate::algebra::Element;
use crate::{Error, Result};

/// One evaluated bracket `Psi^n(a_1, .., a_n)`.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub source: BracketSource,
    pub formula: Formula,
    pub inputs: Vec<Element>,
    pub value: Element,
}

impl Evaluation {
    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    /// `{source, formula, n, inputs, value}` in the document format of
    /// [`crate::algebra::json`].
    pub fn to_json(&self) -> Value {
        json!({
            "source": SourceDoc::from_source(&self.source),
            "formula": self.formula.name(),
            "n": self.arity(),
            "inputs": self.inputs.iter().map(element_to_doc).collect::<Vec<_>>(),
            "value": element_to_doc(&self.value),
        })
    }

    pub fn to_latex(&self) -> String {
        self.value.to_latex()
    }
}

impl Koszul {
    /// Evaluates `Psi^n` of `source` on `inputs`, `n = inputs.len()`.
    pub fn evaluate(
        &self,
        source: &BracketSource,
        formula: Formula,
        inputs: &[Element],
    ) -> Result<Evaluation> {
        let sig = source.signature();
        if inputs.iter().any(|a| a.signature() != sig) {
            return Err(Error::SignatureMismatch);
        }
        let value = self.psi(source, inputs.len(), formula)?.eval(inputs)?;
        Ok(Evaluation {
            source: source.clone(),
            formula,
            inputs: inputs.to_vec(),
            value,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Endomorphism, Signature, Word};
    use crate::numbers::int;

    #[test]
    fn second_derivative_example() {
        let sig = Signature::polynomial(0).unwrap();
        let d2 = Endomorphism::polynomial_derivative(&sig, 2).unwrap();
        let t = |n| Element::word(&sig, Word::power(n), int(1));
        let ev = Koszul::default()
            .evaluate(&BracketSource::Endo(d2), Formula::Bering, &[t(2), t(3)])
            .unwrap();
        assert_eq!(ev.value, Element::word(&sig, Word::power(3), int(12)));
        let doc = ev.to_json();
        assert_eq!(doc["n"], 2);
        assert_eq!(doc["formula"], "bering");
        assert_eq!(doc["value"], serde_json::json!([{"word": 3, "coeff": "12"}]));
        assert_eq!(ev.to_latex(), "12\\,t^{3}");
    }

    #[test]
    fn foreign_inputs_are_rejected() {
        let sig = Signature::default_mixed();
        let other = Signature::polynomial(0).unwrap();
        let x = BracketSource::element(Element::generator(&sig, "x").unwrap()).unwrap();
        let t = Element::generator(&other, "t").unwrap();
        let err = Koszul::default().evaluate(&x, Formula::Recursive, &[t]).unwrap_err();
        assert!(matches!(err, Error::SignatureMismatch));
    }
}
