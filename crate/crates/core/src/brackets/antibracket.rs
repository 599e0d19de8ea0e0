use crate::algebra::{is_odd, Element};
use crate::numbers::ratio;
use crate::{Error, Result};

/// `B_Q(a,b) = -1/2 ({{Q,a},b} + (-1)^{|a||b|} {{Q,b},a})` for an odd `Q`,
/// extended bilinearly over homogeneous components of `a` and `b`.
pub fn quantum_antibracket(q: &Element, a: &Element, b: &Element) -> Result<Element> {
    let dq = q
        .degree()
        .ok_or_else(|| Error::Inhomogeneous(q.to_string()))?;
    if !is_odd(dq) {
        return Err(Error::Unsupported(format!(
            "the antibracket needs an odd element, {q} has degree {dq}"
        )));
    }
    let mut out = Element::zero(q.signature());
    for (da, a) in a.split() {
        for (db, b) in b.split() {
            let mut sum = q.commutator(&a)?.commutator(&b)?;
            let swapped = q.commutator(&b)?.commutator(&a)?;
            if is_odd(da * db) {
                sum -= &swapped;
            } else {
                sum += &swapped;
            }
            out.add_scaled(&sum, &ratio(-1, 2));
        }
    }
    Ok(out)
}
