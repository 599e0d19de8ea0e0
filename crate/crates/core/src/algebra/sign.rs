use crate::{Error, Result};

pub fn is_odd(d: i64) -> bool {
    d.rem_euclid(2) == 1
}

/// Koszul sign of reordering homogeneous elements of the given degrees into
/// the sequence `degrees[perm[0]], degrees[perm[1]], ...`.
///
/// Every pair of elements whose relative order is inverted contributes
/// `(-1)^{|v||w|}`. Returns `1` or `-1`.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> Result<i8> {
    if perm.len() != degrees.len() {
        return Err(Error::Arity {
            expected: degrees.len(),
            found: perm.len(),
        });
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidPermutation(perm.to_vec()));
        }
    }
    Ok(koszul_sign_of_sequence(perm, degrees))
}

/// As [`koszul_sign`] without validating `perm`.
pub fn koszul_sign_of_sequence(perm: &[usize], degrees: &[i64]) -> i8 {
    let mut odd = false;
    for i in 0..perm.len() {
        if !is_odd(degrees[perm[i]]) {
            continue;
        }
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && is_odd(degrees[perm[j]]) {
                odd = !odd;
            }
        }
    }
    if odd {
        -1
    } else {
        1
    }
}

/// A permutation together with its Koszul sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub negative: bool,
}

/// All permutations of `0..degrees.len()` in lexicographic order, each with
/// its Koszul sign.
pub fn permutations(degrees: &[i64]) -> Vec<SignedPermutation> {
    use itertools::Itertools;
    (0..degrees.len())
        .permutations(degrees.len())
        .map(|perm| {
            let negative = koszul_sign_of_sequence(&perm, degrees) < 0;
            SignedPermutation { perm, negative }
        })
        .collect()
}

/// Shuffles of type `(first, degrees.len() - first)`: every way of choosing
/// `first` indices (kept in increasing order) to move to the front, the rest
/// following in increasing order. Lexicographic in the chosen indices.
pub fn shuffles(degrees: &[i64], first: usize) -> Vec<SignedPermutation> {
    use itertools::Itertools;
    let n = degrees.len();
    (0..n)
        .combinations(first)
        .map(|chosen| {
            let mut perm = chosen.clone();
            perm.extend((0..n).filter(|i| !chosen.contains(i)));
            let negative = koszul_sign_of_sequence(&perm, degrees) < 0;
            SignedPermutation { perm, negative }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_signs() {
        assert_eq!(koszul_sign(&[0, 1, 2], &[1, 1, 1]).unwrap(), 1);
        assert_eq!(koszul_sign(&[1, 0], &[1, 3]).unwrap(), -1);
        assert_eq!(koszul_sign(&[1, 0], &[1, 2]).unwrap(), 1);
        assert_eq!(koszul_sign(&[1, 0], &[-1, -1]).unwrap(), -1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(koszul_sign(&[0, 1], &[1]).is_err());
        assert!(koszul_sign(&[0, 0], &[1, 1]).is_err());
        assert!(koszul_sign(&[0, 2], &[1, 1]).is_err());
    }

    #[test]
    fn shuffle_counts() {
        let d = [0, 1, 0, 1, 1];
        assert_eq!(shuffles(&d, 2).len(), 10);
        assert_eq!(shuffles(&d, 0).len(), 1);
        assert_eq!(shuffles(&d, 5).len(), 1);
        for s in shuffles(&d, 3) {
            assert!(s.perm[..3].windows(2).all(|w| w[0] < w[1]));
            assert!(s.perm[3..].windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(permutations(&d).len(), 120);
    }
}
