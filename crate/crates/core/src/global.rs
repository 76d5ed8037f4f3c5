//! Decisions over Q through Hasse-Minkowski: a diagonal form is summarized
//! by its dimension, determinant class, Hasse invariants at the places where
//! they can be nontrivial, and real signature. Witt indices are computed on
//! these invariants alone.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_square_rational, square_class_over, Rational};
use crate::error::{Error, Result};
use crate::local::{
    hasse_of_ints, isotropic_unchecked, peel_hyperbolic, places_from_primes, relevant_places, LocalProfile,
    Place,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalInvariants {
    pub dim: usize,
    pub det_class: BigInt,
    /// Hasse invariants at the real place, 2 and every prime where the form
    /// may be non-unimodular; `+1` at all other places.
    pub hasse: BTreeMap<Place, i8>,
    pub signature: (usize, usize),
}

impl GlobalInvariants {
    pub fn hasse_at(&self, v: &Place) -> i8 {
        self.hasse.get(v).copied().unwrap_or(1)
    }

    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.hasse.keys()
    }

    pub fn profile(&self, v: &Place) -> LocalProfile {
        LocalProfile {
            place: v.clone(),
            dim: self.dim,
            det_class: self.det_class.clone(),
            hasse: self.hasse_at(v),
            signature: matches!(v, Place::Real).then_some(self.signature),
        }
    }

    pub fn is_isotropic(&self) -> bool {
        match self.dim {
            0 | 1 => false,
            2 => self.det_class == BigInt::from(-1),
            _ => self.hasse.keys().all(|v| isotropic_unchecked(&self.profile(v))),
        }
    }

    /// Invariants of `q'` with `q = H + q'`. Only meaningful when isotropic.
    pub fn peel(&self) -> GlobalInvariants {
        let mut hasse = BTreeMap::new();
        for v in self.hasse.keys() {
            let pr = peel_hyperbolic(&self.profile(v));
            hasse.insert(v.clone(), pr.hasse);
        }
        GlobalInvariants {
            dim: self.dim - 2,
            det_class: -&self.det_class,
            hasse,
            signature: (self.signature.0 - 1, self.signature.1 - 1),
        }
    }

    pub fn witt_index(&self) -> usize {
        let mut inv = self.clone();
        let mut k = 0;
        while inv.is_isotropic() {
            inv = inv.peel();
            k += 1;
        }
        k
    }

    /// Product of the stored Hasse invariants; `+1` by Hilbert reciprocity.
    pub fn reciprocity_product(&self) -> i8 {
        self.hasse.values().product()
    }
}

fn nondegenerate(entries: &[Rational]) -> Result<()> {
    if entries.iter().any(Zero::is_zero) {
        Err(Error::DegenerateForm)
    } else {
        Ok(())
    }
}

fn int_classes(entries: &[Rational]) -> Vec<BigInt> {
    entries.iter().map(|q| q.numer() * q.denom()).collect()
}

/// Invariants computed at the real place, 2 and the given primes. Every
/// prime at which the form is not unimodular must be listed.
pub fn invariants_at(entries: &[Rational], primes: &[BigInt]) -> Result<GlobalInvariants> {
    nondegenerate(entries)?;
    let mut ps = primes.to_vec();
    ps.push(BigInt::from(2));
    let places = places_from_primes(ps);
    Ok(assemble(entries, &places))
}

fn assemble(entries: &[Rational], places: &[Place]) -> GlobalInvariants {
    let ints = int_classes(entries);
    let primes: Vec<BigInt> = places
        .iter()
        .filter_map(|v| match v {
            Place::Prime(p) => Some(p.clone()),
            Place::Real => None,
        })
        .collect();
    let det: Rational = entries.iter().product();
    let det_class = if entries.is_empty() { BigInt::one() } else { square_class_over(&det, &primes) };
    let hasse = places.iter().map(|v| (v.clone(), hasse_of_ints(&ints, v))).collect();
    let pos = entries.iter().filter(|e| e.is_positive()).count();
    GlobalInvariants { dim: entries.len(), det_class, hasse, signature: (pos, entries.len() - pos) }
}

pub fn invariants_of(entries: &[Rational]) -> Result<GlobalInvariants> {
    nondegenerate(entries)?;
    let places = relevant_places(entries)?;
    Ok(assemble(entries, &places))
}

pub fn is_isotropic_q(entries: &[Rational]) -> Result<bool> {
    nondegenerate(entries)?;
    match entries.len() {
        0 | 1 => Ok(false),
        2 => Ok(is_square_rational(&-(&entries[0] * &entries[1]))),
        _ => Ok(invariants_of(entries)?.is_isotropic()),
    }
}

pub fn witt_index_q(entries: &[Rational]) -> Result<usize> {
    Ok(invariants_of(entries)?.witt_index())
}

/// Removes pairs `<a, b>` with `-ab` a square, which are hyperbolic planes.
fn cancel_pairs(entries: &[Rational]) -> Vec<Rational> {
    let mut rest: Vec<Rational> = entries.to_vec();
    let mut i = 0;
    while i < rest.len() {
        let hit = (i + 1..rest.len()).find(|&j| is_square_rational(&-(&rest[i] * &rest[j])));
        match hit {
            Some(j) => {
                rest.remove(j);
                rest.remove(i);
            }
            None => i += 1,
        }
    }
    rest
}

/// Hyperbolicity with the prime set supplied by the caller (`None`: factor
/// the entries).
pub(crate) fn hyperbolic_with(entries: &[Rational], primes: Option<&[BigInt]>) -> Result<bool> {
    nondegenerate(entries)?;
    let m = entries.len();
    if m % 2 == 1 {
        return Ok(false);
    }
    let pos = entries.iter().filter(|e| e.is_positive()).count();
    if 2 * pos != m {
        return Ok(false);
    }
    let mut disc: Rational = entries.iter().product();
    if (m / 2) % 2 == 1 {
        disc = -disc;
    }
    if !is_square_rational(&disc) {
        return Ok(false);
    }
    let rest = cancel_pairs(entries);
    if rest.is_empty() {
        return Ok(true);
    }
    let inv = match primes {
        Some(ps) => invariants_at(&rest, ps)?,
        None => invariants_of(&rest)?,
    };
    Ok(2 * inv.witt_index() == rest.len())
}

pub fn is_hyperbolic_q(entries: &[Rational]) -> Result<bool> {
    hyperbolic_with(entries, None)
}

fn orth_neg(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut v = a.to_vec();
    v.extend(b.iter().map(|x| -x));
    v
}

pub fn is_witt_equivalent_q(a: &[Rational], b: &[Rational]) -> Result<bool> {
    nondegenerate(a)?;
    nondegenerate(b)?;
    is_hyperbolic_q(&orth_neg(a, b))
}

pub fn is_isometric_q(a: &[Rational], b: &[Rational]) -> Result<bool> {
    nondegenerate(a)?;
    nondegenerate(b)?;
    if a.len() != b.len() {
        return Ok(false);
    }
    is_witt_equivalent_q(a, b)
}

/// `<entries> + H`, handy for tests of the peeling step.
pub fn with_hyperbolic_plane(entries: &[Rational]) -> Vec<Rational> {
    let mut v = entries.to_vec();
    v.extend(vec![Rational::one(), -Rational::one()]);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::local::{hasse_invariant, local_profile};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn invariant_examples() {
        let h = invariants_of(&q(&[1, -1])).unwrap();
        assert_eq!((h.dim, h.det_class.clone(), h.signature), (2, BigInt::from(-1), (1, 1)));
        assert!(h.hasse.values().all(|&x| x == 1));
        let s = invariants_of(&q(&[1, 1])).unwrap();
        assert_eq!((s.det_class.clone(), s.signature), (BigInt::one(), (2, 0)));
        let t = invariants_of(&q(&[2, 3, 6])).unwrap();
        assert_eq!(t.det_class, BigInt::one());
        for (v, &e) in &t.hasse {
            assert_eq!(e, hasse_invariant(&q(&[2, 3, 6]), v).unwrap());
        }
        assert_eq!(t.reciprocity_product(), 1);
        assert_eq!(invariants_of(&q(&[1, 0])), Err(Error::DegenerateForm));
    }

    #[test]
    fn isotropy_examples() {
        assert!(is_isotropic_q(&q(&[1, 1, -2])).unwrap());
        assert!(!is_isotropic_q(&q(&[1, 1, -7])).unwrap());
        assert!(!is_isotropic_q(&q(&[1, 1, 1, 1])).unwrap());
        assert!(is_isotropic_q(&q(&[1, 1, 1, -1, 5])).unwrap());
    }

    #[test]
    fn witt_index_examples() {
        assert_eq!(witt_index_q(&q(&[1, -1, 2, -2])).unwrap(), 2);
        assert_eq!(witt_index_q(&q(&[1, 1, 1, 1])).unwrap(), 0);
        assert!(is_hyperbolic_q(&q(&[1, -1])).unwrap());
        assert!(is_isometric_q(&q(&[1, 1, -1, -1]), &q(&[2, -2, 3, -3])).unwrap());
        assert!(!is_isometric_q(&q(&[1, 1]), &q(&[1, -1])).unwrap());
        // <1, 1> and <2, 2> are isometric over Q (2 = 1 + 1)
        assert!(is_isometric_q(&q(&[1, 1]), &q(&[2, 2])).unwrap());
        assert!(!is_isometric_q(&q(&[1, 1]), &q(&[3, 3])).unwrap());
    }

    #[test]
    fn peeled_invariants_match_direct_computation() {
        // q = H + q' with q' = <3, -5, 7>; build q diagonally and compare
        // the peeled invariants with those of q' computed from scratch.
        let qp = q(&[3, -5, 7]);
        let full = with_hyperbolic_plane(&qp);
        let primes: Vec<BigInt> = [2, 3, 5, 7].iter().map(|&p| BigInt::from(p)).collect();
        let peeled = invariants_at(&full, &primes).unwrap().peel();
        let direct = invariants_at(&qp, &primes).unwrap();
        assert_eq!(peeled, direct);
        for v in direct.places() {
            assert_eq!(peel_hyperbolic(&local_profile(&full, v).unwrap()), local_profile(&qp, v).unwrap());
        }
    }
}
