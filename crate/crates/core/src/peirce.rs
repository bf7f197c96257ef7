//! Peirce decomposition of a commutative finite semiring whose idempotents
//! all have orthogonal complements: `S ≅ e_1 S × ... × e_k S` along the
//! primitive idempotents.

use serde::Serialize;

use crate::complement::orthogonal_complement_unchecked;
use crate::construct::{boolean_semiring, zmod};
use crate::error::{Error, Result};
use crate::iso::isomorphic;
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorClass {
    IsoToBoolean,
    IsoToZ2,
    OtherNoNontrivialIdempotents,
    Other,
}

impl FactorClass {
    pub fn name(self) -> &'static str {
        match self {
            FactorClass::IsoToBoolean => "iso-to-B",
            FactorClass::IsoToZ2 => "iso-to-Z2",
            FactorClass::OtherNoNontrivialIdempotents => "other-no-nontrivial-idempotents",
            FactorClass::Other => "other",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PeirceFactor {
    pub idempotent: usize,
    /// elements of `e S`, in the index order of the factor table
    pub carrier: Vec<usize>,
    pub semiring: FiniteSemiring,
    pub classification: FactorClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct PeirceResult {
    pub primitives: Vec<usize>,
    pub factors: Vec<PeirceFactor>,
    /// element -> its component index in each factor
    pub iso: Vec<Vec<usize>>,
}

impl PeirceResult {
    /// Re-checks that `iso` is a bijection onto the product preserving both operations.
    pub fn verify(&self, s: &FiniteSemiring) -> bool {
        let product: usize = self.factors.iter().map(|f| f.semiring.order()).product();
        if product != s.order() || self.iso.len() != s.order() {
            return false;
        }
        let mut images: Vec<&Vec<usize>> = self.iso.iter().collect();
        images.sort();
        images.dedup();
        if images.len() != s.order() {
            return false;
        }
        s.elements().all(|a| {
            s.elements().all(|b| {
                self.factors.iter().enumerate().all(|(i, f)| {
                    let (x, y) = (self.iso[a][i], self.iso[b][i]);
                    self.iso[s.add(a, b)][i] == f.semiring.add(x, y)
                        && self.iso[s.mul(a, b)][i] == f.semiring.mul(x, y)
                })
            })
        })
    }
}

/// Classifies a semiring with at most trivial idempotents.
pub fn classify_factor(f: &FiniteSemiring) -> FactorClass {
    if isomorphic(f, &boolean_semiring()).is_some() {
        FactorClass::IsoToBoolean
    } else if isomorphic(f, &zmod(2).expect("Z2")).is_some() {
        FactorClass::IsoToZ2
    } else if f.classify().nontrivial_idempotents(f).is_empty() {
        FactorClass::OtherNoNontrivialIdempotents
    } else {
        FactorClass::Other
    }
}

pub fn peirce_decompose(s: &FiniteSemiring) -> Result<PeirceResult> {
    if let Some((a, b)) = s.non_commuting_pair() {
        return Err(Error::Precondition(format!(
            "not commutative: {} * {} != {} * {}",
            s.label(a),
            s.label(b),
            s.label(b),
            s.label(a)
        )));
    }
    let idempotents: Vec<usize> = s.elements().filter(|&e| s.is_idempotent(e)).collect();
    if let Some(&e) = idempotents
        .iter()
        .find(|&&e| orthogonal_complement_unchecked(s, e).is_none())
    {
        return Err(Error::domain(
            e,
            format!("idempotent {} has no orthogonal complement", s.label(e)),
        ));
    }

    // minimal nonzero idempotents under e <= f  <=>  ef = e
    let nonzero: Vec<usize> = idempotents
        .iter()
        .copied()
        .filter(|&e| e != s.zero())
        .collect();
    let primitives: Vec<usize> = nonzero
        .iter()
        .copied()
        .filter(|&e| nonzero.iter().all(|&f| f == e || s.mul(f, e) != f))
        .collect();

    for (i, &e) in primitives.iter().enumerate() {
        for &f in &primitives[i + 1..] {
            if s.mul(e, f) != s.zero() {
                return Err(Error::Internal(format!(
                    "primitive idempotents {} and {} are not orthogonal",
                    s.label(e),
                    s.label(f)
                )));
            }
        }
    }
    if s.sum(primitives.iter().copied()) != s.one() {
        return Err(Error::Internal("primitive idempotents do not sum to 1".into()));
    }

    let factors = primitives
        .iter()
        .map(|&e| build_factor(s, e))
        .collect::<Result<Vec<_>>>()?;
    let iso: Vec<Vec<usize>> = s
        .elements()
        .map(|a| {
            factors
                .iter()
                .map(|f| {
                    let image = s.mul(f.idempotent, a);
                    f.carrier.iter().position(|&c| c == image).expect("eS is closed")
                })
                .collect()
        })
        .collect();
    let result = PeirceResult {
        primitives,
        factors,
        iso,
    };
    if !result.verify(s) {
        return Err(Error::Internal(
            "Peirce map is not an isomorphism onto the product".into(),
        ));
    }
    Ok(result)
}

/// `e S` with zero 0 and identity `e`.
fn build_factor(s: &FiniteSemiring, e: usize) -> Result<PeirceFactor> {
    let mut carrier: Vec<usize> = s.elements().map(|a| s.mul(e, a)).collect();
    carrier.sort_unstable();
    carrier.dedup();
    let semiring = FiniteSemiring::from_carrier(
        carrier.clone(),
        s.zero(),
        e,
        |&a, &b| s.add(a, b),
        |&a, &b| s.mul(a, b),
        |&a| s.label(a).to_string(),
    )?;
    // from_carrier moves zero and identity to the front
    let carrier: Vec<usize> = semiring
        .labels()
        .iter()
        .map(|l| s.index_of(l).expect("factor label comes from s"))
        .collect();
    let classification = classify_factor(&semiring);
    Ok(PeirceFactor {
        idempotent: e,
        carrier,
        semiring,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{direct_product, preset};

    #[test]
    fn boolean_square() {
        let b = boolean_semiring();
        let bb = direct_product(&b, &b).unwrap();
        let r = peirce_decompose(&bb).unwrap();
        let names: Vec<&str> = r.primitives.iter().map(|&p| bb.label(p)).collect();
        assert_eq!(names, ["(0,1)", "(1,0)"]);
        assert!(r
            .factors
            .iter()
            .all(|f| f.classification == FactorClass::IsoToBoolean));
    }

    #[test]
    fn crt_ring_splits_into_two_z3() {
        let s = preset("z3x-sqm1").unwrap();
        let r = peirce_decompose(&s).unwrap();
        assert_eq!(r.factors.len(), 2);
        for f in &r.factors {
            assert_eq!(f.semiring.order(), 3);
            assert_eq!(f.classification, FactorClass::OtherNoNontrivialIdempotents);
            assert!(isomorphic(&f.semiring, &zmod(3).unwrap()).is_some());
        }
        assert!(r.verify(&s));
    }

    #[test]
    fn boolean_is_its_own_factor() {
        let b = boolean_semiring();
        let r = peirce_decompose(&b).unwrap();
        assert_eq!(r.primitives, vec![b.one()]);
        assert_eq!(r.factors[0].classification, FactorClass::IsoToBoolean);
    }

    #[test]
    fn refuses_bad_input() {
        assert!(matches!(
            peirce_decompose(&preset("m2z2").unwrap()),
            Err(Error::Precondition(_))
        ));
        // the chain 0 < e < 1 with max and min: e has no orthogonal complement
        let chain = FiniteSemiring::from_carrier(
            vec![0u8, 1, 2],
            0,
            2,
            |a, b| *a.max(b),
            |a, b| *a.min(b),
            |a| ["0", "e", "1"][*a as usize].to_string(),
        )
        .unwrap();
        let e = chain.index_of("e").unwrap();
        assert_eq!(
            peirce_decompose(&chain).unwrap_err(),
            Error::domain(e, "idempotent e has no orthogonal complement")
        );
        assert!(peirce_decompose(&preset("z2x-sq").unwrap()).is_ok());
    }
}
