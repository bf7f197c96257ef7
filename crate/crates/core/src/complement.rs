//! Orthogonal and nilorthogonal complements of idempotents, and orthogonal
//! decompositions.

use serde::Serialize;

use crate::classes::ClassReport;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplementKind {
    Orthogonal,
    Nilorthogonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComplementWitness {
    pub e: usize,
    pub f: usize,
    pub kind: ComplementKind,
    /// nilpotent correction with `e + f = 1 + x`; zero for orthogonal complements
    pub x: usize,
}

impl ComplementWitness {
    /// Re-checks the defining equations from scratch.
    pub fn is_valid(&self, s: &FiniteSemiring) -> bool {
        let (e, f, x) = (self.e, self.f, self.x);
        match self.kind {
            ComplementKind::Orthogonal => {
                x == s.zero()
                    && s.is_idempotent(e)
                    && s.is_idempotent(f)
                    && s.add(e, f) == s.one()
                    && s.mul(e, f) == s.zero()
                    && s.mul(f, e) == s.zero()
            }
            ComplementKind::Nilorthogonal => {
                let nil = |a| s.is_nilpotent(a);
                let sq = s.mul(f, f);
                let f_nilidempotent = s.elements().any(|z| nil(z) && s.add(f, z) == sq);
                f_nilidempotent
                    && nil(x)
                    && s.add(e, f) == s.add(s.one(), x)
                    && nil(s.mul(e, f))
                    && nil(s.mul(f, e))
            }
        }
    }
}

fn require_idempotent(s: &FiniteSemiring, e: usize) -> Result<()> {
    if e >= s.order() {
        return Err(Error::domain(e, "out of range"));
    }
    if !s.is_idempotent(e) {
        return Err(Error::domain(e, "is not idempotent"));
    }
    Ok(())
}

/// Smallest-index idempotent `f` with `e + f = 1` and `ef = fe = 0`.
pub fn orthogonal_complement(s: &FiniteSemiring, e: usize) -> Result<Option<ComplementWitness>> {
    require_idempotent(s, e)?;
    Ok(orthogonal_complement_unchecked(s, e))
}

pub(crate) fn orthogonal_complement_unchecked(s: &FiniteSemiring, e: usize) -> Option<ComplementWitness> {
    s.elements()
        .find(|&f| {
            s.is_idempotent(f)
                && s.add(e, f) == s.one()
                && s.mul(e, f) == s.zero()
                && s.mul(f, e) == s.zero()
        })
        .map(|f| ComplementWitness {
            e,
            f,
            kind: ComplementKind::Orthogonal,
            x: s.zero(),
        })
}

/// First `(f, x)` in lexicographic index order with `f` nilidempotent,
/// `x` nilpotent, `e + f = 1 + x` and `ef, fe` nilpotent.
pub fn nilorthogonal_complement(s: &FiniteSemiring, e: usize) -> Result<Option<ComplementWitness>> {
    require_idempotent(s, e)?;
    Ok(nilorthogonal_iter(s, &s.classify(), e).next())
}

/// Every nilorthogonal complement of `e`, in the same order.
pub fn all_nilorthogonal_complements(s: &FiniteSemiring, e: usize) -> Result<Vec<ComplementWitness>> {
    require_idempotent(s, e)?;
    Ok(nilorthogonal_iter(s, &s.classify(), e).collect())
}

pub(crate) fn nilorthogonal_iter<'a>(
    s: &'a FiniteSemiring,
    classes: &'a ClassReport,
    e: usize,
) -> impl Iterator<Item = ComplementWitness> + 'a {
    let nil = &classes.nilpotents;
    classes
        .nilidempotents
        .iter()
        .filter(move |&f| nil.contains(s.mul(e, f)) && nil.contains(s.mul(f, e)))
        .flat_map(move |f| {
            let sum = s.add(e, f);
            nil.iter()
                .filter(move |&x| s.add(s.one(), x) == sum)
                .map(move |x| ComplementWitness {
                    e,
                    f,
                    kind: ComplementKind::Nilorthogonal,
                    x,
                })
        })
}

/// All sets of at most `max_len` nonzero, pairwise orthogonal idempotents
/// summing to `b`, as sorted index lists in lexicographic order.
pub fn orthogonal_decompositions(s: &FiniteSemiring, b: usize, max_len: usize) -> Vec<Vec<usize>> {
    let candidates: Vec<usize> = s
        .elements()
        .filter(|&a| a != s.zero() && s.is_idempotent(a))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_decomposition(s, b, max_len, &candidates, 0, s.zero(), &mut chosen, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_decomposition(
    s: &FiniteSemiring,
    target: usize,
    max_len: usize,
    candidates: &[usize],
    start: usize,
    sum: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if !chosen.is_empty() && sum == target {
        out.push(chosen.clone());
    }
    if chosen.len() == max_len {
        return;
    }
    for (i, &a) in candidates.iter().enumerate().skip(start) {
        let orthogonal = chosen
            .iter()
            .all(|&c| s.mul(a, c) == s.zero() && s.mul(c, a) == s.zero());
        if orthogonal {
            chosen.push(a);
            extend_decomposition(s, target, max_len, candidates, i + 1, s.add(sum, a), chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{preset, triangular_semiring, boolean_semiring};

    #[test]
    fn t2b_idempotent_without_orthogonal_complement() {
        let s = triangular_semiring(&boolean_semiring(), 2).unwrap();
        let e = s.index_of("[1,1;0,0]").unwrap();
        assert_eq!(orthogonal_complement(&s, e).unwrap(), None);

        let first = nilorthogonal_complement(&s, e).unwrap().unwrap();
        assert!(first.is_valid(&s));
        let all = all_nilorthogonal_complements(&s, e).unwrap();
        let f = s.index_of("[0,1;0,1]").unwrap();
        let x = s.index_of("[0,1;0,0]").unwrap();
        assert!(all.iter().any(|w| w.f == f && w.x == x));
        assert!(all.iter().all(|w| w.is_valid(&s)));
        assert_eq!(all[0], first);
    }

    #[test]
    fn complement_of_one_is_zero() {
        for name in ["bool", "t2b", "m2z2", "z3x-sqm1"] {
            let s = preset(name).unwrap();
            let w = orthogonal_complement(&s, s.one()).unwrap().unwrap();
            assert_eq!(w.f, s.zero());
            let w = nilorthogonal_complement(&s, s.one()).unwrap().unwrap();
            assert_eq!((w.f, w.x), (s.zero(), s.zero()));
        }
    }

    #[test]
    fn t2b_diagonal_units() {
        let s = triangular_semiring(&boolean_semiring(), 2).unwrap();
        let e11 = s.index_of("[1,0;0,0]").unwrap();
        let e22 = s.index_of("[0,0;0,1]").unwrap();
        assert_eq!(orthogonal_complement(&s, e11).unwrap().unwrap().f, e22);
    }

    #[test]
    fn z2x_sq_nilorthogonal_of_zero() {
        let s = preset("z2x-sq").unwrap();
        let w = nilorthogonal_complement(&s, s.zero()).unwrap().unwrap();
        assert_eq!((w.f, w.x), (s.one(), s.zero()));
    }

    #[test]
    fn non_idempotent_is_a_domain_error() {
        let s = preset("z2x-sq").unwrap();
        let x = s.index_of("x").unwrap();
        assert!(matches!(orthogonal_complement(&s, x), Err(Error::Domain { .. })));
        assert!(matches!(nilorthogonal_complement(&s, x), Err(Error::Domain { .. })));
    }

    #[test]
    fn decompositions() {
        let s = preset("z3x-sqm1").unwrap();
        let decs = orthogonal_decompositions(&s, s.one(), 2);
        let (a, b) = (s.index_of("2+x").unwrap(), s.index_of("2+2x").unwrap());
        assert!(decs.contains(&vec![s.one()]));
        assert!(decs.contains(&vec![a, b]));
        assert_eq!(decs.len(), 2);
        assert!(orthogonal_decompositions(&s, s.zero(), 3).is_empty());

        let t = preset("t2b").unwrap();
        let e11 = t.index_of("[1,0;0,0]").unwrap();
        let e22 = t.index_of("[0,0;0,1]").unwrap();
        assert!(orthogonal_decompositions(&t, t.one(), 2).contains(&vec![e11, e22]));
    }
}
