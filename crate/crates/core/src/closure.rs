//! Multiplicative and additive closures, and generation certificates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::elements::ElementSet;
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Multiplicative,
    Additive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorClass {
    Idempotents,
    Nilidempotents,
}

impl Mode {
    fn apply(self, s: &FiniteSemiring, a: usize, b: usize) -> usize {
        match self {
            Mode::Multiplicative => s.mul(a, b),
            Mode::Additive => s.add(a, b),
        }
    }
}

/// Least superset of `generators` closed under the operation of `mode`.
pub fn closure(s: &FiniteSemiring, generators: &ElementSet, mode: Mode) -> ElementSet {
    let mut reached = generators.clone();
    let mut members: Vec<usize> = reached.to_vec();
    let mut frontier = members.clone();
    while let Some(a) = frontier.pop() {
        let mut i = 0;
        while i < members.len() {
            let b = members[i];
            for c in [mode.apply(s, a, b), mode.apply(s, b, a)] {
                if reached.insert(c) {
                    members.push(c);
                    frontier.push(c);
                }
            }
            i += 1;
        }
    }
    reached
}

pub fn mult_closure(s: &FiniteSemiring, generators: &ElementSet) -> ElementSet {
    closure(s, generators, Mode::Multiplicative)
}

pub fn add_closure(s: &FiniteSemiring, generators: &ElementSet) -> ElementSet {
    closure(s, generators, Mode::Additive)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationCertificate {
    pub mode: Mode,
    pub generator_class: GeneratorClass,
    pub generated: bool,
    /// element -> generators whose product (resp. sum), taken left to right,
    /// equals the element; one shortest expression per reached element
    pub expressions: BTreeMap<usize, Vec<usize>>,
    pub uncovered: ElementSet,
}

impl GenerationCertificate {
    pub fn evaluate(&self, s: &FiniteSemiring, element: usize) -> Option<usize> {
        let expr = self.expressions.get(&element)?;
        Some(match self.mode {
            Mode::Multiplicative => s.product(expr.iter().copied()),
            Mode::Additive => s.sum(expr.iter().copied()),
        })
    }
}

/// Breadth-first closure over the generator class; the first time an
/// element is reached its expression is recorded, so expressions are shortest.
pub fn generation_certificate(
    s: &FiniteSemiring,
    mode: Mode,
    generator_class: GeneratorClass,
) -> GenerationCertificate {
    let classes = s.classify();
    let generators = match generator_class {
        GeneratorClass::Idempotents => classes.idempotents,
        GeneratorClass::Nilidempotents => classes.nilidempotents,
    };
    certificate_for(s, mode, generator_class, &generators)
}

pub(crate) fn certificate_for(
    s: &FiniteSemiring,
    mode: Mode,
    generator_class: GeneratorClass,
    generators: &ElementSet,
) -> GenerationCertificate {
    let mut expressions: BTreeMap<usize, Vec<usize>> =
        generators.iter().map(|g| (g, vec![g])).collect();
    let mut layer: Vec<usize> = generators.to_vec();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &a in &layer {
            for g in generators.iter() {
                let c = mode.apply(s, a, g);
                if !expressions.contains_key(&c) {
                    let mut expr = expressions[&a].clone();
                    expr.push(g);
                    expressions.insert(c, expr);
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    let reached = ElementSet::from_indices(s.order(), expressions.keys().copied());
    let uncovered = ElementSet::full(s.order()).difference(&reached);
    GenerationCertificate {
        mode,
        generator_class,
        generated: uncovered.is_empty(),
        expressions,
        uncovered,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean_semiring, matrix_semiring, poly_quotient, triangular_semiring, zmod};

    /// Naive fixed point: add every pairwise result until nothing changes.
    fn naive_closure(s: &FiniteSemiring, g: &ElementSet, mode: Mode) -> ElementSet {
        let mut set = g.clone();
        loop {
            let members = set.to_vec();
            let before = set.len();
            for &a in &members {
                for &b in &members {
                    set.insert(mode.apply(s, a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn t2b_is_multiplicatively_but_not_additively_generated() {
        let s = triangular_semiring(&boolean_semiring(), 2).unwrap();
        let idem = s.classify().idempotents;
        assert!(mult_closure(&s, &idem).is_full());
        assert_eq!(add_closure(&s, &idem), idem);

        let cert = generation_certificate(&s, Mode::Multiplicative, GeneratorClass::Idempotents);
        let e12 = s.index_of("[0,1;0,0]").unwrap();
        assert!(cert.generated);
        assert_eq!(cert.expressions[&e12].len(), 2);
        assert_eq!(cert.evaluate(&s, e12), Some(e12));

        let cert = generation_certificate(&s, Mode::Additive, GeneratorClass::Idempotents);
        assert!(!cert.generated);
        assert_eq!(cert.uncovered.to_vec(), vec![e12]);
    }

    #[test]
    fn z3_quotient_idempotent_products_stay_small() {
        let s = poly_quotient(&zmod(3).unwrap(), &[2, 0, 1]).unwrap();
        let idem = s.classify().idempotents;
        let closed = mult_closure(&s, &idem);
        assert_eq!(closed, naive_closure(&s, &idem, Mode::Multiplicative));
        // idempotents of a commutative semiring are closed under products
        assert_eq!(closed, idem);
        assert_eq!(closed.len(), 4);
        assert!(add_closure(&s, &idem).is_full());
    }

    #[test]
    fn m2z2_is_additively_generated() {
        let s = matrix_semiring(&zmod(2).unwrap(), 2).unwrap();
        let idem = s.classify().idempotents;
        assert_eq!(s.order(), 16);
        assert!(add_closure(&s, &idem).is_full());
    }

    #[test]
    fn trivial_generator_sets() {
        let s = boolean_semiring();
        let zero = ElementSet::from_indices(2, [0]);
        assert_eq!(add_closure(&s, &zero), zero);
        assert!(mult_closure(&s, &ElementSet::full(2)).is_full());
        for mode in [Mode::Additive, Mode::Multiplicative] {
            assert!(generation_certificate(&s, mode, GeneratorClass::Idempotents).generated);
        }
    }
}
