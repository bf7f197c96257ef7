//! Distinguished subsets of a finite semiring: idempotents, nilpotents,
//! nilidempotents, additively invertible elements, the centre and the units.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::elements::ElementSet;
use crate::semiring::FiniteSemiring;

impl FiniteSemiring {
    /// `a^k`, with `a^0 = 1`.
    pub fn power(&self, a: usize, k: u64) -> usize {
        let (mut base, mut exp, mut acc) = (a, k, self.one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `a + a + ... + a` with `n` summands; `n = 0` gives zero.
    pub fn scalar_repeat(&self, n: u64, a: usize) -> usize {
        let (mut base, mut count, mut acc) = (a, n, self.zero());
        while count > 0 {
            if count & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            count >>= 1;
        }
        acc
    }

    /// Smallest `k >= 1` with `a^k = 0`, or `None` when `a` is not nilpotent.
    ///
    /// The sequence `a, a^2, ...` lives in a set of `order` elements, so it
    /// has entered its cycle after `order` steps; if zero (a fixed point)
    /// has not appeared by then it never will.
    pub fn nilpotency_index(&self, a: usize) -> Option<usize> {
        let mut x = a;
        for k in 1..=self.order() {
            if x == self.zero() {
                return Some(k);
            }
            x = self.mul(x, a);
        }
        None
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.nilpotency_index(a).is_some()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// Smallest-index `b` with `a + b = 0`.
    pub fn additive_inverse(&self, a: usize) -> Option<usize> {
        self.elements().find(|&b| self.add(a, b) == self.zero())
    }

    /// Smallest-index two-sided inverse of `u`.
    pub fn multiplicative_inverse(&self, u: usize) -> Option<usize> {
        self.elements()
            .find(|&v| self.mul(u, v) == self.one() && self.mul(v, u) == self.one())
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.elements().all(|b| self.mul(a, b) == self.mul(b, a))
    }

    /// Boolean in the sense `I(S) = S`.
    pub fn is_boolean(&self) -> bool {
        self.elements().all(|a| self.is_idempotent(a))
    }

    pub fn classify(&self) -> ClassReport {
        element_classes(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub idempotents: ElementSet,
    pub nilpotents: ElementSet,
    pub nilidempotents: ElementSet,
    pub additively_invertible: ElementSet,
    /// element -> first `b` with `a + b = 0`
    pub additive_inverses: BTreeMap<usize, usize>,
    pub center: ElementSet,
    pub units: ElementSet,
    /// unit -> first two-sided inverse
    pub unit_inverses: BTreeMap<usize, usize>,
    pub nilpotency_index: BTreeMap<usize, usize>,
}

impl ClassReport {
    pub fn is_boolean(&self) -> bool {
        self.idempotents.is_full()
    }

    /// `Nil(S) ⊆ Z(S)`
    pub fn nil_in_center(&self) -> bool {
        self.nilpotents.is_subset(&self.center)
    }

    /// `Nil(S) ⊆ V(S) ∩ Z(S)`
    pub fn nil_in_invertible_center(&self) -> bool {
        self.nilpotents
            .is_subset(&self.additively_invertible.intersection(&self.center))
    }

    /// Idempotents other than 0 and 1.
    pub fn nontrivial_idempotents(&self, s: &FiniteSemiring) -> ElementSet {
        let mut set = self.idempotents.clone();
        set.remove(s.zero());
        set.remove(s.one());
        set
    }
}

/// Computes every distinguished subset by exhaustive testing.
pub fn element_classes(s: &FiniteSemiring) -> ClassReport {
    let n = s.order();
    let mut idempotents = ElementSet::empty(n);
    let mut nilpotents = ElementSet::empty(n);
    let mut nilpotency_index = BTreeMap::new();
    let mut additively_invertible = ElementSet::empty(n);
    let mut additive_inverses = BTreeMap::new();
    let mut center = ElementSet::empty(n);
    let mut units = ElementSet::empty(n);
    let mut unit_inverses = BTreeMap::new();

    for a in s.elements() {
        if s.is_idempotent(a) {
            idempotents.insert(a);
        }
        if let Some(k) = s.nilpotency_index(a) {
            nilpotents.insert(a);
            nilpotency_index.insert(a, k);
        }
        if let Some(b) = s.additive_inverse(a) {
            additively_invertible.insert(a);
            additive_inverses.insert(a, b);
        }
        if s.is_central(a) {
            center.insert(a);
        }
        if let Some(v) = s.multiplicative_inverse(a) {
            units.insert(a);
            unit_inverses.insert(a, v);
        }
    }

    let nilidempotents = ElementSet::from_indices(
        n,
        s.elements().filter(|&e| {
            let sq = s.mul(e, e);
            nilpotents.iter().any(|x| s.add(e, x) == sq)
        }),
    );

    ClassReport {
        idempotents,
        nilpotents,
        nilidempotents,
        additively_invertible,
        additive_inverses,
        center,
        units,
        unit_inverses,
        nilpotency_index,
    }
}
