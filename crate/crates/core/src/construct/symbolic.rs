//! The two infinite semirings handled symbolically: the naturals and
//! `N<x, y>` = `{a + bx + cy}` with `x^2 = x`, `y^2 = y`, `xy = x`, `yx = y`.
//!
//! Questions a finite sweep cannot settle (which elements are idempotent,
//! nilpotent, or complementable) are answered by exact model-specific
//! predicates; the bounded windows exist so tests can cross-check them.

use serde::Serialize;

/// Operation surface shared with finite tables.
pub trait SemiringModel {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// All elements with every coefficient `<= bound`.
    fn window(&self, bound: u64) -> Vec<Self::Elem>;

    fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, a| self.add(&acc, a))
    }

    fn power(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SymbolicNat(pub u64);

#[derive(Debug, Clone, Copy, Default)]
pub struct NatModel;

impl SemiringModel for NatModel {
    type Elem = SymbolicNat;

    fn zero(&self) -> SymbolicNat {
        SymbolicNat(0)
    }

    fn one(&self) -> SymbolicNat {
        SymbolicNat(1)
    }

    fn add(&self, a: &SymbolicNat, b: &SymbolicNat) -> SymbolicNat {
        SymbolicNat(a.0 + b.0)
    }

    fn mul(&self, a: &SymbolicNat, b: &SymbolicNat) -> SymbolicNat {
        SymbolicNat(a.0 * b.0)
    }

    fn window(&self, bound: u64) -> Vec<SymbolicNat> {
        (0..=bound).map(SymbolicNat).collect()
    }
}

impl NatModel {
    /// `n^2 = n` has the solutions 0 and 1 only.
    pub fn idempotents(&self) -> Vec<SymbolicNat> {
        vec![SymbolicNat(0), SymbolicNat(1)]
    }

    pub fn is_idempotent(&self, a: SymbolicNat) -> bool {
        a.0 <= 1
    }

    /// `n = 1 + 1 + ... + 1`.
    pub fn additive_certificate(&self, a: SymbolicNat) -> Vec<SymbolicNat> {
        vec![SymbolicNat(1); a.0 as usize]
    }

    /// Only 0 is nilpotent: `n^k >= n > 0` for every `n > 0`.
    pub fn is_nilpotent(&self, a: SymbolicNat) -> bool {
        a.0 == 0
    }

    /// First non-idempotent element, showing the model is not Boolean.
    pub fn non_boolean_witness(&self) -> (SymbolicNat, SymbolicNat) {
        let two = SymbolicNat(2);
        (two, self.mul(&two, &two))
    }
}

/// `a + bx + cy` in `N<x, y>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SymbolicTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl SymbolicTriple {
    pub const fn new(a: u64, b: u64, c: u64) -> Self {
        SymbolicTriple { a, b, c }
    }

    pub const X: SymbolicTriple = SymbolicTriple::new(0, 1, 0);
    pub const Y: SymbolicTriple = SymbolicTriple::new(0, 0, 1);

    /// Compact form such as `0`, `x`, `1+2y`.
    pub fn label(&self) -> String {
        let mut terms = Vec::new();
        if self.a > 0 {
            terms.push(self.a.to_string());
        }
        for (coefficient, name) in [(self.b, "x"), (self.c, "y")] {
            match coefficient {
                0 => {}
                1 => terms.push(name.to_string()),
                k => terms.push(format!("{k}{name}")),
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TripleModel;

impl SemiringModel for TripleModel {
    type Elem = SymbolicTriple;

    fn zero(&self) -> SymbolicTriple {
        SymbolicTriple::new(0, 0, 0)
    }

    fn one(&self) -> SymbolicTriple {
        SymbolicTriple::new(1, 0, 0)
    }

    fn add(&self, p: &SymbolicTriple, q: &SymbolicTriple) -> SymbolicTriple {
        SymbolicTriple::new(p.a + q.a, p.b + q.b, p.c + q.c)
    }

    /// Expanding `(a + bx + cy)(a' + b'x + c'y)` with every word in `x, y`
    /// reducing to its first letter.
    fn mul(&self, p: &SymbolicTriple, q: &SymbolicTriple) -> SymbolicTriple {
        SymbolicTriple::new(
            p.a * q.a,
            p.a * q.b + q.a * p.b + p.b * q.b + p.b * q.c,
            p.a * q.c + q.a * p.c + p.c * q.b + p.c * q.c,
        )
    }

    fn window(&self, bound: u64) -> Vec<SymbolicTriple> {
        let mut out = Vec::new();
        for a in 0..=bound {
            for b in 0..=bound {
                for c in 0..=bound {
                    out.push(SymbolicTriple::new(a, b, c));
                }
            }
        }
        out
    }
}

impl TripleModel {
    /// Solving `e^2 = e` coefficientwise: `a^2 = a`; `2ab + b^2 + bc = b`;
    /// `2ac + cb + c^2 = c`. With `a = 1` this forces `b = c = 0`; with
    /// `a = 0` it reads `b(b + c - 1) = 0 = c(b + c - 1)`.
    pub fn idempotents(&self) -> Vec<SymbolicTriple> {
        vec![
            SymbolicTriple::new(0, 0, 0),
            SymbolicTriple::new(1, 0, 0),
            SymbolicTriple::X,
            SymbolicTriple::Y,
        ]
    }

    pub fn is_idempotent(&self, e: &SymbolicTriple) -> bool {
        self.idempotents().contains(e)
    }

    /// `(a, b, c) = a*1 + b*x + c*y`, a sum of idempotents.
    pub fn additive_certificate(&self, t: &SymbolicTriple) -> Vec<SymbolicTriple> {
        let mut terms = vec![self.one(); t.a as usize];
        terms.extend(std::iter::repeat_n(SymbolicTriple::X, t.b as usize));
        terms.extend(std::iter::repeat_n(SymbolicTriple::Y, t.c as usize));
        terms
    }

    /// Only 0. For `a > 0` the constant coefficient of every power is
    /// `a^k > 0`; for `a = 0` and `b + c > 0`, `(0, b, c)^k = (0, b s, c s)`
    /// with `s = (b + c)^(k-1) > 0`.
    pub fn is_nilpotent(&self, t: &SymbolicTriple) -> bool {
        *t == self.zero()
    }

    /// No `f` satisfies `x + f = 1`: the x-coefficient of the left side is
    /// at least 1 while that of 1 is 0.
    pub fn complement_of_x_exists(&self) -> bool {
        false
    }

    pub fn non_commuting_witness(&self) -> (SymbolicTriple, SymbolicTriple, SymbolicTriple, SymbolicTriple) {
        let (x, y) = (SymbolicTriple::X, SymbolicTriple::Y);
        (x, y, self.mul(&x, &y), self.mul(&y, &x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_labels() {
        assert_eq!(TripleModel.zero().label(), "0");
        assert_eq!(SymbolicTriple::X.label(), "x");
        assert_eq!(SymbolicTriple::new(1, 0, 2).label(), "1+2y");
    }
    use std::collections::BTreeMap;

    /// Formal sums of words over {x, y}, each word reduced to its first letter.
    fn expand(p: &SymbolicTriple, q: &SymbolicTriple) -> SymbolicTriple {
        let as_words = |t: &SymbolicTriple| -> Vec<(String, u64)> {
            vec![("".into(), t.a), ("x".into(), t.b), ("y".into(), t.c)]
        };
        let mut acc: BTreeMap<String, u64> = BTreeMap::new();
        for (w1, k1) in as_words(p) {
            for (w2, k2) in as_words(q) {
                let word = format!("{w1}{w2}");
                let reduced = word.chars().next().map(String::from).unwrap_or_default();
                *acc.entry(reduced).or_default() += k1 * k2;
            }
        }
        SymbolicTriple::new(
            acc.get("").copied().unwrap_or(0),
            acc.get("x").copied().unwrap_or(0),
            acc.get("y").copied().unwrap_or(0),
        )
    }

    #[test]
    fn closed_form_matches_term_expansion() {
        let m = TripleModel;
        let window = m.window(5);
        assert_eq!(window.len(), 216);
        for p in &window {
            for q in &window {
                assert_eq!(m.mul(p, q), expand(p, q), "{p:?} * {q:?}");
            }
        }
    }

    #[test]
    fn idempotents_match_brute_force() {
        let m = TripleModel;
        let brute: Vec<SymbolicTriple> = m
            .window(3)
            .into_iter()
            .filter(|e| m.mul(e, e) == *e)
            .collect();
        let mut solved = m.idempotents();
        solved.sort();
        assert_eq!(brute, solved);
    }

    #[test]
    fn generator_relations() {
        let m = TripleModel;
        let (x, y, xy, yx) = m.non_commuting_witness();
        assert_eq!(xy, x);
        assert_eq!(yx, y);
        assert_eq!(m.mul(&x, &x), x);
        assert_eq!(m.mul(&y, &y), y);
    }

    #[test]
    fn nat_basics() {
        let n = NatModel;
        assert_eq!(n.sum(&n.additive_certificate(SymbolicNat(5))), SymbolicNat(5));
        assert_eq!(n.non_boolean_witness(), (SymbolicNat(2), SymbolicNat(4)));
        let brute: Vec<_> = n.window(20).into_iter().filter(|a| n.mul(a, a) == *a).collect();
        assert_eq!(brute, n.idempotents());
    }
}
