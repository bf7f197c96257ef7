//! Isomorphism testing between finite semirings by backtracking over
//! bijections that fix zero and one, pruned by per-element invariants.

use crate::semiring::FiniteSemiring;

/// Isomorphism-invariant description of a single element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementInvariant {
    is_zero: bool,
    is_one: bool,
    idempotent: bool,
    nilpotency_index: Option<usize>,
    /// (tail, period) of `a, a^2, a^3, ...`
    mult_orbit: (usize, usize),
    /// (tail, period) of `a, 2a, 3a, ...`
    add_orbit: (usize, usize),
    central_count: usize,
    absorbs_count: usize,
    left_zero_divisor_count: usize,
    right_zero_divisor_count: usize,
    additively_invertible: bool,
    unit: bool,
}

fn orbit(s: &FiniteSemiring, a: usize, step: impl Fn(usize) -> usize) -> (usize, usize) {
    let mut seen = vec![usize::MAX; s.order()];
    let mut x = a;
    let mut k = 0;
    while seen[x] == usize::MAX {
        seen[x] = k;
        x = step(x);
        k += 1;
    }
    (seen[x], k - seen[x])
}

pub fn element_invariant(s: &FiniteSemiring, a: usize) -> ElementInvariant {
    let zero = s.zero();
    ElementInvariant {
        is_zero: a == zero,
        is_one: a == s.one(),
        idempotent: s.is_idempotent(a),
        nilpotency_index: s.nilpotency_index(a),
        mult_orbit: orbit(s, a, |x| s.mul(x, a)),
        add_orbit: orbit(s, a, |x| s.add(x, a)),
        central_count: s.elements().filter(|&b| s.mul(a, b) == s.mul(b, a)).count(),
        absorbs_count: s.elements().filter(|&b| s.add(a, b) == a).count(),
        left_zero_divisor_count: s.elements().filter(|&b| s.mul(a, b) == zero).count(),
        right_zero_divisor_count: s.elements().filter(|&b| s.mul(b, a) == zero).count(),
        additively_invertible: s.additive_inverse(a).is_some(),
        unit: s.multiplicative_inverse(a).is_some(),
    }
}

pub fn invariants(s: &FiniteSemiring) -> Vec<ElementInvariant> {
    s.elements().map(|a| element_invariant(s, a)).collect()
}

/// A bijection `map` from `s` onto `t` (with `map[a]` the image of `a`)
/// preserving both operations, or `None`.
pub fn isomorphic(s: &FiniteSemiring, t: &FiniteSemiring) -> Option<Vec<usize>> {
    let n = s.order();
    if t.order() != n {
        return None;
    }
    let inv_s = invariants(s);
    let inv_t = invariants(t);
    let mut sorted_s = inv_s.clone();
    let mut sorted_t = inv_t.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    let candidates: Vec<Vec<usize>> = inv_s
        .iter()
        .map(|i| t.elements().filter(|&b| inv_t[b] == *i).collect())
        .collect();

    // assign the most constrained elements first
    let mut order: Vec<usize> = s.elements().collect();
    order.sort_by_key(|&a| (candidates[a].len(), a));

    let mut search = Search {
        s,
        t,
        map: vec![None; n],
        used: vec![false; n],
    };
    search.map[s.zero()] = Some(t.zero());
    search.used[t.zero()] = true;
    if s.one() != s.zero() {
        search.map[s.one()] = Some(t.one());
        search.used[t.one()] = true;
    }
    if !search.consistent() {
        return None;
    }
    let pending: Vec<usize> = order.into_iter().filter(|&a| search.map[a].is_none()).collect();
    if search.extend(&pending, &candidates) {
        let map: Vec<usize> = search.map.into_iter().map(Option::unwrap).collect();
        debug_assert!(s.is_isomorphism(t, &map));
        Some(map)
    } else {
        None
    }
}

struct Search<'a> {
    s: &'a FiniteSemiring,
    t: &'a FiniteSemiring,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Every product or sum of mapped elements whose result is also mapped
    /// must agree in the target, and results mapped by no one must not be
    /// images of a different element.
    fn consistent(&self) -> bool {
        let (s, t) = (self.s, self.t);
        let mapped: Vec<(usize, usize)> = self
            .map
            .iter()
            .enumerate()
            .filter_map(|(a, m)| m.map(|m| (a, m)))
            .collect();
        for &(a, ma) in &mapped {
            for &(b, mb) in &mapped {
                for (r, tr) in [(s.add(a, b), t.add(ma, mb)), (s.mul(a, b), t.mul(ma, mb))] {
                    match self.map[r] {
                        Some(m) if m != tr => return false,
                        None if self.used[tr] => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn extend(&mut self, pending: &[usize], candidates: &[Vec<usize>]) -> bool {
        let Some((&a, rest)) = pending.split_first() else {
            return true;
        };
        if self.map[a].is_some() {
            return self.extend(rest, candidates);
        }
        for &b in &candidates[a] {
            if self.used[b] {
                continue;
            }
            self.map[a] = Some(b);
            self.used[b] = true;
            if self.consistent() && self.extend(rest, candidates) {
                return true;
            }
            self.map[a] = None;
            self.used[b] = false;
        }
        false
    }
}
