//! Lifting nilidempotents to idempotents, and inverting unipotents `1 + x`.
//!
//! Starting from `g^2 = g + z` with `z` nilpotent, central and additively
//! invertible, the iteration
//!
//! ```text
//! w     = z + 2 g (-z)
//! g'    = g + w
//! z'    = 4 z^3 + 3 (-z^2)
//! ```
//!
//! keeps `g'^2 = g' + z'` and replaces `z` by a multiple of `z^2`, so after
//! `k` steps the defect is a multiple of `z^(2^k)` and vanishes once `2^k`
//! reaches the nilpotency index. Integer coefficients are repeated sums.

use serde::Serialize;

use crate::classes::ClassReport;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LiftStep {
    /// `g_k`
    pub g: usize,
    /// `z_k`, with `g_k^2 = g_k + z_k`
    pub z: usize,
    /// `w_{k+1}`, added to `g_k` to form `g_{k+1}`
    pub w: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftTrace {
    pub g0: usize,
    pub z0: usize,
    pub steps: Vec<LiftStep>,
    pub f: usize,
    pub correction: usize,
    pub iterations: usize,
}

impl LiftTrace {
    pub fn check(&self, s: &FiniteSemiring) -> bool {
        let step_ok = self
            .steps
            .iter()
            .all(|st| s.mul(st.g, st.g) == s.add(st.g, st.z));
        step_ok
            && self.iterations == self.steps.len()
            && s.is_idempotent(self.f)
            && s.add(self.g0, self.correction) == self.f
            && s.is_nilpotent(self.correction)
    }
}

/// `ceil(log2(n))` for `n >= 1`.
fn ceil_log2(n: usize) -> usize {
    (usize::BITS - (n.max(1) - 1).leading_zeros()) as usize
}

enum Attempt {
    Lifted(LiftTrace),
    /// the recurrence needed an element the semiring does not provide
    Stuck,
    CapExceeded { z: usize, cap: usize },
}

fn try_defect(s: &FiniteSemiring, classes: &ClassReport, g: usize, z: usize) -> Attempt {
    let index = classes.nilpotency_index[&z];
    let cap = ceil_log2(index) + 2;
    let mut steps = Vec::new();
    let (mut gk, mut zk) = (g, z);
    let mut correction = s.zero();
    while zk != s.zero() {
        if steps.len() >= cap {
            return Attempt::CapExceeded { z, cap };
        }
        let Some(neg) = s.additive_inverse(zk) else {
            return Attempt::Stuck;
        };
        let w = s.add(zk, s.scalar_repeat(2, s.mul(gk, neg)));
        let z_cubed = s.power(zk, 3);
        let next_z = s.add(s.scalar_repeat(4, z_cubed), s.scalar_repeat(3, s.mul(neg, zk)));
        steps.push(LiftStep { g: gk, z: zk, w });
        gk = s.add(gk, w);
        zk = next_z;
        correction = s.add(correction, w);
        if s.mul(gk, gk) != s.add(gk, zk) {
            return Attempt::Stuck;
        }
    }
    Attempt::Lifted(LiftTrace {
        g0: g,
        z0: z,
        iterations: steps.len(),
        steps,
        f: gk,
        correction,
    })
}

/// Lifts a nilidempotent `g` to an idempotent `f = g + n` with `n` nilpotent.
///
/// Defects `z` with `g^2 = g + z`, `z` nilpotent, central and additively
/// invertible are tried in index order; the first one whose iteration
/// terminates is used.
pub fn lift_nilidempotent(s: &FiniteSemiring, g: usize) -> Result<LiftTrace> {
    let classes = s.classify();
    lift_with(s, &classes, g)
}

pub(crate) fn lift_with(s: &FiniteSemiring, classes: &ClassReport, g: usize) -> Result<LiftTrace> {
    if g >= s.order() {
        return Err(Error::domain(g, "out of range"));
    }
    if !classes.nilidempotents.contains(g) {
        return Err(Error::domain(g, "is not nilidempotent"));
    }
    let square = s.mul(g, g);
    let mut overrun = None;
    let mut admissible = 0;
    for z in classes.nilpotents.iter() {
        if s.add(g, z) != square
            || !classes.center.contains(z)
            || !classes.additively_invertible.contains(z)
        {
            continue;
        }
        admissible += 1;
        match try_defect(s, classes, g, z) {
            Attempt::Lifted(trace) => {
                if !trace.check(s) {
                    return Err(Error::Internal(format!(
                        "lift of {g} via defect {z} broke its invariants"
                    )));
                }
                return Ok(trace);
            }
            Attempt::Stuck => {}
            Attempt::CapExceeded { z, cap } => {
                overrun.get_or_insert((z, cap));
            }
        }
    }
    if let Some((z, cap)) = overrun {
        return Err(Error::Internal(format!(
            "lifting {g} with defect {z} did not terminate within {cap} iterations"
        )));
    }
    Err(Error::Precondition(if admissible == 0 {
        format!("no nilpotent defect of {g} is central and additively invertible")
    } else {
        format!("no admissible defect of {g} supports the lifting recurrence")
    }))
}

/// Two-sided inverse of `1 + x` for nilpotent, additively invertible `x`:
/// `(1 - x)(1 + x^2)(1 + x^4)...(1 + x^(2^(k-1)))` with `2^k` at least the
/// nilpotency index of `x`.
pub fn invert_unipotent(s: &FiniteSemiring, x: usize) -> Result<usize> {
    if x >= s.order() {
        return Err(Error::domain(x, "out of range"));
    }
    let index = s
        .nilpotency_index(x)
        .ok_or_else(|| Error::domain(x, "is not nilpotent"))?;
    let neg = s
        .additive_inverse(x)
        .ok_or_else(|| Error::domain(x, "is not additively invertible"))?;
    let k = ceil_log2(index).max(1);
    let mut y = s.add(s.one(), neg);
    let mut sq = x;
    for _ in 1..k {
        sq = s.mul(sq, sq);
        y = s.mul(y, s.add(s.one(), sq));
    }
    let unipotent = s.add(s.one(), x);
    if s.mul(unipotent, y) != s.one() || s.mul(y, unipotent) != s.one() {
        return Err(Error::Internal(format!(
            "telescoping product is not an inverse of 1+{}",
            s.label(x)
        )));
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{preset, zmod};

    #[test]
    fn log2_ceiling() {
        assert_eq!(
            [1, 2, 3, 4, 5, 8, 9].map(ceil_log2),
            [0, 1, 2, 2, 3, 3, 4]
        );
    }

    #[test]
    fn lifts_in_dual_numbers_over_z2() {
        let s = preset("z2x-sq").unwrap();
        let x = s.index_of("x").unwrap();
        let one_plus_x = s.index_of("1+x").unwrap();

        let t = lift_nilidempotent(&s, one_plus_x).unwrap();
        assert_eq!((t.f, t.correction, t.iterations), (s.one(), x, 1));
        assert_eq!(t.steps[0], LiftStep { g: one_plus_x, z: x, w: x });

        let t = lift_nilidempotent(&s, x).unwrap();
        assert_eq!((t.f, t.correction, t.z0), (s.zero(), x, x));
    }

    #[test]
    fn idempotents_lift_to_themselves() {
        for name in ["bool", "z3x-sqm1", "t2b"] {
            let s = preset(name).unwrap();
            for e in s.classify().idempotents.iter() {
                let t = lift_nilidempotent(&s, e).unwrap();
                assert_eq!((t.f, t.correction, t.iterations), (e, s.zero(), 0));
            }
        }
    }

    #[test]
    fn lift_rejects_non_nilidempotents() {
        let z4 = zmod(4).unwrap();
        // 3^2 = 1 = 3 + 2 with 2 nilpotent, so 3 is nilidempotent; 2 is not
        assert!(lift_nilidempotent(&z4, 3).is_ok());
        let err = lift_nilidempotent(&zmod(3).unwrap(), 2).unwrap_err();
        assert!(matches!(err, Error::Domain { .. }));
    }

    #[test]
    fn unipotent_inverses() {
        let s = preset("z2x-sq").unwrap();
        let x = s.index_of("x").unwrap();
        assert_eq!(invert_unipotent(&s, x).unwrap(), s.index_of("1+x").unwrap());
        assert_eq!(invert_unipotent(&s, s.zero()).unwrap(), s.one());

        let z4 = zmod(4).unwrap();
        assert_eq!(z4.label(invert_unipotent(&z4, 2).unwrap()), "3");

        assert!(matches!(invert_unipotent(&z4, 1), Err(Error::Domain { .. })));
        let t2b = preset("t2b").unwrap();
        let e12 = t2b.index_of("[0,1;0,0]").unwrap();
        // nilpotent but 1 + 1 = 1 in B, so no additive inverse
        assert!(matches!(invert_unipotent(&t2b, e12), Err(Error::Domain { .. })));
    }

    #[test]
    fn z8_needs_several_factors() {
        let z8 = zmod(8).unwrap();
        for x in [2, 4, 6] {
            let y = invert_unipotent(&z8, x).unwrap();
            assert_eq!((1 + x) * y % 8, 1);
        }
    }
}
