//! Canonical forms of finite semirings.
//!
//! Colours start from [`element_invariant`](crate::iso::element_invariant)
//! (with zero and one forced to the first two positions) and are refined
//! until stable: an element's new colour records, for every `b`, the colours
//! of `b`, `a + b`, `ab` and `ba`. Remaining ties are broken by
//! individualizing each member of the first non-singleton cell in turn; every
//! discrete colouring yields a relabelled table pair and the least one wins.

use std::fmt;

use crate::iso::element_invariant;
use crate::semiring::FiniteSemiring;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl serde::Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

/// Dense ranks `0..k` preserving the order of `keys`.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("present") as u32)
        .collect()
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

fn refine(s: &FiniteSemiring, mut colors: Vec<u32>) -> Vec<u32> {
    loop {
        let signatures: Vec<(u32, Vec<[u32; 4]>)> = s
            .elements()
            .map(|a| {
                let mut row: Vec<[u32; 4]> = s
                    .elements()
                    .map(|b| {
                        [
                            colors[b],
                            colors[s.add(a, b)],
                            colors[s.mul(a, b)],
                            colors[s.mul(b, a)],
                        ]
                    })
                    .collect();
                row.sort_unstable();
                (colors[a], row)
            })
            .collect();
        let refined = rank(&signatures);
        if cell_count(&refined) == cell_count(&colors) {
            return refined;
        }
        colors = refined;
    }
}

fn encode(s: &FiniteSemiring, position: &[u32]) -> Vec<u16> {
    let n = s.order();
    let mut old_of = vec![0; n];
    for (a, &p) in position.iter().enumerate() {
        old_of[p as usize] = a;
    }
    let mut out = Vec::with_capacity(2 * n * n);
    for table in [FiniteSemiring::add, FiniteSemiring::mul] {
        for &a in &old_of {
            for &b in &old_of {
                out.push(position[table(s, a, b)] as u16);
            }
        }
    }
    out
}

struct Best {
    code: Vec<u16>,
    position: Vec<u32>,
}

fn search(s: &FiniteSemiring, colors: Vec<u32>, best: &mut Option<Best>) {
    let colors = refine(s, colors);
    let mut sizes = vec![0usize; cell_count(&colors)];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    match sizes.iter().position(|&k| k > 1) {
        None => {
            let code = encode(s, &colors);
            if best.as_ref().is_none_or(|b| code < b.code) {
                *best = Some(Best {
                    code,
                    position: colors,
                });
            }
        }
        Some(cell) => {
            for v in s.elements().filter(|&v| colors[v] == cell as u32) {
                let split: Vec<(u32, bool)> = s
                    .elements()
                    .map(|a| (colors[a], a != v))
                    .collect();
                search(s, rank(&split), best);
            }
        }
    }
}

/// The canonical key together with the relabelling that produces it
/// (`position[a]` is the new index of `a`).
pub fn canonical_labeling(s: &FiniteSemiring) -> (CanonicalKey, Vec<usize>) {
    let initial: Vec<(u8, _)> = s
        .elements()
        .map(|a| {
            let tag = if a == s.zero() {
                0
            } else if a == s.one() {
                1
            } else {
                2
            };
            (tag, element_invariant(s, a))
        })
        .collect();
    let mut best = None;
    search(s, rank(&initial), &mut best);
    let best = best.expect("search reaches at least one leaf");
    let n = s.order() as u16;
    let mut bytes = Vec::with_capacity(2 + 2 * best.code.len());
    bytes.extend_from_slice(&n.to_be_bytes());
    for v in &best.code {
        bytes.extend_from_slice(&v.to_be_bytes());
    }
    let position = best.position.iter().map(|&p| p as usize).collect();
    (CanonicalKey(bytes), position)
}

pub fn canonical_form(s: &FiniteSemiring) -> CanonicalKey {
    canonical_labeling(s).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean_semiring, direct_product, preset, zmod};

    #[test]
    fn boolean_and_z2_keys_differ() {
        assert_ne!(
            canonical_form(&boolean_semiring()),
            canonical_form(&zmod(2).unwrap())
        );
    }

    #[test]
    fn crt_pair_shares_a_key() {
        let z3 = zmod(3).unwrap();
        assert_eq!(
            canonical_form(&preset("z3x-sqm1").unwrap()),
            canonical_form(&direct_product(&z3, &z3).unwrap())
        );
    }

    #[test]
    fn relabelled_copy_shares_a_key() {
        let s = preset("m2z2").unwrap();
        let n = s.order();
        let perm: Vec<usize> = (0..n).map(|a| (a * 7 + 3) % n).collect();
        let t = s.permuted(&perm).unwrap();
        assert_eq!(canonical_form(&s), canonical_form(&t));
    }

    #[test]
    fn labelling_puts_zero_and_one_first() {
        let s = preset("t2b").unwrap().permuted(&[5, 2, 0, 1, 3, 4, 6, 7]).unwrap();
        let (_, position) = canonical_labeling(&s);
        assert_eq!(position[s.zero()], 0);
        assert_eq!(position[s.one()], 1);
    }
}
