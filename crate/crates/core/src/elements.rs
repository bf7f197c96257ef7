use std::fmt;

use serde::{Serialize, Serializer};

const WORD: usize = u64::BITS as usize;

/// A subset of the carrier `0..carrier_order` of one semiring, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    carrier_order: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(carrier_order: usize) -> Self {
        ElementSet {
            carrier_order,
            words: vec![0; carrier_order.div_ceil(WORD)],
        }
    }

    pub fn full(carrier_order: usize) -> Self {
        let mut set = Self::empty(carrier_order);
        for a in 0..carrier_order {
            set.insert(a);
        }
        set
    }

    pub fn from_indices(carrier_order: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(carrier_order);
        for a in indices {
            set.insert(a);
        }
        set
    }

    pub fn carrier_order(&self) -> usize {
        self.carrier_order
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.carrier_order && self.words[a / WORD] & (1 << (a % WORD)) != 0
    }

    /// Returns `true` if `a` was not already present.
    pub fn insert(&mut self, a: usize) -> bool {
        assert!(
            a < self.carrier_order,
            "element {a} outside carrier of order {}",
            self.carrier_order
        );
        let mask = 1 << (a % WORD);
        let word = &mut self.words[a / WORD];
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn remove(&mut self, a: usize) -> bool {
        if a >= self.carrier_order {
            return false;
        }
        let mask = 1 << (a % WORD);
        let word = &mut self.words[a / WORD];
        let present = *word & mask != 0;
        *word &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.carrier_order
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.carrier_order).filter(move |&a| self.contains(a))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(
            self.carrier_order, other.carrier_order,
            "element sets over different carriers"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_compatible(other);
        ElementSet {
            carrier_order: self.carrier_order,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_compatible(other);
        ElementSet {
            carrier_order: self.carrier_order,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Members of `self` that are not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.check_compatible(other);
        ElementSet {
            carrier_order: self.carrier_order,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_compatible(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_multiple_words() {
        let mut s = ElementSet::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        assert!(!s.contains(500));
    }

    #[test]
    fn set_algebra() {
        let a = ElementSet::from_indices(8, [1, 2, 3]);
        let b = ElementSet::from_indices(8, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(ElementSet::from_indices(8, [3]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert!(ElementSet::full(8).is_full());
        assert!(ElementSet::empty(8).is_empty());
    }

    #[test]
    #[should_panic(expected = "different carriers")]
    fn mixing_carriers_panics() {
        let _ = ElementSet::empty(4).union(&ElementSet::empty(5));
    }
}
