//! Finite semirings stored as Cayley tables.
//!
//! Elements are indices `0..order`. Constructors in this crate place zero at
//! index 0 and one at index 1 (the trivial semiring has a single element), but
//! tables read from elsewhere may use any indexing; `zero` and `one` are
//! always stored explicitly.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveIdentity,
    MultiplicativeAssociativity,
    MultiplicativeIdentity,
    LeftDistributivity,
    RightDistributivity,
    LeftAnnihilation,
    RightAnnihilation,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AdditiveCommutativity => "additive-commutativity",
            Axiom::AdditiveAssociativity => "additive-associativity",
            Axiom::AdditiveIdentity => "additive-identity",
            Axiom::MultiplicativeAssociativity => "multiplicative-associativity",
            Axiom::MultiplicativeIdentity => "multiplicative-identity",
            Axiom::LeftDistributivity => "left-distributivity",
            Axiom::RightDistributivity => "right-distributivity",
            Axiom::LeftAnnihilation => "left-annihilation",
            Axiom::RightAnnihilation => "right-annihilation",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failing instance of an axiom, with the elements that exhibit it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub(crate) fn first_violation(&self) -> String {
        match self.violations.first() {
            Some(v) => format!("{} at {:?}", v.axiom, v.witness),
            None => "none".to_string(),
        }
    }
}

/// Checks that `add` and `mul` are total `n x n` tables over `0..n` and that
/// `zero`, `one` are in range. Axiom failures are reported, not returned as errors.
pub fn validate(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> Result<AxiomReport> {
    let n = add.len();
    check_structure(add, mul, zero, one)?;
    let add: Vec<usize> = add.concat();
    let mul: Vec<usize> = mul.concat();
    Ok(axiom_sweep(n, &add, &mul, zero, one))
}

fn check_structure(add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize, one: usize) -> Result<()> {
    let n = add.len();
    if n == 0 {
        return Err(Error::Structure("empty carrier".into()));
    }
    if mul.len() != n {
        return Err(Error::Structure(format!(
            "addition table has {n} rows but multiplication table has {}",
            mul.len()
        )));
    }
    for (name, table) in [("addition", add), ("multiplication", mul)] {
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Structure(format!(
                    "{name} row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|&(_, &v)| v >= n) {
                return Err(Error::Structure(format!(
                    "{name} entry ({i},{j}) = {v} is out of range 0..{n}"
                )));
            }
        }
    }
    if zero >= n || one >= n {
        return Err(Error::Structure(format!(
            "zero={zero}, one={one} must lie in 0..{n}"
        )));
    }
    Ok(())
}

fn axiom_sweep(n: usize, add: &[usize], mul: &[usize], zero: usize, one: usize) -> AxiomReport {
    let a_ = |a: usize, b: usize| add[a * n + b];
    let m_ = |a: usize, b: usize| mul[a * n + b];
    let mut violations = Vec::new();
    let mut flag = |axiom, witness: Vec<usize>| violations.push(Violation { axiom, witness });

    for a in 0..n {
        if a_(zero, a) != a || a_(a, zero) != a {
            flag(Axiom::AdditiveIdentity, vec![a]);
        }
        if m_(one, a) != a || m_(a, one) != a {
            flag(Axiom::MultiplicativeIdentity, vec![a]);
        }
        if m_(zero, a) != zero {
            flag(Axiom::LeftAnnihilation, vec![a]);
        }
        if m_(a, zero) != zero {
            flag(Axiom::RightAnnihilation, vec![a]);
        }
        for b in 0..n {
            if b > a && a_(a, b) != a_(b, a) {
                flag(Axiom::AdditiveCommutativity, vec![a, b]);
            }
            for c in 0..n {
                if a_(a_(a, b), c) != a_(a, a_(b, c)) {
                    flag(Axiom::AdditiveAssociativity, vec![a, b, c]);
                }
                if m_(m_(a, b), c) != m_(a, m_(b, c)) {
                    flag(Axiom::MultiplicativeAssociativity, vec![a, b, c]);
                }
                if m_(a, a_(b, c)) != a_(m_(a, b), m_(a, c)) {
                    flag(Axiom::LeftDistributivity, vec![a, b, c]);
                }
                if m_(a_(a, b), c) != a_(m_(a, c), m_(b, c)) {
                    flag(Axiom::RightDistributivity, vec![a, b, c]);
                }
            }
        }
    }
    AxiomReport {
        valid: violations.is_empty(),
        violations,
    }
}

/// A validated finite semiring with labelled elements.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteSemiring {
    order: usize,
    #[serde(serialize_with = "serialize_table", rename = "add")]
    add_table: Vec<usize>,
    #[serde(serialize_with = "serialize_table", rename = "mul")]
    mul_table: Vec<usize>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
}

fn serialize_table<S: serde::Serializer>(
    table: &[usize],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let n = (table.len() as f64).sqrt().round() as usize;
    serializer.collect_seq(table.chunks(n.max(1)))
}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl FiniteSemiring {
    /// Builds a semiring from nested tables, rejecting malformed tables,
    /// duplicate labels and axiom violations.
    pub fn new(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        let report = validate(&add, &mul, zero, one)?;
        if labels.len() != add.len() {
            return Err(Error::Structure(format!(
                "{} labels for {} elements",
                labels.len(),
                add.len()
            )));
        }
        check_labels(&labels)?;
        if !report.valid {
            return Err(Error::Axioms(report));
        }
        Ok(FiniteSemiring {
            order: add.len(),
            add_table: add.concat(),
            mul_table: mul.concat(),
            zero,
            one,
            labels,
        })
    }

    /// Same as [`FiniteSemiring::new`] with labels `0, 1, 2, ...`.
    pub fn from_tables(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let labels = (0..add.len()).map(|i| i.to_string()).collect();
        Self::new(add, mul, zero, one, labels)
    }

    /// Flat row-major tables that are already known to satisfy the axioms.
    pub(crate) fn from_flat_trusted(
        order: usize,
        add_table: Vec<usize>,
        mul_table: Vec<usize>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Self {
        debug_assert!(axiom_sweep(order, &add_table, &mul_table, zero, one).valid);
        FiniteSemiring {
            order,
            add_table,
            mul_table,
            zero,
            one,
            labels,
        }
    }

    /// Tabulates operations on an explicit carrier. The zero is placed at
    /// index 0, the one at index 1, and the remaining elements keep the order
    /// in which `elements` lists them.
    pub fn from_carrier<T, A, M, L>(
        elements: Vec<T>,
        zero: T,
        one: T,
        add: A,
        mul: M,
        label: L,
    ) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        A: Fn(&T, &T) -> T,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let mut ordered = Vec::with_capacity(elements.len());
        ordered.push(zero.clone());
        if one != zero {
            ordered.push(one.clone());
        }
        ordered.extend(elements.into_iter().filter(|e| *e != zero && *e != one));
        let index: HashMap<T, usize> = ordered
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        if index.len() != ordered.len() {
            return Err(Error::Structure("carrier lists an element twice".into()));
        }
        let lookup = |v: T, what: &str| {
            index
                .get(&v)
                .copied()
                .ok_or_else(|| Error::Structure(format!("carrier is not closed under {what}")))
        };
        let n = ordered.len();
        let mut add_rows = vec![vec![0; n]; n];
        let mut mul_rows = vec![vec![0; n]; n];
        for (i, a) in ordered.iter().enumerate() {
            for (j, b) in ordered.iter().enumerate() {
                add_rows[i][j] = lookup(add(a, b), "addition")?;
                mul_rows[i][j] = lookup(mul(a, b), "multiplication")?;
            }
        }
        let labels = ordered.iter().map(label).collect();
        let one_index = if n == 1 { 0 } else { 1 };
        Self::new(add_rows, mul_rows, 0, one_index, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add_table[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add_table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul_table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// Re-runs the full axiom sweep on the stored tables.
    pub fn axiom_report(&self) -> AxiomReport {
        axiom_sweep(
            self.order,
            &self.add_table,
            &self.mul_table,
            self.zero,
            self.one,
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Sum of the listed elements, `zero` for the empty list.
    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.zero, |acc, a| self.add(acc, a))
    }

    /// Left-to-right product of the listed elements, `one` for the empty list.
    pub fn product(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.one, |acc, a| self.mul(acc, a))
    }

    /// First pair `(a, b)` with `ab != ba`, if any.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        self.elements().find_map(|a| {
            (a + 1..self.order)
                .find(|&b| self.mul(a, b) != self.mul(b, a))
                .map(|b| (a, b))
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// Relabels element `a` as `perm[a]`. `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument(format!(
                "not a permutation of 0..{n}"
            )));
        }
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add(a, b)];
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Ok(FiniteSemiring {
            order: n,
            add_table: add,
            mul_table: mul,
            zero: perm[self.zero],
            one: perm[self.one],
            labels,
        })
    }

    /// Same tables with fresh labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Structure(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        check_labels(&labels)?;
        Ok(FiniteSemiring {
            labels,
            ..self.clone()
        })
    }

    /// Whether `map` (indexed by elements of `self`) is a bijection onto
    /// `other` preserving both operations, zero and one.
    pub fn is_isomorphism(&self, other: &FiniteSemiring, map: &[usize]) -> bool {
        let n = self.order;
        if other.order != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        map[self.zero] == other.zero
            && map[self.one] == other.one
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    map[self.add(a, b)] == other.add(map[a], map[b])
                        && map[self.mul(a, b)] == other.mul(map[a], map[b])
                })
            })
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(Error::Structure(format!(
                "label `{l}` must be non-empty and contain no whitespace"
            )));
        }
        if !seen.insert(l.as_str()) {
            return Err(Error::Structure(format!("duplicate label `{l}`")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bool_tables(one_plus_one: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        (
            vec![vec![0, 1], vec![1, one_plus_one]],
            vec![vec![0, 0], vec![0, 1]],
        )
    }

    #[test]
    fn boolean_tables_are_valid() {
        let (add, mul) = bool_tables(1);
        assert!(validate(&add, &mul, 0, 1).unwrap().valid);
    }

    #[test]
    fn rewriting_one_plus_one_gives_z2() {
        let (add, mul) = bool_tables(0);
        assert!(validate(&add, &mul, 0, 1).unwrap().valid);
    }

    #[test]
    fn trivial_semiring_is_valid() {
        let s = FiniteSemiring::from_tables(vec![vec![0]], vec![vec![0]], 0, 0).unwrap();
        assert!(s.is_trivial());
        assert!(s.is_commutative());
    }

    #[test]
    fn structural_errors_are_not_axiom_reports() {
        let err = validate(&[vec![0, 1], vec![1]], &[vec![0, 0], vec![0, 1]], 0, 1).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
        let err = validate(&[vec![0, 1], vec![1, 2]], &[vec![0, 0], vec![0, 1]], 0, 1).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
        let err = validate(&[vec![0, 1], vec![1, 1]], &[vec![0, 0], vec![0, 1]], 0, 2).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
    }

    #[test]
    fn every_violated_instance_is_listed() {
        // 1*1 = 0 breaks the identity law for 1 and the annihilation-free part of distributivity
        let add = vec![vec![0, 1], vec![1, 1]];
        let mul = vec![vec![0, 0], vec![0, 0]];
        let report = validate(&add, &mul, 0, 1).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::MultiplicativeIdentity && v.witness == vec![1]));

        // non-annihilating zero
        let mul = vec![vec![0, 1], vec![1, 1]];
        let report = validate(&add, &mul, 0, 1).unwrap();
        assert!(report.violations.iter().any(|v| v.axiom == Axiom::LeftAnnihilation));
        assert!(report.violations.iter().any(|v| v.axiom == Axiom::RightAnnihilation));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let (add, mul) = bool_tables(1);
        let err = FiniteSemiring::new(add, mul, 0, 1, vec!["a".into(), "a".into()]).unwrap_err();
        assert!(matches!(err, Error::Structure(_)));
    }

    #[test]
    fn permutation_preserves_structure() {
        let (add, mul) = bool_tables(0);
        let s = FiniteSemiring::from_tables(add, mul, 0, 1).unwrap();
        let t = s.permuted(&[1, 0]).unwrap();
        assert_eq!(t.zero(), 1);
        assert_eq!(t.one(), 0);
        assert!(t.axiom_report().valid);
        assert!(s.is_isomorphism(&t, &[1, 0]));
        assert!(s.permuted(&[0, 0]).is_err());
    }
}
