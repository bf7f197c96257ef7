//! Staged enumeration of all semirings of a small order.
//!
//! Stage one lists the commutative monoids `(S, +, 0)` with zero at index 0,
//! up to relabelling of the non-zero elements. Stage two picks each non-zero
//! element as the one, moves it to index 1, and backtracks over the free
//! multiplication cells (rows and columns 0 and 1 are forced by annihilation
//! and identity), rejecting a partial table as soon as some associativity or
//! distributivity instance can be evaluated and fails. Results are
//! deduplicated by canonical key.

use std::collections::BTreeMap;

use crate::census::canonical::{canonical_labeling, CanonicalKey};
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

pub const DEFAULT_MAX_ORDER: usize = 4;

const UNSET: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub max_order: usize,
    pub include_trivial: bool,
    /// worker threads; `None` uses the global pool
    pub workers: Option<usize>,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_order: DEFAULT_MAX_ORDER,
            include_trivial: false,
            workers: None,
        }
    }
}

struct Partial {
    n: usize,
    table: Vec<usize>,
}

impl Partial {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        match self.table[a * self.n + b] {
            UNSET => None,
            v => Some(v),
        }
    }
}

fn additive_associative(p: &Partial) -> bool {
    let n = p.n;
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = p.get(a, b) else { continue };
            for c in 0..n {
                let (Some(bc), Some(ab_c)) = (p.get(b, c), p.get(ab, c)) else {
                    continue;
                };
                if p.get(a, bc).is_some_and(|v| v != ab_c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Commutative monoid tables with identity 0, one per isomorphism class
/// (isomorphisms fix 0).
pub fn additive_monoids(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    let mut partial = Partial {
        n,
        table: vec![UNSET; n * n],
    };
    for a in 0..n {
        partial.table[a] = a;
        partial.table[a * n] = a;
    }
    let mut found = Vec::new();
    fill_add(&mut partial, &cells, 0, &mut found);

    let perms = permutations_fixing_zero(n);
    let mut reps: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for table in found {
        let least = perms
            .iter()
            .map(|p| relabel(n, &table, p))
            .min()
            .expect("identity permutation");
        reps.entry(least).or_insert(table);
    }
    reps.into_keys().collect()
}

fn fill_add(p: &mut Partial, cells: &[(usize, usize)], k: usize, out: &mut Vec<Vec<usize>>) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(p.table.clone());
        return;
    };
    let n = p.n;
    for v in 0..n {
        p.table[i * n + j] = v;
        p.table[j * n + i] = v;
        if additive_associative(p) {
            fill_add(p, cells, k + 1, out);
        }
    }
    p.table[i * n + j] = UNSET;
    p.table[j * n + i] = UNSET;
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 1, &mut out);
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k >= v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Table after renaming `a` to `perm[a]`.
fn relabel(n: usize, table: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[table[a * n + b]];
        }
    }
    out
}

fn multiplication_consistent(add: &[usize], p: &Partial) -> bool {
    let n = p.n;
    let plus = |a: usize, b: usize| add[a * n + b];
    for a in 0..n {
        for b in 0..n {
            let ab = p.get(a, b);
            for c in 0..n {
                if let (Some(ab), Some(bc)) = (ab, p.get(b, c)) {
                    if let (Some(l), Some(r)) = (p.get(ab, c), p.get(a, bc)) {
                        if l != r {
                            return false;
                        }
                    }
                }
                // a(b + c) = ab + ac
                if let (Some(l), Some(ab), Some(ac)) = (p.get(a, plus(b, c)), ab, p.get(a, c)) {
                    if l != plus(ab, ac) {
                        return false;
                    }
                }
                // (a + b)c = ac + bc
                if let (Some(l), Some(ac), Some(bc)) = (p.get(plus(a, b), c), p.get(a, c), p.get(b, c)) {
                    if l != plus(ac, bc) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn fill_mul(
    add: &[usize],
    p: &mut Partial,
    cells: &[(usize, usize)],
    k: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(p.table.clone());
        return;
    };
    let n = p.n;
    for v in 0..n {
        p.table[i * n + j] = v;
        if multiplication_consistent(add, p) {
            fill_mul(add, p, cells, k + 1, out);
        }
    }
    p.table[i * n + j] = UNSET;
}

/// Every semiring with the given additive monoid, as labelled tables.
fn semirings_over_monoid(n: usize, add: &[usize]) -> Vec<(CanonicalKey, FiniteSemiring)> {
    let cells: Vec<(usize, usize)> = (2..n).flat_map(|i| (2..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for one in 1..n {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(1, one);
        let add = relabel(n, add, &perm);
        let mut partial = Partial {
            n,
            table: vec![UNSET; n * n],
        };
        for a in 0..n {
            partial.table[a] = 0;
            partial.table[a * n] = 0;
            partial.table[n + a] = a;
            partial.table[a * n + 1] = a;
        }
        if !multiplication_consistent(&add, &partial) {
            continue;
        }
        let mut tables = Vec::new();
        fill_mul(&add, &mut partial, &cells, 0, &mut tables);
        for mul in tables {
            let s = FiniteSemiring::from_flat_trusted(n, add.clone(), mul, 0, 1, default_labels(n));
            out.push(canonical(s));
        }
    }
    out
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            _ => char::from(b'a' + (i - 2) as u8).to_string(),
        })
        .collect()
}

/// Canonically relabelled copy.
fn canonical(s: FiniteSemiring) -> (CanonicalKey, FiniteSemiring) {
    let (key, position) = canonical_labeling(&s);
    let relabelled = s
        .permuted(&position)
        .and_then(|t| t.with_labels(default_labels(t.order())))
        .expect("canonical labelling is a permutation");
    (key, relabelled)
}

fn run_partitions<T: Send>(
    workers: Option<usize>,
    parts: Vec<Vec<usize>>,
    job: impl Fn(&[usize]) -> Vec<T> + Sync + Send,
) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let go = || parts.par_iter().flat_map_iter(|p| job(p)).collect::<Vec<T>>();
        match workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map(|pool| pool.install(go))
                .unwrap_or_else(|_| parts.iter().flat_map(|p| job(p)).collect()),
            None => go(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        parts.iter().flat_map(|p| job(p)).collect()
    }
}

/// Canonical representatives of every semiring of the given order, sorted by key.
pub fn enumerate_semirings(order: usize) -> Result<Vec<FiniteSemiring>> {
    enumerate_semirings_with(order, &CensusConfig::default())
}

pub fn enumerate_semirings_with(order: usize, config: &CensusConfig) -> Result<Vec<FiniteSemiring>> {
    Ok(enumerate_keyed(order, config)?
        .into_iter()
        .map(|(_, s)| s)
        .collect())
}

pub(crate) fn enumerate_keyed(
    order: usize,
    config: &CensusConfig,
) -> Result<Vec<(CanonicalKey, FiniteSemiring)>> {
    if order > config.max_order {
        return Err(Error::OrderTooLarge {
            order,
            max: config.max_order,
        });
    }
    if order == 0 {
        return Err(Error::InvalidArgument("order must be >= 1".into()));
    }
    if order == 1 {
        let trivial = FiniteSemiring::new(vec![vec![0]], vec![vec![0]], 0, 0, vec!["0".into()])?;
        return Ok(vec![canonical(trivial)]);
    }
    let monoids = additive_monoids(order);
    let found = run_partitions(config.workers, monoids, |add| semirings_over_monoid(order, add));
    let unique: BTreeMap<CanonicalKey, FiniteSemiring> = found.into_iter().collect();
    Ok(unique.into_iter().collect())
}
