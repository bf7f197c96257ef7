//! Exhaustive census of small semirings and the theorem scan over it.

mod canonical;
mod enumerate;

pub use canonical::{canonical_form, canonical_labeling, CanonicalKey};
pub use enumerate::{
    additive_monoids, enumerate_semirings, enumerate_semirings_with, CensusConfig,
    DEFAULT_MAX_ORDER,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::semiring::FiniteSemiring;
use crate::theorem::{Profile, Theorem, TheoremReport, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanFlags {
    pub boolean: bool,
    pub commutative: bool,
    pub mult_gen_idempotents: bool,
    pub mult_gen_nilidempotents: bool,
    pub add_gen_idempotents: bool,
    pub orthogonal_complements: bool,
    pub nilorthogonal_complements: bool,
    pub nil_in_center: bool,
    pub nil_in_v_cap_z: bool,
}

impl From<&Profile> for ScanFlags {
    fn from(p: &Profile) -> Self {
        ScanFlags {
            boolean: p.boolean.holds,
            commutative: p.commutative.holds,
            mult_gen_idempotents: p.mult_gen_idempotents.holds,
            mult_gen_nilidempotents: p.mult_gen_nilidempotents.holds,
            add_gen_idempotents: p.add_gen_idempotents.holds,
            orthogonal_complements: p.orthogonal_complements.holds,
            nilorthogonal_complements: p.nilorthogonal_complements.holds,
            nil_in_center: p.nil_in_center.holds,
            nil_in_v_cap_z: p.nil_in_v_cap_z.holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub order: usize,
    pub key: CanonicalKey,
    pub flags: ScanFlags,
    pub verdicts: BTreeMap<Theorem, Verdict>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub confirmed: usize,
    pub vacuous: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    pub theorem: Theorem,
    pub semiring: FiniteSemiring,
    pub report: TheoremReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub orders: Vec<usize>,
    pub include_trivial: bool,
    pub theorems: Vec<Theorem>,
    /// catalog size per order (after the trivial-semiring filter)
    pub counts: BTreeMap<usize, usize>,
    pub entries: Vec<ScanEntry>,
    pub tallies: BTreeMap<Theorem, Tally>,
    /// empty unless a theorem is refuted; the scan stops at the first one
    pub violations: Vec<ViolationRecord>,
}

/// Runs every requested theorem check over the census of each order.
pub fn scan(orders: &[usize], theorems: &[Theorem], config: &CensusConfig) -> Result<ScanReport> {
    let mut catalog: Vec<(usize, CanonicalKey, FiniteSemiring)> = Vec::new();
    let mut counts = BTreeMap::new();
    for &order in orders {
        let reps = enumerate::enumerate_keyed(order, config)?;
        let kept: Vec<_> = reps
            .into_iter()
            .filter(|(_, s)| config.include_trivial || !s.is_trivial())
            .collect();
        counts.insert(order, kept.len());
        catalog.extend(kept.into_iter().map(|(k, s)| (order, k, s)));
    }

    let profiles = profile_all(&catalog, config.workers);

    let mut report = ScanReport {
        orders: orders.to_vec(),
        include_trivial: config.include_trivial,
        theorems: theorems.to_vec(),
        counts,
        entries: Vec::with_capacity(catalog.len()),
        tallies: theorems.iter().map(|&t| (t, Tally::default())).collect(),
        violations: Vec::new(),
    };
    for ((order, key, s), profile) in catalog.into_iter().zip(profiles) {
        let mut verdicts = BTreeMap::new();
        for &t in theorems {
            let r = profile.report(t);
            verdicts.insert(t, r.verdict);
            let tally = report.tallies.get_mut(&t).expect("tally per theorem");
            match r.verdict {
                Verdict::Confirmed => tally.confirmed += 1,
                Verdict::Vacuous => tally.vacuous += 1,
                Verdict::Violation => report.violations.push(ViolationRecord {
                    theorem: t,
                    semiring: s.clone(),
                    report: r,
                }),
            }
        }
        report.entries.push(ScanEntry {
            order,
            key,
            flags: ScanFlags::from(&profile),
            verdicts,
        });
        if !report.violations.is_empty() {
            break;
        }
    }
    Ok(report)
}

fn profile_all(catalog: &[(usize, CanonicalKey, FiniteSemiring)], workers: Option<usize>) -> Vec<Profile> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let go = || {
            catalog
                .par_iter()
                .map(|(_, _, s)| Profile::compute(s))
                .collect::<Vec<_>>()
        };
        if let Some(pool) = workers.and_then(|w| rayon::ThreadPoolBuilder::new().num_threads(w).build().ok()) {
            return pool.install(go);
        }
        go()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        catalog.iter().map(|(_, _, s)| Profile::compute(s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_scan() {
        let r = scan(&[2], &Theorem::ALL, &CensusConfig::default()).unwrap();
        assert_eq!(r.counts[&2], 2);
        assert!(r.violations.is_empty());
        assert_eq!(r.tallies[&Theorem::Main].confirmed, 2);
    }

    #[test]
    fn trivial_excluded_by_default() {
        let r = scan(&[1], &Theorem::ALL, &CensusConfig::default()).unwrap();
        assert_eq!(r.counts[&1], 0);
        assert!(r.entries.is_empty());
        assert!(r.tallies.values().all(|t| *t == Tally::default()));

        let config = CensusConfig {
            include_trivial: true,
            ..CensusConfig::default()
        };
        let r = scan(&[1], &Theorem::ALL, &config).unwrap();
        assert_eq!(r.counts[&1], 1);
        assert_eq!(r.tallies[&Theorem::Main].confirmed, 1);
    }
}
