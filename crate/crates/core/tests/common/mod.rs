#![allow(dead_code)]

use semiring_core::census::enumerate_semirings;
use semiring_core::construct::preset;
use semiring_core::FiniteSemiring;

pub const FIXTURES: &[&str] = &[
    "bool",
    "zmod:2",
    "zmod:3",
    "zmod:4",
    "zmod:6",
    "zmod:8",
    "t2b",
    "m2z2",
    "z2x-sq",
    "z3x-sqm1",
    "bxy-presentation",
    "product:bool*bool",
    "product:bool*zmod:2",
    "product:bool*bool*bool",
    "triangular:2:zmod:2",
    "matrix:2:bool",
];

pub fn fixtures() -> Vec<FiniteSemiring> {
    FIXTURES.iter().map(|name| preset(name).unwrap()).collect()
}

pub fn census() -> Vec<FiniteSemiring> {
    (1..=4).flat_map(|n| enumerate_semirings(n).unwrap()).collect()
}

pub fn everything() -> Vec<FiniteSemiring> {
    let mut all = fixtures();
    all.extend(census());
    all
}
