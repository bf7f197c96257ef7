//! Constructors for the finite semirings used throughout the crate.

mod presentation;
mod symbolic;

pub use presentation::{
    bxy_presentation, parse_term, presentation, Presentation, PresentationResult,
    PresentationStatus, Term, DEFAULT_UNIVERSE_BOUND,
};
pub use symbolic::{NatModel, SemiringModel, SymbolicNat, SymbolicTriple, TripleModel};

use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// Default cap on the number of elements a matrix constructor may produce.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// The binary Boolean semiring: `{0, 1}` with `1 + 1 = 1`.
pub fn boolean_semiring() -> FiniteSemiring {
    FiniteSemiring::new(
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![0, 0], vec![0, 1]],
        0,
        1,
        vec!["0".into(), "1".into()],
    )
    .expect("boolean tables are a semiring")
}

/// Integers modulo `n`.
pub fn zmod(n: usize) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::InvalidArgument("zmod needs n >= 1".into()));
    }
    FiniteSemiring::from_carrier(
        (0..n).collect(),
        0,
        1 % n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        |a| a.to_string(),
    )
}

fn zmod_modulus(base: &FiniteSemiring) -> Option<usize> {
    let n = base.order();
    let candidate = zmod(n).ok()?;
    (candidate.add_rows() == base.add_rows()
        && candidate.mul_rows() == base.mul_rows()
        && candidate.zero() == base.zero()
        && candidate.one() == base.one())
    .then_some(n)
}

/// `Z_n[x] / (modulus)` where `base` is `zmod(n)` and `modulus` lists
/// coefficients from the constant term up; it must be monic.
pub fn poly_quotient(base: &FiniteSemiring, modulus: &[usize]) -> Result<FiniteSemiring> {
    let n = zmod_modulus(base).ok_or_else(|| {
        Error::InvalidArgument("polynomial quotients need a Z_n base from zmod".into())
    })?;
    let mut modulus: Vec<usize> = modulus.iter().map(|c| c % n).collect();
    while modulus.len() > 1 && modulus.last() == Some(&0) {
        modulus.pop();
    }
    let degree = modulus.len().saturating_sub(1);
    if degree == 0 || modulus[degree] != 1 % n {
        return Err(Error::InvalidArgument(
            "modulus must be monic of degree >= 1".into(),
        ));
    }
    let size = n
        .checked_pow(degree as u32)
        .filter(|&s| s <= DEFAULT_SIZE_CAP)
        .ok_or(Error::SizeCap {
            size: usize::MAX,
            cap: DEFAULT_SIZE_CAP,
        })?;

    let reduce = |mut p: Vec<usize>| -> Vec<usize> {
        // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
        while p.len() > degree {
            let lead = p.pop().unwrap();
            let shift = p.len() - degree;
            for (i, &m) in modulus[..degree].iter().enumerate() {
                p[shift + i] = (p[shift + i] + (n - m) * lead) % n;
            }
        }
        p.resize(degree, 0);
        p
    };
    let elements: Vec<Vec<usize>> = (0..size)
        .map(|mut idx| {
            (0..degree)
                .map(|_| {
                    let c = idx % n;
                    idx /= n;
                    c
                })
                .collect()
        })
        .collect();
    let mut zero = vec![0; degree];
    let mut one = vec![0; degree];
    one[0] = 1 % n;
    if n == 1 {
        zero = one.clone();
    }
    FiniteSemiring::from_carrier(
        elements,
        zero,
        one,
        |a, b| a.iter().zip(b).map(|(x, y)| (x + y) % n).collect(),
        |a, b| {
            let mut prod = vec![0; 2 * degree - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % n;
                }
            }
            reduce(prod)
        },
        |p| poly_label(p),
    )
}

fn poly_label(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| {
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn matrix_label(s: &FiniteSemiring, n: usize, m: &[usize]) -> String {
    let rows: Vec<String> = m
        .chunks(n)
        .map(|row| {
            row.iter()
                .map(|&a| s.label(a))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("[{}]", rows.join(";"))
}

fn matrices(
    s: &FiniteSemiring,
    n: usize,
    cap: usize,
    free: impl Fn(usize, usize) -> bool,
) -> Result<FiniteSemiring> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size must be >= 1".into()));
    }
    let positions: Vec<usize> = (0..n * n).filter(|&p| free(p / n, p % n)).collect();
    let q = s.order();
    let size = (q as u128).checked_pow(positions.len() as u32).unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::SizeCap {
            size: size.min(usize::MAX as u128) as usize,
            cap,
        });
    }
    // entries are enumerated least-significant first in row-major position order
    let elements: Vec<Vec<usize>> = (0..size as usize)
        .map(|mut idx| {
            let mut m = vec![s.zero(); n * n];
            for &p in &positions {
                m[p] = idx % q;
                idx /= q;
            }
            m
        })
        .collect();
    let zero = vec![s.zero(); n * n];
    let mut identity = zero.clone();
    for i in 0..n {
        identity[i * n + i] = s.one();
    }
    FiniteSemiring::from_carrier(
        elements,
        zero,
        identity,
        |a, b| a.iter().zip(b).map(|(&x, &y)| s.add(x, y)).collect(),
        |a, b| {
            let mut c = vec![s.zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    c[i * n + j] = s.sum((0..n).map(|k| s.mul(a[i * n + k], b[k * n + j])));
                }
            }
            c
        },
        |m| matrix_label(s, n, m),
    )
}

/// `M_n(S)` with the default size cap.
pub fn matrix_semiring(s: &FiniteSemiring, n: usize) -> Result<FiniteSemiring> {
    matrix_semiring_capped(s, n, DEFAULT_SIZE_CAP)
}

pub fn matrix_semiring_capped(s: &FiniteSemiring, n: usize, cap: usize) -> Result<FiniteSemiring> {
    matrices(s, n, cap, |_, _| true)
}

/// `T_n(S)`, upper triangular matrices, with the default size cap.
pub fn triangular_semiring(s: &FiniteSemiring, n: usize) -> Result<FiniteSemiring> {
    triangular_semiring_capped(s, n, DEFAULT_SIZE_CAP)
}

pub fn triangular_semiring_capped(
    s: &FiniteSemiring,
    n: usize,
    cap: usize,
) -> Result<FiniteSemiring> {
    matrices(s, n, cap, |i, j| i <= j)
}

/// Componentwise operations on pairs, labelled `(a,b)`.
pub fn direct_product(s: &FiniteSemiring, t: &FiniteSemiring) -> Result<FiniteSemiring> {
    let size = s.order() * t.order();
    if size > DEFAULT_SIZE_CAP {
        return Err(Error::SizeCap {
            size,
            cap: DEFAULT_SIZE_CAP,
        });
    }
    let elements: Vec<(usize, usize)> = s
        .elements()
        .flat_map(|a| t.elements().map(move |b| (a, b)))
        .collect();
    FiniteSemiring::from_carrier(
        elements,
        (s.zero(), t.zero()),
        (s.one(), t.one()),
        |&(a, b), &(c, d)| (s.add(a, c), t.add(b, d)),
        |&(a, b), &(c, d)| (s.mul(a, c), t.mul(b, d)),
        |&(a, b)| format!("({},{})", s.label(a), t.label(b)),
    )
}

/// Finite preset names accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &[
    "bool",
    "zmod:<n>",
    "t2b",
    "m2z2",
    "z2x-sq",
    "z3x-sqm1",
    "bxy-presentation",
    "product:<A>*<B>[*...]",
    "matrix:<n>:<A>",
    "triangular:<n>:<A>",
];

/// Names of the two symbolic (infinite) models; [`preset`] rejects them.
pub const SYMBOLIC_PRESETS: &[&str] = &["nat", "nn-triple"];

/// Builds a finite preset by name. Compound names nest: `matrix:2:zmod:2`,
/// `product:bool*bool*bool`, `triangular:2:product:bool*zmod:2`.
pub fn preset(name: &str) -> Result<FiniteSemiring> {
    let name = name.trim();
    match name {
        "bool" => return Ok(boolean_semiring()),
        "t2b" => return triangular_semiring(&boolean_semiring(), 2),
        "m2z2" => return matrix_semiring(&zmod(2)?, 2),
        "z2x-sq" => return poly_quotient(&zmod(2)?, &[0, 0, 1]),
        "z3x-sqm1" => return poly_quotient(&zmod(3)?, &[2, 0, 1]),
        "bxy-presentation" => {
            let result = bxy_presentation()?;
            return result.semiring.ok_or_else(|| {
                Error::Precondition("bxy presentation exceeded its universe bound".into())
            });
        }
        "nat" | "nn-triple" => {
            return Err(Error::InvalidArgument(format!(
                "`{name}` is a symbolic infinite model, not a finite table"
            )))
        }
        _ => {}
    }
    let bad = || Error::InvalidArgument(format!("unknown preset `{name}`"));
    let parse_n = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if let Some(rest) = name.strip_prefix("zmod:") {
        return zmod(parse_n(rest)?);
    }
    if let Some(rest) = name.strip_prefix("product:") {
        let mut parts = rest.split('*');
        let first = preset(parts.next().ok_or_else(bad)?)?;
        return parts.try_fold(first, |acc, p| direct_product(&acc, &preset(p)?));
    }
    for (prefix, triangular) in [("matrix:", false), ("triangular:", true)] {
        if let Some(rest) = name.strip_prefix(prefix) {
            let (n, inner) = rest.split_once(':').ok_or_else(bad)?;
            let base = preset(inner)?;
            let n = parse_n(n)?;
            return if triangular {
                triangular_semiring(&base, n)
            } else {
                matrix_semiring(&base, n)
            };
        }
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::isomorphic;

    #[test]
    fn every_preset_validates() {
        for name in [
            "bool",
            "zmod:1",
            "zmod:4",
            "t2b",
            "m2z2",
            "z2x-sq",
            "z3x-sqm1",
            "bxy-presentation",
            "product:bool*zmod:2",
            "matrix:1:zmod:3",
            "triangular:2:zmod:2",
        ] {
            let s = preset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(s.axiom_report().valid, "{name}");
        }
        assert!(preset("nat").is_err());
        assert!(preset("zmod:x").is_err());
        assert!(preset("nope").is_err());
    }

    #[test]
    fn zmod_examples() {
        assert!(zmod(0).is_err());
        assert!(zmod(1).unwrap().is_trivial());
        assert_eq!(zmod(2).unwrap().classify().nilpotents.len(), 1);
        let z4 = zmod(4).unwrap();
        assert_eq!(z4.classify().nilpotents.to_vec(), vec![0, 2]);
    }

    #[test]
    fn poly_quotient_examples() {
        let z2 = zmod(2).unwrap();
        let s = poly_quotient(&z2, &[0, 0, 1]).unwrap();
        assert_eq!(s.labels(), ["0", "1", "x", "1+x"]);

        let z3 = zmod(3).unwrap();
        let s = poly_quotient(&z3, &[2, 0, 1]).unwrap();
        assert_eq!(s.order(), 9);
        let idem: Vec<&str> = s.classify().idempotents.iter().map(|a| s.label(a)).collect();
        assert_eq!(idem, ["0", "1", "2+x", "2+2x"]);

        let collapsed = poly_quotient(&z2, &[0, 1]).unwrap();
        assert_eq!(collapsed.order(), 2);
        assert!(isomorphic(&collapsed, &z2).is_some());

        assert!(poly_quotient(&z3, &[1, 2]).is_err());
        assert!(poly_quotient(&boolean_semiring(), &[0, 0, 1]).is_err());
    }

    #[test]
    fn matrix_examples() {
        let b = boolean_semiring();
        let t2b = triangular_semiring(&b, 2).unwrap();
        assert_eq!(t2b.order(), 8);
        assert_eq!(t2b.label(1), "[1,0;0,1]");
        let m2z2 = matrix_semiring(&zmod(2).unwrap(), 2).unwrap();
        assert_eq!(m2z2.order(), 16);
        assert!(!m2z2.is_commutative());
        let z3 = zmod(3).unwrap();
        assert!(isomorphic(&matrix_semiring(&z3, 1).unwrap(), &z3).is_some());
        assert!(matches!(
            matrix_semiring(&zmod(3).unwrap(), 3),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn triangular_embeds_into_full_matrices() {
        for base in [boolean_semiring(), zmod(2).unwrap(), zmod(3).unwrap()] {
            let t = triangular_semiring(&base, 2).unwrap();
            let m = matrix_semiring(&base, 2).unwrap();
            let incl: Vec<usize> = t.elements().map(|a| m.index_of(t.label(a)).unwrap()).collect();
            assert_eq!(incl[t.zero()], m.zero());
            assert_eq!(incl[t.one()], m.one());
            for a in t.elements() {
                for b in t.elements() {
                    assert_eq!(incl[t.add(a, b)], m.add(incl[a], incl[b]));
                    assert_eq!(incl[t.mul(a, b)], m.mul(incl[a], incl[b]));
                }
            }
        }
    }

    #[test]
    fn direct_product_examples() {
        let b = boolean_semiring();
        let bb = direct_product(&b, &b).unwrap();
        assert_eq!(bb.classify().idempotents.len(), 4);

        let z3 = zmod(3).unwrap();
        let crt = poly_quotient(&z3, &[2, 0, 1]).unwrap();
        let prod = direct_product(&z3, &z3).unwrap();
        let map = isomorphic(&crt, &prod).expect("CRT isomorphism");
        assert!(crt.is_isomorphism(&prod, &map));

        let with_trivial = direct_product(&z3, &zmod(1).unwrap()).unwrap();
        assert!(isomorphic(&with_trivial, &z3).is_some());
    }
}
