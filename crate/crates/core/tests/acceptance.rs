//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use semiring_core::census::{enumerate_semirings, scan, CensusConfig};
use semiring_core::closure::{generation_certificate, GeneratorClass, Mode};
use semiring_core::complement::{
    all_nilorthogonal_complements, nilorthogonal_complement, orthogonal_complement,
};
use semiring_core::construct::{
    boolean_semiring, bxy_presentation, preset, presentation, NatModel, Presentation,
    PresentationStatus, SemiringModel, SymbolicNat, SymbolicTriple, TripleModel,
    DEFAULT_UNIVERSE_BOUND,
};
use semiring_core::iso::isomorphic;
use semiring_core::lift::{invert_unipotent, lift_nilidempotent};
use semiring_core::peirce::{peirce_decompose, FactorClass};
use semiring_core::theorem::{
    check_theorem, Profile, Theorem, Verdict, BOOLEAN, COMMUTATIVE, NIL_IN_CENTER,
};
use semiring_core::FiniteSemiring;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn at(s: &FiniteSemiring, label: &str) -> Result<usize, String> {
    s.index_of(label).ok_or_else(|| format!("no element labelled {label}"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn triangular_example() -> Outcome {
    let s = preset("t2b").map_err(err)?;
    let classes = s.classify();
    let e12 = at(&s, "[0,1;0,0]")?;
    ensure!(s.order() == 8, "order {}", s.order());
    ensure!(classes.idempotents.len() == 7, "{} idempotents", classes.idempotents.len());
    let non: Vec<usize> = s.elements().filter(|&a| !classes.idempotents.contains(a)).collect();
    ensure!(non == vec![e12], "non-idempotents {non:?}");
    let cert = generation_certificate(&s, Mode::Multiplicative, GeneratorClass::Idempotents);
    ensure!(cert.generated, "not generated");
    let expr = &cert.expressions[&e12];
    ensure!(expr.len() == 2, "expression {expr:?}");
    ensure!(cert.evaluate(&s, e12) == Some(e12), "expression does not evaluate to E12");
    ensure!(!s.is_commutative(), "commutative");
    ensure!(!s.is_boolean(), "Boolean");
    let factors: Vec<&str> = expr.iter().map(|&a| s.label(a)).collect();
    Ok(format!("7 idempotents, E12 = {}", factors.join(" * ")))
}

fn complement_witnesses() -> Outcome {
    let s = preset("t2b").map_err(err)?;
    let e = at(&s, "[1,1;0,0]")?;
    ensure!(orthogonal_complement(&s, e).map_err(err)?.is_none(), "orthogonal complement found");
    let first = nilorthogonal_complement(&s, e)
        .map_err(err)?
        .ok_or("no nilorthogonal complement")?;
    ensure!(first.is_valid(&s), "first witness invalid");
    let all = all_nilorthogonal_complements(&s, e).map_err(err)?;
    ensure!(all.iter().all(|w| w.is_valid(&s)), "invalid witness in enumeration");
    let (f, x) = (at(&s, "[0,1;0,1]")?, at(&s, "[0,1;0,0]")?);
    ensure!(all.iter().any(|w| w.f == f && w.x == x), "reference witness missing");
    Ok(format!(
        "{} valid witnesses; first f={} x={}",
        all.len(),
        s.label(first.f),
        s.label(first.x)
    ))
}

fn census_scan() -> Outcome {
    let report = scan(&[2, 3, 4], &Theorem::ALL, &CensusConfig::default()).map_err(err)?;
    ensure!(report.violations.is_empty(), "{} violations", report.violations.len());
    let two = enumerate_semirings(2).map_err(err)?;
    let b = boolean_semiring();
    let z2 = preset("zmod:2").map_err(err)?;
    ensure!(two.len() == 2, "order-2 catalog has {}", two.len());
    ensure!(
        two.iter().any(|s| isomorphic(s, &b).is_some())
            && two.iter().any(|s| isomorphic(s, &z2).is_some()),
        "order-2 catalog is not {{B, Z2}}"
    );
    // cross-checked against the slow order-3 enumeration in census_oracle.rs
    ensure!(report.counts[&3] == 6, "order 3 count {}", report.counts[&3]);
    ensure!(report.counts[&4] == 40, "order 4 count {}", report.counts[&4]);
    Ok(format!("counts {:?}, 0 violations", report.counts))
}

fn fixture_verdicts() -> Outcome {
    let b = preset("bool").map_err(err)?;
    ensure!(check_theorem(&b, Theorem::Main).verdict == Verdict::Confirmed, "bool main");

    let d = preset("z2x-sq").map_err(err)?;
    let r = check_theorem(&d, Theorem::MainNilid);
    ensure!(r.verdict == Verdict::Confirmed, "z2x-sq mainnilid {}", r.verdict);
    ensure!(!d.is_boolean(), "z2x-sq Boolean");

    let m = preset("m2z2").map_err(err)?;
    let r = check_theorem(&m, Theorem::AdditiveCom);
    ensure!(r.verdict == Verdict::Vacuous, "m2z2 additivecom {}", r.verdict);
    let failing: Vec<_> = r.hypotheses.iter().filter(|c| !c.holds).collect();
    ensure!(failing.len() == 1 && failing[0].name == NIL_IN_CENTER, "failing {failing:?}");
    let e12 = at(&m, "[0,1;0,0]")?;
    ensure!(failing[0].witness == Some(vec![e12]), "witness {:?}", failing[0].witness);

    let c = preset("z3x-sqm1").map_err(err)?;
    let p = Profile::compute(&c);
    let r = p.report(Theorem::AdditiveCom);
    ensure!(r.verdict == Verdict::Confirmed, "z3x-sqm1 additivecom {}", r.verdict);
    ensure!(r.conclusion(COMMUTATIVE).is_some_and(|c| c.holds), "not commutative");
    ensure!(!p.boolean.holds && r.conclusion(BOOLEAN).is_none(), "Boolean");
    let nontrivial = p.classes.nontrivial_idempotents(&c).len();
    ensure!(nontrivial >= 2, "{nontrivial} nontrivial idempotents");
    Ok("4 fixtures as expected".into())
}

fn lifting() -> Outcome {
    let s = preset("z2x-sq").map_err(err)?;
    let (one, x, one_x) = (at(&s, "1")?, at(&s, "x")?, at(&s, "1+x")?);
    let t = lift_nilidempotent(&s, one_x).map_err(err)?;
    ensure!((t.f, t.correction, t.iterations) == (one, x, 1), "lift(1+x) = {t:?}");
    let t = lift_nilidempotent(&s, x).map_err(err)?;
    ensure!((t.f, t.correction) == (s.zero(), x), "lift(x) = {t:?}");
    ensure!(invert_unipotent(&s, x).map_err(err)? == one_x, "inverse of 1+x");
    let z4 = preset("zmod:4").map_err(err)?;
    ensure!(invert_unipotent(&z4, 2).map_err(err)? == 3, "inverse of 3 in Z4");

    let mut lifted = 0;
    for order in 2..=4 {
        for c in enumerate_semirings(order).map_err(err)? {
            let classes = c.classify();
            if !classes.nil_in_invertible_center() {
                continue;
            }
            for g in classes.nilidempotents.iter() {
                let trace = lift_nilidempotent(&c, g).map_err(err)?;
                ensure!(trace.check(&c), "trace invariants fail at {g} in {:?}", c.mul_rows());
                lifted += 1;
            }
        }
    }
    Ok(format!("fixtures exact; {lifted} census lifts verified"))
}

fn peirce() -> Outcome {
    let c = preset("z3x-sqm1").map_err(err)?;
    let p = peirce_decompose(&c).map_err(err)?;
    ensure!(p.verify(&c), "CRT isomorphism fails");
    ensure!(p.factors.len() == 2, "{} factors", p.factors.len());
    for f in &p.factors {
        ensure!(f.semiring.order() == 3, "factor order {}", f.semiring.order());
        ensure!(
            f.classification == FactorClass::OtherNoNontrivialIdempotents,
            "factor class {}",
            f.classification.name()
        );
    }
    for (k, name) in [(1, "bool"), (2, "product:bool*bool"), (3, "product:bool*bool*bool")] {
        let s = preset(name).map_err(err)?;
        let p = peirce_decompose(&s).map_err(err)?;
        ensure!(p.verify(&s) && p.factors.len() == k, "{name}: {} factors", p.factors.len());
        ensure!(
            p.factors.iter().all(|f| f.classification == FactorClass::IsoToBoolean),
            "{name}: factor not iso-to-B"
        );
    }
    let mut checked = 0;
    for order in 2..=4 {
        for s in enumerate_semirings(order).map_err(err)? {
            let r = Profile::compute(&s).report(Theorem::Main);
            if r.verdict != Verdict::Confirmed {
                continue;
            }
            let p = peirce_decompose(&s).map_err(err)?;
            ensure!(p.verify(&s), "iso fails on {:?}", s.mul_rows());
            ensure!(
                p.factors.iter().all(|f| matches!(
                    f.classification,
                    FactorClass::IsoToBoolean | FactorClass::IsoToZ2
                )),
                "factor outside {{B, Z2}} in {:?}",
                s.mul_rows()
            );
            checked += 1;
        }
    }
    Ok(format!("fixtures exact; {checked} census semirings split into B/Z2 factors"))
}

fn symbolic() -> Outcome {
    let m = TripleModel;
    let (x, y) = (SymbolicTriple::X, SymbolicTriple::Y);
    ensure!(m.mul(&x, &y) == x && m.mul(&y, &x) == y, "xy, yx");
    ensure!(m.mul(&x, &y) != m.mul(&y, &x), "commutes");
    let window = m.window(10);
    let mut idempotents: Vec<_> = window.iter().filter(|e| m.mul(e, e) == **e).copied().collect();
    let mut expected = m.idempotents();
    idempotents.sort();
    expected.sort();
    ensure!(idempotents == expected, "idempotents {idempotents:?}");
    for t in &window {
        let cert = m.additive_certificate(t);
        ensure!(cert.iter().all(|e| m.is_idempotent(e)), "non-idempotent summand for {t:?}");
        ensure!(m.sum(&cert) == *t, "certificate of {t:?}");
    }
    ensure!(!m.complement_of_x_exists(), "complement of x claimed");
    ensure!(window.iter().all(|f| m.add(&x, f) != m.one()), "x + f = 1 in window");

    let n = NatModel;
    for a in n.window(10) {
        let cert = n.additive_certificate(a);
        ensure!(cert.iter().all(|&e| n.is_idempotent(e)) && n.sum(&cert) == a, "nat {a:?}");
    }
    let (two, four) = n.non_boolean_witness();
    ensure!(two == SymbolicNat(2) && four == SymbolicNat(4), "2^2 = {four:?}");
    Ok(format!("{} triples, 11 naturals", window.len()))
}

fn presentations() -> Outcome {
    let r = bxy_presentation().map_err(err)?;
    ensure!(r.status == PresentationStatus::Finite, "bxy status {}", r.status);
    let s = r.semiring.as_ref().ok_or("no table")?;
    let collapsed = vec![("x".to_string(), "0".to_string()), ("y".to_string(), "0".to_string())];
    ensure!(r.collapsed_generators == collapsed, "collapsed {:?}", r.collapsed_generators);
    ensure!(isomorphic(s, &boolean_semiring()).is_some(), "quotient is not B");

    let free = Presentation::parse(&["e"], &["e^2 = e"], false, DEFAULT_UNIVERSE_BOUND).map_err(err)?;
    let r2 = presentation(&free).map_err(err)?;
    ensure!(r2.status == PresentationStatus::ExceedsBound, "free idempotent {}", r2.status);
    Ok("bxy collapses x -> 0, y -> 0 (quotient B); e^2 = e exceeds bound".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 triangular Boolean matrices", triangular_example, 1),
        ("2 complement witnesses", complement_witnesses, 1),
        ("3 census theorem scan", census_scan, 60),
        ("4 fixture verdicts", fixture_verdicts, 5),
        ("5 lifting and inversion", lifting, 1),
        ("6 Peirce decomposition", peirce, 10),
        ("7 symbolic models", symbolic, 1),
        ("8 presentation engine", presentations, 5),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(limit);
        let line = match (&outcome, within) {
            (Ok(detail), true) => format!("PASS  {name} [{elapsed:.2?} / {limit}s] {detail}"),
            (Ok(detail), false) => format!("FAIL  {name} [{elapsed:.2?} > {limit}s] {detail}"),
            (Err(why), _) => format!("FAIL  {name} [{elapsed:.2?}] {why}"),
        };
        if !(outcome.is_ok() && within) {
            failed += 1;
        }
        println!("{line}");
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
