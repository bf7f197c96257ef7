use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semiring_core::census::{scan, CensusConfig, DEFAULT_MAX_ORDER};
use semiring_core::closure::{closure, generation_certificate, GenerationCertificate, GeneratorClass, Mode};
use semiring_core::complement::{
    all_nilorthogonal_complements, nilorthogonal_complement, orthogonal_complement,
    orthogonal_decompositions, ComplementWitness,
};
use semiring_core::construct::{
    preset, presentation, NatModel, Presentation, PresentationStatus, SemiringModel, SymbolicTriple, TripleModel, DEFAULT_UNIVERSE_BOUND,
};
use semiring_core::iso::isomorphic;
use semiring_core::lift::{invert_unipotent, lift_nilidempotent};
use semiring_core::peirce::peirce_decompose;
use semiring_core::theorem::{check_theorem, Check, Theorem, TheoremReport, Verdict as TheoremVerdict};
use semiring_core::{ElementSet, FiniteSemiring};

use crate::file::{parse_semiring_file, serialize_semiring};
use crate::report::{Input, Report, Verdict};

#[derive(Debug, Parser)]
#[command(name = "semiring", version, about = "Analyse finite semirings given as Cayley tables")]
pub struct Cli {
    /// Emit the JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Semiring file to read
    #[arg(long, conflicts_with = "preset")]
    file: Option<PathBuf>,

    /// Built-in semiring, e.g. bool, zmod:4, t2b, product:bool*bool
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Multiplicative,
    Additive,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassArg {
    Idempotents,
    Nilidempotents,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Orthogonal,
    Nilorthogonal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and check the semiring axioms
    Validate(Source),
    /// List idempotents, nilpotents, nilidempotents, additive inverses, centre and units
    Classify(Source),
    /// Closure of a generator set, or a generation certificate for a whole class
    Closure {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "multiplicative")]
        mode: ModeArg,
        /// Generator class used when no --element is given
        #[arg(long, value_enum, default_value = "idempotents")]
        class: ClassArg,
        /// Explicit generators (repeatable)
        #[arg(long)]
        element: Vec<String>,
    },
    /// Orthogonal or nilorthogonal complement of an idempotent
    Complement {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "orthogonal")]
        kind: KindArg,
        /// List every nilorthogonal witness
        #[arg(long)]
        all: bool,
    },
    /// Decompositions of an element into nonzero pairwise orthogonal idempotents
    Decompose {
        #[command(flatten)]
        source: Source,
        /// Element to decompose (defaults to one)
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Lift a nilidempotent to an idempotent
    Lift {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        element: String,
    },
    /// Inverse of 1 + x for a nilpotent, additively invertible x
    Invert {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        element: String,
    },
    /// Split a commutative semiring along its primitive idempotents
    Peirce(Source),
    /// Search for an isomorphism onto a second semiring
    Iso {
        #[command(flatten)]
        source: Source,
        #[arg(long, conflicts_with = "with_preset")]
        with_file: Option<PathBuf>,
        #[arg(long)]
        with_preset: Option<String>,
    },
    /// Evaluate a theorem's hypotheses and conclusions
    Check {
        #[command(flatten)]
        source: Source,
        /// main, main2, mainnilid, additivecom or all
        #[arg(long, default_value = "all")]
        theorem: String,
    },
    /// Enumerate all semirings up to an order and scan the theorems over them
    Census {
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long)]
        include_trivial: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Write a preset or a finitely presented semiring in file format
    Build {
        #[arg(long, conflicts_with = "generator")]
        preset: Option<String>,
        /// Presentation generator (repeatable)
        #[arg(long)]
        generator: Vec<String>,
        /// Presentation relation `lhs = rhs` (repeatable)
        #[arg(long)]
        relation: Vec<String>,
        /// Impose a + a = a
        #[arg(long)]
        idempotent_addition: bool,
        #[arg(long, default_value_t = DEFAULT_UNIVERSE_BOUND)]
        bound: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Classify(_) => "classify",
            Command::Closure { .. } => "closure",
            Command::Complement { .. } => "complement",
            Command::Decompose { .. } => "decompose",
            Command::Lift { .. } => "lift",
            Command::Invert { .. } => "invert",
            Command::Peirce(_) => "peirce",
            Command::Iso { .. } => "iso",
            Command::Check { .. } => "check",
            Command::Census { .. } => "census",
            Command::Build { .. } => "build",
        }
    }
}

type Outcome = Result<(Verdict, Value, String), String>;

enum Loaded {
    Finite(FiniteSemiring),
    Nat,
    Triple,
}

fn describe(file: &Option<PathBuf>, preset: &Option<String>) -> Option<Input> {
    match (file, preset) {
        (Some(path), _) => Some(Input::File(path.display().to_string())),
        (None, Some(name)) => Some(Input::Preset(name.clone())),
        (None, None) => None,
    }
}

fn load(file: &Option<PathBuf>, name: &Option<String>) -> Result<Loaded, String> {
    match (file, name) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_semiring_file(&text)
                .map(Loaded::Finite)
                .map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(name)) => match name.trim() {
            "nat" => Ok(Loaded::Nat),
            "nn-triple" => Ok(Loaded::Triple),
            other => preset(other).map(Loaded::Finite).map_err(|e| e.to_string()),
        },
        (None, None) => Err("an input is required: pass --file PATH or --preset NAME".into()),
    }
}

fn load_finite(source: &Source) -> Result<FiniteSemiring, String> {
    match load(&source.file, &source.preset)? {
        Loaded::Finite(s) => Ok(s),
        Loaded::Nat | Loaded::Triple => {
            Err("symbolic models support only `classify`".into())
        }
    }
}

fn element(s: &FiniteSemiring, label: &str) -> Result<usize, String> {
    s.index_of(label)
        .ok_or_else(|| format!("no element labelled `{label}`"))
}

fn labels(s: &FiniteSemiring, set: &ElementSet) -> Vec<String> {
    set.iter().map(|a| s.label(a).to_string()).collect()
}

fn list(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn theorems(arg: &str) -> Result<Vec<Theorem>, String> {
    if arg == "all" {
        Ok(Theorem::ALL.to_vec())
    } else {
        arg.parse::<Theorem>().map(|t| vec![t]).map_err(|e| e.to_string())
    }
}

pub fn execute(command: Command) -> Report {
    let name = command.name();
    let input = match &command {
        Command::Validate(s) | Command::Classify(s) | Command::Peirce(s) => describe(&s.file, &s.preset),
        Command::Closure { source, .. }
        | Command::Complement { source, .. }
        | Command::Decompose { source, .. }
        | Command::Lift { source, .. }
        | Command::Invert { source, .. }
        | Command::Iso { source, .. }
        | Command::Check { source, .. } => describe(&source.file, &source.preset),
        Command::Census { .. } => None,
        Command::Build { preset, generator, relation, .. } => match preset {
            Some(p) => Some(Input::Preset(p.clone())),
            None => Some(Input::Presentation(format!(
                "<{} | {}>",
                generator.join(", "),
                relation.join(", ")
            ))),
        },
    };
    let outcome = match command {
        Command::Validate(source) => validate(&source),
        Command::Classify(source) => classify(&source),
        Command::Closure { source, mode, class, element } => closure_cmd(&source, mode, class, &element),
        Command::Complement { source, element, kind, all } => complement(&source, &element, kind, all),
        Command::Decompose { source, element, max_len } => decompose(&source, element.as_deref(), max_len),
        Command::Lift { source, element } => lift(&source, &element),
        Command::Invert { source, element } => invert(&source, &element),
        Command::Peirce(source) => peirce(&source),
        Command::Iso { source, with_file, with_preset } => iso(&source, &with_file, &with_preset),
        Command::Check { source, theorem } => check(&source, &theorem),
        Command::Census { max_order, min_order, theorem, include_trivial, workers } => {
            census(min_order, max_order, &theorem, include_trivial, workers)
        }
        Command::Build { preset, generator, relation, idempotent_addition, bound, output } => {
            build(preset, &generator, &relation, idempotent_addition, bound, output)
        }
    };
    match outcome {
        Ok((verdict, result, text)) => Report::new(name, input, verdict, result, text),
        Err(message) => Report::error(name, input, message),
    }
}

fn validate(source: &Source) -> Outcome {
    let s = load_finite(source)?;
    let text = format!(
        "order {}, zero {}, one {}: all axioms hold\n",
        s.order(),
        s.label(s.zero()),
        s.label(s.one())
    );
    Ok((Verdict::Ok, json!({ "order": s.order(), "elements": s.labels(), "valid": true }), text))
}

fn classify(source: &Source) -> Outcome {
    match load(&source.file, &source.preset)? {
        Loaded::Finite(s) => Ok(classify_finite(&s)),
        Loaded::Nat => Ok(classify_nat()),
        Loaded::Triple => Ok(classify_triple()),
    }
}

fn classify_finite(s: &FiniteSemiring) -> (Verdict, Value, String) {
    let c = s.classify();
    let pairs = |m: &std::collections::BTreeMap<usize, usize>| -> Vec<(String, String)> {
        m.iter()
            .map(|(&a, &b)| (s.label(a).to_string(), s.label(b).to_string()))
            .collect()
    };
    let nilpotency: Vec<(String, usize)> = c
        .nilpotency_index
        .iter()
        .map(|(&a, &k)| (s.label(a).to_string(), k))
        .collect();
    let commutative = s.is_commutative();
    let boolean = c.is_boolean();
    let result = json!({
        "order": s.order(),
        "elements": s.labels(),
        "idempotents": labels(s, &c.idempotents),
        "nilpotents": labels(s, &c.nilpotents),
        "nilidempotents": labels(s, &c.nilidempotents),
        "additively_invertible": labels(s, &c.additively_invertible),
        "additive_inverses": pairs(&c.additive_inverses),
        "center": labels(s, &c.center),
        "units": labels(s, &c.units),
        "unit_inverses": pairs(&c.unit_inverses),
        "nilpotency_index": nilpotency,
        "commutative": commutative,
        "boolean": boolean,
        "nil_in_center": c.nil_in_center(),
        "nil_in_v_cap_z": c.nil_in_invertible_center(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "order {}: {}", s.order(), list(s.labels()));
    for (name, set) in [
        ("idempotents", &c.idempotents),
        ("nilpotents", &c.nilpotents),
        ("nilidempotents", &c.nilidempotents),
        ("additively invertible", &c.additively_invertible),
        ("centre", &c.center),
        ("units", &c.units),
    ] {
        let _ = writeln!(text, "{name} ({}): {}", set.len(), list(&labels(s, set)));
    }
    let _ = writeln!(text, "commutative: {commutative}");
    let _ = writeln!(text, "Boolean: {boolean}");
    (Verdict::Ok, result, text)
}

fn classify_nat() -> (Verdict, Value, String) {
    let m = NatModel;
    let (two, four) = m.non_boolean_witness();
    let idempotents: Vec<String> = m.idempotents().iter().map(|n| n.0.to_string()).collect();
    let window = m.window(10);
    let generated = window.iter().all(|&a| {
        let cert = m.additive_certificate(a);
        cert.iter().all(|&e| m.is_idempotent(e)) && m.sum(&cert) == a
    });
    let nil_window = window.iter().filter(|&&a| m.is_nilpotent(a)).count();
    let result = json!({
        "model": "nat",
        "symbolic": true,
        "idempotents": idempotents,
        "nilpotents": ["0"],
        "commutative": true,
        "boolean": false,
        "non_boolean_witness": { "element": two.0, "square": four.0 },
        "additively_generated_by_idempotents": generated,
        "window": { "bound": 10, "nilpotents": nil_window },
    });
    let text = format!(
        "symbolic model N\nidempotents: {}\nnilpotents: {{0}}\ncommutative: true\nBoolean: false ({}^2 = {})\nadditively generated by idempotents: {generated} (n = 1 + ... + 1)\n",
        list(&idempotents),
        two.0,
        four.0
    );
    (Verdict::Ok, result, text)
}

fn classify_triple() -> (Verdict, Value, String) {
    let m = TripleModel;
    let idempotents: Vec<String> = m.idempotents().iter().map(SymbolicTriple::label).collect();
    let (x, y, xy, yx) = m.non_commuting_witness();
    let window = m.window(10);
    let generated = window.iter().all(|t| m.sum(&m.additive_certificate(t)) == *t);
    let result = json!({
        "model": "nn-triple",
        "symbolic": true,
        "idempotents": idempotents,
        "nilpotents": [m.zero().label()],
        "commutative": false,
        "boolean": false,
        "non_commuting_witness": {
            "a": x.label(), "b": y.label(), "ab": xy.label(), "ba": yx.label(),
        },
        "additively_generated_by_idempotents": generated,
        "orthogonal_complement_of_x": Value::Null,
        "complement_of_x_exists": m.complement_of_x_exists(),
    });
    let text = format!(
        "symbolic model N<x,y> (elements a+bx+cy)\nidempotents: {}\nnilpotents: {{0}}\ncommutative: false (xy = {}, yx = {})\nadditively generated by idempotents: {generated}\nx has an orthogonal complement: {}\n",
        list(&idempotents),
        xy.label(),
        yx.label(),
        m.complement_of_x_exists()
    );
    (Verdict::Ok, result, text)
}

fn certificate_json(s: &FiniteSemiring, cert: &GenerationCertificate) -> Value {
    let expressions: Vec<Value> = cert
        .expressions
        .iter()
        .map(|(&a, expr)| {
            json!({
                "element": s.label(a),
                "factors": expr.iter().map(|&g| s.label(g)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "mode": cert.mode,
        "generator_class": cert.generator_class,
        "generated": cert.generated,
        "expressions": expressions,
        "uncovered": labels(s, &cert.uncovered),
    })
}

fn closure_cmd(source: &Source, mode: ModeArg, class: ClassArg, generators: &[String]) -> Outcome {
    let s = load_finite(source)?;
    let mode = match mode {
        ModeArg::Multiplicative => Mode::Multiplicative,
        ModeArg::Additive => Mode::Additive,
    };
    let op = if mode == Mode::Multiplicative { " * " } else { " + " };
    if !generators.is_empty() {
        let set = ElementSet::from_indices(
            s.order(),
            generators.iter().map(|g| element(&s, g)).collect::<Result<Vec<_>, _>>()?,
        );
        let c = closure(&s, &set, mode);
        let verdict = if c.is_full() { Verdict::Ok } else { Verdict::Absent };
        let result = json!({
            "mode": mode,
            "generators": labels(&s, &set),
            "closure": labels(&s, &c),
            "generates": c.is_full(),
        });
        let text = format!("closure ({}): {}\n", c.len(), list(&labels(&s, &c)));
        return Ok((verdict, result, text));
    }
    let class = match class {
        ClassArg::Idempotents => GeneratorClass::Idempotents,
        ClassArg::Nilidempotents => GeneratorClass::Nilidempotents,
    };
    let cert = generation_certificate(&s, mode, class);
    let mut text = format!("generated: {}\n", cert.generated);
    for (&a, expr) in &cert.expressions {
        let parts: Vec<&str> = expr.iter().map(|&g| s.label(g)).collect();
        let _ = writeln!(text, "{} = {}", s.label(a), parts.join(op));
    }
    if !cert.uncovered.is_empty() {
        let _ = writeln!(text, "uncovered: {}", list(&labels(&s, &cert.uncovered)));
    }
    let verdict = if cert.generated { Verdict::Ok } else { Verdict::Absent };
    Ok((verdict, certificate_json(&s, &cert), text))
}

fn witness_json(s: &FiniteSemiring, w: &ComplementWitness) -> Value {
    json!({
        "e": s.label(w.e),
        "f": s.label(w.f),
        "x": s.label(w.x),
        "kind": w.kind,
    })
}

fn complement(source: &Source, label: &str, kind: KindArg, all: bool) -> Outcome {
    let s = load_finite(source)?;
    let e = element(&s, label)?;
    let found: Vec<ComplementWitness> = match (kind, all) {
        (KindArg::Orthogonal, _) => orthogonal_complement(&s, e).map_err(|e| e.to_string())?.into_iter().collect(),
        (KindArg::Nilorthogonal, false) => {
            nilorthogonal_complement(&s, e).map_err(|e| e.to_string())?.into_iter().collect()
        }
        (KindArg::Nilorthogonal, true) => all_nilorthogonal_complements(&s, e).map_err(|e| e.to_string())?,
    };
    let kind_name = match kind {
        KindArg::Orthogonal => "orthogonal",
        KindArg::Nilorthogonal => "nilorthogonal",
    };
    let mut text = String::new();
    if found.is_empty() {
        let _ = writeln!(text, "{label} has no {kind_name} complement");
    }
    for w in &found {
        let _ = writeln!(text, "f = {}, x = {}", s.label(w.f), s.label(w.x));
    }
    let verdict = if found.is_empty() { Verdict::Absent } else { Verdict::Ok };
    let witnesses: Vec<Value> = found.iter().map(|w| witness_json(&s, w)).collect();
    Ok((verdict, json!({ "element": label, "witnesses": witnesses }), text))
}

fn decompose(source: &Source, label: Option<&str>, max_len: Option<usize>) -> Outcome {
    let s = load_finite(source)?;
    let b = match label {
        Some(l) => element(&s, l)?,
        None => s.one(),
    };
    let found = orthogonal_decompositions(&s, b, max_len.unwrap_or(s.order()));
    let named: Vec<Vec<&str>> = found
        .iter()
        .map(|d| d.iter().map(|&a| s.label(a)).collect())
        .collect();
    let mut text = String::new();
    for d in &named {
        let _ = writeln!(text, "{} = {}", s.label(b), d.join(" + "));
    }
    if named.is_empty() {
        let _ = writeln!(text, "no decomposition of {}", s.label(b));
    }
    let verdict = if named.is_empty() { Verdict::Absent } else { Verdict::Ok };
    Ok((verdict, json!({ "element": s.label(b), "decompositions": named }), text))
}

fn lift(source: &Source, label: &str) -> Outcome {
    let s = load_finite(source)?;
    let g = element(&s, label)?;
    let t = lift_nilidempotent(&s, g).map_err(|e| e.to_string())?;
    let l = |a: usize| s.label(a).to_string();
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|st| json!({ "g": l(st.g), "z": l(st.z), "w": l(st.w) }))
        .collect();
    let mut text = format!("g0 = {}, defect z0 = {}\n", l(t.g0), l(t.z0));
    for (k, st) in t.steps.iter().enumerate() {
        let _ = writeln!(text, "step {}: g = {}, z = {}, w = {}", k + 1, l(st.g), l(st.z), l(st.w));
    }
    let _ = writeln!(
        text,
        "f = {} (idempotent), correction = {}, {} iteration(s)",
        l(t.f),
        l(t.correction),
        t.iterations
    );
    let result = json!({
        "g0": l(t.g0),
        "z0": l(t.z0),
        "steps": steps,
        "f": l(t.f),
        "correction": l(t.correction),
        "iterations": t.iterations,
    });
    Ok((Verdict::Ok, result, text))
}

fn invert(source: &Source, label: &str) -> Outcome {
    let s = load_finite(source)?;
    let x = element(&s, label)?;
    let y = invert_unipotent(&s, x).map_err(|e| e.to_string())?;
    let unit = s.add(s.one(), x);
    let text = format!("(1 + {label})^-1 = {}^-1 = {}\n", s.label(unit), s.label(y));
    Ok((
        Verdict::Ok,
        json!({ "x": label, "unit": s.label(unit), "inverse": s.label(y) }),
        text,
    ))
}

fn peirce(source: &Source) -> Outcome {
    let s = load_finite(source)?;
    let p = peirce_decompose(&s).map_err(|e| e.to_string())?;
    let mut text = format!(
        "{} primitive idempotent(s): {}\n",
        p.primitives.len(),
        list(&p.primitives.iter().map(|&e| s.label(e).to_string()).collect::<Vec<_>>())
    );
    let factors: Vec<Value> = p
        .factors
        .iter()
        .map(|f| {
            let _ = writeln!(
                text,
                "factor {}S: order {}, {}",
                s.label(f.idempotent),
                f.semiring.order(),
                f.classification.name()
            );
            json!({
                "idempotent": s.label(f.idempotent),
                "order": f.semiring.order(),
                "elements": f.semiring.labels(),
                "add": f.semiring.add_rows(),
                "mul": f.semiring.mul_rows(),
                "classification": f.classification.name(),
            })
        })
        .collect();
    let map: Vec<Value> = s
        .elements()
        .map(|a| {
            let image: Vec<&str> = p
                .factors
                .iter()
                .zip(&p.iso[a])
                .map(|(f, &i)| f.semiring.label(i))
                .collect();
            json!({ "element": s.label(a), "image": image })
        })
        .collect();
    let _ = writeln!(text, "isomorphism onto the product verified");
    Ok((
        Verdict::Ok,
        json!({
            "primitives": p.primitives.iter().map(|&e| s.label(e)).collect::<Vec<_>>(),
            "factors": factors,
            "isomorphism": map,
            "verified": true,
        }),
        text,
    ))
}

fn iso(source: &Source, with_file: &Option<PathBuf>, with_preset: &Option<String>) -> Outcome {
    let s = load_finite(source)?;
    let t = match load(with_file, with_preset) {
        Ok(Loaded::Finite(t)) => t,
        Ok(_) => return Err("symbolic models support only `classify`".into()),
        Err(_) if with_file.is_none() && with_preset.is_none() => {
            return Err("a second input is required: pass --with-file PATH or --with-preset NAME".into())
        }
        Err(e) => return Err(e),
    };
    match isomorphic(&s, &t) {
        Some(map) => {
            let pairs: Vec<(String, String)> = map
                .iter()
                .enumerate()
                .map(|(a, &b)| (s.label(a).to_string(), t.label(b).to_string()))
                .collect();
            let mut text = String::from("isomorphic\n");
            for (a, b) in &pairs {
                let _ = writeln!(text, "{a} -> {b}");
            }
            Ok((Verdict::Ok, json!({ "isomorphic": true, "map": pairs }), text))
        }
        None => Ok((
            Verdict::Absent,
            json!({ "isomorphic": false, "map": Value::Null }),
            "not isomorphic\n".into(),
        )),
    }
}

fn check_json(s: &FiniteSemiring, c: &Check) -> Value {
    json!({
        "name": c.name,
        "holds": c.holds,
        "witness": c.witness.as_ref().map(|w| w.iter().map(|&a| s.label(a)).collect::<Vec<_>>()),
    })
}

fn check_text(s: &FiniteSemiring, c: &Check, out: &mut String) {
    let mark = if c.holds { "yes" } else { "no" };
    let _ = write!(out, "  [{mark}] {}", c.name);
    if let Some(w) = &c.witness {
        let names: Vec<&str> = w.iter().map(|&a| s.label(a)).collect();
        let _ = write!(out, " (witness {})", names.join(", "));
    }
    out.push('\n');
}

fn report_json(s: &FiniteSemiring, r: &TheoremReport) -> Value {
    json!({
        "theorem": r.theorem.id(),
        "verdict": r.verdict,
        "hypotheses": r.hypotheses.iter().map(|c| check_json(s, c)).collect::<Vec<_>>(),
        "conclusions": r.conclusions.iter().map(|c| check_json(s, c)).collect::<Vec<_>>(),
    })
}

fn combine(verdicts: &[TheoremVerdict]) -> Verdict {
    if verdicts.contains(&TheoremVerdict::Violation) {
        Verdict::Violation
    } else if verdicts.iter().all(|&v| v == TheoremVerdict::Confirmed) {
        Verdict::Confirmed
    } else if verdicts.iter().all(|&v| v == TheoremVerdict::Vacuous) {
        Verdict::Vacuous
    } else {
        Verdict::Ok
    }
}

fn check(source: &Source, theorem: &str) -> Outcome {
    let ids = theorems(theorem)?;
    let s = load_finite(source)?;
    let reports: Vec<TheoremReport> = ids.iter().map(|&t| check_theorem(&s, t)).collect();
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{}: {}", r.theorem, r.verdict);
        text.push_str(" hypotheses\n");
        for c in &r.hypotheses {
            check_text(&s, c, &mut text);
        }
        text.push_str(" conclusions\n");
        for c in &r.conclusions {
            check_text(&s, c, &mut text);
        }
    }
    let verdicts: Vec<TheoremVerdict> = reports.iter().map(|r| r.verdict).collect();
    let result = json!({ "reports": reports.iter().map(|r| report_json(&s, r)).collect::<Vec<_>>() });
    Ok((combine(&verdicts), result, text))
}

fn census(min: usize, max: usize, theorem: &str, include_trivial: bool, workers: Option<usize>) -> Outcome {
    let ids = theorems(theorem)?;
    if min == 0 || min > max {
        return Err(format!("empty order range {min}..={max}"));
    }
    if max > DEFAULT_MAX_ORDER {
        return Err(format!("order {max} is above the enumeration maximum {DEFAULT_MAX_ORDER}"));
    }
    let config = CensusConfig {
        max_order: DEFAULT_MAX_ORDER,
        include_trivial,
        workers,
    };
    let orders: Vec<usize> = (min..=max).collect();
    let r = scan(&orders, &ids, &config).map_err(|e| e.to_string())?;
    let total: usize = r.counts.values().sum();
    let mut text = String::new();
    for (order, count) in &r.counts {
        let _ = writeln!(text, "order {order}: {count} semiring(s)");
    }
    let _ = writeln!(text, "total: {total}");
    for (t, tally) in &r.tallies {
        let _ = writeln!(text, "{t}: {} confirmed, {} vacuous", tally.confirmed, tally.vacuous);
    }
    let _ = writeln!(text, "violations: {}", r.violations.len());
    for v in &r.violations {
        let _ = writeln!(text, "VIOLATION of {}:\n{}", v.theorem, serialize_semiring(&v.semiring));
    }
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            json!({
                "theorem": v.theorem.id(),
                "semiring": serialize_semiring(&v.semiring),
                "report": report_json(&v.semiring, &v.report),
            })
        })
        .collect();
    let tallies: serde_json::Map<String, Value> = r
        .tallies
        .iter()
        .map(|(t, tally)| (t.id().to_string(), json!(tally)))
        .collect();
    let counts: serde_json::Map<String, Value> =
        r.counts.iter().map(|(o, c)| (o.to_string(), json!(c))).collect();
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "order": e.order,
                "key": e.key,
                "flags": e.flags,
                "verdicts": e.verdicts.iter().map(|(t, v)| (t.id().to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
            })
        })
        .collect();
    let result = json!({
        "orders": r.orders,
        "include_trivial": r.include_trivial,
        "theorems": ids.iter().map(|t| t.id()).collect::<Vec<_>>(),
        "counts": counts,
        "total": total,
        "tallies": tallies,
        "entries": entries,
        "violations": violations,
    });
    let verdict = if r.violations.is_empty() { Verdict::Ok } else { Verdict::Violation };
    Ok((verdict, result, text))
}

fn build(
    name: Option<String>,
    generators: &[String],
    relations: &[String],
    idempotent_addition: bool,
    bound: usize,
    output: Option<PathBuf>,
) -> Outcome {
    let mut collapsed = Vec::new();
    let (s, extra) = match name {
        Some(name) => (preset(&name).map_err(|e| e.to_string())?, Value::Null),
        None => {
            let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
            let rels: Vec<&str> = relations.iter().map(String::as_str).collect();
            let p = Presentation::parse(&gens, &rels, idempotent_addition, bound).map_err(|e| e.to_string())?;
            let r = presentation(&p).map_err(|e| e.to_string())?;
            let info = json!({
                "status": r.status,
                "collapsed_generators": r.collapsed_generators,
                "universe_bound": r.universe_bound,
            });
            collapsed = r.collapsed_generators;
            match (r.status, r.semiring) {
                (PresentationStatus::Finite, Some(s)) => (s, info),
                _ => {
                    let text = format!("presentation exceeds the universe bound {}\n", r.universe_bound);
                    return Ok((Verdict::Absent, json!({ "presentation": info, "file": Value::Null }), text));
                }
            }
        }
    };
    let document = serialize_semiring(&s);
    let mut text = String::new();
    for (g, image) in &collapsed {
        let _ = writeln!(text, "# generator {g} collapsed to {image}");
    }
    match &output {
        Some(path) => {
            std::fs::write(path, &document).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            let _ = writeln!(text, "wrote {} ({} elements)", path.display(), s.order());
        }
        None => text.push_str(&document),
    }
    let result = json!({
        "order": s.order(),
        "file": document,
        "output": output.map(|p| p.display().to_string()),
        "presentation": extra,
    });
    Ok((Verdict::Ok, result, text))
}
