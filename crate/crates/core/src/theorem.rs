//! Hypothesis/conclusion checks for the four generation theorems.
//!
//! | id            | hypotheses                                                           | conclusions            |
//! |---------------|----------------------------------------------------------------------|------------------------|
//! | `main`        | mult. generated by idempotents; orthogonal complements               | commutative, Boolean   |
//! | `main2`       | mult. generated by idempotents; nilorthogonal complements; Nil ⊆ V∩Z | commutative, Boolean   |
//! | `mainnilid`   | mult. generated by nilidempotents; nilorthogonal complements; Nil ⊆ V∩Z | commutative         |
//! | `additivecom` | add. generated by idempotents; orthogonal complements; Nil ⊆ Z      | commutative            |

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classes::ClassReport;
use crate::closure::{certificate_for, GeneratorClass, Mode};
use crate::complement::{nilorthogonal_iter, orthogonal_complement_unchecked};
use crate::error::Error;
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Main,
    Main2,
    MainNilid,
    AdditiveCom,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::Main,
        Theorem::Main2,
        Theorem::MainNilid,
        Theorem::AdditiveCom,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::Main2 => "main2",
            Theorem::MainNilid => "mainnilid",
            Theorem::AdditiveCom => "additivecom",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

pub const MULT_GEN_IDEMPOTENTS: &str = "multiplicatively generated by idempotents";
pub const MULT_GEN_NILIDEMPOTENTS: &str = "multiplicatively generated by nilidempotents";
pub const ADD_GEN_IDEMPOTENTS: &str = "additively generated by idempotents";
pub const ORTHOGONAL_COMPLEMENTS: &str = "every idempotent has an orthogonal complement";
pub const NILORTHOGONAL_COMPLEMENTS: &str = "every idempotent has a nilorthogonal complement";
pub const NIL_IN_CENTER: &str = "Nil ⊆ Z";
pub const NIL_IN_V_CAP_Z: &str = "Nil ⊆ V ∩ Z";
pub const COMMUTATIVE: &str = "commutative";
pub const BOOLEAN: &str = "Boolean";

/// One evaluated statement. `witness` names the elements exhibiting a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    fn from_witness(name: &'static str, witness: Option<Vec<usize>>) -> Self {
        Check {
            name,
            holds: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Vacuous,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Vacuous => "vacuous",
            Verdict::Violation => "VIOLATION",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub hypotheses: Vec<Check>,
    pub conclusions: Vec<Check>,
    pub verdict: Verdict,
}

impl TheoremReport {
    pub fn hypothesis(&self, name: &str) -> Option<&Check> {
        self.hypotheses.iter().find(|c| c.name == name)
    }

    pub fn conclusion(&self, name: &str) -> Option<&Check> {
        self.conclusions.iter().find(|c| c.name == name)
    }
}

/// Every statement the four theorems mention, evaluated once per semiring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub classes: ClassReport,
    pub mult_gen_idempotents: Check,
    pub mult_gen_nilidempotents: Check,
    pub add_gen_idempotents: Check,
    pub orthogonal_complements: Check,
    pub nilorthogonal_complements: Check,
    pub nil_in_center: Check,
    pub nil_in_v_cap_z: Check,
    pub commutative: Check,
    pub boolean: Check,
}

impl Profile {
    pub fn compute(s: &FiniteSemiring) -> Self {
        let classes = s.classify();
        let generation = |mode, class, generators| {
            certificate_for(s, mode, class, generators)
                .uncovered
                .first()
                .map(|a| vec![a])
        };
        let mult_gen_idempotents = Check::from_witness(
            MULT_GEN_IDEMPOTENTS,
            generation(Mode::Multiplicative, GeneratorClass::Idempotents, &classes.idempotents),
        );
        let mult_gen_nilidempotents = Check::from_witness(
            MULT_GEN_NILIDEMPOTENTS,
            generation(
                Mode::Multiplicative,
                GeneratorClass::Nilidempotents,
                &classes.nilidempotents,
            ),
        );
        let add_gen_idempotents = Check::from_witness(
            ADD_GEN_IDEMPOTENTS,
            generation(Mode::Additive, GeneratorClass::Idempotents, &classes.idempotents),
        );
        let orthogonal_complements = Check::from_witness(
            ORTHOGONAL_COMPLEMENTS,
            classes
                .idempotents
                .iter()
                .find(|&e| orthogonal_complement_unchecked(s, e).is_none())
                .map(|e| vec![e]),
        );
        let nilorthogonal_complements = Check::from_witness(
            NILORTHOGONAL_COMPLEMENTS,
            classes
                .idempotents
                .iter()
                .find(|&e| nilorthogonal_iter(s, &classes, e).next().is_none())
                .map(|e| vec![e]),
        );
        let nil_in_center = Check::from_witness(
            NIL_IN_CENTER,
            classes
                .nilpotents
                .difference(&classes.center)
                .first()
                .map(|x| vec![x]),
        );
        let nil_in_v_cap_z = Check::from_witness(
            NIL_IN_V_CAP_Z,
            classes
                .nilpotents
                .difference(&classes.center.intersection(&classes.additively_invertible))
                .first()
                .map(|x| vec![x]),
        );
        let commutative = Check::from_witness(
            COMMUTATIVE,
            s.non_commuting_pair().map(|(a, b)| vec![a, b]),
        );
        let boolean = Check::from_witness(
            BOOLEAN,
            s.elements().find(|&a| !s.is_idempotent(a)).map(|a| vec![a]),
        );
        Profile {
            classes,
            mult_gen_idempotents,
            mult_gen_nilidempotents,
            add_gen_idempotents,
            orthogonal_complements,
            nilorthogonal_complements,
            nil_in_center,
            nil_in_v_cap_z,
            commutative,
            boolean,
        }
    }

    pub fn report(&self, theorem: Theorem) -> TheoremReport {
        let hypotheses = match theorem {
            Theorem::Main => vec![
                self.mult_gen_idempotents.clone(),
                self.orthogonal_complements.clone(),
            ],
            Theorem::Main2 => vec![
                self.mult_gen_idempotents.clone(),
                self.nilorthogonal_complements.clone(),
                self.nil_in_v_cap_z.clone(),
            ],
            Theorem::MainNilid => vec![
                self.mult_gen_nilidempotents.clone(),
                self.nilorthogonal_complements.clone(),
                self.nil_in_v_cap_z.clone(),
            ],
            Theorem::AdditiveCom => vec![
                self.add_gen_idempotents.clone(),
                self.orthogonal_complements.clone(),
                self.nil_in_center.clone(),
            ],
        };
        let conclusions = match theorem {
            Theorem::Main | Theorem::Main2 => vec![self.commutative.clone(), self.boolean.clone()],
            Theorem::MainNilid | Theorem::AdditiveCom => vec![self.commutative.clone()],
        };
        let verdict = if !hypotheses.iter().all(|c| c.holds) {
            Verdict::Vacuous
        } else if conclusions.iter().all(|c| c.holds) {
            Verdict::Confirmed
        } else {
            Verdict::Violation
        };
        TheoremReport {
            theorem,
            hypotheses,
            conclusions,
            verdict,
        }
    }
}

pub fn check_theorem(s: &FiniteSemiring, theorem: Theorem) -> TheoremReport {
    Profile::compute(s).report(theorem)
}
