//! Symbolic inference engine for fixed points of mapping class group actions.
//!
//! A certificate is a list of rule applications. Instead of one node per
//! curve subset it carries one schema node per (subset size, enclosure
//! class); the verifier closes the gap by enumerating subsets when the genus
//! is small enough.

pub mod count;
mod derive;
mod verify;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::curve::Curve;

pub use count::{count_inequality, CountError, CountInstance};
pub use derive::{
    connected_step, derive, derive_kg, derive_main, derive_technical, genus1_step, DeriveOptions,
    MainVariant, RuleApp,
};
pub use verify::{
    verify, verify_detailed, VerifyOptions, VerifyOutcome, Violation, DEFAULT_EXHAUSTIVE_GENUS,
    EXHAUSTIVE_GENUS_CAP,
};

pub const VERSION: &str = concat!("mcgfix ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Technical,
    Main,
    Kg,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Technical => "technical",
            Theorem::Main => "main",
            Theorem::Kg => "kg",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "technical" => Ok(Theorem::Technical),
            "main" => Ok(Theorem::Main),
            "kg" => Ok(Theorem::Kg),
            _ => Err(format!("unknown theorem {s:?}")),
        }
    }
}

/// Facts tracked but not proved by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "HANDLE_SEPARATING_TWIST_ELLIPTIC")]
    HandleSeparatingTwistElliptic,
    #[serde(rename = "R_TORSION")]
    RTorsion,
    #[serde(rename = "HELLY")]
    Helly,
    #[serde(rename = "ORBIT_TRANSITIVITY")]
    OrbitTransitivity,
    #[serde(rename = "SL2Z_TORSION_GENERATION")]
    Sl2zTorsionGeneration,
    #[serde(rename = "SEMISIMPLE")]
    Semisimple,
    #[serde(rename = "NO_NEUTRAL_PARABOLICS")]
    NoNeutralParabolics,
    #[serde(rename = "FINITE_ABELIANIZATION")]
    FiniteAbelianization,
    #[serde(rename = "L1LOOP")]
    L1Loop,
    #[serde(rename = "SEPARATING_TWISTS_IN_KERNEL")]
    SeparatingTwistsInKernel,
    #[serde(rename = "R_TREE")]
    RTree,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::HandleSeparatingTwistElliptic,
        Axiom::RTorsion,
        Axiom::Helly,
        Axiom::OrbitTransitivity,
        Axiom::Sl2zTorsionGeneration,
        Axiom::Semisimple,
        Axiom::NoNeutralParabolics,
        Axiom::FiniteAbelianization,
        Axiom::L1Loop,
        Axiom::SeparatingTwistsInKernel,
        Axiom::RTree,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Axiom::HandleSeparatingTwistElliptic => "HANDLE_SEPARATING_TWIST_ELLIPTIC",
            Axiom::RTorsion => "R_TORSION",
            Axiom::Helly => "HELLY",
            Axiom::OrbitTransitivity => "ORBIT_TRANSITIVITY",
            Axiom::Sl2zTorsionGeneration => "SL2Z_TORSION_GENERATION",
            Axiom::Semisimple => "SEMISIMPLE",
            Axiom::NoNeutralParabolics => "NO_NEUTRAL_PARABOLICS",
            Axiom::FiniteAbelianization => "FINITE_ABELIANIZATION",
            Axiom::L1Loop => "L1LOOP",
            Axiom::SeparatingTwistsInKernel => "SEPARATING_TWISTS_IN_KERNEL",
            Axiom::RTree => "R_TREE",
        }
    }

    /// What the axiom says about the isometry class of a twist in a
    /// handle-separating curve.
    pub fn effect(self) -> Option<ClassEffect> {
        use IsometryClassTag::*;
        match self {
            Axiom::HandleSeparatingTwistElliptic => Some(ClassEffect::Restrict(vec![Elliptic])),
            Axiom::L1Loop => Some(ClassEffect::Restrict(vec![Elliptic, NeutralParabolic])),
            Axiom::Semisimple => Some(ClassEffect::Remove(vec![
                NeutralParabolic,
                NonNeutralParabolic,
            ])),
            Axiom::NoNeutralParabolics => Some(ClassEffect::Remove(vec![NeutralParabolic])),
            Axiom::SeparatingTwistsInKernel => Some(ClassEffect::Restrict(vec![FiniteOrder])),
            Axiom::RTorsion => Some(ClassEffect::FiniteOrderIsElliptic),
            _ => None,
        }
    }

    /// Axioms that must be cited alongside this one.
    pub fn requires(self) -> &'static [Axiom] {
        match self {
            Axiom::L1Loop => &[Axiom::FiniteAbelianization],
            _ => &[],
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| format!("unknown axiom {s:?}"))
    }
}

/// Symbolic classification of an isometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsometryClassTag {
    Elliptic,
    Hyperbolic,
    NeutralParabolic,
    NonNeutralParabolic,
    FiniteOrder,
}

impl IsometryClassTag {
    pub const ALL: [IsometryClassTag; 5] = [
        IsometryClassTag::Elliptic,
        IsometryClassTag::Hyperbolic,
        IsometryClassTag::NeutralParabolic,
        IsometryClassTag::NonNeutralParabolic,
        IsometryClassTag::FiniteOrder,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassEffect {
    Restrict(Vec<IsometryClassTag>),
    Remove(Vec<IsometryClassTag>),
    FiniteOrderIsElliptic,
}

impl ClassEffect {
    pub fn apply(&self, classes: &BTreeSet<IsometryClassTag>) -> BTreeSet<IsometryClassTag> {
        match self {
            ClassEffect::Restrict(keep) => {
                classes.iter().copied().filter(|c| keep.contains(c)).collect()
            }
            ClassEffect::Remove(drop) => {
                classes.iter().copied().filter(|c| !drop.contains(c)).collect()
            }
            ClassEffect::FiniteOrderIsElliptic => classes
                .iter()
                .map(|&c| {
                    if c == IsometryClassTag::FiniteOrder {
                        IsometryClassTag::Elliptic
                    } else {
                        c
                    }
                })
                .collect(),
        }
    }
}

/// Axioms consumed by a certificate.
pub fn theorem_axioms(theorem: Theorem, genus: u32, variant: MainVariant) -> Vec<Axiom> {
    if genus == 2 {
        return vec![Axiom::RTree];
    }
    let mut out = theorem_hypotheses(theorem, variant);
    if theorem == Theorem::Main {
        out.push(Axiom::L1Loop);
    }
    out.extend([
        Axiom::RTorsion,
        Axiom::Helly,
        Axiom::OrbitTransitivity,
        Axiom::Sl2zTorsionGeneration,
    ]);
    out
}

/// Hypotheses of the theorem as stated.
pub fn theorem_hypotheses(theorem: Theorem, variant: MainVariant) -> Vec<Axiom> {
    match theorem {
        Theorem::Technical => vec![Axiom::HandleSeparatingTwistElliptic],
        Theorem::Main => vec![
            match variant {
                MainVariant::Semisimple => Axiom::Semisimple,
                MainVariant::NoNeutralParabolics => Axiom::NoNeutralParabolics,
            },
            Axiom::FiniteAbelianization,
        ],
        Theorem::Kg => vec![Axiom::SeparatingTwistsInKernel],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Context {
    pub genus: u32,
    pub dim: u32,
    pub hypotheses: Vec<Axiom>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum JudgmentForm {
    /// The twists in `set` have a common fixed point.
    Elliptic { set: Vec<Curve> },
    /// The named subgroup has a fixed point.
    EllipticSubgroup { subgroup: String },
    /// Every finite subset of the twists in `set` has a common fixed point.
    AllFiniteSubsetsElliptic { set: Vec<Curve> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Judgment {
    pub statement: JudgmentForm,
    pub context: Context,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub genus: u32,
    pub dim: u32,
    pub theorem: Theorem,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub id: usize,
    pub rule: String,
    pub params: Value,
    pub premises: Vec<usize>,
    pub witnesses: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub header: Header,
    pub axioms: Vec<Axiom>,
    pub nodes: Vec<Node>,
    pub conclusion: Judgment,
}

impl Certificate {
    /// Pretty JSON with sorted keys; identical input gives identical bytes.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FailureCode {
    DimTooLarge,
    DimCheckFailed,
    ClassifierFailed,
    Precondition,
}

impl FailureCode {
    pub fn name(self) -> &'static str {
        match self {
            FailureCode::DimTooLarge => "DIM_TOO_LARGE",
            FailureCode::DimCheckFailed => "DIM_CHECK_FAILED",
            FailureCode::ClassifierFailed => "CLASSIFIER_FAILED",
            FailureCode::Precondition => "PRECONDITION",
        }
    }
}

/// Why a derivation could not be completed, naming the blocked rule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivationFailure {
    pub code: FailureCode,
    pub rule: String,
    pub params: Value,
    pub message: String,
}

impl fmt::Display for DerivationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {} ({})",
            self.code.name(),
            self.rule,
            self.message,
            self.params
        )
    }
}

impl std::error::Error for DerivationFailure {}
