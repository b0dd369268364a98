//! Enclosure claims for connected curve sets: chains are handled directly,
//! everything else through the shortest interval whose support contains it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::interval::{enclosure_bound, extended_support, Interval, IntervalKind};
use super::{lambda, separating_chain, Lambda};
use crate::curve::{Curve, CurveError, CurveSet};
use crate::surface::{FitKind, SurfaceType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("the curve set is empty")]
    Empty,
    #[error("the curve set {0} is not connected")]
    Disconnected(String),
    #[error("the curve set {0} is not a chain")]
    NotChain(String),
    #[error("the curve set {0} is a chain")]
    IsChain(String),
    #[error("no interval with chain length below {size} contains {set}")]
    NoEnclosingInterval { set: String, size: usize },
    #[error("interval {interval} bound ({genus}, {boundary}) fits no canonical type for {set}")]
    ClassifierFailed {
        set: String,
        interval: Interval,
        genus: u32,
        boundary: u32,
    },
}

/// Canonical subsurface types a claim is normalised to, with ℓ = ⌊|S|/2⌋.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimClass {
    /// Σ_{ℓ,1}.
    OneBoundary,
    /// Non-separating Σ_{ℓ-1,3}.
    ThreeBoundary,
    /// Non-separating Σ_{ℓ,2}.
    TwoBoundary,
}

impl ClaimClass {
    pub const ALL: [ClaimClass; 3] = [
        ClaimClass::OneBoundary,
        ClaimClass::ThreeBoundary,
        ClaimClass::TwoBoundary,
    ];

    pub fn fit_kind(self) -> FitKind {
        match self {
            ClaimClass::OneBoundary => FitKind::Fit1,
            ClaimClass::ThreeBoundary => FitKind::Fit2,
            ClaimClass::TwoBoundary => FitKind::Fit3,
        }
    }

    pub fn surface_type(self, ell: u32) -> Option<SurfaceType> {
        self.fit_kind().piece_type(ell)
    }

    pub fn nonseparating(self) -> bool {
        !matches!(self, ClaimClass::OneBoundary)
    }

    pub fn name(self) -> &'static str {
        match self {
            ClaimClass::OneBoundary => "one-boundary",
            ClaimClass::ThreeBoundary => "three-boundary",
            ClaimClass::TwoBoundary => "two-boundary",
        }
    }

    /// Classes the normalisation can produce for sets of the given size.
    pub fn for_size(size: usize) -> &'static [ClaimClass] {
        if size % 2 == 0 {
            &ClaimClass::ALL[..2]
        } else {
            &ClaimClass::ALL
        }
    }
}

impl std::str::FromStr for ClaimClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim class {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    EvenChain,
    OddChain,
    SeparatingChain,
    IntervalOneBoundary,
    IntervalThreeBoundary,
    IntervalTwoBoundary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnclosureClaim {
    pub size: usize,
    pub ell: u32,
    pub genus_bound: u32,
    pub boundary_bound: u32,
    pub nonseparating_required: bool,
    pub class: ClaimClass,
    pub case_tag: CaseTag,
    pub interval: Option<Interval>,
    /// Curve set whose filled neighbourhood realises the claim.
    pub support: CurveSet,
}

impl EnclosureClaim {
    fn new(
        s: &CurveSet,
        class: ClaimClass,
        case_tag: CaseTag,
        interval: Option<Interval>,
        support: CurveSet,
    ) -> Self {
        let ell = (s.len() / 2) as u32;
        let (genus_bound, boundary_bound) = match class {
            ClaimClass::OneBoundary => (ell, 1),
            ClaimClass::ThreeBoundary => (ell - 1, 3),
            ClaimClass::TwoBoundary => (ell, 2),
        };
        EnclosureClaim {
            size: s.len(),
            ell,
            genus_bound,
            boundary_bound,
            nonseparating_required: class.nonseparating(),
            class,
            case_tag,
            interval,
            support,
        }
    }
}

/// Per-genus classifier with the interval candidates precomputed.
#[derive(Debug, Clone)]
pub struct Classifier {
    lambda: Lambda,
    /// (interval, support mask), sorted by (chain length, kind, i, j).
    candidates: Vec<(Interval, u64)>,
}

impl Classifier {
    pub fn new(genus: u32) -> Result<Self, ClassifyError> {
        let lambda = lambda(genus)?;
        let mut candidates: Vec<(Interval, u64)> = Interval::all(genus)
            .into_iter()
            .map(|iv| (iv, extended_support(&iv, genus).unwrap().bits()))
            .collect();
        candidates.sort_by_key(|(iv, _)| (iv.chain_length(), iv.kind, iv.i, iv.j));
        Ok(Classifier { lambda, candidates })
    }

    pub fn genus(&self) -> u32 {
        self.lambda.genus()
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    fn check(&self, s: &CurveSet) -> Result<(), ClassifyError> {
        if s.genus() != self.genus() {
            return Err(CurveError::GenusMismatch(s.genus(), self.genus()).into());
        }
        if s.is_empty() {
            return Err(ClassifyError::Empty);
        }
        if !self.lambda.is_connected(s) {
            return Err(ClassifyError::Disconnected(s.to_string()));
        }
        Ok(())
    }

    pub fn classify_chain(&self, s: &CurveSet) -> Result<EnclosureClaim, ClassifyError> {
        self.check(s)?;
        let order = self
            .lambda
            .chain_order(s)
            .ok_or_else(|| ClassifyError::NotChain(s.to_string()))?;
        if s.len() % 2 == 0 {
            return Ok(EnclosureClaim::new(
                s,
                ClaimClass::OneBoundary,
                CaseTag::EvenChain,
                None,
                *s,
            ));
        }
        if let (Some(&Curve::Alpha(a)), Some(&Curve::Alpha(b))) = (order.first(), order.last()) {
            let (i, j) = (a.min(b), a.max(b));
            if i < j && separating_chain(self.genus(), i, j) == *s {
                let iv = Interval::new(IntervalKind::AA, i, j, self.genus()).unwrap();
                let support = extended_support(&iv, self.genus()).unwrap();
                return Ok(EnclosureClaim::new(
                    s,
                    ClaimClass::OneBoundary,
                    CaseTag::SeparatingChain,
                    Some(iv),
                    support,
                ));
            }
        }
        Ok(EnclosureClaim::new(
            s,
            ClaimClass::TwoBoundary,
            CaseTag::OddChain,
            None,
            *s,
        ))
    }

    /// Shortest interval whose extended support contains S, for connected
    /// non-chains. Fails if none has chain length below |S|.
    pub fn enclosing_interval(&self, s: &CurveSet) -> Result<(Interval, usize), ClassifyError> {
        self.check(s)?;
        if self.lambda.is_chain_bits(s.bits()) {
            return Err(ClassifyError::IsChain(s.to_string()));
        }
        let bits = s.bits();
        self.candidates
            .iter()
            .take_while(|(iv, _)| iv.chain_length() < s.len())
            .find(|(_, support)| bits & !support == 0)
            .map(|(iv, _)| (*iv, iv.chain_length()))
            .ok_or_else(|| ClassifyError::NoEnclosingInterval {
                set: s.to_string(),
                size: s.len(),
            })
    }

    pub fn classify(&self, s: &CurveSet) -> Result<EnclosureClaim, ClassifyError> {
        self.check(s)?;
        if self.lambda.is_chain_bits(s.bits()) {
            return self.classify_chain(s);
        }
        let (iv, _) = self.enclosing_interval(s)?;
        let (h, b) = enclosure_bound(&iv);
        let ell = (s.len() / 2) as u32;
        let (class, tag) = if b <= 1 && h <= ell {
            (ClaimClass::OneBoundary, CaseTag::IntervalOneBoundary)
        } else if h < ell && b <= 3 {
            (ClaimClass::ThreeBoundary, CaseTag::IntervalThreeBoundary)
        } else if s.len() % 2 == 1 && h <= ell && b <= 2 {
            (ClaimClass::TwoBoundary, CaseTag::IntervalTwoBoundary)
        } else {
            return Err(ClassifyError::ClassifierFailed {
                set: s.to_string(),
                interval: iv,
                genus: h,
                boundary: b,
            });
        };
        let support = extended_support(&iv, self.genus()).unwrap();
        Ok(EnclosureClaim::new(s, class, tag, Some(iv), support))
    }
}

pub fn classify_chain(s: &CurveSet, genus: u32) -> Result<EnclosureClaim, ClassifyError> {
    Classifier::new(genus)?.classify_chain(s)
}

pub fn enclosing_interval(s: &CurveSet) -> Result<(Interval, usize), ClassifyError> {
    Classifier::new(s.genus())?.enclosing_interval(s)
}

pub fn size_classify(s: &CurveSet, genus: u32) -> Result<EnclosureClaim, ClassifyError> {
    Classifier::new(genus)?.classify(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: u32, list: &str) -> CurveSet {
        CurveSet::parse(g, list).unwrap()
    }

    fn triple(c: &EnclosureClaim) -> (u32, u32, bool) {
        (c.genus_bound, c.boundary_bound, c.nonseparating_required)
    }

    #[test]
    fn chain_claims() {
        let c = classify_chain(&set(2, "a1,b1"), 2).unwrap();
        assert_eq!((c.genus_bound, c.boundary_bound), (1, 1));
        let c = classify_chain(&set(2, "a1,b1,g1,b2,a2"), 2).unwrap();
        assert_eq!(c.case_tag, CaseTag::SeparatingChain);
        assert_eq!((c.genus_bound, c.boundary_bound), (2, 1));
        let c = classify_chain(&set(3, "b1,g1,b2"), 3).unwrap();
        assert_eq!(triple(&c), (1, 2, true));
        assert!(matches!(
            classify_chain(&set(3, "a2,b2,g1,g2"), 3),
            Err(ClassifyError::NotChain(_))
        ));
    }

    #[test]
    fn star_encloses_in_gamma_interval() {
        let s = set(3, "a2,b2,g1,g2");
        let (iv, m) = enclosing_interval(&s).unwrap();
        assert_eq!(iv, Interval::new(IntervalKind::GG, 1, 2, 3).unwrap());
        assert_eq!(m, 3);
        let c = size_classify(&s, 3).unwrap();
        assert_eq!(triple(&c), (1, 3, true));
    }

    #[test]
    fn size_examples() {
        let c = size_classify(&set(3, "a1,b1,g1,b2,a2"), 3).unwrap();
        assert_eq!((c.genus_bound, c.boundary_bound), (2, 1));
        let c = size_classify(&set(3, "a1,b1"), 3).unwrap();
        assert_eq!((c.genus_bound, c.boundary_bound), (1, 1));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            enclosing_interval(&set(3, "a1,b1,g1")),
            Err(ClassifyError::IsChain(_))
        ));
        assert!(matches!(
            size_classify(&set(3, "a1,a2"), 3),
            Err(ClassifyError::Disconnected(_))
        ));
        assert_eq!(
            size_classify(&CurveSet::empty(3), 3),
            Err(ClassifyError::Empty)
        );
    }

    #[test]
    fn every_connected_set_gets_a_canonical_claim() {
        for g in 2..=5 {
            let cl = Classifier::new(g).unwrap();
            for bits in cl.lambda().subset_masks() {
                let s = CurveSet::from_bits(g, bits);
                if !cl.lambda().is_connected(&s) {
                    continue;
                }
                let c = cl.classify(&s).unwrap();
                let ell = (s.len() / 2) as u32;
                assert!(c.support.bits() & bits == bits);
                assert!(ClaimClass::for_size(s.len()).contains(&c.class));
                let expect = match c.class {
                    ClaimClass::OneBoundary => (ell, 1),
                    ClaimClass::ThreeBoundary => (ell - 1, 3),
                    ClaimClass::TwoBoundary => (ell, 2),
                };
                assert_eq!((c.genus_bound, c.boundary_bound), expect);
            }
        }
    }
}
