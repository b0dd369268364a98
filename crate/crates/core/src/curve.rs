//! Curve identifiers for the Lickorish system on a closed genus-g surface and
//! bitmask-backed sets of them.
//!
//! Curves are indexed densely for a fixed genus `g`:
//! `α_1..α_g` occupy `0..g`, `β_1..β_g` occupy `g..2g` and `γ_1..γ_{g-1}`
//! occupy `2g..3g-1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest genus whose curve system fits in a `u64` mask (3g-1 <= 63).
pub const MAX_GENUS: u32 = 21;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("genus {0} is outside the supported range 2..={MAX_GENUS}")]
    GenusOutOfRange(u32),
    #[error("curve {curve} does not exist on a surface of genus {genus}")]
    InvalidCurve { curve: Curve, genus: u32 },
    #[error("cannot parse curve id {0:?} (expected a<i>, b<i> or g<i>)")]
    Parse(String),
    #[error("curve sets of genus {0} and {1} cannot be combined")]
    GenusMismatch(u32, u32),
}

pub fn check_genus(genus: u32) -> Result<(), CurveError> {
    if (2..=MAX_GENUS).contains(&genus) {
        Ok(())
    } else {
        Err(CurveError::GenusOutOfRange(genus))
    }
}

/// One of the Lickorish generator curves. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    Alpha(u32),
    Beta(u32),
    Gamma(u32),
}

impl Curve {
    pub fn index(self) -> u32 {
        match self {
            Curve::Alpha(i) | Curve::Beta(i) | Curve::Gamma(i) => i,
        }
    }

    pub fn is_valid(self, genus: u32) -> bool {
        match self {
            Curve::Alpha(i) | Curve::Beta(i) => (1..=genus).contains(&i),
            Curve::Gamma(i) => i >= 1 && i < genus,
        }
    }

    /// Dense position of the curve in a genus-`genus` system.
    pub fn position(self, genus: u32) -> usize {
        debug_assert!(self.is_valid(genus));
        let g = genus as usize;
        match self {
            Curve::Alpha(i) => i as usize - 1,
            Curve::Beta(i) => g + i as usize - 1,
            Curve::Gamma(i) => 2 * g + i as usize - 1,
        }
    }

    pub fn from_position(pos: usize, genus: u32) -> Curve {
        let g = genus as usize;
        debug_assert!(pos < 3 * g - 1);
        if pos < g {
            Curve::Alpha(pos as u32 + 1)
        } else if pos < 2 * g {
            Curve::Beta((pos - g) as u32 + 1)
        } else {
            Curve::Gamma((pos - 2 * g) as u32 + 1)
        }
    }

    /// The curves this one meets (each exactly once).
    pub fn neighbours(self, genus: u32) -> Vec<Curve> {
        let mut out = Vec::with_capacity(3);
        match self {
            Curve::Alpha(i) => out.push(Curve::Beta(i)),
            Curve::Beta(i) => {
                if i > 1 {
                    out.push(Curve::Gamma(i - 1));
                }
                out.push(Curve::Alpha(i));
                if i < genus {
                    out.push(Curve::Gamma(i));
                }
            }
            Curve::Gamma(i) => {
                out.push(Curve::Beta(i));
                out.push(Curve::Beta(i + 1));
            }
        }
        out
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Alpha(i) => write!(f, "a{i}"),
            Curve::Beta(i) => write!(f, "b{i}"),
            Curve::Gamma(i) => write!(f, "g{i}"),
        }
    }
}

impl FromStr for Curve {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || CurveError::Parse(s.to_string());
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(err)?;
        let index: u32 = chars.as_str().parse().map_err(|_| err())?;
        if index == 0 {
            return Err(err());
        }
        match head {
            'a' => Ok(Curve::Alpha(index)),
            'b' => Ok(Curve::Beta(index)),
            'g' => Ok(Curve::Gamma(index)),
            _ => Err(err()),
        }
    }
}

impl Serialize for Curve {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Curve {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A subset of the Lickorish curves of a fixed genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveSet {
    genus: u32,
    bits: u64,
}

impl CurveSet {
    pub fn empty(genus: u32) -> Self {
        CurveSet { genus, bits: 0 }
    }

    /// All 3g-1 curves.
    pub fn full(genus: u32) -> Self {
        CurveSet {
            genus,
            bits: full_mask(genus),
        }
    }

    pub fn from_bits(genus: u32, bits: u64) -> Self {
        debug_assert_eq!(bits & !full_mask(genus), 0);
        CurveSet { genus, bits }
    }

    pub fn from_curves<I: IntoIterator<Item = Curve>>(
        genus: u32,
        curves: I,
    ) -> Result<Self, CurveError> {
        let mut set = CurveSet::empty(genus);
        for c in curves {
            set.insert(c)?;
        }
        Ok(set)
    }

    /// Parses a comma-separated list such as `a1,b1,g1`.
    pub fn parse(genus: u32, list: &str) -> Result<Self, CurveError> {
        let curves = list
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Curve>, _>>()?;
        CurveSet::from_curves(genus, curves)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn insert(&mut self, c: Curve) -> Result<(), CurveError> {
        if !c.is_valid(self.genus) {
            return Err(CurveError::InvalidCurve {
                curve: c,
                genus: self.genus,
            });
        }
        self.bits |= 1 << c.position(self.genus);
        Ok(())
    }

    pub fn with(mut self, c: Curve) -> Self {
        if c.is_valid(self.genus) {
            self.bits |= 1 << c.position(self.genus);
        }
        self
    }

    pub fn without(mut self, c: Curve) -> Self {
        if c.is_valid(self.genus) {
            self.bits &= !(1 << c.position(self.genus));
        }
        self
    }

    pub fn contains(&self, c: Curve) -> bool {
        c.is_valid(self.genus) && self.bits & (1 << c.position(self.genus)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &CurveSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &CurveSet) -> CurveSet {
        debug_assert_eq!(self.genus, other.genus);
        CurveSet {
            genus: self.genus,
            bits: self.bits | other.bits,
        }
    }

    pub fn difference(&self, other: &CurveSet) -> CurveSet {
        CurveSet {
            genus: self.genus,
            bits: self.bits & !other.bits,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Curve> + '_ {
        let genus = self.genus;
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let pos = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(Curve::from_position(pos, genus))
        })
    }

    pub fn names(&self) -> Vec<String> {
        self.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for CurveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(","))
    }
}

pub fn full_mask(genus: u32) -> u64 {
    let n = 3 * genus - 1;
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
