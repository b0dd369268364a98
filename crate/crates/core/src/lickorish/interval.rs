//! Interval sets [x_i, y_j] built from the blocks A_{ij} = {α_i..α_j},
//! B_{ij} = {β_i..β_j} and C_{ij} = {γ_i..γ_j}.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{Curve, CurveSet};

/// The nine bracket kinds; declaration order is the tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IntervalKind {
    BB,
    BA,
    AB,
    BG,
    GB,
    AA,
    GG,
    GA,
    AG,
}

impl IntervalKind {
    pub const ALL: [IntervalKind; 9] = [
        IntervalKind::BB,
        IntervalKind::BA,
        IntervalKind::AB,
        IntervalKind::BG,
        IntervalKind::GB,
        IntervalKind::AA,
        IntervalKind::GG,
        IntervalKind::GA,
        IntervalKind::AG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntervalKind::BB => "bb",
            IntervalKind::BA => "ba",
            IntervalKind::AB => "ab",
            IntervalKind::BG => "bg",
            IntervalKind::GB => "gb",
            IntervalKind::AA => "aa",
            IntervalKind::GG => "gg",
            IntervalKind::GA => "ga",
            IntervalKind::AG => "ag",
        }
    }

    fn endpoints(self) -> (char, char) {
        let mut it = self.name().chars();
        (it.next().unwrap(), it.next().unwrap())
    }

    /// Kinds whose right endpoint is a γ need j ≤ g-1.
    fn gamma_right(self) -> bool {
        self.endpoints().1 == 'g'
    }

    /// Kinds that are only defined for i < j.
    fn strict(self) -> bool {
        matches!(self, IntervalKind::GB | IntervalKind::AA | IntervalKind::GA)
    }
}

impl FromStr for IntervalKind {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IntervalKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| IntervalError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("unknown interval kind {0:?}")]
    UnknownKind(String),
    #[error("interval {kind:?}({i},{j}) is not valid on genus {genus}")]
    InvalidIndices {
        kind: IntervalKind,
        i: u32,
        j: u32,
        genus: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub kind: IntervalKind,
    pub i: u32,
    pub j: u32,
}

impl Interval {
    pub fn new(kind: IntervalKind, i: u32, j: u32, genus: u32) -> Result<Self, IntervalError> {
        let iv = Interval { kind, i, j };
        if iv.is_valid(genus) {
            Ok(iv)
        } else {
            Err(IntervalError::InvalidIndices { kind, i, j, genus })
        }
    }

    pub fn is_valid(&self, genus: u32) -> bool {
        let (i, j) = (self.i, self.j);
        if !(1 <= i && i <= j && j <= genus) {
            return false;
        }
        if self.kind.gamma_right() && j >= genus {
            return false;
        }
        !(self.kind.strict() && i == j)
    }

    /// Length of the endpoint-to-endpoint chain inside the interval.
    pub fn chain_length(&self) -> usize {
        let d = (self.j - self.i) as usize;
        match self.kind {
            IntervalKind::BB | IntervalKind::GG | IntervalKind::GA => 2 * d + 1,
            IntervalKind::BA | IntervalKind::AB | IntervalKind::BG => 2 * d + 2,
            IntervalKind::GB => 2 * d,
            IntervalKind::AA | IntervalKind::AG => 2 * d + 3,
        }
    }

    /// All valid intervals on genus g.
    pub fn all(genus: u32) -> Vec<Interval> {
        let mut out = Vec::new();
        for kind in IntervalKind::ALL {
            for i in 1..=genus {
                for j in i..=genus {
                    let iv = Interval { kind, i, j };
                    if iv.is_valid(genus) {
                        out.push(iv);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.kind.endpoints();
        write!(f, "[{x}{},{y}{}]", self.i, self.j)
    }
}

fn block(set: CurveSet, make: fn(u32) -> Curve, from: u32, to: u32) -> CurveSet {
    (from..=to).fold(set, |s, k| s.with(make(k)))
}

fn literal(kind: IntervalKind, i: u32, j: u32, genus: u32) -> CurveSet {
    let bb = {
        let s = block(CurveSet::empty(genus), Curve::Alpha, i + 1, j.saturating_sub(1));
        let s = block(s, Curve::Beta, i, j);
        block(s, Curve::Gamma, i, j.saturating_sub(1))
    };
    match kind {
        IntervalKind::BB => bb,
        IntervalKind::BA => bb.with(Curve::Alpha(j)),
        IntervalKind::AB => bb.with(Curve::Alpha(i)),
        IntervalKind::BG => bb.with(Curve::Gamma(j)),
        IntervalKind::GB => bb.without(Curve::Beta(i)),
        IntervalKind::AA => bb.with(Curve::Alpha(i)).with(Curve::Alpha(j)),
        IntervalKind::GG => bb.with(Curve::Gamma(j)).without(Curve::Beta(i)),
        IntervalKind::GA => bb.without(Curve::Beta(i)).with(Curve::Alpha(j)),
        IntervalKind::AG => bb.with(Curve::Alpha(i)).with(Curve::Gamma(j)),
    }
}

fn checked(iv: &Interval, genus: u32) -> Result<(), IntervalError> {
    if iv.is_valid(genus) {
        Ok(())
    } else {
        Err(IntervalError::InvalidIndices {
            kind: iv.kind,
            i: iv.i,
            j: iv.j,
            genus,
        })
    }
}

/// The literal interval set.
pub fn interval_set(iv: &Interval, genus: u32) -> Result<CurveSet, IntervalError> {
    checked(iv, genus)?;
    Ok(literal(iv.kind, iv.i, iv.j, genus))
}

/// Every curve of Λ lying in the enclosing subsurface of the interval.
pub fn extended_support(iv: &Interval, genus: u32) -> Result<CurveSet, IntervalError> {
    checked(iv, genus)?;
    let (i, j) = (iv.i, iv.j);
    let lit = literal(iv.kind, i, j, genus);
    if i == j {
        return Ok(lit);
    }
    Ok(match iv.kind {
        IntervalKind::AA | IntervalKind::GA => lit,
        IntervalKind::BB | IntervalKind::BA | IntervalKind::AB => {
            literal(IntervalKind::AA, i, j, genus)
        }
        IntervalKind::GB => literal(IntervalKind::GA, i, j, genus),
        IntervalKind::BG => literal(IntervalKind::AG, i, j, genus).with(Curve::Alpha(j)),
        IntervalKind::AG | IntervalKind::GG => lit.with(Curve::Alpha(j)),
    })
}

/// (genus, boundary) of the enclosing subsurface of the interval's support.
pub fn enclosure_bound(iv: &Interval) -> (u32, u32) {
    let d = iv.j - iv.i;
    match iv.kind {
        IntervalKind::AA | IntervalKind::BB | IntervalKind::AB | IntervalKind::BA => (d + 1, 1),
        IntervalKind::BG | IntervalKind::AG => (d + 1, 2),
        IntervalKind::GB | IntervalKind::GA => (d, 2),
        IntervalKind::GG => (d, 3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(kind: IntervalKind, i: u32, j: u32, g: u32) -> Interval {
        Interval::new(kind, i, j, g).unwrap()
    }

    #[test]
    fn literal_examples() {
        let bb = interval_set(&iv(IntervalKind::BB, 1, 2, 2), 2).unwrap();
        assert_eq!(bb, CurveSet::parse(2, "b1,b2,g1").unwrap());
        let aa = interval_set(&iv(IntervalKind::AA, 1, 3, 3), 3).unwrap();
        assert_eq!(aa, CurveSet::parse(3, "a1,b1,g1,a2,b2,g2,b3,a3").unwrap());
        let gg = iv(IntervalKind::GG, 1, 2, 3);
        assert_eq!(
            interval_set(&gg, 3).unwrap(),
            CurveSet::parse(3, "b2,g1,g2").unwrap()
        );
        assert!(extended_support(&gg, 3)
            .unwrap()
            .contains(Curve::Alpha(2)));
    }

    #[test]
    fn validity() {
        assert!(Interval::new(IntervalKind::AA, 2, 2, 3).is_err());
        assert!(Interval::new(IntervalKind::GG, 1, 3, 3).is_err());
        assert!(Interval::new(IntervalKind::BB, 2, 2, 3).is_ok());
        assert!(Interval::new(IntervalKind::AB, 2, 1, 3).is_err());
        assert!(Interval::new(IntervalKind::BG, 2, 2, 3).is_ok());
    }

    #[test]
    fn chain_lengths_are_literal_sizes_along_the_spine() {
        // the literal set minus the interior α's is the chain
        for g in 2..=6 {
            for interval in Interval::all(g) {
                let lit = interval_set(&interval, g).unwrap();
                let interior = (interval.i + 1..interval.j)
                    .filter(|&k| lit.contains(Curve::Alpha(k)))
                    .count();
                assert_eq!(lit.len() - interior, interval.chain_length(), "{interval}");
            }
        }
        assert_eq!(iv(IntervalKind::AA, 1, 3, 3).chain_length(), 7);
    }

    #[test]
    fn support_contains_literal() {
        for g in 2..=6 {
            for interval in Interval::all(g) {
                let lit = interval_set(&interval, g).unwrap();
                assert!(lit.is_subset(&extended_support(&interval, g).unwrap()));
            }
        }
    }

    #[test]
    fn kinds_parse() {
        for k in IntervalKind::ALL {
            assert_eq!(k.name().parse::<IntervalKind>().unwrap(), k);
        }
        assert_eq!(iv(IntervalKind::GA, 1, 3, 4).to_string(), "[g1,a3]");
    }
}
