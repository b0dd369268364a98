//! The counting inequality behind the dimension bound: for a curve set of
//! size k, the number of disjoint copies times k-1 is at least g.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("genus must be at least 1")]
    Genus,
    #[error("k = {k} is outside [2, {max}]")]
    KOutOfRange { k: u64, max: u64 },
}

/// One evaluated instance: `lhs = (k-1) * floor` against `rhs = g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountInstance {
    pub genus: u64,
    pub k: u64,
    pub even: bool,
    /// ⌊2g/k⌋ for even k, ⌊2(g-1)/(k-1)⌋ for odd k.
    pub floor: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

pub fn count_inequality(genus: u64, k: u64) -> Result<CountInstance, CountError> {
    if genus == 0 {
        return Err(CountError::Genus);
    }
    if !(2..=2 * genus).contains(&k) {
        return Err(CountError::KOutOfRange { k, max: 2 * genus });
    }
    let even = k % 2 == 0;
    let floor = if even {
        2 * genus / k
    } else {
        2 * (genus - 1) / (k - 1)
    };
    let lhs = (k - 1) * floor;
    Ok(CountInstance {
        genus,
        k,
        even,
        floor,
        lhs,
        rhs: genus,
        holds: lhs >= genus,
    })
}
