//! Syntactic combinatorics of the Lickorish generators: the intersection
//! graph, connectivity, chains and interval sets.

mod classify;
mod interval;

pub use classify::{
    classify_chain, enclosing_interval, size_classify, CaseTag, ClaimClass, ClassifyError,
    Classifier, EnclosureClaim,
};
pub use interval::{
    enclosure_bound, extended_support, interval_set, Interval, IntervalError, IntervalKind,
};

use crate::curve::{check_genus, full_mask, Curve, CurveError, CurveSet};

/// The generator set Λ of a fixed genus with its intersection relation.
#[derive(Debug, Clone)]
pub struct Lambda {
    genus: u32,
    /// Neighbour mask of each curve position.
    adjacency: Vec<u64>,
}

pub fn lambda(genus: u32) -> Result<Lambda, CurveError> {
    check_genus(genus)?;
    let n = 3 * genus as usize - 1;
    let adjacency = (0..n)
        .map(|pos| {
            Curve::from_position(pos, genus)
                .neighbours(genus)
                .into_iter()
                .fold(0u64, |m, c| m | 1 << c.position(genus))
        })
        .collect();
    Ok(Lambda { genus, adjacency })
}

impl Lambda {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn curves(&self) -> CurveSet {
        CurveSet::full(self.genus)
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn intersects(&self, a: Curve, b: Curve) -> bool {
        a.is_valid(self.genus)
            && b.is_valid(self.genus)
            && self.adjacency[a.position(self.genus)] >> b.position(self.genus) & 1 == 1
    }

    /// Intersecting pairs, each listed once.
    pub fn intersecting_pairs(&self) -> Vec<(Curve, Curve)> {
        let mut out = Vec::new();
        for (a, &m) in self.adjacency.iter().enumerate() {
            for b in (a + 1)..self.adjacency.len() {
                if m >> b & 1 == 1 {
                    out.push((
                        Curve::from_position(a, self.genus),
                        Curve::from_position(b, self.genus),
                    ));
                }
            }
        }
        out
    }

    pub fn neighbour_mask(&self, c: Curve) -> u64 {
        self.adjacency[c.position(self.genus)]
    }

    /// Degree of each member within S (indexed by position).
    fn degree_in(&self, bits: u64, pos: usize) -> u32 {
        (self.adjacency[pos] & bits).count_ones()
    }

    /// Connected component of `seed` inside `bits`, as a mask.
    fn component_mask(&self, bits: u64, seed: usize) -> u64 {
        let mut comp = 1u64 << seed;
        let mut frontier = comp;
        while frontier != 0 {
            let pos = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adjacency[pos] & bits & !comp;
            comp |= new;
            frontier |= new;
        }
        comp
    }

    pub fn is_connected_bits(&self, bits: u64) -> bool {
        bits == 0 || self.component_mask(bits, bits.trailing_zeros() as usize) == bits
    }

    pub fn is_connected(&self, s: &CurveSet) -> bool {
        self.is_connected_bits(s.bits())
    }

    /// Components of S, ordered by their least curve position.
    pub fn components(&self, s: &CurveSet) -> Vec<CurveSet> {
        let mut rest = s.bits();
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.component_mask(rest, rest.trailing_zeros() as usize);
            out.push(CurveSet::from_bits(self.genus, comp));
            rest &= !comp;
        }
        out
    }

    /// True when the intersection graph of S is a simple path.
    pub fn is_chain_bits(&self, bits: u64) -> bool {
        if bits == 0 || !self.is_connected_bits(bits) {
            return false;
        }
        // a connected subgraph of the tree is a path iff all degrees are <= 2
        let mut rest = bits;
        while rest != 0 {
            let pos = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.degree_in(bits, pos) > 2 {
                return false;
            }
        }
        true
    }

    /// An ordering C_1..C_m of S with consecutive curves meeting once and all
    /// other pairs disjoint; starts from the endpoint of least position.
    pub fn chain_order(&self, s: &CurveSet) -> Option<Vec<Curve>> {
        let bits = s.bits();
        if !self.is_chain_bits(bits) {
            return None;
        }
        let mut start = None;
        let mut rest = bits;
        while rest != 0 {
            let pos = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.degree_in(bits, pos) <= 1 {
                start = Some(pos);
                break;
            }
        }
        let mut order = vec![start?];
        let mut visited = 1u64 << order[0];
        loop {
            let last = *order.last().unwrap();
            let next = self.adjacency[last] & bits & !visited;
            if next == 0 {
                break;
            }
            let pos = next.trailing_zeros() as usize;
            visited |= 1 << pos;
            order.push(pos);
        }
        Some(
            order
                .into_iter()
                .map(|p| Curve::from_position(p, self.genus))
                .collect(),
        )
    }

    /// The odd chains whose union separates: {α_i, α_j} ∪ B_{ij} ∪ C_{i,j-1}
    /// for i < j.
    pub fn separating_chain_family(&self) -> Vec<CurveSet> {
        let g = self.genus;
        let mut out = Vec::new();
        for i in 1..=g {
            for j in (i + 1)..=g {
                out.push(separating_chain(g, i, j));
            }
        }
        out
    }

    /// Nonempty subsets of Λ as bitmasks, for exhaustive sweeps.
    pub fn subset_masks(&self) -> std::ops::Range<u64> {
        1..full_mask(self.genus) + 1
    }
}

pub(crate) fn separating_chain(genus: u32, i: u32, j: u32) -> CurveSet {
    let mut s = CurveSet::empty(genus)
        .with(Curve::Alpha(i))
        .with(Curve::Alpha(j));
    for k in i..=j {
        s = s.with(Curve::Beta(k));
    }
    for k in i..j {
        s = s.with(Curve::Gamma(k));
    }
    s
}

pub fn is_connected(lam: &Lambda, s: &CurveSet) -> bool {
    lam.is_connected(s)
}

pub fn components(lam: &Lambda, s: &CurveSet) -> Vec<CurveSet> {
    lam.components(s)
}

pub fn chain_order(lam: &Lambda, s: &CurveSet) -> Option<Vec<Curve>> {
    lam.chain_order(s)
}
