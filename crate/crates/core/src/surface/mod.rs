//! Ribbon-graph model of the Lickorish curves on a closed surface.
//!
//! The union of the curves is a 4-valent graph: vertices are crossings and
//! edges ("arcs") are the pieces of curves between consecutive crossings.
//! Arc `e` owns two half-edges, `2e` at its tail and `2e + 1` at its head, so
//! the twin of `h` is `h ^ 1`. A rotation system orders the four half-edges at
//! every crossing; faces are the orbits of `h -> rot[h ^ 1]`.

pub mod assembly;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{check_genus, Curve, CurveError, CurveSet};

pub use assembly::{
    check_assembly, pack_subsurfaces, verify_assembly, AssemblyError, AssemblyPlan, FitKind,
    Gluing,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("the curve set is empty")]
    EmptySet,
    #[error("the curve set {0} is not connected")]
    Disconnected(String),
    #[error("curve set of genus {set} used with a surface of genus {graph}")]
    GenusMismatch { graph: u32, set: u32 },
    #[error("expected {expected} crossing signs, got {found}")]
    SignCount { expected: usize, found: usize },
    #[error("inconsistent ribbon graph: {0}")]
    Inconsistent(String),
}

/// Homeomorphism type of a compact connected orientable surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceType {
    pub genus: u32,
    pub boundary: u32,
}

impl SurfaceType {
    pub const DISK: SurfaceType = SurfaceType {
        genus: 0,
        boundary: 1,
    };

    pub fn new(genus: u32, boundary: u32) -> Self {
        SurfaceType { genus, boundary }
    }

    pub fn euler_char(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary as i64
    }

    pub fn is_disk(&self) -> bool {
        *self == Self::DISK
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{{{},{}}}", self.genus, self.boundary)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// A transverse double point of two curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub curves: [Curve; 2],
    pub sign: Sign,
    /// Half-edges in cyclic order around the crossing.
    pub rotation: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub curve: Curve,
    pub tail: usize,
    pub head: usize,
}

#[derive(Debug, Clone)]
pub struct RibbonGraph {
    genus: u32,
    vertices: Vec<Crossing>,
    arcs: Vec<Arc>,
    rot: Vec<usize>,
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
    /// Arcs of each curve (by dense position), in order along the curve.
    curve_arcs: Vec<Vec<usize>>,
    /// Dense positions of the two curves at each crossing.
    vertex_curves: Vec<[usize; 2]>,
}

/// The crossings of the Lickorish system in canonical order:
/// `α_iβ_i` for all i, then `β_iγ_i`, `β_{i+1}γ_i` for each i.
pub fn crossing_list(genus: u32) -> Vec<(Curve, Curve)> {
    let mut out = Vec::with_capacity(3 * genus as usize - 2);
    for i in 1..=genus {
        out.push((Curve::Alpha(i), Curve::Beta(i)));
    }
    for i in 1..genus {
        out.push((Curve::Beta(i), Curve::Gamma(i)));
        out.push((Curve::Beta(i + 1), Curve::Gamma(i)));
    }
    out
}

/// The chirality used by [`build_lickorish_surface`]: every crossing is
/// positive except `β_{i+1}γ_i`, so each γ_i turns opposite ways at its two
/// crossings.
pub fn canonical_signs(genus: u32) -> Vec<Sign> {
    crossing_list(genus)
        .into_iter()
        .map(|(x, y)| match (x, y) {
            (Curve::Beta(b), Curve::Gamma(c)) if b == c + 1 => Sign::Negative,
            _ => Sign::Positive,
        })
        .collect()
}

fn crossing_index(genus: u32, x: Curve, y: Curve) -> usize {
    let g = genus as usize;
    match (x, y) {
        (Curve::Alpha(i), Curve::Beta(_)) => i as usize - 1,
        (Curve::Beta(b), Curve::Gamma(c)) if b == c => g + 2 * (c as usize - 1),
        (Curve::Beta(_), Curve::Gamma(c)) => g + 2 * (c as usize - 1) + 1,
        _ => unreachable!("not a crossing: {x} {y}"),
    }
}

/// Crossings met when walking along `c`, as indices into [`crossing_list`].
fn crossings_along(genus: u32, c: Curve) -> Vec<usize> {
    match c {
        Curve::Alpha(i) => vec![crossing_index(genus, Curve::Alpha(i), Curve::Beta(i))],
        Curve::Gamma(i) => vec![
            crossing_index(genus, Curve::Beta(i), Curve::Gamma(i)),
            crossing_index(genus, Curve::Beta(i + 1), Curve::Gamma(i)),
        ],
        Curve::Beta(i) => {
            let mut seq = Vec::with_capacity(3);
            if i > 1 {
                seq.push(crossing_index(genus, Curve::Beta(i), Curve::Gamma(i - 1)));
            }
            seq.push(crossing_index(genus, Curve::Alpha(i), Curve::Beta(i)));
            if i < genus {
                seq.push(crossing_index(genus, Curve::Beta(i), Curve::Gamma(i)));
            }
            seq
        }
    }
}

/// Builds the canonical rotation system of the Lickorish curves on Σ_g.
pub fn build_lickorish_surface(genus: u32) -> Result<RibbonGraph, SurfaceError> {
    build_with_signs(genus, &canonical_signs(genus.max(2)))
}

/// Builds the ribbon graph with an explicit chirality per crossing.
pub fn build_with_signs(genus: u32, signs: &[Sign]) -> Result<RibbonGraph, SurfaceError> {
    check_genus(genus)?;
    let crossings = crossing_list(genus);
    if signs.len() != crossings.len() {
        return Err(SurfaceError::SignCount {
            expected: crossings.len(),
            found: signs.len(),
        });
    }
    let n_curves = 3 * genus as usize - 1;
    let nv = crossings.len();
    // out_h[v][slot], in_h[v][slot]; slot 0 is the first curve of the pair
    let mut out_h = vec![[usize::MAX; 2]; nv];
    let mut in_h = vec![[usize::MAX; 2]; nv];
    let mut arcs = Vec::with_capacity(2 * nv);
    let mut curve_arcs = vec![Vec::new(); n_curves];
    for pos in 0..n_curves {
        let c = Curve::from_position(pos, genus);
        let seq = crossings_along(genus, c);
        for k in 0..seq.len() {
            let (tail, head) = (seq[k], seq[(k + 1) % seq.len()]);
            let e = arcs.len();
            arcs.push(Arc {
                curve: c,
                tail,
                head,
            });
            curve_arcs[pos].push(e);
            let slot = |v: usize| usize::from(crossings[v].0 != c);
            out_h[tail][slot(tail)] = 2 * e;
            in_h[head][slot(head)] = 2 * e + 1;
        }
    }
    let mut vertices = Vec::with_capacity(nv);
    let mut rot = vec![usize::MAX; 2 * arcs.len()];
    let mut vertex_curves = Vec::with_capacity(nv);
    for (v, &(x, y)) in crossings.iter().enumerate() {
        let rotation = match signs[v] {
            Sign::Positive => [out_h[v][0], out_h[v][1], in_h[v][0], in_h[v][1]],
            Sign::Negative => [out_h[v][0], in_h[v][1], in_h[v][0], out_h[v][1]],
        };
        for t in 0..4 {
            rot[rotation[t]] = rotation[(t + 1) % 4];
        }
        vertices.push(Crossing {
            curves: [x, y],
            sign: signs[v],
            rotation,
        });
        vertex_curves.push([x.position(genus), y.position(genus)]);
    }
    let (faces, face_of) = trace_faces(&rot);
    let rg = RibbonGraph {
        genus,
        vertices,
        arcs,
        rot,
        faces,
        face_of,
        curve_arcs,
        vertex_curves,
    };
    rg.check_invariants()?;
    Ok(rg)
}

fn trace_faces(rot: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut face_of = vec![usize::MAX; rot.len()];
    let mut faces = Vec::new();
    for start in 0..rot.len() {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut cycle = Vec::new();
        let mut h = start;
        while face_of[h] == usize::MAX {
            face_of[h] = id;
            cycle.push(h);
            h = rot[h ^ 1];
        }
        faces.push(cycle);
    }
    (faces, face_of)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// The regular neighbourhood of U(S) before any filling, together with the
/// components of its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawNeighbourhood {
    pub euler_char: i64,
    pub boundary_count: u32,
    /// Sorted.
    pub complement: Vec<SurfaceType>,
}

/// Enclosing-subsurface data of a connected curve set.
///
/// The headline fields describe the filled neighbourhood (disk components of
/// the complement absorbed). When every complement component is a disk one disk
/// is left out, so the subsurface is Σ_{g,1} and still has a boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsurfaceReport {
    pub genus: u32,
    pub boundary_count: u32,
    pub complement_components: Vec<SurfaceType>,
    pub complement_connected: bool,
    pub euler_char: i64,
    /// Type of the unfilled regular neighbourhood.
    pub neighbourhood: SurfaceType,
    /// Complement components of the unfilled neighbourhood.
    pub raw_complement: Vec<SurfaceType>,
}

impl SubsurfaceReport {
    pub fn filled_type(&self) -> SurfaceType {
        SurfaceType::new(self.genus, self.boundary_count)
    }

    /// True when U(S) separates the surface.
    pub fn curves_separate(&self) -> bool {
        self.raw_complement.len() > 1
    }
}

impl RibbonGraph {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn vertices(&self) -> &[Crossing] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn rotation_successor(&self, h: usize) -> usize {
        self.rot[h]
    }

    pub fn half_edge_vertex(&self, h: usize) -> usize {
        let arc = &self.arcs[h / 2];
        if h & 1 == 0 {
            arc.tail
        } else {
            arc.head
        }
    }

    /// Arcs of `c` in order along the curve.
    pub fn curve_arcs(&self, c: Curve) -> &[usize] {
        &self.curve_arcs[c.position(self.genus)]
    }

    /// χ of the closed surface obtained by capping every face with a disk.
    pub fn capped_euler_char(&self) -> i64 {
        self.vertices.len() as i64 - self.arcs.len() as i64 + self.faces.len() as i64
    }

    pub fn check_invariants(&self) -> Result<(), SurfaceError> {
        let bad = |m: String| Err(SurfaceError::Inconsistent(m));
        for (v, x) in self.vertices.iter().enumerate() {
            for t in 0..4 {
                let h = x.rotation[t];
                if self.half_edge_vertex(h) != v {
                    return bad(format!("half-edge {h} listed at crossing {v}"));
                }
                if self.arcs[h / 2].curve != x.curves[t % 2] {
                    return bad(format!("rotation at crossing {v} does not alternate"));
                }
            }
        }
        for (pos, arcs) in self.curve_arcs.iter().enumerate() {
            for k in 0..arcs.len() {
                let next = arcs[(k + 1) % arcs.len()];
                if self.arcs[arcs[k]].head != self.arcs[next].tail {
                    return bad(format!("curve at position {pos} is not a closed cycle"));
                }
            }
        }
        let used: usize = self.faces.iter().map(Vec::len).sum();
        if used != self.rot.len() || self.face_of.contains(&usize::MAX) {
            return bad("face tracing does not use every half-edge once".into());
        }
        let chi = self.capped_euler_char();
        if chi != 2 - 2 * self.genus as i64 {
            return bad(format!("capped surface has χ = {chi}"));
        }
        Ok(())
    }

    fn check_set(&self, s: &CurveSet) -> Result<(), SurfaceError> {
        if s.genus() != self.genus {
            return Err(SurfaceError::GenusMismatch {
                graph: self.genus,
                set: s.genus(),
            });
        }
        if s.is_empty() {
            return Err(SurfaceError::EmptySet);
        }
        Ok(())
    }

    /// Connectivity of U(S), read off the crossings.
    pub fn union_connected(&self, s: &CurveSet) -> bool {
        let bits = s.bits();
        let n = 3 * self.genus as usize - 1;
        let mut uf = UnionFind::new(n);
        for &[a, b] in &self.vertex_curves {
            if bits >> a & 1 == 1 && bits >> b & 1 == 1 {
                uf.union(a, b);
            }
        }
        let mut root = None;
        for pos in 0..n {
            if bits >> pos & 1 == 1 {
                let r = uf.find(pos);
                if *root.get_or_insert(r) != r {
                    return false;
                }
            }
        }
        true
    }

    /// Regular neighbourhood of U(S) and its complement, with no filling.
    /// Works for disconnected S as well.
    pub fn raw_neighbourhood(&self, s: &CurveSet) -> Result<RawNeighbourhood, SurfaceError> {
        self.check_set(s)?;
        let bits = s.bits();
        let in_s = |pos: usize| bits >> pos & 1 == 1;
        let arc_in_s: Vec<bool> = self
            .arcs
            .iter()
            .map(|a| in_s(a.curve.position(self.genus)))
            .collect();
        let ss: Vec<bool> = self
            .vertex_curves
            .iter()
            .map(|&[a, b]| in_s(a) && in_s(b))
            .collect();

        // Induced ribbon graph: strands of S pass straight through crossings
        // with curves outside S.
        let mut induced = Vec::new();
        for (e, _) in self.arcs.iter().enumerate().filter(|(e, _)| arc_in_s[*e]) {
            for h in [2 * e, 2 * e + 1] {
                if ss[self.half_edge_vertex(h)] {
                    induced.push(h);
                }
            }
        }
        let mut itwin = vec![usize::MAX; self.rot.len()];
        for &h in &induced {
            let mut t = h ^ 1;
            while !ss[self.half_edge_vertex(t)] {
                t = self.rot[self.rot[t]] ^ 1;
            }
            itwin[h] = t;
        }
        let mut seen = vec![false; self.rot.len()];
        let mut boundary_faces = Vec::new();
        for &start in &induced {
            if seen[start] {
                continue;
            }
            boundary_faces.push(self.face_of[start]);
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = self.rot[itwin[h]];
            }
        }
        let mut boundary_count = boundary_faces.len() as u32;
        let vs = ss.iter().filter(|&&b| b).count() as i64;
        let euler_char = vs - induced.len() as i64 / 2;

        // A curve of S meeting no other curve of S is an annulus.
        for (pos, arcs) in self.curve_arcs.iter().enumerate() {
            if in_s(pos) && !arcs.iter().any(|&e| ss[self.arcs[e].tail]) {
                let e = arcs[0];
                boundary_faces.push(self.face_of[2 * e]);
                boundary_faces.push(self.face_of[2 * e + 1]);
                boundary_count += 2;
            }
        }

        // Complement: capped faces glued across arcs of curves outside S.
        let mut uf = UnionFind::new(self.faces.len());
        for (e, _) in self.arcs.iter().enumerate().filter(|(e, _)| !arc_in_s[*e]) {
            uf.union(self.face_of[2 * e], self.face_of[2 * e + 1]);
        }
        // per root: (faces, arcs, vertices, boundaries)
        let mut tally = vec![(0i64, 0i64, 0i64, 0i64); self.faces.len()];
        for f in 0..self.faces.len() {
            let r = uf.find(f);
            tally[r].0 += 1;
        }
        for (e, _) in self.arcs.iter().enumerate().filter(|(e, _)| !arc_in_s[*e]) {
            let r = uf.find(self.face_of[2 * e]);
            tally[r].1 += 1;
        }
        for (v, x) in self.vertices.iter().enumerate() {
            let [a, b] = self.vertex_curves[v];
            if !in_s(a) && !in_s(b) {
                let r = uf.find(self.face_of[x.rotation[0]]);
                tally[r].2 += 1;
            }
        }
        for &f in &boundary_faces {
            let r = uf.find(f);
            tally[r].3 += 1;
        }
        let mut complement = Vec::new();
        for f in 0..self.faces.len() {
            if uf.find(f) != f {
                continue;
            }
            let (nf, ne, nv, nb) = tally[f];
            let chi = nf - ne + nv;
            let twice_genus = 2 - chi - nb;
            if twice_genus < 0 || twice_genus % 2 != 0 || nb == 0 {
                return Err(SurfaceError::Inconsistent(format!(
                    "complement piece with χ = {chi} and {nb} boundary circles"
                )));
            }
            complement.push(SurfaceType::new((twice_genus / 2) as u32, nb as u32));
        }
        complement.sort();
        Ok(RawNeighbourhood {
            euler_char,
            boundary_count,
            complement,
        })
    }

    pub fn min_enclosing_subsurface(&self, s: &CurveSet) -> Result<SubsurfaceReport, SurfaceError> {
        self.check_set(s)?;
        if !self.union_connected(s) {
            return Err(SurfaceError::Disconnected(s.to_string()));
        }
        let raw = self.raw_neighbourhood(s)?;
        let twice_genus = 2 - raw.euler_char - raw.boundary_count as i64;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(SurfaceError::Inconsistent(format!(
                "neighbourhood with χ = {} and {} boundary circles",
                raw.euler_char, raw.boundary_count
            )));
        }
        let genus = (twice_genus / 2) as u32;
        let disks = raw.complement.iter().filter(|t| t.is_disk()).count() as u32;
        let mut rest: Vec<SurfaceType> = raw
            .complement
            .iter()
            .copied()
            .filter(|t| !t.is_disk())
            .collect();
        let boundary_count = if rest.is_empty() {
            rest.push(SurfaceType::DISK);
            1
        } else {
            raw.boundary_count - disks
        };
        let filled = SurfaceType::new(genus, boundary_count);
        Ok(SubsurfaceReport {
            genus,
            boundary_count,
            complement_connected: rest.len() == 1,
            complement_components: rest,
            euler_char: filled.euler_char(),
            neighbourhood: SurfaceType::new(genus, raw.boundary_count),
            raw_complement: raw.complement,
        })
    }

    /// Complement of the neighbourhood of U(S) with every disk filled in.
    pub fn complement_census(&self, s: &CurveSet) -> Result<Vec<SurfaceType>, SurfaceError> {
        let raw = self.raw_neighbourhood(s)?;
        Ok(raw.complement.into_iter().filter(|t| !t.is_disk()).collect())
    }
}

pub fn min_enclosing_subsurface(
    rg: &RibbonGraph,
    s: &CurveSet,
) -> Result<SubsurfaceReport, SurfaceError> {
    rg.min_enclosing_subsurface(s)
}

pub fn complement_census(rg: &RibbonGraph, s: &CurveSet) -> Result<Vec<SurfaceType>, SurfaceError> {
    rg.complement_census(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: u32, list: &str) -> CurveSet {
        CurveSet::parse(g, list).unwrap()
    }

    #[test]
    fn genus_two_counts() {
        let rg = build_lickorish_surface(2).unwrap();
        assert_eq!(rg.vertices().len(), 4);
        assert_eq!(rg.arcs().len(), 8);
        assert_eq!(rg.vertices().len() as i64 - rg.arcs().len() as i64, -4);
        assert_eq!(rg.faces().len(), 2);
        let pairs: Vec<String> = rg
            .vertices()
            .iter()
            .map(|x| format!("{}{}", x.curves[0], x.curves[1]))
            .collect();
        assert_eq!(pairs, ["a1b1", "a2b2", "b1g1", "b2g1"]);
    }

    #[test]
    fn rejects_small_genus() {
        assert!(build_lickorish_surface(1).is_err());
        assert!(build_lickorish_surface(0).is_err());
    }

    #[test]
    fn every_chirality_closes_up() {
        // face count does not depend on the signs
        for g in 2..=3u32 {
            let n = 3 * g as usize - 2;
            for mask in 0u32..(1 << n) {
                let signs: Vec<Sign> = (0..n)
                    .map(|k| {
                        if mask >> k & 1 == 1 {
                            Sign::Negative
                        } else {
                            Sign::Positive
                        }
                    })
                    .collect();
                let rg = build_with_signs(g, &signs).unwrap();
                assert_eq!(rg.faces().len(), g as usize);
            }
        }
    }

    #[test]
    fn single_curve_is_annulus() {
        let rg = build_lickorish_surface(2).unwrap();
        let r = rg.min_enclosing_subsurface(&set(2, "a1")).unwrap();
        assert_eq!((r.genus, r.boundary_count), (0, 2));
        assert!(r.complement_connected);
    }

    #[test]
    fn two_chain_is_punctured_torus() {
        for g in 2..=4 {
            let rg = build_lickorish_surface(g).unwrap();
            let r = rg.min_enclosing_subsurface(&set(g, "a1,b1")).unwrap();
            assert_eq!((r.genus, r.boundary_count), (1, 1));
        }
    }

    #[test]
    fn alpha_interval_genus_three() {
        let rg = build_lickorish_surface(3).unwrap();
        let r = rg
            .min_enclosing_subsurface(&set(3, "a1,b1,g1,b2,a2"))
            .unwrap();
        assert_eq!((r.genus, r.boundary_count), (2, 1));
        assert!(r.complement_connected);
        assert_eq!(
            rg.complement_census(&set(3, "a1,b1,g1,b2,a2")).unwrap(),
            vec![SurfaceType::new(1, 1)]
        );
    }

    #[test]
    fn census_examples() {
        let rg = build_lickorish_surface(2).unwrap();
        assert!(rg.complement_census(&CurveSet::full(2)).unwrap().is_empty());
        assert_eq!(
            rg.complement_census(&set(2, "a1,b1")).unwrap(),
            vec![SurfaceType::new(1, 1)]
        );
        let full = rg.min_enclosing_subsurface(&CurveSet::full(2)).unwrap();
        assert_eq!((full.genus, full.boundary_count), (2, 1));
    }

    #[test]
    fn empty_and_disconnected_rejected() {
        let rg = build_lickorish_surface(3).unwrap();
        assert_eq!(
            rg.min_enclosing_subsurface(&CurveSet::empty(3)),
            Err(SurfaceError::EmptySet)
        );
        assert!(matches!(
            rg.min_enclosing_subsurface(&set(3, "a1,a2")),
            Err(SurfaceError::Disconnected(_))
        ));
        assert!(rg.complement_census(&set(3, "a1,a2")).is_ok());
        assert!(rg.complement_census(&CurveSet::empty(3)).is_err());
        assert!(matches!(
            rg.min_enclosing_subsurface(&set(2, "a1")),
            Err(SurfaceError::GenusMismatch { .. })
        ));
    }

    #[test]
    fn report_invariants_hold_for_all_connected_sets() {
        for g in 2..=4u32 {
            let rg = build_lickorish_surface(g).unwrap();
            let closed = 2 - 2 * g as i64;
            for bits in 1..(1u64 << (3 * g - 1)) {
                let s = CurveSet::from_bits(g, bits);
                let raw = rg.raw_neighbourhood(&s).unwrap();
                let sum: i64 = raw.complement.iter().map(SurfaceType::euler_char).sum();
                assert_eq!(raw.euler_char + sum, closed, "{s}");
                if !rg.union_connected(&s) {
                    continue;
                }
                let r = rg.min_enclosing_subsurface(&s).unwrap();
                assert_eq!(r.euler_char, 2 - 2 * r.genus as i64 - r.boundary_count as i64);
                let sum: i64 = r
                    .complement_components
                    .iter()
                    .map(SurfaceType::euler_char)
                    .sum();
                assert_eq!(r.euler_char + sum, closed, "{s}");
                assert_eq!(r.complement_connected, r.complement_components.len() == 1);
                assert!(r.boundary_count > 0);
            }
        }
    }
}
