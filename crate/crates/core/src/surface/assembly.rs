//! Abstract cut-and-paste assemblies: pieces Σ_{h,b} glued along boundary
//! circles. Used to pack disjoint copies of a fixed subsurface type into a
//! closed surface of genus g.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::SurfaceType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FitKind {
    /// Copies of Σ_{ℓ,1}.
    Fit1,
    /// Non-separating copies of Σ_{ℓ-1,3}.
    Fit2,
    /// Non-separating copies of Σ_{ℓ,2}.
    Fit3,
}

impl FitKind {
    pub const ALL: [FitKind; 3] = [FitKind::Fit1, FitKind::Fit2, FitKind::Fit3];

    pub fn name(self) -> &'static str {
        match self {
            FitKind::Fit1 => "fit1",
            FitKind::Fit2 => "fit2",
            FitKind::Fit3 => "fit3",
        }
    }

    /// Type of the packed pieces. `None` for `Fit2` with ℓ = 0.
    pub fn piece_type(self, ell: u32) -> Option<SurfaceType> {
        match self {
            FitKind::Fit1 => Some(SurfaceType::new(ell, 1)),
            FitKind::Fit2 => ell.checked_sub(1).map(|h| SurfaceType::new(h, 3)),
            FitKind::Fit3 => Some(SurfaceType::new(ell, 2)),
        }
    }

    /// Number of disjoint copies the packing provides on Σ_g.
    pub fn copies(self, genus: u32, ell: u32) -> u32 {
        if ell == 0 {
            return 0;
        }
        match self {
            FitKind::Fit1 | FitKind::Fit2 => genus / ell,
            FitKind::Fit3 => genus.saturating_sub(1) / ell,
        }
    }

    pub fn nonseparating(self) -> bool {
        !matches!(self, FitKind::Fit1)
    }
}

impl fmt::Display for FitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FitKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fit1" => Ok(FitKind::Fit1),
            "fit2" => Ok(FitKind::Fit2),
            "fit3" => Ok(FitKind::Fit3),
            _ => Err(format!("unknown packing kind {s:?}")),
        }
    }
}

/// Boundary slot `slot_a` of piece `piece_a` glued to slot `slot_b` of `piece_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gluing {
    pub piece_a: usize,
    pub slot_a: u32,
    pub piece_b: usize,
    pub slot_b: u32,
}

impl Gluing {
    pub fn new(piece_a: usize, slot_a: u32, piece_b: usize, slot_b: u32) -> Self {
        Gluing {
            piece_a,
            slot_a,
            piece_b,
            slot_b,
        }
    }
}

impl fmt::Display for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}.{} ~ {}.{}",
            self.piece_a, self.slot_a, self.piece_b, self.slot_b
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssemblyPlan {
    pub kind: FitKind,
    pub ell: u32,
    pub pieces: Vec<SurfaceType>,
    pub gluings: Vec<Gluing>,
    pub marked: Vec<usize>,
    pub marked_nonseparating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssemblyError {
    #[error("{kind} with ℓ = {ell} on genus {genus} packs no copies")]
    NoCopies { kind: FitKind, ell: u32, genus: u32 },
    #[error("gluing {0} refers to a missing piece or boundary slot")]
    SlotOutOfRange(Gluing),
    #[error("gluing {0} identifies a boundary slot with itself")]
    SelfSlot(Gluing),
    #[error("gluing {0} reuses an already glued boundary slot")]
    SlotReused(Gluing),
    #[error("boundary slot {slot} of piece {piece} is not glued")]
    Unglued { piece: usize, slot: u32 },
    #[error("gluing graph is disconnected")]
    Disconnected,
    #[error("total Euler characteristic {found} does not close to {expected}")]
    EulerMismatch { expected: i64, found: i64 },
    #[error("marked piece index {0} is out of range")]
    MarkedOutOfRange(usize),
    #[error("marked piece {0} is listed twice")]
    MarkedDuplicate(usize),
    #[error("marked piece {piece} has type {found}, expected {expected}")]
    MarkedType {
        piece: usize,
        expected: SurfaceType,
        found: SurfaceType,
    },
    #[error("{found} marked pieces, expected {expected}")]
    MarkedCount { expected: usize, found: usize },
    #[error("non-separating flag is {found} for {kind}")]
    NonseparatingFlag { kind: FitKind, found: bool },
    #[error("removing marked piece {0} disconnects the gluing graph")]
    MarkedSeparating(usize),
}

/// Builds the packing of Σ_g by copies of the `kind` piece type.
pub fn pack_subsurfaces(genus: u32, kind: FitKind, ell: u32) -> Result<AssemblyPlan, AssemblyError> {
    let q = kind.copies(genus, ell) as usize;
    if q == 0 || kind.piece_type(ell).is_none() {
        return Err(AssemblyError::NoCopies { kind, ell, genus });
    }
    let piece = kind.piece_type(ell).unwrap();
    let mut pieces = vec![piece; q];
    let mut gluings = Vec::new();
    match kind {
        FitKind::Fit1 => {
            // sphere carrier with one hole per copy, plus one for the rest
            let rest = genus - q as u32 * ell;
            let carrier = q;
            pieces.push(SurfaceType::new(0, q as u32 + u32::from(rest > 0)));
            for i in 0..q {
                gluings.push(Gluing::new(i, 0, carrier, i as u32));
            }
            if rest > 0 {
                pieces.push(SurfaceType::new(rest, 1));
                gluings.push(Gluing::new(carrier + 1, 0, carrier, q as u32));
            }
        }
        FitKind::Fit2 => {
            // slots: 0 = outgoing, 1 = capped, 2 = incoming
            for i in 0..q {
                gluings.push(Gluing::new(i, 0, (i + 1) % q, 2));
            }
            let cap = q;
            pieces.push(SurfaceType::new(genus - q as u32 * ell, q as u32));
            for i in 0..q {
                gluings.push(Gluing::new(i, 1, cap, i as u32));
            }
        }
        FitKind::Fit3 => {
            // slots: 0 = outgoing, 1 = incoming; a filler closes the cycle
            let filler = genus - 1 - q as u32 * ell;
            for i in 0..q - 1 {
                gluings.push(Gluing::new(i, 0, i + 1, 1));
            }
            if filler > 0 {
                pieces.push(SurfaceType::new(filler, 2));
                gluings.push(Gluing::new(q - 1, 0, q, 1));
                gluings.push(Gluing::new(q, 0, 0, 1));
            } else {
                gluings.push(Gluing::new(q - 1, 0, 0, 1));
            }
        }
    }
    Ok(AssemblyPlan {
        kind,
        ell,
        pieces,
        gluings,
        marked: (0..q).collect(),
        marked_nonseparating: kind.nonseparating(),
    })
}

fn graph_connected(n: usize, gluings: &[Gluing], removed: Option<usize>) -> bool {
    let alive = |p: usize| Some(p) != removed;
    let mut adj = vec![Vec::new(); n];
    for gl in gluings {
        if alive(gl.piece_a) && alive(gl.piece_b) {
            adj[gl.piece_a].push(gl.piece_b);
            adj[gl.piece_b].push(gl.piece_a);
        }
    }
    let Some(start) = (0..n).find(|&p| alive(p)) else {
        return true;
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for &r in &adj[p] {
            if !seen[r] {
                seen[r] = true;
                queue.push_back(r);
            }
        }
    }
    (0..n).all(|p| !alive(p) || seen[p])
}

/// Checks that `plan` is a closed connected genus-g assembly carrying the
/// expected number of marked pieces of the right type.
pub fn check_assembly(plan: &AssemblyPlan, genus: u32) -> Result<(), AssemblyError> {
    let n = plan.pieces.len();
    let mut used: Vec<Vec<bool>> = plan
        .pieces
        .iter()
        .map(|p| vec![false; p.boundary as usize])
        .collect();
    for gl in &plan.gluings {
        let in_range = |p: usize, s: u32| p < n && (s as usize) < used[p].len();
        if !in_range(gl.piece_a, gl.slot_a) || !in_range(gl.piece_b, gl.slot_b) {
            return Err(AssemblyError::SlotOutOfRange(*gl));
        }
        if gl.piece_a == gl.piece_b && gl.slot_a == gl.slot_b {
            return Err(AssemblyError::SelfSlot(*gl));
        }
        for (p, s) in [(gl.piece_a, gl.slot_a), (gl.piece_b, gl.slot_b)] {
            if used[p][s as usize] {
                return Err(AssemblyError::SlotReused(*gl));
            }
            used[p][s as usize] = true;
        }
    }
    for (piece, slots) in used.iter().enumerate() {
        if let Some(slot) = slots.iter().position(|&u| !u) {
            return Err(AssemblyError::Unglued {
                piece,
                slot: slot as u32,
            });
        }
    }
    if !graph_connected(n, &plan.gluings, None) {
        return Err(AssemblyError::Disconnected);
    }
    // gluing along circles does not change χ
    let found: i64 = plan.pieces.iter().map(SurfaceType::euler_char).sum();
    let expected = 2 - 2 * genus as i64;
    if found != expected {
        return Err(AssemblyError::EulerMismatch { expected, found });
    }
    let mut seen = vec![false; n];
    for &m in &plan.marked {
        if m >= n {
            return Err(AssemblyError::MarkedOutOfRange(m));
        }
        if seen[m] {
            return Err(AssemblyError::MarkedDuplicate(m));
        }
        seen[m] = true;
    }
    let expected_type = plan
        .kind
        .piece_type(plan.ell)
        .ok_or(AssemblyError::NoCopies {
            kind: plan.kind,
            ell: plan.ell,
            genus,
        })?;
    for &m in &plan.marked {
        if plan.pieces[m] != expected_type {
            return Err(AssemblyError::MarkedType {
                piece: m,
                expected: expected_type,
                found: plan.pieces[m],
            });
        }
    }
    let copies = plan.kind.copies(genus, plan.ell) as usize;
    if plan.marked.len() != copies {
        return Err(AssemblyError::MarkedCount {
            expected: copies,
            found: plan.marked.len(),
        });
    }
    if plan.marked_nonseparating != plan.kind.nonseparating() {
        return Err(AssemblyError::NonseparatingFlag {
            kind: plan.kind,
            found: plan.marked_nonseparating,
        });
    }
    if plan.marked_nonseparating {
        for &m in &plan.marked {
            if !graph_connected(n, &plan.gluings, Some(m)) {
                return Err(AssemblyError::MarkedSeparating(m));
            }
        }
    }
    Ok(())
}

pub fn verify_assembly(plan: &AssemblyPlan, genus: u32) -> bool {
    check_assembly(plan, genus).is_ok()
}
