//! Exhaustive lemma sweeps over genus ranges.

use mcgfix_core::bootstrap::count_inequality;
use mcgfix_core::curve::full_mask;
use mcgfix_core::lickorish::{lambda, Classifier};
use mcgfix_core::surface::{build_lickorish_surface, pack_subsurfaces, FitKind};
use mcgfix_core::CurveSet;
use rayon::prelude::*;

use crate::report::RunReport;

/// Per-subset verdict of a sweep.
pub enum Verdict {
    Skip,
    Ok,
    Bad(String),
}

const CHUNK: u64 = 1 << 12;
const KEEP: usize = 20;

/// Runs `f` on every nonempty subset of Λ in parallel; the first few
/// failures are kept in mask order.
pub fn sweep<F>(genus: u32, f: F) -> (u64, usize, Vec<String>)
where
    F: Fn(&CurveSet) -> Verdict + Sync,
{
    let full = full_mask(genus);
    let parts: Vec<(u64, usize, Vec<String>)> = (0..full / CHUNK + 1)
        .into_par_iter()
        .map(|c| {
            let (mut n, mut bad, mut kept) = (0, 0, Vec::new());
            for bits in (c * CHUNK).max(1)..((c + 1) * CHUNK).min(full + 1) {
                match f(&CurveSet::from_bits(genus, bits)) {
                    Verdict::Skip => {}
                    Verdict::Ok => n += 1,
                    Verdict::Bad(m) => {
                        n += 1;
                        bad += 1;
                        if kept.len() < KEEP {
                            kept.push(m);
                        }
                    }
                }
            }
            (n, bad, kept)
        })
        .collect();
    parts.into_iter().fold((0, 0, Vec::new()), |mut acc, (n, b, k)| {
        acc.0 += n;
        acc.1 += b;
        acc.2.extend(k);
        acc.2.truncate(KEEP);
        acc
    })
}

fn absorb(report: &mut RunReport, genus: u32, (n, bad, kept): (u64, usize, Vec<String>)) {
    report.subsets_checked += n;
    for m in kept {
        report.violation(format!("g={genus}: {m}"));
    }
    if bad > KEEP {
        report.violation(format!("g={genus}: {} further failures", bad - KEEP));
    }
}

pub fn good_chains(report: &mut RunReport, genus: u32) {
    let lam = lambda(genus).expect("genus checked");
    let rg = build_lickorish_surface(genus).expect("genus checked");
    let r = sweep(genus, |s| {
        if !lam.is_chain_bits(s.bits()) {
            return Verdict::Skip;
        }
        let m = s.len() as u32;
        let want = if m % 2 == 0 { (m / 2, 1) } else { ((m - 1) / 2, 2) };
        match rg.min_enclosing_subsurface(s) {
            Ok(r) if (r.neighbourhood.genus, r.neighbourhood.boundary) == want => Verdict::Ok,
            Ok(r) => Verdict::Bad(format!(
                "chain {s}: neighbourhood {}, expected Σ_{{{},{}}}",
                r.neighbourhood, want.0, want.1
            )),
            Err(e) => Verdict::Bad(format!("chain {s}: {e}")),
        }
    });
    absorb(report, genus, r);
}

pub fn bad_chains(report: &mut RunReport, genus: u32) {
    let lam = lambda(genus).expect("genus checked");
    let rg = build_lickorish_surface(genus).expect("genus checked");
    let family: Vec<u64> = lam.separating_chain_family().iter().map(|s| s.bits()).collect();
    let r = sweep(genus, |s| {
        if !lam.is_chain_bits(s.bits()) {
            return Verdict::Skip;
        }
        let separates = match rg.raw_neighbourhood(s) {
            Ok(raw) => raw.complement.len() > 1,
            Err(e) => return Verdict::Bad(format!("{s}: {e}")),
        };
        match (separates, family.contains(&s.bits())) {
            (a, b) if a == b => Verdict::Ok,
            (true, _) => Verdict::Bad(format!("chain {s} separates but is outside the family")),
            (false, _) => Verdict::Bad(format!("chain {s} is in the family but does not separate")),
        }
    });
    absorb(report, genus, r);
}

pub fn size(report: &mut RunReport, genus: u32) {
    let cl = Classifier::new(genus).expect("genus checked");
    let rg = build_lickorish_surface(genus).expect("genus checked");
    let r = sweep(genus, |s| {
        if !cl.lambda().is_connected_bits(s.bits()) {
            return Verdict::Skip;
        }
        let claim = match cl.classify(s) {
            Ok(c) => c,
            Err(e) => return Verdict::Bad(format!("CLASSIFIER_FAILED: {e}")),
        };
        if !s.is_subset(&claim.support) {
            return Verdict::Bad(format!("{s}: support {} does not contain it", claim.support));
        }
        match rg.min_enclosing_subsurface(&claim.support) {
            Ok(r) if r.genus <= claim.genus_bound
                && r.boundary_count <= claim.boundary_bound
                && (!claim.nonseparating_required || r.complement_connected) =>
            {
                Verdict::Ok
            }
            Ok(r) => Verdict::Bad(format!(
                "{s}: claim ({}, {}) but support fills to {} (complement connected: {})",
                claim.genus_bound,
                claim.boundary_bound,
                r.filled_type(),
                r.complement_connected
            )),
            Err(e) => Verdict::Bad(format!("{s}: {e}")),
        }
    });
    absorb(report, genus, r);
}

pub fn fit(report: &mut RunReport, genus: u32) {
    for ell in 1..=genus {
        for kind in FitKind::ALL {
            let want = kind.copies(genus, ell);
            if want == 0 {
                continue;
            }
            report.subsets_checked += 1;
            match pack_subsurfaces(genus, kind, ell) {
                Ok(p) if p.marked.len() != want as usize => report.violation(format!(
                    "g={genus} {kind} ℓ={ell}: {} marked pieces, expected {want}",
                    p.marked.len()
                )),
                Ok(p) => {
                    if let Err(e) = mcgfix_core::surface::check_assembly(&p, genus) {
                        report.violation(format!("g={genus} {kind} ℓ={ell}: {e}"));
                    }
                }
                Err(e) => report.violation(format!("g={genus} {kind} ℓ={ell}: {e}")),
            }
        }
    }
}

pub fn count(report: &mut RunReport, lo: u64, hi: u64) {
    let parts: Vec<(u64, Vec<String>)> = (lo..=hi)
        .into_par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            for k in 2..=2 * g {
                match count_inequality(g, k) {
                    Ok(c) if c.holds => {}
                    Ok(c) => bad.push(format!(
                        "g={g} k={k}: (k-1)·{} = {} < {g}",
                        c.floor, c.lhs
                    )),
                    Err(e) => bad.push(format!("g={g} k={k}: {e}")),
                }
            }
            (2 * g - 1, bad)
        })
        .collect();
    for (n, bad) in parts {
        report.subsets_checked += n;
        for b in bad {
            report.violation(b);
        }
    }
}
