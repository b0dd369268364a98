//! Independent certificate checker.
//!
//! Every node is keyed by (rule, size, class). The checker rebuilds the
//! parameters, witnesses and premise sets it expects for each key from the
//! header alone, re-validates the embedded assemblies and inequalities, and,
//! for small genus, walks every subset of Λ to confirm some node covers it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::count::count_inequality;
use super::{
    theorem_axioms, theorem_hypotheses, Axiom, Certificate, IsometryClassTag, MainVariant, Node,
    Theorem,
};
use crate::curve::{full_mask, CurveSet, MAX_GENUS};
use crate::lickorish::{ClaimClass, Classifier};
use crate::surface::{check_assembly, pack_subsurfaces, AssemblyPlan, FitKind};

pub const DEFAULT_EXHAUSTIVE_GENUS: u32 = 6;
pub const EXHAUSTIVE_GENUS_CAP: u32 = 8;

/// Most coverage failures reported individually.
const COVERAGE_REPORT_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Enumerate all subsets when the genus is at most this (capped at 8).
    pub exhaustive_max_genus: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_max_genus: DEFAULT_EXHAUSTIVE_GENUS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub node: Option<usize>,
    pub rule: String,
    pub field: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node {
            Some(id) => write!(f, "node {id} ({})", self.rule)?,
            None => write!(f, "{}", self.rule)?,
        }
        write!(
            f,
            ": {}: expected {}, found {}",
            self.field, self.expected, self.found
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutcome {
    pub violations: Vec<Violation>,
    pub nodes_checked: usize,
    pub subsets_checked: u64,
    pub exhaustive: bool,
}

impl VerifyOutcome {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify(cert: &Certificate) -> Result<(), Vec<Violation>> {
    let out = verify_detailed(cert, VerifyOptions::default());
    if out.is_ok() {
        Ok(())
    } else {
        Err(out.violations)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Key {
    Axiom(Axiom),
    HandleTwist,
    Genus1,
    Split(usize),
    Packing(usize, ClaimClass),
    Direct(usize),
    Final,
    RTreeFixedPoint,
}

impl Key {
    /// Subset size whose sets this node concludes elliptic.
    fn covers_below(&self, size: usize) -> bool {
        match *self {
            Key::Genus1 => true,
            Key::Split(s) | Key::Packing(s, _) | Key::Direct(s) => s < size,
            _ => false,
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Axiom(a) => write!(f, "axiom {a}"),
            Key::HandleTwist => write!(f, "handle_twist_elliptic"),
            Key::Genus1 => write!(f, "genus1_step"),
            Key::Split(s) => write!(f, "split_commutes(size {s})"),
            Key::Packing(s, c) => write!(f, "conjugate_bootstrap(size {s}, {})", c.name()),
            Key::Direct(s) => write!(f, "conjugate_bootstrap(size {s}, direct)"),
            Key::Final => write!(f, "mod_fixed_point"),
            Key::RTreeFixedPoint => write!(f, "r_tree_fixed_point"),
        }
    }
}

fn param_size(node: &Node) -> Result<usize, String> {
    node.params["size"]
        .as_u64()
        .map(|s| s as usize)
        .ok_or_else(|| "params.size".to_string())
}

fn node_key(node: &Node) -> Result<Key, String> {
    match node.rule.as_str() {
        "axiom" => node.params["tag"]
            .as_str()
            .and_then(|t| t.parse().ok())
            .map(Key::Axiom)
            .ok_or_else(|| "params.tag".to_string()),
        "handle_twist_elliptic" => Ok(Key::HandleTwist),
        "genus1_step" => Ok(Key::Genus1),
        "split_commutes" => Ok(Key::Split(param_size(node)?)),
        "conjugate_bootstrap" => match node.params["route"].as_str() {
            Some("packing") => {
                let class = node.params["class"]
                    .as_str()
                    .and_then(|c| c.parse().ok())
                    .ok_or_else(|| "params.class".to_string())?;
                Ok(Key::Packing(param_size(node)?, class))
            }
            Some("direct") => Ok(Key::Direct(param_size(node)?)),
            _ => Err("params.route".to_string()),
        },
        "mod_fixed_point" => Ok(Key::Final),
        "r_tree_fixed_point" => Ok(Key::RTreeFixedPoint),
        _ => Err("rule".to_string()),
    }
}

struct Expect {
    key: Key,
    params: Value,
    witnesses: Value,
    premises: Vec<Key>,
}

fn ineq(dim: u32, bound: u64) -> Value {
    json!({"dim": dim, "bound": bound, "holds": (dim as u64) < bound})
}

/// The node list a correct certificate must contain, rebuilt from scratch.
fn expected_nodes(theorem: Theorem, g: u32, dim: u32, variant: MainVariant) -> Vec<Expect> {
    let mut out = Vec::new();
    let axioms = theorem_axioms(theorem, g, variant);
    for &a in &axioms {
        out.push(Expect {
            key: Key::Axiom(a),
            params: json!({"tag": a.tag()}),
            witnesses: json!({}),
            premises: vec![],
        });
    }
    if g == 2 {
        out.push(Expect {
            key: Key::RTreeFixedPoint,
            params: json!({"dim": dim}),
            witnesses: json!({}),
            premises: vec![Key::Axiom(Axiom::RTree)],
        });
        return out;
    }

    // symbolic elimination of isometry classes for the handle twist
    let cited: Vec<Axiom> = match theorem {
        Theorem::Technical => vec![Axiom::HandleSeparatingTwistElliptic],
        Theorem::Main => {
            let mut v = theorem_hypotheses(theorem, variant);
            v.push(Axiom::L1Loop);
            v
        }
        Theorem::Kg => vec![Axiom::SeparatingTwistsInKernel, Axiom::RTorsion],
    };
    let mut classes: BTreeSet<IsometryClassTag> = IsometryClassTag::ALL.into_iter().collect();
    let mut steps = Vec::new();
    for a in &cited {
        if let Some(e) = a.effect() {
            classes = e.apply(&classes);
            steps.push(json!({"axiom": a.tag(), "remaining": classes}));
        }
    }
    out.push(Expect {
        key: Key::HandleTwist,
        params: json!({"subgroup": "handle-separating-twist", "remaining": classes}),
        witnesses: json!({"start": IsometryClassTag::ALL, "steps": steps}),
        premises: cited.iter().map(|&a| Key::Axiom(a)).collect(),
    });

    out.push(Expect {
        key: Key::Genus1,
        params: json!({
            "n": g, "k": 1, "sizes": [1, 2], "connected": true,
            "fit": "fit1", "ell": 1, "quotient": "once-punctured-torus",
        }),
        witnesses: json!({
            "assembly": pack_subsurfaces(g, FitKind::Fit1, 1).ok(),
            "inequality": ineq(dim, g as u64),
            "torsion_generators": 2,
        }),
        premises: vec![
            Key::HandleTwist,
            Key::Axiom(Axiom::OrbitTransitivity),
            Key::Axiom(Axiom::Sl2zTorsionGeneration),
            Key::Axiom(Axiom::RTorsion),
            Key::Axiom(Axiom::Helly),
        ],
    });

    let total = 3 * g as usize - 1;
    let mut keys_so_far: Vec<Key> = vec![Key::Genus1];
    for size in 2..=total {
        let below: Vec<Key> = keys_so_far
            .iter()
            .copied()
            .filter(|k| k.covers_below(size))
            .collect();
        if size < total {
            out.push(Expect {
                key: Key::Split(size),
                params: json!({"size": size, "connected": false, "min_components": 2}),
                witnesses: json!({}),
                premises: below.clone(),
            });
            keys_so_far.push(Key::Split(size));
        }
        if size < 3 {
            continue;
        }
        if size <= 2 * g as usize {
            let ell = (size / 2) as u32;
            let classes: &[ClaimClass] = if size % 2 == 0 {
                &[ClaimClass::OneBoundary, ClaimClass::ThreeBoundary]
            } else {
                &[
                    ClaimClass::OneBoundary,
                    ClaimClass::ThreeBoundary,
                    ClaimClass::TwoBoundary,
                ]
            };
            for &class in classes {
                let (fit, h, b, copies) = match class {
                    ClaimClass::OneBoundary => (FitKind::Fit1, ell, 1, g / ell),
                    ClaimClass::ThreeBoundary => (FitKind::Fit2, ell - 1, 3, g / ell),
                    ClaimClass::TwoBoundary => (FitKind::Fit3, ell, 2, (g - 1) / ell),
                };
                let k_boot = size as u64 - 1;
                let count = count_inequality(g as u64, size as u64).ok();
                let mut premises = below.clone();
                premises.extend([
                    Key::Axiom(Axiom::Helly),
                    Key::Axiom(Axiom::OrbitTransitivity),
                ]);
                out.push(Expect {
                    key: Key::Packing(size, class),
                    params: json!({
                        "size": size, "connected": true, "route": "packing",
                        "class": class.name(), "ell": ell,
                        "claim": {"genus": h, "boundary": b, "nonseparating": b > 1},
                        "fit": fit.name(), "copies": copies,
                        "k_boot": k_boot, "k_count": size,
                    }),
                    witnesses: json!({
                        "assembly": pack_subsurfaces(g, fit, ell).ok(),
                        "count_lemma": count,
                        "inequality": ineq(dim, copies as u64 * k_boot),
                    }),
                    premises,
                });
                keys_so_far.push(Key::Packing(size, class));
            }
        } else {
            let mut premises = below.clone();
            premises.push(Key::Axiom(Axiom::Helly));
            out.push(Expect {
                key: Key::Direct(size),
                params: json!({
                    "size": size, "connected": true, "route": "direct",
                    "n": 1, "k_boot": size - 1,
                }),
                witnesses: json!({"inequality": ineq(dim, size as u64 - 1)}),
                premises,
            });
            keys_so_far.push(Key::Direct(size));
        }
    }
    out.push(Expect {
        key: Key::Final,
        params: json!({"size": total, "generated_by": "lambda"}),
        witnesses: json!({}),
        premises: vec![Key::Direct(total)],
    });
    out
}

/// First path where two JSON values differ.
fn first_diff(expected: &Value, found: &Value, path: &str) -> Option<(String, String, String)> {
    match (expected, found) {
        (Value::Object(a), Value::Object(b)) => {
            let keys: BTreeSet<&String> = a.keys().chain(b.keys()).collect();
            for k in keys {
                let p = format!("{path}.{k}");
                match (a.get(k), b.get(k)) {
                    (Some(x), Some(y)) => {
                        if let Some(d) = first_diff(x, y, &p) {
                            return Some(d);
                        }
                    }
                    (x, y) => return Some((p, show(x), show(y))),
                }
            }
            None
        }
        (Value::Array(a), Value::Array(b)) if a.len() == b.len() => a
            .iter()
            .zip(b)
            .enumerate()
            .find_map(|(i, (x, y))| first_diff(x, y, &format!("{path}[{i}]"))),
        _ if expected == found => None,
        _ => Some((path.to_string(), expected.to_string(), found.to_string())),
    }
}

fn show(v: Option<&Value>) -> String {
    v.map_or_else(|| "nothing".to_string(), Value::to_string)
}

struct Checker<'a> {
    cert: &'a Certificate,
    violations: Vec<Violation>,
}

impl Checker<'_> {
    fn push(&mut self, node: Option<usize>, rule: &str, field: &str, expected: String, found: String) {
        self.violations.push(Violation {
            node,
            rule: rule.to_string(),
            field: field.to_string(),
            expected,
            found,
        });
    }

    /// Re-checks the side conditions carried in a node's witnesses.
    fn semantic(&mut self, node: &Node, key: Key, g: u32, dim: u32) {
        let id = Some(node.id);
        let rule = node.rule.as_str();
        if let Some(w) = node.witnesses.get("assembly") {
            match serde_json::from_value::<AssemblyPlan>(w.clone()) {
                Ok(plan) => {
                    if let Err(e) = check_assembly(&plan, g) {
                        self.push(id, rule, "witnesses.assembly", "valid assembly".into(), e.to_string());
                    }
                    let copies = match key {
                        Key::Genus1 => node.params["n"].as_u64(),
                        _ => node.params["copies"].as_u64(),
                    };
                    if copies != Some(plan.marked.len() as u64) {
                        self.push(
                            id,
                            rule,
                            "params.copies",
                            format!("{} marked pieces", plan.marked.len()),
                            show(Some(&node.params["copies"])),
                        );
                    }
                }
                Err(e) => self.push(id, rule, "witnesses.assembly", "assembly plan".into(), e.to_string()),
            }
        }
        let bound = match key {
            Key::Genus1 => node.params["n"].as_u64().zip(node.params["k"].as_u64()),
            Key::Packing(..) => node.params["copies"]
                .as_u64()
                .zip(node.params["k_boot"].as_u64()),
            Key::Direct(_) => node.params["n"].as_u64().zip(node.params["k_boot"].as_u64()),
            _ => None,
        }
        .map(|(n, k)| n * k);
        if let Some(bound) = bound {
            if dim as u64 >= bound {
                self.push(id, rule, "inequality", format!("dim < {bound}"), format!("dim = {dim}"));
            }
            let w = &node.witnesses["inequality"];
            if w["holds"] != Value::Bool(true) || w["bound"].as_u64() != Some(bound) {
                self.push(
                    id,
                    rule,
                    "witnesses.inequality",
                    ineq(dim, bound).to_string(),
                    w.to_string(),
                );
            }
        }
        if let Key::Packing(size, _) = key {
            match count_inequality(g as u64, size as u64) {
                Ok(c) if c.holds => {
                    let lhs = node.witnesses["count_lemma"]["lhs"].as_u64();
                    if lhs != Some(c.lhs) {
                        self.push(
                            id,
                            rule,
                            "witnesses.count_lemma.lhs",
                            c.lhs.to_string(),
                            show(node.witnesses["count_lemma"].get("lhs")),
                        );
                    }
                    if bound.is_some_and(|b| b < c.lhs) {
                        self.push(
                            id,
                            rule,
                            "inequality",
                            format!("bound ≥ count lemma {}", c.lhs),
                            format!("{bound:?}"),
                        );
                    }
                }
                other => self.push(id, rule, "count_lemma", "holds".into(), format!("{other:?}")),
            }
        }
    }
}

/// Quantified side conditions for every ℓ ≤ g: each packing closes up and
/// the count lemma holds at k = 2ℓ and 2ℓ + 1.
fn schema_checks(g: u32, out: &mut Vec<Violation>) {
    for ell in 1..=g {
        for fit in FitKind::ALL {
            if fit.copies(g, ell) == 0 || fit.piece_type(ell).is_none() {
                continue;
            }
            let res = pack_subsurfaces(g, fit, ell).map_err(|e| e.to_string()).and_then(|p| {
                check_assembly(&p, g).map_err(|e| e.to_string())
            });
            if let Err(e) = res {
                out.push(Violation {
                    node: None,
                    rule: "schema".into(),
                    field: format!("{fit} ℓ={ell}"),
                    expected: "valid assembly".into(),
                    found: e,
                });
            }
        }
        for k in [2 * ell, 2 * ell + 1] {
            if k > 2 * g {
                continue;
            }
            match count_inequality(g as u64, k as u64) {
                Ok(c) if c.holds => {}
                other => out.push(Violation {
                    node: None,
                    rule: "schema".into(),
                    field: format!("count lemma k={k}"),
                    expected: "holds".into(),
                    found: format!("{other:?}"),
                }),
            }
        }
    }
}

/// Walks every nonempty subset of Λ and checks some present node covers it.
fn coverage(g: u32, present: &BTreeSet<Key>, out: &mut Vec<Violation>) -> u64 {
    let classifier = Classifier::new(g).expect("genus checked");
    let full = full_mask(g);
    let chunk = 1u64 << 12;
    let chunks = full / chunk + 1;
    let results: Vec<(Vec<Violation>, usize)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut found = Vec::new();
            let mut missing = 0usize;
            let lo = (c * chunk).max(1);
            let hi = ((c + 1) * chunk).min(full + 1);
            let lam = classifier.lambda();
            for bits in lo..hi {
                let size = bits.count_ones() as usize;
                let key = if !lam.is_connected_bits(bits) {
                    Key::Split(size)
                } else if size <= 2 {
                    Key::Genus1
                } else if size > 2 * g as usize {
                    Key::Direct(size)
                } else {
                    let s = CurveSet::from_bits(g, bits);
                    match classifier.classify(&s) {
                        Ok(claim) => Key::Packing(size, claim.class),
                        Err(e) => {
                            missing += 1;
                            if found.len() < COVERAGE_REPORT_LIMIT {
                                found.push(Violation {
                                    node: None,
                                    rule: "coverage".into(),
                                    field: "CLASSIFIER_FAILED".into(),
                                    expected: format!("a canonical claim for {s}"),
                                    found: e.to_string(),
                                });
                            }
                            continue;
                        }
                    }
                };
                if !present.contains(&key) {
                    missing += 1;
                    if found.len() < COVERAGE_REPORT_LIMIT {
                        found.push(Violation {
                            node: None,
                            rule: "coverage".into(),
                            field: "subset".into(),
                            expected: format!("{key} covering {}", CurveSet::from_bits(g, bits)),
                            found: "no such node".into(),
                        });
                    }
                }
            }
            (found, missing)
        })
        .collect();
    let mut total_missing = 0;
    for (v, m) in results {
        total_missing += m;
        for x in v {
            if out.iter().filter(|o| o.rule == "coverage").count() < COVERAGE_REPORT_LIMIT {
                out.push(x);
            }
        }
    }
    if total_missing > COVERAGE_REPORT_LIMIT {
        out.push(Violation {
            node: None,
            rule: "coverage".into(),
            field: "uncovered subsets".into(),
            expected: "0".into(),
            found: total_missing.to_string(),
        });
    }
    full
}

pub fn verify_detailed(cert: &Certificate, opts: VerifyOptions) -> VerifyOutcome {
    let mut ck = Checker {
        cert,
        violations: Vec::new(),
    };
    let h = &cert.header;
    let g = h.genus;
    let dim = h.dim;
    let done = |ck: Checker, subsets, exhaustive| VerifyOutcome {
        nodes_checked: ck.cert.nodes.len(),
        violations: ck.violations,
        subsets_checked: subsets,
        exhaustive,
    };
    if !(2..=MAX_GENUS).contains(&g) {
        ck.push(None, "header", "genus", format!("2..={MAX_GENUS}"), g.to_string());
        return done(ck, 0, false);
    }
    if g == 2 && dim > 1 {
        ck.push(None, "header", "dim", "dim ≤ 1 for genus 2".into(), dim.to_string());
    }

    let variant = if cert.axioms.contains(&Axiom::NoNeutralParabolics) {
        MainVariant::NoNeutralParabolics
    } else {
        MainVariant::Semisimple
    };
    let axioms = theorem_axioms(h.theorem, g, variant);
    if cert.axioms != axioms {
        ck.push(
            None,
            "header",
            "axioms",
            format!("{axioms:?}"),
            format!("{:?}", cert.axioms),
        );
    }

    // ids, topological order, keys
    let mut key_of: BTreeMap<usize, Key> = BTreeMap::new();
    let mut id_of: BTreeMap<Key, usize> = BTreeMap::new();
    for (k, node) in cert.nodes.iter().enumerate() {
        if node.id != k {
            ck.push(Some(k), &node.rule, "id", k.to_string(), node.id.to_string());
        }
        let mut seen = BTreeSet::new();
        for &p in &node.premises {
            if p >= k {
                ck.push(Some(k), &node.rule, "premises", format!("ids below {k}"), p.to_string());
            }
            if !seen.insert(p) {
                ck.push(Some(k), &node.rule, "premises", "distinct ids".into(), p.to_string());
            }
        }
        match node_key(node) {
            Ok(key) => {
                if id_of.insert(key, k).is_some() {
                    ck.push(Some(k), &node.rule, "key", format!("a single {key}"), "duplicate".into());
                }
                key_of.insert(k, key);
            }
            Err(field) => ck.push(Some(k), &node.rule, &field, "a known rule key".into(), "unrecognised".into()),
        }
    }

    let expected = expected_nodes(h.theorem, g, dim, variant);
    let expected_keys: BTreeSet<Key> = expected.iter().map(|e| e.key).collect();
    for (&id, key) in &key_of {
        if !expected_keys.contains(key) {
            ck.push(Some(id), &cert.nodes[id].rule, "key", "an expected node".into(), key.to_string());
        }
    }
    for e in &expected {
        let Some(&id) = id_of.get(&e.key) else {
            ck.push(None, "coverage", "node", e.key.to_string(), "missing".into());
            continue;
        };
        let node = &cert.nodes[id];
        if let Some((path, x, y)) = first_diff(&e.params, &node.params, "params") {
            ck.push(Some(id), &node.rule, &path, x, y);
        }
        if let Some((path, x, y)) = first_diff(&e.witnesses, &node.witnesses, "witnesses") {
            ck.push(Some(id), &node.rule, &path, x, y);
        }
        let want: BTreeSet<Key> = e.premises.iter().copied().collect();
        let have: BTreeSet<Key> = node
            .premises
            .iter()
            .filter_map(|p| key_of.get(p).copied())
            .collect();
        for k in want.difference(&have) {
            ck.push(Some(id), &node.rule, "premises", k.to_string(), "missing".into());
        }
        for k in have.difference(&want) {
            ck.push(Some(id), &node.rule, "premises", "nothing".into(), k.to_string());
        }
        ck.semantic(node, e.key, g, dim);
    }

    let conclusion = super::Judgment {
        statement: super::JudgmentForm::Elliptic {
            set: CurveSet::full(g).iter().collect(),
        },
        context: super::Context {
            genus: g,
            dim,
            hypotheses: theorem_hypotheses(h.theorem, variant),
        },
    };
    let want = serde_json::to_value(&conclusion).unwrap();
    let have = serde_json::to_value(&cert.conclusion).unwrap();
    if let Some((path, x, y)) = first_diff(&want, &have, "conclusion") {
        ck.push(None, "conclusion", &path, x, y);
    }

    if g == 2 {
        return done(ck, 0, false);
    }
    schema_checks(g, &mut ck.violations);
    let bound = opts.exhaustive_max_genus.min(EXHAUSTIVE_GENUS_CAP);
    if g <= bound {
        let present: BTreeSet<Key> = id_of.keys().copied().collect();
        let n = coverage(g, &present, &mut ck.violations);
        done(ck, n, true)
    } else {
        done(ck, 0, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bootstrap::{derive, DeriveOptions};

    #[test]
    fn accepts_derivations() {
        for g in 3..=5 {
            for th in [Theorem::Technical, Theorem::Main, Theorem::Kg] {
                let cert = derive(th, g, g - 1, DeriveOptions::default()).unwrap();
                assert_eq!(verify(&cert), Ok(()), "{th} g={g}");
            }
        }
        let cert = derive(
            Theorem::Main,
            4,
            2,
            DeriveOptions {
                main_variant: MainVariant::NoNeutralParabolics,
            },
        )
        .unwrap();
        assert_eq!(verify(&cert), Ok(()));
        assert_eq!(verify(&derive(Theorem::Kg, 2, 1, DeriveOptions::default()).unwrap()), Ok(()));
    }

    #[test]
    fn inflated_copies_detected() {
        let mut cert = derive(Theorem::Technical, 3, 2, DeriveOptions::default()).unwrap();
        let node = cert
            .nodes
            .iter_mut()
            .find(|n| n.params.get("copies").is_some())
            .unwrap();
        let id = node.id;
        let c = node.params["copies"].as_u64().unwrap();
        node.params["copies"] = json!(c + 1);
        let errs = verify(&cert).unwrap_err();
        assert!(errs.iter().any(|v| v.node == Some(id)));
    }

    #[test]
    fn deleted_premise_detected() {
        let mut cert = derive(Theorem::Technical, 3, 2, DeriveOptions::default()).unwrap();
        let node = cert.nodes.iter_mut().rev().find(|n| n.premises.len() > 1).unwrap();
        node.premises.pop();
        let errs = verify(&cert).unwrap_err();
        assert!(errs.iter().any(|v| v.field == "premises"));
    }

    #[test]
    fn forged_dimension_detected() {
        let mut cert = derive(Theorem::Technical, 3, 2, DeriveOptions::default()).unwrap();
        cert.header.dim = 3;
        cert.conclusion.context.dim = 3;
        assert!(verify(&cert).is_err());
    }

    #[test]
    fn deleted_node_detected() {
        let mut cert = derive(Theorem::Technical, 3, 2, DeriveOptions::default()).unwrap();
        let pos = cert
            .nodes
            .iter()
            .position(|n| n.rule == "conjugate_bootstrap")
            .unwrap();
        cert.nodes.remove(pos);
        let errs = verify(&cert).unwrap_err();
        assert!(errs.iter().any(|v| v.rule == "coverage"));
    }
}
