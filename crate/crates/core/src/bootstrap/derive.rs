//! Certificate emitter.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::count::count_inequality;
use super::{
    theorem_axioms, theorem_hypotheses, Axiom, Certificate, Context, DerivationFailure,
    FailureCode, Header, IsometryClassTag, Judgment, JudgmentForm, Node, Theorem, VERSION,
};
use crate::curve::{check_genus, CurveSet};
use crate::lickorish::{ClaimClass, Classifier, ClassifyError};
use crate::surface::{pack_subsurfaces, FitKind};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MainVariant {
    #[default]
    Semisimple,
    NoNeutralParabolics,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DeriveOptions {
    pub main_variant: MainVariant,
}

/// A rule application before it is placed in a certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleApp {
    pub rule: String,
    pub params: Value,
    pub premises: Vec<usize>,
    pub witnesses: Value,
}

impl RuleApp {
    fn new(rule: &str, params: Value, witnesses: Value) -> Self {
        RuleApp {
            rule: rule.to_string(),
            params,
            premises: Vec::new(),
            witnesses,
        }
    }
}

fn failure(code: FailureCode, rule: &str, params: Value, message: String) -> DerivationFailure {
    DerivationFailure {
        code,
        rule: rule.to_string(),
        params,
        message,
    }
}

fn inequality(dim: u32, bound: u64) -> Value {
    json!({"dim": dim, "bound": bound, "holds": (dim as u64) < bound})
}

/// Elliptic pairs of curves meeting once, via g disjoint one-holed tori and
/// the torsion bootstrap with n = g, k = 1.
pub fn genus1_step(genus: u32, dim: u32) -> Result<RuleApp, DerivationFailure> {
    let params = json!({"n": genus, "k": 1, "dim": dim});
    if genus < 3 {
        return Err(failure(
            FailureCode::Precondition,
            "genus1_step",
            params,
            "genus 2 goes through the R-tree axiom".into(),
        ));
    }
    if dim >= genus {
        return Err(failure(
            FailureCode::DimTooLarge,
            "genus1_step",
            params,
            format!("torsion bootstrap needs dim < n = {genus}, got dim = {dim}"),
        ));
    }
    let plan = pack_subsurfaces(genus, FitKind::Fit1, 1).expect("g copies of Σ_{1,1}");
    Ok(RuleApp::new(
        "genus1_step",
        json!({
            "n": genus,
            "k": 1,
            "sizes": [1, 2],
            "connected": true,
            "fit": "fit1",
            "ell": 1,
            "quotient": "once-punctured-torus",
        }),
        json!({
            "assembly": plan,
            "inequality": inequality(dim, genus as u64),
            "torsion_generators": 2,
        }),
    ))
}

fn split_step(size: usize) -> RuleApp {
    RuleApp::new(
        "split_commutes",
        json!({"size": size, "connected": false, "min_components": 2}),
        json!({}),
    )
}

fn packing_step(
    genus: u32,
    dim: u32,
    size: usize,
    class: ClaimClass,
) -> Result<RuleApp, DerivationFailure> {
    let ell = (size / 2) as u32;
    let fit = class.fit_kind();
    let key = json!({"size": size, "class": class.name()});
    let piece = class.surface_type(ell).ok_or_else(|| {
        failure(
            FailureCode::Precondition,
            "conjugate_bootstrap",
            key.clone(),
            format!("no {} piece for ℓ = {ell}", class.name()),
        )
    })?;
    let plan = pack_subsurfaces(genus, fit, ell).map_err(|e| {
        failure(
            FailureCode::DimCheckFailed,
            "conjugate_bootstrap",
            key.clone(),
            e.to_string(),
        )
    })?;
    let copies = plan.marked.len() as u64;
    let k_boot = size as u64 - 1;
    let count = count_inequality(genus as u64, size as u64).map_err(|e| {
        failure(
            FailureCode::DimCheckFailed,
            "conjugate_bootstrap",
            key.clone(),
            e.to_string(),
        )
    })?;
    let bound = copies * k_boot;
    if !count.holds || dim as u64 >= bound {
        return Err(failure(
            FailureCode::DimCheckFailed,
            "conjugate_bootstrap",
            key,
            format!(
                "need dim < {copies}·{k_boot} = {bound} (count lemma {} ≥ {}), got dim = {dim}",
                count.lhs, count.rhs
            ),
        ));
    }
    Ok(RuleApp::new(
        "conjugate_bootstrap",
        json!({
            "size": size,
            "connected": true,
            "route": "packing",
            "class": class.name(),
            "ell": ell,
            "claim": {
                "genus": piece.genus,
                "boundary": piece.boundary,
                "nonseparating": class.nonseparating(),
            },
            "fit": fit.name(),
            "copies": copies,
            "k_boot": k_boot,
            "k_count": size,
        }),
        json!({
            "assembly": plan,
            "count_lemma": count,
            "inequality": inequality(dim, bound),
        }),
    ))
}

fn direct_step(dim: u32, size: usize) -> Result<RuleApp, DerivationFailure> {
    let bound = size as u64 - 1;
    if dim as u64 >= bound {
        return Err(failure(
            FailureCode::DimCheckFailed,
            "conjugate_bootstrap",
            json!({"size": size, "route": "direct"}),
            format!("need dim < {bound}, got dim = {dim}"),
        ));
    }
    Ok(RuleApp::new(
        "conjugate_bootstrap",
        json!({
            "size": size,
            "connected": true,
            "route": "direct",
            "n": 1,
            "k_boot": bound,
        }),
        json!({"inequality": inequality(dim, bound)}),
    ))
}

/// The inductive step for one connected set S with |S| ≥ 3.
pub fn connected_step(s: &CurveSet, genus: u32, dim: u32) -> Result<RuleApp, DerivationFailure> {
    let key = json!({"set": s.names()});
    let pre = |m: String| failure(FailureCode::Precondition, "conjugate_bootstrap", key.clone(), m);
    if s.len() < 3 {
        return Err(pre(format!("|S| = {} is below 3", s.len())));
    }
    if s.len() > 2 * genus as usize {
        return direct_step(dim, s.len());
    }
    let classifier = Classifier::new(genus).map_err(|e| pre(e.to_string()))?;
    let claim = classifier.classify(s).map_err(|e| match e {
        ClassifyError::Disconnected(_) | ClassifyError::Empty | ClassifyError::Curve(_) => {
            pre(e.to_string())
        }
        _ => failure(
            FailureCode::ClassifierFailed,
            "conjugate_bootstrap",
            key.clone(),
            e.to_string(),
        ),
    })?;
    packing_step(genus, dim, s.len(), claim.class)
}

struct Builder {
    nodes: Vec<Node>,
}

impl Builder {
    fn push(&mut self, app: RuleApp, premises: Vec<usize>) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node {
            id,
            rule: app.rule,
            params: app.params,
            premises,
            witnesses: app.witnesses,
        });
        id
    }
}

fn handle_twist_step(theorem: Theorem, variant: MainVariant) -> (Vec<Axiom>, RuleApp) {
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
        if let Some(effect) = a.effect() {
            classes = effect.apply(&classes);
            steps.push(json!({"axiom": a, "remaining": classes}));
        }
    }
    let app = RuleApp::new(
        "handle_twist_elliptic",
        json!({"subgroup": "handle-separating-twist", "remaining": classes}),
        json!({"start": IsometryClassTag::ALL, "steps": steps}),
    );
    (cited, app)
}

fn conclusion(theorem: Theorem, genus: u32, dim: u32, variant: MainVariant) -> Judgment {
    Judgment {
        statement: JudgmentForm::Elliptic {
            set: CurveSet::full(genus).iter().collect(),
        },
        context: Context {
            genus,
            dim,
            hypotheses: theorem_hypotheses(theorem, variant),
        },
    }
}

/// Derives the fixed-point theorem for a Mod(Σ_g) action on a complete
/// CAT(0) space of dimension `dim`.
pub fn derive(
    theorem: Theorem,
    genus: u32,
    dim: u32,
    opts: DeriveOptions,
) -> Result<Certificate, DerivationFailure> {
    let variant = opts.main_variant;
    check_genus(genus).map_err(|e| {
        failure(
            FailureCode::Precondition,
            "header",
            json!({"genus": genus}),
            e.to_string(),
        )
    })?;
    let header = Header {
        genus,
        dim,
        theorem,
        version: VERSION.to_string(),
    };
    let axioms = theorem_axioms(theorem, genus, variant);
    let mut b = Builder { nodes: Vec::new() };

    if genus == 2 {
        if dim > 1 {
            return Err(failure(
                FailureCode::DimTooLarge,
                "r_tree_fixed_point",
                json!({"dim": dim}),
                format!("the R-tree argument covers dim ≤ 1, got dim = {dim}"),
            ));
        }
        let ax = b.push(
            RuleApp::new("axiom", json!({"tag": Axiom::RTree}), json!({})),
            vec![],
        );
        b.push(
            RuleApp::new("r_tree_fixed_point", json!({"dim": dim}), json!({})),
            vec![ax],
        );
        return Ok(Certificate {
            header,
            axioms,
            nodes: b.nodes,
            conclusion: conclusion(theorem, genus, dim, variant),
        });
    }

    let mut axiom_id = std::collections::BTreeMap::new();
    for &a in &axioms {
        let id = b.push(RuleApp::new("axiom", json!({"tag": a}), json!({})), vec![]);
        axiom_id.insert(a, id);
    }
    let (cited, twist) = handle_twist_step(theorem, variant);
    let elim = twist.params["remaining"].clone();
    if elim != json!([IsometryClassTag::Elliptic]) {
        return Err(failure(
            FailureCode::Precondition,
            "handle_twist_elliptic",
            twist.params,
            "the cited axioms do not force the twist to be elliptic".into(),
        ));
    }
    let twist_id = b.push(twist, cited.iter().map(|a| axiom_id[a]).collect());

    let g1 = genus1_step(genus, dim)?;
    let g1_id = b.push(
        g1,
        [
            twist_id,
            axiom_id[&Axiom::OrbitTransitivity],
            axiom_id[&Axiom::Sl2zTorsionGeneration],
            axiom_id[&Axiom::RTorsion],
            axiom_id[&Axiom::Helly],
        ]
        .to_vec(),
    );

    // nodes covering sizes below the current one
    let mut below = vec![g1_id];
    let total = 3 * genus as usize - 1;
    let mut last = g1_id;
    for size in 2..=total {
        let mut this_size = Vec::new();
        if size < total {
            this_size.push(b.push(split_step(size), below.clone()));
        }
        if size >= 3 {
            if size <= 2 * genus as usize {
                for &class in ClaimClass::for_size(size) {
                    let app = packing_step(genus, dim, size, class)?;
                    let mut premises = below.clone();
                    premises.extend([axiom_id[&Axiom::Helly], axiom_id[&Axiom::OrbitTransitivity]]);
                    this_size.push(b.push(app, premises));
                }
            } else {
                let app = direct_step(dim, size)?;
                let mut premises = below.clone();
                premises.push(axiom_id[&Axiom::Helly]);
                last = b.push(app, premises);
                this_size.push(last);
            }
        }
        below.extend(this_size);
    }
    b.push(
        RuleApp::new(
            "mod_fixed_point",
            json!({"size": total, "generated_by": "lambda"}),
            json!({}),
        ),
        vec![last],
    );
    Ok(Certificate {
        header,
        axioms,
        nodes: b.nodes,
        conclusion: conclusion(theorem, genus, dim, variant),
    })
}

pub fn derive_technical(genus: u32, dim: u32) -> Result<Certificate, DerivationFailure> {
    derive(Theorem::Technical, genus, dim, DeriveOptions::default())
}

pub fn derive_main(genus: u32, dim: u32) -> Result<Certificate, DerivationFailure> {
    derive(Theorem::Main, genus, dim, DeriveOptions::default())
}

pub fn derive_kg(genus: u32, dim: u32) -> Result<Certificate, DerivationFailure> {
    derive(Theorem::Kg, genus, dim, DeriveOptions::default())
}
