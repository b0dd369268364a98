mod lemma;
mod report;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mcgfix_core::bootstrap::{
    derive, verify, verify_detailed, Certificate, DeriveOptions, MainVariant, Theorem,
    VerifyOptions, DEFAULT_EXHAUSTIVE_GENUS, EXHAUSTIVE_GENUS_CAP,
};
use mcgfix_core::curve::check_genus;
use mcgfix_core::lickorish::{ClaimClass, Classifier};
use mcgfix_core::nervecplx::{betti_z2, is_homology_sphere, join, nerve, SimplicialComplex};
use mcgfix_core::surface::build_lickorish_surface;
use mcgfix_core::CurveSet;
use serde_json::{json, Value};

use report::RunReport;

#[derive(Parser)]
#[command(name = "mcgfix", version, about = "Fixed-point certificates for mapping class group actions")]
struct Cli {
    /// Print the machine-readable report instead of the human one.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sweep one combinatorial lemma over a genus range.
    Lemma {
        #[arg(value_enum)]
        which: LemmaKind,
        #[arg(long)]
        genus_min: u64,
        #[arg(long)]
        genus_max: u64,
    },
    /// Classify one curve set or every connected subset of Λ.
    Classify {
        #[arg(long)]
        genus: u32,
        #[arg(long, conflicts_with = "set", required_unless_present = "set")]
        all: bool,
        /// Comma-separated curves, e.g. a1,b1,g1.
        #[arg(long)]
        set: Option<String>,
    },
    /// Derive a certificate.
    Certify {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        /// Use the no-neutral-parabolics hypothesis for `main`.
        #[arg(long)]
        no_neutral_parabolics: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a certificate file.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_GENUS)]
        exhaustive_max_genus: u32,
    },
    /// Run a nerve or homology demonstration.
    Nerve {
        #[arg(long, value_enum)]
        demo: Demo,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaKind {
    Goodchains,
    Badchains,
    Size,
    Fit,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Technical,
    Main,
    Kg,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Technical => Theorem::Technical,
            TheoremArg::Main => Theorem::Main,
            TheoremArg::Kg => Theorem::Kg,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    Helly1d,
    SphereJoins,
}

/// Usage or IO problem; exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<RunReport, UsageError>;

fn run_lemma(mut rep: RunReport, which: LemmaKind, lo: u64, hi: u64) -> CmdResult {
    if lo > hi {
        return Err(UsageError(format!("empty genus range {lo}..={hi}")));
    }
    rep.genus_range = Some((lo, hi));
    if let LemmaKind::Count = which {
        if lo == 0 {
            return Err(UsageError("the counting lemma needs genus ≥ 1".into()));
        }
        lemma::count(&mut rep, lo, hi);
        return Ok(rep);
    }
    let min = if let LemmaKind::Fit = which { 1 } else { 2 };
    if lo < min {
        return Err(UsageError(format!("genus must be at least {min}")));
    }
    for g in lo..=hi {
        let g = u32::try_from(g)?;
        match which {
            LemmaKind::Fit => lemma::fit(&mut rep, g),
            _ => {
                check_genus(g)?;
                match which {
                    LemmaKind::Goodchains => lemma::good_chains(&mut rep, g),
                    LemmaKind::Badchains => lemma::bad_chains(&mut rep, g),
                    _ => lemma::size(&mut rep, g),
                }
            }
        }
    }
    Ok(rep)
}

fn claim_json(claim: &mcgfix_core::lickorish::EnclosureClaim) -> Value {
    json!({
        "class": claim.class.name(),
        "size": claim.size,
        "ell": claim.ell,
        "genus_bound": claim.genus_bound,
        "boundary_bound": claim.boundary_bound,
        "nonseparating": claim.nonseparating_required,
        "case": format!("{:?}", claim.case_tag),
        "interval": claim.interval.map(|i| i.to_string()),
        "support": claim.support.to_string(),
    })
}

fn run_classify(mut rep: RunReport, genus: u32, set: Option<String>) -> CmdResult {
    let cl = Classifier::new(genus)?;
    let rg = build_lickorish_surface(genus)?;
    rep.genus_range = Some((genus as u64, genus as u64));
    if let Some(text) = set {
        let s = CurveSet::parse(genus, &text)?;
        if s.is_empty() {
            return Err(UsageError("empty curve set".into()));
        }
        if !cl.lambda().is_connected(&s) {
            let parts: Vec<String> = cl.lambda().components(&s).iter().map(ToString::to_string).collect();
            return Err(UsageError(format!(
                "{s} is disconnected (components {}); only connected sets are classified",
                parts.join(" ")
            )));
        }
        rep.subsets_checked = 1;
        match cl.classify(&s) {
            Ok(claim) => {
                let r = rg.min_enclosing_subsurface(&claim.support)?;
                let ok = r.genus <= claim.genus_bound
                    && r.boundary_count <= claim.boundary_bound
                    && (!claim.nonseparating_required || r.complement_connected);
                if !ok {
                    rep.violation(format!("{s}: support fills to {}", r.filled_type()));
                }
                let mut d = claim_json(&claim);
                d["set"] = json!(s.to_string());
                d["support_fills_to"] = json!(r.filled_type().to_string());
                rep.details = d;
            }
            Err(e) => rep.violation(format!("CLASSIFIER_FAILED: {e}")),
        }
        return Ok(rep);
    }
    let (n, bad, kept) = lemma::sweep(genus, |s| {
        if !cl.lambda().is_connected_bits(s.bits()) {
            return lemma::Verdict::Skip;
        }
        match cl.classify(s) {
            Ok(_) => lemma::Verdict::Ok,
            Err(e) => lemma::Verdict::Bad(format!("CLASSIFIER_FAILED: {e}")),
        }
    });
    rep.subsets_checked = n;
    for k in kept {
        rep.violation(k);
    }
    if bad > rep.violations.len() {
        rep.violation(format!("{} further failures", bad - rep.violations.len()));
    }
    // class counts, serial and deterministic
    let mut counts = [0u64; 3];
    for bits in 1..=mcgfix_core::curve::full_mask(genus) {
        if let Ok(c) = cl.classify(&CurveSet::from_bits(genus, bits)) {
            counts[ClaimClass::ALL.iter().position(|&x| x == c.class).unwrap()] += 1;
        }
    }
    rep.details = json!({
        "one-boundary": counts[0],
        "three-boundary": counts[1],
        "two-boundary": counts[2],
    });
    Ok(rep)
}

fn run_certify(
    mut rep: RunReport,
    genus: u32,
    dim: u32,
    theorem: Theorem,
    nnp: bool,
    out: Option<PathBuf>,
) -> CmdResult {
    rep.genus_range = Some((genus as u64, genus as u64));
    let opts = DeriveOptions {
        main_variant: if nnp {
            MainVariant::NoNeutralParabolics
        } else {
            MainVariant::Semisimple
        },
    };
    let cert = match derive(theorem, genus, dim, opts) {
        Ok(c) => c,
        Err(f) => {
            rep.violation(f.to_string());
            rep.details = json!({"blocking_code": f.code.name(), "blocking_rule": f.rule});
            return Ok(rep);
        }
    };
    if let Err(vs) = verify(&cert) {
        for v in vs {
            rep.violation(v.to_string());
        }
    }
    let mut d = json!({
        "theorem": theorem.name(),
        "nodes": cert.nodes.len(),
        "axioms": cert.axioms.iter().map(|a| a.tag()).collect::<Vec<_>>(),
    });
    if let Some(path) = out {
        std::fs::write(&path, cert.to_json())
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        d["out"] = json!(path.display().to_string());
    }
    rep.details = d;
    Ok(rep)
}

fn run_check(mut rep: RunReport, file: PathBuf, bound: u32) -> CmdResult {
    if bound > EXHAUSTIVE_GENUS_CAP {
        return Err(UsageError(format!(
            "--exhaustive-max-genus is capped at {EXHAUSTIVE_GENUS_CAP}"
        )));
    }
    if bound > DEFAULT_EXHAUSTIVE_GENUS {
        eprintln!("warning: exhaustive coverage up to genus {bound} sweeps up to 2^23 subsets");
    }
    let text = std::fs::read_to_string(&file)
        .map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
    let cert = Certificate::from_json(&text)
        .map_err(|e| UsageError(format!("{}: not a certificate: {e}", file.display())))?;
    let g = cert.header.genus as u64;
    rep.genus_range = Some((g, g));
    let out = verify_detailed(
        &cert,
        VerifyOptions {
            exhaustive_max_genus: bound,
        },
    );
    rep.subsets_checked = out.subsets_checked;
    for v in &out.violations {
        rep.violation(v.to_string());
    }
    rep.details = json!({
        "theorem": cert.header.theorem.name(),
        "dim": cert.header.dim,
        "nodes": out.nodes_checked,
        "exhaustive": out.exhaustive,
    });
    Ok(rep)
}

fn run_nerve(mut rep: RunReport, demo: Demo) -> CmdResult {
    match demo {
        Demo::Helly1d => {
            // every family of up to three integer intervals inside [0, 5]
            let intervals: Vec<BTreeSet<u32>> = (0..=5)
                .flat_map(|a| (a..=5).map(move |b| (a..=b).collect()))
                .collect();
            let mut full_skeleton = 0u64;
            let mut families = Vec::new();
            for a in 0..intervals.len() {
                families.push(vec![a]);
                for b in a..intervals.len() {
                    families.push(vec![a, b]);
                    for c in b..intervals.len() {
                        families.push(vec![a, b, c]);
                    }
                }
            }
            for f in &families {
                let fam: Vec<BTreeSet<u32>> = f.iter().map(|&i| intervals[i].clone()).collect();
                let n = nerve(&fam);
                rep.subsets_checked += 1;
                if n.has_full_skeleton(1) {
                    full_skeleton += 1;
                    if !n.contains_simplex((1u64 << fam.len()) - 1) {
                        rep.violation(format!("family {f:?}: pairwise meeting but no common point"));
                    }
                }
            }
            rep.details = json!({"families": families.len(), "pairwise_intersecting": full_skeleton});
        }
        Demo::SphereJoins => {
            let mut lines = Vec::new();
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            let mut parts = Vec::new();
            while let Some(p) = stack.pop() {
                let sum: usize = p.iter().sum();
                if !p.is_empty() {
                    parts.push(p.clone());
                }
                let from = p.last().copied().unwrap_or(1);
                for k in from..=7usize.saturating_sub(sum) {
                    let mut q = p.clone();
                    q.push(k);
                    stack.push(q);
                }
            }
            parts.sort();
            for p in parts {
                let k = p
                    .iter()
                    .map(|&n| SimplicialComplex::simplex_boundary(n))
                    .reduce(|a, b| join(&a, &b))
                    .expect("nonempty");
                let d = p.iter().sum::<usize>() - 1;
                let name: Vec<String> = p.iter().map(|n| format!("∂Δ_{n}")).collect();
                let b = betti_z2(&k);
                rep.subsets_checked += 1;
                if !is_homology_sphere(&k, d) {
                    rep.violation(format!("{} is not a homology {d}-sphere: {b:?}", name.join(" * ")));
                }
                lines.push(format!("{} ~ S^{d}, reduced betti {b:?}", name.join(" * ")));
            }
            rep.details = json!({"joins": lines});
        }
    }
    Ok(rep)
}

fn configure_workers() -> Result<(), UsageError> {
    if let Ok(v) = std::env::var("MCGFIX_WORKERS") {
        let n: usize = v
            .parse()
            .map_err(|_| UsageError(format!("MCGFIX_WORKERS={v} is not a thread count")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let result = configure_workers().and_then(|()| {
        let rep = RunReport::new(argv);
        match cli.cmd {
            Cmd::Lemma {
                which,
                genus_min,
                genus_max,
            } => run_lemma(rep, which, genus_min, genus_max),
            Cmd::Classify { genus, set, .. } => run_classify(rep, genus, set),
            Cmd::Certify {
                genus,
                dim,
                theorem,
                no_neutral_parabolics,
                out,
            } => run_certify(rep, genus, dim, theorem.into(), no_neutral_parabolics, out),
            Cmd::Check {
                file,
                exhaustive_max_genus,
            } => run_check(rep, file, exhaustive_max_genus),
            Cmd::Nerve { demo } => run_nerve(rep, demo),
        }
    });
    match result {
        Ok(mut rep) => {
            rep.wall_time = start.elapsed();
            if cli.json {
                print!("{}", rep.to_json());
            } else {
                print!("{}", rep.to_human());
            }
            if rep.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
