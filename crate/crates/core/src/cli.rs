//! The `trhull` command line.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 failed precondition,
//! 3 failed internal verification (including a failing `verify` check).

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::algebra::{
    concretization, convolution_semigroup, inner_multiplier, multiplier_monoid, AlgFile, AlgebraError, FpAlgebra,
    LinearPair, CONVOLUTION_BOUND,
};
use crate::census::{run_census, sample, summarize, write_csv, CensusRecord};
use crate::coalgebra::{comultiplier_monoid, inner_comultiplier, transpose_report, FpCoalgebra};
use crate::degeneracy::{degeneracy_report, injectivity_checks, DegeneracyReport};
use crate::extension::{extend_flat, extend_sharp, trhull_on_morphism, Extension, ExtensionError, ExtensionOptions, Uniqueness};
use crate::hull::{hull, HullError, TranslationalHull};
use crate::report::{InputFile, Report};
use crate::semigroup::{FiniteMonoid, FiniteSemigroup};
use crate::sgp::{parse_sgp, to_sgp};
use crate::verify::{run_suites, Scope, VerifyConfig, VerifyError};

#[derive(Parser, Debug)]
#[command(name = "trhull", version, about = "Translational hulls and multiplier monoids")]
pub struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the JSON report to this file as well.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Largest hull listed element by element, and the bound for the
    /// exhaustive uniqueness search of extensions.
    #[arg(long, global = true, default_value_t = 64)]
    max_hull: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Translational hull of a semigroup.
    Hull { file: PathBuf },
    /// Global idempotence, one-sided non-degeneracy and injectivity of 𝔏, ℜ.
    Props { file: PathBuf },
    /// Extend a homomorphism to the hull of its domain.
    Extend {
        mode: ExtendMode,
        domain: PathBuf,
        codomain: PathBuf,
        /// JSON array of images.
        map: PathBuf,
    },
    /// Linear computations on a `.alg` file.
    Alg { sub: AlgCommand, file: PathBuf },
    /// Enumerate all semigroups of one order and write a CSV row per table.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        reduce_iso: bool,
        /// Keep every k-th table.
        #[arg(long)]
        sample_every: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, default_value_t = 25)]
        sample_every: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "fleet")]
        fleet: PathBuf,
    },
    /// Re-evaluate the witnesses of a saved report.
    Recheck { report_file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExtendMode {
    /// Map into hull indices of the codomain; computes f♯.
    Sharp,
    /// Map into a monoid codomain; computes f♭.
    Flat,
    /// Map into codomain elements; computes TrHull(f).
    Trhull,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgCommand {
    Mult,
    Conv,
    Concretize,
    Comult,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    Set,
    Linear,
    All,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<ExtensionError> for CliError {
    fn from(e: ExtensionError) -> Self {
        match e {
            ExtensionError::PreconditionFailed { .. } => CliError::Precondition(e.to_string()),
            ExtensionError::InternalVerificationFailed { .. } => CliError::Internal(e.to_string()),
        }
    }
}

impl From<HullError> for CliError {
    fn from(e: HullError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::BoundExceeded { .. } => CliError::Precondition(e.to_string()),
            AlgebraError::Internal(_) | AlgebraError::Hull(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Text lines and the JSON report of one command.
struct Outcome {
    text: Vec<String>,
    report: Report,
    code: i32,
}

fn read(path: &Path, report: &mut Report) -> Result<String, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    report.inputs.push(InputFile::new(path, &bytes));
    String::from_utf8(bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_sgp(path: &Path, report: &mut Report) -> Result<FiniteSemigroup, CliError> {
    parse_sgp(&read(path, report)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_alg(path: &Path, report: &mut Report) -> Result<AlgFile, CliError> {
    serde_json::from_str(&read(path, report)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn hull_text(h: &TranslationalHull, max: usize) -> Vec<String> {
    let mut out = vec![format!("hull: {} elements ({} inner, {} outer)", h.len(), h.inner_count(), h.outer_count())];
    let s = h.base();
    if s.find_identity().is_some() {
        let onto = h.canonical_map().iter().collect::<HashSet<_>>().len() == h.len();
        if onto && h.len() == s.order() {
            out.push("hull ≅ input monoid (canonical map is a bijective homomorphism)".into());
        }
    }
    if h.len() > max {
        out.push(format!("(listing suppressed: more than {max} elements)"));
        return out;
    }
    for (i, m) in h.elements().iter().enumerate() {
        let kind = if m.is_inner() { format!("inner {:?}", m.inner_witnesses) } else { "outer".into() };
        out.push(format!("  {i}: L = {:?}  R = {:?}  {kind}", m.left.images(), m.right.images()));
    }
    out.push("star table:".into());
    for a in 0..h.len() {
        let row: Vec<String> = (0..h.len()).map(|b| h.star(a, b).to_string()).collect();
        out.push(format!("  {}", row.join(" ")));
    }
    out
}

fn cmd_hull(file: &Path, max: usize) -> Result<Outcome, CliError> {
    let mut report = Report::new("hull");
    let s = read_sgp(file, &mut report)?;
    let h = hull(&s)?;
    report.results = serde_json::to_value(h.report()).expect("serializable");
    Ok(Outcome { text: hull_text(&h, max), report, code: 0 })
}

fn degeneracy_text(d: &DegeneracyReport) -> Vec<String> {
    let w = &d.witnesses;
    let with = |ok: bool, wit: Option<(usize, usize)>, rel: &str| match wit {
        Some((y, z)) if !ok => format!("no ({rel} for y = {y}, z = {z})"),
        _ => yes_no(ok).to_string(),
    };
    vec![
        match w.not_a_product {
            Some(u) => format!("globally idempotent: no ({u} is not a product)"),
            None => "globally idempotent: yes".into(),
        },
        format!("left non-degenerate: {}", with(d.left_nondeg, w.left, "yx = zx")),
        format!("right non-degenerate: {}", with(d.right_nondeg, w.right, "xy = xz")),
    ]
}

fn cmd_props(file: &Path) -> Result<Outcome, CliError> {
    let mut report = Report::new("props");
    let s = read_sgp(file, &mut report)?;
    let d = degeneracy_report(&s);
    let inj = injectivity_checks(&s);
    let mut text = degeneracy_text(&d);
    text.push(format!("𝔏: x ↦ (z ↦ xz) injective: {}", yes_no(inj.frak_l_injective)));
    text.push(format!("ℜ: x ↦ (y ↦ yx) injective: {}", yes_no(inj.frak_r_injective)));
    if !inj.consistent {
        text.push("inconsistent: non-degeneracy and injectivity disagree".into());
    }
    report.results = json!({ "degeneracy": d, "injectivity": inj });
    let code = if inj.consistent { 0 } else { 3 };
    Ok(Outcome { text, report, code })
}

fn uniqueness_text(u: &Uniqueness) -> String {
    match u {
        Uniqueness::Verified { solutions } => {
            format!("uniqueness: exhaustive search over homomorphisms agreeing on the image of 𝔐 found {solutions} solution(s)")
        }
        Uniqueness::Skipped { hull_size, bound } => {
            format!("uniqueness: search skipped (hull has {hull_size} elements, bound {bound})")
        }
    }
}

fn cmd_extend(mode: ExtendMode, domain: &Path, codomain: &Path, map: &Path, max: usize) -> Result<Outcome, CliError> {
    let mut report = Report::new("extend");
    let s = read_sgp(domain, &mut report)?;
    let t = read_sgp(codomain, &mut report)?;
    let f: Vec<usize> = serde_json::from_str(&read(map, &mut report)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", map.display())))?;
    let opts = ExtensionOptions { uniqueness_bound: max };
    let hs = hull(&s)?;
    let (name, ext): (&str, Extension) = match mode {
        ExtendMode::Sharp => ("f♯", extend_sharp(&hs, &hull(&t)?, &f, &opts)?),
        ExtendMode::Trhull => ("TrHull(f)", trhull_on_morphism(&hs, &hull(&t)?, &f, &opts)?),
        ExtendMode::Flat => {
            let m = FiniteMonoid::from_semigroup(t)
                .ok_or_else(|| CliError::Precondition("precondition failed: codomain is a monoid".into()))?;
            ("f♭", extend_flat(&hs, &m, &f, &opts)?)
        }
    };
    let r = &ext.report;
    let mut text = vec![format!("{name} = {:?}", ext.hom.map)];
    if ext.hom.is_identity() && hs.len() == ext.hom.map.len() {
        text.push("(the identity of the hull)".into());
    }
    text.push(format!("decompositions checked: {}", r.decompositions_checked));
    let scope = if r.hom_exhaustive { "all" } else { "sampled" };
    text.push(format!("homomorphism: {} pairs checked ({scope})", r.hom_pairs_checked));
    text.push(format!("translation non-degenerate: {}", yes_no(r.translation_nondegenerate)));
    text.push(uniqueness_text(&r.uniqueness));
    report.results = json!({ "mode": format!("{mode:?}").to_lowercase(), "map": f, "extension": ext.hom, "report": r });
    Ok(Outcome { text, report, code: 0 })
}

fn pair_json(h: &LinearPair) -> serde_json::Value {
    json!({ "l": h.l.to_rows(), "r": h.r.to_rows() })
}

fn algebra_of(file: &AlgFile) -> Result<FpAlgebra, CliError> {
    file.algebra().ok_or_else(|| CliError::Input("file has no \"mul\" key".into()))?.map_err(Into::into)
}

fn coalgebra_of(file: &AlgFile) -> Result<FpCoalgebra, CliError> {
    file.coalgebra().ok_or_else(|| CliError::Input("file has no \"comul\" key".into()))?.map_err(Into::into)
}

fn all_vectors(p: u32, dim: usize) -> Result<Vec<Vec<u32>>, CliError> {
    let n = crate::algebra::pow_bounded(p, dim, CONVOLUTION_BOUND).ok_or_else(|| {
        CliError::Precondition(format!("carrier of {p}^{dim} elements is above the bound {CONVOLUTION_BOUND}"))
    })?;
    Ok((0..n).map(|i| crate::algebra::vector_of(p, dim, i)).collect())
}

fn pair_count_text(total: usize, inner: usize, what: &str) -> String {
    if inner == total {
        format!("{total} pairs, all inner")
    } else {
        format!("{total} {what} pairs ({inner} inner)")
    }
}

fn cmd_alg(sub: AlgCommand, file: &Path) -> Result<Outcome, CliError> {
    let mut report = Report::new(&format!("alg {}", format!("{sub:?}").to_lowercase()));
    let af = read_alg(file, &mut report)?;
    let mut text = Vec::new();
    match sub {
        AlgCommand::Mult => {
            let a = algebra_of(&af)?;
            let m = multiplier_monoid(&a)?;
            let inner: HashSet<LinearPair> =
                all_vectors(a.p(), a.dim())?.iter().map(|f| inner_multiplier(&a, f)).collect();
            let n_inner = m.pairs().iter().filter(|h| inner.contains(h)).count();
            text.push(pair_count_text(m.len(), n_inner, "multiplier"));
            let pairs: Vec<_> = m.pairs().iter().map(pair_json).collect();
            report.results = json!({ "pairs": pairs, "inner": n_inner, "identity": m.identity() });
        }
        AlgCommand::Conv => {
            let a = algebra_of(&af)?;
            let conv = convolution_semigroup(&a, CONVOLUTION_BOUND)?;
            let d = degeneracy_report(&conv);
            text.push(format!("convolution semigroup of order {}", conv.order()));
            text.extend(degeneracy_text(&d));
            report.results = json!({ "order": conv.order(), "sgp": to_sgp(&conv), "degeneracy": d });
        }
        AlgCommand::Concretize => {
            let a = algebra_of(&af)?;
            let c = concretization(&a)?;
            let r = &c.report;
            let verdict = match (r.injective, r.surjective) {
                (true, true) => "bijective: concrete".to_string(),
                (inj, _) => format!("{}, not surjective: NOT concrete", if inj { "injective" } else { "not injective" }),
            };
            text.push(format!("{} multipliers → hull of {} elements", r.multipliers, r.hull_size));
            text.push(verdict);
            report.results = serde_json::to_value(r).expect("serializable");
        }
        AlgCommand::Comult => {
            let c = coalgebra_of(&af)?;
            let m = comultiplier_monoid(&c)?;
            let inner: HashSet<LinearPair> =
                all_vectors(c.p(), c.dim())?.iter().map(|f| inner_comultiplier(&c, f)).collect();
            let n_inner = m.pairs().iter().filter(|h| inner.contains(h)).count();
            let t = transpose_report(&c)?;
            text.push(pair_count_text(m.len(), n_inner, "comultiplier"));
            text.push(format!(
                "transpose onto the multipliers of the dual algebra: bijection {}, isomorphism {}, anti-isomorphism {}",
                yes_no(t.bijection),
                yes_no(t.is_isomorphism()),
                yes_no(t.is_anti_isomorphism())
            ));
            let pairs: Vec<_> = m.pairs().iter().map(pair_json).collect();
            report.results = json!({ "pairs": pairs, "inner": n_inner, "transpose": t });
        }
    }
    Ok(Outcome { text, report, code: 0 })
}

fn cmd_census(
    order: usize,
    reduce_iso: bool,
    every: Option<usize>,
    seed: u64,
    out: Option<&Path>,
    json_mode: bool,
) -> Result<Outcome, CliError> {
    let mut report = Report::new("census");
    let (records, _) = run_census(order, reduce_iso).map_err(|e| CliError::Precondition(e.to_string()))?;
    let records: Vec<CensusRecord> = match every {
        Some(k) => sample(records.into_iter(), k, seed).collect(),
        None => records,
    };
    let summary = summarize(&records);
    let io = |e: std::io::Error| CliError::Input(e.to_string());
    match out {
        Some(path) => {
            let file = fs::File::create(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            write_csv(&records, file).map_err(|e| CliError::Input(e.to_string()))?;
        }
        None if !json_mode => {
            write_csv(&records, std::io::stdout().lock()).map_err(|e| CliError::Input(e.to_string()))?;
        }
        None => {}
    }
    std::io::stdout().flush().map_err(io)?;
    let text = vec![format!(
        "order {order}: {} tables, {} globally idempotent, {} non-degenerate, {} both, {} monoids, {} with outer multipliers",
        summary.total,
        summary.globally_idempotent,
        summary.nondegenerate,
        summary.sem_nd,
        summary.monoids,
        summary.with_outer
    )];
    report.results = json!({ "order": order, "reduce_iso": reduce_iso, "summary": summary });
    Ok(Outcome { text, report, code: 0 })
}

fn cmd_verify(cfg: VerifyConfig) -> Result<Outcome, CliError> {
    let mut report = Report::new("verify");
    let checks = run_suites(&cfg)?;
    let mut text = Vec::new();
    for c in &checks {
        match (&c.pass, &c.detail) {
            (true, _) => text.push(format!("PASS {} ({} instances)", c.id, c.instances)),
            (false, d) => text.push(format!("FAIL {} ({} instances): {}", c.id, c.instances, d.as_deref().unwrap_or(""))),
        }
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    text.push(format!("{} of {} checks passed", checks.len() - failed, checks.len()));
    report.results = json!({
        "scope": cfg.scope,
        "max_order": cfg.max_order,
        "sample_every": cfg.sample_every,
        "seed": cfg.seed,
    });
    report.checks = checks;
    Ok(Outcome { text, report, code: if failed == 0 { 0 } else { 3 } })
}

fn cmd_recheck(path: &Path) -> Result<Outcome, CliError> {
    let mut report = Report::new("recheck");
    let saved: Report = serde_json::from_str(&read(path, &mut report)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mismatched = saved.recheck_witnesses();
    let failing = saved.checks.iter().filter(|c| !c.pass).count();
    let mut text = vec![format!("{failing} failing check(s) re-evaluated on their witnesses")];
    text.extend(mismatched.iter().map(|id| format!("witness does not reproduce the failure: {id}")));
    report.results = json!({ "rechecked": failing, "mismatched": mismatched });
    Ok(Outcome { text, report, code: if mismatched.is_empty() { 0 } else { 3 } })
}

/// Parses `args`, runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let outcome = match cli.command {
        Command::Hull { ref file } => cmd_hull(file, cli.max_hull),
        Command::Props { ref file } => cmd_props(file),
        Command::Extend { mode, ref domain, ref codomain, ref map } => {
            cmd_extend(mode, domain, codomain, map, cli.max_hull)
        }
        Command::Alg { sub, ref file } => cmd_alg(sub, file),
        Command::Census { order, reduce_iso, sample_every, seed, ref out } => {
            cmd_census(order, reduce_iso, sample_every, seed, out.as_deref(), cli.json)
        }
        Command::Verify { scope, max_order, sample_every, seed, ref fleet } => {
            let scope = match scope {
                ScopeArg::Set => Scope::Set,
                ScopeArg::Linear => Scope::Linear,
                ScopeArg::All => Scope::All,
            };
            cmd_verify(VerifyConfig { scope, max_order, sample_every, seed, fleet: Some(fleet.clone()) })
        }
        Command::Recheck { ref report_file } => cmd_recheck(report_file),
    };
    match outcome {
        Ok(o) => {
            let json_text = serde_json::to_string_pretty(&o.report).expect("serializable");
            if let Some(path) = &cli.report {
                if let Err(e) = fs::write(path, &json_text) {
                    eprintln!("error: {}: {e}", path.display());
                    return 1;
                }
            }
            if cli.json {
                println!("{json_text}");
            } else if matches!(cli.command, Command::Census { out: None, .. }) {
                // CSV went to stdout
                for line in &o.text {
                    eprintln!("{line}");
                }
            } else {
                for line in &o.text {
                    println!("{line}");
                }
            }
            o.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
