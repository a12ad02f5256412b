//! Property suites run by `trhull verify`.
//!
//! Each statement is a predicate on a small instance (a few semigroups, or a
//! few algebra files). A suite generates every instance in range, evaluates
//! the predicate on all of them in parallel and reports the first failing
//! instance as a witness. Witnesses are plain data, so a saved report can be
//! re-checked with [`recheck`].

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    canonical_map_injectivity, concretization, convolution_semigroup, inner_multiplier, is_multiplier,
    multiplier_monoid, AlgFile, FpAlgebra, CONVOLUTION_BOUND,
};
use crate::census::{enumerate_semigroups, sample};
use crate::coalgebra::{
    comultiplier_monoid, comultiplier_space, dual_convolution, inner_comultiplier_report, is_comultiplier,
    transpose_report, FpCoalgebra,
};
use crate::degeneracy::{degeneracy_report, injectivity_checks, is_nondegenerate_map, is_translation_nondegenerate};
use crate::extension::{
    bullet_compose, check_adjunction, extend_flat, extend_multiplier, extend_sharp, trhull_on_morphism,
    ExtensionOptions, Uniqueness,
};
use crate::homsearch::{find_homomorphisms, is_homomorphism};
use crate::hull::{hull, left_translations, multipliers, right_translations, TranslationalHull};
use crate::semigroup::{FiniteMonoid, FiniteSemigroup};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("no inputs: {0} contains no .alg files")]
    NoInputs(PathBuf),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    BadInput { path: PathBuf, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Set,
    Linear,
    All,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub scope: Scope,
    /// Single-semigroup statements run on the full census up to
    /// `min(max_order, 3)` plus a sample of order 4 when `max_order >= 4`;
    /// statements about several semigroups stop at order 3.
    pub max_order: usize,
    pub sample_every: usize,
    pub seed: u64,
    pub fleet: Option<PathBuf>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { scope: Scope::All, max_order: 4, sample_every: 25, seed: 0, fleet: None }
    }
}

/// An instance of a statement: semigroups as Cayley rows, algebra files, and
/// the paths they came from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub semigroups: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub algebras: Vec<AlgFile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub paths: Vec<String>,
}

impl Instance {
    fn of(sgs: &[&FiniteSemigroup]) -> Self {
        Instance { semigroups: sgs.iter().map(|s| s.rows().map(<[usize]>::to_vec).collect()).collect(), ..Default::default() }
    }

    fn semigroup(&self, i: usize) -> Result<FiniteSemigroup, String> {
        let rows = self.semigroups.get(i).ok_or("missing semigroup")?;
        FiniteSemigroup::from_rows(rows).map_err(|e| e.to_string())
    }

    fn algebra(&self, i: usize) -> Result<FpAlgebra, String> {
        let file = self.algebras.get(i).ok_or("missing algebra")?;
        file.algebra().ok_or("file has no mul key")?.map_err(|e| e.to_string())
    }

    fn coalgebra(&self, i: usize) -> Result<FpCoalgebra, String> {
        let file = self.algebras.get(i).ok_or("missing coalgebra")?;
        file.coalgebra().ok_or("file has no comul key")?.map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Instance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

type Holds = fn(&Instance) -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build_hull(s: &FiniteSemigroup) -> Result<TranslationalHull, String> {
    hull(s).map_err(|e| e.to_string())
}

// single-semigroup statements

fn hull_is_monoid(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let h = build_hull(&s)?;
    let e = h.identity();
    let n = h.len();
    // full associativity for small hulls, else on the first 24 elements
    let k = if n <= 256 { n } else { 24 };
    for a in 0..k {
        ensure(h.star(a, e) == a && h.star(e, a) == a, || format!("identity fails at {a}"))?;
        for b in 0..k {
            let ab = h.star(a, b);
            for c in 0..k {
                ensure(h.star(ab, c) == h.star(a, h.star(b, c)), || format!("not associative at ({a},{b},{c})"))?;
            }
        }
    }
    Ok(())
}

fn canonical_is_homomorphism(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let h = build_hull(&s)?;
    ensure(is_homomorphism(&s, &h, h.canonical_map()), || "𝔐(xy) ≠ 𝔐(x)⋆𝔐(y)".into())
}

fn inner_subsemigroup(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let h = build_hull(&s)?;
    let inner: Vec<usize> = (0..h.len()).filter(|&a| h.element(a).is_inner()).collect();
    for &a in &inner {
        for &b in &inner {
            ensure(h.element(h.star(a, b)).is_inner(), || format!("{a} ⋆ {b} is outer"))?;
        }
    }
    Ok(())
}

fn monoid_hull_isomorphism(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    if s.find_identity().is_none() {
        return Ok(());
    }
    let h = build_hull(&s)?;
    let image: HashSet<usize> = h.canonical_map().iter().copied().collect();
    ensure(image.len() == s.order() && h.len() == s.order(), || {
        format!("canonical map hits {} of {} hull elements", image.len(), h.len())
    })?;
    ensure(is_homomorphism(&s, &h, h.canonical_map()), || "canonical map is not a homomorphism".into())
}

fn commutative_diagonal(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    if !s.is_commutative() || !degeneracy_report(&s).globally_idempotent {
        return Ok(());
    }
    let ms = multipliers(&s);
    ensure(ms.iter().all(|m| m.left == m.right), || "non-diagonal multiplier".into())?;
    let mut lefts: Vec<_> = ms.iter().map(|m| m.left.clone()).collect();
    lefts.sort();
    ensure(lefts == left_translations(&s), || "(L, L) ↦ L is not onto the left translations".into())
}

fn opposite_symmetry(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let h = build_hull(&s)?;
    let op = build_hull(&s.opposite())?;
    ensure(h.len() == op.len(), || "sizes differ".into())?;
    let swap: Vec<usize> = h
        .elements()
        .iter()
        .map(|m| op.index_of(&m.right, &m.left).ok_or_else(|| "swapped pair is not a multiplier".to_string()))
        .collect::<Result<_, _>>()?;
    let n = h.len().min(64);
    for a in 0..n {
        for b in 0..n {
            ensure(swap[h.star(a, b)] == op.star(swap[b], swap[a]), || format!("order not reversed at ({a},{b})"))?;
        }
    }
    Ok(())
}

fn pullback_matches_pair_filter(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let mut naive = Vec::new();
    for l in left_translations(&s) {
        for r in right_translations(&s) {
            if s.elements().all(|y| s.elements().all(|z| s.mul(r.apply(y), z) == s.mul(y, l.apply(z)))) {
                naive.push((l.clone(), r));
            }
        }
    }
    let joined: Vec<_> = multipliers(&s).into_iter().map(|m| (m.left, m.right)).collect();
    ensure(joined == naive, || "fibre product differs from the pair filter".into())
}

fn translations_of_opposite(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    ensure(right_translations(&s) == left_translations(&s.opposite()), || "mismatch".into())
}

fn monoids_nondegenerate(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    ensure(s.find_identity().is_none() || degeneracy_report(&s).all(), || "monoid fails a predicate".into())
}

fn identity_map_criterion(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let id: Vec<usize> = s.elements().collect();
    ensure(is_nondegenerate_map(&id, &s).holds() == degeneracy_report(&s).globally_idempotent, || "mismatch".into())
}

fn injectivity_criterion(i: &Instance) -> Result<(), String> {
    let r = injectivity_checks(&i.semigroup(0)?);
    ensure(r.consistent, || format!("{r:?}"))
}

fn witnesses_recheck(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    ensure(degeneracy_report(&s).recheck(&s), || "witness does not recheck".into())
}

fn all_maps(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(k as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0; k];
        for slot in v.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        v
    })
}

fn map_vs_translation_nondegeneracy(i: &Instance) -> Result<(), String> {
    let t = i.semigroup(0)?;
    let h = build_hull(&t)?;
    for k in 1..=3 {
        for f in all_maps(k, t.order()) {
            let lifted: Vec<usize> = f.iter().map(|&x| h.canonical(x)).collect();
            ensure(is_nondegenerate_map(&f, &t).holds() == is_translation_nondegenerate(&lifted, &h).holds(), || {
                format!("map {f:?}")
            })?;
        }
    }
    Ok(())
}

fn canonical_not_onto(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let h = build_hull(&s)?;
    ensure(degeneracy_report(&s).all() && h.outer_count() > 0, || "no outer multiplier".into())
}

// statements about several semigroups

fn monoid_homs_nondegenerate(i: &Instance) -> Result<(), String> {
    let m = FiniteMonoid::from_semigroup(i.semigroup(0)?).ok_or("not a monoid")?;
    let n = FiniteMonoid::from_semigroup(i.semigroup(1)?).ok_or("not a monoid")?;
    for f in find_homomorphisms(&m, &n, true, &[], usize::MAX) {
        ensure(is_nondegenerate_map(&f, n.semigroup()).holds(), || format!("hom {f:?}"))?;
    }
    Ok(())
}

fn nondegenerate_homs(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<Vec<usize>> {
    find_homomorphisms(s, t, false, &[], usize::MAX)
        .into_iter()
        .filter(|f| is_nondegenerate_map(f, t).holds())
        .collect()
}

fn nondegenerate_homs_compose(i: &Instance) -> Result<(), String> {
    let (s, t, u) = (i.semigroup(0)?, i.semigroup(1)?, i.semigroup(2)?);
    for f in nondegenerate_homs(&s, &t) {
        for g in nondegenerate_homs(&t, &u) {
            let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
            ensure(is_nondegenerate_map(&gf, &u).holds(), || format!("f = {f:?}, g = {g:?}"))?;
        }
    }
    Ok(())
}

/// Every hull met by the set suites is far below this bound.
const EXHAUSTIVE: ExtensionOptions = ExtensionOptions { uniqueness_bound: 1 << 12 };

fn translation_nondegenerate_homs(s: &FiniteSemigroup, h: &TranslationalHull) -> Vec<Vec<usize>> {
    find_homomorphisms(s, h, false, &[], usize::MAX)
        .into_iter()
        .filter(|f| is_translation_nondegenerate(f, h).holds())
        .collect()
}

fn sharp_extension(i: &Instance) -> Result<(), String> {
    let (s, t) = (i.semigroup(0)?, i.semigroup(1)?);
    let (hs, ht) = (build_hull(&s)?, build_hull(&t)?);
    for f in translation_nondegenerate_homs(&s, &ht) {
        let e = extend_sharp(&hs, &ht, &f, &EXHAUSTIVE).map_err(|e| format!("f = {f:?}: {e}"))?;
        ensure(matches!(e.report.uniqueness, Uniqueness::Verified { solutions: 1 }), || "uniqueness skipped".into())?;
    }
    Ok(())
}

fn trhull_functor(i: &Instance) -> Result<(), String> {
    let (s, t, u) = (i.semigroup(0)?, i.semigroup(1)?, i.semigroup(2)?);
    let (hs, ht, hu) = (build_hull(&s)?, build_hull(&t)?, build_hull(&u)?);
    let opts = ExtensionOptions { uniqueness_bound: 0 };
    let id: Vec<usize> = s.elements().collect();
    let tid = trhull_on_morphism(&hs, &hs, &id, &opts).map_err(|e| e.to_string())?;
    ensure(tid.hom.is_identity(), || "TrHull(id) is not the identity".into())?;
    for f in nondegenerate_homs(&s, &t) {
        let tf = trhull_on_morphism(&hs, &ht, &f, &opts).map_err(|e| e.to_string())?;
        for g in nondegenerate_homs(&t, &u) {
            let tg = trhull_on_morphism(&ht, &hu, &g, &opts).map_err(|e| e.to_string())?;
            let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
            let tgf = trhull_on_morphism(&hs, &hu, &gf, &opts).map_err(|e| e.to_string())?;
            ensure(tgf.hom == tf.hom.then(&tg.hom), || format!("f = {f:?}, g = {g:?}"))?;
        }
    }
    Ok(())
}

fn flat_extension(i: &Instance) -> Result<(), String> {
    let s = i.semigroup(0)?;
    let m = FiniteMonoid::from_semigroup(i.semigroup(1)?).ok_or("not a monoid")?;
    let hs = build_hull(&s)?;
    for f in nondegenerate_homs(&s, m.semigroup()) {
        let e = extend_flat(&hs, &m, &f, &EXHAUSTIVE).map_err(|e| format!("f = {f:?}: {e}"))?;
        ensure(matches!(e.report.uniqueness, Uniqueness::Verified { solutions: 1 }), || "uniqueness skipped".into())?;
    }
    Ok(())
}

fn bullet_category(i: &Instance) -> Result<(), String> {
    let (s, t, u) = (i.semigroup(0)?, i.semigroup(1)?, i.semigroup(2)?);
    let (hs, ht, hu) = (build_hull(&s)?, build_hull(&t)?, build_hull(&u)?);
    let err = |e: crate::extension::ExtensionError| e.to_string();
    let fs: Vec<_> = translation_nondegenerate_homs(&s, &ht).into_iter().take(3).collect();
    let gs: Vec<_> = translation_nondegenerate_homs(&t, &hu).into_iter().take(3).collect();
    let ks: Vec<_> = translation_nondegenerate_homs(&u, &hs).into_iter().take(3).collect();
    for f in &fs {
        ensure(bullet_compose(&s, &ht, &ht, ht.canonical_map(), f).map_err(err)? == *f, || "𝔐 • f ≠ f".into())?;
        ensure(bullet_compose(&s, &hs, &ht, f, hs.canonical_map()).map_err(err)? == *f, || "f • 𝔐 ≠ f".into())?;
        for g in &gs {
            let gf = bullet_compose(&s, &ht, &hu, g, f).map_err(err)?;
            for k in &ks {
                let k_gf = bullet_compose(&s, &hu, &hs, k, &gf).map_err(err)?;
                let kg = bullet_compose(&t, &hu, &hs, k, g).map_err(err)?;
                let kg_f = bullet_compose(&s, &ht, &hs, &kg, f).map_err(err)?;
                ensure(k_gf == kg_f, || format!("f = {f:?}, g = {g:?}, k = {k:?}"))?;
            }
        }
    }
    Ok(())
}

fn adjunction(i: &Instance) -> Result<(), String> {
    let m = FiniteMonoid::from_semigroup(i.semigroup(0)?).ok_or("not a monoid")?;
    let hs = build_hull(&i.semigroup(1)?)?;
    let r = check_adjunction(&m, &hs).map_err(|e| e.to_string())?;
    ensure(r.holds(), || format!("{r:?}"))
}

// algebra statements

fn multipliers_satisfy_laws(i: &Instance) -> Result<(), String> {
    let a = i.algebra(0)?;
    let m = multiplier_monoid(&a).map_err(|e| e.to_string())?;
    ensure(m.pairs().iter().all(|h| is_multiplier(&a, h)), || "pair fails a law".into())?;
    let n = m.len();
    for x in 0..n.min(64) {
        for y in 0..n.min(64) {
            for z in 0..n.min(64) {
                ensure(m.star(m.star(x, y), z) == m.star(x, m.star(y, z)), || format!("({x},{y},{z})"))?;
            }
        }
    }
    Ok(())
}

fn elements(a: &FpAlgebra) -> Result<Vec<Vec<u32>>, String> {
    let n = a.carrier_size(CONVOLUTION_BOUND).ok_or("carrier too large")?;
    Ok((0..n).map(|i| a.vector(i)).collect())
}

fn inner_multipliers_homomorphism(i: &Instance) -> Result<(), String> {
    let a = i.algebra(0)?;
    let m = multiplier_monoid(&a).map_err(|e| e.to_string())?;
    let els = elements(&a)?;
    for f in &els {
        let mf = inner_multiplier(&a, f);
        ensure(m.index_of(&mf).is_some(), || format!("inner multiplier of {f:?} missing"))?;
        for g in &els {
            let lhs = inner_multiplier(&a, &a.product(f, g));
            ensure(lhs == mf.star(&inner_multiplier(&a, g)), || format!("f = {f:?}, g = {g:?}"))?;
        }
    }
    Ok(())
}

fn unital_only_inner(i: &Instance) -> Result<(), String> {
    let a = i.algebra(0)?;
    if a.unit().is_none() {
        return Ok(());
    }
    let m = multiplier_monoid(&a).map_err(|e| e.to_string())?;
    let inner: HashSet<_> = elements(&a)?.iter().map(|f| inner_multiplier(&a, f)).collect();
    ensure(m.pairs().iter().all(|h| inner.contains(h)), || "outer multiplier in a unital algebra".into())
}

fn concreteness(i: &Instance) -> Result<(), String> {
    let a = i.algebra(0)?;
    let c = concretization(&a).map_err(|e| e.to_string())?;
    ensure(c.report.injective || a.unit().is_none(), || "concretization not injective".into())?;
    if a.unit().is_some() || a.is_faithful() {
        ensure(c.report.surjective, || format!("{} multipliers, hull of {}", c.report.multipliers, c.report.hull_size))?;
    }
    Ok(())
}

fn canonical_map_identities(i: &Instance) -> Result<(), String> {
    let r = canonical_map_injectivity(&i.algebra(0)?).map_err(|e| e.to_string())?;
    ensure(r.identities_hold && r.implication_holds(), || format!("{r:?}"))
}

fn commutative_linear_diagonal(i: &Instance) -> Result<(), String> {
    let a = i.algebra(0)?;
    if !a.is_commutative() || !a.product_spans() {
        return Ok(());
    }
    let m = multiplier_monoid(&a).map_err(|e| e.to_string())?;
    ensure(m.pairs().iter().all(|h| h.l == h.r), || "non-diagonal multiplier".into())
}

fn multiplier_extension(i: &Instance) -> Result<(), String> {
    let (a, b) = (i.algebra(0)?, i.algebra(1)?);
    let ca = concretization(&a).map_err(|e| e.to_string())?;
    let cb = concretization(&b).map_err(|e| e.to_string())?;
    if !cb.report.surjective || !degeneracy_report(&cb.conv).is_nondegenerate() {
        return Ok(());
    }
    let opts = ExtensionOptions { uniqueness_bound: 4096 };
    for f in find_homomorphisms(&ca.conv, &cb.mult, false, &[], usize::MAX) {
        let nondeg = (0..cb.conv.order()).all(|u| {
            let hit = |side: bool| {
                (0..ca.conv.order()).any(|s| {
                    let h = cb.mult.pair(f[s]);
                    let m = if side { &h.l } else { &h.r };
                    (0..cb.conv.order()).any(|t| b.index(&m.apply(&b.vector(t))) == u)
                })
            };
            hit(true) && hit(false)
        });
        if !nondeg {
            continue;
        }
        extend_multiplier(&a, &ca, &b, &cb, &f, &opts).map_err(|e| format!("f = {f:?}: {e}"))?;
    }
    Ok(())
}

// coalgebra statements

fn comultipliers_two_routes(i: &Instance) -> Result<(), String> {
    let c = i.coalgebra(0)?;
    let space = comultiplier_space(&c).map_err(|e| e.to_string())?;
    ensure(space.pairs.iter().all(|h| is_comultiplier(&c, h)), || "pair fails a law".into())?;
    comultiplier_monoid(&c).map(|_| ()).map_err(|e| e.to_string())
}

fn comultipliers_transpose(i: &Instance) -> Result<(), String> {
    let r = transpose_report(&i.coalgebra(0)?).map_err(|e| e.to_string())?;
    ensure(r.is_isomorphism(), || format!("{r:?}"))
}

fn inner_comultipliers(i: &Instance) -> Result<(), String> {
    let r = inner_comultiplier_report(&i.coalgebra(0)?, CONVOLUTION_BOUND).map_err(|e| e.to_string())?;
    ensure(r.homomorphism && r.implication_holds(), || format!("{r:?}"))
}

fn dual_convolution_matches(i: &Instance) -> Result<(), String> {
    let c = i.coalgebra(0)?;
    let lhs = dual_convolution(&c, CONVOLUTION_BOUND).map_err(|e| e.to_string())?;
    let rhs = convolution_semigroup(&c.dual_algebra(), CONVOLUTION_BOUND).map_err(|e| e.to_string())?;
    ensure(lhs == rhs, || "tables differ".into())
}

/// Every statement id with its predicate.
pub fn statements() -> Vec<(&'static str, Holds)> {
    vec![
        ("hull-is-monoid", hull_is_monoid as Holds),
        ("canonical-map-is-homomorphism", canonical_is_homomorphism),
        ("inner-multipliers-form-subsemigroup", inner_subsemigroup),
        ("monoid-isomorphic-to-hull", monoid_hull_isomorphism),
        ("commutative-multipliers-are-diagonal", commutative_diagonal),
        ("opposite-swaps-translations", opposite_symmetry),
        ("fibre-product-equals-pair-filter", pullback_matches_pair_filter),
        ("right-translations-are-opposite-left", translations_of_opposite),
        ("monoids-are-nondegenerate", monoids_nondegenerate),
        ("identity-nondegenerate-iff-globally-idempotent", identity_map_criterion),
        ("one-sided-nondegeneracy-iff-injective", injectivity_criterion),
        ("degeneracy-witnesses-recheck", witnesses_recheck),
        ("nondegenerate-iff-translation-nondegenerate", map_vs_translation_nondegeneracy),
        ("canonical-map-not-onto-witness", canonical_not_onto),
        ("monoid-homs-are-nondegenerate", monoid_homs_nondegenerate),
        ("nondegenerate-homs-compose", nondegenerate_homs_compose),
        ("sharp-extension-exists-unique", sharp_extension),
        ("trhull-is-a-functor", trhull_functor),
        ("flat-extension-exists-unique", flat_extension),
        ("bullet-composition-is-a-category", bullet_category),
        ("adjunction-hom-set-bijection", adjunction),
        ("multipliers-form-a-monoid", multipliers_satisfy_laws),
        ("inner-multipliers-homomorphism", inner_multipliers_homomorphism),
        ("unital-algebras-have-only-inner-multipliers", unital_only_inner),
        ("unital-and-faithful-algebras-are-concrete", concreteness),
        ("canonical-map-injectivity", canonical_map_identities),
        ("commutative-linear-multipliers-are-diagonal", commutative_linear_diagonal),
        ("multiplier-extension-exists-unique", multiplier_extension),
        ("comultipliers-direct-equals-dual", comultipliers_two_routes),
        ("comultipliers-transpose-to-dual-multipliers", comultipliers_transpose),
        ("inner-comultipliers-homomorphism", inner_comultipliers),
        ("dual-convolution-is-convolution-of-dual", dual_convolution_matches),
    ]
}

/// Re-evaluates statement `id` on a single instance.
pub fn recheck(id: &str, instance: &Instance) -> Option<bool> {
    statements().into_iter().find(|(s, _)| *s == id).map(|(_, holds)| holds(instance).is_ok())
}

fn holds_fn(id: &str) -> Holds {
    statements().into_iter().find(|(s, _)| *s == id).expect("known statement").1
}

fn run(id: &str, instances: Vec<Instance>) -> CheckResult {
    let holds = holds_fn(id);
    let failure = instances
        .par_iter()
        .enumerate()
        .filter_map(|(k, inst)| holds(inst).err().map(|d| (k, d)))
        .min_by_key(|(k, _)| *k);
    CheckResult {
        id: id.to_string(),
        pass: failure.is_none(),
        instances: instances.len(),
        witness: failure.as_ref().map(|(k, _)| instances[*k].clone()),
        detail: failure.map(|(_, d)| d),
    }
}

struct SetData {
    singles: Vec<FiniteSemigroup>,
    labeled: Vec<FiniteSemigroup>,
    reps: Vec<FiniteSemigroup>,
}

impl SetData {
    fn new(cfg: &VerifyConfig) -> Self {
        let small = cfg.max_order.min(3);
        let labeled: Vec<FiniteSemigroup> =
            (1..=small).flat_map(|n| enumerate_semigroups(n, false).expect("order ≤ 3")).collect();
        let mut singles = labeled.clone();
        if cfg.max_order >= 4 {
            singles.extend(sample(enumerate_semigroups(4, false).expect("order 4"), cfg.sample_every, cfg.seed));
        }
        let reps = (1..=small).flat_map(|n| enumerate_semigroups(n, true).expect("order ≤ 3")).collect();
        SetData { singles, labeled, reps }
    }
}

fn is_sem_nd(s: &FiniteSemigroup) -> bool {
    degeneracy_report(s).all()
}

fn is_monoid(s: &FiniteSemigroup) -> bool {
    s.find_identity().is_some()
}

fn pairs(xs: &[&FiniteSemigroup], ys: &[&FiniteSemigroup]) -> Vec<Instance> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| Instance::of(&[x, y]))).collect()
}

fn triples(xs: &[&FiniteSemigroup]) -> Vec<Instance> {
    let mut out = Vec::new();
    for a in xs {
        for b in xs {
            for c in xs {
                out.push(Instance::of(&[a, b, c]));
            }
        }
    }
    out
}

pub fn run_set(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let data = SetData::new(cfg);
    let singles: Vec<Instance> = data.singles.iter().map(|s| Instance::of(&[s])).collect();
    let labeled: Vec<Instance> = data.labeled.iter().map(|s| Instance::of(&[s])).collect();
    let all: Vec<&FiniteSemigroup> = data.labeled.iter().collect();
    let nondeg: Vec<&FiniteSemigroup> = all.iter().copied().filter(|s| degeneracy_report(s).is_nondegenerate()).collect();
    let sem_nd: Vec<&FiniteSemigroup> = all.iter().copied().filter(|s| is_sem_nd(s)).collect();
    let monoids: Vec<&FiniteSemigroup> = all.iter().copied().filter(|s| is_monoid(s)).collect();
    let reps: Vec<&FiniteSemigroup> = data.reps.iter().collect();
    let rep_sem_nd: Vec<&FiniteSemigroup> = reps.iter().copied().filter(|s| is_sem_nd(s)).collect();
    let rep_monoids: Vec<&FiniteSemigroup> = reps.iter().copied().filter(|s| is_monoid(s)).collect();
    let v = FiniteSemigroup::v_semilattice();

    let mut out = Vec::new();
    for id in [
        "hull-is-monoid",
        "canonical-map-is-homomorphism",
        "inner-multipliers-form-subsemigroup",
        "monoid-isomorphic-to-hull",
        "commutative-multipliers-are-diagonal",
        "opposite-swaps-translations",
        "monoids-are-nondegenerate",
        "identity-nondegenerate-iff-globally-idempotent",
        "one-sided-nondegeneracy-iff-injective",
        "degeneracy-witnesses-recheck",
    ] {
        out.push(run(id, singles.clone()));
    }
    out.push(run("fibre-product-equals-pair-filter", labeled.clone()));
    out.push(run("right-translations-are-opposite-left", labeled.clone()));
    out.push(run("nondegenerate-iff-translation-nondegenerate", labeled));
    out.push(run("canonical-map-not-onto-witness", vec![Instance::of(&[&v])]));
    out.push(run("monoid-homs-are-nondegenerate", pairs(&monoids, &monoids)));
    out.push(run("nondegenerate-homs-compose", triples(&reps)));
    out.push(run("sharp-extension-exists-unique", pairs(&all, &nondeg)));
    out.push(run("trhull-is-a-functor", triples(&rep_sem_nd)));
    out.push(run("flat-extension-exists-unique", pairs(&sem_nd, &monoids)));
    out.push(run("bullet-composition-is-a-category", triples(&rep_sem_nd)));
    let adj: Vec<Instance> = pairs(&rep_monoids, &sem_nd);
    out.push(run("adjunction-hom-set-bijection", adj));
    out
}

/// Reads every `.alg` file of `dir`, sorted by name.
pub fn load_fleet(dir: &Path) -> Result<Vec<(String, AlgFile)>, VerifyError> {
    let io = |source| VerifyError::Io { path: dir.to_path_buf(), source };
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "alg"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(VerifyError::NoInputs(dir.to_path_buf()));
    }
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(|source| VerifyError::Io { path: p.clone(), source })?;
            let file: AlgFile = serde_json::from_str(&text)
                .map_err(|e| VerifyError::BadInput { path: p.clone(), message: e.to_string() })?;
            Ok((p.display().to_string(), file))
        })
        .collect()
}

pub fn run_linear(fleet: &[(String, AlgFile)]) -> Vec<CheckResult> {
    let inst = |items: &[&(String, AlgFile)]| Instance {
        algebras: items.iter().map(|(_, f)| f.clone()).collect(),
        paths: items.iter().map(|(p, _)| p.clone()).collect(),
        ..Default::default()
    };
    let algebras: Vec<&(String, AlgFile)> = fleet.iter().filter(|(_, f)| f.mul.is_some()).collect();
    let coalgebras: Vec<&(String, AlgFile)> = fleet.iter().filter(|(_, f)| f.comul.is_some()).collect();
    let alg_instances: Vec<Instance> = algebras.iter().map(|x| inst(&[x])).collect();
    let co_instances: Vec<Instance> = coalgebras.iter().map(|x| inst(&[x])).collect();
    let small = |f: &AlgFile| crate::algebra::pow_bounded(f.p, f.dim, 16).is_some();
    let mut ext_pairs = Vec::new();
    for a in &algebras {
        for b in &algebras {
            if a.1.p == b.1.p && small(&a.1) && small(&b.1) {
                ext_pairs.push(inst(&[a, b]));
            }
        }
    }

    let mut out = Vec::new();
    for id in [
        "multipliers-form-a-monoid",
        "inner-multipliers-homomorphism",
        "unital-algebras-have-only-inner-multipliers",
        "unital-and-faithful-algebras-are-concrete",
        "canonical-map-injectivity",
        "commutative-linear-multipliers-are-diagonal",
    ] {
        out.push(run(id, alg_instances.clone()));
    }
    out.push(run("multiplier-extension-exists-unique", ext_pairs));
    for id in [
        "comultipliers-direct-equals-dual",
        "comultipliers-transpose-to-dual-multipliers",
        "inner-comultipliers-homomorphism",
        "dual-convolution-is-convolution-of-dual",
    ] {
        out.push(run(id, co_instances.clone()));
    }
    out
}

/// Runs the suites selected by `cfg.scope`.
pub fn run_suites(cfg: &VerifyConfig) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    if matches!(cfg.scope, Scope::Linear | Scope::All) {
        let dir = cfg.fleet.clone().unwrap_or_else(|| PathBuf::from("fleet"));
        let fleet = load_fleet(&dir)?;
        if cfg.scope == Scope::All {
            out.extend(run_set(cfg));
        }
        out.extend(run_linear(&fleet));
    } else {
        out.extend(run_set(cfg));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_statement_id_is_unique() {
        let ids: HashSet<&str> = statements().iter().map(|(id, _)| *id).collect();
        assert_eq!(ids.len(), statements().len());
    }

    #[test]
    fn recheck_detects_a_false_instance() {
        // left-zero of order 2 is not a monoid, so feed it to a statement
        // that assumes monoids on both sides
        let lz = FiniteSemigroup::left_zero(2);
        assert_eq!(recheck("monoid-homs-are-nondegenerate", &Instance::of(&[&lz, &lz])), Some(false));
        let z2 = FiniteSemigroup::cyclic_group(2);
        assert_eq!(recheck("monoid-homs-are-nondegenerate", &Instance::of(&[&z2, &z2])), Some(true));
        assert_eq!(recheck("no-such-statement", &Instance::default()), None);
    }

    #[test]
    fn small_set_suite_passes() {
        let cfg = VerifyConfig { scope: Scope::Set, max_order: 2, ..Default::default() };
        for r in run_set(&cfg) {
            assert!(r.pass, "{r:?}");
        }
    }
}
