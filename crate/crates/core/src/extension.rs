//! Extending homomorphisms into translational hulls.
//!
//! Given a translation non-degenerate homomorphism `f: S -> TrHull(T)` into the
//! hull of a non-degenerate `T`, every `u ∈ T` can be written `u = f_L(s)(t)`
//! and `u = f_R(s')(t')`, and
//!
//! ```text
//! f♯(L, R) = ( u ↦ f_L(L(s))(t),  u ↦ f_R(R(s'))(t') )
//! ```
//!
//! is the unique monoid homomorphism `TrHull(S) -> TrHull(T)` with
//! `f♯ ∘ 𝔐_S = f`. Everything else here is built from `♯`:
//! `TrHull(f) = (𝔐_T ∘ f)♯`, `f♭ = 𝔐_M⁻¹ ∘ (𝔐_|M| ∘ f)♯` and
//! `g • f = g♯ ∘ f`.
//!
//! Each construction checks its preconditions and then re-verifies its own
//! output: all decompositions agree, the restriction equation holds, images
//! are multipliers, the result is a monoid homomorphism and, when the source
//! hull is small enough, it is the only one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{carrier_map, inner_multiplier, Concretization, FpAlgebra, LinearPair};
use crate::degeneracy::{degeneracy_report, is_nondegenerate_map, is_translation_nondegenerate};
use crate::fp::FpMatrix;
use crate::homsearch::{find_homomorphisms, OperationTable};
use crate::hull::{hull, TranslationalHull, TABLE_LIMIT};
use crate::semigroup::{first_hom_violation, FiniteMonoid, FiniteSemigroup, SelfMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("precondition failed: {predicate} (witness {witness:?})")]
    PreconditionFailed { predicate: String, witness: Vec<usize> },
    #[error("internal verification failed: {check} (witness {witness:?})")]
    InternalVerificationFailed { check: String, witness: Vec<usize> },
}

fn precondition(predicate: &str, witness: Vec<usize>) -> ExtensionError {
    ExtensionError::PreconditionFailed { predicate: predicate.into(), witness }
}

fn internal(check: &str, witness: Vec<usize>) -> ExtensionError {
    ExtensionError::InternalVerificationFailed { check: check.into(), witness }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionOptions {
    /// Uniqueness is checked by exhaustive search only when the source hull
    /// has at most this many elements.
    pub uniqueness_bound: usize,
}

impl Default for ExtensionOptions {
    fn default() -> Self {
        ExtensionOptions { uniqueness_bound: 64 }
    }
}

/// Element-index map between two finite monoids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonoidHom {
    pub map: Vec<usize>,
}

impl MonoidHom {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &MonoidHom) -> MonoidHom {
        MonoidHom { map: self.map.iter().map(|&x| other.map[x]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Uniqueness {
    Verified { solutions: usize },
    Skipped { hull_size: usize, bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionReport {
    pub decompositions_checked: usize,
    pub hom_pairs_checked: usize,
    pub hom_exhaustive: bool,
    pub translation_nondegenerate: bool,
    pub uniqueness: Uniqueness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub hom: MonoidHom,
    pub report: ExtensionReport,
}

/// For each target `u`, every pair `(s, t)` with `act(s, t) = u`, in
/// lexicographic order.
pub(crate) struct Decompositions {
    by_target: Vec<Vec<(usize, usize)>>,
}

impl Decompositions {
    pub(crate) fn new(n_src: usize, n_tgt: usize, act: impl Fn(usize, usize) -> usize) -> Self {
        let mut by_target = vec![Vec::new(); n_tgt];
        for s in 0..n_src {
            for t in 0..n_tgt {
                by_target[act(s, t)].push((s, t));
            }
        }
        Decompositions { by_target }
    }

    /// `u ↦ act(g(s), t)` using the least decomposition `u = act(s, t)`,
    /// checked against every other decomposition. On disagreement returns
    /// `[u, s, t, s', t']`.
    pub(crate) fn extend(
        &self,
        g: impl Fn(usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
        checked: &mut usize,
    ) -> Result<Vec<usize>, Vec<usize>> {
        let mut out = Vec::with_capacity(self.by_target.len());
        for (u, ds) in self.by_target.iter().enumerate() {
            let (s0, t0) = ds[0];
            let v = act(g(s0), t0);
            for &(s, t) in &ds[1..] {
                *checked += 1;
                if act(g(s), t) != v {
                    return Err(vec![u, s0, t0, s, t]);
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

/// Precomputed data for `f♯`, able to evaluate it on any pair of self-maps
/// of `S`, not only on hull elements.
pub struct SharpBuilder<'a> {
    t_hull: &'a TranslationalHull,
    f: Vec<usize>,
    left: Decompositions,
    right: Decompositions,
}

impl<'a> SharpBuilder<'a> {
    /// Checks that `T` is non-degenerate and `f` is a translation
    /// non-degenerate homomorphism `S -> (TrHull(T), ⋆)`.
    pub fn new(s: &FiniteSemigroup, t_hull: &'a TranslationalHull, f: &[usize]) -> Result<Self, ExtensionError> {
        let n = s.order();
        if f.len() != n {
            return Err(precondition("map has one image per element of the domain", vec![f.len(), n]));
        }
        if let Some(x) = f.iter().position(|&i| i >= t_hull.len()) {
            return Err(precondition("images are hull elements", vec![x, f[x]]));
        }
        let d = degeneracy_report(t_hull.base());
        if let Some((y, z)) = d.witnesses.left {
            return Err(precondition("codomain is left non-degenerate", vec![y, z]));
        }
        if let Some((y, z)) = d.witnesses.right {
            return Err(precondition("codomain is right non-degenerate", vec![y, z]));
        }
        for a in s.elements() {
            for b in s.elements() {
                if f[s.mul(a, b)] != t_hull.star(f[a], f[b]) {
                    return Err(precondition("map is a homomorphism into the hull", vec![a, b]));
                }
            }
        }
        let span = is_translation_nondegenerate(f, t_hull);
        if let Some(u) = span.left_missing {
            return Err(precondition("map is translation non-degenerate (left)", vec![u]));
        }
        if let Some(u) = span.right_missing {
            return Err(precondition("map is translation non-degenerate (right)", vec![u]));
        }
        let m = t_hull.base().order();
        let left = Decompositions::new(n, m, |s, t| t_hull.element(f[s]).left.apply(t));
        let right = Decompositions::new(n, m, |s, t| t_hull.element(f[s]).right.apply(t));
        Ok(SharpBuilder { t_hull, f: f.to_vec(), left, right })
    }

    /// `f♯(L, R)` as a pair of self-maps of `T`.
    pub fn image(&self, l: &SelfMap, r: &SelfMap, checked: &mut usize) -> Result<(SelfMap, SelfMap), ExtensionError> {
        let h = self.t_hull;
        let f = &self.f;
        let left = self
            .left
            .extend(|s| l.apply(s), |s, t| h.element(f[s]).left.apply(t), checked)
            .map_err(|w| internal("left value independent of decomposition", w))?;
        let right = self
            .right
            .extend(|s| r.apply(s), |s, t| h.element(f[s]).right.apply(t), checked)
            .map_err(|w| internal("right value independent of decomposition", w))?;
        Ok((SelfMap::from_vec_unchecked(left), SelfMap::from_vec_unchecked(right)))
    }
}

/// Checks that `map` is a monoid homomorphism, exhaustively when the source
/// has a precomputed table and on pairs with a left factor among the first
/// 64 elements otherwise. Returns the number of pairs checked.
fn check_monoid_hom<A, B>(src: &A, dst: &B, map: &[usize], exhaustive: bool) -> Result<usize, ExtensionError>
where
    A: OperationTable + ?Sized,
    B: OperationTable + ?Sized,
{
    if let (Some(a), Some(b)) = (src.unit(), dst.unit()) {
        if map[a] != b {
            return Err(internal("identity is preserved", vec![a]));
        }
    }
    let rows = if exhaustive { src.size() } else { src.size().min(64) };
    for a in 0..rows {
        for b in 0..src.size() {
            if map[src.op(a, b)] != dst.op(map[a], map[b]) {
                return Err(internal("result is a monoid homomorphism", vec![a, b]));
            }
        }
    }
    Ok(rows * src.size())
}

fn check_uniqueness<A, B>(
    src: &A,
    dst: &B,
    fixed: &[(usize, usize)],
    map: &[usize],
    opts: &ExtensionOptions,
) -> Result<Uniqueness, ExtensionError>
where
    A: OperationTable + ?Sized,
    B: OperationTable + ?Sized,
{
    if src.size() > opts.uniqueness_bound {
        return Ok(Uniqueness::Skipped { hull_size: src.size(), bound: opts.uniqueness_bound });
    }
    let found = find_homomorphisms(src, dst, true, fixed, 2);
    if found.len() != 1 || found[0] != map {
        return Err(internal("extension is the unique solution", vec![found.len()]));
    }
    Ok(Uniqueness::Verified { solutions: 1 })
}

/// `f♯: TrHull(S) -> TrHull(T)` for `f: S -> TrHull(T)` given as hull indices.
pub fn extend_sharp(
    s_hull: &TranslationalHull,
    t_hull: &TranslationalHull,
    f: &[usize],
    opts: &ExtensionOptions,
) -> Result<Extension, ExtensionError> {
    let builder = SharpBuilder::new(s_hull.base(), t_hull, f)?;
    let mut checked = 0;
    let mut map = Vec::with_capacity(s_hull.len());
    for (i, m) in s_hull.elements().iter().enumerate() {
        let (l, r) = builder.image(&m.left, &m.right, &mut checked)?;
        let j = t_hull.index_of(&l, &r).ok_or_else(|| internal("image is a multiplier of the codomain", vec![i]))?;
        map.push(j);
    }
    for (x, &fx) in f.iter().enumerate() {
        if map[s_hull.canonical(x)] != fx {
            return Err(internal("restriction along the canonical map equals f", vec![x]));
        }
    }
    let exhaustive = s_hull.len() <= TABLE_LIMIT;
    let hom_pairs_checked = check_monoid_hom(s_hull, t_hull, &map, exhaustive)?;
    if !is_translation_nondegenerate(&map, t_hull).holds() {
        return Err(internal("extension is translation non-degenerate", vec![]));
    }
    let fixed: Vec<(usize, usize)> = f.iter().enumerate().map(|(x, &fx)| (s_hull.canonical(x), fx)).collect();
    let uniqueness = check_uniqueness(s_hull, t_hull, &fixed, &map, opts)?;
    Ok(Extension {
        hom: MonoidHom { map },
        report: ExtensionReport {
            decompositions_checked: checked,
            hom_pairs_checked,
            hom_exhaustive: exhaustive,
            translation_nondegenerate: true,
            uniqueness,
        },
    })
}

fn require_sem_nd(s: &FiniteSemigroup, which: &str) -> Result<(), ExtensionError> {
    let d = degeneracy_report(s);
    if let Some(u) = d.witnesses.not_a_product {
        return Err(precondition(&format!("{which} is globally idempotent"), vec![u]));
    }
    if let Some((y, z)) = d.witnesses.left.or(d.witnesses.right) {
        return Err(precondition(&format!("{which} is non-degenerate"), vec![y, z]));
    }
    Ok(())
}

fn require_nondegenerate_hom(s: &FiniteSemigroup, t: &FiniteSemigroup, f: &[usize]) -> Result<(), ExtensionError> {
    if f.len() != s.order() || f.iter().any(|&x| x >= t.order()) {
        return Err(precondition("map is total into the codomain", vec![f.len()]));
    }
    if let Some((a, b)) = first_hom_violation(s, t, f) {
        return Err(precondition("map is a homomorphism", vec![a, b]));
    }
    let span = is_nondegenerate_map(f, t);
    if let Some(u) = span.left_missing.or(span.right_missing) {
        return Err(precondition("map is non-degenerate", vec![u]));
    }
    Ok(())
}

/// `TrHull(f) = (𝔐_T ∘ f)♯` for a non-degenerate homomorphism `f: S -> T`
/// between globally idempotent non-degenerate semigroups.
pub fn trhull_on_morphism(
    s_hull: &TranslationalHull,
    t_hull: &TranslationalHull,
    f: &[usize],
    opts: &ExtensionOptions,
) -> Result<Extension, ExtensionError> {
    require_sem_nd(s_hull.base(), "domain")?;
    require_sem_nd(t_hull.base(), "codomain")?;
    require_nondegenerate_hom(s_hull.base(), t_hull.base(), f)?;
    let g: Vec<usize> = f.iter().map(|&x| t_hull.canonical(x)).collect();
    extend_sharp(s_hull, t_hull, &g, opts)
}

/// `f♭ = 𝔐_M⁻¹ ∘ (𝔐_|M| ∘ f)♯: TrHull(S) -> M` for a non-degenerate
/// homomorphism `f: S -> |M|`.
pub fn extend_flat(
    s_hull: &TranslationalHull,
    m: &FiniteMonoid,
    f: &[usize],
    opts: &ExtensionOptions,
) -> Result<Extension, ExtensionError> {
    require_sem_nd(s_hull.base(), "domain")?;
    require_nondegenerate_hom(s_hull.base(), m.semigroup(), f)?;
    let m_hull = hull(m.semigroup()).map_err(|_| internal("hull of the monoid", vec![]))?;
    let canonical = m_hull.canonical_map();
    let mut inverse = vec![usize::MAX; m_hull.len()];
    for (x, &c) in canonical.iter().enumerate() {
        inverse[c] = x;
    }
    if let Some(c) = inverse.iter().position(|&x| x == usize::MAX) {
        return Err(internal("canonical map of a monoid is onto its hull", vec![c]));
    }
    let g: Vec<usize> = f.iter().map(|&x| canonical[x]).collect();
    let sharp = extend_sharp(s_hull, &m_hull, &g, &ExtensionOptions { uniqueness_bound: 0 })?;
    let map: Vec<usize> = sharp.hom.map.iter().map(|&i| inverse[i]).collect();
    for (x, &fx) in f.iter().enumerate() {
        if map[s_hull.canonical(x)] != fx {
            return Err(internal("restriction along the canonical map equals f", vec![x]));
        }
    }
    let exhaustive = s_hull.len() <= TABLE_LIMIT;
    let hom_pairs_checked = check_monoid_hom(s_hull, m, &map, exhaustive)?;
    let fixed: Vec<(usize, usize)> = f.iter().enumerate().map(|(x, &fx)| (s_hull.canonical(x), fx)).collect();
    let uniqueness = check_uniqueness(s_hull, m, &fixed, &map, opts)?;
    Ok(Extension {
        hom: MonoidHom { map },
        report: ExtensionReport {
            decompositions_checked: sharp.report.decompositions_checked,
            hom_pairs_checked,
            hom_exhaustive: exhaustive,
            translation_nondegenerate: sharp.report.translation_nondegenerate,
            uniqueness,
        },
    })
}

/// `g • f = g♯ ∘ f` for `f: S -> TrHull(T)` and `g: T -> TrHull(U)`.
pub fn bullet_compose(
    s: &FiniteSemigroup,
    t_hull: &TranslationalHull,
    u_hull: &TranslationalHull,
    g: &[usize],
    f: &[usize],
) -> Result<Vec<usize>, ExtensionError> {
    // validates f the same way extend_sharp would
    SharpBuilder::new(s, t_hull, f)?;
    let g_sharp = extend_sharp(t_hull, u_hull, g, &ExtensionOptions { uniqueness_bound: 0 })?;
    let composite: Vec<usize> = f.iter().map(|&x| g_sharp.hom.map[x]).collect();
    if !is_translation_nondegenerate(&composite, u_hull).holds() {
        return Err(internal("composite is translation non-degenerate", vec![]));
    }
    Ok(composite)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    /// Monoid homomorphisms `M -> TrHull(S)`.
    pub monoid_homs: usize,
    /// Translation non-degenerate semigroup homomorphisms `|M| -> TrHull(S)`.
    pub candidates: usize,
    /// Monoid homomorphisms hit by a number of candidates other than one,
    /// with that number.
    pub failures: Vec<(Vec<usize>, usize)>,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.monoid_homs == self.candidates
    }
}

/// For every monoid homomorphism `f: M -> TrHull(S)`, counts the translation
/// non-degenerate `φ: |M| -> TrHull(S)` with `φ♯ ∘ 𝔐_M = f`.
pub fn check_adjunction(m: &FiniteMonoid, s_hull: &TranslationalHull) -> Result<AdjunctionReport, ExtensionError> {
    require_sem_nd(s_hull.base(), "target semigroup")?;
    let m_hull = hull(m.semigroup()).map_err(|_| internal("hull of the monoid", vec![]))?;
    let monoid_homs = find_homomorphisms(m, s_hull, true, &[], usize::MAX);
    let candidates: Vec<Vec<usize>> = find_homomorphisms(m.semigroup(), s_hull, false, &[], usize::MAX)
        .into_iter()
        .filter(|phi| is_translation_nondegenerate(phi, s_hull).holds())
        .collect();
    let mut hits = vec![0usize; monoid_homs.len()];
    let mut failures = Vec::new();
    for phi in &candidates {
        let sharp = extend_sharp(&m_hull, s_hull, phi, &ExtensionOptions { uniqueness_bound: 0 })?;
        let induced: Vec<usize> = m.semigroup().elements().map(|x| sharp.hom.map[m_hull.canonical(x)]).collect();
        match monoid_homs.iter().position(|f| *f == induced) {
            Some(i) => hits[i] += 1,
            None => failures.push((induced, 0)),
        }
    }
    for (f, &k) in monoid_homs.iter().zip(&hits) {
        if k != 1 {
            failures.push((f.clone(), k));
        }
    }
    Ok(AdjunctionReport { monoid_homs: monoid_homs.len(), candidates: candidates.len(), failures })
}

/// Result of [`extend_multiplier`]: the hom as indices into the two
/// multiplier monoids, with the verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExtension {
    pub hom: MonoidHom,
    pub report: ExtensionReport,
}

/// `fᴹ: Mult(A) -> Mult(B)` for a homomorphism `f` from the convolution
/// semigroup of `A` to `Mult(B)`, given as indices into
/// `conc_b.mult`. Built exactly as `♯`, with elements of `B` in place of
/// elements of `T`:
///
/// ```text
/// fᴹ_L(L, R)(u) = f_L(L s)(t)   for u = f_L(s)(t)
/// ```
///
/// and checked to be linear, to land in `Mult(B)`, to restrict to `f` along
/// the inner multipliers, and to agree with `♯` of `|Conc_B| ∘ f` after
/// concretization.
pub fn extend_multiplier(
    a: &FpAlgebra,
    conc_a: &Concretization,
    b: &FpAlgebra,
    conc_b: &Concretization,
    f: &[usize],
    opts: &ExtensionOptions,
) -> Result<LinearExtension, ExtensionError> {
    let (mult_a, mult_b) = (&conc_a.mult, &conc_b.mult);
    let (conv_a, conv_b) = (&conc_a.conv, &conc_b.conv);
    let (n, m) = (conv_a.order(), conv_b.order());
    if f.len() != n || f.iter().any(|&x| x >= mult_b.len()) {
        return Err(precondition("map is total into the multiplier monoid", vec![f.len()]));
    }
    let d = degeneracy_report(conv_b);
    if let Some((y, z)) = d.witnesses.left.or(d.witnesses.right) {
        return Err(precondition("codomain convolution semigroup is non-degenerate", vec![y, z]));
    }
    if !conc_b.report.surjective {
        let missing = (0..conc_b.hull.len()).find(|i| !conc_b.report.map.contains(i)).unwrap_or(0);
        return Err(precondition("codomain is concrete", vec![missing]));
    }
    for s in 0..n {
        for t in 0..n {
            if f[conv_a.mul(s, t)] != mult_b.star(f[s], f[t]) {
                return Err(precondition("map is a homomorphism", vec![s, t]));
            }
        }
    }
    let act_l = |s: usize, t: usize| b.index(&mult_b.pair(f[s]).l.apply(&b.vector(t)));
    let act_r = |s: usize, t: usize| b.index(&mult_b.pair(f[s]).r.apply(&b.vector(t)));
    let left = Decompositions::new(n, m, act_l);
    let right = Decompositions::new(n, m, act_r);
    if let Some(u) = left.by_target.iter().position(Vec::is_empty) {
        return Err(precondition("map is multiplier non-degenerate (left)", vec![u]));
    }
    if let Some(u) = right.by_target.iter().position(Vec::is_empty) {
        return Err(precondition("map is multiplier non-degenerate (right)", vec![u]));
    }

    let fld = b.field();
    let to_matrix = |values: &[usize]| -> Result<FpMatrix, ExtensionError> {
        let dim = b.dim();
        let mut mat = FpMatrix::zeros(fld, dim, dim);
        for k in 0..dim {
            let mut e = vec![0; dim];
            e[k] = 1;
            let col = b.vector(values[b.index(&e)]);
            for (row, v) in col.into_iter().enumerate() {
                mat.set(row, k, v);
            }
        }
        if carrier_map(b, &mat).images() != values {
            return Err(internal("extension is linear", vec![]));
        }
        Ok(mat)
    };

    let mut checked = 0;
    let mut map = Vec::with_capacity(mult_a.len());
    for (i, h) in mult_a.pairs().iter().enumerate() {
        let lv = left
            .extend(|s| a.index(&h.l.apply(&a.vector(s))), act_l, &mut checked)
            .map_err(|w| internal("left value independent of decomposition", w))?;
        let rv = right
            .extend(|s| a.index(&h.r.apply(&a.vector(s))), act_r, &mut checked)
            .map_err(|w| internal("right value independent of decomposition", w))?;
        let pair = LinearPair { l: to_matrix(&lv)?, r: to_matrix(&rv)? };
        map.push(mult_b.index_of(&pair).ok_or_else(|| internal("image is a multiplier", vec![i]))?);
    }

    let mut fixed = Vec::with_capacity(n);
    for (s, &fs) in f.iter().enumerate() {
        let inner = mult_a
            .index_of(&inner_multiplier(a, &a.vector(s)))
            .ok_or_else(|| internal("inner multiplier is a multiplier", vec![s]))?;
        if map[inner] != fs {
            return Err(internal("restriction along the inner multipliers equals f", vec![s]));
        }
        fixed.push((inner, fs));
    }
    let hom_pairs_checked = check_monoid_hom(mult_a, mult_b, &map, true)?;

    // naturality of concretization
    let lifted: Vec<usize> = f.iter().map(|&x| conc_b.report.map[x]).collect();
    let builder = SharpBuilder::new(conv_a, &conc_b.hull, &lifted)?;
    for (i, &j) in map.iter().enumerate() {
        let ca = conc_a.hull.element(conc_a.report.map[i]);
        let (l, r) = builder.image(&ca.left, &ca.right, &mut checked)?;
        let cb = conc_b.hull.element(conc_b.report.map[j]);
        if l != cb.left || r != cb.right {
            return Err(internal("concretization square commutes", vec![i]));
        }
    }

    let uniqueness = check_uniqueness(mult_a, mult_b, &fixed, &map, opts)?;
    Ok(LinearExtension {
        hom: MonoidHom { map },
        report: ExtensionReport {
            decompositions_checked: checked,
            hom_pairs_checked,
            hom_exhaustive: true,
            translation_nondegenerate: true,
            uniqueness,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sharp_of_canonical(s: &FiniteSemigroup) -> Extension {
        let h = hull(s).unwrap();
        extend_sharp(&h, &h, h.canonical_map(), &ExtensionOptions::default()).unwrap()
    }

    #[test]
    fn canonical_map_extends_to_identity() {
        for s in [FiniteSemigroup::cyclic_group(2), FiniteSemigroup::v_semilattice(), FiniteSemigroup::chain(3)] {
            let e = sharp_of_canonical(&s);
            assert!(e.hom.is_identity());
            assert_eq!(e.report.uniqueness, Uniqueness::Verified { solutions: 1 });
        }
    }

    #[test]
    fn degenerate_codomain_is_rejected() {
        let s = FiniteSemigroup::left_zero(2);
        let h = hull(&s).unwrap();
        let err = extend_sharp(&h, &h, h.canonical_map(), &ExtensionOptions::default()).unwrap_err();
        assert_eq!(
            err,
            ExtensionError::PreconditionFailed { predicate: "codomain is right non-degenerate".into(), witness: vec![0, 1] }
        );
    }

    #[test]
    fn constant_inner_map_is_rejected() {
        let t = FiniteSemigroup::chain(2);
        let h = hull(&t).unwrap();
        let c = h.canonical(0);
        let err = extend_sharp(&h, &h, &[c, c], &ExtensionOptions::default()).unwrap_err();
        assert!(matches!(err, ExtensionError::PreconditionFailed { .. }));
    }

    #[test]
    fn trhull_of_group_automorphisms() {
        let z3 = FiniteSemigroup::cyclic_group(3);
        let h = hull(&z3).unwrap();
        let id = trhull_on_morphism(&h, &h, &[0, 1, 2], &ExtensionOptions::default()).unwrap();
        assert!(id.hom.is_identity());
        let neg = trhull_on_morphism(&h, &h, &[0, 2, 1], &ExtensionOptions::default()).unwrap();
        let twice = neg.hom.then(&neg.hom);
        assert!(twice.is_identity());
    }

    #[test]
    fn flat_of_identity_inverts_the_canonical_iso() {
        let m = FiniteMonoid::from_semigroup(FiniteSemigroup::chain(3)).unwrap();
        let h = hull(m.semigroup()).unwrap();
        let flat = extend_flat(&h, &m, &[0, 1, 2], &ExtensionOptions::default()).unwrap();
        for x in 0..3 {
            assert_eq!(flat.hom.map[h.canonical(x)], x);
        }
    }

    #[test]
    fn canonical_is_a_bullet_identity() {
        let s = FiniteSemigroup::v_semilattice();
        let h = hull(&s).unwrap();
        let f = h.canonical_map().to_vec();
        assert_eq!(bullet_compose(&s, &h, &h, h.canonical_map(), &f).unwrap(), f);
    }

    #[test]
    fn adjunction_on_small_instances() {
        let trivial = FiniteMonoid::from_semigroup(FiniteSemigroup::trivial()).unwrap();
        let z2 = FiniteMonoid::from_semigroup(FiniteSemigroup::cyclic_group(2)).unwrap();
        let v = hull(&FiniteSemigroup::v_semilattice()).unwrap();
        for m in [trivial, z2] {
            let r = check_adjunction(&m, &v).unwrap();
            assert!(r.holds(), "{r:?}");
            assert!(r.monoid_homs >= 1);
        }
    }

    #[test]
    fn linear_extension_of_the_field() {
        use crate::algebra::concretization;
        let a = FpAlgebra::prime_field(2);
        let conc = concretization(&a).unwrap();
        let f: Vec<usize> = (0..2)
            .map(|s| conc.mult.index_of(&inner_multiplier(&a, &a.vector(s))).unwrap())
            .collect();
        let e = extend_multiplier(&a, &conc, &a, &conc, &f, &ExtensionOptions::default()).unwrap();
        assert!(e.hom.is_identity());
        assert_eq!(e.report.uniqueness, Uniqueness::Verified { solutions: 1 });
    }

    #[test]
    fn zero_algebra_is_rejected() {
        use crate::algebra::concretization;
        let a = FpAlgebra::zero(2, 1);
        let conc = concretization(&a).unwrap();
        let zero = conc.mult.index_of(&inner_multiplier(&a, &[0])).unwrap();
        let err = extend_multiplier(&a, &conc, &a, &conc, &[zero, zero], &ExtensionOptions::default()).unwrap_err();
        assert!(matches!(err, ExtensionError::PreconditionFailed { .. }));
    }
}
