//! Translational hulls of finite semigroups.
//!
//! A left translation `L` satisfies `L(x*y) = L(x)*y`, a right translation `R`
//! satisfies `R(x*y) = x*R(y)`, and a multiplier is a pair `(L, R)` with the
//! linking law `R(y)*z = y*L(z)`. Multipliers compose as
//! `(L',R') ⋆ (L,R) = (L'∘L, R∘R')` with identity `(id, id)`.
//!
//! [`multipliers`] forms the hull as a fibre product: it tabulates
//! `g(L)(x,z) = x*L(z)` and `d(R)(y,z) = R(y)*z` and joins left and right
//! translations on equal tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homsearch::OperationTable;
use crate::semigroup::{canonical_homomorphism, Element, FiniteMonoid, FiniteSemigroup, SelfMap};

/// Hulls up to this size carry a precomputed ⋆ table.
pub const TABLE_LIMIT: usize = 1024;

/// Hulls up to this size have their ⋆ table re-validated for associativity.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("hull is not closed under composition: element {a} ⋆ element {b} is missing")]
    HullClosureViolation { a: usize, b: usize },
    #[error("hull table is not associative at ({a},{b},{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("carrier map of length {len} is not a bijection of a {n}-element set")]
    IncompatibleCarrier { len: usize, n: usize },
}

/// A multiplier `(L, R)` together with the elements `x` for which
/// `(L, R) = (𝔏_x, ℜ_x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiplier {
    pub left: SelfMap,
    pub right: SelfMap,
    pub inner_witnesses: Vec<Element>,
}

impl Multiplier {
    pub fn is_inner(&self) -> bool {
        !self.inner_witnesses.is_empty()
    }

    /// `self ⋆ other = (self.L ∘ other.L, other.R ∘ self.R)`.
    pub fn star(&self, other: &Multiplier) -> (SelfMap, SelfMap) {
        (self.left.compose(&other.left), other.right.compose(&self.right))
    }

    pub fn key(&self) -> Vec<Element> {
        pair_key(&self.left, &self.right)
    }

    /// Checks the left, right and linking laws directly.
    pub fn is_multiplier_of(&self, s: &FiniteSemigroup) -> bool {
        is_left_translation(s, &self.left)
            && is_right_translation(s, &self.right)
            && s.elements().all(|y| s.elements().all(|z| s.mul(self.right.apply(y), z) == s.mul(y, self.left.apply(z))))
    }
}

pub(crate) fn pair_key(left: &SelfMap, right: &SelfMap) -> Vec<Element> {
    let mut key = Vec::with_capacity(left.len() * 2);
    key.extend_from_slice(left.images());
    key.extend_from_slice(right.images());
    key
}

pub fn is_left_translation(s: &FiniteSemigroup, l: &SelfMap) -> bool {
    l.len() == s.order()
        && s.elements().all(|x| s.elements().all(|y| l.apply(s.mul(x, y)) == s.mul(l.apply(x), y)))
}

pub fn is_right_translation(s: &FiniteSemigroup, r: &SelfMap) -> bool {
    r.len() == s.order()
        && s.elements().all(|x| s.elements().all(|y| r.apply(s.mul(x, y)) == s.mul(x, r.apply(y))))
}

/// Backtracking over images in index order. After assigning `k`, every law
/// instance whose two mentioned images are both assigned and one of which is
/// `k` is checked: `L(x*y) = L(x)*y` or `R(x*y) = x*R(y)`.
fn translations(s: &FiniteSemigroup, left: bool) -> Vec<SelfMap> {
    fn consistent(s: &FiniteSemigroup, img: &[usize], k: usize, left: bool) -> bool {
        for a in 0..=k {
            for b in s.elements() {
                let (ab, rhs) = if left {
                    let ab = s.mul(a, b);
                    (ab, if ab <= k { s.mul(img[a], b) } else { 0 })
                } else {
                    let ba = s.mul(b, a);
                    (ba, if ba <= k { s.mul(b, img[a]) } else { 0 })
                };
                if ab <= k && (a == k || ab == k) && img[ab] != rhs {
                    return false;
                }
            }
        }
        true
    }
    fn go(s: &FiniteSemigroup, img: &mut Vec<usize>, k: usize, left: bool, out: &mut Vec<SelfMap>) {
        let n = s.order();
        if k == n {
            out.push(SelfMap::from_vec_unchecked(img.clone()));
            return;
        }
        for v in 0..n {
            img[k] = v;
            if consistent(s, img, k, left) {
                go(s, img, k + 1, left, out);
            }
        }
        img[k] = usize::MAX;
    }
    let mut img = vec![usize::MAX; s.order()];
    let mut out = Vec::new();
    go(s, &mut img, 0, left, &mut out);
    out
}

/// All left translations, in lexicographic order of image arrays.
pub fn left_translations(s: &FiniteSemigroup) -> Vec<SelfMap> {
    translations(s, true)
}

/// All right translations, in lexicographic order of image arrays.
pub fn right_translations(s: &FiniteSemigroup) -> Vec<SelfMap> {
    translations(s, false)
}

/// `g(L)[x][z] = x * L(z)`.
fn g_table(s: &FiniteSemigroup, l: &SelfMap) -> Vec<Element> {
    let mut t = Vec::with_capacity(s.order() * s.order());
    for x in s.elements() {
        for z in s.elements() {
            t.push(s.mul(x, l.apply(z)));
        }
    }
    t
}

/// `d(R)[y][z] = R(y) * z`.
fn d_table(s: &FiniteSemigroup, r: &SelfMap) -> Vec<Element> {
    let mut t = Vec::with_capacity(s.order() * s.order());
    for y in s.elements() {
        for z in s.elements() {
            t.push(s.mul(r.apply(y), z));
        }
    }
    t
}

/// All multipliers of `s`, in lexicographic order of `(L, R)`, with inner
/// witnesses filled in.
pub fn multipliers(s: &FiniteSemigroup) -> Vec<Multiplier> {
    let lefts = left_translations(s);
    let rights = right_translations(s);

    let mut by_g: HashMap<Vec<Element>, Vec<usize>> = HashMap::new();
    for (i, l) in lefts.iter().enumerate() {
        by_g.entry(g_table(s, l)).or_default().push(i);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (j, r) in rights.iter().enumerate() {
        if let Some(ls) = by_g.get(&d_table(s, r)) {
            pairs.extend(ls.iter().map(|&i| (i, j)));
        }
    }
    // lefts and rights are already sorted, so sorting the index pairs sorts (L, R)
    pairs.sort_unstable();

    let mut witnesses: HashMap<Vec<Element>, Vec<Element>> = HashMap::new();
    for m in canonical_homomorphism(s) {
        witnesses.entry(m.key()).or_insert(m.inner_witnesses);
    }
    pairs
        .into_iter()
        .map(|(i, j)| {
            let left = lefts[i].clone();
            let right = rights[j].clone();
            let inner_witnesses = witnesses.get(&pair_key(&left, &right)).cloned().unwrap_or_default();
            Multiplier { left, right, inner_witnesses }
        })
        .collect()
}

/// The translational hull as a monoid under ⋆.
#[derive(Clone, Debug)]
pub struct TranslationalHull {
    base: FiniteSemigroup,
    elements: Vec<Multiplier>,
    index: HashMap<Vec<Element>, usize>,
    star_table: Option<Vec<u32>>,
    identity: usize,
    canonical: Vec<usize>,
}

/// Computes the hull of `s`.
///
/// Hulls with at most [`TABLE_LIMIT`] elements get a full ⋆ table, checked
/// for closure; larger hulls compose on demand.
pub fn hull(s: &FiniteSemigroup) -> Result<TranslationalHull, HullError> {
    TranslationalHull::from_multipliers(s.clone(), multipliers(s))
}

impl TranslationalHull {
    pub fn from_multipliers(base: FiniteSemigroup, elements: Vec<Multiplier>) -> Result<Self, HullError> {
        let index: HashMap<Vec<Element>, usize> = elements.iter().enumerate().map(|(i, m)| (m.key(), i)).collect();
        let n = base.order();
        let identity = *index
            .get(&pair_key(&SelfMap::identity(n), &SelfMap::identity(n)))
            .expect("(id, id) is always a multiplier");
        let canonical = canonical_homomorphism(&base).iter().map(|m| index[&m.key()]).collect();
        let mut hull = Self { base, elements, index, star_table: None, identity, canonical };
        let len = hull.elements.len();
        if len <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(len * len);
            for a in 0..len {
                for b in 0..len {
                    let (l, r) = hull.elements[a].star(&hull.elements[b]);
                    let c = hull.index_of(&l, &r).ok_or(HullError::HullClosureViolation { a, b })?;
                    table.push(c as u32);
                }
            }
            hull.star_table = Some(table);
            if len <= ASSOCIATIVITY_CHECK_LIMIT {
                for a in 0..len {
                    for b in 0..len {
                        let ab = hull.star(a, b);
                        for c in 0..len {
                            if hull.star(ab, c) != hull.star(a, hull.star(b, c)) {
                                return Err(HullError::NotAssociative { a, b, c });
                            }
                        }
                    }
                }
            }
        }
        Ok(hull)
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Multiplier] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Multiplier {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, left: &SelfMap, right: &SelfMap) -> Option<usize> {
        self.index.get(&pair_key(left, right)).copied()
    }

    /// Index of `⋆`-product. Panics if the product is not a multiplier, which
    /// cannot happen for a hull built by [`hull`].
    pub fn star(&self, a: usize, b: usize) -> usize {
        match &self.star_table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => {
                let (l, r) = self.elements[a].star(&self.elements[b]);
                self.index_of(&l, &r).expect("translational hull is closed under ⋆")
            }
        }
    }

    pub fn has_table(&self) -> bool {
        self.star_table.is_some()
    }

    /// `𝔐_S(x)` as an index into the hull.
    pub fn canonical(&self, x: Element) -> usize {
        self.canonical[x]
    }

    pub fn canonical_map(&self) -> &[usize] {
        &self.canonical
    }

    pub fn inner_count(&self) -> usize {
        self.elements.iter().filter(|m| m.is_inner()).count()
    }

    pub fn outer_count(&self) -> usize {
        self.len() - self.inner_count()
    }

    /// The ⋆ table as a validated [`FiniteMonoid`].
    pub fn to_monoid(&self) -> FiniteMonoid {
        let len = self.len();
        let mut table = Vec::with_capacity(len * len);
        for a in 0..len {
            for b in 0..len {
                table.push(self.star(a, b));
            }
        }
        FiniteMonoid::new(FiniteSemigroup::from_table_unchecked(len, table), self.identity)
            .expect("(id, id) is the identity of the hull")
    }

    /// Machine-readable summary.
    pub fn report(&self) -> HullReport {
        HullReport {
            order: self.base.order(),
            elements: self
                .elements
                .iter()
                .map(|m| HullElement {
                    left: m.left.images().to_vec(),
                    right: m.right.images().to_vec(),
                    inner: m.is_inner(),
                    witnesses: m.inner_witnesses.clone(),
                })
                .collect(),
            star_table: self.star_table.as_ref().map(|_| {
                (0..self.len()).map(|a| (0..self.len()).map(|b| self.star(a, b)).collect()).collect()
            }),
            identity: self.identity,
            canonical: self.canonical.clone(),
            counts: HullCounts { total: self.len(), inner: self.inner_count(), outer: self.outer_count() },
        }
    }
}

impl OperationTable for TranslationalHull {
    fn size(&self) -> usize {
        self.len()
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.star(a, b)
    }
    fn unit(&self) -> Option<usize> {
        Some(self.identity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullCounts {
    pub total: usize,
    pub inner: usize,
    pub outer: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullElement {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub inner: bool,
    pub witnesses: Vec<usize>,
}

/// Serialized form of a hull: image arrays, ⋆ table, inner flags and counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullReport {
    pub order: usize,
    pub elements: Vec<HullElement>,
    pub star_table: Option<Vec<Vec<usize>>>,
    pub identity: usize,
    pub canonical: Vec<usize>,
    pub counts: HullCounts,
}

/// Transports a multiplier along the carrier bijection `sigma`:
/// `(σ∘L∘σ⁻¹, σ∘R∘σ⁻¹)`. The identity bijection leaves `h` unchanged.
pub fn push_forward(h: &Multiplier, sigma: &SelfMap) -> Result<(SelfMap, SelfMap), HullError> {
    let n = h.left.len();
    let inv = match sigma.inverse() {
        Some(inv) if sigma.len() == n => inv,
        _ => return Err(HullError::IncompatibleCarrier { len: sigma.len(), n }),
    };
    Ok((sigma.compose(&h.left).compose(&inv), sigma.compose(&h.right).compose(&inv)))
}
