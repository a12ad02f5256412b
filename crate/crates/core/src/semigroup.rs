//! Finite semigroups given by their Cayley tables.
//!
//! Elements are dense indices `0..n`. The table is stored row-major, so
//! `table[x * n + y]` is the product `x * y`. Every constructor that accepts
//! raw data validates range and associativity; once built, a
//! [`FiniteSemigroup`] is immutable.

use std::fmt;

use thiserror::Error;

use crate::hull::Multiplier;

/// Index of an element of a finite semigroup.
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("table has {rows} rows, expected {n}")]
    RowCount { n: usize, rows: usize },
    #[error("row {row} has {len} entries, expected {n}")]
    RowLength { row: usize, len: usize, n: usize },
    #[error("entry ({x},{y}) = {value} is out of range for order {n}")]
    OutOfRangeEntry { x: usize, y: usize, value: usize, n: usize },
    #[error("operation is not associative at ({x},{y},{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element {x} is out of range for order {n}")]
    IndexOutOfRange { x: usize, n: usize },
    #[error("element {0} is not a two-sided identity")]
    NotIdentity(usize),
    #[error("map has length {len}, expected {n}")]
    MapLength { len: usize, n: usize },
    #[error("image {value} of {x} is out of range for order {n}")]
    ImageOutOfRange { x: usize, value: usize, n: usize },
    #[error("map is not a homomorphism at ({x},{y})")]
    NotHomomorphism { x: usize, y: usize },
}

/// A finite semigroup `(S, *)` on the elements `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<Element>,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("n", &self.n)
            .field("rows", &self.rows().collect::<Vec<_>>())
            .finish()
    }
}

impl FiniteSemigroup {
    /// Validates an `n x n` table given as rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SemigroupError> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(SemigroupError::RowLength { row, len: r.len(), n });
            }
            table.extend_from_slice(r);
        }
        Self::from_table(n, table)
    }

    /// Validates a flat row-major table of length `n * n`.
    pub fn from_table(n: usize, table: Vec<Element>) -> Result<Self, SemigroupError> {
        if table.len() != n * n {
            return Err(SemigroupError::RowCount { n, rows: table.len() / n.max(1) });
        }
        for (i, &value) in table.iter().enumerate() {
            if value >= n {
                return Err(SemigroupError::OutOfRangeEntry { x: i / n, y: i % n, value, n });
            }
        }
        let s = Self { n, table };
        if let Some((x, y, z)) = s.first_non_associative() {
            return Err(SemigroupError::NotAssociative { x, y, z });
        }
        Ok(s)
    }

    /// Builds a semigroup whose associativity is already known.
    pub(crate) fn from_table_unchecked(n: usize, table: Vec<Element>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        Self { n, table }
    }

    pub fn empty() -> Self {
        Self { n: 0, table: Vec::new() }
    }

    pub fn trivial() -> Self {
        Self { n: 1, table: vec![0] }
    }

    /// `x * y = x`.
    pub fn left_zero(n: usize) -> Self {
        Self::from_fn(n, |x, _| x)
    }

    /// `x * y = y`.
    pub fn right_zero(n: usize) -> Self {
        Self::from_fn(n, |_, y| y)
    }

    /// Every product is the zero element `0`.
    pub fn null(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    /// The cyclic group `Z/n` under addition.
    pub fn cyclic_group(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x + y) % n)
    }

    /// The chain `0 < 1 < ... < n-1` under `min`.
    pub fn chain(n: usize) -> Self {
        Self::from_fn(n, |x, y| x.min(y))
    }

    /// The meet-semilattice `{0, a, b}` with `a ∧ b = 0`, labelled `0, 1, 2`.
    pub fn v_semilattice() -> Self {
        Self::from_fn(3, |x, y| if x == y { x } else { 0 })
    }

    fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(op(x, y));
            }
        }
        Self::from_table_unchecked(n, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.table[x * self.n + y]
    }

    /// Flat row-major table.
    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> + '_ {
        (0..self.n).map(move |x| &self.table[x * self.n..(x + 1) * self.n])
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.mul(x, y);
                for z in 0..self.n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The unique two-sided identity, if any.
    pub fn find_identity(&self) -> Option<Element> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// `x *op y = y * x`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.n, |x, y| self.mul(y, x))
    }

    /// Component-wise product; the pair `(s, t)` is the element `s * |T| + t`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let m = other.n;
        Self::from_fn(self.n * m, |a, b| {
            let (s1, t1) = (a / m, a % m);
            let (s2, t2) = (b / m, b % m);
            self.mul(s1, s2) * m + other.mul(t1, t2)
        })
    }

    /// Relabels the elements along the bijection `sigma`.
    pub fn transport(&self, sigma: &SelfMap) -> Result<Self, SemigroupError> {
        if sigma.len() != self.n {
            return Err(SemigroupError::MapLength { len: sigma.len(), n: self.n });
        }
        let inv = sigma.inverse().ok_or(SemigroupError::MapLength { len: sigma.len(), n: self.n })?;
        Ok(Self::from_fn(self.n, |x, y| sigma.apply(self.mul(inv.apply(x), inv.apply(y)))))
    }

    fn check_index(&self, x: Element) -> Result<(), SemigroupError> {
        if x < self.n {
            Ok(())
        } else {
            Err(SemigroupError::IndexOutOfRange { x, n: self.n })
        }
    }

    /// `y ↦ x * y`.
    pub fn inner_left_translation(&self, x: Element) -> Result<SelfMap, SemigroupError> {
        self.check_index(x)?;
        Ok(SelfMap::from_vec_unchecked(self.table[x * self.n..(x + 1) * self.n].to_vec()))
    }

    /// `y ↦ y * x`.
    pub fn inner_right_translation(&self, x: Element) -> Result<SelfMap, SemigroupError> {
        self.check_index(x)?;
        Ok(SelfMap::from_vec_unchecked((0..self.n).map(|y| self.mul(y, x)).collect()))
    }

    /// `S * S`, as a membership mask.
    pub fn products(&self) -> Vec<bool> {
        let mut hit = vec![false; self.n];
        for &v in &self.table {
            hit[v] = true;
        }
        hit
    }
}

/// The canonical homomorphism `x ↦ (𝔏_x, ℜ_x)` into the translational hull.
///
/// The inner witnesses of each entry list every element inducing the same
/// pair, so the result also records the fibres of the map.
pub fn canonical_homomorphism(s: &FiniteSemigroup) -> Vec<Multiplier> {
    let pairs: Vec<(SelfMap, SelfMap)> = s
        .elements()
        .map(|x| {
            (
                s.inner_left_translation(x).expect("in range"),
                s.inner_right_translation(x).expect("in range"),
            )
        })
        .collect();
    pairs
        .iter()
        .map(|(l, r)| Multiplier {
            left: l.clone(),
            right: r.clone(),
            inner_witnesses: pairs
                .iter()
                .enumerate()
                .filter(|(_, (l2, r2))| l2 == l && r2 == r)
                .map(|(y, _)| y)
                .collect(),
        })
        .collect()
}

/// A self-map of `0..n`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelfMap {
    img: Vec<Element>,
}

impl SelfMap {
    pub fn new(img: Vec<Element>) -> Result<Self, SemigroupError> {
        let n = img.len();
        if let Some((x, &value)) = img.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(SemigroupError::ImageOutOfRange { x, value, n });
        }
        Ok(Self { img })
    }

    pub(crate) fn from_vec_unchecked(img: Vec<Element>) -> Self {
        Self { img }
    }

    pub fn identity(n: usize) -> Self {
        Self { img: (0..n).collect() }
    }

    pub fn constant(n: usize, c: Element) -> Self {
        Self { img: vec![c; n] }
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.img[x]
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    pub fn images(&self) -> &[Element] {
        &self.img
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SelfMap) -> SelfMap {
        SelfMap { img: other.img.iter().map(|&x| self.img[x]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Option<SelfMap> {
        let n = self.img.len();
        let mut inv = vec![usize::MAX; n];
        for (x, &y) in self.img.iter().enumerate() {
            if y >= n || inv[y] != usize::MAX {
                return None;
            }
            inv[y] = x;
        }
        Some(SelfMap { img: inv })
    }
}

/// A monoid: a semigroup with a designated two-sided identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    sg: FiniteSemigroup,
    identity: Element,
}

impl FiniteMonoid {
    pub fn new(sg: FiniteSemigroup, identity: Element) -> Result<Self, SemigroupError> {
        sg.check_index(identity)?;
        if sg.elements().any(|x| sg.mul(identity, x) != x || sg.mul(x, identity) != x) {
            return Err(SemigroupError::NotIdentity(identity));
        }
        Ok(Self { sg, identity })
    }

    /// Detects the identity of `sg`, if it has one.
    pub fn from_semigroup(sg: FiniteSemigroup) -> Option<Self> {
        sg.find_identity().map(|identity| Self { sg, identity })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.sg
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn order(&self) -> usize {
        self.sg.order()
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.sg.mul(x, y)
    }
}

/// A verified semigroup homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupHom {
    src: FiniteSemigroup,
    dst: FiniteSemigroup,
    map: Vec<Element>,
}

impl SemigroupHom {
    pub fn new(src: FiniteSemigroup, dst: FiniteSemigroup, map: Vec<Element>) -> Result<Self, SemigroupError> {
        check_map(&map, src.order(), dst.order())?;
        if let Some((x, y)) = first_hom_violation(&src, &dst, &map) {
            return Err(SemigroupError::NotHomomorphism { x, y });
        }
        Ok(Self { src, dst, map })
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        Self { src: s.clone(), dst: s.clone(), map: s.elements().collect() }
    }

    pub fn src(&self) -> &FiniteSemigroup {
        &self.src
    }

    pub fn dst(&self) -> &FiniteSemigroup {
        &self.dst
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SemigroupHom) -> Result<SemigroupHom, SemigroupError> {
        if self.dst != other.src {
            return Err(SemigroupError::MapLength { len: other.src.order(), n: self.dst.order() });
        }
        Ok(SemigroupHom {
            src: self.src.clone(),
            dst: other.dst.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        })
    }
}

pub(crate) fn check_map(map: &[Element], n_src: usize, n_dst: usize) -> Result<(), SemigroupError> {
    if map.len() != n_src {
        return Err(SemigroupError::MapLength { len: map.len(), n: n_src });
    }
    if let Some((x, &value)) = map.iter().enumerate().find(|(_, &v)| v >= n_dst) {
        return Err(SemigroupError::ImageOutOfRange { x, value, n: n_dst });
    }
    Ok(())
}

/// First pair `(x, y)` with `map(x * y) != map(x) * map(y)`.
pub fn first_hom_violation(src: &FiniteSemigroup, dst: &FiniteSemigroup, map: &[Element]) -> Option<(usize, usize)> {
    for x in src.elements() {
        for y in src.elements() {
            if map[src.mul(x, y)] != dst.mul(map[x], map[y]) {
                return Some((x, y));
            }
        }
    }
    None
}
