//! Finite-dimensional associative algebras over GF(p) and their multipliers.
//!
//! An algebra is given by structure constants `c[i][j][k]`, the coefficient of
//! `e_k` in `e_i·e_j`. Linear maps are matrices acting on column vectors, so
//! `L[k][i]` is the coefficient of `e_k` in `L(e_i)`.
//!
//! The tensor product is taken strictly: `e_i ⊗ e_j` is the basis of `A ⊗ A`,
//! and the unit and associativity isomorphisms of GF(p)-modules are treated
//! as identities on these bases. Generalized elements `GF(p) -> A` are then
//! just coordinate vectors, and the convolution semigroup is the underlying
//! multiplicative semigroup of `A`.
//!
//! Multipliers are found by solving the left, right and linking laws as one
//! homogeneous system in the `2d²` entries of `(L, R)` and enumerating all
//! `p^rank` solutions.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fp::{FieldError, FpMatrix, PrimeField};
use crate::homsearch::OperationTable;
use crate::hull::{hull, HullError, TranslationalHull};
use crate::semigroup::{FiniteMonoid, FiniteSemigroup, SelfMap};

/// Largest carrier `p^d` turned into a Cayley table.
pub const CONVOLUTION_BOUND: usize = 4096;

/// Largest solution set `p^rank` enumerated.
pub const SOLUTION_BOUND: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("structure tensor has the wrong shape: {0}")]
    Shape(String),
    #[error("entry {value} is not reduced mod {p}")]
    EntryOutOfRange { value: u32, p: u32 },
    #[error("not associative on basis triple ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("not coassociative on basis vector {k}")]
    NotCoassociative { k: usize },
    #[error("declared unit is not a two-sided identity")]
    NotUnit,
    #[error("{what} has {size} elements, above the bound {bound}")]
    BoundExceeded { what: &'static str, size: usize, bound: usize },
    #[error("internal verification failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Hull(#[from] HullError),
}

pub(crate) fn check_tensor(p: u32, dim: usize, t: &[Vec<Vec<u32>>]) -> Result<Vec<u32>, AlgebraError> {
    if t.len() != dim || t.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
        return Err(AlgebraError::Shape(format!("expected {dim}×{dim}×{dim}")));
    }
    let flat: Vec<u32> = t.iter().flatten().flatten().copied().collect();
    if let Some(&value) = flat.iter().find(|&&v| v >= p) {
        return Err(AlgebraError::EntryOutOfRange { value, p });
    }
    Ok(flat)
}

pub(crate) fn pow_bounded(p: u32, e: usize, bound: usize) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p as usize).filter(|&a| a <= bound)?;
    }
    Some(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpAlgebra {
    field: PrimeField,
    dim: usize,
    c: Vec<u32>,
    unit: Option<Vec<u32>>,
}

impl FpAlgebra {
    /// Validates shape, range and associativity; the unit is found by solving
    /// `η·e_j = e_j = e_j·η`.
    pub fn new(p: u32, dim: usize, mul: &[Vec<Vec<u32>>]) -> Result<Self, AlgebraError> {
        let field = PrimeField::new(p)?;
        let c = check_tensor(p, dim, mul)?;
        let mut a = FpAlgebra { field, dim, c, unit: None };
        a.check_associative()?;
        a.unit = a.find_unit();
        Ok(a)
    }

    /// Like [`FpAlgebra::new`], additionally checking a declared unit.
    pub fn with_unit(p: u32, dim: usize, mul: &[Vec<Vec<u32>>], unit: &[u32]) -> Result<Self, AlgebraError> {
        let a = Self::new(p, dim, mul)?;
        if unit.len() != dim || !a.is_unit(unit) {
            return Err(AlgebraError::NotUnit);
        }
        Ok(a)
    }

    fn from_fn(p: u32, dim: usize, f: impl Fn(usize, usize, usize) -> u32) -> Self {
        let mul: Vec<Vec<Vec<u32>>> =
            (0..dim).map(|i| (0..dim).map(|j| (0..dim).map(|k| f(i, j, k)).collect()).collect()).collect();
        Self::new(p, dim, &mul).expect("named algebra is valid")
    }

    pub fn zero(p: u32, dim: usize) -> Self {
        Self::from_fn(p, dim, |_, _, _| 0)
    }

    pub fn prime_field(p: u32) -> Self {
        Self::from_fn(p, 1, |_, _, _| 1)
    }

    /// `e_0·e_0 = e_1`, all other products zero.
    pub fn nilpotent2(p: u32) -> Self {
        Self::from_fn(p, 2, |i, j, k| u32::from(i == 0 && j == 0 && k == 1))
    }

    /// `GF(p)^d` with coordinatewise product.
    pub fn diagonal(p: u32, dim: usize) -> Self {
        Self::from_fn(p, dim, |i, j, k| u32::from(i == j && j == k))
    }

    /// Upper-triangular 2×2 matrices on the basis `E11, E12, E22`.
    pub fn upper_triangular2(p: u32) -> Self {
        let prods = [(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)];
        Self::from_fn(p, 3, |i, j, k| u32::from(prods.contains(&(i, j, k))))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> u32 {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn mul_tensor(&self) -> Vec<Vec<Vec<u32>>> {
        let d = self.dim;
        (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| self.c(i, j, k)).collect()).collect()).collect()
    }

    pub fn unit(&self) -> Option<&[u32]> {
        self.unit.as_deref()
    }

    pub fn product(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let d = self.dim;
        let mut out = vec![0; d];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                let a = f.mul(x[i], y[j]);
                if a == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o = f.add(*o, f.mul(a, self.c(i, j, k)));
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<u32> {
        let mut e = vec![0; self.dim];
        e[i] = 1;
        e
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.product(&self.basis(i), &self.basis(j));
                for k in 0..self.dim {
                    let jk = self.product(&self.basis(j), &self.basis(k));
                    if self.product(&ij, &self.basis(k)) != self.product(&self.basis(i), &jk) {
                        return Err(AlgebraError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn is_unit(&self, eta: &[u32]) -> bool {
        (0..self.dim).all(|j| {
            let e = self.basis(j);
            self.product(eta, &e) == e && self.product(&e, eta) == e
        })
    }

    pub fn find_unit(&self) -> Option<Vec<u32>> {
        let d = self.dim;
        // unknown η; equations Σ_a η_a c[a][j][k] = δ_jk and Σ_a η_a c[j][a][k] = δ_jk
        let mut m = FpMatrix::zeros(self.field, 2 * d * d, d);
        let mut b = vec![0; 2 * d * d];
        for j in 0..d {
            for k in 0..d {
                let r = j * d + k;
                for a in 0..d {
                    m.set(r, a, self.c(a, j, k));
                    m.set(d * d + r, a, self.c(j, a, k));
                }
                b[r] = u32::from(j == k);
                b[d * d + r] = u32::from(j == k);
            }
        }
        m.solve(&b)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| (0..self.dim).all(|k| self.c(i, j, k) == self.c(j, i, k))))
    }

    /// Whether `μ: A ⊗ A -> A` is onto.
    pub fn product_spans(&self) -> bool {
        let d = self.dim;
        let m = FpMatrix::from_vec(self.field, d * d, d, self.c.clone());
        m.rank() == d
    }

    /// Both annihilators vanish: `x·A = 0` or `A·x = 0` forces `x = 0`.
    pub fn is_faithful(&self) -> bool {
        let d = self.dim;
        let mut left = FpMatrix::zeros(self.field, d * d, d);
        let mut right = FpMatrix::zeros(self.field, d * d, d);
        for j in 0..d {
            for k in 0..d {
                for a in 0..d {
                    left.set(j * d + k, a, self.c(a, j, k));
                    right.set(j * d + k, a, self.c(j, a, k));
                }
            }
        }
        left.rank() == d && right.rank() == d
    }

    /// The algebra with `x ·op y = y · x`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.p(), self.dim, |i, j, k| self.c(j, i, k))
    }

    /// Number of elements `p^d`, if it does not exceed `bound`.
    pub fn carrier_size(&self, bound: usize) -> Option<usize> {
        pow_bounded(self.p(), self.dim, bound)
    }

    pub fn vector(&self, index: usize) -> Vec<u32> {
        vector_of(self.p(), self.dim, index)
    }

    pub fn index(&self, v: &[u32]) -> usize {
        index_of(self.p(), v)
    }
}

/// Coordinate vector with index `Σ v_i p^(d-1-i)`, so indices follow the
/// lexicographic order of vectors.
pub fn vector_of(p: u32, dim: usize, mut index: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    for slot in v.iter_mut().rev() {
        *slot = (index % p as usize) as u32;
        index /= p as usize;
    }
    v
}

pub fn index_of(p: u32, v: &[u32]) -> usize {
    v.iter().fold(0, |acc, &x| acc * p as usize + x as usize)
}

/// A pair of `d×d` matrices `(L, R)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearPair {
    pub l: FpMatrix,
    pub r: FpMatrix,
}

impl LinearPair {
    pub fn identity(field: PrimeField, d: usize) -> Self {
        LinearPair { l: FpMatrix::identity(field, d), r: FpMatrix::identity(field, d) }
    }

    pub fn zero(field: PrimeField, d: usize) -> Self {
        LinearPair { l: FpMatrix::zeros(field, d, d), r: FpMatrix::zeros(field, d, d) }
    }

    /// Unknown vector layout: `L[k][i]` at `k*d + i`, then `R[k][i]`.
    pub fn from_unknowns(field: PrimeField, d: usize, x: &[u32]) -> Self {
        LinearPair {
            l: FpMatrix::from_vec(field, d, d, x[..d * d].to_vec()),
            r: FpMatrix::from_vec(field, d, d, x[d * d..].to_vec()),
        }
    }

    pub fn unknowns(&self) -> Vec<u32> {
        let mut v = self.l.data().to_vec();
        v.extend_from_slice(self.r.data());
        v
    }

    /// Multiplier product `(L', R') ⋆ (L, R) = (L'L, RR')`.
    pub fn star(&self, other: &LinearPair) -> LinearPair {
        LinearPair { l: self.l.mul(&other.l), r: other.r.mul(&self.r) }
    }

    pub fn transpose(&self) -> LinearPair {
        LinearPair { l: self.l.transpose(), r: self.r.transpose() }
    }
}

/// The left, right and linking laws as a `3d³ × 2d²` matrix.
fn multiplier_system(a: &FpAlgebra) -> FpMatrix {
    let d = a.dim;
    let f = a.field;
    let l = |k: usize, i: usize| k * d + i;
    let r = |k: usize, i: usize| d * d + k * d + i;
    let mut m = FpMatrix::zeros(f, 3 * d * d * d, 2 * d * d);
    let mut bump = |row: usize, col: usize, v: u32, neg: bool| {
        let v = if neg { f.neg(v) } else { v };
        let cur = m.get(row, col);
        m.set(row, col, f.add(cur, v));
    };
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let base = (i * d + j) * d + k;
                for mm in 0..d {
                    // L(e_i e_j) = L(e_i) e_j
                    bump(base, l(k, mm), a.c(i, j, mm), false);
                    bump(base, l(mm, i), a.c(mm, j, k), true);
                    // R(e_i e_j) = e_i R(e_j)
                    bump(d * d * d + base, r(k, mm), a.c(i, j, mm), false);
                    bump(d * d * d + base, r(mm, j), a.c(i, mm, k), true);
                    // R(e_i) e_j = e_i L(e_j)
                    bump(2 * d * d * d + base, r(mm, i), a.c(mm, j, k), false);
                    bump(2 * d * d * d + base, l(mm, j), a.c(i, mm, k), true);
                }
            }
        }
    }
    m
}

/// Every `GF(p)`-combination of `basis`, sorted by coordinates.
pub(crate) fn span_all(field: PrimeField, basis: &[Vec<u32>], len: usize) -> Result<Vec<Vec<u32>>, AlgebraError> {
    let p = field.p();
    let count = pow_bounded(p, basis.len(), SOLUTION_BOUND).ok_or(AlgebraError::BoundExceeded {
        what: "solution space",
        size: usize::MAX,
        bound: SOLUTION_BOUND,
    })?;
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let coeffs = vector_of(p, basis.len(), code);
        let mut v = vec![0; len];
        for (c, b) in coeffs.iter().zip(basis) {
            if *c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = field.add(*x, field.mul(*c, y));
            }
        }
        out.push(v);
    }
    out.sort();
    Ok(out)
}

/// A nullspace basis and the full solution set, sorted by `(L, R)` entries.
#[derive(Clone, Debug)]
pub struct MultiplierSpace {
    pub basis: Vec<LinearPair>,
    pub pairs: Vec<LinearPair>,
}

pub fn multiplier_space(a: &FpAlgebra) -> Result<MultiplierSpace, AlgebraError> {
    let d = a.dim;
    let system = multiplier_system(a);
    let basis_vecs = system.nullspace();
    for v in &basis_vecs {
        if system.apply(v).iter().any(|&x| x != 0) {
            return Err(AlgebraError::Internal("nullspace vector fails the multiplier laws".into()));
        }
    }
    let pairs = span_all(a.field, &basis_vecs, 2 * d * d)?
        .into_iter()
        .map(|x| LinearPair::from_unknowns(a.field, d, &x))
        .collect();
    let basis = basis_vecs.iter().map(|x| LinearPair::from_unknowns(a.field, d, x)).collect();
    Ok(MultiplierSpace { basis, pairs })
}

/// Checks the three multiplier laws directly on basis vectors.
pub fn is_multiplier(a: &FpAlgebra, h: &LinearPair) -> bool {
    let d = a.dim;
    (0..d).all(|i| {
        (0..d).all(|j| {
            let (ei, ej) = (a.basis(i), a.basis(j));
            let ij = a.product(&ei, &ej);
            h.l.apply(&ij) == a.product(&h.l.apply(&ei), &ej)
                && h.r.apply(&ij) == a.product(&ei, &h.r.apply(&ej))
                && a.product(&h.r.apply(&ei), &ej) == a.product(&ei, &h.l.apply(&ej))
        })
    })
}

/// A finite monoid of matrix pairs with a precomputed product table.
#[derive(Clone, Debug)]
pub struct PairMonoid {
    pairs: Vec<LinearPair>,
    index: HashMap<LinearPair, usize>,
    table: Vec<u32>,
    identity: usize,
}

impl PairMonoid {
    /// Builds the table of `star` on `pairs`, failing if the set is not
    /// closed or does not contain `(id, id)`.
    pub(crate) fn new(
        pairs: Vec<LinearPair>,
        field: PrimeField,
        d: usize,
        star: impl Fn(&LinearPair, &LinearPair) -> LinearPair,
    ) -> Result<Self, AlgebraError> {
        let index: HashMap<LinearPair, usize> = pairs.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        let identity = *index
            .get(&LinearPair::identity(field, d))
            .ok_or_else(|| AlgebraError::Internal("(id, id) missing".into()))?;
        let n = pairs.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &pairs {
            for b in &pairs {
                let c = index
                    .get(&star(a, b))
                    .ok_or_else(|| AlgebraError::Internal("not closed under composition".into()))?;
                table.push(*c as u32);
            }
        }
        Ok(PairMonoid { pairs, index, table, identity })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[LinearPair] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> &LinearPair {
        &self.pairs[i]
    }

    pub fn index_of(&self, h: &LinearPair) -> Option<usize> {
        self.index.get(h).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn star(&self, a: usize, b: usize) -> usize {
        self.table[a * self.pairs.len() + b] as usize
    }

    pub fn to_monoid(&self) -> FiniteMonoid {
        let n = self.len();
        let table = self.table.iter().map(|&v| v as usize).collect();
        FiniteMonoid::new(FiniteSemigroup::from_table_unchecked(n, table), self.identity).expect("identity checked")
    }
}

impl OperationTable for PairMonoid {
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

pub fn multiplier_monoid(a: &FpAlgebra) -> Result<PairMonoid, AlgebraError> {
    let space = multiplier_space(a)?;
    PairMonoid::new(space.pairs, a.field, a.dim, |x, y| x.star(y))
}

/// `(L_f, R_f)`: left and right multiplication by the element `f`.
pub fn inner_multiplier(a: &FpAlgebra, f: &[u32]) -> LinearPair {
    let d = a.dim;
    let fld = a.field;
    let mut l = FpMatrix::zeros(fld, d, d);
    let mut r = FpMatrix::zeros(fld, d, d);
    for k in 0..d {
        for i in 0..d {
            let mut lv = 0;
            let mut rv = 0;
            for (x, &fx) in f.iter().enumerate() {
                lv = fld.add(lv, fld.mul(fx, a.c(x, i, k)));
                rv = fld.add(rv, fld.mul(fx, a.c(i, x, k)));
            }
            l.set(k, i, lv);
            r.set(k, i, rv);
        }
    }
    LinearPair { l, r }
}

/// The multiplicative semigroup on all `p^d` vectors in index order.
pub fn convolution_semigroup(a: &FpAlgebra, bound: usize) -> Result<FiniteSemigroup, AlgebraError> {
    let n = a.carrier_size(bound).ok_or(AlgebraError::BoundExceeded {
        what: "convolution semigroup",
        size: usize::MAX,
        bound,
    })?;
    let vecs: Vec<Vec<u32>> = (0..n).map(|i| a.vector(i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for x in &vecs {
        for y in &vecs {
            table.push(a.index(&a.product(x, y)));
        }
    }
    FiniteSemigroup::from_table(n, table).map_err(|e| AlgebraError::Internal(e.to_string()))
}

/// The self-map `v ↦ M·v` of the carrier.
pub fn carrier_map(a: &FpAlgebra, m: &FpMatrix) -> SelfMap {
    let n = a.carrier_size(usize::MAX).expect("carrier size fits");
    SelfMap::from_vec_unchecked((0..n).map(|i| a.index(&m.apply(&a.vector(i)))).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcretizationReport {
    pub multipliers: usize,
    pub hull_size: usize,
    pub map: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
}

/// Conc: `Mult(A) -> TrHull(Conv(A))` together with the monoids involved.
pub struct Concretization {
    pub mult: PairMonoid,
    pub conv: FiniteSemigroup,
    pub hull: TranslationalHull,
    pub report: ConcretizationReport,
}

/// Sends each linear multiplier to the pair of carrier maps it induces and
/// locates it in the hull of the convolution semigroup. Checks that every
/// image is a multiplier and that the map is a monoid homomorphism.
pub fn concretization(a: &FpAlgebra) -> Result<Concretization, AlgebraError> {
    let mult = multiplier_monoid(a)?;
    let conv = convolution_semigroup(a, CONVOLUTION_BOUND)?;
    let h = hull(&conv)?;
    let images: Vec<(SelfMap, SelfMap)> =
        mult.pairs().iter().map(|p| (carrier_map(a, &p.l), carrier_map(a, &p.r))).collect();
    let mut map = Vec::with_capacity(images.len());
    for (l, r) in &images {
        map.push(h.index_of(l, r).ok_or_else(|| AlgebraError::Internal("image is not a multiplier".into()))?);
    }
    if map[mult.identity()] != h.identity() {
        return Err(AlgebraError::Internal("identity is not preserved".into()));
    }
    for x in 0..mult.len() {
        for y in 0..mult.len() {
            let (l1, r1) = &images[x];
            let (l2, r2) = &images[y];
            let want = (l1.compose(l2), r2.compose(r1));
            if images[mult.star(x, y)] != want {
                return Err(AlgebraError::Internal("concretization is not a homomorphism".into()));
            }
        }
    }
    let mut seen = vec![false; h.len()];
    let mut injective = true;
    for &i in &map {
        injective &= !seen[i];
        seen[i] = true;
    }
    let surjective = seen.iter().all(|&s| s);
    let report = ConcretizationReport { multipliers: mult.len(), hull_size: h.len(), map, injective, surjective };
    Ok(Concretization { mult, conv, hull: h, report })
}

pub fn is_concrete(a: &FpAlgebra) -> Result<bool, AlgebraError> {
    Ok(concretization(a)?.report.surjective)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalMapReport {
    /// `L_f(g) = f•g` and `R_f(g) = g•f` for all elements.
    pub identities_hold: bool,
    pub conv_nondegenerate: bool,
    pub injective: bool,
    /// Classes of elements with equal inner multipliers, when larger than one.
    pub kernel: Vec<Vec<usize>>,
}

impl CanonicalMapReport {
    pub fn implication_holds(&self) -> bool {
        !self.conv_nondegenerate || self.injective
    }
}

pub fn canonical_map_injectivity(a: &FpAlgebra) -> Result<CanonicalMapReport, AlgebraError> {
    let conv = convolution_semigroup(a, CONVOLUTION_BOUND)?;
    let n = conv.order();
    let mut identities_hold = true;
    let mut classes: HashMap<LinearPair, Vec<usize>> = HashMap::new();
    let mut order = Vec::new();
    for f in 0..n {
        let fv = a.vector(f);
        let inner = inner_multiplier(a, &fv);
        for g in 0..n {
            let gv = a.vector(g);
            identities_hold &= a.index(&inner.l.apply(&gv)) == conv.mul(f, g);
            identities_hold &= a.index(&inner.r.apply(&gv)) == conv.mul(g, f);
        }
        let entry = classes.entry(inner.clone()).or_default();
        if entry.is_empty() {
            order.push(inner);
        }
        entry.push(f);
    }
    let kernel: Vec<Vec<usize>> =
        order.iter().map(|k| classes[k].clone()).filter(|c| c.len() > 1).collect();
    let d = crate::degeneracy::degeneracy_report(&conv);
    Ok(CanonicalMapReport {
        identities_hold,
        conv_nondegenerate: d.is_nondegenerate(),
        injective: kernel.is_empty(),
        kernel,
    })
}

/// The `.alg` JSON file: `mul[i][j]` is the coordinate vector of `e_i·e_j`
/// and `comul[k][i][j]` the coefficient of `e_i ⊗ e_j` in `δ(e_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgFile {
    pub p: u32,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<Vec<Vec<u32>>>>,
}

impl AlgFile {
    pub fn from_algebra(a: &FpAlgebra) -> Self {
        AlgFile { p: a.p(), dim: a.dim, mul: Some(a.mul_tensor()), unit: a.unit.clone(), comul: None }
    }

    /// The algebra in this file, if it has a `mul` key.
    pub fn algebra(&self) -> Option<Result<FpAlgebra, AlgebraError>> {
        let mul = self.mul.as_ref()?;
        Some(match &self.unit {
            Some(u) => FpAlgebra::with_unit(self.p, self.dim, mul, u),
            None => FpAlgebra::new(self.p, self.dim, mul),
        })
    }
}
