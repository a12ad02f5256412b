//! Finite-dimensional coalgebras over GF(p) and their comultipliers.
//!
//! `delta[k][i][j]` is the coefficient of `e_i ⊗ e_j` in `δ(e_k)`. A
//! comultiplier is a pair of matrices with
//!
//! ```text
//! δ∘L = (L⊗id)∘δ,   δ∘R = (id⊗R)∘δ,   (R⊗id)∘δ = (id⊗L)∘δ
//! ```
//!
//! and comultipliers compose as `(L',R') ⋆ (L,R) = (L∘L', R'∘R)`. The dual
//! algebra `C*` has `e*_i·e*_j = Σ_k delta[k][i][j] e*_k`; transposing matrices
//! carries comultipliers of `C` onto multipliers of `C*`, which gives a second,
//! independent way to compute them.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_tensor, index_of, multiplier_space, span_all, vector_of, AlgFile, AlgebraError, FpAlgebra, LinearPair,
    PairMonoid,
};
use crate::fp::{FpMatrix, PrimeField};
use crate::semigroup::FiniteSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpCoalgebra {
    field: PrimeField,
    dim: usize,
    delta: Vec<u32>,
}

impl FpCoalgebra {
    pub fn new(p: u32, dim: usize, comul: &[Vec<Vec<u32>>]) -> Result<Self, AlgebraError> {
        let field = PrimeField::new(p)?;
        let delta = check_tensor(p, dim, comul)?;
        let c = FpCoalgebra { field, dim, delta };
        c.check_coassociative()?;
        Ok(c)
    }

    fn from_fn(p: u32, dim: usize, f: impl Fn(usize, usize, usize) -> u32) -> Self {
        let t: Vec<Vec<Vec<u32>>> =
            (0..dim).map(|k| (0..dim).map(|i| (0..dim).map(|j| f(k, i, j)).collect()).collect()).collect();
        Self::new(p, dim, &t).expect("named coalgebra is valid")
    }

    /// `δ(e_k) = e_k ⊗ e_k`.
    pub fn group_like(p: u32, dim: usize) -> Self {
        Self::from_fn(p, dim, |k, i, j| u32::from(k == i && i == j))
    }

    pub fn zero(p: u32, dim: usize) -> Self {
        Self::from_fn(p, dim, |_, _, _| 0)
    }

    /// The coalgebra whose dual algebra is `a`.
    pub fn dual_of(a: &FpAlgebra) -> Self {
        Self::from_fn(a.p(), a.dim(), |k, i, j| a.c(i, j, k))
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

    pub fn delta(&self, k: usize, i: usize, j: usize) -> u32 {
        self.delta[(k * self.dim + i) * self.dim + j]
    }

    pub fn comul_tensor(&self) -> Vec<Vec<Vec<u32>>> {
        let d = self.dim;
        (0..d).map(|k| (0..d).map(|i| (0..d).map(|j| self.delta(k, i, j)).collect()).collect()).collect()
    }

    fn check_coassociative(&self) -> Result<(), AlgebraError> {
        let f = self.field;
        let d = self.dim;
        for k in 0..d {
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        let lhs = (0..d).fold(0, |acc, i| f.add(acc, f.mul(self.delta(k, i, z), self.delta(i, x, y))));
                        let rhs = (0..d).fold(0, |acc, j| f.add(acc, f.mul(self.delta(k, x, j), self.delta(j, y, z))));
                        if lhs != rhs {
                            return Err(AlgebraError::NotCoassociative { k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `C*`, with `mul[i][j][k] = delta[k][i][j]`.
    pub fn dual_algebra(&self) -> FpAlgebra {
        let d = self.dim;
        let mul: Vec<Vec<Vec<u32>>> =
            (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| self.delta(k, i, j)).collect()).collect()).collect();
        FpAlgebra::new(self.p(), d, &mul).expect("dual of a coassociative coalgebra is associative")
    }

    pub fn to_alg_file(&self) -> AlgFile {
        AlgFile { p: self.p(), dim: self.dim, mul: None, unit: None, comul: Some(self.comul_tensor()) }
    }

    /// `(g • f)(e_k) = Σ delta[k][i][j] g_i f_j`.
    pub fn convolve(&self, g: &[u32], f: &[u32]) -> Vec<u32> {
        let fl = self.field;
        (0..self.dim)
            .map(|k| {
                let mut acc = 0;
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        acc = fl.add(acc, fl.mul(self.delta(k, i, j), fl.mul(g[i], f[j])));
                    }
                }
                acc
            })
            .collect()
    }
}

impl AlgFile {
    /// The coalgebra in this file, if it has a `comul` key.
    pub fn coalgebra(&self) -> Option<Result<FpCoalgebra, AlgebraError>> {
        self.comul.as_ref().map(|t| FpCoalgebra::new(self.p, self.dim, t))
    }
}

/// The three comultiplier laws as a `3d³ × 2d²` matrix, rows indexed by
/// `(k, i, j)` and unknowns laid out as in [`LinearPair::from_unknowns`].
fn comultiplier_system(c: &FpCoalgebra) -> FpMatrix {
    let d = c.dim;
    let f = c.field;
    let l = |a: usize, b: usize| a * d + b;
    let r = |a: usize, b: usize| d * d + a * d + b;
    let mut m = FpMatrix::zeros(f, 3 * d * d * d, 2 * d * d);
    let mut bump = |row: usize, col: usize, v: u32, neg: bool| {
        let v = if neg { f.neg(v) } else { v };
        let cur = m.get(row, col);
        m.set(row, col, f.add(cur, v));
    };
    let block = d * d * d;
    for k in 0..d {
        for i in 0..d {
            for j in 0..d {
                let row = (k * d + i) * d + j;
                for x in 0..d {
                    // δ∘L = (L⊗id)∘δ
                    bump(row, l(x, k), c.delta(x, i, j), false);
                    bump(row, l(i, x), c.delta(k, x, j), true);
                    // δ∘R = (id⊗R)∘δ
                    bump(block + row, r(x, k), c.delta(x, i, j), false);
                    bump(block + row, r(j, x), c.delta(k, i, x), true);
                    // (R⊗id)∘δ = (id⊗L)∘δ
                    bump(2 * block + row, r(i, x), c.delta(k, x, j), false);
                    bump(2 * block + row, l(j, x), c.delta(k, i, x), true);
                }
            }
        }
    }
    m
}

#[derive(Clone, Debug)]
pub struct ComultiplierSpace {
    pub basis: Vec<LinearPair>,
    pub pairs: Vec<LinearPair>,
}

/// All comultipliers, sorted by entries. Solved directly from the tensor
/// identities and cross-checked against the transposed multipliers of `C*`.
pub fn comultiplier_space(c: &FpCoalgebra) -> Result<ComultiplierSpace, AlgebraError> {
    let d = c.dim;
    let system = comultiplier_system(c);
    let basis_vecs = system.nullspace();
    let pairs: Vec<LinearPair> = span_all(c.field, &basis_vecs, 2 * d * d)?
        .into_iter()
        .map(|x| LinearPair::from_unknowns(c.field, d, &x))
        .collect();
    if pairs.iter().any(|h| !is_comultiplier(c, h)) {
        return Err(AlgebraError::Internal("solution fails the comultiplier laws".into()));
    }
    let mut via_dual: Vec<LinearPair> =
        multiplier_space(&c.dual_algebra())?.pairs.iter().map(LinearPair::transpose).collect();
    via_dual.sort_by(|a, b| a.unknowns().cmp(&b.unknowns()));
    if via_dual != pairs {
        return Err(AlgebraError::Internal("direct and dual computations of comultipliers differ".into()));
    }
    let basis = basis_vecs.iter().map(|x| LinearPair::from_unknowns(c.field, d, x)).collect();
    Ok(ComultiplierSpace { basis, pairs })
}

/// `(T ⊗ U)(δ(e_k))` as a `d×d` coefficient table.
fn tensor_after_delta(c: &FpCoalgebra, t: &FpMatrix, u: &FpMatrix, k: usize) -> Vec<u32> {
    let d = c.dim;
    let f = c.field;
    let mut out = vec![0; d * d];
    for a in 0..d {
        for b in 0..d {
            let w = c.delta(k, a, b);
            if w == 0 {
                continue;
            }
            for x in 0..d {
                for y in 0..d {
                    let v = f.mul(w, f.mul(t.get(x, a), u.get(y, b)));
                    out[x * d + y] = f.add(out[x * d + y], v);
                }
            }
        }
    }
    out
}

/// `δ(M e_k)` as a `d×d` coefficient table.
fn delta_after(c: &FpCoalgebra, m: &FpMatrix, k: usize) -> Vec<u32> {
    let d = c.dim;
    let f = c.field;
    let mut out = vec![0; d * d];
    for x in 0..d {
        let w = m.get(x, k);
        for i in 0..d {
            for j in 0..d {
                out[i * d + j] = f.add(out[i * d + j], f.mul(w, c.delta(x, i, j)));
            }
        }
    }
    out
}

/// Checks the three laws by expanding tensors.
pub fn is_comultiplier(c: &FpCoalgebra, h: &LinearPair) -> bool {
    let id = FpMatrix::identity(c.field, c.dim);
    (0..c.dim).all(|k| {
        delta_after(c, &h.l, k) == tensor_after_delta(c, &h.l, &id, k)
            && delta_after(c, &h.r, k) == tensor_after_delta(c, &id, &h.r, k)
            && tensor_after_delta(c, &h.r, &id, k) == tensor_after_delta(c, &id, &h.l, k)
    })
}

/// `(L', R') ⋆ (L, R) = (L∘L', R'∘R)`.
pub fn comultiplier_star(a: &LinearPair, b: &LinearPair) -> LinearPair {
    LinearPair { l: b.l.mul(&a.l), r: a.r.mul(&b.r) }
}

pub fn comultiplier_monoid(c: &FpCoalgebra) -> Result<PairMonoid, AlgebraError> {
    let space = comultiplier_space(c)?;
    PairMonoid::new(space.pairs, c.field, c.dim, comultiplier_star)
}

/// `L_f = (f⊗id)∘δ` and `R_f = (id⊗f)∘δ` for a covector `f`.
pub fn inner_comultiplier(c: &FpCoalgebra, f: &[u32]) -> LinearPair {
    let d = c.dim;
    let fl = c.field;
    let mut l = FpMatrix::zeros(fl, d, d);
    let mut r = FpMatrix::zeros(fl, d, d);
    for k in 0..d {
        for x in 0..d {
            let mut lv = 0;
            let mut rv = 0;
            for (y, &fy) in f.iter().enumerate() {
                lv = fl.add(lv, fl.mul(c.delta(k, y, x), fy));
                rv = fl.add(rv, fl.mul(c.delta(k, x, y), fy));
            }
            l.set(x, k, lv);
            r.set(x, k, rv);
        }
    }
    LinearPair { l, r }
}

/// Convolution on the `p^d` covectors, in coordinate-lexicographic order.
pub fn dual_convolution(c: &FpCoalgebra, bound: usize) -> Result<FiniteSemigroup, AlgebraError> {
    let p = c.p();
    let n = crate::algebra::pow_bounded(p, c.dim, bound).ok_or(AlgebraError::BoundExceeded {
        what: "dual convolution semigroup",
        size: usize::MAX,
        bound,
    })?;
    let vecs: Vec<Vec<u32>> = (0..n).map(|i| vector_of(p, c.dim, i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for g in &vecs {
        for f in &vecs {
            table.push(index_of(p, &c.convolve(g, f)));
        }
    }
    FiniteSemigroup::from_table(n, table).map_err(|e| AlgebraError::Internal(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerComultiplierReport {
    /// `𝒞(g • f) = 𝒞(g) ⋆ 𝒞(f)` for all covectors.
    pub homomorphism: bool,
    pub conv_nondegenerate: bool,
    pub injective: bool,
}

impl InnerComultiplierReport {
    pub fn implication_holds(&self) -> bool {
        !self.conv_nondegenerate || self.injective
    }
}

pub fn inner_comultiplier_report(c: &FpCoalgebra, bound: usize) -> Result<InnerComultiplierReport, AlgebraError> {
    let conv = dual_convolution(c, bound)?;
    let n = conv.order();
    let inner: Vec<LinearPair> = (0..n).map(|i| inner_comultiplier(c, &vector_of(c.p(), c.dim, i))).collect();
    let mut homomorphism = true;
    for g in 0..n {
        for f in 0..n {
            homomorphism &= inner[conv.mul(g, f)] == comultiplier_star(&inner[g], &inner[f]);
        }
    }
    let mut sorted = inner.clone();
    sorted.sort_by(|a, b| a.unknowns().cmp(&b.unknowns()));
    sorted.dedup();
    Ok(InnerComultiplierReport {
        homomorphism,
        conv_nondegenerate: crate::degeneracy::degeneracy_report(&conv).is_nondegenerate(),
        injective: sorted.len() == n,
    })
}

/// How transposition relates `Comult(C)` to `Mult(C*)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransposeReport {
    pub comultipliers: usize,
    pub multipliers: usize,
    /// Transposition is a bijection between the two sets.
    pub bijection: bool,
    /// `T(a ⋆ b) = T(a) ⋆ T(b)`; first failing pair otherwise.
    pub isomorphism_failure: Option<(usize, usize)>,
    /// `T(a ⋆ b) = T(b) ⋆ T(a)`; first failing pair otherwise.
    pub anti_isomorphism_failure: Option<(usize, usize)>,
}

impl TransposeReport {
    pub fn is_isomorphism(&self) -> bool {
        self.bijection && self.isomorphism_failure.is_none()
    }

    pub fn is_anti_isomorphism(&self) -> bool {
        self.bijection && self.anti_isomorphism_failure.is_none()
    }
}

pub fn transpose_report(c: &FpCoalgebra) -> Result<TransposeReport, AlgebraError> {
    let co = comultiplier_monoid(c)?;
    let mult = crate::algebra::multiplier_monoid(&c.dual_algebra())?;
    let t: Vec<Option<usize>> = co.pairs().iter().map(|h| mult.index_of(&h.transpose())).collect();
    let bijection = co.len() == mult.len() && t.iter().all(Option::is_some);
    let mut iso = None;
    let mut anti = None;
    if bijection {
        let t: Vec<usize> = t.into_iter().map(Option::unwrap).collect();
        for a in 0..co.len() {
            for b in 0..co.len() {
                let lhs = t[co.star(a, b)];
                if iso.is_none() && lhs != mult.star(t[a], t[b]) {
                    iso = Some((a, b));
                }
                if anti.is_none() && lhs != mult.star(t[b], t[a]) {
                    anti = Some((a, b));
                }
            }
        }
    }
    Ok(TransposeReport {
        comultipliers: co.len(),
        multipliers: mult.len(),
        bijection,
        isomorphism_failure: iso,
        anti_isomorphism_failure: anti,
    })
}
