//! Global idempotency, non-degeneracy of semigroups and of maps into them.
//!
//! Conventions: `S` is right non-degenerate when `x*y = x*z` for all `x`
//! forces `y = z`, and left non-degenerate when `y*x = z*x` for all `x`
//! forces `y = z`. All witnesses are lexicographically first.

use serde::{Deserialize, Serialize};

use crate::hull::TranslationalHull;
use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyWitnesses {
    /// An element outside `S*S`.
    pub not_a_product: Option<Element>,
    /// `y < z` with `y*x = z*x` for every `x`.
    pub left: Option<(Element, Element)>,
    /// `y < z` with `x*y = x*z` for every `x`.
    pub right: Option<(Element, Element)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyReport {
    pub globally_idempotent: bool,
    pub left_nondeg: bool,
    pub right_nondeg: bool,
    pub witnesses: DegeneracyWitnesses,
}

impl DegeneracyReport {
    pub fn is_nondegenerate(&self) -> bool {
        self.left_nondeg && self.right_nondeg
    }

    /// Globally idempotent and non-degenerate on both sides.
    pub fn all(&self) -> bool {
        self.globally_idempotent && self.is_nondegenerate()
    }

    /// Re-verifies every witness against `s`.
    pub fn recheck(&self, s: &FiniteSemigroup) -> bool {
        let w = &self.witnesses;
        let not_product = w.not_a_product.map_or(true, |u| !s.products()[u]);
        let left = w.left.map_or(true, |(y, z)| y != z && s.elements().all(|x| s.mul(y, x) == s.mul(z, x)));
        let right = w.right.map_or(true, |(y, z)| y != z && s.elements().all(|x| s.mul(x, y) == s.mul(x, z)));
        not_product
            && left
            && right
            && self.globally_idempotent == w.not_a_product.is_none()
            && self.left_nondeg == w.left.is_none()
            && self.right_nondeg == w.right.is_none()
    }
}

fn first_pair(n: usize, same: impl Fn(Element, Element) -> bool) -> Option<(Element, Element)> {
    (0..n).flat_map(|y| (y + 1..n).map(move |z| (y, z))).find(|&(y, z)| same(y, z))
}

pub fn degeneracy_report(s: &FiniteSemigroup) -> DegeneracyReport {
    let n = s.order();
    let not_a_product = s.products().iter().position(|&p| !p);
    let left = first_pair(n, |y, z| s.elements().all(|x| s.mul(y, x) == s.mul(z, x)));
    let right = first_pair(n, |y, z| s.elements().all(|x| s.mul(x, y) == s.mul(x, z)));
    DegeneracyReport {
        globally_idempotent: not_a_product.is_none(),
        left_nondeg: left.is_none(),
        right_nondeg: right.is_none(),
        witnesses: DegeneracyWitnesses { not_a_product, left, right },
    }
}

/// Outcome of a span test: which elements of the target are missed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanCheck {
    /// First element not of the form `f(s)*t`, resp. `f_L(s)(t)`.
    pub left_missing: Option<Element>,
    /// First element not of the form `t*f(s)`, resp. `f_R(s)(t)`.
    pub right_missing: Option<Element>,
}

impl SpanCheck {
    pub fn holds(&self) -> bool {
        self.left_missing.is_none() && self.right_missing.is_none()
    }

    fn from_hits(left: &[bool], right: &[bool]) -> Self {
        SpanCheck {
            left_missing: left.iter().position(|&h| !h),
            right_missing: right.iter().position(|&h| !h),
        }
    }
}

/// `f: X -> T` is non-degenerate when `T = {f(s)*t} = {t*f(s)}`.
pub fn is_nondegenerate_map(f: &[Element], t: &FiniteSemigroup) -> SpanCheck {
    let n = t.order();
    let mut left = vec![false; n];
    let mut right = vec![false; n];
    for &a in f {
        for u in t.elements() {
            left[t.mul(a, u)] = true;
            right[t.mul(u, a)] = true;
        }
    }
    SpanCheck::from_hits(&left, &right)
}

/// `f: X -> TrHull(T)`, given as hull indices, is translation non-degenerate
/// when `T = {f_L(s)(t)} = {f_R(s)(t)}`.
pub fn is_translation_nondegenerate(f: &[usize], h: &TranslationalHull) -> SpanCheck {
    let n = h.base().order();
    let mut left = vec![false; n];
    let mut right = vec![false; n];
    for &i in f {
        let m = h.element(i);
        for u in 0..n {
            left[m.left.apply(u)] = true;
            right[m.right.apply(u)] = true;
        }
    }
    SpanCheck::from_hits(&left, &right)
}

/// Relation between one-sided non-degeneracy and injectivity of
/// `x ↦ 𝔏_x` and `x ↦ ℜ_x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityReport {
    pub left_nondeg: bool,
    pub right_nondeg: bool,
    pub frak_l_injective: bool,
    pub frak_r_injective: bool,
    /// First `x < y` with `𝔏_x = 𝔏_y`.
    pub frak_l_collision: Option<(Element, Element)>,
    /// First `x < y` with `ℜ_x = ℜ_y`.
    pub frak_r_collision: Option<(Element, Element)>,
    /// Left non-degenerate iff `𝔏` injective, right iff `ℜ` injective.
    pub consistent: bool,
}

pub fn injectivity_checks(s: &FiniteSemigroup) -> InjectivityReport {
    let n = s.order();
    let d = degeneracy_report(s);
    let frak_l_collision = first_pair(n, |x, y| s.elements().all(|z| s.mul(x, z) == s.mul(y, z)));
    let frak_r_collision = first_pair(n, |x, y| s.elements().all(|z| s.mul(z, x) == s.mul(z, y)));
    let frak_l_injective = frak_l_collision.is_none();
    let frak_r_injective = frak_r_collision.is_none();
    InjectivityReport {
        left_nondeg: d.left_nondeg,
        right_nondeg: d.right_nondeg,
        frak_l_injective,
        frak_r_injective,
        frak_l_collision,
        frak_r_collision,
        consistent: d.left_nondeg == frak_l_injective && d.right_nondeg == frak_r_injective,
    }
}
