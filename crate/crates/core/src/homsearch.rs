//! Exhaustive search for homomorphisms between finite operation tables.
//!
//! Used as the uniqueness oracle for hull extensions: every candidate
//! hom is found by backtracking, with images of products forced as soon as
//! both factors are assigned.

use crate::semigroup::{FiniteMonoid, FiniteSemigroup};

/// A finite set with an associative binary operation on `0..size()`.
pub trait OperationTable {
    fn size(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
    /// The identity, for tables that are monoids.
    fn unit(&self) -> Option<usize> {
        None
    }
}

impl OperationTable for FiniteSemigroup {
    fn size(&self) -> usize {
        self.order()
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }
}

impl OperationTable for FiniteMonoid {
    fn size(&self) -> usize {
        self.order()
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }
    fn unit(&self) -> Option<usize> {
        Some(self.identity())
    }
}

const NONE: usize = usize::MAX;

struct Search<'a, A: ?Sized, B: ?Sized> {
    src: &'a A,
    dst: &'a B,
    img: Vec<usize>,
    trail: Vec<usize>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl<'a, A: OperationTable + ?Sized, B: OperationTable + ?Sized> Search<'a, A, B> {
    fn assign(&mut self, x: usize, v: usize) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((x, v)) = queue.pop() {
            match self.img[x] {
                NONE => {}
                w if w == v => continue,
                _ => return false,
            }
            self.img[x] = v;
            self.trail.push(x);
            for i in 0..self.trail.len() {
                let y = self.trail[i];
                let w = self.img[y];
                queue.push((self.src.op(x, y), self.dst.op(v, w)));
                queue.push((self.src.op(y, x), self.dst.op(w, v)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for &x in &self.trail[mark..] {
            self.img[x] = NONE;
        }
        self.trail.truncate(mark);
    }

    fn run(&mut self) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(x) = self.img.iter().position(|&v| v == NONE) else {
            self.found.push(self.img.clone());
            return;
        };
        for v in 0..self.dst.size() {
            let mark = self.trail.len();
            if self.assign(x, v) {
                self.run();
            }
            self.undo(mark);
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

/// All homomorphisms `src -> dst` extending the partial assignment `fixed`,
/// up to `limit` of them, in lexicographic order of image arrays.
///
/// With `preserve_unit`, both tables must report a unit and the unit is sent
/// to the unit (monoid homomorphisms).
pub fn find_homomorphisms<A, B>(
    src: &A,
    dst: &B,
    preserve_unit: bool,
    fixed: &[(usize, usize)],
    limit: usize,
) -> Vec<Vec<usize>>
where
    A: OperationTable + ?Sized,
    B: OperationTable + ?Sized,
{
    let mut search = Search { src, dst, img: vec![NONE; src.size()], trail: Vec::new(), limit, found: Vec::new() };
    if src.size() == 0 {
        return vec![Vec::new()];
    }
    if dst.size() == 0 {
        return Vec::new();
    }
    if preserve_unit {
        match (src.unit(), dst.unit()) {
            (Some(a), Some(b)) => {
                if !search.assign(a, b) {
                    return Vec::new();
                }
            }
            _ => return Vec::new(),
        }
    }
    for &(x, v) in fixed {
        if x >= src.size() || v >= dst.size() || !search.assign(x, v) {
            return Vec::new();
        }
    }
    search.run();
    search.found
}

/// Whether `map` respects the operations.
pub fn is_homomorphism<A, B>(src: &A, dst: &B, map: &[usize]) -> bool
where
    A: OperationTable + ?Sized,
    B: OperationTable + ?Sized,
{
    (0..src.size()).all(|a| (0..src.size()).all(|b| map[src.op(a, b)] == dst.op(map[a], map[b])))
}
