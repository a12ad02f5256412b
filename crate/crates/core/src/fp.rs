//! Arithmetic and exact linear algebra over a prime field GF(p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// GF(p) for a prime `p < 2^16`, so products of residues fit in a `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if is_prime(p) && p < 1 << 16 {
            Ok(PrimeField { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn neg(&self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    /// Inverse by Fermat; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            return None;
        }
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        Some(acc)
    }

    pub fn scalar(&self, v: u32) -> FpScalar {
        FpScalar { value: v % self.p, field: *self }
    }

    /// `Σ a_i b_i`.
    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

/// An element of GF(p) that carries its field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    field: PrimeField,
}

impl FpScalar {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn inv(&self) -> Option<FpScalar> {
        self.field.inv(self.value).map(|v| self.field.scalar(v))
    }
}

impl fmt::Debug for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.field.p)
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! scalar_op {
    ($tr:ident, $method:ident) => {
        impl $tr for FpScalar {
            type Output = FpScalar;
            fn $method(self, rhs: FpScalar) -> FpScalar {
                assert_eq!(self.field, rhs.field, "scalars from different fields");
                FpScalar { value: self.field.$method(self.value, rhs.value), field: self.field }
            }
        }
    };
}

scalar_op!(Add, add);
scalar_op!(Sub, sub);
scalar_op!(Mul, mul);

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar { value: self.field.neg(self.value), field: self.field }
    }
}

/// A dense matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        write!(f, "{rows:?}")
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries are reduced mod p.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        let p = field.p();
        FpMatrix { field, rows, cols, data: data.into_iter().map(|v| v % p).collect() }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// `self · other`.
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let i = r * other.cols + c;
                    out.data[i] = f.add(out.data[i], f.mul(a, other.get(k, c)));
                }
            }
        }
        out
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        (0..self.rows).map(|r| self.field.dot(self.row(r), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if pr != r {
                for k in 0..self.cols {
                    self.data.swap(pr * self.cols + k, r * self.cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for k in 0..self.cols {
                let i = r * self.cols + k;
                self.data[i] = f.mul(self.data[i], inv);
            }
            for i in 0..self.rows {
                let factor = self.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for k in 0..self.cols {
                    let v = f.sub(self.get(i, k), f.mul(factor, self.get(r, k)));
                    self.data[i * self.cols + k] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// A basis of `{x : self · x = 0}`, one vector per free column, each with
    /// a 1 in its free column.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![0; self.cols];
                x[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(m.get(r, free));
                }
                x
            })
            .collect()
    }

    /// Some `x` with `self · x = b`, if one exists.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let pivots = aug.row_reduce();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Some(x)
    }
}
