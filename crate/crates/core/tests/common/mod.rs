//! Brute-force reference implementations. Nothing here calls the search code
//! it is used to check: translations are found by filtering all `nⁿ` maps,
//! linear multipliers by filtering all matrix pairs, semigroups by filtering
//! all Cayley tables.

#![allow(dead_code)]

pub type Table = Vec<Vec<usize>>;

pub fn mul(t: &Table, x: usize, y: usize) -> usize {
    t[x][y]
}

pub fn is_associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

/// All `n^k` maps `{0..k} -> {0..n}` in lexicographic order.
pub fn all_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (0..n).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

pub fn left_translations(t: &Table) -> Vec<Vec<usize>> {
    let n = t.len();
    all_maps(n, n)
        .into_iter()
        .filter(|l| (0..n).all(|x| (0..n).all(|y| l[t[x][y]] == t[l[x]][y])))
        .collect()
}

pub fn right_translations(t: &Table) -> Vec<Vec<usize>> {
    let n = t.len();
    all_maps(n, n)
        .into_iter()
        .filter(|r| (0..n).all(|x| (0..n).all(|y| r[t[x][y]] == t[x][r[y]])))
        .collect()
}

/// Linked pairs `(L, R)`, sorted.
pub fn hull_pairs(t: &Table) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = t.len();
    let mut out = Vec::new();
    for l in left_translations(t) {
        for r in right_translations(t) {
            if (0..n).all(|y| (0..n).all(|z| t[r[y]][z] == t[y][l[z]])) {
                out.push((l.clone(), r));
            }
        }
    }
    out.sort();
    out
}

/// `(L', R') ⋆ (L, R) = (L'∘L, R∘R')`.
pub fn star(a: &(Vec<usize>, Vec<usize>), b: &(Vec<usize>, Vec<usize>)) -> (Vec<usize>, Vec<usize>) {
    let compose = |f: &[usize], g: &[usize]| g.iter().map(|&x| f[x]).collect::<Vec<_>>();
    (compose(&a.0, &b.0), compose(&b.1, &a.1))
}

/// `x ↦ (z ↦ xz, y ↦ yx)`.
pub fn canonical(t: &Table, x: usize) -> (Vec<usize>, Vec<usize>) {
    let n = t.len();
    ((0..n).map(|z| t[x][z]).collect(), (0..n).map(|y| t[y][x]).collect())
}

pub fn identity_of(t: &Table) -> Option<usize> {
    let n = t.len();
    (0..n).find(|&e| (0..n).all(|x| t[e][x] == x && t[x][e] == x))
}

pub fn globally_idempotent(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|u| (0..n).any(|x| (0..n).any(|y| t[x][y] == u)))
}

/// `yx = zx` for all `x` forces `y = z`.
pub fn left_nondegenerate(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|y| (0..n).all(|z| y == z || (0..n).any(|x| t[y][x] != t[z][x])))
}

/// `xy = xz` for all `x` forces `y = z`.
pub fn right_nondegenerate(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|y| (0..n).all(|z| y == z || (0..n).any(|x| t[x][y] != t[x][z])))
}

pub fn sem_nd(t: &Table) -> bool {
    globally_idempotent(t) && left_nondegenerate(t) && right_nondegenerate(t)
}

/// Every associative table on `{0..n}`, in row-major lexicographic order.
pub fn all_semigroups(n: usize) -> Vec<Table> {
    let cells = n * n;
    all_maps(cells, n)
        .into_iter()
        .map(|flat| flat.chunks(n.max(1)).map(<[usize]>::to_vec).collect::<Table>())
        .map(|t| if n == 0 { Vec::new() } else { t })
        .filter(is_associative)
        .collect()
}

/// Maps `f: {0..|src|} -> {0..dst_size}` with `f(xy) = f(x) ∘ f(y)`.
pub fn homomorphisms(src: &Table, dst_size: usize, dst_op: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    let n = src.len();
    all_maps(n, dst_size)
        .into_iter()
        .filter(|f| (0..n).all(|a| (0..n).all(|b| f[src[a][b]] == dst_op(f[a], f[b]))))
        .collect()
}

// linear algebra over GF(p), matrices as `m[row][col]`, column vectors

pub type Mat = Vec<Vec<u32>>;

pub fn mat_vec(p: u32, m: &Mat, v: &[u32]) -> Vec<u32> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % p).collect()
}

pub fn mat_mul(p: u32, a: &Mat, b: &Mat) -> Mat {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n).map(|c| row.iter().enumerate().map(|(k, x)| x * b[k][c]).sum::<u32>() % p).collect())
        .collect()
}

pub fn transpose(m: &Mat) -> Mat {
    let d = m.len();
    (0..d).map(|i| (0..d).map(|j| m[j][i]).collect()).collect()
}

/// `x·y` from structure constants `mul[i][j][k]`.
pub fn product(p: u32, mul: &[Vec<Vec<u32>>], x: &[u32], y: &[u32]) -> Vec<u32> {
    let d = x.len();
    let mut out = vec![0; d];
    for i in 0..d {
        for j in 0..d {
            for (k, o) in out.iter_mut().enumerate() {
                *o = (*o + x[i] * y[j] * mul[i][j][k]) % p;
            }
        }
    }
    out
}

pub fn all_vectors(p: u32, d: usize) -> Vec<Vec<u32>> {
    all_maps(d, p as usize).into_iter().map(|v| v.into_iter().map(|x| x as u32).collect()).collect()
}

pub fn all_matrices(p: u32, d: usize) -> Vec<Mat> {
    all_vectors(p, d * d).into_iter().map(|v| v.chunks(d.max(1)).map(<[u32]>::to_vec).collect()).collect()
}

/// All pairs `(L, R)` satisfying `L(xy) = L(x)y`, `R(xy) = xR(y)`,
/// `R(x)y = xL(y)` on basis vectors, by trying every pair of matrices.
pub fn linear_multipliers(p: u32, mul: &[Vec<Vec<u32>>]) -> Vec<(Mat, Mat)> {
    let d = mul.len();
    let basis: Vec<Vec<u32>> = (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect();
    let mats = all_matrices(p, d);
    let pr = |x: &[u32], y: &[u32]| product(p, mul, x, y);
    let left: Vec<&Mat> = mats
        .iter()
        .filter(|l| {
            basis.iter().all(|x| basis.iter().all(|y| mat_vec(p, l, &pr(x, y)) == pr(&mat_vec(p, l, x), y)))
        })
        .collect();
    let right: Vec<&Mat> = mats
        .iter()
        .filter(|r| {
            basis.iter().all(|x| basis.iter().all(|y| mat_vec(p, r, &pr(x, y)) == pr(x, &mat_vec(p, r, y))))
        })
        .collect();
    let mut out = Vec::new();
    for l in &left {
        for r in &right {
            if basis.iter().all(|x| basis.iter().all(|y| pr(&mat_vec(p, r, x), y) == pr(x, &mat_vec(p, l, y)))) {
                out.push(((*l).clone(), (*r).clone()));
            }
        }
    }
    out.sort();
    out
}

/// Every associative structure tensor of dimension `d` over GF(p).
pub fn all_associative_algebras(p: u32, d: usize) -> Vec<Vec<Vec<Vec<u32>>>> {
    let basis: Vec<Vec<u32>> = (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect();
    all_vectors(p, d * d * d)
        .into_iter()
        .map(|flat| {
            (0..d).map(|i| (0..d).map(|j| flat[(i * d + j) * d..(i * d + j + 1) * d].to_vec()).collect()).collect()
        })
        .filter(|mul: &Vec<Vec<Vec<u32>>>| {
            let pr = |x: &[u32], y: &[u32]| product(p, mul, x, y);
            basis.iter().all(|a| basis.iter().all(|b| basis.iter().all(|c| pr(&pr(a, b), c) == pr(a, &pr(b, c)))))
        })
        .collect()
}

/// `(L', R') ⋆ (L, R) = (L'L, RR')`.
pub fn star_linear(p: u32, a: &(Mat, Mat), b: &(Mat, Mat)) -> (Mat, Mat) {
    (mat_mul(p, &a.0, &b.0), mat_mul(p, &b.1, &a.1))
}
