//! Dense matrices, row reduction and subspace enumeration over `F_q`.

use std::fmt;

use crate::error::{Budget, Error, Result};
use crate::field::inv_mod;

#[inline]
fn addm(a: u8, b: u8, q: u8) -> u8 {
    let s = a + b;
    if s >= q {
        s - q
    } else {
        s
    }
}

#[inline]
fn mulm(a: u8, b: u8, q: u8) -> u8 {
    ((a as u16 * b as u16) % q as u16) as u8
}

#[inline]
fn negm(a: u8, q: u8) -> u8 {
    if a == 0 {
        0
    } else {
        q - a
    }
}

/// `x += c·y` on vectors.
fn axpy(x: &mut [u8], c: u8, y: &[u8], q: u8) {
    if c == 0 {
        return;
    }
    for (a, &b) in x.iter_mut().zip(y) {
        *a = addm(*a, mulm(c, b, q), q);
    }
}

/// A dense row-major matrix over `F_q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    q: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]_{}x{}", self.rows, self.cols)
    }
}

impl FqMatrix {
    pub fn new(q: u8, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        debug_assert!(data.iter().all(|&x| x < q));
        Self { q, rows, cols, data }
    }

    pub fn from_rows(q: u8, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r.iter().map(|&x| x.rem_euclid(q as i64) as u8));
        }
        Self::new(q, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(q: u8, rows: usize, columns: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(q, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn zeros(q: u8, rows: usize, cols: usize) -> Self {
        Self { q, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(q: u8, n: usize) -> Self {
        let mut m = Self::zeros(q, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v % self.q;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, rhs: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let q = self.q;
        let mut out = FqMatrix::zeros(q, self.rows, rhs.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    axpy(dst, a, rhs.row(k), q);
                }
            }
        }
        out
    }

    /// `M·v` for a column vector `v`.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0u8, |acc, (&a, &b)| addm(acc, mulm(a, b, self.q), self.q)))
            .collect()
    }

    pub fn add(&self, rhs: &FqMatrix) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| addm(a, b, self.q)).collect();
        FqMatrix { q: self.q, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> FqMatrix {
        let data = self.data.iter().map(|&a| negm(a, self.q)).collect();
        FqMatrix { q: self.q, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &FqMatrix) -> FqMatrix {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: u8) -> FqMatrix {
        let data = self.data.iter().map(|&a| mulm(a, c % self.q, self.q)).collect();
        FqMatrix { q: self.q, rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut out = FqMatrix::zeros(self.q, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Block-diagonal sum `[[self, 0], [0, rhs]]`.
    pub fn block_diag(&self, rhs: &FqMatrix) -> FqMatrix {
        let mut out = FqMatrix::zeros(self.q, self.rows + rhs.rows, self.cols + rhs.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, rhs);
        out
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &FqMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FqMatrix, Vec<usize>) {
        let q = self.q;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = inv_mod(m.get(row, col), q);
            for c in 0..m.cols {
                let v = mulm(m.get(row, c), inv, q);
                m.set(row, c, v);
            }
            let pivot_row: Vec<u8> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r != row {
                    let f = m.get(r, col);
                    if f != 0 {
                        let cols = m.cols;
                        axpy(&mut m.data[r * cols..(r + 1) * cols], negm(f, q), &pivot_row, q);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let q = self.q;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = negm(r.get(i, free), q);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `M x = target` together with a kernel basis, or
    /// `None` if the system is inconsistent.
    pub fn solve(&self, target: &[u8]) -> Result<Option<(Vec<u8>, Vec<Vec<u8>>)>> {
        if target.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "target of length {} for a {}x{} system",
                target.len(),
                self.rows,
                self.cols
            )));
        }
        let mut aug = FqMatrix::zeros(self.q, self.rows, self.cols + 1);
        aug.paste(0, 0, self);
        for (r, &t) in target.iter().enumerate() {
            aug.set(r, self.cols, t);
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u8; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols);
        }
        Ok(Some((x, self.kernel())))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<FqMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = FqMatrix::zeros(self.q, n, 2 * n);
        aug.paste(0, 0, self);
        aug.paste(0, n, &FqMatrix::identity(self.q, n));
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = FqMatrix::zeros(self.q, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Some(inv)
    }
}

/// Rank of a matrix over `F_q`.
pub fn rank(m: &FqMatrix) -> usize {
    m.rank()
}

/// Solutions of `M x = target`: a particular solution and a kernel basis.
pub fn solve_linear(m: &FqMatrix, target: &[u8]) -> Result<Option<(Vec<u8>, Vec<Vec<u8>>)>> {
    m.solve(target)
}

/// A subspace of `F_q^n`, stored as a reduced row echelon basis; two
/// subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    q: u8,
    n: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn zero(q: u8, n: usize) -> Self {
        Self { q, n, pivots: Vec::new(), basis: Vec::new() }
    }

    pub fn full(q: u8, n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0u8; n];
                v[i] = 1;
                v
            })
            .collect();
        Self { q, n, pivots: (0..n).collect(), basis }
    }

    pub fn span(q: u8, n: usize, vectors: &[Vec<u8>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(q, n);
        }
        let mut m = FqMatrix::zeros(q, vectors.len(), n);
        for (r, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), n);
            for (c, &x) in v.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        let (red, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Self { q, n, pivots, basis }
    }

    /// Column space of `m`.
    pub fn image(m: &FqMatrix) -> Self {
        let cols: Vec<Vec<u8>> = (0..m.cols()).map(|c| m.column(c)).collect();
        Self::span(m.q(), m.rows(), &cols)
    }

    pub fn kernel(m: &FqMatrix) -> Self {
        Self::span(m.q(), m.cols(), &m.kernel())
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical coset representative: `v` with all pivot coordinates cleared.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if c != 0 {
                axpy(&mut r, negm(c, self.q), b, self.q);
            }
        }
        r
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v ∈ self` in the echelon basis.
    pub fn coords(&self, v: &[u8]) -> Vec<u8> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.q, self.n, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = Σ c_i b_i lies in `other` iff its reduction vanishes.
        if self.dim() == 0 {
            return self.clone();
        }
        let cols: Vec<Vec<u8>> = self.basis.iter().map(|b| other.reduce(b)).collect();
        let m = FqMatrix::from_columns(self.q, self.n, &cols);
        let vecs: Vec<Vec<u8>> = m.kernel().iter().map(|c| self.combine(c)).collect();
        Subspace::span(self.q, self.n, &vecs)
    }

    /// `Σ c_i b_i`.
    pub fn combine(&self, c: &[u8]) -> Vec<u8> {
        let mut v = vec![0u8; self.n];
        for (b, &ci) in self.basis.iter().zip(c) {
            axpy(&mut v, ci, b, self.q);
        }
        v
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &FqMatrix) -> Subspace {
        let imgs: Vec<Vec<u8>> = self.basis.iter().map(|b| m.apply(b)).collect();
        Subspace::span(self.q, m.rows(), &imgs)
    }

    /// `{x : m x ∈ self}`.
    pub fn preimage(&self, m: &FqMatrix) -> Subspace {
        assert_eq!(m.rows(), self.n);
        let cols: Vec<Vec<u8>> = (0..m.cols()).map(|c| self.reduce(&m.column(c))).collect();
        let test = FqMatrix::from_columns(self.q, self.n, &cols);
        Subspace::span(self.q, m.cols(), &test.kernel())
    }

    /// Basis of a complement of `self` inside `outer` (which must contain it),
    /// made of reduced coset representatives.
    pub fn complement_in(&self, outer: &Subspace) -> Vec<Vec<u8>> {
        let reduced: Vec<Vec<u8>> = outer.basis.iter().map(|b| self.reduce(b)).collect();
        Subspace::span(self.q, self.n, &reduced).basis
    }
}

/// Gaussian binomial coefficient `[n choose k]_q` from the product formula.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= (q as u128).pow((n - i) as u32) - 1;
        den *= (q as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All `k`-dimensional subspaces of `F_q^n`, each in its canonical echelon basis.
pub fn enumerate_subspaces(q: u8, n: usize, k: usize, budget: Budget) -> Result<Vec<Subspace>> {
    if k > n {
        return Ok(Vec::new());
    }
    budget.check("subspace enumeration", gaussian_binomial(n, k, q as u64))?;
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(n, k, 0, &mut pivots, &mut |piv| fill_echelon(q, n, piv, &mut out));
    Ok(out)
}

fn pivot_sets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for c in start..n {
        if n - c < k - cur.len() {
            break;
        }
        cur.push(c);
        pivot_sets(n, k, c + 1, cur, f);
        cur.pop();
    }
}

/// Every echelon basis with the given pivots: free entries sit to the right
/// of each pivot in non-pivot columns.
fn fill_echelon(q: u8, n: usize, pivots: &[usize], out: &mut Vec<Subspace>) {
    let mut free = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                free.push((i, c));
            }
        }
    }
    let total = (q as u64).pow(free.len() as u32);
    for code in 0..total {
        let mut basis: Vec<Vec<u8>> = pivots
            .iter()
            .map(|&p| {
                let mut v = vec![0u8; n];
                v[p] = 1;
                v
            })
            .collect();
        let mut c = code;
        for &(i, col) in &free {
            basis[i][col] = (c % q as u64) as u8;
            c /= q as u64;
        }
        out.push(Subspace { q, n, pivots: pivots.to_vec(), basis });
    }
}

/// All subspaces `S` with `low ⊆ S ⊆ high`, optionally of a fixed dimension.
pub fn enumerate_between(low: &Subspace, high: &Subspace, dim: Option<usize>, budget: Budget) -> Result<Vec<Subspace>> {
    if !low.is_subspace_of(high) {
        return Ok(Vec::new());
    }
    let comp = low.complement_in(high);
    let m = comp.len();
    let dims: Vec<usize> = match dim {
        Some(d) if d < low.dim() || d > high.dim() => return Ok(Vec::new()),
        Some(d) => vec![d - low.dim()],
        None => (0..=m).collect(),
    };
    let total: u128 = dims.iter().map(|&k| gaussian_binomial(m, k, low.q as u64)).sum();
    budget.check("subspace interval enumeration", total)?;
    let mut out = Vec::new();
    for k in dims {
        for t in enumerate_subspaces(low.q, m, k, Budget(u64::MAX))? {
            let mut gens = low.basis.clone();
            for row in t.basis() {
                let mut v = vec![0u8; low.n];
                for (j, &c) in row.iter().enumerate() {
                    axpy(&mut v, c, &comp[j], low.q);
                }
                gens.push(v);
            }
            out.push(Subspace::span(low.q, low.n, &gens));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&FqMatrix::zeros(2, 2, 2)), 0);
        assert_eq!(rank(&FqMatrix::identity(3, 3)), 3);
        assert_eq!(rank(&FqMatrix::from_rows(2, &[&[1, 1], &[1, 1]])), 1);
        assert_eq!(rank(&FqMatrix::zeros(2, 0, 3)), 0);
    }

    #[test]
    fn solve_examples() {
        let v = vec![1, 2, 0];
        let (x, k) = solve_linear(&FqMatrix::identity(3, 3), &v).unwrap().unwrap();
        assert_eq!(x, v);
        assert!(k.is_empty());

        let (x, k) = solve_linear(&FqMatrix::zeros(2, 2, 2), &[0, 0]).unwrap().unwrap();
        assert_eq!(x, vec![0, 0]);
        assert_eq!(k.len(), 2);

        let (x, k) = solve_linear(&FqMatrix::from_rows(2, &[&[1, 1]]), &[1]).unwrap().unwrap();
        assert_eq!(x, vec![1, 0]);
        assert_eq!(k, vec![vec![1, 1]]);

        assert!(solve_linear(&FqMatrix::zeros(2, 1, 2), &[1]).unwrap().is_none());
        assert!(solve_linear(&FqMatrix::zeros(2, 1, 2), &[1, 0]).is_err());
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(enumerate_subspaces(2, 2, 1, Budget::default()).unwrap().len(), 3);
        assert_eq!(enumerate_subspaces(2, 3, 0, Budget::default()).unwrap().len(), 1);
        assert_eq!(enumerate_subspaces(3, 2, 1, Budget::default()).unwrap().len(), 4);
        assert!(enumerate_subspaces(2, 10, 5, Budget(100)).unwrap_err().is_budget());
    }

    #[test]
    fn inverse_round_trip() {
        let m = FqMatrix::from_rows(3, &[&[1, 2], &[0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FqMatrix::identity(3, 2));
        assert!(FqMatrix::from_rows(2, &[&[1, 1], &[1, 1]]).inverse().is_none());
        assert_eq!(FqMatrix::zeros(2, 0, 0).inverse(), Some(FqMatrix::zeros(2, 0, 0)));
    }

    #[test]
    fn between_respects_bounds() {
        let low = Subspace::span(2, 3, &[vec![1, 0, 0]]);
        let high = Subspace::full(2, 3);
        let all = enumerate_between(&low, &high, None, Budget::default()).unwrap();
        // subspaces of F_2^3 containing a fixed line = subspaces of F_2^2
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|s| low.is_subspace_of(s)));
        let planes = enumerate_between(&low, &high, Some(2), Budget::default()).unwrap();
        assert_eq!(planes.len(), 3);
    }

    #[test]
    fn preimage_and_intersection() {
        let m = FqMatrix::from_rows(2, &[&[1, 1], &[0, 0]]);
        let w = Subspace::zero(2, 2);
        assert_eq!(w.preimage(&m), Subspace::span(2, 2, &[vec![1, 1]]));
        let a = Subspace::span(2, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(2, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.intersect(&b), Subspace::span(2, 3, &[vec![0, 1, 0]]));
    }
}
