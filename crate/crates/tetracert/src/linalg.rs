//! Dense exact linear algebra over Q(zeta24).
//!
//! Everything is division-based Gaussian elimination with a pivot rule that
//! prefers structurally simple entries (fewest cyclotomic coordinates, then
//! smallest total bit size), which keeps coefficient growth tame on the
//! matrices that arise here (up to 32 x 32). Subspaces are canonicalized by
//! reduced row echelon form so equality is decidable by comparison.

use crate::field::CycNum;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    SingularMatrix,
}

/// A dense rows x cols matrix over Q(zeta24), stored row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<CycNum>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![CycNum::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, CycNum::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNum) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nr = rows.len();
        ExactMatrix { rows: nr, cols, entries: rows.into_iter().flatten().collect() }
    }

    /// Integer test data helper.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| CycNum::from_int(v)).collect()).collect(),
        )
    }

    /// A column vector from a coordinate list.
    pub fn column(v: Vec<CycNum>) -> Self {
        let rows = v.len();
        ExactMatrix { rows, cols: 1, entries: v }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNum {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNum) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[CycNum] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<CycNum> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// The entries of a single-column matrix.
    pub fn into_vec(self) -> Vec<CycNum> {
        assert_eq!(self.cols, 1, "not a column vector");
        self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    /// Apply to a coordinate vector.
    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = CycNum::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product; index (i,j) blocks follow row-major convention.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&Self]) -> Self {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        assert!(parts.iter().all(|p| p.cols == cols), "vstack column mismatch");
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for p in parts {
            entries.extend(p.entries.iter().cloned());
        }
        ExactMatrix { rows, cols, entries }
    }

    /// Place matrices with equal row counts side by side.
    pub fn hstack(parts: &[&Self]) -> Self {
        assert!(!parts.is_empty());
        let rows = parts[0].rows;
        assert!(parts.iter().all(|p| p.rows == rows), "hstack row mismatch");
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for p in parts {
            for r in 0..rows {
                for c in 0..p.cols {
                    out.set(r, offset + c, p.get(r, c).clone());
                }
            }
            offset += p.cols;
        }
        out
    }

    /// Copy of the rectangular block with the given row and column ranges.
    pub fn block(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "block out of range");
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows.start + r, cols.start + c).clone()
        })
    }

    /// Assemble blocks along the diagonal, zero elsewhere.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// Some(c) when the matrix equals c * identity.
    pub fn as_scalar(&self) -> Option<CycNum> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for r in 0..self.rows {
            for k in 0..self.cols {
                let want = if r == k { &c } else { &CycNum::zero() };
                if self.get(r, k) != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn trace(&self) -> CycNum {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut t = CycNum::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            // Pick the structurally simplest nonzero pivot in this column.
            let mut best: Option<(usize, (u32, u64))> = None;
            for r in lead..m.rows {
                let e = m.get(r, col);
                if !e.is_zero() {
                    let cx = e.complexity();
                    match &best {
                        Some((_, bc)) if *bc <= cx => {}
                        _ => best = Some((r, cx)),
                    }
                }
            }
            let Some((prow, _)) = best else { continue };
            m.swap_rows(lead, prow);
            let pinv = m.get(lead, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(lead, c) * &pinv;
                m.set(lead, c, v);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(lead, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant: direct formula up to 3 x 3, elimination above.
    pub fn det(&self) -> CycNum {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        match n {
            0 => CycNum::one(),
            1 => self.get(0, 0).clone(),
            2 => {
                &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0))
            }
            3 => {
                let m = |r: usize, c: usize| self.get(r, c);
                let mut d = &(m(0, 0) * m(1, 1)) * m(2, 2);
                d += &(&(m(0, 1) * m(1, 2)) * m(2, 0));
                d += &(&(m(0, 2) * m(1, 0)) * m(2, 1));
                d -= &(&(m(0, 2) * m(1, 1)) * m(2, 0));
                d -= &(&(m(0, 0) * m(1, 2)) * m(2, 1));
                d -= &(&(m(0, 1) * m(1, 0)) * m(2, 2));
                d
            }
            _ => {
                let mut m = self.clone();
                let mut det = CycNum::one();
                for col in 0..n {
                    let mut prow = None;
                    for r in col..n {
                        if !m.get(r, col).is_zero() {
                            prow = Some(r);
                            break;
                        }
                    }
                    let Some(prow) = prow else { return CycNum::zero() };
                    if prow != col {
                        m.swap_rows(col, prow);
                        det = -det;
                    }
                    let pivot = m.get(col, col).clone();
                    det = &det * &pivot;
                    let pinv = pivot.inv().expect("pivot is nonzero");
                    for r in col + 1..n {
                        let factor = m.get(r, col) * &pinv;
                        if factor.is_zero() {
                            continue;
                        }
                        for c in col..n {
                            let v = m.get(r, c) - &(&factor * m.get(col, c));
                            m.set(r, c, v);
                        }
                    }
                }
                det
            }
        }
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Self::hstack(&[self, &Self::identity(n)]);
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Canonical basis of the null space { v : M v = 0 }.
    pub fn kernel(&self) -> Subspace {
        let (red, pivots) = self.rref();
        let mut vectors = Vec::new();
        let pivot_set: Vec<usize> = pivots.clone();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![CycNum::zero(); self.cols];
            v[free] = CycNum::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -red.get(prow, free);
            }
            vectors.push(v);
        }
        Subspace::from_columns(self.cols, vectors)
    }

    /// Kernel of (M - mu * I) as a subspace of the column space.
    pub fn eigenspace(&self, mu: &CycNum) -> Subspace {
        assert_eq!(self.rows, self.cols, "eigenspace of a non-square matrix");
        let shifted = self.sub(&Self::identity(self.rows).scale(mu));
        shifted.kernel()
    }

    /// All solutions of M x = b as (particular, kernel basis); None when
    /// inconsistent.
    pub fn solve_affine(&self, b: &[CycNum]) -> Option<(Vec<CycNum>, Vec<Vec<CycNum>>)> {
        assert_eq!(self.rows, b.len(), "shape mismatch in linear solve");
        let bmat = Self::column(b.to_vec());
        let aug = Self::hstack(&[self, &bmat]);
        let (red, pivots) = aug.rref();
        // Inconsistent when a pivot lands in the augmented column.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut particular = vec![CycNum::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            particular[pcol] = red.get(prow, self.cols).clone();
        }
        let mut hom = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![CycNum::zero(); self.cols];
            v[free] = CycNum::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -red.get(prow, free);
            }
            hom.push(v);
        }
        Some((particular, hom))
    }

    /// The unique solution of M x = b when M is square and invertible.
    pub fn solve_unique(&self, b: &[CycNum]) -> Result<Vec<CycNum>, LinalgError> {
        let (part, hom) = self.solve_affine(b).ok_or(LinalgError::SingularMatrix)?;
        if !hom.is_empty() {
            return Err(LinalgError::SingularMatrix);
        }
        Ok(part)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[ ")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix({}x{})\n{}", self.rows, self.cols, self)
    }
}

/// A linear subspace of Q(zeta24)^n, stored as the reduced row echelon form
/// of its basis so that equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subspace {
    ambient: usize,
    /// dim x ambient matrix in RREF with no zero rows.
    basis: ExactMatrix,
}

impl Subspace {
    /// Span of a list of coordinate vectors (each of length `ambient`).
    pub fn from_columns(ambient: usize, vectors: Vec<Vec<CycNum>>) -> Self {
        if vectors.is_empty() {
            return Subspace { ambient, basis: ExactMatrix::zeros(0, ambient) };
        }
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length mismatch");
        let m = ExactMatrix::from_rows(vectors);
        let (red, pivots) = m.rref();
        let dim = pivots.len();
        let basis = ExactMatrix::from_fn(dim, ambient, |r, c| red.get(r, c).clone());
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_columns(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        let id = ExactMatrix::identity(ambient);
        Self::from_columns(ambient, (0..ambient).map(|c| id.col(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// The canonical basis vectors as coordinate lists.
    pub fn basis_vectors(&self) -> Vec<Vec<CycNum>> {
        (0..self.dim()).map(|r| self.basis.row(r).to_vec()).collect()
    }

    /// Ambient x dim matrix whose columns are the canonical basis vectors.
    pub fn basis_matrix(&self) -> ExactMatrix {
        self.basis.transpose()
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut rem = v.to_vec();
        for r in 0..self.dim() {
            // The RREF row has a unit pivot at its first nonzero column.
            let prow = self.basis.row(r);
            let pcol = prow.iter().position(|e| !e.is_zero()).expect("no zero basis rows");
            let c = rem[pcol].clone();
            if c.is_zero() {
                continue;
            }
            for (j, e) in prow.iter().enumerate() {
                if !e.is_zero() {
                    rem[j] = &rem[j] - &(&c * e);
                }
            }
        }
        rem.iter().all(|e| e.is_zero())
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Self::from_columns(self.ambient, vs)
    }

    /// dim(A) + dim(B) - dim(A + B).
    pub fn intersection_dim(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CycNum;

    #[test]
    fn product_and_identity() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let id = ExactMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
    }

    #[test]
    fn inverse_of_a_small_matrix() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.inverse(), Err(LinalgError::SingularMatrix));
        assert_eq!(a.rank(), 1);
        assert!(a.det().is_zero());
    }

    #[test]
    fn kernel_of_cyclic_permutation_minus_identity() {
        // The 3x3 cyclic permutation fixes exactly the diagonal line (1,1,1).
        let p = ExactMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let ker = p.eigenspace(&CycNum::one());
        assert_eq!(ker.dim(), 1);
        let ones = vec![CycNum::one(), CycNum::one(), CycNum::one()];
        assert!(ker.contains(&ones));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6]]);
        let ker = m.kernel();
        assert_eq!(ker.dim(), 1);
        for v in ker.basis_vectors() {
            assert!(m.apply(&v).iter().all(|e| e.is_zero()));
        }
        assert_eq!(m.rank() + ker.dim(), m.ncols());
    }

    #[test]
    fn det_matches_elimination_and_formula() {
        let m = ExactMatrix::from_i64_rows(&[
            &[2, 0, 1, 3],
            &[1, 1, 0, 2],
            &[0, 5, 1, 1],
            &[1, 0, 0, 4],
        ]);
        // Laplace along the last row (-12 + 28) and manual row reduction
        // (2 * 1 * 7/2 * 16/7) both give 16.
        assert_eq!(m.det(), CycNum::from_int(16));
    }

    #[test]
    fn subspace_equality_is_basis_independent() {
        let one = CycNum::one;
        let a = Subspace::from_columns(3, vec![
            vec![one(), CycNum::zero(), one()],
            vec![CycNum::zero(), one(), one()],
        ]);
        let b = Subspace::from_columns(3, vec![
            vec![one(), one(), CycNum::from_int(2)],
            vec![one(), -one(), CycNum::zero()],
        ]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.intersection_dim(&b), 2);
    }

    #[test]
    fn affine_solve_reports_solution_set() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let b = vec![CycNum::from_int(3), CycNum::from_int(5)];
        let (part, hom) = m.solve_affine(&b).unwrap();
        assert_eq!(m.apply(&part), b);
        assert_eq!(hom.len(), 1);
        let inconsistent = ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let b2 = vec![CycNum::from_int(0), CycNum::from_int(1)];
        assert!(inconsistent.solve_affine(&b2).is_none());
    }

    #[test]
    fn kronecker_shape_and_values() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        let b = ExactMatrix::from_i64_rows(&[&[3, 0], &[0, 3]]);
        let k = a.kronecker(&b);
        assert_eq!((k.nrows(), k.ncols()), (4, 4));
        assert_eq!(k.get(0, 2), &CycNum::from_int(6));
        assert_eq!(k.trace(), CycNum::from_int(12));
    }

    #[test]
    fn block_extraction_and_block_diagonal() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let b = ExactMatrix::from_i64_rows(&[&[5]]);
        let d = ExactMatrix::block_diag(&[&a, &b]);
        assert_eq!((d.nrows(), d.ncols()), (3, 3));
        assert_eq!(d.block(0..2, 0..2), a);
        assert_eq!(d.block(2..3, 2..3), b);
        assert!(d.block(0..2, 2..3).is_zero());
        assert_eq!(d.trace(), CycNum::from_int(10));
    }
}
