//! Dense matrices over `Q`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::rational::Q;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Q::one())
    }

    pub fn scalar(n: usize, q: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = q.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Like [`QMatrix::from_rows`] but keeps the declared shape when there
    /// are no rows, and reports ragged input as an error.
    pub fn from_rows_shaped(rows: Vec<Vec<Q>>, nrows: usize, ncols: usize) -> Result<Self> {
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape(format!(
                "expected a {nrows}x{ncols} matrix, got {} rows",
                rows.len()
            )));
        }
        Ok(QMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Q::from_int(x)).collect()).collect())
    }

    pub fn column_vector(v: Vec<Q>) -> Self {
        QMatrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, q: &Q) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * q).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn try_add(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!("add {:?} + {:?}", self.shape(), other.shape())));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!("sub {:?} - {:?}", self.shape(), other.shape())));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!("mul {:?} * {:?}", self.shape(), other.shape())));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space as the columns of a `cols x k` matrix.
    ///
    /// Each basis vector has a one in its own free coordinate and zeros in
    /// the other free coordinates, so the basis depends only on the kernel.
    pub fn kernel(&self) -> QMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = QMatrix::zeros(self.cols, free.len());
        for (idx, &f) in free.iter().enumerate() {
            k[(f, idx)] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                k[(p, idx)] = -&r[(row, f)];
            }
        }
        k
    }

    /// Basis of the column space in reduced column echelon form.
    pub fn image(&self) -> QMatrix {
        let (r, pivots) = self.transpose().rref();
        let rank = pivots.len();
        QMatrix::from_fn(self.rows, rank, |i, j| r[(j, i)].clone())
    }

    /// Some solution `x` of `self * x = b`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &QMatrix) -> Option<QMatrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = QMatrix::zeros(self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Shape(format!("inverse of non-square {:?}", self.shape())));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&QMatrix::identity(n)).rref();
        if pivots.iter().any(|&p| p >= n) {
            return Err(Error::Singular);
        }
        Ok(r.block(0, n, n, n))
    }

    pub fn determinant(&self) -> Result<Q> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of non-square {:?}", self.shape())));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Q::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            let inv = pivot.recip().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= &v;
                }
            }
        }
        Ok(det)
    }

    /// Left inverse `L` with `L * self = I`, when `self` has full column rank.
    pub fn left_inverse(&self) -> Option<QMatrix> {
        let (_, rows) = self.transpose().rref();
        if rows.len() < self.cols {
            return None;
        }
        let square = self.select_rows(&rows);
        let inv = square.inverse().ok()?;
        let mut l = QMatrix::zeros(self.cols, self.rows);
        for (k, &r) in rows.iter().enumerate() {
            for i in 0..self.cols {
                l[(i, r)] = inv[(i, k)].clone();
            }
        }
        Some(l)
    }

    /// Coordinates of the columns of `vectors` in the basis given by the
    /// columns of `self`, or `None` if some column lies outside the span.
    pub fn coordinates(&self, vectors: &QMatrix) -> Option<QMatrix> {
        self.solve(vectors)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        let (r1, c1) = self.shape();
        let (r2, c2) = other.shape();
        QMatrix::from_fn(r1 * r2, c1 * c2, |i, j| &self[(i / r2, j / c2)] * &other[(i % r2, j % c2)])
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &QMatrix) -> QMatrix {
        let mut m = QMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn block_diagonal(blocks: &[QMatrix]) -> QMatrix {
        let rows = blocks.iter().map(QMatrix::rows).sum();
        let cols = blocks.iter().map(QMatrix::cols).sum();
        let mut m = QMatrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    pub fn hstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        let mut m = QMatrix::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        QMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Stacks matrices vertically; `cols` fixes the width when `parts` is empty.
    pub fn vstack_all(parts: &[QMatrix], cols: usize) -> QMatrix {
        let mut m = QMatrix::zeros(0, cols);
        for p in parts {
            m = m.vstack(p);
        }
        m
    }

    pub fn hstack_all(parts: &[QMatrix], rows: usize) -> QMatrix {
        let mut m = QMatrix::zeros(rows, 0);
        for p in parts {
            m = m.hstack(p);
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> QMatrix {
        QMatrix::from_fn(rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> QMatrix {
        QMatrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> QMatrix {
        QMatrix::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &QMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn add_block(&mut self, r0: usize, c0: usize, b: &QMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                let v = &b[(i, j)];
                if !v.is_zero() {
                    self[(r0 + i, c0 + j)] += v;
                }
            }
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&QMatrix> for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Mul<QMatrix> for QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: QMatrix) -> QMatrix {
        &self * &rhs
    }
}

impl Add<&QMatrix> for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        self.try_add(rhs).expect("matrix sum shape")
    }
}

impl Sub<&QMatrix> for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        self.try_sub(rhs).expect("matrix difference shape")
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.scale(&Q::from_int(-1))
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(Q::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "({}x{})", self.rows, self.cols);
        }
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(Q::to_string).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

/// A quotient of `Q^n` by the span of a set of relations, with a projection
/// onto a chosen complement and a section of that projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// `q x n`, sends a vector to its class.
    pub projection: QMatrix,
    /// `n x q`, picks a representative of each class; `projection * section = I`.
    pub section: QMatrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

/// Quotient of `Q^ambient` by the column span of `relations`.
///
/// The complement is spanned by the standard basis vectors at the non-pivot
/// coordinates of the reduced echelon basis of the relation span.
pub fn quotient_space(ambient: usize, relations: &QMatrix) -> Quotient {
    assert_eq!(relations.rows(), ambient, "relations must live in the ambient space");
    let (r, pivots) = relations.transpose().rref();
    let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
    let mut projection = QMatrix::zeros(free.len(), ambient);
    for (row, &j) in free.iter().enumerate() {
        projection[(row, j)] = Q::one();
        for (prow, &p) in pivots.iter().enumerate() {
            let v = &r[(prow, j)];
            if !v.is_zero() {
                projection[(row, p)] = -v;
            }
        }
    }
    let mut section = QMatrix::zeros(ambient, free.len());
    for (col, &j) in free.iter().enumerate() {
        section[(j, col)] = Q::one();
    }
    Quotient { projection, section }
}
