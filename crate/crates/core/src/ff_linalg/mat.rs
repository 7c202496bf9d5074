//! Dense matrices over a runtime field, with Gaussian elimination, rank,
//! nullspace and linear solve. Rows over F_2 are bit-packed into machine
//! words for the elimination kernels; odd characteristic uses word entries
//! with reduction delayed to the end of each accumulation.

use std::fmt;

use super::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    ShapeMismatch { want: (usize, usize), got: (usize, usize) },
    FieldMismatch,
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::ShapeMismatch { want, got } => {
                write!(f, "shape mismatch: want {}x{}, got {}x{}", want.0, want.1, got.0, got.1)
            }
            MatError::FieldMismatch => write!(f, "matrices lie over different fields"),
        }
    }
}

impl std::error::Error for MatError {}

/// Row-major dense matrix. Entries are canonical field codes.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over order {}:", self.rows, self.cols, self.field.order())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> u64>(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Mat {
        let mut m = Mat::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<u64>]) -> Mat {
        let mut m = Mat::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols_vecs: &[Vec<u64>]) -> Mat {
        let mut m = Mat::zero(field, rows, cols_vecs.len());
        for (j, c) in cols_vecs.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged column");
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.field.order());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j);
            }
        }
        m
    }

    pub fn add(&self, other: &Mat) -> Result<Mat, MatError> {
        self.check_same_shape(other)?;
        let mut m = self.clone();
        for (a, &b) in m.data.iter_mut().zip(other.data.iter()) {
            *a = self.field.add(*a, b);
        }
        Ok(m)
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat, MatError> {
        self.check_same_shape(other)?;
        let mut m = self.clone();
        for (a, &b) in m.data.iter_mut().zip(other.data.iter()) {
            *a = self.field.sub(*a, b);
        }
        Ok(m)
    }

    pub fn scale(&self, c: u64) -> Mat {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        m
    }

    fn check_same_shape(&self, other: &Mat) -> Result<(), MatError> {
        if self.field != other.field {
            return Err(MatError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::ShapeMismatch {
                want: (self.rows, self.cols),
                got: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, MatError> {
        if self.field != other.field {
            return Err(MatError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatError::ShapeMismatch {
                want: (self.cols, other.rows),
                got: (other.rows, other.cols),
            });
        }
        let mut out = Mat::zero(self.field.clone(), self.rows, other.cols);
        match &self.field {
            Field::Prime(f) => {
                let p = f.p();
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let a = self.get(i, k);
                        if a == 0 {
                            continue;
                        }
                        let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                        let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                        // products < 2^62; accumulate in u128, reduce on write
                        for (d, &b) in dst.iter_mut().zip(orow.iter()) {
                            *d = (((*d as u128) + (a as u128) * (b as u128)) % p as u128) as u64;
                        }
                    }
                }
            }
            Field::Ext(f) => {
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let a = self.get(i, k);
                        if a == 0 {
                            continue;
                        }
                        for j in 0..other.cols {
                            let t = f.mul(a, other.get(k, j));
                            let cur = out.get(i, j);
                            out.data[i * other.cols + j] = f.add(cur, t);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for j in 0..self.cols {
                let t = self.field.mul(self.get(i, j), v[j]);
                acc = self.field.add(acc, t);
            }
            out[i] = acc;
        }
        out
    }

    pub fn pow(&self, mut n: u64) -> Mat {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = Mat::identity(self.field.clone(), self.rows);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            n >>= 1;
        }
        acc
    }

    /// Stack matrices on top of each other (all must share cols and field).
    pub fn vstack(parts: &[Mat]) -> Mat {
        assert!(!parts.is_empty());
        let field = parts[0].field.clone();
        let cols = parts[0].cols;
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut out = Mat::zero(field, rows, cols);
        let mut at = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            out.data[at * cols..(at + m.rows) * cols].copy_from_slice(&m.data);
            at += m.rows;
        }
        out
    }

    pub fn hstack(parts: &[Mat]) -> Mat {
        assert!(!parts.is_empty());
        let t: Vec<Mat> = parts.iter().map(|m| m.transpose()).collect();
        Mat::vstack(&t).transpose()
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        if self.field == Field::Prime(super::field::PrimeField::new(2).unwrap()) {
            return self.rref_gf2();
        }
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c));
            if inv != 1 {
                for j in c..self.cols {
                    let v = f.mul(self.get(r, j), inv);
                    self.set(r, j, v);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let t = f.mul(factor, self.get(r, j));
                    let v = f.sub(self.get(i, j), t);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Bit-packed elimination over F_2.
    fn rref_gf2(&mut self) -> Vec<usize> {
        let words = (self.cols + 63) / 64;
        let mut rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| {
                let mut w = vec![0u64; words];
                for j in 0..self.cols {
                    if self.get(i, j) == 1 {
                        w[j / 64] |= 1 << (j % 64);
                    }
                }
                w
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (wi, bi) = (c / 64, c % 64);
            let Some(pr) = (r..self.rows).find(|&i| rows[i][wi] >> bi & 1 == 1) else {
                continue;
            };
            rows.swap(r, pr);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[wi] >> bi & 1 == 1 {
                    for (a, &b) in row.iter_mut().zip(pivot_row.iter()) {
                        *a ^= b;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        for (i, w) in rows.iter().enumerate() {
            for j in 0..self.cols {
                self.data[i * self.cols + j] = w[j / 64] >> (j % 64) & 1;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row rank by Gaussian elimination; deterministic.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {x : Mx = 0}, returned as the columns of a
    /// cols x nullity matrix. `nullity = cols - rank`.
    pub fn nullspace(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_set[*c].is_none()).collect();
        let mut basis = Mat::zero(self.field.clone(), self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = self.field.neg(m.get(r, fc));
                basis.set(pc, k, v);
            }
        }
        basis
    }

    /// Basis of the column space, as columns.
    pub fn column_space(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref();
        let cols: Vec<Vec<u64>> = pivots.iter().map(|&c| self.col(c)).collect();
        Mat::from_cols(self.field.clone(), self.rows, &cols)
    }

    /// One solution of Mx = b, or None when the system is inconsistent.
    /// Shape errors are reported separately from unsolvability.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>, MatError> {
        if b.len() != self.rows {
            return Err(MatError::ShapeMismatch { want: (self.rows, 1), got: (b.len(), 1) });
        }
        let mut aug = Mat::zero(self.field.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u64; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Ok(Some(x))
    }

    /// Solve MX = B column by column; None when any column is inconsistent.
    pub fn solve_mat(&self, b: &Mat) -> Result<Option<Mat>, MatError> {
        if self.field != b.field {
            return Err(MatError::FieldMismatch);
        }
        if b.rows != self.rows {
            return Err(MatError::ShapeMismatch { want: (self.rows, b.cols), got: (b.rows, b.cols) });
        }
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            match self.solve(&b.col(j))? {
                Some(x) => cols.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(Mat::from_cols(self.field.clone(), self.cols, &cols)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn identity_rank() {
        let m = Mat::identity(f(3), 3);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.nullspace().cols(), 0);
    }

    #[test]
    fn zero_matrix_rank_and_nullity() {
        let m = Mat::zero(f(5), 4, 7);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullspace().cols(), 7);
        let z = Mat::zero(f(2), 2, 2);
        assert_eq!(z.nullspace().cols(), 2);
    }

    #[test]
    fn cycle_minus_identity() {
        // permutation matrix of a p-cycle minus identity has rank p-1
        for p in [2u64, 3, 5, 7] {
            let n = p as usize;
            let field = f(p);
            let mut m = Mat::zero(field.clone(), n, n);
            for i in 0..n {
                m.set((i + 1) % n, i, 1);
            }
            let g = m.sub(&Mat::identity(field, n)).unwrap();
            assert_eq!(g.rank(), n - 1);
        }
    }

    #[test]
    fn cycle_fixed_vector() {
        // kernel of (g - 1) for g = (1,2,3) on F_3^3 is spanned by all-ones
        let field = f(3);
        let mut m = Mat::zero(field.clone(), 3, 3);
        for i in 0..3 {
            m.set((i + 1) % 3, i, 1);
        }
        let g = m.sub(&Mat::identity(field, 3)).unwrap();
        let ns = g.nullspace();
        assert_eq!(ns.cols(), 1);
        let v = ns.col(0);
        assert!(v.iter().all(|&x| x == v[0] && x != 0));
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let m = Mat::identity(f(7), 3);
        assert_eq!(m.solve(&[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
        let z = Mat::zero(f(7), 1, 1);
        assert_eq!(z.solve(&[1]).unwrap(), None);
        assert!(z.solve(&[1, 2]).is_err());
    }

    #[test]
    fn solve_recovers_known_solution() {
        // random invertible 5x5 over F_5 applied to a known x
        let field = f(5);
        let rows = vec![
            vec![1, 2, 0, 4, 3],
            vec![0, 1, 1, 0, 2],
            vec![3, 0, 1, 1, 0],
            vec![2, 2, 0, 1, 4],
            vec![0, 3, 4, 0, 1],
        ];
        let a = Mat::from_rows(field.clone(), 5, &rows);
        assert_eq!(a.rank(), 5);
        let x = vec![4, 0, 2, 1, 3];
        let b = a.mul_vec(&x);
        assert_eq!(a.solve(&b).unwrap(), Some(x));
    }

    #[test]
    fn gf2_elimination_matches_generic() {
        // same matrix reduced over F_2 via the packed path and, entrywise,
        // via F_2 viewed as a degree-1 extension (generic path)
        let rows = vec![
            vec![1, 0, 1, 1, 0, 1],
            vec![0, 1, 1, 0, 1, 0],
            vec![1, 1, 0, 1, 1, 1],
            vec![1, 0, 1, 0, 0, 0],
        ];
        let a = Mat::from_rows(f(2), 6, &rows);
        let b = Mat::from_rows(Field::ext(2, 1).unwrap(), 6, &rows);
        assert_eq!(a.rank(), b.rank());
        assert_eq!(a.nullspace().cols(), b.nullspace().cols());
    }

    #[test]
    fn mul_associativity_spot() {
        let field = f(7);
        let a = Mat::from_fn(field.clone(), 3, 4, |i, j| ((3 * i + 5 * j + 1) % 7) as u64);
        let b = Mat::from_fn(field.clone(), 4, 2, |i, j| ((i * i + j + 2) % 7) as u64);
        let c = Mat::from_fn(field.clone(), 2, 3, |i, j| ((i + 6 * j) % 7) as u64);
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
