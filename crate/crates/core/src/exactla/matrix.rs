use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};
use std::fmt;

pub type Vector = Vec<Scalar>;

/// Dense matrix over an exact field, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of row reduction: the reduced matrix and its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// All solutions of `A·X = B`.
#[derive(Clone, Debug)]
pub struct AffineSpace {
    pub particular: Option<Matrix>,
    pub kernel_basis: Vec<Matrix>,
}

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a·x`.
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = yi.add(&a.mul(xi));
        }
    }
}

pub fn scale_vec(v: &[Scalar], a: &Scalar) -> Vector {
    v.iter().map(|x| x.mul(a)).collect()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s = s.add(&x.mul(y));
        }
    }
    s
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: usize, cols: usize, rows_data: Vec<Vector>) -> Result<Matrix> {
        if rows_data.len() != rows || rows_data.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {rows}x{cols} array of rows"
            )));
        }
        Ok(Matrix { field, rows, cols, data: rows_data.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(field: Field, rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_vector(field: Field, rows: usize, cols: usize, v: Vector) -> Matrix {
        assert_eq!(v.len(), rows * cols, "vector length");
        Matrix { field, rows, cols, data: v }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major flattening.
    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_vector(self) -> Vector {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.data[j * t.cols + i] = x.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        let oc = o.cols;
        for i in 0..self.rows {
            let orow = &mut out.data[i * oc..(i + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                axpy(orow, a, &o.data[k * oc..(k + 1) * oc]);
            }
        }
        out
    }

    pub fn try_mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(self.mul(o))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows).map(|i| dot(self.field, self.row(i), v)).collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.rows, v.len(), "vector-matrix shape");
        let mut out = zero_vec(self.field, self.cols);
        for (i, a) in v.iter().enumerate() {
            axpy(&mut out, a, self.row(i));
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &o.data),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &o.data),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: scale_vec(&self.data, a) }
    }

    /// `self += a·o` in place.
    pub fn add_scaled(&mut self, a: &Scalar, o: &Matrix) {
        axpy(&mut self.data, a, &o.data);
    }

    pub fn trace(&self) -> Scalar {
        let mut s = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            s = s.add(self.get(i, i));
        }
        s
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows, "hstack rows");
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * m.cols + j] = self.get(i, j).clone();
            }
            for j in 0..o.cols {
                m.data[i * m.cols + self.cols + j] = o.get(i, j).clone();
            }
        }
        m
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                m.data[i * m.cols + jj] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn block(&self, r0: usize, rn: usize, c0: usize, cn: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rn, cn);
        for i in 0..rn {
            for j in 0..cn {
                m.data[i * cn + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn block_diag(field: Field, blocks: &[Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form. Pivots are taken column by column, using the
    /// first row (from the current one down) with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { matrix: m, pivots }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.data[r * cols + c].inv();
            if !inv.is_one() {
                for j in c..cols {
                    let x = &self.data[r * cols + j];
                    if !x.is_zero() {
                        self.data[r * cols + j] = x.mul(&inv);
                    }
                }
            }
            let nz: Vec<(usize, Scalar)> = (c..cols)
                .filter_map(|j| {
                    let x = &self.data[r * cols + j];
                    (!x.is_zero()).then(|| (j, x.clone()))
                })
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, x) in &nz {
                    let cell = &mut self.data[i * cols + j];
                    *cell = cell.sub(&f.mul(x));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right null space `{v : self·v = 0}`. Each basis vector has
    /// a 1 at its own free column and 0 at the other free columns.
    pub fn kernel(&self) -> Vec<Vector> {
        let Rref { matrix: r, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = zero_vec(self.field, self.cols);
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = r.get(i, f);
                if !x.is_zero() {
                    v[p] = x.neg();
                }
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let r = aug.rref();
        if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.matrix.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(xI - self)`, coefficients from degree 0 upward.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        // Similarity reduction to upper Hessenberg form.
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let t = h.get(m, m - 1).clone();
            for i in m + 1..n {
                let u = h.get(i, m - 1).div(&t);
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h.get(i, j).sub_mul(&u, h.get(m, j));
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = h.get(r, m).add(&u.mul(h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        let mut polys: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for m in 0..n {
            // (x - h_mm) p_m
            let pm = &polys[m];
            let mut next = zero_vec(f, m + 2);
            for (d, c) in pm.iter().enumerate() {
                next[d + 1] = next[d + 1].add(c);
                next[d] = next[d].sub(&c.mul(h.get(m, m)));
            }
            let mut prod = f.one();
            for i in (0..m).rev() {
                prod = prod.mul(h.get(i + 1, i));
                if prod.is_zero() {
                    break;
                }
                let coef = prod.mul(h.get(i, m));
                if coef.is_zero() {
                    continue;
                }
                for (d, c) in polys[i].iter().enumerate() {
                    next[d] = next[d].sub(&coef.mul(c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

/// All `X` with `A·X = B`.
pub fn solve_space(a: &Matrix, b: &Matrix) -> Result<AffineSpace> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "A has {} rows but B has {}",
            a.rows, b.rows
        )));
    }
    let f = a.field;
    let n = a.cols;
    let aug = a.hstack(b);
    let r = aug.rref();
    let consistent = r.pivots.iter().all(|&p| p < n);
    let particular = consistent.then(|| {
        let mut x = Matrix::zeros(f, n, b.cols);
        for (i, &p) in r.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.matrix.get(i, n + j).clone());
            }
        }
        x
    });
    let mut kernel_basis = Vec::new();
    for v in a.kernel() {
        for j in 0..b.cols {
            let mut k = Matrix::zeros(f, n, b.cols);
            for (i, x) in v.iter().enumerate() {
                k.set(i, j, x.clone());
            }
            kernel_basis.push(k);
        }
    }
    Ok(AffineSpace { particular, kernel_basis })
}

/// Whether `v` lies in the span of `s`.
pub fn in_span(field: Field, v: &[Scalar], s: &[Vector]) -> Result<bool> {
    if s.iter().any(|w| w.len() != v.len()) {
        return Err(Error::DimensionMismatch("vectors of unequal length".into()));
    }
    let mut e = super::Echelon::new(field, v.len());
    for w in s {
        e.insert(w.clone());
    }
    Ok(e.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: Vec<Vec<i64>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data = rows
            .into_iter()
            .map(|row| row.into_iter().map(|x| Field::Rational.int(x)).collect())
            .collect();
        Matrix::from_rows(Field::Rational, r, c, data).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Field::Rational, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        let z = Matrix::zeros(Field::Rational, 3, 3);
        assert_eq!(z.rref().rank(), 0);
        let m = q(vec![vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, q(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn solve_space_examples() {
        let b = q(vec![vec![3, -1], vec![0, 5]]);
        let s = solve_space(&Matrix::identity(Field::Rational, 2), &b).unwrap();
        assert_eq!(s.particular.unwrap(), b);
        assert!(s.kernel_basis.is_empty());
        let s = solve_space(&q(vec![vec![0]]), &q(vec![vec![1]])).unwrap();
        assert!(s.particular.is_none());
        let s = solve_space(&q(vec![vec![1, 1]]), &q(vec![vec![0]])).unwrap();
        assert_eq!(s.kernel_basis.len(), 1);
        assert!(solve_space(&q(vec![vec![1]]), &q(vec![vec![1], vec![2]])).is_err());
    }

    #[test]
    fn in_span_examples() {
        let f = Field::Rational;
        let e1 = vec![f.one(), f.zero()];
        let e2 = vec![f.zero(), f.one()];
        let e12 = vec![f.one(), f.one()];
        assert!(in_span(f, &zero_vec(f, 2), &[]).unwrap());
        assert!(in_span(f, &e1, &[e12, e2.clone()]).unwrap());
        assert!(!in_span(f, &e1, &[e2]).unwrap());
    }

    #[test]
    fn charpoly_and_inverse() {
        let m = q(vec![vec![2, 1, 0], vec![0, 2, 0], vec![1, 0, 3]]);
        let p = m.charpoly();
        // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
        let expect: Vec<Scalar> = [-12, 16, -7, 1].iter().map(|&c| Field::Rational.int(c)).collect();
        assert_eq!(p, expect);
        let inv = m.inverse().unwrap();
        assert!(inv.mul(&m).is_identity());
        assert!(q(vec![vec![1, 2], vec![2, 4]]).inverse().is_none());
    }
}
