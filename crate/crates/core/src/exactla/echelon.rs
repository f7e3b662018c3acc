use super::matrix::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Vector};
use super::scalar::{Field, Scalar};

/// Incrementally built echelon basis of a subspace of `F^len`.
///
/// Each stored row has a 1 in its pivot column and 0 in the pivot columns of
/// the rows stored before it. When tracking is on, every row also remembers
/// how it was combined from the vectors handed to [`Echelon::insert`].
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    len: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    combos: Option<Vec<Vector>>,
    inserted: usize,
}

impl Echelon {
    pub fn new(field: Field, len: usize) -> Self {
        Echelon { field, len, rows: Vec::new(), pivots: Vec::new(), combos: None, inserted: 0 }
    }

    pub fn tracking(field: Field, len: usize) -> Self {
        Echelon { combos: Some(Vec::new()), ..Echelon::new(field, len) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after clearing every pivot, with the coefficients used.
    pub fn reduce(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut r = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &c.neg(), row);
            }
            coeffs.push(c);
        }
        (r, coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v).0)
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.len, "echelon vector length");
        let idx = self.inserted;
        self.inserted += 1;
        let (mut r, coeffs) = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        if let Some(combos) = &mut self.combos {
            let mut c = unit_vec(self.field, idx + 1, idx);
            for (k, ck) in coeffs.iter().enumerate() {
                if !ck.is_zero() {
                    let mut prev = combos[k].clone();
                    prev.resize(idx + 1, self.field.zero());
                    axpy(&mut c, &ck.neg(), &prev);
                }
            }
            for x in c.iter_mut() {
                *x = x.mul(&inv);
            }
            combos.push(c);
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// Coefficients expressing `v` through the inserted vectors (tracking only).
    pub fn express(&self, v: &[Scalar]) -> Option<Vector> {
        let combos = self.combos.as_ref().expect("express needs a tracking echelon");
        let (r, coeffs) = self.reduce(v);
        if !is_zero_vec(&r) {
            return None;
        }
        let mut out = zero_vec(self.field, self.inserted);
        for (k, ck) in coeffs.iter().enumerate() {
            if !ck.is_zero() {
                let c = &combos[k];
                axpy(&mut out[..c.len()], ck, c);
            }
        }
        Some(out)
    }

    /// Fully reduced basis (each row is 0 at every other row's pivot).
    pub fn into_subspace(self) -> Subspace {
        Subspace::from_spanning(self.field, self.len, self.rows)
    }
}

/// A subspace with a basis in "unit at pivot" form: basis vector `j` is 1 at
/// `pivots[j]` and 0 at `pivots[l]` for `l != j`. Coordinates of a vector in
/// the subspace are then its entries at the pivot positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub field: Field,
    pub len: usize,
    pub basis: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, len: usize) -> Self {
        Subspace { field, len, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, len: usize) -> Self {
        Subspace {
            field,
            len,
            basis: (0..len).map(|i| unit_vec(field, len, i)).collect(),
            pivots: (0..len).collect(),
        }
    }

    /// Row-reduces a spanning set into canonical form.
    pub fn from_spanning(field: Field, len: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(field, len);
        }
        let m = Matrix::from_rows(field, vectors.len(), len, vectors).expect("spanning vectors");
        let r = m.rref();
        let k = r.rank();
        Subspace { field, len, basis: r.matrix.row_vectors().into_iter().take(k).collect(), pivots: r.pivots }
    }

    /// Uses a basis that is already in unit-at-pivot form.
    pub fn from_unit_basis(field: Field, len: usize, basis: Vec<Vector>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.len(), pivots.len());
        Subspace { field, len, basis, pivots }
    }

    /// The column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Subspace::from_spanning(m.field(), m.rows(), m.columns())
    }

    /// The null space of `m`.
    pub fn kernel_of(m: &Matrix) -> Self {
        let basis = m.kernel();
        let pivots = complement_indices(m.cols(), &m.rref().pivots);
        Subspace { field: m.field(), len: m.cols(), basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, v: &[Scalar]) -> Vector {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &c.neg(), b);
            }
        }
        is_zero_vec(&r)
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut v = zero_vec(self.field, self.len);
        for (b, c) in self.basis.iter().zip(coords) {
            axpy(&mut v, c, b);
        }
        v
    }

    /// Basis vectors as columns of a `len × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_cols(self.field, self.len, &self.basis)
    }

    /// Coordinates not used as pivots: the standard complement.
    pub fn complement(&self) -> Vec<usize> {
        complement_indices(self.len, &self.pivots)
    }

    /// Projection `F^len → F^len / self` in complement coordinates.
    pub fn quotient_matrix(&self) -> Matrix {
        let comp = self.complement();
        let mut m = Matrix::zeros(self.field, comp.len(), self.len);
        for (row, &c) in comp.iter().enumerate() {
            m.set(row, c, self.field.one());
            for (b, &p) in self.basis.iter().zip(&self.pivots) {
                let x = &b[c];
                if !x.is_zero() {
                    m.set(row, p, x.neg());
                }
            }
        }
        m
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Subspace::from_spanning(self.field, self.len, v)
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.dim() == 0 || o.dim() == 0 {
            return Subspace::zero(self.field, self.len);
        }
        // Solve a·S = b·O, i.e. [S | -O] (a, b) = 0.
        let s = self.basis_matrix();
        let om = o.basis_matrix().scale(&self.field.int(-1));
        let k = s.hstack(&om).kernel();
        let vecs = k.into_iter().map(|c| s.mul_vec(&c[..self.dim()])).collect();
        Subspace::from_spanning(self.field, self.len, vecs)
    }
}

pub fn complement_indices(n: usize, pivots: &[usize]) -> Vec<usize> {
    let mut used = vec![false; n];
    for &p in pivots {
        used[p] = true;
    }
    (0..n).filter(|&i| !used[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracking_expresses_in_inserted_vectors() {
        let f = Field::Rational;
        let a = vec![f.int(1), f.int(1), f.int(0)];
        let b = vec![f.int(0), f.int(1), f.int(1)];
        let mut e = Echelon::tracking(f, 3);
        assert!(e.insert(a.clone()));
        assert!(e.insert(b.clone()));
        assert!(!e.insert(vec![f.int(2), f.int(3), f.int(1)]));
        let target = vec![f.int(3), f.int(1), f.int(-2)];
        let c = e.express(&target).unwrap();
        let mut back = zero_vec(f, 3);
        axpy(&mut back, &c[0], &a);
        axpy(&mut back, &c[1], &b);
        assert_eq!(back, target);
        assert!(e.express(&[f.int(0), f.int(0), f.int(1)]).is_none());
    }

    #[test]
    fn subspace_quotient_and_intersection() {
        let f = Field::Rational;
        let s = Subspace::from_spanning(f, 3, vec![vec![f.int(1), f.int(2), f.int(0)]]);
        let q = s.quotient_matrix();
        assert_eq!(q.rows(), 2);
        assert!(is_zero_vec(&q.mul_vec(&s.basis[0])));
        let t = Subspace::from_spanning(f, 3, vec![vec![f.int(1), f.int(2), f.int(5)], vec![f.int(0), f.int(0), f.int(1)]]);
        assert_eq!(s.intersect(&t).dim(), 1);
        assert_eq!(s.sum(&t).dim(), 2);
    }
}
