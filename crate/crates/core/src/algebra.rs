//! Finite-dimensional associative unital algebras given by structure constants.

use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vec, unit_vec, zero_vec, Echelon, Field, Matrix, Scalar, Subspace, Vector};
use crate::modrep::ModuleCore;
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

/// A finite-dimensional algebra with basis `b_0..b_{n-1}` and products
/// `b_i·b_j = Σ_k c_ijk b_k`, together with a complete list of orthogonal
/// primitive idempotents.
pub struct Algebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    constants: Vec<(usize, usize, usize, Scalar)>,
    unit: Vector,
    idempotents: Vec<Vector>,
    radical_given: Option<Vec<Vector>>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    fingerprint: u64,
    pub(crate) cache: AlgebraCache,
}

#[derive(Default)]
pub(crate) struct AlgebraCache {
    radical: OnceLock<Result<Subspace>>,
    opposite: OnceLock<Arc<Algebra>>,
    opposite_of: OnceLock<Weak<Algebra>>,
    proj_spaces: OnceLock<Vec<Subspace>>,
    inj_spaces: OnceLock<Vec<Subspace>>,
    classes: OnceLock<Result<Vec<usize>>>,
    pub(crate) regular: OnceLock<Arc<ModuleCore>>,
    pub(crate) dual_regular: OnceLock<Arc<ModuleCore>>,
    pub(crate) proj: OnceLock<Vec<Arc<ModuleCore>>>,
    pub(crate) inj: OnceLock<Vec<Arc<ModuleCore>>>,
    pub(crate) prinj: OnceLock<Result<Vec<bool>>>,
    generators: OnceLock<Vec<usize>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {}, {} idempotents, over {})", self.dim, self.idempotents.len(), self.field)
    }
}

/// `eAe` as an algebra of its own, with its basis expressed inside `A`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub algebra: Arc<Algebra>,
    /// Basis vectors of `eAe` (columns, in coordinates of `A`).
    pub embedding: Subspace,
    pub idempotent: Vector,
}

/// Outcome of [`Algebra::validate`].
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Algebra {
    /// Builds an algebra from its multiplication table. Entries with equal
    /// `(i, j, k)` are added together; shapes and idempotent identities are
    /// checked, full associativity is left to [`Algebra::validate`].
    pub fn new(
        field: Field,
        labels: Vec<String>,
        constants: Vec<(usize, usize, usize, Scalar)>,
        unit: Vector,
        idempotents: Vec<Vector>,
        radical: Option<Vec<Vector>>,
    ) -> Result<Arc<Algebra>> {
        let dim = labels.len();
        let bad = |m: String| Err(Error::InvalidAlgebra(m));
        if unit.len() != dim {
            return bad(format!("unit has length {} but the algebra has dimension {dim}", unit.len()));
        }
        let mut merged: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return bad(format!("structure constant index ({i},{j},{k}) out of range"));
            }
            if !field.contains(&c) {
                return bad(format!("structure constant {c} is not in {field}"));
            }
            let e = merged.entry((i, j, k)).or_insert_with(|| field.zero());
            *e = e.add(&c);
        }
        let constants: Vec<_> =
            merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j, k), c)| (i, j, k, c)).collect();
        for v in idempotents.iter().chain(radical.iter().flatten()).chain(std::iter::once(&unit)) {
            if v.len() != dim || !v.iter().all(|x| field.contains(x)) {
                return bad("vector of wrong length or field".into());
            }
        }
        let mut left = vec![Matrix::zeros(field, dim, dim); dim];
        let mut right = vec![Matrix::zeros(field, dim, dim); dim];
        for (i, j, k, c) in &constants {
            left[*i].set(*k, *j, c.clone());
            right[*j].set(*k, *i, c.clone());
        }
        let mut h = DefaultHasher::new();
        field.hash(&mut h);
        dim.hash(&mut h);
        constants.hash(&mut h);
        unit.hash(&mut h);
        idempotents.hash(&mut h);
        let fingerprint = h.finish();
        let a = Algebra {
            field,
            dim,
            labels,
            constants,
            unit,
            idempotents,
            radical_given: radical,
            left,
            right,
            fingerprint,
            cache: AlgebraCache::default(),
        };
        let um = a.left_mult(&a.unit);
        if !um.is_identity() || !a.right_mult(&a.unit).is_identity() {
            return bad("unit is not a two-sided identity".into());
        }
        let mut sum = zero_vec(field, dim);
        for (r, e) in a.idempotents.iter().enumerate() {
            for (s, f) in a.idempotents.iter().enumerate() {
                let p = a.multiply(e, f);
                let ok = if r == s { &p == e } else { is_zero_vec(&p) };
                if !ok {
                    return bad(format!("idempotents {r},{s} are not orthogonal idempotents"));
                }
            }
            axpy(&mut sum, &field.one(), e);
        }
        if sum != a.unit {
            return bad("idempotents do not sum to the unit".into());
        }
        Ok(Arc::new(a))
    }

    /// The product of `m` copies of the ground field.
    pub fn split_semisimple(field: Field, m: usize) -> Arc<Algebra> {
        let labels = (0..m).map(|i| format!("e{i}")).collect();
        let constants = (0..m).map(|i| (i, i, i, field.one())).collect();
        let unit = vec![field.one(); m];
        let idem = (0..m).map(|i| unit_vec(field, m, i)).collect();
        Algebra::new(field, labels, constants, unit, idem, Some(Vec::new())).expect("semisimple table")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &[(usize, usize, usize, Scalar)] {
        &self.constants
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vector] {
        &self.idempotents
    }

    pub fn num_idempotents(&self) -> usize {
        self.idempotents.len()
    }

    pub fn supplied_radical(&self) -> Option<&[Vector]> {
        self.radical_given.as_deref()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Whether two values describe the same algebra (identical tables).
    pub fn same_as(&self, o: &Algebra) -> bool {
        std::ptr::eq(self, o)
            || (self.fingerprint == o.fingerprint
                && self.dim == o.dim
                && self.constants == o.constants
                && self.idempotents == o.idempotents)
    }

    /// Left multiplication by `b_i`.
    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Right multiplication by `b_i`.
    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vec(self.field, self.dim, i)
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.dim);
        for (i, j, k, c) in &self.constants {
            let (a, b) = (&x[*i], &y[*j]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            out[*k] = out[*k].add(&a.mul(b).mul(c));
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                m.add_scaled(a, &self.left[i]);
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                m.add_scaled(a, &self.right[i]);
            }
        }
        m
    }

    /// Span of `{x·b·y : b basis}`.
    pub fn sandwich(&self, x: &[Scalar], y: &[Scalar]) -> Subspace {
        let m = self.left_mult(x).mul(&self.right_mult(y));
        Subspace::column_space(&m)
    }

    /// Jacobson radical: the structural one when supplied, otherwise the
    /// trace-form radical `{x : tr(L_{xy}) = 0 for all y}`, valid in characteristic
    /// zero or larger than the dimension.
    pub fn radical(&self) -> Result<&Subspace> {
        self.cache
            .radical
            .get_or_init(|| {
                if let Some(r) = &self.radical_given {
                    return Ok(Subspace::from_spanning(self.field, self.dim, r.clone()));
                }
                if matches!(self.field, Field::Prime { p } if p as usize <= self.dim) {
                    return Err(Error::UnsupportedField(format!(
                        "trace criterion for the radical is not valid over {}",
                        self.field
                    )));
                }
                let j = self.trace_radical();
                if !self.is_nilpotent(&j) {
                    return Err(Error::InvalidAlgebra("trace radical is not nilpotent".into()));
                }
                Ok(j)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn trace_radical(&self) -> Subspace {
        let traces: Vec<Scalar> = self.left.iter().map(Matrix::trace).collect();
        let mut g = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, j, k, c) in &self.constants {
            let t = &traces[*k];
            if !t.is_zero() {
                let v = g.get(*i, *j).add(&c.mul(t));
                g.set(*i, *j, v);
            }
        }
        Subspace::kernel_of(&g.transpose())
    }

    fn is_nilpotent(&self, j: &Subspace) -> bool {
        let mut power = j.clone();
        for _ in 0..=self.dim {
            if power.dim() == 0 {
                return true;
            }
            power = self.product_space(&power, j);
        }
        power.dim() == 0
    }

    /// Span of `{x·y : x ∈ u, y ∈ v}`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut e = Echelon::new(self.field, self.dim);
        for x in &u.basis {
            for y in &v.basis {
                e.insert(self.multiply(x, y));
            }
        }
        e.into_subspace()
    }

    /// The opposite algebra `b_i∘b_j := b_j·b_i`; applying this twice returns
    /// the original value while it is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.cache.opposite_of.get().and_then(Weak::upgrade) {
            return orig;
        }
        self.cache
            .opposite
            .get_or_init(|| {
                let constants = self.constants.iter().map(|(i, j, k, c)| (*j, *i, *k, c.clone())).collect();
                let radical = self.radical_given.clone().or_else(|| self.radical().ok().map(|s| s.basis.clone()));
                let op = Algebra::new(
                    self.field,
                    self.labels.clone(),
                    constants,
                    self.unit.clone(),
                    self.idempotents.clone(),
                    radical,
                )
                .expect("opposite of a valid table");
                let _ = op.cache.opposite_of.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// Indices of basis elements that generate `A` as an algebra (greedy, in basis order).
    pub fn generators(&self) -> &[usize] {
        self.cache.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut span = Echelon::new(self.field, self.dim);
            span.insert(self.unit.clone());
            for i in 0..self.dim {
                let b = self.basis_vector(i);
                if span.contains(&b) {
                    continue;
                }
                gens.push(i);
                // Close the span under right multiplication by the generators.
                let mut queue: Vec<Vector> = span.rows().to_vec();
                span.insert(b.clone());
                queue.push(b);
                while let Some(v) = queue.pop() {
                    for &g in &gens {
                        let w = self.right[g].mul_vec(&v);
                        if span.insert(w.clone()) {
                            queue.push(w);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Basis of `A·e_r` (the projective indecomposable at `r`).
    pub fn proj_space(&self, r: usize) -> &Subspace {
        &self.cache.proj_spaces.get_or_init(|| {
            self.idempotents.iter().map(|e| Subspace::column_space(&self.right_mult(e))).collect()
        })[r]
    }

    /// Basis of `e_r·A`.
    pub fn inj_space(&self, r: usize) -> &Subspace {
        &self.cache.inj_spaces.get_or_init(|| {
            self.idempotents.iter().map(|e| Subspace::column_space(&self.left_mult(e))).collect()
        })[r]
    }

    /// For each idempotent, the least index of an idempotent with isomorphic
    /// projective (`A e_r ≅ A e_s` iff `e_r A e_s ⊄ J`).
    pub fn classes(&self) -> Result<&[usize]> {
        self.cache
            .classes
            .get_or_init(|| {
                let j = self.radical()?;
                let m = self.idempotents.len();
                let mut rep: Vec<usize> = (0..m).collect();
                for r in 0..m {
                    for s in 0..r {
                        if rep[s] != s {
                            continue;
                        }
                        let full = self.sandwich(&self.idempotents[r], &self.idempotents[s]);
                        if full.dim() == 0 {
                            continue;
                        }
                        let rad = self.radical_sandwich(j, r, s);
                        if full.dim() > rad.dim() {
                            rep[r] = s;
                            break;
                        }
                    }
                }
                Ok(rep)
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    /// Indices of one idempotent per isomorphism class of simple modules.
    pub fn class_reps(&self) -> Result<Vec<usize>> {
        let c = self.classes()?;
        Ok((0..c.len()).filter(|&r| c[r] == r).collect())
    }

    fn radical_sandwich(&self, j: &Subspace, r: usize, s: usize) -> Subspace {
        let (er, es) = (&self.idempotents[r], &self.idempotents[s]);
        let lm = self.left_mult(er);
        let rm = self.right_mult(es);
        let vecs = j.basis.iter().map(|x| lm.mul_vec(&rm.mul_vec(x))).collect();
        Subspace::from_spanning(self.field, self.dim, vecs)
    }

    /// `dim e_r A e_c` for all pairs of idempotents.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let m = self.idempotents.len();
        let rights: Vec<Matrix> = self.idempotents.iter().map(|e| self.right_mult(e)).collect();
        (0..m)
            .map(|r| {
                let l = self.left_mult(&self.idempotents[r]);
                (0..m).map(|c| l.mul(&rights[c]).rank()).collect()
            })
            .collect()
    }

    /// The Cartan matrix under the simultaneous row/column permutation that
    /// makes it lexicographically largest, an invariant of the algebra up to
    /// relabelling its idempotents.
    pub fn canonical_cartan(&self) -> Vec<Vec<usize>> {
        canonical_form(&self.cartan_matrix())
    }

    /// Whether `e_r A e_r` is local, i.e. `e_r` is primitive.
    pub fn is_primitive(&self, e: &[Scalar]) -> Result<bool> {
        let j = self.radical()?;
        let full = self.sandwich(e, e);
        let lm = self.left_mult(e);
        let rm = self.right_mult(e);
        let rad = Subspace::from_spanning(self.field, self.dim, j.basis.iter().map(|x| lm.mul_vec(&rm.mul_vec(x))).collect());
        Ok(full.dim() == rad.dim() + 1)
    }

    /// The corner algebra `eAe`.
    pub fn corner(self: &Arc<Self>, e: &[Scalar]) -> Result<Corner> {
        if e.len() != self.dim || self.multiply(e, e) != e {
            return Err(Error::NotIdempotent);
        }
        let f = self.field;
        let emb = self.sandwich(e, e);
        let n = emb.dim();
        let mut constants = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let p = self.multiply(&emb.basis[a], &emb.basis[b]);
                for (k, c) in emb.coords(&p).into_iter().enumerate() {
                    if !c.is_zero() {
                        constants.push((a, b, k, c));
                    }
                }
            }
        }
        let unit = emb.coords(e);
        let mut idem = Vec::new();
        let mut covered = zero_vec(f, self.dim);
        for er in &self.idempotents {
            let p = self.multiply(e, er);
            if is_zero_vec(&p) {
                continue;
            }
            if &p != er {
                idem.clear();
                break;
            }
            axpy(&mut covered, &f.one(), er);
            idem.push(emb.coords(er));
        }
        let decomposed = covered.as_slice() == e;
        if !decomposed {
            idem = if n == 0 { Vec::new() } else { vec![unit.clone()] };
        }
        let radical = self.radical().ok().map(|j| {
            let lm = self.left_mult(e);
            let rm = self.right_mult(e);
            let s = Subspace::from_spanning(f, self.dim, j.basis.iter().map(|x| lm.mul_vec(&rm.mul_vec(x))).collect());
            s.basis.iter().map(|v| emb.coords(v)).collect()
        });
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let mut alg = Algebra::new(f, labels, constants, unit, idem, radical)?;
        if !decomposed && n > 0 {
            alg = crate::modrep::refine_idempotents(&alg)?;
        }
        Ok(Corner { algebra: alg, embedding: emb, idempotent: e.to_vec() })
    }

    /// Re-expresses the algebra in a new basis given by vectors in the old one.
    pub fn rebase(&self, basis: &[Vector], labels: Vec<String>) -> Result<Arc<Algebra>> {
        let n = self.dim;
        if basis.len() != n || labels.len() != n {
            return Err(Error::DimensionMismatch("rebase needs a full basis".into()));
        }
        let p = Matrix::from_cols(self.field, n, basis);
        let pinv = p.inverse().ok_or_else(|| Error::InvalidAlgebra("new basis is singular".into()))?;
        let mut constants = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let prod = pinv.mul_vec(&self.multiply(&basis[a], &basis[b]));
                for (k, c) in prod.into_iter().enumerate() {
                    if !c.is_zero() {
                        constants.push((a, b, k, c));
                    }
                }
            }
        }
        let conv = |v: &Vector| pinv.mul_vec(v);
        Algebra::new(
            self.field,
            labels,
            constants,
            conv(&self.unit),
            self.idempotents.iter().map(conv).collect(),
            self.radical_given.as_ref().map(|r| r.iter().map(conv).collect()),
        )
    }

    /// Same table with a different idempotent list.
    pub fn with_idempotents(&self, idempotents: Vec<Vector>) -> Result<Arc<Algebra>> {
        Algebra::new(
            self.field,
            self.labels.clone(),
            self.constants.clone(),
            self.unit.clone(),
            idempotents,
            self.radical_given.clone().or_else(|| self.radical().ok().map(|s| s.basis.clone())),
        )
    }

    /// Checks every algebra axiom and reports the failures found.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let f = self.field;
        let n = self.dim;
        'assoc: for i in 0..n {
            for j in 0..n {
                let lhs = self.left[i].mul(&self.left[j]);
                let mut rhs = Matrix::zeros(f, n, n);
                for (k, c) in self.left[i].col(j).iter().enumerate() {
                    if !c.is_zero() {
                        rhs.add_scaled(c, &self.left[k]);
                    }
                }
                if lhs != rhs {
                    let l = (0..n).find(|&l| lhs.col(l) != rhs.col(l)).unwrap_or(0);
                    rep.failures.push(format!(
                        "associativity fails: b{i}·(b{j}·b{l}) != (b{i}·b{j})·b{l}"
                    ));
                    if rep.failures.len() >= 10 {
                        break 'assoc;
                    }
                }
            }
        }
        if !self.left_mult(&self.unit).is_identity() || !self.right_mult(&self.unit).is_identity() {
            rep.failures.push("unit is not a two-sided identity".into());
        }
        let mut sum = zero_vec(f, n);
        for (r, e) in self.idempotents.iter().enumerate() {
            axpy(&mut sum, &f.one(), e);
            for (s, g) in self.idempotents.iter().enumerate() {
                let p = self.multiply(e, g);
                if r == s && &p != e {
                    rep.failures.push(format!("e{r} is not idempotent"));
                }
                if r != s && !is_zero_vec(&p) {
                    rep.failures.push(format!("e{r}·e{s} != 0"));
                }
            }
        }
        if sum != self.unit {
            rep.failures.push("idempotents do not sum to the unit".into());
        }
        match self.radical() {
            Ok(j) => {
                for (r, e) in self.idempotents.iter().enumerate() {
                    if !self.is_primitive(e).unwrap_or(false) {
                        rep.failures.push(format!("e{r} is not primitive"));
                    }
                }
                if let Some(given) = &self.radical_given {
                    self.check_supplied_radical(given, j, &mut rep);
                }
            }
            Err(e) => rep.notes.push(format!("radical unavailable, primitivity unchecked: {e}")),
        }
        rep
    }

    fn check_supplied_radical(&self, given: &[Vector], j: &Subspace, rep: &mut ValidationReport) {
        let f = self.field;
        for x in given {
            for i in 0..self.dim {
                let b = self.basis_vector(i);
                if !j.contains(&self.multiply(&b, x)) || !j.contains(&self.multiply(x, &b)) {
                    rep.failures.push("supplied radical is not a two-sided ideal".into());
                    return;
                }
            }
        }
        if !self.is_nilpotent(j) {
            rep.failures.push("supplied radical is not nilpotent".into());
            return;
        }
        if f == Field::Rational {
            if self.trace_radical().dim() != j.dim() {
                rep.failures.push("supplied radical differs from the trace radical".into());
            }
        } else if let Ok(classes) = self.classes() {
            let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
            for &c in classes {
                *sizes.entry(c).or_default() += 1;
            }
            let semisimple: usize = sizes.values().map(|s| s * s).sum();
            if self.dim - j.dim() != semisimple {
                rep.failures.push("quotient by the supplied radical is not split semisimple".into());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers() -> Arc<Algebra> {
        // k[x]/(x^2)
        let f = Field::Rational;
        Algebra::new(
            f,
            vec!["1".into(), "x".into()],
            vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())],
            vec![f.one(), f.zero()],
            vec![vec![f.one(), f.zero()]],
            None,
        )
        .unwrap()
    }

    #[test]
    fn ground_field_is_valid() {
        let k = Algebra::split_semisimple(Field::Rational, 1);
        assert!(k.validate().is_valid());
        assert_eq!(k.cartan_matrix(), vec![vec![1]]);
    }

    #[test]
    fn semisimple_radical_and_cartan() {
        let a = Algebra::split_semisimple(Field::Rational, 2);
        assert_eq!(a.radical().unwrap().dim(), 0);
        assert_eq!(a.cartan_matrix(), vec![vec![1, 0], vec![0, 1]]);
        let fresh = Algebra::new(
            Field::Rational,
            a.labels().to_vec(),
            a.constants().to_vec(),
            a.unit().clone(),
            a.idempotents().to_vec(),
            None,
        )
        .unwrap();
        assert_eq!(fresh.radical().unwrap().dim(), 0);
    }

    #[test]
    fn trace_radical_of_dual_numbers() {
        let a = dual_numbers();
        assert_eq!(a.radical().unwrap().dim(), 1);
        assert!(a.validate().is_valid());
        let op = a.opposite();
        assert!(op.same_as(&a));
        assert!(Arc::ptr_eq(&op.opposite(), &a));
    }

    #[test]
    fn broken_associativity_is_reported() {
        let f = Field::Rational;
        // basis 1, x, y with x·x = y but x·y = y: (x·x)·x = y·x = 0 != x·(x·x) = x·y = y
        let a = Algebra::new(
            f,
            vec!["1".into(), "x".into(), "y".into()],
            vec![
                (0, 0, 0, f.one()),
                (0, 1, 1, f.one()),
                (1, 0, 1, f.one()),
                (0, 2, 2, f.one()),
                (2, 0, 2, f.one()),
                (1, 1, 2, f.one()),
                (1, 2, 2, f.one()),
            ],
            vec![f.one(), f.zero(), f.zero()],
            vec![vec![f.one(), f.zero(), f.zero()]],
            Some(vec![vec![f.zero(), f.one(), f.zero()], vec![f.zero(), f.zero(), f.one()]]),
        )
        .unwrap();
        let rep = a.validate();
        assert!(rep.failures.iter().any(|m| m.contains("associativity")));
    }

    #[test]
    fn small_characteristic_needs_structural_radical() {
        let f = Field::prime(2).unwrap();
        let a = Algebra::new(
            f,
            vec!["1".into(), "x".into()],
            vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())],
            vec![f.one(), f.zero()],
            vec![vec![f.one(), f.zero()]],
            None,
        )
        .unwrap();
        assert!(matches!(a.radical(), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn corners() {
        let a = dual_numbers();
        let c = a.corner(a.unit()).unwrap();
        assert_eq!(c.algebra.dim(), 2);
        let z = a.corner(&zero_vec(Field::Rational, 2)).unwrap();
        assert_eq!(z.algebra.dim(), 0);
        assert!(matches!(a.corner(&[Field::Rational.zero(), Field::Rational.one()]), Err(Error::NotIdempotent)));
    }
}

/// Lexicographically largest `[c[p(i)][p(j)]]` over all permutations `p`.
/// The search is exhaustive, so matrices above 8×8 are returned unchanged.
pub fn canonical_form(c: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn go(c: &[Vec<usize>], chosen: &mut Vec<usize>, best: &mut Option<Vec<Vec<usize>>>) {
        let n = c.len();
        if chosen.len() == n {
            let m: Vec<Vec<usize>> = chosen.iter().map(|&i| chosen.iter().map(|&j| c[i][j]).collect()).collect();
            if best.as_ref().map_or(true, |b| m > *b) {
                *best = Some(m);
            }
            return;
        }
        for v in 0..n {
            if !chosen.contains(&v) {
                chosen.push(v);
                go(c, chosen, best);
                chosen.pop();
            }
        }
    }
    if c.len() > 8 {
        return c.to_vec();
    }
    let mut best = None;
    go(c, &mut Vec::new(), &mut best);
    best.unwrap_or_default()
}
