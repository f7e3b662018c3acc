//! Krull–Schmidt decomposition by Fitting splitting, and add-membership.

use super::{direct_sum_modules, hom, regular, HomSpace, Module, Morphism};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{field_roots, Echelon, Field, Matrix, Scalar, Subspace};
use std::sync::Arc;

/// One isomorphism class of indecomposable summands.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub multiplicity: usize,
    /// One split inclusion into the decomposed module per copy.
    pub inclusions: Vec<Morphism>,
    /// Matching projections, `projections[i] ∘ inclusions[j] = δ_ij`.
    pub projections: Vec<Morphism>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: Module,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn num_indecomposables(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.multiplicity).collect()
    }

    /// Dimensions of the classes with multiplicities, sorted.
    pub fn signature(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.summands.iter().map(|s| (s.module.dim(), s.multiplicity)).collect();
        v.sort_unstable();
        v
    }

    /// The isomorphism `⊕ copies → M` assembled from the inclusions.
    pub fn witness(&self) -> Matrix {
        let f = self.module.field();
        let mut m = Matrix::zeros(f, self.module.dim(), 0);
        for s in &self.summands {
            for i in &s.inclusions {
                m = m.hstack(&i.matrix);
            }
        }
        m
    }

    pub fn is_basic(&self) -> bool {
        self.summands.iter().all(|s| s.multiplicity == 1)
    }
}

/// Order in which the endomorphism basis is searched for splitting elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DecomposeOptions {
    #[default]
    Natural,
    Reversed,
    Rotated(usize),
}

impl DecomposeOptions {
    fn order(&self, n: usize) -> Vec<usize> {
        match *self {
            DecomposeOptions::Natural => (0..n).collect(),
            DecomposeOptions::Reversed => (0..n).rev().collect(),
            DecomposeOptions::Rotated(k) => (0..n).map(|i| (i + k) % n.max(1)).collect(),
        }
    }
}

pub fn decompose(m: &Module) -> Result<Decomposition> {
    decompose_with(m, DecomposeOptions::Natural)
}

struct Part {
    module: Module,
    /// Columns span the part inside the original module.
    inclusion: Matrix,
}

pub fn decompose_with(m: &Module, opts: DecomposeOptions) -> Result<Decomposition> {
    let f = m.field();
    let mut done: Vec<Part> = Vec::new();
    let mut todo = vec![Part { module: m.clone(), inclusion: Matrix::identity(f, m.dim()) }];
    while let Some(part) = todo.pop() {
        if part.module.is_zero() {
            continue;
        }
        match split(&part.module, opts)? {
            None => done.push(part),
            Some((k, i)) => {
                for sub in [k, i] {
                    let module = part.module.restrict(&sub);
                    let inclusion = part.inclusion.mul(&sub.basis_matrix());
                    todo.push(Part { module, inclusion });
                }
            }
        }
    }
    done.reverse();
    let w = done.iter().fold(Matrix::zeros(f, m.dim(), 0), |acc, p| acc.hstack(&p.inclusion));
    let winv = w.inverse().ok_or_else(|| Error::DecompositionInconclusive("parts do not span".into()))?;
    let mut summands: Vec<Summand> = Vec::new();
    let mut off = 0;
    for p in done {
        let d = p.module.dim();
        let proj = winv.block(off, d, 0, m.dim());
        off += d;
        let incl = Morphism::unchecked(&p.module, m, p.inclusion);
        let pr = Morphism::unchecked(m, &p.module, proj);
        let mut placed = false;
        for s in summands.iter_mut() {
            if iso_indecomposable(&s.module, &p.module)? {
                // Re-express the new copy through the class representative.
                let (to_rep, from_rep) = iso_pair(&s.module, &p.module)?;
                s.inclusions.push(Morphism::unchecked(&s.module, m, incl.matrix.mul(&to_rep)));
                s.projections.push(Morphism::unchecked(m, &s.module, from_rep.mul(&pr.matrix)));
                s.multiplicity += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            summands.push(Summand { module: p.module.clone(), multiplicity: 1, inclusions: vec![incl], projections: vec![pr] });
        }
    }
    Ok(Decomposition { module: m.clone(), summands })
}

fn trace_radical_supported(field: Field, dim: usize) -> Result<()> {
    match field {
        Field::Rational => Ok(()),
        Field::Prime { p } if p as usize > dim => Ok(()),
        Field::Prime { p } => Err(Error::UnsupportedField(format!(
            "decomposition over GF({p}) needs the characteristic to exceed the module dimension {dim}"
        ))),
    }
}

/// `tr(F G)` without forming the product.
fn trace_product(a: &Matrix, b: &Matrix) -> Scalar {
    let f = a.field();
    let mut acc = f.zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if !x.is_zero() {
                let y = b.get(j, i);
                if !y.is_zero() {
                    acc = acc.add(&x.mul(y));
                }
            }
        }
    }
    acc
}

/// The radical of `End(M)` in coordinates of the Hom basis.
fn end_radical(e: &HomSpace) -> Subspace {
    let f = e.source.field();
    let h = e.dim();
    let b = e.basis();
    let mut g = Matrix::zeros(f, h, h);
    for i in 0..h {
        for j in i..h {
            let t = trace_product(&b[i], &b[j]);
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    Subspace::kernel_of(&g)
}

/// A basis of `rad End(M)` as matrices.
pub fn top_end_radical(m: &Module) -> Result<Vec<Matrix>> {
    trace_radical_supported(m.field(), m.dim())?;
    let e = hom(m, m)?;
    Ok(end_radical(&e).basis.iter().map(|c| e.combine(c)).collect())
}

/// Dimension of `End(M)/rad End(M)`.
pub fn top_end_dim(m: &Module) -> Result<usize> {
    trace_radical_supported(m.field(), m.dim())?;
    let e = hom(m, m)?;
    Ok(e.dim() - end_radical(&e).dim())
}

/// Writes `M = ker(g^k) ⊕ im(g^k)` for a splitting endomorphism, or `None`
/// when `End(M)` is local.
fn split(m: &Module, opts: DecomposeOptions) -> Result<Option<(Subspace, Subspace)>> {
    let f = m.field();
    trace_radical_supported(f, m.dim())?;
    let e = hom(m, m)?;
    let rad = end_radical(&e);
    if e.dim() - rad.dim() <= 1 {
        return Ok(None);
    }
    let order = opts.order(e.dim());
    let basis: Vec<&Matrix> = order.iter().map(|&i| &e.basis()[i]).collect();
    let nonrad: Vec<&Matrix> = basis.iter().copied().filter(|b| !rad.contains(&e.coords(b))).collect();
    let mut all_invertible = true;
    let mut rootless = false;
    let mut try_one = |c: &Matrix| -> Option<(Subspace, Subspace)> {
        if rad.contains(&e.coords(c)) {
            return None;
        }
        if !c.is_invertible() {
            all_invertible = false;
        }
        let roots = field_roots(f, &c.charpoly());
        if roots.is_empty() {
            rootless = true;
        }
        let mut roots = roots;
        roots.sort_by_key(|r| !r.is_zero());
        for lambda in roots {
            let mut g = c.clone();
            for i in 0..g.rows() {
                let v = g.get(i, i).sub(&lambda);
                g.set(i, i, v);
            }
            let mut pw = g.clone();
            let mut rk = pw.rank();
            loop {
                let next = pw.mul(&g);
                let r2 = next.rank();
                if r2 == rk {
                    break;
                }
                pw = next;
                rk = r2;
            }
            if rk > 0 && rk < m.dim() {
                return Some((Subspace::kernel_of(&pw), Subspace::column_space(&pw)));
            }
        }
        None
    };
    for c in &nonrad {
        if let Some(s) = try_one(c) {
            return Ok(Some(s));
        }
    }
    for a in &nonrad {
        for b in &nonrad {
            if let Some(s) = try_one(&a.mul(b)) {
                return Ok(Some(s));
            }
        }
    }
    let coeffs = [1i64, -1, 2, -2];
    for (i, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(i + 1) {
            for &k in &coeffs {
                let c = a.add(&b.scale(&f.int(k)));
                if let Some(s) = try_one(&c) {
                    return Ok(Some(s));
                }
            }
        }
    }
    let lim = basis.len().min(8);
    for i in 0..lim {
        for j in i + 1..lim {
            for l in j + 1..lim {
                for &k1 in &coeffs {
                    for &k2 in &coeffs {
                        let c = basis[i].add(&basis[j].scale(&f.int(k1))).add(&basis[l].scale(&f.int(k2)));
                        if let Some(s) = try_one(&c) {
                            return Ok(Some(s));
                        }
                    }
                }
            }
        }
    }
    if all_invertible && rootless {
        return Err(Error::NonSplitEnd);
    }
    Err(Error::DecompositionInconclusive(format!(
        "no splitting endomorphism found for a module of dimension {} with top of End of dimension {}",
        m.dim(),
        e.dim() - rad.dim()
    )))
}

/// Isomorphism test for indecomposable modules: some `g∘f` is invertible.
fn iso_indecomposable(x: &Module, y: &Module) -> Result<bool> {
    if x.dim() != y.dim() {
        return Ok(false);
    }
    Ok(iso_pair(x, y).is_ok())
}

/// For indecomposable `x ≅ y`, matrices `t : x → y` and `s : y → x` with `s t = id`.
fn iso_pair(x: &Module, y: &Module) -> Result<(Matrix, Matrix)> {
    // Non-isomorphisms between indecomposables form a subspace, so an
    // isomorphism exists iff some basis element is one.
    let xy = hom(x, y)?;
    for fm in xy.basis() {
        if let Some(inv) = fm.inverse() {
            return Ok((fm.clone(), inv));
        }
    }
    Err(Error::Inconclusive("not isomorphic".into()))
}

/// Split maps witnessing `X ∈ add(Y)`: `retraction ∘ section = id_X`
/// through `Y^copies`.
#[derive(Clone, Debug)]
pub struct AddWitness {
    pub copies: usize,
    pub section: Morphism,
    pub retraction: Morphism,
}

/// Whether `X` is a direct summand of some `Y^k`, with witnesses.
pub fn in_add(x: &Module, y: &Module) -> Result<Option<AddWitness>> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    let f = x.field();
    if x.is_zero() {
        let z = Module::zero(x.algebra());
        return Ok(Some(AddWitness {
            copies: 0,
            section: Morphism::zero(x, &z),
            retraction: Morphism::zero(&z, x),
        }));
    }
    if y.is_zero() {
        return Ok(None);
    }
    let xy = hom(x, y)?;
    let yx = hom(y, x)?;
    let id = Matrix::identity(f, x.dim());
    let mut ech = Echelon::tracking(f, x.dim() * x.dim());
    let mut pairs = Vec::new();
    'outer: for (a, g) in xy.basis().iter().enumerate() {
        for (b, h) in yx.basis().iter().enumerate() {
            let p = h.mul(g);
            pairs.push((a, b));
            if ech.insert(p.into_vector()) && ech.contains(id.as_slice()) {
                break 'outer;
            }
        }
    }
    let Some(coeffs) = ech.express(id.as_slice()) else {
        return Ok(None);
    };
    let used: Vec<usize> = (0..pairs.len()).filter(|&i| !coeffs[i].is_zero()).collect();
    let k = used.len();
    let mut sec = Matrix::zeros(f, 0, x.dim());
    let mut ret = Matrix::zeros(f, x.dim(), 0);
    for &i in &used {
        let (a, b) = pairs[i];
        sec = sec.vstack(&xy.basis()[a]);
        ret = ret.hstack(&yx.basis()[b].scale(&coeffs[i]));
    }
    let yk = direct_sum_modules(y.algebra(), &vec![y.clone(); k]);
    Ok(Some(AddWitness {
        copies: k,
        section: Morphism::unchecked(x, &yk, sec),
        retraction: Morphism::unchecked(&yk, x, ret),
    }))
}

/// Whether `X ∈ add(Y)`.
pub fn in_add_bool(x: &Module, y: &Module) -> Result<bool> {
    Ok(in_add(x, y)?.is_some())
}

/// `X ∈ add(Y)` decided from the two decompositions.
pub fn in_add_by_decomposition(x: &Module, y: &Module) -> Result<bool> {
    let dx = decompose(x)?;
    let dy = decompose(y)?;
    for s in &dx.summands {
        let mut found = false;
        for t in &dy.summands {
            if iso_indecomposable(&s.module, &t.module)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `M ≅ N`, via equal dimension and mutual add-membership.
pub fn iso(m: &Module, n: &Module) -> Result<bool> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(false);
    }
    Ok(in_add(m, n)?.is_some() && in_add(n, m)?.is_some())
}

/// Direct sum of one representative per isomorphism class of summands.
pub fn basic(m: &Module) -> Result<Module> {
    let d = decompose(m)?;
    if d.summands.is_empty() {
        return Ok(Module::zero(m.algebra()));
    }
    let reps: Vec<Module> = d.summands.iter().map(|s| s.module.clone()).collect();
    Ok(direct_sum_modules(m.algebra(), &reps))
}

/// Replaces the idempotents by a complete primitive orthogonal family read
/// off a decomposition of the regular module.
pub fn refine_idempotents(alg: &Arc<Algebra>) -> Result<Arc<Algebra>> {
    let reg = regular(alg);
    let d = decompose(&reg)?;
    let mut idem = Vec::new();
    for s in &d.summands {
        for (i, p) in s.inclusions.iter().zip(&s.projections) {
            idem.push(i.matrix.mul(&p.matrix).mul_vec(alg.unit()));
        }
    }
    alg.with_idempotents(idem)
}
