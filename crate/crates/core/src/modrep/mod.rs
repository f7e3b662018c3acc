//! Finite-dimensional left modules, morphisms, Hom spaces and the structural
//! operations built on them.

mod decompose;
mod functors;

pub use decompose::{
    basic, decompose, decompose_with, in_add, in_add_bool, in_add_by_decomposition, top_end_dim, top_end_radical, iso, refine_idempotents, AddWitness,
    DecomposeOptions, Decomposition, Summand,
};
pub use functors::{
    dual, dual_morphism, nakayama, nakayama_inv, nakayama_inv_morphism, nakayama_morphism, tau_inv, transpose,
};

use crate::algebra::{Algebra, Corner};
use crate::error::{Error, Result};
use crate::exactla::{
    axpy, is_zero_vec, zero_vec, Echelon, Field, Matrix, Scalar, Subspace, Vector,
};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Action data of a module, independent of the algebra handle so that
/// algebras can cache their standard modules without reference cycles.
pub struct ModuleCore {
    dim: usize,
    action: Vec<Matrix>,
    cache: ModuleCache,
}

#[derive(Default)]
struct ModuleCache {
    slots: OnceLock<Vec<Subspace>>,
    radical: OnceLock<Result<Subspace>>,
    socle: OnceLock<Result<Subspace>>,
    presentation: OnceLock<Result<Arc<Presentation>>>,
}

/// A projective presentation `P1 → P0 → M → 0` with `P0 = ⊕ A e_{tops[i]}`.
pub(crate) struct Presentation {
    pub tops: Vec<usize>,
    pub p0_dim: usize,
    pub cover: Matrix,
    pub section: Matrix,
    pub kernel: Subspace,
    pub rel_tops: Vec<usize>,
    /// `relations[j][i]` is the `i`-th component (an element of `A e_{tops[i]}`) of relation `j`.
    pub relations: Vec<Vec<Vector>>,
}

/// A left module given by one action matrix per basis element of its algebra
/// (column-vector convention).
#[derive(Clone)]
pub struct Module {
    algebra: Arc<Algebra>,
    core: Arc<ModuleCore>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over {:?})", self.dim(), self.algebra)
    }
}

impl ModuleCore {
    pub(crate) fn new(dim: usize, action: Vec<Matrix>) -> Arc<ModuleCore> {
        Arc::new(ModuleCore { dim, action, cache: ModuleCache::default() })
    }
}

impl Module {
    /// A module from its action matrices. Shapes, field and the unit are
    /// checked; [`Module::validate`] checks the full module axiom.
    pub fn new(algebra: &Arc<Algebra>, action: Vec<Matrix>) -> Result<Module> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != algebra.field()) {
            return Err(Error::InvalidModule("action matrices must be square of equal size over the algebra field".into()));
        }
        let m = Module::from_parts(algebra, dim, action);
        if !m.act(algebra.unit()).is_identity() {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: &Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Module {
        Module { algebra: algebra.clone(), core: ModuleCore::new(dim, action) }
    }

    pub(crate) fn from_core(algebra: &Arc<Algebra>, core: &Arc<ModuleCore>) -> Module {
        Module { algebra: algebra.clone(), core: core.clone() }
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Module {
        let f = algebra.field();
        Module::from_parts(algebra, 0, vec![Matrix::zeros(f, 0, 0); algebra.dim()])
    }

    /// Checks `ρ(b_i)ρ(b_j) = Σ_k c_ijk ρ(b_k)` on all generator pairs.
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        if !self.act(a.unit()).is_identity() {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for &j in a.generators() {
                let lhs = self.action(i).mul(self.action(j));
                let rhs = self.act(&a.left(i).col(j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!("module axiom fails for basis pair ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.core.dim
    }

    pub fn is_zero(&self) -> bool {
        self.core.dim == 0
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.core.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.core.action
    }

    /// `ρ(a)` for an algebra element `a`.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, self.action(i));
            }
        }
        m
    }

    /// `ρ(a)·v`.
    pub fn act_vec(&self, a: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field(), self.dim());
        if is_zero_vec(v) {
            return out;
        }
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.action(i).mul_vec(v));
            }
        }
        out
    }

    pub fn same_algebra(&self, o: &Module) -> bool {
        self.algebra.same_as(&o.algebra)
    }

    fn check_same(&self, o: &Module) -> Result<()> {
        if self.same_algebra(o) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `e_r M` for the `r`-th idempotent.
    pub fn slot(&self, r: usize) -> &Subspace {
        &self.core.cache.slots.get_or_init(|| {
            self.algebra.idempotents().iter().map(|e| Subspace::column_space(&self.act(e))).collect()
        })[r]
    }

    /// `rad(A)·M`.
    pub fn radical_space(&self) -> Result<&Subspace> {
        self.core
            .cache
            .radical
            .get_or_init(|| {
                let j = self.algebra.radical().map_err(|_| Error::RadicalUnavailable)?;
                let f = self.field();
                let mut e = Echelon::new(f, self.dim());
                for x in &j.basis {
                    let m = self.act(x);
                    for v in m.columns() {
                        e.insert(v);
                        if e.rank() == self.dim() {
                            break;
                        }
                    }
                }
                Ok(e.into_subspace())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `{m : rad(A)·m = 0}`.
    pub fn socle_space(&self) -> Result<&Subspace> {
        self.core
            .cache
            .socle
            .get_or_init(|| {
                let j = self.algebra.radical().map_err(|_| Error::RadicalUnavailable)?;
                let f = self.field();
                let mut stacked = Matrix::zeros(f, 0, self.dim());
                for x in &j.basis {
                    stacked = stacked.vstack(&self.act(x));
                }
                Ok(if j.dim() == 0 { Subspace::full(f, self.dim()) } else { Subspace::kernel_of(&stacked) })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Lifts of a basis of the top, one list per class representative:
    /// `(r, v)` with `v ∈ e_r M` independent modulo `rad M`.
    pub fn top_generators(&self) -> Result<Vec<(usize, Vector)>> {
        let rad = self.radical_space()?;
        let reps = self.algebra.class_reps()?;
        let mut out = Vec::new();
        for r in reps {
            let er = self.act(&self.algebra.idempotents()[r]);
            let slot = self.slot(r);
            let mut e = Echelon::new(self.field(), self.dim());
            for v in &rad.basis {
                e.insert(er.mul_vec(v));
            }
            for v in &slot.basis {
                if e.insert(v.clone()) {
                    out.push((r, v.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Restriction of the action to an invariant subspace (in its pivot coordinates).
    pub fn restrict(&self, u: &Subspace) -> Module {
        let b = u.basis_matrix();
        let action = self.actions().iter().map(|m| m.mul(&b).select_rows(&u.pivots)).collect();
        Module::from_parts(&self.algebra, u.dim(), action)
    }

    /// Quotient by an invariant subspace, in complement coordinates, with the projection.
    pub fn quotient(&self, u: &Subspace) -> (Module, Matrix) {
        let q = u.quotient_matrix();
        let comp = u.complement();
        let action = self.actions().iter().map(|m| q.mul(m).select_cols(&comp)).collect();
        (Module::from_parts(&self.algebra, comp.len(), action), q)
    }

    pub(crate) fn presentation(&self) -> Result<Arc<Presentation>> {
        self.core
            .cache
            .presentation
            .get_or_init(|| build_presentation(self).map(Arc::new))
            .clone()
    }

    /// Top classes (representative idempotent indices) of the projective cover, with repetition.
    pub fn top_classes(&self) -> Result<Vec<usize>> {
        Ok(self.presentation()?.tops.clone())
    }

    /// Socle classes of the injective envelope, with repetition.
    pub fn socle_classes(&self) -> Result<Vec<usize>> {
        let soc = self.socle_space()?;
        let mut out = Vec::new();
        for r in self.algebra.class_reps()? {
            let er = self.act(&self.algebra.idempotents()[r]);
            let s = Subspace::from_spanning(self.field(), self.dim(), soc.basis.iter().map(|v| er.mul_vec(v)).collect());
            out.extend(std::iter::repeat(r).take(s.dim()));
        }
        Ok(out)
    }

    pub fn is_projective(&self) -> Result<bool> {
        Ok(self.presentation()?.kernel.dim() == 0)
    }

    pub fn is_injective(&self) -> Result<bool> {
        let socs = self.socle_classes()?;
        let total: usize = socs.iter().map(|&s| self.algebra.inj_space(s).dim()).sum();
        Ok(total == self.dim())
    }
}

fn build_presentation(m: &Module) -> Result<Presentation> {
    let alg = m.algebra().clone();
    let f = m.field();
    let gens = m.top_generators()?;
    let tops: Vec<usize> = gens.iter().map(|(r, _)| *r).collect();
    let gvecs: Vec<Vector> = gens.into_iter().map(|(_, v)| v).collect();
    let mut offsets = Vec::with_capacity(tops.len());
    let mut p0_dim = 0;
    for &r in &tops {
        offsets.push(p0_dim);
        p0_dim += alg.proj_space(r).dim();
    }
    let mut cols = Vec::with_capacity(p0_dim);
    for (i, &r) in tops.iter().enumerate() {
        for u in &alg.proj_space(r).basis {
            cols.push(m.act_vec(u, &gvecs[i]));
        }
    }
    let cover = Matrix::from_cols(f, m.dim(), &cols);
    let rr = cover.rref();
    if rr.rank() != m.dim() {
        return Err(Error::InvalidModule("top lifts do not generate the module".into()));
    }
    let sub = cover.select_cols(&rr.pivots);
    let inv = sub.inverse().expect("pivot columns are independent");
    let mut section = Matrix::zeros(f, p0_dim, m.dim());
    for (row, &p) in rr.pivots.iter().enumerate() {
        for c in 0..m.dim() {
            section.set(p, c, inv.get(row, c).clone());
        }
    }
    let kernel = Subspace::kernel_of(&cover);
    let (rel_tops, relations) = if kernel.dim() == 0 {
        (Vec::new(), Vec::new())
    } else {
        let p0 = direct_sum_modules(&alg, &tops.iter().map(|&r| proj(&alg, r)).collect::<Vec<_>>());
        let k = p0.restrict(&kernel);
        let kg = k.top_generators()?;
        let mut rel_tops = Vec::new();
        let mut relations = Vec::new();
        for (s, v) in kg {
            let x = kernel.combine(&v);
            let comps = tops
                .iter()
                .enumerate()
                .map(|(i, &r)| {
                    let ps = alg.proj_space(r);
                    ps.combine(&x[offsets[i]..offsets[i] + ps.dim()])
                })
                .collect();
            rel_tops.push(s);
            relations.push(comps);
        }
        (rel_tops, relations)
    };
    Ok(Presentation { tops, p0_dim, cover, section, kernel, rel_tops, relations })
}

/// The regular module `_A A`.
pub fn regular(a: &Arc<Algebra>) -> Module {
    let core = a.cache.regular.get_or_init(|| ModuleCore::new(a.dim(), (0..a.dim()).map(|i| a.left(i).clone()).collect()));
    Module::from_core(a, core)
}

/// `D(A_A)`, the injective cogenerator.
pub fn dual_regular(a: &Arc<Algebra>) -> Module {
    let core = a
        .cache
        .dual_regular
        .get_or_init(|| ModuleCore::new(a.dim(), (0..a.dim()).map(|i| a.right(i).transpose()).collect()));
    Module::from_core(a, core)
}

/// `A e_r`.
pub fn proj(a: &Arc<Algebra>, r: usize) -> Module {
    let cores = a.cache.proj.get_or_init(|| {
        (0..a.num_idempotents())
            .map(|r| {
                let u = a.proj_space(r);
                let b = u.basis_matrix();
                let action = (0..a.dim()).map(|i| a.left(i).mul(&b).select_rows(&u.pivots)).collect();
                ModuleCore::new(u.dim(), action)
            })
            .collect()
    });
    Module::from_core(a, &cores[r])
}

/// `D(e_r A)`.
pub fn inj(a: &Arc<Algebra>, r: usize) -> Module {
    let cores = a.cache.inj.get_or_init(|| {
        (0..a.num_idempotents())
            .map(|r| {
                let u = a.inj_space(r);
                let b = u.basis_matrix();
                let action = (0..a.dim()).map(|i| a.right(i).mul(&b).select_rows(&u.pivots).transpose()).collect();
                ModuleCore::new(u.dim(), action)
            })
            .collect()
    });
    Module::from_core(a, &cores[r])
}

pub fn try_proj(a: &Arc<Algebra>, r: usize) -> Result<Module> {
    if r >= a.num_idempotents() {
        return Err(Error::IndexOutOfRange(r));
    }
    Ok(proj(a, r))
}

pub fn try_inj(a: &Arc<Algebra>, r: usize) -> Result<Module> {
    if r >= a.num_idempotents() {
        return Err(Error::IndexOutOfRange(r));
    }
    Ok(inj(a, r))
}

/// A module homomorphism with matrix `target.dim × source.dim`.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

impl Morphism {
    /// Checks shape and `F·ρ_src(b) = ρ_tgt(b)·F` on algebra generators.
    pub fn new(source: &Module, target: &Module, matrix: Matrix) -> Result<Morphism> {
        source.check_same(target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        for &g in source.algebra().generators() {
            if matrix.mul(source.action(g)) != target.action(g).mul(&matrix) {
                return Err(Error::NotAMorphism);
            }
        }
        Ok(Morphism::unchecked(source, target, matrix))
    }

    pub(crate) fn unchecked(source: &Module, target: &Module, matrix: Matrix) -> Morphism {
        Morphism { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn identity(m: &Module) -> Morphism {
        Morphism::unchecked(m, m, Matrix::identity(m.field(), m.dim()))
    }

    pub fn zero(m: &Module, n: &Module) -> Morphism {
        Morphism::unchecked(m, n, Matrix::zeros(m.field(), n.dim(), m.dim()))
    }

    /// `self` followed by `g`, i.e. `x ↦ g(self(x))`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        compose(self, g)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }
}

/// `f` then `g` (matrix `G·F`).
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.target.dim() != g.source.dim() || !f.target.same_algebra(&g.source) {
        return Err(Error::NotComposable);
    }
    Ok(Morphism::unchecked(&f.source, &g.target, g.matrix.mul(&f.matrix)))
}

/// Kernel of `f` with its inclusion.
pub fn kernel(f: &Morphism) -> (Module, Morphism) {
    let k = Subspace::kernel_of(&f.matrix);
    let m = f.source.restrict(&k);
    let incl = Morphism::unchecked(&m, &f.source, k.basis_matrix());
    (m, incl)
}

/// Cokernel of `f` with its projection (complement coordinates of the image).
pub fn cokernel(f: &Morphism) -> (Module, Morphism) {
    let im = Subspace::column_space(&f.matrix);
    let (q, p) = f.target.quotient(&im);
    let proj = Morphism::unchecked(&f.target, &q, p);
    (q, proj)
}

/// Image of `f` with the factorization `f = surj then incl`.
#[derive(Clone, Debug)]
pub struct Image {
    pub module: Module,
    pub surjection: Morphism,
    pub inclusion: Morphism,
}

pub fn image(f: &Morphism) -> Image {
    let im = Subspace::column_space(&f.matrix);
    let m = f.target.restrict(&im);
    let surj = Morphism::unchecked(&f.source, &m, f.matrix.select_rows(&im.pivots));
    let incl = Morphism::unchecked(&m, &f.target, im.basis_matrix());
    Image { module: m, surjection: surj, inclusion: incl }
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub(crate) fn direct_sum_modules(a: &Arc<Algebra>, mods: &[Module]) -> Module {
    if mods.len() == 1 {
        return mods[0].clone();
    }
    let f = a.field();
    let dim = mods.iter().map(Module::dim).sum();
    let action = (0..a.dim())
        .map(|i| Matrix::block_diag(f, &mods.iter().map(|m| m.action(i).clone()).collect::<Vec<_>>()))
        .collect();
    Module::from_parts(a, dim, action)
}

/// `⊕ mods`; an empty list needs the algebra, so it is rejected.
pub fn direct_sum(mods: &[Module]) -> Result<DirectSum> {
    let first = mods.first().ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
    for m in mods {
        first.check_same(m)?;
    }
    let a = first.algebra().clone();
    let f = a.field();
    let module = if mods.len() == 1 { first.clone() } else { direct_sum_modules(&a, mods) };
    let total = module.dim();
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut off = 0;
    for m in mods {
        let mut inc = Matrix::zeros(f, total, m.dim());
        let mut pr = Matrix::zeros(f, m.dim(), total);
        for i in 0..m.dim() {
            inc.set(off + i, i, f.one());
            pr.set(i, off + i, f.one());
        }
        injections.push(Morphism::unchecked(m, &module, inc));
        projections.push(Morphism::unchecked(&module, m, pr));
        off += m.dim();
    }
    Ok(DirectSum { module, injections, projections })
}

/// `M^k`.
pub fn power(m: &Module, k: usize) -> Module {
    if k == 0 {
        return Module::zero(m.algebra());
    }
    direct_sum_modules(m.algebra(), &vec![m.clone(); k])
}

/// Submodule generated by `gens` with its inclusion.
pub fn submodule_generated(m: &Module, gens: &[Vector]) -> Result<(Module, Morphism)> {
    if gens.iter().any(|g| g.len() != m.dim()) {
        return Err(Error::DimensionMismatch("generator length differs from module dimension".into()));
    }
    let mut e = Echelon::new(m.field(), m.dim());
    for g in gens {
        for a in m.actions() {
            e.insert(a.mul_vec(g));
            if e.rank() == m.dim() {
                break;
            }
        }
    }
    let u = e.into_subspace();
    let s = m.restrict(&u);
    let incl = Morphism::unchecked(&s, m, u.basis_matrix());
    Ok((s, incl))
}

/// A basis of `Hom_A(M, N)`, with coordinates taken at pivot entries of the
/// row-major flattened matrices.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    space: Subspace,
    basis: Vec<Matrix>,
}

impl HomSpace {
    fn from_spanning(source: &Module, target: &Module, mats: Vec<Matrix>) -> HomSpace {
        let len = source.dim() * target.dim();
        let f = source.field();
        let space = Subspace::from_spanning(f, len, mats.into_iter().map(Matrix::into_vector).collect());
        let basis = space.basis.iter().map(|v| Matrix::from_vector(f, target.dim(), source.dim(), v.clone())).collect();
        HomSpace { source: source.clone(), target: target.clone(), space, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn morphism(&self, i: usize) -> Morphism {
        Morphism::unchecked(&self.source, &self.target, self.basis[i].clone())
    }

    pub fn morphisms(&self) -> Vec<Morphism> {
        (0..self.dim()).map(|i| self.morphism(i)).collect()
    }

    /// Coordinates of a homomorphism matrix in this basis.
    pub fn coords(&self, m: &Matrix) -> Vector {
        self.space.coords(m.as_slice())
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(m.as_slice())
    }

    pub fn combine(&self, c: &[Scalar]) -> Matrix {
        Matrix::from_vector(self.source.field(), self.target.dim(), self.source.dim(), self.space.combine(c))
    }

    /// The subspace spanned by some homomorphisms, as a subspace of coordinates.
    pub fn span_of(&self, mats: &[Matrix]) -> Subspace {
        Subspace::from_spanning(self.source.field(), self.dim(), mats.iter().map(|m| self.coords(m)).collect())
    }
}

/// `Hom_A(M, N)` computed from a projective presentation of `M`; falls back
/// to solving the intertwining equations when the radical is unavailable.
pub fn hom(m: &Module, n: &Module) -> Result<HomSpace> {
    m.check_same(n)?;
    if m.is_zero() || n.is_zero() {
        return Ok(HomSpace::from_spanning(m, n, Vec::new()));
    }
    match m.presentation() {
        Ok(p) => Ok(hom_from_presentation(m, n, &p)),
        Err(Error::RadicalUnavailable) | Err(Error::UnsupportedField(_)) => hom_direct(m, n),
        Err(e) => Err(e),
    }
}

pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<Morphism>> {
    Ok(hom(m, n)?.morphisms())
}

fn hom_from_presentation(m: &Module, n: &Module, p: &Presentation) -> HomSpace {
    let a = m.algebra();
    let f = m.field();
    let slots: Vec<&Subspace> = p.tops.iter().map(|&r| n.slot(r)).collect();
    let mut unk_off = Vec::new();
    let mut nunk = 0;
    for s in &slots {
        unk_off.push(nunk);
        nunk += s.dim();
    }
    if nunk == 0 {
        return HomSpace::from_spanning(m, n, Vec::new());
    }
    let mut eq = Matrix::zeros(f, p.relations.len() * n.dim(), nunk);
    for (j, rel) in p.relations.iter().enumerate() {
        for (i, x) in rel.iter().enumerate() {
            if is_zero_vec(x) {
                continue;
            }
            let act = n.act(x);
            for (l, b) in slots[i].basis.iter().enumerate() {
                let col = act.mul_vec(b);
                for (row, v) in col.into_iter().enumerate() {
                    if !v.is_zero() {
                        eq.set(j * n.dim() + row, unk_off[i] + l, v);
                    }
                }
            }
        }
    }
    let sols = if p.relations.is_empty() { Subspace::full(f, nunk).basis } else { eq.kernel() };
    // images[i][q][l] = ρ_N(u_q) · (slot basis l), u_q the basis of A e_{tops[i]}
    let images: Vec<Vec<Vec<Vector>>> = p
        .tops
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            a.proj_space(r)
                .basis
                .iter()
                .map(|u| {
                    let act = n.act(u);
                    slots[i].basis.iter().map(|b| act.mul_vec(b)).collect()
                })
                .collect()
        })
        .collect();
    let mats = sols
        .into_iter()
        .map(|c| {
            let mut cols: Vec<Vector> = Vec::with_capacity(p.p0_dim);
            for (i, img) in images.iter().enumerate() {
                for per_u in img {
                    let mut v = zero_vec(f, n.dim());
                    for (l, w) in per_u.iter().enumerate() {
                        let coef = &c[unk_off[i] + l];
                        if !coef.is_zero() {
                            axpy(&mut v, coef, w);
                        }
                    }
                    cols.push(v);
                }
            }
            Matrix::from_cols(f, n.dim(), &cols).mul(&p.section)
        })
        .collect();
    HomSpace::from_spanning(m, n, mats)
}

/// `Hom_A(M, N)` by solving `F·ρ_M(g) = ρ_N(g)·F` for algebra generators `g`.
pub fn hom_direct(m: &Module, n: &Module) -> Result<HomSpace> {
    m.check_same(n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let gens = m.algebra().generators();
    let mut eq = Matrix::zeros(f, gens.len() * dm * dn, dm * dn);
    for (gi, &g) in gens.iter().enumerate() {
        let (rm, rn) = (m.action(g), n.action(g));
        for i in 0..dn {
            for j in 0..dm {
                let row = gi * dm * dn + i * dm + j;
                // (F ρ_M)_{ij} = Σ_k F_{ik} ρM_{kj}
                for k in 0..dm {
                    let x = rm.get(k, j);
                    if !x.is_zero() {
                        let cur = eq.get(row, i * dm + k).add(x);
                        eq.set(row, i * dm + k, cur);
                    }
                }
                // − (ρ_N F)_{ij} = − Σ_k ρN_{ik} F_{kj}
                for k in 0..dn {
                    let x = rn.get(i, k);
                    if !x.is_zero() {
                        let cur = eq.get(row, k * dm + j).sub(x);
                        eq.set(row, k * dm + j, cur);
                    }
                }
            }
        }
    }
    let mats = eq.kernel().into_iter().map(|v| Matrix::from_vector(f, dn, dm, v)).collect();
    Ok(HomSpace::from_spanning(m, n, mats))
}

/// `rad(A)·M` with its inclusion.
pub fn radical_of(m: &Module) -> Result<(Module, Morphism)> {
    let u = m.radical_space()?;
    let r = m.restrict(u);
    let incl = Morphism::unchecked(&r, m, u.basis_matrix());
    Ok((r, incl))
}

/// `M / rad(A)M` with its projection.
pub fn top(m: &Module) -> Result<(Module, Morphism)> {
    let u = m.radical_space()?;
    let (q, p) = m.quotient(u);
    let pr = Morphism::unchecked(m, &q, p);
    Ok((q, pr))
}

pub fn socle(m: &Module) -> Result<(Module, Morphism)> {
    let u = m.socle_space()?;
    let s = m.restrict(u);
    let incl = Morphism::unchecked(&s, m, u.basis_matrix());
    Ok((s, incl))
}

/// Projective cover `⊕ A e_{r_i} → M`.
pub fn projective_cover(m: &Module) -> Result<Morphism> {
    let p = m.presentation()?;
    let a = m.algebra();
    let src = direct_sum_modules(a, &p.tops.iter().map(|&r| proj(a, r)).collect::<Vec<_>>());
    let src = if p.tops.is_empty() { Module::zero(a) } else { src };
    Ok(Morphism::unchecked(&src, m, p.cover.clone()))
}

/// Injective envelope `M → ⊕ D(e_{s_i} A)`, built from functionals dual to
/// a basis of each `e_s soc(M)`.
pub fn injective_envelope(m: &Module) -> Result<Morphism> {
    let a = m.algebra();
    let f = m.field();
    let soc = m.socle_space()?;
    let mut targets = Vec::new();
    let mut rows: Vec<Vector> = Vec::new();
    for s in a.class_reps()? {
        let es = m.act(&a.idempotents()[s]);
        let part = Subspace::from_spanning(f, m.dim(), soc.basis.iter().map(|v| es.mul_vec(v)).collect());
        if part.dim() == 0 {
            continue;
        }
        let acts: Vec<Matrix> = a.inj_space(s).basis.iter().map(|u| m.act(u)).collect();
        for &piv in &part.pivots {
            targets.push(inj(a, s));
            for act in &acts {
                rows.push(act.row(piv).to_vec());
            }
        }
    }
    let tgt = if targets.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &targets) };
    let mat = if rows.is_empty() {
        Matrix::zeros(f, 0, m.dim())
    } else {
        Matrix::from_rows(f, rows.len(), m.dim(), rows)?
    };
    debug_assert_eq!(mat.rank(), m.dim(), "envelope must be injective");
    Ok(Morphism::unchecked(m, &tgt, mat))
}

/// `Ω^k(M)`.
pub fn syzygy(m: &Module, k: usize) -> Result<Module> {
    let mut cur = m.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        let c = projective_cover(&cur)?;
        cur = kernel(&c).0;
    }
    Ok(cur)
}

/// `Ω^{-k}(M)`.
pub fn cosyzygy(m: &Module, k: usize) -> Result<Module> {
    let mut cur = m.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        let e = injective_envelope(&cur)?;
        cur = cokernel(&e).0;
    }
    Ok(cur)
}

impl Corner {
    /// `eX` as a module over `eAe`.
    pub fn transport(&self, x: &Module) -> Module {
        let u = Subspace::column_space(&x.act(&self.idempotent));
        let b = u.basis_matrix();
        let action = self
            .embedding
            .basis
            .iter()
            .map(|v| x.act(v).mul(&b).select_rows(&u.pivots))
            .collect();
        Module::from_parts(&self.algebra, u.dim(), action)
    }
}

/// Maps `X → Y` factoring through a projective module.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub hom: HomSpace,
    /// Basis of the factoring maps, in coordinates of `hom`.
    pub projective_part: Subspace,
}

impl StableHom {
    pub fn projective_dim(&self) -> usize {
        self.projective_part.dim()
    }

    pub fn stable_dim(&self) -> usize {
        self.hom.dim() - self.projective_part.dim()
    }

    pub fn projective_basis(&self) -> Vec<Matrix> {
        self.projective_part.basis.iter().map(|c| self.hom.combine(c)).collect()
    }
}

/// `P(X, Y)`: every map through a projective factors through the cover of `Y`.
pub fn stable_hom_proj(x: &Module, y: &Module) -> Result<StableHom> {
    let h = hom(x, y)?;
    if y.is_zero() || x.is_zero() {
        let f = x.field();
        return Ok(StableHom { projective_part: Subspace::zero(f, h.dim()), hom: h });
    }
    let cover = projective_cover(y)?;
    let through = hom(x, &cover.source)?;
    let mats: Vec<Matrix> = through.basis().iter().map(|g| cover.matrix.mul(g)).collect();
    let projective_part = h.span_of(&mats);
    Ok(StableHom { hom: h, projective_part })
}

#[cfg(test)]
mod tests;
