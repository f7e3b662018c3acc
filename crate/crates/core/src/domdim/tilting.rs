//! Endomorphism algebras, tilting modules, hearts, gradients and the
//! canonical and BB constructions.

use super::{domdim_algebra, DomDimResult};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{zero_vec, Matrix, Subspace};
use crate::homalg::{approx_sequence_until, ext_dim, min_inj_resolution, min_proj_resolution, proj_dim, AddCat};
use crate::modrep::{
    cokernel, cosyzygy, decompose, direct_sum_modules, dual_regular, hom, inj, iso, nakayama,
    nakayama_inv_morphism, proj, projective_cover, regular, tau_inv, kernel, Module,
};
use std::sync::Arc;

/// An algebra of block matrices `(r, c, h)` with `h` in a chosen subspace of
/// `Hom(Z_r, Z_c)`, multiplied by `(r,c,h)·(c,c',h') = (r,c',h' ∘ h)`.
#[derive(Clone, Debug)]
pub struct BlockAlgebra {
    pub algebra: Arc<Algebra>,
    pub objects: Vec<Module>,
    /// `blocks[r][c]`: basis of the `(r,c)` block (matrices `dim Z_c × dim Z_r`).
    pub blocks: Vec<Vec<Vec<Matrix>>>,
    /// Index of the first basis element of block `(r,c)`.
    pub offsets: Vec<Vec<usize>>,
    /// Whether the block idempotents had to be refined to become primitive.
    pub refined: bool,
}

impl BlockAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `dim` of each block, the Cartan matrix indexed by the objects.
    pub fn block_dims(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|row| row.iter().map(Vec::len).collect()).collect()
    }

    /// The matrix of basis element `(r,c,t)` acting on `⊕ Z` as `ι_c h π_r`.
    fn action_on_sum(&self, r: usize, c: usize, t: usize, offs: &[usize], total: usize) -> Matrix {
        let f = self.algebra.field();
        let mut m = Matrix::zeros(f, total, total);
        m.set_block(offs[c], offs[r], &self.blocks[r][c][t]);
        m
    }
}

/// Builds the block algebra, checking that the blocks are closed under
/// composition and contain the identities.
pub fn block_algebra(objects: Vec<Module>, blocks: Vec<Vec<Vec<Matrix>>>) -> Result<BlockAlgebra> {
    let k = objects.len();
    if k == 0 {
        return Err(Error::InvalidAlgebra("block algebra without objects".into()));
    }
    let f = objects[0].field();
    let spaces: Vec<Vec<Subspace>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    let len = objects[r].dim() * objects[c].dim();
                    Subspace::from_spanning(f, len, blocks[r][c].iter().map(|m| m.as_slice().to_vec()).collect())
                })
                .collect()
        })
        .collect();
    let basis: Vec<Vec<Vec<Matrix>>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    spaces[r][c]
                        .basis
                        .iter()
                        .map(|v| Matrix::from_vector(f, objects[c].dim(), objects[r].dim(), v.clone()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut offsets = vec![vec![0; k]; k];
    let mut n = 0;
    let mut labels = Vec::new();
    for r in 0..k {
        for c in 0..k {
            offsets[r][c] = n;
            for t in 0..spaces[r][c].dim() {
                labels.push(format!("({r},{c},{t})"));
            }
            n += spaces[r][c].dim();
        }
    }
    let mut constants = Vec::new();
    for r in 0..k {
        for c in 0..k {
            for (t, h) in basis[r][c].iter().enumerate() {
                for c2 in 0..k {
                    for (t2, h2) in basis[c][c2].iter().enumerate() {
                        let p = h2.mul(h);
                        let sp = &spaces[r][c2];
                        if !sp.contains(p.as_slice()) {
                            return Err(Error::ClosureFailure(format!("product of blocks ({r},{c}) and ({c},{c2})")));
                        }
                        for (t3, x) in sp.coords(p.as_slice()).into_iter().enumerate() {
                            if !x.is_zero() {
                                constants.push((offsets[r][c] + t, offsets[c][c2] + t2, offsets[r][c2] + t3, x));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = zero_vec(f, n);
    let mut idem = Vec::new();
    for r in 0..k {
        let id = Matrix::identity(f, objects[r].dim());
        let sp = &spaces[r][r];
        if !sp.contains(id.as_slice()) {
            return Err(Error::ClosureFailure(format!("block ({r},{r}) misses the identity")));
        }
        let mut e = zero_vec(f, n);
        for (t, x) in sp.coords(id.as_slice()).into_iter().enumerate() {
            e[offsets[r][r] + t] = x.clone();
            unit[offsets[r][r] + t] = x;
        }
        idem.push(e);
    }
    let mut algebra = Algebra::new(f, labels, constants, unit, idem, None)?;
    let mut refined = false;
    let mut primitive = true;
    for e in algebra.idempotents() {
        if !algebra.is_primitive(e)? {
            primitive = false;
        }
    }
    if !primitive {
        algebra = crate::modrep::refine_idempotents(&algebra)?;
        refined = true;
    }
    Ok(BlockAlgebra { algebra, objects, blocks: basis, offsets, refined })
}

/// `End(Z_0 ⊕ … ⊕ Z_{k-1})` with one idempotent per listed module.
pub fn endo_algebra_of(mods: &[Module]) -> Result<BlockAlgebra> {
    let blocks = mods
        .iter()
        .map(|zr| mods.iter().map(|zc| Ok(hom(zr, zc)?.basis().to_vec())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    block_algebra(mods.to_vec(), blocks)
}

/// `End(M)` with one idempotent per indecomposable summand (counted with multiplicity).
pub fn endo_algebra(m: &Module) -> Result<BlockAlgebra> {
    let d = decompose(m)?;
    let mut parts = Vec::new();
    for s in &d.summands {
        for _ in 0..s.multiplicity {
            parts.push(s.module.clone());
        }
    }
    endo_algebra_of(&parts)
}

/// `⊕ Z` as a module over the opposite of the block algebra (a right module over it).
pub fn module_over_end_op(b: &BlockAlgebra) -> Module {
    let op = b.algebra.opposite();
    let mut offs = Vec::new();
    let mut total = 0;
    for z in &b.objects {
        offs.push(total);
        total += z.dim();
    }
    let k = b.objects.len();
    let mut action = Vec::with_capacity(b.dim());
    for r in 0..k {
        for c in 0..k {
            for t in 0..b.blocks[r][c].len() {
                action.push(b.action_on_sum(r, c, t, &offs, total));
            }
        }
    }
    Module::from_parts(&op, total, action)
}

/// `Hom_A(X, ⊕ Z)` as a module over the opposite of the block algebra.
pub fn hom_module_over_end(x: &Module, b: &BlockAlgebra) -> Result<Module> {
    let t = direct_sum_modules(x.algebra(), &b.objects);
    let h = hom(x, &t)?;
    let op = b.algebra.opposite();
    let f = x.field();
    let mut offs = Vec::new();
    let mut total = 0;
    for z in &b.objects {
        offs.push(total);
        total += z.dim();
    }
    let k = b.objects.len();
    let mut action = Vec::with_capacity(b.dim());
    for r in 0..k {
        for c in 0..k {
            for tt in 0..b.blocks[r][c].len() {
                let m = b.action_on_sum(r, c, tt, &offs, total);
                let cols: Vec<_> = h.basis().iter().map(|g| h.coords(&m.mul(g))).collect();
                action.push(Matrix::from_cols(f, h.dim(), &cols));
            }
        }
    }
    Ok(Module::from_parts(&op, h.dim(), action))
}

/// Why a module failed the tilting test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TiltingFailure {
    /// `Ext^degree(T, T)` has the given dimension.
    SelfExtension { degree: usize, dim: usize },
    /// The left approximation at this step of the coresolution of `A` is not injective.
    NotMono { step: usize },
    /// The coresolution of `A` did not end within `pd(T) + 1` terms.
    TooLong,
}

#[derive(Clone, Debug)]
pub struct TiltingReport {
    pub is_tilting: bool,
    pub pd: DomDimResult,
    pub selforth_checked_to: usize,
    /// `X_0, …, X_n` in `0 → A → X_0 → … → X_n → 0`.
    pub coresolution: Vec<Module>,
    pub failure: Option<TiltingFailure>,
}

/// Checks finite projective dimension, self-orthogonality and the
/// `add(T)`-coresolution of the regular module.
pub fn is_tilting(a: &Arc<Algebra>, t: &Module, cap: usize) -> Result<TiltingReport> {
    if !t.algebra().same_as(a) {
        return Err(Error::AlgebraMismatch);
    }
    let pd = proj_dim(t, cap)?;
    let Some(n) = pd.finite() else {
        return Err(Error::Inconclusive(format!("projective dimension exceeds the cap {cap}")));
    };
    let top = n.max(8);
    let mut report = TiltingReport { is_tilting: false, pd, selforth_checked_to: 0, coresolution: Vec::new(), failure: None };
    let mut syz = t.clone();
    for j in 1..=top {
        if j > 1 {
            syz = if syz.is_zero() { syz } else { kernel(&projective_cover(&syz)?).0 };
        }
        if syz.is_zero() || syz.is_projective()? {
            report.selforth_checked_to = top;
            break;
        }
        let d = ext_dim(&syz, t, 1)?;
        report.selforth_checked_to = j;
        if d != 0 {
            report.failure = Some(TiltingFailure::SelfExtension { degree: j, dim: d });
            return Ok(report);
        }
    }
    report.selforth_checked_to = top;
    let cat = AddCat::new(t)?;
    let mut cur = regular(a);
    for step in 0..=n {
        let ap = cat.left_approx(&cur)?;
        if !ap.morphism.is_injective() {
            report.failure = Some(TiltingFailure::NotMono { step });
            return Ok(report);
        }
        report.coresolution.push(ap.morphism.target.clone());
        cur = cokernel(&ap.morphism).0;
        if cur.is_zero() {
            report.is_tilting = true;
            return Ok(report);
        }
    }
    report.failure = Some(TiltingFailure::TooLong);
    Ok(report)
}

/// The heart: projective summands of `T` whose Nakayama image also lies in `add(T)`.
#[derive(Clone, Debug)]
pub struct Heart {
    pub module: Module,
    /// Idempotent class representatives `r` with `A e_r` in the heart.
    pub classes: Vec<usize>,
}

pub fn heart(a: &Arc<Algebra>, t: &Module) -> Result<Heart> {
    heart_in(a, &AddCat::new(t)?)
}

fn heart_in(a: &Arc<Algebra>, cat: &AddCat) -> Result<Heart> {
    let mut classes = Vec::new();
    for z in &cat.reps {
        if z.is_projective()? {
            let r = z.top_classes()?[0];
            if cat.index_of(&inj(a, r))?.is_some() && !classes.contains(&r) {
                classes.push(r);
            }
        }
    }
    classes.sort_unstable();
    let mods: Vec<Module> = classes.iter().map(|&r| proj(a, r)).collect();
    let module = if mods.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &mods) };
    Ok(Heart { module, classes })
}

/// Gradients of the indecomposable projectives and the global value.
#[derive(Clone, Debug)]
pub struct GradientReport {
    /// `(r, ∂_T(A e_r))` for each class representative.
    pub per_projective: Vec<(usize, DomDimResult)>,
    /// `∂(A, T) = min_i ∂_T(P_i) + i` over the minimal projective resolution of `T`.
    pub global: DomDimResult,
    pub heart_classes: Vec<usize>,
}

struct GradientCtx {
    cat: Arc<AddCat>,
    allowed: Vec<bool>,
    t: Module,
}

impl GradientCtx {
    fn new(a: &Arc<Algebra>, t: &Module) -> Result<(GradientCtx, Heart)> {
        let cat = Arc::new(AddCat::new(t)?);
        let h = heart_in(a, &cat)?;
        let mut allowed = Vec::with_capacity(cat.reps.len());
        for z in &cat.reps {
            let ok = z.is_injective()? && h.classes.contains(&z.socle_classes()?[0]);
            allowed.push(ok);
        }
        Ok((GradientCtx { cat, allowed, t: t.clone() }, h))
    }

    fn gradient(&self, x: &Module, cap: usize) -> Result<DomDimResult> {
        let nx = nakayama(x)?;
        let seq = approx_sequence_until(self.cat.clone(), &self.t, &nx, cap, |m| !AddCat::uses_only(m, &self.allowed))?;
        for (i, m) in seq.multiplicities.iter().enumerate() {
            if !AddCat::uses_only(m, &self.allowed) {
                return Ok(DomDimResult::Finite(i));
            }
        }
        Ok(if seq.complete { DomDimResult::Infinite } else { DomDimResult::AtLeast(cap) })
    }
}

/// `∂_T(X)` for a projective `X`: the first position where the minimal right
/// `add(T)`-approximation sequence of `ν X` leaves `add(ν E)`.
pub fn gradient(a: &Arc<Algebra>, t: &Module, x: &Module, cap: usize) -> Result<DomDimResult> {
    if !x.is_projective()? {
        return Err(Error::InvalidModule("the gradient is defined for projective modules".into()));
    }
    GradientCtx::new(a, t)?.0.gradient(x, cap)
}

pub fn global_gradient(a: &Arc<Algebra>, t: &Module, cap: usize) -> Result<GradientReport> {
    let (ctx, h) = GradientCtx::new(a, t)?;
    let mut per = Vec::new();
    for r in a.class_reps()? {
        per.push((r, ctx.gradient(&proj(a, r), cap)?));
    }
    let value = |r: usize| per.iter().find(|(s, _)| *s == r).map(|(_, v)| *v).expect("class representative");
    let res = min_proj_resolution(t, cap)?;
    let mut global = DomDimResult::Infinite;
    for (i, cls) in res.classes.iter().enumerate() {
        for &r in cls {
            global = global.min(value(r).plus(i));
        }
    }
    if !res.complete {
        global = global.min(DomDimResult::AtLeast(cap));
    }
    Ok(GradientReport { per_projective: per, global, heart_classes: h.classes })
}

/// Indecomposable summands of the basic canonical tilting module
/// `E_0 ⊕ Ω^{-i}(A)`: the distinct injectives of `E_0` first.
pub fn canonical_tilting_summands(a: &Arc<Algebra>, i: usize, cap: usize) -> Result<Vec<Module>> {
    if i == 0 {
        return Err(Error::OutOfRange("canonical tilting modules start at i = 1".into()));
    }
    let dm = domdim_algebra(a, cap.max(i))?;
    if !dm.at_least(i) {
        return Err(Error::OutOfRange(format!("dominant dimension {dm} is below {i}")));
    }
    let res = min_inj_resolution(&regular(a), i)?;
    let mut socs: Vec<usize> = res.classes[0].clone();
    socs.sort_unstable();
    socs.dedup();
    let mut parts: Vec<Module> = socs.into_iter().map(|s| inj(a, s)).collect();
    if let Some(om) = res.syzygies.get(i - 1) {
        if !om.is_zero() {
            parts.extend(decompose(om)?.summands.into_iter().map(|s| s.module));
        }
    }
    Ok(parts)
}

/// The basic canonical tilting module `T_i`.
pub fn canonical_tilting(a: &Arc<Algebra>, i: usize, cap: usize) -> Result<Module> {
    Ok(direct_sum_modules(a, &canonical_tilting_summands(a, i, cap)?))
}

/// Output of the BB-tilting construction.
#[derive(Clone, Debug)]
pub struct BbTilting {
    /// The two constructions of the non-projective summand agree.
    pub check: bool,
    pub module: Module,
    /// `⊕ A e_r` over the classes other than the one of `S`.
    pub complement: Module,
    /// `Coker(ν⁻ I_{n-1} → ν⁻ I_n)` from the injective resolution of `S`.
    pub summand: Module,
}

pub fn bb_tilting(a: &Arc<Algebra>, s: &Module, n: usize) -> Result<BbTilting> {
    if n == 0 {
        return Err(Error::OutOfRange("BB-tilting needs n ≥ 1".into()));
    }
    if s.is_zero() || s.radical_space()?.dim() != 0 || s.top_classes()?.len() != 1 {
        return Err(Error::InvalidModule("expected a simple module".into()));
    }
    if s.is_injective()? {
        return Err(Error::InvalidModule("the simple module is injective".into()));
    }
    let da = dual_regular(a);
    for i in 0..n {
        if ext_dim(&da, s, i)? != 0 || ext_dim(s, s, i + 1)? != 0 {
            return Err(Error::NotBB(i));
        }
    }
    let res = min_inj_resolution(s, n)?;
    let summand = if res.terms.len() > n {
        cokernel(&nakayama_inv_morphism(&res.maps[n])?).0
    } else {
        Module::zero(a)
    };
    let other = tau_inv(&cosyzygy(s, n - 1)?)?;
    let check = summand.dim() == other.dim() && (summand.is_zero() || iso(&summand, &other)?);
    let cls = s.top_classes()?[0];
    let mods: Vec<Module> = a.class_reps()?.into_iter().filter(|&r| r != cls).map(|r| proj(a, r)).collect();
    let complement = if mods.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &mods) };
    let mut all = mods;
    if !summand.is_zero() {
        all.push(summand.clone());
    }
    let module = if all.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &all) };
    Ok(BbTilting { check, module, complement, summand })
}
