//! Minimal resolutions, Ext groups and minimal approximations.

use crate::domdim::DomDimResult;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::modrep::{
    cokernel, decompose, direct_sum_modules, hom, injective_envelope, kernel, projective_cover, top_end_radical,
    Module, Morphism,
};
use std::sync::Arc;

pub const DEFAULT_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Projective,
    Injective,
}

/// A segment of a minimal projective resolution `… → P_1 → P_0 → M`
/// or of a minimal injective resolution `M → I_0 → I_1 → …`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub direction: Direction,
    pub module: Module,
    /// `P_i` or `I_i`.
    pub terms: Vec<Module>,
    /// Class representatives of the indecomposable summands of each term
    /// (tops for projectives, socles for injectives), with repetition.
    pub classes: Vec<Vec<usize>>,
    /// `Ω^{i+1}(M)` resp. `Ω^{-(i+1)}(M)` after term `i`.
    pub syzygies: Vec<Module>,
    /// Projective: `P_0 → M`, then `P_i → P_{i-1}`. Injective: `M → I_0`, then `I_{i-1} → I_i`.
    pub maps: Vec<Morphism>,
    pub minimal: bool,
    pub length_requested: usize,
    pub length_achieved: usize,
    /// Whether the last syzygy is zero.
    pub complete: bool,
}

impl Resolution {
    pub fn term_dims(&self) -> Vec<usize> {
        self.terms.iter().map(Module::dim).collect()
    }
}

/// Minimal projective resolution with terms `P_0..P_len` (fewer if it stops).
pub fn min_proj_resolution(m: &Module, len: usize) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut classes = Vec::new();
    let mut syzygies = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let mut cur = m.clone();
    let mut prev_incl: Option<Morphism> = None;
    while !cur.is_zero() && terms.len() <= len {
        let cover = projective_cover(&cur)?;
        let (k, incl) = kernel(&cover);
        let map = match &prev_incl {
            None => cover.clone(),
            Some(i) => Morphism::unchecked(&cover.source, &i.target, i.matrix.mul(&cover.matrix)),
        };
        classes.push(cur.top_classes()?);
        terms.push(cover.source.clone());
        maps.push(map);
        syzygies.push(k.clone());
        prev_incl = Some(incl);
        cur = k;
    }
    let complete = cur.is_zero();
    let achieved = terms.len().saturating_sub(1);
    Ok(Resolution {
        direction: Direction::Projective,
        module: m.clone(),
        terms,
        classes,
        syzygies,
        maps,
        minimal: true,
        length_requested: len,
        length_achieved: if complete { achieved } else { len },
        complete,
    })
}

/// Minimal injective resolution with terms `I_0..I_len` (fewer if it stops).
pub fn min_inj_resolution(m: &Module, len: usize) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut classes = Vec::new();
    let mut syzygies = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let mut cur = m.clone();
    let mut prev_proj: Option<Morphism> = None;
    while !cur.is_zero() && terms.len() <= len {
        let env = injective_envelope(&cur)?;
        let (c, proj) = cokernel(&env);
        let map = match &prev_proj {
            None => env.clone(),
            Some(p) => Morphism::unchecked(&p.source, &env.target, env.matrix.mul(&p.matrix)),
        };
        classes.push(cur.socle_classes()?);
        terms.push(env.target.clone());
        maps.push(map);
        syzygies.push(c.clone());
        prev_proj = Some(proj);
        cur = c;
    }
    let complete = cur.is_zero();
    let achieved = terms.len().saturating_sub(1);
    Ok(Resolution {
        direction: Direction::Injective,
        module: m.clone(),
        terms,
        classes,
        syzygies,
        maps,
        minimal: true,
        length_requested: len,
        length_achieved: if complete { achieved } else { len },
        complete,
    })
}

/// Sum of `dim e_r N` over a list of classes: `dim Hom(⊕ A e_r, N)`.
fn slot_total(n: &Module, classes: &[usize]) -> usize {
    classes.iter().map(|&r| n.slot(r).dim()).sum()
}

/// `dim Ext^1(K, N)` from `0 → ΩK → P(K) → K → 0`.
fn ext1_dim_proj(k: &Module, n: &Module) -> Result<(usize, Module)> {
    if k.is_zero() {
        return Ok((0, k.clone()));
    }
    let cover = projective_cover(k)?;
    let (om, _) = kernel(&cover);
    let d = hom(&om, n)?.dim() + hom(k, n)?.dim() - slot_total(n, &k.top_classes()?);
    Ok((d, om))
}

/// `dim Ext^i(M, N)` via syzygies of `M`.
pub fn ext_dim(m: &Module, n: &Module, i: usize) -> Result<usize> {
    if i == 0 {
        return Ok(hom(m, n)?.dim());
    }
    let k = crate::modrep::syzygy(m, i - 1)?;
    Ok(ext1_dim_proj(&k, n)?.0)
}

/// `dim Ext^i(M, N)` via cosyzygies of `N`.
pub fn ext_dim_inj(m: &Module, n: &Module, i: usize) -> Result<usize> {
    if i == 0 {
        return Ok(hom(m, n)?.dim());
    }
    let l = crate::modrep::cosyzygy(n, i - 1)?;
    if l.is_zero() || m.is_zero() {
        return Ok(0);
    }
    let env = injective_envelope(&l)?;
    let (c, _) = cokernel(&env);
    let inj_hom: usize = l.socle_classes()?.iter().map(|&s| m.slot(s).dim()).sum();
    Ok(hom(m, &c)?.dim() + hom(m, &l)?.dim() - inj_hom)
}

/// `Ext^i(M, N)` presented as `Hom(Ω^i M, N)` modulo maps extending to `P_{i-1}`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub degree: usize,
    pub dim: usize,
    /// Maps `Ω^i M → N` whose classes form a basis.
    pub cocycles: Vec<Morphism>,
}

pub fn ext(m: &Module, n: &Module, i: usize) -> Result<ExtGroup> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if i == 0 {
        let h = hom(m, n)?;
        return Ok(ExtGroup { degree: 0, dim: h.dim(), cocycles: h.morphisms() });
    }
    let k = crate::modrep::syzygy(m, i - 1)?;
    if k.is_zero() {
        return Ok(ExtGroup { degree: i, dim: 0, cocycles: Vec::new() });
    }
    let cover = projective_cover(&k)?;
    let (om, incl) = kernel(&cover);
    let h = hom(&om, n)?;
    let ext_from = hom(&cover.source, n)?;
    let restricted: Vec<Matrix> = ext_from.basis().iter().map(|g| g.mul(&incl.matrix)).collect();
    let coboundaries = h.span_of(&restricted);
    let mut cocycles = Vec::new();
    let mut span = coboundaries.clone();
    for (t, b) in h.basis().iter().enumerate() {
        let c = h.coords(b);
        if !span.contains(&c) {
            span = span.sum(&Subspace::from_spanning(span.field, span.len, vec![c]));
            cocycles.push(h.morphism(t));
        }
    }
    Ok(ExtGroup { degree: i, dim: cocycles.len(), cocycles })
}

/// Projective dimension, or `AtLeast(cap)` if `Ω^cap` is still not projective.
pub fn proj_dim(m: &Module, cap: usize) -> Result<DomDimResult> {
    let mut cur = m.clone();
    for k in 0..=cap {
        if cur.is_zero() || cur.is_projective()? {
            return Ok(DomDimResult::Finite(k));
        }
        if k == cap {
            break;
        }
        cur = kernel(&projective_cover(&cur)?).0;
    }
    Ok(DomDimResult::AtLeast(cap))
}

/// Injective dimension, or `AtLeast(cap)`.
pub fn inj_dim(m: &Module, cap: usize) -> Result<DomDimResult> {
    let mut cur = m.clone();
    for k in 0..=cap {
        if cur.is_zero() || cur.is_injective()? {
            return Ok(DomDimResult::Finite(k));
        }
        if k == cap {
            break;
        }
        cur = cokernel(&injective_envelope(&cur)?).0;
    }
    Ok(DomDimResult::AtLeast(cap))
}

/// The indecomposable summands of an approximating module, with the radical
/// of the category they span: `rad[j][l]` is a basis of `rad(Y_j, Y_l)`.
#[derive(Clone, Debug)]
pub struct AddCat {
    pub reps: Vec<Module>,
    rad: Vec<Vec<Vec<Matrix>>>,
}

impl AddCat {
    pub fn new(y: &Module) -> Result<AddCat> {
        let reps: Vec<Module> = decompose(y)?.summands.into_iter().map(|s| s.module).collect();
        AddCat::from_indecomposables(reps)
    }

    /// From pairwise non-isomorphic indecomposable modules.
    pub fn from_indecomposables(reps: Vec<Module>) -> Result<AddCat> {
        let mut rad = Vec::with_capacity(reps.len());
        for (j, yj) in reps.iter().enumerate() {
            let mut row = Vec::with_capacity(reps.len());
            for (l, yl) in reps.iter().enumerate() {
                if j == l {
                    row.push(top_end_radical(yj)?);
                } else {
                    row.push(hom(yj, yl)?.basis().to_vec());
                }
            }
            rad.push(row);
        }
        Ok(AddCat { reps, rad })
    }

    /// Whether indecomposable `Z` is isomorphic to one of the representatives.
    pub fn index_of(&self, z: &Module) -> Result<Option<usize>> {
        for (j, y) in self.reps.iter().enumerate() {
            if y.dim() == z.dim() && hom(y, z)?.basis().iter().any(Matrix::is_invertible) {
                return Ok(Some(j));
            }
        }
        Ok(None)
    }

    /// Minimal right approximation `⊕ Y_j^{a_j} → X`: for each `j`, maps
    /// `Y_j → X` spanning a complement of the radical maps `Σ_l Hom(Y_l, X)∘rad(Y_j, Y_l)`.
    pub fn right_approx(&self, x: &Module) -> Result<Approximation> {
        let homs: Vec<_> = self.reps.iter().map(|y| hom(y, x)).collect::<Result<_>>()?;
        let mut cols: Vec<Matrix> = Vec::new();
        let mut sources = Vec::new();
        let mut mult = vec![0; self.reps.len()];
        for (j, hj) in homs.iter().enumerate() {
            let mut radmaps = Vec::new();
            for (l, hl) in homs.iter().enumerate() {
                for r in &self.rad[j][l] {
                    for g in hl.basis() {
                        radmaps.push(g.mul(r));
                    }
                }
            }
            let mut span = hj.span_of(&radmaps);
            for b in hj.basis() {
                let c = hj.coords(b);
                if !span.contains(&c) {
                    span = span.sum(&Subspace::from_spanning(span.field, span.len, vec![c]));
                    cols.push(b.clone());
                    sources.push(self.reps[j].clone());
                    mult[j] += 1;
                }
            }
        }
        let a = x.algebra();
        let src = if sources.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &sources) };
        let mat = cols.iter().fold(Matrix::zeros(x.field(), x.dim(), 0), |acc, c| acc.hstack(c));
        Ok(Approximation { morphism: Morphism::unchecked(&src, x, mat), multiplicities: mult })
    }

    /// Minimal left approximation `X → ⊕ Y_j^{a_j}`: maps `X → Y_j` spanning
    /// a complement of `Σ_l rad(Y_l, Y_j)∘Hom(X, Y_l)`.
    pub fn left_approx(&self, x: &Module) -> Result<Approximation> {
        let homs: Vec<_> = self.reps.iter().map(|y| hom(x, y)).collect::<Result<_>>()?;
        let mut rows: Vec<Matrix> = Vec::new();
        let mut targets = Vec::new();
        let mut mult = vec![0; self.reps.len()];
        for (j, hj) in homs.iter().enumerate() {
            let mut radmaps = Vec::new();
            for (l, hl) in homs.iter().enumerate() {
                for r in &self.rad[l][j] {
                    for g in hl.basis() {
                        radmaps.push(r.mul(g));
                    }
                }
            }
            let mut span = hj.span_of(&radmaps);
            for b in hj.basis() {
                let c = hj.coords(b);
                if !span.contains(&c) {
                    span = span.sum(&Subspace::from_spanning(span.field, span.len, vec![c]));
                    rows.push(b.clone());
                    targets.push(self.reps[j].clone());
                    mult[j] += 1;
                }
            }
        }
        let a = x.algebra();
        let tgt = if targets.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &targets) };
        let mat = rows.iter().fold(Matrix::zeros(x.field(), 0, x.dim()), |acc, r| acc.vstack(r));
        Ok(Approximation { morphism: Morphism::unchecked(x, &tgt, mat), multiplicities: mult })
    }

    /// Whether a module assembled from representatives with these
    /// multiplicities lies in `add` of the listed representative indices.
    pub fn uses_only(mult: &[usize], allowed: &[bool]) -> bool {
        mult.iter().zip(allowed).all(|(&m, &ok)| m == 0 || ok)
    }
}

/// A minimal approximation together with the multiplicity of each
/// representative in the approximating module.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub morphism: Morphism,
    pub multiplicities: Vec<usize>,
}

pub fn right_approx(y: &Module, x: &Module) -> Result<Morphism> {
    Ok(AddCat::new(y)?.right_approx(x)?.morphism)
}

pub fn left_approx(y: &Module, x: &Module) -> Result<Morphism> {
    Ok(AddCat::new(y)?.left_approx(x)?.morphism)
}

/// `… → Y^{-2} → Y^{-1} → X → 0` with each map onto the previous kernel a
/// minimal right `add(Y)`-approximation.
#[derive(Clone, Debug)]
pub struct ApproxSequence {
    pub target: Module,
    pub approximant: Module,
    pub category: Arc<AddCat>,
    /// `terms[i]` maps onto the `i`-th kernel (`kernel 0 = X`).
    pub terms: Vec<Module>,
    pub multiplicities: Vec<Vec<usize>>,
    /// `maps[0] : terms[0] → X`, `maps[i] : terms[i] → terms[i-1]`.
    pub maps: Vec<Morphism>,
    pub kernels: Vec<Module>,
    /// Whether every map is onto its kernel.
    pub exact: bool,
    /// Whether the sequence reached a zero kernel.
    pub complete: bool,
}

impl ApproxSequence {
    pub fn length(&self) -> usize {
        self.terms.len()
    }
}

pub fn approx_sequence(y: &Module, x: &Module, len: usize) -> Result<ApproxSequence> {
    approx_sequence_in(Arc::new(AddCat::new(y)?), y, x, len)
}

pub fn approx_sequence_in(cat: Arc<AddCat>, y: &Module, x: &Module, len: usize) -> Result<ApproxSequence> {
    approx_sequence_until(cat, y, x, len, |_| false)
}

/// As [`approx_sequence_in`], stopping right after the first term whose
/// multiplicity vector satisfies `stop`.
pub fn approx_sequence_until(
    cat: Arc<AddCat>,
    y: &Module,
    x: &Module,
    len: usize,
    stop: impl Fn(&[usize]) -> bool,
) -> Result<ApproxSequence> {
    let mut terms = Vec::new();
    let mut mults = Vec::new();
    let mut maps: Vec<Morphism> = Vec::new();
    let mut kernels = Vec::new();
    let mut cur = x.clone();
    let mut incl: Option<Matrix> = None;
    let mut exact = true;
    while !cur.is_zero() && terms.len() < len {
        let ap = cat.right_approx(&cur)?;
        if !ap.morphism.is_surjective() {
            if terms.is_empty() {
                return Err(Error::NotGenerated);
            }
            exact = false;
        }
        let (k, kin) = kernel(&ap.morphism);
        let tgt = maps.last().map_or_else(|| x.clone(), |m| m.source.clone());
        let mat = match &incl {
            None => ap.morphism.matrix.clone(),
            Some(i) => i.mul(&ap.morphism.matrix),
        };
        maps.push(Morphism::unchecked(&ap.morphism.source, &tgt, mat));
        terms.push(ap.morphism.source.clone());
        let halt = stop(&ap.multiplicities);
        mults.push(ap.multiplicities);
        kernels.push(k.clone());
        incl = Some(kin.matrix);
        cur = k;
        if !exact || halt {
            break;
        }
    }
    Ok(ApproxSequence {
        target: x.clone(),
        approximant: y.clone(),
        category: cat,
        terms,
        multiplicities: mults,
        maps,
        kernels,
        exact,
        complete: cur.is_zero(),
    })
}

#[cfg(test)]
mod tests;
