//! Relative split and exact sequences and the subrings they define.

use super::tilting::{block_algebra, BlockAlgebra};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::modrep::{decompose, hom, in_add, regular, stable_hom_proj, compose, HomSpace, Module, Morphism};
use std::sync::Arc;

/// A three-term sequence `X --f--> M0 --g--> Y`.
#[derive(Clone, Debug)]
pub struct Sequence {
    pub f: Morphism,
    pub g: Morphism,
}

impl Sequence {
    pub fn new(f: Morphism, g: Morphism) -> Result<Sequence> {
        compose(&f, &g)?;
        Ok(Sequence { f, g })
    }

    pub fn x(&self) -> &Module {
        &self.f.source
    }

    pub fn m0(&self) -> &Module {
        &self.f.target
    }

    pub fn y(&self) -> &Module {
        &self.g.target
    }

    /// `g ∘ f = 0`, `f` injective, `g` surjective and the dimensions add up.
    pub fn is_short_exact(&self) -> bool {
        self.g.matrix.mul(&self.f.matrix).is_zero()
            && self.f.is_injective()
            && self.g.is_surjective()
            && self.m0().dim() == self.x().dim() + self.y().dim()
    }
}

/// Rank of `h ↦ op(h)` on a Hom basis.
fn rank_of(h: &HomSpace, op: impl Fn(&Matrix) -> Matrix) -> usize {
    if h.dim() == 0 {
        return 0;
    }
    let f = h.source.field();
    let imgs: Vec<_> = h.basis().iter().map(|b| op(b).into_vector()).collect();
    let len = imgs[0].len();
    Subspace::from_spanning(f, len, imgs).dim()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSplitReport {
    pub m0_in_add: bool,
    pub hom_m_g_surjective: bool,
    pub hom_f_m_surjective: bool,
    pub f_is_kernel: bool,
    pub g_is_cokernel: bool,
}

impl DSplitReport {
    pub fn holds(&self) -> bool {
        self.m0_in_add && self.hom_m_g_surjective && self.hom_f_m_surjective && self.f_is_kernel && self.g_is_cokernel
    }
}

/// The `add(M)`-split conditions, tested on the generator `M`.
pub fn is_d_split(m: &Module, seq: &Sequence) -> Result<DSplitReport> {
    if !m.same_algebra(seq.m0()) {
        return Err(Error::AlgebraMismatch);
    }
    let exact = seq.is_short_exact();
    let hm0 = hom(m, seq.m0())?;
    let hy = hom(m, seq.y())?;
    let h0m = hom(seq.m0(), m)?;
    let hx = hom(seq.x(), m)?;
    Ok(DSplitReport {
        m0_in_add: in_add(seq.m0(), m)?.is_some(),
        hom_m_g_surjective: rank_of(&hm0, |h| seq.g.matrix.mul(h)) == hy.dim(),
        hom_f_m_surjective: rank_of(&h0m, |h| h.mul(&seq.f.matrix)) == hx.dim(),
        f_is_kernel: exact,
        g_is_cokernel: exact,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddExactReport {
    pub m0_in_add: bool,
    /// `0 → Hom(X⊕M, X) → Hom(X⊕M, M0) → Hom(X⊕M, Y)` is exact.
    pub covariant: bool,
    /// `0 → Hom(Y, M⊕Y) → Hom(M0, M⊕Y) → Hom(X, M⊕Y)` is exact.
    pub contravariant: bool,
}

impl AddExactReport {
    pub fn holds(&self) -> bool {
        self.m0_in_add && self.covariant && self.contravariant
    }
}

fn covariant_exact(w: &Module, seq: &Sequence) -> Result<bool> {
    let hx = hom(w, seq.x())?;
    let h0 = hom(w, seq.m0())?;
    let inj = rank_of(&hx, |h| seq.f.matrix.mul(h)) == hx.dim();
    let ker = h0.dim() - rank_of(&h0, |h| seq.g.matrix.mul(h));
    Ok(inj && ker == hx.dim())
}

fn contravariant_exact(v: &Module, seq: &Sequence) -> Result<bool> {
    let hy = hom(seq.y(), v)?;
    let h0 = hom(seq.m0(), v)?;
    let inj = rank_of(&hy, |h| h.mul(&seq.g.matrix)) == hy.dim();
    let ker = h0.dim() - rank_of(&h0, |h| h.mul(&seq.f.matrix));
    Ok(inj && ker == hy.dim())
}

/// The `add(M)`-exact conditions with test objects `X ⊕ M` and `M ⊕ Y`.
pub fn is_add_exact(m: &Module, seq: &Sequence) -> Result<AddExactReport> {
    if !m.same_algebra(seq.m0()) {
        return Err(Error::AlgebraMismatch);
    }
    let composite_zero = seq.g.matrix.mul(&seq.f.matrix).is_zero();
    let cov = composite_zero && covariant_exact(seq.x(), seq)? && covariant_exact(m, seq)?;
    let contra = composite_zero && contravariant_exact(m, seq)? && contravariant_exact(seq.y(), seq)?;
    Ok(AddExactReport { m0_in_add: in_add(seq.m0(), m)?.is_some(), covariant: cov, contravariant: contra })
}

/// Indecomposable summands with multiplicity, in decomposition order.
fn summands_of(m: &Module) -> Result<Vec<Module>> {
    let mut out = Vec::new();
    for s in decompose(m)?.summands {
        for _ in 0..s.multiplicity {
            out.push(s.module.clone());
        }
    }
    Ok(out)
}

fn full_hom(a: &Module, b: &Module) -> Result<Vec<Matrix>> {
    Ok(hom(a, b)?.basis().to_vec())
}

/// `{h ∈ basis span : op(h) ∈ target}`.
fn preimage(h: &HomSpace, op: impl Fn(&Matrix) -> Matrix, target: &Subspace) -> Vec<Matrix> {
    let f = h.source.field();
    if h.dim() == 0 {
        return Vec::new();
    }
    let q = target.quotient_matrix();
    let cols: Vec<_> = h.basis().iter().map(|b| q.mul_vec(op(b).as_slice())).collect();
    let m = Matrix::from_cols(f, q.rows(), &cols);
    let ker = if q.rows() == 0 { Subspace::full(f, h.dim()).basis } else { m.kernel() };
    ker.into_iter().map(|c| h.combine(&c)).collect()
}

fn span_mats(f: crate::exactla::Field, len: usize, mats: Vec<Matrix>) -> Subspace {
    Subspace::from_spanning(f, len, mats.into_iter().map(Matrix::into_vector).collect())
}

/// The subrings `R ⊆ End(M ⊕ X)` and `S ⊆ End(M ⊕ Y)`, with the summands of
/// `M` as separate objects followed by `X` resp. `Y`.
#[derive(Clone, Debug)]
pub struct Subrings {
    pub r: BlockAlgebra,
    pub s: BlockAlgebra,
}

pub fn relative_subrings(m: &Module, seq: &Sequence) -> Result<Subrings> {
    let rep = is_add_exact(m, seq)?;
    if !rep.holds() {
        return Err(Error::NotAddExact(format!("{rep:?}")));
    }
    let f = m.field();
    let (x, m0, y) = (seq.x(), seq.m0(), seq.y());
    let ms = summands_of(m)?;
    let k = ms.len();

    // R: objects M_1..M_k, X.
    let mut objs: Vec<Module> = ms.clone();
    objs.push(x.clone());
    let mut blocks = vec![vec![Vec::new(); k + 1]; k + 1];
    for a in 0..k {
        for b in 0..k {
            blocks[a][b] = full_hom(&ms[a], &ms[b])?;
        }
        blocks[a][k] = full_hom(&ms[a], x)?;
        blocks[k][a] = full_hom(m0, &ms[a])?.iter().map(|h3| h3.mul(&seq.f.matrix)).collect();
    }
    let end0 = full_hom(m0, m0)?;
    let through = span_mats(f, m0.dim() * x.dim(), end0.iter().map(|h5| h5.mul(&seq.f.matrix)).collect());
    blocks[k][k] = preimage(&hom(x, x)?, |h4| seq.f.matrix.mul(h4), &through);
    let r = block_algebra(objs, blocks)?;

    // S: objects M_1..M_k, Y.
    let mut objs: Vec<Module> = ms.clone();
    objs.push(y.clone());
    let mut blocks = vec![vec![Vec::new(); k + 1]; k + 1];
    for a in 0..k {
        for b in 0..k {
            blocks[a][b] = full_hom(&ms[a], &ms[b])?;
        }
        blocks[a][k] = full_hom(&ms[a], m0)?.iter().map(|h2| seq.g.matrix.mul(h2)).collect();
        blocks[k][a] = full_hom(y, &ms[a])?;
    }
    let through = span_mats(f, m0.dim() * y.dim(), end0.iter().map(|h5| seq.g.matrix.mul(h5)).collect());
    blocks[k][k] = preimage(&hom(y, y)?, |h4| h4.mul(&seq.g.matrix), &through);
    let s = block_algebra(objs, blocks)?;
    Ok(Subrings { r, s })
}

/// The two algebras of the construction over a self-injective algebra, with
/// the stable Hom dimensions that decide their dominant dimensions.
#[derive(Clone, Debug)]
pub struct TheoremAlgebras {
    /// Objects: summands of `A`, summands of `N`, then `X`.
    pub lambda: BlockAlgebra,
    /// Objects: summands of `A`, summands of `N`, then `Y`.
    pub gamma: BlockAlgebra,
    pub stable_hom_x_n: usize,
    pub stable_hom_n_y: usize,
}

pub fn theorem_lambda_gamma(a: &Arc<Algebra>, seq: &Sequence, n: &Module) -> Result<TheoremAlgebras> {
    let reg = regular(a);
    if !reg.is_injective()? {
        return Err(Error::NotSelfInjective);
    }
    if !seq.is_short_exact() || !seq.m0().is_projective()? {
        return Err(Error::InvalidModule("expected a short exact sequence with projective middle term".into()));
    }
    let ns = summands_of(n)?;
    for z in &ns {
        if z.is_projective()? {
            return Err(Error::ProjectiveSummand);
        }
    }
    let asum = summands_of(&reg)?;
    let build = |last: &Module, x_side: bool| -> Result<(BlockAlgebra, usize)> {
        let mut objs: Vec<Module> = asum.iter().chain(ns.iter()).cloned().collect();
        objs.push(last.clone());
        let k = objs.len();
        let first_n = asum.len();
        let mut stable = 0;
        let mut blocks = vec![vec![Vec::new(); k]; k];
        for r in 0..k {
            for c in 0..k {
                let is_n = |i: usize| i >= first_n && i < k - 1;
                let special = if x_side { r == k - 1 && is_n(c) } else { is_n(r) && c == k - 1 };
                blocks[r][c] = if special {
                    let st = stable_hom_proj(&objs[r], &objs[c])?;
                    stable += st.stable_dim();
                    st.projective_basis()
                } else {
                    full_hom(&objs[r], &objs[c])?
                };
            }
        }
        Ok((block_algebra(objs, blocks)?, stable))
    };
    let (lambda, sx) = build(seq.x(), true)?;
    let (gamma, sy) = build(seq.y(), false)?;
    Ok(TheoremAlgebras { lambda, gamma, stable_hom_x_n: sx, stable_hom_n_y: sy })
}
