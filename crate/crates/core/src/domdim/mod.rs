//! Dominant dimensions, projective-injective modules, ν-stable projectives
//! and the Morita test.

mod subrings;
mod tilting;

pub use subrings::{
    is_add_exact, is_d_split, relative_subrings, theorem_lambda_gamma, AddExactReport, DSplitReport, Sequence,
    Subrings, TheoremAlgebras,
};
pub use tilting::{
    bb_tilting, block_algebra, canonical_tilting, canonical_tilting_summands, endo_algebra, endo_algebra_of,
    global_gradient, gradient, heart, hom_module_over_end, is_tilting, module_over_end_op, BbTilting, BlockAlgebra,
    GradientReport, Heart, TiltingFailure, TiltingReport,
};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{axpy, is_zero_vec, zero_vec, Matrix, Scalar, Subspace, Vector};
use crate::homalg::{ext_dim, min_inj_resolution};
use crate::modrep::{cokernel, direct_sum_modules, hom, inj, injective_envelope, nakayama, proj, regular, Module};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// A homological dimension: a value, infinity, or an unfinished search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Repr", into = "Repr")]
pub enum DomDimResult {
    Finite(usize),
    Infinite,
    AtLeast(usize),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Repr {
    Finite { value: usize },
    Infinite,
    AtLeast { cap: usize },
}

impl From<Repr> for DomDimResult {
    fn from(r: Repr) -> Self {
        match r {
            Repr::Finite { value } => DomDimResult::Finite(value),
            Repr::Infinite => DomDimResult::Infinite,
            Repr::AtLeast { cap } => DomDimResult::AtLeast(cap),
        }
    }
}

impl From<DomDimResult> for Repr {
    fn from(d: DomDimResult) -> Self {
        match d {
            DomDimResult::Finite(value) => Repr::Finite { value },
            DomDimResult::Infinite => Repr::Infinite,
            DomDimResult::AtLeast(cap) => Repr::AtLeast { cap },
        }
    }
}

impl DomDimResult {
    pub fn finite(&self) -> Option<usize> {
        match *self {
            DomDimResult::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, DomDimResult::Finite(_))
    }

    /// A lower bound that is certainly valid.
    pub fn lower_bound(&self) -> usize {
        match *self {
            DomDimResult::Finite(n) | DomDimResult::AtLeast(n) => n,
            DomDimResult::Infinite => usize::MAX,
        }
    }

    /// Whether the value is certainly at least `n`.
    pub fn at_least(&self, n: usize) -> bool {
        self.lower_bound() >= n
    }

    /// Minimum, where `AtLeast(c)` is only known to be `≥ c`.
    pub fn min(self, o: DomDimResult) -> DomDimResult {
        use DomDimResult::*;
        match (self, o) {
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), AtLeast(c)) | (AtLeast(c), Finite(a)) if a <= c => Finite(a),
            (Finite(_), AtLeast(c)) | (AtLeast(c), Finite(_)) => AtLeast(c),
            (Finite(a), Infinite) | (Infinite, Finite(a)) => Finite(a),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
            (AtLeast(a), Infinite) | (Infinite, AtLeast(a)) => AtLeast(a),
            (Infinite, Infinite) => Infinite,
        }
    }

    pub fn plus(self, k: usize) -> DomDimResult {
        match self {
            DomDimResult::Finite(n) => DomDimResult::Finite(n + k),
            DomDimResult::AtLeast(n) => DomDimResult::AtLeast(n + k),
            DomDimResult::Infinite => DomDimResult::Infinite,
        }
    }
}

impl fmt::Display for DomDimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDimResult::Finite(n) => write!(f, "{n}"),
            DomDimResult::Infinite => write!(f, "∞"),
            DomDimResult::AtLeast(c) => write!(f, "≥{c}"),
        }
    }
}

/// Default resolution cap for an algebra: twice its dimension.
pub fn default_cap(a: &Algebra) -> usize {
    (2 * a.dim()).max(2)
}

/// For each idempotent, whether `D(e_r A)` is projective (computed on class
/// representatives and copied along classes).
pub fn prinj_flags(a: &Arc<Algebra>) -> Result<&[bool]> {
    a.cache
        .prinj
        .get_or_init(|| {
            let classes = a.classes()?;
            let mut flags = vec![false; classes.len()];
            for r in 0..classes.len() {
                flags[r] = if classes[r] == r { inj(a, r).is_projective()? } else { flags[classes[r]] };
            }
            Ok(flags)
        })
        .as_ref()
        .map(|v| v.as_slice())
        .map_err(Clone::clone)
}

/// Class representatives `r` with `A e_r` injective.
pub fn prinj_projective_classes(a: &Arc<Algebra>) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for r in a.class_reps()? {
        if proj(a, r).is_injective()? {
            out.push(r);
        }
    }
    Ok(out)
}

/// `ω`: the basic direct sum of the projective-injective indecomposables.
pub fn prinj_generator(a: &Arc<Algebra>) -> Result<Module> {
    let flags = prinj_flags(a)?;
    let mods: Vec<Module> = a.class_reps()?.into_iter().filter(|&s| flags[s]).map(|s| inj(a, s)).collect();
    Ok(if mods.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &mods) })
}

/// Counts the leading terms of the minimal injective resolution of `X` whose
/// socle classes all satisfy `allowed`.
fn count_leading(x: &Module, allowed: &[bool], cap: usize) -> Result<DomDimResult> {
    let mut cur = x.clone();
    for n in 0..cap {
        if cur.is_zero() {
            return Ok(DomDimResult::AtLeast(cap));
        }
        let env = injective_envelope(&cur)?;
        if cur.socle_classes()?.iter().any(|&s| !allowed[s]) {
            return Ok(DomDimResult::Finite(n));
        }
        cur = cokernel(&env).0;
    }
    Ok(DomDimResult::AtLeast(cap))
}

/// `I-dm(X)`: how many leading terms of the minimal injective resolution of
/// `X` lie in `add(I)`.
pub fn relative_domdim(x: &Module, i: &Module, cap: usize) -> Result<DomDimResult> {
    if !x.same_algebra(i) {
        return Err(Error::AlgebraMismatch);
    }
    if !i.is_injective()? {
        return Err(Error::NotInjective);
    }
    let a = x.algebra();
    let mut allowed = vec![false; a.num_idempotents()];
    for s in i.socle_classes()? {
        allowed[s] = true;
    }
    count_leading(x, &allowed, cap)
}

/// `dm(X)`, relative to the projective-injective modules.
pub fn domdim_module(x: &Module, cap: usize) -> Result<DomDimResult> {
    count_leading(x, prinj_flags(x.algebra())?, cap)
}

/// `dm(A)`: `Infinite` when `A` is self-injective, otherwise the minimum over
/// the indecomposable projectives.
pub fn domdim_algebra(a: &Arc<Algebra>, cap: usize) -> Result<DomDimResult> {
    if a.dim() == 0 || regular(a).is_injective()? {
        return Ok(DomDimResult::Infinite);
    }
    let mut best = DomDimResult::Infinite;
    for r in a.class_reps()? {
        let p = proj(a, r);
        if p.is_injective()? {
            continue;
        }
        best = best.min(domdim_module(&p, cap)?);
        if best == DomDimResult::Finite(0) {
            break;
        }
    }
    Ok(best)
}

/// Whether `A` is self-injective.
pub fn is_self_injective(a: &Arc<Algebra>) -> Result<bool> {
    regular(a).is_injective()
}

/// Data of the Müller cross-check: the corner `B = eAe` and `V = eA`.
#[derive(Clone, Debug)]
pub struct MullerData {
    pub idempotent: Vec<Scalar>,
    pub corner: Arc<Algebra>,
    pub module: Module,
    /// `A` acts faithfully on `V` and fills `End_B(V)`.
    pub double_centralizer: bool,
    pub exts: Vec<usize>,
}

/// `dm(A)` from `Ext^i_{eAe}(eA, eA)` with `e` the sum of the idempotents
/// whose injective is projective.
pub fn muller_domdim(a: &Arc<Algebra>, cap: usize) -> Result<DomDimResult> {
    Ok(muller_details(a, cap)?.0)
}

pub fn muller_details(a: &Arc<Algebra>, cap: usize) -> Result<(DomDimResult, MullerData)> {
    let f = a.field();
    let flags = prinj_flags(a)?;
    let classes = a.classes()?;
    let mut e = zero_vec(f, a.dim());
    for (r, er) in a.idempotents().iter().enumerate() {
        if flags[classes[r]] {
            axpy(&mut e, &f.one(), er);
        }
    }
    if is_zero_vec(&e) {
        return Err(Error::CornerUnavailable);
    }
    let corner = a.corner(&e)?;
    let v = corner.transport(&regular(a));
    let end = hom(&v, &v)?;
    let dc = faithful_right_action(a, &e)? && end.dim() == a.dim();
    let mut data = MullerData { idempotent: e, corner: corner.algebra.clone(), module: v.clone(), double_centralizer: dc, exts: Vec::new() };
    if !dc {
        return Ok((domdim_algebra(a, cap)?, data));
    }
    for i in 1..=cap.saturating_sub(2) {
        let d = ext_dim(&v, &v, i)?;
        data.exts.push(d);
        if d != 0 {
            return Ok((DomDimResult::Finite(i + 1), data));
        }
    }
    let tail = if is_self_injective(a)? { DomDimResult::Infinite } else { DomDimResult::AtLeast(cap) };
    Ok((tail, data))
}

/// Whether `a ↦ (x ↦ x a)` is injective on `eA`.
fn faithful_right_action(a: &Arc<Algebra>, e: &[Scalar]) -> Result<bool> {
    let ea = Subspace::column_space(&a.left_mult(e));
    let b = ea.basis_matrix();
    let rows: Vec<Vector> = (0..a.dim()).map(|i| a.right(i).mul(&b).into_vector()).collect();
    let m = Matrix::from_rows(a.field(), a.dim(), ea.len * ea.dim(), rows)?;
    Ok(m.rank() == a.dim())
}

/// Class representatives of the ν-stable indecomposable projectives.
pub fn nu_stable_classes(a: &Arc<Algebra>) -> Result<Vec<usize>> {
    let reps = a.class_reps()?;
    let mut stable = Vec::new();
    for &r in &reps {
        let mut seen = vec![r];
        let mut cur = proj(a, r);
        let ok = loop {
            let next = nakayama(&cur)?;
            if !next.is_projective()? {
                break false;
            }
            let s = next.top_classes()?[0];
            if seen.contains(&s) {
                break true;
            }
            seen.push(s);
            cur = proj(a, s);
        };
        if ok {
            stable.push(r);
        }
    }
    Ok(stable)
}

/// `ε_A`: the basic direct sum of the ν-stable indecomposable projectives.
pub fn nu_stable_projectives(a: &Arc<Algebra>) -> Result<Module> {
    let mods: Vec<Module> = nu_stable_classes(a)?.into_iter().map(|r| proj(a, r)).collect();
    Ok(if mods.is_empty() { Module::zero(a) } else { direct_sum_modules(a, &mods) })
}

/// `dm(A) ≥ 2` and every projective-injective is ν-stable.
pub fn is_morita(a: &Arc<Algebra>, cap: usize) -> Result<bool> {
    if !domdim_algebra(a, cap)?.at_least(2) {
        return Ok(false);
    }
    Ok(prinj_projective_classes(a)? == nu_stable_classes(a)?)
}

/// Minimal injective resolution of a module, reported through its socle classes.
pub fn injective_profile(x: &Module, len: usize) -> Result<Vec<Vec<usize>>> {
    Ok(min_inj_resolution(x, len)?.classes)
}
