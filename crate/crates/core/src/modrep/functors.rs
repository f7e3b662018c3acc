//! Duality, the Nakayama functors and the transpose.

use super::{cokernel, direct_sum_modules, hom, proj, regular, dual_regular, Module, Morphism};
use crate::error::Result;
use crate::exactla::{Matrix, Vector};

/// `D M = Hom_k(M, k)` as a module over the opposite algebra.
pub fn dual(m: &Module) -> Module {
    let op = m.algebra().opposite();
    let action = m.actions().iter().map(Matrix::transpose).collect();
    Module::from_parts(&op, m.dim(), action)
}

/// `D f : D N → D M` for `f : M → N`.
pub fn dual_morphism(f: &Morphism) -> Morphism {
    Morphism::unchecked(&dual(&f.target), &dual(&f.source), f.matrix.transpose())
}

/// `ν M = D Hom_A(M, A)`.
pub fn nakayama(m: &Module) -> Result<Module> {
    let a = m.algebra();
    let h = hom(m, &regular(a))?;
    let f = m.field();
    let action = (0..a.dim())
        .map(|b| {
            let cols: Vec<Vector> = h.basis().iter().map(|g| h.coords(&a.right(b).mul(g))).collect();
            Matrix::from_cols(f, h.dim(), &cols).transpose()
        })
        .collect();
    Ok(Module::from_parts(a, h.dim(), action))
}

/// `ν f : ν M → ν N`, the dual of precomposition `Hom(N, A) → Hom(M, A)`.
pub fn nakayama_morphism(f: &Morphism) -> Result<Morphism> {
    let a = f.source.algebra();
    let hm = hom(&f.source, &regular(a))?;
    let hn = hom(&f.target, &regular(a))?;
    let cols: Vec<Vector> = hn.basis().iter().map(|g| hm.coords(&g.mul(&f.matrix))).collect();
    let pre = Matrix::from_cols(f.source.field(), hm.dim(), &cols);
    Ok(Morphism::unchecked(&nakayama(&f.source)?, &nakayama(&f.target)?, pre.transpose()))
}

/// `ν⁻ M = Hom_A(D(A), M)`.
pub fn nakayama_inv(m: &Module) -> Result<Module> {
    let a = m.algebra();
    let h = hom(&dual_regular(a), m)?;
    let f = m.field();
    let action = (0..a.dim())
        .map(|b| {
            let lt = a.left(b).transpose();
            let cols: Vec<Vector> = h.basis().iter().map(|g| h.coords(&g.mul(&lt))).collect();
            Matrix::from_cols(f, h.dim(), &cols)
        })
        .collect();
    Ok(Module::from_parts(a, h.dim(), action))
}

/// `ν⁻ f`, postcomposition with `f`.
pub fn nakayama_inv_morphism(f: &Morphism) -> Result<Morphism> {
    let a = f.source.algebra();
    let da = dual_regular(a);
    let hm = hom(&da, &f.source)?;
    let hn = hom(&da, &f.target)?;
    let cols: Vec<Vector> = hm.basis().iter().map(|g| hn.coords(&f.matrix.mul(g))).collect();
    let post = Matrix::from_cols(f.source.field(), hn.dim(), &cols);
    Ok(Morphism::unchecked(&nakayama_inv(&f.source)?, &nakayama_inv(&f.target)?, post))
}

/// The transpose `Tr M`, a module over the opposite algebra, from the
/// minimal presentation `P1 → P0 → M → 0`.
pub fn transpose(m: &Module) -> Result<Module> {
    let a = m.algebra();
    let op = a.opposite();
    let p = m.presentation()?;
    if p.relations.is_empty() {
        return Ok(Module::zero(&op));
    }
    let f = m.field();
    let src = direct_sum_modules(&op, &p.tops.iter().map(|&r| proj(&op, r)).collect::<Vec<_>>());
    let tgt = direct_sum_modules(&op, &p.rel_tops.iter().map(|&s| proj(&op, s)).collect::<Vec<_>>());
    let mut cols = Vec::with_capacity(src.dim());
    for (i, &r) in p.tops.iter().enumerate() {
        for y in &a.inj_space(r).basis {
            let mut col = Vec::with_capacity(tgt.dim());
            for (j, &s) in p.rel_tops.iter().enumerate() {
                let z = a.multiply(&p.relations[j][i], y);
                col.extend(a.inj_space(s).coords(&z));
            }
            cols.push(col);
        }
    }
    let d = Morphism::unchecked(&src, &tgt, Matrix::from_cols(f, tgt.dim(), &cols));
    Ok(cokernel(&d).0)
}

/// `τ⁻¹ M = Tr D M`.
pub fn tau_inv(m: &Module) -> Result<Module> {
    transpose(&dual(m))
}
