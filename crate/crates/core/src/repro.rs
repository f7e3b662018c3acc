//! The two worked families: Liu–Schulz algebras with their modules `I_j`,
//! and the linear quiver with its canonical tilting modules.

use crate::algebra::Algebra;
use crate::domdim::{
    canonical_tilting_summands, default_cap, domdim_algebra, endo_algebra_of, global_gradient, is_morita, is_tilting,
    muller_domdim, relative_subrings, theorem_lambda_gamma, BlockAlgebra, Sequence,
};
use crate::error::{Error, Result};
use crate::exactla::{zero_vec, Matrix, Rational, Subspace};
use crate::homalg::ext_dim;
use crate::modrep::{direct_sum, hom, kernel, regular, submodule_generated, Module, Morphism};
use crate::quiver::{linear_quiver_algebra, liu_schulz};
use crate::report::Report;
use serde_json::{json, Value};
use std::sync::Arc;

/// `u_j = x_2 + q^j x_1` in the Liu–Schulz basis.
pub fn liu_schulz_u(a: &Arc<Algebra>, q: &Rational, j: u32) -> Vec<crate::exactla::Scalar> {
    let f = a.field();
    let mut u = zero_vec(f, a.dim());
    u[3] = f.one();
    let mut qj = Rational::one();
    for _ in 0..j {
        qj = qj.mul(q);
    }
    u[2] = f.rational(&qj).expect("rational field");
    u
}

/// `I_j = A·u_j` with its inclusion into `A`.
pub fn liu_schulz_module(a: &Arc<Algebra>, q: &Rational, j: u32) -> Result<(Module, Morphism)> {
    submodule_generated(&regular(a), &[liu_schulz_u(a, q, j)])
}

/// `0 → I_{j+1} → A → I_j → 0` with `A → I_j` right multiplication by `u_j`
/// (the kernel is `I_{j+1}` up to isomorphism).
pub fn liu_schulz_sequence(a: &Arc<Algebra>, q: &Rational, j: u32) -> Result<Sequence> {
    let (ij, incl) = liu_schulz_module(a, q, j)?;
    let sub = Subspace::column_space(&incl.matrix);
    let reg = regular(a);
    let u = liu_schulz_u(a, q, j);
    let cols: Vec<_> = (0..a.dim()).map(|k| sub.coords(&a.multiply(&a.basis_vector(k), &u))).collect();
    let g = Morphism::new(&reg, &ij, Matrix::from_cols(a.field(), ij.dim(), &cols))?;
    let (_, f) = kernel(&g);
    Sequence::new(f, g)
}

pub const LIU_SCHULZ_FIXTURE: &str = include_str!("../fixtures/liu_schulz.json");
pub const LINEAR_QUIVER_FIXTURE: &str = include_str!("../fixtures/linear_quiver.json");

fn fixture(text: &str) -> Value {
    serde_json::from_str(text).expect("fixture is valid JSON")
}

fn cap_for(a: &Algebra, cap: Option<usize>) -> usize {
    cap.unwrap_or_else(|| default_cap(a))
}

fn block_summary(b: &BlockAlgebra, cap: Option<usize>) -> Result<Value> {
    let a = &b.algebra;
    let c = cap_for(a, cap);
    Ok(json!({
        "dim": a.dim(),
        "cartan": a.canonical_cartan(),
        "dm": domdim_algebra(a, c)?,
        "morita": is_morita(a, c)?,
    }))
}

/// Recomputes the Liu–Schulz numbers for parameter `q` and checks them against
/// the stored expected values. `q` must not be `0` or `±1`.
pub fn repro_liu_schulz(q: &Rational, cap: Option<usize>) -> Result<Report> {
    if q.is_zero() || *q == Rational::one() || *q == Rational::one().neg() {
        return Err(Error::OutOfRange(format!("q = {q} is zero or a root of unity")));
    }
    let exp = fixture(LIU_SCHULZ_FIXTURE);
    let mut rep = Report::new(format!("repro liu-schulz --q {q}"));
    rep.input("fixtures/liu_schulz.json", LIU_SCHULZ_FIXTURE.as_bytes());
    rep.set("q", q.to_string());
    let a = liu_schulz(q)?;
    let range = exp["range"].as_u64().unwrap_or(6) as u32;
    let is: Vec<Module> = (0..range).map(|j| Ok(liu_schulz_module(&a, q, j)?.0)).collect::<Result<_>>()?;
    let reg = regular(&a);

    let mut hom_grid = vec![vec![0usize; is.len()]; is.len()];
    let mut ext_grid = hom_grid.clone();
    for (i, ii) in is.iter().enumerate() {
        for (j, ij) in is.iter().enumerate() {
            hom_grid[i][j] = hom(ij, ii)?.dim();
            ext_grid[i][j] = ext_dim(ij, ii, 1)?;
        }
    }
    let dims: Vec<usize> = is.iter().map(Module::dim).collect();
    let into_a: Vec<usize> = is.iter().map(|m| Ok(hom(m, &reg)?.dim())).collect::<Result<_>>()?;
    rep.set("module_dims", &dims);
    rep.set("hom_into_regular", &into_a);
    rep.set("hom", &hom_grid);
    rep.set("ext1", &ext_grid);
    let md = exp["module_dim"].as_u64().unwrap() as usize;
    let hr = exp["hom_into_regular"].as_u64().unwrap() as usize;
    rep.check("dim I_i", vec![md; is.len()], &dims);
    rep.check("dim Hom(I_i, A)", vec![hr; is.len()], &into_a);
    rep.check("dim Hom(I_j, I_i)", &exp["hom"], &hom_grid);
    rep.check("dim Ext^1(I_j, I_i)", &exp["ext1"], &ext_grid);

    let cap_a = cap_for(&a, cap);
    let dm_a = domdim_algebra(&a, cap_a)?;
    rep.set("algebra", json!({"dim": a.dim(), "dm": dm_a}));
    rep.check("dim A", &exp["algebra"]["dim"], a.dim());
    rep.check("dm A", &exp["algebra"]["dm"], dm_a);

    let l3 = endo_algebra_of(&[reg.clone(), is[0].clone(), is[3].clone()])?;
    let mut s3 = block_summary(&l3, cap)?;
    let dm_muller = muller_domdim(&l3.algebra, cap_for(&l3.algebra, cap))?;
    s3["dm_muller"] = json!(dm_muller);
    for key in ["dim", "cartan", "dm", "dm_muller", "morita"] {
        rep.check(format!("Lambda_3 {key}"), &exp["lambda3"][key], &s3[key]);
    }
    rep.set("lambda3", &s3);

    let l2 = endo_algebra_of(&[reg.clone(), is[0].clone(), is[2].clone()])?;
    let s2 = block_summary(&l2, cap)?;
    for key in ["cartan", "dm"] {
        rep.check(format!("Lambda_2 {key}"), &exp["lambda2"][key], &s2[key]);
    }
    rep.set("lambda2", &s2);

    let seq = liu_schulz_sequence(&a, q, 2)?;
    let m = direct_sum(&[reg.clone(), is[0].clone()])?.module;
    let subrings = relative_subrings(&m, &seq)?;
    let sg = block_summary(&subrings.s, cap)?;
    for key in ["dim", "cartan", "dm", "morita"] {
        rep.check(format!("Gamma {key}"), &exp["gamma"][key], &sg[key]);
    }
    rep.set("gamma", &sg);

    let th = theorem_lambda_gamma(&a, &seq, &is[0])?;
    let tl = block_summary(&th.lambda, cap)?;
    let tg = block_summary(&th.gamma, cap)?;
    let e03 = ext_dim(&is[0], &is[3], 1)?;
    for key in ["dim", "cartan", "dm"] {
        rep.check(format!("construction Lambda {key} = Lambda_3 {key}"), &s3[key], &tl[key]);
        rep.check(format!("construction Gamma {key} = Gamma {key}"), &sg[key], &tg[key]);
    }
    rep.check("Ext^1(I_0, I_3) != 0", &exp["theorem"]["ext1_i0_i3_nonzero"], e03 != 0);
    rep.set(
        "construction",
        json!({
            "lambda": tl,
            "gamma": tg,
            "stable_hom_x_n": th.stable_hom_x_n,
            "stable_hom_n_y": th.stable_hom_n_y,
            "ext1_i0_i3": e03,
        }),
    );
    Ok(rep)
}

/// Dominant dimensions of the linear quiver `1 → 2 → … → n` modulo paths of
/// length two and of the endomorphism rings of its canonical tilting modules.
pub fn repro_linear_quiver(n: usize, cap: Option<usize>) -> Result<Report> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("n = {n}; need n ≥ 3")));
    }
    let exp = fixture(LINEAR_QUIVER_FIXTURE);
    let case = exp["cases"].as_array().and_then(|cs| cs.iter().find(|c| c["n"] == json!(n))).cloned();
    let mut rep = Report::new(format!("repro linear-quiver --n {n}"));
    rep.input("fixtures/linear_quiver.json", LINEAR_QUIVER_FIXTURE.as_bytes());
    rep.set("n", n);
    let a = linear_quiver_algebra(n)?;
    let c = cap_for(&a, cap);
    let dm = domdim_algebra(&a, c)?;
    rep.set("algebra", json!({"dim": a.dim(), "cartan": a.cartan_matrix(), "dm": dm, "dm_muller": muller_domdim(&a, c)?}));
    let mut tiltings = Vec::new();
    let mut dms = Vec::new();
    for i in 1..=n {
        let parts = canonical_tilting_summands(&a, i, c)?;
        let t = direct_sum(&parts)?.module;
        let tr = is_tilting(&a, &t, c)?;
        let b = endo_algebra_of(&parts)?;
        let dmb = domdim_algebra(&b.algebra, cap_for(&b.algebra, cap))?;
        let grad = global_gradient(&a, &t, c)?;
        dms.push(dmb);
        tiltings.push(json!({
            "i": i,
            "summand_dims": parts.iter().map(Module::dim).collect::<Vec<_>>(),
            "is_tilting": tr.is_tilting,
            "pd": tr.pd,
            "endo_dim": b.dim(),
            "endo_cartan": b.algebra.cartan_matrix(),
            "dm_endo": dmb,
            "gradient": grad.global,
        }));
    }
    rep.set("tilting", &tiltings);
    match case {
        Some(case) => {
            rep.check("dm A", &case["dm_algebra"], dm);
            rep.check("dm End(T_i), i = 1..n", &case["dm_endo"], &dms);
        }
        None => rep.set("note", format!("no stored expected values for n = {n}")),
    }
    Ok(rep)
}
