//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use common::*;
use domdim::corpus::{self, sample_modules, tilting_pairs, Entry, TiltingPair};
use domdim::domdim::*;
use domdim::exactla::Rational;
use domdim::homalg::{ext_dim, ext_dim_inj, min_inj_resolution, min_proj_resolution, proj_dim};
use domdim::modrep::{
    decompose, direct_sum, hom, in_add, in_add_bool, in_add_by_decomposition, iso, nakayama, regular, DecomposeOptions,
    Module,
};
use domdim::quiver::{linear_quiver_algebra, liu_schulz};
use domdim::repro::{liu_schulz_module, liu_schulz_sequence};
use domdim::Result;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use std::time::{Duration, Instant};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok, detail: detail.into() })
}

fn q2() -> Rational {
    Rational::from_int(2)
}

fn ls_modules(n: u32) -> Result<(Arc<domdim::algebra::Algebra>, Vec<Module>)> {
    let a = liu_schulz(&q2())?;
    let is = (0..n).map(|j| Ok(liu_schulz_module(&a, &q2(), j)?.0)).collect::<Result<Vec<_>>>()?;
    Ok((a, is))
}

fn criterion_1() -> Result<Outcome> {
    let (a, is) = ls_modules(6)?;
    let reg = regular(&a);
    let mut bad = Vec::new();
    for i in 0..6 {
        if is[i].dim() != 4 || hom(&is[i], &reg)?.dim() != 4 {
            bad.push(format!("I_{i}: dim or Hom(I_i, A)"));
        }
        for j in 0..6 {
            let h = hom(&is[j], &is[i])?.dim();
            let want_h = if j == i || j + 2 == i { 3 } else { 2 };
            let e = ext_dim(&is[j], &is[i], 1)?;
            let want_e = usize::from(j <= i && i <= j + 3);
            if h != want_h || e != want_e {
                bad.push(format!("(i={i}, j={j}): Hom {h}, Ext {e}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("36 Hom and 36 Ext^1 entries, {} mismatches {bad:?}", bad.len()))
}

fn criterion_2() -> Result<Outcome> {
    let (a, is) = ls_modules(4)?;
    let reg = regular(&a);
    let l3 = endo_algebra_of(&[reg.clone(), is[0].clone(), is[3].clone()])?;
    let l2 = endo_algebra_of(&[reg, is[0].clone(), is[2].clone()])?;
    let gamma = corpus::liu_schulz_gamma()?;
    let c3 = l3.algebra.cartan_matrix();
    let c2 = l2.algebra.cartan_matrix();
    let ok = c3 == vec![vec![8, 4, 4], vec![4, 3, 2], vec![4, 2, 3]]
        && c2 == vec![vec![8, 4, 4], vec![4, 3, 3], vec![4, 2, 3]]
        && l3.dim() == 34
        && gamma.dim() == 34
        && gamma.canonical_cartan() == l3.algebra.canonical_cartan();
    outcome(
        ok,
        format!(
            "C(Lambda_3)={c3:?} C(Lambda_2)={c2:?} dim Lambda_3={} dim Gamma={} C(Gamma)~{:?}",
            l3.dim(),
            gamma.dim(),
            gamma.canonical_cartan()
        ),
    )
}

fn criterion_3() -> Result<Outcome> {
    let l3 = corpus::liu_schulz_lambda(3)?;
    let l2 = corpus::liu_schulz_lambda(2)?;
    let g = corpus::liu_schulz_gamma()?;
    let a = liu_schulz(&q2())?;
    let d3 = domdim_algebra(&l3, default_cap(&l3))?;
    let m3 = muller_domdim(&l3, default_cap(&l3))?;
    let dg = domdim_algebra(&g, default_cap(&g))?;
    let d2 = domdim_algebra(&l2, default_cap(&l2))?;
    let da = domdim_algebra(&a, default_cap(&a))?;
    let ok = d3 == DomDimResult::Finite(2)
        && m3 == DomDimResult::Finite(2)
        && dg == DomDimResult::Finite(1)
        && d2 == DomDimResult::Finite(2)
        && da == DomDimResult::Infinite;
    outcome(ok, format!("dm Lambda_3={d3} (Mueller {m3}), dm Gamma={dg}, dm Lambda_2={d2}, dm A={da}"))
}

fn criterion_4() -> Result<(Outcome, Duration)> {
    let mut bad = Vec::new();
    let mut n4 = Duration::ZERO;
    let mut parts = Vec::new();
    for n in [3usize, 4] {
        let t0 = Instant::now();
        let a = linear_quiver_algebra(n)?;
        let cap = default_cap(&a);
        let dm = domdim_algebra(&a, cap)?;
        if dm != DomDimResult::Finite(n) {
            bad.push(format!("n={n}: dm A = {dm}"));
        }
        let mut got = Vec::new();
        for i in 1..=n {
            let b = endo_algebra_of(&canonical_tilting_summands(&a, i, cap)?)?;
            let d = domdim_algebra(&b.algebra, default_cap(&b.algebra))?;
            let want = if i < n { i.min(n - i) } else { n };
            if d != DomDimResult::Finite(want) {
                bad.push(format!("n={n}, i={i}: {d} (want {want})"));
            }
            got.push(d.to_string());
        }
        parts.push(format!("n={n}: dm A={dm}, dm End T_i=[{}]", got.join(",")));
        if n == 4 {
            n4 = t0.elapsed();
        }
    }
    Ok((Outcome { ok: bad.is_empty(), detail: format!("{}; {bad:?}", parts.join("; ")) }, n4))
}

fn criterion_5() -> Result<Outcome> {
    let (a, is) = ls_modules(4)?;
    let seq = liu_schulz_sequence(&a, &q2(), 2)?;
    let th = theorem_lambda_gamma(&a, &seq, &is[0])?;
    let l3 = corpus::liu_schulz_lambda(3)?;
    let g = corpus::liu_schulz_gamma()?;
    let inv = |x: &Arc<domdim::algebra::Algebra>| -> Result<(usize, Vec<Vec<usize>>, DomDimResult)> {
        Ok((x.dim(), x.canonical_cartan(), domdim_algebra(x, default_cap(x))?))
    };
    let (tl, tg, dl, dg) = (inv(&th.lambda.algebra)?, inv(&th.gamma.algebra)?, inv(&l3)?, inv(&g)?);
    let e = ext_dim(&is[0], &is[3], 1)?;
    let ok = tl == dl && tg == dg && e != 0 && th.stable_hom_n_y != 0 && th.stable_hom_n_y == e;
    outcome(
        ok,
        format!(
            "Lambda: dim {} dm {} (direct dim {} dm {}); Gamma: dim {} dm {} (direct dim {} dm {}); Ext^1(I_0,I_3)={e}, stable Hom(N,Y)={}",
            tl.0, tl.2, dl.0, dl.2, tg.0, tg.2, dg.0, dg.2, th.stable_hom_n_y
        ),
    )
}

struct Pools {
    entries: Vec<Entry>,
    modules: Vec<Vec<Module>>,
}

fn pools() -> Result<Pools> {
    let entries = corpus::small()?;
    let modules = entries.iter().map(|e| sample_modules(&e.algebra)).collect::<Result<Vec<_>>>()?;
    Ok(Pools { entries, modules })
}

/// `(∂_T(A), dm(T_B), ν(E)-dm(T))` over `B = End(T)`.
fn three_gradients(p: &TiltingPair, t: &Module) -> Result<[DomDimResult; 3]> {
    let a = &p.algebra;
    let cap = default_cap(a);
    let g = gradient(a, t, &regular(a), cap)?;
    let b = endo_algebra_of(&p.summands)?;
    let tb = module_over_end_op(&b);
    let dtb = domdim_module(&tb, cap)?;
    let ne = nakayama(&heart(a, t)?.module)?;
    let rel = relative_domdim(t, &ne, cap)?;
    Ok([g, dtb, rel])
}

fn criterion_6(pools: &Pools, pairs: &[TiltingPair]) -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut ok = true;

    // dm(A) = dm(A^op).
    let full = corpus::full()?;
    let mut op_bad = 0;
    for e in &full {
        let cap = default_cap(&e.algebra);
        if domdim_algebra(&e.algebra, cap)? != domdim_algebra(&e.algebra.opposite(), cap)? {
            op_bad += 1;
        }
    }
    ok &= op_bad == 0;
    notes.push(format!("dm=dm^op on {} algebras: {op_bad} failures", full.len()));

    // Ext from projective resolutions against injective coresolutions.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut ext_pairs, mut ext_bad, mut nonzero) = (0, 0, 0);
    while ext_pairs < 220 {
        let k = rng.gen_range(0..pools.entries.len());
        let pool = &pools.modules[k];
        let m = pool.choose(&mut rng).unwrap();
        let n = pool.choose(&mut rng).unwrap();
        for i in 1..=4 {
            let (x, y) = (ext_dim(m, n, i)?, ext_dim_inj(m, n, i)?);
            ext_bad += usize::from(x != y);
            nonzero += usize::from(x != 0);
        }
        ext_pairs += 1;
    }
    ok &= ext_bad == 0;
    notes.push(format!("Ext proj=inj on {ext_pairs} pairs x 4 degrees ({nonzero} nonzero): {ext_bad} failures"));

    // Three-way gradient identity.
    let (mut grad_bad, mut grad_decided) = (0, 0);
    for p in pairs {
        let t = p.module()?;
        let [g, d, r] = three_gradients(p, &t)?;
        if violates_eq(g, d) || violates_eq(g, r) || violates_eq(d, r) {
            grad_bad += 1;
            eprintln!("gradient identity fails on {}: {g} {d} {r}", p.name);
        }
        grad_decided += usize::from(g.is_finite() && d.is_finite() && r.is_finite());
    }
    ok &= grad_bad == 0;
    notes.push(format!("gradient identity on {} tilting pairs ({grad_decided} all finite): {grad_bad} failures", pairs.len()));

    // in_add against the decomposition oracle.
    let (mut add_pairs, mut add_bad, mut positives) = (0, 0, 0);
    while add_pairs < 120 {
        let k = rng.gen_range(0..pools.entries.len());
        let pool = &pools.modules[k];
        let x = pool.choose(&mut rng).unwrap().clone();
        let y1 = pool.choose(&mut rng).unwrap().clone();
        let y = if rng.gen_bool(0.5) {
            direct_sum(&[y1, pool.choose(&mut rng).unwrap().clone()])?.module
        } else {
            y1
        };
        let x = if rng.gen_bool(0.3) { direct_sum(&[x.clone(), x])?.module } else { x };
        let w = in_add(&x, &y)?;
        let oracle = in_add_by_decomposition(&x, &y)?;
        if let Some(w) = &w {
            let id = w.retraction.matrix.mul(&w.section.matrix);
            if id != domdim::exactla::Matrix::identity(x.field(), x.dim()) {
                add_bad += 1;
            }
        }
        add_bad += usize::from(w.is_some() != oracle);
        positives += usize::from(oracle);
        add_pairs += 1;
    }
    ok &= add_bad == 0;
    notes.push(format!("in_add = oracle on {add_pairs} pairs ({positives} members): {add_bad} failures"));

    // Decomposition does not depend on the search order.
    let (mut dec_mods, mut dec_bad) = (0, 0);
    for pool in &pools.modules {
        for (i, m) in pool.iter().enumerate().step_by(2) {
            let m = direct_sum(&[m.clone(), pool[(i + 1) % pool.len()].clone(), m.clone()])?.module;
            let base = summand_multiset(&m, DecomposeOptions::Natural)?;
            for opts in [DecomposeOptions::Reversed, DecomposeOptions::Rotated(1), DecomposeOptions::Rotated(5)] {
                if !same_multiset(&base, &summand_multiset(&m, opts)?)? {
                    dec_bad += 1;
                }
            }
            dec_mods += 1;
        }
    }
    ok &= dec_bad == 0;
    notes.push(format!("decompose order-invariant on {dec_mods} modules x 3 orders: {dec_bad} failures"));
    outcome(ok, notes.join("; "))
}

/// Exact sequences `0 → Y_{-1} → Y_0 → … → Y_m → 0` from resolutions, as term lists.
fn generated_sequences(m: &Module, max_len: usize) -> Result<Vec<Vec<Module>>> {
    let mut out = Vec::new();
    let pr = min_proj_resolution(m, max_len)?;
    for len in 1..=max_len.min(pr.syzygies.len()) {
        // 0 → Ω^len M → P_{len-1} → … → P_0 → M → 0
        let mut ys = vec![pr.syzygies[len - 1].clone()];
        ys.extend((0..len).rev().map(|k| pr.terms[k].clone()));
        ys.push(m.clone());
        out.push(ys);
    }
    let ir = min_inj_resolution(m, max_len)?;
    for len in 1..=max_len.min(ir.syzygies.len()) {
        // 0 → M → I_0 → … → I_{len-1} → Ω^{-len} M → 0
        let mut ys = vec![m.clone()];
        ys.extend(ir.terms[..len].iter().cloned());
        ys.push(ir.syzygies[len - 1].clone());
        out.push(ys);
    }
    Ok(out)
}

fn calculating_bounds(pools: &Pools) -> Result<(usize, usize, usize)> {
    let (mut seqs, mut bad, mut skipped) = (0, 0, 0);
    for (e, pool) in pools.entries.iter().zip(&pools.modules) {
        let a = &e.algebra;
        let cap = default_cap(a).min(6);
        let omega = prinj_generator(a)?;
        let mut injectives = vec![domdim::modrep::dual_regular(a)];
        if !omega.is_zero() {
            injectives.push(omega);
        }
        for m in pool.iter().take(6) {
            for ys in generated_sequences(m, 3)? {
                let alt: i64 = ys.iter().enumerate().map(|(k, y)| if k % 2 == 0 { y.dim() as i64 } else { -(y.dim() as i64) }).sum();
                if alt != 0 || ys.iter().any(Module::is_zero) {
                    skipped += 1;
                    continue;
                }
                for inj in &injectives {
                    // ds[k] = I-dm(Y_{k-1}).
                    let ds = ys.iter().map(|y| relative_domdim(y, inj, cap)).collect::<Result<Vec<_>>>()?;
                    let m_len = ys.len() - 2;
                    let rhs1 = (0..=m_len).map(|j| ds[j + 1].plus(j)).reduce(DomDimResult::min).unwrap();
                    // Second bound shifted by m: I-dm(Y_m) + m ≥ min{I-dm(Y_{k-1}) + k : 0 ≤ k ≤ m}.
                    let rhs2 = (0..=m_len).map(|k| ds[k].plus(k)).reduce(DomDimResult::min).unwrap();
                    let lhs2 = ds[m_len + 1].plus(m_len);
                    if violates_le(rhs1, ds[0]) || violates_le(rhs2, lhs2) {
                        bad += 1;
                        eprintln!("calculating bounds fail on {} ({:?})", e.name, ds);
                    }
                    seqs += 1;
                }
            }
        }
    }
    Ok((seqs, bad, skipped))
}

fn projective_part_and_rest(t: &Module) -> Result<(Vec<Module>, Vec<Module>)> {
    let mut p = Vec::new();
    let mut rest = Vec::new();
    for s in decompose(t)?.summands {
        if s.module.is_projective()? {
            p.push(s.module);
        } else {
            rest.push(s.module);
        }
    }
    Ok((p, rest))
}

fn criterion_7(pools: &Pools, pairs: &[TiltingPair]) -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();

    let (seqs, bad, skipped) = calculating_bounds(pools)?;
    ok &= bad == 0 && seqs >= 100;
    notes.push(format!("relative dm bounds on {seqs} sequences ({skipped} degenerate skipped): {bad} violations"));

    let (mut eq_bad, mut dist_bad, mut dist_checked, mut cmp_bad, mut cmp_checked, mut heart_bad, mut stp_bad) =
        (0, 0, 0, 0, 0, 0, 0);
    for p in pairs {
        let a = &p.algebra;
        let cap = default_cap(a);
        let t = p.module()?;
        let b = endo_algebra_of(&p.summands)?;
        let dm_b = domdim_algebra(&b.algebra, default_cap(&b.algebra))?;
        let dm_a = domdim_algebra(a, cap)?;
        let gr = global_gradient(a, &t, cap)?;
        let g_a = gradient(a, &t, &regular(a), cap)?;
        if violates_le(gr.global, dm_b) || violates_le(g_a, gr.global) {
            eq_bad += 1;
            eprintln!("gradient bounds fail on {}: dm B {dm_b}, global {}, at A {g_a}", p.name, gr.global);
        }

        let pd = proj_dim(&t, cap)?;
        let h = heart(a, &t)?;
        let ne = nakayama(&h.module)?;
        let omega = prinj_generator(a)?;
        if let Some(n) = pd.finite() {
            if decided(dm_a, dm_b) {
                if omega.is_zero() || in_add_bool(&omega, &ne)? {
                    dist_checked += 1;
                    dist_bad += usize::from(violates_le(dm_a, dm_b.plus(n)));
                }
                if ne.is_zero() || in_add_bool(&ne, &omega)? {
                    dist_checked += 1;
                    dist_bad += usize::from(violates_le(dm_b, dm_a.plus(n)));
                }
            }
            // dm(B) = min{∂_T(P), n + ∂_T(P_n)} when P_0..P_{n-1} lie in add(P).
            if p.name.contains("/ T_") && n > 0 {
                let (proj_part, _) = projective_part_and_rest(&t)?;
                let pp = direct_sum(&proj_part)?.module;
                let res = min_proj_resolution(&t, n)?;
                let mut hyp = !proj_part.is_empty();
                for k in 0..n {
                    hyp &= in_add_bool(&res.terms[k], &pp)?;
                }
                if hyp {
                    let rhs = gradient(a, &t, &pp, cap)?.min(gradient(a, &t, &res.terms[n], cap)?.plus(n));
                    cmp_checked += 1;
                    if violates_eq(dm_b, rhs) {
                        cmp_bad += 1;
                        eprintln!("dm(B) formula fails on {}: {dm_b} vs {rhs}", p.name);
                    }
                }
            }
        }
        let eps = nu_stable_projectives(a)?;
        if !eps.is_zero() {
            heart_bad += usize::from(!in_add_bool(&eps, &h.module)?);
        }
    }
    let full = corpus::full()?;
    let mut eps_count = 0;
    for e in &full {
        let eps = nu_stable_projectives(&e.algebra)?;
        if !eps.is_zero() {
            eps_count += 1;
            let stable = iso(&nakayama(&eps)?, &eps)?;
            let end_eps = endo_algebra(&eps)?;
            stp_bad += usize::from(!stable || !is_self_injective(&end_eps.algebra)?);
        }
    }
    ok &= eq_bad == 0 && dist_bad == 0 && cmp_bad == 0 && heart_bad == 0 && stp_bad == 0 && cmp_checked > 0;
    notes.push(format!("dm(B) >= global gradient >= gradient at A on {} pairs: {eq_bad} violations", pairs.len()));
    notes.push(format!("distance bounds, {dist_checked} instances: {dist_bad} violations"));
    notes.push(format!("dm(B) formula on {cmp_checked} canonical tilting modules: {cmp_bad} violations"));
    notes.push(format!("nu-stable projectives in add(heart): {heart_bad} violations"));
    notes.push(format!("nu(eps) = eps with self-injective End on {eps_count} algebras: {stp_bad} violations"));
    outcome(ok, notes.join("; "))
}

fn criterion_8() -> Result<Outcome> {
    let l3 = corpus::liu_schulz_lambda(3)?;
    let g = corpus::liu_schulz_gamma()?;
    let lq = linear_quiver_algebra(3)?;
    let cap = default_cap(&l3);
    let (m3, mg, mq) = (is_morita(&l3, cap)?, is_morita(&g, default_cap(&g))?, is_morita(&lq, default_cap(&lq))?);
    let mut ok = m3 && !mg && !mq;
    let mut parts = vec![format!("Morita: Lambda_3 {m3}, Gamma {mg}, linear quiver n=3 {mq}")];
    for j in 1..=2 {
        let b = endo_algebra_of(&canonical_tilting_summands(&l3, j, cap)?)?;
        let c = default_cap(&b.algebra);
        let (mb, db) = (is_morita(&b.algebra, c)?, domdim_algebra(&b.algebra, c)?);
        ok &= mb && db == DomDimResult::Finite(2);
        parts.push(format!("End(T_{j}) of Lambda_3: dim {}, Morita {mb}, dm {db}", b.dim()));
    }
    outcome(ok, parts.join("; "))
}

fn report(n: usize, title: &str, limit: Option<Duration>, r: Result<Outcome>, t: Duration) -> bool {
    let (ok, detail) = match r {
        Ok(o) => (o.ok, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    let in_time = limit.map_or(true, |l| t <= l);
    let pass = ok && in_time;
    let budget = limit.map_or(String::new(), |l| format!(" / limit {:.0}s", l.as_secs_f64()));
    println!(
        "{} [{n}] {title} ({:.2}s{budget}): {detail}",
        if pass { "PASS" } else { "FAIL" },
        t.as_secs_f64()
    );
    pass
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

fn main() {
    let mut all = true;
    let (r, t) = timed(criterion_1);
    all &= report(1, "Liu-Schulz Hom and Ext tables", Some(Duration::from_secs(10)), r, t);
    let (r, t) = timed(criterion_2);
    all &= report(2, "Cartan matrices", None, r, t);
    let (r, t) = timed(criterion_3);
    all &= report(3, "dominant dimensions", Some(Duration::from_secs(30)), r, t);
    let (r, t) = timed(criterion_4);
    let (r, t4) = match r {
        Ok((o, n4)) => (Ok(o), n4),
        Err(e) => (Err(e), t),
    };
    let _ = t;
    all &= report(4, "linear quiver n=3,4 (time is n=4)", Some(Duration::from_secs(60)), r, t4);
    let (r, t) = timed(criterion_5);
    all &= report(5, "construction over a self-injective algebra", None, r, t);

    let setup = pools().and_then(|p| {
        let mut entries = corpus::full()?;
        entries.retain(|e| e.name != "Lambda_2" && e.name != "Gamma");
        let pairs = tilting_pairs(&entries, 4)?;
        Ok((p, pairs))
    });
    match setup {
        Ok((pools, pairs)) => {
            let (r, t) = timed(|| criterion_6(&pools, &pairs));
            all &= report(6, "property suite", None, r, t);
            let (r, t) = timed(|| criterion_7(&pools, &pairs));
            all &= report(7, "inequality suite", None, r, t);
        }
        Err(e) => {
            all &= report(6, "property suite", None, Err(e.clone()), Duration::ZERO);
            all &= report(7, "inequality suite", None, Err(e), Duration::ZERO);
        }
    }
    let (r, t) = timed(criterion_8);
    all &= report(8, "Morita suite", None, r, t);
    if !all {
        std::process::exit(1);
    }
}
