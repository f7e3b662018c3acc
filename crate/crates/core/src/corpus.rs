//! A fixed collection of small algebras, modules and tilting pairs used by the
//! property suites, the examples and the command-line smoke tests.

use crate::algebra::Algebra;
use crate::domdim::{canonical_tilting_summands, default_cap, domdim_algebra, endo_algebra_of, relative_subrings};
use crate::error::Result;
use crate::exactla::{Field, Rational};
use crate::modrep::{cosyzygy, direct_sum, inj, proj, radical_of, regular, syzygy, top, Module};
use crate::quiver::{bound_quiver_algebra, linear_quiver_algebra, liu_schulz, Quiver, Relation, Term, DEFAULT_DEGREE_CAP};
use crate::repro::{liu_schulz_module, liu_schulz_sequence};
use std::sync::Arc;

/// A named corpus algebra.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub algebra: Arc<Algebra>,
}

fn zero_relations(field: Field, paths: &[&[&str]]) -> Vec<Relation> {
    paths
        .iter()
        .map(|p| vec![Term { coeff: field.one(), path: p.iter().map(|s| s.to_string()).collect() }])
        .collect()
}

fn quiver_algebra(field: Field, vertices: &[&str], arrows: &[(&str, &str, &str)], zeros: &[&[&str]]) -> Result<Arc<Algebra>> {
    bound_quiver_algebra(field, &Quiver::new(vertices, arrows), &zero_relations(field, zeros), DEFAULT_DEGREE_CAP)
}

/// `k[x]/(x²)`.
pub fn dual_numbers(field: Field) -> Result<Arc<Algebra>> {
    quiver_algebra(field, &["1"], &[("x", "1", "1")], &[&["x", "x"]])
}

/// The path algebra of `1 → 2 → 3`.
pub fn a3_path(field: Field) -> Result<Arc<Algebra>> {
    quiver_algebra(field, &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[])
}

/// `1 → 2 → 3` modulo the path of length two.
pub fn a3_radical_square_zero(field: Field) -> Result<Arc<Algebra>> {
    quiver_algebra(field, &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[&["a", "b"]])
}

/// The two-cycle `1 ⇄ 2` modulo all paths of length two (self-injective Nakayama).
pub fn cyclic_nakayama(field: Field) -> Result<Arc<Algebra>> {
    quiver_algebra(field, &["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b"], &["b", "a"]])
}

/// The Auslander algebra of `k[x]/(x²)`: `1 ⇄ 2` with one zero relation.
pub fn auslander_dual_numbers(field: Field) -> Result<Arc<Algebra>> {
    quiver_algebra(field, &["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b"]])
}

/// `k[x, y]/(x², y², xy)`.
pub fn radical_square_zero_two_loops(field: Field) -> Result<Arc<Algebra>> {
    quiver_algebra(field, &["1"], &[("x", "1", "1"), ("y", "1", "1")], &[&["x", "x"], &["y", "y"], &["x", "y"], &["y", "x"]])
}

/// The Kronecker algebra.
pub fn kronecker(field: Field) -> Result<Arc<Algebra>> {
    quiver_algebra(field, &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[])
}

/// `End(A ⊕ I_0 ⊕ I_j)` over the Liu–Schulz algebra with parameter 2.
pub fn liu_schulz_lambda(j: u32) -> Result<Arc<Algebra>> {
    let q = Rational::from_int(2);
    let a = liu_schulz(&q)?;
    let i0 = liu_schulz_module(&a, &q, 0)?.0;
    let ij = liu_schulz_module(&a, &q, j)?.0;
    Ok(endo_algebra_of(&[regular(&a), i0, ij])?.algebra)
}

/// The subring `S ⊆ End(A ⊕ I_0 ⊕ I_2)` of the sequence `0 → I_3 → A → I_2 → 0`.
pub fn liu_schulz_gamma() -> Result<Arc<Algebra>> {
    let q = Rational::from_int(2);
    let a = liu_schulz(&q)?;
    let i0 = liu_schulz_module(&a, &q, 0)?.0;
    let m = direct_sum(&[regular(&a), i0])?.module;
    Ok(relative_subrings(&m, &liu_schulz_sequence(&a, &q, 2)?)?.s.algebra)
}

/// Small algebras: everything except the three 34-dimensional ones.
pub fn small() -> Result<Vec<Entry>> {
    let q = Field::Rational;
    let gf = Field::prime(101).expect("prime");
    let list: Vec<(&str, Arc<Algebra>)> = vec![
        ("k", Algebra::split_semisimple(q, 1)),
        ("k x k", Algebra::split_semisimple(q, 2)),
        ("k[x]/(x^2)", dual_numbers(q)?),
        ("A3 path algebra", a3_path(q)?),
        ("A3 radical square zero", a3_radical_square_zero(q)?),
        ("cyclic Nakayama 2", cyclic_nakayama(q)?),
        ("Auslander algebra of k[x]/(x^2)", auslander_dual_numbers(q)?),
        ("Auslander algebra of k[x]/(x^2) over GF(101)", auslander_dual_numbers(gf)?),
        ("A3 radical square zero over GF(101)", a3_radical_square_zero(gf)?),
        ("k[x,y]/(x^2,y^2,xy)", radical_square_zero_two_loops(q)?),
        ("Kronecker", kronecker(q)?),
        ("linear quiver n=3", linear_quiver_algebra(3)?),
        ("linear quiver n=4", linear_quiver_algebra(4)?),
        ("Liu-Schulz q=2", liu_schulz(&Rational::from_int(2))?),
        ("Liu-Schulz q=-3", liu_schulz(&Rational::from_int(-3))?),
    ];
    Ok(list.into_iter().map(|(n, a)| Entry { name: n.to_string(), algebra: a }).collect())
}

/// The small algebras followed by `Λ_2`, `Λ_3` and `Γ`.
pub fn full() -> Result<Vec<Entry>> {
    let mut out = small()?;
    out.push(Entry { name: "Lambda_2".into(), algebra: liu_schulz_lambda(2)? });
    out.push(Entry { name: "Lambda_3".into(), algebra: liu_schulz_lambda(3)? });
    out.push(Entry { name: "Gamma".into(), algebra: liu_schulz_gamma()? });
    Ok(out)
}

/// A tilting module given by its indecomposable summands.
#[derive(Clone, Debug)]
pub struct TiltingPair {
    pub name: String,
    pub algebra: Arc<Algebra>,
    pub summands: Vec<Module>,
}

impl TiltingPair {
    pub fn module(&self) -> Result<Module> {
        Ok(direct_sum(&self.summands)?.module)
    }
}

/// `(A, A)` and the canonical tilting modules `T_i`, `1 ≤ i ≤ min(dm A, max_i)`,
/// for every algebra in `entries`.
pub fn tilting_pairs(entries: &[Entry], max_i: usize) -> Result<Vec<TiltingPair>> {
    let mut out = Vec::new();
    for e in entries {
        let a = &e.algebra;
        let reg_parts = crate::modrep::decompose(&regular(a))?.summands.into_iter().map(|s| s.module).collect();
        out.push(TiltingPair { name: format!("{} / A", e.name), algebra: a.clone(), summands: reg_parts });
        let cap = default_cap(a);
        if let Some(d) = domdim_algebra(a, cap)?.finite() {
            for i in 1..=d.min(max_i) {
                out.push(TiltingPair {
                    name: format!("{} / T_{i}", e.name),
                    algebra: a.clone(),
                    summands: canonical_tilting_summands(a, i, cap)?,
                });
            }
        }
    }
    Ok(out)
}

/// Deterministic test modules over `a`: indecomposable projectives and
/// injectives, simples, their first syzygies and cosyzygies, radicals of
/// projectives and a few direct sums.
pub fn sample_modules(a: &Arc<Algebra>) -> Result<Vec<Module>> {
    let mut out = Vec::new();
    for r in a.class_reps()? {
        let p = proj(a, r);
        let i = inj(a, r);
        let s = top(&p)?.0;
        out.push(s.clone());
        out.push(p.clone());
        out.push(i.clone());
        for m in [syzygy(&s, 1)?, cosyzygy(&s, 1)?, radical_of(&p)?.0] {
            if !m.is_zero() {
                out.push(m);
            }
        }
        out.push(direct_sum(&[s, i])?.module);
    }
    Ok(out)
}
