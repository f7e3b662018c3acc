//! Randomised and corpus-wide checks of structural invariants.

mod common;

use common::violates_le;
use domdim::algebra::Algebra;
use domdim::corpus::{self, sample_modules, tilting_pairs, Entry};
use domdim::domdim::*;
use domdim::exactla::{solve_space, Field, Matrix, Rational, Scalar, Subspace};
use domdim::homalg::{approx_sequence, ext_dim, ext_dim_inj, proj_dim, right_approx};
use domdim::modrep::{
    compose, decompose, direct_sum, dual, hom, iso, nakayama, nakayama_inv, proj,
    projective_cover, syzygy, top, Module,
};
use proptest::prelude::*;
use std::sync::{Arc, OnceLock};

struct Pool {
    entries: Vec<Entry>,
    modules: Vec<Vec<Module>>,
}

fn pool() -> &'static Pool {
    static POOL: OnceLock<Pool> = OnceLock::new();
    POOL.get_or_init(|| {
        let entries = corpus::small().unwrap();
        let modules = entries.iter().map(|e| sample_modules(&e.algebra).unwrap()).collect();
        Pool { entries, modules }
    })
}

fn pick(k: usize, i: usize) -> &'static Module {
    let p = pool();
    let ms = &p.modules[k % p.entries.len()];
    &ms[i % ms.len()]
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(101).unwrap()), Just(Field::prime(2).unwrap())]
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (field_strategy(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| {
        proptest::collection::vec(-4i64..5, r * c).prop_map(move |xs| {
            Matrix::from_vector(f, r, c, xs.into_iter().map(|x| f.int(x)).collect())
        })
    })
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| Rational::new(n, d))
}

fn same_subspace(a: &Subspace, b: &Subspace) -> bool {
    a.dim() == b.dim() && a.basis.iter().all(|v| b.contains(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix_strategy()) {
        let r = m.rref();
        let rr = r.matrix.rref();
        prop_assert_eq!(&rr.matrix, &r.matrix);
        prop_assert_eq!(rr.pivots, r.pivots);
    }

    #[test]
    fn rank_plus_nullity(m in matrix_strategy()) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solutions_satisfy_the_system(m in matrix_strategy(), seed in proptest::collection::vec(-3i64..4, 6)) {
        let f = m.field();
        let x0 = Matrix::from_vector(f, m.cols(), 1, (0..m.cols()).map(|i| f.int(seed[i % seed.len()])).collect());
        let b = m.mul(&x0);
        let sol = solve_space(&m, &b).unwrap();
        let p = sol.particular.expect("consistent by construction");
        prop_assert_eq!(m.mul(&p), b);
        for k in &sol.kernel_basis {
            prop_assert!(m.mul(k).is_zero());
        }
    }

    #[test]
    fn inverse_is_two_sided(m in matrix_strategy()) {
        if let Some(inv) = m.inverse() {
            prop_assert!(m.mul(&inv).is_identity());
            prop_assert!(inv.mul(&m).is_identity());
        } else {
            prop_assert!(!m.is_square() || m.rank() < m.rows());
        }
    }

    #[test]
    fn rational_field_axioms(a in rational_strategy(), b in rational_strategy(), c in rational_strategy()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b), a.clone());
        }
        prop_assert_eq!(Rational::parse(&a.to_string()), Some(a.clone()));
        prop_assert_eq!(a.denom().sign(), num_bigint::Sign::Plus);
    }

    #[test]
    fn hom_is_dual_to_hom_over_the_opposite(k in 0usize..64, i in 0usize..64, j in 0usize..64) {
        let (m, n) = (pick(k, i), pick(k, j));
        prop_assert_eq!(hom(m, n).unwrap().dim(), hom(&dual(n), &dual(m)).unwrap().dim());
    }

    #[test]
    fn compose_applies_first_map_first(k in 0usize..64, i in 0usize..64, j in 0usize..64, l in 0usize..64) {
        let (x, y, z) = (pick(k, i), pick(k, j), pick(k, l));
        let (h1, h2) = (hom(x, y).unwrap(), hom(y, z).unwrap());
        if h1.dim() > 0 && h2.dim() > 0 && x.dim() > 0 {
            let f = h1.morphism(i % h1.dim());
            let g = h2.morphism(j % h2.dim());
            let v: Vec<Scalar> = (0..x.dim()).map(|t| x.field().int((t as i64 * 7 + 3) % 5)).collect();
            prop_assert_eq!(compose(&f, &g).unwrap().apply(&v), g.apply(&f.apply(&v)));
        }
    }

    #[test]
    fn decomposition_round_trips(k in 0usize..64, i in 0usize..64, j in 0usize..64) {
        let m = direct_sum(&[pick(k, i).clone(), pick(k, j).clone()]).unwrap().module;
        let d = decompose(&m).unwrap();
        let mut parts = Vec::new();
        for s in &d.summands {
            for _ in 0..s.multiplicity {
                parts.push(s.module.clone());
            }
        }
        prop_assert_eq!(parts.iter().map(Module::dim).sum::<usize>(), m.dim());
        prop_assert!(iso(&direct_sum(&parts).unwrap().module, &m).unwrap());
        prop_assert!(d.witness().is_invertible());
    }

    #[test]
    fn projective_cover_is_minimal(k in 0usize..64, i in 0usize..64) {
        let m = pick(k, i);
        let cover = projective_cover(m).unwrap();
        prop_assert!(cover.is_surjective());
        prop_assert_eq!(top(&cover.source).unwrap().0.dim(), top(m).unwrap().0.dim());
    }

    // 0 → Ω Y → P → Y → 0 shifts Ext, computed through injective coresolutions of N.
    #[test]
    fn ext_dimension_shift(k in 0usize..64, i in 0usize..64, j in 0usize..64, d in 1usize..3) {
        let (y, n) = (pick(k, i), pick(k, j));
        let om = syzygy(y, 1).unwrap();
        prop_assert_eq!(ext_dim_inj(y, n, d + 1).unwrap(), ext_dim_inj(&om, n, d).unwrap());
        prop_assert_eq!(ext_dim(y, n, d + 1).unwrap(), ext_dim_inj(y, n, d + 1).unwrap());
    }

    // Hom(Y, −) applied to an approximation sequence is exact.
    #[test]
    fn approximation_sequences_are_hom_exact(k in 0usize..64, i in 0usize..64, j in 0usize..64) {
        let y = direct_sum(&[pick(k, i).clone(), proj(&pool().entries[k % pool().entries.len()].algebra, 0)]).unwrap().module;
        let x = pick(k, j);
        if y.dim() + x.dim() > 18 {
            return Ok(());
        }
        let seq = match approx_sequence(&y, x, 4) {
            Ok(s) => s,
            Err(domdim::Error::NotGenerated) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let hom_rank = |f: &domdim::modrep::Morphism| {
            let h = hom(&y, &f.source).unwrap();
            let imgs: Vec<Matrix> = h.basis().iter().map(|g| f.matrix.mul(g)).collect();
            hom(&y, &f.target).unwrap().span_of(&imgs).dim()
        };
        prop_assert_eq!(hom_rank(&seq.maps[0]), hom(&y, x).unwrap().dim());
        for t in 1..seq.maps.len() {
            let h = hom(&y, &seq.terms[t - 1]).unwrap().dim();
            prop_assert_eq!(h - hom_rank(&seq.maps[t - 1]), hom_rank(&seq.maps[t]));
        }
        let f = right_approx(&y, x).unwrap();
        for s in decompose(&f.source).unwrap().summands {
            for inc in &s.inclusions {
                prop_assert!(!f.matrix.mul(&inc.matrix).is_zero());
            }
        }
    }
}

#[test]
fn nakayama_is_an_equivalence_on_projectives() {
    for e in corpus::full().unwrap() {
        let a = &e.algebra;
        for r in a.class_reps().unwrap() {
            let p = proj(a, r);
            let nu = nakayama(&p).unwrap();
            assert!(nu.is_injective().unwrap(), "{}", e.name);
            assert!(iso(&nakayama_inv(&nu).unwrap(), &p).unwrap(), "{}", e.name);
        }
    }
}

fn transpose(c: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..c.len()).map(|j| c.iter().map(|r| r[j]).collect()).collect()
}

#[test]
fn cartan_sums_and_opposites() {
    for e in corpus::full().unwrap() {
        let a = &e.algebra;
        let c = a.cartan_matrix();
        assert_eq!(c.iter().flatten().sum::<usize>(), a.dim(), "{}", e.name);
        assert_eq!(a.opposite().cartan_matrix(), transpose(&c), "{}", e.name);
    }
}

#[test]
fn trace_radical_matches_structural_radical() {
    for e in corpus::small().unwrap() {
        let a = &e.algebra;
        let Some(given) = a.supplied_radical() else { continue };
        let bare = Algebra::new(
            a.field(),
            a.labels().to_vec(),
            a.constants().to_vec(),
            a.unit().clone(),
            a.idempotents().to_vec(),
            None,
        )
        .unwrap();
        let structural = Subspace::from_spanning(a.field(), a.dim(), given.to_vec());
        assert!(same_subspace(bare.radical().unwrap(), &structural), "{}", e.name);
        let mut power = structural.clone();
        for _ in 0..a.dim() {
            power = a.product_space(&power, &structural);
        }
        assert_eq!(power.dim(), 0, "{}", e.name);
    }
}

#[test]
fn infinite_only_for_self_injective_algebras() {
    for e in corpus::full().unwrap() {
        let a = &e.algebra;
        let dm = domdim_algebra(a, default_cap(a)).unwrap();
        assert_eq!(dm == DomDimResult::Infinite, is_self_injective(a).unwrap(), "{}", e.name);
    }
}

fn pairs() -> Vec<corpus::TiltingPair> {
    let entries: Vec<Entry> = corpus::full().unwrap().into_iter().filter(|e| e.name != "Lambda_2" && e.name != "Gamma").collect();
    tilting_pairs(&entries, 4).unwrap()
}

#[test]
fn muller_agrees_when_dm_is_at_least_two() {
    let mut algebras: Vec<(String, Arc<Algebra>)> = corpus::full().unwrap().into_iter().map(|e| (e.name, e.algebra)).collect();
    for p in pairs() {
        algebras.push((format!("End({})", p.name), endo_algebra_of(&p.summands).unwrap().algebra));
    }
    let mut checked = 0;
    for (name, a) in algebras {
        let cap = default_cap(&a);
        let dm = domdim_algebra(&a, cap).unwrap();
        if dm.at_least(2) && dm != DomDimResult::Infinite {
            assert_eq!(muller_domdim(&a, cap).unwrap(), dm, "{name}");
            checked += 1;
        }
    }
    assert!(checked >= 5);
}

#[test]
fn nu_stable_endomorphisms_survive_tilting() {
    for p in pairs() {
        let a = &p.algebra;
        let b = endo_algebra_of(&p.summands).unwrap();
        let ea = nu_stable_projectives(a).unwrap();
        let eb = nu_stable_projectives(&b.algebra).unwrap();
        let dim_end = |m: &Module| if m.is_zero() { 0 } else { endo_algebra(m).unwrap().dim() };
        assert_eq!(dim_end(&ea), dim_end(&eb), "{}", p.name);
    }
}

#[test]
fn morita_distance_bound() {
    for p in pairs().into_iter().filter(|p| is_morita(&p.algebra, default_cap(&p.algebra)).unwrap()) {
        let a = &p.algebra;
        let cap = default_cap(a);
        let t = p.module().unwrap();
        let dm_a = domdim_algebra(a, cap).unwrap();
        let b = endo_algebra_of(&p.summands).unwrap();
        let dm_b = domdim_algebra(&b.algebra, default_cap(&b.algebra)).unwrap();
        let pd = proj_dim(&t, cap).unwrap().finite().unwrap();
        assert!(!violates_le(dm_a, dm_b.plus(pd)), "{}", p.name);
    }
}
