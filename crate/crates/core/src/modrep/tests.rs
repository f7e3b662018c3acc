use super::*;
use crate::exactla::Rational;
use crate::quiver::{linear_quiver_algebra, liu_schulz};

fn ls() -> Arc<Algebra> {
    liu_schulz(&Rational::from_int(2)).unwrap()
}

/// `A·(x2 + q^j x1)` inside the regular module.
fn ls_i(a: &Arc<Algebra>, j: u32) -> Module {
    let f = a.field();
    let mut u = zero_vec(f, a.dim());
    u[3] = f.one();
    u[2] = f.int(2i64.pow(j));
    submodule_generated(&regular(a), &[u]).unwrap().0
}

#[test]
fn liu_schulz_hom_table() {
    let a = ls();
    let is: Vec<Module> = (0..6).map(|j| ls_i(&a, j)).collect();
    for (i, m) in is.iter().enumerate() {
        assert_eq!(m.dim(), 4, "dim I_{i}");
        assert_eq!(hom(m, &regular(&a)).unwrap().dim(), 4);
    }
    for i in 0..6 {
        for j in 0..6 {
            let d = hom(&is[j], &is[i]).unwrap().dim();
            let expect = if j == i || j + 2 == i { 3 } else { 2 };
            assert_eq!(d, expect, "Hom(I_{j}, I_{i})");
            assert_eq!(d, hom_direct(&is[j], &is[i]).unwrap().dim());
        }
    }
}

#[test]
fn liu_schulz_syzygy_shift() {
    let a = ls();
    let i0 = ls_i(&a, 0);
    let i1 = ls_i(&a, 1);
    assert!(iso(&syzygy(&i0, 1).unwrap(), &i1).unwrap());
    assert!(!iso(&i0, &i1).unwrap());
    assert_eq!(stable_hom_proj(&i0, &ls_i(&a, 2)).unwrap().projective_dim(), 2);
}

#[test]
fn liu_schulz_symmetric() {
    let a = ls();
    let reg = regular(&a);
    assert!(reg.is_injective().unwrap());
    assert!(iso(&nakayama(&reg).unwrap(), &reg).unwrap());
    assert!(in_add(&ls_i(&a, 0), &reg).unwrap().is_none());
}

#[test]
fn linear_quiver_facts() {
    let a = linear_quiver_algebra(3).unwrap();
    assert_eq!(proj(&a, 0).dim(), 1);
    assert!(iso(&nakayama(&proj(&a, 0)).unwrap(), &proj(&a, 1)).unwrap());
    let d = decompose(&regular(&a)).unwrap();
    assert_eq!(d.multiplicities(), vec![1; 7]);
    let total: usize = (0..7).map(|r| inj(&a, r).dim()).sum();
    assert_eq!(total, a.dim());
    for r in 0..7 {
        let p = proj(&a, r);
        assert!(iso(&nakayama_inv(&nakayama(&p).unwrap()).unwrap(), &p).unwrap());
        assert!(iso(&nakayama(&p).unwrap(), &inj(&a, r)).unwrap());
        assert_eq!(transpose(&p).unwrap().dim(), 0);
    }
}

#[test]
fn decompose_sum_of_regulars() {
    let a = ls();
    let m = power(&regular(&a), 2);
    let d = decompose(&m).unwrap();
    assert_eq!(d.signature(), vec![(8, 2)]);
    assert!(d.witness().is_invertible());
}
