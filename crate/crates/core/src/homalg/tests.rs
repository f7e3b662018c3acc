use super::*;
use crate::corpus::{a3_path, a3_radical_square_zero, dual_numbers, kronecker, radical_square_zero_two_loops};
use crate::exactla::Field;
use crate::modrep::{direct_sum, dual_regular, inj, iso, proj, regular, top};

fn simples(a: &Arc<crate::algebra::Algebra>) -> Vec<Module> {
    a.class_reps().unwrap().into_iter().map(|r| top(&proj(a, r)).unwrap().0).collect()
}

fn total_ext(a: &Arc<crate::algebra::Algebra>, i: usize) -> usize {
    let s = simples(a);
    s.iter().flat_map(|m| s.iter().map(move |n| ext_dim(m, n, i).unwrap())).sum()
}

#[test]
fn ext1_between_simples_counts_arrows() {
    let q = Field::Rational;
    assert_eq!(total_ext(&a3_path(q).unwrap(), 1), 2);
    assert_eq!(total_ext(&kronecker(q).unwrap(), 1), 2);
    assert_eq!(total_ext(&a3_radical_square_zero(q).unwrap(), 1), 2);
    assert_eq!(total_ext(&radical_square_zero_two_loops(q).unwrap(), 1), 2);
}

#[test]
fn hereditary_algebras_have_no_ext2() {
    let q = Field::Rational;
    for a in [a3_path(q).unwrap(), kronecker(q).unwrap()] {
        assert_eq!(total_ext(&a, 2), 0);
        for s in simples(&a) {
            assert!(proj_dim(&s, 5).unwrap().finite().unwrap() <= 1);
        }
    }
}

// Over a radical-square-zero algebra Ext^n between simples counts paths of length n.
#[test]
fn radical_square_zero_ext_counts_paths() {
    let q = Field::Rational;
    let a = radical_square_zero_two_loops(q).unwrap();
    let s = &simples(&a)[0];
    for n in 0..=4 {
        assert_eq!(ext_dim(s, s, n).unwrap(), 1 << n, "degree {n}");
        assert_eq!(ext_dim_inj(s, s, n).unwrap(), 1 << n);
    }
    let b = a3_radical_square_zero(q).unwrap();
    assert_eq!(total_ext(&b, 2), 1);
    assert_eq!(total_ext(&b, 3), 0);
    let pds: Vec<_> = simples(&b).iter().map(|s| proj_dim(s, 6).unwrap().finite().unwrap()).collect();
    assert_eq!(pds.iter().max(), Some(&2));
}

#[test]
fn dual_numbers_resolution_is_periodic() {
    let a = dual_numbers(Field::Rational).unwrap();
    let s = &simples(&a)[0];
    let r = min_proj_resolution(s, 5).unwrap();
    assert_eq!(r.term_dims(), vec![2; 6]);
    assert!(!r.complete);
    assert_eq!(proj_dim(s, 7).unwrap(), DomDimResult::AtLeast(7));
    assert_eq!(inj_dim(s, 3).unwrap(), DomDimResult::AtLeast(3));
    for i in 1..=4 {
        assert_eq!(ext(s, s, i).unwrap().dim, 1);
    }
}

#[test]
fn resolutions_are_exact_in_dimension() {
    let a = a3_radical_square_zero(Field::Rational).unwrap();
    for m in simples(&a).into_iter().chain([regular(&a), dual_regular(&a)]) {
        let r = min_proj_resolution(&m, 4).unwrap();
        assert!(r.complete);
        let alt: i64 = r.terms.iter().enumerate().map(|(k, t)| if k % 2 == 0 { t.dim() as i64 } else { -(t.dim() as i64) }).sum();
        assert_eq!(alt, m.dim() as i64);
        for k in 1..r.maps.len() {
            assert!(r.maps[k - 1].matrix.mul(&r.maps[k].matrix).is_zero());
        }
        let ir = min_inj_resolution(&m, 4).unwrap();
        assert!(ir.complete);
        assert!(ir.terms.iter().all(|t| t.is_injective().unwrap()));
    }
}

#[test]
fn ext_group_dimension_matches_counting() {
    let a = a3_radical_square_zero(Field::Rational).unwrap();
    let s = simples(&a);
    for m in &s {
        for n in &s {
            for i in 0..3 {
                assert_eq!(ext(m, n, i).unwrap().dim, ext_dim(m, n, i).unwrap());
            }
        }
    }
}

#[test]
fn right_approximation_by_regular_is_projective_cover() {
    let a = a3_path(Field::Rational).unwrap();
    let reg = regular(&a);
    for m in [dual_regular(&a), inj(&a, 0), direct_sum(&simples(&a)).unwrap().module] {
        let f = right_approx(&reg, &m).unwrap();
        assert!(f.is_surjective());
        assert!(iso(&f.source, &projective_cover(&m).unwrap().source).unwrap());
    }
}

// Every map from Y factors through a right add(Y)-approximation.
#[test]
fn approximations_have_the_lifting_property() {
    let a = a3_radical_square_zero(Field::Rational).unwrap();
    let y = direct_sum(&[inj(&a, 0), proj(&a, 2)]).unwrap().module;
    let x = dual_regular(&a);
    let f = right_approx(&y, &x).unwrap();
    let through = hom(&y, &f.source).unwrap();
    let composites: Vec<Matrix> = through.basis().iter().map(|h| f.matrix.mul(h)).collect();
    let target = hom(&y, &x).unwrap();
    assert_eq!(target.span_of(&composites).dim(), target.dim());

    let g = left_approx(&y, &regular(&a)).unwrap();
    let from = hom(&g.target, &y).unwrap();
    let composites: Vec<Matrix> = from.basis().iter().map(|h| h.mul(&g.matrix)).collect();
    let target = hom(&regular(&a), &y).unwrap();
    assert_eq!(target.span_of(&composites).dim(), target.dim());
}

#[test]
fn approximation_sequence_stops_on_request() {
    let a = a3_path(Field::Rational).unwrap();
    let reg = regular(&a);
    let full = approx_sequence(&reg, &dual_regular(&a), 8).unwrap();
    assert!(full.complete && full.exact);
    assert_eq!(full.length(), 2);
    let cat = Arc::new(AddCat::new(&reg).unwrap());
    let one = approx_sequence_until(cat, &reg, &dual_regular(&a), 8, |_| true).unwrap();
    assert_eq!(one.length(), 1);
    assert_eq!(one.multiplicities[0], full.multiplicities[0]);
}

#[test]
fn approximation_requires_generation() {
    let a = a3_path(Field::Rational).unwrap();
    let y = simples(&a).remove(0);
    assert!(matches!(approx_sequence(&y, &regular(&a), 3), Err(Error::NotGenerated)));
}
