//! Bound quiver algebras with homogeneous relations, and the two named families.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{unit_vec, Field, Matrix, Rational, Scalar};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub const DEFAULT_DEGREE_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// One term `coeff · path` of a relation; paths are arrow labels read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub path: Vec<String>,
}

pub type Relation = Vec<Term>;

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(l, s, t)| Arrow { label: l.to_string(), src: s.to_string(), tgt: t.to_string() })
                .collect(),
        }
    }
}

/// A relation from `(coefficient, path)` pairs with integer coefficients.
pub fn relation(field: Field, terms: &[(i64, &[&str])]) -> Relation {
    terms
        .iter()
        .map(|(c, p)| Term { coeff: field.int(*c), path: p.iter().map(|s| s.to_string()).collect() })
        .collect()
}

type Path = Vec<usize>;

struct Builder {
    field: Field,
    src: Vec<usize>,
    tgt: Vec<usize>,
    num_arrows: usize,
    /// Normal-form paths per degree (degree 0 holds one empty path per vertex,
    /// those are handled separately).
    normal: Vec<Vec<Path>>,
    /// For each degree, reductions of candidate paths to normal-form coordinates.
    reductions: Vec<HashMap<Path, Vec<(usize, Scalar)>>>,
    memo: std::cell::RefCell<HashMap<Path, Vec<(usize, Scalar)>>>,
}

impl Builder {
    fn composable(&self, p: &[usize]) -> bool {
        p.windows(2).all(|w| self.tgt[w[0]] == self.src[w[1]])
    }

    /// Normal form of an arbitrary composable path of length ≥ 1, as sparse
    /// coordinates over `normal[len]`.
    fn nf(&self, p: &[usize]) -> Vec<(usize, Scalar)> {
        let d = p.len();
        if d >= self.normal.len() {
            return Vec::new();
        }
        if let Some(v) = self.memo.borrow().get(p) {
            return v.clone();
        }
        let out = if d == 1 {
            vec![(p[0], self.field.one())]
        } else {
            let prefix = self.nf(&p[..d - 1]);
            let last = p[d - 1];
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (i, c) in prefix {
                let mut cand = self.normal[d - 1][i].clone();
                cand.push(last);
                if let Some(red) = self.reductions[d].get(&cand) {
                    for (k, x) in red {
                        let e = acc.entry(*k).or_insert_with(|| self.field.zero());
                        *e = e.add(&c.mul(x));
                    }
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        self.memo.borrow_mut().insert(p.to_vec(), out.clone());
        out
    }
}

/// The path algebra of `quiver` modulo the ideal generated by `relations`.
///
/// Basis: vertex idempotents, then normal-form paths by degree. The product of
/// basis paths is `b_p · b_q = q p` (q followed by p) when composable, so
/// `A·e_v` is spanned by the paths starting at `v`.
pub fn bound_quiver_algebra(
    field: Field,
    quiver: &Quiver,
    relations: &[Relation],
    degree_cap: usize,
) -> Result<Arc<Algebra>> {
    let vidx: HashMap<&str, usize> =
        quiver.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    if vidx.len() != quiver.vertices.len() {
        return Err(Error::InvalidQuiver("duplicate vertex label".into()));
    }
    let mut aidx: HashMap<&str, usize> = HashMap::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for (i, a) in quiver.arrows.iter().enumerate() {
        if aidx.insert(a.label.as_str(), i).is_some() || vidx.contains_key(a.label.as_str()) {
            return Err(Error::InvalidQuiver(format!("duplicate label {}", a.label)));
        }
        let s = *vidx.get(a.src.as_str()).ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {}", a.src)))?;
        let t = *vidx.get(a.tgt.as_str()).ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {}", a.tgt)))?;
        src.push(s);
        tgt.push(t);
    }
    let mut b = Builder {
        field,
        src,
        tgt,
        num_arrows: quiver.arrows.len(),
        normal: vec![Vec::new()],
        reductions: vec![HashMap::new()],
        memo: Default::default(),
    };

    // Relations, grouped by degree, as sparse vectors over paths.
    let mut rels_by_degree: BTreeMap<usize, Vec<Vec<(Path, Scalar)>>> = BTreeMap::new();
    for (ri, rel) in relations.iter().enumerate() {
        let mut terms = Vec::new();
        let mut len = None;
        let mut ends = None;
        for t in rel {
            if !field.contains(&t.coeff) {
                return Err(Error::InvalidQuiver(format!("relation {ri}: coefficient outside {field}")));
            }
            let p: Path = t
                .path
                .iter()
                .map(|l| aidx.get(l.as_str()).copied().ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow {l}"))))
                .collect::<Result<_>>()?;
            if p.len() < 2 {
                return Err(Error::InvalidQuiver(format!("relation {ri} has a path of length < 2")));
            }
            if !b.composable(&p) {
                return Err(Error::InvalidQuiver(format!("relation {ri}: path {:?} is not composable", t.path)));
            }
            if *len.get_or_insert(p.len()) != p.len() {
                return Err(Error::NonHomogeneousRelation(format!("relation {ri} mixes path lengths")));
            }
            let e = (b.src[p[0]], b.tgt[*p.last().unwrap()]);
            if *ends.get_or_insert(e) != e {
                return Err(Error::NonHomogeneousRelation(format!("relation {ri} mixes endpoints")));
            }
            if !t.coeff.is_zero() {
                terms.push((p, t.coeff.clone()));
            }
        }
        if let Some(l) = len {
            if !terms.is_empty() {
                rels_by_degree.entry(l).or_default().push(terms);
            }
        }
    }

    // Degree 1: all arrows survive (relations live in the square of the arrow ideal).
    let arrows: Vec<Path> = (0..b.num_arrows).map(|a| vec![a]).collect();
    b.reductions.push(arrows.iter().cloned().enumerate().map(|(i, p)| (p, vec![(i, field.one())])).collect());
    b.normal.push(arrows);
    let mut d = 1;
    while !b.normal[d].is_empty() {
        d += 1;
        if d > degree_cap {
            return Err(Error::DegreeCapExceeded(degree_cap));
        }
        // Candidates: normal paths of degree d-1 extended by one arrow.
        let mut cands: Vec<Path> = Vec::new();
        for p in &b.normal[d - 1] {
            for a in 0..b.num_arrows {
                if b.tgt[*p.last().unwrap()] == b.src[a] {
                    let mut c = p.clone();
                    c.push(a);
                    cands.push(c);
                }
            }
        }
        cands.sort();
        let cidx: HashMap<Path, usize> = cands.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        // Reduce a path of degree d to candidate coordinates: nf(prefix)·last.
        let to_cands = |b: &Builder, p: &[usize]| -> Vec<(usize, Scalar)> {
            let mut out = Vec::new();
            for (i, c) in b.nf(&p[..d - 1]) {
                let mut q = b.normal[d - 1][i].clone();
                q.push(p[d - 1]);
                out.push((cidx[&q], c));
            }
            out
        };
        let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
        // a · (q − nf(q)) for candidate paths q of degree d-1 and arrows a.
        if d >= 3 {
            for (q, red) in &b.reductions[d - 1] {
                if red.len() == 1 && red[0].1.is_one() && b.normal[d - 1][red[0].0] == *q {
                    continue;
                }
                for a in 0..b.num_arrows {
                    if b.tgt[a] != b.src[q[0]] {
                        continue;
                    }
                    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                    let mut add = |path: Path, c: Scalar| {
                        for (k, x) in to_cands(&b, &path) {
                            let e = acc.entry(k).or_insert_with(|| field.zero());
                            *e = e.add(&c.mul(&x));
                        }
                    };
                    let mut ap = vec![a];
                    ap.extend_from_slice(q);
                    add(ap, field.one());
                    for (k, c) in red {
                        let mut ap = vec![a];
                        ap.extend_from_slice(&b.normal[d - 1][*k]);
                        add(ap, c.neg());
                    }
                    rows.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
                }
            }
        }
        for rel in rels_by_degree.get(&d).into_iter().flatten() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (p, c) in rel {
                for (k, x) in to_cands(&b, p) {
                    let e = acc.entry(k).or_insert_with(|| field.zero());
                    *e = e.add(&c.mul(&x));
                }
            }
            rows.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        rows.retain(|r| !r.is_empty());
        // Columns in reverse order so that pivots fall on the largest paths.
        let n = cands.len();
        let (normal, reductions) = if rows.is_empty() {
            let red = cands.iter().cloned().enumerate().map(|(i, p)| (p, vec![(i, field.one())])).collect();
            (cands.clone(), red)
        } else {
            let mut m = Matrix::zeros(field, rows.len(), n);
            for (r, row) in rows.iter().enumerate() {
                for (k, c) in row {
                    m.set(r, n - 1 - k, c.clone());
                }
            }
            let rr = m.rref();
            let pivot_cols: Vec<usize> = rr.pivots.iter().map(|&c| n - 1 - c).collect();
            let mut is_pivot = vec![false; n];
            for &c in &pivot_cols {
                is_pivot[c] = true;
            }
            let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
            let pos: HashMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let normal: Vec<Path> = free.iter().map(|&c| cands[c].clone()).collect();
            let mut red: HashMap<Path, Vec<(usize, Scalar)>> = HashMap::new();
            for &c in &free {
                red.insert(cands[c].clone(), vec![(pos[&c], field.one())]);
            }
            for (row, &pc) in pivot_cols.iter().enumerate() {
                // cands[pc] + Σ_free m[row][free] · free = 0
                let mut v = Vec::new();
                for &c in &free {
                    let x = rr.matrix.get(row, n - 1 - c);
                    if !x.is_zero() {
                        v.push((pos[&c], x.neg()));
                    }
                }
                red.insert(cands[pc].clone(), v);
            }
            (normal, red)
        };
        b.reductions.push(reductions);
        b.normal.push(normal);
        b.memo.borrow_mut().clear();
    }
    b.normal.pop();
    b.reductions.pop();
    assemble(field, quiver, &b)
}

fn assemble(field: Field, quiver: &Quiver, b: &Builder) -> Result<Arc<Algebra>> {
    let nv = quiver.vertices.len();
    let mut offsets = vec![nv];
    for d in 1..b.normal.len() {
        offsets.push(offsets[d - 1] + b.normal[d].len());
    }
    let dim = *offsets.last().unwrap();
    let offset = |d: usize| if d == 0 { 0 } else { offsets[d - 1] };
    let mut labels: Vec<String> = quiver.vertices.iter().map(|v| format!("e{v}")).collect();
    let mut paths: Vec<(usize, Path)> = Vec::new();
    for d in 1..b.normal.len() {
        for p in &b.normal[d] {
            labels.push(p.iter().map(|&a| quiver.arrows[a].label.as_str()).collect());
            paths.push((d, p.clone()));
        }
    }
    let mut constants = Vec::new();
    for v in 0..nv {
        constants.push((v, v, v, field.one()));
    }
    for (i, (_, p)) in paths.iter().enumerate() {
        let bi = nv + i;
        // e_v · b_p = b_p when p ends at v; b_p · e_v = b_p when p starts at v.
        constants.push((b.tgt[*p.last().unwrap()], bi, bi, field.one()));
        constants.push((bi, b.src[p[0]], bi, field.one()));
    }
    for (i, (dp, p)) in paths.iter().enumerate() {
        for (j, (dq, q)) in paths.iter().enumerate() {
            if dp + dq >= b.normal.len() || b.tgt[*q.last().unwrap()] != b.src[p[0]] {
                continue;
            }
            let mut qp = q.clone();
            qp.extend_from_slice(p);
            for (k, c) in b.nf(&qp) {
                constants.push((nv + i, nv + j, offset(dp + dq) + k, c));
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for u in unit.iter_mut().take(nv) {
        *u = field.one();
    }
    let idem = (0..nv).map(|v| unit_vec(field, dim, v)).collect();
    let radical = (nv..dim).map(|i| unit_vec(field, dim, i)).collect();
    Algebra::new(field, labels, constants, unit, idem, Some(radical))
}

/// The `2n+1`-vertex algebra with arrows `b_i : i+1 → i` and relations
/// `b_{i+1} b_i = 0` for `1 ≤ i ≤ 2n−1`, `i ≠ n`.
pub fn linear_quiver_algebra(n: usize) -> Result<Arc<Algebra>> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("linear quiver needs n >= 3, got {n}")));
    }
    let f = Field::Rational;
    let q = linear_quiver(n);
    let rels: Vec<Relation> = (1..2 * n)
        .filter(|&i| i != n)
        .map(|i| vec![Term { coeff: f.one(), path: vec![format!("b{}", i + 1), format!("b{i}")] }])
        .collect();
    bound_quiver_algebra(f, &q, &rels, DEFAULT_DEGREE_CAP)
}

pub fn linear_quiver(n: usize) -> Quiver {
    Quiver {
        vertices: (1..=2 * n + 1).map(|i| i.to_string()).collect(),
        arrows: (1..=2 * n)
            .map(|i| Arrow { label: format!("b{i}"), src: (i + 1).to_string(), tgt: i.to_string() })
            .collect(),
    }
}

/// Three loops `x0, x1, x2` at one vertex with `x_i x_i = 0` and
/// `x_{i+1}·x_i + q·x_i·x_{i+1} = 0` (indices mod 3, products in the algebra).
pub fn liu_schulz_presentation(q: &Rational) -> (Quiver, Vec<Relation>) {
    let f = Field::Rational;
    let quiver = Quiver::new(&["1"], &[("x0", "1", "1"), ("x1", "1", "1"), ("x2", "1", "1")]);
    let x = |i: usize| format!("x{}", i % 3);
    let mut rels = Vec::new();
    for i in 0..3 {
        rels.push(vec![Term { coeff: f.one(), path: vec![x(i), x(i)] }]);
        // The product x_{i+1}·x_i is the path x_i then x_{i+1}.
        rels.push(vec![
            Term { coeff: f.one(), path: vec![x(i), x(i + 1)] },
            Term { coeff: Scalar::Q(q.clone()), path: vec![x(i + 1), x(i)] },
        ]);
    }
    (quiver, rels)
}

/// The 8-dimensional local algebra with basis
/// `1, x0, x1, x2, x0x1, x1x2, x2x0, x0x1x2` (products).
pub fn liu_schulz(q: &Rational) -> Result<Arc<Algebra>> {
    if q.is_zero() {
        return Err(Error::OutOfRange("q must be nonzero".into()));
    }
    let (quiver, rels) = liu_schulz_presentation(q);
    let a = bound_quiver_algebra(Field::Rational, &quiver, &rels, DEFAULT_DEGREE_CAP)?;
    if a.dim() != 8 {
        return Err(Error::InvalidAlgebra(format!("expected dimension 8, got {}", a.dim())));
    }
    let gen = |l: &str| {
        let i = a.labels().iter().position(|s| s == l).expect("generator label");
        a.basis_vector(i)
    };
    let (x0, x1, x2) = (gen("x0"), gen("x1"), gen("x2"));
    let x01 = a.multiply(&x0, &x1);
    let x12 = a.multiply(&x1, &x2);
    let x20 = a.multiply(&x2, &x0);
    let x012 = a.multiply(&x01, &x2);
    let basis = vec![a.unit().clone(), x0, x1, x2, x01, x12, x20, x012];
    let labels = ["1", "x0", "x1", "x2", "x0x1", "x1x2", "x2x0", "x0x1x2"].iter().map(|s| s.to_string()).collect();
    a.rebase(&basis, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_the_field() {
        let q = Quiver::new(&["v"], &[]);
        let a = bound_quiver_algebra(Field::Rational, &q, &[], 8).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.validate().is_valid());
    }

    #[test]
    fn loop_without_relations_exceeds_cap() {
        let q = Quiver::new(&["v"], &[("a", "v", "v")]);
        let r = bound_quiver_algebra(Field::Rational, &q, &[], 10);
        assert_eq!(r.unwrap_err(), Error::DegreeCapExceeded(10));
    }

    #[test]
    fn mixed_lengths_rejected() {
        let f = Field::Rational;
        let q = Quiver::new(&["v"], &[("a", "v", "v")]);
        let rel = relation(f, &[(1, &["a", "a"]), (1, &["a", "a", "a"])]);
        assert!(matches!(bound_quiver_algebra(f, &q, &[rel], 10), Err(Error::NonHomogeneousRelation(_))));
    }

    #[test]
    fn linear_quiver_dimensions() {
        for n in 3..=5 {
            let a = linear_quiver_algebra(n).unwrap();
            assert_eq!(a.dim(), 4 * n + 2);
            assert_eq!(a.num_idempotents(), 2 * n + 1);
            assert_eq!(a.radical().unwrap().dim(), a.dim() - (2 * n + 1));
            assert!(a.validate().is_valid());
        }
        let a = linear_quiver_algebra(3).unwrap();
        assert!(a.labels().contains(&"b4b3".to_string()));
    }

    #[test]
    fn liu_schulz_shape() {
        let q = Rational::from_int(2);
        let (quiver, rels) = liu_schulz_presentation(&q);
        let raw = bound_quiver_algebra(Field::Rational, &quiver, &rels, 64).unwrap();
        assert_eq!(raw.dim(), 8);
        let a = liu_schulz(&q).unwrap();
        assert!(a.validate().is_valid());
        assert_eq!(a.radical().unwrap().dim(), 7);
        let b = |i: usize| a.basis_vector(i);
        // x1·x0 = −q·x0x1
        let f = Field::Rational;
        let mut expect = vec![f.zero(); 8];
        expect[4] = f.int(-2);
        assert_eq!(a.multiply(&b(2), &b(1)), expect);
        // cyclic degree-3 words agree
        let w1 = a.multiply(&b(2), &b(6)); // x1·(x2x0)
        let w2 = a.multiply(&b(4), &b(3)); // (x0x1)·x2
        let w3 = a.multiply(&b(3), &a.multiply(&b(1), &b(2))); // x2·x0·x1
        assert_eq!(w1, w2);
        assert_eq!(w2, w3);
        assert_eq!(w2, b(7));
        let trace_rad = Algebra::new(f, a.labels().to_vec(), a.constants().to_vec(), a.unit().clone(), a.idempotents().to_vec(), None)
            .unwrap();
        assert_eq!(trace_rad.radical().unwrap(), a.radical().unwrap());
    }

    #[test]
    fn liu_schulz_generic_in_q() {
        for q in [1, -1, 3] {
            assert_eq!(liu_schulz(&Rational::from_int(q)).unwrap().dim(), 8);
        }
    }
}
