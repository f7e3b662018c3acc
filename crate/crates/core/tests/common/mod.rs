#![allow(dead_code)]

use domdim::domdim::DomDimResult;
use domdim::modrep::{decompose_with, iso, DecomposeOptions, Module};
use domdim::Result;

/// Largest value `d` can take: `None` means unbounded.
fn upper(d: DomDimResult) -> Option<usize> {
    d.finite()
}

/// `a ≤ b` is certainly false.
pub fn violates_le(a: DomDimResult, b: DomDimResult) -> bool {
    match upper(b) {
        Some(ub) => a.lower_bound() > ub,
        None => false,
    }
}

/// `a = b` is certainly false.
pub fn violates_eq(a: DomDimResult, b: DomDimResult) -> bool {
    violates_le(a, b) || violates_le(b, a)
}

/// Both finite.
pub fn decided(a: DomDimResult, b: DomDimResult) -> bool {
    a.is_finite() && b.is_finite()
}

/// Indecomposable summands with multiplicities as a list of representatives.
pub fn summand_multiset(m: &Module, opts: DecomposeOptions) -> Result<Vec<(Module, usize)>> {
    Ok(decompose_with(m, opts)?.summands.into_iter().map(|s| (s.module, s.multiplicity)).collect())
}

/// Two decompositions list the same isomorphism classes with the same multiplicities.
pub fn same_multiset(a: &[(Module, usize)], b: &[(Module, usize)]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    for (x, k) in a {
        let mut found = false;
        for (j, (y, l)) in b.iter().enumerate() {
            if !used[j] && k == l && x.dim() == y.dim() && iso(x, y)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}
