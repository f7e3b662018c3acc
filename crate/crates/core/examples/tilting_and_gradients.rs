// Canonical tilting modules of the linear quiver, their hearts, gradients and endomorphism rings.

use domdim::domdim::{
    canonical_tilting_summands, domdim_algebra, endo_algebra_of, global_gradient, heart, is_tilting,
};
use domdim::modrep::direct_sum;
use domdim::quiver::linear_quiver_algebra;

pub fn run_example() -> domdim::Result<()> {
    let n = 4;
    let a = linear_quiver_algebra(n)?;
    let cap = 2 * a.dim();
    println!("dm A = {}", domdim_algebra(&a, cap)?);
    for i in 1..=n {
        let parts = canonical_tilting_summands(&a, i, cap)?;
        let t = direct_sum(&parts)?.module;
        let rep = is_tilting(&a, &t, cap)?;
        let g = global_gradient(&a, &t, cap)?;
        let b = endo_algebra_of(&parts)?;
        println!(
            "T_{i}: {} summands, tilting {}, pd {}, heart classes {:?}, global gradient {}, dm End(T_{i}) = {}",
            parts.len(),
            rep.is_tilting,
            rep.pd,
            heart(&a, &t)?.classes,
            g.global,
            domdim_algebra(&b.algebra, 2 * b.dim())?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
