// Minimal resolutions and Ext dimensions, computed from both sides.

use domdim::exactla::Rational;
use domdim::homalg::{ext_dim, ext_dim_inj, min_inj_resolution, min_proj_resolution, proj_dim};
use domdim::quiver::liu_schulz;
use domdim::repro::liu_schulz_module;

pub fn run_example() -> domdim::Result<()> {
    let q = Rational::from_int(2);
    let a = liu_schulz(&q)?;
    let is: Vec<_> = (0..4).map(|j| liu_schulz_module(&a, &q, j).map(|p| p.0)).collect::<domdim::Result<_>>()?;
    let r = min_proj_resolution(&is[0], 4)?;
    println!("projective resolution of I_0: term dims {:?}, complete {}", r.term_dims(), r.complete);
    println!("syzygy dims {:?}", r.syzygies.iter().map(|m| m.dim()).collect::<Vec<_>>());
    let ir = min_inj_resolution(&is[0], 4)?;
    println!("injective resolution of I_0: term dims {:?}", ir.term_dims());
    println!("pd(I_0) {}", proj_dim(&is[0], 6)?);

    println!("dim Ext^1(I_j, I_i):");
    for i in 0..4 {
        let row: Vec<usize> = (0..4).map(|j| ext_dim(&is[j], &is[i], 1)).collect::<domdim::Result<_>>()?;
        let check: Vec<usize> = (0..4).map(|j| ext_dim_inj(&is[j], &is[i], 1)).collect::<domdim::Result<_>>()?;
        assert_eq!(row, check);
        println!("  i={i}: {row:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
