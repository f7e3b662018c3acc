// Endomorphism algebras of sums of Liu–Schulz modules as block matrix algebras.

use domdim::domdim::{domdim_algebra, endo_algebra_of, is_morita, muller_details};
use domdim::exactla::Rational;
use domdim::modrep::regular;
use domdim::quiver::liu_schulz;
use domdim::repro::liu_schulz_module;

pub fn run_example() -> domdim::Result<()> {
    let q = Rational::from_int(2);
    let a = liu_schulz(&q)?;
    let i = |j| liu_schulz_module(&a, &q, j).map(|p| p.0);
    for j in [2, 3] {
        let b = endo_algebra_of(&[regular(&a), i(0)?, i(j)?])?;
        let cap = 2 * b.dim();
        let (corner_dm, data) = muller_details(&b.algebra, cap)?;
        println!(
            "End(A ⊕ I_0 ⊕ I_{j}): dim {}, blocks {:?}, Cartan {:?}",
            b.dim(),
            b.block_dims(),
            b.algebra.cartan_matrix()
        );
        println!(
            "  dm {} (corner of dim {}: {}), Morita {}",
            domdim_algebra(&b.algebra, cap)?,
            data.corner.dim(),
            corner_dm,
            is_morita(&b.algebra, cap)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
