// Dominant dimensions across the built-in corpus, with the corner-algebra cross-check.

use domdim::corpus;
use domdim::domdim::{default_cap, domdim_algebra, is_morita, muller_domdim, prinj_generator, relative_domdim};
use domdim::modrep::regular;
use domdim::Error;

pub fn run_example() -> domdim::Result<()> {
    println!("{:<48} {:>4} {:>6} {:>7} {:>7}", "algebra", "dim", "dm", "corner", "Morita");
    for e in corpus::small()? {
        let a = &e.algebra;
        let cap = default_cap(a);
        let dm = domdim_algebra(a, cap)?;
        let corner = match muller_domdim(a, cap) {
            Ok(d) => d.to_string(),
            Err(Error::CornerUnavailable) => "-".into(),
            Err(err) => return Err(err),
        };
        println!("{:<48} {:>4} {:>6} {:>7} {:>7}", e.name, a.dim(), dm.to_string(), corner, is_morita(a, cap)?);
    }
    let a = domdim::quiver::linear_quiver_algebra(4)?;
    let omega = prinj_generator(&a)?;
    println!("relative to the projective-injectives, A has dm {}", relative_domdim(&regular(&a), &omega, 20)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
