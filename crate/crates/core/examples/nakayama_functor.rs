// ν, its inverse, the transpose and τ⁻¹ on a radical-square-zero algebra.

use domdim::corpus::a3_radical_square_zero;
use domdim::exactla::Field;
use domdim::modrep::{inj, iso, nakayama, nakayama_inv, proj, tau_inv, top, transpose};

pub fn run_example() -> domdim::Result<()> {
    let a = a3_radical_square_zero(Field::Rational)?;
    for r in a.class_reps()? {
        let p = proj(&a, r);
        let nu = nakayama(&p)?;
        println!(
            "ν(P{r}) ≅ I{r}: {}   ν⁻ν(P{r}) ≅ P{r}: {}",
            iso(&nu, &inj(&a, r))?,
            iso(&nakayama_inv(&nu)?, &p)?
        );
        let s = top(&p)?.0;
        println!("  S{r}: Tr has dim {}, τ⁻¹ has dim {}", transpose(&s)?.dim(), tau_inv(&s)?.dim());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
