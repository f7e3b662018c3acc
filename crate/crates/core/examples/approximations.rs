// Minimal add(Y)-approximations and approximation sequences.

use domdim::corpus::a3_radical_square_zero;
use domdim::exactla::Field;
use domdim::homalg::{approx_sequence, left_approx, right_approx};
use domdim::modrep::{direct_sum, dual_regular, inj, proj, regular};

pub fn run_example() -> domdim::Result<()> {
    let a = a3_radical_square_zero(Field::Rational)?;
    let y = direct_sum(&[inj(&a, 0), proj(&a, 2), proj(&a, 1)])?.module;
    let x = dual_regular(&a);
    let f = right_approx(&y, &x)?;
    println!("right add(Y)-approximation of D(A): source dim {}, surjective {}", f.source.dim(), f.is_surjective());
    let g = left_approx(&y, &regular(&a))?;
    println!("left add(Y)-approximation of A: target dim {}, injective {}", g.target.dim(), g.is_injective());

    let seq = approx_sequence(&regular(&a), &x, 6)?;
    println!(
        "approximating D(A) by projectives: {} terms of dims {:?}, complete {}",
        seq.length(),
        seq.terms.iter().map(|t| t.dim()).collect::<Vec<_>>(),
        seq.complete
    );
    println!("multiplicities per step {:?}", seq.multiplicities);
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
