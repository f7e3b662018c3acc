// Krull–Schmidt decomposition and membership in add(Y) with an explicit split witness.

use domdim::corpus::auslander_dual_numbers;
use domdim::exactla::Field;
use domdim::modrep::{decompose, direct_sum, in_add, inj, power, proj, regular};

pub fn run_example() -> domdim::Result<()> {
    let a = auslander_dual_numbers(Field::Rational)?;
    let m = direct_sum(&[power(&proj(&a, 0), 2), inj(&a, 1), regular(&a)])?.module;
    let d = decompose(&m)?;
    println!("module of dim {} splits as (dim, multiplicity) {:?}", m.dim(), d.signature());
    println!("basic: {}, witness invertible: {}", d.is_basic(), d.witness().is_invertible());

    let y = direct_sum(&[proj(&a, 0), inj(&a, 1)])?.module;
    for (name, x) in [("P0 ⊕ P0", power(&proj(&a, 0), 2)), ("A", regular(&a))] {
        match in_add(&x, &y)? {
            Some(w) => {
                let id = w.retraction.matrix.mul(&w.section.matrix);
                println!("{name} ∈ add(Y) through {} copies, retraction∘section = id: {}", w.copies, id.is_identity());
            }
            None => println!("{name} ∉ add(Y)"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
