// The tilting module obtained by replacing a simple projective with its τ⁻¹-translate.

use domdim::corpus::a3_path;
use domdim::domdim::{bb_tilting, domdim_algebra, endo_algebra, is_tilting};
use domdim::exactla::Field;
use domdim::modrep::proj;

pub fn run_example() -> domdim::Result<()> {
    let a = a3_path(Field::Rational)?;
    let r = a.class_reps()?.into_iter().find(|&r| proj(&a, r).dim() == 1).expect("a sink vertex");
    let bb = bb_tilting(&a, &proj(&a, r), 1)?;
    println!("simple projective at class {r}: new summand of dim {}, constructions agree {}", bb.summand.dim(), bb.check);
    println!("tilting {}", is_tilting(&a, &bb.module, 8)?.is_tilting);
    let b = endo_algebra(&bb.module)?;
    println!("End(T): dim {}, Cartan {:?}, dm {}", b.dim(), b.algebra.cartan_matrix(), domdim_algebra(&b.algebra, 8)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
