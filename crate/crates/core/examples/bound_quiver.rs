// Path algebras modulo homogeneous relations.

use domdim::exactla::{Field, Rational};
use domdim::quiver::{bound_quiver_algebra, linear_quiver_algebra, liu_schulz, relation, Quiver, DEFAULT_DEGREE_CAP};

pub fn run_example() -> domdim::Result<()> {
    let f = Field::Rational;
    let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")]);
    let a = bound_quiver_algebra(f, &q, &[relation(f, &[(1, &["a", "b"])])], DEFAULT_DEGREE_CAP)?;
    println!("quiver on 3 vertices with a·b = 0: dim {}, basis {:?}", a.dim(), a.labels());
    println!("Cartan {:?}", a.cartan_matrix());

    let ls = liu_schulz(&Rational::from_int(2))?;
    println!("Liu-Schulz algebra, q = 2: dim {}", ls.dim());
    println!("basis {:?}", ls.labels());

    for n in 3..=5 {
        let lq = linear_quiver_algebra(n)?;
        println!("linear quiver n={n}: {} vertices, dim {}", lq.num_idempotents(), lq.dim());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
