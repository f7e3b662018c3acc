// Subrings cut out by an exact sequence, and the pair of algebras built from it.

use domdim::domdim::{domdim_algebra, is_add_exact, is_d_split, relative_subrings, theorem_lambda_gamma};
use domdim::exactla::Rational;
use domdim::modrep::{direct_sum, regular};
use domdim::quiver::liu_schulz;
use domdim::repro::{liu_schulz_module, liu_schulz_sequence};

pub fn run_example() -> domdim::Result<()> {
    let q = Rational::from_int(2);
    let a = liu_schulz(&q)?;
    let i0 = liu_schulz_module(&a, &q, 0)?.0;
    let seq = liu_schulz_sequence(&a, &q, 2)?;
    println!("0 → {} → {} → {} → 0 exact: {}", seq.x().dim(), seq.m0().dim(), seq.y().dim(), seq.is_short_exact());
    let m = direct_sum(&[regular(&a), i0.clone()])?.module;
    println!("split conditions {:?}", is_d_split(&m, &seq)?);
    println!("exact conditions hold: {}", is_add_exact(&m, &seq)?.holds());

    let sub = relative_subrings(&m, &seq)?;
    println!("R: dim {}  S: dim {}", sub.r.dim(), sub.s.dim());
    let th = theorem_lambda_gamma(&a, &seq, &i0)?;
    for (name, b) in [("Lambda", &th.lambda), ("Gamma", &th.gamma)] {
        println!(
            "{name}: dim {}, canonical Cartan {:?}, dm {}",
            b.dim(),
            b.algebra.canonical_cartan(),
            domdim_algebra(&b.algebra, 2 * b.dim())?
        );
    }
    println!("stable Hom(X, N) = {}, stable Hom(N, Y) = {}", th.stable_hom_x_n, th.stable_hom_n_y);
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
