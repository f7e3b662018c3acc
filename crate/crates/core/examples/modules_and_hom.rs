// Projective, injective and simple modules, morphism spaces, kernels and cokernels.

use domdim::corpus::a3_path;
use domdim::exactla::Field;
use domdim::modrep::{cokernel, hom, inj, kernel, proj, regular, socle, top};

pub fn run_example() -> domdim::Result<()> {
    let a = a3_path(Field::Rational)?;
    for r in a.class_reps()? {
        let p = proj(&a, r);
        let i = inj(&a, r);
        let s = top(&p)?.0;
        println!(
            "vertex {r}: dim P {} dim I {} socle of P {:?} top of I {:?}",
            p.dim(),
            i.dim(),
            socle(&p)?.0.dim(),
            i.top_classes()?
        );
        println!("  Hom(P, A) = {}  Hom(S, I) = {}", hom(&p, &regular(&a))?.dim(), hom(&s, &i)?.dim());
    }
    let (p0, i0) = (proj(&a, 0), inj(&a, 2));
    let h = hom(&p0, &i0)?;
    println!("Hom(P0, I2) has dimension {}", h.dim());
    if h.dim() > 0 {
        let f = h.morphism(0);
        let (k, _) = kernel(&f);
        let (c, _) = cokernel(&f);
        println!("first basis map: rank {}, kernel dim {}, cokernel dim {}", f.rank(), k.dim(), c.dim());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
