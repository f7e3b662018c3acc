// Row reduction, kernels and linear systems over ℚ and GF(p).

use domdim::exactla::{solve_space, Field, Matrix, Rational};

pub fn run_example() -> domdim::Result<()> {
    for field in [Field::Rational, Field::prime(7).expect("prime")] {
        let m = Matrix::from_rows(
            field,
            3,
            4,
            vec![
                vec![field.int(1), field.int(2), field.int(3), field.int(4)],
                vec![field.int(2), field.int(4), field.int(6), field.int(8)],
                vec![field.int(1), field.int(0), field.int(-1), field.int(2)],
            ],
        )?;
        let r = m.rref();
        println!("over {field}: rank {} pivots {:?}", r.rank(), r.pivots);
        println!("{:?}", r.matrix);
        let kernel = m.kernel();
        println!("kernel dimension {}", kernel.len());

        let b = Matrix::from_vector(field, 3, 1, vec![field.int(10), field.int(20), field.int(2)]);
        let sol = solve_space(&m, &b)?;
        let x = sol.particular.expect("consistent");
        assert_eq!(m.mul(&x), b);
        println!("particular solution {:?} plus {} kernel directions", x.columns()[0], sol.kernel_basis.len());
    }
    let third = Rational::new(1, 3);
    let sum = third.add(&Rational::new(1, 6));
    println!("1/3 + 1/6 = {sum}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
