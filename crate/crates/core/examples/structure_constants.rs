// An algebra typed in as a multiplication table, validated, then broken on purpose.

use domdim::algebra::Algebra;
use domdim::exactla::Field;

pub fn run_example() -> domdim::Result<()> {
    let f = Field::Rational;
    // k[x]/(x^3) with basis 1, x, x^2.
    let mut table = vec![];
    for i in 0..3 {
        for j in 0..3 {
            if i + j < 3 {
                table.push((i, j, i + j, f.one()));
            }
        }
    }
    let unit = vec![f.one(), f.zero(), f.zero()];
    let labels = vec!["1".to_string(), "x".into(), "x2".into()];
    let a = Algebra::new(f, labels.clone(), table.clone(), unit.clone(), vec![unit.clone()], None)?;
    let report = a.validate();
    println!("k[x]/(x^3): valid {} ({} notes)", report.is_valid(), report.notes.len());
    println!("radical dimension (trace criterion) {}", a.radical()?.dim());
    println!("Cartan matrix {:?}", a.cartan_matrix());

    table.retain(|&(i, j, _, _)| (i, j) != (1, 2));
    table.push((1, 2, 1, f.one()));
    let broken = Algebra::new(f, labels, table, unit.clone(), vec![unit], None)?;
    let report = broken.validate();
    println!("after changing x·x2: valid {}", report.is_valid());
    for failure in report.failures.iter().take(3) {
        println!("  {failure}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
