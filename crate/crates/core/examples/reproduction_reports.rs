// The self-checking reproduction reports, rendered as markdown.

use domdim::exactla::Rational;
use domdim::repro::{repro_linear_quiver, repro_liu_schulz};

pub fn run_example() -> domdim::Result<()> {
    let ls = repro_liu_schulz(&Rational::from_int(2), None)?;
    println!("{}", ls.to_markdown());
    let lq = repro_linear_quiver(4, None)?;
    let failed: Vec<_> = lq.checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
    println!("linear quiver n=4: {} checks, failing {:?}", lq.checks.len(), failed);
    assert!(ls.all_checks_pass() && lq.all_checks_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
