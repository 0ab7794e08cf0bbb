// Full homotopy solve of the bundled 2 x 3 system, replaying its start data.

use detsolve::homotopy::{solve, LambdaChoice, SolveOptions, SolveReport};
use detsolve::scalar::Scalar;
use detsolve::sysfile;
use detsolve::zdp::ZeroDimParam;

const SYSTEM: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/worked_example/system.sys"
));

pub fn run_example() -> Result<(ZeroDimParam, SolveReport), Box<dyn std::error::Error>> {
    let file = sysfile::parse(SYSTEM, None)?;
    let opts = SolveOptions {
        lambda: LambdaChoice::Fixed(vec![Scalar::ZERO, Scalar::ZERO, Scalar::ONE]),
        start: file.start.clone(),
        ..SolveOptions::default()
    };
    let (param, report) = solve(&file.sys, &opts)?;
    println!("chi = {}, rho = {}, precision target {}", report.chi, report.rho.unwrap_or(0), report.precision);
    println!("w  = {}", param.w);
    for (i, v) in param.v.iter().enumerate() {
        println!("x{} = {}", i + 1, v);
    }
    param.verify_against(&file.sys.equations()?)?;
    Ok((param, report))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
